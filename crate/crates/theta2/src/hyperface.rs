//! Hyperfaces (codimension-one faces), vertebrae, and the total order on
//! outer hyperfaces used by the spine extension lemmas.

use std::fmt;

use crate::delta::{Shuffle, SimplicialOperator};
use crate::error::{Error, Result};
use crate::theta::{CellularOperator, ThetaShape};

/// Symbolic name of a hyperface of a fixed shape `[n;q]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum HyperfaceLabel {
    /// `δh^0 = [δ⁰; id]`, a hyperface when `q₁ = 0`.
    H0,
    /// `δh^n = [δⁿ; id]`, a hyperface when `qₙ = 0`.
    Hn,
    /// `δh^{k;s} = [δᵏ; …, s, s', …]` for `s ∈ Sh(q_k, q_{k+1})`.
    Hk { k: usize, shuffle: Shuffle },
    /// `δv^{k;i} = [id; …, δⁱ, …]` with `δⁱ` in slot `k`.
    V { k: usize, i: usize },
}

impl HyperfaceLabel {
    pub fn hk(k: usize, shuffle: Shuffle) -> Self {
        HyperfaceLabel::Hk { k, shuffle }
    }

    pub fn v(k: usize, i: usize) -> Self {
        HyperfaceLabel::V { k, i }
    }

    pub fn exists_on(&self, shape: &ThetaShape) -> bool {
        let n = shape.n();
        match self {
            HyperfaceLabel::H0 => n >= 1 && shape.q(1) == 0,
            HyperfaceLabel::Hn => n >= 1 && shape.q(n) == 0,
            HyperfaceLabel::Hk { k, shuffle } => {
                *k >= 1 && *k < n && shuffle.m() == shape.q(*k) && shuffle.n() == shape.q(k + 1)
            }
            HyperfaceLabel::V { k, i } => *k >= 1 && *k <= n && shape.q(*k) >= 1 && *i <= shape.q(*k),
        }
    }

    fn check(&self, shape: &ThetaShape) -> Result<()> {
        if self.exists_on(shape) {
            Ok(())
        } else {
            Err(Error::NoSuchHyperface { label: self.to_string(), shape: shape.to_string() })
        }
    }

    pub fn is_horizontal(&self) -> bool {
        !matches!(self, HyperfaceLabel::V { .. })
    }

    /// Inner: `δh^{k;s}` always, `δv^{k;i}` for `0 < i < q_k`.
    pub fn is_inner(&self, shape: &ThetaShape) -> bool {
        match self {
            HyperfaceLabel::H0 | HyperfaceLabel::Hn => false,
            HyperfaceLabel::Hk { .. } => true,
            HyperfaceLabel::V { k, i } => *i >= 1 && *i < shape.q(*k),
        }
    }

    pub fn source_shape(&self, shape: &ThetaShape) -> Result<ThetaShape> {
        self.check(shape)?;
        let qs = shape.qs();
        Ok(match self {
            HyperfaceLabel::H0 => ThetaShape::new(qs[1..].to_vec()),
            HyperfaceLabel::Hn => ThetaShape::new(qs[..qs.len() - 1].to_vec()),
            HyperfaceLabel::Hk { k, .. } => {
                let mut v = qs[..k - 1].to_vec();
                v.push(qs[k - 1] + qs[*k]);
                v.extend_from_slice(&qs[k + 1..]);
                ThetaShape::new(v)
            }
            HyperfaceLabel::V { k, .. } => shape.with_q(*k, shape.q(*k) - 1),
        })
    }

    pub fn operator(&self, shape: &ThetaShape) -> Result<CellularOperator> {
        let src = self.source_shape(shape)?;
        let n = shape.n();
        let id = |k: usize| SimplicialOperator::identity(shape.q(k));
        Ok(match self {
            HyperfaceLabel::H0 => h0_face(shape),
            HyperfaceLabel::Hn => hn_face(shape),
            HyperfaceLabel::Hk { k, shuffle } => {
                let comps = (1..=n)
                    .map(|l| {
                        if l == *k {
                            shuffle.first()
                        } else if l == k + 1 {
                            shuffle.second()
                        } else {
                            id(l)
                        }
                    })
                    .collect();
                CellularOperator::raw(src, shape.clone(), SimplicialOperator::coface(n, *k), comps)
            }
            HyperfaceLabel::V { k, i } => {
                let comps =
                    (1..=n).map(|l| if l == *k { SimplicialOperator::coface(shape.q(l), *i) } else { id(l) }).collect();
                CellularOperator::raw(src, shape.clone(), SimplicialOperator::identity(n), comps)
            }
        })
    }

    /// Prints `δh^n` with the actual value of `n`.
    pub fn display_on(&self, shape: &ThetaShape) -> String {
        match self {
            HyperfaceLabel::Hn => format!("δh^{}", shape.n()),
            other => other.to_string(),
        }
    }
}

impl fmt::Display for HyperfaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperfaceLabel::H0 => write!(f, "δh^0"),
            HyperfaceLabel::Hn => write!(f, "δh^n"),
            HyperfaceLabel::Hk { k, shuffle } => write!(f, "δh^{{{k};{shuffle}}}"),
            HyperfaceLabel::V { k, i } => write!(f, "δv^{{{k};{i}}}"),
        }
    }
}

/// `[δ⁰; id] : [n-1; q₂,…,qₙ] -> [n;q]`, of any codimension.
pub fn h0_face(shape: &ThetaShape) -> CellularOperator {
    let n = shape.n();
    assert!(n >= 1);
    let comps = (2..=n).map(|k| SimplicialOperator::identity(shape.q(k))).collect();
    CellularOperator::raw(
        ThetaShape::new(shape.qs()[1..].to_vec()),
        shape.clone(),
        SimplicialOperator::coface(n, 0),
        comps,
    )
}

/// `[δⁿ; id] : [n-1; q₁,…,q_{n-1}] -> [n;q]`, of any codimension.
pub fn hn_face(shape: &ThetaShape) -> CellularOperator {
    let n = shape.n();
    assert!(n >= 1);
    let comps = (1..n).map(|k| SimplicialOperator::identity(shape.q(k))).collect();
    CellularOperator::raw(
        ThetaShape::new(shape.qs()[..n - 1].to_vec()),
        shape.clone(),
        SimplicialOperator::coface(n, n),
        comps,
    )
}

/// All hyperface labels of `shape`: `δh^0`, the `δh^{k;s}` by `k` then
/// shuffle, `δh^n`, then the `δv^{k;i}` by `(k, i)`.
pub fn hyperface_labels(shape: &ThetaShape) -> Vec<HyperfaceLabel> {
    let n = shape.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    if shape.q(1) == 0 {
        out.push(HyperfaceLabel::H0);
    }
    for k in 1..n {
        for s in Shuffle::all(shape.q(k), shape.q(k + 1)) {
            out.push(HyperfaceLabel::hk(k, s));
        }
    }
    if shape.q(n) == 0 {
        out.push(HyperfaceLabel::Hn);
    }
    for k in 1..=n {
        if shape.q(k) >= 1 {
            for i in 0..=shape.q(k) {
                out.push(HyperfaceLabel::v(k, i));
            }
        }
    }
    out
}

pub fn hyperfaces(shape: &ThetaShape) -> Vec<(HyperfaceLabel, CellularOperator)> {
    hyperface_labels(shape)
        .into_iter()
        .map(|l| {
            let f = l.operator(shape).expect("label exists");
            (l, f)
        })
        .collect()
}

pub fn inner_hyperface_labels(shape: &ThetaShape) -> Vec<HyperfaceLabel> {
    hyperface_labels(shape).into_iter().filter(|l| l.is_inner(shape)).collect()
}

/// Existing outer hyperfaces in the order
/// `δv^{1;0} ≺ … ≺ δv^{n;0} ≺ δh^0 ≺ δh^n ≺ δv^{1;q₁} ≺ … ≺ δv^{n;qₙ}`.
pub fn outer_hyperface_order(shape: &ThetaShape) -> Vec<HyperfaceLabel> {
    let n = shape.n();
    let mut out = Vec::new();
    for k in 1..=n {
        if shape.q(k) >= 1 {
            out.push(HyperfaceLabel::v(k, 0));
        }
    }
    for l in [HyperfaceLabel::H0, HyperfaceLabel::Hn] {
        if l.exists_on(shape) {
            out.push(l);
        }
    }
    for k in 1..=n {
        if shape.q(k) >= 1 {
            out.push(HyperfaceLabel::v(k, shape.q(k)));
        }
    }
    out
}

/// The vertebrae: `[{k-1,k}; id] : [1;0] ->` when `q_k = 0` and
/// `[{k-1,k}; {i-1,i}] : [1;1] ->` for `1 ≤ i ≤ q_k` otherwise; the identity for `[0]`.
pub fn vertebrae(shape: &ThetaShape) -> Vec<CellularOperator> {
    let n = shape.n();
    if n == 0 {
        return vec![CellularOperator::identity(shape)];
    }
    let mut out = Vec::new();
    for k in 1..=n {
        let alpha = SimplicialOperator::raw(vec![k - 1, k], n);
        let q = shape.q(k);
        if q == 0 {
            out.push(CellularOperator::raw(
                ThetaShape::new(vec![0]),
                shape.clone(),
                alpha,
                vec![SimplicialOperator::identity(0)],
            ));
        } else {
            for i in 1..=q {
                let c = SimplicialOperator::raw(vec![i - 1, i], q);
                out.push(CellularOperator::raw(ThetaShape::new(vec![1]), shape.clone(), alpha.clone(), vec![c]));
            }
        }
    }
    out
}

/// `[n;q]` has exactly one vertebra.
pub fn is_mono_vertebral(shape: &ThetaShape) -> bool {
    vertebrae(shape).len() == 1
}
