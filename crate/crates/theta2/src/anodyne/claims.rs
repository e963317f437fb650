use std::collections::BTreeMap;

use serde::Serialize;

use crate::boxprod::upsilon_s;
use crate::cellset::Subobject;
use crate::delta::Shuffle;
use crate::error::{Error, Result};
use crate::hyperface::{outer_hyperface_order, HyperfaceLabel};
use crate::theta::{CellularOperator, ThetaShape};

use super::pullback::pullback_of_faces;

/// One pullback claim checked over every applicable index.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimCheck {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl ClaimCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally(BTreeMap<&'static str, ClaimCheck>);

impl Tally {
    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let c = self.0.entry(name).or_insert_with(|| ClaimCheck {
            name: name.to_string(),
            checked: 0,
            failures: Vec::new(),
        });
        c.checked += 1;
        if !ok {
            c.failures.push(detail());
        }
    }

    fn done(self) -> Vec<ClaimCheck> {
        self.0.into_values().collect()
    }
}

/// Pullbacks along one horizontal hyperface `δh^{k;a}` of `shape`.
struct Along {
    shape: ThetaShape,
    k: usize,
    a: Shuffle,
    phi: CellularOperator,
    p: ThetaShape,
}

impl Along {
    fn new(shape: &ThetaShape, k: usize, a: &Shuffle) -> Result<Self> {
        let phi = HyperfaceLabel::hk(k, a.clone()).operator(shape)?;
        let p = phi.source().clone();
        Ok(Along { shape: shape.clone(), k, a: a.clone(), phi, p })
    }

    fn pb(&self, target: &HyperfaceLabel) -> Subobject<CellularOperator> {
        pullback_of_faces(&[target.operator(&self.shape).expect("label exists")], &self.phi)
    }

    /// The closure of a hyperface of the source.
    fn face(&self, l: &HyperfaceLabel) -> Subobject<CellularOperator> {
        pullback_of_faces(&[l.operator(&self.p).expect("label exists")], &CellularOperator::identity(&self.p))
    }

    fn faces(&self, ls: &[HyperfaceLabel]) -> Subobject<CellularOperator> {
        let ops: Vec<CellularOperator> = ls.iter().map(|l| l.operator(&self.p).expect("label exists")).collect();
        pullback_of_faces(&ops, &CellularOperator::identity(&self.p))
    }

    fn name(&self, l: &HyperfaceLabel) -> String {
        format!(
            "{} along {} on {}",
            l.display_on(&self.shape),
            HyperfaceLabel::hk(self.k, self.a.clone()).display_on(&self.shape),
            self.shape
        )
    }

    fn inside_some(&self, pb: &Subobject<CellularOperator>, js: &[usize]) -> bool {
        js.iter().any(|&j| pb.is_subset(&self.face(&HyperfaceLabel::v(self.k, j))))
    }
}

/// The source index of slot `l ≠ k, k+1` after merging slots `k` and `k+1`.
fn merged_slot(k: usize, l: usize) -> usize {
    if l < k {
        l
    } else {
        l - 1
    }
}

fn claim0(t: &mut Tally, name: &'static str, x: &Along) {
    let outer: Vec<CellularOperator> =
        outer_hyperface_order(&x.shape).iter().map(|l| l.operator(&x.shape).expect("label exists")).collect();
    let ok = pullback_of_faces(&outer, &x.phi) == upsilon_s(&x.p, &[]).expect("empty set").domain;
    t.record(name, ok, || {
        format!("outer part along {} on {}", HyperfaceLabel::hk(x.k, x.a.clone()).display_on(&x.shape), x.shape)
    });
}

fn claim1(t: &mut Tally, name_i: &'static str, name_ii: &'static str, x: &Along) {
    let n = x.shape.n();
    for l in (1..n).filter(|&l| l != x.k) {
        let l2 = merged_slot(x.k, l);
        let targets: Vec<HyperfaceLabel> =
            Shuffle::all(x.p.q(l2), x.p.q(l2 + 1)).into_iter().map(|g| HyperfaceLabel::hk(l2, g)).collect();
        let union = x.faces(&targets);
        let pbs: Vec<Subobject<CellularOperator>> = Shuffle::all(x.shape.q(l), x.shape.q(l + 1))
            .into_iter()
            .map(|b| {
                let lb = HyperfaceLabel::hk(l, b);
                let pb = x.pb(&lb);
                t.record(name_i, pb.is_subset(&union), || x.name(&lb));
                pb
            })
            .collect();
        for g in &targets {
            let f = x.face(g);
            t.record(name_ii, pbs.iter().any(|pb| f.is_subset(pb)), || {
                format!("{} of the source, {}", g.display_on(&x.p), x.name(g))
            });
        }
    }
}

fn claim3(t: &mut Tally, name: &'static str, x: &Along) {
    let n = x.shape.n();
    for l in (1..=n).filter(|&l| l < x.k || l > x.k + 1) {
        for i in 1..x.shape.q(l) {
            let target = HyperfaceLabel::v(l, i);
            let ok = x.pb(&target) == x.face(&HyperfaceLabel::v(merged_slot(x.k, l), i));
            t.record(name, ok, || x.name(&target));
        }
    }
}

/// Claim 4 and its primed form, which differ in the corners allowed in the
/// non-singleton case.
fn claim4(t: &mut Tally, name: &'static str, x: &Along, corners: &[usize]) {
    let k = x.k;
    let pk = x.p.q(k);
    for (slot, q) in [(k, x.shape.q(k)), (k + 1, x.shape.q(k + 1))] {
        for i in 1..q {
            let target = HyperfaceLabel::v(slot, i);
            let pre = if slot == k { x.a.alpha_preimage(i) } else { x.a.alpha_prime_preimage(i) };
            let pb = x.pb(&target);
            let ok = match pre[..] {
                [j] if 1 <= j && j < pk => pb == x.face(&HyperfaceLabel::v(k, j)),
                _ => x.inside_some(&pb, corners),
            };
            t.record(name, ok, || x.name(&target));
        }
    }
}

fn require_horizontal(shape: &ThetaShape) -> Result<()> {
    if shape.n() < 2 {
        return Err(Error::InvalidParameters(format!("{shape} has no inner horizontal hyperfaces")));
    }
    Ok(())
}

/// Checks the pullbacks of hyperfaces along each inner horizontal hyperface
/// `δh^{k;α}` against their predicted forms:
///
/// * `claim0`: the outer part pulls back to `Υ^∅` of the source;
/// * `claim1`: `ℓ`-th horizontal hyperfaces (`ℓ ≠ k`) pull back into, and
///   cover, the corresponding horizontal hyperfaces of the source;
/// * `claim2`: for `β ≱ α` the pullback of `δh^{k;β}` lies in `δv^{k;j}` of
///   the source for some `j ∈ ⌟α`, and each such `δv^{k;j}` is exactly the
///   pullback of some `δh^{k;β}` with `β < α`;
/// * `claim3`: inner vertical hyperfaces away from slots `k, k+1` pull back
///   to the matching vertical hyperface;
/// * `claim4`: `δv^{k;i}` (and `δv^{k+1;i}`) pull back to `δv^{k;j}` when the
///   preimage of `i` is `{j}`, and into some `δv^{k;j}`, `j ∈ ⌟α`, otherwise.
pub fn claims_inner(shape: &ThetaShape) -> Result<Vec<ClaimCheck>> {
    require_horizontal(shape)?;
    let mut t = Tally::default();
    for k in 1..shape.n() {
        let all = Shuffle::all(shape.q(k), shape.q(k + 1));
        for a in &all {
            let x = Along::new(shape, k, a)?;
            claim0(&mut t, "claim0", &x);
            claim1(&mut t, "claim1(i)", "claim1(ii)", &x);
            let corners = a.lower_corners();
            for b in all.iter().filter(|b| !a.is_below(b)) {
                let lb = HyperfaceLabel::hk(k, b.clone());
                t.record("claim2(i)", x.inside_some(&x.pb(&lb), &corners), || x.name(&lb));
            }
            for &j in &corners {
                let f = x.face(&HyperfaceLabel::v(k, j));
                let ok = all
                    .iter()
                    .filter(|b| b.is_below(a) && *b != a)
                    .any(|b| x.pb(&HyperfaceLabel::hk(k, b.clone())) == f);
                t.record("claim2(ii)", ok, || format!("corner {j} of {a} on {shape}"));
            }
            claim3(&mut t, "claim3", &x);
            claim4(&mut t, "claim4", &x, &corners);
        }
    }
    Ok(t.done())
}

/// The primed claims, along `δh^{k;β}` for `β > α`, used when the shuffles
/// above `α` are re-attached:
///
/// * `claim0'`, `claim1'`, `claim3'`: as in [`claims_inner`];
/// * `claim2'`: for `γ ≰ β` the pullback of `δh^{k;γ}` lies in `δv^{k;j}` for
///   some `j ∈ ⌜β`, and each such face is exactly the pullback of some
///   `δh^{k;γ}` with `γ > β`;
/// * `claim4'`: as `claim4` with `⌜β` in place of `⌟α`;
/// * `claim5`: for `γ ≱ α` the pullback of `δh^{k;γ}` lies in some `δv^{k;j}`
///   with `j ∉ ⌟β` or `β(j) = α(j)`, and for `j ∈ ⌟β` with `β(j) = α(j)` the
///   face `δv^{k;j}` is exactly the pullback of some `δh^{k;γ}`, `γ ≱ α`.
pub fn claims_alternative(shape: &ThetaShape) -> Result<Vec<ClaimCheck>> {
    require_horizontal(shape)?;
    let mut t = Tally::default();
    for k in 1..shape.n() {
        let all = Shuffle::all(shape.q(k), shape.q(k + 1));
        for b in &all {
            let x = Along::new(shape, k, b)?;
            claim0(&mut t, "claim0'", &x);
            claim1(&mut t, "claim1'(i)", "claim1'(ii)", &x);
            let upper = b.upper_corners();
            for g in all.iter().filter(|g| !g.is_below(b)) {
                let lg = HyperfaceLabel::hk(k, g.clone());
                t.record("claim2'(i)", x.inside_some(&x.pb(&lg), &upper), || x.name(&lg));
            }
            for &j in &upper {
                let f = x.face(&HyperfaceLabel::v(k, j));
                let ok = all
                    .iter()
                    .filter(|g| b.is_below(g) && *g != b)
                    .any(|g| x.pb(&HyperfaceLabel::hk(k, g.clone())) == f);
                t.record("claim2'(ii)", ok, || format!("corner {j} of {b} on {shape}"));
            }
            claim3(&mut t, "claim3'", &x);
            claim4(&mut t, "claim4'", &x, &upper);

            let lower = b.lower_corners();
            let pk = x.p.q(k);
            for a in all.iter().filter(|a| a.is_below(b) && *a != b) {
                let allowed: Vec<usize> =
                    (1..pk).filter(|j| !lower.contains(j) || b.alpha()[*j] == a.alpha()[*j]).collect();
                for g in all.iter().filter(|g| !a.is_below(g)) {
                    let lg = HyperfaceLabel::hk(k, g.clone());
                    t.record("claim5(i)", x.inside_some(&x.pb(&lg), &allowed), || {
                        format!("{} with base {a}", x.name(&lg))
                    });
                }
                for &j in lower.iter().filter(|&&j| b.alpha()[j] == a.alpha()[j]) {
                    let f = x.face(&HyperfaceLabel::v(k, j));
                    let ok =
                        all.iter().filter(|g| !a.is_below(g)).any(|g| x.pb(&HyperfaceLabel::hk(k, g.clone())) == f);
                    t.record("claim5(ii)", ok, || format!("corner {j} of {b} with base {a} on {shape}"));
                }
            }
        }
    }
    Ok(t.done())
}
