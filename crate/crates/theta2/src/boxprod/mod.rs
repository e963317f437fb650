//! Box products `□ₙ(W; S₁,…,Sₙ)` over `Δ[n]`, the Leibniz construction on
//! families of monomorphisms, and the named inclusions built from them.
//!
//! The base `W` is either `Δ[n]` itself or `J × Δ[n]`; each fiber is either a
//! standard simplex or `J`. A cell at `[m;p]` is a horizontal operator
//! `α : [m] -> [n]`, a base label (a word over `{◊,♦}` when the base is
//! `J × Δ[n]`), and for each covered `k` a `p_ℓ`-simplex of the `k`-th fiber.

mod families;
mod leibniz;

use std::fmt;

use crate::cellset::{CellularSet, Word};
use crate::delta::SimplicialOperator;
use crate::theta::{cartesian, covering_interval, CellularOperator, ThetaShape};

pub use families::{
    boundary, boundary_leibniz, equiv_horiz, equiv_vert, horn_h, horn_h_alt, horn_h_leibniz, horn_v, horn_v_leibniz,
    k_phi, lambda_s, spine, spine_s, upsilon_s, EquivHoriz, EquivVert, Inclusion,
};
pub use leibniz::{BaseSub, FiberSub, LeibnizDomain};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Base {
    /// `id : Δ[n] -> Δ[n]`.
    Standard,
    /// The projection `J × Δ[n] -> Δ[n]`.
    Chaotic,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fiber {
    Simplex(usize),
    Chaotic,
}

impl Fiber {
    fn simplices(&self, p: usize) -> Vec<Vec<usize>> {
        match *self {
            Fiber::Simplex(q) => SimplicialOperator::all(p, q).into_iter().map(|a| a.values().to_vec()).collect(),
            Fiber::Chaotic => Word::all(p + 1, 2).into_iter().map(|w| w.0).collect(),
        }
    }

    fn admits(&self, v: &[usize]) -> bool {
        match *self {
            Fiber::Simplex(q) => v.windows(2).all(|w| w[0] <= w[1]) && v.iter().all(|&x| x <= q),
            Fiber::Chaotic => v.iter().all(|&x| x < 2),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BoxCell {
    alpha: SimplicialOperator,
    comps: Vec<Vec<usize>>,
    label: Vec<usize>,
    shape: ThetaShape,
}

impl BoxCell {
    pub fn alpha(&self) -> &SimplicialOperator {
        &self.alpha
    }

    /// Base label, empty unless the base is `J × Δ[n]`.
    pub fn label(&self) -> &[usize] {
        &self.label
    }

    pub fn shape(&self) -> &ThetaShape {
        &self.shape
    }

    /// The fiber simplex at covered index `k`, as a list of values.
    pub fn component(&self, k: usize) -> Option<&[usize]> {
        let first = self.alpha.first();
        if k > first && k <= self.alpha.last() {
            Some(&self.comps[k - first - 1])
        } else {
            None
        }
    }

    /// Caller guarantees the cell lies in the intended box product.
    pub(crate) fn raw(
        alpha: SimplicialOperator,
        comps: Vec<Vec<usize>>,
        label: Vec<usize>,
        shape: ThetaShape,
    ) -> BoxCell {
        BoxCell { alpha, comps, label, shape }
    }

    pub fn from_operator(f: &CellularOperator) -> BoxCell {
        BoxCell {
            alpha: f.horizontal().clone(),
            comps: f.components().iter().map(|c| c.values().to_vec()).collect(),
            label: Vec::new(),
            shape: f.source().clone(),
        }
    }

    /// Reads a cell of `□ₙ(Δ[n]; Δ[q₁],…)` as an operator into `[n;q]`.
    pub fn to_operator(&self, dst: &ThetaShape) -> CellularOperator {
        let first = self.alpha.first();
        let comps = self
            .comps
            .iter()
            .enumerate()
            .map(|(i, v)| SimplicialOperator::raw(v.clone(), dst.q(first + 1 + i)))
            .collect();
        CellularOperator::raw(self.shape.clone(), dst.clone(), self.alpha.clone(), comps)
    }

    /// The tuples of fiber values over source interval `l`, one per vertical index.
    fn interval_tuples(&self, l: usize) -> Vec<Vec<usize>> {
        let lo = self.alpha.apply(l - 1);
        let hi = self.alpha.apply(l);
        let first = self.alpha.first();
        (0..=self.shape.q(l)).map(|b| (lo + 1..=hi).map(|k| self.comps[k - first - 1][b]).collect()).collect()
    }
}

impl fmt::Display for BoxCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.label.is_empty() {
            write!(f, "{}·", Word(self.label.clone()))?;
        }
        write!(f, "[{}", self.alpha.values_string())?;
        if !self.comps.is_empty() {
            let cs: Vec<String> =
                self.comps.iter().map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")).collect();
            write!(f, ";{}", cs.join(","))?;
        }
        write!(f, "]:{}", self.shape)
    }
}

/// `□ₙ(W; S₁,…,Sₙ)` truncated at a bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxProduct {
    base: Base,
    fibers: Vec<Fiber>,
    bound: usize,
}

impl BoxProduct {
    pub fn new(base: Base, fibers: Vec<Fiber>, bound: usize) -> Self {
        BoxProduct { base, fibers, bound }
    }

    /// `□ₙ(id; Δ[q₁],…,Δ[qₙ])`, isomorphic to `Θ₂[n;q]`.
    pub fn standard(shape: &ThetaShape, bound: usize) -> Self {
        BoxProduct::new(Base::Standard, shape.qs().iter().map(|&q| Fiber::Simplex(q)).collect(), bound)
    }

    /// `Φᵏ[n;q]`: `J` in slot `k`.
    pub fn phi(shape: &ThetaShape, k: usize, bound: usize) -> Self {
        let mut b = BoxProduct::standard(shape, bound);
        b.fibers[k - 1] = Fiber::Chaotic;
        b
    }

    /// `J × Θ₂[n;q]`.
    pub fn j_times(shape: &ThetaShape, bound: usize) -> Self {
        let mut b = BoxProduct::standard(shape, bound);
        b.base = Base::Chaotic;
        b
    }

    /// `Θ₂[1;J]`, the suspension of `J`.
    pub fn suspension_j(bound: usize) -> Self {
        BoxProduct::new(Base::Standard, vec![Fiber::Chaotic], bound)
    }

    pub fn n(&self) -> usize {
        self.fibers.len()
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    /// The shape `[n;q]` when every fiber is a standard simplex.
    pub fn standard_shape(&self) -> Option<ThetaShape> {
        self.fibers
            .iter()
            .map(|f| match f {
                Fiber::Simplex(q) => Some(*q),
                Fiber::Chaotic => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(ThetaShape::new)
    }

    /// Cells sharing the shape `[m;p]` and horizontal part `alpha`.
    fn cells_over(&self, shape: &ThetaShape, alpha: &SimplicialOperator) -> Vec<BoxCell> {
        let labels: Vec<Vec<usize>> = match self.base {
            Base::Standard => vec![Vec::new()],
            Base::Chaotic => Word::all(shape.n() + 1, 2).into_iter().map(|w| w.0).collect(),
        };
        let choices: Vec<Vec<Vec<usize>>> = (alpha.first() + 1..=alpha.last())
            .map(|k| self.fibers[k - 1].simplices(shape.q(covering_interval(alpha, k))))
            .collect();
        let mut out = Vec::new();
        for comps in cartesian(&choices) {
            for label in &labels {
                out.push(BoxCell {
                    alpha: alpha.clone(),
                    comps: comps.clone(),
                    label: label.clone(),
                    shape: shape.clone(),
                });
            }
        }
        out
    }

    /// Structural nondegeneracy: no collapsed interval can be squashed and no
    /// vertical chain repeats.
    fn structurally_nondegenerate(&self, c: &BoxCell) -> bool {
        (1..=c.shape.n()).all(|l| {
            if c.alpha.apply(l - 1) == c.alpha.apply(l) {
                c.shape.q(l) == 0 && !c.label.is_empty() && c.label[l - 1] != c.label[l]
            } else {
                c.interval_tuples(l).windows(2).all(|w| w[0] != w[1])
            }
        })
    }

    /// Structural EZ decomposition: squash repeated vertical tuples and
    /// collapsed intervals, then merge collapsed intervals with equal labels.
    fn structural_root(&self, c: &BoxCell) -> (BoxCell, CellularOperator) {
        let m = c.shape.n();
        let mut chains: Vec<Vec<Vec<usize>>> = Vec::with_capacity(m);
        let mut vert: Vec<SimplicialOperator> = Vec::with_capacity(m);
        for l in 1..=m {
            if c.alpha.apply(l - 1) == c.alpha.apply(l) {
                chains.push(vec![Vec::new()]);
                vert.push(SimplicialOperator::constant(c.shape.q(l), 0, 0));
            } else {
                let tuples = c.interval_tuples(l);
                let mut chain = tuples.clone();
                chain.dedup();
                let mut e = Vec::with_capacity(tuples.len());
                let mut idx = 0;
                for t in &tuples {
                    while &chain[idx] != t {
                        idx += 1;
                    }
                    e.push(idx);
                }
                vert.push(SimplicialOperator::raw(e, chain.len() - 1));
                chains.push(chain);
            }
        }
        // Horizontal squash: vertex l merges into l-1 when interval l is
        // collapsed and carries no label change.
        let mut sigma = Vec::with_capacity(m + 1);
        sigma.push(0);
        let mut kept = Vec::new();
        for l in 1..=m {
            let collapsed = c.alpha.apply(l - 1) == c.alpha.apply(l);
            let same_label = c.label.is_empty() || c.label[l - 1] == c.label[l];
            let prev = *sigma.last().unwrap();
            if collapsed && same_label {
                sigma.push(prev);
            } else {
                sigma.push(prev + 1);
                kept.push(l);
            }
        }
        let m2 = kept.len();
        let sigma = SimplicialOperator::raw(sigma, m2);
        let mid = ThetaShape::new(kept.iter().map(|&l| chains[l - 1].len() - 1).collect());
        let deg_components = kept.iter().map(|&l| vert[l - 1].clone()).collect();
        let d = CellularOperator::raw(c.shape.clone(), mid.clone(), sigma.clone(), deg_components);

        let mut verts = vec![0];
        verts.extend(kept.iter().copied());
        let alpha = SimplicialOperator::raw(verts.iter().map(|&i| c.alpha.apply(i)).collect(), self.n());
        let label = if c.label.is_empty() { Vec::new() } else { verts.iter().map(|&i| c.label[i]).collect() };
        let mut comps = Vec::new();
        for &l in &kept {
            let lo = c.alpha.apply(l - 1);
            for pos in 0..c.alpha.apply(l) - lo {
                comps.push(chains[l - 1].iter().map(|t| t[pos]).collect());
            }
        }
        (BoxCell { alpha, comps, label, shape: mid }, d)
    }
}

impl CellularSet for BoxProduct {
    type Cell = BoxCell;

    fn bound(&self) -> usize {
        self.bound
    }

    fn shape_of(&self, c: &BoxCell) -> ThetaShape {
        c.shape.clone()
    }

    fn cells_at(&self, shape: &ThetaShape) -> Vec<BoxCell> {
        if shape.dim() > self.bound {
            return Vec::new();
        }
        SimplicialOperator::all(shape.n(), self.n()).iter().flat_map(|a| self.cells_over(shape, a)).collect()
    }

    fn act(&self, c: &BoxCell, f: &CellularOperator) -> BoxCell {
        let beta = f.horizontal();
        let alpha = c.alpha.after_unchecked(beta);
        let label = if c.label.is_empty() { Vec::new() } else { beta.values().iter().map(|&i| c.label[i]).collect() };
        let mut comps = Vec::with_capacity(alpha.last() - alpha.first());
        for k in alpha.first() + 1..=alpha.last() {
            let l = covering_interval(&c.alpha, k);
            let inner = f.component(l).unwrap();
            let old = c.component(k).unwrap();
            comps.push(inner.values().iter().map(|&b| old[b]).collect());
        }
        BoxCell { alpha, comps, label, shape: f.source().clone() }
    }

    fn contains(&self, c: &BoxCell) -> bool {
        let n = self.n();
        let m = c.shape.n();
        if c.alpha.target() != n || c.alpha.source() != m {
            return false;
        }
        let label_ok = match self.base {
            Base::Standard => c.label.is_empty(),
            Base::Chaotic => c.label.len() == m + 1 && c.label.iter().all(|&x| x < 2),
        };
        label_ok
            && c.comps.len() == c.alpha.last() - c.alpha.first()
            && (c.alpha.first() + 1..=c.alpha.last()).all(|k| {
                let v = c.component(k).unwrap();
                v.len() == c.shape.q(covering_interval(&c.alpha, k)) + 1 && self.fibers[k - 1].admits(v)
            })
    }

    fn root(&self, c: &BoxCell) -> (BoxCell, CellularOperator) {
        self.structural_root(c)
    }

    fn is_nondegenerate(&self, c: &BoxCell) -> bool {
        self.structurally_nondegenerate(c)
    }

    fn describe(&self) -> String {
        let fibers: Vec<String> = self
            .fibers
            .iter()
            .map(|f| match f {
                Fiber::Simplex(q) => format!("Δ[{q}]"),
                Fiber::Chaotic => "J".to_string(),
            })
            .collect();
        let base = match self.base {
            Base::Standard => format!("Δ[{}]", self.n()),
            Base::Chaotic => format!("J×Δ[{}]", self.n()),
        };
        format!("□{}({}; {})", self.n(), base, fibers.join(","))
    }
}
