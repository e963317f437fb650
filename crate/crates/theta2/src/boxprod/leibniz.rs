//! Leibniz box products of monomorphisms, computed as unions of sub-boxes.

use std::collections::BTreeSet;

use crate::cellset::{CellularSet, Subobject};
use crate::theta::ThetaShape;

use super::{BoxCell, BoxProduct, Fiber};

/// A subobject of the base `W` over `Δ[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BaseSub {
    All,
    Empty,
    /// `∂Δ[n]` (or `J × ∂Δ[n]`).
    Boundary,
    /// `Λᵏ[n]`.
    Horn(usize),
    /// `{v} × Δ[n]` inside `J × Δ[n]`.
    Point(usize),
    /// `({v} × Δ[n]) ∪ (J × ∂Δ[n])`.
    PointOrBoundary(usize),
}

/// A subobject of one fiber.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FiberSub {
    All,
    Empty,
    Boundary,
    Horn(usize),
    /// The vertex `{v}`, e.g. `e : Δ[0] -> J` for `v = 0`.
    Point(usize),
}

fn image_misses(values: &[usize], top: usize, extra: Option<usize>) -> bool {
    let mut hit = vec![false; top + 1];
    for &v in values {
        hit[v] = true;
    }
    if let Some(e) = extra {
        hit[e] = true;
    }
    hit.iter().any(|h| !h)
}

impl BaseSub {
    fn contains(&self, c: &BoxCell, n: usize) -> bool {
        let a = c.alpha().values();
        let constant = |v: usize| c.label().iter().all(|&x| x == v);
        match *self {
            BaseSub::All => true,
            BaseSub::Empty => false,
            BaseSub::Boundary => image_misses(a, n, None),
            BaseSub::Horn(k) => image_misses(a, n, Some(k)),
            BaseSub::Point(v) => constant(v),
            BaseSub::PointOrBoundary(v) => constant(v) || image_misses(a, n, None),
        }
    }
}

impl FiberSub {
    fn contains(&self, v: &[usize], fiber: Fiber) -> bool {
        match (*self, fiber) {
            (FiberSub::All, _) => true,
            (FiberSub::Empty, _) => false,
            (FiberSub::Point(p), _) => v.iter().all(|&x| x == p),
            (FiberSub::Boundary, Fiber::Simplex(q)) => image_misses(v, q, None),
            (FiberSub::Horn(i), Fiber::Simplex(q)) => image_misses(v, q, Some(i)),
            (FiberSub::Boundary | FiberSub::Horn(_), Fiber::Chaotic) => false,
        }
    }
}

/// The domain of `□̂ₙ(A ↪ W; B₁ ↪ S₁, …, Bₙ ↪ Sₙ)`: the union over
/// non-terminal corners, i.e. cells whose base lies in `A` or whose `k`-th
/// fiber simplex lies in `B_k` for some `k`. A slot not covered by a cell
/// contributes the empty product, which lies in every `B_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeibnizDomain {
    pub base: BaseSub,
    pub fibers: Vec<FiberSub>,
}

impl LeibnizDomain {
    /// `(∂Δ[n]; ∂Δ[q₁],…,∂Δ[qₙ])`.
    pub fn boundary(n: usize) -> Self {
        LeibnizDomain { base: BaseSub::Boundary, fibers: vec![FiberSub::Boundary; n] }
    }

    pub fn contains(&self, x: &BoxProduct, c: &BoxCell) -> bool {
        let n = x.n();
        if self.base.contains(c, n) {
            return true;
        }
        (1..=n).any(|k| match c.component(k) {
            None => true,
            Some(v) => self.fibers[k - 1].contains(v, x.fibers()[k - 1]),
        })
    }

    /// The nondegenerate cells of the domain up to the bound of `x`.
    pub fn domain(&self, x: &BoxProduct) -> Subobject<BoxCell> {
        let cells: BTreeSet<BoxCell> = ThetaShape::all_up_to(x.bound())
            .iter()
            .flat_map(|s| x.nondegenerate_at(s))
            .filter(|c| self.contains(x, c))
            .collect();
        Subobject::from_closed(cells)
    }
}
