//! Cellular sets truncated at a dimension bound, their subobjects, and the
//! generic Eilenberg–Zilber machinery.
//!
//! A cellular set is anything implementing [`CellularSet`]: it lists its cells
//! shape by shape (for shapes of dimension at most its bound) and lets
//! operators act on them. Subobjects are stored by their nondegenerate cells.

mod json;
mod product;
mod representable;
mod simplicial;

use std::collections::BTreeSet;
use std::fmt::{Debug, Display};
use std::hash::Hash;

pub use json::{materialize, ActionEntry, ActionTable, ShapeCells, SubobjectDoc, TruncatedCellularSet};
pub use product::{product, Pair, Product};
pub use representable::{member_via_generators, representable, Representable};
pub use simplicial::{from_simplicial, Chaotic, Horizontal, HorizontalCell, SimplicialSet, StandardSimplex, Word};

use crate::cache;
use crate::error::{Error, Result};
use crate::theta::{CellularOperator, ThetaShape};

pub trait CellularSet {
    type Cell: Clone + Eq + Hash + Ord + Debug + Display;

    /// Cells exist for shapes of dimension at most this bound.
    fn bound(&self) -> usize;

    fn shape_of(&self, c: &Self::Cell) -> ThetaShape;

    /// All cells at `shape`; empty above the bound.
    fn cells_at(&self, shape: &ThetaShape) -> Vec<Self::Cell>;

    /// `c · f` for `f : [m;p] -> shape_of(c)`.
    fn act(&self, c: &Self::Cell, f: &CellularOperator) -> Self::Cell;

    fn contains(&self, c: &Self::Cell) -> bool;

    /// The Eilenberg–Zilber decomposition `c = y · d` with `y` nondegenerate
    /// and `d` a degeneracy.
    fn root(&self, c: &Self::Cell) -> (Self::Cell, CellularOperator) {
        ez_by_search(self, c)
    }

    fn is_nondegenerate(&self, c: &Self::Cell) -> bool {
        self.root(c).1.is_identity()
    }

    fn nondegenerate_at(&self, shape: &ThetaShape) -> Vec<Self::Cell> {
        self.cells_at(shape).into_iter().filter(|c| self.is_nondegenerate(c)).collect()
    }

    fn describe(&self) -> String;
}

/// EZ decomposition by trying every degeneracy out of the cell's shape,
/// smallest target first.
pub fn ez_by_search<X: CellularSet + ?Sized>(x: &X, c: &X::Cell) -> (X::Cell, CellularOperator) {
    let shape = x.shape_of(c);
    for (d, s) in cache::degeneracies_with_sections(&shape).iter() {
        let y = x.act(c, s);
        if &x.act(&y, d) == c {
            return (y, d.clone());
        }
    }
    (c.clone(), CellularOperator::identity(&shape))
}

/// Whether no non-identity degeneracy splits off `c`, by search.
pub fn is_nondegenerate_by_search<X: CellularSet + ?Sized>(x: &X, c: &X::Cell) -> bool {
    let shape = x.shape_of(c);
    cache::degeneracies_with_sections(&shape).iter().all(|(d, s)| &x.act(&x.act(c, s), d) != c)
}

/// Every pair `(y, d)` with `y` nondegenerate (by search), `d` a degeneracy
/// and `c = y · d`. Elegance says there is exactly one.
pub fn ez_decompositions<X: CellularSet + ?Sized>(x: &X, c: &X::Cell) -> Vec<(X::Cell, CellularOperator)> {
    let shape = x.shape_of(c);
    let mut out = Vec::new();
    if is_nondegenerate_by_search(x, c) {
        out.push((c.clone(), CellularOperator::identity(&shape)));
    }
    for (d, s) in cache::degeneracies_with_sections(&shape).iter() {
        let y = x.act(c, s);
        if &x.act(&y, d) == c && is_nondegenerate_by_search(x, &y) {
            out.push((y, d.clone()));
        }
    }
    out
}

/// All nondegenerate cells up to the bound.
pub fn nondegenerate_cells<X: CellularSet + ?Sized>(x: &X) -> Vec<X::Cell> {
    ThetaShape::all_up_to(x.bound()).iter().flat_map(|s| x.nondegenerate_at(s)).collect()
}

/// A subobject of some ambient cellular set, stored by its nondegenerate
/// members (those within the ambient's bound).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subobject<C: Ord> {
    cells: BTreeSet<C>,
}

impl<C: Ord + Clone> Default for Subobject<C> {
    fn default() -> Self {
        Subobject { cells: BTreeSet::new() }
    }
}

impl<C: Ord + Clone> Subobject<C> {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Wraps a set already known to be closed.
    pub fn from_closed(cells: BTreeSet<C>) -> Self {
        Subobject { cells }
    }

    pub fn cells(&self) -> &BTreeSet<C> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains_nondegenerate(&self, c: &C) -> bool {
        self.cells.contains(c)
    }

    pub fn union(&self, other: &Self) -> Self {
        Subobject { cells: self.cells.union(&other.cells).cloned().collect() }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Subobject { cells: self.cells.intersection(&other.cells).cloned().collect() }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.cells.is_subset(&other.cells)
    }

    pub(crate) fn insert(&mut self, c: C) -> bool {
        self.cells.insert(c)
    }
}

/// Nondegenerate parts of all faces of `c`.
pub fn face_roots<X: CellularSet + ?Sized>(x: &X, c: &X::Cell) -> Vec<X::Cell> {
    let shape = x.shape_of(c);
    cache::faces_into(&shape).iter().map(|f| x.root(&x.act(c, f)).0).collect()
}

/// The subobject generated by `generators`: `{ s · f }`.
pub fn closure<X: CellularSet + ?Sized>(x: &X, generators: &[X::Cell]) -> Result<Subobject<X::Cell>> {
    let mut sub = Subobject::empty();
    for g in generators {
        if !x.contains(g) {
            return Err(Error::NotInAmbient(g.to_string()));
        }
        let shape = x.shape_of(g);
        if shape.dim() > x.bound() {
            return Err(Error::AboveBound { shape: shape.to_string(), bound: x.bound() });
        }
        add_closure(x, &mut sub, g);
    }
    Ok(sub)
}

/// Adds the closure of one cell to `sub`.
pub fn add_closure<X: CellularSet + ?Sized>(x: &X, sub: &mut Subobject<X::Cell>, g: &X::Cell) {
    let root = x.root(g).0;
    if sub.cells.contains(&root) {
        return;
    }
    for r in face_roots(x, &root) {
        sub.cells.insert(r);
    }
}

pub fn member<X: CellularSet + ?Sized>(x: &X, sub: &Subobject<X::Cell>, c: &X::Cell) -> bool {
    sub.cells.contains(&x.root(c).0)
}

/// `{ h : φ · h ∈ sub }`, a subobject of the representable on the shape of `φ`.
pub fn pullback_along<X: CellularSet + ?Sized>(
    x: &X,
    sub: &Subobject<X::Cell>,
    phi: &X::Cell,
) -> Subobject<CellularOperator> {
    let shape = x.shape_of(phi);
    let cells = cache::faces_into(&shape).iter().filter(|h| member(x, sub, &x.act(phi, h))).cloned().collect();
    Subobject { cells }
}

/// The members not lying in the closure of any other member.
pub fn generators<X: CellularSet + ?Sized>(x: &X, sub: &Subobject<X::Cell>) -> Vec<X::Cell> {
    let mut below: BTreeSet<X::Cell> = BTreeSet::new();
    for c in &sub.cells {
        for r in face_roots(x, c) {
            if &r != c {
                below.insert(r);
            }
        }
    }
    sub.cells.iter().filter(|c| !below.contains(c)).cloned().collect()
}

/// Whether every face of every member is again a member.
pub fn is_closed<X: CellularSet + ?Sized>(x: &X, sub: &Subobject<X::Cell>) -> bool {
    sub.cells.iter().all(|c| x.is_nondegenerate(c) && face_roots(x, c).iter().all(|r| sub.cells.contains(r)))
}

/// Everything up to the bound.
pub fn full<X: CellularSet + ?Sized>(x: &X) -> Subobject<X::Cell> {
    Subobject { cells: nondegenerate_cells(x).into_iter().collect() }
}

/// A subobject regarded as a cellular set in its own right.
pub struct Restricted<'a, X: CellularSet> {
    ambient: &'a X,
    sub: &'a Subobject<X::Cell>,
}

pub fn restrict<'a, X: CellularSet>(ambient: &'a X, sub: &'a Subobject<X::Cell>) -> Restricted<'a, X> {
    Restricted { ambient, sub }
}

impl<X: CellularSet> CellularSet for Restricted<'_, X> {
    type Cell = X::Cell;

    fn bound(&self) -> usize {
        self.ambient.bound()
    }

    fn shape_of(&self, c: &Self::Cell) -> ThetaShape {
        self.ambient.shape_of(c)
    }

    fn cells_at(&self, shape: &ThetaShape) -> Vec<Self::Cell> {
        self.ambient.cells_at(shape).into_iter().filter(|c| member(self.ambient, self.sub, c)).collect()
    }

    fn act(&self, c: &Self::Cell, f: &CellularOperator) -> Self::Cell {
        self.ambient.act(c, f)
    }

    fn contains(&self, c: &Self::Cell) -> bool {
        self.ambient.contains(c) && member(self.ambient, self.sub, c)
    }

    fn root(&self, c: &Self::Cell) -> (Self::Cell, CellularOperator) {
        self.ambient.root(c)
    }

    fn describe(&self) -> String {
        format!("a subobject of {} with {} nondegenerate cells", self.ambient.describe(), self.sub.len())
    }
}

/// Restriction to cells of dimension at most `d`.
pub fn truncate<X: CellularSet + ?Sized>(x: &X, sub: &Subobject<X::Cell>, d: usize) -> Subobject<X::Cell> {
    Subobject { cells: sub.cells.iter().filter(|c| x.shape_of(c).dim() <= d).cloned().collect() }
}
