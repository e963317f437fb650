use std::fmt;

use crate::theta::{CellularOperator, ThetaShape};

use super::CellularSet;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// Levelwise product with the diagonal action.
#[derive(Clone, Debug)]
pub struct Product<X, Y> {
    left: X,
    right: Y,
    bound: usize,
}

pub fn product<X: CellularSet, Y: CellularSet>(left: X, right: Y, bound: usize) -> Product<X, Y> {
    let bound = bound.min(left.bound()).min(right.bound());
    Product { left, right, bound }
}

impl<X, Y> Product<X, Y> {
    pub fn left(&self) -> &X {
        &self.left
    }

    pub fn right(&self) -> &Y {
        &self.right
    }
}

impl<X: CellularSet, Y: CellularSet> CellularSet for Product<X, Y> {
    type Cell = Pair<X::Cell, Y::Cell>;

    fn bound(&self) -> usize {
        self.bound
    }

    fn shape_of(&self, c: &Self::Cell) -> ThetaShape {
        self.left.shape_of(&c.0)
    }

    fn cells_at(&self, shape: &ThetaShape) -> Vec<Self::Cell> {
        if shape.dim() > self.bound {
            return Vec::new();
        }
        let ys = self.right.cells_at(shape);
        let mut out = Vec::new();
        for x in self.left.cells_at(shape) {
            for y in &ys {
                out.push(Pair(x.clone(), y.clone()));
            }
        }
        out
    }

    fn act(&self, c: &Self::Cell, f: &CellularOperator) -> Self::Cell {
        Pair(self.left.act(&c.0, f), self.right.act(&c.1, f))
    }

    fn contains(&self, c: &Self::Cell) -> bool {
        self.left.contains(&c.0) && self.right.contains(&c.1) && self.left.shape_of(&c.0) == self.right.shape_of(&c.1)
    }

    fn describe(&self) -> String {
        format!("{} × {}", self.left.describe(), self.right.describe())
    }
}
