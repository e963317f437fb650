use crate::cache;
use crate::theta::{CellularOperator, ThetaShape};

use super::CellularSet;

/// `Θ₂[n;q]` truncated at a bound: cells are operators into the shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representable {
    shape: ThetaShape,
    bound: usize,
}

pub fn representable(shape: &ThetaShape, bound: usize) -> Representable {
    Representable { shape: shape.clone(), bound }
}

impl Representable {
    /// Truncated at the shape's own dimension, which loses no nondegenerate cell.
    pub fn full(shape: &ThetaShape) -> Self {
        Representable { shape: shape.clone(), bound: shape.dim() }
    }

    pub fn shape(&self) -> &ThetaShape {
        &self.shape
    }
}

impl CellularSet for Representable {
    type Cell = CellularOperator;

    fn bound(&self) -> usize {
        self.bound
    }

    fn shape_of(&self, c: &CellularOperator) -> ThetaShape {
        c.source().clone()
    }

    fn cells_at(&self, shape: &ThetaShape) -> Vec<CellularOperator> {
        if shape.dim() > self.bound {
            return Vec::new();
        }
        cache::operators(shape, &self.shape).as_ref().clone()
    }

    fn act(&self, c: &CellularOperator, f: &CellularOperator) -> CellularOperator {
        c.after_unchecked(f)
    }

    fn contains(&self, c: &CellularOperator) -> bool {
        c.target() == &self.shape
    }

    fn root(&self, c: &CellularOperator) -> (CellularOperator, CellularOperator) {
        let (d, f) = c.reedy_factor();
        (f, d)
    }

    fn is_nondegenerate(&self, c: &CellularOperator) -> bool {
        c.is_face()
    }

    fn nondegenerate_at(&self, shape: &ThetaShape) -> Vec<CellularOperator> {
        if shape.dim() > self.bound {
            return Vec::new();
        }
        cache::faces_into(&self.shape).iter().filter(|f| f.source() == shape).cloned().collect()
    }

    fn describe(&self) -> String {
        format!("Θ₂{}", self.shape)
    }
}

/// Membership in the closure of `generators` (faces into a common shape):
/// take the face part of `c` and look for a generator it factors through.
pub fn member_via_generators(generators: &[CellularOperator], c: &CellularOperator) -> bool {
    let f = c.face_part();
    generators.iter().any(|g| g.target() == f.target() && f.factor_through_face(g).is_some())
}
