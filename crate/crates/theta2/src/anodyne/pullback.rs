use crate::cache;
use crate::cellset::Subobject;
use crate::error::{Error, Result};
use crate::hyperface::HyperfaceLabel;
use crate::theta::{CellularOperator, ThetaShape};

/// `{ h : along ∘ h factors through one of targets }` for faces `h` into the
/// source of `along`. All operators are faces into the same shape.
pub fn pullback_of_faces(targets: &[CellularOperator], along: &CellularOperator) -> Subobject<CellularOperator> {
    let cells = cache::faces_into(along.source())
        .iter()
        .filter(|h| {
            let g = along.after_unchecked(h);
            targets.iter().any(|t| g.factor_through_face(t).is_some())
        })
        .cloned()
        .collect();
    Subobject::from_closed(cells)
}

/// The pullback of the hyperface `target` along the hyperface `along` of
/// `shape`, as a subobject of the representable on the source of `along`.
pub fn pullback_hyperface(
    target: &HyperfaceLabel,
    along: &HyperfaceLabel,
    shape: &ThetaShape,
) -> Result<Subobject<CellularOperator>> {
    for l in [target, along] {
        if !l.exists_on(shape) {
            return Err(Error::NoSuchHyperface { label: l.display_on(shape), shape: shape.to_string() });
        }
    }
    let t = target.operator(shape)?;
    let a = along.operator(shape)?;
    Ok(pullback_of_faces(&[t], &a))
}
