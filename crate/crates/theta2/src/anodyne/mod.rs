//! Mechanical replay of gluing decompositions.
//!
//! A replay starts from a subobject of some ambient cellular set and attaches
//! cells one at a time. Every attachment is checked as a gluing square: the
//! brute-force pullback of the running subobject along the attaching map must
//! equal an independently constructed locus (a horn, a spine variant, ...),
//! the attaching map must be injective with nondegenerate image away from that
//! locus, and the union must again be a subobject. The final union is compared
//! with the target.

mod admissible;
mod claims;
mod equiv;
mod gluing;
mod horns;
mod lift;
mod pullback;
mod report;
mod spine;
mod suite;

pub use admissible::{
    admissible_sets, is_admissible, lambda_horizontal_upward_sets, sigma_downward_sets, Admissibility,
};
pub use claims::{claims_alternative, claims_inner, ClaimCheck};
pub use equiv::{horiz_equiv, vert_equiv};
pub use gluing::{verify_gluing_map, verify_gluing_square, GluingOutcome, GluingStep, Replay};
pub use horns::{alt_trivial, oury_from_alt, upsilon_full, upsilon_vertical};
pub use lift::{lift_check, HornFamily, HornKind, LiftInstance, LiftReport};
pub use pullback::{pullback_hyperface, pullback_of_faces};
pub use report::{Checks, FinalCheck, HornTag, Report, Status, StepReport};
pub use spine::{sigma_s, spine_anodyne};
pub use suite::{claim_matrix, equiv_matrix, replay_matrix, HORIZ_EQUIV_SHAPES, VERT_EQUIV_SHAPES};
