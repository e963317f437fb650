//! Combinatorics of the 2-cell category `Θ₂` and of cellular sets.
//!
//! The crate covers simplicial operators and shuffles ([`delta`]), objects and
//! operators of `Θ₂` ([`theta`], [`hyperface`]), truncated cellular sets and
//! their subobjects ([`cellset`]), box products and the named inclusions built
//! from them ([`boxprod`]), finite strict 2-categories and their nerves
//! ([`twocat`]), and mechanical replay of gluing decompositions ([`anodyne`]).

pub mod anodyne;
pub mod boxprod;
pub mod cache;
pub mod cellset;
pub mod delta;
pub mod error;
pub mod hyperface;
pub mod parse;
pub mod theta;
pub mod twocat;

pub use delta::{PointKind, Shuffle, SimplicialClass, SimplicialOperator};
pub use error::{Error, Result};
pub use hyperface::HyperfaceLabel;
pub use theta::{CellularClass, CellularOperator, ThetaShape};
