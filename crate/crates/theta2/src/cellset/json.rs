//! Serializable snapshots of truncated cellular sets and subobjects, in a
//! canonical order so that reports diff cleanly.

use serde::{Deserialize, Serialize};

use crate::cache;
use crate::theta::ThetaShape;

use super::{generators, CellularSet, Representable, Subobject};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ShapeCells {
    pub shape: String,
    pub cells: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ActionEntry {
    pub cell: String,
    pub op: String,
    pub result: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionTable {
    Named(String),
    Table(Vec<ActionEntry>),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TruncatedCellularSet {
    pub bound: usize,
    pub shapes: Vec<ShapeCells>,
    pub action: ActionTable,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SubobjectDoc {
    pub ambient: String,
    pub bound: usize,
    pub generators: Vec<String>,
    pub shapes: Vec<ShapeCells>,
}

fn shapes_of<X: CellularSet>(x: &X, pick: impl Fn(&ThetaShape) -> Vec<String>) -> Vec<ShapeCells> {
    ThetaShape::all_up_to(x.bound())
        .iter()
        .map(|s| ShapeCells { shape: s.to_string(), cells: pick(s) })
        .filter(|sc| !sc.cells.is_empty())
        .collect()
}

/// All cells with the full action table over operators between shapes
/// within the bound.
pub fn materialize<X: CellularSet>(x: &X) -> TruncatedCellularSet {
    let shapes = ThetaShape::all_up_to(x.bound());
    let mut table = Vec::new();
    for dst in &shapes {
        let cells = x.cells_at(dst);
        if cells.is_empty() {
            continue;
        }
        for src in &shapes {
            for op in cache::operators(src, dst).iter() {
                for c in &cells {
                    table.push(ActionEntry {
                        cell: c.to_string(),
                        op: op.to_string(),
                        result: x.act(c, op).to_string(),
                    });
                }
            }
        }
    }
    TruncatedCellularSet {
        bound: x.bound(),
        shapes: shapes_of(x, |s| x.cells_at(s).iter().map(|c| c.to_string()).collect()),
        action: ActionTable::Table(table),
    }
}

impl Representable {
    /// Cells listed explicitly, action recorded as precomposition.
    pub fn materialize(&self) -> TruncatedCellularSet {
        TruncatedCellularSet {
            bound: self.bound(),
            shapes: shapes_of(self, |s| self.cells_at(s).iter().map(|c| c.to_string()).collect()),
            action: ActionTable::Named("representable".to_string()),
        }
    }
}

impl<C: Ord + Clone + std::fmt::Display> Subobject<C> {
    pub fn to_doc<X: CellularSet<Cell = C>>(&self, x: &X) -> SubobjectDoc {
        SubobjectDoc {
            ambient: x.describe(),
            bound: x.bound(),
            generators: generators(x, self).iter().map(|c| c.to_string()).collect(),
            shapes: shapes_of(x, |s| {
                self.cells().iter().filter(|c| &x.shape_of(c) == s).map(|c| c.to_string()).collect()
            }),
        }
    }
}
