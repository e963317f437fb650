use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::boxprod::{horn_h, horn_v};
use crate::cache;
use crate::cellset::{generators, representable, CellularSet, Subobject};
use crate::error::{Error, Result};
use crate::theta::{CellularOperator, ThetaShape};

use super::report::HornTag;

const MAX_WITNESSES: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HornKind {
    Horizontal { k: usize },
    Vertical { k: usize, i: usize },
}

/// A named set of horn inclusions `Λ ↪ Θ₂[n;q]`.
#[derive(Clone, Debug)]
pub struct HornFamily {
    pub name: String,
    members: Vec<(ThetaShape, HornKind)>,
}

fn inner_members(max_dim: usize, horizontal: bool, vertical: bool) -> Vec<(ThetaShape, HornKind)> {
    let mut out = Vec::new();
    for s in ThetaShape::all_up_to(max_dim) {
        if horizontal {
            out.extend((1..s.n()).map(|k| (s.clone(), HornKind::Horizontal { k })));
        }
        if vertical {
            for k in 1..=s.n() {
                out.extend((1..s.q(k)).map(|i| (s.clone(), HornKind::Vertical { k, i })));
            }
        }
    }
    out
}

impl HornFamily {
    /// Inner horizontal and inner vertical horns on shapes of dimension at
    /// most `max_dim`.
    pub fn inner(max_dim: usize) -> Self {
        HornFamily { name: "inner".to_string(), members: inner_members(max_dim, true, true) }
    }

    pub fn inner_horizontal(max_dim: usize) -> Self {
        HornFamily { name: "inner-horizontal".to_string(), members: inner_members(max_dim, true, false) }
    }

    pub fn inner_vertical(max_dim: usize) -> Self {
        HornFamily { name: "inner-vertical".to_string(), members: inner_members(max_dim, false, true) }
    }

    pub fn single(shape: &ThetaShape, kind: HornKind) -> Self {
        let name = match kind {
            HornKind::Horizontal { k } => format!("Λh^{k}{shape}"),
            HornKind::Vertical { k, i } => format!("Λv^{{{k};{i}}}{shape}"),
        };
        HornFamily { name, members: vec![(shape.clone(), kind)] }
    }

    /// `inner`, `inner-horizontal` or `inner-vertical`.
    pub fn by_name(name: &str, max_dim: usize) -> Result<Self> {
        match name {
            "inner" => Ok(Self::inner(max_dim)),
            "inner-horizontal" => Ok(Self::inner_horizontal(max_dim)),
            "inner-vertical" => Ok(Self::inner_vertical(max_dim)),
            other => Err(Error::InvalidParameters(format!("unknown horn family `{other}`"))),
        }
    }

    pub fn members(&self) -> &[(ThetaShape, HornKind)] {
        &self.members
    }
}

/// The maps from one horn into `X` and how many of them extend.
#[derive(Clone, Debug, Serialize)]
pub struct LiftInstance {
    pub shape: String,
    pub horn: HornTag,
    pub maps: usize,
    pub filled: usize,
    /// A few horn maps without a filler, as the images of the generators.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unfilled: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LiftReport {
    pub family: String,
    pub target: String,
    pub bound: usize,
    /// Horns on shapes above this dimension were not examined.
    pub certified_dim: usize,
    pub instances: Vec<LiftInstance>,
}

impl LiftReport {
    pub fn ok(&self) -> bool {
        self.instances.iter().all(|i| i.filled == i.maps)
    }

    pub fn maps(&self) -> usize {
        self.instances.iter().map(|i| i.maps).sum()
    }

    pub fn summary(&self) -> String {
        let bad = self.instances.iter().filter(|i| i.filled != i.maps).count();
        let verdict = if bad == 0 { "all fill".to_string() } else { format!("{bad} horns with unfilled maps") };
        format!(
            "lift {} into {} through dim {}: {} horns, {} maps, {verdict}",
            self.family,
            self.target,
            self.certified_dim,
            self.instances.len(),
            self.maps()
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Faces shared by two generators: `g_i · a = g_j · b` with `j < i`.
struct Overlap {
    i: usize,
    a: CellularOperator,
    j: usize,
    b: CellularOperator,
}

fn overlaps(gens: &[CellularOperator]) -> Result<Vec<Overlap>> {
    let mut first: BTreeMap<CellularOperator, (usize, CellularOperator)> = BTreeMap::new();
    let mut out = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for a in cache::faces_into(g.source()).iter() {
            let c = g.after(a)?;
            match first.get(&c) {
                Some((j, b)) if *j < i => out.push(Overlap { i, a: a.clone(), j: *j, b: b.clone() }),
                Some(_) => {}
                None => {
                    first.insert(c, (i, a.clone()));
                }
            }
        }
    }
    Ok(out)
}

fn horn_domain(shape: &ThetaShape, kind: HornKind) -> Result<(Subobject<CellularOperator>, HornTag)> {
    Ok(match kind {
        HornKind::Horizontal { k } => (horn_h(shape, k)?.domain, HornTag::horn_h(k)),
        HornKind::Vertical { k, i } => (horn_v(shape, k, i)?.domain, HornTag::horn_v(k, i)),
    })
}

fn instance<X: CellularSet>(x: &X, shape: &ThetaShape, kind: HornKind) -> Result<LiftInstance> {
    let (w, horn) = horn_domain(shape, kind)?;
    let rep = representable(shape, shape.dim());
    let gens = generators(&rep, &w);
    let laps = overlaps(&gens)?;
    let candidates: Vec<Vec<X::Cell>> = gens.iter().map(|g| x.cells_at(g.source())).collect();
    let boundaries: HashSet<Vec<X::Cell>> =
        x.cells_at(shape).iter().map(|y| gens.iter().map(|g| x.act(y, g)).collect()).collect();

    let mut inst = LiftInstance { shape: shape.to_string(), horn, maps: 0, filled: 0, unfilled: Vec::new() };
    let mut chosen: Vec<X::Cell> = Vec::with_capacity(gens.len());
    search(x, &candidates, &laps, &boundaries, &mut chosen, &mut inst);
    Ok(inst)
}

fn search<X: CellularSet>(
    x: &X,
    candidates: &[Vec<X::Cell>],
    laps: &[Overlap],
    boundaries: &HashSet<Vec<X::Cell>>,
    chosen: &mut Vec<X::Cell>,
    inst: &mut LiftInstance,
) {
    let i = chosen.len();
    if i == candidates.len() {
        inst.maps += 1;
        if boundaries.contains(chosen) {
            inst.filled += 1;
        } else if inst.unfilled.len() < MAX_WITNESSES {
            let v: Vec<String> = chosen.iter().map(|c| c.to_string()).collect();
            inst.unfilled.push(format!("({})", v.join(", ")));
        }
        return;
    }
    for c in &candidates[i] {
        let fits = laps.iter().filter(|o| o.i == i).all(|o| x.act(c, &o.a) == x.act(&chosen[o.j], &o.b));
        if fits {
            chosen.push(c.clone());
            search(x, candidates, laps, boundaries, chosen, inst);
            chosen.pop();
        }
    }
}

/// Enumerates the maps from each horn of `family` on a shape of dimension
/// at most `bound - 1` into `x` and searches for fillers. Horn maps are built
/// by assigning the generating faces of the horn in order and keeping only
/// assignments that agree on shared faces.
pub fn lift_check<X: CellularSet>(x: &X, family: &HornFamily, bound: usize) -> Result<LiftReport> {
    let top = bound.saturating_sub(1).min(x.bound());
    let mut instances = Vec::new();
    for (shape, kind) in family.members.iter().filter(|(s, _)| s.dim() <= top) {
        instances.push(instance(x, shape, *kind)?);
    }
    Ok(LiftReport {
        family: family.name.clone(),
        target: x.describe(),
        bound: x.bound(),
        certified_dim: top,
        instances,
    })
}
