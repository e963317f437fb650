use std::collections::{BTreeMap, BTreeSet};

use crate::boxprod::{equiv_horiz, equiv_vert, horn_h, horn_v, k_phi, BoxCell, BoxProduct};
use crate::cellset::{closure, full, nondegenerate_cells, truncate, Subobject};
use crate::delta::SimplicialOperator;
use crate::error::{Error, Result};
use crate::theta::{CellularOperator, ThetaShape};

use super::gluing::Replay;
use super::report::{HornTag, Report};

const DIAMOND: usize = 1;

fn has_diamond(c: &BoxCell, k: usize) -> bool {
    c.component(k).is_some_and(|v| v.contains(&DIAMOND))
}

fn diamonds(c: &BoxCell, k: usize) -> usize {
    c.component(k).map_or(0, |v| v.iter().filter(|&&x| x == DIAMOND).count())
}

fn surjective(c: &BoxCell, l: usize, q: usize) -> bool {
    c.component(l).is_some_and(|v| (0..=q).all(|x| v.contains(&x)))
}

fn is_coface(a: &SimplicialOperator, k: usize) -> bool {
    a.source() + 1 == a.target() && a.is_mono() && !a.values().contains(&k)
}

fn by_dim<T>(cells: &mut [BoxCell], key: impl Fn(&BoxCell) -> T)
where
    T: Ord,
{
    cells.sort_by(|a, b| (a.shape().dim(), key(a), a).cmp(&(b.shape().dim(), key(b), b)));
}

fn params(shape: &ThetaShape, k: Option<usize>, bound: usize) -> BTreeMap<String, String> {
    let mut p = BTreeMap::new();
    p.insert("shape".to_string(), shape.to_string());
    if let Some(k) = k {
        p.insert("k".to_string(), k.to_string());
    }
    p.insert("bound".to_string(), bound.to_string());
    p
}

fn glue_h(r: &mut Replay<'_, BoxProduct>, stage: &str, c: &BoxCell, l: usize) -> Result<()> {
    let w = horn_h(c.shape(), l)?.domain;
    r.glue_cell(stage, c, &w, HornTag::horn_h(l), BTreeMap::new());
    Ok(())
}

/// `δ^k ∘ a` with the `k`-th fiber kept in slot `k` and `Δ[0]` inserted in
/// slot `k+1`: the map `Φᵏ[n-1;p] -> Φᵏ[n;q]` when `q_{k+1} = 0`.
fn insert_slot(c: &BoxCell, k: usize, n: usize) -> BoxCell {
    let a = c.alpha();
    let alpha = SimplicialOperator::new(a.values().iter().map(|&v| if v < k { v } else { v + 1 }).collect(), n)
        .expect("coface composite");
    let mut comps = Vec::new();
    for t in alpha.first() + 1..=alpha.last() {
        let v = match t.cmp(&(k + 1)) {
            std::cmp::Ordering::Less => c.component(t).unwrap().to_vec(),
            std::cmp::Ordering::Equal => vec![0; c.component(k).unwrap().len()],
            std::cmp::Ordering::Greater => c.component(t - 1).unwrap().to_vec(),
        };
        comps.push(v);
    }
    BoxCell::raw(alpha, comps, Vec::new(), c.shape().clone())
}

/// `Θ₂[1;J] -> Φᵏ[n;q]` through `{k-1, k}`.
fn shift_edge(c: &BoxCell, k: usize, n: usize) -> BoxCell {
    let alpha = SimplicialOperator::new(c.alpha().values().iter().map(|&v| v + k - 1).collect(), n).expect("edge");
    let comps = c.component(1).map(|v| vec![v.to_vec()]).unwrap_or_default();
    BoxCell::raw(alpha, comps, Vec::new(), c.shape().clone())
}

/// Extra dimensions the ambient needs so that every cell of dimension below
/// the bound is reached: a cell attached along `Λh^ℓ` brings in faces of
/// codimension up to one more than the number of simultaneous steps of the
/// two merged fibers, and on the side of the standard fibers there are at
/// most `Σ q_ℓ` steps.
fn headroom(shape: &ThetaShape) -> usize {
    shape.qs().iter().sum()
}

/// Replays `Ψᵏ[n;q] ↪ Φᵏ[n;q]` (with `q_k = 0`) truncated at `bound`.
///
/// From `Θ₂[n;q]`, glued along its `◊`-corner, the script attaches
/// `Θ₂[1;J]` along `{k-1,k}`, then the cells of stages (1a-d), (2a-e) and
/// (3a-c) along `Λh^{m-1}`, `Λh^ℓ` and `Λh^k`. It then forks: the `Φ` branch
/// attaches the remaining `[id;α]` along `Λh^k`; the `Ψ` branch attaches
/// `Φᵏ[n-1;p]` through `δ^k` when `q_{k+1} = 0` and otherwise the cells
/// (4a-e) along `Λv^{k;j_α}`, ordered by dimension and then by the number of
/// `♦`. The ambient is truncated at `bound + Σ q_ℓ` and both branches are
/// compared with their targets through `bound - 1`. Cells in the top layer
/// of the ambient have pullbacks compared only through `bound - 1`, since
/// some of their faces would arrive with cells above the truncation.
/// For `k = n ≥ 2` the dual script runs on the reversed shape.
pub fn vert_equiv(shape: &ThetaShape, k: usize, bound: usize) -> Result<Report> {
    let n = shape.n();
    let ambient = bound + headroom(shape);
    let psi = equiv_vert(shape, k, ambient)?.inclusion.domain;
    if n >= 2 && k == n {
        let mut rep = vert_equiv(&shape.reversed(), 1, bound)?;
        rep.params = params(shape, Some(k), bound);
        rep.params.insert("dual".to_string(), format!("op,k=1,{}", shape.reversed()));
        return Ok(rep);
    }
    let d = bound.saturating_sub(1);
    let phi = BoxProduct::phi(shape, k, ambient);

    if n == 1 {
        let mut r = Replay::new(&phi, psi.clone());
        let theta = closure(&phi, &[BoxCell::from_operator(&CellularOperator::identity(shape))])?;
        r.note("psi_is_theta", psi == theta);
        let src = BoxProduct::suspension_j(ambient);
        r.glue_map("e", &src, "[id;e]".to_string(), |c| c.clone(), &psi, HornTag::named("id_e"), BTreeMap::new());
        return Ok(r.finish("vert_equiv", params(shape, Some(k), bound), "single step", &full(&phi), Some(d)));
    }

    let start = closure(&phi, &[BoxCell::from_operator(&CellularOperator::identity(shape))])?;
    let cells = nondegenerate_cells(&phi);
    let theta_direct: BTreeSet<BoxCell> = cells.iter().filter(|c| !has_diamond(c, k)).cloned().collect();
    let mut r = Replay::new(&phi, start.clone()).with_top_layer(ambient, d);
    r.note("start_is_diamond_free", start.cells() == &theta_direct);

    let edge = BoxProduct::phi(&ThetaShape::new(vec![0]), 1, ambient);
    let edge_w = equiv_vert(&ThetaShape::new(vec![0]), 1, ambient)?.inclusion.domain;
    r.glue_map(
        "x0",
        &edge,
        format!("[{{{},{k}}};J]", k - 1),
        |c| shift_edge(c, k, n),
        &edge_w,
        HornTag::named("id_e"),
        BTreeMap::new(),
    );

    let a = |c: &BoxCell| c.alpha().values().to_vec();
    let mut s1: Vec<BoxCell> = cells
        .iter()
        .filter(|c| {
            let v = a(c);
            let m = v.len() - 1;
            m >= 1 && v[0] + 1 < k && v[m] == k && has_diamond(c, k) && v[m - 1] == k - 1
        })
        .cloned()
        .collect();
    by_dim(&mut s1, |_| ());
    for c in &s1 {
        glue_h(&mut r, "x1", c, c.shape().n() - 1)?;
    }

    let mut s2: Vec<(BoxCell, usize)> = cells
        .iter()
        .filter_map(|c| {
            let v = a(c);
            let m = v.len() - 1;
            let ok = v[0] < k && v[m] > k && !c.alpha().is_identity() && !is_coface(c.alpha(), k) && has_diamond(c, k);
            let l = (1..m).find(|&l| v[l] == k)?;
            ok.then(|| (c.clone(), l))
        })
        .collect();
    s2.sort_by(|x, y| (x.0.shape().dim(), &x.0).cmp(&(y.0.shape().dim(), &y.0)));
    for (c, l) in &s2 {
        glue_h(&mut r, "x2", c, *l)?;
    }

    let ids: Vec<&BoxCell> = cells.iter().filter(|c| c.alpha().is_identity() && has_diamond(c, k)).collect();
    let full_rank = |c: &BoxCell| (1..=n).filter(|&l| l != k).all(|l| surjective(c, l, shape.q(l)));
    let mut s3: Vec<BoxCell> = ids.iter().filter(|c| !full_rank(c)).map(|c| (*c).clone()).collect();
    by_dim(&mut s3, |_| ());
    for c in &s3 {
        glue_h(&mut r, "x3", c, k)?;
    }
    let prefix = r.steps().len();

    let mut rp = r.fork();
    let mut rest: Vec<BoxCell> = ids.iter().filter(|c| full_rank(c)).map(|c| (*c).clone()).collect();
    by_dim(&mut rest, |_| ());
    for c in &rest {
        glue_h(&mut rp, "phi", c, k)?;
    }
    let phi_report = rp.finish("vert_equiv", BTreeMap::new(), "", &full(&phi), Some(d));

    if shape.q(k + 1) == 0 {
        let p = ThetaShape::new(shape.qs().iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &q)| q).collect());
        let small = equiv_vert(&p, k, ambient)?;
        let name = format!("[δ^{k};!]");
        r.glue_map(
            "psi",
            &small.inclusion.codomain,
            name,
            |c| insert_slot(c, k, n),
            &small.inclusion.domain,
            HornTag::named("equiv_vert"),
            BTreeMap::new(),
        );
    } else {
        let mut s4: Vec<(BoxCell, usize)> = cells
            .iter()
            .filter(|c| is_coface(c.alpha(), k) && has_diamond(c, k))
            .filter(|c| {
                (1..=n)
                    .filter(|&l| l != k && l != k + 1)
                    .all(|l| c.component(l).is_some_and(|v| v.iter().enumerate().all(|(i, &x)| i == x)))
                    && surjective(c, k + 1, shape.q(k + 1))
            })
            .filter_map(|c| {
                let ak = c.component(k)?;
                let ak1 = c.component(k + 1)?;
                let last = ak.iter().rposition(|&x| x == DIAMOND)?;
                let i = ak1[last];
                let j = if i >= 1 { ak1.iter().position(|&x| x == i)? } else { ak1.iter().rposition(|&x| x == 0)? };
                (ak[j] != DIAMOND).then(|| (c.clone(), j))
            })
            .collect();
        s4.sort_by(|x, y| {
            (x.0.shape().dim(), diamonds(&x.0, k), &x.0).cmp(&(y.0.shape().dim(), diamonds(&y.0, k), &y.0))
        });
        for (c, j) in &s4 {
            let w = horn_v(c.shape(), k, *j)?.domain;
            r.glue_cell("psi", c, &w, HornTag::horn_v(k, *j), BTreeMap::new());
        }
    }
    let order = "stages in turn; within a stage increasing dimension, then (for the Ψ branch) number of ♦, then lexicographic cell order";
    let mut rep = r.finish("vert_equiv", params(shape, Some(k), bound), order, &psi, Some(d));
    rep.base.insert("psi_branch_equals_target".to_string(), rep.final_check.equals_target);
    rep.base.insert("phi_branch_equals_target".to_string(), phi_report.final_check.equals_target);
    for (key, ok) in phi_report.base {
        let e = rep.base.entry(key).or_insert(true);
        *e = *e && ok;
    }
    let offset = rep.steps.len();
    for (i, mut s) in phi_report.steps.into_iter().skip(prefix).enumerate() {
        s.index = offset + i;
        rep.steps.push(s);
    }
    rep.final_check.equals_target = rep.final_check.equals_target && phi_report.final_check.equals_target;
    rep.settle();
    Ok(rep)
}

fn contains_top_diamond(c: &BoxCell, n: usize) -> bool {
    c.alpha().values().iter().zip(c.label()).any(|(&v, &x)| v == n && x == DIAMOND)
}

/// Replays `e ×̂ (∂Θ₂[n;q] ↪ Θ₂[n;q])` truncated at `bound`: first the cells
/// avoiding the vertex `(♦, n)` with `φ(k_φ)` and `φ(k_φ - 1)` over the same
/// vertex, along `Λh^{k_φ}` with `k_φ` just after the last `♦`; then the
/// cells whose first vertex over `n` is labelled `◊`, along `Λh^{k_φ}` with
/// `k_φ` that vertex. Certified through `bound - 1`.
pub fn horiz_equiv(shape: &ThetaShape, bound: usize) -> Result<Report> {
    if shape.n() == 0 {
        return Err(Error::InvalidParameters("the point has no horizontal equivalence extension to replay".into()));
    }
    let n = shape.n();
    let inc = equiv_horiz(shape, bound).inclusion;
    let z = &inc.codomain;
    let d = bound.saturating_sub(1);
    let cells = nondegenerate_cells(z);
    let mut r = Replay::new(z, inc.domain.clone());

    let y: BTreeSet<BoxCell> =
        cells.iter().filter(|c| inc.domain.contains_nondegenerate(c) || !contains_top_diamond(c, n)).cloned().collect();
    let y = Subobject::from_closed(y);

    let mut s1: Vec<(BoxCell, usize)> = cells
        .iter()
        .filter(|c| !inc.domain.contains_nondegenerate(c) && !contains_top_diamond(c, n))
        .filter_map(|c| {
            let kp = k_phi(c)?;
            let v = c.alpha().values();
            (v[kp] == v[kp - 1]).then(|| (c.clone(), kp))
        })
        .collect();
    let count = |c: &BoxCell| c.label().iter().filter(|&&x| x == DIAMOND).count();
    s1.sort_by(|x, y| (x.0.shape().dim(), count(&x.0), &x.0).cmp(&(y.0.shape().dim(), count(&y.0), &y.0)));
    for (c, kp) in &s1 {
        glue_h(&mut r, "dagger", c, *kp)?;
    }
    let reached_y = truncate(z, r.current(), d) == truncate(z, &y, d);
    r.note("stage1_equals_y", reached_y);

    let mut s2: Vec<(BoxCell, usize)> = cells
        .iter()
        .filter(|c| !y.contains_nondegenerate(c))
        .filter_map(|c| {
            let kp = c.alpha().values().iter().position(|&v| v == n)?;
            (c.label()[kp] != DIAMOND).then(|| (c.clone(), kp))
        })
        .collect();
    s2.sort_by(|x, y| (x.0.shape().dim(), &x.0).cmp(&(y.0.shape().dim(), &y.0)));
    for (c, kp) in &s2 {
        glue_h(&mut r, "double_dagger", c, *kp)?;
    }
    let order = "(†) cells by dimension then number of ♦, then (‡) cells by dimension; ties lexicographic";
    Ok(r.finish("horiz_equiv", params(shape, None, bound), order, &full(z), Some(d)))
}
