use std::collections::BTreeMap;

use crate::boxprod::{horn_h, horn_v, spine, spine_s};
use crate::cache;
use crate::cellset::{closure, full, Representable, Subobject};
use crate::error::{Error, Result};
use crate::hyperface::{h0_face, hn_face, outer_hyperface_order, vertebrae, HyperfaceLabel};
use crate::theta::{CellularOperator, ThetaShape};

use super::gluing::Replay;
use super::report::{HornTag, Report};

pub(crate) const DIM_LEX: &str = "increasing dimension, ties by lexicographic operator order";

pub(crate) fn shape_params(shape: &ThetaShape) -> BTreeMap<String, String> {
    let mut p = BTreeMap::new();
    p.insert("shape".to_string(), shape.to_string());
    p
}

pub(crate) fn labels_param(shape: &ThetaShape, s: &[HyperfaceLabel]) -> String {
    let v: Vec<String> = s.iter().map(|l| l.display_on(shape)).collect();
    format!("{{{}}}", v.join(", "))
}

/// `Σ'[n;q]`: the spine together with `[δⁿ; id]`.
fn spine_with_last_edge(shape: &ThetaShape) -> Subobject<CellularOperator> {
    let mut gens = vertebrae(shape);
    gens.push(hn_face(shape));
    closure(&Representable::full(shape), &gens).expect("faces of the shape")
}

/// Replays the decomposition of `Σ[n;q] ↪ Θ₂[n;q]`.
///
/// For `[1;q]`: attach `δv^{1;q}` along `Σ[1;q-1]`, then `δv^{1;0}` along
/// `Σ[1;q-1] ∪ δv^{1;q-1}`, then every `[id;α]` with `0, 1, q ∈ im α` along
/// `Λv^{1;1}`. For `n ≥ 2`: attach `[δⁿ;id]` along the spine, `[δ⁰;id]`
/// along the spine with its last edge, then every face whose horizontal part
/// hits `0, 1, n` along `Λh^1`.
pub fn spine_anodyne(shape: &ThetaShape) -> Result<Report> {
    let x = Representable::full(shape);
    let mut r = Replay::new(&x, spine(shape).domain);
    let n = shape.n();
    if !shape.is_mono_vertebral() && n >= 1 {
        if n == 1 {
            let q = shape.q(1);
            let lower = shape.with_q(1, q - 1);
            let top = HyperfaceLabel::v(1, q);
            r.glue_cell(
                "dagger",
                &top.operator(shape)?,
                &spine(&lower).domain,
                HornTag::named("spine"),
                BTreeMap::new(),
            );
            let bottom = HyperfaceLabel::v(1, 0);
            let w = spine_s(&lower, &[HyperfaceLabel::v(1, q - 1)])?.domain;
            r.glue_cell("double_dagger", &bottom.operator(shape)?, &w, HornTag::named("spine_dagger"), BTreeMap::new());
            for f in cache::faces_into(shape).iter() {
                let hits = |v: usize| {
                    f.horizontal().is_identity() && f.component(1).map(|c| c.values().contains(&v)).unwrap_or(false)
                };
                if hits(0) && hits(1) && hits(q) {
                    let w = horn_v(f.source(), 1, 1)?.domain;
                    r.glue_cell("fill", f, &w, HornTag::horn_v(1, 1), BTreeMap::new());
                }
            }
        } else {
            let last = hn_face(shape);
            r.glue_cell("prime", &last, &spine(last.source()).domain, HornTag::named("spine"), BTreeMap::new());
            let first = h0_face(shape);
            let w = spine_with_last_edge(first.source());
            r.glue_cell("double_prime", &first, &w, HornTag::named("spine_prime"), BTreeMap::new());
            for f in cache::faces_into(shape).iter() {
                let img = f.horizontal().values();
                if img.contains(&0) && img.contains(&1) && img.contains(&n) {
                    let w = horn_h(f.source(), 1)?.domain;
                    r.glue_cell("fill", f, &w, HornTag::horn_h(1), BTreeMap::new());
                }
            }
        }
    }
    Ok(r.finish("spine_anodyne", shape_params(shape), DIM_LEX, &full(&x), None))
}

/// The predicted pullback `Σ^T[m;p]` when the `≺`-largest element `delta`
/// of a downward closed set is attached to `Σ^{S'}[n;q]`.
pub(crate) fn sigma_predicted_t(
    shape: &ThetaShape,
    delta: &HyperfaceLabel,
    earlier: &[HyperfaceLabel],
) -> Result<(ThetaShape, Vec<HyperfaceLabel>)> {
    let n = shape.n();
    let p = delta.source_shape(shape)?;
    let v = HyperfaceLabel::v;
    let mut t = Vec::new();
    match delta {
        HyperfaceLabel::V { k, i: 0 } => {
            for l in 1..*k {
                if p.q(l) >= 1 {
                    t.push(v(l, 0));
                }
            }
        }
        HyperfaceLabel::H0 => {
            for l in 1..=p.n() {
                if p.q(l) >= 1 {
                    t.push(v(l, 0));
                }
            }
        }
        HyperfaceLabel::Hn => {
            for l in 1..=p.n() {
                if p.q(l) >= 1 {
                    t.push(v(l, 0));
                }
            }
            if earlier.contains(&HyperfaceLabel::H0) {
                t.push(HyperfaceLabel::H0);
            }
        }
        HyperfaceLabel::V { k, i } if *i == shape.q(*k) => {
            // The four sub-cases (q_k ≥ 2, or q_k = 1 with k = 1, k = n or
            // 1 < k < n) differ in how the pullback arises but share T.
            for l in 1..=n {
                if p.q(l) >= 1 {
                    t.push(v(l, 0));
                }
            }
            for l in 1..*k {
                if p.q(l) >= 1 {
                    t.push(v(l, p.q(l)));
                }
            }
            if p.q(1) == 0 {
                t.push(HyperfaceLabel::H0);
            }
            if p.q(n) == 0 {
                t.push(HyperfaceLabel::Hn);
            }
        }
        other => {
            return Err(Error::InvalidParameters(format!(
                "{} is not an outer hyperface of {shape}",
                other.display_on(shape)
            )));
        }
    }
    t.sort();
    t.dedup();
    Ok((p, t))
}

/// Replays `Σ[n;q] ↪ Σ^S[n;q]` for a `≺`-downward closed set `S` of outer
/// hyperfaces, attaching the elements of `S` in `≺`-order.
pub fn sigma_s(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Result<Report> {
    let order = outer_hyperface_order(shape);
    let len = s.len();
    if len > order.len() || order[..len].iter().any(|l| !s.contains(l)) {
        return Err(Error::InvalidParameters(format!(
            "{} is not downward closed for ≺ on {shape}",
            labels_param(shape, s)
        )));
    }
    let x = Representable::full(shape);
    let mut r = Replay::new(&x, spine(shape).domain);
    if !shape.is_mono_vertebral() {
        for t in 0..len {
            let delta = &order[t];
            let (p, tset) = sigma_predicted_t(shape, delta, &order[..t])?;
            let w = spine_s(&p, &tset)?.domain;
            let horn = HornTag::with_set("spine_s", &p, &tset);
            r.glue_cell(&delta.display_on(shape), &delta.operator(shape)?, &w, horn, BTreeMap::new());
        }
    }
    let target = spine_s(shape, s)?.domain;
    let mut params = shape_params(shape);
    params.insert("set".to_string(), labels_param(shape, s));
    Ok(r.finish("sigma_s", params, "≺-increasing", &target, None))
}
