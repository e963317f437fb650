use std::collections::{BTreeMap, BTreeSet};

use crate::boxprod::{horn_h_alt, horn_v, lambda_s, spine_s, upsilon_s};
use crate::cellset::{full, Representable, Subobject};
use crate::delta::Shuffle;
use crate::error::{Error, Result};
use crate::hyperface::{hyperfaces, inner_hyperface_labels, outer_hyperface_order, HyperfaceLabel};
use crate::theta::{CellularOperator, ThetaShape};

use super::admissible::{is_admissible, shuffles_in};
use super::gluing::Replay;
use super::pullback::pullback_of_faces;
use super::report::{HornTag, Report};
use super::spine::{labels_param, shape_params};

fn outer_ops(shape: &ThetaShape) -> Vec<CellularOperator> {
    hyperfaces(shape).into_iter().filter(|(l, _)| !l.is_inner(shape)).map(|(_, f)| f).collect()
}

/// Whether the outer part pulls back to the outer part: the pullback of
/// `Υ^∅` of the ambient along `phi` is `Υ^∅` of its source.
fn outer_square(shape: &ThetaShape, phi: &CellularOperator) -> bool {
    let p = phi.source();
    pullback_of_faces(&outer_ops(shape), phi) == upsilon_s(p, &[]).expect("empty set").domain
}

fn admissible(shape: &ThetaShape, t: &[HyperfaceLabel]) -> bool {
    is_admissible(shape, t).map(|a| a.admissible).unwrap_or(false)
}

fn require_poly_vertebral(shape: &ThetaShape) -> Result<()> {
    if shape.is_mono_vertebral() {
        return Err(Error::InvalidParameters(format!("{shape} is mono-vertebral")));
    }
    Ok(())
}

fn require_admissible(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Result<()> {
    if !is_admissible(shape, s)?.admissible {
        return Err(Error::InvalidParameters(format!("{} is not admissible on {shape}", labels_param(shape, s))));
    }
    Ok(())
}

fn extras(items: &[(&str, bool)]) -> BTreeMap<String, bool> {
    items.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// The pullbacks of the inner vertical hyperfaces in `earlier` along
/// `δv^{k;i}`: indices above `i` in slot `k` drop by one.
pub(crate) fn vertical_t(k: usize, i: usize, earlier: &[HyperfaceLabel]) -> Vec<HyperfaceLabel> {
    earlier
        .iter()
        .map(|l| match l {
            HyperfaceLabel::V { k: l2, i: j } if *l2 == k && *j > i => HyperfaceLabel::v(k, j - 1),
            other => other.clone(),
        })
        .collect()
}

/// The predicted `T` when `δh^{k;s}` is attached to `Υ^{S'}[n;q]`.
pub(crate) fn horizontal_t(
    shape: &ThetaShape,
    k: usize,
    s: &Shuffle,
    earlier: &[HyperfaceLabel],
) -> Vec<HyperfaceLabel> {
    let n = shape.n();
    let p = HyperfaceLabel::hk(k, s.clone()).source_shape(shape).expect("label exists");
    let mut t = BTreeSet::new();
    let full_at = |l: usize| shuffles_in(earlier, l).len() == Shuffle::all(shape.q(l), shape.q(l + 1)).len();
    for l in 1..k {
        if full_at(l) {
            for g in Shuffle::all(p.q(l), p.q(l + 1)) {
                t.insert(HyperfaceLabel::hk(l, g));
            }
        }
    }
    for l in k + 1..n {
        if full_at(l) {
            for g in Shuffle::all(p.q(l - 1), p.q(l)) {
                t.insert(HyperfaceLabel::hk(l - 1, g));
            }
        }
    }
    for j in s.lower_corners() {
        t.insert(HyperfaceLabel::v(k, j));
    }
    for l in earlier {
        if let HyperfaceLabel::V { k: l2, i } = l {
            let (l2, i) = (*l2, *i);
            if l2 < k {
                t.insert(HyperfaceLabel::v(l2, i));
            } else if l2 > k + 1 {
                t.insert(HyperfaceLabel::v(l2 - 1, i));
            } else {
                let pre = if l2 == k { s.alpha_preimage(i) } else { s.alpha_prime_preimage(i) };
                if let [j] = pre[..] {
                    t.insert(HyperfaceLabel::v(k, j));
                }
            }
        }
    }
    t.into_iter().collect()
}

fn upsilon_base(shape: &ThetaShape, r: &mut Replay<'_, Representable>) {
    let outer = outer_hyperface_order(shape);
    let same = upsilon_s(shape, &[]).expect("empty set").domain == spine_s(shape, &outer).expect("outer labels").domain;
    r.note("upsilon_empty_contains_spine", same);
}

fn glue_vertical(
    shape: &ThetaShape,
    r: &mut Replay<'_, Representable>,
    k: usize,
    i: usize,
    earlier: &[HyperfaceLabel],
) -> Result<()> {
    let delta = HyperfaceLabel::v(k, i);
    let phi = delta.operator(shape)?;
    let p = phi.source().clone();
    let t = vertical_t(k, i, earlier);
    let w = upsilon_s(&p, &t)?.domain;
    let extra = extras(&[
        ("outer_square", outer_square(shape, &phi)),
        ("t_admissible", admissible(&p, &t)),
        ("t_smaller", t.len() == earlier.len()),
    ]);
    r.glue_cell(&delta.display_on(shape), &phi, &w, HornTag::with_set("upsilon", &p, &t), extra);
    Ok(())
}

fn vertical_part(s: &[HyperfaceLabel]) -> Vec<HyperfaceLabel> {
    let mut v: Vec<HyperfaceLabel> = s.iter().filter(|l| !l.is_horizontal()).cloned().collect();
    v.sort();
    v
}

/// Replays `Υ^∅[n;q] ↪ Υ^S[n;q]` for an admissible set `S` of inner
/// vertical hyperfaces, attaching them in lexicographic order.
pub fn upsilon_vertical(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Result<Report> {
    require_poly_vertebral(shape)?;
    if s.iter().any(|l| l.is_horizontal()) {
        return Err(Error::InvalidParameters("expected vertical hyperfaces only".into()));
    }
    require_admissible(shape, s)?;
    let x = Representable::full(shape);
    let mut r = Replay::new(&x, upsilon_s(shape, &[])?.domain);
    upsilon_base(shape, &mut r);
    let order = vertical_part(s);
    for t in 0..order.len() {
        if let HyperfaceLabel::V { k, i } = order[t] {
            glue_vertical(shape, &mut r, k, i, &order[..t])?;
        }
    }
    let mut params = shape_params(shape);
    params.insert("set".to_string(), labels_param(shape, s));
    Ok(r.finish("upsilon_vertical", params, "lexicographic in (k, i)", &upsilon_s(shape, s)?.domain, None))
}

/// The order in which the horizontal members of `s` are removed: `k = k_S`
/// when it exists (else the smallest `k` present), and a maximal shuffle,
/// the lexicographically largest among the maximal ones.
fn horizontal_removals(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Vec<(usize, Shuffle)> {
    let mut cur: Vec<HyperfaceLabel> = s.to_vec();
    let mut out = Vec::new();
    loop {
        let ks: Vec<usize> = (1..shape.n()).filter(|&k| !shuffles_in(&cur, k).is_empty()).collect();
        if ks.is_empty() {
            return out;
        }
        let k = is_admissible(shape, &cur).ok().and_then(|a| a.k_s).unwrap_or(ks[0]);
        let have = shuffles_in(&cur, k);
        let top = have.iter().filter(|x| !have.iter().any(|y| y != *x && x.is_below(y))).max().unwrap().clone();
        let label = HyperfaceLabel::hk(k, top.clone());
        cur.retain(|l| l != &label);
        out.push((k, top));
    }
}

/// Replays `Υ^∅[n;q] ↪ Υ^S[n;q]` for an admissible set `S` of inner
/// hyperfaces: the vertical members first, then the horizontal ones in the
/// reverse of their removal order.
pub fn upsilon_full(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Result<Report> {
    require_poly_vertebral(shape)?;
    require_admissible(shape, s)?;
    let x = Representable::full(shape);
    let mut r = Replay::new(&x, upsilon_s(shape, &[])?.domain);
    upsilon_base(shape, &mut r);
    let verticals = vertical_part(s);
    for t in 0..verticals.len() {
        if let HyperfaceLabel::V { k, i } = verticals[t] {
            glue_vertical(shape, &mut r, k, i, &verticals[..t])?;
        }
    }
    let mut current = verticals.clone();
    for (k, sh) in horizontal_removals(shape, s).into_iter().rev() {
        let delta = HyperfaceLabel::hk(k, sh.clone());
        let phi = delta.operator(shape)?;
        let p = phi.source().clone();
        let t = horizontal_t(shape, k, &sh, &current);
        let w = upsilon_s(&p, &t)?.domain;
        current.push(delta.clone());
        let extra = extras(&[
            ("outer_square", outer_square(shape, &phi)),
            ("t_admissible", admissible(&p, &t)),
            ("s_admissible", admissible(shape, &current)),
        ]);
        r.glue_cell(&delta.display_on(shape), &phi, &w, HornTag::with_set("upsilon", &p, &t), extra);
    }
    let mut params = shape_params(shape);
    params.insert("set".to_string(), labels_param(shape, s));
    let order = "vertical members lexicographically, then horizontal members in reverse removal order (k_S first, maximal shuffle, lexicographically largest)";
    Ok(r.finish("upsilon_full", params, order, &upsilon_s(shape, s)?.domain, None))
}

/// Replays `Λ^S[n;q] ↪ Θ₂[n;q]` as a composite of pushouts of vertical horns
/// and alternative horizontal horns, for `S` a nonempty set of inner
/// `k`-th vertical hyperfaces or a nonempty upward closed set of `k`-th
/// horizontal hyperfaces.
pub fn oury_from_alt(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Result<Report> {
    let bad = || Error::InvalidParameters(format!("{} is not a valid set for {shape}", labels_param(shape, s)));
    let first = s.first().ok_or_else(bad)?;
    let x = Representable::full(shape);
    let mut r = Replay::new(&x, lambda_s(shape, s)?.domain);
    match first {
        HyperfaceLabel::V { k, .. } => {
            let k = *k;
            let mut idx = Vec::new();
            for l in s {
                match l {
                    HyperfaceLabel::V { k: k2, i } if *k2 == k && l.is_inner(shape) => idx.push(*i),
                    _ => return Err(bad()),
                }
            }
            idx.sort();
            idx.dedup();
            while idx.len() >= 2 {
                let i = idx[0];
                let delta = HyperfaceLabel::v(k, i);
                let phi = delta.operator(shape)?;
                let t: Vec<HyperfaceLabel> = idx
                    .iter()
                    .filter(|&&j| j != i)
                    .map(|&j| HyperfaceLabel::v(k, if j > i { j - 1 } else { j }))
                    .collect();
                let w = lambda_s(phi.source(), &t)?.domain;
                let tag = HornTag::with_set("lambda", phi.source(), &t);
                let extra = extras(&[("t_smaller", t.len() + 1 == idx.len())]);
                r.glue_cell(&delta.display_on(shape), &phi, &w, tag, extra);
                idx.remove(0);
            }
            let i = idx[0];
            r.glue_cell(
                "last",
                &CellularOperator::identity(shape),
                &horn_v(shape, k, i)?.domain,
                HornTag::horn_v(k, i),
                BTreeMap::new(),
            );
        }
        HyperfaceLabel::Hk { k, .. } => {
            let k = *k;
            if s.iter().any(|l| !matches!(l, HyperfaceLabel::Hk { k: k2, .. } if *k2 == k)) {
                return Err(bad());
            }
            let mut have = shuffles_in(s, k);
            let all = Shuffle::all(shape.q(k), shape.q(k + 1));
            if have.iter().any(|x| all.iter().any(|y| x.is_below(y) && !have.contains(y))) {
                return Err(bad());
            }
            have.sort();
            have.dedup();
            while have.len() >= 2 {
                let a = have.iter().filter(|x| !have.iter().any(|y| y != *x && y.is_below(x))).min().unwrap().clone();
                let delta = HyperfaceLabel::hk(k, a.clone());
                let phi = delta.operator(shape)?;
                let t: Vec<HyperfaceLabel> = a.upper_corners().into_iter().map(|i| HyperfaceLabel::v(k, i)).collect();
                let w = lambda_s(phi.source(), &t)?.domain;
                let tag = HornTag::with_set("lambda", phi.source(), &t);
                let extra = extras(&[("t_nonempty", !t.is_empty())]);
                r.glue_cell(&delta.display_on(shape), &phi, &w, tag, extra);
                have.retain(|x| x != &a);
            }
            let a = &have[0];
            r.glue_cell(
                "last",
                &CellularOperator::identity(shape),
                &horn_h_alt(shape, k, a)?.domain,
                HornTag::horn_h_alt(k, a),
                BTreeMap::new(),
            );
        }
        _ => return Err(bad()),
    }
    let mut params = shape_params(shape);
    params.insert("set".to_string(), labels_param(shape, s));
    let order = "smallest index (vertical) or lexicographically smallest minimal shuffle (horizontal) first";
    Ok(r.finish("oury_from_alt", params, order, &full(&x), None))
}

/// The predicted `T` when `δh^{k;b}` is attached to `Λ^{S'}[n;q]` inside the
/// decomposition for the alternative horn at `a`.
pub(crate) fn alternative_t(shape: &ThetaShape, k: usize, a: &Shuffle, b: &Shuffle) -> Vec<HyperfaceLabel> {
    let p = HyperfaceLabel::hk(k, b.clone()).source_shape(shape).expect("label exists");
    let mut t = BTreeSet::new();
    for l in 1..p.n() {
        for g in Shuffle::all(p.q(l), p.q(l + 1)) {
            t.insert(HyperfaceLabel::hk(l, g));
        }
    }
    for j in b.upper_corners() {
        t.insert(HyperfaceLabel::v(k, j));
    }
    for l in 1..=p.n() {
        if l != k {
            for j in 1..p.q(l) {
                t.insert(HyperfaceLabel::v(l, j));
            }
        }
    }
    for i in 1..shape.q(k) {
        if let [j] = b.alpha_preimage(i)[..] {
            t.insert(HyperfaceLabel::v(k, j));
        }
    }
    for i in 1..shape.q(k + 1) {
        if let [j] = b.alpha_prime_preimage(i)[..] {
            t.insert(HyperfaceLabel::v(k, j));
        }
    }
    for j in b.lower_corners() {
        if b.alpha()[j] == a.alpha()[j] {
            t.insert(HyperfaceLabel::v(k, j));
        }
    }
    t.into_iter().collect()
}

/// Replays `Λ^{S_I}[n;q] ↪ Λ^S[n;q]` where `I` is the set of shuffles above
/// `a`, `S_I` its `k`-th horizontal hyperfaces and `S` those of a nonempty
/// downward closed `I_S ⊂ I`. The start `Λ^{S_I}` is `Υ` of an admissible set.
pub fn alt_trivial(shape: &ThetaShape, k: usize, a: &Shuffle, i_s: &[Shuffle]) -> Result<Report> {
    if k == 0 || k >= shape.n() {
        return Err(Error::OutOfRange { index: k, lo: 1, hi: shape.n().saturating_sub(1) });
    }
    let all = Shuffle::all(shape.q(k), shape.q(k + 1));
    if !all.contains(a) {
        return Err(Error::InvalidParameters(format!("{a} is not a ({},{})-shuffle", shape.q(k), shape.q(k + 1))));
    }
    let i_set: Vec<Shuffle> = all.iter().filter(|b| a.is_below(b)).cloned().collect();
    let downward =
        i_s.iter().all(|x| i_set.contains(x) && i_set.iter().filter(|y| y.is_below(x)).all(|y| i_s.contains(y)));
    if i_s.is_empty() || !downward {
        return Err(Error::InvalidParameters(
            "I_S must be a nonempty downward closed subset of the shuffles above a".into(),
        ));
    }
    let labels =
        |set: &[Shuffle]| -> Vec<HyperfaceLabel> { set.iter().map(|b| HyperfaceLabel::hk(k, b.clone())).collect() };

    let x = Representable::full(shape);
    let s_i = labels(&i_set);
    let mut r = Replay::new(&x, lambda_s(shape, &s_i)?.domain);
    let rest: Vec<HyperfaceLabel> = inner_hyperface_labels(shape).into_iter().filter(|l| !s_i.contains(l)).collect();
    r.note("base_admissible", admissible(shape, &rest));
    r.note("base_is_upsilon", lambda_s(shape, &s_i)?.domain == upsilon_s(shape, &rest)?.domain);

    let mut grow: Vec<Shuffle> = i_s.to_vec();
    let mut adds = Vec::new();
    while grow.len() < i_set.len() {
        let left: Vec<&Shuffle> = i_set.iter().filter(|b| !grow.contains(b)).collect();
        let b = left.iter().filter(|x| !left.iter().any(|y| y != *x && y.is_below(x))).min().unwrap();
        adds.push((*b).clone());
        grow.push((*b).clone());
    }
    for b in adds.iter().rev() {
        let delta = HyperfaceLabel::hk(k, b.clone());
        let phi = delta.operator(shape)?;
        let p = phi.source().clone();
        let t = alternative_t(shape, k, a, b);
        let w = upsilon_s(&p, &t)?.domain;
        let extra = extras(&[("outer_square", outer_square(shape, &phi)), ("t_admissible", admissible(&p, &t))]);
        r.glue_cell(&delta.display_on(shape), &phi, &w, HornTag::with_set("upsilon", &p, &t), extra);
    }
    let target: Subobject<CellularOperator> = lambda_s(shape, &labels(i_s))?.domain;
    let mut params = shape_params(shape);
    params.insert("k".to_string(), k.to_string());
    params.insert("shuffle".to_string(), a.to_string());
    params
        .insert("i_s".to_string(), format!("{{{}}}", i_s.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", ")));
    let order = "removed shuffles re-added from the last removed; each removal takes the lexicographically smallest minimal shuffle";
    Ok(r.finish("alt_trivial", params, order, &target, None))
}
