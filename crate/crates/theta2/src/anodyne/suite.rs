//! The fixed batches of replays, claims and equivalence checks run by
//! `verify all` and the acceptance target.

use crate::delta::Shuffle;
use crate::error::Result;
use crate::hyperface::HyperfaceLabel;
use crate::theta::ThetaShape;

use super::{
    admissible_sets, alt_trivial, claims_alternative, claims_inner, horiz_equiv, lambda_horizontal_upward_sets,
    oury_from_alt, sigma_downward_sets, sigma_s, spine_anodyne, upsilon_full, upsilon_vertical, vert_equiv, ClaimCheck,
    Report,
};

/// Shapes checked by `vert_equiv`, with every `k` such that `q_k = 0`.
pub const VERT_EQUIV_SHAPES: [&[usize]; 4] = [&[0], &[0, 0], &[0, 1], &[0, 2]];
/// Shapes checked by `horiz_equiv`.
pub const HORIZ_EQUIV_SHAPES: [&[usize]; 3] = [&[0], &[1], &[0, 0]];

fn subsets<T: Clone>(items: &[T]) -> impl Iterator<Item = Vec<T>> + '_ {
    (1..(1usize << items.len()))
        .map(move |mask| items.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, x)| x.clone()).collect())
}

/// Nonempty downward closed subsets of `set` under the shuffle order.
fn downward_subsets(set: &[Shuffle]) -> Vec<Vec<Shuffle>> {
    subsets(set)
        .filter(|sub| sub.iter().all(|x| set.iter().filter(|y| y.is_below(x)).all(|y| sub.contains(y))))
        .collect()
}

/// Every replay script on every shape of dimension at most `max_dim`, over
/// all valid parameter sets.
pub fn replay_matrix(max_dim: usize) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for shape in ThetaShape::all_up_to(max_dim) {
        out.push(spine_anodyne(&shape)?);
        for s in sigma_downward_sets(&shape) {
            out.push(sigma_s(&shape, &s)?);
        }
        if !shape.is_mono_vertebral() {
            for s in admissible_sets(&shape) {
                if s.iter().all(|l| !l.is_horizontal()) {
                    out.push(upsilon_vertical(&shape, &s)?);
                }
                out.push(upsilon_full(&shape, &s)?);
            }
        }
        for k in 1..=shape.n() {
            let inner: Vec<HyperfaceLabel> = (1..shape.q(k)).map(|i| HyperfaceLabel::v(k, i)).collect();
            for s in subsets(&inner) {
                out.push(oury_from_alt(&shape, &s)?);
            }
        }
        for k in 1..shape.n() {
            for s in lambda_horizontal_upward_sets(&shape, k) {
                out.push(oury_from_alt(&shape, &s)?);
            }
            let all = Shuffle::all(shape.q(k), shape.q(k + 1));
            for a in &all {
                let above: Vec<Shuffle> = all.iter().filter(|b| a.is_below(b)).cloned().collect();
                for sub in downward_subsets(&above) {
                    out.push(alt_trivial(&shape, k, a, &sub)?);
                }
            }
        }
    }
    Ok(out)
}

/// Claims 0-4 and 0'-5 on shapes `[n;q]` with `2 <= n <= max_n` and every
/// `q_i <= max_q`.
pub fn claim_matrix(max_n: usize, max_q: usize) -> Result<Vec<(ThetaShape, ClaimCheck)>> {
    let mut out = Vec::new();
    for shape in ThetaShape::all_up_to(max_n * (max_q + 1)) {
        if shape.n() < 2 || shape.n() > max_n || shape.qs().iter().any(|&q| q > max_q) {
            continue;
        }
        for c in claims_inner(&shape)?.into_iter().chain(claims_alternative(&shape)?) {
            out.push((shape.clone(), c));
        }
    }
    Ok(out)
}

/// `vert_equiv` at `vert_bound` and `horiz_equiv` at `horiz_bound` on the
/// fixed shape lists.
pub fn equiv_matrix(vert_bound: usize, horiz_bound: usize) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for qs in VERT_EQUIV_SHAPES {
        let shape = ThetaShape::new(qs.to_vec());
        for k in (1..=shape.n()).filter(|&k| shape.q(k) == 0) {
            out.push(vert_equiv(&shape, k, vert_bound)?);
        }
    }
    for qs in HORIZ_EQUIV_SHAPES {
        out.push(horiz_equiv(&ThetaShape::new(qs.to_vec()), horiz_bound)?);
    }
    Ok(out)
}
