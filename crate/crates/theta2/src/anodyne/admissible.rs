use crate::delta::Shuffle;
use crate::error::{Error, Result};
use crate::hyperface::{inner_hyperface_labels, outer_hyperface_order, HyperfaceLabel};
use crate::theta::ThetaShape;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Admissibility {
    pub admissible: bool,
    /// The unique `k` whose `k`-th horizontal hyperfaces are partly in the set.
    pub k_s: Option<usize>,
}

/// The shuffles `s` with `δh^{k;s} ∈ set`.
pub(crate) fn shuffles_in(set: &[HyperfaceLabel], k: usize) -> Vec<Shuffle> {
    set.iter()
        .filter_map(|l| match l {
            HyperfaceLabel::Hk { k: j, shuffle } if *j == k => Some(shuffle.clone()),
            _ => None,
        })
        .collect()
}

/// Admissibility of a set of inner hyperfaces: not all of them, at most one
/// `k` with a proper nonempty set of `k`-th horizontal hyperfaces, and that
/// set downward closed in the shuffle order.
pub fn is_admissible(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Result<Admissibility> {
    for l in s {
        if !l.exists_on(shape) {
            return Err(Error::NoSuchHyperface { label: l.display_on(shape), shape: shape.to_string() });
        }
        if !l.is_inner(shape) {
            return Err(Error::InvalidParameters(format!(
                "{} is not an inner hyperface of {shape}",
                l.display_on(shape)
            )));
        }
    }
    let inner = inner_hyperface_labels(shape);
    let all = inner.iter().all(|l| s.contains(l));
    let n = shape.n();
    let mut partial = Vec::new();
    for k in 1..n {
        let have = shuffles_in(s, k).len();
        let total = Shuffle::all(shape.q(k), shape.q(k + 1)).len();
        if have != 0 && have != total {
            partial.push(k);
        }
    }
    let k_s = if partial.len() == 1 { Some(partial[0]) } else { None };
    let downward = match k_s {
        Some(k) => {
            let have = shuffles_in(s, k);
            have.iter().all(|x| {
                Shuffle::all(shape.q(k), shape.q(k + 1)).iter().filter(|y| y.is_below(x)).all(|y| have.contains(y))
            })
        }
        None => true,
    };
    Ok(Admissibility { admissible: !all && partial.len() <= 1 && downward, k_s })
}

fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0..1usize << items.len())
        .map(|mask| items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, x)| x.clone()).collect())
        .collect()
}

/// Every admissible set of inner hyperfaces of `shape`.
pub fn admissible_sets(shape: &ThetaShape) -> Vec<Vec<HyperfaceLabel>> {
    subsets(&inner_hyperface_labels(shape))
        .into_iter()
        .filter(|s| is_admissible(shape, s).map(|a| a.admissible).unwrap_or(false))
        .collect()
}

/// The downward closed sets of outer hyperfaces for the total order
/// `δv^{1;0} ≺ … ≺ δv^{n;0} ≺ δh^0 ≺ δh^n ≺ δv^{1;q₁} ≺ … ≺ δv^{n;qₙ}`,
/// which are exactly its prefixes.
pub fn sigma_downward_sets(shape: &ThetaShape) -> Vec<Vec<HyperfaceLabel>> {
    let order = outer_hyperface_order(shape);
    (0..=order.len()).map(|t| order[..t].to_vec()).collect()
}

/// Subsets of `elems` closed upward (or downward) under `Shuffle::le`.
pub(crate) fn closed_subsets(elems: &[Shuffle], upward: bool) -> Vec<Vec<Shuffle>> {
    subsets(elems)
        .into_iter()
        .filter(|sub| {
            sub.iter().all(|x| {
                elems.iter().filter(|y| if upward { x.is_below(y) } else { y.is_below(x) }).all(|y| sub.contains(y))
            })
        })
        .collect()
}

/// Nonempty sets of `k`-th horizontal hyperfaces whose shuffles form an
/// upward closed set.
pub fn lambda_horizontal_upward_sets(shape: &ThetaShape, k: usize) -> Vec<Vec<HyperfaceLabel>> {
    if k == 0 || k >= shape.n() {
        return Vec::new();
    }
    closed_subsets(&Shuffle::all(shape.q(k), shape.q(k + 1)), true)
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.into_iter().map(|x| HyperfaceLabel::hk(k, x)).collect())
        .collect()
}
