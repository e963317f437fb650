//! Objects `[n;q]` and operators `[α;𝛂]` of the 2-cell category.

use std::fmt;

use crate::delta::{brace_list, SimplicialOperator};
use crate::error::{Error, Result};

/// An object `[n; q₁,…,qₙ]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ThetaShape {
    qs: Vec<usize>,
}

impl ThetaShape {
    pub fn new(qs: Vec<usize>) -> Self {
        ThetaShape { qs }
    }

    pub fn point() -> Self {
        ThetaShape { qs: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.qs.len()
    }

    /// `q_k` for `1 ≤ k ≤ n`.
    pub fn q(&self, k: usize) -> usize {
        self.qs[k - 1]
    }

    pub fn qs(&self) -> &[usize] {
        &self.qs
    }

    pub fn dim(&self) -> usize {
        self.qs.len() + self.qs.iter().sum::<usize>()
    }

    pub fn is_mono_vertebral(&self) -> bool {
        matches!(self.qs.as_slice(), [] | [0] | [1])
    }

    /// `[n; qₙ,…,q₁]`.
    pub fn reversed(&self) -> Self {
        ThetaShape { qs: self.qs.iter().rev().copied().collect() }
    }

    pub fn with_q(&self, k: usize, q: usize) -> Self {
        let mut qs = self.qs.clone();
        qs[k - 1] = q;
        ThetaShape { qs }
    }

    /// All shapes of dimension exactly `d`, in lexicographic order of `(n, q)`.
    pub fn all_of_dim(d: usize) -> Vec<ThetaShape> {
        let mut out = Vec::new();
        if d == 0 {
            out.push(ThetaShape::point());
            return out;
        }
        for n in 1..=d {
            compositions(d - n, n, &mut Vec::new(), &mut |qs| out.push(ThetaShape { qs: qs.to_vec() }));
        }
        out
    }

    /// All shapes of dimension at most `d`, by dimension then lexicographically.
    pub fn all_up_to(d: usize) -> Vec<ThetaShape> {
        (0..=d).flat_map(ThetaShape::all_of_dim).collect()
    }

    /// Sort key: dimension first.
    pub fn key(&self) -> (usize, usize, &[usize]) {
        (self.dim(), self.n(), &self.qs)
    }
}

/// Weak compositions of `total` into `parts` parts, lexicographically.
fn compositions(total: usize, parts: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if parts == 0 {
        if total == 0 {
            f(cur);
        }
        return;
    }
    if parts == 1 {
        cur.push(total);
        f(cur);
        cur.pop();
        return;
    }
    for x in 0..=total {
        cur.push(x);
        compositions(total - x, parts - 1, cur, f);
        cur.pop();
    }
}

impl fmt::Display for ThetaShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.qs.is_empty() {
            write!(f, "[0]")
        } else {
            let q: Vec<String> = self.qs.iter().map(|x| x.to_string()).collect();
            write!(f, "[{};{}]", self.qs.len(), q.join(","))
        }
    }
}

/// A morphism `[α;𝛂] : [m;p] -> [n;q]`. Components are stored for exactly
/// the covered indices `α(0) < k ≤ α(m)`, in increasing order of `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CellularOperator {
    horizontal: SimplicialOperator,
    components: Vec<SimplicialOperator>,
    src: ThetaShape,
    dst: ThetaShape,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, serde::Serialize)]
pub struct CellularClass {
    pub face: bool,
    pub degeneracy: bool,
    pub inner: bool,
    pub outer: bool,
    pub horizontal: bool,
    pub vertical: bool,
    pub inert: bool,
}

/// The source interval `ℓ` covering `k`, i.e. `α(ℓ-1) < k ≤ α(ℓ)`.
pub(crate) fn covering_interval(alpha: &SimplicialOperator, k: usize) -> usize {
    let v = alpha.values();
    (1..v.len()).find(|&l| v[l - 1] < k && k <= v[l]).expect("k is covered")
}

impl CellularOperator {
    pub fn new(
        src: ThetaShape,
        dst: ThetaShape,
        horizontal: SimplicialOperator,
        components: Vec<SimplicialOperator>,
    ) -> Result<Self> {
        if horizontal.source() != src.n() || horizontal.target() != dst.n() {
            return Err(Error::InvalidOperator(format!("horizontal part {horizontal} does not match {src} -> {dst}")));
        }
        let covered = horizontal.first() + 1..=horizontal.last();
        if components.len() != covered.clone().count() {
            return Err(Error::InvalidOperator(format!(
                "expected {} components, got {}",
                covered.count(),
                components.len()
            )));
        }
        for (c, k) in components.iter().zip(covered) {
            let l = covering_interval(&horizontal, k);
            if c.source() != src.q(l) || c.target() != dst.q(k) {
                return Err(Error::InvalidOperator(format!(
                    "component {c} at {k} should be [{}]->[{}]",
                    src.q(l),
                    dst.q(k)
                )));
            }
        }
        Ok(CellularOperator { horizontal, components, src, dst })
    }

    pub(crate) fn raw(
        src: ThetaShape,
        dst: ThetaShape,
        horizontal: SimplicialOperator,
        components: Vec<SimplicialOperator>,
    ) -> Self {
        debug_assert!(Self::new(src.clone(), dst.clone(), horizontal.clone(), components.clone()).is_ok());
        CellularOperator { horizontal, components, src, dst }
    }

    pub fn identity(shape: &ThetaShape) -> Self {
        let n = shape.n();
        let components = shape.qs().iter().map(|&q| SimplicialOperator::identity(q)).collect();
        Self::raw(shape.clone(), shape.clone(), SimplicialOperator::identity(n), components)
    }

    /// The vertex `[{i}] : [0] -> [n;q]`.
    pub fn vertex(shape: &ThetaShape, i: usize) -> Self {
        assert!(i <= shape.n());
        Self::raw(ThetaShape::point(), shape.clone(), SimplicialOperator::constant(0, shape.n(), i), Vec::new())
    }

    pub fn source(&self) -> &ThetaShape {
        &self.src
    }

    pub fn target(&self) -> &ThetaShape {
        &self.dst
    }

    pub fn horizontal(&self) -> &SimplicialOperator {
        &self.horizontal
    }

    pub fn components(&self) -> &[SimplicialOperator] {
        &self.components
    }

    pub fn covered(&self) -> std::ops::RangeInclusive<usize> {
        self.horizontal.first() + 1..=self.horizontal.last()
    }

    pub fn is_covered(&self, k: usize) -> bool {
        self.covered().contains(&k)
    }

    /// The component `α_k`, if `k` is covered.
    pub fn component(&self, k: usize) -> Option<&SimplicialOperator> {
        let first = self.horizontal.first();
        if k > first && k <= self.horizontal.last() {
            Some(&self.components[k - first - 1])
        } else {
            None
        }
    }

    /// The indices `k` covered by the source interval `ℓ`.
    pub fn interval(&self, l: usize) -> std::ops::RangeInclusive<usize> {
        self.horizontal.apply(l - 1) + 1..=self.horizontal.apply(l)
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &CellularOperator) -> Result<Self> {
        if inner.dst != self.src {
            return Err(Error::NotComposable { outer: self.to_string(), inner: inner.to_string() });
        }
        Ok(self.after_unchecked(inner))
    }

    pub(crate) fn after_unchecked(&self, inner: &CellularOperator) -> Self {
        let horizontal = self.horizontal.after_unchecked(&inner.horizontal);
        let mut components = Vec::with_capacity(horizontal.last() - horizontal.first());
        for k in horizontal.first() + 1..=horizontal.last() {
            let l = covering_interval(&self.horizontal, k);
            let outer = self.component(k).unwrap();
            let inner_c = inner.component(l).unwrap();
            components.push(outer.after_unchecked(inner_c));
        }
        CellularOperator { horizontal, components, src: inner.src.clone(), dst: self.dst.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.horizontal.is_identity() && self.components.iter().all(|c| c.is_identity())
    }

    /// The tuples `(α_k(b))_k` over the interval `ℓ`, one per `b ∈ [p_ℓ]`.
    fn interval_tuples(&self, l: usize) -> Vec<Vec<usize>> {
        let ks: Vec<usize> = self.interval(l).collect();
        (0..=self.src.q(l)).map(|b| ks.iter().map(|&k| self.component(k).unwrap().apply(b)).collect()).collect()
    }

    pub fn is_face(&self) -> bool {
        self.horizontal.is_mono()
            && (1..=self.src.n()).all(|l| self.interval_tuples(l).windows(2).all(|w| w[0] != w[1]))
    }

    pub fn is_degeneracy(&self) -> bool {
        self.horizontal.is_epi() && self.components.iter().all(|c| c.is_epi())
    }

    /// Every covered component is surjective and every uncovered `k` has `q_k = 0`.
    pub fn is_horizontal(&self) -> bool {
        self.components.iter().all(|c| c.is_epi())
            && (1..=self.dst.n()).all(|k| self.is_covered(k) || self.dst.q(k) == 0)
    }

    pub fn is_vertical(&self) -> bool {
        self.horizontal.is_identity()
    }

    pub fn is_inert(&self) -> bool {
        self.horizontal.is_inert() && self.components.iter().all(|c| c.is_inert())
    }

    fn preserves_endpoints(&self) -> bool {
        self.horizontal.preserves_endpoints() && self.components.iter().all(|c| c.preserves_endpoints())
    }

    pub fn is_inner_face(&self) -> bool {
        self.is_face() && self.preserves_endpoints()
    }

    pub fn is_outer_face(&self) -> bool {
        self.is_face() && !self.preserves_endpoints()
    }

    pub fn classify(&self) -> CellularClass {
        let face = self.is_face();
        let ends = self.preserves_endpoints();
        CellularClass {
            face,
            degeneracy: self.is_degeneracy(),
            inner: face && ends,
            outer: face && !ends,
            horizontal: self.is_horizontal(),
            vertical: self.is_vertical(),
            inert: self.is_inert(),
        }
    }

    pub fn codim(&self) -> Result<usize> {
        if !self.is_face() {
            return Err(Error::NotAFace(self.to_string()));
        }
        Ok(self.dst.dim() - self.src.dim())
    }

    /// The unique factorization `self = face ∘ degeneracy`, returned as
    /// `(degeneracy, face)`.
    pub fn reedy_factor(&self) -> (CellularOperator, CellularOperator) {
        let (sigma, mu) = self.horizontal.ez_factor();
        let m2 = sigma.target();
        let mut mid_qs = Vec::with_capacity(m2);
        let mut deg_components = Vec::with_capacity(m2);
        let mut face_components = Vec::new();
        for j in 1..=m2 {
            // The unique source interval mapped onto `j`.
            let l = (1..=self.src.n()).find(|&l| sigma.apply(l - 1) + 1 == j && sigma.apply(l) == j).unwrap();
            let tuples = self.interval_tuples(l);
            let mut chain: Vec<Vec<usize>> = tuples.clone();
            chain.dedup();
            let r = chain.len() - 1;
            let mut e = Vec::with_capacity(tuples.len());
            let mut idx = 0;
            for t in &tuples {
                while &chain[idx] != t {
                    idx += 1;
                }
                e.push(idx);
            }
            mid_qs.push(r);
            deg_components.push(SimplicialOperator::raw(e, r));
            for (pos, k) in (mu.apply(j - 1) + 1..=mu.apply(j)).enumerate() {
                let vals = chain.iter().map(|t| t[pos]).collect();
                face_components.push(SimplicialOperator::raw(vals, self.dst.q(k)));
            }
        }
        let mid = ThetaShape::new(mid_qs);
        let degeneracy = CellularOperator::raw(self.src.clone(), mid.clone(), sigma, deg_components);
        let face = CellularOperator::raw(mid, self.dst.clone(), mu, face_components);
        (degeneracy, face)
    }

    /// The face part of the Reedy factorization.
    pub fn face_part(&self) -> CellularOperator {
        if self.is_face() {
            self.clone()
        } else {
            self.reedy_factor().1
        }
    }

    /// For a face `g` with the same target, the unique `h` with `self = g ∘ h`.
    pub fn factor_through(&self, g: &CellularOperator) -> Result<Option<CellularOperator>> {
        if g.dst != self.dst {
            return Err(Error::NotComposable { outer: g.to_string(), inner: self.to_string() });
        }
        if !g.is_face() {
            return Err(Error::NotAFace(g.to_string()));
        }
        Ok(self.factor_through_face(g))
    }

    pub(crate) fn factor_through_face(&self, g: &CellularOperator) -> Option<CellularOperator> {
        let gv = g.horizontal.values();
        let mut hv = Vec::with_capacity(self.src.n() + 1);
        for &a in self.horizontal.values() {
            hv.push(gv.iter().position(|&x| x == a)?);
        }
        let h_alpha = SimplicialOperator::raw(hv, g.src.n());
        let mut comps = Vec::new();
        for j in h_alpha.first() + 1..=h_alpha.last() {
            let l = covering_interval(&h_alpha, j);
            let ks: Vec<usize> = g.interval(j).collect();
            let r = g.src.q(j);
            let mut vals = Vec::with_capacity(self.src.q(l) + 1);
            for b in 0..=self.src.q(l) {
                let c = (0..=r).find(|&c| {
                    ks.iter().all(|&k| g.component(k).unwrap().apply(c) == self.component(k).unwrap().apply(b))
                })?;
                vals.push(c);
            }
            comps.push(SimplicialOperator::raw(vals, r));
        }
        Some(CellularOperator::raw(self.src.clone(), g.src.clone(), h_alpha, comps))
    }

    /// `[α; α_k^op]`.
    pub fn co_dual(&self) -> Self {
        CellularOperator {
            horizontal: self.horizontal.clone(),
            components: self.components.iter().map(|c| c.op_dual()).collect(),
            src: self.src.clone(),
            dst: self.dst.clone(),
        }
    }

    /// `[α^op; α_{α(m)},…,α_{α(0)+1}]` between the reversed shapes.
    pub fn op_dual(&self) -> Self {
        CellularOperator {
            horizontal: self.horizontal.op_dual(),
            components: self.components.iter().rev().cloned().collect(),
            src: self.src.reversed(),
            dst: self.dst.reversed(),
        }
    }

    /// All operators `src -> dst`, ordered lexicographically by horizontal
    /// part and then by components.
    pub fn all(src: &ThetaShape, dst: &ThetaShape) -> Vec<CellularOperator> {
        let mut out = Vec::new();
        for alpha in SimplicialOperator::all(src.n(), dst.n()) {
            let choices: Vec<Vec<SimplicialOperator>> = (alpha.first() + 1..=alpha.last())
                .map(|k| SimplicialOperator::all(src.q(covering_interval(&alpha, k)), dst.q(k)))
                .collect();
            for comps in cartesian(&choices) {
                out.push(CellularOperator {
                    horizontal: alpha.clone(),
                    components: comps,
                    src: src.clone(),
                    dst: dst.clone(),
                });
            }
        }
        out
    }

    /// All face operators into `dst`, ordered by source dimension and then
    /// lexicographically.
    pub fn faces_into(dst: &ThetaShape) -> Vec<CellularOperator> {
        let n = dst.n();
        let mut out = Vec::new();
        for m in 0..=n {
            for alpha in SimplicialOperator::monos(m, n) {
                let per_interval: Vec<Vec<Vec<Vec<usize>>>> = (1..=m)
                    .map(|l| {
                        let dims: Vec<usize> = (alpha.apply(l - 1) + 1..=alpha.apply(l)).map(|k| dst.q(k)).collect();
                        strict_chains(&dims)
                    })
                    .collect();
                for chains in cartesian(&per_interval) {
                    let qs: Vec<usize> = chains.iter().map(|c| c.len() - 1).collect();
                    let mut comps = Vec::new();
                    for (l, chain) in chains.iter().enumerate() {
                        for (pos, k) in (alpha.apply(l) + 1..=alpha.apply(l + 1)).enumerate() {
                            comps.push(SimplicialOperator::raw(chain.iter().map(|t| t[pos]).collect(), dst.q(k)));
                        }
                    }
                    out.push(CellularOperator {
                        horizontal: alpha.clone(),
                        components: comps,
                        src: ThetaShape::new(qs),
                        dst: dst.clone(),
                    });
                }
            }
        }
        out.sort_by(|a, b| a.src.dim().cmp(&b.src.dim()).then_with(|| a.cmp(b)));
        out
    }

    /// All degeneracy operators out of `src`.
    pub fn degeneracies_from(src: &ThetaShape) -> Vec<CellularOperator> {
        let mut out = Vec::new();
        for d in 0..=src.dim() {
            for mid in ThetaShape::all_of_dim(d) {
                if mid.n() > src.n() {
                    continue;
                }
                out.extend(CellularOperator::all(src, &mid).into_iter().filter(|f| f.is_degeneracy()));
            }
        }
        out
    }

    /// A face section `s` with `self ∘ s = id`, for a degeneracy `self`.
    pub fn section(&self) -> CellularOperator {
        let sigma = &self.horizontal;
        let hv: Vec<usize> = (0..=self.dst.n()).map(|j| sigma.preimage(j)[0]).collect();
        let h_alpha = SimplicialOperator::raw(hv, self.src.n());
        let comps = (h_alpha.first() + 1..=h_alpha.last())
            .map(|l| {
                // Source interval l of the degeneracy; it covers exactly one j when uncollapsed.
                let q = self.src.q(l);
                match self.component(sigma.apply(l)).filter(|_| sigma.apply(l - 1) < sigma.apply(l)) {
                    Some(c) => {
                        let vals = (0..=c.target()).map(|t| c.preimage(t)[0]).collect();
                        SimplicialOperator::raw(vals, q)
                    }
                    None => SimplicialOperator::constant(self.dst.q(covering_interval(&h_alpha, l)), q, 0),
                }
            })
            .collect();
        CellularOperator::raw(self.dst.clone(), self.src.clone(), h_alpha, comps)
    }
}

/// Strictly increasing chains in the product poset `∏ [dims]`.
fn strict_chains(dims: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let points = cartesian(&dims.iter().map(|&d| (0..=d).collect::<Vec<usize>>()).collect::<Vec<_>>());
    let mut out = Vec::new();
    fn extend(points: &[Vec<usize>], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        out.push(cur.clone());
        let last = cur.last().unwrap().clone();
        for p in points {
            if p != &last && p.iter().zip(&last).all(|(a, b)| a >= b) {
                cur.push(p.clone());
                extend(points, cur, out);
                cur.pop();
            }
        }
    }
    for p in &points {
        let mut cur = vec![p.clone()];
        extend(&points, &mut cur, &mut out);
    }
    out
}

/// Cartesian product, first factor most significant.
pub(crate) fn cartesian<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(factors.len())];
    for f in factors {
        let mut next = Vec::with_capacity(out.len() * f.len());
        for prefix in &out {
            for x in f {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

impl fmt::Display for CellularOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}->{}", self.bare(), self.src, self.dst)
    }
}

impl CellularOperator {
    /// `[{…};c1,…]` without the endpoint suffix; components into `[0]` print as `!`.
    pub fn bare(&self) -> String {
        let mut s = format!("[{}", self.horizontal.values_string());
        if !self.components.is_empty() {
            let comps: Vec<String> = self
                .components
                .iter()
                .map(|c| if c.target() == 0 { "!".to_string() } else { brace_list(c.values()) })
                .collect();
            s.push(';');
            s.push_str(&comps.join(","));
        }
        s.push(']');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(qs: &[usize]) -> ThetaShape {
        ThetaShape::new(qs.to_vec())
    }

    fn sop(v: &[usize], n: usize) -> SimplicialOperator {
        SimplicialOperator::new(v.to_vec(), n).unwrap()
    }

    fn op(src: &[usize], dst: &[usize], h: &[usize], comps: &[&[usize]]) -> CellularOperator {
        let dst_s = sh(dst);
        let alpha = sop(h, dst.len());
        let comps = (alpha.first() + 1..=alpha.last()).zip(comps).map(|(k, c)| sop(c, dst_s.q(k))).collect();
        CellularOperator::new(sh(src), dst_s, alpha, comps).unwrap()
    }

    #[test]
    fn shapes_by_dimension() {
        let counts: Vec<usize> = (0..=5).map(|d| ThetaShape::all_of_dim(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 8, 16]);
        assert_eq!(sh(&[0, 2]).dim(), 4);
        assert_eq!(sh(&[0, 2]).to_string(), "[2;0,2]");
        assert_eq!(ThetaShape::point().to_string(), "[0]");
    }

    #[test]
    fn composition_example() {
        let outer = op(&[0], &[0, 2], &[0, 1], &[&[0]]);
        let inner = op(&[0], &[0], &[0, 1], &[&[0]]);
        assert!(inner.is_identity());
        assert_eq!(outer.after(&inner).unwrap(), outer);
        assert!(inner.after(&outer).is_err());
    }

    #[test]
    fn table_rows() {
        let d0 = op(&[2], &[0, 2], &[1, 2], &[&[0, 1, 2]]);
        let c = d0.classify();
        assert!(c.face && c.outer && c.horizontal && !c.vertical && c.inert);
        let d1 = op(&[2], &[0, 2], &[0, 2], &[&[0, 0, 0], &[0, 1, 2]]);
        let c = d1.classify();
        assert!(c.face && c.inner && c.horizontal && !c.vertical && !c.inert);
        let v21 = op(&[0, 1], &[0, 2], &[0, 1, 2], &[&[0], &[0, 2]]);
        let c = v21.classify();
        assert!(c.face && c.inner && !c.horizontal && c.vertical && !c.inert);
        for i in [0, 2] {
            let vals: Vec<usize> = (0..=2).filter(|&j| j != i).collect();
            let c = op(&[0, 1], &[0, 2], &[0, 1, 2], &[&[0], &vals]).classify();
            assert!(c.face && c.outer && !c.horizontal && c.vertical && c.inert);
        }
        let d2 = op(&[0], &[0, 2], &[0, 1], &[&[0]]);
        let c = d2.classify();
        assert!(c.face && c.outer && !c.horizontal && !c.vertical && c.inert);
        let pt = CellularOperator::vertex(&sh(&[0, 2]), 0);
        let c = pt.classify();
        assert!(c.face && c.outer && !c.horizontal && !c.vertical && c.inert);
        let c = CellularOperator::identity(&sh(&[0, 2])).classify();
        assert!(c.face && c.inner && c.horizontal && c.vertical && c.inert && c.degeneracy);
    }

    #[test]
    fn codimension() {
        let f = op(&[1], &[1, 1], &[0, 2], &[&[0, 1], &[0, 1]]);
        assert_eq!(f.codim().unwrap(), 2);
        assert_eq!(CellularOperator::identity(&sh(&[2, 1])).codim().unwrap(), 0);
        assert_eq!(op(&[2], &[0, 2], &[1, 2], &[&[0, 1, 2]]).codim().unwrap(), 1);
        let deg = op(&[0, 1], &[1], &[0, 0, 1], &[&[0, 1]]);
        assert!(deg.codim().is_err());
    }

    #[test]
    fn reedy_examples() {
        let deg = op(&[0, 1], &[1], &[0, 0, 1], &[&[0, 1]]);
        let (d, f) = deg.reedy_factor();
        assert_eq!(d, deg);
        assert!(f.is_identity());
        let face = op(&[0], &[0, 2], &[0, 1], &[&[0]]);
        let (d, f) = face.reedy_factor();
        assert!(d.is_identity());
        assert_eq!(f, face);
        let mixed = op(&[2], &[1, 1], &[0, 2], &[&[0, 0, 1], &[0, 1, 1]]);
        let (d, f) = mixed.reedy_factor();
        assert_eq!(f.after(&d).unwrap(), mixed);
        assert!(d.is_degeneracy() && f.is_face());
    }

    #[test]
    fn faces_of_point_and_edge() {
        assert_eq!(CellularOperator::faces_into(&ThetaShape::point()).len(), 1);
        assert_eq!(CellularOperator::faces_into(&sh(&[1])).len(), 5);
        let all = CellularOperator::all(&sh(&[1]), &sh(&[0, 2]));
        let brute = SimplicialOperator::all(1, 2)
            .iter()
            .map(|a| (a.first() + 1..=a.last()).map(|k| if k == 1 { 1 } else { 6 }).product::<usize>())
            .sum::<usize>();
        assert_eq!(all.len(), brute);
    }

    #[test]
    fn factor_through_vertex() {
        let d2 = op(&[0], &[0, 2], &[0, 1], &[&[0]]);
        let pt = CellularOperator::vertex(&sh(&[0, 2]), 0);
        let h = pt.factor_through(&d2).unwrap().unwrap();
        assert_eq!(d2.after(&h).unwrap(), pt);
        let id = CellularOperator::identity(&sh(&[0, 2]));
        assert!(id.factor_through(&id).unwrap().unwrap().is_identity());
        assert!(id.factor_through(&d2).unwrap().is_none());
    }

    #[test]
    fn dualities() {
        let d1 = op(&[2], &[0, 2], &[0, 2], &[&[0, 0, 0], &[0, 1, 2]]);
        assert_eq!(d1.co_dual(), d1);
        let v20 = op(&[0, 1], &[0, 2], &[0, 1, 2], &[&[0], &[1, 2]]);
        let v10 = op(&[1, 0], &[2, 0], &[0, 1, 2], &[&[1, 2], &[0]]);
        assert_eq!(v20.op_dual(), v10);
        let v12 = op(&[1, 0], &[2, 0], &[0, 1, 2], &[&[0, 1], &[0]]);
        assert_eq!(v20.op_dual().co_dual(), v12);
    }

    #[test]
    fn section_splits_degeneracy() {
        for src in ThetaShape::all_up_to(4) {
            for d in CellularOperator::degeneracies_from(&src) {
                let s = d.section();
                assert!(s.is_face());
                assert!(d.after(&s).unwrap().is_identity(), "{d}");
            }
        }
    }
}
