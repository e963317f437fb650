//! The simplex category: order-preserving maps `[m] -> [n]` and the
//! lattice of `(m, n)`-shuffles.

use std::fmt;

use crate::error::{Error, Result};

/// An order-preserving map `[m] -> [n]`, stored by its list of values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SimplicialOperator {
    values: Vec<usize>,
    target: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub struct SimplicialClass {
    pub mono: bool,
    pub epi: bool,
    pub inert: bool,
    pub preserves_endpoints: bool,
}

impl SimplicialOperator {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidOperator("empty value list".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidOperator(format!("{values:?} is not nondecreasing")));
        }
        if values.iter().any(|&v| v > target) {
            return Err(Error::InvalidOperator(format!("{values:?} leaves [{target}]")));
        }
        Ok(SimplicialOperator { values, target })
    }

    /// Caller guarantees the invariants.
    pub(crate) fn raw(values: Vec<usize>, target: usize) -> Self {
        debug_assert!(Self::new(values.clone(), target).is_ok());
        SimplicialOperator { values, target }
    }

    pub fn identity(n: usize) -> Self {
        Self::raw((0..=n).collect(), n)
    }

    /// The coface `[n-1] -> [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        Self::raw((0..=n).filter(|&j| j != i).collect(), n)
    }

    /// The codegeneracy `[n+1] -> [n]` repeating `i`.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        let mut v: Vec<usize> = (0..=n).collect();
        v.insert(i, i);
        Self::raw(v, n)
    }

    pub fn constant(m: usize, n: usize, value: usize) -> Self {
        assert!(value <= n);
        Self::raw(vec![value; m + 1], n)
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn first(&self) -> usize {
        self.values[0]
    }

    pub fn last(&self) -> usize {
        *self.values.last().unwrap()
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &SimplicialOperator) -> Result<Self> {
        if inner.target != self.source() {
            return Err(Error::NotComposable { outer: self.to_string(), inner: inner.to_string() });
        }
        Ok(self.after_unchecked(inner))
    }

    pub(crate) fn after_unchecked(&self, inner: &SimplicialOperator) -> Self {
        SimplicialOperator { values: inner.values.iter().map(|&i| self.values[i]).collect(), target: self.target }
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.source() && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_mono(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_epi(&self) -> bool {
        self.first() == 0 && self.last() == self.target && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_inert(&self) -> bool {
        self.values.windows(2).all(|w| w[1] == w[0] + 1)
    }

    pub fn preserves_endpoints(&self) -> bool {
        self.first() == 0 && self.last() == self.target
    }

    pub fn classify(&self) -> SimplicialClass {
        SimplicialClass {
            mono: self.is_mono(),
            epi: self.is_epi(),
            inert: self.is_inert(),
            preserves_endpoints: self.preserves_endpoints(),
        }
    }

    /// `i ↦ n - α(m - i)`.
    pub fn op_dual(&self) -> Self {
        let m = self.source();
        SimplicialOperator { values: (0..=m).map(|i| self.target - self.values[m - i]).collect(), target: self.target }
    }

    /// The epi-mono factorization: returns `(epi, mono)` with `self = mono ∘ epi`.
    pub fn ez_factor(&self) -> (Self, Self) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let k = image.len() - 1;
        let mut epi = Vec::with_capacity(self.values.len());
        let mut j = 0;
        for &v in &self.values {
            while image[j] != v {
                j += 1;
            }
            epi.push(j);
        }
        (SimplicialOperator::raw(epi, k), SimplicialOperator::raw(image, self.target))
    }

    /// Sorted, duplicate-free image.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.values.clone();
        v.dedup();
        v
    }

    pub fn preimage(&self, j: usize) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i] == j).collect()
    }

    /// All operators `[m] -> [n]` in lexicographic order of values.
    pub fn all(m: usize, n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m + 1);
        fn rec(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<SimplicialOperator>) {
            if cur.len() == m + 1 {
                out.push(SimplicialOperator { values: cur.clone(), target: n });
                return;
            }
            for v in lo..=n {
                cur.push(v);
                rec(m, n, v, cur, out);
                cur.pop();
            }
        }
        rec(m, n, 0, &mut cur, &mut out);
        out
    }

    pub fn monos(m: usize, n: usize) -> Vec<Self> {
        Self::all(m, n).into_iter().filter(|a| a.is_mono()).collect()
    }

    pub fn epis(m: usize, n: usize) -> Vec<Self> {
        Self::all(m, n).into_iter().filter(|a| a.is_epi()).collect()
    }

    /// `{a,b,...}` without the endpoint suffix.
    pub fn values_string(&self) -> String {
        brace_list(&self.values)
    }
}

pub(crate) fn brace_list(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl fmt::Display for SimplicialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[{}]->[{}]", self.values_string(), self.source(), self.target)
    }
}

/// `f ∘ g`, written in diagrammatic order as in `g` then `f`.
pub fn compose(g: &SimplicialOperator, f: &SimplicialOperator) -> Result<SimplicialOperator> {
    f.after(g)
}

/// An `(m, n)`-shuffle, determined by the surjection `α : [m+n] -> [m]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Shuffle {
    m: usize,
    n: usize,
    alpha: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    LowerCorner,
    UpperCorner,
    AlphaSingleton,
    AlphaprimeSingleton,
}

impl Shuffle {
    pub fn new(m: usize, n: usize, alpha: Vec<usize>) -> Result<Self> {
        let ok = alpha.len() == m + n + 1
            && alpha[0] == 0
            && alpha[m + n] == m
            && alpha.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1);
        if !ok {
            return Err(Error::InvalidOperator(format!("{} is not an ({m},{n})-shuffle", brace_list(&alpha))));
        }
        Ok(Shuffle { m, n, alpha })
    }

    /// Builds a shuffle from both projections, checking `α(i) + α'(i) = i`.
    pub fn from_pair(first: &SimplicialOperator, second: &SimplicialOperator) -> Result<Self> {
        let (m, n) = (first.target(), second.target());
        if first.source() != m + n
            || second.source() != m + n
            || (0..=m + n).any(|i| first.apply(i) + second.apply(i) != i)
        {
            return Err(Error::InvalidOperator(format!(
                "<{},{}> is not a shuffle",
                first.values_string(),
                second.values_string()
            )));
        }
        Shuffle::new(m, n, first.values().to_vec())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn alpha_prime(&self) -> Vec<usize> {
        self.alpha.iter().enumerate().map(|(i, &a)| i - a).collect()
    }

    pub fn first(&self) -> SimplicialOperator {
        SimplicialOperator::raw(self.alpha.clone(), self.m)
    }

    pub fn second(&self) -> SimplicialOperator {
        SimplicialOperator::raw(self.alpha_prime(), self.n)
    }

    /// All shuffles in lexicographic order of `α`.
    pub fn all(m: usize, n: usize) -> Vec<Shuffle> {
        let mut out = Vec::new();
        let mut cur = vec![0];
        fn rec(m: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Shuffle>) {
            let len = cur.len();
            if len == m + n + 1 {
                out.push(Shuffle { m, n, alpha: cur.clone() });
                return;
            }
            let a = cur[len - 1];
            let b = len - 1 - a;
            if b < n {
                cur.push(a);
                rec(m, n, cur, out);
                cur.pop();
            }
            if a < m {
                cur.push(a + 1);
                rec(m, n, cur, out);
                cur.pop();
            }
        }
        rec(m, n, &mut cur, &mut out);
        out
    }

    pub fn minimum(m: usize, n: usize) -> Shuffle {
        let alpha = (0..=m + n).map(|i| i.saturating_sub(n)).collect();
        Shuffle { m, n, alpha }
    }

    pub fn maximum(m: usize, n: usize) -> Shuffle {
        let alpha = (0..=m + n).map(|i| i.min(m)).collect();
        Shuffle { m, n, alpha }
    }

    fn same_grid(&self, other: &Shuffle) -> Result<()> {
        if self.m != other.m || self.n != other.n {
            return Err(Error::ShuffleMismatch(self.to_string(), other.to_string()));
        }
        Ok(())
    }

    /// Pointwise order on `α`.
    pub fn leq(&self, other: &Shuffle) -> Result<bool> {
        self.same_grid(other)?;
        Ok(self.alpha.iter().zip(&other.alpha).all(|(a, b)| a <= b))
    }

    pub(crate) fn is_below(&self, other: &Shuffle) -> bool {
        self.alpha.iter().zip(&other.alpha).all(|(a, b)| a <= b)
    }

    pub fn lower_corners(&self) -> Vec<usize> {
        let a = &self.alpha;
        (1..self.m + self.n).filter(|&i| a[i + 1] == a[i] && a[i] == a[i - 1] + 1).collect()
    }

    pub fn upper_corners(&self) -> Vec<usize> {
        let a = &self.alpha;
        (1..self.m + self.n).filter(|&i| a[i + 1] == a[i] + 1 && a[i] == a[i - 1]).collect()
    }

    pub fn corners(&self) -> (Vec<usize>, Vec<usize>) {
        (self.lower_corners(), self.upper_corners())
    }

    /// The immediate predecessor obtained by flipping the lower corner `j`.
    pub fn predecessor_at(&self, j: usize) -> Option<Shuffle> {
        if !self.lower_corners().contains(&j) {
            return None;
        }
        let mut alpha = self.alpha.clone();
        alpha[j] -= 1;
        Some(Shuffle { m: self.m, n: self.n, alpha })
    }

    /// The immediate successor obtained by flipping the upper corner `j`.
    pub fn successor_at(&self, j: usize) -> Option<Shuffle> {
        if !self.upper_corners().contains(&j) {
            return None;
        }
        let mut alpha = self.alpha.clone();
        alpha[j] += 1;
        Some(Shuffle { m: self.m, n: self.n, alpha })
    }

    /// Immediate predecessors and successors, indexed by lower and upper corners.
    pub fn covers(&self) -> (Vec<Shuffle>, Vec<Shuffle>) {
        let below = self.lower_corners().into_iter().filter_map(|j| self.predecessor_at(j)).collect();
        let above = self.upper_corners().into_iter().filter_map(|j| self.successor_at(j)).collect();
        (below, above)
    }

    pub fn classify_point(&self, i: usize) -> Result<PointKind> {
        if i == 0 || i >= self.m + self.n {
            return Err(Error::OutOfRange { index: i, lo: 1, hi: (self.m + self.n).saturating_sub(1) });
        }
        let a = &self.alpha;
        let kind = if a[i + 1] == a[i] && a[i] == a[i - 1] + 1 {
            PointKind::LowerCorner
        } else if a[i + 1] == a[i] + 1 && a[i] == a[i - 1] {
            PointKind::UpperCorner
        } else if a[i - 1] != a[i] && a[i] != a[i + 1] {
            PointKind::AlphaSingleton
        } else {
            PointKind::AlphaprimeSingleton
        };
        Ok(kind)
    }

    /// `α^{-1}(i)`.
    pub fn alpha_preimage(&self, i: usize) -> Vec<usize> {
        (0..self.alpha.len()).filter(|&j| self.alpha[j] == i).collect()
    }

    /// `α'^{-1}(i)`.
    pub fn alpha_prime_preimage(&self, i: usize) -> Vec<usize> {
        (0..self.alpha.len()).filter(|&j| j - self.alpha[j] == i).collect()
    }

    /// The Hasse diagram of `Sh(m, n)` in DOT syntax, edges pointing upward.
    pub fn hasse_dot(m: usize, n: usize) -> String {
        let all = Shuffle::all(m, n);
        let mut s = format!("digraph \"Sh({m},{n})\" {{\n  rankdir=BT;\n");
        for x in &all {
            s.push_str(&format!("  \"{}\";\n", brace_list(&x.alpha)));
        }
        for x in &all {
            for y in x.covers().1 {
                s.push_str(&format!("  \"{}\" -> \"{}\";\n", brace_list(&x.alpha), brace_list(&y.alpha)));
            }
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", brace_list(&self.alpha), brace_list(&self.alpha_prime()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(v: &[usize], n: usize) -> SimplicialOperator {
        SimplicialOperator::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn composition_examples() {
        assert_eq!(compose(&SimplicialOperator::identity(1), &op(&[0, 2], 2)).unwrap(), op(&[0, 2], 2));
        assert_eq!(compose(&op(&[0, 0, 1], 1), &op(&[0, 2], 2)).unwrap(), op(&[0, 0, 2], 2));
        assert_eq!(compose(&op(&[1, 2], 3), &op(&[0, 1, 1, 2], 2)).unwrap(), op(&[1, 1], 2));
        assert!(compose(&op(&[0, 2], 2), &op(&[0, 2], 2)).is_err());
    }

    #[test]
    fn classification_examples() {
        let c = op(&[0, 2], 2).classify();
        assert!(c.mono && !c.epi && !c.inert && c.preserves_endpoints);
        let c = op(&[1, 2], 3).classify();
        assert!(c.mono && c.inert && !c.preserves_endpoints);
        let c = op(&[0, 0, 1], 1).classify();
        assert!(c.epi && !c.mono && c.preserves_endpoints);
    }

    #[test]
    fn op_dual_examples() {
        assert_eq!(op(&[0, 2], 2).op_dual(), op(&[0, 2], 2));
        assert_eq!(op(&[0, 0, 1], 1).op_dual(), op(&[0, 1, 1], 1));
        assert_eq!(SimplicialOperator::identity(3).op_dual(), SimplicialOperator::identity(3));
    }

    #[test]
    fn ez_factor_examples() {
        let (e, m) = op(&[0, 0, 2], 2).ez_factor();
        assert_eq!(e, op(&[0, 0, 1], 1));
        assert_eq!(m, op(&[0, 2], 2));
        let f = op(&[1, 3], 4);
        assert_eq!(f.ez_factor(), (SimplicialOperator::identity(1), f.clone()));
        let f = op(&[0, 1, 1], 1);
        assert_eq!(f.ez_factor(), (f.clone(), SimplicialOperator::identity(1)));
    }

    #[test]
    fn ez_factor_is_unique_by_search() {
        for m in 0..=5 {
            for n in 0..=5 {
                for f in SimplicialOperator::all(m, n) {
                    let mut found = Vec::new();
                    for k in 0..=m.min(n) {
                        for e in SimplicialOperator::epis(m, k) {
                            for mo in SimplicialOperator::monos(k, n) {
                                if mo.after(&e).unwrap() == f {
                                    found.push((e.clone(), mo));
                                }
                            }
                        }
                    }
                    assert_eq!(found, vec![f.ez_factor()], "{f}");
                }
            }
        }
    }

    #[test]
    fn shuffle_examples() {
        let all: Vec<Vec<usize>> = Shuffle::all(2, 2).iter().map(|s| s.alpha().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0, 0, 1, 2],
                vec![0, 0, 1, 1, 2],
                vec![0, 0, 1, 2, 2],
                vec![0, 1, 1, 1, 2],
                vec![0, 1, 1, 2, 2],
                vec![0, 1, 2, 2, 2],
            ]
        );
        assert_eq!(Shuffle::all(0, 3).len(), 1);
        assert_eq!(Shuffle::all(3, 2).len(), 10);
    }

    #[test]
    fn corner_examples() {
        let s = Shuffle::new(3, 2, vec![0, 0, 1, 2, 2, 3]).unwrap();
        assert_eq!(s.to_string(), "<{0,0,1,2,2,3},{0,1,1,1,2,2}>");
        assert_eq!(s.corners(), (vec![3], vec![1, 4]));
        assert_eq!(s.classify_point(3).unwrap(), PointKind::LowerCorner);
        assert_eq!(s.classify_point(2).unwrap(), PointKind::AlphaSingleton);
        assert_eq!(s.classify_point(1).unwrap(), PointKind::UpperCorner);
        assert!(s.classify_point(0).is_err());
        assert_eq!(Shuffle::minimum(2, 2).corners(), (vec![], vec![2]));
        for (m, n) in [(0, 0), (1, 3), (3, 3), (4, 2)] {
            assert!(Shuffle::maximum(m, n).upper_corners().is_empty());
            assert!(Shuffle::minimum(m, n).lower_corners().is_empty());
        }
    }

    #[test]
    fn covers_of_sh_2_2() {
        let s = Shuffle::new(2, 2, vec![0, 0, 1, 1, 2]).unwrap();
        let mut above: Vec<Vec<usize>> = s.covers().1.iter().map(|t| t.alpha().to_vec()).collect();
        above.sort();
        assert_eq!(above, vec![vec![0, 0, 1, 2, 2], vec![0, 1, 1, 1, 2]]);
        assert!(s.leq(&s).unwrap());
        assert!(s.leq(&Shuffle::minimum(2, 3)).is_err());
    }

    #[test]
    fn from_pair_checks_complement() {
        let s = Shuffle::new(3, 2, vec![0, 0, 1, 2, 2, 3]).unwrap();
        assert_eq!(Shuffle::from_pair(&s.first(), &s.second()).unwrap(), s);
        assert!(Shuffle::from_pair(&s.first(), &s.first()).is_err());
    }
}
