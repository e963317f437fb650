use std::fmt;

use crate::cellset::CellularSet;
use crate::error::{Error, Result};
use crate::theta::{CellularOperator, ThetaShape};

use super::Finite2Category;

/// A 2-functor `[n;q] -> C`: objects `x₀,…,xₙ` and for each `k` a chain of
/// 1-cells `f_{k,0},…,f_{k,q_k}` joined by 2-cells `a_{k,j} : f_{k,j-1} ⇒ f_{k,j}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NerveCell {
    pub shape: ThetaShape,
    pub objects: Vec<usize>,
    pub ones: Vec<Vec<usize>>,
    pub twos: Vec<Vec<usize>>,
}

impl fmt::Display for NerveCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}", self.objects[0])?;
        for k in 0..self.ones.len() {
            let mut parts = vec![self.ones[k][0].to_string()];
            for j in 0..self.twos[k].len() {
                parts.push(format!("={}=", self.twos[k][j]));
                parts.push(self.ones[k][j + 1].to_string());
            }
            write!(f, "|{}|{}", parts.join(""), self.objects[k + 1])?;
        }
        write!(f, "⟩:{}", self.shape)
    }
}

#[derive(Clone, Debug)]
pub struct Nerve {
    category: Finite2Category,
    bound: usize,
}

pub fn nerve(category: &Finite2Category, bound: usize) -> Nerve {
    Nerve { category: category.clone(), bound }
}

impl Nerve {
    pub fn category(&self) -> &Finite2Category {
        &self.category
    }

    fn compose_chain(&self, start: usize, fs: impl Iterator<Item = usize>) -> usize {
        let c = &self.category;
        fs.fold(c.id1[start], |acc, f| c.compose1(f, acc))
    }

    /// The vertical composite `f_{k,u} ⇒ f_{k,v}` for `u ≤ v`.
    fn vertical(&self, cell: &NerveCell, k: usize, u: usize, v: usize) -> usize {
        let c = &self.category;
        (u..v).fold(c.id2[cell.ones[k - 1][u]], |acc, j| c.vcompose(cell.twos[k - 1][j], acc))
    }

    fn collect(&self, shape: &ThetaShape, k: usize, cur: &mut NerveCell, out: &mut Vec<NerveCell>) {
        let c = &self.category;
        if k > shape.n() {
            out.push(cur.clone());
            return;
        }
        let x = cur.objects[k - 1];
        for f in 0..c.one_cells.len() {
            if c.one_cells[f].src != x {
                continue;
            }
            cur.objects.push(c.one_cells[f].dst);
            cur.ones.push(vec![f]);
            cur.twos.push(Vec::new());
            self.chain(shape, k, cur, out);
            cur.objects.pop();
            cur.ones.pop();
            cur.twos.pop();
        }
    }

    fn chain(&self, shape: &ThetaShape, k: usize, cur: &mut NerveCell, out: &mut Vec<NerveCell>) {
        let c = &self.category;
        if cur.twos[k - 1].len() == shape.q(k) {
            self.collect(shape, k + 1, cur, out);
            return;
        }
        let f = *cur.ones[k - 1].last().unwrap();
        for a in c.two_cells_from(f) {
            cur.twos[k - 1].push(a);
            cur.ones[k - 1].push(c.two_cells[a].dst);
            self.chain(shape, k, cur, out);
            cur.twos[k - 1].pop();
            cur.ones[k - 1].pop();
        }
    }
}

impl CellularSet for Nerve {
    type Cell = NerveCell;

    fn bound(&self) -> usize {
        self.bound
    }

    fn shape_of(&self, c: &NerveCell) -> ThetaShape {
        c.shape.clone()
    }

    fn cells_at(&self, shape: &ThetaShape) -> Vec<NerveCell> {
        if shape.dim() > self.bound {
            return Vec::new();
        }
        let mut out = Vec::new();
        for x in 0..self.category.objects.len() {
            let mut cur = NerveCell { shape: shape.clone(), objects: vec![x], ones: Vec::new(), twos: Vec::new() };
            self.collect(shape, 1, &mut cur, &mut out);
        }
        out
    }

    fn act(&self, cell: &NerveCell, theta: &CellularOperator) -> NerveCell {
        let c = &self.category;
        let alpha = theta.horizontal();
        let src = theta.source();
        let objects: Vec<usize> = alpha.values().iter().map(|&i| cell.objects[i]).collect();
        let mut ones = Vec::with_capacity(src.n());
        let mut twos = Vec::with_capacity(src.n());
        for l in 1..=src.n() {
            let (lo, hi) = (alpha.apply(l - 1), alpha.apply(l));
            let one_at = |b: usize| {
                self.compose_chain(
                    cell.objects[lo],
                    (lo + 1..=hi).map(|k| cell.ones[k - 1][theta.component(k).unwrap().apply(b)]),
                )
            };
            let chain: Vec<usize> = (0..=src.q(l)).map(one_at).collect();
            let two: Vec<usize> = (1..=src.q(l))
                .map(|b| {
                    (lo + 1..=hi).fold(c.id2[c.id1[cell.objects[lo]]], |acc, k| {
                        let comp = theta.component(k).unwrap();
                        c.hcompose(self.vertical(cell, k, comp.apply(b - 1), comp.apply(b)), acc)
                    })
                })
                .collect();
            ones.push(chain);
            twos.push(two);
        }
        NerveCell { shape: src.clone(), objects, ones, twos }
    }

    fn contains(&self, cell: &NerveCell) -> bool {
        let c = &self.category;
        let n = cell.shape.n();
        cell.objects.len() == n + 1
            && cell.ones.len() == n
            && cell.twos.len() == n
            && (1..=n).all(|k| {
                let (ones, twos) = (&cell.ones[k - 1], &cell.twos[k - 1]);
                ones.len() == cell.shape.q(k) + 1
                    && twos.len() == cell.shape.q(k)
                    && ones.iter().all(|&f| {
                        f < c.one_cells.len()
                            && c.one_cells[f].src == cell.objects[k - 1]
                            && c.one_cells[f].dst == cell.objects[k]
                    })
                    && twos.iter().enumerate().all(|(j, &a)| {
                        a < c.two_cells.len() && c.two_cells[a].src == ones[j] && c.two_cells[a].dst == ones[j + 1]
                    })
            })
    }

    fn describe(&self) -> String {
        format!("N(2-category with {} objects)", self.category.objects.len())
    }
}

/// A strict 2-functor between finite 2-categories, given on all cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoFunctor {
    pub obj: Vec<usize>,
    pub one: Vec<usize>,
    pub two: Vec<usize>,
}

impl TwoFunctor {
    pub fn validate(&self, from: &Finite2Category, to: &Finite2Category) -> Result<()> {
        let bad = |m: &str| Err(Error::TwoCategory(format!("not a 2-functor: {m}")));
        for (f, cell) in from.one_cells.iter().enumerate() {
            let g = &to.one_cells[self.one[f]];
            if g.src != self.obj[cell.src] || g.dst != self.obj[cell.dst] {
                return bad("1-cell endpoints");
            }
        }
        for (a, cell) in from.two_cells.iter().enumerate() {
            let b = &to.two_cells[self.two[a]];
            if b.src != self.one[cell.src] || b.dst != self.one[cell.dst] {
                return bad("2-cell endpoints");
            }
        }
        for (x, &i) in from.id1.iter().enumerate() {
            if self.one[i] != to.id1[self.obj[x]] {
                return bad("identity 1-cells");
            }
        }
        for (f, &a) in from.id2.iter().enumerate() {
            if self.two[a] != to.id2[self.one[f]] {
                return bad("identity 2-cells");
            }
        }
        for (&(g, f), &h) in &from.comp1 {
            if to.compose1(self.one[g], self.one[f]) != self.one[h] {
                return bad("1-cell composition");
            }
        }
        for (&(b, a), &c) in &from.vcomp {
            if to.vcompose(self.two[b], self.two[a]) != self.two[c] {
                return bad("vertical composition");
            }
        }
        for (&(b, a), &c) in &from.hcomp {
            if to.hcompose(self.two[b], self.two[a]) != self.two[c] {
                return bad("horizontal composition");
            }
        }
        Ok(())
    }

    /// Post-composition on nerve cells.
    pub fn apply(&self, cell: &NerveCell) -> NerveCell {
        NerveCell {
            shape: cell.shape.clone(),
            objects: cell.objects.iter().map(|&x| self.obj[x]).collect(),
            ones: cell.ones.iter().map(|v| v.iter().map(|&f| self.one[f]).collect()).collect(),
            twos: cell.twos.iter().map(|v| v.iter().map(|&a| self.two[a]).collect()).collect(),
        }
    }
}
