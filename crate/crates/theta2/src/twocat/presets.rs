use std::collections::HashMap;

use crate::theta::{cartesian, CellularOperator, ThetaShape};

use super::{Finite2Category, NerveCell, TwoFunctor};

/// The free 2-category on `[n;q]` with coordinates for its cells:
/// `hom(k,ℓ) = [q_{k+1}] × ⋯ × [q_ℓ]` as a poset.
#[derive(Clone, Debug)]
pub struct FreeCell {
    pub shape: ThetaShape,
    pub category: Finite2Category,
    one_coords: Vec<(usize, usize, Vec<usize>)>,
    one_index: HashMap<(usize, usize, Vec<usize>), usize>,
    two_index: HashMap<(usize, usize), usize>,
}

pub fn free_cell_2cat(shape: &ThetaShape) -> FreeCell {
    let n = shape.n();
    let mut c = Finite2Category::default();
    for k in 0..=n {
        c.add_object(&k.to_string());
    }
    let mut one_coords: Vec<(usize, usize, Vec<usize>)> = (0..=n).map(|k| (k, k, Vec::new())).collect();
    let mut one_index: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
    for k in 0..=n {
        one_index.insert((k, k, Vec::new()), c.id1[k]);
    }
    for k in 0..=n {
        for l in k + 1..=n {
            let factors: Vec<Vec<usize>> = (k + 1..=l).map(|j| (0..=shape.q(j)).collect()).collect();
            for t in cartesian(&factors) {
                let name = format!("{k}>{l}:{}", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("."));
                let f = c.add_one_cell(&name, k, l);
                one_coords.push((k, l, t.clone()));
                one_index.insert((k, l, t), f);
            }
        }
    }
    let mut two_index: HashMap<(usize, usize), usize> = HashMap::new();
    for f in 0..c.one_cells.len() {
        two_index.insert((f, f), c.id2[f]);
    }
    let nf = c.one_cells.len();
    for f in 0..nf {
        for g in 0..nf {
            let (a, b) = (&one_coords[f], &one_coords[g]);
            if f != g && a.0 == b.0 && a.1 == b.1 && a.2.iter().zip(&b.2).all(|(x, y)| x <= y) {
                let name = format!("{}=>{}", c.one_cells[f].name, c.one_cells[g].name);
                let t = c.add_two_cell(&name, f, g);
                two_index.insert((f, g), t);
            }
        }
    }
    for g in 0..nf {
        for f in 0..nf {
            let (a, b) = (&one_coords[f], &one_coords[g]);
            if a.1 == b.0 {
                let mut t = a.2.clone();
                t.extend_from_slice(&b.2);
                c.comp1.insert((g, f), one_index[&(a.0, b.1, t)]);
            }
        }
    }
    let two: Vec<(usize, usize)> = (0..c.two_cells.len()).map(|t| (c.two_cells[t].src, c.two_cells[t].dst)).collect();
    for (b, &(bs, bd)) in two.iter().enumerate() {
        for (a, &(as_, ad)) in two.iter().enumerate() {
            if ad == bs {
                c.vcomp.insert((b, a), two_index[&(as_, bd)]);
            }
            if c.one_cells[as_].dst == c.one_cells[bs].src {
                let s = c.comp1[&(bs, as_)];
                let d = c.comp1[&(bd, ad)];
                c.hcomp.insert((b, a), two_index[&(s, d)]);
            }
        }
    }
    FreeCell { shape: shape.clone(), category: c, one_coords, one_index, two_index }
}

impl FreeCell {
    /// The 2-functor `[m;p] -> shape` as an operator.
    pub fn to_operator(&self, cell: &NerveCell) -> CellularOperator {
        let src = cell.shape.clone();
        let alpha = crate::delta::SimplicialOperator::raw(cell.objects.clone(), self.shape.n());
        let mut comps = Vec::new();
        for l in 1..=src.n() {
            let (lo, hi) = (cell.objects[l - 1], cell.objects[l]);
            for pos in 0..hi - lo {
                let vals = cell.ones[l - 1].iter().map(|&f| self.one_coords[f].2[pos]).collect();
                comps.push(crate::delta::SimplicialOperator::raw(vals, self.shape.q(lo + pos + 1)));
            }
        }
        CellularOperator::raw(src, self.shape.clone(), alpha, comps)
    }

    fn one_for(&self, f: &CellularOperator, l: usize, b: usize) -> usize {
        let a = f.horizontal();
        let (lo, hi) = (a.apply(l - 1), a.apply(l));
        let t: Vec<usize> = (lo + 1..=hi).map(|k| f.component(k).unwrap().apply(b)).collect();
        self.one_index[&(lo, hi, t)]
    }

    pub fn from_operator(&self, f: &CellularOperator) -> NerveCell {
        let src = f.source();
        let mut ones = Vec::new();
        let mut twos = Vec::new();
        for l in 1..=src.n() {
            let chain: Vec<usize> = (0..=src.q(l)).map(|b| self.one_for(f, l, b)).collect();
            twos.push(chain.windows(2).map(|w| self.two_index[&(w[0], w[1])]).collect());
            ones.push(chain);
        }
        NerveCell { shape: src.clone(), objects: f.horizontal().values().to_vec(), ones, twos }
    }

    /// The 2-functor `[m;p] -> [n;q]` given by an operator into this shape.
    pub fn functor_from(&self, source: &FreeCell, theta: &CellularOperator) -> TwoFunctor {
        let c = &source.category;
        let alpha = theta.horizontal();
        let obj = (0..c.objects.len()).map(|i| alpha.apply(i)).collect();
        let image = |f: usize| {
            let (k, l, t) = &source.one_coords[f];
            let (lo, hi) = (alpha.apply(*k), alpha.apply(*l));
            let u: Vec<usize> = (lo + 1..=hi)
                .map(|j| {
                    let i = crate::theta::covering_interval(alpha, j);
                    theta.component(j).unwrap().apply(t[i - k - 1])
                })
                .collect();
            self.one_index[&(lo, hi, u)]
        };
        let one: Vec<usize> = (0..c.one_cells.len()).map(image).collect();
        let two = c.two_cells.iter().map(|t| self.two_index[&(one[t.src], one[t.dst])]).collect();
        TwoFunctor { obj, one, two }
    }
}

/// The chaotic category on `names`, as a locally discrete 2-category.
pub fn chaotic(names: &[&str]) -> Finite2Category {
    let mut c = Finite2Category::default();
    for n in names {
        c.add_object(n);
    }
    let k = names.len();
    let mut idx = vec![vec![0usize; k]; k];
    for a in 0..k {
        for b in 0..k {
            idx[a][b] = if a == b { c.id1[a] } else { c.add_one_cell(&format!("{}{}", names[a], names[b]), a, b) };
        }
    }
    for a in 0..k {
        for b in 0..k {
            for d in 0..k {
                let (f, g, h) = (idx[a][b], idx[b][d], idx[a][d]);
                c.comp1.insert((g, f), h);
                c.hcomp.insert((c.id2[g], c.id2[f]), c.id2[h]);
            }
        }
    }
    c
}

/// Two objects `0, 1` with `hom(0,1)` the chaotic category on `names`,
/// `hom(1,0)` empty and trivial endo-homs: the suspension of a chaotic nerve.
pub fn locally_chaotic(names: &[&str]) -> Finite2Category {
    let mut c = Finite2Category::default();
    c.add_object("0");
    c.add_object("1");
    let fs: Vec<usize> = names.iter().map(|n| c.add_one_cell(n, 0, 1)).collect();
    let k = fs.len();
    let mut idx = vec![vec![0usize; k]; k];
    for a in 0..k {
        for b in 0..k {
            idx[a][b] =
                if a == b { c.id2[fs[a]] } else { c.add_two_cell(&format!("{}{}", names[a], names[b]), fs[a], fs[b]) };
        }
    }
    for a in 0..k {
        for b in 0..k {
            for d in 0..k {
                c.vcomp.insert((idx[b][d], idx[a][b]), idx[a][d]);
            }
        }
    }
    c
}
