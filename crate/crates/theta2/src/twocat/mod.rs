//! Finite strict 2-categories given by explicit tables, and their nerves.

mod nerve;
mod presets;
mod text;

use std::collections::HashMap;

use crate::error::{Error, Result};

pub use nerve::{nerve, Nerve, NerveCell, TwoFunctor};
pub use presets::{chaotic, free_cell_2cat, locally_chaotic, FreeCell};
pub use text::{parse_2category, print_2category};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OneCell {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoCell {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// A finite strict 2-category. 1-cells `f : a -> b` and `g : b -> c` compose
/// to `comp1[(g, f)]`; 2-cells `α : f ⇒ g`, `β : g ⇒ h` to `vcomp[(β, α)]`;
/// and `α : f ⇒ f'`, `β : g ⇒ g'` horizontally to `hcomp[(β, α)]`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Finite2Category {
    pub objects: Vec<String>,
    pub one_cells: Vec<OneCell>,
    pub two_cells: Vec<TwoCell>,
    pub id1: Vec<usize>,
    pub id2: Vec<usize>,
    pub comp1: HashMap<(usize, usize), usize>,
    pub vcomp: HashMap<(usize, usize), usize>,
    pub hcomp: HashMap<(usize, usize), usize>,
}

fn err<T>(msg: String) -> Result<T> {
    Err(Error::TwoCategory(msg))
}

impl Finite2Category {
    pub fn add_object(&mut self, name: &str) -> usize {
        let x = self.objects.len();
        self.objects.push(name.to_string());
        let i = self.add_one_cell_raw(&format!("id_{name}"), x, x);
        self.id1.push(i);
        self.comp1.insert((i, i), i);
        let a = self.id2[i];
        self.hcomp.insert((a, a), a);
        x
    }

    fn add_one_cell_raw(&mut self, name: &str, src: usize, dst: usize) -> usize {
        let f = self.one_cells.len();
        self.one_cells.push(OneCell { name: name.to_string(), src, dst });
        let a = self.two_cells.len();
        self.two_cells.push(TwoCell { name: format!("id_{name}"), src: f, dst: f });
        self.id2.push(a);
        self.vcomp.insert((a, a), a);
        f
    }

    /// Adds `f : src -> dst` with its identity 2-cell and unit laws.
    pub fn add_one_cell(&mut self, name: &str, src: usize, dst: usize) -> usize {
        let f = self.add_one_cell_raw(name, src, dst);
        let (is, id) = (self.id1[src], self.id1[dst]);
        self.comp1.insert((f, is), f);
        self.comp1.insert((id, f), f);
        let a = self.id2[f];
        self.hcomp.insert((a, self.id2[is]), a);
        self.hcomp.insert((self.id2[id], a), a);
        f
    }

    /// Adds `α : src ⇒ dst` with unit laws.
    pub fn add_two_cell(&mut self, name: &str, src: usize, dst: usize) -> usize {
        let a = self.two_cells.len();
        self.two_cells.push(TwoCell { name: name.to_string(), src, dst });
        self.vcomp.insert((a, self.id2[src]), a);
        self.vcomp.insert((self.id2[dst], a), a);
        let f = &self.one_cells[src];
        let (s, d) = (f.src, f.dst);
        self.hcomp.insert((a, self.id2[self.id1[s]]), a);
        self.hcomp.insert((self.id2[self.id1[d]], a), a);
        a
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn one_cell(&self, name: &str) -> Option<usize> {
        self.one_cells.iter().position(|o| o.name == name)
    }

    pub fn two_cell(&self, name: &str) -> Option<usize> {
        self.two_cells.iter().position(|o| o.name == name)
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.one_cells.len()).filter(|&f| self.one_cells[f].src == a && self.one_cells[f].dst == b).collect()
    }

    /// 2-cells out of the 1-cell `f`.
    pub fn two_cells_from(&self, f: usize) -> Vec<usize> {
        (0..self.two_cells.len()).filter(|&a| self.two_cells[a].src == f).collect()
    }

    pub fn compose1(&self, g: usize, f: usize) -> usize {
        self.comp1[&(g, f)]
    }

    pub fn vcompose(&self, b: usize, a: usize) -> usize {
        self.vcomp[&(b, a)]
    }

    pub fn hcompose(&self, b: usize, a: usize) -> usize {
        self.hcomp[&(b, a)]
    }

    /// Checks totality of the tables on composable pairs, typing, units,
    /// associativity and interchange.
    pub fn validate(&self) -> Result<()> {
        let n1 = self.one_cells.len();
        let n2 = self.two_cells.len();
        for (x, &i) in self.id1.iter().enumerate() {
            let c = &self.one_cells[i];
            if c.src != x || c.dst != x {
                return err(format!("identity of {} has wrong endpoints", self.objects[x]));
            }
        }
        for a in 0..n2 {
            let t = &self.two_cells[a];
            let (f, g) = (&self.one_cells[t.src], &self.one_cells[t.dst]);
            if f.src != g.src || f.dst != g.dst {
                return err(format!("2-cell {} between non-parallel 1-cells", t.name));
            }
        }
        for g in 0..n1 {
            for f in 0..n1 {
                let composable = self.one_cells[f].dst == self.one_cells[g].src;
                match (composable, self.comp1.get(&(g, f))) {
                    (true, None) => {
                        return err(format!("missing comp1 {} ∘ {}", self.one_cells[g].name, self.one_cells[f].name))
                    }
                    (false, Some(_)) => return err("comp1 entry for non-composable pair".into()),
                    (true, Some(&h)) => {
                        let hc = &self.one_cells[h];
                        if hc.src != self.one_cells[f].src || hc.dst != self.one_cells[g].dst {
                            return err(format!(
                                "comp1 {} ∘ {} has wrong endpoints",
                                self.one_cells[g].name, self.one_cells[f].name
                            ));
                        }
                    }
                    _ => {}
                }
            }
        }
        for f in 0..n1 {
            let c = &self.one_cells[f];
            if self.comp1[&(f, self.id1[c.src])] != f || self.comp1[&(self.id1[c.dst], f)] != f {
                return err(format!("unit law fails for {}", c.name));
            }
        }
        for h in 0..n1 {
            for g in 0..n1 {
                for f in 0..n1 {
                    if let (Some(&gf), Some(&hg)) = (self.comp1.get(&(g, f)), self.comp1.get(&(h, g))) {
                        if self.comp1[&(h, gf)] != self.comp1[&(hg, f)] {
                            return err("comp1 is not associative".into());
                        }
                    }
                }
            }
        }
        for b in 0..n2 {
            for a in 0..n2 {
                let composable = self.two_cells[a].dst == self.two_cells[b].src;
                match (composable, self.vcomp.get(&(b, a))) {
                    (true, None) => {
                        return err(format!("missing vcomp {} · {}", self.two_cells[b].name, self.two_cells[a].name))
                    }
                    (false, Some(_)) => return err("vcomp entry for non-composable pair".into()),
                    (true, Some(&c))
                        if self.two_cells[c].src != self.two_cells[a].src
                            || self.two_cells[c].dst != self.two_cells[b].dst =>
                    {
                        return err("vcomp has wrong endpoints".into());
                    }
                    _ => {}
                }
                let (fa, fb) = (&self.one_cells[self.two_cells[a].src], &self.one_cells[self.two_cells[b].src]);
                let hcomposable = fa.dst == fb.src;
                match (hcomposable, self.hcomp.get(&(b, a))) {
                    (true, None) => {
                        return err(format!("missing hcomp {} * {}", self.two_cells[b].name, self.two_cells[a].name))
                    }
                    (false, Some(_)) => return err("hcomp entry for non-composable pair".into()),
                    (true, Some(&c)) => {
                        let (ta, tb, tc) = (&self.two_cells[a], &self.two_cells[b], &self.two_cells[c]);
                        if tc.src != self.comp1[&(tb.src, ta.src)] || tc.dst != self.comp1[&(tb.dst, ta.dst)] {
                            return err(format!("hcomp {} * {} has wrong endpoints", tb.name, ta.name));
                        }
                    }
                    _ => {}
                }
            }
        }
        for a in 0..n2 {
            let t = &self.two_cells[a];
            if self.vcomp[&(a, self.id2[t.src])] != a || self.vcomp[&(self.id2[t.dst], a)] != a {
                return err(format!("vertical unit law fails for {}", t.name));
            }
            let f = &self.one_cells[t.src];
            if self.hcomp[&(a, self.id2[self.id1[f.src]])] != a || self.hcomp[&(self.id2[self.id1[f.dst]], a)] != a {
                return err(format!("horizontal unit law fails for {}", t.name));
            }
        }
        for g in 0..n1 {
            for f in 0..n1 {
                if let Some(&gf) = self.comp1.get(&(g, f)) {
                    if self.hcomp[&(self.id2[g], self.id2[f])] != self.id2[gf] {
                        return err("hcomp of identities is not an identity".into());
                    }
                }
            }
        }
        for c in 0..n2 {
            for b in 0..n2 {
                for a in 0..n2 {
                    if let (Some(&ba), Some(&cb)) = (self.vcomp.get(&(b, a)), self.vcomp.get(&(c, b))) {
                        if self.vcomp[&(c, ba)] != self.vcomp[&(cb, a)] {
                            return err("vcomp is not associative".into());
                        }
                    }
                    if let (Some(&ba), Some(&cb)) = (self.hcomp.get(&(b, a)), self.hcomp.get(&(c, b))) {
                        if self.hcomp[&(c, ba)] != self.hcomp[&(cb, a)] {
                            return err("hcomp is not associative".into());
                        }
                    }
                }
            }
        }
        // Interchange: (δ·γ) * (β·α) = (δ*β) · (γ*α).
        for a in 0..n2 {
            for b in 0..n2 {
                let Some(&ba) = self.vcomp.get(&(b, a)) else { continue };
                for g in 0..n2 {
                    let Some(&ga) = self.hcomp.get(&(g, a)) else { continue };
                    for d in 0..n2 {
                        let Some(&dg) = self.vcomp.get(&(d, g)) else { continue };
                        let lhs = self.hcomp[&(dg, ba)];
                        let rhs = self.vcomp[&(self.hcomp[&(d, b)], ga)];
                        if lhs != rhs {
                            return err("interchange law fails".into());
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
