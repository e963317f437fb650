//! Simplicial sets regarded as cellular sets through the horizontal part.

use std::fmt;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::delta::SimplicialOperator;
use crate::theta::{CellularOperator, ThetaShape};

use super::CellularSet;

pub trait SimplicialSet {
    type Simplex: Clone + Eq + Hash + Ord + Debug + Display;

    fn simplices(&self, n: usize) -> Vec<Self::Simplex>;

    fn dim_of(&self, x: &Self::Simplex) -> usize;

    fn act(&self, x: &Self::Simplex, a: &SimplicialOperator) -> Self::Simplex;

    fn contains(&self, x: &Self::Simplex) -> bool;

    fn describe(&self) -> String;
}

/// `Δ[q]`: simplices are operators into `[q]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StandardSimplex(pub usize);

impl SimplicialSet for StandardSimplex {
    type Simplex = SimplicialOperator;

    fn simplices(&self, n: usize) -> Vec<SimplicialOperator> {
        SimplicialOperator::all(n, self.0)
    }

    fn dim_of(&self, x: &SimplicialOperator) -> usize {
        x.source()
    }

    fn act(&self, x: &SimplicialOperator, a: &SimplicialOperator) -> SimplicialOperator {
        x.after_unchecked(a)
    }

    fn contains(&self, x: &SimplicialOperator) -> bool {
        x.target() == self.0
    }

    fn describe(&self) -> String {
        format!("Δ[{}]", self.0)
    }
}

/// A word `x₀x₁…x_n` over the objects of a chaotic category.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn act(&self, a: &SimplicialOperator) -> Word {
        Word(a.values().iter().map(|&i| self.0[i]).collect())
    }

    /// All words of length `len` over `objects` letters, lexicographically.
    pub fn all(len: usize, objects: usize) -> Vec<Word> {
        let mut out = vec![Vec::with_capacity(len)];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w: Vec<usize>| {
                    (0..objects).map(move |x| {
                        let mut v = w.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Word).collect()
    }
}

/// Letters `0` and `1` print as `◊` and `♦`; larger ones as digits.
pub(crate) fn letter(x: usize) -> String {
    match x {
        0 => "◊".to_string(),
        1 => "♦".to_string(),
        _ => x.to_string(),
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{}", letter(x))?;
        }
        Ok(())
    }
}

/// The nerve of the chaotic category on `objects` objects; `J` for two.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Chaotic {
    pub objects: usize,
}

impl Chaotic {
    pub const J: Chaotic = Chaotic { objects: 2 };
}

impl SimplicialSet for Chaotic {
    type Simplex = Word;

    fn simplices(&self, n: usize) -> Vec<Word> {
        Word::all(n + 1, self.objects)
    }

    fn dim_of(&self, x: &Word) -> usize {
        x.0.len() - 1
    }

    fn act(&self, x: &Word, a: &SimplicialOperator) -> Word {
        x.act(a)
    }

    fn contains(&self, x: &Word) -> bool {
        !x.0.is_empty() && x.0.iter().all(|&c| c < self.objects)
    }

    fn describe(&self) -> String {
        if self.objects == 2 {
            "J".to_string()
        } else {
            format!("chaotic({})", self.objects)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HorizontalCell<T> {
    pub simplex: T,
    pub shape: ThetaShape,
}

impl<T: Display> fmt::Display for HorizontalCell<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.simplex, self.shape)
    }
}

/// A simplicial set seen as a cellular set: cells at `[n;q]` are `n`-simplices.
#[derive(Clone, Debug)]
pub struct Horizontal<S> {
    set: S,
    bound: usize,
}

pub fn from_simplicial<S: SimplicialSet>(set: S, bound: usize) -> Horizontal<S> {
    Horizontal { set, bound }
}

impl<S: SimplicialSet> Horizontal<S> {
    pub fn simplicial(&self) -> &S {
        &self.set
    }
}

impl<S: SimplicialSet> CellularSet for Horizontal<S> {
    type Cell = HorizontalCell<S::Simplex>;

    fn bound(&self) -> usize {
        self.bound
    }

    fn shape_of(&self, c: &Self::Cell) -> ThetaShape {
        c.shape.clone()
    }

    fn cells_at(&self, shape: &ThetaShape) -> Vec<Self::Cell> {
        if shape.dim() > self.bound {
            return Vec::new();
        }
        self.set
            .simplices(shape.n())
            .into_iter()
            .map(|simplex| HorizontalCell { simplex, shape: shape.clone() })
            .collect()
    }

    fn act(&self, c: &Self::Cell, f: &CellularOperator) -> Self::Cell {
        HorizontalCell { simplex: self.set.act(&c.simplex, f.horizontal()), shape: f.source().clone() }
    }

    fn contains(&self, c: &Self::Cell) -> bool {
        self.set.contains(&c.simplex) && self.set.dim_of(&c.simplex) == c.shape.n()
    }

    fn describe(&self) -> String {
        self.set.describe()
    }
}
