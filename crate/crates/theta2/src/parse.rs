//! Text grammar for shapes, operators, shuffles, and hyperface labels.
//!
//! * shape: `[0]`, `[2;0,2]`
//! * simplicial operator: `{0,2}:[1]->[2]` (the suffix may be omitted, in
//!   which case the target is the largest value)
//! * cellular operator: `[{0,2};!,{0,1,2}]:[1;2]->[2;0,2]`; a component is a
//!   value list, `!` (the map into `[0]`), or `id`
//! * shuffle: `<{0,0,1},{0,1,1}>`
//! * hyperface label: `δh^0`, `δh^n`, `δh^{1;<{0,0,1},{0,1,1}>}`, `δv^{2;1}`;
//!   the `δ` may be written `d` or dropped, and the braces are optional

use crate::delta::{Shuffle, SimplicialOperator};
use crate::error::{Error, Result};
use crate::hyperface::HyperfaceLabel;
use crate::theta::{covering_interval, CellularOperator, ThetaShape};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

enum Comp {
    Values(Vec<usize>),
    Bang,
    Id,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn peek(&mut self, token: &str) -> bool {
        self.ws();
        self.rest().starts_with(token)
    }

    fn number(&mut self) -> Result<usize> {
        self.ws();
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return self.err("expected a number");
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| Error::Parse { pos: self.pos, msg: "number too large".into() })
    }

    fn end(&mut self) -> Result<()> {
        self.ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn brace_list(&mut self) -> Result<Vec<usize>> {
        self.expect("{")?;
        let mut v = vec![self.number()?];
        while self.eat(",") {
            v.push(self.number()?);
        }
        self.expect("}")?;
        Ok(v)
    }

    fn shape(&mut self) -> Result<ThetaShape> {
        self.expect("[")?;
        let n = self.number()?;
        let mut qs = Vec::new();
        if self.eat(";") {
            qs.push(self.number()?);
            while self.eat(",") {
                qs.push(self.number()?);
            }
        }
        self.expect("]")?;
        if qs.len() != n {
            return self.err(format!("[{n};…] needs {n} entries, got {}", qs.len()));
        }
        Ok(ThetaShape::new(qs))
    }

    fn simplex(&mut self) -> Result<usize> {
        self.expect("[")?;
        let n = self.number()?;
        self.expect("]")?;
        Ok(n)
    }

    fn simplicial(&mut self) -> Result<SimplicialOperator> {
        let values = self.brace_list()?;
        let at = self.pos;
        if self.eat(":") {
            let m = self.simplex()?;
            self.expect("->")?;
            let n = self.simplex()?;
            if m + 1 != values.len() {
                return Err(Error::Parse { pos: at, msg: format!("{} values for source [{m}]", values.len()) });
            }
            SimplicialOperator::new(values, n)
        } else {
            let n = *values.iter().max().unwrap();
            SimplicialOperator::new(values, n)
        }
    }

    fn component(&mut self) -> Result<Comp> {
        if self.eat("!") || self.eat("—") || self.eat("-") {
            Ok(Comp::Bang)
        } else if self.eat("id") {
            Ok(Comp::Id)
        } else if self.peek("{") {
            Ok(Comp::Values(self.brace_list()?))
        } else {
            self.err("expected a component")
        }
    }

    fn cellular(&mut self) -> Result<CellularOperator> {
        self.expect("[")?;
        let h = self.brace_list()?;
        let mut comps = Vec::new();
        if self.eat(";") && !self.peek("]") {
            comps.push(self.component()?);
            while self.eat(",") {
                comps.push(self.component()?);
            }
        }
        self.expect("]")?;
        let at = self.pos;
        self.expect(":")?;
        let src = self.shape()?;
        self.expect("->")?;
        let dst = self.shape()?;
        let alpha = SimplicialOperator::new(h, dst.n())?;
        if alpha.source() != src.n() {
            return Err(Error::Parse {
                pos: at,
                msg: format!("horizontal part has source [{}], shape {src}", alpha.source()),
            });
        }
        let covered: Vec<usize> = (alpha.first() + 1..=alpha.last()).collect();
        if covered.len() != comps.len() {
            return Err(Error::Parse {
                pos: at,
                msg: format!("expected {} components, got {}", covered.len(), comps.len()),
            });
        }
        let mut out = Vec::with_capacity(comps.len());
        for (k, c) in covered.into_iter().zip(comps) {
            let p = src.q(covering_interval(&alpha, k));
            let q = dst.q(k);
            out.push(match c {
                Comp::Values(v) => {
                    if v.len() != p + 1 {
                        return Err(Error::Parse { pos: at, msg: format!("component at {k} needs {} values", p + 1) });
                    }
                    SimplicialOperator::new(v, q)?
                }
                Comp::Bang if q == 0 => SimplicialOperator::constant(p, 0, 0),
                Comp::Bang => return Err(Error::Parse { pos: at, msg: format!("`!` at {k} but q_{k} = {q}") }),
                Comp::Id if p == q => SimplicialOperator::identity(q),
                Comp::Id => return Err(Error::Parse { pos: at, msg: format!("`id` at {k} but [{p}] ≠ [{q}]") }),
            });
        }
        CellularOperator::new(src, dst, alpha, out)
    }

    fn shuffle(&mut self) -> Result<Shuffle> {
        self.expect("<")?;
        let a = self.brace_list()?;
        self.expect(",")?;
        let b = self.brace_list()?;
        self.expect(">")?;
        if a.len() != b.len() {
            return self.err("shuffle halves differ in length");
        }
        let m = *a.iter().max().unwrap();
        let n = *b.iter().max().unwrap();
        Shuffle::from_pair(&SimplicialOperator::new(a, m)?, &SimplicialOperator::new(b, n)?)
    }

    fn label(&mut self, shape: Option<&ThetaShape>) -> Result<HyperfaceLabel> {
        if !self.eat("δ") {
            self.eat("d");
        }
        let horizontal = if self.eat("h") {
            true
        } else if self.eat("v") {
            false
        } else {
            return self.err("expected `h` or `v`");
        };
        self.eat("^");
        let braced = self.eat("{");
        let label = if horizontal {
            if self.eat("n") {
                HyperfaceLabel::Hn
            } else {
                let k = self.number()?;
                if self.eat(";") {
                    HyperfaceLabel::hk(k, self.shuffle()?)
                } else if k == 0 {
                    HyperfaceLabel::H0
                } else if shape.is_some_and(|s| s.n() == k) {
                    HyperfaceLabel::Hn
                } else {
                    return self.err(format!("δh^{k} needs a shuffle"));
                }
            }
        } else {
            let k = self.number()?;
            self.expect(";")?;
            HyperfaceLabel::v(k, self.number()?)
        };
        if braced {
            self.expect("}")?;
        }
        Ok(label)
    }
}

pub fn parse_shape(s: &str) -> Result<ThetaShape> {
    let mut c = Cursor::new(s);
    let v = c.shape()?;
    c.end()?;
    Ok(v)
}

pub fn parse_simplicial(s: &str) -> Result<SimplicialOperator> {
    let mut c = Cursor::new(s);
    let v = c.simplicial()?;
    c.end()?;
    Ok(v)
}

pub fn parse_cellular(s: &str) -> Result<CellularOperator> {
    let mut c = Cursor::new(s);
    let v = c.cellular()?;
    c.end()?;
    Ok(v)
}

pub fn parse_shuffle(s: &str) -> Result<Shuffle> {
    let mut c = Cursor::new(s);
    let v = c.shuffle()?;
    c.end()?;
    Ok(v)
}

/// Parses one label; `shape` resolves `δh^<n>` to `δh^n`.
pub fn parse_label(s: &str, shape: Option<&ThetaShape>) -> Result<HyperfaceLabel> {
    let mut c = Cursor::new(s);
    let v = c.label(shape)?;
    c.end()?;
    Ok(v)
}

/// Parses a comma-separated list of labels; the empty string and `{}` give
/// the empty list.
pub fn parse_label_set(s: &str, shape: Option<&ThetaShape>) -> Result<Vec<HyperfaceLabel>> {
    let mut c = Cursor::new(s);
    let mut out = Vec::new();
    let wrapped = c.peek("{}");
    if wrapped {
        c.expect("{}")?;
        c.end()?;
        return Ok(out);
    }
    c.ws();
    if c.pos == s.len() {
        return Ok(out);
    }
    out.push(c.label(shape)?);
    while c.eat(",") {
        out.push(c.label(shape)?);
    }
    c.end()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperface::hyperface_labels;

    #[test]
    fn shapes() {
        assert_eq!(parse_shape("[2;0,2]").unwrap(), ThetaShape::new(vec![0, 2]));
        assert_eq!(parse_shape(" [0] ").unwrap(), ThetaShape::point());
        assert!(parse_shape("[2;0]").is_err());
        assert!(parse_shape("[2;0,2").is_err());
    }

    #[test]
    fn simplicial() {
        let f = parse_simplicial("{0,2}:[1]->[2]").unwrap();
        assert_eq!(f.to_string(), "{0,2}:[1]->[2]");
        assert_eq!(parse_simplicial("{0,2}").unwrap(), f);
        assert!(parse_simplicial("{0,2}:[2]->[2]").is_err());
        assert!(parse_simplicial("{2,0}").is_err());
    }

    #[test]
    fn cellular_round_trip() {
        for dst in ThetaShape::all_up_to(4) {
            for src in ThetaShape::all_up_to(3) {
                for f in CellularOperator::all(&src, &dst) {
                    assert_eq!(parse_cellular(&f.to_string()).unwrap(), f);
                }
            }
        }
        let f = parse_cellular("[{0,1};—]:[1;0]->[2;0,2]").unwrap();
        assert_eq!(f.to_string(), "[{0,1};!]:[1;0]->[2;0,2]");
        let g = parse_cellular("[{0,2};!,id]:[1;2]->[2;0,2]").unwrap();
        assert_eq!(g.to_string(), "[{0,2};!,{0,1,2}]:[1;2]->[2;0,2]");
        assert!(parse_cellular("[{0,2};!]:[1;2]->[2;0,2]").is_err());
        assert!(parse_cellular("[{0}]").is_err());
    }

    #[test]
    fn labels() {
        let s = ThetaShape::new(vec![1, 1]);
        for l in hyperface_labels(&s) {
            assert_eq!(parse_label(&l.display_on(&s), Some(&s)).unwrap(), l);
            assert_eq!(parse_label(&l.to_string(), Some(&s)).unwrap(), l);
        }
        assert_eq!(parse_label("v^{2;1}", None).unwrap(), HyperfaceLabel::v(2, 1));
        assert_eq!(parse_label("dh0", None).unwrap(), HyperfaceLabel::H0);
        let set = parse_label_set("δv^{1;0}, h^{1;<{0,0,1},{0,1,1}>}", Some(&s)).unwrap();
        assert_eq!(set.len(), 2);
        assert!(parse_label_set("", None).unwrap().is_empty());
        assert!(parse_label_set("{}", None).unwrap().is_empty());
        assert!(parse_label("x^{1;1}", None).is_err());
    }

    #[test]
    fn shuffles() {
        let s = parse_shuffle("<{0,0,1,2,2,3},{0,1,1,1,2,2}>").unwrap();
        assert_eq!(s.to_string(), "<{0,0,1,2,2,3},{0,1,1,1,2,2}>");
        assert!(parse_shuffle("<{0,1},{0,1}>").is_err());
    }
}
