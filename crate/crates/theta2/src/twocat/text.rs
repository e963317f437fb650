//! Line-based text format for finite 2-categories:
//!
//! ```text
//! object a
//! 1cell f : a -> b
//! 2cell alpha : f => g
//! comp1 g f = h
//! vcomp beta alpha = gamma
//! hcomp beta alpha = gamma
//! ```
//!
//! Identities are implicit and named `id_a`, `id_f`; composites involving
//! them need not be listed, nor horizontal composites of identity 2-cells. `#` starts a comment.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::Finite2Category;

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos: line, msg: msg.into() }
}

pub fn parse_2category(text: &str) -> Result<Finite2Category> {
    let mut c = Finite2Category::default();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let lookup = |kind: &str, name: &str, found: Option<usize>| {
            found.ok_or_else(|| parse_error(no + 1, format!("unknown {kind} {name}")))
        };
        match toks.as_slice() {
            ["object", names @ ..] if !names.is_empty() => {
                for n in names {
                    if c.object(n).is_some() {
                        return Err(parse_error(no + 1, format!("duplicate object {n}")));
                    }
                    c.add_object(n);
                }
            }
            ["1cell", name, ":", a, "->", b] => {
                let a = lookup("object", a, c.object(a))?;
                let b = lookup("object", b, c.object(b))?;
                if c.one_cell(name).is_some() {
                    return Err(parse_error(no + 1, format!("duplicate 1-cell {name}")));
                }
                c.add_one_cell(name, a, b);
            }
            ["2cell", name, ":", f, "=>", g] => {
                let f = lookup("1-cell", f, c.one_cell(f))?;
                let g = lookup("1-cell", g, c.one_cell(g))?;
                if c.two_cell(name).is_some() {
                    return Err(parse_error(no + 1, format!("duplicate 2-cell {name}")));
                }
                c.add_two_cell(name, f, g);
            }
            [op @ ("comp1" | "vcomp" | "hcomp"), x, y, "=", z] => {
                let kind = if *op == "comp1" { "1-cell" } else { "2-cell" };
                let find = |name: &str| if *op == "comp1" { c.one_cell(name) } else { c.two_cell(name) };
                let key = (lookup(kind, x, find(x))?, lookup(kind, y, find(y))?);
                let val = lookup(kind, z, find(z))?;
                let table = match *op {
                    "comp1" => &mut c.comp1,
                    "vcomp" => &mut c.vcomp,
                    _ => &mut c.hcomp,
                };
                insert(table, key, val).map_err(|_| parse_error(no + 1, format!("conflicting {op} entry")))?;
            }
            _ => return Err(parse_error(no + 1, format!("cannot read line: {line}"))),
        }
    }
    let pairs: Vec<((usize, usize), usize)> = c.comp1.iter().map(|(&k, &v)| (k, v)).collect();
    for ((g, f), h) in pairs {
        c.hcomp.entry((c.id2[g], c.id2[f])).or_insert(c.id2[h]);
    }
    c.validate()?;
    Ok(c)
}

fn insert(table: &mut HashMap<(usize, usize), usize>, key: (usize, usize), val: usize) -> std::result::Result<(), ()> {
    match table.insert(key, val) {
        Some(old) if old != val => Err(()),
        _ => Ok(()),
    }
}

/// Prints the non-identity data; composites with an identity argument are omitted.
pub fn print_2category(c: &Finite2Category) -> String {
    let mut out = String::new();
    out.push_str(&format!("object {}\n", c.objects.join(" ")));
    let is_id1 = |f: usize| c.id1.contains(&f);
    let is_id2 = |a: usize| c.id2.contains(&a);
    for (f, cell) in c.one_cells.iter().enumerate() {
        if !is_id1(f) {
            out.push_str(&format!("1cell {} : {} -> {}\n", cell.name, c.objects[cell.src], c.objects[cell.dst]));
        }
    }
    for (a, cell) in c.two_cells.iter().enumerate() {
        if !is_id2(a) {
            out.push_str(&format!(
                "2cell {} : {} => {}\n",
                cell.name, c.one_cells[cell.src].name, c.one_cells[cell.dst].name
            ));
        }
    }
    let mut lines = Vec::new();
    for (&(g, f), &h) in &c.comp1 {
        if !is_id1(g) && !is_id1(f) {
            lines.push(format!("comp1 {} {} = {}", c.one_cells[g].name, c.one_cells[f].name, c.one_cells[h].name));
        }
    }
    let mut lines2 = Vec::new();
    for (name, table) in [("vcomp", &c.vcomp), ("hcomp", &c.hcomp)] {
        for (&(b, a), &d) in table {
            let units = if name == "vcomp" {
                is_id2(a) || is_id2(b)
            } else {
                (is_id2(a) && is_id2(b)) || is_unit_whisker(c, a) || is_unit_whisker(c, b)
            };
            if !units {
                lines2
                    .push(format!("{name} {} {} = {}", c.two_cells[b].name, c.two_cells[a].name, c.two_cells[d].name));
            }
        }
    }
    lines.sort();
    lines2.sort();
    for l in lines.into_iter().chain(lines2) {
        out.push_str(&l);
        out.push('\n');
    }
    out
}

/// The identity 2-cell on an identity 1-cell.
fn is_unit_whisker(c: &Finite2Category, a: usize) -> bool {
    c.id1.iter().any(|&i| c.id2[i] == a)
}
