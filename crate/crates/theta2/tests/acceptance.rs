#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use theta2::anodyne::*;
use theta2::boxprod::{
    boundary, boundary_leibniz, horn_h, horn_h_leibniz, horn_v, horn_v_leibniz, spine, BoxCell, BoxProduct,
};
use theta2::cellset::{
    from_simplicial, generators, member, representable, restrict, CellularSet, Chaotic, Representable, Subobject,
};
use theta2::hyperface::{hyperfaces, HyperfaceLabel};
use theta2::parse::{parse_cellular, parse_shape};
use theta2::twocat::{free_cell_2cat, nerve};
use theta2::{CellularOperator, Shuffle, SimplicialOperator, ThetaShape};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Exhaustive category laws over objects `0..homs.len()`. Composites are
/// tabulated once as indices into the hom lists, then every composable triple
/// is compared both ways.
fn category_laws<T: Ord + Clone>(
    homs: &[Vec<Vec<T>>],
    identity: impl Fn(usize) -> T,
    after: impl Fn(&T, &T) -> T,
) -> Result<u64, String> {
    let n = homs.len();
    let index: Vec<Vec<BTreeMap<&T, u32>>> = homs
        .iter()
        .map(|row| row.iter().map(|h| h.iter().enumerate().map(|(i, f)| (f, i as u32)).collect()).collect())
        .collect();
    for a in 0..n {
        let id = identity(a);
        for b in 0..n {
            for f in &homs[a][b] {
                ensure(after(&identity(b), f) == *f && after(f, &id) == *f, || "identity law fails".into())?;
            }
        }
    }
    // table[a][b][c][f * |hom(b,c)| + g] = g ∘ f
    let mut table = vec![vec![vec![Vec::new(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut t = Vec::with_capacity(homs[a][b].len() * homs[b][c].len());
                for f in &homs[a][b] {
                    for g in &homs[b][c] {
                        let gf = after(g, f);
                        let i = *index[a][c].get(&gf).ok_or("composite outside its hom set")?;
                        t.push(i);
                    }
                }
                table[a][b][c] = t;
            }
        }
    }
    let mut checked = 0u64;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let (nb, nc, nd) = (homs[b][c].len(), homs[c][d].len(), homs[b][d].len());
                    let (abc, acd, bcd, abd) = (&table[a][b][c], &table[a][c][d], &table[b][c][d], &table[a][b][d]);
                    for f in 0..homs[a][b].len() {
                        let hg_f = &abd[f * nd..(f + 1) * nd];
                        for g in 0..nb {
                            let gf = abc[f * nb + g] as usize;
                            let h_gf = &acd[gf * nc..(gf + 1) * nc];
                            let hg = &bcd[g * nc..(g + 1) * nc];
                            for h in 0..nc {
                                if h_gf[h] != hg_f[hg[h] as usize] {
                                    return Err(format!("associativity fails on objects {a},{b},{c},{d}"));
                                }
                            }
                            checked += nc as u64;
                        }
                    }
                }
            }
        }
    }
    Ok(checked)
}

fn criterion_1() -> Outcome {
    let n = 6;
    let homs: Vec<Vec<Vec<SimplicialOperator>>> =
        (0..=n).map(|a| (0..=n).map(|b| SimplicialOperator::all(a, b)).collect()).collect();
    let delta = category_laws(&homs, SimplicialOperator::identity, |g, f| g.after(f).unwrap())?;

    let shapes = ThetaShape::all_up_to(3);
    let homs: Vec<Vec<Vec<CellularOperator>>> =
        shapes.iter().map(|a| shapes.iter().map(|b| CellularOperator::all(a, b)).collect()).collect();
    let theta = category_laws(&homs, |a| CellularOperator::identity(&shapes[a]), |g, f| g.after(f).unwrap())?;
    Ok(format!("{delta} triples in Δ (endpoints ≤ 6), {theta} in Θ₂ (dim ≤ 3)"))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_2() -> Outcome {
    for m in 0..=5 {
        for n in 0..=5 {
            let c = Shuffle::all(m, n).len();
            ensure(c == binomial(m + n, m), || format!("|Sh({m},{n})| = {c}"))?;
        }
    }
    let expected: BTreeSet<(&str, &str)> = [
        ("00012", "00112"),
        ("00112", "00122"),
        ("00112", "01112"),
        ("00122", "01122"),
        ("01112", "01122"),
        ("01122", "01222"),
    ]
    .into_iter()
    .collect();
    let word = |x: &Shuffle| x.alpha().iter().map(|d| d.to_string()).collect::<String>();
    let mut edges = BTreeSet::new();
    for x in Shuffle::all(2, 2) {
        for y in x.covers().1 {
            edges.insert((word(&x), word(&y)));
        }
    }
    let edges: BTreeSet<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    ensure(edges == expected, || format!("Sh(2,2) covers {edges:?}"))?;

    let mut covers = 0;
    for m in 0..=4 {
        for n in 0..=4 {
            let all = Shuffle::all(m, n);
            let lt = |a: &Shuffle, b: &Shuffle| a != b && a.leq(b).unwrap();
            for x in &all {
                let mut below: Vec<&Shuffle> =
                    all.iter().filter(|y| lt(y, x) && !all.iter().any(|z| lt(y, z) && lt(z, x))).collect();
                let mut above: Vec<&Shuffle> =
                    all.iter().filter(|y| lt(x, y) && !all.iter().any(|z| lt(x, z) && lt(z, y))).collect();
                below.sort();
                above.sort();
                let mut from_lower: Vec<Shuffle> =
                    x.lower_corners().iter().map(|&j| x.predecessor_at(j).unwrap()).collect();
                let mut from_upper: Vec<Shuffle> =
                    x.upper_corners().iter().map(|&j| x.successor_at(j).unwrap()).collect();
                from_lower.sort();
                from_upper.sort();
                let distinct =
                    from_lower.windows(2).all(|w| w[0] != w[1]) && from_upper.windows(2).all(|w| w[0] != w[1]);
                ensure(distinct && below == from_lower.iter().collect::<Vec<_>>(), || format!("lower covers of {x}"))?;
                ensure(above == from_upper.iter().collect::<Vec<_>>(), || format!("upper covers of {x}"))?;
                covers += below.len();
            }
        }
    }
    Ok(format!("counts for m,n ≤ 5, Sh(2,2) Hasse edges, {covers} covers matched to corners for m,n ≤ 4"))
}

fn criterion_3() -> Outcome {
    let shapes = ThetaShape::all_up_to(4);
    let mut total = 0;
    for src in &shapes {
        let mut count: HashMap<CellularOperator, usize> = HashMap::new();
        for d in CellularOperator::degeneracies_from(src) {
            for dst in &shapes {
                for g in CellularOperator::all(d.target(), dst).into_iter().filter(|g| g.is_face()) {
                    *count.entry(g.after(&d).unwrap()).or_default() += 1;
                }
            }
        }
        for dst in &shapes {
            for f in CellularOperator::all(src, dst) {
                let n = count.get(&f).copied().unwrap_or(0);
                ensure(n == 1, || format!("{f} has {n} factorizations"))?;
                let (d, g) = f.reedy_factor();
                ensure(d.is_degeneracy() && g.is_face() && g.after(&d).unwrap() == f, || {
                    format!("reedy_factor of {f}")
                })?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} operators, each with exactly one factorization"))
}

fn criterion_4() -> Outcome {
    let mut faces = 0;
    for s in ThetaShape::all_up_to(5) {
        let hs = hyperfaces(&s);
        let outer: Vec<&CellularOperator> = hs.iter().filter(|(l, _)| !l.is_inner(&s)).map(|(_, f)| f).collect();
        for f in CellularOperator::faces_into(&s).into_iter().filter(|f| !f.is_identity()) {
            let through = |g: &CellularOperator| f.factor_through(g).unwrap().is_some();
            ensure(hs.iter().any(|(_, g)| through(g)), || format!("{f} misses every hyperface"))?;
            if f.is_outer_face() {
                ensure(outer.iter().any(|g| through(g)), || format!("outer {f} misses every outer hyperface"))?;
            }
            faces += 1;
        }
    }
    Ok(format!("{faces} proper faces on shapes of dim ≤ 5"))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for s in ThetaShape::all_up_to(5) {
        ensure(boundary(&s).domain == boundary_leibniz(&s), || format!("∂{s}"))?;
        checked += 1;
        for k in 1..s.n() {
            ensure(horn_h(&s, k).unwrap().domain == horn_h_leibniz(&s, k).unwrap(), || format!("Λh^{k}{s}"))?;
            checked += 1;
        }
        for k in 1..=s.n() {
            for i in (0..=s.q(k)).filter(|_| s.q(k) > 0) {
                ensure(horn_v(&s, k, i).unwrap().domain == horn_v_leibniz(&s, k, i).unwrap(), || {
                    format!("Λv^{k};{i}{s}")
                })?;
                checked += 1;
            }
        }
    }
    let s = parse_shape("[2;1,1]").unwrap();
    let h = horn_h(&s, 1).unwrap();
    let missing = parse_cellular("[{0,2};{0,1},{0,1}]:[1;1]->[2;1,1]").unwrap();
    ensure(missing.codim().ok() == Some(2) && !member(&h.codomain, &h.domain, &missing), || {
        "Λh¹[2;1,1] contains [{0,2};{0,1},{0,1}]".into()
    })?;
    let others = CellularOperator::faces_into(&s)
        .into_iter()
        .filter(|f| {
            !f.is_identity()
                && f != &missing
                && !(f.is_horizontal() && f.horizontal() == &SimplicialOperator::coface(2, 1))
        })
        .all(|f| member(&h.codomain, &h.domain, &f));
    ensure(others, || "Λh¹[2;1,1] misses a face other than the 1st horizontal ones".into())?;
    Ok(format!(
        "{checked} boundaries and horns on dim ≤ 5; Λh¹[2;1,1] misses the codim-2 face [{{0,2}};{{0,1}},{{0,1}}]"
    ))
}

/// A cellular set `x` whose cells are identified with operators into `s` by
/// `to_op`: level sizes, bijectivity, nondegeneracy and the action of every
/// face and elementary degeneracy are compared with `Θ₂[s]` through `bound`.
fn iso_to_representable<X: CellularSet>(
    x: &X,
    s: &ThetaShape,
    bound: usize,
    to_op: impl Fn(&X::Cell) -> CellularOperator,
) -> Result<usize, String> {
    let r = Representable::full(s);
    let mut cells_seen = 0;
    for src in ThetaShape::all_up_to(bound) {
        let cells = x.cells_at(&src);
        let ops: BTreeSet<CellularOperator> = CellularOperator::all(&src, s).into_iter().collect();
        let mapped: BTreeSet<CellularOperator> = cells.iter().map(&to_op).collect();
        ensure(cells.len() == ops.len() && mapped == ops, || format!("cells of {src} over {s}"))?;
        let faces = CellularOperator::faces_into(&src);
        let degeneracies: Vec<CellularOperator> = ThetaShape::all_of_dim(src.dim() + 1)
            .iter()
            .filter(|t| t.dim() <= bound)
            .flat_map(|t| CellularOperator::all(t, &src).into_iter().filter(|d| d.is_degeneracy()))
            .collect();
        for c in &cells {
            let f = to_op(c);
            ensure(x.is_nondegenerate(c) == r.is_nondegenerate(&f), || format!("nondegeneracy of {f}"))?;
            for g in faces.iter().chain(&degeneracies) {
                ensure(to_op(&x.act(c, g)) == f.after(g).unwrap(), || format!("{f} acted on by {g}"))?;
            }
        }
        cells_seen += cells.len();
    }
    Ok(cells_seen)
}

fn criterion_6() -> Outcome {
    let bound = 6;
    let (mut boxes, mut nerves) = (0, 0);
    for s in ThetaShape::all_up_to(4) {
        let b = BoxProduct::standard(&s, bound);
        boxes += iso_to_representable(&b, &s, bound, |c: &BoxCell| c.to_operator(&s))?;
        let fc = free_cell_2cat(&s);
        let nv = nerve(&fc.category, bound);
        nerves += iso_to_representable(&nv, &s, bound, |c| fc.to_operator(c))?;
    }
    Ok(format!("{boxes} box cells and {nerves} nerve cells matched through dim {bound}"))
}

fn criterion_7() -> Outcome {
    let claims = claim_matrix(3, 2).map_err(|e| e.to_string())?;
    let shapes: BTreeSet<String> = claims.iter().map(|(s, _)| s.to_string()).collect();
    let mut checked = 0;
    for (s, c) in &claims {
        ensure(c.ok(), || format!("{} on {s}: {}", c.name, c.failures.first().cloned().unwrap_or_default()))?;
        checked += c.checked;
    }
    ensure(!claims.is_empty(), || "no claims ran".into())?;
    Ok(format!("{} claim checks ({checked} instances) on {} shapes", claims.len(), shapes.len()))
}

fn report_failure(r: &Report) -> String {
    match r.first_failure() {
        Some(s) => format!("{}: step {} {} {:?}", r.summary(), s.index, s.cell, s.failures.first()),
        None => r.summary(),
    }
}

fn criterion_8() -> Outcome {
    let reports = replay_matrix(4).map_err(|e| e.to_string())?;
    let mut per_script: BTreeMap<&str, usize> = BTreeMap::new();
    let mut steps = 0;
    for r in &reports {
        ensure(r.ok() && r.status != Status::Failed, || report_failure(r))?;
        ensure(r.steps.iter().all(|s| s.checks.all()), || report_failure(r))?;
        *per_script.entry(r.script.as_str()).or_default() += 1;
        steps += r.steps.len();
    }
    for script in ["spine_anodyne", "sigma_s", "upsilon_vertical", "upsilon_full", "oury_from_alt", "alt_trivial"] {
        ensure(per_script.contains_key(script), || format!("{script} never ran"))?;
    }
    let counts: Vec<String> = per_script.iter().map(|(k, v)| format!("{k} {v}")).collect();
    Ok(format!("{} replays, {steps} squares ({})", reports.len(), counts.join(", ")))
}

fn criterion_9() -> Outcome {
    let (vb, hb) = (5, 4);
    let reports = equiv_matrix(vb, hb).map_err(|e| e.to_string())?;
    let mut lines = Vec::new();
    for r in &reports {
        let d: usize = r.params["bound"].parse().map_err(|_| "bound parameter")?;
        ensure(r.ok(), || report_failure(r))?;
        ensure(r.final_check.certified_dim == d - 1 && r.final_check.uncertified_from == Some(d), || {
            format!("{}: certified through {}", r.summary(), r.final_check.certified_dim)
        })?;
        let k = r.params.get("k").map(|k| format!(" k={k}")).unwrap_or_default();
        lines.push(format!("{} {}{k}", r.script, r.params["shape"]));
    }
    ensure(reports.len() == 8, || format!("{} reports", reports.len()))?;
    Ok(format!("{} certified through D−1 (vert D={vb}, horiz D={hb}; dims ≥ D uncertified)", lines.join(", ")))
}

fn criterion_10() -> Outcome {
    let j = from_simplicial(Chaotic::J, 4);
    let lift = lift_check(&j, &HornFamily::inner(3), 4).map_err(|e| e.to_string())?;
    ensure(lift.ok() && lift.certified_dim == 3 && lift.maps() > 0, || lift.summary())?;

    // Pullback: drop a generator of the predicted locus.
    let s = ThetaShape::new(vec![3]);
    let sp = spine(&s);
    let small = ThetaShape::new(vec![2]);
    let w = spine(&small).domain;
    let gens = generators(&representable(&small, 3), &w);
    let dropped = theta2::cellset::closure(&representable(&small, 3), &gens[1..]).unwrap();
    let step = |expected_w: Subobject<CellularOperator>| GluingStep {
        ambient: &sp.codomain,
        before: &sp.domain,
        attaching_cell: HyperfaceLabel::v(1, 3).operator(&s).unwrap(),
        expected_w,
        horn: HornTag::named("spine"),
    };
    let good = verify_gluing_square(&step(w));
    ensure(good.checks.all(), || "unmutated spine square fails".into())?;
    let bad = verify_gluing_square(&step(dropped));
    ensure(!bad.checks.pullback && bad.checks.cover && bad.checks.injective, || "dropped generator not caught".into())?;

    // Injective: attach a degenerate cell.
    let edge = ThetaShape::new(vec![0]);
    let rep = representable(&edge, 2);
    let sigma = CellularOperator::degeneracies_from(&ThetaShape::new(vec![0, 0]))
        .into_iter()
        .find(|d| d.target() == &edge)
        .unwrap();
    let out = verify_gluing_square(&GluingStep {
        ambient: &rep,
        before: &Subobject::empty(),
        attaching_cell: sigma,
        expected_w: Subobject::empty(),
        horn: HornTag::named("mutation"),
    });
    ensure(!out.checks.injective, || "degenerate attaching cell not caught".into())?;

    // Cover: a map that sends an edge to 0 -> 2 and its endpoints to 1.
    let tri = ThetaShape::new(vec![0, 0]);
    let z = representable(&tri, 2);
    let x = representable(&edge, 1);
    let long = CellularOperator::faces_into(&tri).into_iter().find(|f| f.bare() == "[{0,2};!,!]").unwrap();
    let middle = CellularOperator::vertex(&tri, 1);
    let f = |c: &CellularOperator| if c.source().dim() == 1 { long.clone() } else { middle.clone() };
    let out = verify_gluing_map(&x, &z, &Subobject::empty(), f, &Subobject::empty());
    ensure(!out.checks.cover, || "map missing faces not caught".into())?;

    // Lifting: the hollow triangle has an unfilled inner horn.
    let hollow = boundary(&tri);
    let rep = representable(&tri, 2);
    let x = restrict(&rep, &hollow.domain);
    let r = lift_check(&x, &HornFamily::single(&tri, HornKind::Horizontal { k: 1 }), 3).map_err(|e| e.to_string())?;
    ensure(!r.ok(), || "hollow triangle fills".into())?;

    Ok(format!("{}; engineered pullback, injective, cover and lifting failures all caught", lift.summary()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("category laws", criterion_1),
        ("shuffles", criterion_2),
        ("Reedy factorization", criterion_3),
        ("hyperfaces generate faces", criterion_4),
        ("Leibniz boundaries and horns", criterion_5),
        ("box products and nerves", criterion_6),
        ("claims", criterion_7),
        ("replays", criterion_8),
        ("equivalence replays", criterion_9),
        ("lifting and mutations", criterion_10),
    ];
    let filter: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        if filter.is_some_and(|f| f != n) {
            continue;
        }
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let dt = t.elapsed();
        total += dt;
        match outcome {
            Ok(detail) => println!("PASS criterion {n} ({name}, {:.1}s): {detail}", dt.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {n} ({name}, {:.1}s): {detail}", dt.as_secs_f64());
            }
        }
    }
    println!("{} failed, {:.1}s total", failed, total.as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
