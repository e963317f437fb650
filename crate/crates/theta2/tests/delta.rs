use proptest::prelude::*;
use theta2::delta::{compose, PointKind, Shuffle, SimplicialOperator};
use theta2::parse::{parse_shuffle, parse_simplicial};

fn s(text: &str) -> SimplicialOperator {
    parse_simplicial(text).unwrap()
}

fn sh(m: usize, n: usize, alpha: &[usize]) -> Shuffle {
    Shuffle::new(m, n, alpha.to_vec()).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn composition_examples() {
    assert_eq!(compose(&s("{0,1}:[1]->[1]"), &s("{0,2}:[1]->[2]")).unwrap(), s("{0,2}:[1]->[2]"));
    assert_eq!(compose(&s("{0,0,1}:[2]->[1]"), &s("{0,2}:[1]->[2]")).unwrap(), s("{0,0,2}:[2]->[2]"));
    assert_eq!(compose(&s("{1,2}:[1]->[3]"), &s("{0,1,1,2}:[3]->[2]")).unwrap(), s("{1,1}:[1]->[2]"));
    assert!(compose(&s("{0,2}:[1]->[2]"), &s("{0,2}:[1]->[2]")).is_err());
}

#[test]
fn classification_examples() {
    let c = s("{0,2}:[1]->[2]").classify();
    assert!(c.mono && !c.epi && !c.inert && c.preserves_endpoints);
    let c = s("{1,2}:[1]->[3]").classify();
    assert!(c.mono && c.inert && !c.preserves_endpoints);
    let c = s("{0,0,1}:[2]->[1]").classify();
    assert!(c.epi && !c.mono && c.preserves_endpoints);
}

#[test]
fn op_dual_examples() {
    assert_eq!(s("{0,2}:[1]->[2]").op_dual(), s("{0,2}:[1]->[2]"));
    assert_eq!(s("{0,0,1}:[2]->[1]").op_dual(), s("{0,1,1}:[2]->[1]"));
    assert_eq!(SimplicialOperator::identity(3).op_dual(), SimplicialOperator::identity(3));
}

#[test]
fn ez_factor_examples() {
    let (e, m) = s("{0,0,2}:[2]->[2]").ez_factor();
    assert_eq!(e, s("{0,0,1}:[2]->[1]"));
    assert_eq!(m, s("{0,2}:[1]->[2]"));
    let f = s("{1,3}:[1]->[4]");
    assert_eq!(f.ez_factor(), (SimplicialOperator::identity(1), f.clone()));
    let g = s("{0,1,1}:[2]->[1]");
    assert_eq!(g.ez_factor(), (g.clone(), SimplicialOperator::identity(1)));
}

#[test]
fn ez_factor_is_the_only_epi_mono_factorization() {
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
fn shuffle_counts() {
    let expected =
        [[0, 0, 0, 1, 2], [0, 0, 1, 1, 2], [0, 0, 1, 2, 2], [0, 1, 1, 1, 2], [0, 1, 1, 2, 2], [0, 1, 2, 2, 2]];
    let got: Vec<Vec<usize>> = Shuffle::all(2, 2).iter().map(|x| x.alpha().to_vec()).collect();
    assert_eq!(got, expected.iter().map(|a| a.to_vec()).collect::<Vec<_>>());
    assert_eq!(Shuffle::all(0, 3).len(), 1);
    assert_eq!(Shuffle::all(3, 2).len(), 10);
    for m in 0..=5 {
        for n in 0..=5 {
            assert_eq!(Shuffle::all(m, n).len(), binomial(m + n, m));
        }
    }
}

#[test]
fn corner_examples() {
    let x = sh(3, 2, &[0, 0, 1, 2, 2, 3]);
    assert_eq!(x.alpha_prime(), vec![0, 1, 1, 1, 2, 2]);
    assert_eq!(x.corners(), (vec![3], vec![1, 4]));
    assert_eq!(Shuffle::minimum(2, 2).corners(), (vec![], vec![2]));
    for m in 0..=4 {
        for n in 0..=4 {
            assert!(Shuffle::maximum(m, n).upper_corners().is_empty());
            assert!(Shuffle::minimum(m, n).lower_corners().is_empty());
        }
    }
    assert_eq!(x.classify_point(3).unwrap(), PointKind::LowerCorner);
    assert_eq!(x.classify_point(2).unwrap(), PointKind::AlphaSingleton);
    assert_eq!(x.classify_point(1).unwrap(), PointKind::UpperCorner);
    assert!(x.classify_point(0).is_err());
    assert!(x.classify_point(5).is_err());
}

#[test]
fn covers_of_sh_2_2() {
    let x = sh(2, 2, &[0, 0, 1, 1, 2]);
    let (_, above) = x.covers();
    let mut above: Vec<Vec<usize>> = above.iter().map(|y| y.alpha().to_vec()).collect();
    above.sort();
    assert_eq!(above, vec![vec![0, 0, 1, 2, 2], vec![0, 1, 1, 1, 2]]);
    assert!(x.leq(&x).unwrap());
    assert!(x.leq(&sh(2, 3, &[0, 0, 1, 1, 1, 2])).is_err());
}

#[test]
fn covers_match_corners_and_leq() {
    for m in 0..=4 {
        for n in 0..=4 {
            let all = Shuffle::all(m, n);
            for x in &all {
                let (below, above) = x.covers();
                assert_eq!(below.len(), x.lower_corners().len());
                assert_eq!(above.len(), x.upper_corners().len());
                // Covers from the order alone: y < x with nothing strictly between.
                let strictly_below = |a: &Shuffle, b: &Shuffle| a != b && a.leq(b).unwrap();
                let mut by_order: Vec<&Shuffle> = all
                    .iter()
                    .filter(|y| {
                        strictly_below(y, x) && !all.iter().any(|z| strictly_below(y, z) && strictly_below(z, x))
                    })
                    .collect();
                by_order.sort();
                let mut by_corner: Vec<&Shuffle> = below.iter().collect();
                by_corner.sort();
                assert_eq!(by_order, by_corner, "{x}");
                for j in x.lower_corners() {
                    let y = x.predecessor_at(j).unwrap();
                    let d = SimplicialOperator::coface(m + n, j);
                    assert_eq!(x.first().after(&d).unwrap(), y.first().after(&d).unwrap());
                }
            }
        }
    }
}

#[test]
fn point_classification_partitions() {
    for m in 0..=4 {
        for n in 0..=4 {
            for x in Shuffle::all(m, n) {
                let (lower, upper) = x.corners();
                for i in 1..m + n {
                    let kind = x.classify_point(i).unwrap();
                    assert_eq!(kind == PointKind::LowerCorner, lower.contains(&i));
                    assert_eq!(kind == PointKind::UpperCorner, upper.contains(&i));
                    match kind {
                        PointKind::AlphaSingleton => assert_eq!(x.alpha_preimage(x.alpha()[i]), vec![i]),
                        PointKind::AlphaprimeSingleton => assert_eq!(x.alpha_prime_preimage(i - x.alpha()[i]), vec![i]),
                        _ => {}
                    }
                }
            }
        }
    }
}

#[test]
fn shuffle_text_round_trip() {
    for x in Shuffle::all(2, 3) {
        assert_eq!(parse_shuffle(&x.to_string()).unwrap(), x);
    }
}

#[test]
fn category_laws_exhaustive() {
    let ops: Vec<Vec<Vec<SimplicialOperator>>> =
        (0..=4).map(|a| (0..=4).map(|b| SimplicialOperator::all(a, b)).collect()).collect();
    let hom = |a: usize, b: usize| &ops[a][b];
    for a in 0..=4 {
        for b in 0..=4 {
            for f in hom(a, b) {
                assert_eq!(SimplicialOperator::identity(b).after(f).unwrap(), *f);
                assert_eq!(f.after(&SimplicialOperator::identity(a)).unwrap(), *f);
            }
        }
    }
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                for d in 0..=3 {
                    for f in hom(a, b) {
                        for g in hom(b, c) {
                            let gf = g.after(f).unwrap();
                            for h in hom(c, d) {
                                assert_eq!(h.after(&gf).unwrap(), h.after(g).unwrap().after(f).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
}

fn arb_op() -> impl Strategy<Value = SimplicialOperator> {
    (0usize..=6, 0usize..=6).prop_flat_map(|(m, n)| {
        proptest::collection::vec(0..=n, m + 1).prop_map(move |mut v| {
            v.sort();
            SimplicialOperator::new(v, n).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn op_dual_is_an_involution(f in arb_op()) {
        prop_assert_eq!(f.op_dual().op_dual(), f);
    }

    #[test]
    fn ez_factor_recomposes(f in arb_op()) {
        let (e, m) = f.ez_factor();
        prop_assert!(e.is_epi() && m.is_mono());
        prop_assert_eq!(m.after(&e).unwrap(), f);
    }

    #[test]
    fn op_dual_respects_composition(f in arb_op(), seed in any::<u64>()) {
        let n = f.target();
        let all = SimplicialOperator::all(n, (seed % 5) as usize);
        let g = &all[(seed as usize / 7) % all.len()];
        prop_assert_eq!(g.after(&f).unwrap().op_dual(), g.op_dual().after(&f.op_dual()).unwrap());
    }

    #[test]
    fn printed_operators_reparse(f in arb_op()) {
        prop_assert_eq!(parse_simplicial(&f.to_string()).unwrap(), f);
    }
}
