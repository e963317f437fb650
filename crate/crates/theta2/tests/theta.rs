use std::collections::HashMap;

use proptest::prelude::*;
use theta2::hyperface::{hyperface_labels, hyperfaces, outer_hyperface_order, vertebrae, HyperfaceLabel};
use theta2::parse::{parse_cellular, parse_shape};
use theta2::{CellularOperator, Shuffle, ThetaShape};

fn shape(s: &str) -> ThetaShape {
    parse_shape(s).unwrap()
}

fn op(s: &str) -> CellularOperator {
    parse_cellular(s).unwrap()
}

fn labels(shape: &ThetaShape, ls: &[HyperfaceLabel]) -> Vec<String> {
    ls.iter().map(|l| l.display_on(shape)).collect()
}

#[test]
fn composition_example() {
    let d2 = op("[{0,1};!]:[1;0]->[2;0,2]");
    let e = op("[{0,1};!]:[1;0]->[1;0]");
    assert!(e.is_identity());
    assert_eq!(d2.after(&e).unwrap(), d2);
    assert!(d2.after(&d2).is_err());
}

#[test]
fn category_laws_up_to_dim_two() {
    let shapes = ThetaShape::all_up_to(2);
    for a in &shapes {
        for b in &shapes {
            for f in CellularOperator::all(a, b) {
                assert_eq!(CellularOperator::identity(b).after(&f).unwrap(), f);
                assert_eq!(f.after(&CellularOperator::identity(a)).unwrap(), f);
                for c in &shapes {
                    for g in CellularOperator::all(b, c) {
                        let gf = g.after(&f).unwrap();
                        for d in &shapes {
                            for h in CellularOperator::all(c, d) {
                                assert_eq!(h.after(&gf).unwrap(), h.after(&g).unwrap().after(&f).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn classification_examples() {
    let c = op("[{1,2};{0,1,2}]:[1;2]->[2;0,2]").classify();
    assert!(c.face && c.outer && c.horizontal && c.inert);
    let c = op("[{0,2};!,{0,1,2}]:[1;2]->[2;0,2]").classify();
    assert!(c.face && c.inner && c.horizontal && !c.inert);
    let c = op("[{0,1,2};!,{0,2}]:[2;0,1]->[2;0,2]").classify();
    assert!(c.face && c.inner && c.vertical && !c.inert);
}

#[test]
fn hyperface_examples() {
    let s = shape("[2;0,2]");
    let h = hyperface_labels(&s);
    assert_eq!(labels(&s, &h).len(), 5);
    assert!(!h.contains(&HyperfaceLabel::Hn));
    assert!(h.contains(&HyperfaceLabel::H0));
    assert!(h.contains(&HyperfaceLabel::hk(1, Shuffle::all(0, 2)[0].clone())));
    for i in 0..=2 {
        assert!(h.contains(&HyperfaceLabel::v(2, i)));
    }
    let s = shape("[1;2]");
    assert_eq!(hyperface_labels(&s), (0..=2).map(|i| HyperfaceLabel::v(1, i)).collect::<Vec<_>>());
    assert!(hyperfaces(&ThetaShape::point()).is_empty());
}

#[test]
fn hyperfaces_are_the_codimension_one_faces() {
    for s in ThetaShape::all_up_to(4) {
        let hs = hyperfaces(&s);
        let mut by_codim: Vec<CellularOperator> =
            CellularOperator::faces_into(&s).into_iter().filter(|f| f.codim().unwrap() == 1).collect();
        by_codim.sort();
        let mut ops: Vec<CellularOperator> = hs.iter().map(|(_, f)| f.clone()).collect();
        ops.sort();
        assert_eq!(ops, by_codim, "{s}");
        for (_, f) in &hs {
            for (_, g) in &hs {
                if f != g {
                    assert!(f.factor_through(g).unwrap().is_none());
                }
            }
        }
    }
}

#[test]
fn codimension_examples() {
    assert_eq!(op("[{0,2};{0,1},{0,1}]:[1;1]->[2;1,1]").codim().unwrap(), 2);
    assert_eq!(CellularOperator::identity(&shape("[2;1,0]")).codim().unwrap(), 0);
    assert_eq!(op("[{1,2};{0,1,2}]:[1;2]->[2;0,2]").codim().unwrap(), 1);
    assert!(op("[{0,0,1};{0,1}]:[2;0,1]->[1;1]").codim().is_err());
}

#[test]
fn reedy_factor_examples() {
    let f = op("[{0,2};!,{0,1,2}]:[1;2]->[2;0,2]");
    let (d, g) = f.reedy_factor();
    assert!(d.is_identity());
    assert_eq!(g, f);
    let s = op("[{0,0,1};{0,1}]:[2;0,1]->[1;1]");
    let (d, g) = s.reedy_factor();
    assert_eq!(d, s);
    assert!(g.is_identity());
}

#[test]
fn reedy_factorization_is_unique_up_to_dim_three() {
    let shapes = ThetaShape::all_up_to(3);
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
                assert_eq!(count.get(&f), Some(&1), "{f}");
                let (d, g) = f.reedy_factor();
                assert!(d.is_degeneracy() && g.is_face());
                assert_eq!(g.after(&d).unwrap(), f);
            }
        }
    }
}

#[test]
fn factoring_through_faces() {
    let s = shape("[2;0,2]");
    let vertex = CellularOperator::vertex(&s, 0);
    let h0 = op("[{1,2};{0,1,2}]:[1;2]->[2;0,2]");
    assert!(vertex.factor_through(&h0).unwrap().is_none());
    let d2 = op("[{0,1};!]:[1;0]->[2;0,2]");
    let h = vertex.factor_through(&d2).unwrap().unwrap();
    assert_eq!(d2.after(&h).unwrap(), vertex);
    assert!(h0.factor_through(&h0).unwrap().unwrap().is_identity());
    assert!(h0.factor_through(&op("[{0,1};{0,1}]:[1;1]->[1;1]")).is_err());

    let s = shape("[2;1,1]");
    let hs = hyperfaces(&s);
    for f in CellularOperator::faces_into(&s).into_iter().filter(|f| !f.is_identity()) {
        assert!(hs.iter().any(|(_, g)| f.factor_through(g).unwrap().is_some()), "{f}");
    }
}

#[test]
fn duality_examples() {
    let d1 = op("[{0,2};!,{0,1,2}]:[1;2]->[2;0,2]");
    assert_eq!(d1.co_dual(), d1);
    let v20 = HyperfaceLabel::v(2, 0).operator(&shape("[2;0,2]")).unwrap();
    let reversed = shape("[2;2,0]");
    assert_eq!(v20.op_dual(), HyperfaceLabel::v(1, 0).operator(&reversed).unwrap());
    assert_eq!(v20.op_dual().co_dual(), HyperfaceLabel::v(1, 2).operator(&reversed).unwrap());
}

#[test]
fn dualities_are_involutive_functors() {
    let shapes = ThetaShape::all_up_to(3);
    for a in &shapes {
        for b in &shapes {
            for f in CellularOperator::all(a, b) {
                assert_eq!(f.co_dual().co_dual(), f);
                assert_eq!(f.op_dual().op_dual(), f);
                assert_eq!(f.co_dual().source(), f.source());
                assert_eq!(f.op_dual().source(), &f.source().reversed());
            }
        }
    }
    let shapes = ThetaShape::all_up_to(2);
    for a in &shapes {
        for b in &shapes {
            for f in CellularOperator::all(a, b) {
                for c in &shapes {
                    for g in CellularOperator::all(b, c) {
                        let gf = g.after(&f).unwrap();
                        assert_eq!(gf.co_dual(), g.co_dual().after(&f.co_dual()).unwrap());
                        assert_eq!(gf.op_dual(), g.op_dual().after(&f.op_dual()).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn vertebra_examples() {
    let bare = |s: &str| -> Vec<String> { vertebrae(&shape(s)).iter().map(|f| f.bare()).collect() };
    assert_eq!(bare("[2;0,2]"), vec!["[{0,1};!]", "[{1,2};{0,1}]", "[{1,2};{1,2}]"]);
    assert_eq!(vertebrae(&shape("[1;1]")), vec![CellularOperator::identity(&shape("[1;1]"))]);
    assert_eq!(bare("[1;3]"), vec!["[{0,1};{0,1}]", "[{0,1};{1,2}]", "[{0,1};{2,3}]"]);
    let mono: Vec<ThetaShape> = ThetaShape::all_up_to(4).into_iter().filter(|s| s.is_mono_vertebral()).collect();
    assert_eq!(mono, vec![shape("[0]"), shape("[1;0]"), shape("[1;1]")]);
}

#[test]
fn outer_order_examples() {
    let s = shape("[2;0,2]");
    assert_eq!(outer_hyperface_order(&s), vec![HyperfaceLabel::v(2, 0), HyperfaceLabel::H0, HyperfaceLabel::v(2, 2)]);
    assert_eq!(outer_hyperface_order(&shape("[1;0]")), vec![HyperfaceLabel::H0, HyperfaceLabel::Hn]);
    assert!(outer_hyperface_order(&ThetaShape::point()).is_empty());
}

#[test]
fn inert_faces_pull_spines_back_to_spines() {
    use theta2::boxprod::spine;
    use theta2::cellset::pullback_along;
    for s in ThetaShape::all_up_to(4) {
        let sp = spine(&s);
        for g in CellularOperator::faces_into(&s).into_iter().filter(|g| g.is_inert()) {
            assert_eq!(pullback_along(&sp.codomain, &sp.domain, &g), spine(g.source()).domain, "{g}");
        }
    }
}

fn arb_operator() -> impl Strategy<Value = CellularOperator> {
    let shapes = ThetaShape::all_up_to(3);
    (0..shapes.len(), 0..shapes.len(), any::<usize>()).prop_map(move |(a, b, pick)| {
        let all = CellularOperator::all(&shapes[a], &shapes[b]);
        all[pick % all.len()].clone()
    })
}

proptest! {
    #[test]
    fn printed_operators_reparse(f in arb_operator()) {
        prop_assert_eq!(parse_cellular(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn printed_shapes_reparse(qs in proptest::collection::vec(0usize..4, 0..5)) {
        let s = ThetaShape::new(qs);
        prop_assert_eq!(parse_shape(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn reedy_factor_recomposes(f in arb_operator()) {
        let (d, g) = f.reedy_factor();
        prop_assert!(d.is_degeneracy());
        prop_assert!(g.is_face());
        prop_assert_eq!(g.after(&d).unwrap(), f);
    }
}
