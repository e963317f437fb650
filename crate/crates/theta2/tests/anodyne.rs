use theta2::anodyne::*;
use theta2::boxprod::{boundary, spine};
use theta2::cellset::{closure, from_simplicial, full, generators, representable, restrict, Chaotic, Subobject};
use theta2::hyperface::HyperfaceLabel;
use theta2::parse::parse_shape;
use theta2::{CellularOperator, Shuffle, ThetaShape};

fn shape(s: &str) -> ThetaShape {
    parse_shape(s).unwrap()
}

fn face_closure(src: &ThetaShape, gens: &[CellularOperator]) -> Subobject<CellularOperator> {
    closure(&representable(src, src.dim()), gens).unwrap()
}

fn label_closure(src: &ThetaShape, labels: &[HyperfaceLabel]) -> Subobject<CellularOperator> {
    let gens: Vec<CellularOperator> = labels.iter().map(|l| l.operator(src).unwrap()).collect();
    face_closure(src, &gens)
}

#[test]
fn spine_glues_along_the_last_vertical_face() {
    for q in 2..=4 {
        let s = ThetaShape::new(vec![q]);
        let sp = spine(&s);
        let step = GluingStep {
            ambient: &sp.codomain,
            before: &sp.domain,
            attaching_cell: HyperfaceLabel::v(1, q).operator(&s).unwrap(),
            expected_w: spine(&ThetaShape::new(vec![q - 1])).domain,
            horn: HornTag::named("spine"),
        };
        let out = verify_gluing_square(&step);
        assert!(out.checks.all(), "{:?}", out.failures);
        // The spine of [1;1] is all of it.
        assert_eq!(out.added.is_empty(), q == 2);
    }
}

#[test]
fn identity_along_the_full_representable_adds_nothing() {
    let s = shape("[2;1,0]");
    let rep = representable(&s, s.dim());
    let all = full(&rep);
    let step = GluingStep {
        ambient: &rep,
        before: &all,
        attaching_cell: CellularOperator::identity(&s),
        expected_w: all.clone(),
        horn: HornTag::named("identity"),
    };
    let out = verify_gluing_square(&step);
    assert!(out.checks.all());
    assert!(out.added.is_empty());
}

#[test]
fn dropping_a_generator_of_w_fails_the_pullback_check() {
    let s = shape("[1;3]");
    let sp = spine(&s);
    let small = ThetaShape::new(vec![2]);
    let w = spine(&small).domain;
    let rep = representable(&small, small.dim());
    let gens = generators(&rep, &w);
    assert_eq!(gens.len(), 2);
    let mutated = face_closure(&small, &gens[..1]);
    let step = GluingStep {
        ambient: &sp.codomain,
        before: &sp.domain,
        attaching_cell: HyperfaceLabel::v(1, 3).operator(&s).unwrap(),
        expected_w: mutated,
        horn: HornTag::named("spine"),
    };
    let out = verify_gluing_square(&step);
    assert!(!out.checks.pullback);
    assert!(out.checks.injective && out.checks.cover);
    assert!(out.failures.iter().any(|f| f.starts_with("in pullback but not expected")));
}

#[test]
fn a_degenerate_attaching_cell_fails_injectivity() {
    let s = shape("[1;0]");
    let rep = representable(&s, 2);
    let sigma = CellularOperator::degeneracies_from(&shape("[2;0,0]")).into_iter().find(|d| d.target() == &s).unwrap();
    let step = GluingStep {
        ambient: &rep,
        before: &Subobject::empty(),
        attaching_cell: sigma,
        expected_w: Subobject::empty(),
        horn: HornTag::named("mutation"),
    };
    let out = verify_gluing_square(&step);
    assert!(!out.checks.injective);
    assert!(out.failures.iter().any(|f| f.starts_with("not injective")));
}

#[test]
fn a_map_that_drops_faces_fails_the_cover_check() {
    let x = representable(&shape("[1;0]"), 1);
    let z_shape = shape("[2;0,0]");
    let z = representable(&z_shape, 2);
    let long_edge = CellularOperator::faces_into(&z_shape)
        .into_iter()
        .find(|f| f.source() == &shape("[1;0]") && f.bare() == "[{0,2};!,!]")
        .unwrap();
    let middle = CellularOperator::vertex(&z_shape, 1);
    // Not a cellular map: the edge lands on 0 -> 2 while both endpoints go to 1.
    let f = |c: &CellularOperator| if c.source().dim() == 1 { long_edge.clone() } else { middle.clone() };
    let out = verify_gluing_map(&x, &z, &Subobject::empty(), f, &Subobject::empty());
    assert!(out.checks.pullback);
    assert!(!out.checks.cover);
    assert!(out.failures.iter().any(|f| f.starts_with("union is not a subobject")));
}

#[test]
fn pullback_of_outer_vertical_faces() {
    let s = shape("[2;1,1]");
    let got = pullback_hyperface(&HyperfaceLabel::v(1, 0), &HyperfaceLabel::v(2, 0), &s).unwrap();
    let src = shape("[2;1,0]");
    assert_eq!(got, label_closure(&src, &[HyperfaceLabel::v(1, 0)]));
}

#[test]
fn pullback_of_the_first_vertical_face_along_its_neighbour() {
    for qs in [vec![1, 0], vec![1, 1], vec![1, 2]] {
        let s = ThetaShape::new(qs);
        let along = HyperfaceLabel::v(1, 1);
        let src = along.operator(&s).unwrap().source().clone();
        let got = pullback_hyperface(&HyperfaceLabel::v(1, 0), &along, &s).unwrap();
        let gens = [HyperfaceLabel::H0.operator(&src).unwrap(), CellularOperator::vertex(&src, 0)];
        assert_eq!(got, face_closure(&src, &gens), "{s}");
    }
}

#[test]
fn pullback_of_vertical_faces_along_horizontal_ones() {
    for s in [shape("[2;1,1]"), shape("[2;2,1]"), shape("[2;2,2]")] {
        let k = 1;
        for sh in Shuffle::all(s.q(1), s.q(2)) {
            let along = HyperfaceLabel::hk(k, sh.clone());
            let src = along.operator(&s).unwrap().source().clone();
            for i in 0..=s.q(1) {
                if let [j] = sh.alpha_preimage(i)[..] {
                    let got = pullback_hyperface(&HyperfaceLabel::v(k, i), &along, &s).unwrap();
                    assert_eq!(got, label_closure(&src, &[HyperfaceLabel::v(k, j)]), "{s} {sh} {i}");
                }
            }
        }
    }
}

#[test]
fn pullback_rejects_missing_labels() {
    let s = shape("[2;0,2]");
    assert!(pullback_hyperface(&HyperfaceLabel::Hn, &HyperfaceLabel::H0, &s).is_err());
    assert!(pullback_hyperface(&HyperfaceLabel::v(1, 0), &HyperfaceLabel::H0, &s).is_err());
}

#[test]
fn admissibility_examples() {
    let a = is_admissible(&shape("[1;2]"), &[HyperfaceLabel::v(1, 1)]).unwrap();
    assert!(!a.admissible);
    for s in ThetaShape::all_up_to(3) {
        assert_eq!(is_admissible(&s, &[]).unwrap().admissible, !s.is_mono_vertebral(), "{s}");
    }
    let a = is_admissible(&shape("[2;1,1]"), &[HyperfaceLabel::hk(1, Shuffle::minimum(1, 1))]).unwrap();
    assert!(a.admissible);
    assert_eq!(a.k_s, Some(1));
    assert!(is_admissible(&shape("[2;1,1]"), &[HyperfaceLabel::H0]).is_err());
    assert_eq!(admissible_sets(&shape("[1;2]")), vec![Vec::<HyperfaceLabel>::new()]);
}

#[test]
fn trivial_parameters_short_circuit() {
    let r = spine_anodyne(&shape("[1;1]")).unwrap();
    assert_eq!(r.status, Status::Trivial);
    assert!(r.ok() && r.steps.is_empty());
    let r = spine_anodyne(&shape("[1;2]")).unwrap();
    assert_eq!(r.status, Status::Certified);
}

#[test]
fn replays_are_deterministic() {
    let a: Vec<String> = replay_matrix(3).unwrap().iter().map(|r| r.to_json()).collect();
    let b: Vec<String> = replay_matrix(3).unwrap().iter().map(|r| r.to_json()).collect();
    assert_eq!(a, b);
    let s = shape("[2;0,1]");
    assert_eq!(vert_equiv(&s, 1, 3).unwrap().to_json(), vert_equiv(&s, 1, 3).unwrap().to_json());
}

#[test]
fn truncated_replays_report_the_uncertified_tail() {
    let r = horiz_equiv(&shape("[1;0]"), 3).unwrap();
    assert!(r.ok());
    assert_eq!(r.final_check.certified_dim, 2);
    assert_eq!(r.final_check.uncertified_from, Some(3));
}

#[test]
fn composable_pairs_in_a_representable_fill() {
    let x = representable(&shape("[3;0,0,0]"), 3);
    let r = lift_check(&x, &HornFamily::single(&shape("[2;0,0]"), HornKind::Horizontal { k: 1 }), 3).unwrap();
    assert!(r.ok());
    assert_eq!(r.instances.len(), 1);
    // Composable pairs of arrows in the poset [3].
    assert_eq!(r.instances[0].maps, 20);
}

#[test]
fn inner_horns_fill_in_the_nerve_of_j() {
    let j = from_simplicial(Chaotic::J, 4);
    let r = lift_check(&j, &HornFamily::inner(3), 4).unwrap();
    assert!(r.ok(), "{}", r.summary());
    assert_eq!(r.certified_dim, 3);
    assert!(r.maps() > 0);
}

#[test]
fn boundary_of_a_two_cell_has_no_vertical_horns_below_its_bound() {
    let s = shape("[1;1]");
    let rep = representable(&s, 2);
    let b = boundary(&s);
    let x = restrict(&rep, &b.domain);
    let r = lift_check(&x, &HornFamily::inner_vertical(3), 2).unwrap();
    assert!(r.instances.is_empty() && r.ok());
}

#[test]
fn a_hollow_triangle_does_not_fill() {
    let s = shape("[2;0,0]");
    let rep = representable(&s, 2);
    let b = boundary(&s);
    let x = restrict(&rep, &b.domain);
    let r = lift_check(&x, &HornFamily::single(&s, HornKind::Horizontal { k: 1 }), 3).unwrap();
    assert!(!r.ok());
    assert!(!r.instances[0].unfilled.is_empty());
    assert!(r.to_json().contains("unfilled"));
}
