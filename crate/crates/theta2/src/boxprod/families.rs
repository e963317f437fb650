//! Boundaries, horns, spines and their variants as subobjects of
//! representables, together with the equivalence extensions.

use crate::cellset::{closure, generators, CellularSet, Representable, Subobject};
use crate::delta::Shuffle;
use crate::error::{Error, Result};
use crate::hyperface::{hyperface_labels, vertebrae, HyperfaceLabel};
use crate::theta::{CellularOperator, ThetaShape};

use super::{BaseSub, BoxCell, BoxProduct, FiberSub, LeibnizDomain};

/// A cellular subset together with its ambient.
#[derive(Clone, Debug)]
pub struct Inclusion<X: CellularSet> {
    pub name: String,
    pub codomain: X,
    pub domain: Subobject<X::Cell>,
}

impl<X: CellularSet> Inclusion<X> {
    /// The maximal cells of the domain.
    pub fn generators(&self) -> Vec<X::Cell> {
        generators(&self.codomain, &self.domain)
    }
}

fn closure_of_labels(shape: &ThetaShape, labels: &[HyperfaceLabel]) -> Subobject<CellularOperator> {
    let x = Representable::full(shape);
    let gens: Vec<CellularOperator> = labels.iter().map(|l| l.operator(shape).expect("label exists")).collect();
    closure(&x, &gens).expect("hyperfaces lie in the representable")
}

fn on_representable(name: String, shape: &ThetaShape, domain: Subobject<CellularOperator>) -> Inclusion<Representable> {
    Inclusion { name, codomain: Representable::full(shape), domain }
}

fn all_except(shape: &ThetaShape, drop: impl Fn(&HyperfaceLabel) -> bool) -> Subobject<CellularOperator> {
    let labels: Vec<HyperfaceLabel> = hyperface_labels(shape).into_iter().filter(|l| !drop(l)).collect();
    closure_of_labels(shape, &labels)
}

fn check_labels(shape: &ThetaShape, labels: &[HyperfaceLabel]) -> Result<()> {
    match labels.iter().find(|l| !l.exists_on(shape)) {
        Some(l) => Err(Error::NoSuchHyperface { label: l.display_on(shape), shape: shape.to_string() }),
        None => Ok(()),
    }
}

/// Labels the `k`-th horizontal horn leaves out.
fn is_kth_horizontal(shape: &ThetaShape, k: usize, l: &HyperfaceLabel) -> bool {
    match l {
        HyperfaceLabel::H0 => k == 0,
        HyperfaceLabel::Hn => k == shape.n(),
        HyperfaceLabel::Hk { k: j, .. } => *j == k,
        HyperfaceLabel::V { .. } => false,
    }
}

/// `∂Θ₂[n;q]`, generated by the hyperfaces.
pub fn boundary(shape: &ThetaShape) -> Inclusion<Representable> {
    on_representable(format!("∂Θ₂{shape}"), shape, all_except(shape, |_| false))
}

/// `Λₕᵏ[n;q]`, generated by all hyperfaces except the `k`-th horizontal ones.
pub fn horn_h(shape: &ThetaShape, k: usize) -> Result<Inclusion<Representable>> {
    if shape.n() == 0 || k > shape.n() {
        return Err(Error::OutOfRange { index: k, lo: 0, hi: shape.n() });
    }
    Ok(on_representable(format!("Λh^{k}{shape}"), shape, all_except(shape, |l| is_kth_horizontal(shape, k, l))))
}

/// `Λᵥ^{k;i}[n;q]`, generated by all hyperfaces except `δv^{k;i}`.
pub fn horn_v(shape: &ThetaShape, k: usize, i: usize) -> Result<Inclusion<Representable>> {
    let target = HyperfaceLabel::v(k, i);
    check_labels(shape, std::slice::from_ref(&target))?;
    Ok(on_representable(format!("Λv^{{{k};{i}}}{shape}"), shape, all_except(shape, |l| l == &target)))
}

/// `Λₕ^{k;s}[n;q]`, generated by all hyperfaces except `δh^{k;s}`.
pub fn horn_h_alt(shape: &ThetaShape, k: usize, s: &Shuffle) -> Result<Inclusion<Representable>> {
    let target = HyperfaceLabel::hk(k, s.clone());
    check_labels(shape, std::slice::from_ref(&target))?;
    Ok(on_representable(format!("Λh^{{{k};{s}}}{shape}"), shape, all_except(shape, |l| l == &target)))
}

/// `Σ[n;q]`, generated by the vertebrae.
pub fn spine(shape: &ThetaShape) -> Inclusion<Representable> {
    let x = Representable::full(shape);
    let domain = closure(&x, &vertebrae(shape)).expect("vertebrae are faces");
    Inclusion { name: format!("Σ{shape}"), codomain: x, domain }
}

/// `Σ^S[n;q]`, generated by the spine and the faces in `S`.
pub fn spine_s(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Result<Inclusion<Representable>> {
    check_labels(shape, s)?;
    let mut inc = spine(shape);
    inc.domain = inc.domain.union(&closure_of_labels(shape, s));
    inc.name = format!("Σ^S{shape}");
    Ok(inc)
}

/// `Υ^S[n;q]`, generated by the outer hyperfaces and the inner hyperfaces in `S`.
pub fn upsilon_s(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Result<Inclusion<Representable>> {
    check_labels(shape, s)?;
    if let Some(l) = s.iter().find(|l| !l.is_inner(shape)) {
        return Err(Error::InvalidParameters(format!("{} is not an inner hyperface", l.display_on(shape))));
    }
    let domain = all_except(shape, |l| l.is_inner(shape) && !s.contains(l));
    Ok(on_representable(format!("Υ^S{shape}"), shape, domain))
}

/// `Λ^S[n;q]`, generated by all hyperfaces except those in `S`.
pub fn lambda_s(shape: &ThetaShape, s: &[HyperfaceLabel]) -> Result<Inclusion<Representable>> {
    check_labels(shape, s)?;
    Ok(on_representable(format!("Λ^S{shape}"), shape, all_except(shape, |l| s.contains(l))))
}

fn leibniz_on_representable(shape: &ThetaShape, dom: &LeibnizDomain) -> Subobject<CellularOperator> {
    let b = BoxProduct::standard(shape, shape.dim());
    let cells = dom.domain(&b).cells().iter().map(|c| c.to_operator(shape)).collect();
    Subobject::from_closed(cells)
}

/// `∂Θ₂[n;q]` from `□̂ₙ(∂Δ[n] ↪ Δ[n]; ∂Δ[q_k] ↪ Δ[q_k])`.
pub fn boundary_leibniz(shape: &ThetaShape) -> Subobject<CellularOperator> {
    leibniz_on_representable(shape, &LeibnizDomain::boundary(shape.n()))
}

/// `Λₕᵏ[n;q]` from `□̂ₙ(Λᵏ[n] ↪ Δ[n]; ∂Δ[q_k] ↪ Δ[q_k])`.
pub fn horn_h_leibniz(shape: &ThetaShape, k: usize) -> Result<Subobject<CellularOperator>> {
    if shape.n() == 0 || k > shape.n() {
        return Err(Error::OutOfRange { index: k, lo: 0, hi: shape.n() });
    }
    let mut dom = LeibnizDomain::boundary(shape.n());
    dom.base = BaseSub::Horn(k);
    Ok(leibniz_on_representable(shape, &dom))
}

/// `Λᵥ^{k;i}[n;q]` from the Leibniz construction with `Λⁱ[q_k]` in slot `k`.
pub fn horn_v_leibniz(shape: &ThetaShape, k: usize, i: usize) -> Result<Subobject<CellularOperator>> {
    check_labels(shape, &[HyperfaceLabel::v(k, i)])?;
    let mut dom = LeibnizDomain::boundary(shape.n());
    dom.fibers[k - 1] = FiberSub::Horn(i);
    Ok(leibniz_on_representable(shape, &dom))
}

/// `Ψᵏ[n;q] ↪ Φᵏ[n;q]`, truncated.
#[derive(Clone, Debug)]
pub struct EquivVert {
    pub shape: ThetaShape,
    pub k: usize,
    pub inclusion: Inclusion<BoxProduct>,
}

impl EquivVert {
    /// `Θ₂[n;q]` inside `Ψᵏ[n;q]` through the `◊`-corner.
    pub fn embed(&self, f: &CellularOperator) -> BoxCell {
        BoxCell::from_operator(f)
    }
}

pub fn equiv_vert(shape: &ThetaShape, k: usize, bound: usize) -> Result<EquivVert> {
    if k == 0 || k > shape.n() {
        return Err(Error::OutOfRange { index: k, lo: 1, hi: shape.n() });
    }
    if shape.q(k) != 0 {
        return Err(Error::InvalidParameters(format!("q_{k} = {} is not 0 in {shape}", shape.q(k))));
    }
    let phi = BoxProduct::phi(shape, k, bound);
    let mut dom = LeibnizDomain::boundary(shape.n());
    dom.fibers[k - 1] = FiberSub::Point(0);
    let domain = dom.domain(&phi);
    Ok(EquivVert {
        shape: shape.clone(),
        k,
        inclusion: Inclusion { name: format!("Ψ^{k}{shape} ↪ Φ^{k}{shape}"), codomain: phi, domain },
    })
}

/// `e ×̂ (∂Θ₂[n;q] ↪ Θ₂[n;q])`, truncated.
#[derive(Clone, Debug)]
pub struct EquivHoriz {
    pub shape: ThetaShape,
    pub inclusion: Inclusion<BoxProduct>,
}

impl EquivHoriz {
    /// `{◊} × Θ₂[n;q]` inside the domain.
    pub fn embed(&self, f: &CellularOperator) -> BoxCell {
        let mut c = BoxCell::from_operator(f);
        c.label = vec![0; f.source().n() + 1];
        c
    }
}

pub fn equiv_horiz(shape: &ThetaShape, bound: usize) -> EquivHoriz {
    let codomain = BoxProduct::j_times(shape, bound);
    let mut dom = LeibnizDomain::boundary(shape.n());
    dom.base = BaseSub::PointOrBoundary(0);
    let domain = dom.domain(&codomain);
    EquivHoriz {
        shape: shape.clone(), inclusion: Inclusion { name: format!("e ×̂ ∂Θ₂{shape}"), codomain, domain }
    }
}

/// For a cell of `J × Θ₂[n;q]` whose label ends in `◊` but is not constant,
/// the index `k_φ` just after its last `♦`.
pub fn k_phi(c: &BoxCell) -> Option<usize> {
    let last = c.label.iter().rposition(|&x| x == 1)?;
    (last + 1 < c.label.len()).then_some(last + 1)
}
