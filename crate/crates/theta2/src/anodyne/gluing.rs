use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Display;

use crate::cache;
use crate::cellset::{face_roots, is_closed, nondegenerate_cells, truncate, CellularSet, Subobject};
use crate::theta::CellularOperator;

use super::report::{Checks, FinalCheck, HornTag, Report, Status, StepReport};

const MAX_LISTED: usize = 8;

/// Attaching one representable: `Θ₂[m;p] -> Z` given by a cell `φ`, along a
/// predicted locus `W ⊂ Θ₂[m;p]`.
#[derive(Clone, Debug)]
pub struct GluingStep<'a, Z: CellularSet> {
    pub ambient: &'a Z,
    pub before: &'a Subobject<Z::Cell>,
    pub attaching_cell: Z::Cell,
    pub expected_w: Subobject<CellularOperator>,
    pub horn: HornTag,
}

#[derive(Clone, Debug)]
pub struct GluingOutcome<C: Ord> {
    pub checks: Checks,
    pub failures: Vec<String>,
    /// Nondegenerate cells of `Z` that the step adds.
    pub added: BTreeSet<C>,
}

pub fn verify_gluing_square<Z: CellularSet>(step: &GluingStep<'_, Z>) -> GluingOutcome<Z::Cell> {
    verify_square_through(step, None)
}

/// As [`verify_gluing_square`], comparing the pullback only on faces of
/// dimension at most `through` when given.
pub(crate) fn verify_square_through<Z: CellularSet>(
    step: &GluingStep<'_, Z>,
    through: Option<usize>,
) -> GluingOutcome<Z::Cell> {
    let z = step.ambient;
    let shape = z.shape_of(&step.attaching_cell);
    let src = cache::faces_into(&shape);
    let f = |h: &CellularOperator| z.act(&step.attaching_cell, h);
    match through {
        None => verify_cells(z, step.before, src.iter().cloned(), f, step.expected_w.cells(), None),
        Some(d) => verify_cells(
            z,
            step.before,
            src.iter().cloned(),
            f,
            step.expected_w.cells(),
            Some(&|h: &CellularOperator| h.source().dim() <= d),
        ),
    }
}

/// The same checks for a map `f : X -> Z` out of an arbitrary cellular set,
/// given on the nondegenerate cells of `X`.
pub fn verify_gluing_map<X: CellularSet, Z: CellularSet>(
    x: &X,
    z: &Z,
    before: &Subobject<Z::Cell>,
    f: impl Fn(&X::Cell) -> Z::Cell,
    expected_w: &Subobject<X::Cell>,
) -> GluingOutcome<Z::Cell> {
    verify_cells(z, before, nondegenerate_cells(x).into_iter(), f, expected_w.cells(), None)
}

fn listed<T: Display>(out: &mut Vec<String>, what: &str, items: impl Iterator<Item = T>) {
    for (n, it) in items.enumerate() {
        if n == MAX_LISTED {
            out.push(format!("{what}: ..."));
            break;
        }
        out.push(format!("{what}: {it}"));
    }
}

fn verify_cells<S, Z>(
    z: &Z,
    before: &Subobject<Z::Cell>,
    src: impl Iterator<Item = S>,
    f: impl Fn(&S) -> Z::Cell,
    expected: &BTreeSet<S>,
    compared: Option<&dyn Fn(&S) -> bool>,
) -> GluingOutcome<Z::Cell>
where
    S: Ord + Clone + Display,
    Z: CellularSet + ?Sized,
{
    let mut failures = Vec::new();
    let mut pulled = BTreeSet::new();
    let mut image_roots = BTreeSet::new();
    let mut outside: Vec<(S, Z::Cell)> = Vec::new();
    for s in src {
        let img = f(&s);
        let root = z.root(&img).0;
        image_roots.insert(root.clone());
        if before.contains_nondegenerate(&root) {
            pulled.insert(s);
        } else {
            outside.push((s, img));
        }
    }

    let restricted;
    let expected = match compared {
        Some(keep) => {
            pulled.retain(|s| keep(s));
            restricted = expected.iter().filter(|s| keep(s)).cloned().collect::<BTreeSet<S>>();
            &restricted
        }
        None => expected,
    };
    let pullback = &pulled == expected;
    if !pullback {
        listed(&mut failures, "expected in pullback but not found", expected.difference(&pulled));
        listed(&mut failures, "in pullback but not expected", pulled.difference(expected));
    }

    let mut injective = true;
    let mut seen: HashMap<Z::Cell, S> = HashMap::new();
    let mut bad = Vec::new();
    for (s, img) in &outside {
        if !z.contains(img) || !z.is_nondegenerate(img) {
            injective = false;
            bad.push(format!("{s} -> {img} is degenerate or outside the ambient"));
        } else if let Some(prev) = seen.insert(img.clone(), s.clone()) {
            injective = false;
            bad.push(format!("{prev} and {s} both map to {img}"));
        }
    }
    listed(&mut failures, "not injective", bad.into_iter());

    let added: BTreeSet<Z::Cell> =
        outside.iter().map(|(_, img)| z.root(img).0).filter(|c| !before.contains_nondegenerate(c)).collect();
    let mut cover = true;
    let mut loose = Vec::new();
    for c in &added {
        for r in face_roots(z, c) {
            if !before.contains_nondegenerate(&r) && !image_roots.contains(&r) {
                cover = false;
                loose.push(format!("face {r} of {c}"));
            }
        }
    }
    listed(&mut failures, "union is not a subobject", loose.into_iter());

    GluingOutcome { checks: Checks { pullback, cover, injective }, failures, added }
}

/// A running subobject of `Z` together with the steps taken so far.
pub struct Replay<'a, Z: CellularSet> {
    z: &'a Z,
    current: Subobject<Z::Cell>,
    steps: Vec<StepReport>,
    base: BTreeMap<String, bool>,
    top_layer: Option<(usize, usize)>,
}

impl<'a, Z: CellularSet> Replay<'a, Z> {
    pub fn new(z: &'a Z, start: Subobject<Z::Cell>) -> Self {
        let mut base = BTreeMap::new();
        base.insert("start_closed".to_string(), is_closed(z, &start));
        Replay { z, current: start, steps: Vec::new(), base, top_layer: None }
    }

    pub fn ambient(&self) -> &Z {
        self.z
    }

    pub fn current(&self) -> &Subobject<Z::Cell> {
        &self.current
    }

    pub fn steps(&self) -> &[StepReport] {
        &self.steps
    }

    /// A copy that continues independently from the current state.
    pub fn fork(&self) -> Self {
        Replay {
            z: self.z,
            current: self.current.clone(),
            steps: self.steps.clone(),
            base: self.base.clone(),
            top_layer: self.top_layer,
        }
    }

    /// Cells of dimension `from` and above have faces whose own cofaces were
    /// cut off by truncation; their squares compare pullbacks only through
    /// dimension `through`.
    pub fn with_top_layer(mut self, from: usize, through: usize) -> Self {
        self.top_layer = Some((from, through));
        self
    }

    /// Records a check about the script itself rather than one step.
    pub fn note(&mut self, name: &str, ok: bool) {
        let e = self.base.entry(name.to_string()).or_insert(true);
        *e = *e && ok;
    }

    pub fn member(&self, c: &Z::Cell) -> bool {
        crate::cellset::member(self.z, &self.current, c)
    }

    /// Attaches the representable on the shape of `phi` along `expected`.
    pub fn glue_cell(
        &mut self,
        stage: &str,
        phi: &Z::Cell,
        expected: &Subobject<CellularOperator>,
        horn: HornTag,
        extra: BTreeMap<String, bool>,
    ) -> bool {
        let step = GluingStep {
            ambient: self.z,
            before: &self.current,
            attaching_cell: phi.clone(),
            expected_w: expected.clone(),
            horn: horn.clone(),
        };
        let shape = self.z.shape_of(phi);
        let through = self.top_layer.filter(|&(from, _)| shape.dim() >= from).map(|(_, d)| d);
        let outcome = verify_square_through(&step, through);
        self.record(stage, phi.to_string(), shape.to_string(), horn, extra, outcome, through)
    }

    /// Attaches an arbitrary cellular set along `expected` through `f`.
    #[allow(clippy::too_many_arguments)]
    pub fn glue_map<X: CellularSet>(
        &mut self,
        stage: &str,
        x: &X,
        cell: String,
        f: impl Fn(&X::Cell) -> Z::Cell,
        expected: &Subobject<X::Cell>,
        horn: HornTag,
        extra: BTreeMap<String, bool>,
    ) -> bool {
        let outcome = verify_gluing_map(x, self.z, &self.current, f, expected);
        self.record(stage, cell, x.describe(), horn, extra, outcome, None)
    }

    #[allow(clippy::too_many_arguments)]
    fn record(
        &mut self,
        stage: &str,
        cell: String,
        shape: String,
        horn: HornTag,
        extra: BTreeMap<String, bool>,
        outcome: GluingOutcome<Z::Cell>,
        pullback_through: Option<usize>,
    ) -> bool {
        let mut failures = outcome.failures;
        for (name, ok) in &extra {
            if !ok {
                failures.push(format!("side condition failed: {name}"));
            }
        }
        let report = StepReport {
            index: self.steps.len(),
            stage: stage.to_string(),
            cell,
            shape,
            horn,
            checks: outcome.checks,
            extra,
            failures,
            pullback_through,
        };
        let ok = report.ok();
        self.steps.push(report);
        for c in outcome.added {
            self.current.insert(c);
        }
        ok
    }

    /// Compares the running subobject with `target`, levelwise through
    /// `certified_dim` when given (otherwise through the ambient bound).
    pub fn finish(
        self,
        script: &str,
        params: BTreeMap<String, String>,
        order: &str,
        target: &Subobject<Z::Cell>,
        certified_dim: Option<usize>,
    ) -> Report {
        let bound = self.z.bound();
        let d = certified_dim.unwrap_or(bound);
        let equals_target = truncate(self.z, &self.current, d) == truncate(self.z, target, d);
        let mut report = Report {
            script: script.to_string(),
            params,
            bound,
            order: order.to_string(),
            base: self.base,
            steps: self.steps,
            final_check: FinalCheck { equals_target, certified_dim: d, uncertified_from: certified_dim.map(|d| d + 1) },
            status: Status::Certified,
        };
        report.settle();
        report
    }
}
