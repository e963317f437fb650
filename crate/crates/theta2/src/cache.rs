//! Per-thread memo tables for operator enumerations that the cellular-set
//! code asks for repeatedly.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::theta::{CellularOperator, ThetaShape};

type Table<K, V> = RefCell<HashMap<K, Rc<V>>>;

thread_local! {
    static FACES: Table<ThetaShape, Vec<CellularOperator>> = RefCell::new(HashMap::new());
    static DEGENERACIES: Table<ThetaShape, Vec<(CellularOperator, CellularOperator)>> = RefCell::new(HashMap::new());
    static OPERATORS: Table<(ThetaShape, ThetaShape), Vec<CellularOperator>> = RefCell::new(HashMap::new());
}

fn memo<K: Clone + Eq + std::hash::Hash, V>(
    table: &'static std::thread::LocalKey<Table<K, V>>,
    key: &K,
    build: impl FnOnce() -> V,
) -> Rc<V> {
    if let Some(v) = table.with(|t| t.borrow().get(key).cloned()) {
        return v;
    }
    let v = Rc::new(build());
    table.with(|t| t.borrow_mut().insert(key.clone(), v.clone()));
    v
}

/// All faces into `shape`, by source dimension then lexicographically.
pub fn faces_into(shape: &ThetaShape) -> Rc<Vec<CellularOperator>> {
    memo(&FACES, shape, || CellularOperator::faces_into(shape))
}

/// Non-identity degeneracies out of `shape` paired with a section, by
/// increasing target dimension.
pub fn degeneracies_with_sections(shape: &ThetaShape) -> Rc<Vec<(CellularOperator, CellularOperator)>> {
    memo(&DEGENERACIES, shape, || {
        let mut v: Vec<(CellularOperator, CellularOperator)> = CellularOperator::degeneracies_from(shape)
            .into_iter()
            .filter(|d| !d.is_identity())
            .map(|d| {
                let s = d.section();
                (d, s)
            })
            .collect();
        v.sort_by(|a, b| a.0.target().dim().cmp(&b.0.target().dim()).then_with(|| a.0.cmp(&b.0)));
        v
    })
}

pub fn operators(src: &ThetaShape, dst: &ThetaShape) -> Rc<Vec<CellularOperator>> {
    memo(&OPERATORS, &(src.clone(), dst.clone()), || CellularOperator::all(src, dst))
}
