#![allow(dead_code)]

pub mod oracles;

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use fullerene_core::spiral::{enumerate_isomers, Isomer};

/// Feasible atom counts from 20 to `max`.
pub fn feasible_up_to(max: usize) -> Vec<usize> {
    (20..=max).step_by(2).filter(|&n| n != 22).collect()
}

/// Enumerated isomers of `C_n`, computed once per test binary.
pub fn isomers(n: usize) -> Arc<Vec<Isomer>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Vec<Isomer>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let list = Arc::new(enumerate_isomers(n, false).unwrap());
    cache.lock().unwrap().insert(n, list.clone());
    list
}
