//! Shared oracle helpers for the integration suites: Kostant-formula weight
//! multiplicities and character-product tensor decomposition, both
//! independent of the library's Freudenthal/Klimyk code paths.

use hodgescan_core::lie::{
    build_root_system, dominant_chamber_test, weyl_group, GroupTag, RootSystem, Weight,
};
use hodgescan_core::reps::{weight_multiplicities, weyl_dimension, Irrep, WeightMultiset};
use hodgescan_core::scalar::{Rat, Scalar};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

/// Brute-force Kostant partition function in simple-root coordinates.
pub fn kostant_partition(rs: &RootSystem<Rat>, v: &Weight<Rat>) -> u64 {
    let coords = rs.simple_coords(v);
    let Some(target): Option<Vec<i64>> = coords.iter().map(|c| c.to_int()).collect() else {
        return 0;
    };
    if target.iter().any(|&c| c < 0) {
        return 0;
    }
    let roots: Vec<Vec<i64>> = rs
        .positive_roots
        .iter()
        .map(|a| {
            rs.simple_coords(&a.weight)
                .iter()
                .map(|c| c.to_int().unwrap())
                .collect()
        })
        .collect();
    fn count(target: &[i64], roots: &[Vec<i64>], idx: usize) -> u64 {
        if target.iter().all(|&c| c == 0) {
            return 1;
        }
        if idx == roots.len() {
            return 0;
        }
        let r = &roots[idx];
        let max = target
            .iter()
            .zip(r)
            .filter(|(_, &rc)| rc > 0)
            .map(|(&tc, &rc)| tc / rc)
            .min()
            .unwrap_or(0);
        let mut total = 0;
        for k in 0..=max {
            let rest: Vec<i64> = target.iter().zip(r).map(|(&tc, &rc)| tc - k * rc).collect();
            if rest.iter().all(|&c| c >= 0) {
                total += count(&rest, roots, idx + 1);
            }
        }
        total
    }
    count(&target, &roots, 0)
}

/// Kostant multiplicity formula.
pub fn kostant_multiplicity(rs: &RootSystem<Rat>, hw: &Weight<Rat>, mu: &Weight<Rat>) -> i64 {
    let w = weyl_group(rs);
    let shifted = hw.add(&rs.rho);
    let mut acc = 0i64;
    for i in 0..w.order() {
        let arg = w.apply(i, &shifted).sub(&mu.add(&rs.rho));
        acc += w.signs[i] as i64 * kostant_partition(rs, &arg) as i64;
    }
    acc
}

/// All dominant integral weights of dimension at most `max_dim` (coordinate
/// box wide enough for these rank <= 3 groups).
pub fn small_irreps(rs: &RootSystem<Rat>, max_dim: u64) -> Vec<Irrep<Rat>> {
    let mut out = Vec::new();
    let bound = 8i64;
    let rank = rs.rank;
    let mut idx = vec![0i64; rank];
    loop {
        let ir = Irrep::from_ints(rs.group, &idx).unwrap();
        if weyl_dimension(rs, &ir) <= max_dim {
            out.push(ir);
        }
        let mut j = 0;
        loop {
            if j == rank {
                break;
            }
            idx[j] += 1;
            if idx[j] <= bound {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == rank {
            break;
        }
    }
    out
}

/// Weight-multiset cache keyed on the highest weight.
pub struct MultCache {
    rs: RootSystem<Rat>,
    map: RefCell<HashMap<Weight<Rat>, Rc<WeightMultiset<Rat>>>>,
}

impl MultCache {
    pub fn new(group: GroupTag) -> Self {
        MultCache {
            rs: build_root_system(group),
            map: RefCell::new(HashMap::new()),
        }
    }

    pub fn rs(&self) -> &RootSystem<Rat> {
        &self.rs
    }

    pub fn get(&self, hw: &Weight<Rat>) -> Rc<WeightMultiset<Rat>> {
        if let Some(hit) = self.map.borrow().get(hw) {
            return Rc::clone(hit);
        }
        let ir = Irrep::new(self.rs.group, hw.clone()).unwrap();
        let computed = Rc::new(weight_multiplicities(&self.rs, &ir));
        self.map
            .borrow_mut()
            .insert(hw.clone(), Rc::clone(&computed));
        computed
    }
}

/// Tensor decomposition by literal character products: convolve the weight
/// multisets and peel dominant tops. Independent of the Klimyk rule.
pub fn tensor_by_characters(
    cache: &MultCache,
    a: &Irrep<Rat>,
    b: &Irrep<Rat>,
) -> BTreeMap<Weight<Rat>, u64> {
    let rs = cache.rs();
    let wa = cache.get(&a.highest_weight);
    let wb = cache.get(&b.highest_weight);
    let mut rem: BTreeMap<Weight<Rat>, i64> = BTreeMap::new();
    for (x, mx) in wa.iter() {
        for (y, my) in wb.iter() {
            *rem.entry(x.add(y)).or_insert(0) += (mx * my) as i64;
        }
    }
    let mut out = BTreeMap::new();
    loop {
        rem.retain(|_, m| *m != 0);
        if rem.is_empty() {
            return out;
        }
        let top = rem
            .keys()
            .filter(|w| dominant_chamber_test(rs, w))
            .max_by_key(|w| rs.ip(&rs.rho, w))
            .cloned()
            .expect("dominant top exists");
        let mult = rem[&top];
        assert!(mult > 0);
        for (w, m) in cache.get(&top).iter() {
            *rem.entry(w.clone()).or_insert(0) -= mult * *m as i64;
        }
        *out.entry(top).or_insert(0) += mult as u64;
    }
}
