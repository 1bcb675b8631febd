//! Brute-force oracles written directly from the definitions, sharing nothing
//! with the library beyond the table lookups `add`, `mul`, `neg`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hrl::HyperRing;

pub type Set = BTreeSet<usize>;

pub fn set(items: &[usize]) -> Set {
    items.iter().copied().collect()
}

pub fn to_set(ideal: hrl::Ideal) -> Set {
    ideal.members().iter().collect()
}

pub fn is_ideal(ring: &HyperRing, s: &Set) -> bool {
    if !s.contains(&ring.zero()) {
        return false;
    }
    for &a in s {
        if !s.contains(&ring.neg(a)) {
            return false;
        }
        for &b in s {
            if ring.add(a, b).iter().any(|c| !s.contains(&c)) {
                return false;
            }
        }
        for r in 0..ring.size() {
            if !s.contains(&ring.mul(r, a)) {
                return false;
            }
        }
    }
    true
}

/// Every subset of the carrier passing [`is_ideal`], by 2ⁿ enumeration.
pub fn all_ideals(ring: &HyperRing) -> BTreeSet<Set> {
    let n = ring.size();
    (0u64..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Set>())
        .filter(|s| is_ideal(ring, s))
        .collect()
}

pub fn power(ring: &HyperRing, a: usize, k: usize) -> usize {
    (0..k).fold(ring.one(), |acc, _| ring.mul(acc, a))
}

pub fn radical(ring: &HyperRing, s: &Set) -> Set {
    (0..ring.size()).filter(|&a| (1..=ring.size() + 1).any(|k| s.contains(&power(ring, a, k)))).collect()
}

pub fn whole(ring: &HyperRing) -> Set {
    (0..ring.size()).collect()
}

/// `a∘b ∈ N − reduced` forces `a ∈ N` or `b ∈ expanded`; returns the first violation.
pub fn primary_witness(ring: &HyperRing, n: &Set, reduced: &Set, expanded: &Set) -> Option<(usize, usize)> {
    for a in 0..ring.size() {
        for b in 0..ring.size() {
            let ab = ring.mul(a, b);
            if n.contains(&ab) && !reduced.contains(&ab) && !n.contains(&a) && !expanded.contains(&b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Products of all pairs, closed into the smallest ideal containing them.
pub fn ideal_product(ring: &HyperRing, x: &Set, y: &Set) -> Set {
    let gens: Set = x.iter().flat_map(|&a| y.iter().map(move |&b| ring.mul(a, b))).collect();
    all_ideals(ring).into_iter().filter(|s| gens.is_subset(s)).min_by_key(|s| s.len()).expect("whole ring")
}
