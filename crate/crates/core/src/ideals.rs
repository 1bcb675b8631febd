//! Hyperideals: the membership predicate, generation, arithmetic and the full lattice.
//!
//! A hyperideal is a subset containing zero that is closed under `⊕` and
//! negation and absorbs multiplication by arbitrary ring elements.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::HyperRing;
use crate::set::IndexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("{0} is not a hyperideal")]
    NotAnIdeal(IndexSet),
    #[error("{0} mentions elements outside a ring of size {1}")]
    RingMismatch(IndexSet, usize),
    #[error("ideal powers need a positive exponent")]
    ZeroExponent,
}

/// A hyperideal of some ring, stored as its member set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ideal(IndexSet);

impl Ideal {
    /// Validates `members` against `ring`.
    pub fn new(ring: &HyperRing, members: IndexSet) -> Result<Self, IdealError> {
        if !members.within(ring.size()) {
            return Err(IdealError::RingMismatch(members, ring.size()));
        }
        if is_hyperideal(ring, members) {
            Ok(Ideal(members))
        } else {
            Err(IdealError::NotAnIdeal(members))
        }
    }

    /// Wraps a set already known to be a hyperideal.
    pub(crate) fn trusted(members: IndexSet) -> Self {
        Ideal(members)
    }

    pub fn zero(ring: &HyperRing) -> Self {
        Ideal(IndexSet::singleton(ring.zero()))
    }

    pub fn whole(ring: &HyperRing) -> Self {
        Ideal(ring.carrier())
    }

    #[inline]
    pub fn members(self) -> IndexSet {
        self.0
    }

    #[inline]
    pub fn contains(self, a: usize) -> bool {
        self.0.contains(a)
    }

    #[inline]
    pub fn is_subset(self, other: Ideal) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    pub fn is_proper(self, ring: &HyperRing) -> bool {
        self.0 != ring.carrier()
    }

    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.canonical_cmp(&other.0)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.0)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_hyperideal(ring: &HyperRing, set: IndexSet) -> bool {
    if !set.within(ring.size()) || !set.contains(ring.zero()) {
        return false;
    }
    set.iter().all(|a| {
        set.contains(ring.neg(a))
            && set.iter().all(|b| ring.add(a, b).is_subset(set))
            && ring.elements().all(|r| set.contains(ring.mul(r, a)))
    })
}

/// Least hyperideal containing `set`; `generate(∅) = {0}`.
pub fn generate(ring: &HyperRing, set: IndexSet) -> Ideal {
    let carrier = ring.carrier();
    let mut current = set.with(ring.zero());
    loop {
        let next = current
            .union(ring.set_product(carrier, current))
            .union(ring.negate_set(current))
            .union(ring.hyper_sum(current, current));
        if next == current {
            return Ideal(current);
        }
        current = next;
    }
}

/// The principal hyperideal `(a)`.
pub fn principal(ring: &HyperRing, a: usize) -> Ideal {
    generate(ring, IndexSet::singleton(a))
}

fn same_ring(ring: &HyperRing, ideals: &[Ideal]) -> Result<(), IdealError> {
    match ideals.iter().find(|i| !i.members().within(ring.size())) {
        Some(i) => Err(IdealError::RingMismatch(i.members(), ring.size())),
        None => Ok(()),
    }
}

/// `N ⊕ M`, the hyperideal generated by `N ∪ M`.
pub fn ideal_sum(ring: &HyperRing, lhs: Ideal, rhs: Ideal) -> Result<Ideal, IdealError> {
    same_ring(ring, &[lhs, rhs])?;
    Ok(generate(ring, lhs.0.union(rhs.0)))
}

pub fn ideal_intersect(ring: &HyperRing, lhs: Ideal, rhs: Ideal) -> Result<Ideal, IdealError> {
    same_ring(ring, &[lhs, rhs])?;
    Ok(Ideal(lhs.0.intersection(rhs.0)))
}

/// The hyperideal generated by all products `k ∘ l`.
pub fn ideal_product(ring: &HyperRing, lhs: Ideal, rhs: Ideal) -> Ideal {
    generate(ring, ring.set_product(lhs.0, rhs.0))
}

pub fn ideal_power(ring: &HyperRing, ideal: Ideal, k: u32) -> Result<Ideal, IdealError> {
    if k == 0 {
        return Err(IdealError::ZeroExponent);
    }
    Ok((1..k).fold(ideal, |acc, _| ideal_product(ring, ideal, acc)))
}

/// `[N, N², …, Nᵏ]` where `Nᵏ = Nᵏ⁺¹` is the first repetition.
pub fn power_chain(ring: &HyperRing, ideal: Ideal) -> Vec<Ideal> {
    let mut chain = vec![ideal];
    loop {
        let next = ideal_product(ring, ideal, *chain.last().unwrap());
        if next == *chain.last().unwrap() {
            return chain;
        }
        chain.push(next);
    }
}

/// `⋂_{n≥1} Nⁿ`. The power chain descends, so this is its stable value.
pub fn omega_power(ring: &HyperRing, ideal: Ideal) -> Ideal {
    *power_chain(ring, ideal).last().unwrap()
}

/// `√N = {a : aᵏ ∈ N for some k ≥ 1}`.
pub fn radical(ring: &HyperRing, ideal: Ideal) -> Ideal {
    Ideal(ring.elements().filter(|&a| ring.some_power_in(a, ideal.0)).collect())
}

/// `{r : r ∘ a ∈ S}` for an arbitrary set `S` (the empty set gives the empty set).
pub fn colon_set(ring: &HyperRing, set: IndexSet, a: usize) -> IndexSet {
    ring.elements().filter(|&r| set.contains(ring.mul(r, a))).collect()
}

/// `{r : r ∘ m ∈ S for all m ∈ M}` for an arbitrary set `S`.
pub fn colon_set_by(ring: &HyperRing, set: IndexSet, by: IndexSet) -> IndexSet {
    ring.elements().filter(|&r| ring.scale_set(r, by).is_subset(set)).collect()
}

/// `(N : a)`.
pub fn colon_elem(ring: &HyperRing, ideal: Ideal, a: usize) -> Ideal {
    Ideal(colon_set(ring, ideal.0, a))
}

/// `(N : M)`.
pub fn colon_ideal(ring: &HyperRing, ideal: Ideal, by: Ideal) -> Ideal {
    Ideal(colon_set_by(ring, ideal.0, by.0))
}

/// `ann(N) = (0 : N)`.
pub fn annihilator(ring: &HyperRing, ideal: Ideal) -> Ideal {
    colon_ideal(ring, Ideal::zero(ring), ideal)
}

/// Every hyperideal of `ring`, smallest first (cardinality, then lexicographic).
///
/// Built as the join-closure of the principal hyperideals and cached on the ring.
pub fn enumerate_hyperideals(ring: &HyperRing) -> &[Ideal] {
    ring.lattice_cache().get_or_init(|| {
        let principals: BTreeSet<Ideal> = ring.elements().map(|a| principal(ring, a)).collect();
        let mut seen: BTreeSet<Ideal> = BTreeSet::new();
        let mut frontier = vec![Ideal::zero(ring)];
        seen.insert(Ideal::zero(ring));
        while let Some(current) = frontier.pop() {
            for p in &principals {
                if p.is_subset(current) {
                    continue;
                }
                let joined = generate(ring, current.0.union(p.0));
                if seen.insert(joined) {
                    frontier.push(joined);
                }
            }
        }
        let mut all: Vec<Ideal> = seen.into_iter().collect();
        all.sort_by(Ideal::canonical_cmp);
        all
    })
}

/// The proper hyperideals, in lattice order.
pub fn proper_hyperideals(ring: &HyperRing) -> Vec<Ideal> {
    enumerate_hyperideals(ring).iter().copied().filter(|i| i.is_proper(ring)).collect()
}

/// Parses `0,4,8` as a hyperideal of `ring`.
pub fn parse_ideal(ring: &HyperRing, text: &str) -> Result<Ideal, String> {
    let mut set = IndexSet::EMPTY;
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let a: usize = part.parse().map_err(|_| format!("`{part}` is not an element index"))?;
        if a >= ring.size() {
            return Err(format!("element {a} out of range for a ring of size {}", ring.size()));
        }
        set.insert(a);
    }
    Ideal::new(ring, set).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{unit_quotient, zmod};

    fn multiples(n: usize, d: usize) -> IndexSet {
        (0..n).filter(|x| x % d == 0).collect()
    }

    fn set(v: &[usize]) -> IndexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn predicate() {
        let z6 = zmod(6);
        assert!(is_hyperideal(&z6, set(&[0])));
        assert!(is_hyperideal(&z6, z6.carrier()));
        assert!(!is_hyperideal(&z6, set(&[0, 2, 3])));
        assert!(is_hyperideal(&z6, set(&[0, 3])));
        assert!(!is_hyperideal(&z6, set(&[2, 4])));
    }

    #[test]
    fn generation() {
        let z6 = zmod(6);
        assert_eq!(generate(&z6, IndexSet::EMPTY).members(), set(&[0]));
        assert_eq!(generate(&z6, set(&[2])).members(), set(&[0, 2, 4]));
        let k = unit_quotient(&zmod(3), set(&[1, 2])).unwrap();
        assert_eq!(generate(&k, set(&[1])).members(), set(&[0, 1]));
    }

    #[test]
    fn sums_and_intersections() {
        let z6 = zmod(6);
        let two = principal(&z6, 2);
        let three = principal(&z6, 3);
        assert_eq!(ideal_sum(&z6, two, Ideal::zero(&z6)).unwrap(), two);
        assert_eq!(ideal_sum(&z6, two, three).unwrap(), Ideal::whole(&z6));
        assert_eq!(ideal_intersect(&z6, two, three).unwrap(), Ideal::zero(&z6));
        let foreign = Ideal::trusted(set(&[0, 9]));
        assert!(matches!(ideal_sum(&z6, two, foreign), Err(IdealError::RingMismatch(..))));
    }

    #[test]
    fn products_and_powers() {
        let z4 = zmod(4);
        let two = principal(&z4, 2);
        assert_eq!(ideal_product(&z4, two, Ideal::whole(&z4)), two);
        assert_eq!(ideal_power(&z4, two, 2).unwrap(), Ideal::zero(&z4));
        assert_eq!(ideal_power(&z4, two, 0), Err(IdealError::ZeroExponent));
        let z12 = zmod(12);
        assert_eq!(ideal_power(&z12, principal(&z12, 2), 2).unwrap().members(), multiples(12, 4));
    }

    #[test]
    fn omega() {
        let z4 = zmod(4);
        assert_eq!(omega_power(&z4, principal(&z4, 2)), Ideal::zero(&z4));
        let z6 = zmod(6);
        let two = principal(&z6, 2);
        assert_eq!(omega_power(&z6, two), two);
        assert_eq!(omega_power(&z6, Ideal::whole(&z6)), Ideal::whole(&z6));
    }

    #[test]
    fn radicals() {
        let z12 = zmod(12);
        assert_eq!(radical(&z12, principal(&z12, 4)).members(), multiples(12, 2));
        assert_eq!(radical(&z12, Ideal::whole(&z12)), Ideal::whole(&z12));
        let three = principal(&z12, 3);
        assert_eq!(radical(&z12, three), three);
    }

    #[test]
    fn colons_and_annihilators() {
        let z12 = zmod(12);
        let four = principal(&z12, 4);
        assert_eq!(colon_elem(&z12, four, 0), Ideal::whole(&z12));
        assert_eq!(colon_elem(&z12, four, 1), four);
        // {r : 2r ≡ 0 mod 4} in Z_12
        let oracle: IndexSet = (0..12).filter(|r| (2 * r) % 12 % 4 == 0).collect();
        assert_eq!(colon_elem(&z12, four, 2).members(), oracle);
        assert_eq!(oracle, multiples(12, 2));

        let z6 = zmod(6);
        assert_eq!(annihilator(&z6, Ideal::zero(&z6)), Ideal::whole(&z6));
        assert_eq!(annihilator(&z6, principal(&z6, 2)), principal(&z6, 3));
        let z4 = zmod(4);
        assert_eq!(annihilator(&z4, principal(&z4, 2)), principal(&z4, 2));
    }

    #[test]
    fn lattices() {
        let z6 = zmod(6);
        let got: Vec<IndexSet> = enumerate_hyperideals(&z6).iter().map(|i| i.members()).collect();
        assert_eq!(got, vec![set(&[0]), set(&[0, 3]), set(&[0, 2, 4]), z6.carrier()]);
        let z4 = zmod(4);
        assert_eq!(enumerate_hyperideals(&z4).len(), 3);
        let k = unit_quotient(&zmod(3), set(&[1, 2])).unwrap();
        let got: Vec<IndexSet> = enumerate_hyperideals(&k).iter().map(|i| i.members()).collect();
        assert_eq!(got, vec![set(&[0]), set(&[0, 1])]);
        assert_eq!(proper_hyperideals(&k).len(), 1);
    }

    #[test]
    fn lattice_of_zn_matches_divisors() {
        for n in [2usize, 3, 4, 6, 8, 9, 12] {
            let r = zmod(n);
            let mut expected: Vec<IndexSet> = (1..=n).filter(|d| n % d == 0).map(|d| multiples(n, d)).collect();
            expected.sort_by(IndexSet::canonical_cmp);
            let got: Vec<IndexSet> = enumerate_hyperideals(&r).iter().map(|i| i.members()).collect();
            assert_eq!(got, expected, "Z_{n}");
        }
    }

    #[test]
    fn parse() {
        let z12 = zmod(12);
        assert_eq!(parse_ideal(&z12, "0,4,8").unwrap().members(), set(&[0, 4, 8]));
        assert!(parse_ideal(&z12, "0,4").is_err());
        assert!(parse_ideal(&z12, "0,x").is_err());
        assert!(parse_ideal(&z12, "0,13").is_err());
    }
}
