mod common;

use proptest::prelude::*;

use common::{all_ideals, primary_witness, radical, to_set, Set};
use hrl::classify::{is_phi_delta_primary, via_with, Variant, Witness};
use hrl::construct::{direct_product, quotient, unit_quotient};
use hrl::corpus::default_corpus;
use hrl::ideals::{colon_set, enumerate_hyperideals, generate, is_hyperideal, power_chain, radical as lib_radical};
use hrl::maps::{eval_expansion, eval_reduction, verify_expansion, verify_reduction};
use hrl::{verify_krasner, zmod, Expansion, HyperRing, IndexSet, Reduction};

fn small_rings() -> Vec<HyperRing> {
    let mut rings = default_corpus();
    rings.retain(|r| r.size() <= 12);
    rings
}

fn ring_strategy() -> impl Strategy<Value = HyperRing> {
    let rings = small_rings();
    (0..rings.len()).prop_map(move |i| rings[i].clone())
}

fn reduction_strategy() -> impl Strategy<Value = Reduction> {
    prop_oneof![
        Just(Reduction::Empty),
        Just(Reduction::Zero),
        Just(Reduction::Identity),
        Just(Reduction::Omega),
        (2u32..6).prop_map(Reduction::Power),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn set_ops_agree_with_btreeset(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (IndexSet::from_bits(a), IndexSet::from_bits(b));
        let bx: Set = (0..64).filter(|i| a >> i & 1 == 1).collect();
        let by: Set = (0..64).filter(|i| b >> i & 1 == 1).collect();
        prop_assert_eq!(x.union(y).iter().collect::<Set>(), bx.union(&by).copied().collect::<Set>());
        prop_assert_eq!(x.intersection(y).iter().collect::<Set>(), bx.intersection(&by).copied().collect::<Set>());
        prop_assert_eq!(x.difference(y).iter().collect::<Set>(), bx.difference(&by).copied().collect::<Set>());
        prop_assert_eq!(x.is_subset(y), bx.is_subset(&by));
        prop_assert_eq!(x.len(), bx.len());
    }

    #[test]
    fn hyperideal_predicate_matches_definition(ring in ring_strategy(), mask in any::<u64>()) {
        let n = ring.size();
        let s = IndexSet::from_bits(mask & ((1u64 << n) - 1));
        prop_assert_eq!(is_hyperideal(&ring, s), common::is_ideal(&ring, &s.iter().collect()));
    }

    #[test]
    fn generated_ideal_is_least(ring in ring_strategy(), mask in any::<u64>()) {
        let n = ring.size();
        let s = IndexSet::from_bits(mask & ((1u64 << n) - 1));
        let g = to_set(generate(&ring, s));
        let seeds: Set = s.iter().collect();
        let least = all_ideals(&ring).into_iter().filter(|i| seeds.is_subset(i)).min_by_key(Set::len).unwrap();
        prop_assert_eq!(g, least);
    }

    #[test]
    fn radical_and_colon_match_definitions(ring in ring_strategy(), pick in any::<usize>(), a in any::<usize>()) {
        let lattice = enumerate_hyperideals(&ring);
        let n = lattice[pick % lattice.len()];
        let a = a % ring.size();
        prop_assert_eq!(to_set(lib_radical(&ring, n)), radical(&ring, &to_set(n)));
        let colon: Set = (0..ring.size()).filter(|&r| n.contains(ring.mul(r, a))).collect();
        prop_assert_eq!(colon_set(&ring, n.members(), a).iter().collect::<Set>(), colon);
    }

    #[test]
    fn power_chain_is_decreasing(ring in ring_strategy(), pick in any::<usize>()) {
        let lattice = enumerate_hyperideals(&ring);
        let n = lattice[pick % lattice.len()];
        let chain = power_chain(&ring, n);
        prop_assert_eq!(chain[0], n);
        for w in chain.windows(2) {
            prop_assert!(w[1].is_subset(w[0]) && w[1] != w[0]);
        }
    }

    #[test]
    fn verdicts_match_definition(
        ring in ring_strategy(),
        pick in any::<usize>(),
        phi in reduction_strategy(),
        d in any::<usize>(),
    ) {
        let proper: Vec<_> = enumerate_hyperideals(&ring).iter().copied().filter(|n| n.is_proper(&ring)).collect();
        let n = proper[pick % proper.len()];
        let deltas = Expansion::catalog(&ring);
        let delta = &deltas[d % deltas.len()];
        let reduced = eval_reduction(&phi, &ring, n).unwrap();
        let expanded = eval_expansion(delta, &ring, n).unwrap();
        let v = is_phi_delta_primary(&ring, n, &phi, delta).unwrap();
        let oracle = primary_witness(&ring, &to_set(n), &reduced.members().iter().collect(), &to_set(expanded));
        prop_assert_eq!(v.holds, oracle.is_none());
        if let Some(Witness::Pair { a, b }) = v.witness {
            prop_assert_eq!(Some((a, b)), oracle);
        }
        for variant in Variant::ALL {
            prop_assert_eq!(via_with(&ring, n, reduced, expanded, variant).holds, v.holds, "{}", variant.name());
        }
    }

    #[test]
    fn catalog_maps_satisfy_their_laws(ring in ring_strategy(), phi in reduction_strategy()) {
        prop_assert!(verify_reduction(&phi, &ring).all_pass());
        for delta in Expansion::catalog(&ring) {
            prop_assert!(verify_expansion(&delta, &ring).all_pass());
        }
    }

    #[test]
    fn quotients_and_products_are_hyperrings(i in any::<usize>(), j in any::<usize>(), pick in any::<usize>()) {
        let rings: Vec<HyperRing> = small_rings().into_iter().filter(|r| r.size() <= 6).collect();
        let (a, b) = (&rings[i % rings.len()], &rings[j % rings.len()]);
        let p = direct_product(a, b).unwrap();
        prop_assert!(verify_krasner(p.ring()).all_pass());
        prop_assert_eq!(enumerate_hyperideals(p.ring()).len(), enumerate_hyperideals(a).len() * enumerate_hyperideals(b).len());
        let proper: Vec<_> = enumerate_hyperideals(a).iter().copied().filter(|n| n.is_proper(a)).collect();
        let q = quotient(a, proper[pick % proper.len()]).unwrap();
        prop_assert!(verify_krasner(q.ring()).all_pass());
    }

    #[test]
    fn unit_quotients_of_prime_fields(p in prop::sample::select(vec![3usize, 5, 7, 11, 13]), g in 1usize..13) {
        let base = zmod(p);
        let g = g % p;
        prop_assume!(g != 0);
        let group: IndexSet = (1..p).map(|k| (0..k).fold(1, |acc, _| acc * g % p)).collect();
        let r = unit_quotient(&base, group).unwrap();
        prop_assert!(verify_krasner(&r).all_pass());
        prop_assert_eq!(r.size(), 1 + (p - 1) / group.len());
        prop_assert_eq!(all_ideals(&r).len(), 2);
    }
}
