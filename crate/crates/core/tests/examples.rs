//! Worked examples, each re-derived by the brute-force oracles in `common`.

mod common;

use common::{all_ideals, primary_witness, radical, set, to_set, whole, Set};
use hrl::classify::{classify_all, is_phi_delta_primary, phi_delta_primary_via, Variant, Witness};
use hrl::construct::{decompose_by_idempotent, kernel, quotient, unit_quotient};
use hrl::corpus::krasner;
use hrl::ideals::{enumerate_hyperideals, ideal_intersect, ideal_power, ideal_sum, principal};
use hrl::maps::{eval_expansion, eval_reduction, verify_expansion};
use hrl::{verify_krasner, zmod, Expansion, Ideal, IndexSet, Reduced, Reduction};

fn ideal(ring: &hrl::HyperRing, items: &[usize]) -> Ideal {
    Ideal::new(ring, items.iter().copied().collect()).unwrap()
}

#[test]
fn lattice_of_z4_and_z6() {
    let z4 = zmod(4);
    let got: Vec<Set> = enumerate_hyperideals(&z4).iter().map(|&n| to_set(n)).collect();
    assert_eq!(got, vec![set(&[0]), set(&[0, 2]), set(&[0, 1, 2, 3])]);
    assert_eq!(got.into_iter().collect::<std::collections::BTreeSet<_>>(), all_ideals(&z4));

    let z6 = zmod(6);
    assert!(verify_krasner(&z6).all_pass());
    assert_eq!(enumerate_hyperideals(&z6).len(), all_ideals(&z6).len());
    assert_eq!(all_ideals(&z6).len(), 4);
}

#[test]
fn ideal_arithmetic_in_residue_rings() {
    let z6 = zmod(6);
    let (two, three) = (principal(&z6, 2), principal(&z6, 3));
    let sum = ideal_sum(&z6, two, three).unwrap();
    assert_eq!(to_set(sum), whole(&z6));
    let meet = ideal_intersect(&z6, two, three).unwrap();
    assert_eq!(to_set(meet), to_set(two).intersection(&to_set(three)).copied().collect::<Set>());
    assert_eq!(to_set(meet), set(&[0]));

    let z12 = zmod(12);
    let two = principal(&z12, 2);
    let square = ideal_power(&z12, two, 2).unwrap();
    assert_eq!(to_set(square), common::ideal_product(&z12, &to_set(two), &to_set(two)));
    assert_eq!(to_set(square), set(&[0, 4, 8]));
}

#[test]
fn reductions_and_expansions_on_small_rings() {
    let z4 = zmod(4);
    let two = ideal(&z4, &[0, 2]);
    let value = eval_reduction(&Reduction::Power(2), &z4, two).unwrap();
    assert_eq!(to_set(value.ideal().unwrap()), common::ideal_product(&z4, &set(&[0, 2]), &set(&[0, 2])));
    assert_eq!(value, Reduced::Ideal(Ideal::zero(&z4)));

    let z6 = zmod(6);
    let residual = Expansion::Residual(ideal(&z6, &[0, 2, 4]));
    assert!(verify_expansion(&residual, &z6).all_pass());
    let three = ideal(&z6, &[0, 3]);
    let oracle: Set = (0..6).filter(|&r| [0, 2, 4].iter().all(|&m| [0, 3].contains(&z6.mul(r, m)))).collect();
    assert_eq!(to_set(eval_expansion(&residual, &z6, three).unwrap()), oracle);
    assert_eq!(oracle, set(&[0, 3]));
}

#[test]
fn classification_examples() {
    let z12 = zmod(12);
    let four = ideal(&z12, &[0, 4, 8]);
    let c = classify_all(&z12, four, None, None).unwrap();
    let n = to_set(four);
    assert_eq!(primary_witness(&z12, &n, &Set::new(), &n), Some((2, 2)));
    assert_eq!(c.prime.witness, Some(Witness::Pair { a: 2, b: 2 }));
    assert!(primary_witness(&z12, &n, &Set::new(), &radical(&z12, &n)).is_none());
    assert!(c.primary.holds);

    let z4 = zmod(4);
    let zero = Ideal::zero(&z4);
    let c = classify_all(&z4, zero, None, None).unwrap();
    let n = set(&[0]);
    let square = common::ideal_product(&z4, &n, &n);
    assert_eq!(primary_witness(&z4, &n, &Set::new(), &n), Some((2, 2)));
    assert!(primary_witness(&z4, &n, &n, &n).is_none());
    assert!(primary_witness(&z4, &n, &square, &n).is_none());
    assert!(!c.prime.holds && c.weakly_prime.holds && c.almost_prime.holds && c.w_prime.holds);

    let z6 = zmod(6);
    let two = ideal(&z6, &[0, 2, 4]);
    assert!(primary_witness(&z6, &to_set(two), &Set::new(), &to_set(two)).is_none());
    let c = classify_all(&z6, two, None, None).unwrap();
    assert!(c.prime.holds && c.weakly_prime.holds && c.almost_prime.holds && c.w_prime.holds && c.primary.holds);
}

#[test]
fn variant_examples() {
    let z4 = zmod(4);
    let two = ideal(&z4, &[0, 2]);
    let v = phi_delta_primary_via(&z4, two, &Reduction::Empty, &Expansion::Identity, Variant::ColonDichotomy).unwrap();
    assert!(v.holds);
    for a in [1, 3] {
        let colon: Set = (0..4).filter(|&r| [0, 2].contains(&z4.mul(r, a))).collect();
        assert_eq!(colon, set(&[0, 2]));
    }
    let zero = Ideal::zero(&z4);
    let v = phi_delta_primary_via(&z4, zero, &Reduction::Empty, &Expansion::Identity, Variant::Definition).unwrap();
    assert_eq!(v.witness, Some(Witness::Pair { a: 2, b: 2 }));
}

#[test]
fn identity_reduction_is_vacuous() {
    let z12 = zmod(12);
    for &n in enumerate_hyperideals(&z12).iter().filter(|n| n.is_proper(&z12)) {
        for delta in Expansion::catalog(&z12) {
            for v in Variant::ALL {
                assert!(phi_delta_primary_via(&z12, n, &Reduction::Identity, &delta, v).unwrap().holds);
            }
        }
    }
}

#[test]
fn unit_quotient_of_z5() {
    let r = unit_quotient(&zmod(5), IndexSet::from_iter([1, 4])).unwrap();
    assert_eq!(r.size(), 3);
    assert!(verify_krasner(&r).all_pass());
    // classes {0}, {1,4}, {2,3}: 1 ⊕ 1 is the class set of {1+1, 1+4, 4+1, 4+4} = {2, 0, 0, 3}
    assert_eq!(r.add(1, 1), IndexSet::from_iter([0, 2]));
    let k = krasner();
    assert_eq!(k.add(1, 1), IndexSet::from_iter([0, 1]));
}

#[test]
fn quotient_examples() {
    let z6 = zmod(6);
    let q = quotient(&z6, ideal(&z6, &[0, 3])).unwrap();
    assert_eq!(q.ring().size(), 3);
    assert!(q.ring().is_classical());
    for a in 0..6 {
        for b in 0..6 {
            let sum = (a + b) % 6;
            assert_eq!(q.ring().add(q.class_of(a), q.class_of(b)), IndexSet::singleton(q.class_of(sum)));
            assert_eq!(q.ring().mul(q.class_of(a), q.class_of(b)), q.class_of(a * b % 6));
            assert_eq!(q.class_of(a) == q.class_of(b), (a + 6 - b) % 3 == 0);
        }
    }
    let hom = q.projection(&z6);
    assert_eq!(to_set(kernel(&hom)), set(&[0, 3]));

    let whole_q = quotient(&z6, Ideal::whole(&z6)).unwrap();
    assert_eq!(whole_q.ring().size(), 1);
}

#[test]
fn idempotent_split_of_z6() {
    let z6 = zmod(6);
    let d = decompose_by_idempotent(&z6, 3).unwrap();
    let mut sizes = [d.first.size(), d.second.size()];
    sizes.sort();
    assert_eq!(sizes, [2, 3]);
    assert!(verify_krasner(d.product.ring()).all_pass());
}

#[test]
fn weakly_prime_zero_of_z4_via_general_test() {
    let z4 = zmod(4);
    let v = is_phi_delta_primary(&z4, Ideal::zero(&z4), &Reduction::Zero, &Expansion::Identity).unwrap();
    assert!(v.holds);
}
