use std::collections::HashSet;

use abelian_pauli::anticommuting::{
    classify_structure, construct_maximum, extend_to_maximum_with_rng, is_anticommuting, is_maximally_anticommuting,
    random_maximal_anticommuting, shrink_triple,
};
use abelian_pauli::commuting::{
    compose_commuting, decompose, lift_commuting, random_maximal_commuting, verify_commuting_structure,
};
use abelian_pauli::group::{
    coset_anticommuting_element, generated_set, is_minimal_generating, map_census, rank, EchelonBasis,
};
use abelian_pauli::oracle::{all_elements, enumerate_maximal_anticommuting, enumerate_maximal_commuting};
use abelian_pauli::{counting, format_pauli, parse_pauli, product_of_set, Budget, Label, Pauli, PauliSet, Sign};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn label() -> impl Strategy<Value = Label> {
    prop::sample::select(Label::ALL.to_vec())
}

fn pauli(n: usize) -> impl Strategy<Value = Pauli> {
    prop::collection::vec(label(), n).prop_map(|l| Pauli::from_labels(&l))
}

fn triple() -> impl Strategy<Value = (Pauli, Pauli, Pauli)> {
    (1usize..150).prop_flat_map(|n| (pauli(n), pauli(n), pauli(n)))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random minimal generating set of size `k` over `n` factors.
fn random_minimal(n: usize, k: usize, seed: u64) -> PauliSet {
    let mut r = rng(seed);
    let mut basis = EchelonBasis::new(n);
    let mut out = Vec::new();
    while out.len() < k {
        let p = Pauli::random(n, &mut r);
        if basis.insert(&p) {
            out.push(p);
        }
    }
    PauliSet::new_distinct(n, out).unwrap()
}

proptest! {
    #[test]
    fn product_is_an_involution((p, _, _) in triple()) {
        prop_assert!(p.product(&p).unwrap().is_identity());
    }

    #[test]
    fn commutation_is_symmetric((p, q, _) in triple()) {
        prop_assert_eq!(p.commute(&q).unwrap(), q.commute(&p).unwrap());
    }

    #[test]
    fn commutation_is_bilinear((p, q, r) in triple()) {
        let lhs = p.product(&r).unwrap().commute(&q).unwrap();
        prop_assert_eq!(lhs, p.commute(&q).unwrap() * r.commute(&q).unwrap());
    }

    #[test]
    fn text_round_trip(text in "[ixyz]{1,200}") {
        prop_assert_eq!(format_pauli(&parse_pauli(&text).unwrap()), text);
    }

    #[test]
    fn generated_sets_multiply_to_identity(n in 1usize..6, k in 0usize..6, seed in any::<u64>()) {
        let k = k.min(2 * n);
        let g = random_minimal(n, k, seed);
        let h = generated_set(&g, &Budget::default()).unwrap();
        prop_assert_eq!(h.len(), 1 << k);
        let expected = if k == 1 { g.elements()[0].clone() } else { Pauli::identity(n) };
        prop_assert_eq!(product_of_set(&h), expected);
    }

    #[test]
    fn census_is_uniform(n in 1usize..4, k in 1usize..7, seed in any::<u64>()) {
        let k = k.min(2 * n);
        let census = map_census(&random_minimal(n, k, seed), &Budget::default()).unwrap();
        prop_assert_eq!(census.len(), 1 << k);
        prop_assert!(census.values().all(|&c| c == 1 << (2 * n - k)));
    }

    #[test]
    fn coset_element_obeys_parity(n in 1usize..5, seed in any::<u64>(), u in any::<u64>()) {
        let mut r = rng(seed);
        let full = extend_to_maximum_with_rng(&PauliSet::empty(n), &mut r).unwrap().set;
        let k = 1 + (u as usize % (2 * n));
        let t = PauliSet::new_distinct(n, full.iter().take(k).cloned()).unwrap();
        let p = Pauli::random(n, &mut r);
        let basis = EchelonBasis::from_set(&t);
        let coset: Vec<Pauli> = all_elements(n, &Budget::default())
            .unwrap()
            .into_vec()
            .into_iter()
            .filter(|q| basis.coset_representative(q) == basis.coset_representative(&p))
            .filter(|q| t.iter().all(|x| !q.commutes_with(x)))
            .collect();
        match coset_anticommuting_element(&t, &p) {
            None => prop_assert!(coset.is_empty() && t.is_odd()),
            Some(v) => {
                prop_assert!(coset.contains(&v));
                prop_assert_eq!(coset.len(), if t.is_odd() { 2 } else { 1 });
                if coset.len() == 2 {
                    prop_assert_eq!(coset[0].product(&coset[1]).unwrap(), product_of_set(&t));
                }
            }
        }
    }

    #[test]
    fn maximal_commuting_structure(n in 2usize..6, seed in any::<u64>()) {
        let s = random_maximal_commuting(n, &mut rng(seed), &Budget::default()).unwrap();
        prop_assert!(s.is_closed());
        prop_assert!(product_of_set(&s).is_identity());
        prop_assert!(verify_commuting_structure(&s).is_ok());
        let d = decompose(&s).unwrap();
        let parts = Label::ALL.map(|l| d.part(l).clone());
        if parts.iter().all(|p| !p.is_empty()) {
            let back = compose_commuting(&parts[0], &parts[1], &parts[2], &parts[3], [Label::X, Label::Y, Label::Z]).unwrap();
            prop_assert!(back.same_elements(&s));
        } else {
            prop_assert!(lift_commuting(&parts[0], d.uvw[0]).unwrap().same_elements(&s));
        }
    }

    #[test]
    fn maximal_anticommuting_structure(n in 1usize..7, size in 0usize..7, seed in any::<u64>()) {
        let size = 2 * (size % (n + 1)) + 1;
        let s = random_maximal_anticommuting(n, size, &mut rng(seed)).unwrap();
        prop_assert!(s.is_odd());
        prop_assert!(is_maximally_anticommuting(&s).unwrap());
        prop_assert_eq!(rank(&s), s.len() - 1);
        if n >= 2 {
            prop_assert!(classify_structure(&s).is_ok());
        }
    }

    #[test]
    fn no_proper_subset_multiplies_to_identity(n in 1usize..6, seed in any::<u64>()) {
        let s = extend_to_maximum_with_rng(&PauliSet::empty(n), &mut rng(seed)).unwrap().set;
        let items = s.elements();
        for mask in 1u32..(1 << items.len()) - 1 {
            let mut acc = Pauli::identity(n);
            for (k, p) in items.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    acc.mul_assign(p);
                }
            }
            prop_assert!(!acc.is_identity());
        }
        let prefix = PauliSet::new_distinct(n, items.iter().take(items.len() - 1).cloned()).unwrap();
        prop_assert!(is_minimal_generating(&prefix));
        prop_assert_eq!(rank(&prefix), prefix.len());
    }

    #[test]
    fn extension_is_a_maximum_superset(n in 1usize..20, k in 0usize..40, seed in any::<u64>()) {
        let mut r = rng(seed);
        let full = extend_to_maximum_with_rng(&PauliSet::empty(n), &mut r).unwrap().set;
        let g = PauliSet::new_distinct(n, full.iter().take(k.min(2 * n)).cloned()).unwrap();
        if g.len() == 1 && g.elements()[0].is_identity() {
            return Ok(());
        }
        let out = extend_to_maximum_with_rng(&g, &mut r).unwrap().set;
        prop_assert!(g.is_subset_of(&out));
        prop_assert!(is_anticommuting(&out));
        prop_assert_eq!(out.len(), 2 * n + 1);
        prop_assert!(product_of_set(&out).is_identity());
    }

    #[test]
    fn canonical_key_ignores_order(n in 1usize..5, seed in any::<u64>()) {
        let s = random_maximal_commuting(n, &mut rng(seed), &Budget::default()).unwrap();
        let mut reversed = s.clone().into_vec();
        reversed.reverse();
        prop_assert_eq!(s.canonical_key(), PauliSet::new(n, reversed).unwrap().canonical_key());
    }
}

#[test]
fn maps_distinguish_elements_against_a_full_basis() {
    for n in 1..=3 {
        let g = random_minimal(n, 2 * n, n as u64);
        let seen: HashSet<Vec<Sign>> = all_elements(n, &Budget::default())
            .unwrap()
            .iter()
            .map(|p| g.iter().map(|q| p.commute(q).unwrap()).collect())
            .collect();
        assert_eq!(seen.len(), 1 << (2 * n));
    }
}

#[test]
fn every_odd_size_is_reachable() {
    for n in 1..=6 {
        let mut s = construct_maximum(n).unwrap();
        let mut sizes = vec![s.len()];
        while s.len() > 1 {
            let t = PauliSet::new_distinct(n, s.iter().take(3).cloned()).unwrap();
            s = shrink_triple(&s, &t).unwrap();
            assert!(is_maximally_anticommuting(&s).unwrap());
            sizes.push(s.len());
        }
        assert_eq!(sizes, (0..=n).rev().map(|k| 2 * k + 1).collect::<Vec<_>>());
    }
}

#[test]
fn oracle_matches_counting_within_budget() {
    let b = Budget::default();
    for n in 1..=b.max_commuting_n {
        let found = enumerate_maximal_commuting(n, &b).unwrap().len();
        assert_eq!(BigUint::from(found), counting::count_maximal_commuting(n).unwrap());
    }
    for n in 1..=b.max_anticommuting_n {
        for m in 0..=2 * n + 2 {
            let found = enumerate_maximal_anticommuting(n, m, &b).unwrap().len();
            let expected = counting::count_maximal_anticommuting(n, m).unwrap();
            assert_eq!(BigUint::from(found), expected, "n = {n}, m = {m}");
        }
    }
}
