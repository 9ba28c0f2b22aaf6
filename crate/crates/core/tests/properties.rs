use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use zero_hecke::diagram;
use zero_hecke::{
    AlgebraElement, GeneratorSet, HeckeAlgebra, HeckeMonoid, Orientation, Permutation, SignedDiagram, Word,
};

fn algebra(n: usize) -> &'static HeckeAlgebra {
    use std::sync::OnceLock;
    static CACHE: [OnceLock<HeckeAlgebra>; 7] = [const { OnceLock::new() }; 7];
    CACHE[n].get_or_init(|| HeckeAlgebra::new(n).unwrap())
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn element(n: usize) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((perm(n), -3i64..=3), 0..6).prop_map(move |terms| {
        AlgebraElement::from_terms(n, terms.into_iter().map(|(p, c)| (p, BigInt::from(c)))).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (usize, AlgebraElement, AlgebraElement, AlgebraElement)> {
    (2usize..=5).prop_flat_map(|n| (Just(n), element(n), element(n), element(n)))
}

fn word(n: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..n, 0..12).prop_map(move |letters| Word::new(letters, n).unwrap())
}

fn diagram_for(n: usize) -> impl Strategy<Value = SignedDiagram> {
    (0u64..1 << (n - 1)).prop_map(move |k| SignedDiagram::all(n - 1).nth(k as usize).unwrap())
}

/// Product computed term by term from the permutation-level monoid product.
fn naive_product(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut acc: BTreeMap<Permutation, BigInt> = BTreeMap::new();
    for (p, x) in a.terms().iter() {
        for (q, y) in b.terms().iter() {
            *acc.entry(p.monoid_product(q).unwrap()).or_default() += x * y;
        }
    }
    AlgebraElement::from_terms(a.n(), acc).unwrap()
}

#[test]
fn generator_relations_hold_exhaustively() {
    for n in 2..=6 {
        let m = HeckeMonoid::new(n).unwrap();
        let w = |letters: &[usize]| m.word_index(letters).unwrap();
        for i in 1..n {
            assert_eq!(w(&[i, i]), w(&[i]));
            if i + 1 < n {
                assert_eq!(w(&[i, i + 1, i]), w(&[i + 1, i, i + 1]));
            }
            for j in i + 2..n {
                assert_eq!(w(&[i, j]), w(&[j, i]));
            }
        }
    }
}

#[test]
fn pibar_relations_hold() {
    for n in 3..=5 {
        let h = algebra(n);
        for i in 1..n {
            let b = h.pibar(i).unwrap();
            assert_eq!(h.multiply(&b, &b).unwrap(), b);
            assert!(h.multiply(&b, &h.pi(i).unwrap()).unwrap().is_zero());
            if i + 1 < n {
                let c = h.pibar(i + 1).unwrap();
                let bcb = h.multiply(&h.multiply(&b, &c).unwrap(), &b).unwrap();
                let cbc = h.multiply(&h.multiply(&c, &b).unwrap(), &c).unwrap();
                assert_eq!(bcb, cbc);
            }
        }
    }
}

#[test]
fn w_minus_is_the_alternating_sum() {
    for n in 2..=5 {
        let h = algebra(n);
        for set in GeneratorSet::all_subsets(n) {
            assert_eq!(h.w_minus(set).unwrap(), h.parabolic_alternating_sum(set).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_matches_naive_product((n, a, b, _) in triple()) {
        prop_assert_eq!(algebra(n).multiply(&a, &b).unwrap(), naive_product(&a, &b));
    }

    #[test]
    fn multiplication_is_associative((n, a, b, c) in triple()) {
        let h = algebra(n);
        let left = h.multiply(&h.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = h.multiply(&a, &h.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes((n, a, b, c) in triple()) {
        let h = algebra(n);
        let left = h.multiply(&a, &b.add(&c).unwrap()).unwrap();
        let right = h.multiply(&a, &b).unwrap().add(&h.multiply(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn psi_is_an_involutive_morphism((n, a, b, _) in triple()) {
        let h = algebra(n);
        prop_assert_eq!(h.psi(&h.psi(&a).unwrap()).unwrap(), a.clone());
        let ab = h.multiply(&a, &b).unwrap();
        prop_assert_eq!(h.psi(&ab).unwrap(), h.multiply(&h.psi(&a).unwrap(), &h.psi(&b).unwrap()).unwrap());
        prop_assert_eq!(h.psi(&h.one()).unwrap(), h.one());
    }

    #[test]
    fn reversal_is_an_involutive_morphism((n, a, b, _) in triple()) {
        let h = algebra(n);
        prop_assert_eq!(a.dynkin_reverse().dynkin_reverse(), a.clone());
        let ab = h.multiply(&a, &b).unwrap();
        prop_assert_eq!(ab.dynkin_reverse(), h.multiply(&a.dynkin_reverse(), &b.dynkin_reverse()).unwrap());
    }

    #[test]
    fn evaluation_maps_are_morphisms((n, a, b, _) in triple()) {
        prop_assume!(n >= 3);
        let h = algebra(n);
        let small = algebra(n - 1);
        let ab = h.multiply(&a, &b).unwrap();
        prop_assert_eq!(ab.phi_plus().unwrap(), small.multiply(&a.phi_plus().unwrap(), &b.phi_plus().unwrap()).unwrap());
        prop_assert_eq!(ab.phi_minus().unwrap(), small.multiply(&a.phi_minus().unwrap(), &b.phi_minus().unwrap()).unwrap());
    }

    #[test]
    fn characters_are_multiplicative((n, a, b, _) in triple(), bits in 0u64..16) {
        let h = algebra(n);
        let set = GeneratorSet::from_bits(bits & GeneratorSet::full(n).bits());
        let ab = h.multiply(&a, &b).unwrap();
        prop_assert_eq!(ab.lambda_eval(set).unwrap(), a.lambda_eval(set).unwrap() * b.lambda_eval(set).unwrap());
    }

    #[test]
    fn json_round_trips((_, a, _, _) in triple()) {
        prop_assert_eq!(AlgebraElement::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn reduced_words_replay((n, p) in (2usize..=7).prop_flat_map(|n| (Just(n), perm(n)))) {
        let w = p.reduced_word();
        prop_assert_eq!(w.len(), p.length());
        prop_assert!(w.is_reduced());
        prop_assert_eq!(w.to_permutation(), p.clone());
        let replay = w.letters().iter().fold(Permutation::identity(n), |q, &i| q.apply_pi_right(i).unwrap());
        prop_assert_eq!(replay, p.clone());
        prop_assert_eq!(p.monoid_omega().content(), p.content());
        prop_assert!(p.monoid_omega().is_monoid_idempotent());
    }

    #[test]
    fn left_action_climbs_weak_order((n, p, i) in (2usize..=6).prop_flat_map(|n| (Just(n), perm(n), 1..n))) {
        let q = p.apply_pi_left(i).unwrap();
        prop_assert!(p.leq_left_weak(&q).unwrap());
        prop_assert_eq!(q == p, p.left_descents().contains(i));
        let _ = n;
    }

    #[test]
    fn word_products_are_demazure_products((n, w) in (2usize..=6).prop_flat_map(|n| (Just(n), word(n)))) {
        let h = algebra(n);
        let factors: Vec<_> = w.letters().iter().map(|&i| zero_hecke::Factor::pi(i)).collect();
        prop_assert_eq!(h.factor_product(&factors).unwrap(), AlgebraElement::basis(w.to_permutation()));
    }

    #[test]
    fn triangularity_oracle((n, d, m) in (2usize..=5).prop_flat_map(|n| (Just(n), diagram_for(n), perm(n)))) {
        let h = algebra(n);
        let c = diagram::demipotent(h, &d).unwrap();
        let image = naive_product(&c, &AlgebraElement::basis(m.clone()));
        let lambda = image.coeff(&m);
        let expected = if m.left_descents() == d.plus_set() { BigInt::one() } else { BigInt::zero() };
        prop_assert_eq!(lambda, expected);
        for (p, _) in image.terms().iter() {
            prop_assert!(p == &m || m.leq_left_weak(p).unwrap());
        }
    }

    #[test]
    fn idempotents_are_orthogonal_to_their_psi_image((n, d) in (2usize..=5).prop_flat_map(|n| (Just(n), diagram_for(n)))) {
        let h = algebra(n);
        let e = diagram::idempotent(h, &d, Orientation::Standard).unwrap().element;
        let f = h.psi(&e).unwrap();
        prop_assert!(h.multiply(&e, &f).unwrap().is_zero());
        prop_assert!(h.multiply(&f, &e).unwrap().is_zero());
    }
}
