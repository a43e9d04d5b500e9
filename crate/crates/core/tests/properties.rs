use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nilorbit::classes::{self, compute_class, compute_class_with_word, Kind};
use nilorbit::combin::{enumerate_involutions, Involution, Permutation};
use nilorbit::operators::{OperatorKind, Theory, TheoryContext, UMode};
use nilorbit::ring::{Exps, Int, LaurentPoly, RatFunc, VariableContext, SLOTS};
use nilorbit::verify::random_ratfunc;
use nilorbit::weightfn;

const N: usize = 3;

fn ctx() -> VariableContext {
    VariableContext::new(N, true, false).unwrap()
}

/// Laurent polynomials in `u, t1..t3` with at most `max_terms` terms.
fn laurent(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-5i64..=5, 0i16..=2, prop::array::uniform3(-2i16..=2)), 0..=max_terms).prop_map(|terms| {
        LaurentPoly::from_terms(
            ctx(),
            terms.into_iter().map(|(c, u, t)| {
                let mut e = [0i16; SLOTS];
                e[0] = u;
                e[1..=N].copy_from_slice(&t);
                (Exps::from_slots(e), Int::from(c))
            }),
        )
    })
}

fn nonzero(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    laurent(max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in laurent(4), b in laurent(4), c in laurent(4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(4), b in nonzero(3)) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn rational_functions_have_one_representation(a in laurent(3), b in nonzero(2), c in nonzero(2)) {
        let direct = RatFunc::new(a.clone(), b.clone()).unwrap();
        let scaled = RatFunc::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&direct, &scaled);
        prop_assert_eq!(direct.to_string(), scaled.to_string());
    }

    #[test]
    fn rational_field_axioms(a in laurent(2), b in nonzero(2), c in laurent(2), d in nonzero(2)) {
        let x = RatFunc::new(a, b).unwrap();
        let y = RatFunc::new(c, d).unwrap();
        let sum = x.checked_add(&y).unwrap();
        prop_assert_eq!(sum.checked_sub(&y).unwrap(), x.clone());
        let prod = x.checked_mul(&y).unwrap();
        if !y.is_zero() {
            prop_assert_eq!(prod.checked_div(&y).unwrap(), x);
        }
    }

    #[test]
    fn permutations_act_as_a_group(a in laurent(4), b in laurent(4), s in permutation(N), t in permutation(N)) {
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(
            a.act_permutation(st.one_line()).unwrap(),
            a.act_permutation(t.one_line()).unwrap().act_permutation(s.one_line()).unwrap()
        );
        let act = |p: &LaurentPoly| p.act_permutation(s.one_line()).unwrap();
        prop_assert_eq!(act(&(&a * &b)), &act(&a) * &act(&b));
        prop_assert_eq!(act(&(&a + &b)), &act(&a) + &act(&b));
    }

    #[test]
    fn reduced_words_multiply_back(p in permutation(7)) {
        let word = p.reduced_word();
        prop_assert_eq!(word.len(), p.length());
        prop_assert_eq!(word.product(7).unwrap(), p);
    }
}

fn involution(max_n: usize) -> impl Strategy<Value = Involution> {
    (1..=max_n).prop_flat_map(|n| {
        let all = enumerate_involutions(n);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn default_words_drive_resolutions(w in involution(8)) {
        let word = w.pi_w().reduced_word();
        prop_assert_eq!(classes::check_word(&w, &word).unwrap(), w.pi_w());
    }

    #[test]
    fn fundamental_classes_are_homogeneous_polynomials(w in involution(6)) {
        let tc = TheoryContext::cohomology(w.n()).unwrap();
        let r = compute_class(&w, &tc, Kind::Fundamental).unwrap();
        prop_assert!(r.value.is_polynomial());
        prop_assert!(r.value.is_homogeneous());
        prop_assert_eq!(r.value.total_degree(), Some(w.codim() as i32));
    }

    #[test]
    fn motivic_classes_have_y_degree_dim(w in involution(5)) {
        let tc = TheoryContext::k_theory(w.n()).unwrap();
        let r = compute_class(&w, &tc, Kind::Mc).unwrap();
        prop_assert_eq!(classes::y_degree(&r.value).unwrap_or(0) as usize, w.orbit_dim());
    }

    #[test]
    fn every_valid_word_gives_the_same_class(w in involution(5)) {
        let tc = TheoryContext::cohomology(w.n()).unwrap();
        let default = compute_class(&w, &tc, Kind::Csm).unwrap();
        for word in nilorbit::verify::valid_words(&w, 8) {
            prop_assert_eq!(&compute_class_with_word(&w, &word, &tc, Kind::Csm).unwrap().value, &default.value);
        }
    }
}

fn operator_input(theory: Theory, n: usize, seed: u64) -> RatFunc {
    let tc = TheoryContext::new(theory, UMode::Keep, n).unwrap();
    random_ratfunc(&mut ChaCha8Rng::seed_from_u64(seed), &tc)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn beta_h_squares_to_zero(seed in any::<u64>(), i in 1usize..4) {
        let x = operator_input(Theory::Cohomology, 4, seed);
        let once = OperatorKind::BetaH.apply(&x, i).unwrap();
        prop_assert_eq!(once.swap(i), once.clone());
        prop_assert!(OperatorKind::BetaH.apply(&once, i).unwrap().is_zero());
    }

    #[test]
    fn beta_k_is_idempotent(seed in any::<u64>(), i in 1usize..4) {
        let x = operator_input(Theory::KTheory, 4, seed);
        let once = OperatorKind::BetaK.apply(&x, i).unwrap();
        prop_assert_eq!(once.swap(i), once.clone());
        prop_assert_eq!(OperatorKind::BetaK.apply(&once, i).unwrap(), once);
    }

    #[test]
    fn braid_relations(seed in any::<u64>(), kind in 0usize..4, i in 1usize..3) {
        let op = OperatorKind::all()[kind];
        let theory = match op {
            OperatorKind::BetaH | OperatorKind::AH => Theory::Cohomology,
            _ => Theory::KTheory,
        };
        let x = operator_input(theory, 4, seed);
        let ap = |letters: &[usize]| {
            op.apply_word(&nilorbit::combin::ReducedWord(letters.to_vec()), &x).unwrap()
        };
        prop_assert_eq!(ap(&[i, i + 1, i]), ap(&[i + 1, i, i + 1]));
        prop_assert_eq!(ap(&[1, 3]), ap(&[3, 1]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn weight_functions_recover_motivic_classes(tau in (1usize..=3).prop_flat_map(permutation)) {
        let n = tau.n();
        let w = weightfn::weight_function(&tau).unwrap();
        let lambda = weightfn::borel_lambda(n).unwrap();
        let mc = RatFunc::from_poly(weightfn::mc_hom_orbit(&tau).unwrap());
        prop_assert_eq!(w.value.checked_mul(&lambda).unwrap(), mc);
    }
}
