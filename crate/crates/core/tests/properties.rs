use num_bigint::BigInt;
use proptest::prelude::*;

use flagged_schur::demazure::{
    apply_word, ascents, demazure_operator, flag_to_permutation, is_312_avoiding, key_polynomial,
    permutation_to_flag, reduced_word, tflag_ascent_check, PermutationWord,
};
use flagged_schur::partitions::{beta_sequence, residue_data, t_core, t_quotient};
use flagged_schur::polyring::{determinant, extract_integer_form, phi_t_substitute, psi_t, Cyclotomic};
use flagged_schur::schur::{jacobi_trudi, phi_by_entries, phi_of_flagged_schur, verify_main_theorem, JacobiTrudiSpec};
use flagged_schur::tableaux::schur_by_tableaux;
use flagged_schur::verify::{alternate_reduced_word, divisible_flags, qualified_flags, valid_flags};
use flagged_schur::{Flag, IntPolynomial, Partition, SkewShape, Twist};

fn poly(vars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, vars), -4i64..=4), 0..=max_terms).prop_map(
        move |terms| {
            terms.into_iter().fold(IntPolynomial::int_zero(vars), |acc, (exps, c)| {
                &acc + &IntPolynomial::int_monomial(&exps, c)
            })
        },
    )
}

fn partition(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, rows).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn flag(len: usize, max: usize) -> impl Strategy<Value = Flag> {
    prop::collection::vec(0..=max, len).prop_map(|mut v| {
        v.sort_unstable();
        Flag::new(v).unwrap()
    })
}

fn skew(rows: usize, cols: usize) -> impl Strategy<Value = SkewShape> {
    (partition(rows, cols), prop::collection::vec(0..=cols, rows)).prop_map(|(outer, cuts)| {
        let mut inner: Vec<usize> = outer.parts().iter().zip(&cuts).map(|(&o, &c)| o.min(c)).collect();
        inner.sort_unstable_by(|a, b| b.cmp(a));
        // Sorting keeps containment: the k-th largest of min(o_i, c_i) is at most o_k.
        SkewShape::new(outer, Partition::new(inner).unwrap())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = PermutationWord> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| PermutationWord::new(v).unwrap())
}

/// Cofactor expansion along the first row, no memoization.
fn naive_det(m: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = m.len();
    let vars = m[0][0].vars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = IntPolynomial::int_zero(vars);
    for j in 0..n {
        let minor: Vec<Vec<IntPolynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][j] * &naive_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(3, 3, 5), q in poly(3, 3, 5), r in poly(3, 3, 5)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &IntPolynomial::int_one(3), p.clone());
    }

    #[test]
    fn cyclotomic_ring_axioms(p in poly(2, 3, 4), q in poly(2, 3, 4), t in 1usize..=6) {
        let ring = Cyclotomic::new(t).unwrap();
        let (cp, cq) = (p.to_cyclotomic(&ring), q.to_cyclotomic(&ring));
        prop_assert_eq!(cp.try_mul(&cq).unwrap(), (&p * &q).to_cyclotomic(&ring));
        prop_assert_eq!(cp.try_add(&cq).unwrap(), (&p + &q).to_cyclotomic(&ring));
    }

    #[test]
    fn phi_is_a_ring_homomorphism(p in poly(4, 3, 5), q in poly(4, 3, 5), t in 1usize..=4) {
        let twist = Twist::new(t, 4usize.div_ceil(t)).unwrap();
        let (fp, fq) = (phi_t_substitute(&p, twist).unwrap(), phi_t_substitute(&q, twist).unwrap());
        prop_assert_eq!(phi_t_substitute(&(&p * &q), twist).unwrap(), fp.try_mul(&fq).unwrap());
        prop_assert_eq!(phi_t_substitute(&(&p + &q), twist).unwrap(), fp.try_add(&fq).unwrap());
    }

    #[test]
    fn psi_inverts_extraction(p in poly(3, 3, 5), t in 1usize..=5) {
        let ring = Cyclotomic::new(t).unwrap();
        prop_assert_eq!(extract_integer_form(&psi_t(&p, t).to_cyclotomic(&ring)).unwrap(), p);
    }

    #[test]
    fn determinant_matches_cofactor_expansion(
        n in 1usize..=5,
        entries in prop::collection::vec(poly(2, 2, 3), 25),
    ) {
        let m: Vec<Vec<IntPolynomial>> = (0..n).map(|i| entries[i * 5..i * 5 + n].to_vec()).collect();
        prop_assert_eq!(determinant(&m).unwrap(), naive_det(&m));
    }

    #[test]
    fn core_and_quotient_partition_the_size(lam in partition(6, 6), t in 1usize..=4) {
        let twist = Twist::new(t, 6usize.div_ceil(t)).unwrap();
        let core = t_core(&lam, twist).unwrap();
        let quotient = t_quotient(&lam, twist).unwrap();
        prop_assert_eq!(quotient.len(), t);
        let weight: usize = quotient.iter().map(Partition::size).sum();
        prop_assert_eq!(lam.size(), core.size() + t * weight);
        prop_assert_eq!(t_core(&core, twist).unwrap(), core.clone());
        prop_assert!(t_quotient(&core, twist).unwrap().iter().all(Partition::is_empty));
    }

    #[test]
    fn beta_round_trip(lam in partition(6, 8), t in 1usize..=3) {
        let twist = Twist::new(t, 6usize.div_ceil(t)).unwrap();
        let beta = beta_sequence(&lam, twist).unwrap();
        let tn = twist.tn();
        let back: Vec<usize> = beta.iter().enumerate().map(|(i, &b)| b + i + 1 - tn).collect();
        prop_assert_eq!(Partition::new(back).unwrap(), lam.clone());
        let data = residue_data(&lam, twist).unwrap();
        prop_assert_eq!(data.counts.iter().sum::<usize>(), tn);
        for r in 0..t {
            let block = data.block_values(r);
            prop_assert!(block.iter().all(|b| b % t == r));
            prop_assert!(block.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn determinant_matches_tableaux(shape in skew(3, 3), a in flag(3, 4), b in flag(3, 5)) {
        let spec = JacobiTrudiSpec::new(shape.clone(), a.clone(), b.clone(), 3).unwrap();
        prop_assert_eq!(jacobi_trudi(&spec).unwrap(), schur_by_tableaux(&shape, &a, &b).unwrap());
    }

    #[test]
    fn phi_routes_agree(shape in skew(4, 3), ai in 0usize..15, bi in 0usize..15) {
        let twist = Twist::new(2, 2).unwrap();
        let flags = divisible_flags(4, twist);
        let (a, b) = (&flags[ai], &flags[bi]);
        prop_assert_eq!(
            phi_of_flagged_schur(&shape, a, b, twist).unwrap(),
            phi_by_entries(&shape, a, b, twist).unwrap()
        );
    }

    #[test]
    fn factorization_beyond_the_acceptance_boxes(
        shape in skew(6, 3),
        a in flag(6, 2),
        b in flag(6, 2),
    ) {
        let twist = Twist::new(3, 2).unwrap();
        let scale = |f: &Flag| Flag::new(f.entries().iter().map(|v| v * 3).collect()).unwrap();
        let report = verify_main_theorem(&shape, &scale(&a), &scale(&b), twist).unwrap();
        prop_assert!(report.equal, "{:?}", report);
    }

    #[test]
    fn demazure_relations(f in poly(4, 3, 4), i in 1usize..=3) {
        let once = demazure_operator(&f, i).unwrap();
        prop_assert_eq!(demazure_operator(&once, i).unwrap(), once);
        if i < 3 {
            prop_assert_eq!(apply_word(&f, &[i, i + 1, i]).unwrap(), apply_word(&f, &[i + 1, i, i + 1]).unwrap());
        }
        if i == 1 {
            prop_assert_eq!(apply_word(&f, &[1, 3]).unwrap(), apply_word(&f, &[3, 1]).unwrap());
        }
    }

    #[test]
    fn key_polynomials_ignore_the_reduced_word(lam in partition(4, 3), w in permutation(4)) {
        let exps: Vec<u32> = lam.padded(4).into_iter().map(|p| p as u32).collect();
        let monomial = IntPolynomial::int_monomial(&exps, 1);
        let first = apply_word(&monomial, &reduced_word(&w)).unwrap();
        prop_assert_eq!(&first, &apply_word(&monomial, &alternate_reduced_word(&w)).unwrap());
        prop_assert_eq!(first, key_polynomial(&lam, &w).unwrap());
    }

    #[test]
    fn key_polynomials_have_positive_coefficients(lam in partition(3, 3), w in permutation(3)) {
        let key = key_polynomial(&lam, &w).unwrap();
        prop_assert!(key.is_homogeneous());
        prop_assert!(key.terms().iter().all(|(_, c)| *c > BigInt::from(0)));
    }
}

#[test]
fn bijection_round_trips() {
    for n in 1..=6 {
        for a in valid_flags(n) {
            let w = flag_to_permutation(&a).unwrap();
            assert!(is_312_avoiding(&w), "{a:?}");
            assert_eq!(permutation_to_flag(&w).unwrap(), a);
            let entries = a.entries();
            for k in 2..=n {
                let is_ascent = ascents(&w).contains(&k);
                assert_eq!(is_ascent, entries[k - 2] < entries[k - 1]);
                if is_ascent {
                    assert_eq!(w.one_line()[k - 1], entries[k - 1]);
                }
            }
        }
        for w in PermutationWord::all(n).into_iter().filter(is_312_avoiding) {
            assert_eq!(flag_to_permutation(&permutation_to_flag(&w).unwrap()).unwrap(), w);
        }
    }
}

#[test]
fn divisible_flags_match_ascent_condition() {
    for (t, n) in [(1, 1), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)] {
        let twist = Twist::new(t, n).unwrap();
        let mut image: Vec<PermutationWord> = qualified_flags(twist)
            .iter()
            .map(|a| flag_to_permutation(a).unwrap())
            .collect();
        image.sort();
        let expected: Vec<PermutationWord> = PermutationWord::all(t * n)
            .into_iter()
            .filter(|w| tflag_ascent_check(w, t))
            .collect();
        assert_eq!(image, expected, "t = {t}, n = {n}");
    }
}

#[test]
fn three_variable_key_polynomials() {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    let w = |v: &[usize]| PermutationWord::new(v.to_vec()).unwrap();
    let key = key_polynomial(&p(&[2, 1]), &w(&[2, 3, 1])).unwrap();
    let by_flag = {
        let spec = JacobiTrudiSpec::new(
            SkewShape::straight(p(&[2, 1])),
            Flag::constant(0, 3),
            Flag::new(vec![2, 3, 3]).unwrap(),
            3,
        )
        .unwrap();
        jacobi_trudi(&spec).unwrap()
    };
    assert_eq!(key, by_flag);
    assert_eq!(key.to_string(), "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3");
}
