//! Property tests for the exact kernel: ring laws, canonical-form
//! idempotence, series homomorphism, and partition involutions on randomized
//! inputs.

use hurwitz_core::exact::{
    poly_gcd, series_expand, MultiPoly, RationalFunction, Var,
};
use hurwitz_core::partitions::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// A small random polynomial in q and z.
fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u16..4), (0u16..3), (-6i64..7)), 0..5).prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (eq, ez, c) in terms {
            let m = hurwitz_core::exact::Monomial([eq, 0, ez, 0]);
            p = p.add(&MultiPoly::monomial(
                m,
                BigRational::from_integer(BigInt::from(c)),
            ));
        }
        p
    })
}

fn arb_ratfun() -> impl Strategy<Value = RationalFunction> {
    (arb_poly(), arb_poly()).prop_map(|(n, d)| {
        let den = if d.is_zero() { MultiPoly::one() } else { d };
        RationalFunction::fraction(n, den).expect("nonzero denominator")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative(a in arb_ratfun(), b in arb_ratfun(), c in arb_ratfun()) {
        let left = a.add(&b).add(&c);
        let right = a.add(&b.add(&c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn multiplication_distributes(a in arb_ratfun(), b in arb_ratfun(), c in arb_ratfun()) {
        let left = a.mul(&b.add(&c));
        let right = a.mul(&b).add(&a.mul(&c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn subtraction_inverts_addition(a in arb_ratfun(), b in arb_ratfun()) {
        prop_assert_eq!(a.add(&b).sub(&b), a);
    }

    #[test]
    fn canonical_form_is_idempotent(a in arb_ratfun()) {
        // rebuild from the stored numerator and denominator
        let again = RationalFunction::fraction(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        // and the stored pair is already reduced
        prop_assert!(poly_gcd(a.num(), a.den()).is_one() || a.is_zero());
    }

    #[test]
    fn division_roundtrip(a in arb_ratfun(), b in arb_ratfun()) {
        prop_assume!(!b.is_zero());
        let q = a.div(&b).unwrap();
        prop_assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn series_expansion_is_multiplicative(a in arb_ratfun(), b in arb_ratfun()) {
        // both denominators must be regular at z = 0
        let ok = |r: &RationalFunction| {
            series_expand(r, Var::Z, 4).is_ok()
        };
        prop_assume!(ok(&a) && ok(&b));
        let sa = series_expand(&a, Var::Z, 4).unwrap();
        let sb = series_expand(&b, Var::Z, 4).unwrap();
        let sab = series_expand(&a.mul(&b), Var::Z, 4).unwrap();
        prop_assert_eq!(sa.mul(&sb).unwrap(), sab);
    }

    #[test]
    fn string_roundtrip_is_identity(a in arb_ratfun()) {
        let s = a.to_string();
        let back = hurwitz_core::exact::parse_rational_function(&s).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn partition_conjugation_involution(parts in prop::collection::vec(1u32..7, 0..6)) {
        let lam = Partition::from_unsorted(parts);
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        let mut c: Vec<i64> = lam.contents();
        let mut cc: Vec<i64> = lam.conjugate().contents().iter().map(|x| -x).collect();
        c.sort_unstable();
        cc.sort_unstable();
        prop_assert_eq!(c, cc);
    }
}
