//! Canonically normalized rational functions in (q, p, z, u).
//!
//! Canonical form: numerator and denominator are integer-coefficient
//! polynomials with no common polynomial factor, jointly coprime integer
//! contents, and a positive leading denominator coefficient under the
//! graded-lexicographic order. Zero is 0/1. Equal values therefore have
//! identical representations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::gcd::poly_gcd;
use super::poly::{MultiPoly, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn zero() -> RationalFunction {
        RationalFunction {
            num: MultiPoly::zero(),
            den: MultiPoly::one(),
        }
    }

    pub fn one() -> RationalFunction {
        RationalFunction {
            num: MultiPoly::one(),
            den: MultiPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> RationalFunction {
        RationalFunction::from_poly(MultiPoly::from_int(n))
    }

    pub fn from_rat(r: BigRational) -> RationalFunction {
        RationalFunction::from_poly(MultiPoly::constant(r))
    }

    pub fn from_frac(n: i64, d: i64) -> RationalFunction {
        RationalFunction::from_rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn var(v: Var) -> RationalFunction {
        RationalFunction::from_poly(MultiPoly::var(v))
    }

    pub fn from_poly(p: MultiPoly) -> RationalFunction {
        RationalFunction::normalized(p, MultiPoly::one())
    }

    /// Build `num/den`, normalizing to canonical form.
    pub fn fraction(num: MultiPoly, den: MultiPoly) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFunction::normalized(num, den))
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> RationalFunction {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.divide_exact(&g).expect("gcd divides numerator"),
                den.divide_exact(&g).expect("gcd divides denominator"),
            )
        };
        // Clear to integer coefficients with jointly coprime contents.
        let ln = lcm_denoms(&num);
        let ld = lcm_denoms(&den);
        let l = ln.lcm(&ld);
        let scale = BigRational::from_integer(l);
        num = num.scale(&scale);
        den = den.scale(&scale);
        let c = num.int_content().gcd(&den.int_content());
        if !c.is_one() {
            let inv = BigRational::new(BigInt::one(), c);
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        // Sign convention: the first denominator term in the ascending
        // graded-lexicographic order (the one printed first) is positive.
        if den
            .terms()
            .next()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            num = num.neg();
            den = den.neg();
        }
        RationalFunction { num, den }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.num.involves(v) || self.den.involves(v)
    }

    /// Exact rational value, if constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_constant() {
            Some(self.num.constant_term() / self.den.constant_term())
        } else {
            None
        }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let g = poly_gcd(&self.den, &other.den);
        let da = self.den.divide_exact(&g).expect("gcd divides");
        let db = other.den.divide_exact(&g).expect("gcd divides");
        let num = self.num.mul(&db).add(&other.num.mul(&da));
        let den = self.den.mul(&db);
        RationalFunction::normalized(num, den)
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        // Cross-reduce before multiplying to keep intermediate sizes down.
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let na = self.num.divide_exact(&g1).expect("gcd divides");
        let db = other.den.divide_exact(&g1).expect("gcd divides");
        let nb = other.num.divide_exact(&g2).expect("gcd divides");
        let da = self.den.divide_exact(&g2).expect("gcd divides");
        RationalFunction::normalized(na.mul(&nb), da.mul(&db))
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&RationalFunction {
            num: other.den.clone(),
            den: other.num.clone(),
        }))
    }

    pub fn inverse(&self) -> Result<RationalFunction> {
        RationalFunction::one().div(self)
    }

    pub fn pow(&self, k: i32) -> Result<RationalFunction> {
        let base = if k < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut acc = RationalFunction::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn scale_rat(&self, c: &BigRational) -> RationalFunction {
        RationalFunction::normalized(self.num.scale(c), self.den.clone())
    }

    /// Substitute an exact rational value for a variable.
    pub fn subst_var(&self, v: Var, value: &BigRational) -> Result<RationalFunction> {
        let den = self.den.eval_var(v, value);
        if den.is_zero() {
            return Err(Error::Arith(format!(
                "substitution {v}={value} makes the denominator vanish"
            )));
        }
        Ok(RationalFunction::normalized(
            self.num.eval_var(v, value),
            den,
        ))
    }

    /// Sum convenience over an iterator.
    pub fn sum<I: IntoIterator<Item = RationalFunction>>(iter: I) -> RationalFunction {
        iter.into_iter()
            .fold(RationalFunction::zero(), |a, b| a.add(&b))
    }

    /// Product convenience over an iterator.
    pub fn product<I: IntoIterator<Item = RationalFunction>>(iter: I) -> RationalFunction {
        iter.into_iter()
            .fold(RationalFunction::one(), |a, b| a.mul(&b))
    }
}

fn lcm_denoms(p: &MultiPoly) -> BigInt {
    let mut l = BigInt::one();
    for (_, c) in p.terms() {
        l = l.lcm(c.denom());
    }
    l
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        // A denominator may be printed bare only when `/` binds it as one
        // atom: a constant, or a single power of one variable with unit
        // coefficient. Anything with a `*` needs parentheses to re-parse.
        let atomic = self.den.num_terms() == 1 && {
            let (m, c) = self.den.leading().expect("nonzero denominator");
            let nvars = m.0.iter().filter(|&&e| e > 0).count();
            m.is_unit() || (nvars == 1 && c.is_one())
        };
        if atomic {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn qv() -> RationalFunction {
        RationalFunction::var(Var::Q)
    }

    fn one_minus_q() -> RationalFunction {
        RationalFunction::one().sub(&qv())
    }

    #[test]
    fn sum_over_common_denominator() {
        // 1/(1-q) + q/(1-q) = (1+q)/(1-q)
        let a = RationalFunction::one().div(&one_minus_q()).unwrap();
        let b = qv().div(&one_minus_q()).unwrap();
        let s = a.add(&b);
        let expect = RationalFunction::one()
            .add(&qv())
            .div(&one_minus_q())
            .unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn additive_inverse_cancels() {
        let x = qv()
            .add(&RationalFunction::from_frac(3, 7))
            .div(&one_minus_q())
            .unwrap();
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn cancellation_to_polynomial() {
        // (1-q^2)/(1-q) = 1+q
        let num = RationalFunction::one().sub(&qv().mul(&qv()));
        let r = num.div(&one_minus_q()).unwrap();
        assert_eq!(r, RationalFunction::one().add(&qv()));
        assert!(r.den().is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            qv().div(&RationalFunction::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn canonical_string_forms() {
        // 1/(2(1-q)) prints with expanded integer-coefficient denominator
        let h = RationalFunction::from_frac(1, 2)
            .div(&one_minus_q())
            .unwrap();
        assert_eq!(h.to_string(), "1/(2-2*q)");
        let val = RationalFunction::one()
            .add(&qv().scale_rat(&BigRational::from_integer(2.into())))
            .div(
                &RationalFunction::from_int(3)
                    .mul(&one_minus_q())
                    .mul(&RationalFunction::one().sub(&qv().pow(2).unwrap())),
            )
            .unwrap();
        assert_eq!(val.to_string(), "(1+2*q)/(3-3*q-3*q^2+3*q^3)");
        assert_eq!(RationalFunction::from_frac(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn denominator_sign_is_normalized() {
        // 1/(q-1) and -1/(1-q) are the same canonical value
        let r = RationalFunction::one()
            .div(&qv().sub(&RationalFunction::one()))
            .unwrap();
        assert_eq!(r.to_string(), "-1/(1-q)");
        let minus = RationalFunction::one().div(&one_minus_q()).unwrap().neg();
        assert_eq!(r, minus);
    }

    #[test]
    fn substitution_detects_poles() {
        let r = RationalFunction::one().div(&one_minus_q()).unwrap();
        assert!(r.subst_var(Var::Q, &BigRational::one()).is_err());
        let at0 = r
            .subst_var(Var::Q, &BigRational::zero())
            .unwrap();
        assert!(at0.is_one());
    }
}
