//! Sparse multivariate polynomials over the rationals in the fixed
//! indeterminate set (q, p, z, u), ordered graded-lexicographically.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Number of indeterminates in the fixed universe.
pub const NUM_VARS: usize = 4;

/// The indeterminates, in increasing monomial-order significance: q < p < z < u.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    P = 1,
    Z = 2,
    U = 3,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [Var::Q, Var::P, Var::Z, Var::U];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::P => "p",
            Var::Z => "z",
            Var::U => "u",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "q" => Some(Var::Q),
            "p" => Some(Var::P),
            "z" => Some(Var::Z),
            "u" => Some(Var::U),
            _ => None,
        }
    }

    fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector for one term. Ordering is graded lexicographic: total
/// degree first, ties broken by the exponent of u, then z, then p, then q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u16; NUM_VARS]);

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial([0; NUM_VARS])
    }

    pub fn var(v: Var) -> Monomial {
        let mut e = [0; NUM_VARS];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NUM_VARS];
        for (i, x) in e.iter_mut().enumerate() {
            *x = self.0[i] + other.0[i];
        }
        Monomial(e)
    }

    /// Componentwise quotient, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NUM_VARS];
        for (i, x) in e.iter_mut().enumerate() {
            *x = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }

    pub fn pow(&self, k: u16) -> Monomial {
        let mut e = [0; NUM_VARS];
        for (i, x) in e.iter_mut().enumerate() {
            *x = self.0[i] * k;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let d = self.total_degree().cmp(&other.total_degree());
        if d != std::cmp::Ordering::Equal {
            return d;
        }
        // Higher-significance variables last in the array.
        for i in (0..NUM_VARS).rev() {
            let c = self.0[i].cmp(&other.0[i]);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with exact rational coefficients.
/// No zero coefficients are stored; the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        MultiPoly { terms }
    }

    pub fn from_int(n: i64) -> MultiPoly {
        MultiPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::monomial(Monomial::var(v), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn var_pow(v: Var, e: u16) -> MultiPoly {
        MultiPoly::monomial(Monomial::var(v).pow(e), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_unit())
    }

    /// The constant term (zero if absent).
    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Monomial::unit())
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Leading term under the graded-lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self, v: Var) -> u16 {
        self.terms
            .keys()
            .map(|m| m.0[v.index()])
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.0[v.index()] > 0)
    }

    /// Variables actually present, highest index first.
    pub fn vars_present(&self) -> Vec<Var> {
        let mut out = Vec::new();
        for i in (0..NUM_VARS).rev() {
            let v = Var::from_index(i);
            if self.involves(v) {
                out.push(v);
            }
        }
        out
    }

    fn insert_add(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (*m, k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute an exact rational value for one variable.
    pub fn eval_var(&self, v: Var, value: &BigRational) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0[v.index()];
            let mut m2 = *m;
            m2.0[v.index()] = 0;
            let mut c2 = c.clone();
            for _ in 0..e {
                c2 *= value;
            }
            out.insert_add(m2, c2);
        }
        out
    }

    /// Substitute a polynomial for one variable.
    pub fn subst_var(&self, v: Var, value: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.0[v.index()];
            let mut m2 = *m;
            m2.0[v.index()] = 0;
            let term = MultiPoly::monomial(m2, c.clone()).mul(&value.pow(e as u32));
            out = out.add(&term);
        }
        out
    }

    /// Coefficients with respect to one variable, index = exponent of `v`.
    /// The result has length `degree(v) + 1` (a single zero entry for 0).
    pub fn coeffs_in_var(&self, v: Var) -> Vec<MultiPoly> {
        let d = self.degree(v) as usize;
        let mut out = vec![MultiPoly::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[v.index()] as usize;
            let mut m2 = *m;
            m2.0[v.index()] = 0;
            out[e].insert_add(m2, c.clone());
        }
        out
    }

    /// Assemble from coefficients in one variable.
    pub fn from_coeffs_in_var(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let m = Monomial::var(v).pow(e as u16);
            out = out.add(&c.mul_monomial(&m));
        }
        out
    }

    /// Scale so all coefficients are integers; returns the scaled polynomial.
    pub fn cleared_denominators(&self) -> MultiPoly {
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        self.scale(&BigRational::from_integer(l))
    }

    /// GCD of the integer numerators; requires integer coefficients.
    /// Returns zero for the zero polynomial.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            debug_assert!(c.denom().is_one());
            g = g.gcd(c.numer());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact multivariate division; `None` if it does not divide.
    pub fn divide_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        let (dm, dc) = divisor.leading().expect("nonzero divisor");
        let dm = *dm;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let qt = MultiPoly::monomial(qm, qc);
            rem = rem.sub(&qt.mul(divisor));
            quot = quot.add(&qt);
        }
        Some(quot)
    }

    /// Largest monomial dividing every term (unit monomial for zero).
    pub fn common_monomial(&self) -> Monomial {
        let mut m = match self.terms.keys().next() {
            Some(first) => *first,
            None => return Monomial::unit(),
        };
        for k in self.terms.keys() {
            for i in 0..NUM_VARS {
                m.0[i] = m.0[i].min(k.0[i]);
            }
        }
        m
    }

    /// Apply a rational-coefficient map (used for sign twists).
    pub fn map_coeffs<F: Fn(&Monomial, &BigRational) -> BigRational>(&self, f: F) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            out.insert_add(*m, f(m, c));
        }
        out
    }

    /// Evaluate fully at rational points for all present variables.
    pub fn eval_all(&self, values: &[(Var, BigRational)]) -> Result<BigRational> {
        let mut p = self.clone();
        for (v, val) in values {
            p = p.eval_var(*v, val);
        }
        match p.is_constant() {
            true => Ok(p.constant_term()),
            false => Err(Error::Arith(format!(
                "polynomial still involves {:?} after evaluation",
                p.vars_present()
            ))),
        }
    }
}

fn fmt_coeff_monomial(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    m: &Monomial,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, "-")?;
    } else {
        write!(f, "+")?;
    }
    let mut wrote_coeff = false;
    if !abs.is_one() || m.is_unit() {
        if abs.denom().is_one() {
            write!(f, "{}", abs.numer())?;
        } else {
            write!(f, "{}/{}", abs.numer(), abs.denom())?;
        }
        wrote_coeff = true;
    }
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if wrote_coeff {
            write!(f, "*")?;
        }
        wrote_coeff = true;
        let v = Var::from_index(i);
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            fmt_coeff_monomial(f, c, m, i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MultiPoly {
        MultiPoly::var(Var::Q)
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        // degree dominates
        assert!(Monomial([2, 0, 0, 0]) > Monomial([1, 0, 0, 0]));
        // same degree: p^2 > p*q > q^2 since q < p
        assert!(Monomial([0, 2, 0, 0]) > Monomial([1, 1, 0, 0]));
        assert!(Monomial([1, 1, 0, 0]) > Monomial([2, 0, 0, 0]));
        // u dominates z
        assert!(Monomial([0, 0, 0, 1]) > Monomial([0, 0, 1, 0]));
    }

    #[test]
    fn no_zero_terms_after_cancellation() {
        let a = q().add(&MultiPoly::one());
        let b = a.sub(&a);
        assert!(b.is_zero());
        assert_eq!(b.num_terms(), 0);
    }

    #[test]
    fn display_matches_canonical_form() {
        let p = MultiPoly::from_int(1).add(&q().scale(&BigRational::from_integer(2.into())));
        assert_eq!(p.to_string(), "1+2*q");
        let d = MultiPoly::from_int(3)
            .sub(&q().scale(&BigRational::from_integer(3.into())))
            .sub(&q().pow(2).scale(&BigRational::from_integer(3.into())))
            .add(&q().pow(3).scale(&BigRational::from_integer(3.into())));
        assert_eq!(d.to_string(), "3-3*q-3*q^2+3*q^3");
    }

    #[test]
    fn exact_division_roundtrip() {
        // (1-q^2) / (1-q) = 1+q
        let num = MultiPoly::one().sub(&q().pow(2));
        let den = MultiPoly::one().sub(&q());
        let quot = num.divide_exact(&den).unwrap();
        let expect = MultiPoly::one().add(&q());
        assert_eq!(quot, expect);
        // inexact division is detected
        assert!(q().add(&MultiPoly::one()).divide_exact(&q().pow(2)).is_none());
    }

    #[test]
    fn eval_var_collapses() {
        let p = q().pow(3).add(&MultiPoly::var(Var::Z));
        let e = p.eval_var(Var::Q, &BigRational::from_integer(2.into()));
        assert_eq!(e.coeff(&Monomial::unit()), BigRational::from_integer(8.into()));
        assert!(e.involves(Var::Z));
    }
}
