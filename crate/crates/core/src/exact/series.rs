//! Truncated power series with exact rational-function coefficients, plus the
//! epsilon-series substitutions used for classical-limit checks.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{MultiPoly, Var};
use super::ratfun::RationalFunction;
use crate::error::{Error, Result};

/// Power series in one of the universe variables, truncated at `cutoff`.
/// Coefficients are rational functions in the remaining variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: Var,
    cutoff: usize,
    coeffs: Vec<RationalFunction>,
}

impl TruncatedSeries {
    pub fn new(var: Var, cutoff: usize, mut coeffs: Vec<RationalFunction>) -> Result<TruncatedSeries> {
        if coeffs.len() > cutoff + 1 {
            coeffs.truncate(cutoff + 1);
        }
        coeffs.resize(cutoff + 1, RationalFunction::zero());
        for c in &coeffs {
            if c.involves(var) {
                return Err(Error::Arith(format!(
                    "series coefficient {c} involves the series variable {var}"
                )));
            }
        }
        Ok(TruncatedSeries { var, cutoff, coeffs })
    }

    pub fn zero(var: Var, cutoff: usize) -> TruncatedSeries {
        TruncatedSeries {
            var,
            cutoff,
            coeffs: vec![RationalFunction::zero(); cutoff + 1],
        }
    }

    pub fn one(var: Var, cutoff: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(var, cutoff);
        s.coeffs[0] = RationalFunction::one();
        s
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn coeff(&self, k: usize) -> &RationalFunction {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn joined(&self, other: &TruncatedSeries) -> Result<usize> {
        if self.var != other.var {
            return Err(Error::Arith(format!(
                "series variable mismatch: {} vs {}",
                self.var, other.var
            )));
        }
        Ok(self.cutoff.min(other.cutoff))
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let cut = self.joined(other)?;
        let coeffs = (0..=cut)
            .map(|k| self.coeffs[k].add(&other.coeffs[k]))
            .collect();
        Ok(TruncatedSeries {
            var: self.var,
            cutoff: cut,
            coeffs,
        })
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            var: self.var,
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        let cut = self.joined(other)?;
        let mut coeffs = vec![RationalFunction::zero(); cut + 1];
        for i in 0..=cut {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(cut - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Ok(TruncatedSeries {
            var: self.var,
            cutoff: cut,
            coeffs,
        })
    }

    pub fn scale(&self, c: &RationalFunction) -> TruncatedSeries {
        TruncatedSeries {
            var: self.var,
            cutoff: self.cutoff,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::Arith(
                "series with zero constant term has no inverse".into(),
            ));
        }
        let c0inv = self.coeffs[0].inverse()?;
        let mut out = vec![RationalFunction::zero(); self.cutoff + 1];
        out[0] = c0inv.clone();
        for k in 1..=self.cutoff {
            let mut acc = RationalFunction::zero();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = acc.neg().mul(&c0inv);
        }
        Ok(TruncatedSeries {
            var: self.var,
            cutoff: self.cutoff,
            coeffs: out,
        })
    }

    pub fn pow(&self, k: i32) -> Result<TruncatedSeries> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = TruncatedSeries::one(self.var, self.cutoff);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Reassemble into a rational function (valid when coefficients are exact).
    pub fn to_rational(&self) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let vk = RationalFunction::from_poly(MultiPoly::var_pow(self.var, k as u16));
            acc = acc.add(&c.mul(&vk));
        }
        acc
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            wrote = true;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                let var = self.var;
                let paren = !c.is_constant() || c.to_string().contains(['+', '-', '/']);
                if c.is_one() {
                    write!(f, "{var}")?;
                } else if paren {
                    write!(f, "({c})*{var}")?;
                } else {
                    write!(f, "{c}*{var}")?;
                }
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.cutoff + 1)
    }
}

/// Expand a rational function as a truncated series in `var`.
/// Errors if the denominator vanishes at `var = 0`.
pub fn series_expand(r: &RationalFunction, var: Var, cutoff: usize) -> Result<TruncatedSeries> {
    let num_parts = split_in_var(r.num(), var, cutoff);
    let den_parts = split_in_var(r.den(), var, cutoff);
    if den_parts[0].is_zero() {
        return Err(Error::PoleAtOrigin(var.name()));
    }
    let d0inv = den_parts[0].inverse()?;
    let mut out = vec![RationalFunction::zero(); cutoff + 1];
    for k in 0..=cutoff {
        let mut acc = num_parts[k].clone();
        for j in 1..=k {
            acc = acc.sub(&den_parts[j].mul(&out[k - j]));
        }
        out[k] = acc.mul(&d0inv);
    }
    TruncatedSeries::new(var, cutoff, out)
}

/// Coefficients of a polynomial with respect to `var`, as rational functions
/// of the other variables, padded to `cutoff`.
fn split_in_var(p: &MultiPoly, var: Var, cutoff: usize) -> Vec<RationalFunction> {
    let parts = p.coeffs_in_var(var);
    let mut out = Vec::with_capacity(cutoff + 1);
    for k in 0..=cutoff {
        if k < parts.len() {
            out.push(RationalFunction::from_poly(parts[k].clone()));
        } else {
            out.push(RationalFunction::zero());
        }
    }
    out
}

/// Dense epsilon-series with plain rational coefficients, used only for
/// classical-limit checks. Index = power of epsilon.
pub type EpsSeries = Vec<BigRational>;

/// Coefficients of exp(rate * eps) through `order`.
pub fn exp_eps(rate: &BigRational, order: usize) -> EpsSeries {
    let mut out = Vec::with_capacity(order + 1);
    let mut term = BigRational::one();
    out.push(term.clone());
    for k in 1..=order {
        term = term * rate / BigRational::from_integer(BigInt::from(k));
        out.push(term.clone());
    }
    out
}

fn eps_mul(a: &EpsSeries, b: &EpsSeries, order: usize) -> EpsSeries {
    let mut out = vec![BigRational::zero(); order + 1];
    for i in 0..=order.min(a.len().saturating_sub(1)) {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..=(order - i).min(b.len().saturating_sub(1)) {
            let prod = &a[i] * &b[j];
            out[i + j] = &out[i + j] + prod;
        }
    }
    out
}

fn eps_pow(base: &EpsSeries, e: usize, order: usize) -> EpsSeries {
    let mut acc = vec![BigRational::zero(); order + 1];
    acc[0] = BigRational::one();
    for _ in 0..e {
        acc = eps_mul(&acc, base, order);
    }
    acc
}

/// Evaluate a polynomial after substituting each variable by an eps-series.
/// All variables present in `p` must have a substitution.
fn poly_eps(p: &MultiPoly, subs: &[(Var, EpsSeries)], order: usize) -> Result<EpsSeries> {
    let mut out = vec![BigRational::zero(); order + 1];
    for (m, c) in p.terms() {
        let mut term = vec![BigRational::zero(); order + 1];
        term[0] = c.clone();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let v = Var::ALL[i];
            let series = subs
                .iter()
                .find(|(sv, _)| *sv == v)
                .map(|(_, s)| s)
                .ok_or_else(|| {
                    Error::Arith(format!("no epsilon substitution given for {v}"))
                })?;
            term = eps_mul(&term, &eps_pow(series, e as usize, order), order);
        }
        for k in 0..=order {
            out[k] = &out[k] + &term[k];
        }
    }
    Ok(out)
}

/// Compute the eps-series of `eps^shift * f(substitutions)` through degree
/// `order`, allowing pole/zero cancellation between numerator and denominator.
/// Errors if the result has a pole (negative valuation).
pub fn eps_limit_series(
    f: &RationalFunction,
    subs: &[(Var, EpsSeries)],
    shift: usize,
    order: usize,
) -> Result<EpsSeries> {
    if f.is_zero() {
        return Ok(vec![BigRational::zero(); order + 1]);
    }
    // Working order must cover the denominator valuation plus requested order.
    let work = order + shift + 8;
    let subs_w: Vec<(Var, EpsSeries)> = subs
        .iter()
        .map(|(v, s)| {
            let mut s = s.clone();
            s.resize(work + 1, BigRational::zero());
            (*v, s)
        })
        .collect();
    let num = poly_eps(f.num(), &subs_w, work)?;
    let den = poly_eps(f.den(), &subs_w, work)?;
    let vn = num.iter().position(|c| !c.is_zero());
    let vd = den.iter().position(|c| !c.is_zero()).ok_or_else(|| {
        Error::Arith("denominator vanishes identically under substitution".into())
    })?;
    let vn = match vn {
        Some(v) => v,
        None => return Ok(vec![BigRational::zero(); order + 1]),
    };
    let val = vn as i64 - vd as i64 + shift as i64;
    if val < 0 {
        return Err(Error::Arith(format!(
            "epsilon series diverges: valuation {val}"
        )));
    }
    // Divide unit parts: num/eps^vn by den/eps^vd.
    let n_unit: EpsSeries = num[vn..].to_vec();
    let d_unit: EpsSeries = den[vd..].to_vec();
    let len = order + 1;
    let mut q = vec![BigRational::zero(); len];
    for k in 0..len {
        let mut acc = n_unit.get(k).cloned().unwrap_or_else(BigRational::zero);
        for j in 1..=k {
            if j < d_unit.len() {
                acc -= &d_unit[j] * &q[k - j];
            }
        }
        q[k] = acc / &d_unit[0];
    }
    // Shift by the overall valuation.
    let mut out = vec![BigRational::zero(); order + 1];
    for (k, qk) in q.iter().enumerate() {
        let target = k as i64 + val;
        if target >= 0 && (target as usize) <= order {
            out[target as usize] = qk.clone();
        }
    }
    Ok(out)
}
