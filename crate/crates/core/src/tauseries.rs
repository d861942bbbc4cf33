//! Content products r^G_lambda(N), hypergeometric tau-function coefficient
//! extraction, and the double-Schur expansion that reproduces the weighted
//! Hurwitz numbers.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::characters::character;
use crate::error::{Error, Result};
use crate::exact::{series_expand, MultiPoly, RationalFunction, TruncatedSeries, Var};
use crate::partitions::{enumerate_partitions, Partition};
use crate::weights::WeightGenerator;

/// The eigenvalue r^G_lambda(N): a closed rational function of z for
/// finite-product generators, otherwise a truncated z-series whose
/// coefficients are exact rational functions of the deformation parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContentValue {
    Rational(RationalFunction),
    ZSeries(TruncatedSeries),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentProduct {
    pub lattice: i32,
    pub prefactor: ContentValue,
    pub value: ContentValue,
}

impl ContentProduct {
    /// Exact coefficient of z^d.
    pub fn z_coefficient(&self, d: usize) -> Result<RationalFunction> {
        match &self.value {
            ContentValue::Rational(r) => {
                let s = series_expand(r, Var::Z, d)?;
                Ok(s.coeff(d).clone())
            }
            ContentValue::ZSeries(s) => {
                if d > s.cutoff() {
                    return Err(Error::BoundExceeded(format!(
                        "content product truncated at z^{}, requested z^{d}",
                        s.cutoff()
                    )));
                }
                Ok(s.coeff(d).clone())
            }
        }
    }

    pub fn as_rational(&self) -> Option<&RationalFunction> {
        match &self.value {
            ContentValue::Rational(r) => Some(r),
            ContentValue::ZSeries(_) => None,
        }
    }
}

/// G(a z) as a closed rational function, for the finite-product kinds.
fn closed_form_scaled(g: &WeightGenerator, a: i64) -> Option<RationalFunction> {
    let az = RationalFunction::from_poly(MultiPoly::var(Var::Z))
        .scale_rat(&BigRational::from_integer(a.into()));
    match g {
        WeightGenerator::E => Some(RationalFunction::one().add(&az)),
        WeightGenerator::Ek(k) => RationalFunction::one().add(&az).pow(*k as i32).ok(),
        WeightGenerator::H => RationalFunction::one().sub(&az).inverse().ok(),
        WeightGenerator::FiniteC(cs) => {
            let mut acc = RationalFunction::one();
            for c in cs {
                acc = acc.mul(&RationalFunction::one().add(&az.mul(c)));
            }
            Some(acc)
        }
        _ => None,
    }
}

/// G(a z) as a truncated z-series from the coefficient sequence.
fn series_scaled(g: &WeightGenerator, a: i64, cutoff: usize) -> TruncatedSeries {
    let coeffs: Vec<RationalFunction> = (0..=cutoff as u32)
        .map(|k| {
            let ak = BigRational::from_integer(a.into()).pow(k as i32);
            g.coefficient(k).scale_rat(&ak)
        })
        .collect();
    TruncatedSeries::new(Var::Z, cutoff, coeffs).expect("coefficients free of z")
}

fn is_closed_form(g: &WeightGenerator) -> bool {
    matches!(
        g,
        WeightGenerator::E
            | WeightGenerator::Ek(_)
            | WeightGenerator::H
            | WeightGenerator::FiniteC(_)
    )
}

/// Lattice prefactor r^G_0(N).
fn prefactor_terms(n_shift: i32) -> Vec<(i64, i32)> {
    // pairs (argument multiplier, exponent)
    let mut out = Vec::new();
    if n_shift >= 1 {
        for j in 1..n_shift as i64 {
            out.push((n_shift as i64 - j, j as i32));
        }
    } else if n_shift <= -1 {
        let m = (-n_shift) as i64;
        for j in 1..=m {
            out.push((j - m, -(j as i32)));
        }
    }
    out
}

/// Content product r^G_lambda(N) = r_0(N) * prod over cells of G(z(N+j-i)).
/// `z_cutoff` bounds the series representation for non-closed generators.
pub fn content_product(
    g: &WeightGenerator,
    lambda: &Partition,
    n_shift: i32,
    z_cutoff: usize,
) -> Result<ContentProduct> {
    let contents = lambda.contents();
    if is_closed_form(g) {
        let mut pre = RationalFunction::one();
        for (mult, exp) in prefactor_terms(n_shift) {
            pre = pre.mul(
                &closed_form_scaled(g, mult)
                    .expect("closed-form kind")
                    .pow(exp)?,
            );
        }
        let mut value = pre.clone();
        for c in &contents {
            value = value.mul(&closed_form_scaled(g, n_shift as i64 + c).expect("closed"));
        }
        Ok(ContentProduct {
            lattice: n_shift,
            prefactor: ContentValue::Rational(pre),
            value: ContentValue::Rational(value),
        })
    } else {
        let mut pre = TruncatedSeries::one(Var::Z, z_cutoff);
        for (mult, exp) in prefactor_terms(n_shift) {
            pre = pre.mul(&series_scaled(g, mult, z_cutoff).pow(exp)?)?;
        }
        let mut value = pre.clone();
        for c in &contents {
            value = value.mul(&series_scaled(g, n_shift as i64 + c, z_cutoff))?;
        }
        Ok(ContentProduct {
            lattice: n_shift,
            prefactor: ContentValue::ZSeries(pre),
            value: ContentValue::ZSeries(value),
        })
    }
}

/// Pochhammer form check for finite parameter lists:
/// r^G_lambda = prod_k (c_k z)^{|lambda|} (1/(c_k z))_lambda.
pub fn hypergeometric_form_check(cs: &[RationalFunction], lambda: &Partition) -> Result<bool> {
    for c in cs {
        if c.is_zero() {
            return Err(Error::Invalid(
                "hypergeometric form needs nonzero parameters".into(),
            ));
        }
    }
    let g = WeightGenerator::FiniteC(cs.to_vec());
    let direct = content_product(&g, lambda, 0, 0)?;
    let direct = direct.as_rational().expect("finite-c is closed form");
    let z = RationalFunction::from_poly(MultiPoly::var(Var::Z));
    let mut pochhammer_route = RationalFunction::one();
    for c in cs {
        let cz = c.mul(&z);
        let u = cz.inverse()?;
        let factor = cz
            .pow(lambda.weight() as i32)?
            .mul(&lambda.pochhammer(&u));
        pochhammer_route = pochhammer_route.mul(&factor);
    }
    Ok(*direct == pochhammer_route)
}

/// Coefficient of p_mu(t) p_nu(s) z^d in the hypergeometric tau function:
/// sum over lambda of n of r_lambda's z^d coefficient times
/// chi_lambda(mu)/z_mu times chi_lambda(nu)/z_nu. Exact for every kind.
pub fn tau_coefficient(
    g: &WeightGenerator,
    d: usize,
    mu: &Partition,
    nu: &Partition,
) -> Result<RationalFunction> {
    let n = mu.weight();
    if nu.weight() != n {
        return Err(Error::WeightMismatch(format!(
            "tau coefficient needs |mu| = |nu|, got {mu} and {nu}"
        )));
    }
    let zmu = BigRational::from_integer(mu.z_order());
    let znu = BigRational::from_integer(nu.z_order());
    let mut acc = RationalFunction::zero();
    for lambda in enumerate_partitions(n) {
        let r = content_product(g, &lambda, 0, d)?;
        let coeff = r.z_coefficient(d)?;
        if coeff.is_zero() {
            continue;
        }
        let chi_mu = BigRational::from_integer(character(&lambda, mu)?);
        let chi_nu = BigRational::from_integer(character(&lambda, nu)?);
        let scalar = chi_mu / &zmu * chi_nu / &znu;
        acc = acc.add(&coeff.scale_rat(&scalar));
    }
    Ok(acc)
}

/// Table of tau coefficients over all class pairs at fixed n, d <= d_max.
pub struct TauCoefficientTable {
    pub n: u32,
    pub d_max: usize,
    pub entries: BTreeMap<(Partition, Partition, usize), RationalFunction>,
}

pub fn tau_coefficient_table(
    g: &WeightGenerator,
    n: u32,
    d_max: usize,
) -> Result<TauCoefficientTable> {
    let classes = enumerate_partitions(n);
    let mut entries = BTreeMap::new();
    for mu in &classes {
        for nu in &classes {
            for d in 0..=d_max {
                entries.insert(
                    (mu.clone(), nu.clone(), d),
                    tau_coefficient(g, d, mu, nu)?,
                );
            }
        }
    }
    Ok(TauCoefficientTable { n, d_max, entries })
}
