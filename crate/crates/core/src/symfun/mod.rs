//! Symmetric-function evaluations and bounded-degree basis conversions.
//!
//! Only what the weighted-Hurwitz machinery needs: evaluations of e, h, m, f
//! at explicit parameter lists (finite, geometric, or the exponential
//! specialization), conversions among the six classical bases, and truncated
//! Cauchy-Littlewood verification.

mod cauchy;
mod transition;

pub use cauchy::{cauchy_littlewood_check, ClVariant};
pub use transition::{
    apply_omega, e_lambda_to_p, e_to_p, f_to_p, h_lambda_to_p, h_to_p, join, m_to_p,
    monomial_coeff_in_powersum, omega_sign, p_product, s_to_p, PCoords,
};

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Rat, RationalFunction, Var};
use crate::partitions::{enumerate_partitions, factorial, Partition};

/// Parameter list c = (c_1, c_2, ...) at which symmetric functions are
/// evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParameterList {
    /// Explicit finite list; trailing zeros are dropped on construction.
    Finite(Vec<RationalFunction>),
    /// c_i = var^(i - 1 + offset); offset 0 gives 1, q, q^2, ... and
    /// offset 1 gives q, q^2, ...
    Geometric { var: Var, offset: u8 },
    /// The specialization p_1 = 1, p_k = 0 for k >= 2, i.e. the weak limit
    /// of (1 + z/m)^(km) parameter lists that realizes exp(z).
    ExponentialLimit,
}

impl ParameterList {
    pub fn finite(list: Vec<RationalFunction>) -> ParameterList {
        let mut list = list;
        while list.last().map(|c| c.is_zero()).unwrap_or(false) {
            list.pop();
        }
        ParameterList::Finite(list)
    }

    pub fn geometric_q(offset: u8) -> ParameterList {
        ParameterList::Geometric {
            var: Var::Q,
            offset,
        }
    }

    /// Power sum p_j evaluated at this list.
    pub fn power_sum(&self, j: u32) -> RationalFunction {
        assert!(j >= 1);
        match self {
            ParameterList::Finite(cs) => {
                let mut acc = RationalFunction::zero();
                for c in cs {
                    acc = acc.add(&c.pow(j as i32).expect("nonnegative power"));
                }
                acc
            }
            ParameterList::Geometric { var, offset } => {
                // sum_{i>=1} var^{j(i-1+offset)} = var^{j*offset}/(1 - var^j)
                let vj = RationalFunction::from_poly(MultiPoly::var_pow(*var, j as u16));
                let num = vj.pow(*offset as i32).expect("small power");
                num.div(&RationalFunction::one().sub(&vj))
                    .expect("1 - var^j is nonzero")
            }
            ParameterList::ExponentialLimit => {
                if j == 1 {
                    RationalFunction::one()
                } else {
                    RationalFunction::zero()
                }
            }
        }
    }

    /// Evaluate a power-sum expansion at this list.
    pub fn eval_p_coords(&self, coords: &PCoords) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for (mu, c) in coords {
            let mut term = RationalFunction::from_rat(c.clone());
            for &part in mu.parts() {
                if term.is_zero() {
                    break;
                }
                term = term.mul(&self.power_sum(part));
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// Elementary symmetric function e_k at the list.
pub fn eval_e_single(k: u32, c: &ParameterList) -> RationalFunction {
    match c {
        ParameterList::Finite(cs) => {
            // DP on prod (1 + c_i t), keeping degrees <= k
            let k = k as usize;
            let mut coeffs = vec![RationalFunction::zero(); k + 1];
            coeffs[0] = RationalFunction::one();
            for ci in cs {
                for d in (1..=k).rev() {
                    let add = coeffs[d - 1].mul(ci);
                    coeffs[d] = coeffs[d].add(&add);
                }
            }
            coeffs[k].clone()
        }
        ParameterList::Geometric { var, offset } => {
            // e_k = var^(k(k-1)/2 + k*offset) / prod_{i=1..k} (1 - var^i)
            let exponent = k * (k - 1) / 2 + k * (*offset as u32);
            let num = RationalFunction::from_poly(MultiPoly::var_pow(*var, exponent as u16));
            num.div(&q_factorial_poly(*var, k)).expect("nonzero")
        }
        ParameterList::ExponentialLimit => {
            RationalFunction::from_rat(BigRational::new(1.into(), factorial(k)))
        }
    }
}

/// Complete homogeneous symmetric function h_k at the list.
pub fn eval_h_single(k: u32, c: &ParameterList) -> RationalFunction {
    match c {
        ParameterList::Finite(cs) => {
            // DP on prod 1/(1 - c_i t) truncated at degree k
            let k = k as usize;
            let mut coeffs = vec![RationalFunction::zero(); k + 1];
            coeffs[0] = RationalFunction::one();
            for ci in cs {
                // multiply by geometric series in c_i t
                for d in 1..=k {
                    let add = coeffs[d - 1].mul(ci);
                    coeffs[d] = coeffs[d].add(&add);
                }
            }
            coeffs[k].clone()
        }
        ParameterList::Geometric { var, offset } => {
            let exponent = k * (*offset as u32);
            let num = RationalFunction::from_poly(MultiPoly::var_pow(*var, exponent as u16));
            num.div(&q_factorial_poly(*var, k)).expect("nonzero")
        }
        ParameterList::ExponentialLimit => {
            RationalFunction::from_rat(BigRational::new(1.into(), factorial(k)))
        }
    }
}

/// prod_{i=1..k} (1 - var^i) as a rational function.
fn q_factorial_poly(var: Var, k: u32) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for i in 1..=k {
        let vi = RationalFunction::from_poly(MultiPoly::var_pow(var, i as u16));
        acc = acc.mul(&RationalFunction::one().sub(&vi));
    }
    acc
}

/// e_lambda = prod e_{lambda_i} at the list.
pub fn eval_e(lambda: &Partition, c: &ParameterList) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for &part in lambda.parts() {
        acc = acc.mul(&eval_e_single(part, c));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// h_lambda = prod h_{lambda_i} at the list.
pub fn eval_h(lambda: &Partition, c: &ParameterList) -> RationalFunction {
    let mut acc = RationalFunction::one();
    for &part in lambda.parts() {
        acc = acc.mul(&eval_h_single(part, c));
    }
    acc
}

/// Monomial symmetric function m_lambda at the list.
///
/// Geometric lists use the strictly-ordered symmetrized chain closed form;
/// finite lists are evaluated term by term over distinct arrangements.
pub fn eval_m(lambda: &Partition, c: &ParameterList) -> RationalFunction {
    if lambda.is_empty() {
        return RationalFunction::one();
    }
    match c {
        ParameterList::Finite(cs) => {
            let k = lambda.len();
            if cs.len() < k {
                return RationalFunction::zero();
            }
            let mut acc = RationalFunction::zero();
            let arrangements = lambda.distinct_arrangements();
            let idx: Vec<usize> = (0..cs.len()).collect();
            for support in combinations(&idx, k) {
                for beta in &arrangements {
                    let mut term = RationalFunction::one();
                    for (pos, &e) in support.iter().zip(beta.iter()) {
                        term = term.mul(&cs[*pos].pow(e as i32).expect("positive power"));
                        if term.is_zero() {
                            break;
                        }
                    }
                    acc = acc.add(&term);
                }
            }
            acc
        }
        ParameterList::Geometric { var, offset } => {
            let k = lambda.len() as u32;
            let mut acc = RationalFunction::zero();
            for beta in lambda.distinct_arrangements() {
                // numerator exponent: sum_j (k - j) beta_j, 1-indexed j
                let mut num_exp: u32 = 0;
                for (j, &b) in beta.iter().enumerate() {
                    num_exp += (k - 1 - j as u32) * b;
                }
                let mut den = RationalFunction::one();
                let mut partial = 0u32;
                for &b in &beta {
                    partial += b;
                    let vp = RationalFunction::from_poly(MultiPoly::var_pow(*var, partial as u16));
                    den = den.mul(&RationalFunction::one().sub(&vp));
                }
                let num = RationalFunction::from_poly(MultiPoly::var_pow(*var, num_exp as u16));
                acc = acc.add(&num.div(&den).expect("nonzero denominator"));
            }
            let shift = RationalFunction::from_poly(MultiPoly::var_pow(
                *var,
                (lambda.weight() * *offset as u32) as u16,
            ));
            acc.mul(&shift)
        }
        ParameterList::ExponentialLimit => c.eval_p_coords(&m_to_p(lambda)),
    }
}

/// Forgotten symmetric function f_lambda at the list.
///
/// Geometric lists use the weakly-ordered symmetrized chain closed form with
/// the sign (-1)^(colength); other lists go through the omega involution on
/// the power-sum expansion.
pub fn eval_f(lambda: &Partition, c: &ParameterList) -> RationalFunction {
    if lambda.is_empty() {
        return RationalFunction::one();
    }
    match c {
        ParameterList::Geometric { var, offset } => {
            let mut acc = RationalFunction::zero();
            for beta in lambda.distinct_arrangements() {
                let mut den = RationalFunction::one();
                let mut partial = 0u32;
                for &b in &beta {
                    partial += b;
                    let vp = RationalFunction::from_poly(MultiPoly::var_pow(*var, partial as u16));
                    den = den.mul(&RationalFunction::one().sub(&vp));
                }
                acc = acc.add(&den.inverse().expect("nonzero denominator"));
            }
            let shift = RationalFunction::from_poly(MultiPoly::var_pow(
                *var,
                (lambda.weight() * *offset as u32) as u16,
            ));
            acc = acc.mul(&shift);
            if lambda.colength() % 2 == 1 {
                acc = acc.neg();
            }
            acc
        }
        _ => c.eval_p_coords(&f_to_p(lambda)),
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &[usize], start: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, i + 1, k, current, out);
            current.pop();
        }
    }
    rec(items, 0, k, &mut current, &mut out);
    out
}

/// The six classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    P,
    S,
    M,
    E,
    H,
    F,
}

/// A symmetric function expressed in one basis, coefficients rational
/// functions, support bounded by degree_bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunExpansion {
    pub basis: Basis,
    pub coeffs: BTreeMap<Partition, RationalFunction>,
    pub degree_bound: u32,
}

impl SymFunExpansion {
    pub fn new(
        basis: Basis,
        coeffs: BTreeMap<Partition, RationalFunction>,
        degree_bound: u32,
    ) -> Result<SymFunExpansion> {
        for mu in coeffs.keys() {
            if mu.weight() > degree_bound {
                return Err(Error::BoundExceeded(format!(
                    "partition {mu} exceeds degree bound {degree_bound}"
                )));
            }
        }
        let mut coeffs = coeffs;
        coeffs.retain(|_, c| !c.is_zero());
        Ok(SymFunExpansion {
            basis,
            coeffs,
            degree_bound,
        })
    }

    pub fn zero(basis: Basis, degree_bound: u32) -> SymFunExpansion {
        SymFunExpansion {
            basis,
            coeffs: BTreeMap::new(),
            degree_bound,
        }
    }

    pub fn single(basis: Basis, lambda: Partition) -> SymFunExpansion {
        let bound = lambda.weight();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, RationalFunction::one());
        SymFunExpansion {
            basis,
            coeffs,
            degree_bound: bound,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Expansion of a single basis element in the p basis (rational constants).
fn basis_element_to_p(basis: Basis, lambda: &Partition) -> PCoords {
    match basis {
        Basis::P => [(lambda.clone(), crate::exact::rat(1))].into(),
        Basis::S => s_to_p(lambda),
        Basis::M => m_to_p(lambda),
        Basis::E => e_lambda_to_p(lambda),
        Basis::H => h_lambda_to_p(lambda),
        Basis::F => f_to_p(lambda),
    }
}

/// Convert an expansion to another basis. Round trips are exact.
pub fn convert(x: &SymFunExpansion, target: Basis) -> Result<SymFunExpansion> {
    if x.basis == target {
        return Ok(x.clone());
    }
    let bound = x.degree_bound;
    if bound > 24 {
        return Err(Error::BoundExceeded(format!(
            "basis conversion bound {bound} too large"
        )));
    }
    // First move to p coordinates (rational-function valued).
    let mut p_coords: BTreeMap<Partition, RationalFunction> = BTreeMap::new();
    for (lam, coeff) in &x.coeffs {
        for (mu, c) in basis_element_to_p(x.basis, lam) {
            let term = coeff.scale_rat(&c);
            let entry = p_coords
                .entry(mu)
                .or_insert_with(RationalFunction::zero);
            *entry = entry.add(&term);
        }
    }
    p_coords.retain(|_, c| !c.is_zero());
    if target == Basis::P {
        return SymFunExpansion::new(Basis::P, p_coords, bound);
    }
    // Then from p to the target, degree block by degree block.
    let mut out: BTreeMap<Partition, RationalFunction> = BTreeMap::new();
    let degrees: std::collections::BTreeSet<u32> =
        p_coords.keys().map(|mu| mu.weight()).collect();
    for d in degrees {
        let tables = transition::degree_tables(d);
        let parts = &tables.parts;
        let v: Vec<RationalFunction> = parts
            .iter()
            .map(|mu| {
                p_coords
                    .get(mu)
                    .cloned()
                    .unwrap_or_else(RationalFunction::zero)
            })
            .collect();
        let result: Vec<RationalFunction> = match target {
            Basis::M => matvec_t(&tables.p_in_m, &v),
            Basis::E => matvec(&tables.p_in_e, &v),
            Basis::H => matvec(&tables.p_in_h, &v),
            Basis::S => {
                // c_lambda = sum_mu chi_lambda(mu) v_mu
                parts
                    .iter()
                    .map(|lam| {
                        let mut acc = RationalFunction::zero();
                        for (j, mu) in parts.iter().enumerate() {
                            if v[j].is_zero() {
                                continue;
                            }
                            acc = acc.add(&v[j].scale_rat(&transition::chi(lam, mu)));
                        }
                        acc
                    })
                    .collect()
            }
            Basis::F => {
                // omega twist then m coordinates
                let tw: Vec<RationalFunction> = parts
                    .iter()
                    .zip(v.iter())
                    .map(|(mu, c)| c.scale_rat(&omega_sign(mu)))
                    .collect();
                matvec_t(&tables.p_in_m, &tw)
            }
            Basis::P => unreachable!(),
        };
        for (lam, c) in parts.iter().zip(result) {
            if !c.is_zero() {
                out.insert(lam.clone(), c);
            }
        }
    }
    SymFunExpansion::new(target, out, bound)
}

/// w = M^T v with rational matrix and rational-function vector.
fn matvec_t(m: &[Vec<Rat>], v: &[RationalFunction]) -> Vec<RationalFunction> {
    let n = m.len();
    (0..n)
        .map(|j| {
            let mut acc = RationalFunction::zero();
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() || m[i][j].is_zero() {
                    continue;
                }
                acc = acc.add(&vi.scale_rat(&m[i][j]));
            }
            acc
        })
        .collect()
}

fn matvec(m: &[Vec<Rat>], v: &[RationalFunction]) -> Vec<RationalFunction> {
    let n = m.len();
    (0..n)
        .map(|i| {
            let mut acc = RationalFunction::zero();
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() || m[i][j].is_zero() {
                    continue;
                }
                acc = acc.add(&vj.scale_rat(&m[i][j]));
            }
            acc
        })
        .collect()
}

/// Duality pairing check used by tests: sum over lambda of weight d of
/// u_lambda(x) v_lambda(y) for dual bases must not depend on which side
/// carries which basis.
pub fn dual_sum(
    d: u32,
    ubasis: Basis,
    vbasis: Basis,
    x: &ParameterList,
    y: &ParameterList,
) -> RationalFunction {
    let mut acc = RationalFunction::zero();
    for lam in enumerate_partitions(d) {
        let ux = eval_basis(ubasis, &lam, x);
        if ux.is_zero() {
            continue;
        }
        let vy = eval_basis(vbasis, &lam, y);
        acc = acc.add(&ux.mul(&vy));
    }
    acc
}

/// Evaluate a single basis element at a parameter list.
pub fn eval_basis(basis: Basis, lambda: &Partition, c: &ParameterList) -> RationalFunction {
    match basis {
        Basis::E => eval_e(lambda, c),
        Basis::H => eval_h(lambda, c),
        Basis::M => eval_m(lambda, c),
        Basis::F => eval_f(lambda, c),
        Basis::P | Basis::S => c.eval_p_coords(&basis_element_to_p(basis, lambda)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rational_function as parse;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn geo0() -> ParameterList {
        ParameterList::geometric_q(0)
    }

    fn geo1() -> ParameterList {
        ParameterList::geometric_q(1)
    }

    #[test]
    fn eval_e_geometric_examples() {
        assert_eq!(eval_e(&p(&[1]), &geo0()), parse("1/(1-q)").unwrap());
        assert_eq!(
            eval_e(&p(&[2]), &geo0()),
            parse("q/((1-q)(1-q^2))").unwrap()
        );
        // offset 1: E'_j = q^j E_j
        assert_eq!(
            eval_e(&p(&[2]), &geo1()),
            parse("q^3/((1-q)(1-q^2))").unwrap()
        );
    }

    #[test]
    fn eval_e_finite_examples() {
        let one = ParameterList::finite(vec![RationalFunction::one()]);
        assert_eq!(eval_e(&p(&[1, 1]), &one), RationalFunction::one());
        assert!(eval_e(&p(&[2]), &one).is_zero());
    }

    #[test]
    fn eval_h_examples() {
        assert_eq!(eval_h(&p(&[1]), &geo0()), parse("1/(1-q)").unwrap());
        assert_eq!(
            eval_h(&p(&[2]), &geo0()),
            parse("1/((1-q)(1-q^2))").unwrap()
        );
        let one = ParameterList::finite(vec![RationalFunction::one()]);
        for k in 1..=5 {
            assert!(eval_h(&Partition::row(k), &one).is_one());
        }
    }

    #[test]
    fn eval_m_examples() {
        assert_eq!(eval_m(&p(&[2]), &geo0()), parse("1/(1-q^2)").unwrap());
        assert_eq!(
            eval_m(&p(&[1, 1]), &geo0()),
            parse("q/((1-q)(1-q^2))").unwrap()
        );
        let one = ParameterList::finite(vec![RationalFunction::one()]);
        assert!(eval_m(&p(&[2]), &one).is_one());
    }

    #[test]
    fn eval_f_examples() {
        assert_eq!(eval_f(&p(&[1]), &geo0()), parse("1/(1-q)").unwrap());
        assert_eq!(
            eval_f(&p(&[1, 1]), &geo0()),
            parse("1/((1-q)(1-q^2))").unwrap()
        );
        assert_eq!(eval_f(&p(&[2]), &geo0()), parse("-1/(1-q^2)").unwrap());
    }

    #[test]
    fn geometric_closed_forms_match_powersum_route() {
        for d in 1..=5 {
            for lam in enumerate_partitions(d) {
                for c in [geo0(), geo1()] {
                    let closed = eval_m(&lam, &c);
                    let via_p = c.eval_p_coords(&m_to_p(&lam));
                    assert_eq!(closed, via_p, "m_{lam} at {c:?}");
                    let closed_f = eval_f(&lam, &c);
                    let via_p_f = c.eval_p_coords(&f_to_p(&lam));
                    assert_eq!(closed_f, via_p_f, "f_{lam} at {c:?}");
                }
            }
        }
    }

    #[test]
    fn geometric_e_h_match_powersum_route() {
        for d in 1..=5 {
            for lam in enumerate_partitions(d) {
                let ce = eval_e(&lam, &geo0());
                let pe = geo0().eval_p_coords(&e_lambda_to_p(&lam));
                assert_eq!(ce, pe, "e_{lam}");
                let ch = eval_h(&lam, &geo0());
                let ph = geo0().eval_p_coords(&h_lambda_to_p(&lam));
                assert_eq!(ch, ph, "h_{lam}");
            }
        }
    }

    #[test]
    fn convert_roundtrip_and_newton() {
        // e_2 -> p -> e round trip
        let e2 = SymFunExpansion::single(Basis::E, p(&[2]));
        let in_p = convert(&e2, Basis::P).unwrap();
        assert_eq!(
            in_p.coeffs[&p(&[1, 1])],
            RationalFunction::from_frac(1, 2)
        );
        assert_eq!(in_p.coeffs[&p(&[2])], RationalFunction::from_frac(-1, 2));
        let back = convert(&in_p, Basis::E).unwrap();
        assert_eq!(back.coeffs, e2.coeffs);
    }

    #[test]
    fn convert_schur_matches_character_route() {
        let s21 = SymFunExpansion::single(Basis::S, p(&[2, 1]));
        let in_p = convert(&s21, Basis::P).unwrap();
        for (mu, c) in &in_p.coeffs {
            let expect = crate::characters::schur_in_powersums(&p(&[2, 1]))[mu].clone();
            assert_eq!(c.as_constant().unwrap(), expect);
        }
        // and p -> s inverts
        let back = convert(&in_p, Basis::S).unwrap();
        assert_eq!(back.coeffs, s21.coeffs);
    }

    #[test]
    fn convert_zero_expansion() {
        let zero = SymFunExpansion::zero(Basis::M, 4);
        for b in [Basis::P, Basis::S, Basis::E, Basis::H, Basis::F] {
            assert!(convert(&zero, b).unwrap().is_zero());
        }
    }

    #[test]
    fn all_bases_roundtrip_through_p() {
        for basis in [Basis::S, Basis::M, Basis::E, Basis::H, Basis::F] {
            for lam in enumerate_partitions(4) {
                let x = SymFunExpansion::single(basis, lam.clone());
                let in_p = convert(&x, Basis::P).unwrap();
                let back = convert(&in_p, basis).unwrap();
                assert_eq!(back.coeffs, x.coeffs, "basis {basis:?} lambda {lam}");
            }
        }
    }

    #[test]
    fn em_me_duality() {
        // sum e_lambda(x) m_lambda(y) symmetric under swapping evaluation lists
        let x = ParameterList::finite(vec![
            RationalFunction::from_int(1),
            RationalFunction::from_frac(1, 2),
            RationalFunction::from_int(2),
            RationalFunction::from_int(3),
        ]);
        let y = ParameterList::finite(vec![
            RationalFunction::from_int(5),
            RationalFunction::from_frac(2, 3),
            RationalFunction::from_int(1),
            RationalFunction::from_int(7),
        ]);
        for d in 1..=6 {
            let a = dual_sum(d, Basis::E, Basis::M, &x, &y);
            let b = dual_sum(d, Basis::M, Basis::E, &x, &y);
            assert_eq!(a, b, "degree {d}");
        }
    }

    #[test]
    fn coefficient_extraction_of_e() {
        // [z^d] prod (1 + z c_i) = e_d(c) for a finite list
        let cs = vec![
            RationalFunction::from_int(2),
            RationalFunction::from_int(3),
            RationalFunction::from_frac(1, 2),
        ];
        let c = ParameterList::finite(cs.clone());
        let z = RationalFunction::var(Var::Z);
        let mut prod = RationalFunction::one();
        for ci in &cs {
            prod = prod.mul(&RationalFunction::one().add(&z.mul(ci)));
        }
        let series = crate::exact::series_expand(&prod, Var::Z, 3).unwrap();
        for d in 0..=3 {
            assert_eq!(
                series.coeff(d).clone(),
                eval_e(&Partition::row(d as u32), &c),
                "degree {d}"
            );
        }
    }

    #[test]
    fn offset_shift_identity() {
        // E'_j(q) = q^j E_j(q)
        for j in 1..=4 {
            let e0 = eval_e_single(j, &geo0());
            let e1 = eval_e_single(j, &geo1());
            let qj = RationalFunction::from_poly(MultiPoly::var_pow(Var::Q, j as u16));
            assert_eq!(e1, qj.mul(&e0));
        }
    }
}
