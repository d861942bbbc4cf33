//! Weight generating functions G(z): builtin families, coefficient sequences
//! G_k, path weights, duals, and geometric configuration weights W_G.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{parse_rational_function, MultiPoly, RationalFunction, Var};
use crate::partitions::{factorial, Partition};
use crate::symfun::{eval_f, eval_m, ParameterList};

/// A weight generating function G(z) with G_0 = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightGenerator {
    /// exp(z): coefficients 1/k!.
    Exp,
    /// 1 + z: strictly monotonic paths / Belyi covers.
    E,
    /// (1 + z)^k: multimonotonic paths.
    Ek(u32),
    /// 1/(1 - z): weakly monotonic paths, dual of E.
    H,
    /// prod_{k>=0} (1 + q^k z): quantum, strict.
    Eq,
    /// prod_{k>=1} (1 + q^k z): quantum, strict, zero-energy level removed.
    EqPrime,
    /// prod_{k>=0} (1 - q^k z)^{-1}: quantum, weak (dual of Eq).
    Hq,
    /// prod_{k>=1} (1 - q^k z)^{-1}.
    HqPrime,
    /// E(q, z) H(p, z): two deformation parameters.
    Qqp,
    /// Explicit coefficient list (G_0 = 1 implied at index 0).
    ExplicitCoeffs(Vec<RationalFunction>),
    /// prod_i (1 + c_i z) for a finite parameter list.
    FiniteC(Vec<RationalFunction>),
}

impl WeightGenerator {
    /// Taylor coefficient G_k of the generating function.
    pub fn coefficient(&self, k: u32) -> RationalFunction {
        match self {
            WeightGenerator::Exp => {
                RationalFunction::from_rat(BigRational::new(BigInt::one(), factorial(k)))
            }
            WeightGenerator::E => {
                if k <= 1 {
                    RationalFunction::one()
                } else {
                    RationalFunction::zero()
                }
            }
            WeightGenerator::Ek(m) => RationalFunction::from_rat(
                BigRational::from_integer(binomial(*m, k)),
            ),
            WeightGenerator::H => RationalFunction::one(),
            WeightGenerator::Eq => q_coeff(Var::Q, k, k * (k.saturating_sub(1)) / 2),
            WeightGenerator::EqPrime => q_coeff(Var::Q, k, k * (k + 1) / 2),
            WeightGenerator::Hq => q_coeff(Var::Q, k, 0),
            WeightGenerator::HqPrime => q_coeff(Var::Q, k, k),
            WeightGenerator::Qqp => {
                let mut acc = RationalFunction::zero();
                for m in 0..=k {
                    let e = q_coeff(Var::Q, m, m * (m.saturating_sub(1)) / 2);
                    let h = q_coeff(Var::P, k - m, 0);
                    acc = acc.add(&e.mul(&h));
                }
                acc
            }
            WeightGenerator::ExplicitCoeffs(v) => {
                if k == 0 {
                    RationalFunction::one()
                } else {
                    v.get(k as usize)
                        .cloned()
                        .unwrap_or_else(RationalFunction::zero)
                }
            }
            WeightGenerator::FiniteC(c) => {
                crate::symfun::eval_e_single(k, &ParameterList::finite(c.clone()))
            }
        }
    }

    /// Path weight G_lambda = prod G_{lambda_i}.
    pub fn path_weight(&self, lambda: &Partition) -> RationalFunction {
        let mut acc = RationalFunction::one();
        for &part in lambda.parts() {
            acc = acc.mul(&self.coefficient(part));
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Factorial-scaled path weight: (prod lambda_i!) G_lambda, the weight of
    /// an arbitrary (not necessarily monotonic) path of signature lambda.
    pub fn path_weight_factorial(&self, lambda: &Partition) -> RationalFunction {
        let mut scale = BigInt::one();
        for &part in lambda.parts() {
            scale *= factorial(part);
        }
        self.path_weight(lambda)
            .scale_rat(&BigRational::from_integer(scale))
    }

    /// The dual generator defined by 1/G(-z), for the closed pairs.
    pub fn dual(&self) -> Result<WeightGenerator> {
        match self {
            WeightGenerator::Exp => Ok(WeightGenerator::Exp),
            WeightGenerator::E => Ok(WeightGenerator::H),
            WeightGenerator::H => Ok(WeightGenerator::E),
            WeightGenerator::Eq => Ok(WeightGenerator::Hq),
            WeightGenerator::Hq => Ok(WeightGenerator::Eq),
            WeightGenerator::EqPrime => Ok(WeightGenerator::HqPrime),
            WeightGenerator::HqPrime => Ok(WeightGenerator::EqPrime),
            other => Err(Error::UnsupportedKind(format!(
                "no closed dual for {other}"
            ))),
        }
    }

    /// Whether configuration weights use the forgotten functions (dual side)
    /// rather than the monomial sums.
    pub fn is_dual_style(&self) -> bool {
        matches!(
            self,
            WeightGenerator::H | WeightGenerator::Hq | WeightGenerator::HqPrime
        )
    }

    /// Parameter list realizing G(z) = prod (1 + c_i z) (or the dual product),
    /// when one exists.
    pub fn parameter_list(&self) -> Option<ParameterList> {
        match self {
            WeightGenerator::Exp => Some(ParameterList::ExponentialLimit),
            WeightGenerator::E | WeightGenerator::H => {
                Some(ParameterList::finite(vec![RationalFunction::one()]))
            }
            WeightGenerator::Ek(k) => Some(ParameterList::finite(vec![
                RationalFunction::one();
                *k as usize
            ])),
            WeightGenerator::Eq | WeightGenerator::Hq => Some(ParameterList::Geometric {
                var: Var::Q,
                offset: 0,
            }),
            WeightGenerator::EqPrime | WeightGenerator::HqPrime => {
                Some(ParameterList::Geometric {
                    var: Var::Q,
                    offset: 1,
                })
            }
            WeightGenerator::FiniteC(c) => Some(ParameterList::finite(c.clone())),
            WeightGenerator::Qqp | WeightGenerator::ExplicitCoeffs(_) => None,
        }
    }

    /// The two species behind Q(q, p): the E(q) list and the H(p) list.
    pub fn qqp_species() -> (ParameterList, ParameterList) {
        (
            ParameterList::Geometric {
                var: Var::Q,
                offset: 0,
            },
            ParameterList::Geometric {
                var: Var::P,
                offset: 0,
            },
        )
    }

    /// Geometric configuration weight W_G for one species of branch points.
    /// Errors when an identity profile is present or the kind has no
    /// single-species parameter list (Q(q,p) uses two species).
    pub fn geometric_weight(&self, profiles: &[Partition]) -> Result<RationalFunction> {
        let lambda = colength_partition(profiles)?;
        let c = self.parameter_list().ok_or_else(|| {
            Error::UnsupportedKind(format!("{self} has no single-species weight"))
        })?;
        Ok(if self.is_dual_style() {
            eval_f(&lambda, &c)
        } else {
            eval_m(&lambda, &c)
        })
    }
}

/// Colengths of the profiles, sorted into a partition. Errors if any profile
/// is the identity cycle type or the weights disagree.
pub fn colength_partition(profiles: &[Partition]) -> Result<Partition> {
    if let Some(first) = profiles.first() {
        let n = first.weight();
        for p in profiles {
            if p.weight() != n {
                return Err(Error::WeightMismatch(format!(
                    "profiles {first} and {p} have different weights"
                )));
            }
        }
    }
    let mut cols = Vec::with_capacity(profiles.len());
    for p in profiles {
        if p.is_identity_type() {
            return Err(Error::Invalid(format!(
                "identity profile {p} not allowed in a branch configuration"
            )));
        }
        cols.push(p.colength());
    }
    Ok(Partition::from_unsorted(cols))
}

/// q^shift / prod_{j=1..k} (1 - var^j), the shared shape of all quantum
/// coefficient formulas.
fn q_coeff(var: Var, k: u32, shift: u32) -> RationalFunction {
    let num = RationalFunction::from_poly(MultiPoly::var_pow(var, shift as u16));
    let mut den = RationalFunction::one();
    for j in 1..=k {
        let vj = RationalFunction::from_poly(MultiPoly::var_pow(var, j as u16));
        den = den.mul(&RationalFunction::one().sub(&vj));
    }
    num.div(&den).expect("nonzero denominator")
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Parse a generator spec string: exp, E, E^3, H, E(q), E'(q), H(q), H'(q),
/// Q(q,p), or c:[...] with comma-separated rational-function entries.
pub fn parse_generator(s: &str) -> Result<WeightGenerator> {
    let t = s.trim();
    match t {
        "exp" => return Ok(WeightGenerator::Exp),
        "E" => return Ok(WeightGenerator::E),
        "H" => return Ok(WeightGenerator::H),
        "E(q)" => return Ok(WeightGenerator::Eq),
        "E'(q)" => return Ok(WeightGenerator::EqPrime),
        "H(q)" => return Ok(WeightGenerator::Hq),
        "H'(q)" => return Ok(WeightGenerator::HqPrime),
        "Q(q,p)" => return Ok(WeightGenerator::Qqp),
        _ => {}
    }
    if let Some(rest) = t.strip_prefix("E^") {
        let k: u32 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in `{t}`")))?;
        if k == 0 {
            return Err(Error::Parse("E^0 is the trivial generator; use c:[]".into()));
        }
        return Ok(WeightGenerator::Ek(k));
    }
    if let Some(rest) = t.strip_prefix("c:[") {
        let inner = rest
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("missing `]` in `{t}`")))?;
        let mut list = Vec::new();
        if !inner.trim().is_empty() {
            for item in inner.split(',') {
                list.push(parse_rational_function(item)?);
            }
        }
        return Ok(WeightGenerator::FiniteC(list));
    }
    Err(Error::Parse(format!("unknown generator spec `{s}`")))
}

impl fmt::Display for WeightGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightGenerator::Exp => write!(f, "exp"),
            WeightGenerator::E => write!(f, "E"),
            WeightGenerator::Ek(k) => write!(f, "E^{k}"),
            WeightGenerator::H => write!(f, "H"),
            WeightGenerator::Eq => write!(f, "E(q)"),
            WeightGenerator::EqPrime => write!(f, "E'(q)"),
            WeightGenerator::Hq => write!(f, "H(q)"),
            WeightGenerator::HqPrime => write!(f, "H'(q)"),
            WeightGenerator::Qqp => write!(f, "Q(q,p)"),
            WeightGenerator::ExplicitCoeffs(v) => {
                write!(f, "coeffs:[")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
            WeightGenerator::FiniteC(v) => {
                write!(f, "c:[")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rational_function as parse;
    use crate::exact::{eps_limit_series, exp_eps, rat, series_expand};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(
            WeightGenerator::Exp.coefficient(3),
            RationalFunction::from_frac(1, 6)
        );
        assert_eq!(
            WeightGenerator::Hq.coefficient(2),
            parse("1/((1-q)(1-q^2))").unwrap()
        );
        assert_eq!(
            WeightGenerator::Qqp.coefficient(1),
            parse("1/(1-q) + 1/(1-p)").unwrap()
        );
        assert_eq!(
            WeightGenerator::Eq.coefficient(2),
            parse("q/((1-q)(1-q^2))").unwrap()
        );
        assert_eq!(WeightGenerator::Ek(3).coefficient(2), RationalFunction::from_int(3));
    }

    #[test]
    fn path_weight_examples() {
        assert!(WeightGenerator::E.path_weight(&p(&[1, 1, 1])).is_one());
        assert!(WeightGenerator::E.path_weight(&p(&[2, 1])).is_zero());
        assert_eq!(
            WeightGenerator::Eq.path_weight(&p(&[2])),
            parse("q/((1-q)(1-q^2))").unwrap()
        );
        // factorial-scaled weight
        assert_eq!(
            WeightGenerator::Exp.path_weight_factorial(&p(&[3, 2])),
            RationalFunction::one()
        );
    }

    #[test]
    fn duals() {
        assert_eq!(WeightGenerator::E.dual().unwrap(), WeightGenerator::H);
        assert_eq!(WeightGenerator::Eq.dual().unwrap(), WeightGenerator::Hq);
        assert_eq!(WeightGenerator::Exp.dual().unwrap(), WeightGenerator::Exp);
        assert!(WeightGenerator::Qqp.dual().is_err());
    }

    #[test]
    fn dual_coefficient_convolution() {
        // sum_j (-1)^j G_j Gtilde_{k-j} = delta_{k,0}
        for g in [
            WeightGenerator::Exp,
            WeightGenerator::E,
            WeightGenerator::H,
            WeightGenerator::Eq,
            WeightGenerator::Hq,
            WeightGenerator::EqPrime,
        ] {
            let d = g.dual().unwrap();
            for k in 0..=6u32 {
                let mut acc = RationalFunction::zero();
                for j in 0..=k {
                    let mut term = g.coefficient(j).mul(&d.coefficient(k - j));
                    if j % 2 == 1 {
                        term = term.neg();
                    }
                    acc = acc.add(&term);
                }
                let expect = if k == 0 {
                    RationalFunction::one()
                } else {
                    RationalFunction::zero()
                };
                assert_eq!(acc, expect, "{g} at k={k}");
            }
        }
    }

    #[test]
    fn qqp_coefficients_are_convolutions() {
        for k in 0..=8u32 {
            let mut acc = RationalFunction::zero();
            for m in 0..=k {
                let e = WeightGenerator::Eq.coefficient(m);
                // H(p) coefficients: Hq formula with the variable p
                let h = super::q_coeff(Var::P, k - m, 0);
                acc = acc.add(&e.mul(&h));
            }
            assert_eq!(WeightGenerator::Qqp.coefficient(k), acc, "k={k}");
        }
    }

    #[test]
    fn geometric_weight_examples() {
        // (Eq, [(3)]) with n=3
        assert_eq!(
            WeightGenerator::Eq.geometric_weight(&[p(&[3])]).unwrap(),
            parse("1/(1-q^2)").unwrap()
        );
        assert_eq!(
            WeightGenerator::Eq
                .geometric_weight(&[p(&[2, 1]), p(&[2, 1])])
                .unwrap(),
            parse("q/((1-q)(1-q^2))").unwrap()
        );
        assert_eq!(
            WeightGenerator::Hq
                .geometric_weight(&[p(&[2, 1]), p(&[2, 1])])
                .unwrap(),
            parse("1/((1-q)(1-q^2))").unwrap()
        );
        // identity profile rejected
        assert!(WeightGenerator::Eq
            .geometric_weight(&[p(&[1, 1, 1])])
            .is_err());
        // mismatched weights rejected
        assert!(WeightGenerator::Eq
            .geometric_weight(&[p(&[2]), p(&[3])])
            .is_err());
    }

    #[test]
    fn finite_c_weights() {
        let g = WeightGenerator::FiniteC(vec![
            RationalFunction::from_int(2),
            RationalFunction::from_int(3),
        ]);
        // G_1 = e_1(c) = 5, G_2 = e_2(c) = 6
        assert_eq!(g.coefficient(1), RationalFunction::from_int(5));
        assert_eq!(g.coefficient(2), RationalFunction::from_int(6));
        assert!(g.coefficient(3).is_zero());
        // W = m_lambda(c)
        let w = g.geometric_weight(&[p(&[2, 1]), p(&[2, 1])]).unwrap();
        // m_{(1,1)}(2,3) = 6
        assert_eq!(w, RationalFunction::from_int(6));
    }

    #[test]
    fn classical_limits_of_quantum_coefficients() {
        // with q = e^{-eps}: eps^i E_i(q) -> 1/i! and eps^i H_i(q) -> 1/i!
        let minus_one = rat(-1);
        let subs = vec![(Var::Q, exp_eps(&minus_one, 16))];
        for i in 1..=4u32 {
            for g in [WeightGenerator::Eq, WeightGenerator::Hq] {
                let c = g.coefficient(i);
                let series = eps_limit_series(&c, &subs, i as usize, 1).unwrap();
                assert_eq!(
                    series[0],
                    BigRational::new(BigInt::one(), factorial(i)),
                    "{g} i={i}"
                );
            }
        }
    }

    #[test]
    fn q_zero_specialization() {
        // E(q) at q=0 degenerates to E, Hq to H
        for k in 0..=5u32 {
            let eq0 = WeightGenerator::Eq
                .coefficient(k)
                .subst_var(Var::Q, &rat(0))
                .unwrap();
            assert_eq!(eq0, WeightGenerator::E.coefficient(k));
            let hq0 = WeightGenerator::Hq
                .coefficient(k)
                .subst_var(Var::Q, &rat(0))
                .unwrap();
            assert_eq!(hq0, WeightGenerator::H.coefficient(k));
        }
    }

    #[test]
    fn parse_generator_specs() {
        assert_eq!(parse_generator("exp").unwrap(), WeightGenerator::Exp);
        assert_eq!(parse_generator("E^3").unwrap(), WeightGenerator::Ek(3));
        assert_eq!(parse_generator("Q(q,p)").unwrap(), WeightGenerator::Qqp);
        assert_eq!(parse_generator("H'(q)").unwrap(), WeightGenerator::HqPrime);
        let c = parse_generator("c:[1/2, 1]").unwrap();
        assert_eq!(
            c,
            WeightGenerator::FiniteC(vec![
                RationalFunction::from_frac(1, 2),
                RationalFunction::one()
            ])
        );
        assert!(parse_generator("bogus").is_err());
    }

    #[test]
    fn generator_series_match_coefficients() {
        // E^k and H have rational closed forms; check their Taylor series
        let z = RationalFunction::var(Var::Z);
        let ek = RationalFunction::one().add(&z).pow(3).unwrap();
        let s = series_expand(&ek, Var::Z, 3).unwrap();
        for k in 0..=3 {
            assert_eq!(s.coeff(k).clone(), WeightGenerator::Ek(3).coefficient(k as u32));
        }
        let h = RationalFunction::one()
            .div(&RationalFunction::one().sub(&z))
            .unwrap();
        let s = series_expand(&h, Var::Z, 4).unwrap();
        for k in 0..=4 {
            assert_eq!(s.coeff(k).clone(), WeightGenerator::H.coefficient(k as u32));
        }
    }
}
