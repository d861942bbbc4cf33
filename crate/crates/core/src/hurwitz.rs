//! Weighted double Hurwitz numbers by three independent pipelines: character
//! sums over branch configurations (geometric), the central-element expansion
//! of G(z, J) (central), and direct enumeration of weakly monotonic paths in
//! the Cayley graph (brute force).

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::character;
use crate::classalg::{central_weight_element, CentralElement, Perm, SymmetricGroup};
use crate::error::{Error, Result};
use crate::exact::{Rat, RationalFunction};
use crate::partitions::{enumerate_partitions, factorial, Partition};
use crate::symfun::{eval_f, eval_m};
use crate::weights::{colength_partition, WeightGenerator};

/// Which computation path produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    Geometric,
    Central,
    Brute,
}

impl Pipeline {
    pub fn name(&self) -> &'static str {
        match self {
            Pipeline::Geometric => "geometric",
            Pipeline::Central => "central",
            Pipeline::Brute => "brute",
        }
    }

    pub fn parse(s: &str) -> Option<Pipeline> {
        match s {
            "geometric" => Some(Pipeline::Geometric),
            "central" => Some(Pipeline::Central),
            "brute" => Some(Pipeline::Brute),
            _ => None,
        }
    }
}

/// A value together with its provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzResult {
    pub value: RationalFunction,
    pub pipeline: Pipeline,
    pub n: u32,
    pub d: usize,
    pub generator: String,
}

/// Plain Hurwitz number by the Frobenius-Schur character sum:
/// H = sum_lambda h(lambda)^(k-2) prod chi_lambda(mu_i)/z_{mu_i}.
/// Counts possibly disconnected covers weighted by 1/|Aut|.
pub fn hurwitz_number(profiles: &[Partition]) -> Result<BigRational> {
    if profiles.is_empty() {
        return Err(Error::Invalid("at least one profile required".into()));
    }
    let n = profiles[0].weight();
    if n == 0 {
        return Err(Error::Invalid("profiles must have positive weight".into()));
    }
    for p in profiles {
        if p.weight() != n {
            return Err(Error::WeightMismatch(format!(
                "profile {p} does not have weight {n}"
            )));
        }
    }
    let k = profiles.len() as i32;
    let mut acc = BigRational::zero();
    for lambda in enumerate_partitions(n) {
        let h = BigRational::from_integer(lambda.hook_product());
        let mut term = rational_pow(&h, k - 2);
        for p in profiles {
            let chi = character(&lambda, p)?;
            if chi.is_zero() {
                term = BigRational::zero();
                break;
            }
            term *= BigRational::new(chi, p.z_order());
        }
        acc += term;
    }
    Ok(acc)
}

fn rational_pow(x: &BigRational, e: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        BigRational::one() / acc
    } else {
        acc
    }
}

/// A branch configuration: a multiset of non-identity profiles (sorted) with
/// the multiplicity of each distinct profile.
#[derive(Clone, Debug)]
pub struct BranchConfig {
    pub profiles: Vec<Partition>,
}

impl BranchConfig {
    /// |aut(lambda)| / prod (multiplicities)!, the number of ordered index
    /// chains per ordered-profile count: the factor converting the
    /// multiset sum into the tau-expansion's ordered sum.
    pub fn ordering_factor(&self) -> Rat {
        let lambda = colength_partition(&self.profiles).expect("validated profiles");
        let mut denom = BigInt::one();
        let mut run = 1u32;
        for w in self.profiles.windows(2) {
            if w[0] == w[1] {
                run += 1;
            } else {
                denom *= factorial(run);
                run = 1;
            }
        }
        denom *= factorial(run);
        BigRational::new(lambda.aut_order(), denom)
    }

    pub fn colength_sum(&self) -> u32 {
        self.profiles.iter().map(|p| p.colength()).sum()
    }
}

/// All multisets of non-identity profiles of weight n with colength sum d.
/// d = 0 yields exactly the empty configuration.
pub fn branch_configurations(n: u32, d: u32) -> Vec<BranchConfig> {
    let pool: Vec<Partition> = enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.colength() >= 1 && p.colength() <= d)
        .collect();
    let mut out = Vec::new();
    let mut current: Vec<Partition> = Vec::new();
    fn rec(
        pool: &[Partition],
        start: usize,
        remaining: u32,
        current: &mut Vec<Partition>,
        out: &mut Vec<BranchConfig>,
    ) {
        if remaining == 0 {
            out.push(BranchConfig {
                profiles: current.clone(),
            });
            return;
        }
        for i in start..pool.len() {
            let c = pool[i].colength();
            if c <= remaining {
                current.push(pool[i].clone());
                rec(pool, i, remaining - c, current, out);
                current.pop();
            }
        }
    }
    rec(&pool, 0, d, &mut current, &mut out);
    out
}

/// Geometric pipeline: sum over branch configurations of
/// W_G(config) * H(config, mu, nu), with the ordered-chain multiplicity
/// factor per multiset.
pub fn weighted_hurwitz_geometric(
    g: &WeightGenerator,
    d: usize,
    mu: &Partition,
    nu: &Partition,
) -> Result<RationalFunction> {
    let n = check_pair(mu, nu)?;
    if matches!(g, WeightGenerator::Qqp) {
        return weighted_hurwitz_geometric_qqp(d, mu, nu);
    }
    let mut acc = RationalFunction::zero();
    for config in branch_configurations(n, d as u32) {
        let weight = if config.profiles.is_empty() {
            RationalFunction::one()
        } else {
            g.geometric_weight(&config.profiles)?
        };
        if weight.is_zero() {
            continue;
        }
        let mut all = config.profiles.clone();
        all.push(mu.clone());
        all.push(nu.clone());
        let h = hurwitz_number(&all)?;
        if h.is_zero() {
            continue;
        }
        let factor = config.ordering_factor() * h;
        acc = acc.add(&weight.scale_rat(&factor));
    }
    Ok(acc)
}

/// Two-species geometric sum for Q(q,p): monomial-sum weights in q for one
/// species, forgotten-function weights in p for the other.
fn weighted_hurwitz_geometric_qqp(
    d: usize,
    mu: &Partition,
    nu: &Partition,
) -> Result<RationalFunction> {
    let n = check_pair(mu, nu)?;
    let (q_list, p_list) = WeightGenerator::qqp_species();
    let mut acc = RationalFunction::zero();
    for de in 0..=d as u32 {
        let dh = d as u32 - de;
        for ce in branch_configurations(n, de) {
            let we = if ce.profiles.is_empty() {
                RationalFunction::one()
            } else {
                eval_m(&colength_partition(&ce.profiles)?, &q_list)
            };
            if we.is_zero() {
                continue;
            }
            for ch in branch_configurations(n, dh) {
                let wh = if ch.profiles.is_empty() {
                    RationalFunction::one()
                } else {
                    eval_f(&colength_partition(&ch.profiles)?, &p_list)
                };
                if wh.is_zero() {
                    continue;
                }
                let mut all = ce.profiles.clone();
                all.extend_from_slice(&ch.profiles);
                all.push(mu.clone());
                all.push(nu.clone());
                let h = hurwitz_number(&all)?;
                if h.is_zero() {
                    continue;
                }
                let factor = ce.ordering_factor() * ch.ordering_factor() * h;
                acc = acc.add(&we.mul(&wh).scale_rat(&factor));
            }
        }
    }
    Ok(acc)
}

fn check_pair(mu: &Partition, nu: &Partition) -> Result<u32> {
    let n = mu.weight();
    if n == 0 || nu.weight() != n {
        return Err(Error::WeightMismatch(format!(
            "need |mu| = |nu| >= 1, got {mu} and {nu}"
        )));
    }
    Ok(n)
}

/// Central pipeline: F^d_G(mu, nu) is the coefficient of C_nu in the z^d
/// term of G(z, J) C_mu, divided by z_nu.
pub fn weighted_hurwitz_central(
    g: &WeightGenerator,
    d: usize,
    mu: &Partition,
    nu: &Partition,
) -> Result<RationalFunction> {
    let n = check_pair(mu, nu)?;
    let series = central_weight_element(g, n, d)?;
    let c_mu = CentralElement::class(n, mu)?;
    let applied = series.term(d).mul(&c_mu)?;
    let znu = BigRational::from_integer(nu.z_order());
    Ok(applied
        .coeff(nu)
        .scale_rat(&(BigRational::one() / znu)))
}

/// Signature-resolved counts of weakly monotonic d-step paths starting at
/// every element of cyc(nu) and ending in cyc(mu).
pub fn monotone_path_counts(
    n: u32,
    d: usize,
    mu: &Partition,
    nu: &Partition,
) -> Result<BTreeMap<Partition, u64>> {
    let key = (n, d, mu.clone(), nu.clone());
    if let Some(hit) = path_count_cache().read().expect("lock").get(&key) {
        return Ok(hit.clone());
    }
    let group = SymmetricGroup::new(n as usize)?;
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    // transpositions grouped by their larger element b (1-indexed b >= 2)
    let mut by_b: Vec<Vec<Perm>> = Vec::new();
    for b in 2..=n as usize {
        by_b.push(
            (0..b - 1)
                .map(|a| Perm::transposition(n as usize, a, b - 1))
                .collect(),
        );
    }
    struct Dfs<'a> {
        by_b: &'a [Vec<Perm>],
        mu: &'a Partition,
        d: usize,
        counts: &'a mut BTreeMap<Partition, u64>,
        b_counts: Vec<u32>,
    }
    impl Dfs<'_> {
        fn run(&mut self, current: Perm, min_b_idx: usize, depth: usize) {
            if depth == self.d {
                if &current.cycle_type() == self.mu {
                    let sig = Partition::from_unsorted(self.b_counts.clone());
                    *self.counts.entry(sig).or_insert(0) += 1;
                }
                return;
            }
            for b_idx in min_b_idx..self.by_b.len() {
                for t in &self.by_b[b_idx] {
                    let next = t.mul(&current);
                    self.b_counts[b_idx] += 1;
                    self.run(next, b_idx, depth + 1);
                    self.b_counts[b_idx] -= 1;
                }
            }
        }
    }
    for start_idx in group.class_indices(nu) {
        let start = group.elems[start_idx].clone();
        let mut dfs = Dfs {
            by_b: &by_b,
            mu,
            d,
            counts: &mut counts,
            b_counts: vec![0; by_b.len()],
        };
        dfs.run(start, 0, 0);
    }
    path_count_cache()
        .write()
        .expect("lock")
        .insert(key, counts.clone());
    Ok(counts)
}

#[allow(clippy::type_complexity)]
fn path_count_cache(
) -> &'static RwLock<HashMap<(u32, usize, Partition, Partition), BTreeMap<Partition, u64>>> {
    static CACHE: OnceLock<
        RwLock<HashMap<(u32, usize, Partition, Partition), BTreeMap<Partition, u64>>>,
    > = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Brute-force pipeline: F^d_G(mu, nu) = (1/n!) sum over signatures of
/// G_lambda times the weakly monotonic path count of that signature.
pub fn weighted_hurwitz_brute(
    g: &WeightGenerator,
    d: usize,
    mu: &Partition,
    nu: &Partition,
) -> Result<RationalFunction> {
    let n = check_pair(mu, nu)?;
    if n > 7 || d > 6 {
        return Err(Error::BoundExceeded(format!(
            "brute-force pipeline limited to n <= 7, d <= 6 (got n={n}, d={d})"
        )));
    }
    let counts = monotone_path_counts(n, d, mu, nu)?;
    let mut acc = RationalFunction::zero();
    for (lambda, m) in &counts {
        let weight = g.path_weight(lambda);
        if weight.is_zero() {
            continue;
        }
        acc = acc.add(&weight.scale_rat(&BigRational::from_integer(BigInt::from(*m))));
    }
    let nfact = BigRational::from_integer(factorial(n));
    Ok(acc.scale_rat(&(BigRational::one() / nfact)))
}

/// Dispatch on pipeline.
pub fn weighted_hurwitz(
    g: &WeightGenerator,
    d: usize,
    mu: &Partition,
    nu: &Partition,
    pipeline: Pipeline,
) -> Result<HurwitzResult> {
    let value = match pipeline {
        Pipeline::Geometric => weighted_hurwitz_geometric(g, d, mu, nu)?,
        Pipeline::Central => weighted_hurwitz_central(g, d, mu, nu)?,
        Pipeline::Brute => weighted_hurwitz_brute(g, d, mu, nu)?,
    };
    Ok(HurwitzResult {
        value,
        pipeline,
        n: mu.weight(),
        d,
        generator: g.to_string(),
    })
}

/// Okounkov's double Hurwitz number Cov_d(mu, nu): the count with d simple
/// branch points, equal to d! times the exponentially weighted number.
pub fn okounkov_cov(d: usize, mu: &Partition, nu: &Partition) -> Result<BigRational> {
    let n = check_pair(mu, nu)?;
    if d == 0 {
        return hurwitz_number(&[mu.clone(), nu.clone()]);
    }
    if n < 2 {
        return Err(Error::Invalid(
            "simple branch points need n >= 2".into(),
        ));
    }
    let simple = Partition::hook_type(2, n);
    let mut profiles = vec![simple; d];
    profiles.push(mu.clone());
    profiles.push(nu.clone());
    hurwitz_number(&profiles)
}

/// H^d_exp(mu, nu) = Cov_d(mu, nu)/d!.
pub fn exp_weighted(d: usize, mu: &Partition, nu: &Partition) -> Result<BigRational> {
    Ok(okounkov_cov(d, mu, nu)? / BigRational::from_integer(factorial(d as u32)))
}

/// Canonical partition function Z^d for the Bose gas weights E'(q) at sheet
/// count n: the weighted count of all branch configurations of total
/// colength d, with no Hurwitz factor.
pub fn bose_partition_function(n: u32, d: usize) -> Result<RationalFunction> {
    if d == 0 {
        return Err(Error::Invalid(
            "the d = 0 partition function is the empty normalization".into(),
        ));
    }
    let configs = branch_configurations(n, d as u32);
    if configs.is_empty() {
        return Err(Error::Invalid(format!(
            "no admissible branch configurations for n={n}, d={d}"
        )));
    }
    let g = WeightGenerator::EqPrime;
    let mut acc = RationalFunction::zero();
    for config in configs {
        let w = g.geometric_weight(&config.profiles)?;
        acc = acc.add(&w.scale_rat(&config.ordering_factor()));
    }
    Ok(acc)
}

/// Expectation value of the Bose-gas weighted Hurwitz number:
/// H^d_{E'(q)}(mu, nu) / Z^d.
pub fn bose_expectation(
    n: u32,
    d: usize,
    mu: &Partition,
    nu: &Partition,
) -> Result<RationalFunction> {
    if mu.weight() != n || nu.weight() != n {
        return Err(Error::WeightMismatch(format!(
            "expectation profiles must have weight {n}"
        )));
    }
    let z = bose_partition_function(n, d)?;
    if z.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let h = weighted_hurwitz_geometric(&WeightGenerator::EqPrime, d, mu, nu)?;
    h.div(&z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rational_function as parse;
    use crate::exact::{rat, rat_frac};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn plain_hurwitz_published_values_n_small() {
        assert_eq!(hurwitz_number(&[p(&[2]), p(&[2])]).unwrap(), rat_frac(1, 2));
        assert_eq!(hurwitz_number(&[p(&[3]), p(&[3])]).unwrap(), rat_frac(1, 3));
        assert_eq!(
            hurwitz_number(&[p(&[2, 1]), p(&[2, 1]), p(&[3])]).unwrap(),
            rat(1)
        );
        assert_eq!(
            hurwitz_number(&[p(&[2, 1, 1]), p(&[2, 1, 1]), p(&[2, 1, 1]), p(&[4])]).unwrap(),
            rat(4)
        );
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        assert!(hurwitz_number(&[p(&[2]), p(&[3])]).is_err());
    }

    #[test]
    fn profile_permutation_symmetry() {
        let a = hurwitz_number(&[p(&[3, 1]), p(&[2, 1, 1]), p(&[4])]).unwrap();
        let b = hurwitz_number(&[p(&[4]), p(&[3, 1]), p(&[2, 1, 1])]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn identity_profile_insertion_is_invariant() {
        for profiles in [
            vec![p(&[2]), p(&[2])],
            vec![p(&[3]), p(&[3])],
            vec![p(&[2, 1]), p(&[2, 1]), p(&[3])],
            vec![p(&[2, 2]), p(&[2, 1, 1]), p(&[4])],
        ] {
            let base = hurwitz_number(&profiles).unwrap();
            let n = profiles[0].weight();
            let mut padded = profiles.clone();
            padded.push(Partition::ones(n));
            assert_eq!(hurwitz_number(&padded).unwrap(), base);
        }
    }

    #[test]
    fn branch_configuration_counts() {
        // n=3, d=2: {(3)} and {(2,1),(2,1)}
        let configs = branch_configurations(3, 2);
        assert_eq!(configs.len(), 2);
        // d=0: the empty configuration only
        let empty = branch_configurations(3, 0);
        assert_eq!(empty.len(), 1);
        assert!(empty[0].profiles.is_empty());
    }

    #[test]
    fn ordering_factor_for_distinct_profiles_of_equal_colength() {
        // (3,1) and (2,2) both have colength 2 at n=4: two orderings
        let config = BranchConfig {
            profiles: vec![p(&[3, 1]), p(&[2, 2])],
        };
        assert_eq!(config.ordering_factor(), rat(2));
        // identical profiles: factor 1
        let config = BranchConfig {
            profiles: vec![p(&[2, 1]), p(&[2, 1])],
        };
        assert_eq!(config.ordering_factor(), rat(1));
        // distinct colengths: factor 1
        let config = BranchConfig {
            profiles: vec![p(&[4]), p(&[2, 1, 1])],
        };
        assert_eq!(config.ordering_factor(), rat(1));
    }

    #[test]
    fn quantum_table_n2_entry() {
        let v = weighted_hurwitz_geometric(&WeightGenerator::Eq, 1, &p(&[1, 1]), &p(&[2]))
            .unwrap();
        assert_eq!(v, parse("1/(2-2*q)").unwrap());
        let v = weighted_hurwitz_geometric(&WeightGenerator::Hq, 1, &p(&[1, 1]), &p(&[2]))
            .unwrap();
        assert_eq!(v, parse("1/(2-2*q)").unwrap());
        let v = weighted_hurwitz_geometric(&WeightGenerator::EqPrime, 1, &p(&[1, 1]), &p(&[2]))
            .unwrap();
        assert_eq!(v, parse("q/(2-2*q)").unwrap());
    }

    #[test]
    fn belyi_values() {
        // (E, 2, (1^3), (3)) = 1/3 by all three pipelines
        let mu = p(&[1, 1, 1]);
        let nu = p(&[3]);
        let third = RationalFunction::from_frac(1, 3);
        assert_eq!(
            weighted_hurwitz_geometric(&WeightGenerator::E, 2, &mu, &nu).unwrap(),
            third
        );
        assert_eq!(
            weighted_hurwitz_central(&WeightGenerator::E, 2, &mu, &nu).unwrap(),
            third
        );
        assert_eq!(
            weighted_hurwitz_brute(&WeightGenerator::E, 2, &mu, &nu).unwrap(),
            third
        );
    }

    #[test]
    fn central_exp_example() {
        // (Exp, 1, (2), (1,1)) with n=2 gives 1/2
        let v = weighted_hurwitz_central(&WeightGenerator::Exp, 1, &p(&[2]), &p(&[1, 1]))
            .unwrap();
        assert_eq!(v, RationalFunction::from_frac(1, 2));
        // d=0: the identity term gives delta_{mu,nu}/z_mu, matching the
        // geometric H(mu, nu)
        let v = weighted_hurwitz_central(&WeightGenerator::Eq, 0, &p(&[2, 1]), &p(&[2, 1]))
            .unwrap();
        assert_eq!(v, RationalFunction::from_frac(1, 2));
        assert_eq!(
            weighted_hurwitz_geometric(&WeightGenerator::Eq, 0, &p(&[2, 1]), &p(&[2, 1]))
                .unwrap(),
            RationalFunction::from_frac(1, 2)
        );
        let v = weighted_hurwitz_central(&WeightGenerator::Eq, 0, &p(&[2, 1]), &p(&[3]))
            .unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn path_count_examples() {
        // m^{(1)}: n=3 from cyc((3)) to cyc((2,1)): 6 paths
        let counts = monotone_path_counts(3, 1, &p(&[2, 1]), &p(&[3])).unwrap();
        assert_eq!(counts[&p(&[1])], 6);
        // strictly monotone two-step paths from identity to a 3-cycle: 2
        let counts = monotone_path_counts(3, 2, &p(&[3]), &p(&[1, 1, 1])).unwrap();
        assert_eq!(counts[&p(&[1, 1])], 2);
        assert_eq!(counts[&p(&[2])], 2);
    }

    #[test]
    fn brute_h_example() {
        let v = weighted_hurwitz_brute(&WeightGenerator::H, 1, &p(&[2]), &p(&[1, 1]))
            .unwrap();
        assert_eq!(v, RationalFunction::from_frac(1, 2));
    }

    #[test]
    fn three_pipelines_agree_quantum_n3() {
        let mu = p(&[1, 1, 1]);
        let nu = p(&[3]);
        let expect = parse("(1+2*q)/(3(1-q)(1-q^2))").unwrap();
        let geo = weighted_hurwitz_geometric(&WeightGenerator::Eq, 2, &mu, &nu).unwrap();
        let cen = weighted_hurwitz_central(&WeightGenerator::Eq, 2, &mu, &nu).unwrap();
        let bru = weighted_hurwitz_brute(&WeightGenerator::Eq, 2, &mu, &nu).unwrap();
        assert_eq!(geo, expect);
        assert_eq!(cen, expect);
        assert_eq!(bru, expect);
    }

    #[test]
    fn dual_sign_handling_h_n3() {
        // H (classical, weakly monotonic): value 2/3 with the configuration
        // signs carried inside the forgotten functions
        let mu = p(&[1, 1, 1]);
        let nu = p(&[3]);
        let expect = RationalFunction::from_frac(2, 3);
        assert_eq!(
            weighted_hurwitz_geometric(&WeightGenerator::H, 2, &mu, &nu).unwrap(),
            expect
        );
        assert_eq!(
            weighted_hurwitz_central(&WeightGenerator::H, 2, &mu, &nu).unwrap(),
            expect
        );
        assert_eq!(
            weighted_hurwitz_brute(&WeightGenerator::H, 2, &mu, &nu).unwrap(),
            expect
        );
    }

    #[test]
    fn qqp_two_species_agrees_with_central() {
        for (mu, nu, d) in [
            (p(&[1, 1]), p(&[2]), 1),
            (p(&[2]), p(&[2]), 2),
            (p(&[1, 1, 1]), p(&[3]), 2),
        ] {
            let geo =
                weighted_hurwitz_geometric(&WeightGenerator::Qqp, d, &mu, &nu).unwrap();
            let cen = weighted_hurwitz_central(&WeightGenerator::Qqp, d, &mu, &nu).unwrap();
            let bru = weighted_hurwitz_brute(&WeightGenerator::Qqp, d, &mu, &nu).unwrap();
            assert_eq!(geo, cen, "mu={mu} nu={nu} d={d}");
            assert_eq!(geo, bru, "mu={mu} nu={nu} d={d}");
        }
    }

    #[test]
    fn extra_generator_kinds_agree_across_pipelines() {
        // kinds outside the main acceptance set: dual-primed, powers,
        // explicit finite lists
        let mu = p(&[3]);
        let nu = p(&[3]);
        let finite = WeightGenerator::FiniteC(vec![
            RationalFunction::from_int(2),
            RationalFunction::from_frac(1, 3),
        ]);
        for g in [
            WeightGenerator::HqPrime,
            WeightGenerator::Ek(3),
            finite,
        ] {
            let geo = weighted_hurwitz_geometric(&g, 2, &mu, &nu).unwrap();
            let cen = weighted_hurwitz_central(&g, 2, &mu, &nu).unwrap();
            let bru = weighted_hurwitz_brute(&g, 2, &mu, &nu).unwrap();
            assert_eq!(geo, cen, "{g}");
            assert_eq!(geo, bru, "{g}");
        }
        // hand-counted: m^{(1,1)} = 2 and m^{(2)} = 8 paths from cyc((3)) to
        // cyc((3)), so F^2 for (1+z)^3 is (9*2 + 3*8)/6 = 7
        assert_eq!(
            weighted_hurwitz_brute(&WeightGenerator::Ek(3), 2, &mu, &nu).unwrap(),
            RationalFunction::from_int(7)
        );
    }

    #[test]
    fn symmetry_in_mu_nu() {
        for g in [WeightGenerator::Eq, WeightGenerator::H] {
            let a = weighted_hurwitz_geometric(&g, 2, &p(&[2, 1]), &p(&[3])).unwrap();
            let b = weighted_hurwitz_geometric(&g, 2, &p(&[3]), &p(&[2, 1])).unwrap();
            assert_eq!(a, b, "{g}");
        }
    }

    #[test]
    fn okounkov_examples() {
        // Cov_1((2),(1,1)) = H((2),(2),(1,1)) = 1/2
        assert_eq!(okounkov_cov(1, &p(&[2]), &p(&[1, 1])).unwrap(), rat_frac(1, 2));
        // Cov_2((1^3),(3)) = H((21),(21),(3)) = 1
        assert_eq!(okounkov_cov(2, &p(&[1, 1, 1]), &p(&[3])).unwrap(), rat(1));
        // d=0: the empty cover term
        assert_eq!(okounkov_cov(0, &p(&[2]), &p(&[2])).unwrap(), rat_frac(1, 2));
    }

    #[test]
    fn bose_gas_normalization_n2() {
        let z1 = bose_partition_function(2, 1).unwrap();
        assert_eq!(z1, parse("q/(1-q)").unwrap());
        let e = bose_expectation(2, 1, &p(&[1, 1]), &p(&[2])).unwrap();
        assert_eq!(e, RationalFunction::from_frac(1, 2));
        assert!(bose_partition_function(2, 0).is_err());
        assert!(bose_partition_function(1, 1).is_err());
    }
}
