//! Irreducible characters of the symmetric group via the Murnaghan-Nakayama
//! recursion, and the Frobenius transform between Schur and power-sum
//! coordinates.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::partitions::{enumerate_partitions, factorial, Partition};

/// Default bound on n for full-table computations; override with HURWITZ_MAX_N.
pub const DEFAULT_MAX_N: u32 = 10;

pub fn max_n() -> u32 {
    static MAX_N: OnceLock<u32> = OnceLock::new();
    *MAX_N.get_or_init(|| {
        std::env::var("HURWITZ_MAX_N")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_N)
    })
}

/// Exact integer character table of S_n. Rows and columns are both indexed by
/// the partitions of n in reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: u32,
    pub order: Vec<Partition>,
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        let i = self.order.iter().position(|x| x == lambda)?;
        let j = self.order.iter().position(|x| x == mu)?;
        Some(&self.values[i][j])
    }
}

fn memo() -> &'static RwLock<HashMap<(Partition, Partition), BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<(Partition, Partition), BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Character chi_lambda(mu) of the irreducible representation lambda on the
/// conjugacy class mu. Exact integer; errors if |lambda| != |mu|.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(format!(
            "character({lambda}; {mu}): weights {} and {}",
            lambda.weight(),
            mu.weight()
        )));
    }
    Ok(mn_character(lambda, mu))
}

/// Murnaghan-Nakayama recursion on beta-numbers (first-column hook lengths).
fn mn_character(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    if let Some(v) = memo().read().expect("memo lock").get(&(lambda.clone(), mu.clone())) {
        return v.clone();
    }
    let r = mu.parts()[0];
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
    // beta numbers: lambda_i + (len - 1 - i), strictly decreasing
    let len = lambda.len();
    let betas: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
        .collect();
    let mut total = BigInt::zero();
    for (idx, &b) in betas.iter().enumerate() {
        let target = b - r as i64;
        if target < 0 || betas.contains(&target) {
            continue;
        }
        // Height of the border strip = number of beta values jumped over.
        let jumped = betas.iter().filter(|&&x| target < x && x < b).count();
        let mut new_betas = betas.clone();
        new_betas[idx] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        // Convert back to a partition.
        let m = new_betas.len();
        let parts: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (m - 1 - i) as i64) as u32)
            .collect();
        let sub = Partition::from_unsorted(parts);
        let term = mn_character(&sub, &rest);
        if jumped % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    memo()
        .write()
        .expect("memo lock")
        .insert((lambda.clone(), mu.clone()), total.clone());
    total
}

fn table_cache() -> &'static RwLock<HashMap<u32, std::sync::Arc<CharacterTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, std::sync::Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Full character table of S_n; cached. Errors above the configured bound.
pub fn character_table(n: u32) -> Result<std::sync::Arc<CharacterTable>> {
    if n > max_n() {
        return Err(Error::BoundExceeded(format!(
            "character table for n={n} exceeds bound {}",
            max_n()
        )));
    }
    if let Some(t) = table_cache().read().expect("table lock").get(&n) {
        return Ok(t.clone());
    }
    let order = enumerate_partitions(n);
    let values: Vec<Vec<BigInt>> = order
        .iter()
        .map(|lam| order.iter().map(|mu| mn_character(lam, mu)).collect())
        .collect();
    let table = std::sync::Arc::new(CharacterTable { n, order, values });
    table_cache()
        .write()
        .expect("table lock")
        .insert(n, table.clone());
    Ok(table)
}

/// Dimension of the irreducible representation lambda.
pub fn dimension(lambda: &Partition) -> BigInt {
    factorial(lambda.weight()) / lambda.hook_product()
}

/// Coefficients of s_lambda in the power-sum basis: mu -> chi_lambda(mu)/z_mu.
pub fn schur_in_powersums(lambda: &Partition) -> BTreeMap<Partition, Rat> {
    let mut out = BTreeMap::new();
    for mu in enumerate_partitions(lambda.weight()) {
        let chi = mn_character(lambda, &mu);
        if chi.is_zero() {
            continue;
        }
        out.insert(mu.clone(), BigRational::new(chi, mu.z_order()));
    }
    out
}
