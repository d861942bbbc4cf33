//! Transition data between the six classical bases at bounded degree, with
//! the power sums as pivot. All matrices are exact rational and cached per
//! degree.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::character;
use crate::exact::{rat, Rat};
use crate::partitions::{enumerate_partitions, Partition};

/// Coefficients in the power-sum basis, mu -> rational.
pub type PCoords = BTreeMap<Partition, Rat>;

/// Union of parts: p_mu * p_nu = p_{mu u nu}.
pub fn join(mu: &Partition, nu: &Partition) -> Partition {
    let mut parts = mu.parts().to_vec();
    parts.extend_from_slice(nu.parts());
    Partition::from_unsorted(parts)
}

pub fn p_product(a: &PCoords, b: &PCoords) -> PCoords {
    let mut out = PCoords::new();
    for (mu, ca) in a {
        for (nu, cb) in b {
            let key = join(mu, nu);
            let add = ca * cb;
            let entry = out.entry(key).or_insert_with(Rat::zero);
            *entry += add;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Parity sign of the omega involution on p_mu: (-1)^(|mu| - l(mu)).
pub fn omega_sign(mu: &Partition) -> Rat {
    if mu.colength().is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

pub fn apply_omega(coords: &PCoords) -> PCoords {
    coords
        .iter()
        .map(|(mu, c)| (mu.clone(), c * omega_sign(mu)))
        .collect()
}

/// e_k in the p basis: sum over mu of k of (-1)^(k - l(mu)) p_mu / z_mu.
pub fn e_to_p(k: u32) -> PCoords {
    enumerate_partitions(k)
        .into_iter()
        .map(|mu| {
            let sign = omega_sign(&mu);
            let z = BigRational::from_integer(mu.z_order());
            (mu, sign / z)
        })
        .collect()
}

/// h_k in the p basis: sum over mu of k of p_mu / z_mu.
pub fn h_to_p(k: u32) -> PCoords {
    enumerate_partitions(k)
        .into_iter()
        .map(|mu| {
            let z = BigRational::from_integer(mu.z_order());
            (mu, BigRational::one() / z)
        })
        .collect()
}

pub fn e_lambda_to_p(lambda: &Partition) -> PCoords {
    let mut acc: PCoords = [(Partition::empty(), rat(1))].into();
    for &part in lambda.parts() {
        acc = p_product(&acc, &e_to_p(part));
    }
    acc
}

pub fn h_lambda_to_p(lambda: &Partition) -> PCoords {
    let mut acc: PCoords = [(Partition::empty(), rat(1))].into();
    for &part in lambda.parts() {
        acc = p_product(&acc, &h_to_p(part));
    }
    acc
}

/// s_lambda in the p basis (Frobenius character formula).
pub fn s_to_p(lambda: &Partition) -> PCoords {
    crate::characters::schur_in_powersums(lambda)
        .into_iter()
        .collect()
}

/// Per-degree transition tables.
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    /// R[i][j] = coefficient of m_{parts[j]} in p_{parts[i]}.
    pub p_in_m: Vec<Vec<Rat>>,
    /// Column j = p-coordinates of m_{parts[j]}.
    pub m_in_p: Vec<Vec<Rat>>,
    /// Column j = e-coordinates of the p-basis element p_{parts[j]}.
    pub p_in_e: Vec<Vec<Rat>>,
    /// Column j = h-coordinates of p_{parts[j]}.
    pub p_in_h: Vec<Vec<Rat>>,
}

fn degree_cache() -> &'static RwLock<HashMap<u32, Arc<DegreeTables>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub fn degree_tables(d: u32) -> Arc<DegreeTables> {
    if let Some(t) = degree_cache().read().expect("lock").get(&d) {
        return t.clone();
    }
    let parts = enumerate_partitions(d);
    let k = parts.len();
    let mut p_in_m = vec![vec![Rat::zero(); k]; k];
    for (i, mu) in parts.iter().enumerate() {
        for (j, lam) in parts.iter().enumerate() {
            p_in_m[i][j] = rat(monomial_coeff_in_powersum(mu, lam) as i64);
        }
    }
    // m_lambda in p: solve R^T x = unit vector.
    let rt = transpose(&p_in_m);
    let rt_inv = invert(&rt).expect("p-to-m transition is invertible");
    let m_in_p = rt_inv;
    // p_mu in e: invert the matrix whose columns are e_lambda in p.
    let mut e_cols = vec![vec![Rat::zero(); k]; k];
    for (j, lam) in parts.iter().enumerate() {
        let coords = e_lambda_to_p(lam);
        for (i, mu) in parts.iter().enumerate() {
            if let Some(c) = coords.get(mu) {
                e_cols[i][j] = c.clone();
            }
        }
    }
    let p_in_e = invert(&e_cols).expect("e-to-p transition is invertible");
    let mut h_cols = vec![vec![Rat::zero(); k]; k];
    for (j, lam) in parts.iter().enumerate() {
        let coords = h_lambda_to_p(lam);
        for (i, mu) in parts.iter().enumerate() {
            if let Some(c) = coords.get(mu) {
                h_cols[i][j] = c.clone();
            }
        }
    }
    let p_in_h = invert(&h_cols).expect("h-to-p transition is invertible");
    let tables = Arc::new(DegreeTables {
        parts,
        p_in_m,
        m_in_p,
        p_in_e,
        p_in_h,
    });
    degree_cache()
        .write()
        .expect("lock")
        .insert(d, tables.clone());
    tables
}

/// m_lambda in the p basis.
pub fn m_to_p(lambda: &Partition) -> PCoords {
    let t = degree_tables(lambda.weight());
    let j = t
        .parts
        .iter()
        .position(|x| x == lambda)
        .expect("partition of its own weight");
    let mut out = PCoords::new();
    for (i, mu) in t.parts.iter().enumerate() {
        let c = t.m_in_p[i][j].clone();
        if !c.is_zero() {
            out.insert(mu.clone(), c);
        }
    }
    out
}

/// f_lambda in the p basis: omega twist of m_lambda.
pub fn f_to_p(lambda: &Partition) -> PCoords {
    apply_omega(&m_to_p(lambda))
}

/// Number of ways to assign the parts of mu to the (distinct, ordered) slots
/// of lambda so each slot sums exactly to its part: the coefficient of the
/// monomial x1^l1 ... xk^lk in p_mu.
pub fn monomial_coeff_in_powersum(mu: &Partition, lambda: &Partition) -> u64 {
    if mu.weight() != lambda.weight() {
        return 0;
    }
    let parts = mu.parts();
    let mut capacity: Vec<u32> = lambda.parts().to_vec();
    fn rec(parts: &[u32], idx: usize, capacity: &mut Vec<u32>) -> u64 {
        if idx == parts.len() {
            return if capacity.iter().all(|&c| c == 0) { 1 } else { 0 };
        }
        let part = parts[idx];
        let mut total = 0;
        for s in 0..capacity.len() {
            if capacity[s] >= part {
                capacity[s] -= part;
                total += rec(parts, idx + 1, capacity);
                capacity[s] += part;
            }
        }
        total
    }
    rec(parts, 0, &mut capacity)
}

fn transpose(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

/// Gaussian elimination over the rationals.
fn invert(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { rat(1) } else { rat(0) })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pv = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &pv;
            inv[col][j] = &inv[col][j] / &pv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let t = &factor * &a[col][j];
                a[r][j] = &a[r][j] - t;
                let t2 = &factor * &inv[col][j];
                inv[r][j] = &inv[r][j] - t2;
            }
        }
    }
    Some(inv)
}

/// chi_lambda(mu) as a convenience wrapper used by basis changes.
pub fn chi(lambda: &Partition, mu: &Partition) -> Rat {
    BigRational::from_integer(character(lambda, mu).expect("equal weights"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn newton_identity_degree2() {
        // e_2 = (p_1^2 - p_2)/2
        let e2 = e_to_p(2);
        assert_eq!(e2[&p(&[1, 1])], crate::exact::rat_frac(1, 2));
        assert_eq!(e2[&p(&[2])], crate::exact::rat_frac(-1, 2));
        // h_2 = (p_1^2 + p_2)/2
        let h2 = h_to_p(2);
        assert_eq!(h2[&p(&[2])], crate::exact::rat_frac(1, 2));
    }

    #[test]
    fn powersum_in_monomials() {
        // p_2 = m_2 (one slot), and p_{(1,1)} = m_{(1,1)}*2 + m_{(2)}*0 ... in
        // fact p_1^2 = m_2 + 2 m_{11}
        assert_eq!(monomial_coeff_in_powersum(&p(&[2]), &p(&[2])), 1);
        assert_eq!(monomial_coeff_in_powersum(&p(&[2]), &p(&[1, 1])), 0);
        assert_eq!(monomial_coeff_in_powersum(&p(&[1, 1]), &p(&[2])), 1);
        assert_eq!(monomial_coeff_in_powersum(&p(&[1, 1]), &p(&[1, 1])), 2);
    }

    #[test]
    fn m_to_p_inverts_p_to_m() {
        // m_{(2)} = p_2? No: m_2 = p_2. And m_{(1,1)} = (p_1^2 - p_2)/2 = e_2.
        let m2 = m_to_p(&p(&[2]));
        assert_eq!(m2.len(), 1);
        assert_eq!(m2[&p(&[2])], rat(1));
        let m11 = m_to_p(&p(&[1, 1]));
        assert_eq!(m11[&p(&[1, 1])], crate::exact::rat_frac(1, 2));
        assert_eq!(m11[&p(&[2])], crate::exact::rat_frac(-1, 2));
    }

    #[test]
    fn schur_via_transition_matches_characters() {
        for lam in enumerate_partitions(4) {
            let coords = s_to_p(&lam);
            for (mu, c) in coords {
                let expect =
                    BigRational::new(character(&lam, &mu).unwrap(), mu.z_order());
                assert_eq!(c, expect);
            }
        }
    }

    #[test]
    fn forgotten_examples() {
        // f_{(2)} = -p_2 and f_{(1,1)} = h_2
        let f2 = f_to_p(&p(&[2]));
        assert_eq!(f2.len(), 1);
        assert_eq!(f2[&p(&[2])], rat(-1));
        let f11 = f_to_p(&p(&[1, 1]));
        assert_eq!(f11, h_to_p(2));
    }
}
