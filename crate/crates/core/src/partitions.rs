//! Integer partitions and their numerology: hooks, contents, colength,
//! stabilizer orders, automorphism orders, Pochhammer symbols.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, RationalFunction, Var};

/// A partition: weakly decreasing positive integer parts. The empty list is
/// the unique partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given parts, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition (n); empty for n = 0.
    pub fn row(n: u32) -> Partition {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The identity cycle type (1^n).
    pub fn ones(n: u32) -> Partition {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    /// One part of size k padded by ones to total weight n. Requires k <= n.
    pub fn hook_type(k: u32, n: u32) -> Partition {
        assert!(k >= 1 && k <= n);
        let mut parts = vec![k];
        parts.extend(std::iter::repeat_n(1, (n - k) as usize));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Colength: weight minus length.
    pub fn colength(&self) -> u32 {
        self.weight() - self.len() as u32
    }

    pub fn is_identity_type(&self) -> bool {
        self.colength() == 0
    }

    /// Multiplicity of each part value, as (value, multiplicity) pairs.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            let count = self.parts.iter().filter(|&&p| p as usize > j).count() as u32;
            parts.push(count);
        }
        Partition { parts }
    }

    /// Contents j - i over cells (i, j) in row-major order (0-indexed rows
    /// and columns, so the corner cell has content 0).
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p as i64 {
                out.push(j - i as i64);
            }
        }
        out
    }

    /// Hook length product h(lambda).
    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        let mut h = BigInt::one();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p as usize {
                let arm = p as usize - 1 - j;
                let leg = conj.parts[j] as usize - 1 - i;
                h *= BigInt::from(arm + leg + 1);
            }
        }
        h
    }

    /// Order of the centralizer z_mu = prod i^{m_i} m_i!.
    pub fn z_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (value, mult) in self.multiplicities() {
            for _ in 0..mult {
                z *= BigInt::from(value);
            }
            z *= factorial(mult);
        }
        z
    }

    /// Order of the automorphism group prod m_i!.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m))
            .product()
    }

    /// Number of elements of this cycle type in S_n.
    pub fn class_size(&self) -> BigInt {
        factorial(self.weight()) / self.z_order()
    }

    /// Pochhammer symbol (u)_lambda = prod over cells of (u + j - i).
    pub fn pochhammer(&self, u: &RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::one();
        for c in self.contents() {
            acc = acc.mul(&u.add(&RationalFunction::from_int(c)));
        }
        acc
    }

    /// All distinct sequences obtainable by permuting the parts.
    pub fn distinct_arrangements(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.parts.len());
        let mut pool = self.multiplicities();
        fn rec(pool: &mut Vec<(u32, u32)>, current: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
            if current.len() == k {
                out.push(current.clone());
                return;
            }
            for i in 0..pool.len() {
                if pool[i].1 == 0 {
                    continue;
                }
                pool[i].1 -= 1;
                current.push(pool[i].0);
                rec(pool, current, k, out);
                current.pop();
                pool[i].1 += 1;
            }
        }
        rec(&mut pool, &mut current, self.parts.len(), &mut out);
        out
    }
}

pub fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n as u64 {
        f *= BigInt::from(k);
    }
    f
}

/// All partitions of n, exactly once, in reverse lexicographic order:
/// (n) first, (1^n) last.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max);
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// Number of partitions of n.
pub fn partition_count(n: u32) -> usize {
    enumerate_partitions(n).len()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string is the zero partition.
    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part `{t}` in `{s}`")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// u as a rational function, for Pochhammer arguments.
pub fn u_var() -> RationalFunction {
    RationalFunction::from_poly(MultiPoly::var(Var::U))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        let four = enumerate_partitions(4);
        let expect: Vec<Partition> = vec![
            p(&[4]),
            p(&[3, 1]),
            p(&[2, 2]),
            p(&[2, 1, 1]),
            p(&[1, 1, 1, 1]),
        ];
        assert_eq!(four, expect);
        assert_eq!(partition_count(5), 7);
        // brute-force oracle: count weakly decreasing sequences by recursion
        fn count(n: u32, max: u32) -> usize {
            if n == 0 {
                return 1;
            }
            (1..=n.min(max)).map(|k| count(n - k, k)).sum()
        }
        for n in 0..=12 {
            assert_eq!(partition_count(n), count(n, n), "n={n}");
        }
    }

    #[test]
    fn colength_examples() {
        assert_eq!(p(&[1, 1, 1]).colength(), 0);
        assert_eq!(p(&[3]).colength(), 2);
        assert_eq!(p(&[2, 1, 1]).colength(), 1);
    }

    #[test]
    fn z_order_examples() {
        assert_eq!(p(&[1, 1, 1]).z_order(), BigInt::from(6));
        assert_eq!(p(&[3]).z_order(), BigInt::from(3));
        assert_eq!(p(&[2, 1]).z_order(), BigInt::from(2));
    }

    #[test]
    fn classes_partition_the_group() {
        for n in 1..=9 {
            let total: BigInt = enumerate_partitions(n)
                .iter()
                .map(|mu| mu.class_size())
                .sum();
            assert_eq!(total, factorial(n), "n={n}");
        }
    }

    #[test]
    fn hook_products() {
        assert_eq!(p(&[1]).hook_product(), BigInt::from(1));
        assert_eq!(p(&[2, 1]).hook_product(), BigInt::from(3));
        assert_eq!(p(&[2, 2]).hook_product(), BigInt::from(12));
    }

    #[test]
    fn hook_product_times_tableaux_is_factorial() {
        // standard Young tableaux counted by brute-force growth
        fn syt(shape: &Partition) -> u64 {
            if shape.is_empty() {
                return 1;
            }
            let mut total = 0;
            let parts = shape.parts();
            for i in 0..parts.len() {
                let removable =
                    parts[i] >= 1 && (i + 1 == parts.len() || parts[i] > parts[i + 1]);
                if removable {
                    let mut smaller = parts.to_vec();
                    smaller[i] -= 1;
                    total += syt(&Partition::from_unsorted(smaller));
                }
            }
            total
        }
        for n in 1..=7 {
            for lam in enumerate_partitions(n) {
                let dim = BigInt::from(syt(&lam));
                assert_eq!(lam.hook_product() * dim, factorial(n), "lambda={lam}");
            }
        }
    }

    #[test]
    fn aut_orders() {
        assert_eq!(p(&[1, 1]).aut_order(), BigInt::from(2));
        assert_eq!(p(&[2, 1]).aut_order(), BigInt::from(1));
        assert_eq!(p(&[2, 2, 1, 1, 1]).aut_order(), BigInt::from(12));
    }

    #[test]
    fn contents_examples() {
        assert_eq!(p(&[1]).contents(), vec![0]);
        assert_eq!(p(&[3]).contents(), vec![0, 1, 2]);
        assert_eq!(p(&[2, 2]).contents(), vec![0, 1, -1, 0]);
    }

    #[test]
    fn conjugation_involution_and_contents() {
        for n in 0..=8 {
            for lam in enumerate_partitions(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                let mut c: Vec<i64> = lam.contents();
                let mut cc: Vec<i64> = lam.conjugate().contents().iter().map(|x| -x).collect();
                c.sort_unstable();
                cc.sort_unstable();
                assert_eq!(c, cc);
                assert_eq!(lam.colength() + lam.len() as u32, lam.weight());
            }
        }
    }

    #[test]
    fn pochhammer_examples() {
        let u = u_var();
        let u_times_u_plus_1 = u.mul(&u.add(&RationalFunction::from_int(1)));
        assert_eq!(p(&[2]).pochhammer(&u), u_times_u_plus_1);
        let u_times_u_minus_1 = u.mul(&u.sub(&RationalFunction::from_int(1)));
        assert_eq!(p(&[1, 1]).pochhammer(&u), u_times_u_minus_1);
        assert!(Partition::empty().pochhammer(&u).is_one());
    }

    #[test]
    fn string_roundtrip() {
        let lam: Partition = "4,2,1".parse().unwrap();
        assert_eq!(lam, p(&[4, 2, 1]));
        assert_eq!(lam.to_string(), "4,2,1");
        let empty: Partition = "".parse().unwrap();
        assert!(empty.is_empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
    }

    #[test]
    fn distinct_arrangements_count() {
        let lam = p(&[2, 1, 1]);
        let arr = lam.distinct_arrangements();
        assert_eq!(arr.len(), 3);
        assert!(arr.contains(&vec![2, 1, 1]));
        assert!(arr.contains(&vec![1, 2, 1]));
        assert!(arr.contains(&vec![1, 1, 2]));
    }
}
