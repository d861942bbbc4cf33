//! Dense symmetric-group machinery for the brute-force oracles: permutation
//! arithmetic, full group enumeration, and integer group-algebra vectors.
//! Only used for small n; the class-basis representation does the real work.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A permutation of {0, .., n-1} as an image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    /// Transposition (a b), 0-indexed.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut v: Vec<u8> = (0..n as u8).collect();
        v.swap(a, b);
        Perm(v)
    }

    /// Composition: (self * other)(x) = self(other(x)); `other` acts first.
    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            cycles.push(len);
        }
        Partition::from_unsorted(cycles)
    }
}

/// The full symmetric group S_n with an element index, for n small enough to
/// enumerate (bounded by the brute-force limit).
pub struct SymmetricGroup {
    pub n: usize,
    pub elems: Vec<Perm>,
    index: HashMap<Perm, usize>,
    cycle_types: Vec<Partition>,
}

/// Hard cap for full enumeration; 8! = 40320 elements.
pub const MAX_BRUTE_N: usize = 8;

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<SymmetricGroup> {
        if n > MAX_BRUTE_N {
            return Err(Error::BoundExceeded(format!(
                "S_{n} is too large for dense enumeration (max {MAX_BRUTE_N})"
            )));
        }
        // A recursive permutation builder keeps the order deterministic.
        let mut items: Vec<u8> = (0..n as u8).collect();
        let mut all = Vec::new();
        fn rec(items: &mut Vec<u8>, k: usize, all: &mut Vec<Vec<u8>>) {
            if k == items.len() {
                all.push(items.clone());
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                rec(items, k + 1, all);
                items.swap(k, i);
            }
        }
        rec(&mut items, 0, &mut all);
        let mut elems: Vec<Perm> = all.into_iter().map(Perm).collect();
        elems.sort_by(|a, b| a.0.cmp(&b.0));
        let index: HashMap<Perm, usize> = elems
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let cycle_types = elems.iter().map(|p| p.cycle_type()).collect();
        Ok(SymmetricGroup {
            n,
            elems,
            index,
            cycle_types,
        })
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn index_of(&self, p: &Perm) -> usize {
        self.index[p]
    }

    pub fn cycle_type_of(&self, idx: usize) -> &Partition {
        &self.cycle_types[idx]
    }

    /// Indices of all elements with the given cycle type.
    pub fn class_indices(&self, mu: &Partition) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| &self.cycle_types[i] == mu)
            .collect()
    }

    /// Class sum C_mu as a dense integer vector.
    pub fn class_sum(&self, mu: &Partition) -> GroupVec {
        let mut v = GroupVec::zero(self.order());
        for i in self.class_indices(mu) {
            v.0[i] = BigInt::from(1);
        }
        v
    }

    /// Jucys-Murphy element J_b = sum_{a < b} (a b), with b 1-indexed as in
    /// the usual convention (J_1 = 0).
    pub fn jucys_murphy(&self, b: usize) -> GroupVec {
        assert!(b >= 1 && b <= self.n);
        let mut v = GroupVec::zero(self.order());
        for a in 0..b - 1 {
            let t = Perm::transposition(self.n, a, b - 1);
            v.0[self.index_of(&t)] += 1;
        }
        v
    }

    /// Convolution product of group-algebra vectors (left factor times right:
    /// supports the same left-multiplication convention as paths).
    pub fn convolve(&self, a: &GroupVec, b: &GroupVec) -> GroupVec {
        let mut out = GroupVec::zero(self.order());
        for (i, ca) in a.0.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.0.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let prod = self.elems[i].mul(&self.elems[j]);
                let k = self.index_of(&prod);
                out.0[k] += ca * cb;
            }
        }
        out
    }

    /// Decompose a central vector over class sums; errors if not central.
    pub fn to_class_coefficients(&self, v: &GroupVec) -> Result<Vec<(Partition, BigInt)>> {
        let mut per_class: HashMap<Partition, BigInt> = HashMap::new();
        for (i, c) in v.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mu = self.cycle_types[i].clone();
            match per_class.get(&mu) {
                None => {
                    per_class.insert(mu, c.clone());
                }
                Some(existing) if existing == c => {}
                Some(existing) => {
                    return Err(Error::Invalid(format!(
                        "vector is not central: class {mu} has coefficients {existing} and {c}"
                    )));
                }
            }
        }
        // Also confirm uniformity across untouched members of touched classes.
        for (mu, coeff) in &per_class {
            for i in self.class_indices(mu) {
                if &v.0[i] != coeff {
                    return Err(Error::Invalid(format!(
                        "vector is not central on class {mu}"
                    )));
                }
            }
        }
        let mut out: Vec<(Partition, BigInt)> = per_class.into_iter().collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }
}

/// Dense integer group-algebra vector over a fixed SymmetricGroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupVec(pub Vec<BigInt>);

impl GroupVec {
    pub fn zero(order: usize) -> GroupVec {
        GroupVec(vec![BigInt::zero(); order])
    }

    pub fn identity(group: &SymmetricGroup) -> GroupVec {
        let mut v = GroupVec::zero(group.order());
        v.0[group.index_of(&Perm::identity(group.n))] = BigInt::from(1);
        v
    }

    pub fn add(&self, other: &GroupVec) -> GroupVec {
        GroupVec(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention_is_right_to_left() {
        // (13)(12): apply (12) first, then (13): 0 -> 1, 1 -> 2, 2 -> 0
        let t12 = Perm::transposition(3, 0, 1);
        let t13 = Perm::transposition(3, 0, 2);
        let g = t13.mul(&t12);
        assert_eq!(g.0, vec![1, 2, 0]);
        assert_eq!(g.cycle_type(), Partition::new(vec![3]).unwrap());
    }

    #[test]
    fn group_orders() {
        for n in 1..=5 {
            let g = SymmetricGroup::new(n).unwrap();
            let fact: usize = (1..=n).product();
            assert_eq!(g.order(), fact);
        }
        assert!(SymmetricGroup::new(MAX_BRUTE_N + 1).is_err());
    }

    #[test]
    fn class_sums_are_central() {
        let g = SymmetricGroup::new(4).unwrap();
        let mu = Partition::new(vec![2, 1, 1]).unwrap();
        let c = g.class_sum(&mu);
        assert_eq!(c.0.iter().filter(|x| !x.is_zero()).count(), 6);
        // commutes with a generator
        let t = {
            let mut v = GroupVec::zero(g.order());
            v.0[g.index_of(&Perm::transposition(4, 1, 3))] = BigInt::from(1);
            v
        };
        assert_eq!(g.convolve(&c, &t), g.convolve(&t, &c));
        let coeffs = g.to_class_coefficients(&c).unwrap();
        assert_eq!(coeffs, vec![(mu, BigInt::from(1))]);
    }

    #[test]
    fn jucys_murphy_sum_is_transposition_class() {
        let g = SymmetricGroup::new(4).unwrap();
        let mut total = GroupVec::zero(g.order());
        for b in 1..=4 {
            total = total.add(&g.jucys_murphy(b));
        }
        let expect = g.class_sum(&Partition::new(vec![2, 1, 1]).unwrap());
        assert_eq!(total, expect);
    }

    #[test]
    fn jucys_murphy_elements_commute() {
        let g = SymmetricGroup::new(5).unwrap();
        let j3 = g.jucys_murphy(3);
        let j5 = g.jucys_murphy(5);
        assert_eq!(g.convolve(&j3, &j5), g.convolve(&j5, &j3));
    }
}
