//! The center of the symmetric group algebra in the class-sum basis:
//! structure constants, Jucys-Murphy symmetric-function elements, truncated
//! central weight elements G(z, J), and orthogonal idempotents.

pub mod perm;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::characters::{character_table, dimension, max_n};
use crate::error::{Error, Result};
use crate::exact::{Rat, RationalFunction};
use crate::partitions::{enumerate_partitions, factorial, Partition};
use crate::symfun::{convert, Basis, SymFunExpansion};
use crate::weights::WeightGenerator;

pub use perm::{GroupVec, Perm, SymmetricGroup, MAX_BRUTE_N};

/// Element of Z(C[S_n]) in the class-sum basis; absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElement {
    pub n: u32,
    pub coeffs: BTreeMap<Partition, RationalFunction>,
}

impl CentralElement {
    pub fn zero(n: u32) -> CentralElement {
        CentralElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The algebra identity C_(1^n).
    pub fn identity(n: u32) -> CentralElement {
        CentralElement::class(n, &Partition::ones(n)).expect("identity class")
    }

    /// A single class sum C_mu.
    pub fn class(n: u32, mu: &Partition) -> Result<CentralElement> {
        if mu.weight() != n {
            return Err(Error::WeightMismatch(format!(
                "class {mu} does not have weight {n}"
            )));
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mu.clone(), RationalFunction::one());
        Ok(CentralElement { n, coeffs })
    }

    pub fn coeff(&self, mu: &Partition) -> RationalFunction {
        self.coeffs
            .get(mu)
            .cloned()
            .unwrap_or_else(RationalFunction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &CentralElement) -> Result<CentralElement> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            let entry = out
                .coeffs
                .entry(mu.clone())
                .or_insert_with(RationalFunction::zero);
            *entry = entry.add(c);
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn scale(&self, f: &RationalFunction) -> CentralElement {
        if f.is_zero() {
            return CentralElement::zero(self.n);
        }
        CentralElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(mu, c)| (mu.clone(), c.mul(f)))
                .collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rat) -> CentralElement {
        self.scale(&RationalFunction::from_rat(r.clone()))
    }

    fn check_same_n(&self, other: &CentralElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::WeightMismatch(format!(
                "central elements live in different group algebras: n={} vs n={}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Product using the structure constants of the class basis.
    pub fn mul(&self, other: &CentralElement) -> Result<CentralElement> {
        self.check_same_n(other)?;
        let table = structure_constants(self.n)?;
        let mut out = CentralElement::zero(self.n);
        for (mu, a) in &self.coeffs {
            let i = table.index(mu);
            for (nu, b) in &other.coeffs {
                let j = table.index(nu);
                let ab = a.mul(b);
                if ab.is_zero() {
                    continue;
                }
                for (k, c) in &table.products[i][j] {
                    let term = ab.scale_rat(&BigRational::from_integer(c.clone()));
                    let key = table.classes[*k].clone();
                    let entry = out
                        .coeffs
                        .entry(key)
                        .or_insert_with(RationalFunction::zero);
                    *entry = entry.add(&term);
                }
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

/// Structure constants of Z(C[S_n]) in the class basis.
pub struct StructureTable {
    pub n: u32,
    pub classes: Vec<Partition>,
    class_index: HashMap<Partition, usize>,
    /// products[i][j] = sparse list of (k, c) with C_i C_j = sum c C_k.
    pub products: Vec<Vec<Vec<(usize, BigInt)>>>,
}

impl StructureTable {
    pub fn index(&self, mu: &Partition) -> usize {
        self.class_index[mu]
    }

    /// Coefficient of C_rho in C_mu C_nu.
    pub fn coefficient(&self, mu: &Partition, nu: &Partition, rho: &Partition) -> BigInt {
        let i = self.index(mu);
        let j = self.index(nu);
        let k = self.index(rho);
        self.products[i][j]
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }
}

fn structure_cache() -> &'static RwLock<HashMap<u32, Arc<StructureTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<StructureTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Structure constants via the character formula
/// c^rho_{mu nu} = |cyc(mu)||cyc(nu)|/n! * sum_lambda chi(mu)chi(nu)chi(rho)/dim.
pub fn structure_constants(n: u32) -> Result<Arc<StructureTable>> {
    if n > max_n() {
        return Err(Error::BoundExceeded(format!(
            "structure constants for n={n} exceed bound {}",
            max_n()
        )));
    }
    if let Some(t) = structure_cache().read().expect("lock").get(&n) {
        return Ok(t.clone());
    }
    let table = character_table(n)?;
    let classes = table.order.clone();
    let k = classes.len();
    let nfact = BigRational::from_integer(factorial(n));
    let class_sizes: Vec<BigRational> = classes
        .iter()
        .map(|mu| BigRational::from_integer(mu.class_size()))
        .collect();
    let dims: Vec<BigRational> = classes
        .iter()
        .map(|lam| BigRational::from_integer(dimension(lam)))
        .collect();
    let mut products = vec![vec![Vec::new(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut row = Vec::new();
            for r in 0..k {
                let mut acc = BigRational::zero();
                for (l, dim) in dims.iter().enumerate() {
                    let prod = BigRational::from_integer(
                        &table.values[l][i] * &table.values[l][j] * &table.values[l][r],
                    );
                    acc += prod / dim;
                }
                let c = &class_sizes[i] * &class_sizes[j] / &nfact * acc;
                debug_assert!(c.is_integer(), "structure constant must be integral");
                let c = c.to_integer();
                if !c.is_zero() {
                    row.push((r, c));
                }
            }
            products[i][j] = row;
        }
    }
    let class_index = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    let t = Arc::new(StructureTable {
        n,
        classes,
        class_index,
        products,
    });
    structure_cache()
        .write()
        .expect("lock")
        .insert(n, t.clone());
    Ok(t)
}

/// Structure constants by direct group convolution; the n <= 7 oracle.
pub fn structure_constants_by_convolution(n: u32) -> Result<StructureTable> {
    let group = SymmetricGroup::new(n as usize)?;
    let classes = enumerate_partitions(n);
    let k = classes.len();
    let mut products = vec![vec![Vec::new(); k]; k];
    // Representative-based counting: the coefficient of C_rho in C_mu C_nu is
    // the number of ways to write a fixed g in cyc(rho) as a*b with a in
    // cyc(mu), b in cyc(nu).
    for (r, rho) in classes.iter().enumerate() {
        let g_idx = group.class_indices(rho)[0];
        let g = group.elems[g_idx].clone();
        for (i, mu) in classes.iter().enumerate() {
            for (j, nu) in classes.iter().enumerate() {
                let mut count = BigInt::zero();
                for a_idx in group.class_indices(mu) {
                    // a * b = g  =>  b = a^{-1} g
                    let a = &group.elems[a_idx];
                    let mut inv = vec![0u8; group.n];
                    for (x, &y) in a.0.iter().enumerate() {
                        inv[y as usize] = x as u8;
                    }
                    let b = Perm(inv).mul(&g);
                    if &b.cycle_type() == nu {
                        count += 1;
                    }
                }
                if !count.is_zero() {
                    products[i][j].push((r, count));
                }
            }
        }
    }
    // transpose the sparse layout built above: we filled [i][j] entries per r
    for row in products.iter_mut() {
        for cell in row.iter_mut() {
            cell.sort_by_key(|(k, _)| *k);
        }
    }
    let class_index = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    Ok(StructureTable {
        n,
        classes,
        class_index,
        products,
    })
}

/// Jucys' theorem: e_k(J) = sum over classes of colength k of C_mu.
pub fn jucys_elementary(n: u32, k: u32) -> Result<CentralElement> {
    if n == 0 || k > n - 1 {
        return Err(Error::BoundExceeded(format!(
            "e_{k}(J) needs 0 <= k <= n-1 = {}",
            n.saturating_sub(1)
        )));
    }
    let mut out = CentralElement::zero(n);
    for mu in enumerate_partitions(n) {
        if mu.colength() == k {
            out.coeffs.insert(mu, RationalFunction::one());
        }
    }
    Ok(out)
}

/// e_k over the Jucys-Murphy elements expanded in the full group algebra;
/// the brute-force side of the dual verification path.
pub fn jucys_elementary_by_expansion(n: u32, k: u32) -> Result<CentralElement> {
    let group = SymmetricGroup::new(n as usize)?;
    // e_k of (J_1, .., J_n); J_1 = 0 so only subsets of {2..n} matter.
    let mut acc = GroupVec::zero(group.order());
    let values: Vec<usize> = (2..=n as usize).collect();
    let mut subset = Vec::new();
    fn rec(
        group: &SymmetricGroup,
        values: &[usize],
        start: usize,
        k: usize,
        subset: &mut Vec<usize>,
        acc: &mut GroupVec,
    ) {
        if subset.len() == k {
            let mut prod = GroupVec::identity(group);
            for &b in subset.iter() {
                prod = group.convolve(&prod, &group.jucys_murphy(b));
            }
            *acc = acc.add(&prod);
            return;
        }
        for i in start..values.len() {
            subset.push(values[i]);
            rec(group, values, i + 1, k, subset, acc);
            subset.pop();
        }
    }
    rec(&group, &values, 0, k as usize, &mut subset, &mut acc);
    central_from_group_vec(n, &group, &acc)
}

fn central_from_group_vec(
    n: u32,
    group: &SymmetricGroup,
    v: &GroupVec,
) -> Result<CentralElement> {
    let mut out = CentralElement::zero(n);
    for (mu, c) in group.to_class_coefficients(v)? {
        out.coeffs.insert(
            mu,
            RationalFunction::from_rat(BigRational::from_integer(c)),
        );
    }
    Ok(out)
}

fn jm_monomial_cache() -> &'static RwLock<HashMap<(u32, Partition), CentralElement>> {
    static CACHE: OnceLock<RwLock<HashMap<(u32, Partition), CentralElement>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The central element m_lambda(J), computed by converting m_lambda to the
/// elementary basis and multiplying Jucys class sums.
pub fn jm_monomial(n: u32, lambda: &Partition) -> Result<CentralElement> {
    if let Some(v) = jm_monomial_cache()
        .read()
        .expect("lock")
        .get(&(n, lambda.clone()))
    {
        return Ok(v.clone());
    }
    let expansion = convert(&SymFunExpansion::single(Basis::M, lambda.clone()), Basis::E)?;
    let mut out = CentralElement::zero(n);
    for (kappa, coeff) in &expansion.coeffs {
        // e_kappa(J) = prod e_{kappa_i}(J); vanishes if any part exceeds n-1.
        if kappa.parts().iter().any(|&part| part > n.saturating_sub(1)) {
            continue;
        }
        let mut prod = CentralElement::identity(n);
        for &part in kappa.parts() {
            prod = prod.mul(&jucys_elementary(n, part)?)?;
        }
        out = out.add(&prod.scale(coeff))?;
    }
    jm_monomial_cache()
        .write()
        .expect("lock")
        .insert((n, lambda.clone()), out.clone());
    Ok(out)
}

/// m_lambda(J) by direct group-algebra evaluation of the defining
/// symmetrized sum; the n <= 6 oracle.
pub fn jm_monomial_by_expansion(n: u32, lambda: &Partition) -> Result<CentralElement> {
    let group = SymmetricGroup::new(n as usize)?;
    let mut acc = GroupVec::zero(group.order());
    let k = lambda.len();
    let positions: Vec<usize> = (1..=n as usize).collect();
    // over ordered b-subsets (strictly increasing) and distinct arrangements
    let mut support = Vec::new();
    fn rec(
        group: &SymmetricGroup,
        positions: &[usize],
        start: usize,
        k: usize,
        lambda: &Partition,
        support: &mut Vec<usize>,
        acc: &mut GroupVec,
    ) {
        if support.len() == k {
            for beta in lambda.distinct_arrangements() {
                let mut prod = GroupVec::identity(group);
                for (b, e) in support.iter().zip(beta.iter()) {
                    let j = group.jucys_murphy(*b);
                    for _ in 0..*e {
                        prod = group.convolve(&prod, &j);
                    }
                }
                *acc = acc.add(&prod);
            }
            return;
        }
        for i in start..positions.len() {
            support.push(positions[i]);
            rec(group, positions, i + 1, k, lambda, support, acc);
            support.pop();
        }
    }
    rec(&group, &positions, 0, k, lambda, &mut support, &mut acc);
    central_from_group_vec(n, &group, &acc)
}

/// A z-truncated series of central elements, term d carrying the z^d part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeriesCentral {
    pub n: u32,
    pub terms: Vec<CentralElement>,
}

impl ZSeriesCentral {
    pub fn cutoff(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, d: usize) -> &CentralElement {
        &self.terms[d]
    }

    /// Apply the series to a central element, degree by degree.
    pub fn apply(&self, x: &CentralElement) -> Result<Vec<CentralElement>> {
        self.terms.iter().map(|t| t.mul(x)).collect()
    }
}

/// The central weight element G(z, J) = sum_lambda G_lambda m_lambda(J)
/// z^|lambda|, truncated at z-degree `cutoff`.
pub fn central_weight_element(
    g: &WeightGenerator,
    n: u32,
    cutoff: usize,
) -> Result<ZSeriesCentral> {
    let mut terms = Vec::with_capacity(cutoff + 1);
    for d in 0..=cutoff as u32 {
        let mut term = CentralElement::zero(n);
        for lambda in enumerate_partitions(d) {
            let weight = g.path_weight(&lambda);
            if weight.is_zero() {
                continue;
            }
            let m = jm_monomial(n, &lambda)?;
            term = term.add(&m.scale(&weight))?;
        }
        terms.push(term);
    }
    Ok(ZSeriesCentral { n, terms })
}

/// Orthogonal idempotent F_lambda = h(lambda)^{-1} sum_mu chi_lambda(mu) C_mu.
pub fn orthogonal_idempotent(lambda: &Partition) -> Result<CentralElement> {
    let n = lambda.weight();
    let h = BigRational::from_integer(lambda.hook_product());
    let mut out = CentralElement::zero(n);
    for mu in enumerate_partitions(n) {
        let chi = crate::characters::character(lambda, &mu)?;
        if chi.is_zero() {
            continue;
        }
        out.coeffs.insert(
            mu,
            RationalFunction::from_rat(BigRational::from_integer(chi) / &h),
        );
    }
    Ok(out)
}

/// Check G(z, J) F_lambda = r^G_lambda(z) F_lambda through z-degree `cutoff`.
pub fn idempotent_eigenvalue_check(
    g: &WeightGenerator,
    n: u32,
    lambda: &Partition,
    cutoff: usize,
) -> Result<bool> {
    if lambda.weight() != n {
        return Err(Error::WeightMismatch(format!(
            "idempotent label {lambda} must have weight {n}"
        )));
    }
    let f = orthogonal_idempotent(lambda)?;
    let series = central_weight_element(g, n, cutoff)?;
    let applied = series.apply(&f)?;
    let r = crate::tauseries::content_product(g, lambda, 0, cutoff)?;
    for (d, lhs) in applied.iter().enumerate() {
        let eigen = r.z_coefficient(d)?;
        let rhs = f.scale(&eigen);
        if lhs != &rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
