//! Truncated verification of the Cauchy-Littlewood identity and its five
//! alternative dual-basis forms, in two finite sets of variables.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::transition::{f_to_p, s_to_p, PCoords};
use crate::exact::{rat, Rat};
use crate::partitions::{enumerate_partitions, Partition};

/// The six verified identity forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClVariant {
    /// prod 1/(1 - x y) = sum s s
    Ss,
    /// prod (1 + x y) = sum s_lambda s_lambda'
    SDual,
    /// prod 1/(1 - x y) = sum h m
    Hm,
    /// prod 1/(1 - x y) = sum f e
    Fe,
    /// prod (1 + x y) = sum e m
    Em,
    /// prod (1 + x y) = sum m e
    Me,
}

impl ClVariant {
    pub fn parse(s: &str) -> Option<ClVariant> {
        match s {
            "ss" => Some(ClVariant::Ss),
            "s-dual" | "sdual" => Some(ClVariant::SDual),
            "hm" => Some(ClVariant::Hm),
            "fe" => Some(ClVariant::Fe),
            "em" => Some(ClVariant::Em),
            "me" => Some(ClVariant::Me),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ClVariant::Ss => "ss",
            ClVariant::SDual => "s-dual",
            ClVariant::Hm => "hm",
            ClVariant::Fe => "fe",
            ClVariant::Em => "em",
            ClVariant::Me => "me",
        }
    }

    pub const ALL: [ClVariant; 6] = [
        ClVariant::Ss,
        ClVariant::SDual,
        ClVariant::Hm,
        ClVariant::Fe,
        ClVariant::Em,
        ClVariant::Me,
    ];

    fn is_plus_kernel(&self) -> bool {
        matches!(self, ClVariant::SDual | ClVariant::Em | ClVariant::Me)
    }
}

/// Polynomial in nx + ny anonymous variables, truncated by total degree in
/// each variable group separately.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly2 {
    nx: usize,
    terms: BTreeMap<Vec<u16>, Rat>,
}

impl Poly2 {
    fn zero(nx: usize, ny: usize) -> Poly2 {
        let _ = ny;
        Poly2 {
            nx,
            terms: BTreeMap::new(),
        }
    }

    fn constant(nx: usize, ny: usize, c: Rat) -> Poly2 {
        let mut p = Poly2::zero(nx, ny);
        if !c.is_zero() {
            p.terms.insert(vec![0; nx + ny_total(nx, ny)], c);
        }
        p
    }

    fn insert_add(&mut self, m: Vec<u16>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        // cheap cleanup to keep maps small
    }

    fn cleanup(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out.cleanup();
        out
    }

    fn xdeg(&self, m: &[u16]) -> u32 {
        m[..self.nx].iter().map(|&e| e as u32).sum()
    }

    fn ydeg(&self, m: &[u16]) -> u32 {
        m[self.nx..].iter().map(|&e| e as u32).sum()
    }

    fn mul_trunc(&self, other: &Poly2, deg: u32) -> Poly2 {
        let mut out = Poly2::zero(self.nx, 0);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Vec<u16> = ma.iter().zip(mb.iter()).map(|(a, b)| a + b).collect();
                if out.xdeg(&m) > deg || out.ydeg(&m) > deg {
                    continue;
                }
                out.insert_add(m, ca * cb);
            }
        }
        out.cleanup();
        out
    }
}

fn ny_total(_nx: usize, ny: usize) -> usize {
    ny
}

/// p_k evaluated at one variable group (xs when `on_x`, ys otherwise).
fn power_sum_poly(nx: usize, ny: usize, on_x: bool, k: u32) -> Poly2 {
    let mut out = Poly2::zero(nx, ny);
    let total = nx + ny;
    let (start, count) = if on_x { (0, nx) } else { (nx, ny) };
    for i in start..start + count {
        let mut m = vec![0u16; total];
        m[i] = k as u16;
        out.insert_add(m, rat(1));
    }
    out
}

/// Evaluate a power-sum expansion on one variable group.
fn eval_p_coords_poly(nx: usize, ny: usize, on_x: bool, coords: &PCoords, deg: u32) -> Poly2 {
    let mut acc = Poly2::zero(nx, ny);
    for (mu, c) in coords {
        let mut term = Poly2::constant(nx, ny, c.clone());
        for &part in mu.parts() {
            term = term.mul_trunc(&power_sum_poly(nx, ny, on_x, part), deg);
            if term.terms.is_empty() {
                break;
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// m_lambda on one variable group, by direct enumeration of distinct
/// monomials (independent of the transition-matrix route).
fn monomial_poly(nx: usize, ny: usize, on_x: bool, lambda: &Partition) -> Poly2 {
    let mut out = Poly2::zero(nx, ny);
    let total = nx + ny;
    let (start, count) = if on_x { (0, nx) } else { (nx, ny) };
    let k = lambda.len();
    if k > count {
        return out;
    }
    if k == 0 {
        return Poly2::constant(nx, ny, rat(1));
    }
    let positions: Vec<usize> = (start..start + count).collect();
    for support in combinations(&positions, k) {
        for beta in lambda.distinct_arrangements() {
            let mut m = vec![0u16; total];
            for (pos, e) in support.iter().zip(beta.iter()) {
                m[*pos] = *e as u16;
            }
            out.insert_add(m, rat(1));
        }
    }
    out
}

/// e_k on one variable group by the product DP.
fn elementary_poly(nx: usize, ny: usize, on_x: bool, k: u32) -> Poly2 {
    let (start, count) = if on_x { (0, nx) } else { (nx, ny) };
    let k = k as usize;
    let mut layers: Vec<Poly2> = (0..=k).map(|_| Poly2::zero(nx, ny)).collect();
    layers[0] = Poly2::constant(nx, ny, rat(1));
    for i in start..start + count {
        for d in (1..=k).rev() {
            let shifted: Vec<(Vec<u16>, Rat)> = layers[d - 1]
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m2 = m.clone();
                    m2[i] += 1;
                    (m2, c.clone())
                })
                .collect();
            for (m, c) in shifted {
                layers[d].insert_add(m, c);
            }
        }
    }
    let mut out = layers.swap_remove(k);
    out.cleanup();
    out
}

fn product_over_parts<F: Fn(u32) -> Poly2>(
    nx: usize,
    ny: usize,
    lambda: &Partition,
    deg: u32,
    f: F,
) -> Poly2 {
    let mut acc = Poly2::constant(nx, ny, rat(1));
    for &part in lambda.parts() {
        acc = acc.mul_trunc(&f(part), deg);
    }
    acc
}

fn basis_poly(
    nx: usize,
    ny: usize,
    on_x: bool,
    which: char,
    lambda: &Partition,
    deg: u32,
) -> Poly2 {
    match which {
        'm' => monomial_poly(nx, ny, on_x, lambda),
        'e' => product_over_parts(nx, ny, lambda, deg, |k| elementary_poly(nx, ny, on_x, k)),
        'h' => {
            // h_k = sum over partitions kappa of k of m_kappa
            product_over_parts(nx, ny, lambda, deg, |k| {
                let mut acc = Poly2::zero(nx, ny);
                for kappa in enumerate_partitions(k) {
                    acc = acc.add(&monomial_poly(nx, ny, on_x, &kappa));
                }
                acc
            })
        }
        's' => eval_p_coords_poly(nx, ny, on_x, &s_to_p(lambda), deg),
        'f' => eval_p_coords_poly(nx, ny, on_x, &f_to_p(lambda), deg),
        _ => unreachable!("basis letter"),
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(
        items: &[usize],
        start: usize,
        k: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
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

/// Verify one Cauchy-Littlewood variant up to total degree `deg` in each
/// variable group, with nx and ny variables.
pub fn cauchy_littlewood_check(variant: ClVariant, nx: usize, ny: usize, deg: u32) -> bool {
    // Left side: the kernel product over all variable pairs.
    let mut lhs = Poly2::constant(nx, ny, rat(1));
    for a in 0..nx {
        for b in 0..ny {
            let mut factor = Poly2::zero(nx, ny);
            if variant.is_plus_kernel() {
                factor.insert_add(vec![0; nx + ny], rat(1));
                let mut m = vec![0u16; nx + ny];
                m[a] = 1;
                m[nx + b] = 1;
                factor.insert_add(m, rat(1));
            } else {
                // geometric series in x_a y_b up to the degree cap
                for t in 0..=deg as u16 {
                    let mut m = vec![0u16; nx + ny];
                    m[a] = t;
                    m[nx + b] = t;
                    factor.insert_add(m, rat(1));
                }
            }
            lhs = lhs.mul_trunc(&factor, deg);
        }
    }
    // Right side: diagonal dual-basis sum.
    let mut rhs = Poly2::zero(nx, ny);
    for d in 0..=deg {
        for lam in enumerate_partitions(d) {
            let (ux, vy) = match variant {
                ClVariant::Ss => (
                    basis_poly(nx, ny, true, 's', &lam, deg),
                    basis_poly(nx, ny, false, 's', &lam, deg),
                ),
                ClVariant::SDual => (
                    basis_poly(nx, ny, true, 's', &lam, deg),
                    basis_poly(nx, ny, false, 's', &lam.conjugate(), deg),
                ),
                ClVariant::Hm => (
                    basis_poly(nx, ny, true, 'h', &lam, deg),
                    basis_poly(nx, ny, false, 'm', &lam, deg),
                ),
                ClVariant::Fe => (
                    basis_poly(nx, ny, true, 'f', &lam, deg),
                    basis_poly(nx, ny, false, 'e', &lam, deg),
                ),
                ClVariant::Em => (
                    basis_poly(nx, ny, true, 'e', &lam, deg),
                    basis_poly(nx, ny, false, 'm', &lam, deg),
                ),
                ClVariant::Me => (
                    basis_poly(nx, ny, true, 'm', &lam, deg),
                    basis_poly(nx, ny, false, 'e', &lam, deg),
                ),
            };
            if ux.terms.is_empty() || vy.terms.is_empty() {
                continue;
            }
            rhs = rhs.add(&ux.mul_trunc(&vy, deg));
        }
    }
    let mut l = lhs;
    l.cleanup();
    let mut r = rhs;
    r.cleanup();
    l == r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_variable_cauchy_kernel() {
        assert!(cauchy_littlewood_check(ClVariant::Ss, 1, 1, 3));
    }

    #[test]
    fn documented_variants_small() {
        assert!(cauchy_littlewood_check(ClVariant::Hm, 2, 2, 4));
        assert!(cauchy_littlewood_check(ClVariant::Em, 3, 2, 4));
    }

    #[test]
    fn all_variants_modest_size() {
        for v in ClVariant::ALL {
            assert!(cauchy_littlewood_check(v, 2, 3, 4), "variant {}", v.name());
        }
    }

    #[test]
    fn broken_pairing_fails() {
        // pairing m with m is not dual, so the identity must fail
        let nx = 2;
        let ny = 2;
        let deg = 3;
        let mut lhs = Poly2::constant(nx, ny, rat(1));
        for a in 0..nx {
            for b in 0..ny {
                let mut factor = Poly2::zero(nx, ny);
                factor.insert_add(vec![0; nx + ny], rat(1));
                let mut m = vec![0u16; nx + ny];
                m[a] = 1;
                m[nx + b] = 1;
                factor.insert_add(m, rat(1));
                lhs = lhs.mul_trunc(&factor, deg);
            }
        }
        let mut rhs = Poly2::zero(nx, ny);
        for d in 0..=deg {
            for lam in enumerate_partitions(d) {
                let ux = basis_poly(nx, ny, true, 'm', &lam, deg);
                let vy = basis_poly(nx, ny, false, 'm', &lam, deg);
                rhs = rhs.add(&ux.mul_trunc(&vy, deg));
            }
        }
        lhs.cleanup();
        rhs.cleanup();
        assert_ne!(lhs, rhs);
    }
}
