//! Polynomial gcd over the rationals: content/primitive-part recursion with
//! a subresultant pseudo-remainder sequence in the main variable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::poly::{MultiPoly, Var};

/// Canonical polynomial gcd: primitive integer coefficients, jointly coprime,
/// positive leading coefficient under the graded-lexicographic order.
/// Constants (including coprime inputs) normalize to 1.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return make_primitive(b);
    }
    if b.is_zero() {
        return make_primitive(a);
    }
    let ai = a.cleared_denominators();
    let bi = b.cleared_denominators();
    let g = int_gcd(&ai, &bi);
    make_primitive(&g)
}

/// Divide out the integer content and fix the sign of the leading coefficient.
/// Constants map to 1; zero stays zero.
pub fn make_primitive(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return MultiPoly::zero();
    }
    if p.is_constant() {
        return MultiPoly::one();
    }
    let pi = p.cleared_denominators();
    let c = pi.int_content();
    let mut out = pi.scale(&BigRational::new(BigInt::one(), c));
    if out.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        out = out.neg();
    }
    out
}

/// gcd of integer-coefficient polynomials, including the integer content.
fn int_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a == b {
        return a.clone();
    }
    // Pull out the common monomial factor first; it keeps the PRS small and
    // handles pure-monomial inputs outright.
    let ma = a.common_monomial();
    let mb = b.common_monomial();
    let mut mg = ma;
    for i in 0..super::poly::NUM_VARS {
        mg.0[i] = ma.0[i].min(mb.0[i]);
    }
    if !mg.is_unit() {
        let a2 = a
            .divide_exact(&MultiPoly::monomial(ma, BigRational::one()))
            .expect("monomial divides");
        let b2 = b
            .divide_exact(&MultiPoly::monomial(mb, BigRational::one()))
            .expect("monomial divides");
        return int_gcd(&a2, &b2).mul(&MultiPoly::monomial(mg, BigRational::one()));
    }
    if a.is_constant() || b.is_constant() {
        let g = a.int_content().gcd(&b.int_content());
        return MultiPoly::constant(BigRational::from_integer(g));
    }
    let v = main_var(a, b);
    // Fast path: both univariate in the same variable over the integers.
    if let (Some(av), Some(bv)) = (univariate_coeffs(a, v), univariate_coeffs(b, v)) {
        let g = int_univariate_gcd(&av, &bv);
        return MultiPoly::from_coeffs_in_var(
            v,
            &g.iter()
                .map(|c| MultiPoly::constant(BigRational::from_integer(c.clone())))
                .collect::<Vec<_>>(),
        );
    }
    let ac = a.coeffs_in_var(v);
    let bc = b.coeffs_in_var(v);
    let cont_a = coeff_gcd(&ac);
    let cont_b = coeff_gcd(&bc);
    let cont = int_gcd(&cont_a, &cont_b);
    let pp_a: Vec<MultiPoly> = ac
        .iter()
        .map(|c| c.divide_exact(&cont_a).expect("content divides"))
        .collect();
    let pp_b: Vec<MultiPoly> = bc
        .iter()
        .map(|c| c.divide_exact(&cont_b).expect("content divides"))
        .collect();
    // Evaluation quick check: specialize the non-main variables at integer
    // points where neither leading coefficient vanishes. The image of the
    // gcd divides the image gcd, and its main-variable degree is preserved
    // because leading coefficients multiply. A degree-0 image certifies
    // coprimality in the main variable, skipping the expensive PRS.
    if primitive_parts_coprime_by_evaluation(&pp_a, &pp_b, v) {
        return cont;
    }
    let g = subresultant_gcd(pp_a, pp_b, v);
    cont.mul(&g)
}

/// Extract integer coefficients if the polynomial only involves `v`.
fn univariate_coeffs(p: &MultiPoly, v: Var) -> Option<Vec<BigInt>> {
    for other in Var::ALL {
        if other != v && p.involves(other) {
            return None;
        }
    }
    Some(
        p.coeffs_in_var(v)
            .into_iter()
            .map(|c| {
                let r = c.constant_term();
                debug_assert!(r.denom().is_one());
                r.numer().clone()
            })
            .collect(),
    )
}

/// Subresultant PRS over the integers, dense representation.
fn int_univariate_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    use num_traits::Zero as _;
    fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.len() > 1 && v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        v
    }
    fn is_zero(v: &[BigInt]) -> bool {
        v.iter().all(|c| c.is_zero())
    }
    fn content(v: &[BigInt]) -> BigInt {
        let mut g = BigInt::zero();
        for c in v {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }
    let mut f = trim(a.to_vec());
    let mut g = trim(b.to_vec());
    if is_zero(&f) {
        return g;
    }
    if is_zero(&g) {
        return f;
    }
    let cf = content(&f);
    let cg = content(&g);
    let cont = cf.gcd(&cg);
    for c in f.iter_mut() {
        *c /= &cf;
    }
    for c in g.iter_mut() {
        *c /= &cg;
    }
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if is_zero(&g) {
            break;
        }
        if g.len() == 1 {
            f = vec![BigInt::one()];
            break;
        }
        let delta = f.len() - g.len();
        // pseudo remainder
        let mut r = f.clone();
        let glc = g.last().expect("nonzero").clone();
        let mut steps = delta as i64 + 1;
        while !is_zero(&r) && trim(r.clone()).len() >= g.len() {
            r = trim(r);
            let k = r.len() - g.len();
            let rlc = r.last().expect("nonzero").clone();
            let mut next = vec![BigInt::zero(); r.len()];
            for (i, c) in r.iter().enumerate() {
                next[i] = c * &glc;
            }
            for (i, c) in g.iter().enumerate() {
                next[i + k] -= c * &rlc;
            }
            r = trim(next);
            steps -= 1;
        }
        while steps > 0 {
            for c in r.iter_mut() {
                *c *= &glc;
            }
            steps -= 1;
        }
        let divisor = &gg * h.pow(delta as u32);
        for c in r.iter_mut() {
            debug_assert!((&*c % &divisor).is_zero());
            *c /= &divisor;
        }
        f = g;
        g = trim(r);
        gg = f.last().expect("nonzero").clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => gg.pow(delta as u32) / h.pow(delta as u32 - 1),
        };
    }
    // primitive part, positive leading coefficient
    let c = content(&f);
    if !c.is_zero() && !c.is_one() {
        for x in f.iter_mut() {
            *x /= &c;
        }
    }
    f = trim(f);
    // Restore the shared integer content.
    if !cont.is_one() {
        for x in f.iter_mut() {
            *x *= &cont;
        }
    }
    if f.last().map(|c| c.sign() == num_bigint::Sign::Minus).unwrap_or(false) {
        for x in f.iter_mut() {
            *x = -(x.clone());
        }
    }
    f
}

/// Sound coprimality certificate: evaluate away all but the main variable at
/// small integer points keeping both leading coefficients nonzero; if the
/// resulting integer univariate gcd is constant, the primitive parts share no
/// factor involving `v`.
fn primitive_parts_coprime_by_evaluation(
    pa: &[MultiPoly],
    pb: &[MultiPoly],
    v: Var,
) -> bool {
    let lca = pa.last().expect("nonempty");
    let lcb = pb.last().expect("nonempty");
    let others: Vec<Var> = Var::ALL
        .iter()
        .copied()
        .filter(|&w| {
            w != v
                && (pa.iter().any(|c| c.involves(w)) || pb.iter().any(|c| c.involves(w)))
        })
        .collect();
    'points: for base in [2i64, 3, 5, 7, 11] {
        let values: Vec<(Var, BigRational)> = others
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, BigRational::from_integer(BigInt::from(base + i as i64))))
            .collect();
        let eval = |p: &MultiPoly| -> Option<BigRational> {
            let mut x = p.clone();
            for (w, val) in &values {
                x = x.eval_var(*w, val);
            }
            x.is_constant().then(|| x.constant_term())
        };
        let lc_ok = |p: &MultiPoly| -> bool {
            eval(p).map(|c| !num_traits::Zero::is_zero(&c)).unwrap_or(false)
        };
        if !lc_ok(lca) || !lc_ok(lcb) {
            continue 'points;
        }
        let to_int_vec = |parts: &[MultiPoly]| -> Option<Vec<BigInt>> {
            let mut denlcm = BigInt::one();
            let vals: Vec<BigRational> = parts
                .iter()
                .map(&eval)
                .collect::<Option<Vec<_>>>()?;
            for c in &vals {
                denlcm = denlcm.lcm(c.denom());
            }
            Some(
                vals.iter()
                    .map(|c| (c * BigRational::from_integer(denlcm.clone())).to_integer())
                    .collect(),
            )
        };
        let fa = match to_int_vec(pa) {
            Some(x) => x,
            None => continue 'points,
        };
        let fb = match to_int_vec(pb) {
            Some(x) => x,
            None => continue 'points,
        };
        let g = int_univariate_gcd(&fa, &fb);
        return g.len() == 1;
    }
    false
}

fn main_var(a: &MultiPoly, b: &MultiPoly) -> Var {
    for v in [Var::U, Var::Z, Var::P, Var::Q] {
        if a.involves(v) || b.involves(v) {
            return v;
        }
    }
    unreachable!("non-constant polynomial must involve a variable")
}

fn coeff_gcd(coeffs: &[MultiPoly]) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = int_gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

struct UniPoly {
    coeffs: Vec<MultiPoly>, // index = exponent; trailing entry nonzero
}

impl UniPoly {
    fn new(mut coeffs: Vec<MultiPoly>) -> UniPoly {
        while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn lc(&self) -> &MultiPoly {
        self.coeffs.last().expect("nonempty")
    }

    fn scale(&self, f: &MultiPoly) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.mul(f)).collect())
    }

    fn divide_exact(&self, f: &MultiPoly) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.divide_exact(f).expect("exact coefficient division"))
                .collect(),
        )
    }

    fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![MultiPoly::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = out[i].add(c);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = out[i].sub(c);
        }
        UniPoly::new(out)
    }

    fn shift_mul(&self, k: usize, f: &MultiPoly) -> UniPoly {
        let mut out = vec![MultiPoly::zero(); self.coeffs.len() + k];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + k] = c.mul(f);
        }
        UniPoly::new(out)
    }
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
fn pseudo_rem(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let db = b.deg();
    let mut r = UniPoly::new(a.coeffs.clone());
    let mut steps = a.deg() as i64 - db as i64 + 1;
    while !r.is_zero() && r.deg() >= db {
        let k = r.deg() - db;
        let lr = r.lc().clone();
        r = r.scale(b.lc()).sub(&b.shift_mul(k, &lr));
        steps -= 1;
    }
    // Top up missing lc(b) powers so the subresultant divisors stay exact.
    while steps > 0 {
        r = r.scale(b.lc());
        steps -= 1;
    }
    r
}

/// Subresultant PRS on primitive inputs; returns the primitive gcd in `v`
/// (1 when the inputs are coprime in `v`).
fn subresultant_gcd(a: Vec<MultiPoly>, b: Vec<MultiPoly>, v: Var) -> MultiPoly {
    let mut f = UniPoly::new(a);
    let mut g = UniPoly::new(b);
    if f.deg() < g.deg() {
        std::mem::swap(&mut f, &mut g);
    }
    let mut gg = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        if g.is_zero() {
            return primitive_in_var(&f, v);
        }
        if g.deg() == 0 {
            return MultiPoly::one();
        }
        let delta = f.deg() - g.deg();
        let r = pseudo_rem(&f, &g);
        let divisor = gg.mul(&h.pow(delta as u32));
        let r = r.divide_exact(&divisor);
        f = g;
        g = r;
        gg = f.lc().clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => gg
                .pow(delta as u32)
                .divide_exact(&h.pow(delta as u32 - 1))
                .expect("subresultant h update is exact"),
        };
    }
}

fn primitive_in_var(p: &UniPoly, v: Var) -> MultiPoly {
    let cont = coeff_gcd(&p.coeffs);
    let parts: Vec<MultiPoly> = p
        .coeffs
        .iter()
        .map(|c| c.divide_exact(&cont).expect("content divides"))
        .collect();
    MultiPoly::from_coeffs_in_var(v, &parts)
}
