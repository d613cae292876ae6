//! Zeta polynomials of codes and virtual enumerators.
//!
//! An enumerator A with minimum distance d expands uniquely as
//! A = Σ_j a_j·M_{n,d+j} over the MDS enumerators, and P(T) = Σ a_j T^j.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::enumerator::{
    macwilliams_dual, mds_enumerator, rat, rat_big, rat_pow, WeightEnumerator,
};
use crate::error::{Error, Result};
use crate::linear_code::binomial;
use crate::roots::complex_roots;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// P(T) together with the parameters of the enumerator it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaPolynomial {
    pub coeffs: Vec<BigRational>,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub d_dual: usize,
    pub g: i64,
    pub g_dual: i64,
}

impl ZetaPolynomial {
    /// Assembles a zeta polynomial from raw coefficients; genera follow from
    /// g = n+1−k−d and g⊥ = n+1−(n−k)−d⊥.
    pub fn from_parts(
        coeffs: Vec<BigRational>,
        q: u64,
        n: usize,
        k: usize,
        d: usize,
        d_dual: usize,
    ) -> Self {
        let g = n as i64 + 1 - k as i64 - d as i64;
        let g_dual = k as i64 + 1 - d_dual as i64;
        ZetaPolynomial {
            coeffs,
            q,
            n,
            k,
            d,
            d_dual,
            g,
            g_dual,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn value_at_one(&self) -> BigRational {
        self.coeffs.iter().sum()
    }

    /// a_j = sign · q^{j−g} · a_{2g−j} for every j, with deg P = 2g.
    pub fn satisfies_reciprocity(&self, sign: i64) -> bool {
        let r = self.degree() as i64;
        if self.g != self.g_dual || r != 2 * self.g {
            return false;
        }
        (0..=r).all(|j| {
            let rhs = rat(sign) * rat_pow(self.q, j - self.g) * &self.coeffs[(r - j) as usize];
            self.coeffs[j as usize] == rhs
        })
    }

    /// First `terms` coefficients of Z(T) = P(T)/((1−T)(1−qT)).
    pub fn zeta_series(&self, terms: usize) -> Vec<BigRational> {
        // 1/((1−T)(1−qT)) = Σ_m (q^{m+1}−1)/(q−1) T^m
        let q = BigInt::from(self.q);
        let geo = |m: usize| rat_big((q.pow(m as u32 + 1) - 1) / (&q - 1));
        (0..terms)
            .map(|m| {
                self.coeffs
                    .iter()
                    .enumerate()
                    .take(m + 1)
                    .map(|(j, a)| a * geo(m - j))
                    .sum()
            })
            .collect()
    }
}

/// (n, k, d, d⊥) of an enumerator read as a code over GF(q).
fn parameters(a: &WeightEnumerator, q: u64) -> Result<(usize, usize, usize, usize)> {
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    let n = a.n();
    if !a.coeff(0).is_one() {
        return Err(Error::invalid("enumerator must have A_0 = 1"));
    }
    let d = a
        .min_distance()
        .ok_or_else(|| Error::invalid("enumerator has minimum distance undefined (A = x^n)"))?;
    // formal enumerators may have A(1,1) = −q^k
    let size = a.eval(&rat(1), &rat(1)).abs();
    let mut k = 0usize;
    let mut power = rat(1);
    while power < size {
        power *= rat(q as i64);
        k += 1;
    }
    if power != size || k == 0 {
        return Err(Error::invalid(format!(
            "|A(1,1)| = {size} is not a positive power of {q}"
        )));
    }
    let dual = macwilliams_dual(a, q, k)?.enumerator;
    let d_dual = dual.min_distance().unwrap_or(n + 1);
    if d_dual == 1 {
        return Err(Error::Degenerate);
    }
    Ok((n, k, d, d_dual))
}

fn finish(
    mut coeffs: Vec<BigRational>,
    q: u64,
    (n, k, d, d_dual): (usize, usize, usize, usize),
) -> ZetaPolynomial {
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    ZetaPolynomial::from_parts(coeffs, q, n, k, d, d_dual)
}

/// Expansion in the MDS basis by triangular elimination: M_{n,i} is the only
/// remaining basis element with a y^i term once lower indices are cancelled.
pub fn zeta_from_mds_basis(a: &WeightEnumerator, q: u64) -> Result<ZetaPolynomial> {
    let params = parameters(a, q)?;
    let (n, _, d, _) = params;
    let mut rem = a.clone();
    let mut coeffs = Vec::with_capacity(n + 2 - d);
    for i in d..=n + 1 {
        let basis = mds_enumerator(n, i, q)?;
        let lead = if i <= n {
            basis.coeff(i)
        } else {
            basis.coeff(0)
        };
        let c = if i <= n {
            rem.coeff(i) / lead
        } else {
            rem.coeff(0) / lead
        };
        if !c.is_zero() {
            rem = rem.sub(&basis.scale(&c))?;
        }
        coeffs.push(c);
    }
    if !rem.is_zero() {
        return Err(Error::invalid(
            "enumerator is not spanned by the MDS basis from its minimum distance",
        ));
    }
    Ok(finish(coeffs, q, params))
}

type ChinenMatrix = Arc<Vec<Vec<BigRational>>>;

type ChinenCache = RwLock<HashMap<(usize, usize, u64), ChinenMatrix>>;

fn chinen_cache() -> &'static ChinenCache {
    static CACHE: OnceLock<ChinenCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// b_{k,l} for 0 ≤ l ≤ k ≤ n−d, indexed `[k][l]`.
pub fn chinen_matrix(n: usize, d: usize, q: u64) -> ChinenMatrix {
    let key = (n, d, q);
    if let Some(m) = chinen_cache().read().expect("cache poisoned").get(&key) {
        return m.clone();
    }
    let size = n + 1 - d;
    let qb = BigInt::from(q);
    let binom = |a: usize, b: usize| BigInt::from(binomial(a, b));
    let mut b = vec![vec![BigRational::zero(); size]; size];
    for (kk, row) in b.iter_mut().enumerate() {
        for (l, entry) in row.iter_mut().enumerate().take(kk + 1) {
            let mut acc = BigInt::zero();
            for i in l..=kk {
                let c = (qb.pow((kk - i + 1) as u32) - 1) / (&qb - 1) * binom(n, i) * binom(i, l);
                if (i - l) % 2 == 0 {
                    acc += c;
                } else {
                    acc -= c;
                }
            }
            *entry = rat_big(acc);
        }
    }
    let m = Arc::new(b);
    chinen_cache()
        .write()
        .expect("cache poisoned")
        .entry(key)
        .or_insert(m)
        .clone()
}

/// Solves Σ_{k=l}^{n−d} b_{k,l}·a_{n−d−k} = A_{n−l}/(q−1) from l = n−d down.
pub fn zeta_from_chinen(a: &WeightEnumerator, q: u64) -> Result<ZetaPolynomial> {
    let params = parameters(a, q)?;
    let (n, _, d, _) = params;
    let b = chinen_matrix(n, d, q);
    let top = n - d;
    let qm1 = rat(q as i64 - 1);
    let mut coeffs = vec![BigRational::zero(); top + 1];
    for l in (0..=top).rev() {
        let mut rhs = a.coeff(n - l) / &qm1;
        for kk in l + 1..=top {
            rhs -= &b[kk][l] * &coeffs[top - kk];
        }
        let diag = &b[l][l];
        if diag.is_zero() {
            return Err(Error::Internal(format!("zero pivot b_({l},{l})")));
        }
        coeffs[top - l] = rhs / diag;
    }
    Ok(finish(coeffs, q, params))
}

/// P⊥(T) = q^g T^{g+g⊥} P(1/(qT)).
pub fn functional_dual(p: &ZetaPolynomial) -> ZetaPolynomial {
    let r = p.degree() as i64;
    let coeffs = (0..=r)
        .map(|j| rat_pow(p.q, p.g - (r - j)) * &p.coeffs[(r - j) as usize])
        .collect();
    ZetaPolynomial {
        coeffs,
        q: p.q,
        n: p.n,
        k: p.n - p.k,
        d: p.d_dual,
        d_dual: p.d,
        g: p.g_dual,
        g_dual: p.g,
    }
}

pub fn self_reciprocal_check(p: &ZetaPolynomial) -> bool {
    p.satisfies_reciprocity(1)
}

/// Numeric verdict on whether every root lies on |T| = 1/√q.
#[derive(Clone, Debug)]
pub struct RhVerdict {
    pub holds: bool,
    pub roots: Vec<Complex64>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub diagnostics: Vec<String>,
}

/// Checks | |T|·√q − 1 | ≤ tol for all roots of Σ coeffs[j] T^j.
pub fn riemann_hypothesis_coeffs(coeffs: &[BigRational], q: u64, tol: f64) -> RhVerdict {
    let report = complex_roots(coeffs);
    let sq = (q as f64).sqrt();
    let max_deviation = report
        .roots
        .iter()
        .map(|r| (r.norm() * sq - 1.0).abs())
        .fold(0.0, f64::max);
    RhVerdict {
        holds: max_deviation <= tol,
        roots: report.roots,
        max_deviation,
        tolerance: tol,
        diagnostics: report.diagnostics,
    }
}

pub fn riemann_hypothesis(p: &ZetaPolynomial, tol: f64) -> RhVerdict {
    riemann_hypothesis_coeffs(&p.coeffs, p.q, tol)
}

/// Exact check of P(0) = A_d/((q−1)C(n,d)) and
/// A_{d+1}/(q−1) = C(n,d+1)·(P(0)(q−d) + P'(0)).
pub fn leading_weights_check(p: &ZetaPolynomial, a: &WeightEnumerator) -> bool {
    let (n, d, q) = (p.n, p.d, p.q as i64);
    if a.n() != n || d == 0 || d > n || p.d_dual < 2 {
        return false;
    }
    let qm1 = rat(q - 1);
    let binom = |b: usize| rat_big(BigInt::from(binomial(n, b)));
    let a0 = &p.coeffs[0];
    let a1 = p.coeffs.get(1).cloned().unwrap_or_else(BigRational::zero);
    if *a0 != a.coeff(d) / (&qm1 * binom(d)) {
        return false;
    }
    let next = if d < n {
        a.coeff(d + 1).clone()
    } else {
        BigRational::zero()
    };
    let predicted = if d < n {
        binom(d + 1) * (a0 * rat(q - d as i64) + a1)
    } else {
        BigRational::zero()
    };
    next / qm1 == predicted
}

/// Minimum-distance reconstruction from the reciprocal root sum
/// Σ 1/α = −a_1/a_0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDistance {
    pub inverse_root_sum: BigRational,
    pub d_exact: BigRational,
    pub d_bound: BigRational,
}

pub fn min_distance_from_roots(p: &ZetaPolynomial, a: &WeightEnumerator) -> Result<RootDistance> {
    let (n, d) = (p.n, p.d);
    if d >= n {
        return Err(Error::invalid("A_(d+1) is undefined for d = n"));
    }
    let ad = a.coeff(d);
    if ad.is_zero() {
        return Err(Error::invalid("A_d = 0"));
    }
    let a0 = &p.coeffs[0];
    let a1 = p.coeffs.get(1).cloned().unwrap_or_else(BigRational::zero);
    let inverse_root_sum = -(a1 / a0);
    let d_bound = rat(p.q as i64) - &inverse_root_sum;
    let correction = a.coeff(d + 1) / ad * rat((d + 1) as i64) / rat((n - d) as i64);
    Ok(RootDistance {
        d_exact: &d_bound - correction,
        d_bound,
        inverse_root_sum,
    })
}

/// Floating view of a rational for reports.
pub fn approx(v: &BigRational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}
