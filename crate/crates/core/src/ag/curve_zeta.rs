//! L-polynomials of curves from point counts.

use num::{BigInt, BigRational, One, Zero};

use crate::enumerator::rat_big;
use crate::error::{Error, Result};
use crate::zeta::{riemann_hypothesis_coeffs, RhVerdict};

/// ζ_X(T) = L(T)/((1−T)(1−qT)) with L of degree 2g.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveZeta {
    q: u64,
    g: usize,
    l: Vec<BigInt>,
}

impl CurveZeta {
    /// Validates L(0) = 1, deg L = 2g and ℓ_i = q^{i−g}·ℓ_{2g−i}.
    pub fn new(q: u64, g: usize, l: Vec<BigInt>) -> Result<Self> {
        if q < 2 {
            return Err(Error::invalid("q must be at least 2"));
        }
        if l.len() != 2 * g + 1 {
            return Err(Error::invalid(format!(
                "L must have {} coefficients, got {}",
                2 * g + 1,
                l.len()
            )));
        }
        if !l[0].is_one() {
            return Err(Error::invalid("L(0) must be 1"));
        }
        let qb = BigInt::from(q);
        for i in g..=2 * g {
            // ℓ_i = q^{i−g} ℓ_{2g−i} for i ≥ g covers the lower half as well
            if l[i] != qb.pow((i - g) as u32) * &l[2 * g - i] {
                return Err(Error::invalid(format!(
                    "functional equation fails at ℓ_{i}"
                )));
            }
        }
        Ok(CurveZeta { q, g, l })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn l_coefficients(&self) -> &[BigInt] {
        &self.l
    }

    /// N_1..N_r implied by L: N_k = q^k + 1 + s_k with
    /// s_k = k·ℓ_k − Σ_{j=1}^{k−1} s_j·ℓ_{k−j}.
    pub fn predicted_counts(&self, r: usize) -> Vec<BigInt> {
        let qb = BigInt::from(self.q);
        let ell = |i: usize| self.l.get(i).cloned().unwrap_or_else(BigInt::zero);
        let mut s: Vec<BigInt> = Vec::with_capacity(r);
        for k in 1..=r {
            let mut v = BigInt::from(k) * ell(k);
            for j in 1..k {
                v -= &s[j - 1] * ell(k - j);
            }
            s.push(v);
        }
        s.iter()
            .enumerate()
            .map(|(k, sk)| qb.pow(k as u32 + 1) + 1 + sk)
            .collect()
    }
}

/// Recovers ℓ_1..ℓ_g from N_1..N_g through k·ℓ_k = Σ_{j=1}^{k} s_j·ℓ_{k−j},
/// s_j = N_j − q^j − 1, then completes L with the functional equation.
pub fn zeta_from_point_counts(q: u64, g: usize, counts: &[u64]) -> Result<CurveZeta> {
    if counts.len() != g {
        return Err(Error::invalid(format!(
            "expected {g} point counts, got {}",
            counts.len()
        )));
    }
    let qb = BigInt::from(q);
    let s: Vec<BigInt> = counts
        .iter()
        .enumerate()
        .map(|(j, &n)| BigInt::from(n) - qb.pow(j as u32 + 1) - 1)
        .collect();
    let mut l = vec![BigInt::one()];
    for k in 1..=g {
        let total: BigInt = (1..=k).map(|j| &s[j - 1] * &l[k - j]).sum();
        let v = BigRational::new(total, BigInt::from(k));
        if !v.is_integer() {
            return Err(Error::Inconsistent(format!(
                "ℓ_{k} = {v} is not an integer"
            )));
        }
        l.push(v.to_integer());
    }
    for i in g + 1..=2 * g {
        let v = qb.pow((i - g) as u32) * &l[2 * g - i];
        l.push(v);
    }
    CurveZeta::new(q, g, l)
}

pub fn curve_rh(z: &CurveZeta, tol: f64) -> RhVerdict {
    let coeffs: Vec<BigRational> = z.l.iter().cloned().map(rat_big).collect();
    riemann_hypothesis_coeffs(&coeffs, z.q, tol)
}
