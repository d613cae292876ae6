//! Evaluation codes on the projective line and on elliptic curves, and the
//! closed forms describing their weight distributions.

use num::{BigInt, BigUint, Integer, Signed, Zero};

use crate::ag::curve::{CurvePoint, EllipticCurve};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linear_code::{binomial, LinearCode, WeightDistribution};

fn big(v: BigUint) -> BigInt {
    BigInt::from(v)
}

/// Generalized Reed–Solomon code: row i holds v_j·α_j^i.
pub fn grs_code(
    field: &Field,
    alphas: &[u32],
    multipliers: &[u32],
    k: usize,
) -> Result<LinearCode> {
    let n = alphas.len();
    if multipliers.len() != n {
        return Err(Error::invalid("need one multiplier per evaluation point"));
    }
    if n == 0 || k == 0 || k > n {
        return Err(Error::invalid(format!(
            "need 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    if n as u64 > u64::from(field.q()) {
        return Err(Error::invalid("n exceeds q"));
    }
    if let Some(&bad) = alphas.iter().chain(multipliers).find(|&&a| a >= field.q()) {
        return Err(Error::ElementOutOfRange {
            repr: bad.into(),
            q: field.q().into(),
        });
    }
    let mut sorted = alphas.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != n {
        return Err(Error::invalid("evaluation points must be distinct"));
    }
    if multipliers.contains(&0) {
        return Err(Error::invalid("multipliers must be nonzero"));
    }
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            alphas
                .iter()
                .zip(multipliers)
                .map(|(&a, &v)| field.mul(v, if i == 0 { 1 } else { field.pow(a, i as u64) }))
                .collect()
        })
        .collect();
    LinearCode::from_rows(field.clone(), &rows)
}

/// Exponents (i, j) of x^i·y^j spanning L(k·O), ordered by pole order 2i + 3j.
pub fn riemann_roch_basis(k: usize) -> Vec<(usize, usize)> {
    let mut basis: Vec<(usize, usize)> = (0..=k / 2)
        .flat_map(|i| [(i, 0), (i, 1)])
        .filter(|&(i, j)| 2 * i + 3 * j <= k)
        .collect();
    basis.sort_by_key(|&(i, j)| 2 * i + 3 * j);
    basis
}

/// C_L(D, k·O): the basis of L(k·O) evaluated at D (default: every affine point).
pub fn elliptic_code(
    e: &EllipticCurve,
    k: usize,
    eval_points: Option<&[CurvePoint]>,
) -> Result<LinearCode> {
    let pts: Vec<CurvePoint> = match eval_points {
        Some(p) => p.to_vec(),
        None => e
            .points()
            .into_iter()
            .filter(|p| !p.is_infinity())
            .collect(),
    };
    if pts.iter().any(CurvePoint::is_infinity) {
        return Err(Error::invalid(
            "O is in supp G and cannot be an evaluation point",
        ));
    }
    if let Some(p) = pts.iter().find(|p| !e.contains(p)) {
        return Err(Error::invalid(format!("{p} is not on the curve")));
    }
    let n = pts.len();
    if k == 0 || k >= n {
        return Err(Error::invalid(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    let f = e.field();
    let rows: Vec<Vec<u32>> = riemann_roch_basis(k)
        .into_iter()
        .map(|(i, j)| {
            pts.iter()
                .map(|p| match *p {
                    CurvePoint::Affine(x, y) => {
                        f.mul(f.pow(x, i as u64), if j == 1 { y } else { 1 })
                    }
                    CurvePoint::Infinity => unreachable!(),
                })
                .collect()
        })
        .collect();
    LinearCode::from_rows(f.clone(), &rows)
}

/// Distribution of an [n, k, n−k] elliptic code from its count of minimum
/// weight words, via
/// A_{n−k+l} = C(n,k−l)·Σ_{i<l}(−1)^i C(n−k+l,i)(q^{l−i}−1) + (−1)^l C(k,k−l)·A_{n−k}.
pub fn elliptic_distribution_from_amin(
    n: usize,
    k: usize,
    q: u64,
    a_min: &BigUint,
) -> Result<WeightDistribution> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    let qb = BigInt::from(q);
    let amin = big(a_min.clone());
    let mut counts = vec![BigUint::zero(); n + 1];
    counts[0] = BigUint::from(1u8);
    for l in 0..=k {
        let mut sum = BigInt::zero();
        for i in 0..l {
            let t = big(binomial(n - k + l, i)) * (qb.pow((l - i) as u32) - 1);
            if i % 2 == 0 {
                sum += t;
            } else {
                sum -= t;
            }
        }
        let mut v = big(binomial(n, k - l)) * sum;
        let tail = big(binomial(k, k - l)) * &amin;
        if l % 2 == 0 {
            v += tail;
        } else {
            v -= tail;
        }
        if v.is_negative() {
            return Err(Error::Inconsistent(format!(
                "A_{} = {v} is negative; A_min is invalid",
                n - k + l
            )));
        }
        counts[n - k + l] = v.to_biguint().expect("nonnegative");
    }
    Ok(WeightDistribution::new(counts))
}

fn exact_quotient(num: BigInt, den: BigInt) -> Result<BigUint> {
    let (quo, rem) = num.div_rem(&den);
    if !rem.is_zero() || quo.is_negative() {
        return Err(Error::Inconsistent(format!(
            "{num}/{den} is not a nonnegative integer"
        )));
    }
    Ok(quo.to_biguint().expect("nonnegative"))
}

/// (q−1)/n·C(n,k), for D = every rational point and gcd(k, n) = 1.
pub fn amin_coprime(n: usize, k: usize, q: u64) -> Result<BigUint> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    if n.gcd(&k) != 1 {
        return Err(Error::invalid(format!("gcd(k, n) = {} != 1", n.gcd(&k))));
    }
    exact_quotient(BigInt::from(q - 1) * big(binomial(n, k)), BigInt::from(n))
}

/// (q−1)/(n+1)·[C(n,k) + (−1)^k·n], for G = k·O, D = E(GF(q)) ∖ {O} and
/// gcd(k!, n+1) = 1.
pub fn amin_onepoint(n: usize, k: usize, q: u64) -> Result<BigUint> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    if let Some(p) = (2..=k).find(|&p| (n + 1).is_multiple_of(p)) {
        return Err(Error::invalid(format!(
            "gcd(k!, n+1) != 1 ({p} divides both)"
        )));
    }
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let inner = big(binomial(n, k)) + BigInt::from(sign * n as i64);
    exact_quotient(BigInt::from(q - 1) * inner, BigInt::from(n + 1))
}

/// B_l = Σ_{i=max(1,n−m)}^{n−l} C(n−i, l)·A_i for l = 0..=m, so that
/// A = x^n + Σ_l B_l·(x−y)^l·y^{n−l}.
pub fn bl_coefficients(a: &WeightDistribution, m: usize) -> Result<Vec<BigUint>> {
    let n = a.n();
    if m > n {
        return Err(Error::invalid(format!("m = {m} exceeds n = {n}")));
    }
    let lo = n.saturating_sub(m).max(1);
    if let Some(i) = (1..lo).find(|&i| !a.get(i).is_zero()) {
        return Err(Error::invalid(format!(
            "A_{i} != 0 below n - m = {}",
            n - m
        )));
    }
    Ok((0..=m)
        .map(|l| {
            (lo..=n.saturating_sub(l))
                .map(|i| binomial(n - i, l) * a.get(i))
                .sum()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlBound {
    Exact(BigInt),
    Range { lo: BigInt, hi: BigInt },
}

impl BlBound {
    pub fn admits(&self, v: &BigUint) -> bool {
        let v = big(v.clone());
        match self {
            BlBound::Exact(e) => *e == v,
            BlBound::Range { lo, hi } => *lo <= v && v <= *hi,
        }
    }
}

/// C(n,l)·(q^e − 1), which is negative for e < 0.
fn scaled(n: usize, l: usize, q: u64, e: i64) -> BigInt {
    let c = big(binomial(n, l));
    if e >= 0 {
        c * (BigInt::from(q).pow(e as u32) - 1)
    } else {
        -c
    }
}

/// Exact B_l for l ≤ m−2g+1, otherwise the interval
/// [max(0, C(n,l)(q^{m−l−g+1}−1)), C(n,l)(q^{⌊(m−l)/2⌋+1}−1)].
pub fn bl_bounds(n: usize, m: usize, g: usize, q: u64) -> Vec<BlBound> {
    (0..=m)
        .map(|l| {
            let e = m as i64 - l as i64 - g as i64 + 1;
            if l as i64 <= m as i64 - 2 * g as i64 + 1 {
                BlBound::Exact(scaled(n, l, q, e))
            } else {
                let lo = scaled(n, l, q, e).max(BigInt::zero());
                let hi = scaled(n, l, q, ((m - l) / 2 + 1) as i64);
                BlBound::Range { lo, hi }
            }
        })
        .collect()
}
