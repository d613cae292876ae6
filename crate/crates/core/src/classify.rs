//! Divisibility types of virtually self-dual enumerators, extremality bounds
//! and formal weight enumerators.

use std::fmt;

use num::{BigRational, Integer, One, Zero};

use crate::enumerator::{is_virtually_self_dual, rat, rat_pow, WeightEnumerator};
use crate::error::Result;
use crate::zeta::{riemann_hypothesis, zeta_from_chinen, RhVerdict, ZetaPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GleasonType {
    I,
    II,
    III,
    IV,
    V,
    None,
}

impl fmt::Display for GleasonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GleasonType::I => "I",
            GleasonType::II => "II",
            GleasonType::III => "III",
            GleasonType::IV => "IV",
            GleasonType::V => "V",
            GleasonType::None => "none",
        };
        f.write_str(s)
    }
}

/// Upper bound on d for a self-dual code of the given type and length.
pub fn type_bound(t: GleasonType, n: usize) -> Option<usize> {
    match t {
        GleasonType::I => Some(2 * (n / 8) + 2),
        GleasonType::II => Some(4 * (n / 24) + 4),
        GleasonType::III => Some(3 * (n / 12) + 3),
        GleasonType::IV => Some(2 * (n / 6) + 2),
        GleasonType::V | GleasonType::None => None,
    }
}

/// 4⌊(n−12)/24⌋ + 4, with floor division for n < 12.
pub fn formal_bound(n: usize) -> i64 {
    4 * (n as i64 - 12).div_euclid(24) + 4
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub b_max: usize,
    pub gleason_type: GleasonType,
    pub v_pattern: bool,
    pub virtually_self_dual: bool,
    pub d: Option<usize>,
    pub d_bound: Option<usize>,
    pub extremal: bool,
    pub reason: Option<String>,
}

/// Largest b > 1 dividing every index of the support, or 1.
pub fn b_max(f: &WeightEnumerator) -> usize {
    let g = f.support().into_iter().fold(0usize, |acc, i| acc.gcd(&i));
    if g > 1 {
        g
    } else {
        1
    }
}

/// F = (x² + (q−1)y²)^{n/2} exactly.
pub fn is_v_pattern(f: &WeightEnumerator, q: u64) -> bool {
    if !f.n().is_multiple_of(2) {
        return false;
    }
    let base = WeightEnumerator::new(vec![
        BigRational::one(),
        BigRational::zero(),
        rat(q as i64 - 1),
    ]);
    base.pow(f.n() / 2).coeffs() == f.coeffs()
}

pub fn classify(f: &WeightEnumerator, q: u64) -> DivisibilityReport {
    let n = f.n();
    let b = b_max(f);
    let d = f.min_distance();
    let mut report = DivisibilityReport {
        b_max: b,
        gleason_type: GleasonType::None,
        v_pattern: false,
        virtually_self_dual: false,
        d,
        d_bound: None,
        extremal: false,
        reason: None,
    };
    match is_virtually_self_dual(f, q) {
        Ok(true) => report.virtually_self_dual = true,
        Ok(false) => {
            report.reason = Some(format!("not virtually self-dual over GF({q})"));
            return report;
        }
        Err(e) => {
            report.reason = Some(e.to_string());
            return report;
        }
    }
    report.v_pattern = is_v_pattern(f, q);
    let t = match q {
        2 if b.is_multiple_of(4) && n.is_multiple_of(8) => GleasonType::II,
        2 if b.is_multiple_of(2) && n.is_multiple_of(2) => GleasonType::I,
        3 if b.is_multiple_of(3) && n.is_multiple_of(4) => GleasonType::III,
        4 if b.is_multiple_of(2) && n.is_multiple_of(2) => GleasonType::IV,
        _ if report.v_pattern => GleasonType::V,
        _ => GleasonType::None,
    };
    if t == GleasonType::None {
        report.reason = Some(format!(
            "b = {b}, q = {q}, n = {n} match no divisibility type"
        ));
    }
    report.gleason_type = t;
    report.d_bound = type_bound(t, n);
    report.extremal = matches!((d, report.d_bound), (Some(d), Some(bound)) if d == bound);
    report
}

pub fn w8() -> WeightEnumerator {
    WeightEnumerator::from_integers(&[1, 0, 0, 0, 14, 0, 0, 0, 1])
}

pub fn w12() -> WeightEnumerator {
    WeightEnumerator::from_integers(&[1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1])
}

/// W(x+y, x−y), the integral form of the order-two substitution.
pub fn hadamard_image(w: &WeightEnumerator) -> WeightEnumerator {
    let one = BigRational::one();
    w.substitute(&one, &one, &one, &rat(-1))
}

/// Why W fails to be a formal weight enumerator, if it does.
pub fn formal_violation(w: &WeightEnumerator) -> Option<String> {
    let n = w.n();
    if !n.is_multiple_of(2) {
        return Some(format!("odd length {n}"));
    }
    if let Some(i) = (1..=n).find(|&i| i % 4 != 0 && !w.coeff(i).is_zero()) {
        return Some(format!(
            "nonzero coefficient at index {i}, not divisible by 4"
        ));
    }
    let target = w.scale(&(-rat_pow(2, (n / 2) as i64)));
    if hadamard_image(w).coeffs() != target.coeffs() {
        return Some("W(x+y, x-y) != -2^(n/2) W(x,y)".into());
    }
    None
}

pub fn is_formal_weight_enumerator(w: &WeightEnumerator) -> bool {
    formal_violation(w).is_none()
}

#[derive(Clone, Debug)]
pub struct FormalReport {
    pub symmetric: bool,
    pub support_in_4z: bool,
    pub n_mod_8: usize,
    pub zeta: ZetaPolynomial,
    pub anti_functional: bool,
    pub d: Option<usize>,
    pub bound: i64,
    pub extremal: bool,
    pub rh: RhVerdict,
}

pub fn formal_checks(w: &WeightEnumerator, tol: f64) -> Result<FormalReport> {
    let n = w.n();
    let symmetric = (0..=n).all(|i| w.coeff(i) == w.coeff(n - i));
    let support_in_4z = w.support().iter().all(|i| i % 4 == 0);
    let zeta = zeta_from_chinen(w, 2)?;
    let anti_functional = zeta.satisfies_reciprocity(-1);
    let d = w.min_distance();
    let bound = formal_bound(n);
    let rh = riemann_hypothesis(&zeta, tol);
    Ok(FormalReport {
        symmetric,
        support_in_4z,
        n_mod_8: n % 8,
        anti_functional,
        extremal: d.is_some_and(|d| d as i64 == bound),
        d,
        bound,
        rh,
        zeta,
    })
}
