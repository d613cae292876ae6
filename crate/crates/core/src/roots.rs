//! Polynomials over Q and numeric root location.
//!
//! Polynomials are coefficient vectors in ascending powers of the variable.

use nalgebra::DMatrix;
use num::complex::Complex64;
use num::{BigRational, ToPrimitive, Zero};

pub type QPoly = Vec<BigRational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn monic(p: QPoly) -> QPoly {
    let p = trim(p);
    let lead = p.last().cloned().expect("nonempty");
    if lead.is_zero() {
        return p;
    }
    p.into_iter().map(|c| c / &lead).collect()
}

pub fn derivative(p: &[BigRational]) -> QPoly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(i.into()))
        .collect()
}

/// Euclidean division; `b` must be nonzero.
pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem = trim(a.to_vec());
    let Some(da) = degree(&rem) else {
        return (vec![BigRational::zero()], rem);
    };
    if da < db {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); da - db + 1];
    let lead = &b[db];
    for shift in (0..=da - db).rev() {
        let c = &rem[shift + db] / lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

pub fn gcd(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while degree(&b).is_some() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

fn sub(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let len = a.len().max(b.len());
    let get = |p: &[BigRational], i: usize| p.get(i).cloned().unwrap_or_else(BigRational::zero);
    trim((0..len).map(|i| get(a, i) - get(b, i)).collect())
}

/// Yun's algorithm: returns (f_i, i) with f = lc · Π f_i^i, each f_i monic,
/// square-free and of positive degree.
pub fn square_free_decomposition(f: &[BigRational]) -> Vec<(QPoly, usize)> {
    let f = trim(f.to_vec());
    if degree(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = divrem(&f, &a0).0;
    let mut c = divrem(&df, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    loop {
        let a = gcd(&b, &d);
        if degree(&a).unwrap_or(0) > 0 {
            out.push((monic(a.clone()), i));
        }
        b = divrem(&b, &a).0;
        if degree(&b).unwrap_or(0) == 0 {
            break;
        }
        c = divrem(&d, &a).0;
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    out
}

fn eval_c(p: &[f64], z: Complex64) -> Complex64 {
    p.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn to_f64(p: &[BigRational]) -> Vec<f64> {
    p.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

/// Roots of a square-free polynomial over Q via companion-matrix eigenvalues,
/// each polished by Newton steps while the residual keeps dropping.
fn square_free_roots(p: &[BigRational]) -> Vec<Complex64> {
    let p = monic(p.to_vec());
    let deg = degree(&p).unwrap_or(0);
    match deg {
        0 => return Vec::new(),
        1 => return vec![Complex64::new((-&p[0]).to_f64().unwrap_or(f64::NAN), 0.0)],
        _ => {}
    }
    let coeffs = to_f64(&p);
    let mut companion = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        companion[(i, deg - 1)] = -coeffs[i];
    }
    let dcoeffs = to_f64(&derivative(&p));
    companion
        .complex_eigenvalues()
        .iter()
        .map(|&z0| {
            let mut z = z0;
            let mut res = eval_c(&coeffs, z).norm();
            for _ in 0..8 {
                let dz = eval_c(&dcoeffs, z);
                if dz.norm() == 0.0 {
                    break;
                }
                let next = z - eval_c(&coeffs, z) / dz;
                let next_res = eval_c(&coeffs, next).norm();
                if next_res.is_nan() || next_res >= res {
                    break;
                }
                z = next;
                res = next_res;
            }
            z
        })
        .collect()
}

/// Located roots with a note on anything numerically suspicious.
#[derive(Clone, Debug, Default)]
pub struct RootReport {
    pub roots: Vec<Complex64>,
    pub diagnostics: Vec<String>,
}

/// All complex roots of `p`, repeated by multiplicity.
pub fn complex_roots(p: &[BigRational]) -> RootReport {
    let p = trim(p.to_vec());
    let mut report = RootReport::default();
    let Some(deg) = degree(&p) else {
        report
            .diagnostics
            .push("zero polynomial has no isolated roots".into());
        return report;
    };
    let zeros_at_origin = p.iter().position(|c| !c.is_zero()).unwrap_or(0);
    report.roots.extend(std::iter::repeat_n(
        Complex64::new(0.0, 0.0),
        zeros_at_origin,
    ));
    let reduced = p[zeros_at_origin..].to_vec();
    for (factor, mult) in square_free_decomposition(&reduced) {
        let rs = square_free_roots(&factor);
        let fc = to_f64(&factor);
        let scale: f64 = fc.iter().map(|c| c.abs()).sum();
        for (i, r) in rs.iter().enumerate() {
            let resid = eval_c(&fc, *r).norm() / scale.max(1.0);
            if resid > 1e-9 {
                report
                    .diagnostics
                    .push(format!("root {r} has relative residual {resid:.3e}"));
            }
            for other in &rs[i + 1..] {
                if (r - other).norm() < 1e-6 * r.norm().max(1.0) {
                    report
                        .diagnostics
                        .push(format!("ill-conditioned cluster near {r}"));
                }
            }
            report.roots.extend(std::iter::repeat_n(*r, mult));
        }
    }
    debug_assert_eq!(report.roots.len(), deg);
    report
}
