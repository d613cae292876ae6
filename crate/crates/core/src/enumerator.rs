//! Exact weight-enumerator algebra on homogeneous bivariate polynomials.
//!
//! A degree-n enumerator F(x,y) = Σ f_i x^{n−i} y^i is stored as the
//! coefficient vector (f_0, …, f_n) of exact rationals.

use std::fmt;

use num::{BigInt, BigRational, BigUint, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linear_code::{binomial, WeightDistribution};

pub(crate) fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub(crate) fn big(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

pub(crate) fn rat_big(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// q^e for possibly negative e.
pub(crate) fn rat_pow(q: u64, e: i64) -> BigRational {
    let base = BigInt::from(q).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

/// Renders a rational as `p/q`, or a bare integer when the denominator is 1.
pub fn format_rational(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn parse_rational(tok: &str) -> Option<BigRational> {
    match tok.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (p.parse::<BigInt>().ok()?, q.parse::<BigInt>().ok()?);
            (!q.is_zero()).then(|| BigRational::new(p, q))
        }
        None => tok.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Homogeneous polynomial of degree n with exact rational coefficients;
/// index i holds the coefficient of x^{n−i} y^i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    coeffs: Vec<BigRational>,
    q: Option<u64>,
}

impl WeightEnumerator {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "an enumerator has degree at least 0");
        WeightEnumerator { coeffs, q: None }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_distribution(dist: &WeightDistribution) -> Self {
        Self::new(dist.counts().iter().map(|c| rat_big(big(c))).collect())
    }

    pub fn with_q(mut self, q: u64) -> Self {
        self.q = Some(q);
        self
    }

    pub fn q(&self) -> Option<u64> {
        self.q
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    /// {0} ∪ {i : f_i ≠ 0}.
    pub fn support(&self) -> Vec<usize> {
        (0..=self.n())
            .filter(|&i| i == 0 || !self.coeffs[i].is_zero())
            .collect()
    }

    /// Least positive index with a nonzero coefficient.
    pub fn min_distance(&self) -> Option<usize> {
        (1..=self.n()).find(|&i| !self.coeffs[i].is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn has_negative(&self) -> bool {
        self.coeffs.iter().any(Signed::is_negative)
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let n = self.n();
        let mut acc = BigRational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * num::pow(x.clone(), n - i) * num::pow(y.clone(), i);
            }
        }
        acc
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        WeightEnumerator {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            q: self.q,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::invalid("degree mismatch"));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(WeightEnumerator { coeffs, q: self.q })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&rat(-1)))
    }

    /// Product of homogeneous polynomials (degrees add).
    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.n() + other.n() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        WeightEnumerator {
            coeffs,
            q: self.q.or(other.q),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = WeightEnumerator::new(vec![BigRational::one()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc.q = self.q;
        acc
    }

    /// F(ax + by, cx + dy), expanded exactly.
    pub fn substitute(
        &self,
        a: &BigRational,
        b: &BigRational,
        c: &BigRational,
        d: &BigRational,
    ) -> Self {
        let n = self.n();
        let first = WeightEnumerator::new(vec![a.clone(), b.clone()]);
        let second = WeightEnumerator::new(vec![c.clone(), d.clone()]);
        let mut first_pows = vec![WeightEnumerator::new(vec![BigRational::one()])];
        let mut second_pows = first_pows.clone();
        for _ in 0..n {
            first_pows.push(first_pows.last().unwrap().mul(&first));
            second_pows.push(second_pows.last().unwrap().mul(&second));
        }
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let term = first_pows[n - i].mul(&second_pows[i]);
            for (acc, t) in coeffs.iter_mut().zip(term.coeffs) {
                *acc += f * t;
            }
        }
        WeightEnumerator { coeffs, q: self.q }
    }

    /// Nonnegative integral coefficients as a distribution.
    pub fn to_distribution(&self) -> Result<WeightDistribution> {
        self.coeffs
            .iter()
            .map(|c| {
                if !c.is_integer() || c.is_negative() {
                    return Err(Error::invalid(format!(
                        "coefficient {} is not a count",
                        format_rational(c)
                    )));
                }
                Ok(c.to_integer().to_biguint().expect("nonnegative"))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeightDistribution::new)
    }
}

impl fmt::Display for WeightEnumerator {
    /// Renders as a sum of monomials, e.g. `x^4 + 8*x*y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = |v: &str, e: usize| match e {
                0 => String::new(),
                1 => v.to_string(),
                e => format!("{v}^{e}"),
            };
            let vars: Vec<String> = [mono("x", n - i), mono("y", i)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect();
            let vars = vars.join("*");
            let mag = c.abs();
            let body = match (mag.is_one(), vars.is_empty()) {
                (true, false) => vars,
                (_, true) => format_rational(&mag),
                (false, false) => format!("{}*{}", format_rational(&mag), vars),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (sign, body)) in terms.iter().enumerate() {
            match (idx, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

/// Result of the MacWilliams transform, flagged when a coefficient came out
/// negative (impossible for an actual code, legitimate for virtual input).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacWilliamsTransform {
    pub enumerator: WeightEnumerator,
    pub has_negative: bool,
}

/// q^{−k} · A(x + (q−1)y, x − y).
pub fn macwilliams_dual(a: &WeightEnumerator, q: u64, k: usize) -> Result<MacWilliamsTransform> {
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    if k > a.n() {
        return Err(Error::invalid(format!(
            "dimension {k} exceeds length {}",
            a.n()
        )));
    }
    let one = BigRational::one();
    let image = a
        .substitute(&one, &rat(q as i64 - 1), &one, &rat(-1))
        .scale(&rat_pow(q, -(k as i64)));
    let has_negative = image.has_negative();
    Ok(MacWilliamsTransform {
        enumerator: image.with_q(q),
        has_negative,
    })
}

/// Integral form of F = F((x+(q−1)y)/√q, (x−y)/√q): q^{n/2}·F = F(x+(q−1)y, x−y).
pub fn is_virtually_self_dual(f: &WeightEnumerator, q: u64) -> Result<bool> {
    if !f.n().is_multiple_of(2) {
        return Err(Error::invalid("virtual self-duality needs even length"));
    }
    let one = BigRational::one();
    let image = f.substitute(&one, &rat(q as i64 - 1), &one, &rat(-1));
    Ok(image.coeffs() == f.scale(&rat_pow(q, (f.n() / 2) as i64)).coeffs())
}

/// M_{n,d}: the enumerator of an [n, n−d+1, d] MDS code, with M_{n,n+1} = x^n.
///
/// d = n is accepted (it is x^n + (q−1)y^n, the repetition code) because the
/// zeta expansion of any code with d⊥ = 2 needs it.
pub fn mds_enumerator(n: usize, d: usize, q: u64) -> Result<WeightEnumerator> {
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    if n == 0 || d == 0 || d > n + 1 {
        return Err(Error::invalid(format!(
            "M_(n,d) needs 1 <= d <= n+1, got n={n}, d={d}"
        )));
    }
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[0] = BigRational::one();
    let qb = BigInt::from(q);
    for (i, slot) in coeffs.iter_mut().enumerate().skip(d) {
        let mut inner = BigInt::zero();
        for m in 0..=(i - d) {
            let term = big(&binomial(i - 1, m)) * qb.pow((i - d - m) as u32);
            if m % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        *slot = rat_big(big(&binomial(n, i)) * (&qb - 1) * inner);
    }
    Ok(WeightEnumerator::new(coeffs).with_q(q))
}

/// Completes a weight distribution from A_d, …, A_{n−d⊥} by back-substitution
/// through Σ_{i=d}^{n−l} C(n−i, l)·A_i = C(n, l)·(q^{k−l} − 1), l = d⊥−1 … 0.
pub fn solve_macwilliams(
    n: usize,
    k: usize,
    q: u64,
    d: usize,
    d_dual: usize,
    knowns: &[BigUint],
) -> Result<WeightDistribution> {
    if q < 2 || k == 0 || k > n || d == 0 || d_dual == 0 {
        return Err(Error::invalid(
            "need q >= 2, 1 <= k <= n, d >= 1, d_dual >= 1",
        ));
    }
    if d > n + 1 - k || d_dual > k + 1 {
        return Err(Error::Inconsistent(
            "parameters violate the Singleton bound".into(),
        ));
    }
    if d + d_dual == n + 1 {
        return Err(Error::Inconsistent(
            "d + d_dual = n + 1 is impossible for a linear code".into(),
        ));
    }
    let expected = (n + 1).saturating_sub(d + d_dual);
    if knowns.len() != expected {
        return Err(Error::invalid(format!(
            "expected {expected} known values A_{d}..A_{}, got {}",
            n as i64 - d_dual as i64,
            knowns.len()
        )));
    }
    let mut a = vec![BigInt::zero(); n + 1];
    a[0] = BigInt::one();
    for (offset, v) in knowns.iter().enumerate() {
        a[d + offset] = big(v);
    }
    let qb = BigInt::from(q);
    for l in (0..d_dual).rev() {
        let top = n - l;
        let rhs = big(&binomial(n, l)) * (qb.pow((k - l) as u32) - BigInt::one());
        let partial: BigInt = (d..top.max(d))
            .map(|i| big(&binomial(n - i, l)) * &a[i])
            .sum();
        if top >= d {
            a[top] = rhs - partial;
        } else if !rhs.is_zero() {
            return Err(Error::Inconsistent(format!(
                "equation l={l} has no solution"
            )));
        }
    }
    if let Some(i) = a.iter().position(Signed::is_negative) {
        return Err(Error::Inconsistent(format!("A_{i} = {} is negative", a[i])));
    }
    if d <= n && a[d].is_zero() {
        return Err(Error::Inconsistent(format!(
            "A_{d} = 0 contradicts minimum distance {d}"
        )));
    }
    Ok(WeightDistribution::new(
        a.into_iter()
            .map(|v| v.to_biguint().expect("checked"))
            .collect(),
    ))
}

/// Parses the enumerator text format: `n` followed by n+1 rationals.
pub fn parse_enumerator(text: &str) -> Result<WeightEnumerator> {
    let mut toks = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .flat_map(|(ln, l)| {
            let base = l.as_ptr() as usize;
            l.split_whitespace()
                .map(move |t| (ln + 1, t.as_ptr() as usize - base + 1, t))
        });
    let (ln, col, head) = toks.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty input".into(),
    })?;
    let n: usize = head.parse().map_err(|_| Error::Parse {
        line: ln,
        column: col,
        message: format!("`{head}` is not a length"),
    })?;
    let mut coeffs = Vec::with_capacity(n + 1);
    for (ln, col, t) in toks {
        let v = parse_rational(t).ok_or_else(|| Error::Parse {
            line: ln,
            column: col,
            message: format!("`{t}` is not a rational"),
        })?;
        coeffs.push(v);
        if coeffs.len() > n + 1 {
            return Err(Error::Parse {
                line: ln,
                column: col,
                message: format!("more than {} coefficients", n + 1),
            });
        }
    }
    if coeffs.len() != n + 1 {
        return Err(Error::Parse {
            line: ln,
            column: col,
            message: format!("expected {} coefficients, found {}", n + 1, coeffs.len()),
        });
    }
    Ok(WeightEnumerator::new(coeffs))
}

pub fn format_enumerator(f: &WeightEnumerator) -> String {
    let parts: Vec<String> = f.coeffs.iter().map(format_rational).collect();
    format!("{}\n{}\n", f.n(), parts.join(" "))
}

/// Exact value as f64, for reporting only.
pub fn to_f64(v: &BigRational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}
