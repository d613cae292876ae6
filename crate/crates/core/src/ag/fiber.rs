//! Counting effective divisors in a linear equivalence class by how many
//! evaluation points they contain.
//!
//! For an evaluation code C_L(D, G) with supp G ∩ D = ∅, the nonzero
//! codewords with exactly i zeros number (q−1)·#{H ∼ G : H ≥ 0, |supp H ∩ D| = i}.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use num::{BigUint, One, Zero};

use crate::ag::curve::{CurvePoint, EllipticCurve};
use crate::ag::divisor::Divisor;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linear_code::{binomial, WeightDistribution};

pub const DEFAULT_FIBER_BUDGET: u64 = 1_000_000;

/// A curve of genus at most one whose divisor classes of a fixed degree are
/// described by a group.
pub trait Curve {
    type Point: Clone + Ord + Hash + Debug;
    type Class: Clone + Eq + Hash + Debug;

    fn field(&self) -> &Field;
    fn genus(&self) -> usize;
    fn rational_points(&self) -> Vec<Self::Point>;
    /// Class of P minus a fixed base point.
    fn point_class(&self, p: &Self::Point) -> Self::Class;
    fn class_zero(&self) -> Self::Class;
    fn class_add(&self, a: &Self::Class, b: &Self::Class) -> Self::Class;
    /// Closed points of degree r ≥ 2, as class of (place − r·base) with counts.
    fn closed_point_classes(&self, r: usize) -> Result<Vec<(Self::Class, u64)>>;

    fn divisor_class(&self, g: &Divisor<Self::Point>) -> Self::Class {
        g.terms().fold(self.class_zero(), |acc, (p, m)| {
            let pc = self.point_class(p);
            let pc = if m >= 0 { pc } else { self.class_neg(&pc) };
            let mut out = acc;
            for _ in 0..m.unsigned_abs() {
                out = self.class_add(&out, &pc);
            }
            out
        })
    }

    fn class_neg(&self, a: &Self::Class) -> Self::Class;
}

impl Curve for EllipticCurve {
    type Point = CurvePoint;
    type Class = CurvePoint;

    fn field(&self) -> &Field {
        EllipticCurve::field(self)
    }

    fn genus(&self) -> usize {
        1
    }

    fn rational_points(&self) -> Vec<CurvePoint> {
        self.points()
    }

    fn point_class(&self, p: &CurvePoint) -> CurvePoint {
        *p
    }

    fn class_zero(&self) -> CurvePoint {
        CurvePoint::Infinity
    }

    fn class_add(&self, a: &CurvePoint, b: &CurvePoint) -> CurvePoint {
        self.add(a, b)
    }

    fn class_neg(&self, a: &CurvePoint) -> CurvePoint {
        self.neg(a)
    }

    fn closed_point_classes(&self, r: usize) -> Result<Vec<(CurvePoint, u64)>> {
        let mut v: Vec<_> = self
            .closed_point_sums(r as u32, super::curve::DEFAULT_EXTENSION_CAP)?
            .into_iter()
            .collect();
        v.sort();
        Ok(v)
    }
}

/// A point of the projective line: ∞ or an element index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinePoint {
    Infinity,
    Affine(u32),
}

/// The projective line over GF(q); all divisors of equal degree are equivalent.
#[derive(Clone, Debug)]
pub struct ProjectiveLine {
    field: Field,
}

impl ProjectiveLine {
    pub fn new(field: Field) -> Self {
        ProjectiveLine { field }
    }
}

/// Monic irreducible polynomials of degree r over GF(q): (1/r)·Σ_{d|r} μ(d)·q^{r/d}.
pub fn irreducible_count(q: u64, r: usize) -> u64 {
    fn mobius(mut n: usize) -> i64 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if n > 1 {
            result = -result;
        }
        result
    }
    let total: i128 = (1..=r)
        .filter(|d| r.is_multiple_of(*d))
        .map(|d| mobius(d) as i128 * (q as i128).pow((r / d) as u32))
        .sum();
    (total / r as i128) as u64
}

impl Curve for ProjectiveLine {
    type Point = LinePoint;
    type Class = ();

    fn field(&self) -> &Field {
        &self.field
    }

    fn genus(&self) -> usize {
        0
    }

    fn rational_points(&self) -> Vec<LinePoint> {
        std::iter::once(LinePoint::Infinity)
            .chain((0..self.field.q()).map(LinePoint::Affine))
            .collect()
    }

    fn point_class(&self, _: &LinePoint) {}

    fn class_zero(&self) {}

    fn class_add(&self, _: &(), _: &()) {}

    fn class_neg(&self, _: &()) {}

    fn closed_point_classes(&self, r: usize) -> Result<Vec<((), u64)>> {
        Ok(vec![((), irreducible_count(self.field.q().into(), r))])
    }
}

/// Places outside D, grouped by (degree, class) with multiplicity.
fn other_places<C: Curve>(
    curve: &C,
    d_points: &[C::Point],
    degree: usize,
) -> Result<Vec<(usize, C::Class, u64)>> {
    let mut groups: HashMap<(usize, C::Class), u64> = HashMap::new();
    for p in curve.rational_points() {
        if !d_points.contains(&p) {
            *groups.entry((1, curve.point_class(&p))).or_insert(0) += 1;
        }
    }
    for r in 2..=degree {
        for (c, t) in curve.closed_point_classes(r)? {
            *groups.entry((r, c)).or_insert(0) += t;
        }
    }
    let mut v: Vec<_> = groups.into_iter().map(|((r, c), t)| (r, c, t)).collect();
    v.sort_by_key(|(r, c, _)| (*r, format!("{c:?}")));
    Ok(v)
}

/// Number of effective divisors of the given degree over all classes.
fn effective_divisor_total(place_counts: &[u64], degree: usize) -> BigUint {
    // coefficient of T^degree in Π_r (1 − T^r)^{−place_counts[r−1]}
    let mut series = vec![BigUint::zero(); degree + 1];
    series[0] = BigUint::one();
    for (idx, &t) in place_counts.iter().enumerate() {
        let r = idx + 1;
        if t == 0 {
            continue;
        }
        let mut next = vec![BigUint::zero(); degree + 1];
        for (e, s) in series.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for j in 0..=(degree - e) / r {
                next[e + j * r] += s * binomial(t as usize + j - 1, j);
            }
        }
        series = next;
    }
    series[degree].clone()
}

fn repeat_add<C: Curve>(curve: &C, base: &C::Class, c: &C::Class, times: usize) -> C::Class {
    (0..times).fold(base.clone(), |acc, _| curve.class_add(&acc, c))
}

/// (q−1)·#{H ≥ 0 : deg H = degree, [H] = class, |supp H ∩ D| = i} for every
/// i in 0..=|D|, where `class` is in the convention of [`Curve::divisor_class`].
pub fn fiber_counts_for_class<C: Curve>(
    curve: &C,
    degree: usize,
    class: &C::Class,
    d_points: &[C::Point],
    budget: u64,
) -> Result<Vec<BigUint>> {
    if curve.genus() > 1 {
        return Err(Error::invalid("fiber counting supports genus 0 and 1 only"));
    }
    let mut sorted = d_points.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != d_points.len() {
        return Err(Error::invalid("evaluation points must be distinct"));
    }
    let rational = curve.rational_points();
    if let Some(p) = d_points.iter().find(|p| !rational.contains(p)) {
        return Err(Error::invalid(format!("{p:?} is not a rational point")));
    }
    let others = other_places(curve, d_points, degree)?;
    let mut place_counts = vec![0u64; degree.max(1)];
    place_counts[0] = rational.len() as u64;
    for (r, _, t) in &others {
        if *r >= 2 {
            place_counts[r - 1] += t;
        }
    }
    let total = effective_divisor_total(&place_counts, degree);
    if total > BigUint::from(budget) {
        return Err(Error::budget(total, budget));
    }

    let n = d_points.len();
    let mut dp: HashMap<(usize, C::Class), Vec<BigUint>> = HashMap::new();
    let mut start = vec![BigUint::zero(); n + 1];
    start[0] = BigUint::one();
    dp.insert((0, curve.class_zero()), start);
    for p in d_points {
        let pc = curve.point_class(p);
        let mut next: HashMap<(usize, C::Class), Vec<BigUint>> = HashMap::new();
        for ((deg, cls), counts) in &dp {
            let mut c = cls.clone();
            for m in 0..=degree - deg {
                let slot = next
                    .entry((deg + m, c.clone()))
                    .or_insert_with(|| vec![BigUint::zero(); n + 1]);
                let shift = usize::from(m > 0);
                for i in 0..n + 1 - shift {
                    if !counts[i].is_zero() {
                        slot[i + shift] += &counts[i];
                    }
                }
                c = curve.class_add(&c, &pc);
            }
        }
        dp = next;
    }
    for (r, pc, t) in &others {
        let mut next: HashMap<(usize, C::Class), Vec<BigUint>> = HashMap::new();
        for ((deg, cls), counts) in &dp {
            for j in 0..=(degree - deg) / r {
                let ways = binomial(*t as usize + j - 1, j);
                let c = repeat_add(curve, cls, pc, j);
                let slot = next
                    .entry((deg + j * r, c))
                    .or_insert_with(|| vec![BigUint::zero(); n + 1]);
                for (s, v) in slot.iter_mut().zip(counts) {
                    *s += v * &ways;
                }
            }
        }
        dp = next;
    }
    let q_minus_one = BigUint::from(u64::from(curve.field().q()) - 1);
    Ok(dp
        .remove(&(degree, class.clone()))
        .unwrap_or_else(|| vec![BigUint::zero(); n + 1])
        .into_iter()
        .map(|v| v * &q_minus_one)
        .collect())
}

/// Counts for every i at once; `g` must have nonnegative degree.
pub fn fiber_counts<C: Curve>(
    curve: &C,
    g: &Divisor<C::Point>,
    d_points: &[C::Point],
    budget: u64,
) -> Result<Vec<BigUint>> {
    let deg = g.degree();
    if deg < 0 {
        return Err(Error::invalid("deg G must be nonnegative"));
    }
    fiber_counts_for_class(
        curve,
        deg as usize,
        &curve.divisor_class(g),
        d_points,
        budget,
    )
}

pub fn fiber_count<C: Curve>(
    curve: &C,
    g: &Divisor<C::Point>,
    d_points: &[C::Point],
    i: usize,
    budget: u64,
) -> Result<BigUint> {
    if i > d_points.len() {
        return Err(Error::invalid(format!(
            "i = {i} exceeds |D| = {}",
            d_points.len()
        )));
    }
    Ok(fiber_counts(curve, g, d_points, budget)?.swap_remove(i))
}

/// Weight distribution A with A_0 = 1 and A_{n−i} = a_i.
pub fn distribution_from_fibers(fibers: &[BigUint]) -> WeightDistribution {
    let n = fibers.len() - 1;
    let mut counts = vec![BigUint::zero(); n + 1];
    for (i, a) in fibers.iter().enumerate() {
        counts[n - i] += a;
    }
    counts[0] += BigUint::one();
    WeightDistribution::new(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_counts() {
        assert_eq!(irreducible_count(2, 1), 2);
        assert_eq!(irreducible_count(2, 2), 1);
        assert_eq!(irreducible_count(2, 3), 2);
        assert_eq!(irreducible_count(2, 4), 3);
        assert_eq!(irreducible_count(3, 2), 3);
        assert_eq!(irreducible_count(2, 6), 9);
        assert_eq!(irreducible_count(5, 3), 40);
    }

    #[test]
    fn total_matches_projective_dimension() {
        // Σ_i a_i/(q−1) = (q^k − 1)/(q − 1): every nonzero f up to scalars
        let e = EllipticCurve::new(Field::new(5).unwrap(), [0, 0, 0, 1, 1]).unwrap();
        let d: Vec<CurvePoint> = e
            .points()
            .into_iter()
            .filter(|p| !p.is_infinity())
            .collect();
        for k in 1..=4 {
            let g = Divisor::point(CurvePoint::Infinity, k);
            let counts = fiber_counts(&e, &g, &d, DEFAULT_FIBER_BUDGET).unwrap();
            let total: BigUint = counts.iter().sum();
            assert_eq!(total, BigUint::from(5u64.pow(k as u32) - 1), "k={k}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let e = EllipticCurve::new(Field::new(5).unwrap(), [0, 0, 0, 1, 1]).unwrap();
        let g = Divisor::point(CurvePoint::Infinity, 3);
        assert!(matches!(
            fiber_counts(&e, &g, &[], 10),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(fiber_count(&e, &g, &[], 1, DEFAULT_FIBER_BUDGET).is_err());
    }

    #[test]
    fn line_total() {
        let line = ProjectiveLine::new(Field::new(4).unwrap());
        let d: Vec<LinePoint> = (0..4).map(LinePoint::Affine).collect();
        let g = Divisor::point(LinePoint::Infinity, 2);
        let counts = fiber_counts(&line, &g, &d, DEFAULT_FIBER_BUDGET).unwrap();
        let total: BigUint = counts.iter().sum();
        assert_eq!(total, BigUint::from(63u32));
    }
}
