//! One-point codes on elliptic curves checked against enumeration.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, BigUint, Zero};
use zetacode::ag::{
    amin_coprime, amin_onepoint, bl_bounds, bl_coefficients, curve_rh, distribution_from_fibers,
    elliptic_code, elliptic_distribution_from_amin, fiber_count, fiber_counts,
    fiber_counts_for_class, zeta_from_point_counts, CurvePoint, Divisor, EllipticCurve,
    DEFAULT_EXTENSION_CAP, DEFAULT_FIBER_BUDGET,
};
use zetacode::enumerator::{macwilliams_dual, WeightEnumerator};
use zetacode::gf::Field;
use zetacode::linear_code::{LinearCode, DEFAULT_BUDGET};
use zetacode::zeta::DEFAULT_TOLERANCE;

/// One curve per attainable point count, over each field.
fn curves(q: u64) -> Vec<EllipticCurve> {
    let f = Field::new(q).unwrap();
    let mut by_count: BTreeMap<usize, EllipticCurve> = BTreeMap::new();
    let qq = q as u32;
    for code in 0..qq.pow(5) {
        let mut a = [0u32; 5];
        let mut c = code;
        for slot in &mut a {
            *slot = c % qq;
            c /= qq;
        }
        if let Ok(e) = EllipticCurve::new(f.clone(), a) {
            by_count.entry(e.points().len()).or_insert(e);
        }
    }
    by_count.into_values().collect()
}

fn affine(e: &EllipticCurve) -> Vec<CurvePoint> {
    e.points()
        .into_iter()
        .filter(|p| !p.is_infinity())
        .collect()
}

/// (curve, k, code) for every k with 1 <= k < n and q^k small.
fn corpus() -> Vec<(EllipticCurve, usize, LinearCode)> {
    let mut out = Vec::new();
    for q in [2u64, 3, 4, 5, 7] {
        for e in curves(q) {
            let n = affine(&e).len();
            for k in 1..n {
                if q.pow(k as u32) > 2401 {
                    break;
                }
                out.push((e.clone(), k, elliptic_code(&e, k, None).unwrap()));
            }
        }
    }
    out
}

#[test]
fn l_polynomials_and_extension_counts() {
    for q in [2u64, 3, 4, 5, 7] {
        for e in curves(q) {
            let counts = e.point_counts(3, DEFAULT_EXTENSION_CAP).unwrap();
            let z = zeta_from_point_counts(q, 1, &counts[..1]).unwrap();
            let a = q as i64 + 1 - counts[0] as i64;
            let expect: Vec<BigInt> = [1, -a, q as i64].map(BigInt::from).to_vec();
            assert_eq!(z.l_coefficients(), expect.as_slice());
            let predicted: Vec<BigInt> = z.predicted_counts(3);
            let observed: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
            assert_eq!(predicted, observed);
            assert!(curve_rh(&z, DEFAULT_TOLERANCE).holds);
        }
    }
}

#[test]
fn one_point_codes_have_riemann_roch_parameters() {
    for (e, k, c) in corpus() {
        let n = c.n();
        assert_eq!(c.k(), k);
        let d = c.min_distance(DEFAULT_BUDGET).unwrap();
        assert!(
            d == n - k || d == n - k + 1,
            "q={} n={n} k={k} d={d}",
            e.q()
        );
        assert!(n <= k + d && k + d <= n + 1);
    }
}

#[test]
fn amin_recursion_reproduces_distribution() {
    let mut non_mds = 0;
    for (e, k, c) in corpus() {
        let n = c.n();
        let dist = c.weight_distribution(DEFAULT_BUDGET).unwrap();
        if dist.min_distance() != Some(n - k) {
            continue;
        }
        non_mds += 1;
        let rebuilt = elliptic_distribution_from_amin(n, k, e.q(), dist.get(n - k)).unwrap();
        assert_eq!(rebuilt, dist);
        let dual = if e.q().pow((n - k) as u32) <= 1 << 16 {
            c.dual().weight_distribution(DEFAULT_BUDGET).unwrap()
        } else {
            let a = WeightEnumerator::from_distribution(&dist);
            macwilliams_dual(&a, e.q(), k)
                .unwrap()
                .enumerator
                .to_distribution()
                .unwrap()
        };
        assert_eq!(dual.get(k), dist.get(n - k));
        if n == 2 * k {
            assert_eq!(dual, dist);
        }
    }
    assert!(non_mds >= 10);
}

#[test]
fn fiber_counts_reproduce_distribution() {
    for (e, k, c) in corpus() {
        let g = Divisor::point(CurvePoint::Infinity, k as i64);
        let fibers = fiber_counts(&e, &g, &affine(&e), DEFAULT_FIBER_BUDGET).unwrap();
        let dist = c.weight_distribution(DEFAULT_BUDGET).unwrap();
        assert_eq!(distribution_from_fibers(&fibers), dist, "q={} k={k}", e.q());
        let n = c.n();
        assert_eq!(
            fiber_count(&e, &g, &affine(&e), k, DEFAULT_FIBER_BUDGET).unwrap(),
            *dist.get(n - k)
        );
    }
}

#[test]
fn onepoint_formula_matches_enumeration() {
    let mut checked = 0;
    for (e, k, c) in corpus() {
        let n = c.n();
        let Ok(formula) = amin_onepoint(n, k, e.q()) else {
            continue;
        };
        let dist = c.weight_distribution(DEFAULT_BUDGET).unwrap();
        if k == 1 {
            assert!(formula.is_zero());
            continue;
        }
        assert_eq!(&formula, dist.get(n - k), "q={} n={n} k={k}", e.q());
        checked += 1;
    }
    assert!(checked >= 5);
}

#[test]
fn coprime_formula_matches_every_class() {
    let e = curves(7)
        .into_iter()
        .find(|e| e.points().len() == 9)
        .expect("a GF(7) curve with 9 points");
    let all = e.points();
    let expected = amin_coprime(9, 2, 7).unwrap();
    assert_eq!(expected, BigUint::from(24u32));
    for class in &all {
        let counts = fiber_counts_for_class(&e, 2, class, &all, DEFAULT_FIBER_BUDGET).unwrap();
        assert_eq!(counts[2], expected);
    }
    // k = 4 on the same curve, with every rational point in D
    let expected = amin_coprime(9, 4, 7).unwrap();
    for class in &all {
        assert_eq!(
            fiber_counts_for_class(&e, 4, class, &all, DEFAULT_FIBER_BUDGET).unwrap()[4],
            expected
        );
    }
}

#[test]
fn bl_values_within_bounds() {
    for (e, k, c) in corpus() {
        let n = c.n();
        let dist = c.weight_distribution(DEFAULT_BUDGET).unwrap();
        let b = bl_coefficients(&dist, k).unwrap();
        for (l, (v, bound)) in b.iter().zip(bl_bounds(n, k, 1, e.q())).enumerate() {
            assert!(
                bound.admits(v),
                "q={} n={n} k={k} l={l}: {v} vs {bound:?}",
                e.q()
            );
        }
        // A = x^n + Σ B_l (x−y)^l y^(n−l), checked by evaluation at several points
        let a = WeightEnumerator::from_distribution(&dist);
        for t in 0..=(n as i64 + 1) {
            let (x, y) = (
                BigRational::from_integer((t + 2).into()),
                BigRational::from_integer((3 - t).into()),
            );
            let mut rhs = num::pow(x.clone(), n);
            for (l, bl) in b.iter().enumerate() {
                rhs += BigRational::from_integer(BigInt::from(bl.clone()))
                    * num::pow(&x - &y, l)
                    * num::pow(y.clone(), n - l);
            }
            assert_eq!(a.eval(&x, &y), rhs);
        }
    }
}
