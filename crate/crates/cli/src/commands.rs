//! One function per subcommand. Each returns a filled report or a library
//! error; `main` maps errors to exit codes.

use std::path::Path;

use num::{BigInt, BigRational, BigUint, One};
use serde_json::{json, Value};
use zetacode::ag::{
    amin_onepoint, bl_bounds, bl_coefficients, curve_rh, distribution_from_fibers, elliptic_code,
    elliptic_distribution_from_amin, fiber_counts, grs_code, parse_curve, zeta_from_point_counts,
    BlBound, CurvePoint, Divisor, DEFAULT_EXTENSION_CAP,
};
use zetacode::classify::{
    classify as classify_enumerator, formal_checks, is_formal_weight_enumerator,
};
use zetacode::enumerator::{macwilliams_dual, mds_enumerator, parse_enumerator, WeightEnumerator};
use zetacode::gf::Field;
use zetacode::linear_code::{parse_matrix, LinearCode, WeightDistribution};
use zetacode::zeta::{
    leading_weights_check, functional_dual, riemann_hypothesis, zeta_from_chinen, zeta_from_mds_basis,
    ZetaPolynomial,
};
use zetacode::{Error, Result};

use crate::report::{integers, naturals, opt_usize, rational, rationals, verdict, Report};
use crate::RunConfig;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn read_code(path: &Path) -> Result<LinearCode> {
    parse_matrix(&read(path)?)
}

fn fits(q: u64, e: usize, budget: u64) -> bool {
    u32::try_from(e)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .is_some_and(|v| v <= budget)
}

/// Distributions of C and C⊥, enumerating whichever side is smaller and
/// transforming to the other.
fn distributions(
    code: &LinearCode,
    budget: u64,
) -> Result<(WeightDistribution, WeightDistribution)> {
    let (q, n, k) = (code.q(), code.n(), code.k());
    let dual = code.dual();
    if k <= n - k || dual.is_zero_code() {
        let a = code.weight_distribution(budget)?;
        let b = macwilliams_dual(&WeightEnumerator::from_distribution(&a), q, k)?
            .enumerator
            .to_distribution()?;
        Ok((a, b))
    } else {
        let b = dual.weight_distribution(budget)?;
        let a = macwilliams_dual(&WeightEnumerator::from_distribution(&b), q, n - k)?
            .enumerator
            .to_distribution()?;
        Ok((a, b))
    }
}

fn genus(n: usize, k: usize, d: Option<usize>) -> Value {
    d.map_or(Value::Null, |d| json!(n as i64 + 1 - k as i64 - d as i64))
}

fn rows(code: &LinearCode) -> Value {
    code.generator().row_vecs().into()
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

pub fn wdist(cfg: &RunConfig, path: &Path) -> Result<Report> {
    let code = read_code(path)?;
    let (q, n, k) = (code.q(), code.n(), code.k());
    let dist = code.weight_distribution(cfg.budget)?;
    let d = dist.min_distance();
    let mut r = Report::new("wdist");
    r.set("q", q);
    r.set("n", n);
    r.set("k", k);
    r.set("d", opt_usize(d));
    r.set("genus", genus(n, k, d));
    r.set("distribution", naturals(dist.counts()));
    r.set(
        "enumerator",
        WeightEnumerator::from_distribution(&dist).to_string(),
    );
    r.check(
        "size_is_q_pow_k",
        dist.total() == BigUint::from(q).pow(k as u32),
    );
    Ok(r)
}

pub fn dual(cfg: &RunConfig, path: &Path) -> Result<Report> {
    let code = read_code(path)?;
    let (q, n, k) = (code.q(), code.n(), code.k());
    let dual = code.dual();
    let mut r = Report::new("dual");
    r.set("q", q);
    r.set("n", n);
    r.set("k", k);
    r.set("dual_k", dual.k());
    r.set(
        "dual_generator",
        if dual.is_zero_code() {
            json!([])
        } else {
            rows(&dual)
        },
    );
    r.check(
        "generators_orthogonal",
        dual.is_zero_code() || is_orthogonal(&code, &dual),
    );
    let (a, b) = distributions(&code, cfg.budget)?;
    r.set("distribution", naturals(a.counts()));
    r.set("dual_distribution", naturals(b.counts()));
    r.set("dual_d", opt_usize(b.min_distance()));
    r.set("formally_self_dual", a == b);
    r.set("self_dual", code.is_self_dual());
    if fits(q, k, cfg.budget) && fits(q, n - k, cfg.budget) {
        let brute_a = code.weight_distribution(cfg.budget)?;
        let brute_b = if dual.is_zero_code() {
            WeightDistribution::new({
                let mut v = vec![BigUint::from(0u32); n + 1];
                v[0] = BigUint::one();
                v
            })
        } else {
            dual.weight_distribution(cfg.budget)?
        };
        r.check("macwilliams_identity", brute_a == a && brute_b == b);
    } else {
        r.notice(
            "one side exceeds the budget; MacWilliams identity not cross-checked by enumeration",
        );
    }
    Ok(r)
}

fn is_orthogonal(a: &LinearCode, b: &LinearCode) -> bool {
    let f = a.field();
    let (ga, gb) = (a.generator().row_vecs(), b.generator().row_vecs());
    ga.iter().all(|u| {
        gb.iter().all(|v| {
            u.iter()
                .zip(v)
                .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                == 0
        })
    })
}

/// Punctures identically-zero coordinates, recording a notice.
fn nondegenerate(code: LinearCode, r: &mut Report) -> Result<LinearCode> {
    if !code.is_degenerate() {
        return Ok(code);
    }
    let (punctured, removed) = code.puncture_degenerate()?;
    let positions: Vec<String> = removed.iter().map(|c| c.to_string()).collect();
    r.notice(format!(
        "punctured {} (positions {})",
        plural(removed.len(), "coordinate"),
        positions.join(",")
    ));
    r.set("punctured", removed);
    Ok(punctured)
}

fn zeta_fields(r: &mut Report, p: &ZetaPolynomial) {
    r.set("n", p.n);
    r.set("k", p.k);
    r.set("d", p.d);
    r.set("d_dual", p.d_dual);
    r.set("genus", p.g);
    r.set("dual_genus", p.g_dual);
    r.set("zeta_coefficients", rationals(&p.coeffs));
    r.set("zeta_degree", p.degree());
    r.set("zeta_at_one", rational(&p.value_at_one()));
}

pub fn zeta(cfg: &RunConfig, path: &Path) -> Result<Report> {
    let mut r = Report::new("zeta");
    let code = nondegenerate(read_code(path)?, &mut r)?;
    let q = code.q();
    let (a, b) = distributions(&code, cfg.budget)?;
    let fa = WeightEnumerator::from_distribution(&a);
    let fb = WeightEnumerator::from_distribution(&b);
    let p = zeta_from_mds_basis(&fa, q)?;
    let p2 = zeta_from_chinen(&fa, q)?;
    r.set("q", q);
    r.set("distribution", naturals(a.counts()));
    zeta_fields(&mut r, &p);
    r.check("algorithms_agree", p.coeffs == p2.coeffs);
    r.check("zeta_at_one_is_one", p.value_at_one().is_one());
    r.check(
        "degree_is_g_plus_dual_g",
        p.degree() as i64 == p.g + p.g_dual,
    );
    r.check("leading_weights", leading_weights_check(&p, &fa));
    if b.get(0).is_one() && b.min_distance().is_some_and(|d| d >= 2) {
        let pd = zeta_from_mds_basis(&fb, q)?;
        r.set("dual_zeta_coefficients", rationals(&pd.coeffs));
        r.check(
            "functional_equation",
            functional_dual(&p).coeffs == pd.coeffs,
        );
    } else {
        r.notice("dual has distance 1 or is the zero code; functional equation not checked");
    }
    let fsd = a == b;
    r.set("formally_self_dual", fsd);
    if fsd {
        r.check("self_reciprocal", p.satisfies_reciprocity(1));
    }
    r.set("rh", verdict(&riemann_hypothesis(&p, cfg.tol), q));
    Ok(r)
}

pub fn rh(cfg: &RunConfig, path: &Path, q: Option<u64>) -> Result<Report> {
    let mut r = Report::new("rh");
    let (p, q) = match q {
        Some(q) => {
            let f = parse_enumerator(&read(path)?)?;
            let p = zeta_from_chinen(&f, q)?;
            r.check(
                "algorithms_agree",
                zeta_from_mds_basis(&f, q)?.coeffs == p.coeffs,
            );
            (p, q)
        }
        None => {
            let code = nondegenerate(read_code(path)?, &mut r)?;
            let q = code.q();
            let (a, _) = distributions(&code, cfg.budget)?;
            let f = WeightEnumerator::from_distribution(&a);
            let p = zeta_from_chinen(&f, q)?;
            r.check(
                "algorithms_agree",
                zeta_from_mds_basis(&f, q)?.coeffs == p.coeffs,
            );
            r.check("zeta_at_one_is_one", p.value_at_one().is_one());
            (p, q)
        }
    };
    r.set("q", q);
    zeta_fields(&mut r, &p);
    r.set("rh", verdict(&riemann_hypothesis(&p, cfg.tol), q));
    Ok(r)
}

pub fn classify(cfg: &RunConfig, path: &Path, q: u64) -> Result<Report> {
    let f = parse_enumerator(&read(path)?)?;
    let rep = classify_enumerator(&f, q);
    let mut r = Report::new("classify");
    r.set("q", q);
    r.set("n", f.n());
    r.set("enumerator", f.to_string());
    r.set("b_max", rep.b_max);
    r.set("type", rep.gleason_type.to_string());
    r.set("v_pattern", rep.v_pattern);
    r.set("virtually_self_dual", rep.virtually_self_dual);
    r.set("d", opt_usize(rep.d));
    r.set("d_bound", opt_usize(rep.d_bound));
    r.set("extremal", rep.extremal);
    r.set(
        "reason",
        rep.reason.clone().map_or(Value::Null, Value::from),
    );
    if rep.virtually_self_dual {
        match zeta_from_chinen(&f, q) {
            Ok(p) => {
                r.set("zeta_coefficients", rationals(&p.coeffs));
                r.set("genus", p.g);
                r.check("self_reciprocal", p.satisfies_reciprocity(1));
                r.set("rh", verdict(&riemann_hypothesis(&p, cfg.tol), q));
            }
            Err(e) => r.notice(format!("zeta not computed: {e}")),
        }
    }
    if q == 2 && is_formal_weight_enumerator(&f) {
        let fr = formal_checks(&f, cfg.tol)?;
        r.check("formal_anti_functional_equation", fr.anti_functional);
        r.set(
            "formal",
            json!({
                "symmetric": fr.symmetric,
                "support_in_4z": fr.support_in_4z,
                "n_mod_8": fr.n_mod_8,
                "zeta_coefficients": rationals(&fr.zeta.coeffs),
                "genus": fr.zeta.g,
                "d": opt_usize(fr.d),
                "bound": fr.bound,
                "extremal": fr.extremal,
                "rh": verdict(&fr.rh, 2),
            }),
        );
    } else {
        r.set("formal", Value::Null);
    }
    Ok(r)
}

pub fn mds(n: usize, d: usize, q: u64) -> Result<Report> {
    let m = mds_enumerator(n, d, q)?;
    let k = n + 1 - d;
    let mut r = Report::new("mds");
    r.set("q", q);
    r.set("n", n);
    r.set("d", d);
    r.set("k", k);
    r.set("coefficients", rationals(m.coeffs()));
    r.set("enumerator", m.to_string());
    r.set("has_negative", m.has_negative());
    let total: BigRational = m.coeffs().iter().sum();
    r.check(
        "size_is_q_pow_k",
        total == BigRational::from_integer(BigInt::from(q).pow(k as u32)),
    );
    let dual = macwilliams_dual(&m, q, k)?.enumerator;
    r.check(
        "dual_is_mds",
        dual.coeffs() == mds_enumerator(n, n + 2 - d, q)?.coeffs(),
    );
    if (2..=n).contains(&d) {
        let p = zeta_from_chinen(&m, q)?;
        r.check("zeta_is_one", p.coeffs == vec![BigRational::one()]);
    }
    Ok(r)
}

pub fn grs(
    cfg: &RunConfig,
    q: u64,
    k: usize,
    n: Option<usize>,
    alphas: Option<&[u32]>,
    multipliers: Option<&[u32]>,
) -> Result<Report> {
    let field = Field::new(q)?;
    let alphas: Vec<u32> = match alphas {
        Some(a) => a.to_vec(),
        None => {
            let n = n.unwrap_or(q as usize);
            if n > q as usize {
                return Err(Error::InvalidArgument(format!(
                    "n = {n} exceeds the {q} field elements"
                )));
            }
            (0..n as u32).collect()
        }
    };
    let n = alphas.len();
    let multipliers = multipliers.map_or_else(|| vec![1; n], <[u32]>::to_vec);
    let code = grs_code(&field, &alphas, &multipliers, k)?;
    let (a, _) = distributions(&code, cfg.budget)?;
    let d = a.min_distance();
    let mut r = Report::new("grs");
    r.set("q", q);
    r.set("n", n);
    r.set("k", k);
    r.set("d", opt_usize(d));
    r.set("alphas", alphas);
    r.set("multipliers", multipliers);
    r.set("generator", rows(&code));
    r.set("distribution", naturals(a.counts()));
    r.check("singleton_equality", d == Some(n + 1 - k));
    let closed = mds_enumerator(n, n + 1 - k, q)?;
    r.check(
        "closed_form_distribution",
        WeightEnumerator::from_distribution(&a).coeffs() == closed.coeffs(),
    );
    if k < n {
        let p = zeta_from_chinen(&WeightEnumerator::from_distribution(&a), q)?;
        r.check("zeta_is_one", p.coeffs == vec![BigRational::one()]);
    }
    let b = bl_coefficients(&a, n - d.unwrap_or(n))?;
    bl_fields(&mut r, &b, &bl_bounds(n, n - d.unwrap_or(n), 0, q));
    Ok(r)
}

fn bl_fields(r: &mut Report, b: &[BigUint], bounds: &[BlBound]) {
    let bounds_json: Vec<Value> = bounds
        .iter()
        .map(|bd| match bd {
            BlBound::Exact(v) => json!({ "exact": v.to_string() }),
            BlBound::Range { lo, hi } => json!({ "lo": lo.to_string(), "hi": hi.to_string() }),
        })
        .collect();
    r.set("b_l", naturals(b));
    r.set("b_l_bounds", bounds_json);
    r.check(
        "b_l_within_bounds",
        b.iter().zip(bounds).all(|(v, bd)| bd.admits(v)),
    );
}

pub fn elliptic(cfg: &RunConfig, path: &Path, k: usize) -> Result<Report> {
    let e = parse_curve(&read(path)?)?;
    let q = e.q();
    let points = e.points();
    let affine: Vec<CurvePoint> = points
        .iter()
        .filter(|p| !p.is_infinity())
        .copied()
        .collect();
    let n = affine.len();
    let code = elliptic_code(&e, k, None)?;
    let (a, _) = distributions(&code, cfg.budget)?;
    let d = a.min_distance();
    let trace = q as i64 + 1 - points.len() as i64;

    let mut r = Report::new("elliptic");
    r.set("q", q);
    r.set("coefficients", e.coefficients().to_vec());
    r.set("rational_points", points.len());
    r.set(
        "points",
        points.iter().map(ToString::to_string).collect::<Vec<_>>(),
    );
    r.set("trace", trace);
    r.set("n", n);
    r.set("k", code.k());
    r.set("d", opt_usize(d));
    r.set("genus", genus(n, code.k(), d));
    r.set("generator", rows(&code));
    r.set("distribution", naturals(a.counts()));
    r.check("riemann_roch_dimension", code.k() == k);
    r.check(
        "distance_window",
        d.is_some_and(|d| d + k == n || d + k == n + 1),
    );
    r.check("hasse_bound", trace * trace <= 4 * q as i64);

    let z = zeta_from_point_counts(q, 1, &[points.len() as u64])?;
    r.set("l_coefficients", integers(z.l_coefficients()));
    r.set("curve_rh", verdict(&curve_rh(&z, cfg.tol), q));
    if q * q <= DEFAULT_EXTENSION_CAP {
        let counts = e.point_counts(2, DEFAULT_EXTENSION_CAP)?;
        let observed: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
        r.check("extension_counts", z.predicted_counts(2) == observed);
    }

    if d == Some(n - k) {
        let a_min = a.get(n - k).clone();
        r.set("a_min", a_min.to_string());
        r.check(
            "a_min_recursion",
            elliptic_distribution_from_amin(n, k, q, &a_min)? == a,
        );
        if let Ok(f) = amin_onepoint(n, k, q) {
            r.set("a_min_formula", f.to_string());
            r.check("a_min_formula", f == a_min);
        }
    }
    let g = Divisor::point(CurvePoint::Infinity, k as i64);
    match fiber_counts(&e, &g, &affine, cfg.budget) {
        Ok(fibers) => {
            r.set("fibers", naturals(&fibers));
            r.check("fiber_counts", distribution_from_fibers(&fibers) == a);
        }
        Err(err) => r.notice(format!("fiber counts skipped: {err}")),
    }
    let b = bl_coefficients(&a, k)?;
    bl_fields(&mut r, &b, &bl_bounds(n, k, 1, q));
    Ok(r)
}

pub fn curve_zeta(cfg: &RunConfig, q: u64, g: usize, counts: &[u64]) -> Result<Report> {
    let z = zeta_from_point_counts(q, g, counts)?;
    let v = curve_rh(&z, cfg.tol);
    let mut r = Report::new("curve-zeta");
    r.set("q", q);
    r.set("genus", g);
    r.set("counts", counts.to_vec());
    r.set("l_coefficients", integers(z.l_coefficients()));
    r.set(
        "l_at_one",
        z.l_coefficients().iter().sum::<BigInt>().to_string(),
    );
    r.set("predicted_counts", integers(&z.predicted_counts(g + 3)));
    r.set("rh", verdict(&v, q));
    let given: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
    r.check("counts_reproduced", z.predicted_counts(g) == given);
    Ok(r)
}
