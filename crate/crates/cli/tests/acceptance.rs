//! Acceptance criteria 1-9. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; the process fails if any
//! criterion does.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, BigUint, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zetacode::ag::{
    bl_bounds, bl_coefficients, curve_rh, distribution_from_fibers, elliptic_code,
    elliptic_distribution_from_amin, fiber_count, fiber_counts, grs_code, zeta_from_point_counts,
    CurvePoint, Divisor, EllipticCurve,
};
use zetacode::classify::GleasonType;
use zetacode::classify::{
    classify, formal_bound, formal_checks, is_formal_weight_enumerator, type_bound, w12, w8,
};
use zetacode::enumerator::{macwilliams_dual, mds_enumerator, WeightEnumerator};
use zetacode::gf::Field;
use zetacode::linear_code::{binomial, LinearCode, WeightDistribution};
use zetacode::zeta::{
    functional_dual, riemann_hypothesis, zeta_from_chinen, zeta_from_mds_basis, ZetaPolynomial,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    ensure(start.elapsed() < limit, || {
        format!("took {:.2?}, limit {limit:?}", start.elapsed())
    })
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn big(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

fn code(q: u64, rows: &[&[u32]]) -> LinearCode {
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    LinearCode::from_rows(Field::new(q).unwrap(), &rows).unwrap()
}

fn binary(rows: &[&str]) -> LinearCode {
    let rows: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| r.bytes().map(|b| u32::from(b - b'0')).collect())
        .collect();
    LinearCode::from_rows(Field::new(2).unwrap(), &rows).unwrap()
}

const HAMMING: [&str; 4] = ["10000111", "01001011", "00101101", "00011110"];
const TEN_FIVE: [&str; 5] = [
    "1111000000",
    "0000111111",
    "1000111000",
    "0100110100",
    "0010101010",
];
const BUDGET: u64 = 1 << 20;

fn dist(values: &[u64]) -> WeightDistribution {
    WeightDistribution::from_u64(values)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let i2 = binary(&["11"]);
    ensure(
        i2.weight_distribution(BUDGET).unwrap() == dist(&[1, 0, 1]),
        || "i2 != x^2 + y^2".into(),
    )?;
    let tetra = code(3, &[&[1, 1, 1, 0], &[0, 1, 2, 1]]);
    ensure(
        tetra.weight_distribution(BUDGET).unwrap() == dist(&[1, 0, 0, 8, 0]),
        || "tetracode != x^4 + 8xy^3".into(),
    )?;
    let c = binary(&TEN_FIVE);
    let target = dist(&[1, 0, 0, 0, 15, 0, 15, 0, 0, 0, 1]);
    let a = c.weight_distribution(BUDGET).unwrap();
    let b = c.dual().weight_distribution(BUDGET).unwrap();
    ensure(a == target && b == target, || {
        format!("[10,5] distributions {a} / {b}")
    })?;
    ensure(!c.same_code(&c.dual()), || {
        "[10,5] code equals its dual".into()
    })?;
    within(Duration::from_secs(1), start)?;
    Ok("i2, tetracode and the [10,5] pair exact".into())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let a =
        WeightEnumerator::from_distribution(&binary(&HAMMING).weight_distribution(BUDGET).unwrap());
    let expect = vec![
        BigRational::new(1.into(), 5.into()),
        BigRational::new(2.into(), 5.into()),
        BigRational::new(2.into(), 5.into()),
    ];
    let p1 = zeta_from_mds_basis(&a, 2).map_err(|e| e.to_string())?;
    let p2 = zeta_from_chinen(&a, 2).map_err(|e| e.to_string())?;
    ensure(p1.coeffs == expect && p2.coeffs == expect, || {
        format!("zeta {:?} / {:?}", p1.coeffs, p2.coeffs)
    })?;
    let v = riemann_hypothesis(&p1, 1e-10);
    ensure(v.roots.len() == 2, || format!("{} roots", v.roots.len()))?;
    for r in &v.roots {
        let dev = (r.norm() * 2f64.sqrt() - 1.0).abs();
        ensure(dev < 1e-10, || format!("root {r} deviates by {dev:e}"))?;
        ensure(
            (r.re + 0.5).abs() < 1e-10 && (r.im.abs() - 0.5).abs() < 1e-10,
            || format!("root {r} != (-1±i)/2"),
        )?;
    }
    ensure(v.holds, || "RH verdict fails".into())?;
    within(Duration::from_secs(1), start)?;
    Ok(format!(
        "P = (1+2T+2T^2)/5 by both algorithms, max deviation {:.1e}",
        v.max_deviation
    ))
}

/// Systematic generators with shuffled columns, q^k and q^(n-k) at most `side`.
fn random_codes(seed: u64, count: usize, side: u64) -> Vec<LinearCode> {
    const ORDERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = ORDERS[rng.gen_range(0..ORDERS.len())];
        let max_side = (1..).take_while(|e| q.pow(*e) <= side).last().unwrap_or(0) as usize;
        let k = rng.gen_range(1..=max_side);
        let r = rng.gen_range(1..=max_side);
        let n = k + r;
        let mut cols: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            cols.swap(i, rng.gen_range(0..=i));
        }
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|i| {
                let mut row = vec![0u32; n];
                row[cols[i]] = 1;
                for &c in &cols[k..] {
                    row[c] = rng.gen_range(0..q as u32);
                }
                row
            })
            .collect();
        out.push(LinearCode::from_rows(Field::new(q).unwrap(), &rows).unwrap());
    }
    out
}

struct Sample {
    code: LinearCode,
    a: WeightDistribution,
    b: WeightDistribution,
}

fn criterion_3(corpus: &mut Vec<Sample>) -> Outcome {
    let start = Instant::now();
    for code in random_codes(2024, 200, BUDGET) {
        let a = code
            .weight_distribution(BUDGET)
            .map_err(|e| e.to_string())?;
        let b = code
            .dual()
            .weight_distribution(BUDGET)
            .map_err(|e| e.to_string())?;
        corpus.push(Sample { code, a, b });
    }
    for s in corpus.iter() {
        let f = WeightEnumerator::from_distribution(&s.a);
        let t = macwilliams_dual(&f, s.code.q(), s.code.k()).map_err(|e| e.to_string())?;
        let t = t.enumerator.to_distribution().map_err(|e| e.to_string())?;
        ensure(t == s.b, || {
            format!(
                "GF({}) [{}, {}]: transform {t} vs dual {}",
                s.code.q(),
                s.code.n(),
                s.code.k(),
                s.b
            )
        })?;
    }
    within(Duration::from_secs(120), start)?;
    Ok(format!(
        "{} codes, transform = brute-force dual",
        corpus.len()
    ))
}

fn duursma(s: &Sample) -> Result<(), String> {
    let (q, n) = (s.code.q(), s.code.n());
    let fa = WeightEnumerator::from_distribution(&s.a);
    let fb = WeightEnumerator::from_distribution(&s.b);
    let d = s.a.min_distance().expect("nonzero code");
    let dd = s.b.min_distance().unwrap_or(n + 1);
    let p = zeta_from_mds_basis(&fa, q).map_err(|e| e.to_string())?;
    let tag = format!("GF({q}) [{n}, {}, {d}] d_dual={dd}", s.code.k());
    ensure(
        zeta_from_chinen(&fa, q).map_err(|e| e.to_string())?.coeffs == p.coeffs,
        || format!("{tag}: algorithms differ"),
    )?;
    ensure(p.degree() + d + dd == n + 2, || {
        format!("{tag}: deg P = {}", p.degree())
    })?;
    ensure(p.coeffs.iter().sum::<BigRational>().is_one(), || {
        format!("{tag}: P(1) != 1")
    })?;
    if d >= 2 {
        let pd = zeta_from_mds_basis(&fb, q).map_err(|e| e.to_string())?;
        ensure(functional_dual(&p).coeffs == pd.coeffs, || {
            format!("{tag}: functional equation")
        })?;
    }
    // P(0) = A_d/((q−1)C(n,d)) and A_{d+1}/(q−1) = C(n,d+1)·(P(0)(q−d) + P'(0))
    let q1 = rat(q as i64 - 1);
    let p0 = &p.coeffs[0];
    ensure(
        *p0 == big(s.a.get(d)) / (&q1 * big(&binomial(n, d))),
        || format!("{tag}: P(0)"),
    )?;
    if d < n {
        let p1 = p.coeffs.get(1).cloned().unwrap_or_else(BigRational::zero);
        let rhs = big(&binomial(n, d + 1)) * (p0 * rat(q as i64 - d as i64) + p1);
        ensure(big(s.a.get(d + 1)) / &q1 == rhs, || {
            format!("{tag}: A_(d+1) relation")
        })?;
    }
    Ok(())
}

fn criterion_4(corpus: &[Sample]) -> Outcome {
    let mut checked = 0;
    let mut dual_checked = 0;
    for s in corpus.iter().filter(|s| !s.code.is_degenerate()) {
        duursma(s)?;
        checked += 1;
        if s.a.min_distance().is_some_and(|d| d >= 2) {
            dual_checked += 1;
        }
    }
    ensure(checked >= 100, || {
        format!("only {checked} non-degenerate codes")
    })?;
    Ok(format!(
        "{checked} non-degenerate codes, {dual_checked} with the functional equation"
    ))
}

fn field_sizes() -> [u64; 7] {
    [2, 3, 4, 5, 7, 8, 9]
}

/// Distribution from the smaller side, completed by MacWilliams.
fn small_side_distribution(c: &LinearCode) -> WeightDistribution {
    let (q, n, k) = (c.q(), c.n(), c.k());
    if k == n {
        let counts = (0..=n)
            .map(|i| binomial(n, i) * BigUint::from(q - 1).pow(i as u32))
            .collect();
        return WeightDistribution::new(counts);
    }
    if 2 * k <= n {
        return c.weight_distribution(BUDGET).unwrap();
    }
    let b = WeightEnumerator::from_distribution(&c.dual().weight_distribution(BUDGET).unwrap());
    macwilliams_dual(&b, q, n - k)
        .unwrap()
        .enumerator
        .to_distribution()
        .unwrap()
}

/// Every GRS code shape over q <= 9, with the standard points and a seeded
/// random choice of points and multipliers.
fn grs_corpus() -> Vec<(LinearCode, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut out = Vec::new();
    for q in field_sizes() {
        let f = Field::new(q).unwrap();
        for n in 1..=q as usize {
            for k in 1..=n {
                let standard: Vec<u32> = (0..n as u32).collect();
                out.push((grs_code(&f, &standard, &vec![1; n], k).unwrap(), k));
                let mut pts: Vec<u32> = (0..q as u32).collect();
                for i in (1..pts.len()).rev() {
                    pts.swap(i, rng.gen_range(0..=i));
                }
                let mults: Vec<u32> = (0..n).map(|_| rng.gen_range(1..q as u32)).collect();
                out.push((grs_code(&f, &pts[..n], &mults, k).unwrap(), k));
            }
        }
    }
    out
}

fn criterion_5(grs: &[(LinearCode, usize)]) -> Outcome {
    for (c, k) in grs {
        let (q, n) = (c.q(), c.n());
        let a = small_side_distribution(c);
        let tag = format!("GRS GF({q}) n={n} k={k}");
        ensure(a.min_distance() == Some(n - k + 1), || {
            format!("{tag}: d = {:?}", a.min_distance())
        })?;
        let closed = mds_enumerator(n, n - k + 1, q).map_err(|e| e.to_string())?;
        ensure(
            WeightEnumerator::from_distribution(&a).coeffs() == closed.coeffs(),
            || format!("{tag}: {a}"),
        )?;
        let p = zeta_from_chinen(&WeightEnumerator::from_distribution(&a), q)
            .map_err(|e| e.to_string())?;
        ensure(p.coeffs == vec![BigRational::one()], || {
            format!("{tag}: P = {:?}", p.coeffs)
        })?;
    }
    Ok(format!("{} GRS codes MDS with P = 1", grs.len()))
}

fn criterion_6() -> Outcome {
    let r = classify(&w8(), 2);
    ensure(
        r.gleason_type == GleasonType::II && r.extremal && r.d_bound == Some(4),
        || format!("W8: {r:?}"),
    )?;
    ensure(type_bound(GleasonType::I, 8) == Some(4), || {
        "Type I bound at n=8".into()
    })?;
    ensure(type_bound(GleasonType::III, 12) == Some(6), || {
        "Type III bound at n=12".into()
    })?;
    ensure(type_bound(GleasonType::IV, 6) == Some(4), || {
        "Type IV bound at n=6".into()
    })?;
    let w = w12();
    ensure(is_formal_weight_enumerator(&w), || {
        "W12 is not formal".into()
    })?;
    ensure(formal_bound(12) == 4 && w.min_distance() == Some(4), || {
        "W12 not extremal for the formal bound".into()
    })?;
    let fr = formal_checks(&w, 1e-8).map_err(|e| e.to_string())?;
    ensure(fr.extremal, || "formal report not extremal".into())?;
    let p: &ZetaPolynomial = &fr.zeta;
    let g = p.g;
    // a_j = −2^{j−g}·a_{2g−j}, compared as a_j·2^g = −2^j·a_{2g−j}
    let two = |e: i64| rat(1 << e);
    ensure(p.coeffs.len() as i64 == 2 * g + 1, || {
        format!("deg P = {} for g = {g}", p.degree())
    })?;
    for j in 0..=2 * g {
        let lhs = &p.coeffs[j as usize] * two(g);
        let rhs = -(two(j) * &p.coeffs[(2 * g - j) as usize]);
        ensure(lhs == rhs, || format!("anti-reciprocity fails at j = {j}"))?;
    }
    Ok(format!(
        "W8 Type II extremal; W12 formal, extremal, g = {g}, anti-functional exact; RH {} (max deviation {:.1e})",
        if fr.rh.holds { "holds" } else { "fails" },
        fr.rh.max_deviation
    ))
}

/// One curve per attainable number of rational points.
fn curves_over(q: u64) -> Vec<EllipticCurve> {
    let f = Field::new(q).unwrap();
    let qq = q as u32;
    let mut by_count: BTreeMap<usize, EllipticCurve> = BTreeMap::new();
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

fn group_axioms(e: &EllipticCurve) -> Result<(), String> {
    let pts = e.points();
    let o = CurvePoint::Infinity;
    for p in &pts {
        ensure(e.add(p, &o) == *p && e.add(&o, p) == *p, || {
            format!("identity fails at {p}")
        })?;
        ensure(e.add(p, &e.neg(p)) == o, || format!("inverse fails at {p}"))?;
        for r in &pts {
            let s = e.add(p, r);
            ensure(e.contains(&s) && s == e.add(r, p), || {
                format!("closure/commutativity at {p}, {r}")
            })?;
            for t in &pts {
                ensure(e.add(&s, t) == e.add(p, &e.add(r, t)), || {
                    format!("associativity at {p}, {r}, {t}")
                })?;
            }
        }
    }
    Ok(())
}

/// (curve, k, code, distribution) for every one-point code with q^k <= 2401.
struct AgSample {
    curve: EllipticCurve,
    k: usize,
    code: LinearCode,
    a: WeightDistribution,
}

fn elliptic_corpus(curves: &[EllipticCurve]) -> Vec<AgSample> {
    let mut out = Vec::new();
    for e in curves {
        let n = e.points().len() - 1;
        for k in 1..n {
            if e.q().pow(k as u32) > 2401 {
                break;
            }
            let code = elliptic_code(e, k, None).unwrap();
            let a = small_side_distribution(&code);
            out.push(AgSample {
                curve: e.clone(),
                k,
                code,
                a,
            });
        }
    }
    out
}

fn criterion_7(curves: &mut Vec<EllipticCurve>, corpus: &mut Vec<AgSample>) -> Outcome {
    let start = Instant::now();
    curves.extend([2u64, 3, 5, 7].into_iter().flat_map(curves_over));
    corpus.extend(elliptic_corpus(curves));
    let (curves, corpus) = (&*curves, &*corpus);
    ensure(curves.len() >= 5, || {
        format!("only {} curves", curves.len())
    })?;
    for e in curves {
        group_axioms(e)?;
        let n1 = e.points().len() as i64;
        let q = e.q() as i64;
        let z = zeta_from_point_counts(e.q(), 1, &[n1 as u64]).map_err(|er| er.to_string())?;
        let expect: Vec<BigInt> = vec![1.into(), (n1 - q - 1).into(), q.into()];
        ensure(z.l_coefficients() == expect.as_slice(), || {
            format!("L = {:?}", z.l_coefficients())
        })?;
        ensure(curve_rh(&z, 1e-8).holds, || {
            format!("curve RH fails over GF({q}) with N = {n1}")
        })?;
    }
    let mut non_mds = 0;
    for s in corpus {
        let (q, n, k) = (s.curve.q(), s.code.n(), s.k);
        let tag = format!("GF({q}) N={} k={k}", n + 1);
        ensure(s.code.k() == k, || {
            format!("{tag}: dimension {}", s.code.k())
        })?;
        let d = s.a.min_distance().unwrap();
        ensure(d == n - k || d == n - k + 1, || format!("{tag}: d = {d}"))?;
        if d == n - k {
            non_mds += 1;
            let rebuilt = elliptic_distribution_from_amin(n, k, q, s.a.get(n - k))
                .map_err(|er| er.to_string())?;
            ensure(rebuilt == s.a, || {
                format!("{tag}: recursion gives {rebuilt}, enumeration {}", s.a)
            })?;
        }
        let g = Divisor::point(CurvePoint::Infinity, k as i64);
        let affine: Vec<CurvePoint> = s
            .curve
            .points()
            .into_iter()
            .filter(|p| !p.is_infinity())
            .collect();
        let fibers = fiber_counts(&s.curve, &g, &affine, 1 << 22).map_err(|er| er.to_string())?;
        ensure(distribution_from_fibers(&fibers) == s.a, || {
            format!("{tag}: fiber counts {fibers:?}")
        })?;
        for (i, a_i) in fibers.iter().enumerate() {
            let single =
                fiber_count(&s.curve, &g, &affine, i, 1 << 22).map_err(|er| er.to_string())?;
            ensure(single == *a_i, || format!("{tag}: fiber_count({i})"))?;
            if i < n {
                ensure(*a_i == *s.a.get(n - i), || {
                    format!("{tag}: a_{i} != A_{}", n - i)
                })?;
            }
        }
    }
    ensure(non_mds >= 5, || format!("only {non_mds} non-MDS instances"))?;
    within(Duration::from_secs(300), start)?;
    Ok(format!(
        "{} curves, {} one-point codes, {non_mds} non-MDS",
        curves.len(),
        corpus.len()
    ))
}

fn bl_check(
    a: &WeightDistribution,
    m: usize,
    g: usize,
    q: u64,
    tag: &str,
) -> Result<(usize, usize), String> {
    let n = a.n();
    let b = bl_coefficients(a, m).map_err(|e| format!("{tag}: {e}"))?;
    let bounds = bl_bounds(n, m, g, q);
    let mut exact = 0;
    for (l, (v, bd)) in b.iter().zip(&bounds).enumerate() {
        ensure(bd.admits(v), || {
            format!("{tag}: B_{l} = {v} outside {bd:?}")
        })?;
        if (l as i64) <= m as i64 - 2 * g as i64 + 1 {
            exact += 1;
        }
    }
    Ok((exact, b.len()))
}

fn criterion_8(grs: &[(LinearCode, usize)], ag: &[AgSample]) -> Outcome {
    let (mut exact, mut total) = (0, 0);
    for (c, k) in grs.iter().filter(|(c, k)| *k < c.n()) {
        let a = small_side_distribution(c);
        let (e, t) = bl_check(
            &a,
            k - 1,
            0,
            c.q(),
            &format!("GRS GF({}) n={} k={k}", c.q(), c.n()),
        )?;
        exact += e;
        total += t;
    }
    for s in ag {
        let (e, t) = bl_check(
            &s.a,
            s.k,
            1,
            s.curve.q(),
            &format!("elliptic GF({}) k={}", s.curve.q(), s.k),
        )?;
        exact += e;
        total += t;
    }
    Ok(format!(
        "{total} values over {} codes, {exact} pinned exactly",
        grs.len() + ag.len()
    ))
}

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_zetacode"))
}

fn write_input(name: &str, body: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn criterion_9() -> Outcome {
    let hamming = write_input(
        "hamming.txt",
        "2 8 4\n1 0 0 0 0 1 1 1\n0 1 0 0 1 0 1 1\n0 0 1 0 1 1 0 1\n0 0 0 1 1 1 1 0\n",
    );
    let tetra = write_input("tetra.txt", "3 4 2\n1 1 1 0\n0 1 2 1\n");
    let degenerate = write_input("degenerate.txt", "2 3 1\n1 1 0\n");
    let w8 = write_input("w8.txt", "8\n1 0 0 0 14 0 0 0 1\n");
    let w12 = write_input("w12.txt", "12\n1 0 0 0 -33 0 0 0 -33 0 0 0 1\n");
    let curve = write_input("curve.txt", "7 0 0 0 1 3\n");
    let p = |p: &PathBuf| p.display().to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["wdist".into(), p(&hamming)],
        vec!["wdist".into(), p(&tetra)],
        vec!["dual".into(), p(&tetra)],
        vec!["zeta".into(), p(&hamming)],
        vec!["zeta".into(), p(&degenerate)],
        vec!["rh".into(), p(&hamming)],
        vec!["rh".into(), p(&w12), "--q".into(), "2".into()],
        vec!["classify".into(), p(&w8), "--q".into(), "2".into()],
        vec!["classify".into(), p(&w12), "--q".into(), "2".into()],
        vec![
            "mds".into(),
            "--n".into(),
            "4".into(),
            "--d".into(),
            "3".into(),
            "--q".into(),
            "3".into(),
        ],
        vec![
            "grs".into(),
            "--q".into(),
            "7".into(),
            "--k".into(),
            "3".into(),
        ],
        vec!["elliptic".into(), p(&curve), "--k".into(), "3".into()],
        vec![
            "curve-zeta".into(),
            "--q".into(),
            "5".into(),
            "--g".into(),
            "1".into(),
            "--counts".into(),
            "9".into(),
        ],
    ];
    let mut outputs = 0;
    for args in &runs {
        for format in ["json", "text"] {
            let run = || {
                Command::new(bin())
                    .args(args)
                    .args(["--format", format])
                    .env_remove("ZETACODE_BUDGET")
                    .output()
                    .unwrap()
            };
            let (first, second) = (run(), run());
            let label = format!("{} ({format})", args.join(" "));
            ensure(first.status.success(), || {
                format!("{label}: exit {:?}", first.status.code())
            })?;
            ensure(
                first.stdout == second.stdout && first.stderr == second.stderr,
                || format!("{label}: outputs differ"),
            )?;
            ensure(!first.stdout.is_empty(), || {
                format!("{label}: empty output")
            })?;
            outputs += 1;
        }
    }
    Ok(format!(
        "{} commands x 2 formats byte-identical across runs ({outputs} pairs)",
        runs.len()
    ))
}

fn main() {
    let mut samples = Vec::new();
    let grs = grs_corpus();
    let (mut curves, mut ag) = (Vec::new(), Vec::new());
    let mut failed = 0;
    let mut report = |i: usize, name: &str, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {i} [{name}]: PASS ({took:.2?}) {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {i} [{name}]: FAIL ({took:.2?}) {why}");
            }
        }
    };
    report(1, "worked examples", &mut criterion_1);
    report(2, "extended Hamming zeta", &mut criterion_2);
    report(3, "MacWilliams oracle sweep", &mut || {
        criterion_3(&mut samples)
    });
    report(4, "Duursma identities", &mut || criterion_4(&samples));
    report(5, "MDS suite", &mut || criterion_5(&grs));
    report(6, "divisibility and extremality", &mut criterion_6);
    report(7, "elliptic suite", &mut || {
        criterion_7(&mut curves, &mut ag)
    });
    report(8, "B_l suite", &mut || criterion_8(&grs, &ag));
    report(9, "CLI determinism", &mut criterion_9);
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
