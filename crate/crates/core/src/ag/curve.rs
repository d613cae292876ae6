//! Elliptic curves in long Weierstrass form
//! y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::Field;

/// Default order cap for extension fields used in point counting.
pub const DEFAULT_EXTENSION_CAP: u64 = 4096;

/// A point given by element indices, or the point at infinity.
///
/// The derived order puts O first, then affine points by (x, y).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine(u32, u32),
}

impl CurvePoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine(x, y) => write!(f, "{x},{y}"),
        }
    }
}

/// Parses `O` or `x,y`.
pub fn parse_point(tok: &str) -> Option<CurvePoint> {
    if tok == "O" {
        return Some(CurvePoint::Infinity);
    }
    let (x, y) = tok.trim_matches(|c| c == '(' || c == ')').split_once(',')?;
    Some(CurvePoint::Affine(
        x.trim().parse().ok()?,
        y.trim().parse().ok()?,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    field: Field,
    a: [u32; 5],
}

impl EllipticCurve {
    /// Coefficients in the order a1, a2, a3, a4, a6.
    pub fn new(field: Field, a: [u32; 5]) -> Result<Self> {
        if let Some(&bad) = a.iter().find(|&&c| c >= field.q()) {
            return Err(Error::ElementOutOfRange {
                repr: bad.into(),
                q: field.q().into(),
            });
        }
        let curve = EllipticCurve { field, a };
        if curve.discriminant() == 0 {
            return Err(Error::invalid("singular curve (discriminant 0)"));
        }
        Ok(curve)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q().into()
    }

    pub fn coefficients(&self) -> [u32; 5] {
        self.a
    }

    pub fn discriminant(&self) -> u32 {
        let f = &self.field;
        let [a1, a2, a3, a4, a6] = self.a;
        let c = |v: i64| f.from_int(v);
        let m = |x: u32, y: u32| f.mul(x, y);
        let b2 = f.add(m(a1, a1), m(c(4), a2));
        let b4 = f.add(m(c(2), a4), m(a1, a3));
        let b6 = f.add(m(a3, a3), m(c(4), a6));
        let b8 = [
            m(m(a1, a1), a6),
            m(c(4), m(a2, a6)),
            f.neg(m(a1, m(a3, a4))),
            m(a2, m(a3, a3)),
            f.neg(m(a4, a4)),
        ]
        .into_iter()
        .fold(0, |s, t| f.add(s, t));
        [
            f.neg(m(m(b2, b2), b8)),
            f.neg(m(c(8), m(b4, m(b4, b4)))),
            f.neg(m(c(27), m(b6, b6))),
            m(c(9), m(b2, m(b4, b6))),
        ]
        .into_iter()
        .fold(0, |s, t| f.add(s, t))
    }

    fn lhs_minus_rhs(&self, x: u32, y: u32) -> u32 {
        let f = &self.field;
        let [a1, _, a3, _, _] = self.a;
        let lhs = f.add(f.mul(y, y), f.mul(y, f.add(f.mul(a1, x), a3)));
        f.sub(lhs, self.cubic(x))
    }

    fn cubic(&self, x: u32) -> u32 {
        let f = &self.field;
        let [_, a2, _, a4, a6] = self.a;
        let x2 = f.mul(x, x);
        [f.mul(x2, x), f.mul(a2, x2), f.mul(a4, x), a6]
            .into_iter()
            .fold(0, |s, t| f.add(s, t))
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match *p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                x < self.field.q() && y < self.field.q() && self.lhs_minus_rhs(x, y) == 0
            }
        }
    }

    /// The y with (x, y) on the curve, ascending.
    fn ys_over(&self, x: u32, artin_schreier: &[Option<u32>]) -> Vec<u32> {
        let f = &self.field;
        let [a1, _, a3, _, _] = self.a;
        let b = f.add(f.mul(a1, x), a3);
        let c = self.cubic(x);
        // y² + b·y = c
        let mut ys = if f.p() == 2 {
            if b == 0 {
                vec![if c == 0 {
                    0
                } else {
                    f.sqrt(c).expect("squaring is onto in characteristic 2")
                }]
            } else {
                // y = b·z with z² + z = c/b²
                let t = f.div(c, f.mul(b, b)).expect("b != 0");
                match artin_schreier[t as usize] {
                    Some(z) => vec![f.mul(b, z), f.mul(b, f.add(z, 1))],
                    None => Vec::new(),
                }
            }
        } else {
            // (2y + b)² = b² + 4c
            let disc = f.add(f.mul(b, b), f.mul(f.from_int(4), c));
            let root = if disc == 0 { Some(0) } else { f.sqrt(disc) };
            let half = f.inv(f.from_int(2)).expect("odd characteristic");
            match root {
                Some(r) => {
                    let y1 = f.mul(f.sub(r, b), half);
                    let y2 = f.mul(f.sub(f.neg(r), b), half);
                    vec![y1, y2]
                }
                None => Vec::new(),
            }
        };
        ys.sort_unstable();
        ys.dedup();
        ys
    }

    /// O, then affine points in lexicographic (x, y) order.
    pub fn points(&self) -> Vec<CurvePoint> {
        let f = &self.field;
        let table = artin_schreier_table(f);
        let mut pts = vec![CurvePoint::Infinity];
        for x in 0..f.q() {
            pts.extend(
                self.ys_over(x, &table)
                    .into_iter()
                    .map(|y| CurvePoint::Affine(x, y)),
            );
        }
        pts
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match *p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let f = &self.field;
                let [a1, _, a3, _, _] = self.a;
                CurvePoint::Affine(x, f.sub(f.neg(y), f.add(f.mul(a1, x), a3)))
            }
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (*p, *q) {
            (CurvePoint::Infinity, _) => return *q,
            (_, CurvePoint::Infinity) => return *p,
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let f = &self.field;
        let [a1, a2, a3, a4, a6] = self.a;
        let (lambda, nu) = if x1 != x2 {
            let dx = f.inv(f.sub(x2, x1)).expect("x1 != x2");
            let lambda = f.mul(f.sub(y2, y1), dx);
            let nu = f.mul(f.sub(f.mul(y1, x2), f.mul(y2, x1)), dx);
            (lambda, nu)
        } else {
            let denom = f.add(f.add(f.mul(f.from_int(2), y1), f.mul(a1, x1)), a3);
            if y1 != y2 || denom == 0 {
                return CurvePoint::Infinity;
            }
            let inv = f.inv(denom).expect("checked");
            let x1sq = f.mul(x1, x1);
            let num_l = [
                f.mul(f.from_int(3), x1sq),
                f.mul(f.from_int(2), f.mul(a2, x1)),
                a4,
                f.neg(f.mul(a1, y1)),
            ]
            .into_iter()
            .fold(0, |s, t| f.add(s, t));
            let num_n = [
                f.neg(f.mul(x1sq, x1)),
                f.mul(a4, x1),
                f.mul(f.from_int(2), a6),
                f.neg(f.mul(a3, y1)),
            ]
            .into_iter()
            .fold(0, |s, t| f.add(s, t));
            (f.mul(num_l, inv), f.mul(num_n, inv))
        };
        let x3 = [
            f.mul(lambda, lambda),
            f.mul(a1, lambda),
            f.neg(a2),
            f.neg(x1),
            f.neg(x2),
        ]
        .into_iter()
        .fold(0, |s, t| f.add(s, t));
        let y3 = f.sub(f.sub(f.neg(f.mul(f.add(lambda, a1), x3)), nu), a3);
        CurvePoint::Affine(x3, y3)
    }

    /// n·P, with negative n meaning (−n)·(−P).
    pub fn mul(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if n < 0 { self.neg(p) } else { *p };
        let mut e = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The same equation over GF(q^r), with the embedding table of GF(q).
    pub fn base_change(&self, r: u32, cap: u64) -> Result<(EllipticCurve, Vec<u32>)> {
        let (ext, emb) = self.field.extension(r, cap)?;
        let a = self.a.map(|c| emb[c as usize]);
        Ok((EllipticCurve { field: ext, a }, emb))
    }

    /// N_1, …, N_r: point counts over GF(q), …, GF(q^r).
    pub fn point_counts(&self, r: u32, cap: u64) -> Result<Vec<u64>> {
        (1..=r)
            .map(|i| Ok(self.base_change(i, cap)?.0.points().len() as u64))
            .collect()
    }

    /// Closed points of degree exactly r, each given by the sum of its
    /// conjugates (a point of E(GF(q))), with multiplicities.
    pub fn closed_point_sums(&self, r: u32, cap: u64) -> Result<HashMap<CurvePoint, u64>> {
        let mut out = HashMap::new();
        if r == 1 {
            for p in self.points() {
                out.insert(p, 1);
            }
            return Ok(out);
        }
        let (ext, emb) = self.base_change(r, cap)?;
        let back: HashMap<u32, u32> = emb
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u32))
            .collect();
        let ef = ext.field().clone();
        let q = self.q();
        let frob = |p: &CurvePoint| match *p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(ef.pow(x, q), ef.pow(y, q)),
        };
        for p in ext.points() {
            let mut orbit = vec![p];
            let mut cur = frob(&p);
            while cur != p {
                orbit.push(cur);
                cur = frob(&cur);
            }
            // count each orbit once, at its least member
            if orbit.len() != r as usize || orbit.iter().any(|o| *o < p) {
                continue;
            }
            let sum = orbit
                .iter()
                .fold(CurvePoint::Infinity, |acc, o| ext.add(&acc, o));
            let down = match sum {
                CurvePoint::Infinity => CurvePoint::Infinity,
                CurvePoint::Affine(x, y) => match (back.get(&x), back.get(&y)) {
                    (Some(&x), Some(&y)) => CurvePoint::Affine(x, y),
                    _ => return Err(Error::Internal("orbit sum is not rational".into())),
                },
            };
            *out.entry(down).or_insert(0) += 1;
        }
        Ok(out)
    }
}

/// For each t, some z with z² + z = t (characteristic 2 only).
fn artin_schreier_table(f: &Field) -> Vec<Option<u32>> {
    let mut table = vec![None; f.q() as usize];
    if f.p() == 2 {
        for z in 0..f.q() {
            table[f.add(f.mul(z, z), z) as usize].get_or_insert(z);
        }
    }
    table
}

/// Parses the curve format `q a1 a2 a3 a4 a6`.
pub fn parse_curve(text: &str) -> Result<EllipticCurve> {
    let (ln, line) = text
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "missing curve line `q a1 a2 a3 a4 a6`".into(),
        })?;
    let base = line.as_ptr() as usize;
    let toks: Vec<(usize, &str)> = line
        .split_whitespace()
        .map(|t| (t.as_ptr() as usize - base + 1, t))
        .collect();
    if toks.len() != 6 {
        return Err(Error::Parse {
            line: ln + 1,
            column: 1,
            message: "expected `q a1 a2 a3 a4 a6`".into(),
        });
    }
    let mut vals = [0u64; 6];
    for (slot, (col, t)) in vals.iter_mut().zip(&toks) {
        *slot = t.parse().map_err(|_| Error::Parse {
            line: ln + 1,
            column: *col,
            message: format!("`{t}` is not a nonnegative integer"),
        })?;
    }
    let field = Field::new(vals[0]).map_err(|e| Error::Parse {
        line: ln + 1,
        column: 1,
        message: e.to_string(),
    })?;
    let mut a = [0u32; 5];
    for (i, slot) in a.iter_mut().enumerate() {
        if vals[i + 1] >= vals[0] {
            return Err(Error::Parse {
                line: ln + 1,
                column: toks[i + 1].0,
                message: format!("coefficient {} not in GF({})", vals[i + 1], vals[0]),
            });
        }
        *slot = vals[i + 1] as u32;
    }
    EllipticCurve::new(field, a).map_err(|e| Error::Parse {
        line: ln + 1,
        column: 1,
        message: e.to_string(),
    })
}

pub fn format_curve(e: &EllipticCurve) -> String {
    let [a1, a2, a3, a4, a6] = e.a;
    format!("{} {a1} {a2} {a3} {a4} {a6}\n", e.q())
}
