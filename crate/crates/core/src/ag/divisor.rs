use std::collections::BTreeMap;
use std::fmt;

use crate::ag::curve::{parse_point, CurvePoint};
use crate::error::{Error, Result};

/// A finitely supported formal sum of points; zero multiplicities are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Divisor<P: Ord> {
    terms: BTreeMap<P, i64>,
}

impl<P: Ord + Clone> Divisor<P> {
    pub fn new() -> Self {
        Divisor {
            terms: BTreeMap::new(),
        }
    }

    pub fn point(p: P, m: i64) -> Self {
        let mut d = Self::new();
        d.add_point(p, m);
        d
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (P, i64)>) -> Self {
        let mut d = Self::new();
        for (p, m) in terms {
            d.add_point(p, m);
        }
        d
    }

    pub fn add_point(&mut self, p: P, m: i64) {
        let entry = self.terms.entry(p.clone()).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn multiplicity(&self, p: &P) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &P> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&P, i64)> {
        self.terms.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }
}

impl<P: Ord + fmt::Display> fmt::Display for Divisor<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, m) in &self.terms {
            writeln!(f, "{p} {m}")?;
        }
        Ok(())
    }
}

/// Parses lines `point multiplicity`, where a point is `O` or `x,y`.
pub fn parse_divisor(text: &str) -> Result<Divisor<CurvePoint>> {
    let mut d = Divisor::new();
    for (ln, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let base = line.as_ptr() as usize;
        let toks: Vec<(usize, &str)> = line
            .split_whitespace()
            .map(|t| (t.as_ptr() as usize - base + 1, t))
            .collect();
        let err = |column: usize, message: String| Error::Parse {
            line: ln + 1,
            column,
            message,
        };
        if toks.len() != 2 {
            return Err(err(1, "expected `point multiplicity`".into()));
        }
        let p = parse_point(toks[0].1)
            .ok_or_else(|| err(toks[0].0, format!("`{}` is not a point", toks[0].1)))?;
        let m: i64 = toks[1]
            .1
            .parse()
            .map_err(|_| err(toks[1].0, format!("`{}` is not an integer", toks[1].1)))?;
        d.add_point(p, m);
    }
    Ok(d)
}
