//! Linear codes over GF(q): generator matrices, duals and brute-force
//! weight/distance distributions.

use std::fmt;

use num::{BigUint, One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::Field;

/// Default cap on the number of codewords (or codeword pairs) enumerated.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// A dense row-major matrix over a finite field, entries stored as element
/// indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::MatrixShape {
                rows,
                cols,
                got: data.len(),
            });
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= field.q()) {
            return Err(Error::ElementOutOfRange {
                repr: u64::from(bad),
                q: u64::from(field.q()),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: Field, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid("rows of unequal length"));
        }
        Matrix::new(field, rows.len(), cols, rows.concat())
    }

    pub fn identity(field: Field, size: usize) -> Self {
        let mut data = vec![0; size * size];
        for i in 0..size {
            data[i * size + i] = 1;
        }
        Matrix {
            field,
            rows: size,
            cols: size,
            data,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m[r * cols + c]).expect("pivot is nonzero");
            for j in 0..cols {
                m[r * cols + j] = f.mul(m[r * cols + j], inv);
            }
            for i in 0..rows {
                let factor = m[i * cols + c];
                if i == r || factor == 0 {
                    continue;
                }
                for j in 0..cols {
                    let t = f.mul(factor, m[r * cols + j]);
                    m[i * cols + j] = f.sub(m[i * cols + j], t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let matrix = Matrix {
            field: f.clone(),
            rows,
            cols,
            data: m,
        };
        Rref {
            matrix,
            rank: r,
            pivots,
        }
    }

    /// `self · otherᵀ`.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::invalid("incompatible matrices"));
        }
        let f = &self.field;
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let dot = self
                    .row(i)
                    .iter()
                    .zip(other.row(j))
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                data.push(dot);
            }
        }
        Matrix::new(f.clone(), self.rows, other.rows, data)
    }

    fn nonzero_rows(&self) -> Matrix {
        let keep: Vec<Vec<u32>> = self
            .row_vecs()
            .into_iter()
            .filter(|r| r.iter().any(|&v| v != 0))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: keep.len(),
            cols: self.cols,
            data: keep.concat(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix over {:?} ({}x{})",
            self.field, self.rows, self.cols
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Counts (A_0, …, A_n) of vectors by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn new(counts: Vec<BigUint>) -> Self {
        assert!(!counts.is_empty(), "a distribution has at least A_0");
        WeightDistribution { counts }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, i: usize) -> &BigUint {
        &self.counts[i]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Least positive weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| !self.counts[i].is_zero())
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A linear [n, k] code given by a full-rank generator matrix.
///
/// The zero code (k = 0) only arises as the output of [`LinearCode::dual`]
/// and is rejected by the distribution operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
}

impl LinearCode {
    pub fn new(gen: Matrix) -> Result<Self> {
        if gen.rows == 0 {
            return Err(Error::ZeroCode);
        }
        let rank = gen.rref().rank;
        if rank != gen.rows {
            return Err(Error::RankDeficient {
                rows: gen.rows,
                rank,
            });
        }
        Ok(LinearCode { gen })
    }

    pub fn from_rows(field: Field, rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(Matrix::from_rows(field, rows)?)
    }

    fn zero_code(field: Field, n: usize) -> Self {
        LinearCode {
            gen: Matrix {
                field,
                rows: 0,
                cols: n,
                data: Vec::new(),
            },
        }
    }

    pub fn field(&self) -> &Field {
        &self.gen.field
    }

    pub fn q(&self) -> u64 {
        u64::from(self.gen.field.q())
    }

    pub fn n(&self) -> usize {
        self.gen.cols
    }

    pub fn k(&self) -> usize {
        self.gen.rows
    }

    pub fn is_zero_code(&self) -> bool {
        self.gen.rows == 0
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// The dual code, generated by a parity-check matrix H with G·Hᵀ = 0.
    pub fn dual(&self) -> LinearCode {
        let n = self.n();
        let field = self.field().clone();
        if self.is_zero_code() {
            return LinearCode {
                gen: Matrix::identity(field, n),
            };
        }
        let Rref {
            matrix: r, pivots, ..
        } = self.gen.rref();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return LinearCode::zero_code(field, n);
        }
        let mut data = vec![0u32; free.len() * n];
        for (row, &fc) in free.iter().enumerate() {
            data[row * n + fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                data[row * n + pc] = field.neg(r.get(i, fc));
            }
        }
        LinearCode {
            gen: Matrix {
                field,
                rows: free.len(),
                cols: n,
                data,
            },
        }
    }

    fn check_budget(&self, exponent: usize, budget: u64) -> Result<()> {
        let q = self.q();
        match u32::try_from(exponent).ok().and_then(|e| q.checked_pow(e)) {
            Some(v) if v <= budget => Ok(()),
            _ => Err(Error::budget(format!("{q}^{exponent}"), budget)),
        }
    }

    /// All codewords x·G, messages in lexicographic order of element indices
    /// (first row most significant).
    pub fn codewords(&self, budget: u64) -> Result<Vec<Vec<u32>>> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        self.check_budget(self.k(), budget)?;
        let mut out = Vec::new();
        self.walk(0..self.field().q(), |w| out.push(w.to_vec()));
        Ok(out)
    }

    /// Visits x·G for every message whose first coordinate lies in `first`.
    fn walk(&self, first: std::ops::Range<u32>, mut visit: impl FnMut(&[u32])) {
        let f = self.field();
        let (n, k, q) = (self.n(), self.k(), f.q());
        let multiples: Vec<Vec<Vec<u32>>> = (0..k)
            .map(|r| {
                (0..q)
                    .map(|c| self.gen.row(r).iter().map(|&g| f.mul(c, g)).collect())
                    .collect()
            })
            .collect();
        let mut acc = vec![vec![0u32; n]; k + 1];
        let mut digits = vec![0u32; k];
        digits[0] = first.start;
        if first.is_empty() {
            return;
        }
        // odometer: digits[level] is the message coordinate for row `level`
        let mut level = 0;
        loop {
            let (lo, hi) = acc.split_at_mut(level + 1);
            let mult = &multiples[level][digits[level] as usize];
            for ((dst, &a), &b) in hi[0].iter_mut().zip(&lo[level]).zip(mult) {
                *dst = f.add(a, b);
            }
            if level + 1 < k {
                level += 1;
                digits[level] = 0;
                continue;
            }
            visit(&acc[k]);
            loop {
                digits[level] += 1;
                let limit = if level == 0 { first.end } else { q };
                if digits[level] < limit {
                    break;
                }
                if level == 0 {
                    return;
                }
                level -= 1;
            }
        }
    }

    /// Exact weight distribution by enumerating all q^k codewords.
    pub fn weight_distribution(&self, budget: u64) -> Result<WeightDistribution> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        self.check_budget(self.k(), budget)?;
        let n = self.n();
        let counts = (0..self.field().q())
            .into_par_iter()
            .map(|c| {
                let mut local = vec![0u64; n + 1];
                self.walk(c..c + 1, |w| {
                    local[w.iter().filter(|&&v| v != 0).count()] += 1
                });
                local
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        Ok(WeightDistribution::from_u64(&counts))
    }

    /// Distance distribution B_i over all ordered pairs, divided by |C|.
    pub fn distance_distribution(&self, budget: u64) -> Result<WeightDistribution> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        self.check_budget(2 * self.k(), budget)?;
        let words = self.codewords(budget)?;
        let n = self.n();
        let pairs = words
            .par_iter()
            .map(|a| {
                let mut local = vec![0u64; n + 1];
                for b in &words {
                    local[a.iter().zip(b).filter(|(x, y)| x != y).count()] += 1;
                }
                local
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        let size = words.len() as u64;
        let counts = pairs
            .into_iter()
            .map(|c| {
                if c % size != 0 {
                    return Err(Error::Internal(
                        "distance count not divisible by |C|".into(),
                    ));
                }
                Ok(BigUint::from(c / size))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightDistribution::new(counts))
    }

    pub fn min_distance(&self, budget: u64) -> Result<usize> {
        self.weight_distribution(budget)?
            .min_distance()
            .ok_or_else(|| Error::Internal("nonzero code without nonzero words".into()))
    }

    /// γ = n + 1 − k − d.
    pub fn genus(&self, budget: u64) -> Result<usize> {
        let d = self.min_distance(budget)?;
        (self.n() + 1)
            .checked_sub(self.k() + d)
            .ok_or_else(|| Error::Internal("Singleton bound violated".into()))
    }

    /// Coordinates where every codeword vanishes.
    pub fn zero_coordinates(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&c| (0..self.k()).all(|r| self.gen.get(r, c) == 0))
            .collect()
    }

    /// Degenerate iff the dual has a word of weight one, i.e. some coordinate
    /// is identically zero on the code.
    pub fn is_degenerate(&self) -> bool {
        !self.zero_coordinates().is_empty()
    }

    /// Deletes identically-zero coordinates. Returns the punctured code and
    /// the deleted positions.
    pub fn puncture_degenerate(&self) -> Result<(LinearCode, Vec<usize>)> {
        if self.is_zero_code() {
            return Err(Error::ZeroCode);
        }
        let removed = self.zero_coordinates();
        let rows: Vec<Vec<u32>> = (0..self.k())
            .map(|r| {
                self.gen
                    .row(r)
                    .iter()
                    .enumerate()
                    .filter(|(c, _)| !removed.contains(c))
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        Ok((LinearCode::from_rows(self.field().clone(), &rows)?, removed))
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.gen
            .mul_transpose(&self.gen)
            .map(|m| m.data.iter().all(|&v| v == 0))
            .unwrap_or(false)
    }

    /// Same row space as `other` (compared via reduced row-echelon forms).
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field() == other.field()
            && self.n() == other.n()
            && self.gen.rref().matrix.nonzero_rows() == other.gen.rref().matrix.nonzero_rows()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n() && self.same_code(&self.dual())
    }

    pub fn is_formally_self_dual(&self, budget: u64) -> Result<bool> {
        let dual = self.dual();
        if dual.is_zero_code() {
            return Ok(false);
        }
        Ok(self.weight_distribution(budget)? == dual.weight_distribution(budget)?)
    }
}

/// Parses the matrix text format: a header line `q n k` followed by k lines
/// of n whitespace-separated element indices.
pub fn parse_matrix(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing header `q n k`".into(),
    })?;
    let head = tokens(hline, header)?;
    if head.len() != 3 {
        return Err(Error::Parse {
            line: hline,
            column: 1,
            message: "header must be `q n k`".into(),
        });
    }
    let (q, n, k) = (head[0].1, head[1].1 as usize, head[2].1 as usize);
    let field = Field::new(q).map_err(|e| Error::Parse {
        line: hline,
        column: head[0].0,
        message: e.to_string(),
    })?;
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (ln, line) = lines.next().ok_or(Error::Parse {
            line: hline + rows.len() + 1,
            column: 1,
            message: format!("expected {k} matrix rows, found {}", rows.len()),
        })?;
        let toks = tokens(ln, line)?;
        if toks.len() != n {
            return Err(Error::Parse {
                line: ln,
                column: toks.get(n).map_or(line.len() + 1, |t| t.0),
                message: format!("expected {n} entries, found {}", toks.len()),
            });
        }
        if let Some(&(col, v)) = toks.iter().find(|t| t.1 >= q) {
            return Err(Error::Parse {
                line: ln,
                column: col,
                message: format!("entry {v} not in GF({q})"),
            });
        }
        rows.push(toks.iter().map(|t| t.1 as u32).collect::<Vec<u32>>());
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse {
            line: ln,
            column: 1,
            message: "trailing content after matrix".into(),
        });
    }
    if k == 0 {
        return Err(Error::Parse {
            line: hline,
            column: head[2].0,
            message: "k must be at least 1".into(),
        });
    }
    LinearCode::from_rows(field, &rows).map_err(|e| Error::Parse {
        line: hline,
        column: 1,
        message: e.to_string(),
    })
}

/// (column, value) for each whitespace-separated unsigned integer.
fn tokens(line_no: usize, line: &str) -> Result<Vec<(usize, u64)>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                let tok = &line[s..i];
                let v = tok.parse::<u64>().map_err(|_| Error::Parse {
                    line: line_no,
                    column: s + 1,
                    message: format!("`{tok}` is not a nonnegative integer"),
                })?;
                out.push((s + 1, v));
                start = None;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Renders a code in the matrix text format.
pub fn format_matrix(code: &LinearCode) -> String {
    let mut s = format!("{} {} {}\n", code.q(), code.n(), code.k());
    for r in 0..code.k() {
        let row: Vec<String> = code.gen.row(r).iter().map(ToString::to_string).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}
