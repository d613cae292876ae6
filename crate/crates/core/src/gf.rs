//! Arithmetic in finite fields GF(q), q = p^m.
//!
//! Elements are encoded by their canonical index: the coefficient vector of
//! the polynomial representative, read as a little-endian base-p integer.
//! Index 0 is zero and index 1 is one. Multiplication goes through discrete
//! log tables, addition through Zech logarithms (XOR in characteristic 2).
//!
//! The modulus for m > 1 is the monic irreducible of degree m whose lower
//! coefficient vector has the smallest index. This yields t²+t+1 for GF(4),
//! t³+t+1 for GF(8) and t²+1 for GF(9).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on the field order.
pub const DEFAULT_MAX_ORDER: u64 = 1024;

const NO_LOG: u32 = u32::MAX;

/// A finite field GF(p^m) with precomputed log tables. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Option<Vec<u32>>,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

impl Field {
    /// GF(q) with the default order cap.
    pub fn new(q: u64) -> Result<Self> {
        Self::with_cap(q, DEFAULT_MAX_ORDER)
    }

    pub fn with_cap(q: u64, cap: u64) -> Result<Self> {
        let unsupported = |reason: &str| Error::UnsupportedField {
            q,
            reason: reason.into(),
        };
        if q < 2 {
            return Err(unsupported("order must be at least 2"));
        }
        if q > cap {
            return Err(unsupported(&format!("order exceeds cap {cap}")));
        }
        if q > u64::from(u32::MAX) / 2 {
            return Err(unsupported("order too large"));
        }
        let (p, m) = prime_power(q).ok_or_else(|| unsupported("not a prime power"))?;
        Ok(Field(Arc::new(Tables::build(p, m))))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Coefficients (constant term first) of the monic modulus, if m > 1.
    pub fn modulus(&self) -> Option<&[u32]> {
        self.0.modulus.as_deref()
    }

    pub fn element(&self, repr: u64) -> Result<FieldElement> {
        if repr >= u64::from(self.q()) {
            return Err(Error::ElementOutOfRange {
                repr,
                q: u64::from(self.q()),
            });
        }
        Ok(FieldElement {
            field: self.clone(),
            repr: repr as u32,
        })
    }

    /// All q elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q()).map(move |repr| FieldElement {
            field: self.clone(),
            repr,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            repr: 0,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            repr: 1,
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, value: i64) -> u32 {
        value.rem_euclid(i64::from(self.p())) as u32
    }

    /// Base-p digits of an index, little-endian, length m.
    pub fn digits(&self, repr: u32) -> Vec<u32> {
        let p = self.p();
        let mut r = repr;
        (0..self.m())
            .map(|_| {
                let d = r % p;
                r /= p;
                d
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let t = &*self.0;
        if t.p == 2 {
            return a ^ b;
        }
        if t.m == 1 {
            let s = a + b;
            return if s >= t.p { s - t.p } else { s };
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let order = t.q - 1;
        let (la, lb) = (t.log[a as usize], t.log[b as usize]);
        let diff = if lb >= la { lb - la } else { lb + order - la };
        match t.zech[diff as usize] {
            NO_LOG => 0,
            z => t.exp[((la + z) % order) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let t = &*self.0;
        if a == 0 || t.p == 2 {
            return a;
        }
        if t.m == 1 {
            return t.p - a;
        }
        let order = t.q - 1;
        t.exp[((t.log[a as usize] + order / 2) % order) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.0;
        let order = t.q - 1;
        let s = t.log[a as usize] + t.log[b as usize];
        t.exp[(if s >= order { s - order } else { s }) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let t = &*self.0;
        let order = t.q - 1;
        Ok(t.exp[((order - t.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.0;
        let order = u64::from(t.q - 1);
        let l = (u64::from(t.log[a as usize]) * (e % order)) % order;
        t.exp[l as usize]
    }

    /// Discrete log with respect to the table generator; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.0.log[a as usize])
    }

    /// A square root, if one exists.
    pub fn sqrt(&self, a: u32) -> Option<u32> {
        let l = self.log(a)?;
        let order = self.q() - 1;
        if self.p() == 2 {
            // squaring is a bijection; order is odd
            let half = if l % 2 == 0 { l / 2 } else { (l + order) / 2 };
            return Some(self.0.exp[half as usize]);
        }
        (l % 2 == 0).then(|| self.0.exp[(l / 2) as usize])
    }

    /// The field GF(q^r) together with the embedding of this field into it,
    /// as a table indexed by element index.
    pub fn extension(&self, r: u32, cap: u64) -> Result<(Field, Vec<u32>)> {
        if r == 0 {
            return Err(Error::invalid("extension degree must be positive"));
        }
        let big_q = u64::from(self.q())
            .checked_pow(r)
            .ok_or_else(|| Error::UnsupportedField {
                q: u64::MAX,
                reason: "overflow".into(),
            })?;
        let ext = Field::with_cap(big_q, cap)?;
        if self.m() == 1 {
            return Ok((ext, (0..self.q()).collect()));
        }
        let modulus = self.modulus().expect("m > 1 has a modulus");
        let root = (0..ext.q())
            .find(|&beta| {
                let mut acc = 0;
                for &c in modulus.iter().rev() {
                    acc = ext.add(ext.mul(acc, beta), c);
                }
                acc == 0
            })
            .ok_or_else(|| Error::Internal("modulus has no root in extension".into()))?;
        let powers: Vec<u32> = (0..self.m()).map(|i| ext.pow(root, u64::from(i))).collect();
        let table = (0..self.q())
            .map(|repr| {
                self.digits(repr)
                    .iter()
                    .zip(&powers)
                    .fold(0, |acc, (&c, &bp)| ext.add(acc, ext.mul(c, bp)))
            })
            .collect();
        Ok((ext, table))
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.p() == other.p() && self.m() == other.m())
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

impl Tables {
    fn build(p: u32, m: u32) -> Tables {
        let q = p.pow(m);
        let modulus = (m > 1).then(|| smallest_irreducible(p, m));
        let mul_repr = |a: u32, b: u32| -> u32 {
            match &modulus {
                None => ((u64::from(a) * u64::from(b)) % u64::from(p)) as u32,
                Some(f) => poly_mulmod(p, m, a, b, f),
            }
        };
        let order = q - 1;
        let mut exp = Vec::with_capacity(order as usize);
        'candidates: for g in 1..q {
            exp.clear();
            let mut x = 1u32;
            for i in 0..order {
                if i > 0 && x == 1 {
                    continue 'candidates;
                }
                exp.push(x);
                x = mul_repr(x, g);
            }
            if x == 1 {
                break;
            }
        }
        debug_assert_eq!(exp.len(), order as usize);
        let mut log = vec![NO_LOG; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        let zech = exp
            .iter()
            .map(|&v| {
                let d0 = v % p;
                let w = v - d0 + (d0 + 1) % p;
                if w == 0 {
                    NO_LOG
                } else {
                    log[w as usize]
                }
            })
            .collect();
        Tables {
            p,
            m,
            q,
            modulus,
            exp,
            log,
            zech,
        }
    }
}

fn prime_power(q: u64) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut m) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p as u32, m))
}

/// Multiply two packed polynomials over GF(p) modulo the monic `f`.
fn poly_mulmod(p: u32, m: u32, a: u32, b: u32, f: &[u32]) -> u32 {
    let unpack = |mut v: u32| -> Vec<u32> {
        (0..m)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    };
    let (da, db) = (unpack(a), unpack(b));
    let m = m as usize;
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for top in (m..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (j, &fj) in f[..m].iter().enumerate() {
            let idx = top - m + j;
            prod[idx] = (prod[idx] + (p - c) * fj) % p;
        }
        prod[top] = 0;
    }
    prod[..m].iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo the monic `b`, both dense over GF(p).
fn poly_rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - c) * bj) % p;
            }
        }
        r.pop();
    }
    r
}

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree at most deg/2.
pub(crate) fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for lower in 0..p.pow(d as u32) {
            let mut g: Vec<u32> = Vec::with_capacity(d + 1);
            let mut v = lower;
            for _ in 0..d {
                g.push(v % p);
                v /= p;
            }
            g.push(1);
            if poly_rem(p, f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    (0..p.pow(m))
        .map(|lower| {
            let mut f: Vec<u32> = Vec::with_capacity(m as usize + 1);
            let mut v = lower;
            for _ in 0..m {
                f.push(v % p);
                v /= p;
            }
            f.push(1);
            f
        })
        .find(|f| is_irreducible(p, f))
        .expect("an irreducible polynomial of every degree exists")
}

/// An element of a particular field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    repr: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn repr(&self) -> u32 {
        self.repr
    }

    pub fn is_zero(&self) -> bool {
        self.repr == 0
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: u64::from(self.field.q()),
                right: u64::from(other.field.q()),
            });
        }
        Ok(())
    }

    fn with(&self, repr: u32) -> Self {
        FieldElement {
            field: self.field.clone(),
            repr,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.repr, other.repr)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.repr, other.repr)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.repr, other.repr)))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.repr)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.repr, e))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.repr, self.field.q())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.repr)
    }
}

// The operator impls panic on mismatched fields; use the `try_*` methods to
// get an error instead.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands from different fields")
            }
        }
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg(self.repr))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
