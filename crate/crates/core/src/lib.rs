//! Exact weight enumerators, MacWilliams transforms and zeta polynomials of
//! linear codes over small finite fields, together with evaluation codes on
//! curves of genus 0 and 1.

pub mod ag;
pub mod classify;
pub mod enumerator;
pub mod error;
pub mod gf;
pub mod linear_code;
pub mod roots;
pub mod zeta;

pub use error::{Error, Result};
