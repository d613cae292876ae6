//! Curves of genus 0 and 1 over finite fields and their evaluation codes.

pub mod codes;
pub mod curve;
pub mod curve_zeta;
pub mod divisor;
pub mod fiber;

pub use codes::{
    amin_coprime, amin_onepoint, bl_bounds, bl_coefficients, elliptic_code,
    elliptic_distribution_from_amin, grs_code, riemann_roch_basis, BlBound,
};
pub use curve::{
    format_curve, parse_curve, parse_point, CurvePoint, EllipticCurve, DEFAULT_EXTENSION_CAP,
};
pub use curve_zeta::{curve_rh, zeta_from_point_counts, CurveZeta};
pub use divisor::{parse_divisor, Divisor};
pub use fiber::{
    distribution_from_fibers, fiber_count, fiber_counts, fiber_counts_for_class, Curve, LinePoint,
    ProjectiveLine, DEFAULT_FIBER_BUDGET,
};
