//! Tolerances used by the property suites. All comparisons are on `f64`.

/// Slack granted to the deciding component of a `≤` between dual numbers.
pub const ORDER_SLACK: f64 = 1e-12;

/// Relative tolerance for multiplicativity of magnitudes and norm
/// homogeneity.
pub const PRODUCT_REL: f64 = 1e-9;

/// Agreement of the closed-form 2-norm with the piecewise definition.
pub const CLOSED_FORM_REL: f64 = 1e-9;

/// Identities that only differ by a handful of roundings: `|q| = √(q²)`,
/// the two magnitude routes, inverse round trips, mixed-sum realness.
pub const TIGHT: f64 = 1e-12;

/// Default threshold for the unit and orthonormality checks.
pub const UNIT_TOL: f64 = 1e-9;

/// Lower bound on the mixed-sum offset of constructed non-unit dual
/// quaternions.
pub const NON_UNIT_OFFSET: f64 = 1e-3;
