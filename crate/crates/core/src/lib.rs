//! Fermat-Weber points of regular polygonal chains and reflection-symmetric
//! point sets.
//!
//! * [`geometry`]: planar primitives (hull, radial order, bisectors, rays).
//! * [`chain`]: the chain `C_n(k)`, its axis objective and exact minimizer.
//! * [`dominance`]: the threshold `N(k)` beyond which an odd chain's Weber
//!   point is its root vertex.
//! * [`weber`]: a general Weiszfeld / Vardi-Zhang solver used as an oracle.
//! * [`symmetry`]: condition A and extension-family detection.

pub mod chain;
pub mod dominance;
pub mod error;
pub mod geometry;
pub mod symmetry;
pub mod weber;

pub use chain::{
    build_chain, minimize_on_axis, objective, objective_derivative, weber_point_chain,
    AxisSolveResult, Parity, RegularChain,
};
pub use dominance::{
    compute_threshold, root_condition_value, upper_bound, verify_threshold_by_solver,
    ThresholdResult,
};
pub use error::{Error, Result};
pub use geometry::{
    bisector_direction, convex_hull, distance, radial_sort, ray_circle_intersection, Point2, Ray,
    Vector2,
};
pub use symmetry::{
    condition_a, detect_extension, materialize, weber_at_pivot, DetectionReport, SymmetricSpec,
};
pub use weber::{descent_test_at_anchor, solve_weber, SolveConfig, WeberSolution};
