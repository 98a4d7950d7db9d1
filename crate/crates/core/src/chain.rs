//! Regular polygonal chains `C_n(k)` and their symmetric objective.
//!
//! A chain is placed in the canonical frame: circumcenter at the origin,
//! line of symmetry along the +x axis. Odd chains have their root vertex at
//! `(1, 0)`; even chains straddle the axis. The Fermat-Weber point lies on
//! the axis, so minimizing the sum of distances reduces to a strictly convex
//! problem in one variable `x in [0, 1]`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::Point2;

/// Slack on the sign tests of the axis derivative at the interval ends.
///
/// At the threshold `N(3) = 6` the derivative at the root vertex is exactly
/// zero, which floating point renders as a value of either sign around 1e-16.
pub const BOUNDARY_TOL: f64 = 1e-13;

/// Width of the bracketing interval at which bisection stops.
pub const AXIS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// `k` consecutive vertices of a regular `n`-gon inscribed in the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularChain {
    n: usize,
    k: usize,
    vertices: Vec<Point2>,
}

impl RegularChain {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 3 || k < 1 || k > n {
            return Err(Error::InvalidChain { n, k });
        }
        let step = PI / n as f64;
        let m = k / 2;
        // Vertex angles, counterclockwise from the lowest vertex.
        let angles: Vec<f64> = if k % 2 == 1 {
            (-(m as i64)..=m as i64)
                .map(|i| 2.0 * i as f64 * step)
                .collect()
        } else {
            (-(m as i64) + 1..=m as i64)
                .map(|i| (2 * i - 1) as f64 * step)
                .collect()
        };
        let vertices = angles.into_iter().map(Point2::from_angle).collect();
        Ok(RegularChain { n, k, vertices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of mirrored vertex pairs (`k = 2m` or `k = 2m + 1`).
    pub fn m(&self) -> usize {
        self.k / 2
    }

    pub fn parity(&self) -> Parity {
        if self.k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Index of the root vertex in [`vertices`](Self::vertices), odd chains only.
    pub fn root_index(&self) -> Option<usize> {
        (self.parity() == Parity::Odd).then(|| self.m())
    }

    /// Cosines of the polar angles of the upper vertices of each mirrored
    /// pair: `cos(2i pi/n)` for odd chains, `cos((2i-1) pi/n)` for even.
    pub fn pair_cosines(&self) -> Vec<f64> {
        let step = PI / self.n as f64;
        (1..=self.m())
            .map(|i| match self.parity() {
                Parity::Odd => (2.0 * i as f64 * step).cos(),
                Parity::Even => ((2 * i - 1) as f64 * step).cos(),
            })
            .collect()
    }
}

/// Location of the Fermat-Weber point on the chain's line of symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxisSolveResult {
    /// Distance of the Weber point from the circumcenter.
    pub x_star: f64,
    /// Sum of distances at `x_star`.
    pub psi_star: f64,
    /// The Weber point is the root vertex (odd chains only).
    pub at_root: bool,
}

pub fn build_chain(n: usize, k: usize) -> Result<RegularChain> {
    RegularChain::new(n, k)
}

fn check_axis_domain(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain {
            value: x,
            domain: "[0, 1]",
        })
    }
}

fn objective_unchecked(chain: &RegularChain, x: f64) -> f64 {
    let pairs: f64 = chain
        .pair_cosines()
        .into_iter()
        .map(|c| 2.0 * (x * x - 2.0 * c * x + 1.0).sqrt())
        .sum();
    match chain.parity() {
        Parity::Odd => (1.0 - x) + pairs,
        Parity::Even => pairs,
    }
}

fn derivative_unchecked(chain: &RegularChain, x: f64) -> f64 {
    let pairs: f64 = chain
        .pair_cosines()
        .into_iter()
        .map(|c| 2.0 * (x - c) / (x * x - 2.0 * c * x + 1.0).sqrt())
        .sum();
    match chain.parity() {
        Parity::Odd => pairs - 1.0,
        Parity::Even => pairs,
    }
}

/// Sum of distances from `(x, 0)` to the chain's vertices, for `x in [0, 1]`.
pub fn objective(chain: &RegularChain, x: f64) -> Result<f64> {
    check_axis_domain(x)?;
    Ok(objective_unchecked(chain, x))
}

/// Derivative of [`objective`] with respect to `x`.
pub fn objective_derivative(chain: &RegularChain, x: f64) -> Result<f64> {
    check_axis_domain(x)?;
    Ok(derivative_unchecked(chain, x))
}

/// Minimizes the (strictly convex) axis objective by bisection on its
/// derivative.
///
/// `k = 1` returns the vertex itself. For `k = 2` every point of the segment
/// between the two vertices is optimal; the bisection lands on its midpoint.
pub fn minimize_on_axis(chain: &RegularChain) -> AxisSolveResult {
    let odd = chain.parity() == Parity::Odd;
    if chain.k() == 1 {
        return AxisSolveResult {
            x_star: 1.0,
            psi_star: 0.0,
            at_root: true,
        };
    }

    let d1 = derivative_unchecked(chain, 1.0);
    if d1 <= BOUNDARY_TOL {
        return AxisSolveResult {
            x_star: 1.0,
            psi_star: objective_unchecked(chain, 1.0),
            at_root: odd,
        };
    }
    let d0 = derivative_unchecked(chain, 0.0);
    if d0 >= -BOUNDARY_TOL {
        return AxisSolveResult {
            x_star: 0.0,
            psi_star: objective_unchecked(chain, 0.0),
            at_root: false,
        };
    }

    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > AXIS_TOL {
        let mid = 0.5 * (lo + hi);
        if derivative_unchecked(chain, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    AxisSolveResult {
        x_star: x,
        psi_star: objective_unchecked(chain, x),
        at_root: false,
    }
}

/// The Fermat-Weber point of the chain in the canonical frame.
pub fn weber_point_chain(chain: &RegularChain) -> Point2 {
    Point2::new(minimize_on_axis(chain).x_star, 0.0)
}
