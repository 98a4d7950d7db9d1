//! Iterative Fermat-Weber solver for arbitrary planar point sets.
//!
//! Weiszfeld's distance-weighted averaging is undefined at the data points,
//! which is exactly where the interesting optima of this crate sit. Each
//! iteration therefore tests the data point nearest the iterate with the
//! anchor optimality condition; an anchor that fails the test is left with
//! the Vardi-Zhang modified step. Away from the data points a Newton step
//! replaces the Weiszfeld step whenever it lowers the objective further.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{distance, orient, Point2, COLLINEAR_TOL};

/// Slack on the anchor test: an anchor whose resultant exceeds 1 by no more
/// than this is accepted as the minimizer.
pub const ANCHOR_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig {
    /// Stop once an iteration moves the iterate less than this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Iterates this close to a data point are treated as sitting on it.
    pub vertex_snap_radius: f64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            tolerance: 1e-12,
            max_iterations: 1_000_000,
            vertex_snap_radius: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeberSolution {
    pub location: Point2,
    /// Sum of distances from `location` to the input points.
    pub objective: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Set when the solution is one of the input points.
    pub at_fixed_point_index: Option<usize>,
}

/// Sum of Euclidean distances from `p` to every point.
pub fn sum_of_distances(points: &[Point2], p: Point2) -> f64 {
    points.iter().map(|&q| distance(p, q)).sum()
}

/// Resultant of the unit vectors from the anchor towards every other point.
/// Exact duplicates of the anchor contribute nothing.
fn anchor_resultant(points: &[Point2], anchor: usize) -> Point2 {
    let a = points[anchor];
    points
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != anchor)
        .filter_map(|(_, &p)| (p - a).normalized())
        .fold(Point2::ORIGIN, |acc, u| acc + u)
}

/// `|sum_{i != anchor} unit(p_i - p_anchor)| - 1`.
///
/// Non-positive exactly when the anchor is a Fermat-Weber point.
pub fn descent_test_at_anchor(points: &[Point2], anchor_index: usize) -> Result<f64> {
    if anchor_index >= points.len() {
        return Err(Error::IndexOutOfRange {
            index: anchor_index,
            len: points.len(),
        });
    }
    Ok(anchor_resultant(points, anchor_index).norm() - 1.0)
}

/// One Weiszfeld step from `y`, assumed away from every data point.
pub fn weiszfeld_step(points: &[Point2], y: Point2) -> Point2 {
    let mut num = Point2::ORIGIN;
    let mut den = 0.0;
    for &p in points {
        let w = 1.0 / distance(p, y);
        num = num + p * w;
        den += w;
    }
    num * (1.0 / den)
}

/// Newton step on the smooth objective from `y`, assumed away from every
/// data point. `None` when the Hessian is numerically singular.
pub fn newton_step(points: &[Point2], y: Point2) -> Option<Point2> {
    let (mut gx, mut gy) = (0.0, 0.0);
    let (mut hxx, mut hxy, mut hyy) = (0.0, 0.0, 0.0);
    for &p in points {
        let v = y - p;
        let d = v.norm();
        let (ux, uy) = (v.x / d, v.y / d);
        gx += ux;
        gy += uy;
        hxx += (1.0 - ux * ux) / d;
        hxy -= ux * uy / d;
        hyy += (1.0 - uy * uy) / d;
    }
    let det = hxx * hyy - hxy * hxy;
    if !(det > 1e-300) || !det.is_finite() {
        return None;
    }
    let dx = (hyy * gx - hxy * gy) / det;
    let dy = (hxx * gy - hxy * gx) / det;
    Some(Point2::new(y.x - dx, y.y - dy))
}

/// Vardi-Zhang step from a data point that failed the anchor test.
///
/// With `T` the Weiszfeld average of the other points and `r > 1` the norm
/// of their unit-vector resultant, the next iterate is
/// `(1 - 1/r) T + (1/r) p_anchor`, which strictly decreases the objective.
pub fn anchor_escape_step(points: &[Point2], anchor: usize) -> Point2 {
    let a = points[anchor];
    let mut num = Point2::ORIGIN;
    let mut den = 0.0;
    for (i, &p) in points.iter().enumerate() {
        if i == anchor {
            continue;
        }
        let d = distance(p, a);
        if d > 0.0 {
            num = num + p * (1.0 / d);
            den += 1.0 / d;
        }
    }
    let r = anchor_resultant(points, anchor).norm();
    if den == 0.0 || r <= 1.0 {
        return a;
    }
    let t = num * (1.0 / den);
    t * (1.0 - 1.0 / r) + a * (1.0 / r)
}

fn validate(points: &[Point2]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// Direction of the line through all points, or `None` if they are not collinear.
/// Coincident input yields `Some(None)`.
fn collinear_direction(points: &[Point2]) -> Option<Option<Point2>> {
    let a = points[0];
    let far = points
        .iter()
        .copied()
        .max_by(|p, q| distance(a, *p).total_cmp(&distance(a, *q)))?;
    let span = distance(a, far);
    if span == 0.0 {
        return Some(None);
    }
    let scale = span.max(1.0);
    let on_line = points
        .iter()
        .all(|&p| orient(a, far, p).abs() <= COLLINEAR_TOL * scale * scale);
    on_line.then(|| (far - a).normalized())
}

fn snapped_index(points: &[Point2], p: Point2, radius: f64) -> Option<usize> {
    points
        .iter()
        .enumerate()
        .map(|(i, &q)| (i, distance(p, q)))
        .filter(|&(_, d)| d <= radius)
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(i, _)| i)
}

fn finish(points: &[Point2], location: Point2, iterations: usize, converged: bool, config: &SolveConfig) -> WeberSolution {
    let at_fixed_point_index = snapped_index(points, location, config.vertex_snap_radius);
    let location = at_fixed_point_index.map_or(location, |i| points[i]);
    WeberSolution {
        location,
        objective: sum_of_distances(points, location),
        iterations,
        converged,
        at_fixed_point_index,
    }
}

/// Median along a common line; for an even count the midpoint of the middle pair.
fn solve_collinear(points: &[Point2], dir: Point2, config: &SolveConfig) -> WeberSolution {
    let a = points[0];
    let mut params: Vec<f64> = points.iter().map(|&p| (p - a).dot(dir)).collect();
    params.sort_by(f64::total_cmp);
    let n = params.len();
    let t = if n % 2 == 1 {
        params[n / 2]
    } else {
        0.5 * (params[n / 2 - 1] + params[n / 2])
    };
    finish(points, a + dir * t, 0, true, config)
}

/// Computes the Fermat-Weber point of `points`.
///
/// When every point lies on one line the minimizer is not unique; the
/// median (or the midpoint of the median segment) is returned.
pub fn solve_weber(points: &[Point2], config: &SolveConfig) -> Result<WeberSolution> {
    validate(points)?;
    if !(config.tolerance > 0.0) || !(config.vertex_snap_radius >= 0.0) {
        return Err(Error::Domain {
            value: config.tolerance,
            domain: "tolerance > 0 and vertex_snap_radius >= 0",
        });
    }
    match collinear_direction(points) {
        Some(None) => return Ok(finish(points, points[0], 0, true, config)),
        Some(Some(dir)) => return Ok(solve_collinear(points, dir, config)),
        None => {}
    }

    let n = points.len() as f64;
    let mut y = points.iter().fold(Point2::ORIGIN, |acc, &p| acc + p) * (1.0 / n);
    let mut rejected = vec![false; points.len()];

    for iter in 1..=config.max_iterations {
        let (nearest, d_near) = points
            .iter()
            .enumerate()
            .map(|(i, &p)| (i, distance(p, y)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty");

        if !rejected[nearest] {
            if anchor_resultant(points, nearest).norm() - 1.0 <= ANCHOR_TOL {
                return Ok(finish(points, points[nearest], iter, true, config));
            }
            rejected[nearest] = true;
        }

        let next = if d_near <= config.vertex_snap_radius {
            anchor_escape_step(points, nearest)
        } else {
            // Weiszfeld alone crawls on thin configurations; take the Newton
            // point whenever it does at least as well.
            let w = weiszfeld_step(points, y);
            match newton_step(points, y) {
                Some(n) if sum_of_distances(points, n) <= sum_of_distances(points, w) => n,
                _ => w,
            }
        };
        let moved = distance(next, y);
        y = next;
        if moved < config.tolerance {
            return Ok(finish(points, y, iter, true, config));
        }
    }
    Ok(finish(points, y, config.max_iterations, false, config))
}
