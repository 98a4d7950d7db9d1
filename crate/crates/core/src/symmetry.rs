//! Reflection-symmetric point sets and their extension families.
//!
//! A reflection-symmetric set has `2m + 1` points on a unit circle: a pivot
//! `s_0` plus `m` mirrored pairs at polar angles `+-theta_i` measured from the
//! pivot. Its Fermat-Weber point is the pivot iff
//! `2 * sum sin(theta_i / 2) - 1 <= 0` ("condition A"). Sliding the
//! non-pivot points along their rays through the pivot leaves the unit
//! vectors at the pivot, and therefore the verdict, unchanged.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    angle_between, bisector_direction, convex_hull_indices, distance, radial_order,
    ray_circle_intersection, same_direction, Point2, Ray, Vector2,
};

/// Maximum angle between the pair bisectors of an accepted pivot.
pub const BISECTOR_TOL: f64 = 1e-9;

/// Condition values this close to zero are reported as exactly zero.
pub const CONDITION_TOL: f64 = 1e-12;

/// A reflection-symmetric set: pivot, circle center and the half-angles of
/// the mirrored pairs (strictly increasing, each in `(0, pi)`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetricSpec {
    pivot: Point2,
    center: Point2,
    half_angles: Vec<f64>,
}

impl SymmetricSpec {
    /// Validates and stores a spec. `half_angles` may be given in any order.
    pub fn new(pivot: Point2, center: Point2, mut half_angles: Vec<f64>) -> Result<Self> {
        if !pivot.is_finite() || !center.is_finite() {
            return Err(Error::NonFinite);
        }
        if half_angles.is_empty() {
            return Err(Error::Degenerate("need at least one mirrored pair".into()));
        }
        let r = distance(pivot, center);
        if (r - 1.0).abs() > 1e-12 {
            return Err(Error::Domain {
                value: r,
                domain: "|pivot - center| = 1",
            });
        }
        if let Some(&bad) = half_angles.iter().find(|t| !(**t > 0.0 && **t < PI)) {
            return Err(Error::Domain {
                value: bad,
                domain: "half-angle in (0, pi)",
            });
        }
        half_angles.sort_by(f64::total_cmp);
        if half_angles.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Degenerate("repeated half-angle".into()));
        }
        Ok(SymmetricSpec {
            pivot,
            center,
            half_angles,
        })
    }

    /// Spec in the canonical frame: center at the origin, pivot at `(1, 0)`.
    pub fn canonical(half_angles: Vec<f64>) -> Result<Self> {
        SymmetricSpec::new(Point2::new(1.0, 0.0), Point2::ORIGIN, half_angles)
    }

    pub fn pivot(&self) -> Point2 {
        self.pivot
    }

    pub fn center(&self) -> Point2 {
        self.center
    }

    pub fn half_angles(&self) -> &[f64] {
        &self.half_angles
    }

    pub fn m(&self) -> usize {
        self.half_angles.len()
    }
}

/// Outcome of testing a point set for membership in an extension family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetectionReport {
    pub is_extension_member: bool,
    pub pivot: Option<Point2>,
    pub pivot_index: Option<usize>,
    /// Unit vector from the pivot towards the reconstructed circle center.
    pub axis_direction: Option<Vector2>,
    pub center: Option<Point2>,
    /// Reconstructed symmetric set, index-aligned with the input.
    pub base_set: Option<Vec<Point2>>,
    pub half_angles: Option<Vec<f64>>,
    pub condition_a_value: Option<f64>,
    pub weber_at_pivot: Option<bool>,
    /// Hull vertices tried as pivots.
    pub candidates_examined: usize,
    pub hull_size: usize,
}

impl DetectionReport {
    fn non_member(candidates_examined: usize, hull_size: usize) -> Self {
        DetectionReport {
            is_extension_member: false,
            pivot: None,
            pivot_index: None,
            axis_direction: None,
            center: None,
            base_set: None,
            half_angles: None,
            condition_a_value: None,
            weber_at_pivot: None,
            candidates_examined,
            hull_size,
        }
    }
}

/// Reconstruction of the symmetric base set about one pivot.
#[derive(Debug, Clone, PartialEq)]
pub struct Extension {
    pub pivot_index: usize,
    pub axis_direction: Vector2,
    pub base: SymmetricSpec,
    /// Index-aligned with the input points; the pivot maps to itself.
    pub base_set: Vec<Point2>,
    pub condition_a_value: f64,
    /// Total distance the input points sit from their base-set images.
    pub displacement: f64,
}

/// The `2m + 1` points of the spec: pivot first, then each pair `(+theta, -theta)`.
pub fn materialize(spec: &SymmetricSpec) -> Vec<Point2> {
    let e1 = spec.pivot - spec.center;
    let e2 = e1.perp();
    let mut out = Vec::with_capacity(2 * spec.m() + 1);
    out.push(spec.pivot);
    for &theta in &spec.half_angles {
        let (s, c) = theta.sin_cos();
        out.push(spec.center + e1 * c + e2 * s);
        out.push(spec.center + e1 * c - e2 * s);
    }
    out
}

fn snap(value: f64) -> f64 {
    if value.abs() <= CONDITION_TOL {
        0.0
    } else {
        value
    }
}

fn condition_from_angles(half_angles: &[f64]) -> f64 {
    2.0 * half_angles.iter().map(|t| (t / 2.0).sin()).sum::<f64>() - 1.0
}

/// `2 * sum sin(theta_i / 2) - 1`; non-positive iff the Weber point of the
/// set is its pivot.
pub fn condition_a(spec: &SymmetricSpec) -> f64 {
    snap(condition_from_angles(&spec.half_angles))
}

fn validate_input(points: &[Point2]) -> Result<()> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    if points.len() < 3 || points.len().is_multiple_of(2) {
        return Err(Error::UnsupportedParity(points.len()));
    }
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Degenerate("duplicate points".into()));
    }
    Ok(())
}

/// Tries `points[pivot_index]` as the pivot of an extension family.
///
/// The other points are sorted radially about the pivot and paired
/// outermost-with-outermost; the pivot qualifies when all pair bisectors
/// agree. The base set is then rebuilt on the unit circle through the pivot
/// centered on the common bisector, by pushing each point along its ray from
/// the pivot onto that circle.
pub fn extension_about(points: &[Point2], pivot_index: usize) -> Option<Extension> {
    let pivot = *points.get(pivot_index)?;
    let others: Vec<usize> = (0..points.len()).filter(|&i| i != pivot_index).collect();
    if others.is_empty() || others.len() % 2 == 1 {
        return None;
    }
    let other_pts: Vec<Point2> = others.iter().map(|&i| points[i]).collect();
    let mut order = radial_order(pivot, &other_pts).ok()?;

    // Start the sweep just after the widest angular gap so the sequence
    // never wraps through the cut at +-pi.
    let angle = |j: usize| (other_pts[j] - pivot).angle();
    let len = order.len();
    let widest = (0..len)
        .map(|j| {
            let gap = angle(order[(j + 1) % len]) - angle(order[j]);
            (j, if j + 1 == len { gap + 2.0 * PI } else { gap })
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(j, _)| j)?;
    order.rotate_left((widest + 1) % len);

    if order
        .windows(2)
        .any(|w| same_direction(pivot, other_pts[w[0]], other_pts[w[1]]))
    {
        return None;
    }

    let m = len / 2;
    let pairs: Vec<(usize, usize)> = (0..m).map(|i| (order[i], order[len - 1 - i])).collect();
    let bisectors: Vec<Vector2> = pairs
        .iter()
        .map(|&(a, b)| bisector_direction(pivot, other_pts[a], other_pts[b]))
        .collect::<Result<_>>()
        .ok()?;
    let first = bisectors[0];
    if bisectors
        .iter()
        .any(|&b| angle_between(first, b) > BISECTOR_TOL)
    {
        return None;
    }
    let axis = bisectors
        .iter()
        .fold(Point2::ORIGIN, |acc, &b| acc + b)
        .normalized()?;
    let center = pivot + axis;

    let mut base_set = points.to_vec();
    for (j, &p) in other_pts.iter().enumerate() {
        let ray = Ray::through(pivot, p).ok()?;
        base_set[others[j]] = ray_circle_intersection(&ray, center, 1.0).ok()?;
    }

    // theta = pi - 2 phi, with phi the angle between a point's ray and the axis.
    let mut half_angles: Vec<f64> = pairs
        .iter()
        .map(|&(a, b)| {
            let phi_a = angle_between(other_pts[a] - pivot, axis);
            let phi_b = angle_between(other_pts[b] - pivot, axis);
            PI - (phi_a + phi_b)
        })
        .collect();
    half_angles.sort_by(f64::total_cmp);
    let base = SymmetricSpec::new(pivot, center, half_angles).ok()?;
    let condition_a_value = condition_a(&base);
    let displacement = points
        .iter()
        .zip(&base_set)
        .map(|(&p, &u)| distance(p, u))
        .sum();

    Some(Extension {
        pivot_index,
        axis_direction: axis,
        base,
        base_set,
        condition_a_value,
        displacement,
    })
}

fn member_report(ext: Extension, candidates_examined: usize, hull_size: usize) -> DetectionReport {
    DetectionReport {
        is_extension_member: true,
        pivot: Some(ext.base.pivot()),
        pivot_index: Some(ext.pivot_index),
        axis_direction: Some(ext.axis_direction),
        center: Some(ext.base.center()),
        half_angles: Some(ext.base.half_angles().to_vec()),
        base_set: Some(ext.base_set),
        condition_a_value: Some(ext.condition_a_value),
        weber_at_pivot: Some(ext.condition_a_value <= 0.0),
        candidates_examined,
        hull_size,
    }
}

/// Decides whether `points` belong to the extension family of some
/// reflection-symmetric set, trying each convex-hull vertex as the pivot.
///
/// Membership only constrains the directions from the pivot, so several
/// hull vertices can qualify: any vertex of a triangle does, and so does
/// every vertex of a point set on a circle whose other points are mirror
/// images about some diameter (every regular chain). The reported pivot is
/// chosen in this order:
///
/// 1. a qualifying vertex satisfying condition A (at most one exists, since
///    it is then the Weber point of the whole set);
/// 2. the vertex whose base set is closest to the input, so a set that is
///    itself reflection symmetric reports its own pivot;
/// 3. hull order, counterclockwise from the lowest vertex.
///
/// Points may sit on a pivot's ray at any positive distance from it,
/// including beyond the reconstructed circle.
pub fn detect_extension(points: &[Point2]) -> Result<DetectionReport> {
    validate_input(points)?;
    let hull = convex_hull_indices(points);
    let mut best: Option<Extension> = None;

    for (visited, &idx) in hull.iter().enumerate() {
        let Some(ext) = extension_about(points, idx) else {
            continue;
        };
        if ext.condition_a_value <= 0.0 {
            return Ok(member_report(ext, visited + 1, hull.len()));
        }
        let better = match &best {
            None => true,
            Some(b) => ext.displacement < b.displacement - BISECTOR_TOL,
        };
        if better {
            best = Some(ext);
        }
    }
    Ok(match best {
        Some(ext) => member_report(ext, hull.len(), hull.len()),
        None => DetectionReport::non_member(hull.len(), hull.len()),
    })
}

/// Whether the Weber point of a member set is its pivot.
pub fn weber_at_pivot(points: &[Point2]) -> Result<bool> {
    let report = detect_extension(points)?;
    report.weber_at_pivot.ok_or(Error::NotAMember)
}
