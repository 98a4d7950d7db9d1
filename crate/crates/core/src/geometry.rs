//! Planar primitives: points, distances, convex hull, radial sorting,
//! angle bisectors and ray/circle intersection.
//!
//! Everything here works in "unit-circle scale": the constructions built on
//! top of these helpers live on or near a circle of radius 1, so the
//! tolerances below are absolute.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cross-product threshold below which three points are treated as collinear.
pub const COLLINEAR_TOL: f64 = 1e-12;

/// A point (or free vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

/// Free vectors share the point representation.
pub type Vector2 = Point2;

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    /// Like [`Point2::new`] but rejects NaN and infinite coordinates.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Point2 { x, y })
        } else {
            Err(Error::NonFinite)
        }
    }

    /// Unit vector at angle `theta` (radians, CCW from +x).
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Point2 { x: c, y: s }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Vector2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, other: Vector2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vector2> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(Point2::new(self.x / n, self.y / n))
        } else {
            None
        }
    }

    /// Rotate by +90 degrees.
    pub fn perp(self) -> Vector2 {
        Point2::new(-self.y, self.x)
    }

    /// Angle in (-pi, pi], CCW positive.
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Point2 {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Point2::new(x, y)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

/// A half-line with a unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ray {
    origin: Point2,
    direction: Vector2,
}

impl Ray {
    /// Builds a ray, normalizing `direction`. Fails on a zero direction.
    pub fn new(origin: Point2, direction: Vector2) -> Result<Self> {
        let direction = direction
            .normalized()
            .ok_or_else(|| Error::Degenerate("ray direction is the zero vector".into()))?;
        Ok(Ray { origin, direction })
    }

    /// The ray starting at `origin` and passing through `target`.
    pub fn through(origin: Point2, target: Point2) -> Result<Self> {
        Ray::new(origin, target - origin)
    }

    pub fn origin(&self) -> Point2 {
        self.origin
    }

    pub fn direction(&self) -> Vector2 {
        self.direction
    }

    pub fn at(&self, t: f64) -> Point2 {
        self.origin + self.direction * t
    }
}

pub fn distance(a: Point2, b: Point2) -> f64 {
    (a - b).norm()
}

/// Orientation of the triple (a, b, c): positive for a left turn.
pub fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

/// Convex hull in counterclockwise order (Andrew's monotone chain).
///
/// The output starts at the lowest vertex (leftmost among ties) and contains
/// no three consecutive collinear vertices. Coincident input collapses to a
/// single point and collinear input to its two endpoints.
pub fn convex_hull(points: &[Point2]) -> Vec<Point2> {
    convex_hull_indices(points)
        .into_iter()
        .map(|i| points[i])
        .collect()
}

/// Same as [`convex_hull`] but returns indices into `points`.
pub fn convex_hull_indices(points: &[Point2]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        let (p, q) = (points[a], points[b]);
        p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
    });
    order.dedup_by(|a, b| points[*a] == points[*b]);

    if order.len() <= 2 {
        return order;
    }

    // Pops on cross <= tol so collinear points never survive.
    let turn = |hull: &[usize], c: usize| {
        let n = hull.len();
        orient(points[hull[n - 2]], points[hull[n - 1]], points[c]) <= COLLINEAR_TOL
    };

    let mut hull: Vec<usize> = Vec::with_capacity(order.len() + 1);
    for &i in &order {
        while hull.len() >= 2 && turn(&hull, i) {
            hull.pop();
        }
        hull.push(i);
    }
    let lower_len = hull.len() + 1;
    for &i in order.iter().rev().skip(1) {
        while hull.len() >= lower_len && turn(&hull, i) {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();

    if hull.len() < 3 {
        // All collinear: keep the two extremes.
        let first = order[0];
        let last = *order.last().unwrap();
        return vec![first, last];
    }

    let start = hull
        .iter()
        .enumerate()
        .min_by(|(_, &a), (_, &b)| {
            let (p, q) = (points[a], points[b]);
            p.y.total_cmp(&q.y).then(p.x.total_cmp(&q.x))
        })
        .map(|(pos, _)| pos)
        .unwrap_or(0);
    hull.rotate_left(start);
    hull
}

/// True when `a - pivot` and `b - pivot` point the same way.
pub fn same_direction(pivot: Point2, a: Point2, b: Point2) -> bool {
    let (u, v) = (a - pivot, b - pivot);
    u.cross(v).abs() <= COLLINEAR_TOL * u.norm() * v.norm() && u.dot(v) > 0.0
}

/// Indices of `points` sorted by CCW angle about `pivot`, angles in (-pi, pi].
///
/// Points on a common ray from the pivot are ordered nearest first.
pub fn radial_order(pivot: Point2, points: &[Point2]) -> Result<Vec<usize>> {
    if points.contains(&pivot) {
        return Err(Error::Degenerate(
            "radial sort: a point coincides with the pivot".into(),
        ));
    }
    let keys: Vec<(f64, f64)> = points
        .iter()
        .map(|&p| ((p - pivot).angle(), distance(p, pivot)))
        .collect();
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        keys[a]
            .0
            .total_cmp(&keys[b].0)
            .then(keys[a].1.total_cmp(&keys[b].1))
    });

    // atan2 can split points of one ray by an ulp; regroup such runs by distance.
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len()
            && same_direction(pivot, points[order[start]], points[order[end]])
        {
            end += 1;
        }
        order[start..end].sort_by(|&a, &b| keys[a].1.total_cmp(&keys[b].1));
        start = end;
    }
    Ok(order)
}

/// Points sorted by CCW angle about `pivot`; see [`radial_order`].
pub fn radial_sort(pivot: Point2, points: &[Point2]) -> Result<Vec<Point2>> {
    Ok(radial_order(pivot, points)?
        .into_iter()
        .map(|i| points[i])
        .collect())
}

/// Internal bisector of the angle a-pivot-b as a unit vector.
pub fn bisector_direction(pivot: Point2, a: Point2, b: Point2) -> Result<Vector2> {
    let ua = (a - pivot)
        .normalized()
        .ok_or_else(|| Error::Degenerate("bisector: first arm has zero length".into()))?;
    let ub = (b - pivot)
        .normalized()
        .ok_or_else(|| Error::Degenerate("bisector: second arm has zero length".into()))?;
    let sum = ua + ub;
    if sum.norm() <= COLLINEAR_TOL {
        return Err(Error::Degenerate(
            "bisector undefined: pivot lies between the two points".into(),
        ));
    }
    Ok(sum.normalized().expect("non-zero sum"))
}

/// Unsigned angle between two non-zero vectors, in [0, pi].
pub fn angle_between(u: Vector2, v: Vector2) -> f64 {
    u.cross(v).abs().atan2(u.dot(v))
}

/// Forward intersection of a ray with a circle.
///
/// * origin outside the circle: the first hit along the ray;
/// * origin inside: the unique forward hit;
/// * origin on the circle: the far end of the chord, if the ray enters the disk.
pub fn ray_circle_intersection(ray: &Ray, center: Point2, radius: f64) -> Result<Point2> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::Domain {
            value: radius,
            domain: "radius > 0",
        });
    }
    // |o + t d - c|^2 = r^2 with |d| = 1  =>  t^2 + 2 b t + c0 = 0
    let w = ray.origin() - center;
    let b = w.dot(ray.direction());
    let c0 = w.dot(w) - radius * radius;
    let disc = b * b - c0;
    if disc < 0.0 {
        return Err(Error::NoIntersection);
    }
    let root = disc.sqrt();
    let eps = COLLINEAR_TOL * radius.max(1.0);

    let t = if c0.abs() <= eps * radius {
        // Origin on the circle: roots are 0 and -2b.
        let far = -2.0 * b;
        if far > eps {
            far
        } else {
            return Err(Error::NoIntersection);
        }
    } else if c0 < 0.0 {
        -b + root
    } else {
        // Both roots share a sign; stable form for the smaller one.
        let near = if b < 0.0 { c0 / (-b + root) } else { -b - root };
        if near > 0.0 && b < 0.0 {
            near
        } else {
            return Err(Error::NoIntersection);
        }
    };
    Ok(ray.at(t))
}
