//! The hyperbolic-type metric `S~_{G,c}`, the triangular ratio metric, and
//! the comparison formulas relating them.
//!
//! For a reference set `G` and points `x, y`, write `d(x) = d(x, G)`. The
//! basic distance function is
//!
//! ```text
//! s~_G(x, y) = d(x, y) / (sqrt(1 + d(x)) * sqrt(1 + d(y)))
//! ```
//!
//! which fails the triangle inequality in general; its logarithmic form
//!
//! ```text
//! S~_{G,c}(x, y) = log(1 + c * s~_G(x, y))
//! ```
//!
//! is a metric exactly when `c >= 2`, and the threshold is sharp (see
//! [`triangle_deficiency`] and [`sharpness_deficiency`]).

use crate::error::{Error, Result};
use crate::geom::{check_dims, dist_to_set, euclid_dist, BoundarySet, DomainSpec, Point};
use crate::optim::{golden_section_min, grid_then_golden};

/// The constant `c > 0` of the metric `S~_{G,c}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricParams {
    c: f64,
}

impl MetricParams {
    pub fn new(c: f64) -> Result<Self> {
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::InvalidConstant(c));
        }
        Ok(Self { c })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// True iff the triangle inequality is guaranteed, i.e. `c >= 2`.
    pub fn is_metric_regime(&self) -> bool {
        self.c >= 2.0
    }
}

/// `s~_G(x, y)`. Symmetric, zero iff `x == y`; not a metric in general.
pub fn stilde(x: &Point, y: &Point, g: &BoundarySet) -> Result<f64> {
    check_dims(g.dim(), x.dim())?;
    check_dims(g.dim(), y.dim())?;
    let sep = euclid_dist(x, y)?;
    if sep == 0.0 {
        return Ok(0.0);
    }
    let dx = dist_to_set(x, g)?;
    let dy = dist_to_set(y, g)?;
    Ok(sep / ((1.0 + dx).sqrt() * (1.0 + dy).sqrt()))
}

/// `S~_{G,c}(x, y) = log(1 + c * s~_G(x, y))`, evaluated via `ln_1p`.
pub fn stilde_metric(x: &Point, y: &Point, g: &BoundarySet, p: &MetricParams) -> Result<f64> {
    Ok((p.c() * stilde(x, y, g)?).ln_1p())
}

/// Triangle deficiency `h(x, y, z)` of `s~_G`:
///
/// ```text
/// h = (s~(x,y) - s~(x,z) - s~(y,z)) / (s~(x,z) * s~(y,z))
/// ```
///
/// `S~_{G,c}` satisfies the triangle inequality on the triple iff `c >= h`.
/// Requires `z` distinct from both `x` and `y`.
pub fn triangle_deficiency(x: &Point, y: &Point, z: &Point, g: &BoundarySet) -> Result<f64> {
    let axy = stilde(x, y, g)?;
    let axz = stilde(x, z, g)?;
    let ayz = stilde(y, z, g)?;
    if axz == 0.0 || ayz == 0.0 {
        return Err(Error::PointNotInDomain);
    }
    Ok((axy - axz - ayz) / (axz * ayz))
}

/// Closed form of the deficiency for the symmetric witness family on the
/// line: `G = {-M, M}`, `x = t`, `y = -t`, `z = 0` with `t` in `(0, M]`:
///
/// ```text
/// h = 2 sqrt(1 + M) / (sqrt(1 + M) + sqrt(1 + M - t))
/// ```
///
/// At `t = M` this is `2 sqrt(1 + M) / (sqrt(1 + M) + 1)`, which increases
/// to 2 as `M` grows; hence no `c < 2` works for every `G`.
pub fn sharpness_deficiency(m: f64, t: f64) -> Result<f64> {
    if !m.is_finite() || !t.is_finite() || m <= 0.0 || t <= 0.0 || t > m {
        return Err(Error::InvalidConstant(t));
    }
    let s = (1.0 + m).sqrt();
    Ok(2.0 * s / (s + (1.0 + m - t).sqrt()))
}

const TRI_GRID: usize = 1024;
const TRI_TOL: f64 = 1e-10;

/// Triangular ratio metric `t_D(x, y) = |x - y| / inf_a (|x - a| + |y - a|)`
/// over boundary points `a`, for `x, y` in the tagged domain.
///
/// Analytic for half-space domains via reflection; a grid-seeded
/// golden-section minimization of the boundary path length otherwise.
/// Values lie in `[0, 1]`.
pub fn tri_ratio(x: &Point, y: &Point, d: &DomainSpec) -> Result<f64> {
    if !d.contains(x)? || !d.contains(y)? {
        return Err(Error::PointNotInDomain);
    }
    let sep = euclid_dist(x, y)?;
    if sep == 0.0 {
        return Ok(0.0);
    }
    let inf = min_boundary_path(x, y, &d.boundary)?;
    Ok(sep / inf)
}

/// `inf { |x - a| + |y - a| : a in G }`.
fn min_boundary_path(x: &Point, y: &Point, g: &BoundarySet) -> Result<f64> {
    let path = |a: &Point| euclid_dist(x, a).unwrap() + euclid_dist(y, a).unwrap();
    match g {
        BoundarySet::HalfSpaceBoundary { normal, offset } => {
            // reflection principle: the shortest boundary path equals the
            // straight run to the mirrored endpoint
            let s = y.dot(normal)? - offset;
            let reflected = y.add_scaled(normal, -2.0 * s)?;
            euclid_dist(x, &reflected)
        }
        BoundarySet::FinitePointSet { points } => {
            Ok(points.iter().map(&path).fold(f64::INFINITY, f64::min))
        }
        BoundarySet::PolygonalChain { vertices, closed } => {
            let mut best = f64::INFINITY;
            for (p, q) in BoundarySet::segments(vertices, *closed) {
                let dir = q.sub(&p)?;
                // |x - a(t)| + |y - a(t)| is convex in t on each segment
                let f = |t: f64| path(&p.add_scaled(&dir, t).unwrap());
                let (_, v) = golden_section_min(f, 0.0, 1.0, TRI_TOL);
                best = best.min(v.min(f(0.0)).min(f(1.0)));
            }
            Ok(best)
        }
        BoundarySet::Sphere { center, radius } => {
            // The minimizer lies in the plane through x, y and the center,
            // so reduce to a circle parameterized by angle.
            let cx = x.sub(center)?;
            let cy = y.sub(center)?;
            let (u, v) = plane_basis(&cx, &cy);
            let f = |theta: f64| {
                let a = center
                    .add_scaled(&u, radius * theta.cos())
                    .unwrap()
                    .add_scaled(&v, radius * theta.sin())
                    .unwrap();
                path(&a)
            };
            let (_, best) = grid_then_golden(f, 0.0, 2.0 * std::f64::consts::PI, TRI_GRID, TRI_TOL);
            Ok(best)
        }
    }
}

/// Orthonormal basis of a plane containing both given vectors (any plane
/// containing them when they are collinear or zero).
fn plane_basis(a: &Point, b: &Point) -> (Point, Point) {
    let dim = a.dim();
    let unit = |i: usize| {
        let mut c = vec![0.0; dim];
        c[i] = 1.0;
        Point::new(c).unwrap()
    };
    let u = if a.norm() > 1e-300 {
        a.scale(1.0 / a.norm())
    } else if b.norm() > 1e-300 {
        b.scale(1.0 / b.norm())
    } else {
        unit(0)
    };
    let mut w = b.add_scaled(&u, -b.dot(&u).unwrap()).unwrap();
    if w.norm() < 1e-12 * (1.0 + b.norm()) {
        // collinear: orthogonalize the axis least aligned with u
        let k = (0..dim)
            .min_by(|&i, &j| {
                u.coords()[i]
                    .abs()
                    .partial_cmp(&u.coords()[j].abs())
                    .unwrap()
            })
            .unwrap();
        let e = unit(k);
        w = e.add_scaled(&u, -e.dot(&u).unwrap()).unwrap();
    }
    let v = w.scale(1.0 / w.norm());
    (u, v)
}

/// `th(rho/2)` for the hyperbolic metric `rho` of the unit ball:
///
/// ```text
/// th(rho/2) = |x - y| / sqrt(|x - y|^2 + (1 - |x|^2)(1 - |y|^2))
/// ```
pub fn hyperbolic_th_half(x: &Point, y: &Point) -> Result<f64> {
    let (nx, ny) = (x.norm(), y.norm());
    if nx >= 1.0 || ny >= 1.0 {
        return Err(Error::NotInUnitBall);
    }
    let sep = euclid_dist(x, y)?;
    if sep == 0.0 {
        return Ok(0.0);
    }
    Ok(sep / (sep * sep + (1.0 - nx * nx) * (1.0 - ny * ny)).sqrt())
}

/// The hyperbolic metric of the unit ball, `rho = 2 artanh(th(rho/2))`.
pub fn hyperbolic_dist(x: &Point, y: &Point) -> Result<f64> {
    Ok(2.0 * hyperbolic_th_half(x, y)?.atanh())
}

/// Upper envelope `log(2c th(rho/2) + 1)` for `S~` against the unit sphere;
/// dominates `S~_{S^{n-1},c}(x, y)` for `x, y` in the punctured unit ball.
pub fn hyperbolic_upper_bound(x: &Point, y: &Point, p: &MetricParams) -> Result<f64> {
    if x.norm() == 0.0 || y.norm() == 0.0 {
        return Err(Error::OriginExcluded);
    }
    Ok((2.0 * p.c() * hyperbolic_th_half(x, y)?).ln_1p())
}

/// Two-sided envelope for `S~_{dD,c}` in terms of the triangular ratio
/// metric, with `d_xy = min(d(x), d(y))`:
///
/// ```text
/// log(1 + 2c d_xy t / (1 + d_xy))  <=  S~  <=  log(1 + 2c d_xy t / ((1 + d_xy)(1 - t)))
/// ```
///
/// The upper value is `+inf` when `t == 1`.
pub fn t_comparison_bounds(
    x: &Point,
    y: &Point,
    d: &DomainSpec,
    p: &MetricParams,
) -> Result<(f64, f64)> {
    let t = tri_ratio(x, y, d)?;
    let dx = dist_to_set(x, &d.boundary)?;
    let dy = dist_to_set(y, &d.boundary)?;
    let dxy = dx.min(dy);
    let base = 2.0 * p.c() * dxy * t / (1.0 + dxy);
    let lower = base.ln_1p();
    let upper = if t >= 1.0 {
        f64::INFINITY
    } else {
        (base / (1.0 - t)).ln_1p()
    };
    Ok((lower, upper))
}

/// Radii relating triangular-ratio balls to `S~` balls around a point with
/// boundary distance `dx`: `B_t(x, inner) ⊂ B_S~(x, r) ⊂ B_t(x, outer)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallInclusionRadii {
    /// `l = (e^r - 1)(1 + dx) / ((e^r - 1)(1 + dx) + 2c dx)`, in (0, 1).
    pub inner: f64,
    /// `L = (e^r - 1)(1 + dx) / (c dx)`.
    pub outer: f64,
    pub r: f64,
    pub dx: f64,
}

/// The inclusion radii for an `S~`-ball of radius `r` around a point with
/// `d(x) = dx > 0`.
pub fn ball_inclusion_radii(dx: f64, r: f64, p: &MetricParams) -> Result<BallInclusionRadii> {
    if dx == 0.0 {
        return Err(Error::BallRadiiOnBoundary);
    }
    if !dx.is_finite() || dx < 0.0 {
        return Err(Error::InvalidConstant(dx));
    }
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::InvalidBallRadius(r));
    }
    let e = r.exp_m1() * (1.0 + dx);
    Ok(BallInclusionRadii {
        inner: e / (e + 2.0 * p.c() * dx),
        outer: e / (p.c() * dx),
        r,
        dx,
    })
}

/// Two-sided estimate of the Euclidean distance recovered from an `S~` value:
///
/// ```text
/// min(1 + d(x), 1 + d(y)) (e^S~ - 1) / c  <=  d(x,y)  <=  (2 + d(x) + d(y)) (e^S~ - 1) / (2c)
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceSandwich {
    pub lower: f64,
    pub upper: f64,
}

/// Evaluate the sandwich at `(x, y)`. `e^S~ - 1` is recovered as
/// `c * s~(x, y)` directly, which is exact and avoids exponentiating.
pub fn distance_sandwich(
    x: &Point,
    y: &Point,
    g: &BoundarySet,
    _p: &MetricParams,
) -> Result<DistanceSandwich> {
    let s = stilde(x, y, g)?;
    let dx = dist_to_set(x, g)?;
    let dy = dist_to_set(y, g)?;
    Ok(DistanceSandwich {
        lower: (1.0 + dx).min(1.0 + dy) * s,
        upper: (2.0 + dx + dy) * s / 2.0,
    })
}
