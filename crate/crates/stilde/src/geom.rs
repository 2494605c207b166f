//! Points, boundary sets, and distance-to-set computation.
//!
//! The ambient space is `R^n` with the Euclidean metric. A [`BoundarySet`]
//! plays the role of the reference set `G` against which the point distance
//! `d(x) = d(x, G)` is taken; a [`DomainSpec`] additionally remembers which
//! side of the boundary counts as the domain, which is needed by operations
//! that require their arguments to lie inside it.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A point of `R^n`.
///
/// Coordinates are finite and the dimension is at least 1; both are enforced
/// on construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinitePoint);
        }
        Ok(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Euclidean norm `|x|`.
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// `x - y`, checking dimensions.
    pub fn sub(&self, other: &Point) -> Result<Point> {
        check_dims(self.dim(), other.dim())?;
        Ok(Point {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `x + t * v`, checking dimensions.
    pub fn add_scaled(&self, v: &Point, t: f64) -> Result<Point> {
        check_dims(self.dim(), v.dim())?;
        Ok(Point {
            coords: self
                .coords
                .iter()
                .zip(&v.coords)
                .map(|(a, b)| a + t * b)
                .collect(),
        })
    }

    pub fn scale(&self, t: f64) -> Point {
        Point {
            coords: self.coords.iter().map(|a| a * t).collect(),
        }
    }

    pub fn dot(&self, other: &Point) -> Result<f64> {
        check_dims(self.dim(), other.dim())?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum())
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;
    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Point::new(coords)
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Vec<f64> {
        p.coords
    }
}

/// Convenience constructor; panics on invalid coordinates.
///
/// Intended for examples and tests where the input is a literal.
pub fn point(coords: &[f64]) -> Point {
    Point::new(coords.to_vec()).expect("invalid point literal")
}

pub(crate) fn check_dims(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

/// The reference set `G` against which point distances are taken.
///
/// Analytic variants (sphere, half-space boundary) have closed-form point
/// distances; discrete variants (finite point set, polygonal chain) are
/// minimized exactly over their members or segments.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundarySet {
    /// The sphere `|x - center| = radius`.
    Sphere { center: Point, radius: f64 },
    /// The hyperplane `<normal, x> = offset` with `|normal| = 1`.
    HalfSpaceBoundary { normal: Point, offset: f64 },
    /// A nonempty finite set of points.
    FinitePointSet { points: Vec<Point> },
    /// A polygonal chain in the plane; `closed` adds the segment from the
    /// last vertex back to the first.
    PolygonalChain { vertices: Vec<Point>, closed: bool },
}

impl BoundarySet {
    pub fn sphere(center: Point, radius: f64) -> Result<Self> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Self::Sphere { center, radius })
    }

    pub fn half_space(normal: Point, offset: f64) -> Result<Self> {
        let n = normal.norm();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::NonUnitNormal(n));
        }
        if !offset.is_finite() {
            return Err(Error::NonFinitePoint);
        }
        Ok(Self::HalfSpaceBoundary { normal, offset })
    }

    pub fn finite(points: Vec<Point>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyPointSet)?;
        let dim = first.dim();
        for p in &points {
            check_dims(dim, p.dim())?;
        }
        Ok(Self::FinitePointSet { points })
    }

    /// Finite subset of the real line, a common test fixture.
    pub fn finite_on_line(values: &[f64]) -> Result<Self> {
        Self::finite(values.iter().map(|&v| point(&[v])).collect())
    }

    pub fn chain(vertices: Vec<Point>, closed: bool) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::ChainTooShort);
        }
        for v in &vertices {
            if v.dim() != 2 {
                return Err(Error::ChainNotPlanar(v.dim()));
            }
        }
        for i in 0..vertices.len() - 1 {
            if vertices[i] == vertices[i + 1] {
                return Err(Error::ChainDuplicateVertex(i));
            }
        }
        if closed && vertices[0] == vertices[vertices.len() - 1] {
            return Err(Error::ChainDuplicateVertex(vertices.len() - 1));
        }
        Ok(Self::PolygonalChain { vertices, closed })
    }

    /// Regular `k`-gon inscribed in the circle `|x - center| = radius`,
    /// as a closed chain.
    pub fn regular_polygon(center: &Point, radius: f64, k: usize) -> Result<Self> {
        check_dims(2, center.dim())?;
        if k < 3 {
            return Err(Error::ChainTooShort);
        }
        let c = center.coords();
        let vertices = (0..k)
            .map(|i| {
                let theta = 2.0 * std::f64::consts::PI * i as f64 / k as f64;
                point(&[c[0] + radius * theta.cos(), c[1] + radius * theta.sin()])
            })
            .collect();
        Self::chain(vertices, true)
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Sphere { center, .. } => center.dim(),
            Self::HalfSpaceBoundary { normal, .. } => normal.dim(),
            Self::FinitePointSet { points } => points[0].dim(),
            Self::PolygonalChain { .. } => 2,
        }
    }

    /// Segments of a chain, including the closing one when `closed`.
    pub(crate) fn segments(vertices: &[Point], closed: bool) -> Vec<(Point, Point)> {
        let mut segs: Vec<(Point, Point)> = vertices
            .windows(2)
            .map(|w| (w[0].clone(), w[1].clone()))
            .collect();
        if closed {
            segs.push((vertices[vertices.len() - 1].clone(), vertices[0].clone()));
        }
        segs
    }
}

/// Which side of a boundary counts as the domain.
///
/// For a sphere, `Inside` is the open ball. For a half-space boundary,
/// `Inside` is the side the normal points toward, `<normal, x> > offset`.
/// For a closed chain, `Inside` is the polygon interior. A finite point set
/// has no sides; its "domain" is the complement of the set on either tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InteriorSide {
    Inside,
    Outside,
}

/// A boundary set together with an optional interior tag.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainSpec {
    pub boundary: BoundarySet,
    pub interior: Option<InteriorSide>,
}

impl DomainSpec {
    pub fn new(boundary: BoundarySet, interior: Option<InteriorSide>) -> Self {
        Self { boundary, interior }
    }

    /// The open unit disc of the plane.
    pub fn unit_disc() -> Self {
        Self::new(
            BoundarySet::sphere(point(&[0.0, 0.0]), 1.0).unwrap(),
            Some(InteriorSide::Inside),
        )
    }

    /// The open upper half-plane `{(u, v) : v > 0}`.
    pub fn upper_half_plane() -> Self {
        Self::new(
            BoundarySet::half_space(point(&[0.0, 1.0]), 0.0).unwrap(),
            Some(InteriorSide::Inside),
        )
    }

    pub fn dim(&self) -> usize {
        self.boundary.dim()
    }

    /// Whether `x` lies in the tagged domain.
    ///
    /// Errors when no interior tag is present or the boundary variant has no
    /// interior on the requested side (an open chain, or a finite set whose
    /// complement is the only sensible reading).
    pub fn contains(&self, x: &Point) -> Result<bool> {
        let side = self.interior.ok_or(Error::MissingInterior)?;
        check_dims(self.dim(), x.dim())?;
        match &self.boundary {
            BoundarySet::Sphere { center, radius } => {
                let d = euclid_dist(x, center)?;
                Ok(match side {
                    InteriorSide::Inside => d < *radius,
                    InteriorSide::Outside => d > *radius,
                })
            }
            BoundarySet::HalfSpaceBoundary { normal, offset } => {
                let s = x.dot(normal)? - offset;
                Ok(match side {
                    InteriorSide::Inside => s > 0.0,
                    InteriorSide::Outside => s < 0.0,
                })
            }
            BoundarySet::FinitePointSet { .. } => Ok(dist_to_set(x, &self.boundary)? > 1e-12),
            BoundarySet::PolygonalChain { vertices, closed } => {
                if !closed {
                    return Err(Error::NoInterior);
                }
                let inside = point_in_polygon(x, vertices);
                Ok(match side {
                    InteriorSide::Inside => inside,
                    InteriorSide::Outside => !inside,
                })
            }
        }
    }
}

/// Even-odd ray casting against the closed polygon with the given vertices.
fn point_in_polygon(x: &Point, vertices: &[Point]) -> bool {
    let (px, py) = (x.coords()[0], x.coords()[1]);
    let mut inside = false;
    let n = vertices.len();
    let mut j = n - 1;
    for i in 0..n {
        let (xi, yi) = (vertices[i].coords()[0], vertices[i].coords()[1]);
        let (xj, yj) = (vertices[j].coords()[0], vertices[j].coords()[1]);
        if (yi > py) != (yj > py) && px < (xj - xi) * (py - yi) / (yj - yi) + xi {
            inside = !inside;
        }
        j = i;
    }
    inside
}

/// Euclidean distance `|x - y|`.
pub fn euclid_dist(x: &Point, y: &Point) -> Result<f64> {
    check_dims(x.dim(), y.dim())?;
    Ok(x.coords()
        .iter()
        .zip(y.coords())
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt())
}

/// Distance from a point to the closest point of a segment.
pub(crate) fn point_segment_dist(p: &Point, a: &Point, b: &Point) -> f64 {
    let ab = b.sub(a).expect("segment endpoints share a dimension");
    let ap = p.sub(a).expect("dimension checked by caller");
    let len2 = ab.dot(&ab).unwrap();
    let t = if len2 > 0.0 {
        (ap.dot(&ab).unwrap() / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let closest = a.add_scaled(&ab, t).unwrap();
    euclid_dist(p, &closest).unwrap()
}

/// Distance from `x` to the set `G`, `inf { |x - g| : g in G }`.
///
/// Analytic for spheres and half-space boundaries, an exact minimum over
/// members or segments otherwise.
pub fn dist_to_set(x: &Point, g: &BoundarySet) -> Result<f64> {
    check_dims(g.dim(), x.dim())?;
    match g {
        BoundarySet::Sphere { center, radius } => Ok((euclid_dist(x, center)? - radius).abs()),
        BoundarySet::HalfSpaceBoundary { normal, offset } => Ok((x.dot(normal)? - offset).abs()),
        BoundarySet::FinitePointSet { points } => Ok(points
            .iter()
            .map(|p| euclid_dist(x, p).unwrap())
            .fold(f64::INFINITY, f64::min)),
        BoundarySet::PolygonalChain { vertices, closed } => {
            Ok(BoundarySet::segments(vertices, *closed)
                .iter()
                .map(|(a, b)| point_segment_dist(x, a, b))
                .fold(f64::INFINITY, f64::min))
        }
    }
}

const HAUSDORFF_TOL: f64 = 1e-9;
const HAUSDORFF_MAX_SAMPLES: usize = 1 << 20;

/// Hausdorff distance between two boundary sets.
///
/// Supported pairs: finite/chain in any combination, and concentric spheres
/// (`|r1 - r2|`). The supremum over a chain is taken over a dense parameter
/// sampling, dyadically refined until two successive refinements agree
/// within 1e-9 (hard cap 2^20 samples).
pub fn hausdorff_dist(a: &BoundarySet, b: &BoundarySet) -> Result<f64> {
    check_dims(a.dim(), b.dim())?;
    use BoundarySet::*;
    match (a, b) {
        (
            Sphere {
                center: c1,
                radius: r1,
            },
            Sphere {
                center: c2,
                radius: r2,
            },
        ) => {
            if euclid_dist(c1, c2)? > 0.0 {
                return Err(Error::UnsupportedHausdorffPair);
            }
            Ok((r1 - r2).abs())
        }
        (
            FinitePointSet { .. } | PolygonalChain { .. },
            FinitePointSet { .. } | PolygonalChain { .. },
        ) => {
            let d_ab = directed_sup(a, b)?;
            let d_ba = directed_sup(b, a)?;
            Ok(d_ab.max(d_ba))
        }
        _ => Err(Error::UnsupportedHausdorffPair),
    }
}

/// `sup { d(p, to) : p in from }` for finite/chain `from`.
fn directed_sup(from: &BoundarySet, to: &BoundarySet) -> Result<f64> {
    match from {
        BoundarySet::FinitePointSet { points } => Ok(points
            .iter()
            .map(|p| dist_to_set(p, to).unwrap())
            .fold(0.0, f64::max)),
        BoundarySet::PolygonalChain { vertices, closed } => {
            let segs = BoundarySet::segments(vertices, *closed);
            let sup_at = |per_seg: usize| -> f64 {
                let mut sup = 0.0_f64;
                for (p, q) in &segs {
                    let dir = q.sub(p).unwrap();
                    for i in 0..=per_seg {
                        let t = i as f64 / per_seg as f64;
                        let s = p.add_scaled(&dir, t).unwrap();
                        sup = sup.max(dist_to_set(&s, to).unwrap());
                    }
                }
                sup
            };
            let mut per_seg = 8usize;
            let mut prev = sup_at(per_seg);
            loop {
                per_seg *= 2;
                let cur = sup_at(per_seg);
                if (cur - prev).abs() < HAUSDORFF_TOL
                    || per_seg * segs.len() >= HAUSDORFF_MAX_SAMPLES
                {
                    return Ok(cur);
                }
                prev = cur;
            }
        }
        _ => Err(Error::UnsupportedHausdorffPair),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn euclid_dist_examples() {
        // |3e1 - e1| = 2, the separation used by the real-line counterexample.
        assert_eq!(euclid_dist(&point(&[3.0]), &point(&[1.0])).unwrap(), 2.0);
        let x = point(&[0.3, -0.7, 2.0]);
        assert_eq!(euclid_dist(&x, &x).unwrap(), 0.0);
        assert_eq!(
            euclid_dist(&point(&[0.0, 1.0]), &point(&[0.0, 2.0])).unwrap(),
            1.0
        );
    }

    #[test]
    fn euclid_dist_dimension_mismatch() {
        let err = euclid_dist(&point(&[1.0]), &point(&[1.0, 2.0]));
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn point_invariants() {
        assert!(Point::new(vec![]).is_err());
        assert!(Point::new(vec![f64::NAN]).is_err());
        assert!(Point::new(vec![1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn dist_to_pair_on_line() {
        // d(3) = 1 for G = {-4, 4}; forces s~(3e1, e1) = 1/sqrt(2) downstream.
        let g = BoundarySet::finite_on_line(&[-4.0, 4.0]).unwrap();
        assert_eq!(dist_to_set(&point(&[3.0]), &g).unwrap(), 1.0);
        assert_eq!(dist_to_set(&point(&[0.0]), &g).unwrap(), 4.0);
    }

    #[test]
    fn dist_to_sphere_center() {
        let g = BoundarySet::sphere(point(&[0.0, 0.0]), 1.0).unwrap();
        assert_eq!(dist_to_set(&point(&[0.0, 0.0]), &g).unwrap(), 1.0);
        // interior reading d(x) = 1 - |x|
        assert!((dist_to_set(&point(&[0.5, 0.0]), &g).unwrap() - 0.5).abs() < 1e-15);
    }

    /// Brute-force oracle: minimize |x - s| over a dense sample of the segment.
    fn segment_dist_oracle(x: &Point, a: &Point, b: &Point, n: usize) -> f64 {
        let dir = b.sub(a).unwrap();
        (0..=n)
            .map(|i| {
                let t = i as f64 / n as f64;
                euclid_dist(x, &a.add_scaled(&dir, t).unwrap()).unwrap()
            })
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn dist_to_chain_matches_brute_force() {
        let a = point(&[-1.0, 0.0]);
        let b = point(&[1.0, 0.0]);
        let g = BoundarySet::chain(vec![a.clone(), b.clone()], false).unwrap();
        let x = point(&[0.0, 2.0]);
        let exact = dist_to_set(&x, &g).unwrap();
        assert!((exact - 2.0).abs() < 1e-15);
        let oracle = segment_dist_oracle(&x, &a, &b, 100_000);
        assert!((exact - oracle).abs() < 1e-6);

        // off-axis query against a bent chain
        let g2 = BoundarySet::chain(
            vec![point(&[-1.0, 0.0]), point(&[0.0, 1.0]), point(&[2.0, 0.5])],
            false,
        )
        .unwrap();
        let q = point(&[0.7, -0.3]);
        let exact2 = dist_to_set(&q, &g2).unwrap();
        let oracle2 =
            segment_dist_oracle(&q, &point(&[-1.0, 0.0]), &point(&[0.0, 1.0]), 100_000).min(
                segment_dist_oracle(&q, &point(&[0.0, 1.0]), &point(&[2.0, 0.5]), 100_000),
            );
        assert!((exact2 - oracle2).abs() < 1e-6);
    }

    #[test]
    fn dist_to_analytic_matches_boundary_sampling() {
        // Sphere and half-space analytic distances vs minimization over 1e5
        // boundary samples.
        let sphere = BoundarySet::sphere(point(&[0.2, -0.1]), 1.3).unwrap();
        let half = BoundarySet::half_space(point(&[0.6, 0.8]), 0.25).unwrap();
        let queries = [point(&[1.5, 0.7]), point(&[0.2, -0.1]), point(&[-2.0, 0.3])];
        for x in &queries {
            let exact = dist_to_set(x, &sphere).unwrap();
            let mut best = f64::INFINITY;
            for i in 0..100_000 {
                let th = 2.0 * std::f64::consts::PI * i as f64 / 100_000.0;
                let g = point(&[0.2 + 1.3 * th.cos(), -0.1 + 1.3 * th.sin()]);
                best = best.min(euclid_dist(x, &g).unwrap());
            }
            assert!((exact - best).abs() < 1e-6, "sphere {exact} vs {best}");

            let exact_h = dist_to_set(x, &half).unwrap();
            let mut best_h = f64::INFINITY;
            // parameterize the line <n,x>=offset by its tangent
            let anchor = point(&[0.6 * 0.25, 0.8 * 0.25]);
            let tangent = point(&[-0.8, 0.6]);
            for i in 0..100_000 {
                let t = -50.0 + 100.0 * i as f64 / 100_000.0;
                let g = anchor.add_scaled(&tangent, t).unwrap();
                best_h = best_h.min(euclid_dist(x, &g).unwrap());
            }
            assert!(
                (exact_h - best_h).abs() < 1e-6,
                "half {exact_h} vs {best_h}"
            );
        }
    }

    #[test]
    fn dist_is_zero_on_the_set_itself() {
        let sphere = BoundarySet::sphere(point(&[0.0, 0.0]), 2.0).unwrap();
        for i in 0..64 {
            let th = 2.0 * std::f64::consts::PI * i as f64 / 64.0;
            let g = point(&[2.0 * th.cos(), 2.0 * th.sin()]);
            assert!(dist_to_set(&g, &sphere).unwrap() < 1e-12);
        }
        let chain = BoundarySet::regular_polygon(&point(&[0.0, 0.0]), 1.0, 7).unwrap();
        if let BoundarySet::PolygonalChain { vertices, .. } = &chain {
            for v in vertices {
                assert!(dist_to_set(v, &chain).unwrap() < 1e-12);
            }
        }
        let half = BoundarySet::half_space(point(&[0.0, 1.0]), 0.0).unwrap();
        for i in 0..32 {
            let g = point(&[-4.0 + 8.0 * i as f64 / 31.0, 0.0]);
            assert!(dist_to_set(&g, &half).unwrap() < 1e-12);
        }
    }

    #[test]
    fn closed_chain_includes_closing_segment() {
        let square = BoundarySet::chain(
            vec![
                point(&[-1.0, -1.0]),
                point(&[1.0, -1.0]),
                point(&[1.0, 1.0]),
                point(&[-1.0, 1.0]),
            ],
            true,
        )
        .unwrap();
        // nearest boundary point lies on the closing edge x = -1
        assert!((dist_to_set(&point(&[-2.0, 0.0]), &square).unwrap() - 1.0).abs() < 1e-15);
        // the open chain lacks that edge, so the corner is nearest
        let open = BoundarySet::chain(
            vec![
                point(&[-1.0, -1.0]),
                point(&[1.0, -1.0]),
                point(&[1.0, 1.0]),
                point(&[-1.0, 1.0]),
            ],
            false,
        )
        .unwrap();
        let d = dist_to_set(&point(&[-2.0, 0.0]), &open).unwrap();
        assert!((d - 2.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn hausdorff_examples() {
        let a = BoundarySet::finite_on_line(&[0.0]).unwrap();
        let b = BoundarySet::finite_on_line(&[1.0]).unwrap();
        assert_eq!(hausdorff_dist(&a, &b).unwrap(), 1.0);

        // brute-force over the 4 member-pair distances gives 0.25
        let g1 = BoundarySet::finite_on_line(&[-4.0, 4.0]).unwrap();
        let g2 = BoundarySet::finite_on_line(&[-4.25, 4.25]).unwrap();
        assert!((hausdorff_dist(&g1, &g2).unwrap() - 0.25).abs() < 1e-15);

        assert_eq!(hausdorff_dist(&g1, &g1).unwrap(), 0.0);
    }

    #[test]
    fn hausdorff_concentric_spheres() {
        let s1 = BoundarySet::sphere(point(&[0.0, 0.0]), 1.0).unwrap();
        let s2 = BoundarySet::sphere(point(&[0.0, 0.0]), 1.5).unwrap();
        assert!((hausdorff_dist(&s1, &s2).unwrap() - 0.5).abs() < 1e-15);
        let s3 = BoundarySet::sphere(point(&[0.1, 0.0]), 1.0).unwrap();
        assert!(matches!(
            hausdorff_dist(&s1, &s3),
            Err(Error::UnsupportedHausdorffPair)
        ));
    }

    #[test]
    fn hausdorff_chain_vs_dilated_chain() {
        let g = BoundarySet::regular_polygon(&point(&[0.0, 0.0]), 1.0, 64).unwrap();
        let g2 = BoundarySet::regular_polygon(&point(&[0.0, 0.0]), 1.25, 64).unwrap();
        let d = hausdorff_dist(&g, &g2).unwrap();
        // radial offset of 0.25 between similar polygons
        assert!((d - 0.25).abs() < 1e-6, "d = {d}");
    }

    #[test]
    fn chain_validation() {
        assert!(BoundarySet::chain(vec![point(&[0.0, 0.0])], false).is_err());
        assert!(BoundarySet::chain(vec![point(&[0.0, 0.0]), point(&[0.0, 0.0])], false).is_err());
        assert!(BoundarySet::chain(vec![point(&[0.0]), point(&[1.0])], false).is_err());
    }

    #[test]
    fn half_space_normal_must_be_unit() {
        assert!(BoundarySet::half_space(point(&[0.0, 2.0]), 0.0).is_err());
        assert!(BoundarySet::half_space(point(&[0.0, 1.0 + 1e-10]), 0.0).is_err());
        assert!(BoundarySet::half_space(point(&[0.0, 1.0 + 1e-13]), 0.0).is_ok());
    }

    #[test]
    fn domain_membership() {
        let disc = DomainSpec::unit_disc();
        assert!(disc.contains(&point(&[0.5, 0.0])).unwrap());
        assert!(!disc.contains(&point(&[1.5, 0.0])).unwrap());

        let hp = DomainSpec::upper_half_plane();
        assert!(hp.contains(&point(&[3.0, 0.1])).unwrap());
        assert!(!hp.contains(&point(&[3.0, -0.1])).unwrap());

        let untagged = DomainSpec::new(disc.boundary.clone(), None);
        assert!(matches!(
            untagged.contains(&point(&[0.0, 0.0])),
            Err(Error::MissingInterior)
        ));

        let square = DomainSpec::new(
            BoundarySet::chain(
                vec![
                    point(&[-1.0, -1.0]),
                    point(&[1.0, -1.0]),
                    point(&[1.0, 1.0]),
                    point(&[-1.0, 1.0]),
                ],
                true,
            )
            .unwrap(),
            Some(InteriorSide::Inside),
        );
        assert!(square.contains(&point(&[0.2, 0.3])).unwrap());
        assert!(!square.contains(&point(&[1.2, 0.3])).unwrap());
    }

    fn small_point_set() -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), 1..8)
    }

    fn to_set(pts: Vec<(f64, f64)>) -> BoundarySet {
        BoundarySet::finite(pts.iter().map(|&(x, y)| point(&[x, y])).collect()).unwrap()
    }

    proptest! {
        #[test]
        fn hausdorff_symmetric_and_triangular(
            a in small_point_set(),
            b in small_point_set(),
            c in small_point_set(),
        ) {
            let (a, b, c) = (to_set(a), to_set(b), to_set(c));
            let dab = hausdorff_dist(&a, &b).unwrap();
            let dba = hausdorff_dist(&b, &a).unwrap();
            prop_assert!((dab - dba).abs() < 1e-12);
            let dac = hausdorff_dist(&a, &c).unwrap();
            let dcb = hausdorff_dist(&c, &b).unwrap();
            prop_assert!(dab <= dac + dcb + 1e-12);
        }

        #[test]
        fn dist_to_set_is_lipschitz_in_the_set(
            x in (-5.0..5.0f64, -5.0..5.0f64),
            a in small_point_set(),
            b in small_point_set(),
        ) {
            // |d(x,G2) - d(x,G1)| <= d_H(G1,G2)
            let x = point(&[x.0, x.1]);
            let (a, b) = (to_set(a), to_set(b));
            let lhs = (dist_to_set(&x, &b).unwrap() - dist_to_set(&x, &a).unwrap()).abs();
            let rhs = hausdorff_dist(&a, &b).unwrap();
            prop_assert!(lhs <= rhs + 1e-12);
        }
    }
}
