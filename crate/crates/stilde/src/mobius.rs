//! Sphere reflections and Möbius automorphisms of the unit ball.
//!
//! Every Möbius transformation preserving the unit ball factors as a
//! reflection in a sphere orthogonal to the unit sphere followed by an
//! orthogonal map. [`MobiusMap::to_origin`] builds the canonical
//! automorphism sending a given interior point to the origin; composing it
//! with rotations spans the full group up to reflection.

use crate::error::{Error, Result};
use crate::geom::{check_dims, Point};
use nalgebra::{DMatrix, DVector};
use rand::Rng;

/// Reflection (inversion) in the sphere `|x - center| = radius`:
///
/// ```text
/// psi(x) = center + radius^2 (x - center) / |x - center|^2
/// ```
///
/// An involution away from its pole, with the distance identity
/// `|psi(x) - psi(y)| = radius^2 |x - y| / (|x - center| |y - center|)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereReflection {
    pub center: Point,
    pub radius: f64,
}

impl SphereReflection {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Self { center, radius })
    }

    /// Inversion in the unit sphere, `x -> x / |x|^2`.
    pub fn unit(dim: usize) -> Self {
        Self {
            center: Point::new(vec![0.0; dim]).unwrap(),
            radius: 1.0,
        }
    }

    pub fn reflect(&self, x: &Point) -> Result<Point> {
        let v = x.sub(&self.center)?;
        let n2 = v.dot(&v)?;
        if n2 == 0.0 {
            return Err(Error::ReflectionPole);
        }
        self.center.add_scaled(&v, self.radius * self.radius / n2)
    }
}

/// A Möbius automorphism of the unit ball: an optional reflection in a
/// sphere orthogonal to the unit sphere, followed by an orthogonal map.
#[derive(Debug, Clone, PartialEq)]
pub struct MobiusMap {
    reflection: Option<SphereReflection>,
    rotation: DMatrix<f64>,
    dim: usize,
}

impl MobiusMap {
    pub fn identity(dim: usize) -> Self {
        Self {
            reflection: None,
            rotation: DMatrix::identity(dim, dim),
            dim,
        }
    }

    /// The automorphism `sigma_a` with `sigma_a(a) = 0`: the reflection in
    /// the sphere centered at `a* = a / |a|^2` with radius
    /// `sqrt(|a*|^2 - 1)`, which is orthogonal to the unit sphere. For
    /// `a = 0` this is the identity.
    pub fn to_origin(a: &Point) -> Result<Self> {
        let na = a.norm();
        if na >= 1.0 {
            return Err(Error::NotInUnitBall);
        }
        if na == 0.0 {
            return Ok(Self::identity(a.dim()));
        }
        let center = a.scale(1.0 / (na * na));
        let radius = (1.0 - na * na).sqrt() / na;
        Ok(Self {
            reflection: Some(SphereReflection { center, radius }),
            rotation: DMatrix::identity(a.dim(), a.dim()),
            dim: a.dim(),
        })
    }

    /// Compose with an orthogonal map applied after the reflection.
    /// Rejects matrices that are not orthogonal within 1e-12.
    pub fn with_rotation(mut self, rotation: DMatrix<f64>) -> Result<Self> {
        if rotation.nrows() != self.dim || rotation.ncols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: rotation.nrows(),
            });
        }
        let gram = &rotation * rotation.transpose();
        let id = DMatrix::<f64>::identity(self.dim, self.dim);
        if (gram - id).abs().max() > 1e-12 {
            return Err(Error::NotOrthogonal);
        }
        self.rotation = rotation;
        Ok(self)
    }

    pub fn reflection(&self) -> Option<&SphereReflection> {
        self.reflection.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Apply the map: rotate the reflected point.
    pub fn apply(&self, x: &Point) -> Result<Point> {
        check_dims(self.dim, x.dim())?;
        let reflected = match &self.reflection {
            Some(psi) => psi.reflect(x)?,
            None => x.clone(),
        };
        let v = DVector::from_column_slice(reflected.coords());
        let rotated = &self.rotation * v;
        Point::new(rotated.iter().copied().collect())
    }
}

/// The distortion envelope of `S~_{S^{n-1},c}` under the ball automorphism
/// sending `a` to the origin: the ratio of the transformed to the original
/// metric lies in `[(1-|a|)/(1+|a|), (1+|a|)/(1-|a|)]`.
pub fn distortion_envelope(a: &Point) -> Result<(f64, f64)> {
    let na = a.norm();
    if na >= 1.0 {
        return Err(Error::NotInUnitBall);
    }
    Ok(((1.0 - na) / (1.0 + na), (1.0 + na) / (1.0 - na)))
}

/// The three quantities of the inversion-distance bound for `a, b` in the
/// unit ball with `a != 0`:
///
/// ```text
/// ||b| - |a|| / (1 - |a||b|)  <=  |b - a| / (|a| |b - a*|)  <=  (|b| + |a|) / (1 + |a||b|)
/// ```
///
/// Returned as `(lo, mid, hi)`.
pub fn inversion_distance_bounds(a: &Point, b: &Point) -> Result<(f64, f64, f64)> {
    check_dims(a.dim(), b.dim())?;
    let (na, nb) = (a.norm(), b.norm());
    if na >= 1.0 || nb >= 1.0 {
        return Err(Error::NotInUnitBall);
    }
    if na == 0.0 {
        return Err(Error::InversionCenterAtOrigin);
    }
    let a_star = a.scale(1.0 / (na * na));
    let lo = (nb - na).abs() / (1.0 - na * nb);
    let mid = b.sub(a)?.norm() / (na * b.sub(&a_star)?.norm());
    let hi = (nb + na) / (1.0 + na * nb);
    Ok((lo, mid, hi))
}

/// Outcome of checking `log(1+x)/log(1+y) <= x/y` for `x >= y > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogRatioCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

pub fn log_ratio_bound(x: f64, y: f64) -> Result<LogRatioCheck> {
    if !y.is_finite() || !x.is_finite() || y <= 0.0 || x < y {
        return Err(Error::LogRatioPrecondition { x, y });
    }
    let lhs = x.ln_1p() / y.ln_1p();
    let rhs = x / y;
    Ok(LogRatioCheck {
        lhs,
        rhs,
        slack: rhs - lhs,
        holds: lhs <= rhs,
    })
}

/// A random rotation: QR orthonormalization of a random matrix with the
/// sign of the triangular factor's diagonal absorbed, determinant corrected
/// to +1.
pub fn random_rotation(dim: usize, rng: &mut impl Rng) -> DMatrix<f64> {
    let m = DMatrix::from_fn(dim, dim, |_, _| rng.gen_range(-1.0..1.0));
    let qr = m.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        if r[(j, j)] < 0.0 {
            for i in 0..dim {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    if q.determinant() < 0.0 {
        for i in 0..dim {
            q[(i, dim - 1)] = -q[(i, dim - 1)];
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{euclid_dist, point};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unit_inversion_of_2e1() {
        let psi = SphereReflection::unit(2);
        let y = psi.reflect(&point(&[2.0, 0.0])).unwrap();
        assert_eq!(y, point(&[0.5, 0.0]));
        assert!(matches!(
            psi.reflect(&point(&[0.0, 0.0])),
            Err(Error::ReflectionPole)
        ));
    }

    #[test]
    fn reflection_involution_and_distance_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let a = point(&[rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)]);
            let r = rng.gen_range(0.3..2.5);
            let psi = SphereReflection::new(a.clone(), r).unwrap();
            let x = point(&[rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)]);
            let y = point(&[rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)]);
            if euclid_dist(&x, &a).unwrap() < 0.1 || euclid_dist(&y, &a).unwrap() < 0.1 {
                continue;
            }
            let xx = psi.reflect(&psi.reflect(&x).unwrap()).unwrap();
            assert!(euclid_dist(&x, &xx).unwrap() < 1e-12);

            let lhs = euclid_dist(&psi.reflect(&x).unwrap(), &psi.reflect(&y).unwrap()).unwrap();
            let rhs = r * r * euclid_dist(&x, &y).unwrap()
                / (euclid_dist(&x, &a).unwrap() * euclid_dist(&y, &a).unwrap());
            assert!((lhs - rhs).abs() < 1e-12, "{lhs} vs {rhs}");
        }
    }

    #[test]
    fn to_origin_sends_a_to_zero() {
        let a = point(&[0.5, 0.0]);
        let m = MobiusMap::to_origin(&a).unwrap();
        assert!(m.apply(&a).unwrap().norm() < 1e-12);
        // |sigma(0)| = |0 - a| / (|a| |0 - a*|) = 0.5
        let o = m.apply(&point(&[0.0, 0.0])).unwrap();
        assert!((o.norm() - 0.5).abs() < 1e-12);
        // a = 0 gives the identity
        let id = MobiusMap::to_origin(&point(&[0.0, 0.0])).unwrap();
        let x = point(&[0.3, -0.4]);
        assert_eq!(id.apply(&x).unwrap(), x);
        assert!(MobiusMap::to_origin(&point(&[1.0, 0.0])).is_err());
    }

    #[test]
    fn to_origin_preserves_ball_and_sphere() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let a = sample_ball(&mut rng, 0.95);
            let m = MobiusMap::to_origin(&a).unwrap();
            let x = sample_ball(&mut rng, 0.999);
            assert!(m.apply(&x).unwrap().norm() < 1.0);
            let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let s = point(&[th.cos(), th.sin()]);
            assert!((m.apply(&s).unwrap().norm() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn to_origin_matches_independent_computation() {
        // frozen values from an independent implementation of the same
        // reflection formulas (a = (0.3, -0.2), x = (0.5, 0.1), y = (-0.2, 0.4))
        let m = MobiusMap::to_origin(&point(&[0.3, -0.2])).unwrap();
        let sx = m.apply(&point(&[0.5, 0.1])).unwrap();
        let sy = m.apply(&point(&[-0.2, 0.4])).unwrap();
        assert!((sx.coords()[0] - 0.27526492633755506).abs() < 1e-14);
        assert!((sx.coords()[1] - 0.30369604548979057).abs() < 1e-14);
        assert!((sy.coords()[0] - 0.6371775238544).abs() < 1e-14);
        assert!((sy.coords()[1] - (-0.24714336199787978)).abs() < 1e-14);

        let sphere = crate::geom::BoundarySet::sphere(point(&[0.0, 0.0]), 1.0).unwrap();
        let p = crate::metrics::MetricParams::new(2.0).unwrap();
        let s =
            crate::metrics::stilde_metric(&point(&[0.5, 0.1]), &point(&[-0.2, 0.4]), &sphere, &p)
                .unwrap();
        let s_img = crate::metrics::stilde_metric(&sx, &sy, &sphere, &p).unwrap();
        assert!((s - 0.6938159705676802).abs() < 1e-14);
        assert!((s_img - 0.6476506835695248).abs() < 1e-14);
        let ratio = s_img / s;
        let (lo, hi) = distortion_envelope(&point(&[0.3, -0.2])).unwrap();
        assert!((ratio - 0.9334617694654925).abs() < 1e-13);
        assert!(lo < ratio && ratio < hi);
    }

    #[test]
    fn rotation_after_reflection_preserves_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = point(&[0.3, -0.2]);
        let sigma = MobiusMap::to_origin(&a).unwrap();
        let rot = random_rotation(2, &mut rng);
        let m = MobiusMap::to_origin(&a)
            .unwrap()
            .with_rotation(rot)
            .unwrap();
        for _ in 0..100 {
            let x = sample_ball(&mut rng, 0.99);
            let plain = sigma.apply(&x).unwrap().norm();
            let rotated = m.apply(&x).unwrap().norm();
            assert!((plain - rotated).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_non_orthogonal_rotation() {
        let skew = DMatrix::from_row_slice(2, 2, &[1.0, 0.1, 0.0, 1.0]);
        assert!(matches!(
            MobiusMap::identity(2).with_rotation(skew),
            Err(Error::NotOrthogonal)
        ));
    }

    #[test]
    fn random_rotations_are_orthogonal_with_unit_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for dim in [2usize, 3] {
            for _ in 0..50 {
                let q = random_rotation(dim, &mut rng);
                let gram = &q * q.transpose();
                let id = DMatrix::<f64>::identity(dim, dim);
                assert!((gram - id).abs().max() < 1e-12);
                assert!((q.determinant() - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn envelope_values() {
        let (lo, hi) = distortion_envelope(&point(&[0.0, 0.0])).unwrap();
        assert_eq!((lo, hi), (1.0, 1.0));
        let (lo, hi) = distortion_envelope(&point(&[0.5, 0.0])).unwrap();
        assert!((lo - 1.0 / 3.0).abs() < 1e-15 && (hi - 3.0).abs() < 1e-15);
        let (lo, hi) = distortion_envelope(&point(&[0.0, 0.9])).unwrap();
        assert!((lo - 1.0 / 19.0).abs() < 1e-15 && (hi - 19.0).abs() < 1e-13);
    }

    #[test]
    fn inversion_bound_worked_pair_and_sweep() {
        let a = point(&[0.5, 0.0]);
        let b = point(&[-0.5, 0.0]);
        let (lo, mid, hi) = inversion_distance_bounds(&a, &b).unwrap();
        assert!((lo - 0.0).abs() < 1e-15);
        assert!((mid - 0.8).abs() < 1e-15);
        assert!((hi - 0.8).abs() < 1e-15);

        let (lo, mid, _) = inversion_distance_bounds(&a, &a).unwrap();
        assert_eq!(lo, 0.0);
        assert_eq!(mid, 0.0);

        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let a = sample_ball(&mut rng, 0.999);
            if a.norm() < 1e-3 {
                continue;
            }
            let b = sample_ball(&mut rng, 0.999);
            let (lo, mid, hi) = inversion_distance_bounds(&a, &b).unwrap();
            assert!(lo <= mid + 1e-12 && mid <= hi + 1e-12, "{lo} {mid} {hi}");
        }

        assert!(matches!(
            inversion_distance_bounds(&point(&[0.0, 0.0]), &b),
            Err(Error::InversionCenterAtOrigin)
        ));
    }

    #[test]
    fn log_ratio_examples() {
        let c = log_ratio_bound(3.0, 1.0).unwrap();
        assert!((c.lhs - 2.0).abs() < 1e-15);
        assert!(c.holds && (c.rhs - 3.0).abs() < 1e-15);

        let eq = log_ratio_bound(0.7, 0.7).unwrap();
        assert!(eq.holds && (eq.lhs - 1.0).abs() < 1e-15 && (eq.rhs - 1.0).abs() < 1e-15);

        let wide = log_ratio_bound(10.0, 0.1).unwrap();
        assert!(wide.holds);
        assert!((wide.lhs - 11.0_f64.ln() / 1.1_f64.ln()).abs() < 1e-12);
        assert!((wide.rhs - 100.0).abs() < 1e-12);

        assert!(log_ratio_bound(0.1, 10.0).is_err());
        assert!(log_ratio_bound(1.0, 0.0).is_err());
    }

    fn sample_ball(rng: &mut ChaCha8Rng, radius: f64) -> Point {
        loop {
            let p = point(&[rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)]);
            if p.norm() < 1.0 {
                return p.scale(radius);
            }
        }
    }
}
