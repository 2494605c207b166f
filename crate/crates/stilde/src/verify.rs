//! Seeded property sweeps over the inequalities the metrics satisfy.
//!
//! Each sweep draws its samples from an explicit seed, counts violations
//! against a stated tolerance, and keeps the first violating witness so a
//! caller can print it. The margin convention is uniform: a check passes
//! when its margin is at least `-tol`, where the margin is `rhs - lhs` for
//! an inequality `lhs <= rhs` and `-err` for an identity with error `err`.

use crate::error::Result;
use crate::geom::{dist_to_set, euclid_dist, BoundarySet, DomainSpec, InteriorSide, Point};
use crate::metrics::{
    ball_inclusion_radii, distance_sandwich, hyperbolic_upper_bound, sharpness_deficiency,
    stilde_metric, t_comparison_bounds, tri_ratio, triangle_deficiency, MetricParams,
};
use crate::mobius::{
    inversion_distance_bounds, log_ratio_bound, random_rotation, MobiusMap, SphereReflection,
};
use crate::sample;
use rand::Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// A violating instance: the points involved, the values compared, and the
/// (negative) margin by which the check failed.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub kind: String,
    pub points: BTreeMap<String, Vec<f64>>,
    pub values: BTreeMap<String, f64>,
    pub slack: f64,
}

impl Witness {
    pub(crate) fn new(kind: &str, slack: f64) -> Self {
        Self {
            kind: kind.to_string(),
            points: BTreeMap::new(),
            values: BTreeMap::new(),
            slack,
        }
    }

    pub(crate) fn point(mut self, name: &str, p: &Point) -> Self {
        self.points.insert(name.to_string(), p.coords().to_vec());
        self
    }

    pub(crate) fn value(mut self, name: &str, v: f64) -> Self {
        self.values.insert(name.to_string(), v);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }
}

/// Outcome of one sweep.
#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub kind: &'static str,
    pub checked: usize,
    pub violations: usize,
    /// Smallest margin observed; negative beyond the tolerance means a
    /// violation occurred.
    pub worst_slack: f64,
    pub witness: Option<Witness>,
}

impl SweepSummary {
    fn new(kind: &'static str) -> Self {
        Self {
            kind,
            checked: 0,
            violations: 0,
            worst_slack: f64::INFINITY,
            witness: None,
        }
    }

    fn record(&mut self, margin: f64, tol: f64, witness: impl FnOnce(f64) -> Witness) {
        self.checked += 1;
        if margin < self.worst_slack {
            self.worst_slack = margin;
        }
        if margin < -tol {
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(witness(margin));
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

fn triple_margin(
    x: &Point,
    y: &Point,
    z: &Point,
    g: &BoundarySet,
    p: &MetricParams,
) -> Result<f64> {
    let sxy = stilde_metric(x, y, g, p)?;
    let sxz = stilde_metric(x, z, g, p)?;
    let syz = stilde_metric(y, z, g, p)?;
    Ok((sxz + syz - sxy).min(sxy + syz - sxz).min(sxy + sxz - syz))
}

fn triangle_witness(x: &Point, y: &Point, z: &Point, g: &BoundarySet, margin: f64) -> Witness {
    let mut w = Witness::new("triangle_inequality_violation", margin)
        .point("x", x)
        .point("y", y)
        .point("z", z);
    if let Ok(h) = triangle_deficiency(x, y, z, g) {
        w = w.value("deficiency", h);
    }
    w
}

/// Triangle inequality of `S~_{G,c}` over random triples of the domain.
pub fn triangle_random_sweep(
    d: &DomainSpec,
    p: &MetricParams,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<SweepSummary> {
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("triangle_random");
    for _ in 0..samples {
        let x = sample::sample_point(d, &mut rng);
        let y = sample::sample_point(d, &mut rng);
        let z = sample::sample_point(d, &mut rng);
        let margin = triple_margin(&x, &y, &z, &d.boundary, p)?;
        summary.record(margin, tol, |m| {
            triangle_witness(&x, &y, &z, &d.boundary, m)
        });
    }
    Ok(summary)
}

/// Triangle inequality on adversarial triples built from boundary samples:
/// both endpoints on the boundary with the midpoint as the third point,
/// the family that realizes the sharp threshold `c = 2`.
pub fn triangle_candidate_sweep(
    d: &DomainSpec,
    p: &MetricParams,
    tol: f64,
) -> Result<SweepSummary> {
    let samples = sample::boundary_samples(&d.boundary, 64);
    let mut summary = SweepSummary::new("triangle_candidates");
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let (x, y) = (&samples[i], &samples[j]);
            let z = x.add_scaled(&y.sub(x)?, 0.5)?;
            if euclid_dist(x, &z)? < 1e-12 || euclid_dist(y, &z)? < 1e-12 {
                continue;
            }
            let margin = triple_margin(x, y, &z, &d.boundary, p)?;
            summary.record(margin, tol, |m| triangle_witness(x, y, &z, &d.boundary, m));
        }
    }
    Ok(summary)
}

/// `S~_{S^{n-1},c} <= log(2c th(rho/2) + 1)` over random pairs of the
/// punctured unit ball.
pub fn hyperbolic_bound_sweep(
    p: &MetricParams,
    dim: usize,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<SweepSummary> {
    let sphere = BoundarySet::sphere(Point::new(vec![0.0; dim])?, 1.0)?;
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("hyperbolic_bound");
    let sample_punctured = |rng: &mut rand_chacha::ChaCha8Rng| loop {
        let q = sample::sample_in_ball(dim, 1.0, rng);
        if q.norm() >= 1e-6 {
            return q;
        }
    };
    for _ in 0..samples {
        let x = sample_punctured(&mut rng);
        let y = sample_punctured(&mut rng);
        let s = stilde_metric(&x, &y, &sphere, p)?;
        let bound = hyperbolic_upper_bound(&x, &y, p)?;
        summary.record(bound - s, tol, |m| {
            Witness::new("hyperbolic_bound_violation", m)
                .point("x", &x)
                .point("y", &y)
                .value("s_metric", s)
                .value("bound", bound)
        });
    }
    Ok(summary)
}

/// Two-sided triangular-ratio envelope around `S~` over random interior
/// pairs.
pub fn t_envelope_sweep(
    d: &DomainSpec,
    p: &MetricParams,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<SweepSummary> {
    sample::require_interior(d)?;
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("t_envelope");
    for _ in 0..samples {
        let x = sample::sample_point(d, &mut rng);
        let y = sample::sample_point(d, &mut rng);
        let (lower, upper) = t_comparison_bounds(&x, &y, d, p)?;
        let s = stilde_metric(&x, &y, &d.boundary, p)?;
        let margin = (s - lower).min(upper - s);
        summary.record(margin, tol, |m| {
            Witness::new("t_envelope_violation", m)
                .point("x", &x)
                .point("y", &y)
                .value("lower", lower)
                .value("s_metric", s)
                .value("upper", upper)
        });
    }
    Ok(summary)
}

/// The distance sandwich `lower <= |x - y| <= upper` over random ambient
/// pairs near the boundary set.
pub fn sandwich_sweep(
    g: &BoundarySet,
    p: &MetricParams,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<SweepSummary> {
    let (lo, hi) = sample::sampling_box(g);
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("distance_sandwich");
    for _ in 0..samples {
        let x = sample::sample_in_box(&lo, &hi, &mut rng);
        let y = sample::sample_in_box(&lo, &hi, &mut rng);
        let s = distance_sandwich(&x, &y, g, p)?;
        let dist = euclid_dist(&x, &y)?;
        let margin = (dist - s.lower).min(s.upper - dist);
        summary.record(margin, tol, |m| {
            Witness::new("distance_sandwich_violation", m)
                .point("x", &x)
                .point("y", &y)
                .value("lower", s.lower)
                .value("dist", dist)
                .value("upper", s.upper)
        });
    }
    Ok(summary)
}

/// One ball-inclusion check: a center, an `S~` radius, the derived
/// triangular-ratio radii, and the misclassification counts over a sampled
/// cloud.
#[derive(Debug, Clone)]
pub struct BallCheckRow {
    pub x: Point,
    pub r: f64,
    pub dx: f64,
    pub inner: f64,
    pub outer: f64,
    pub cloud: usize,
    pub inner_violations: usize,
    pub outer_violations: usize,
}

/// `B_t(x, inner) ⊂ B_S~(x, r) ⊂ B_t(x, outer)` over sampled centers,
/// radii, and point clouds.
pub fn ball_inclusion_sweep(
    d: &DomainSpec,
    p: &MetricParams,
    pairs: usize,
    cloud: usize,
    seed: u64,
    tol: f64,
) -> Result<(SweepSummary, Vec<BallCheckRow>)> {
    sample::require_interior(d)?;
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("ball_inclusion");
    let mut rows = Vec::with_capacity(pairs);
    for _ in 0..pairs {
        let x = sample::sample_point_off_boundary(d, 0.05, &mut rng);
        let r = rng.gen_range(0.05..1.0);
        let dx = dist_to_set(&x, &d.boundary)?;
        let radii = ball_inclusion_radii(dx, r, p)?;
        let mut row = BallCheckRow {
            x: x.clone(),
            r,
            dx,
            inner: radii.inner,
            outer: radii.outer,
            cloud,
            inner_violations: 0,
            outer_violations: 0,
        };
        for _ in 0..cloud {
            let y = sample::sample_point(d, &mut rng);
            let t = tri_ratio(&x, &y, d)?;
            let s = stilde_metric(&x, &y, &d.boundary, p)?;
            if t < radii.inner - tol {
                let margin = r - s;
                summary.record(margin, tol, |m| {
                    Witness::new("ball_inclusion_inner_violation", m)
                        .point("x", &x)
                        .point("y", &y)
                        .value("r", r)
                        .value("t", t)
                        .value("inner", radii.inner)
                        .value("s_metric", s)
                });
                if r - s < -tol {
                    row.inner_violations += 1;
                }
            }
            if s < r - tol {
                let margin = radii.outer - t;
                summary.record(margin, tol, |m| {
                    Witness::new("ball_inclusion_outer_violation", m)
                        .point("x", &x)
                        .point("y", &y)
                        .value("r", r)
                        .value("t", t)
                        .value("outer", radii.outer)
                        .value("s_metric", s)
                });
                if radii.outer - t < -tol {
                    row.outer_violations += 1;
                }
            }
        }
        rows.push(row);
    }
    Ok((summary, rows))
}

/// Distortion of `S~_{S^{n-1},c}` under ball automorphisms: the ratio after
/// mapping `a` to the origin (every other sample composed with a random
/// rotation) stays inside the envelope `[(1-|a|)/(1+|a|), (1+|a|)/(1-|a|)]`.
/// Centers are drawn with `a_min <= |a| < a_max`.
pub fn mobius_distortion_sweep(
    p: &MetricParams,
    dim: usize,
    samples: usize,
    seed: u64,
    a_min: f64,
    a_max: f64,
    tol: f64,
) -> Result<SweepSummary> {
    let sphere = BoundarySet::sphere(Point::new(vec![0.0; dim])?, 1.0)?;
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new(if a_min == 0.0 {
        "mobius_distortion"
    } else {
        "mobius_distortion_near_boundary"
    });
    for i in 0..samples {
        let a = loop {
            let a = sample::sample_in_ball(dim, a_max, &mut rng);
            if a.norm() >= a_min {
                break a;
            }
        };
        let (lo, hi) = crate::mobius::distortion_envelope(&a)?;
        let mut map = MobiusMap::to_origin(&a)?;
        if i % 2 == 1 {
            map = map.with_rotation(random_rotation(dim, &mut rng))?;
        }
        let x = sample::sample_in_ball(dim, 0.999, &mut rng);
        let y = loop {
            let y = sample::sample_in_ball(dim, 0.999, &mut rng);
            if euclid_dist(&x, &y)? >= 1e-3 {
                break y;
            }
        };
        let s = stilde_metric(&x, &y, &sphere, p)?;
        let s_img = stilde_metric(&map.apply(&x)?, &map.apply(&y)?, &sphere, p)?;
        let ratio = s_img / s;
        let margin = (ratio - lo).min(hi - ratio);
        summary.record(margin, tol, |m| {
            Witness::new("mobius_distortion_violation", m)
                .point("a", &a)
                .point("x", &x)
                .point("y", &y)
                .value("lo", lo)
                .value("ratio", ratio)
                .value("hi", hi)
        });
    }
    Ok(summary)
}

/// Reflection involution and the reflection distance identity on random
/// spheres and point pairs.
pub fn reflection_identity_sweep(samples: usize, seed: u64, tol: f64) -> SweepSummary {
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("reflection_identity");
    let mut drawn = 0usize;
    while drawn < samples {
        let center = Point::new(vec![rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)]).unwrap();
        let radius = rng.gen_range(0.3..2.5);
        let psi = SphereReflection::new(center.clone(), radius).unwrap();
        let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
            Point::new(vec![rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)]).unwrap()
        };
        let x = draw(&mut rng);
        let y = draw(&mut rng);
        let dxa = euclid_dist(&x, &center).unwrap();
        let dya = euclid_dist(&y, &center).unwrap();
        if dxa < 0.1 || dya < 0.1 || euclid_dist(&x, &y).unwrap() < 1e-9 {
            continue;
        }
        drawn += 1;
        let rx = psi.reflect(&x).unwrap();
        let ry = psi.reflect(&y).unwrap();
        let involution_err = euclid_dist(&psi.reflect(&rx).unwrap(), &x).unwrap();
        let identity_err = (euclid_dist(&rx, &ry).unwrap()
            - radius * radius * euclid_dist(&x, &y).unwrap() / (dxa * dya))
            .abs();
        let err = involution_err.max(identity_err);
        summary.record(-err, tol, |m| {
            Witness::new("reflection_identity_violation", m)
                .point("center", &center)
                .point("x", &x)
                .point("y", &y)
                .value("radius", radius)
                .value("involution_err", involution_err)
                .value("identity_err", identity_err)
        });
    }
    summary
}

/// The canonical automorphisms keep the unit ball inside the unit ball and
/// the unit sphere on the unit sphere.
pub fn ball_preservation_sweep(samples: usize, seed: u64, tol: f64) -> SweepSummary {
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("ball_preservation");
    for _ in 0..samples {
        let a = sample::sample_in_ball(2, 0.95, &mut rng);
        let map = MobiusMap::to_origin(&a).unwrap();
        let x = sample::sample_in_ball(2, 0.999, &mut rng);
        let interior_margin = 1.0 - map.apply(&x).unwrap().norm();
        let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let s = Point::new(vec![th.cos(), th.sin()]).unwrap();
        let sphere_err = (map.apply(&s).unwrap().norm() - 1.0).abs();
        let margin = interior_margin.min(-sphere_err);
        summary.record(margin, tol, |m| {
            Witness::new("ball_preservation_violation", m)
                .point("a", &a)
                .point("x", &x)
                .value("image_norm", 1.0 - interior_margin)
                .value("sphere_err", sphere_err)
        });
    }
    summary
}

/// The three-term inversion-distance chain on random pairs.
pub fn inversion_distance_sweep(samples: usize, seed: u64, tol: f64) -> SweepSummary {
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("inversion_distance_chain");
    let mut drawn = 0usize;
    while drawn < samples {
        let a = sample::sample_in_ball(2, 0.999, &mut rng);
        if a.norm() < 1e-3 {
            continue;
        }
        let b = sample::sample_in_ball(2, 0.999, &mut rng);
        drawn += 1;
        let (lo, mid, hi) = inversion_distance_bounds(&a, &b).unwrap();
        let margin = (mid - lo).min(hi - mid);
        summary.record(margin, tol, |m| {
            Witness::new("inversion_distance_chain_violation", m)
                .point("a", &a)
                .point("b", &b)
                .value("lo", lo)
                .value("mid", mid)
                .value("hi", hi)
        });
    }
    summary
}

/// `log(1+x)/log(1+y) <= x/y` over random `x >= y > 0`.
pub fn log_ratio_sweep(samples: usize, seed: u64, tol: f64) -> SweepSummary {
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("log_ratio");
    for _ in 0..samples {
        let y = 10f64.powf(rng.gen_range(-3.0..1.0));
        let x = y * 10f64.powf(rng.gen_range(0.0..2.0));
        let check = log_ratio_bound(x, y).unwrap();
        summary.record(check.slack, tol, |m| {
            Witness::new("log_ratio_violation", m)
                .value("x", x)
                .value("y", y)
                .value("lhs", check.lhs)
                .value("rhs", check.rhs)
        });
    }
    summary
}

/// `|d(x,G2) - d(x,G1)| <= d_H(G1,G2)` over random finite sets.
pub fn hausdorff_stability_sweep(samples: usize, seed: u64, tol: f64) -> Result<SweepSummary> {
    let mut rng = sample::rng(seed);
    let mut summary = SweepSummary::new("hausdorff_stability");
    for _ in 0..samples {
        let x = Point::new(vec![rng.gen_range(-6.0..6.0), rng.gen_range(-6.0..6.0)])?;
        let mk = |rng: &mut rand_chacha::ChaCha8Rng| -> Result<BoundarySet> {
            BoundarySet::finite(
                (0..20)
                    .map(|_| Point::new(vec![rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)]))
                    .collect::<Result<_>>()?,
            )
        };
        let g1 = mk(&mut rng)?;
        let g2 = mk(&mut rng)?;
        let (lhs, rhs) = crate::convergence::set_stability_check(&x, &g1, &g2)?;
        summary.record(rhs - lhs, tol, |m| {
            Witness::new("hausdorff_stability_violation", m)
                .point("x", &x)
                .value("lhs", lhs)
                .value("rhs", rhs)
        });
    }
    Ok(summary)
}

/// One grid point of the sharpness sweep.
#[derive(Debug, Clone, Copy)]
pub struct SharpnessRow {
    pub m: f64,
    pub t: f64,
    /// Deficiency evaluated from the actual triple `(t, -t, 0)`.
    pub h: f64,
    /// The closed form `2 sqrt(1+M) / (sqrt(1+M) + sqrt(1+M-t))`.
    pub h_closed: f64,
    pub diff: f64,
}

/// Evaluate the witness-family deficiency over a `(M, t)` grid and compare
/// it against its closed form. The largest `h` the grid reaches is the
/// infimum of admissible `c` values exhibited by the sweep.
pub fn sharpness_grid(
    ms: &[f64],
    t_steps: usize,
    tol: f64,
) -> Result<(SweepSummary, Vec<SharpnessRow>)> {
    let mut summary = SweepSummary::new("sharpness_grid");
    let mut rows = Vec::with_capacity(ms.len() * t_steps);
    for &m in ms {
        let g = BoundarySet::finite_on_line(&[-m, m])?;
        for k in 1..=t_steps {
            let t = m * k as f64 / t_steps as f64;
            let h = triangle_deficiency(
                &Point::new(vec![t])?,
                &Point::new(vec![-t])?,
                &Point::new(vec![0.0])?,
                &g,
            )?;
            let h_closed = sharpness_deficiency(m, t)?;
            let diff = (h - h_closed).abs();
            summary.record(-diff, tol, |mg| {
                Witness::new("sharpness_closed_form_mismatch", mg)
                    .value("m", m)
                    .value("t", t)
                    .value("h", h)
                    .value("h_closed", h_closed)
            });
            rows.push(SharpnessRow {
                m,
                t,
                h,
                h_closed,
                diff,
            });
        }
    }
    Ok((summary, rows))
}

/// The three standard domains the triangle-inequality sweeps run in.
pub fn standard_domains() -> Vec<(&'static str, DomainSpec)> {
    vec![
        (
            "line_pair",
            DomainSpec::new(BoundarySet::finite_on_line(&[-4.0, 4.0]).unwrap(), None),
        ),
        ("unit_disc", DomainSpec::unit_disc()),
        ("upper_half_plane", DomainSpec::upper_half_plane()),
    ]
}

/// Convenience wrapper for an interior-tagged unit disc in higher
/// dimensions.
pub fn unit_ball_domain(dim: usize) -> DomainSpec {
    DomainSpec::new(
        BoundarySet::sphere(Point::new(vec![0.0; dim]).unwrap(), 1.0).unwrap(),
        Some(InteriorSide::Inside),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_triples_pass_in_metric_regime() {
        let p = MetricParams::new(2.0).unwrap();
        for (_, d) in standard_domains() {
            let s = triangle_random_sweep(&d, &p, 2000, 0, 1e-12).unwrap();
            assert!(s.passed(), "{}: {:?}", s.kind, s.witness);
            assert_eq!(s.checked, 2000);
        }
    }

    #[test]
    fn candidates_find_the_sharp_witness() {
        // c = 1.3 < 4/3 fails on G = {-3, 3} at the triple (3, -3, 0)
        let d = DomainSpec::new(BoundarySet::finite_on_line(&[-3.0, 3.0]).unwrap(), None);
        let p = MetricParams::new(1.3).unwrap();
        let s = triangle_candidate_sweep(&d, &p, 1e-12).unwrap();
        assert!(!s.passed());
        let w = s.witness.unwrap();
        let h = w.values["deficiency"];
        assert!((h - 4.0 / 3.0).abs() < 1e-12, "h = {h}");
        let xs: Vec<f64> = w.points.values().flat_map(|v| v.iter().copied()).collect();
        assert!(xs.contains(&3.0) && xs.contains(&-3.0) && xs.contains(&0.0));

        // while c = 2 passes the same candidates
        let p2 = MetricParams::new(2.0).unwrap();
        assert!(triangle_candidate_sweep(&d, &p2, 1e-12).unwrap().passed());
    }

    #[test]
    fn bound_sweeps_pass() {
        let p = MetricParams::new(2.0).unwrap();
        assert!(hyperbolic_bound_sweep(&p, 2, 2000, 1, 1e-12)
            .unwrap()
            .passed());
        assert!(t_envelope_sweep(&DomainSpec::unit_disc(), &p, 200, 2, 1e-8)
            .unwrap()
            .passed());
        assert!(
            t_envelope_sweep(&DomainSpec::upper_half_plane(), &p, 2000, 3, 1e-8)
                .unwrap()
                .passed()
        );
        let g = BoundarySet::finite_on_line(&[-4.0, 4.0]).unwrap();
        assert!(sandwich_sweep(&g, &p, 10_000, 4, 1e-12).unwrap().passed());
        let disc = BoundarySet::sphere(Point::new(vec![0.0, 0.0]).unwrap(), 1.0).unwrap();
        assert!(sandwich_sweep(&disc, &p, 10_000, 5, 1e-12)
            .unwrap()
            .passed());
    }

    #[test]
    fn envelope_holds_in_the_three_ball() {
        let p = MetricParams::new(2.0).unwrap();
        assert!(t_envelope_sweep(&unit_ball_domain(3), &p, 100, 6, 1e-8)
            .unwrap()
            .passed());
    }

    #[test]
    fn ball_inclusion_on_small_sweep() {
        let p = MetricParams::new(2.0).unwrap();
        let (summary, rows) =
            ball_inclusion_sweep(&DomainSpec::unit_disc(), &p, 10, 50, 5, 1e-9).unwrap();
        assert!(summary.passed(), "witness: {:?}", summary.witness);
        assert_eq!(rows.len(), 10);
        for row in &rows {
            assert!(row.inner < row.outer);
            assert!(row.inner > 0.0 && row.inner < 1.0);
        }
    }

    #[test]
    fn mobius_sweeps_pass() {
        let p = MetricParams::new(2.0).unwrap();
        for dim in [2usize, 3] {
            assert!(mobius_distortion_sweep(&p, dim, 2000, 6, 0.0, 0.95, 1e-10)
                .unwrap()
                .passed());
            assert!(mobius_distortion_sweep(&p, dim, 200, 6, 0.95, 0.99, 1e-6)
                .unwrap()
                .passed());
        }
        assert!(reflection_identity_sweep(2000, 7, 1e-12).passed());
        assert!(ball_preservation_sweep(2000, 8, 1e-10).passed());
        assert!(inversion_distance_sweep(2000, 9, 1e-12).passed());
        assert!(log_ratio_sweep(2000, 10, 1e-12).passed());
    }

    #[test]
    fn hyperbolic_bound_holds_in_dimension_three() {
        let p = MetricParams::new(2.0).unwrap();
        assert!(hyperbolic_bound_sweep(&p, 3, 2000, 12, 1e-12)
            .unwrap()
            .passed());
    }

    #[test]
    fn hausdorff_stability_sweep_passes() {
        assert!(hausdorff_stability_sweep(500, 11, 1e-12).unwrap().passed());
    }

    #[test]
    fn sharpness_grid_matches_closed_form() {
        let (summary, rows) = sharpness_grid(&[3.0, 100.0, 1e4, 1e6], 32, 1e-12).unwrap();
        assert!(summary.passed(), "witness: {:?}", summary.witness);
        // sup h approaches 2 from below as M grows
        let sup = rows.iter().map(|r| r.h).fold(0.0, f64::max);
        assert!(sup > 1.99 && sup < 2.0, "sup = {sup}");
    }

    #[test]
    fn witness_serializes_to_sorted_json() {
        let w = Witness::new("demo", -0.5)
            .point("x", &Point::new(vec![3.0]).unwrap())
            .value("lhs", 1.0);
        let json = w.to_json();
        assert!(json.contains("\"kind\":\"demo\""));
        assert!(json.contains("\"x\":[3.0]"));
    }
}
