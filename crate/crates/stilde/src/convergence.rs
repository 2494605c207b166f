//! Stability of `S~_{G,c}` under Hausdorff perturbation of the reference
//! set: if `d_H(G_n, G) -> 0` then `S~_{G_n,c}(x,y) -> S~_{G,c}(x,y)`.
//!
//! The limit statement is qualitative; to make it assertable, each trace
//! carries an explicit rate constant `K` derived from the partial
//! derivatives of `S~` in the two boundary distances, and every step checks
//! `gap_n <= c * K * delta_n`. The rate bound is this artifact's own
//! construction, not part of the statement being verified, and is labeled
//! as such in the trace header.

use crate::error::{Error, Result};
use crate::geom::{dist_to_set, euclid_dist, hausdorff_dist, BoundarySet, Point};
use crate::metrics::{stilde_metric, MetricParams};
use std::io::Write;

/// One step of a convergence trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub n: usize,
    /// `d_H(G_n, G)`.
    pub eps: f64,
    /// `S~_{G_n,c}(x, y)`.
    pub s_n: f64,
    /// `S~_{G,c}(x, y)`.
    pub s_limit: f64,
    /// `|s_n - s_limit|`.
    pub gap: f64,
}

/// A full convergence run along a perturbation schedule.
#[derive(Debug, Clone)]
pub struct ConvergenceTrace {
    pub rows: Vec<TraceRow>,
    /// Lipschitz constant of `S~ / c` in the boundary distances over the
    /// swept range; the per-step assertion is `gap <= c * K * delta`.
    pub rate_constant: f64,
    pub c: f64,
    /// True when `|d(x, G_n) - d(x, G)| <= eps_n` held at every step.
    pub stability_ok: bool,
    /// True when the rate bound held at every step.
    pub rate_ok: bool,
}

impl ConvergenceTrace {
    pub fn final_gap(&self) -> f64 {
        self.rows.last().map_or(0.0, |r| r.gap)
    }

    /// CSV with the schema `n,eps_n,s_n,s_limit,gap`. Header comments carry
    /// the constant and the rate-bound label.
    pub fn write_csv(&self, w: &mut impl Write) -> std::io::Result<()> {
        writeln!(w, "# c={}", crate::report::fmt_f64(self.c))?;
        writeln!(
            w,
            "# rate_constant_K={} (derived Lipschitz bound for the gap check, not part of the limit statement)",
            crate::report::fmt_f64(self.rate_constant)
        )?;
        writeln!(w, "n,eps_n,s_n,s_limit,gap")?;
        for r in &self.rows {
            writeln!(
                w,
                "{},{},{},{},{}",
                r.n,
                crate::report::fmt_f64(r.eps),
                crate::report::fmt_f64(r.s_n),
                crate::report::fmt_f64(r.s_limit),
                crate::report::fmt_f64(r.gap)
            )?;
        }
        Ok(())
    }
}

/// Both sides of the stability inequality `|d(x,G2) - d(x,G1)| <= d_H(G1,G2)`.
pub fn set_stability_check(x: &Point, g1: &BoundarySet, g2: &BoundarySet) -> Result<(f64, f64)> {
    let lhs = (dist_to_set(x, g2)? - dist_to_set(x, g1)?).abs();
    let rhs = hausdorff_dist(g1, g2)?;
    Ok((lhs, rhs))
}

/// Push every member (or vertex) of the set radially away from the
/// centroid by exactly `delta`. Members sitting at the centroid move along
/// the first axis.
pub fn perturb_outward(g: &BoundarySet, delta: f64) -> Result<BoundarySet> {
    let move_points = |points: &[Point]| -> Vec<Point> {
        let dim = points[0].dim();
        let mut centroid = vec![0.0; dim];
        for p in points {
            for (i, &c) in p.coords().iter().enumerate() {
                centroid[i] += c / points.len() as f64;
            }
        }
        let centroid = Point::new(centroid).unwrap();
        points
            .iter()
            .map(|p| {
                let dir = p.sub(&centroid).unwrap();
                let n = dir.norm();
                if n == 0.0 {
                    let mut e = vec![0.0; dim];
                    e[0] = 1.0;
                    p.add_scaled(&Point::new(e).unwrap(), delta).unwrap()
                } else {
                    p.add_scaled(&dir, delta / n).unwrap()
                }
            })
            .collect()
    };
    match g {
        BoundarySet::FinitePointSet { points } => BoundarySet::finite(move_points(points)),
        BoundarySet::PolygonalChain { vertices, closed } => {
            BoundarySet::chain(move_points(vertices), *closed)
        }
        _ => Err(Error::UnsupportedPerturbation),
    }
}

/// Evaluate `S~_{G_n,c}(x, y)` along `G_n = perturb_outward(G, delta_n)`
/// for a nonincreasing schedule of perturbation sizes.
pub fn convergence_run(
    x: &Point,
    y: &Point,
    g: &BoundarySet,
    schedule: &[f64],
    p: &MetricParams,
) -> Result<ConvergenceTrace> {
    for w in schedule.windows(2) {
        if w[1] > w[0] {
            return Err(Error::ScheduleNotDecreasing);
        }
    }
    if schedule.iter().any(|&d| d < 0.0 || !d.is_finite()) {
        return Err(Error::ScheduleNotDecreasing);
    }

    let s_limit = stilde_metric(x, y, g, p)?;
    let dx0 = dist_to_set(x, g)?;
    let dy0 = dist_to_set(y, g)?;
    let delta_max = schedule.first().copied().unwrap_or(0.0);
    let rate_constant = lipschitz_constant(euclid_dist(x, y)?, dx0, dy0, delta_max);

    let mut rows = Vec::with_capacity(schedule.len());
    let mut stability_ok = true;
    let mut rate_ok = true;
    for (i, &delta) in schedule.iter().enumerate() {
        let g_n = perturb_outward(g, delta)?;
        let eps = hausdorff_dist(&g_n, g)?;
        let s_n = stilde_metric(x, y, &g_n, p)?;
        let gap = (s_n - s_limit).abs();
        if (dist_to_set(x, &g_n)? - dx0).abs() > eps + 1e-12 {
            stability_ok = false;
        }
        if gap > p.c() * rate_constant * delta + 1e-12 {
            rate_ok = false;
        }
        rows.push(TraceRow {
            n: i + 1,
            eps,
            s_n,
            s_limit,
            gap,
        });
    }
    Ok(ConvergenceTrace {
        rows,
        rate_constant,
        c: p.c(),
        stability_ok,
        rate_ok,
    })
}

/// Bound on the Lipschitz constant of `(u, v) -> S~ / c` with `u, v` the two
/// boundary distances, over the rectangle swept when each distance moves by
/// at most `delta_max`:
///
/// ```text
/// |dS~/du| <= c d(x,y) / (2 (1+u)^{3/2} (1+v)^{1/2})
/// ```
fn lipschitz_constant(sep: f64, dx0: f64, dy0: f64, delta_max: f64) -> f64 {
    let u = (dx0 - delta_max).max(0.0);
    let v = (dy0 - delta_max).max(0.0);
    let part = |a: f64, b: f64| 1.0 / (2.0 * (1.0 + a).powf(1.5) * (1.0 + b).sqrt());
    sep * (part(u, v) + part(v, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::point;
    use crate::sample;
    use rand::Rng;

    fn pair_on_line() -> BoundarySet {
        BoundarySet::finite_on_line(&[-4.0, 4.0]).unwrap()
    }

    #[test]
    fn stability_worked_values() {
        let g1 = pair_on_line();
        let g2 = BoundarySet::finite_on_line(&[-4.25, 4.25]).unwrap();
        let (lhs, rhs) = set_stability_check(&point(&[0.0]), &g1, &g2).unwrap();
        assert!((lhs - 0.25).abs() < 1e-15);
        assert!((rhs - 0.25).abs() < 1e-15);
        let (l0, r0) = set_stability_check(&point(&[0.0]), &g1, &g1).unwrap();
        assert_eq!((l0, r0), (0.0, 0.0));
    }

    #[test]
    fn stability_random_sweep() {
        let mut rng = sample::rng(17);
        for _ in 0..2000 {
            let x = point(&[rng.gen_range(-6.0..6.0), rng.gen_range(-6.0..6.0)]);
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                BoundarySet::finite(
                    (0..20)
                        .map(|_| point(&[rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)]))
                        .collect(),
                )
                .unwrap()
            };
            let g1 = mk(&mut rng);
            let g2 = mk(&mut rng);
            let (lhs, rhs) = set_stability_check(&x, &g1, &g2).unwrap();
            assert!(lhs <= rhs + 1e-12);
        }
    }

    #[test]
    fn outward_perturbation_of_pair() {
        let g = pair_on_line();
        let g_d = perturb_outward(&g, 0.25).unwrap();
        assert_eq!(g_d, BoundarySet::finite_on_line(&[-4.25, 4.25]).unwrap());
        let sphere = BoundarySet::sphere(point(&[0.0]), 1.0).unwrap();
        assert!(matches!(
            perturb_outward(&sphere, 0.1),
            Err(Error::UnsupportedPerturbation)
        ));
    }

    #[test]
    fn harmonic_schedule_gap_decreases() {
        let g = pair_on_line();
        let p = MetricParams::new(2.0).unwrap();
        let schedule: Vec<f64> = (1..=10).map(|n| 1.0 / n as f64).collect();
        let trace = convergence_run(&point(&[3.0]), &point(&[1.0]), &g, &schedule, &p).unwrap();
        assert!(trace.stability_ok && trace.rate_ok);
        let gaps: Vec<f64> = trace.rows.iter().map(|r| r.gap).collect();
        assert!(gaps[9] < gaps[4] && gaps[4] < gaps[0]);
        assert!(gaps[9] > 0.0);
    }

    #[test]
    fn zero_schedule_gives_zero_gap() {
        let g = pair_on_line();
        let p = MetricParams::new(2.0).unwrap();
        let trace =
            convergence_run(&point(&[3.0]), &point(&[1.0]), &g, &[0.0, 0.0, 0.0], &p).unwrap();
        assert!(trace.rows.iter().all(|r| r.gap == 0.0 && r.eps == 0.0));
    }

    #[test]
    fn increasing_schedule_rejected() {
        let g = pair_on_line();
        let p = MetricParams::new(2.0).unwrap();
        assert!(matches!(
            convergence_run(&point(&[3.0]), &point(&[1.0]), &g, &[0.1, 0.2], &p),
            Err(Error::ScheduleNotDecreasing)
        ));
    }

    #[test]
    fn polygon_dilation_gap_monotone() {
        let g = BoundarySet::regular_polygon(&point(&[0.0, 0.0]), 1.0, 64).unwrap();
        let p = MetricParams::new(2.0).unwrap();
        let schedule: Vec<f64> = (1..=12).map(|n| 2.0_f64.powi(-n)).collect();
        let trace =
            convergence_run(&point(&[0.5, 0.0]), &point(&[-0.5, 0.0]), &g, &schedule, &p).unwrap();
        assert!(trace.stability_ok && trace.rate_ok);
        for w in trace.rows.windows(2) {
            assert!(w[1].gap <= w[0].gap + 1e-15);
        }
        assert!(trace.final_gap() < 1e-3);
    }

    #[test]
    fn csv_schema() {
        let g = pair_on_line();
        let p = MetricParams::new(2.0).unwrap();
        let trace = convergence_run(&point(&[3.0]), &point(&[1.0]), &g, &[0.5, 0.25], &p).unwrap();
        let mut buf = Vec::new();
        trace.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines().filter(|l| !l.starts_with('#'));
        assert_eq!(lines.next().unwrap(), "n,eps_n,s_n,s_limit,gap");
        assert_eq!(text.matches('\n').count(), 2 + 1 + 2);
    }
}
