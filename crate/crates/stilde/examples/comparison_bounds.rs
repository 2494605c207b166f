//! Comparing the metric against the hyperbolic metric of the unit ball and
//! the triangular ratio metric, and recovering Euclidean distance from
//! metric values.
//!
//! ```bash
//! cargo run -p stilde --example comparison_bounds
//! ```

use stilde::verify::{hyperbolic_bound_sweep, sandwich_sweep, t_envelope_sweep};
use stilde::{
    distance_sandwich, euclid_dist, hyperbolic_th_half, hyperbolic_upper_bound, point,
    stilde_metric, t_comparison_bounds, tri_ratio, BoundarySet, DomainSpec, MetricParams,
};

fn main() -> stilde::Result<()> {
    println!("Comparison inequalities");
    println!("=======================\n");
    let p = MetricParams::new(2.0)?;

    println!("1. Against the hyperbolic metric of the unit ball");
    let sphere = BoundarySet::sphere(point(&[0.0, 0.0]), 1.0)?;
    let x = point(&[0.5, 0.0]);
    let y = point(&[-0.5, 0.0]);
    let th = hyperbolic_th_half(&x, &y)?;
    let s = stilde_metric(&x, &y, &sphere, &p)?;
    let bound = hyperbolic_upper_bound(&x, &y, &p)?;
    println!("   x = 0.5 e1, y = -0.5 e1:");
    println!("   th(rho/2)          = {th:.6}");
    println!("   S~                 = {s:.6}");
    println!("   log(2c th(rho/2)+1) = {bound:.6}  (upper bound)\n");
    let sweep = hyperbolic_bound_sweep(&p, 2, 20_000, 0, 1e-12)?;
    println!(
        "   sweep: {} random pairs, {} violations, worst slack {:+.2e}\n",
        sweep.checked, sweep.violations, sweep.worst_slack
    );

    println!("2. Against the triangular ratio metric");
    let hp = DomainSpec::upper_half_plane();
    let (a, b) = (point(&[0.0, 1.0]), point(&[0.0, 2.0]));
    let t = tri_ratio(&a, &b, &hp)?;
    let (lower, upper) = t_comparison_bounds(&a, &b, &hp, &p)?;
    let s_ab = stilde_metric(&a, &b, &hp.boundary, &p)?;
    println!("   upper half-plane, x = (0,1), y = (0,2):");
    println!("   t(x, y) = {t:.6}  (reflection principle)");
    println!("   {lower:.6} <= S~ = {s_ab:.6} <= {upper:.6}\n");
    for (name, domain) in [
        ("upper_half_plane", hp),
        ("unit_disc", DomainSpec::unit_disc()),
    ] {
        let sweep = t_envelope_sweep(&domain, &p, 2000, 0, 1e-8)?;
        println!(
            "   {name:17} {} pairs, {} envelope violations",
            sweep.checked, sweep.violations
        );
    }

    println!("\n3. Sandwiching the Euclidean distance from the metric value");
    let g = BoundarySet::finite_on_line(&[-4.0, 4.0])?;
    let (u, v) = (point(&[3.0]), point(&[1.0]));
    let sw = distance_sandwich(&u, &v, &g, &p)?;
    println!(
        "   G = {{-4,4}}, x = 3, y = 1: {:.6} <= |x-y| = {} <= {:.6}",
        sw.lower,
        euclid_dist(&u, &v)?,
        sw.upper
    );
    let sweep = sandwich_sweep(&g, &p, 20_000, 0, 1e-12)?;
    println!(
        "   sweep: {} random pairs, {} violations",
        sweep.checked, sweep.violations
    );

    Ok(())
}
