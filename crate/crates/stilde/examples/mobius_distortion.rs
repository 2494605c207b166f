//! Sphere reflections, unit-ball automorphisms, and the distortion envelope
//! of the metric under them.
//!
//! ```bash
//! cargo run -p stilde --example mobius_distortion
//! ```

use stilde::verify::{ball_preservation_sweep, mobius_distortion_sweep, reflection_identity_sweep};
use stilde::{
    distortion_envelope, inversion_distance_bounds, log_ratio_bound, point, stilde_metric,
    BoundarySet, MetricParams, MobiusMap, SphereReflection,
};

fn main() -> stilde::Result<()> {
    println!("Möbius transformations of the unit ball");
    println!("=======================================\n");

    println!("1. Reflection in a sphere");
    let unit = SphereReflection::unit(2);
    let x = point(&[2.0, 0.0]);
    println!(
        "   unit-sphere inversion of 2 e1: {:?}",
        unit.reflect(&x)?.coords()
    );
    let twice = unit.reflect(&unit.reflect(&x)?)?;
    println!(
        "   reflecting twice returns the point: {:?}",
        twice.coords()
    );
    let sweep = reflection_identity_sweep(5000, 0, 1e-12);
    println!(
        "   involution + distance identity on {} random spheres: {} violations\n",
        sweep.checked, sweep.violations
    );

    println!("2. The automorphism sending a to the origin");
    let a = point(&[0.5, 0.0]);
    let map = MobiusMap::to_origin(&a)?;
    println!("   a = 0.5 e1:");
    println!("   sigma_a(a)     = {:?}", map.apply(&a)?.coords());
    println!(
        "   sigma_a(0)     = {:?}",
        map.apply(&point(&[0.0, 0.0]))?.coords()
    );
    println!(
        "   |sigma_a(0.9 e2)| = {:.6}  (stays in the ball)",
        map.apply(&point(&[0.0, 0.9]))?.norm()
    );
    let preserve = ball_preservation_sweep(5000, 1, 1e-10);
    println!(
        "   ball/sphere preservation sweep: {} violations\n",
        preserve.violations
    );

    println!("3. Inequalities behind the distortion envelope");
    let b = point(&[-0.5, 0.0]);
    let (lo, mid, hi) = inversion_distance_bounds(&a, &b)?;
    println!("   inversion-distance chain at (0.5 e1, -0.5 e1): {lo} <= {mid} <= {hi}");
    let check = log_ratio_bound(3.0, 1.0)?;
    println!(
        "   log(1+3)/log(1+1) = {:.4} <= 3/1 = {:.4}\n",
        check.lhs, check.rhs
    );

    println!("4. The distortion envelope (1-|a|)/(1+|a|) .. (1+|a|)/(1-|a|)");
    let sphere = BoundarySet::sphere(point(&[0.0, 0.0]), 1.0)?;
    let p = MetricParams::new(2.0)?;
    for na in [0.0, 0.25, 0.5, 0.9] {
        let a = point(&[na, 0.0]);
        let (lo, hi) = distortion_envelope(&a)?;
        let map = MobiusMap::to_origin(&a)?;
        let (u, v) = (point(&[0.3, 0.2]), point(&[-0.4, 0.55]));
        let ratio = stilde_metric(&map.apply(&u)?, &map.apply(&v)?, &sphere, &p)?
            / stilde_metric(&u, &v, &sphere, &p)?;
        println!("   |a| = {na:4}: envelope [{lo:.6}, {hi:.6}], sample ratio {ratio:.6}");
    }

    println!("\n5. Envelope sweep over random (a, x, y), rotations mixed in");
    for c in [2.0, 5.0] {
        let p = MetricParams::new(c)?;
        let sweep = mobius_distortion_sweep(&p, 2, 5000, 2, 0.0, 0.95, 1e-10)?;
        println!(
            "   c = {c}: {} triples, {} violations (worst slack {:+.2e})",
            sweep.checked, sweep.violations, sweep.worst_slack
        );
    }

    Ok(())
}
