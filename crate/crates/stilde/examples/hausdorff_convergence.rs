//! Stability of the metric under Hausdorff perturbation of the reference
//! set.
//!
//! ```bash
//! cargo run -p stilde --example hausdorff_convergence
//! ```

use stilde::convergence::{convergence_run, perturb_outward, set_stability_check};
use stilde::verify::hausdorff_stability_sweep;
use stilde::{point, BoundarySet, MetricParams};

fn main() -> stilde::Result<()> {
    println!("Hausdorff stability and convergence");
    println!("===================================\n");

    println!("1. Boundary distances are 1-Lipschitz in the set:");
    println!("   |d(x, G2) - d(x, G1)| <= d_H(G1, G2)\n");
    let g1 = BoundarySet::finite_on_line(&[-4.0, 4.0])?;
    let g2 = BoundarySet::finite_on_line(&[-4.25, 4.25])?;
    let (lhs, rhs) = set_stability_check(&point(&[0.0]), &g1, &g2)?;
    println!("   G1 = {{-4,4}}, G2 = {{-4.25,4.25}}, x = 0:  |{lhs}| <= {rhs}");
    let sweep = hausdorff_stability_sweep(2000, 0, 1e-12)?;
    println!(
        "   sweep over random 20-point sets: {} checks, {} violations\n",
        sweep.checked, sweep.violations
    );

    println!("2. Convergence along a perturbation schedule");
    println!("   G_n pushes every member of G outward by delta_n = 2^-n:\n");
    let p = MetricParams::new(2.0)?;
    let schedule: Vec<f64> = (1..=20).map(|n| 2.0_f64.powi(-n)).collect();
    let trace = convergence_run(&point(&[3.0]), &point(&[1.0]), &g1, &schedule, &p)?;
    println!(
        "   {:>3} {:>14} {:>18} {:>12}",
        "n", "d_H(G_n,G)", "S~_{G_n}", "gap"
    );
    for row in trace.rows.iter().step_by(4) {
        println!(
            "   {:>3} {:>14.3e} {:>18.12} {:>12.3e}",
            row.n, row.eps, row.s_n, row.gap
        );
    }
    let last = trace.rows.last().unwrap();
    println!(
        "   {:>3} {:>14.3e} {:>18.12} {:>12.3e}",
        last.n, last.eps, last.s_n, last.gap
    );
    println!(
        "\n   limit value S~_G = {:.12}; every gap obeyed gap <= c*K*delta with K = {:.4}",
        last.s_limit, trace.rate_constant
    );

    println!("\n3. The same for a polygonal reference set (radial dilation)");
    let gon = BoundarySet::regular_polygon(&point(&[0.0, 0.0]), 1.0, 64)?;
    let dilated = perturb_outward(&gon, 0.25)?;
    println!(
        "   d_H(64-gon, dilated 64-gon) = {:.6}",
        stilde::hausdorff_dist(&gon, &dilated)?
    );
    let trace = convergence_run(
        &point(&[0.5, 0.0]),
        &point(&[-0.5, 0.0]),
        &gon,
        &schedule,
        &p,
    )?;
    println!(
        "   gap falls from {:.3e} (n=1) to {:.3e} (n=20), monotone: {}",
        trace.rows[0].gap,
        trace.final_gap(),
        trace.rows.windows(2).all(|w| w[1].gap <= w[0].gap + 1e-15)
    );

    println!("\n4. Trace CSV (schema n,eps_n,s_n,s_limit,gap):\n");
    let mut buf = Vec::new();
    let short = convergence_run(&point(&[3.0]), &point(&[1.0]), &g1, &schedule[..5], &p)?;
    short.write_csv(&mut buf)?;
    print!("{}", String::from_utf8_lossy(&buf));

    Ok(())
}
