//! Metric balls of `S~` nest between two triangular-ratio balls with
//! explicit radii.
//!
//! ```bash
//! cargo run -p stilde --example ball_inclusion
//! ```

use stilde::verify::ball_inclusion_sweep;
use stilde::{ball_inclusion_radii, DomainSpec, MetricParams};

fn main() -> stilde::Result<()> {
    println!("Ball inclusion");
    println!("==============\n");
    let p = MetricParams::new(2.0)?;

    println!("1. The radii");
    println!("   For a center x with boundary distance dx and S~ radius r:");
    println!("   B_t(x, l)  sits inside  B_S~(x, r)  sits inside  B_t(x, L)\n");
    println!("   {:>6} {:>8} {:>12} {:>12}", "dx", "r", "l", "L");
    for (dx, r) in [(1.0, 2.0_f64.ln()), (0.5, 0.25), (0.25, 0.1), (1.0, 1.0)] {
        let radii = ball_inclusion_radii(dx, r, &p)?;
        println!(
            "   {dx:>6} {r:>8.4} {:>12.6} {:>12.6}",
            radii.inner, radii.outer
        );
    }
    println!("\n   (dx = 1, r = log 2 gives the clean pair l = 1/3, L = 1.)\n");

    println!("2. Point-cloud confirmation in the unit disc");
    let disc = DomainSpec::unit_disc();
    let (summary, rows) = ball_inclusion_sweep(&disc, &p, 12, 150, 0, 1e-9)?;
    println!(
        "   {:>20} {:>8} {:>9} {:>9} {:>7} {:>7}",
        "center", "r", "l", "L", "in-bad", "out-bad"
    );
    for row in &rows {
        let c = row.x.coords();
        println!(
            "   ({:>8.4}, {:>7.4}) {:>8.4} {:>9.5} {:>9.5} {:>7} {:>7}",
            c[0], c[1], row.r, row.inner, row.outer, row.inner_violations, row.outer_violations
        );
    }
    println!(
        "\n   {} implication checks, {} misclassified points",
        summary.checked, summary.violations
    );

    println!("\n3. A larger constant shrinks both radii");
    for c in [2.0, 4.0, 8.0] {
        let params = MetricParams::new(c)?;
        let radii = ball_inclusion_radii(1.0, 2.0_f64.ln(), &params)?;
        println!("   c = {c}: l = {:.6}, L = {:.6}", radii.inner, radii.outer);
    }

    Ok(())
}
