//! Evaluating the hyperbolic-type metric and seeing why the constant
//! matters.
//!
//! ```bash
//! cargo run -p stilde --example metric_basics
//! ```

use stilde::{point, stilde, stilde_metric, triangle_deficiency, BoundarySet, MetricParams};

fn main() -> stilde::Result<()> {
    println!("Hyperbolic-type metric basics");
    println!("=============================\n");

    // Reference set G = {-4, 4} on the real line.
    let g = BoundarySet::finite_on_line(&[-4.0, 4.0])?;
    let (x, y, z) = (point(&[3.0]), point(&[1.0]), point(&[2.0]));

    println!("1. The base distance function s~");
    println!("   G = {{-4, 4}},  d(x) = distance from x to G\n");
    let sxy = stilde(&x, &y, &g)?;
    let sxz = stilde(&x, &z, &g)?;
    let syz = stilde(&y, &z, &g)?;
    println!("   s~(3, 1) = {sxy:.16}   (= 1/sqrt 2)");
    println!("   s~(3, 2) = {sxz:.16}   (= 1/sqrt 6)");
    println!("   s~(1, 2) = {syz:.16}   (= 1/(2 sqrt 3))");

    println!("\n2. s~ is NOT a metric");
    println!(
        "   s~(3,1) = {:.6} > {:.6} = s~(3,2) + s~(1,2)",
        sxy,
        sxz + syz
    );
    println!("   so the triangle inequality fails on this triple.\n");

    println!("3. The logarithmic form S~(x,y) = log(1 + c s~(x,y))");
    for c in [1.0, 1.5, 2.0, 5.0] {
        let p = MetricParams::new(c)?;
        let vxy = stilde_metric(&x, &y, &g, &p)?;
        let vxz = stilde_metric(&x, &z, &g, &p)?;
        let vyz = stilde_metric(&y, &z, &g, &p)?;
        let holds = vxy <= vxz + vyz;
        println!(
            "   c = {c:3}: S~(3,1) = {vxy:.6}, S~(3,2)+S~(1,2) = {:.6}  triangle {}  (metric regime: {})",
            vxz + vyz,
            if holds { "holds" } else { "FAILS" },
            p.is_metric_regime(),
        );
    }

    println!("\n4. How much of the constant a triple consumes");
    println!("   S~ satisfies the triangle inequality on (x,y,z) iff c >= h(x,y,z):");
    let h = triangle_deficiency(&x, &y, &z, &g)?;
    println!("   h(3, 1, 2) = {h:.6}");
    let h_worst = triangle_deficiency(&point(&[4.0]), &point(&[-4.0]), &point(&[0.0]), &g)?;
    println!("   h(4, -4, 0) = {h_worst:.6}   (the worst triple for this G)");

    println!("\n5. Works against any reference set");
    let circle = BoundarySet::sphere(point(&[0.0, 0.0]), 1.0)?;
    let p = MetricParams::new(2.0)?;
    let a = point(&[0.5, 0.0]);
    let b = point(&[-0.5, 0.0]);
    println!(
        "   unit circle, S~(0.5 e1, -0.5 e1) = {:.6}",
        stilde_metric(&a, &b, &circle, &p)?
    );
    let half = BoundarySet::half_space(point(&[0.0, 1.0]), 0.0)?;
    println!(
        "   upper half-plane, S~((0,1), (0,2)) = {:.6}",
        stilde_metric(&point(&[0.0, 1.0]), &point(&[0.0, 2.0]), &half, &p)?
    );

    Ok(())
}
