//! One-dimensional minimization helpers for boundary parameterizations.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the minimum of `f` on `[a, b]`.
///
/// `f` must be unimodal on the interval. Returns `(x_min, f_min)` once the
/// bracket is shorter than `tol`.
pub(crate) fn golden_section_min(
    f: impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    tol: f64,
) -> (f64, f64) {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > tol {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    let xm = 0.5 * (a + b);
    (xm, f(xm))
}

/// Coarse grid scan followed by golden-section refinement around the best
/// grid cell. Handles multimodal `f`, provided the grid resolves the global
/// basin.
pub(crate) fn grid_then_golden(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    grid: usize,
    tol: f64,
) -> (f64, f64) {
    let h = (b - a) / grid as f64;
    let mut best_i = 0usize;
    let mut best = f64::INFINITY;
    for i in 0..=grid {
        let v = f(a + h * i as f64);
        if v < best {
            best = v;
            best_i = i;
        }
    }
    let lo = a + h * (best_i.saturating_sub(1)) as f64;
    let hi = (a + h * (best_i + 1) as f64).min(b);
    golden_section_min(f, lo, hi, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Near a smooth minimum the objective is flat at f64 resolution, so the
    // minimizer location is only accurate to about sqrt(eps); the value is
    // what converges tightly.

    #[test]
    fn finds_parabola_minimum() {
        let (x, fx) = golden_section_min(|t| (t - 0.3).powi(2) + 1.0, 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 1.0).abs() < 1e-15);
    }

    #[test]
    fn grid_resolves_two_basins() {
        // global minimum at t = 0.8, a shallower one at t = 0.1
        let f = |t: f64| (t - 0.1).powi(2).min(0.5 * (t - 0.8).powi(2) - 0.01);
        let (x, fx) = grid_then_golden(f, 0.0, 1.0, 1024, 1e-12);
        assert!((x - 0.8).abs() < 1e-7);
        assert!((fx + 0.01).abs() < 1e-15);
    }
}
