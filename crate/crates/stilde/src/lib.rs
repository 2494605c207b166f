//! Hyperbolic-type metrics on subsets of Euclidean space.
//!
//! For a reference set `G` and the boundary distance `d(x) = d(x, G)`, the
//! crate evaluates the distance function
//!
//! ```text
//! S~_{G,c}(x, y) = log(1 + c d(x,y) / (sqrt(1 + d(x)) sqrt(1 + d(y))))
//! ```
//!
//! which is a metric exactly when `c >= 2`, together with the reference
//! quantities it is compared against: the triangular ratio metric, the
//! hyperbolic metric of the unit ball, Hausdorff distances, Möbius ball
//! automorphisms, and linear dilatation. Seeded property sweeps verify the
//! comparison inequalities, ball inclusions, convergence under Hausdorff
//! perturbation, quasiconformality bounds, and Möbius distortion envelopes
//! numerically, reporting any violating witness.
//!
//! # Quick start
//!
//! ```
//! use stilde::{point, BoundarySet, MetricParams, stilde_metric};
//!
//! let g = BoundarySet::finite_on_line(&[-4.0, 4.0])?;
//! let params = MetricParams::new(2.0)?;
//! let s = stilde_metric(&point(&[3.0]), &point(&[1.0]), &g, &params)?;
//! assert!((s - (1.0 + 2.0 / 2.0_f64.sqrt()).ln()).abs() < 1e-15);
//! # Ok::<(), stilde::Error>(())
//! ```
//!
//! The `examples/` directory walks through each capability; the `stilde`
//! binary exposes the same sweeps as subcommands for CI and plotting
//! pipelines.

pub mod cli;
pub mod convergence;
pub mod dilatation;
mod error;
pub mod geom;
pub mod json;
pub mod metrics;
pub mod mobius;
mod optim;
pub mod report;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
pub use geom::{
    dist_to_set, euclid_dist, hausdorff_dist, point, BoundarySet, DomainSpec, InteriorSide, Point,
};
pub use metrics::{
    ball_inclusion_radii, distance_sandwich, hyperbolic_dist, hyperbolic_th_half,
    hyperbolic_upper_bound, sharpness_deficiency, stilde, stilde_metric, t_comparison_bounds,
    tri_ratio, triangle_deficiency, BallInclusionRadii, DistanceSandwich, MetricParams,
};
pub use mobius::{
    distortion_envelope, inversion_distance_bounds, log_ratio_bound, random_rotation,
    LogRatioCheck, MobiusMap, SphereReflection,
};
