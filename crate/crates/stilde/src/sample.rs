//! Deterministic seeded sampling of points, domains, and boundaries.
//!
//! Every sweep in this crate draws from a [`ChaCha8Rng`] seeded explicitly,
//! so identical configurations reproduce identical reports byte for byte.

use crate::error::{Error, Result};
use crate::geom::{dist_to_set, BoundarySet, DomainSpec, Point};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Axis-aligned box enclosing the boundary, padded by half its largest
/// extent (at least 1). Half-space boundaries, being unbounded, get a fixed
/// box of half-width 4 around the anchor point `offset * normal`.
pub fn sampling_box(b: &BoundarySet) -> (Vec<f64>, Vec<f64>) {
    let dim = b.dim();
    let (mut lo, mut hi) = (vec![f64::INFINITY; dim], vec![f64::NEG_INFINITY; dim]);
    let mut absorb = |p: &Point| {
        for (i, &c) in p.coords().iter().enumerate() {
            lo[i] = lo[i].min(c);
            hi[i] = hi[i].max(c);
        }
    };
    match b {
        BoundarySet::Sphere { center, radius } => {
            absorb(&center.add_scaled(&ones(dim), -radius).unwrap());
            absorb(&center.add_scaled(&ones(dim), *radius).unwrap());
        }
        BoundarySet::HalfSpaceBoundary { normal, offset } => {
            let anchor = normal.scale(*offset);
            absorb(&anchor.add_scaled(&ones(dim), -4.0).unwrap());
            absorb(&anchor.add_scaled(&ones(dim), 4.0).unwrap());
            return (lo, hi);
        }
        BoundarySet::FinitePointSet { points } => points.iter().for_each(absorb),
        BoundarySet::PolygonalChain { vertices, .. } => vertices.iter().for_each(absorb),
    }
    let extent = lo
        .iter()
        .zip(&hi)
        .map(|(a, b)| b - a)
        .fold(0.0_f64, f64::max);
    let pad = (extent / 2.0).max(1.0);
    for i in 0..dim {
        lo[i] -= pad;
        hi[i] += pad;
    }
    (lo, hi)
}

fn ones(dim: usize) -> Point {
    Point::new(vec![1.0; dim]).unwrap()
}

pub fn sample_in_box(lo: &[f64], hi: &[f64], rng: &mut ChaCha8Rng) -> Point {
    Point::new(
        lo.iter()
            .zip(hi)
            .map(|(&a, &b)| rng.gen_range(a..b))
            .collect(),
    )
    .unwrap()
}

/// A point of the tagged domain (rejection sampling over the boundary's
/// box), or a point of the ambient box when no interior tag is present.
pub fn sample_point(d: &DomainSpec, rng: &mut ChaCha8Rng) -> Point {
    let (lo, hi) = sampling_box(&d.boundary);
    if d.interior.is_none() {
        return sample_in_box(&lo, &hi, rng);
    }
    for _ in 0..1_000_000 {
        let p = sample_in_box(&lo, &hi, rng);
        if d.contains(&p).unwrap_or(false) {
            return p;
        }
    }
    panic!("domain interior appears to have measure zero inside its sampling box");
}

/// A point of the tagged domain at boundary distance at least `min_dist`.
pub fn sample_point_off_boundary(d: &DomainSpec, min_dist: f64, rng: &mut ChaCha8Rng) -> Point {
    for _ in 0..1_000_000 {
        let p = sample_point(d, rng);
        if dist_to_set(&p, &d.boundary).unwrap() >= min_dist {
            return p;
        }
    }
    panic!("could not sample a point {min_dist} away from the boundary");
}

/// Uniform point of the open ball of the given radius around the origin.
pub fn sample_in_ball(dim: usize, radius: f64, rng: &mut ChaCha8Rng) -> Point {
    loop {
        let p = Point::new((0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
        if p.norm() < 1.0 {
            return p.scale(radius);
        }
    }
}

/// `k` deterministic samples on the boundary set itself.
///
/// Spheres are parameterized by angle in the plane and by a Fibonacci
/// lattice in higher dimensions; chains by arc length; half-space boundaries
/// by an orthogonal projection of box samples drawn from a fixed-seed
/// generator; finite sets return their members.
pub fn boundary_samples(b: &BoundarySet, k: usize) -> Vec<Point> {
    match b {
        BoundarySet::Sphere { center, radius } if b.dim() == 2 => (0..k)
            .map(|i| {
                let th = 2.0 * std::f64::consts::PI * i as f64 / k as f64;
                center
                    .add_scaled(&Point::new(vec![th.cos(), th.sin()]).unwrap(), *radius)
                    .unwrap()
            })
            .collect(),
        BoundarySet::Sphere { center, radius } if b.dim() == 3 => {
            let golden = std::f64::consts::PI * (3.0 - 5.0_f64.sqrt());
            (0..k)
                .map(|i| {
                    let z = 1.0 - 2.0 * (i as f64 + 0.5) / k as f64;
                    let r = (1.0 - z * z).sqrt();
                    let th = golden * i as f64;
                    center
                        .add_scaled(
                            &Point::new(vec![r * th.cos(), r * th.sin(), z]).unwrap(),
                            *radius,
                        )
                        .unwrap()
                })
                .collect()
        }
        BoundarySet::Sphere { center, radius } => {
            let mut r = rng(0xB0DA);
            (0..k)
                .map(|_| {
                    let dir = sample_in_ball(b.dim(), 1.0, &mut r);
                    let n = dir.norm().max(1e-9);
                    center.add_scaled(&dir, *radius / n).unwrap()
                })
                .collect()
        }
        BoundarySet::HalfSpaceBoundary { normal, offset } => {
            let mut r = rng(0xB0DA);
            let (lo, hi) = sampling_box(b);
            (0..k)
                .map(|_| {
                    let p = sample_in_box(&lo, &hi, &mut r);
                    let s = p.dot(normal).unwrap() - offset;
                    p.add_scaled(normal, -s).unwrap()
                })
                .collect()
        }
        BoundarySet::FinitePointSet { points } => points.iter().take(k.max(1)).cloned().collect(),
        BoundarySet::PolygonalChain { vertices, closed } => {
            let segs = BoundarySet::segments(vertices, *closed);
            let lens: Vec<f64> = segs.iter().map(|(p, q)| q.sub(p).unwrap().norm()).collect();
            let total: f64 = lens.iter().sum();
            let mut out = Vec::with_capacity(k);
            for i in 0..k {
                let mut target = total * i as f64 / k as f64;
                let mut idx = 0;
                while idx + 1 < segs.len() && target > lens[idx] {
                    target -= lens[idx];
                    idx += 1;
                }
                let (p, q) = &segs[idx];
                let t = (target / lens[idx]).clamp(0.0, 1.0);
                out.push(p.add_scaled(&q.sub(p).unwrap(), t).unwrap());
            }
            out
        }
    }
}

/// Sanity error for operations that require an interior-tagged domain.
pub fn require_interior(d: &DomainSpec) -> Result<()> {
    if d.interior.is_none() {
        return Err(Error::MissingInterior);
    }
    Ok(())
}
