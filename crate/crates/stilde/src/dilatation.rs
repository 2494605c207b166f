//! Linear dilatation of maps that are bilipschitz with respect to the
//! `S~` metrics of their source and target reference sets.
//!
//! For a homeomorphism `f`, the linear dilatation at `x` is
//!
//! ```text
//! H_f(x) = limsup_{r -> 0} L_f(x, r) / l_f(x, r)
//! ```
//!
//! with `L_f`/`l_f` the largest and smallest image displacement over the
//! sphere `|y - x| = r`. A map that is `L`-bilipschitz between
//! `S~_{G,c}` and `S~_{f(G),c}` is quasiconformal with `H(f) <= L^2`; the
//! estimators here measure both sides of that inequality empirically.

use crate::error::{Error, Result};
use crate::geom::{euclid_dist, BoundarySet, Point};
use crate::metrics::{stilde_metric, MetricParams};
use crate::mobius::MobiusMap;
use crate::sample;
use rand_chacha::ChaCha8Rng;
use std::io::Write;

type MapFn = Box<dyn Fn(&Point) -> Option<Point>>;
type SamplerFn = Box<dyn Fn(&mut ChaCha8Rng) -> Point>;

/// A forward-evaluable map together with its source and target reference
/// sets and a sampler for its domain.
pub struct MapUnderTest {
    pub name: String,
    pub source: BoundarySet,
    pub target: BoundarySet,
    /// A known bilipschitz constant, when the caller has one; sweeps fall
    /// back to [`estimate_bilipschitz_l`] otherwise.
    pub declared_l: Option<f64>,
    f: MapFn,
    sampler: SamplerFn,
}

impl MapUnderTest {
    pub fn new(
        name: impl Into<String>,
        source: BoundarySet,
        target: BoundarySet,
        sampler: SamplerFn,
        f: MapFn,
    ) -> Self {
        Self {
            name: name.into(),
            source,
            target,
            declared_l: None,
            f,
            sampler,
        }
    }

    /// Declare a bilipschitz constant (must be at least 1).
    pub fn with_declared_l(mut self, l: f64) -> Result<Self> {
        if !l.is_finite() || l < 1.0 {
            return Err(Error::InvalidConstant(l));
        }
        self.declared_l = Some(l);
        Ok(self)
    }

    pub fn eval(&self, x: &Point) -> Option<Point> {
        (self.f)(x)
    }

    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Point {
        (self.sampler)(rng)
    }
}

/// Empirical lower bound for the bilipschitz constant of the map between
/// `S~_{G,c}` and `S~_{f(G),c}`: the maximum over sampled pairs of the
/// metric ratio in both directions. Coincident pairs are skipped.
pub fn estimate_bilipschitz_l(
    map: &MapUnderTest,
    pairs: usize,
    p: &MetricParams,
    seed: u64,
) -> Result<f64> {
    if pairs < 1000 {
        return Err(Error::TooFewSamples {
            min: 1000,
            got: pairs,
        });
    }
    let mut rng = sample::rng(seed);
    let mut best = 0.0_f64;
    let mut used = 0usize;
    for _ in 0..pairs {
        let x = map.sample(&mut rng);
        let y = map.sample(&mut rng);
        let (Some(fx), Some(fy)) = (map.eval(&x), map.eval(&y)) else {
            continue;
        };
        let s = stilde_metric(&x, &y, &map.source, p)?;
        let s_img = stilde_metric(&fx, &fy, &map.target, p)?;
        if s == 0.0 || s_img == 0.0 {
            continue;
        }
        best = best.max(s_img / s).max(s / s_img);
        used += 1;
    }
    if used == 0 {
        return Err(Error::AllPairsCoincident);
    }
    Ok(best)
}

/// Stretch extrema at one probe radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilatationRow {
    pub r: f64,
    /// `L_f(x, r)`: the largest image displacement over the probe circle.
    pub max_stretch: f64,
    /// `l_f(x, r)`: the smallest one.
    pub min_stretch: f64,
    pub ratio: f64,
}

/// A radius trace of stretch ratios at one point, with the dilatation read
/// off at the smallest radius.
#[derive(Debug, Clone)]
pub struct DilatationEstimate {
    pub x: Point,
    pub rows: Vec<DilatationRow>,
    /// Ratio at the smallest probe radius, standing in for the limsup.
    pub h: f64,
}

impl DilatationEstimate {
    /// True when `h <= l_bound^2 + tol`, the quasiconformality inequality
    /// against a (lower bound of the) bilipschitz constant.
    pub fn within_square_bound(&self, l_bound: f64, tol: f64) -> bool {
        self.h <= l_bound * l_bound + tol
    }

    /// CSV rows `r,Lf,lf,ratio`; the header comment carries `L` and `L^2`
    /// when an estimate is available.
    pub fn write_csv(&self, w: &mut impl Write, l_bound: Option<f64>) -> std::io::Result<()> {
        if let Some(l) = l_bound {
            writeln!(
                w,
                "# L={} L2={}",
                crate::report::fmt_f64(l),
                crate::report::fmt_f64(l * l)
            )?;
        }
        writeln!(w, "r,Lf,lf,ratio")?;
        for row in &self.rows {
            writeln!(
                w,
                "{},{},{},{}",
                crate::report::fmt_f64(row.r),
                crate::report::fmt_f64(row.max_stretch),
                crate::report::fmt_f64(row.min_stretch),
                crate::report::fmt_f64(row.ratio)
            )?;
        }
        Ok(())
    }
}

const MIN_PROBE_RADIUS: f64 = 1e-6;

/// Probe the stretch extrema of `map` around `x` at each radius.
///
/// Probes are equally spaced on the circle in the plane and drawn from a
/// fixed-seed direction set in higher dimensions; probes where the map is
/// undefined are skipped, erroring when more than half of a circle is lost.
pub fn linear_dilatation(
    map: &MapUnderTest,
    x: &Point,
    radii: &[f64],
    probes: usize,
) -> Result<DilatationEstimate> {
    if probes < 64 {
        return Err(Error::TooFewProbes {
            min: 64,
            got: probes,
        });
    }
    if radii.is_empty()
        || radii.windows(2).any(|w| w[1] >= w[0])
        || radii.iter().any(|&r| r < MIN_PROBE_RADIUS)
    {
        return Err(Error::InvalidProbeRadii {
            min: MIN_PROBE_RADIUS,
        });
    }
    let fx = map.eval(x).ok_or(Error::PointNotInDomain)?;
    let dirs = probe_directions(x.dim(), probes);
    let mut rows = Vec::with_capacity(radii.len());
    for &r in radii {
        let mut max_stretch = 0.0_f64;
        let mut min_stretch = f64::INFINITY;
        let mut skipped = 0usize;
        for dir in &dirs {
            let y = x.add_scaled(dir, r)?;
            match map.eval(&y) {
                Some(fy) => {
                    let d = euclid_dist(&fx, &fy)?;
                    max_stretch = max_stretch.max(d);
                    min_stretch = min_stretch.min(d);
                }
                None => skipped += 1,
            }
        }
        if skipped * 2 > probes {
            return Err(Error::TooManyProbesSkipped { radius: r });
        }
        rows.push(DilatationRow {
            r,
            max_stretch,
            min_stretch,
            ratio: max_stretch / min_stretch,
        });
    }
    let h = rows.last().unwrap().ratio;
    Ok(DilatationEstimate {
        x: x.clone(),
        rows,
        h,
    })
}

fn probe_directions(dim: usize, probes: usize) -> Vec<Point> {
    if dim == 2 {
        (0..probes)
            .map(|k| {
                let th = 2.0 * std::f64::consts::PI * k as f64 / probes as f64;
                Point::new(vec![th.cos(), th.sin()]).unwrap()
            })
            .collect()
    } else {
        let mut rng = sample::rng(0xD11A);
        (0..probes)
            .map(|_| {
                let v = sample::sample_in_ball(dim, 1.0, &mut rng);
                let n = v.norm().max(1e-9);
                v.scale(1.0 / n)
            })
            .collect()
    }
}

/// The fixed map suite exercised by the verification runs: identity, a
/// rotation, a scaling, a coordinate stretch (all against a polygonal
/// circle), and a Möbius automorphism against the analytic unit sphere.
/// All sample the unit disc.
pub fn standard_suite(polygon_k: usize) -> Vec<MapUnderTest> {
    let origin = Point::new(vec![0.0, 0.0]).unwrap();
    let circle_gon = BoundarySet::regular_polygon(&origin, 1.0, polygon_k).unwrap();
    let unit_sphere = BoundarySet::sphere(origin.clone(), 1.0).unwrap();
    let disc_sampler = || -> SamplerFn { Box::new(|rng| sample::sample_in_ball(2, 0.98, rng)) };

    let map_chain = |g: &BoundarySet, f: &dyn Fn(&Point) -> Point| -> BoundarySet {
        let BoundarySet::PolygonalChain { vertices, closed } = g else {
            unreachable!()
        };
        BoundarySet::chain(vertices.iter().map(f).collect(), *closed).unwrap()
    };

    let rotation = |p: &Point| {
        let (c, s) = (0.7_f64.cos(), 0.7_f64.sin());
        let (u, v) = (p.coords()[0], p.coords()[1]);
        Point::new(vec![c * u - s * v, s * u + c * v]).unwrap()
    };
    let scaling = |p: &Point| p.scale(2.0);
    let stretch = |p: &Point| Point::new(vec![2.0 * p.coords()[0], p.coords()[1]]).unwrap();
    let sigma = MobiusMap::to_origin(&Point::new(vec![0.4, 0.0]).unwrap()).unwrap();

    vec![
        MapUnderTest::new(
            "identity",
            circle_gon.clone(),
            circle_gon.clone(),
            disc_sampler(),
            Box::new(|p| Some(p.clone())),
        ),
        MapUnderTest::new(
            "rotation",
            circle_gon.clone(),
            map_chain(&circle_gon, &rotation),
            disc_sampler(),
            Box::new(move |p| Some(rotation(p))),
        ),
        MapUnderTest::new(
            "scaling",
            circle_gon.clone(),
            map_chain(&circle_gon, &scaling),
            disc_sampler(),
            Box::new(move |p| Some(scaling(p))),
        ),
        MapUnderTest::new(
            "stretch",
            circle_gon.clone(),
            map_chain(&circle_gon, &stretch),
            disc_sampler(),
            Box::new(move |p| Some(stretch(p))),
        ),
        MapUnderTest::new(
            "mobius",
            unit_sphere.clone(),
            unit_sphere,
            disc_sampler(),
            Box::new(move |p| sigma.apply(p).ok()),
        ),
    ]
}

/// Default probe radii for the suite, decreasing to 1e-4.
pub fn default_radii() -> Vec<f64> {
    vec![1e-1, 1e-2, 1e-3, 1e-4]
}
