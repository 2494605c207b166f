//! Command dispatch behind the `stilde` binary.
//!
//! A [`RunConfig`] names one of the verification commands plus the shared
//! knobs (domain, `c`, seed, sample count, report format). [`run`] executes
//! the command, returning the rendered-ready [`Report`] and any violating
//! witnesses; the binary maps that onto exit codes 0 (all inequalities
//! hold), 2 (violation, witnesses printed as JSON records), or 1 (usage or
//! configuration errors).

use crate::convergence::convergence_run;
use crate::dilatation::{default_radii, estimate_bilipschitz_l, linear_dilatation, standard_suite};
use crate::error::{Error, Result};
use crate::geom::{dist_to_set, euclid_dist, BoundarySet, DomainSpec, Point};
use crate::json::domain_from_json_str;
use crate::metrics::{distance_sandwich, stilde, stilde_metric, MetricParams};
use crate::report::{fmt_f64, Report, ReportFormat};
use crate::verify::{
    ball_inclusion_sweep, ball_preservation_sweep, hausdorff_stability_sweep,
    hyperbolic_bound_sweep, inversion_distance_sweep, log_ratio_sweep, mobius_distortion_sweep,
    reflection_identity_sweep, sandwich_sweep, sharpness_grid, t_envelope_sweep,
    triangle_candidate_sweep, triangle_random_sweep, SweepSummary, Witness,
};
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Eval,
    VerifyAxioms,
    VerifySharpness,
    VerifyBounds,
    Balls,
    Mobius,
    Hausdorff,
    Dilatation,
}

impl Command {
    pub const ALL: &'static [&'static str] = &[
        "eval",
        "verify-axioms",
        "verify-sharpness",
        "verify-bounds",
        "balls",
        "mobius",
        "hausdorff",
        "dilatation",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Eval => "eval",
            Self::VerifyAxioms => "verify-axioms",
            Self::VerifySharpness => "verify-sharpness",
            Self::VerifyBounds => "verify-bounds",
            Self::Balls => "balls",
            Self::Mobius => "mobius",
            Self::Hausdorff => "hausdorff",
            Self::Dilatation => "dilatation",
        }
    }
}

impl std::str::FromStr for Command {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eval" => Ok(Self::Eval),
            "verify-axioms" => Ok(Self::VerifyAxioms),
            "verify-sharpness" => Ok(Self::VerifySharpness),
            "verify-bounds" => Ok(Self::VerifyBounds),
            "balls" => Ok(Self::Balls),
            "mobius" => Ok(Self::Mobius),
            "hausdorff" => Ok(Self::Hausdorff),
            "dilatation" => Ok(Self::Dilatation),
            other => Err(Error::Config(format!(
                "unknown command {other:?} (expected one of {})",
                Self::ALL.join(", ")
            ))),
        }
    }
}

/// Everything one run needs. `samples` scales the sweeps; commands that
/// need explicit points take them via `x`/`y`.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub domain: Option<DomainSpec>,
    pub c: f64,
    pub seed: u64,
    pub samples: usize,
    pub x: Option<Point>,
    pub y: Option<Point>,
    pub format: ReportFormat,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            domain: None,
            c: 2.0,
            seed: 0,
            samples: 1000,
            x: None,
            y: None,
            format: ReportFormat::Csv,
        }
    }
}

/// Report plus the violations it uncovered. The configured format travels
/// along so [`RunOutcome::rendered`] needs no extra argument.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub report: Report,
    pub violations: Vec<Witness>,
    format: ReportFormat,
}

impl RunOutcome {
    fn new(report: Report, violations: Vec<Witness>, format: ReportFormat) -> Self {
        Self {
            report,
            violations,
            format,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }

    pub fn rendered(&self) -> String {
        self.report.render(self.format)
    }
}

/// Read and parse a domain file.
pub fn load_domain(path: &Path) -> Result<DomainSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::DomainFile {
        path: path.display().to_string(),
        source: Box::new(Error::Io(e)),
    })?;
    domain_from_json_str(&text).map_err(|e| Error::DomainFile {
        path: path.display().to_string(),
        source: Box::new(e),
    })
}

/// Parse a comma-separated coordinate list, e.g. `"0.5,0"`.
pub fn parse_point_arg(s: &str) -> Result<Point> {
    let coords: Vec<f64> = s
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<f64>()
                .map_err(|e| Error::Config(format!("bad coordinate {c:?}: {e}")))
        })
        .collect::<Result<_>>()?;
    Point::new(coords)
}

/// Execute the configured command.
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    if config.samples < 1 {
        return Err(Error::Config("samples must be at least 1".into()));
    }
    let params = MetricParams::new(config.c)?;
    match config.command {
        Command::Eval => run_eval(config, &params),
        Command::VerifyAxioms => run_verify_axioms(config, &params),
        Command::VerifySharpness => run_verify_sharpness(config, &params),
        Command::VerifyBounds => run_verify_bounds(config, &params),
        Command::Balls => run_balls(config, &params),
        Command::Mobius => run_mobius(config, &params),
        Command::Hausdorff => run_hausdorff(config, &params),
        Command::Dilatation => run_dilatation(config, &params),
    }
}

fn base_report(config: &RunConfig, columns: &[&str]) -> Report {
    let mut r = Report::new(config.command.name(), columns);
    r.header_entry("seed", config.seed);
    r.header_entry("c", fmt_f64(config.c));
    r.header_entry("samples", config.samples);
    if let Some(d) = &config.domain {
        r.header_entry("domain", describe(&d.boundary));
        if let Some(side) = d.interior {
            r.header_entry("interior", format!("{side:?}").to_lowercase());
        }
    }
    r
}

fn describe(b: &BoundarySet) -> String {
    match b {
        BoundarySet::Sphere { center, radius } => format!(
            "sphere(center=[{}] radius={})",
            join_coords(center),
            fmt_f64(*radius)
        ),
        BoundarySet::HalfSpaceBoundary { normal, offset } => format!(
            "halfspace(normal=[{}] offset={})",
            join_coords(normal),
            fmt_f64(*offset)
        ),
        BoundarySet::FinitePointSet { points } => {
            format!("points(n={} dim={})", points.len(), b.dim())
        }
        BoundarySet::PolygonalChain { vertices, closed } => {
            format!("chain(vertices={} closed={closed})", vertices.len())
        }
    }
}

fn join_coords(p: &Point) -> String {
    p.coords()
        .iter()
        .map(|&c| fmt_f64(c))
        .collect::<Vec<_>>()
        .join(" ")
}

fn require_domain(config: &RunConfig) -> Result<&DomainSpec> {
    config
        .domain
        .as_ref()
        .ok_or_else(|| Error::Config("this command requires --domain <file.json>".into()))
}

fn require_points(config: &RunConfig) -> Result<(&Point, &Point)> {
    match (&config.x, &config.y) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(Error::Config(
            "this command requires --x and --y coordinate lists".into(),
        )),
    }
}

fn push_sweep(report: &mut Report, violations: &mut Vec<Witness>, summary: &SweepSummary) {
    report.push_row(vec![
        summary.kind.into(),
        summary.checked.into(),
        summary.violations.into(),
        summary.worst_slack.into(),
    ]);
    if let Some(w) = &summary.witness {
        violations.push(w.clone());
    }
}

fn run_eval(config: &RunConfig, params: &MetricParams) -> Result<RunOutcome> {
    let domain = require_domain(config)?;
    let (x, y) = require_points(config)?;
    let g = &domain.boundary;
    let mut report = base_report(config, &["quantity", "value"]);
    report.header_entry("x", join_coords(x));
    report.header_entry("y", join_coords(y));
    let sandwich = distance_sandwich(x, y, g, params)?;
    let rows: Vec<(&str, f64)> = vec![
        ("dist", euclid_dist(x, y)?),
        ("d_x", dist_to_set(x, g)?),
        ("d_y", dist_to_set(y, g)?),
        ("stilde", stilde(x, y, g)?),
        ("stilde_metric", stilde_metric(x, y, g, params)?),
        ("sandwich_lower", sandwich.lower),
        ("sandwich_upper", sandwich.upper),
    ];
    for (name, value) in rows {
        report.push_row(vec![name.into(), value.into()]);
    }
    Ok(RunOutcome::new(report, Vec::new(), config.format))
}

const SWEEP_COLUMNS: &[&str] = &["check", "checked", "violations", "worst_slack"];

fn run_verify_axioms(config: &RunConfig, params: &MetricParams) -> Result<RunOutcome> {
    let domain = require_domain(config)?;
    let mut report = base_report(config, SWEEP_COLUMNS);
    let mut violations = Vec::new();
    let random = triangle_random_sweep(domain, params, config.samples, config.seed, 1e-12)?;
    push_sweep(&mut report, &mut violations, &random);
    let candidates = triangle_candidate_sweep(domain, params, 1e-12)?;
    push_sweep(&mut report, &mut violations, &candidates);
    Ok(RunOutcome::new(report, violations, config.format))
}

fn run_verify_sharpness(config: &RunConfig, _params: &MetricParams) -> Result<RunOutcome> {
    let ms = [3.0, 1e2, 1e4, 1e6];
    let t_steps = config.samples.clamp(4, 256);
    let (summary, rows) = sharpness_grid(&ms, t_steps, 1e-12)?;
    let mut report = base_report(config, &["m", "t", "h", "h_closed", "diff"]);
    let sup = rows.iter().map(|r| r.h).fold(0.0, f64::max);
    report.header_entry("t_steps", t_steps);
    report.header_entry("sup_h", fmt_f64(sup));
    for r in &rows {
        report.push_row(vec![
            r.m.into(),
            r.t.into(),
            r.h.into(),
            r.h_closed.into(),
            r.diff.into(),
        ]);
    }
    let mut violations = Vec::new();
    if let Some(w) = &summary.witness {
        violations.push(w.clone());
    }
    Ok(RunOutcome::new(report, violations, config.format))
}

fn run_verify_bounds(config: &RunConfig, params: &MetricParams) -> Result<RunOutcome> {
    let domain = require_domain(config)?;
    let mut report = base_report(config, SWEEP_COLUMNS);
    let mut violations = Vec::new();

    let sandwich = sandwich_sweep(&domain.boundary, params, config.samples, config.seed, 1e-12)?;
    push_sweep(&mut report, &mut violations, &sandwich);

    if domain.interior.is_some() {
        let envelope = t_envelope_sweep(domain, params, config.samples, config.seed + 1, 1e-8)?;
        push_sweep(&mut report, &mut violations, &envelope);
    }

    if let BoundarySet::Sphere { center, radius } = &domain.boundary {
        if center.norm() == 0.0 && *radius == 1.0 {
            let hyp = hyperbolic_bound_sweep(
                params,
                domain.dim(),
                config.samples,
                config.seed + 2,
                1e-12,
            )?;
            push_sweep(&mut report, &mut violations, &hyp);
        }
    }
    Ok(RunOutcome::new(report, violations, config.format))
}

const BALL_CLOUD: usize = 100;

fn run_balls(config: &RunConfig, params: &MetricParams) -> Result<RunOutcome> {
    let domain = require_domain(config)?;
    let (summary, rows) = ball_inclusion_sweep(
        domain,
        params,
        config.samples,
        BALL_CLOUD,
        config.seed,
        1e-9,
    )?;
    let mut report = base_report(
        config,
        &[
            "x",
            "r",
            "dx",
            "l",
            "L",
            "cloud",
            "inner_violations",
            "outer_violations",
        ],
    );
    report.header_entry("cloud", BALL_CLOUD);
    for row in &rows {
        report.push_row(vec![
            join_coords(&row.x).into(),
            row.r.into(),
            row.dx.into(),
            row.inner.into(),
            row.outer.into(),
            row.cloud.into(),
            row.inner_violations.into(),
            row.outer_violations.into(),
        ]);
    }
    let mut violations = Vec::new();
    if let Some(w) = &summary.witness {
        violations.push(w.clone());
    }
    Ok(RunOutcome::new(report, violations, config.format))
}

fn run_mobius(config: &RunConfig, params: &MetricParams) -> Result<RunOutcome> {
    let mut report = base_report(config, SWEEP_COLUMNS);
    let mut violations = Vec::new();
    let n = config.samples;
    let seed = config.seed;
    let distortion = mobius_distortion_sweep(params, 2, n, seed, 0.0, 0.95, 1e-10)?;
    push_sweep(&mut report, &mut violations, &distortion);
    // conditioning of 1/(1 - |a|) near the boundary: relaxed tolerance
    let near = mobius_distortion_sweep(params, 2, n.div_ceil(10), seed + 1, 0.95, 0.99, 1e-6)?;
    push_sweep(&mut report, &mut violations, &near);
    push_sweep(
        &mut report,
        &mut violations,
        &reflection_identity_sweep(n, seed + 2, 1e-12),
    );
    push_sweep(
        &mut report,
        &mut violations,
        &ball_preservation_sweep(n, seed + 3, 1e-10),
    );
    push_sweep(
        &mut report,
        &mut violations,
        &inversion_distance_sweep(n, seed + 4, 1e-12),
    );
    push_sweep(
        &mut report,
        &mut violations,
        &log_ratio_sweep(n, seed + 5, 1e-12),
    );
    Ok(RunOutcome::new(report, violations, config.format))
}

const CONVERGENCE_STEPS: i32 = 25;

fn run_hausdorff(config: &RunConfig, params: &MetricParams) -> Result<RunOutcome> {
    let domain = require_domain(config)?;
    let (x, y) = require_points(config)?;
    let mut violations = Vec::new();

    let stability = hausdorff_stability_sweep(config.samples, config.seed, 1e-12)?;
    if let Some(w) = &stability.witness {
        violations.push(w.clone());
    }

    let schedule: Vec<f64> = (1..=CONVERGENCE_STEPS).map(|n| 2.0_f64.powi(-n)).collect();
    let trace = convergence_run(x, y, &domain.boundary, &schedule, params)?;

    let mut report = base_report(config, &["n", "eps_n", "s_n", "s_limit", "gap"]);
    report.header_entry("x", join_coords(x));
    report.header_entry("y", join_coords(y));
    report.header_entry("stability_checked", stability.checked);
    report.header_entry("stability_violations", stability.violations);
    report.header_entry(
        "rate_constant_K",
        format!(
            "{} (derived Lipschitz bound for the gap check, not part of the limit statement)",
            fmt_f64(trace.rate_constant)
        ),
    );
    for row in &trace.rows {
        report.push_row(vec![
            row.n.into(),
            row.eps.into(),
            row.s_n.into(),
            row.s_limit.into(),
            row.gap.into(),
        ]);
    }
    if !trace.stability_ok {
        violations.push(witness_from_trace(
            "convergence_stability_violation",
            &trace,
        ));
    }
    if !trace.rate_ok {
        violations.push(witness_from_trace("convergence_rate_violation", &trace));
    }
    if let Some(bad) = trace.rows.iter().find(|r| r.eps < 1e-7 && r.gap >= 1e-6) {
        violations.push(
            Witness::new("convergence_gap_violation", 1e-6 - bad.gap)
                .value("n", bad.n as f64)
                .value("eps", bad.eps)
                .value("gap", bad.gap),
        );
    }
    Ok(RunOutcome::new(report, violations, config.format))
}

fn witness_from_trace(kind: &str, trace: &crate::convergence::ConvergenceTrace) -> Witness {
    let worst = trace
        .rows
        .iter()
        .cloned()
        .max_by(|a, b| a.gap.partial_cmp(&b.gap).unwrap())
        .unwrap();
    Witness::new(kind, -worst.gap)
        .value("n", worst.n as f64)
        .value("eps", worst.eps)
        .value("gap", worst.gap)
        .value("rate_constant", trace.rate_constant)
}

const DILATATION_TOL: f64 = 1e-3;

fn run_dilatation(config: &RunConfig, params: &MetricParams) -> Result<RunOutcome> {
    let suite = standard_suite(512);
    let centers = [
        Point::new(vec![0.15, 0.05])?,
        Point::new(vec![-0.3, 0.2])?,
        Point::new(vec![0.4, -0.35])?,
    ];
    let radii = default_radii();
    let mut report = base_report(config, &["map", "x", "r", "Lf", "lf", "ratio"]);
    let mut violations = Vec::new();
    for map in &suite {
        let l = match map.declared_l {
            Some(l) => l,
            None => estimate_bilipschitz_l(map, config.samples.max(1000), params, config.seed)?,
        };
        report.header_entry(&format!("L_{}", map.name), fmt_f64(l));
        for center in &centers {
            let est = linear_dilatation(map, center, &radii, 256)?;
            for row in &est.rows {
                report.push_row(vec![
                    map.name.as_str().into(),
                    join_coords(center).into(),
                    row.r.into(),
                    row.max_stretch.into(),
                    row.min_stretch.into(),
                    row.ratio.into(),
                ]);
            }
            if est.h < 1.0 - 1e-9 {
                violations.push(
                    Witness::new("dilatation_below_one", est.h - 1.0)
                        .point("x", center)
                        .value("h", est.h),
                );
            }
            if !est.within_square_bound(l, DILATATION_TOL) {
                violations.push(
                    Witness::new(
                        "dilatation_exceeds_l_squared",
                        l * l + DILATATION_TOL - est.h,
                    )
                    .point("x", center)
                    .value("h", est.h)
                    .value("l", l)
                    .value("l_squared", l * l),
                );
            }
        }
    }
    Ok(RunOutcome::new(report, violations, config.format))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::point;

    fn line_domain() -> DomainSpec {
        DomainSpec::new(BoundarySet::finite_on_line(&[-4.0, 4.0]).unwrap(), None)
    }

    #[test]
    fn eval_reports_zero_for_coincident_points() {
        let mut config = RunConfig::new(Command::Eval);
        config.domain = Some(line_domain());
        config.x = Some(point(&[1.0]));
        config.y = Some(point(&[1.0]));
        let out = run(&config).unwrap();
        assert!(out.passed());
        let text = out.rendered();
        assert!(text.contains("stilde_metric,0\n"), "{text}");
    }

    #[test]
    fn axioms_pass_at_c2_and_fail_at_c13() {
        let mut config = RunConfig::new(Command::VerifyAxioms);
        config.domain = Some(DomainSpec::new(
            BoundarySet::finite_on_line(&[-3.0, 3.0]).unwrap(),
            None,
        ));
        config.samples = 500;
        let out = run(&config).unwrap();
        assert!(out.passed());

        config.c = 1.3;
        let out = run(&config).unwrap();
        assert_eq!(out.exit_code(), 2);
        let w = &out.violations[0];
        assert_eq!(w.kind, "triangle_inequality_violation");
        assert!((w.values["deficiency"] - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn sharpness_command_reports_sup() {
        let mut config = RunConfig::new(Command::VerifySharpness);
        config.samples = 16;
        let out = run(&config).unwrap();
        assert!(out.passed());
        let sup: f64 = out
            .report
            .header
            .iter()
            .find(|(k, _)| k == "sup_h")
            .map(|(_, v)| v.parse().unwrap())
            .unwrap();
        assert!(sup > 1.99 && sup < 2.0);
    }

    #[test]
    fn missing_domain_is_a_config_error() {
        let config = RunConfig::new(Command::VerifyAxioms);
        assert!(matches!(run(&config), Err(Error::Config(_))));
    }

    #[test]
    fn identical_configs_render_identical_reports() {
        let mut config = RunConfig::new(Command::Mobius);
        config.samples = 200;
        let a = run(&config).unwrap().rendered();
        let b = run(&config).unwrap().rendered();
        assert_eq!(a, b);
        config.format = ReportFormat::Json;
        let c = run(&config).unwrap().rendered();
        let d = run(&config).unwrap().rendered();
        assert_eq!(c, d);
        assert_ne!(a, c);
    }

    #[test]
    fn parse_point_args() {
        assert_eq!(parse_point_arg("3").unwrap(), point(&[3.0]));
        assert_eq!(parse_point_arg("0.5, -1").unwrap(), point(&[0.5, -1.0]));
        assert!(parse_point_arg("a,b").is_err());
    }
}
