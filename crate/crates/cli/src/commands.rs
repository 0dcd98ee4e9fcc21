use std::cmp::Ordering;
use std::fmt::Write as _;

use abc_spectra::abc::eigenbasis_of;
use abc_spectra::circulant::symmetric_circulant_eigenvalues;
use abc_spectra::oracle::count_distinct;
use abc_spectra::special_points::{
    extreme_extrema_for, limit_transition_point, numeric_extreme_extrema, special_points_for,
    transition_point, DegeneracySource, ExtremeExtremum, Point, SpecialPoints,
};
use abc_spectra::verification::{random_cases, run_suites};
use abc_spectra::{
    abc_spectrum, build_wheel, multiplicity_profile, small_n_spectrum, AbcParams, AbcSpectrum,
    SmallOrderVariant,
};
use anyhow::Context;
use serde::Serialize;

use crate::args::*;
use crate::{usage, Rendered, SCHEMA_VERSION};

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn check_format(format: Format, allowed: &[Format], command: &str) -> anyhow::Result<()> {
    if allowed.contains(&format) {
        return Ok(());
    }
    let names: Vec<String> = allowed
        .iter()
        .map(|f| format!("{f:?}").to_lowercase())
        .collect();
    usage(format!("{command} supports --format {}", names.join(", ")))
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn variant_of(v: Option<Variant>) -> SmallOrderVariant {
    v.map(Into::into).unwrap_or_default()
}

fn params(m: &MatrixArgs) -> anyhow::Result<AbcParams> {
    match (m.n, m.variant) {
        (0, _) => usage("--n must be at least 1"),
        (1, None) => usage(
            "n = 1 lies outside the traceless family (the doubled 2x2 matrix has trace 2a); \
             choose --variant tilde or --variant doubled",
        ),
        _ => Ok(AbcParams::with_variant(
            m.n,
            m.a,
            m.b,
            m.c,
            variant_of(m.variant),
        )?),
    }
}

fn spectrum_of(p: &AbcParams) -> anyhow::Result<AbcSpectrum> {
    Ok(if p.n == 1 {
        small_n_spectrum(p)?
    } else {
        abc_spectrum(p)?
    })
}

#[derive(Serialize)]
struct Labeled {
    label: String,
    value: f64,
}

#[derive(Serialize)]
struct Group {
    value: f64,
    multiplicity: usize,
    members: Vec<String>,
}

#[derive(Serialize)]
struct Vector {
    label: String,
    re: Vec<f64>,
    im: Vec<f64>,
}

#[derive(Serialize)]
struct SpectrumReport<'a> {
    schema_version: u32,
    command: &'static str,
    params: &'a AbcParams,
    values: Vec<f64>,
    labeled: Vec<Labeled>,
    groups: Vec<Group>,
    cardinality: usize,
    multiplicities: Vec<usize>,
    crossings_hit: Vec<usize>,
    coincident_crossings: bool,
    discriminant: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenvectors: Option<Vec<Vector>>,
}

#[derive(Serialize)]
struct DiagonalReport<'a> {
    schema_version: u32,
    command: &'static str,
    params: &'a AbcParams,
    decomposition: &'static str,
    hub: f64,
    tire: Vec<f64>,
    values: Vec<f64>,
    cardinality: usize,
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> anyhow::Result<Rendered> {
    check_format(args.format, &[Format::Json, Format::Text], "spectrum")?;
    let p = params(&args.matrix)?;
    if p.b == 0.0 {
        if !args.allow_diagonal {
            return usage("b = 0 decouples the hub from the tire; pass --allow-diagonal to get the block spectrum");
        }
        return diagonal_spectrum(&p, args.format);
    }
    let spectrum = spectrum_of(&p)?;
    let profile = multiplicity_profile(&p)?;
    let labeled = spectrum.labeled_values();
    let eigenvectors = args.eigenvectors.then(|| {
        let basis = eigenbasis_of(&spectrum);
        labeled
            .iter()
            .map(|&(label, _)| {
                let v = basis.vector(label);
                Vector {
                    label: label.to_string(),
                    re: v.iter().map(|z| z.re).collect(),
                    im: v.iter().map(|z| z.im).collect(),
                }
            })
            .collect::<Vec<_>>()
    });
    let report = SpectrumReport {
        schema_version: SCHEMA_VERSION,
        command: "spectrum",
        params: &p,
        values: spectrum.sorted_values(),
        labeled: labeled
            .iter()
            .map(|&(l, value)| Labeled {
                label: l.to_string(),
                value,
            })
            .collect(),
        groups: profile
            .groups
            .iter()
            .map(|g| Group {
                value: g.value,
                multiplicity: g.multiplicity,
                members: g.members.iter().map(ToString::to_string).collect(),
            })
            .collect(),
        cardinality: profile.cardinality(),
        multiplicities: profile.multiplicities(),
        crossings_hit: profile.crossings_hit.clone(),
        coincident_crossings: profile.coincident_crossings,
        discriminant: spectrum.discriminant,
        eigenvectors,
    };
    if args.format == Format::Json {
        return Ok(Rendered::ok(json(&report)?));
    }

    let mut s = String::new();
    writeln!(s, "m_{}(a = {}, b = {}, c = {})", p.n, p.a, p.b, p.c)?;
    for l in &report.labeled {
        writeln!(s, "  {:<14} {:>24}", l.label, num(l.value))?;
    }
    writeln!(s, "distinct values: {}", report.cardinality)?;
    for g in &report.groups {
        writeln!(
            s,
            "  {:>24}  x{}  {}",
            num(g.value),
            g.multiplicity,
            g.members.join(" ")
        )?;
    }
    if !report.crossings_hit.is_empty() {
        writeln!(s, "crossings hit: {:?}", report.crossings_hit)?;
    }
    if report.coincident_crossings {
        writeln!(s, "warning: c matches more than one crossing abscissa")?;
    }
    if let Some(vs) = &report.eigenvectors {
        writeln!(s, "eigenvectors:")?;
        for v in vs {
            let parts: Vec<String> =
                v.re.iter()
                    .zip(&v.im)
                    .map(|(re, im)| format!("{re:+.6}{im:+.6}i"))
                    .collect();
            writeln!(s, "  {:<14} [{}]", v.label, parts.join(", "))?;
        }
    }
    Ok(Rendered::ok(s))
}

fn diagonal_spectrum(p: &AbcParams, format: Format) -> anyhow::Result<Rendered> {
    let hub = p.headpoint();
    let mut tire =
        symmetric_circulant_eigenvalues(&p.tire_block()).context("tire block is symmetric")?;
    tire.sort_by(f64::total_cmp);
    let mut values: Vec<f64> = std::iter::once(hub).chain(tire.iter().copied()).collect();
    values.sort_by(f64::total_cmp);
    let scale = values.iter().map(|x| x.abs()).fold(0.0, f64::max);
    let report = DiagonalReport {
        schema_version: SCHEMA_VERSION,
        command: "spectrum",
        params: p,
        decomposition: "block_diagonal",
        hub,
        cardinality: count_distinct(&values, 1e-12 * (1.0 + scale)),
        tire,
        values,
    };
    if format == Format::Json {
        return Ok(Rendered::ok(json(&report)?));
    }
    let mut s = String::new();
    writeln!(
        s,
        "m_{}(a = {}, b = 0, c = {}) is block diagonal",
        p.n, p.a, p.c
    )?;
    writeln!(s, "  hub  {:>24}", num(hub))?;
    for x in &report.tire {
        writeln!(s, "  tire {:>24}", num(*x))?;
    }
    writeln!(s, "distinct values: {}", report.cardinality)?;
    Ok(Rendered::ok(s))
}

pub fn cmd_eigenlines(args: &EigenlinesArgs) -> anyhow::Result<Rendered> {
    check_format(args.format, &[Format::Csv], "eigenlines")?;
    if args.steps < 2 {
        return usage("--steps must be at least 2");
    }
    if args.c_min.partial_cmp(&args.c_max) != Some(Ordering::Less) {
        return usage("--c-min must be smaller than --c-max");
    }
    let base = params(&MatrixArgs {
        n: args.n,
        a: args.a,
        b: args.b,
        c: args.c_min,
        variant: args.variant,
    })?;
    let n = base.n;

    let mut s = String::from("c,lambda_minus,lambda_plus");
    for k in 1..n {
        write!(s, ",lambda_{k}")?;
    }
    s.push_str(",lambda_sep,lambda_neg_nc\n");
    let last = (args.steps - 1) as f64;
    for i in 0..args.steps {
        let c = if i + 1 == args.steps {
            args.c_max
        } else {
            args.c_min + (args.c_max - args.c_min) * (i as f64 / last)
        };
        let p = AbcParams { c, ..base };
        let sp = spectrum_of(&p)?;
        let mut row = vec![c, sp.lambda_minus, sp.lambda_plus];
        row.extend((1..n).map(|k| sp.tire(k)));
        row.extend([p.separation_level(), p.headpoint()]);
        let cells: Vec<String> = row.into_iter().map(num).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    Ok(Rendered::ok(s))
}

pub fn cmd_transition_curve(args: &TransitionCurveArgs) -> anyhow::Result<Rendered> {
    check_format(args.format, &[Format::Csv], "transition-curve")?;
    if args.steps < 2 {
        return usage("--steps must be at least 2");
    }
    if args.a_min.partial_cmp(&args.a_max) != Some(Ordering::Less) {
        return usage("--a-min must be smaller than --a-max");
    }
    if args.n.is_empty() || args.n.iter().any(|&n| n < 2) {
        return usage("every --n must be at least 2");
    }
    let variant = variant_of(args.variant);
    let markers = !args.marker_a.is_empty();
    let last = (args.steps - 1) as f64;
    let grid: Vec<f64> = (0..args.steps)
        .map(|i| {
            if i + 1 == args.steps {
                args.a_max
            } else {
                args.a_min + (args.a_max - args.a_min) * (i as f64 / last)
            }
        })
        .collect();

    let mut s = String::from("a,n,c_trans,lambda_trans");
    s.push_str(if markers { ",marker\n" } else { "\n" });
    let row = |s: &mut String, a: f64, n: &str, t: Point, marker: bool| {
        let _ = write!(s, "{},{n},{},{}", num(a), num(t.c), num(t.lambda));
        if markers {
            s.push_str(if marker { ",1" } else { ",0" });
        }
        s.push('\n');
    };
    let finite = |n: usize, a: f64| {
        let weight = AbcParams {
            n,
            a,
            b: 1.0,
            c: 0.0,
            variant,
        }
        .effective_tire_weight();
        transition_point(n, weight)
    };

    for &n in &args.n {
        for &a in &grid {
            if a == 0.0 {
                eprintln!("warning: skipping a = 0 for n = {n}: no transition point");
                continue;
            }
            row(&mut s, a, &n.to_string(), finite(n, a)?, false);
        }
    }
    for &a in &grid {
        if a == 0.0 {
            eprintln!("warning: skipping a = 0 for n = inf: no transition point");
            continue;
        }
        row(&mut s, a, "inf", limit_transition_point(a)?, false);
    }
    for &a in &args.marker_a {
        if a == 0.0 {
            eprintln!("warning: skipping marker a = 0: no transition point");
            continue;
        }
        for &n in &args.n {
            row(&mut s, a, &n.to_string(), finite(n, a)?, true);
        }
        row(&mut s, a, "inf", limit_transition_point(a)?, true);
    }
    Ok(Rendered::ok(s))
}

#[derive(Serialize)]
struct ExtremesReport {
    schema_version: u32,
    command: &'static str,
    n: usize,
    a: f64,
    b: f64,
    variant: SmallOrderVariant,
    closed_form: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    notice: Option<String>,
    points: SpecialPoints,
    min_of_max: ExtremeExtremum,
    max_of_min: ExtremeExtremum,
}

fn scaled(p: Point, s: f64) -> Point {
    Point::new(p.c * s, p.lambda * s)
}

pub fn cmd_extremes(args: &ExtremesArgs) -> anyhow::Result<Rendered> {
    check_format(args.format, &[Format::Json, Format::Text], "extremes")?;
    if args.n < 2 {
        return usage("extremes needs --n of at least 2");
    }
    if args.b == 0.0 {
        return usage("--b must be nonzero");
    }
    let variant = variant_of(args.variant);
    // sigma(m(a, b, c)) = |b| sigma(m(a/|b|, 1, c/|b|)): work at unit border and scale back.
    let s = args.b.abs();
    let a = args.a / s;
    let mut points = special_points_for(args.n, a, variant)?;
    let closed_form = args.n.is_multiple_of(2);
    let (mut mim, mut mom, notice) = if closed_form {
        let (x, y) = extreme_extrema_for(args.n, a, variant)?;
        (x, y, None)
    } else {
        let (x, y) =
            numeric_extreme_extrema(&AbcParams::with_variant(args.n, a, 1.0, 0.0, variant)?)?;
        (
            x,
            y,
            Some(format!(
                "n = {} is odd: extrema found by numeric search, not closed form",
                args.n
            )),
        )
    };
    if s != 1.0 {
        points.uppermost = scaled(points.uppermost, s);
        points.lowermost = scaled(points.lowermost, s);
        points.transition = points.transition.map(|t| scaled(t, s));
        points.limit_transition = points.limit_transition.map(|t| scaled(t, s));
        mim.location = scaled(mim.location, s);
        mom.location = scaled(mom.location, s);
    }
    points.a = args.a;
    let report = ExtremesReport {
        schema_version: SCHEMA_VERSION,
        command: "extremes",
        n: args.n,
        a: args.a,
        b: args.b,
        variant,
        closed_form,
        notice,
        points,
        min_of_max: mim,
        max_of_min: mom,
    };
    if args.format == Format::Json {
        return Ok(Rendered::ok(json(&report)?));
    }

    let mut out = String::new();
    if let Some(notice) = &report.notice {
        writeln!(out, "notice: {notice}")?;
    }
    let pt = |p: Option<Point>| match p {
        Some(p) => format!("c = {}, lambda = {}", num(p.c), num(p.lambda)),
        None => "none (a = 0)".to_string(),
    };
    let pts = &report.points;
    writeln!(out, "n = {}, a = {}, b = {}", args.n, args.a, args.b)?;
    writeln!(out, "regime:            {:?}", pts.regime)?;
    writeln!(out, "uppermost U:       {}", pt(Some(pts.uppermost)))?;
    writeln!(out, "lowermost L:       {}", pt(Some(pts.lowermost)))?;
    writeln!(out, "transition T:      {}", pt(pts.transition))?;
    writeln!(out, "limit transition:  {}", pt(pts.limit_transition))?;
    for (name, e) in [
        ("min of max:", &report.min_of_max),
        ("max of min:", &report.max_of_min),
    ] {
        let config = e
            .configuration
            .map_or("unclassified".to_string(), |c| format!("{c:?}"));
        writeln!(
            out,
            "{name:<18} {}, degeneracy {} ({config}, {:?}){}",
            pt(Some(e.location)),
            e.degeneracy,
            e.degeneracy_source,
            match (e.at_transition, e.degeneracy_source) {
                (false, _) => "",
                (true, DegeneracySource::Numeric) => ", at a branch crossing",
                (true, _) => ", at T",
            }
        )?;
    }
    Ok(Rendered::ok(out))
}

#[derive(Serialize)]
struct VerifyReport {
    schema_version: u32,
    command: &'static str,
    seed: u64,
    ok: bool,
    #[serde(flatten)]
    report: abc_spectra::verification::VerificationReport,
}

pub fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<Rendered> {
    check_format(args.format, &[Format::Json, Format::Text], "verify")?;
    if args.tol.is_nan() || args.tol <= 0.0 {
        return usage("--tol must be positive");
    }
    let cases = random_cases(args.seed, args.trials as usize);
    let report = match run_suites(&cases, args.tol) {
        Ok(r) => r,
        Err(e) => {
            let culprit = cases
                .iter()
                .find(|p| run_suites(std::slice::from_ref(*p), args.tol).is_err());
            return Err(e).with_context(|| format!("verification aborted at {culprit:?}"));
        }
    };
    let ok = report.ok();
    if args.format == Format::Json {
        let r = VerifyReport {
            schema_version: SCHEMA_VERSION,
            command: "verify",
            seed: args.seed,
            ok,
            report,
        };
        return Ok(Rendered {
            text: json(&r)?,
            success: ok,
        });
    }
    let mut s = String::new();
    writeln!(
        s,
        "trials {}, seed {}, oracle tolerance {:e}",
        report.trials, args.seed, report.oracle_tol
    )?;
    writeln!(
        s,
        "{:<20} {:>6} {:>6}  {:>12}  worst case",
        "suite", "passed", "failed", "worst dev"
    )?;
    for r in &report.suites {
        let case = r.worst_case.map_or("-".to_string(), |p| {
            format!("n={} a={} b={} c={}", p.n, p.a, p.b, p.c)
        });
        let name = serde_json::to_value(r.suite)?
            .as_str()
            .unwrap_or_default()
            .to_string();
        writeln!(
            s,
            "{name:<20} {:>6} {:>6}  {:>12.3e}  {case}",
            r.passed, r.failed, r.worst_deviation
        )?;
    }
    writeln!(s, "result: {}", if ok { "PASS" } else { "FAIL" })?;
    Ok(Rendered {
        text: s,
        success: ok,
    })
}

#[derive(Serialize)]
struct Vertex {
    id: usize,
    weight: f64,
}

#[derive(Serialize)]
struct GraphReport {
    schema_version: u32,
    kind: abc_spectra::WheelKind,
    vertices: Vec<Vertex>,
    edges: Vec<abc_spectra::wheelgraph::Edge>,
}

pub fn cmd_graph(args: &GraphArgs) -> anyhow::Result<Rendered> {
    check_format(args.format, &[Format::Dot, Format::Json], "graph")?;
    let p = params(&args.matrix)?;
    if p.n < 2 {
        return usage("graph needs --n of at least 2");
    }
    let w = build_wheel(&p)?;
    if args.format == Format::Json {
        let report = GraphReport {
            schema_version: SCHEMA_VERSION,
            kind: w.kind,
            vertices: w
                .vertex_weights
                .iter()
                .enumerate()
                .map(|(id, &weight)| Vertex { id, weight })
                .collect(),
            edges: w.edges.clone(),
        };
        return Ok(Rendered::ok(json(&report)?));
    }
    let kind = serde_json::to_value(w.kind)?
        .as_str()
        .unwrap_or_default()
        .to_string();
    let mut s = format!("graph {kind} {{\n");
    for (id, weight) in w.vertex_weights.iter().enumerate() {
        writeln!(s, "  {id} [label=\"{id}\\nw={weight}\"];")?;
    }
    for e in &w.edges {
        writeln!(s, "  {} -- {} [label=\"{}\"];", e.u, e.v, e.weight)?;
    }
    s.push_str("}\n");
    Ok(Rendered::ok(s))
}
