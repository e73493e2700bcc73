use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use num_traits::Signed;
use ppt_core::density::{build_sieve_with_budget, decimal6, density_report, DEFAULT_SIEVE_BUDGET};
use ppt_core::f_family::{admissible_f, cf_elements, generate_f_triples};
use ppt_core::g_family::{classify_g, generate_g_family, invert_to_family};
use ppt_core::triple::{is_primitive, to_params};
use ppt_core::{verify, BigInt, DensityFamily, Error, GClass, Triple};

use crate::args::{Format, MRange, Scope};
use crate::output::*;

pub const BUDGET_ENV: &str = "PPT_SIEVE_BUDGET";

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(1, format!("i/o error: {e}"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InadmissibleGap { .. } | Error::InadmissibleLegGap { .. } => 2,
            Error::OutOfRange { .. } => 3,
            Error::SieveBudget { .. } => 5,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

pub type Outcome = Result<(), Failure>;

fn stdout() -> Box<dyn Write> {
    Box::new(BufWriter::new(io::stdout().lock()))
}

fn class_record(gc: &GClass) -> GClassRecord {
    let (stride, offset) = gc.progression().unzip();
    GClassRecord {
        g: gc.g.to_string(),
        class: gc.kind.name(),
        m: gc.m.as_ref().map(ToString::to_string),
        admissible: gc.is_admissible(),
        stride: stride.map(|v| v.to_string()),
        offset: offset.map(|v| v.to_string()),
        reason: gc.rejection_reason(),
    }
}

fn class_comment(rec: &GClassRecord) -> String {
    let mut s = format!("g={} class={}", rec.g, rec.class);
    if let (Some(m), Some(t), Some(q)) = (&rec.m, &rec.stride, &rec.offset) {
        s += &format!(" m={m} a=({t})n+({q})");
    }
    if let Some(r) = &rec.reason {
        s += &format!(" reason={r}");
    }
    s
}

pub fn gen_g(format: Format, g: &BigInt, count: usize) -> Outcome {
    if !g.is_positive() {
        return Err(Failure::new(1, format!("--g must be at least 1, got {g}")));
    }
    let gc = classify_g(g);
    let mut out = Emitter::new(format, stdout());
    let rec = class_record(&gc);
    out.meta(&rec, || class_comment(&rec))?;
    if !gc.is_admissible() {
        out.finish()?;
        return Err(Failure::new(
            2,
            format!(
                "g={g} is inadmissible: {}",
                gc.rejection_reason().unwrap_or_default()
            ),
        ));
    }
    out.table::<GItemRecord>()?;
    for item in generate_g_family(g, count)? {
        out.row(&GItemRecord {
            n: item.n.to_string(),
            k: item.k.to_string(),
            r: item.params.r().to_string(),
            s: item.params.s().to_string(),
            a: item.triple.a().to_string(),
            b: item.triple.b().to_string(),
            c: item.triple.c().to_string(),
        })?;
    }
    Ok(out.finish()?)
}

pub fn gen_f(format: Format, f: &BigInt, range: MRange) -> Outcome {
    let spec = admissible_f(f)?;
    let factorization = spec
        .factorization
        .iter()
        .map(|&(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*");
    let rec = FSpecRecord {
        f: spec.f.to_string(),
        admissible: spec.admissible,
        factorization: if factorization.is_empty() {
            "1".into()
        } else {
            factorization
        },
        reason: (!spec.admissible).then(|| spec.rejection_reason()),
    };
    let mut out = Emitter::new(format, stdout());
    out.meta(&rec, || {
        let mut s = format!(
            "f={} factorization={} admissible={}",
            rec.f, rec.factorization, rec.admissible
        );
        if let Some(r) = &rec.reason {
            s += &format!(" reason={r}");
        }
        s
    })?;
    if !spec.admissible {
        out.finish()?;
        return Err(Failure::new(
            2,
            format!("f={} is inadmissible: {}", spec.f, spec.rejection_reason()),
        ));
    }
    for el in cf_elements(&spec)? {
        let g = FGeneratorRecord {
            branch: el.label(),
            u: el.u.to_string(),
            norm: el.u.norm().to_string(),
        };
        out.meta(&g, || {
            format!("generator branch={} u={} norm={}", g.branch, g.u, g.norm)
        })?;
    }
    out.table::<FTripleRecord>()?;
    for ft in generate_f_triples(&spec, range.lo, range.hi)? {
        out.row(&FTripleRecord {
            a: ft.triple.a().to_string(),
            b: ft.triple.b().to_string(),
            c: ft.triple.c().to_string(),
            m: ft.m,
            sign: ft.sign,
            branch: ft.cf_choice.label(),
            hits: ft.hits,
        })?;
    }
    Ok(out.finish()?)
}

fn check_row(order: &'static str, a: &BigInt, b: &BigInt, c: &BigInt) -> CheckRecord {
    let mut rec = CheckRecord {
        order,
        a: a.to_string(),
        b: b.to_string(),
        c: c.to_string(),
        pythagorean: false,
        primitive: false,
        r: None,
        s: None,
        g: (c - b).to_string(),
        class: None,
        m: None,
        n: None,
        f: (b - a).abs().to_string(),
    };
    let Ok(t) = Triple::new(a.clone(), b.clone(), c.clone()) else {
        return rec;
    };
    rec.pythagorean = true;
    rec.primitive = is_primitive(&t);
    if !rec.primitive {
        return rec;
    }
    if let Ok(p) = to_params(&t) {
        rec.r = Some(p.r().to_string());
        rec.s = Some(p.s().to_string());
    }
    if let Ok((gc, n)) = invert_to_family(&t) {
        rec.class = Some(gc.kind.name());
        rec.m = gc.m.as_ref().map(ToString::to_string);
        rec.n = Some(n.to_string());
    }
    rec
}

pub fn check(format: Format, a: &BigInt, b: &BigInt, c: &BigInt) -> Outcome {
    if [a, b, c].iter().any(|v| !v.is_positive()) {
        return Err(Failure::new(
            1,
            format!("entries must be positive integers, got ({a}, {b}, {c})"),
        ));
    }
    let given = check_row("given", a, b, c);
    let swapped = check_row("swapped", b, a, c);
    let verdict = match (given.pythagorean, given.primitive) {
        (false, _) => "not Pythagorean",
        (true, false) => "not primitive",
        (true, true) => "PPT",
    };
    let ppt = given.primitive;
    let mut out = Emitter::new(format, stdout());
    if format == Format::Csv {
        out.meta(&given, || format!("({a}, {b}, {c}): {verdict}"))?;
    }
    out.row(&given)?;
    out.row(&swapped)?;
    out.finish()?;
    if ppt {
        Ok(())
    } else {
        Err(Failure::new(4, format!("({a}, {b}, {c}) is {verdict}")))
    }
}

fn sieve_budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| Failure::new(1, format!("{BUDGET_ENV}={v:?}: {e}"))),
        Err(_) => Ok(DEFAULT_SIEVE_BUDGET),
    }
}

pub fn density(
    format: Format,
    family: DensityFamily,
    grid: &[u64],
    out_path: Option<&Path>,
    budget: Option<u64>,
) -> Outcome {
    if let Some(&b) = grid.iter().find(|&&b| b < 2) {
        return Err(Failure::new(
            1,
            format!("grid bounds must be at least 2, got {b}"),
        ));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::new(1, "grid must be strictly ascending"));
    }
    let budget = sieve_budget(budget)?;
    let max = *grid.last().expect("clap requires a grid");
    let sieve = build_sieve_with_budget(max, budget)?;
    let rows = density_report(family, grid, &sieve)?;
    let sink: Box<dyn Write> = match out_path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::new(1, format!("{}: {e}", p.display())))?,
        )),
        None => stdout(),
    };
    let mut out = Emitter::new(format, sink);
    out.table::<DensityRecord>()?;
    for row in rows {
        out.row(&DensityRecord {
            bound: row.bound,
            family_count: row.family_count,
            pool_count: row.pool_count,
            ratio: decimal6(&row.ratio),
            predicted: decimal6(&row.predicted),
        })?;
    }
    Ok(out.finish()?)
}

pub struct VerifyBounds<'a> {
    pub c_max: u64,
    pub m_max: Option<i64>,
    pub y_max: u64,
    pub b_max: u64,
    pub fs: &'a [u64],
}

pub fn verify(format: Format, scope: Scope, bounds: VerifyBounds<'_>) -> Outcome {
    let report = match scope {
        Scope::GCoverage => verify::g_coverage(bounds.c_max),
        Scope::FCoverage => {
            verify::f_coverage(bounds.fs, bounds.c_max, bounds.m_max.unwrap_or(12))?
        }
        Scope::Nonexistence => verify::nonexistence(bounds.c_max)?,
        Scope::Pell => verify::pell(bounds.m_max.unwrap_or(50), bounds.y_max),
        Scope::DensityCross => verify::density_cross(bounds.b_max)?,
    };
    let mut out = Emitter::new(format, stdout());
    out.row(&VerifyRecord {
        scope: report.scope,
        checked: report.checked,
        passed: report.checked - report.failed,
        failed: report.failed,
        first_counterexample: report.first_counterexample.clone(),
    })?;
    out.finish()?;
    if report.passed() {
        Ok(())
    } else {
        let example = report.first_counterexample.clone().unwrap_or_default();
        Err(Failure::new(
            6,
            format!("{report}; first counterexample: {example}"),
        ))
    }
}
