use std::io::{self, Write};

use serde::Serialize;

use crate::args::Format;

/// A record type with a stable schema tag and column order.
pub trait Record: Serialize {
    const SCHEMA: &'static str;
    const HEADER: &'static [&'static str];
}

#[derive(Serialize)]
struct Tagged<'a, R> {
    schema: &'static str,
    #[serde(flatten)]
    record: &'a R,
}

/// CSV puts metadata in `#` lines ahead of a single table; JSON Lines tags every object.
pub struct Emitter {
    format: Format,
    sink: Box<dyn Write>,
    header_done: bool,
}

fn csv_line(
    write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
) -> io::Result<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    write(&mut w).map_err(io::Error::other)?;
    w.into_inner().map_err(|e| io::Error::other(e.to_string()))
}

impl Emitter {
    pub fn new(format: Format, sink: Box<dyn Write>) -> Self {
        Self {
            format,
            sink,
            header_done: false,
        }
    }

    pub fn meta<R: Record>(
        &mut self,
        record: &R,
        comment: impl FnOnce() -> String,
    ) -> io::Result<()> {
        match self.format {
            Format::Csv => writeln!(self.sink, "# {}", comment()),
            Format::Json => self.json(record),
        }
    }

    /// Writes the CSV header even when no rows follow.
    pub fn table<R: Record>(&mut self) -> io::Result<()> {
        if self.format == Format::Csv && !self.header_done {
            self.sink
                .write_all(&csv_line(|w| w.write_record(R::HEADER))?)?;
            self.header_done = true;
        }
        Ok(())
    }

    pub fn row<R: Record>(&mut self, record: &R) -> io::Result<()> {
        match self.format {
            Format::Csv => {
                self.table::<R>()?;
                self.sink.write_all(&csv_line(|w| w.serialize(record))?)
            }
            Format::Json => self.json(record),
        }
    }

    fn json<R: Record>(&mut self, record: &R) -> io::Result<()> {
        let tagged = Tagged {
            schema: R::SCHEMA,
            record,
        };
        serde_json::to_writer(&mut self.sink, &tagged)?;
        self.sink.write_all(b"\n")
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.sink.flush()
    }
}

#[derive(Serialize)]
pub struct GClassRecord {
    pub g: String,
    pub class: &'static str,
    pub m: Option<String>,
    pub admissible: bool,
    pub stride: Option<String>,
    pub offset: Option<String>,
    pub reason: Option<String>,
}

impl Record for GClassRecord {
    const SCHEMA: &'static str = "ppt.g-class/1";
    const HEADER: &'static [&'static str] = &[
        "g",
        "class",
        "m",
        "admissible",
        "stride",
        "offset",
        "reason",
    ];
}

#[derive(Serialize)]
pub struct GItemRecord {
    pub n: String,
    pub k: String,
    pub r: String,
    pub s: String,
    pub a: String,
    pub b: String,
    pub c: String,
}

impl Record for GItemRecord {
    const SCHEMA: &'static str = "ppt.g-item/1";
    const HEADER: &'static [&'static str] = &["n", "k", "r", "s", "a", "b", "c"];
}

#[derive(Serialize)]
pub struct FSpecRecord {
    pub f: String,
    pub admissible: bool,
    pub factorization: String,
    pub reason: Option<String>,
}

impl Record for FSpecRecord {
    const SCHEMA: &'static str = "ppt.f-spec/1";
    const HEADER: &'static [&'static str] = &["f", "admissible", "factorization", "reason"];
}

#[derive(Serialize)]
pub struct FGeneratorRecord {
    pub branch: String,
    pub u: String,
    pub norm: String,
}

impl Record for FGeneratorRecord {
    const SCHEMA: &'static str = "ppt.f-generator/1";
    const HEADER: &'static [&'static str] = &["branch", "u", "norm"];
}

#[derive(Serialize)]
pub struct FTripleRecord {
    pub a: String,
    pub b: String,
    pub c: String,
    pub m: i64,
    pub sign: i8,
    pub branch: String,
    pub hits: usize,
}

impl Record for FTripleRecord {
    const SCHEMA: &'static str = "ppt.f-triple/1";
    const HEADER: &'static [&'static str] = &["a", "b", "c", "m", "sign", "branch", "hits"];
}

#[derive(Serialize)]
pub struct CheckRecord {
    pub order: &'static str,
    pub a: String,
    pub b: String,
    pub c: String,
    pub pythagorean: bool,
    pub primitive: bool,
    pub r: Option<String>,
    pub s: Option<String>,
    pub g: String,
    pub class: Option<&'static str>,
    pub m: Option<String>,
    pub n: Option<String>,
    pub f: String,
}

impl Record for CheckRecord {
    const SCHEMA: &'static str = "ppt.check/1";
    const HEADER: &'static [&'static str] = &[
        "order",
        "a",
        "b",
        "c",
        "pythagorean",
        "primitive",
        "r",
        "s",
        "g",
        "class",
        "m",
        "n",
        "f",
    ];
}

#[derive(Serialize)]
pub struct DensityRecord {
    #[serde(rename = "B")]
    pub bound: u64,
    pub family_count: u64,
    pub pool_count: u64,
    pub ratio: String,
    pub predicted: String,
}

impl Record for DensityRecord {
    const SCHEMA: &'static str = "ppt.density-row/1";
    const HEADER: &'static [&'static str] =
        &["B", "family_count", "pool_count", "ratio", "predicted"];
}

#[derive(Serialize)]
pub struct VerifyRecord {
    pub scope: &'static str,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub first_counterexample: Option<String>,
}

impl Record for VerifyRecord {
    const SCHEMA: &'static str = "ppt.verify/1";
    const HEADER: &'static [&'static str] = &[
        "scope",
        "checked",
        "passed",
        "failed",
        "first_counterexample",
    ];
}
