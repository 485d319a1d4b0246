use std::io::{self, Write};

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::ExtReal;

pub const SCHEMA: u32 = 1;

pub const CSV_COLUMNS: [&str; 12] = [
    "label",
    "index",
    "x",
    "value",
    "oracle",
    "abs_err",
    "rel_err",
    "tol_kind",
    "tolerance",
    "provenance",
    "pass",
    "seed",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TolKind {
    /// `|value - oracle| ≤ tol·|oracle|`, absolute when the oracle is zero.
    Rel,
    Abs,
    /// `value ≤ oracle + tol`
    Upper,
    /// `value ≥ oracle - tol`
    Lower,
    Exact,
    Info,
}

impl TolKind {
    fn as_str(self) -> &'static str {
        match self {
            TolKind::Rel => "rel",
            TolKind::Abs => "abs",
            TolKind::Upper => "upper",
            TolKind::Lower => "lower",
            TolKind::Exact => "exact",
            TolKind::Info => "info",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub label: String,
    pub index: usize,
    pub x: Option<f64>,
    pub value: ExtReal,
    pub oracle: Option<ExtReal>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub tol_kind: TolKind,
    pub tolerance: Option<f64>,
    pub provenance: &'static str,
    pub pass: bool,
}

fn errors(value: f64, oracle: f64) -> (f64, f64) {
    let abs = (value - oracle).abs();
    let rel = if oracle == 0.0 { abs } else { abs / oracle.abs() };
    (abs, rel)
}

impl Row {
    fn base(label: &str, index: usize, value: ExtReal, provenance: &'static str) -> Self {
        Self {
            label: label.to_string(),
            index,
            x: None,
            value,
            oracle: None,
            abs_err: None,
            rel_err: None,
            tol_kind: TolKind::Info,
            tolerance: None,
            provenance,
            pass: true,
        }
    }

    pub fn at(mut self, x: f64) -> Self {
        self.x = Some(x);
        self
    }

    pub fn info(label: &str, index: usize, value: impl Into<ExtReal>) -> Self {
        Self::base(label, index, value.into(), "computed")
    }

    pub fn rel(label: &str, index: usize, value: f64, oracle: f64, tol: f64, provenance: &'static str) -> Self {
        let (abs, rel) = errors(value, oracle);
        Self {
            oracle: Some(oracle.into()),
            abs_err: Some(abs),
            rel_err: Some(rel),
            tol_kind: TolKind::Rel,
            tolerance: Some(tol),
            pass: rel <= tol,
            ..Self::base(label, index, value.into(), provenance)
        }
    }

    pub fn abs(label: &str, index: usize, value: f64, oracle: f64, tol: f64, provenance: &'static str) -> Self {
        let (abs, rel) = errors(value, oracle);
        Self {
            oracle: Some(oracle.into()),
            abs_err: Some(abs),
            rel_err: Some(rel),
            tol_kind: TolKind::Abs,
            tolerance: Some(tol),
            pass: abs <= tol,
            ..Self::base(label, index, value.into(), provenance)
        }
    }

    pub fn upper(label: &str, index: usize, value: f64, bound: f64, tol: f64, provenance: &'static str) -> Self {
        let (abs, rel) = errors(value, bound);
        Self {
            oracle: Some(bound.into()),
            abs_err: Some(abs),
            rel_err: Some(rel),
            tol_kind: TolKind::Upper,
            tolerance: Some(tol),
            pass: value <= bound + tol,
            ..Self::base(label, index, value.into(), provenance)
        }
    }

    pub fn lower(label: &str, index: usize, value: f64, bound: f64, tol: f64, provenance: &'static str) -> Self {
        let (abs, rel) = errors(value, bound);
        Self {
            oracle: Some(bound.into()),
            abs_err: Some(abs),
            rel_err: Some(rel),
            tol_kind: TolKind::Lower,
            tolerance: Some(tol),
            pass: value >= bound - tol,
            ..Self::base(label, index, value.into(), provenance)
        }
    }

    /// Exact comparison of extended reals, used for counts and for
    /// structurally unbounded distances.
    pub fn exact(label: &str, index: usize, value: ExtReal, oracle: ExtReal, provenance: &'static str) -> Self {
        let (abs_err, rel_err) = match (value, oracle) {
            (ExtReal::Finite(v), ExtReal::Finite(o)) => {
                let (a, r) = errors(v, o);
                (Some(a), Some(r))
            }
            _ => (None, None),
        };
        Self {
            oracle: Some(oracle),
            abs_err,
            rel_err,
            tol_kind: TolKind::Exact,
            tolerance: Some(0.0),
            pass: value == oracle,
            ..Self::base(label, index, value, provenance)
        }
    }

    pub fn flag(label: &str, index: usize, ok: bool, provenance: &'static str) -> Self {
        let v = if ok { 1.0 } else { 0.0 };
        Self::exact(label, index, v.into(), 1.0.into(), provenance)
    }

    pub fn name(&self) -> String {
        match self.x {
            Some(x) => format!("{}[{}] at x = {x}", self.label, self.index),
            None => format!("{}[{}]", self.label, self.index),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub schema: u32,
    pub version: &'static str,
    pub subcommand: &'static str,
    pub seed: u64,
    pub config: serde_json::Value,
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
    pub pass: bool,
}

impl Envelope {
    pub fn new(
        subcommand: &'static str,
        seed: u64,
        config: serde_json::Value,
        rows: Vec<Row>,
        notes: Vec<String>,
    ) -> Self {
        let failures: Vec<String> = rows.iter().filter(|r| !r.pass).map(Row::name).collect();
        Self {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            subcommand,
            seed,
            config,
            pass: failures.is_empty(),
            rows,
            notes,
            failures,
        }
    }
}

/// Pretty JSON with every float written as `{:.16e}` (17 significant
/// digits).
struct FixedFloat<'a>(PrettyFormatter<'a>);

impl Formatter for FixedFloat<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn to_json(envelope: &Envelope) -> io::Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloat(PrettyFormatter::new()));
    envelope.serialize(&mut ser).map_err(io::Error::other)?;
    out.push(b'\n');
    Ok(out)
}

fn float(v: Option<f64>) -> String {
    v.map(|v| format!("{v:.16e}")).unwrap_or_default()
}

fn ext(v: Option<ExtReal>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

pub fn to_csv(envelope: &Envelope) -> io::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS)?;
    let seed = envelope.seed.to_string();
    for r in &envelope.rows {
        w.write_record([
            r.label.clone(),
            r.index.to_string(),
            float(r.x),
            r.value.to_string(),
            ext(r.oracle),
            float(r.abs_err),
            float(r.rel_err),
            r.tol_kind.as_str().to_string(),
            float(r.tolerance),
            r.provenance.to_string(),
            r.pass.to_string(),
            seed.clone(),
        ])?;
    }
    w.into_inner().map_err(|e| io::Error::other(e.to_string()))
}
