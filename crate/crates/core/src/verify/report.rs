use std::collections::BTreeMap;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use super::suite::{FieldOutcome, RangeSpec};
use super::{Theorem, VerifyRecord};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremTally {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// `total = passed + failed` counts evaluated records; gate rejections are
/// counted separately as `skipped`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub by_theorem: BTreeMap<String, TheoremTally>,
    pub skipped_by_gate: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    /// The only wall-clock field; everything else is reproducible.
    pub started_at: String,
    pub config: RangeSpec,
    pub records: Vec<VerifyRecord>,
    pub summary: Summary,
}

pub const CSV_HEADER: [&str; 9] = ["theorem", "p", "r", "K", "params", "lhs", "rhs", "pass", "elapsed_ms"];

/// Parameters as `key=value` pairs joined by `;`, in key order.
pub fn format_params(params: &BTreeMap<String, String>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

impl Report {
    pub(crate) fn new(config: RangeSpec, started_at: String, theorems: &[Theorem]) -> Self {
        let mut summary = Summary::default();
        for th in theorems {
            summary.by_theorem.insert(th.id().to_string(), TheoremTally::default());
        }
        Report { suite: config.suite.name().to_string(), started_at, config, records: Vec::new(), summary }
    }

    pub(crate) fn absorb(&mut self, o: FieldOutcome) {
        let s = &mut self.summary;
        for rec in &o.records {
            let t = s.by_theorem.entry(rec.theorem.id().to_string()).or_default();
            t.total += 1;
            s.total += 1;
            if rec.pass {
                t.passed += 1;
                s.passed += 1;
            } else {
                t.failed += 1;
                s.failed += 1;
            }
        }
        for ((th, gate), n) in o.skipped {
            s.by_theorem.entry(th.id().to_string()).or_default().skipped += n;
            *s.skipped_by_gate.entry(gate.name().to_string()).or_default() += n;
            s.skipped += n;
        }
        self.records.extend(o.records);
    }

    /// 0 when every evaluated record passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.failed > 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn write(&self, format: Format, w: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                w.write_all(self.to_json().as_bytes())?;
                writeln!(w)
            }
            Format::Csv => self.write_csv(w),
            Format::Table => self.write_table(w),
        }
    }

    pub fn write_csv(&self, w: &mut dyn Write) -> io::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(CSV_HEADER)?;
        for r in &self.records {
            out.write_record([
                r.theorem.id().to_string(),
                r.p.to_string(),
                r.r.to_string(),
                r.k.to_string(),
                format_params(&r.params),
                r.lhs.clone(),
                r.rhs.clone(),
                r.pass.to_string(),
                r.elapsed_ms.to_string(),
            ])?;
        }
        out.flush()
    }

    /// Per-theorem counts, then up to 20 failing records per theorem.
    pub fn write_table(&self, w: &mut dyn Write) -> io::Result<()> {
        let s = &self.summary;
        writeln!(w, "{:<18} {:>9} {:>9} {:>9} {:>9}", "theorem", "records", "passed", "failed", "skipped")?;
        for (id, t) in &s.by_theorem {
            writeln!(w, "{:<18} {:>9} {:>9} {:>9} {:>9}", id, t.total, t.passed, t.failed, t.skipped)?;
        }
        let mut shown: BTreeMap<Theorem, usize> = BTreeMap::new();
        let mut header = false;
        for r in self.records.iter().filter(|r| !r.pass) {
            let n = shown.entry(r.theorem).or_default();
            *n += 1;
            if *n > 20 {
                continue;
            }
            if !header {
                writeln!(w, "\nfailures:")?;
                header = true;
            }
            writeln!(
                w,
                "  {} q={}^{} K={} {}: lhs={} rhs={}",
                r.theorem,
                r.p,
                r.r,
                r.k,
                format_params(&r.params),
                r.lhs,
                r.rhs
            )?;
        }
        for (th, n) in shown.iter().filter(|(_, n)| **n > 20) {
            writeln!(w, "  {th}: {} more failures not shown", n - 20)?;
        }
        if !s.skipped_by_gate.is_empty() {
            let gates: Vec<String> = s.skipped_by_gate.iter().map(|(g, n)| format!("{g}={n}")).collect();
            writeln!(w, "\nskipped by gate: {}", gates.join(" "))?;
        }
        writeln!(w, "\ntotal {} passed {} failed {} skipped {}", s.total, s.passed, s.failed, s.skipped)
    }
}
