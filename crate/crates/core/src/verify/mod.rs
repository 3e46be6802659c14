//! Verification suites that check the closed forms, the classification
//! theorem and the lemmas against the generic engines, with reports that
//! serialize to JSON.

mod suites;
mod sweep;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};

pub use suites::random_strong_digraph;
pub use sweep::{sweep_labeled, sweep_masks, Outcome, Tally};

/// Version of the JSON layout of [`Report`].
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub name: String,
    pub params: String,
    pub status: Status,
    pub details: String,
}

impl Record {
    pub fn new(name: impl Into<String>, params: impl Into<String>, status: Status, details: impl Into<String>) -> Self {
        Self { name: name.into(), params: params.into(), status, details: details.into() }
    }

    /// `Ok(Ok(details))` passes, `Ok(Err(details))` fails, `Err` is an error.
    pub fn from_check(name: &str, params: impl Into<String>, outcome: Result<std::result::Result<String, String>>) -> Self {
        match outcome {
            Ok(Ok(d)) => Self::new(name, params, Status::Pass, d),
            Ok(Err(d)) => Self::new(name, params, Status::Fail, d),
            Err(e) => Self::new(name, params, Status::Error, e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    /// Set when passing checks are evidence for an open statement rather
    /// than a proof.
    pub evidence_only: bool,
    pub records: Vec<Record>,
    pub notes: Vec<String>,
    pub summary: Summary,
    pub wall_time_secs: f64,
}

impl Report {
    pub fn new(command: impl Into<String>, records: Vec<Record>) -> Self {
        let mut summary = Summary { total: records.len(), ..Summary::default() };
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Error => summary.error += 1,
            }
        }
        Self {
            schema_version: REPORT_SCHEMA_VERSION,
            command: command.into(),
            evidence_only: false,
            records,
            notes: Vec::new(),
            summary,
            wall_time_secs: 0.0,
        }
    }

    /// No FAIL and no ERROR records.
    pub fn is_success(&self) -> bool {
        self.summary.fail == 0 && self.summary.error == 0
    }

    pub fn records_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Record> {
        self.records.iter().filter(move |r| r.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.command)?;
        for r in &self.records {
            write!(f, "{:<5} {} [{}]", r.status, r.name, r.params)?;
            if !r.details.is_empty() {
                write!(f, ": {}", r.details)?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        let s = &self.summary;
        write!(f, "{} checks: {} pass, {} fail, {} error", s.total, s.pass, s.fail, s.error)?;
        if self.evidence_only {
            write!(f, " (evidence, not proof)")?;
        }
        writeln!(f, " in {:.2}s", self.wall_time_secs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Suite {
    TheoremEqui,
    EvalConsistency,
    CircuitSnf,
    LambdaIdeals,
    Conjecture,
    DiameterLemma,
    PatternLemmas,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::TheoremEqui,
        Suite::EvalConsistency,
        Suite::CircuitSnf,
        Suite::LambdaIdeals,
        Suite::Conjecture,
        Suite::DiameterLemma,
        Suite::PatternLemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremEqui => "theorem-equi",
            Suite::EvalConsistency => "eval-consistency",
            Suite::CircuitSnf => "circuit-snf",
            Suite::LambdaIdeals => "lambda-ideals",
            Suite::Conjecture => "conjecture",
            Suite::DiameterLemma => "diameter-lemma",
            Suite::PatternLemmas => "pattern-lemmas",
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Suite::TheoremEqui | Suite::EvalConsistency => 4,
            Suite::CircuitSnf => 12,
            Suite::LambdaIdeals | Suite::DiameterLemma | Suite::PatternLemmas => 5,
            Suite::Conjecture => 8,
        }
    }

    /// Largest accepted `n_max`.
    pub fn cap(self) -> usize {
        match self {
            Suite::TheoremEqui | Suite::EvalConsistency | Suite::DiameterLemma | Suite::PatternLemmas => 5,
            Suite::CircuitSnf => 40,
            Suite::LambdaIdeals => 6,
            Suite::Conjecture => 9,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Largest order; `None` takes the suite default.
    pub n_max: Option<usize>,
    /// Spreads work over the rayon pool; output is identical either way.
    pub parallel: bool,
    pub seed: u64,
    /// Progress lines go to stderr.
    pub progress: bool,
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Report> {
    let n_max = opts.n_max.unwrap_or(suite.default_n_max());
    if n_max > suite.cap() {
        return Err(Error::CapExceeded(format!("{suite} supports n-max up to {}, got {n_max}", suite.cap())));
    }
    let start = Instant::now();
    let ctx = suites::Ctx { n_max, opts: *opts };
    let (records, notes, evidence_only) = match suite {
        Suite::TheoremEqui => (suites::theorem_equi(&ctx)?, suites::theorem_equi_notes(), false),
        Suite::EvalConsistency => (suites::eval_consistency(&ctx)?, Vec::new(), false),
        Suite::CircuitSnf => (suites::circuit_snf(&ctx), Vec::new(), false),
        Suite::LambdaIdeals => (suites::lambda_ideals(&ctx), Vec::new(), false),
        Suite::Conjecture => (suites::conjecture(&ctx), suites::conjecture_notes(), true),
        Suite::DiameterLemma => (suites::diameter_lemma(&ctx)?, Vec::new(), false),
        Suite::PatternLemmas => (suites::pattern_lemmas(&ctx)?, Vec::new(), false),
    };
    let mut report = Report::new(format!("verify {suite} --n-max {n_max} --seed {}", opts.seed), records);
    report.notes = notes;
    report.evidence_only = evidence_only;
    report.wall_time_secs = start.elapsed().as_secs_f64();
    Ok(report)
}
