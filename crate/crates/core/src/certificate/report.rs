use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    NotVerified,
    Inconclusive,
}

impl Verdict {
    /// Process exit status: 0 verified, 1 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::NotVerified | Verdict::Inconclusive => 1,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::NotVerified => "not-verified",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportKind {
    Example3,
    CertifyG2,
    GenusReduction,
}

impl fmt::Display for ReportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportKind::Example3 => "example3",
            ReportKind::CertifyG2 => "certify-g2",
            ReportKind::GenusReduction => "genus-reduction",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermCounts {
    pub ez_terms: usize,
    pub aw_terms: Option<usize>,
    pub bidegree_terms: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientResidue {
    pub m: u32,
    pub dimension: usize,
    pub relation_rank: usize,
    pub coinvariant_dimension: usize,
    pub nonzero: bool,
    pub residue: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StageTiming {
    pub stage: String,
    pub millis: f64,
}

/// Structured outcome of a certificate run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateReport {
    pub kind: ReportKind,
    pub n: usize,
    pub g: usize,
    pub counts: TermCounts,
    pub surviving_components: Vec<String>,
    pub projected_value: Option<String>,
    pub wedge_value: Option<String>,
    pub coinvariant_residues: Vec<QuotientResidue>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    pub timings: Vec<StageTiming>,
}

impl CertificateReport {
    pub(crate) fn new(kind: ReportKind, n: usize, g: usize) -> Self {
        CertificateReport {
            kind,
            n,
            g,
            counts: TermCounts::default(),
            surviving_components: Vec::new(),
            projected_value: None,
            wedge_value: None,
            coinvariant_residues: Vec::new(),
            checks: Vec::new(),
            verdict: Verdict::Inconclusive,
            timings: Vec::new(),
        }
    }

    pub(crate) fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check::new(name, passed, detail));
        passed
    }

    pub fn check_named(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn all_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The same report with timing data removed; two runs on the same input
    /// agree exactly on this.
    pub fn without_timings(&self) -> Self {
        CertificateReport { timings: Vec::new(), ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "report: {} (n={}, g={})", self.kind, self.n, self.g)?;
        writeln!(f, "verdict: {}", self.verdict)?;
        write!(f, "terms: ez={}", self.counts.ez_terms)?;
        if let Some(aw) = self.counts.aw_terms {
            write!(f, " aw={aw}")?;
        }
        if let Some(b) = self.counts.bidegree_terms {
            write!(f, " bidegree={b}")?;
        }
        writeln!(f)?;
        if !self.surviving_components.is_empty() {
            writeln!(f, "surviving components: {}", self.surviving_components.join(", "))?;
        }
        if let Some(p) = &self.projected_value {
            writeln!(f, "projected value: {p}")?;
        }
        if let Some(w) = &self.wedge_value {
            writeln!(f, "wedge value: {w}")?;
        }
        for r in &self.coinvariant_residues {
            writeln!(
                f,
                "coinvariants D_{}: dim {} rank {} quotient {} residue {}",
                r.m,
                r.dimension,
                r.relation_rank,
                r.coinvariant_dimension,
                if r.nonzero { format!("nonzero ({} terms)", r.residue.len()) } else { "zero".into() }
            )?;
        }
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail)?;
        }
        for t in &self.timings {
            writeln!(f, "time {}: {:.1} ms", t.stage, t.millis)?;
        }
        Ok(())
    }
}

pub(crate) struct Stopwatch {
    start: Instant,
}

impl Stopwatch {
    pub(crate) fn start() -> Self {
        Stopwatch { start: Instant::now() }
    }

    pub(crate) fn lap(&mut self, report: &mut CertificateReport, stage: &str) {
        let now = Instant::now();
        report.timings.push(StageTiming {
            stage: stage.to_string(),
            millis: (now - self.start).as_secs_f64() * 1e3,
        });
        self.start = now;
    }
}
