use serde::Serialize;
use std::io::Write;
use std::path::Path;

/// CSV header shared by every campaign table.
pub const CSV_COLUMNS: [&str; 8] = ["check_id", "param_r", "expected", "observed", "abs_err", "rel_err", "tol", "pass"];

/// One verified quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub check_id: String,
    pub param_r: Option<f64>,
    pub expected: f64,
    pub observed: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    /// Diagnostic text for failures; kept out of the CSV.
    pub note: Option<String>,
}

fn rel(abs: f64, expected: f64) -> f64 {
    if expected == 0.0 {
        abs
    } else {
        abs / expected.abs()
    }
}

impl Row {
    fn base(id: &str, r: Option<f64>, expected: f64, observed: f64, abs_err: f64, tol: f64, pass: bool) -> Self {
        Self {
            check_id: id.into(),
            param_r: r,
            expected,
            observed,
            abs_err,
            rel_err: rel(abs_err, expected),
            tol,
            pass,
            note: None,
        }
    }

    /// `|observed − expected| ≤ tol`.
    pub fn abs(id: &str, r: Option<f64>, expected: f64, observed: f64, tol: f64) -> Self {
        let e = (observed - expected).abs();
        Self::base(id, r, expected, observed, e, tol, e <= tol)
    }

    /// `|observed − expected| ≤ tol·|expected|`.
    pub fn rel(id: &str, r: Option<f64>, expected: f64, observed: f64, tol: f64) -> Self {
        let e = (observed - expected).abs();
        let row = Self::base(id, r, expected, observed, e, tol, false);
        let pass = row.rel_err <= tol;
        Self { pass, ..row }
    }

    /// `observed ≤ bound`; `expected` holds the bound and `abs_err` the excess.
    pub fn at_most(id: &str, r: Option<f64>, observed: f64, bound: f64) -> Self {
        let excess = (observed - bound).max(0.0);
        Self::base(id, r, bound, observed, excess, bound, observed <= bound)
    }

    /// `observed ≥ bound` (strict when `strict`); `abs_err` holds the shortfall.
    pub fn at_least(id: &str, r: Option<f64>, observed: f64, bound: f64, strict: bool) -> Self {
        let short = (bound - observed).max(0.0);
        let pass = if strict { observed > bound } else { observed >= bound };
        Self::base(id, r, bound, observed, short, 0.0, pass)
    }

    /// A yes/no outcome encoded as `expected = 1`, `observed ∈ {0, 1}`.
    pub fn flag(id: &str, r: Option<f64>, ok: bool) -> Self {
        let observed = if ok { 1.0 } else { 0.0 };
        Self::base(id, r, 1.0, observed, 1.0 - observed, 0.0, ok)
    }

    /// Logged data with no assertion attached; always passes.
    pub fn info(id: &str, r: Option<f64>, observed: f64) -> Self {
        Self::base(id, r, f64::NAN, observed, f64::NAN, f64::NAN, true)
    }

    /// A failed row for a computation that returned an error.
    pub fn error(id: &str, r: Option<f64>, err: impl std::fmt::Display) -> Self {
        Self {
            note: Some(err.to_string()),
            ..Self::base(id, r, f64::NAN, f64::NAN, f64::NAN, 0.0, false)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn fields(&self) -> [String; 8] {
        let num = |v: f64| format!("{v:.16e}");
        [
            self.check_id.clone(),
            self.param_r.map(num).unwrap_or_default(),
            num(self.expected),
            num(self.observed),
            num(self.abs_err),
            num(self.rel_err),
            num(self.tol),
            self.pass.to_string(),
        ]
    }
}

/// Rows of one campaign plus timing.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub campaign: String,
    pub rows: Vec<Row>,
    pub walltime_s: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub check_id: String,
    pub param_r: Option<f64>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub campaign: String,
    pub pass: bool,
    pub n_checks: usize,
    pub n_failed: usize,
    pub walltime_s: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub campaigns: Vec<Summary>,
}

impl VerificationReport {
    pub fn new(campaign: impl Into<String>) -> Self {
        Self {
            campaign: campaign.into(),
            rows: Vec::new(),
            walltime_s: 0.0,
        }
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn n_failed(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }

    pub fn summary(&self) -> Summary {
        Summary {
            campaign: self.campaign.clone(),
            pass: self.pass(),
            n_checks: self.rows.len(),
            n_failed: self.n_failed(),
            walltime_s: self.walltime_s,
            failures: self
                .rows
                .iter()
                .filter(|r| !r.pass)
                .map(|r| Failure {
                    check_id: r.check_id.clone(),
                    param_r: r.param_r,
                    note: r.note.clone(),
                })
                .collect(),
            campaigns: Vec::new(),
        }
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_COLUMNS)?;
        for row in &self.rows {
            w.write_record(row.fields())?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Summary over several campaigns; passes iff every campaign passes.
pub fn combined_summary(name: &str, reports: &[VerificationReport]) -> Summary {
    let campaigns: Vec<Summary> = reports.iter().map(|r| r.summary()).collect();
    Summary {
        campaign: name.into(),
        pass: campaigns.iter().all(|s| s.pass),
        n_checks: campaigns.iter().map(|s| s.n_checks).sum(),
        n_failed: campaigns.iter().map(|s| s.n_failed).sum(),
        walltime_s: reports.iter().map(|r| r.walltime_s).sum(),
        failures: Vec::new(),
        campaigns,
    }
}

/// Writes `<campaign>.csv` for each report and `summary.json` into `dir`.
pub fn write_outputs(dir: &Path, summary: &Summary, reports: &[VerificationReport]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    for report in reports {
        let file = std::fs::File::create(dir.join(format!("{}.csv", report.campaign)))?;
        report.write_csv(std::io::BufWriter::new(file)).map_err(std::io::Error::other)?;
    }
    let json = serde_json::to_string_pretty(summary).map_err(std::io::Error::other)?;
    std::fs::write(dir.join("summary.json"), json + "\n")
}
