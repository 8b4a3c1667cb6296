use std::time::Duration;

use serde_json::{json, Map, Value};

use crate::rational::{self, Rational};

/// How many counterexamples a report keeps verbatim; the rest are only counted.
pub const MAX_RECORDED_FAILURES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

impl Mode {
    pub fn to_json(self) -> Value {
        match self {
            Mode::Exhaustive => json!("exhaustive"),
            Mode::Sampled { samples, seed } => json!({ "sampled": { "samples": samples, "seed": seed } }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// Basis indices (exhaustive mode) or the sample number (sampled mode).
    pub indices: Vec<usize>,
    /// Nonzero coordinates of whatever should have vanished.
    pub residual: Vec<(usize, Rational)>,
    pub message: String,
}

impl Failure {
    pub fn to_json(&self) -> Value {
        json!({
            "indices": self.indices,
            "message": self.message,
            "residual": self
                .residual
                .iter()
                .map(|(k, c)| json!({ "k": k, "c": rational::format(c) }))
                .collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at {:?}", self.message, self.indices)?;
        if !self.residual.is_empty() {
            let parts: Vec<String> = self.residual.iter().take(8).map(|(k, c)| format!("{k}: {c}")).collect();
            write!(f, ", residual {{{}}}", parts.join(", "))?;
            if self.residual.len() > 8 {
                write!(f, " (+{} more)", self.residual.len() - 8)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check: String,
    pub algebra: String,
    pub mode: Mode,
    pub tested: u64,
    pub failures: Vec<Failure>,
    pub failure_count: u64,
    /// Extra certified quantities (dimensions, signatures, constants).
    pub details: Map<String, Value>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(check: &str, algebra: &str, mode: Mode) -> Self {
        Self {
            check: check.into(),
            algebra: algebra.into(),
            mode,
            tested: 0,
            failures: Vec::new(),
            failure_count: 0,
            details: Map::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn record(&mut self, failure: Failure) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(failure);
        }
    }

    /// Appends another partial report for the same check, in order.
    pub fn merge(&mut self, other: VerificationReport) {
        self.tested += other.tested;
        self.failure_count += other.failure_count;
        let room = MAX_RECORDED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.into(), value.into());
        self
    }

    /// Timing is left out so that reports are reproducible byte for byte.
    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "algebra": self.algebra,
            "mode": self.mode.to_json(),
            "passed": self.passed(),
            "tested": self.tested,
            "failure_count": self.failure_count,
            "failures": self.failures.iter().map(Failure::to_json).collect::<Vec<_>>(),
            "details": Value::Object(self.details.clone()),
        })
    }

    /// One-line human summary, without timing.
    pub fn summary(&self) -> String {
        let mode = match self.mode {
            Mode::Exhaustive => "exhaustive".to_string(),
            Mode::Sampled { samples, seed } => format!("sampled n={samples} seed={seed}"),
        };
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} {} {} ({mode}): {} tested, {} failures",
            self.algebra, self.check, self.tested, self.failure_count
        );
        for (k, v) in &self.details {
            s.push_str(&format!(", {k}={v}"));
        }
        s
    }
}
