use std::fmt;

use serde::Serialize;

/// A failed instance with enough data to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub instance: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub instance: String,
    pub reason: String,
}

/// Outcome of one check over its instances. `attempted` always equals
/// `passed + failed + skipped`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub attempted: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failures: Vec<Witness>,
    pub skips: Vec<Skip>,
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>) -> Self {
        CheckReport {
            check_id: check_id.into(),
            attempted: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
            failures: Vec::new(),
            skips: Vec::new(),
        }
    }

    pub fn pass(&mut self) {
        self.attempted += 1;
        self.passed += 1;
    }

    pub fn fail(&mut self, instance: impl Into<String>, detail: impl Into<String>) {
        self.attempted += 1;
        self.failed += 1;
        self.failures.push(Witness {
            instance: instance.into(),
            detail: detail.into(),
        });
    }

    pub fn skip(&mut self, instance: impl Into<String>, reason: impl Into<String>) {
        self.attempted += 1;
        self.skipped += 1;
        self.skips.push(Skip {
            instance: instance.into(),
            reason: reason.into(),
        });
    }

    /// Records a pass when `ok`, otherwise a failure built from `detail`.
    pub fn expect(&mut self, ok: bool, instance: &str, detail: impl FnOnce() -> String) {
        if ok {
            self.pass();
        } else {
            self.fail(instance, detail());
        }
    }

    /// Appends another report's counts and witnesses, in order.
    pub fn absorb(&mut self, other: CheckReport) {
        self.attempted += other.attempted;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
        self.skips.extend(other.skips);
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn is_consistent(&self) -> bool {
        self.attempted == self.passed + self.failed + self.skipped
            && self.failures.len() == self.failed
            && self.skips.len() == self.skipped
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<20} {:>4}  attempted {:>5}  passed {:>5}  failed {:>3}  skipped {:>3}",
            self.check_id,
            if self.ok() { "PASS" } else { "FAIL" },
            self.attempted,
            self.passed,
            self.failed,
            self.skipped
        )?;
        for w in &self.failures {
            write!(f, "\n    failed  {}: {}", w.instance, w.detail)?;
        }
        for s in &self.skips {
            write!(f, "\n    skipped {}: {}", s.instance, s.reason)?;
        }
        Ok(())
    }
}
