//! Pass/fail reports shared by the verification operations and suites.

/// Outcome of an exhaustive check: how many cases ran and which failed.
///
/// A failure records the offending input in its serialized record form so
/// the case can be replayed from the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub cases: u64,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    /// Serialized record of the input that failed.
    pub input: String,
    /// What went wrong, in terms of the checked identity.
    pub detail: String,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record_case(&mut self) {
        self.cases += 1;
    }

    pub fn fail(&mut self, input: impl Into<String>, detail: impl Into<String>) {
        self.failures.push(Failure {
            input: input.into(),
            detail: detail.into(),
        });
    }

    /// Merge `other` into `self`, preserving order of failures.
    pub fn absorb(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}
