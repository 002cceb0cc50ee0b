use std::collections::BTreeMap;
use std::fmt;

/// At most this many witnesses are kept per axiom; the rest are only counted.
const KEEP_PER_AXIOM: usize = 16;

/// One failed axiom instance: the axiom id and the element indices that
/// witness the failure, in the order the axiom names them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

/// Result of an exhaustive axiom check. Empty means every axiom holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    violations: Vec<Violation>,
    counts: BTreeMap<String, usize>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn record(&mut self, axiom: &str, witness: &[usize]) {
        let c = self.counts.entry(axiom.to_string()).or_insert(0);
        *c += 1;
        if *c <= KEEP_PER_AXIOM {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                witness: witness.to_vec(),
            });
        }
    }

    /// Records a violation when `holds` is false.
    #[inline]
    pub fn check(&mut self, holds: bool, axiom: &str, witness: &[usize]) {
        if !holds {
            self.record(axiom, witness);
        }
    }

    pub fn is_ok(&self) -> bool {
        self.counts.is_empty()
    }

    /// Kept witnesses, in the order found.
    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Number of failures of one axiom, including those not kept.
    pub fn count(&self, axiom: &str) -> usize {
        self.counts.get(axiom).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Failing axioms with their failure counts, sorted by id.
    pub fn failing_axioms(&self) -> impl Iterator<Item = (&str, usize)> {
        self.counts.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn first(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    /// Appends another report, prefixing its axiom ids with `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        let name = |a: &str| {
            if prefix.is_empty() {
                a.to_string()
            } else {
                format!("{prefix}.{a}")
            }
        };
        for (a, c) in other.counts {
            *self.counts.entry(name(&a)).or_insert(0) += c;
        }
        for v in other.violations {
            self.violations.push(Violation {
                axiom: name(&v.axiom),
                witness: v.witness,
            });
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "all axioms hold");
        }
        for (axiom, count) in &self.counts {
            writeln!(f, "{axiom}: {count} violation(s)")?;
            for v in self.violations.iter().filter(|v| &v.axiom == axiom) {
                writeln!(f, "  witness {:?}", v.witness)?;
            }
        }
        Ok(())
    }
}
