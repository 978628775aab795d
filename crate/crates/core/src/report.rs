//! PASS/FAIL reports for families of checked identities.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::linear::{format_rational, LinMap};

/// Outcome of one checked instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub relation: String,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl InstanceResult {
    pub fn pass(relation: impl Into<String>, instance: impl Into<String>) -> Self {
        InstanceResult {
            relation: relation.into(),
            instance: instance.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(relation: impl Into<String>, instance: impl Into<String>, witness: impl Into<String>) -> Self {
        InstanceResult {
            relation: relation.into(),
            instance: instance.into(),
            pass: false,
            witness: Some(witness.into()),
        }
    }

    /// Compares two evaluated sides; on mismatch the witness lists the first
    /// nonzero entries of `lhs − rhs`.
    pub fn compare(relation: &str, instance: String, lhs: &LinMap, rhs: &LinMap) -> Self {
        match lhs.sub(rhs) {
            Ok(diff) if diff.is_zero() => Self::pass(relation, instance),
            Ok(diff) => Self::fail(relation, instance, difference_witness(&diff)),
            Err(e) => Self::fail(relation, instance, e.to_string()),
        }
    }
}

/// The first few nonzero entries of a difference matrix.
pub fn difference_witness(diff: &LinMap) -> String {
    let entries = diff.entries();
    let shown: Vec<String> = entries
        .iter()
        .take(6)
        .map(|(r, c, v)| format!("({r},{c})={}", format_rational(v)))
        .collect();
    let more = if entries.len() > 6 { format!(" and {} more", entries.len() - 6) } else { String::new() };
    format!("lhs-rhs nonzero at {}{more}", shown.join(" "))
}

/// A list of checked instances.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub title: String,
    pub instances: Vec<InstanceResult>,
}

impl Report {
    pub fn new(title: impl Into<String>, instances: Vec<InstanceResult>) -> Self {
        Report {
            title: title.into(),
            instances,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.instances.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.instances.iter().filter(|i| !i.pass)
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn count(&self, relation: &str) -> usize {
        self.instances.iter().filter(|i| i.relation == relation).count()
    }

    pub fn extend(&mut self, other: Report) {
        self.instances.extend(other.instances);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for inst in &self.instances {
            let status = if inst.pass { "PASS" } else { "FAIL" };
            write!(f, "{status} {} {}", inst.relation, inst.instance)?;
            if let Some(w) = &inst.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{}: {} instances, {} failed", self.title, self.len(), failed)
    }
}

/// Runs `check` on every item, on `jobs` worker threads when `jobs > 1`.
/// Results keep the order of `items`.
pub fn run_checks<T, F>(items: &[T], jobs: usize, check: F) -> Vec<InstanceResult>
where
    T: Sync,
    F: Fn(&T) -> InstanceResult + Sync + Send,
{
    if jobs <= 1 {
        return items.iter().map(&check).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&check).collect()),
        Err(_) => items.iter().map(&check).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compare_reports_witness() {
        let a = LinMap::from_int_rows(&[&[1, 0], &[0, 1]]);
        let b = LinMap::from_int_rows(&[&[1, 0], &[0, 2]]);
        assert!(InstanceResult::compare("r", "i".into(), &a, &a).pass);
        let bad = InstanceResult::compare("r", "i".into(), &a, &b);
        assert!(!bad.pass);
        assert_eq!(bad.witness.as_deref(), Some("lhs-rhs nonzero at (1,1)=-1"));
    }

    #[test]
    fn parallel_runs_keep_order() {
        let items: Vec<usize> = (0..50).collect();
        let serial = run_checks(&items, 1, |i| InstanceResult::pass("r", i.to_string()));
        let parallel = run_checks(&items, 4, |i| InstanceResult::pass("r", i.to_string()));
        assert_eq!(serial, parallel);
        let report = Report::new("t", serial);
        assert!(report.all_pass());
        assert!(report.to_string().ends_with("t: 50 instances, 0 failed"));
    }
}
