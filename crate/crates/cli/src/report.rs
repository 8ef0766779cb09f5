//! Computing one entry: validation, groups, classification and checks.

use cohom_core::families::{homology, validate, FamilyDiagram, Options};
use cohom_core::oracle::{check_diagram, CheckRecord};
use cohom_core::sweep::{valid_diagrams, Bounds};
use cohom_core::{classify_theorem_type, Classification, Error, Family, GradedGroups, Invariants};
use rayon::prelude::*;

use crate::input::{Entry, Target};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub cohomology: GradedGroups,
    pub invariants: Option<Invariants>,
    pub classification: Classification,
    pub diagnostics: Vec<String>,
    /// Empty unless checks were requested.
    pub checks: Vec<CheckRecord>,
    pub check_errors: Vec<String>,
}

/// Exactly one of `violations` and `outcome` is nonempty.
#[derive(Clone, Debug)]
pub struct Report {
    pub entry: Entry,
    pub violations: Vec<String>,
    pub outcome: Option<Outcome>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn checks_pass(&self) -> bool {
        self.outcome
            .as_ref()
            .is_none_or(|o| o.check_errors.is_empty() && o.checks.iter().all(CheckRecord::agrees))
    }

    pub fn passed(&self) -> bool {
        self.is_valid() && self.checks_pass()
    }
}

fn invalid(entry: &Entry, violations: Vec<String>) -> Report {
    Report {
        entry: entry.clone(),
        violations,
        outcome: None,
    }
}

fn diagram_outcome(d: &FamilyDiagram, check: bool) -> Result<Outcome, Vec<String>> {
    let violations = validate(d);
    if !violations.is_empty() {
        return Err(violations);
    }
    let r = match homology(d) {
        Ok(r) => r,
        Err(Error::InvalidDiagram(v)) => return Err(v),
        Err(e) => return Err(vec![e.to_string()]),
    };
    let (checks, check_errors) = if check {
        match check_diagram(d, Options::default()) {
            Ok(records) => (records, Vec::new()),
            Err(e) => (Vec::new(), vec![e.to_string()]),
        }
    } else {
        (Vec::new(), Vec::new())
    };
    Ok(Outcome {
        classification: classify_theorem_type(&r.cohomology),
        cohomology: r.cohomology,
        invariants: Some(r.invariants),
        diagnostics: r.diagnostics,
        checks,
        check_errors,
    })
}

fn profile_outcome(g: GradedGroups) -> Result<Outcome, Vec<String>> {
    let cohomology = g.as_cohomology().map_err(|e| vec![e.to_string()])?;
    Ok(Outcome {
        classification: classify_theorem_type(&cohomology),
        cohomology,
        invariants: None,
        diagnostics: Vec::new(),
        checks: Vec::new(),
        check_errors: Vec::new(),
    })
}

pub fn run(entry: &Entry, check: bool) -> Report {
    let outcome = match entry.target() {
        Err(v) => Err(vec![v]),
        Ok(Target::Diagram(d)) => diagram_outcome(&d, check),
        Ok(Target::Profile(g)) => profile_outcome(g),
    };
    match outcome {
        Ok(o) => Report {
            entry: entry.clone(),
            violations: Vec::new(),
            outcome: Some(o),
        },
        Err(v) => invalid(entry, v),
    }
}

/// Every valid diagram of `family` in the box, sorted by parameters.
pub fn sweep(family: Family, bounds: &Bounds, check: bool) -> Vec<Report> {
    let mut reports: Vec<Report> = valid_diagrams(family, bounds)
        .par_iter()
        .map(|d| run(&Entry::from(d), check))
        .collect();
    reports.sort_by(|a, b| a.entry.cmp(&b.entry));
    reports
}

/// `slope=5,order=4,reduced=2,signs=both`; omitted keys keep their
/// defaults.
pub fn parse_bounds(text: &str) -> Result<Bounds, String> {
    let mut b = Bounds::default();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("bound `{part}` is not key=value"))?;
        let number = || {
            value
                .parse::<i64>()
                .ok()
                .filter(|v| *v >= 0)
                .ok_or_else(|| format!("bound `{key}` needs a nonnegative integer, got `{value}`"))
        };
        match key {
            "slope" => b.slope = number()?,
            "order" => b.order = number()?,
            "reduced" => b.reduced = number()?,
            "signs" => {
                b.both_signs = match value {
                    "both" => true,
                    "one" => false,
                    _ => return Err(format!("signs must be `one` or `both`, got `{value}`")),
                }
            }
            _ => return Err(format!("unknown bound `{key}`")),
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_parse() {
        let b = parse_bounds("slope=5, order=4,signs=both").unwrap();
        assert_eq!((b.slope, b.order, b.reduced, b.both_signs), (5, 4, 2, true));
        assert_eq!(parse_bounds("").unwrap(), Bounds::default());
        assert!(parse_bounds("slop=1").is_err());
        assert!(parse_bounds("slope=-1").is_err());
    }

    #[test]
    fn invalid_entries_skip_computation() {
        let e = Entry::N7A { p_minus: 2, q_minus: 2, b_minus: 1, p_plus: 0, q_plus: 1, b_plus: 1, h: None };
        let r = run(&e, true);
        assert!(!r.is_valid());
        assert!(r.outcome.is_none());
        let zero = run(&Entry::N7C { p: 1, q: 0, n: 1 }, false);
        assert!(!zero.passed());
    }

    #[test]
    fn sweeps_are_sorted() {
        let reports = sweep(Family::N7A, &Bounds::default(), true);
        assert!(!reports.is_empty());
        assert!(reports.windows(2).all(|w| w[0].entry < w[1].entry));
        assert!(reports.iter().all(Report::passed));
    }
}
