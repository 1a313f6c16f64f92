//! Exhaustive and sampled checks of the extremal results, with JSON reports.

mod bounds;
mod oracle;
mod relocation;
mod targets;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Value};

pub use bounds::{
    bound_cover, bound_matching, cover_bound_denominator, kirkland_bound, matching_bound_denominator,
    path_alpha,
};
pub use oracle::minimum_edge_cover_size;

use crate::error::{Error, Result};

/// A strict inequality `a > b` (or a uniqueness gap) passes iff `a − b > GAP_TOL`.
pub const GAP_TOL: f64 = 1e-9;
/// A bound `a >= b` passes iff `a >= b − BOUND_TOL`.
pub const BOUND_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Thm31,
    Thm32,
    Cor33,
    Lem22,
    Lem23,
    Lem24,
    Lem25,
    Lem26,
    Cor27,
    Bound35,
    Bound36,
    Lem34,
    Gallai,
    Fiedler21,
}

impl Target {
    pub const ALL: [Target; 14] = [
        Target::Thm31,
        Target::Thm32,
        Target::Cor33,
        Target::Lem22,
        Target::Lem23,
        Target::Lem24,
        Target::Lem25,
        Target::Lem26,
        Target::Cor27,
        Target::Bound35,
        Target::Bound36,
        Target::Lem34,
        Target::Gallai,
        Target::Fiedler21,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Thm31 => "thm31",
            Target::Thm32 => "thm32",
            Target::Cor33 => "cor33",
            Target::Lem22 => "lem22",
            Target::Lem23 => "lem23",
            Target::Lem24 => "lem24",
            Target::Lem25 => "lem25",
            Target::Lem26 => "lem26",
            Target::Cor27 => "cor27",
            Target::Bound35 => "bound35",
            Target::Bound36 => "bound36",
            Target::Lem34 => "lem34",
            Target::Gallai => "gallai",
            Target::Fiedler21 => "fiedler21",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTarget(s.to_string()))
    }
}

/// Inputs of a verification run. Targets ignore the fields they do not use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub seed: u64,
    pub count: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams { n: None, d: None, seed: 0, count: 1000 }
    }
}

impl VerifyParams {
    pub fn with_n(n: usize) -> Self {
        VerifyParams { n: Some(n), ..Default::default() }
    }

    fn require_n(&self, target: Target) -> Result<usize> {
        self.n
            .ok_or_else(|| Error::Infeasible(format!("target {target} needs an order n")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub alpha: f64,
    pub beta: usize,
}

/// One sub-claim of a report. Checks with `asserted = false` are reported
/// for information and do not affect `passed`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub asserted: bool,
    pub passed: bool,
    pub checked: usize,
    pub min_gap: Option<f64>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub target: String,
    pub params: Value,
    pub passed: bool,
    pub checked: usize,
    pub skipped: usize,
    /// Smallest margin supporting a strict inequality, uniqueness or bound
    /// claim; `None` when no comparison was made (e.g. singleton classes).
    pub min_gap: Option<f64>,
    pub witnesses: Vec<Witness>,
    pub checks: Vec<SubCheck>,
}

impl VerificationReport {
    fn new(target: Target, params: Map<String, Value>) -> Self {
        VerificationReport {
            target: target.name().to_string(),
            params: Value::Object(params),
            passed: true,
            checked: 0,
            skipped: 0,
            min_gap: None,
            witnesses: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn record_gap(&mut self, gap: f64) {
        self.min_gap = Some(self.min_gap.map_or(gap, |g| g.min(gap)));
    }

    fn push_check(&mut self, check: SubCheck) {
        if check.asserted {
            self.passed &= check.passed;
            if let Some(gap) = check.min_gap {
                self.record_gap(gap);
            }
        }
        self.checks.push(check);
    }

    /// Single CSV summary row: `target,params,passed,checked,skipped,min_gap`.
    pub fn csv_row(&self) -> String {
        let params = self
            .params
            .as_object()
            .map(|m| m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";"))
            .unwrap_or_default();
        let gap = self.min_gap.map(|g| format!("{g:.12e}")).unwrap_or_default();
        format!("{},{},{},{},{},{}", self.target, params, self.passed, self.checked, self.skipped, gap)
    }

    pub const CSV_HEADER: &'static str = "target,params,passed,checked,skipped,min_gap";
}

fn min_option(a: Option<f64>, b: f64) -> Option<f64> {
    Some(a.map_or(b, |a| a.min(b)))
}

pub fn verify(target: Target, params: &VerifyParams) -> Result<VerificationReport> {
    match target {
        Target::Thm31 => targets::thm31(params.require_n(target)?),
        Target::Thm32 => targets::thm32(params.require_n(target)?),
        Target::Cor33 => targets::cor33(params.require_n(target)?),
        Target::Lem22 => relocation::lem22(params.seed, params.count),
        Target::Lem23 => targets::lem23(params.require_n(target)?, params.d),
        Target::Lem24 => targets::lem24(),
        Target::Lem25 => targets::lem25(params.n),
        Target::Lem26 => targets::lem26(params.require_n(target)?),
        Target::Cor27 => targets::cor27(params.require_n(target)?),
        Target::Bound35 => targets::bound35(params.require_n(target)?),
        Target::Bound36 => targets::bound36(params.require_n(target)?),
        Target::Lem34 => targets::lem34(),
        Target::Gallai => targets::gallai(params.require_n(target)?),
        Target::Fiedler21 => targets::fiedler21(params.require_n(target)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_names_round_trip() {
        for t in Target::ALL {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert_eq!("thm99".parse::<Target>(), Err(Error::UnknownTarget("thm99".into())));
    }

    #[test]
    fn missing_order_is_rejected() {
        assert!(matches!(verify(Target::Thm31, &VerifyParams::default()), Err(Error::Infeasible(_))));
    }

    #[test]
    fn csv_row_shape() {
        let report = verify(Target::Thm32, &VerifyParams::with_n(3)).unwrap();
        let row = report.csv_row();
        assert!(row.starts_with("thm32,n=3,true,2,0,"), "{row}");
        assert_eq!(row.split(',').count(), VerificationReport::CSV_HEADER.split(',').count());
    }
}
