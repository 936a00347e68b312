//! Identity-suite engine. Every identity is evaluated on both sides in
//! exact arithmetic over a fixed comparison domain, case by case, and the
//! first counterexample (if any) is kept.
//!
//! A case is one value of an identity's leading index (usually `n`; `p`
//! for the series transformations); the remaining parameters are swept
//! inside the case in lexicographic order.

pub mod classical;
mod identities;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::cli::format::{pretty_lambda, pretty_x};
use crate::triangles::Tables;
use crate::{
    Error, LambdaSeries, PolyLambda, PolyXOverLambda, PolyXYOverLambda, RatFun, Rational, Result,
};

macro_rules! identities {
    ($($variant:ident => $name:literal, $domain:ident;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            /// Ring in which the two sides are compared.
            pub fn domain(self) -> Domain {
                match self {
                    $(IdentityId::$variant => Domain::$domain,)*
                }
            }
        }
    };
}

identities! {
    Thm1 => "Thm1", Lambda;
    Thm2 => "Thm2", Lambda;
    Thm3VsGf => "Thm3-vs-GF", Lambda;
    Thm4 => "Thm4", Lambda;
    Thm5 => "Thm5", RatFunLambda;
    Thm6 => "Thm6", Lambda;
    Thm7VsThm9 => "Thm7-vs-Thm9", X;
    Prop8 => "Prop8", X;
    Lemma38 => "Lemma38", X;
    Eq8Pfaff => "Eq8-Pfaff", Series;
    Eq9Euler => "Eq9-Euler", Series;
    Eq11 => "Eq11", Rational;
    Eq12 => "Eq12", Rational;
    Eq13 => "Eq13", RationalX;
    Eq23 => "Eq23", Lambda;
    Eq26To27 => "Eq26-27", Lambda;
    Eq30 => "Eq30", LambdaT;
    Eq32To33 => "Eq32-33", Lambda;
    RemarkAdd => "Remark-add", XY;
    RemarkDiff => "Remark-diff", X;
    RemarkMultA => "Remark-mult-A", X;
    RemarkMultB => "Remark-mult-B", X;
    StirlingDuality => "StirlingDuality", Lambda;
    ClassicalLimits => "ClassicalLimits", Rational;
}

impl IdentityId {
    /// The two readings of the multiplication formula's subscript; these
    /// are reported but only fail a run when requested strictly.
    pub fn is_informational(self) -> bool {
        matches!(self, IdentityId::RemarkMultA | IdentityId::RemarkMultB)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Parse `all` or a comma-separated list of identity names.
pub fn parse_selection(s: &str) -> Result<BTreeSet<IdentityId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(IdentityId::ALL.iter().copied().collect());
    }
    s.split(',').map(str::parse).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Rational,
    RationalX,
    Lambda,
    RatFunLambda,
    X,
    XY,
    LambdaT,
    Series,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Rational => "ℚ",
            Domain::RationalX => "ℚ[x]",
            Domain::Lambda => "ℚ[λ]",
            Domain::RatFunLambda => "ℚ(λ)",
            Domain::X => "ℚ[λ][x]",
            Domain::XY => "ℚ[λ][x][y]",
            Domain::LambdaT => "ℚ[λ][t]",
            Domain::Series => "ℚ[λ][[t]]",
        })
    }
}

/// Canonical form of one side of an identity.
#[derive(Clone, Debug, PartialEq)]
pub enum CanonicalValue {
    Rational(Rational),
    RationalX(crate::Poly<Rational>),
    Lambda(PolyLambda),
    RatFun(RatFun),
    X(PolyXOverLambda),
    XY(PolyXYOverLambda),
    LambdaT(PolyXOverLambda),
    Series(LambdaSeries),
}

impl fmt::Display for CanonicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalValue::Rational(r) => write!(f, "{r}"),
            CanonicalValue::RationalX(p) => {
                let as_lambda = pretty_lambda(p);
                write!(f, "{}", as_lambda.replace('λ', "x"))
            }
            CanonicalValue::Lambda(p) => write!(f, "{}", pretty_lambda(p)),
            CanonicalValue::RatFun(r) => write!(f, "{r}"),
            CanonicalValue::X(p) => write!(f, "{}", pretty_x(p)),
            CanonicalValue::LambdaT(p) => write!(f, "{}", pretty_x(p).replace('x', "t")),
            CanonicalValue::XY(p) => {
                let terms: Vec<String> = p
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(j, c)| format!("[{}]*y^{j}", pretty_x(c)))
                    .collect();
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join(" + "))
                }
            }
            CanonicalValue::Series(s) => {
                let terms: Vec<String> = s
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(n, c)| format!("c{n} = {}", pretty_lambda(c)))
                    .collect();
                write!(f, "[{}]", terms.join("; "))
            }
        }
    }
}

/// Parameter assignment and both canonical sides of the first failing case.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub assignment: Vec<(&'static str, i64)>,
    pub lhs: CanonicalValue,
    pub rhs: CanonicalValue,
    /// First coefficient index at which polynomial or series sides differ.
    pub mismatch_index: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub first_failure: Option<Counterexample>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.cases_passed == self.cases_run
    }
}

/// Equality up to timing.
impl PartialEq for IdentityReport {
    fn eq(&self, other: &Self) -> bool {
        self.identity == other.identity
            && self.cases_run == other.cases_run
            && self.cases_passed == other.cases_passed
            && self.first_failure == other.first_failure
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub max_p: usize,
    pub truncation: usize,
    pub max_r: usize,
    pub multipliers: Vec<usize>,
}

impl SuiteConfig {
    pub fn new(max_n: usize, max_p: usize, truncation: usize) -> Self {
        SuiteConfig { max_n, max_p, truncation, max_r: 3, multipliers: vec![2, 3] }
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::new(12, 4, 16)
    }
}

fn validate(config: &SuiteConfig) -> Result<()> {
    if config.truncation < config.max_n + 1 {
        return Err(Error::InsufficientSeriesOrder);
    }
    if config.multipliers.iter().any(|&m| m < 2) {
        return Err(Error::ParameterOutOfRange("multipliers must be at least 2".into()));
    }
    Ok(())
}

pub fn run_suite(selection: &BTreeSet<IdentityId>, config: &SuiteConfig) -> Result<Vec<IdentityReport>> {
    validate(config)?;
    let tables = Tables::new(config.max_n.max(1));
    run_suite_with_tables(&tables, selection, config)
}

/// Run against caller-supplied triangles (for instance a perturbed `S_{2,λ}`).
pub fn run_suite_with_tables(
    tables: &Tables,
    selection: &BTreeSet<IdentityId>,
    config: &SuiteConfig,
) -> Result<Vec<IdentityReport>> {
    validate(config)?;
    if tables.max_n() < config.max_n {
        return Err(Error::IndexOutOfRange(format!(
            "tables cover n ≤ {}, suite needs {}",
            tables.max_n(),
            config.max_n
        )));
    }
    for &id in selection {
        identities::check_ranges(id, config)?;
    }
    let ids: Vec<IdentityId> = selection.iter().copied().collect();
    ids.par_iter()
        .map(|&id| {
            let start = Instant::now();
            let tally = identities::run(id, tables, config)?;
            Ok(IdentityReport {
                identity: id,
                cases_run: tally.run,
                cases_passed: tally.passed,
                first_failure: tally.first_failure,
                elapsed: start.elapsed(),
            })
        })
        .collect()
}

pub fn explain_failure(report: &IdentityReport) -> Result<String> {
    let failure = report.first_failure.as_ref().ok_or(Error::NoFailure)?;
    let params = failure
        .assignment
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(", ");
    let domain = report.identity.domain();
    let mut out = format!(
        "{} failed at ({params}) after {} of {} cases passed; compared in {domain}\n  lhs: {}\n  rhs: {}\n",
        report.identity, report.cases_passed, report.cases_run, failure.lhs, failure.rhs
    );
    if let Some(i) = failure.mismatch_index {
        let what = match domain {
            Domain::LambdaT => format!("coefficient of t^{i}"),
            Domain::Series => format!("series coefficient c{i}"),
            Domain::X | Domain::RationalX => format!("coefficient of x^{i}"),
            Domain::XY => format!("coefficient of y^{i}"),
            _ => format!("coefficient of λ^{i}"),
        };
        out.push_str(&format!("  first mismatch: {what}\n"));
    }
    Ok(out)
}
