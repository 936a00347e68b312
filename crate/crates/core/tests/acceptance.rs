//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use degenerate_bernoulli::bernoulli::*;
use degenerate_bernoulli::series::{degenerate_exp, degenerate_log};
use degenerate_bernoulli::triangles::{Tables, TriangleTable};
use degenerate_bernoulli::verify::{
    parse_selection, run_suite, run_suite_with_tables, IdentityId, IdentityReport, SuiteConfig,
};
use degenerate_bernoulli::{lambda, LambdaSeries, PolyLambda, RatFun, Rational, Result};
use num_traits::{One, Zero};

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn within(outcome: Outcome, elapsed: Duration, limit: Duration) -> Outcome {
    if outcome.passed && elapsed > limit {
        return fail(format!("{} but took {elapsed:.1?} (limit {limit:?})", outcome.detail));
    }
    outcome
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Classical Bernoulli numbers from `Σ_{k≤n} C(n+1,k) B_k = 0`.
fn bernoulli_recurrence(max_n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for n in 1..=max_n {
        let mut choose = Rational::one();
        let mut sum = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            sum += &choose * bk;
            choose *= rat((n + 1 - k) as i64, (k + 1) as i64);
        }
        b.push(-sum / choose);
    }
    b
}

/// `(λ-1)(λ-1-λ)...(λ-1-(n-1)λ)`, multiplied out directly.
fn lambda_minus_one_falling(n: usize) -> PolyLambda {
    (0..n).fold(PolyLambda::one(), |acc, i| {
        acc * (lambda() - PolyLambda::one() - lambda().scale_by(&rat(i as i64, 1)))
    })
}

/// `(λ-1)(λ-2)...(λ-n)`.
fn shifted_product(n: usize) -> PolyLambda {
    (1..=n).fold(PolyLambda::one(), |acc, j| acc * (lambda() - PolyLambda::constant(rat(j as i64, 1))))
}

fn suite(names: &str, config: SuiteConfig) -> Result<Vec<IdentityReport>> {
    run_suite(&parse_selection(names)?, &config)
}

fn summarize(reports: &[IdentityReport]) -> Outcome {
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} {}/{}", r.identity, r.cases_passed, r.cases_run))
        .collect();
    let cases: usize = reports.iter().map(|r| r.cases_run).sum();
    if failing.is_empty() {
        pass(format!("{} identities, {cases} cases", reports.len()))
    } else {
        fail(format!("failing: {}", failing.join(", ")))
    }
}

fn criterion_1() -> Result<Outcome> {
    let start = Instant::now();
    let composed = degenerate_exp(&PolyLambda::one(), 32).compose(&degenerate_log(32))?;
    let expected = LambdaSeries::one(32).add(&LambdaSeries::t(32));
    let elapsed = start.elapsed();
    let outcome = if composed == expected {
        pass(format!("order 32 in {elapsed:.1?}"))
    } else {
        fail("e_λ(log_λ(1+t)) ≠ 1+t")
    };
    Ok(within(outcome, elapsed, Duration::from_secs(1)))
}

fn criterion_2() -> Result<Outcome> {
    let tables = Tables::new(24);
    let gf = carlitz_beta_gf(25)?;
    for n in 0..=24 {
        if carlitz_beta(&tables, n)? != *gf.coeff(n) {
            return Ok(fail(format!("mismatch at n={n}")));
        }
    }
    Ok(pass("n ≤ 24"))
}

fn criterion_3() -> Result<Outcome> {
    let tables = Tables::new(20);
    let b = bernoulli_recurrence(20);
    if b[2] != rat(1, 6) || b[12] != rat(-691, 2730) {
        return Ok(fail("recurrence oracle disagrees with known values"));
    }
    for (n, bn) in b.iter().enumerate() {
        if carlitz_beta(&tables, n)?.eval(&Rational::zero()) != *bn {
            return Ok(fail(format!("mismatch at n={n}")));
        }
    }
    Ok(pass("n ≤ 20"))
}

fn criterion_4() -> Result<Outcome> {
    let tables = Tables::new(24);
    for n in 1..=24 {
        let mut lhs = PolyLambda::zero();
        for k in 0..=n {
            lhs = lhs + tables.stirling1(n, k)? * carlitz_beta(&tables, k)?;
        }
        if lhs != shifted_product(n).scale_by(&rat(1, n as i64 + 1)) {
            return Ok(fail(format!("mismatch at n={n}")));
        }
    }
    Ok(pass("n ≤ 24"))
}

fn criterion_5() -> Result<Outcome> {
    let start = Instant::now();
    let tables = Tables::new(16);
    for p in 0..=5 {
        let gf = gen_beta_hypergeometric_gf(p, 17)?;
        let integral = gen_beta_integral_gf(p, 17)?;
        for n in 0..=16 {
            let sum = gen_beta_stirling(&tables, n, p)?;
            let routes = [gf.coeff(n).clone(), gen_beta_eulerian(&tables, n, p)?, integral.coeff(n).clone()];
            if routes.iter().any(|r| *r != sum) {
                return Ok(fail(format!("four routes disagree at n={n}, p={p}")));
            }
        }
    }
    let mut mismatched = Vec::new();
    for p in 1..=4 {
        for n in 1..=12 {
            let expected = RatFun::from_poly(gen_beta(&tables, n, p)?);
            if gen_beta_rstirling(&tables, n, p)? != expected {
                mismatched.push((n, p));
            }
        }
    }
    let elapsed = start.elapsed();
    let outcome = match mismatched.first() {
        None => pass(format!("four routes for n ≤ 16, p ≤ 5; r-Stirling form for n ≤ 12, 1 ≤ p ≤ 4; {elapsed:.1?}")),
        Some((n, p)) => fail(format!(
            "four routes agree for n ≤ 16, p ≤ 5; r-Stirling form differs in {} of 48 cases, first at n={n}, p={p}",
            mismatched.len()
        )),
    };
    Ok(within(outcome, elapsed, Duration::from_secs(60)))
}

fn criterion_6() -> Result<Outcome> {
    let tables = Tables::new(20);
    for n in 0..=20 {
        if gen_beta(&tables, n, 0)? != carlitz_beta(&tables, n)? {
            return Ok(fail(format!("p=0 mismatch at n={n}")));
        }
        let closed = lambda_minus_one_falling(n);
        if gen_beta(&tables, n, -1)? != closed || gen_beta_stirling(&tables, n, -1)? != closed {
            return Ok(fail(format!("p=-1 mismatch at n={n}")));
        }
    }
    Ok(pass("n ≤ 20"))
}

fn criterion_7() -> Result<Outcome> {
    Ok(summarize(&suite("StirlingDuality,Eq26-27,Lemma38", SuiteConfig::new(12, 0, 16))?))
}

fn criterion_8() -> Result<Outcome> {
    let mut reports = suite("Eq11,Eq12,Eq13", SuiteConfig::new(10, 0, 16))?;
    reports.extend(suite("Eq30,ClassicalLimits", SuiteConfig::new(12, 0, 16))?);
    Ok(summarize(&reports))
}

fn criterion_9() -> Result<Outcome> {
    let mut reports = suite("Thm7-vs-Thm9,Prop8", SuiteConfig::new(12, 4, 16))?;
    reports.extend(suite("Remark-add,Remark-diff", SuiteConfig::new(10, 4, 16))?);
    let asserted = summarize(&reports);
    let mult = suite("Remark-mult-A,Remark-mult-B", SuiteConfig::new(4, 4, 16))?;
    let readings: Vec<String> = mult
        .iter()
        .map(|r| format!("{} {}", r.identity, if r.passed() { "holds" } else { "fails" }))
        .collect();
    let exclusive = mult.len() == 2 && !(mult[0].passed() && mult[1].passed());
    let detail = format!("{}; {}", asserted.detail, readings.join(", "));
    Ok(if asserted.passed && exclusive { pass(detail) } else { fail(detail) })
}

fn criterion_10() -> Result<Outcome> {
    Ok(summarize(&suite("Eq8-Pfaff,Eq9-Euler", SuiteConfig::new(12, 4, 16))?))
}

fn criterion_11() -> Result<Outcome> {
    let config = SuiteConfig::default();
    let all: BTreeSet<IdentityId> = IdentityId::ALL.iter().copied().collect();
    let start = Instant::now();
    let clean = run_suite(&all, &config)?;
    let elapsed = start.elapsed();

    let tables = Tables::new(config.max_n);
    let s2 = tables.stirling2_table();
    let bumped = s2.get(3, 1)?.clone() + PolyLambda::one();
    let corrupted: TriangleTable<PolyLambda> = s2.with_entry(3, 1, bumped)?;
    let dirty = run_suite_with_tables(&Tables::from_stirling2(corrupted), &all, &config)?;

    let newly_failing: Vec<String> = clean
        .iter()
        .zip(&dirty)
        .filter(|(c, d)| c.passed() && !d.passed())
        .map(|(_, d)| d.identity.to_string())
        .collect();
    let outcome = if newly_failing.is_empty() {
        fail("corrupted S_{2,λ}(3,1) went undetected")
    } else {
        pass(format!("corrupted S_{{2,λ}}(3,1) caught by {} identities; clean run {elapsed:.1?}", newly_failing.len()))
    };
    Ok(within(outcome, elapsed, Duration::from_secs(120)))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("compositional inverse", criterion_1),
        ("carlitz numbers vs generating function", criterion_2),
        ("classical limit", criterion_3),
        ("Stirling-1 sum of carlitz numbers", criterion_4),
        ("route agreement for generalized numbers", criterion_5),
        ("p=0 and p=-1 reductions", criterion_6),
        ("Stirling duality and finite differences", criterion_7),
        ("Eulerian suite", criterion_8),
        ("polynomial suite", criterion_9),
        ("Pfaff and Euler transformations", criterion_10),
        ("mutation smoke test and suite runtime", criterion_11),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check().unwrap_or_else(|e| fail(format!("error: {e}")));
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        if !outcome.passed {
            failures += 1;
        }
        println!("criterion {:>2} {status} {name}: {}", i + 1, outcome.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
