//! One PASS/FAIL line per acceptance criterion.
//!
//! Runs without the test harness so the lines always print. Exits nonzero
//! if any criterion fails other than the printed Gram matrix of the F_9
//! example, whose erratum evidence is asserted instead.

use std::time::{Duration, Instant};

use mtcodes::audit::{run_audit, AuditBounds};
use mtcodes::fixtures::{find, FixtureReport, SuiteOptions, Status, F9_PRINTED_GRAM};
use mtcodes::{Matrix, Poly, Verdict};

struct Line {
    criterion: usize,
    pass: bool,
    text: String,
}

fn run(name: &str, opts: &SuiteOptions) -> (FixtureReport, Duration) {
    let t = Instant::now();
    let r = find(name).expect("fixture exists").run(opts);
    (r, t.elapsed())
}

/// Failing and erratum claims of a report, for the criterion line.
fn problems(r: &FixtureReport) -> Vec<String> {
    r.claims
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| format!("{}: {} ({})", r.name, c.claim, c.detail))
        .collect()
}

fn clean(r: &FixtureReport) -> bool {
    r.claims.iter().all(|c| c.status == Status::Pass)
}

fn line(criterion: usize, pass: bool, summary: &str, mut notes: Vec<String>) -> Line {
    let mut text = format!("criterion {criterion}: {} {summary}", if pass { "PASS" } else { "FAIL" });
    for n in notes.drain(..) {
        text.push_str("\n    ");
        text.push_str(&n);
    }
    Line { criterion, pass, text }
}

fn has_claim(r: &FixtureReport, name: &str) -> bool {
    r.claim(name).is_some_and(|c| c.status == Status::Pass)
}

fn criterion_1(opts: &SuiteOptions) -> Line {
    let (r, t) = run("f5-two-generator", opts);
    let (minors, _) = run("f5-two-generator-minors", opts);
    let mut notes = problems(&r);
    notes.extend(problems(&minors));
    let fast = t < Duration::from_secs(1);
    if !fast {
        notes.push(format!("took {t:?}"));
    }
    let mut pass = clean(&r) && clean(&minors) && fast && has_claim(&r, "distance 2 (parity-check witness)");

    let spec = find("f5-two-generator").unwrap().spec().unwrap();
    let code = spec.expand();
    let start = Instant::now();
    let d = code.min_distance(mtcodes::DEFAULT_CAP);
    let enum_time = start.elapsed();
    let enum_ok = matches!(d, Ok(Some(2))) && enum_time < Duration::from_secs(300);
    notes.push(format!("full enumeration of 5^11 codewords: d = {d:?} in {enum_time:.2?}"));
    pass &= enum_ok;
    line(1, pass, &format!("two-generator F_5 code: dim 11, dual dim 1, hull 1, divisor x+2, d=2 in {t:.2?}"), notes)
}

fn criterion_2(opts: &SuiteOptions) -> (Line, bool) {
    let (r, t) = run("f9-three-block", opts);
    let failures: Vec<String> = r.failures().map(|c| format!("{}: {}", c.claim, c.detail)).collect();
    let erratum = r.claim("GG^T equals printed matrix");
    // Erratum status means the independent recomputation agreed with ours
    let erratum_confirmed = erratum.is_some_and(|c| c.status == Status::Erratum);

    let spec = find("f9-three-block").unwrap().spec().unwrap();
    let f = spec.field().clone();
    let gram = spec.expand().basis().gram();
    let printed = Matrix::parse_rows(&f, &F9_PRINTED_GRAM).unwrap();
    let fast = t < Duration::from_secs(1);

    let mut notes = failures.clone();
    notes.push(format!(
        "printed GG^T (rank {}) differs from exact GG^T (rank {}); an independent pair-arithmetic \
         recomputation agrees with the exact value, so the entrywise clause cannot hold. Every other \
         clause (dim 4, singular nonzero Gram, hull vector, d=10, dual facts) passes in {t:.2?}",
        printed.rank(),
        gram.rank()
    ));
    let others_pass = failures.is_empty() && fast;
    (line(2, false, "F_9 three-block code: GG^T equals the printed matrix entrywise", notes), others_pass && erratum_confirmed)
}

fn fixture_line(criterion: usize, names: &[&str], opts: &SuiteOptions, budget: Duration, summary: &str) -> Line {
    let mut notes = Vec::new();
    let mut pass = true;
    for n in names {
        let (r, t) = run(n, opts);
        pass &= clean(&r) && t < budget;
        notes.extend(problems(&r));
        if t >= budget {
            notes.push(format!("{n} took {t:?}"));
        }
    }
    line(criterion, pass, summary, notes)
}

fn criterion_3(opts: &SuiteOptions) -> Line {
    let spec = find("f5-repeated-root").unwrap().spec().unwrap();
    let f = spec.field().clone();
    let root = Poly::parse(&f, "x + 2").unwrap();
    let cube = root.mul(&root).unwrap().mul(&root).unwrap();
    let direct = spec.block_gen_poly(0).is_associate(&cube)
        && spec.block_gen_poly(1).is_associate(&cube)
        && spec.lcd_verdict().verdict == Verdict::Inconclusive
        && spec.expand().hull_dimension() == 1;
    let mut l = fixture_line(3, &["f5-repeated-root"], opts, Duration::from_secs(5), "F_5 repeated-root code: g_i = (x+2)^3, verdict Inconclusive, not LCD, d=8");
    l.pass &= direct;
    l
}

fn criterion_5_6(opts: &SuiteOptions) -> (Line, Line) {
    let a = fixture_line(5, &["f4-coprime-quotients"], opts, Duration::from_secs(5), "F_4 coprime-quotient code: verdict LCD, direct sum 3+2, d=3, legacy false");
    let b = fixture_line(6, &["f3-involutive-shifts"], opts, Duration::from_secs(5), "F_3 involutive-shift code: self-reciprocal clauses pass, LCD, dim 10, d=2, legacy false");
    (a, b)
}

fn criterion_8(opts: &SuiteOptions) -> Line {
    let names = ["f5-two-generator", "f9-three-block", "f5-repeated-root", "f4-unit-generator"];
    let mut notes = Vec::new();
    let mut pass = true;
    for n in names {
        let (r, _) = run(n, opts);
        let refutations: Vec<_> = r.claims.iter().filter(|c| c.claim.starts_with("refutes:")).collect();
        if refutations.is_empty() {
            pass = false;
            notes.push(format!("{n}: no refutation recorded"));
        }
        for c in refutations {
            if c.status != Status::Pass {
                pass = false;
                notes.push(format!("{n}: {} ({})", c.claim, c.detail));
            }
        }
    }
    line(8, pass, "refuted implications: hypothesis true and conclusion false on every counterexample", notes)
}

fn criterion_9() -> Line {
    let t = Instant::now();
    let s = run_audit(&AuditBounds::default(), 1000, 42).expect("audit runs");
    let elapsed = t.elapsed();
    let mut notes: Vec<String> = s
        .violations
        .iter()
        .map(|v| format!("trial {}: {}: {}", v.trial, v.property.name(), v.detail))
        .collect();
    let witnessed = ["f4-coprime-quotients", "f3-involutive-shifts"].iter().all(|n| {
        let spec = find(n).unwrap().spec().unwrap();
        spec.lcd_verdict().verdict == Verdict::Lcd && !spec.legacy_lcd_condition()
    });
    let pass = s.passed()
        && s.formula_agreements == s.trials
        && s.verdict_agreements == s.coprime_cases
        && s.verdict_lcd > s.legacy_lcd
        && witnessed
        && elapsed < Duration::from_secs(120);
    notes.push(format!(
        "{} violations; LCD by verdict {}, by legacy condition {}; {elapsed:.2?}",
        s.violations.len(),
        s.verdict_lcd,
        s.legacy_lcd
    ));
    line(9, pass, "random audit, seed 42, 1000 trials", notes)
}

fn main() {
    let opts = SuiteOptions::default();
    let mut lines = vec![criterion_1(&opts)];
    let (c2, c2_evidence) = criterion_2(&opts);
    lines.push(c2);
    lines.push(criterion_3(&opts));
    lines.push(fixture_line(4, &["f4-unit-generator"], &opts, Duration::from_secs(5), "F_4 unit-generator code: dim 4 by rank and divisor x^8+w, not LCD, d=6"));
    let (c5, c6) = criterion_5_6(&opts);
    lines.push(c5);
    lines.push(c6);
    lines.push(fixture_line(
        7,
        &["f5-two-generator-dual", "f5-repeated-root", "f4-trivial-projections"],
        &opts,
        Duration::from_secs(5),
        "coprimality is sufficient, not necessary: shared quotient factors, and an LCD code failing it",
    ));
    lines.push(criterion_8(&opts));
    lines.push(criterion_9());

    for l in &lines {
        println!("{}", l.text);
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("{passed}/{} criteria pass", lines.len());

    assert!(c2_evidence, "printed Gram erratum is not confirmed by the independent recomputation");
    let unexpected: Vec<usize> = lines.iter().filter(|l| !l.pass && l.criterion != 2).map(|l| l.criterion).collect();
    assert!(unexpected.is_empty(), "failing criteria: {unexpected:?}");
}
