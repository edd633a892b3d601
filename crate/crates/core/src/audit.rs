//! Randomized audit of the structural properties on random MT codes.
//!
//! Trial `t` draws from `ChaCha8Rng` seeded with the audit seed on stream
//! `t`, so every trial is independent of scheduling and the summary is
//! identical for a given seed whether trials run in parallel or not.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::mt::{MtSpec, Verdict};
use crate::poly::Poly;
use crate::specfile::write_spec;

#[derive(Clone, Debug)]
pub struct AuditBounds {
    /// `(p, degree, modulus)` of each candidate field.
    pub fields: Vec<(u32, usize, Vec<u32>)>,
    pub max_blocks: usize,
    pub max_length: usize,
    pub max_generators: usize,
}

impl Default for AuditBounds {
    fn default() -> Self {
        AuditBounds {
            fields: vec![(2, 1, vec![0, 1]), (3, 1, vec![0, 1]), (2, 2, vec![1, 1, 1]), (5, 1, vec![0, 1])],
            max_blocks: 3,
            max_length: 8,
            max_generators: 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    FormulaMatchesRank,
    VerdictMatchesHull,
    DimensionsAddUp,
    ShiftInvariance,
    HullOfDual,
    DirectSum,
    LegacyImpliesVerdict,
    LegacyImpliesLcd,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::FormulaMatchesRank => "formula dimension equals rank",
            Property::VerdictMatchesHull => "verdict LCD iff hull is zero (coprime quotients)",
            Property::DimensionsAddUp => "dim C + dim C^perp = n",
            Property::ShiftInvariance => "code and dual are shift-invariant",
            Property::HullOfDual => "hull(C) = hull(C^perp)",
            Property::DirectSum => "direct-sum certificate (coprime quotients)",
            Property::LegacyImpliesVerdict => "legacy condition implies verdict LCD",
            Property::LegacyImpliesLcd => "legacy condition implies LCD",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub trial: u64,
    pub property: Property,
    pub detail: String,
    /// The offending spec in spec-file format.
    pub reproducer: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrialOutcome {
    pub coprime: bool,
    pub formula_agrees: bool,
    pub verdict_agrees: bool,
    pub verdict_lcd: bool,
    pub legacy: bool,
    pub exact_lcd: bool,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditSummary {
    pub seed: u64,
    pub trials: u64,
    pub formula_agreements: u64,
    pub coprime_cases: u64,
    pub verdict_agreements: u64,
    pub verdict_lcd: u64,
    pub legacy_lcd: u64,
    pub exact_lcd: u64,
    pub violations: Vec<Violation>,
}

impl AuditSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self) -> String {
        let mut o = String::new();
        let _ = writeln!(o, "seed                       {}", self.seed);
        let _ = writeln!(o, "trials                     {}", self.trials);
        let _ = writeln!(o, "formula = rank             {}/{}", self.formula_agreements, self.trials);
        let _ = writeln!(o, "coprime-quotient cases     {}", self.coprime_cases);
        let _ = writeln!(o, "verdict = hull among them  {}/{}", self.verdict_agreements, self.coprime_cases);
        let _ = writeln!(o, "LCD by verdict             {}", self.verdict_lcd);
        let _ = writeln!(o, "LCD by legacy condition    {}", self.legacy_lcd);
        let _ = writeln!(o, "LCD exactly                {}", self.exact_lcd);
        let _ = writeln!(o, "violations                 {}", self.violations.len());
        for v in &self.violations {
            let _ = writeln!(o, "\nviolation in trial {}: {}: {}", v.trial, v.property.name(), v.detail);
            let _ = write!(o, "{}", v.reproducer);
        }
        o
    }
}

fn random_poly<R: Rng>(rng: &mut R, f: &Field, max_len: usize) -> Poly {
    let q = f.order();
    let len = rng.random_range(0..=max_len);
    let coeffs = (0..len).map(|_| f.elem_from_code(rng.random_range(0..q)).expect("in range")).collect();
    Poly::new(f, coeffs)
}

/// A generator entry: zero, a random polynomial, or a random multiple of a
/// random divisor of the block binomial.
fn random_entry<R: Rng>(rng: &mut R, f: &Field, binomial: &Poly, m: usize) -> Poly {
    let p = match rng.random_range(0..3) {
        0 => Poly::zero(f),
        1 => random_poly(rng, f, m),
        _ => {
            let d = binomial.gcd(&random_poly(rng, f, m)).expect("binomial is nonzero");
            d.mul(&random_poly(rng, f, 3)).expect("same field")
        }
    };
    p.rem(binomial).expect("binomial is nonzero")
}

/// The random code description drawn for trial `trial`.
pub fn random_spec(bounds: &AuditBounds, seed: u64, trial: u64) -> Result<MtSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let (p, d, modulus) = &bounds.fields[rng.random_range(0..bounds.fields.len())];
    let f = Field::new(*p, *d, modulus)?;
    let ell = rng.random_range(1..=bounds.max_blocks);
    let rho = rng.random_range(1..=bounds.max_generators);
    let lengths: Vec<usize> = (0..ell).map(|_| rng.random_range(1..=bounds.max_length)).collect();
    let nonzero: Vec<Elem> = f.nonzero_elements().collect();
    let shifts: Vec<Elem> = (0..ell).map(|_| nonzero[rng.random_range(0..nonzero.len())]).collect();
    let gens = (0..rho)
        .map(|_| {
            (0..ell)
                .map(|i| random_entry(&mut rng, &f, &Poly::binomial(&f, lengths[i], shifts[i]), lengths[i]))
                .collect()
        })
        .collect();
    MtSpec::new(&f, lengths, shifts, gens)
}

/// Evaluates every audited property on one spec.
pub fn check_spec(spec: &MtSpec, trial: u64) -> TrialOutcome {
    let mut out = TrialOutcome::default();
    let violate = |out: &mut TrialOutcome, property: Property, detail: String| {
        out.violations.push(Violation { trial, property, detail, reproducer: write_spec(spec) });
    };
    let code = spec.expand();
    let n = spec.n();

    match spec.dimension_formula() {
        Ok(_) => out.formula_agrees = true,
        Err(e) => violate(&mut out, Property::FormulaMatchesRank, e.to_string()),
    }

    let dual = match spec.dual() {
        Ok(d) => d.code,
        Err(e) => {
            violate(&mut out, Property::ShiftInvariance, e.to_string());
            code.dual()
        }
    };
    for r in 0..code.basis().rows() {
        let shifted = spec.shift(code.basis().row(r)).expect("length n");
        if !code.contains(&shifted).expect("length n") {
            violate(&mut out, Property::ShiftInvariance, format!("basis row {} leaves the code", r + 1));
            break;
        }
    }
    if code.dimension() + dual.dimension() != n {
        violate(
            &mut out,
            Property::DimensionsAddUp,
            format!("{} + {} != {n}", code.dimension(), dual.dimension()),
        );
    }
    let hull = code.hull();
    if !hull.same_code(&dual.hull()).expect("same length") {
        violate(&mut out, Property::HullOfDual, format!("hull dimensions {} and {}", hull.dimension(), dual.hull_dimension()));
    }

    out.exact_lcd = match code.is_lcd() {
        Ok(b) => b,
        Err(e) => {
            violate(&mut out, Property::VerdictMatchesHull, e.to_string());
            hull.dimension() == 0
        }
    };
    let verdict = spec.lcd_verdict().verdict;
    out.verdict_lcd = verdict == Verdict::Lcd;
    out.coprime = verdict != Verdict::Inconclusive;
    if out.coprime {
        out.verdict_agrees = out.verdict_lcd == out.exact_lcd;
        if !out.verdict_agrees {
            violate(
                &mut out,
                Property::VerdictMatchesHull,
                format!("verdict {verdict}, hull dimension {}", hull.dimension()),
            );
        }
        if let Err(e) = spec.direct_sum_check() {
            violate(&mut out, Property::DirectSum, e.to_string());
        }
    }

    out.legacy = spec.legacy_lcd_condition();
    if out.legacy && !out.verdict_lcd {
        violate(&mut out, Property::LegacyImpliesVerdict, format!("verdict {verdict}"));
    }
    if out.legacy && !out.exact_lcd {
        violate(&mut out, Property::LegacyImpliesLcd, format!("hull dimension {}", hull.dimension()));
    }
    out
}

fn run_trial(bounds: &AuditBounds, seed: u64, trial: u64) -> Result<TrialOutcome> {
    Ok(check_spec(&random_spec(bounds, seed, trial)?, trial))
}

fn summarize(seed: u64, outcomes: Vec<TrialOutcome>) -> AuditSummary {
    let mut s = AuditSummary {
        seed,
        trials: outcomes.len() as u64,
        formula_agreements: 0,
        coprime_cases: 0,
        verdict_agreements: 0,
        verdict_lcd: 0,
        legacy_lcd: 0,
        exact_lcd: 0,
        violations: Vec::new(),
    };
    for o in outcomes {
        s.formula_agreements += o.formula_agrees as u64;
        s.coprime_cases += o.coprime as u64;
        s.verdict_agreements += o.verdict_agrees as u64;
        s.verdict_lcd += o.verdict_lcd as u64;
        s.legacy_lcd += o.legacy as u64;
        s.exact_lcd += o.exact_lcd as u64;
        s.violations.extend(o.violations);
    }
    s
}

fn check_trials(trials: u64) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidSpec("the audit needs at least one trial".into()));
    }
    Ok(())
}

pub fn run_audit_sequential(bounds: &AuditBounds, trials: u64, seed: u64) -> Result<AuditSummary> {
    check_trials(trials)?;
    let outcomes = (0..trials).map(|t| run_trial(bounds, seed, t)).collect::<Result<Vec<_>>>()?;
    Ok(summarize(seed, outcomes))
}

#[cfg(feature = "parallel")]
pub fn run_audit_parallel(bounds: &AuditBounds, trials: u64, seed: u64) -> Result<AuditSummary> {
    use rayon::prelude::*;
    check_trials(trials)?;
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(bounds, seed, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(seed, outcomes))
}

pub fn run_audit(bounds: &AuditBounds, trials: u64, seed: u64) -> Result<AuditSummary> {
    #[cfg(feature = "parallel")]
    {
        run_audit_parallel(bounds, trials, seed)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_audit_sequential(bounds, trials, seed)
    }
}
