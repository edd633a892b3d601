//! Built-in fixture suite: worked codes with every quantitative claim about
//! them checked against exact computation.
//!
//! A claim ends in one of three states. `Pass` and `Fail` are the obvious
//! ones; `Erratum` marks a printed value that exact arithmetic contradicts
//! while an independent route confirms the computed value. Errata do not
//! fail a fixture but are always shown.

use std::fmt;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::matrix::Matrix;
use crate::mt::{Claim, MtSpec, Verdict};
use crate::poly::Poly;
use crate::specfile::parse_spec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Erratum,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Erratum => "erratum",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClaimResult {
    pub claim: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct FixtureReport {
    pub name: &'static str,
    pub claims: Vec<ClaimResult>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn errata(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| c.status == Status::Erratum)
    }

    pub fn claim(&self, name: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim == name)
    }

    /// The first failing claim as an error naming fixture and claim.
    pub fn into_result(self) -> Result<FixtureReport> {
        if let Some(c) = self.failures().next() {
            return Err(Error::CertificateFailure(format!(
                "fixture {}: claim {}: {}",
                self.name, c.claim, c.detail
            )));
        }
        Ok(self)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Upper bound on `q^k` for exhaustive distance enumeration.
    pub distance_cap: u128,
    /// Also enumerate the distance of codes whose distance the suite
    /// otherwise settles from the parity-check matrix.
    pub exhaustive: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { distance_cap: crate::code::DEFAULT_CAP, exhaustive: false }
    }
}

type CheckFn = fn(&MtSpec, &mut Checker) -> Result<()>;

pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub source: &'static str,
    check: CheckFn,
}

impl fmt::Debug for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fixture").field("name", &self.name).finish()
    }
}

impl Fixture {
    pub fn spec(&self) -> Result<MtSpec> {
        parse_spec(self.source)
    }

    pub fn run(&self, opts: &SuiteOptions) -> FixtureReport {
        match self.spec() {
            Ok(spec) => self.run_on(&spec, opts),
            Err(e) => FixtureReport {
                name: self.name,
                claims: vec![ClaimResult {
                    claim: "spec parses".into(),
                    status: Status::Fail,
                    detail: e.to_string(),
                }],
            },
        }
    }

    /// Runs this fixture's claims against an arbitrary spec; used for
    /// negative controls.
    pub fn run_on(&self, spec: &MtSpec, opts: &SuiteOptions) -> FixtureReport {
        let mut c = Checker { claims: Vec::new(), opts: *opts };
        if let Err(e) = (self.check)(spec, &mut c) {
            c.fail("computation completes", e.to_string());
        }
        FixtureReport { name: self.name, claims: c.claims }
    }
}

/// Replaces the second shift constant by a different nonzero element
/// (its inverse when that differs, otherwise its negative or the next
/// element).
pub fn tamper_second_shift(spec: &MtSpec) -> Result<MtSpec> {
    let f = spec.field();
    let i = 1.min(spec.ell() - 1);
    let lam = spec.shifts()[i];
    let candidates = [f.inv(lam).expect("nonzero"), f.neg(lam)];
    let new = candidates
        .into_iter()
        .find(|&c| c != lam)
        .or_else(|| f.nonzero_elements().into_iter().find(|&c| c != lam))
        .ok_or_else(|| Error::InvalidSpec("field has a single nonzero element".into()))?;
    let mut shifts = spec.shifts().to_vec();
    shifts[i] = new;
    MtSpec::new(f, spec.lengths().to_vec(), shifts, spec.generators().to_vec())
}

pub struct Checker {
    claims: Vec<ClaimResult>,
    opts: SuiteOptions,
}

impl Checker {
    fn push(&mut self, claim: &str, status: Status, detail: String) {
        self.claims.push(ClaimResult { claim: claim.to_string(), status, detail });
    }

    fn fail(&mut self, claim: &str, detail: String) {
        self.push(claim, Status::Fail, detail);
    }

    fn check(&mut self, claim: &str, ok: bool, detail: impl fmt::Display) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(claim, status, detail.to_string());
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, claim: &str, got: T, want: T) {
        let ok = got == want;
        let detail = if ok { format!("{got}") } else { format!("expected {want}, got {got}") };
        self.check(claim, ok, detail);
    }

    fn assoc(&mut self, claim: &str, got: &Poly, want: &Poly) {
        let ok = got.is_associate(want);
        let detail = if ok { format!("{got}") } else { format!("expected {want}, got {got}") };
        self.check(claim, ok, detail);
    }
}

fn poly(f: &Field, s: &str) -> Result<Poly> {
    Poly::parse(f, s)
}

fn matrix(f: &Field, rows: &[&str]) -> Result<Matrix> {
    Matrix::parse_rows(f, rows)
}

fn vector(f: &Field, s: &str) -> Result<Vec<Elem>> {
    Ok(matrix(f, &[s])?.row(0).to_vec())
}

fn is_invariant(spec: &MtSpec, code: &LinearCode) -> Result<bool> {
    for r in 0..code.basis().rows() {
        if !code.contains(&spec.shift(code.basis().row(r))?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Claims shared by every fixture: invariance, and agreement of the
/// formula and rank dimensions with the expected value.
fn common(spec: &MtSpec, c: &mut Checker, dimension: usize) -> Result<LinearCode> {
    let code = spec.expand();
    c.check("invariant under the twisted shift", is_invariant(spec, &code)?, "every basis row shifts into the code");
    c.eq("dimension (rank)", code.dimension(), dimension);
    match spec.dimension_formula() {
        Ok(df) => c.eq("dimension (determinantal divisor)", df.dimension, dimension),
        Err(e) => c.fail("dimension (determinantal divisor)", e.to_string()),
    }
    Ok(code)
}

fn distance(c: &mut Checker, claim: &str, code: &LinearCode, want: usize) -> Result<()> {
    match code.min_distance(c.opts.distance_cap) {
        Ok(d) => c.eq(claim, d.unwrap_or(0), want),
        Err(Error::CapExceeded { required, cap }) => {
            c.fail(claim, format!("{required} codewords exceed the cap {cap}"))
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn refuted(c: &mut Checker, spec: &MtSpec, claim: Claim, label: &str) -> Result<()> {
    let report = spec.refuted_hypotheses()?;
    let ch = report.check(claim);
    c.check(
        label,
        ch.refuted(),
        format!("hypothesis {}, conclusion {}", ch.hypothesis, ch.conclusion),
    );
    Ok(())
}

fn mds(code: &LinearCode, d: usize) -> bool {
    d == code.length() - code.dimension() + 1
}

fn f5_two_generator(spec: &MtSpec, c: &mut Checker) -> Result<()> {
    let f = spec.field().clone();
    let code = common(spec, c, 11)?;
    let printed_g = matrix(
        &f,
        &[
            "1 0 0 0 0 0 0 0 0 0 0 3",
            "0 1 0 0 0 0 0 0 0 0 0 4",
            "0 0 1 0 0 0 0 0 0 0 0 2",
            "0 0 0 1 0 0 0 0 0 0 0 4",
            "0 0 0 0 1 0 0 0 0 0 0 2",
            "0 0 0 0 0 1 0 0 0 0 0 1",
            "0 0 0 0 0 0 1 0 0 0 0 3",
            "0 0 0 0 0 0 0 1 0 0 0 4",
            "0 0 0 0 0 0 0 0 1 0 0 2",
            "0 0 0 0 0 0 0 0 0 1 0 1",
            "0 0 0 0 0 0 0 0 0 0 1 3",
        ],
    )?;
    c.check("generator matrix", *code.basis() == printed_g, "systematic form matches");
    let dual = spec.dual()?.code;
    let h = vector(&f, "1 3 4 3 4 2 1 3 4 2 1 3")?;
    c.eq("dual dimension", dual.dimension(), 1);
    c.check("dual basis", dual.basis().row_space_contains(&h)? && dual.dimension() == 1, "(1,3,4,3,4,2,1,3,4,2,1,3)");
    c.eq("hull dimension", code.hull_dimension(), 1);
    c.check("hull spanned by dual basis", code.hull().basis().row_space_contains(&h)?, "hull = <H>");
    let gram_singular = !code.basis().gram().is_nonsingular()?;
    c.check("not LCD (Gram route)", gram_singular, "GG^T singular");
    c.check("not LCD (hull route)", code.hull_dimension() > 0, "hull nonzero");
    let d = spec.dimension_formula()?;
    c.assoc("determinantal divisor", &d.divisor, &poly(&f, "x + 2")?);

    // d = 2: a weight-2 codeword and no zero column in the parity check
    let w = code.low_weight_witness();
    let weight = w.as_ref().map(|w| w.iter().filter(|e| !e.is_zero()).count());
    let in_code = match &w {
        Some(w) => code.contains(w)?,
        None => false,
    };
    c.check("distance 2 (parity-check witness)", weight == Some(2) && in_code, format!("witness weight {weight:?}"));
    if c.opts.exhaustive {
        distance(c, "distance 2 (enumeration)", &code, 2)?;
    }
    distance(c, "dual distance 12", &dual, 12)?;

    let ds = spec.dual_spec()?;
    c.assoc("dual projection 1 generator", &ds.block_gen_poly(0), &poly(&f, "4 + 2*x + x^2")?);
    c.assoc(
        "dual projection 2 generator",
        &ds.block_gen_poly(1),
        &poly(&f, "1 + 3*x + 4*x^2 + 2*x^3 + x^4 + 3*x^5 + 4*x^6 + 2*x^7 + x^8")?,
    );
    for i in 0..2 {
        let p = ds.projection_code(i)?;
        let dp = p.min_distance(c.opts.distance_cap)?.unwrap_or(0);
        c.check(&format!("dual projection {} is MDS", i + 1), mds(&p, dp), format!("[{}, {}, {dp}]", p.length(), p.dimension()));
    }
    refuted(c, spec, Claim::SmallDimensionImpliesLcd, "refutes: small dual dimension implies LCD")?;
    refuted(c, spec, Claim::NontrivialProjections, "refutes: nontrivial projections imply LCD")?;
    Ok(())
}

/// Independent recomputation of `G G^T` over `F_3[w]/(w^2 + 2w + 2)` with
/// elements as coefficient pairs; shares no code with the field tables.
fn f9_gram_by_pairs(rows: &[&str]) -> Vec<Vec<(u8, u8)>> {
    fn mul(x: (u8, u8), y: (u8, u8)) -> (u8, u8) {
        // w^2 = w + 1
        let (e, f, g) = (x.0 * y.0, x.0 * y.1 + x.1 * y.0, x.1 * y.1);
        ((e + g) % 3, (f + g) % 3)
    }
    let mut powers = vec![(1u8, 0u8)];
    for _ in 1..8 {
        powers.push(mul(*powers.last().expect("nonempty"), (0, 1)));
    }
    let lit = |s: &str| match s {
        "0" => (0, 0),
        "1" => (1, 0),
        "2" => (2, 0),
        "w" => powers[1],
        _ => powers[s[2..].parse::<usize>().expect("w^k")],
    };
    let g: Vec<Vec<(u8, u8)>> = rows.iter().map(|r| r.split_whitespace().map(lit).collect()).collect();
    g.iter()
        .map(|a| {
            g.iter()
                .map(|b| {
                    a.iter().zip(b).fold((0, 0), |acc, (&x, &y)| {
                        let p = mul(x, y);
                        ((acc.0 + p.0) % 3, (acc.1 + p.1) % 3)
                    })
                })
                .collect()
        })
        .collect()
}

const F9_G: [&str; 4] = [
    "1 0 0 0 w^3 w^7 w^6 0 w^7 w^5 w^7 w^5 1 w^6 1 w^6",
    "0 1 0 0 0 w^3 w^7 w^6 2 w^7 w^5 w^7 w^5 1 w^6 1",
    "0 0 1 0 w^5 0 w^3 w^7 w^6 2 w^7 w^5 w^7 w^5 1 w^6",
    "0 0 0 1 w^6 w^5 0 w^3 2 w^6 2 w^7 w^5 w^7 w^5 1",
];

/// The Gram matrix as printed alongside the worked example.
pub const F9_PRINTED_GRAM: [&str; 4] = ["w^5 w^7 0 w^3", "w^7 w^7 1 w^5", "0 1 w^7 0", "w^3 w^5 0 w"];

fn f9_three_block(spec: &MtSpec, c: &mut Checker) -> Result<()> {
    let f = spec.field().clone();
    let code = common(spec, c, 4)?;
    let g = matrix(&f, &F9_G)?;
    c.check("generator matrix", *code.basis() == g, "systematic form matches");
    let gram = code.basis().gram();
    let printed = matrix(&f, &F9_PRINTED_GRAM)?;
    if gram == printed {
        c.check("GG^T equals printed matrix", true, "entrywise");
    } else {
        // pair-arithmetic oracle, compared through the coefficient tuples
        let oracle = f9_gram_by_pairs(&F9_G);
        let agrees = (0..4).all(|r| {
            (0..4).all(|s| {
                let co = f.coeffs(gram.get(r, s));
                (co[0] as u8, co[1] as u8) == oracle[r][s]
            })
        });
        let status = if agrees { Status::Erratum } else { Status::Fail };
        c.push(
            "GG^T equals printed matrix",
            status,
            format!(
                "printed matrix differs from exact G G^T; computed rows {}; independent pair arithmetic {}",
                format_rows(&f, &gram),
                if agrees { "agrees with the computed value" } else { "disagrees" }
            ),
        );
    }
    c.check("GG^T singular", !gram.is_nonsingular()?, "det = 0");
    c.check("GG^T nonzero (not self-orthogonal)", !gram.is_zero() && !code.is_self_orthogonal(), "");
    c.check("not LCD", !code.is_lcd()?, "");
    let hull_v = vector(&f, "1 1 w^7 w^3 0 1 w^7 0 w 0 0 w^7 w^2 0 0 1")?;
    let hull = code.hull();
    c.check("hull basis", hull.dimension() == 1 && hull.basis().row_space_contains(&hull_v)?, "one-dimensional, printed vector");
    distance(c, "distance 10", &code, 10)?;
    let dual_spec = spec.dual_spec()?;
    let dual = dual_spec.expand();
    c.check("dual neither LCD nor dual-containing", !dual.is_lcd()? && !dual.is_dual_containing(), "");
    refuted(c, spec, Claim::DimensionAtMinLength, "refutes: dimension min m_i implies LCD or self-orthogonal")?;
    refuted(
        c,
        &dual_spec,
        Claim::DualDimensionAtMinLength,
        "refutes (on the dual): dual dimension min m_i implies LCD or dual-containing",
    )?;
    Ok(())
}

fn format_rows(f: &Field, m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let es: Vec<String> = m.row(r).iter().map(|&e| f.format_elem(e)).collect();
            format!("[{}]", es.join(" "))
        })
        .collect();
    rows.join(" ")
}

fn f5_repeated_root(spec: &MtSpec, c: &mut Checker) -> Result<()> {
    let f = spec.field().clone();
    let code = common(spec, c, 2)?;
    let g = matrix(&f, &["1 0 1 4 2 0 2 3 4 4", "0 1 4 2 2 2 3 4 4 0"])?;
    c.check("generator matrix", *code.basis() == g, "systematic form matches");
    let hull = code.hull();
    let hv = vector(&f, "0 1 4 2 2 2 3 4 4 0")?;
    c.check("hull basis", hull.dimension() == 1 && hull.basis().row_space_contains(&hv)?, "(0,1,4,2,2,2,3,4,4,0)");
    let cube = poly(&f, "x + 2")?;
    let cube = cube.mul(&cube)?.mul(&cube)?;
    let square = poly(&f, "x^2 + 4*x + 4")?;
    for i in 0..2 {
        c.assoc(&format!("g_{} = (x+2)^3", i + 1), &spec.block_gen_poly(i), &cube);
        c.assoc(&format!("quotient {} = (x+2)^2", i + 1), &spec.quotient(i), &square);
        let p = spec.projection_code(i)?;
        let d = p.min_distance(c.opts.distance_cap)?.unwrap_or(0);
        c.check(
            &format!("projection {} is [5,2,4] MDS", i + 1),
            (p.length(), p.dimension(), d) == (5, 2, 4),
            format!("[{}, {}, {d}]", p.length(), p.dimension()),
        );
    }
    let cop = spec.coprimality();
    let shared = cop.quotients[0].gcd(&cop.quotients[1])?;
    c.assoc("quotients share (x+2)^2", &shared, &square);
    let v = spec.lcd_verdict();
    c.eq("verdict", v.verdict, Verdict::Inconclusive);
    c.check("exactly not LCD", !code.is_lcd()?, "hull dimension 1");
    distance(c, "distance 8", &code, 8)?;
    refuted(c, spec, Claim::SmallDimensionImpliesLcd, "refutes: small dimension implies LCD")?;
    refuted(c, spec, Claim::NontrivialProjections, "refutes: nontrivial projections imply LCD")?;
    Ok(())
}

fn f4_unit_generator(spec: &MtSpec, c: &mut Checker) -> Result<()> {
    let f = spec.field().clone();
    let code = common(spec, c, 4)?;
    let g = matrix(
        &f,
        &[
            "1 0 0 0 w w 1 w^2 w^2 w^2 w 1",
            "0 1 0 0 w w w 1 w^2 w^2 w^2 w",
            "0 0 1 0 w^2 w w w 1 w^2 w^2 w^2",
            "0 0 0 1 1 w^2 w w w 1 w^2 w^2",
        ],
    )?;
    c.check("generator matrix", *code.basis() == g, "systematic form matches");
    let df = spec.dimension_formula()?;
    c.assoc("determinantal divisor", &df.divisor, &poly(&f, "x^8 + w")?);
    let want = [
        "x^11 + w*x^10 + w^2*x^9 + w^2*x^8 + w*x^3 + w^2*x^2 + x + 1",
        "x^8 + w",
        "x^12 + w^2*x^8 + w*x^4 + 1",
    ];
    let want: Vec<Poly> = want.iter().map(|s| poly(&f, s)).collect::<Result<_>>()?;
    c.check("2x2 minors", same_set(&df.minors, &want), format!("{} minors", df.minors.len()));
    let hv = vector(&f, "1 0 0 w^2 1 0 0 w w 0 0 w^2")?;
    let hull = code.hull();
    c.check("hull basis", hull.dimension() == 1 && hull.basis().row_space_contains(&hv)?, "printed vector");
    c.check("not LCD", !code.is_lcd()?, "");
    c.check("not self-orthogonal", !code.is_self_orthogonal(), "GG^T nonzero");
    distance(c, "distance 6", &code, 6)?;
    refuted(c, spec, Claim::DimensionAtMinLength, "refutes: dimension min m_i implies LCD or self-orthogonal")?;
    refuted(
        c,
        &spec.dual_spec()?,
        Claim::DualDimensionAtMinLength,
        "refutes (on the dual): dual dimension min m_i implies LCD or dual-containing",
    )?;
    Ok(())
}

/// Multiset equality up to monic association.
fn same_set(got: &[Poly], want: &[Poly]) -> bool {
    if got.len() != want.len() {
        return false;
    }
    let mut used = vec![false; want.len()];
    got.iter().all(|g| {
        match want.iter().enumerate().position(|(j, w)| !used[j] && g.is_associate(w)) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

fn f4_coprime_quotients(spec: &MtSpec, c: &mut Checker) -> Result<()> {
    let f = spec.field().clone();
    let code = common(spec, c, 5)?;
    let g = matrix(
        &f,
        &[
            "1 0 0 1 1 0 0 0 0 0",
            "0 1 0 w w^2 0 0 0 0 0",
            "0 0 1 1 w^2 0 0 0 0 0",
            "0 0 0 0 0 1 0 w^2 w^2 1",
            "0 0 0 0 0 0 1 1 w 1",
        ],
    )?;
    c.check("generator matrix", *code.basis() == g, "systematic form matches");
    let g2 = poly(&f, "x + w^2")?.mul(&poly(&f, "x^2 + x + w")?)?;
    c.assoc("g_1", &spec.block_gen_poly(0), &poly(&f, "w + w*x + x^2")?);
    c.assoc("g_2", &spec.block_gen_poly(1), &g2);
    c.assoc("quotient 1", &spec.quotient(0), &g2);
    c.assoc("quotient 2", &spec.quotient(1), &poly(&f, "x^2 + w*x + w")?);
    let cop = spec.coprimality();
    c.check("quotients coprime", cop.holds, "");
    let binoms_coprime = spec.binomial(0).gcd(&spec.binomial(1))?.degree() == Some(0);
    c.check("binomials not coprime", !binoms_coprime, "");
    c.eq("verdict", spec.lcd_verdict().verdict, Verdict::Lcd);
    c.check("GG^T nonsingular", code.basis().gram().is_nonsingular()?, "");
    match spec.direct_sum_check() {
        Ok(ds) => c.check("direct sum 3 + 2", ds.dimensions == [3, 2], format!("{:?}", ds.dimensions)),
        Err(e) => c.fail("direct sum 3 + 2", e.to_string()),
    }
    for i in 0..2 {
        let p = spec.projection_code(i)?;
        let d = p.min_distance(c.opts.distance_cap)?.unwrap_or(0);
        c.check(&format!("projection {} is MDS", i + 1), mds(&p, d), format!("[{}, {}, {d}]", p.length(), p.dimension()));
    }
    distance(c, "distance 3", &code, 3)?;
    c.check("legacy condition false", !spec.legacy_lcd_condition(), "binomials share a factor");
    Ok(())
}

fn f3_involutive_shifts(spec: &MtSpec, c: &mut Checker) -> Result<()> {
    let f = spec.field().clone();
    let code = common(spec, c, 10)?;
    let mut rows = vec![
        "1 0 0 0 2 0 0 0 0 0 0 0".to_string(),
        "0 1 0 0 1 0 0 0 0 0 0 0".to_string(),
        "0 0 1 0 2 0 0 0 0 0 0 0".to_string(),
        "0 0 0 1 1 0 0 0 0 0 0 0".to_string(),
    ];
    for j in 0..6 {
        let mut r = ["0"; 12];
        r[5 + j] = "1";
        r[11] = "2";
        rows.push(r.join(" "));
    }
    let rows: Vec<&str> = rows.iter().map(String::as_str).collect();
    c.check("generator matrix", *code.basis() == matrix(&f, &rows)?, "systematic form matches");
    c.assoc("g_1 = x + 1", &spec.block_gen_poly(0), &poly(&f, "x + 1")?);
    c.assoc("g_2 = x - 1", &spec.block_gen_poly(1), &poly(&f, "x - 1")?);
    c.assoc("quotient 1", &spec.quotient(0), &poly(&f, "x^4 - x^3 + x^2 - x + 1")?);
    c.assoc("quotient 2", &spec.quotient(1), &poly(&f, "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1")?);
    c.check("quotients coprime", spec.coprimality().holds, "");
    let involutive = spec.shifts().iter().all(|&l| f.mul(l, l) == Elem::ONE);
    c.check("both shifts square to 1", involutive, "");
    for i in 0..2 {
        let g = spec.block_gen_poly(i);
        let ok = g.is_self_reciprocal()? && g.gcd(&spec.quotient(i))?.degree() == Some(0);
        c.check(&format!("g_{} self-reciprocal and coprime to its quotient", i + 1), ok, "");
    }
    c.eq("verdict", spec.lcd_verdict().verdict, Verdict::Lcd);
    c.check("GG^T nonsingular", code.basis().gram().is_nonsingular()?, "");
    match spec.direct_sum_check() {
        Ok(ds) => {
            let shapes: Vec<(usize, usize)> = ds.components.iter().map(|p| (p.length(), p.dimension())).collect();
            c.check("direct sum [5,4] + [7,6]", shapes == [(5, 4), (7, 6)], format!("{shapes:?}"));
            for (i, p) in ds.components.iter().enumerate() {
                let d = p.min_distance(c.opts.distance_cap)?.unwrap_or(0);
                c.check(&format!("component {} is MDS", i + 1), mds(p, d), format!("d = {d}"));
            }
        }
        Err(e) => c.fail("direct sum [5,4] + [7,6]", e.to_string()),
    }
    distance(c, "distance 2", &code, 2)?;
    c.check("legacy condition false", !spec.legacy_lcd_condition(), "shifts are involutive");
    Ok(())
}

fn f5_two_generator_minors(spec: &MtSpec, c: &mut Checker) -> Result<()> {
    let f = spec.field().clone();
    let df = match spec.dimension_formula() {
        Ok(df) => df,
        Err(e) => {
            c.fail("dimension formula agrees with rank", e.to_string());
            return Ok(());
        }
    };
    let want = [
        "3*x^10 + 3*x^9 + 2*x^8 + x^7 + 2*x^6 + 2*x^5 + x^4 + x^3 + 3*x^2 + 4*x + 4",
        "2*x^11 + 4*x^9 + 4*x^7 + x^6 + 4*x^5 + 3*x^3 + x^2 + 4*x + 3",
        "3*x^11 + 4*x^10 + x^9 + x^2 + 3*x + 2",
        "4*x^11 + 3*x^10 + 3*x^9 + 2*x^8 + 4*x^7 + 1",
        "4*x^10 + x^9 + 3*x + 2",
        "x^12 + 3*x^9 + 2*x^3 + 1",
    ];
    let want: Vec<Poly> = want.iter().map(|s| poly(&f, s)).collect::<Result<_>>()?;
    c.check("six 2x2 minors", same_set(&df.minors, &want), format!("{} minors", df.minors.len()));
    c.assoc("determinantal divisor", &df.divisor, &poly(&f, "x + 2")?);
    c.eq("dimension (determinantal divisor)", df.dimension, 11);
    c.eq("dimension (rank)", df.rank, 11);
    Ok(())
}

fn f4_trivial_projections(spec: &MtSpec, c: &mut Checker) -> Result<()> {
    let code = common(spec, c, 5)?;
    let ds = spec.dual_spec()?;
    let trivial = (0..2).all(|i| spec.block_gen_poly(i).degree() == Some(0) && ds.block_gen_poly(i).degree() == Some(0));
    c.check("all four projections are the full space", trivial, "");
    c.check("coprimality fails", !spec.coprimality().holds, "");
    c.check("coprimality fails for the dual", !ds.coprimality().holds, "");
    c.eq("verdict", spec.lcd_verdict().verdict, Verdict::Inconclusive);
    c.check("exactly LCD (GG^T nonsingular)", code.basis().gram().is_nonsingular()?, "");
    c.check("exactly LCD (hull zero)", code.hull_dimension() == 0, "");
    distance(c, "distance 5", &code, 5)?;
    Ok(())
}

fn f5_two_generator_dual(spec: &MtSpec, c: &mut Checker) -> Result<()> {
    let f = spec.field().clone();
    let code = common(spec, c, 1)?;
    let primal = parse_spec(include_str!("../fixtures/f5_two_generator.spec"))?;
    c.check("is the dual of the two-generator code", code.same_code(&primal.expand().dual())?, "");
    c.assoc("g_1", &spec.block_gen_poly(0), &poly(&f, "4 + 2*x + x^2")?);
    let x3 = poly(&f, "x + 3")?;
    for i in 0..2 {
        c.assoc(&format!("quotient {} = x + 3", i + 1), &spec.quotient(i), &x3);
    }
    let cop = spec.coprimality();
    let shared = cop.witness.as_ref().map(|w| w.common.is_associate(&x3)).unwrap_or(false);
    c.check("quotients share x + 3", !cop.holds && shared, "");
    c.check("primal fails coprimality too", !primal.coprimality().holds, "");
    c.check("not LCD", !code.is_lcd()?, "");
    distance(c, "distance 12", &code, 12)?;
    Ok(())
}

pub const FIXTURES: [Fixture; 9] = [
    Fixture {
        name: "f5-two-generator",
        summary: "(2,3)-MT over F_5, lengths (3,9): dual dimension 1 < min m_i yet not LCD; dual projections nontrivial",
        source: include_str!("../fixtures/f5_two_generator.spec"),
        check: f5_two_generator,
    },
    Fixture {
        name: "f9-three-block",
        summary: "(w^7,w^7,w^6)-MT over F_9, lengths (4,4,8): dimension 4 = min m_i, neither LCD nor self-orthogonal",
        source: include_str!("../fixtures/f9_three_block.spec"),
        check: f9_three_block,
    },
    Fixture {
        name: "f5-repeated-root",
        summary: "(3,3)-MT over F_5, lengths (5,5): projections <(x+2)^3>, quotients share (x+2)^2, not LCD",
        source: include_str!("../fixtures/f5_repeated_root.spec"),
        check: f5_repeated_root,
    },
    Fixture {
        name: "f4-unit-generator",
        summary: "(w^2,w)-MT over F_4, lengths (4,8): divisor x^8 + w gives dimension 4, not LCD",
        source: include_str!("../fixtures/f4_unit_generator.spec"),
        check: f4_unit_generator,
    },
    Fixture {
        name: "f4-coprime-quotients",
        summary: "(w,w)-MT over F_4, lengths (5,5): binomials share factors, quotients coprime, LCD",
        source: include_str!("../fixtures/f4_coprime_quotients.spec"),
        check: f4_coprime_quotients,
    },
    Fixture {
        name: "f3-involutive-shifts",
        summary: "(2,1)-MT over F_3, lengths (5,7): shifts square to 1, self-reciprocal clauses pass, LCD",
        source: include_str!("../fixtures/f3_involutive_shifts.spec"),
        check: f3_involutive_shifts,
    },
    Fixture {
        name: "f5-two-generator-minors",
        summary: "dimension of the two-generator F_5 code from its six 2x2 minors",
        source: include_str!("../fixtures/f5_two_generator.spec"),
        check: f5_two_generator_minors,
    },
    Fixture {
        name: "f4-trivial-projections",
        summary: "(w,w)-MT over F_4, lengths (5,5): coprimality fails yet the code is LCD",
        source: include_str!("../fixtures/f4_trivial_projections.spec"),
        check: f4_trivial_projections,
    },
    Fixture {
        name: "f5-two-generator-dual",
        summary: "(3,2)-MT dual of the two-generator F_5 code: both quotients equal x + 3",
        source: include_str!("../fixtures/f5_two_generator_dual.spec"),
        check: f5_two_generator_dual,
    },
];

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

pub fn run_suite(opts: &SuiteOptions) -> Vec<FixtureReport> {
    FIXTURES.iter().map(|f| f.run(opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        for (i, a) in FIXTURES.iter().enumerate() {
            assert!(FIXTURES[i + 1..].iter().all(|b| b.name != a.name));
            assert!(find(a.name).is_some());
        }
    }

    #[test]
    fn every_fixture_passes() {
        for r in run_suite(&SuiteOptions::default()) {
            let fails: Vec<_> = r.failures().map(|c| format!("{}: {}", c.claim, c.detail)).collect();
            assert!(r.passed(), "{}: {fails:?}", r.name);
        }
    }

    #[test]
    fn only_the_printed_gram_is_flagged() {
        let reports = run_suite(&SuiteOptions::default());
        let errata: Vec<(&str, &str)> = reports
            .iter()
            .flat_map(|r| r.errata().map(move |c| (r.name, c.claim.as_str())))
            .collect();
        assert_eq!(errata, vec![("f9-three-block", "GG^T equals printed matrix")]);
    }

    #[test]
    fn tampered_shift_fails_with_named_claim() {
        for fx in &FIXTURES {
            let spec = tamper_second_shift(&fx.spec().unwrap()).unwrap();
            let report = fx.run_on(&spec, &SuiteOptions::default());
            assert!(!report.passed(), "{} survived tampering", fx.name);
            let err = report.into_result().unwrap_err().to_string();
            assert!(err.contains(fx.name) && err.contains("claim"), "{err}");
        }
    }

    #[test]
    fn pair_oracle_matches_field_tables() {
        let f = Field::new(3, 2, &[2, 2, 1]).unwrap();
        let oracle = f9_gram_by_pairs(&F9_G);
        let gram = matrix(&f, &F9_G).unwrap().gram();
        for (r, row) in oracle.iter().enumerate() {
            for (s, &(a, b)) in row.iter().enumerate() {
                assert_eq!(gram.get(r, s), f.from_coeffs(&[a as u32, b as u32]).unwrap());
            }
        }
    }
}
