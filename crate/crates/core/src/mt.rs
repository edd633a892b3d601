//! Multi-twisted codes.
//!
//! A Λ-MT code with block lengths `(m_1, ..., m_l)` is a submodule of
//! `F_q[x]/(x^m_1 - λ_1) ⊕ ... ⊕ F_q[x]/(x^m_l - λ_l)`, described here by a
//! list of `ρ` generator tuples. This module materializes the code as a
//! [`LinearCode`] and evaluates the structural criteria on the generators:
//! block generator polynomials, the quotient coprimality condition, the
//! direct-sum decomposition, the LCD verdict for that condition, the
//! determinantal-divisor dimension formula, and the older sufficient
//! condition and refuted claims used for comparison.

use std::collections::VecDeque;
use std::fmt;

use crate::code::{CodeFacts, LinearCode};
use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::matrix::{EchelonBasis, Matrix};
use crate::poly::Poly;
use crate::polymat::PolyMatrix;

/// `(Λ, m, {g_k})` over one field. Generator entries are stored reduced
/// modulo `x^m_i - λ_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MtSpec {
    field: Field,
    lengths: Vec<usize>,
    shifts: Vec<Elem>,
    gens: Vec<Vec<Poly>>,
}

/// Constacyclic code `<g>` in `F_q[x]/(x^m - λ)`: rows `x^j g` for
/// `j < m - deg g`.
pub fn constacyclic_code(field: &Field, m: usize, lambda: Elem, g: &Poly) -> Result<LinearCode> {
    let modulus = Poly::binomial(field, m, lambda);
    let g = g.rem(&modulus)?;
    let g = if g.is_zero() { modulus.clone() } else { g.gcd(&modulus)? };
    let k = m - g.degree().expect("nonzero generator");
    let rows: Vec<Vec<Elem>> = (0..k)
        .map(|j| {
            let p = g.shift_up(j);
            (0..m).map(|c| p.coeff(c)).collect()
        })
        .collect();
    Ok(LinearCode::new(Matrix::from_rows(field, m, &rows)?))
}

/// Evidence that the dual code is invariant under the inverse shift.
#[derive(Clone, Debug)]
pub struct DualCode {
    pub code: LinearCode,
    pub inverse_shifts: Vec<Elem>,
}

#[derive(Clone, Debug)]
pub struct DimensionFormula {
    pub dimension: usize,
    pub divisor: Poly,
    pub minors: Vec<Poly>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonCoprimePair {
    pub i: usize,
    pub j: usize,
    pub common: Poly,
}

#[derive(Clone, Debug)]
pub struct Coprimality {
    pub holds: bool,
    /// `(x^m_i - λ_i) / g_i`
    pub quotients: Vec<Poly>,
    pub witness: Option<NonCoprimePair>,
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    /// `π_i(C)` as a constacyclic code of length `m_i`.
    pub components: Vec<LinearCode>,
    pub dimensions: Vec<usize>,
    pub idempotents: Vec<Poly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Lcd,
    NotLcd,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Lcd => "LCD",
            Verdict::NotLcd => "NotLCD",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Debug)]
pub enum VerdictWitness {
    /// Coprimality holds and every block with `λ_i^2 = 1` passes.
    Quotients(Vec<Poly>),
    /// Coprimality fails at this pair.
    NonCoprime(NonCoprimePair),
    /// Block with `λ_i^2 = 1` whose generator is not self-reciprocal or
    /// shares a factor with its quotient.
    FailingBlock { block: usize, self_reciprocal: bool, common: Poly },
}

#[derive(Clone, Debug)]
pub struct LcdVerdict {
    pub verdict: Verdict,
    pub witness: VerdictWitness,
}

/// Claims on MT codes that the fixtures refute. Each is stated with the
/// common side condition `λ_i != λ_i^{-1}` for all blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `dim C < min m_i` or `dim C^⊥ < min m_i` implies LCD.
    SmallDimensionImpliesLcd,
    /// `dim C = min m_i` implies LCD or self-orthogonal.
    DimensionAtMinLength,
    /// `dim C^⊥ = min m_i` implies LCD or dual-containing.
    DualDimensionAtMinLength,
    /// `π_i(C) != <1>` or `π_i(C^⊥) != <1>` for every `i` implies LCD.
    NontrivialProjections,
}

impl Claim {
    pub fn key(self) -> &'static str {
        match self {
            Claim::SmallDimensionImpliesLcd => "small_dimension_lcd",
            Claim::DimensionAtMinLength => "dimension_at_min_length",
            Claim::DualDimensionAtMinLength => "dual_dimension_at_min_length",
            Claim::NontrivialProjections => "nontrivial_projections",
        }
    }

    /// The dimension-equality claims are only known in summarized form.
    pub fn paraphrased(self) -> bool {
        matches!(self, Claim::DimensionAtMinLength | Claim::DualDimensionAtMinLength)
    }
}

#[derive(Clone, Debug)]
pub struct HypothesisCheck {
    pub claim: Claim,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl HypothesisCheck {
    pub fn refuted(&self) -> bool {
        self.hypothesis && !self.conclusion
    }
}

#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub shifts_non_involutive: bool,
    pub min_length: usize,
    pub facts: CodeFacts,
    pub projection_trivial: Vec<bool>,
    pub dual_projection_trivial: Vec<bool>,
    pub checks: Vec<HypothesisCheck>,
}

impl HypothesisReport {
    pub fn check(&self, claim: Claim) -> &HypothesisCheck {
        self.checks.iter().find(|c| c.claim == claim).expect("every claim is evaluated")
    }
}

impl MtSpec {
    pub fn new(
        field: &Field,
        lengths: Vec<usize>,
        shifts: Vec<Elem>,
        gens: Vec<Vec<Poly>>,
    ) -> Result<MtSpec> {
        if lengths.is_empty() {
            return Err(Error::InvalidSpec("at least one block is required".into()));
        }
        if lengths.len() != shifts.len() {
            return Err(Error::InvalidSpec(format!(
                "{} block lengths but {} shift constants",
                lengths.len(),
                shifts.len()
            )));
        }
        if let Some(i) = lengths.iter().position(|&m| m == 0) {
            return Err(Error::InvalidSpec(format!("block {} has length 0", i + 1)));
        }
        if let Some(i) = shifts.iter().position(|s| s.is_zero()) {
            return Err(Error::ZeroShift(i + 1));
        }
        if gens.is_empty() {
            return Err(Error::InvalidSpec("at least one generator is required".into()));
        }
        let mut reduced = Vec::with_capacity(gens.len());
        for (k, row) in gens.into_iter().enumerate() {
            if row.len() != lengths.len() {
                return Err(Error::InvalidSpec(format!(
                    "generator {} has {} entries, expected {}",
                    k + 1,
                    row.len(),
                    lengths.len()
                )));
            }
            let row = row
                .into_iter()
                .enumerate()
                .map(|(i, p)| {
                    if p.field() != field {
                        return Err(Error::FieldMismatch);
                    }
                    p.rem(&Poly::binomial(field, lengths[i], shifts[i]))
                })
                .collect::<Result<Vec<Poly>>>()?;
            reduced.push(row);
        }
        Ok(MtSpec { field: field.clone(), lengths, shifts, gens: reduced })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ell(&self) -> usize {
        self.lengths.len()
    }

    pub fn rho(&self) -> usize {
        self.gens.len()
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn shifts(&self) -> &[Elem] {
        &self.shifts
    }

    pub fn generators(&self) -> &[Vec<Poly>] {
        &self.gens
    }

    pub fn n(&self) -> usize {
        self.lengths.iter().sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.lengths
            .iter()
            .map(|&m| {
                let o = acc;
                acc += m;
                o
            })
            .collect()
    }

    /// `x^m_i - λ_i`.
    pub fn binomial(&self, i: usize) -> Poly {
        Poly::binomial(&self.field, self.lengths[i], self.shifts[i])
    }

    fn inverse_shifts(&self) -> Vec<Elem> {
        self.shifts.iter().map(|&s| self.field.inv(s).expect("shifts are nonzero")).collect()
    }

    /// The twisted shift `T_Λ`: each block `(c_0, ..., c_{m-1})` becomes
    /// `(λ c_{m-1}, c_0, ..., c_{m-2})`.
    pub fn shift(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.shift_with(&self.shifts, v)
    }

    fn shift_with(&self, shifts: &[Elem], v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), found: v.len() });
        }
        let mut out = Vec::with_capacity(v.len());
        for ((&m, &lam), off) in self.lengths.iter().zip(shifts).zip(self.offsets()) {
            let block = &v[off..off + m];
            out.push(self.field.mul(lam, block[m - 1]));
            out.extend_from_slice(&block[..m - 1]);
        }
        Ok(out)
    }

    /// Coefficient vector in F_q^n of a module element.
    pub fn word(&self, blocks: &[Poly]) -> Vec<Elem> {
        blocks
            .iter()
            .zip(&self.lengths)
            .flat_map(|(p, &m)| (0..m).map(move |c| p.coeff(c)))
            .collect()
    }

    /// Block `i` of a word, read as a polynomial.
    pub fn block_poly(&self, v: &[Elem], i: usize) -> Poly {
        let off = self.offsets()[i];
        Poly::new(&self.field, v[off..off + self.lengths[i]].to_vec())
    }

    fn embed(&self, i: usize, p: &Poly) -> Vec<Elem> {
        let mut blocks: Vec<Poly> = (0..self.ell()).map(|_| Poly::zero(&self.field)).collect();
        blocks[i] = p.clone();
        self.word(&blocks)
    }

    /// Smallest `T_Λ`-invariant subspace containing the generator words,
    /// found by rank closure: a vector's shift is queued whenever the vector
    /// raises the rank.
    pub fn expand(&self) -> LinearCode {
        let mut basis = EchelonBasis::new(&self.field, self.n());
        let mut kept: Vec<Vec<Elem>> = Vec::new();
        let mut queue: VecDeque<Vec<Elem>> = self.gens.iter().map(|g| self.word(g)).collect();
        while let Some(v) = queue.pop_front() {
            if basis.insert(&v) {
                queue.push_back(self.shift(&v).expect("length n"));
                kept.push(v);
            }
        }
        LinearCode::new(Matrix::from_rows(&self.field, self.n(), &kept).expect("length n"))
    }

    /// `g_i = gcd(x^m_i - λ_i, π_i(g_1), ..., π_i(g_ρ))`, monic.
    pub fn block_gen_poly(&self, i: usize) -> Poly {
        let binom = self.binomial(i);
        Poly::gcd_many(std::iter::once(&binom).chain(self.gens.iter().map(|g| &g[i])))
            .expect("binomial is nonzero")
    }

    /// `(x^m_i - λ_i) / g_i`.
    pub fn quotient(&self, i: usize) -> Poly {
        self.binomial(i)
            .div_exact(&self.block_gen_poly(i))
            .expect("same field")
            .expect("g_i divides the binomial")
    }

    /// `π_i(C) = <g_i>` as a constacyclic code of length `m_i`, checked
    /// against the column block of the expanded code.
    pub fn projection_code(&self, i: usize) -> Result<LinearCode> {
        let code = constacyclic_code(&self.field, self.lengths[i], self.shifts[i], &self.block_gen_poly(i))?;
        let off = self.offsets()[i];
        let cols = self.expand().basis().column_block(off, off + self.lengths[i]);
        if !LinearCode::new(cols).same_code(&code)? {
            return Err(Error::ProjectionMismatch(i + 1));
        }
        Ok(code)
    }

    /// The Euclidean dual, certified invariant under `T_{Λ^{-1}}`.
    pub fn dual(&self) -> Result<DualCode> {
        let code = self.expand().dual();
        let inverse_shifts = self.inverse_shifts();
        for r in 0..code.basis().rows() {
            let shifted = self.shift_with(&inverse_shifts, code.basis().row(r))?;
            if !code.contains(&shifted)? {
                return Err(Error::InvarianceViolation(r + 1));
            }
        }
        Ok(DualCode { code, inverse_shifts })
    }

    /// The dual as a `Λ^{-1}`-MT description whose generators are the dual
    /// basis rows.
    pub fn dual_spec(&self) -> Result<MtSpec> {
        let dual = self.dual()?;
        let b = dual.code.basis();
        let mut gens: Vec<Vec<Poly>> = (0..b.rows())
            .map(|r| (0..self.ell()).map(|i| self.block_poly(b.row(r), i)).collect())
            .collect();
        if gens.is_empty() {
            gens.push((0..self.ell()).map(|_| Poly::zero(&self.field)).collect());
        }
        MtSpec::new(&self.field, self.lengths.clone(), dual.inverse_shifts, gens)
    }

    /// `[g_1; ...; g_ρ; diag(x^m_i - λ_i)]`, a `(ρ + l) x l` matrix.
    pub fn stacked_matrix(&self) -> PolyMatrix {
        let mut rows = self.gens.clone();
        for i in 0..self.ell() {
            rows.push(
                (0..self.ell())
                    .map(|j| if i == j { self.binomial(i) } else { Poly::zero(&self.field) })
                    .collect(),
            );
        }
        PolyMatrix::new(&self.field, rows).expect("uniform rows")
    }

    /// `dim C = n - deg d_l(G)`, where `d_l` is the gcd of all `l x l`
    /// minors of the stacked matrix; cross-checked against the rank of the
    /// expanded code.
    pub fn dimension_formula(&self) -> Result<DimensionFormula> {
        let g = self.stacked_matrix();
        let l = self.ell();
        let minors = g.minors(l)?;
        let divisor = g.determinantal_divisor(l)?;
        let dimension = self.n() - divisor.degree().expect("nonzero divisor");
        let rank = self.expand().dimension();
        if dimension != rank {
            return Err(Error::FormulaRankDisagreement { formula: dimension, rank });
        }
        Ok(DimensionFormula { dimension, divisor, minors, rank })
    }

    /// Whether the quotients `(x^m_i - λ_i)/g_i` are pairwise coprime.
    pub fn coprimality(&self) -> Coprimality {
        let quotients: Vec<Poly> = (0..self.ell()).map(|i| self.quotient(i)).collect();
        let mut witness = None;
        'outer: for i in 0..quotients.len() {
            for j in i + 1..quotients.len() {
                let g = quotients[i].gcd(&quotients[j]).expect("quotients are nonzero");
                if g.degree() != Some(0) {
                    witness = Some(NonCoprimePair { i: i + 1, j: j + 1, common: g });
                    break 'outer;
                }
            }
        }
        Coprimality { holds: witness.is_none(), quotients, witness }
    }

    /// Multiplies a module element by `f(x)`, reducing each block.
    fn module_scale(&self, f: &Poly, blocks: &[Poly]) -> Result<Vec<Poly>> {
        blocks
            .iter()
            .enumerate()
            .map(|(i, b)| f.mul(b)?.rem(&self.binomial(i)))
            .collect()
    }

    /// Certifies `C = ⊕ π_i(C)` and `π_i(C^⊥) = π_i(C)^⊥` when the
    /// coprimality condition holds.
    pub fn direct_sum_check(&self) -> Result<DirectSum> {
        let cop = self.coprimality();
        if let Some(w) = cop.witness {
            return Err(Error::ConditionNotMet(w.i, w.j));
        }
        let code = self.expand();
        let dual = self.dual()?.code;
        let offsets = self.offsets();
        let mut components = Vec::with_capacity(self.ell());
        let mut dimensions = Vec::with_capacity(self.ell());
        for (i, &off) in offsets.iter().enumerate() {
            let comp = self.projection_code(i)?;
            let g = self.block_gen_poly(i);
            let expected = self.lengths[i] - g.degree().expect("nonzero");
            if comp.dimension() != expected {
                return Err(Error::CertificateFailure(format!(
                    "block {} has dimension {}, expected {expected}",
                    i + 1,
                    comp.dimension()
                )));
            }
            for r in 0..comp.basis().rows() {
                let p = self.block_poly_of(comp.basis().row(r));
                if !code.contains(&self.embed(i, &p))? {
                    return Err(Error::CertificateFailure(format!(
                        "component {} is not contained in the code",
                        i + 1
                    )));
                }
            }
            let dual_proj = LinearCode::new(dual.basis().column_block(off, off + self.lengths[i]));
            if !dual_proj.same_code(&comp.dual())? {
                return Err(Error::CertificateFailure(format!(
                    "projection {} of the dual is not the dual of the projection",
                    i + 1
                )));
            }
            dimensions.push(comp.dimension());
            components.push(comp);
        }
        let total: usize = dimensions.iter().sum();
        if total != code.dimension() {
            return Err(Error::CertificateFailure(format!(
                "component dimensions sum to {total}, code has dimension {}",
                code.dimension()
            )));
        }
        // f_i g_k = (0, ..., π_i(g_k), ..., 0) for every generator
        let idempotents = Poly::crt_idempotents(&cop.quotients)?;
        for (i, fi) in idempotents.iter().enumerate() {
            for g in &self.gens {
                let scaled = self.module_scale(fi, g)?;
                for (j, b) in scaled.iter().enumerate() {
                    let want = if i == j { g[j].clone() } else { Poly::zero(&self.field) };
                    if *b != want {
                        return Err(Error::CertificateFailure(format!(
                            "idempotent {} does not isolate block {}",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(DirectSum { components, dimensions, idempotents })
    }

    fn block_poly_of(&self, v: &[Elem]) -> Poly {
        Poly::new(&self.field, v.to_vec())
    }

    /// Verdict of the quotient-coprimality criterion. When the quotients
    /// are pairwise coprime, C is LCD exactly when each block with
    /// `λ_i^2 = 1` has a self-reciprocal `g_i` coprime to its quotient.
    pub fn lcd_verdict(&self) -> LcdVerdict {
        let cop = self.coprimality();
        if let Some(w) = cop.witness {
            return LcdVerdict { verdict: Verdict::Inconclusive, witness: VerdictWitness::NonCoprime(w) };
        }
        let f = &self.field;
        for i in 0..self.ell() {
            let lam = self.shifts[i];
            if f.mul(lam, lam) != Elem::ONE {
                continue;
            }
            let g = self.block_gen_poly(i);
            let self_reciprocal = g.is_self_reciprocal().expect("nonzero");
            let common = g.gcd(&cop.quotients[i]).expect("nonzero");
            if !self_reciprocal || common.degree() != Some(0) {
                return LcdVerdict {
                    verdict: Verdict::NotLcd,
                    witness: VerdictWitness::FailingBlock { block: i + 1, self_reciprocal, common },
                };
            }
        }
        LcdVerdict { verdict: Verdict::Lcd, witness: VerdictWitness::Quotients(cop.quotients) }
    }

    /// Older sufficient condition: the binomials `x^m_i - λ_i` pairwise
    /// coprime and `λ_i != λ_i^{-1}` for every block.
    pub fn legacy_lcd_condition(&self) -> bool {
        if !self.shifts_non_involutive() {
            return false;
        }
        for i in 0..self.ell() {
            for j in i + 1..self.ell() {
                let g = self.binomial(i).gcd(&self.binomial(j)).expect("nonzero");
                if g.degree() != Some(0) {
                    return false;
                }
            }
        }
        true
    }

    pub fn shifts_non_involutive(&self) -> bool {
        self.shifts.iter().all(|&s| self.field.mul(s, s) != Elem::ONE)
    }

    /// Evaluates the refuted claims' hypotheses and conclusions against the
    /// exact facts of the expanded code.
    pub fn refuted_hypotheses(&self) -> Result<HypothesisReport> {
        let code = self.expand();
        let facts = code.facts(None)?;
        let dual_spec = self.dual_spec()?;
        let non_inv = self.shifts_non_involutive();
        let min_length = *self.lengths.iter().min().expect("at least one block");
        let projection_trivial: Vec<bool> =
            (0..self.ell()).map(|i| self.block_gen_poly(i).degree() == Some(0)).collect();
        let dual_projection_trivial: Vec<bool> =
            (0..self.ell()).map(|i| dual_spec.block_gen_poly(i).degree() == Some(0)).collect();
        let lcd = facts.is_lcd;
        let checks = vec![
            HypothesisCheck {
                claim: Claim::SmallDimensionImpliesLcd,
                hypothesis: non_inv && (facts.dimension < min_length || facts.dual_dimension < min_length),
                conclusion: lcd,
            },
            HypothesisCheck {
                claim: Claim::DimensionAtMinLength,
                hypothesis: non_inv && facts.dimension == min_length,
                conclusion: lcd || facts.is_self_orthogonal,
            },
            HypothesisCheck {
                claim: Claim::DualDimensionAtMinLength,
                hypothesis: non_inv && facts.dual_dimension == min_length,
                conclusion: lcd || facts.is_dual_containing,
            },
            HypothesisCheck {
                claim: Claim::NontrivialProjections,
                hypothesis: non_inv
                    && projection_trivial
                        .iter()
                        .zip(&dual_projection_trivial)
                        .all(|(&a, &b)| !a || !b),
                conclusion: lcd,
            },
        ];
        Ok(HypothesisReport {
            shifts_non_involutive: non_inv,
            min_length,
            facts,
            projection_trivial,
            dual_projection_trivial,
            checks,
        })
    }
}
