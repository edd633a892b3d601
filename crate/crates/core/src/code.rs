//! Linear codes given by a generator matrix: duals, hulls, LCD and
//! orthogonality predicates, and exhaustive minimum distance.

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::matrix::Matrix;

pub const DEFAULT_CAP: u128 = 100_000_000;

/// A linear code of length `n`. The generator may carry dependent rows;
/// every predicate works on its row space.
#[derive(Clone, Debug)]
pub struct LinearCode {
    gen: Matrix,
    basis: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFacts {
    pub length: usize,
    pub dimension: usize,
    pub dual_dimension: usize,
    pub hull_dimension: usize,
    pub is_lcd: bool,
    pub is_self_orthogonal: bool,
    pub is_dual_containing: bool,
    pub min_distance: Option<usize>,
}

impl LinearCode {
    pub fn new(gen: Matrix) -> LinearCode {
        let basis = gen.row_basis();
        LinearCode { gen, basis }
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode::new(Matrix::zeros(field, 0, n))
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        LinearCode::new(Matrix::identity(field, n))
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn length(&self) -> usize {
        self.gen.cols()
    }

    pub fn dimension(&self) -> usize {
        self.basis.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Full-rank generator in reduced row echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        self.basis.row_space_contains(v)
    }

    pub fn same_code(&self, other: &LinearCode) -> Result<bool> {
        self.basis.row_space_equal(&other.basis)
    }

    pub fn includes(&self, other: &LinearCode) -> Result<bool> {
        self.basis.row_space_includes(&other.basis)
    }

    pub fn dual(&self) -> LinearCode {
        LinearCode::new(self.basis.nullspace())
    }

    pub fn hull(&self) -> LinearCode {
        let d = self.dual();
        LinearCode::new(
            self.basis
                .row_space_intersection(&d.basis)
                .expect("code and dual share field and length"),
        )
    }

    pub fn hull_dimension(&self) -> usize {
        self.hull().dimension()
    }

    /// LCD test by two routes: trivial hull, and a nonsingular Gram matrix
    /// of a full-rank generator. A disagreement is an internal error.
    pub fn is_lcd(&self) -> Result<bool> {
        let hull_dim = self.hull_dimension();
        let det_nonzero = self.gram_nonsingular();
        if (hull_dim == 0) != det_nonzero {
            return Err(Error::InternalDisagreement { hull_dim, det_nonzero });
        }
        Ok(det_nonzero)
    }

    /// `G G^T` for the full-rank generator; empty for the zero code.
    pub fn gram(&self) -> Matrix {
        self.basis.gram()
    }

    fn gram_nonsingular(&self) -> bool {
        // zero code: det of the 0x0 matrix is 1
        self.gram().is_nonsingular().expect("Gram matrix is square")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.gram().is_zero()
    }

    pub fn is_dual_containing(&self) -> bool {
        self.includes(&self.dual()).expect("same shape")
    }

    /// Number of codewords `q^k`.
    pub fn size(&self) -> u128 {
        (self.field().order() as u128).saturating_pow(self.dimension() as u32)
    }

    /// Minimum Hamming weight over nonzero codewords; `None` for the zero
    /// code. Fails when `q^k` exceeds `cap`.
    pub fn min_distance(&self, cap: u128) -> Result<Option<usize>> {
        self.check_cap(cap)?;
        #[cfg(feature = "parallel")]
        {
            Ok(min_distance_parallel(&self.basis))
        }
        #[cfg(not(feature = "parallel"))]
        {
            Ok(min_distance_sequential(&self.basis))
        }
    }

    fn check_cap(&self, cap: u128) -> Result<()> {
        let required = self.size();
        if required > cap {
            return Err(Error::CapExceeded { required, cap });
        }
        Ok(())
    }

    /// Decides `d <= 2` from the parity-check matrix alone: `d = 1` iff some
    /// column of the dual generator is zero, `d = 2` iff two columns are
    /// proportional. Returns `None` when `d >= 3` (or the code is zero).
    pub fn small_distance(&self) -> Option<usize> {
        self.low_weight_witness()
            .map(|w| w.iter().filter(|e| !e.is_zero()).count())
    }

    /// A codeword of weight 1 or 2 read off the parity-check matrix, if any.
    pub fn low_weight_witness(&self) -> Option<Vec<Elem>> {
        if self.dimension() == 0 {
            return None;
        }
        let n = self.length();
        let h = self.dual().basis;
        let f = self.field();
        let cols: Vec<Vec<Elem>> = (0..n).map(|c| (0..h.rows()).map(|r| h.get(r, c)).collect()).collect();
        if let Some(i) = cols.iter().position(|c| c.iter().all(|e| e.is_zero())) {
            let mut w = vec![Elem::ZERO; n];
            w[i] = Elem::ONE;
            return Some(w);
        }
        // scale each column so its first nonzero entry is 1, remembering the scale
        let normalized: Vec<(Elem, Vec<Elem>)> = cols
            .iter()
            .map(|c| {
                let lead = *c.iter().find(|e| !e.is_zero()).expect("nonzero column");
                let inv = f.inv(lead).expect("nonzero");
                (lead, c.iter().map(|&e| f.mul(e, inv)).collect())
            })
            .collect();
        for i in 0..n {
            for j in i + 1..n {
                if normalized[i].1 == normalized[j].1 {
                    // h_j = a h_i with a = lead_j / lead_i, so a e_i - e_j is a codeword
                    let a = f.div(normalized[j].0, normalized[i].0).expect("nonzero");
                    let mut w = vec![Elem::ZERO; n];
                    w[i] = a;
                    w[j] = f.neg(Elem::ONE);
                    return Some(w);
                }
            }
        }
        None
    }

    /// Exact minimum distance when `q^k <= cap`; otherwise falls back to the
    /// parity-check test, which settles only `d <= 2`.
    pub fn min_distance_or_small(&self, cap: u128) -> Result<Option<usize>> {
        match self.min_distance(cap) {
            Err(Error::CapExceeded { .. }) => match self.small_distance() {
                Some(d) => Ok(Some(d)),
                None => self.min_distance(cap),
            },
            other => other,
        }
    }

    pub fn facts(&self, distance_cap: Option<u128>) -> Result<CodeFacts> {
        let dimension = self.dimension();
        let dual = self.dual();
        let min_distance = match distance_cap {
            Some(cap) => self.min_distance_or_small(cap)?,
            None => None,
        };
        Ok(CodeFacts {
            length: self.length(),
            dimension,
            dual_dimension: dual.dimension(),
            hull_dimension: self.hull_dimension(),
            is_lcd: self.is_lcd()?,
            is_self_orthogonal: self.is_self_orthogonal(),
            is_dual_containing: self.is_dual_containing(),
            min_distance,
        })
    }
}

/// One unit of enumeration work: messages whose first nonzero coordinate is
/// `lead` (fixed to 1), with the next `prefix.len()` coordinates fixed to
/// `prefix` and the remaining `tail` coordinates enumerated.
struct Job {
    lead: usize,
    prefix: Vec<u8>,
}

/// Splits the projective message space into jobs. Scalar multiples share a
/// weight, so only messages with leading coordinate 1 are visited.
fn jobs(field: &Field, k: usize, prefix_len: usize) -> Vec<Job> {
    let q = field.order();
    let mut out = Vec::new();
    for lead in 0..k {
        let tail = k - 1 - lead;
        let fixed = tail.min(prefix_len);
        let count = q.pow(fixed as u32);
        for idx in 0..count {
            let mut v = idx;
            let prefix = (0..fixed)
                .map(|_| {
                    let d = (v % q) as u8;
                    v /= q;
                    d
                })
                .collect();
            out.push(Job { lead, prefix });
        }
    }
    out
}

/// Walks all `q^t` combinations of the rows after the fixed part with a
/// modular Gray code: step `c` adds one copy of row `j`, where `j` is the
/// number of trailing zero base-q digits of `c`.
fn run_job(basis: &Matrix, job: &Job) -> usize {
    let f = basis.field();
    let q = f.order();
    let n = basis.cols();
    let k = basis.rows();
    let mut word: Vec<u8> = basis.row(job.lead).iter().map(|e| e.code()).collect();
    let mut next = job.lead + 1;
    for &d in &job.prefix {
        let row = basis.row(next);
        let c = f.elem_from_code(d as usize).expect("digit below q");
        for (w, &r) in word.iter_mut().zip(row) {
            let add = f.mul(c, r);
            *w = f.add_row(add)[*w as usize];
        }
        next += 1;
    }
    let free: Vec<&[Elem]> = (next..k).map(|r| basis.row(r)).collect();
    let weight = |w: &[u8]| w.iter().filter(|&&x| x != 0).count();
    let mut best = weight(&word);
    let total = (q as u64).pow(free.len() as u32);
    for c in 1..total {
        let mut j = 0;
        let mut v = c;
        while v % q as u64 == 0 {
            v /= q as u64;
            j += 1;
        }
        let row = free[j];
        let mut wt = 0;
        for i in 0..n {
            let s = f.add_row(row[i])[word[i] as usize];
            word[i] = s;
            wt += (s != 0) as usize;
        }
        if wt < best {
            best = wt;
        }
    }
    best
}

const PREFIX_LEN: usize = 3;

/// Exhaustive minimum distance over the row space of a full-rank `basis`,
/// single-threaded.
pub fn min_distance_sequential(basis: &Matrix) -> Option<usize> {
    jobs(basis.field(), basis.rows(), PREFIX_LEN)
        .iter()
        .map(|j| run_job(basis, j))
        .min()
}

/// Same enumeration as [`min_distance_sequential`], with jobs spread over
/// the rayon pool and reduced by `min`.
#[cfg(feature = "parallel")]
pub fn min_distance_parallel(basis: &Matrix) -> Option<usize> {
    use rayon::prelude::*;
    jobs(basis.field(), basis.rows(), PREFIX_LEN)
        .par_iter()
        .map(|j| run_job(basis, j))
        .min()
}
