//! Exact linear algebra over F_q: echelon forms, rank, kernels, row spaces.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows of equal length; `cols` is needed for the
    /// empty case.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Parses rows of whitespace-separated element literals.
    pub fn parse_rows(field: &Field, rows: &[&str]) -> Result<Matrix> {
        let parsed = rows
            .iter()
            .map(|r| r.split_whitespace().map(|t| field.parse_elem(t)).collect())
            .collect::<Result<Vec<Vec<Elem>>>>()?;
        let cols = parsed.first().map_or(0, |r| r.len());
        Matrix::from_rows(field, cols, &parsed)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Gram matrix `M * M^T`.
    pub fn gram(&self) -> Matrix {
        self.mul(&self.transpose()).expect("shapes agree")
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} columns on {}",
                other.cols, self.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Column slice `[start, end)`.
    pub fn column_block(&self, start: usize, end: usize) -> Matrix {
        let rows: Vec<Vec<Elem>> = (0..self.rows).map(|r| self.row(r)[start..end].to_vec()).collect();
        Matrix::from_rows(&self.field, end - start, &rows).expect("uniform rows")
    }

    /// Reduced row echelon form, rank, and pivot columns. Pivots are the
    /// first nonzero entry scanning left to right.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// The nonzero rows of the RREF: a basis of the row space.
    pub fn row_basis(&self) -> Matrix {
        let (r, rank, _) = self.rref();
        Matrix {
            field: self.field.clone(),
            rows: rank,
            cols: self.cols,
            data: r.data[..rank * self.cols].to_vec(),
        }
    }

    pub fn det(&self) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Elem::ONE;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Elem::ZERO);
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("nonzero pivot");
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn is_nonsingular(&self) -> Result<bool> {
        Ok(!self.det()?.is_zero())
    }

    /// Basis (as rows) of the right kernel `{v : M v^T = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let (r, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let rows: Vec<Vec<Elem>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![Elem::ZERO; self.cols];
                v[fc] = Elem::ONE;
                for (i, &pc) in pivots.iter().enumerate().take(rank) {
                    v[pc] = f.neg(r.get(i, fc));
                }
                v
            })
            .collect();
        Matrix::from_rows(f, self.cols, &rows).expect("uniform rows")
    }

    fn check_cols(&self, other: &Matrix) -> Result<()> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{} columns vs {} columns",
                self.cols, other.cols
            )));
        }
        Ok(())
    }

    pub fn row_space_equal(&self, other: &Matrix) -> Result<bool> {
        self.check_cols(other)?;
        Ok(self.row_basis() == other.row_basis())
    }

    pub fn row_space_contains(&self, v: &[Elem]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        let single = Matrix::from_rows(&self.field, self.cols, &[v.to_vec()])?;
        Ok(self.stack(&single)?.rank() == self.rank())
    }

    /// True when every row of `other` lies in the row space of `self`.
    pub fn row_space_includes(&self, other: &Matrix) -> Result<bool> {
        self.check_cols(other)?;
        Ok(self.stack(other)?.rank() == self.rank())
    }

    /// Basis of the intersection of the two row spaces, from the left
    /// kernel of the stacked matrix: `x A + y B = 0` gives `x A` in both.
    pub fn row_space_intersection(&self, other: &Matrix) -> Result<Matrix> {
        self.check_cols(other)?;
        let a = self.row_basis();
        let b = other.row_basis();
        let stacked = a.stack(&b)?;
        let kernel = stacked.transpose().nullspace();
        let f = &self.field;
        let rows: Vec<Vec<Elem>> = (0..kernel.rows)
            .map(|k| {
                let x = &kernel.row(k)[..a.rows];
                let mut v = vec![Elem::ZERO; self.cols];
                for (i, &xi) in x.iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (c, out) in v.iter_mut().enumerate() {
                        *out = f.add(*out, f.mul(xi, a.get(i, c)));
                    }
                }
                v
            })
            .collect();
        Ok(Matrix::from_rows(f, self.cols, &rows)?.row_basis())
    }

    /// `v * M` for a row vector `v`.
    pub fn combine_rows(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(vi, self.get(i, c)));
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> =
                self.row(r).iter().map(|&e| self.field.format_elem(e)).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

/// Incrementally grown basis kept in semi-echelon form: each row has a
/// distinct pivot (normalized to 1) and vanishes at the pivots of all rows
/// inserted before it.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    len: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &Field, len: usize) -> Self {
        EchelonBasis { field: field.clone(), len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c.is_zero() {
                continue;
            }
            for (x, &b) in w.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, b));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|e| e.is_zero())
    }

    /// Adds `v` if it is independent of the current rows; returns whether
    /// the rank grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.len, "vector length");
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(w[p]).expect("nonzero");
        let w = w.iter().map(|&e| self.field.mul(e, inv)).collect();
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.len, &self.rows).expect("uniform rows")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn basics() {
        let f = f5();
        let id = Matrix::identity(&f, 4);
        assert_eq!(id.rref(), (id.clone(), 4, vec![0, 1, 2, 3]));
        assert_eq!(Matrix::zeros(&f, 3, 4).rank(), 0);
        assert_eq!(id.det().unwrap(), Elem::ONE);
        assert_eq!(id.nullspace().rows(), 0);
        let z = Matrix::zeros(&f, 2, 3);
        let ns = z.nullspace();
        assert_eq!((ns.rows(), ns.rank()), (3, 3));
        let a = Matrix::parse_rows(&f, &["1 2 3", "0 4 1"]).unwrap();
        assert_eq!(a.mul(&Matrix::identity(&f, 3)).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
        assert!(matches!(a.det(), Err(Error::NotSquare { .. })));
        assert!(matches!(a.mul(&a), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = Matrix::identity(&f5(), 2);
        let b = Matrix::identity(&f3(), 2);
        assert_eq!(a.mul(&b).unwrap_err(), Error::FieldMismatch);
    }

    #[test]
    fn row_space_predicates() {
        let f = f3();
        let a = Matrix::parse_rows(&f, &["1 0 2", "0 1 1"]).unwrap();
        let swapped = Matrix::parse_rows(&f, &["0 1 1", "1 0 2"]).unwrap();
        assert!(a.row_space_equal(&swapped).unwrap());
        let z = Matrix::zeros(&f, 1, 3);
        assert!(!z.row_space_contains(&[Elem::ONE, Elem::ZERO, Elem::ZERO]).unwrap());
        let e1 = Matrix::parse_rows(&f, &["1 0 0"]).unwrap();
        let e2 = Matrix::parse_rows(&f, &["0 1 0"]).unwrap();
        assert_eq!(e1.row_space_intersection(&e2).unwrap().rows(), 0);
        assert!(a.row_space_intersection(&a).unwrap().row_space_equal(&a).unwrap());
    }

    #[test]
    fn det_matches_rank() {
        let f = f5();
        let m = Matrix::parse_rows(&f, &["1 2", "2 4"]).unwrap();
        assert_eq!(m.det().unwrap(), Elem::ZERO);
        let m = Matrix::parse_rows(&f, &["0 1", "1 0"]).unwrap();
        assert_eq!(m.det().unwrap(), f.from_int(4));
    }

    #[test]
    fn echelon_basis_tracks_rank() {
        let f = f3();
        let mut b = EchelonBasis::new(&f, 3);
        let v = |s: &str| Matrix::parse_rows(&f, &[s]).unwrap().row(0).to_vec();
        assert!(b.insert(&v("1 1 0")));
        assert!(b.insert(&v("0 1 1")));
        assert!(!b.insert(&v("1 2 1")));
        assert!(b.contains(&v("2 0 1")));
        assert!(!b.contains(&v("0 0 1")));
        assert_eq!(b.rank(), 2);
    }

    fn fields() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::prime(2).unwrap()),
            Just(f3()),
            Just(Field::new(2, 2, &[1, 1, 1]).unwrap()),
            Just(f5()),
            Just(Field::new(3, 2, &[2, 2, 1]).unwrap()),
        ]
    }

    fn mat(f: &Field, rows: usize, cols: usize, codes: &[usize]) -> Matrix {
        let q = f.order();
        let data: Vec<Vec<Elem>> = (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| f.elem_from_code(codes[(r * cols + c) % codes.len()] % q).unwrap())
                    .collect()
            })
            .collect();
        Matrix::from_rows(f, cols, &data).unwrap()
    }

    proptest! {
        #[test]
        fn rank_laws(f in fields(), r in 1usize..6, k in 1usize..6, c in 1usize..7,
                     a in prop::collection::vec(0usize..9, 40),
                     b in prop::collection::vec(0usize..9, 40)) {
            let a = mat(&f, r, k, &a);
            let b = mat(&f, k, c, &b);
            prop_assert_eq!(a.rank(), a.transpose().rank());
            let ab = a.mul(&b).unwrap();
            prop_assert!(ab.rank() <= a.rank().min(b.rank()));
            prop_assert_eq!(a.rank() + a.nullspace().rows(), a.cols());
            let ns = a.nullspace();
            prop_assert!(a.mul(&ns.transpose()).unwrap().is_zero());
        }

        #[test]
        fn modular_law(f in fields(), r1 in 1usize..5, r2 in 1usize..5, c in 1usize..7,
                       a in prop::collection::vec(0usize..9, 35),
                       b in prop::collection::vec(0usize..9, 35)) {
            let a = mat(&f, r1, c, &a);
            let b = mat(&f, r2, c, &b);
            let inter = a.row_space_intersection(&b).unwrap();
            prop_assert_eq!(inter.rank(), a.rank() + b.rank() - a.stack(&b).unwrap().rank());
            prop_assert!(a.row_space_includes(&inter).unwrap());
            prop_assert!(b.row_space_includes(&inter).unwrap());
        }

        #[test]
        fn nonsingular_iff_full_rank(f in fields(), n in 1usize..6,
                                     a in prop::collection::vec(0usize..9, 36)) {
            let m = mat(&f, n, n, &a);
            prop_assert_eq!(m.is_nonsingular().unwrap(), m.rank() == n);
        }
    }
}
