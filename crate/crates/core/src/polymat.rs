//! Matrices over F_q[x]: minors and determinantal divisors.

use crate::error::{Error, Result};
use crate::galois::Field;
use crate::poly::Poly;

const MAX_COFACTOR: usize = 8;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

impl PolyMatrix {
    pub fn new(field: &Field, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            for p in r {
                if p.field() != field {
                    return Err(Error::FieldMismatch);
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { field: field.clone(), rows: nrows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows > MAX_COFACTOR {
            return Err(Error::TooLarge(self.rows));
        }
        let all: Vec<usize> = (0..self.rows).collect();
        self.cofactor_det(&all, &all)
    }

    fn cofactor_det(&self, rows: &[usize], cols: &[usize]) -> Result<Poly> {
        match rows.len() {
            0 => return Ok(Poly::one(&self.field)),
            1 => return Ok(self.get(rows[0], cols[0]).clone()),
            _ => {}
        }
        let mut acc = Poly::zero(&self.field);
        let sub_rows = &rows[1..];
        for (j, &c) in cols.iter().enumerate() {
            let entry = self.get(rows[0], c);
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry.mul(&self.cofactor_det(sub_rows, &sub_cols)?)?;
            acc = if j % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
        }
        Ok(acc)
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::BadSize { k, rows: self.rows, cols: self.cols });
        }
        if k > MAX_COFACTOR {
            return Err(Error::TooLarge(k));
        }
        Ok(())
    }

    /// Every `k x k` minor, row subsets outermost, both in lexicographic order.
    pub fn minors(&self, k: usize) -> Result<Vec<Poly>> {
        self.check_k(k)?;
        let row_sets = subsets(self.rows, k);
        let col_sets = subsets(self.cols, k);
        let pairs: Vec<(&Vec<usize>, &Vec<usize>)> =
            row_sets.iter().flat_map(|r| col_sets.iter().map(move |c| (r, c))).collect();
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            pairs.par_iter().map(|(r, c)| self.cofactor_det(r, c)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            pairs.iter().map(|(r, c)| self.cofactor_det(r, c)).collect()
        }
    }

    /// Monic gcd of all `k x k` minors (the k-th determinantal divisor).
    pub fn determinantal_divisor(&self, k: usize) -> Result<Poly> {
        self.check_k(k)?;
        let mut acc: Option<Poly> = None;
        for r in subsets(self.rows, k) {
            for c in subsets(self.cols, k) {
                let m = self.cofactor_det(&r, &c)?;
                if m.is_zero() {
                    continue;
                }
                let next = match acc {
                    None => m.monic(),
                    Some(a) => a.gcd(&m)?,
                };
                if next.degree() == Some(0) {
                    return Ok(next);
                }
                acc = Some(next);
            }
        }
        acc.ok_or(Error::AllMinorsZero(k))
    }

    /// Left multiplication by a constant matrix given row by row.
    pub fn left_mul_const(&self, m: &crate::matrix::Matrix) -> Result<PolyMatrix> {
        if m.cols() != self.rows {
            return Err(Error::ShapeMismatch(format!("{} columns vs {} rows", m.cols(), self.rows)));
        }
        let f = &self.field;
        let rows = (0..m.rows())
            .map(|i| {
                (0..self.cols)
                    .map(|c| {
                        (0..self.rows).try_fold(Poly::zero(f), |acc, k| {
                            acc.add(&self.get(k, c).scale(m.get(i, k)))
                        })
                    })
                    .collect::<Result<Vec<Poly>>>()
            })
            .collect::<Result<Vec<Vec<Poly>>>>()?;
        PolyMatrix::new(f, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Elem;
    use crate::matrix::Matrix;
    use proptest::prelude::*;

    fn p(f: &Field, s: &str) -> Poly {
        Poly::parse(f, s).unwrap()
    }

    #[test]
    fn subset_order() {
        assert_eq!(subsets(4, 2), vec![
            vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]
        ]);
        assert_eq!(subsets(2, 2), vec![vec![0, 1]]);
    }

    #[test]
    fn diagonal_and_zero_row() {
        let f = Field::prime(3).unwrap();
        let z = Poly::zero(&f);
        let a = p(&f, "x^5-2");
        let b = p(&f, "x^7-1");
        let m = PolyMatrix::new(&f, vec![vec![a.clone(), z.clone()], vec![z.clone(), b.clone()]]).unwrap();
        assert_eq!(m.det().unwrap(), a.mul(&b).unwrap());
        assert_eq!(m.minors(2).unwrap(), vec![a.mul(&b).unwrap()]);
        assert_eq!(m.determinantal_divisor(2).unwrap(), a.mul(&b).unwrap());
        let zr = PolyMatrix::new(&f, vec![vec![z.clone(), z.clone()], vec![a, b]]).unwrap();
        assert!(zr.det().unwrap().is_zero());
        assert_eq!(zr.determinantal_divisor(2).unwrap_err(), Error::AllMinorsZero(2));
        assert!(matches!(zr.minors(3), Err(Error::BadSize { .. })));
    }

    #[test]
    fn three_by_three() {
        let f = Field::prime(5).unwrap();
        let rows = vec![
            vec![p(&f, "x"), p(&f, "1"), p(&f, "0")],
            vec![p(&f, "2"), p(&f, "x+1"), p(&f, "x^2")],
            vec![p(&f, "0"), p(&f, "3"), p(&f, "x")],
        ];
        let m = PolyMatrix::new(&f, rows).unwrap();
        // x((x+1)x - 3x^2) - 1(2x - 0) = -2x^3 + x^2 - 2x
        assert_eq!(m.det().unwrap(), p(&f, "3*x^3 + x^2 + 3*x"));
    }

    fn fields() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::prime(2).unwrap()),
            Just(Field::prime(3).unwrap()),
            Just(Field::new(2, 2, &[1, 1, 1]).unwrap()),
            Just(Field::prime(5).unwrap()),
        ]
    }

    fn random_pm(f: &Field, rows: usize, cols: usize, codes: &[Vec<usize>]) -> PolyMatrix {
        let q = f.order();
        let grid = (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| {
                        let cs = &codes[(r * cols + c) % codes.len()];
                        Poly::new(f, cs.iter().map(|&x| f.elem_from_code(x % q).unwrap()).collect())
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::new(f, grid).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn divisor_chain(f in fields(), rows in 2usize..5, cols in 2usize..4,
                         codes in prop::collection::vec(prop::collection::vec(0usize..5, 0..4), 12)) {
            let m = random_pm(&f, rows, cols, &codes);
            for k in 1..rows.min(cols) {
                if let (Ok(a), Ok(b)) = (m.determinantal_divisor(k), m.determinantal_divisor(k + 1)) {
                    prop_assert!(a.divides(&b).unwrap());
                }
            }
        }

        #[test]
        fn divisor_invariant_under_invertible_left_action(
            f in fields(), rows in 2usize..5,
            codes in prop::collection::vec(prop::collection::vec(0usize..5, 0..4), 10),
            w in prop::collection::vec(0usize..5, 16)) {
            let m = random_pm(&f, rows, 2, &codes);
            let q = f.order();
            let wrows: Vec<Vec<Elem>> = (0..rows)
                .map(|r| (0..rows).map(|c| f.elem_from_code(w[(r * rows + c) % w.len()] % q).unwrap()).collect())
                .collect();
            let wm = Matrix::from_rows(&f, rows, &wrows).unwrap();
            prop_assume!(wm.is_nonsingular().unwrap());
            let moved = m.left_mul_const(&wm).unwrap();
            match (m.determinantal_divisor(2), moved.determinantal_divisor(2)) {
                (Ok(a), Ok(b)) => prop_assert!(a.is_associate(&b)),
                (Err(_), Err(_)) => {}
                _ => prop_assert!(false, "vanishing differs"),
            }
        }
    }
}
