//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};

/// Polynomial with ascending coefficients. Always normalized: the last
/// coefficient is nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// Coefficients given as integers of the prime subfield, reduced mod p.
    pub fn from_ints(field: &Field, coeffs: &[u64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn monomial(field: &Field, c: Elem, e: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; e + 1];
        coeffs[e] = c;
        Poly::new(field, coeffs)
    }

    /// `x^m - lambda`.
    pub fn binomial(field: &Field, m: usize, lambda: Elem) -> Poly {
        let mut coeffs = vec![Elem::ZERO; m + 1];
        coeffs[m] = Elem::ONE;
        coeffs[0] = field.sub(coeffs[0], lambda);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, c))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, c))
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(f));
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, out))
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Elem::ZERO; k];
        c.extend_from_slice(&self.coeffs);
        Poly::new(&self.field, c)
    }

    /// Monic associate; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(self.field.inv(l).expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Some(Elem::ONE)
    }

    /// Equality up to a nonzero scalar factor.
    pub fn is_associate(&self, other: &Poly) -> bool {
        self.field == other.field && self.monic().coeffs == other.monic().coeffs
    }

    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let f = &self.field;
        let db = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lead_inv = f.inv(divisor.coeffs[db]).expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - db];
        for top in (db..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, lead_inv);
            quot[top - db] = t;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let idx = top - db + j;
                rem[idx] = f.sub(rem[idx], f.mul(t, b));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, modulus: &Poly) -> Result<Poly> {
        Ok(self.divrem(modulus)?.1)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divrem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd. `gcd(a, 0)` is the monic associate of `a`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic gcd of a list; zero entries are skipped. Errors if all vanish.
    pub fn gcd_many<'a, I>(items: I) -> Result<Poly>
    where
        I: IntoIterator<Item = &'a Poly>,
    {
        let mut acc: Option<Poly> = None;
        for p in items {
            acc = Some(match acc {
                None => p.clone(),
                Some(a) => {
                    if a.is_zero() {
                        p.clone()
                    } else if p.is_zero() {
                        a
                    } else {
                        a.gcd(p)?
                    }
                }
            });
            if acc.as_ref().is_some_and(|a| a.degree() == Some(0)) {
                break;
            }
        }
        match acc {
            Some(a) if !a.is_zero() => Ok(a.monic()),
            _ => Err(Error::BothZero),
        }
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s2 = s0.sub(&q.mul(&s1)?)?;
            let t2 = t0.sub(&q.mul(&t1)?)?;
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let li = f.inv(r0.lead().expect("nonzero")).expect("nonzero");
        Ok((r0.scale(li), s0.scale(li), t0.scale(li)))
    }

    /// Monic lcm of two nonzero polynomials.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let g = self.gcd(other)?;
        let prod = self.mul(other)?;
        Ok(prod.div_exact(&g)?.expect("gcd divides the product").monic())
    }

    /// `x^deg(a) * a(1/x)`: the coefficient list reversed, then normalized.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Ok(Poly::new(&self.field, c))
    }

    /// True when `self` is a nonzero scalar multiple of its reciprocal.
    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()?.is_associate(self))
    }

    pub fn eval(&self, v: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, v), c))
    }

    /// CRT idempotents: `f_i = 1 mod moduli[i]`, `f_i = 0 mod moduli[j]` for
    /// `j != i`, each reduced modulo the product of all moduli.
    pub fn crt_idempotents(moduli: &[Poly]) -> Result<Vec<Poly>> {
        let Some(first) = moduli.first() else {
            return Ok(Vec::new());
        };
        let f = first.field().clone();
        for m in moduli {
            if m.is_zero() {
                return Err(Error::ZeroArgument);
            }
            first.same_field(m)?;
        }
        for i in 0..moduli.len() {
            for j in i + 1..moduli.len() {
                if moduli[i].gcd(&moduli[j])?.degree() != Some(0) {
                    return Err(Error::NotCoprime(i, j));
                }
            }
        }
        let product = moduli.iter().try_fold(Poly::one(&f), |acc, m| acc.mul(m))?;
        moduli
            .iter()
            .map(|m| {
                let cofactor = product.div_exact(m)?.expect("factor of the product");
                // s*cofactor + t*m = 1, so s*cofactor is 1 mod m and 0 mod the rest
                let (_, s, _) = cofactor.ext_gcd(m)?;
                s.mul(&cofactor)?.rem(&product)
            })
            .collect()
    }

    /// Parses a polynomial literal such as `w^3 + w^7*x + w^6*x^2` or
    /// `x^3 - 2`. Terms are `c`, `x`, `x^e`, `c*x`, `c*x^e`.
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        let fail = |column: usize, message: String| Error::Literal {
            input: s.to_string(),
            column,
            message,
        };
        // split at top-level signs, remembering each term's offset
        let mut terms: Vec<(bool, usize, &str)> = Vec::new();
        let mut depth = 0i32;
        let mut start = 0usize;
        let mut negative = false;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 => {
                    let piece = &s[start..i];
                    if !piece.trim().is_empty() {
                        terms.push((negative, start, piece));
                    } else if !terms.is_empty() || i != s.len() - s.trim_start().len() {
                        return Err(fail(i, "dangling sign".into()));
                    }
                    negative = ch == '-';
                    start = i + 1;
                }
                _ => {}
            }
        }
        let tail = &s[start..];
        if tail.trim().is_empty() {
            return Err(fail(s.len(), "expected a term".into()));
        }
        terms.push((negative, start, tail));

        let mut acc = Poly::zero(field);
        for (neg, offset, raw) in terms {
            let term = raw.trim();
            let col = offset + (raw.len() - raw.trim_start().len());
            let (coef_str, xpart) = match term.rfind('*') {
                Some(star) => (Some(term[..star].trim()), Some(term[star + 1..].trim())),
                None if term.starts_with('x') => (None, Some(term)),
                None => (Some(term), None),
            };
            let coef = match coef_str {
                Some(c) => field
                    .parse_elem(c)
                    .map_err(|e| fail(col, e.to_string()))?,
                None => Elem::ONE,
            };
            let exp = match xpart {
                None => 0,
                Some(xp) => {
                    let rest = xp
                        .strip_prefix('x')
                        .ok_or_else(|| fail(col, format!("expected x in {xp:?}")))?
                        .trim();
                    if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.trim().parse::<usize>().ok())
                            .ok_or_else(|| fail(col, format!("bad exponent in {xp:?}")))?
                    }
                }
            };
            let coef = if neg { field.neg(coef) } else { coef };
            acc = acc.add(&Poly::monomial(field, coef, exp))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let cs = self.field.format_elem(c);
            match (e, c == Elem::ONE) {
                (0, _) => f.write_str(&cs)?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{cs}*x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{cs}*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }
    fn f4() -> Field {
        Field::new(2, 2, &[1, 1, 1]).unwrap()
    }
    fn f5() -> Field {
        Field::prime(5).unwrap()
    }
    fn f9() -> Field {
        Field::new(3, 2, &[2, 2, 1]).unwrap()
    }
    fn p(f: &Field, s: &str) -> Poly {
        Poly::parse(f, s).unwrap()
    }

    #[test]
    fn products() {
        let f = f3();
        assert_eq!(p(&f, "x+1").mul(&p(&f, "x-1")).unwrap(), p(&f, "x^2+2"));
        let f = f5();
        let a = p(&f, "x+2");
        let cube = a.mul(&a).unwrap().mul(&a).unwrap();
        assert_eq!(cube, p(&f, "x^3+x^2+2*x+3"));
        assert_eq!(cube.add(&Poly::zero(&f)).unwrap(), cube);
    }

    #[test]
    fn division() {
        let f = f3();
        let (q, r) = p(&f, "x^5-2").divrem(&p(&f, "x+1")).unwrap();
        assert_eq!(q, p(&f, "x^4-x^3+x^2-x+1"));
        assert!(r.is_zero());
        let (q, r) = p(&f, "x^7-1").divrem(&p(&f, "x-1")).unwrap();
        assert_eq!(q, p(&f, "x^6+x^5+x^4+x^3+x^2+x+1"));
        assert!(r.is_zero());
        let a = p(&f, "2*x^3+x");
        assert_eq!(a.divrem(&a).unwrap(), (Poly::one(&f), Poly::zero(&f)));
        assert_eq!(a.divrem(&Poly::zero(&f)).unwrap_err(), Error::DivisionByZeroPoly);
        assert_eq!(p(&f, "x^5").rem(&p(&f, "x^5-2")).unwrap(), p(&f, "2"));
        let f = f5();
        assert_eq!(p(&f, "x^9").rem(&p(&f, "x^9-3")).unwrap(), p(&f, "3"));
        assert!(p(&f, "x^2+1").eval(f.from_int(2)).is_zero());
    }

    #[test]
    fn gcds() {
        let f = f4();
        let g = p(&f, "1+x+w^2*x^2").gcd(&p(&f, "x^5-w")).unwrap();
        assert_eq!(g, p(&f, "w+w*x+x^2"));
        let f = f3();
        let g = p(&f, "1+x+x^2+2*x^3+x^4").gcd(&p(&f, "x^5-2")).unwrap();
        assert_eq!(g, p(&f, "x+1"));
        let a = p(&f, "2*x+1");
        assert_eq!(a.gcd(&Poly::zero(&f)).unwrap(), a.monic());
        assert_eq!(Poly::zero(&f).gcd(&Poly::zero(&f)).unwrap_err(), Error::BothZero);
        assert_eq!(p(&f, "x+1").lcm(&p(&f, "x-1")).unwrap(), p(&f, "x^2-1"));
        assert_eq!(a.lcm(&a).unwrap(), a.monic());
        assert_eq!(a.lcm(&Poly::zero(&f)).unwrap_err(), Error::ZeroArgument);
    }

    #[test]
    fn lcm_witnesses_self_reciprocal_block() {
        // block 1 of the F_3 (2,1)-twisted example: g = x+1, x^5 - 2
        let f = f3();
        let g = p(&f, "x+1");
        let big = p(&f, "x^5-2");
        let co = big.div_exact(&g.reciprocal().unwrap()).unwrap().unwrap();
        assert_eq!(g.lcm(&co).unwrap(), big);
    }

    #[test]
    fn reciprocals() {
        let f = f3();
        assert_eq!(p(&f, "x+2").reciprocal().unwrap(), p(&f, "2*x+1"));
        assert_eq!(p(&f, "x+1").reciprocal().unwrap(), p(&f, "x+1"));
        assert!(p(&f, "x+1").is_self_reciprocal().unwrap());
        assert!(p(&f, "x-1").is_self_reciprocal().unwrap());
        let f = f5();
        assert_eq!(p(&f, "x^9-3").reciprocal().unwrap(), p(&f, "2*x^9+1"));
        assert!(!p(&f, "x+2").is_self_reciprocal().unwrap());
        assert_eq!(Poly::zero(&f).reciprocal().unwrap_err(), Error::ZeroArgument);
    }

    #[test]
    fn binomial_self_reciprocal_iff_involution() {
        for f in [f3(), f4(), f5(), f9()] {
            for lam in f.nonzero_elements() {
                let invol = f.mul(lam, lam) == Elem::ONE;
                for m in 1..=9 {
                    let b = Poly::binomial(&f, m, lam);
                    assert_eq!(b.is_self_reciprocal().unwrap(), invol, "{b} over {f:?}");
                }
            }
        }
    }

    #[test]
    fn crt() {
        let f = f3();
        let ids = Poly::crt_idempotents(&[p(&f, "x-1"), p(&f, "x+1")]).unwrap();
        assert_eq!(ids, vec![p(&f, "2*x+2"), p(&f, "x+2")]);
        let m = p(&f, "x^2+1");
        assert_eq!(Poly::crt_idempotents(std::slice::from_ref(&m)).unwrap(), vec![Poly::one(&f)]);
        assert_eq!(
            Poly::crt_idempotents(&[p(&f, "x+1"), p(&f, "x^2-1")]).unwrap_err(),
            Error::NotCoprime(0, 1)
        );

        let f = f4();
        let moduli = [p(&f, "x+w^2").mul(&p(&f, "x^2+x+w")).unwrap(), p(&f, "x^2+w*x+w")];
        let ids = Poly::crt_idempotents(&moduli).unwrap();
        check_idempotents(&moduli, &ids);
    }

    fn check_idempotents(moduli: &[Poly], ids: &[Poly]) {
        let f = moduli[0].field().clone();
        let product = moduli.iter().fold(Poly::one(&f), |a, m| a.mul(m).unwrap());
        for (i, fi) in ids.iter().enumerate() {
            for (j, m) in moduli.iter().enumerate() {
                let r = fi.rem(m).unwrap();
                if i == j {
                    assert!(r.sub(&Poly::one(&f)).unwrap().rem(m).unwrap().is_zero());
                } else {
                    assert!(r.is_zero());
                }
                if i != j {
                    assert!(fi.mul(&ids[j]).unwrap().rem(&product).unwrap().is_zero());
                }
            }
        }
        let sum = ids.iter().fold(Poly::zero(&f), |a, x| a.add(x).unwrap());
        assert!(sum.sub(&Poly::one(&f)).unwrap().rem(&product).unwrap().is_zero());
    }

    #[test]
    fn parse_and_print() {
        let f = f9();
        let a = p(&f, "w^3 + w^7*x + w^6*x^2");
        assert_eq!(a.to_string(), "w^3 + w^7*x + w^6*x^2");
        assert_eq!(p(&f, "-x^3 + 2"), p(&f, "2 + 2*x^3"));
        assert_eq!(p(&f, "x"), Poly::monomial(&f, Elem::ONE, 1));
        assert_eq!(p(&f, "(1,1)*x"), p(&f, "w^2*x"));
        assert!(Poly::parse(&f, "x +").is_err());
        assert!(Poly::parse(&f, "3*x").is_err());
        assert!(Poly::parse(&f, "x^").is_err());
        assert!(Poly::parse(&f, "y").is_err());
        assert_eq!(Poly::zero(&f).to_string(), "0");
    }

    fn field_strategy() -> impl Strategy<Value = Field> {
        prop_oneof![Just(f3()), Just(f4()), Just(f5()), Just(f9())]
    }

    fn poly_of(f: &Field, codes: &[usize]) -> Poly {
        let q = f.order();
        Poly::new(f, codes.iter().map(|&c| f.elem_from_code(c % q).unwrap()).collect())
    }

    proptest! {
        #[test]
        fn euclid_contract(f in field_strategy(),
                           a in prop::collection::vec(0usize..9, 0..10),
                           b in prop::collection::vec(0usize..9, 1..6)) {
            let a = poly_of(&f, &a);
            let b = poly_of(&f, &b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a.clone());
            prop_assert!(r.degree().is_none_or(|dr| dr < b.degree().unwrap()));
        }

        #[test]
        fn gcd_lcm_laws(f in field_strategy(),
                        a in prop::collection::vec(0usize..9, 1..8),
                        b in prop::collection::vec(0usize..9, 1..8)) {
            let a = poly_of(&f, &a);
            let b = poly_of(&f, &b);
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.is_monic());
            prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
            let l = a.lcm(&b).unwrap();
            prop_assert_eq!(g.mul(&l).unwrap(), a.mul(&b).unwrap().monic());
            let (g2, s, t) = a.ext_gcd(&b).unwrap();
            prop_assert_eq!(&g2, &g);
            prop_assert_eq!(s.mul(&a).unwrap().add(&t.mul(&b).unwrap()).unwrap(), g);
        }

        #[test]
        fn reciprocal_involution(f in field_strategy(),
                                 a in prop::collection::vec(0usize..9, 1..8)) {
            let a = poly_of(&f, &a);
            prop_assume!(!a.is_zero() && !a.coeff(0).is_zero());
            let r = a.reciprocal().unwrap();
            prop_assert_eq!(r.degree(), a.degree());
            prop_assert!(r.reciprocal().unwrap().is_associate(&a));
        }

        #[test]
        fn idempotent_laws(f in field_strategy(),
                           ms in prop::collection::vec(prop::collection::vec(0usize..9, 1..4), 1..4)) {
            let moduli: Vec<Poly> = ms.iter().map(|m| poly_of(&f, m)).collect();
            prop_assume!(moduli.iter().all(|m| !m.is_zero()));
            match Poly::crt_idempotents(&moduli) {
                Ok(ids) => check_idempotents(&moduli, &ids),
                Err(Error::NotCoprime(i, j)) => {
                    prop_assert!(moduli[i].gcd(&moduli[j]).unwrap().degree() != Some(0));
                }
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }
    }
}
