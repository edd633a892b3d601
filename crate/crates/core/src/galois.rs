//! Arithmetic in GF(p^d) for small fields (p^d <= 256).
//!
//! A field is described by a prime `p` and a monic irreducible modulus of
//! degree `d` over Z_p. Elements are coefficient tuples in the basis
//! `1, w, w^2, ...` where `w` is the class of `x`; internally a tuple is
//! packed into one byte as `c0 + c1*p + c2*p^2 + ...`, and the field keeps
//! full addition and multiplication tables built from the tuple arithmetic.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Packed element code, meaningful only together with its [`Field`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Elem(u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldData {
    p: u32,
    d: usize,
    q: usize,
    modulus: Vec<u32>,
    omega: Elem,
    omega_order: Option<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    /// discrete log base w, present only when w is primitive (used for printing)
    log: Option<Vec<u32>>,
}

/// A finite field GF(p^d). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus {:?})", self.0.p, self.0.d, self.0.modulus)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

/// Remainder of `a` modulo monic `m`, coefficients in Z_p, ascending.
fn zp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (j, &c) in m.iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - c) * lead) % p;
            }
        }
        r.pop();
    }
    r
}

fn zp_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn zp_is_irreducible(m: &[u32], p: u32) -> bool {
    let d = m.len() - 1;
    // try every monic divisor of degree 1..=d/2
    for deg in 1..=d / 2 {
        let count = (p as usize).pow(deg as u32);
        for idx in 0..count {
            let mut f = Vec::with_capacity(deg + 1);
            let mut v = idx;
            for _ in 0..deg {
                f.push((v % p as usize) as u32);
                v /= p as usize;
            }
            f.push(1);
            if zp_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^d) from a monic modulus given as ascending coefficients
    /// `[c0, c1, ..., 1]`.
    pub fn new(p: u32, d: usize, modulus: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if d == 0 || modulus.len() != d + 1 {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: modulus.len().saturating_sub(1),
            });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::CoefficientOutOfRange { value: c as u64, p });
        }
        if modulus[d] != 1 {
            return Err(Error::ModulusNotMonic);
        }
        let q = (p as u64).pow(d as u32);
        if q > 256 {
            return Err(Error::FieldTooLarge(q));
        }
        if !zp_is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus(p));
        }
        let q = q as usize;

        let unpack = |code: usize| -> Vec<u32> {
            let mut v = code;
            (0..d)
                .map(|_| {
                    let c = (v % p as usize) as u32;
                    v /= p as usize;
                    c
                })
                .collect()
        };
        let pack = |coeffs: &[u32]| -> u8 {
            coeffs.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize) as u8
        };
        let tuples: Vec<Vec<u32>> = (0..q).map(unpack).collect();

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = tuples[a]
                    .iter()
                    .zip(&tuples[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = pack(&s);
                let mut prod = zp_rem(&zp_mul(&tuples[a], &tuples[b], p), modulus, p);
                prod.resize(d, 0);
                mul[a * q + b] = pack(&prod);
            }
        }
        let neg: Vec<u8> = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8)
            .collect();
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8;
        }

        // w is the class of x
        let omega = if d >= 2 {
            p as u8
        } else {
            ((p - modulus[0]) % p) as u8
        };
        let omega_order = if omega == 0 {
            None
        } else {
            let mut acc = omega;
            let mut k = 1u32;
            while acc != 1 {
                acc = mul[acc as usize * q + omega as usize];
                k += 1;
            }
            Some(k)
        };
        let log = match omega_order {
            Some(ord) if ord as usize == q - 1 => {
                let mut log = vec![0u32; q];
                let mut acc = 1u8;
                for k in 0..ord {
                    log[acc as usize] = k;
                    acc = mul[acc as usize * q + omega as usize];
                }
                Some(log)
            }
            _ => None,
        };

        Ok(Field(Arc::new(FieldData {
            p,
            d,
            q,
            modulus: modulus.to_vec(),
            omega: Elem(omega),
            omega_order,
            add,
            mul,
            neg,
            inv,
            log,
        })))
    }

    /// The prime field Z_p, presented with modulus `x`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, &[0, 1])
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.d
    }

    pub fn order(&self) -> usize {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Multiplicative order of `w`; `None` when `w = 0` (modulus `x`).
    pub fn omega_order(&self) -> Option<u32> {
        self.0.omega_order
    }

    pub fn omega_is_primitive(&self) -> bool {
        self.0.log.is_some()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.0.q).map(|c| Elem(c as u8))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.0.q).map(|c| Elem(c as u8))
    }

    pub fn elem_from_code(&self, code: usize) -> Result<Elem> {
        if code < self.0.q {
            Ok(Elem(code as u8))
        } else {
            Err(Error::CoefficientOutOfRange { value: code as u64, p: self.0.p })
        }
    }

    /// Element of the prime subfield, reduced mod p.
    pub fn from_int(&self, v: u64) -> Elem {
        Elem((v % self.0.p as u64) as u8)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.0.d {
            return Err(Error::DegreeMismatch { expected: self.0.d, found: coeffs.len() });
        }
        let p = self.0.p;
        if let Some(&c) = coeffs.iter().find(|&&c| c >= p) {
            return Err(Error::CoefficientOutOfRange { value: c as u64, p });
        }
        let code = coeffs.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize);
        Ok(Elem(code as u8))
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let p = self.0.p as usize;
        let mut v = a.0 as usize;
        (0..self.0.d)
            .map(|_| {
                let c = (v % p) as u32;
                v /= p;
                c
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.add[a.0 as usize * self.0.q + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.0.mul[a.0 as usize * self.0.q + b.0 as usize])
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            None
        } else {
            Some(Elem(self.0.inv[a.0 as usize]))
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn omega(&self) -> Elem {
        self.0.omega
    }

    pub fn omega_pow(&self, k: u64) -> Elem {
        self.pow(self.0.omega, k)
    }

    /// Raw row of the addition table, `add_row(a)[b] = a + b`.
    #[inline]
    pub(crate) fn add_row(&self, a: Elem) -> &[u8] {
        let q = self.0.q;
        &self.0.add[a.0 as usize * q..(a.0 as usize + 1) * q]
    }

    /// Log base w of a nonzero element, when w is primitive.
    pub fn omega_log(&self, a: Elem) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        self.0.log.as_ref().map(|l| l[a.0 as usize])
    }

    /// Prints `a` the way the fixtures do: prime-subfield elements as
    /// integers, others as `w^k` when w is primitive, else as a tuple.
    pub fn format_elem(&self, a: Elem) -> String {
        let p = self.0.p as usize;
        if (a.0 as usize) < p {
            return a.0.to_string();
        }
        match self.omega_log(a) {
            Some(1) => "w".to_string(),
            Some(k) => format!("w^{k}"),
            None => {
                let c: Vec<String> = self.coeffs(a).iter().map(|c| c.to_string()).collect();
                format!("({})", c.join(","))
            }
        }
    }

    /// Parses an element literal: a decimal integer below p, `w`, `w^k`,
    /// or a coefficient tuple `(c0,c1,...)`.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let t = s.trim();
        let fail = |column: usize, message: &str| Error::Literal {
            input: s.to_string(),
            column,
            message: message.to_string(),
        };
        if t.is_empty() {
            return Err(fail(0, "empty element literal"));
        }
        if let Some(rest) = t.strip_prefix('w') {
            let rest = rest.trim_start();
            if rest.is_empty() {
                return Ok(self.omega());
            }
            let exp = rest
                .strip_prefix('^')
                .ok_or_else(|| fail(1, "expected '^' after 'w'"))?
                .trim();
            let k: u64 = exp.parse().map_err(|_| fail(2, "bad exponent"))?;
            return Ok(self.omega_pow(k));
        }
        if let Some(inner) = t.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| fail(t.len(), "unterminated tuple"))?;
            let coeffs = inner
                .split(',')
                .map(|c| c.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| fail(1, "bad tuple coefficient"))?;
            if coeffs.len() != self.0.d {
                return Err(fail(1, &format!("tuple must have {} coefficients", self.0.d)));
            }
            return self.from_coeffs(&coeffs).map_err(|e| fail(1, &e.to_string()));
        }
        let v: u64 = t.parse().map_err(|_| fail(0, "not an element literal"))?;
        if v >= self.0.p as u64 {
            return Err(fail(0, &format!("integer must be below the characteristic {}", self.0.p)));
        }
        Ok(Elem(v as u8))
    }
}

/// An element bundled with its field; every binary operation checks that
/// both operands share a field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_elem(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_elem(self.value))
    }
}

impl FieldElement {
    pub fn new(field: &Field, value: Elem) -> Self {
        FieldElement { field: field.clone(), value }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement::new(&self.field, self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement::new(&self.field, self.field.sub(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement::new(&self.field, self.field.neg(self.value))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(FieldElement::new(&self.field, self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let v = self.field.inv(self.value).ok_or(Error::ZeroInverse)?;
        Ok(FieldElement::new(&self.field, v))
    }

    pub fn pow(&self, k: u64) -> FieldElement {
        FieldElement::new(&self.field, self.field.pow(self.value, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Field {
        Field::new(3, 2, &[2, 2, 1]).unwrap()
    }

    fn f4() -> Field {
        Field::new(2, 2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1, &[0, 1]).unwrap_err(), Error::NonPrimeCharacteristic(4));
        assert_eq!(Field::new(3, 2, &[2, 0, 1]).unwrap_err(), Error::ReducibleModulus(3));
        assert!(matches!(Field::new(3, 2, &[2, 1]), Err(Error::DegreeMismatch { .. })));
        assert_eq!(Field::new(3, 2, &[2, 2, 2]).unwrap_err(), Error::ModulusNotMonic);
        assert_eq!(Field::new(17, 2, &[3, 0, 1]).unwrap_err(), Error::FieldTooLarge(289));
    }

    #[test]
    fn omega_orders() {
        assert_eq!(f9().omega_order(), Some(8));
        assert_eq!(f4().omega_order(), Some(3));
        assert_eq!(Field::prime(5).unwrap().omega_order(), None);
        assert_eq!(Field::new(5, 1, &[3, 1]).unwrap().omega_order(), Some(4));
    }

    #[test]
    fn small_arithmetic() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.add(Elem(3), Elem(4)), Elem(2));
        assert_eq!(f5.inv(Elem(3)), Some(Elem(2)));
        let f4 = f4();
        let w = f4.omega();
        assert_eq!(f4.add(w, w), Elem::ZERO);
        assert_eq!(f4.mul(w, f4.omega_pow(2)), Elem::ONE);
        assert_eq!(f4.inv(w), Some(f4.omega_pow(2)));
        assert_eq!(f4.omega_pow(3), Elem::ONE);
        let f9 = f9();
        let w = f9.omega();
        assert_eq!(f9.coeffs(f9.add(w, Elem::ONE)), vec![1, 1]);
        assert_eq!(f9.mul(w, w), f9.add(w, Elem::ONE));
        assert_eq!(f9.omega_pow(4), f9.from_int(2));
        assert_eq!(f9.inv(f9.omega_pow(3)), Some(f9.omega_pow(5)));
        assert_eq!(f9.pow(Elem::ZERO, 0), Elem::ONE);
    }

    #[test]
    fn field_axioms_exhaustive() {
        let fields = [
            Field::prime(2).unwrap(),
            Field::prime(3).unwrap(),
            f4(),
            Field::prime(5).unwrap(),
            Field::prime(7).unwrap(),
            Field::new(2, 3, &[1, 1, 0, 1]).unwrap(),
            f9(),
        ];
        for f in &fields {
            let q = f.order() as u64;
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                if !a.is_zero() {
                    assert_eq!(f.pow(a, q - 1), Elem::ONE);
                    let ai = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, ai), Elem::ONE);
                    assert_eq!(f.inv(ai), Some(a));
                }
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
            }
        }
    }

    #[test]
    fn omega_powers_cycle() {
        for f in [f4(), f9()] {
            let ord = f.omega_order().unwrap() as u64;
            assert!(f.omega_is_primitive());
            for k in 0..ord {
                for j in 0..ord {
                    assert_eq!(
                        f.mul(f.omega_pow(k), f.omega_pow(j)),
                        f.omega_pow((k + j) % ord)
                    );
                }
            }
        }
    }

    #[test]
    fn literals() {
        let f9 = f9();
        assert_eq!(f9.parse_elem("w^7").unwrap(), f9.omega_pow(7));
        assert_eq!(f9.parse_elem(" w ").unwrap(), f9.omega());
        assert_eq!(f9.parse_elem("(1,1)").unwrap(), f9.omega_pow(2));
        assert_eq!(f9.parse_elem("2").unwrap(), f9.omega_pow(4));
        assert!(f9.parse_elem("3").is_err());
        assert!(f9.parse_elem("(1,1,1)").is_err());
        assert!(f9.parse_elem("v").is_err());
        for a in f9.elements() {
            assert_eq!(f9.parse_elem(&f9.format_elem(a)).unwrap(), a);
        }
        assert_eq!(f9.format_elem(f9.omega_pow(7)), "w^7");
    }

    #[test]
    fn checked_elements() {
        let f5 = Field::prime(5).unwrap();
        let f3 = Field::prime(3).unwrap();
        let a = FieldElement::new(&f5, Elem(3));
        let b = FieldElement::new(&f5, Elem(4));
        assert_eq!(a.add(&b).unwrap().value(), Elem(2));
        assert_eq!(a.inv().unwrap().value(), Elem(2));
        let c = FieldElement::new(&f3, Elem(1));
        assert_eq!(a.mul(&c).unwrap_err(), Error::FieldMismatch);
        assert_eq!(FieldElement::new(&f5, Elem::ZERO).inv().unwrap_err(), Error::ZeroInverse);
    }
}
