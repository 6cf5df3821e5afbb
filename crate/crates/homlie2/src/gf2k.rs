//! Exact arithmetic in GF(2^k).
//!
//! Elements are polynomials over GF(2) of degree < k, reduced modulo an
//! irreducible modulus of degree k, and encoded as unsigned integers whose
//! binary digits are the coefficients (least significant bit = constant
//! term). Addition is XOR; multiplication is carryless multiplication
//! followed by reduction. In characteristic 2 every element satisfies
//! x + x = 0 and the Frobenius map x -> x^2 is additive.

use crate::error::{Error, Result};
use std::fmt;

/// A concrete realization of GF(2^k): extension degree plus irreducible modulus.
///
/// The standard moduli used throughout (reproducible across implementations):
/// GF(2) = x, GF(4) = x^2+x+1, GF(8) = x^3+x+1, GF(16) = x^4+x+1,
/// GF(256) = x^8+x^4+x^3+x+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    k: u32,
    modulus: u64,
}

impl FieldSpec {
    /// Builds a field spec, checking that the modulus has degree `k` and is
    /// irreducible over GF(2) (trial division by every polynomial of degree
    /// at most k/2).
    pub fn new(k: u32, modulus: u64) -> Result<Self> {
        if k == 0 || k > 16 {
            return Err(Error::InvalidField(format!(
                "extension degree must satisfy 1 <= k <= 16, got {k}"
            )));
        }
        if poly_degree(modulus) != Some(k) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:#b} does not have degree {k}"
            )));
        }
        // Trial division: an irreducible factor of a reducible polynomial of
        // degree k has degree <= k/2.
        for d in 1..=(k / 2) {
            for low in 0..(1u64 << d) {
                let divisor = (1u64 << d) | low;
                if poly_rem(modulus, divisor) == 0 {
                    return Err(Error::NotIrreducible { degree: k, divisor });
                }
            }
        }
        Ok(FieldSpec { k, modulus })
    }

    /// The standard field of order 2^k for k in {1, 2, 3, 4, 8}.
    pub fn standard(k: u32) -> Result<Self> {
        let modulus = match k {
            1 => 0b10,
            2 => 0b111,
            3 => 0b1011,
            4 => 0b10011,
            8 => 0b1_0001_1011,
            _ => {
                return Err(Error::InvalidField(format!(
                    "no standard modulus registered for k = {k}"
                )))
            }
        };
        FieldSpec::new(k, modulus)
    }

    pub fn gf2() -> Self {
        FieldSpec::standard(1).expect("standard field")
    }

    pub fn gf4() -> Self {
        FieldSpec::standard(2).expect("standard field")
    }

    pub fn gf8() -> Self {
        FieldSpec::standard(3).expect("standard field")
    }

    pub fn gf16() -> Self {
        FieldSpec::standard(4).expect("standard field")
    }

    pub fn gf256() -> Self {
        FieldSpec::standard(8).expect("standard field")
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of field elements, 2^k.
    pub fn order(&self) -> u64 {
        1u64 << self.k
    }

    pub fn zero(&self) -> Scalar {
        Scalar { bits: 0, spec: *self }
    }

    pub fn one(&self) -> Scalar {
        Scalar { bits: 1, spec: *self }
    }

    /// The class of x, a generator of the field as a GF(2)-algebra (k >= 2).
    pub fn gen(&self) -> Scalar {
        Scalar {
            bits: if self.k == 1 { 1 } else { 2 },
            spec: *self,
        }
    }

    /// Element from its canonical bit encoding; the encoding must already be
    /// reduced (degree < k).
    pub fn scalar(&self, bits: u64) -> Result<Scalar> {
        if bits >> self.k != 0 {
            return Err(Error::ScalarOutOfRange { bits, k: self.k });
        }
        Ok(Scalar { bits, spec: *self })
    }

    /// Iterates over every field element in bit-encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        let spec = *self;
        (0..self.order()).map(move |bits| Scalar { bits, spec })
    }

    /// Iterates over the nonzero elements.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Scalar> + '_ {
        self.elements().skip(1)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})/{:#b}", self.k, self.modulus)
    }
}

/// An element of GF(2^k) in canonical (fully reduced) form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    bits: u64,
    spec: FieldSpec,
}

impl Scalar {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    fn require_same_spec(&self, other: &Scalar) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ));
        }
        Ok(())
    }

    /// Sum, failing on mismatched field specs.
    pub fn checked_add(self, other: Scalar) -> Result<Scalar> {
        self.require_same_spec(&other)?;
        Ok(Scalar {
            bits: self.bits ^ other.bits,
            spec: self.spec,
        })
    }

    /// Product (carryless multiply, reduce), failing on mismatched field specs.
    pub fn checked_mul(self, other: Scalar) -> Result<Scalar> {
        self.require_same_spec(&other)?;
        let product = clmul(self.bits, other.bits);
        Ok(Scalar {
            bits: poly_rem(product, self.spec.modulus),
            spec: self.spec,
        })
    }

    /// Multiplicative inverse, computed as a^(2^k - 2).
    pub fn inv(self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.spec.order() - 2))
    }

    pub fn pow(self, mut e: u64) -> Scalar {
        let mut base = self;
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn square(self) -> Scalar {
        self * self
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar addition")
    }
}

impl std::ops::AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

// Subtraction coincides with addition in characteristic 2.
impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self + rhs
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar multiplication")
    }
}

impl std::ops::MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "0");
        }
        if self.bits == 1 {
            return write!(f, "1");
        }
        let mut terms = Vec::new();
        for d in (0..self.spec.k).rev() {
            if (self.bits >> d) & 1 == 1 {
                terms.push(match d {
                    0 => "1".to_string(),
                    1 => "a".to_string(),
                    _ => format!("a^{d}"),
                });
            }
        }
        write!(f, "{}", terms.join("+"))
    }
}

/// Degree of a GF(2)[x] polynomial in bit encoding, `None` for zero.
fn poly_degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Carryless (GF(2)[x]) product.
fn clmul(a: u64, b: u64) -> u64 {
    let mut out = 0u64;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            out ^= b << shift;
        }
        a >>= 1;
        shift += 1;
    }
    out
}

/// Remainder of GF(2)[x] division.
fn poly_rem(mut p: u64, m: u64) -> u64 {
    let md = poly_degree(m).expect("nonzero divisor");
    while let Some(pd) = poly_degree(p) {
        if pd < md {
            break;
        }
        p ^= m << (pd - md);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_one_plus_one_is_zero() {
        let f = FieldSpec::gf2();
        assert_eq!(f.one() + f.one(), f.zero());
    }

    #[test]
    fn gf4_generator_arithmetic() {
        let f = FieldSpec::gf4();
        let a = f.gen();
        let one = f.one();
        // a + (a+1) = 1
        assert_eq!(a + (a + one), one);
        // a * a = a + 1, reducing x^2 by x^2+x+1
        assert_eq!(a * a, a + one);
        // inv(a) = a + 1 since a(a+1) = a^2 + a = 1
        assert_eq!(a.inv().unwrap(), a + one);
    }

    #[test]
    fn identity_element() {
        for k in [1, 2, 3, 4, 8] {
            let f = FieldSpec::standard(k).unwrap();
            for x in f.elements() {
                assert_eq!(f.one() * x, x);
            }
        }
    }

    #[test]
    fn gf16_exhaustive_add_involution_and_frobenius() {
        let f = FieldSpec::gf16();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!((a + b) + b, a);
                assert_eq!((a + b).square(), a.square() + b.square());
            }
        }
    }

    #[test]
    fn gf16_inverse_involution() {
        let f = FieldSpec::gf16();
        for a in f.nonzero_elements() {
            let inv = a.inv().unwrap();
            assert_eq!(a * inv, f.one());
            assert_eq!(inv.inv().unwrap(), a);
        }
    }

    /// Field axioms by full enumeration for k <= 4.
    #[test]
    fn field_axioms_exhaustive_small_k() {
        for k in [1, 2, 3, 4] {
            let f = FieldSpec::standard(k).unwrap();
            let elems: Vec<Scalar> = f.elements().collect();
            for &a in &elems {
                assert!(a.bits() >> k == 0, "canonical form violated");
                for &b in &elems {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    assert!((a + b).bits() >> k == 0);
                    assert!((a * b).bits() >> k == 0);
                    for &c in &elems {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn irreducibility_check_rejects_composites() {
        // x^2 + 1 = (x+1)^2
        assert!(matches!(
            FieldSpec::new(2, 0b101),
            Err(Error::NotIrreducible { .. })
        ));
        // x^4 + x^3 + x^2 + x = x(x^3 + x^2 + x + 1)
        assert!(FieldSpec::new(4, 0b11110).is_err());
        // degree mismatch
        assert!(FieldSpec::new(3, 0b111).is_err());
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let x = FieldSpec::gf4().one();
        let y = FieldSpec::gf16().one();
        assert!(matches!(x.checked_add(y), Err(Error::FieldMismatch(_, _))));
        assert!(matches!(x.checked_mul(y), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(FieldSpec::gf16().zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn scalar_encoding_must_be_reduced() {
        let f = FieldSpec::gf4();
        assert!(f.scalar(3).is_ok());
        assert!(matches!(
            f.scalar(4),
            Err(Error::ScalarOutOfRange { .. })
        ));
    }
}
