//! Arithmetic in the binary fields F_2, F_4, F_16 and F_64.
//!
//! Every field is stored in a polynomial basis over F_2 with a fixed
//! defining polynomial:
//!
//! | field | modulus         |
//! |-------|-----------------|
//! | F_2   | t               |
//! | F_4   | t^2 + t + 1     |
//! | F_16  | t^4 + t + 1     |
//! | F_64  | t^6 + t + 1     |
//!
//! The class of `t` generates the multiplicative group in each case. The
//! cube root of unity `ω` is fixed as `t^((2^k - 1) / 3)`; in F_4 this is `t`
//! itself, so the embeddings F_4 → F_16 and F_4 → F_64 send `ω` to `ω`.
//! F_16 and F_64 are not nested (4 does not divide 6) and no embedding
//! between them exists.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub};

use crate::error::{parse_err, Error, Result};

/// Which of the supported fields an element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    F2,
    F4,
    F16,
    F64,
}

impl Degree {
    pub const ALL: [Degree; 4] = [Degree::F2, Degree::F4, Degree::F16, Degree::F64];

    /// Extension degree `k` over F_2.
    pub const fn k(self) -> u32 {
        match self {
            Degree::F2 => 1,
            Degree::F4 => 2,
            Degree::F16 => 4,
            Degree::F64 => 6,
        }
    }

    pub fn from_k(k: u32) -> Result<Self> {
        match k {
            1 => Ok(Degree::F2),
            2 => Ok(Degree::F4),
            4 => Ok(Degree::F16),
            6 => Ok(Degree::F64),
            other => Err(Error::UnsupportedDegree(other)),
        }
    }

    /// Number of elements, `2^k`.
    pub const fn order(self) -> usize {
        1 << self.k()
    }

    const fn modulus(self) -> u16 {
        match self {
            Degree::F2 => 0b10,
            Degree::F4 => 0b111,
            Degree::F16 => 0b1_0011,
            Degree::F64 => 0b100_0011,
        }
    }

    const fn omega_bits(self) -> Option<u8> {
        match self {
            Degree::F2 => None,
            Degree::F4 => Some(0b10),
            Degree::F16 => Some(0b110),
            Degree::F64 => Some(0b11_1011),
        }
    }

    /// True when F_{2^self} is a subfield of F_{2^other}.
    pub const fn divides(self, other: Degree) -> bool {
        other.k() % self.k() == 0
    }

    /// Smallest supported field containing both, if any.
    pub fn join(self, other: Degree) -> Option<Degree> {
        Degree::ALL
            .into_iter()
            .find(|d| self.divides(*d) && other.divides(*d))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

/// An element of F_{2^k}, k ∈ {1, 2, 4, 6}.
///
/// `bits` holds the coordinates in the basis `1, t, ..., t^(k-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf {
    degree: Degree,
    bits: u8,
}

impl Gf {
    pub fn new(bits: u8, degree: Degree) -> Result<Self> {
        if (bits as usize) < degree.order() {
            Ok(Gf { degree, bits })
        } else {
            Err(parse_err(
                &format!("{bits:#b}"),
                format!("more than {} coordinates", degree.k()),
            ))
        }
    }

    pub const fn zero(degree: Degree) -> Self {
        Gf { degree, bits: 0 }
    }

    pub const fn one(degree: Degree) -> Self {
        Gf { degree, bits: 1 }
    }

    /// The basis generator `t`.
    pub fn generator(degree: Degree) -> Self {
        match degree {
            Degree::F2 => Gf::one(degree),
            _ => Gf { degree, bits: 0b10 },
        }
    }

    /// The fixed primitive cube root of unity; F_2 has none.
    pub fn omega(degree: Degree) -> Result<Self> {
        degree
            .omega_bits()
            .map(|bits| Gf { degree, bits })
            .ok_or(Error::NoEmbedding {
                from: Degree::F4,
                to: degree,
            })
    }

    /// `ω` in F_4, the most common constant in this crate.
    pub const fn w() -> Self {
        Gf {
            degree: Degree::F4,
            bits: 0b10,
        }
    }

    pub const fn w2() -> Self {
        Gf {
            degree: Degree::F4,
            bits: 0b11,
        }
    }

    pub const fn bits(self) -> u8 {
        self.bits
    }

    pub const fn degree(self) -> Degree {
        self.degree
    }

    pub const fn is_zero(self) -> bool {
        self.bits == 0
    }

    fn same_field(self, other: Gf) -> Result<Degree> {
        if self.degree == other.degree {
            Ok(self.degree)
        } else {
            Err(Error::DegreeMismatch(self.degree, other.degree))
        }
    }

    pub fn try_add(self, other: Gf) -> Result<Gf> {
        let degree = self.same_field(other)?;
        Ok(Gf {
            degree,
            bits: self.bits ^ other.bits,
        })
    }

    pub fn try_mul(self, other: Gf) -> Result<Gf> {
        let degree = self.same_field(other)?;
        Ok(Gf {
            degree,
            bits: mul_bits(self.bits, other.bits, degree),
        })
    }

    pub fn inv(self) -> Result<Gf> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        // a^(2^k - 2) = a^-1 on the multiplicative group.
        Ok(self.pow(self.degree.order() as u64 - 2))
    }

    pub fn try_div(self, other: Gf) -> Result<Gf> {
        self.same_field(other)?;
        Ok(self * other.inv()?)
    }

    pub fn pow(self, mut e: u64) -> Gf {
        let mut base = self;
        let mut acc = Gf::one(self.degree);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn square(self) -> Gf {
        self * self
    }

    /// The absolute Frobenius `x ↦ x^2`.
    pub fn frobenius(self) -> Gf {
        self.square()
    }

    /// Image under the canonical embedding into `target`.
    pub fn embed(self, target: Degree) -> Result<Gf> {
        if self.degree == target {
            return Ok(self);
        }
        match (self.degree, target) {
            (Degree::F2, _) => Ok(Gf {
                degree: target,
                bits: self.bits,
            }),
            (Degree::F4, Degree::F16 | Degree::F64) => {
                let w = Gf::omega(target)?;
                let mut out = Gf::zero(target);
                if self.bits & 1 == 1 {
                    out = out + Gf::one(target);
                }
                if self.bits & 2 == 2 {
                    out = out + w;
                }
                Ok(out)
            }
            (from, to) => Err(Error::NoEmbedding { from, to }),
        }
    }

    /// Preimage in F_4 when the element lies in the image of F_4.
    pub fn to_f4(self) -> Option<Gf> {
        if self.degree == Degree::F2 {
            return self.embed(Degree::F4).ok();
        }
        enumerate(Degree::F4)
            .into_iter()
            .find(|c| c.embed(self.degree).ok() == Some(self))
    }

    /// Preimage in F_2 when the element is 0 or 1.
    pub fn to_f2(self) -> Option<Gf> {
        (self.bits <= 1).then_some(Gf {
            degree: Degree::F2,
            bits: self.bits,
        })
    }

    /// Parses the textual grammar used by [`fmt::Display`]: a `+`-separated
    /// sum of `0`, `1`, `w`, `w^2`, `t` and `t^n`, evaluated in `degree`.
    pub fn parse(input: &str, degree: Degree) -> Result<Gf> {
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Err(parse_err(input, "empty element"));
        }
        let mut acc = Gf::zero(degree);
        for term in trimmed.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            let value = match term.as_str() {
                "0" => Gf::zero(degree),
                "1" => Gf::one(degree),
                "w" => Gf::omega(degree).map_err(|e| parse_err(input, e.to_string()))?,
                "w^2" => Gf::omega(degree)
                    .map_err(|e| parse_err(input, e.to_string()))?
                    .square(),
                "t" => Gf::generator(degree),
                t if t.starts_with("t^") => {
                    let e: u64 = t[2..]
                        .parse()
                        .map_err(|_| parse_err(input, format!("bad exponent in {t:?}")))?;
                    Gf::generator(degree).pow(e)
                }
                other => return Err(parse_err(input, format!("unknown term {other:?}"))),
            };
            acc = acc + value;
        }
        Ok(acc)
    }
}

fn mul_bits(a: u8, b: u8, degree: Degree) -> u8 {
    let k = degree.k();
    let modulus = degree.modulus();
    let mut a = a as u16;
    let mut b = b as u16;
    let mut acc: u16 = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> k & 1 == 1 {
            a ^= modulus;
        }
    }
    acc as u8
}

/// All elements of F_{2^k} in increasing coordinate order (0 first, then 1).
pub fn enumerate(degree: Degree) -> Vec<Gf> {
    (0..degree.order())
        .map(|bits| Gf {
            degree,
            bits: bits as u8,
        })
        .collect()
}

/// [`enumerate`] keyed by the extension degree `k`.
pub fn enumerate_field(k: u32) -> Result<Vec<Gf>> {
    Ok(enumerate(Degree::from_k(k)?))
}

impl Add for Gf {
    type Output = Gf;

    /// Panics when the operands live in different fields; use
    /// [`Gf::try_add`] for a checked version.
    fn add(self, rhs: Gf) -> Gf {
        self.try_add(rhs).expect("field addition across degrees")
    }
}

impl Sub for Gf {
    type Output = Gf;

    fn sub(self, rhs: Gf) -> Gf {
        self + rhs
    }
}

impl Neg for Gf {
    type Output = Gf;

    fn neg(self) -> Gf {
        self
    }
}

impl Mul for Gf {
    type Output = Gf;

    fn mul(self, rhs: Gf) -> Gf {
        self.try_mul(rhs).expect("field multiplication across degrees")
    }
}

impl Div for Gf {
    type Output = Gf;

    /// Panics on division by zero; use [`Gf::try_div`] otherwise.
    fn div(self, rhs: Gf) -> Gf {
        self.try_div(rhs).expect("field division")
    }
}

impl AddAssign for Gf {
    fn add_assign(&mut self, rhs: Gf) {
        *self = *self + rhs;
    }
}

impl MulAssign for Gf {
    fn mul_assign(&mut self, rhs: Gf) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(small) = self.to_f4() {
            let s = match small.bits {
                0 => "0",
                1 => "1",
                2 => "w",
                _ => "w^2",
            };
            return f.write_str(s);
        }
        let mut terms = Vec::new();
        for i in (0..self.degree.k()).rev() {
            if self.bits >> i & 1 == 1 {
                terms.push(match i {
                    0 => "1".to_string(),
                    1 => "t".to_string(),
                    _ => format!("t^{i}"),
                });
            }
        }
        f.write_str(&terms.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Gf {
        Gf::w()
    }

    #[test]
    fn omega_identities() {
        assert_eq!(w() + w().square(), Gf::one(Degree::F4));
        assert_eq!(w() * w().square(), Gf::one(Degree::F4));
        assert_eq!(w().inv().unwrap(), w().square());
        assert_eq!(w().square(), Gf::w2());
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(w().frobenius(), w().square());
        assert_eq!(Gf::zero(Degree::F4).frobenius(), Gf::zero(Degree::F4));
        for x in enumerate(Degree::F4) {
            assert_eq!(x.frobenius().frobenius(), x);
        }
    }

    #[test]
    fn frobenius_order_equals_degree() {
        for d in Degree::ALL {
            for x in enumerate(d) {
                let mut y = x;
                for _ in 0..d.k() {
                    y = y.frobenius();
                }
                assert_eq!(y, x, "{d}");
                assert_eq!(x.pow(d.order() as u64), x);
            }
        }
        // Frobenius fixes exactly F_2 inside every field.
        for d in Degree::ALL {
            let fixed = enumerate(d).into_iter().filter(|x| x.frobenius() == *x).count();
            assert_eq!(fixed, 2);
        }
    }

    #[test]
    fn enumerate_field_shape() {
        assert_eq!(enumerate_field(2).unwrap().len(), 4);
        assert_eq!(enumerate_field(4).unwrap().len(), 16);
        let f64 = enumerate_field(6).unwrap();
        assert_eq!(f64.len(), 64);
        assert!(f64[0].is_zero());
        assert_eq!(f64[1], Gf::one(Degree::F64));
        assert!(f64.iter().all(|x| x.pow(64) == *x));
        assert_eq!(enumerate_field(3), Err(Error::UnsupportedDegree(3)));
        assert_eq!(enumerate_field(8), Err(Error::UnsupportedDegree(8)));
    }

    #[test]
    fn error_paths() {
        assert_eq!(Gf::zero(Degree::F16).inv(), Err(Error::ZeroInverse));
        let a = Gf::one(Degree::F4);
        let b = Gf::one(Degree::F64);
        assert_eq!(a.try_add(b), Err(Error::DegreeMismatch(Degree::F4, Degree::F64)));
        assert_eq!(a.try_mul(b), Err(Error::DegreeMismatch(Degree::F4, Degree::F64)));
        assert!(matches!(
            Gf::one(Degree::F16).embed(Degree::F64),
            Err(Error::NoEmbedding { .. })
        ));
        assert!(Gf::omega(Degree::F2).is_err());
        assert!(Gf::new(4, Degree::F4).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_f16() {
        let els = enumerate(Degree::F16);
        for &a in &els {
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), Gf::one(Degree::F16));
            }
            for &b in &els {
                assert_eq!(a * b, b * a);
                assert_eq!(a + b, b + a);
                for &c in &els {
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn field_axioms_f64_pass() {
        let els = enumerate(Degree::F64);
        let one = Gf::one(Degree::F64);
        for &a in &els {
            if !a.is_zero() {
                assert_eq!(a * a.inv().unwrap(), one);
            }
            for &b in &els {
                assert_eq!(a * b, b * a);
                // one c per (a, b) pair keeps the pass at 64^2 triples
                let c = Gf::new(a.bits() ^ b.bits().rotate_left(1) & 63, Degree::F64).unwrap();
                assert_eq!((a * b) * c, a * (b * c));
                assert_eq!(a * (b + c), a * b + a * c);
            }
        }
    }

    #[test]
    fn generator_is_primitive() {
        for d in [Degree::F4, Degree::F16, Degree::F64] {
            let g = Gf::generator(d);
            let n = d.order() as u64 - 1;
            let order = (1..=n).find(|&e| g.pow(e) == Gf::one(d)).unwrap();
            assert_eq!(order, n, "{d}");
        }
    }

    #[test]
    fn omega_choice_and_embeddings() {
        for d in [Degree::F4, Degree::F16, Degree::F64] {
            let w = Gf::omega(d).unwrap();
            assert_eq!(w, Gf::generator(d).pow((d.order() as u64 - 1) / 3));
            assert_eq!(w * w + w + Gf::one(d), Gf::zero(d));
            assert_eq!(Gf::w().embed(d).unwrap(), w);
        }
        // embeddings are injective ring maps commuting with Frobenius
        for target in [Degree::F16, Degree::F64] {
            let f4 = enumerate(Degree::F4);
            let images: std::collections::BTreeSet<_> =
                f4.iter().map(|x| x.embed(target).unwrap()).collect();
            assert_eq!(images.len(), 4);
            for &a in &f4 {
                let ea = a.embed(target).unwrap();
                assert_eq!(a.frobenius().embed(target).unwrap(), ea.frobenius());
                for &b in &f4 {
                    let eb = b.embed(target).unwrap();
                    assert_eq!((a * b).embed(target).unwrap(), ea * eb);
                    assert_eq!((a + b).embed(target).unwrap(), ea + eb);
                }
            }
        }
        for d in Degree::ALL {
            for x in enumerate(Degree::F2) {
                assert_eq!(x.embed(d).unwrap().to_f2(), Some(x));
            }
        }
    }

    #[test]
    fn rendering_and_parsing() {
        assert_eq!(w().to_string(), "w");
        assert_eq!(Gf::w2().to_string(), "w^2");
        assert_eq!(Gf::omega(Degree::F64).unwrap().to_string(), "w");
        assert_eq!(Gf::generator(Degree::F64).to_string(), "t");
        assert_eq!(Gf::generator(Degree::F64).pow(5).to_string(), "t^5");
        for d in Degree::ALL {
            for x in enumerate(d) {
                assert_eq!(Gf::parse(&x.to_string(), d).unwrap(), x);
            }
        }
        assert_eq!(Gf::parse("w + 1", Degree::F4).unwrap(), Gf::w2());
        assert_eq!(Gf::parse("t^6", Degree::F64).unwrap(), Gf::parse("t+1", Degree::F64).unwrap());
        assert!(Gf::parse("x", Degree::F4).is_err());
        assert!(Gf::parse("", Degree::F4).is_err());
        assert!(Gf::parse("w", Degree::F2).is_err());
    }
}
