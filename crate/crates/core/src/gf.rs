//! Exact arithmetic in the binary fields GF(2^k), 1 <= k <= 16.
//!
//! Elements are bit vectors of coordinates in the polynomial basis,
//! packed into a `u32`. The modulus for each degree is the
//! lexicographically least monic irreducible polynomial, taken from a
//! fixed table so that every run (and every implementation) agrees on
//! the representation. `k = 1` is plain F_2; no modulus is consulted.

use crate::field::{Field, FiniteField};
use thiserror::Error;

/// Least monic irreducible polynomial of degree k over F_2, encoded with
/// bit i holding the coefficient of x^i (index 0 unused).
/// Validated by trial division in the test suite.
pub const MODULI: [u32; 17] = [
    0, 0b10, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011, 0b100011011, 0b1000000011,
    0b10000001001, 0b100000000101, 0b1000000001001, 0b10000000011011, 0b100000000100001,
    0b1000000000000011, 0b10000000000101011,
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GfError {
    #[error("extension degree {0} out of range (supported: 1..=16)")]
    DegreeOutOfRange(usize),
}

/// The field GF(2^k) with its fixed modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GaloisField {
    k: u8,
    modulus: u32,
}

/// An element of some GF(2^k): coordinates in the polynomial basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct GfElem(pub u32);

impl GaloisField {
    /// GF(2^k) with the table modulus.
    pub fn new(k: usize) -> Result<Self, GfError> {
        if !(1..=16).contains(&k) {
            return Err(GfError::DegreeOutOfRange(k));
        }
        Ok(GaloisField { k: k as u8, modulus: MODULI[k] })
    }

    /// F_2 itself.
    pub fn f2() -> Self {
        GaloisField { k: 1, modulus: MODULI[1] }
    }

    pub fn degree(&self) -> usize {
        self.k as usize
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The residue class of x, written `g` in element literals.
    /// Only defined for k >= 2; F_2 has no such element.
    pub fn generator(&self) -> Option<GfElem> {
        if self.k >= 2 {
            Some(GfElem(0b10))
        } else {
            None
        }
    }

    pub fn elem(&self, bits: u32) -> GfElem {
        debug_assert!(bits < (1u32 << self.k));
        GfElem(bits)
    }

    fn reduce(&self, mut acc: u64) -> u32 {
        let k = self.k as u32;
        let m = self.modulus as u64;
        let mut deg = 63 - acc.leading_zeros().min(63);
        while acc >= (1u64 << k) {
            acc ^= m << (deg - k);
            if acc == 0 {
                break;
            }
            deg = 63 - acc.leading_zeros();
        }
        acc as u32
    }
}

impl Field for GaloisField {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        GfElem(0)
    }

    fn one(&self) -> GfElem {
        GfElem(1)
    }

    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        GfElem(a.0 ^ b.0)
    }

    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        // Carryless product, then reduction by the modulus.
        let mut acc: u64 = 0;
        let (a, mut b) = (a.0 as u64, b.0);
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        GfElem(self.reduce(acc))
    }

    fn inv(&self, a: &GfElem) -> GfElem {
        assert!(a.0 != 0, "inversion of zero in GF(2^{})", self.k);
        // a^(2^k - 2); the multiplicative group has order 2^k - 1.
        self.pow(a, (1u64 << self.k) - 2)
    }

    fn sqrt(&self, a: &GfElem) -> Option<GfElem> {
        // Squaring is the Frobenius, a bijection: x^(2^(k-1)) inverts it.
        Some(self.pow(a, 1u64 << (self.k - 1)))
    }

    fn display(&self, a: &GfElem) -> String {
        if a.0 == 0 {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for i in (0..self.k as u32).rev() {
            if (a.0 >> i) & 1 == 1 {
                parts.push(match i {
                    0 => "1".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g^{}", i),
                });
            }
        }
        parts.join("+")
    }

    fn is_zero(&self, a: &GfElem) -> bool {
        a.0 == 0
    }

    fn is_one(&self, a: &GfElem) -> bool {
        a.0 == 1
    }
}

impl FiniteField for GaloisField {
    fn order(&self) -> u64 {
        1u64 << self.k
    }

    fn from_index(&self, i: u64) -> GfElem {
        debug_assert!(i < self.order());
        GfElem(i as u32)
    }
}

/// Irreducibility of a polynomial over F_2 (bit i = coefficient of x^i),
/// by trial division against every lower-degree monic polynomial.
pub fn irreducible_over_f2(m: u32) -> bool {
    let d = 31 - m.leading_zeros();
    if d < 1 {
        return false;
    }
    for e in 1..=(d / 2) {
        for f in (1u32 << e)..(1u32 << (e + 1)) {
            if poly_rem_f2(m, f) == 0 {
                return false;
            }
        }
    }
    true
}

fn poly_rem_f2(mut a: u32, m: u32) -> u32 {
    let dm = 31 - m.leading_zeros();
    while a != 0 {
        let da = 31 - a.leading_zeros();
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// An embedding GF(2^j) -> GF(2^(j*e)) determined by sending the
/// generator to the first root (in enumeration order) of the small
/// field's modulus inside the big field.
#[derive(Clone, Copy, Debug)]
pub struct Embedding {
    pub sub: GaloisField,
    pub sup: GaloisField,
    root: GfElem,
}

impl Embedding {
    /// Requires sub.degree() to divide sup.degree().
    pub fn new(sub: GaloisField, sup: GaloisField) -> Self {
        assert!(
            sup.degree() % sub.degree() == 0,
            "no embedding of GF(2^{}) into GF(2^{})",
            sub.degree(),
            sup.degree()
        );
        if sub.degree() == 1 {
            return Embedding { sub, sup, root: sup.one() };
        }
        let root = (0..sup.order())
            .map(|i| sup.from_index(i))
            .find(|x| eval_f2_poly(&sup, sub.modulus(), x).0 == 0)
            .expect("modulus has a root in every extension of its splitting field");
        Embedding { sub, sup, root }
    }

    pub fn apply(&self, a: GfElem) -> GfElem {
        let mut acc = self.sup.zero();
        let mut pw = self.sup.one();
        for i in 0..self.sub.degree() as u32 {
            if (a.0 >> i) & 1 == 1 {
                acc = self.sup.add(&acc, &pw);
            }
            pw = self.sup.mul(&pw, &self.root);
        }
        acc
    }
}

/// The q^2 + q + 1 points of the projective plane over GF(q), one
/// representative per class: [1:y:z], [0:1:z], [0:0:1].
pub fn projective_points(f: &GaloisField) -> Vec<[GfElem; 3]> {
    let mut pts = Vec::with_capacity((f.order() * f.order() + f.order() + 1) as usize);
    let one = f.one();
    let zero = f.zero();
    for y in f.elements() {
        for z in f.elements() {
            pts.push([one, y, z]);
        }
    }
    for z in f.elements() {
        pts.push([zero, one, z]);
    }
    pts.push([zero, zero, one]);
    pts
}

fn eval_f2_poly(f: &GaloisField, poly: u32, x: &GfElem) -> GfElem {
    let mut acc = f.zero();
    for i in (0..32).rev() {
        if i < 31 {
            acc = f.mul(&acc, x);
        }
        if (poly >> i) & 1 == 1 {
            acc = f.add(&acc, &f.one());
        }
    }
    acc
}
