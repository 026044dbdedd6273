//! Univariate polynomials in T over a binary field GF(2^k).
//!
//! Coefficients are stored little-endian with no trailing zeros, so the
//! representation is canonical and derived equality is exact equality.
//! Every operation takes the coefficient field explicitly.

use crate::field::{Field, FiniteField};
use crate::gf::{GaloisField, GfElem};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<GfElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![GfElem(1)] }
    }

    /// The polynomial T.
    pub fn t() -> Self {
        Poly { coeffs: vec![GfElem(0), GfElem(1)] }
    }

    pub fn constant(c: GfElem) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn from_coeffs(coeffs: Vec<GfElem>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.0 == 0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial answers 0 and must be special-cased
    /// by callers that care.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> GfElem {
        self.coeffs.get(i).copied().unwrap_or(GfElem(0))
    }

    pub fn coeffs(&self) -> &[GfElem] {
        &self.coeffs
    }

    pub fn leading(&self) -> GfElem {
        self.coeffs.last().copied().unwrap_or(GfElem(0))
    }

    pub fn is_monic(&self) -> bool {
        self.leading().0 == 1
    }

    pub fn add(&self, other: &Poly, f: &GaloisField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Poly, f: &GaloisField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![GfElem(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.0 == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &GfElem, f: &GaloisField) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn divrem(&self, divisor: &Poly, f: &GaloisField) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.degree() < divisor.degree() || self.is_zero() {
            return (Poly::zero(), self.clone());
        }
        let lead_inv = f.inv(&divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GfElem(0); self.degree() - divisor.degree() + 1];
        for i in (divisor.degree()..rem.len()).rev() {
            if rem[i].0 == 0 {
                continue;
            }
            let q = f.mul(&rem[i], &lead_inv);
            quot[i - divisor.degree()] = q;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let idx = i - divisor.degree() + j;
                rem[idx] = f.add(&rem[idx], &f.mul(&q, d));
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Poly, f: &GaloisField) -> Poly {
        self.divrem(divisor, f).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly, f: &GaloisField) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.make_monic(f)
    }

    pub fn make_monic(&self, f: &GaloisField) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(&f.inv(&self.leading()), f)
    }

    pub fn eval(&self, x: &GfElem, f: &GaloisField) -> GfElem {
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// Formal derivative; even-exponent terms vanish in characteristic two.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = (1..self.coeffs.len())
            .map(|i| if i % 2 == 1 { self.coeffs[i] } else { GfElem(0) })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Multiplicity of `p` as a factor; 0 when `p` does not divide.
    pub fn ord_at(&self, p: &Poly, f: &GaloisField) -> usize {
        assert!(!self.is_zero(), "valuation of the zero polynomial");
        let mut cur = self.clone();
        let mut ord = 0;
        loop {
            let (q, r) = cur.divrem(p, f);
            if !r.is_zero() {
                return ord;
            }
            ord += 1;
            cur = q;
        }
    }

    /// Reversal: T^deg * self(1/T), trailing zeros stripped.
    pub fn reversed(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        let leading_zeros = coeffs.iter().take_while(|c| c.0 == 0).count();
        Poly::from_coeffs(coeffs[leading_zeros..].to_vec())
    }

    /// Irreducibility over GF(2^k) by trial division against all monic
    /// polynomials of degree at most deg/2.
    pub fn is_irreducible(&self, f: &GaloisField) -> bool {
        let d = self.degree();
        if self.is_zero() || d == 0 {
            return false;
        }
        for e in 1..=(d / 2) {
            let mut divisors = monic_polys_of_degree(e, f);
            if divisors.any(|divisor| self.rem(&divisor, f).is_zero()) {
                return false;
            }
        }
        true
    }

    pub fn display(&self, f: &GaloisField) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.0 == 0 {
                continue;
            }
            let coeff = f.display(c);
            let var = match i {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{}", i),
            };
            let needs_parens = coeff.contains('+');
            let part = match (i, coeff.as_str()) {
                (0, _) => coeff.clone(),
                (_, "1") => var,
                _ if needs_parens => format!("({})*{}", coeff, var),
                _ => format!("{}*{}", coeff, var),
            };
            parts.push(part);
        }
        parts.join("+")
    }
}

/// All monic polynomials of exactly the given degree, in the order induced
/// by the element enumeration of the coefficient field (low coefficients
/// vary fastest).
pub fn monic_polys_of_degree(d: usize, f: &GaloisField) -> impl Iterator<Item = Poly> + '_ {
    let q = f.order();
    let count = q.pow(d as u32);
    (0..count).map(move |idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        let mut rest = idx;
        for _ in 0..d {
            coeffs.push(f.from_index(rest % q));
            rest /= q;
        }
        coeffs.push(f.one());
        Poly::from_coeffs(coeffs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> GaloisField {
        GaloisField::f2()
    }

    fn p(bits: &[u32]) -> Poly {
        Poly::from_coeffs(bits.iter().map(|&b| GfElem(b)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let f = f2();
        let a = p(&[1, 0, 1, 1, 0, 1]);
        let b = p(&[1, 1, 1]);
        let (q, r) = a.divrem(&b, &f);
        assert_eq!(q.mul(&b, &f).add(&r, &f), a);
        assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn gcd_of_square() {
        let f = f2();
        let t1 = p(&[1, 1]); // T+1
        let sq = t1.mul(&t1, &f);
        assert_eq!(sq.gcd(&t1, &f), t1);
        // (T+1)^2 = T^2+1 in characteristic two
        assert_eq!(sq, p(&[1, 0, 1]));
    }

    #[test]
    fn irreducibles_of_low_degree() {
        let f = f2();
        assert!(Poly::t().is_irreducible(&f));
        assert!(p(&[1, 1]).is_irreducible(&f));
        assert!(p(&[1, 1, 1]).is_irreducible(&f));
        assert!(!p(&[1, 0, 1]).is_irreducible(&f));
        assert!(p(&[1, 1, 0, 1]).is_irreducible(&f)); // T^3+T+1
        assert!(p(&[1, 0, 1, 1]).is_irreducible(&f)); // T^3+T^2+1
        assert!(!p(&[1, 1, 1, 1]).is_irreducible(&f)); // (T+1)(T^2+T+1)... T^3+T^2+T+1
    }

    #[test]
    fn ord_at_counts_multiplicity() {
        let f = f2();
        let t = Poly::t();
        let t1 = p(&[1, 1]);
        let prod = t.mul(&t, &f).mul(&t1, &f);
        assert_eq!(prod.ord_at(&t, &f), 2);
        assert_eq!(prod.ord_at(&t1, &f), 1);
        assert_eq!(prod.ord_at(&p(&[1, 1, 1]), &f), 0);
    }

    #[test]
    fn display_reads_naturally() {
        let f = f2();
        assert_eq!(p(&[1, 1, 0, 1]).display(&f), "T^3+T+1");
        assert_eq!(Poly::zero().display(&f), "0");
        let f4 = GaloisField::new(2).unwrap();
        let q = Poly::from_coeffs(vec![GfElem(0b10), GfElem(0b11)]);
        assert_eq!(q.display(&f4), "(g+1)*T+g");
    }

    #[test]
    fn derivative_kills_even_exponents() {
        // d/dT (T^4 + T^3 + T^2 + T + 1) = T^2 + 1
        let a = p(&[1, 1, 1, 1, 1]);
        assert_eq!(a.derivative(), p(&[1, 0, 1]));
    }

    #[test]
    fn monic_enumeration_counts() {
        let f = f2();
        assert_eq!(monic_polys_of_degree(3, &f).count(), 8);
        let f4 = GaloisField::new(2).unwrap();
        assert_eq!(monic_polys_of_degree(2, &f4).count(), 16);
    }
}
