//! The abstract coefficient-field interface shared by every arithmetic
//! domain in this crate.
//!
//! Everything here lives in characteristic two: addition is its own
//! inverse, so `add` doubles as subtraction, and squaring is the
//! Frobenius endomorphism. Field objects are small context values
//! (a modulus, a base-field handle, a list of indeterminates) and
//! elements are plain data; all operations go through the field object,
//! in the style of `field.mul(&a, &b)`.

use std::fmt::Debug;

/// A field of characteristic two.
///
/// `sqrt` is partial: perfect fields (finite fields) return `Some` for
/// every element, while function fields return `Some` exactly on squares.
pub trait Field: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse. Panics on zero; use [`Field::try_inv`]
    /// when the input may be zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// The unique square root if `a` is a square, else `None`.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Equality of field elements. The default compares representations;
    /// fields with non-canonical representations must override.
    fn elem_eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn display(&self, a: &Self::Elem) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.elem_eq(a, &self.zero())
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.elem_eq(a, &self.one())
    }

    fn is_square(&self, a: &Self::Elem) -> bool {
        self.sqrt(a).is_some()
    }

    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.inv(a))
        }
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.square(&base);
            e >>= 1;
        }
        acc
    }

    /// Sum of a slice of elements.
    fn sum(&self, xs: &[Self::Elem]) -> Self::Elem {
        xs.iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// A field with finitely many elements, enumerable in a fixed order.
pub trait FiniteField: Field {
    fn order(&self) -> u64;

    /// The element with the given index, `0 <= i < order()`.
    /// Index 0 is zero and index 1 is one.
    fn from_index(&self, i: u64) -> Self::Elem;

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order()).map(|i| self.from_index(i)).collect()
    }
}
