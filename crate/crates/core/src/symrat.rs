//! Symbolic coefficients: the rational function field F_2(a, b, c, ...)
//! in finitely many named indeterminates, and quadratic extensions
//! obtained by adjoining a formal square root.
//!
//! Multivariate polynomials over F_2 are sets of exponent vectors, which
//! is a canonical representation. Fractions are *not* reduced (there is
//! no multivariate gcd here); equality is decided by cross-multiplication,
//! so all comparisons must go through `Field::eq`. The identity checks
//! these fields serve involve a handful of small determinants, which keeps
//! the unreduced representations tiny.

use crate::field::Field;
use std::collections::BTreeSet;
use std::sync::Arc;

type Exps = Vec<u16>;

/// Polynomial over F_2: the set of monomials with coefficient 1.
pub type MPoly = BTreeSet<Exps>;

fn mp_zero() -> MPoly {
    BTreeSet::new()
}

fn mp_one(nvars: usize) -> MPoly {
    let mut s = BTreeSet::new();
    s.insert(vec![0; nvars]);
    s
}

fn mp_add(a: &MPoly, b: &MPoly) -> MPoly {
    // coefficients live in F_2: addition is symmetric difference
    a.symmetric_difference(b).cloned().collect()
}

fn mp_mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for ea in a {
        for eb in b {
            let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if !out.remove(&e) {
                out.insert(e);
            }
        }
    }
    out
}

fn mp_sqrt(a: &MPoly) -> Option<MPoly> {
    // squaring is the Frobenius: squares are exactly the all-even-exponent
    // polynomials
    let mut out = MPoly::new();
    for e in a {
        if e.iter().any(|x| x % 2 != 0) {
            return None;
        }
        out.insert(e.iter().map(|x| x / 2).collect());
    }
    Some(out)
}

/// F_2(x_1, ..., x_n) for a fixed list of indeterminate names.
#[derive(Clone, Debug)]
pub struct SymField {
    vars: Arc<Vec<String>>,
}

/// An unreduced fraction of multivariate polynomials over F_2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymRat {
    pub num: MPoly,
    pub den: MPoly,
}

impl SymField {
    pub fn new(names: &[&str]) -> Self {
        SymField { vars: Arc::new(names.iter().map(|s| s.to_string()).collect()) }
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// The i-th indeterminate as a field element.
    pub fn var(&self, i: usize) -> SymRat {
        let mut e = vec![0u16; self.vars.len()];
        e[i] = 1;
        let mut num = MPoly::new();
        num.insert(e);
        SymRat { num, den: mp_one(self.vars.len()) }
    }

    pub fn var_named(&self, name: &str) -> Option<SymRat> {
        self.vars.iter().position(|v| v == name).map(|i| self.var(i))
    }

    fn poly_display(&self, p: &MPoly) -> String {
        if p.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for e in p.iter().rev() {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            parts.push(if factors.is_empty() { "1".to_string() } else { factors.join("*") });
        }
        parts.join("+")
    }
}

impl Field for SymField {
    type Elem = SymRat;

    fn zero(&self) -> SymRat {
        SymRat { num: mp_zero(), den: mp_one(self.vars.len()) }
    }

    fn one(&self) -> SymRat {
        SymRat { num: mp_one(self.vars.len()), den: mp_one(self.vars.len()) }
    }

    fn add(&self, a: &SymRat, b: &SymRat) -> SymRat {
        SymRat {
            num: mp_add(&mp_mul(&a.num, &b.den), &mp_mul(&b.num, &a.den)),
            den: mp_mul(&a.den, &b.den),
        }
    }

    fn mul(&self, a: &SymRat, b: &SymRat) -> SymRat {
        SymRat { num: mp_mul(&a.num, &b.num), den: mp_mul(&a.den, &b.den) }
    }

    fn inv(&self, a: &SymRat) -> SymRat {
        assert!(!a.num.is_empty(), "inversion of zero in {:?}", self.vars);
        SymRat { num: a.den.clone(), den: a.num.clone() }
    }

    fn sqrt(&self, a: &SymRat) -> Option<SymRat> {
        if a.num.is_empty() {
            return Some(self.zero());
        }
        // a = num/den = num*den / den^2, so a is a square iff num*den is
        let nd = mp_mul(&a.num, &a.den);
        let root = mp_sqrt(&nd)?;
        Some(SymRat { num: root, den: a.den.clone() })
    }

    fn elem_eq(&self, a: &SymRat, b: &SymRat) -> bool {
        mp_mul(&a.num, &b.den) == mp_mul(&b.num, &a.den)
    }

    fn is_zero(&self, a: &SymRat) -> bool {
        a.num.is_empty()
    }

    fn display(&self, a: &SymRat) -> String {
        let num = self.poly_display(&a.num);
        if a.den == mp_one(self.vars.len()) {
            num
        } else {
            let den = self.poly_display(&a.den);
            let num = if num.contains('+') { format!("({})", num) } else { num };
            let den = if den.contains('+') { format!("({})", den) } else { den };
            format!("{}/{}", num, den)
        }
    }
}

/// K(s) with s^2 = r, for a fixed non-square r of the base field K.
/// Elements are u + v*s. In characteristic two (u + v*s)^2 = u^2 + v^2*r
/// lands back in K, which gives inversion without any norm machinery.
#[derive(Clone, Debug)]
pub struct QuadExt<K: Field> {
    base: K,
    r: K::Elem,
    sym: String,
}

#[derive(Clone, PartialEq, Debug)]
pub struct QuadElem<E> {
    pub u: E,
    pub v: E,
}

impl<K: Field> QuadExt<K> {
    /// Adjoin a square root of `r`. `r` must not be a square in the base
    /// field, otherwise the construction has zero divisors.
    pub fn new(base: K, r: K::Elem, sym: &str) -> Self {
        assert!(!base.is_square(&r), "adjoined element must not be a square");
        QuadExt { base, r, sym: sym.to_string() }
    }

    pub fn base(&self) -> &K {
        &self.base
    }

    pub fn lift(&self, u: K::Elem) -> QuadElem<K::Elem> {
        QuadElem { u, v: self.base.zero() }
    }

    /// The adjoined square root s.
    pub fn root(&self) -> QuadElem<K::Elem> {
        QuadElem { u: self.base.zero(), v: self.base.one() }
    }
}

impl<K: Field> Field for QuadExt<K> {
    type Elem = QuadElem<K::Elem>;

    fn zero(&self) -> Self::Elem {
        QuadElem { u: self.base.zero(), v: self.base.zero() }
    }

    fn one(&self) -> Self::Elem {
        QuadElem { u: self.base.one(), v: self.base.zero() }
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        QuadElem { u: self.base.add(&a.u, &b.u), v: self.base.add(&a.v, &b.v) }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let uu = self.base.mul(&a.u, &b.u);
        let vv = self.base.mul(&a.v, &b.v);
        let cross = self.base.add(&self.base.mul(&a.u, &b.v), &self.base.mul(&a.v, &b.u));
        QuadElem { u: self.base.add(&uu, &self.base.mul(&vv, &self.r)), v: cross }
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        // a^2 = u^2 + v^2 r lies in the base field and is nonzero since
        // r is not a square, so 1/a = a / a^2.
        let sq = self.base.add(
            &self.base.square(&a.u),
            &self.base.mul(&self.base.square(&a.v), &self.r),
        );
        let sq_inv = self.base.inv(&sq);
        QuadElem { u: self.base.mul(&a.u, &sq_inv), v: self.base.mul(&a.v, &sq_inv) }
    }

    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem> {
        // only base-field squares are recognized; enough for this crate
        if !self.base.is_zero(&a.v) {
            return None;
        }
        self.base.sqrt(&a.u).map(|r| self.lift(r))
    }

    fn elem_eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.base.elem_eq(&a.u, &b.u) && self.base.elem_eq(&a.v, &b.v)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.u) && self.base.is_zero(&a.v)
    }

    fn display(&self, a: &Self::Elem) -> String {
        let us = self.base.display(&a.u);
        if self.base.is_zero(&a.v) {
            return us;
        }
        let vs = self.base.display(&a.v);
        let vterm = if vs == "1" {
            self.sym.clone()
        } else if vs.contains('+') || vs.contains('/') {
            format!("({})*{}", vs, self.sym)
        } else {
            format!("{}*{}", vs, self.sym)
        };
        if self.base.is_zero(&a.u) {
            vterm
        } else {
            format!("{}+{}", us, vterm)
        }
    }
}
