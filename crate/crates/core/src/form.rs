//! Homogeneous ternary forms, matrices of linear forms and their exact
//! symbolic determinants, over any coefficient field.
//!
//! Monomials are kept in a sorted map under graded-lexicographic order
//! with X > Y > Z, so printing is canonical. Zero coefficients are never
//! stored. All coefficient arithmetic goes through the field object;
//! fields with non-canonical element representations are compared with
//! [`TernaryForm::eq_in`], never with `==`.

use crate::field::Field;
use crate::mat::Mat;
use std::collections::BTreeMap;
use thiserror::Error;

/// Exponent triple (X^x * Y^y * Z^z).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    pub x: u16,
    pub y: u16,
    pub z: u16,
}

impl Mono {
    pub fn new(x: u16, y: u16, z: u16) -> Self {
        Mono { x, y, z }
    }

    pub fn deg(&self) -> u16 {
        self.x + self.y + self.z
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.deg(), self.x, self.y).cmp(&(other.deg(), other.x, other.y))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Error)]
pub enum FormError {
    #[error("matrix of a coordinate change is singular")]
    SingularSubstitution,
    #[error("equivalence scalar must be nonzero")]
    ZeroScalar,
}

/// Polynomial in X, Y, Z. All public constructors and operations preserve
/// homogeneity; `is_homogeneous` is available as a sanity check.
#[derive(Clone, Debug)]
pub struct TernaryForm<K: Field> {
    terms: BTreeMap<Mono, K::Elem>,
}

impl<K: Field> TernaryForm<K> {
    pub fn zero() -> Self {
        TernaryForm { terms: BTreeMap::new() }
    }

    pub fn monomial(m: Mono, c: K::Elem, f: &K) -> Self {
        let mut terms = BTreeMap::new();
        if !f.is_zero(&c) {
            terms.insert(m, c);
        }
        TernaryForm { terms }
    }

    pub fn from_terms<I>(iter: I, f: &K) -> Self
    where
        I: IntoIterator<Item = (Mono, K::Elem)>,
    {
        let mut form = Self::zero();
        for (m, c) in iter {
            form.add_term(m, c, f);
        }
        form
    }

    fn add_term(&mut self, m: Mono, c: K::Elem, f: &K) {
        if f.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = f.add(&old, &c);
                if !f.is_zero(&s) {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of the highest term; 0 for the zero form.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.deg() as usize).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.deg());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &K::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Mono, f: &K) -> K::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| f.zero())
    }

    pub fn add(&self, other: &Self, f: &K) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone(), f);
        }
        out
    }

    pub fn mul(&self, other: &Self, f: &K) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = Mono::new(m1.x + m2.x, m1.y + m2.y, m1.z + m2.z);
                out.add_term(m, f.mul(c1, c2), f);
            }
        }
        out
    }

    pub fn scale(&self, c: &K::Elem, f: &K) -> Self {
        if f.is_zero(c) {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, v)| (*m, f.mul(v, c))), f)
    }

    pub fn pow(&self, e: usize, f: &K) -> Self {
        let mut acc = Self::monomial(Mono::new(0, 0, 0), f.one(), f);
        for _ in 0..e {
            acc = acc.mul(self, f);
        }
        acc
    }

    pub fn eq_in(&self, other: &Self, f: &K) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms
            .iter()
            .zip(other.terms.iter())
            .all(|((m1, c1), (m2, c2))| m1 == m2 && f.elem_eq(c1, c2))
    }

    /// Formal partials; exponent multipliers are reduced mod 2, so
    /// even-exponent occurrences vanish.
    pub fn partials(&self) -> (Self, Self, Self) {
        let mut dx = Self::zero();
        let mut dy = Self::zero();
        let mut dz = Self::zero();
        for (m, c) in &self.terms {
            if m.x % 2 == 1 {
                dx.terms.insert(Mono::new(m.x - 1, m.y, m.z), c.clone());
            }
            if m.y % 2 == 1 {
                dy.terms.insert(Mono::new(m.x, m.y - 1, m.z), c.clone());
            }
            if m.z % 2 == 1 {
                dz.terms.insert(Mono::new(m.x, m.y, m.z - 1), c.clone());
            }
        }
        (dx, dy, dz)
    }

    pub fn eval(&self, p: &[K::Elem; 3], f: &K) -> K::Elem {
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            t = f.mul(&t, &f.pow(&p[0], m.x as u64));
            t = f.mul(&t, &f.pow(&p[1], m.y as u64));
            t = f.mul(&t, &f.pow(&p[2], m.z as u64));
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Compose with the linear change of variables (X,Y,Z) -> A*(X,Y,Z).
    pub fn substitute(&self, a: &Mat<K::Elem>, f: &K) -> Result<Self, FormError> {
        if f.is_zero(&a.det(f)) {
            return Err(FormError::SingularSubstitution);
        }
        Ok(self.substitute_unchecked(a, f))
    }

    pub(crate) fn substitute_unchecked(&self, a: &Mat<K::Elem>, f: &K) -> Self {
        let rows: Vec<Self> = (0..3)
            .map(|i| {
                Self::from_terms(
                    [
                        (Mono::new(1, 0, 0), a.at(i, 0).clone()),
                        (Mono::new(0, 1, 0), a.at(i, 1).clone()),
                        (Mono::new(0, 0, 1), a.at(i, 2).clone()),
                    ],
                    f,
                )
            })
            .collect();
        let d = self.degree();
        // cache powers of the three images up to the form's degree
        let pows: Vec<Vec<Self>> = rows
            .iter()
            .map(|r| {
                let mut v = vec![Self::monomial(Mono::new(0, 0, 0), f.one(), f)];
                for e in 1..=d {
                    let next = v[e - 1].mul(r, f);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let t = pows[0][m.x as usize]
                .mul(&pows[1][m.y as usize], f)
                .mul(&pows[2][m.z as usize], f)
                .scale(c, f);
            out = out.add(&t, f);
        }
        out
    }

    /// Transport the form along a coefficient map into another field.
    pub fn map_coeffs<K2, F>(&self, k2: &K2, mut g: F) -> TernaryForm<K2>
    where
        K2: Field,
        F: FnMut(&K::Elem) -> K2::Elem,
    {
        TernaryForm::from_terms(self.terms.iter().map(|(m, c)| (*m, g(c))), k2)
    }

    pub fn display_in(&self, f: &K) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut vars = Vec::new();
            for (sym, e) in [("X", m.x), ("Y", m.y), ("Z", m.z)] {
                match e {
                    0 => {}
                    1 => vars.push(sym.to_string()),
                    _ => vars.push(format!("{}^{}", sym, e)),
                }
            }
            let coeff = f.display(c);
            let part = if vars.is_empty() {
                coeff
            } else if coeff == "1" {
                vars.join("*")
            } else if coeff.contains('+') || coeff.contains('/') {
                format!("({})*{}", coeff, vars.join("*"))
            } else {
                format!("{}*{}", coeff, vars.join("*"))
            };
            parts.push(part);
        }
        parts.join("+")
    }
}

/// Exponent triples of total degree d, in the monomial order.
pub fn monomials_of_degree(d: u16) -> Vec<Mono> {
    let mut out = Vec::new();
    for x in 0..=d {
        for y in 0..=(d - x) {
            out.push(Mono::new(x, y, d - x - y));
        }
    }
    out.sort();
    out
}

/// pX + qY + rZ.
#[derive(Clone, Debug)]
pub struct LinearForm<E> {
    pub x: E,
    pub y: E,
    pub z: E,
}

impl<E: Clone + PartialEq + std::fmt::Debug> LinearForm<E> {
    pub fn new(x: E, y: E, z: E) -> Self {
        LinearForm { x, y, z }
    }

    pub fn zero<K: Field<Elem = E>>(f: &K) -> Self {
        LinearForm { x: f.zero(), y: f.zero(), z: f.zero() }
    }

    pub fn add<K: Field<Elem = E>>(&self, other: &Self, f: &K) -> Self {
        LinearForm {
            x: f.add(&self.x, &other.x),
            y: f.add(&self.y, &other.y),
            z: f.add(&self.z, &other.z),
        }
    }

    pub fn scale<K: Field<Elem = E>>(&self, c: &E, f: &K) -> Self {
        LinearForm { x: f.mul(&self.x, c), y: f.mul(&self.y, c), z: f.mul(&self.z, c) }
    }

    pub fn eq_in<K: Field<Elem = E>>(&self, other: &Self, f: &K) -> bool {
        f.elem_eq(&self.x, &other.x) && f.elem_eq(&self.y, &other.y) && f.elem_eq(&self.z, &other.z)
    }

    pub fn to_form<K: Field<Elem = E>>(&self, f: &K) -> TernaryForm<K> {
        TernaryForm::from_terms(
            [
                (Mono::new(1, 0, 0), self.x.clone()),
                (Mono::new(0, 1, 0), self.y.clone()),
                (Mono::new(0, 0, 1), self.z.clone()),
            ],
            f,
        )
    }

    /// Compose with the change of variables (X,Y,Z) -> A*(X,Y,Z):
    /// the coefficient vector becomes A^t * (p,q,r).
    pub fn substitute<K: Field<Elem = E>>(&self, a: &Mat<E>, f: &K) -> Self {
        let v = a.transpose().apply(&[self.x.clone(), self.y.clone(), self.z.clone()], f);
        LinearForm { x: v[0].clone(), y: v[1].clone(), z: v[2].clone() }
    }

    pub fn display_in<K: Field<Elem = E>>(&self, f: &K) -> String {
        self.to_form(f).display_in(f)
    }
}

/// A d x d matrix of linear forms.
#[derive(Clone, Debug)]
pub struct LinearPencil<K: Field> {
    n: usize,
    entries: Vec<LinearForm<K::Elem>>,
    symmetric: bool,
}

impl<K: Field> LinearPencil<K> {
    pub fn from_entries(n: usize, entries: Vec<LinearForm<K::Elem>>, f: &K) -> Self {
        assert_eq!(entries.len(), n * n);
        let mut p = LinearPencil { n, entries, symmetric: false };
        p.symmetric = p.check_symmetric(f);
        p
    }

    fn check_symmetric(&self, f: &K) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if !self.at(i, j).eq_in(self.at(j, i), f) {
                    return false;
                }
            }
        }
        true
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn at(&self, i: usize, j: usize) -> &LinearForm<K::Elem> {
        &self.entries[i * self.n + j]
    }

    /// Exact symbolic determinant by cofactor expansion; the working
    /// range is d <= 4, where this is both simple and fast.
    pub fn det(&self, f: &K) -> TernaryForm<K> {
        let forms: Vec<TernaryForm<K>> = self.entries.iter().map(|e| e.to_form(f)).collect();
        det_rec(&forms, self.n, &(0..self.n).collect::<Vec<_>>(), 0, f)
    }

    /// lambda * S^t * M * S, rejecting singular S.
    pub fn apply_equivalence(&self, e: &Equivalence<K>, f: &K) -> Result<Self, FormError> {
        if f.is_zero(&e.s.det(f)) {
            return Err(FormError::SingularSubstitution);
        }
        if f.is_zero(&e.lambda) {
            return Err(FormError::ZeroScalar);
        }
        let n = self.n;
        assert_eq!(e.s.size(), n, "equivalence size mismatch");
        // N = M * S
        let mut ns: Vec<LinearForm<K::Elem>> = Vec::with_capacity(n * n);
        for p in 0..n {
            for j in 0..n {
                let mut acc = LinearForm::zero(f);
                for q in 0..n {
                    acc = acc.add(&self.at(p, q).scale(e.s.at(q, j), f), f);
                }
                ns.push(acc);
            }
        }
        // M' = lambda * S^t * N
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LinearForm::zero(f);
                for p in 0..n {
                    acc = acc.add(&ns[p * n + j].scale(e.s.at(p, i), f), f);
                }
                entries.push(acc.scale(&e.lambda, f));
            }
        }
        Ok(LinearPencil { n, entries, symmetric: self.symmetric })
    }

    /// Compose every entry with the change of variables
    /// (X,Y,Z) -> A*(X,Y,Z), so det transforms the same way as a form.
    pub fn substitute(&self, a: &Mat<K::Elem>, f: &K) -> Result<Self, FormError> {
        if f.is_zero(&a.det(f)) {
            return Err(FormError::SingularSubstitution);
        }
        let entries = self.entries.iter().map(|e| e.substitute(a, f)).collect();
        Ok(LinearPencil { n: self.n, entries, symmetric: self.symmetric })
    }

    pub fn entry_strings(&self, f: &K) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).display_in(f)).collect())
            .collect()
    }
}

fn det_rec<K: Field>(
    forms: &[TernaryForm<K>],
    n: usize,
    cols: &[usize],
    row: usize,
    f: &K,
) -> TernaryForm<K> {
    if cols.len() == 1 {
        return forms[row * n + cols[0]].clone();
    }
    let mut acc = TernaryForm::zero();
    for (idx, &c) in cols.iter().enumerate() {
        let entry = &forms[row * n + c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().enumerate().filter(|&(i, _)| i != idx).map(|(_, &c)| c).collect();
        let minor = det_rec(forms, n, &rest, row + 1, f);
        // cofactor signs all collapse to + in characteristic two
        acc = acc.add(&entry.mul(&minor, f), f);
    }
    acc
}

/// An equivalence of pencils: M -> lambda * S^t * M * S.
#[derive(Clone, Debug)]
pub struct Equivalence<K: Field> {
    pub lambda: K::Elem,
    pub s: Mat<K::Elem>,
}

impl<K: Field> Equivalence<K> {
    pub fn new(lambda: K::Elem, s: Mat<K::Elem>, f: &K) -> Result<Self, FormError> {
        if f.is_zero(&lambda) {
            return Err(FormError::ZeroScalar);
        }
        if f.is_zero(&s.det(f)) {
            return Err(FormError::SingularSubstitution);
        }
        Ok(Equivalence { lambda, s })
    }

    /// The inverse equivalence: applying both in sequence is the identity.
    pub fn inverse(&self, f: &K) -> Self {
        Equivalence {
            lambda: f.inv(&self.lambda),
            s: self.s.inverse(f).expect("equivalence matrices are invertible"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::gf::{GaloisField, GfElem};

    fn f2() -> GaloisField {
        GaloisField::f2()
    }

    fn lf(f: &GaloisField, x: u32, y: u32, z: u32) -> LinearForm<GfElem> {
        LinearForm::new(f.elem(x), f.elem(y), f.elem(z))
    }

    #[test]
    fn diagonal_determinant() {
        let f = f2();
        for d in 1..=4 {
            let mut entries = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    entries.push(if i == j { lf(&f, 1, 0, 0) } else { lf(&f, 0, 0, 0) });
                }
            }
            let m = LinearPencil::<GaloisField>::from_entries(d, entries, &f);
            let det = m.det(&f);
            let expected =
                TernaryForm::monomial(Mono::new(d as u16, 0, 0), f.one(), &f);
            assert!(det.eq_in(&expected, &f));
        }
    }

    #[test]
    fn zero_row_gives_zero_det() {
        let f = f2();
        let entries = vec![
            lf(&f, 0, 0, 0),
            lf(&f, 0, 0, 0),
            lf(&f, 0, 1, 0),
            lf(&f, 1, 1, 1),
        ];
        let m = LinearPencil::<GaloisField>::from_entries(2, entries, &f);
        assert!(m.det(&f).is_zero());
    }

    #[test]
    fn fixture_cubic_determinant() {
        // rows (Y,0,X), (0,Z,Y), (X,Y,X+Y+Z): det must come out as
        // X^2 Z + XYZ + Y^3 + Y^2 Z + Y Z^2.
        let f = f2();
        let entries = vec![
            lf(&f, 0, 1, 0), lf(&f, 0, 0, 0), lf(&f, 1, 0, 0),
            lf(&f, 0, 0, 0), lf(&f, 0, 0, 1), lf(&f, 0, 1, 0),
            lf(&f, 1, 0, 0), lf(&f, 0, 1, 0), lf(&f, 1, 1, 1),
        ];
        let m = LinearPencil::<GaloisField>::from_entries(3, entries, &f);
        assert!(m.is_symmetric());
        let det = m.det(&f);
        assert_eq!(det.display_in(&f), "X^2*Z+X*Y*Z+Y^3+Y^2*Z+Y*Z^2");
    }

    #[test]
    fn identity_equivalence_is_identity() {
        let f = f2();
        let entries = vec![lf(&f, 0, 0, 1), lf(&f, 0, 1, 0), lf(&f, 0, 1, 0), lf(&f, 1, 0, 0)];
        let m = LinearPencil::<GaloisField>::from_entries(2, entries.clone(), &f);
        let e = Equivalence::new(f.one(), Mat::identity(2, &f), &f).unwrap();
        let m2 = m.apply_equivalence(&e, &f).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(m2.at(i, j).eq_in(m.at(i, j), &f));
            }
        }
    }

    #[test]
    fn equivalence_roundtrip_and_det_identity() {
        let f = GaloisField::new(2).unwrap();
        let g = f.generator().unwrap();
        let entries = vec![
            LinearForm::new(f.zero(), g, f.one()),
            LinearForm::new(f.one(), f.zero(), g),
            LinearForm::new(f.one(), f.zero(), g),
            LinearForm::new(g, f.one(), f.zero()),
        ];
        let m = LinearPencil::<GaloisField>::from_entries(2, entries, &f);
        let s = Mat::from_rows(vec![vec![f.one(), g], vec![f.zero(), f.one()]], &f);
        let e = Equivalence::new(g, s, &f).unwrap();
        let m2 = m.apply_equivalence(&e, &f).unwrap();
        // det(M') = lambda^d * det(S)^2 * det(M)
        let ds = e.s.det(&f);
        let scalar = f.mul(&f.pow(&e.lambda, 2), &f.mul(&ds, &ds));
        assert!(m2.det(&f).eq_in(&m.det(&f).scale(&scalar, &f), &f));
        // applying the inverse equivalence returns M
        let back = m2.apply_equivalence(&e.inverse(&f), &f).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(back.at(i, j).eq_in(m.at(i, j), &f));
            }
        }
    }

    #[test]
    fn singular_equivalence_rejected() {
        let f = f2();
        let s = Mat::from_rows(vec![vec![f.one(), f.one()], vec![f.one(), f.one()]], &f);
        assert!(Equivalence::<GaloisField>::new(f.one(), s, &f).is_err());
    }

    #[test]
    fn partials_mod_two() {
        let f = f2();
        // d/dX of X^2 = 0, d/dX of XY = Y
        let x2 = TernaryForm::<GaloisField>::monomial(Mono::new(2, 0, 0), f.one(), &f);
        assert!(x2.partials().0.is_zero());
        let xy = TernaryForm::<GaloisField>::monomial(Mono::new(1, 1, 0), f.one(), &f);
        let (dx, dy, dz) = xy.partials();
        assert_eq!(dx.display_in(&f), "Y");
        assert_eq!(dy.display_in(&f), "X");
        assert!(dz.is_zero());
    }

    #[test]
    fn substitution_swap_and_action() {
        let f = f2();
        let x2z = TernaryForm::<GaloisField>::monomial(Mono::new(2, 0, 1), f.one(), &f);
        let swap_xz = Mat::from_rows(
            vec![
                vec![f.zero(), f.zero(), f.one()],
                vec![f.zero(), f.one(), f.zero()],
                vec![f.one(), f.zero(), f.zero()],
            ],
            &f,
        );
        let out = x2z.substitute(&swap_xz, &f).unwrap();
        assert_eq!(out.display_in(&f), "X*Z^2");
    }

    #[test]
    fn substitution_is_right_action() {
        let f = GaloisField::new(2).unwrap();
        let form = TernaryForm::<GaloisField>::from_terms(
            [
                (Mono::new(2, 1, 0), f.one()),
                (Mono::new(0, 2, 1), f.generator().unwrap()),
                (Mono::new(1, 1, 1), f.one()),
            ],
            &f,
        );
        let a = Mat::from_rows(
            vec![
                vec![f.one(), f.generator().unwrap(), f.zero()],
                vec![f.zero(), f.one(), f.one()],
                vec![f.one(), f.zero(), f.one()],
            ],
            &f,
        );
        let b = Mat::from_rows(
            vec![
                vec![f.one(), f.zero(), f.one()],
                vec![f.generator().unwrap(), f.one(), f.zero()],
                vec![f.zero(), f.zero(), f.one()],
            ],
            &f,
        );
        let lhs = form.substitute(&a, &f).unwrap().substitute(&b, &f).unwrap();
        let rhs = form.substitute(&a.mul(&b, &f), &f).unwrap();
        assert!(lhs.eq_in(&rhs, &f));
    }

    #[test]
    fn block_diagonal_multiplicativity() {
        let f = f2();
        // diag(block A, block B): det = det(A)*det(B) with A,B 1x1 and 2x2
        let a = lf(&f, 1, 1, 0);
        let entries = vec![
            a.clone(), lf(&f, 0, 0, 0), lf(&f, 0, 0, 0),
            lf(&f, 0, 0, 0), lf(&f, 0, 0, 1), lf(&f, 0, 1, 0),
            lf(&f, 0, 0, 0), lf(&f, 0, 1, 0), lf(&f, 1, 0, 0),
        ];
        let m = LinearPencil::<GaloisField>::from_entries(3, entries, &f);
        let block = LinearPencil::<GaloisField>::from_entries(
            2,
            vec![lf(&f, 0, 0, 1), lf(&f, 0, 1, 0), lf(&f, 0, 1, 0), lf(&f, 1, 0, 0)],
            &f,
        );
        let expected = a.to_form(&f).mul(&block.det(&f), &f);
        assert!(m.det(&f).eq_in(&expected, &f));
    }

    #[test]
    fn pencil_substitution_commutes_with_det() {
        let f = GaloisField::new(3).unwrap();
        let e = |i: u64| f.from_index(i);
        let entries = vec![
            LinearForm::new(e(1), e(2), e(3)),
            LinearForm::new(e(4), e(5), e(6)),
            LinearForm::new(e(4), e(5), e(6)),
            LinearForm::new(e(7), e(1), e(2)),
        ];
        let m = LinearPencil::<GaloisField>::from_entries(2, entries, &f);
        let a = Mat::from_rows(
            vec![
                vec![e(1), e(2), e(0)],
                vec![e(0), e(1), e(3)],
                vec![e(5), e(0), e(1)],
            ],
            &f,
        );
        let lhs = m.substitute(&a, &f).unwrap().det(&f);
        let rhs = m.det(&f).substitute(&a, &f).unwrap();
        assert!(lhs.eq_in(&rhs, &f));
    }
}
