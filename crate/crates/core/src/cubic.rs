//! Plane cubics in characteristic two: long Weierstrass curves with the
//! chord-tangent group law, j-invariant and ordinariness, the 2-torsion
//! point and its rationality verdict, and the twisted Hesse family with
//! its Jacobian, existence criterion and explicit 3x3 pencil.
//!
//! The coefficient reductions are the standard ones with the integer
//! constants taken mod 2: b2 = a1^2, b4 = a1 a3, b6 = a3^2,
//! b8 = a1^2 a6 + a1 a3 a4 + a2 a3^2 + a4^2, and
//! disc = b2^2 b8 + b6^2 + b2 b4 b6.

use crate::field::Field;
use crate::form::{LinearForm, LinearPencil, Mono, TernaryForm};
use crate::funcfield::{places_up_to, Place, RatFunc, RatFuncField};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CubicError {
    #[error("the Weierstrass equation is singular")]
    Singular,
    #[error("operation requires an ordinary curve (a1 != 0)")]
    Supersingular,
    #[error("operation requires the normal form Y^2Z + XYZ = X^3 + a2 X^2 Z + a6 Z^3")]
    NotRemarkForm,
    #[error("point does not lie on the curve")]
    PointNotOnCurve,
    #[error("the Hesse coefficients violate abc(m^3 + abc) != 0")]
    SingularHesse,
}

/// Y^2 Z + a1 XYZ + a3 Y Z^2 = X^3 + a2 X^2 Z + a4 X Z^2 + a6 Z^3.
#[derive(Clone, Debug)]
pub struct WeierstrassCurve<K: Field> {
    pub a1: K::Elem,
    pub a2: K::Elem,
    pub a3: K::Elem,
    pub a4: K::Elem,
    pub a6: K::Elem,
}

impl<K: Field> WeierstrassCurve<K> {
    pub fn new(a1: K::Elem, a2: K::Elem, a3: K::Elem, a4: K::Elem, a6: K::Elem) -> Self {
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    /// The Remark-form curve Y^2Z + XYZ = X^3 + a2 X^2 Z + a6 Z^3.
    pub fn remark_form(a2: K::Elem, a6: K::Elem, k: &K) -> Self {
        WeierstrassCurve::new(k.one(), a2, k.zero(), k.zero(), a6)
    }

    pub fn discriminant(&self, k: &K) -> K::Elem {
        let b2 = k.square(&self.a1);
        let b4 = k.mul(&self.a1, &self.a3);
        let b6 = k.square(&self.a3);
        let mut b8 = k.mul(&b2, &self.a6);
        b8 = k.add(&b8, &k.mul(&b4, &self.a4));
        b8 = k.add(&b8, &k.mul(&self.a2, &b6));
        b8 = k.add(&b8, &k.square(&self.a4));
        let mut disc = k.mul(&k.square(&b2), &b8);
        disc = k.add(&disc, &k.square(&b6));
        disc = k.add(&disc, &k.mul(&b2, &k.mul(&b4, &b6)));
        disc
    }

    pub fn is_nonsingular(&self, k: &K) -> bool {
        !k.is_zero(&self.discriminant(k))
    }

    /// j = a1^12 / disc; zero exactly in the supersingular case.
    pub fn j_invariant(&self, k: &K) -> Result<K::Elem, CubicError> {
        let disc = self.discriminant(k);
        if k.is_zero(&disc) {
            return Err(CubicError::Singular);
        }
        let c4 = k.square(&k.square(&self.a1));
        let c4_cubed = k.mul(&k.square(&c4), &c4);
        Ok(k.mul(&c4_cubed, &k.inv(&disc)))
    }

    pub fn is_ordinary(&self, k: &K) -> Result<bool, CubicError> {
        Ok(!k.is_zero(&self.j_invariant(k)?))
    }

    /// The defining ternary form with O = [0:1:0].
    pub fn to_form(&self, k: &K) -> TernaryForm<K> {
        TernaryForm::from_terms(
            [
                (Mono::new(0, 2, 1), k.one()),
                (Mono::new(1, 1, 1), self.a1.clone()),
                (Mono::new(0, 1, 2), self.a3.clone()),
                (Mono::new(3, 0, 0), k.one()),
                (Mono::new(2, 0, 1), self.a2.clone()),
                (Mono::new(1, 0, 2), self.a4.clone()),
                (Mono::new(0, 0, 3), self.a6.clone()),
            ],
            k,
        )
    }

    /// Substitution x = u^2 x' + r, y = u^3 y' + u^2 s x' + t with the
    /// integer coefficients reduced mod 2; u must be invertible.
    pub fn change_of_variables(
        &self,
        u: &K::Elem,
        r: &K::Elem,
        s: &K::Elem,
        t: &K::Elem,
        k: &K,
    ) -> Self {
        let u_inv = k.inv(u);
        let u2 = k.square(&u_inv);
        let u3 = k.mul(&u2, &u_inv);
        let u4 = k.square(&u2);
        let u6 = k.square(&u3);
        let a1 = k.mul(&self.a1, &u_inv);
        let mut a2 = k.add(&self.a2, &k.mul(s, &self.a1));
        a2 = k.add(&a2, r);
        a2 = k.add(&a2, &k.square(s));
        let a2 = k.mul(&a2, &u2);
        let a3 = k.mul(&k.add(&self.a3, &k.mul(r, &self.a1)), &u3);
        let mut a4 = k.add(&self.a4, &k.mul(s, &self.a3));
        a4 = k.add(&a4, &k.mul(&k.add(t, &k.mul(r, s)), &self.a1));
        a4 = k.add(&a4, &k.square(r));
        let a4 = k.mul(&a4, &u4);
        let mut a6 = k.add(&self.a6, &k.mul(r, &self.a4));
        a6 = k.add(&a6, &k.mul(&k.square(r), &self.a2));
        a6 = k.add(&a6, &k.mul(&k.square(r), r));
        a6 = k.add(&a6, &k.mul(t, &self.a3));
        a6 = k.add(&a6, &k.square(t));
        a6 = k.add(&a6, &k.mul(r, &k.mul(t, &self.a1)));
        let a6 = k.mul(&a6, &u6);
        WeierstrassCurve { a1, a2, a3, a4, a6 }
    }

    /// Normalize an ordinary curve to Y^2Z + XYZ = X^3 + a2 X^2Z + a6 Z^3
    /// by scaling a1 to 1 and translating away a3 and a4.
    pub fn to_remark_form(&self, k: &K) -> Result<Self, CubicError> {
        if !self.is_nonsingular(k) {
            return Err(CubicError::Singular);
        }
        if k.is_zero(&self.a1) {
            return Err(CubicError::Supersingular);
        }
        let zero = k.zero();
        let scaled = self.change_of_variables(&self.a1, &zero, &zero, &zero, k);
        let r = scaled.a3.clone();
        let t = k.add(&scaled.a4, &k.square(&r));
        let out = scaled.change_of_variables(&k.one(), &r, &zero, &t, k);
        debug_assert!(k.is_one(&out.a1) && k.is_zero(&out.a3) && k.is_zero(&out.a4));
        Ok(out)
    }

    pub fn is_remark_form(&self, k: &K) -> bool {
        k.is_one(&self.a1) && k.is_zero(&self.a3) && k.is_zero(&self.a4)
    }
}

/// A point of the curve: the distinguished identity [0:1:0] or an affine
/// point [x:y:1].
#[derive(Clone, PartialEq, Debug)]
pub enum CurvePoint<K: Field> {
    Infinity,
    Affine { x: K::Elem, y: K::Elem },
}

impl<K: Field> CurvePoint<K> {
    pub fn affine(x: K::Elem, y: K::Elem) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn projective(&self, k: &K) -> [K::Elem; 3] {
        match self {
            CurvePoint::Infinity => [k.zero(), k.one(), k.zero()],
            CurvePoint::Affine { x, y } => [x.clone(), y.clone(), k.one()],
        }
    }

    pub fn eq_in(&self, other: &Self, k: &K) -> bool {
        match (self, other) {
            (CurvePoint::Infinity, CurvePoint::Infinity) => true,
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                k.elem_eq(x1, x2) && k.elem_eq(y1, y2)
            }
            _ => false,
        }
    }
}

impl<K: Field> WeierstrassCurve<K> {
    pub fn contains(&self, p: &CurvePoint<K>, k: &K) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                // y^2 + a1 xy + a3 y + x^3 + a2 x^2 + a4 x + a6 = 0
                let mut acc = k.square(y);
                acc = k.add(&acc, &k.mul(&self.a1, &k.mul(x, y)));
                acc = k.add(&acc, &k.mul(&self.a3, y));
                acc = k.add(&acc, &k.mul(&k.square(x), x));
                acc = k.add(&acc, &k.mul(&self.a2, &k.square(x)));
                acc = k.add(&acc, &k.mul(&self.a4, x));
                acc = k.add(&acc, &self.a6);
                k.is_zero(&acc)
            }
        }
    }

    /// Characteristic-two negation: (x, y) -> (x, y + a1 x + a3).
    pub fn neg_point(&self, p: &CurvePoint<K>, k: &K) -> CurvePoint<K> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                let ny = k.add(y, &k.add(&k.mul(&self.a1, x), &self.a3));
                CurvePoint::Affine { x: x.clone(), y: ny }
            }
        }
    }

    /// Chord-tangent addition (the standard group-law algorithm with the
    /// integer constants reduced mod 2).
    pub fn add_points(
        &self,
        p: &CurvePoint<K>,
        q: &CurvePoint<K>,
        k: &K,
    ) -> Result<CurvePoint<K>, CubicError> {
        if !self.contains(p, k) || !self.contains(q, k) {
            return Err(CubicError::PointNotOnCurve);
        }
        let (x1, y1) = match p {
            CurvePoint::Infinity => return Ok(q.clone()),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let (x2, y2) = match q {
            CurvePoint::Infinity => return Ok(p.clone()),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let (lambda, nu) = if !k.elem_eq(x1, x2) {
            let dx_inv = k.inv(&k.add(x1, x2));
            let lambda = k.mul(&k.add(y1, y2), &dx_inv);
            let nu = k.mul(&k.add(&k.mul(y1, x2), &k.mul(y2, x1)), &dx_inv);
            (lambda, nu)
        } else {
            // same x: either q = -p (vertical chord) or a tangent doubling
            let neg = self.neg_point(p, k);
            if neg.eq_in(q, k) {
                return Ok(CurvePoint::Infinity);
            }
            let den = k.add(&k.mul(&self.a1, x1), &self.a3);
            debug_assert!(!k.is_zero(&den), "2-torsion is exactly the vertical-tangent case");
            let den_inv = k.inv(&den);
            let mut num_l = k.square(x1);
            num_l = k.add(&num_l, &self.a4);
            num_l = k.add(&num_l, &k.mul(&self.a1, y1));
            let lambda = k.mul(&num_l, &den_inv);
            let mut num_n = k.mul(&k.square(x1), x1);
            num_n = k.add(&num_n, &k.mul(&self.a4, x1));
            num_n = k.add(&num_n, &k.mul(&self.a3, y1));
            let nu = k.mul(&num_n, &den_inv);
            (lambda, nu)
        };
        let mut x3 = k.square(&lambda);
        x3 = k.add(&x3, &k.mul(&self.a1, &lambda));
        x3 = k.add(&x3, &self.a2);
        x3 = k.add(&x3, x1);
        x3 = k.add(&x3, x2);
        let mut y3 = k.mul(&k.add(&lambda, &self.a1), &x3);
        y3 = k.add(&y3, &nu);
        y3 = k.add(&y3, &self.a3);
        let sum = CurvePoint::Affine { x: x3, y: y3 };
        debug_assert!(self.contains(&sum, k));
        Ok(sum)
    }

    pub fn double_point(&self, p: &CurvePoint<K>, k: &K) -> Result<CurvePoint<K>, CubicError> {
        self.add_points(p, p, k)
    }
}

/// Rationality verdict for the nontrivial 2-torsion point [0 : sqrt(a6) : 1]
/// of an ordinary curve in Remark form.
#[derive(Clone, Debug)]
pub enum TwoTorsion<K: Field> {
    Rational { point: CurvePoint<K> },
    /// sqrt(a6) generates a purely inseparable quadratic extension; the
    /// obstruction is a6 itself.
    InseparableOnly { obstruction: K::Elem },
}

impl<K: Field> WeierstrassCurve<K> {
    /// The nontrivial 2-torsion point of an ordinary curve in Remark form
    /// (a1 = 1, a3 = a4 = 0, a6 != 0) is [0 : sqrt(a6) : 1]: rational over
    /// K exactly when a6 is a square; otherwise only over K(sqrt(a6)).
    pub fn two_torsion(&self, k: &K) -> Result<TwoTorsion<K>, CubicError> {
        if k.is_zero(&self.a1) {
            return Err(CubicError::Supersingular);
        }
        if !self.is_remark_form(k) {
            return Err(CubicError::NotRemarkForm);
        }
        if k.is_zero(&self.a6) {
            return Err(CubicError::Singular);
        }
        match k.sqrt(&self.a6) {
            Some(root) => {
                let point = CurvePoint::Affine { x: k.zero(), y: root };
                debug_assert!(self.contains(&point, k));
                Ok(TwoTorsion::Rational { point })
            }
            None => Ok(TwoTorsion::InseparableOnly { obstruction: self.a6.clone() }),
        }
    }
}

// ---------------------------------------------------------------------------
// The twisted Hesse family
// ---------------------------------------------------------------------------

/// a X^3 + b Y^3 + c Z^3 + m XYZ, smooth exactly when abc(m^3 + abc) != 0.
#[derive(Clone, Debug)]
pub struct HesseCubic<K: Field> {
    pub a: K::Elem,
    pub b: K::Elem,
    pub c: K::Elem,
    pub m: K::Elem,
}

impl<K: Field> HesseCubic<K> {
    pub fn new(a: K::Elem, b: K::Elem, c: K::Elem, m: K::Elem) -> Self {
        HesseCubic { a, b, c, m }
    }

    pub fn abc(&self, k: &K) -> K::Elem {
        k.mul(&self.a, &k.mul(&self.b, &self.c))
    }

    pub fn is_smooth(&self, k: &K) -> bool {
        let abc = self.abc(k);
        let m3 = k.mul(&k.square(&self.m), &self.m);
        !k.is_zero(&k.mul(&abc, &k.add(&m3, &abc)))
    }

    pub fn to_form(&self, k: &K) -> TernaryForm<K> {
        TernaryForm::from_terms(
            [
                (Mono::new(3, 0, 0), self.a.clone()),
                (Mono::new(0, 3, 0), self.b.clone()),
                (Mono::new(0, 0, 3), self.c.clone()),
                (Mono::new(1, 1, 1), self.m.clone()),
            ],
            k,
        )
    }

    /// The Jacobian elliptic curve: the classical coefficients reduce mod
    /// 2 to Y^2Z + mXYZ + abc YZ^2 = X^3 + (a^2b^2c^2 + m^3 abc) Z^3.
    pub fn jacobian(&self, k: &K) -> Result<WeierstrassCurve<K>, CubicError> {
        if !self.is_smooth(k) {
            return Err(CubicError::SingularHesse);
        }
        let abc = self.abc(k);
        let m3 = k.mul(&k.square(&self.m), &self.m);
        let a6 = k.add(&k.square(&abc), &k.mul(&m3, &abc));
        Ok(WeierstrassCurve::new(self.m.clone(), k.zero(), abc, k.zero(), a6))
    }
}

/// Existence verdict for the symmetric determinantal representation of a
/// smooth Hesse cubic.
#[derive(Clone, Debug)]
pub enum HesseSdr<K: Field> {
    /// m = 0: the Jacobian is supersingular and no pencil exists over any
    /// extension of the base field.
    NotOrdinary,
    /// sqrt(m^-1 abc) is not in K: no pencil over K, nor over the
    /// separable closure; one exists over the purely inseparable
    /// quadratic extension K(sqrt(m^-1 abc)).
    NoRationalSdr { obstruction: K::Elem },
    /// det(pencil) = lambda * (aX^3 + bY^3 + cZ^3 + mXYZ) exactly, with
    /// lambda = m^-1 abc.
    Sdr { pencil: LinearPencil<K>, lambda: K::Elem },
}

impl<K: Field> HesseCubic<K> {
    pub fn sdr(&self, k: &K) -> Result<HesseSdr<K>, CubicError> {
        if !self.is_smooth(k) {
            return Err(CubicError::SingularHesse);
        }
        if k.is_zero(&self.m) {
            return Ok(HesseSdr::NotOrdinary);
        }
        let r = k.mul(&k.inv(&self.m), &self.abc(k));
        let s = match k.sqrt(&r) {
            None => return Ok(HesseSdr::NoRationalSdr { obstruction: r }),
            Some(s) => s,
        };
        let pencil = hesse_pencil(&self.a, &self.b, &self.c, &s, k);
        let det = pencil.det(k);
        let expected = self.to_form(k).scale(&r, k);
        assert!(det.eq_in(&expected, k), "pencil determinant identity must hold exactly");
        Ok(HesseSdr::Sdr { pencil, lambda: r })
    }
}

/// Rows (aX, sZ, sY), (sZ, bY, sX), (sY, sX, cZ).
pub fn hesse_pencil<K: Field>(
    a: &K::Elem,
    b: &K::Elem,
    c: &K::Elem,
    s: &K::Elem,
    k: &K,
) -> LinearPencil<K> {
    let zero = || k.zero();
    let entries = vec![
        LinearForm::new(a.clone(), zero(), zero()),
        LinearForm::new(zero(), zero(), s.clone()),
        LinearForm::new(zero(), s.clone(), zero()),
        LinearForm::new(zero(), zero(), s.clone()),
        LinearForm::new(zero(), b.clone(), zero()),
        LinearForm::new(s.clone(), zero(), zero()),
        LinearForm::new(zero(), s.clone(), zero()),
        LinearForm::new(s.clone(), zero(), zero()),
        LinearForm::new(zero(), zero(), c.clone()),
    ];
    LinearPencil::from_entries(3, entries, k)
}

/// Local-global consistency data for the Hesse SDR criterion over F_q(T):
/// the criterion value m^-1 abc tested for squareness globally and at
/// every place of degree <= bound plus infinity (by the expansion scan).
#[derive(Clone, Debug)]
pub struct LocalGlobalReport {
    pub criterion: RatFunc,
    pub global: bool,
    pub places: Vec<(Place, bool)>,
    pub everywhere_local_eq_global: bool,
    pub any_single_place_eq_global: bool,
}

pub fn hesse_local_global_report(
    hesse: &HesseCubic<RatFuncField>,
    k: &RatFuncField,
    max_place_degree: usize,
    scan_precision: usize,
) -> Result<LocalGlobalReport, CubicError> {
    if !hesse.is_smooth(k) {
        return Err(CubicError::SingularHesse);
    }
    if k.is_zero(&hesse.m) {
        return Err(CubicError::Supersingular);
    }
    let criterion = k.mul(&k.inv(&hesse.m), &hesse.abc(k));
    let global = k.is_square(&criterion);
    let places: Vec<(Place, bool)> = places_up_to(k, max_place_degree)
        .into_iter()
        .map(|v| {
            let local = k
                .local_square_scan(&criterion, &v, scan_precision)
                .expect("scan precision suffices at desk scale");
            (v, local)
        })
        .collect();
    let everywhere = places.iter().all(|(_, ok)| *ok);
    let any_matches = places.iter().all(|(_, ok)| *ok == global);
    Ok(LocalGlobalReport {
        criterion,
        global,
        places,
        everywhere_local_eq_global: everywhere == global,
        any_single_place_eq_global: any_matches,
    })
}
