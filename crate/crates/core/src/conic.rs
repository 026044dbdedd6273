//! Smooth plane conics in characteristic two: the smoothness criterion
//! through the strange point, rational point search over each supported
//! field, the purely inseparable point construction, and the explicit
//! 2x2 symmetric determinantal representation.
//!
//! A conic a X^2 + b Y^2 + c Z^2 + d XY + e YZ + f XZ has all three
//! partials vanishing at the single point [e : f : d] (the strange
//! point); it is smooth exactly when that point is off the curve, which
//! evaluates to a e^2 + b f^2 + c d^2 + d e f != 0.

use crate::field::{Field, FiniteField};
use crate::form::{LinearForm, LinearPencil, Mono, TernaryForm};
use crate::funcfield::{Completion, LaurentSeries, LocalError, Place, RatFunc, RatFuncField};
use crate::gf::{projective_points, GaloisField, GfElem};
use crate::mat::Mat;
use crate::poly::Poly;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConicError {
    #[error("all six coefficients are zero")]
    AllZero,
    #[error("operation requires a smooth conic")]
    Singular,
    #[error("inseparable point construction requires d != 0 and a != 0")]
    NotArranged,
    #[error("the given point does not lie on the conic")]
    PointNotOnConic,
}

/// Coefficients (a, b, c, d, e, f) of
/// a X^2 + b Y^2 + c Z^2 + d XY + e YZ + f XZ.
#[derive(Clone, Debug)]
pub struct Conic<K: Field> {
    pub a: K::Elem,
    pub b: K::Elem,
    pub c: K::Elem,
    pub d: K::Elem,
    pub e: K::Elem,
    pub f: K::Elem,
}

impl<K: Field> Conic<K> {
    pub fn new(a: K::Elem, b: K::Elem, c: K::Elem, d: K::Elem, e: K::Elem, f: K::Elem) -> Self {
        Conic { a, b, c, d, e, f }
    }

    pub fn from_form(form: &TernaryForm<K>, k: &K) -> Option<Self> {
        if form.is_zero() || !form.is_homogeneous() || form.degree() != 2 {
            return None;
        }
        Some(Conic {
            a: form.coeff(&Mono::new(2, 0, 0), k),
            b: form.coeff(&Mono::new(0, 2, 0), k),
            c: form.coeff(&Mono::new(0, 0, 2), k),
            d: form.coeff(&Mono::new(1, 1, 0), k),
            e: form.coeff(&Mono::new(0, 1, 1), k),
            f: form.coeff(&Mono::new(1, 0, 1), k),
        })
    }

    pub fn to_form(&self, k: &K) -> TernaryForm<K> {
        TernaryForm::from_terms(
            [
                (Mono::new(2, 0, 0), self.a.clone()),
                (Mono::new(0, 2, 0), self.b.clone()),
                (Mono::new(0, 0, 2), self.c.clone()),
                (Mono::new(1, 1, 0), self.d.clone()),
                (Mono::new(0, 1, 1), self.e.clone()),
                (Mono::new(1, 0, 1), self.f.clone()),
            ],
            k,
        )
    }

    pub fn coeffs(&self) -> [K::Elem; 6] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
        ]
    }

    fn is_all_zero(&self, k: &K) -> bool {
        self.coeffs().iter().all(|c| k.is_zero(c))
    }

    /// The common zero of all three partials.
    pub fn strange_point(&self) -> [K::Elem; 3] {
        [self.e.clone(), self.f.clone(), self.d.clone()]
    }

    /// a e^2 + b f^2 + c d^2 + d e f: the curve evaluated at the strange
    /// point. Nonzero exactly when the conic is smooth.
    pub fn smoothness_value(&self, k: &K) -> K::Elem {
        let mut acc = k.mul(&self.a, &k.square(&self.e));
        acc = k.add(&acc, &k.mul(&self.b, &k.square(&self.f)));
        acc = k.add(&acc, &k.mul(&self.c, &k.square(&self.d)));
        acc = k.add(&acc, &k.mul(&self.d, &k.mul(&self.e, &self.f)));
        acc
    }

    pub fn is_smooth(&self, k: &K) -> Result<bool, ConicError> {
        if self.is_all_zero(k) {
            return Err(ConicError::AllZero);
        }
        Ok(!k.is_zero(&self.smoothness_value(k)))
    }

    pub fn eval(&self, p: &[K::Elem; 3], k: &K) -> K::Elem {
        self.to_form(k).eval(p, k)
    }

    pub fn substitute(&self, m: &Mat<K::Elem>, k: &K) -> Self {
        // F(v) = v^t Q v with Q upper triangular; F(Sv) = v^t (S^t Q S) v
        let q = Mat::from_rows(
            vec![
                vec![self.a.clone(), self.d.clone(), self.f.clone()],
                vec![k.zero(), self.b.clone(), self.e.clone()],
                vec![k.zero(), k.zero(), self.c.clone()],
            ],
            k,
        );
        let n = m.transpose().mul(&q, k).mul(m, k);
        Conic {
            a: n.at(0, 0).clone(),
            b: n.at(1, 1).clone(),
            c: n.at(2, 2).clone(),
            d: k.add(n.at(0, 1), n.at(1, 0)),
            e: k.add(n.at(1, 2), n.at(2, 1)),
            f: k.add(n.at(0, 2), n.at(2, 0)),
        }
    }
}

/// Result of the purely inseparable point construction: with coordinates
/// arranged so that d != 0 and a != 0, the value t = a^-1(b f^2 + c d^2 +
/// e f d) satisfies F(sqrt(t), f, d) = 0, so [sqrt(t) : f : d] is a point
/// over K(sqrt(t)). When t happens to be a square the point is rational.
#[derive(Clone, Debug)]
pub struct InseparableData<K: Field> {
    pub t: K::Elem,
    /// The point [sqrt(t) : f : d] when sqrt(t) exists in K.
    pub rational_point: Option<[K::Elem; 3]>,
}

impl<K: Field> Conic<K> {
    pub fn inseparable_data(&self, k: &K) -> Result<InseparableData<K>, ConicError> {
        if k.is_zero(&self.d) || k.is_zero(&self.a) {
            return Err(ConicError::NotArranged);
        }
        let mut t = k.mul(&self.b, &k.square(&self.f));
        t = k.add(&t, &k.mul(&self.c, &k.square(&self.d)));
        t = k.add(&t, &k.mul(&self.e, &k.mul(&self.f, &self.d)));
        t = k.mul(&t, &k.inv(&self.a));
        let rational_point = k.sqrt(&t).map(|root| [root, self.f.clone(), self.d.clone()]);
        if let Some(p) = &rational_point {
            debug_assert!(k.is_zero(&self.eval(p, k)));
        }
        Ok(InseparableData { t, rational_point })
    }
}

/// A 2x2 symmetric pencil with det(M) = lambda * F, together with the
/// coordinate change used to produce it.
#[derive(Clone, Debug)]
pub struct ConicSdr<K: Field> {
    pub pencil: LinearPencil<K>,
    pub lambda: K::Elem,
    pub transform: Mat<K::Elem>,
}

impl<K: Field> Conic<K> {
    /// Move the rational point P to [1:0:0] with tangent Z = 0 and read
    /// off the pencil rows (Z, bY), (bY, bfX + beY + bcZ), pulled back
    /// through the inverse change so that det(M) = lambda * F exactly.
    pub fn sdr(&self, point: &[K::Elem; 3], k: &K) -> Result<ConicSdr<K>, ConicError> {
        if !k.is_zero(&self.eval(point, k)) {
            return Err(ConicError::PointNotOnConic);
        }
        if !self.is_smooth(k)? {
            return Err(ConicError::Singular);
        }
        // invertible matrix with first column P
        let a1 = complete_basis(point, k);
        let moved = self.substitute(&a1, k);
        debug_assert!(k.is_zero(&moved.a));
        // tangent at [1:0:0] is d'Y + f'Z = 0; send it to Z = 0
        let b_mat = if k.is_zero(&moved.d) {
            Mat::identity(3, k)
        } else if k.is_zero(&moved.f) {
            Mat::from_rows(
                vec![
                    vec![k.one(), k.zero(), k.zero()],
                    vec![k.zero(), k.zero(), k.one()],
                    vec![k.zero(), k.one(), k.zero()],
                ],
                k,
            )
        } else {
            Mat::from_rows(
                vec![
                    vec![k.one(), k.zero(), k.zero()],
                    vec![k.zero(), moved.f.clone(), k.zero()],
                    vec![k.zero(), moved.d.clone(), k.one()],
                ],
                k,
            )
        };
        let norm = moved.substitute(&b_mat, k);
        assert!(k.is_zero(&norm.a) && k.is_zero(&norm.d), "normalization must reach a = d = 0");
        assert!(
            !k.is_zero(&norm.b) && !k.is_zero(&norm.f),
            "smoothness forces b != 0 and f != 0 after normalization"
        );
        let by = LinearForm::new(k.zero(), norm.b.clone(), k.zero());
        let m = LinearPencil::from_entries(
            2,
            vec![
                LinearForm::new(k.zero(), k.zero(), k.one()),
                by.clone(),
                by,
                LinearForm::new(
                    k.mul(&norm.b, &norm.f),
                    k.mul(&norm.b, &norm.e),
                    k.mul(&norm.b, &norm.c),
                ),
            ],
            k,
        );
        let u = a1.mul(&b_mat, k);
        let u_inv = u.inverse(k).expect("product of invertible changes");
        let pencil = m.substitute(&u_inv, k).expect("inverse is invertible");
        Ok(ConicSdr { pencil, lambda: norm.b, transform: u })
    }
}

/// Any invertible matrix whose first column is the given nonzero vector.
fn complete_basis<K: Field>(p: &[K::Elem; 3], k: &K) -> Mat<K::Elem> {
    let units: [[usize; 2]; 3] = [[1, 2], [0, 2], [0, 1]];
    let pivot = (0..3)
        .find(|&i| !k.is_zero(&p[i]))
        .expect("projective point has a nonzero coordinate");
    let [u, v] = units[pivot];
    let mut m = Mat::identity(3, k);
    for i in 0..3 {
        m.set(i, 0, p[i].clone());
        m.set(i, 1, if i == u { k.one() } else { k.zero() });
        m.set(i, 2, if i == v { k.one() } else { k.zero() });
    }
    debug_assert!(!k.is_zero(&m.det(k)));
    m
}

// ---------------------------------------------------------------------------
// Point search over the supported fields
// ---------------------------------------------------------------------------

/// Exhaustive scan of the projective plane; never fails on a smooth conic
/// over a finite field.
pub fn find_point_finite(conic: &Conic<GaloisField>, k: &GaloisField) -> Option<[GfElem; 3]> {
    projective_points(k).into_iter().find(|p| k.is_zero(&conic.eval(p, k)))
}

#[derive(Clone, Debug)]
pub enum PointSearch {
    Found([RatFunc; 3]),
    /// The bounded search is openly incomplete: this is "not found within
    /// budget", never "no point exists".
    NotFoundWithinBudget { budget: usize },
}

/// Bounded search over F_q(T): constant points first, then the
/// inseparable-point shortcut when t is a global square, then polynomial
/// coordinates of degree up to the budget.
pub fn find_point_ratfunc(
    conic: &Conic<RatFuncField>,
    k: &RatFuncField,
    budget: usize,
) -> PointSearch {
    for p in projective_points(k.base()) {
        let cand = [k.constant(p[0]), k.constant(p[1]), k.constant(p[2])];
        if k.is_zero(&conic.eval(&cand, k)) {
            return PointSearch::Found(cand);
        }
    }
    if let Some(found) = t_shortcut(conic, k) {
        return PointSearch::Found(found);
    }
    let q = k.base().order();
    for h in 0..=budget {
        let n = q.pow(h as u32 + 1);
        for xi in 0..n {
            let x = poly_from_index(xi, q, k.base());
            for yi in 0..n {
                let y = poly_from_index(yi, q, k.base());
                for zi in 0..n {
                    let z = poly_from_index(zi, q, k.base());
                    // stage by exact height; normalize the leading coord
                    let height = [&x, &y, &z]
                        .iter()
                        .filter(|p| !p.is_zero())
                        .map(|p| p.degree())
                        .max();
                    if height != Some(h) {
                        continue;
                    }
                    match [&x, &y, &z].into_iter().find(|p| !p.is_zero()) {
                        None => continue,
                        Some(p) if !p.is_monic() => continue,
                        _ => {}
                    }
                    let cand =
                        [k.from_poly(x.clone()), k.from_poly(y.clone()), k.from_poly(z.clone())];
                    if k.is_zero(&conic.eval(&cand, k)) {
                        return PointSearch::Found(cand);
                    }
                }
            }
        }
    }
    PointSearch::NotFoundWithinBudget { budget }
}

fn poly_from_index(mut idx: u64, q: u64, base: &GaloisField) -> Poly {
    let mut coeffs = Vec::new();
    while idx > 0 {
        coeffs.push(base.from_index(idx % q));
        idx /= q;
    }
    Poly::from_coeffs(coeffs)
}

fn t_shortcut(conic: &Conic<RatFuncField>, k: &RatFuncField) -> Option<[RatFunc; 3]> {
    for perm in permutation_matrices(k) {
        let moved = conic.substitute(&perm, k);
        if k.is_zero(&moved.d) {
            continue;
        }
        if k.is_zero(&moved.a) {
            // [1:0:0] already lies on the permuted conic
            let p = perm.apply(&[k.one(), k.zero(), k.zero()], k);
            return Some([p[0].clone(), p[1].clone(), p[2].clone()]);
        }
        let data = moved.inseparable_data(k).expect("arranged above");
        if let Some(pt) = data.rational_point {
            let p = perm.apply(&pt, k);
            let cand = [p[0].clone(), p[1].clone(), p[2].clone()];
            debug_assert!(k.is_zero(&conic.eval(&cand, k)));
            return Some(cand);
        }
    }
    None
}

fn permutation_matrices<K: Field>(k: &K) -> Vec<Mat<K::Elem>> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    perms
        .iter()
        .map(|perm| {
            let mut m = Mat::from_rows(
                vec![
                    vec![k.zero(), k.zero(), k.zero()],
                    vec![k.zero(), k.zero(), k.zero()],
                    vec![k.zero(), k.zero(), k.zero()],
                ],
                k,
            );
            for (i, &j) in perm.iter().enumerate() {
                m.set(i, j, k.one());
            }
            m
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Local points: reduction and Hensel lifting
// ---------------------------------------------------------------------------

/// Outcome of the local point search. Degenerate reduction chains are cut
/// off by a depth cap and reported as undecided rather than guessed.
#[derive(Clone, Debug)]
pub enum LocalPoint {
    Found { coords: [LaurentSeries; 3] },
    Undecided,
}

const LOCAL_DESCENT_CAP: usize = 8;

/// Search for a K_v-point: reduce at v, pick a smooth residue point,
/// Hensel-lift; when the reduction is degenerate, apply bounded
/// minimization moves (square-line substitutions and uniformizer
/// rescalings) before giving up.
pub fn find_point_local(
    conic: &Conic<RatFuncField>,
    k: &RatFuncField,
    place: &Place,
    precision: usize,
) -> Result<LocalPoint, LocalError> {
    let completion = Completion::new(*k, place.clone())?;
    let work = (precision + 8 + 4 * LOCAL_DESCENT_CAP) as i64;
    let coeffs6: Vec<LaurentSeries> = conic
        .coeffs()
        .iter()
        .map(|c| {
            if k.is_zero(c) {
                Ok(LaurentSeries::zero_to_precision(*completion.residue_field(), work))
            } else {
                completion.expand(c, work as usize)
            }
        })
        .collect::<Result<_, _>>()?;
    let coeffs: [LaurentSeries; 6] = coeffs6.try_into().expect("six coefficients");
    Ok(descend(&completion, coeffs, precision as i64, 0))
}

fn descend(
    completion: &Completion,
    coeffs: [LaurentSeries; 6],
    precision: i64,
    depth: usize,
) -> LocalPoint {
    let kv = *completion.residue_field();
    // normalize so the smallest coefficient valuation is zero
    let min_val = match coeffs.iter().filter_map(|c| c.valuation()).min() {
        Some(v) => v,
        None => return LocalPoint::Undecided, // precision exhausted
    };
    let coeffs: Vec<LaurentSeries> = coeffs.iter().map(|c| c.shift(-min_val)).collect();
    if coeffs.iter().any(|c| c.abs_precision() < precision) {
        return LocalPoint::Undecided;
    }
    let res: Vec<GfElem> = coeffs.iter().map(|c| c.coeff_at(0).unwrap_or(GfElem(0))).collect();
    let (rd, re, rf) = (res[3], res[4], res[5]);

    // smooth residue points lift directly
    for pt in projective_points(&kv) {
        if eval_conic_residue(&kv, &res, &pt).0 != 0 {
            continue;
        }
        // partials of the residue conic: (dY + fZ, dX + eZ, eY + fX)
        let partials = [
            kv.add(&kv.mul(&rd, &pt[1]), &kv.mul(&rf, &pt[2])),
            kv.add(&kv.mul(&rd, &pt[0]), &kv.mul(&re, &pt[2])),
            kv.add(&kv.mul(&re, &pt[1]), &kv.mul(&rf, &pt[0])),
        ];
        for (var, partial) in partials.iter().enumerate() {
            if partial.0 == 0 {
                continue;
            }
            if let Some(coords) = lift_at(completion, &coeffs, &pt, var, precision) {
                return LocalPoint::Found { coords };
            }
        }
    }

    if depth >= LOCAL_DESCENT_CAP {
        return LocalPoint::Undecided;
    }

    if rd.0 == 0 && re.0 == 0 && rf.0 == 0 {
        // residue form is the square of a line; straighten the line into
        // a coordinate and rescale that coordinate by pi
        let line = [
            kv.sqrt(&res[0]).expect("finite fields are perfect"),
            kv.sqrt(&res[1]).expect("finite fields are perfect"),
            kv.sqrt(&res[2]).expect("finite fields are perfect"),
        ];
        let pivot = (0..3).find(|&i| line[i].0 != 0).expect("residue form is nonzero");
        let s = square_line_change(&kv, &line, pivot);
        let moved = conic_substitute_series(&kv, &coeffs, &s);
        let rescaled = rescale_variable(&moved, pivot);
        return descend(completion, rescaled, precision, depth + 1);
    }

    // singular non-square reduction: move a residue point to [1:0:0] and
    // rescale X by pi
    let pt = projective_points(&kv)
        .into_iter()
        .find(|p| eval_conic_residue(&kv, &res, p).0 == 0);
    match pt {
        None => LocalPoint::Undecided,
        Some(p) => {
            let s = basis_with_first_column(&kv, &p);
            let moved = conic_substitute_series(&kv, &coeffs, &s);
            let rescaled = rescale_variable(&moved, 0);
            descend(completion, rescaled, precision, depth + 1)
        }
    }
}

fn eval_conic_residue(kv: &GaloisField, res: &[GfElem], p: &[GfElem; 3]) -> GfElem {
    let mut acc = kv.mul(&res[0], &kv.square(&p[0]));
    acc = kv.add(&acc, &kv.mul(&res[1], &kv.square(&p[1])));
    acc = kv.add(&acc, &kv.mul(&res[2], &kv.square(&p[2])));
    acc = kv.add(&acc, &kv.mul(&res[3], &kv.mul(&p[0], &p[1])));
    acc = kv.add(&acc, &kv.mul(&res[4], &kv.mul(&p[1], &p[2])));
    acc = kv.add(&acc, &kv.mul(&res[5], &kv.mul(&p[0], &p[2])));
    acc
}

/// Fix the two non-Newton coordinates at their residue values and lift
/// the remaining one.
fn lift_at(
    completion: &Completion,
    coeffs: &[LaurentSeries],
    pt: &[GfElem; 3],
    var: usize,
    precision: i64,
) -> Option<[LaurentSeries; 3]> {
    let kv = *completion.residue_field();
    let prec = coeffs.iter().map(|c| c.abs_precision()).min().unwrap_or(precision);
    let consts: Vec<LaurentSeries> =
        pt.iter().map(|c| LaurentSeries::constant(kv, *c, prec.max(1))).collect();
    let cross = |i: usize, j: usize| -> usize {
        match (i.min(j), i.max(j)) {
            (0, 1) => 3,
            (1, 2) => 4,
            (0, 2) => 5,
            _ => unreachable!(),
        }
    };
    let others: Vec<usize> = (0..3).filter(|&i| i != var).collect();
    let (u, v) = (others[0], others[1]);
    // the equation as a quadratic A w^2 + B w + C in the lifted variable
    let a_coef = coeffs[var].clone();
    let b_coef =
        coeffs[cross(var, u)].mul(&consts[u]).add(&coeffs[cross(var, v)].mul(&consts[v]));
    let mut c_coef = coeffs[u].mul(&consts[u]).mul(&consts[u]);
    c_coef = c_coef.add(&coeffs[v].mul(&consts[v]).mul(&consts[v]));
    c_coef = c_coef.add(&coeffs[cross(u, v)].mul(&consts[u]).mul(&consts[v]));
    let w = completion.hensel_lift(&[c_coef, b_coef, a_coef], pt[var], precision).ok()?;
    let mut out = vec![consts[0].clone(), consts[1].clone(), consts[2].clone()];
    out[var] = w;
    Some(out.try_into().expect("three coordinates"))
}

/// The change of variables that turns the double line (l(X,Y,Z))^2 into
/// (pivot variable)^2: solve the old pivot variable in terms of the new.
fn square_line_change(kv: &GaloisField, line: &[GfElem; 3], pivot: usize) -> Mat<GfElem> {
    let inv = kv.inv(&line[pivot]);
    let mut s = Mat::identity(3, kv);
    for j in 0..3 {
        if j == pivot {
            s.set(pivot, j, inv);
        } else {
            s.set(pivot, j, kv.mul(&inv, &line[j]));
        }
    }
    s
}

fn basis_with_first_column(kv: &GaloisField, p: &[GfElem; 3]) -> Mat<GfElem> {
    let units: [[usize; 2]; 3] = [[1, 2], [0, 2], [0, 1]];
    let pivot = (0..3).find(|&i| p[i].0 != 0).expect("nonzero point");
    let [u, v] = units[pivot];
    let mut m = Mat::identity(3, kv);
    for i in 0..3 {
        m.set(i, 0, p[i]);
        m.set(i, 1, if i == u { kv.one() } else { kv.zero() });
        m.set(i, 2, if i == v { kv.one() } else { kv.zero() });
    }
    m
}

/// Apply a constant (residue-field) change of variables to the six series
/// coefficients via the upper-triangular Gram trick.
fn conic_substitute_series(
    kv: &GaloisField,
    coeffs: &[LaurentSeries],
    s: &Mat<GfElem>,
) -> [LaurentSeries; 6] {
    let prec = coeffs.iter().map(|c| c.abs_precision()).min().unwrap();
    let zero = LaurentSeries::zero_to_precision(*kv, prec);
    let series_const = |c: &GfElem| LaurentSeries::constant(*kv, *c, prec.max(1));
    // Q = [[a, d, f], [0, b, e], [0, 0, c]] as series; N = S^t Q S
    let q = [
        [coeffs[0].clone(), coeffs[3].clone(), coeffs[5].clone()],
        [zero.clone(), coeffs[1].clone(), coeffs[4].clone()],
        [zero.clone(), zero.clone(), coeffs[2].clone()],
    ];
    let mut n: Vec<Vec<LaurentSeries>> = vec![vec![zero.clone(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = zero.clone();
            for p in 0..3 {
                for r in 0..3 {
                    if s.at(p, i).0 == 0 || s.at(r, j).0 == 0 {
                        continue;
                    }
                    let term =
                        q[p][r].mul(&series_const(s.at(p, i))).mul(&series_const(s.at(r, j)));
                    acc = acc.add(&term);
                }
            }
            n[i][j] = acc;
        }
    }
    [
        n[0][0].clone(),
        n[1][1].clone(),
        n[2][2].clone(),
        n[0][1].add(&n[1][0]),
        n[1][2].add(&n[2][1]),
        n[0][2].add(&n[2][0]),
    ]
}

/// Substitute var -> pi * var in the six coefficients.
fn rescale_variable(coeffs: &[LaurentSeries; 6], var: usize) -> [LaurentSeries; 6] {
    let mut out = coeffs.clone();
    let (sq, crosses): (usize, [usize; 2]) = match var {
        0 => (0, [3, 5]),
        1 => (1, [3, 4]),
        2 => (2, [4, 5]),
        _ => unreachable!(),
    };
    out[sq] = out[sq].shift(2);
    for c in crosses {
        out[c] = out[c].shift(1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symrat::{QuadExt, SymField};

    fn f2_conic(bits: [u32; 6]) -> (Conic<GaloisField>, GaloisField) {
        let k = GaloisField::f2();
        let [a, b, c, d, e, f] = bits;
        (Conic::new(k.elem(a), k.elem(b), k.elem(c), k.elem(d), k.elem(e), k.elem(f)), k)
    }

    #[test]
    fn smoothness_examples() {
        // X^2+Y^2+Z^2 is the double line (X+Y+Z)^2
        let (c, k) = f2_conic([1, 1, 1, 0, 0, 0]);
        assert_eq!(c.is_smooth(&k), Ok(false));
        // XZ + Y^2 is smooth with criterion value 1
        let (c, k) = f2_conic([0, 1, 0, 0, 0, 1]);
        assert_eq!(c.is_smooth(&k), Ok(true));
        assert!(k.is_one(&c.smoothness_value(&k)));
        // all-zero input is an error
        let (c, k) = f2_conic([0, 0, 0, 0, 0, 0]);
        assert_eq!(c.is_smooth(&k), Err(ConicError::AllZero));
    }

    #[test]
    fn smoothness_criterion_value_over_ratfunc() {
        // X^2 + XY + T Z^2: criterion value c d^2 = T
        let k = RatFuncField::over_f2();
        let conic =
            Conic::<RatFuncField>::new(k.one(), k.zero(), k.t(), k.one(), k.zero(), k.zero());
        assert!(k.elem_eq(&conic.smoothness_value(&k), &k.t()));
        assert_eq!(conic.is_smooth(&k), Ok(true));
    }

    #[test]
    fn smoothness_agrees_with_singular_point_scan() {
        // the strange point is rational and double lines contain rational
        // points, so scanning P^2(GF(q)) is a complete singularity oracle
        for k_deg in [1usize, 2] {
            let k = GaloisField::new(k_deg).unwrap();
            let q = k.order();
            let mut smooth_count = 0u32;
            for idx in 0..q.pow(6) {
                let mut rest = idx;
                let mut coeff = [GfElem(0); 6];
                for c in coeff.iter_mut() {
                    *c = k.from_index(rest % q);
                    rest /= q;
                }
                let conic = Conic::<GaloisField>::new(
                    coeff[0], coeff[1], coeff[2], coeff[3], coeff[4], coeff[5],
                );
                if conic.is_all_zero(&k) {
                    continue;
                }
                let smooth = conic.is_smooth(&k).unwrap();
                let singular_by_scan = projective_points(&k).into_iter().any(|p| {
                    let on = k.is_zero(&conic.eval(&p, &k));
                    let px = k.add(&k.mul(&conic.d, &p[1]), &k.mul(&conic.f, &p[2]));
                    let py = k.add(&k.mul(&conic.d, &p[0]), &k.mul(&conic.e, &p[2]));
                    let pz = k.add(&k.mul(&conic.e, &p[1]), &k.mul(&conic.f, &p[0]));
                    on && k.is_zero(&px) && k.is_zero(&py) && k.is_zero(&pz)
                });
                assert_eq!(smooth, !singular_by_scan);
                if smooth {
                    smooth_count += 1;
                    // every smooth conic over a finite field has a point
                    assert!(find_point_finite(&conic, &k).is_some());
                }
            }
            assert!(smooth_count > 0);
        }
    }

    #[test]
    fn strange_point_annihilates_partials_symbolically() {
        let s = SymField::new(&["a", "b", "c", "d", "e", "f"]);
        let conic =
            Conic::<SymField>::new(s.var(0), s.var(1), s.var(2), s.var(3), s.var(4), s.var(5));
        let form = conic.to_form(&s);
        let (px, py, pz) = form.partials();
        let sp = conic.strange_point();
        for p in [px, py, pz] {
            assert!(s.is_zero(&p.eval(&sp, &s)));
        }
    }

    #[test]
    fn inseparable_point_identity_symbolic() {
        // a * F(sqrt(t), f, d) = 0 identically in a..f
        let s = SymField::new(&["a", "b", "c", "d", "e", "f"]);
        let t = {
            let mut t = s.mul(&s.var(1), &s.square(&s.var(5)));
            t = s.add(&t, &s.mul(&s.var(2), &s.square(&s.var(3))));
            t = s.add(&t, &s.mul(&s.var(4), &s.mul(&s.var(5), &s.var(3))));
            s.mul(&t, &s.inv(&s.var(0)))
        };
        let ext = QuadExt::new(s.clone(), t, "s");
        let lift = |i: usize| ext.lift(s.var(i));
        let conic_ext = Conic::<QuadExt<SymField>>::new(
            lift(0), lift(1), lift(2), lift(3), lift(4), lift(5),
        );
        let point = [ext.root(), lift(5).clone(), lift(3).clone()];
        let value = ext.mul(&lift(0), &conic_ext.eval(&point, &ext));
        assert!(ext.is_zero(&value));
    }

    #[test]
    fn sdr_of_xz_plus_y2() {
        let (c, k) = f2_conic([0, 1, 0, 0, 0, 1]);
        let p = [k.one(), k.zero(), k.zero()];
        let sdr = c.sdr(&p, &k).unwrap();
        assert!(sdr.pencil.is_symmetric());
        assert!(k.is_one(&sdr.lambda));
        assert_eq!(sdr.pencil.det(&k).display_in(&k), "X*Z+Y^2");
    }

    #[test]
    fn generic_sdr_determinant_identity() {
        // with a = d = 0: det of rows (Z, bY), (bY, bfX+beY+bcZ) equals
        // b*(bY^2 + cZ^2 + eYZ + fXZ)
        let s = SymField::new(&["b", "c", "e", "f"]);
        let conic =
            Conic::<SymField>::new(s.zero(), s.var(0), s.var(1), s.zero(), s.var(2), s.var(3));
        let by = LinearForm::new(s.zero(), conic.b.clone(), s.zero());
        let m = LinearPencil::from_entries(
            2,
            vec![
                LinearForm::new(s.zero(), s.zero(), s.one()),
                by.clone(),
                by,
                LinearForm::new(
                    s.mul(&conic.b, &conic.f),
                    s.mul(&conic.b, &conic.e),
                    s.mul(&conic.b, &conic.c),
                ),
            ],
            &s,
        );
        let det = m.det(&s);
        let expected = conic.to_form(&s).scale(&conic.b, &s);
        assert!(det.eq_in(&expected, &s));
    }

    #[test]
    fn ratfunc_point_search_succeeds() {
        let k = RatFuncField::over_f2();
        let conic =
            Conic::<RatFuncField>::new(k.one(), k.zero(), k.t(), k.one(), k.zero(), k.zero());
        match find_point_ratfunc(&conic, &k, 3) {
            PointSearch::Found(p) => {
                assert!(k.is_zero(&conic.eval(&p, &k)));
                assert!(p.iter().any(|c| !k.is_zero(c)));
            }
            PointSearch::NotFoundWithinBudget { .. } => panic!("point exists"),
        }
    }

    #[test]
    fn t_shortcut_is_sufficient_only() {
        // for X^2 + XY + T Z^2 the shortcut value t = T is a non-square,
        // yet the conic has rational points: non-squareness of t
        // certifies nothing
        let k = RatFuncField::over_f2();
        let conic =
            Conic::<RatFuncField>::new(k.one(), k.zero(), k.t(), k.one(), k.zero(), k.zero());
        let data = conic.inseparable_data(&k).unwrap();
        assert!(k.elem_eq(&data.t, &k.t()));
        assert!(data.rational_point.is_none());
        assert!(matches!(find_point_ratfunc(&conic, &k, 3), PointSearch::Found(_)));
    }

    #[test]
    fn inseparable_point_becomes_rational_after_specialization() {
        // replacing T by T^2 makes t a square; the construction then
        // hands back a rational point directly
        let k = RatFuncField::over_f2();
        let t2 = k.mul(&k.t(), &k.t());
        let conic = Conic::<RatFuncField>::new(k.one(), k.zero(), t2, k.one(), k.zero(), k.zero());
        let data = conic.inseparable_data(&k).unwrap();
        let pt = data.rational_point.expect("T^2 is a square");
        assert!(k.is_zero(&conic.eval(&pt, &k)));
    }

    #[test]
    fn local_point_found_at_smooth_reduction() {
        let k = RatFuncField::over_f2();
        let conic =
            Conic::<RatFuncField>::new(k.one(), k.zero(), k.t(), k.one(), k.zero(), k.zero());
        let place = Place::Finite(Poly::t());
        match find_point_local(&conic, &k, &place, 12).unwrap() {
            LocalPoint::Found { coords } => {
                let completion = Completion::new(k, place).unwrap();
                let c6: Vec<LaurentSeries> = conic
                    .coeffs()
                    .iter()
                    .map(|c| {
                        if k.is_zero(c) {
                            LaurentSeries::zero_to_precision(*completion.residue_field(), 24)
                        } else {
                            completion.expand(c, 24).unwrap()
                        }
                    })
                    .collect();
                let value = eval_conic_series(&c6, &coords);
                assert!(
                    value.is_zero_to_precision() || value.valuation().unwrap() >= 10,
                    "residual {}",
                    value.display()
                );
            }
            LocalPoint::Undecided => panic!("smooth reduction must lift"),
        }
    }

    #[test]
    fn local_point_found_through_square_move() {
        // X^2 + Y^2 + T XY + T XZ reduces to (X+Y)^2 at (T); the descent
        // through the square line still finds a point
        let k = RatFuncField::over_f2();
        let conic = Conic::<RatFuncField>::new(k.one(), k.one(), k.zero(), k.t(), k.zero(), k.t());
        let place = Place::Finite(Poly::t());
        assert_eq!(conic.is_smooth(&k), Ok(true));
        assert!(matches!(
            find_point_local(&conic, &k, &place, 10).unwrap(),
            LocalPoint::Found { .. }
        ));
    }

    #[test]
    fn pointless_local_conic_reports_undecided() {
        // X^2 + XY + Y^2 + T Z^2: the quadratic X^2+XY+Y^2 is the norm
        // form of GF(4) and takes even valuations only, while T Z^2 is
        // odd: no point over the completion at (T). The bounded descent
        // reports undecided rather than deciding.
        let k = RatFuncField::over_f2();
        let conic =
            Conic::<RatFuncField>::new(k.one(), k.one(), k.t(), k.one(), k.zero(), k.zero());
        let place = Place::Finite(Poly::t());
        assert_eq!(conic.is_smooth(&k), Ok(true));
        assert!(matches!(find_point_local(&conic, &k, &place, 10).unwrap(), LocalPoint::Undecided));
    }

    fn eval_conic_series(c6: &[LaurentSeries], p: &[LaurentSeries; 3]) -> LaurentSeries {
        let mut acc = c6[0].mul(&p[0]).mul(&p[0]);
        acc = acc.add(&c6[1].mul(&p[1]).mul(&p[1]));
        acc = acc.add(&c6[2].mul(&p[2]).mul(&p[2]));
        acc = acc.add(&c6[3].mul(&p[0]).mul(&p[1]));
        acc = acc.add(&c6[4].mul(&p[1]).mul(&p[2]));
        acc = acc.add(&c6[5].mul(&p[0]).mul(&p[2]));
        acc
    }
}
