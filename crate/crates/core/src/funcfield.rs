//! The rational function field K = F_q(T) in characteristic two: its
//! places, completions modelled as truncated Laurent series, Hensel
//! lifting, and exact squareness tests, both global and local.
//!
//! A finite place is a monic irreducible p(T); its completion is
//! k_v((pi)) with pi = p(T) and k_v = GF(q^deg p). The residue field is
//! embedded as the coefficient field by Hensel-lifting a root of p, so
//! series coefficients multiply as genuine field elements. The infinite
//! place has uniformizer 1/T.

use crate::field::{Field, FiniteField};
use crate::gf::{Embedding, GaloisField, GfElem};
use crate::poly::{monic_polys_of_degree, Poly};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LocalError {
    #[error("precision cap {0} exceeded before the leading term appeared")]
    PrecisionExceeded(usize),
    #[error("formal derivative is not a unit at the approximate root")]
    DerivativeNotUnit,
    #[error("the given residue value is not an approximate root")]
    NotARoot,
    #[error("residue field GF(2^{0}) out of the supported range")]
    ResidueFieldTooLarge(usize),
}

/// Default number of stored series terms; the doubling cap mirrors it.
pub const DEFAULT_PRECISION: usize = 32;
pub const PRECISION_CAP: usize = 256;

// ---------------------------------------------------------------------------
// The global field F_q(T)
// ---------------------------------------------------------------------------

/// F_q(T) over a binary base field GF(2^k), default k = 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RatFuncField {
    base: GaloisField,
}

/// A reduced fraction: coprime numerator and denominator, monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    pub num: Poly,
    pub den: Poly,
}

impl RatFuncField {
    pub fn new(base: GaloisField) -> Self {
        RatFuncField { base }
    }

    pub fn over_f2() -> Self {
        RatFuncField { base: GaloisField::f2() }
    }

    pub fn base(&self) -> &GaloisField {
        &self.base
    }

    /// Build a reduced fraction; the denominator must be nonzero.
    pub fn make(&self, num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "denominator is zero");
        if num.is_zero() {
            return RatFunc { num: Poly::zero(), den: Poly::one() };
        }
        let g = num.gcd(&den, &self.base);
        let (num, _) = num.divrem(&g, &self.base);
        let (den, _) = den.divrem(&g, &self.base);
        let lead_inv = self.base.inv(&den.leading());
        RatFunc { num: num.scale(&lead_inv, &self.base), den: den.scale(&lead_inv, &self.base) }
    }

    pub fn from_poly(&self, p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn t(&self) -> RatFunc {
        self.from_poly(Poly::t())
    }

    pub fn constant(&self, c: GfElem) -> RatFunc {
        self.from_poly(Poly::constant(c))
    }

    /// The valuation of a nonzero f at a place.
    pub fn valuation(&self, f: &RatFunc, v: &Place) -> i64 {
        assert!(!f.num.is_zero(), "valuation of zero");
        match v {
            Place::Finite(p) => {
                f.num.ord_at(p, &self.base) as i64 - f.den.ord_at(p, &self.base) as i64
            }
            Place::Infinite => f.den.degree() as i64 - f.num.degree() as i64,
        }
    }
}

impl Field for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    fn one(&self) -> RatFunc {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let num = a
            .num
            .mul(&b.den, &self.base)
            .add(&b.num.mul(&a.den, &self.base), &self.base);
        self.make(num, a.den.mul(&b.den, &self.base))
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.make(a.num.mul(&b.num, &self.base), a.den.mul(&b.den, &self.base))
    }

    fn inv(&self, a: &RatFunc) -> RatFunc {
        assert!(!a.num.is_zero(), "inversion of zero in F_q(T)");
        self.make(a.den.clone(), a.num.clone())
    }

    fn sqrt(&self, a: &RatFunc) -> Option<RatFunc> {
        match self.square_decomposition(a) {
            SquareVerdict::Square { root } => Some(root),
            SquareVerdict::NotSquare { .. } => None,
        }
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_zero()
    }

    fn display(&self, a: &RatFunc) -> String {
        let num = a.num.display(&self.base);
        if a.den == Poly::one() {
            num
        } else {
            let num = if num.contains('+') { format!("({})", num) } else { num };
            let den = a.den.display(&self.base);
            let den = if den.contains('+') || den.contains('*') {
                format!("({})", den)
            } else {
                den
            };
            format!("{}/{}", num, den)
        }
    }
}

/// Outcome of the exact global squareness test.
#[derive(Clone, Debug)]
pub enum SquareVerdict {
    Square { root: RatFunc },
    /// f = (A/den)^2 + T*(B/den)^2 with B nonzero: B witnesses the failure.
    NotSquare { obstruction: Poly },
}

impl SquareVerdict {
    pub fn is_square(&self) -> bool {
        matches!(self, SquareVerdict::Square { .. })
    }
}

impl RatFuncField {
    /// Decompose num*den = A^2 + T*B^2 by the even/odd coefficient split;
    /// f is a square exactly when B = 0, and then sqrt(f) = A/den.
    /// Zero counts as a square with root zero.
    pub fn square_decomposition(&self, f: &RatFunc) -> SquareVerdict {
        if f.num.is_zero() {
            return SquareVerdict::Square { root: self.zero() };
        }
        let g = f.num.mul(&f.den, &self.base);
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, c) in g.coeffs().iter().enumerate() {
            let root = self.base.sqrt(c).expect("finite fields are perfect");
            if i % 2 == 0 {
                even.push(root);
            } else {
                odd.push(root);
            }
        }
        let b = Poly::from_coeffs(odd);
        if b.is_zero() {
            let a = Poly::from_coeffs(even);
            SquareVerdict::Square { root: self.make(a, f.den.clone()) }
        } else {
            SquareVerdict::NotSquare { obstruction: b }
        }
    }

    /// Exact local squareness. In characteristic two squaring is purely
    /// inseparable, so f is a square in K_v exactly when it is one in K;
    /// the expansion-based scan below is the independent cross-check.
    pub fn is_square_local(&self, f: &RatFunc, _v: &Place) -> bool {
        self.square_decomposition(f).is_square()
    }

    /// Expansion-based local squareness scan: expand f at v and look for a
    /// nonzero coefficient at an odd exponent (squares in k((pi)) with k
    /// perfect are exactly the even-support series). The answer is
    /// verified-to-precision; `is_square_local` is the exact verdict.
    pub fn local_square_scan(
        &self,
        f: &RatFunc,
        v: &Place,
        n_terms: usize,
    ) -> Result<bool, LocalError> {
        let completion = Completion::new(*self, v.clone())?;
        let series = completion.expand(f, n_terms)?;
        Ok(!series.has_odd_support())
    }
}

// ---------------------------------------------------------------------------
// Places
// ---------------------------------------------------------------------------

/// A place of F_q(T): a monic irreducible polynomial, or the degree
/// valuation at infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    Finite(Poly),
    Infinite,
}

impl Place {
    pub fn finite(p: Poly, field: &RatFuncField) -> Self {
        assert!(p.is_monic() && p.is_irreducible(field.base()), "place must be monic irreducible");
        Place::Finite(p)
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree(),
            Place::Infinite => 1,
        }
    }

    pub fn display(&self, field: &RatFuncField) -> String {
        match self {
            Place::Finite(p) => p.display(field.base()),
            Place::Infinite => "inf".to_string(),
        }
    }
}

/// All places of degree <= bound, finite ones ordered by degree then by
/// coefficient enumeration, with the infinite place last.
pub fn places_up_to(field: &RatFuncField, bound: usize) -> Vec<Place> {
    assert!(bound >= 1);
    let mut out = Vec::new();
    for d in 1..=bound {
        for p in monic_polys_of_degree(d, field.base()) {
            if p.is_irreducible(field.base()) {
                out.push(Place::Finite(p));
            }
        }
    }
    out.push(Place::Infinite);
    out
}

// ---------------------------------------------------------------------------
// Truncated Laurent series
// ---------------------------------------------------------------------------

/// A truncated Laurent series over a binary residue field: the terms
/// pi^offset * (c_0 + c_1 pi + ...), known modulo pi^(offset + len).
/// The leading stored coefficient is nonzero unless no coefficients are
/// stored at all, in which case the series is zero to its precision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentSeries {
    field: GaloisField,
    offset: i64,
    coeffs: Vec<GfElem>,
}

impl LaurentSeries {
    fn new(field: GaloisField, mut offset: i64, mut coeffs: Vec<GfElem>) -> Self {
        while coeffs.first().map_or(false, |c| c.0 == 0) {
            coeffs.remove(0);
            offset += 1;
        }
        LaurentSeries { field, offset, coeffs }
    }

    pub fn zero_to_precision(field: GaloisField, abs_prec: i64) -> Self {
        LaurentSeries { field, offset: abs_prec, coeffs: Vec::new() }
    }

    pub fn constant(field: GaloisField, c: GfElem, abs_prec: i64) -> Self {
        assert!(abs_prec > 0);
        let mut coeffs = vec![GfElem(0); abs_prec as usize];
        coeffs[0] = c;
        LaurentSeries::new(field, 0, coeffs)
    }

    /// The uniformizer pi, exact to the given precision.
    pub fn uniformizer(field: GaloisField, abs_prec: i64) -> Self {
        assert!(abs_prec > 1);
        let mut coeffs = vec![GfElem(0); (abs_prec - 1) as usize];
        coeffs[0] = GfElem(1);
        LaurentSeries { field, offset: 1, coeffs }
    }

    pub fn residue_field(&self) -> &GaloisField {
        &self.field
    }

    /// Exponents below this are known exactly.
    pub fn abs_precision(&self) -> i64 {
        self.offset + self.coeffs.len() as i64
    }

    /// The valuation, when a nonzero term is visible.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.offset)
        }
    }

    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff_at(&self, exp: i64) -> Option<GfElem> {
        if exp >= self.abs_precision() {
            return None;
        }
        if exp < self.offset {
            return Some(GfElem(0));
        }
        Some(self.coeffs[(exp - self.offset) as usize])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, GfElem)> + '_ {
        self.coeffs.iter().enumerate().filter_map(move |(i, c)| {
            if c.0 == 0 {
                None
            } else {
                Some((self.offset + i as i64, *c))
            }
        })
    }

    pub fn has_odd_support(&self) -> bool {
        self.terms().any(|(e, _)| e.rem_euclid(2) == 1)
    }

    pub fn truncate(&self, abs_prec: i64) -> Self {
        if abs_prec >= self.abs_precision() {
            return self.clone();
        }
        if abs_prec <= self.offset {
            return LaurentSeries::zero_to_precision(self.field, abs_prec);
        }
        LaurentSeries::new(
            self.field,
            self.offset,
            self.coeffs[..(abs_prec - self.offset) as usize].to_vec(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field);
        let prec = self.abs_precision().min(other.abs_precision());
        let offset = self.offset.min(other.offset).min(prec);
        let mut coeffs = vec![GfElem(0); (prec - offset) as usize];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let e = offset + i as i64;
            let a = self.coeff_at(e).unwrap_or(GfElem(0));
            let b = other.coeff_at(e).unwrap_or(GfElem(0));
            *c = self.field.add(&a, &b);
        }
        LaurentSeries::new(self.field, offset, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field);
        let f = self.field;
        // valuation of a zero-to-precision factor is at least its precision
        let v1 = self.valuation().unwrap_or(self.abs_precision());
        let v2 = other.valuation().unwrap_or(other.abs_precision());
        let prec = (self.abs_precision() + v2).min(other.abs_precision() + v1);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return LaurentSeries::zero_to_precision(f, prec);
        }
        let offset = v1 + v2;
        let n = (prec - offset) as usize;
        let mut coeffs = vec![GfElem(0); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.0 == 0 || i >= n {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        LaurentSeries::new(f, offset, coeffs)
    }

    pub fn scale(&self, c: &GfElem) -> Self {
        if c.0 == 0 {
            return LaurentSeries::zero_to_precision(self.field, self.abs_precision());
        }
        LaurentSeries::new(
            self.field,
            self.offset,
            self.coeffs.iter().map(|a| self.field.mul(a, c)).collect(),
        )
    }

    /// Multiply by pi^j.
    pub fn shift(&self, j: i64) -> Self {
        LaurentSeries { field: self.field, offset: self.offset + j, coeffs: self.coeffs.clone() }
    }

    /// Inverse of a series with visible leading term; the relative
    /// precision is preserved.
    pub fn inv(&self) -> Self {
        let f = self.field;
        assert!(!self.coeffs.is_empty(), "inversion of a series that is zero to precision");
        let n = self.coeffs.len();
        let lead_inv = f.inv(&self.coeffs[0]);
        let mut out = vec![GfElem(0); n];
        out[0] = lead_inv;
        for m in 1..n {
            let mut acc = f.zero();
            for i in 1..=m {
                acc = f.add(&acc, &f.mul(&self.coeffs[i], &out[m - i]));
            }
            out[m] = f.mul(&acc, &lead_inv);
        }
        LaurentSeries::new(f, -self.offset, out)
    }

    pub fn display(&self) -> String {
        if self.coeffs.is_empty() {
            return format!("O(pi^{})", self.abs_precision());
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms() {
            let cs = self.field.display(&c);
            let pi = match e {
                0 => String::new(),
                1 => "pi".to_string(),
                _ => format!("pi^{}", e),
            };
            parts.push(match (pi.as_str(), cs.as_str()) {
                ("", _) => cs,
                (_, "1") => pi,
                _ if cs.contains('+') => format!("({})*{}", cs, pi),
                _ => format!("{}*{}", cs, pi),
            });
        }
        format!("{}+O(pi^{})", parts.join("+"), self.abs_precision())
    }
}

// ---------------------------------------------------------------------------
// Completions
// ---------------------------------------------------------------------------

/// The completion K_v together with the data needed to expand global
/// elements: the residue field, the embedding of the base field, and the
/// image of T.
pub struct Completion {
    field: RatFuncField,
    place: Place,
    residue: GaloisField,
    emb: Embedding,
    /// Image of T in the residue field (finite places only).
    theta: GfElem,
}

impl Completion {
    pub fn new(field: RatFuncField, place: Place) -> Result<Self, LocalError> {
        let base = *field.base();
        match &place {
            Place::Infinite => {
                let emb = Embedding::new(base, base);
                Ok(Completion { field, place, residue: base, emb, theta: GfElem(0) })
            }
            Place::Finite(p) => {
                let bits = base.degree() * p.degree();
                if bits > 16 {
                    return Err(LocalError::ResidueFieldTooLarge(bits));
                }
                let residue = GaloisField::new(bits).expect("degree checked above");
                let emb = Embedding::new(base, residue);
                let p_emb: Vec<GfElem> = p.coeffs().iter().map(|c| emb.apply(*c)).collect();
                let theta = residue
                    .elements()
                    .into_iter()
                    .find(|x| {
                        let mut acc = residue.zero();
                        for c in p_emb.iter().rev() {
                            acc = residue.add(&residue.mul(&acc, x), c);
                        }
                        residue.is_zero(&acc)
                    })
                    .expect("an irreducible polynomial splits in its residue field");
                Ok(Completion { field, place, residue, emb, theta })
            }
        }
    }

    pub fn residue_field(&self) -> &GaloisField {
        &self.residue
    }

    pub fn place(&self) -> &Place {
        &self.place
    }

    fn map_poly(&self, p: &Poly) -> Vec<GfElem> {
        p.coeffs().iter().map(|c| self.emb.apply(*c)).collect()
    }

    fn eval_poly_at_series(&self, coeffs: &[GfElem], x: &LaurentSeries) -> LaurentSeries {
        let mut acc = LaurentSeries::zero_to_precision(self.residue, x.abs_precision());
        for c in coeffs.iter().rev() {
            acc = acc.mul(x);
            acc = acc.add(&LaurentSeries::constant(self.residue, *c, x.abs_precision().max(1)));
        }
        acc
    }

    /// The image of T in k_v[[pi]]: the unique root of p congruent to
    /// theta, found by Newton iteration against p(tau) = pi.
    fn tau(&self, abs_prec: i64) -> LaurentSeries {
        let p = match &self.place {
            Place::Finite(p) => p,
            Place::Infinite => unreachable!("tau is only defined at finite places"),
        };
        let f = self.residue;
        let p_emb = self.map_poly(p);
        let dp_emb = self.map_poly(&p.derivative());
        let pi = LaurentSeries::uniformizer(f, abs_prec.max(2));
        let mut tau = LaurentSeries::constant(f, self.theta, abs_prec.max(1));
        // p is separable, so p'(theta) is a unit and Newton converges
        // quadratically; valuations double each round.
        let mut steps = 0;
        loop {
            let val = self.eval_poly_at_series(&p_emb, &tau).add(&pi);
            match val.valuation() {
                None => break,
                Some(v) if v >= abs_prec => break,
                _ => {}
            }
            let deriv = self.eval_poly_at_series(&dp_emb, &tau);
            tau = tau.add(&val.mul(&deriv.inv()));
            steps += 1;
            assert!(steps <= 64, "Newton iteration for tau failed to converge");
        }
        tau.truncate(abs_prec)
    }

    /// pi-adic expansion of f with n_terms stored terms from the leading
    /// one. Work precision doubles until the leading terms of numerator
    /// and denominator are visible, up to the hard cap.
    pub fn expand(&self, f: &RatFunc, n_terms: usize) -> Result<LaurentSeries, LocalError> {
        assert!(n_terms >= 1);
        if self.field.is_zero(f) {
            return Ok(LaurentSeries::zero_to_precision(self.residue, n_terms as i64));
        }
        let cap = PRECISION_CAP.max(4 * n_terms);
        let mut work = (n_terms + 4).next_power_of_two();
        loop {
            if let Some(series) = self.try_expand(f, work as i64) {
                let val = series.valuation().expect("leading term visible");
                if series.abs_precision() >= val + n_terms as i64 {
                    return Ok(series.truncate(val + n_terms as i64));
                }
            }
            work *= 2;
            if work > cap {
                return Err(LocalError::PrecisionExceeded(cap));
            }
        }
    }

    fn try_expand(&self, f: &RatFunc, work: i64) -> Option<LaurentSeries> {
        match &self.place {
            Place::Finite(_) => {
                let tau = self.tau(work);
                let nu = self.eval_poly_at_series(&self.map_poly(&f.num), &tau);
                let de = self.eval_poly_at_series(&self.map_poly(&f.den), &tau);
                nu.valuation()?;
                de.valuation()?;
                Some(nu.mul(&de.inv()))
            }
            Place::Infinite => {
                // T = 1/pi: f(T) = pi^(deg den - deg num) * num~(pi)/den~(pi)
                // with ~ the coefficient reversal, both units at pi = 0.
                let w = f.den.degree() as i64 - f.num.degree() as i64;
                let nu = self.poly_as_series(&f.num.reversed(), work);
                let de = self.poly_as_series(&f.den.reversed(), work);
                Some(nu.mul(&de.inv()).shift(w))
            }
        }
    }

    fn poly_as_series(&self, p: &Poly, work: i64) -> LaurentSeries {
        let mut coeffs = self.map_poly(p);
        coeffs.resize(work.max(p.degree() as i64 + 1) as usize, GfElem(0));
        LaurentSeries::new(self.residue, 0, coeffs)
    }

    /// The residue of f at v; None when v(f) < 0.
    pub fn residue_of(&self, f: &RatFunc) -> Option<GfElem> {
        if self.field.is_zero(f) {
            return Some(self.residue.zero());
        }
        if self.field.valuation(f, &self.place) < 0 {
            return None;
        }
        let series = self.expand(f, 1).expect("valuation is finite");
        Some(series.coeff_at(0).unwrap_or(GfElem(0)))
    }

    /// Newton-lift a simple residue root of a univariate polynomial with
    /// series coefficients. The residue derivative must be a unit; the
    /// characteristic-two degenerate case (even polynomial) is rejected.
    pub fn hensel_lift(
        &self,
        poly: &[LaurentSeries],
        root: GfElem,
        target_prec: i64,
    ) -> Result<LaurentSeries, LocalError> {
        let f = self.residue;
        let prec = target_prec.max(2);
        let eval = |coeffs: &[LaurentSeries], x: &LaurentSeries| -> LaurentSeries {
            let mut acc = LaurentSeries::zero_to_precision(f, prec);
            for c in coeffs.iter().rev() {
                acc = acc.mul(x).add(c);
            }
            acc
        };
        let deriv: Vec<LaurentSeries> = poly
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                if i % 2 == 1 {
                    c.clone()
                } else {
                    LaurentSeries::zero_to_precision(f, c.abs_precision())
                }
            })
            .collect();
        let mut y = LaurentSeries::constant(f, root, prec);
        let g0 = eval(poly, &y);
        if let Some(v) = g0.valuation() {
            if v <= 0 {
                return Err(LocalError::NotARoot);
            }
        }
        let d0 = eval(&deriv, &y);
        match d0.valuation() {
            Some(0) => {}
            _ => return Err(LocalError::DerivativeNotUnit),
        }
        let mut steps = 0;
        loop {
            let g = eval(poly, &y);
            match g.valuation() {
                None => break,
                Some(v) if v >= target_prec => break,
                _ => {}
            }
            let d = eval(&deriv, &y);
            y = y.add(&g.mul(&d.inv()));
            steps += 1;
            if steps > 64 {
                return Err(LocalError::PrecisionExceeded(target_prec as usize));
            }
        }
        Ok(y.truncate(target_prec))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> RatFuncField {
        RatFuncField::over_f2()
    }

    fn poly(bits: &[u32]) -> Poly {
        Poly::from_coeffs(bits.iter().map(|&b| GfElem(b)).collect())
    }

    #[test]
    fn places_up_to_three() {
        let f = k();
        let places = places_up_to(&f, 1);
        assert_eq!(places.len(), 3); // (T), (T+1), inf
        assert_eq!(places[0], Place::Finite(Poly::t()));
        assert_eq!(places[1], Place::Finite(poly(&[1, 1])));
        assert_eq!(places[2], Place::Infinite);

        let places2 = places_up_to(&f, 2);
        assert_eq!(places2.len(), 4);
        assert_eq!(places2[2], Place::Finite(poly(&[1, 1, 1])));

        // degree-3 count agrees with the necklace formula (2^3 - 2)/3 = 2
        let places3 = places_up_to(&f, 3);
        let deg3: Vec<_> = places3.iter().filter(|p| p.degree() == 3).collect();
        assert_eq!(deg3.len(), 2);
        assert_eq!(deg3[0], &Place::Finite(poly(&[1, 1, 0, 1])));
        assert_eq!(deg3[1], &Place::Finite(poly(&[1, 0, 1, 1])));
    }

    #[test]
    fn expand_t_at_linear_places() {
        let f = k();
        let t = f.t();
        let at_t = Completion::new(f, Place::Finite(Poly::t())).unwrap();
        let s = at_t.expand(&t, 8).unwrap();
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.coeff_at(1), Some(GfElem(1)));
        assert_eq!(s.terms().count(), 1);

        let at_t1 = Completion::new(f, Place::Finite(poly(&[1, 1]))).unwrap();
        let s = at_t1.expand(&t, 8).unwrap();
        assert_eq!(s.valuation(), Some(0));
        assert_eq!(s.coeff_at(0), Some(GfElem(1)));
        assert_eq!(s.coeff_at(1), Some(GfElem(1)));
        assert_eq!(s.terms().count(), 2);

        let at_inf = Completion::new(f, Place::Infinite).unwrap();
        let s = at_inf.expand(&t, 8).unwrap();
        assert_eq!(s.valuation(), Some(-1));
        assert_eq!(s.coeff_at(-1), Some(GfElem(1)));
        assert_eq!(s.terms().count(), 1);
    }

    #[test]
    fn expansion_is_multiplicative_and_additive() {
        let f = k();
        let a = f.make(poly(&[1, 1, 1]), poly(&[1, 0, 1, 1]));
        let b = f.make(poly(&[0, 1, 1]), poly(&[1, 1]));
        for place in places_up_to(&f, 2) {
            let c = Completion::new(f, place).unwrap();
            let ea = c.expand(&a, 12).unwrap();
            let eb = c.expand(&b, 12).unwrap();
            let eab = c.expand(&f.mul(&a, &b), 12).unwrap();
            let prod = ea.mul(&eb);
            let prec = eab.abs_precision().min(prod.abs_precision());
            assert_eq!(eab.truncate(prec), prod.truncate(prec));
            let esum = c.expand(&f.add(&a, &b), 12).unwrap();
            let sum = ea.add(&eb);
            let prec = esum.abs_precision().min(sum.abs_precision());
            assert_eq!(esum.truncate(prec), sum.truncate(prec));
            // v(a*b) = v(a) + v(b)
            assert_eq!(
                f.valuation(&f.mul(&a, &b), c.place()),
                f.valuation(&a, c.place()) + f.valuation(&b, c.place())
            );
        }
    }

    #[test]
    fn tau_at_quadratic_place_has_unit_linear_term() {
        // at (T^2+T+1) the image of T is theta + pi + pi^2 + O(pi^3)...
        let f = k();
        let c = Completion::new(f, Place::Finite(poly(&[1, 1, 1]))).unwrap();
        let s = c.expand(&f.t(), 8).unwrap();
        assert_eq!(c.residue_field().degree(), 2);
        // theta is a root of U^2+U+1, i.e. g or g+1 in GF(4); the search
        // picks the first in enumeration order, which is g = 0b10.
        assert_eq!(s.coeff_at(0), Some(GfElem(0b10)));
        assert_eq!(s.coeff_at(1), Some(GfElem(1)));
        assert_eq!(s.coeff_at(2), Some(GfElem(1)));
        assert_eq!(s.coeff_at(3), Some(GfElem(0)));
        assert_eq!(s.coeff_at(4), Some(GfElem(1)));
    }

    #[test]
    fn global_square_decomposition() {
        let f = k();
        // T^2+1 = (T+1)^2
        let sq = f.from_poly(poly(&[1, 0, 1]));
        match f.square_decomposition(&sq) {
            SquareVerdict::Square { root } => assert_eq!(root, f.from_poly(poly(&[1, 1]))),
            _ => panic!("T^2+1 is a square"),
        }
        // T is not: obstruction B = 1
        match f.square_decomposition(&f.t()) {
            SquareVerdict::NotSquare { obstruction } => assert_eq!(obstruction, Poly::one()),
            _ => panic!("T is not a square"),
        }
        // T^3+T: A = 0, B = T+1
        match f.square_decomposition(&f.from_poly(poly(&[0, 1, 0, 1]))) {
            SquareVerdict::NotSquare { obstruction } => assert_eq!(obstruction, poly(&[1, 1])),
            _ => panic!("T^3+T is not a square"),
        }
        // zero is a square with root zero
        assert!(f.square_decomposition(&f.zero()).is_square());
    }

    #[test]
    fn local_scan_matches_global() {
        let f = k();
        let t2 = f.from_poly(poly(&[0, 0, 1]));
        for place in places_up_to(&f, 2) {
            assert!(f.local_square_scan(&t2, &place, 16).unwrap());
            assert!(f.is_square_local(&t2, &place));
        }
        let t = f.t();
        // odd valuation at (T); coefficient 1 at pi at (T+1)
        assert!(!f.local_square_scan(&t, &Place::Finite(Poly::t()), 16).unwrap());
        assert!(!f.local_square_scan(&t, &Place::Finite(poly(&[1, 1])), 16).unwrap());
        assert!(!f.is_square_local(&t, &Place::Infinite));
    }

    #[test]
    fn product_formula() {
        let f = k();
        let cases = [
            f.make(poly(&[1, 1, 1]), poly(&[0, 1])),
            f.make(poly(&[0, 0, 1, 1]), poly(&[1, 1, 1])),
            f.t(),
            f.make(poly(&[1]), poly(&[1, 1, 0, 1])),
        ];
        for f_elem in &cases {
            let bound = f_elem.num.degree().max(f_elem.den.degree()).max(1);
            let total: i64 = places_up_to(&f, bound)
                .iter()
                .map(|v| v.degree() as i64 * f.valuation(f_elem, v))
                .sum();
            assert_eq!(total, 0, "product formula fails for {}", f.display(f_elem));
        }
    }

    #[test]
    fn hensel_lift_simple_root() {
        let f = k();
        let c = Completion::new(f, Place::Finite(Poly::t())).unwrap();
        let prec = 16;
        // y^2 + y + pi: residue roots y = 0 and y = 1, derivative 1
        let pi = LaurentSeries::uniformizer(*c.residue_field(), prec);
        let one = LaurentSeries::constant(*c.residue_field(), GfElem(1), prec);
        let zero = LaurentSeries::zero_to_precision(*c.residue_field(), prec);
        let poly_coeffs = vec![pi.clone(), one.clone(), one.clone()];
        let y = c.hensel_lift(&poly_coeffs, GfElem(1), prec).unwrap();
        // substitute back: residual must vanish to precision
        let residual = y.mul(&y).add(&y).add(&pi);
        assert!(residual.is_zero_to_precision() || residual.valuation().unwrap() >= prec);

        // y^2 = 1 + pi has derivative 2y = 0: the purely inseparable
        // direction is refused
        let poly_coeffs = vec![one.add(&pi), zero, one];
        assert_eq!(c.hensel_lift(&poly_coeffs, GfElem(1), prec), Err(LocalError::DerivativeNotUnit));
    }

    #[test]
    fn series_inverse_roundtrip() {
        let f = GaloisField::f2();
        let s = LaurentSeries::new(f, -1, vec![GfElem(1), GfElem(1), GfElem(0), GfElem(1)]);
        let inv = s.inv();
        let prod = s.mul(&inv);
        assert_eq!(prod.valuation(), Some(0));
        assert_eq!(prod.coeff_at(0), Some(GfElem(1)));
        assert!(prod.terms().count() == 1);
    }

    #[test]
    fn residue_field_size_guard() {
        let f = RatFuncField::new(GaloisField::new(4).unwrap());
        // degree-5 place over GF(16) would need GF(2^20)
        let p = monic_polys_of_degree(5, f.base())
            .find(|p| p.is_irreducible(f.base()))
            .unwrap();
        assert!(matches!(
            Completion::new(f, Place::Finite(p)),
            Err(LocalError::ResidueFieldTooLarge(20))
        ));
    }
}
