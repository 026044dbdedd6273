//! Ordinariness of a smooth plane curve via the Hasse-Witt (Cartier)
//! matrix, and an independent p-rank oracle through exhaustive point
//! counting and the zeta function.
//!
//! For p = 2 the matrix recipe reads coefficients straight off F itself
//! (F^(p-1) = F): the entry at row (r,s,t), column (r',s',t') is the
//! coefficient of X^(2r'-r) Y^(2s'-s) Z^(2t'-t). The represented operator
//! is semilinear: v maps to A v^sigma with sigma the entrywise squaring;
//! its g-step iterate has the p-rank as its rank, and the curve is
//! ordinary exactly when det(A) != 0. The zeta oracle recomputes the
//! p-rank from point counts alone and gates the recipe.

use crate::field::{Field, FiniteField};
use crate::form::{monomials_of_degree, Mono, TernaryForm};
use crate::gf::{projective_points, Embedding, GaloisField};
use crate::mat::Mat;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum HwError {
    #[error("point counting over GF(2^{0}) is out of the supported range")]
    InfeasibleSize(usize),
    #[error("smoothness scan supports degrees 1..=4, got {0}")]
    UnsupportedDegree(usize),
}

/// The genus-indexed matrix of the Cartier/Frobenius semilinear operator.
#[derive(Clone, Debug)]
pub struct HasseWittMatrix<K: Field> {
    pub genus: usize,
    pub indices: Vec<Mono>,
    pub matrix: Mat<K::Elem>,
}

pub fn genus_of_degree(d: usize) -> usize {
    if d < 3 {
        0
    } else {
        (d - 1) * (d - 2) / 2
    }
}

/// Interior exponent triples (r,s,t), all positive, summing to d: there
/// are exactly genus many.
fn interior_monomials(d: usize) -> Vec<Mono> {
    monomials_of_degree(d as u16)
        .into_iter()
        .filter(|m| m.x >= 1 && m.y >= 1 && m.z >= 1)
        .collect()
}

/// The Hasse-Witt matrix of a smooth plane curve of degree d. Genus-zero
/// inputs (d <= 2) give the empty matrix: such curves are trivially
/// ordinary. Smoothness is the caller's obligation; see
/// [`is_smooth_plane_curve`] for the desk-scale check over finite fields.
pub fn hw_matrix<K: Field>(form: &TernaryForm<K>, d: usize, k: &K) -> HasseWittMatrix<K> {
    let indices = interior_monomials(d);
    let g = indices.len();
    debug_assert_eq!(g, genus_of_degree(d));
    let rows: Vec<Vec<K::Elem>> = indices
        .iter()
        .map(|row| {
            indices
                .iter()
                .map(|col| {
                    let (x, y, z) =
                        (2 * col.x as i32 - row.x as i32, 2 * col.y as i32 - row.y as i32, 2 * col.z as i32 - row.z as i32);
                    if x < 0 || y < 0 || z < 0 {
                        k.zero()
                    } else {
                        form.coeff(&Mono::new(x as u16, y as u16, z as u16), k)
                    }
                })
                .collect()
        })
        .collect();
    HasseWittMatrix { genus: g, indices, matrix: Mat::from_rows(rows, k) }
}

/// Stable rank of the semilinear iterate A A^sigma ... A^(sigma^(g-1)),
/// stopping early once the rank chain settles.
pub fn p_rank<K: Field>(hw: &HasseWittMatrix<K>, k: &K) -> usize {
    if hw.genus == 0 {
        return 0;
    }
    let mut product = hw.matrix.clone();
    let mut twisted = hw.matrix.clone();
    let mut rank = product.rank(k);
    for _ in 1..hw.genus {
        if rank == 0 {
            break;
        }
        twisted = twisted.map(|e| k.square(e));
        let next = product.mul(&twisted, k);
        let next_rank = next.rank(k);
        if next_rank == rank {
            break;
        }
        product = next;
        rank = next_rank;
    }
    rank
}

/// Ordinary means p-rank equal to genus, equivalently det(A) != 0.
pub fn is_ordinary<K: Field>(form: &TernaryForm<K>, d: usize, k: &K) -> bool {
    let hw = hw_matrix(form, d, k);
    hw.genus == 0 || !k.is_zero(&hw.matrix.det(k))
}

// ---------------------------------------------------------------------------
// The zeta-function oracle
// ---------------------------------------------------------------------------

/// Number of projective points of the plane curve over GF(q).
pub fn count_points(form: &TernaryForm<GaloisField>, k: &GaloisField) -> u64 {
    projective_points(k)
        .into_iter()
        .filter(|p| k.is_zero(&form.eval(p, k)))
        .count() as u64
}

/// Count over the degree-j extension of the base field.
pub fn count_points_over_extension(
    form: &TernaryForm<GaloisField>,
    base: &GaloisField,
    j: usize,
) -> Result<u64, HwError> {
    let bits = base.degree() * j;
    if bits > 16 {
        return Err(HwError::InfeasibleSize(bits));
    }
    let big = GaloisField::new(bits).expect("range checked");
    let emb = Embedding::new(*base, big);
    let lifted = form.map_coeffs(&big, |c| emb.apply(*c));
    Ok(count_points(&lifted, &big))
}

/// Independent p-rank: count points over GF(q^i) for i = 1..g, solve the
/// Newton identities for the numerator L(t) of the zeta function, and
/// read off the degree of L mod 2. The functional equation makes every
/// coefficient above degree g even, so the truncation at g is exact.
pub fn zeta_p_rank(
    form: &TernaryForm<GaloisField>,
    d: usize,
    base: &GaloisField,
) -> Result<usize, HwError> {
    let g = genus_of_degree(d);
    if g == 0 {
        return Ok(0);
    }
    let q = base.order() as i128;
    let mut power_sums = Vec::with_capacity(g);
    for i in 1..=g {
        let n = count_points_over_extension(form, base, i)? as i128;
        power_sums.push(q.pow(i as u32) + 1 - n);
    }
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^(i-1) s_i e_{k-i}
    let mut elem = vec![0i128; g + 1];
    elem[0] = 1;
    for j in 1..=g {
        let mut acc = 0i128;
        for i in 1..=j {
            let term = power_sums[i - 1] * elem[j - i];
            acc += if i % 2 == 1 { term } else { -term };
        }
        debug_assert_eq!(acc % j as i128, 0, "Newton identities yield integers");
        elem[j] = acc / j as i128;
    }
    // L coefficient a_j = (-1)^j e_j; the p-rank is the largest odd one
    Ok((1..=g).filter(|&j| elem[j].rem_euclid(2) == 1).max().unwrap_or(0))
}

/// Smoothness over finite fields by scanning for common zeros of
/// (F, F_X, F_Y, F_Z) over the extensions that can carry a singular
/// closed point: the singular locus of a degree-d curve is cut by two
/// curves of degree d-1 and has degree at most (d-1)^2, so closed points
/// have residue degree at most (d-1)^2, and the level list covers every
/// such degree through divisibility. Levels whose projective plane
/// exceeds the work cap are skipped: the scan is exact for conics and
/// cubics over any supported base and for quartics over F_2; quartic
/// singular points of degree > 5 over GF(4) escape it.
pub fn is_smooth_plane_curve(
    form: &TernaryForm<GaloisField>,
    d: usize,
    base: &GaloisField,
) -> Result<bool, HwError> {
    let levels: &[usize] = match d {
        1 => &[],
        2 => &[1],
        3 => &[3, 4],
        4 => &[3, 4, 5, 6, 7, 8, 9],
        _ => return Err(HwError::UnsupportedDegree(d)),
    };
    let (dx, dy, dz) = form.partials();
    for &j in levels {
        let bits = base.degree() * j;
        if bits > 16 || (1u64 << (2 * bits)) > (1 << 20) {
            continue;
        }
        let big = GaloisField::new(bits).expect("range checked");
        let emb = Embedding::new(*base, big);
        let lift = |f: &TernaryForm<GaloisField>| f.map_coeffs(&big, |c| emb.apply(*c));
        let (bf, bdx, bdy, bdz) = (lift(form), lift(&dx), lift(&dy), lift(&dz));
        for p in projective_points(&big) {
            if big.is_zero(&bf.eval(&p, &big))
                && big.is_zero(&bdx.eval(&p, &big))
                && big.is_zero(&bdy.eval(&p, &big))
                && big.is_zero(&bdz.eval(&p, &big))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::{HesseCubic, WeierstrassCurve};
    use crate::funcfield::RatFuncField;

    fn f2() -> GaloisField {
        GaloisField::f2()
    }

    fn cubic_from_bits(bits: u32, k: &GaloisField) -> TernaryForm<GaloisField> {
        let monos = monomials_of_degree(3);
        TernaryForm::from_terms(
            monos.iter().enumerate().map(|(i, m)| (*m, k.elem((bits >> i) & 1))),
            k,
        )
    }

    #[test]
    fn degree_three_matrix_is_the_xyz_coefficient() {
        let k = f2();
        // Y^2Z + XYZ + X^3 + Z^3: entry 1, ordinary
        let e = WeierstrassCurve::remark_form(k.zero(), k.one(), &k);
        let form = e.to_form(&k);
        let hw = hw_matrix(&form, 3, &k);
        assert_eq!(hw.genus, 1);
        assert_eq!(*hw.matrix.at(0, 0), k.one());
        assert!(is_ordinary(&form, 3, &k));
        assert_eq!(p_rank(&hw, &k), 1);
        // Y^2Z + YZ^2 + X^3: entry 0, supersingular
        let e = WeierstrassCurve::new(k.zero(), k.zero(), k.one(), k.zero(), k.zero());
        let form = e.to_form(&k);
        let hw = hw_matrix(&form, 3, &k);
        assert!(k.is_zero(hw.matrix.at(0, 0)));
        assert_eq!(p_rank(&hw, &k), 0);
        assert!(!is_ordinary(&form, 3, &k));
    }

    #[test]
    fn genus_zero_is_vacuously_ordinary() {
        let k = f2();
        let conic = TernaryForm::from_terms(
            [(Mono::new(1, 0, 1), k.one()), (Mono::new(0, 2, 0), k.one())],
            &k,
        );
        let hw = hw_matrix(&conic, 2, &k);
        assert_eq!(hw.genus, 0);
        assert_eq!(p_rank(&hw, &k), 0);
        assert!(is_ordinary(&conic, 2, &k));
    }

    #[test]
    fn zeta_oracle_on_the_named_elliptic_curves() {
        let k = f2();
        // 4 points, trace odd: ordinary
        let e = WeierstrassCurve::remark_form(k.zero(), k.one(), &k);
        let form = e.to_form(&k);
        assert_eq!(count_points(&form, &k), 4);
        assert_eq!(zeta_p_rank(&form, 3, &k).unwrap(), 1);
        // 3 points, trace zero: supersingular
        let e = WeierstrassCurve::new(k.zero(), k.zero(), k.one(), k.zero(), k.zero());
        let form = e.to_form(&k);
        assert_eq!(count_points(&form, &k), 3);
        assert_eq!(zeta_p_rank(&form, 3, &k).unwrap(), 0);
    }

    #[test]
    fn hw_agrees_with_zeta_on_all_smooth_f2_cubics() {
        let k = f2();
        let mut smooth_seen = 0;
        for bits in 0..(1u32 << 10) {
            let form = cubic_from_bits(bits, &k);
            if form.is_zero() || form.degree() != 3 {
                continue;
            }
            if !is_smooth_plane_curve(&form, 3, &k).unwrap() {
                continue;
            }
            smooth_seen += 1;
            let ordinary = is_ordinary(&form, 3, &k);
            let oracle = zeta_p_rank(&form, 3, &k).unwrap();
            assert_eq!(ordinary, oracle == 1, "{}", form.display_in(&k));
            // for genus one the trace parity decides
            let trace_odd = (2 + 1 - count_points(&form, &k) as i64) % 2 != 0;
            assert_eq!(ordinary, trace_odd);
        }
        assert!(smooth_seen > 100, "found {} smooth cubics", smooth_seen);
    }

    #[test]
    fn klein_quartic_is_smooth_and_hw_matches_zeta() {
        let k = f2();
        // X^3 Y + Y^3 Z + Z^3 X
        let form = TernaryForm::from_terms(
            [
                (Mono::new(3, 1, 0), k.one()),
                (Mono::new(0, 3, 1), k.one()),
                (Mono::new(1, 0, 3), k.one()),
            ],
            &k,
        );
        assert!(is_smooth_plane_curve(&form, 4, &k).unwrap());
        let hw = hw_matrix(&form, 4, &k);
        assert_eq!(hw.genus, 3);
        let rank = p_rank(&hw, &k);
        let oracle = zeta_p_rank(&form, 4, &k).unwrap();
        assert_eq!(rank, oracle);
    }

    #[test]
    fn ordinariness_invariant_under_substitution() {
        use crate::mat::Mat;
        let k = f2();
        let e = WeierstrassCurve::remark_form(k.one(), k.one(), &k);
        let form = e.to_form(&k);
        let a = Mat::from_rows(
            vec![
                vec![k.one(), k.one(), k.zero()],
                vec![k.zero(), k.one(), k.one()],
                vec![k.zero(), k.zero(), k.one()],
            ],
            &k,
        );
        assert!(!k.is_zero(&a.det(&k)));
        let moved = form.substitute(&a, &k).unwrap();
        assert_eq!(is_ordinary(&form, 3, &k), is_ordinary(&moved, 3, &k));
    }

    #[test]
    fn hesse_bridge_matrix_entry_is_m() {
        // the 1x1 Hasse-Witt matrix of a Hesse cubic is exactly m, over
        // any coefficient field
        let k = RatFuncField::over_f2();
        let h = HesseCubic::new(k.one(), k.one(), k.one(), k.t());
        let hw = hw_matrix(&h.to_form(&k), 3, &k);
        assert!(k.elem_eq(hw.matrix.at(0, 0), &k.t()));
        assert!(is_ordinary(&h.to_form(&k), 3, &k));
        let fermat = HesseCubic::new(k.one(), k.one(), k.one(), k.zero());
        assert!(!is_ordinary(&fermat.to_form(&k), 3, &k));
    }
}
