//! Exhaustive desk-scale censuses: enumerate every symmetric d x d pencil
//! over a tiny finite field, group by determinant, and classify the
//! pencils of each smooth curve into equivalence classes under
//! M -> lambda S^t M S.
//!
//! Orbits are computed by applying the whole group GL_d(q) x units to one
//! seed per class, so the cost is (number of classes) x |group|, not
//! (number of pencils) x |group|. Class representatives are the
//! lexicographically least pencils of their orbits, making tables
//! reproducible across runs.

use crate::field::{Field, FiniteField};
use crate::form::{monomials_of_degree, LinearForm, LinearPencil, TernaryForm};
use crate::gf::{GaloisField, GfElem};
use crate::hassewitt::{count_points, is_ordinary, is_smooth_plane_curve};
use crate::mat::Mat;
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CensusError {
    #[error("census space of {0} pencils exceeds the exhaustive guard (2^20)")]
    SizeGuard(u128),
    #[error("census supports degree 2 or 3 exhaustively (4 in sampled mode), got {0}")]
    UnsupportedDegree(usize),
}

/// Number of symmetric pencils: q^(3 d (d+1) / 2).
fn pencil_space_size(d: usize, q: u64) -> u128 {
    (q as u128).pow(3 * (d * (d + 1) / 2) as u32)
}

/// All symmetric d x d pencils over the field, each exactly once, in
/// index order of the free (upper-triangle) coefficients.
pub fn enumerate_symmetric_pencils(
    d: usize,
    k: &GaloisField,
) -> Result<impl Iterator<Item = LinearPencil<GaloisField>> + '_, CensusError> {
    if !(d == 2 || d == 3) {
        return Err(CensusError::UnsupportedDegree(d));
    }
    let total = pencil_space_size(d, k.order());
    if total > (1 << 20) {
        return Err(CensusError::SizeGuard(total));
    }
    Ok((0..total as u64).map(move |idx| pencil_from_index(idx, d, k)))
}

fn pencil_from_index(idx: u64, d: usize, k: &GaloisField) -> LinearPencil<GaloisField> {
    let entries = entries_from_index(idx, d, k);
    LinearPencil::from_entries(
        d,
        entries.iter().map(|e| LinearForm::new(e[0], e[1], e[2])).collect(),
        k,
    )
}

/// Row-major d x d grid of coefficient triples, symmetric by
/// construction; the index drives the upper triangle only.
fn entries_from_index(mut idx: u64, d: usize, k: &GaloisField) -> Vec<[GfElem; 3]> {
    let q = k.order();
    let mut entries = vec![[GfElem(0); 3]; d * d];
    for i in 0..d {
        for j in i..d {
            let mut coord = [GfElem(0); 3];
            for c in coord.iter_mut() {
                *c = k.from_index(idx % q);
                idx /= q;
            }
            entries[i * d + j] = coord;
            entries[j * d + i] = coord;
        }
    }
    entries
}

fn encode_entries(entries: &[[GfElem; 3]]) -> u128 {
    let mut acc: u128 = 0;
    for e in entries {
        for c in e {
            acc = (acc << 4) | c.0 as u128;
        }
    }
    acc
}

fn decode_entries(mut key: u128, d: usize) -> Vec<[GfElem; 3]> {
    let mut entries = vec![[GfElem(0); 3]; d * d];
    for i in (0..d * d).rev() {
        for c in (0..3).rev() {
            entries[i][c] = GfElem((key & 0xf) as u32);
            key >>= 4;
        }
    }
    entries
}

/// lambda * S^t M S on the flat entry grid.
fn transform_entries(
    entries: &[[GfElem; 3]],
    lambda: &GfElem,
    s: &Mat<GfElem>,
    d: usize,
    k: &GaloisField,
) -> Vec<[GfElem; 3]> {
    let mut out = vec![[GfElem(0); 3]; d * d];
    for i in 0..d {
        for j in 0..d {
            let mut acc = [GfElem(0); 3];
            for p in 0..d {
                let spi = s.at(p, i);
                if spi.0 == 0 {
                    continue;
                }
                for q in 0..d {
                    let sqj = s.at(q, j);
                    if sqj.0 == 0 {
                        continue;
                    }
                    let scale = k.mul(spi, sqj);
                    for c in 0..3 {
                        acc[c] = k.add(&acc[c], &k.mul(&entries[p * d + q][c], &scale));
                    }
                }
            }
            for c in 0..3 {
                acc[c] = k.mul(&acc[c], lambda);
            }
            out[i * d + j] = acc;
        }
    }
    out
}

/// All of GL_d(q) paired with every unit scalar.
pub fn equivalence_group(d: usize, k: &GaloisField) -> Vec<(GfElem, Mat<GfElem>)> {
    let q = k.order();
    let mut mats = Vec::new();
    for idx in 0..q.pow((d * d) as u32) {
        let mut rest = idx;
        let rows: Vec<Vec<GfElem>> = (0..d)
            .map(|_| {
                (0..d)
                    .map(|_| {
                        let e = k.from_index(rest % q);
                        rest /= q;
                        e
                    })
                    .collect()
            })
            .collect();
        let m = Mat::from_rows(rows, k);
        if !k.is_zero(&m.det(k)) {
            mats.push(m);
        }
    }
    let mut out = Vec::new();
    for lambda_idx in 1..q {
        let lambda = k.from_index(lambda_idx);
        for m in &mats {
            out.push((lambda, m.clone()));
        }
    }
    out
}

/// The lexicographically least pencil in the orbit of the given one.
pub fn canonicalize_pencil(
    pencil: &LinearPencil<GaloisField>,
    k: &GaloisField,
) -> LinearPencil<GaloisField> {
    let d = pencil.size();
    let entries: Vec<[GfElem; 3]> = (0..d * d)
        .map(|i| {
            let e = pencil.at(i / d, i % d);
            [e.x, e.y, e.z]
        })
        .collect();
    let group = equivalence_group(d, k);
    let best = group
        .iter()
        .map(|(lambda, s)| encode_entries(&transform_entries(&entries, lambda, s, d, k)))
        .min()
        .expect("group is nonempty");
    let best_entries = decode_entries(best, d);
    LinearPencil::from_entries(
        d,
        best_entries.iter().map(|e| LinearForm::new(e[0], e[1], e[2])).collect(),
        k,
    )
}

/// One curve of the census: a canonical (leading-coefficient-one) form
/// and what the pencil classification found for it.
#[derive(Clone, Debug)]
pub struct CensusRow {
    pub form: TernaryForm<GaloisField>,
    pub smooth: bool,
    /// None for singular rows, where ordinariness is undefined.
    pub ordinary: Option<bool>,
    pub points: u64,
    pub classes: usize,
    /// Least pencil of each equivalence class.
    pub class_representatives: Vec<LinearPencil<GaloisField>>,
}

#[derive(Clone, Debug)]
pub struct CensusTable {
    pub degree: usize,
    pub field: GaloisField,
    /// False in sampled mode: counts are then lower bounds over the
    /// sample, not a classification.
    pub exhaustive: bool,
    pub rows: Vec<CensusRow>,
}

type FormKey = Vec<(u16, u16, u16, u32)>;

fn form_key(form: &TernaryForm<GaloisField>) -> FormKey {
    form.terms().map(|(m, c)| (m.x, m.y, m.z, c.0)).collect()
}

/// Scale a nonzero form so its leading (graded-lex greatest) coefficient
/// is one.
fn normalize_scalar(
    form: &TernaryForm<GaloisField>,
    k: &GaloisField,
) -> TernaryForm<GaloisField> {
    let lead = form.terms().last().map(|(_, c)| *c).expect("nonzero form");
    form.scale(&k.inv(&lead), k)
}

pub fn sdr_census(d: usize, k: &GaloisField) -> Result<CensusTable, CensusError> {
    let pencils: Vec<u64> =
        (0..pencil_space_size_checked(d, k)? as u64).collect();
    Ok(run_census(d, k, &pencils, true))
}

/// Randomized sample census for spaces out of exhaustive reach; the table
/// is labeled sampled and claims nothing about unobserved pencils.
pub fn sdr_census_sampled(
    d: usize,
    k: &GaloisField,
    sample: usize,
    seed: u64,
) -> Result<CensusTable, CensusError> {
    if !(2..=4).contains(&d) {
        return Err(CensusError::UnsupportedDegree(d));
    }
    let total = pencil_space_size(d, k.order());
    let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
    let mut next = move || {
        // splitmix64: deterministic sampling without external dependencies
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let indices: Vec<u64> = (0..sample).map(|_| (next() as u128 % total) as u64).collect();
    Ok(run_census(d, k, &indices, false))
}

fn pencil_space_size_checked(d: usize, k: &GaloisField) -> Result<u128, CensusError> {
    if !(d == 2 || d == 3) {
        return Err(CensusError::UnsupportedDegree(d));
    }
    let total = pencil_space_size(d, k.order());
    if total > (1 << 20) {
        return Err(CensusError::SizeGuard(total));
    }
    Ok(total)
}

fn run_census(d: usize, k: &GaloisField, indices: &[u64], exhaustive: bool) -> CensusTable {
    // group pencils by scalar-normalized determinant
    let mut groups: HashMap<FormKey, Vec<u128>> = HashMap::new();
    for &idx in indices {
        let entries = entries_from_index(idx, d, k);
        let pencil = LinearPencil::from_entries(
            d,
            entries.iter().map(|e| LinearForm::new(e[0], e[1], e[2])).collect(),
            k,
        );
        let det = pencil.det(k);
        if det.is_zero() {
            continue;
        }
        let key = form_key(&normalize_scalar(&det, k));
        groups.entry(key).or_default().push(encode_entries(&entries));
    }

    let group_elems = equivalence_group(d, k);
    let mut classified: HashMap<FormKey, Vec<u128>> = HashMap::new();
    let mut smooth_memo: HashMap<FormKey, bool> = HashMap::new();
    for (key, members) in &groups {
        let form = form_from_key(key, k);
        let smooth = *smooth_memo
            .entry(key.clone())
            .or_insert_with(|| is_smooth_plane_curve(&form, d, k).expect("desk-scale degree"));
        if !smooth {
            continue; // singular determinants are discarded
        }
        let member_set: HashSet<u128> = members.iter().copied().collect();
        let mut visited: HashSet<u128> = HashSet::new();
        let mut canonicals = Vec::new();
        for &m in members {
            if visited.contains(&m) {
                continue;
            }
            // one full group sweep from a seed covers its whole orbit
            let seed_entries = decode_entries(m, d);
            let mut least = u128::MAX;
            for (lambda, s) in &group_elems {
                let img = encode_entries(&transform_entries(&seed_entries, lambda, s, d, k));
                least = least.min(img);
                if member_set.contains(&img) {
                    visited.insert(img);
                }
            }
            canonicals.push(least);
        }
        canonicals.sort_unstable();
        classified.insert(key.clone(), canonicals);
    }

    // rows for every curve of degree d up to scalar (exhaustive mode), or
    // for the observed determinants (sampled mode)
    let mut rows = Vec::new();
    let mut seen: HashSet<FormKey> = HashSet::new();
    let curve_keys: Vec<FormKey> = if exhaustive {
        let monos = monomials_of_degree(d as u16);
        let q = k.order();
        let mut keys = Vec::new();
        for idx in 1..(q.pow(monos.len() as u32) as u128) {
            let mut rest = idx;
            let form = TernaryForm::from_terms(
                monos.iter().map(|m| {
                    let c = k.from_index((rest % q as u128) as u64);
                    rest /= q as u128;
                    (*m, c)
                }),
                k,
            );
            if form.is_zero() {
                continue;
            }
            keys.push(form_key(&normalize_scalar(&form, k)));
        }
        keys
    } else {
        groups.keys().cloned().collect()
    };
    for key in curve_keys {
        if !seen.insert(key.clone()) {
            continue;
        }
        let form = form_from_key(&key, k);
        let smooth = *smooth_memo
            .entry(key.clone())
            .or_insert_with(|| is_smooth_plane_curve(&form, d, k).expect("desk-scale degree"));
        let canonicals = classified.get(&key).cloned().unwrap_or_default();
        let class_representatives = canonicals
            .iter()
            .map(|&c| {
                let entries = decode_entries(c, d);
                LinearPencil::from_entries(
                    d,
                    entries.iter().map(|e| LinearForm::new(e[0], e[1], e[2])).collect(),
                    k,
                )
            })
            .collect();
        rows.push(CensusRow {
            smooth,
            ordinary: if smooth { Some(is_ordinary(&form, d, k)) } else { None },
            points: count_points(&form, k),
            classes: canonicals.len(),
            class_representatives,
            form,
        });
    }
    rows.sort_by(|a, b| form_key(&a.form).cmp(&form_key(&b.form)));
    CensusTable { degree: d, field: *k, exhaustive, rows }
}

fn form_from_key(key: &FormKey, k: &GaloisField) -> TernaryForm<GaloisField> {
    TernaryForm::from_terms(
        key.iter().map(|&(x, y, z, c)| (crate::form::Mono::new(x, y, z), GfElem(c))),
        k,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pencil_enumeration_counts_and_dedup() {
        let k = GaloisField::f2();
        let pencils: Vec<_> = enumerate_symmetric_pencils(2, &k).unwrap().collect();
        assert_eq!(pencils.len(), 512);
        let keys: HashSet<u128> = (0..512u64)
            .map(|i| encode_entries(&entries_from_index(i, 2, &k)))
            .collect();
        assert_eq!(keys.len(), 512);
        assert!(pencils.iter().all(|p| p.is_symmetric()));
    }

    #[test]
    fn size_guard_rejects_degree_three_over_gf4() {
        let k = GaloisField::new(2).unwrap();
        assert!(matches!(
            sdr_census(3, &k),
            Err(CensusError::SizeGuard(_))
        ));
        assert!(matches!(
            enumerate_symmetric_pencils(4, &GaloisField::f2()),
            Err(CensusError::UnsupportedDegree(4))
        ));
    }

    #[test]
    fn conic_census_over_f2_has_one_class_per_smooth_conic() {
        let k = GaloisField::f2();
        let table = sdr_census(2, &k).unwrap();
        let smooth_rows: Vec<_> = table.rows.iter().filter(|r| r.smooth).collect();
        assert!(!smooth_rows.is_empty());
        for row in &smooth_rows {
            assert_eq!(
                row.classes, 1,
                "smooth conic {} must have exactly one class",
                row.form.display_in(&k)
            );
            // genus zero: always ordinary
            assert_eq!(row.ordinary, Some(true));
        }
        // and the class representative really cuts out the curve
        for row in smooth_rows {
            let rep = &row.class_representatives[0];
            let det = normalize_scalar(&rep.det(&k), &k);
            assert!(det.eq_in(&row.form, &k));
        }
    }

    #[test]
    fn sampled_census_is_labeled() {
        let k = GaloisField::f2();
        let table = sdr_census_sampled(3, &k, 200, 7).unwrap();
        assert!(!table.exhaustive);
        for row in &table.rows {
            if row.smooth {
                assert!(row.classes <= 1);
            }
        }
    }

    #[test]
    fn transform_matches_generic_equivalence() {
        use crate::form::Equivalence;
        let k = GaloisField::new(2).unwrap();
        let entries = entries_from_index(123_456 % 262_144, 3, &k);
        let pencil = LinearPencil::from_entries(
            3,
            entries.iter().map(|e| LinearForm::new(e[0], e[1], e[2])).collect(),
            &k,
        );
        let (lambda, s) = equivalence_group(3, &k)[1234].clone();
        let fast = transform_entries(&entries, &lambda, &s, 3, &k);
        let e = Equivalence::new(lambda, s, &k).unwrap();
        let slow = pencil.apply_equivalence(&e, &k).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let lf = slow.at(i, j);
                assert_eq!([lf.x, lf.y, lf.z], fast[i * 3 + j]);
            }
        }
    }
}
