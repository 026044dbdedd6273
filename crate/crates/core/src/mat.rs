//! Dense square matrices over an abstract field: just enough linear
//! algebra for coordinate changes, pencil equivalences and rank
//! computations (everything here is at most a handful of rows).

use crate::field::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> Mat<E> {
    pub fn from_rows<K>(rows: Vec<Vec<E>>, _f: &K) -> Self
    where
        K: Field<Elem = E>,
    {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Mat { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn identity<K: Field<Elem = E>>(n: usize, f: &K) -> Self {
        let mut m = Mat { n, entries: vec![f.zero(); n * n] };
        for i in 0..n {
            m.entries[i * n + i] = f.one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.entries[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.n * self.n);
        for j in 0..self.n {
            for i in 0..self.n {
                entries.push(self.at(i, j).clone());
            }
        }
        Mat { n: self.n, entries }
    }

    pub fn mul<K: Field<Elem = E>>(&self, other: &Self, f: &K) -> Self {
        assert_eq!(self.n, other.n);
        let mut entries = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = f.zero();
                for k in 0..self.n {
                    acc = f.add(&acc, &f.mul(self.at(i, k), other.at(k, j)));
                }
                entries.push(acc);
            }
        }
        Mat { n: self.n, entries }
    }

    /// Apply the matrix to a column vector.
    pub fn apply<K: Field<Elem = E>>(&self, v: &[E], f: &K) -> Vec<E> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = f.zero();
                for k in 0..self.n {
                    acc = f.add(&acc, &f.mul(self.at(i, k), &v[k]));
                }
                acc
            })
            .collect()
    }

    /// Map entries through another field.
    pub fn map<E2, F>(&self, mut g: F) -> Mat<E2>
    where
        F: FnMut(&E) -> E2,
    {
        Mat { n: self.n, entries: self.entries.iter().map(|e| g(e)).collect() }
    }

    /// Determinant by fraction-free Gaussian elimination is overkill at
    /// this size; plain elimination with exact division works over a field.
    pub fn det<K: Field<Elem = E>>(&self, f: &K) -> E {
        let mut m = self.entries.clone();
        let n = self.n;
        let mut det = f.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !f.is_zero(&m[r * n + col]));
            let pivot = match pivot {
                Some(p) => p,
                None => return f.zero(),
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(col * n + j, pivot * n + j);
                }
                // row swap flips the sign, which is invisible in char 2
            }
            let p = m[col * n + col].clone();
            det = f.mul(&det, &p);
            let p_inv = f.inv(&p);
            for r in (col + 1)..n {
                if f.is_zero(&m[r * n + col]) {
                    continue;
                }
                let factor = f.mul(&m[r * n + col], &p_inv);
                for j in col..n {
                    let sub = f.mul(&factor, &m[col * n + j]);
                    m[r * n + j] = f.add(&m[r * n + j], &sub);
                }
            }
        }
        det
    }

    pub fn rank<K: Field<Elem = E>>(&self, f: &K) -> usize {
        let mut m = self.entries.clone();
        let n = self.n;
        let mut rank = 0;
        for col in 0..n {
            let pivot = (rank..n).find(|&r| !f.is_zero(&m[r * n + col]));
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != rank {
                for j in 0..n {
                    m.swap(rank * n + j, pivot * n + j);
                }
            }
            let p_inv = f.inv(&m[rank * n + col].clone());
            for r in (rank + 1)..n {
                if f.is_zero(&m[r * n + col]) {
                    continue;
                }
                let factor = f.mul(&m[r * n + col], &p_inv);
                for j in col..n {
                    let sub = f.mul(&factor, &m[rank * n + j]);
                    m[r * n + j] = f.add(&m[r * n + j], &sub);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Inverse by Gauss-Jordan; `None` when singular.
    pub fn inverse<K: Field<Elem = E>>(&self, f: &K) -> Option<Self> {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut inv = Mat::identity(n, f).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !f.is_zero(&m[r * n + col]))?;
            if pivot != col {
                for j in 0..n {
                    m.swap(col * n + j, pivot * n + j);
                    inv.swap(col * n + j, pivot * n + j);
                }
            }
            let p_inv = f.inv(&m[col * n + col].clone());
            for j in 0..n {
                m[col * n + j] = f.mul(&m[col * n + j], &p_inv);
                inv[col * n + j] = f.mul(&inv[col * n + j], &p_inv);
            }
            for r in 0..n {
                if r == col || f.is_zero(&m[r * n + col]) {
                    continue;
                }
                let factor = m[r * n + col].clone();
                for j in 0..n {
                    let s = f.mul(&factor, &m[col * n + j]);
                    m[r * n + j] = f.add(&m[r * n + j], &s);
                    let s = f.mul(&factor, &inv[col * n + j]);
                    inv[r * n + j] = f.add(&inv[r * n + j], &s);
                }
            }
        }
        Some(Mat { n, entries: inv })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::gf::GaloisField;

    #[test]
    fn det_and_inverse_over_gf4() {
        let f = GaloisField::new(2).unwrap();
        let g = f.generator().unwrap();
        let m = Mat::from_rows(
            vec![vec![f.one(), g], vec![g, f.one()]],
            &f,
        );
        // det = 1 + g^2
        let d = m.det(&f);
        assert_eq!(d, f.add(&f.one(), &f.mul(&g, &g)));
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&inv, &f), Mat::identity(2, &f));
    }

    #[test]
    fn singular_matrix_rejected() {
        let f = GaloisField::f2();
        let m = Mat::from_rows(vec![vec![f.one(), f.one()], vec![f.one(), f.one()]], &f);
        assert!(f.is_zero(&m.det(&f)));
        assert!(m.inverse(&f).is_none());
        assert_eq!(m.rank(&f), 1);
    }

    #[test]
    fn gl3_f2_has_168_elements() {
        let f = GaloisField::f2();
        let mut count = 0;
        for bits in 0u32..512 {
            let rows: Vec<Vec<_>> = (0..3)
                .map(|i| (0..3).map(|j| f.from_index(((bits >> (3 * i + j)) & 1) as u64)).collect())
                .collect();
            let m = Mat::from_rows(rows, &f);
            if !f.is_zero(&m.det(&f)) {
                count += 1;
            }
        }
        assert_eq!(count, 168);
    }
}
