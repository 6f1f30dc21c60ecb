//! Index words of tensor powers `V^(n)` and subspaces of them.
//!
//! Words of a fixed length are totally ordered lexicographically by the
//! declaration order of the generators; a word is identified with its
//! base-`dim V` integer index, so the lex order is the numeric order.

use serde::{Deserialize, Serialize};

use crate::linalg::{sparse, Field, SparseVec, Subspace};
use crate::{Error, Result};

/// A word in the generator alphabet; its degree is its length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word {
    pub letters: Vec<u8>,
}

impl Word {
    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    pub fn index(&self, dim_v: usize) -> usize {
        self.letters
            .iter()
            .fold(0usize, |acc, &l| acc * dim_v + l as usize)
    }

    pub fn from_index(mut idx: usize, dim_v: usize, degree: usize) -> Word {
        let mut letters = vec![0u8; degree];
        for k in (0..degree).rev() {
            letters[k] = (idx % dim_v) as u8;
            idx /= dim_v;
        }
        Word { letters }
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

/// Split a word index of degree `n` into its prefix of length `c` and the
/// remaining suffix, staying in index arithmetic.
pub fn split_index(idx: usize, dim_v: usize, n: usize, c: usize) -> (usize, usize) {
    let stride = dim_v.pow((n - c) as u32);
    (idx / stride, idx % stride)
}

/// A subspace of `V^(n)` with coordinates over the lex-ordered word basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorSubspace<K: Field> {
    pub degree: usize,
    pub dim_v: usize,
    pub space: Subspace<K>,
}

impl<K: Field> TensorSubspace<K> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
}

/// Shared handle for tensor-space constructions: the field, the number of
/// generators, and the ambient-dimension cap guarding `(dim V)^n` growth.
#[derive(Debug, Clone)]
pub struct TensorCtx<K: Field> {
    pub field: K,
    pub dim_v: usize,
    pub cap: usize,
}

pub const DEFAULT_AMBIENT_CAP: usize = 200_000;

impl<K: Field> TensorCtx<K> {
    pub fn new(field: K, dim_v: usize, cap: usize) -> Self {
        TensorCtx { field, dim_v, cap }
    }

    /// `dim V^(n) = (dim V)^n`, with `V^(0) = k`; errors past the cap.
    pub fn word_count(&self, n: usize) -> Result<usize> {
        let mut acc: u128 = 1;
        for _ in 0..n {
            acc *= self.dim_v as u128;
            if acc > self.cap as u128 {
                return Err(Error::CapExceeded {
                    required: acc,
                    degree: n,
                    cap: self.cap,
                });
            }
        }
        Ok(acc as usize)
    }

    pub fn zero(&self, degree: usize) -> Result<TensorSubspace<K>> {
        let ambient = self.word_count(degree)?;
        Ok(TensorSubspace {
            degree,
            dim_v: self.dim_v,
            space: Subspace::zero(self.field.clone(), ambient),
        })
    }

    pub fn full(&self, degree: usize) -> Result<TensorSubspace<K>> {
        let ambient = self.word_count(degree)?;
        Ok(TensorSubspace {
            degree,
            dim_v: self.dim_v,
            space: Subspace::full(self.field.clone(), ambient),
        })
    }

    pub fn from_rows(
        &self,
        degree: usize,
        rows: Vec<SparseVec<K::Elem>>,
    ) -> Result<TensorSubspace<K>> {
        let ambient = self.word_count(degree)?;
        Ok(TensorSubspace {
            degree,
            dim_v: self.dim_v,
            space: Subspace::from_rows(self.field.clone(), ambient, rows),
        })
    }

    /// `span{x ⊗ y : x in u, y in w}`; coordinates follow word concatenation.
    pub fn tensor_embed(
        &self,
        u: &TensorSubspace<K>,
        w: &TensorSubspace<K>,
    ) -> Result<TensorSubspace<K>> {
        if u.dim_v != w.dim_v {
            return Err(Error::AmbientMismatch(u.dim_v, w.dim_v));
        }
        let degree = u.degree + w.degree;
        let ambient = self.word_count(degree)?;
        let stride = self.word_count(w.degree)?;
        // The Kronecker product of two RREF bases, enumerated in row-major
        // order, is again an RREF basis, so no re-reduction is needed.
        let mut rows = Vec::with_capacity(u.dim() * w.dim());
        for ur in u.space.rows() {
            for wr in w.space.rows() {
                rows.push(sparse::kron(&self.field, ur, wr, stride));
            }
        }
        Ok(TensorSubspace {
            degree,
            dim_v: self.dim_v,
            space: Subspace::from_rref_rows(self.field.clone(), ambient, rows),
        })
    }

    /// `V^(j) ⊗ r ⊗ V^(m)`.
    pub fn sandwich(
        &self,
        j: usize,
        r: &TensorSubspace<K>,
        m: usize,
    ) -> Result<TensorSubspace<K>> {
        let degree = j + r.degree + m;
        let ambient = self.word_count(degree)?;
        if r.is_zero() {
            return self.zero(degree);
        }
        let left = self.word_count(j)?;
        let right = self.word_count(m)?;
        let inner_stride = self.word_count(r.degree)? * right;
        let mut rows = Vec::with_capacity(left * r.dim() * right);
        for p in 0..left {
            for rr in r.space.rows() {
                for q in 0..right {
                    let row: SparseVec<K::Elem> = rr
                        .iter()
                        .map(|(i, c)| (p * inner_stride + i * right + q, c.clone()))
                        .collect();
                    rows.push(row);
                }
            }
        }
        Ok(TensorSubspace {
            degree,
            dim_v: self.dim_v,
            space: Subspace::from_rref_rows(self.field.clone(), ambient, rows),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;

    fn ctx(dim_v: usize) -> TensorCtx<Rationals> {
        TensorCtx::new(Rationals, dim_v, DEFAULT_AMBIENT_CAP)
    }

    #[test]
    fn word_counts() {
        assert_eq!(ctx(3).word_count(0).unwrap(), 1);
        assert_eq!(ctx(2).word_count(3).unwrap(), 8);
        assert_eq!(ctx(3).word_count(4).unwrap(), 81);
        assert!(ctx(10).word_count(9).is_err());
    }

    #[test]
    fn word_index_roundtrip() {
        let w = Word {
            letters: vec![1, 0, 2],
        };
        assert_eq!(w.index(3), 1 * 9 + 0 * 3 + 2);
        assert_eq!(Word::from_index(w.index(3), 3, 3), w);
        assert_eq!(w.reversed().letters, vec![2, 0, 1]);
    }

    #[test]
    fn embed_unit_and_zero() {
        let c = ctx(2);
        let u = c
            .from_rows(2, vec![sparse::from_dense(&Rationals, &[1, 0, 0, 1])])
            .unwrap();
        let unit = c.full(0).unwrap();
        assert_eq!(c.tensor_embed(&u, &unit).unwrap(), u);
        let z = c.zero(1).unwrap();
        assert!(c.tensor_embed(&z, &u).unwrap().is_zero());
    }

    #[test]
    fn embed_single_words() {
        // span{xy} ⊗ span{z} in k<x,y,z> -> span{xyz}
        let c = ctx(3);
        let xy = Word { letters: vec![0, 1] };
        let z = Word { letters: vec![2] };
        let u = c
            .from_rows(2, vec![sparse::unit(&Rationals, xy.index(3))])
            .unwrap();
        let w = c
            .from_rows(1, vec![sparse::unit(&Rationals, z.index(3))])
            .unwrap();
        let e = c.tensor_embed(&u, &w).unwrap();
        let xyz = Word {
            letters: vec![0, 1, 2],
        };
        assert_eq!(e.dim(), 1);
        assert!(e.space.contains_vec(&sparse::unit(&Rationals, xyz.index(3))));
    }

    #[test]
    fn embed_dims_multiply() {
        let c = ctx(2);
        let u = c
            .from_rows(
                1,
                vec![sparse::from_dense(&Rationals, &[1, 1])],
            )
            .unwrap();
        let w = c.full(2).unwrap();
        assert_eq!(c.tensor_embed(&u, &w).unwrap().dim(), u.dim() * w.dim());
    }

    #[test]
    fn embed_associativity() {
        let c = ctx(2);
        let u = c
            .from_rows(1, vec![sparse::from_dense(&Rationals, &[1, -1])])
            .unwrap();
        let w = c
            .from_rows(2, vec![sparse::from_dense(&Rationals, &[1, 0, 0, 2])])
            .unwrap();
        let t = c
            .from_rows(1, vec![sparse::from_dense(&Rationals, &[0, 1])])
            .unwrap();
        let left = c
            .tensor_embed(&c.tensor_embed(&u, &w).unwrap(), &t)
            .unwrap();
        let right = c
            .tensor_embed(&u, &c.tensor_embed(&w, &t).unwrap())
            .unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn sandwich_examples() {
        // sandwich(0, r, 0) = r
        let c = ctx(2);
        let r = c
            .from_rows(2, vec![sparse::from_dense(&Rationals, &[0, 1, 0, 0])])
            .unwrap();
        assert_eq!(c.sandwich(0, &r, 0).unwrap(), r);
        // sandwich(1, span{xz}, 0) in k<x,z> -> span{xxz, zxz}
        // generators x=0, z=1; xz = index 0*2+1 = 1
        let xz = c.from_rows(2, vec![sparse::unit(&Rationals, 1)]).unwrap();
        let s = c.sandwich(1, &xz, 0).unwrap();
        assert_eq!(s.dim(), 2);
        let xxz = Word {
            letters: vec![0, 0, 1],
        };
        let zxz = Word {
            letters: vec![1, 0, 1],
        };
        assert!(s.space.contains_vec(&sparse::unit(&Rationals, xxz.index(2))));
        assert!(s.space.contains_vec(&sparse::unit(&Rationals, zxz.index(2))));
        // zero sandwich
        let z = c.zero(2).unwrap();
        assert!(c.sandwich(1, &z, 1).unwrap().is_zero());
    }
}
