//! Subspaces of `k^n` in canonical reduced-row-echelon form.
//!
//! Two subspaces are equal exactly when their basis matrices are identical,
//! which makes every downstream lattice computation reproducible.

use super::field::Field;
use super::matrix::{kernel_of_columns, Eliminator};
use super::sparse::{self, SparseVec};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct Subspace<K: Field> {
    field: K,
    ambient: usize,
    rows: Vec<SparseVec<K::Elem>>,
    pivots: Vec<usize>,
}

impl<K: Field> PartialEq for Subspace<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

impl<K: Field> Subspace<K> {
    /// Canonicalize arbitrary spanning rows into RREF.
    pub fn from_rows(field: K, ambient: usize, rows: Vec<SparseVec<K::Elem>>) -> Self {
        let mut elim = Eliminator::new(field.clone());
        for r in rows {
            debug_assert!(r.iter().all(|e| e.0 < ambient));
            elim.insert(r);
        }
        let rows = elim.into_rref();
        let pivots = rows.iter().map(|r| r[0].0).collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    /// Trusted constructor: `rows` must already be in RREF with the given pivots.
    pub(crate) fn from_rref_rows(field: K, ambient: usize, rows: Vec<SparseVec<K::Elem>>) -> Self {
        let pivots = rows.iter().map(|r| r[0].0).collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    pub fn zero(field: K, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: K, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| sparse::unit(&field, i)).collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span_of_unit(field: K, ambient: usize, i: usize) -> Self {
        Subspace {
            rows: vec![sparse::unit(&field, i)],
            field,
            ambient,
            pivots: vec![i],
        }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[SparseVec<K::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn pivot_row(&self, col: usize) -> Option<usize> {
        self.pivots.binary_search(&col).ok()
    }

    /// Canonical normal form of `v` modulo this subspace: the pivot-column
    /// coordinates are eliminated. Linear in `v`; zero iff `v` lies here.
    pub fn normal_form(&self, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        let hits: Vec<(usize, K::Elem)> = v
            .iter()
            .filter_map(|(c, x)| self.pivot_row(*c).map(|k| (k, x.clone())))
            .collect();
        let mut out = v.clone();
        for (k, coef) in hits {
            let coef = self.field.neg(&coef);
            out = sparse::add_scaled(&self.field, &out, &self.rows[k], &coef);
        }
        out
    }

    pub fn contains_vec(&self, v: &SparseVec<K::Elem>) -> bool {
        self.normal_form(v).is_empty()
    }

    /// Coordinates of `v` in this basis, if `v` lies in the subspace.
    pub fn coords_of(&self, v: &SparseVec<K::Elem>) -> Option<SparseVec<K::Elem>> {
        let hits: Vec<(usize, K::Elem)> = v
            .iter()
            .filter_map(|(c, x)| self.pivot_row(*c).map(|k| (k, x.clone())))
            .collect();
        let mut rem = v.clone();
        for (k, coef) in &hits {
            let coef = self.field.neg(coef);
            rem = sparse::add_scaled(&self.field, &rem, &self.rows[*k], &coef);
        }
        if rem.is_empty() {
            Some(sparse::collect(&self.field, hits))
        } else {
            None
        }
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace<K>) -> bool {
        self.ambient == other.ambient && other.rows.iter().all(|r| self.contains_vec(r))
    }

    pub fn sum(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_ambient(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Subspace::from_rows(
            self.field.clone(),
            self.ambient,
            rows,
        ))
    }

    pub fn sum_of(field: &K, ambient: usize, parts: &[&Subspace<K>]) -> Result<Subspace<K>> {
        let mut rows = Vec::new();
        for p in parts {
            if p.ambient != ambient {
                return Err(Error::AmbientMismatch(p.ambient, ambient));
            }
            rows.extend(p.rows.iter().cloned());
        }
        Ok(Subspace::from_rows(field.clone(), ambient, rows))
    }

    pub fn intersect(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_ambient(other)?;
        let (small, big) = if self.dim() <= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_zero() {
            return Ok(Subspace::zero(self.field.clone(), self.ambient));
        }
        // v = sum(lambda_i small_i) lies in big iff the same combination of
        // normal forms vanishes; normal_form is linear, so the coefficient
        // vectors form the kernel of the stacked remainder columns.
        let rems: Vec<SparseVec<K::Elem>> = small
            .rows
            .iter()
            .map(|r| big.normal_form(r))
            .collect();
        let combos = kernel_of_columns(&self.field, &rems);
        let rows = combos
            .rows()
            .iter()
            .map(|lambda| {
                let mut acc: SparseVec<K::Elem> = Vec::new();
                for (i, c) in lambda {
                    acc = sparse::add_scaled(&self.field, &acc, &small.rows[*i], c);
                }
                acc
            })
            .collect();
        Ok(Subspace::from_rows(
            self.field.clone(),
            self.ambient,
            rows,
        ))
    }

    /// A deterministic complement of `w` inside `self` (requires `w ⊆ self`):
    /// express `w` in this basis, take the RREF pivot set of those coordinate
    /// vectors, and keep the basis rows at the remaining indices.
    pub fn complement_of(&self, w: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_ambient(w)?;
        let mut coord_rows = Vec::with_capacity(w.dim());
        for r in &w.rows {
            let coords = self.coords_of(r).ok_or_else(|| {
                Error::NotContained("complement argument".into(), "enclosing subspace".into())
            })?;
            coord_rows.push(coords);
        }
        let coord_space = Subspace::from_rows(self.field.clone(), self.dim(), coord_rows);
        let taken: Vec<bool> = {
            let mut t = vec![false; self.dim()];
            for &p in coord_space.pivots() {
                t[p] = true;
            }
            t
        };
        let rows: Vec<SparseVec<K::Elem>> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(i, _)| !taken[*i])
            .map(|(_, r)| r.clone())
            .collect();
        // A subset of RREF rows is itself in RREF.
        Ok(Subspace::from_rref_rows(
            self.field.clone(),
            self.ambient,
            rows,
        ))
    }

    fn check_ambient(&self, other: &Subspace<K>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rationals;
    use crate::linalg::sparse::from_dense;

    fn sp(rows: &[&[i64]], ambient: usize) -> Subspace<Rationals> {
        let f = Rationals;
        Subspace::from_rows(
            f,
            ambient,
            rows.iter().map(|r| from_dense(&f, r)).collect(),
        )
    }

    #[test]
    fn idempotent_lattice_ops() {
        let u = sp(&[&[1, 2, 0], &[0, 0, 1]], 3);
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert!(u.contains(&u));
    }

    #[test]
    fn disjoint_lines() {
        let e1 = sp(&[&[1, 0]], 2);
        let e2 = sp(&[&[0, 1]], 2);
        assert_eq!(e1.intersect(&e2).unwrap().dim(), 0);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::full(Rationals, 2));
    }

    #[test]
    fn hand_intersection() {
        // span{e1+e2, e2+e3} ∩ span{e1, e3} = span{e1-e3} in ambient dim 3
        let u = sp(&[&[1, 1, 0], &[0, 1, 1]], 3);
        let w = sp(&[&[1, 0, 0], &[0, 0, 1]], 3);
        let i = u.intersect(&w).unwrap();
        assert_eq!(i, sp(&[&[1, 0, -1]], 3));
    }

    #[test]
    fn dimension_formula() {
        let u = sp(&[&[1, 1, 0, 0], &[0, 1, 1, 0]], 4);
        let w = sp(&[&[0, 0, 1, 1], &[1, 0, 0, 1]], 4);
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        assert_eq!(u.dim() + w.dim(), s.dim() + i.dim());
    }

    #[test]
    fn complement_rules() {
        let f = Rationals;
        let u = sp(&[&[1, 2, 0], &[0, 0, 1]], 3);
        // complement of 0 in u -> u
        let zero = Subspace::zero(f, 3);
        assert_eq!(u.complement_of(&zero).unwrap(), u);
        // complement of u in u -> 0
        assert_eq!(u.complement_of(&u).unwrap().dim(), 0);
        // ambient 2: complement of span{e1+e2} in the full space -> span{e2}
        let full = Subspace::full(f, 2);
        let diag = sp(&[&[1, 1]], 2);
        assert_eq!(full.complement_of(&diag).unwrap(), sp(&[&[0, 1]], 2));
        // direct sum property
        let c = full.complement_of(&diag).unwrap();
        assert_eq!(c.sum(&diag).unwrap(), full);
        assert_eq!(c.intersect(&diag).unwrap().dim(), 0);
    }

    #[test]
    fn complement_requires_containment() {
        let u = sp(&[&[1, 0]], 2);
        let w = sp(&[&[0, 1]], 2);
        assert!(u.complement_of(&w).is_err());
    }

    #[test]
    fn coords_roundtrip() {
        let f = Rationals;
        let u = sp(&[&[1, 0, 2], &[0, 1, -1]], 3);
        let v = from_dense(&f, &[2, 3, 1]);
        let coords = u.coords_of(&v).unwrap();
        assert_eq!(coords, from_dense(&f, &[2, 3]));
        assert!(u.coords_of(&from_dense(&f, &[0, 0, 1])).is_none());
    }
}
