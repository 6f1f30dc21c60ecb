//! Sparse matrices and Gaussian elimination with exact arithmetic.

use std::collections::HashMap;

use super::field::Field;
use super::sparse::{self, SparseVec};
use super::subspace::Subspace;

/// Forward Gaussian eliminator over sparse rows. Rows are normalized to a
/// leading coefficient of one; pivots are the lowest-index nonzero columns.
pub(crate) struct Eliminator<K: Field> {
    field: K,
    rows: Vec<SparseVec<K::Elem>>,
    by_pivot: HashMap<usize, usize>,
}

impl<K: Field> Eliminator<K> {
    pub fn new(field: K) -> Self {
        Eliminator {
            field,
            rows: Vec::new(),
            by_pivot: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminate the leading entry while it sits in a pivot column.
    pub fn reduce(&self, mut row: SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        loop {
            let Some(&(c, ref coef)) = row.first() else {
                return row;
            };
            let Some(&k) = self.by_pivot.get(&c) else {
                return row;
            };
            let coef = self.field.neg(coef);
            row = sparse::add_scaled(&self.field, &row, &self.rows[k], &coef);
        }
    }

    /// Like `reduce`, recording the row combination that was subtracted.
    pub fn reduce_tracked(
        &self,
        mut row: SparseVec<K::Elem>,
    ) -> (SparseVec<K::Elem>, Vec<(usize, K::Elem)>) {
        let mut used = Vec::new();
        loop {
            let Some(&(c, ref coef)) = row.first() else {
                return (row, used);
            };
            let Some(&k) = self.by_pivot.get(&c) else {
                return (row, used);
            };
            used.push((k, coef.clone()));
            let coef = self.field.neg(coef);
            row = sparse::add_scaled(&self.field, &row, &self.rows[k], &coef);
        }
    }

    /// Store an already-reduced, normalized row under its pivot column.
    pub fn store(&mut self, pivot: usize, row: SparseVec<K::Elem>) {
        self.by_pivot.insert(pivot, self.rows.len());
        self.rows.push(row);
    }

    /// Reduce and, if nonzero, store as a new pivot row. Returns the pivot column.
    pub fn insert(&mut self, row: SparseVec<K::Elem>) -> Option<usize> {
        let mut row = self.reduce(row);
        let (c, coef) = sparse::lead::<K>(&row).map(|(c, x)| (c, x.clone()))?;
        let inv = self.field.inv(&coef);
        sparse::scale(&self.field, &mut row, &inv);
        self.by_pivot.insert(c, self.rows.len());
        self.rows.push(row);
        Some(c)
    }

    /// Back-substitute and return the rows of the unique RREF, sorted by pivot.
    pub fn into_rref(self) -> Vec<SparseVec<K::Elem>> {
        let field = self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.rows[k].first().map(|e| e.0).unwrap_or(usize::MAX));
        let mut rows: Vec<SparseVec<K::Elem>> = order.iter().map(|&k| self.rows[k].clone()).collect();
        let pivot_of: HashMap<usize, usize> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| (r[0].0, i))
            .collect();
        for i in (0..rows.len()).rev() {
            let own = rows[i][0].0;
            let hits: Vec<(usize, K::Elem)> = rows[i]
                .iter()
                .skip(1)
                .filter_map(|(c, x)| {
                    pivot_of.get(c).map(|&j| {
                        debug_assert!(*c > own);
                        (j, x.clone())
                    })
                })
                .collect();
            let mut row = std::mem::take(&mut rows[i]);
            for (j, coef) in hits {
                let coef = field.neg(&coef);
                row = sparse::add_scaled(&field, &row, &rows[j], &coef);
            }
            rows[i] = row;
        }
        rows
    }
}

/// Exact matrix in sparse row-major form.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<K: Field> {
    pub field: K,
    pub ncols: usize,
    pub rows: Vec<SparseVec<K::Elem>>,
}

impl<K: Field> Matrix<K> {
    pub fn new(field: K, ncols: usize, rows: Vec<SparseVec<K::Elem>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.iter().all(|e| e.0 < ncols)));
        Matrix { field, ncols, rows }
    }

    pub fn zero(field: K, nrows: usize, ncols: usize) -> Self {
        Matrix {
            field,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(field: K, n: usize) -> Self {
        let rows = (0..n).map(|i| sparse::unit(&field, i)).collect();
        Matrix {
            field,
            ncols: n,
            rows,
        }
    }

    pub fn from_dense(field: K, data: &[&[i64]]) -> Self {
        let ncols = data.first().map(|r| r.len()).unwrap_or(0);
        let rows = data
            .iter()
            .map(|r| sparse::from_dense(&field, r))
            .collect();
        Matrix { field, ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Unique reduced row echelon form, pivot columns, and rank.
    pub fn rref(&self) -> (Matrix<K>, Vec<usize>, usize) {
        let mut elim = Eliminator::new(self.field.clone());
        for row in &self.rows {
            elim.insert(row.clone());
        }
        let rows = elim.into_rref();
        let pivots: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let rank = rows.len();
        (
            Matrix {
                field: self.field.clone(),
                ncols: self.ncols,
                rows,
            },
            pivots,
            rank,
        )
    }

    /// The kernel `{v : M v = 0}` as a canonical subspace of the column space.
    pub fn kernel_basis(&self) -> Subspace<K> {
        let (r, pivots, _) = self.rref();
        let mut rows = Vec::new();
        let pivot_set: HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        for j in 0..self.ncols {
            if pivot_set.contains_key(&j) {
                continue;
            }
            let mut v = vec![(j, self.field.one())];
            for (k, &p) in pivots.iter().enumerate() {
                if let Some(x) = sparse::get::<K>(&r.rows[k], j) {
                    v.push((p, self.field.neg(x)));
                }
            }
            v.sort_by_key(|e| e.0);
            rows.push(v);
        }
        Subspace::from_rows(self.field.clone(), self.ncols, rows)
    }

    /// Apply to a sparse (column) vector.
    pub fn apply(&self, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        let mut pairs = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let x = sparse::dot(&self.field, row, v);
            if !self.field.is_zero(&x) {
                pairs.push((i, x));
            }
        }
        pairs
    }
}

/// Rank of the span of the given sparse vectors.
pub fn rank_of_columns<K: Field>(field: &K, cols: &[SparseVec<K::Elem>]) -> usize {
    let mut elim = Eliminator::new(field.clone());
    for c in cols {
        elim.insert(c.clone());
    }
    elim.rank()
}

/// Kernel of the linear map whose `j`-th column is `cols[j]`, i.e. the space
/// of coefficient vectors `x` with `sum_j x_j cols[j] = 0`, as a canonical
/// subspace of `k^{cols.len()}`.
pub fn kernel_of_columns<K: Field>(field: &K, cols: &[SparseVec<K::Elem>]) -> Subspace<K> {
    let mut elim = Eliminator::new(field.clone());
    let mut combos: Vec<SparseVec<K::Elem>> = Vec::new();
    let mut kernel_rows = Vec::new();
    for (j, col) in cols.iter().enumerate() {
        let (mut reduced, used) = elim.reduce_tracked(col.clone());
        let mut combo = sparse::unit(field, j);
        for (k, coef) in used {
            let coef = field.neg(&coef);
            combo = sparse::add_scaled(field, &combo, &combos[k], &coef);
        }
        match sparse::lead::<K>(&reduced).map(|(c, x)| (c, x.clone())) {
            None => kernel_rows.push(combo),
            Some((c, coef)) => {
                let inv = field.inv(&coef);
                sparse::scale(field, &mut reduced, &inv);
                sparse::scale(field, &mut combo, &inv);
                elim.store(c, reduced);
                combos.push(combo);
            }
        }
    }
    Subspace::from_rows(field.clone(), cols.len(), kernel_rows)
}
