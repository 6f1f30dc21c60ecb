//! Sparse vectors: sorted `(index, coefficient)` pairs with no zero entries.

use super::field::Field;

pub type SparseVec<T> = Vec<(usize, T)>;

/// Unit vector `e_i`.
pub fn unit<K: Field>(field: &K, i: usize) -> SparseVec<K::Elem> {
    vec![(i, field.one())]
}

pub fn get<'a, K: Field>(v: &'a SparseVec<K::Elem>, i: usize) -> Option<&'a K::Elem> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

/// Leading (lowest-index) entry.
pub fn lead<K: Field>(v: &SparseVec<K::Elem>) -> Option<(usize, &K::Elem)> {
    v.first().map(|(i, c)| (*i, c))
}

pub fn scale<K: Field>(field: &K, v: &mut SparseVec<K::Elem>, c: &K::Elem) {
    if field.is_zero(c) {
        v.clear();
        return;
    }
    for (_, x) in v.iter_mut() {
        *x = field.mul(x, c);
    }
}

pub fn neg<K: Field>(field: &K, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
    v.iter().map(|(i, c)| (*i, field.neg(c))).collect()
}

/// `a + c*b`, merging sorted entry lists and dropping zeros.
pub fn add_scaled<K: Field>(
    field: &K,
    a: &SparseVec<K::Elem>,
    b: &SparseVec<K::Elem>,
    c: &K::Elem,
) -> SparseVec<K::Elem> {
    if field.is_zero(c) {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let x = field.mul(&b[j].1, c);
                if !field.is_zero(&x) {
                    out.push((b[j].0, x));
                }
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let x = field.add(&a[i].1, &field.mul(&b[j].1, c));
                if !field.is_zero(&x) {
                    out.push((a[i].0, x));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (k, x) in &b[j..] {
        let y = field.mul(x, c);
        if !field.is_zero(&y) {
            out.push((*k, y));
        }
    }
    out
}

pub fn add<K: Field>(
    field: &K,
    a: &SparseVec<K::Elem>,
    b: &SparseVec<K::Elem>,
) -> SparseVec<K::Elem> {
    add_scaled(field, a, b, &field.one())
}

/// Build from unsorted pairs, combining duplicates and dropping zeros.
pub fn collect<K: Field>(field: &K, mut pairs: Vec<(usize, K::Elem)>) -> SparseVec<K::Elem> {
    pairs.sort_by_key(|e| e.0);
    let mut out: SparseVec<K::Elem> = Vec::with_capacity(pairs.len());
    for (i, c) in pairs {
        match out.last_mut() {
            Some((j, x)) if *j == i => *x = field.add(x, &c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out
}

pub fn from_dense<K: Field>(field: &K, dense: &[i64]) -> SparseVec<K::Elem> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, field.from_i64(c)))
        .collect()
}

/// Kronecker product: entry `(i, a)` of `u` and `(j, b)` of `w` becomes
/// `(i * stride + j, a * b)`, where `stride` is the ambient dimension of `w`.
pub fn kron<K: Field>(
    field: &K,
    u: &SparseVec<K::Elem>,
    w: &SparseVec<K::Elem>,
    stride: usize,
) -> SparseVec<K::Elem> {
    let mut out = Vec::with_capacity(u.len() * w.len());
    for (i, a) in u {
        for (j, b) in w {
            out.push((i * stride + j, field.mul(a, b)));
        }
    }
    out
}

pub fn dot<K: Field>(field: &K, a: &SparseVec<K::Elem>, b: &SparseVec<K::Elem>) -> K::Elem {
    let mut acc = field.zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = field.add(&acc, &field.mul(&a[i].1, &b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rationals;

    #[test]
    fn merge_and_cancel() {
        let f = Rationals;
        let a = from_dense(&f, &[1, 2, 0, 3]);
        let b = from_dense(&f, &[0, -2, 5, 0]);
        let s = add(&f, &a, &b);
        assert_eq!(s, from_dense(&f, &[1, 0, 5, 3]));
        let z = add_scaled(&f, &a, &a, &f.from_i64(-1));
        assert!(z.is_empty());
    }

    #[test]
    fn kron_indices() {
        let f = Rationals;
        let a = from_dense(&f, &[0, 1]);
        let b = from_dense(&f, &[2, 0, 1]);
        let k = kron(&f, &a, &b, 3);
        assert_eq!(k, from_dense(&f, &[0, 0, 0, 2, 0, 1]));
    }
}
