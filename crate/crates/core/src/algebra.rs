//! Graded components `A_n = V^(n)/I_n` with explicit normal-word
//! coordinates, multiplication, generator actions, and Hilbert data.
//!
//! The normal basis of `A_n` is the set of non-pivot words of the RREF of
//! `I_n` under the length-lex word order; for monomial presentations this is
//! the classical basis of words avoiding the relation words, and is built
//! combinatorially without materializing `I_n` at all.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::linalg::{sparse, Field, Matrix, SparseVec};
use crate::presentation::{ideal_components_upto, Presentation};
use crate::tensor::{TensorCtx, TensorSubspace};
use crate::{Error, Result};

/// Graded dimensions `n -> dim A_n` for `n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub dims: Vec<usize>,
}

/// A presentation together with its normal bases up to a degree bound.
/// Immutable after construction; all methods are read-only.
#[derive(Debug, Clone)]
pub struct GradedAlgebra<K: Field> {
    pres: Presentation<K>,
    ctx: TensorCtx<K>,
    n_max: usize,
    dims: Vec<usize>,
    /// Sorted word indices of the normal words, per degree.
    normal_words: Vec<Vec<usize>>,
    /// Pivot word -> normal form (over normal-word positions), per degree.
    /// Empty maps for words that rewrite to zero and for monomial algebras.
    tails: Vec<HashMap<usize, SparseVec<K::Elem>>>,
    /// Ideal components, retained only on the general (non-monomial) path.
    ideals: Option<Vec<TensorSubspace<K>>>,
    monomial: bool,
}

impl<K: Field> GradedAlgebra<K> {
    pub fn new(pres: Presentation<K>, n_max: usize, cap: usize) -> Result<Self> {
        let ctx = pres.ctx(cap);
        ctx.word_count(n_max)?;
        if pres.is_monomial() {
            Self::build_monomial(pres, ctx, n_max)
        } else {
            Self::build_general(pres, ctx, n_max)
        }
    }

    fn build_monomial(pres: Presentation<K>, ctx: TensorCtx<K>, n_max: usize) -> Result<Self> {
        let d = pres.dim_v();
        let relwords: Vec<(usize, HashSet<usize>)> = pres
            .relations
            .iter()
            .map(|(&s, r)| {
                let words = r.space.rows().iter().map(|row| row[0].0).collect();
                (s, words)
            })
            .collect();
        let mut normal_words: Vec<Vec<usize>> = Vec::with_capacity(n_max + 1);
        normal_words.push(vec![0]);
        for n in 1..=n_max {
            let stride = d.pow((n - 1) as u32);
            let mut level = Vec::new();
            for g in 0..d {
                for &w in &normal_words[n - 1] {
                    let idx = g * stride + w;
                    let blocked = relwords.iter().any(|(s, words)| {
                        *s <= n && words.contains(&(idx / d.pow((n - s) as u32)))
                    });
                    if !blocked {
                        level.push(idx);
                    }
                }
            }
            normal_words.push(level);
        }
        let dims = normal_words.iter().map(|v| v.len()).collect();
        Ok(GradedAlgebra {
            pres,
            ctx,
            n_max,
            dims,
            normal_words,
            tails: vec![HashMap::new(); n_max + 1],
            ideals: None,
            monomial: true,
        })
    }

    fn build_general(pres: Presentation<K>, ctx: TensorCtx<K>, n_max: usize) -> Result<Self> {
        let ideals = ideal_components_upto(&pres, n_max, &ctx)?;
        let mut normal_words = Vec::with_capacity(n_max + 1);
        let mut tails = Vec::with_capacity(n_max + 1);
        for (n, ideal) in ideals.iter().enumerate() {
            let total = ctx.word_count(n)?;
            let pivots = ideal.space.pivots();
            let mut normal = Vec::with_capacity(total - pivots.len());
            let mut pi = 0;
            for w in 0..total {
                if pi < pivots.len() && pivots[pi] == w {
                    pi += 1;
                } else {
                    normal.push(w);
                }
            }
            let pos: HashMap<usize, usize> =
                normal.iter().enumerate().map(|(k, &w)| (w, k)).collect();
            let mut tail_map = HashMap::new();
            for row in ideal.space.rows() {
                let pivot = row[0].0;
                let tail: SparseVec<K::Elem> = row[1..]
                    .iter()
                    .map(|(w, c)| (pos[w], ctx.field.neg(c)))
                    .collect();
                if !tail.is_empty() {
                    tail_map.insert(pivot, tail);
                }
            }
            normal_words.push(normal);
            tails.push(tail_map);
        }
        let dims = normal_words.iter().map(|v: &Vec<usize>| v.len()).collect();
        Ok(GradedAlgebra {
            pres,
            ctx,
            n_max,
            dims,
            normal_words,
            tails,
            ideals: Some(ideals),
            monomial: false,
        })
    }

    pub fn presentation(&self) -> &Presentation<K> {
        &self.pres
    }

    pub fn field(&self) -> &K {
        &self.ctx.field
    }

    pub fn ctx(&self) -> &TensorCtx<K> {
        &self.ctx
    }

    pub fn dim_v(&self) -> usize {
        self.pres.dim_v()
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial
    }

    pub fn dim(&self, n: usize) -> usize {
        if n <= self.n_max {
            self.dims[n]
        } else {
            panic!("degree {n} beyond computed bound {}", self.n_max)
        }
    }

    pub fn hilbert(&self) -> HilbertData {
        HilbertData {
            dims: self.dims.clone(),
        }
    }

    /// Sorted word indices of the normal basis of `A_n`.
    pub fn normal_words(&self, n: usize) -> &[usize] {
        &self.normal_words[n]
    }

    pub fn normal_word_pos(&self, n: usize, word: usize) -> Option<usize> {
        self.normal_words[n].binary_search(&word).ok()
    }

    /// Class of a single word in normal coordinates of `A_n`.
    pub fn project_word(&self, n: usize, word: usize) -> SparseVec<K::Elem> {
        if let Some(pos) = self.normal_word_pos(n, word) {
            return sparse::unit(&self.ctx.field, pos);
        }
        match self.tails[n].get(&word) {
            Some(tail) => tail.clone(),
            None => Vec::new(),
        }
    }

    /// Class of `w_a ⊗ w_b` where both are word indices of normal words.
    pub fn concat_project(
        &self,
        deg_a: usize,
        word_a: usize,
        deg_b: usize,
        word_b: usize,
    ) -> SparseVec<K::Elem> {
        let idx = word_a * self.ctx.dim_v.pow(deg_b as u32) + word_b;
        self.project_word(deg_a + deg_b, idx)
    }

    /// Project an arbitrary vector of `V^(n)` to normal coordinates.
    pub fn project_vec(&self, n: usize, v: &SparseVec<K::Elem>) -> SparseVec<K::Elem> {
        let mut pairs = Vec::new();
        for (w, c) in v {
            for (p, x) in self.project_word(n, *w) {
                pairs.push((p, self.ctx.field.mul(&x, c)));
            }
        }
        sparse::collect(&self.ctx.field, pairs)
    }

    /// Matrix of left multiplication by generator `g`: `A_n -> A_{n+1}`
    /// in normal-basis coordinates.
    pub fn left_action(&self, g: usize, n: usize) -> Matrix<K> {
        self.action(g, n, true)
    }

    /// Matrix of right multiplication by generator `g`: `A_n -> A_{n+1}`.
    pub fn right_action(&self, g: usize, n: usize) -> Matrix<K> {
        self.action(g, n, false)
    }

    fn action(&self, g: usize, n: usize, left: bool) -> Matrix<K> {
        assert!(n + 1 <= self.n_max, "action beyond computed bound");
        let d = self.ctx.dim_v;
        let mut rows: Vec<SparseVec<K::Elem>> = vec![Vec::new(); self.dims[n + 1]];
        for (col, &w) in self.normal_words[n].iter().enumerate() {
            let idx = if left {
                g * d.pow(n as u32) + w
            } else {
                w * d + g
            };
            for (r, c) in self.project_word(n + 1, idx) {
                rows[r].push((col, c));
            }
        }
        Matrix::new(self.ctx.field.clone(), self.dims[n], rows)
    }

    /// Columns of the left action of generator `g` on `A_n` (one sparse
    /// image vector per normal word), the form the engines consume.
    pub fn left_action_cols(&self, g: usize, n: usize) -> Vec<SparseVec<K::Elem>> {
        let d = self.ctx.dim_v;
        self.normal_words[n]
            .iter()
            .map(|&w| self.project_word(n + 1, g * d.pow(n as u32) + w))
            .collect()
    }

    /// Degree-`n` component of the defining ideal as a tensor subspace.
    pub fn ideal_component(&self, n: usize) -> Result<TensorSubspace<K>> {
        if n > self.n_max {
            return Err(Error::Invariant(format!(
                "ideal component {n} beyond computed bound {}",
                self.n_max
            )));
        }
        if let Some(ideals) = &self.ideals {
            return Ok(ideals[n].clone());
        }
        // Monomial path: the ideal component is spanned by the non-normal words.
        let total = self.ctx.word_count(n)?;
        let normal: &[usize] = &self.normal_words[n];
        let mut rows = Vec::with_capacity(total - normal.len());
        let mut pi = 0;
        for w in 0..total {
            if pi < normal.len() && normal[pi] == w {
                pi += 1;
            } else {
                rows.push(sparse::unit(&self.ctx.field, w));
            }
        }
        Ok(TensorSubspace {
            degree: n,
            dim_v: self.ctx.dim_v,
            space: crate::linalg::Subspace::from_rref_rows(
                self.ctx.field.clone(),
                total,
                rows,
            ),
        })
    }
}

/// Exact graded dimensions of `A` up to `n_max`.
pub fn algebra_dims<K: Field>(p: &Presentation<K>, n_max: usize, cap: usize) -> Result<HilbertData> {
    Ok(GradedAlgebra::new(p.clone(), n_max, cap)?.hilbert())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;
    use crate::presentation::parse;
    use crate::tensor::DEFAULT_AMBIENT_CAP;

    const CAP: usize = DEFAULT_AMBIENT_CAP;

    fn alg(text: &str, n_max: usize) -> GradedAlgebra<Rationals> {
        GradedAlgebra::new(parse(text, CAP).unwrap(), n_max, CAP).unwrap()
    }

    #[test]
    fn dims_dual_numbers() {
        let a = alg("field Q\ngens x\nrel x*x\n", 6);
        assert_eq!(a.hilbert().dims, vec![1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn dims_tensor_algebra() {
        let p = parse("field Q\ngens x y\nrel x*x\n", CAP).unwrap();
        // strip the relation to get the free algebra
        let free = Presentation::new(Rationals, p.generators.clone(), Default::default());
        let a = GradedAlgebra::new(free, 5, CAP).unwrap();
        assert_eq!(a.hilbert().dims, vec![1, 2, 4, 8, 16, 32]);
    }

    /// Independent oracle: count words with no relation word as a factor.
    fn monomial_dims_oracle(dim_v: usize, rels: &[&[u8]], n_max: usize) -> Vec<usize> {
        let mut dims = Vec::new();
        for n in 0..=n_max {
            let mut count = 0usize;
            let total = dim_v.pow(n as u32);
            'words: for idx in 0..total {
                let w = crate::tensor::Word::from_index(idx, dim_v, n);
                for r in rels {
                    if n >= r.len() {
                        for start in 0..=(n - r.len()) {
                            if &w.letters[start..start + r.len()] == *r {
                                continue 'words;
                            }
                        }
                    }
                }
                count += 1;
            }
            dims.push(count);
        }
        dims
    }

    #[test]
    fn dims_match_bruteforce_oracle() {
        // k<x,y>/<x^2, y^3> -> 1,2,3,4,5,7,9
        let a = alg("field Q\ngens x y\nrel x*x\nrel y*y*y\n", 6);
        let oracle = monomial_dims_oracle(2, &[&[0, 0], &[1, 1, 1]], 6);
        assert_eq!(a.hilbert().dims, oracle);
        assert_eq!(oracle, vec![1, 2, 3, 4, 5, 7, 9]);

        let a = alg("field Q\ngens x y z\nrel x*z\nrel y*y*x\n", 6);
        let oracle = monomial_dims_oracle(3, &[&[0, 2], &[1, 1, 0]], 6);
        assert_eq!(a.hilbert().dims, oracle);
    }

    #[test]
    fn rref_canonicalizes_relation_spaces() {
        // {xy + yx, yx} spans {xy, yx}; the canonical form is monomial
        let twist = alg("field Q\ngens x y\nrel x*y + y*x\nrel y*x\n", 5);
        let plain = alg("field Q\ngens x y\nrel x*y\nrel y*x\n", 5);
        assert!(twist.is_monomial());
        assert_eq!(twist.presentation(), plain.presentation());
        assert_eq!(twist.hilbert(), plain.hilbert());
    }

    /// Independent oracle for the general path: enumerate every sandwich
    /// span of the relations as dense vectors and run a plain dense
    /// elimination over the rationals.
    fn dense_ideal_rank(rel: &[(usize, Vec<i64>)], dim_v: usize, n: usize) -> usize {
        use num::BigRational;
        let total = dim_v.pow(n as u32);
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for (s, coeffs) in rel {
            if *s > n {
                continue;
            }
            for j in 0..=(n - s) {
                let m = n - s - j;
                for p in 0..dim_v.pow(j as u32) {
                    for q in 0..dim_v.pow(m as u32) {
                        let mut row = vec![BigRational::from_integer(0.into()); total];
                        for (widx, &c) in coeffs.iter().enumerate() {
                            if c != 0 {
                                let full =
                                    (p * dim_v.pow(*s as u32) + widx) * dim_v.pow(m as u32) + q;
                                row[full] = BigRational::from_integer(c.into());
                            }
                        }
                        rows.push(row);
                    }
                }
            }
        }
        // dense Gaussian elimination
        let mut rank = 0;
        for col in 0..total {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != BigRational::from_integer(0.into())) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = rows[rank][col].clone();
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != BigRational::from_integer(0.into()) {
                    let factor = &rows[r][col].clone() / &inv;
                    for c in col..total {
                        let sub = &rows[rank][c] * &factor;
                        rows[r][c] = &rows[r][c] - &sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn general_path_matches_dense_oracle() {
        // k<x,y>/<x^2 - x*y>: a genuinely non-monomial relation
        let a = alg("field Q\ngens x y\nrel x*x - x*y\n", 5);
        assert!(!a.is_monomial());
        let rel = vec![(2usize, vec![1i64, -1, 0, 0])];
        for n in 0..=5usize {
            let expect = 2usize.pow(n as u32) - dense_ideal_rank(&rel, 2, n);
            assert_eq!(a.dim(n), expect, "degree {n}");
        }
    }

    #[test]
    fn commutative_plane_dims() {
        let a = alg("field Q\ngens x y\nrel x*y - y*x\n", 5);
        assert_eq!(a.hilbert().dims, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn action_examples() {
        // g acting on A_0 = k -> coordinate vector of g in A_1
        let a = alg("field Q\ngens x y\nrel x*y\nrel y*y*x\n", 4);
        let m = a.left_action(0, 0);
        assert_eq!(m.apply(&sparse::unit(&Rationals, 0)).len(), 1);

        // x acting on class(x) in k<x>/<x^2> -> 0
        let b = alg("field Q\ngens x\nrel x*x\n", 3);
        let m = b.left_action(0, 1);
        assert!(m.apply(&sparse::unit(&Rationals, 0)).is_empty());

        // x acting on class(y) in k<x,y>/<xy, y^2x> -> class(xy) = 0
        let pos_y = a.normal_word_pos(1, 1).unwrap();
        let m = a.left_action(0, 1);
        assert!(m.apply(&sparse::unit(&Rationals, pos_y)).is_empty());
    }

    #[test]
    fn action_associativity_and_commutation() {
        let a = alg("field Q\ngens x y\nrel x*x + x*y\n", 5);
        for n in 0..3 {
            for g1 in 0..2 {
                for g2 in 0..2 {
                    // left actions compose like word concatenation
                    let lhs = compose(&a.left_action(g2, n + 1), &a.left_action(g1, n));
                    let direct = word_action(&a, &[g2, g1], n);
                    assert_eq!(lhs, direct);
                    // left and right actions commute
                    let lr = compose(&a.right_action(g2, n + 1), &a.left_action(g1, n));
                    let rl = compose(&a.left_action(g1, n + 1), &a.right_action(g2, n));
                    assert_eq!(lr, rl);
                }
            }
        }
    }

    fn compose(
        second: &Matrix<Rationals>,
        first: &Matrix<Rationals>,
    ) -> Vec<SparseVec<num::BigRational>> {
        (0..first.ncols)
            .map(|j| second.apply(&first.apply(&sparse::unit(&Rationals, j))))
            .collect()
    }

    fn word_action(
        a: &GradedAlgebra<Rationals>,
        word: &[usize],
        n: usize,
    ) -> Vec<SparseVec<num::BigRational>> {
        let d = a.dim_v();
        let widx = word.iter().fold(0usize, |acc, &g| acc * d + g);
        (0..a.dim(n))
            .map(|pos| {
                let w = a.normal_words(n)[pos];
                a.project_word(n + word.len(), widx * d.pow(n as u32) + w)
            })
            .collect()
    }

    #[test]
    fn ideal_component_through_algebra() {
        let a = alg("field Q\ngens x z\nrel x*z\n", 4);
        assert_eq!(a.ideal_component(3).unwrap().dim(), 4);
        let b = alg("field Q\ngens x y\nrel x*y - y*x\n", 4);
        assert_eq!(
            b.ideal_component(3).unwrap().dim(),
            8 - b.dim(3)
        );
    }
}
