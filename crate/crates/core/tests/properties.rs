//! Property-based invariants for the exact linear algebra layer and the
//! tensor-space operations.

use multikoszul::linalg::{sparse, Matrix, Rationals, Subspace};
use multikoszul::presentation::{ideal_component, normalize, opposite, parse};
use multikoszul::tensor::{TensorCtx, DEFAULT_AMBIENT_CAP};
use proptest::prelude::*;

const CAP: usize = DEFAULT_AMBIENT_CAP;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, cols), rows).prop_map(
        move |data| {
            let refs: Vec<&[i64]> = data.iter().map(|r| r.as_slice()).collect();
            Matrix::from_dense(Rationals, &refs)
        },
    )
}

fn small_subspace(ambient: usize, max_rows: usize) -> impl Strategy<Value = Subspace<Rationals>> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, ambient), 0..=max_rows)
        .prop_map(move |data| {
            let rows = data
                .iter()
                .map(|r| sparse::from_dense(&Rationals, r))
                .collect();
            Subspace::from_rows(Rationals, ambient, rows)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rref_is_idempotent(m in small_matrix(4, 5)) {
        let (r1, piv1, rank1) = m.rref();
        let (r2, piv2, rank2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(piv1, piv2);
        prop_assert_eq!(rank1, rank2);
    }

    #[test]
    fn kernel_dimension_theorem(m in small_matrix(4, 6)) {
        let (_, _, rank) = m.rref();
        let k = m.kernel_basis();
        prop_assert_eq!(k.dim(), m.ncols - rank);
        // every kernel row really maps to zero
        for row in k.rows() {
            prop_assert!(m.apply(row).is_empty());
        }
    }

    #[test]
    fn dimension_formula(u in small_subspace(5, 3), w in small_subspace(5, 3)) {
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(u.dim() + w.dim(), s.dim() + i.dim());
        prop_assert!(s.contains(&u) && s.contains(&w));
        prop_assert!(u.contains(&i) && w.contains(&i));
    }

    #[test]
    fn modular_law(w1 in small_subspace(5, 4), w3 in small_subspace(5, 3)) {
        // w2 ⊆ w1: take the first half of w1's basis rows
        let half = w1.rows().iter().take(w1.dim() / 2).cloned().collect();
        let w2 = Subspace::from_rows(Rationals, 5, half);
        let lhs = w1.intersect(&w2.sum(&w3).unwrap()).unwrap();
        let rhs = w2.sum(&w1.intersect(&w3).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn complement_is_a_complement(u in small_subspace(5, 4)) {
        // w ⊆ u: a sub-sum of u's rows
        let half = u.rows().iter().step_by(2).cloned().collect();
        let w = Subspace::from_rows(Rationals, 5, half);
        let c = u.complement_of(&w).unwrap();
        prop_assert_eq!(c.sum(&w).unwrap(), u.clone());
        prop_assert_eq!(c.intersect(&w).unwrap().dim(), 0);
    }

    #[test]
    fn tensor_embed_dims_multiply(
        u in small_subspace(4, 3),
        w in small_subspace(2, 2),
    ) {
        let ctx = TensorCtx::new(Rationals, 2, CAP);
        let tu = multikoszul::tensor::TensorSubspace { degree: 2, dim_v: 2, space: u };
        let tw = multikoszul::tensor::TensorSubspace { degree: 1, dim_v: 2, space: w };
        let e = ctx.tensor_embed(&tu, &tw).unwrap();
        prop_assert_eq!(e.dim(), tu.dim() * tw.dim());
    }
}

#[test]
fn ideal_dims_independent_of_generator_order() {
    // the same algebra presented with generators declared in both orders
    let p1 = parse("field Q\ngens x y\nrel x*y\nrel y*y*x\n", CAP).unwrap();
    let p2 = parse("field Q\ngens y x\nrel x*y\nrel y*y*x\n", CAP).unwrap();
    for n in 0..=7 {
        assert_eq!(
            ideal_component(&p1, n, CAP).unwrap().dim(),
            ideal_component(&p2, n, CAP).unwrap().dim(),
            "degree {n}"
        );
    }
}

#[test]
fn normalize_idempotent_and_order_independent() {
    for text in [
        "field Q\ngens x\nrel x*x\nrel x*x*x\n",
        "field Q\ngens x y\nrel x*y\nrel x*y*y + y*x*y\n",
        "field Q\ngens x y\nrel x*x - x*y\nrel y*y*y\n",
    ] {
        let p = parse(text, CAP).unwrap();
        let (q, _) = normalize(&p, CAP).unwrap();
        let (q2, w2) = normalize(&q, CAP).unwrap();
        assert_eq!(q, q2, "{text}");
        assert!(w2.is_empty(), "{text}");
        // normalization preserves the ideal
        for n in 0..=6 {
            assert_eq!(
                ideal_component(&p, n, CAP).unwrap(),
                ideal_component(&q, n, CAP).unwrap(),
                "{text} degree {n}"
            );
        }
    }
}

#[test]
fn opposite_is_involutive_on_presentations() {
    for text in [
        "field Q\ngens x y z\nrel x*z\nrel y*y*x\n",
        "field Q\ngens x y\nrel 2*x*y - y*x\n",
    ] {
        let p = parse(text, CAP).unwrap();
        assert_eq!(opposite(&opposite(&p, CAP).unwrap(), CAP).unwrap(), p);
    }
}
