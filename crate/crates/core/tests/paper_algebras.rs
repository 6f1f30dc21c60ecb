//! Cross-module integration on the bundled example algebras: every analysis
//! path must tell the same story about each of them.

use multikoszul::cohomology::{bar_ext_dims, k2_generation_check};
use multikoszul::koszul::{
    build_bimodule_complex, build_complex, check_bimodule_exactness, check_exactness,
    free_product, n_map, theorem_decomposition_check, verdict_via_tor, Side,
};
use multikoszul::lattice::{monomial_verdict, theorem5_verdict};
use multikoszul::linalg::Rationals;
use multikoszul::presentation::{check_minimality, opposite, parse, Presentation};
use multikoszul::resolution::{betti_table, global_dimension, GlobalDim};
use multikoszul::tensor::DEFAULT_AMBIENT_CAP;
use multikoszul::verdict::{Bounds, Status};

const CAP: usize = DEFAULT_AMBIENT_CAP;

const NOTCOPROD_1: &str = "field Q\ngens x y z\nrel x*z\nrel y*y*x\n";
const NOTCOPROD_2: &str = "field Q\ngens x y\nrel x*y\nrel y*y*x\n";
const DIFKOS: &str = "field Q\ngens x y z\nrel x*y\nrel y*y*z\n";
const LOCO_B: &str = "field Q\ngens x y z\nrel x*x*y\nrel z*z*x\n";
const LOCO_C: &str = "field Q\ngens u\nrel u*u*u*u\n";
const X2_Y3: &str = "field Q\ngens x y\nrel x*x\nrel y*y*y\n";

fn pres(text: &str) -> Presentation<Rationals> {
    parse(text, CAP).unwrap()
}

#[test]
fn all_bundled_presentations_are_minimal() {
    for text in [NOTCOPROD_1, NOTCOPROD_2, DIFKOS, LOCO_B, LOCO_C, X2_Y3] {
        let p = pres(text);
        assert!(check_minimality(&p, CAP).unwrap().0, "{text}");
    }
}

#[test]
fn four_methods_agree_on_two_degree_algebras() {
    let bounds = Bounds::new(9, 5);
    for text in [NOTCOPROD_1, NOTCOPROD_2, DIFKOS, X2_Y3] {
        let p = pres(text);
        let (tor, _, _) = verdict_via_tor(&p, bounds, CAP).unwrap();
        let complex = build_complex(&p, Side::Left, bounds, CAP).unwrap();
        let (_, exact) = check_exactness(&p, &complex).unwrap();
        let decomp = theorem_decomposition_check(&p, bounds, CAP).unwrap();
        let lattice = theorem5_verdict(&p, bounds, CAP).unwrap();
        let (mono, _) = monomial_verdict(&p, CAP).unwrap();
        let expected = tor.holds();
        assert_eq!(exact.holds(), expected, "exactness vs tor on {text}");
        assert_eq!(decomp.verdict.holds(), expected, "decomposition on {text}");
        assert_eq!(lattice.verdict.holds(), expected, "lattice on {text}");
        assert_eq!(mono.holds(), expected, "monomial certificate on {text}");
    }
}

#[test]
fn bimodule_theorem_on_all_algebras() {
    let bounds = Bounds::new(8, 4);
    for text in [NOTCOPROD_1, NOTCOPROD_2, DIFKOS, LOCO_B, LOCO_C, X2_Y3] {
        let p = pres(text);
        let (tor, _, _) = verdict_via_tor(&p, bounds, CAP).unwrap();
        let bc = build_bimodule_complex(&p, bounds, CAP).unwrap();
        let (_, bim) = check_bimodule_exactness(&p, &bc).unwrap();
        assert_eq!(bim.holds(), tor.holds(), "{text}");
    }
}

#[test]
fn verdicts_invariant_under_opposite() {
    let bounds = Bounds::new(8, 4);
    for text in [NOTCOPROD_1, NOTCOPROD_2, DIFKOS, LOCO_B, LOCO_C, X2_Y3] {
        let p = pres(text);
        let q = opposite(&p, CAP).unwrap();
        let (vp, _, _) = verdict_via_tor(&p, bounds, CAP).unwrap();
        let (vq, _, _) = verdict_via_tor(&q, bounds, CAP).unwrap();
        assert_eq!(vp.holds(), vq.holds(), "{text}");
    }
}

#[test]
fn difkos_full_story() {
    let p = pres(DIFKOS);
    let bounds = Bounds::new(8, 5);
    let betti = betti_table(&p, bounds, CAP).unwrap();
    let pairs: Vec<(usize, usize, usize)> =
        betti.entries.iter().map(|e| (e.i, e.n, e.dim)).collect();
    assert_eq!(
        pairs,
        vec![(0, 0, 1), (1, 1, 3), (2, 2, 1), (2, 3, 1), (3, 4, 1)]
    );
    assert_eq!(
        global_dimension(&p, bounds, CAP).unwrap(),
        GlobalDim::Exactly { d: 3 }
    );
    let (v, _, _) = verdict_via_tor(&p, bounds, CAP).unwrap();
    match v.status {
        Status::NotMultiKoszul { witness } => {
            assert_eq!(witness.hom_degree, Some(3));
            assert_eq!(witness.internal_degree, 4);
        }
        _ => panic!("difkos must fail"),
    }
}

#[test]
fn gldim_two_implies_multi_koszul() {
    // single relation degree, no overlaps: global dimension exactly two
    let p = pres("field Q\ngens x z\nrel x*z\n");
    let bounds = Bounds::new(8, 5);
    assert_eq!(
        global_dimension(&p, bounds, CAP).unwrap(),
        GlobalDim::Exactly { d: 2 }
    );
    let (v, _, _) = verdict_via_tor(&p, bounds, CAP).unwrap();
    assert!(v.holds());
}

#[test]
fn free_products_of_koszul_pieces_are_multi_koszul() {
    let bounds = Bounds::new(9, 5);
    let a = pres("field Q\ngens x\nrel x*x\n");
    let b = pres("field Q\ngens y\nrel y*y*y\n");
    let ab = free_product(&a, &b, CAP).unwrap();
    let (v, _, _) = verdict_via_tor(&ab, bounds, CAP).unwrap();
    assert!(v.holds());

    let c = pres("field Q\ngens x z\nrel x*z\n");
    let d = pres("field Q\ngens u\nrel u*u*u*u\n");
    let cd = free_product(&c, &d, CAP).unwrap();
    let (v, _, _) = verdict_via_tor(&cd, Bounds::new(9, 4), CAP).unwrap();
    assert!(v.holds());
}

#[test]
fn loco_c_is_four_koszul_pattern() {
    let p = pres(LOCO_C);
    let betti = betti_table(&p, Bounds::new(12, 6), CAP).unwrap();
    for i in 0..=6 {
        assert_eq!(betti.get(i, n_map(4, i)), 1, "entry ({i}, {})", n_map(4, i));
    }
    assert_eq!(betti.entries.len(), 7);
}

#[test]
fn bar_ext_equals_betti_on_paper_algebras() {
    let bounds = Bounds::new(6, 4);
    for text in [NOTCOPROD_1, NOTCOPROD_2, DIFKOS, LOCO_B, LOCO_C, X2_Y3] {
        let p = pres(text);
        let bar = bar_ext_dims(&p, bounds, CAP).unwrap();
        let betti = betti_table(&p, bounds, CAP).unwrap();
        for i in 0..=4 {
            for n in 0..=6 {
                assert_eq!(
                    bar.get(&(i, n)).copied().unwrap_or(0),
                    betti.get(i, n),
                    "{text} at ({i},{n})"
                );
            }
        }
    }
}

#[test]
fn k2_holds_for_multi_koszul_examples() {
    let bounds = Bounds::new(8, 5);
    for text in [X2_Y3, "field Q\ngens x z\nrel x*z\n", LOCO_C] {
        let p = pres(text);
        let rep = k2_generation_check(&p, bounds, CAP).unwrap();
        assert!(rep.generated, "{text}: {:?}", rep.first_failure);
    }
}
