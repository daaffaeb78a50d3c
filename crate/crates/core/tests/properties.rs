//! Randomized invariants over the diagram and linear algebra layers.

use linkconc::diagram::{parse_forest, Color, Forest, Planted, TreeComponent};
use linkconc::linalg::{Backend, SparseMatrix};
use linkconc::rat;
use linkconc::relations::bcl_system;
use proptest::prelude::*;

fn arb_planted(max_depth: u32, k: Color) -> impl Strategy<Value = Planted> {
    let leaf = (1..=k).prop_map(Planted::Leaf);
    leaf.prop_recursive(max_depth, 16, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| Planted::branch(l, r))
    })
}

fn arb_component(k: Color) -> impl Strategy<Value = TreeComponent> {
    ((1..=k), arb_planted(3, k)).prop_map(|(root, tree)| TreeComponent::from_planted(root, &tree))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_survives_reparse(c in arb_component(3)) {
        prop_assert!(c.validate().is_ok());
        let canon = c.canonical();
        if let Some(code) = canon.code() {
            let re = linkconc::diagram::parse_component(code).unwrap();
            let round = re.canonical();
            prop_assert_eq!(round.code(), Some(code));
            prop_assert_eq!(round.sign(), Some(1));
        }
    }

    #[test]
    fn flip_toggles_or_annihilates(c in arb_component(3), which in any::<prop::sample::Index>()) {
        let internals: Vec<usize> = c.internals().collect();
        if internals.is_empty() {
            return Ok(());
        }
        let v = internals[which.index(internals.len())];
        let mut c2 = c.clone();
        c2.flip(v);
        let a = c.canonical();
        let b = c2.canonical();
        match (a.sign(), b.sign()) {
            (Some(s), Some(t)) => {
                prop_assert_eq!(a.code(), b.code());
                prop_assert_eq!(s, -t);
            }
            (None, None) => {}
            _ => prop_assert!(false, "flip changed zero-ness"),
        }
    }

    #[test]
    fn forest_component_order_irrelevant(a in arb_component(3), b in arb_component(3)) {
        let f = Forest::new(vec![a.clone(), b.clone()], 3);
        let g = Forest::new(vec![b, a], 3);
        prop_assert_eq!(f.canonical(), g.canonical());
    }

    #[test]
    fn row_shuffle_preserves_rank(seed in any::<u64>()) {
        let sys = bcl_system(3, 2);
        let m = sys.to_matrix().unwrap();
        let base = m.rank(Backend::Rational);
        // deterministic shuffle of the row order from the seed
        let mut order: Vec<usize> = (0..sys.rows.len()).collect();
        let mut state = seed | 1;
        for i in (1..order.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let mut shuffled = SparseMatrix::new(sys.basis.len());
        for &i in &order {
            shuffled.push_row(sys.vector_of(&sys.rows[i].vector).unwrap());
        }
        prop_assert_eq!(shuffled.rank(Backend::Rational), base);
    }

    #[test]
    fn scaled_rows_preserve_rank(scale in 1i64..=7) {
        let sys = bcl_system(2, 3);
        let m = sys.to_matrix().unwrap();
        let mut scaled = SparseMatrix::new(sys.basis.len());
        for row in &sys.rows {
            let mut v = sys.vector_of(&row.vector).unwrap();
            for (_, c) in v.iter_mut() {
                *c *= rat(scale);
            }
            scaled.push_row(v);
        }
        prop_assert_eq!(scaled.rank(Backend::Rational), m.rank(Backend::Rational));
    }

    #[test]
    fn strut_monomials_roundtrip(pairs in prop::collection::vec((1u32..=4, 1u32..=4), 0..4)) {
        let comps: Vec<TreeComponent> = pairs.iter().map(|&(a, b)| TreeComponent::strut(a, b)).collect();
        let f = Forest::new(comps, 4);
        // struts never canonicalize to zero; the same-color ones die only to
        // the ideal rows
        let canon = f.canonical();
        let code = canon.code().expect("strut forests are never AS-zero");
        let g = parse_forest(code, 4).unwrap();
        let round = g.canonical();
        prop_assert_eq!(round.code(), Some(code));
        prop_assert_eq!(g.degree(), f.degree());
    }
}
