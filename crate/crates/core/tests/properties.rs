//! Property tests for the structural invariants: order axioms, bilinearity,
//! orientation independence, reflection identities and serialization
//! round-trips.

use proptest::prelude::*;

use preproj_core::*;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9).prop_map(|(rn, rd, im_n, im_d)| {
        &Scalar::from_ratio(rn, rd) + &(&Scalar::from_ratio(im_n, im_d) * &Scalar::i())
    })
}

fn dimvec_strategy(lo: i64, hi: i64, max_abs: i64) -> impl Strategy<Value = DimVec> {
    prop::collection::btree_map(lo..=hi, -max_abs..=max_abs, 0..5)
        .prop_map(DimVec::from_entries)
}

fn weight_strategy() -> impl Strategy<Value = Weight> {
    prop::collection::vec(scalar_strategy(), 0..5)
        .prop_map(Weight::explicit)
}

proptest! {
    // The order ≺: total, translation-invariant, matches the integer order,
    // and every scalar is bounded above by an integer.
    #[test]
    fn order_axioms(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
        let ab = compare(&a, &b);
        prop_assert_eq!(ab, compare(&b, &a).reverse());
        prop_assert_eq!(ab, compare(&(&a + &c), &(&b + &c)));
        // Archimedean-style bound: some integer exceeds a.
        let bound = a.re().ceil().to_integer() + 1;
        let m = Scalar::from_rational(num_rational::BigRational::from_integer(bound));
        prop_assert!(a.precedes(&m));
    }

    #[test]
    fn order_on_integers(x in -50i64..50, y in -50i64..50) {
        prop_assert_eq!(
            compare(&Scalar::from_int(x), &Scalar::from_int(y)),
            x.cmp(&y)
        );
    }

    #[test]
    fn scalar_field_axioms(a in scalar_strategy(), b in scalar_strategy()) {
        prop_assert_eq!(&(&a * &b) - &(&b * &a), Scalar::zero());
        if !b.is_zero() {
            let q = &a / &b;
            prop_assert_eq!(&q * &b, a);
        }
    }

    #[test]
    fn scalar_json_roundtrip(a in scalar_strategy()) {
        let text = serde_json::to_string(&a).unwrap();
        let back: Scalar = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, a);
    }

    // Ringel form: bilinear in both arguments on every family.
    #[test]
    fn ringel_bilinearity(
        a in dimvec_strategy(-3, 5, 4),
        b in dimvec_strategy(-3, 5, 4),
        c in dimvec_strategy(-3, 5, 4),
        k in -4i64..=4,
    ) {
        for q in [Quiver::a_plus_inf(), Quiver::a_inf(), Quiver::d_inf()] {
            prop_assert_eq!(
                ringel_form(&q, &a.add(&b.scale(k)), &c),
                ringel_form(&q, &a, &c) + k * ringel_form(&q, &b, &c)
            );
            prop_assert_eq!(
                ringel_form(&q, &c, &a.add(&b.scale(k))),
                ringel_form(&q, &c, &a) + k * ringel_form(&q, &c, &b)
            );
            prop_assert_eq!(
                symmetrized_form(&q, &a, &b),
                symmetrized_form(&q, &b, &a)
            );
        }
    }

    // Reorienting arrows changes the one-sided form but never the
    // symmetrized one.
    #[test]
    fn orientation_independence(
        a in dimvec_strategy(0, 3, 4),
        b in dimvec_strategy(0, 3, 4),
        mask in 0u8..8,
    ) {
        let arrows: Vec<Arrow> = [(0, 1), (1, 2), (2, 3)]
            .iter()
            .enumerate()
            .map(|(k, &(t, h))| {
                if mask & (1 << k) != 0 {
                    Arrow::new(h, t)
                } else {
                    Arrow::new(t, h)
                }
            })
            .collect();
        let reoriented = Quiver::explicit(vec![0, 1, 2, 3], arrows).unwrap();
        let reference = Quiver::explicit(
            vec![0, 1, 2, 3],
            vec![Arrow::new(0, 1), Arrow::new(1, 2), Arrow::new(2, 3)],
        )
        .unwrap();
        prop_assert_eq!(
            symmetrized_form(&reoriented, &a, &b),
            symmetrized_form(&reference, &a, &b)
        );
    }

    // Reflection identities: involution on both sides and adjointness, at
    // exact equality.
    #[test]
    fn reflection_identities(
        lam in weight_strategy(),
        alpha in dimvec_strategy(0, 5, 4),
        i in 0i64..5,
    ) {
        for q in [Quiver::a_plus_inf(), Quiver::d_inf()] {
            let window: Vec<Vertex> = (0..7).collect();
            prop_assert_eq!(
                simple_reflection(&q, i, &simple_reflection(&q, i, &alpha)),
                alpha.clone()
            );
            let twice = dual_reflection(&q, i, &dual_reflection(&q, i, &lam));
            prop_assert!(twice.eq_on(&lam, &window));
            prop_assert_eq!(
                weight_dot(&dual_reflection(&q, i, &lam), &alpha),
                weight_dot(&lam, &simple_reflection(&q, i, &alpha))
            );
            // ν embeds compatibly: ν(α)·ε_i = (α, ε_i).
            prop_assert_eq!(
                cartan_apply(&q, &alpha).dot(&DimVec::unit(i)),
                Scalar::from_int(symmetrized_form(&q, &alpha, &DimVec::unit(i)))
            );
        }
    }

    // Weight JSON round-trips exactly, patches included.
    #[test]
    fn weight_json_roundtrip(lam in weight_strategy(), v in -3i64..6, s in scalar_strategy()) {
        let patched = lam.with(v, s);
        let text = serde_json::to_string(&patched).unwrap();
        let back: Weight = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, patched);
    }

    // Positive roots of type-A windows are exactly the intervals.
    #[test]
    fn type_a_roots_are_intervals(start in -3i64..3, size in 1usize..6) {
        let q = Quiver::a_inf();
        let window: Vec<Vertex> = (start..start + size as i64).collect();
        let win = q.window(window).unwrap();
        let roots = enumerate_positive_roots(&q, &win).unwrap();
        prop_assert_eq!(roots.len(), size * (size + 1) / 2);
        for root in &roots {
            let support = root.support();
            let (s, r) = (support[0], *support.last().unwrap());
            prop_assert_eq!(root, &DimVec::interval(s, r));
        }
    }

    // The chain oracle agrees with the interval conditions everywhere.
    #[test]
    fn chain_oracle_matches_interval_conditions(
        values in prop::collection::vec((-4i64..=4, 1i64..=3), 1..6),
        s in 0i64..3,
        len in 0i64..4,
    ) {
        let q = Quiver::a_plus_inf();
        let lam = Weight::explicit(
            values.into_iter().map(|(n, d)| Scalar::from_ratio(n, d)).collect(),
        );
        let r = s + len;
        let via_chain = solve_chain(&q, &lam, s, r).unwrap().is_some();
        let via_conditions = interval_conditions(&q, &lam, s, r).unwrap();
        prop_assert_eq!(via_chain, via_conditions);
    }
}
