//! Property tests: polynomial arithmetic, text round trips, and the
//! concurrency contract of the memo table.

use ctilde2::classes::classify;
use ctilde2::coweight::cw;
use ctilde2::element::{ball_with_cap, elt, parse_element, print_element, ExtAffineElement, Gen, ALL_GENS};
use ctilde2::hecke::ClassPolyCtx;
use ctilde2::laurent::{Degree, Laurent};
use ctilde2::weyl::{WeylElt, W_ALL};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

fn arb_laurent() -> impl Strategy<Value = Laurent> {
    proptest::collection::vec((-8i64..=8, -9i64..=9), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Laurent::zero(), |acc, (e, c)| {
                acc.add(&Laurent::monomial(e, BigInt::from(c)))
            })
    })
}

fn arb_bracket_poly() -> impl Strategy<Value = Laurent> {
    proptest::collection::vec(0u32..6, 0..5).prop_map(|exps| {
        let bracket = Laurent::bracket();
        let mut acc = Laurent::zero();
        for e in exps {
            let mut term = Laurent::one();
            for _ in 0..e {
                term = term.mul(&bracket);
            }
            acc = acc.add(&term);
        }
        acc
    })
}

fn arb_element() -> impl Strategy<Value = ExtAffineElement> {
    ((-6i64..=6), (-6i64..=6), 0usize..8)
        .prop_map(|(m, n, w)| elt(cw(m, n), W_ALL[w]))
}

proptest! {
    #[test]
    fn laurent_ring_axioms(p in arb_laurent(), q in arb_laurent(), r in arb_laurent()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.add(&Laurent::zero()), p.clone());
        prop_assert_eq!(p.mul(&Laurent::one()), p);
    }

    #[test]
    fn laurent_degree_additive(p in arb_laurent(), q in arb_laurent()) {
        if let (Degree::Finite(a), Degree::Finite(b)) = (p.degree(), q.degree()) {
            prop_assert_eq!(p.mul(&q).degree(), Degree::Finite(a + b));
        } else {
            prop_assert_eq!(p.mul(&q).degree(), Degree::NegInf);
        }
    }

    #[test]
    fn laurent_json_round_trip(p in arb_laurent()) {
        prop_assert_eq!(Laurent::from_json(&p.to_json()), Some(p));
    }

    #[test]
    fn element_text_round_trip(x in arb_element()) {
        prop_assert_eq!(parse_element(&print_element(x)).unwrap(), x);
        let word = x.reduced_word();
        prop_assert_eq!(word.evaluate(), x);
        prop_assert_eq!(word.simple_count() as i64, x.length());
        prop_assert_eq!(parse_element(&word.to_string()).unwrap(), x);
    }

    #[test]
    fn group_law(x in arb_element(), y in arb_element()) {
        prop_assert_eq!(x.multiply(x.inverse()), ctilde2::element::IDENTITY);
        prop_assert_eq!(
            x.multiply(y).kottwitz(),
            x.kottwitz() ^ y.kottwitz()
        );
        prop_assert_eq!(x.multiply(y).inverse(), y.inverse().multiply(x.inverse()));
        // classify is conjugation invariant
        prop_assert_eq!(classify(x.conjugate_by(y)), classify(x));
    }

    #[test]
    fn length_subadditive_on_generators(x in arb_element(), g in 0usize..4) {
        let gen: Gen = ALL_GENS[g];
        let diff = x.apply_gen(gen).length() - x.length();
        if gen == Gen::Tau {
            prop_assert_eq!(diff, 0);
        } else {
            prop_assert!(diff == 1 || diff == -1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn bracket_basis_round_trip(p in arb_bracket_poly()) {
        let coeffs = p.to_bracket_basis().expect("bracket subring input");
        let back = Laurent::from_bracket_basis(&coeffs);
        prop_assert_eq!(back, p);
    }
}

#[test]
fn weyl_is_group_of_order_8() {
    let mut seen = std::collections::BTreeSet::new();
    for &w in &W_ALL {
        seen.insert(w);
        assert_eq!(w.compose(w.inverse()), ctilde2::weyl::W_E);
    }
    assert_eq!(seen.len(), 8);
    let closed: bool = W_ALL
        .iter()
        .all(|&a| W_ALL.iter().all(|&b| W_ALL.contains(&a.compose(b))));
    assert!(closed);
    let _: Vec<&str> = W_ALL.iter().map(|w| WeylElt::name(*w)).collect();
}

/// The twisted code paths collapse to the plain ones at the identity
/// automorphism, the only instantiated case.
#[test]
fn twisted_paths_at_identity() {
    use ctilde2::element::DiagramAut;
    let delta = DiagramAut::Identity;
    let ctx = ClassPolyCtx::new();
    let twisted = ClassPolyCtx::with_delta(delta);
    for x in ctilde2::element::ball(8).unwrap() {
        assert_eq!(x.newton_point_twisted(delta), x.newton_point());
        assert_eq!(x.is_straight_twisted(delta), x.is_straight());
        for g in ALL_GENS {
            assert_eq!(x.twisted_conjugate_by(g, delta), x.conjugate_by(g.element()));
        }
        assert_eq!(*twisted.class_polynomials(x), *ctx.class_polynomials(x));
    }
}

/// Dimensions are whole and nonnegative, and invariant under tau
/// conjugation, across every b label within reach.
#[test]
fn adlv_dimensions_nonnegative_and_tau_invariant() {
    use ctilde2::adlv::{adlv, enumerate_b};
    use ctilde2::element::TAU;
    let ctx = ClassPolyCtx::new();
    let labels = enumerate_b(14);
    assert!(labels.len() >= 15);
    for x in ctilde2::element::ball(14).unwrap() {
        for &b in &labels {
            let answer = adlv(&ctx, x, b);
            if let Degree::Finite(d) = answer.dimension {
                assert!(d >= 0, "negative dimension at {x} for {b}");
                assert!(answer.nonempty);
            } else {
                assert!(!answer.nonempty);
            }
            let tau_answer = adlv(&ctx, x.conjugate_by(TAU), b);
            assert_eq!(answer.nonempty, tau_answer.nonempty);
            assert_eq!(answer.dimension, tau_answer.dimension);
        }
    }
}

/// Closed-form degree tables against the recursion, well past the
/// acceptance radius; the only elements without a stated case are the
/// exceptional psi subsets.
#[test]
fn degree_tables_deep() {
    use ctilde2::degrees::{closed_form_table, in_psi_exceptional};
    let ctx = ClassPolyCtx::new();
    for x in ball_with_cap(28, 40).unwrap() {
        let actual: BTreeMap<_, _> = ctx
            .class_polynomials(x)
            .iter()
            .map(|(c, p)| (*c, p.degree().finite().unwrap()))
            .collect();
        match closed_form_table(x) {
            Ok(pred) => assert_eq!(pred, actual, "degree table at {x}"),
            Err(_) => assert!(in_psi_exceptional(x), "unmatched non-psi {x}"),
        }
    }
}

/// Concurrent get-or-compute on a shared memo table.
#[test]
fn memo_table_concurrent() {
    let ctx = Arc::new(ClassPolyCtx::new());
    let elements = ctilde2::element::ball(9).unwrap();
    let reference: Vec<BTreeMap<_, _>> = elements
        .iter()
        .map(|&x| (*ClassPolyCtx::new().class_polynomials(x)).clone())
        .collect();
    let mut handles = Vec::new();
    for chunk in 0..4 {
        let ctx = Arc::clone(&ctx);
        let elements = elements.clone();
        handles.push(std::thread::spawn(move || {
            for (i, &x) in elements.iter().enumerate() {
                if i % 4 == chunk {
                    ctx.class_polynomials(x);
                }
            }
        }));
    }
    for h in handles {
        h.join().unwrap();
    }
    for (&x, expected) in elements.iter().zip(&reference) {
        assert_eq!(*ctx.class_polynomials(x), *expected, "{x}");
    }
}
