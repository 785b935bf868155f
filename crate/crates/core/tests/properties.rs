//! Structural invariants: order axioms on frontiers, transform round trips,
//! convolution algebra identities, and the reduced algebras against their
//! poset counterparts.

use std::collections::BTreeSet;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use incidence_core::checkers::hk_witnesses;
use incidence_core::reduced::{
    interval_type, pk_polynomial, qbinomial, reduced_convolve, reduced_mobius, CoefficientFamily,
    ReducedSequence,
};
use incidence_core::seeded::{random_supported, SplitMix64};
use incidence_core::zoo::{build, build_counterexample_p, FamilySpec};
use incidence_core::{rat, ElementKey, PairFn, Rational, SupportedFunction};

fn all_specs() -> Vec<(FamilySpec, u32)> {
    vec![
        (FamilySpec::Divisibility, 30),
        (FamilySpec::Antichain, 20),
        (FamilySpec::LinearOrder, 20),
        (FamilySpec::FiniteSubsets, 4),
        (FamilySpec::Subspaces { q: 2 }, 3),
        (FamilySpec::Subspaces { q: 3 }, 2),
        (FamilySpec::CounterexampleP, 5),
        (FamilySpec::CounterexampleQ, 4),
        (
            FamilySpec::Product(
                Box::new(FamilySpec::Antichain),
                Box::new(FamilySpec::Divisibility),
            ),
            5,
        ),
    ]
}

#[test]
fn leq_is_a_partial_order_on_every_frontier() {
    for (spec, bound) in all_specs() {
        let p = build(&spec).unwrap();
        let elems = p.frontier(bound).unwrap();
        for x in &elems {
            assert!(p.leq(x, x).unwrap(), "{}: not reflexive at {x}", p.name());
        }
        for x in &elems {
            for y in &elems {
                if x != y && p.leq(x, y).unwrap() && p.leq(y, x).unwrap() {
                    panic!("{}: antisymmetry fails at ({x}, {y})", p.name());
                }
            }
        }
        for x in &elems {
            for y in &elems {
                if !p.leq(x, y).unwrap() {
                    continue;
                }
                for z in &elems {
                    if p.leq(y, z).unwrap() {
                        assert!(
                            p.leq(x, z).unwrap(),
                            "{}: transitivity fails at ({x}, {y}, {z})",
                            p.name()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn frontiers_are_nested_down_closed_and_hold_bottom() {
    for (spec, bound) in all_specs() {
        let p = build(&spec).unwrap();
        let mut previous: BTreeSet<ElementKey> = BTreeSet::new();
        for n in 0..=bound {
            let frontier: BTreeSet<ElementKey> = p.frontier(n).unwrap().into_iter().collect();
            assert!(
                previous.is_subset(&frontier),
                "{}: frontier({}) does not contain frontier({})",
                p.name(),
                n,
                n.saturating_sub(1)
            );
            for x in &frontier {
                for z in p.down_set(x).unwrap() {
                    assert!(
                        frontier.contains(&z),
                        "{}: frontier({n}) misses {z} <= {x}",
                        p.name()
                    );
                }
            }
            if let Some(bottom) = p.bottom() {
                if !frontier.is_empty() {
                    assert!(frontier.contains(&bottom));
                    for x in &frontier {
                        assert!(p.leq(&bottom, x).unwrap());
                    }
                }
            }
            previous = frontier;
        }
    }
}

#[test]
fn down_sets_are_down_closed_and_complete() {
    for (spec, bound) in all_specs() {
        let p = build(&spec).unwrap();
        let elems = p.frontier(bound.min(4)).unwrap();
        for x in &elems {
            let ds: BTreeSet<ElementKey> = p.down_set(x).unwrap().into_iter().collect();
            assert!(ds.contains(x));
            for z in &ds {
                assert!(p.leq(z, x).unwrap());
                for w in p.down_set(z).unwrap() {
                    assert!(ds.contains(&w), "{}: {w} <= {z} <= {x} missing", p.name());
                }
            }
            // completeness against the frontier
            for y in &elems {
                assert_eq!(p.leq(y, x).unwrap(), ds.contains(y));
            }
        }
    }
}

#[test]
fn interval_endpoints_and_family_mismatch() {
    let p = build(&FamilySpec::Divisibility).unwrap();
    let i = p
        .interval_elements(&ElementKey::Div(1), &ElementKey::Div(6))
        .unwrap();
    assert_eq!(
        i,
        vec![
            ElementKey::Div(1),
            ElementKey::Div(2),
            ElementKey::Div(3),
            ElementKey::Div(6)
        ]
    );
    assert_eq!(
        p.interval_elements(&ElementKey::Div(1), &ElementKey::Div(1))
            .unwrap(),
        vec![ElementKey::Div(1)]
    );
    assert!(p
        .interval_elements(&ElementKey::Div(4), &ElementKey::Div(6))
        .unwrap()
        .is_empty());
    assert!(p
        .interval_elements(&ElementKey::Lin(1), &ElementKey::Div(6))
        .is_err());
    assert!(p.mobius(&ElementKey::Anti(2), &ElementKey::Div(4)).is_err());
}

#[test]
fn mobius_hand_values_on_divisibility() {
    // recursion run by hand over the divisors of 12
    let p = build(&FamilySpec::Divisibility).unwrap();
    let mu = |a: u64, b: u64| p.mobius(&ElementKey::Div(a), &ElementKey::Div(b)).unwrap();
    assert_eq!(mu(1, 1), BigInt::from(1));
    assert_eq!(mu(1, 2), BigInt::from(-1));
    assert_eq!(mu(1, 4), BigInt::from(0));
    assert_eq!(mu(1, 6), BigInt::from(1));
    assert_eq!(mu(1, 12), BigInt::from(0));
    assert_eq!(mu(2, 12), BigInt::from(1));
    assert_eq!(mu(4, 6), BigInt::from(0));
}

#[test]
fn mobius_in_counterexample_p_below_grid_minimals() {
    let p = build_counterexample_p();
    let z1 = ElementKey::parse("P:z1").unwrap();
    for l in [1u64, 2, 9, 40] {
        let m = ElementKey::parse(&format!("P:prod:({l},1)")).unwrap();
        assert_eq!(p.mobius(&z1, &m).unwrap(), BigInt::from(-1));
        let interval = p.interval_elements(&z1, &m).unwrap();
        assert_eq!(interval.len(), 2, "open interval (z1, m_l) must be empty");
    }
    assert_eq!(
        p.mobius(&z1, &z1).unwrap(),
        BigInt::from(1)
    );
}

#[test]
fn mobius_recursion_sums_to_delta() {
    for (spec, bound) in all_specs() {
        let p = build(&spec).unwrap();
        let elems = p.frontier(bound.min(6)).unwrap();
        for x in &elems {
            for y in &elems {
                if !p.leq(x, y).unwrap() {
                    continue;
                }
                let mut acc = BigInt::zero();
                for z in p.interval_elements(x, y).unwrap() {
                    acc += p.mobius(x, &z).unwrap();
                }
                let expected = if x == y { BigInt::from(1) } else { BigInt::zero() };
                assert_eq!(acc, expected, "{}: recursion at ({x}, {y})", p.name());
            }
        }
    }
}

#[test]
fn memoization_is_transparent() {
    let cached = build(&FamilySpec::Divisibility).unwrap();
    let uncached = build(&FamilySpec::Divisibility).unwrap();
    uncached.set_cache_limit(Some(0));
    for n in 1..=60u64 {
        assert_eq!(
            cached
                .mobius(&ElementKey::Div(1), &ElementKey::Div(n))
                .unwrap(),
            uncached
                .mobius(&ElementKey::Div(1), &ElementKey::Div(n))
                .unwrap()
        );
    }
}

#[test]
fn zeta_transform_agrees_with_down_set_summation() {
    for (spec, bound) in all_specs() {
        let p = build(&spec).unwrap();
        let frontier = p.frontier(bound.min(5)).unwrap();
        let mut rng = SplitMix64::new(17);
        let f = random_supported(&mut rng, &frontier, 4, 3);
        for x in &frontier {
            let via_support = p.zeta_transform(&f, x).unwrap();
            let mut via_down_set = Rational::zero();
            for z in p.down_set(x).unwrap() {
                via_down_set += f.get(&z);
            }
            assert_eq!(via_support, via_down_set, "{} at {x}", p.name());
        }
    }
}

fn pseudo_rule(salt: u64) -> impl Fn(&ElementKey, &ElementKey) -> Rational {
    move |x: &ElementKey, y: &ElementKey| {
        let mut h = DefaultHasher::new();
        (x.to_string(), y.to_string(), salt).hash(&mut h);
        rat((h.finish() % 11) as i64 - 5)
    }
}

#[test]
fn convolution_identities_and_associativity() {
    let p = build(&FamilySpec::Divisibility).unwrap();
    let frontier = p.frontier(24).unwrap();
    let zeta_zeta = p
        .convolve_at(
            &PairFn::Zeta,
            &PairFn::Zeta,
            &ElementKey::Div(1),
            &ElementKey::Div(12),
        )
        .unwrap();
    assert_eq!(zeta_zeta, rat(6)); // divisor count of 12

    let f_rule = pseudo_rule(1);
    let g_rule = pseudo_rule(2);
    let h_rule = pseudo_rule(3);
    for x in &frontier {
        for y in &frontier {
            if !p.leq(x, y).unwrap() {
                assert!(p
                    .convolve_at(&PairFn::Zeta, &PairFn::Mobius, x, y)
                    .unwrap()
                    .is_zero());
                continue;
            }
            // zeta * mobius = delta
            let zm = p.convolve_at(&PairFn::Zeta, &PairFn::Mobius, x, y).unwrap();
            assert_eq!(zm, if x == y { rat(1) } else { rat(0) });
            // delta is a left unit on arbitrary rules
            let df = p
                .convolve_at(&PairFn::Delta, &PairFn::Rule(&f_rule), x, y)
                .unwrap();
            assert_eq!(df, f_rule(x, y));
            // associativity on sampled triples of rules
            let fg = |a: &ElementKey, b: &ElementKey| {
                p.convolve_at(&PairFn::Rule(&f_rule), &PairFn::Rule(&g_rule), a, b)
                    .unwrap()
            };
            let gh = |a: &ElementKey, b: &ElementKey| {
                p.convolve_at(&PairFn::Rule(&g_rule), &PairFn::Rule(&h_rule), a, b)
                    .unwrap()
            };
            let left = p
                .convolve_at(&PairFn::Rule(&fg), &PairFn::Rule(&h_rule), x, y)
                .unwrap();
            let right = p
                .convolve_at(&PairFn::Rule(&f_rule), &PairFn::Rule(&gh), x, y)
                .unwrap();
            assert_eq!(left, right, "associativity at ({x}, {y})");
        }
    }
}

#[test]
fn lifted_functions_convolve_like_their_transform() {
    let p = build(&FamilySpec::Divisibility).unwrap();
    let mut f = SupportedFunction::new();
    f.set(ElementKey::Div(2), rat(1));
    f.set(ElementKey::Div(3), rat(1));
    // (zeta * lifted-f)(bottom, x) = sum over down-set = zeta transform
    let bottom = p.bottom().unwrap();
    for n in 1..=30u64 {
        let x = ElementKey::Div(n);
        let conv = p
            .convolve_at(&PairFn::Lifted(&f), &PairFn::Zeta, &bottom, &x)
            .unwrap();
        assert_eq!(conv, p.zeta_transform(&f, &x).unwrap());
    }
    assert_eq!(
        p.zeta_transform(&f, &ElementKey::Div(6)).unwrap(),
        rat(2)
    );
}

#[test]
fn support_on_frontier_examples() {
    let p = build(&FamilySpec::Divisibility).unwrap();
    let zero = p.support_on_frontier(|_| Ok(rat(0)), 20).unwrap();
    assert!(zero.is_empty());
    let mut f = SupportedFunction::new();
    f.set(ElementKey::Div(2), rat(1));
    let evens = p
        .support_on_frontier(|x| p.zeta_transform(&f, x), 20)
        .unwrap();
    assert_eq!(evens.len(), 10);
    assert!(evens.iter().all(|k| matches!(k, ElementKey::Div(n) if n % 2 == 0)));
}

#[test]
fn witness_counts_are_monotone_in_the_bound() {
    let p = build(&FamilySpec::Divisibility).unwrap();
    let s = [ElementKey::Div(2), ElementKey::Div(5)];
    let mut last = [0u64; 2];
    for n in [10, 20, 40, 80] {
        let report = hk_witnesses(&p, &s, n).unwrap();
        for (i, cand) in report.per_candidate.iter().enumerate() {
            assert!(cand.count >= last[i]);
            last[i] = cand.count;
        }
    }
}

#[test]
fn divisor_copy_with_bottom_is_isomorphic_to_divisibility() {
    let p = build_counterexample_p();
    let embed = |n: u64| {
        if n == 1 {
            ElementKey::parse("P:u").unwrap()
        } else {
            ElementKey::parse(&format!("P:d0:{n}")).unwrap()
        }
    };
    for a in 1..=30u64 {
        for b in 1..=30u64 {
            assert_eq!(
                p.leq(&embed(a), &embed(b)).unwrap(),
                b % a == 0,
                "iso fails at ({a}, {b})"
            );
        }
    }
}

#[test]
fn pk_polynomial_edge_values() {
    for q in [2u64, 3, 4] {
        for k in 1..=5u64 {
            let p = pk_polynomial(k, q);
            assert_eq!(p.degree(), k as usize);
            // P_k(q^0) = C(0, k)_q = 0 and P_k(q^k) = C(k, k)_q = 1
            assert!(p.evaluate(&rat(1)).is_zero());
            let qk = incidence_core::rational::rat_big(BigInt::from(q).pow(k as u32));
            assert_eq!(p.evaluate(&qk), rat(1));
        }
    }
}

#[test]
fn q_one_pascal_recurrence_degenerates_to_binomial() {
    // C(n,k) via the q-Pascal recurrence with the bracket collapsed at q = 1
    fn pascal_q1(n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        if k == 0 {
            return BigInt::from(1);
        }
        if n == 0 {
            return BigInt::zero();
        }
        pascal_q1(n - 1, k - 1) + pascal_q1(n - 1, k)
    }
    for n in 0..=10u64 {
        for k in 0..=n {
            assert_eq!(incidence_core::reduced::binomial(n, k), pascal_q1(n, k));
        }
    }
}

#[test]
fn reduced_convolution_matches_interval_convolution() {
    let cases = [
        (CoefficientFamily::Dirichlet, FamilySpec::Divisibility, 24u32),
        (CoefficientFamily::LinearOrder, FamilySpec::LinearOrder, 12),
        (CoefficientFamily::Binomial, FamilySpec::FiniteSubsets, 5),
        (
            CoefficientFamily::QBinomial { q: 2 },
            FamilySpec::Subspaces { q: 2 },
            3,
        ),
    ];
    let mut rng = SplitMix64::new(99);
    for (fam, spec, bound) in cases {
        let p = build(&spec).unwrap();
        let frontier = p.frontier(bound).unwrap();
        let mut f = ReducedSequence::new();
        let mut g = ReducedSequence::new();
        for n in 1..=6u64 {
            f.set(n, rat(rng.nonzero(3)));
            g.set(n, rat(rng.nonzero(3)));
        }
        let f_rule = |x: &ElementKey, y: &ElementKey| f.get(interval_type(&fam, x, y).unwrap());
        let g_rule = |x: &ElementKey, y: &ElementKey| g.get(interval_type(&fam, x, y).unwrap());
        for x in &frontier {
            for y in &frontier {
                if !p.leq(x, y).unwrap() {
                    continue;
                }
                let n = interval_type(&fam, x, y).unwrap();
                let via_poset = p
                    .convolve_at(&PairFn::Rule(&f_rule), &PairFn::Rule(&g_rule), x, y)
                    .unwrap();
                let via_reduced = reduced_convolve(&fam, &f, &g, n);
                assert_eq!(via_poset, via_reduced, "{} at type {n}", fam.name());
            }
        }
    }
}

fn poset_under_test(ix: u8) -> (FamilySpec, u32) {
    let specs = all_specs();
    specs[ix as usize % specs.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inversion_round_trips_everywhere(ix in 0u8..9, seed in any::<u64>()) {
        let (spec, bound) = poset_under_test(ix);
        let bound = bound.min(12);
        let p = build(&spec).unwrap();
        let frontier = p.frontier(bound).unwrap();
        prop_assume!(!frontier.is_empty());
        let mut rng = SplitMix64::new(seed);
        let f = random_supported(&mut rng, &frontier, 4, 3);
        let mut g = SupportedFunction::new();
        for x in &frontier {
            g.set(x.clone(), p.zeta_transform(&f, x).unwrap());
        }
        for x in &frontier {
            prop_assert_eq!(p.mobius_invert(&g, x).unwrap(), f.get(x));
        }
    }

    #[test]
    fn reduced_zeta_times_mobius_is_delta(fam_ix in 0u8..7, bound in 1u64..=25) {
        let fam = match fam_ix {
            0 => CoefficientFamily::Dirichlet,
            1 => CoefficientFamily::LinearOrder,
            2 => CoefficientFamily::Binomial,
            3 => CoefficientFamily::QBinomial { q: 2 },
            4 => CoefficientFamily::QBinomial { q: 3 },
            5 => CoefficientFamily::QBinomial { q: 4 },
            _ => CoefficientFamily::QBinomial { q: 5 },
        };
        let mu = reduced_mobius(&fam, bound);
        let zeta = ReducedSequence::zeta(bound);
        for n in 1..=bound {
            let expected = if n == 1 { rat(1) } else { rat(0) };
            prop_assert_eq!(reduced_convolve(&fam, &zeta, &mu, n), expected);
        }
    }

    #[test]
    fn key_text_round_trips(n in 1u64..10_000, a in 1u64..50, d in 1u64..50) {
        for key in [
            ElementKey::Div(n),
            ElementKey::Anti(n),
            ElementKey::Lin(n),
            ElementKey::set(vec![a, d, a + d]),
            ElementKey::prod(ElementKey::Anti(a), ElementKey::Div(d)),
            ElementKey::parse(&format!("P:prod:({a},{d})")).unwrap(),
            ElementKey::parse(&format!("Q:qb:({a},{d})")).unwrap(),
        ] {
            let reparsed = ElementKey::parse(&key.to_string()).unwrap();
            prop_assert_eq!(reparsed, key);
        }
    }

    #[test]
    fn qbinomial_counts_frontier_dimensions(n in 0u64..4, q_ix in 0usize..2) {
        let q = [2u64, 3][q_ix];
        let p = build(&FamilySpec::Subspaces { q }).unwrap();
        let frontier = p.frontier(n as u32).unwrap();
        for k in 0..=n {
            let count = frontier
                .iter()
                .filter(|e| matches!(e, ElementKey::Sub(s) if s.dim() == k as usize))
                .count();
            prop_assert_eq!(BigInt::from(count), qbinomial(n, k, q));
        }
    }
}

#[test]
fn inverting_the_bottom_indicator_recovers_classical_mobius() {
    // g = delta at the minimum, so f(x) = mu(bottom, x); frozen from the
    // factorization: 1, -1, -1, 0, -1, 1 and mu(1,12) = 0
    let p = build(&FamilySpec::Divisibility).unwrap();
    let mut g = SupportedFunction::new();
    g.set(ElementKey::Div(1), rat(1));
    let expected = [(1, 1), (2, -1), (3, -1), (4, 0), (5, -1), (6, 1), (12, 0), (30, -1)];
    for (n, value) in expected {
        assert_eq!(
            p.mobius_invert(&g, &ElementKey::Div(n)).unwrap(),
            rat(value),
            "at {n}"
        );
    }
}

#[test]
fn frontier_policy_matches_the_family_contract() {
    use incidence_core::zoo::frontier_policy;
    let div: Vec<ElementKey> = (1..=6).map(ElementKey::Div).collect();
    assert_eq!(frontier_policy(&FamilySpec::Divisibility, 6).unwrap(), div);
    assert_eq!(frontier_policy(&FamilySpec::FiniteSubsets, 2).unwrap().len(), 4);
    assert_eq!(
        frontier_policy(&FamilySpec::Subspaces { q: 2 }, 2).unwrap().len(),
        5
    );
}

#[test]
fn poset_views_are_safe_for_concurrent_readers() {
    let p = build(&FamilySpec::Divisibility).unwrap();
    let reference: Vec<BigInt> = (1..=120u64)
        .map(|n| p.mobius(&ElementKey::Div(1), &ElementKey::Div(n)).unwrap())
        .collect();
    let shared = build(&FamilySpec::Divisibility).unwrap();
    std::thread::scope(|scope| {
        for _ in 0..4 {
            let view = shared.clone();
            let reference = &reference;
            scope.spawn(move || {
                for n in 1..=120u64 {
                    let got = view.mobius(&ElementKey::Div(1), &ElementKey::Div(n)).unwrap();
                    assert_eq!(got, reference[(n - 1) as usize]);
                }
            });
        }
    });
}

#[test]
fn s3_relabeling_preserves_one_experiment() {
    use incidence_core::checkers::uncertainty_experiment;
    use incidence_core::zoo::{build_counterexample_q, permute_letters};
    use incidence_core::Letter;

    let p = build_counterexample_q();
    let perm = [Letter::C, Letter::A, Letter::B];
    let mut f = SupportedFunction::new();
    f.set(ElementKey::parse("Q:a").unwrap(), rat(2));
    f.set(ElementKey::parse("Q:qb:(1,2)").unwrap(), rat(-1));
    let mut pf = SupportedFunction::new();
    for (k, v) in f.iter() {
        pf.set(permute_letters(k, perm), v.clone());
    }
    let ladder = [6, 12, 24];
    let base = uncertainty_experiment(&p, &f, &ladder).unwrap();
    let relabeled = uncertainty_experiment(&p, &pf, &ladder).unwrap();
    assert_eq!(base.g_support_counts, relabeled.g_support_counts);
    assert_eq!(base.verdict, relabeled.verdict);
}
