mod common;

use common::{named_samples, q, random_element};
use hlpa_core::hypergraph::samples;
use hlpa_core::props::{check_conditions, is_connected, local_valuation, property_report, Verdict, PROPERTIES};
use hlpa_core::{Hypergraph, LeavittAlgebra};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lv_graphs() -> Vec<Hypergraph> {
    vec![
        samples::two_by_two(),
        samples::leavitt_2_3(),
        Hypergraph::from_parts(
            &["a", "b"],
            &[("x", &["a", "b"], &["b", "a", "a"]), ("y", &["b", "b"], &["a", "b"])],
        )
        .unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn valuation_adds_through_a_vertex(idx in 0..3usize, seed in any::<u64>()) {
        let h = lv_graphs().swap_remove(idx);
        prop_assert!(check_conditions(&h).lv);
        let alg = LeavittAlgebra::new(h.clone(), q());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for v in h.vertex_names() {
            let e = alg.vertex(v).unwrap();
            let x = random_element(&alg, &mut rng, 4, 4).multiply(&e).unwrap();
            let y = e.multiply(&random_element(&alg, &mut rng, 4, 4)).unwrap();
            let xy = x.multiply(&y).unwrap();
            let expected = match (local_valuation(&x), local_valuation(&y)) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            };
            prop_assert_eq!(local_valuation(&xy), expected);
        }
    }
}

#[test]
fn valuation_fails_without_lv() {
    let alg = LeavittAlgebra::new(samples::leavitt_1_2(), q());
    let x = alg.parse("f*[1,1]").unwrap();
    let y = alg.parse("f[1,2]").unwrap();
    assert_eq!((local_valuation(&x), local_valuation(&y)), (Some(1), Some(1)));
    assert_eq!(local_valuation(&x.multiply(&y).unwrap()), None);
}

#[test]
fn conditions_on_samples() {
    let expect = [
        ("two_by_two", (true, true, false, true)),
        ("laurent", (false, false, false, true)),
        ("leavitt_1_2", (false, false, false, false)),
        ("leavitt_2_3", (true, true, true, true)),
        ("point", (true, false, false, true)),
        ("two_cycle", (false, false, false, true)),
    ];
    let all = named_samples();
    for (name, (lv, a, a_prime, b)) in expect {
        let h = &all.iter().find(|(n, _)| *n == name).unwrap().1;
        let c = check_conditions(h);
        assert_eq!((c.lv, c.a, c.a_prime, c.b), (lv, a, a_prime, b), "{name}");
    }
}

#[test]
fn connectivity() {
    assert!(is_connected(&samples::two_by_two()));
    assert!(is_connected(&samples::point()));
    let h = Hypergraph::from_parts(&["a", "b", "c"], &[("x", &["a"], &["b"])]).unwrap();
    assert!(!is_connected(&h));
}

#[test]
fn every_property_is_reported_once() {
    for (name, h) in named_samples() {
        let r = property_report(&h);
        let listed: Vec<&str> = r.entries.iter().map(|e| e.property).collect();
        assert_eq!(listed, PROPERTIES, "{name}");
        assert!(r.entries.iter().all(|e| !e.citation.is_empty()));
    }
}

#[test]
fn domain_classification() {
    // One vertex and every hyperedge balanced or with both sides of size >= 2.
    assert!(matches!(
        property_report(&samples::laurent()).verdict("domain"),
        Some(Verdict::Yes(_))
    ));
    assert!(matches!(
        property_report(&samples::leavitt_2_3()).verdict("domain"),
        Some(Verdict::Yes(_))
    ));
    assert!(matches!(
        property_report(&samples::leavitt_1_2()).verdict("domain"),
        Some(Verdict::No(_))
    ));
    assert!(matches!(
        property_report(&samples::two_cycle()).verdict("domain"),
        Some(Verdict::No(_))
    ));
}

#[test]
fn domain_verdict_agrees_with_products() {
    // Zero divisors among short words exist exactly when the report says "No".
    for (name, h) in named_samples() {
        let alg = LeavittAlgebra::new(h.clone(), q());
        let lg = alg.letter_graph().clone();
        let words: Vec<_> = hlpa_core::basis::enumerate_nod_paths(&h, &lg, 2).collect();
        let mut zero_divisor = false;
        for x in &words {
            for y in &words {
                if alg.word(x).unwrap().multiply(&alg.word(y).unwrap()).unwrap().is_zero() {
                    zero_divisor = true;
                }
            }
        }
        let yes = matches!(property_report(&h).verdict("domain"), Some(Verdict::Yes(_)));
        assert_eq!(yes, !zero_divisor, "{name}");
    }
}
