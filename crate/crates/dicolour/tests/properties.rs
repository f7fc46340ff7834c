use dicolour::exhaustive::{all_digraphs, digraphs_where};
use dicolour::generate::{generate, random_lists, rng, Family, GeneratorSpec};
use dicolour::io::{
    colouring_text, lists_text, parse_colouring, parse_digraph, parse_lists, parse_sequence,
    sequence_json, serialize_digraph,
};
use dicolour_core::dicolouring::{exact_chi, greedy_dicolouring, is_valid};
use dicolour_core::oracle::shortest_sequence;
use dicolour_core::Digraph;
use proptest::prelude::*;

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.3), n * (n - 1)).prop_map(move |mask| {
            let pairs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
            Digraph::from_arcs(n, pairs.zip(mask).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn digraph_text_round_trip(g in digraph(9)) {
        let text = serialize_digraph(&g);
        let back = parse_digraph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_digraph(&back), text);
    }

    #[test]
    fn generation_is_seed_deterministic(f in family(), n in 3usize..12, seed in any::<u64>()) {
        let spec = match f {
            Family::RandomOrientedDmin => GeneratorSpec::new(f, n.max(5), seed).with_delta(2),
            _ => GeneratorSpec::new(f, n, seed),
        };
        let a = generate(&spec).unwrap();
        prop_assert_eq!(&a, &generate(&spec).unwrap());
        match f {
            Family::RandomOrientedDminle1 => prop_assert!(a.is_oriented() && a.delta_min() <= 1),
            Family::RandomOrientedDmin => prop_assert!(a.is_oriented() && a.delta_min() == 2),
            Family::Tournament => prop_assert_eq!(a.arc_count(), n * (n - 1) / 2),
            Family::GadgetOf => prop_assert_eq!(a.order(), 3 * n),
            _ => {}
        }
    }

    #[test]
    fn colouring_and_lists_round_trip(g in digraph(7), extra in 0usize..3, seed in any::<u64>()) {
        let c = greedy_dicolouring(&g);
        let back = parse_colouring(&colouring_text(c.colours()), g.order()).unwrap();
        prop_assert_eq!(back.colours.as_slice(), c.colours());

        let k = g.delta_max() + 1 + extra;
        let lists = random_lists(&g, k, extra, &mut rng(seed)).unwrap();
        prop_assert_eq!(parse_lists(&lists_text(&lists), g.order()).unwrap(), lists);
    }

    #[test]
    fn sequence_json_round_trip(g in digraph(5), seed in any::<u64>()) {
        let k = g.delta_max() + 1;
        let mut r = rng(seed);
        let a = dicolour::generate::random_dicolouring(&g, k, &mut r).unwrap();
        let b = dicolour::generate::random_dicolouring(&g, k, &mut r).unwrap();
        if let Ok(seq) = shortest_sequence(&g, k, &a, &b) {
            let back = parse_sequence(&sequence_json(&seq)).unwrap().into_sequence(Some(k)).unwrap();
            prop_assert_eq!(back, seq);
        }
    }
}

#[test]
fn greedy_exhaustive_small() {
    for n in 1..=4 {
        for g in all_digraphs(n) {
            let c = greedy_dicolouring(&g);
            assert!(is_valid(&g, &c));
            assert!(c.colours_used() <= g.delta_min() + 1);
        }
    }
    // Five vertices, restricted to Δ_min ≥ 1 to keep the run short.
    let five = digraphs_where(5, |g| g.delta_min() >= 1);
    assert!(!five.is_empty());
    for g in five {
        let c = greedy_dicolouring(&g);
        assert!(is_valid(&g, &c));
        assert!(c.colours_used() <= g.delta_min() + 1);
    }
}

#[test]
fn chi_at_most_dmax_plus_one_exhaustive() {
    for n in 1..=4 {
        for g in all_digraphs(n) {
            let (chi, _) = exact_chi(&g).unwrap();
            assert!(chi <= g.delta_min() + 1);
            assert!(chi <= g.delta_max() + 1);
        }
    }
}
