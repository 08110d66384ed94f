use proptest::prelude::*;
use stochastic_hull::complexity::{face_prob, membership_prob_2d, s_statistics_collect};
use stochastic_hull::geom::{lex_less, prec_anchor};
use stochastic_hull::{Point, StochasticDataset};

fn dataset(d: usize, max_n: usize) -> impl Strategy<Value = StochasticDataset> {
    prop::collection::vec((prop::collection::vec(-10.0..10.0f64, d), 0.01..=1.0f64), 1..max_n).prop_map(
        move |rows| {
            let (pts, probs): (Vec<Vec<f64>>, Vec<f64>) = rows.into_iter().unzip();
            StochasticDataset::from_rows(pts, probs).unwrap()
        },
    )
}

fn point(d: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(-10.0..10.0f64, d).prop_map(|c| Point::new(c).unwrap())
}

proptest! {
    #[test]
    fn json_round_trip(ds in dataset(3, 12)) {
        let back = StochasticDataset::from_json(&ds.to_json()).unwrap();
        prop_assert_eq!(back, ds);
    }

    #[test]
    fn lex_order_is_strict_and_total(a in point(3), b in point(3)) {
        let (ab, ba) = (lex_less(&a, &b).unwrap(), lex_less(&b, &a).unwrap());
        prop_assert!(!(ab && ba));
        prop_assert_eq!(ab || ba, a != b);
    }

    #[test]
    fn anchor_order_is_antisymmetric(a in point(2), b in point(2), o in point(2)) {
        prop_assume!(a != b);
        prop_assert!(prec_anchor(&a, &b, &o).unwrap() != prec_anchor(&b, &a, &o).unwrap());
    }

    #[test]
    fn probabilities_stay_in_range(ds in dataset(2, 9), q in point(2)) {
        if let Ok(m) = membership_prob_2d(&ds, &q) {
            prop_assert!((0.0..=1.0).contains(&m));
        }
        for v in 0..ds.len() {
            if let Ok(f) = face_prob(&ds, &[v]) {
                prop_assert!((-1e-15..=ds.prob(v) + 1e-15).contains(&f));
            }
        }
    }

    #[test]
    fn side_products_split_the_complement(ds in dataset(3, 9)) {
        if let Ok(stats) = s_statistics_collect(&ds) {
            for s in stats {
                let off: f64 = (0..ds.len()).filter(|i| !s.on_plane.contains(i)).map(|i| 1.0 - ds.prob(i)).product();
                prop_assert!((s.p_pos * s.p_neg - off).abs() < 1e-12);
            }
        }
    }
}
