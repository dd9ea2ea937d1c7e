use num_bigint::BigInt;
use proptest::prelude::*;

use skewband_core::apex::{build_line_graph, eta_of, nullity_closed_form};
use skewband_core::band::{build_integer_matrix, build_poly_matrix};
use skewband_core::graph::{
    build_edges, class_length, classify_edge, contiguous_translate_base, cycle_count, decompose,
    nullity_by_cycles, period, translate, GraphSpec,
};
use skewband_core::identities::check_tuple;
use skewband_core::rank::{nullity_fraction_free, nullity_mod_p, smallest_admissible_prime};
use skewband_core::BandMatrixSpec;

fn n_of(n: i64, k: u64) -> u64 {
    cycle_count(&GraphSpec::from_i64(n, k).unwrap())
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn periodic_and_bounded(k in 1u64..200, n in -100_000i64..100_000) {
        let here = n_of(n, k);
        prop_assert!(here <= k);
        prop_assert_eq!(here, n_of(n + period(k) as i64, k));
    }

    #[test]
    fn step_by_exactly_one(k in 1u64..200, n in -100_000i64..100_000) {
        let d = n_of(n + 1, k) as i64 - n_of(n, k) as i64;
        prop_assert_eq!(d.abs(), 1);
    }

    #[test]
    fn mirror_symmetry(k in 1u64..200, n in -100_000i64..100_000) {
        let kk = k as i64;
        prop_assert_eq!(n_of(n, k), n_of(kk * kk - kk - n, k));
    }

    #[test]
    fn cycles_are_contiguous_translates(k in 1u64..120, n in 0i64..20_000) {
        let d = decompose(&GraphSpec::from_i64(n, k).unwrap());
        if let Some(first) = d.cycles.first() {
            prop_assert!(d.cycles.iter().all(|c| c.len() == first.len()));
            let base = contiguous_translate_base(&d);
            prop_assert!(base.is_some());
            let c0 = &d.cycles[base.unwrap()];
            for t in 0..d.cycles.len() as u64 {
                let mut shifted = translate(c0, t, k);
                let min = shifted.iter().enumerate().min_by_key(|p| p.1).unwrap().0;
                shifted.rotate_left(min);
                prop_assert!(d.cycles.contains(&shifted));
            }
        }
    }

    #[test]
    fn edge_lengths_split_into_two_classes(k in 1u64..150, n in 0i64..30_000) {
        let spec = GraphSpec::from_i64(n, k).unwrap();
        for e in build_edges(&spec) {
            let c = classify_edge(&e, &spec);
            prop_assert_eq!(c.length, (e.to + k + 1 - e.from) % (k + 1));
            prop_assert_eq!(c.length, class_length(c.class, &spec));
        }
    }

    #[test]
    fn counting_identities(q in 1u64..60, m_seed: u64, j_seed: u64, y_seed: u64) {
        let big_m = 1 + m_seed % q;
        let j = 1 + j_seed % q;
        let y = 1 + y_seed % q;
        prop_assert_eq!(check_tuple(big_m, j, q, y), Ok(()));
    }

    #[test]
    fn huge_n_reduces(k in 1u64..500, digits in "[1-9][0-9]{30,80}") {
        let n: BigInt = digits.parse().unwrap();
        let r = &n % BigInt::from(period(k));
        prop_assert_eq!(
            nullity_by_cycles(&n, k).unwrap().nullity,
            nullity_by_cycles(&r, k).unwrap().nullity
        );
        prop_assert_eq!(
            nullity_closed_form(&n, k).unwrap().nullity,
            nullity_by_cycles(&n, k).unwrap().nullity
        );
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn rank_routes_match_graph(k in 1u64..9, n in 1u64..80) {
        let m = build_integer_matrix(BandMatrixSpec::new(n, k).unwrap()).unwrap();
        let p = smallest_admissible_prime(k).unwrap();
        let a = nullity_mod_p(&m, &p);
        let b = nullity_fraction_free(&m);
        let g = n_of(n as i64, k) as usize;
        prop_assert_eq!(a.nullity, g);
        prop_assert_eq!(b.nullity, g);
        prop_assert_eq!(a.rank % 2, 0);
        prop_assert_eq!(a.nullity % 2, (n % 2) as usize);
    }

    #[test]
    fn matrices_are_skew_toeplitz(k in 1u64..12, n in 1u64..30) {
        let spec = BandMatrixSpec::new(n, k).unwrap();
        let m = build_integer_matrix(spec).unwrap();
        let pm = build_poly_matrix(spec).unwrap();
        prop_assert!(m.is_skew_symmetric());
        prop_assert!(pm.is_skew_symmetric());
        prop_assert_eq!(&pm.eval(&BigInt::from(0)), &m);
        let n = n as usize;
        for i in 1..n {
            for j in 1..n {
                prop_assert_eq!(m.get(i, j), m.get(i + 1, j + 1));
            }
        }
    }
}

#[test]
fn apexes_are_peaks_of_the_graph_method() {
    for k in 1..=25u64 {
        let lg = build_line_graph(k).unwrap();
        for a in lg.apexes() {
            assert_eq!(n_of(a.eta as i64, k), a.height, "k={k} eta={}", a.eta);
            assert_eq!(n_of(a.eta as i64 - 1, k) + 1, a.height);
            assert_eq!(n_of(a.eta as i64 + 1, k) + 1, a.height);
        }
    }
}

#[test]
fn eta_rejects_bad_pairs() {
    assert!(eta_of(4, 2, 10).is_err());
    assert!(eta_of(11, 1, 10).is_err());
    assert!(eta_of(3, 4, 10).is_err());
    assert!(eta_of(3, 0, 10).is_err());
}
