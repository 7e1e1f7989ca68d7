use hypermaps::engine::count_poly;
use hypermaps::exact::ratio;
use hypermaps::oracle::{
    brute_count, brute_count_spec, check_duality, hurwitz_strict, hurwitz_strict_exhaustive,
    mgk_from_hurwitz, HypermapSpec,
};
use hypermaps::Error;

#[test]
fn engine_agrees_with_oracle_on_small_tuples() {
    for (l, b) in [
        (2usize, vec![1u64, 1]),
        (2, vec![2, 2, 2]),
        (3, vec![1, 2, 3]),
        (4, vec![2, 2, 4]),
        (6, vec![6]),
    ] {
        assert_eq!(
            brute_count(l, &b, 12).unwrap(),
            count_poly(l, &b).unwrap().by_genus,
            "l={l} b={b:?}"
        );
    }
}

#[test]
fn genus_filtered_oracle() {
    let spec = HypermapSpec {
        l: 4,
        b: vec![4],
        genus: Some(1),
    };
    let got = brute_count_spec(&spec, 12).unwrap();
    assert_eq!(got.get(&1), Some(&ratio(5, 4)));
    assert!(!got.contains_key(&0));
}

#[test]
fn oracle_cap_is_an_error() {
    assert!(matches!(
        brute_count(3, &[6, 6, 3], 12),
        Err(Error::OracleCap { .. })
    ));
}

#[test]
fn hurwitz_agrees_with_engine() {
    for (l, nu, g) in [
        (3usize, vec![1u64, 2], 0u32),
        (3, vec![3, 3], 1),
        (2, vec![1, 1, 2], 0),
        (4, vec![2, 2, 4], 1),
    ] {
        assert_eq!(
            mgk_from_hurwitz(l, &nu, g).unwrap(),
            count_poly(l, &nu).unwrap().genus(g),
            "l={l} nu={nu:?} g={g}"
        );
    }
    assert_eq!(
        hurwitz_strict(1, &[2, 2], &[4]).unwrap(),
        hurwitz_strict_exhaustive(1, &[2, 2], &[4]).unwrap()
    );
}

#[test]
fn duality_holds_on_small_cases() {
    for (l, b, k, g) in [(2usize, 3u64, 2usize, 0u32), (3, 2, 3, 1), (4, 2, 4, 0)] {
        let rep = check_duality(l, b, k, g, 12).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
