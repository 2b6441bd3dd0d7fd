use std::collections::BTreeSet;

use coxnf::{
    parse_group_spec, CoxeterMatrix, CoxeterSystem, GraphGroup, Independence, InverseMonoid, Letter, Oracle,
    RightAngledCoxeter, Step, Word,
};
use proptest::prelude::*;

fn matrix(n: usize, entries: &[(usize, usize, u32)]) -> CoxeterMatrix {
    let mut m = CoxeterMatrix::free(n);
    for &(a, b, v) in entries {
        m.set(a, b, v);
    }
    m
}

fn all_words(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..n).map(move |a| {
                    let mut u = w.clone();
                    u.push(a);
                    u
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn doubled(w: &[usize]) -> Word {
    Word::new(w.iter().map(|&s| Letter::from_doubled_index(s)).collect())
}

#[test]
fn named_groups_match_tits_closure() {
    let oracle = Oracle::default();
    let groups = [
        ("A3", matrix(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 2)])),
        ("B3", matrix(3, &[(0, 1, 4), (1, 2, 3), (0, 2, 2)])),
        ("affine A2", matrix(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)])),
        ("hyperbolic", matrix(3, &[(0, 1, 0), (1, 2, 3), (0, 2, 4)])),
        ("I2(5)", matrix(2, &[(0, 1, 5)])),
    ];
    for (name, m) in groups {
        let system = CoxeterSystem::new(m.clone());
        for w in all_words(m.size(), 6) {
            let geodesics = oracle.tits_closure(&m, &w).unwrap();
            let least = geodesics.iter().next().unwrap();
            assert_eq!(system.geodesic_length(&w).unwrap(), least.len(), "{name} {w:?}");
            let alpha: BTreeSet<usize> = least.iter().copied().collect();
            assert_eq!(system.geodesic_alphabet(&w), alpha, "{name} {w:?}");
        }
    }
}

#[test]
fn longest_elements_of_finite_groups() {
    // number of reflections: A3 6, B3 9, I2(5) 5
    for (m, longest) in [
        (matrix(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 2)]), 6),
        (matrix(3, &[(0, 1, 4), (1, 2, 3), (0, 2, 2)]), 9),
        (matrix(2, &[(0, 1, 5)]), 5),
    ] {
        let system = CoxeterSystem::new(m.clone());
        let max = all_words(m.size(), longest + 1)
            .iter()
            .map(|w| system.geodesic_length(w).unwrap())
            .max()
            .unwrap();
        assert_eq!(max, longest);
    }
}

#[test]
fn walker_steps_agree_with_lengths() {
    let m = matrix(3, &[(0, 1, 0), (1, 2, 3), (0, 2, 4)]);
    let system = CoxeterSystem::new(m);
    for w in all_words(3, 5) {
        let mut walker = system.walker();
        for &a in &w {
            walker.push(a).unwrap();
        }
        for a in 0..3 {
            let mut longer = w.clone();
            longer.push(a);
            let expected = if system.geodesic_length(&longer).unwrap() > walker.length() {
                Step::Up
            } else {
                Step::Down
            };
            assert_eq!(walker.classify(a).unwrap(), expected, "{w:?} then {a}");
        }
    }
}

#[test]
fn racg_shortlex_matches_oracle_on_a_square() {
    // the 4-cycle a-b-c-d-a as independence graph
    let oracle = Oracle::new(8, 4);
    let rel = Independence::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
    let group = RightAngledCoxeter::new(rel.clone());
    let m = CoxeterMatrix::right_angled(&rel);
    for w in all_words(4, 6) {
        let expected = oracle.tits_closure(&m, &w).unwrap().into_iter().next().unwrap();
        assert_eq!(group.shortlex(&w), expected, "{w:?}");
    }
}

#[test]
fn graph_shortlex_matches_oracle_on_a_path() {
    let oracle = Oracle::default();
    let rel = Independence::from_pairs(3, &[(0, 1), (1, 2)]);
    let group = GraphGroup::new(&rel);
    for w in all_words(6, 5) {
        let expected = oracle
            .swap_cancel_closure(&rel, &w)
            .unwrap()
            .into_iter()
            .next()
            .unwrap();
        assert_eq!(group.shortlex(&doubled(&w)).doubled_indices(), expected, "{w:?}");
    }
}

#[test]
fn spec_files_drive_the_same_answers() {
    let oracle = Oracle::default();
    let spec = parse_group_spec("kind = coxeter\nletters = s t u\nm s t 4\nm t u 3\n").unwrap();
    let system = CoxeterSystem::from_spec(&spec).unwrap();
    for text in ["s.t.s.t", "t.u.t.u.t.u", "s.u.s.u", "s.t.u.s.t.u"] {
        let w = spec.parse_word(text).unwrap();
        assert_eq!(
            system.geodesic_length(&w.generators()).unwrap(),
            oracle.length(&spec, &w).unwrap(),
            "{text}"
        );
    }
}

fn coxeter_case() -> impl Strategy<Value = (CoxeterMatrix, Vec<usize>)> {
    (2usize..=3)
        .prop_flat_map(|n| {
            let entries = proptest::collection::vec(prop::sample::select(vec![0u32, 2, 3, 4, 5, 6]), 3);
            (Just(n), entries, proptest::collection::vec(0..n, 0..=10))
        })
        .prop_map(|(n, entries, w)| {
            let mut m = CoxeterMatrix::free(n);
            let mut it = entries.into_iter();
            for a in 0..n {
                for b in a + 1..n {
                    m.set(a, b, it.next().unwrap());
                }
            }
            (m, w)
        })
}

fn relation(n: usize) -> impl Strategy<Value = Independence> {
    let count = n * (n - 1) / 2;
    proptest::collection::vec(any::<bool>(), count).prop_map(move |bits| {
        let mut chosen = Vec::new();
        let mut k = 0;
        for a in 0..n {
            for b in a + 1..n {
                if bits[k] {
                    chosen.push((a, b));
                }
                k += 1;
            }
        }
        Independence::from_pairs(n, &chosen)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn length_and_alphabet_match((m, w) in coxeter_case()) {
        let oracle = Oracle::default();
        let system = CoxeterSystem::new(m.clone());
        let geodesics = oracle.tits_closure(&m, &w).unwrap();
        let least = geodesics.iter().next().unwrap();
        prop_assert_eq!(system.geodesic_length(&w).unwrap(), least.len());
        let alpha: BTreeSet<usize> = least.iter().copied().collect();
        prop_assert_eq!(system.geodesic_alphabet(&w), alpha);
    }

    #[test]
    fn equality_matches_oracle((m, u) in coxeter_case(), v in proptest::collection::vec(0usize..2, 0..=6)) {
        let oracle = Oracle::new(16, 3);
        let system = CoxeterSystem::new(m.clone());
        let mut quotient = u.clone();
        quotient.extend(v.iter().rev());
        let ours = system.geodesic_length(&quotient).unwrap() == 0;
        prop_assert_eq!(ours, oracle.tits_closure(&m, &u).unwrap() == oracle.tits_closure(&m, &v).unwrap());
    }

    #[test]
    fn graph_group_equality_matches_oracle(
        rel in relation(3),
        u in proptest::collection::vec(0usize..6, 0..=7),
        v in proptest::collection::vec(0usize..6, 0..=7),
    ) {
        let oracle = Oracle::default();
        let group = GraphGroup::new(&rel);
        let ours = group.shortlex(&doubled(&u)) == group.shortlex(&doubled(&v));
        let expected = oracle.swap_cancel_closure(&rel, &u).unwrap() == oracle.swap_cancel_closure(&rel, &v).unwrap();
        prop_assert_eq!(ours, expected);
    }

    #[test]
    fn fim_equality_refines_group_equality(
        rel in relation(3),
        u in proptest::collection::vec(0usize..6, 0..=6),
        v in proptest::collection::vec(0usize..6, 0..=6),
    ) {
        let oracle = Oracle::default();
        let monoid = InverseMonoid::new(&rel);
        let (u, v) = (doubled(&u), doubled(&v));
        if monoid.equal(&u, &v) {
            prop_assert!(oracle.swap_cancel_closure(&rel, &u.doubled_indices()).unwrap()
                == oracle.swap_cancel_closure(&rel, &v.doubled_indices()).unwrap());
        }
        // u·ū·u = u always holds, and u·ū is idempotent
        let ui = u.formal_inverse();
        prop_assert!(monoid.equal(&u.concat(&ui).concat(&u), &u));
        let e = u.concat(&ui);
        prop_assert!(monoid.equal(&e.concat(&e), &e));
    }
}
