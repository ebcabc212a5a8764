//! Worked examples with known answers.

use divtop::symbolic::{
    compactness_verdict_symbolic, divides_symbolic, integer_noetherian_chain, refute_finite_subcover,
    t5_refutation_witness_integers, window_snapshot,
};
use divtop::*;

fn z(n: u64) -> FiniteModule {
    FiniteModule::cyclic(n).unwrap()
}

fn el(m: &FiniteModule, c: &[i64]) -> Element {
    m.element(c).unwrap()
}

fn open_labels(snap: &TopologySnapshot, label: &str) -> Vec<String> {
    let i = snap.find(label).unwrap();
    snap.labels(snap.basic_open(i).iter())
}

#[test]
fn annihilators_of_small_cyclic_groups() {
    let z6 = z(6);
    assert_eq!(annihilator(&z6, &el(&z6, &[2])).to_string(), "3Z");
    assert_eq!(annihilator(&z6, &el(&z6, &[4])).to_string(), "3Z");
    let z12 = z(12);
    assert_eq!(annihilator(&z12, &el(&z12, &[3])).to_string(), "4Z");
}

#[test]
fn pseudo_simple_examples() {
    assert!(is_pseudo_simple(&z(6)));
    assert!(!is_pseudo_simple(&z(12)));
    assert!(is_pseudo_simple(&FiniteModule::vector_space(2, 2).unwrap()));
    for (p, q) in [(2, 3), (3, 5), (5, 7), (2, 11)] {
        assert!(is_pseudo_simple(&z(p * q)));
        assert!(satisfies_star(&z(p * q)));
    }
}

#[test]
fn star_condition_examples() {
    for (p, d) in [(2, 1), (2, 3), (3, 2), (5, 2)] {
        assert!(satisfies_star(&FiniteModule::vector_space(p, d).unwrap()));
    }
    for p in [2, 3, 5, 7] {
        assert!(satisfies_star(&z(p)));
    }
    let z12 = z(12);
    let (m1, m2, x) = star_witness(&z12).unwrap();
    let rx = cyclic_submodule(&z12, &x);
    assert!(rx.contains(&z12, &m1) && rx.contains(&z12, &m2));
    assert_ne!(rx.order() as u64, 12);
}

#[test]
fn irreducibles_of_z6_and_prime_powers() {
    let z6 = z(6);
    for v in [2, 3, 4] {
        assert!(is_irreducible_on_sharp(&z6, &el(&z6, &[v])).unwrap(), "{v}");
    }
    let z12 = z(12);
    assert!(!is_irreducible_on_sharp(&z12, &el(&z12, &[6])).unwrap());
    for (p, a) in [(2u64, 3u32), (2, 4), (3, 3)] {
        let m = z(p.pow(a));
        let p2 = el(&m, &[(p * p) as i64]);
        assert!(!is_irreducible_on_sharp(&m, &p2).unwrap(), "{p}^{a}");
    }
}

#[test]
fn z6_is_discrete_and_z12_is_not_t1() {
    let s6 = build_topology(&z(6));
    assert_eq!(s6.labels(0..s6.len()), ["[2]", "[3]"]);
    assert_eq!(open_labels(&s6, "[2]"), ["[2]"]);
    assert_eq!(open_labels(&s6, "[3]"), ["[3]"]);
    assert!(check_separation(&s6, Axiom::T2).unwrap().holds);

    let s12 = build_topology(&z(12));
    assert_eq!(s12.labels(0..s12.len()), ["[2]", "[3]", "[4]", "[6]"]);
    assert_eq!(open_labels(&s12, "[4]"), ["[2]", "[4]"]);
    assert_eq!(open_labels(&s12, "[6]"), ["[2]", "[3]", "[6]"]);
    let t1 = check_separation(&s12, Axiom::T1).unwrap();
    assert!(!t1.holds);
    assert_eq!(t1.describe_witness(&s12).as_deref(), Some("[2],[4]"));
    assert_eq!(s12.labels(s12.isolated_points()), ["[2]", "[3]"]);
}

#[test]
fn prime_power_chains() {
    for (p, a) in [(2u64, 3u32), (3, 3), (2, 5), (5, 3)] {
        let m = z(p.pow(a));
        let snap = build_topology(&m);
        let pl = format!("[{p}]");
        assert_eq!(snap.labels(snap.isolated_points()), [pl.as_str()]);
        assert!(!check_separation(&snap, Axiom::T1).unwrap().holds);
        let i = snap.find(&pl).unwrap();
        assert_eq!(snap.closure_of_class(i).count(), snap.len());
        assert!(check_connectivity(&snap).ultraconnected.holds);
    }
    for p in [2u64, 3, 5, 7] {
        assert_eq!(build_topology(&z(p * p)).len(), 1);
    }
}

#[test]
fn connectivity_examples() {
    let c6 = check_connectivity(&build_topology(&z(6)));
    assert!(!c6.connected.holds && !c6.ultraconnected.holds);
    let c12 = check_connectivity(&build_topology(&z(12)));
    assert!(c12.connected.holds);
}

#[test]
fn compactness_of_composite_cyclic_groups() {
    for n in [4u64, 6, 8, 9, 12, 30, 36, 60, 100] {
        let m = z(n);
        let snap = build_topology(&m);
        let r = compactness_verdict(&m, &snap);
        assert!(r.verdict.holds && r.counts_agree && r.minimal_cover_covers, "{n}");
    }
    let m = z(12);
    assert_eq!(compactness_verdict(&m, &build_topology(&m)).simple_submodule_count, 2);
}

#[test]
fn vector_spaces_have_singleton_opens() {
    for (p, d) in [(2, 2), (2, 3), (3, 2), (7, 2)] {
        let snap = build_topology(&FiniteModule::vector_space(p, d).unwrap());
        assert!((0..snap.len()).all(|i| snap.basic_open(i).count() == 1));
        assert!(noetherian_finite(&snap).holds);
    }
}

#[test]
fn symbolic_divisibility() {
    let e = SymbolicFamily::prufer(3, 6).unwrap();
    assert!(divides_symbolic(&e, SymClass::Level(3), SymClass::Level(1)).unwrap());
    let q = SymbolicFamily::rationals(10).unwrap();
    assert!(divides_symbolic(&q, SymClass::Frac(1, 2), SymClass::Frac(3, 2)).unwrap());
    assert!(!divides_symbolic(&q, SymClass::Frac(1, 2), SymClass::Frac(1, 3)).unwrap());
}

#[test]
fn compactness_of_symbolic_families() {
    let e = compactness_verdict_symbolic(&SymbolicFamily::prufer(2, 8).unwrap()).unwrap();
    assert!(e.verdict.holds && e.simple_submodule_count == 1);
    let q = compactness_verdict_symbolic(&SymbolicFamily::rationals(10).unwrap()).unwrap();
    assert!(!q.verdict.holds && q.simple_submodule_count == 0 && !q.agrees_with_criterion);
    let zz = compactness_verdict_symbolic(&SymbolicFamily::integers(100).unwrap()).unwrap();
    assert!(!zz.verdict.holds && zz.simple_submodule_count == 0);
}

#[test]
fn refuters_lie_outside_the_cover() {
    let zz = SymbolicFamily::integers(100).unwrap();
    let opens = [SymClass::Int(6), SymClass::Int(10), SymClass::Int(15)];
    assert_eq!(refute_finite_subcover(&zz, &opens).unwrap(), SymClass::Int(17));

    let q = SymbolicFamily::rationals(10).unwrap();
    let opens = [SymClass::Frac(1, 2), SymClass::Frac(2, 3)];
    let x = refute_finite_subcover(&q, &opens).unwrap();
    for c in opens {
        assert!(!divides_symbolic(&q, x, c).unwrap(), "{x} lies in U_{c}");
    }
}

#[test]
fn windows_of_symbolic_families() {
    let s = window_snapshot(&SymbolicFamily::integers(12).unwrap()).unwrap();
    assert_eq!(s.len(), 11);
    assert_eq!(open_labels(&s, "[12]"), ["[2]", "[3]", "[4]", "[6]", "[12]"]);

    let s = window_snapshot(&SymbolicFamily::prufer(2, 4).unwrap()).unwrap();
    assert_eq!(s.len(), 4);
    assert!(check_nested(&s).holds);

    let s = window_snapshot(&SymbolicFamily::rationals(3).unwrap()).unwrap();
    let mut labels = s.labels(0..s.len());
    labels.sort();
    assert_eq!(labels, ["[1/1]", "[1/2]", "[1/3]", "[2/1]", "[2/3]", "[3/1]", "[3/2]"]);
}

#[test]
fn t5_witnesses_in_the_integers() {
    let w = t5_refutation_witness_integers(2, 3, 5, 100).unwrap();
    assert_eq!((w.first, w.second, w.common), (10, 15, 5));
    let w = t5_refutation_witness_integers(2, 3, 2, 100).unwrap();
    assert_eq!((w.first, w.second, w.common), (4, 6, 2));
    assert!(t5_refutation_witness_integers(2, 4, 5, 100).is_err());
}

#[test]
fn noetherian_chain_in_the_integers() {
    let c = integer_noetherian_chain(3, 5).unwrap();
    assert_eq!(c.generators, [3, 6, 12, 24, 48, 96]);
    assert!(c.open_sizes.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn dot_edges_of_z12() {
    let s = build_topology(&z(12));
    let mut edges: Vec<(String, String)> = hasse_edges(&s).into_iter().map(|(a, b)| (s.label(a), s.label(b))).collect();
    edges.sort();
    let expect = [("[2]", "[4]"), ("[2]", "[6]"), ("[3]", "[6]")];
    assert_eq!(edges, expect.map(|(a, b)| (a.to_string(), b.to_string())));
}
