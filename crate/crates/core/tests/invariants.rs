use divtop::bitset::BitSet;
use divtop::symbolic::{divides_symbolic, refute_finite_subcover};
use divtop::*;
use proptest::prelude::*;

fn small_module() -> impl Strategy<Value = FiniteModule> {
    prop::collection::vec(2u64..=12, 1..=3)
        .prop_filter("order at most 256", |v| v.iter().product::<u64>() <= 256)
        .prop_map(|v| FiniteModule::from_moduli(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closures_are_sets_of_multiples(m in small_module()) {
        let snap = build_topology(&m);
        for i in 0..snap.len() {
            let point = BitSet::from_indices(snap.len(), [i]);
            let via_opens = snap.closure_via_opens(&point);
            prop_assert_eq!(&via_opens, snap.closure_of_class(i));
            prop_assert!(snap.is_closed(&via_opens));
            prop_assert!(snap.basic_open(i).contains(i));
        }
    }

    #[test]
    fn basic_opens_are_closed_under_intersection(m in small_module()) {
        let snap = build_topology(&m);
        for i in 0..snap.len() {
            for j in 0..snap.len() {
                let meet = snap.basic_open(i).intersection(snap.basic_open(j));
                prop_assert!(snap.is_open(&meet));
            }
        }
    }

    #[test]
    fn separation_ladder(m in small_module()) {
        let snap = build_topology(&m);
        let holds = |a| check_separation(&snap, a).unwrap().holds;
        prop_assert!(holds(Axiom::T0));
        let t1 = holds(Axiom::T1);
        prop_assert_eq!(t1, is_pseudo_simple(&m));
        prop_assert_eq!(t1, holds(Axiom::Discrete));
        prop_assert_eq!(holds(Axiom::T2), satisfies_star(&m));
        prop_assert!(!holds(Axiom::T2) || t1);
    }

    #[test]
    fn failing_verdicts_carry_confirmed_witnesses(m in small_module()) {
        let snap = build_topology(&m);
        for a in [Axiom::T1, Axiom::T2, Axiom::Discrete] {
            let v = check_separation(&snap, a).unwrap();
            if !v.holds {
                prop_assert!(v.witness.is_some());
                prop_assert!(v.confirm(&snap));
            }
        }
    }

    #[test]
    fn cyclic_class_count_is_divisor_count(n in 2u64..=400) {
        let proper = (2..n).filter(|d| n % d == 0).count();
        prop_assert_eq!(build_topology(&FiniteModule::cyclic(n).unwrap()).len(), proper);
    }

    #[test]
    fn integer_refuter_escapes_cover(cover in prop::collection::vec(2u64..=5000, 1..8)) {
        let fam = SymbolicFamily::integers(5000).unwrap();
        let opens: Vec<SymClass> = cover.into_iter().map(SymClass::Int).collect();
        let x = refute_finite_subcover(&fam, &opens).unwrap();
        for c in &opens {
            prop_assert!(!divides_symbolic(&fam, x, *c).unwrap());
        }
    }

    #[test]
    fn rational_refuter_escapes_cover(cover in prop::collection::vec((1u64..=20, 1u64..=20), 1..6)) {
        let fam = SymbolicFamily::rationals(20).unwrap();
        let opens: Vec<SymClass> = cover
            .into_iter()
            .map(|(a, b)| SymClass::frac(a, b).unwrap())
            .collect();
        let x = refute_finite_subcover(&fam, &opens).unwrap();
        for c in &opens {
            prop_assert!(!divides_symbolic(&fam, x, *c).unwrap());
        }
    }
}
