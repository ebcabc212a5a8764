//! Separation axioms by exhaustive search.
//!
//! T0 to T2 and discreteness are pairwise checks. T3 to T5 range over closed
//! sets or arbitrary subsets, which is exponential; the search reduces each
//! axiom to a single test per subset using minimal open neighbourhoods. In an
//! Alexandrov space the smallest open set around `S` is `↓S`, so two sets
//! have disjoint open neighbourhoods exactly when `↓A ∩ ↓B = ∅`, and for T4
//! and T5 it suffices to test the largest admissible partner of each set.

use super::verdict::{Property, PropertyVerdict, Witness};
use super::TopologySnapshot;
use crate::error::{Error, Result};

/// Default cap on the number of classes for the subset searches.
pub const CLASS_BOUND: usize = 16;

/// Hard ceiling for the bitmask search.
const MASK_LIMIT: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    T0,
    T1,
    T2,
    Discrete,
    T3,
    T4,
    T5,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::T0,
        Axiom::T1,
        Axiom::T2,
        Axiom::Discrete,
        Axiom::T3,
        Axiom::T4,
        Axiom::T5,
    ];

    pub fn property(self) -> Property {
        match self {
            Axiom::T0 => Property::T0,
            Axiom::T1 => Property::T1,
            Axiom::T2 => Property::T2,
            Axiom::Discrete => Property::Discrete,
            Axiom::T3 => Property::T3,
            Axiom::T4 => Property::T4,
            Axiom::T5 => Property::T5,
        }
    }

    pub fn from_property(p: Property) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.property() == p)
    }

    fn needs_subsets(self) -> bool {
        matches!(self, Axiom::T3 | Axiom::T4 | Axiom::T5)
    }
}

pub fn check_separation(snap: &TopologySnapshot, axiom: Axiom) -> Result<PropertyVerdict> {
    check_separation_bounded(snap, axiom, CLASS_BOUND)
}

pub fn check_separation_bounded(snap: &TopologySnapshot, axiom: Axiom, bound: usize) -> Result<PropertyVerdict> {
    let n = snap.len();
    if axiom.needs_subsets() && n > bound.min(MASK_LIMIT) {
        return Err(Error::BoundExceeded {
            what: "classes for subset search",
            size: n as u64,
            bound: bound.min(MASK_LIMIT) as u64,
        });
    }
    let mut verdict = match axiom {
        Axiom::T0 => t0(snap),
        Axiom::T1 => t1(snap),
        Axiom::T2 => t2(snap),
        Axiom::Discrete => discrete(snap),
        Axiom::T3 => t3(&Masks::new(snap)),
        Axiom::T4 => t4(&Masks::new(snap)),
        Axiom::T5 => t5(&Masks::new(snap)),
    };
    if snap.closures_truncated && !verdict.holds {
        verdict = verdict.with_note("closures are relative to a finite window");
    }
    Ok(verdict)
}

fn t0(snap: &TopologySnapshot) -> PropertyVerdict {
    for i in 0..snap.len() {
        for j in i + 1..snap.len() {
            if snap.divides(i, j) && snap.divides(j, i) {
                return PropertyVerdict::fails(Property::T0, Some(Witness::Pair { first: i, second: j }));
            }
        }
    }
    PropertyVerdict::holds(Property::T0)
}

/// Fails on the first `i ≠ j` with `i ∣ j`: every open set holding `j`
/// then holds `i`.
fn t1(snap: &TopologySnapshot) -> PropertyVerdict {
    for i in 0..snap.len() {
        if let Some(j) = snap.closure_of_class(i).iter().find(|&j| j != i) {
            return PropertyVerdict::fails(Property::T1, Some(Witness::Pair { first: i, second: j }));
        }
    }
    PropertyVerdict::holds(Property::T1)
}

fn t2(snap: &TopologySnapshot) -> PropertyVerdict {
    for i in 0..snap.len() {
        for j in i + 1..snap.len() {
            if let Some(shared) = snap.basic_open(i).intersection(snap.basic_open(j)).first() {
                return PropertyVerdict::fails(
                    Property::T2,
                    Some(Witness::SharedPoint {
                        first: i,
                        second: j,
                        shared,
                    }),
                );
            }
        }
    }
    PropertyVerdict::holds(Property::T2)
}

fn discrete(snap: &TopologySnapshot) -> PropertyVerdict {
    for i in 0..snap.len() {
        if let Some(j) = snap.basic_open(i).iter().find(|&j| j != i) {
            return PropertyVerdict::fails(Property::Discrete, Some(Witness::Pair { first: i, second: j }));
        }
    }
    PropertyVerdict::holds(Property::Discrete)
}

struct Masks {
    n: usize,
    up: Vec<u32>,
    down: Vec<u32>,
}

impl Masks {
    fn new(snap: &TopologySnapshot) -> Self {
        let n = snap.len();
        let mask = |s: &crate::bitset::BitSet| s.iter().fold(0u32, |m, i| m | (1 << i));
        Self {
            n,
            up: (0..n).map(|i| mask(snap.closure_of_class(i))).collect(),
            down: (0..n).map(|i| mask(snap.basic_open(i))).collect(),
        }
    }

    fn fold(&self, set: u32, rows: &[u32]) -> u32 {
        let mut out = 0;
        let mut s = set;
        while s != 0 {
            let i = s.trailing_zeros() as usize;
            out |= rows[i];
            s &= s - 1;
        }
        out
    }

    fn up(&self, set: u32) -> u32 {
        self.fold(set, &self.up)
    }

    fn down(&self, set: u32) -> u32 {
        self.fold(set, &self.down)
    }

    fn subsets(&self) -> impl Iterator<Item = u32> {
        0..(1u64 << self.n) as u32
    }
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

fn t3(m: &Masks) -> PropertyVerdict {
    for f in m.subsets() {
        if m.up(f) != f {
            continue;
        }
        let df = m.down(f);
        for x in 0..m.n {
            if f & (1 << x) == 0 && m.down[x] & df != 0 {
                return PropertyVerdict::fails(
                    Property::T3,
                    Some(Witness::PointAndClosed {
                        point: x,
                        closed: bits(f),
                    }),
                );
            }
        }
    }
    PropertyVerdict::holds(Property::T3)
}

/// For closed `F`, every closed set disjoint from `F` lies inside
/// `K = {x : cl{x} ∩ F = ∅}`, and `K` is closed.
fn t4(m: &Masks) -> PropertyVerdict {
    for f in m.subsets() {
        if f == 0 || m.up(f) != f {
            continue;
        }
        let k = (0..m.n)
            .filter(|&x| m.up[x] & f == 0)
            .fold(0u32, |acc, x| acc | (1 << x));
        if k != 0 && m.down(f) & m.down(k) != 0 {
            return PropertyVerdict::fails(
                Property::T4,
                Some(Witness::SetPair {
                    first: bits(f),
                    second: bits(k),
                }),
            );
        }
    }
    PropertyVerdict::holds(Property::T4)
}

/// For any `A`, every set separated from `A` lies inside
/// `B = {x ∉ cl A : cl{x} ∩ A = ∅}`, which is itself separated from `A`.
fn t5(m: &Masks) -> PropertyVerdict {
    for a in m.subsets() {
        if a == 0 {
            continue;
        }
        let cl_a = m.up(a);
        let b = (0..m.n)
            .filter(|&x| cl_a & (1 << x) == 0 && m.up[x] & a == 0)
            .fold(0u32, |acc, x| acc | (1 << x));
        if b != 0 && m.down(a) & m.down(b) != 0 {
            return PropertyVerdict::fails(
                Property::T5,
                Some(Witness::SetPair {
                    first: bits(a),
                    second: bits(b),
                }),
            );
        }
    }
    PropertyVerdict::holds(Property::T5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;
    use crate::topology::{build_topology, Representative};

    fn snap(n: u64) -> TopologySnapshot {
        build_topology(&FiniteModule::cyclic(n).unwrap())
    }

    #[test]
    fn z6_satisfies_everything() {
        let s = snap(6);
        for axiom in Axiom::ALL {
            assert!(check_separation(&s, axiom).unwrap().holds, "{axiom:?}");
        }
    }

    #[test]
    fn z12_t1_witness() {
        let s = snap(12);
        let v = check_separation(&s, Axiom::T1).unwrap();
        assert!(!v.holds);
        assert_eq!(v.describe_witness(&s).unwrap(), "[2],[4]");
        assert!(v.confirm(&s));
        assert!(check_separation(&s, Axiom::T0).unwrap().holds);
        for axiom in [Axiom::T2, Axiom::Discrete, Axiom::T3, Axiom::T4, Axiom::T5] {
            let v = check_separation(&s, axiom).unwrap();
            assert!(!v.holds, "{axiom:?}");
            assert!(v.confirm(&s), "{axiom:?}");
        }
    }

    #[test]
    fn chain_is_t5_but_not_t1() {
        let s = snap(32);
        assert!(!check_separation(&s, Axiom::T1).unwrap().holds);
        assert!(check_separation(&s, Axiom::T4).unwrap().holds);
        assert!(check_separation(&s, Axiom::T5).unwrap().holds);
        assert!(!check_separation(&s, Axiom::T3).unwrap().holds);
    }

    #[test]
    fn bound_is_enforced() {
        let labels = (0..20).map(Representative::Integer).collect();
        let s = TopologySnapshot::from_relation("antichain", labels, |i, j| i == j);
        assert!(matches!(
            check_separation(&s, Axiom::T5),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(check_separation(&s, Axiom::T2).unwrap().holds);
        assert!(check_separation_bounded(&s, Axiom::T5, 20).unwrap().holds);
    }

    /// Naive T4 over all pairs of closed sets and all pairs of open sets.
    fn t4_naive(s: &TopologySnapshot) -> bool {
        let n = s.len();
        let all: Vec<u32> = (0..1u32 << n).collect();
        let set = |m: u32| crate::bitset::BitSet::from_indices(n, (0..n).filter(|i| m & (1 << i) != 0));
        let closed: Vec<u32> = all.iter().copied().filter(|&m| s.is_closed(&set(m))).collect();
        let open: Vec<u32> = all.iter().copied().filter(|&m| s.is_open(&set(m))).collect();
        closed.iter().all(|&f| {
            closed.iter().all(|&k| {
                f & k != 0
                    || open.iter().any(|&u| {
                        u & f == f && open.iter().any(|&v| v & k == k && u & v == 0)
                    })
            })
        })
    }

    fn t5_naive(s: &TopologySnapshot) -> bool {
        let n = s.len();
        let set = |m: u32| crate::bitset::BitSet::from_indices(n, (0..n).filter(|i| m & (1 << i) != 0));
        let open: Vec<u32> = (0..1u32 << n).filter(|&m| s.is_open(&set(m))).collect();
        let cl = |m: u32| {
            s.up_closure(&set(m))
                .iter()
                .fold(0u32, |acc, i| acc | (1 << i))
        };
        (0..1u32 << n).all(|a| {
            (0..1u32 << n).all(|b| {
                cl(a) & b != 0
                    || a & cl(b) != 0
                    || open.iter().any(|&u| {
                        u & a == a && open.iter().any(|&v| v & b == b && u & v == 0)
                    })
            })
        })
    }

    fn t3_naive(s: &TopologySnapshot) -> bool {
        let n = s.len();
        let set = |m: u32| crate::bitset::BitSet::from_indices(n, (0..n).filter(|i| m & (1 << i) != 0));
        let open: Vec<u32> = (0..1u32 << n).filter(|&m| s.is_open(&set(m))).collect();
        (0..1u32 << n).filter(|&f| s.is_closed(&set(f))).all(|f| {
            (0..n).filter(|x| f & (1 << x) == 0).all(|x| {
                open.iter().any(|&u| {
                    u & (1 << x) != 0 && open.iter().any(|&v| v & f == f && u & v == 0)
                })
            })
        })
    }

    #[test]
    fn reductions_match_naive_definitions() {
        for n in [4u64, 6, 8, 12, 16, 18, 20, 24, 30, 36, 48] {
            let s = snap(n);
            assert_eq!(check_separation(&s, Axiom::T3).unwrap().holds, t3_naive(&s), "T3 Z_{n}");
            assert_eq!(check_separation(&s, Axiom::T4).unwrap().holds, t4_naive(&s), "T4 Z_{n}");
            assert_eq!(check_separation(&s, Axiom::T5).unwrap().holds, t5_naive(&s), "T5 Z_{n}");
        }
        for moduli in [vec![2, 4], vec![3, 3], vec![2, 2]] {
            let s = build_topology(&FiniteModule::from_moduli(moduli).unwrap());
            if s.len() <= 8 {
                assert_eq!(check_separation(&s, Axiom::T4).unwrap().holds, t4_naive(&s));
                assert_eq!(check_separation(&s, Axiom::T5).unwrap().holds, t5_naive(&s));
            }
        }
    }
}
