//! Library results against a naive model that works on coordinate tuples and
//! explicit cyclic subgroups, sharing no code with the crate.

use std::collections::{BTreeMap, BTreeSet};

use divtop::{build_topology, check_separation, is_pseudo_simple, satisfies_star, Axiom, FiniteModule};

type Tuple = Vec<u64>;

struct Naive {
    moduli: Vec<u64>,
    elements: Vec<Tuple>,
}

impl Naive {
    fn new(moduli: &[u64]) -> Self {
        let mut elements = vec![vec![]];
        for &n in moduli {
            elements = elements
                .into_iter()
                .flat_map(|e| {
                    (0..n).map(move |c| {
                        let mut e = e.clone();
                        e.push(c);
                        e
                    })
                })
                .collect();
        }
        Self {
            moduli: moduli.to_vec(),
            elements,
        }
    }

    fn scale(&self, k: u64, x: &Tuple) -> Tuple {
        x.iter().zip(&self.moduli).map(|(c, n)| (k * c) % n).collect()
    }

    fn cyclic(&self, x: &Tuple) -> BTreeSet<Tuple> {
        let exp = self.moduli.iter().product::<u64>();
        (0..exp).map(|k| self.scale(k, x)).collect()
    }

    /// Sharp elements grouped by the cyclic submodule they generate.
    fn classes(&self) -> BTreeMap<BTreeSet<Tuple>, BTreeSet<Tuple>> {
        let total = self.elements.len();
        let mut out: BTreeMap<BTreeSet<Tuple>, BTreeSet<Tuple>> = BTreeMap::new();
        for x in &self.elements {
            let c = self.cyclic(x);
            if c.len() > 1 && c.len() < total {
                out.entry(c).or_default().insert(x.clone());
            }
        }
        out
    }
}

/// Nondecreasing moduli lists with product at most `bound`.
fn moduli_lists(bound: u64) -> Vec<Vec<u64>> {
    fn go(start: u64, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for n in start..=left {
            cur.push(n);
            go(n, left / n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(2, bound, &mut Vec::new(), &mut out);
    out
}

#[test]
fn classes_and_basic_opens_match_naive_model() {
    for moduli in moduli_lists(48) {
        let m = FiniteModule::from_moduli(moduli.clone()).unwrap();
        let snap = build_topology(&m);
        let naive = Naive::new(&moduli);
        let classes = naive.classes();
        assert_eq!(snap.len(), classes.len(), "{moduli:?}");

        // Library class index -> naive cyclic submodule.
        let mut key = Vec::new();
        for members in &snap.members {
            let set: BTreeSet<Tuple> = members.iter().map(|e| e.coords().to_vec()).collect();
            let cyc = naive.cyclic(&members[0].coords().to_vec());
            assert_eq!(classes.get(&cyc), Some(&set), "{moduli:?}");
            key.push(cyc);
        }
        for (j, cj) in key.iter().enumerate() {
            // U_j: classes whose cyclic submodule contains rep(j).
            let expected: BTreeSet<usize> = key
                .iter()
                .enumerate()
                .filter(|(_, ci)| cj.is_subset(ci))
                .map(|(i, _)| i)
                .collect();
            let got: BTreeSet<usize> = snap.basic_open(j).iter().collect();
            assert_eq!(got, expected, "{moduli:?} U at {}", snap.label(j));
        }
    }
}

#[test]
fn separation_and_pseudo_simplicity_match_naive_model() {
    for moduli in moduli_lists(64) {
        let m = FiniteModule::from_moduli(moduli.clone()).unwrap();
        let snap = build_topology(&m);
        let naive = Naive::new(&moduli);
        let classes: Vec<BTreeSet<Tuple>> = naive.classes().into_keys().collect();

        let pseudo = classes.iter().all(|c| is_prime(c.len() as u64));
        let t1 = classes
            .iter()
            .all(|a| classes.iter().all(|b| a == b || !a.is_subset(b)));
        // Two classes share a point of both minimal neighbourhoods exactly when
        // some class is contained in both cyclic submodules.
        let t2 = classes.iter().enumerate().all(|(i, a)| {
            classes[i + 1..]
                .iter()
                .all(|b| !classes.iter().any(|c| c.is_subset(a) && c.is_subset(b)))
        });
        let star = star_naive(&naive);

        assert_eq!(is_pseudo_simple(&m), pseudo, "{moduli:?}");
        assert_eq!(check_separation(&snap, Axiom::T1).unwrap().holds, t1, "{moduli:?}");
        assert_eq!(check_separation(&snap, Axiom::T2).unwrap().holds, t2, "{moduli:?}");
        assert_eq!(check_separation(&snap, Axiom::Discrete).unwrap().holds, t1, "{moduli:?}");
        assert_eq!(satisfies_star(&m), star, "{moduli:?}");
    }
}

/// Distinct `Rm1`, `Rm2` of nongenerators are never both inside a proper
/// cyclic submodule `Rx`.
fn star_naive(n: &Naive) -> bool {
    let classes: Vec<BTreeSet<Tuple>> = n.classes().into_keys().collect();
    classes.iter().enumerate().all(|(i, a)| {
        classes[i + 1..]
            .iter()
            .all(|b| !classes.iter().any(|x| a.is_subset(x) && b.is_subset(x)))
    })
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}
