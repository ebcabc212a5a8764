//! Trivial extensions against a pair-arithmetic model with ideals built as
//! explicit sets.

use std::collections::BTreeSet;

use divtop::TrivialExtension;

type Pair = (u64, u64);

struct Ring {
    n: u64,
    m: u64,
    all: Vec<Pair>,
}

impl Ring {
    fn new(n: u64, m: u64) -> Self {
        let all = (0..n).flat_map(|a| (0..m).map(move |x| (a, x))).collect();
        Self { n, m, all }
    }

    fn add(&self, p: Pair, q: Pair) -> Pair {
        ((p.0 + q.0) % self.n, (p.1 + q.1) % self.m)
    }

    fn mul(&self, p: Pair, q: Pair) -> Pair {
        ((p.0 * q.0) % self.n, (p.0 * q.1 + q.0 * p.1) % self.m)
    }

    fn is_unit(&self, p: Pair) -> bool {
        self.all.iter().any(|&s| self.mul(s, p) == (1 % self.n, 0))
    }

    fn ann(&self, p: Pair) -> BTreeSet<Pair> {
        self.all.iter().copied().filter(|&s| self.mul(s, p) == (0, 0)).collect()
    }

    /// `I` is maximal when it is proper and `I + Rs = R` for every `s ∉ I`.
    fn is_maximal(&self, ideal: &BTreeSet<Pair>) -> bool {
        if ideal.contains(&(1 % self.n, 0)) {
            return false;
        }
        self.all.iter().filter(|s| !ideal.contains(s)).all(|&s| {
            let sum: BTreeSet<Pair> = ideal
                .iter()
                .flat_map(|&i| self.all.iter().map(move |&t| (i, t)))
                .map(|(i, t)| self.add(i, self.mul(t, s)))
                .collect();
            sum.len() == self.all.len()
        })
    }

    fn pseudo_simple(&self) -> bool {
        self.all
            .iter()
            .filter(|&&p| p != (0, 0) && !self.is_unit(p))
            .all(|&p| self.is_maximal(&self.ann(p)))
    }
}

#[test]
fn brute_force_agrees_with_pair_model() {
    let mut checked = 0;
    for n in 2..=40u64 {
        for m in (2..=n).filter(|m| n % m == 0 && n * m <= 160) {
            let lib = TrivialExtension::new(n, m).unwrap();
            let naive = Ring::new(n, m);
            assert_eq!(lib.is_pseudo_simple_ring(), naive.pseudo_simple(), "Z_{n} x| Z_{m}");
            assert_eq!(lib.is_pseudo_simple_ring(), lib.local_criterion(), "Z_{n} x| Z_{m}");
            checked += 1;
        }
    }
    assert!(checked > 40);
}

#[test]
fn small_cases() {
    let r = TrivialExtension::new(4, 2).unwrap();
    assert_eq!(r.order(), 8);
    assert_eq!(r.is_pseudo_simple_ring(), Ring::new(4, 2).pseudo_simple());
    assert_eq!(r.is_pseudo_simple_ring(), r.local_criterion());
    for p in [2, 3, 5, 7] {
        assert!(TrivialExtension::new(p, p).unwrap().is_pseudo_simple_ring());
    }
    assert!(TrivialExtension::new(6, 4).is_err());
    assert!(TrivialExtension::new(6, 1).is_err());
}
