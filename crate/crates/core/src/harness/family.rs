//! Module families for sweeps.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime, partitions, pow};
use crate::module::{FiniteModule, PrimePower};
use crate::notation::ModuleSpec;
use crate::symbolic::SymbolicFamily;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `ℤ_n` for `2 ≤ n ≤ max_n`.
    CyclicUpTo { max_n: u64 },
    /// Every finite abelian group of order `2..=max_order`, up to isomorphism.
    AbelianUpTo { max_order: u64 },
    AbelianOfOrder { order: u64 },
    /// `F_p^d` with `p^d ≤ max_order`.
    VectorSpacesUpTo { max_order: u64 },
    /// `ℤ_n ⋉ ℤ_m` with `m | n`, `m ≥ 2`, `n·m ≤ max_product`.
    TrivialExtensionsUpTo { max_product: u64 },
    /// Ordered pairs of abelian groups `(M₁, M₂)` with `|M₁|·|M₂| ≤ max_order`.
    PairsUpTo { max_order: u64 },
    Symbolic { families: Vec<SymbolicFamily> },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::CyclicUpTo { max_n } => write!(f, "Z_n, 2 <= n <= {max_n}"),
            FamilySpec::AbelianUpTo { max_order } => write!(f, "finite abelian groups of order <= {max_order}"),
            FamilySpec::AbelianOfOrder { order } => write!(f, "finite abelian groups of order {order}"),
            FamilySpec::VectorSpacesUpTo { max_order } => write!(f, "F_p^d with p^d <= {max_order}"),
            FamilySpec::TrivialExtensionsUpTo { max_product } => {
                write!(f, "Z_n x| Z_m with m | n, m >= 2, n*m <= {max_product}")
            }
            FamilySpec::PairsUpTo { max_order } => {
                write!(f, "ordered pairs of abelian groups with |M1|*|M2| <= {max_order}")
            }
            FamilySpec::Symbolic { families } => {
                let names: Vec<String> = families.iter().map(|s| s.name()).collect();
                write!(f, "symbolic: {}", names.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Module(FiniteModule),
    Trivial { n: u64, m: u64 },
    Pair(FiniteModule, FiniteModule),
    Symbolic(SymbolicFamily),
}

impl Instance {
    /// A string that reproduces the instance through the module notation.
    pub fn descriptor(&self) -> String {
        match self {
            Instance::Module(m) => ModuleSpec::of_module(m).to_string(),
            Instance::Trivial { n, m } => ModuleSpec::Trivial { n: *n, m: *m }.to_string(),
            Instance::Pair(a, b) => format!(
                "{} (+) {}",
                ModuleSpec::of_module(a),
                ModuleSpec::of_module(b)
            ),
            Instance::Symbolic(s) => ModuleSpec::Symbolic(*s).to_string(),
        }
    }
}

/// Abelian groups of the given order, one per isomorphism class, as sorted
/// prime-power multisets. Within a prime the partitions run from cyclic to
/// elementary.
pub fn abelian_groups_of_order(order: u64) -> Vec<FiniteModule> {
    if order < 2 {
        return Vec::new();
    }
    let mut shapes: Vec<Vec<PrimePower>> = vec![Vec::new()];
    for (prime, k) in factorize(order) {
        let mut next = Vec::new();
        for shape in &shapes {
            for part in partitions(k) {
                let mut s = shape.clone();
                s.extend(part.iter().map(|&exponent| PrimePower { prime, exponent }));
                next.push(s);
            }
        }
        shapes = next;
    }
    shapes
        .into_iter()
        .map(|s| FiniteModule::abelian(&s).expect("prime powers are valid"))
        .collect()
}

fn vector_spaces_up_to(max_order: u64) -> Vec<FiniteModule> {
    let mut out = Vec::new();
    for p in (2..=max_order).filter(|&p| is_prime(p)) {
        let mut d = 1;
        while pow(p, d) <= max_order {
            out.push(FiniteModule::vector_space(p, d).expect("p is prime"));
            d += 1;
        }
    }
    out.sort_by_key(|m| (m.order(), m.moduli()[0]));
    out
}

pub fn enumerate_family(spec: &FamilySpec) -> Vec<Instance> {
    match spec {
        FamilySpec::CyclicUpTo { max_n } => (2..=*max_n)
            .map(|n| Instance::Module(FiniteModule::cyclic(n).expect("n >= 2")))
            .collect(),
        FamilySpec::AbelianUpTo { max_order } => (2..=*max_order)
            .flat_map(abelian_groups_of_order)
            .map(Instance::Module)
            .collect(),
        FamilySpec::AbelianOfOrder { order } => abelian_groups_of_order(*order)
            .into_iter()
            .map(Instance::Module)
            .collect(),
        FamilySpec::VectorSpacesUpTo { max_order } => vector_spaces_up_to(*max_order)
            .into_iter()
            .map(Instance::Module)
            .collect(),
        FamilySpec::TrivialExtensionsUpTo { max_product } => {
            let mut out = Vec::new();
            for n in 2..=*max_product {
                for m in (2..=n).filter(|m| n % m == 0 && n * m <= *max_product) {
                    out.push(Instance::Trivial { n, m });
                }
            }
            out
        }
        FamilySpec::PairsUpTo { max_order } => {
            let groups: Vec<FiniteModule> = (2..=max_order / 2).flat_map(abelian_groups_of_order).collect();
            let mut out = Vec::new();
            for a in &groups {
                for b in groups.iter().filter(|b| a.order() * b.order() <= *max_order) {
                    out.push(Instance::Pair(a.clone(), b.clone()));
                }
            }
            out
        }
        FamilySpec::Symbolic { families } => families.iter().copied().map(Instance::Symbolic).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(spec: FamilySpec) -> usize {
        enumerate_family(&spec).len()
    }

    #[test]
    fn cyclic_family() {
        assert_eq!(count(FamilySpec::CyclicUpTo { max_n: 10 }), 9);
    }

    #[test]
    fn order_eight() {
        let names: Vec<String> = abelian_groups_of_order(8)
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(names, ["Z_8", "Z_4 + Z_2", "Z_2 + Z_2 + Z_2"]);
    }

    #[test]
    fn order_at_most_four() {
        let all = enumerate_family(&FamilySpec::AbelianUpTo { max_order: 4 });
        let d: Vec<String> = all.iter().map(Instance::descriptor).collect();
        assert_eq!(d, ["Zn:2", "Zn:3", "Zn:4", "ab:2x2"]);
    }

    /// Oracle: count isomorphism classes by brute force over sorted
    /// multisets of prime powers with the right product.
    fn multiset_count(order: u64) -> usize {
        fn go(rest: u64, min: u64, powers: &[u64]) -> usize {
            if rest == 1 {
                return 1;
            }
            powers
                .iter()
                .filter(|&&q| q >= min && rest.is_multiple_of(q))
                .map(|&q| go(rest / q, q, powers))
                .sum()
        }
        let powers: Vec<u64> = (2..=order)
            .filter(|&q| factorize(q).len() == 1)
            .collect();
        go(order, 2, &powers)
    }

    #[test]
    fn duplicate_free_and_exhaustive() {
        for order in 2..=256u64 {
            let groups = abelian_groups_of_order(order);
            assert_eq!(groups.len(), multiset_count(order), "order {order}");
            for (i, a) in groups.iter().enumerate() {
                assert_eq!(a.order(), order);
                assert!(groups[i + 1..].iter().all(|b| !a.is_isomorphic(b)));
            }
        }
    }

    #[test]
    fn vector_spaces_and_extensions() {
        let vs = enumerate_family(&FamilySpec::VectorSpacesUpTo { max_order: 9 });
        let d: Vec<String> = vs.iter().map(Instance::descriptor).collect();
        assert_eq!(
            d,
            ["vs:p=2,d=1", "vs:p=3,d=1", "vs:p=2,d=2", "vs:p=5,d=1", "vs:p=7,d=1", "vs:p=2,d=3", "vs:p=3,d=2"]
        );
        let t = enumerate_family(&FamilySpec::TrivialExtensionsUpTo { max_product: 16 });
        let d: Vec<String> = t.iter().map(Instance::descriptor).collect();
        assert_eq!(d, ["triv:n=2,m=2", "triv:n=3,m=3", "triv:n=4,m=2", "triv:n=4,m=4", "triv:n=6,m=2", "triv:n=8,m=2"]);
    }

    #[test]
    fn pairs() {
        let p = enumerate_family(&FamilySpec::PairsUpTo { max_order: 8 });
        let d: Vec<String> = p.iter().map(Instance::descriptor).collect();
        assert_eq!(d, ["Zn:2 (+) Zn:2", "Zn:2 (+) Zn:3", "Zn:2 (+) Zn:4", "Zn:2 (+) ab:2x2", "Zn:3 (+) Zn:2", "Zn:4 (+) Zn:2", "ab:2x2 (+) Zn:2"]);
    }
}
