//! Theorem sweeps: enumerate a family, evaluate both sides of a statement on
//! every instance, and collect the disagreements with witnesses.
//!
//! Each side of a statement is computed by its own route: algebraic
//! predicates from [`crate::algebra`] and topological verdicts from
//! [`crate::topology`].

mod checks;
pub mod family;
pub mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::SUBMODULE_BOUND;
use crate::error::{Error, Result};
use crate::symbolic::SymbolicFamily;
use crate::topology::CLASS_BOUND;

pub use family::{abelian_groups_of_order, enumerate_family, FamilySpec, Instance};
pub use report::{CaseRecord, Outcome, RunReport, Shape, SweepReport, TheoremInfo, REPORT_SCHEMA_VERSION};

/// Knobs shared by every check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    /// Largest `|EC(M#)|` for the subset searches behind T3, T4 and T5.
    pub class_bound: usize,
    /// Largest module order for full submodule enumeration.
    pub submodule_bound: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            class_bound: CLASS_BOUND,
            submodule_bound: SUBMODULE_BOUND,
        }
    }
}

type Check = fn(&Instance, &CheckOptions) -> CaseRecord;

struct Entry {
    id: &'static str,
    anchor: &'static str,
    statement: &'static str,
    shape: Shape,
    check: Check,
    family: FamilyKind,
}

/// Which family a theorem is swept over by default.
#[derive(Clone, Copy)]
enum FamilyKind {
    Abelian,
    /// Abelian groups, capped at the given order.
    AbelianCapped(u64),
    Cyclic,
    Trivial,
    Pairs,
    Symbolic,
    VectorSpaces,
    /// Abelian groups up to the count bound.
    Counts,
}

const REGISTRY: &[Entry] = &[
    Entry {
        id: "main-equivalence",
        anchor: "Theorem main: \"The following statements are equivalent\"",
        statement: "pseudo simple <=> (*)-condition <=> discrete <=> Hausdorff <=> T1",
        shape: Shape::Equivalence,
        check: checks::main_equivalence,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "fgPS",
        anchor: "Theorem fgPS: \"A finitely generated abelian group G is a pseudo simple\"",
        statement: "a finite abelian group is pseudo simple <=> it is Z_p + Z_q (p != q) or (Z_p)^n",
        shape: Shape::Equivalence,
        check: checks::fg_ps,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "fgPS-corrected",
        anchor: "Theorem fgPS together with Corollary pseudoZn: \"n = p, p^2 or pq\"",
        statement: "a finite abelian group is pseudo simple <=> it is Z_pq (p != q), Z_{p^2} or (Z_p)^n",
        shape: Shape::Equivalence,
        check: checks::fg_ps_corrected,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "pseudoZn",
        anchor: "Corollary pseudoZn: \"Z_n is pseudo simple if and only if n = p, p^2 or pq\"",
        statement: "Z_n is pseudo simple <=> n is p, p^2 or pq",
        shape: Shape::Equivalence,
        check: checks::pseudo_zn,
        family: FamilyKind::Cyclic,
    },
    Entry {
        id: "pseudo-simple-ann",
        anchor: "Lemma LemmaPseu: \"pseudo simple if and only if ann(m) is a maximal ideal\"",
        statement: "every Rm (m in M#) is simple <=> every ann(m) (m in M#) is maximal",
        shape: Shape::Equivalence,
        check: checks::pseudo_simple_ann,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "nested-uniserial",
        anchor: "Theorem tnested: \"D(M) is a nested space if and only if M is uniserial\"",
        statement: "D(M) nested <=> submodules of M totally ordered",
        shape: Shape::Equivalence,
        check: checks::nested_uniserial,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "isolated-irreducible",
        anchor: "Proposition isolated: \"[m] is an isolated point if and only if m is an irreducible element on M#\"",
        statement: "[m] isolated <=> m irreducible on M#, for every class",
        shape: Shape::Equivalence,
        check: checks::isolated_irreducible,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "irreducible-noncyclic",
        anchor: "Proposition isolated: \"if M is a noncyclic module, then [m] is an isolated point if and only if m is an irreducible element of M\"",
        statement: "M noncyclic => ([m] isolated <=> m irreducible in M)",
        shape: Shape::Equivalence,
        check: checks::irreducible_noncyclic,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "discrete-irreducible",
        anchor: "Theorem tdiscrete: \"discrete topology if and only if every element m in M# is an irreducible on M#\"",
        statement: "D(M) discrete <=> every m in M# is irreducible on M#",
        shape: Shape::Equivalence,
        check: checks::discrete_irreducible,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "hausdorff-star",
        anchor: "Theorem Hausdorff*condition: \"Hausdorff space if and only if M satisfies (*)-condition\"",
        statement: "D(M) Hausdorff <=> M satisfies the (*)-condition",
        shape: Shape::Equivalence,
        check: checks::hausdorff_star,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "t5-uniserial",
        anchor: "Proposition T5 (i): \"If M is a uniserial module, then D(M) is a T5-space\"",
        statement: "M uniserial => D(M) is T5",
        shape: Shape::Implication,
        check: checks::t5_uniserial,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "t5-torsion-free",
        anchor: "Proposition T5 (ii): \"torsion free multiplication nonuniserial module, then D(M) is not a T5-space\"",
        statement: "M torsion free, multiplication, not uniserial => D(M) is not T5",
        shape: Shape::Implication,
        check: checks::t5_torsion_free,
        family: FamilyKind::Symbolic,
    },
    Entry {
        id: "completely-normal",
        anchor: "Remark rcompletely: \"(completely) normal space if and only if M is a pseudo simple\"",
        statement: "pseudo simple <=> T1 and T5 <=> T1 and T4",
        shape: Shape::Equivalence,
        check: checks::completely_normal,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "bezout-star",
        anchor: "Proposition (Bezout): \"Rm is a maximal submodule for all nonzero nongenerator m\"",
        statement: "Bezout and (*)-condition => Rm maximal for every m in M#, and M/N simple for every nonzero proper N",
        shape: Shape::Implication,
        check: checks::bezout_star,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "gcd-intersection",
        anchor: "Proposition Prop1 (v), (vi): \"U_m ∩ U_n = U_gcd(n,m)\"",
        statement: "gcd(m,n) in M# => U_m ∩ U_n = U_gcd; U_m, U_m' ⊆ U_n and lcm in M# => U_lcm ⊆ U_n",
        shape: Shape::Implication,
        check: checks::gcd_intersection,
        family: FamilyKind::AbelianCapped(64),
    },
    Entry {
        id: "quotient-criterion",
        anchor: "Theorem (factor modules): \"M/N is a pseudo simple R-module if and only if (N:m) is a maximal ideal\"",
        statement: "M/N pseudo simple <=> (N:m) maximal for every m outside N with R(m+N) != M/N",
        shape: Shape::Equivalence,
        check: checks::quotient_criterion,
        family: FamilyKind::AbelianCapped(64),
    },
    Entry {
        id: "homo-stability",
        anchor: "Theorem homo: \"If M is a pseudo simple R-module and φ is a surjective, then N is a pseudo simple\"",
        statement: "M pseudo simple and φ: M -> N onto => N pseudo simple; N pseudo simple and φ one-to-one => M pseudo simple",
        shape: Shape::Implication,
        check: checks::homo_stability,
        family: FamilyKind::Pairs,
    },
    Entry {
        id: "cfac",
        anchor: "Corollary cfac: \"each submodule of M is a pseudo simple R-module\"",
        statement: "M pseudo simple => every submodule, factor module and direct summand is pseudo simple",
        shape: Shape::Implication,
        check: checks::cfac,
        family: FamilyKind::AbelianCapped(64),
    },
    Entry {
        id: "tdir",
        anchor: "Theorem tdir: \"ann(M1)=ann(M2) is a maximal ideal of R\"",
        statement: "one of M1, M2 noncyclic => (M1 + M2 pseudo simple <=> both pseudo simple and ann(M1) = ann(M2) maximal)",
        shape: Shape::Equivalence,
        check: checks::tdir,
        family: FamilyKind::Pairs,
    },
    Entry {
        id: "tdir2",
        anchor: "Theorem tdir2: \"(m1,m2) is a generator of M for all nonzero m1 and m2\"",
        statement: "M1, M2 cyclic => (M1 + M2 pseudo simple <=> both simple and (i) distinct maximal annihilators with every (m1,m2) a generator, or (ii) equal maximal annihilators)",
        shape: Shape::Equivalence,
        check: checks::tdir2,
        family: FamilyKind::Pairs,
    },
    Entry {
        id: "ttri",
        anchor: "Theorem ttri: \"R is a local ring with a unique maximal ideal ann(M)\"",
        statement: "Z_n x| Z_m pseudo simple ring <=> Z_n local with maximal ideal ann(Z_m) and ann(r) = ann(Z_m) for every nonzero nonunit r",
        shape: Shape::Equivalence,
        check: checks::ttri,
        family: FamilyKind::Trivial,
    },
    Entry {
        id: "tcom-counts",
        anchor: "Theorem tcom: \"has only finitely many minimal elements\"",
        statement: "minimal members of {Rm : m in M#} correspond to simple submodules, and their basic opens cover EC(M#)",
        shape: Shape::Invariant,
        check: checks::tcom_counts,
        family: FamilyKind::Counts,
    },
    Entry {
        id: "tcom-symbolic",
        anchor: "Theorem tcom: \"D(M) is a compact space if and only if ... M has only finitely many simple submodules\"",
        statement: "compactness of D(Z), D(Q), D(E(p)) against the finitely-many-simple-submodules criterion",
        shape: Shape::Equivalence,
        check: checks::tcom_symbolic,
        family: FamilyKind::Symbolic,
    },
    Entry {
        id: "tfinitelycog",
        anchor: "Theorem tfinitelycog: \"If D(M) is a compact space, then Soc(M) is finitely generated and essential\"",
        statement: "D(M) compact => socle finitely generated and essential",
        shape: Shape::Implication,
        check: checks::tfinitelycog,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "t0",
        anchor: "Proposition pT0: \"D(M) is a T0-space\"",
        statement: "D(M) is T0",
        shape: Shape::Invariant,
        check: checks::t0,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "closure-of-point",
        anchor: "Proposition closure: \"closure of {[m]} = {[n] : m | n}\"",
        statement: "the closure of a point, computed from open sets, is the set of its multiples",
        shape: Shape::Invariant,
        check: checks::closure_of_point,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "alexandrov",
        anchor: "Proposition pAlex: \"D(M) is an Alexandrov space\"",
        statement: "intersections of opens are open and U_m is the least open set around [m]",
        shape: Shape::Invariant,
        check: checks::alexandrov,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "ultraconnected",
        anchor: "Proposition ultraconnected: \"multiplication R-module in which ann(M) is a prime ideal\"",
        statement: "M multiplication with ann(M) prime => D(M) ultraconnected and T4",
        shape: Shape::Implication,
        check: checks::ultraconnected,
        family: FamilyKind::Abelian,
    },
    Entry {
        id: "noetherian",
        anchor: "Theorem tNoetherian: \"Noetherian space if and only if either M is a simple module or M is a vector space\"",
        statement: "M torsion free => (D(M) Noetherian <=> M simple or a vector space)",
        shape: Shape::Equivalence,
        check: checks::noetherian,
        family: FamilyKind::Symbolic,
    },
    Entry {
        id: "density",
        anchor: "Theorem dense: \"EC(Irr(M)) is dense in D(M)\"",
        statement: "in D(Z) the prime classes are dense and lie in every dense open set",
        shape: Shape::Invariant,
        check: checks::density,
        family: FamilyKind::Symbolic,
    },
    Entry {
        id: "vector-space-noetherian",
        anchor: "Theorem tNoetherian: \"M is a vector space over the field R\"",
        statement: "finite vector spaces give Noetherian spaces with singleton basic opens",
        shape: Shape::Invariant,
        check: checks::noetherian,
        family: FamilyKind::VectorSpaces,
    },
];

/// Every registered theorem, in registry order.
pub fn registry() -> Vec<TheoremInfo> {
    REGISTRY.iter().map(info).collect()
}

pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|e| e.id).collect()
}

fn info(e: &Entry) -> TheoremInfo {
    TheoremInfo {
        id: e.id.into(),
        anchor: e.anchor.into(),
        statement: e.statement.into(),
        shape: e.shape,
    }
}

fn entry(id: &str) -> Result<&'static Entry> {
    REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Bounds used to pick a default family per theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SweepBounds {
    pub max_order: u64,
    pub max_n: u64,
    pub trivial_bound: u64,
    pub pair_bound: u64,
    /// Order bound for the simple-submodule count sweep.
    pub count_order: u64,
    pub integer_window: u64,
    pub rational_bound: u64,
    pub prufer_prime: u64,
    pub prufer_depth: u32,
}

impl Default for SweepBounds {
    fn default() -> Self {
        Self {
            max_order: 200,
            max_n: 1000,
            trivial_bound: 2000,
            pair_bound: 256,
            count_order: 512,
            integer_window: 10_000,
            rational_bound: 10,
            prufer_prime: 2,
            prufer_depth: 16,
        }
    }
}

pub fn default_family(theorem_id: &str, bounds: &SweepBounds) -> Result<FamilySpec> {
    Ok(match entry(theorem_id)?.family {
        FamilyKind::Abelian => FamilySpec::AbelianUpTo {
            max_order: bounds.max_order,
        },
        FamilyKind::AbelianCapped(cap) => FamilySpec::AbelianUpTo {
            max_order: bounds.max_order.min(cap),
        },
        FamilyKind::Cyclic => FamilySpec::CyclicUpTo { max_n: bounds.max_n },
        FamilyKind::Trivial => FamilySpec::TrivialExtensionsUpTo {
            max_product: bounds.trivial_bound,
        },
        FamilyKind::Pairs => FamilySpec::PairsUpTo {
            max_order: bounds.pair_bound,
        },
        FamilyKind::Counts => FamilySpec::AbelianUpTo {
            max_order: bounds.count_order,
        },
        FamilyKind::VectorSpaces => FamilySpec::VectorSpacesUpTo {
            max_order: bounds.max_order,
        },
        FamilyKind::Symbolic => FamilySpec::Symbolic {
            families: vec![
                SymbolicFamily::integers(bounds.integer_window)?,
                SymbolicFamily::rationals(bounds.rational_bound)?,
                SymbolicFamily::prufer(bounds.prufer_prime, bounds.prufer_depth)?,
            ],
        },
    })
}

pub fn verify(theorem_id: &str, family: &FamilySpec) -> Result<SweepReport> {
    verify_with(theorem_id, family, &CheckOptions::default())
}

pub fn verify_with(theorem_id: &str, family: &FamilySpec, options: &CheckOptions) -> Result<SweepReport> {
    let e = entry(theorem_id)?;
    Ok(sweep(info(e), family, family.to_string(), e.check, options))
}

fn sweep(theorem: TheoremInfo, family: &FamilySpec, label: String, check: Check, options: &CheckOptions) -> SweepReport {
    let start = Instant::now();
    let instances = enumerate_family(family);
    let cases: Vec<CaseRecord> = instances.par_iter().map(|i| check(i, options)).collect();
    SweepReport::from_cases(theorem, label, cases, start.elapsed().as_millis())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityKind {
    Submodule,
    Quotient,
    /// Direct sums with at least one noncyclic summand.
    DirectSumNoncyclic,
    /// Direct sums of two cyclic modules.
    DirectSumCyclic,
}

impl StabilityKind {
    pub const ALL: [StabilityKind; 4] = [
        StabilityKind::Submodule,
        StabilityKind::Quotient,
        StabilityKind::DirectSumNoncyclic,
        StabilityKind::DirectSumCyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StabilityKind::Submodule => "submodule",
            StabilityKind::Quotient => "quotient",
            StabilityKind::DirectSumNoncyclic => "direct_sum_noncyclic",
            StabilityKind::DirectSumCyclic => "direct_sum_cyclic",
        }
    }
}

fn largest_order(family: &FamilySpec) -> u64 {
    match family {
        FamilySpec::CyclicUpTo { max_n } => *max_n,
        FamilySpec::AbelianUpTo { max_order }
        | FamilySpec::VectorSpacesUpTo { max_order }
        | FamilySpec::PairsUpTo { max_order } => *max_order,
        FamilySpec::AbelianOfOrder { order } => *order,
        FamilySpec::TrivialExtensionsUpTo { max_product } => *max_product,
        FamilySpec::Symbolic { .. } => 0,
    }
}

/// Stability of pseudo simplicity under submodules, quotients and direct
/// sums. Needs full submodule enumeration, hence the order bound.
pub fn verify_stability(kind: StabilityKind, family: &FamilySpec) -> Result<SweepReport> {
    let options = CheckOptions::default();
    let order = largest_order(family);
    if order > options.submodule_bound {
        return Err(Error::BoundExceeded {
            what: "family order",
            size: order,
            bound: options.submodule_bound,
        });
    }
    let (id, check): (&str, Check) = match kind {
        StabilityKind::Submodule => ("cfac", checks::cfac_submodules),
        StabilityKind::Quotient => ("cfac", checks::cfac_quotients),
        StabilityKind::DirectSumNoncyclic => ("tdir", checks::tdir),
        StabilityKind::DirectSumCyclic => ("tdir2", checks::tdir2),
    };
    let label = format!("{family} [{}]", kind.name());
    Ok(sweep(info(entry(id)?), family, label, check, &options))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_theorem() {
        let f = FamilySpec::CyclicUpTo { max_n: 4 };
        assert_eq!(verify("nope", &f).unwrap_err(), Error::UnknownTheorem("nope".into()));
    }

    #[test]
    fn registry_ids_unique() {
        let ids = theorem_ids();
        for (i, a) in ids.iter().enumerate() {
            assert!(!ids[i + 1..].contains(a), "{a}");
        }
        for id in ids {
            default_family(id, &SweepBounds::default()).unwrap();
        }
    }

    #[test]
    fn stability_bound() {
        let f = FamilySpec::AbelianUpTo { max_order: 1024 };
        assert!(matches!(
            verify_stability(StabilityKind::Submodule, &f),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn reports_are_deterministic() {
        let f = FamilySpec::AbelianUpTo { max_order: 40 };
        let mut a = verify("fgPS", &f).unwrap();
        let mut b = verify("fgPS", &f).unwrap();
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        assert_eq!(a, b);
    }
}
