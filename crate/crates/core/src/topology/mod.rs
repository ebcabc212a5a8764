//! The divisor topology on associate classes of nonzero nongenerators.
//!
//! A [`TopologySnapshot`] is a finite preordered set of classes. The basic
//! open `U_m` is the set of classes dividing `m`; open sets are exactly the
//! divisor-closed sets, closed sets the multiple-closed ones.

mod export;
mod properties;
mod separation;
mod verdict;

use std::fmt;

use serde::Serialize;

use crate::algebra::{cyclic_set, is_irreducible_on_sharp, AssociateTable};
use crate::bitset::BitSet;
use crate::module::{Element, FiniteModule};

pub use export::{hasse_edges, to_dot, to_json, to_json_value, TOPOLOGY_SCHEMA_VERSION};
pub use properties::{
    baire_finite, check_connectivity, check_nested, compactness_verdict, noetherian_finite, standard_verdicts,
    verify_alexandrov_and_minimal_nbhd, CompactnessReport, ConnectivityReport,
};
pub use separation::{check_separation, check_separation_bounded, Axiom, CLASS_BOUND};
pub use verdict::{Property, PropertyVerdict, Witness};

/// Label of a class: a module element or a symbolic class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Representative {
    Element(Element),
    Integer(u64),
    Fraction { numerator: u64, denominator: u64 },
    /// `[1/p^level + ℤ]` in the Prüfer group.
    Prufer { prime: u64, level: u32 },
}

impl fmt::Display for Representative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Element(e) => write!(f, "{e}"),
            Self::Integer(n) => write!(f, "{n}"),
            Self::Fraction {
                numerator,
                denominator,
            } => write!(f, "{numerator}/{denominator}"),
            Self::Prufer { prime, level } => write!(f, "1/{prime}^{level}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassId {
    pub index: usize,
    pub representative: Representative,
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

#[derive(Debug, Clone)]
pub struct TopologySnapshot {
    pub description: String,
    pub classes: Vec<ClassId>,
    /// Elements of each class, when built from a finite module.
    pub members: Vec<Vec<Element>>,
    /// Row `i` holds every `j` with `rep(i) ∣ rep(j)`.
    multiples: Vec<BitSet>,
    /// Row `i` is `U_i`, every `j` with `rep(j) ∣ rep(i)`.
    opens: Vec<BitSet>,
    /// Basic opens are exact (not cut off by a window).
    pub opens_exact: bool,
    /// Closures are relative to a finite window of an infinite space.
    pub closures_truncated: bool,
}

impl TopologySnapshot {
    /// Builds a snapshot from labels and a divisibility test on indices.
    /// The relation must be a preorder whose only cycles are trivial.
    pub fn from_relation(
        description: impl Into<String>,
        labels: Vec<Representative>,
        divides: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let n = labels.len();
        let mut multiples = vec![BitSet::new(n); n];
        let mut opens = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if divides(i, j) {
                    multiples[i].insert(j);
                    opens[j].insert(i);
                }
            }
        }
        Self::from_parts(description.into(), labels, multiples, opens)
    }

    pub(crate) fn from_parts(
        description: String,
        labels: Vec<Representative>,
        multiples: Vec<BitSet>,
        opens: Vec<BitSet>,
    ) -> Self {
        let classes = labels
            .into_iter()
            .enumerate()
            .map(|(index, representative)| ClassId {
                index,
                representative,
            })
            .collect();
        Self {
            description,
            classes,
            members: Vec::new(),
            multiples,
            opens,
            opens_exact: true,
            closures_truncated: false,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::new(self.len())
    }

    pub fn all(&self) -> BitSet {
        BitSet::full(self.len())
    }

    /// `rep(i) ∣ rep(j)`.
    pub fn divides(&self, i: usize, j: usize) -> bool {
        self.multiples[i].contains(j)
    }

    /// `U_i`.
    pub fn basic_open(&self, i: usize) -> &BitSet {
        &self.opens[i]
    }

    pub fn basic_opens(&self) -> &[BitSet] {
        &self.opens
    }

    /// Closure of the point `[m]`: every class `m` divides.
    pub fn closure_of_class(&self, i: usize) -> &BitSet {
        &self.multiples[i]
    }

    /// Smallest open set containing `set`.
    pub fn down_closure(&self, set: &BitSet) -> BitSet {
        let mut out = self.empty_set();
        for i in set.iter() {
            out.union_with(&self.opens[i]);
        }
        out
    }

    /// Smallest closed set containing `set`.
    pub fn up_closure(&self, set: &BitSet) -> BitSet {
        let mut out = self.empty_set();
        for i in set.iter() {
            out.union_with(&self.multiples[i]);
        }
        out
    }

    pub fn is_open(&self, set: &BitSet) -> bool {
        set.iter().all(|i| self.opens[i].is_subset(set))
    }

    pub fn is_closed(&self, set: &BitSet) -> bool {
        set.iter().all(|i| self.multiples[i].is_subset(set))
    }

    /// Closure computed from the basis alone: the complement of the union of
    /// all basic opens missing `set`.
    pub fn closure_via_opens(&self, set: &BitSet) -> BitSet {
        let mut open = self.empty_set();
        for u in &self.opens {
            if u.is_disjoint(set) {
                open.union_with(u);
            }
        }
        open.complement()
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        let label = label.trim_start_matches('[').trim_end_matches(']');
        self.classes
            .iter()
            .position(|c| c.representative.to_string() == label)
            .or_else(|| {
                self.members
                    .iter()
                    .position(|ms| ms.iter().any(|m| m.to_string() == label))
            })
    }

    pub fn label(&self, i: usize) -> String {
        self.classes[i].to_string()
    }

    pub fn labels(&self, set: impl IntoIterator<Item = usize>) -> Vec<String> {
        set.into_iter().map(|i| self.label(i)).collect()
    }

    /// Classes `c` with `U_c = {c}`.
    pub fn isolated_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.opens[i].count() == 1).collect()
    }
}

/// Builds `EC(M#)` with its divisibility preorder and basic opens.
pub fn build_topology(module: &FiniteModule) -> TopologySnapshot {
    let table = AssociateTable::new(module);
    let full = module.order();
    let reps: Vec<usize> = table
        .representatives()
        .filter(|&r| table.order_of[r] != 1 && table.order_of[r] != full)
        .collect();
    let class_of = |idx: usize| reps.binary_search(&table.rep_of[idx]).ok();
    let n = reps.len();
    let mut members = vec![Vec::new(); n];
    for idx in 0..module.size() {
        if let Some(c) = class_of(idx) {
            members[c].push(module.element_at(idx));
        }
    }
    let mut multiples = vec![BitSet::new(n); n];
    let mut opens = vec![BitSet::new(n); n];
    for (i, &r) in reps.iter().enumerate() {
        for x in cyclic_set(module, r).iter() {
            if x == table.rep_of[x] {
                if let Ok(j) = reps.binary_search(&x) {
                    multiples[i].insert(j);
                    opens[j].insert(i);
                }
            }
        }
    }
    let labels = reps
        .iter()
        .map(|&r| Representative::Element(module.element_at(r)))
        .collect();
    let mut snap = TopologySnapshot::from_parts(module.to_string(), labels, multiples, opens);
    snap.members = members;
    snap
}

/// Classes whose representative is irreducible on `M#`, decided in the
/// module rather than from the snapshot.
pub fn irreducible_classes(module: &FiniteModule, snap: &TopologySnapshot) -> Vec<usize> {
    snap.classes
        .iter()
        .filter(|c| match &c.representative {
            Representative::Element(e) => is_irreducible_on_sharp(module, e).unwrap_or(false),
            _ => false,
        })
        .map(|c| c.index)
        .collect()
}
