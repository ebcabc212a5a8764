use serde::Serialize;

use super::separation::{check_separation_bounded, Axiom};
use super::verdict::{Property, PropertyVerdict, Witness};
use super::TopologySnapshot;
use crate::algebra::simple_submodules;
use crate::bitset::BitSet;
use crate::module::FiniteModule;

/// Basic opens pairwise comparable under inclusion.
pub fn check_nested(snap: &TopologySnapshot) -> PropertyVerdict {
    for i in 0..snap.len() {
        for j in i + 1..snap.len() {
            let (ui, uj) = (snap.basic_open(i), snap.basic_open(j));
            if !ui.is_subset(uj) && !uj.is_subset(ui) {
                return PropertyVerdict::fails(Property::Nested, Some(Witness::Pair { first: i, second: j }));
            }
        }
    }
    PropertyVerdict::holds(Property::Nested)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConnectivityReport {
    pub connected: PropertyVerdict,
    pub path_connected: PropertyVerdict,
    pub ultraconnected: PropertyVerdict,
}

pub fn check_connectivity(snap: &TopologySnapshot) -> ConnectivityReport {
    let connected = connected(snap);
    let mut path_connected = connected.clone();
    path_connected.property = Property::PathConnected;
    path_connected.note = Some(match &connected.note {
        Some(n) => format!("{n}; equals connectedness for finite spaces"),
        None => "equals connectedness for finite spaces".into(),
    });
    ConnectivityReport {
        connected,
        path_connected,
        ultraconnected: ultraconnected(snap),
    }
}

/// Connected components of the comparability graph are clopen, so the space
/// is connected exactly when that graph is.
fn connected(snap: &TopologySnapshot) -> PropertyVerdict {
    if snap.is_empty() {
        return PropertyVerdict::fails(Property::Connected, None)
            .with_note("empty space: reported as not connected by convention");
    }
    let n = snap.len();
    let mut seen = BitSet::new(n);
    let mut stack = vec![0];
    seen.insert(0);
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if (snap.divides(i, j) || snap.divides(j, i)) && seen.insert(j) {
                stack.push(j);
            }
        }
    }
    if seen.count() == n {
        PropertyVerdict::holds(Property::Connected)
    } else {
        let rest = seen.complement();
        PropertyVerdict::fails(
            Property::Connected,
            Some(Witness::SetPair {
                first: seen.to_vec(),
                second: rest.to_vec(),
            }),
        )
    }
}

/// Closed sets are unions of point closures, so it is enough that any two
/// point closures meet.
fn ultraconnected(snap: &TopologySnapshot) -> PropertyVerdict {
    for i in 0..snap.len() {
        for j in i + 1..snap.len() {
            if snap.closure_of_class(i).is_disjoint(snap.closure_of_class(j)) {
                return PropertyVerdict::fails(
                    Property::Ultraconnected,
                    Some(Witness::Pair { first: i, second: j }),
                );
            }
        }
    }
    PropertyVerdict::holds(Property::Ultraconnected)
}

/// Intersections of basic opens are open, and every open set around `c`
/// contains `U_c`. Exhaustive over families of basic opens up to the bound,
/// pairwise above it.
pub fn verify_alexandrov_and_minimal_nbhd(snap: &TopologySnapshot, bound: usize) -> PropertyVerdict {
    let n = snap.len();
    let mut ok = true;
    if n <= bound.min(20) {
        for family in 1u32..(1u64 << n) as u32 {
            let mut inter = snap.all();
            for i in (0..n).filter(|i| family & (1 << i) != 0) {
                inter.intersect_with(snap.basic_open(i));
            }
            ok &= snap.is_open(&inter);
            let candidate = BitSet::from_indices(n, (0..n).filter(|i| family & (1 << i) != 0));
            if snap.is_open(&candidate) {
                ok &= candidate.iter().all(|c| snap.basic_open(c).is_subset(&candidate));
            }
        }
    } else {
        for i in 0..n {
            for j in 0..n {
                ok &= snap.is_open(&snap.basic_open(i).intersection(snap.basic_open(j)));
                if snap.basic_open(j).contains(i) {
                    ok &= snap.basic_open(i).is_subset(snap.basic_open(j));
                }
            }
        }
    }
    let v = if ok {
        PropertyVerdict::holds(Property::Alexandrov)
    } else {
        PropertyVerdict::fails(Property::Alexandrov, None)
    };
    if n > bound.min(20) {
        v.with_note("pairwise check only above the class bound")
    } else {
        v
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompactnessReport {
    pub verdict: PropertyVerdict,
    /// Minimal members of `{Rm : m ∈ M#}`, i.e. classes with no proper multiple.
    pub minimal_cyclic_count: usize,
    pub simple_submodule_count: usize,
    pub counts_agree: bool,
    /// `{U_m : Rm minimal}` covers the whole space.
    pub minimal_cover_covers: bool,
}

pub fn compactness_verdict(module: &FiniteModule, snap: &TopologySnapshot) -> CompactnessReport {
    let minimal: Vec<usize> = (0..snap.len())
        .filter(|&c| snap.closure_of_class(c).count() == 1)
        .collect();
    let mut cover = snap.empty_set();
    for &c in &minimal {
        cover.union_with(snap.basic_open(c));
    }
    let simple = simple_submodules(module).len();
    let counts_agree = minimal.len() == simple;
    let mut verdict = PropertyVerdict::holds(Property::Compact).with_note("finite space");
    if !counts_agree {
        verdict = verdict.with_note(format!(
            "finite space; {} minimal cyclic submodules in M# but {} simple submodules{}",
            minimal.len(),
            simple,
            if module.is_simple() {
                " (M is simple)"
            } else {
                ""
            }
        ));
    }
    CompactnessReport {
        verdict,
        minimal_cyclic_count: minimal.len(),
        simple_submodule_count: simple,
        counts_agree,
        minimal_cover_covers: cover.count() == snap.len(),
    }
}

/// Every finite space is Noetherian; a discrete one has only singleton
/// basic opens.
pub fn noetherian_finite(snap: &TopologySnapshot) -> PropertyVerdict {
    let note = if snap.isolated_points().len() == snap.len() {
        "finite space; all basic opens are singletons"
    } else {
        "finite space"
    };
    PropertyVerdict::holds(Property::Noetherian).with_note(note)
}

/// Finitely many open sets: a countable intersection of dense opens is a
/// finite one, and dense opens are closed under finite intersection.
pub fn baire_finite(snap: &TopologySnapshot) -> PropertyVerdict {
    let _ = snap;
    PropertyVerdict::holds(Property::Baire).with_note("finite space")
}

/// All verdicts for a snapshot. Subset searches are skipped above `bound`.
pub fn standard_verdicts(snap: &TopologySnapshot, bound: usize) -> Vec<PropertyVerdict> {
    let mut out = Vec::new();
    for axiom in Axiom::ALL {
        match check_separation_bounded(snap, axiom, bound) {
            Ok(v) => out.push(v),
            Err(e) => out.push(PropertyVerdict {
                property: axiom.property(),
                holds: false,
                witness: None,
                note: Some(format!("not evaluated: {e}")),
            }),
        }
    }
    out.push(check_nested(snap));
    let c = check_connectivity(snap);
    out.extend([c.connected, c.path_connected, c.ultraconnected]);
    out.push(verify_alexandrov_and_minimal_nbhd(snap, bound));
    out.push(PropertyVerdict::holds(Property::Compact).with_note("finite space"));
    out.push(noetherian_finite(snap));
    out.push(baire_finite(snap));
    out
}
