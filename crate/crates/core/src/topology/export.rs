use std::fmt::Write;

use serde_json::{json, Value};

use super::verdict::PropertyVerdict;
use super::TopologySnapshot;

pub const TOPOLOGY_SCHEMA_VERSION: &str = "1.0.0";

/// Pairs `(i, j)` with `i ∣ j`, `i ≠ j` and nothing strictly between.
pub fn hasse_edges(snap: &TopologySnapshot) -> Vec<(usize, usize)> {
    let n = snap.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in snap.closure_of_class(i).iter().filter(|&j| j != i) {
            let covered = (0..n).any(|k| k != i && k != j && snap.divides(i, k) && snap.divides(k, j));
            if !covered {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Hasse diagram of the divisibility order, edges from divisor to multiple.
pub fn to_dot(snap: &TopologySnapshot) -> String {
    let mut out = String::from("digraph divisor_topology {\n");
    for c in &snap.classes {
        let _ = writeln!(out, "  n{} [label=\"class:{}\"];", c.index, c.representative);
    }
    for (i, j) in hasse_edges(snap) {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

pub fn to_json_value(snap: &TopologySnapshot, verdicts: &[PropertyVerdict]) -> Value {
    let classes: Vec<Value> = snap
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut v = json!({
                "index": c.index,
                "label": c.to_string(),
                "representative": c.representative,
            });
            if let Some(ms) = snap.members.get(i) {
                v["members"] = json!(ms.iter().map(|m| m.to_string()).collect::<Vec<_>>());
            }
            v
        })
        .collect();
    let relation: Vec<[usize; 2]> = (0..snap.len())
        .flat_map(|i| snap.closure_of_class(i).iter().map(move |j| [i, j]))
        .collect();
    let opens: Vec<Vec<usize>> = snap.basic_opens().iter().map(|u| u.to_vec()).collect();
    let verdicts: Vec<Value> = verdicts
        .iter()
        .map(|v| {
            let mut out = serde_json::to_value(v).expect("verdicts serialize");
            if let Some(w) = v.describe_witness(snap) {
                out["witness_labels"] = json!(w);
            }
            out
        })
        .collect();
    json!({
        "schema_version": TOPOLOGY_SCHEMA_VERSION,
        "module": snap.description,
        "opens_exact": snap.opens_exact,
        "closures_truncated": snap.closures_truncated,
        "classes": classes,
        "relation": relation,
        "basic_opens": opens,
        "verdicts": verdicts,
    })
}

pub fn to_json(snap: &TopologySnapshot, verdicts: &[PropertyVerdict]) -> String {
    serde_json::to_string_pretty(&to_json_value(snap, verdicts)).expect("json value serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;
    use crate::topology::{build_topology, standard_verdicts};

    #[test]
    fn z12_hasse() {
        let s = build_topology(&FiniteModule::cyclic(12).unwrap());
        let labelled: Vec<(String, String)> = hasse_edges(&s)
            .into_iter()
            .map(|(i, j)| (s.label(i), s.label(j)))
            .collect();
        let expect = [("[2]", "[4]"), ("[2]", "[6]"), ("[3]", "[6]")];
        assert_eq!(labelled.len(), 3);
        for (a, b) in expect {
            assert!(labelled.contains(&(a.into(), b.into())));
        }
        let dot = to_dot(&s);
        assert!(dot.contains("label=\"class:4\""));
    }

    #[test]
    fn z6_and_empty_graphs() {
        let s = build_topology(&FiniteModule::cyclic(6).unwrap());
        assert!(hasse_edges(&s).is_empty());
        assert_eq!(to_dot(&s).matches("class:").count(), 2);
        let e = build_topology(&FiniteModule::cyclic(7).unwrap());
        assert_eq!(to_dot(&e), "digraph divisor_topology {\n}\n");
    }

    #[test]
    fn json_keys() {
        let s = build_topology(&FiniteModule::cyclic(12).unwrap());
        let v = to_json_value(&s, &standard_verdicts(&s, 16));
        for key in ["classes", "relation", "basic_opens", "verdicts", "schema_version"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["classes"].as_array().unwrap().len(), 4);
        let t1 = v["verdicts"]
            .as_array()
            .unwrap()
            .iter()
            .find(|x| x["property"] == "T1")
            .unwrap();
        assert_eq!(t1["holds"], false);
        assert_eq!(t1["witness_labels"], "[2],[4]");
    }
}
