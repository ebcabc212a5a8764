use std::fmt;

use serde::Serialize;

use super::TopologySnapshot;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Property {
    T0,
    T1,
    T2,
    Discrete,
    T3,
    T4,
    T5,
    Nested,
    Connected,
    PathConnected,
    Ultraconnected,
    Alexandrov,
    Compact,
    Noetherian,
    Baire,
}

impl Property {
    pub const ALL: [Property; 15] = [
        Property::T0,
        Property::T1,
        Property::T2,
        Property::Discrete,
        Property::T3,
        Property::T4,
        Property::T5,
        Property::Nested,
        Property::Connected,
        Property::PathConnected,
        Property::Ultraconnected,
        Property::Alexandrov,
        Property::Compact,
        Property::Noetherian,
        Property::Baire,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::T0 => "T0",
            Property::T1 => "T1",
            Property::T2 => "T2",
            Property::Discrete => "discrete",
            Property::T3 => "T3",
            Property::T4 => "T4",
            Property::T5 => "T5",
            Property::Nested => "nested",
            Property::Connected => "connected",
            Property::PathConnected => "path-connected",
            Property::Ultraconnected => "ultraconnected",
            Property::Alexandrov => "alexandrov",
            Property::Compact => "compact",
            Property::Noetherian => "noetherian",
            Property::Baire => "baire",
        }
    }

    pub fn parse(s: &str) -> Option<Property> {
        let s = s.trim();
        Property::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .or(match s.to_ascii_lowercase().as_str() {
                "hausdorff" => Some(Property::T2),
                "completely-normal" => Some(Property::T5),
                "normal" => Some(Property::T4),
                "regular" => Some(Property::T3),
                _ => None,
            })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence that a property fails, in class indices of a snapshot. The
/// meaning of each shape depends on the property it refutes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// T0: indistinguishable classes. T1: `second ∈ cl{first}`.
    /// Discrete: `second ∈ U_first`. Nested: incomparable classes.
    /// Ultraconnected: classes with disjoint closures.
    Pair { first: usize, second: usize },
    /// T2: `shared` lies in `U_first ∩ U_second`.
    SharedPoint {
        first: usize,
        second: usize,
        shared: usize,
    },
    /// T3: a point outside a closed set that cannot be separated from it.
    PointAndClosed { point: usize, closed: Vec<usize> },
    /// T4: disjoint closed sets. T5: separated sets. Connectedness: a split
    /// into two clopen pieces.
    SetPair { first: Vec<usize>, second: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropertyVerdict {
    pub fn holds(property: Property) -> Self {
        Self {
            property,
            holds: true,
            witness: None,
            note: None,
        }
    }

    pub fn fails(property: Property, witness: Option<Witness>) -> Self {
        Self {
            property,
            holds: false,
            witness,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Re-checks a failure witness against the divisibility relation alone,
    /// without the separation search that produced it. Holding verdicts and
    /// failures without a witness confirm trivially.
    pub fn confirm(&self, snap: &TopologySnapshot) -> bool {
        let Some(w) = &self.witness else {
            return true;
        };
        let n = snap.len();
        let d = |a: usize, b: usize| snap.divides(a, b);
        let common_divisor = |a: &[usize], b: &[usize]| {
            (0..n).any(|z| a.iter().any(|&x| d(z, x)) && b.iter().any(|&y| d(z, y)))
        };
        let up_closed = |s: &[usize]| s.iter().all(|&x| (0..n).all(|y| !d(x, y) || s.contains(&y)));
        match (self.property, w) {
            (Property::T0, Witness::Pair { first, second }) => {
                first != second && d(*first, *second) && d(*second, *first)
            }
            (Property::T1, Witness::Pair { first, second }) => first != second && d(*first, *second),
            (Property::Discrete, Witness::Pair { first, second }) => {
                first != second && d(*second, *first)
            }
            (Property::Nested, Witness::Pair { first, second }) => {
                !d(*first, *second) && !d(*second, *first)
            }
            (Property::Ultraconnected, Witness::Pair { first, second }) => {
                !(0..n).any(|z| d(*first, z) && d(*second, z))
            }
            (
                Property::T2,
                Witness::SharedPoint {
                    first,
                    second,
                    shared,
                },
            ) => first != second && d(*shared, *first) && d(*shared, *second),
            (Property::T3, Witness::PointAndClosed { point, closed }) => {
                !closed.contains(point) && up_closed(closed) && common_divisor(&[*point], closed)
            }
            (Property::T4, Witness::SetPair { first, second }) => {
                !first.is_empty()
                    && !second.is_empty()
                    && up_closed(first)
                    && up_closed(second)
                    && first.iter().all(|x| !second.contains(x))
                    && common_divisor(first, second)
            }
            (Property::T5, Witness::SetPair { first, second }) => {
                let separated = first
                    .iter()
                    .all(|&a| second.iter().all(|&b| !d(a, b) && !d(b, a)));
                separated && common_divisor(first, second)
            }
            (Property::Connected, Witness::SetPair { first, second }) => {
                !first.is_empty()
                    && !second.is_empty()
                    && first.len() + second.len() == n
                    && first
                        .iter()
                        .all(|&a| second.iter().all(|&b| !d(a, b) && !d(b, a)))
            }
            _ => false,
        }
    }

    /// Human-readable witness, using class labels of `snap`.
    pub fn describe_witness(&self, snap: &TopologySnapshot) -> Option<String> {
        let set = |s: &[usize]| format!("{{{}}}", snap.labels(s.iter().copied()).join(","));
        self.witness.as_ref().map(|w| match w {
            Witness::Pair { first, second } => format!("{},{}", snap.label(*first), snap.label(*second)),
            Witness::SharedPoint {
                first,
                second,
                shared,
            } => format!(
                "{},{} share {}",
                snap.label(*first),
                snap.label(*second),
                snap.label(*shared)
            ),
            Witness::PointAndClosed { point, closed } => format!("{} vs {}", snap.label(*point), set(closed)),
            Witness::SetPair { first, second } => format!("{} vs {}", set(first), set(second)),
        })
    }
}
