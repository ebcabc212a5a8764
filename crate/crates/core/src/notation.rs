//! Compact textual module specs.
//!
//! | spec                | meaning                        |
//! |---------------------|--------------------------------|
//! | `Zn:12`             | `ℤ_12`                         |
//! | `ab:2^2x3`          | `ℤ_4 ⊕ ℤ_3`                    |
//! | `vs:p=3,d=2`        | `F_3^2`                        |
//! | `sym:Z,N=100`       | ℤ with window `2..=100`        |
//! | `sym:Q,B=10`        | ℚ with numerators/denominators `≤ 10` |
//! | `sym:E,p=2,D=8`     | `E(2)` to depth 8              |
//! | `triv:n=4,m=2`      | the ring `ℤ_4 ⋉ ℤ_2`           |

use std::fmt;
use std::str::FromStr;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::module::{FiniteModule, PrimePower};
use crate::ring::TrivialExtension;
use crate::symbolic::SymbolicFamily;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleSpec {
    Cyclic(u64),
    Abelian(Vec<PrimePower>),
    VectorSpace { prime: u64, dim: u32 },
    Symbolic(SymbolicFamily),
    Trivial { n: u64, m: u64 },
}

fn parse_err(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn number<T: FromStr>(token: &str) -> Result<T> {
    token
        .trim()
        .parse()
        .map_err(|_| parse_err(token, "expected a positive integer"))
}

/// Parses `k=v` pairs in the given order.
fn keyed<'a>(body: &'a str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != keys.len() {
        return Err(parse_err(body, format!("expected {}", keys.join(","))));
    }
    parts
        .iter()
        .zip(keys)
        .map(|(part, key)| match part.split_once('=') {
            Some((k, v)) if k.trim() == *key => Ok(v),
            _ => Err(parse_err(part, format!("expected `{key}=<value>`"))),
        })
        .collect()
}

impl FromStr for ModuleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| parse_err(s, "expected `<kind>:<parameters>`"))?;
        match kind {
            "Zn" => {
                let n: u64 = number(body)?;
                if n < 2 {
                    return Err(parse_err(body, "modulus must be at least 2"));
                }
                Ok(ModuleSpec::Cyclic(n))
            }
            "ab" => {
                let mut factors = Vec::new();
                for tok in body.split('x') {
                    let (p, k) = match tok.split_once('^') {
                        Some((p, k)) => (number::<u64>(p)?, number::<u32>(k)?),
                        None => (number::<u64>(tok)?, 1),
                    };
                    if !is_prime(p) {
                        return Err(parse_err(tok, format!("{p} is not prime")));
                    }
                    if k == 0 {
                        return Err(parse_err(tok, "exponent must be at least 1"));
                    }
                    factors.push(PrimePower { prime: p, exponent: k });
                }
                Ok(ModuleSpec::Abelian(factors))
            }
            "vs" => {
                let v = keyed(body, &["p", "d"])?;
                let prime: u64 = number(v[0])?;
                if !is_prime(prime) {
                    return Err(parse_err(v[0], format!("{prime} is not prime")));
                }
                let dim: u32 = number(v[1])?;
                if dim == 0 {
                    return Err(parse_err(v[1], "dimension must be at least 1"));
                }
                Ok(ModuleSpec::VectorSpace { prime, dim })
            }
            "sym" => {
                let (fam, rest) = body
                    .split_once(',')
                    .ok_or_else(|| parse_err(body, "expected `Z,N=..`, `Q,B=..` or `E,p=..,D=..`"))?;
                let family = match fam {
                    "Z" => {
                        let v = keyed(rest, &["N"])?;
                        SymbolicFamily::integers(number(v[0])?).map_err(|e| parse_err(v[0], e.to_string()))?
                    }
                    "Q" => {
                        let v = keyed(rest, &["B"])?;
                        SymbolicFamily::rationals(number(v[0])?).map_err(|e| parse_err(v[0], e.to_string()))?
                    }
                    "E" => {
                        let v = keyed(rest, &["p", "D"])?;
                        let p = number(v[0])?;
                        let d = number(v[1])?;
                        SymbolicFamily::prufer(p, d).map_err(|e| parse_err(rest, e.to_string()))?
                    }
                    other => return Err(parse_err(other, "unknown symbolic family (Z, Q or E)")),
                };
                Ok(ModuleSpec::Symbolic(family))
            }
            "triv" => {
                let v = keyed(body, &["n", "m"])?;
                let (n, m) = (number(v[0])?, number(v[1])?);
                TrivialExtension::new(n, m).map_err(|e| parse_err(body, e.to_string()))?;
                Ok(ModuleSpec::Trivial { n, m })
            }
            other => Err(parse_err(other, "unknown kind (Zn, ab, vs, sym, triv)")),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Cyclic(n) => write!(f, "Zn:{n}"),
            ModuleSpec::Abelian(factors) => {
                let parts: Vec<String> = factors.iter().map(|p| p.to_string()).collect();
                write!(f, "ab:{}", parts.join("x"))
            }
            ModuleSpec::VectorSpace { prime, dim } => write!(f, "vs:p={prime},d={dim}"),
            ModuleSpec::Symbolic(SymbolicFamily::Integers { window }) => write!(f, "sym:Z,N={window}"),
            ModuleSpec::Symbolic(SymbolicFamily::Rationals { bound }) => write!(f, "sym:Q,B={bound}"),
            ModuleSpec::Symbolic(SymbolicFamily::Prufer { prime, depth }) => {
                write!(f, "sym:E,p={prime},D={depth}")
            }
            ModuleSpec::Trivial { n, m } => write!(f, "triv:n={n},m={m}"),
        }
    }
}

impl ModuleSpec {
    /// The finite module, for the finite kinds.
    pub fn finite_module(&self) -> Result<Option<FiniteModule>> {
        Ok(match self {
            ModuleSpec::Cyclic(n) => Some(FiniteModule::cyclic(*n)?),
            ModuleSpec::Abelian(factors) => Some(FiniteModule::abelian(factors)?),
            ModuleSpec::VectorSpace { prime, dim } => Some(FiniteModule::vector_space(*prime, *dim)?),
            _ => None,
        })
    }

    /// Spec for a finite module: `Zn` when cyclic over ℤ, else its primary
    /// decomposition or vector-space form.
    pub fn of_module(module: &FiniteModule) -> ModuleSpec {
        match module.ring() {
            crate::ring::RingDescriptor::PrimeField(p) => ModuleSpec::VectorSpace {
                prime: p,
                dim: module.rank() as u32,
            },
            _ if module.rank() == 1 => ModuleSpec::Cyclic(module.order()),
            _ => ModuleSpec::Abelian(module.primary_factors()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!("Zn:12".parse::<ModuleSpec>().unwrap(), ModuleSpec::Cyclic(12));
        let ab: ModuleSpec = "ab:2^2x3".parse().unwrap();
        let m = ab.finite_module().unwrap().unwrap();
        assert_eq!(m.moduli(), &[4, 3]);
        assert_eq!(
            "vs:p=3,d=2".parse::<ModuleSpec>().unwrap(),
            ModuleSpec::VectorSpace { prime: 3, dim: 2 }
        );
        assert_eq!(
            "sym:E,p=2,D=8".parse::<ModuleSpec>().unwrap(),
            ModuleSpec::Symbolic(SymbolicFamily::Prufer { prime: 2, depth: 8 })
        );
        assert_eq!("triv:n=4,m=2".parse::<ModuleSpec>().unwrap(), ModuleSpec::Trivial { n: 4, m: 2 });
    }

    #[test]
    fn errors_name_the_token() {
        for (input, token) in [
            ("Zn:abc", "abc"),
            ("ab:4x3", "4"),
            ("vs:p=4,d=2", "4"),
            ("vs:q=3,d=2", "q=3"),
            ("sym:R,N=3", "R"),
            ("foo:1", "foo"),
            ("Zn:1", "1"),
        ] {
            match input.parse::<ModuleSpec>() {
                Err(Error::Parse { token: t, .. }) => assert_eq!(t, token, "{input}"),
                other => panic!("{input}: {other:?}"),
            }
        }
        assert!("triv:n=4,m=3".parse::<ModuleSpec>().is_err());
    }

    fn spec_strategy() -> impl Strategy<Value = ModuleSpec> {
        let primes = prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]);
        prop_oneof![
            (2u64..100_000).prop_map(ModuleSpec::Cyclic),
            prop::collection::vec((primes.clone(), 1u32..5), 1..5).prop_map(|v| {
                ModuleSpec::Abelian(v.into_iter().map(|(prime, exponent)| PrimePower { prime, exponent }).collect())
            }),
            (primes.clone(), 1u32..6).prop_map(|(prime, dim)| ModuleSpec::VectorSpace { prime, dim }),
            (2u64..10_000).prop_map(|window| ModuleSpec::Symbolic(SymbolicFamily::Integers { window })),
            (1u64..100).prop_map(|bound| ModuleSpec::Symbolic(SymbolicFamily::Rationals { bound })),
            (primes, 1u32..30).prop_map(|(prime, depth)| ModuleSpec::Symbolic(SymbolicFamily::Prufer { prime, depth })),
            (2u64..60, 2u64..60)
                .prop_filter("m divides n", |(n, m)| n % m == 0)
                .prop_map(|(n, m)| ModuleSpec::Trivial { n, m }),
        ]
    }

    proptest! {
        #[test]
        fn round_trip(spec in spec_strategy()) {
            let text = spec.to_string();
            let parsed: ModuleSpec = text.parse().unwrap();
            prop_assert_eq!(&parsed, &spec);
            prop_assert_eq!(parsed.to_string(), text);
        }
    }
}
