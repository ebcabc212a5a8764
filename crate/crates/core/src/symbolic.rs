//! Closed-form models of three infinite ℤ-modules: ℤ, ℚ and the Prüfer
//! group `E(p)`, with finite windows for anything that needs enumeration.
//!
//! Classes are encoded canonically: a positive integer `n ≥ 2` for ℤ, a
//! reduced positive fraction for ℚ, and a level `k ≥ 1` for `[1/p^k + ℤ]` in
//! `E(p)`. Basic opens of a ℤ window are exact since divisors are bounded;
//! closures there are cut off by the window and labelled as such.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, gcd_u128, is_prime, lcm, next_prime_above};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::topology::{Property, PropertyVerdict, Representative, TopologySnapshot};

/// Largest ℤ window a snapshot will be built for.
pub const INTEGER_WINDOW_LIMIT: u64 = 20_000;
/// Largest numerator/denominator bound for a ℚ window.
pub const RATIONAL_BOUND_LIMIT: u64 = 200;
/// Deepest Prüfer level.
pub const PRUFER_DEPTH_LIMIT: u32 = 64;
/// Longest Noetherian chain produced.
pub const CHAIN_LENGTH_LIMIT: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum SymbolicFamily {
    Integers { window: u64 },
    Rationals { bound: u64 },
    Prufer { prime: u64, depth: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SymClass {
    Int(u64),
    Frac(u64, u64),
    Level(u32),
}

impl std::fmt::Display for SymClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SymClass::Int(n) => write!(f, "[{n}]"),
            SymClass::Frac(a, b) => write!(f, "[{a}/{b}]"),
            SymClass::Level(k) => write!(f, "[1/p^{k}]"),
        }
    }
}

impl SymClass {
    /// The reduced positive fraction `a/b`.
    pub fn frac(a: u64, b: u64) -> Result<SymClass> {
        if a == 0 || b == 0 {
            return Err(Error::Precondition("zero numerator or denominator".into()));
        }
        let g = gcd(a, b);
        Ok(SymClass::Frac(a / g, b / g))
    }
}

impl SymbolicFamily {
    pub fn integers(window: u64) -> Result<Self> {
        if window < 2 {
            return Err(Error::WindowTooSmall { window, needed: 2 });
        }
        Ok(Self::Integers { window })
    }

    pub fn rationals(bound: u64) -> Result<Self> {
        if bound == 0 {
            return Err(Error::WindowTooSmall { window: 0, needed: 1 });
        }
        Ok(Self::Rationals { bound })
    }

    pub fn prufer(prime: u64, depth: u32) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        if depth == 0 {
            return Err(Error::WindowTooSmall { window: 0, needed: 1 });
        }
        Ok(Self::Prufer { prime, depth })
    }

    pub fn name(&self) -> String {
        match self {
            Self::Integers { window } => format!("Z (window {window})"),
            Self::Rationals { bound } => format!("Q (bound {bound})"),
            Self::Prufer { prime, depth } => format!("E({prime}) (depth {depth})"),
        }
    }

    /// Whether `c` is a well-formed class of this family, ignoring the window.
    pub fn is_class(&self, c: SymClass) -> bool {
        match (self, c) {
            (Self::Integers { .. }, SymClass::Int(n)) => n >= 2,
            (Self::Rationals { .. }, SymClass::Frac(a, b)) => a > 0 && b > 0 && gcd(a, b) == 1,
            (Self::Prufer { .. }, SymClass::Level(k)) => k >= 1,
            _ => false,
        }
    }

    fn check(&self, c: SymClass) -> Result<()> {
        if self.is_class(c) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                element: c.to_string(),
                module: self.name(),
            })
        }
    }

    /// Classes inside the window, in canonical order.
    pub fn window_classes(&self) -> Vec<SymClass> {
        match *self {
            Self::Integers { window } => (2..=window).map(SymClass::Int).collect(),
            Self::Rationals { bound } => {
                let mut out: Vec<SymClass> = (1..=bound)
                    .flat_map(|b| (1..=bound).map(move |a| (a, b)))
                    .filter(|&(a, b)| gcd(a, b) == 1)
                    .map(|(a, b)| SymClass::Frac(a, b))
                    .collect();
                out.sort_by(|x, y| match (x, y) {
                    (SymClass::Frac(a, b), SymClass::Frac(c, d)) => {
                        (*a as u128 * *d as u128).cmp(&(*c as u128 * *b as u128)).then(b.cmp(d))
                    }
                    _ => unreachable!(),
                });
                out
            }
            Self::Prufer { depth, .. } => (1..=depth).map(SymClass::Level).collect(),
        }
    }
}

/// `a ∣ b` in the family: `b` is an integer multiple of `a`.
pub fn divides_symbolic(family: &SymbolicFamily, a: SymClass, b: SymClass) -> Result<bool> {
    family.check(a)?;
    family.check(b)?;
    Ok(match (a, b) {
        (SymClass::Int(x), SymClass::Int(y)) => y % x == 0,
        // (a2/b2) / (a1/b1) = a2·b1 / (b2·a1) must be an integer
        (SymClass::Frac(a1, b1), SymClass::Frac(a2, b2)) => {
            (a2 as u128 * b1 as u128).is_multiple_of(b2 as u128 * a1 as u128)
        }
        // 1/p^k = p^(n-k) · 1/p^n
        (SymClass::Level(n), SymClass::Level(k)) => k <= n,
        _ => unreachable!("checked above"),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SymbolicCompactness {
    pub verdict: PropertyVerdict,
    pub simple_submodule_count: usize,
    pub minimal_cyclic_count: usize,
    /// "Finitely many simple submodules" holds.
    pub criterion_says_compact: bool,
    pub agrees_with_criterion: bool,
    /// A finite family of basic opens together with a class none of them
    /// contains.
    pub refuted_cover: Option<(Vec<SymClass>, SymClass)>,
}

/// Compactness of the whole (infinite) space, with the simple-submodule
/// criterion evaluated alongside.
pub fn compactness_verdict_symbolic(family: &SymbolicFamily) -> Result<SymbolicCompactness> {
    let (verdict, simple, minimal, refuted) = match family {
        SymbolicFamily::Prufer { prime, .. } => (
            PropertyVerdict::holds(Property::Compact).with_note(format!(
                "only U_[1/{prime}] contains [1/{prime}] and U_[1/{prime}] = EC"
            )),
            1,
            1,
            None,
        ),
        SymbolicFamily::Integers { .. } | SymbolicFamily::Rationals { .. } => {
            let cover = family.window_classes();
            let outside = refute_finite_subcover(family, &cover)?;
            (
                PropertyVerdict::fails(Property::Compact, None).with_note(format!(
                    "{} lies outside the union of the {} window basic opens",
                    outside,
                    cover.len()
                )),
                0,
                0,
                Some((cover, outside)),
            )
        }
    };
    let criterion_says_compact = true; // zero or one simple submodule: finitely many
    Ok(SymbolicCompactness {
        agrees_with_criterion: criterion_says_compact == verdict.holds,
        verdict,
        simple_submodule_count: simple,
        minimal_cyclic_count: minimal,
        criterion_says_compact,
        refuted_cover: refuted,
    })
}

/// A class outside `⋃ U_c` over the given classes. For ℤ, the smallest prime
/// exceeding all of them; for ℚ, `q·∏ cᵢ` with `q` the smallest prime
/// exceeding every numerator and denominator.
///
/// For ℚ the quotient `cⱼ / (q·∏ cᵢ) = ∏_{i≠j} (bᵢ/aᵢ) / q` is never an
/// integer because `q` cannot divide any `bᵢ`. The variant `(1/q)·∏ cᵢ`
/// does not work: with a single open `c` it gives `c/q`, which divides `c`.
pub fn refute_finite_subcover(family: &SymbolicFamily, opens: &[SymClass]) -> Result<SymClass> {
    if opens.is_empty() {
        return Err(Error::Precondition("at least one basic open is required".into()));
    }
    for &c in opens {
        family.check(c)?;
    }
    let out = match family {
        SymbolicFamily::Prufer { .. } => {
            return Err(Error::UnsupportedFamily("E(p) is compact: every cover has a finite subcover"))
        }
        SymbolicFamily::Integers { .. } => {
            let max = opens
                .iter()
                .map(|c| match c {
                    SymClass::Int(n) => *n,
                    _ => unreachable!(),
                })
                .max()
                .expect("nonempty");
            SymClass::Int(next_prime_above(max))
        }
        SymbolicFamily::Rationals { .. } => {
            let max = opens
                .iter()
                .map(|c| match c {
                    SymClass::Frac(a, b) => *a.max(b),
                    _ => unreachable!(),
                })
                .max()
                .expect("nonempty");
            let q = next_prime_above(max);
            let (mut num, mut den) = (q as u128, 1u128);
            for c in opens {
                let SymClass::Frac(a, b) = *c else { unreachable!() };
                num = num.checked_mul(a as u128).ok_or(Error::Overflow("rational refuter"))?;
                den = den.checked_mul(b as u128).ok_or(Error::Overflow("rational refuter"))?;
                let g = gcd_u128(num, den);
                num /= g;
                den /= g;
            }
            let num = u64::try_from(num).map_err(|_| Error::Overflow("rational refuter"))?;
            let den = u64::try_from(den).map_err(|_| Error::Overflow("rational refuter"))?;
            SymClass::Frac(num, den)
        }
    };
    for &c in opens {
        if divides_symbolic(family, out, c)? {
            return Err(Error::Precondition(format!("refuter {out} divides {c}")));
        }
    }
    Ok(out)
}

/// The finite window of the space as a snapshot.
pub fn window_snapshot(family: &SymbolicFamily) -> Result<TopologySnapshot> {
    match *family {
        SymbolicFamily::Integers { window } => {
            if window > INTEGER_WINDOW_LIMIT {
                return Err(Error::BoundExceeded {
                    what: "integer window",
                    size: window,
                    bound: INTEGER_WINDOW_LIMIT,
                });
            }
            // class i is the integer i + 2
            let n = (window - 1) as usize;
            let mut multiples = vec![BitSet::new(n); n];
            let mut opens = vec![BitSet::new(n); n];
            for d in 2..=window {
                for m in (d..=window).step_by(d as usize) {
                    multiples[(d - 2) as usize].insert((m - 2) as usize);
                    opens[(m - 2) as usize].insert((d - 2) as usize);
                }
            }
            let labels = (2..=window).map(Representative::Integer).collect();
            let mut snap = TopologySnapshot::from_parts(family.name(), labels, multiples, opens);
            snap.closures_truncated = true;
            Ok(snap)
        }
        SymbolicFamily::Rationals { bound } => {
            if bound > RATIONAL_BOUND_LIMIT {
                return Err(Error::BoundExceeded {
                    what: "rational bound",
                    size: bound,
                    bound: RATIONAL_BOUND_LIMIT,
                });
            }
            let classes = family.window_classes();
            let labels = classes
                .iter()
                .map(|c| match *c {
                    SymClass::Frac(numerator, denominator) => Representative::Fraction {
                        numerator,
                        denominator,
                    },
                    _ => unreachable!(),
                })
                .collect();
            let mut snap = TopologySnapshot::from_relation(family.name(), labels, |i, j| {
                divides_symbolic(family, classes[i], classes[j]).expect("window classes are valid")
            });
            snap.opens_exact = false;
            snap.closures_truncated = true;
            Ok(snap)
        }
        SymbolicFamily::Prufer { prime, depth } => {
            if depth > PRUFER_DEPTH_LIMIT {
                return Err(Error::BoundExceeded {
                    what: "Prufer depth",
                    size: depth as u64,
                    bound: PRUFER_DEPTH_LIMIT as u64,
                });
            }
            let labels = (1..=depth)
                .map(|level| Representative::Prufer { prime, level })
                .collect();
            // level i+1 divides level j+1 iff j <= i
            let mut snap = TopologySnapshot::from_relation(family.name(), labels, |i, j| j <= i);
            snap.opens_exact = false;
            Ok(snap)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct T5Refutation {
    pub first: u64,
    pub second: u64,
    pub common: u64,
}

/// `([m·m1], [m·m2], [m])`: two separated singletons whose minimal
/// neighbourhoods both contain `[m]`, checked inside the ℤ window.
pub fn t5_refutation_witness_integers(m1: u64, m2: u64, m: u64, window: u64) -> Result<T5Refutation> {
    if m1 < 2 || m2 < 2 || m < 2 {
        return Err(Error::Precondition("classes of Z are integers >= 2".into()));
    }
    if m2.is_multiple_of(m1) || m1.is_multiple_of(m2) {
        return Err(Error::Precondition(format!("{m1} and {m2} are comparable under divisibility")));
    }
    let first = m.checked_mul(m1).ok_or(Error::Overflow("t5 witness"))?;
    let second = m.checked_mul(m2).ok_or(Error::Overflow("t5 witness"))?;
    let needed = first.max(second);
    if window < needed {
        return Err(Error::WindowTooSmall { window, needed });
    }
    let snap = window_snapshot(&SymbolicFamily::integers(window)?)?;
    let idx = |v: u64| (v - 2) as usize;
    let (a, b, c) = (idx(first), idx(second), idx(m));
    let separated = !snap.divides(a, b) && !snap.divides(b, a);
    let shared = snap.basic_open(c).is_subset(&snap.basic_open(a).intersection(snap.basic_open(b)));
    if !(separated && shared) {
        return Err(Error::Precondition("witness failed verification".into()));
    }
    Ok(T5Refutation { first, second, common: m })
}

/// Classes `[d]` with `d ∣ n`, `2 ≤ d`, by trial division.
pub fn integer_basic_open(n: u64) -> Vec<u64> {
    (2..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct NoetherianChain {
    pub generators: Vec<u64>,
    pub open_sizes: Vec<usize>,
}

/// `U_m ⊊ U_{2m} ⊊ … ⊊ U_{2^L m}` in ℤ, each inclusion checked on explicit
/// divisor sets.
pub fn integer_noetherian_chain(m: u64, length: u32) -> Result<NoetherianChain> {
    if m < 2 {
        return Err(Error::Precondition("chain base must be >= 2".into()));
    }
    if length > CHAIN_LENGTH_LIMIT {
        return Err(Error::BoundExceeded {
            what: "chain length",
            size: length as u64,
            bound: CHAIN_LENGTH_LIMIT as u64,
        });
    }
    let generators: Vec<u64> = (0..=length)
        .map(|k| m.checked_mul(1 << k).ok_or(Error::Overflow("noetherian chain")))
        .collect::<Result<_>>()?;
    let mut open_sizes = Vec::with_capacity(generators.len());
    let mut prev: Option<Vec<u64>> = None;
    for &g in &generators {
        let open = divisors_at_least_two(g);
        if let Some(p) = &prev {
            let strict = p.len() < open.len() && p.iter().all(|d| open.binary_search(d).is_ok());
            if !strict {
                return Err(Error::Precondition(format!("U_{g} does not strictly contain its predecessor")));
            }
        }
        open_sizes.push(open.len());
        prev = Some(open);
    }
    Ok(NoetherianChain {
        generators,
        open_sizes,
    })
}

fn divisors_at_least_two(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.retain(|&d| d >= 2);
    out.sort_unstable();
    out
}

/// Noetherian verdict for a symbolic family. Torsion-free ℤ and ℚ carry a
/// strictly ascending chain `U_{2^k m}`; the opens of `E(p)` form a chain
/// bounded above by `U_[1/p]`.
pub fn noetherian_report_symbolic(family: &SymbolicFamily, length: u32) -> Result<PropertyVerdict> {
    Ok(match family {
        SymbolicFamily::Integers { .. } => {
            let chain = integer_noetherian_chain(3, length)?;
            PropertyVerdict::fails(Property::Noetherian, None).with_note(format!(
                "strictly ascending chain U_{}",
                join(&chain.generators, " < U_")
            ))
        }
        SymbolicFamily::Rationals { .. } => {
            let gens: Vec<u64> = (0..=length).map(|k| 1u64 << k).collect();
            for w in gens.windows(2) {
                let (a, b) = (SymClass::Frac(w[0], 1), SymClass::Frac(w[1], 1));
                if !divides_symbolic(family, a, b)? || divides_symbolic(family, b, a)? {
                    return Err(Error::Precondition("rational chain is not strict".into()));
                }
            }
            PropertyVerdict::fails(Property::Noetherian, None)
                .with_note(format!("strictly ascending chain U_{}", join(&gens, " < U_")))
        }
        SymbolicFamily::Prufer { .. } => PropertyVerdict::holds(Property::Noetherian)
            .with_note("basic opens form a chain with largest member U_[1/p]"),
    })
}

fn join(v: &[u64], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityReport {
    pub window: u64,
    pub classes: usize,
    pub prime_classes: usize,
    /// The closure of the prime classes is the whole window.
    pub primes_dense: bool,
    /// The open set generated by squarefree classes is dense and contains
    /// every prime class.
    pub squarefree_open_dense: bool,
    pub squarefree_open_contains_primes: bool,
}

/// Density of the irreducible (prime) classes in a ℤ window.
pub fn integer_density_report(window: u64) -> Result<DensityReport> {
    let snap = window_snapshot(&SymbolicFamily::integers(window)?)?;
    let n = snap.len();
    let primes = BitSet::from_indices(n, (2..=window).filter(|&v| is_prime(v)).map(|v| (v - 2) as usize));
    let primes_dense = snap.up_closure(&primes).count() == n;
    let squarefree = BitSet::from_indices(n, (2..=window).filter(|&v| is_squarefree(v)).map(|v| (v - 2) as usize));
    let open = snap.down_closure(&squarefree);
    Ok(DensityReport {
        window,
        classes: n,
        prime_classes: primes.count(),
        primes_dense,
        squarefree_open_dense: snap.up_closure(&open).count() == n,
        squarefree_open_contains_primes: primes.is_subset(&open),
    })
}

fn is_squarefree(n: u64) -> bool {
    crate::arith::factorize(n).iter().all(|&(_, e)| e == 1)
}

#[derive(Debug, Clone, Serialize)]
pub struct RationalHausdorffReport {
    pub bound: u64,
    pub holds: bool,
    /// First pair of distinct window classes and a common divisor of both.
    pub witness: Option<(SymClass, SymClass, SymClass)>,
    /// Bound of the enlarged window holding every common divisor used.
    pub enlarged_bound: u64,
}

/// Every two classes `a/b`, `c/d` share the divisor `1/lcm(b, d)`, which sits
/// in both minimal neighbourhoods, so no window is Hausdorff.
pub fn rational_hausdorff_report(bound: u64) -> Result<RationalHausdorffReport> {
    let family = SymbolicFamily::rationals(bound)?;
    let classes = family.window_classes();
    let mut witness = None;
    let mut enlarged = bound;
    for (i, &x) in classes.iter().enumerate() {
        for &y in &classes[i + 1..] {
            let (SymClass::Frac(_, b), SymClass::Frac(_, d)) = (x, y) else {
                unreachable!()
            };
            let z = SymClass::Frac(1, lcm(b, d));
            if !(divides_symbolic(&family, z, x)? && divides_symbolic(&family, z, y)?) {
                return Err(Error::Precondition(format!("{z} does not divide {x} and {y}")));
            }
            enlarged = enlarged.max(lcm(b, d));
            witness.get_or_insert((x, y, z));
        }
    }
    Ok(RationalHausdorffReport {
        bound,
        holds: witness.is_none(),
        witness,
        enlarged_bound: enlarged,
    })
}
