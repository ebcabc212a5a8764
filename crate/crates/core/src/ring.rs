//! Coefficient rings and their ideals.
//!
//! Modules over `Integers` and `PrimeField(p)` are handled symbolically: every
//! ideal of ℤ is `dℤ` and a field has only the zero and unit ideals. Trivial
//! extensions `ℤ_n ⋉ ℤ_m` are small enough to treat by brute force, so their
//! ideals are explicit element sets.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{gcd, is_prime};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Largest trivial extension (in ring elements) accepted by default.
pub const TRIVIAL_EXTENSION_BOUND: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RingDescriptor {
    Integers,
    PrimeField(u64),
    /// `ℤ_n ⋉ ℤ_m` with `m | n`.
    TrivialExtension { n: u64, m: u64 },
}

impl RingDescriptor {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integers => write!(f, "Z"),
            Self::PrimeField(p) => write!(f, "F_{p}"),
            Self::TrivialExtension { n, m } => write!(f, "Z_{n} x| Z_{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IdealDescriptor {
    /// The ideal `dℤ`; `0` is the zero ideal and `1` the whole ring.
    Integer(u64),
    /// An ideal of a prime field: either zero or the whole field.
    Field { zero: bool },
    /// Explicit element set of a trivial-extension ring, by element index.
    Explicit(BitSet),
}

impl IdealDescriptor {
    pub fn is_whole_ring(&self, ring: &RingDescriptor) -> bool {
        match (self, ring) {
            (Self::Integer(d), _) => *d == 1,
            (Self::Field { zero }, _) => !*zero,
            (Self::Explicit(set), RingDescriptor::TrivialExtension { n, m }) => {
                set.contains(TrivialExtension::new_unchecked(*n, *m).one())
            }
            (Self::Explicit(_), _) => false,
        }
    }
}

impl fmt::Display for IdealDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integer(0) => write!(f, "0"),
            Self::Integer(1) => write!(f, "Z"),
            Self::Integer(d) => write!(f, "{d}Z"),
            Self::Field { zero: true } => write!(f, "0"),
            Self::Field { zero: false } => write!(f, "F"),
            Self::Explicit(set) => write!(f, "<{} elements>", set.count()),
        }
    }
}

/// Maximality of an ideal.
///
/// ℤ: `dℤ` is maximal iff `d` is prime. A prime field: only the zero ideal.
/// Trivial extensions: brute force, `I ≠ R` and every element outside `I`
/// becomes a unit modulo `I`, so any strictly larger ideal is all of `R`.
pub fn is_maximal_ideal(ring: &RingDescriptor, ideal: &IdealDescriptor) -> bool {
    match (ring, ideal) {
        (RingDescriptor::Integers, IdealDescriptor::Integer(d)) => is_prime(*d),
        (RingDescriptor::PrimeField(_), IdealDescriptor::Field { zero }) => *zero,
        (RingDescriptor::TrivialExtension { n, m }, IdealDescriptor::Explicit(set)) => {
            TrivialExtension::new_unchecked(*n, *m).is_maximal(set)
        }
        _ => false,
    }
}

/// The ring `ℤ_n ⋉ ℤ_m` on pairs `(a, x)` with `(a,x)(b,y) = (ab, ay + bx)`.
///
/// Elements are indexed as `a * m + x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrivialExtension {
    n: u64,
    m: u64,
}

impl TrivialExtension {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        Self::with_bound(n, m, TRIVIAL_EXTENSION_BOUND)
    }

    pub fn with_bound(n: u64, m: u64, bound: u64) -> Result<Self> {
        if n < 2 || m < 2 {
            return Err(Error::InvalidModule(format!(
                "trivial extension needs n >= 2 and a nonzero module part, got n = {n}, m = {m}"
            )));
        }
        if !n.is_multiple_of(m) {
            return Err(Error::InvalidPair { n, m });
        }
        let size = n.saturating_mul(m);
        if size > bound {
            return Err(Error::BoundExceeded {
                what: "trivial extension",
                size,
                bound,
            });
        }
        Ok(Self { n, m })
    }

    fn new_unchecked(n: u64, m: u64) -> Self {
        Self { n, m }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::TrivialExtension { n: self.n, m: self.m }
    }

    pub fn order(&self) -> usize {
        (self.n * self.m) as usize
    }

    #[inline]
    pub fn pair(&self, idx: usize) -> (u64, u64) {
        let idx = idx as u64;
        (idx / self.m, idx % self.m)
    }

    #[inline]
    pub fn index(&self, a: u64, x: u64) -> usize {
        ((a % self.n) * self.m + x % self.m) as usize
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.index(1, 0)
    }

    #[inline]
    pub fn add(&self, i: usize, j: usize) -> usize {
        let (a, x) = self.pair(i);
        let (b, y) = self.pair(j);
        self.index(a + b, x + y)
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let (a, x) = self.pair(i);
        let (b, y) = self.pair(j);
        // a acts on ℤ_m through its residue mod m, valid since m | n.
        self.index(a * b, (a % self.m) * y + (b % self.m) * x)
    }

    /// Brute-force unit test: some `s` with `s·r = 1`.
    pub fn is_unit(&self, r: usize) -> bool {
        let one = self.one();
        (0..self.order()).any(|s| self.mul(s, r) == one)
    }

    /// `ann(r) = { s : s·r = 0 }`.
    pub fn annihilator(&self, r: usize) -> BitSet {
        BitSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&s| self.mul(s, r) == self.zero()),
        )
    }

    /// Brute-force maximality of an explicit ideal.
    pub fn is_maximal(&self, ideal: &BitSet) -> bool {
        let one = self.one();
        if ideal.contains(one) {
            return false;
        }
        let members: Vec<usize> = ideal.iter().collect();
        let size = self.order();
        let mut label = vec![usize::MAX; size];
        let mut reps = Vec::new();
        for x in 0..size {
            if label[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &i in &members {
                label[self.add(x, i)] = id;
            }
        }
        let one_label = label[one];
        let zero_label = label[self.zero()];
        reps.iter()
            .filter(|&&t| label[t] != zero_label)
            .all(|&t| reps.iter().any(|&s| label[self.mul(s, t)] == one_label))
    }

    /// `R` as a module over itself is pseudo simple: every nonzero nonunit has
    /// a maximal annihilator. Returns the first offending element otherwise.
    pub fn pseudo_simple_witness(&self) -> Option<(u64, u64)> {
        let mut cache: HashMap<BitSet, bool> = HashMap::new();
        for r in 1..self.order() {
            if self.is_unit(r) {
                continue;
            }
            let ann = self.annihilator(r);
            let maximal = *cache
                .entry(ann)
                .or_insert_with_key(|ann| self.is_maximal(ann));
            if !maximal {
                return Some(self.pair(r));
            }
        }
        None
    }

    pub fn is_pseudo_simple_ring(&self) -> bool {
        self.pseudo_simple_witness().is_none()
    }

    /// Evaluates, inside `ℤ_n` alone: `ℤ_n` is local, its unique maximal ideal
    /// equals `ann(ℤ_m)`, and `ann(r) = ann(ℤ_m)` for every nonzero nonunit `r`.
    ///
    /// Ideals of `ℤ_n` are written by their generator `d | n`.
    pub fn local_criterion(&self) -> bool {
        let n = self.n;
        let ideal_gen = |a: u64| gcd(a % n, n);
        let maximal: Vec<u64> = (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .filter(|&d| is_prime(d))
            .collect();
        if maximal.len() != 1 {
            return false;
        }
        // smallest positive a with a·ℤ_m = 0
        let ann_module = (1..=n).find(|a| a % self.m == 0).map(ideal_gen).unwrap_or(n);
        if maximal[0] != ann_module {
            return false;
        }
        (1..n)
            .filter(|&r| gcd(r, n) != 1)
            .all(|r| ideal_gen(n / gcd(r, n)) == ann_module)
    }
}

impl fmt::Display for TrivialExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{} x| Z_{}", self.n, self.m)
    }
}

/// Builds `ℤ_n ⋉ ℤ_m`.
pub fn trivial_extension_ring(n: u64, m: u64) -> Result<RingDescriptor> {
    TrivialExtension::new(n, m).map(|r| r.descriptor())
}

/// Brute-force pseudo-simplicity of a trivial-extension ring.
pub fn is_pseudo_simple_ring(ring: &RingDescriptor) -> Result<bool> {
    match ring {
        RingDescriptor::TrivialExtension { n, m } => {
            Ok(TrivialExtension::new(*n, *m)?.is_pseudo_simple_ring())
        }
        // a field has no nonzero nonunits
        RingDescriptor::PrimeField(_) => Ok(true),
        RingDescriptor::Integers => Ok(false),
    }
}

/// The local-ring criterion for trivial extensions.
pub fn local_criterion(ring: &RingDescriptor) -> Result<bool> {
    match ring {
        RingDescriptor::TrivialExtension { n, m } => Ok(TrivialExtension::new(*n, *m)?.local_criterion()),
        _ => Err(Error::UnsupportedFamily("non-trivial-extension ring")),
    }
}
