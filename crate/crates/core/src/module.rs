//! Finite modules over ℤ or a prime field, as direct sums of cyclic factors.
//!
//! A module is `ℤ_{n_1} ⊕ … ⊕ ℤ_{n_r}`. Over a prime field every factor
//! modulus equals the characteristic. Elements are residue vectors and are
//! indexed in mixed radix with the first coordinate most significant, so
//! index order is lexicographic order on coordinates.

use std::fmt;

use serde::Serialize;

use crate::arith::{factorize, gcd, is_prime, lcm, pow};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ring::RingDescriptor;

/// Modules above this order are rejected at construction; everything in the
/// crate works by enumerating elements.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

impl PrimePower {
    pub fn value(&self) -> u64 {
        pow(self.prime, self.exponent)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 1 {
            write!(f, "{}", self.prime)
        } else {
            write!(f, "{}^{}", self.prime, self.exponent)
        }
    }
}

/// A residue vector, one coordinate per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Element(pub Vec<u64>);

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [x] => write!(f, "{x}"),
            coords => {
                write!(f, "(")?;
                for (i, x) in coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    FiniteAbelian(Vec<PrimePower>),
    VectorSpace { prime: u64, dim: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteModule {
    ring: RingDescriptor,
    moduli: Vec<u64>,
    strides: Vec<u64>,
    order: u64,
}

impl FiniteModule {
    /// `ℤ_{n_1} ⊕ … ⊕ ℤ_{n_r}` as a ℤ-module.
    pub fn from_moduli(moduli: Vec<u64>) -> Result<Self> {
        Self::build(RingDescriptor::Integers, moduli)
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::from_moduli(vec![n])
    }

    /// Direct sum of prime-power cyclic groups, in the given order.
    pub fn abelian(factors: &[PrimePower]) -> Result<Self> {
        for f in factors {
            if !is_prime(f.prime) {
                return Err(Error::NotPrime(f.prime));
            }
            if f.exponent == 0 {
                return Err(Error::InvalidModule(format!("zero exponent on {}", f.prime)));
            }
        }
        Self::from_moduli(factors.iter().map(PrimePower::value).collect())
    }

    /// `F_p^d`.
    pub fn vector_space(p: u64, dim: u32) -> Result<Self> {
        let ring = RingDescriptor::prime_field(p)?;
        Self::build(ring, vec![p; dim as usize])
    }

    fn build(ring: RingDescriptor, moduli: Vec<u64>) -> Result<Self> {
        if let RingDescriptor::TrivialExtension { .. } = ring {
            return Err(Error::InvalidModule(
                "finite modules are over Z or a prime field".into(),
            ));
        }
        if let Some(bad) = moduli.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidModule(format!("factor Z_{bad} is trivial")));
        }
        if let RingDescriptor::PrimeField(p) = ring {
            if moduli.iter().any(|&n| n != p) {
                return Err(Error::InvalidModule(format!(
                    "vector space over F_{p} must have every factor of order {p}"
                )));
            }
        }
        let mut order: u64 = 1;
        for &n in &moduli {
            order = order
                .checked_mul(n)
                .filter(|&o| o <= ENUMERATION_LIMIT)
                .ok_or(Error::BoundExceeded {
                    what: "module order",
                    size: u64::MAX,
                    bound: ENUMERATION_LIMIT,
                })?;
        }
        if order < 2 {
            return Err(Error::InvalidModule("module must be nonzero".into()));
        }
        let mut strides = vec![1u64; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1];
        }
        Ok(Self {
            ring,
            moduli,
            strides,
            order,
        })
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn size(&self) -> usize {
        self.order as usize
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// Least common multiple of the factor orders.
    pub fn exponent(&self) -> u64 {
        self.moduli.iter().fold(1, |acc, &n| lcm(acc, n))
    }

    pub fn is_cyclic(&self) -> bool {
        self.exponent() == self.order
    }

    /// Simple ⟺ prime order, over ℤ and over a prime field alike.
    pub fn is_simple(&self) -> bool {
        is_prime(self.order)
    }

    /// Sorted primary decomposition; equal for isomorphic modules.
    pub fn primary_factors(&self) -> Vec<PrimePower> {
        let mut out: Vec<PrimePower> = self
            .moduli
            .iter()
            .flat_map(|&n| factorize(n))
            .map(|(prime, exponent)| PrimePower { prime, exponent })
            .collect();
        out.sort();
        out
    }

    pub fn shape(&self) -> Shape {
        match self.ring {
            RingDescriptor::PrimeField(p) => Shape::VectorSpace {
                prime: p,
                dim: self.moduli.len() as u32,
            },
            _ => Shape::FiniteAbelian(self.primary_factors()),
        }
    }

    /// True when `other` is isomorphic to `self` over the same ring.
    pub fn is_isomorphic(&self, other: &FiniteModule) -> bool {
        self.ring == other.ring && self.primary_factors() == other.primary_factors()
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    pub fn contains(&self, e: &Element) -> bool {
        e.0.len() == self.rank() && e.0.iter().zip(&self.moduli).all(|(x, n)| x < n)
    }

    pub fn check(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                element: e.to_string(),
                module: self.to_string(),
            })
        }
    }

    /// Reduces arbitrary integer coordinates into the module.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.rank() {
            return Err(Error::InvalidElement {
                element: format!("{coords:?}"),
                module: self.to_string(),
            });
        }
        Ok(Element(
            coords
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &n)| x.rem_euclid(n as i64) as u64)
                .collect(),
        ))
    }

    pub fn index_of(&self, e: &Element) -> usize {
        e.0.iter()
            .zip(&self.strides)
            .map(|(x, s)| x * s)
            .sum::<u64>() as usize
    }

    pub fn element_at(&self, idx: usize) -> Element {
        let idx = idx as u64;
        Element(
            self.strides
                .iter()
                .zip(&self.moduli)
                .map(|(s, n)| (idx / s) % n)
                .collect(),
        )
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size()).map(|i| self.element_at(i))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((x, y), n)| (x + y) % n)
                .collect(),
        )
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&self.moduli)
                .map(|(x, n)| (n - x) % n)
                .collect(),
        )
    }

    /// `k · a` for an integer scalar (scalars of a prime field act through
    /// their integer representatives).
    pub fn scale(&self, k: u64, a: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&self.moduli)
                .map(|(x, n)| ((k % n) as u128 * *x as u128 % *n as u128) as u64)
                .collect(),
        )
    }

    #[inline]
    pub fn add_idx(&self, i: usize, j: usize) -> usize {
        let (mut i, mut j) = (i as u64, j as u64);
        let mut out = 0u64;
        let mut stride = 1u64;
        for &n in self.moduli.iter().rev() {
            out += ((i % n + j % n) % n) * stride;
            stride *= n;
            i /= n;
            j /= n;
        }
        out as usize
    }

    /// Additive order; equals `|Rm|` for both coefficient rings.
    pub fn additive_order(&self, a: &Element) -> u64 {
        a.0.iter()
            .zip(&self.moduli)
            .fold(1, |acc, (&x, &n)| lcm(acc, n / gcd(x, n)))
    }

    pub fn order_idx(&self, i: usize) -> u64 {
        self.additive_order(&self.element_at(i))
    }
}

impl fmt::Display for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring {
            RingDescriptor::PrimeField(p) => write!(f, "F_{p}^{}", self.rank()),
            _ => {
                for (i, n) in self.moduli.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "Z_{n}")?;
                }
                Ok(())
            }
        }
    }
}

/// A submodule given by its element set (indices into the ambient module).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    pub elements: BitSet,
    pub generators: Vec<Element>,
}

impl Submodule {
    pub fn zero(module: &FiniteModule) -> Self {
        Self {
            elements: BitSet::from_indices(module.size(), [0]),
            generators: Vec::new(),
        }
    }

    pub fn whole(module: &FiniteModule) -> Self {
        let generators = (0..module.rank())
            .map(|i| {
                let mut c = vec![0; module.rank()];
                c[i] = 1;
                Element(c)
            })
            .collect();
        Self {
            elements: BitSet::full(module.size()),
            generators,
        }
    }

    /// Smallest submodule containing `gens`; redundant generators are dropped.
    pub fn span(module: &FiniteModule, gens: &[Element]) -> Self {
        let mut sub = Self::zero(module);
        for g in gens {
            let gi = module.index_of(g);
            if !sub.elements.contains(gi) {
                sub.elements = sum_with_cyclic(module, &sub.elements, gi);
                sub.generators.push(g.clone());
            }
        }
        sub
    }

    pub fn order(&self) -> usize {
        self.elements.count()
    }

    pub fn contains(&self, module: &FiniteModule, e: &Element) -> bool {
        self.elements.contains(module.index_of(e))
    }

    pub fn is_zero(&self) -> bool {
        self.elements.count() == 1
    }

    pub fn members<'a>(&'a self, module: &'a FiniteModule) -> impl Iterator<Item = Element> + 'a {
        self.elements.iter().map(|i| module.element_at(i))
    }
}

/// `S + R·g` for a submodule set `S` and element index `g`.
pub(crate) fn sum_with_cyclic(module: &FiniteModule, set: &BitSet, g: usize) -> BitSet {
    let mut out = set.clone();
    let base: Vec<usize> = set.iter().collect();
    let mut shift = g;
    while !set.contains(shift) {
        for &s in &base {
            out.insert(module.add_idx(s, shift));
        }
        shift = module.add_idx(shift, g);
    }
    out
}
