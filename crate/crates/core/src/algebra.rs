//! Algebraic predicates on finite modules.
//!
//! Everything here works directly with elements and cyclic submodules; none
//! of it consults the divisor topology, so the topological checkers in
//! [`crate::topology`] stay an independent route to the same answers.

use std::collections::HashSet;

use crate::arith::is_prime;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::module::{sum_with_cyclic, Element, FiniteModule, Submodule};
use crate::ring::{is_maximal_ideal, IdealDescriptor, RingDescriptor};

/// Default cap on module order for full submodule enumeration.
pub const SUBMODULE_BOUND: u64 = 512;

/// Per-element additive order and associate-class representative.
///
/// Two elements are associates when they generate the same cyclic
/// submodule; the representative is the lexicographically least generator.
#[derive(Debug, Clone)]
pub struct AssociateTable {
    pub order_of: Vec<u64>,
    pub rep_of: Vec<usize>,
}

impl AssociateTable {
    pub fn new(module: &FiniteModule) -> Self {
        let size = module.size();
        let mut order_of = vec![0u64; size];
        let mut rep_of = vec![usize::MAX; size];
        for idx in 0..size {
            if rep_of[idx] != usize::MAX {
                continue;
            }
            let ord = module.order_idx(idx);
            let mut associates = Vec::new();
            let mut cur = idx;
            for k in 1..=ord {
                if crate::arith::gcd(k, ord) == 1 {
                    associates.push(cur);
                }
                cur = module.add_idx(cur, idx);
            }
            let rep = *associates.iter().min().expect("k = 1 is coprime");
            for a in associates {
                rep_of[a] = rep;
                order_of[a] = ord;
            }
        }
        Self { order_of, rep_of }
    }

    /// Representatives of all cyclic submodules, including `0` and generators.
    pub fn representatives(&self) -> impl Iterator<Item = usize> + '_ {
        self.rep_of
            .iter()
            .enumerate()
            .filter(|(i, r)| i == *r)
            .map(|(i, _)| i)
    }
}

pub(crate) fn cyclic_set(module: &FiniteModule, idx: usize) -> BitSet {
    let mut set = BitSet::new(module.size());
    let mut cur = 0;
    loop {
        if !set.insert(cur) {
            break;
        }
        cur = module.add_idx(cur, idx);
    }
    set
}

fn is_sharp(module: &FiniteModule, e: &Element) -> bool {
    let ord = module.additive_order(e);
    ord != 1 && ord != module.order()
}

/// Nonzero elements that do not generate the module, in lexicographic order.
pub fn sharp_elements(module: &FiniteModule) -> Vec<Element> {
    module.elements().filter(|e| is_sharp(module, e)).collect()
}

/// `Rm` as an explicit set.
pub fn cyclic_submodule(module: &FiniteModule, m: &Element) -> Submodule {
    let idx = module.index_of(m);
    let generators = if idx == 0 { Vec::new() } else { vec![m.clone()] };
    Submodule {
        elements: cyclic_set(module, idx),
        generators,
    }
}

/// `a ∣ b` ⟺ `b ∈ Ra`.
pub fn divides(module: &FiniteModule, a: &Element, b: &Element) -> bool {
    let mut cur = module.zero();
    for _ in 0..module.additive_order(a) {
        if &cur == b {
            return true;
        }
        cur = module.add(&cur, a);
    }
    false
}

pub fn are_associates(module: &FiniteModule, a: &Element, b: &Element) -> bool {
    divides(module, a, b) && divides(module, b, a)
}

/// Lexicographically least element generating the same cyclic submodule.
pub fn canonical_representative(module: &FiniteModule, m: &Element) -> Element {
    let ord = module.additive_order(m);
    (1..=ord)
        .filter(|&k| crate::arith::gcd(k, ord) == 1)
        .map(|k| module.scale(k, m))
        .min()
        .unwrap_or_else(|| module.zero())
}

pub fn annihilator(module: &FiniteModule, m: &Element) -> IdealDescriptor {
    match module.ring() {
        RingDescriptor::PrimeField(_) => IdealDescriptor::Field {
            zero: module.additive_order(m) != 1,
        },
        _ => IdealDescriptor::Integer(module.additive_order(m)),
    }
}

/// `ann(M)`.
pub fn module_annihilator(module: &FiniteModule) -> IdealDescriptor {
    match module.ring() {
        RingDescriptor::PrimeField(_) => IdealDescriptor::Field { zero: true },
        _ => IdealDescriptor::Integer(module.exponent()),
    }
}

/// Every nonzero nongenerator has a maximal annihilator.
pub fn is_pseudo_simple(module: &FiniteModule) -> bool {
    pseudo_simple_witness(module).is_none()
}

/// First nonzero nongenerator whose annihilator is not maximal.
pub fn pseudo_simple_witness(module: &FiniteModule) -> Option<Element> {
    let ring = module.ring();
    module
        .elements()
        .filter(|e| is_sharp(module, e))
        .find(|e| !is_maximal_ideal(&ring, &annihilator(module, e)))
}

/// Pseudo simplicity straight from the definition: `Rm` has no proper
/// nonzero submodule, i.e. every nonzero `x ∈ Rm` regenerates `Rm`.
pub fn is_pseudo_simple_by_definition(module: &FiniteModule) -> bool {
    let table = AssociateTable::new(module);
    let all = table.representatives().all(|m| {
        let ord = table.order_of[m];
        if ord == 1 || ord == module.order() {
            return true;
        }
        let rm = cyclic_set(module, m);
        let simple = rm.iter().filter(|&x| x != 0).all(|x| cyclic_set(module, x) == rm);
        simple
    });
    all
}

/// Greatest common divisor up to associates, brute force over `M`.
///
/// A common divisor `d` has `a, b ∈ Rd`; the greatest one is divisible by
/// every other. The result is the canonical representative of its class.
pub fn gcd_elements(module: &FiniteModule, a: &Element, b: &Element) -> Option<Element> {
    let ai = module.index_of(a);
    let bi = module.index_of(b);
    let table = AssociateTable::new(module);
    let common: Vec<(usize, BitSet)> = table
        .representatives()
        .map(|d| (d, cyclic_set(module, d)))
        .filter(|(_, rd)| rd.contains(ai) && rd.contains(bi))
        .collect();
    common
        .iter()
        .find(|(g, _)| common.iter().all(|(_, rd)| rd.contains(*g)))
        .map(|(g, _)| module.element_at(*g))
}

/// Least common multiple up to associates: a common multiple dividing every
/// other common multiple.
pub fn lcm_elements(module: &FiniteModule, a: &Element, b: &Element) -> Option<Element> {
    let ra = cyclic_set(module, module.index_of(a));
    let rb = cyclic_set(module, module.index_of(b));
    let table = AssociateTable::new(module);
    let common: Vec<usize> = table
        .representatives()
        .filter(|&c| ra.contains(c) && rb.contains(c))
        .collect();
    common
        .iter()
        .map(|&l| (l, cyclic_set(module, l)))
        .find(|(_, rl)| common.iter().all(|&c| rl.contains(c)))
        .map(|(l, _)| module.element_at(l))
}

/// All submodules, each once, ordered by size then element set.
pub fn submodules_all(module: &FiniteModule) -> Result<Vec<Submodule>> {
    submodules_all_bounded(module, SUBMODULE_BOUND)
}

pub fn submodules_all_bounded(module: &FiniteModule, bound: u64) -> Result<Vec<Submodule>> {
    if module.order() > bound {
        return Err(Error::BoundExceeded {
            what: "module order",
            size: module.order(),
            bound,
        });
    }
    let table = AssociateTable::new(module);
    let cyclic_gens: Vec<usize> = table.representatives().filter(|&r| r != 0).collect();
    let zero = Submodule::zero(module);
    let mut seen: HashSet<BitSet> = HashSet::from([zero.elements.clone()]);
    let mut all = vec![zero];
    let mut next = 0;
    while next < all.len() {
        let current = all[next].clone();
        next += 1;
        for &g in &cyclic_gens {
            if current.elements.contains(g) {
                continue;
            }
            let grown = sum_with_cyclic(module, &current.elements, g);
            if seen.insert(grown.clone()) {
                let mut generators = current.generators.clone();
                generators.push(module.element_at(g));
                all.push(Submodule {
                    elements: grown,
                    generators,
                });
            }
        }
    }
    all.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements.to_vec().cmp(&b.elements.to_vec()))
    });
    Ok(all)
}

/// Minimal nonzero submodules: the cyclic submodules of prime order.
pub fn simple_submodules(module: &FiniteModule) -> Vec<Submodule> {
    let table = AssociateTable::new(module);
    table
        .representatives()
        .filter(|&r| is_prime(table.order_of[r]))
        .map(|r| cyclic_submodule(module, &module.element_at(r)))
        .collect()
}

/// Sum of all simple submodules.
pub fn socle(module: &FiniteModule) -> Submodule {
    let gens: Vec<Element> = simple_submodules(module)
        .into_iter()
        .flat_map(|s| s.generators)
        .collect();
    Submodule::span(module, &gens)
}

/// `N` meets every nonzero cyclic submodule nontrivially.
pub fn is_essential(module: &FiniteModule, n: &Submodule) -> bool {
    let table = AssociateTable::new(module);
    let essential = table
        .representatives()
        .filter(|&x| x != 0)
        .all(|x| cyclic_set(module, x).iter().any(|y| y != 0 && n.elements.contains(y)));
    essential
}

/// For a finite module: the socle is essential (it is finitely generated
/// automatically).
pub fn is_finitely_cogenerated(module: &FiniteModule) -> bool {
    is_essential(module, &socle(module))
}

/// Every two nonzero nongenerators are comparable under divisibility.
pub fn is_uniserial(module: &FiniteModule) -> bool {
    let table = AssociateTable::new(module);
    let sharp: Vec<usize> = table
        .representatives()
        .filter(|&r| table.order_of[r] != 1 && table.order_of[r] != module.order())
        .collect();
    let sets: Vec<BitSet> = sharp.iter().map(|&r| cyclic_set(module, r)).collect();
    for i in 0..sharp.len() {
        for j in i + 1..sharp.len() {
            if !sets[i].contains(sharp[j]) && !sets[j].contains(sharp[i]) {
                return false;
            }
        }
    }
    true
}

/// Submodules totally ordered by inclusion, by full enumeration.
pub fn is_uniserial_by_submodules(module: &FiniteModule, bound: u64) -> Result<bool> {
    let subs = submodules_all_bounded(module, bound)?;
    Ok(subs.iter().enumerate().all(|(i, a)| {
        subs[i + 1..]
            .iter()
            .all(|b| a.elements.is_subset(&b.elements) || b.elements.is_subset(&a.elements))
    }))
}

/// Witness `(m1, m2, x)` against the (∗)-condition: distinct cyclic
/// submodules `Rm1 ≠ Rm2` of nongenerators with `Rm1 + Rm2 ⊆ Rx ≠ M`.
pub fn star_witness(module: &FiniteModule) -> Option<(Element, Element, Element)> {
    let table = AssociateTable::new(module);
    let full = module.order();
    let sharp: Vec<usize> = table
        .representatives()
        .filter(|&r| table.order_of[r] != 1 && table.order_of[r] != full)
        .collect();
    let covers: Vec<(usize, BitSet)> = table
        .representatives()
        .filter(|&x| table.order_of[x] != full)
        .map(|x| (x, cyclic_set(module, x)))
        .collect();
    for (i, &m1) in sharp.iter().enumerate() {
        let rm1 = cyclic_set(module, m1);
        for &m2 in &sharp[i + 1..] {
            let sum = sum_with_cyclic(module, &rm1, m2);
            if let Some((x, _)) = covers.iter().find(|(_, rx)| sum.is_subset(rx)) {
                return Some((
                    module.element_at(m1),
                    module.element_at(m2),
                    module.element_at(*x),
                ));
            }
        }
    }
    None
}

pub fn satisfies_star(module: &FiniteModule) -> bool {
    star_witness(module).is_none()
}

/// Whether `m` is irreducible on `M#`: any divisor of `m` inside `M#` is an
/// associate of `m`.
pub fn is_irreducible_on_sharp(module: &FiniteModule, m: &Element) -> Result<bool> {
    module.check(m)?;
    if !is_sharp(module, m) {
        return Err(Error::NotInSharp(m.to_string()));
    }
    Ok(irreducible_on_set(module, m, |e| is_sharp(module, e)))
}

/// Irreducible on `M` itself (divisors drawn from all of `M`).
pub fn is_irreducible_in_module(module: &FiniteModule, m: &Element) -> bool {
    irreducible_on_set(module, m, |_| true)
}

fn irreducible_on_set(module: &FiniteModule, m: &Element, in_set: impl Fn(&Element) -> bool) -> bool {
    let rm = cyclic_set(module, module.index_of(m));
    let mi = module.index_of(m);
    module
        .elements()
        .filter(|d| in_set(d))
        .filter(|d| cyclic_set(module, module.index_of(d)).contains(mi))
        .all(|d| rm.contains(module.index_of(&d)))
}

/// `(N : M)` as an ideal of the coefficient ring.
pub fn colon_module(module: &FiniteModule, n: &Submodule) -> IdealDescriptor {
    match module.ring() {
        RingDescriptor::PrimeField(_) => IdealDescriptor::Field {
            zero: n.order() != module.size(),
        },
        _ => {
            let exp = module.exponent();
            let gens = Submodule::whole(module).generators;
            let d = (1..=exp)
                .find(|&r| gens.iter().all(|g| n.contains(module, &module.scale(r, g))))
                .unwrap_or(exp);
            IdealDescriptor::Integer(d)
        }
    }
}

/// `(N : m) = { r : r·m ∈ N }`.
pub fn colon_element(module: &FiniteModule, n: &Submodule, m: &Element) -> IdealDescriptor {
    match module.ring() {
        RingDescriptor::PrimeField(_) => IdealDescriptor::Field {
            zero: !n.contains(module, m),
        },
        _ => {
            let ord = module.additive_order(m);
            let d = (1..=ord)
                .find(|&r| n.contains(module, &module.scale(r, m)))
                .unwrap_or(ord);
            IdealDescriptor::Integer(d)
        }
    }
}

/// `I·M` for an ideal of the coefficient ring.
fn ideal_times_module(module: &FiniteModule, ideal: &IdealDescriptor) -> BitSet {
    match ideal {
        IdealDescriptor::Integer(d) => BitSet::from_indices(
            module.size(),
            module.elements().map(|e| module.index_of(&module.scale(*d, &e))),
        ),
        IdealDescriptor::Field { zero: true } => BitSet::from_indices(module.size(), [0]),
        _ => BitSet::full(module.size()),
    }
}

/// Every submodule `N` equals `(N : M)·M`.
pub fn is_multiplication(module: &FiniteModule) -> Result<bool> {
    is_multiplication_bounded(module, SUBMODULE_BOUND)
}

pub fn is_multiplication_bounded(module: &FiniteModule, bound: u64) -> Result<bool> {
    let subs = submodules_all_bounded(module, bound)?;
    Ok(subs
        .iter()
        .all(|n| ideal_times_module(module, &colon_module(module, n)) == n.elements))
}

/// Every two-generated submodule is cyclic. For a finite module this is the
/// same as every finitely generated submodule being cyclic: induct on the
/// number of generators.
pub fn is_bezout(module: &FiniteModule) -> Result<bool> {
    if module.order() > SUBMODULE_BOUND {
        return Err(Error::BoundExceeded {
            what: "module order",
            size: module.order(),
            bound: SUBMODULE_BOUND,
        });
    }
    let table = AssociateTable::new(module);
    let reps: Vec<usize> = table.representatives().collect();
    for (i, &a) in reps.iter().enumerate() {
        let ra = cyclic_set(module, a);
        for &b in &reps[i + 1..] {
            let sum = sum_with_cyclic(module, &ra, b);
            let size = sum.count() as u64;
            if !sum.iter().any(|x| table.order_of[x] == size) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bezout by full enumeration: every submodule is cyclic.
pub fn is_bezout_by_enumeration(module: &FiniteModule, bound: u64) -> Result<bool> {
    let table = AssociateTable::new(module);
    Ok(submodules_all_bounded(module, bound)?.iter().all(|s| {
        let size = s.order() as u64;
        s.elements.iter().any(|x| table.order_of[x] == size)
    }))
}

/// `N` is a maximal submodule: no submodule strictly between `N` and `M`.
pub fn is_maximal_submodule(module: &FiniteModule, n: &Submodule) -> Result<bool> {
    if n.order() == module.size() {
        return Ok(false);
    }
    let subs = submodules_all(module)?;
    Ok(!subs.iter().any(|s| {
        s.order() != module.size() && s.order() > n.order() && n.elements.is_subset(&s.elements)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FiniteModule {
        FiniteModule::cyclic(n).unwrap()
    }

    fn e(c: &[u64]) -> Element {
        Element(c.to_vec())
    }

    fn z2z2() -> FiniteModule {
        FiniteModule::from_moduli(vec![2, 2]).unwrap()
    }

    #[test]
    fn sharp_of_z6_and_z12() {
        assert_eq!(sharp_elements(&z(6)), vec![e(&[2]), e(&[3]), e(&[4])]);
        assert!(sharp_elements(&z(7)).is_empty());
        // brute force: 0 < m < 12 with gcd(m, 12) != 1
        let expected: Vec<Element> = (1..12u64)
            .filter(|m| crate::arith::gcd(*m, 12) != 1)
            .map(|m| e(&[m]))
            .collect();
        assert_eq!(sharp_elements(&z(12)), expected);
        assert_eq!(
            expected,
            vec![e(&[2]), e(&[3]), e(&[4]), e(&[6]), e(&[8]), e(&[9]), e(&[10])]
        );
    }

    #[test]
    fn cyclic_submodules() {
        let m = z(6);
        assert_eq!(
            cyclic_submodule(&m, &e(&[2])).members(&m).collect::<Vec<_>>(),
            vec![e(&[0]), e(&[2]), e(&[4])]
        );
        let v = z2z2();
        assert_eq!(
            cyclic_submodule(&v, &e(&[1, 1])).members(&v).collect::<Vec<_>>(),
            vec![e(&[0, 0]), e(&[1, 1])]
        );
        let m = z(12);
        let brute: BitSet = BitSet::from_indices(12, (0..12u64).map(|r| (r * 8 % 12) as usize));
        assert_eq!(cyclic_submodule(&m, &e(&[8])).elements, brute);
        assert_eq!(brute.to_vec(), vec![0, 4, 8]);
    }

    #[test]
    fn divisibility_examples() {
        let m = z(12);
        assert!(divides(&m, &e(&[2]), &e(&[4])));
        assert!(!divides(&m, &e(&[4]), &e(&[2])));
        assert!(divides(&m, &e(&[5]), &e(&[5])));
        assert!(!divides(&z2z2(), &e(&[1, 0]), &e(&[0, 1])));
    }

    #[test]
    fn annihilators() {
        assert_eq!(annihilator(&z(6), &e(&[2])), IdealDescriptor::Integer(3));
        assert_eq!(annihilator(&z(6), &e(&[4])), IdealDescriptor::Integer(3));
        assert_eq!(annihilator(&z(6), &e(&[3])), IdealDescriptor::Integer(2));
        assert_eq!(annihilator(&z(12), &e(&[3])), IdealDescriptor::Integer(4));
        let v = FiniteModule::vector_space(5, 2).unwrap();
        assert_eq!(annihilator(&v, &e(&[1, 3])), IdealDescriptor::Field { zero: true });
        assert_eq!(annihilator(&v, &e(&[0, 0])), IdealDescriptor::Field { zero: false });
    }

    #[test]
    fn pseudo_simple_examples() {
        assert!(is_pseudo_simple(&z(6)));
        assert!(!is_pseudo_simple(&z(12)));
        assert!(is_pseudo_simple(&z2z2()));
        assert!(is_pseudo_simple(&z(7)));
        assert_eq!(pseudo_simple_witness(&z(12)), Some(e(&[2])));
        for m in [z(6), z(12), z2z2(), z(8), z(9), z(30)] {
            assert_eq!(is_pseudo_simple(&m), is_pseudo_simple_by_definition(&m), "{m}");
        }
    }

    #[test]
    fn gcd_and_lcm() {
        let m = z(12);
        let g = gcd_elements(&m, &e(&[4]), &e(&[6])).unwrap();
        assert!(are_associates(&m, &g, &e(&[2])));
        assert_eq!(g, e(&[2]));
        assert_eq!(gcd_elements(&m, &e(&[4]), &e(&[4])), Some(e(&[4])));
        // no element of Z2+Z2 generates both (1,0) and (0,1)
        assert_eq!(gcd_elements(&z2z2(), &e(&[1, 0]), &e(&[0, 1])), None);
        // R4 ∩ R6 = {0}: the least common multiple is 0
        assert_eq!(lcm_elements(&m, &e(&[4]), &e(&[6])), Some(e(&[0])));
        assert_eq!(lcm_elements(&m, &e(&[2]), &e(&[3])), Some(e(&[6])));
    }

    #[test]
    fn submodule_counts() {
        assert_eq!(submodules_all(&z(6)).unwrap().len(), 4);
        assert_eq!(submodules_all(&z(7)).unwrap().len(), 2);
        assert_eq!(submodules_all(&z2z2()).unwrap().len(), 5);
        // subspaces of F_2^3: 1 + 7 + 7 + 1
        let v = FiniteModule::vector_space(2, 3).unwrap();
        assert_eq!(submodules_all(&v).unwrap().len(), 16);
        assert!(matches!(
            submodules_all(&z(1024)),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn simple_submodules_and_socle() {
        let m = z(12);
        let simples = simple_submodules(&m);
        let mut orders: Vec<usize> = simples.iter().map(Submodule::order).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);
        assert_eq!(socle(&m).elements, cyclic_submodule(&m, &e(&[2])).elements);
        assert_eq!(simple_submodules(&z(25)).len(), 1);
        assert_eq!(simple_submodules(&FiniteModule::vector_space(2, 2).unwrap()).len(), 3);
        // agrees with minimal nonzero submodules from full enumeration
        for m in [z(12), z(36), z2z2(), FiniteModule::from_moduli(vec![4, 2]).unwrap()] {
            let subs = submodules_all(&m).unwrap();
            let minimal = subs
                .iter()
                .filter(|s| !s.is_zero())
                .filter(|s| {
                    !subs.iter().any(|t| {
                        !t.is_zero() && t.order() < s.order() && t.elements.is_subset(&s.elements)
                    })
                })
                .count();
            assert_eq!(minimal, simple_submodules(&m).len(), "{m}");
        }
    }

    #[test]
    fn essential_and_cogenerated() {
        let m = z(25);
        assert!(is_essential(&m, &cyclic_submodule(&m, &e(&[5]))));
        assert!(is_finitely_cogenerated(&z(6)));
        assert_eq!(socle(&z(6)).order(), 6);
        let v = z2z2();
        assert!(!is_essential(&v, &cyclic_submodule(&v, &e(&[1, 0]))));
    }

    #[test]
    fn uniserial_examples() {
        assert!(is_uniserial(&z(27)));
        assert!(is_uniserial(&z(4)));
        assert!(!is_uniserial(&z(6)));
        assert!(!is_uniserial(&z2z2()));
        for m in [z(27), z(6), z(12), z2z2(), z(16)] {
            assert_eq!(is_uniserial(&m), is_uniserial_by_submodules(&m, 512).unwrap());
        }
    }

    #[test]
    fn star_examples() {
        assert!(satisfies_star(&FiniteModule::vector_space(3, 2).unwrap()));
        assert!(satisfies_star(&z(15)));
        assert!(satisfies_star(&z(7)));
        let (m1, m2, x) = star_witness(&z(12)).unwrap();
        let m = z(12);
        assert!(divides(&m, &x, &m1) && divides(&m, &x, &m2));
        assert!(!are_associates(&m, &m1, &m2));
    }

    #[test]
    fn irreducibles() {
        assert!(is_irreducible_on_sharp(&z(6), &e(&[2])).unwrap());
        assert!(is_irreducible_on_sharp(&z(6), &e(&[4])).unwrap());
        assert!(is_irreducible_on_sharp(&z(6), &e(&[3])).unwrap());
        assert!(!is_irreducible_on_sharp(&z(12), &e(&[6])).unwrap());
        assert!(!is_irreducible_on_sharp(&z(27), &e(&[9])).unwrap());
        assert!(is_irreducible_on_sharp(&z(27), &e(&[3])).unwrap());
        assert_eq!(
            is_irreducible_on_sharp(&z(6), &e(&[1])),
            Err(Error::NotInSharp("1".into()))
        );
        assert!(is_irreducible_on_sharp(&z(6), &e(&[9])).is_err());
    }

    #[test]
    fn multiplication_and_bezout() {
        for n in 2..40 {
            assert!(is_multiplication(&z(n)).unwrap(), "Z_{n}");
            assert!(is_bezout(&z(n)).unwrap());
        }
        assert!(!is_multiplication(&z2z2()).unwrap());
        assert!(!is_bezout(&z2z2()).unwrap());
        assert!(is_bezout(&z(27)).unwrap());
    }

    #[test]
    fn bezout_two_generator_reduction_matches_enumeration() {
        for order in 2..=64u64 {
            for m in crate::harness::family::abelian_groups_of_order(order) {
                assert_eq!(
                    is_bezout(&m).unwrap(),
                    is_bezout_by_enumeration(&m, 64).unwrap(),
                    "{m}"
                );
            }
        }
    }

    #[test]
    fn colon_ideals() {
        let m = z(12);
        let n = cyclic_submodule(&m, &e(&[4]));
        assert_eq!(colon_module(&m, &n), IdealDescriptor::Integer(4));
        assert_eq!(colon_element(&m, &n, &e(&[2])), IdealDescriptor::Integer(2));
        assert_eq!(colon_element(&m, &n, &e(&[3])), IdealDescriptor::Integer(4));
    }
}
