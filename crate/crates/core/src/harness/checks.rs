//! One function per registered statement. Each returns a single case record
//! for one instance.

use crate::algebra::{
    cyclic_submodule, divides, gcd_elements, is_bezout, is_finitely_cogenerated, is_irreducible_in_module,
    is_irreducible_on_sharp, is_maximal_submodule, is_multiplication_bounded, is_pseudo_simple,
    is_pseudo_simple_by_definition, is_uniserial, is_uniserial_by_submodules, lcm_elements,
    module_annihilator, pseudo_simple_witness, satisfies_star, sharp_elements, star_witness,
    submodules_all_bounded,
};
use crate::arith::{factorize, is_prime};
use crate::construct::{
    apply_homomorphism, direct_sum, homomorphisms, quotient_module, submodule_as_module,
};
use crate::module::{FiniteModule, Submodule};
use crate::ring::{is_maximal_ideal, IdealDescriptor, TrivialExtension};
use crate::symbolic::{
    compactness_verdict_symbolic, divides_symbolic, integer_density_report, noetherian_report_symbolic,
    rational_hausdorff_report, t5_refutation_witness_integers, window_snapshot, SymbolicFamily,
    CHAIN_LENGTH_LIMIT,
};
use crate::topology::{
    build_topology, check_nested, check_separation_bounded, compactness_verdict, irreducible_classes,
    noetherian_finite, verify_alexandrov_and_minimal_nbhd, Axiom, PropertyVerdict, TopologySnapshot,
};

use super::family::Instance;
use super::report::{CaseRecord, Outcome};
use super::CheckOptions;

fn not_covered(i: &Instance) -> CaseRecord {
    CaseRecord::new(i.descriptor(), Outcome::OutOfHypothesis).note("instance kind not covered by this statement")
}

fn equivalence(i: &Instance, lhs: bool, rhs: bool) -> CaseRecord {
    let outcome = if lhs == rhs { Outcome::Pass } else { Outcome::Fail };
    CaseRecord::new(i.descriptor(), outcome).sides(lhs, rhs)
}

fn implication(i: &Instance, lhs: bool, rhs: bool) -> CaseRecord {
    let outcome = if !lhs || rhs { Outcome::Pass } else { Outcome::Fail };
    CaseRecord::new(i.descriptor(), outcome).sides(lhs, rhs)
}

/// Separation verdicts that never need a subset search.
fn axiom(snap: &TopologySnapshot, a: Axiom) -> PropertyVerdict {
    check_separation_bounded(snap, a, usize::MAX).expect("no subset search for this axiom")
}

fn with_verdict_witness(rec: CaseRecord, snap: &TopologySnapshot, v: &PropertyVerdict) -> CaseRecord {
    match v.describe_witness(snap) {
        Some(w) => rec.witness(format!("{}: {w}", v.property)),
        None => rec,
    }
}

/// Within the ℤ-module world of this crate a module is simple exactly when
/// its annihilator is a prime ideal `pℤ` (or zero over a field).
fn annihilator_is_maximal(m: &FiniteModule) -> bool {
    is_maximal_ideal(&m.ring(), &module_annihilator(m))
}

pub fn main_equivalence(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let ps = is_pseudo_simple(m);
    let star = satisfies_star(m);
    let snap = build_topology(m);
    let verdicts = [
        axiom(&snap, Axiom::Discrete),
        axiom(&snap, Axiom::T2),
        axiom(&snap, Axiom::T1),
    ];
    let agree = verdicts.iter().all(|v| v.holds == ps) && star == ps;
    if agree {
        let rec = CaseRecord::new(i.descriptor(), Outcome::Pass).sides(ps, verdicts[2].holds);
        return if ps { rec } else { with_verdict_witness(rec, &snap, &verdicts[2]) };
    }
    let confirmed = is_pseudo_simple_by_definition(m) == ps && verdicts.iter().all(|v| v.confirm(&snap));
    CaseRecord::new(i.descriptor(), Outcome::Fail)
        .sides(ps, verdicts[2].holds)
        .witness(format!(
            "pseudo_simple={ps}, star={star}, discrete={}, T2={}, T1={}",
            verdicts[0].holds, verdicts[1].holds, verdicts[2].holds
        ))
        .confirmed(confirmed)
}

/// `(ℤ_p)^n`: every primary factor is the same prime to the first power.
fn is_elementary(m: &FiniteModule) -> bool {
    let f = m.primary_factors();
    f.iter().all(|x| x.exponent == 1 && x.prime == f[0].prime)
}

fn is_two_distinct_primes(m: &FiniteModule) -> bool {
    let f = m.primary_factors();
    f.len() == 2 && f[0].prime != f[1].prime && f.iter().all(|x| x.exponent == 1)
}

fn is_prime_square(m: &FiniteModule) -> bool {
    let f = m.primary_factors();
    f.len() == 1 && f[0].exponent == 2
}

fn classification(i: &Instance, m: &FiniteModule, rhs: bool, shapes: &str) -> CaseRecord {
    let lhs = is_pseudo_simple(m);
    let rec = equivalence(i, lhs, rhs);
    if rec.outcome == Outcome::Pass {
        return rec;
    }
    let confirmed = is_pseudo_simple_by_definition(m) == lhs;
    let witness = match pseudo_simple_witness(m) {
        Some(e) => format!("{e} has a non-maximal annihilator, yet the group is {shapes}"),
        None => format!("every nonzero nongenerator has a maximal annihilator, yet the group is not {shapes}"),
    };
    rec.witness(witness).confirmed(confirmed)
}

pub fn fg_ps(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let rhs = is_two_distinct_primes(m) || is_elementary(m);
    classification(i, m, rhs, "Z_p + Z_q or (Z_p)^n")
}

pub fn fg_ps_corrected(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let rhs = is_two_distinct_primes(m) || is_elementary(m) || is_prime_square(m);
    classification(i, m, rhs, "Z_pq, Z_{p^2} or (Z_p)^n")
}

pub fn pseudo_zn(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    if !m.is_cyclic() {
        return not_covered(i).note("not cyclic");
    }
    let f = factorize(m.order());
    let rhs = matches!(f.as_slice(), [(_, 1)] | [(_, 2)] | [(_, 1), (_, 1)]);
    classification(i, m, rhs, "Z_n with n = p, p^2 or pq")
}

pub fn pseudo_simple_ann(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    equivalence(i, is_pseudo_simple_by_definition(m), is_pseudo_simple(m))
}

pub fn nested_uniserial(i: &Instance, o: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let (uniserial, how) = match is_uniserial_by_submodules(m, o.submodule_bound) {
        Ok(u) => (u, None),
        Err(_) => (is_uniserial(m), Some("uniserial decided by pairwise divisibility above the submodule bound")),
    };
    let snap = build_topology(m);
    let nested = check_nested(&snap);
    let mut rec = equivalence(i, uniserial, nested.holds);
    if let Some(h) = how {
        rec = rec.note(h);
    }
    if rec.outcome == Outcome::Fail {
        rec = with_verdict_witness(rec, &snap, &nested).confirmed(nested.confirm(&snap));
    }
    rec
}

pub fn isolated_irreducible(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let snap = build_topology(m);
    let isolated = snap.isolated_points();
    let irreducible = irreducible_classes(m, &snap);
    let mut rec = equivalence(i, true, isolated == irreducible);
    rec.lhs = None;
    rec.rhs = None;
    if rec.outcome == Outcome::Fail {
        let bad = (0..snap.len())
            .find(|c| isolated.contains(c) != irreducible.contains(c))
            .expect("sets differ");
        let really_isolated = snap.basic_open(bad).count() == 1;
        rec = rec
            .witness(format!(
                "{}: isolated={}, irreducible={}",
                snap.label(bad),
                isolated.contains(&bad),
                irreducible.contains(&bad)
            ))
            .confirmed(really_isolated == isolated.contains(&bad));
    }
    rec
}

pub fn irreducible_noncyclic(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    if m.is_cyclic() {
        return CaseRecord::new(i.descriptor(), Outcome::OutOfHypothesis).note("cyclic module");
    }
    let snap = build_topology(m);
    let isolated = snap.isolated_points();
    for c in &snap.classes {
        let crate::topology::Representative::Element(e) = &c.representative else {
            unreachable!("finite snapshot");
        };
        let irr = is_irreducible_in_module(m, e);
        if irr != isolated.contains(&c.index) {
            return equivalence(i, isolated.contains(&c.index), irr).witness(snap.label(c.index));
        }
    }
    equivalence(i, true, true)
}

pub fn discrete_irreducible(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let snap = build_topology(m);
    let all_irreducible = sharp_elements(m)
        .iter()
        .all(|e| is_irreducible_on_sharp(m, e).expect("sharp element"));
    let discrete = axiom(&snap, Axiom::Discrete);
    let rec = equivalence(i, discrete.holds, all_irreducible);
    if rec.outcome == Outcome::Fail {
        return with_verdict_witness(rec, &snap, &discrete).confirmed(discrete.confirm(&snap));
    }
    rec
}

pub fn hausdorff_star(i: &Instance, _: &CheckOptions) -> CaseRecord {
    match i {
        Instance::Module(m) => {
            let snap = build_topology(m);
            let t2 = axiom(&snap, Axiom::T2);
            let star = star_witness(m);
            let mut rec = equivalence(i, t2.holds, star.is_none());
            if let Some((a, b, x)) = star {
                rec = rec.witness(format!("R{a} + R{b} inside R{x}"));
            }
            if rec.outcome == Outcome::Fail {
                rec = rec.confirmed(t2.confirm(&snap));
            }
            rec
        }
        Instance::Symbolic(fam @ SymbolicFamily::Rationals { bound }) => {
            // (*) fails in ℚ: R(1/2) + R(1/3) = R(1/6) ≠ ℚ.
            let star = false;
            match rational_hausdorff_report(*bound) {
                Ok(r) => {
                    let mut rec = equivalence(i, r.holds, star).note(format!(
                        "{}; enlarged bound {}",
                        fam.name(),
                        r.enlarged_bound
                    ));
                    if let Some((a, b, z)) = r.witness {
                        rec = rec.witness(format!("{a},{b} share {z}"));
                    }
                    rec
                }
                Err(e) => not_covered(i).note(e.to_string()),
            }
        }
        _ => not_covered(i),
    }
}

fn bounded(snap: &TopologySnapshot, a: Axiom, o: &CheckOptions) -> Option<PropertyVerdict> {
    check_separation_bounded(snap, a, o.class_bound).ok()
}

fn over_class_bound(i: &Instance, snap: &TopologySnapshot, o: &CheckOptions) -> CaseRecord {
    CaseRecord::new(i.descriptor(), Outcome::OutOfHypothesis)
        .note(format!("{} classes exceed the class bound {}", snap.len(), o.class_bound))
}

pub fn t5_uniserial(i: &Instance, o: &CheckOptions) -> CaseRecord {
    let (snap, uniserial) = match i {
        Instance::Module(m) => (build_topology(m), is_uniserial(m)),
        // E(p) is uniserial: its submodules form a chain.
        Instance::Symbolic(f @ SymbolicFamily::Prufer { .. }) => match window_snapshot(f) {
            Ok(s) => (s, true),
            Err(e) => return not_covered(i).note(e.to_string()),
        },
        _ => return not_covered(i),
    };
    if !uniserial {
        return implication(i, false, true).note("not uniserial");
    }
    let Some(t5) = bounded(&snap, Axiom::T5, o) else {
        return over_class_bound(i, &snap, o);
    };
    let rec = implication(i, true, t5.holds);
    if rec.outcome == Outcome::Fail {
        return with_verdict_witness(rec, &snap, &t5).confirmed(t5.confirm(&snap));
    }
    rec
}

/// ℤ is torsion free, a multiplication module and not uniserial. Following
/// the argument with `m₁ = 2`, `m₂ = 3` and `x = m`, the singletons
/// `{[2m]}`, `{[3m]}` are separated while both minimal neighbourhoods
/// contain `[m]`.
pub fn t5_torsion_free(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Symbolic(SymbolicFamily::Integers { window }) = i else {
        return match i {
            Instance::Symbolic(SymbolicFamily::Rationals { .. }) => not_covered(i).note("Q is not a multiplication module"),
            Instance::Symbolic(SymbolicFamily::Prufer { .. }) => not_covered(i).note("E(p) is not torsion free"),
            _ => not_covered(i),
        };
    };
    let mut checked = Vec::new();
    for m in (2..).take_while(|m| 3 * m <= *window).take(50) {
        match t5_refutation_witness_integers(2 * m, 3 * m, m, *window) {
            Ok(w) => checked.push(w),
            Err(e) => {
                return implication(i, true, true)
                    .witness(format!("[{}],[{}] via [{m}]", 2 * m, 3 * m))
                    .note(e.to_string());
            }
        }
    }
    if checked.is_empty() {
        return not_covered(i).note("window too small for a witness");
    }
    implication(i, true, true)
        .witness(format!(
            "[{}],[{}] share [{}] in their minimal neighbourhoods",
            checked[0].first, checked[0].second, checked[0].common
        ))
        .note(format!("{} separated pairs verified", checked.len()))
}

pub fn completely_normal(i: &Instance, o: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let snap = build_topology(m);
    let (Some(t4), Some(t5)) = (bounded(&snap, Axiom::T4, o), bounded(&snap, Axiom::T5, o)) else {
        return over_class_bound(i, &snap, o);
    };
    let t1 = axiom(&snap, Axiom::T1);
    let ps = is_pseudo_simple(m);
    let five = t1.holds && t5.holds;
    let four = t1.holds && t4.holds;
    let mut rec = equivalence(i, ps, five && four);
    rec.rhs = Some(five);
    if five != four {
        rec.outcome = Outcome::Fail;
    }
    if rec.outcome == Outcome::Fail {
        rec = rec
            .witness(format!("T1={}, T4={}, T5={}", t1.holds, t4.holds, t5.holds))
            .confirmed(t1.confirm(&snap) && t4.confirm(&snap) && t5.confirm(&snap));
    } else if !ps && (t4.holds || t5.holds) {
        rec = rec.note(format!("T4={}, T5={} without T1", t4.holds, t5.holds));
    }
    rec
}

pub fn bezout_star(i: &Instance, o: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    if m.order() > o.submodule_bound {
        return not_covered(i).note("order above the submodule bound");
    }
    let lhs = is_bezout(m).expect("within bound") && satisfies_star(m);
    if !lhs {
        return implication(i, false, true);
    }
    for e in sharp_elements(m) {
        let rm = cyclic_submodule(m, &e);
        if !is_maximal_submodule(m, &rm).expect("within bound") {
            return implication(i, true, false).witness(format!("R{e} is not maximal"));
        }
    }
    let subs = submodules_all_bounded(m, o.submodule_bound).expect("within bound");
    for n in subs.iter().filter(|n| !n.is_zero() && n.order() != m.size()) {
        let q = (m.size() / n.order()) as u64;
        if !is_prime(q) {
            return implication(i, true, false).witness(format!("M/N has order {q} for N = <{}>", gens(n)));
        }
    }
    implication(i, true, true)
}

fn gens(n: &Submodule) -> String {
    n.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
}

pub fn gcd_intersection(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let snap = build_topology(m);
    let rep = |c: usize| snap.members[c][0].clone();
    let class_of = |e: &crate::module::Element| (0..snap.len()).find(|&c| snap.members[c].contains(e));
    let mut uses = 0usize;
    for a in 0..snap.len() {
        for b in a + 1..snap.len() {
            if let Some(g) = gcd_elements(m, &rep(a), &rep(b)).and_then(|g| class_of(&g)) {
                uses += 1;
                let meet = snap.basic_open(a).intersection(snap.basic_open(b));
                if &meet != snap.basic_open(g) {
                    return implication(i, true, false).witness(format!(
                        "U_{} ∩ U_{} != U_{}",
                        snap.label(a),
                        snap.label(b),
                        snap.label(g)
                    ));
                }
            }
            if let Some(l) = lcm_elements(m, &rep(a), &rep(b)).and_then(|l| class_of(&l)) {
                for n in 0..snap.len() {
                    let (ua, ub, un) = (snap.basic_open(a), snap.basic_open(b), snap.basic_open(n));
                    if ua.is_subset(un) && ub.is_subset(un) {
                        uses += 1;
                        if !snap.basic_open(l).is_subset(un) {
                            return implication(i, true, false).witness(format!(
                                "U_lcm({},{}) not inside U_{}",
                                snap.label(a),
                                snap.label(b),
                                snap.label(n)
                            ));
                        }
                    }
                }
            }
        }
    }
    implication(i, uses > 0, true).note(format!("{uses} gcd/lcm instances"))
}

/// The criterion is read with `m ∉ N`: for `m ∈ N` the coset is zero and
/// `(N:m)` is the whole ring, so a literal reading over all nonzero `m`
/// would fail for every nonzero `N`.
pub fn quotient_criterion(i: &Instance, o: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let Ok(subs) = submodules_all_bounded(m, o.submodule_bound) else {
        return not_covered(i).note("order above the submodule bound");
    };
    let ring = m.ring();
    for n in subs.iter().filter(|n| n.order() != m.size()) {
        let q = quotient_module(m, n).expect("proper submodule");
        let lhs = is_pseudo_simple(&q.module);
        let qsize = q.module.order();
        let rhs = m.elements().filter(|x| !n.contains(m, x)).all(|x| {
            let image = q.project(&x);
            if q.module.additive_order(&image) == qsize {
                return true;
            }
            let colon = colon(m, n, &x);
            is_maximal_ideal(&ring, &colon)
        });
        if lhs != rhs {
            return equivalence(i, lhs, rhs).witness(format!("N = <{}>", gens(n)));
        }
    }
    equivalence(i, true, true).note(format!("{} submodules", subs.len() - 1))
}

fn colon(m: &FiniteModule, n: &Submodule, x: &crate::module::Element) -> IdealDescriptor {
    crate::algebra::colon_element(m, n, x)
}

/// Only pairs where the conclusion could fail need the homomorphisms
/// listed: `M` pseudo simple but `N` not (look for a surjection), or the
/// reverse (look for an injection).
pub fn homo_stability(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Pair(a, b) = i else {
        return not_covered(i);
    };
    let (psa, psb) = (is_pseudo_simple(a), is_pseudo_simple(b));
    let want_onto = psa && !psb;
    let want_into = psb && !psa;
    if !want_onto && !want_into {
        return implication(i, false, true);
    }
    let homs = match homomorphisms(a, b) {
        Ok(h) => h,
        Err(e) => return not_covered(i).note(e.to_string()),
    };
    let count = homs.len();
    for h in homs {
        let mut image = crate::bitset::BitSet::new(b.size());
        for x in a.elements() {
            image.insert(b.index_of(&apply_homomorphism(b, &h, &x)));
        }
        let onto = image.count() == b.size();
        let into = image.count() == a.size();
        let imgs = h.iter().map(|y| y.to_string()).collect::<Vec<_>>().join(",");
        if want_onto && onto {
            return implication(i, true, false)
                .witness(format!("surjection with generator images [{imgs}]"))
                .confirmed(is_pseudo_simple_by_definition(a) && !is_pseudo_simple_by_definition(b));
        }
        if want_into && into {
            return implication(i, true, false)
                .witness(format!("injection with generator images [{imgs}]"))
                .confirmed(is_pseudo_simple_by_definition(b) && !is_pseudo_simple_by_definition(a));
        }
    }
    implication(i, false, true).note(format!("{count} homomorphisms, none of the critical kind"))
}

fn cfac_sub_failure(m: &FiniteModule, subs: &[Submodule]) -> Option<String> {
    subs.iter().filter(|n| !n.is_zero()).find_map(|n| {
        let sm = submodule_as_module(m, n).expect("nonzero submodule");
        (!is_pseudo_simple_by_definition(&sm)).then(|| format!("submodule <{}> ≅ {sm}", gens(n)))
    })
}

fn cfac_quot_failure(m: &FiniteModule, subs: &[Submodule]) -> Option<String> {
    subs.iter().filter(|n| n.order() != m.size()).find_map(|n| {
        let q = quotient_module(m, n).expect("proper submodule");
        (!is_pseudo_simple_by_definition(&q.module)).then(|| format!("M/<{}> ≅ {}", gens(n), q.module))
    })
}

fn cfac_module(i: &Instance, o: &CheckOptions, sub: bool, quot: bool) -> CaseRecord {
    match i {
        Instance::Module(m) => {
            if !is_pseudo_simple(m) {
                return implication(i, false, true);
            }
            let Ok(subs) = submodules_all_bounded(m, o.submodule_bound) else {
                return not_covered(i).note("order above the submodule bound");
            };
            let failure = (sub.then(|| cfac_sub_failure(m, &subs)).flatten())
                .or_else(|| quot.then(|| cfac_quot_failure(m, &subs)).flatten());
            match failure {
                Some(w) => implication(i, true, false).witness(w),
                None => implication(i, true, true),
            }
        }
        Instance::Pair(a, b) if sub && quot => {
            let Ok(sum) = direct_sum(a, b) else {
                return not_covered(i).note("ring mismatch");
            };
            let lhs = is_pseudo_simple(&sum.module);
            let rhs = is_pseudo_simple_by_definition(a) && is_pseudo_simple_by_definition(b);
            implication(i, lhs, rhs)
        }
        _ => not_covered(i),
    }
}

pub fn cfac(i: &Instance, o: &CheckOptions) -> CaseRecord {
    cfac_module(i, o, true, true)
}

pub fn cfac_submodules(i: &Instance, o: &CheckOptions) -> CaseRecord {
    cfac_module(i, o, true, false)
}

pub fn cfac_quotients(i: &Instance, o: &CheckOptions) -> CaseRecord {
    cfac_module(i, o, false, true)
}

pub fn tdir(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Pair(a, b) = i else {
        return not_covered(i);
    };
    if a.is_cyclic() && b.is_cyclic() {
        return CaseRecord::new(i.descriptor(), Outcome::OutOfHypothesis).note("both summands cyclic");
    }
    let Ok(sum) = direct_sum(a, b) else {
        return not_covered(i).note("ring mismatch");
    };
    let lhs = is_pseudo_simple(&sum.module);
    let same_ann = module_annihilator(a) == module_annihilator(b);
    let rhs = is_pseudo_simple(a) && is_pseudo_simple(b) && same_ann && annihilator_is_maximal(a);
    let mut rec = equivalence(i, lhs, rhs);
    if a.is_cyclic() || b.is_cyclic() {
        rec = rec.note("mixed: one summand cyclic");
    }
    if rec.outcome == Outcome::Fail {
        rec = rec.confirmed(is_pseudo_simple_by_definition(&sum.module) == lhs);
    }
    rec
}

pub fn tdir2(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Pair(a, b) = i else {
        return not_covered(i);
    };
    if !(a.is_cyclic() && b.is_cyclic()) {
        return CaseRecord::new(i.descriptor(), Outcome::OutOfHypothesis).note("a summand is not cyclic");
    }
    let Ok(sum) = direct_sum(a, b) else {
        return not_covered(i).note("ring mismatch");
    };
    let lhs = is_pseudo_simple(&sum.module);
    let simple = a.is_simple() && b.is_simple();
    let (ann_a, ann_b) = (module_annihilator(a), module_annihilator(b));
    let maximal = annihilator_is_maximal(a) && annihilator_is_maximal(b);
    let path_ii = ann_a == ann_b && maximal;
    let path_i = ann_a != ann_b && maximal && {
        let nonzero = |m: &FiniteModule| m.elements().filter(|e| e != &m.zero()).collect::<Vec<_>>();
        let full = sum.module.order();
        nonzero(a)
            .iter()
            .all(|x| nonzero(b).iter().all(|y| sum.module.additive_order(&sum.pair(x, y)) == full))
    };
    let rhs = simple && (path_i || path_ii);
    let mut rec = equivalence(i, lhs, rhs);
    if rhs {
        rec = rec.note(if path_i { "criterion (i)" } else { "criterion (ii)" });
    }
    if rec.outcome == Outcome::Fail {
        rec = rec.confirmed(is_pseudo_simple_by_definition(&sum.module) == lhs);
    }
    rec
}

pub fn ttri(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Trivial { n, m } = i else {
        return not_covered(i);
    };
    let ring = TrivialExtension::new(*n, *m).expect("enumerated pairs are valid");
    let witness = ring.pseudo_simple_witness();
    let rec = equivalence(i, witness.is_none(), ring.local_criterion());
    match (rec.outcome, witness) {
        (Outcome::Fail, Some((a, x))) => rec
            .witness(format!("ann(({a},{x})) is not maximal"))
            .confirmed(!ring.is_maximal(&ring.annihilator(ring.index(a, x)))),
        (Outcome::Fail, None) => rec.confirmed(true),
        _ => rec,
    }
}

pub fn tcom_counts(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    if m.is_simple() {
        return CaseRecord::new(i.descriptor(), Outcome::OutOfHypothesis)
            .note("simple module: M# is empty but M is itself a simple submodule");
    }
    let snap = build_topology(m);
    let r = compactness_verdict(m, &snap);
    let ok = r.counts_agree && r.minimal_cover_covers && r.verdict.holds;
    let mut rec = CaseRecord::new(i.descriptor(), if ok { Outcome::Pass } else { Outcome::Fail })
        .sides(r.minimal_cover_covers, r.counts_agree);
    if !ok {
        rec = rec.witness(format!(
            "{} minimal cyclic submodules, {} simple submodules",
            r.minimal_cyclic_count, r.simple_submodule_count
        ));
    }
    rec
}

pub fn tcom_symbolic(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Symbolic(f) = i else {
        return not_covered(i);
    };
    let r = match compactness_verdict_symbolic(f) {
        Ok(r) => r,
        Err(e) => return not_covered(i).note(e.to_string()),
    };
    let mut rec = CaseRecord::new(i.descriptor(), Outcome::Pass).sides(r.verdict.holds, r.criterion_says_compact);
    if let Some((cover, outside)) = &r.refuted_cover {
        let verified = cover
            .iter()
            .all(|&c| !divides_symbolic(f, *outside, c).unwrap_or(true));
        rec = rec
            .witness(format!("{outside} lies in none of the {} basic opens", cover.len()))
            .confirmed(verified);
        if !verified {
            rec.outcome = Outcome::Fail;
            return rec;
        }
    }
    if !r.agrees_with_criterion {
        rec.outcome = Outcome::Flagged;
        rec = rec.note(format!(
            "not compact, yet {} simple submodules (finitely many)",
            r.simple_submodule_count
        ));
    }
    rec
}

pub fn tfinitelycog(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let snap = build_topology(m);
    let compact = compactness_verdict(m, &snap).verdict.holds;
    implication(i, compact, is_finitely_cogenerated(m))
}

pub fn t0(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let snap = match i {
        Instance::Module(m) => build_topology(m),
        Instance::Symbolic(f) => match window_snapshot(f) {
            Ok(s) => s,
            Err(e) => return not_covered(i).note(e.to_string()),
        },
        _ => return not_covered(i),
    };
    let v = axiom(&snap, Axiom::T0);
    let rec = implication(i, true, v.holds);
    if v.holds {
        rec
    } else {
        with_verdict_witness(rec, &snap, &v).confirmed(v.confirm(&snap))
    }
}

pub fn closure_of_point(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Module(m) = i else {
        return not_covered(i);
    };
    let snap = build_topology(m);
    for c in 0..snap.len() {
        let single = crate::bitset::BitSet::from_indices(snap.len(), [c]);
        let closure = snap.closure_via_opens(&single);
        let rep = &snap.members[c][0];
        let multiples = crate::bitset::BitSet::from_indices(
            snap.len(),
            (0..snap.len()).filter(|&d| divides(m, rep, &snap.members[d][0])),
        );
        if closure != multiples {
            return implication(i, true, false).witness(snap.label(c));
        }
    }
    implication(i, true, true)
}

pub fn alexandrov(i: &Instance, o: &CheckOptions) -> CaseRecord {
    let snap = match i {
        Instance::Module(m) => build_topology(m),
        Instance::Symbolic(f) => match window_snapshot(f) {
            Ok(s) if s.len() <= 2000 => s,
            Ok(_) => return not_covered(i).note("window too large"),
            Err(e) => return not_covered(i).note(e.to_string()),
        },
        _ => return not_covered(i),
    };
    let v = verify_alexandrov_and_minimal_nbhd(&snap, o.class_bound);
    let mut rec = implication(i, true, v.holds);
    if let Some(n) = v.note {
        rec = rec.note(n);
    }
    rec
}

/// For finite ℤ-modules the hypothesis forces `M` simple: `ann(M)` prime
/// means `M = (ℤ_p)^k`, a multiplication module only for `k = 1`. So the
/// finite instances are the empty space. The ℤ window checks
/// that point closures of any two classes `a, b` with `ab` in the window meet.
pub fn ultraconnected(i: &Instance, o: &CheckOptions) -> CaseRecord {
    match i {
        Instance::Module(m) => {
            let Ok(mult) = is_multiplication_bounded(m, o.submodule_bound) else {
                return not_covered(i).note("order above the submodule bound");
            };
            let prime_ann = annihilator_is_maximal(m);
            if !(mult && prime_ann) {
                return CaseRecord::new(i.descriptor(), Outcome::OutOfHypothesis)
                    .note(format!("multiplication={mult}, ann(M) prime={prime_ann}"));
            }
            let snap = build_topology(m);
            let uc = crate::topology::check_connectivity(&snap).ultraconnected;
            let Some(t4) = bounded(&snap, Axiom::T4, o) else {
                return over_class_bound(i, &snap, o);
            };
            let mut rec = implication(i, true, uc.holds && t4.holds);
            if snap.is_empty() {
                rec = rec.note("empty space; connectedness is reported false by convention");
            }
            rec
        }
        Instance::Symbolic(f @ SymbolicFamily::Integers { window }) => {
            let snap = match window_snapshot(f) {
                Ok(s) => s,
                Err(e) => return not_covered(i).note(e.to_string()),
            };
            let limit = (*window as f64).sqrt() as u64;
            for a in 2..=limit {
                for b in a + 1..=limit {
                    let (ia, ib) = ((a - 2) as usize, (b - 2) as usize);
                    if snap.closure_of_class(ia).is_disjoint(snap.closure_of_class(ib)) {
                        return implication(i, true, false).witness(format!("[{a}],[{b}]"));
                    }
                }
            }
            implication(i, true, true).note(format!("pairs of classes up to {limit}"))
        }
        Instance::Symbolic(_) => not_covered(i).note("not a multiplication module"),
        _ => not_covered(i),
    }
}

pub fn noetherian(i: &Instance, _: &CheckOptions) -> CaseRecord {
    match i {
        Instance::Module(m) => {
            if let crate::ring::RingDescriptor::PrimeField(_) = m.ring() {
                let snap = build_topology(m);
                let v = noetherian_finite(&snap);
                let singletons = (0..snap.len()).all(|c| snap.basic_open(c).count() == 1);
                equivalence(i, true, v.holds && singletons)
            } else {
                CaseRecord::new(i.descriptor(), Outcome::OutOfHypothesis).note("not torsion free")
            }
        }
        Instance::Symbolic(f @ (SymbolicFamily::Integers { .. } | SymbolicFamily::Rationals { .. })) => {
            // neither simple nor a vector space over ℤ
            match noetherian_report_symbolic(f, CHAIN_LENGTH_LIMIT) {
                Ok(v) => {
                    let mut rec = equivalence(i, false, v.holds);
                    if let Some(n) = v.note {
                        rec = rec.note(n);
                    }
                    rec
                }
                Err(e) => not_covered(i).note(e.to_string()),
            }
        }
        Instance::Symbolic(_) => CaseRecord::new(i.descriptor(), Outcome::OutOfHypothesis).note("not torsion free"),
        _ => not_covered(i),
    }
}

pub fn density(i: &Instance, _: &CheckOptions) -> CaseRecord {
    let Instance::Symbolic(SymbolicFamily::Integers { window }) = i else {
        return not_covered(i).note("only Z is factorial here");
    };
    match integer_density_report(*window) {
        Ok(r) => implication(i, true, r.primes_dense && r.squarefree_open_contains_primes).note(format!(
            "{} classes, {} primes",
            r.classes, r.prime_classes
        )),
        Err(e) => not_covered(i).note(e.to_string()),
    }
}
