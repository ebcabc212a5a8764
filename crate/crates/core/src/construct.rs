//! Direct sums and quotient modules with explicit element maps.

use crate::arith::{factorize, mod_inverse};
use crate::error::{Error, Result};
use crate::module::{Element, FiniteModule, Submodule};
use crate::ring::RingDescriptor;

/// `M₁ ⊕ M₂` with coordinates concatenated.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub module: FiniteModule,
    pub left: FiniteModule,
    pub right: FiniteModule,
}

impl DirectSum {
    pub fn inject_left(&self, a: &Element) -> Element {
        let mut c = a.0.clone();
        c.resize(self.module.rank(), 0);
        Element(c)
    }

    pub fn inject_right(&self, b: &Element) -> Element {
        let mut c = vec![0; self.left.rank()];
        c.extend_from_slice(&b.0);
        Element(c)
    }

    pub fn pair(&self, a: &Element, b: &Element) -> Element {
        let mut c = a.0.clone();
        c.extend_from_slice(&b.0);
        Element(c)
    }

    pub fn project_left(&self, e: &Element) -> Element {
        Element(e.0[..self.left.rank()].to_vec())
    }

    pub fn project_right(&self, e: &Element) -> Element {
        Element(e.0[self.left.rank()..].to_vec())
    }
}

pub fn direct_sum(left: &FiniteModule, right: &FiniteModule) -> Result<DirectSum> {
    let module = match (left.ring(), right.ring()) {
        (RingDescriptor::Integers, RingDescriptor::Integers) => {
            let mut moduli = left.moduli().to_vec();
            moduli.extend_from_slice(right.moduli());
            FiniteModule::from_moduli(moduli)?
        }
        (RingDescriptor::PrimeField(p), RingDescriptor::PrimeField(q)) if p == q => {
            FiniteModule::vector_space(p, (left.rank() + right.rank()) as u32)?
        }
        _ => return Err(Error::RingMismatch),
    };
    Ok(DirectSum {
        module,
        left: left.clone(),
        right: right.clone(),
    })
}

/// `M/N`, presented as a sum of prime-power cyclic factors.
///
/// The presentation comes from a diagonal form `U·A·V = D` of the relation
/// matrix `A` (rows `n_i·e_i` and the generators of `N`): the map
/// `x ↦ x·V` carries `M/N` onto `⊕ ℤ/d_j`, and each `ℤ/d_j` is split into its
/// primary parts.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub module: FiniteModule,
    pub submodule: Submodule,
    ambient: FiniteModule,
    basis: Vec<Vec<i128>>,
    inverse: Vec<Vec<i128>>,
    diag: Vec<u64>,
    /// output coordinate -> (diagonal slot, prime-power modulus)
    slots: Vec<(usize, u64)>,
}

impl Quotient {
    pub fn ambient(&self) -> &FiniteModule {
        &self.ambient
    }

    /// The canonical projection `M → M/N`.
    pub fn project(&self, x: &Element) -> Element {
        let r = self.ambient.rank();
        let y: Vec<i128> = (0..r)
            .map(|j| (0..r).map(|i| x.0[i] as i128 * self.basis[i][j]).sum())
            .collect();
        Element(
            self.slots
                .iter()
                .map(|&(j, q)| y[j].rem_euclid(q as i128) as u64)
                .collect(),
        )
    }

    /// Lexicographically least element of the coset mapping to `q`.
    pub fn lift(&self, q: &Element) -> Element {
        let r = self.ambient.rank();
        let mut y = vec![0i128; r];
        for (j, &d) in self.diag.iter().enumerate() {
            if d <= 1 {
                continue;
            }
            // CRT over the primary slots of diagonal entry j
            let mut value: i128 = 0;
            let mut modulus: i128 = 1;
            for (k, &(slot, qk)) in self.slots.iter().enumerate() {
                if slot != j {
                    continue;
                }
                let qk = qk as i128;
                let target = q.0[k] as i128;
                let inv = mod_inverse(modulus, qk).expect("primary parts are coprime");
                let t = ((target - value).rem_euclid(qk) * inv).rem_euclid(qk);
                value += modulus * t;
                modulus *= qk;
            }
            y[j] = value;
        }
        let coords: Vec<i64> = (0..r)
            .map(|i| {
                let s: i128 = (0..r).map(|j| y[j] * self.inverse[j][i]).sum();
                s.rem_euclid(self.ambient.moduli()[i] as i128) as i64
            })
            .collect();
        let x = self.ambient.element(&coords).expect("rank matches");
        self.canonical_coset_rep(&x)
    }

    pub fn canonical_coset_rep(&self, x: &Element) -> Element {
        self.submodule
            .members(&self.ambient)
            .map(|n| self.ambient.add(x, &n))
            .min()
            .expect("submodule contains zero")
    }
}

pub fn quotient_module(module: &FiniteModule, n: &Submodule) -> Result<Quotient> {
    let r = module.rank();
    if n.order() == module.size() {
        return Err(Error::InvalidModule("quotient by the whole module is zero".into()));
    }
    let mut rows: Vec<Vec<i128>> = (0..r)
        .map(|i| {
            let mut row = vec![0i128; r];
            row[i] = module.moduli()[i] as i128;
            row
        })
        .collect();
    let gens = if n.generators.is_empty() && !n.is_zero() {
        Submodule::span(module, &n.members(module).collect::<Vec<_>>()).generators
    } else {
        n.generators.clone()
    };
    rows.extend(gens.iter().map(|g| g.0.iter().map(|&x| x as i128).collect()));
    let (diag, basis, inverse) = diagonalize(rows, r);

    let mut slots = Vec::new();
    for (j, &d) in diag.iter().enumerate() {
        for (p, k) in factorize(d) {
            slots.push((j, crate::arith::pow(p, k)));
        }
    }
    slots.sort_by_key(|&(j, q)| (q, j));
    let quotient = match module.ring() {
        RingDescriptor::PrimeField(p) => FiniteModule::vector_space(p, slots.len() as u32)?,
        _ => FiniteModule::from_moduli(slots.iter().map(|&(_, q)| q).collect())?,
    };
    Ok(Quotient {
        module: quotient,
        submodule: n.clone(),
        ambient: module.clone(),
        basis,
        inverse,
        diag,
        slots,
    })
}

/// Isomorphism type of a nonzero submodule, read off from how many of its
/// elements each `p^k` kills: `|N[p^k]| = p^(Σ min(k, eᵢ))`.
pub fn submodule_as_module(module: &FiniteModule, n: &Submodule) -> Result<FiniteModule> {
    if n.is_zero() {
        return Err(Error::InvalidModule("the zero submodule is not a module here".into()));
    }
    let size = n.order() as u64;
    if let RingDescriptor::PrimeField(p) = module.ring() {
        let dim = factorize(size)[0].1;
        return FiniteModule::vector_space(p, dim);
    }
    let orders: Vec<u64> = n.members(module).map(|x| module.additive_order(&x)).collect();
    let mut factors = Vec::new();
    for (p, total) in factorize(size) {
        // s[k] = log_p |N[p^k]|
        let mut s = vec![0u32];
        let mut k = 0;
        while s[k] < total {
            k += 1;
            let pk = crate::arith::pow(p, k as u32);
            let killed = orders.iter().filter(|&&o| pk.is_multiple_of(o)).count() as u64;
            s.push(factorize(killed).iter().find(|f| f.0 == p).map_or(0, |f| f.1));
        }
        // s[j] - s[j-1] factors have exponent >= j
        for j in 1..s.len() {
            let at_least_j = s[j] - s[j - 1];
            let at_least_next = if j + 1 < s.len() { s[j + 1] - s[j] } else { 0 };
            for _ in 0..at_least_j - at_least_next {
                factors.push(crate::module::PrimePower {
                    prime: p,
                    exponent: j as u32,
                });
            }
        }
    }
    factors.sort();
    FiniteModule::abelian(&factors)
}

/// Cap on the number of homomorphisms [`homomorphisms`] will list.
pub const HOMOMORPHISM_BOUND: u64 = 1 << 16;

/// Every module homomorphism `source → target`, as the images of the
/// coordinate generators. Over a prime field additive maps are linear.
pub fn homomorphisms(source: &FiniteModule, target: &FiniteModule) -> Result<Vec<Vec<Element>>> {
    if source.ring() != target.ring() {
        return Err(Error::RingMismatch);
    }
    let choices: Vec<Vec<Element>> = source
        .moduli()
        .iter()
        .map(|&n| target.elements().filter(|y| target.scale(n, y) == target.zero()).collect())
        .collect();
    let count = choices
        .iter()
        .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
        .unwrap_or(u64::MAX);
    if count > HOMOMORPHISM_BOUND {
        return Err(Error::BoundExceeded {
            what: "homomorphism count",
            size: count,
            bound: HOMOMORPHISM_BOUND,
        });
    }
    let mut out: Vec<Vec<Element>> = vec![Vec::new()];
    for c in &choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                c.iter().map(move |y| {
                    let mut next = prefix.clone();
                    next.push(y.clone());
                    next
                })
            })
            .collect();
    }
    Ok(out)
}

/// `φ(x) = Σ xᵢ·φ(eᵢ)`.
pub fn apply_homomorphism(target: &FiniteModule, images: &[Element], x: &Element) -> Element {
    x.0.iter()
        .zip(images)
        .fold(target.zero(), |acc, (&k, y)| target.add(&acc, &target.scale(k, y)))
}

/// Diagonalizes the integer matrix `a` (`rows × cols`, full column rank) by
/// unimodular row and column operations. Returns the absolute diagonal, the
/// accumulated column transform `V` and its inverse.
fn diagonalize(mut a: Vec<Vec<i128>>, cols: usize) -> (Vec<u64>, Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let rows = a.len();
    let identity = |n: usize| -> Vec<Vec<i128>> {
        (0..n)
            .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
            .collect()
    };
    let mut v = identity(cols);
    let mut vinv = identity(cols);

    for t in 0..cols.min(rows) {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                for row in v.iter_mut() {
                    row.swap(t, pj);
                }
                vinv.swap(t, pj);
            }
            let p = a[t][t];
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    for k in 0..cols {
                        vinv[t][k] += q * vinv[j][k];
                    }
                }
            }
            let clean = (t + 1..rows).all(|i| a[i][t] == 0) && (t + 1..cols).all(|j| a[t][j] == 0);
            if clean {
                break;
            }
        }
    }
    let diag = (0..cols).map(|t| a[t][t].unsigned_abs() as u64).collect();
    (diag, v, vinv)
}
