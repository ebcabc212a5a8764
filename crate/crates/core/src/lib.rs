//! Divisor topology on the associate classes of nonzero nongenerators of a
//! module, for finite modules over ℤ or a prime field and for three
//! infinite ℤ-modules (ℤ, ℚ and the Prüfer group `E(p)`).
//!
//! ```
//! use divtop::{build_topology, check_separation, Axiom, FiniteModule};
//!
//! let z12 = FiniteModule::cyclic(12).unwrap();
//! let d = build_topology(&z12);
//! assert_eq!(d.labels(0..d.len()), ["[2]", "[3]", "[4]", "[6]"]);
//!
//! let t1 = check_separation(&d, Axiom::T1).unwrap();
//! assert!(!t1.holds);
//! assert_eq!(t1.describe_witness(&d).unwrap(), "[2],[4]");
//! ```

pub mod algebra;
pub mod arith;
pub mod bitset;
pub mod construct;
pub mod error;
pub mod harness;
pub mod module;
pub mod notation;
pub mod ring;
pub mod symbolic;
pub mod topology;

pub use algebra::*;
pub use construct::{direct_sum, quotient_module, submodule_as_module, DirectSum, Quotient};
pub use error::{Error, Result};
pub use module::{Element, FiniteModule, PrimePower, Submodule};
pub use notation::ModuleSpec;
pub use ring::{IdealDescriptor, RingDescriptor, TrivialExtension};
pub use symbolic::{SymClass, SymbolicFamily};
pub use topology::*;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/divisor-topology.md")]
    pub struct DivisorTopology;
    #[doc = include_str!("../../../book/src/pseudo-simple.md")]
    pub struct PseudoSimple;
    #[doc = include_str!("../../../book/src/separation.md")]
    pub struct Separation;
    #[doc = include_str!("../../../book/src/symbolic.md")]
    pub struct Symbolic;
    #[doc = include_str!("../../../book/src/harness.md")]
    pub struct Harness;
    #[doc = include_str!("../../../book/src/formats.md")]
    pub struct Formats;
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
}
