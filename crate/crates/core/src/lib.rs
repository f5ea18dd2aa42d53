//! Hilbert-Kunz functions and multiplicities of finitely generated
//! commutative binoids.
//!
//! A binoid is a commutative monoid with an absorbing element `∞`. This
//! crate parses presentations, completes them into confluent rewriting
//! systems, computes spectra, counts residue classes modulo Frobenius sums
//! and, for semipositive reduced binoids with cancellative integral
//! quotients, returns the Hilbert-Kunz multiplicity as an exact rational.
//!
//! ```
//! use binoid_hk::{ehk_of_presentation, parse_presentation, EhkOptions};
//!
//! let p = parse_presentation("binoid x,y | 3x = 2y").unwrap();
//! let e = ehk_of_presentation(&p, &EhkOptions::default()).unwrap();
//! assert_eq!(e.value.to_string(), "2/1");
//! ```

pub mod binoid;
pub mod cli;
pub mod error;
pub mod hk;
pub mod presentation;
pub mod rewrite;
pub mod spectrum;
pub mod structure;

pub use binoid::{Binoid, Limits};
pub use error::{Error, Result};
pub use hk::{
    frobenius_sum, hkf, hkf_table, maximal_ideal, residue_enumerate, verify_counting_identity,
    verify_primary, verify_smash_multiplicativity, HKSample, IdealSpec, NSetSpec, PrimaryStatus,
};
pub use presentation::{
    free_binoid, group_binoid, parse_presentation, smash, stanley_reisner, Presentation,
    SimplicialComplex, Word,
};
pub use rewrite::{complete, Element, RewriteSystem};
pub use spectrum::{is_reduced, spectrum, unit_group_order, PrimeIdeal, Reducedness, SpectrumReport};
pub use structure::{
    affine_binoid, difference_group, ehk, ehk_estimate, ehk_of_presentation, ehk_of_smash,
    toric_ehk, torsion_freefication, EhkOptions, EhkResult, EhkValue, LatticePoint, TraceStep,
};
