//! Exact invariants of cyclic quotient surface singularities 1/n(1, q).
//!
//! Everything flows from the Hirzebruch-Jung continued fraction of n/q:
//!
//! * [`hj`] computes the partial quotients b_t with the descending i and
//!   ascending j companion sequences, and checks their defining identities;
//! * [`reps`] splits the characters of Z/n into special and non-special
//!   ones and expands residues into digits over the i sequence;
//! * [`collection`] builds the module E_d attached to each non-special
//!   character, giving an exceptional collection;
//! * [`ext`] evaluates Hom-, Ext^1- and Ext^2-dimensions between members
//!   in closed form by counting trivial characters in kernels and
//!   cokernels of multiplication maps;
//! * [`oracle`] recomputes the same dimensions independently, from an
//!   explicit projective resolution and exact integer elimination;
//! * [`ktheory`] records the classes of the E_d as an upper unitriangular
//!   matrix over the non-special character basis;
//! * [`verify`] bundles every invariant into a named check list, and
//!   [`report`] carries the serializable output consumed by the command
//!   line tool and the browser demo.
//!
//! All arithmetic is exact; there is no floating point in the crate.

pub mod collection;
pub mod error;
pub mod ext;
pub mod hj;
pub mod ktheory;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod reps;
pub mod verify;

pub use collection::{build_collection, build_object, level_of, ExceptionalObject};
pub use error::{Error, Result};
pub use ext::{
    ext_computation, ext_dims_pair, mult_by_y_power, verify_exceptional, ExceptionalityReport,
    ExtComputation, ExtDims, QuotientModuleWithTwist,
};
pub use hj::{expand, inverse_mod, validate, HjExpansion, SingularityType};
pub use ktheory::{check_generation, k_matrix, precedes, KClassMatrix};
pub use oracle::{hom_complex, oracle_ext_dims, resolution_data, InvariantComplex, ResolutionData};
pub use report::{
    collection_report, digits_report, expansion_report, ext_table_report, specials_report,
    verify_report, CheckItem, DigitRow, ExtRow, InstanceReport, ObjectRow, SweepRow,
    ValidationReport,
};
pub use reps::{
    digits_of, dual_value, enumerate_valid_digits, is_special, is_valid_digits, non_specials_of,
    specials_of, CharIndex, DigitVector,
};
pub use verify::{coprime_pairs, sweep, verify_instance};
