//! Verification and structural analysis over structure-constant tables.

pub mod automorphism;
pub mod jacobi;
pub mod killing;
pub mod linalg;
pub mod report;
pub mod roots;
pub mod scaled;
pub mod simplicity;
pub mod table;

pub use jacobi::{invariance_exhaustive, invariance_sampled, jacobi_exhaustive, jacobi_sampled};
pub use report::{Failure, Mode, VerificationReport};
pub use scaled::IntTable;
pub use table::{StructureEntry, StructureTable};
pub use automorphism::{check_automorphism, known_automorphisms, LinearMap};
pub use killing::{killing_form, proportionality_constant};
pub use linalg::signature;
pub use simplicity::simplicity_certificate;
pub use roots::{cartan_and_roots, RootDatum};
pub use table::GENERATOR_VERSION;
