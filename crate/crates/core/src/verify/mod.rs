//! Identity registry and suite runner.

pub mod builders;
pub mod registry;

pub use builders::registry_bilateral_specs;
pub use registry::{registry, run_check, run_suite, CheckOutcome, IdentityCheck, IdentityReport};
