//! Design numbers, classical designs and the ingredient catalog.

pub mod ingredients;
pub mod numbers;
pub mod sqs;
pub mod sts;
pub mod triangles;
pub mod triples;
pub mod verify;

pub use ingredients::{load_family, Catalog, IngredientKind, IngredientRecord, Provenance};
pub use numbers::{
    c_star, covering_number, lambda_value, mu_value, packing_number, weight_of, HalfInt, TripleSystemWeight,
};
pub use sqs::construct_sqs;
pub use sts::construct_sts;
pub use triples::{
    construct_max_packing, construct_optimal_covering, construct_packing_with_leave, min_weight_system, LeaveKind,
};
