//! Configuration builders and exact verifiers for the diametral quadrilateral
//! theorem, its shadows, the bisector theorem and the simplex theorem.

mod bisectors;
mod diametral;
mod mutation;
mod euclid;
mod fuzz;
mod report;
mod shadows;
mod simplex;

pub use diametral::{build_diametral, verify_midpoint_theorem, Degenerate, DiametralConfig};
pub use report::{format_witness, Check, Outcome, Report};
pub use euclid::{verify_euclidean_proof_steps, EuclideanWitness};
pub use bisectors::{bisector_figure, check_bisectors, verify_bisectors, BisectorFigure};
pub use shadows::{build_shadow, check_shadow, shadow_admits, shadow_classify, shadow_feet, verify_shadow, ShadowFigure, ShadowKind};
pub use simplex::{format_vector, simplex_derive, solve, verify_simplex, SimplexConfig, Vector};
pub use mutation::{bisector_mutations, euclidean_step_mutations, midpoint_theorem_mutations, perturb};
pub use mutation::{shadow_mutations, simplex_mutations, MutationOutcome};
pub use fuzz::{check_config, fuzz_configs, fuzz_configs_with, sample_diametral, sample_simplex};
pub use fuzz::{Counterexample, FuzzOptions, FuzzReport, FuzzTarget, Sampler, Tally};
