//! # rootvec
//!
//! Statements over a finite hypothesis space quantified by vectors whose
//! components are square roots of atom measures.
//!
//! | Module | Provides |
//! |--------|----------|
//! | [`lattice`] | [`HypothesisSpace`], [`Statement`] with join, meet, complement, implication |
//! | [`quantify`] | [`Measure`], [`SqrtVector`], inclusion-exclusion joins |
//! | [`bival`] | `P(x \| y) = v(x)·v(y) / \|v(y)\|²` and its classical oracle |
//! | [`infogeo`] | Bhattacharyya, Hellinger, Fisher-Rao distance, Fisher information |
//! | [`prior`] | determinant volume and the inverse-volume (Dirichlet ½) prior |
//!
//! ```
//! use rootvec::{bival, classical_conditional, HypothesisSpace, Measure};
//!
//! let space = HypothesisSpace::new(["a1", "a2", "a3"]).unwrap();
//! let m = Measure::new(&space, vec![0.2, 0.3, 0.5]).unwrap();
//! let a1 = space.atom("a1").unwrap();
//! let context = a1.join(&space.atom("a2").unwrap()).unwrap();
//!
//! let p = bival(&m, &a1, &context).unwrap();
//! assert!((p - 0.4).abs() < 1e-15);
//! assert!((p - classical_conditional(&m, &a1, &context).unwrap()).abs() < 1e-15);
//! ```
//!
//! Only the real, nonnegative branch of the square root is used. Complex
//! amplitudes are outside the scope of this crate.

pub mod bival;
pub mod error;
pub mod infogeo;
pub mod lattice;
pub mod prior;
pub mod quantify;

pub use bival::{bival, classical_conditional, project};
pub use error::{Error, Result};
pub use infogeo::{
    bhattacharyya, fisher_information, fisher_rao_distance, hellinger, Bernoulli, FisherMatrix,
    FnFamily, Multinomial, ParametricFamily, DEFAULT_STEP,
};
pub use lattice::{HypothesisSpace, Statement};
pub use prior::{
    prior_density, prior_log_density, prior_log_normalizer, prior_normalized_log_density,
    prior_normalizer, volume,
};
pub use quantify::{dot, norm_squared, sqrt_vector, vector_join, Measure, SqrtVector};
