//! Combinatorics of alternating snakes of intervals: validation and prime
//! factorization, the determinant expressing an irreducible class through
//! standard classes, the lattice-path ℓ-weight model, and coefficient tables
//! for category O of `gl_r`.
//!
//! Polynomial and expansion coefficients are generic over [`Coefficient`];
//! the aliases below fix them to `BigInt` or machine integers.

pub mod det;
pub mod error;
pub mod gen;
pub mod interval;
pub mod json;
pub mod kl;
pub mod lweight;
pub mod path;
pub mod ring;
pub mod sample;
pub mod scalar;
pub mod snake;

pub use det::{
    build_matrix, det_laplace, det_laplace_matrix, det_leibniz, det_leibniz_matrix, minor_check, sigma_set,
    split_check, standard_expansion, Expansion, IntervalMatrix, SnakeMatrix,
};
pub use error::{Error, Result};
pub use gen::{gen_exmore, gen_mu_lambda};
pub use interval::{connected_pair, interval_in_rank, overlap, Interval};
pub use kl::{kl_table, lambda_mu, sigma_s, KlTable};
pub use lweight::{alpha_root, decompose_in_qplus, gamma_product, leq, LWeight, RootVector};
pub use path::{dominant_weights, ell_weight_set, enum_paths, non_crossing_tuples, snake_dim, Path};
pub use ring::{v_class, weyl_class, Monomial, RingElement};
pub use scalar::Coefficient;
pub use snake::{validate, AlternatingSnake, Direction, Violation, ViolationKind};

use num_bigint::BigInt;

/// Arbitrary-precision ring element.
pub type Class = RingElement<BigInt>;
pub type Class64 = RingElement<i64>;
pub type Class128 = RingElement<i128>;

pub type StandardExpansion = Expansion<BigInt>;
pub type StandardExpansion64 = Expansion<i64>;

pub type Table = KlTable<BigInt>;
pub type Table64 = KlTable<i64>;
