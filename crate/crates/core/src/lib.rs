//! Exact computation in the Artin groups `A[A_{n-1}]` and `A[D_n]`.
//!
//! - [`coxeter`]: the finite Coxeter groups as (signed) permutations.
//! - [`garside`]: words, Garside normal forms and the word problem.
//! - [`homs`]: homomorphisms between the two families as generator images.
//! - [`kernel`]: the kernel of the fold `D_n → A_{n-1}` and lifting of
//!   endomorphisms of the central quotient.
//! - [`homology`]: transvection matrices shadowing the Dehn twist representations.
//! - [`sweep`]: the identity families checked by the acceptance suite and `artin sweep`.

pub mod coxeter;
pub mod error;
pub mod garside;
pub mod homology;
pub mod homs;
pub mod kernel;
pub mod sweep;

pub use coxeter::{CoxElement, CoxType, Family, GenSet, Generator};
pub use error::{Error, Result};
