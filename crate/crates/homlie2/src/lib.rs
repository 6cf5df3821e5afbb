//! Exact computer algebra for Hom-Lie superalgebras over fields of
//! characteristic 2.
//!
//! A Hom-Lie superalgebra in characteristic 2 is a quadruple
//! (g, [.,.], s, alpha): a Z/2-graded space with a symmetric bracket, a
//! squaring s: g_odd -> g_even whose polar form induces the odd-odd bracket,
//! and an even twist alpha entering the Jacobi identities
//! ([s(x), alpha(y)] = [alpha(x), [x, y]]). The crate implements, with exact
//! GF(2^k) arithmetic throughout:
//!
//! - scalars ([`gf2k`]) and dense linear algebra ([`linalg`]);
//! - the core algebra type with axiom checking, morphisms, twisting, ideals,
//!   quotients and derived subalgebras ([`algebra`]);
//! - representations, semidirect products and the Ad_beta structure on
//!   gl(V) ([`reps`]);
//! - alpha^k-derivation spaces solved as exact linear systems
//!   ([`derivations`]);
//! - 2-structures on Hom-Lie algebras and queerification ([`restricted`]);
//! - the quadratic-cochain cohomology complex XC^n_alpha(g; M)
//!   ([`cohomology`]);
//! - order-by-order formal deformations with cohomological obstructions
//!   ([`deform`]);
//! - a catalog of built-in algebras and families plus a brute-force
//!   low-dimensional classifier ([`catalog`]);
//! - JSON serialization ([`io`]) and a scriptable command-line front end
//!   ([`cli`], binary `homlie2`).
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod deform;
pub mod derivations;
pub mod error;
pub mod gf2k;
pub mod io;
pub mod linalg;
pub mod reps;
pub mod restricted;
pub mod rng;

pub use error::{Error, Result};
pub use gf2k::{FieldSpec, Scalar};
pub use linalg::{Matrix, SubspaceBasis, Vector};
