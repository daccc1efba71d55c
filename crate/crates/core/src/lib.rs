//! Generalized preprojective algebras of Dynkin type: Cartan data, Weyl groups,
//! a rewriting engine producing finite-dimensional algebras, module
//! representations with their homological invariants, and support τ-tilting
//! data built from Weyl-group ideals.
//!
//! `no_std` with `alloc`; IO and file formats live in the companion binary crate.

#![no_std]
// index loops mirror the matrix notation in the linear algebra
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod cartan;
pub mod field;
pub mod linalg;
pub mod module;
pub mod quiver;
pub mod rewrite;
pub mod tilting;
pub mod weyl;
