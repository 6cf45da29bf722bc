//! Supersinglet states and Kochen-Specker pseudo-telepathy games.
//!
//! The crate builds the `d`-party `d`-level supersinglet, verifies
//! Kochen-Specker sets, evaluates the associated `d`-party nonlocal game
//! exactly (quantum value 1, classical value by exhaustive search), and
//! certifies the supersinglet as the only state winning it perfectly by
//! solving the resulting linear constraints over the rationals.

pub mod error;
pub mod game;
pub mod io;
pub mod ks;
pub mod linalg;
pub mod selftest;
pub mod supersinglet;

pub use error::{Error, Result};
pub use ks::{Context, VectorSet};
pub use linalg::{ExactMatrix, ExactVector, Rational};
pub use supersinglet::{Permutation, SupersingletState};
