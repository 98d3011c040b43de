//! Exact finite-level arithmetic behind trace bounds for supercuspidal
//! types of `GL_n` (`n` prime) over an equal-characteristic local field
//! `F_q((t))`, and the global multiplicity lower bound built on them.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure
//! computation; IO, the command-line front end and parallel sweeps live in
//! the companion `typecount` crate.
//!
//! Layout, bottom-up:
//!
//! * [`field`], [`poly`], [`matrix`]: finite fields with log/exp tables,
//!   polynomials and matrices over generic commutative rings.
//! * [`cyclotomic`] and [`towerfield`]: exact cyclotomic integers and the
//!   tower `F_q ⊂ F_{q^n}` with its characters.
//! * [`localring`]: truncated rings `O_F/t^k`, `O_E/p_E^k` and Hensel lifting.
//! * [`projcensus`]: the coset models `X_k` and fixed-point censuses.
//! * [`greenchar`]: cuspidal characters of `GL_n(F_q)`.
//! * [`simpletypes`]: positive-depth type data, the commutator pairing and
//!   the assembled trace bounds.
//! * [`archweyl`]: weights, Weyl dimensions and Schur characters of `U(n)`.
//! * [`globalbound`]: the mass constant and the multiplicity lower bound.

#![no_std]

extern crate alloc;

pub mod archweyl;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod globalbound;
pub mod greenchar;
pub mod localring;
pub mod matrix;
pub mod mpoly;
pub mod poly;
pub mod projcensus;
pub mod simpletypes;
pub mod towerfield;
pub mod util;

pub use error::{Error, Result};

/// Default enumeration budget, in point-operations.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
