//! Exact-arithmetic engine for the parabolic subalgebras of classical simple
//! Lie superalgebras whose sheaf cohomology is governed by the classical
//! Bott-Borel-Weil theorem.
//!
//! The crate is organized around six pieces:
//!
//! - [`series`]: integer-coefficient polynomials and truncated power series
//!   in `t`, the common currency of every identity checked here.
//! - [`rootsys`]: root-system data for the reductive factors of the even
//!   part (types A/B/C/D and G2), the dot action, and the line-bundle
//!   cohomology oracle (degree, dominant representative, Weyl dimension).
//! - [`reflgroup`]: finite reflection groups (symmetric, hyperoctahedral,
//!   demihyperoctahedral) with length enumeration and Poincaré polynomials.
//! - [`superalg`]: the catalog of classical simple Lie superalgebras with
//!   their odd-root partitions, defining hyperplane functionals, and the
//!   Hilbert series of the torus-invariant cohomology rings.
//! - [`census`]: the weight census over sub-multisets of the positive odd
//!   roots, assembling Poincaré polynomials and Euler characteristics.
//! - [`oddweyl`]: the odd dot action and the inverted-root sets attached to
//!   reflection-group elements, with exhaustive verification.
//!
//! [`verify`] ties everything together into named, machine-checkable
//! reports. All arithmetic is exact; there is no floating point anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line live in the companion `bbw-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod census;
mod error;
pub mod oddweyl;
pub mod reflgroup;
pub mod rootsys;
pub mod series;
pub mod superalg;
pub mod verify;
pub mod weight;

pub use error::Error;

/// Exact rational scalar used for all weight coordinates.
pub type Rat = num_rational::Ratio<i64>;

/// Shorthand for an integer as a [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// Shorthand for `p/q` as a [`Rat`].
pub fn ratq(p: i64, q: i64) -> Rat {
    Rat::new(p, q)
}
