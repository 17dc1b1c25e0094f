//! Exact computation of associated primes of powers of monomial ideals.
//!
//! The crate is organised around a small monomial arithmetic layer
//! ([`Monomial`], [`MonomialIdeal`], [`MonomialPrime`]) and several
//! independent routes to `Ass(I^k)`:
//!
//! * [`oracle`] searches colon witnesses exhaustively and works for any
//!   monomial ideal;
//! * [`stable`] computes the stable set `Ass^∞(I)` of a polymatroidal ideal
//!   from ranks of submatrices of its exponent matrix;
//! * [`transversal`] and [`veronese`] evaluate closed forms for the two
//!   classical families of polymatroidal ideals.
//!
//! ```
//! use stableass::polymatroid::{veronese_ideal, VeroneseSpec};
//! use stableass::{oracle, stable, Limits};
//!
//! let ideal = veronese_ideal(&VeroneseSpec::new(2, vec![1, 1, 1])?)?;
//! let limits = Limits::default();
//! let stable_set = stable::ass_infinity(&ideal, &limits)?;
//! let (astab, report) = oracle::astab_certified(&ideal, &limits)?;
//! assert_eq!(astab, 2);
//! assert_eq!(report.primes_at(astab), Some(&stable_set));
//! # Ok::<(), stableass::Error>(())
//! ```
//!
//! Everything here is `no_std` (with `alloc`) and purely functional: values
//! are immutable after construction and no operation touches shared state.

#![no_std]

extern crate alloc;

pub mod classify;
mod error;
mod ideal;
mod limits;
mod monomial;
pub mod oracle;
pub mod polymatroid;
mod prime;
pub mod rank;
pub mod stable;
pub mod transversal;
pub mod veronese;

pub use error::{Error, Result};
pub use ideal::{LocalizedIdeal, MonomialIdeal};
pub use limits::Limits;
pub use monomial::Monomial;
pub use prime::{MonomialPrime, PrimeSet};
