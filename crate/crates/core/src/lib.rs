//! # halfshift
//!
//! Energy leakage of index-limited sequences under fractional shifts.
//!
//! Shifting a finite sequence by a non-integer number of samples through
//! band-limited interpolation spreads its energy over infinitely many
//! samples. This crate measures that leakage exactly and evaluates the
//! finite DPSS-based expressions that bound or equal it:
//!
//! * [`fracshift`]: the shift operator `B_W^τ`, zero-stuffing, exact and
//!   brute-force tail energies;
//! * [`dpss`]: discrete prolate spheroidal sequences, their symmetries and
//!   the even-subsampled orthonormal basis;
//! * [`bounds`]: the DPSS tail bound for any `W` and the exact tail at full
//!   band;
//! * [`concentration`]: post-shift concentration, the optimally
//!   concentrated sequence and the concentration-ranked basis.
//!
//! ```
//! use halfshift::{concentration::optimal_sequence, fracshift::*};
//!
//! let best = optimal_sequence(8)?;
//! let tail = tail_energy_exact(&best.sequence, &ShiftSpec::half_sample(), &TailWindow::half_sample(8))?;
//! assert!(tail.value < 1e-12);
//! # Ok::<(), halfshift::Error>(())
//! ```
//!
//! The guide in `book/` walks through the ideas with runnable snippets; its
//! code blocks are compiled as doctests of this crate.

pub mod bounds;
pub mod concentration;
pub mod dpss;
mod error;
pub mod fracshift;
pub mod linalg;
pub mod numeric;
pub mod random;
mod sequence;

pub use bounds::{CoeffVector, HalfSampleFamily};
pub use dpss::{compute_dpss, DpssParams, DpssSet, OrthoBasis};
pub use error::{Error, Result};
pub use fracshift::{ShiftSpec, TailWindow};
pub use num_complex::Complex64;
pub use sequence::Sequence;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/shift.md")]
    mod shift {}
    #[doc = include_str!("../../../book/src/tail-energy.md")]
    mod tail_energy {}
    #[doc = include_str!("../../../book/src/dpss.md")]
    mod dpss {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/concentration.md")]
    mod concentration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
