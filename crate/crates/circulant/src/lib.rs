//! Exact and certified spectral analysis of circulant graphs.
//!
//! The crate decides spectral questions about circulant graphs with integer
//! certificates wherever possible and certified interval arithmetic where a
//! real number's sign is needed:
//!
//! - [`graph`] — connection sets and circulant graphs in canonical form.
//! - [`chebyshev`] — Chebyshev polynomials of both kinds at arbitrary
//!   precision; the closed forms the eigenvalue identities rely on.
//! - [`spectra`] — eigenvalues by independent routes, exact power sums and
//!   characteristic polynomials, certified inertia.
//! - [`cospectral`] — cospectrality and singular-cospectrality deciders, the
//!   built-in graph-pair families, and the exhaustive NCSC search.
//! - [`prime`] — reconstruction from squared adjacency rows and multiplier
//!   isomorphism at odd prime order.
//! - [`verify`] — batch verification suites over parameter grids.
//!
//! With the default `parallel` feature the search and verification sweeps run
//! data-parallel on rayon; disabling it yields a dependency-free sequential
//! build with identical results.

pub mod chebyshev;
pub mod cospectral;
mod error;
pub mod graph;
pub mod interval;
pub mod par;
pub mod poly;
pub mod prime;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CirculantGraph, ConnectionSet};
pub use interval::Interval;
pub use poly::IntPolynomial;
pub use spectra::{Inertia, PowerSums, Sign, Spectrum};

/// Precision schedule for certified sign decisions: evaluation starts at
/// `start` bits and doubles until `cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionBudget {
    pub start: u32,
    pub cap: u32,
}

impl Default for PrecisionBudget {
    fn default() -> Self {
        PrecisionBudget { start: 64, cap: 4096 }
    }
}

impl PrecisionBudget {
    pub fn with_cap(cap: u32) -> Self {
        PrecisionBudget { start: 64.min(cap), cap }
    }

    /// Doubling sequence of working precisions.
    pub(crate) fn steps(&self) -> impl Iterator<Item = u32> {
        let (start, cap) = (self.start.max(1), self.cap);
        std::iter::successors(Some(start), move |&p| {
            if p >= cap {
                None
            } else {
                Some((p * 2).min(cap))
            }
        })
    }
}

/// Default working precision in mantissa bits for plain evaluations.
pub const DEFAULT_PRECISION: u32 = 128;
