//! Exact nullities `N(n,k)` of the `n × n` skew-symmetric Toeplitz band
//! matrices `A(n,k)` whose first `k` superdiagonals are `1` and whose other
//! superdiagonals are `0`.
//!
//! Three independent engines compute `N(n,k)`:
//!
//! * [`rank`]: dense exact rank over `GF(p)` and over the rationals.
//! * [`graph`]: the number of cycles of a functional graph on `k+1`
//!   vertices, `O(k)` for any `n` after reduction mod `k^2+k`.
//! * [`apex`]: triangle lookup in the closed-form apex table.
//!
//! [`det`] handles the determinant polynomial of the parametrized matrix
//! `A(n,k,x)`, and [`stats`] / [`predictions`] cover the distribution of
//! nullities and the families of `n` where it is known in closed form.

pub mod apex;
pub mod arith;
pub mod band;
pub mod cache;
pub mod det;
mod error;
pub mod graph;
pub mod identities;
pub mod poly;
pub mod predictions;
pub mod rank;
mod serde_decimal;
pub mod stats;
pub mod verify;

pub use apex::{build_line_graph, nullity_closed_form, Apex, ApexParams, LineGraph};
pub use band::{BandMatrixSpec, IntegerMatrix, PolyMatrix};
pub use det::{determinant_poly, ConjectureVerdict, DetRoute};
pub use error::{Error, Result};
pub use graph::{
    decompose, nullity_by_cycles, period, Edge, GraphDecomposition, GraphSpec, NullityMethod,
    NullityReport,
};
pub use poly::IntegerPolynomial;
pub use rank::{PrimeField, RankMethod, RankResult};
pub use stats::{StatsReport, StatsRow};
