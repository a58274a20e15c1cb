//! Exact arithmetic substrate: q-polynomials, q-integers, partitions and
//! compositions.

mod partition;
mod poly;

pub(crate) use partition::partitions_unchecked;
pub use partition::{compositions_of, partitions_of, Composition, Partition};
pub(crate) use poly::RatPoly;
pub use poly::{qfact, qint, qpoly_shift, Coeff, Poly, QPoly, QShift};
