//! cyclonorm: exact norms of integer polynomials at roots of unity.
//!
//! Everything is exact big-integer arithmetic: cyclotomic polynomials by
//! iterated division, resultants by the subresultant remainder sequence
//! with an O(log n) trace recurrence as the quadratic fast path, Lucas
//! numbers by fast doubling, domino placements on cycles in closed form and
//! by brute force, and quadratic-field machinery (continued fractions,
//! fundamental units, class numbers, Gauss-period relative norms). The
//! `cli` module is the command-line surface over all of it.

pub mod cli;
pub mod domino;
pub mod expr;
pub mod norms;
pub mod polyring;
pub mod quadfield;
pub mod sequences;

pub use domino::{DominoError, DominoTable};
pub use expr::{parse_poly, ParseError, PolyExpr};
pub use norms::{NormError, NormMethod, NormReport};
pub use polyring::{IntPoly, PolyError};
pub use quadfield::{CFExpansion, PellUnit, QuadElem, QuadError};
pub use sequences::LucasValue;
