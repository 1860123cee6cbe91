//! Exact computation of the q-analogs of Stirling numbers of both kinds.
//!
//! `S2[n,k]` refines the count of set partitions of `{1..n}` into `k` blocks
//! by the crossing statistic; `S1[n,k]` refines the count of permutations
//! with `k` right-to-left maxima by the special-inversion statistic. Both are
//! polynomials in `q` that recover the classical Stirling triangles at `q = 1`
//! and the Narayana triangle at `q = 0`, and they satisfy q-analogs of the
//! Schläfli and Gould identities expressing each kind as an alternating
//! binomial sum over the other.
//!
//! Every value can be computed by four independent routes, and the crate's
//! test and verification suites insist the routes agree as exact polynomials:
//!
//! - [`enumerate`] — brute-force sums over set partitions, rook placements,
//!   and permutations; the ground-truth oracle.
//! - [`paths`] — dynamic programming over weighted Motzkin, Dyck, and
//!   Schröder paths realizing the continued-fraction expansions of the
//!   generating functions.
//! - [`formulas`] — closed double sums in binomial and q-binomial
//!   coefficients, plus the two cross-kind identities and the terminating
//!   hypergeometric machinery behind their proofs.
//! - [`qcomb`] — the combinatorial number primitives (extended binomials,
//!   q-binomials, Narayana and classical Stirling numbers) the other modules
//!   build on.
//!
//! All arithmetic is exact ([`exactmath`]); there is no floating point.
//! The `qstirling` binary exposes triangles, single entries, and the
//! verification suites on the command line.

pub mod enumerate;
pub mod exactmath;
pub mod formulas;
pub mod guide;
pub mod paths;
pub mod qcomb;
pub mod triangle;
pub mod verify;

pub use qcomb::Kind;
