//! Total graphs `τ(R)` and zero-divisor Cayley graphs `Cay(R, Z(R)\{0})` of
//! finite commutative rings, with exact graph oracles to check closed-form
//! predictions against.

pub mod graph;
pub mod parallel;
pub mod ring;
pub mod sweep;
pub mod theorems;
