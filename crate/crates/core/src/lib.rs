//! Degrees of radical extensions `Q(a_1^(1/l), ..., a_m^(1/l))`, l-th power
//! residue symbols at primes of the `l`-th cyclotomic field, and empirical
//! density experiments for primes with prescribed symbol values.

pub mod arith;
pub mod cyclotomic;
pub mod density;
pub mod error;
pub mod radical;

pub use error::{Error, Result};
