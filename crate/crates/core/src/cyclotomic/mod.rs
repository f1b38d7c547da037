//! Arithmetic in `Z[z]` for a primitive `l`-th root of unity `z`, prime
//! ideals above unramified primes, and `l`-th power residue symbols.

mod ideal;
mod int;
mod symbol;

pub use ideal::{primes_above, primes_above_seeded, PrimeIdeal, SymbolEvaluator};
pub use int::CyclotomicInt;
pub use symbol::{
    eisenstein_check, eisenstein_sides, residue_symbol, residue_symbol_of_integer,
    symbol_over_integer, EisensteinSides, SymbolExponent,
};

/// `z`-adic primary test, see [`CyclotomicInt::is_primary`].
pub fn is_primary(alpha: &CyclotomicInt) -> bool {
    alpha.is_primary()
}

/// Norm from `Q(z)` to `Q`.
pub fn cyclo_norm(alpha: &CyclotomicInt) -> num_bigint::BigInt {
    alpha.norm()
}
