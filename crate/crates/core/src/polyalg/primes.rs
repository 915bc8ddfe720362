//! Deterministic prime sequences.

use super::modp::{is_prime, MODULUS_LIMIT};

/// First prime used by specialization witnesses (irreducibility of fibres
/// and of trigonal models).
pub const WITNESS_PRIME_START: u64 = 5;

/// First prime of the Frobenius sweep.
pub const SWEEP_PRIME_START: u64 = 2;

/// Ascending primes `>= start`, below `2^31`.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..MODULUS_LIMIT).filter(|&n| is_prime(n))
}

/// Descending primes below `2^31`, used for multi-modular reconstruction.
pub fn large_primes() -> impl Iterator<Item = u64> {
    (1u64 << 30..MODULUS_LIMIT).rev().filter(|&n| is_prime(n))
}
