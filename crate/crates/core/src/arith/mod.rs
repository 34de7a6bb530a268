//! Number-theoretic kernel shared by the sequence generators: sieving,
//! primality, factorization and digit concatenation.

pub mod digits;
pub mod factor;
mod mont;
pub mod prime;
pub mod sieve;

pub use digits::{concat_digits, concat_digits_u64, digit_len, digits, pow};
pub use factor::{factor, factor_u64, factor_with, EcmStage, FactorBudget, FactorError, Factorization};
pub use prime::{is_prime, is_prime_u64, is_prime_with_rounds, PrimalityVerdict, PrimeStatus};
pub use sieve::{prime_table, primes_below, primes_up_to};
