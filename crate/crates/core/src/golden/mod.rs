//! Exact arithmetic in ℚ(√5): surds, Beatty floors, Fibonacci and Lucas
//! numbers, Zeckendorf and Fibonacci codes, base-b digit coding.

mod digits;
mod sequences;
mod surd;
mod zeckendorf;

pub use digits::base_b_digits;
pub use sequences::{
    beatty_phi, beatty_phi2, beatty_phi2_u64, beatty_phi_u64, fib, fib_m_step, isqrt, lucas,
    FibTable,
};
pub use surd::Surd;
pub use zeckendorf::{fib_code_valid, zeckendorf_decode, zeckendorf_encode, ZeckendorfRep};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
