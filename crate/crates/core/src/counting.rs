//! Closed-form interval counts, exact.

use num_bigint::BigUint;
use num_traits::One;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

fn binomial(n: usize, k: usize) -> BigUint {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `C_n = (2n)! / (n! (n+1)!)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Stanley intervals as `C_{n+2} C_n − C_{n+1}²`.
pub fn stanley_by_catalan(n: usize) -> BigUint {
    catalan(n + 2) * catalan(n) - catalan(n + 1).pow(2)
}

/// Stanley intervals as `6 (2n)! (2n+2)! / (n! (n+1)! (n+2)! (n+3)!)`.
pub fn stanley_by_factorials(n: usize) -> BigUint {
    let num = factorial(2 * n) * factorial(2 * n + 2) * 6u32;
    let den = factorial(n) * factorial(n + 1) * factorial(n + 2) * factorial(n + 3);
    debug_assert!((&num % &den) == BigUint::default());
    num / den
}

/// Number of Stanley intervals of size `n`; both closed forms are computed
/// and must agree.
pub fn formula_stanley(n: usize) -> BigUint {
    let a = stanley_by_catalan(n);
    let b = stanley_by_factorials(n);
    assert_eq!(a, b, "closed forms disagree at n = {n}");
    a
}

/// Number of Tamari intervals: `2 (4n+1)! / ((n+1)! (3n+2)!)`.
pub fn formula_tamari(n: usize) -> BigUint {
    factorial(4 * n + 1) * 2u32 / (factorial(n + 1) * factorial(3 * n + 2))
}

/// Number of Kreweras intervals: `C(3n, n) / (2n+1)`.
pub fn formula_kreweras(n: usize) -> BigUint {
    binomial(3 * n, n) / (2 * n + 1)
}
