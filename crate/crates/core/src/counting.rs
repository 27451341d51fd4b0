//! Closed-form counts of commuting subgroups and anticommuting sets, modulo
//! phases.
//!
//! Every formula is evaluated as an exact integer product followed by exact
//! division. The functions are generic over the integer type; the `_in`
//! variants take it as a type parameter and the plain names use
//! [`Count`](crate::Count). Fixed-width types report [`Error::Overflow`]
//! when any intermediate product does not fit, even if the final count
//! would.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{checked_pow, CheckedMul, CheckedSub, FromPrimitive};

use crate::error::{Error, Result};

/// Largest `n` accepted, to bound memory.
pub const MAX_N: usize = 4096;

/// Integer types the counts can be computed in.
pub trait CountInt: Clone + Integer + CheckedMul + CheckedSub + FromPrimitive {}

impl<T: Clone + Integer + CheckedMul + CheckedSub + FromPrimitive> CountInt for T {}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        Err(Error::capacity(format!("n = {n} exceeds the counting cap of {MAX_N}")))
    } else {
        Ok(())
    }
}

fn lift<T: CountInt>(v: usize) -> Result<T> {
    T::from_usize(v).ok_or(Error::Overflow)
}

fn pow2<T: CountInt>(e: usize) -> Result<T> {
    checked_pow(lift::<T>(2)?, e).ok_or(Error::Overflow)
}

fn mul<T: CountInt>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn sub<T: CountInt>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

fn exact_div<T: CountInt>(num: T, den: T) -> Result<T> {
    let (q, r) = num.div_rem(&den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::violation("inexact division in a counting formula"))
    }
}

fn factorial<T: CountInt>(k: usize) -> Result<T> {
    (2..=k).try_fold(T::one(), |acc, j| mul(&acc, &lift(j)?))
}

/// `4^n / 2^k - 2^k`.
fn commuting_term<T: CountInt>(n: usize, k: usize) -> Result<T> {
    sub(&pow2(2 * n - k)?, &pow2(k)?)
}

/// `s(k)`: `4^n / 2^k` for odd `k`, one less for even `k`.
pub fn anticommuting_term_in<T: CountInt>(n: usize, k: usize) -> Result<T> {
    check_n(n)?;
    if k > 2 * n {
        return Err(Error::argument(format!("k = {k} exceeds 2n = {}", 2 * n)));
    }
    let base = pow2::<T>(2 * n - k)?;
    if k % 2 == 1 {
        Ok(base)
    } else {
        sub(&base, &T::one())
    }
}

/// `∏_{k=m}^{m'-1} (4^n/2^k - 2^k) / (m'-m)!` without the special case at
/// `(m, m') = (0, 1)`: the number of ways to grow a commuting independent
/// set of size `m` to one of size `m'` using non-identity elements.
pub fn commuting_extension_product_in<T: CountInt>(n: usize, m: usize, m_prime: usize) -> Result<T> {
    check_n(n)?;
    if m >= m_prime || m_prime > n {
        return Err(Error::argument(format!("need 0 <= m < m' <= n, got m = {m}, m' = {m_prime}, n = {n}")));
    }
    let num = (m..m_prime).try_fold(T::one(), |acc, k| mul(&acc, &commuting_term(n, k)?))?;
    exact_div(num, factorial(m_prime - m)?)
}

/// Distinct ways to extend a commuting minimal generating set of size `m`
/// to one of size `m'`. From the empty set to one element this is `4^n`,
/// since `{I}` also counts.
pub fn count_commuting_extensions_in<T: CountInt>(n: usize, m: usize, m_prime: usize) -> Result<T> {
    let p = commuting_extension_product_in::<T>(n, m, m_prime)?;
    if m == 0 && m_prime == 1 {
        pow2(2 * n)
    } else {
        Ok(p)
    }
}

/// `N_m`: minimal generating sets of a fixed commuting subgroup of order `2^m`.
pub fn count_generating_sets_of_subgroup_in<T: CountInt>(m: usize) -> Result<T> {
    check_n(m)?;
    let num = (0..m).try_fold(T::one(), |acc, k| mul(&acc, &sub(&pow2(m)?, &pow2(k)?)?))?;
    exact_div(num, factorial(m)?)
}

/// Commuting subgroups of order `2^m`.
pub fn count_commuting_subgroups_in<T: CountInt>(n: usize, m: usize) -> Result<T> {
    check_n(n)?;
    if m > n {
        return Err(Error::argument(format!("need 0 <= m <= n, got m = {m}, n = {n}")));
    }
    let mut num = T::one();
    let mut den = T::one();
    for k in 0..m {
        num = mul(&num, &commuting_term(n, k)?)?;
        den = mul(&den, &sub(&pow2(m)?, &pow2(k)?)?)?;
    }
    exact_div(num, den)
}

/// Maximal commuting subgroups: `∏_{k=0}^{n-1} (1 + 2^{n-k})`.
pub fn count_maximal_commuting_in<T: CountInt>(n: usize) -> Result<T> {
    check_n(n)?;
    (0..n).try_fold(T::one(), |acc, k| {
        let term = pow2::<T>(n - k)? + T::one();
        mul(&acc, &term)
    })
}

/// Distinct ways to extend an anticommuting minimal generating set of size
/// `m` to one of size `m'`: `∏_{k=m}^{m'-1} s(k) / (m'-m)!`, and `4^n` from
/// the empty set to one element.
pub fn count_anticommuting_extensions_in<T: CountInt>(n: usize, m: usize, m_prime: usize) -> Result<T> {
    check_n(n)?;
    if m >= m_prime || m_prime > 2 * n {
        return Err(Error::argument(format!("need 0 <= m < m' <= 2n, got m = {m}, m' = {m_prime}, n = {n}")));
    }
    if m == 0 && m_prime == 1 {
        return pow2(2 * n);
    }
    let num = (m..m_prime).try_fold(T::one(), |acc, k| mul(&acc, &anticommuting_term_in(n, k)?))?;
    exact_div(num, factorial(m_prime - m)?)
}

/// Maximal anticommuting sets of size `m`: `∏_{k=0}^{m-2} s(k) / m!` for
/// odd `m <= 2n + 1`, zero otherwise.
pub fn count_maximal_anticommuting_in<T: CountInt>(n: usize, m: usize) -> Result<T> {
    check_n(n)?;
    if n == 0 {
        return Err(Error::argument("n must be at least 1"));
    }
    if m.is_multiple_of(2) || m > 2 * n + 1 {
        return Ok(T::zero());
    }
    let num = (0..m - 1).try_fold(T::one(), |acc, k| mul(&acc, &anticommuting_term_in(n, k)?))?;
    exact_div(num, factorial(m)?)
}

macro_rules! concrete {
    ($($(#[$doc:meta])* $name:ident => $generic:ident ($($arg:ident),*);)*) => {$(
        $(#[$doc])*
        pub fn $name($($arg: usize),*) -> Result<BigUint> {
            $generic::<BigUint>($($arg),*)
        }
    )*};
}

concrete! {
    /// See [`count_commuting_extensions_in`].
    count_commuting_extensions => count_commuting_extensions_in(n, m, m_prime);
    /// See [`commuting_extension_product_in`].
    commuting_extension_product => commuting_extension_product_in(n, m, m_prime);
    /// See [`count_generating_sets_of_subgroup_in`].
    count_generating_sets_of_subgroup => count_generating_sets_of_subgroup_in(m);
    /// See [`count_commuting_subgroups_in`].
    count_commuting_subgroups => count_commuting_subgroups_in(n, m);
    /// See [`count_maximal_commuting_in`].
    count_maximal_commuting => count_maximal_commuting_in(n);
    /// See [`count_anticommuting_extensions_in`].
    count_anticommuting_extensions => count_anticommuting_extensions_in(n, m, m_prime);
    /// See [`count_maximal_anticommuting_in`].
    count_maximal_anticommuting => count_maximal_anticommuting_in(n, m);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn commuting_examples() {
        assert_eq!(count_commuting_extensions(1, 0, 1).unwrap(), big(4));
        assert_eq!(count_commuting_extensions(2, 0, 2).unwrap(), big(45));
        assert!(matches!(count_commuting_extensions(1, 1, 1), Err(Error::Argument(_))));
        assert!(count_commuting_extensions(1, 0, 2).is_err());
        assert_eq!(count_generating_sets_of_subgroup(0).unwrap(), big(1));
        assert_eq!(count_generating_sets_of_subgroup(2).unwrap(), big(3));
        assert_eq!(count_generating_sets_of_subgroup(3).unwrap(), big(28));
        assert_eq!(count_commuting_subgroups(2, 1).unwrap(), big(15));
        assert_eq!(count_commuting_subgroups(2, 2).unwrap(), big(15));
        assert_eq!(count_commuting_subgroups(5, 0).unwrap(), big(1));
        assert!(count_commuting_subgroups(2, 3).is_err());
        assert_eq!(count_maximal_commuting(1).unwrap(), big(3));
        assert_eq!(count_maximal_commuting(2).unwrap(), big(15));
        assert_eq!(count_maximal_commuting(4).unwrap(), big(2295));
    }

    #[test]
    fn anticommuting_examples() {
        assert_eq!(count_anticommuting_extensions(1, 0, 2).unwrap(), big(3));
        assert_eq!(count_anticommuting_extensions(2, 0, 1).unwrap(), big(16));
        assert_eq!(count_anticommuting_extensions(2, 2, 3).unwrap(), big(3));
        assert!(count_anticommuting_extensions(1, 0, 3).is_err());
        assert_eq!(count_maximal_anticommuting(1, 3).unwrap(), big(1));
        assert_eq!(count_maximal_anticommuting(2, 3).unwrap(), big(20));
        assert_eq!(count_maximal_anticommuting(2, 4).unwrap(), big(0));
        assert_eq!(count_maximal_anticommuting(2, 1).unwrap(), big(1));
        assert_eq!(count_maximal_anticommuting(2, 5).unwrap(), big(6));
        assert_eq!(count_maximal_anticommuting(2, 7).unwrap(), big(0));
    }

    #[test]
    fn fixed_width() {
        assert_eq!(count_maximal_commuting_in::<u64>(4).unwrap(), 2295);
        assert_eq!(count_maximal_anticommuting_in::<u32>(2, 5).unwrap(), 6);
        assert_eq!(count_maximal_commuting_in::<u64>(20), Err(Error::Overflow));
        assert_eq!(count_maximal_commuting_in::<u8>(4), Err(Error::Overflow));
    }

    #[test]
    fn cap() {
        assert!(matches!(count_maximal_commuting(MAX_N + 1), Err(Error::Capacity(_))));
        assert!(count_commuting_subgroups(MAX_N, 1).is_ok());
    }
}
