//! Binomial upper bounds for two-colour Ramsey numbers and their iterates.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default ceiling on the bit length of iterated bounds.
pub const DEFAULT_CEILING_BITS: u64 = 4096;

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: &BigUint, k: &BigUint) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let other = n - k;
    let k = if &other < k { other } else { k.clone() };
    let mut acc = BigUint::one();
    let mut i = BigUint::zero();
    while i < k {
        acc *= n - &i;
        i += 1u32;
        acc /= &i;
    }
    acc
}

/// `C(m + n − 2, m − 1)`, an upper bound for the smallest `N` such that every graph on `N`
/// vertices has a clique of size `m` or an independent set of size `n`.
pub fn ramsey_upper(m: u64, n: u64) -> Result<BigUint> {
    ramsey_upper_big(m, &BigUint::from(n))
}

fn ramsey_upper_big(m: u64, n: &BigUint) -> Result<BigUint> {
    if m == 0 || n.is_zero() {
        return Err(Error::InvalidParameter(
            "Ramsey arguments must be at least 1".into(),
        ));
    }
    Ok(binomial(&(n + BigUint::from(m) - 2u32), &BigUint::from(m - 1)))
}

/// `k`-fold composition `R(m, R(m, …, R(m, n)))`; `k = 0` yields `n`.
pub fn iterated_ramsey_upper(k: u32, m: u64, n: u64) -> Result<BigUint> {
    iterated_ramsey_upper_with_ceiling(k, m, n, DEFAULT_CEILING_BITS)
}

pub fn iterated_ramsey_upper_with_ceiling(k: u32, m: u64, n: u64, ceiling_bits: u64) -> Result<BigUint> {
    let mut acc = BigUint::from(n);
    check_ceiling(&acc, ceiling_bits)?;
    for _ in 0..k {
        acc = ramsey_upper_big(m, &acc)?;
        check_ceiling(&acc, ceiling_bits)?;
    }
    Ok(acc)
}

fn check_ceiling(x: &BigUint, ceiling_bits: u64) -> Result<()> {
    if x.bits() > ceiling_bits {
        Err(Error::Overflow { bits: ceiling_bits })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn ramsey_examples() {
        assert_eq!(ramsey_upper(3, 3).unwrap(), big(6));
        for m in 1..30 {
            assert_eq!(ramsey_upper(m, 2).unwrap(), big(m));
            assert_eq!(ramsey_upper(2, m).unwrap(), big(m));
        }
        assert!(ramsey_upper(0, 3).is_err());
    }

    #[test]
    fn iterated_examples() {
        assert_eq!(iterated_ramsey_upper(0, 3, 9).unwrap(), big(9));
        assert_eq!(iterated_ramsey_upper(1, 3, 3).unwrap(), big(6));
        assert_eq!(iterated_ramsey_upper(2, 3, 3).unwrap(), big(21));
        assert_eq!(
            iterated_ramsey_upper_with_ceiling(40, 3, 73, 256),
            Err(Error::Overflow { bits: 256 })
        );
    }

    #[test]
    fn binomial_small_table() {
        // Pascal's triangle built by addition.
        let mut row = vec![big(1)];
        for n in 1..40u64 {
            let mut next = vec![big(1); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(&big(n), &big(k as u64)), v);
            }
        }
        assert_eq!(binomial(&big(3), &big(5)), big(0));
    }
}
