//! Exact-integer evaluation of the recurrences and closed formulas.
//!
//! Everything here is arbitrary precision: sequence values grow like `k^n`
//! and identities are checked out to `n = 200`. Rationals appear only
//! transiently inside [`conjecture_formula`], whose total must come out
//! integral.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Parameters of the two-term linear recurrence
/// `f(n) = k1 * f(n-1) + k2 * f(n-2)` with `f(0) = b0`, `f(1) = b1`.
///
/// Negative coefficients are allowed (the Mersenne numbers use `k2 = -2`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceSpec {
    pub b0: BigInt,
    pub b1: BigInt,
    pub k1: BigInt,
    pub k2: BigInt,
}

impl RecurrenceSpec {
    pub fn new(b0: i64, b1: i64, k1: i64, k2: i64) -> Self {
        RecurrenceSpec {
            b0: BigInt::from(b0),
            b1: BigInt::from(b1),
            k1: BigInt::from(k1),
            k2: BigInt::from(k2),
        }
    }
}

/// Evaluates the recurrence by linear iteration: O(n) exact multiplies,
/// no recursion.
pub fn eval_general(spec: &RecurrenceSpec, n: u64) -> BigInt {
    match n {
        0 => spec.b0.clone(),
        1 => spec.b1.clone(),
        _ => {
            let mut prev = spec.b0.clone();
            let mut current = spec.b1.clone();
            for _ in 2..=n {
                let next = &spec.k1 * &current + &spec.k2 * &prev;
                prev = current;
                current = next;
            }
            current
        }
    }
}

/// Fibonacci-k numbers: `a(n) = a(n-1) + k * a(n-2)`, bases 1, 1.
pub fn a_k(k: u32, n: u64) -> BigInt {
    eval_general(&RecurrenceSpec::new(1, 1, 1, i64::from(k)), n)
}

/// k-Fibonacci numbers: `b(n) = k * b(n-1) + b(n-2)`, bases 1, 1.
pub fn b_k(k: u32, n: u64) -> BigInt {
    eval_general(&RecurrenceSpec::new(1, 1, i64::from(k), 1), n)
}

/// k-Fibonacci-k numbers: `d(n) = k * d(n-1) + k * d(n-2)`, bases 1, 1.
pub fn d_k(k: u32, n: u64) -> BigInt {
    eval_general(&RecurrenceSpec::new(1, 1, i64::from(k), i64::from(k)), n)
}

/// Fibonacci-squared numbers `c(n) = a_1(n)^2`.
pub fn fib_squared_c(n: u64) -> BigInt {
    let f = a_k(1, n);
    &f * &f
}

/// Three-term recurrence for the Fibonacci-squared numbers:
/// `c'(n) = 2c'(n-1) + 2c'(n-2) - c'(n-3)` with bases 1, 1, 4.
pub fn c_prime(n: u64) -> BigInt {
    match n {
        0 | 1 => BigInt::one(),
        2 => BigInt::from(4),
        _ => {
            let mut window = [BigInt::one(), BigInt::one(), BigInt::from(4)];
            for _ in 3..=n {
                let next = 2 * (&window[2] + &window[1]) - &window[0];
                window.rotate_left(1);
                window[2] = next;
            }
            window[2].clone()
        }
    }
}

/// Full-history recurrence for the Fibonacci-squared numbers:
/// `c''(n) = c''(n-1) + 3c''(n-2) + 2 * sum_{i=3..n} c''(n-i)`, bases 1, 1.
///
/// The tail sum is a running prefix sum, so evaluation stays O(n).
pub fn c_double_prime(n: u64) -> BigInt {
    if n <= 1 {
        return BigInt::one();
    }
    let mut prev2 = BigInt::one(); // c''(m-2)
    let mut prev1 = BigInt::one(); // c''(m-1)
    let mut tail_sum = BigInt::zero(); // c''(0) + ... + c''(m-3)
    for _ in 2..=n {
        let current = &prev1 + 3 * &prev2 + 2 * &tail_sum;
        tail_sum += &prev2;
        prev2 = prev1;
        prev1 = current;
    }
    prev1
}

/// Exact binomial coefficient for any integer top argument:
/// `binom(a, b) = prod_{j=0..b-1} (a - j) / b!`, so `binom(a, 0) = 1` and
/// negative `a` follows the falling-factorial convention.
pub fn binomial(a: &BigInt, b: u64) -> BigInt {
    let mut result = BigInt::one();
    for j in 0..b {
        result *= a - BigInt::from(j);
        let divisor = BigInt::from(j + 1);
        debug_assert!((&result % &divisor).is_zero());
        result /= divisor;
    }
    result
}

/// k-ary Catalan numbers: `binom(kn, n) / ((k-1)n + 1)`, counting k-ary
/// trees with `n` nodes. Requires `k >= 1`.
pub fn catalan_k(k: u32, n: u64) -> BigInt {
    assert!(k >= 1, "catalan_k needs k >= 1");
    let top = BigInt::from(u64::from(k) * n);
    let numerator = binomial(&top, n);
    let divisor = BigInt::from(u64::from(k - 1) * n + 1);
    let (quotient, remainder) = num_integer::Integer::div_rem(&numerator, &divisor);
    debug_assert!(remainder.is_zero(), "k-ary Catalan division is exact");
    quotient
}

/// Odd double factorial `(2n - 1)!! = 1 * 3 * ... * (2n - 1)`; empty
/// product 1 at `n = 0`.
pub fn double_factorial_odd(n: u64) -> BigInt {
    let mut result = BigInt::one();
    for i in 1..=n {
        result *= BigInt::from(2 * i - 1);
    }
    result
}

/// The conjectured count of r-regular words avoiding `{123, 121}` (equally
/// `{132, 212}`): `sum_{i=0..n} binom(n,i)/(n-i+1) * binom(n+(r-1)i-1, n-i)`.
///
/// Summed in exact rational arithmetic; a non-integral total signals a
/// binomial-convention bug and is reported as an error.
pub fn conjecture_formula(r: u32, n: u64) -> Result<BigInt> {
    assert!(r >= 1, "conjecture_formula needs r >= 1");
    let mut total = BigRational::zero();
    for i in 0..=n {
        let choose = binomial(&BigInt::from(n), i);
        let top = BigInt::from(n) + BigInt::from(u64::from(r) - 1) * BigInt::from(i) - 1;
        let second = binomial(&top, n - i);
        let denominator = BigInt::from(n - i + 1);
        total += BigRational::new(choose * second, denominator);
    }
    if !total.is_integer() {
        return Err(Error::NonIntegralSum { r, n });
    }
    Ok(total.to_integer())
}

/// Rows of the multi-pattern table whose counting sequences are simple
/// closed forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Table5Row {
    /// `Av_n^r{132, 221}`: 1 at n=0, then the (1, r+1)-based Pell numbers.
    PellOneRPlusOne,
    /// `Av_n^r{132, 211}`: 1 at n=0, then `r(n-1) + 1`.
    Linear,
    /// `Av_n^r{123, 211}`: 1, 1, r+1, then 0 forever.
    Degenerate,
}

/// Evaluates one table row. The `n = 0` and `n = 1` terms are fixed by
/// brute-force counts (the table itself starts later), which shifts the
/// Pell row by one index and puts the degenerate row's `r + 1` at `n = 2`.
pub fn table5_formula(row: Table5Row, r: u32, n: u64) -> BigInt {
    match row {
        Table5Row::PellOneRPlusOne => {
            if n == 0 {
                BigInt::one()
            } else {
                eval_general(
                    &RecurrenceSpec::new(1, i64::from(r) + 1, 2, 1),
                    n - 1,
                )
            }
        }
        Table5Row::Linear => {
            if n == 0 {
                BigInt::one()
            } else {
                BigInt::from(u64::from(r) * (n - 1) + 1)
            }
        }
        Table5Row::Degenerate => match n {
            0 | 1 => BigInt::one(),
            2 => BigInt::from(u64::from(r) + 1),
            _ => BigInt::zero(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn seq(f: impl Fn(u64) -> BigInt, count: u64) -> Vec<BigInt> {
        (0..count).map(f).collect()
    }

    #[test]
    fn general_recurrence_examples() {
        let jacobsthal = RecurrenceSpec::new(1, 1, 1, 2);
        assert_eq!(
            seq(|n| eval_general(&jacobsthal, n), 7),
            ints(&[1, 1, 3, 5, 11, 21, 43])
        );
        let pell = RecurrenceSpec::new(0, 1, 2, 1);
        assert_eq!(
            seq(|n| eval_general(&pell, n), 8),
            ints(&[0, 1, 2, 5, 12, 29, 70, 169])
        );
        let mersenne = RecurrenceSpec::new(0, 1, 3, -2);
        assert_eq!(
            seq(|n| eval_general(&mersenne, n), 8),
            ints(&[0, 1, 3, 7, 15, 31, 63, 127])
        );
        let degenerate = RecurrenceSpec::new(7, 3, 5, 0);
        assert_eq!(eval_general(&degenerate, 2), BigInt::from(15));
    }

    #[test]
    fn named_sequences() {
        assert_eq!(seq(|n| a_k(3, n), 8), ints(&[1, 1, 4, 7, 19, 40, 97, 217]));
        assert_eq!(seq(|n| a_k(1, n), 8), ints(&[1, 1, 2, 3, 5, 8, 13, 21]));
        assert_eq!(a_k(9, 2), BigInt::from(10));
        assert_eq!(
            seq(|n| b_k(2, n), 9),
            ints(&[1, 1, 3, 7, 17, 41, 99, 239, 577])
        );
        assert_eq!(
            seq(|n| b_k(5, n), 8),
            ints(&[1, 1, 6, 31, 161, 836, 4341, 22541])
        );
        assert_eq!(b_k(4, 1), BigInt::one());
        assert_eq!(
            seq(|n| d_k(2, n), 8),
            ints(&[1, 1, 4, 10, 28, 76, 208, 568])
        );
        assert_eq!(
            seq(|n| d_k(9, n), 8),
            ints(&[1, 1, 18, 171, 1701, 16848, 166941, 1654101])
        );
        assert_eq!(d_k(6, 0), BigInt::one());
    }

    #[test]
    fn fibonacci_squared_routes_agree() {
        assert_eq!(
            seq(fib_squared_c, 9),
            ints(&[1, 1, 4, 9, 25, 64, 169, 441, 1156])
        );
        assert_eq!(c_prime(2), BigInt::from(4));
        assert_eq!(c_prime(3), BigInt::from(9));
        assert_eq!(c_double_prime(2), BigInt::from(4));
        assert_eq!(c_double_prime(4), BigInt::from(25));
        for n in 0..=200 {
            let c = fib_squared_c(n);
            assert_eq!(c, c_prime(n), "c' diverges at n={}", n);
            assert_eq!(c, c_double_prime(n), "c'' diverges at n={}", n);
        }
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(
            seq(|n| catalan_k(2, n), 8),
            ints(&[1, 1, 2, 5, 14, 42, 132, 429])
        );
        assert_eq!(catalan_k(2, 3), BigInt::from(5));
        assert_eq!(catalan_k(4, 2), BigInt::from(4));
        assert_eq!(catalan_k(1, 5), BigInt::one());
        assert_eq!(
            seq(|n| catalan_k(3, n), 5),
            ints(&[1, 1, 3, 12, 55])
        );
    }

    #[test]
    fn double_factorial_examples() {
        assert_eq!(double_factorial_odd(3), BigInt::from(15));
        assert_eq!(double_factorial_odd(0), BigInt::one());
        assert_eq!(double_factorial_odd(5), BigInt::from(945));
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(&BigInt::from(-1), 0), BigInt::one());
        assert_eq!(binomial(&BigInt::from(-1), 2), BigInt::one());
        assert_eq!(binomial(&BigInt::from(-2), 3), BigInt::from(-4));
        assert_eq!(binomial(&BigInt::from(5), 2), BigInt::from(10));
        assert_eq!(binomial(&BigInt::from(2), 5), BigInt::zero());
    }

    #[test]
    fn conjecture_formula_small_values() {
        assert_eq!(conjecture_formula(2, 0).unwrap(), BigInt::one());
        assert_eq!(conjecture_formula(5, 0).unwrap(), BigInt::one());
        // r = 1 collapses to the Catalan numbers.
        for n in 0..=8 {
            assert_eq!(conjecture_formula(1, n).unwrap(), catalan_k(2, n));
        }
        // Integrality holds across the tested window.
        for r in 1..=6 {
            for n in 0..=40 {
                conjecture_formula(r, n).unwrap();
            }
        }
    }

    #[test]
    fn table_row_values() {
        assert_eq!(
            seq(|n| table5_formula(Table5Row::PellOneRPlusOne, 3, n), 8),
            ints(&[1, 1, 4, 9, 22, 53, 128, 309])
        );
        assert_eq!(
            seq(|n| table5_formula(Table5Row::Linear, 4, n), 8),
            ints(&[1, 1, 5, 9, 13, 17, 21, 25])
        );
        assert_eq!(
            table5_formula(Table5Row::Degenerate, 2, 3),
            BigInt::zero()
        );
        assert_eq!(
            seq(|n| table5_formula(Table5Row::Degenerate, 2, n), 5),
            ints(&[1, 1, 3, 0, 0])
        );
    }

    #[test]
    fn base_shift_properties() {
        // (0,1)-based Fibonacci-k is the (1,1)-based sequence shifted once.
        for k in 1..=5 {
            let zero_based = RecurrenceSpec::new(0, 1, 1, i64::from(k));
            for n in 0..30 {
                assert_eq!(eval_general(&zero_based, n + 1), a_k(k as u32, n));
            }
        }
        // The k-Fibonacci bases diverge for k >= 2, witnessed at n = 2.
        for k in 2..=5 {
            let zero_based = RecurrenceSpec::new(0, 1, i64::from(k), 1);
            assert_eq!(eval_general(&zero_based, 2), BigInt::from(k));
            assert_eq!(b_k(k as u32, 2), BigInt::from(k + 1));
        }
    }
}
