use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::{newton_vector_with_budget, AdjacencyMatrix, NEWTON_BUDGET};

/// `det(xI - A)` with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    /// `coefficients[i]` multiplies `x^i`; the last entry is 1.
    coefficients: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_coefficients(coefficients: Vec<BigInt>) -> CharPoly {
        CharPoly { coefficients }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Coefficient of `x^i`.
    pub fn coefficient(&self, i: usize) -> &BigInt {
        &self.coefficients[i]
    }

    pub fn low_to_high(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn high_to_low(&self) -> Vec<BigInt> {
        self.coefficients.iter().rev().cloned().collect()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Coefficients from the Newton values `N(A,1..=m)` via
/// `k S_k = (-1)^(k-1) N_k - sum_{i=1}^{k-1} (-1)^i S_(k-i) N_i`,
/// placing `(-1)^k S_k` at `x^(m-k)`.
///
/// # Panics
/// If a division by `k` leaves a remainder, which means an arithmetic bug.
pub fn char_poly(a: &AdjacencyMatrix) -> CharPoly {
    let m = a.order();
    let newton: Vec<BigInt> = if m == 0 {
        Vec::new()
    } else {
        newton_vector_with_budget(a, m, NEWTON_BUDGET.max(m * m))
            .expect("order * order is within budget")
            .values()
            .iter()
            .map(|v: &BigUint| BigInt::from(v.clone()))
            .collect()
    };
    let mut s: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=m {
        let mut acc = if k % 2 == 1 {
            newton[k - 1].clone()
        } else {
            -&newton[k - 1]
        };
        for i in 1..k {
            let term = &s[k - i] * &newton[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "inexact division by {k} in Newton identities");
        s.push(q);
    }
    let coefficients = (0..=m)
        .map(|i| {
            let k = m - i;
            if k.is_multiple_of(2) {
                s[k].clone()
            } else {
                -&s[k]
            }
        })
        .collect();
    CharPoly { coefficients }
}

/// Exact comparison of characteristic polynomials.
pub fn cospectral(a: &AdjacencyMatrix, b: &AdjacencyMatrix) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    Ok(char_poly(a) == char_poly(b))
}
