//! Combinatorial primitives: factorials, binomials, rising factorials
//! (over rationals and over polynomials in `n`) and Lagrange interpolation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{rat, Rational};
use crate::error::{Error, Result};

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(2k+1)!! = 1·3·5···(2k+1)`
pub fn odd_double_factorial(k: u64) -> BigInt {
    (0..=k).fold(BigInt::one(), |acc, i| acc * (2 * i + 1))
}

/// Generalized binomial `C(top, k) = top(top-1)...(top-k+1)/k!`; any rational
/// top, zero for negative `k`.
pub fn binomial(top: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for t in 0..k {
        acc *= top - rat(t);
    }
    acc / Rational::from_integer(factorial(k as u64))
}

pub fn binomial_i64(top: i64, k: i64) -> Rational {
    binomial(&rat(top), k)
}

/// Rising factorial `(a)_ell` of a rational.
pub fn pochhammer_rat(a: &Rational, ell: u64) -> Rational {
    let mut acc = Rational::one();
    for t in 0..ell {
        acc *= a + rat(t as i64);
    }
    acc
}

/// Rising factorial `(a)_ell = a(a+1)...(a+ell-1)` with polynomial argument.
pub fn pochhammer(a: &Poly, ell: u64) -> Poly {
    let mut acc = Poly::one();
    for t in 0..ell {
        acc = &acc * &(a + &Poly::from_i64(t as i64));
    }
    acc
}

/// `(n + shift)_ell` as a polynomial in `n`.
pub fn pochhammer_shifted(shift: i64, ell: u64) -> Poly {
    pochhammer(&Poly::n_plus(shift), ell)
}

/// `C(top, k) = (top-k+1)_k / k!` with polynomial top.
pub fn binom_poly(top: &Poly, k: u64) -> Poly {
    let base = top - &Poly::from_i64(k as i64 - 1);
    pochhammer(&base, k).scale(&Rational::new(BigInt::one(), factorial(k)))
}

/// Interpolating polynomial through the given nodes (distinct abscissae).
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Result<Poly> {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            if xi == xj {
                return Err(Error::InvalidArgument("repeated interpolation node".into()));
            }
            basis = &basis * &Poly::from_coeffs(vec![-xj.clone(), rat(1)]);
            denom *= xi - xj;
        }
        acc += &basis.scale(&(yi / denom));
    }
    Ok(acc)
}

/// Interpolates `f` on the integer nodes `0..=degree_bound + 1` and rejects
/// the result if the redundant node disagrees with the degree bound.
pub fn interpolate_checked<F>(degree_bound: usize, mut f: F) -> Result<Poly>
where
    F: FnMut(i64) -> Result<Rational>,
{
    let mut pts = Vec::with_capacity(degree_bound + 2);
    for x in 0..=(degree_bound as i64 + 1) {
        pts.push((rat(x), f(x)?));
    }
    let check = pts.pop().expect("at least two nodes");
    let p = lagrange_interpolate(&pts)?;
    if p.eval(&check.0) != check.1 {
        return Err(Error::Internal(format!(
            "interpolation inconsistent at node {}: degree bound {degree_bound} violated",
            check.0
        )));
    }
    Ok(p)
}
