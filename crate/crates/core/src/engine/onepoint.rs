//! The 1-point function `C_1(λ; n; l) = Σ_b b M_1(b; n) λ^{-b-1}`.

use num_bigint::BigInt;

use crate::curve::{ctilde_poly_on, XCurve};
use crate::error::{invalid, Result};
use crate::exact::comb::{binom_poly, binomial_i64, factorial, pochhammer_rat};
use crate::exact::{rat, LaurentSeries, Poly, Rational};

fn check(l: usize, order: usize) -> Result<()> {
    if l < 2 {
        return Err(invalid("l must be at least 2"));
    }
    if order < l + 1 {
        return Err(invalid(format!("order {order} is below l + 1 = {}", l + 1)));
    }
    Ok(())
}

/// Coefficient of `λ^{-(lm+1)}` in the binomial-sum form.
pub fn one_point_block(l: usize, m: usize) -> Poly {
    let (li, mi) = (l as i64, m as i64);
    let mut acc = Poly::zero();
    for s in 0..=mi {
        let c = binomial_i64(mi, s) * if s % 2 == 0 { rat(1) } else { rat(-1) };
        acc += &binom_poly(&Poly::n_plus(li * s), (l * m + 1) as u64).scale(&c);
    }
    let mut pre = Rational::new(
        factorial((l * m) as u64),
        BigInt::from(l).pow(m as u32) * factorial(m as u64),
    );
    if m % 2 == 1 {
        pre = -pre;
    }
    acc.scale(&pre)
}

/// `C_1` through `λ^{-order}`.
pub fn one_point(l: usize, order: usize) -> Result<LaurentSeries> {
    check(l, order)?;
    let terms = (1..)
        .take_while(|m| l * m < order)
        .map(|m| (-((l * m + 1) as i64), one_point_block(l, m)));
    Ok(LaurentSeries::truncated(terms, -(order as i64)))
}

/// `C_1` through the curve coefficients,
/// `Σ_m (m+1)_{(l-1)m} / 2^{(l-1)m+1} · C̃_{(l-1)m+1}(l-1, n, -n) λ^{-lm-1}`.
/// The `m = 0` term `n/λ` is kept.
pub fn one_point_curve(l: usize, order: usize) -> Result<LaurentSeries> {
    check(l, order)?;
    let m_max = (order - 1) / l;
    let curve = XCurve::new(l as u32 - 1, (l - 1) * m_max + 1)?;
    let mut terms = Vec::new();
    for m in 0..=m_max {
        let s = (l - 1) * m;
        let pre = pochhammer_rat(&rat(m as i64 + 1), s as u64)
            / Rational::from_integer(BigInt::from(1) << (s + 1));
        let c = ctilde_poly_on(&curve, 0, 0, s + 1)?;
        terms.push((-((l * m + 1) as i64), c.scale(&pre)));
    }
    Ok(LaurentSeries::truncated(terms, -(order as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_head() {
        let c = one_point(3, 7).unwrap();
        assert_eq!(c.coeff(-4).unwrap(), Poly::from_integers([0, 1, 0, 1]));
        assert!(c.coeff(-2).unwrap().is_zero());
        assert!(c.coeff(-8).is_err());
    }

    #[test]
    fn ribbon_head() {
        // b = 2: a single edge between two vertices, weight 1/2
        let c = one_point(2, 3).unwrap();
        assert_eq!(c.coeff(-3).unwrap(), Poly::from_integers([0, 0, 1]));
    }

    #[test]
    fn curve_path_matches() {
        for l in 2..=5 {
            let a = one_point(l, 3 * l + 1).unwrap();
            let b = one_point_curve(l, 3 * l + 1).unwrap();
            assert_eq!(b.coeff(-1).unwrap(), Poly::n());
            assert_eq!(a, b.without(-1), "l={l}");
        }
    }

    #[test]
    fn order_too_small() {
        assert!(one_point(3, 3).is_err());
    }
}
