//! The resolvent matrix `M(λ, n; l)` and its entries `y(λ, n, i, j; l)`.
//!
//! `M(λ) = Σ_{e≥0} M_e λ^{-e}` where each `M_e` has a single nonzero entry
//! per row: row `r` (0-based) only meets column `(r + e) mod l`. The blocks
//! are therefore stored as `l` polynomials each, which is what the k-point
//! extraction multiplies.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::curve::{ctilde_poly_on, XCurve};
use crate::error::{invalid, Error, Result};
use crate::exact::comb::{binomial_i64, factorial, pochhammer_rat, pochhammer_shifted};
use crate::exact::{rat, LaurentSeries, Poly, Rational};

/// A series in `λ` with polynomial coefficients plus a separate multiple of
/// `1/n` sitting at `λ^0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YSeries {
    pub series: LaurentSeries,
    pub inv_n: Rational,
}

impl YSeries {
    /// `n · y`, which is always a plain series.
    pub fn times_n(&self) -> LaurentSeries {
        let shifted = self.series.mul_poly(&Poly::n());
        &shifted + &LaurentSeries::monomial(0, Poly::constant(self.inv_n.clone()))
    }
}

fn check_indices(l: usize, i: usize, j: usize) -> Result<()> {
    if l < 2 {
        return Err(invalid("l must be at least 2"));
    }
    if !(1..=l).contains(&i) || j >= l {
        return Err(invalid(format!(
            "entry ({i}, {j}) outside 1..={l} x 0..{l}"
        )));
    }
    Ok(())
}

/// The coefficient of the `m`-th block of `y(λ, n, i, j; l)`, sitting at
/// `λ^{i-j-l-lm}`. The block `(i, j, m) = (l, 0, 0)` is `1/n` and is reported
/// through the second component.
fn y_block(l: usize, i: usize, j: usize, m: usize) -> (Poly, Rational) {
    let (li, ii, ji, mi) = (l as i64, i as i64, j as i64, m as i64);
    let len = li * mi + li - 1 - ii + ji;
    if len < 0 {
        // (n+1)_{-1} = 1/n
        return (Poly::zero(), rat(1));
    }
    let mut acc = Poly::zero();
    for s in 0..=mi {
        let c = binomial_i64(mi, s) * if s % 2 == 0 { rat(1) } else { rat(-1) };
        acc += &pochhammer_shifted(1 - ji - li * s, len as u64).scale(&c);
    }
    let den = BigInt::from(l).pow(m as u32) * factorial(m as u64);
    (acc.scale(&Rational::new(1.into(), den)), Rational::zero())
}

/// `y(λ, n, i, j; l)` with the blocks `m = 0..=blocks`.
pub fn y_entry(l: usize, i: usize, j: usize, blocks: usize) -> Result<YSeries> {
    check_indices(l, i, j)?;
    let base = i as i64 - j as i64 - l as i64;
    let mut inv_n = Rational::zero();
    let mut terms = Vec::with_capacity(blocks + 1);
    for m in 0..=blocks {
        let (p, r) = y_block(l, i, j, m);
        inv_n += r;
        terms.push((base - (l * m) as i64, p));
    }
    let floor = base - (l * blocks) as i64;
    Ok(YSeries {
        series: LaurentSeries::truncated(terms, floor),
        inv_n,
    })
}

/// The same entry through the curve coefficients `C̃`, with the same
/// truncation as `y_entry(l, i, j, blocks)`.
pub fn y_entry_curve(l: usize, i: usize, j: usize, blocks: usize) -> Result<YSeries> {
    check_indices(l, i, j)?;
    let s_max = (l - 1) * (blocks + 1) + j;
    let curve = XCurve::new(l as u32 - 1, s_max)?;
    y_entry_curve_on(&curve, l, i, j, blocks)
}

pub(crate) fn y_entry_curve_on(
    curve: &XCurve,
    l: usize,
    i: usize,
    j: usize,
    blocks: usize,
) -> Result<YSeries> {
    let (li, ii, ji) = (l as i64, i as i64, j as i64);
    let floor = ii - ji - li - li * blocks as i64;
    let mut terms = Vec::new();
    if i == j {
        terms.push((0, Poly::from_i64(-1)));
    }
    let inv_n = if i == l && j == 0 {
        rat(1)
    } else {
        Rational::zero()
    };
    let m_min = Integer::div_ceil(&(ii - ji).max(0), &(li - 1));
    for m in m_min..=(blocks as i64 + 1) {
        let s = (li - 1) * m + ji - ii;
        let poch = pochhammer_rat(&rat(m), s as u64);
        if poch.is_zero() {
            continue;
        }
        let exp = li * m + ji - ii;
        let scale = poch * pow2(m - exp);
        let c = ctilde_poly_on(curve, li - 1 - ii, ji - 1, s as usize)?;
        terms.push((-exp, c.scale(&scale)));
    }
    Ok(YSeries {
        series: LaurentSeries::truncated(terms, floor),
        inv_n,
    })
}

fn pow2(e: i64) -> Rational {
    let p = Rational::from_integer(BigInt::from(1) << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// `M(λ, n; l)` through `λ^{-order}`, stored blockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventMatrix {
    l: usize,
    order: usize,
    /// `blocks[e][r]` is the entry `(r, (r + e) mod l)` of `M_e`.
    blocks: Vec<Vec<Poly>>,
}

impl ResolventMatrix {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Row `r` of `M_e`, paired with column `(r + e) mod l`.
    pub fn block(&self, e: usize) -> Result<&[Poly]> {
        self.blocks
            .get(e)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::BelowTruncation {
                exponent: vec![-(e as i64)],
                floor: vec![-(self.order as i64)],
            })
    }

    /// Entry `(i, j)` (1-based) as a truncated series.
    pub fn entry(&self, i: usize, j: usize) -> Result<LaurentSeries> {
        if !(1..=self.l).contains(&i) || !(1..=self.l).contains(&j) {
            return Err(invalid(format!(
                "entry ({i}, {j}) outside the {0}x{0} matrix",
                self.l
            )));
        }
        let (r, c) = (i - 1, j - 1);
        let terms = (0..=self.order)
            .filter(|&e| (r + e) % self.l == c)
            .map(|e| (-(e as i64), self.blocks[e][r].clone()));
        Ok(LaurentSeries::truncated(terms, -(self.order as i64)))
    }

    /// `Tr M` as a truncated series.
    pub fn trace(&self) -> LaurentSeries {
        let terms = (0..=self.order).filter(|e| e % self.l == 0).map(|e| {
            let mut acc = Poly::zero();
            for p in &self.blocks[e] {
                acc += p;
            }
            (-(e as i64), acc)
        });
        LaurentSeries::truncated(terms, -(self.order as i64))
    }
}

/// Assembles `M(λ, n; l)` through `λ^{-order}`: column `j < l` holds
/// `δ_{ij} + y(i, j)` and column `l` holds `δ_{il} - n y(i, 0)`.
pub fn m_matrix(l: usize, order: usize) -> Result<ResolventMatrix> {
    if l < 2 {
        return Err(invalid("l must be at least 2"));
    }
    let mut blocks = Vec::with_capacity(order + 1);
    for e in 0..=order {
        let mut row = Vec::with_capacity(l);
        for r in 0..l {
            let i = r + 1;
            let c = (r + e) % l;
            let j = c + 1;
            let entry = if j < l {
                // exponent i - j - l - lm = -e
                let lm = e as i64 + i as i64 - j as i64 - l as i64;
                let mut p = if lm >= 0 && lm % l as i64 == 0 {
                    y_block(l, i, j, (lm / l as i64) as usize).0
                } else {
                    Poly::zero()
                };
                if e == 0 && i == j {
                    p += &Poly::one();
                }
                p
            } else {
                let lm = e as i64 + i as i64 - l as i64;
                let mut p = if lm >= 0 && lm % l as i64 == 0 {
                    let (poly, inv) = y_block(l, i, 0, (lm / l as i64) as usize);
                    -(&(&poly * &Poly::n()) + &Poly::constant(inv))
                } else {
                    Poly::zero()
                };
                if e == 0 && i == l {
                    p += &Poly::one();
                }
                p
            };
            row.push(entry);
        }
        blocks.push(row);
    }
    Ok(ResolventMatrix { l, order, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_blocks() {
        // m = 0: (n+1-j)_{l-1-i+j}
        let y = y_entry(4, 2, 1, 2).unwrap();
        assert_eq!(y.series.coeff(-3).unwrap(), pochhammer_shifted(0, 2));
        // (n)_1, the Pochhammer length being l - 1 - i + j = 1
        let y = y_entry(2, 1, 1, 1).unwrap();
        assert_eq!(y.series.coeff(-2).unwrap(), Poly::n());
        let y = y_entry(3, 3, 0, 1).unwrap();
        assert_eq!(y.series.coeff(-3).unwrap(), Poly::from_integers([0, 2]));
        assert_eq!(y.inv_n, rat(1));
        assert!(y.series.coeff(-7).is_err());
    }

    #[test]
    fn constant_block() {
        for l in 2..=5 {
            let m = m_matrix(l, 0).unwrap();
            for r in 0..l {
                let want = if r + 1 < l { Poly::one() } else { Poly::zero() };
                assert_eq!(m.block(0).unwrap()[r], want, "l={l} r={r}");
            }
            assert_eq!(m.trace().coeff(0).unwrap(), Poly::from_i64(l as i64 - 1));
        }
    }

    #[test]
    fn matrix_entries_match_y() {
        let l = 3;
        let m = m_matrix(l, 10).unwrap();
        for i in 1..=l {
            for j in 1..l {
                let y = y_entry(l, i, j, 4).unwrap().series;
                let e = m.entry(i, j).unwrap();
                for x in -10..0 {
                    assert_eq!(e.coeff(x).unwrap(), y.coeff(x).unwrap(), "({i},{j}) at {x}");
                }
            }
            let ny = y_entry(l, i, 0, 4).unwrap().times_n();
            let e = m.entry(i, l).unwrap();
            for x in -10..0 {
                assert_eq!(e.coeff(x).unwrap(), -ny.coeff(x).unwrap());
            }
        }
        // l = 2: entry (1,2) = -n y(1, 0)
        let m2 = m_matrix(2, 6).unwrap();
        let ny = y_entry(2, 1, 0, 3).unwrap().times_n();
        assert_eq!(
            m2.entry(1, 2).unwrap().coeff(-1).unwrap(),
            -ny.coeff(-1).unwrap()
        );
    }

    #[test]
    fn curve_form_agrees() {
        for l in 2..=4 {
            for i in 1..=l {
                for j in 0..l {
                    let a = y_entry(l, i, j, 3).unwrap();
                    let b = y_entry_curve(l, i, j, 3).unwrap();
                    assert_eq!(a.times_n(), b.times_n(), "l={l} ({i},{j})");
                }
            }
        }
        assert_eq!(y_entry_curve(3, 3, 0, 1).unwrap().inv_n, rat(1));
    }

    #[test]
    fn bad_indices() {
        assert!(y_entry(3, 0, 1, 1).is_err());
        assert!(y_entry(3, 1, 3, 1).is_err());
        assert!(m_matrix(1, 3).is_err());
    }
}
