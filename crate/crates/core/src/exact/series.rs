//! Truncated Laurent series in one variable `λ` with coefficients in
//! `Q[n]`.
//!
//! A series stores every term with exponent `>= floor`; terms below the
//! floor are unknown and asking for them is an error. Series without a
//! floor are exact. All series used here are bounded above (they are
//! expansions at `λ = ∞`), which makes truncation propagation simple:
//! the product of two series is known down to
//! `max(floor_a + top_b, floor_b + top_a)`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LaurentSeries {
    terms: BTreeMap<i64, Poly>,
    floor: Option<i64>,
}

impl LaurentSeries {
    pub fn exact(terms: impl IntoIterator<Item = (i64, Poly)>) -> Self {
        Self::build(terms, None)
    }

    pub fn truncated(terms: impl IntoIterator<Item = (i64, Poly)>, floor: i64) -> Self {
        Self::build(terms, Some(floor))
    }

    fn build(terms: impl IntoIterator<Item = (i64, Poly)>, floor: Option<i64>) -> Self {
        let mut map: BTreeMap<i64, Poly> = BTreeMap::new();
        for (e, p) in terms {
            if floor.is_some_and(|f| e < f) {
                continue;
            }
            let slot = map.entry(e).or_default();
            *slot += &p;
        }
        map.retain(|_, p| !p.is_zero());
        LaurentSeries { terms: map, floor }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, c: Poly) -> Self {
        Self::exact([(exp, c)])
    }

    pub fn floor(&self) -> Option<i64> {
        self.floor
    }

    /// Lowest stored exponent.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// An upper bound for every exponent of the full (untruncated) series.
    pub fn top(&self) -> Option<i64> {
        let stored = self.terms.keys().next_back().copied();
        match (stored, self.floor) {
            (Some(s), Some(f)) => Some(s.max(f - 1)),
            (Some(s), None) => Some(s),
            (None, Some(f)) => Some(f - 1),
            (None, None) => None,
        }
    }

    pub fn coeff(&self, exp: i64) -> Result<Poly> {
        if let Some(f) = self.floor {
            if exp < f {
                return Err(Error::BelowTruncation {
                    exponent: vec![exp],
                    floor: vec![f],
                });
            }
        }
        Ok(self.terms.get(&exp).cloned().unwrap_or_default())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Poly)> {
        self.terms.iter().map(|(e, p)| (*e, p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Restricts to exponents `>= floor`, lowering knowledge accordingly.
    pub fn truncate(&self, floor: i64) -> Self {
        let f = self.floor.map_or(floor, |g| g.max(floor));
        Self::truncated(self.terms.iter().map(|(e, p)| (*e, p.clone())), f)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        Self::build(self.terms.iter().map(|(e, p)| (*e, f(p))), self.floor)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|p| p.scale(c))
    }

    pub fn mul_poly(&self, c: &Poly) -> Self {
        self.map_coeffs(|p| p * c)
    }

    /// Multiplies by `λ^s`.
    pub fn shift(&self, s: i64) -> Self {
        LaurentSeries {
            terms: self.terms.iter().map(|(e, p)| (e + s, p.clone())).collect(),
            floor: self.floor.map(|f| f + s),
        }
    }

    /// Drops the given exponent (used to discard unstable terms).
    pub fn without(&self, exp: i64) -> Self {
        let mut out = self.clone();
        out.terms.remove(&exp);
        out
    }

    /// Compares two series on every exponent both know, returning the first
    /// exponent where they differ.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        let floor = match (self.floor, other.floor) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let keys: std::collections::BTreeSet<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        keys.into_iter()
            .filter(|e| floor.is_none_or(|f| *e >= f))
            .find(|e| self.terms.get(e) != other.terms.get(e))
    }
}

fn merged_floor(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, y) => x.or(y),
    }
}

impl Add<&LaurentSeries> for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        LaurentSeries::build(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, p)| (*e, p.clone())),
            merged_floor(self.floor, rhs.floor),
        )
    }
}

impl Sub<&LaurentSeries> for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        self.map_coeffs(|p| -p)
    }
}

impl Mul<&LaurentSeries> for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        let floor = match (self.floor, rhs.floor) {
            (None, None) => None,
            (fa, fb) => {
                let a = fa.and_then(|f| rhs.top().map(|t| f + t));
                let b = fb.and_then(|f| self.top().map(|t| f + t));
                merged_floor(a, b).or(Some(i64::MIN / 4))
            }
        };
        let mut acc: BTreeMap<i64, Poly> = BTreeMap::new();
        for (ea, pa) in &self.terms {
            for (eb, pb) in &rhs.terms {
                let e = ea + eb;
                if floor.is_some_and(|f| e < f) {
                    continue;
                }
                acc.entry(e).or_default().add_product(pa, pb);
            }
        }
        acc.retain(|_, p| !p.is_zero());
        LaurentSeries { terms: acc, floor }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn s(terms: &[(i64, i64)], floor: Option<i64>) -> LaurentSeries {
        LaurentSeries::build(terms.iter().map(|(e, c)| (*e, Poly::from_i64(*c))), floor)
    }

    #[test]
    fn query_below_floor_is_an_error() {
        let a = s(&[(0, 1), (-1, 2)], Some(-3));
        assert_eq!(a.coeff(-2).unwrap(), Poly::zero());
        assert!(matches!(a.coeff(-4), Err(Error::BelowTruncation { .. })));
    }

    #[test]
    fn product_floor_is_pessimistic() {
        // (1 + λ^-1 + ...)(λ^2 + ...) known to λ^{-3+2} and λ^{-5+0}
        let a = s(&[(0, 1), (-1, 1), (-2, 1), (-3, 1)], Some(-3));
        let b = s(&[(2, 1), (0, 1)], Some(-5));
        let p = &a * &b;
        assert_eq!(p.floor(), Some(-1));
        assert_eq!(p.coeff(2).unwrap(), Poly::one());
        assert_eq!(p.coeff(-1).unwrap(), Poly::from_i64(2));
        assert!(p.coeff(-2).is_err());
    }

    #[test]
    fn exact_series_multiply_exactly() {
        let a = s(&[(1, 1), (0, -1)], None);
        let b = s(&[(1, 1), (0, 1)], None);
        assert_eq!(&a * &b, s(&[(2, 1), (0, -1)], None));
        assert_eq!((&a * &b).coeff(-100).unwrap(), Poly::zero());
        let _ = rat(0);
    }
}
