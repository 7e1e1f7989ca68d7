//! Truncated multivariate Laurent series in `λ_1, …, λ_k` with coefficients
//! in `Q[n]`, and the geometric expansion of `1/(λ_a - λ_b)` inside a fixed
//! ordering region `|λ_{r_1}| > |λ_{r_2}| > …`.
//!
//! Truncation is a per-variable floor vector: any term that is not stored
//! has, in some variable, an exponent below that variable's floor. Each
//! variable also carries an optional ceiling bounding the exponents of the
//! full series from above; products use it to propagate floors
//! pessimistically. A floor of `i64::MAX` means nothing is known.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use crate::error::{invalid, Error, Result};

const UNKNOWN: i64 = i64::MAX;

/// A total order of the variables by modulus, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Region {
    rank: Vec<usize>,
}

impl Region {
    /// `|λ_1| > |λ_2| > … > |λ_k|`
    pub fn standard(k: usize) -> Self {
        Region {
            rank: (0..k).collect(),
        }
    }

    /// `|λ_k| > … > |λ_1|`
    pub fn reversed(k: usize) -> Self {
        Region {
            rank: (0..k).rev().collect(),
        }
    }

    /// Variables listed from largest to smallest modulus.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let k = order.len();
        let mut rank = vec![usize::MAX; k];
        for (r, &v) in order.iter().enumerate() {
            if v >= k || rank[v] != usize::MAX {
                return Err(invalid(format!("{order:?} is not an ordering of 0..{k}")));
            }
            rank[v] = r;
        }
        Ok(Region { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// True when `|λ_a| > |λ_b|` in this region.
    pub fn outer(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    /// The variable of largest modulus.
    pub fn top(&self) -> usize {
        self.rank
            .iter()
            .position(|&r| r == 0)
            .expect("nonempty region")
    }
}

/// `1/(λ_a - λ_b) = sign · Σ_{t≥0} λ_inner^t λ_outer^{-t-1}` in a region.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InverseDifference {
    pub outer: usize,
    pub inner: usize,
    pub sign: i64,
}

impl InverseDifference {
    pub fn new(region: &Region, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(invalid("inverse difference of a variable with itself"));
        }
        Ok(if region.outer(a, b) {
            InverseDifference {
                outer: a,
                inner: b,
                sign: 1,
            }
        } else {
            InverseDifference {
                outer: b,
                inner: a,
                sign: -1,
            }
        })
    }

    /// Exponent contributed to variable `v` by the term of index `t`.
    pub fn exponent_of(&self, v: usize, t: i64) -> i64 {
        if v == self.outer {
            -t - 1
        } else if v == self.inner {
            t
        } else {
            0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiSeries {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Poly>,
    floors: Vec<Option<i64>>,
    ceilings: Vec<Option<i64>>,
}

impl MultiSeries {
    /// An exact (finite) series. Ceilings are taken from the terms.
    pub fn exact(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, Poly)>) -> Self {
        let mut s = MultiSeries {
            nvars,
            terms: BTreeMap::new(),
            floors: vec![None; nvars],
            ceilings: vec![None; nvars],
        };
        s.insert_all(terms);
        for v in 0..nvars {
            s.ceilings[v] = Some(s.terms.keys().map(|e| e[v]).max().unwrap_or(0));
        }
        s
    }

    /// A truncated series: `floors[v]` as described in the module docs and
    /// `ceilings[v]` bounding all exponents of the untruncated series.
    pub fn truncated(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, Poly)>,
        floors: Vec<Option<i64>>,
        ceilings: Vec<Option<i64>>,
    ) -> Self {
        assert_eq!(floors.len(), nvars);
        assert_eq!(ceilings.len(), nvars);
        let mut s = MultiSeries {
            nvars,
            terms: BTreeMap::new(),
            floors,
            ceilings,
        };
        s.insert_all(terms);
        s
    }

    fn insert_all(&mut self, terms: impl IntoIterator<Item = (Vec<i64>, Poly)>) {
        for (e, p) in terms {
            assert_eq!(e.len(), self.nvars, "exponent vector length");
            if self.below_floor(&e) {
                continue;
            }
            let slot = self.terms.entry(e).or_default();
            *slot += &p;
        }
        self.terms.retain(|_, p| !p.is_zero());
    }

    fn below_floor(&self, e: &[i64]) -> bool {
        e.iter()
            .zip(&self.floors)
            .any(|(x, f)| f.is_some_and(|f| *x < f))
    }

    pub fn one(nvars: usize) -> Self {
        Self::exact(nvars, [(vec![0; nvars], Poly::one())])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn floors(&self) -> &[Option<i64>] {
        &self.floors
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Poly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i64]) -> Result<Poly> {
        if e.len() != self.nvars {
            return Err(invalid("exponent vector has the wrong length"));
        }
        if self.below_floor(e) {
            return Err(Error::BelowTruncation {
                exponent: e.to_vec(),
                floor: self.floors.iter().map(|f| f.unwrap_or(i64::MIN)).collect(),
            });
        }
        Ok(self.terms.get(e).cloned().unwrap_or_default())
    }

    /// The monomial `λ_v` (degree 1) as an exact series.
    pub fn variable(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Self::exact(nvars, [(e, Poly::one())])
    }

    pub fn scale_poly(&self, c: &Poly) -> Self {
        let mut out = self.clone();
        out.terms = self.terms.iter().map(|(e, p)| (e.clone(), p * c)).collect();
        out.terms.retain(|_, p| !p.is_zero());
        out
    }
}

/// Geometric expansion of `1/(λ_a - λ_b)` in `region`, keeping the terms
/// `t = 0..=order`. Variables are 0-based.
pub fn expand_inverse_difference_in(
    region: &Region,
    a: usize,
    b: usize,
    order: u32,
) -> Result<MultiSeries> {
    let k = region.len();
    if a >= k || b >= k {
        return Err(invalid("variable index out of range"));
    }
    let d = InverseDifference::new(region, a, b)?;
    let terms = (0..=order as i64).map(|t| {
        let mut e = vec![0i64; k];
        e[d.outer] = -t - 1;
        e[d.inner] = t;
        (e, Poly::from_i64(d.sign))
    });
    let mut floors = vec![None; k];
    floors[d.outer] = Some(-(order as i64) - 1);
    let mut ceilings = vec![Some(0); k];
    ceilings[d.outer] = Some(-1);
    ceilings[d.inner] = None;
    Ok(MultiSeries::truncated(k, terms, floors, ceilings))
}

/// Expansion in the standard region `|λ_0| > |λ_1| > …` over `k` variables.
pub fn expand_inverse_difference(k: usize, a: usize, b: usize, order: u32) -> Result<MultiSeries> {
    expand_inverse_difference_in(&Region::standard(k), a, b, order)
}

fn add_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    a?.checked_add(b?)
}

impl Mul<&MultiSeries> for &MultiSeries {
    type Output = MultiSeries;
    fn mul(self, rhs: &MultiSeries) -> MultiSeries {
        assert_eq!(self.nvars, rhs.nvars);
        let k = self.nvars;
        let mut floors = vec![None; k];
        for v in 0..k {
            let from = |f: Option<i64>, ceil: Option<i64>| -> Option<i64> {
                f.map(|f| {
                    if f == UNKNOWN {
                        UNKNOWN
                    } else {
                        add_opt(Some(f), ceil).unwrap_or(UNKNOWN)
                    }
                })
            };
            let a = from(self.floors[v], rhs.ceilings[v]);
            let b = from(rhs.floors[v], self.ceilings[v]);
            floors[v] = match (a, b) {
                (Some(x), Some(y)) => Some(x.max(y)),
                (x, y) => x.or(y),
            };
        }
        let ceilings = (0..k)
            .map(|v| add_opt(self.ceilings[v], rhs.ceilings[v]))
            .collect();
        let mut acc: BTreeMap<Vec<i64>, Poly> = BTreeMap::new();
        for (ea, pa) in &self.terms {
            for (eb, pb) in &rhs.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if e.iter()
                    .zip(&floors)
                    .any(|(x, f)| f.is_some_and(|f| *x < f))
                {
                    continue;
                }
                acc.entry(e).or_default().add_product(pa, pb);
            }
        }
        acc.retain(|_, p| !p.is_zero());
        MultiSeries {
            nvars: k,
            terms: acc,
            floors,
            ceilings,
        }
    }
}

impl Add<&MultiSeries> for &MultiSeries {
    type Output = MultiSeries;
    fn add(self, rhs: &MultiSeries) -> MultiSeries {
        assert_eq!(self.nvars, rhs.nvars);
        let k = self.nvars;
        let floors = (0..k)
            .map(|v| match (self.floors[v], rhs.floors[v]) {
                (Some(x), Some(y)) => Some(x.max(y)),
                (x, y) => x.or(y),
            })
            .collect();
        let ceilings = (0..k)
            .map(|v| Some(self.ceilings[v]?.max(rhs.ceilings[v]?)))
            .collect();
        MultiSeries::truncated(
            k,
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, p)| (e.clone(), p.clone())),
            floors,
            ceilings,
        )
    }
}

impl Neg for &MultiSeries {
    type Output = MultiSeries;
    fn neg(self) -> MultiSeries {
        self.scale_poly(&Poly::from_i64(-1))
    }
}

impl Sub<&MultiSeries> for &MultiSeries {
    type Output = MultiSeries;
    fn sub(self, rhs: &MultiSeries) -> MultiSeries {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_head() {
        let s = expand_inverse_difference(2, 0, 1, 2).unwrap();
        assert_eq!(s.coeff(&[-1, 0]).unwrap(), Poly::one());
        assert_eq!(s.coeff(&[-2, 1]).unwrap(), Poly::one());
        assert_eq!(s.coeff(&[-3, 2]).unwrap(), Poly::one());
        assert!(s.coeff(&[-4, 3]).is_err());
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn expansion_is_antisymmetric() {
        for order in 0..5 {
            let a = expand_inverse_difference(3, 0, 2, order).unwrap();
            let b = expand_inverse_difference(3, 2, 0, order).unwrap();
            assert!((&a + &b).is_empty());
        }
    }

    #[test]
    fn equal_indices_rejected() {
        assert!(expand_inverse_difference(2, 1, 1, 3).is_err());
    }

    #[test]
    fn multiplying_back_gives_one() {
        let diff = &MultiSeries::variable(2, 0) - &MultiSeries::variable(2, 1);
        let inv = expand_inverse_difference(2, 0, 1, 4).unwrap();
        let prod = &diff * &inv;
        assert_eq!(prod.floors()[0], Some(-4));
        assert_eq!(prod.terms().count(), 1);
        assert_eq!(prod.coeff(&[0, 0]).unwrap(), Poly::one());
        assert!(prod.coeff(&[-5, 5]).is_err());
    }

    #[test]
    fn region_reversal_flips_expansion() {
        let r = Region::reversed(2);
        let s = expand_inverse_difference_in(&r, 0, 1, 1).unwrap();
        // |λ_1| > |λ_0|: 1/(λ_0 - λ_1) = -Σ λ_0^t λ_1^{-t-1}
        assert_eq!(s.coeff(&[0, -1]).unwrap(), Poly::from_i64(-1));
        assert_eq!(s.coeff(&[1, -2]).unwrap(), Poly::from_i64(-1));
        assert!(Region::from_order(&[0, 0]).is_err());
        assert_eq!(Region::from_order(&[1, 0]).unwrap(), r);
    }
}
