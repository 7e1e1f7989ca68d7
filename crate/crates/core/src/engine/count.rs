//! Extraction of `M^[l]_k(b; n)` and its genus split.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::json;

use super::kpoint::{kpoint_coefficient, truncation_order};
use super::onepoint::one_point_block;
use super::resolvent::{m_matrix, ResolventMatrix};
use crate::error::{invalid, Error, Result};
use crate::exact::{format_rational, parse_rational, rat, Poly, Rational, Region};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountResult {
    pub l: usize,
    /// Sorted ascending.
    pub b: Vec<u64>,
    /// `M^[l]_k(b; n)`.
    pub poly_n: Poly,
    pub by_genus: BTreeMap<u32, Rational>,
}

impl CountResult {
    pub fn k(&self) -> usize {
        self.b.len()
    }

    pub fn degree(&self) -> u64 {
        self.b.iter().sum()
    }

    pub fn genus(&self, g: u32) -> Rational {
        self.by_genus
            .get(&g)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.poly_n.is_zero()
    }

    /// `{"l", "b", "poly_n": [["p/q", exp], …], "by_genus": {"g": "p/q"}}`,
    /// with `poly_n` listing nonzero terms by ascending exponent.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "l": self.l,
            "b": self.b,
            "poly_n": poly_pairs(&self.poly_n),
            "by_genus": genus_map_json(&self.by_genus),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("count result JSON: {what}"));
        let l = v["l"].as_u64().ok_or_else(|| bad("l"))? as usize;
        let b = v["b"]
            .as_array()
            .ok_or_else(|| bad("b"))?
            .iter()
            .map(|x| x.as_u64().ok_or_else(|| bad("b entry")))
            .collect::<Result<Vec<u64>>>()?;
        let mut poly_n = Poly::zero();
        for t in v["poly_n"].as_array().ok_or_else(|| bad("poly_n"))? {
            let c = parse_rational(t[0].as_str().ok_or_else(|| bad("coefficient"))?)?;
            let e = t[1].as_u64().ok_or_else(|| bad("exponent"))?;
            poly_n += &Poly::constant(c).shift_degree(e as usize);
        }
        let mut by_genus = BTreeMap::new();
        for (g, c) in v["by_genus"].as_object().ok_or_else(|| bad("by_genus"))? {
            let g: u32 = g.parse().map_err(|_| bad("genus key"))?;
            by_genus.insert(
                g,
                parse_rational(c.as_str().ok_or_else(|| bad("genus value"))?)?,
            );
        }
        Ok(CountResult {
            l,
            b,
            poly_n,
            by_genus,
        })
    }
}

/// `[["p/q", exp], …]` over the nonzero terms, ascending exponent.
pub fn poly_pairs(p: &Poly) -> serde_json::Value {
    serde_json::Value::Array(
        p.terms()
            .map(|(e, c)| json!([format_rational(&c), e]))
            .collect(),
    )
}

pub fn genus_map_json(m: &BTreeMap<u32, Rational>) -> serde_json::Value {
    let obj: serde_json::Map<String, serde_json::Value> = m
        .iter()
        .map(|(g, c)| (g.to_string(), json!(format_rational(c))))
        .collect();
    serde_json::Value::Object(obj)
}

/// Largest genus allowed by the Euler characteristic, or `None` when even
/// genus 0 is impossible.
pub fn max_genus(l: usize, b: &[u64]) -> Option<u32> {
    let d: u64 = b.iter().sum();
    if l == 0 || !d.is_multiple_of(l as u64) {
        return None;
    }
    // 2 - 2g - k + (l-1)d/l >= 1 vertices
    let top = 1 - b.len() as i64 + ((l as i64 - 1) * d as i64) / l as i64;
    (top >= 0).then_some((top / 2) as u32)
}

/// Exponent of `n` carried by genus `g`.
pub fn n_exponent(l: usize, b: &[u64], g: u32) -> i64 {
    let d: u64 = b.iter().sum();
    2 - 2 * g as i64 - b.len() as i64 + ((l as i64 - 1) * d as i64) / l as i64
}

fn validate(l: usize, b: &[u64]) -> Result<()> {
    if l < 2 {
        return Err(invalid("l must be at least 2"));
    }
    if b.is_empty() {
        return Err(invalid("b must contain at least one entry"));
    }
    if b.contains(&0) {
        return Err(invalid("every b_j must be positive"));
    }
    Ok(())
}

/// Splits `M_k(b; n)` into genus contributions, rejecting exponents that do
/// not have the form `2 - 2g - k + (l-1)|b|/l`.
pub fn split_by_genus(l: usize, b: &[u64], poly: &Poly) -> Result<BTreeMap<u32, Rational>> {
    let mut out = BTreeMap::new();
    if poly.is_zero() {
        return Ok(out);
    }
    let top = n_exponent(l, b, 0);
    for (exp, c) in poly.terms() {
        let gap = top - exp as i64;
        if gap < 0 || gap % 2 != 0 {
            return Err(Error::Internal(format!(
                "n^{exp} is not an admissible exponent for l={l}, b={b:?}"
            )));
        }
        out.insert((gap / 2) as u32, c);
    }
    Ok(out)
}

fn finish(l: usize, b: &[u64], poly: Poly) -> Result<CountResult> {
    let by_genus = split_by_genus(l, b, &poly)?;
    let mut sorted = b.to_vec();
    sorted.sort_unstable();
    Ok(CountResult {
        l,
        b: sorted,
        poly_n: poly,
        by_genus,
    })
}

/// Coefficient of `∏ b_j λ_j^{-b_j-1}` in `C_k`, i.e. `∏ b_j · M_k(b; n)`,
/// in the given region, using a matrix that reaches far enough.
pub fn weighted_coefficient(mat: &ResolventMatrix, region: &Region, b: &[u64]) -> Result<Poly> {
    let l = mat.l();
    let d: u64 = b.iter().sum();
    if b.len() == 1 {
        if !d.is_multiple_of(l as u64) {
            return Ok(Poly::zero());
        }
        return Ok(one_point_block(l, (d / l as u64) as usize));
    }
    let exps: Vec<i64> = b.iter().map(|&x| -(x as i64) - 1).collect();
    kpoint_coefficient(mat, region, &exps)
}

/// `M^[l]_k(b; n)` with its genus split, from the matrix-resolvent formulas.
pub fn count_poly(l: usize, b: &[u64]) -> Result<CountResult> {
    validate(l, b)?;
    let d: u64 = b.iter().sum();
    if !d.is_multiple_of(l as u64) {
        return finish(l, b, Poly::zero());
    }
    let mat = m_matrix(l, truncation_order(l, b.len(), d as usize))?;
    count_poly_with(&mat, &Region::standard(b.len()), b)
}

/// As `count_poly`, reusing a prebuilt matrix and an explicit region.
pub fn count_poly_with(mat: &ResolventMatrix, region: &Region, b: &[u64]) -> Result<CountResult> {
    let l = mat.l();
    validate(l, b)?;
    let d: u64 = b.iter().sum();
    if !d.is_multiple_of(l as u64) {
        return finish(l, b, Poly::zero());
    }
    let weighted = weighted_coefficient(mat, region, b)?;
    let prod: u64 = b.iter().product();
    finish(l, b, weighted.scale(&(rat(1) / rat(prod as i64))))
}

/// Recomputes with one more block of truncation and reports whether the
/// result moved.
pub fn truncation_is_stable(l: usize, b: &[u64]) -> Result<bool> {
    validate(l, b)?;
    let d: u64 = b.iter().sum();
    let order = truncation_order(l, b.len(), d as usize);
    let region = Region::standard(b.len());
    let a = count_poly_with(&m_matrix(l, order)?, &region, b)?;
    let c = count_poly_with(&m_matrix(l, order + l)?, &region, b)?;
    Ok(a == c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn small_anchors() {
        let r = count_poly(5, &[1, 2, 2]).unwrap();
        assert_eq!(r.genus(0), rat(4));
        let r = count_poly(3, &[3, 3, 3]).unwrap();
        assert_eq!(
            r.by_genus,
            BTreeMap::from([(0, rat(8)), (1, ratio(152, 3)), (2, rat(16))])
        );
        let r = count_poly(3, &[2]).unwrap();
        assert!(r.is_zero() && r.by_genus.is_empty());
    }

    #[test]
    fn one_point_split() {
        let r = count_poly(4, &[4]).unwrap();
        assert_eq!(r.genus(0), ratio(1, 4));
        assert_eq!(r.genus(1), ratio(5, 4));
        assert_eq!(r.genus(2), rat(0));
    }

    #[test]
    fn bad_input() {
        assert!(count_poly(1, &[1]).is_err());
        assert!(count_poly(3, &[]).is_err());
        assert!(count_poly(3, &[0, 3]).is_err());
        assert!(split_by_genus(3, &[3], &Poly::from_integers([0, 0, 1])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let r = count_poly(3, &[3, 3, 3]).unwrap();
        let v = r.to_json();
        assert_eq!(v["by_genus"]["1"], "152/3");
        assert_eq!(CountResult::from_json(&v).unwrap(), r);
    }

    #[test]
    fn stability() {
        assert!(truncation_is_stable(3, &[2, 4]).unwrap());
    }
}
