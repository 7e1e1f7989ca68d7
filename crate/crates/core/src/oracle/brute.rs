//! Brute-force weighted count of connected labelled l-hypermaps.
//!
//! `σ₂` is fixed with labelled cycles of lengths `b_1, …, b_k` on
//! consecutive blocks. Every `σ₁` of cycle type `l^{d/l}` is visited and
//! `σ₀ = (σ₁σ₂)^{-1}`. Fixing `σ₂` replaces the `1/d!` of the orbit count
//! by `1/∏ b_j`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::perm::{
    count_cycles, first_cycles, for_each_with_first_cycle, full_mask, orbit_of_zero, Permutation,
};
use crate::error::{invalid, Error, Result};
use crate::exact::Rational;

pub const DEFAULT_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypermapSpec {
    pub l: usize,
    pub b: Vec<u64>,
    pub genus: Option<u32>,
}

impl HypermapSpec {
    pub fn new(l: usize, b: &[u64]) -> Self {
        HypermapSpec {
            l,
            b: b.to_vec(),
            genus: None,
        }
    }

    pub fn degree(&self) -> usize {
        self.b.iter().sum::<u64>() as usize
    }
}

/// Per-genus count of the triples visited, before division by `∏ b_j`.
fn tally(l: usize, b: &[u64]) -> Result<BTreeMap<u32, u64>> {
    let d: usize = b.iter().sum::<u64>() as usize;
    let k = b.len() as i64;
    let blocks: Vec<usize> = b.iter().map(|&x| x as usize).collect();
    let sigma2 = Permutation::canonical(&blocks);
    let s2 = sigma2.images();
    let class = vec![l; d / l];
    let euler = 2 - k + ((l as i64 - 1) * d as i64) / l as i64;
    let full = full_mask(d);

    let chunks = first_cycles(&class);
    let partial: Vec<Result<Vec<u64>>> = chunks
        .par_iter()
        .map(|first| {
            let mut counts: Vec<u64> = Vec::new();
            let mut bad: Option<usize> = None;
            let mut comp = [0u8; 64];
            for_each_with_first_cycle(&class, first, |s1| {
                if orbit_of_zero(&[s1, s2], d) != full {
                    return;
                }
                for x in 0..d {
                    comp[x] = s1[s2[x] as usize];
                }
                let v = count_cycles(&comp[..d]) as i64;
                let twice_g = euler - v;
                if twice_g < 0 || twice_g % 2 != 0 {
                    bad.get_or_insert(v as usize);
                    return;
                }
                let g = (twice_g / 2) as usize;
                if counts.len() <= g {
                    counts.resize(g + 1, 0);
                }
                counts[g] += 1;
            });
            match bad {
                Some(v) => Err(Error::Internal(format!(
                    "triple with {v} vertices has no integral genus"
                ))),
                None => Ok(counts),
            }
        })
        .collect();

    let mut out = BTreeMap::new();
    for p in partial {
        for (g, c) in p?.into_iter().enumerate() {
            if c > 0 {
                *out.entry(g as u32).or_insert(0) += c;
            }
        }
    }
    Ok(out)
}

/// Weighted count of connected labelled l-hypermaps with face degrees `b`,
/// by genus. Genera with no hypermaps are absent.
pub fn brute_count(l: usize, b: &[u64], cap: usize) -> Result<BTreeMap<u32, Rational>> {
    if l < 1 {
        return Err(invalid("l must be positive"));
    }
    if b.is_empty() || b.contains(&0) {
        return Err(invalid("b must be a nonempty list of positive integers"));
    }
    let d = b.iter().sum::<u64>() as usize;
    if d > cap || d > 32 {
        return Err(Error::OracleCap {
            degree: d,
            cap: cap.min(32),
        });
    }
    if !d.is_multiple_of(l) {
        return Ok(BTreeMap::new());
    }
    let prod: u64 = b.iter().product();
    Ok(tally(l, b)?
        .into_iter()
        .map(|(g, c)| (g, Rational::new(BigInt::from(c), BigInt::from(prod))))
        .collect())
}

/// `brute_count` restricted to the spec's genus filter.
pub fn brute_count_spec(spec: &HypermapSpec, cap: usize) -> Result<BTreeMap<u32, Rational>> {
    let mut m = brute_count(spec.l, &spec.b, cap)?;
    if let Some(g) = spec.genus {
        m.retain(|&h, _| h == g);
    }
    Ok(m)
}
