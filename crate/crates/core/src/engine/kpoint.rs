//! Coefficient extraction for the k-point function, `k ≥ 2`.
//!
//! For a cyclic order `u_0, …, u_{k-1}` of the variables, each inverse
//! difference `1/(λ_{u_q} - λ_{u_{q+1}})` is expanded in the region as
//! `± Σ_t λ_inner^t λ_outer^{-t-1}`. Fixing a target exponent vector, the
//! summation indices `t_q` determine which block `M_e` sits at each
//! position, and the sum over all `t` is finite. It is evaluated by a
//! dynamic program over positions whose state is the outgoing `t` and the
//! running product of blocks.
//!
//! The cycle is rotated to start at the variable of largest modulus, which
//! is the outer variable of both its factors; that bounds the closing index.
//! Cyclic orders giving the same sequence of (exponent, direction) pairs
//! contribute the same amount and are evaluated once.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::resolvent::{m_matrix, ResolventMatrix};
use crate::error::{invalid, Error, Result};
use crate::exact::{InverseDifference, MultiSeries, Poly, Region};

/// One position of a cyclic order: the target exponent of its variable and
/// whether that variable is the outer one of the factor leaving it.
type Step = (i64, bool);

fn pattern_sign(key: &[Step]) -> i64 {
    if key.iter().filter(|s| !s.1).count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Multiplicity of every distinct pattern over the `(k-1)!` cyclic orders.
fn patterns(region: &Region, exps: &[i64]) -> Result<Vec<(Vec<Step>, u64)>> {
    let k = exps.len();
    let top = region.top();
    let rest: Vec<usize> = (0..k).filter(|&v| v != top).collect();
    // exponent classes keep the packed key small
    let mut classes: Vec<i64> = exps.to_vec();
    classes.sort_unstable();
    classes.dedup();
    if k > 21 {
        return Err(Error::Unsupported(format!(
            "k = {k} cyclic orders are too many to enumerate"
        )));
    }
    let class_of: Vec<u128> = exps
        .iter()
        .map(|e| classes.binary_search(e).unwrap() as u128)
        .collect();

    let mut counts: HashMap<u128, u64> = HashMap::new();
    let mut order = vec![top; k];
    let mut used = vec![false; rest.len()];
    fn dfs(
        pos: usize,
        key: u128,
        order: &mut [usize],
        used: &mut [bool],
        rest: &[usize],
        region: &Region,
        class_of: &[u128],
        counts: &mut HashMap<u128, u64>,
    ) {
        let k = order.len();
        let prev = order[pos - 1];
        if pos == k {
            // closing factor back to the top variable
            let key =
                key | (class_of[prev] << 1 | region.outer(prev, order[0]) as u128) << (6 * (k - 1));
            *counts.entry(key).or_default() += 1;
            return;
        }
        for idx in 0..rest.len() {
            if used[idx] {
                continue;
            }
            let v = rest[idx];
            let step = class_of[prev] << 1 | region.outer(prev, v) as u128;
            used[idx] = true;
            order[pos] = v;
            dfs(
                pos + 1,
                key | step << (6 * (pos - 1)),
                order,
                used,
                rest,
                region,
                class_of,
                counts,
            );
            used[idx] = false;
        }
    }
    dfs(
        1,
        0,
        &mut order,
        &mut used,
        &rest,
        region,
        &class_of,
        &mut counts,
    );

    let mut out: Vec<(Vec<Step>, u64)> = counts
        .into_iter()
        .map(|(packed, c)| {
            let key = (0..k)
                .map(|q| {
                    let bits = (packed >> (6 * q)) & 0x3f;
                    (classes[(bits >> 1) as usize], bits & 1 == 1)
                })
                .collect();
            (key, c)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Sum over all `t` of the trace for one pattern, without the factor signs.
fn pattern_value(mat: &ResolventMatrix, key: &[Step]) -> Result<Poly> {
    let k = key.len();
    let l = mat.l();
    let total: i64 = -key.iter().map(|s| s.0).sum::<i64>() - k as i64;
    if total < 0 || total % l as i64 != 0 {
        return Ok(Poly::zero());
    }
    if total as usize > mat.order() {
        return Err(Error::BelowTruncation {
            exponent: vec![-total],
            floor: vec![-(mat.order() as i64)],
        });
    }
    debug_assert!(
        key[0].1 && !key[k - 1].1,
        "cycle must start at the top variable"
    );
    // exponent contributed by factor q to its left and right variables
    let left = |q: usize, t: i64| if key[q].1 { -t - 1 } else { t };
    let right = |q: usize, t: i64| if key[q].1 { t } else { -t - 1 };

    let mut acc = Poly::zero();
    let t_close_max = -key[0].0 - 2;
    for t_close in 0..=t_close_max {
        // state: outgoing t -> (accumulated shift, row products)
        let mut states: BTreeMap<i64, (usize, Vec<Poly>)> = BTreeMap::new();
        let base0 = -key[0].0 + right(k - 1, t_close);
        for t0 in 0..=(base0 - 1).max(-1) {
            let e = base0 + left(0, t0);
            if e < 0 {
                continue;
            }
            let blk = mat.block(e as usize)?;
            states.insert(t0, (e as usize, blk.to_vec()));
        }
        for q in 1..k {
            let mut next: BTreeMap<i64, (usize, Vec<Poly>)> = BTreeMap::new();
            for (&t_prev, (shift, rows)) in &states {
                let base = -key[q].0 + right(q - 1, t_prev);
                let range: Vec<i64> = if q == k - 1 {
                    vec![t_close]
                } else if key[q].1 {
                    (0..base.max(0)).collect()
                } else {
                    ((-base).max(0)..=total - base).collect()
                };
                for t in range {
                    let e = base + left(q, t);
                    if e < 0 || e > total {
                        continue;
                    }
                    let blk = mat.block(e as usize)?;
                    let prod: Vec<Poly> =
                        (0..l).map(|r| &rows[r] * &blk[(r + shift) % l]).collect();
                    if prod.iter().all(Poly::is_zero) {
                        continue;
                    }
                    let new_shift = shift + e as usize;
                    match next.get_mut(&t) {
                        Some((s, cur)) => {
                            debug_assert_eq!(*s, new_shift);
                            for (c, p) in cur.iter_mut().zip(&prod) {
                                *c += p;
                            }
                        }
                        None => {
                            next.insert(t, (new_shift, prod));
                        }
                    }
                }
            }
            states = next;
        }
        for (_, (shift, rows)) in states {
            debug_assert_eq!(shift as i64, total);
            for p in &rows {
                acc += p;
            }
        }
    }
    Ok(acc)
}

/// Coefficient of `-(l-1)/(λ_1 - λ_2)^2` at the given exponents.
fn double_pole_term(l: usize, region: &Region, exps: &[i64]) -> Result<Poly> {
    let d = InverseDifference::new(region, 0, 1)?;
    let t = exps[d.inner];
    if t >= 0 && exps[d.outer] == -t - 2 {
        Ok(Poly::from_i64(-((l as i64 - 1) * (t + 1))))
    } else {
        Ok(Poly::zero())
    }
}

/// Coefficient of `∏ λ_v^{exps[v]}` in `C_k` for `k = exps.len() ≥ 2`,
/// expanded in `region`. `mat` must reach `λ^{-(-Σ exps - k)}`.
pub fn kpoint_coefficient(mat: &ResolventMatrix, region: &Region, exps: &[i64]) -> Result<Poly> {
    let k = exps.len();
    if k < 2 {
        return Err(invalid("the k-point extraction needs k >= 2"));
    }
    if region.len() != k {
        return Err(invalid("region and exponent vector disagree on k"));
    }
    let pats = patterns(region, exps)?;
    let parts: Vec<Result<Poly>> = pats
        .par_iter()
        .map(|(key, count)| {
            let v = pattern_value(mat, key)?;
            Ok(v.scale_i64(pattern_sign(key) * *count as i64))
        })
        .collect();
    let mut acc = Poly::zero();
    for p in parts {
        acc -= &p?;
    }
    if k == 2 {
        acc += &double_pole_term(mat.l(), region, exps)?;
    }
    Ok(acc)
}

/// Truncation order used for a target with `|b| = total`: the matrix is
/// built through `λ^{-(total + k + 2l)}`.
pub fn truncation_order(l: usize, k: usize, total: usize) -> usize {
    total + k + 2 * l
}

/// `C_k` on the exponent box `-(b_max+1) ≤ e_v ≤ 1` in the standard region.
/// Exponents above `-2` are included so that pole cancellation is visible.
pub fn k_point(l: usize, k: usize, b_max: usize) -> Result<MultiSeries> {
    k_point_in(l, &Region::standard(k), b_max)
}

pub fn k_point_in(l: usize, region: &Region, b_max: usize) -> Result<MultiSeries> {
    let k = region.len();
    if k < 2 {
        return Err(invalid("k_point needs k >= 2; use one_point for k = 1"));
    }
    if b_max < 1 {
        return Err(invalid("b_max must be at least 1"));
    }
    let lo = -(b_max as i64) - 1;
    let mat = m_matrix(l, truncation_order(l, k, k * b_max))?;
    let mut terms = Vec::new();
    let mut e = vec![lo; k];
    loop {
        let c = kpoint_coefficient(&mat, region, &e)?;
        if !c.is_zero() {
            terms.push((e.clone(), c));
        }
        let mut v = 0;
        while v < k && e[v] == 1 {
            e[v] = lo;
            v += 1;
        }
        if v == k {
            break;
        }
        e[v] += 1;
    }
    Ok(MultiSeries::truncated(
        k,
        terms,
        vec![Some(lo); k],
        vec![None; k],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// Direct summation over bounded `t` tuples, no dynamic programming.
    fn naive(mat: &ResolventMatrix, region: &Region, exps: &[i64], t_max: i64) -> Poly {
        let k = exps.len();
        let l = mat.l();
        let mut acc = Poly::zero();
        let mut perm: Vec<usize> = (1..k).collect();
        loop {
            let cyc: Vec<usize> = std::iter::once(0).chain(perm.iter().copied()).collect();
            let facs: Vec<InverseDifference> = (0..k)
                .map(|p| InverseDifference::new(region, cyc[p], cyc[(p + 1) % k]).unwrap())
                .collect();
            let sign: i64 = facs.iter().map(|f| f.sign).product();
            let mut ts = vec![0i64; k];
            'outer: loop {
                let mut es = vec![0i64; k];
                for (p, &v) in cyc.iter().enumerate() {
                    let mut x = -exps[v];
                    for (q, f) in facs.iter().enumerate() {
                        x += f.exponent_of(v, ts[q]);
                    }
                    es[p] = x;
                }
                if es.iter().all(|&x| x >= 0 && (x as usize) <= mat.order()) {
                    let mut rows: Vec<Poly> = vec![Poly::one(); l];
                    let mut shift = 0;
                    for &x in &es {
                        let blk = mat.block(x as usize).unwrap();
                        rows = (0..l).map(|r| &rows[r] * &blk[(r + shift) % l]).collect();
                        shift += x as usize;
                    }
                    if shift % l == 0 {
                        for p in &rows {
                            acc -= &p.scale_i64(sign);
                        }
                    }
                }
                let mut q = 0;
                while q < k && ts[q] == t_max {
                    ts[q] = 0;
                    q += 1;
                }
                if q == k {
                    break 'outer;
                }
                ts[q] += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        if k == 2 {
            acc += &double_pole_term(l, region, exps).unwrap();
        }
        acc
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn dp_matches_naive_summation() {
        for (l, exps) in [
            (2, vec![-3, -3]),
            (3, vec![-4, -4]),
            (3, vec![-2, -3, -4]),
            (2, vec![-2, -3, -2, -3]),
            (3, vec![-3, 0]),
        ] {
            let k = exps.len();
            let mat = m_matrix(l, 20).unwrap();
            for region in [Region::standard(k), Region::reversed(k)] {
                let a = kpoint_coefficient(&mat, &region, &exps).unwrap();
                let b = naive(&mat, &region, &exps, 12);
                assert_eq!(a, b, "l={l} exps={exps:?}");
            }
        }
    }

    #[test]
    fn two_point_small() {
        // l = 3, b = (3,3): 9 M_2(3,3;n) = 9(n^4 + 3n^2)
        let mat = m_matrix(3, 20).unwrap();
        let c = kpoint_coefficient(&mat, &Region::standard(2), &[-4, -4]).unwrap();
        assert_eq!(c, Poly::from_integers([0, 0, 27, 0, 9]));
        let _ = rat(0);
    }

    #[test]
    fn poles_cancel() {
        let s = k_point(3, 2, 6).unwrap();
        for (e, _) in s.terms() {
            assert!(e.iter().all(|&x| x <= -2), "{e:?}");
        }
        assert!(!s.is_empty());
    }

    #[test]
    fn truncation_is_reported() {
        let mat = m_matrix(3, 4).unwrap();
        let err = kpoint_coefficient(&mat, &Region::standard(2), &[-7, -10]).unwrap_err();
        assert!(matches!(err, Error::BelowTruncation { .. }));
    }
}
