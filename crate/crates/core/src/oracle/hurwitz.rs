//! Strictly monotone double Hurwitz numbers and the two checks built on
//! them: the Hurwitz form of `M^[l]_{g,k}` and blue/white duality.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::brute::brute_count;
use super::perm::{class_size, for_each_in_class, Permutation};
use crate::engine::count_poly;
use crate::error::{invalid, Result};
use crate::exact::{factorial, Rational};
use crate::report::Report;

const MAX_HURWITZ_DEGREE: usize = 10;

fn sorted_desc(p: &[usize]) -> Vec<usize> {
    let mut v = p.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Number of transposition sequences `τ_1 … τ_r`, `τ_j = (a_j, b_j)` with
/// `a_j < b_j` and `b_1 < … < b_r`, such that `α τ_1 ⋯ τ_r` has cycle type
/// `nu` and `⟨α, τ⟩` is transitive.
fn monotone_paths(alpha: &[u8], nu: &[usize], r: usize) -> u64 {
    let nu = sorted_desc(nu);
    let mut cur = alpha.to_vec();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(r);
    let mut count = 0;
    dfs(&mut cur, alpha, &nu, r, 0, &mut edges, &mut count);
    count
}

fn dfs(
    cur: &mut Vec<u8>,
    alpha: &[u8],
    nu: &[usize],
    r: usize,
    min_b: usize,
    edges: &mut Vec<(usize, usize)>,
    count: &mut u64,
) {
    let d = cur.len();
    let j = edges.len();
    if j == r {
        let p = Permutation::from_images(cur.clone()).expect("product of permutations");
        if p.cycle_type() == nu && connected(alpha, edges) {
            *count += 1;
        }
        return;
    }
    // b values still needed must fit below d
    for b in min_b..d {
        if d - b < r - j {
            break;
        }
        for a in 0..b {
            // right multiplication by (a b) swaps the images of a and b
            cur.swap(a, b);
            edges.push((a, b));
            dfs(cur, alpha, nu, r, b + 1, edges, count);
            edges.pop();
            cur.swap(a, b);
        }
    }
}

fn connected(alpha: &[u8], edges: &[(usize, usize)]) -> bool {
    let d = alpha.len();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = d;
    let mut join = |a: usize, b: usize, parent: &mut Vec<usize>| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    };
    for x in 0..d {
        join(x, alpha[x] as usize, &mut parent);
    }
    for &(a, b) in edges {
        join(a, b, &mut parent);
    }
    comps <= 1
}

fn validate(g: u32, mu: &[usize], nu: &[usize]) -> Result<Option<usize>> {
    let d: usize = mu.iter().sum();
    if mu.is_empty() || nu.is_empty() || mu.contains(&0) || nu.contains(&0) {
        return Err(invalid("partitions must be nonempty with positive parts"));
    }
    if nu.iter().sum::<usize>() != d {
        return Err(invalid(format!(
            "|mu| = {d} differs from |nu| = {}",
            nu.iter().sum::<usize>()
        )));
    }
    if d > MAX_HURWITZ_DEGREE {
        return Err(invalid(format!(
            "degree {d} is beyond the Hurwitz enumeration limit {MAX_HURWITZ_DEGREE}"
        )));
    }
    let r = mu.len() as i64 + nu.len() as i64 + 2 * g as i64 - 2;
    Ok((r >= 0).then_some(r as usize))
}

/// `h_g(μ, ν)` with `α` fixed to the canonical element of its class and the
/// result multiplied by the class size.
pub fn hurwitz_strict(g: u32, mu: &[usize], nu: &[usize]) -> Result<BigInt> {
    let Some(r) = validate(g, mu, nu)? else {
        return Ok(BigInt::zero());
    };
    let alpha = Permutation::canonical(mu);
    Ok(BigInt::from(monotone_paths(alpha.images(), nu, r)) * class_size(mu))
}

/// As `hurwitz_strict`, fixing the given representative instead.
pub fn hurwitz_strict_from(g: u32, alpha: &Permutation, nu: &[usize]) -> Result<BigInt> {
    let mu = alpha.cycle_type();
    let Some(r) = validate(g, &mu, nu)? else {
        return Ok(BigInt::zero());
    };
    Ok(BigInt::from(monotone_paths(alpha.images(), nu, r)) * class_size(&mu))
}

/// `h_g(μ, ν)` summed over every `α` in the class, with no symmetry used.
pub fn hurwitz_strict_exhaustive(g: u32, mu: &[usize], nu: &[usize]) -> Result<BigInt> {
    let Some(r) = validate(g, mu, nu)? else {
        return Ok(BigInt::zero());
    };
    let mut total = 0u64;
    for_each_in_class(mu, |alpha| total += monotone_paths(alpha, nu, r));
    Ok(BigInt::from(total))
}

/// `∏_i n_i(ν)! / |ν|! · h_g((l, …, l), ν)`.
pub fn mgk_from_hurwitz(l: usize, nu: &[u64], g: u32) -> Result<Rational> {
    let d = nu.iter().sum::<u64>() as usize;
    if l == 0 || !d.is_multiple_of(l) {
        return Err(invalid(format!("l = {l} does not divide |nu| = {d}")));
    }
    let nu_us: Vec<usize> = nu.iter().map(|&x| x as usize).collect();
    let h = hurwitz_strict(g, &vec![l; d / l], &nu_us)?;
    let mut mult: BTreeMap<u64, u64> = BTreeMap::new();
    for &x in nu {
        *mult.entry(x).or_default() += 1;
    }
    let num: BigInt = mult.values().map(|&m| factorial(m)).product();
    Ok(Rational::new(num * h, factorial(d as u64)))
}

/// Compares the brute-force count with the Hurwitz form at genus `g`.
pub fn check_mgk_hurwitz(l: usize, nu: &[u64], g: u32) -> Result<Report> {
    let mut rep = Report::new(format!("hurwitz l={l} nu={nu:?} g={g}"));
    let d = nu.iter().sum::<u64>() as usize;
    let brute = brute_count(l, nu, d.max(1))?;
    let lhs = brute.get(&g).cloned().unwrap_or_else(Rational::zero);
    let rhs = mgk_from_hurwitz(l, nu, g)?;
    rep.check(lhs == rhs, format!("g={g}"), || {
        format!("brute {lhs} vs hurwitz {rhs}")
    });
    Ok(rep)
}

/// `k'! M^[l]_{g,k}(b^k) = k! M^[b]_{g,k'}(l^{k'})` with `k' = bk/l`, both
/// sides from the engine, and from the oracle too when `bk ≤ oracle_cap`.
pub fn check_duality(l: usize, b: u64, k: usize, g: u32, oracle_cap: usize) -> Result<Report> {
    if l < 2 || b < 2 || k == 0 {
        return Err(invalid("duality needs l >= 2, b >= 2 and k >= 1"));
    }
    let bk = b * k as u64;
    if !bk.is_multiple_of(l as u64) {
        return Err(invalid(format!("l = {l} does not divide b·k = {bk}")));
    }
    let kd = (bk / l as u64) as usize;
    let mut rep = Report::new(format!("duality l={l} b={b} k={k} g={g}"));
    let left_b = vec![b; k];
    let right_b = vec![l as u64; kd];
    let kf = Rational::from_integer(factorial(k as u64));
    let kdf = Rational::from_integer(factorial(kd as u64));

    let lhs = kdf.clone() * count_poly(l, &left_b)?.genus(g);
    let rhs = kf.clone() * count_poly(b as usize, &right_b)?.genus(g);
    rep.check(lhs == rhs, "engine", || format!("{lhs} vs {rhs}"));

    if bk as usize <= oracle_cap {
        let zero = Rational::zero();
        let bl = brute_count(l, &left_b, oracle_cap)?;
        let br = brute_count(b as usize, &right_b, oracle_cap)?;
        let ol = kdf * bl.get(&g).unwrap_or(&zero);
        let or = kf * br.get(&g).unwrap_or(&zero);
        rep.check(ol == or, "oracle", || format!("{ol} vs {or}"));
        rep.check(ol == lhs, "oracle vs engine", || format!("{ol} vs {lhs}"));
    }
    Ok(rep)
}
