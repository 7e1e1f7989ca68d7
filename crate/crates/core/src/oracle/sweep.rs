//! Oracle equivalence: brute-force counts against the engine.

use super::brute::brute_count;
use super::hurwitz::check_mgk_hurwitz;
use crate::engine::{count_poly, max_genus};
use crate::error::Result;
use crate::report::Report;

/// Partitions of `d` as ascending lists.
pub fn partitions(d: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, min: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in min..=rest {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(d, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// `brute_count = count_poly` by genus for every partition `b` with
/// `l | |b| ≤ d_max`.
pub fn oracle_equivalence(l: usize, d_max: u64, cap: usize) -> Result<Report> {
    let mut rep = Report::new(format!("oracle equivalence l={l} |b|<={d_max}"));
    for d in (l as u64..=d_max).step_by(l) {
        for b in partitions(d) {
            let brute = brute_count(l, &b, cap)?;
            let engine = count_poly(l, &b)?;
            rep.check(brute == engine.by_genus, format!("b={b:?}"), || {
                format!("brute {brute:?} vs engine {:?}", engine.by_genus)
            });
        }
    }
    Ok(rep)
}

/// The Hurwitz form against the oracle for every `(l, ν)` with
/// `2 ≤ l`, `l | |ν| ≤ d_max`, at every admissible genus.
pub fn hurwitz_suite(d_max: u64) -> Result<Report> {
    let mut rep = Report::new(format!("hurwitz form |nu|<={d_max}"));
    for d in 1..=d_max {
        for l in (2..=d as usize).filter(|l| d % *l as u64 == 0) {
            for nu in partitions(d) {
                let Some(top) = max_genus(l, &nu) else {
                    continue;
                };
                for g in 0..=top {
                    rep.absorb(check_mgk_hurwitz(l, &nu, g)?);
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=12).map(|d| partitions(d).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn small_sweeps() {
        assert!(oracle_equivalence(3, 6, 12).unwrap().passed());
        assert!(hurwitz_suite(4).unwrap().passed());
    }
}
