//! Verification suites that compare independent paths to the same numbers,
//! and the structural properties every count must satisfy.

use num_traits::{Signed, Zero};

use super::closed::{
    genus_closed, one_point_explicit, top_genus, two_point_explicit, zagier_t_formula,
    zagier_y_coefficients,
};
use super::count::{count_poly, count_poly_with, max_genus, n_exponent};
use super::kpoint::{k_point_in, truncation_order};
use super::onepoint::{one_point, one_point_block, one_point_curve};
use super::resolvent::{m_matrix, y_entry, y_entry_curve};
use crate::error::{invalid, Result};
use crate::exact::comb::pochhammer;
use crate::exact::{rat, LaurentSeries, Poly, Rational, Region};
use crate::report::Report;

/// `one_point ≡ one_point_curve` (apart from the curve's `n/λ`) and
/// `≡ one_point_explicit`, for `2 ≤ l ≤ l_max`, `m ≤ m_max`.
pub fn dual_one_point(l_max: usize, m_max: usize) -> Result<Report> {
    let mut rep = Report::new(format!("one-point dual paths l<={l_max} m<={m_max}"));
    for l in 2..=l_max {
        let order = l * m_max + 1;
        let a = one_point(l, order)?;
        let b = one_point_curve(l, order)?;
        rep.check(a == b.without(-1), format!("l={l}"), || {
            format!(
                "series differ at λ^{:?}",
                a.first_difference(&b.without(-1))
            )
        });
        for m in 1..=m_max {
            let e = (l * m) as u64 - 1;
            let c = a.coeff(-(e as i64) - 2)?;
            let x = one_point_explicit(l, e)?;
            rep.check(c == x, format!("l={l} m={m} explicit"), || {
                format!("{c} vs {x}")
            });
        }
    }
    Ok(rep)
}

/// `n·y ≡ n·y_curve` for every entry of the `l × l` matrix.
pub fn dual_y_entries(l: usize, blocks: usize) -> Result<Report> {
    let mut rep = Report::new(format!("y entries dual paths l={l} blocks={blocks}"));
    for i in 1..=l {
        for j in 0..l {
            let a = y_entry(l, i, j, blocks)?.times_n();
            let b = y_entry_curve(l, i, j, blocks)?.times_n();
            rep.check(a == b, format!("(i,j)=({i},{j})"), || {
                format!("first difference at λ^{:?}", a.first_difference(&b))
            });
        }
    }
    Ok(rep)
}

/// `two_point_explicit(l,a,b) ≡ (a+1)(b+1) M_2(a+1,b+1;n)` for `a+b ≤ ab_max`.
pub fn dual_two_point(l: usize, ab_max: u64) -> Result<Report> {
    let mut rep = Report::new(format!("two-point dual paths l={l} a+b<={ab_max}"));
    let mat = m_matrix(l, truncation_order(l, 2, ab_max as usize + 2))?;
    let region = Region::standard(2);
    for a in 0..=ab_max {
        for b in 0..=ab_max - a {
            let x = two_point_explicit(l, a, b)?;
            let c = count_poly_with(&mat, &region, &[a + 1, b + 1])?;
            let y = c.poly_n.scale(&rat(((a + 1) * (b + 1)) as i64));
            rep.check(x == y, format!("(a,b)=({a},{b})"), || format!("{x} vs {y}"));
        }
    }
    Ok(rep)
}

/// For `g ≤ 3` and `lm ≤ lm_max`: closed form, the exponential generating
/// form and the `n`-coefficient of the 1-point block agree. The generating
/// form is also compared at every genus up to the top one, and the top
/// genus formula wherever `(l-1)m` is even.
pub fn dual_genus(l: usize, lm_max: usize) -> Result<Report> {
    let mut rep = Report::new(format!("1-point genus forms l={l} lm<={lm_max}"));
    for m in 1..=(lm_max / l) as u64 {
        let block = one_point_block(l, m as usize);
        let top = (l as u64 - 1) * m / 2;
        for g in 0..=top.max(3) as u32 {
            let v = n_exponent(l, &[l as u64 * m], g);
            let ext = if v >= 0 {
                block.coeff(v as usize)
            } else {
                Rational::zero()
            };
            let z = zagier_t_formula(l, m, g)?;
            rep.check(z == ext, format!("m={m} g={g} exponential form"), || {
                format!("{z} vs {ext}")
            });
            if g <= 3 {
                let c = genus_closed(l, g, m)?;
                rep.check(c == ext, format!("m={m} g={g} closed form"), || {
                    format!("{c} vs {ext}")
                });
            }
        }
        if ((l as u64 - 1) * m).is_multiple_of(2) {
            let t = top_genus(l, m)?;
            let ext = block.coeff(1);
            rep.check(t == ext, format!("m={m} top genus"), || {
                format!("{t} vs {ext}")
            });
        }
    }
    Ok(rep)
}

/// `[Y^{n-1}]` of the rational generating function against the 1-point
/// block evaluated at `n = 1..=n_max`.
pub fn zagier_y_check(l: usize, m: u64, n_max: usize) -> Result<Report> {
    if n_max < 1 {
        return Err(invalid("n_max must be at least 1"));
    }
    let mut rep = Report::new(format!("Y generating function l={l} m={m}"));
    let block = one_point_block(l, m as usize);
    for (idx, y) in zagier_y_coefficients(l, m, n_max).into_iter().enumerate() {
        let n = idx as i64 + 1;
        let v = block.eval_i64(n);
        rep.check(v == y, format!("n={n}"), || format!("{v} vs {y}"));
    }
    Ok(rep)
}

/// The `λ_1^{-3}` slice of the 2-point function,
/// `Σ_b 2b M_2(2,b;n) λ^{-(b+1)} = 2nλ y(l,0) - n y(l,l-1) - n y(1,0) - 2λ`,
/// compared for `b ≤ order - 3`, together with the vanishing of the right
/// side at `λ^1, λ^0, λ^{-1}`.
pub fn special_two_point_series(l: usize, order: usize) -> Result<Report> {
    if order < l + 3 {
        return Err(invalid(format!("order must be at least l + 3 = {}", l + 3)));
    }
    let mut rep = Report::new(format!("M_2(2,b) series l={l} order={order}"));
    let blocks = (order + 1).div_ceil(l) + 1;
    let a = y_entry(l, l, 0, blocks)?
        .times_n()
        .shift(1)
        .mul_poly(&Poly::from_i64(2));
    let b = y_entry(l, l, l - 1, blocks)?.times_n();
    let c = y_entry(l, 1, 0, blocks)?.times_n();
    let rhs = &(&(&a - &b) - &c) - &LaurentSeries::monomial(1, Poly::from_i64(2));
    for e in [1, 0, -1] {
        let v = rhs.coeff(e)?;
        rep.check(v.is_zero(), format!("λ^{e}"), || {
            format!("{v} should vanish")
        });
    }
    let b_max = order as u64 - 3;
    let mat = m_matrix(l, truncation_order(l, 2, b_max as usize + 2))?;
    let region = Region::standard(2);
    for bb in 1..=b_max {
        let lhs = count_poly_with(&mat, &region, &[2, bb])?
            .poly_n
            .scale(&rat(2 * bb as i64));
        let r = rhs.coeff(-(bb as i64) - 1)?;
        rep.check(lhs == r, format!("b={bb}"), || format!("{lhs} vs {r}"));
    }
    Ok(rep)
}

/// Checks `(𝒯^{l-1} + x 𝒯^{-1}) ψ = λ ψ` for
/// `ψ = Γ(ν+1) λ^{-ν} Σ_m (ν+1)_{lm} / (l^m m!) λ^{-lm}` with `ε = 1`.
/// After removing the common `Γ(ν+1) λ^{-ν}`, `𝒯` acts on the sum `S` as
/// `S(ν) ↦ (ν+1) λ^{-1} S(ν+1)` and `x𝒯^{-1}` as `S(ν) ↦ λ S(ν-1)`.
/// Coefficients are compared down to `λ^{1-l·blocks}`.
pub fn verify_psib_wave(l: usize, blocks: usize) -> Result<Report> {
    if l < 2 || blocks < 1 {
        return Err(invalid("verify_psib_wave needs l >= 2 and blocks >= 1"));
    }
    let mut rep = Report::new(format!("wave equation l={l} blocks={blocks}"));
    let s_terms: Vec<(i64, Poly)> = (0..=blocks)
        .map(|m| {
            let c = pochhammer(&Poly::n_plus(1), (l * m) as u64).scale(&Rational::new(
                1.into(),
                num_bigint::BigInt::from(l).pow(m as u32) * crate::exact::factorial(m as u64),
            ));
            (-((l * m) as i64), c)
        })
        .collect();
    let s = LaurentSeries::truncated(s_terms, -((l * blocks) as i64));
    let shifted = |k: i64| s.map_coeffs(|p| p.translate(&rat(k)));
    let t_pow = shifted(l as i64 - 1)
        .mul_poly(&pochhammer(&Poly::n_plus(1), l as u64 - 1))
        .shift(1 - l as i64);
    let lower = shifted(-1).shift(1);
    let lhs = &t_pow + &lower;
    let rhs = s.shift(1);
    for e in (1 - (l * blocks) as i64..=1).rev() {
        let a = lhs.coeff(e)?;
        let b = rhs.coeff(e)?;
        rep.check(a == b, format!("λ^{e}"), || format!("{a} vs {b}"));
    }
    Ok(rep)
}

fn permutations(b: &[u64]) -> Vec<Vec<u64>> {
    let mut v = b.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        let n = v.len();
        let Some(i) = (1..n).rev().find(|&i| v[i - 1] < v[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| v[j] > v[i - 1]).expect("pivot");
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
    out
}

/// Structural properties of `M^[l]_k(b; n)` for one `b`: symmetry under
/// every rearrangement of `b` (`k ≤ 4`), vanishing unless `l | |b|`, genus
/// support, parity of the `n`-exponents, nonnegativity, and agreement of
/// the standard and reversed expansion regions (`k ≤ 3`).
pub fn check_structure(l: usize, b: &[u64]) -> Result<Report> {
    let mut rep = Report::new(format!("structure l={l} b={b:?}"));
    let base = count_poly(l, b)?;
    let d: u64 = b.iter().sum();
    let k = b.len();

    if !d.is_multiple_of(l as u64) {
        rep.check(base.is_zero(), "divisibility", || {
            format!("{} should vanish", base.poly_n)
        });
        return Ok(rep);
    }
    let mat = m_matrix(l, truncation_order(l, k, d as usize))?;
    if k <= 4 {
        for p in permutations(b) {
            let r = count_poly_with(&mat, &Region::standard(k), &p)?;
            rep.check(r.poly_n == base.poly_n, format!("order {p:?}"), || {
                format!("{} vs {}", r.poly_n, base.poly_n)
            });
        }
    }
    let bound = max_genus(l, b);
    for (&g, v) in &base.by_genus {
        rep.check(
            bound.is_some_and(|m| g <= m),
            format!("g={g} support"),
            || format!("genus {g} beyond bound {bound:?}"),
        );
        rep.check(!v.is_negative(), format!("g={g} sign"), || {
            format!("{v} is negative")
        });
    }
    let parity = n_exponent(l, b, 0).rem_euclid(2) as usize;
    for (e, _) in base.poly_n.terms() {
        rep.check(e % 2 == parity, format!("n^{e} parity"), || {
            format!("exponent {e} has the wrong parity")
        });
    }
    if (2..=3).contains(&k) {
        let r = count_poly_with(&mat, &Region::reversed(k), b)?;
        rep.check(r.poly_n == base.poly_n, "reversed region", || {
            format!("{} vs {}", r.poly_n, base.poly_n)
        });
    }
    Ok(rep)
}

/// Every coefficient of `C_k` on the box `-(b_max+1)..=1` has all exponents
/// at most `-2`, in both the standard and the reversed region.
pub fn check_pole_cancellation(l: usize, k: usize, b_max: usize) -> Result<Report> {
    let mut rep = Report::new(format!("pole cancellation l={l} k={k} b_max={b_max}"));
    for region in [Region::standard(k), Region::reversed(k)] {
        let s = k_point_in(l, &region, b_max)?;
        for (e, c) in s.terms() {
            rep.check(e.iter().all(|&x| x <= -2), format!("{e:?}"), || {
                format!("pole term {c}")
            });
        }
        rep.check(!s.is_empty(), "nonempty", || "no terms at all".into());
    }
    Ok(rep)
}
