//! Algebraic-curve series and the coefficient families built on them.
//!
//! * `w(u) = 1 + u + …`, the power-series root of
//!   `w^{r+1}/(r(r+1)) - w/r + 1/(r+1) = u²/2`, and the coefficients
//!   `C_ℓ(r, j)` of `(w^{j+1} - 1)/(j+1)` (or `log w` when `j = -1`);
//! * `X(u) = 1/u + …`, the odd Laurent root of
//!   `((X+1)^{r+1} - (X-1)^{r+1}) / (2(r+1)) = u^{-r}`, and the
//!   coefficients `C̃_s(r, i, j)` of `-(X+1)^i (X-1)^j dX/du`;
//! * the series `f_{r,j}(T) = Σ (2ℓ+1)!! C_{2ℓ}(r,j) (-T)^ℓ` together with the
//!   identities relating these objects.
//!
//! `X` is handled through `P = uX`, an even power series with `P(0) = 1`.
//! Then `X ± 1 = u^{-1}(P ± u)` and `-dX/du = u^{-2}(P - uP')`, so
//! `C̃_s(r,i,j) = [u^s] (P+u)^i (P-u)^j (P - uP')`, which makes rational
//! `i`, `j` as easy as integer ones.

use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::exact::comb::{
    binomial, binomial_i64, interpolate_checked, odd_double_factorial, pochhammer_rat,
};
use crate::exact::{rat, Poly, PowerSeries, Rational};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveKind {
    /// `X(u)`, stored as `P = uX`.
    X,
    /// `w(u)`.
    W,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSeries {
    pub r: Rational,
    pub kind: CurveKind,
    series: PowerSeries,
    order: i64,
}

impl CurveSeries {
    /// Highest power of `u` that is known.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `u^exp`.
    pub fn coeff(&self, exp: i64) -> Result<Rational> {
        if exp > self.order {
            return Err(invalid(format!(
                "u^{exp} is beyond the computed order {}",
                self.order
            )));
        }
        let idx = match self.kind {
            CurveKind::X => exp + 1,
            CurveKind::W => exp,
        };
        Ok(if idx < 0 {
            Rational::zero()
        } else {
            self.series.coeff(idx as usize).clone()
        })
    }

    /// For `X`, the even series `P = uX`; for `w`, `w` itself.
    pub fn series(&self) -> &PowerSeries {
        &self.series
    }
}

fn check_r(r: &Rational) -> Result<()> {
    if r.is_zero() || *r == rat(-1) {
        return Err(invalid("r must avoid 0 and -1"));
    }
    Ok(())
}

/// `F(v) = Σ_{m≥2} C(r+1, m)/(r(r+1)) v^m` so that the defining relation of
/// `w = 1 + v` reads `F(v) = u²/2`.
fn w_relation(r: &Rational, v: &PowerSeries) -> PowerSeries {
    let len = v.len();
    let mut acc = PowerSeries::zero(len);
    let mut vm = v * v;
    for m in 2..=len as i64 {
        // C(r+1, m)/(r(r+1)) = (r-1)(r-2)…(r-m+2)/m!
        let c = binomial(&(r + rat(1)), m) / (r * (r + rat(1)));
        acc = &acc + &vm.scale(&c);
        vm = &vm * v;
    }
    acc
}

/// Solves for `w` through `u^order`.
pub fn solve_w(r: &Rational, order: usize) -> Result<CurveSeries> {
    check_r(r)?;
    if order < 1 {
        return Err(invalid("order must be at least 1"));
    }
    // v = w - 1 = u + v_2 u² + …; the coefficient of u^{k+1} in F(v) is
    // v_k plus terms in v_1..v_{k-1}.
    let len = order + 2;
    let mut v = PowerSeries::zero(len);
    v.set(1, rat(1));
    for k in 2..=order {
        let f = w_relation(r, &v);
        let next = -f.coeff(k + 1).clone();
        v.set(k, next);
    }
    let mut w = v.truncate(order + 1);
    w.set(0, rat(1));
    Ok(CurveSeries {
        r: r.clone(),
        kind: CurveKind::W,
        series: w,
        order: order as i64,
    })
}

/// Residual `w^{r+1}/(r(r+1)) - w/r + 1/(r+1) - u²/2` through `u^{order}`,
/// computed with a rational power rather than the solver's expansion.
pub fn w_residual(w: &CurveSeries) -> PowerSeries {
    let r = &w.r;
    let s = w.series();
    let pow = s.pow_rational(&(r + rat(1)));
    let mut res =
        &pow.scale(&(Rational::one() / (r * (r + rat(1))))) - &s.scale(&(Rational::one() / r));
    let c0 = res.coeff(0) + Rational::one() / (r + rat(1));
    res.set(0, c0);
    if res.len() > 2 {
        let c2 = res.coeff(2) - Rational::new(1.into(), 2.into());
        res.set(2, c2);
    }
    res
}

/// `C_0 … C_{ell_max}` for parameters `(r, j)`.
pub fn c_coeffs(r: &Rational, j: &Rational, ell_max: usize) -> Result<CoeffTable> {
    let w = solve_w(r, ell_max + 1)?;
    let ws = w.series();
    let gen = if *j == rat(-1) {
        ws.log()
    } else {
        let jp = j + rat(1);
        let mut p = ws.pow_rational(&jp);
        let c0 = p.coeff(0) - Rational::one();
        p.set(0, c0);
        p.scale(&(Rational::one() / jp))
    };
    let coeffs = (0..=ell_max).map(|l| gen.coeff(l + 1).clone()).collect();
    Ok(CoeffTable {
        family: Family::C,
        r: r.clone(),
        args: vec![j.clone()],
        coeffs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    C,
    CTilde,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub family: Family,
    pub r: Rational,
    /// `[j]` for `C`, `[i, j]` for `C̃`.
    pub args: Vec<Rational>,
    pub coeffs: Vec<Rational>,
}

impl CoeffTable {
    pub fn get(&self, idx: usize) -> &Rational {
        &self.coeffs[idx]
    }
}

fn integer_r(r: &Rational) -> Result<u32> {
    if !r.is_integer() || *r < rat(1) {
        return Err(Error::Unsupported(format!(
            "r = {r}: only integer r >= 1 is supported for X"
        )));
    }
    u32::try_from(r.numer()).map_err(|_| Error::Unsupported("r too large".into()))
}

/// Solves for `X` through `u^order` (only odd powers are nonzero).
pub fn solve_x(r: &Rational, order: usize) -> Result<CurveSeries> {
    check_r(r)?;
    let ri = integer_r(r)?;
    if order < 1 {
        return Err(invalid("order must be at least 1"));
    }
    let p = solve_p(ri, order + 2);
    Ok(CurveSeries {
        r: r.clone(),
        kind: CurveKind::X,
        series: p,
        order: order as i64,
    })
}

/// `P^r + Σ_{k odd, 3 ≤ k ≤ r+1} C(r+1,k)/(r+1) P^{r+1-k} u^{k-1} = 1`,
/// solved for the even series `P` with `len` known coefficients.
fn solve_p(r: u32, len: usize) -> PowerSeries {
    let mut p = PowerSeries::one(len);
    let lhs = |p: &PowerSeries| -> PowerSeries {
        let mut acc = p.pow_u(r);
        let mut k = 3;
        while k <= r + 1 {
            let c = binomial_i64(r as i64 + 1, k as i64) / rat(r as i64 + 1);
            let term = p.pow_u(r + 1 - k).shift_up((k - 1) as usize).scale(&c);
            acc = &acc + &term;
            k += 2;
        }
        acc
    };
    let mut t = 2;
    while t < len {
        // coefficient of u^t is r·p_t + (terms in lower coefficients)
        let resid = lhs(&p).coeff(t).clone();
        p.set(t, -resid / rat(r as i64));
        t += 2;
    }
    p
}

/// Residual `((X+1)^{r+1} - (X-1)^{r+1})/(2(r+1)) - u^{-r}`, rescaled by
/// `u^{r+1}`, computed by direct powers of `P ± u`.
pub fn x_residual(x: &CurveSeries) -> Result<PowerSeries> {
    let r = integer_r(&x.r)?;
    let p = x.series();
    let u = PowerSeries::var(p.len());
    let plus = (p + &u).pow_u(r + 1);
    let minus = (p - &u).pow_u(r + 1);
    let mut res = (&plus - &minus).scale(&(Rational::one() / rat(2 * (r as i64 + 1))));
    let c1 = res.coeff(1) - Rational::one();
    res.set(1, c1);
    Ok(res)
}

/// The `X` curve at a fixed integer `r`, with `P` computed once and reused
/// for many `C̃` evaluations.
#[derive(Clone, Debug)]
pub struct XCurve {
    r: u32,
    p: PowerSeries,
    q: PowerSeries,
}

impl XCurve {
    pub fn new(r: u32, s_max: usize) -> Result<Self> {
        if r < 1 {
            return Err(Error::Unsupported("r must be a positive integer".into()));
        }
        let len = s_max + 1;
        let p = solve_p(r, len);
        // Q = P - u P'
        let dp = p.derivative();
        let mut q = p.clone();
        for i in 1..len {
            let c = q.coeff(i) - dp.coeff(i - 1);
            q.set(i, c);
        }
        Ok(XCurve { r, p, q })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s_max(&self) -> usize {
        self.p.len() - 1
    }

    /// `C̃_0 … C̃_{s_max}` at rational `(i, j)`.
    pub fn ctilde(&self, i: &Rational, j: &Rational) -> Vec<Rational> {
        let u = PowerSeries::var(self.p.len());
        let plus = (&self.p + &u).pow_rational(i);
        let minus = (&self.p - &u).pow_rational(j);
        (&(&plus * &minus) * &self.q).coeffs().to_vec()
    }
}

/// `C̃_0 … C̃_{s_max}` for the curve with parameter `r`.
pub fn ctilde(r: &Rational, i: &Rational, j: &Rational, s_max: usize) -> Result<CoeffTable> {
    let ri = integer_r(r)?;
    let curve = XCurve::new(ri, s_max)?;
    Ok(CoeffTable {
        family: Family::CTilde,
        r: r.clone(),
        args: vec![i.clone(), j.clone()],
        coeffs: curve.ctilde(i, j),
    })
}

/// `C̃_s(r, n + i_shift, -n + j_shift)` as a polynomial in `n`, by
/// interpolation on `s + 2` integer nodes (the last one redundant).
pub fn ctilde_as_poly_in_n(r: u32, i_shift: i64, j_shift: i64, s: usize) -> Result<Poly> {
    let curve = XCurve::new(r, s)?;
    ctilde_poly_on(&curve, i_shift, j_shift, s)
}

pub(crate) fn ctilde_poly_on(curve: &XCurve, i_shift: i64, j_shift: i64, s: usize) -> Result<Poly> {
    interpolate_checked(s, |n| {
        let c = curve.ctilde(&rat(n + i_shift), &rat(-n + j_shift));
        Ok(c[s].clone())
    })
}

/// Coefficients of `f_{r,j}(T)` through `T^{t_max}`.
pub fn f_series(r: &Rational, j: &Rational, t_max: usize) -> Result<Vec<Rational>> {
    let c = c_coeffs(r, j, 2 * t_max)?;
    Ok((0..=t_max)
        .map(|l| {
            let sign = if l % 2 == 0 { rat(1) } else { rat(-1) };
            Rational::from_integer(odd_double_factorial(l as u64)) * c.get(2 * l) * sign
        })
        .collect())
}

/// Checks both shift identities of `f_{r,j}` given the four series
/// `f_{r,j}`, `f_{r,j+1}`, `f_{r,j+r}`, `f_{r,j-1}` through `T^{t_max}`.
pub fn check_f_identities(
    r: &Rational,
    j: &Rational,
    f_j: &[Rational],
    f_j1: &[Rational],
    f_jr: &[Rational],
    f_jm1: &[Rational],
    t_max: usize,
) -> Report {
    let mut rep = Report::new(format!("f-identities r={r} j={j}"));
    let at = |s: &[Rational], i: isize| -> Rational {
        if i < 0 {
            Rational::zero()
        } else {
            s[i as usize].clone()
        }
    };
    let shift = (r - rat(1)) / rat(2) - j;
    for ell in 0..t_max {
        let l = ell as isize;
        // (1 + ((r-1)/2 - j) T + (r+1) T² ∂_T) f_{r,j}
        let rhs1 = at(f_j, l)
            + &shift * at(f_j, l - 1)
            + (r + rat(1)) * rat(l as i64 - 1) * at(f_j, l - 1);
        rep.check(rhs1 == f_j1[ell], format!("T^{ell} (first)"), || {
            format!("f_(j+1) = {}, operator gives {}", f_j1[ell], rhs1)
        });
        // f_{r,j} - r j T f_{r,j-1}
        let rhs2 = at(f_j, l) - r * j * at(f_jm1, l - 1);
        rep.check(rhs2 == f_jr[ell], format!("T^{ell} (second)"), || {
            format!("f_(j+r) = {}, right side {}", f_jr[ell], rhs2)
        });
    }
    rep
}

pub fn verify_f_identities(r: &Rational, j: &Rational, t_max: usize) -> Result<Report> {
    if t_max < 1 {
        return Err(invalid("t_max must be at least 1"));
    }
    let f_j = f_series(r, j, t_max)?;
    let f_j1 = f_series(r, &(j + rat(1)), t_max)?;
    let f_jr = f_series(r, &(j + r), t_max)?;
    let f_jm1 = f_series(r, &(j - rat(1)), t_max)?;
    Ok(check_f_identities(r, j, &f_j, &f_j1, &f_jr, &f_jm1, t_max))
}

/// `f_{r,i}(T) f_{r,j}(-T) = Σ_s (1 + (s-i-j-1)/r)_s C̃_s(r,i,j) (rT/2)^s`
/// through `T^{s_max}`.
pub fn verify_fftmt(r: &Rational, i: &Rational, j: &Rational, s_max: usize) -> Result<Report> {
    let f_i = f_series(r, i, s_max)?;
    let f_j = f_series(r, j, s_max)?;
    let ct = ctilde(r, i, j, s_max)?;
    let mut rep = Report::new(format!("f(T)f(-T) r={r} i={i} j={j}"));
    for s in 0..=s_max {
        let mut lhs = Rational::zero();
        for a in 0..=s {
            let sign = if (s - a) % 2 == 0 { rat(1) } else { rat(-1) };
            lhs += &f_i[a] * &f_j[s - a] * sign;
        }
        let base = rat(1) + (rat(s as i64) - i - j - rat(1)) / r;
        let half_r = r / rat(2);
        let mut pow = Rational::one();
        for _ in 0..s {
            pow *= &half_r;
        }
        let rhs = pochhammer_rat(&base, s as u64) * ct.get(s) * pow;
        rep.check(lhs == rhs, format!("T^{s}"), || {
            format!("left {lhs}, right {rhs}")
        });
    }
    Ok(rep)
}

/// Shift identities
/// `C̃_s(r,i+1,j) - C̃_s(r,i,j+1) = 2 C̃_{s-1}(r,i,j)` and
/// `C̃_s(r,i+r+1,j) - C̃_s(r,i,j+r+1) = 2(r+1) C̃_{s-1}(r,i,j)` for `1 ≤ s ≤ s_max`.
pub fn verify_ctilde_shifts(curve: &XCurve, i: i64, j: i64) -> Report {
    let r = curve.r() as i64;
    let c = |a: i64, b: i64| curve.ctilde(&rat(a), &rat(b));
    let base = c(i, j);
    let a1 = c(i + 1, j);
    let b1 = c(i, j + 1);
    let a2 = c(i + r + 1, j);
    let b2 = c(i, j + r + 1);
    let mut rep = Report::new(format!("ctilde shifts r={r} i={i} j={j}"));
    for s in 1..base.len() {
        let lhs1 = &a1[s] - &b1[s];
        let rhs1 = &base[s - 1] * rat(2);
        rep.check(lhs1 == rhs1, format!("s={s} unit shift"), || {
            format!("{lhs1} vs {rhs1}")
        });
        let lhs2 = &a2[s] - &b2[s];
        let rhs2 = &base[s - 1] * rat(2 * (r + 1));
        rep.check(lhs2 == rhs2, format!("s={s} (r+1) shift"), || {
            format!("{lhs2} vs {rhs2}")
        });
    }
    rep
}

/// Right side of the closed evaluation
/// `C̃_s(l-1, y, -y+s-(l-1)m-1) = (2^s/l^m) Σ_t (-1)^{m-t} C(m,t) C(y+lt, s+m)`.
pub fn tcfin_rhs(l: i64, y: &Rational, s: i64, m: i64) -> Rational {
    let mut acc = Rational::zero();
    for t in 0..=m {
        let sign = if (m - t) % 2 == 0 { rat(1) } else { rat(-1) };
        acc += sign * binomial_i64(m, t) * binomial(&(y + rat(l * t)), s + m);
    }
    let mut scale = Rational::one();
    for _ in 0..s {
        scale *= rat(2);
    }
    for _ in 0..m {
        scale /= rat(l);
    }
    acc * scale
}

/// Grid check of the closed evaluation above for `s, m ≤ s_max` and the
/// given `y` values.
pub fn verify_tcfin(l: i64, s_max: usize, m_max: i64, ys: &[i64]) -> Result<Report> {
    if l < 2 {
        return Err(invalid("l must be at least 2"));
    }
    let curve = XCurve::new((l - 1) as u32, s_max)?;
    let mut rep = Report::new(format!("ctilde closed form l={l}"));
    for &y in ys {
        for m in 0..=m_max {
            for s in 0..=s_max as i64 {
                let j = -y + s - (l - 1) * m - 1;
                let lhs = curve.ctilde(&rat(y), &rat(j))[s as usize].clone();
                let rhs = tcfin_rhs(l, &rat(y), s, m);
                rep.check(lhs == rhs, format!("y={y} s={s} m={m}"), || {
                    format!("{lhs} vs {rhs}")
                });
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn w_head_matches_printed_terms() {
        for r in [ratio(1, 2), rat(2), rat(3), ratio(-7, 3)] {
            let w = solve_w(&r, 4).unwrap();
            assert_eq!(w.coeff(0).unwrap(), rat(1));
            assert_eq!(w.coeff(1).unwrap(), rat(1));
            assert_eq!(w.coeff(2).unwrap(), -(&r - rat(1)) / rat(6));
            assert_eq!(
                w.coeff(3).unwrap(),
                (&r - rat(1)) * (rat(2) * &r + rat(1)) / rat(72)
            );
        }
        assert_eq!(solve_w(&rat(1), 3).unwrap().coeff(3).unwrap(), rat(0));
    }

    #[test]
    fn w_rejects_degenerate_r() {
        assert!(solve_w(&rat(0), 3).is_err());
        assert!(solve_w(&rat(-1), 3).is_err());
    }

    #[test]
    fn w_satisfies_relation() {
        for r in [rat(1), rat(2), rat(5), ratio(3, 2)] {
            let w = solve_w(&r, 10).unwrap();
            let res = w_residual(&w);
            assert!(
                res.coeffs().iter().take(11).all(Zero::is_zero),
                "r={r}: {res:?}"
            );
        }
    }

    #[test]
    fn c_coefficients_match_printed_values() {
        for (r, j) in [
            (rat(2), rat(1)),
            (rat(3), ratio(1, 2)),
            (ratio(5, 2), rat(-1)),
            (rat(4), rat(-3)),
        ] {
            let c = c_coeffs(&r, &j, 3).unwrap();
            assert_eq!(c.get(0), &rat(1));
            assert_eq!(c.get(1), &(&j / rat(2) - (&r - rat(1)) / rat(6)));
            let c2 = &j * (&j - &r) / rat(6) + (&r - rat(1)) * (rat(2) * &r + rat(1)) / rat(72);
            assert_eq!(c.get(2), &c2);
            let c3 = &j * (&j - &r) * (&j - &r - rat(1)) / rat(24)
                - (&r - rat(1)) * (&r + rat(2)) * (rat(2) * &r + rat(1)) / rat(540);
            assert_eq!(c.get(3), &c3);
        }
        assert_eq!(
            c_coeffs(&rat(2), &rat(1), 2).unwrap().get(2),
            &ratio(-7, 72)
        );
    }

    #[test]
    fn x_head_and_oddness() {
        for r in 1..=6i64 {
            let x = solve_x(&rat(r), 11).unwrap();
            assert_eq!(x.coeff(-1).unwrap(), rat(1));
            assert_eq!(x.coeff(1).unwrap(), -rat(r - 1) / rat(6));
            assert_eq!(
                x.coeff(3).unwrap(),
                rat((r - 1) * (2 * r + 1) * (r - 3)) / rat(360)
            );
            for e in (0..=10).step_by(2) {
                assert!(x.coeff(e).unwrap().is_zero());
            }
            let res = x_residual(&x).unwrap();
            assert!(res.coeffs().iter().all(Zero::is_zero), "r={r}");
        }
    }

    #[test]
    fn x_is_exactly_one_over_u_at_r_one() {
        let x = solve_x(&rat(1), 9).unwrap();
        for e in 0..=9 {
            assert!(x.coeff(e).unwrap().is_zero());
        }
    }

    #[test]
    fn x_rejects_fractional_r() {
        assert!(matches!(
            solve_x(&ratio(1, 2), 3),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn ctilde_initial_values() {
        for r in 1..=4 {
            for (i, j) in [(0, 0), (3, -2), (-1, 5), (2, 2)] {
                let t = ctilde(&rat(r), &rat(i), &rat(j), 3).unwrap();
                assert_eq!(t.get(0), &rat(1));
                assert_eq!(t.get(1), &rat(i - j));
            }
        }
        let t = ctilde(&rat(2), &rat(2), &rat(-3), 2).unwrap();
        assert_eq!(t.get(2), &ratio(40, 3));
        assert_eq!(tcfin_rhs(3, &rat(2), 2, 1), ratio(40, 3));
    }

    #[test]
    fn ctilde_polynomial_in_n() {
        assert_eq!(ctilde_as_poly_in_n(2, 0, 0, 0).unwrap(), Poly::one());
        // C̃_1 = (n+a) - (-n+b)
        assert_eq!(
            ctilde_as_poly_in_n(3, 4, -1, 1).unwrap(),
            Poly::from_integers([5, 2])
        );
        let p = ctilde_as_poly_in_n(2, 0, -1, 2).unwrap();
        let direct = ctilde(&rat(2), &rat(2), &rat(-3), 2).unwrap();
        assert_eq!(p.eval_i64(2), direct.get(2).clone());
    }

    #[test]
    fn f_series_examples() {
        let f = f_series(&rat(2), &rat(1), 2).unwrap();
        assert_eq!(f[0], rat(1));
        assert_eq!(f[1], ratio(7, 24));
        let c = c_coeffs(&rat(3), &rat(4), 2).unwrap();
        assert_eq!(
            f_series(&rat(3), &rat(4), 1).unwrap()[1],
            c.get(2) * rat(-3)
        );
    }

    #[test]
    fn f_identities_hold_and_detect_corruption() {
        assert!(verify_f_identities(&rat(1), &rat(0), 6).unwrap().passed());
        assert!(verify_f_identities(&rat(2), &rat(3), 6).unwrap().passed());
        let (r, j) = (rat(2), rat(3));
        let f_j = f_series(&r, &j, 6).unwrap();
        let mut f_j1 = f_series(&r, &rat(4), 6).unwrap();
        let f_jr = f_series(&r, &rat(5), 6).unwrap();
        let f_jm1 = f_series(&r, &rat(2), 6).unwrap();
        f_j1[3] += rat(1);
        let rep = check_f_identities(&r, &j, &f_j, &f_j1, &f_jr, &f_jm1, 6);
        assert!(!rep.passed());
        assert_eq!(rep.failures.len(), 1);
        assert_eq!(rep.first_failure().unwrap().at, "T^3 (first)");
    }

    #[test]
    fn fftmt_examples() {
        assert!(verify_fftmt(&rat(2), &rat(1), &rat(0), 5).unwrap().passed());
        assert!(verify_fftmt(&rat(3), &rat(2), &rat(2), 5).unwrap().passed());
    }

    #[test]
    fn ctilde_shift_identities_small() {
        let curve = XCurve::new(2, 6).unwrap();
        assert!(verify_ctilde_shifts(&curve, 1, -2).passed());
    }
}
