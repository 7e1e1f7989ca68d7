//! Closed formulas for 1- and 2-point counts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{invalid, Error, Result};
use crate::exact::comb::{binomial, binomial_i64, factorial, pochhammer};
use crate::exact::{rat, Poly, PowerSeries, Rational};

/// `f(i, j, p; l) = 1/(l^p p!) Σ_{s=0}^{p} (-1)^s C(p,s) (i+1-ls)_{j-1}`.
/// Zero for `p < 0` (empty sum). Requires `j ≥ 1`.
pub fn f_func(i: &Poly, j: i64, p: i64, l: usize) -> Result<Poly> {
    if j <= 0 {
        return Err(invalid(format!("f needs j >= 1, got j = {j}")));
    }
    if p < 0 {
        return Ok(Poly::zero());
    }
    let li = l as i64;
    let mut acc = Poly::zero();
    for s in 0..=p {
        let c = binomial_i64(p, s) * if s % 2 == 0 { rat(1) } else { rat(-1) };
        let base = i + &Poly::from_i64(1 - li * s);
        acc += &pochhammer(&base, (j - 1) as u64).scale(&c);
    }
    let den = BigInt::from(l).pow(p as u32) * factorial(p as u64);
    Ok(acc.scale(&Rational::new(BigInt::one(), den)))
}

/// The `l = 2` rewriting,
/// `((j-1)!/(2^p p!)) Σ_s 2^s C(p,s) C(i+j-2p-1, s+j-2p-1)`, at a rational `i`.
pub fn f_func_ribbon(i: &Rational, j: i64, p: i64) -> Result<Rational> {
    if j <= 0 {
        return Err(invalid(format!("f needs j >= 1, got j = {j}")));
    }
    if p < 0 {
        return Ok(Rational::zero());
    }
    let mut acc = Rational::zero();
    for s in 0..=p {
        let top = i + rat(j - 2 * p - 1);
        acc += Rational::from_integer(BigInt::from(2).pow(s as u32))
            * binomial_i64(p, s)
            * binomial(&top, s + j - 2 * p - 1);
    }
    let den = BigInt::from(2).pow(p as u32) * factorial(p as u64);
    Ok(acc * Rational::new(factorial((j - 1) as u64), den))
}

/// `(a+1) M_1(a+1; n) = f(n-1, a+3, (a+1)/l; l) / (a+2)`, zero when `l ∤ a+1`.
pub fn one_point_explicit(l: usize, a: u64) -> Result<Poly> {
    if l < 2 {
        return Err(invalid("l must be at least 2"));
    }
    if !(a + 1).is_multiple_of(l as u64) {
        return Ok(Poly::zero());
    }
    let f = f_func(
        &Poly::n_plus(-1),
        a as i64 + 3,
        ((a + 1) / l as u64) as i64,
        l,
    )?;
    Ok(f.scale(&Rational::new(BigInt::one(), BigInt::from(a + 2))))
}

/// `f(n + shift, j, p; l)`.
fn fs(shift: i64, j: i64, p: i64, l: usize) -> Result<Poly> {
    f_func(&Poly::n_plus(shift), j, p, l)
}

/// `(a+1)(b+1) M_2(a+1, b+1; n)` by the four-fold sum of `f`-products.
///
/// In the first sum the `j = a` term carries `f(n, 0, 0; l) = (n+1)_{-1} = 1/n`,
/// which the `n^2` prefactor turns into `n`. Nowhere else does a zero second
/// argument meet a nonnegative `p`.
pub fn two_point_explicit(l: usize, a: u64, b: u64) -> Result<Poly> {
    if l < 2 {
        return Err(invalid("l must be at least 2"));
    }
    let li = l as i64;
    let (a, b) = (a as i64, b as i64);
    if (a + b + 2) % li != 0 {
        return Ok(Poly::zero());
    }
    let n = Poly::n();
    let n2 = &n * &n;
    let mut acc = Poly::zero();

    for j in 0..=a {
        if (a - j) % li != 0 {
            continue;
        }
        let right = fs(0, j + b + 2, (j + b + 2) / li, l)?;
        let w = rat(j + 1);
        if j == a {
            acc += &(&n * &right).scale(&w);
        } else {
            let left = fs(0, a - j, (a - j) / li, l)?;
            acc += &(&n2 * &(&left * &right)).scale(&w);
        }
    }
    for i1 in 1..li {
        for j in 0..a {
            if (a - j + i1) % li != 0 {
                continue;
            }
            let left = fs(0, a - j, (a - j + i1) / li - 1, l)?;
            let right = fs(-i1, j + b + 2, (j + b + 2 - i1).div_euclid(li), l)?;
            acc -= &(&n * &(&left * &right)).scale(&rat(j + 1));
        }
    }
    for i2 in 1..li {
        for j in 0..a {
            if (a - j - i2).rem_euclid(li) != 0 {
                continue;
            }
            let left = fs(-i2, a - j, (a - j - i2).div_euclid(li), l)?;
            let right = fs(0, j + b + 2, (j + b + 2 + i2) / li - 1, l)?;
            acc -= &(&n * &(&left * &right)).scale(&rat(j + 1));
        }
    }
    for i1 in 1..li {
        for i2 in 1..li {
            for j in 0..a {
                if (i1 - i2 + a - j).rem_euclid(li) != 0 {
                    continue;
                }
                let left = fs(-i2, a - j, (a - j + i1 - i2).div_euclid(li) - 1, l)?;
                let right = fs(-i1, j + b + 2, (j + b + 2 - i1 + i2).div_euclid(li) - 1, l)?;
                acc += &(&left * &right).scale(&rat(j + 1));
            }
        }
    }
    Ok(acc)
}

/// `lm · M_{g,1}(lm)` from the printed closed forms, `g ≤ 3`.
pub fn genus_closed(l: usize, g: u32, m: u64) -> Result<Rational> {
    if l < 2 || m < 1 {
        return Err(invalid("genus_closed needs l >= 2 and m >= 1"));
    }
    let (l, m) = (l as i64, m as i64);
    let lm = l * m;
    let poch = |x: i64, k: i64| (0..k).fold(rat(1), |acc, t| acc * rat(x + t));
    let v = match g {
        0 => binomial_i64(lm + 1, m) / rat(lm + 1),
        1 => rat(lm) * binomial_i64(lm - 1, m) * rat((l - 1) * lm - 2) / rat(24),
        2 => {
            let q = 5 * (l - 1).pow(2) * l.pow(2) * m.pow(2)
                - (2 * l.pow(4) + 20 * l.pow(2) - 22 * l) * m
                + 24;
            poch(lm - 2, 3) * binomial_i64(lm - 3, m) * rat(q) / rat(5760)
        }
        3 => {
            let q = 35 * (l - 1).pow(3) * l.pow(3) * m.pow(3)
                - 42 * (l - 1).pow(2) * l.pow(2) * (l * l + l + 6) * m.pow(2)
                + (16 * l.pow(6) + 84 * l.pow(4) + 504 * l.pow(2) - 604 * l) * m
                - 480;
            poch(lm - 4, 5) * binomial_i64(lm - 5, m) * rat(q) / rat(2903040)
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no closed form stored for genus {g}"
            )))
        }
    };
    Ok(v)
}

/// `lm · M_{(l-1)m/2, 1}(lm)`, the top genus of the 1-point count.
pub fn top_genus(l: usize, m: u64) -> Result<Rational> {
    if l < 2 {
        return Err(invalid("l must be at least 2"));
    }
    if !((l as u64 - 1) * m).is_multiple_of(2) {
        return Err(invalid(format!("(l-1)m = {} is odd", (l as u64 - 1) * m)));
    }
    let (li, mi) = (l as i64, m as i64);
    let mut sum = Rational::zero();
    for s in 0..=mi {
        let term = binomial_i64(mi, s) / binomial_i64(li * mi, li * s);
        if l.is_multiple_of(2) && s % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    let pre = Rational::new(
        factorial(l as u64 * m),
        BigInt::from(l).pow(m as u32) * factorial(m) * BigInt::from(li * mi + 1),
    );
    Ok(pre * sum)
}

/// `(1 - e^{-ct}) / (ct)` truncated to `len` terms.
fn one_minus_exp_over(c: i64, len: usize) -> PowerSeries {
    let mut v = Vec::with_capacity(len);
    let mut p = rat(1);
    for k in 0..len {
        let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
        v.push(sign * &p / Rational::from_integer(factorial(k as u64 + 1)));
        p *= rat(c);
    }
    PowerSeries::new(v)
}

/// `lm · M_{g,1}(lm)` from the exponential generating form
/// `(lm)!/(l^m m! (1-2g+(l-1)m)!) [t^{2g}] t^{(l-1)m+2} (1-e^{-lt})^m
/// (1-e^{-t})^{-lm-2} e^{-t}`. Zero outside the genus range.
pub fn zagier_t_formula(l: usize, m: u64, g: u32) -> Result<Rational> {
    if l < 2 || m < 1 {
        return Err(invalid("zagier_t_formula needs l >= 2 and m >= 1"));
    }
    let (li, mi) = (l as i64, m as i64);
    let v = 1 - 2 * g as i64 + (li - 1) * mi;
    if v < 0 {
        return Ok(Rational::zero());
    }
    let len = 2 * g as usize + 1;
    // t^{(l-1)m+2} (1-e^{-lt})^m / (1-e^{-t})^{lm+2} = l^m A^m B^{-(lm+2)}
    let a = one_minus_exp_over(li, len).pow_u(m as u32);
    let b = one_minus_exp_over(1, len).pow_rational(&rat(-(li * mi) - 2));
    let e = PowerSeries::new(
        (0..len)
            .map(|k| {
                let s = if k % 2 == 0 { rat(1) } else { rat(-1) };
                s / Rational::from_integer(factorial(k as u64))
            })
            .collect(),
    );
    let series = &(&a * &b) * &e;
    let coeff =
        series.coeff(2 * g as usize) * Rational::from_integer(BigInt::from(l).pow(m as u32));
    let pre = Rational::new(
        factorial(l as u64 * m),
        BigInt::from(l).pow(m as u32) * factorial(m) * factorial(v as u64),
    );
    Ok(pre * coeff)
}

/// `[Y^{n-1}] (lm)!/(m! l^m) (1-Y^l)^m / (1-Y)^{lm+2}` for `n = 1..=n_max`.
pub fn zagier_y_coefficients(l: usize, m: u64, n_max: usize) -> Vec<Rational> {
    let (li, mi) = (l as i64, m as i64);
    let pre = Rational::new(
        factorial(l as u64 * m),
        factorial(m) * BigInt::from(l).pow(m as u32),
    );
    (1..=n_max as i64)
        .map(|n| {
            let e = n - 1;
            let mut acc = Rational::zero();
            // (1-Y^l)^m = Σ_s (-1)^s C(m,s) Y^{ls}; (1-Y)^{-N} = Σ_t C(N-1+t, t) Y^t
            for s in 0..=mi {
                let t = e - li * s;
                if t < 0 {
                    break;
                }
                let c = binomial_i64(mi, s) * binomial_i64(li * mi + 1 + t, t);
                if s % 2 == 0 {
                    acc += c;
                } else {
                    acc -= c;
                }
            }
            &pre * acc
        })
        .collect()
}
