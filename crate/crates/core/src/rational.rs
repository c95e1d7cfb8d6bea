//! Exact rational helpers shared across modules.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i128>;

pub fn q(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

/// `"num/den"`, or just `"num"` for integers.
pub fn to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"num/den"`, `"num"`, or a finite decimal such as `"0.25"`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::invalid(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().map_err(|_| bad())?;
        let d: i128 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(Error::invalid("zero denominator"));
        }
        return Ok(q(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 30 {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let w: i128 = if whole.is_empty() || whole == "-" {
            0
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let den = 10i128.pow(frac.len() as u32);
        let f: i128 = frac.parse().map_err(|_| bad())?;
        let mag = w.abs() * den + f;
        return Ok(q(if negative { -mag } else { mag }, den));
    }
    let n: i128 = s.parse().map_err(|_| bad())?;
    Ok(int(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Smallest integer `>= r`.
pub fn ceil(r: &Rational) -> i128 {
    r.ceil().to_integer()
}

/// Smallest integer `>= r`, clamped below at zero.
pub fn ceil_count(r: &Rational) -> u128 {
    let c = ceil(r);
    if c.is_negative() {
        0
    } else {
        c as u128
    }
}

pub fn floor(r: &Rational) -> i128 {
    r.floor().to_integer()
}

pub fn is_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

pub fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, k)` saturating at `u128::MAX`; used only for guard estimates.
pub fn binom_saturating(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let g = acc.gcd(&(i + 1));
        let (a, d) = (acc / g, (i + 1) / g);
        let num = n - i;
        match a.checked_mul(num / d) {
            Some(v) if num.is_multiple_of(d) => acc = v,
            _ => match a.checked_mul(num) {
                Some(v) => acc = v / d,
                None => return u128::MAX,
            },
        }
    }
    acc
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn zero() -> Rational {
    Rational::zero()
}
