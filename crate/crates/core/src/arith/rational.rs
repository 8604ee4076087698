use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `a`, `a/b`, or a decimal such as `-1.25` or `3e-7`, exactly.
///
/// Decimals are read as `m / 10^k`; no floating-point value is ever formed.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Input("empty number".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = parse_integer(num)?;
        let d = parse_integer(den)?;
        if d.is_zero() {
            return Err(Error::Input(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    parse_decimal(s)
}

fn parse_integer(text: &str) -> Result<BigInt> {
    let t = text.trim();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Input(format!("not an integer: {text:?}")));
    }
    t.parse::<BigInt>()
        .map_err(|_| Error::Input(format!("not an integer: {text:?}")))
}

fn parse_decimal(s: &str) -> Result<Rational> {
    let bad = || Error::Input(format!("not a number: {s:?}"));
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp_text = &s[pos + 1..];
            let exp: i64 = exp_text.parse().map_err(|_| bad())?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, body) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = digits.parse().map_err(|_| bad())?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let pow = num_traits::pow(ten, scale.unsigned_abs() as usize);
    Ok(if scale >= 0 {
        Rational::from_integer(numer * pow)
    } else {
        Rational::new(numer, pow)
    })
}

/// Text form `a/b`, or just `a` when the value is an integer.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The rational closest to `x` whose denominator does not exceed
/// `max_denominator`, found by walking the continued-fraction convergents.
pub fn limit_denominator(x: &Rational, max_denominator: &BigInt) -> Rational {
    assert!(max_denominator.is_positive(), "max_denominator must be positive");
    if x.denom() <= max_denominator {
        return x.clone();
    }
    // Walk the continued fraction of x, keeping the last two convergents.
    let (mut p0, mut q0, mut p1, mut q1) =
        (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let (mut n, mut d) = (x.numer().clone(), x.denom().clone());
    loop {
        let a = n.div_floor(&d);
        let q2 = &q0 + &a * &q1;
        if &q2 > max_denominator {
            break;
        }
        let p2 = &p0 + &a * &p1;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let r = &n - &a * &d;
        n = std::mem::replace(&mut d, r);
    }
    // Best semiconvergent below the bound versus the last convergent.
    let k = (max_denominator - &q0).div_floor(&q1);
    let semi = Rational::new(&p0 + &k * &p1, &q0 + &k * &q1);
    let conv = Rational::new(p1, q1);
    if (&conv - x).abs() <= (&semi - x).abs() {
        conv
    } else {
        semi
    }
}

/// Least common multiple of the denominators of all given values (1 when
/// the iterator is empty).
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}
