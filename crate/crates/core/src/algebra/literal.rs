//! Text literals: `(x,y)`, `x+y*h`, `x-y*h`, where `h` stands for `δ`.

use std::str::FromStr;

use super::TwoComplex;
use crate::Error;

/// Formats a real with 17 significant digits, like C's `%.17g`.
///
/// Trailing zeros are dropped, so `1.0` prints as `1`; the output always
/// parses back to the same `f64`.
pub fn format_real(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.16e}", v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if (-5..17).contains(&exp) {
        if exp < 0 {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
            out.push_str(digits);
        } else {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                out.push_str(digits);
                out.extend(std::iter::repeat_n('0', int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        }
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&exp.to_string());
    }
    out
}

fn parse_real(s: &str) -> Result<f64, Error> {
    let s = s.trim();
    let v: f64 = s
        .parse()
        .map_err(|_| Error::Parse(format!("invalid number {s:?}")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Parse(format!("non-finite number {s:?}")))
    }
}

/// Parses the coefficient of `h` in `y*h`, `h` or an empty sign-only prefix.
fn parse_delta_coeff(s: &str) -> Result<Option<f64>, Error> {
    let t = s.trim();
    let Some(body) = t.strip_suffix('h') else {
        return Ok(None);
    };
    let body = body.trim_end();
    let coeff = match body.strip_suffix('*') {
        Some(num) => parse_real(num)?,
        None => match body.trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => return Err(Error::Parse(format!("expected `*` before h in {other:?}"))),
        },
    };
    Ok(Some(coeff))
}

/// Index of the `+`/`-` separating the real part from the `δ` part, skipping
/// a leading sign and exponent signs.
fn split_index(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
}

impl FromStr for TwoComplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty literal".into()));
        }
        if let Some(inner) = t.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unclosed parenthesis in {t:?}")))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected `(x,y)`, got {t:?}")))?;
            return Ok(TwoComplex::new_unchecked(parse_real(a)?, parse_real(b)?));
        }
        if t.ends_with('h') {
            // either `x±y*h` or `y*h` alone
            if let Some(i) = split_index(t) {
                let (re, im) = t.split_at(i);
                if let (Ok(x), Ok(Some(y))) = (parse_real(re), parse_delta_coeff(im)) {
                    return Ok(TwoComplex::new_unchecked(x, y));
                }
            }
            if let Some(y) = parse_delta_coeff(t)? {
                return Ok(TwoComplex::new_unchecked(0.0, y));
            }
        }
        Ok(TwoComplex::from_real(parse_real(t)?))
    }
}
