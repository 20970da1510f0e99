//! Number formatting and flag parsing shared by the subcommands.

use num_rational::Ratio;
use uncrossed::Rational;

/// `x` with 10 significant digits, trailing zeros dropped.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

pub fn opt_sig10(x: Option<f64>) -> String {
    x.map(sig10).unwrap_or_default()
}

/// Accepts `p/q`, an integer, or a finite decimal such as `0.35`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("cannot read {s:?} as a decimal"));
        }
        let negative = int.starts_with('-');
        let whole: i64 = match int.trim_start_matches('-') {
            "" => 0,
            w => w
                .parse()
                .map_err(|_| format!("cannot read {s:?} as a decimal"))?,
        };
        let scale = 10i64.pow(frac.len() as u32);
        let digits: i64 = frac
            .parse()
            .map_err(|_| format!("cannot read {s:?} as a decimal"))?;
        let value = whole
            .checked_mul(scale)
            .and_then(|w| w.checked_add(digits))
            .ok_or_else(|| format!("{s:?} is out of range"))?;
        return Ok(Ratio::new(if negative { -value } else { value }, scale));
    }
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: i64 = p
        .trim()
        .parse()
        .map_err(|_| format!("cannot read {s:?} as p/q"))?;
    let q: i64 = q
        .trim()
        .parse()
        .map_err(|_| format!("cannot read {s:?} as p/q"))?;
    if q == 0 {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Ratio::new(p, q))
}
