//! Command-line number formats.

use num_complex::Complex64;

use hlz_core::identitylab::Assignment;

/// Parses `re,im` or a bare real.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let bad = || format!("'{text}' is not a number or 're,im' pair");
    let mut parts = text.split(',');
    let re = parts.next().ok_or_else(bad)?.trim().parse::<f64>().map_err(|_| bad())?;
    let im = match parts.next() {
        Some(p) => p.trim().parse::<f64>().map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

/// Parses `name=value[,name=value...]`. A comma-separated piece without
/// `=` is the imaginary part of the preceding value, so `a=1.5,0.5` sets
/// `a = 1.5 + 0.5i`.
pub fn parse_assignment(text: &str, into: &mut Assignment) -> Result<(), String> {
    let mut current: Option<(String, String)> = None;
    let finish = |entry: Option<(String, String)>, into: &mut Assignment| -> Result<(), String> {
        if let Some((name, value)) = entry {
            into.insert(name, parse_complex(&value)?);
        }
        Ok(())
    };
    for piece in text.split(',').map(str::trim) {
        if let Some((name, value)) = piece.split_once('=') {
            finish(current.take(), into)?;
            if name.trim().is_empty() {
                return Err(format!("'{piece}' has an empty name"));
            }
            current = Some((name.trim().to_string(), value.trim().to_string()));
        } else {
            match current.as_mut() {
                Some((_, value)) if !value.contains(',') => {
                    value.push(',');
                    value.push_str(piece);
                }
                _ => return Err(format!("'{piece}' is not name=value")),
            }
        }
    }
    finish(current, into)
}

/// 17 significant digits, enough to round-trip any double.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn fmt_complex(v: Complex64) -> String {
    format!("{},{}", fmt_real(v.re), fmt_real(v.im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("1.5").unwrap(), Complex64::new(1.5, 0.0));
        assert_eq!(parse_complex("0,-2e-3").unwrap(), Complex64::new(0.0, -2e-3));
        for bad in ["", "x", "1,2,3", "1,"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn assignments_with_complex_values() {
        let mut a = Assignment::new();
        parse_assignment("n=0,m=0.5,a=2.3,k=2", &mut a).unwrap();
        assert_eq!(a.len(), 4);
        assert_eq!(a["a"], Complex64::new(2.3, 0.0));
        parse_assignment("a=1.5,0.5,k=2,-1", &mut a).unwrap();
        assert_eq!(a["a"], Complex64::new(1.5, 0.5));
        assert_eq!(a["k"], Complex64::new(2.0, -1.0));
        for bad in ["3", "a=1,2,3", "=1", "a=x"] {
            assert!(parse_assignment(bad, &mut Assignment::new()).is_err(), "{bad}");
        }
    }

    #[test]
    fn printed_values_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE, 0.0] {
            let back: f64 = fmt_real(x).parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits());
        }
        let v = Complex64::new(0.4444444444444444, -1e-17);
        assert_eq!(parse_complex(&fmt_complex(v)).unwrap(), v);
    }
}
