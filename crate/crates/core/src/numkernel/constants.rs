use std::fmt;
use std::str::FromStr;

use super::bernoulli::bernoulli_over_factorial;
use crate::error::Error;

/// Mathematical constants with a stored high-precision literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstantTag {
    Catalan,
    Apery,
    Glaisher,
    EulerGamma,
    Pi,
    Log2,
}

impl ConstantTag {
    pub const ALL: [ConstantTag; 6] = [
        ConstantTag::Catalan,
        ConstantTag::Apery,
        ConstantTag::Glaisher,
        ConstantTag::EulerGamma,
        ConstantTag::Pi,
        ConstantTag::Log2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstantTag::Catalan => "catalan",
            ConstantTag::Apery => "apery",
            ConstantTag::Glaisher => "glaisher",
            ConstantTag::EulerGamma => "euler_gamma",
            ConstantTag::Pi => "pi",
            ConstantTag::Log2 => "log2",
        }
    }

    /// The stored decimal expansion.
    pub fn digits(self) -> &'static str {
        match self {
            ConstantTag::Catalan => "0.915965594177219015054603514932384110774",
            ConstantTag::Apery => "1.202056903159594285399738161511449990765",
            ConstantTag::Glaisher => "1.282427129100622636875342568869791727767",
            ConstantTag::EulerGamma => "0.577215664901532860606512090082402431042",
            ConstantTag::Pi => "3.141592653589793238462643383279502884197",
            ConstantTag::Log2 => "0.693147180559945309417232121458176568076",
        }
    }
}

impl fmt::Display for ConstantTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstantTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ConstantTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown constant '{s}'")))
    }
}

/// Stored literal rounded to the nearest double.
pub fn constant(tag: ConstantTag) -> f64 {
    tag.digits().parse().expect("stored literal is a valid decimal")
}

/// Recomputes a constant from a slow series. Larger `effort` uses more
/// terms; `effort = 0` is treated as 1.
pub fn constant_oracle(tag: ConstantTag, effort: u32) -> f64 {
    let effort = effort.max(1) as usize;
    match tag {
        ConstantTag::Catalan => catalan_oracle(4 * effort),
        ConstantTag::Apery => apery_oracle(4 * effort),
        ConstantTag::Glaisher => glaisher_oracle(4 * effort),
        ConstantTag::EulerGamma => euler_gamma_oracle(4 * effort),
        ConstantTag::Pi => 4.0 * 1f64.atan(),
        ConstantTag::Log2 => (1..=12 * effort).map(|k| 1.0 / (k as f64 * 2f64.powi(k as i32))).sum(),
    }
}

/// Alternating series `sum (-1)^k / (2k+1)^2` accelerated with the
/// Cohen-Rodriguez Villegas-Zagier weights.
fn catalan_oracle(n: usize) -> f64 {
    let d = (3.0 + 8f64.sqrt()).powi(n as i32);
    let d = (d + 1.0 / d) / 2.0;
    let (mut b, mut c, mut s) = (-1.0, -d, 0.0);
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        let a = 1.0 / ((2.0 * kf + 1.0) * (2.0 * kf + 1.0));
        s += c * a;
        b *= (kf + n as f64) * (kf - n as f64) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

const EM_CORRECTIONS: usize = 6;

/// `sum_{n>=1} 1/n^3`: head summed directly, tail by Euler-Maclaurin.
fn apery_oracle(big_n: usize) -> f64 {
    let x = big_n as f64;
    let head: f64 = (1..big_n).rev().map(|n| (n as f64).powi(-3)).sum();
    // f^(m)(x) = (-1)^m (m+2)!/2 x^(-3-m)
    let deriv = |m: usize| -> f64 {
        let fact: f64 = (1..=m + 2).map(|i| i as f64).product();
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        sign * fact / 2.0 * x.powi(-3 - m as i32)
    };
    let mut tail = 1.0 / (2.0 * x * x) + 0.5 * x.powi(-3);
    for j in 1..=EM_CORRECTIONS {
        tail -= bernoulli_over_factorial(j) * deriv(2 * j - 1);
    }
    head + tail
}

fn euler_gamma_oracle(big_n: usize) -> f64 {
    let x = big_n as f64;
    let harmonic: f64 = (1..=big_n).rev().map(|k| 1.0 / k as f64).sum();
    let mut g = harmonic - x.ln() - 1.0 / (2.0 * x);
    for j in 1..=EM_CORRECTIONS {
        let b2j = bernoulli_over_factorial(j) * (1..=2 * j).map(|i| i as f64).product::<f64>();
        g += b2j / (2.0 * j as f64 * x.powi(2 * j as i32));
    }
    g
}

/// `sum_{n>=1} ln(n)/n^2`, i.e. `-zeta'(2)`.
fn log_zeta2_sum(big_n: usize) -> f64 {
    let x = big_n as f64;
    let head: f64 = (2..big_n).rev().map(|n| (n as f64).ln() / (n as f64 * n as f64)).sum();
    // f^(m)(x) = (-1)^m (m+1)! x^(-2-m) (ln x - H_{m+1} + 1)
    let deriv = |m: usize| -> f64 {
        let fact: f64 = (1..=m + 1).map(|i| i as f64).product();
        let h: f64 = (1..=m + 1).map(|i| 1.0 / i as f64).sum();
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        sign * fact * x.powi(-2 - m as i32) * (x.ln() - h + 1.0)
    };
    let mut tail = (x.ln() + 1.0) / x + 0.5 * deriv(0);
    for j in 1..=EM_CORRECTIONS {
        tail -= bernoulli_over_factorial(j) * deriv(2 * j - 1);
    }
    head + tail
}

fn glaisher_oracle(big_n: usize) -> f64 {
    let pi = 4.0 * 1f64.atan();
    let gamma = euler_gamma_oracle(big_n);
    let zeta2_prime = -log_zeta2_sum(big_n);
    ((gamma + (2.0 * pi).ln()) / 12.0 - zeta2_prime / (2.0 * pi * pi)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    const HIGH: u32 = 10;

    #[test]
    fn literals_have_thirty_digits() {
        for tag in ConstantTag::ALL {
            let sig = tag.digits().chars().filter(|c| c.is_ascii_digit()).skip_while(|&c| c == '0').count();
            assert!(sig >= 30, "{tag}: {sig}");
        }
    }

    #[test]
    fn leading_digits() {
        assert!((constant(ConstantTag::Catalan) - 0.915965594177219015).abs() < 1e-16);
        assert!((constant(ConstantTag::Apery) - 1.202056903159594285).abs() < 1e-15);
        assert!((constant(ConstantTag::Glaisher) - 1.282427129100622636).abs() < 1e-15);
        assert_eq!(constant(ConstantTag::Pi), std::f64::consts::PI);
        assert_eq!(constant(ConstantTag::Log2), std::f64::consts::LN_2);
    }

    #[test]
    fn oracles_agree_at_high_effort() {
        for tag in ConstantTag::ALL {
            let diff = (constant(tag) - constant_oracle(tag, HIGH)).abs();
            assert!(diff <= 1e-12, "{tag}: {diff:e}");
        }
    }

    #[test]
    fn pi_oracle_is_arctangent() {
        assert_eq!(constant_oracle(ConstantTag::Pi, 1), 4.0 * 1f64.atan());
        assert_eq!(constant_oracle(ConstantTag::Pi, 7), 4.0 * 1f64.atan());
    }

    #[test]
    fn oracle_error_does_not_grow_with_effort() {
        for tag in ConstantTag::ALL {
            let errs: Vec<f64> =
                (1..=4).map(|e| (constant_oracle(tag, e) - constant(tag)).abs()).collect();
            for w in errs.windows(2) {
                assert!(w[1] <= w[0].max(4.0 * f64::EPSILON), "{tag}: {errs:?}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for tag in ConstantTag::ALL {
            assert_eq!(tag.name().parse::<ConstantTag>().unwrap(), tag);
        }
        assert!("zeta".parse::<ConstantTag>().is_err());
    }
}
