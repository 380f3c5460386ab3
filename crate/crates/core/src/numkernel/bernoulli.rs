/// Even Bernoulli numbers `B_2, B_4, ..., B_30`.
pub(crate) const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// `B_{2j} / (2j)!` for `j >= 1`.
///
/// Tabulated values are used up to `B_30`; beyond that the identity
/// `B_{2j} / (2j)! = (-1)^(j+1) 2 zeta(2j) / (2 pi)^(2j)` is summed, where
/// `zeta(2j)` is 1 to within a few ulps after a handful of terms.
pub(crate) fn bernoulli_over_factorial(j: usize) -> f64 {
    assert!(j >= 1, "Bernoulli index starts at 1");
    if j <= BERNOULLI_EVEN.len() {
        let fact: f64 = (1..=2 * j).map(|i| i as f64).product();
        return BERNOULLI_EVEN[j - 1] / fact;
    }
    let p = 2 * j as i32;
    let zeta: f64 = (1..=8).rev().map(|k| (k as f64).powi(-p)).sum();
    let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
    sign * 2.0 * zeta / (2.0 * std::f64::consts::PI).powi(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Bernoulli numbers from the recurrence sum_{k<m} C(m+1,k) B_k = -(m+1) B_m,
    // in exact rational arithmetic on i128.
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }

    fn bernoulli_rational(upto: usize) -> Vec<(i128, i128)> {
        let mut b: Vec<(i128, i128)> = vec![(1, 1)];
        for m in 1..=upto {
            let (mut num, mut den) = (0i128, 1i128);
            let mut c: i128 = 1; // C(m+1, 0)
            for (k, &(bn, bd)) in b.iter().enumerate() {
                let (tn, td) = (c * bn, bd);
                num = num * td + tn * den;
                den *= td;
                let g = gcd(num, den);
                num /= g;
                den /= g;
                c = c * (m as i128 + 1 - k as i128) / (k as i128 + 1);
            }
            let (mut n, mut d) = (-num, den * (m as i128 + 1));
            let g = gcd(n, d);
            n /= g;
            d /= g;
            if d < 0 {
                n = -n;
                d = -d;
            }
            b.push((n, d));
        }
        b
    }

    #[test]
    fn zeta_formula_continues_the_table() {
        for j in 10..=15 {
            let p = 2 * j as i32;
            let zeta: f64 = (1..=8).rev().map(|k| (k as f64).powi(-p)).sum();
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            let formula = sign * 2.0 * zeta / (2.0 * std::f64::consts::PI).powi(p);
            let table = bernoulli_over_factorial(j);
            assert!((formula - table).abs() <= 1e-14 * table.abs(), "j = {j}");
        }
        assert!(bernoulli_over_factorial(16) < 0.0 && bernoulli_over_factorial(17) > 0.0);
    }

    #[test]
    fn table_matches_recurrence() {
        let exact = bernoulli_rational(30);
        for (j, &v) in BERNOULLI_EVEN.iter().enumerate() {
            let (n, d) = exact[2 * (j + 1)];
            let want = n as f64 / d as f64;
            assert!((v - want).abs() <= 1e-15 * want.abs(), "B_{} {v} vs {want}", 2 * (j + 1));
        }
    }
}
