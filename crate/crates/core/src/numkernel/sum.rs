use num_complex::Complex64;

/// Neumaier-compensated accumulator for complex terms.
///
/// Each component carries its own running compensation; `abs_sum` tracks
/// `sum |term|` so callers can bound the rounding error.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    re: f64,
    re_c: f64,
    im: f64,
    im_c: f64,
    abs_sum: f64,
}

#[inline]
fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, term: Complex64) {
        neumaier(&mut self.re, &mut self.re_c, term.re);
        neumaier(&mut self.im, &mut self.im_c, term.im);
        self.abs_sum += term.norm();
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re + self.re_c, self.im + self.im_c)
    }

    /// Sum of the magnitudes of every term added so far.
    #[inline]
    pub fn abs_sum(&self) -> f64 {
        self.abs_sum
    }
}

impl Extend<Complex64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = Complex64>>(&mut self, iter: I) {
        for t in iter {
            self.add(t);
        }
    }
}

impl FromIterator<Complex64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_low_order_bits() {
        let terms = [1e16, 1.0, -1e16, 1.0].map(|x| Complex64::new(x, -x));
        let s: CompensatedSum = terms.into_iter().collect();
        assert_eq!(s.value(), Complex64::new(2.0, -2.0));
    }
}
