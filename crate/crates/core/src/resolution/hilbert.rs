use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ideal::{Grading, Monomial, MonomialIdeal};

/// Integer polynomial in `t`, coefficients indexed by exponent, trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Polynomial(Vec<i64>);

impl Polynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::default();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Polynomial {
        (0..k).fold(Polynomial::new(vec![1]), |acc, _| {
            acc.mul(&Polynomial::new(vec![1, -1]))
        })
    }

    /// Exact quotient by `(1 - t)`, or `None` when `t = 1` is not a root.
    pub fn div_one_minus_t(&self) -> Option<Polynomial> {
        if self.is_zero() || self.eval_at_one() != 0 {
            return None;
        }
        let mut q = Vec::with_capacity(self.0.len());
        let mut acc = 0;
        for &c in &self.0[..self.0.len() - 1] {
            acc += c;
            q.push(acc);
        }
        Some(Polynomial::new(q))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Hilbert series `numerator / prod_k (1 - t^{d_k})` of `R/I`, together with
/// the form obtained by cancelling every factor `(1 - t)` from the numerator:
///
/// `H = reduced_numerator / ((1 - t)^reduced_denominator_power * prod_k [d_k])`
///
/// where `[d] = 1 + t + ... + t^{d-1}` (identically 1 in the standard grading).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: Polynomial,
    pub denominator_degrees: Vec<u32>,
    pub reduced_numerator: Polynomial,
    pub reduced_denominator_power: usize,
}

impl HilbertSeries {
    pub fn new(numerator: Polynomial, grading: &Grading) -> HilbertSeries {
        let n = grading.num_vars();
        let mut reduced = numerator.clone();
        let mut cancelled = 0;
        while cancelled < n {
            match reduced.div_one_minus_t() {
                Some(q) => {
                    reduced = q;
                    cancelled += 1;
                }
                None => break,
            }
        }
        HilbertSeries {
            numerator,
            denominator_degrees: grading.degrees().to_vec(),
            reduced_numerator: reduced,
            reduced_denominator_power: n - cancelled,
        }
    }

    /// Krull dimension of `R/I`: the order of the pole at `t = 1`.
    pub fn dimension(&self) -> usize {
        self.reduced_denominator_power
    }

    /// Power-series coefficients of degrees `0..=up_to`, from the unreduced form.
    pub fn expand(&self, up_to: usize) -> Vec<i64> {
        let mut series: Vec<i64> = (0..=up_to).map(|k| self.numerator.coeff(k)).collect();
        for &d in &self.denominator_degrees {
            let d = d as usize;
            for k in d..=up_to {
                series[k] += series[k - d];
            }
        }
        series
    }
}

/// Number of monomials of each weighted degree `0..=max_degree` outside `I`,
/// by direct enumeration.
pub fn hilbert_function_oracle(ideal: &MonomialIdeal, max_degree: u64) -> Vec<u64> {
    let grading = ideal.grading();
    let mut counts = vec![0u64; max_degree as usize + 1];
    let mut exps = vec![0u32; grading.num_vars()];
    fn walk(
        var: usize,
        degree: u64,
        exps: &mut Vec<u32>,
        ideal: &MonomialIdeal,
        max_degree: u64,
        counts: &mut [u64],
    ) {
        if var == exps.len() {
            if !ideal.contains(&Monomial::new(exps.clone())) {
                counts[degree as usize] += 1;
            }
            return;
        }
        let d = ideal.grading().degrees()[var] as u64;
        let mut e = 0;
        while degree + e * d <= max_degree {
            exps[var] = e as u32;
            walk(var + 1, degree + e * d, exps, ideal, max_degree, counts);
            e += 1;
        }
        exps[var] = 0;
    }
    walk(0, 0, &mut exps, ideal, max_degree, &mut counts);
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_display() {
        assert_eq!(Polynomial::new(vec![1, 2, 3, 4, -1]).to_string(), "1 + 2t + 3t^2 + 4t^3 - t^4");
        assert_eq!(Polynomial::new(vec![0, -1, 0, 5]).to_string(), "-t + 5t^3");
        assert_eq!(Polynomial::new(vec![0, 0]).to_string(), "0");
    }

    #[test]
    fn divide_by_one_minus_t() {
        let p = Polynomial::new(vec![1, 2, 3, 4, -1]).mul(&Polynomial::one_minus_t_pow(2));
        assert_eq!(p, Polynomial::new(vec![1, 0, 0, 0, -6, 6, -1]));
        let q = p.div_one_minus_t().unwrap().div_one_minus_t().unwrap();
        assert_eq!(q, Polynomial::new(vec![1, 2, 3, 4, -1]));
        assert!(q.div_one_minus_t().is_none());
    }

    #[test]
    fn reduction_in_two_variables() {
        let h = HilbertSeries::new(Polynomial::one_minus_t_pow(2), &Grading::standard(2));
        assert_eq!(h.reduced_numerator, Polynomial::new(vec![1]));
        assert_eq!(h.reduced_denominator_power, 0);
        assert_eq!(h.expand(4), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn weighted_expansion() {
        // K[x] with deg x = 3: 1/(1-t^3)
        let h = HilbertSeries::new(Polynomial::new(vec![1]), &Grading::new(vec![3]).unwrap());
        assert_eq!(h.expand(7), vec![1, 0, 0, 1, 0, 0, 1, 0]);
        assert_eq!(h.dimension(), 1);
    }

    #[test]
    fn oracle_examples() {
        let tri = MonomialIdeal::parse(Grading::standard(3), &["x1*x2", "x1*x3", "x2*x3"]).unwrap();
        assert_eq!(hilbert_function_oracle(&tri, 3), vec![1, 3, 3, 3]);
        let max = MonomialIdeal::parse(Grading::standard(2), &["x1", "x2"]).unwrap();
        assert_eq!(hilbert_function_oracle(&max, 5), vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(hilbert_function_oracle(&tri, 0), vec![1]);
        let weighted =
            MonomialIdeal::parse(Grading::new(vec![2, 3]).unwrap(), &["x1*x2"]).unwrap();
        // outside (x1 x2): powers of x1 (degrees 0,2,4,..) and of x2 (3,6,..)
        assert_eq!(hilbert_function_oracle(&weighted, 6), vec![1, 0, 1, 1, 1, 0, 2]);
    }
}
