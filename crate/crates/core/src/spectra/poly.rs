use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial in `λ` with exact integer coefficients, stored in ascending
/// order of powers. Characteristic polynomials are monic of degree `n`.
///
/// Serializes as a JSON array of decimal strings, highest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    /// From ascending coefficients; trailing zeros are dropped.
    pub fn from_ascending(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// From `c_0, c_1, …, c_n` with `p(λ) = Σ c_i λ^(n-i)`.
    pub fn from_descending(mut coeffs: Vec<i128>) -> Self {
        coeffs.reverse();
        Self::from_ascending(coeffs)
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `λ`.
    pub fn x() -> Self {
        IntPolynomial { coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `λ^k`.
    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// `c_i` in the convention `p(λ) = Σ c_i λ^(n-i)`, `n` the degree.
    pub fn sachs_coeff(&self, i: usize) -> i128 {
        if i > self.degree() {
            0
        } else {
            self.coeff(self.degree() - i)
        }
    }

    pub fn ascending(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<i128> {
        self.coeffs.iter().rev().copied().collect()
    }

    pub fn leading(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn max_abs_coeff(&self) -> i128 {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// `p(-λ)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 1 { -c } else { c })
            .collect();
        Self::from_ascending(coeffs)
    }

    /// `λ^k · p(λ)`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, factor: i128) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.checked_mul(factor)
                    .expect("polynomial coefficient overflow")
            })
            .collect();
        Self::from_ascending(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                self.coeff(k)
                    .checked_add(other.coeff(k))
                    .expect("polynomial coefficient overflow")
            })
            .collect();
        Self::from_ascending(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).expect("polynomial coefficient overflow");
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(term)
                    .expect("polynomial coefficient overflow");
            }
        }
        Self::from_ascending(coeffs)
    }

    /// Exact value at an integer point.
    pub fn eval_int(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| {
            acc.checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .expect("polynomial evaluation overflow")
        })
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c as f64)
    }

    /// Every odd-indexed `c_i` vanishes, i.e. `p(-λ) = ±p(λ)`.
    pub fn is_spectrally_symmetric(&self) -> bool {
        (1..=self.degree())
            .step_by(2)
            .all(|i| self.sachs_coeff(i) == 0)
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders as `λ^3 - 3λ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            if abs != 1 || k == 0 {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.descending().iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<i128>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_descending(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(
            IntPolynomial::from_descending(vec![1, 0, -3, 0]).to_string(),
            "λ^3 - 3λ"
        );
        assert_eq!(
            IntPolynomial::from_descending(vec![1, 0, -4, 0, 4]).to_string(),
            "λ^4 - 4λ^2 + 4"
        );
        assert_eq!(IntPolynomial::one().to_string(), "1");
        assert_eq!(
            IntPolynomial::from_descending(vec![1, 0, -1]).to_string(),
            "λ^2 - 1"
        );
        assert_eq!(
            IntPolynomial::from_descending(vec![-2, 1]).to_string(),
            "-2λ + 1"
        );
    }

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::from_descending(vec![1, 0, -1]);
        let q = IntPolynomial::from_descending(vec![1, 1]);
        assert_eq!(
            p.mul(&q),
            IntPolynomial::from_descending(vec![1, 1, -1, -1])
        );
        assert_eq!(p.sub(&p), IntPolynomial::zero());
        assert_eq!(q.shift(2), IntPolynomial::from_descending(vec![1, 1, 0, 0]));
        assert_eq!(q.reflect(), IntPolynomial::from_descending(vec![-1, 1]));
        assert_eq!(p.eval_int(3), 8);
        assert_eq!(p.sachs_coeff(2), -1);
        assert!(p.is_spectrally_symmetric());
        assert!(!q.is_spectrally_symmetric());
    }

    #[test]
    fn json_is_descending_decimal_strings() {
        let p = IntPolynomial::from_descending(vec![1, 0, -3, 0]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1","0","-3","0"]"#);
        assert_eq!(serde_json::from_str::<IntPolynomial>(&json).unwrap(), p);
    }
}
