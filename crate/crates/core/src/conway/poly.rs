use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// Conway polynomial coefficients `a_0..=a_d`. Coefficients above `d` are
/// unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedPoly {
    coefficients: Vec<i64>,
    components: Option<usize>,
}

impl TruncatedPoly {
    pub fn new(coefficients: Vec<i64>, components: Option<usize>) -> TruncatedPoly {
        assert!(!coefficients.is_empty(), "degree budget starts at 0");
        TruncatedPoly {
            coefficients,
            components,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, m: usize) -> Option<i64> {
        self.coefficients.get(m).copied()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn components(&self) -> Option<usize> {
        self.components
    }

    /// Checks `a_m = 0` for `m < p - 1` and for `m + p` even.
    pub fn satisfies_parity(&self) -> bool {
        let Some(p) = self.components else {
            return true;
        };
        self.coefficients
            .iter()
            .enumerate()
            .all(|(m, &a)| a == 0 || (m + 1 >= p && (m + p) % 2 == 1))
    }
}

impl fmt::Display for TruncatedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (m, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let scale = match a {
                1 => String::new(),
                -1 => "-".to_string(),
                _ => a.to_string(),
            };
            let body = match m {
                0 => a.to_string(),
                1 => format!("{scale}z"),
                _ => format!("{scale}z^{m}"),
            };
            terms.push(body);
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} + O(z^{})", terms.join(" + ").replace("+ -", "- "), self.max_degree() + 1)
    }
}

/// Integer Laurent polynomial in `t`, stored from its lowest exponent.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LaurentPoly {
    low: i64,
    coefficients: Vec<i64>,
}

impl LaurentPoly {
    pub fn new(low: i64, coefficients: Vec<i64>) -> LaurentPoly {
        let mut p = LaurentPoly { low, coefficients };
        p.normalize();
        p
    }

    pub fn zero() -> LaurentPoly {
        LaurentPoly {
            low: 0,
            coefficients: Vec::new(),
        }
    }

    pub fn constant(c: i64) -> LaurentPoly {
        LaurentPoly::new(0, vec![c])
    }

    pub fn monomial(c: i64, e: i64) -> LaurentPoly {
        LaurentPoly::new(e, vec![c])
    }

    fn normalize(&mut self) {
        while self.coefficients.last() == Some(&0) {
            self.coefficients.pop();
        }
        let lead = self.coefficients.iter().take_while(|&&c| c == 0).count();
        self.coefficients.drain(..lead);
        self.low += lead as i64;
        if self.coefficients.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coefficients.len() as i64 - 1
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn coefficient(&self, e: i64) -> i64 {
        if e < self.low {
            return 0;
        }
        self.coefficients.get((e - self.low) as usize).copied().unwrap_or(0)
    }

    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low + k,
            coefficients: self.coefficients.clone(),
        }
    }

    /// Representative modulo units `±t^k`: lowest exponent 0, positive
    /// lowest coefficient.
    pub fn normalized_up_to_units(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let sign = self.coefficients[0].signum();
        LaurentPoly {
            low: 0,
            coefficients: self.coefficients.iter().map(|c| c * sign).collect(),
        }
    }

    pub fn equal_up_to_units(&self, other: &LaurentPoly) -> bool {
        self.normalized_up_to_units() == other.normalized_up_to_units()
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let mut rem = self.coefficients.clone();
        let d = &divisor.coefficients;
        if rem.len() < d.len() {
            return None;
        }
        let lead = *d.last().unwrap();
        let mut q = vec![0i64; rem.len() - d.len() + 1];
        for i in (0..q.len()).rev() {
            let top = rem[i + d.len() - 1];
            if top % lead != 0 {
                return None;
            }
            let c = top / lead;
            q[i] = c;
            for (j, &dj) in d.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
        if rem.iter().any(|&r| r != 0) {
            return None;
        }
        Some(LaurentPoly::new(self.low - divisor.low, q))
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        (0..k).fold(LaurentPoly::constant(1), |acc, _| &acc * self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let coefficients = (low..=high)
            .map(|e| self.coefficient(e) + rhs.coefficient(e))
            .collect();
        LaurentPoly::new(low, coefficients)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coefficients = vec![0i64; self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in rhs.coefficients.iter().enumerate() {
                coefficients[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.low + rhs.low, coefficients)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let e = self.low + i as i64;
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            if !first {
                f.write_str(" ")?;
            }
            let mag = c.abs();
            let body = match (e, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "t".to_string(),
                (1, m) => format!("{m}t"),
                (e, 1) => format!("t^{e}"),
                (e, m) => format!("{m}t^{e}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, "{sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_check() {
        assert!(TruncatedPoly::new(vec![0, 1, 0, 3], Some(2)).satisfies_parity());
        assert!(!TruncatedPoly::new(vec![1, 1], Some(2)).satisfies_parity());
        assert!(!TruncatedPoly::new(vec![0, 0, 2], Some(2)).satisfies_parity());
        assert!(!TruncatedPoly::new(vec![0, 1, 0], Some(3)).satisfies_parity());
    }

    #[test]
    fn display() {
        let p = TruncatedPoly::new(vec![1, 0, -2], Some(1));
        assert_eq!(p.to_string(), "1 - 2z^2 + O(z^3)");
        let q = TruncatedPoly::new(vec![0, -1, 0, 1], Some(2));
        assert_eq!(q.to_string(), "-z + z^3 + O(z^4)");
        let t = LaurentPoly::new(-1, vec![1, -1, 1]);
        assert_eq!(t.to_string(), "t - 1 + t^-1");
    }

    #[test]
    fn laurent_arithmetic() {
        let a = LaurentPoly::new(-1, vec![1, 1]); // t^-1 + 1
        let b = LaurentPoly::new(0, vec![1, -1]); // 1 - t
        let prod = &a * &b;
        assert_eq!(prod, LaurentPoly::new(-1, vec![1, 0, -1]));
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(LaurentPoly::new(0, vec![1, 0, 1]).div_exact(&b).is_none());
        assert!((&a - &a).is_zero());
        let x = LaurentPoly::new(3, vec![-1, 2]);
        assert!(x.equal_up_to_units(&LaurentPoly::new(0, vec![1, -2])));
    }
}
