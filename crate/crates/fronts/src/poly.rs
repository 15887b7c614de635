//! Dense univariate polynomials with exact coefficient differentiation.
//!
//! Coefficients are stored lowest degree first, matching the model config
//! format. All model functions that are not closed-form presets are
//! polynomials, so exact derivatives at the endpoints come for free.

use alloc::vec;
use alloc::vec::Vec;

/// Polynomial with `f64` coefficients, constant term first.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: impl Into<Vec<f64>>) -> Self {
        let mut coeffs = coeffs.into();
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(vec![0.0])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Degree of the lowest nonzero monomial; `None` for the zero polynomial.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Exact coefficient differentiation.
    pub fn deriv(&self) -> Poly {
        if self.coeffs.len() == 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as f64 + 1.0) * c)
                .collect::<Vec<_>>(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antideriv(&self) -> Poly {
        let mut out = vec![0.0];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| c / (i as f64 + 1.0)),
        );
        Poly::new(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Quotient by `x^k`, defined only when the lowest `k` coefficients vanish.
    pub fn div_xk(&self, k: usize) -> Option<Poly> {
        if self.coeffs.len() <= k {
            return self.is_zero().then(Poly::zero);
        }
        if self.coeffs[..k].iter().any(|&c| c != 0.0) {
            return None;
        }
        Some(Poly::new(self.coeffs[k..].to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_deriv() {
        // q = φ³(1−φ) = φ³ − φ⁴
        let q = Poly::new(vec![0.0, 0.0, 0.0, 1.0, -1.0]);
        assert_eq!(q.eval(0.0), 0.0);
        assert_eq!(q.eval(1.0), 0.0);
        assert_eq!(q.eval(0.5), 0.5f64.powi(3) * 0.5);
        let dq = q.deriv();
        // q̇ = 3φ² − 4φ³, q̇(1) = −1
        assert_eq!(dq.eval(1.0), -1.0);
        assert_eq!(q.lowest_degree(), Some(3));
    }

    #[test]
    fn div_xk() {
        let q = Poly::new(vec![0.0, 0.0, 2.0, -2.0]);
        let r = q.div_xk(1).unwrap();
        assert_eq!(r.coeffs(), &[0.0, 2.0, -2.0]);
        assert!(q.div_xk(3).is_none());
    }

    #[test]
    fn antideriv_mul() {
        let h = Poly::new(vec![0.0, -3.0, 3.0]); // 3φ(φ−1)
        let f = h.antideriv(); // φ³ − 1.5φ²
        assert_eq!(f.eval(1.0), -0.5);
        let d = Poly::new(vec![0.0, 0.0, 1.0]);
        let g = Poly::new(vec![0.0, 1.0, -1.0]);
        let q = d.mul(&g);
        assert_eq!(q.coeffs(), &[0.0, 0.0, 0.0, 1.0, -1.0]);
    }
}
