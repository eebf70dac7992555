//! Truncated operator power series in an inverse spectral variable.
//!
//! A series holds coefficients for u⁰..u^k where u is 1/λ in the
//! rational setting. Products are truncated convolutions; a series with
//! invertible leading coefficient has a truncated inverse satisfying
//! inv·self = 𝕀 + O(u^{k+1}).

use crate::error::{CoreError, Result};
use crate::grading::Grading;
use crate::operator::GradedOperator;
use crate::C64;

#[derive(Clone, Debug)]
pub struct OperatorSeries {
    coeffs: Vec<GradedOperator>,
}

impl OperatorSeries {
    pub fn new(coeffs: Vec<GradedOperator>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    /// Constant series with the given order: x + 0·u + … + 0·u^order.
    pub fn constant(x: GradedOperator, order: usize) -> Self {
        let zero = GradedOperator::zeros(x.grading(), x.spaces());
        let mut coeffs = vec![x];
        coeffs.resize(order + 1, zero);
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &GradedOperator {
        &self.coeffs[k]
    }

    pub fn grading(&self) -> &Grading {
        self.coeffs[0].grading()
    }

    pub fn spaces(&self) -> usize {
        self.coeffs[0].spaces()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        let zero = GradedOperator::zeros(self.grading(), self.spaces());
        coeffs.resize(order + 1, zero);
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().max(other.order());
        let a = self.truncate(order);
        let b = other.truncate(order);
        Self {
            coeffs: a
                .coeffs
                .iter()
                .zip(b.coeffs.iter())
                .map(|(x, y)| x.add(y))
                .collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.scale(s)).collect(),
        }
    }

    /// Truncated product at the max of both orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().max(other.order());
        let zero = GradedOperator::zeros(self.grading(), self.spaces());
        let mut coeffs = vec![zero; order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.max_abs() == 0.0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs }
    }

    /// Truncated inverse; requires an invertible leading coefficient.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].inverse()?;
        let order = self.order();
        let mut inv = vec![c0_inv.clone()];
        for k in 1..=order {
            // inv_k = −c0⁻¹ Σ_{j=1..k} c_j inv_{k−j}
            let mut acc = GradedOperator::zeros(self.grading(), self.spaces());
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&inv[k - j]));
            }
            inv.push(c0_inv.mul(&acc).neg());
        }
        Ok(Self { coeffs: inv })
    }

    /// Evaluate Σ c_k u^k at u = 1/λ.
    pub fn eval_inv_lambda(&self, lambda: C64) -> GradedOperator {
        let u = C64::new(1.0, 0.0) / lambda;
        let mut acc = GradedOperator::zeros(self.grading(), self.spaces());
        let mut pw = C64::new(1.0, 0.0);
        for c in &self.coeffs {
            acc = acc.add(&c.scale(pw));
            pw *= u;
        }
        acc
    }

    /// Multiply by a scalar polynomial in u given by its coefficients.
    pub fn mul_scalar_series(&self, poly: &[C64]) -> Self {
        let order = self.order();
        let zero = GradedOperator::zeros(self.grading(), self.spaces());
        let mut coeffs = vec![zero; order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, s) in poly.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.scale(*s));
            }
        }
        Self { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::Grading;

    #[test]
    fn inverse_is_truncated_inverse() {
        let g = Grading::distinguished(1, 1);
        let id = GradedOperator::identity(&g, 2);
        // series 1 + uP with P the embedded super-permutation pattern
        let mut p = GradedOperator::zeros(&g, 2);
        for i in 0..2 {
            for j in 0..2 {
                let sign = if g.parity(j) == 1 { -1.0 } else { 1.0 };
                p.add_units_scaled(C64::new(sign, 0.0), &[(0, i, j), (1, j, i)]);
            }
        }
        let s = OperatorSeries::new(vec![id.clone(), p]).truncate(5);
        let inv = s.inverse().unwrap();
        let prod = s.mul(&inv);
        assert!(prod.coeff(0).sub(&id).max_abs() < 1e-14);
        for k in 1..=5 {
            assert!(prod.coeff(k).max_abs() < 1e-13);
        }
    }
}
