//! Z₂ gradings of the defining space of gl(m|n).
//!
//! A grading assigns a parity [i] ∈ {0, 1} to each of the m+n basis
//! directions. Two orderings are supported: the distinguished one,
//! (0^m, 1^n), and the symmetric one, (0^k, 1^m, 0^k) for n = 2k.

use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};

/// Ordering scheme for the parity sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    Distinguished,
    Symmetric,
}

/// Immutable parity assignment for gl(m|n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    m: usize,
    n: usize,
    scheme: Scheme,
    parities: Vec<u8>,
}

impl Grading {
    /// Build the parity sequence for gl(m|n) in the requested scheme.
    ///
    /// The symmetric scheme requires n = 2k and places the m odd
    /// directions in the middle block: (0^k, 1^m, 0^k).
    pub fn new(m: usize, n: usize, scheme: Scheme) -> Result<Self> {
        assert!(m + n >= 1, "need at least one dimension");
        let parities = match scheme {
            Scheme::Distinguished => {
                let mut p = vec![0u8; m + n];
                for x in p.iter_mut().skip(m) {
                    *x = 1;
                }
                p
            }
            Scheme::Symmetric => {
                if n % 2 != 0 {
                    return Err(CoreError::SymmetricGradingOddN(n));
                }
                let k = n / 2;
                let mut p = vec![0u8; m + n];
                for x in p.iter_mut().skip(k).take(m) {
                    *x = 1;
                }
                p
            }
        };
        Ok(Self { m, n, scheme, parities })
    }

    pub fn distinguished(m: usize, n: usize) -> Self {
        Self::new(m, n, Scheme::Distinguished).expect("distinguished grading is always valid")
    }

    pub fn symmetric(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, Scheme::Symmetric)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    /// Dimension of the defining space, m + n.
    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Parity of basis direction `i` (0-based).
    pub fn parity(&self, i: usize) -> u8 {
        self.parities[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    /// ρ = (n − m)/2.
    pub fn rho(&self) -> f64 {
        (self.n as f64 - self.m as f64) / 2.0
    }

    /// Graded dimension Σᵢ (−1)^{[i]} = super-trace of the identity.
    ///
    /// Equals m − n in the distinguished scheme and n − m in the
    /// symmetric one (the symmetric parity sequence has m odd entries).
    pub fn super_dim(&self) -> i64 {
        self.parities
            .iter()
            .map(|&p| if p == 0 { 1i64 } else { -1i64 })
            .sum()
    }

    /// Sign (−1)^{[i]} as a real scalar.
    pub fn sign(&self, i: usize) -> f64 {
        if self.parities[i] == 0 {
            1.0
        } else {
            -1.0
        }
    }
}
