//! Boundary K-matrices for the trigonometric chain: the two-block
//! diagonal family and the non-diagonal catalog (symmetric /
//! distinguished diagrams, bosonic / fermionic sectors), together with
//! the numerical determination of the c_a·c_ā constraint.

use crate::error::{CoreError, Result};
use crate::grading::{Grading, Scheme};
use crate::operator::GradedOperator;
use crate::qdeformed::rmatrix::{r21_trig_at, r_trig_at, QParams};
use crate::sample::Sampler;
use crate::{C64, CMat};

const I: C64 = C64::new(0.0, 1.0);

/// Diagonal two-block boundary:
/// K = diag(a(λ)·1_α, b(λ)·1_{d−α}) with
/// a(λ) = e^{2λ}·w − z, b(λ) = e^{−2λ}·w − z,
/// w = cosh(iμ m_b), z = cosh(2iμζ).
#[derive(Clone, Debug)]
pub struct DiagBoundary {
    pub alpha: usize,
    pub m_b: f64,
    pub zeta: C64,
}

impl DiagBoundary {
    pub fn new(alpha: usize, m_b: f64, zeta: C64) -> Self {
        Self { alpha, m_b, zeta }
    }

    pub fn k_at(&self, lambda: C64, qp: &QParams, g: &Grading) -> CMat {
        let d = g.dim();
        assert!(self.alpha <= d);
        let w = (I * qp.mu * self.m_b).cosh();
        let z = (I * qp.mu * self.zeta * 2.0).cosh();
        let a = (lambda * 2.0).exp() * w - z;
        let b = (-lambda * 2.0).exp() * w - z;
        CMat::from_fn(d, d, |r, c| {
            if r != c {
                C64::new(0.0, 0.0)
            } else if r < self.alpha {
                a
            } else {
                b
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diagram {
    Symmetric,
    Distinguished,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sector {
    Bosonic,
    Fermionic,
}

/// Non-diagonal boundary family: paired indices a ≤ L carry
/// e^{±2λ}-split diagonal entries and anti-diagonal entries
/// i c_a sinh 2λ; the remaining indices carry the bulk diagonal
/// cosh(2λ + i m_b μ) − cosh(2iμζ).
#[derive(Clone, Debug)]
pub struct NonDiagBoundary {
    pub diagram: Diagram,
    pub sector: Sector,
    /// Pair cutoff L (1-based, as in the catalog).
    pub l_cut: usize,
    pub m_b: f64,
    pub zeta: C64,
}

impl NonDiagBoundary {
    /// Conjugate index ā (0-based in and out).
    pub fn conjugate(&self, a: usize, g: &Grading) -> usize {
        let d = g.dim();
        let m = g.m();
        match self.diagram {
            Diagram::Symmetric => d - 1 - a,
            Diagram::Distinguished => {
                if g.parity(a) == 0 {
                    m - 1 - a
                } else {
                    // 2m + n + 1 − a in 1-based labels
                    2 * m + g.n() - 1 - a
                }
            }
        }
    }

    /// 1-based list of paired indices a = first_pair..=L.
    pub fn paired_indices(&self, g: &Grading) -> Result<Vec<usize>> {
        let m = g.m();
        let n = g.n();
        let d = g.dim();
        match (self.diagram, self.sector) {
            (Diagram::Symmetric, _) => {
                if g.scheme() != Scheme::Symmetric {
                    return Err(CoreError::InvalidBoundary(
                        "symmetric-diagram boundary requires the symmetric grading".into(),
                    ));
                }
                if self.l_cut < 1 || 2 * self.l_cut > d {
                    return Err(CoreError::InvalidBoundary(format!(
                        "symmetric family needs 1 ≤ L ≤ {}",
                        d / 2
                    )));
                }
                Ok((1..=self.l_cut).collect())
            }
            (Diagram::Distinguished, Sector::Bosonic) => {
                if g.scheme() != Scheme::Distinguished {
                    return Err(CoreError::InvalidBoundary(
                        "distinguished-diagram boundary requires the distinguished grading".into(),
                    ));
                }
                if self.l_cut < 1 || 2 * self.l_cut > m {
                    return Err(CoreError::InvalidBoundary(format!(
                        "bosonic family needs 1 ≤ L ≤ {}",
                        m / 2
                    )));
                }
                Ok((1..=self.l_cut).collect())
            }
            (Diagram::Distinguished, Sector::Fermionic) => {
                if g.scheme() != Scheme::Distinguished {
                    return Err(CoreError::InvalidBoundary(
                        "distinguished-diagram boundary requires the distinguished grading".into(),
                    ));
                }
                if self.l_cut <= m || 2 * (self.l_cut - m) > n {
                    return Err(CoreError::InvalidBoundary(format!(
                        "fermionic family needs m+1 ≤ L ≤ m + {}",
                        n / 2
                    )));
                }
                Ok((m + 1..=self.l_cut).collect())
            }
        }
    }

    /// Assemble K(λ) given the anti-diagonal coefficients c_a = c_ā = s_p
    /// per pair (one entry of `c` per paired index, in order).
    pub fn k_at(&self, lambda: C64, c: &[C64], qp: &QParams, g: &Grading) -> Result<CMat> {
        let d = g.dim();
        let pairs = self.paired_indices(g)?;
        assert_eq!(c.len(), pairs.len());
        let w = (I * qp.mu * self.m_b).cosh();
        let z = (I * qp.mu * self.zeta * 2.0).cosh();
        let bulk = (lambda * 2.0 + I * qp.mu * self.m_b).cosh() - z;
        let mut k = CMat::from_fn(d, d, |r, cc| {
            if r == cc {
                bulk
            } else {
                C64::new(0.0, 0.0)
            }
        });
        let e2 = (lambda * 2.0).exp();
        let s2 = (lambda * 2.0).sinh();
        for (idx, &a1) in pairs.iter().enumerate() {
            let a = a1 - 1; // 0-based
            let ab = self.conjugate(a, g);
            k[(a, a)] = e2 * w - z;
            k[(ab, ab)] = w / e2 - z;
            k[(a, ab)] = I * c[idx] * s2;
            k[(ab, a)] = I * c[idx] * s2;
        }
        Ok(k)
    }
}

/// C-number reflection-equation residual for the trigonometric R:
/// R₁₂(λ₁−λ₂) K₁(λ₁) R₂₁(λ₁+λ₂) K₂(λ₂) −
/// K₂(λ₂) R₁₂(λ₁+λ₂) K₁(λ₁) R₂₁(λ₁−λ₂), as a raw matrix.
pub fn trig_re_matrix<F>(l1: C64, l2: C64, k_fn: F, qp: &QParams, g: &Grading) -> GradedOperator
where
    F: Fn(C64) -> CMat,
{
    let k1 = |l: C64| GradedOperator::promote_one(&GradedOperator::from_single(g, k_fn(l)), 0, 2);
    let k2 = |l: C64| GradedOperator::promote_one(&GradedOperator::from_single(g, k_fn(l)), 1, 2);
    let r12d = r_trig_at(l1 - l2, qp, g, 0, 1, 2);
    let r12s = r_trig_at(l1 + l2, qp, g, 0, 1, 2);
    let r21d = r21_trig_at(l1 - l2, qp, g, 0, 1, 2);
    let r21s = r21_trig_at(l1 + l2, qp, g, 0, 1, 2);
    let lhs = r12d.mul(&k1(l1)).mul(&r21s).mul(&k2(l2));
    let rhs = k2(l2).mul(&r12s).mul(&k1(l1)).mul(&r21d);
    lhs.sub(&rhs)
}

pub fn trig_re_residual<F>(l1: C64, l2: C64, k_fn: F, qp: &QParams, g: &Grading) -> f64
where
    F: Fn(C64) -> CMat,
{
    let k1 = |l: C64| GradedOperator::promote_one(&GradedOperator::from_single(g, k_fn(l)), 0, 2);
    let r12d = r_trig_at(l1 - l2, qp, g, 0, 1, 2);
    let scale = 1f64
        .max(r12d.max_abs())
        .max(k1(l1).max_abs())
        .max(k1(l2).max_abs());
    trig_re_matrix(l1, l2, k_fn, qp, g).max_abs() / (scale * scale)
}

/// Result of fitting the anti-diagonal products of a non-diagonal family.
#[derive(Clone, Debug)]
pub struct CFit {
    /// Fitted coefficient s per pair (c_a = c_ā = s, product p = s²).
    pub s: Vec<C64>,
    /// Products p_a = c_a c_ā.
    pub products: Vec<C64>,
    /// Reflection-equation residual at the fitted values (fit samples).
    pub residual: f64,
    /// Residual on held-out validation samples.
    pub validation_residual: f64,
}

/// Fit the per-pair coefficients by exact quadratic interpolation of the
/// reflection-equation matrix in each s (the RE is quadratic in K and K
/// is linear in each s), sweeping pairs until self-consistent.
pub fn solve_c_constraint(
    ndb: &NonDiagBoundary,
    qp: &QParams,
    g: &Grading,
    sampler: &mut Sampler,
) -> Result<CFit> {
    let pairs = ndb.paired_indices(g)?;
    let n_pairs = pairs.len();
    let excl = crate::sample::trig_excluded(qp.mu);
    let fit_points: Vec<(C64, C64)> = (0..3)
        .map(|_| sampler.lambda_pair(&excl))
        .collect::<Result<_>>()?;
    let val_points: Vec<(C64, C64)> = (0..3)
        .map(|_| sampler.lambda_pair(&excl))
        .collect::<Result<_>>()?;

    let residual_mats = |c: &[C64], pts: &[(C64, C64)]| -> Result<Vec<GradedOperator>> {
        pts.iter()
            .map(|&(l1, l2)| {
                let k = |l: C64| ndb.k_at(l, c, qp, g).expect("validated family");
                Ok(trig_re_matrix(l1, l2, k, qp, g))
            })
            .collect()
    };
    let total_norm = |mats: &[GradedOperator]| -> f64 {
        mats.iter().map(|m| m.max_abs()).fold(0.0, f64::max)
    };
    // normalization scale for relative residuals
    let scale = {
        let (l1, l2) = fit_points[0];
        let k = ndb.k_at(l1, &vec![C64::new(0.0, 0.0); n_pairs], qp, g)?;
        let kn = k.iter().map(|v| v.norm()).fold(0.0, f64::max).max(1.0);
        let rn = r_trig_at(l1 - l2, qp, g, 0, 1, 2).max_abs().max(1.0);
        kn * kn * rn * rn
    };

    let mut s = vec![C64::new(1.0, 0.0); n_pairs];
    for _ in 0..40 {
        let mut moved = 0.0f64;
        for p in 0..n_pairs {
            // quadratic in s_p: evaluate at 0, 1, −1 and interpolate
            let mut probe = s.clone();
            probe[p] = C64::new(0.0, 0.0);
            let r0 = residual_mats(&probe, &fit_points)?;
            probe[p] = C64::new(1.0, 0.0);
            let r1 = residual_mats(&probe, &fit_points)?;
            probe[p] = C64::new(-1.0, 0.0);
            let rm = residual_mats(&probe, &fit_points)?;
            // per-entry coefficients A + B s + C s²
            let mut best: Option<(C64, f64)> = None;
            let mut candidates: Vec<C64> = Vec::new();
            for (m0, (m1, mm)) in r0.iter().zip(r1.iter().zip(rm.iter())) {
                for r in 0..m0.dim() {
                    for c in 0..m0.dim() {
                        let a = m0.matrix()[(r, c)];
                        let b = (m1.matrix()[(r, c)] - mm.matrix()[(r, c)]) * 0.5;
                        let cc =
                            (m1.matrix()[(r, c)] + mm.matrix()[(r, c)]) * 0.5 - a;
                        if cc.norm() > 1e-8 {
                            let disc = (b * b - a * cc * 4.0).sqrt();
                            candidates.push((-b + disc) / (cc * 2.0));
                            candidates.push((-b - disc) / (cc * 2.0));
                        } else if b.norm() > 1e-8 {
                            candidates.push(-a / b);
                        }
                    }
                }
            }
            candidates.push(s[p]);
            for cand in candidates {
                if !cand.re.is_finite() || !cand.im.is_finite() {
                    continue;
                }
                let mut trial = s.clone();
                trial[p] = cand;
                let res = total_norm(&residual_mats(&trial, &fit_points)?);
                if best.map_or(true, |(_, r)| res < r) {
                    best = Some((cand, res));
                }
            }
            if let Some((cand, _)) = best {
                moved = moved.max((cand - s[p]).norm());
                s[p] = cand;
            }
        }
        if moved < 1e-13 {
            break;
        }
    }
    let residual = total_norm(&residual_mats(&s, &fit_points)?) / scale;
    let validation_residual = total_norm(&residual_mats(&s, &val_points)?) / scale;
    if residual > 1e-6 {
        return Err(CoreError::InvalidBoundary(format!(
            "family inconsistent at these parameters (residual {residual:.3e})"
        )));
    }
    Ok(CFit {
        products: s.iter().map(|v| v * v).collect(),
        s,
        residual,
        validation_residual,
    })
}
