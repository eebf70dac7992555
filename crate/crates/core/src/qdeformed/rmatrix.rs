//! Trigonometric R-matrix of U_q(gl(m|n)), its constant braid limits
//! R±, and the diagonal M-matrix entering open transfer matrices.

use crate::grading::Grading;
use crate::operator::GradedOperator;
use crate::{C64, CMat};

const I: C64 = C64::new(0.0, 1.0);

/// Deformation parameter μ with q = e^{iμ}.
#[derive(Clone, Copy, Debug)]
pub struct QParams {
    pub mu: C64,
}

impl QParams {
    pub fn new(mu: C64) -> Self {
        Self { mu }
    }

    /// Default deformation 0.3 + 0.1i (complex μ avoids resonances).
    pub fn default_mu() -> Self {
        Self {
            mu: C64::new(0.3, 0.1),
        }
    }

    pub fn q(&self) -> C64 {
        (I * self.mu).exp()
    }

    pub fn q_pow(&self, e: f64) -> C64 {
        (I * self.mu * e).exp()
    }

    /// True when q^j is farther than 1e−3 from 1 for all j ≤ 8.
    pub fn avoids_small_roots_of_unity(&self) -> bool {
        let q = self.q();
        let mut p = C64::new(1.0, 0.0);
        for _ in 0..8 {
            p *= q;
            if (p - C64::new(1.0, 0.0)).norm() <= 1e-3 {
                return false;
            }
        }
        true
    }
}

/// Entry functions of the trigonometric R-matrix.
pub fn a_entry(lambda: C64, j: usize, qp: &QParams, g: &Grading) -> C64 {
    (lambda + I * qp.mu - I * qp.mu * (2.0 * g.parity(j) as f64)).sinh()
}

pub fn b_entry(lambda: C64) -> C64 {
    lambda.sinh()
}

pub fn c_entry(lambda: C64, i: usize, j: usize, qp: &QParams, g: &Grading) -> C64 {
    assert_ne!(i, j);
    let sgn = if j > i { 1.0 } else { -1.0 };
    (I * qp.mu).sinh() * (lambda * sgn).exp() * g.sign(j)
}

/// R(λ) = Σ a_i e_ii⊗e_ii + b Σ_{i≠j} e_ii⊗e_jj + Σ_{i≠j} c_ij e_ij⊗e_ji
/// on spaces (p, q) of `total`, with graded embedding.
pub fn r_trig_at(
    lambda: C64,
    qp: &QParams,
    g: &Grading,
    p: usize,
    q: usize,
    total: usize,
) -> GradedOperator {
    let d = g.dim();
    let mut out = GradedOperator::zeros(g, total);
    for i in 0..d {
        out.add_units_scaled(a_entry(lambda, i, qp, g), &[(p, i, i), (q, i, i)]);
    }
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            out.add_units_scaled(b_entry(lambda), &[(p, i, i), (q, j, j)]);
            out.add_units_scaled(c_entry(lambda, i, j, qp, g), &[(p, i, j), (q, j, i)]);
        }
    }
    out
}

pub fn r_trig(lambda: C64, qp: &QParams, g: &Grading) -> GradedOperator {
    r_trig_at(lambda, qp, g, 0, 1, 2)
}

/// R₂₁(λ) = P R₁₂(λ) P on spaces (p, q), with the super-permutation.
/// Note this differs from naively swapping the construction indices by
/// (−1)^{[i]+[j]} on the odd exchange entries.
pub fn r21_trig_at(
    lambda: C64,
    qp: &QParams,
    g: &Grading,
    p: usize,
    q: usize,
    total: usize,
) -> GradedOperator {
    let perm = crate::yangian::super_permutation_at(g, p, q, total);
    perm.mul(&r_trig_at(lambda, qp, g, p, q, total)).mul(&perm)
}

/// Constant braid limits R± = lim_{λ→±∞} 2 e^{∓λ} R(λ), assembled from
/// the analytic limits of each entry.
pub fn r_plus_at(qp: &QParams, g: &Grading, p: usize, q: usize, total: usize) -> GradedOperator {
    let d = g.dim();
    let qm = qp.q() - qp.q_pow(-1.0);
    let mut out = GradedOperator::zeros(g, total);
    for i in 0..d {
        // 2e^{−λ} sinh(λ + iμ(1−2[i])) → q^{1−2[i]}
        out.add_units_scaled(qp.q_pow(1.0 - 2.0 * g.parity(i) as f64), &[(p, i, i), (q, i, i)]);
    }
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            out.add_units_scaled(C64::new(1.0, 0.0), &[(p, i, i), (q, j, j)]);
            if j > i {
                // c-entries survive only on the upper side
                out.add_units_scaled(qm * g.sign(j), &[(p, i, j), (q, j, i)]);
            }
        }
    }
    out
}

pub fn r_minus_at(qp: &QParams, g: &Grading, p: usize, q: usize, total: usize) -> GradedOperator {
    let d = g.dim();
    let qm = qp.q() - qp.q_pow(-1.0);
    let mut out = GradedOperator::zeros(g, total);
    for i in 0..d {
        // 2e^{+λ} sinh(λ + iμ(1−2[i])) → −q^{−(1−2[i])}
        out.add_units_scaled(
            -qp.q_pow(-(1.0 - 2.0 * g.parity(i) as f64)),
            &[(p, i, i), (q, i, i)],
        );
    }
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            out.add_units_scaled(C64::new(-1.0, 0.0), &[(p, i, i), (q, j, j)]);
            if j < i {
                out.add_units_scaled(qm * g.sign(j), &[(p, i, j), (q, j, i)]);
            }
        }
    }
    out
}

pub fn r_plus(qp: &QParams, g: &Grading) -> GradedOperator {
    r_plus_at(qp, g, 0, 1, 2)
}

pub fn r_minus(qp: &QParams, g: &Grading) -> GradedOperator {
    r_minus_at(qp, g, 0, 1, 2)
}

/// Trivial left boundary M = Σ_k q^{n+m−2k+1} q^{−2[k]+4Σ_{i≤k}[i]} e_kk
/// (1-based k in the formula).
pub fn m_matrix(qp: &QParams, g: &Grading) -> CMat {
    let d = g.dim();
    let mut m = CMat::zeros(d, d);
    let mut parity_sum = 0.0;
    for k in 0..d {
        parity_sum += g.parity(k) as f64;
        let e1 = (g.n() as f64 + g.m() as f64) - 2.0 * (k + 1) as f64 + 1.0;
        let e2 = -2.0 * g.parity(k) as f64 + 4.0 * parity_sum;
        m[(k, k)] = qp.q_pow(e1 + e2);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yangian::ybe_residual;

    #[test]
    fn entry_conventions() {
        let g = Grading::distinguished(1, 1);
        let qp = QParams::default_mu();
        // bosonic j: a_j(λ) = sinh(λ+iμ); fermionic j: sinh(λ−iμ)
        let l = C64::new(0.4, -0.2);
        assert!((a_entry(l, 0, &qp, &g) - (l + I * qp.mu).sinh()).norm() < 1e-15);
        assert!((a_entry(l, 1, &qp, &g) - (l - I * qp.mu).sinh()).norm() < 1e-15);
        // c_ij(0) = sinh(iμ)(−1)^{[j]}
        let c0 = c_entry(C64::new(0.0, 0.0), 0, 1, &qp, &g);
        assert!((c0 + (I * qp.mu).sinh()).norm() < 1e-15);
    }

    #[test]
    fn trig_ybe() {
        let qp = QParams::new(C64::new(0.3, 0.1));
        for g in [
            Grading::distinguished(1, 1),
            Grading::distinguished(2, 1),
            Grading::distinguished(1, 2),
            Grading::distinguished(2, 2),
        ] {
            let l1 = C64::new(0.7, 0.3);
            let l2 = C64::new(-1.1, 0.2);
            let res = ybe_residual(|l, p, q, t| r_trig_at(l, &qp, &g, p, q, t), l1, l2);
            assert!(res < 1e-12, "trig YBE residual {res}");
        }
    }

    #[test]
    fn braid_limits_match_numeric() {
        let g = Grading::distinguished(2, 1);
        let qp = QParams::default_mu();
        let lam = C64::new(20.0, 0.0);
        let rp = r_plus(&qp, &g);
        let numeric = r_trig(lam, &qp, &g).scale(C64::new(2.0, 0.0) * (-lam).exp());
        assert!(rp.relative_residual(&numeric) < 1e-8);
        let rm = r_minus(&qp, &g);
        let numeric = r_trig(-lam, &qp, &g).scale(C64::new(2.0, 0.0) * (-lam).exp());
        assert!(rm.relative_residual(&numeric) < 1e-8);
    }

    #[test]
    fn m_matrix_values() {
        let qp = QParams::default_mu();
        // gl(1|1): M = q·I
        let g = Grading::distinguished(1, 1);
        let m = m_matrix(&qp, &g);
        let q = qp.q();
        assert!((m[(0, 0)] - q).norm() < 1e-14);
        assert!((m[(1, 1)] - q).norm() < 1e-14);
        // gl(2|1): M = diag(q², 1, 1)
        let g = Grading::distinguished(2, 1);
        let m = m_matrix(&qp, &g);
        assert!((m[(0, 0)] - q * q).norm() < 1e-14);
        assert!((m[(1, 1)] - C64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((m[(2, 2)] - C64::new(1.0, 0.0)).norm() < 1e-14);
        // q → 1 limit: M → I
        let qp1 = QParams::new(C64::new(1e-9, 0.0));
        let m = m_matrix(&qp1, &g);
        for k in 0..3 {
            assert!((m[(k, k)] - C64::new(1.0, 0.0)).norm() < 1e-7);
        }
    }
}
