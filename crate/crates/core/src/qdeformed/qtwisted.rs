//! q-twisted Yangian (symmetric grading): the folding matrix V with
//! VᵀV = M, the twisted charges, their exchange relations, and the
//! documented expectation that they do not commute with the open
//! transfer matrix.

use crate::error::{CoreError, Result};
use crate::grading::{Grading, Scheme};
use crate::operator::GradedOperator;
use crate::qdeformed::charges::{identity_k, open_transfer_trig};
use crate::qdeformed::frt::assemble_l_operators;
use crate::qdeformed::rmatrix::{m_matrix, r_minus_at, r_plus_at, QParams};
use crate::{C64, CMat};

/// Folding matrix V = Σ f_i e_{i,ī} with f_i = η_i q^{x_ī/2}, where
/// η is the rational sign pattern (+1 on the first m+k antidiagonal
/// entries, −1 on the last k) and the q-weights are fixed by VᵀV = M.
pub fn v_matrix_q(qp: &QParams, g: &Grading) -> Result<CMat> {
    if g.scheme() != Scheme::Symmetric {
        return Err(CoreError::InvalidBoundary(
            "q-twisted objects require the symmetric grading".into(),
        ));
    }
    let d = g.dim();
    let k = g.n() / 2;
    let m = m_matrix(qp, g);
    let mut v = CMat::zeros(d, d);
    for i in 0..d {
        let bar = d - 1 - i;
        let eta = if i < g.m() + k { 1.0 } else { -1.0 };
        v[(i, bar)] = m[(bar, bar)].sqrt() * eta;
    }
    Ok(v)
}

/// Residual of VᵀV = M with the graded transpose.
pub fn vtv_minus_m_residual(qp: &QParams, g: &Grading) -> Result<f64> {
    let v = v_matrix_q(qp, g)?;
    let vt = GradedOperator::from_single(g, v.clone()).transpose_t();
    let m = m_matrix(qp, g);
    let prod = vt.matrix() * &v;
    Ok((prod - m).iter().map(|x| x.norm()).fold(0.0, f64::max))
}

/// Twisted boundary charge matrices 𝕋̄± = T± (T∓)^{t₀} with the
/// V-conjugated super-transposition on the auxiliary space.
pub struct QTwistedCharges {
    pub t_plus: GradedOperator,
    pub t_minus: GradedOperator,
}

pub fn q_twisted_charges(qp: &QParams, g: &Grading, n_sites: usize) -> Result<QTwistedCharges> {
    let v = v_matrix_q(qp, g)?;
    let ops = assemble_l_operators(qp, g)?;
    let total = n_sites + 1;
    let build = |l: &GradedOperator, l_opp: &GradedOperator| -> Result<GradedOperator> {
        let mut t = GradedOperator::identity(g, total);
        let mut t_opp = GradedOperator::identity(g, total);
        for site in 1..total {
            t = GradedOperator::promote_two(l, 0, site, total).mul(&t);
            t_opp = GradedOperator::promote_two(l_opp, 0, site, total).mul(&t_opp);
        }
        Ok(t.mul(&t_opp.super_transpose_space(0, &v)?))
    };
    Ok(QTwistedCharges {
        t_plus: build(&ops.l_plus, &ops.l_minus)?,
        t_minus: build(&ops.l_minus, &ops.l_plus)?,
    })
}

/// Exchange-relation residual for the twisted charges:
/// R±₁₂ 𝕋±₁ R̄±₂₁ 𝕋±₂ = 𝕋±₂ R̄±₁₂ 𝕋±₁ R±₂₁, with
/// R̄± the V-transposed braid limits.
pub fn q_twisted_exchange_residual(qp: &QParams, g: &Grading, n_sites: usize) -> Result<f64> {
    let v = v_matrix_q(qp, g)?;
    let ops = assemble_l_operators(qp, g)?;
    let total = n_sites + 2;
    let sites: Vec<usize> = (2..total).collect();
    let charge_at = |aux: usize,
                     l: &GradedOperator,
                     l_opp: &GradedOperator|
     -> Result<GradedOperator> {
        let mut t = GradedOperator::identity(g, total);
        let mut t_opp = GradedOperator::identity(g, total);
        for &site in &sites {
            t = GradedOperator::promote_two(l, aux, site, total).mul(&t);
            t_opp = GradedOperator::promote_two(l_opp, aux, site, total).mul(&t_opp);
        }
        Ok(t.mul(&t_opp.super_transpose_space(aux, &v)?))
    };
    let perm = crate::yangian::super_permutation_at(g, 0, 1, total);
    let mut max = 0.0f64;
    for (r12, r12_opp, l, l_opp) in [
        (
            r_plus_at(qp, g, 0, 1, total),
            r_minus_at(qp, g, 0, 1, total),
            &ops.l_plus,
            &ops.l_minus,
        ),
        (
            r_minus_at(qp, g, 0, 1, total),
            r_plus_at(qp, g, 0, 1, total),
            &ops.l_minus,
            &ops.l_plus,
        ),
    ] {
        let r21 = perm.mul(&r12).mul(&perm);
        // R̄₁₂(λ) = R₂₁^{t₁}(−λ−iρ): the bar flips which braid limit
        // enters, so R̄±₁₂ = (R∓₂₁)^{t₁} and R̄±₂₁ = (R∓₁₂)^{t₂}
        let r21_opp = perm.mul(&r12_opp).mul(&perm);
        let rbar12 = r21_opp.super_transpose_space(0, &v)?;
        let rbar21 = r12_opp.super_transpose_space(1, &v)?;
        let t1 = charge_at(0, l, l_opp)?;
        let t2 = charge_at(1, l, l_opp)?;
        let lhs = r12.mul(&t1).mul(&rbar21).mul(&t2);
        let rhs = t2.mul(&rbar12).mul(&t1).mul(&r21);
        max = max.max(lhs.relative_residual(&rhs));
    }
    Ok(max)
}

/// Maximum commutator of the twisted charges with the open transfer
/// matrix (K = 𝕀, K⁺ = M). The charges do not provide an exact symmetry;
/// callers treat a large value as the documented expectation.
pub fn q_twisted_transfer_commutator(
    qp: &QParams,
    g: &Grading,
    n_sites: usize,
    lambda: C64,
) -> Result<f64> {
    let charges = q_twisted_charges(qp, g, n_sites)?;
    let id = identity_k(g);
    let t = open_transfer_trig(lambda, |_| id.clone(), n_sites, qp, g)?;
    let mut max = 0.0f64;
    for tc in [&charges.t_plus, &charges.t_minus] {
        for row in crate::qdeformed::charges::charge_components(tc) {
            for comp in row {
                let norm = 1f64.max(t.max_abs()) * 1f64.max(comp.max_abs());
                max = max.max(t.commutator(&comp).max_abs() / norm);
            }
        }
    }
    Ok(max)
}
