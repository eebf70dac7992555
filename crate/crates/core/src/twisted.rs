//! Twisted super Yangian for the rational case (symmetric grading):
//! the folding matrix V, twisted double-row objects, boundary charges
//! spanning osp(m|2k), and the twisted Casimir.

use crate::error::{CoreError, Result};
use crate::grading::{Grading, Scheme};
use crate::operator::GradedOperator;
use crate::sample::{rational_excluded, Sampler};
use crate::series::OperatorSeries;
use crate::yangian::{monodromy_general, p_generator, r_rational_at, super_permutation_at};
use crate::{C64, CMat};

const I: C64 = C64::new(0.0, 1.0);

/// Anti-diagonal folding matrix V = Σ f_i e_{i,ī} with ī = m+2k+1−i and
/// f = (1,…,1 [m+k times], −1,…,−1 [k times]).
pub fn v_matrix(g: &Grading) -> Result<CMat> {
    if g.scheme() != Scheme::Symmetric {
        return Err(CoreError::InvalidBoundary(
            "twisted objects require the symmetric grading".into(),
        ));
    }
    let d = g.dim();
    let k = g.n() / 2;
    let mut v = CMat::zeros(d, d);
    for i in 0..d {
        let f = if i < g.m() + k { 1.0 } else { -1.0 };
        v[(i, d - 1 - i)] = C64::new(f, 0.0);
    }
    Ok(v)
}

/// Super-transposition of a single-space operator: x ↦ V⁻¹ xᵀ V.
pub fn site_super_transpose(x: &GradedOperator, v: &CMat) -> Result<GradedOperator> {
    x.super_transpose_space(0, v)
}

/// Twisted boundary generators q̄_ab = Δ⁽ᴺ⁾(𝕡_ab) − Δ⁽ᴺ⁾(𝕡_ab^{t}) with
/// the V-conjugated super-transposition applied site-wise.
pub fn twisted_charges(g: &Grading, n_sites: usize) -> Result<Vec<((usize, usize), GradedOperator)>> {
    let v = v_matrix(g)?;
    let d = g.dim();
    let mut out = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let p = p_generator(g, a, b);
            let folded = p.sub(&site_super_transpose(&p, &v)?);
            if folded.max_abs() < 1e-14 {
                continue;
            }
            let mut acc = GradedOperator::zeros(g, n_sites);
            for site in 0..n_sites {
                acc = acc.add(&GradedOperator::promote_one(&folded, site, n_sites));
            }
            out.push(((a, b), acc));
        }
    }
    Ok(out)
}

/// Expected dimension of osp(m|2k): m(m−1)/2 + k(2k+1) + 2mk.
pub fn osp_expected_dim(m: usize, k: usize) -> usize {
    m * (m - 1) / 2 + k * (2 * k + 1) + 2 * m * k
}

/// Rank of the span of the given operators (as flattened vectors).
pub fn span_rank_of(ops: &[GradedOperator]) -> usize {
    let vecs: Vec<Vec<C64>> = ops
        .iter()
        .map(|o| o.matrix().iter().copied().collect())
        .collect();
    crate::linalg::span_rank(&vecs, 1e-9)
}

/// Max distance of any super-commutator of two charges from the span of
/// the charges (closure residual). Operands must be homogeneous, which
/// holds for the folded generators.
pub fn closure_residual(charges: &[GradedOperator]) -> Result<f64> {
    let basis: Vec<Vec<C64>> = charges
        .iter()
        .map(|o| o.matrix().iter().copied().collect())
        .collect();
    let mut max = 0.0f64;
    for x in charges {
        for y in charges {
            let c = x.super_commutator(y)?;
            let target: Vec<C64> = c.matrix().iter().copied().collect();
            let dist = crate::linalg::span_distance(&basis, &target);
            let scale = 1f64.max(c.max_abs());
            max = max.max(dist / scale);
        }
    }
    Ok(max)
}

/// Which transpose enters T̂ = T^{t₀}(−λ−iρ).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistConvention {
    /// Plain graded transpose on the auxiliary space.
    PlainTranspose,
    /// V-conjugated super-transposition on the auxiliary space.
    VConjugated,
}

/// 𝕋̄(λ) = T(λ) K T^{t₀}(−λ−iρ) on spaces (0, 1..N), K = 𝕀.
pub fn twisted_double_row(
    lambda: C64,
    g: &Grading,
    n_sites: usize,
    conv: TwistConvention,
) -> Result<GradedOperator> {
    let total = n_sites + 1;
    let sites: Vec<usize> = (1..total).collect();
    let t = monodromy_general(lambda, 0, &sites, total, g);
    let arg = -lambda - I * g.rho();
    let t_shift = monodromy_general(arg, 0, &sites, total, g);
    let t_hat = match conv {
        TwistConvention::PlainTranspose => t_shift.transpose_t_space(0),
        TwistConvention::VConjugated => t_shift.super_transpose_space(0, &v_matrix(g)?)?,
    };
    Ok(t.mul(&t_hat))
}

/// Twisted transfer matrix t̄(λ) = str₀ 𝕋̄(λ) on the quantum spaces
/// (trivial left boundary K⁺ = 𝕀; with the V-conjugated transposition
/// no further dressing is needed, see the commutation tests).
pub fn twisted_transfer(
    lambda: C64,
    g: &Grading,
    n_sites: usize,
    conv: TwistConvention,
) -> Result<GradedOperator> {
    twisted_double_row(lambda, g, n_sites, conv)?.partial_super_trace_aux()
}

/// The projector entering R̄ for the twisted equation: Q = P^{t₁} with
/// the V-conjugated super-transposition on space 1.
pub fn projector_q_vconj(g: &Grading) -> Result<GradedOperator> {
    let v = v_matrix(g)?;
    super_permutation_at(g, 0, 1, 2).super_transpose_space(0, &v)
}

/// R̄(λ) = λ̄ + iQ_v with λ̄ = −λ − iρ, promoted to spaces (p,q).
pub fn r_bar_vconj_at(
    lambda: C64,
    g: &Grading,
    p: usize,
    q: usize,
    total: usize,
) -> Result<GradedOperator> {
    let lbar = -lambda - I * g.rho();
    let qv = GradedOperator::promote_two(&projector_q_vconj(g)?, p, q, total);
    Ok(GradedOperator::identity(g, total)
        .scale(lbar)
        .add(&qv.scale(I)))
}

/// Twisted reflection-equation residual for the dressed representation:
/// R₁₂(λ₁−λ₂) 𝕋̄₁(λ₁) R̄₁₂(λ₁+λ₂) 𝕋̄₂(λ₂)
///   = 𝕋̄₂(λ₂) R̄₁₂(λ₁+λ₂) 𝕋̄₁(λ₁) R₁₂(λ₁−λ₂).
pub fn twisted_re_residual(
    l1: C64,
    l2: C64,
    g: &Grading,
    n_sites: usize,
    conv: TwistConvention,
) -> Result<f64> {
    let total = n_sites + 2;
    let sites: Vec<usize> = (2..total).collect();
    let dressed = |lambda: C64, aux: usize| -> Result<GradedOperator> {
        let t = monodromy_general(lambda, aux, &sites, total, g);
        let arg = -lambda - I * g.rho();
        let t_shift = monodromy_general(arg, aux, &sites, total, g);
        let t_hat = match conv {
            TwistConvention::PlainTranspose => t_shift.transpose_t_space(aux),
            TwistConvention::VConjugated => t_shift.super_transpose_space(aux, &v_matrix(g)?)?,
        };
        Ok(t.mul(&t_hat))
    };
    let tb1 = dressed(l1, 0)?;
    let tb2 = dressed(l2, 1)?;
    let r_diff = r_rational_at(l1 - l2, g, 0, 1, total);
    let r_bar_sum = r_bar_vconj_at(l1 + l2, g, 0, 1, total)?;
    let lhs = r_diff.mul(&tb1).mul(&r_bar_sum).mul(&tb2);
    let rhs = tb2.mul(&r_bar_sum).mul(&tb1).mul(&r_diff);
    Ok(lhs.relative_residual(&rhs))
}

/// Normalized 1/λ expansion of 𝕋̄: T̃(λ)·T̃^{t₀}-shifted, with charges
/// 𝕢̄⁽⁰⁾ = −i c₁ − Nρ and 𝕢̄⁽¹⁾ = −c₂.
pub fn twisted_series(
    g: &Grading,
    n_sites: usize,
    order: usize,
    conv: TwistConvention,
) -> Result<OperatorSeries> {
    if order < 2 {
        return Err(CoreError::OrderTooSmall(order));
    }
    let total = n_sites + 1;
    let id = GradedOperator::identity(g, total);
    let mut t_series = OperatorSeries::constant(id.clone(), order);
    // T̂ factor: each site contributes L̂ ∝ 1 + (i/λ)(ρ − P^{t₀}) after
    // normalization of L^{t₀}(−λ−iρ) by −λ
    let mut t_hat_series = OperatorSeries::constant(id.clone(), order);
    let v = if conv == TwistConvention::VConjugated {
        Some(v_matrix(g)?)
    } else {
        None
    };
    for site in 1..total {
        let p = super_permutation_at(g, 0, site, total);
        let l = OperatorSeries::new(vec![id.clone(), p.scale(I)]).truncate(order);
        t_series = l.mul(&t_series);
        let pt = match &v {
            None => p.transpose_t_space(0),
            Some(v) => p.super_transpose_space(0, v)?,
        };
        let p_hat = id.scale(C64::new(g.rho(), 0.0)).sub(&pt);
        let l_hat = OperatorSeries::new(vec![id.clone(), p_hat.scale(I)]).truncate(order);
        // T^{t₀}(−λ−iρ) reverses the site order relative to T(λ)
        t_hat_series = t_hat_series.mul(&l_hat);
    }
    Ok(t_series.mul(&t_hat_series))
}

/// Max over sampled λ and all osp generators of ‖[t̄(λ), q̄_ab]‖, plus
/// the same maximum for a control generator outside the osp span.
pub fn twisted_symmetry_scan(
    g: &Grading,
    n_sites: usize,
    sampler: &mut Sampler,
    samples: usize,
) -> Result<(f64, f64)> {
    let charges = twisted_charges(g, n_sites)?;
    let excl = rational_excluded();
    let v = v_matrix(g)?;
    // control: a generator whose fold survives, i.e. Δ(𝕡_ab) alone for a
    // pair (a,b) with nonzero folded part
    let control_site = {
        let d = g.dim();
        let mut pick = None;
        for a in 0..d {
            for b in 0..d {
                let p = p_generator(g, a, b);
                if p.sub(&site_super_transpose(&p, &v)?).max_abs() > 0.5 {
                    pick = Some(p);
                }
            }
        }
        pick.expect("some generator folds nontrivially")
    };
    let mut control = GradedOperator::zeros(g, n_sites);
    for site in 0..n_sites {
        control = control.add(&GradedOperator::promote_one(&control_site, site, n_sites));
    }
    let mut max_preserved = 0.0f64;
    let mut max_control = 0.0f64;
    for _ in 0..samples {
        let l = sampler.lambda(&excl)?;
        let t = twisted_transfer(l, g, n_sites, TwistConvention::VConjugated)?;
        let norm = 1f64.max(t.max_abs());
        for (_, q) in &charges {
            max_preserved = max_preserved.max(t.commutator(q).max_abs() / norm);
        }
        max_control = max_control.max(t.commutator(&control).max_abs() / norm);
    }
    Ok((max_preserved, max_control))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_matrix_shape() {
        let g = Grading::symmetric(1, 2).unwrap();
        let v = v_matrix(&g).unwrap();
        // antidiag(1, 1, −1)
        assert_eq!(v[(0, 2)], C64::new(1.0, 0.0));
        assert_eq!(v[(1, 1)], C64::new(1.0, 0.0));
        assert_eq!(v[(2, 0)], C64::new(-1.0, 0.0));
        assert!(v_matrix(&Grading::distinguished(1, 2)).is_err());
    }

    #[test]
    fn osp_span_dimensions() {
        // gl(1|2) symmetric: osp(1|2), dim 5
        let g = Grading::symmetric(1, 2).unwrap();
        let charges = twisted_charges(&g, 1).unwrap();
        let ops: Vec<GradedOperator> = charges.into_iter().map(|(_, o)| o).collect();
        assert_eq!(span_rank_of(&ops), osp_expected_dim(1, 1));
        assert_eq!(osp_expected_dim(1, 1), 5);
        // gl(2|2) symmetric: osp(2|2), dim 8
        let g = Grading::symmetric(2, 2).unwrap();
        let charges = twisted_charges(&g, 1).unwrap();
        let ops: Vec<GradedOperator> = charges.into_iter().map(|(_, o)| o).collect();
        assert_eq!(span_rank_of(&ops), osp_expected_dim(2, 1));
        assert_eq!(osp_expected_dim(2, 1), 8);
    }

    #[test]
    fn osp_closure() {
        for (m, n) in [(1, 2), (2, 2)] {
            let g = Grading::symmetric(m, n).unwrap();
            let charges = twisted_charges(&g, 1).unwrap();
            let ops: Vec<GradedOperator> = charges.into_iter().map(|(_, o)| o).collect();
            let res = closure_residual(&ops).unwrap();
            assert!(res < 1e-10, "closure residual {res} for gl({m}|{n})");
        }
    }

    #[test]
    fn vconj_projector_identities() {
        // Q_v = P^{t₁} with the V-conjugated super-transposition:
        // Q_v² = 2ρ Q_v with ρ = (n−m)/2, and P Q_v = Q_v P = −Q_v.
        for (m, n) in [(1, 2), (2, 2)] {
            let g = Grading::symmetric(m, n).unwrap();
            let qv = projector_q_vconj(&g).unwrap();
            let q2 = qv.mul(&qv);
            assert!(q2.sub(&qv.scale(C64::new(2.0 * g.rho(), 0.0))).max_abs() < 1e-13);
            let p = super_permutation_at(&g, 0, 1, 2);
            assert!(p.mul(&qv).add(&qv).max_abs() < 1e-13);
            assert!(qv.mul(&p).add(&qv).max_abs() < 1e-13);
        }
    }

    #[test]
    fn twisted_reflection_equation() {
        let mut s = Sampler::new(77);
        for (m, n) in [(1, 2), (2, 2)] {
            let g = Grading::symmetric(m, n).unwrap();
            let (l1, l2) = s.lambda_pair(&rational_excluded()).unwrap();
            let res =
                twisted_re_residual(l1, l2, &g, 1, TwistConvention::VConjugated).unwrap();
            assert!(res < 1e-12, "twisted RE residual {res} for gl({m}|{n})");
        }
    }

    #[test]
    fn twisted_symmetry_and_negative_control() {
        let g = Grading::symmetric(1, 2).unwrap();
        let mut s = Sampler::new(78);
        // N=1: the twisted transfer matrix is scalar, every commutator
        // vanishes; the control only becomes meaningful at N ≥ 2
        let (preserved, _) = twisted_symmetry_scan(&g, 1, &mut s, 3).unwrap();
        assert!(preserved < 1e-11, "osp commutators {preserved}");
        let (preserved, control) = twisted_symmetry_scan(&g, 2, &mut s, 3).unwrap();
        assert!(preserved < 1e-11, "osp commutators at N=2 {preserved}");
        assert!(control > 1e-3, "control generator should break: {control}");
    }

    #[test]
    fn twisted_series_charges_and_casimir() {
        // N = 1: 𝕋̄̃ = 1 + (i/λ)(𝕢̄⁽⁰⁾ + ρ) − (1/λ²)𝕢̄⁽¹⁾ with
        // 𝕢̄⁽⁰⁾ = P − P^{t₀} and 𝕢̄⁽¹⁾ = P𝕡̂, 𝕡̂ = ρ − P^{t₀}.
        let g = Grading::symmetric(1, 2).unwrap();
        let series = twisted_series(&g, 1, 4, TwistConvention::VConjugated).unwrap();
        let v = v_matrix(&g).unwrap();
        let p = super_permutation_at(&g, 0, 1, 2);
        let pt = p.super_transpose_space(0, &v).unwrap();
        let id = GradedOperator::identity(&g, 2);
        let rho = C64::new(g.rho(), 0.0);
        let c1_expect = p.sub(&pt).add(&id.scale(rho)).scale(I);
        assert!(series.coeff(1).sub(&c1_expect).max_abs() < 1e-13);
        let p_hat = id.scale(rho).sub(&pt);
        let c2_expect = p.mul(&p_hat).neg();
        assert!(series.coeff(2).sub(&c2_expect).max_abs() < 1e-13);
        // the twisted Casimir str₀(𝕢̄⁽¹⁾) commutes with every osp generator
        let casimir = series.coeff(2).neg().partial_super_trace_aux().unwrap();
        for (_, q) in twisted_charges(&g, 1).unwrap() {
            assert!(casimir.commutator(&q).max_abs() < 1e-12);
        }
    }
}
