//! Rational R-matrix of the super Yangian of gl(m|n), the RTT relation,
//! coproducts and the generator algebra in the fundamental representation.

use crate::error::Result;
use crate::grading::{Grading, Scheme};
use crate::operator::GradedOperator;
use crate::C64;

const I: C64 = C64::new(0.0, 1.0);

/// Super-permutation P = Σ_{ij} (−1)^{[j]} e_ij ⊗ e_ji on two spaces.
pub fn super_permutation(g: &Grading) -> GradedOperator {
    super_permutation_at(g, 0, 1, 2)
}

/// Super-permutation acting on spaces (p, q) of `total`.
pub fn super_permutation_at(g: &Grading, p: usize, q: usize, total: usize) -> GradedOperator {
    let d = g.dim();
    let mut out = GradedOperator::zeros(g, total);
    for i in 0..d {
        for j in 0..d {
            out.add_units_scaled(C64::new(g.sign(j), 0.0), &[(p, i, j), (q, j, i)]);
        }
    }
    out
}

/// Rational R-matrix R(λ) = λ + iP on two spaces.
pub fn r_rational(lambda: C64, g: &Grading) -> GradedOperator {
    r_rational_at(lambda, g, 0, 1, 2)
}

/// Rational R-matrix on spaces (p, q) of `total`.
pub fn r_rational_at(lambda: C64, g: &Grading, p: usize, q: usize, total: usize) -> GradedOperator {
    GradedOperator::identity(g, total)
        .scale(lambda)
        .add(&super_permutation_at(g, p, q, total).scale(I))
}

/// The projector entering R̄: the graded partial transpose of P on the
/// first space, signed so that Q² = 2ρQ holds with ρ = (n−m)/2.
///
/// The sign is scheme dependent because the graded dimension
/// Σ (−1)^{[i]} equals m−n in the distinguished ordering but n−m in the
/// symmetric one.
pub fn projector_q(g: &Grading) -> GradedOperator {
    let q0 = super_permutation(g).transpose_t_space(0);
    match g.scheme() {
        Scheme::Distinguished => q0.neg(),
        Scheme::Symmetric => q0,
    }
}

/// R̄(λ) = λ̄ + iQ with λ̄ = −λ − iρ.
pub fn r_bar(lambda: C64, g: &Grading) -> GradedOperator {
    let lbar = -lambda - I * g.rho();
    GradedOperator::identity(g, 2)
        .scale(lbar)
        .add(&projector_q(g).scale(I))
}

/// Monodromy T(λ) = R_{0N}(λ)⋯R_{01}(λ) on spaces (0, 1..N).
pub fn monodromy(lambda: C64, n_sites: usize, g: &Grading) -> GradedOperator {
    assert!(n_sites >= 1);
    monodromy_general(lambda, 0, &(1..=n_sites).collect::<Vec<_>>(), n_sites + 1, g)
}

/// Monodromy over the given quantum positions sharing auxiliary space
/// `aux`, ordered as R_{aux,sites[last]}⋯R_{aux,sites[0]}.
pub fn monodromy_general(
    lambda: C64,
    aux: usize,
    sites: &[usize],
    total: usize,
    g: &Grading,
) -> GradedOperator {
    let mut acc = GradedOperator::identity(g, total);
    for &site in sites {
        // left-multiply so the highest site index ends up leftmost
        acc = r_rational_at(lambda, g, aux, site, total).mul(&acc);
    }
    acc
}

/// Graded Yang–Baxter residual for an R-matrix builder on three spaces:
/// ‖R₁₂(λ₁−λ₂)R₁₃(λ₁)R₂₃(λ₂) − R₂₃(λ₂)R₁₃(λ₁)R₁₂(λ₁−λ₂)‖ (relative).
pub fn ybe_residual<F>(r_at: F, l1: C64, l2: C64) -> f64
where
    F: Fn(C64, usize, usize, usize) -> GradedOperator,
{
    let r12 = r_at(l1 - l2, 0, 1, 3);
    let r13 = r_at(l1, 0, 2, 3);
    let r23 = r_at(l2, 1, 2, 3);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    lhs.relative_residual(&rhs)
}

/// RTT residual at N sites:
/// ‖R₁₂(λ₁−λ₂)T₁(λ₁)T₂(λ₂) − T₂(λ₂)T₁(λ₁)R₁₂(λ₁−λ₂)‖ (relative),
/// with the two auxiliary spaces at positions 0, 1 and quantum 2..N+1.
pub fn rtt_residual(l1: C64, l2: C64, n_sites: usize, g: &Grading) -> f64 {
    let total = n_sites + 2;
    let sites: Vec<usize> = (2..total).collect();
    let r12 = r_rational_at(l1 - l2, g, 0, 1, total);
    let t1 = monodromy_general(l1, 0, &sites, total, g);
    let t2 = monodromy_general(l2, 1, &sites, total, g);
    let lhs = r12.mul(&t1).mul(&t2);
    let rhs = t2.mul(&t1).mul(&r12);
    lhs.relative_residual(&rhs)
}

/// Fundamental gl(m|n) generator π(𝕡_ab) = P_ab = (−1)^{[b]} e_ab.
pub fn p_generator(g: &Grading, a: usize, b: usize) -> GradedOperator {
    GradedOperator::unit(g, a, b).scale(C64::new(g.sign(b), 0.0))
}

/// N-site coproducts of the gl(m|n) generators:
/// Δ⁽ᴺ⁾(𝕡_ab) = Σ_k 𝕀⊗…⊗P_ab⊗…⊗𝕀 with graded embedding.
pub struct GeneratorSet {
    pub grading: Grading,
    pub n_sites: usize,
    /// ops[a][b] = Δ⁽ᴺ⁾(𝕡_ab)
    pub ops: Vec<Vec<GradedOperator>>,
}

pub fn coproduct_generators(n_sites: usize, g: &Grading) -> GeneratorSet {
    let d = g.dim();
    let mut ops = Vec::with_capacity(d);
    for a in 0..d {
        let mut row = Vec::with_capacity(d);
        for b in 0..d {
            let mut acc = GradedOperator::zeros(g, n_sites);
            let sign = C64::new(g.sign(b), 0.0);
            for k in 0..n_sites {
                acc.add_units_scaled(sign, &[(k, a, b)]);
            }
            row.push(acc);
        }
        ops.push(row);
    }
    GeneratorSet {
        grading: g.clone(),
        n_sites,
        ops,
    }
}

/// Maximum residual of the gl(m|n) relations over all index tuples:
/// [𝕡_ij, 𝕡_kl} = δ_jk (−1)^{[j]} 𝕡_il − δ_li (−1)^{[l]+([i]+[j])([k]+[l])} 𝕡_kj.
///
/// This is the form the fundamental representation satisfies; it
/// reduces to [𝕡_ij, 𝕡_kl} = 0 for disjoint indices.
pub fn check_gl_relations(gens: &GeneratorSet) -> Result<f64> {
    let g = &gens.grading;
    let d = g.dim();
    let mut max = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let lhs = gens.ops[i][j].super_commutator(&gens.ops[k][l])?;
                    let mut rhs = GradedOperator::zeros(g, gens.n_sites);
                    if j == k {
                        rhs = rhs.add(&gens.ops[i][l].scale(C64::new(g.sign(j), 0.0)));
                    }
                    if l == i {
                        let e = g.parity(l)
                            ^ ((g.parity(i) ^ g.parity(j)) & (g.parity(k) ^ g.parity(l)));
                        let s = if e == 1 { -1.0 } else { 1.0 };
                        rhs = rhs.sub(&gens.ops[k][j].scale(C64::new(s, 0.0)));
                    }
                    max = max.max(lhs.sub(&rhs).max_abs());
                }
            }
        }
    }
    Ok(max)
}

/// Residual of Δ′ = Π∘Δ on the L-operator at two sites: compares
/// L₀₁(λ)L₀₂(λ) against P₁₂ L₀₂(λ)L₀₁(λ) P₁₂.
pub fn opposite_coproduct_residual(lambda: C64, g: &Grading) -> f64 {
    let l01 = r_rational_at(lambda, g, 0, 1, 3);
    let l02 = r_rational_at(lambda, g, 0, 2, 3);
    let p12 = super_permutation_at(g, 1, 2, 3);
    let delta_op = l01.mul(&l02);
    let delta = l02.mul(&l01);
    let conj = p12.mul(&delta).mul(&p12);
    delta_op.relative_residual(&conj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{rational_excluded, Sampler};

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn permutation_entries_gl11() {
        let g = Grading::distinguished(1, 1);
        let p = super_permutation(&g);
        // units at ((1,1),(1,1))=1, ((1,2),(2,1))=1, ((2,1),(1,2))=1,
        // ((2,2),(2,2))=−1
        assert_eq!(p.matrix()[(0, 0)], c(1.0));
        assert_eq!(p.matrix()[(1, 2)], c(1.0));
        assert_eq!(p.matrix()[(2, 1)], c(1.0));
        assert_eq!(p.matrix()[(3, 3)], c(-1.0));
        let nonzero = p.matrix().iter().filter(|v| v.norm() > 0.0).count();
        assert_eq!(nonzero, 4);
    }

    #[test]
    fn permutation_squares_to_identity() {
        for g in [
            Grading::distinguished(1, 1),
            Grading::distinguished(2, 1),
            Grading::distinguished(2, 2),
            Grading::distinguished(2, 0),
        ] {
            let p = super_permutation(&g);
            let id = GradedOperator::identity(&g, 2);
            assert!(p.mul(&p).sub(&id).max_abs() == 0.0);
        }
    }

    #[test]
    fn bosonic_permutation_is_plain() {
        let g = Grading::distinguished(2, 0);
        let p = super_permutation(&g);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(p.matrix()[(i * 2 + j, j * 2 + i)], c(1.0));
            }
        }
    }

    #[test]
    fn r_at_zero_is_ip() {
        let g = Grading::distinguished(2, 1);
        let r0 = r_rational(C64::new(0.0, 0.0), &g);
        let ip = super_permutation(&g).scale(I);
        assert!(r0.sub(&ip).max_abs() == 0.0);
    }

    #[test]
    fn r_unitarity() {
        // R(λ)R(−λ) = −(λ²+1)·𝕀 at several sampled points
        let g = Grading::distinguished(2, 1);
        let mut s = Sampler::new(11);
        for _ in 0..10 {
            let l = s.lambda(&rational_excluded()).unwrap();
            let prod = r_rational(l, &g).mul(&r_rational(-l, &g));
            let expect = GradedOperator::identity(&g, 2).scale(-(l * l + 1.0));
            assert!(prod.relative_residual(&expect) < 1e-14);
        }
    }

    #[test]
    fn ybe_rational() {
        let g = Grading::distinguished(2, 1);
        let l1 = C64::new(0.7, 0.3);
        let l2 = C64::new(-1.1, 0.2);
        let res = ybe_residual(|l, p, q, t| r_rational_at(l, &g, p, q, t), l1, l2);
        assert!(res < 1e-12, "YBE residual {res}");
    }

    #[test]
    fn projector_q_identities() {
        // Q² = 2ρQ exactly for the four test algebras; PQ = QP = Q holds
        // in the purely bosonic case
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let g = Grading::distinguished(m, n);
            let q = projector_q(&g);
            let q2 = q.mul(&q);
            let expect = q.scale(c(2.0 * g.rho()));
            assert!(q2.sub(&expect).max_abs() < 1e-12, "gl({m}|{n})");
        }
        // symmetric scheme as well
        for (m, n) in [(1, 2), (2, 2)] {
            let g = Grading::symmetric(m, n).unwrap();
            let q = projector_q(&g);
            let q2 = q.mul(&q);
            assert!(q2.sub(&q.scale(c(2.0 * g.rho()))).max_abs() < 1e-12);
        }
        // bosonic: PQ = QP = Q and Q² = 2ρQ with 2ρ = −m... the signed
        // projector still squares correctly; the P-dominance identity
        // holds for the unsigned transpose
        let g = Grading::distinguished(3, 0);
        let p = super_permutation(&g);
        let q0 = super_permutation(&g).transpose_t_space(0);
        assert!(p.mul(&q0).sub(&q0).max_abs() == 0.0);
        assert!(q0.mul(&p).sub(&q0).max_abs() == 0.0);
        assert!(q0.mul(&q0).sub(&q0.scale(c(3.0))).max_abs() == 0.0);
    }

    #[test]
    fn q_nilpotent_for_gl11_and_pq_for_gl22() {
        let g = Grading::distinguished(1, 1);
        let q = projector_q(&g);
        assert!(q.mul(&q).max_abs() == 0.0);
        assert!(q.max_abs() > 0.0);
        // PQ = QP for gl(2|2) symmetric with the V-conjugated transpose
        // is exercised in the twisted module; the plain-transpose
        // identity PQ = QP = Q does not extend to super algebras (see
        // the acceptance suite).
    }

    #[test]
    fn monodromy_single_site_is_r() {
        let g = Grading::distinguished(1, 1);
        let l = C64::new(0.4, 0.9);
        let t = monodromy(l, 1, &g);
        let r = r_rational(l, &g);
        assert!(t.sub(&r).max_abs() == 0.0);
    }

    #[test]
    fn monodromy_inverse_identity() {
        let g = Grading::distinguished(1, 1);
        let l = C64::new(0.8, 0.3);
        let t = monodromy(l, 2, &g);
        let prod = t.mul(&t.inverse().unwrap());
        assert!(prod.relative_residual(&GradedOperator::identity(&g, 3)) < 1e-13);
    }

    #[test]
    fn rtt_holds() {
        let g = Grading::distinguished(1, 1);
        let mut s = Sampler::new(5);
        for n in 1..=3 {
            let (l1, l2) = s.lambda_pair(&rational_excluded()).unwrap();
            let res = rtt_residual(l1, l2, n, &g);
            assert!(res < 1e-12, "RTT N={n} residual {res}");
        }
    }

    #[test]
    fn coproduct_generators_basics() {
        let g = Grading::distinguished(1, 1);
        // N=1: Δ¹(𝕡_ab) = (−1)^{[b]} e_ab
        let gens = coproduct_generators(1, &g);
        for a in 0..2 {
            for b in 0..2 {
                assert!(gens.ops[a][b].sub(&p_generator(&g, a, b)).max_abs() == 0.0);
            }
        }
        // str(Δᴺ(𝕡_ab)) = 0 for a ≠ b
        let gens = coproduct_generators(3, &g);
        assert!(gens.ops[0][1].super_trace().norm() == 0.0);
        assert!(gens.ops[1][0].super_trace().norm() == 0.0);
    }

    #[test]
    fn gl_relations_fundamental_and_coproduct() {
        for g in [Grading::distinguished(2, 1), Grading::distinguished(2, 2)] {
            let gens = coproduct_generators(1, &g);
            let res = check_gl_relations(&gens).unwrap();
            assert!(res == 0.0, "fundamental relations residual {res}");
        }
        let g = Grading::distinguished(1, 1);
        let gens = coproduct_generators(3, &g);
        let res = check_gl_relations(&gens).unwrap();
        assert!(res < 1e-12, "N=3 relations residual {res}");
    }

    #[test]
    fn opposite_coproduct_agrees_after_shift() {
        let g = Grading::distinguished(2, 1);
        let res = opposite_coproduct_residual(C64::new(0.6, -0.4), &g);
        assert!(res < 1e-13, "Δ′ vs Π∘Δ residual {res}");
    }

    #[test]
    fn str0_of_permutation_is_identity() {
        // independent hand computation: for the embedded P,
        // Σ_a (−1)^{[a]} P_{(a,r),(a,c)} = δ_{rc} (the two signs cancel)
        let g = Grading::distinguished(1, 1);
        let tr = super_permutation(&g).partial_super_trace_aux().unwrap();
        assert!(tr.sub(&GradedOperator::identity(&g, 1)).max_abs() == 0.0);
    }
}
