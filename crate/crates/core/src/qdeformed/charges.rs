//! Open transfer matrix for the trigonometric chain, boundary non-local
//! charges from the λ → ±∞ asymptotics, and the quadratic q-Casimirs.

use crate::error::Result;
use crate::grading::Grading;
use crate::operator::GradedOperator;
use crate::qdeformed::frt::{assemble_l_operators, LOperators};
use crate::qdeformed::rmatrix::{m_matrix, r_trig_at, QParams};
use crate::qdeformed::uq::{uq_fundamental, UqGenerators};
use crate::{C64, CMat};

/// Trigonometric monodromy T(λ) = R_{0N}(λ)⋯R_{01}(λ) over the given
/// quantum positions sharing auxiliary space `aux`.
pub fn monodromy_trig(
    lambda: C64,
    qp: &QParams,
    g: &Grading,
    aux: usize,
    sites: &[usize],
    total: usize,
) -> GradedOperator {
    let mut acc = GradedOperator::identity(g, total);
    for &site in sites {
        acc = r_trig_at(lambda, qp, g, aux, site, total).mul(&acc);
    }
    acc
}

/// Open transfer matrix t(λ) = str₀{M₀ T(λ) K₀(λ) T⁻¹(−λ)} with the
/// trivial left boundary K⁺ = M.
pub fn open_transfer_trig<F>(
    lambda: C64,
    k_fn: F,
    n_sites: usize,
    qp: &QParams,
    g: &Grading,
) -> Result<GradedOperator>
where
    F: Fn(C64) -> CMat,
{
    let total = n_sites + 1;
    let sites: Vec<usize> = (1..total).collect();
    let t = monodromy_trig(lambda, qp, g, 0, &sites, total);
    let t_minus = monodromy_trig(-lambda, qp, g, 0, &sites, total);
    let k0 = GradedOperator::promote_one(&GradedOperator::from_single(g, k_fn(lambda)), 0, total);
    let m0 = GradedOperator::promote_one(
        &GradedOperator::from_single(g, m_matrix(qp, g)),
        0,
        total,
    );
    m0.mul(&t)
        .mul(&k0)
        .mul(&t_minus.inverse()?)
        .partial_super_trace_aux()
}

/// Boundary non-local charge matrices 𝕋± = T± K₀ T̂± on (0, 1..N),
/// where T± are monodromies of the constant L± and T̂± the reversed
/// monodromies of their normalized inverses.
pub struct BoundaryCharges {
    pub t_plus: GradedOperator,
    pub t_minus: GradedOperator,
}

pub fn boundary_charges(
    k_const: &CMat,
    n_sites: usize,
    qp: &QParams,
    g: &Grading,
) -> Result<BoundaryCharges> {
    boundary_charges_split(k_const, k_const, n_sites, qp, g)
}

/// As `boundary_charges` but with separate λ → +∞ and λ → −∞ constant
/// parts of K (they differ for λ-dependent boundaries).
pub fn boundary_charges_split(
    k_plus_const: &CMat,
    k_minus_const: &CMat,
    n_sites: usize,
    qp: &QParams,
    g: &Grading,
) -> Result<BoundaryCharges> {
    let ops = assemble_l_operators(qp, g)?;
    Ok(BoundaryCharges {
        t_plus: dressed_charge(&ops.l_plus, &ops.l_hat_plus, k_plus_const, n_sites, g),
        t_minus: dressed_charge(&ops.l_minus, &ops.l_hat_minus, k_minus_const, n_sites, g),
    })
}

fn dressed_charge(
    l: &GradedOperator,
    l_hat: &GradedOperator,
    k_const: &CMat,
    n_sites: usize,
    g: &Grading,
) -> GradedOperator {
    let total = n_sites + 1;
    let mut t = GradedOperator::identity(g, total);
    let mut t_hat = GradedOperator::identity(g, total);
    for site in 1..total {
        t = GradedOperator::promote_two(l, 0, site, total).mul(&t);
        // T̂ reverses the site order relative to T
        t_hat = t_hat.mul(&GradedOperator::promote_two(l_hat, 0, site, total));
    }
    let k0 = GradedOperator::promote_one(&GradedOperator::from_single(g, k_const.clone()), 0, total);
    t.mul(&k0).mul(&t_hat)
}

/// Quantum-space component operators τ_{ab} = str₀{e_ab,₀ 𝕋} of a charge
/// matrix (equal to (−1)^{[a]} 𝕋_{ba}).
pub fn charge_components(t: &GradedOperator) -> Vec<Vec<GradedOperator>> {
    let g = t.grading().clone();
    let d = g.dim();
    let total = t.spaces();
    let mut out = Vec::with_capacity(d);
    for a in 0..d {
        let mut row = Vec::with_capacity(d);
        for b in 0..d {
            let e = GradedOperator::promote_one(&GradedOperator::unit(&g, a, b), 0, total);
            row.push(
                e.mul(t)
                    .partial_super_trace_aux()
                    .expect("charge matrices have an auxiliary space"),
            );
        }
        out.push(row);
    }
    out
}

/// Quadratic q-Casimirs C± = str₀{M₀ 𝕋±₀}.
pub fn q_casimirs(charges: &BoundaryCharges, qp: &QParams, g: &Grading) -> (GradedOperator, GradedOperator) {
    let total = charges.t_plus.spaces();
    let m0 = GradedOperator::promote_one(
        &GradedOperator::from_single(g, m_matrix(qp, g)),
        0,
        total,
    );
    (
        m0.mul(&charges.t_plus)
            .partial_super_trace_aux()
            .expect("aux space present"),
        m0.mul(&charges.t_minus)
            .partial_super_trace_aux()
            .expect("aux space present"),
    )
}

/// Closed-form C⁺ for U_q(gl(1|1)), K = 𝕀:
/// Δ(q^{2ε₁}) − Δ(q^{2ε₂}) + (q−q⁻¹)² Δ(q^{(ε₁+ε₂)/2})Δ(f₁)Δ(q^{(ε₁+ε₂)/2})Δ(e₁).
/// The sign of the last term is fixed by centrality: with a minus the
/// combination fails to commute with e₁, f₁ already at one site.
pub fn casimir_closed_form_gl11_plus(gens: &UqGenerators) -> GradedOperator {
    let qp = &gens.qp;
    let qm = qp.q() - qp.q_pow(-1.0);
    let half = |i: usize| -> GradedOperator {
        // Δ(q^{(ε₁+ε₂)/2}): group-like product of the square roots
        let g = &gens.grading;
        let n = gens.n_sites;
        let site = crate::qdeformed::uq::site_q_eps(0, 0.5, qp, g)
            .mul(&crate::qdeformed::uq::site_q_eps(1, 0.5, qp, g));
        let mut acc = site.clone();
        for _ in 1..n {
            acc = acc.tensor_embed(&site).expect("same grading");
        }
        let _ = i;
        acc
    };
    let sq = |i: usize| -> GradedOperator { gens.q_eps[i].mul(&gens.q_eps[i]) };
    sq(0)
        .sub(&sq(1))
        .add(
            &half(0)
                .mul(&gens.f[0])
                .mul(&half(0))
                .mul(&gens.e[0])
                .scale(qm * qm),
        )
}

/// Closed-form C⁻ for U_q(gl(2|1)) with the two-block diagonal boundary
/// (α = 2): q² Δ(q^{−2ε₃}) up to one scalar.
pub fn casimir_closed_form_gl21_minus(gens: &UqGenerators) -> GradedOperator {
    gens.q_eps_inv[2].mul(&gens.q_eps_inv[2])
}

/// Proportionality check: X ≈ cY for one scalar c (fixed from the
/// largest entry of Y); returns (c, relative deviation).
pub fn proportionality(x: &GradedOperator, y: &GradedOperator) -> (C64, f64) {
    let mut best = (0usize, 0usize, 0.0f64);
    for r in 0..y.dim() {
        for c in 0..y.dim() {
            let n = y.matrix()[(r, c)].norm();
            if n > best.2 {
                best = (r, c, n);
            }
        }
    }
    let scalar = x.matrix()[(best.0, best.1)] / y.matrix()[(best.0, best.1)];
    let dev = x.sub(&y.scale(scalar)).max_abs() / 1f64.max(x.max_abs());
    (scalar, dev)
}

/// Convenience: K = 𝕀 as a constant boundary matrix.
pub fn identity_k(g: &Grading) -> CMat {
    CMat::identity(g.dim(), g.dim())
}

/// Scan the U_q(gl(m|n)) generators against the open transfer matrix
/// and classify preserved vs broken. Labels: "qeps[i]", "e[i]", "f[i]"
/// with 1-based node indices.
pub fn uq_symmetry_scan<F>(
    k_fn: F,
    n_sites: usize,
    qp: &QParams,
    g: &Grading,
    sampler: &mut crate::sample::Sampler,
    samples: usize,
    preserved_tol: f64,
    broken_tol: f64,
) -> Result<crate::report::SymmetryClassification>
where
    F: Fn(C64) -> CMat,
{
    let excl = crate::sample::trig_excluded(qp.mu);
    let gens = uq_fundamental(qp, g, n_sites);
    let transfers: Vec<GradedOperator> = (0..samples)
        .map(|_| {
            let l = sampler.lambda(&excl)?;
            open_transfer_trig(l, &k_fn, n_sites, qp, g)
        })
        .collect::<Result<_>>()?;
    let mut residuals = Vec::new();
    let mut probe = |label: String, op: &GradedOperator| {
        let mut max = 0.0f64;
        for t in &transfers {
            let norm = 1f64.max(t.max_abs()) * 1f64.max(op.max_abs());
            max = max.max(t.commutator(op).max_abs() / norm);
        }
        residuals.push((label, max));
    };
    for i in 0..g.dim() {
        probe(format!("qeps[{}]", i + 1), &gens.q_eps[i]);
    }
    for i in 0..g.dim() - 1 {
        probe(format!("e[{}]", i + 1), &gens.e[i]);
        probe(format!("f[{}]", i + 1), &gens.f[i]);
    }
    Ok(crate::report::SymmetryClassification::classify(
        residuals,
        preserved_tol,
        broken_tol,
    ))
}

pub fn assemble_ops(qp: &QParams, g: &Grading) -> Result<LOperators> {
    assemble_l_operators(qp, g)
}
