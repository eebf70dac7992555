//! Reflection algebra for the rational case: c-number K-matrices,
//! double-row objects, transfer matrices, symmetry scans and the 1/λ
//! charge/Casimir pipeline.

use crate::error::{CoreError, Result};
use crate::grading::Grading;
use crate::operator::GradedOperator;
use crate::report::SymmetryClassification;
use crate::sample::{rational_excluded, Sampler};
use crate::series::OperatorSeries;
use crate::yangian::{
    coproduct_generators, monodromy_general, r_rational_at, super_permutation_at,
};
use crate::{C64, CMat};

const I: C64 = C64::new(0.0, 1.0);

/// Supported c-number boundary families for the rational chain.
#[derive(Clone, Debug)]
pub enum BoundaryKind {
    /// K(λ) = 𝕀.
    Identity,
    /// K = diag(1^{m₁}, −1^{m₂+n₂}, 1^{n₁}) with m₁+m₂ = m, n₁+n₂ = n.
    DiagBlocks {
        m1: usize,
        m2: usize,
        n1: usize,
        n2: usize,
    },
    /// K(λ) = iξ + λℰ with ℰ = diag(±1), ℰ² = 𝕀.
    Linear { xi: f64, pattern: Vec<i8> },
    /// K(λ) = K + ξ₁/λ + ξ₂/λ² with caller-supplied constant matrices.
    Generic { k: CMat, xi1: CMat, xi2: CMat },
}

#[derive(Clone, Debug)]
pub struct BoundarySpec {
    pub kind: BoundaryKind,
    pub grading: Grading,
}

impl BoundarySpec {
    pub fn identity(g: &Grading) -> Self {
        Self {
            kind: BoundaryKind::Identity,
            grading: g.clone(),
        }
    }

    pub fn diag_blocks(g: &Grading, m1: usize, m2: usize, n1: usize, n2: usize) -> Result<Self> {
        if m1 + m2 != g.m() || n1 + n2 != g.n() {
            return Err(CoreError::InvalidBoundary(format!(
                "diag blocks ({m1},{m2},{n1},{n2}) incompatible with gl({}|{})",
                g.m(),
                g.n()
            )));
        }
        Ok(Self {
            kind: BoundaryKind::DiagBlocks { m1, m2, n1, n2 },
            grading: g.clone(),
        })
    }

    pub fn linear(g: &Grading, xi: f64, pattern: Vec<i8>) -> Result<Self> {
        if pattern.len() != g.dim() || pattern.iter().any(|&s| s != 1 && s != -1) {
            return Err(CoreError::InvalidBoundary(
                "linear boundary needs a ±1 sign per dimension".into(),
            ));
        }
        Ok(Self {
            kind: BoundaryKind::Linear { xi, pattern },
            grading: g.clone(),
        })
    }

    /// The diagonal ±1 signature of the blocks family.
    pub fn block_signs(m1: usize, m2: usize, n1: usize, n2: usize) -> Vec<i8> {
        let mut v = vec![1i8; m1];
        v.extend(std::iter::repeat(-1i8).take(m2 + n2));
        v.extend(std::iter::repeat(1i8).take(n1));
        v
    }

    /// K(λ) as a single-space matrix.
    pub fn k_at(&self, lambda: C64) -> CMat {
        let d = self.grading.dim();
        match &self.kind {
            BoundaryKind::Identity => CMat::identity(d, d),
            BoundaryKind::DiagBlocks { m1, m2, n1, n2 } => {
                let signs = Self::block_signs(*m1, *m2, *n1, *n2);
                CMat::from_fn(d, d, |r, c| {
                    if r == c {
                        C64::new(signs[r] as f64, 0.0)
                    } else {
                        C64::new(0.0, 0.0)
                    }
                })
            }
            BoundaryKind::Linear { xi, pattern } => CMat::from_fn(d, d, |r, c| {
                if r == c {
                    I * *xi + lambda * (pattern[r] as f64)
                } else {
                    C64::new(0.0, 0.0)
                }
            }),
            BoundaryKind::Generic { k, xi1, xi2 } => {
                k + xi1.map(|v| v / lambda) + xi2.map(|v| v / (lambda * lambda))
            }
        }
    }

    /// Expansion K(λ) ≃ K + ξ₁/λ + ξ₂/λ² after normalizing the linear
    /// family by λ (so the leading term is ℰ).
    pub fn k_series_coeffs(&self) -> (CMat, CMat, CMat) {
        let d = self.grading.dim();
        let zero = CMat::zeros(d, d);
        match &self.kind {
            BoundaryKind::Identity => (CMat::identity(d, d), zero.clone(), zero),
            BoundaryKind::DiagBlocks { m1, m2, n1, n2 } => {
                let signs = Self::block_signs(*m1, *m2, *n1, *n2);
                let k = CMat::from_fn(d, d, |r, c| {
                    if r == c {
                        C64::new(signs[r] as f64, 0.0)
                    } else {
                        C64::new(0.0, 0.0)
                    }
                });
                (k, zero.clone(), zero)
            }
            BoundaryKind::Linear { xi, pattern } => {
                let e = CMat::from_fn(d, d, |r, c| {
                    if r == c {
                        C64::new(pattern[r] as f64, 0.0)
                    } else {
                        C64::new(0.0, 0.0)
                    }
                });
                let xi1 = CMat::from_fn(d, d, |r, c| {
                    if r == c {
                        I * *xi
                    } else {
                        C64::new(0.0, 0.0)
                    }
                });
                (e, xi1, zero)
            }
            BoundaryKind::Generic { k, xi1, xi2 } => (k.clone(), xi1.clone(), xi2.clone()),
        }
    }
}

/// 𝕋(λ) = T(λ) K₀(λ) T⁻¹(−λ) on spaces (0, 1..N).
pub fn double_row(lambda: C64, spec: &BoundarySpec, n_sites: usize) -> Result<GradedOperator> {
    let g = &spec.grading;
    let total = n_sites + 1;
    let sites: Vec<usize> = (1..total).collect();
    let t = monodromy_general(lambda, 0, &sites, total, g);
    let t_minus = monodromy_general(-lambda, 0, &sites, total, g);
    let k0 = GradedOperator::promote_one(
        &GradedOperator::from_single(g, spec.k_at(lambda)),
        0,
        total,
    );
    Ok(t.mul(&k0).mul(&t_minus.inverse()?))
}

/// Double-row transfer matrix t(λ) = str₀{K⁺₀(λ) 𝕋(λ)} on the quantum spaces.
pub fn transfer_matrix(
    lambda: C64,
    spec: &BoundarySpec,
    k_plus: &BoundarySpec,
    n_sites: usize,
) -> Result<GradedOperator> {
    let g = &spec.grading;
    let total = n_sites + 1;
    let kp = GradedOperator::promote_one(
        &GradedOperator::from_single(g, k_plus.k_at(lambda)),
        0,
        total,
    );
    kp.mul(&double_row(lambda, spec, n_sites)?)
        .partial_super_trace_aux()
}

/// Reflection-equation residual for the dressed double-row object:
/// R₁₂(λ₁−λ₂)𝕋₁(λ₁)R₂₁(λ₁+λ₂)𝕋₂(λ₂) = 𝕋₂(λ₂)R₁₂(λ₁+λ₂)𝕋₁(λ₁)R₂₁(λ₁−λ₂),
/// with the two "auxiliary" spaces at 0, 1 and quantum spaces behind.
/// For the rational R, R₂₁ = R₁₂.
pub fn reflection_residual_dressed(
    l1: C64,
    l2: C64,
    spec: &BoundarySpec,
    n_sites: usize,
) -> Result<f64> {
    let g = &spec.grading;
    let total = n_sites + 2;
    let sites: Vec<usize> = (2..total).collect();
    let dressed = |lambda: C64, aux: usize| -> Result<GradedOperator> {
        let t = monodromy_general(lambda, aux, &sites, total, g);
        let tm = monodromy_general(-lambda, aux, &sites, total, g);
        let k = GradedOperator::promote_one(
            &GradedOperator::from_single(g, spec.k_at(lambda)),
            aux,
            total,
        );
        Ok(t.mul(&k).mul(&tm.inverse()?))
    };
    let t1 = dressed(l1, 0)?;
    let t2 = dressed(l2, 1)?;
    let r_diff = r_rational_at(l1 - l2, g, 0, 1, total);
    let r_sum = r_rational_at(l1 + l2, g, 0, 1, total);
    let lhs = r_diff.mul(&t1).mul(&r_sum).mul(&t2);
    let rhs = t2.mul(&r_sum).mul(&t1).mul(&r_diff);
    Ok(lhs.relative_residual(&rhs))
}

/// C-number reflection-equation residual for the bare K-matrix.
pub fn reflection_residual_cnumber(l1: C64, l2: C64, spec: &BoundarySpec) -> f64 {
    let g = &spec.grading;
    let k1 = |l: C64| {
        GradedOperator::promote_one(&GradedOperator::from_single(g, spec.k_at(l)), 0, 2)
    };
    let k2 = |l: C64| {
        GradedOperator::promote_one(&GradedOperator::from_single(g, spec.k_at(l)), 1, 2)
    };
    let r_diff = r_rational_at(l1 - l2, g, 0, 1, 2);
    let r_sum = r_rational_at(l1 + l2, g, 0, 1, 2);
    let lhs = r_diff.mul(&k1(l1)).mul(&r_sum).mul(&k2(l2));
    let rhs = k2(l2).mul(&r_sum).mul(&k1(l1)).mul(&r_diff);
    lhs.relative_residual(&rhs)
}

/// Max ‖[t(λ), t(λ′)]‖ over sampled pairs.
pub fn transfer_commutativity(
    spec: &BoundarySpec,
    k_plus: &BoundarySpec,
    n_sites: usize,
    sampler: &mut Sampler,
    pairs: usize,
) -> Result<f64> {
    let excl = rational_excluded();
    let mut max = 0.0f64;
    for _ in 0..pairs {
        let (l1, l2) = sampler.lambda_pair(&excl)?;
        let t1 = transfer_matrix(l1, spec, k_plus, n_sites)?;
        let t2 = transfer_matrix(l2, spec, k_plus, n_sites)?;
        let comm = t1.commutator(&t2);
        max = max.max(comm.max_abs() / 1f64.max(t1.max_abs()).max(t2.max_abs()));
    }
    Ok(max)
}

/// Scan all Δ⁽ᴺ⁾(𝕡_ab) against t(λ) and classify preserved vs broken.
pub fn symmetry_scan(
    spec: &BoundarySpec,
    k_plus: &BoundarySpec,
    n_sites: usize,
    sampler: &mut Sampler,
    samples: usize,
    preserved_tol: f64,
    broken_tol: f64,
) -> Result<SymmetryClassification> {
    let g = &spec.grading;
    let excl = rational_excluded();
    let gens = coproduct_generators(n_sites, g);
    let lambdas: Vec<C64> = (0..samples)
        .map(|_| sampler.lambda(&excl))
        .collect::<Result<_>>()?;
    let transfers: Vec<GradedOperator> = lambdas
        .iter()
        .map(|&l| transfer_matrix(l, spec, k_plus, n_sites))
        .collect::<Result<_>>()?;
    let d = g.dim();
    let mut residuals = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let mut max = 0.0f64;
            for t in &transfers {
                let norm = 1f64.max(t.max_abs());
                max = max.max(t.commutator(&gens.ops[a][b]).max_abs() / norm);
            }
            residuals.push((format!("p[{},{}]", a + 1, b + 1), max));
        }
    }
    Ok(SymmetryClassification::classify(
        residuals,
        preserved_tol,
        broken_tol,
    ))
}

/// Indices (0-based pair list) predicted preserved for the diag-blocks
/// K-matrix: exactly the generator pairs on which K acts with equal signs.
pub fn predicted_preserved_diag(
    g: &Grading,
    m1: usize,
    m2: usize,
    n1: usize,
    n2: usize,
) -> Vec<(usize, usize)> {
    let signs = BoundarySpec::block_signs(m1, m2, n1, n2);
    let d = g.dim();
    let mut v = Vec::new();
    for a in 0..d {
        for b in 0..d {
            if signs[a] == signs[b] {
                v.push((a, b));
            }
        }
    }
    v
}

/// Normalized double-row series in 1/λ on spaces (0, 1..N):
/// 𝕋̃(λ) = T̃(λ) K̃(λ) T̃(−λ)⁻¹ with T̃ = Π(1 + iP/λ) and K̃ the
/// normalized boundary expansion.
pub fn double_row_series(spec: &BoundarySpec, n_sites: usize, order: usize) -> Result<OperatorSeries> {
    if order < 2 {
        return Err(CoreError::OrderTooSmall(order));
    }
    let g = &spec.grading;
    let total = n_sites + 1;
    let id = GradedOperator::identity(g, total);

    // T̃(λ) = Π_k (1 + i P_{0k}/λ), highest site leftmost
    let mut t_series = OperatorSeries::constant(id.clone(), order);
    let mut t_series_neg = OperatorSeries::constant(id.clone(), order);
    for site in 1..total {
        let p = super_permutation_at(g, 0, site, total);
        let l_pos = OperatorSeries::new(vec![id.clone(), p.scale(I)]).truncate(order);
        let l_neg = OperatorSeries::new(vec![id.clone(), p.scale(-I)]).truncate(order);
        t_series = l_pos.mul(&t_series);
        t_series_neg = l_neg.mul(&t_series_neg);
    }
    let t_hat = t_series_neg.inverse()?;

    let (k, xi1, xi2) = spec.k_series_coeffs();
    let k_series = OperatorSeries::new(vec![
        GradedOperator::promote_one(&GradedOperator::from_single(g, k), 0, total),
        GradedOperator::promote_one(&GradedOperator::from_single(g, xi1), 0, total),
        GradedOperator::promote_one(&GradedOperator::from_single(g, xi2), 0, total),
    ])
    .truncate(order);

    Ok(t_series.mul(&k_series).mul(&t_hat))
}

/// Charges extracted from the normalized double-row expansion
/// 𝕋̃(λ) ≃ K + (i/λ)𝕢⁽⁰⁾ − (1/λ²)𝕢⁽¹⁾ + …
pub struct ChargeSet {
    /// 𝕢⁽⁰⁾ as a matrix on (aux, quantum…).
    pub q0_matrix: GradedOperator,
    /// Component operators of 𝕢⁽⁰⁾ on the quantum spaces, indexed by the
    /// auxiliary (a,b) position.
    pub q0: Vec<Vec<GradedOperator>>,
    /// 𝕢⁽¹⁾ as a matrix.
    pub q1_matrix: GradedOperator,
    /// Quadratic Casimir C = str₀ 𝕢⁽¹⁾.
    pub casimir: GradedOperator,
    /// Higher charges t⁽ᵏ⁾ = str₀ of the λ^{−(k+1)} coefficient, k = 0….
    pub higher: Vec<GradedOperator>,
}

/// Extract the auxiliary components X_{ab} of a matrix on (aux, rest):
/// X = Σ embed(e_ab, X_ab), undoing the embedding signs.
pub fn aux_components(x: &GradedOperator) -> Vec<Vec<GradedOperator>> {
    let g = x.grading().clone();
    let d = g.dim();
    let rest_spaces = x.spaces() - 1;
    let rest = x.dim() / d;
    let mut out = Vec::with_capacity(d);
    for a in 0..d {
        let mut row = Vec::with_capacity(d);
        for b in 0..d {
            let pab = g.parity(a) ^ g.parity(b);
            let mut m = CMat::zeros(rest, rest);
            for r in 0..rest {
                // undo (−1)^{[r]([a]+[b])}
                let sgn = if pab == 1 {
                    let mut rem = r;
                    let mut p = 0u8;
                    for _ in 0..rest_spaces {
                        p ^= g.parity(rem % d);
                        rem /= d;
                    }
                    if p == 1 {
                        -1.0
                    } else {
                        1.0
                    }
                } else {
                    1.0
                };
                for c in 0..rest {
                    m[(r, c)] = x.matrix()[(a * rest + r, b * rest + c)] * sgn;
                }
            }
            row.push(GradedOperator::from_matrix(g.clone(), rest_spaces, m));
        }
        out.push(row);
    }
    out
}

pub fn extract_charges(series: &OperatorSeries) -> Result<ChargeSet> {
    if series.order() < 2 {
        return Err(CoreError::OrderTooSmall(series.order()));
    }
    let q0_matrix = series.coeff(1).scale(-I); // c₁ = i𝕢⁽⁰⁾
    let q1_matrix = series.coeff(2).neg(); // c₂ = −𝕢⁽¹⁾
    let casimir = q1_matrix.partial_super_trace_aux()?;
    let q0 = aux_components(&q0_matrix);
    let mut higher = Vec::new();
    for k in 1..=series.order() {
        higher.push(series.coeff(k).partial_super_trace_aux()?);
    }
    Ok(ChargeSet {
        q0: q0.clone(),
        q0_matrix,
        q1_matrix,
        casimir,
        higher,
    })
}

/// Closed-form oracle for the quadratic Casimir with a diagonal K of
/// signature `signs` (identity: all +1), evaluated in the fundamental
/// representation at N = 1 with the L-operator components
/// A_ab = (−1)^{[b]} e_ba:
/// C = Σ_{ab} s_b (−1)^{[b]} A_ab A_ba + s_a (−1)^{[a]} (A²)_aa-diag form,
/// i.e. the super-trace over the auxiliary space of 𝕡K𝕡 + K𝕡².
pub fn casimir_closed_form_diag(g: &Grading, signs: &[f64]) -> GradedOperator {
    let d = g.dim();
    let comp = |a: usize, b: usize| -> GradedOperator {
        GradedOperator::unit(g, b, a).scale(C64::new(g.sign(b), 0.0))
    };
    // str₀(𝕡K𝕡): Σ_{a,b} (−1)^{[a]} σ(a,b) K_bb A_ab A_ba where σ is the
    // graded product sign (−1)^{([a]+[b])([b]+[a])} = (−1)^{[a]+[b]}.
    let mut acc = GradedOperator::zeros(g, 1);
    for a in 0..d {
        for b in 0..d {
            let sigma = if (g.parity(a) ^ g.parity(b)) == 1 {
                -1.0
            } else {
                1.0
            };
            let w = C64::new(g.sign(a) * sigma * signs[b], 0.0);
            acc = acc.add(&comp(a, b).mul(&comp(b, a)).scale(w));
        }
    }
    // str₀(K𝕡²): Σ_{a,b} (−1)^{[a]} K_aa σ A_ab A_ba
    for a in 0..d {
        for b in 0..d {
            let sigma = if (g.parity(a) ^ g.parity(b)) == 1 {
                -1.0
            } else {
                1.0
            };
            let w = C64::new(g.sign(a) * sigma * signs[a], 0.0);
            acc = acc.add(&comp(a, b).mul(&comp(b, a)).scale(w));
        }
    }
    acc
}
