//! U_q(gl(m|n)) in the fundamental representation and its N-site
//! coproducts, with relation and Chevalley–Serre checks.
//!
//! Weight convention (pinned by requiring L⁺ ∝ R⁺, see the FRT module):
//! q^{ε_i} acts as q^{(−1)^{[i]}} on basis vector i, and the standalone
//! parity prefactors of the diagonal L-entries are absorbed into the
//! representation. The raising/lowering normalizations follow from the
//! e–f exchange relation: π(e_i) = (−1)^{[i]} q^{(−1)^{[i+1]}/2} e_{i,i+1},
//! π(f_i) = q^{−(−1)^{[i+1]}/2} e_{i+1,i}.

use crate::grading::Grading;
use crate::operator::GradedOperator;
use crate::qdeformed::rmatrix::QParams;
use crate::C64;

/// N-site coproducts of the Chevalley generators.
pub struct UqGenerators {
    pub grading: Grading,
    pub n_sites: usize,
    pub qp: QParams,
    /// Δ⁽ᴺ⁾(q^{ε_i}), i = 1..d.
    pub q_eps: Vec<GradedOperator>,
    /// Δ⁽ᴺ⁾(q^{−ε_i}).
    pub q_eps_inv: Vec<GradedOperator>,
    /// Δ⁽ᴺ⁾(e_i), i = 1..d−1.
    pub e: Vec<GradedOperator>,
    /// Δ⁽ᴺ⁾(f_i).
    pub f: Vec<GradedOperator>,
}

/// Single-site weight of q^{ε_i}: diag(q^{(−1)^{[i]} δ_ik}).
pub fn site_q_eps(i: usize, power: f64, qp: &QParams, g: &Grading) -> GradedOperator {
    let d = g.dim();
    let mut m = crate::CMat::identity(d, d);
    m[(i, i)] = qp.q_pow(g.sign(i) * power);
    GradedOperator::from_single(g, m)
}

/// Single-site q^{±h_i/2} with h_i the difference weight ε_i − ε_{i+1}.
pub fn site_q_half_h(i: usize, sign: f64, qp: &QParams, g: &Grading) -> GradedOperator {
    let d = g.dim();
    let mut m = crate::CMat::identity(d, d);
    m[(i, i)] = qp.q_pow(sign * g.sign(i) / 2.0);
    m[(i + 1, i + 1)] = qp.q_pow(-sign * g.sign(i + 1) / 2.0);
    GradedOperator::from_single(g, m)
}

pub fn site_e(i: usize, qp: &QParams, g: &Grading) -> GradedOperator {
    let alpha = qp.q_pow(g.sign(i + 1) / 2.0) * g.sign(i);
    GradedOperator::unit(g, i, i + 1).scale(alpha)
}

pub fn site_f(i: usize, qp: &QParams, g: &Grading) -> GradedOperator {
    let beta = qp.q_pow(-g.sign(i + 1) / 2.0);
    GradedOperator::unit(g, i + 1, i).scale(beta)
}

/// Graded tensor product of per-site factors.
fn chain(factors: &[GradedOperator]) -> GradedOperator {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = acc.tensor_embed(f).expect("same grading");
    }
    acc
}

/// Δ⁽ᴺ⁾(x) for x ∈ {e_i, f_i}: Σ_k q^{−h_i/2}⊗…⊗x_k⊗…⊗q^{h_i/2}.
fn coproduct_chevalley(
    site_x: &GradedOperator,
    i: usize,
    n_sites: usize,
    qp: &QParams,
    g: &Grading,
) -> GradedOperator {
    let minus = site_q_half_h(i, -1.0, qp, g);
    let plus = site_q_half_h(i, 1.0, qp, g);
    let mut acc = GradedOperator::zeros(g, n_sites);
    for k in 0..n_sites {
        let mut factors = Vec::with_capacity(n_sites);
        for s in 0..n_sites {
            factors.push(if s < k {
                minus.clone()
            } else if s == k {
                site_x.clone()
            } else {
                plus.clone()
            });
        }
        acc = acc.add(&chain(&factors));
    }
    acc
}

pub fn uq_fundamental(qp: &QParams, g: &Grading, n_sites: usize) -> UqGenerators {
    let d = g.dim();
    let mut q_eps = Vec::with_capacity(d);
    let mut q_eps_inv = Vec::with_capacity(d);
    for i in 0..d {
        // group-like: Δ(q^{ε_i}) = q^{ε_i} ⊗ q^{ε_i}
        let site = site_q_eps(i, 1.0, qp, g);
        let site_inv = site_q_eps(i, -1.0, qp, g);
        q_eps.push(chain(&vec![site.clone(); n_sites]));
        q_eps_inv.push(chain(&vec![site_inv.clone(); n_sites]));
    }
    let mut e = Vec::with_capacity(d - 1);
    let mut f = Vec::with_capacity(d - 1);
    for i in 0..d - 1 {
        e.push(coproduct_chevalley(&site_e(i, qp, g), i, n_sites, qp, g));
        f.push(coproduct_chevalley(&site_f(i, qp, g), i, n_sites, qp, g));
    }
    UqGenerators {
        grading: g.clone(),
        n_sites,
        qp: *qp,
        q_eps,
        q_eps_inv,
        e,
        f,
    }
}

/// Cartan matrix a_ij = h_i(j) − h_i(j+1) with
/// h_i = (−1)^{[i]}δ_i − (−1)^{[i+1]}δ_{i+1}; diagonal
/// (−1)^{[i]}+(−1)^{[i+1]} vanishes exactly at the parity step.
pub fn cartan_matrix(g: &Grading) -> Vec<Vec<i64>> {
    let d = g.dim();
    let s = |i: usize| g.sign(i) as i64;
    let h = |i: usize, k: usize| -> i64 {
        let mut v = 0;
        if k == i {
            v += s(i);
        }
        if k == i + 1 {
            v -= s(i + 1);
        }
        v
    };
    (0..d - 1)
        .map(|i| (0..d - 1).map(|j| h(i, j) - h(i, j + 1)).collect())
        .collect()
}

/// Maximum residual over all U_q(gl(m|n)) exchange relations plus the
/// Chevalley–Serre relations at the given coproduct width.
pub fn check_uq_relations(gens: &UqGenerators) -> f64 {
    let g = &gens.grading;
    let d = g.dim();
    let qp = &gens.qp;
    let one = GradedOperator::identity(g, gens.n_sites);
    let mut max = 0.0f64;
    let mut upd = |r: f64| {
        if r > max {
            max = r;
        }
    };

    // q^{ε_i} q^{−ε_i} = 1
    for i in 0..d {
        upd(gens.q_eps[i].mul(&gens.q_eps_inv[i]).sub(&one).max_abs());
    }

    // weight relations: q^{ε_i} x_j q^{−ε_i} = q^{±w} x_j
    for i in 0..d {
        for j in 0..d - 1 {
            let w = g.sign(j) * if i == j { 1.0 } else { 0.0 }
                - g.sign(j + 1) * if i == j + 1 { 1.0 } else { 0.0 };
            let lhs = gens.q_eps[i].mul(&gens.e[j]).mul(&gens.q_eps_inv[i]);
            upd(lhs.sub(&gens.e[j].scale(qp.q_pow(w))).max_abs());
            let lhs = gens.q_eps[i].mul(&gens.f[j]).mul(&gens.q_eps_inv[i]);
            upd(lhs.sub(&gens.f[j].scale(qp.q_pow(-w))).max_abs());
        }
    }

    // e_i f_j − (−1)^{([i]+[i+1])([j]+[j+1])} f_j e_i
    //   = δ_ij (q^{ε_i−ε_{i+1}} − q^{−ε_i+ε_{i+1}})/(q − q⁻¹)
    let node_parity = |i: usize| g.parity(i) ^ g.parity(i + 1);
    for i in 0..d - 1 {
        for j in 0..d - 1 {
            let sign = if node_parity(i) & node_parity(j) == 1 {
                -1.0
            } else {
                1.0
            };
            let lhs = gens.e[i]
                .mul(&gens.f[j])
                .sub(&gens.f[j].mul(&gens.e[i]).scale(C64::new(sign, 0.0)));
            let rhs = if i == j {
                let plus = gens.q_eps[i].mul(&gens.q_eps_inv[i + 1]);
                let minus = gens.q_eps_inv[i].mul(&gens.q_eps[i + 1]);
                plus.sub(&minus)
                    .scale(C64::new(1.0, 0.0) / (qp.q() - qp.q_pow(-1.0)))
            } else {
                GradedOperator::zeros(g, gens.n_sites)
            };
            upd(lhs.sub(&rhs).max_abs());
        }
    }

    // distant generators: x_i x_j = (−1)^{(…)(…)} x_j x_i for |i−j| ≥ 2
    for i in 0..d - 1 {
        for j in 0..d - 1 {
            if i.abs_diff(j) < 2 {
                continue;
            }
            let sign = if node_parity(i) & node_parity(j) == 1 {
                -1.0
            } else {
                1.0
            };
            for (xi, xj) in [
                (&gens.e[i], &gens.e[j]),
                (&gens.f[i], &gens.f[j]),
            ] {
                let lhs = xi.mul(xj);
                let rhs = xj.mul(xi).scale(C64::new(sign, 0.0));
                upd(lhs.sub(&rhs).max_abs());
            }
        }
    }

    // Chevalley–Serre for non-odd nodes:
    // x_i² x_{i±1} − (q+q⁻¹) x_i x_{i±1} x_i + x_{i±1} x_i² = 0
    let qq = qp.q() + qp.q_pow(-1.0);
    for i in 0..d - 1 {
        if node_parity(i) == 1 {
            continue;
        }
        for pm in [-1i64, 1] {
            let j = i as i64 + pm;
            if j < 0 || j as usize >= d - 1 {
                continue;
            }
            let j = j as usize;
            for (xi, xj) in [(&gens.e[i], &gens.e[j]), (&gens.f[i], &gens.f[j])] {
                let t = xi
                    .mul(xi)
                    .mul(xj)
                    .sub(&xi.mul(xj).mul(xi).scale(qq))
                    .add(&xj.mul(xi).mul(xi));
                upd(t.max_abs());
            }
        }
    }

    max
}

/// Coassociativity residual: the (Δ⊗id)Δ and (id⊗Δ)Δ routes agree on
/// every generator. Both routes land on three sites; built here from
/// the explicit three-site coproducts versus nesting two-site ones.
pub fn coassociativity_residual(qp: &QParams, g: &Grading) -> f64 {
    // Δ(x) with x a two-site operator, expanded to three sites by
    // applying the one-site coproduct rule to the first or last leg.
    let three = uq_fundamental(qp, g, 3);
    let mut max = 0.0f64;
    let d = g.dim();
    for i in 0..d - 1 {
        // (id ⊗ Δ)Δ(e_i): sites (1)(23): q^{−h}⊗Δ(e) + e⊗Δ(q^{h/2})
        let minus = site_q_half_h(i, -1.0, qp, g);
        let plus = site_q_half_h(i, 1.0, qp, g);
        let e1 = site_e(i, qp, g);
        let two = uq_fundamental(qp, g, 2);
        let id_delta = minus
            .tensor_embed(&two.e[i])
            .unwrap()
            .add(&e1.tensor_embed(&plus.tensor_embed(&plus).unwrap()).unwrap());
        // (Δ ⊗ id)Δ(e_i): Δ(q^{−h})⊗e + Δ(e)⊗q^{h/2}
        let delta_id = minus
            .tensor_embed(&minus)
            .unwrap()
            .tensor_embed(&e1)
            .unwrap()
            .add(&two.e[i].tensor_embed(&plus).unwrap());
        max = max.max(id_delta.sub(&delta_id).max_abs());
        max = max.max(id_delta.sub(&three.e[i]).max_abs());
    }
    max
}
