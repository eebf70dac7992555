//! Dense operators on ordered tensor products of Z₂-graded spaces.
//!
//! Graded semantics are realized through a fixed sign embedding: the
//! tensor product of two operators carries the factor
//! (−1)^{[r_B]([r_A]+[c_A])} baked into its entries, so that ordinary
//! matrix multiplication of embedded operators reproduces the graded
//! product rule (A⊗B)(C⊗D) = (−1)^{[B][C]} AC⊗BD on homogeneous
//! factors. All downstream algebra is then plain linear algebra.

use crate::error::{CoreError, Result};
use crate::grading::Grading;
use crate::{C64, CMat};

/// Parity of an operator inferred from its nonzero entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorParity {
    Even,
    Odd,
    Mixed,
}

/// Dense complex operator on `spaces` copies of the graded space.
#[derive(Clone, Debug)]
pub struct GradedOperator {
    grading: Grading,
    spaces: usize,
    mat: CMat,
}

const PARITY_SCAN_TOL: f64 = 1e-12;

impl GradedOperator {
    pub fn from_matrix(grading: Grading, spaces: usize, mat: CMat) -> Self {
        let dim = grading.dim().pow(spaces as u32);
        assert_eq!(mat.nrows(), dim, "matrix rows do not match d^s");
        assert_eq!(mat.ncols(), dim, "matrix cols do not match d^s");
        Self { grading, spaces, mat }
    }

    pub fn zeros(grading: &Grading, spaces: usize) -> Self {
        let dim = grading.dim().pow(spaces as u32);
        Self {
            grading: grading.clone(),
            spaces,
            mat: CMat::zeros(dim, dim),
        }
    }

    pub fn identity(grading: &Grading, spaces: usize) -> Self {
        let dim = grading.dim().pow(spaces as u32);
        Self {
            grading: grading.clone(),
            spaces,
            mat: CMat::identity(dim, dim),
        }
    }

    /// Single-space matrix unit e_ij (0-based indices).
    pub fn unit(grading: &Grading, i: usize, j: usize) -> Self {
        let d = grading.dim();
        let mut mat = CMat::zeros(d, d);
        mat[(i, j)] = C64::new(1.0, 0.0);
        Self {
            grading: grading.clone(),
            spaces: 1,
            mat,
        }
    }

    /// Wrap a single-space matrix.
    pub fn from_single(grading: &Grading, mat: CMat) -> Self {
        assert_eq!(mat.nrows(), grading.dim());
        Self::from_matrix(grading.clone(), 1, mat)
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn spaces(&self) -> usize {
        self.spaces
    }

    pub fn matrix(&self) -> &CMat {
        &self.mat
    }

    pub fn into_matrix(self) -> CMat {
        self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    /// Decompose a flat row/column index into per-space indices.
    fn split(&self, flat: usize) -> Vec<usize> {
        split_index(flat, self.grading.dim(), self.spaces)
    }

    /// Total parity (mod 2) of a flat multi-index.
    fn flat_parity(&self, flat: usize) -> u8 {
        let d = self.grading.dim();
        let mut rem = flat;
        let mut p = 0u8;
        for _ in 0..self.spaces {
            p ^= self.grading.parity(rem % d);
            rem /= d;
        }
        p
    }

    /// Graded tensor product with the sign rule baked into the entries:
    /// out_{(rA,rB),(cA,cB)} = A_{rA,cA} B_{rB,cB} (−1)^{[rB]([rA]+[cA])}.
    pub fn tensor_embed(&self, other: &GradedOperator) -> Result<GradedOperator> {
        if self.grading != other.grading {
            return Err(CoreError::GradingMismatch);
        }
        let (na, nb) = (self.dim(), other.dim());
        let mut out = CMat::zeros(na * nb, na * nb);
        for ra in 0..na {
            let pra = self.flat_parity(ra);
            for ca in 0..na {
                let a = self.mat[(ra, ca)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                let pa = pra ^ self.flat_parity(ca);
                for rb in 0..nb {
                    let sign = if pa == 1 && other.flat_parity(rb) == 1 {
                        -1.0
                    } else {
                        1.0
                    };
                    let coeff = a * sign;
                    for cb in 0..nb {
                        let b = other.mat[(rb, cb)];
                        if b.norm_sqr() == 0.0 {
                            continue;
                        }
                        out[(ra * nb + rb, ca * nb + cb)] = coeff * b;
                    }
                }
            }
        }
        Ok(GradedOperator {
            grading: self.grading.clone(),
            spaces: self.spaces + other.spaces,
            mat: out,
        })
    }

    /// Embed a single-space operator at position `pos` of `total` spaces
    /// (identity elsewhere), with graded signs.
    pub fn promote_one(x: &GradedOperator, pos: usize, total: usize) -> GradedOperator {
        assert_eq!(x.spaces, 1);
        assert!(pos < total);
        let g = &x.grading;
        let mut acc = if pos == 0 {
            x.clone()
        } else {
            GradedOperator::identity(g, pos)
                .tensor_embed(x)
                .expect("same grading")
        };
        if pos + 1 < total {
            acc = acc
                .tensor_embed(&GradedOperator::identity(g, total - pos - 1))
                .expect("same grading");
        }
        acc
    }

    /// Embed a two-space operator at positions `p` and `q` (p ≠ q) of
    /// `total` spaces. The operator's first tensor factor lands on `p`,
    /// the second on `q`.
    pub fn promote_two(x: &GradedOperator, p: usize, q: usize, total: usize) -> GradedOperator {
        assert_eq!(x.spaces, 2);
        assert!(p != q && p < total && q < total);
        let g = x.grading.clone();
        let d = g.dim();
        let mut out = GradedOperator::zeros(&g, total);
        for ri in 0..d * d {
            let (i, k) = (ri / d, ri % d);
            for ci in 0..d * d {
                let v = x.mat[(ri, ci)];
                if v.norm_sqr() == 0.0 {
                    continue;
                }
                let (j, l) = (ci / d, ci % d);
                // undo the two-space embedding sign to get the bare
                // coefficient of e_ij ⊗ e_kl
                let sign = if g.parity(k) == 1 && (g.parity(i) ^ g.parity(j)) == 1 {
                    -1.0
                } else {
                    1.0
                };
                out.add_units_scaled(v * sign, &[(p, i, j), (q, k, l)]);
            }
        }
        out
    }

    /// Add `coeff` times the graded embedding of matrix units
    /// e_{a_t b_t} placed at the listed positions (identity elsewhere).
    ///
    /// The embedding sign for a surrounding index assignment r is
    /// Π_t (−1)^{[r_t]·L_t} with L_t the total parity of the active
    /// units strictly left of position t.
    pub fn add_units_scaled(&mut self, coeff: C64, units: &[(usize, usize, usize)]) {
        let d = self.grading.dim();
        let s = self.spaces;
        let mut active: Vec<Option<(usize, usize)>> = vec![None; s];
        for &(pos, a, b) in units {
            assert!(active[pos].is_none(), "duplicate unit position");
            active[pos] = Some((a, b));
        }
        // parity of active units strictly left of each position
        let mut left = vec![0u8; s];
        let mut acc = 0u8;
        for t in 0..s {
            left[t] = acc;
            if let Some((a, b)) = active[t] {
                acc ^= self.grading.parity(a) ^ self.grading.parity(b);
            }
        }
        let free: Vec<usize> = (0..s).filter(|t| active[*t].is_none()).collect();
        let n_free = free.len();
        let mut idx = vec![0usize; n_free];
        loop {
            // assemble row/col flat indices and the sign
            let mut row = 0usize;
            let mut col = 0usize;
            let mut sign = 1.0f64;
            let mut fi = 0usize;
            for t in 0..s {
                let (rt, ct) = match active[t] {
                    Some((a, b)) => (a, b),
                    None => {
                        let v = idx[fi];
                        fi += 1;
                        (v, v)
                    }
                };
                row = row * d + rt;
                col = col * d + ct;
                if self.grading.parity(rt) == 1 && left[t] == 1 {
                    sign = -sign;
                }
            }
            self.mat[(row, col)] += coeff * sign;
            // advance the free multi-index
            let mut t = n_free;
            loop {
                if t == 0 {
                    return;
                }
                t -= 1;
                idx[t] += 1;
                if idx[t] < d {
                    break;
                }
                idx[t] = 0;
            }
        }
    }

    /// Super-trace: Σ over diagonal multi-indices of (−1)^{total parity}.
    pub fn super_trace(&self) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..self.dim() {
            let s = if self.flat_parity(i) == 1 { -1.0 } else { 1.0 };
            acc += self.mat[(i, i)] * s;
        }
        acc
    }

    /// Partial super-trace over the auxiliary space (position 0):
    /// (str₀ A)_{r,c} = Σ_a (−1)^{[a]} A_{(a,r),(a,c)}.
    pub fn partial_super_trace_aux(&self) -> Result<GradedOperator> {
        if self.spaces < 2 {
            return Err(CoreError::SingleSpace);
        }
        let d = self.grading.dim();
        let rest = self.dim() / d;
        let mut out = CMat::zeros(rest, rest);
        for a in 0..d {
            let sgn = self.grading.sign(a);
            for r in 0..rest {
                for c in 0..rest {
                    out[(r, c)] += self.mat[(a * rest + r, a * rest + c)] * sgn;
                }
            }
        }
        Ok(GradedOperator {
            grading: self.grading.clone(),
            spaces: self.spaces - 1,
            mat: out,
        })
    }

    /// Graded transposition (single space operators):
    /// (Aᵀ)_{ji} = (−1)^{[i][j]+[j]} A_{ij}.
    pub fn transpose_t(&self) -> GradedOperator {
        assert_eq!(self.spaces, 1, "transpose_t acts on one space; use transpose_t_space");
        self.transpose_t_space(0)
    }

    /// Apply the graded transposition to the tensor factor at `space`,
    /// leaving the other factors untouched.
    pub fn transpose_t_space(&self, space: usize) -> GradedOperator {
        assert!(space < self.spaces);
        let n = self.dim();
        let mut out = CMat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let v = self.mat[(r, c)];
                if v.norm_sqr() == 0.0 {
                    continue;
                }
                let mut ri = self.split(r);
                let mut ci = self.split(c);
                let i = ri[space]; // original row index at `space`
                let j = ci[space]; // original column index
                ri[space] = j;
                ci[space] = i;
                let pi = self.grading.parity(i);
                let pj = self.grading.parity(j);
                let sign = if (pi & pj) ^ pj == 1 { -1.0 } else { 1.0 };
                out[(join_index(&ri, self.grading.dim()), join_index(&ci, self.grading.dim()))] +=
                    v * sign;
            }
        }
        GradedOperator {
            grading: self.grading.clone(),
            spaces: self.spaces,
            mat: out,
        }
    }

    /// Super-transposition on one factor: Aᵗ = V⁻¹ Aᵀ V with V acting on
    /// the chosen space.
    pub fn super_transpose_space(&self, space: usize, v: &CMat) -> Result<GradedOperator> {
        let vi = v
            .clone()
            .try_inverse()
            .ok_or(CoreError::Singular)?;
        let g = &self.grading;
        let vop = GradedOperator::promote_one(&GradedOperator::from_single(g, v.clone()), space, self.spaces);
        let viop = GradedOperator::promote_one(&GradedOperator::from_single(g, vi), space, self.spaces);
        Ok(viop.mul(&self.transpose_t_space(space)).mul(&vop))
    }

    /// Parity of the operator from its nonzero entries.
    pub fn parity(&self) -> OperatorParity {
        let mut seen: Option<u8> = None;
        for r in 0..self.dim() {
            for c in 0..self.dim() {
                if self.mat[(r, c)].norm() <= PARITY_SCAN_TOL {
                    continue;
                }
                let p = self.flat_parity(r) ^ self.flat_parity(c);
                match seen {
                    None => seen = Some(p),
                    Some(q) if q == p => {}
                    Some(_) => return OperatorParity::Mixed,
                }
            }
        }
        match seen {
            Some(1) => OperatorParity::Odd,
            _ => OperatorParity::Even,
        }
    }

    /// Super-commutator [A,B} = AB − (−1)^{[A][B]} BA on homogeneous operands.
    pub fn super_commutator(&self, other: &GradedOperator) -> Result<GradedOperator> {
        let pa = match self.parity() {
            OperatorParity::Mixed => return Err(CoreError::MixedParity),
            OperatorParity::Odd => 1u8,
            OperatorParity::Even => 0u8,
        };
        let pb = match other.parity() {
            OperatorParity::Mixed => return Err(CoreError::MixedParity),
            OperatorParity::Odd => 1u8,
            OperatorParity::Even => 0u8,
        };
        let ab = self.mul(other);
        let ba = other.mul(self);
        Ok(if pa & pb == 1 { ab.add(&ba) } else { ab.sub(&ba) })
    }

    /// Ordinary commutator AB − BA.
    pub fn commutator(&self, other: &GradedOperator) -> GradedOperator {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn mul(&self, other: &GradedOperator) -> GradedOperator {
        debug_assert_eq!(self.spaces, other.spaces);
        GradedOperator {
            grading: self.grading.clone(),
            spaces: self.spaces,
            mat: &self.mat * &other.mat,
        }
    }

    pub fn add(&self, other: &GradedOperator) -> GradedOperator {
        GradedOperator {
            grading: self.grading.clone(),
            spaces: self.spaces,
            mat: &self.mat + &other.mat,
        }
    }

    pub fn sub(&self, other: &GradedOperator) -> GradedOperator {
        GradedOperator {
            grading: self.grading.clone(),
            spaces: self.spaces,
            mat: &self.mat - &other.mat,
        }
    }

    pub fn scale(&self, s: C64) -> GradedOperator {
        GradedOperator {
            grading: self.grading.clone(),
            spaces: self.spaces,
            mat: self.mat.map(|v| v * s),
        }
    }

    pub fn neg(&self) -> GradedOperator {
        self.scale(C64::new(-1.0, 0.0))
    }

    pub fn inverse(&self) -> Result<GradedOperator> {
        self.mat
            .clone()
            .try_inverse()
            .map(|m| GradedOperator {
                grading: self.grading.clone(),
                spaces: self.spaces,
                mat: m,
            })
            .ok_or(CoreError::Singular)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.mat.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.mat.iter().all(|v| v.re.is_finite() && v.im.is_finite())
    }

    /// max |self − other| scaled by max(1, ‖self‖, ‖other‖).
    pub fn relative_residual(&self, other: &GradedOperator) -> f64 {
        let diff = self.sub(other).max_abs();
        diff / 1f64.max(self.max_abs()).max(other.max_abs())
    }
}

pub fn split_index(flat: usize, d: usize, spaces: usize) -> Vec<usize> {
    let mut idx = vec![0usize; spaces];
    let mut rem = flat;
    for t in (0..spaces).rev() {
        idx[t] = rem % d;
        rem /= d;
    }
    idx
}

pub fn join_index(idx: &[usize], d: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * d + i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::Grading;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn embed_signs_gl11() {
        let g = Grading::distinguished(1, 1);
        // embed(e11, e11): all parities 0, sign +1
        let e11 = GradedOperator::unit(&g, 0, 0);
        let emb = e11.tensor_embed(&e11).unwrap();
        assert_eq!(emb.matrix()[(0, 0)], c(1.0));
        // embed(e12, e21): unit at row (1,2), col (2,1) with sign
        // (−1)^{[2]([1]+[2])} = −1
        let e12 = GradedOperator::unit(&g, 0, 1);
        let e21 = GradedOperator::unit(&g, 1, 0);
        let emb = e12.tensor_embed(&e21).unwrap();
        // row (1,2) -> flat 0*2+1 = 1; col (2,1) -> flat 1*2+0 = 2
        assert_eq!(emb.matrix()[(1, 2)], c(-1.0));
    }

    #[test]
    fn embedding_homomorphism_all_unit_pairs() {
        // embed(u,v)·embed(w,x) = (−1)^{[v][w]} embed(uw, vx), exactly,
        // for all matrix units of gl(1|1) and gl(2|1).
        for g in [Grading::distinguished(1, 1), Grading::distinguished(2, 1)] {
            let d = g.dim();
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        for l in 0..d {
                            for p in 0..d {
                                for q in 0..d {
                                    for r in 0..d {
                                        for s in 0..d {
                                            let u = GradedOperator::unit(&g, i, j);
                                            let v = GradedOperator::unit(&g, k, l);
                                            let w = GradedOperator::unit(&g, p, q);
                                            let x = GradedOperator::unit(&g, r, s);
                                            let lhs =
                                                u.tensor_embed(&v).unwrap().mul(&w.tensor_embed(&x).unwrap());
                                            let uw = u.mul(&w);
                                            let vx = v.mul(&x);
                                            let sign = if (g.parity(k) ^ g.parity(l))
                                                & (g.parity(p) ^ g.parity(q))
                                                == 1
                                            {
                                                -1.0
                                            } else {
                                                1.0
                                            };
                                            let rhs = uw.tensor_embed(&vx).unwrap().scale(c(sign));
                                            assert!(lhs.sub(&rhs).max_abs() == 0.0);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn super_trace_identity() {
        let g = Grading::distinguished(1, 1);
        assert_eq!(GradedOperator::identity(&g, 1).super_trace(), c(0.0));
        let g = Grading::distinguished(2, 1);
        assert_eq!(GradedOperator::identity(&g, 1).super_trace(), c(1.0));
        // str(I⊗I) = (m−n)^2
        assert_eq!(GradedOperator::identity(&g, 2).super_trace(), c(1.0));
    }

    #[test]
    fn partial_trace_factorized() {
        let g = Grading::distinguished(2, 1);
        // str0(X ⊗ I) = str(X)·I exactly
        let mut x = GradedOperator::zeros(&g, 1);
        x.add_units_scaled(C64::new(0.7, 0.3), &[(0, 0, 0)]);
        x.add_units_scaled(C64::new(-1.1, 0.2), &[(0, 2, 2)]);
        x.add_units_scaled(C64::new(0.4, -0.9), &[(0, 0, 1)]);
        let full = x.tensor_embed(&GradedOperator::identity(&g, 1)).unwrap();
        let tr = full.partial_super_trace_aux().unwrap();
        let expect = GradedOperator::identity(&g, 1).scale(x.super_trace());
        assert!(tr.sub(&expect).max_abs() < 1e-15);
    }

    #[test]
    fn partial_trace_e11_projector() {
        // str0(embed(e11, Y)) = Y for a random-ish Y (index 1 is bosonic)
        let g = Grading::distinguished(1, 1);
        let e11 = GradedOperator::unit(&g, 0, 0);
        let mut y = GradedOperator::zeros(&g, 1);
        y.add_units_scaled(C64::new(0.2, 0.5), &[(0, 0, 1)]);
        y.add_units_scaled(C64::new(-0.9, 0.1), &[(0, 1, 1)]);
        y.add_units_scaled(C64::new(0.3, -0.7), &[(0, 1, 0)]);
        let tr = e11.tensor_embed(&y).unwrap().partial_super_trace_aux().unwrap();
        assert!(tr.sub(&y).max_abs() < 1e-15);
    }

    #[test]
    fn partial_trace_single_space_errors() {
        let g = Grading::distinguished(1, 1);
        assert!(GradedOperator::identity(&g, 1)
            .partial_super_trace_aux()
            .is_err());
    }

    #[test]
    fn transpose_signs() {
        let g = Grading::distinguished(1, 1);
        // (e12)^T = −e21
        let t = GradedOperator::unit(&g, 0, 1).transpose_t();
        assert_eq!(t.matrix()[(1, 0)], c(-1.0));
        // (e11)^T = e11
        let t = GradedOperator::unit(&g, 0, 0).transpose_t();
        assert_eq!(t.matrix()[(0, 0)], c(1.0));
    }

    #[test]
    fn double_transpose_even_identity() {
        // (Aᵀ)ᵀ = A for even A; in general (Aᵀ)ᵀ = (−1)^{[i]+[j]} A on units
        let g = Grading::distinguished(1, 1);
        for i in 0..2 {
            for j in 0..2 {
                let a = GradedOperator::unit(&g, i, j);
                let tt = a.transpose_t().transpose_t();
                let sign = if (g.parity(i) ^ g.parity(j)) == 1 { -1.0 } else { 1.0 };
                assert!(tt.sub(&a.scale(c(sign))).max_abs() == 0.0);
            }
        }
    }

    #[test]
    fn transpose_antihomomorphism() {
        // (AB)^T = (−1)^{[A][B]} B^T A^T on all unit pairs of gl(1|1)
        let g = Grading::distinguished(1, 1);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let a = GradedOperator::unit(&g, i, j);
                        let b = GradedOperator::unit(&g, k, l);
                        let lhs = a.mul(&b).transpose_t();
                        let sign = if (g.parity(i) ^ g.parity(j)) & (g.parity(k) ^ g.parity(l)) == 1
                        {
                            -1.0
                        } else {
                            1.0
                        };
                        let rhs = b.transpose_t().mul(&a.transpose_t()).scale(c(sign));
                        assert!(lhs.sub(&rhs).max_abs() == 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn partial_transpose_both_spaces_vs_tensor() {
        // double partial-T on both spaces of A⊗B equals
        // (−1)^{[A][B]} (Aᵀ)⊗(Bᵀ) on gl(1|1) units; the sign is forced
        // by the anti-homomorphism property of the graded transpose
        let g = Grading::distinguished(1, 1);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let a = GradedOperator::unit(&g, i, j);
                        let b = GradedOperator::unit(&g, k, l);
                        let emb = a.tensor_embed(&b).unwrap();
                        let lhs = emb.transpose_t_space(0).transpose_t_space(1);
                        let sign = if (g.parity(i) ^ g.parity(j)) & (g.parity(k) ^ g.parity(l)) == 1
                        {
                            -1.0
                        } else {
                            1.0
                        };
                        let rhs = a
                            .transpose_t()
                            .tensor_embed(&b.transpose_t())
                            .unwrap()
                            .scale(c(sign));
                        assert!(lhs.sub(&rhs).max_abs() == 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn super_commutator_examples() {
        let g = Grading::distinguished(1, 1);
        // [e11, e12} = e12 (parities 0 and 1: ordinary commutator)
        let e11 = GradedOperator::unit(&g, 0, 0);
        let e12 = GradedOperator::unit(&g, 0, 1);
        let got = e11.super_commutator(&e12).unwrap();
        assert!(got.sub(&e12).max_abs() == 0.0);
        // [e12, e21} = e11 + e22 (both odd: anticommutator)
        let e21 = GradedOperator::unit(&g, 1, 0);
        let got = e12.super_commutator(&e21).unwrap();
        let expect = GradedOperator::identity(&g, 1);
        assert!(got.sub(&expect).max_abs() == 0.0);
        // [A, A} = 2A² for odd A
        let got = e12.super_commutator(&e12).unwrap();
        let expect = e12.mul(&e12).scale(c(2.0));
        assert!(got.sub(&expect).max_abs() == 0.0);
    }

    #[test]
    fn mixed_parity_rejected() {
        let g = Grading::distinguished(1, 1);
        let mixed = GradedOperator::unit(&g, 0, 0).add(&GradedOperator::unit(&g, 0, 1));
        assert_eq!(mixed.parity(), OperatorParity::Mixed);
        assert!(mixed
            .super_commutator(&GradedOperator::unit(&g, 0, 0))
            .is_err());
    }

    #[test]
    fn str_of_supercommutator_vanishes() {
        // str([A,B}) = 0 on random homogeneous pairs
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let g = Grading::distinguished(2, 1);
        let d = g.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            // random homogeneous operators: pick a target parity and fill
            // only entries with [i]+[j] equal to it
            let pa = rng.random_range(0..2) as u8;
            let pb = rng.random_range(0..2) as u8;
            let mut a = GradedOperator::zeros(&g, 1);
            let mut b = GradedOperator::zeros(&g, 1);
            for i in 0..d {
                for j in 0..d {
                    let p = g.parity(i) ^ g.parity(j);
                    let va = C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
                    let vb = C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5);
                    if p == pa {
                        a.add_units_scaled(va, &[(0, i, j)]);
                    }
                    if p == pb {
                        b.add_units_scaled(vb, &[(0, i, j)]);
                    }
                }
            }
            let sc = a.super_commutator(&b).unwrap();
            assert!(sc.super_trace().norm() < 1e-12);
        }
    }

    #[test]
    fn promote_two_matches_direct_embedding() {
        let g = Grading::distinguished(1, 1);
        // build e12 ⊗ e21 two-space, then promote to (0,2) of 3 and
        // compare against unit placement
        let x = GradedOperator::unit(&g, 0, 1)
            .tensor_embed(&GradedOperator::unit(&g, 1, 0))
            .unwrap();
        let promoted = GradedOperator::promote_two(&x, 0, 2, 3);
        let mut direct = GradedOperator::zeros(&g, 3);
        direct.add_units_scaled(C64::new(1.0, 0.0), &[(0, 0, 1), (2, 1, 0)]);
        assert!(promoted.sub(&direct).max_abs() == 0.0);
        // and promotion to adjacent spaces reproduces embed with identity
        let promoted01 = GradedOperator::promote_two(&x, 0, 1, 3);
        let direct01 = x.tensor_embed(&GradedOperator::identity(&g, 1)).unwrap();
        assert!(promoted01.sub(&direct01).max_abs() == 0.0);
    }
}
