//! Small dense-matrix analysis helpers: eigenvalues via complex Schur,
//! subspace rank, and span membership over ℂ.

use crate::error::{CoreError, Result};
use crate::{C64, CMat};

/// Eigenvalues of a general complex matrix (diagonal of the Schur factor).
pub fn eigenvalues(m: &CMat) -> Result<Vec<C64>> {
    let schur = m
        .clone()
        .try_schur(1e-13, 100_000)
        .ok_or(CoreError::Singular)?;
    let (_q, t) = schur.unpack();
    Ok(t.diagonal().iter().copied().collect())
}

/// Rank of the span of `vectors` (each a flattened matrix) by Gaussian
/// elimination with partial pivoting.
pub fn span_rank(vectors: &[Vec<C64>], tol: f64) -> usize {
    let mut rows: Vec<Vec<C64>> = vectors.to_vec();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    let mut col = 0;
    while col < ncols && rank < rows.len() {
        // pivot with largest magnitude in this column
        let (best, mag) = rows[rank..]
            .iter()
            .enumerate()
            .map(|(i, r)| (i + rank, r[col].norm()))
            .fold((rank, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if mag <= tol {
            col += 1;
            continue;
        }
        rows.swap(rank, best);
        let pivot = rows[rank][col];
        for r in rank + 1..rows.len() {
            let f = rows[r][col] / pivot;
            if f.norm() == 0.0 {
                continue;
            }
            for c in col..ncols {
                let s = rows[rank][c];
                rows[r][c] -= f * s;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Distance of `target` from the span of `basis` (least squares via
/// normal equations on the small Gram system).
pub fn span_distance(basis: &[Vec<C64>], target: &[C64]) -> f64 {
    let k = basis.len();
    if k == 0 {
        return target.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    }
    let mut gram = CMat::zeros(k, k);
    let mut rhs = nalgebra::DVector::<C64>::zeros(k);
    for i in 0..k {
        for j in 0..k {
            let mut acc = C64::new(0.0, 0.0);
            for t in 0..target.len() {
                acc += basis[i][t].conj() * basis[j][t];
            }
            gram[(i, j)] = acc;
        }
        let mut acc = C64::new(0.0, 0.0);
        for t in 0..target.len() {
            acc += basis[i][t].conj() * target[t];
        }
        rhs[i] = acc;
    }
    // regularize slightly in case the basis is numerically degenerate
    for i in 0..k {
        gram[(i, i)] += C64::new(1e-14, 0.0);
    }
    let coeffs = match gram.clone().try_inverse() {
        Some(inv) => inv * rhs,
        None => return f64::INFINITY,
    };
    let mut dist2 = 0.0;
    for t in 0..target.len() {
        let mut fit = C64::new(0.0, 0.0);
        for i in 0..k {
            fit += coeffs[i] * basis[i][t];
        }
        dist2 += (target[t] - fit).norm_sqr();
    }
    dist2.sqrt()
}

/// Cluster sorted-by-value complex numbers into degeneracy multiplets.
/// Two eigenvalues belong to the same cluster when their distance is
/// below `gap`. Returns multiplet sizes sorted descending, plus a flag
/// when some pair sits within 10× of the threshold (ambiguous).
pub fn cluster_multiplets(values: &[C64], gap: f64) -> (Vec<usize>, bool) {
    let mut vals: Vec<C64> = values.to_vec();
    vals.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut assigned = vec![false; vals.len()];
    let mut sizes = Vec::new();
    let mut ambiguous = false;
    for i in 0..vals.len() {
        if assigned[i] {
            continue;
        }
        // grow the cluster transitively
        let mut members = vec![i];
        assigned[i] = true;
        let mut frontier = vec![i];
        while let Some(f) = frontier.pop() {
            for j in 0..vals.len() {
                if assigned[j] {
                    continue;
                }
                let dist = (vals[f] - vals[j]).norm();
                if dist < gap {
                    assigned[j] = true;
                    members.push(j);
                    frontier.push(j);
                } else if dist < 10.0 * gap {
                    ambiguous = true;
                }
            }
        }
        sizes.push(members.len());
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    (sizes, ambiguous)
}
