//! Exact feasibility of `λ ≥ 0, Σλ = 1, Σ λ_g g ≤ a` by phase-one simplex.
//!
//! Arithmetic is over big rationals and Bland's rule prevents cycling, so the
//! answer is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Returns a feasible `λ` (one entry per point) or `None`.
pub fn convex_combination_below(points: &[Vec<u32>], a: &[u32]) -> Option<Vec<BigRational>> {
    let t = points.len();
    let n = a.len();
    if t == 0 {
        return None;
    }
    // Columns: λ_0..λ_{t-1}, s_0..s_{n-1}, w. Rows: n bound rows, one sum row.
    let cols = t + n + 1;
    let w = t + n;
    let q = |v: u32| BigRational::from_integer(BigInt::from(v));
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(n + 1);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(n + 1);
    for j in 0..n {
        let mut row = vec![BigRational::zero(); cols];
        for (g, p) in points.iter().enumerate() {
            row[g] = q(p[j]);
        }
        row[t + j] = BigRational::one();
        tab.push(row);
        rhs.push(q(a[j]));
    }
    let mut row = vec![BigRational::zero(); cols];
    for cell in row.iter_mut().take(t) {
        *cell = BigRational::one();
    }
    row[w] = BigRational::one();
    tab.push(row);
    rhs.push(BigRational::one());
    let mut basis: Vec<usize> = (0..n).map(|j| t + j).chain(std::iter::once(w)).collect();

    // Reduced costs of "minimize w".
    let mut z: Vec<BigRational> = (0..cols)
        .map(|j| {
            let c = if j == w { BigRational::one() } else { BigRational::zero() };
            c - &tab[n][j]
        })
        .collect();
    let mut z_rhs = -rhs[n].clone();

    loop {
        let Some(enter) = (0..cols).find(|&j| z[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..=n {
            if tab[i][enter].is_positive() {
                let ratio = &rhs[i] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (r, _) = leave.expect("bounded phase-one objective");
        let piv = tab[r][enter].clone();
        for v in tab[r].iter_mut() {
            *v = &*v / &piv;
        }
        rhs[r] = &rhs[r] / &piv;
        let prow = tab[r].clone();
        let prhs = rhs[r].clone();
        for i in 0..=n {
            if i != r && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for (v, p) in tab[i].iter_mut().zip(&prow) {
                    *v -= &f * p;
                }
                rhs[i] -= &f * &prhs;
            }
        }
        let f = z[enter].clone();
        for (v, p) in z.iter_mut().zip(&prow) {
            *v -= &f * p;
        }
        z_rhs -= &f * &prhs;
        basis[r] = enter;
    }
    if !z_rhs.is_zero() {
        return None;
    }
    let mut lambda = vec![BigRational::zero(); t];
    for (i, &b) in basis.iter().enumerate() {
        if b < t {
            lambda[b] = rhs[i].clone();
        }
    }
    Some(lambda)
}
