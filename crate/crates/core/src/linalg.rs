//! Small dense helpers on top of nalgebra.

use alloc::vec::Vec;
use nalgebra::{DMatrix, DVector};

/// Real rank with singular values cut at `rel_tol * sigma_max`.
pub fn real_rank(m: &DMatrix<f64>, rel_tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * max).count()
}

/// Smallest singular value.
pub fn min_singular_value(m: &DMatrix<f64>) -> f64 {
    m.clone().svd(false, false).singular_values.iter().cloned().fold(f64::INFINITY, f64::min)
}

/// Unit vector spanning the direction of smallest singular value of a square matrix.
pub fn null_direction(m: &DMatrix<f64>) -> DVector<f64> {
    let svd = m.clone().svd(false, true);
    let v_t = svd.v_t.expect("v_t requested");
    let (idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, &s)| if s < acc.1 { (i, s) } else { acc });
    v_t.row(idx).transpose()
}

/// Minimum-norm solution of an underdetermined full-row-rank system `a x = b`.
pub fn least_norm_solve(a: &DMatrix<f64>, b: &DVector<f64>) -> Option<DVector<f64>> {
    let gram = a * a.transpose();
    let y = gram.lu().solve(b)?;
    Some(a.transpose() * y)
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let sym = (m + m.transpose()) * 0.5;
    let mut ev: Vec<f64> = sym.symmetric_eigen().eigenvalues.iter().cloned().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
    ev
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_rank_one_matrix() {
        let m = DMatrix::from_row_slice(2, 3, &[1.0, 2.0, 3.0, 2.0, 4.0, 6.0]);
        assert_eq!(real_rank(&m, 1e-9), 1);
        assert_eq!(real_rank(&DMatrix::zeros(2, 2), 1e-9), 0);
    }

    #[test]
    fn null_direction_is_kernel() {
        let m = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 1.0]);
        let v = null_direction(&m);
        assert!((&m * &v).norm() < 1e-12);
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn least_norm() {
        let a = DMatrix::from_row_slice(1, 2, &[1.0, 1.0]);
        let x = least_norm_solve(&a, &DVector::from_vec(alloc::vec![2.0])).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12);
    }
}
