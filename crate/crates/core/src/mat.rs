//! Dense complex matrix carrier types and small numeric helpers used
//! throughout the toolkit.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;
pub type RMat = DMatrix<f64>;
pub type RVec = DVector<f64>;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Independent reproducible generator derived from a master seed.
///
/// Streams with distinct indices never overlap, so trials, paths and
/// campaign-level draws can be generated in any order (or in parallel)
/// and still replay bit-identically.
pub fn substream(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

/// Standard normal via Box-Muller.
pub fn draw_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen::<f64>().max(1e-300);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Circularly symmetric complex Gaussian CN(0, 1).
pub fn draw_cn<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(draw_normal(rng), draw_normal(rng)) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn draw_cn_vec<R: Rng + ?Sized>(len: usize, rng: &mut R) -> CVec {
    CVec::from_fn(len, |_, _| draw_cn(rng))
}

pub fn draw_cn_mat<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMat {
    CMat::from_fn(rows, cols, |_, _| draw_cn(rng))
}

/// (A + A^H) / 2 in place.
pub fn hermitianize(m: &mut CMat) {
    assert_eq!(m.nrows(), m.ncols());
    let n = m.nrows();
    for i in 0..n {
        m[(i, i)] = Complex64::new(m[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = 0.5 * (m[(i, j)] + m[(j, i)].conj());
            m[(i, j)] = avg;
            m[(j, i)] = avg.conj();
        }
    }
}

pub fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn rel_frobenius_diff(a: &CMat, b: &CMat) -> f64 {
    let denom = frobenius(b);
    if denom == 0.0 {
        return frobenius(a);
    }
    frobenius(&(a - b)) / denom
}

/// Kronecker product of two column vectors (a ⊗ b).
pub fn kron_vec(a: &CVec, b: &CVec) -> CVec {
    let mut out = CVec::zeros(a.len() * b.len());
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i * b.len() + j] = ai * bj;
        }
    }
    out
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues descending.
///
/// Eigenvector phases are fixed so that the first entry with modulus above
/// 1e-12 is real positive, which makes repeated runs reproducible.
pub fn hermitian_eigen_desc(m: &CMat) -> (Vec<f64>, CMat) {
    assert_eq!(m.nrows(), m.ncols());
    let eig = m.clone().symmetric_eigen();
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut values = Vec::with_capacity(n);
    let mut vectors = CMat::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        values.push(eig.eigenvalues[src]);
        let mut col = eig.eigenvectors.column(src).clone_owned();
        if let Some(lead) = col.iter().find(|z| z.norm() > 1e-12) {
            let phase = lead.conj() / lead.norm();
            col *= phase;
        }
        vectors.set_column(dst, &col);
    }
    (values, vectors)
}

/// Inverse of a Hermitian positive-definite matrix via Cholesky.
pub fn hpd_inverse(m: &CMat) -> Option<CMat> {
    m.clone().cholesky().map(|c| c.inverse())
}

/// log-determinant of a Hermitian positive-definite matrix.
pub fn hpd_log_det(m: &CMat) -> Option<f64> {
    m.clone()
        .cholesky()
        .map(|c| 2.0 * c.l_dirty().diagonal().iter().map(|z| z.re.ln()).sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> CMat {
        let a = draw_cn_mat(n, n, rng);
        let mut h = &a * a.adjoint();
        hermitianize(&mut h);
        h
    }

    #[test]
    fn eigen_reconstructs_hermitian_matrix() {
        let mut rng = substream(7, 0);
        for _ in 0..20 {
            let h = random_hermitian(6, &mut rng);
            let (vals, vecs) = hermitian_eigen_desc(&h);
            let d = CMat::from_diagonal(&CVec::from_iterator(
                6,
                vals.iter().map(|&v| Complex64::new(v, 0.0)),
            ));
            let recon = &vecs * d * vecs.adjoint();
            assert!(rel_frobenius_diff(&recon, &h) < 1e-10);
            for w in vals.windows(2) {
                assert!(w[0] >= w[1] - 1e-12);
            }
            // orthonormal columns
            let gram = vecs.adjoint() * &vecs;
            assert!(rel_frobenius_diff(&gram, &CMat::identity(6, 6)) < 1e-10);
        }
    }

    #[test]
    fn eigen_sign_convention_is_reproducible() {
        let mut rng = substream(8, 0);
        let h = random_hermitian(5, &mut rng);
        let (_, v1) = hermitian_eigen_desc(&h);
        let (_, v2) = hermitian_eigen_desc(&h);
        assert_eq!(v1, v2);
        for c in v1.column_iter() {
            let lead = c.iter().find(|z| z.norm() > 1e-12).unwrap();
            assert!(lead.im.abs() < 1e-10 && lead.re > 0.0);
        }
    }

    #[test]
    fn cholesky_inverse_and_logdet() {
        let mut rng = substream(9, 0);
        let h = random_hermitian(5, &mut rng) + CMat::identity(5, 5);
        let inv = hpd_inverse(&h).unwrap();
        assert!(rel_frobenius_diff(&(&h * &inv), &CMat::identity(5, 5)) < 1e-10);
        let (vals, _) = hermitian_eigen_desc(&h);
        let direct: f64 = vals.iter().map(|v| v.ln()).sum();
        assert!((hpd_log_det(&h).unwrap() - direct).abs() < 1e-8);
    }

    #[test]
    fn substreams_are_reproducible_and_distinct() {
        let a: Vec<f64> = substream(1, 3).sample_iter(rand::distributions::Standard).take(4).collect();
        let b: Vec<f64> = substream(1, 3).sample_iter(rand::distributions::Standard).take(4).collect();
        let c: Vec<f64> = substream(1, 4).sample_iter(rand::distributions::Standard).take(4).collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn cn_draws_have_unit_variance() {
        let mut rng = substream(10, 0);
        let n = 200_000;
        let mean_sq: f64 = (0..n).map(|_| draw_cn(&mut rng).norm_sqr()).sum::<f64>() / n as f64;
        assert!((mean_sq - 1.0).abs() < 0.02);
    }
}
