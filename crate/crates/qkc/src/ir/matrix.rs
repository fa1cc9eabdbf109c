//! Small dense complex matrices, used for gate definitions and for checking
//! circuit identities. These never grow beyond 8x8 in production code.

use num_complex::Complex64;

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    dim: usize,
    entries: Vec<Complex64>,
}

impl CMat {
    pub fn zero(dim: usize) -> Self {
        CMat {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from separate real and imaginary parts, row-major.
    pub fn from_parts(dim: usize, real: &[f64], imag: &[f64]) -> Self {
        assert_eq!(real.len(), dim * dim);
        assert_eq!(imag.len(), dim * dim);
        CMat {
            dim,
            entries: real
                .iter()
                .zip(imag)
                .map(|(&r, &i)| Complex64::new(r, i))
                .collect(),
        }
    }

    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        CMat { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.entries.iter().map(|z| z.re).collect()
    }

    pub fn imag_parts(&self) -> Vec<f64> {
        self.entries.iter().map(|z| z.im).collect()
    }

    pub fn mul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = CMat::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    out[(r, c)] += a * rhs[(k, c)];
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> CMat {
        let n = self.dim;
        let mut out = CMat::zero(n);
        for r in 0..n {
            for c in 0..n {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &CMat) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise difference after aligning `other`'s global phase to
    /// `self` at the largest-magnitude entry.
    pub fn max_abs_diff_up_to_phase(&self, other: &CMat) -> f64 {
        assert_eq!(self.dim, other.dim);
        let (mut best, mut idx) = (0.0, 0);
        for (k, z) in self.entries.iter().enumerate() {
            if z.norm() > best {
                best = z.norm();
                idx = k;
            }
        }
        if best == 0.0 || other.entries[idx].norm() == 0.0 {
            return self.max_abs_diff(other);
        }
        let phase = self.entries[idx] / other.entries[idx];
        let phase = phase / phase.norm();
        let aligned = CMat {
            dim: other.dim,
            entries: other.entries.iter().map(|z| z * phase).collect(),
        };
        self.max_abs_diff(&aligned)
    }

    /// True when `U U^dagger = I` within `tol` entrywise.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.mul(&self.adjoint())
            .max_abs_diff(&CMat::identity(self.dim))
            <= tol
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.entries[r * self.dim + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[r * self.dim + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_unitary() {
        assert!(CMat::identity(4).is_unitary(1e-15));
    }

    #[test]
    fn phase_alignment_ignores_global_phase() {
        let i = Complex64::new(0.0, 1.0);
        let a = CMat::from_entries(
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        );
        let b = CMat {
            dim: 2,
            entries: a.entries.iter().map(|z| z * (-i)).collect(),
        };
        assert!(a.max_abs_diff(&b) > 1.0);
        assert!(a.max_abs_diff_up_to_phase(&b) < 1e-15);
    }
}
