//! Dense small matrices over the omega-coordinate chart and the Weyl
//! group generated from simple reflections by closure.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cast, Real};

/// Row-major square matrix acting on omega-coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordMat<T> {
    pub n: usize,
    pub data: Vec<T>,
}

impl<T: Real> CoordMat<T> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        CoordMat { n, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn mul(&self, other: &CoordMat<T>) -> CoordMat<T> {
        let n = self.n;
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] = data[i * n + j] + a * other.at(k, j);
                }
            }
        }
        CoordMat { n, data }
    }

    pub fn apply_real(&self, v: &[T]) -> Vec<T> {
        let n = self.n;
        let mut out = vec![T::zero(); n];
        for i in 0..n {
            let mut acc = T::zero();
            for j in 0..n {
                acc = acc + self.at(i, j) * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn apply_complex(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.n;
        let mut out = vec![Complex::new(T::zero(), T::zero()); n];
        for i in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..n {
                acc = acc + v[j] * self.at(i, j);
            }
            out[i] = acc;
        }
        out
    }

    pub fn approx_eq(&self, other: &CoordMat<T>, tol: T) -> bool {
        self.data
            .iter()
            .zip(other.data.iter())
            .all(|(a, b)| (*a - *b).abs() <= tol)
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> T {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = T::one();
        for col in 0..n {
            let mut piv = col;
            for r in (col + 1)..n {
                if a[r * n + col].abs() > a[piv * n + col].abs() {
                    piv = r;
                }
            }
            if a[piv * n + col].abs() == T::zero() {
                return T::zero();
            }
            if piv != col {
                for j in 0..n {
                    a.swap(col * n + j, piv * n + j);
                }
                det = -det;
            }
            let d = a[col * n + col];
            det = det * d;
            for r in (col + 1)..n {
                let f = a[r * n + col] / d;
                for j in col..n {
                    a[r * n + j] = a[r * n + j] - f * a[col * n + j];
                }
            }
        }
        det
    }
}

/// Solve the dense linear system `A x = b` (small n, partial pivoting).
pub fn solve_dense<T: Real>(a: &[T], b: &[T], n: usize) -> Result<Vec<T>> {
    let mut m = vec![T::zero(); n * (n + 1)];
    for i in 0..n {
        for j in 0..n {
            m[i * (n + 1) + j] = a[i * n + j];
        }
        m[i * (n + 1) + n] = b[i];
    }
    for col in 0..n {
        let mut piv = col;
        for r in (col + 1)..n {
            if m[r * (n + 1) + col].abs() > m[piv * (n + 1) + col].abs() {
                piv = r;
            }
        }
        if m[piv * (n + 1) + col].abs() < T::epsilon() * cast::<T>(1e3) {
            return Err(Error::InvariantFailure("singular linear system".into()));
        }
        if piv != col {
            for j in 0..=n {
                m.swap(col * (n + 1) + j, piv * (n + 1) + j);
            }
        }
        let d = m[col * (n + 1) + col];
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = m[r * (n + 1) + col] / d;
            if f == T::zero() {
                continue;
            }
            for j in col..=n {
                m[r * (n + 1) + j] = m[r * (n + 1) + j] - f * m[col * (n + 1) + j];
            }
        }
    }
    Ok((0..n)
        .map(|i| m[i * (n + 1) + n] / m[i * (n + 1) + i])
        .collect())
}

/// Invert a dense matrix column by column.
pub fn invert_dense<T: Real>(a: &[T], n: usize) -> Result<Vec<T>> {
    let mut inv = vec![T::zero(); n * n];
    for col in 0..n {
        let mut e = vec![T::zero(); n];
        e[col] = T::one();
        let x = solve_dense(a, &e, n)?;
        for row in 0..n {
            inv[row * n + col] = x[row];
        }
    }
    Ok(inv)
}

/// Weyl group elements as coordinate matrices, with cached determinants.
#[derive(Debug, Clone)]
pub struct WeylGroup<T> {
    pub elements: Vec<CoordMat<T>>,
    pub dets: Vec<T>,
    /// Index of the longest element.
    pub w0: usize,
}

/// Breadth-first closure from generators, with tolerance deduplication.
pub fn generate_closure<T: Real>(
    generators: &[CoordMat<T>],
    rank: usize,
    expected_order: u128,
    tol: T,
) -> Result<Vec<CoordMat<T>>> {
    let mut elements = vec![CoordMat::identity(rank)];
    let mut queue = vec![0usize];
    let cap = expected_order as usize * 2 + 8;
    while let Some(idx) = queue.pop() {
        let current = elements[idx].clone();
        for g in generators {
            let next = current.mul(g);
            if !elements.iter().any(|e| e.approx_eq(&next, tol)) {
                elements.push(next);
                queue.push(elements.len() - 1);
                if elements.len() > cap {
                    return Err(Error::InvariantFailure(format!(
                        "Weyl closure exceeded expected order {expected_order}"
                    )));
                }
            }
        }
    }
    if elements.len() as u128 != expected_order {
        return Err(Error::InvariantFailure(format!(
            "Weyl order {} differs from the known order {expected_order}",
            elements.len()
        )));
    }
    Ok(elements)
}
