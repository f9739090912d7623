//! Dense symmetric eigendecomposition and the matrix functions built on it.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};

/// Relative tolerance for treating two eigenvalues as equal.
pub const GROUPING_TOL: f64 = 1e-8;

/// Eigenpairs of a real symmetric matrix, sorted by descending eigenvalue.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Column `j` is the unit eigenvector of `eigenvalues[j]`.
    pub eigenvectors: DMatrix<f64>,
    /// Distinct eigenvalues (descending) with their multiplicities.
    pub multiplicities: Vec<(f64, usize)>,
    norm: f64,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Frobenius norm of the decomposed matrix.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// Absolute tolerance used for eigenvalue comparisons.
    pub fn tolerance(&self) -> f64 {
        GROUPING_TOL * self.norm.max(1.0)
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    /// Eigenvalues in ascending order.
    pub fn ascending(&self) -> Vec<f64> {
        self.eigenvalues.iter().rev().copied().collect()
    }

    /// How many eigenvalues lie within tolerance of `value`.
    pub fn count_near(&self, value: f64) -> usize {
        let tol = self.tolerance();
        self.eigenvalues.iter().filter(|&&l| (l - value).abs() <= tol).count()
    }

    /// `V f(Λ) Vᵀ`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> DMatrix<f64> {
        let v = &self.eigenvectors;
        let d = DVector::from_iterator(self.n(), self.eigenvalues.iter().map(|&l| f(l)));
        let mut scaled = v.clone();
        for (mut col, &dj) in scaled.column_iter_mut().zip(d.iter()) {
            col *= dj;
        }
        let out = scaled * v.transpose();
        symmetrize(out)
    }

    pub fn reconstruct(&self) -> DMatrix<f64> {
        self.apply(|l| l)
    }
}

pub(crate) fn symmetrize(m: DMatrix<f64>) -> DMatrix<f64> {
    (&m + m.transpose()) * 0.5
}

pub(crate) fn check_square(a: &DMatrix<f64>) -> Result<()> {
    if a.nrows() != a.ncols() {
        return Err(Error::NotSquare(a.nrows(), a.ncols()));
    }
    Ok(())
}

pub fn check_symmetric(a: &DMatrix<f64>) -> Result<()> {
    check_square(a)?;
    let scale = a.amax().max(1.0);
    let n = a.nrows();
    for i in 0..n {
        for j in i + 1..n {
            if (a[(i, j)] - a[(j, i)]).abs() > 1e-12 * scale {
                return Err(Error::NotSymmetric);
            }
        }
    }
    Ok(())
}

fn decompose(a: &DMatrix<f64>) -> Result<SymmetricEigen<f64, nalgebra::Dyn>> {
    check_symmetric(a)?;
    SymmetricEigen::try_new(a.clone(), f64::EPSILON, 0).ok_or(Error::NoConvergence)
}

/// Full eigendecomposition of a real symmetric matrix.
pub fn eig_symmetric(a: &DMatrix<f64>) -> Result<Spectrum> {
    let n = a.nrows();
    let norm = a.norm();
    if n == 0 {
        return Ok(Spectrum {
            eigenvalues: vec![],
            eigenvectors: DMatrix::zeros(0, 0),
            multiplicities: vec![],
            norm,
        });
    }
    let eig = decompose(a)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let eigenvectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    let multiplicities = group(&eigenvalues, GROUPING_TOL * norm.max(1.0));
    Ok(Spectrum { eigenvalues, eigenvectors, multiplicities, norm })
}

/// Eigenvalues only, descending. Cheaper than [`eig_symmetric`] for large n.
pub fn eigenvalues_symmetric(a: &DMatrix<f64>) -> Result<Vec<f64>> {
    check_symmetric(a)?;
    let mut vals: Vec<f64> = a.clone().symmetric_eigenvalues().iter().copied().collect();
    if vals.iter().any(|v| !v.is_finite()) {
        return Err(Error::NoConvergence);
    }
    vals.sort_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

/// Largest eigenvalue modulus. Symmetric input takes the symmetric solver;
/// anything else goes through a real Schur decomposition.
pub fn spectral_radius(a: &DMatrix<f64>) -> Result<f64> {
    check_square(a)?;
    if a.nrows() == 0 {
        return Ok(0.0);
    }
    if check_symmetric(a).is_ok() {
        let vals = eigenvalues_symmetric(a)?;
        return Ok(vals[0].abs().max(vals[vals.len() - 1].abs()));
    }
    let vals = a.clone().complex_eigenvalues();
    let rho = vals.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if rho.is_finite() {
        Ok(rho)
    } else {
        Err(Error::NoConvergence)
    }
}

fn group(sorted_desc: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=sorted_desc.len() {
        if i == sorted_desc.len() || sorted_desc[i - 1] - sorted_desc[i] > tol {
            let block = &sorted_desc[start..i];
            out.push((block.iter().sum::<f64>() / block.len() as f64, block.len()));
            start = i;
        }
    }
    out
}

/// Scalar functions applied through the eigendecomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixFunction {
    Exp,
    Sinh,
    Cosh,
    /// `(I - A/η)⁻¹`.
    Resolvent(f64),
    /// `exp(βA)`.
    ScaledExp(f64),
}

pub fn matrix_function(a: &DMatrix<f64>, f: MatrixFunction) -> Result<DMatrix<f64>> {
    let spec = eig_symmetric(a)?;
    Ok(match f {
        MatrixFunction::Exp => spec.apply(f64::exp),
        MatrixFunction::Sinh => spec.apply(f64::sinh),
        MatrixFunction::Cosh => spec.apply(f64::cosh),
        MatrixFunction::ScaledExp(beta) => spec.apply(|l| (beta * l).exp()),
        MatrixFunction::Resolvent(eta) => return resolvent_with(&spec, a, eta),
    })
}

/// `(I - A/η)⁻¹` by LU solve after checking that η is not an eigenvalue.
pub fn resolvent(a: &DMatrix<f64>, eta: f64) -> Result<DMatrix<f64>> {
    let spec = eig_symmetric(a)?;
    resolvent_with(&spec, a, eta)
}

fn resolvent_with(spec: &Spectrum, a: &DMatrix<f64>, eta: f64) -> Result<DMatrix<f64>> {
    if eta == 0.0 || spec.count_near(eta) > 0 {
        return Err(Error::SingularResolvent(eta));
    }
    let n = a.nrows();
    let m = DMatrix::identity(n, n) - a / eta;
    let inv = m
        .lu()
        .solve(&DMatrix::identity(n, n))
        .ok_or(Error::SingularResolvent(eta))?;
    Ok(symmetrize(inv))
}

/// Moore-Penrose inverse of a connected graph's Laplacian, by the spectral sum
/// over the nonzero eigenvalues.
pub fn laplacian_pseudoinverse(l: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let spec = eig_symmetric(l)?;
    let tol = spec.tolerance();
    let zeros = spec.eigenvalues.iter().filter(|x| x.abs() <= tol).count();
    if zeros > 1 {
        return Err(Error::Disconnected);
    }
    let mut lp = spec.apply(|mu| if mu.abs() <= tol { 0.0 } else { 1.0 / mu });
    // Remove the residual constant component left by rounding.
    let n = l.nrows() as f64;
    let mean = lp.sum() / (n * n);
    let row_means: Vec<f64> = lp.row_iter().map(|r| r.sum() / n).collect();
    for i in 0..lp.nrows() {
        for j in 0..lp.ncols() {
            lp[(i, j)] += mean - row_means[i] - row_means[j];
        }
    }
    Ok(lp)
}

/// `L⁺ = (L + J/n)⁻¹ - J/n` for a connected graph's Laplacian.
pub fn laplacian_pseudoinverse_direct(l: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    check_symmetric(l)?;
    let n = l.nrows();
    let j = DMatrix::from_element(n, n, 1.0 / n as f64);
    let inv = (l + &j).lu().solve(&DMatrix::identity(n, n)).ok_or(Error::Disconnected)?;
    if inv.iter().any(|x| !x.is_finite()) {
        return Err(Error::Disconnected);
    }
    Ok(symmetrize(inv - j))
}
