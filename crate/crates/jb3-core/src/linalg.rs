//! Dense real linear-algebra substrate: symmetric eigendecomposition, SVD,
//! subspace arithmetic, matrix exponential, and the shared tolerance policy.
//!
//! Everything here is plain `f64` dense storage; the systems this crate
//! targets live in dimension well below 200.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{JbError, Result};

pub type Matrix = DMatrix<f64>;
pub type Vector = DVector<f64>;

/// Numerical policy shared by every operation in the crate.
///
/// All randomness flows through generators derived from `seed`, so two runs
/// with the same configuration produce bit-identical results.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Tolerances {
    /// Residual threshold for algebraic identities and certificates.
    pub residual_tol: f64,
    /// Threshold for grouping eigenvalues when forming spectral subspaces.
    pub cluster_tol: f64,
    /// Default number of random samples for statistical checks.
    pub sample_count: usize,
    /// Iteration cap for the tripotent Newton search.
    pub newton_max_iter: usize,
    /// Master seed; every derived generator is a fixed stream of it.
    pub seed: u64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual_tol: 1e-9,
            cluster_tol: 1e-7,
            sample_count: 10_000,
            newton_max_iter: 100,
            seed: 0,
        }
    }
}

impl Tolerances {
    pub fn with_seed(seed: u64) -> Self {
        Tolerances {
            seed,
            ..Tolerances::default()
        }
    }

    /// Deterministic generator for one operation. `stream` isolates
    /// operations from each other: drawing more samples in one place never
    /// shifts the values drawn elsewhere.
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(stream);
        r
    }
}

/// Stream tags for [`Tolerances::rng`]; one per randomized operation.
pub mod streams {
    pub const AXIOMS: u64 = 0x01;
    pub const NEWTON: u64 = 0x02;
    pub const DECOMPOSITION: u64 = 0x03;
    pub const M_PROJECTION: u64 = 0x04;
    pub const DERIVATION: u64 = 0x05;
    pub const CP_SET: u64 = 0x06;
    pub const DUAL: u64 = 0x07;
    pub const FACES: u64 = 0x08;
    pub const CONTRACTIVITY: u64 = 0x09;
    pub const JB: u64 = 0x0a;
    pub const NON_IDEAL: u64 = 0x0b;
    pub const LEMMAS: u64 = 0x0c;

    /// Sub-stream helper: keeps per-item generators independent.
    pub fn sub(base: u64, k: u64) -> u64 {
        (base << 32) | k
    }
}

pub fn max_abs(a: &Matrix) -> f64 {
    a.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Symmetric eigendecomposition with ascending eigenvalues.
///
/// Fails when the input departs from symmetry by more than `sym_tol`
/// relative to its magnitude, reporting the worst offending entry gap.
pub fn sym_eigen(a: &Matrix, sym_tol: f64) -> Result<(Vector, Matrix)> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(JbError::DimensionMismatch {
            expected: n,
            got: a.ncols(),
        });
    }
    if a.iter().any(|v| !v.is_finite()) {
        return Err(JbError::NonFinite("sym_eigen input"));
    }
    let mut asym = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            asym = asym.max((a[(i, j)] - a[(j, i)]).abs());
        }
    }
    let scale = max_abs(a).max(1.0);
    if asym > sym_tol * scale {
        return Err(JbError::NotSymmetric { max_asymmetry: asym });
    }
    // Work on the exactly symmetrized copy so the backend sees a clean input.
    let s = (a + a.transpose()) * 0.5;
    let se = s.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].total_cmp(&se.eigenvalues[j]));
    let vals = Vector::from_iterator(n, order.iter().map(|&i| se.eigenvalues[i]));
    let mut vecs = Matrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vecs.set_column(col, &se.eigenvectors.column(i));
    }
    Ok((vals, vecs))
}

/// Full SVD `a = U Σ Vᵀ` with singular values sorted descending.
pub fn svd_full(a: &Matrix) -> (Matrix, Vector, Matrix) {
    let svd = a.clone().svd(true, true);
    let u0 = svd.u.expect("svd requested u");
    let vt0 = svd.v_t.expect("svd requested v_t");
    let k = svd.singular_values.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let sv = Vector::from_iterator(k, order.iter().map(|&i| svd.singular_values[i]));
    let mut u = Matrix::zeros(u0.nrows(), k);
    let mut v = Matrix::zeros(vt0.ncols(), k);
    for (col, &i) in order.iter().enumerate() {
        u.set_column(col, &u0.column(i));
        v.set_column(col, &vt0.row(i).transpose());
    }
    (u, sv, v)
}

pub fn singular_values(a: &Matrix) -> Vector {
    let mut sv: Vec<f64> = a.clone().singular_values().iter().copied().collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    Vector::from_vec(sv)
}

/// Largest singular value.
pub fn spectral_norm(a: &Matrix) -> f64 {
    a.clone().singular_values().iter().fold(0.0f64, |m, &s| m.max(s))
}

/// Sum of singular values (trace norm); the dual of the spectral norm.
pub fn nuclear_norm(a: &Matrix) -> f64 {
    a.clone().singular_values().iter().sum()
}

/// Minimum-norm least-squares solve via SVD pseudo-inverse with a relative
/// singular-value cutoff.
pub fn pinv_solve(a: &Matrix, rhs: &Vector, rel_cutoff: f64) -> Vector {
    let (u, sv, v) = svd_full(a);
    let smax = if sv.len() > 0 { sv[0] } else { 0.0 };
    let cutoff = rel_cutoff * smax.max(1e-300);
    let mut y = u.transpose() * rhs;
    for i in 0..sv.len() {
        if sv[i] > cutoff {
            y[i] /= sv[i];
        } else {
            y[i] = 0.0;
        }
    }
    &v * y
}

/// Orthonormal basis for the null space of `a`. Directions whose Gram
/// eigenvalue falls below `cutoff` relative to the largest are treated as
/// null.
pub fn null_space(a: &Matrix, cutoff: f64) -> Matrix {
    let n = a.ncols();
    // Work with the Gram matrix so the null space is available even for
    // wide inputs where the thin SVD drops right-singular directions.
    let g = a.transpose() * a;
    let (vals, vecs) = sym_eigen(&g, 1e-8).expect("gram matrix is symmetric");
    let lmax = vals.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let thr = (cutoff * lmax).max(1e-24);
    let mut cols: Vec<usize> = Vec::new();
    for i in 0..n {
        if vals[i].abs() <= thr {
            cols.push(i);
        }
    }
    let mut out = Matrix::zeros(n, cols.len());
    for (c, &i) in cols.iter().enumerate() {
        out.set_column(c, &vecs.column(i));
    }
    out
}

/// Modified Gram-Schmidt over the columns of `cols` in order, dropping
/// columns whose residual falls below `drop_tol`. Column order is preserved,
/// which keeps axis-aligned inputs axis-aligned.
pub fn orthonormalize(cols: &Matrix, drop_tol: f64) -> Matrix {
    let n = cols.nrows();
    let mut kept: Vec<Vector> = Vec::new();
    for j in 0..cols.ncols() {
        let mut v: Vector = cols.column(j).into();
        for _ in 0..2 {
            for b in &kept {
                let c = b.dot(&v);
                v -= b * c;
            }
        }
        let nv = v.norm();
        if nv > drop_tol {
            kept.push(v / nv);
        }
    }
    let mut out = Matrix::zeros(n, kept.len());
    for (c, v) in kept.iter().enumerate() {
        out.set_column(c, v);
    }
    out
}

/// A linear subspace of Rⁿ held as an orthonormal column basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Wraps an already-orthonormal basis, validating `BᵀB = I` within `tol`.
    pub fn new(basis: Matrix, tol: f64) -> Result<Self> {
        let ambient = basis.nrows();
        let k = basis.ncols();
        if k > ambient {
            return Err(JbError::DimensionMismatch {
                expected: ambient,
                got: k,
            });
        }
        let gram = basis.transpose() * &basis;
        let dev = max_abs(&(&gram - Matrix::identity(k, k)));
        if dev > tol {
            return Err(JbError::NotSymmetric { max_asymmetry: dev });
        }
        Ok(Subspace { ambient, basis })
    }

    /// Builds the span of arbitrary columns, orthonormalizing and dropping
    /// dependent directions below `drop_tol`.
    pub fn from_span(cols: &Matrix, drop_tol: f64) -> Self {
        Subspace {
            ambient: cols.nrows(),
            basis: orthonormalize(cols, drop_tol),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient, ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Orthogonal projector `B Bᵀ` onto the subspace.
    pub fn projector(&self) -> Matrix {
        &self.basis * self.basis.transpose()
    }

    pub fn contains(&self, v: &Vector, tol: f64) -> bool {
        let p = &self.basis * (self.basis.transpose() * v);
        (v - p).norm() <= tol * v.norm().max(1.0)
    }

    pub fn contains_subspace(&self, other: &Subspace, tol: f64) -> bool {
        (0..other.dim()).all(|j| self.contains(&other.basis.column(j).into(), tol))
    }

    /// Spectral distance between the orthogonal projectors.
    pub fn distance(&self, other: &Subspace) -> f64 {
        spectral_norm(&(self.projector() - other.projector()))
    }

    /// Intersection of two subspaces of the same ambient space; the result
    /// has maximal dimension for the given tolerance.
    pub fn intersect(&self, other: &Subspace, tol: f64) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(JbError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let (k1, k2) = (self.dim(), other.dim());
        if k1 == 0 || k2 == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // Null vectors (a; b) of [B1 | -B2] satisfy B1 a = B2 b, which is
        // exactly a vector in the intersection.
        let mut m = Matrix::zeros(self.ambient, k1 + k2);
        for j in 0..k1 {
            m.set_column(j, &self.basis.column(j));
        }
        for j in 0..k2 {
            m.set_column(k1 + j, &(-1.0 * Vector::from(other.basis.column(j))));
        }
        let ns = null_space(&m, tol);
        if ns.ncols() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let a_part = ns.rows(0, k1).into_owned();
        let span = &self.basis * a_part;
        Ok(Subspace::from_span(&span, 1e-8))
    }

    /// Direct (orthogonal) sum; callers must pass mutually orthogonal spaces.
    pub fn union(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(JbError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let mut cols = Matrix::zeros(self.ambient, self.dim() + other.dim());
        for j in 0..self.dim() {
            cols.set_column(j, &self.basis.column(j));
        }
        for j in 0..other.dim() {
            cols.set_column(self.dim() + j, &other.basis.column(j));
        }
        Ok(Subspace::from_span(&cols, 1e-8))
    }
}

/// Spectral subspaces of a (coordinate-)symmetric operator, grouped around
/// the given target eigenvalues.
///
/// Every eigenvalue must land within `sep` of some target; eigenvalues
/// within the cluster tolerance of each other always share a group because
/// they map to the same target. Returns one subspace per target, in order.
pub fn cluster_spectral_subspaces(
    m: &Matrix,
    targets: &[f64],
    sep: f64,
) -> Result<Vec<Subspace>> {
    let n = m.nrows();
    let scale = max_abs(m).max(1.0);
    let mut asym = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            asym = asym.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    if asym > 1e-5 * scale {
        return Err(JbError::ClusterSeparation(format!(
            "operator asymmetry {asym:.3e} too large for spectral clustering"
        )));
    }
    let (vals, vecs) = sym_eigen(&((m + m.transpose()) * 0.5), 1e-6)?;
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); targets.len()];
    for i in 0..n {
        let (mut best, mut bestd) = (0usize, f64::INFINITY);
        for (t, &tv) in targets.iter().enumerate() {
            let d = (vals[i] - tv).abs();
            if d < bestd {
                bestd = d;
                best = t;
            }
        }
        if bestd > sep {
            return Err(JbError::ClusterSeparation(format!(
                "eigenvalue {:.6} is {bestd:.3e} away from nearest target",
                vals[i]
            )));
        }
        groups[best].push(i);
    }
    let mut out = Vec::with_capacity(targets.len());
    for g in groups {
        let mut b = Matrix::zeros(n, g.len());
        for (c, &i) in g.iter().enumerate() {
            b.set_column(c, &vecs.column(i));
        }
        out.push(Subspace::new(b, 1e-8)?);
    }
    Ok(out)
}

// Padé-13 coefficients for the scaling-and-squaring matrix exponential.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// Matrix exponential by scaling and squaring with a fixed order-13 Padé
/// approximant. Accurate to ~1e-13 relative for the operator sizes used here.
pub fn expm(a: &Matrix) -> Matrix {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "expm requires a square matrix");
    let norm1 = (0..n)
        .map(|j| a.column(j).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0f64, f64::max);
    let theta13 = 5.371920351148152;
    let s = if norm1 > theta13 {
        (norm1 / theta13).log2().ceil() as u32
    } else {
        0
    };
    let a_s = a / 2f64.powi(s as i32);
    let ident = Matrix::identity(n, n);
    let a2 = &a_s * &a_s;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let b = &PADE13;
    let u_inner = &a6 * (b[13] * &a6 + b[11] * &a4 + b[9] * &a2)
        + b[7] * &a6
        + b[5] * &a4
        + b[3] * &a2
        + b[1] * &ident;
    let u = &a_s * u_inner;
    let v = &a6 * (b[12] * &a6 + b[10] * &a4 + b[8] * &a2)
        + b[6] * &a6
        + b[4] * &a4
        + b[2] * &a2
        + b[0] * &ident;
    let denom = &v - &u;
    let numer = &v + &u;
    let mut r = denom
        .lu()
        .solve(&numer)
        .expect("Padé denominator is invertible");
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn sym_eigen_identity_has_unit_spectrum() {
        let a = Matrix::identity(3, 3);
        let (vals, _) = sym_eigen(&a, 1e-9).unwrap();
        for i in 0..3 {
            assert_relative_eq!(vals[i], 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn sym_eigen_diagonal_sorts_ascending() {
        let a = Matrix::from_row_slice(2, 2, &[2.0, 0.0, 0.0, -1.0]);
        let (vals, vecs) = sym_eigen(&a, 1e-9).unwrap();
        assert_relative_eq!(vals[0], -1.0, epsilon = 1e-12);
        assert_relative_eq!(vals[1], 2.0, epsilon = 1e-12);
        let recon = &a * &vecs - &vecs * Matrix::from_diagonal(&vals);
        assert!(max_abs(&recon) < 1e-12);
    }

    #[test]
    fn sym_eigen_offdiagonal_pair() {
        // Characteristic polynomial λ² - 1 by hand.
        let a = Matrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let (vals, _) = sym_eigen(&a, 1e-9).unwrap();
        assert_relative_eq!(vals[0], -1.0, epsilon = 1e-12);
        assert_relative_eq!(vals[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn sym_eigen_rejects_asymmetric_input() {
        let a = Matrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        match sym_eigen(&a, 1e-9) {
            Err(JbError::NotSymmetric { max_asymmetry }) => {
                assert_relative_eq!(max_asymmetry, 1.0, epsilon = 1e-12)
            }
            other => panic!("expected symmetry violation, got {other:?}"),
        }
    }

    #[test]
    fn svd_rank_one_unit() {
        let a = Matrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]);
        let sv = singular_values(&a);
        assert_relative_eq!(sv[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(sv[1], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn svd_identity() {
        let sv = singular_values(&Matrix::identity(2, 2));
        assert_relative_eq!(sv[0], 1.0, epsilon = 1e-12);
        assert_relative_eq!(sv[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn svd_row_pair() {
        // AᵀA has eigenvalues 2 and 0.
        let a = Matrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 0.0]);
        let sv = singular_values(&a);
        assert_relative_eq!(sv[0], 2f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(sv[1], 0.0, epsilon = 1e-12);
        let (u, s, v) = svd_full(&a);
        let recon = &u * Matrix::from_diagonal(&s) * v.transpose();
        assert!(max_abs(&(recon - a)) < 1e-12);
    }

    #[test]
    fn intersect_adjacent_coordinate_planes() {
        let e12 = Subspace::from_span(
            &Matrix::from_row_slice(3, 2, &[1.0, 0.0, 0.0, 1.0, 0.0, 0.0]),
            1e-10,
        );
        let e23 = Subspace::from_span(
            &Matrix::from_row_slice(3, 2, &[0.0, 0.0, 1.0, 0.0, 0.0, 1.0]),
            1e-10,
        );
        let cap = e12.intersect(&e23, 1e-9).unwrap();
        assert_eq!(cap.dim(), 1);
        let e2 = Vector::from_vec(vec![0.0, 1.0, 0.0]);
        assert!(cap.contains(&e2, 1e-9));
    }

    #[test]
    fn intersect_is_idempotent_and_disjoint_lines_meet_in_zero() {
        let s = Subspace::from_span(
            &Matrix::from_row_slice(3, 2, &[1.0, 1.0, 1.0, -1.0, 0.0, 2.0]),
            1e-10,
        );
        let cap = s.intersect(&s, 1e-9).unwrap();
        assert_eq!(cap.dim(), s.dim());
        assert!(cap.distance(&s) < 1e-9);

        let e1 = Subspace::from_span(&Matrix::from_row_slice(2, 1, &[1.0, 0.0]), 1e-10);
        let e2 = Subspace::from_span(&Matrix::from_row_slice(2, 1, &[0.0, 1.0]), 1e-10);
        assert_eq!(e1.intersect(&e2, 1e-9).unwrap().dim(), 0);
    }

    #[test]
    fn intersect_rejects_ambient_mismatch() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(
            a.intersect(&b, 1e-9),
            Err(JbError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn projector_examples() {
        let e1 = Subspace::from_span(&Matrix::from_row_slice(2, 1, &[1.0, 0.0]), 1e-10);
        let p = e1.projector();
        assert!(max_abs(&(&p - Matrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]))) < 1e-12);

        let full = Subspace::full(2);
        assert!(max_abs(&(full.projector() - Matrix::identity(2, 2))) < 1e-12);

        let diag = Subspace::from_span(&Matrix::from_row_slice(2, 1, &[1.0, 1.0]), 1e-10);
        let pd = diag.projector();
        let expect = Matrix::from_row_slice(2, 2, &[0.5, 0.5, 0.5, 0.5]);
        assert!(max_abs(&(pd - expect)) < 1e-12);
    }

    #[test]
    fn projector_fixes_basis_columns() {
        let s = Subspace::from_span(
            &Matrix::from_row_slice(4, 2, &[1.0, 0.5, 2.0, -1.0, 0.0, 3.0, 1.0, 1.0]),
            1e-10,
        );
        let p = s.projector();
        assert!(max_abs(&(&p * &p - &p)) < 1e-12);
        assert!(max_abs(&(&p - p.transpose())) < 1e-12);
        for j in 0..s.dim() {
            let b: Vector = s.basis().column(j).into();
            assert!((&p * &b - &b).norm() < 1e-10);
        }
    }

    #[test]
    fn expm_matches_closed_forms() {
        let z = Matrix::zeros(3, 3);
        assert!(max_abs(&(expm(&z) - Matrix::identity(3, 3))) < 1e-14);

        // Rotation generator: exp(tJ) = [[cos t, -sin t], [sin t, cos t]].
        let j = Matrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]);
        for &t in &[0.1, 1.0, std::f64::consts::PI, 10.0] {
            let e = expm(&(t * &j));
            let expect =
                Matrix::from_row_slice(2, 2, &[t.cos(), -t.sin(), t.sin(), t.cos()]);
            assert!(max_abs(&(e - expect)) < 1e-12, "t = {t}");
        }

        let d = Matrix::from_diagonal(&Vector::from_vec(vec![1.0, -2.0, 0.5]));
        let e = expm(&d);
        for (i, &l) in [1.0, -2.0, 0.5].iter().enumerate() {
            assert_relative_eq!(e[(i, i)], f64::exp(l), epsilon = 1e-12);
        }
    }

    #[test]
    fn cluster_recovers_eigenspaces() {
        let m = Matrix::from_diagonal(&Vector::from_vec(vec![1.0, 0.5, 0.5, 0.0]));
        let parts = cluster_spectral_subspaces(&m, &[0.0, 0.5, 1.0], 0.1).unwrap();
        assert_eq!(parts[0].dim(), 1);
        assert_eq!(parts[1].dim(), 2);
        assert_eq!(parts[2].dim(), 1);
    }

    #[test]
    fn cluster_rejects_separation_failure() {
        let m = Matrix::from_diagonal(&Vector::from_vec(vec![0.3, 1.0]));
        assert!(cluster_spectral_subspaces(&m, &[0.0, 1.0], 0.1).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn intersection_commutes_and_is_monotone(seed in 0u64..1000) {
                let mut rng = Tolerances::with_seed(seed).rng(99);
                let n = 5;
                let rand_mat = |rng: &mut rand_chacha::ChaCha8Rng, k: usize| {
                    Matrix::from_fn(n, k, |_, _| {
                        rand::Rng::sample::<f64, _>(rng, rand_distr::StandardNormal)
                    })
                };
                let k1 = 1 + (seed as usize % 4);
                let k2 = 1 + ((seed as usize / 4) % 4);
                let s1 = Subspace::from_span(&rand_mat(&mut rng, k1), 1e-10);
                let s2 = Subspace::from_span(&rand_mat(&mut rng, k2), 1e-10);
                let a = s1.intersect(&s2, 1e-9).unwrap();
                let b = s2.intersect(&s1, 1e-9).unwrap();
                prop_assert_eq!(a.dim(), b.dim());
                prop_assert!(a.distance(&b) < 1e-7);
                prop_assert!(a.dim() <= s1.dim().min(s2.dim()));
                prop_assert!(s1.contains_subspace(&a, 1e-7));
                prop_assert!(s2.contains_subspace(&a, 1e-7));
            }
        }
    }
}
