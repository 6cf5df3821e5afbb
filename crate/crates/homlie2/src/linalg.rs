//! Exact dense linear algebra over GF(2^k).
//!
//! Row reduction, rank, kernel and solving back every dimension count in the
//! crate: derivation spaces are kernels, cocycle spaces are kernels,
//! coboundary spaces are images, cohomology dimensions are quotient
//! dimensions. Everything is exact; pivoting is deterministic (first nonzero
//! entry scanning left to right), so results are bit-reproducible.

use crate::error::{Error, Result};
use crate::gf2k::{FieldSpec, Scalar};
use std::fmt;

/// A dense vector with entries in one GF(2^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zero(field: FieldSpec, len: usize) -> Self {
        Vector {
            field,
            entries: vec![field.zero(); len],
        }
    }

    pub fn from_entries(field: FieldSpec, entries: Vec<Scalar>) -> Result<Self> {
        for e in &entries {
            if e.spec() != field {
                return Err(Error::FieldMismatch(field.to_string(), e.spec().to_string()));
            }
        }
        Ok(Vector { field, entries })
    }

    /// The i-th standard basis vector of the given length.
    pub fn unit(field: FieldSpec, len: usize, i: usize) -> Self {
        let mut v = Vector::zero(field, len);
        v.entries[i] = field.one();
        v
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        self.entries[i] = value;
    }

    pub fn add_assign(&mut self, other: &Vector) {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += *b;
        }
    }

    /// self += c * other
    pub fn add_scaled(&mut self, c: Scalar, other: &Vector) {
        if c.is_zero() {
            return;
        }
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += c * *b;
        }
    }

    pub fn scaled(&self, c: Scalar) -> Vector {
        let mut out = Vector::zero(self.field, self.len());
        out.add_scaled(c, self);
        out
    }

    pub fn plus(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Support: indices of nonzero entries.
    pub fn support(&self) -> impl Iterator<Item = (usize, Scalar)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| (i, *e))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A dense row-major matrix over GF(2^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        for e in &entries {
            if e.spec() != field {
                return Err(Error::FieldMismatch(field.to_string(), e.spec().to_string()));
            }
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    /// Builds the matrix whose j-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, dim: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zero(field, dim, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), dim, "column length mismatch");
            for i in 0..dim {
                m.set(i, j, col.get(i));
            }
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vector]) -> Self {
        let mut m = Matrix::zero(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row length mismatch");
            for j in 0..cols {
                m.set(i, j, row.get(j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    pub fn column(&self, c: usize) -> Vector {
        let mut v = Vector::zero(self.field, self.rows);
        for r in 0..self.rows {
            v.set(r, self.get(r, c));
        }
        v
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix-vector product A·x.
    pub fn apply(&self, x: &Vector) -> Vector {
        assert_eq!(self.cols, x.len(), "apply: dimension mismatch");
        let mut out = Vector::zero(self.field, self.rows);
        for (j, c) in x.support() {
            for r in 0..self.rows {
                let a = self.get(r, j);
                if !a.is_zero() {
                    out.entries[r] += a * c;
                }
            }
        }
        out
    }

    /// Matrix product A·B.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "mul: dimension mismatch");
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let e = out.get(r, c) + a * b;
                        out.set(r, c, e);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += *b;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// k-fold power of a square matrix, A^0 = identity.
    pub fn pow(&self, k: usize) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow: matrix must be square");
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Inverse of a square invertible matrix via Gauss-Jordan on [A | I].
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols || self.rank() < self.rows {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, self.field.one());
        }
        let (red, rank) = rref(&aug);
        if rank < n {
            return Err(Error::NotInvertible);
        }
        let mut inv = Matrix::zero(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c));
            }
        }
        Ok(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form and rank.
///
/// Pivot choice is the first nonzero entry scanning left to right; exact
/// arithmetic needs no pivoting heuristics and this keeps outputs
/// deterministic.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let mut a = m.clone();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row >= a.rows {
            break;
        }
        let Some(r) = (pivot_row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        // swap rows r, pivot_row
        if r != pivot_row {
            for c in 0..a.cols {
                let x = a.get(r, c);
                let y = a.get(pivot_row, c);
                a.set(r, c, y);
                a.set(pivot_row, c, x);
            }
        }
        // normalize pivot to 1
        let inv = a.get(pivot_row, col).inv().expect("nonzero pivot");
        for c in 0..a.cols {
            let e = a.get(pivot_row, c) * inv;
            a.set(pivot_row, c, e);
        }
        // eliminate the column everywhere else
        for rr in 0..a.rows {
            if rr == pivot_row {
                continue;
            }
            let f = a.get(rr, col);
            if f.is_zero() {
                continue;
            }
            for c in 0..a.cols {
                let e = a.get(rr, c) + f * a.get(pivot_row, c);
                a.set(rr, c, e);
            }
        }
        pivot_row += 1;
    }
    (a, pivot_row)
}

/// A subspace held as a reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    vectors: Vec<Vector>,
    ambient_dim: usize,
    field: FieldSpec,
}

impl SubspaceBasis {
    /// Echelonizes the given spanning set.
    pub fn from_spanning(field: FieldSpec, ambient_dim: usize, spanning: &[Vector]) -> Self {
        if spanning.is_empty() {
            return SubspaceBasis {
                vectors: Vec::new(),
                ambient_dim,
                field,
            };
        }
        let m = Matrix::from_rows(field, ambient_dim, spanning);
        let (red, rank) = rref(&m);
        let vectors = (0..rank).map(|r| red.row(r)).collect();
        SubspaceBasis {
            vectors,
            ambient_dim,
            field,
        }
    }

    pub fn empty(field: FieldSpec, ambient_dim: usize) -> Self {
        SubspaceBasis {
            vectors: Vec::new(),
            ambient_dim,
            field,
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        let vectors = (0..ambient_dim)
            .map(|i| Vector::unit(field, ambient_dim, i))
            .collect();
        SubspaceBasis {
            vectors,
            ambient_dim,
            field,
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Pivot column of each echelon basis vector, strictly increasing.
    pub fn pivots(&self) -> Vec<usize> {
        self.vectors
            .iter()
            .map(|v| v.support().next().expect("echelon rows are nonzero").0)
            .collect()
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Residual of `v` after subtracting its projection on the basis.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for b in &self.vectors {
            let (pivot, _) = b.support().next().expect("echelon rows are nonzero");
            let c = r.get(pivot);
            if !c.is_zero() {
                r.add_scaled(c, b);
            }
        }
        r
    }

    /// Coordinates of `v` in this basis, or `None` if it is not a member.
    pub fn coordinates(&self, v: &Vector) -> Option<Vec<Scalar>> {
        let mut r = v.clone();
        let mut coords = Vec::with_capacity(self.vectors.len());
        for b in &self.vectors {
            let (pivot, _) = b.support().next().expect("echelon rows are nonzero");
            let c = r.get(pivot);
            coords.push(c);
            if !c.is_zero() {
                r.add_scaled(c, b);
            }
        }
        if r.is_zero() {
            Some(coords)
        } else {
            None
        }
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.vectors.iter().all(|v| other.contains(v))
    }
}

/// Basis of the right kernel {x : m·x = 0}.
pub fn kernel_basis(m: &Matrix) -> SubspaceBasis {
    let (red, rank) = rref(m);
    let n = m.cols;
    // pivot columns of the echelon form
    let mut pivot_cols = Vec::with_capacity(rank);
    for r in 0..rank {
        let col = (0..n)
            .find(|&c| !red.get(r, c).is_zero())
            .expect("nonzero echelon row");
        pivot_cols.push(col);
    }
    let is_pivot = {
        let mut flags = vec![false; n];
        for &c in &pivot_cols {
            flags[c] = true;
        }
        flags
    };
    let mut basis = Vec::with_capacity(n - rank);
    for free in 0..n {
        if is_pivot[free] {
            continue;
        }
        let mut v = Vector::zero(m.field, n);
        v.set(free, m.field.one());
        for (r, &pc) in pivot_cols.iter().enumerate() {
            // x_pc = -red[r, free] * x_free; minus is plus in char 2
            v.set(pc, red.get(r, free));
        }
        basis.push(v);
    }
    SubspaceBasis::from_spanning(m.field, n, &basis)
}

/// A particular solution of m·x = b, `Ok(None)` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &Vector) -> Result<Option<Vector>> {
    if b.len() != m.rows {
        return Err(Error::Shape(format!(
            "solve: rhs length {} does not match {} rows",
            b.len(),
            m.rows
        )));
    }
    let mut aug = Matrix::zero(m.field, m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, m.cols, b.get(r));
    }
    let (red, _) = rref(&aug);
    let mut x = Vector::zero(m.field, m.cols);
    for r in 0..m.rows {
        let Some(pivot) = (0..=m.cols).find(|&c| !red.get(r, c).is_zero()) else {
            continue;
        };
        if pivot == m.cols {
            return Ok(None); // row (0 ... 0 | nonzero)
        }
        x.set(pivot, red.get(r, m.cols));
    }
    Ok(Some(x))
}

/// dim z - dim b for a pair of nested subspaces, checking containment.
pub fn quotient_dim(z: &SubspaceBasis, b: &SubspaceBasis) -> Result<usize> {
    if z.ambient_dim() != b.ambient_dim() {
        return Err(Error::Shape(
            "quotient_dim: ambient dimensions differ".to_string(),
        ));
    }
    if !b.is_subspace_of(z) {
        return Err(Error::NotASubspace(
            "coboundaries do not lie inside cocycles".to_string(),
        ));
    }
    Ok(z.dim() - b.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    fn random_matrix(rng: &mut SeededRng, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        let entries = (0..rows * cols).map(|_| rng.scalar(field)).collect();
        Matrix::from_entries(field, rows, cols, entries).unwrap()
    }

    /// Rank by minor expansion: the largest r such that some r x r submatrix
    /// has nonzero determinant, determinants computed by cofactor expansion.
    /// Independent of the row-reduction path.
    fn det_cofactor(m: &Matrix, rows: &[usize], cols: &[usize]) -> Scalar {
        let f = m.field();
        if rows.is_empty() {
            return f.one();
        }
        let mut acc = f.zero();
        let r0 = rows[0];
        for (idx, &c) in cols.iter().enumerate() {
            let a = m.get(r0, c);
            if a.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != idx)
                .map(|(_, &cc)| cc)
                .collect();
            acc += a * det_cofactor(m, &rows[1..], &sub_cols);
        }
        acc
    }

    fn rank_by_minors(m: &Matrix) -> usize {
        let max_r = m.rows().min(m.cols());
        for r in (1..=max_r).rev() {
            for rows in combinations(m.rows(), r) {
                for cols in combinations(m.cols(), r) {
                    if !det_cofactor(m, &rows, &cols).is_zero() {
                        return r;
                    }
                }
            }
        }
        0
    }

    fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == r {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, r, cur, out);
                cur.pop();
            }
        }
        rec(0, n, r, &mut cur, &mut out);
        out
    }

    #[test]
    fn rref_identity_is_fixed() {
        let f = FieldSpec::gf4();
        let id = Matrix::identity(f, 3);
        let (red, rank) = rref(&id);
        assert_eq!(red, id);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_equal_rows_over_gf2() {
        let f = FieldSpec::gf2();
        let one = f.one();
        let m = Matrix::from_entries(f, 2, 2, vec![one, one, one, one]).unwrap();
        let (red, rank) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(red.row(0).entries(), &[one, one]);
        assert!(red.row(1).is_zero());
    }

    #[test]
    fn rank_matches_minor_expansion_oracle() {
        let f = FieldSpec::gf4();
        let mut rng = SeededRng::new(7);
        for _ in 0..10 {
            let m = random_matrix(&mut rng, f, 4, 4);
            assert_eq!(m.rank(), rank_by_minors(&m));
        }
        // and low-rank inputs
        for _ in 0..5 {
            let a = random_matrix(&mut rng, f, 4, 2);
            let b = random_matrix(&mut rng, f, 2, 4);
            let m = a.mul(&b);
            assert_eq!(m.rank(), rank_by_minors(&m));
        }
    }

    #[test]
    fn rank_is_shuffle_invariant() {
        let f = FieldSpec::gf4();
        let mut rng = SeededRng::new(11);
        for _ in 0..10 {
            let m = random_matrix(&mut rng, f, 6, 6);
            let rows: Vec<Vector> = (0..6).rev().map(|r| m.row(r)).collect();
            let shuffled = Matrix::from_rows(f, 6, &rows);
            assert_eq!(m.rank(), shuffled.rank());
        }
    }

    #[test]
    fn rank_transpose_invariant() {
        let f = FieldSpec::gf16();
        let mut rng = SeededRng::new(3);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, f, 5, 7);
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let f = FieldSpec::gf2();
        let m = Matrix::zero(f, 2, 3);
        let ker = kernel_basis(&m);
        assert_eq!(ker.dim(), 3);
    }

    #[test]
    fn kernel_of_equal_rows_gf2() {
        let f = FieldSpec::gf2();
        let one = f.one();
        let m = Matrix::from_entries(f, 2, 2, vec![one, one, one, one]).unwrap();
        let ker = kernel_basis(&m);
        assert_eq!(ker.dim(), 1);
        let v = Vector::from_entries(f, vec![one, one]).unwrap();
        assert!(ker.contains(&v));
    }

    #[test]
    fn rank_nullity_and_exactness() {
        let f = FieldSpec::gf16();
        let mut rng = SeededRng::new(5);
        for _ in 0..10 {
            let m = random_matrix(&mut rng, f, 8, 5);
            let ker = kernel_basis(&m);
            assert_eq!(ker.dim() + m.rank(), 5);
            // every combination of kernel basis vectors maps to zero, exactly
            for v in ker.vectors() {
                assert!(m.apply(v).is_zero());
            }
            if ker.dim() >= 2 {
                let mut combo = ker.vectors()[0].clone();
                combo.add_scaled(rng.scalar(f), &ker.vectors()[1]);
                assert!(m.apply(&combo).is_zero());
            }
        }
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let f = FieldSpec::gf2();
        let one = f.one();
        let id = Matrix::identity(f, 3);
        let b = Vector::from_entries(f, vec![one, f.zero(), one]).unwrap();
        assert_eq!(solve(&id, &b).unwrap().unwrap(), b);

        let m = Matrix::from_entries(f, 2, 1, vec![one, one]).unwrap();
        let bad = Vector::from_entries(f, vec![f.zero(), one]).unwrap();
        assert_eq!(solve(&m, &bad).unwrap(), None);

        let short = Vector::zero(f, 1);
        assert!(solve(&m, &short).is_err());
    }

    #[test]
    fn solve_substitute_back() {
        let f = FieldSpec::gf4();
        let mut rng = SeededRng::new(9);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, f, 4, 6);
            let x = Vector::from_entries(f, (0..6).map(|_| rng.scalar(f)).collect()).unwrap();
            let b = m.apply(&x);
            let sol = solve(&m, &b).unwrap().expect("consistent by construction");
            assert_eq!(m.apply(&sol), b);
        }
    }

    #[test]
    fn quotient_dim_cases() {
        let f = FieldSpec::gf2();
        let z = SubspaceBasis::full(f, 3);
        assert_eq!(quotient_dim(&z, &z).unwrap(), 0);
        let b = SubspaceBasis::empty(f, 3);
        assert_eq!(quotient_dim(&z, &b).unwrap(), 3);
        // non-containment is an error
        let one = f.one();
        let v = Vector::from_entries(f, vec![one, f.zero(), f.zero()]).unwrap();
        let w = Vector::from_entries(f, vec![f.zero(), one, f.zero()]).unwrap();
        let small = SubspaceBasis::from_spanning(f, 3, &[v]);
        let other = SubspaceBasis::from_spanning(f, 3, &[w]);
        assert!(matches!(
            quotient_dim(&small, &other),
            Err(Error::NotASubspace(_))
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let f = FieldSpec::gf16();
        let mut rng = SeededRng::new(13);
        let mut found = 0;
        while found < 5 {
            let m = random_matrix(&mut rng, f, 4, 4);
            if let Ok(inv) = m.inverse() {
                assert_eq!(m.mul(&inv), Matrix::identity(f, 4));
                assert_eq!(inv.mul(&m), Matrix::identity(f, 4));
                found += 1;
            }
        }
    }

    #[test]
    fn coordinates_reconstruct() {
        let f = FieldSpec::gf4();
        let mut rng = SeededRng::new(17);
        let spanning: Vec<Vector> = (0..3)
            .map(|_| Vector::from_entries(f, (0..5).map(|_| rng.scalar(f)).collect()).unwrap())
            .collect();
        let basis = SubspaceBasis::from_spanning(f, 5, &spanning);
        let mut v = Vector::zero(f, 5);
        for b in basis.vectors() {
            v.add_scaled(rng.scalar(f), b);
        }
        let coords = basis.coordinates(&v).expect("member by construction");
        let mut rebuilt = Vector::zero(f, 5);
        for (c, b) in coords.iter().zip(basis.vectors()) {
            rebuilt.add_scaled(*c, b);
        }
        assert_eq!(rebuilt, v);
    }
}
