//! Dense exact linear algebra plus the sparse helpers the representation
//! machinery relies on.

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};

/// Row-major dense matrix; (Mv)_i = sum_j M[i][j] v[j].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldDescriptor,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix { field, rows: r, cols: c, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &*out.at(i, j) + &(a * b);
                    *out.at_mut(i, j) = v;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![self.field.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * &v[j]);
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = &t + self.at(i, i);
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = &*x + y;
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = &*x * c;
        }
        out
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(self.field, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.at(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.at(pivot, j).clone();
                    *a.at_mut(pivot, j) = a.at(col, j).clone();
                    *a.at_mut(col, j) = tmp;
                    let tmp = inv.at(pivot, j).clone();
                    *inv.at_mut(pivot, j) = inv.at(col, j).clone();
                    *inv.at_mut(col, j) = tmp;
                }
            }
            let p = a.at(col, col).inv()?;
            for j in 0..n {
                *a.at_mut(col, j) = &*a.at(col, j) * &p;
                *inv.at_mut(col, j) = &*inv.at(col, j) * &p;
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).clone();
                for j in 0..n {
                    let v = &*a.at(r, j) - &(&f * a.at(col, j));
                    *a.at_mut(r, j) = v;
                    let v = &*inv.at(r, j) - &(&f * inv.at(col, j));
                    *inv.at_mut(r, j) = v;
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<SparseRow> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (j, c.clone()))
                    .collect()
            })
            .collect();
        let mut echelon = Echelon::new(self.field);
        for r in rows {
            echelon.insert(r);
        }
        echelon.rows.len()
    }

    /// Basis of the right nullspace {v : Mv = 0}.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let rows: Vec<SparseRow> = (0..self.rows)
            .map(|i| sparsify(self.row(i)))
            .collect();
        sparse_nullspace(self.field, self.cols, &rows)
    }

    /// Kronecker product, used as an independent oracle in tests.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        *out.at_mut(i * other.rows + k, j * other.cols + l) = a * b;
                    }
                }
            }
        }
        out
    }
}

/// Sparse row: sorted (column, nonzero coefficient) pairs.
pub type SparseRow = Vec<(usize, Scalar)>;

pub fn sparsify(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j, c.clone()))
        .collect()
}

pub fn densify(field: FieldDescriptor, len: usize, row: &SparseRow) -> Vec<Scalar> {
    let mut v = vec![field.zero(); len];
    for (j, c) in row {
        v[*j] = c.clone();
    }
    v
}

/// Row-echelon accumulator keyed by leading column, with rows normalized to a
/// leading coefficient of one.
struct Echelon {
    #[allow(dead_code)]
    field: FieldDescriptor,
    // (leading column, normalized row), kept sorted by leading column.
    rows: Vec<(usize, SparseRow)>,
}

impl Echelon {
    fn new(field: FieldDescriptor) -> Self {
        Echelon { field, rows: vec![] }
    }

    /// Fully reduce `row` against the current rows and insert the remainder if
    /// any, keeping every stored row reduced against every pivot.
    fn insert(&mut self, mut row: SparseRow) -> bool {
        // Eliminate every pivot column occurring anywhere in the row. Pivot
        // rows carry no other pivot columns, so each step removes one.
        'outer: loop {
            for (k, (col, c)) in row.iter().enumerate() {
                if let Ok(pos) = self.rows.binary_search_by_key(col, |(l, _)| *l) {
                    let f = -c;
                    let other = self.rows[pos].1.clone();
                    let _ = k;
                    row = axpy(&row, &f, &other);
                    continue 'outer;
                }
            }
            break;
        }
        let Some((lead, lc)) = row.first().map(|(j, c)| (*j, c.clone())) else {
            return false;
        };
        let inv = lc.inv().expect("nonzero leading coefficient");
        for (_, c) in &mut row {
            *c = &*c * &inv;
        }
        // Back-substitute into existing rows so they stay fully reduced.
        let reduced = row.clone();
        for (_, r) in &mut self.rows {
            if let Some(k) = r.iter().position(|(j, _)| *j == lead) {
                let f = -&r[k].1;
                *r = axpy(r, &f, &reduced);
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&lead, |(l, _)| *l)
            .unwrap_err();
        self.rows.insert(pos, (lead, row));
        true
    }
}

/// row + c * other for sorted sparse rows, dropping zeros.
pub fn axpy(row: &SparseRow, c: &Scalar, other: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_left = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_right = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_left {
            out.push(row[i].clone());
            i += 1;
        } else if take_right {
            out.push((other[j].0, c * &other[j].1));
            j += 1;
        } else {
            let v = &row[i].1 + &(c * &other[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Apply a square operator to one tensor leg: computes (id_left ⊗ op ⊗
/// id_right)·v by stride-blocked iteration, where `v` has length
/// left · op.rows · right.
pub fn local_apply(op: &Matrix, v: &[Scalar], left: usize, right: usize) -> Vec<Scalar> {
    let k = op.rows;
    debug_assert_eq!(v.len(), left * k * right);
    let cols: Vec<SparseRow> = (0..k).map(|c| sparsify(&op.column(c))).collect();
    let mut out = vec![op.field.zero(); v.len()];
    for l in 0..left {
        for x in 0..k {
            let base_in = (l * k + x) * right;
            for r in 0..right {
                let vx = &v[base_in + r];
                if vx.is_zero() {
                    continue;
                }
                for (y, c) in &cols[x] {
                    let idx = (l * k + y) * right + r;
                    out[idx] = &out[idx] + &(c * vx);
                }
            }
        }
    }
    out
}

/// Nullspace of a sparse row system over `cols` unknowns.
pub fn sparse_nullspace(
    field: FieldDescriptor,
    cols: usize,
    rows: &[SparseRow],
) -> Vec<Vec<Scalar>> {
    let mut echelon = Echelon::new(field);
    for r in rows {
        echelon.insert(r.clone());
    }
    echelon_nullspace(field, cols, &echelon.rows)
}

fn echelon_nullspace(
    field: FieldDescriptor,
    cols: usize,
    rows: &[(usize, SparseRow)],
) -> Vec<Vec<Scalar>> {
    let pivot_cols: Vec<usize> = rows.iter().map(|(l, _)| *l).collect();
    let mut is_pivot = vec![false; cols];
    for &p in &pivot_cols {
        is_pivot[p] = true;
    }
    let mut basis = vec![];
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (lead, row) in rows {
            // Row is fully reduced, so its value on the free column gives the
            // pivot coordinate directly.
            if let Some((_, c)) = row.iter().find(|(j, _)| *j == free) {
                v[*lead] = -c;
            }
        }
        basis.push(v);
    }
    basis
}

/// Incrementally intersect nullspaces: start from the kernel of the first
/// constraint map and shrink it with each further constraint. `constraints`
/// yields sparse rows of each constraint matrix acting on coordinates.
pub struct KernelIntersector {
    field: FieldDescriptor,
    dim: usize,
    /// Current basis of the intersection, as coordinate vectors.
    pub basis: Vec<Vec<Scalar>>,
}

impl KernelIntersector {
    pub fn full(field: FieldDescriptor, dim: usize) -> Self {
        let basis = (0..dim)
            .map(|i| {
                let mut v = vec![field.zero(); dim];
                v[i] = field.one();
                v
            })
            .collect();
        KernelIntersector { field, dim, basis }
    }

    /// Restrict the current space to the kernel of the map whose rows are given
    /// sparsely on the ambient coordinates.
    pub fn restrict(&mut self, rows: &[SparseRow]) {
        if self.basis.is_empty() {
            return;
        }
        // Express each constraint row on the current basis.
        let k = self.basis.len();
        let mut small_rows: Vec<SparseRow> = vec![];
        for row in rows {
            let mut small = vec![];
            for (bi, b) in self.basis.iter().enumerate() {
                let mut acc = self.field.zero();
                for (j, c) in row {
                    if !b[*j].is_zero() {
                        acc = &acc + &(c * &b[*j]);
                    }
                }
                if !acc.is_zero() {
                    small.push((bi, acc));
                }
            }
            if !small.is_empty() {
                small_rows.push(small);
            }
        }
        if small_rows.is_empty() {
            return;
        }
        let small_null = sparse_nullspace(self.field, k, &small_rows);
        let mut new_basis = vec![];
        for coeffs in small_null {
            let mut v = vec![self.field.zero(); self.dim];
            for (bi, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, bv) in self.basis[bi].iter().enumerate() {
                    if !bv.is_zero() {
                        v[j] = &v[j] + &(c * bv);
                    }
                }
            }
            new_basis.push(v);
        }
        self.basis = new_basis;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            q(),
            rows.iter()
                .map(|r| r.iter().map(|&n| q().from_i64(n)).collect())
                .collect(),
        )
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat(&[&[2, 1, 0], &[1, 1, 1], &[0, 3, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        assert!(inv.matmul(&m).is_identity());
        let singular = mat(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn nullspace_matches_rank() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 3 - m.rank());
        for v in &ns {
            assert!(m.apply(v).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn kron_mixed_product() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let b = mat(&[&[0, 1], &[1, 1]]);
        let c = mat(&[&[2, 0], &[1, 1]]);
        let d = mat(&[&[1, 1], &[0, 2]]);
        // (A⊗B)(C⊗D) = AC ⊗ BD
        assert_eq!(
            a.kron(&b).matmul(&c.kron(&d)),
            a.matmul(&c).kron(&b.matmul(&d))
        );
    }

    #[test]
    fn kernel_intersector_agrees_with_stacked_nullspace() {
        let m1 = mat(&[&[1, 1, 0, 0], &[0, 0, 1, -1]]);
        let m2 = mat(&[&[1, 0, 1, 0]]);
        let mut ki = KernelIntersector::full(q(), 4);
        ki.restrict(&(0..m1.rows).map(|i| sparsify(m1.row(i))).collect::<Vec<_>>());
        ki.restrict(&(0..m2.rows).map(|i| sparsify(m2.row(i))).collect::<Vec<_>>());
        let stacked = mat(&[&[1, 1, 0, 0], &[0, 0, 1, -1], &[1, 0, 1, 0]]);
        assert_eq!(ki.basis.len(), stacked.nullspace().len());
        for v in &ki.basis {
            assert!(stacked.apply(v).iter().all(|c| c.is_zero()));
        }
    }
}
