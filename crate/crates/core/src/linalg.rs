//! Dense exact linear algebra over a [`FieldSpec`].

use std::ops::{Index, IndexMut};

use crate::fields::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| *x + *y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| *x - *y).collect()
}

pub fn scale(c: Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * *x).collect()
}

pub fn neg(a: &[Scalar]) -> Vector {
    a.iter().map(|x| -*x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * *x;
        }
    }
}

/// Linear combination `sum coeffs[i] * vectors[i]`.
pub fn combine(field: FieldSpec, n: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
    let mut out = zero_vector(field, n);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, *c, v);
    }
    out
}

/// Iterate over all of `F^n` in lexicographic index order (first coordinate fastest).
pub fn all_vectors(field: FieldSpec, n: usize) -> impl Iterator<Item = Vector> {
    let q = field.order().expect("vector enumeration needs a finite field");
    let total = q.checked_pow(n as u32).expect("enumeration size overflows usize");
    (0..total).map(move |mut idx| {
        (0..n)
            .map(|_| {
                let s = field.from_index(idx % q);
                idx /= q;
                s
            })
            .collect()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged columns");
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = *x;
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> Vector {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let mut out = zero_vector(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self[(r, c)];
                if !a.is_zero() {
                    *o += a * *x;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| *a - *b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| *a + *b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scaled(&self, c: Scalar) -> Matrix {
        let data = self.data.iter().map(|a| c * *a).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.data)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        (0..e).fold(Matrix::identity(self.field, self.rows), |acc, _| acc.mul(self))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                m[(r, j)] = m[(r, j)] * inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)];
                    for j in 0..m.cols {
                        let t = m[(r, j)];
                        if !t.is_zero() {
                            m[(i, j)] -= f * t;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)];
            det *= pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for i in c + 1..m.rows {
                let f = m[(i, c)] * inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let t = m[(c, j)];
                    m[(i, j)] -= f * t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = self.field.one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)];
            }
        }
        Some(inv)
    }

    /// Basis of `{x : A x = 0}`, one vector per free column (RREF order).
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vector(self.field, self.cols);
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)];
                }
                v
            })
            .collect()
    }

    /// Some solution of `A x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.field, self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)];
        }
        Some(x)
    }
}

/// Subspace of `F^n` stored as its reduced row echelon basis, so equality of
/// subspaces is equality of values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vector]) -> Self {
        let (r, pivots) = Matrix::from_rows(field, ambient, vectors).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace { field, ambient, basis, pivots }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vector(field, ambient, i)).collect();
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Residual of `v` after eliminating pivot coordinates; zero iff `v` is in the span.
    fn residual(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = r[p];
            if !c.is_zero() {
                axpy(&mut r, -c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero(&self.residual(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // solve a * self + b * other = 0
        let mut cols: Vec<Vector> = self.basis.clone();
        cols.extend(other.basis.iter().map(|v| neg(v)));
        if cols.is_empty() {
            return Subspace::zero(self.field, self.ambient);
        }
        let m = Matrix::from_columns(self.field, self.ambient, &cols);
        let vectors: Vec<Vector> = m
            .kernel()
            .into_iter()
            .map(|k| combine(self.field, self.ambient, &k[..self.dim()], &self.basis))
            .collect();
        Subspace::span(self.field, self.ambient, &vectors)
    }

    /// All elements of the subspace (finite fields only), in coefficient order.
    pub fn elements(&self) -> Vec<Vector> {
        all_vectors(self.field, self.dim())
            .map(|c| combine(self.field, self.ambient, &c, &self.basis))
            .collect()
    }
}

/// All subspaces of `F^n` for a finite field, grouped by dimension and
/// canonical (reduced echelon) form so every subspace appears once.
pub fn enumerate_subspaces(field: FieldSpec, n: usize) -> Vec<Subspace> {
    let mut out = vec![Subspace::zero(field, n)];
    for k in 1..=n {
        for pivots in combinations(n, k) {
            // free positions: row i, column c > pivots[i], c not a pivot
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| {
                    let pv = pivots.clone();
                    (pivots[i] + 1..n).filter(move |c| !pv.contains(c)).map(move |c| (i, c))
                })
                .collect();
            for fill in all_vectors(field, free.len()) {
                let mut rows: Vec<Vector> = (0..k).map(|i| unit_vector(field, n, pivots[i])).collect();
                for (&(i, c), s) in free.iter().zip(&fill) {
                    rows[i][c] = *s;
                }
                out.push(Subspace { field, ambient: n, basis: rows, pivots: pivots.clone() });
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Monic minimal polynomial of a square matrix, coefficients from degree 0 up.
pub fn minimal_polynomial(m: &Matrix) -> Vec<Scalar> {
    let n = m.rows();
    let field = m.field();
    let flat = |a: &Matrix| -> Vector { (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|ij| a[ij]).collect() };
    let mut powers = vec![flat(&Matrix::identity(field, n))];
    let mut current = Matrix::identity(field, n);
    for _ in 0..=n {
        current = current.mul(m);
        let target = flat(&current);
        let cols = Matrix::from_columns(field, n * n, &powers);
        if let Some(c) = cols.solve(&target) {
            // m^k = sum c_i m^i  =>  x^k - sum c_i x^i
            let mut poly: Vec<Scalar> = c.iter().map(|x| -*x).collect();
            poly.push(field.one());
            return poly;
        }
        powers.push(target);
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Echelon basis of a subspace where every row carries a payload vector that
/// is transformed by the same row operations; used to evaluate a partially
/// defined linear map on the span of the vectors seen so far.
#[derive(Debug, Clone)]
pub struct PairedEchelon {
    field: FieldSpec,
    rows: Vec<(Vector, Vector)>,
    pivots: Vec<usize>,
}

impl PairedEchelon {
    pub fn new(field: FieldSpec) -> Self {
        PairedEchelon { field, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; returns the residual and the
    /// payload of the eliminated part.
    pub fn reduce(&self, v: &[Scalar], payload_len: usize) -> (Vector, Vector) {
        let mut r = v.to_vec();
        let mut img = zero_vector(self.field, payload_len);
        for ((row, pay), &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p];
            if !c.is_zero() {
                axpy(&mut r, -c, row);
                axpy(&mut img, c, pay);
            }
        }
        (r, img)
    }

    /// Payload of `v` if it lies in the span.
    pub fn evaluate(&self, v: &[Scalar], payload_len: usize) -> Option<Vector> {
        let (r, img) = self.reduce(v, payload_len);
        is_zero(&r).then_some(img)
    }

    /// Insert `v` with payload `w`; returns false if `v` was already in the span.
    pub fn insert(&mut self, v: &[Scalar], w: &[Scalar]) -> bool {
        let (mut r, img) = self.reduce(v, w.len());
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let mut pay = sub(w, &img);
        let inv = r[p].inv().expect("nonzero");
        r = scale(inv, &r);
        pay = scale(inv, &pay);
        // keep rows reduced at the new pivot
        for (row, rp) in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                axpy(row, -c, &r);
                axpy(rp, -c, &pay);
            }
        }
        self.rows.push((r, pay));
        self.pivots.push(p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        let rows: Vec<Vector> = rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect();
        Matrix::from_rows(field, cols, &rows)
    }

    #[test]
    fn rank_det_inverse() {
        let q = FieldSpec::Q;
        let a = m(q, &[&[1, 2], &[3, 4]]);
        assert_eq!(a.det(), q.from_int(-2));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(q, 2));
        let s = m(FieldSpec::GF2, &[&[1, 1], &[1, 1]]);
        assert_eq!(s.rank(), 1);
        assert!(s.inverse().is_none());
        assert!(s.det().is_zero());
    }

    #[test]
    fn kernel_and_solve() {
        let f = FieldSpec::GF3;
        let a = m(f, &[&[1, 1, 0], &[0, 1, 1]]);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero(&a.apply(&k[0])));
        let b = vec![f.one(), f.from_int(2)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.apply(&x), b);
        let inconsistent = m(f, &[&[1, 0], &[1, 0]]);
        assert!(inconsistent.solve(&[f.one(), f.zero()]).is_none());
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        // number of subspaces of GF(q)^n: sum of Gaussian binomials
        assert_eq!(enumerate_subspaces(FieldSpec::GF2, 2).len(), 1 + 3 + 1);
        assert_eq!(enumerate_subspaces(FieldSpec::GF3, 2).len(), 1 + 4 + 1);
        assert_eq!(enumerate_subspaces(FieldSpec::GF2, 3).len(), 1 + 7 + 7 + 1);
        assert_eq!(enumerate_subspaces(FieldSpec::GF3, 4).len(), 1 + 40 + 130 + 40 + 1);
        let all = enumerate_subspaces(FieldSpec::GF4, 3);
        let mut dedup = all.clone();
        dedup.sort_by_key(|s| format!("{:?}", s.basis));
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn subspace_ops() {
        let f = FieldSpec::GF2;
        let e = |i| unit_vector(f, 3, i);
        let a = Subspace::span(f, 3, &[e(0), e(1)]);
        let b = Subspace::span(f, 3, &[e(1), e(2)]);
        assert_eq!(a.intersection(&b), Subspace::span(f, 3, &[e(1)]));
        assert_eq!(a.sum(&b), Subspace::full(f, 3));
        assert!(a.contains(&add(&e(0), &e(1))));
        assert!(!a.contains(&e(2)));
        assert_eq!(a.elements().len(), 4);
    }

    #[test]
    fn minimal_polynomials() {
        let f = FieldSpec::GF2;
        // companion matrix of x^2 + x + 1
        let c = m(f, &[&[0, 1], &[1, 1]]);
        assert_eq!(minimal_polynomial(&c), vec![f.one(), f.one(), f.one()]);
        let id = Matrix::identity(f, 3);
        assert_eq!(minimal_polynomial(&id), vec![f.one(), f.one()]);
    }

    #[test]
    fn paired_echelon_tracks_linear_map() {
        let f = FieldSpec::GF3;
        let mut pe = PairedEchelon::new(f);
        let v1 = vec![f.one(), f.one(), f.zero()];
        let v2 = vec![f.zero(), f.one(), f.one()];
        assert!(pe.insert(&v1, &[f.one()]));
        assert!(pe.insert(&v2, &[f.from_int(2)]));
        assert!(!pe.insert(&add(&v1, &v2), &[f.zero()]));
        // f(v1 + v2) = 1 + 2 = 0
        assert_eq!(pe.evaluate(&add(&v1, &v2), 1), Some(vec![f.zero()]));
        assert_eq!(pe.evaluate(&[f.one(), f.zero(), f.zero()], 1), None);
    }
}
