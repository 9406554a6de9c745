//! Dense exact linear algebra over the Gaussian rationals.

use std::fmt;

use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

pub fn zeros(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += a·x`
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(a * xi);
        }
    }
}

pub fn scale(v: &[Scalar], a: &Scalar) -> Vector {
    v.iter().map(|x| a * x).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn conj(v: &[Scalar]) -> Vector {
    v.iter().map(Scalar::conj).collect()
}

/// Kronecker product of coordinate vectors, `a` major.
pub fn kron(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

pub fn support(v: &[Scalar]) -> impl Iterator<Item = (usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            data.extend(row.iter().cloned());
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "dimension mismatch in apply");
        let mut out = zeros(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, a: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| a * x).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Flattened row-major entries, used when operators are treated as vectors.
    pub fn to_vector(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_vector(rows: usize, cols: usize, v: Vector) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix { rows, cols, data: v }
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                if !self[(r, j)].is_zero() {
                    self[(r, j)] = &self[(r, j)] * &inv;
                }
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let x = &self.data[r * self.cols + j];
                    if !x.is_zero() {
                        let d = &f * x;
                        self.data[i * self.cols + j] -= &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.rank()
    }

    /// Basis of `{x : Mx = 0}`, one vector per free column of the RREF.
    pub fn nullspace(&self) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zeros(self.cols);
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&m[(r, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Canonical basis of the column space (rows of the RREF of the transpose).
    pub fn column_space(&self) -> Vec<Vector> {
        let mut t = self.transpose();
        let pivots = t.rref();
        (0..pivots.len()).map(|r| t.row(r).to_vec()).collect()
    }

    /// Solves `Mx = b`, returning any solution.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zeros(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Characteristic polynomial `det(xI - M)`, coefficients low degree first.
    ///
    /// Reduces to upper Hessenberg form by elementary similarities, then runs
    /// the standard determinant recurrence on the Hessenberg matrix.
    pub fn char_poly(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for c in 0..n.saturating_sub(2) {
            let Some(p) = (c + 1..n).find(|&i| !h[(i, c)].is_zero()) else {
                continue;
            };
            if p != c + 1 {
                // swap rows and columns p <-> c+1
                for j in 0..n {
                    h.data.swap(p * n + j, (c + 1) * n + j);
                }
                for i in 0..n {
                    h.data.swap(i * n + p, i * n + c + 1);
                }
            }
            let pivot = h[(c + 1, c)].clone();
            for i in c + 2..n {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let f = &h[(i, c)] / &pivot;
                // row_i -= f row_{c+1}; col_{c+1} += f col_i
                for j in 0..n {
                    let x = h[(c + 1, j)].clone();
                    if !x.is_zero() {
                        h[(i, j)] -= &(&f * &x);
                    }
                }
                for k in 0..n {
                    let x = h[(k, i)].clone();
                    if !x.is_zero() {
                        h[(k, c + 1)] += &(&f * &x);
                    }
                }
            }
        }
        // p_k = char poly of leading k×k block
        let mut polys: Vec<Poly> = vec![Poly::one()];
        for k in 1..=n {
            let m = k - 1;
            let mut pk = Poly::x().mul(&polys[m]).sub(&polys[m].scale(&h[(m, m)]));
            let mut prod = Scalar::one();
            for i in (0..m).rev() {
                prod = &prod * &h[(i + 1, i)];
                if prod.is_zero() {
                    break;
                }
                let coeff = &prod * &h[(i, m)];
                if !coeff.is_zero() {
                    pk = pk.sub(&polys[i].scale(&coeff));
                }
            }
            polys.push(pk);
        }
        polys.pop().unwrap()
    }
}

/// Incremental row echelon basis of a subspace of `Q(i)^dim`.
///
/// Rows are kept sparse and in insertion order; each row vanishes on the
/// pivots of all earlier rows, so reducing in insertion order is exact.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<(usize, Scalar)>)>,
    pivot_of: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), pivot_of: vec![None; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &mut [Scalar]) {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let c = v[*pivot].clone();
            for (j, x) in row {
                v[*j] -= &(&c * x);
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero(&w)
    }

    /// Adds `v` to the span; returns false when it was already contained.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.dim, "echelon dimension mismatch");
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        let row: Vec<(usize, Scalar)> =
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x * &inv)).collect();
        self.pivot_of[pivot] = Some(self.rows.len());
        self.rows.push((pivot, row));
        true
    }

    /// The stored basis rows as dense vectors.
    pub fn basis(&self) -> Vec<Vector> {
        self.rows
            .iter()
            .map(|(_, row)| {
                let mut v = zeros(self.dim);
                for (j, x) in row {
                    v[*j] = x.clone();
                }
                v
            })
            .collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }
}

/// A fixed list of independent vectors with exact coordinate extraction.
#[derive(Clone, Debug)]
pub struct Basis {
    vectors: Vec<Vector>,
    dim: usize,
    // echelon rows paired with the combination of `vectors` producing them
    rows: Vec<(usize, Vector, Vector)>,
}

impl Basis {
    /// Fails (returns `None`) if the vectors are dependent.
    pub fn new(dim: usize, vectors: Vec<Vector>) -> Option<Self> {
        let k = vectors.len();
        let mut rows: Vec<(usize, Vector, Vector)> = Vec::with_capacity(k);
        for (idx, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), dim);
            let mut w = v.clone();
            let mut comb = unit(k, idx);
            for (p, row, rc) in &rows {
                if w[*p].is_zero() {
                    continue;
                }
                let c = w[*p].clone();
                axpy(&mut w, &(-&c), row);
                axpy(&mut comb, &(-&c), rc);
            }
            let pivot = w.iter().position(|x| !x.is_zero())?;
            let inv = w[pivot].recip();
            rows.push((pivot, scale(&w, &inv), scale(&comb, &inv)));
        }
        Some(Basis { vectors, dim, rows })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &Vector {
        &self.vectors[i]
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        let mut w = v.to_vec();
        let mut comb = zeros(self.vectors.len());
        for (p, row, rc) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let c = w[*p].clone();
            axpy(&mut w, &(-&c), row);
            axpy(&mut comb, &c, rc);
        }
        if is_zero(&w) {
            Some(comb)
        } else {
            None
        }
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = zeros(self.dim);
        for (c, v) in coords.iter().zip(&self.vectors) {
            axpy(&mut out, c, v);
        }
        out
    }
}

/// Polynomial with coefficients low degree first; trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Scalar>);

impl Poly {
    pub fn one() -> Poly {
        Poly(vec![Scalar::one()])
    }

    pub fn x() -> Poly {
        Poly(vec![Scalar::zero(), Scalar::one()])
    }

    fn trim(mut self) -> Poly {
        while self.0.last().is_some_and(Scalar::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn lead(&self) -> Scalar {
        self.0.iter().rev().find(|c| !c.is_zero()).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, a: &Scalar) -> Poly {
        Poly(self.0.iter().map(|c| c * a).collect()).trim()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Scalar::zero();
        Poly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect()).trim()
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly(vec![]);
        }
        let mut out = zeros(self.0.len() + o.0.len() - 1);
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Poly(out).trim()
    }

    pub fn derivative(&self) -> Poly {
        Poly(self.0.iter().enumerate().skip(1).map(|(i, c)| c * &Scalar::from_int(i as i64)).collect()).trim()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let d = d.clone().trim();
        let mut r = self.clone().trim();
        let dd = d.degree();
        let lead_inv = d.lead().recip();
        let mut q = zeros(r.0.len().saturating_sub(dd).max(1));
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let c = &r.lead() * &lead_inv;
            q[shift] = c.clone();
            let mut term = zeros(shift);
            term.extend(d.0.iter().map(|x| x * &c));
            r = r.sub(&Poly(term));
        }
        (Poly(q).trim(), r)
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone().trim(), o.clone().trim());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Yun's algorithm: returns `(k, P_k)` with `self = c · ∏ P_k^k`, each
    /// `P_k` monic and squarefree, skipping trivial factors.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, Poly)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == 0 {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((k, a.clone()));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            k += 1;
        }
        out
    }
}

/// Sign data of a Hermitian form, by exact symmetric elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

/// Classifies a Hermitian matrix. Non-Hermitian input is reported as indefinite.
pub fn definiteness(m: &Matrix) -> Definiteness {
    let n = m.rows();
    if m.cols() != n || m.conj_transpose() != *m {
        return Definiteness::Indefinite;
    }
    let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut live: Vec<usize> = (0..n).collect();
    let mut full_rank = true;
    while !live.is_empty() {
        if live.iter().any(|&i| a[i][i].re.is_negative()) {
            return Definiteness::Indefinite;
        }
        let Some(pos) = live.iter().position(|&i| !a[i][i].is_zero()) else {
            // a zero diagonal forces the whole remaining block to vanish
            if live.iter().any(|&i| live.iter().any(|&j| !a[i][j].is_zero())) {
                return Definiteness::Indefinite;
            }
            full_rank = false;
            break;
        };
        let k = live.remove(pos);
        let pivot = a[k][k].clone();
        for &i in &live {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for &j in &live {
                let d = &f * &a[k][j];
                a[i][j] -= &d;
            }
        }
    }
    if full_rank {
        Definiteness::PositiveDefinite
    } else {
        Definiteness::PositiveSemidefinite
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn definiteness_of_small_forms() {
        let m = |rows: &[[i64; 2]; 2]| {
            Matrix::from_rows(2, &rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect::<Vec<_>>())
        };
        assert_eq!(definiteness(&m(&[[2, 1], [1, 2]])), Definiteness::PositiveDefinite);
        assert_eq!(definiteness(&m(&[[1, 1], [1, 1]])), Definiteness::PositiveSemidefinite);
        assert_eq!(definiteness(&m(&[[1, 2], [2, 1]])), Definiteness::Indefinite);
        assert_eq!(definiteness(&m(&[[0, 1], [1, 0]])), Definiteness::Indefinite);
    }

    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(cols, &rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero(&a.apply(&ns[0])));
    }

    #[test]
    fn basis_coordinates() {
        let b = Basis::new(3, vec![
            vec![1.into(), 1.into(), 0.into()],
            vec![0.into(), 1.into(), 1.into()],
        ])
        .unwrap();
        let v: Vector = vec![2.into(), 5.into(), 3.into()];
        assert_eq!(b.coords(&v).unwrap(), vec![Scalar::from_int(2), Scalar::from_int(3)]);
        assert!(b.coords(&[1.into(), 0.into(), 0.into()]).is_none());
        assert!(Basis::new(2, vec![vec![1.into(), 1.into()], vec![2.into(), 2.into()]]).is_none());
    }

    #[test]
    fn char_poly_matches_expansion() {
        // companion-like matrix with char poly (x-1)(x-2)^2
        let a = m(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 1]]);
        let expected = Poly::x().sub(&Poly::one())
            .mul(&Poly::x().sub(&Poly(vec![2.into()])))
            .mul(&Poly::x().sub(&Poly(vec![2.into()])));
        assert_eq!(a.char_poly(), expected);
        // a dense one, checked against the determinant at a few points
        let b = m(&[&[0, 1, 2, 0], &[3, 0, 1, 1], &[1, 1, 0, 2], &[0, 4, 1, 1]]);
        let p = b.char_poly();
        assert_eq!(p.degree(), 4);
        for x in [-2i64, 0, 3] {
            let shifted = Matrix::identity(4).scale(&x.into()).sub(&b);
            let det = det_by_rref(&shifted);
            let val = p.0.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * &Scalar::from_int(x)) + c);
            assert_eq!(val, det);
        }
    }

    fn det_by_rref(a: &Matrix) -> Scalar {
        // Gaussian elimination tracking the product of pivots
        let n = a.rows();
        let mut w = a.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !w[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                for j in 0..n {
                    let t = w[(p, j)].clone();
                    w[(p, j)] = w[(c, j)].clone();
                    w[(c, j)] = t;
                }
                det = -det;
            }
            det = &det * &w[(c, c)];
            for i in c + 1..n {
                let f = &w[(i, c)] / &w[(c, c)];
                for j in c..n {
                    let d = &f * &w[(c, j)];
                    w[(i, j)] -= &d;
                }
            }
        }
        det
    }

    #[test]
    fn yun_decomposition() {
        let x1 = Poly::x().sub(&Poly::one());
        let x2 = Poly::x().add(&Poly::one());
        let f = x1.mul(&x1).mul(&x1).mul(&x1).mul(&x2);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(1, x2), (4, x1)]);
        assert!(!f.is_squarefree());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
