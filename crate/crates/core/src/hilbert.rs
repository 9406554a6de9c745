//! Finite Hilbert ε(E)-modules with a G-action: `ℓ²(G)`, `ℓ²(G_H/H)`,
//! the Mingo–Phillips operator `V` and the compact operators `K(M)`.

use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{GAlgebra, StarAlgebra, Violation};
use crate::error::{Error, Result};
use crate::induction::CosetTable;
use crate::isg::Isg;
use crate::linalg::{self, definiteness, Basis, Definiteness, Matrix, Vector};
use crate::models::{epsilon_algebra, GSet};
use crate::morphism::{check_map, Equivariance};
use crate::scalar::{Rational, Scalar};

/// A right Hilbert module over `ε(E)` of finite rank, stored on a basis.
#[derive(Clone, Debug)]
pub struct HModule {
    pub coeff: GAlgebra,
    labels: Vec<String>,
    /// `⟨b_i, b_j⟩` in the `1_e` basis of `ε(E)`.
    gram: Vec<Vec<Vector>>,
    /// `b_i · 1_e`, indexed by basis element then idempotent position.
    right: Vec<Vec<Vector>>,
    action: Vec<Matrix>,
}

impl HModule {
    pub fn semigroup(&self) -> &Arc<Isg> {
        self.coeff.semigroup()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn action_matrix(&self, h: usize) -> &Matrix {
        &self.action[h]
    }

    pub fn act(&self, h: usize, xi: &[Scalar]) -> Vector {
        self.action[h].apply(xi)
    }

    /// `⟨ξ, η⟩`, conjugate-linear in `ξ`.
    pub fn inner(&self, xi: &[Scalar], eta: &[Scalar]) -> Vector {
        let mut out = linalg::zeros(self.coeff.dim());
        for (i, x) in xi.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let cx = x.conj();
            for (j, y) in eta.iter().enumerate() {
                if !y.is_zero() {
                    linalg::axpy(&mut out, &(&cx * y), &self.gram[i][j]);
                }
            }
        }
        out
    }

    /// `ξ · f` for `f ∈ ε(E)`.
    pub fn right_mul(&self, xi: &[Scalar], f: &[Scalar]) -> Vector {
        let mut out = linalg::zeros(self.dim());
        for (i, x) in xi.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (e, c) in f.iter().enumerate() {
                if !c.is_zero() {
                    linalg::axpy(&mut out, &(x * c), &self.right[i][e]);
                }
            }
        }
        out
    }

    /// Right multiplication by `1_e` as a matrix.
    pub fn right_projection(&self, e: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|i| self.right[i][e].clone()).collect();
        Matrix::from_columns(self.dim(), &cols)
    }

    /// The Hermitian matrix of the `1_e`-coefficient of the inner product.
    pub fn gram_at(&self, e: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.gram[i][j][e].clone();
            }
        }
        m
    }

    /// `‖ξ‖² = max_e ⟨ξ, ξ⟩(e)`.
    pub fn norm_sqr(&self, xi: &[Scalar]) -> Rational {
        self.inner(xi, xi).iter().map(|c| c.re.clone()).max().unwrap_or_else(Rational::zero)
    }

    /// Whether the inner products span all of `ε(E)`.
    pub fn is_full(&self) -> bool {
        let mut ech = linalg::Echelon::new(self.coeff.dim());
        for row in &self.gram {
            for v in row {
                ech.insert(v.clone());
            }
        }
        ech.rank() == self.coeff.dim()
    }

    /// Direct sum of modules over the same semigroup.
    pub fn direct_sum(parts: &[&HModule]) -> Result<HModule> {
        let first = parts.first().ok_or_else(|| Error::DimensionMismatch("empty direct sum".into()))?;
        let s = first.semigroup().clone();
        if parts.iter().any(|p| **p.semigroup() != *s) {
            return Err(Error::InvalidAction("modules over different semigroups".into()));
        }
        let n: usize = parts.iter().map(|p| p.dim()).sum();
        let m = first.coeff.dim();
        let mut labels = Vec::with_capacity(n);
        let mut gram = vec![vec![linalg::zeros(m); n]; n];
        let mut right = vec![vec![linalg::zeros(n); m]; n];
        let mut offset = 0;
        for (k, p) in parts.iter().enumerate() {
            for i in 0..p.dim() {
                labels.push(format!("{}#{k}", p.labels[i]));
                for j in 0..p.dim() {
                    gram[offset + i][offset + j] = p.gram[i][j].clone();
                }
                for e in 0..m {
                    right[offset + i][e][offset..offset + p.dim()].clone_from_slice(&p.right[i][e]);
                }
            }
            offset += p.dim();
        }
        let action = (0..s.len())
            .map(|h| crate::algebra::block_diagonal(&parts.iter().map(|p| &p.action[h]).collect::<Vec<_>>()))
            .collect();
        Ok(HModule { coeff: first.coeff.clone(), labels, gram, right, action })
    }

    /// The submodule spanned by `vectors`, which must be invariant under
    /// the right action and the G-action.
    pub fn submodule(&self, vectors: Vec<Vector>, labels: Vec<String>) -> Result<HModule> {
        let basis = Basis::new(self.dim(), vectors.clone())
            .ok_or_else(|| Error::DimensionMismatch("submodule vectors are dependent".into()))?;
        let coords = |v: &Vector, what: &str| {
            basis.coords(v).ok_or_else(|| Error::InvalidAction(format!("submodule not invariant under {what}")))
        };
        let m = self.coeff.dim();
        let n = vectors.len();
        let mut gram = vec![vec![linalg::zeros(m); n]; n];
        let mut right = vec![vec![linalg::zeros(n); m]; n];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = self.inner(&vectors[i], &vectors[j]);
            }
            for e in 0..m {
                right[i][e] = coords(&self.right_mul(&vectors[i], &linalg::unit(m, e)), "the coefficients")?;
            }
        }
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            let cols = vectors.iter().map(|v| coords(&a.apply(v), "the semigroup")).collect::<Result<Vec<_>>>()?;
            action.push(Matrix::from_columns(n, &cols));
        }
        Ok(HModule { coeff: self.coeff.clone(), labels, gram, right, action })
    }

    /// Axioms of a G-Hilbert module on basis data, plus positivity and the
    /// nonexpansiveness bound `⟨hξ, hξ⟩ ≤ h⟨ξ, ξ⟩`, both as exact
    /// statements about Hermitian forms.
    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let s = self.semigroup().clone();
        let (n, m) = (self.dim(), self.coeff.dim());
        let ca = &self.coeff.alg;
        for i in 0..n {
            for j in 0..n {
                let gij = &self.gram[i][j];
                if *gij != ca.star(&self.gram[j][i]) {
                    out.push(Violation::new("conjugate symmetry", format!("({}, {})", self.labels[i], self.labels[j])));
                }
                for e in 0..m {
                    let f = linalg::unit(m, e);
                    let lhs = self.inner(&linalg::unit(n, i), &self.right[j][e]);
                    if lhs != ca.mul(gij, &f) {
                        out.push(Violation::new(
                            "coefficient linearity",
                            format!("({}, {}·{})", self.labels[i], self.labels[j], ca.label(e)),
                        ));
                    }
                }
            }
            for e in 0..m {
                for f in 0..m {
                    let lhs = self.right_mul(&self.right[i][e], &linalg::unit(m, f));
                    let rhs = self.right_mul(&linalg::unit(n, i), &ca.basis_product(e, f));
                    if lhs != rhs {
                        out.push(Violation::new("right action", format!("{}·{}·{}", self.labels[i], ca.label(e), ca.label(f))));
                    }
                }
            }
        }
        let mut sum = Matrix::zeros(n, n);
        for e in 0..m {
            let g = self.gram_at(e);
            if definiteness(&g) == Definiteness::Indefinite {
                out.push(Violation::new("positivity", format!("coefficient {}", ca.label(e))));
            }
            sum = sum.add(&g);
        }
        if n > 0 && definiteness(&sum) != Definiteness::PositiveDefinite {
            out.push(Violation::new("definiteness", "some nonzero ξ has ⟨ξ, ξ⟩ = 0"));
        }
        for h in 0..s.len() {
            for i in 0..n {
                for e in 0..m {
                    let lhs = self.act(h, &self.right[i][e]);
                    let rhs = self.right_mul(&self.act(h, &linalg::unit(n, i)), &self.coeff.act(h, &linalg::unit(m, e)));
                    if lhs != rhs {
                        out.push(Violation::new("h(ξf) = h(ξ)h(f)", format!("h={h}, {}·{}", self.labels[i], ca.label(e))));
                    }
                }
            }
            let a = &self.action[h];
            for e in 0..m {
                let moved_gram = {
                    let mut g = Matrix::zeros(n, n);
                    for i in 0..n {
                        for j in 0..n {
                            g[(i, j)] = self.coeff.act(h, &self.gram[i][j])[e].clone();
                        }
                    }
                    g
                };
                let pulled = a.conj_transpose().mul(&self.gram_at(e)).mul(a);
                if definiteness(&moved_gram.sub(&pulled)) == Definiteness::Indefinite {
                    out.push(Violation::new("nonexpansive action", format!("h={h}, coefficient {}", ca.label(e))));
                }
            }
            for g in 0..s.len() {
                if self.action[s.mul(h, g)] != a.mul(&self.action[g]) {
                    out.push(Violation::new("action is multiplicative", format!("({h}, {g})")));
                }
            }
        }
        out
    }
}

fn idem_pos(s: &Isg, e: usize) -> usize {
    s.idempotents().binary_search(&e).expect("idempotent")
}

/// `ℓ²(G)` with `(ξf)(g) = ξ(g) f(gg*)`, `⟨ξ,η⟩(e) = Σ_{gg*=e} conj ξ(g) η(g)`
/// and `(hξ)(g) = ξ(h*g) [hh* ≥ gg*]`.
pub fn build_l2(s: Arc<Isg>) -> HModule {
    let n = s.len();
    let m = s.idempotents().len();
    let coeff = epsilon_algebra(s.clone());
    let labels = (0..n).map(|x| format!("δ_{x}")).collect();
    let mut gram = vec![vec![linalg::zeros(m); n]; n];
    let mut right = vec![vec![linalg::zeros(n); m]; n];
    for x in 0..n {
        let e = idem_pos(&s, s.range_idem(x));
        gram[x][x][e] = Scalar::one();
        right[x][e][x] = Scalar::one();
    }
    let action = (0..n)
        .map(|h| {
            let hh = s.range_idem(h);
            let hs = s.inv(h);
            let mut a = Matrix::zeros(n, n);
            for g in 0..n {
                if s.leq(s.range_idem(g), hh) {
                    a[(g, s.mul(hs, g))] = Scalar::one();
                }
            }
            a
        })
        .collect();
    HModule { coeff, labels, gram, right, action }
}

/// `ℓ²(G_H/H)`: functions on `G` vanishing off `G_H` and constant on classes.
pub fn build_l2_cosets(s: Arc<Isg>, cosets: &CosetTable) -> Result<HModule> {
    let l2 = build_l2(s.clone());
    let vectors: Vec<Vector> = cosets
        .classes()
        .iter()
        .map(|class| {
            let mut v = linalg::zeros(s.len());
            for &x in class {
                v[x] = Scalar::one();
            }
            v
        })
        .collect();
    let labels = cosets.reps().iter().map(|r| format!("χ_[{r}]")).collect();
    l2.submodule(vectors, labels)
}

/// Checks specific to `ℓ²(G)`: orthogonality of point masses, fullness,
/// the generic module axioms and the translation bijections
/// `{g : gg* = h*h} → {g : gg* = hh*}`, `g ↦ hg`.
pub fn l2_checks(s: &Arc<Isg>) -> Vec<Violation> {
    let l2 = build_l2(s.clone());
    let n = s.len();
    let m = s.idempotents().len();
    let mut out = l2.check();
    for g in 0..n {
        for h in 0..n {
            let expected = if g == h { linalg::unit(m, idem_pos(s, s.range_idem(g))) } else { linalg::zeros(m) };
            if l2.inner(&linalg::unit(n, g), &linalg::unit(n, h)) != expected {
                out.push(Violation::new("⟨δ_g, δ_h⟩ = [g = h] 1_{gg*}", format!("({g}, {h})")));
            }
        }
    }
    if !l2.is_full() {
        out.push(Violation::new("fullness", "inner products miss some 1_e"));
    }
    for h in 0..n {
        let (src, dst) = (s.domain_idem(h), s.range_idem(h));
        let from: Vec<usize> = (0..n).filter(|&g| s.range_idem(g) == src).collect();
        let mut to: Vec<usize> = (0..n).filter(|&g| s.range_idem(g) == dst).collect();
        let mut image: Vec<usize> = from.iter().map(|&g| s.mul(h, g)).collect();
        image.sort_unstable();
        image.dedup();
        to.sort_unstable();
        if image != to || image.len() != from.len() {
            out.push(Violation::new("translation bijection", format!("h={h}")));
        }
    }
    out
}

/// Sampled form of the nonexpansiveness bound: `‖hξ‖ ≤ ‖ξ‖` for random rational `ξ`.
pub fn sample_nonexpansive<R: Rng>(rng: &mut R, module: &HModule, samples: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    for t in 0..samples {
        let xi: Vector = (0..module.dim()).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect();
        let norm = module.norm_sqr(&xi);
        for h in 0..module.semigroup().len() {
            if module.norm_sqr(&module.act(h, &xi)) > norm {
                out.push(Violation::new("‖hξ‖ ≤ ‖ξ‖", format!("sample {t}, h={h}")));
            }
        }
    }
    out
}

/// A random unitary module map on a module whose basis vectors are
/// orthonormal within their support `1_e` (such as `ℓ²(G)`): a Cayley
/// transform `(I − S)(I + S)⁻¹` of a random skew-Hermitian `S` on each support.
pub fn random_module_unitary<R: Rng>(rng: &mut R, module: &HModule) -> Result<Matrix> {
    let n = module.dim();
    let m = module.coeff.dim();
    let mut support = Vec::with_capacity(n);
    for i in 0..n {
        let e = (0..m)
            .find(|&e| module.right[i][e] == linalg::unit(n, i))
            .ok_or_else(|| Error::InvalidAction("basis vector without a single support".into()))?;
        for j in 0..n {
            let expected = if i == j { linalg::unit(m, e) } else { linalg::zeros(m) };
            if module.gram[i][j] != expected {
                return Err(Error::InvalidAction("basis is not orthonormal on supports".into()));
            }
        }
        support.push(e);
    }
    let mut u = Matrix::zeros(n, n);
    for e in 0..m {
        let idx: Vec<usize> = (0..n).filter(|&i| support[i] == e).collect();
        let k = idx.len();
        if k == 0 {
            continue;
        }
        let mut s = Matrix::zeros(k, k);
        for a in 0..k {
            for b in 0..k {
                let x = Scalar::new(Rational::from_int(rng.gen_range(-2..=2)), Rational::from_int(rng.gen_range(-2..=2)));
                s[(a, b)] += &x;
                s[(b, a)] -= &x.conj();
            }
        }
        let id = Matrix::identity(k);
        let block = id.sub(&s).mul(&id.add(&s).inverse().expect("I + S is invertible for skew-Hermitian S"));
        for a in 0..k {
            for b in 0..k {
                u[(idx[a], idx[b])] = block[(a, b)].clone();
            }
        }
    }
    Ok(u)
}

#[derive(Clone, Debug, Serialize)]
pub struct MingoReport {
    pub dim: usize,
    pub violations: Vec<Violation>,
}

/// `V(1_g ⊗ ξ) = 1_g ⊗ g u g*(ξ)` on `ℓ²(G) ⊗ E_i`, realized on
/// `⊕_g E_i · 1_{gg*}`. Checks that `V` is equivariant and isometric.
pub fn mingo_v(e1: &HModule, e2: &HModule, u: &Matrix) -> Result<MingoReport> {
    let s = e1.semigroup().clone();
    if **e2.semigroup() != *s {
        return Err(Error::InvalidAction("modules over different semigroups".into()));
    }
    let (n1, n2, m) = (e1.dim(), e2.dim(), e1.coeff.dim());
    if u.rows() != n2 || u.cols() != n1 {
        return Err(Error::NotUnitary(format!("u is {}x{}, modules have rank {n1} and {n2}", u.rows(), u.cols())));
    }
    for i in 0..n1 {
        for e in 0..m {
            if u.apply(&e1.right[i][e]) != e2.right_mul(&u.column(i), &linalg::unit(m, e)) {
                return Err(Error::NotUnitary(format!("u is not coefficient-linear at ({}, {e})", e1.labels[i])));
            }
        }
        for j in 0..n1 {
            if e2.inner(&u.column(i), &u.column(j)) != e1.gram[i][j] {
                return Err(Error::NotUnitary(format!("u does not preserve ⟨{}, {}⟩", e1.labels[i], e1.labels[j])));
            }
        }
    }
    if n1 != n2 || u.rank() != n1 {
        return Err(Error::NotUnitary("u is not surjective".into()));
    }
    let l2 = build_l2(s.clone());
    let n = s.len();
    let proj1: Vec<Matrix> = (0..n).map(|g| e1.right_projection(idem_pos(&s, s.range_idem(g)))).collect();
    let proj2: Vec<Matrix> = (0..n).map(|g| e2.right_projection(idem_pos(&s, s.range_idem(g)))).collect();
    // spanning vectors (g, ξ) of ⊕_g E·1_{gg*}
    let spanning: Vec<(usize, Vector)> = (0..n)
        .flat_map(|g| {
            let p = &proj1[g];
            (0..n1).map(move |i| (g, p.column(i))).filter(|(_, v)| !linalg::is_zero(v)).collect::<Vec<_>>()
        })
        .collect();
    let v_map = |g: usize, xi: &Vector| -> Vector { e2.act(g, &u.apply(&e1.act(s.inv(g), xi))) };
    let act_tensor = |module: &HModule, proj: &[Matrix], k: usize, g: usize, xi: &Vector| -> Vec<(usize, Vector)> {
        let moved = module.act(k, xi);
        let col = l2.action_matrix(k).column(g);
        col.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(x, c)| (x, linalg::scale(&proj[x].apply(&moved), c)))
            .filter(|(_, v)| !linalg::is_zero(v))
            .collect()
    };
    let mut violations = Vec::new();
    for (a, (g, xi)) in spanning.iter().enumerate() {
        let vx = v_map(*g, xi);
        if proj2[*g].apply(&vx) != vx {
            violations.push(Violation::new("V lands in the balanced tensor", format!("g={g}")));
        }
        for (h, eta) in &spanning[a..] {
            if g != h {
                continue;
            }
            let e = linalg::unit(m, idem_pos(&s, s.range_idem(*g)));
            let lhs = e1.coeff.alg.mul(&e2.inner(&vx, &v_map(*h, eta)), &e);
            let rhs = e1.coeff.alg.mul(&e1.inner(xi, eta), &e);
            if lhs != rhs {
                violations.push(Violation::new("V isometric", format!("g={g}")));
            }
        }
        for k in 0..n {
            let lhs = act_tensor(e2, &proj2, k, *g, &vx);
            let rhs: Vec<(usize, Vector)> =
                act_tensor(e1, &proj1, k, *g, xi).into_iter().map(|(x, w)| (x, v_map(x, &w))).filter(|(_, v)| !linalg::is_zero(v)).collect();
            if lhs != rhs {
                violations.push(Violation::new("V equivariant", format!("k={k}, g={g}")));
            }
        }
    }
    Ok(MingoReport { dim: spanning.len(), violations })
}

/// `K(M)` spanned by `θ_{ξ,η}(ζ) = ξ⟨η, ζ⟩` with `α_k(T) = k T k*`, and the
/// diagonal embedding of `c_0` of the basis points.
pub struct Compacts {
    pub algebra: GAlgebra,
    /// Basis elements as operators on the module.
    pub operators: Vec<Matrix>,
    pub diagonal_source: GAlgebra,
    pub diagonal: Matrix,
    pub violations: Vec<Violation>,
}

fn theta(module: &HModule, xi: &[Scalar], eta: &[Scalar]) -> Matrix {
    let n = module.dim();
    let cols: Vec<Vector> = (0..n).map(|k| module.right_mul(xi, &module.inner(eta, &linalg::unit(n, k)))).collect();
    Matrix::from_columns(n, &cols)
}

pub fn compacts_and_diagonal(module: &HModule) -> Result<Compacts> {
    let s = module.semigroup().clone();
    let n = module.dim();
    let unit = |i: usize| linalg::unit(n, i);
    let mut violations = Vec::new();
    let mut ops: Vec<Matrix> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut ech = linalg::Echelon::new(n * n);
    for i in 0..n {
        for j in 0..n {
            let t = theta(module, &unit(i), &unit(j));
            if ech.insert(t.to_vector()) {
                ops.push(t);
                pairs.push((i, j));
            }
        }
    }
    let labels = pairs.iter().map(|&(i, j)| format!("θ({},{})", module.labels[i], module.labels[j])).collect();
    let basis = Basis::new(n * n, ops.iter().map(|t| t.to_vector()).collect()).expect("independent by construction");
    let coords = |t: &Matrix, what: &str| {
        basis.coords(&t.to_vector()).ok_or_else(|| Error::InvalidAlgebra(format!("K(M) not closed under {what}")))
    };
    let d = ops.len();
    let mut products = vec![vec![linalg::zeros(d); d]; d];
    for a in 0..d {
        for b in 0..d {
            products[a][b] = coords(&ops[a].mul(&ops[b]), "products")?;
        }
    }
    let mut stars = Vec::with_capacity(d);
    for (a, &(i, j)) in pairs.iter().enumerate() {
        let adj = theta(module, &unit(j), &unit(i));
        for k in 0..n {
            for l in 0..n {
                if module.inner(&ops[a].column(k), &unit(l)) != module.inner(&unit(k), &adj.column(l)) {
                    violations.push(Violation::new("θ_{ξ,η}* = θ_{η,ξ}", format!("basis {a}")));
                }
            }
        }
        stars.push(coords(&adj, "adjoints")?);
    }
    let alg = StarAlgebra::new(labels, products, stars)?;
    let mut action = Vec::with_capacity(s.len());
    for k in 0..s.len() {
        let (ak, aks) = (module.action_matrix(k), module.action_matrix(s.inv(k)));
        let mut cols = Vec::with_capacity(d);
        for (a, &(i, j)) in pairs.iter().enumerate() {
            let moved = ak.mul(&ops[a]).mul(aks);
            if moved != theta(module, &ak.column(i), &ak.column(j)) {
                violations.push(Violation::new("k θ_{ξ,η} k* = θ_{kξ,kη}", format!("k={k}, basis {a}")));
            }
            cols.push(coords(&moved, "the action")?);
        }
        action.push(Matrix::from_columns(d, &cols));
    }
    let algebra = GAlgebra::new(alg, s.clone(), action)?;
    violations.extend(algebra.validate());
    let diagonal_source = basis_gset(module)?.algebra(s.clone());
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let g = module.inner(&unit(i), &unit(i));
        let support: Vec<usize> = linalg::support(&g).map(|(e, _)| e).collect();
        let w = match support.as_slice() {
            [e] if g[*e].is_real() && !g[*e].re.is_negative() => g[*e].clone(),
            _ => return Err(Error::InvalidAction(format!("{} is not supported on a single idempotent", module.labels[i]))),
        };
        let t = theta(module, &unit(i), &unit(i));
        cols.push(linalg::scale(&coords(&t, "the diagonal")?, &w.recip()));
    }
    let diagonal = Matrix::from_columns(d, &cols);
    let report = check_map(&diagonal_source, &algebra, &diagonal, Equivariance::Same, false);
    violations.extend(report.violations);
    if report.rank != n {
        violations.push(Violation::new("diagonal embedding injective", format!("rank {} of {n}", report.rank)));
    }
    let module_maps = commutant_dim(module);
    if module_maps != d {
        violations.push(Violation::new("K(M) = module maps", format!("{d} vs {module_maps}")));
    }
    Ok(Compacts { algebra, operators: ops, diagonal_source, diagonal, violations })
}

/// Dimension of the space of operators commuting with the right action.
fn commutant_dim(module: &HModule) -> usize {
    let n = module.dim();
    let mut rows = Vec::new();
    for e in 0..module.coeff.dim() {
        let p = module.right_projection(e);
        // T p − p T = 0, with T unknown in row-major order
        for i in 0..n {
            for j in 0..n {
                let mut row = linalg::zeros(n * n);
                for k in 0..n {
                    row[i * n + k] += &p[(k, j)];
                    row[k * n + j] -= &p[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    n * n - Matrix::from_rows(n * n, &rows).rank()
}

/// The G-set on basis points induced by an action that maps basis vectors
/// to basis vectors or to zero.
pub fn basis_gset(module: &HModule) -> Result<GSet> {
    let s = module.semigroup();
    let n = module.dim();
    let mut maps = Vec::with_capacity(s.len());
    for h in 0..s.len() {
        let mut row = Vec::with_capacity(n);
        for i in 0..n {
            let col = module.act(h, &linalg::unit(n, i));
            let support: Vec<usize> = linalg::support(&col).map(|(j, _)| j).collect();
            match support.as_slice() {
                [] => row.push(None),
                [j] if col[*j].is_one() => row.push(Some(*j)),
                _ => return Err(Error::InvalidAction(format!("h={h} does not permute basis vectors"))),
            }
        }
        maps.push(row);
    }
    GSet::new(s, module.labels.clone(), maps)
}
