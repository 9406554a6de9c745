//! Covariance algebras `A ⋊ G` and their Sieben quotients, Wedderburn block
//! data of finite-dimensional *-algebras, and the imprimitivity invariant.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{GAlgebra, StarAlgebra, Violation};
use crate::error::{Error, Result};
use crate::induction::{CosetTable, IndAlgebra};
use crate::isg::SubIsg;
use crate::linalg::{self, definiteness, Basis, Definiteness, Echelon, Matrix, Poly, Vector};
use crate::scalar::{Rational, Scalar};

pub const DEFAULT_RETRIES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Universal,
    Sieben,
}

/// The covariance algebra spanned by `a δ_g`, or its Sieben quotient.
#[derive(Clone, Debug)]
pub struct CrossedAlg {
    pub variant: Variant,
    pub algebra: StarAlgebra,
    /// Dimension of the span of all `a δ_g` before any quotient.
    pub span_dim: usize,
    /// Dimension of the ideal divided out.
    pub ideal_dim: usize,
    pub violations: Vec<Violation>,
}

fn span_index(i: usize, g: usize, order: usize) -> usize {
    i * order + g
}

/// `(a δ_g)(b δ_h) = a g(b) δ_{gh}` and `(a δ_g)* = g*(a*) δ_{g*}`.
fn universal(a: &GAlgebra) -> Result<StarAlgebra> {
    let s = a.semigroup();
    let (n, order) = (a.dim(), s.len());
    let dim = n * order;
    let mut labels = Vec::with_capacity(dim);
    let mut table = vec![Vec::new(); dim * dim];
    let mut stars = Vec::with_capacity(dim);
    for i in 0..n {
        for g in 0..order {
            labels.push(format!("{}δ_{g}", a.alg.label(i)));
            let p = span_index(i, g, order);
            for j in 0..n {
                let moved = a.act(g, &a.alg.basis_vector(j));
                let prod = a.alg.mul(&a.alg.basis_vector(i), &moved);
                let terms: Vec<(usize, Scalar)> = linalg::support(&prod).map(|(k, c)| (k, c.clone())).collect();
                for h in 0..order {
                    let gh = s.mul(g, h);
                    table[p * dim + span_index(j, h, order)] =
                        terms.iter().map(|(k, c)| (span_index(*k, gh, order), c.clone())).collect();
                }
            }
            let gs = s.inv(g);
            let st = a.act(gs, &a.alg.basis_star(i));
            stars.push(linalg::support(&st).map(|(k, c)| (span_index(k, gs, order), c.clone())).collect());
        }
    }
    StarAlgebra::from_sparse(labels, table, stars)
}

/// Smallest two-sided *-ideal containing `generators`.
pub fn generated_ideal(alg: &StarAlgebra, generators: Vec<Vector>) -> Echelon {
    let n = alg.dim();
    let mut ech = Echelon::new(n);
    let mut queue: Vec<Vector> = Vec::new();
    for g in generators {
        if ech.insert(g.clone()) {
            queue.push(g);
        }
    }
    while let Some(v) = queue.pop() {
        let mut fresh = vec![alg.star(&v)];
        for j in 0..n {
            let b = alg.basis_vector(j);
            fresh.push(alg.mul(&b, &v));
            fresh.push(alg.mul(&v, &b));
        }
        for w in fresh {
            if ech.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    ech
}

pub fn covariance_algebra(a: &GAlgebra, variant: Variant) -> Result<CrossedAlg> {
    let invalid = a.validate();
    if let Some(v) = invalid.first() {
        return Err(Error::InvalidAlgebra(format!("{}: {}", v.axiom, v.witness)));
    }
    let span = universal(a)?;
    let span_dim = span.dim();
    let mut violations = span.check_axioms();
    match variant {
        Variant::Universal => Ok(CrossedAlg { variant, algebra: span, span_dim, ideal_dim: 0, violations }),
        Variant::Sieben => {
            let s = a.semigroup();
            let order = s.len();
            let mut gens = Vec::new();
            for &e in s.idempotents() {
                for i in 0..a.dim() {
                    let moved = a.act(e, &a.alg.basis_vector(i));
                    for g in 0..order {
                        let mut r = linalg::zeros(span_dim);
                        for (k, c) in linalg::support(&moved) {
                            r[span_index(k, g, order)] = c.clone();
                        }
                        r[span_index(i, s.mul(e, g), order)] -= &Scalar::one();
                        if !linalg::is_zero(&r) {
                            gens.push(r);
                        }
                    }
                }
            }
            let ideal = generated_ideal(&span, gens.clone());
            for (k, r) in gens.iter().enumerate() {
                if !ideal.contains(r) {
                    violations.push(Violation::new("relation vanishes in the quotient", format!("generator {k}")));
                }
            }
            let (algebra, _) = span.quotient(&ideal);
            violations.extend(algebra.check_axioms());
            Ok(CrossedAlg { variant, algebra, span_dim, ideal_dim: ideal.rank(), violations })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub dim: usize,
    pub radical_dim: usize,
    /// Sorted ascending.
    pub block_sizes: Vec<usize>,
    pub k0_rank: usize,
    /// Whether `tr_reg(x* y)` is positive definite on the semisimple quotient.
    pub positive: bool,
    pub seed: u64,
    pub attempts: usize,
}

/// Radical of the trace form of the left regular representation, extended
/// by `tr L_x = 0` so that non-unital algebras are handled through their
/// unitization.
pub fn trace_radical(alg: &StarAlgebra) -> Echelon {
    let n = alg.dim();
    let traces: Vec<Scalar> = (0..n)
        .map(|k| {
            let l = alg.left_mult(&alg.basis_vector(k));
            (0..n).fold(Scalar::zero(), |acc, i| &acc + &l[(i, i)])
        })
        .collect();
    let trace_of = |v: &Vector| v.iter().zip(&traces).fold(Scalar::zero(), |acc, (x, t)| &acc + &(x * t));
    // rows: x ↦ T(x, b_j) and x ↦ tr L_x
    let mut rows = Vec::with_capacity(n + 1);
    for j in 0..n {
        rows.push((0..n).map(|i| trace_of(&alg.basis_product(i, j))).collect::<Vector>());
    }
    rows.push(traces.clone());
    let mut ech = Echelon::new(n);
    for v in Matrix::from_rows(n, &rows).nullspace() {
        ech.insert(v);
    }
    ech
}

/// Centre of an algebra as a list of vectors.
pub fn center(alg: &StarAlgebra) -> Vec<Vector> {
    let n = alg.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        let b = alg.basis_vector(j);
        let cols: Vec<Vector> = (0..n).map(|i| linalg::sub(&alg.basis_product(i, j), &alg.mul(&b, &alg.basis_vector(i)))).collect();
        let m = Matrix::from_columns(n, &cols);
        for r in 0..n {
            rows.push(m.row(r).to_vec());
        }
    }
    if rows.is_empty() {
        return Vec::new();
    }
    Matrix::from_rows(n, &rows).nullspace()
}

fn trace(m: &Matrix) -> Scalar {
    (0..m.rows()).fold(Scalar::zero(), |acc, i| &acc + &m[(i, i)])
}

/// Block sizes from the characteristic polynomial of `L_z` for a central
/// self-adjoint `z`: an eigenvalue of multiplicity `k²` is one block of size `k`.
fn blocks_from_central(q: &StarAlgebra, z: &Vector, centre_dim: usize) -> Option<Vec<usize>> {
    let chi = q.left_mult(z).char_poly();
    let mut sizes = Vec::new();
    let mut roots = 0;
    for (k, p) in chi.squarefree_decomposition() {
        let d = p.degree();
        if d == 0 {
            continue;
        }
        let side = (k as f64).sqrt().round() as usize;
        if side * side != k {
            return None;
        }
        roots += d;
        sizes.extend(std::iter::repeat(side).take(d));
    }
    if roots != centre_dim {
        return None;
    }
    sizes.sort_unstable();
    Some(sizes)
}

pub fn semisimple_blocks(alg: &StarAlgebra, seed: u64, retries: usize) -> Result<BlockDecomposition> {
    let dim = alg.dim();
    let radical = trace_radical(alg);
    let (q, _) = alg.quotient(&radical);
    let centre = center(&q);
    let c = centre.len();
    // self-adjoint spanning set of the centre
    let mut hermitian = Vec::with_capacity(2 * c);
    for z in &centre {
        let zs = q.star(z);
        let re = linalg::add(z, &zs);
        let im = linalg::scale(&linalg::sub(z, &zs), &Scalar::i());
        for v in [re, im] {
            if !linalg::is_zero(&v) {
                hermitian.push(v);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = None;
    let mut attempts = 0;
    if c == 0 {
        found = Some(Vec::new());
    }
    while found.is_none() && attempts < retries {
        attempts += 1;
        let mut z = linalg::zeros(q.dim());
        for h in &hermitian {
            linalg::axpy(&mut z, &Scalar::from_int(rng.gen_range(-20..=20)), h);
        }
        found = blocks_from_central(&q, &z, c);
    }
    let block_sizes = found.ok_or(Error::NumericalDegeneracy { retries })?;
    let qd = q.dim();
    let traces: Vec<Scalar> = (0..qd).map(|k| trace(&q.left_mult(&q.basis_vector(k)))).collect();
    let mut gram = Matrix::zeros(qd, qd);
    for i in 0..qd {
        let bs = q.basis_star(i);
        for j in 0..qd {
            let x = q.mul(&bs, &q.basis_vector(j));
            gram[(i, j)] = linalg::support(&x).fold(Scalar::zero(), |acc, (k, c)| &acc + &(c * &traces[k]));
        }
    }
    let positive = qd == 0 || definiteness(&gram) == Definiteness::PositiveDefinite;
    Ok(BlockDecomposition {
        dim,
        radical_dim: radical.rank(),
        k0_rank: block_sizes.len(),
        block_sizes,
        positive,
        seed,
        attempts,
    })
}

impl BlockDecomposition {
    pub fn is_consistent(&self) -> bool {
        self.block_sizes.iter().map(|s| s * s).sum::<usize>() + self.radical_dim == self.dim
    }
}

fn eval(p: &Poly, x: &Scalar) -> Scalar {
    p.0.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Rational roots with multiplicities when they account for the whole degree.
fn rational_roots(p: &Poly) -> Option<Vec<(Scalar, usize)>> {
    if p.0.iter().any(|c| !c.im.is_zero()) {
        return None;
    }
    let mut out = Vec::new();
    for (k, factor) in p.squarefree_decomposition() {
        let mut f = factor.clone();
        if f.degree() == 0 {
            continue;
        }
        if f.0[0].is_zero() {
            out.push((Scalar::zero(), k));
            f = f.div_rem(&Poly::x()).0;
        }
        let d = f.degree();
        if d == 0 {
            continue;
        }
        let lcm = f.0.iter().fold(BigInt::one(), |acc, c| {
            let den = c.re.to_big().denom().clone();
            let g = num_integer::Integer::gcd(&acc, &den);
            acc * den / g
        });
        let ints: Vec<BigInt> = f.0.iter().map(|c| (c.re.to_big() * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let (a0, an) = (ints[0].abs().to_u64()?, ints[d].abs().to_u64()?);
        if a0 > 1_000_000 || an > 1_000_000 {
            return None;
        }
        let mut found = 0;
        for p_ in divisors(a0) {
            for q_ in divisors(an) {
                for sign in [1i64, -1] {
                    let x = Scalar::real(Rational::new(sign * p_ as i64, q_ as i64));
                    if eval(&f, &x).is_zero() && !out.iter().any(|(y, m)| *y == x && *m == k) {
                        out.push((x, k));
                        found += 1;
                    }
                }
            }
        }
        if found != d {
            return None;
        }
    }
    Some(out)
}

/// Independent count of the blocks of a commutative algebra: the number of
/// nonzero joint eigenvalue tuples of the regular representation, found by
/// exact splitting into joint generalized eigenspaces. `None` when some
/// eigenvalue is irrational or the algebra is not commutative.
pub fn commutative_block_count(alg: &StarAlgebra) -> Option<usize> {
    if !alg.is_commutative() {
        return None;
    }
    let n = alg.dim();
    let mults: Vec<Matrix> = (0..n).map(|i| alg.left_mult(&alg.basis_vector(i))).collect();
    // pieces: invariant subspaces with the joint eigenvalues seen so far
    let mut pieces: Vec<(Vec<Vector>, Vec<Scalar>)> = vec![((0..n).map(|i| linalg::unit(n, i)).collect(), Vec::new())];
    for l in &mults {
        let mut next = Vec::new();
        for (vecs, tuple) in pieces {
            if vecs.is_empty() {
                continue;
            }
            let basis = Basis::new(n, vecs.clone())?;
            let k = vecs.len();
            let cols: Vec<Vector> = vecs.iter().map(|v| basis.coords(&l.apply(v))).collect::<Option<_>>()?;
            let restricted = Matrix::from_columns(k, &cols);
            for (lambda, _) in rational_roots(&restricted.char_poly())? {
                let mut shifted = restricted.sub(&Matrix::identity(k).scale(&lambda));
                let base = shifted.clone();
                for _ in 1..k {
                    shifted = shifted.mul(&base);
                }
                let space: Vec<Vector> = shifted.nullspace().iter().map(|c| basis.combine(c)).collect();
                let mut t = tuple.clone();
                t.push(lambda);
                next.push((space, t));
            }
        }
        pieces = next;
    }
    Some(pieces.iter().filter(|(v, t)| !v.is_empty() && t.iter().any(|x| !x.is_zero())).count())
}

#[derive(Clone, Debug, Serialize)]
pub struct ImprimitivityReport {
    pub induced_dim: usize,
    pub induced_blocks: BlockDecomposition,
    pub base_blocks: BlockDecomposition,
    /// Block counts for the universal variant, recorded without assertion.
    pub universal_counts: Option<(usize, usize)>,
    pub agree: bool,
}

/// Block counts of `Ind(A) ⋊̂ G` and `A ⋊̂ H`.
pub fn imprimitivity_check(
    g: Arc<crate::isg::Isg>,
    sub: &SubIsg,
    a: &GAlgebra,
    cosets: Option<CosetTable>,
    seed: u64,
    with_universal: bool,
) -> Result<ImprimitivityReport> {
    let cosets = match cosets {
        Some(c) => c,
        None => CosetTable::new(&g, sub)?,
    };
    let ind = IndAlgebra::with_cosets(g, sub, a, cosets)?;
    let left = covariance_algebra(&ind.algebra, Variant::Sieben)?;
    let right = covariance_algebra(a, Variant::Sieben)?;
    let induced_blocks = semisimple_blocks(&left.algebra, seed, DEFAULT_RETRIES)?;
    let base_blocks = semisimple_blocks(&right.algebra, seed.wrapping_add(1), DEFAULT_RETRIES)?;
    let universal_counts = if with_universal {
        let l = semisimple_blocks(&covariance_algebra(&ind.algebra, Variant::Universal)?.algebra, seed.wrapping_add(2), DEFAULT_RETRIES)?;
        let r = semisimple_blocks(&covariance_algebra(a, Variant::Universal)?.algebra, seed.wrapping_add(3), DEFAULT_RETRIES)?;
        Some((l.k0_rank, r.k0_rank))
    } else {
        None
    };
    let agree = induced_blocks.k0_rank == base_blocks.k0_rank;
    Ok(ImprimitivityReport { induced_dim: ind.dim(), induced_blocks, base_blocks, universal_counts, agree })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_of_small_algebras() {
        let b = semisimple_blocks(&StarAlgebra::diagonal(2, "e"), 1, DEFAULT_RETRIES).unwrap();
        assert_eq!(b.block_sizes, vec![1, 1]);
        let b = semisimple_blocks(&StarAlgebra::matrix(2), 1, DEFAULT_RETRIES).unwrap();
        assert_eq!(b.block_sizes, vec![2]);
        assert!(b.positive && b.is_consistent());
        let mixed = StarAlgebra::direct_sum(&[&StarAlgebra::matrix(2), &StarAlgebra::complex()]);
        let b = semisimple_blocks(&mixed, 5, DEFAULT_RETRIES).unwrap();
        assert_eq!(b.block_sizes, vec![1, 2]);
    }

    #[test]
    fn nilpotent_part_is_radical() {
        // span{x} with x² = 0
        let alg = StarAlgebra::new(vec!["x".into()], vec![vec![vec![Scalar::zero()]]], vec![vec![Scalar::one()]]).unwrap();
        let b = semisimple_blocks(&alg, 0, DEFAULT_RETRIES).unwrap();
        assert_eq!(b.radical_dim, 1);
        assert!(b.block_sizes.is_empty());
    }

    #[test]
    fn rational_root_oracle() {
        let p = Poly(vec![Scalar::from_int(-6), Scalar::from_int(11), Scalar::from_int(-6), Scalar::from_int(1)]);
        let mut r: Vec<i64> = rational_roots(&p).unwrap().iter().map(|(x, _)| x.re.to_f64() as i64).collect();
        r.sort_unstable();
        assert_eq!(r, vec![1, 2, 3]);
        assert!(rational_roots(&Poly(vec![Scalar::from_int(-2), Scalar::zero(), Scalar::one()])).is_none());
        assert_eq!(commutative_block_count(&StarAlgebra::diagonal(3, "e")), Some(3));
    }
}
