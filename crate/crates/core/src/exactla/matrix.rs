use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::{Field, Rational, Scalar};
use super::{Fraction, LaError, Laurent};

/// Dense row-major matrix over one scalar domain.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix entry count does not match its shape");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes for product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.clone() * b.clone();
                    let cell = &mut out[(i, j)];
                    *cell = cell.clone() + t;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Matrix<T> {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        (0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entries strictly off the diagonal are zero.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix<T> {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix<Laurent> {
    pub fn to_fraction(&self) -> Matrix<Fraction> {
        self.map(|l| Fraction::from(l.clone()))
    }

    pub fn specialize(&self, nu: &Rational) -> Matrix<Rational> {
        self.map(|l| l.evaluate(nu))
    }
}

impl Matrix<Rational> {
    pub fn to_laurent(&self) -> Matrix<Laurent> {
        self.map(|q| Laurent::constant(q.clone()))
    }

    pub fn to_fraction(&self) -> Matrix<Fraction> {
        self.map(|q| Fraction::from(Laurent::constant(q.clone())))
    }
}

impl Matrix<Fraction> {
    /// Substitute `ν`; `None` when some entry has a pole at that value.
    pub fn specialize(&self, nu: &Rational) -> Option<Matrix<Rational>> {
        let data: Option<Vec<Rational>> = self.data.iter().map(|f| f.evaluate(nu)).collect();
        data.map(|d| Matrix::new(self.rows, self.cols, d))
    }
}

/// Output of [`rref`].
#[derive(Clone, Debug)]
pub struct Rref<T: fmt::Display> {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub reduced: Matrix<T>,
}

/// Reduced row echelon form over a field.
///
/// Pivoting is fixed: scan columns left to right and take the topmost row
/// with a nonzero entry, so the result is reproducible bit for bit.
pub fn rref<T: Field>(m: &Matrix<T>) -> Rref<T> {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = a[(r, c)].inv();
        for j in c..a.cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..a.cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let t = factor.clone() * a[(r, j)].clone();
                a[(i, j)] = a[(i, j)].clone() - t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { rank: r, pivots, reduced: a }
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<T: Field>(m: &Matrix<T>) -> Option<Matrix<T>> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = T::one();
    }
    let r = rref(&aug);
    if r.pivots.iter().take(n).copied().ne(0..n) || r.rank < n {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Some(r.reduced.submatrix(&rows, &cols))
}

pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    rref(m).rank
}

/// Rank of a Laurent matrix by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions by the
/// previous pivot are exact and no fractions are ever formed.
pub fn fraction_free_rank(m: &Matrix<Laurent>) -> usize {
    let mut a = m.clone();
    let mut prev = Laurent::one();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let pivot = a[(r, c)].clone();
        for i in r + 1..a.rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..a.cols {
                let num = pivot.clone() * a[(i, j)].clone() - lead.clone() * a[(r, j)].clone();
                a[(i, j)] = num.div_exact(&prev).expect("fraction-free elimination produced an inexact quotient");
            }
            a[(i, c)] = Laurent::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Linearly independent vectors kept in reduced row echelon form, so two
/// equal subspaces always compare equal.
#[derive(Clone, PartialEq, Debug)]
pub struct SubspaceBasis<T> {
    ambient: usize,
    vectors: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Field> SubspaceBasis<T> {
    pub fn span(ambient: usize, vectors: &[Vec<T>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let m = Matrix::from_rows(vectors.to_vec());
        assert_eq!(m.cols(), ambient, "vector length does not match ambient dimension");
        Self::from_rref(ambient, rref(&m))
    }

    fn from_rref(ambient: usize, r: Rref<T>) -> Self {
        let vectors = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        SubspaceBasis { ambient, vectors, pivots: r.pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis { ambient, vectors: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let vectors = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
        SubspaceBasis { ambient, vectors, pivots: (0..ambient).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the echelon rows; the result vanishes on every pivot.
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (row, &p) in self.vectors.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o = o.clone() - f.clone() * x.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &SubspaceBasis<T>) -> SubspaceBasis<T> {
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        Self::span(self.ambient, &all)
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis<T>) -> bool {
        self.vectors.iter().all(|v| other.contains(v))
    }
}

/// Basis of the right null space, in canonical echelon form.
pub fn kernel_basis<T: Field>(m: &Matrix<T>) -> SubspaceBasis<T> {
    let r = rref(m);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !r.pivots.contains(c)).collect();
    let mut vectors = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![T::zero(); cols];
        v[f] = T::one();
        for (i, &p) in r.pivots.iter().enumerate() {
            let x = &r.reduced[(i, f)];
            if !x.is_zero() {
                v[p] = -x.clone();
            }
        }
        vectors.push(v);
    }
    SubspaceBasis::span(cols, &vectors)
}

/// Column space of `m` as a subspace of its row-index space.
pub fn image_basis<T: Field>(m: &Matrix<T>) -> SubspaceBasis<T> {
    let columns: Vec<Vec<T>> = (0..m.cols()).map(|j| m.column(j)).collect();
    SubspaceBasis::span(m.rows(), &columns)
}

/// A complement `C` of `sub` inside `ambient`, so `ambient = sub ⊕ C`.
///
/// The choice is canonical: reduce the ambient vectors modulo `sub` (they then
/// vanish on the pivot coordinates of `sub`) and keep the echelon form of the
/// result. Coordinates are scanned in index order, so complements of
/// coordinate-aligned subspaces come out as standard basis vectors.
pub fn quotient_complement<T: Field>(
    ambient: &SubspaceBasis<T>,
    sub: &SubspaceBasis<T>,
) -> Result<SubspaceBasis<T>, LaError> {
    if !sub.is_subspace_of(ambient) {
        return Err(LaError::NotASubspace { ambient: ambient.dim(), sub: sub.dim() });
    }
    let reduced: Vec<Vec<T>> = ambient.vectors().iter().map(|v| sub.reduce(v)).collect();
    let c = SubspaceBasis::span(ambient.ambient(), &reduced);
    debug_assert_eq!(c.dim() + sub.dim(), ambient.dim());
    Ok(c)
}

/// `ker (M - λI)^m`; with `power = None` the exponent is the dimension.
pub fn generalized_eigenspace<T: Field>(m: &Matrix<T>, lambda: &T, power: Option<u32>) -> SubspaceBasis<T> {
    assert!(m.is_square(), "generalized eigenspace of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return SubspaceBasis::zero(0);
    }
    let shifted = m.sub(&Matrix::identity(n).scale(lambda));
    let k = power.unwrap_or(n as u32).max(1);
    kernel_basis(&shifted.pow(k))
}

/// Roots of the characteristic polynomial, when they are all rational.
#[derive(Clone, Debug, PartialEq)]
pub enum Eigenvalues {
    /// Distinct eigenvalues in increasing order with algebraic multiplicities.
    Split(Vec<(Rational, usize)>),
    /// The characteristic polynomial has an irreducible factor of degree > 1
    /// (or coefficients too large to enumerate divisors).
    Undetermined,
}

/// Characteristic polynomial `det(λI - M)`, coefficients from the constant
/// term up, by the Faddeev-LeVerrier recurrence.
pub fn characteristic_polynomial(m: &Matrix<Rational>) -> Vec<Rational> {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = Matrix::<Rational>::zeros(n, n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&Matrix::identity(n).scale(&coeffs[n - k + 1]));
        let t = m.mul(&mk).trace();
        coeffs[n - k] = -t / Rational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn eval_poly(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return Some(vec![]);
    }
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Exact eigenvalues of a rational matrix by rational-root enumeration.
pub fn rational_eigenvalues(m: &Matrix<Rational>) -> Eigenvalues {
    let mut p = characteristic_polynomial(m);
    let mut found: Vec<(Rational, usize)> = Vec::new();

    let mut zero_mult = 0;
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        found.push((Rational::zero(), zero_mult));
    }
    if p.len() > 1 {
        // integer scaling: multiply through by the lcm of denominators
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let (Some(num_divs), Some(den_divs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
            return Eigenvalues::Undetermined;
        };
        let mut candidates: Vec<Rational> = Vec::new();
        for a in &num_divs {
            for b in &den_divs {
                let q = Rational::new(BigInt::from(*a), BigInt::from(*b));
                candidates.push(q.clone());
                candidates.push(-q);
            }
        }
        candidates.sort();
        candidates.dedup();
        for r in candidates {
            let mut mult = 0;
            while p.len() > 1 && eval_poly(&p, &r).is_zero() {
                // synthetic division by (λ - r)
                let n = p.len() - 1;
                let mut q = vec![Rational::zero(); n];
                let mut carry = Rational::zero();
                for i in (0..n).rev() {
                    carry = &p[i + 1] + carry * &r;
                    q[i] = carry.clone();
                }
                p = q;
                mult += 1;
            }
            if mult > 0 {
                found.push((r, mult));
            }
        }
    }
    if p.len() > 1 {
        return Eigenvalues::Undetermined;
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Eigenvalues::Split(found)
}

/// `exp(M) = Σ_{k<n} M^k / k!` for a nilpotent rational matrix.
pub fn exp_nilpotent(m: &Matrix<Rational>) -> Result<Matrix<Rational>, LaError> {
    assert!(m.is_square());
    let n = m.rows();
    if !m.pow(n as u32).is_zero() {
        return Err(LaError::NotNilpotent);
    }
    let mut acc = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..n.max(1) {
        term = term.mul(m).scale(&Rational::new(BigInt::one(), BigInt::from(k)));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn q(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let sing = Matrix::from_rows(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]]);
        assert!(inverse(&sing).is_none());
    }

    #[test]
    fn rref_identity_and_proportional_rows() {
        let r = rref(&q(vec![vec![1, 0], vec![0, 1]]));
        assert_eq!((r.rank, r.pivots), (2, vec![0, 1]));
        assert_eq!(rref(&q(vec![vec![1, 2], vec![2, 4]])).rank, 1);
        let empty = Matrix::<Rational>::zeros(0, 3);
        assert_eq!(rref(&empty).rank, 0);
    }

    #[test]
    fn rref_over_laurent_entries() {
        let nu = Laurent::nu_pow(1);
        let m = Matrix::from_rows(vec![vec![nu, Laurent::one()], vec![Laurent::zero(), Laurent::nu_pow(-1)]]);
        assert_eq!(rank(&m.to_fraction()), 2);
        assert_eq!(fraction_free_rank(&m), 2);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = q(vec![vec![2, 4, 1], vec![1, 2, 0], vec![3, 6, 1]]);
        let once = rref(&m);
        let twice = rref(&once.reduced);
        assert_eq!(once.reduced, twice.reduced);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::<Rational>::identity(3)).dim(), 0);
        assert_eq!(kernel_basis(&Matrix::<Rational>::zeros(3, 3)).dim(), 3);
        let k = kernel_basis(&q(vec![vec![1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        let m = q(vec![vec![1, 1, 0]]);
        for v in k.vectors() {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn complement_examples() {
        let e = |i: usize| -> Vec<Rational> { (0..2).map(|j| rat((i == j) as i64, 1)).collect() };
        let amb = SubspaceBasis::span(2, &[e(0), e(1)]);
        let sub = SubspaceBasis::span(2, &[e(0)]);
        let c = quotient_complement(&amb, &sub).unwrap();
        assert_eq!(c.vectors(), &[e(1)]);
        assert_eq!(quotient_complement(&amb, &amb).unwrap().dim(), 0);

        let v = vec![rat(1, 1), rat(1, 1)];
        let amb = SubspaceBasis::span(2, &[v.clone(), e(1)]);
        let sub = SubspaceBasis::span(2, &[v]);
        let c = quotient_complement(&amb, &sub).unwrap();
        assert_eq!(c.dim(), 1);
        // direct sum by the rank oracle
        assert_eq!(sub.sum(&c).dim(), 2);
        assert!(c.vectors().iter().any(|w| w.iter().filter(|x| !x.is_zero()).count() == 1));

        let not_sub = SubspaceBasis::span(2, &[e(0)]);
        let line = SubspaceBasis::span(2, &[e(1)]);
        assert!(matches!(quotient_complement(&line, &not_sub), Err(LaError::NotASubspace { .. })));
    }

    #[test]
    fn generalized_eigenspace_examples() {
        let one = rat(1, 1);
        assert_eq!(generalized_eigenspace(&Matrix::<Rational>::identity(3), &one, None).dim(), 3);
        let jordan = q(vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(generalized_eigenspace(&jordan, &one, Some(2)).dim(), 2);
        assert_eq!(generalized_eigenspace(&jordan, &one, Some(1)).dim(), 1);
        let d = q(vec![vec![1, 0], vec![0, 2]]);
        assert_eq!(generalized_eigenspace(&d, &one, None).dim(), 1);
    }

    #[test]
    fn eigenvalue_examples() {
        let rot = q(vec![vec![0, -1], vec![1, 0]]);
        assert_eq!(rational_eigenvalues(&rot), Eigenvalues::Undetermined);
        let nil = q(vec![vec![0, 1, 5], vec![0, 0, 2], vec![0, 0, 0]]);
        assert_eq!(rational_eigenvalues(&nil), Eigenvalues::Split(vec![(rat(0, 1), 3)]));
        let m = q(vec![vec![2, 1], vec![0, -3]]);
        assert_eq!(
            rational_eigenvalues(&m),
            Eigenvalues::Split(vec![(rat(-3, 1), 1), (rat(2, 1), 1)])
        );
        let half = Matrix::from_rows(vec![vec![rat(1, 2), rat(0, 1)], vec![rat(7, 1), rat(1, 2)]]);
        assert_eq!(rational_eigenvalues(&half), Eigenvalues::Split(vec![(rat(1, 2), 2)]));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp_nilpotent(&Matrix::zeros(3, 3)).unwrap(), Matrix::identity(3));
        assert_eq!(exp_nilpotent(&q(vec![vec![0, 1], vec![0, 0]])).unwrap(), q(vec![vec![1, 1], vec![0, 1]]));
        let n3 = q(vec![vec![0, 2, 0], vec![0, 0, 2], vec![0, 0, 0]]);
        // exp = I + N + N^2/2
        assert_eq!(exp_nilpotent(&n3).unwrap(), q(vec![vec![1, 2, 2], vec![0, 1, 2], vec![0, 0, 1]]));
        assert!(matches!(exp_nilpotent(&Matrix::identity(2)), Err(LaError::NotNilpotent)));
    }
}
