//! Exact linear algebra over the rationals.
//!
//! Elimination is fraction-free: rows are cleared to integers and updated by
//! cross-multiplication with a gcd reduction after every step, so no rational
//! gcd churn happens in the inner loop. Entries are kept in `i128` while they
//! fit and the computation transparently restarts over big integers on
//! overflow. Pivot choice is deterministic (smallest entry by bit size, then
//! lowest row index, columns left to right), which makes reduced echelon
//! forms, nullspace bases and solver outputs canonical.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::qnum::Q;
use crate::Result;

/// Dense matrix of exact rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "matrix product {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Result<Vec<Q>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix {}x{} applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Q>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rref(rows, self.cols).pivots.len()
    }

    /// Canonical nullspace basis: one vector per free column in ascending
    /// column order, with a 1 in the free coordinate.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let rows: Vec<Vec<Q>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let ech = rref(rows, self.cols);
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for &(r, c) in &ech.pivots {
                v[c] = -ech.rows[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let rows: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                for j in 0..n {
                    r.push(if i == j { Q::one() } else { Q::zero() });
                }
                r
            })
            .collect();
        let ech = rref(rows, n);
        if ech.pivots.len() != n {
            return None;
        }
        let mut inv = QMatrix::zeros(n, n);
        for &(r, c) in &ech.pivots {
            for j in 0..n {
                inv.set(c, j, ech.rows[r][n + j].clone());
            }
        }
        Some(inv)
    }
}

/// Outcome of an exact linear solve: either a solution or a row `y` of the
/// left kernel with `y·A = 0` and `y·b != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solution(Vec<Q>),
    Infeasible { certificate: Vec<Q> },
}

/// A linear system at a fixed degree: `matrix * x = rhs` with
/// `unknown_dim` coefficient unknowns.
#[derive(Debug, Clone)]
pub struct GradedLinearSystem {
    pub unknown_dim: usize,
    pub matrix: QMatrix,
    pub rhs: Vec<Q>,
}

impl GradedLinearSystem {
    pub fn new(matrix: QMatrix, rhs: Vec<Q>) -> Self {
        let unknown_dim = matrix.cols;
        GradedLinearSystem {
            unknown_dim,
            matrix,
            rhs,
        }
    }

    pub fn solve_or_certify(&self) -> SolveOutcome {
        solve_or_certify(&self.matrix, &self.rhs)
    }
}

/// Solves `A x = b` exactly. Free variables are set to zero, so the returned
/// solution is deterministic. Infeasible systems yield an exact certificate.
pub fn solve_or_certify(a: &QMatrix, b: &[Q]) -> SolveOutcome {
    assert_eq!(a.rows, b.len(), "rhs length mismatch");
    let n = a.cols;
    let rows: Vec<Vec<Q>> = (0..a.rows)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            for j in 0..a.rows {
                r.push(if i == j { Q::one() } else { Q::zero() });
            }
            r
        })
        .collect();
    let ech = rref(rows, n);
    let pivot_rows: Vec<usize> = ech.pivots.iter().map(|&(r, _)| r).collect();
    for r in 0..a.rows {
        if pivot_rows.contains(&r) {
            continue;
        }
        if !ech.rows[r][n].is_zero() {
            let certificate = ech.rows[r][n + 1..].to_vec();
            return SolveOutcome::Infeasible { certificate };
        }
    }
    let mut x = vec![Q::zero(); n];
    for &(r, c) in &ech.pivots {
        x[c] = ech.rows[r][n].clone();
    }
    SolveOutcome::Solution(x)
}

/// Cached reduced echelon factorization of a coefficient matrix, for solving
/// many right-hand sides against the same matrix.
#[derive(Debug, Clone)]
pub struct RrefFactors {
    n_rows: usize,
    n_cols: usize,
    pivots: Vec<(usize, usize)>,
    /// Rows of `[R | T]` where `R` is the RREF of `A` and `T` the
    /// accumulated row transform with `T A = R`.
    rows: Vec<Vec<Q>>,
}

impl RrefFactors {
    pub fn factor(a: &QMatrix) -> Self {
        let n = a.cols;
        let rows: Vec<Vec<Q>> = (0..a.rows)
            .map(|i| {
                let mut r = a.row(i).to_vec();
                for j in 0..a.rows {
                    r.push(if i == j { Q::one() } else { Q::zero() });
                }
                r
            })
            .collect();
        let ech = rref(rows, n);
        RrefFactors {
            n_rows: a.rows,
            n_cols: a.cols,
            pivots: ech.pivots,
            rows: ech.rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, b: &[Q]) -> SolveOutcome {
        assert_eq!(b.len(), self.n_rows, "rhs length mismatch");
        let transformed: Vec<Q> = (0..self.n_rows)
            .map(|r| {
                let t = &self.rows[r][self.n_cols..];
                let mut acc = Q::zero();
                for (j, bj) in b.iter().enumerate() {
                    if !bj.is_zero() && !t[j].is_zero() {
                        acc += &t[j] * bj;
                    }
                }
                acc
            })
            .collect();
        let pivot_rows: Vec<usize> = self.pivots.iter().map(|&(r, _)| r).collect();
        for r in 0..self.n_rows {
            if !pivot_rows.contains(&r) && !transformed[r].is_zero() {
                return SolveOutcome::Infeasible {
                    certificate: self.rows[r][self.n_cols..].to_vec(),
                };
            }
        }
        let mut x = vec![Q::zero(); self.n_cols];
        for &(r, c) in &self.pivots {
            x[c] = transformed[r].clone();
        }
        SolveOutcome::Solution(x)
    }
}

/// Post-hoc check that `A x = b` exactly.
pub fn verify_solution(a: &QMatrix, b: &[Q], x: &[Q]) -> bool {
    match a.mul_vec(x) {
        Ok(ax) => ax.iter().zip(b).all(|(l, r)| l == r),
        Err(_) => false,
    }
}

/// Post-hoc check that `y A = 0` and `y b != 0` exactly.
pub fn verify_certificate(a: &QMatrix, b: &[Q], y: &[Q]) -> bool {
    if y.len() != a.rows {
        return false;
    }
    for j in 0..a.cols {
        let mut acc = Q::zero();
        for i in 0..a.rows {
            if !y[i].is_zero() {
                acc += &y[i] * a.get(i, j);
            }
        }
        if !acc.is_zero() {
            return false;
        }
    }
    let mut yb = Q::zero();
    for i in 0..a.rows {
        if !y[i].is_zero() {
            yb += &y[i] * &b[i];
        }
    }
    !yb.is_zero()
}

// ---------------------------------------------------------------------------
// fraction-free elimination core
// ---------------------------------------------------------------------------

pub(crate) struct Echelon {
    pub rows: Vec<Vec<Q>>,
    pub pivots: Vec<(usize, usize)>,
}

/// Reduced row echelon over the rationals. Pivoting is restricted to the
/// first `pivot_cols` columns; any further columns (right-hand sides,
/// transform identity blocks) are carried along.
pub(crate) fn rref(rows: Vec<Vec<Q>>, pivot_cols: usize) -> Echelon {
    let int_rows: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    if let Some(small) = to_i128_rows(&int_rows) {
        if let Some(ech) = eliminate(small, pivot_cols) {
            return rationalize(ech, pivot_cols);
        }
    }
    let ech = eliminate(int_rows, pivot_cols).expect("bigint elimination cannot overflow");
    rationalize(ech, pivot_cols)
}

fn clear_denominators(row: &[Q]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

fn to_i128_rows(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|r| r.iter().map(|x| i128::try_from(x).ok()).collect())
        .collect()
}

struct IntEchelon<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<(usize, usize)>,
}

fn rationalize<T: ElimInt>(ech: IntEchelon<T>, pivot_cols: usize) -> Echelon {
    let pivot_rows: Vec<usize> = ech.pivots.iter().map(|&(r, _)| r).collect();
    let mut rows_q: Vec<Vec<Q>> = Vec::with_capacity(ech.rows.len());
    for (r, row) in ech.rows.iter().enumerate() {
        if let Some(k) = pivot_rows.iter().position(|&pr| pr == r) {
            let (_, c) = ech.pivots[k];
            let p = row[c].to_q();
            rows_q.push(row.iter().map(|x| x.to_q() / &p).collect());
        } else {
            // Non-pivot row: zero on all pivot columns; normalize by gcd with
            // a positive leading entry so certificates are canonical.
            let mut g = T::zero();
            for x in row {
                g = T::gcd(&g, x);
            }
            if g.is_zero() {
                rows_q.push(row.iter().map(|x| x.to_q()).collect());
            } else {
                let lead_neg = row
                    .iter()
                    .find(|x| !x.is_zero())
                    .map(|x| x.is_negative())
                    .unwrap_or(false);
                let q = if lead_neg { g.neg() } else { g };
                rows_q.push(row.iter().map(|x| T::exact_div(x, &q).to_q()).collect());
            }
        }
        let _ = pivot_cols;
    }
    Echelon {
        rows: rows_q,
        pivots: ech.pivots,
    }
}

/// Gauss-Jordan elimination with cross-multiplication updates and per-row gcd
/// reduction. Returns `None` if scalar arithmetic overflows.
fn eliminate<T: ElimInt>(mut rows: Vec<Vec<T>>, pivot_cols: usize) -> Option<IntEchelon<T>> {
    let n_rows = rows.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..pivot_cols {
        let next = pivots.len();
        if next == n_rows {
            break;
        }
        // Smallest nonzero entry (by bit size) among unused rows.
        let mut best: Option<(usize, u64)> = None;
        for r in next..n_rows {
            let x = &rows[r][col];
            if x.is_zero() {
                continue;
            }
            let sz = x.size_bits();
            match best {
                Some((_, bsz)) if bsz <= sz => {}
                _ => best = Some((r, sz)),
            }
        }
        let Some((prow, _)) = best else { continue };
        rows.swap(next, prow);
        let pivot_row = rows[next].clone();
        let p = pivot_row[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            let mut g = T::zero();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                let t1 = T::checked_mul(&p, x)?;
                let t2 = T::checked_mul(&a, pv)?;
                *x = T::checked_sub(&t1, &t2)?;
                if !x.is_zero() {
                    g = T::gcd(&g, x);
                }
            }
            if !g.is_zero() && !g.is_one() {
                for x in row.iter_mut() {
                    *x = T::exact_div(x, &g);
                }
            }
        }
        pivots.push((next, col));
    }
    Some(IntEchelon { rows, pivots })
}

trait ElimInt: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(self) -> Self;
    fn checked_mul(a: &Self, b: &Self) -> Option<Self>;
    fn checked_sub(a: &Self, b: &Self) -> Option<Self>;
    fn gcd(a: &Self, b: &Self) -> Self;
    fn exact_div(a: &Self, b: &Self) -> Self;
    fn size_bits(&self) -> u64;
    fn to_q(&self) -> Q;
}

impl ElimInt for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(self) -> Self {
        -self
    }
    fn checked_mul(a: &Self, b: &Self) -> Option<Self> {
        a.checked_mul(*b)
    }
    fn checked_sub(a: &Self, b: &Self) -> Option<Self> {
        a.checked_sub(*b)
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        a.gcd(b)
    }
    fn exact_div(a: &Self, b: &Self) -> Self {
        a / b
    }
    fn size_bits(&self) -> u64 {
        128 - self.unsigned_abs().leading_zeros() as u64
    }
    fn to_q(&self) -> Q {
        Q::from_integer(BigInt::from(*self))
    }
}

impl ElimInt for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(self) -> Self {
        -self
    }
    fn checked_mul(a: &Self, b: &Self) -> Option<Self> {
        Some(a * b)
    }
    fn checked_sub(a: &Self, b: &Self) -> Option<Self> {
        Some(a - b)
    }
    fn gcd(a: &Self, b: &Self) -> Self {
        Integer::gcd(a, b)
    }
    fn exact_div(a: &Self, b: &Self) -> Self {
        a / b
    }
    fn size_bits(&self) -> u64 {
        self.bits()
    }
    fn to_q(&self) -> Q {
        Q::from_integer(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{q, qi};
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> QMatrix {
        QMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(qi).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        assert!(m(vec![vec![1, 0], vec![0, 1]]).nullspace().is_empty());
    }

    #[test]
    fn zero_matrix_nullspace_is_full() {
        let ns = m(vec![vec![0, 0], vec![0, 0]]).nullspace();
        assert_eq!(ns.len(), 2);
        assert_eq!(ns[0], vec![qi(1), qi(0)]);
        assert_eq!(ns[1], vec![qi(0), qi(1)]);
    }

    #[test]
    fn rank_one_nullspace() {
        let ns = m(vec![vec![1, 1], vec![2, 2]]).nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![qi(-1), qi(1)]);
    }

    #[test]
    fn solve_identity() {
        let a = QMatrix::identity(3);
        let b = vec![qi(4), q(1, 2), qi(-7)];
        match solve_or_certify(&a, &b) {
            SolveOutcome::Solution(x) => assert_eq!(x, b),
            _ => panic!("identity must be solvable"),
        }
    }

    #[test]
    fn zero_matrix_certifies() {
        let a = QMatrix::zeros(2, 2);
        let b = vec![qi(1), qi(0)];
        match solve_or_certify(&a, &b) {
            SolveOutcome::Infeasible { certificate } => {
                assert!(verify_certificate(&a, &b, &certificate));
            }
            _ => panic!("zero system with nonzero rhs is infeasible"),
        }
    }

    #[test]
    fn consistent_random_system_solves_exactly() {
        // b = A x0 for a fixed x0; solver must return some exact solution.
        let a = m(vec![vec![2, 3, -1], vec![0, 5, 7], vec![2, 8, 6], vec![4, 6, -2]]);
        let x0 = vec![q(1, 3), qi(-2), q(5, 7)];
        let b = a.mul_vec(&x0).unwrap();
        let sys = GradedLinearSystem::new(a.clone(), b.clone());
        assert_eq!(sys.unknown_dim, 3);
        match sys.solve_or_certify() {
            SolveOutcome::Solution(x) => assert!(verify_solution(&a, &b, &x)),
            _ => panic!("constructed system must be consistent"),
        }
    }

    #[test]
    fn factors_match_direct_solve() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let f = RrefFactors::factor(&a);
        let b_ok = a.mul_vec(&[qi(1), qi(1), qi(1)]).unwrap();
        assert_eq!(f.solve(&b_ok), solve_or_certify(&a, &b_ok));
        // Infeasible case: certificates may differ by normalization but both
        // must verify exactly.
        let b_bad = vec![qi(1), qi(3), qi(0)];
        match (f.solve(&b_bad), solve_or_certify(&a, &b_bad)) {
            (
                SolveOutcome::Infeasible { certificate: c1 },
                SolveOutcome::Infeasible { certificate: c2 },
            ) => {
                assert!(verify_certificate(&a, &b_bad, &c1));
                assert!(verify_certificate(&a, &b_bad, &c2));
            }
            other => panic!("expected two certificates, got {other:?}"),
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(vec![vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), QMatrix::identity(2));
        assert!(m(vec![vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    proptest! {
        /// Every solve ends in an exactly verified solution or an exactly
        /// verified infeasibility certificate.
        #[test]
        fn solve_or_certify_is_sound(
            entries in proptest::collection::vec(-9i64..=9, 12),
            rhs in proptest::collection::vec(-9i64..=9, 4),
        ) {
            let a = QMatrix::from_fn(4, 3, |i, j| qi(entries[i * 3 + j]));
            let b: Vec<Q> = rhs.into_iter().map(qi).collect();
            match solve_or_certify(&a, &b) {
                SolveOutcome::Solution(x) => prop_assert!(verify_solution(&a, &b, &x)),
                SolveOutcome::Infeasible { certificate } => {
                    prop_assert!(verify_certificate(&a, &b, &certificate))
                }
            }
        }

        #[test]
        fn nullspace_vectors_annihilate(
            entries in proptest::collection::vec(-9i64..=9, 12),
        ) {
            let a = QMatrix::from_fn(3, 4, |i, j| qi(entries[i * 4 + j]));
            let ns = a.nullspace();
            prop_assert_eq!(ns.len(), 4 - a.rank());
            for v in ns {
                let av = a.mul_vec(&v).unwrap();
                prop_assert!(av.iter().all(|x| x.is_zero()));
            }
        }
    }
}
