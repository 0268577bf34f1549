//! Exact integer and rational linear algebra.
//!
//! Everything here works on `i64` entries with checked arithmetic: any
//! intermediate that does not fit is reported as [`LinalgError::Overflow`]
//! instead of wrapping. Products are formed in `i128` and narrowed back.
//!
//! Vectors are row vectors. A covector `u` acts on a point `x` by the dot
//! product, and a matrix acts on points from the right (`x ↦ x·T`), so the
//! rows of a vertex matrix are the vertices themselves.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Zero};
use thiserror::Error;

/// Element of the lattice `Z^d`, or of its dual.
pub type IntVector = Vec<i64>;

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = Ratio<i64>;

/// Element of the real dual space with rational coordinates.
pub type RatCovector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("matrix is singular")]
    Singular,
    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = LinalgError> = std::result::Result<T, E>;

#[inline]
pub(crate) fn narrow(x: i128) -> Result<i64> {
    i64::try_from(x).map_err(|_| LinalgError::Overflow)
}

#[inline]
pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(LinalgError::Overflow)
}

#[inline]
pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(LinalgError::Overflow)
}

#[inline]
pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(LinalgError::Overflow)
}

/// Exact dot product of two integer vectors.
pub fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    debug_assert_eq!(a.len(), b.len());
    let mut acc: i128 = 0;
    for (&x, &y) in a.iter().zip(b) {
        acc = acc
            .checked_add(x as i128 * y as i128)
            .ok_or(LinalgError::Overflow)?;
    }
    narrow(acc)
}

/// Pairing of a rational covector with a lattice point.
pub fn rat_dot(u: &[Rational], x: &[i64]) -> Result<Rational> {
    debug_assert_eq!(u.len(), x.len());
    let mut acc = Rational::zero();
    for (c, &xi) in u.iter().zip(x) {
        let term = c
            .checked_mul(&Rational::from_integer(xi))
            .ok_or(LinalgError::Overflow)?;
        acc = acc.checked_add(&term).ok_or(LinalgError::Overflow)?;
    }
    Ok(acc)
}

pub(crate) fn radd(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_add(b).ok_or(LinalgError::Overflow)
}

pub(crate) fn rsub(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_sub(b).ok_or(LinalgError::Overflow)
}

pub(crate) fn rmul(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_mul(b).ok_or(LinalgError::Overflow)
}

pub(crate) fn rdiv(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(LinalgError::Singular);
    }
    a.checked_div(b).ok_or(LinalgError::Overflow)
}

/// Greatest common divisor of the absolute values of the entries (0 for the zero vector).
pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divides a nonzero vector by the gcd of its entries.
pub fn primitive_part(v: &[i64]) -> IntVector {
    let g = content(v);
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / g).collect()
}

/// True iff the gcd of the entries is 1.
///
/// The zero vector has no primitive multiple and is rejected.
pub fn is_primitive(v: &[i64]) -> Result<bool> {
    if v.iter().all(|&x| x == 0) {
        return Err(LinalgError::Domain("the zero vector is not a lattice direction".into()));
    }
    Ok(content(v) == 1)
}

/// Returns `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    // Bezout coefficients are bounded by |a|, |b|, so these casts are lossless.
    (old_r as i64, old_s as i64, old_t as i64)
}

/// Dense integer matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    ncols: usize,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

impl IntMatrix {
    /// Builds a matrix from rows; all rows must have the same length.
    pub fn new(rows: Vec<IntVector>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
            return Err(LinalgError::Dimension(format!(
                "row {bad} has length {}, expected {ncols}",
                rows[bad].len()
            )));
        }
        Ok(Self { rows, ncols })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Self { rows, ncols: n }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { rows: vec![vec![0; ncols]; nrows], ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn into_rows(self) -> Vec<IntVector> {
        self.rows
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        Self { rows, ncols: self.nrows() }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.nrows() {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols,
                other.nrows(),
                other.ncols
            )));
        }
        let cols = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| cols.rows.iter().map(|c| dot(r, c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix { rows, ncols: other.ncols })
    }

    /// Row vector times matrix, `x · self`.
    pub fn apply(&self, x: &[i64]) -> Result<IntVector> {
        if x.len() != self.nrows() {
            return Err(LinalgError::Dimension(format!(
                "vector of length {} against {} rows",
                x.len(),
                self.nrows()
            )));
        }
        let mut out = vec![0i128; self.ncols];
        for (xi, row) in x.iter().zip(&self.rows) {
            for (o, &m) in out.iter_mut().zip(row) {
                *o = o
                    .checked_add(*xi as i128 * m as i128)
                    .ok_or(LinalgError::Overflow)?;
            }
        }
        out.into_iter().map(narrow).collect()
    }
}

fn require_square(m: &IntMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(LinalgError::Dimension(format!(
            "expected a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(())
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> Result<i64> {
    require_square(m)?;
    let n = m.nrows();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i64>> = m.rows.clone();
    let mut negate = false;
    let mut prev: i64 = 1;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = (a[k][k] as i128 * a[i][j] as i128)
                    .checked_sub(a[i][k] as i128 * a[k][j] as i128)
                    .ok_or(LinalgError::Overflow)?;
                // Sylvester's identity: the division is exact.
                a[i][j] = narrow(num / prev as i128)?;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    let d = a[n - 1][n - 1];
    if negate {
        d.checked_neg().ok_or(LinalgError::Overflow)
    } else {
        Ok(d)
    }
}

/// Determinant by Laplace expansion along the first row.
///
/// Exponential time; kept as an independent reference for [`det`] on small
/// matrices.
pub fn det_cofactor(m: &IntMatrix) -> Result<i64> {
    require_square(m)?;
    fn expand(rows: &[&[i64]], cols: &[usize]) -> Result<i64> {
        match cols.len() {
            0 => Ok(1),
            1 => Ok(rows[0][cols[0]]),
            _ => {
                let mut acc: i64 = 0;
                for (pos, &c) in cols.iter().enumerate() {
                    let entry = rows[0][c];
                    if entry == 0 {
                        continue;
                    }
                    let rest: Vec<usize> =
                        cols.iter().copied().filter(|&x| x != c).collect();
                    let minor = expand(&rows[1..], &rest)?;
                    let term = mul(entry, minor)?;
                    acc = if pos % 2 == 0 { add(acc, term)? } else { sub(acc, term)? };
                }
                Ok(acc)
            }
        }
    }
    let rows: Vec<&[i64]> = m.rows.iter().map(Vec::as_slice).collect();
    let cols: Vec<usize> = (0..m.ncols()).collect();
    expand(&rows, &cols)
}

/// Exact inverse over the rationals, returned by rows.
pub fn inverse(m: &IntMatrix) -> Result<Vec<RatCovector>> {
    require_square(m)?;
    let n = m.nrows();
    let mut a: Vec<Vec<Rational>> = m
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer(i64::from(i == j)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&i| !a[i][col].is_zero())
            .ok_or(LinalgError::Singular)?;
        a.swap(pivot, col);
        inv.swap(pivot, col);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] = rdiv(&a[col][j], &p)?;
            inv[col][j] = rdiv(&inv[col][j], &p)?;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col];
            for j in 0..n {
                let t = rmul(&factor, &a[col][j])?;
                a[i][j] = rsub(&a[i][j], &t)?;
                let t = rmul(&factor, &inv[col][j])?;
                inv[i][j] = rsub(&inv[i][j], &t)?;
            }
        }
    }
    Ok(inv)
}

/// Solves `x · a = b` for the unique rational row vector `x`.
pub fn solve_unique(a: &IntMatrix, b: &[i64]) -> Result<RatCovector> {
    require_square(a)?;
    if b.len() != a.ncols() {
        return Err(LinalgError::Dimension(format!(
            "right-hand side has length {}, expected {}",
            b.len(),
            a.ncols()
        )));
    }
    let inv = inverse(a)?;
    // x = b · a⁻¹
    let n = a.nrows();
    let mut x = vec![Rational::zero(); n];
    for (bi, row) in b.iter().zip(&inv) {
        let bi = Rational::from_integer(*bi);
        for (xj, r) in x.iter_mut().zip(row) {
            *xj = radd(xj, &rmul(&bi, r)?)?;
        }
    }
    Ok(x)
}

/// Hermite normal form by rows: returns `(h, u)` with `u · m = h`, `u`
/// unimodular.
///
/// Convention: the nonzero rows of `h` come first and form an echelon
/// staircase; every pivot is positive, entries below a pivot are zero and
/// entries above a pivot lie in `[0, pivot)`. Zero rows are at the bottom.
pub fn hnf(m: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    let r = m.nrows();
    let mut h = m.rows.clone();
    let mut u = IntMatrix::identity(r).rows;

    fn combine(
        rows: &mut [IntVector],
        p: usize,
        i: usize,
        (a, b, c, d): (i64, i64, i64, i64),
    ) -> Result<()> {
        // [row_p; row_i] ← [[a, b], [c, d]] · [row_p; row_i]
        for j in 0..rows[p].len() {
            let (x, y) = (rows[p][j] as i128, rows[i][j] as i128);
            let np = (a as i128 * x)
                .checked_add(b as i128 * y)
                .ok_or(LinalgError::Overflow)?;
            let ni = (c as i128 * x)
                .checked_add(d as i128 * y)
                .ok_or(LinalgError::Overflow)?;
            rows[p][j] = narrow(np)?;
            rows[i][j] = narrow(ni)?;
        }
        Ok(())
    }

    let mut p = 0;
    for col in 0..m.ncols() {
        if p == r {
            break;
        }
        for i in p + 1..r {
            if h[i][col] == 0 {
                continue;
            }
            let (a, b) = (h[p][col], h[i][col]);
            let (g, s, t) = extended_gcd(a, b);
            // determinant s·(a/g) + t·(b/g) = 1
            let op = (s, t, -(b / g), a / g);
            combine(&mut h, p, i, op)?;
            combine(&mut u, p, i, op)?;
        }
        if h[p][col] == 0 {
            continue;
        }
        if h[p][col] < 0 {
            for row in [&mut h[p], &mut u[p]] {
                for x in row.iter_mut() {
                    *x = x.checked_neg().ok_or(LinalgError::Overflow)?;
                }
            }
        }
        let pivot = h[p][col];
        for k in 0..p {
            let q = Integer::div_floor(&h[k][col], &pivot);
            if q == 0 {
                continue;
            }
            for j in 0..m.ncols() {
                h[k][j] = sub(h[k][j], mul(q, h[p][j])?)?;
            }
            for j in 0..r {
                u[k][j] = sub(u[k][j], mul(q, u[p][j])?)?;
            }
        }
        p += 1;
    }
    Ok((
        IntMatrix { rows: h, ncols: m.ncols() },
        IntMatrix { rows: u, ncols: r },
    ))
}

/// Integer row-reduced echelon form with gcd-normalized rows.
///
/// Every pivot column is zero outside its pivot row. Returns the nonzero
/// rows and their pivot columns.
pub(crate) fn echelon(rows: &[IntVector], ncols: usize) -> Result<(Vec<IntVector>, Vec<usize>)> {
    let mut a: Vec<IntVector> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| primitive_part(r))
        .collect();
    let mut pivots = Vec::new();
    let mut p = 0;
    for col in 0..ncols {
        if p == a.len() {
            break;
        }
        let Some(sel) = (p..a.len())
            .filter(|&i| a[i][col] != 0)
            .min_by_key(|&i| a[i][col].unsigned_abs())
        else {
            continue;
        };
        a.swap(p, sel);
        for i in 0..a.len() {
            if i == p || a[i][col] == 0 {
                continue;
            }
            let g = a[p][col].gcd(&a[i][col]);
            let (fp, fi) = (a[i][col] / g, a[p][col] / g);
            let mut row = Vec::with_capacity(ncols);
            for j in 0..ncols {
                let v = (fi as i128 * a[i][j] as i128)
                    .checked_sub(fp as i128 * a[p][j] as i128)
                    .ok_or(LinalgError::Overflow)?;
                row.push(narrow(v)?);
            }
            a[i] = primitive_part(&row);
        }
        pivots.push(col);
        p += 1;
        let mut i = p;
        while i < a.len() {
            if a[i].iter().all(|&x| x == 0) {
                a.swap_remove(i);
            } else {
                i += 1;
            }
        }
    }
    a.truncate(p);
    Ok((a, pivots))
}

/// Rank of a set of integer row vectors.
pub fn rank(rows: &[IntVector], ncols: usize) -> Result<usize> {
    Ok(echelon(rows, ncols)?.1.len())
}

/// A primitive integer vector `g ≠ 0` with `⟨row, g⟩ = 0` for every row, if
/// the kernel is nontrivial. Picks the kernel direction of the first free
/// column.
pub fn kernel_vector(rows: &[IntVector], ncols: usize) -> Result<Option<IntVector>> {
    let (ech, pivots) = echelon(rows, ncols)?;
    let Some(free) = (0..ncols).find(|c| !pivots.contains(c)) else {
        return Ok(None);
    };
    let mut lcm: i64 = 1;
    for (row, &c) in ech.iter().zip(&pivots) {
        lcm = lcm.lcm(&row[c]);
    }
    let mut g = vec![0i64; ncols];
    g[free] = lcm;
    for (row, &c) in ech.iter().zip(&pivots) {
        // row[c]·g_c + row[free]·lcm = 0
        g[c] = mul(-row[free], lcm / row[c])?;
    }
    Ok(Some(primitive_part(&g)))
}

/// Affine rank (dimension of the affine hull) of a point set.
pub fn affine_rank(points: &[IntVector]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Ok(0);
    };
    let diffs = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(&a, &b)| sub(a, b)).collect())
        .collect::<Result<Vec<IntVector>>>()?;
    rank(&diffs, first.len())
}

/// True if a rational covector has only integer entries.
pub fn is_integral(u: &[Rational]) -> bool {
    u.iter().all(|c| c.is_integer())
}

/// Converts an integral rational covector to integers.
pub fn to_integral(u: &[Rational]) -> Option<IntVector> {
    u.iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&IntMatrix::identity(3)).unwrap(), 1);
        assert_eq!(det(&m(&[&[1, 0], &[1, -1]])).unwrap(), -1);
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])).unwrap(), -1);
        assert_eq!(det(&m(&[&[2, 4], &[1, 2]])).unwrap(), 0);
        assert_eq!(det(&IntMatrix::zeros(0, 0)).unwrap(), 1);
    }

    #[test]
    fn det_rejects_non_square() {
        let e = det(&m(&[&[1, 2, 3], &[4, 5, 6]])).unwrap_err();
        assert!(matches!(e, LinalgError::Dimension(_)));
        assert!(matches!(
            det_cofactor(&m(&[&[1, 2]])).unwrap_err(),
            LinalgError::Dimension(_)
        ));
    }

    #[test]
    fn det_detects_overflow() {
        let big = i64::MAX / 2;
        let e = det(&m(&[&[big, 1], &[-big, big]])).unwrap_err();
        assert_eq!(e, LinalgError::Overflow);
        assert_eq!(det_cofactor(&m(&[&[big, 1], &[-big, big]])).unwrap_err(), LinalgError::Overflow);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(IntMatrix::new(vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn solve_examples() {
        let x = solve_unique(&IntMatrix::identity(2), &[1, 1]).unwrap();
        assert_eq!(x, vec![r(1, 1), r(1, 1)]);

        let a = m(&[&[1, 0], &[1, -1]]);
        let x = solve_unique(&a, &[1, 1]).unwrap();
        // x·a = b in the covector convention: (x0 + x1, -x1) = (1,1)
        assert_eq!(x, vec![r(2, 1), r(-1, 1)]);

        // u_F of the facet with vertices (1,0), (1,-1): solve a·u = (1,1)
        let u = solve_unique(&a.transpose(), &[1, 1]).unwrap();
        assert_eq!(u, vec![r(1, 1), r(0, 1)]);
        for v in a.rows() {
            assert_eq!(rat_dot(&u, v).unwrap(), r(1, 1));
        }
    }

    #[test]
    fn solve_singular() {
        let e = solve_unique(&m(&[&[1, 2], &[2, 4]]), &[1, 1]).unwrap_err();
        assert_eq!(e, LinalgError::Singular);
    }

    #[test]
    fn inverse_half_integral() {
        let inv = inverse(&m(&[&[2, 0], &[0, 1]])).unwrap();
        assert_eq!(inv, vec![vec![r(1, 2), r(0, 1)], vec![r(0, 1), r(1, 1)]]);
    }

    fn assert_hnf_shape(h: &IntMatrix) {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..h.nrows() {
            match h.row(i).iter().position(|&x| x != 0) {
                None => seen_zero = true,
                Some(c) => {
                    assert!(!seen_zero, "nonzero row after a zero row");
                    if let Some(lp) = last_pivot {
                        assert!(c > lp, "pivots must move right");
                    }
                    let p = h.get(i, c);
                    assert!(p > 0);
                    for k in 0..i {
                        assert!((0..p).contains(&h.get(k, c)), "entry above pivot not reduced");
                    }
                    for k in i + 1..h.nrows() {
                        assert_eq!(h.get(k, c), 0);
                    }
                    last_pivot = Some(c);
                }
            }
        }
    }

    #[test]
    fn hnf_examples() {
        let (h, u) = hnf(&IntMatrix::identity(3)).unwrap();
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));

        let a = m(&[&[2, 0], &[0, 1]]);
        let (h, u) = hnf(&a).unwrap();
        assert_eq!(h, a);
        assert_eq!(u, IntMatrix::identity(2));

        let a = m(&[&[1, -1], &[0, 1]]);
        let (h, u) = hnf(&a).unwrap();
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(det(&u).unwrap().abs(), 1);
    }

    #[test]
    fn hnf_rank_deficient() {
        let a = m(&[&[2, 4, 6], &[1, 2, 3], &[0, 0, 5]]);
        let (h, u) = hnf(&a).unwrap();
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(det(&u).unwrap().abs(), 1);
        assert_hnf_shape(&h);
        assert!(h.row(2).iter().all(|&x| x == 0));
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(&[1, -1, 0]).unwrap());
        assert!(!is_primitive(&[2, -2]).unwrap());
        assert!(is_primitive(&[-1, -1]).unwrap());
        assert!(matches!(is_primitive(&[0, 0]), Err(LinalgError::Domain(_))));
    }

    #[test]
    fn kernel_and_rank() {
        let k = kernel_vector(&[vec![1, 1, 0], vec![0, 1, 1]], 3).unwrap().unwrap();
        assert_eq!(dot(&k, &[1, 1, 0]).unwrap(), 0);
        assert_eq!(dot(&k, &[0, 1, 1]).unwrap(), 0);
        assert_eq!(content(&k), 1);
        assert!(kernel_vector(&[vec![1, 0], vec![0, 1]], 2).unwrap().is_none());
        assert_eq!(rank(&[vec![2, 4], vec![1, 2]], 2).unwrap(), 1);
        assert_eq!(affine_rank(&[vec![0, 0], vec![1, 1], vec![2, 2]]).unwrap(), 1);
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, n), n)
            .prop_map(|rows| IntMatrix::new(rows).unwrap())
    }

    fn any_small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=5).prop_flat_map(small_matrix)
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(a in any_small_matrix()) {
            prop_assert_eq!(det(&a).unwrap(), det_cofactor(&a).unwrap());
        }

        #[test]
        fn det_row_operations(a in any_small_matrix(), i in 0usize..5, j in 0usize..5) {
            let n = a.nrows();
            let (i, j) = (i % n, j % n);
            prop_assume!(i != j);
            let d = det(&a).unwrap();
            let mut rows = a.rows().to_vec();
            let added: Vec<i64> = rows[i].iter().zip(&rows[j]).map(|(x, y)| x + y).collect();
            rows[i] = added;
            prop_assert_eq!(det(&IntMatrix::new(rows.clone()).unwrap()).unwrap(), d);
            rows.swap(i, j);
            prop_assert_eq!(det(&IntMatrix::new(rows).unwrap()).unwrap(), -d);
        }

        #[test]
        fn hnf_unimodular_transform(
            rows in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
                proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r)
            })
        ) {
            let a = IntMatrix::new(rows).unwrap();
            let (h, u) = hnf(&a).unwrap();
            prop_assert_eq!(u.mul(&a).unwrap(), h.clone());
            prop_assert_eq!(det(&u).unwrap().abs(), 1);
            assert_hnf_shape(&h);
        }

        #[test]
        fn solve_substitutes_back(a in any_small_matrix(), seed in proptest::collection::vec(-5i64..=5, 5)) {
            prop_assume!(det(&a).unwrap() != 0);
            let b: Vec<i64> = seed[..a.nrows()].to_vec();
            let x = solve_unique(&a, &b).unwrap();
            for j in 0..a.ncols() {
                let col: Vec<i64> = a.rows().iter().map(|r| r[j]).collect();
                prop_assert_eq!(rat_dot(&x, &col).unwrap(), Rational::from_integer(b[j]));
            }
        }
    }
}
