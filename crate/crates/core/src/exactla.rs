//! Exact linear algebra over the rationals and prime fields.
//!
//! Everything here is deterministic: elimination always pivots on the
//! leftmost column and the first row with a nonzero entry, so bases
//! produced for equal inputs are equal entry for entry.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace is not contained in the ambient space")]
    NotASubspace,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// The ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self, LinAlgError> {
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp {
                v: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn ratio(self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match self {
            Field::Rationals => Scalar::Q(BigRational::new(BigInt::from(num), BigInt::from(den))),
            Field::Prime(_) => &self.int(num) * &self.int(den).inv(),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn tag(self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("F{p}"),
        }
    }
}

/// A field element. Mixing elements of different fields is a programming
/// error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => {
                assert!(!q.is_zero(), "inverse of zero");
                Scalar::Q(q.recip())
            }
            Scalar::Fp { v, p } => {
                assert!(*v != 0, "inverse of zero");
                let e = BigInt::from(*v).extended_gcd(&BigInt::from(*p));
                let inv = e.x.mod_floor(&BigInt::from(*p));
                Scalar::Fp {
                    v: inv.to_u64().unwrap(),
                    p: *p,
                }
            }
        }
    }

    /// Lossless text encoding: `n`, `n/d` or the residue for prime fields.
    pub fn encode(&self) -> String {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }

    pub fn decode(field: Field, s: &str) -> Option<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
            None => (s.parse::<BigInt>().ok()?, BigInt::one()),
        };
        if den.is_zero() {
            return None;
        }
        match field {
            Field::Rationals => Some(Scalar::Q(BigRational::new(num, den))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = Scalar::Fp {
                    v: num.mod_floor(&pb).to_u64()?,
                    p,
                };
                let d = Scalar::Fp {
                    v: den.mod_floor(&pb).to_u64()?,
                    p,
                };
                if d.is_zero() {
                    return None;
                }
                Some(&n * &d.inv())
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

fn same_prime(p: u64, q: u64) {
    assert_eq!(p, q, "scalars from different prime fields");
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                same_prime(*p, *q);
                Scalar::Fp {
                    v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                same_prime(*p, *q);
                Scalar::Fp {
                    v: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }
}

impl Scalar {
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

/// Dense matrix over a [`Field`], row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|s| s.encode()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Mat {
            field,
            rows: r,
            cols,
            data,
        }
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.int(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn from_cols(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Mat::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &out.data[i * rhs.cols + j] + &(a * b);
                    out.data[i * rhs.cols + j] = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        self.add(&rhs.scale(&self.field.int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn pow(&self, mut e: usize) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Mat::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        let mut m = Mat::zeros(self.field, r1 - r0, c1 - c0);
        for r in r0..r1 {
            for c in c0..c1 {
                m.set(r - r0, c - c0, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.set(r0 + r, c0 + c, b.get(r, c).clone());
            }
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_rows(
            self.field,
            idx.iter().map(|&i| self.row(i).to_vec()).collect(),
            self.cols,
        )
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        self.transpose().vstack(&other.transpose()).transpose()
    }

    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let mut m = Mat::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.field, n));
        let r = rref(&aug);
        if n > 0 && (r.pivots.len() < n || r.pivots[n - 1] != n - 1) {
            return None;
        }
        Some(r.mat.block(0, n, n, 2 * n))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.rows == self.cols && self.pow(self.rows).is_zero()
    }
}

/// Result of row reduction.
#[derive(Debug, Clone)]
pub struct Rref {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &Mat) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow >= rows {
            break;
        }
        let Some(found) = (prow..rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if found != prow {
            for c in 0..cols {
                a.data.swap(found * cols + c, prow * cols + c);
            }
        }
        let inv = a.get(prow, col).inv();
        for c in col..cols {
            let v = a.get(prow, c) * &inv;
            a.set(prow, c, v);
        }
        let pivot_row: Vec<Scalar> = a.row(prow).to_vec();
        for r in 0..rows {
            if r == prow {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for (c, pv) in pivot_row.iter().enumerate().take(cols).skip(col) {
                if pv.is_zero() {
                    continue;
                }
                let v = a.get(r, c) - &(&factor * pv);
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    Rref {
        mat: a,
        rank: pivots.len(),
        pivots,
    }
}

/// A subspace of `field^ambient_dim` given by linearly independent rows.
/// Equality compares the subspaces, not the chosen bases.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Mat,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.dim() == other.dim() && self.contains_subspace(other)
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::zeros(field, 0, ambient_dim),
        }
    }

    pub fn full(field: Field, n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Mat::identity(field, n),
        }
    }

    /// The span of arbitrary rows, reduced to a canonical (RREF) basis.
    pub fn span(field: Field, ambient_dim: usize, rows: &[Vec<Scalar>]) -> Self {
        let m = Mat::from_rows(field, rows.to_vec(), ambient_dim);
        let r = rref(&m);
        Subspace {
            ambient_dim,
            basis: r.mat.block(0, r.rank, 0, ambient_dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let extended = self
            .basis
            .vstack(&Mat::from_rows(self.field(), vec![v.to_vec()], self.ambient_dim));
        extended.rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.vectors().iter().all(|v| self.contains(v))
    }
}

/// Reduced row-echelon form, rank and pivot columns.
pub fn rref_rank(m: &Mat) -> (Mat, usize, Vec<usize>) {
    let r = rref(m);
    (r.mat, r.rank, r.pivots)
}

/// Basis of `{v : m v = 0}`. Each basis vector has a 1 at its own free
/// column and 0 at every other free column.
pub fn kernel_basis(m: &Mat) -> Subspace {
    let r = rref(m);
    let cols = m.cols();
    let field = m.field();
    let free: Vec<usize> = (0..cols).filter(|c| !r.pivots.contains(c)).collect();
    let mut rows = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![field.zero(); cols];
        v[f] = field.one();
        for (i, &p) in r.pivots.iter().enumerate() {
            v[p] = -r.mat.get(i, f);
        }
        rows.push(v);
    }
    Subspace {
        ambient_dim: cols,
        basis: Mat::from_rows(field, rows, cols),
    }
}

/// Free (non-pivot) columns of `m`, i.e. the coordinate positions read off
/// by [`kernel_basis`] vectors.
pub fn free_columns(m: &Mat) -> Vec<usize> {
    let r = rref(m);
    (0..m.cols()).filter(|c| !r.pivots.contains(c)).collect()
}

/// Column space of `m` as a subspace of `field^rows`.
pub fn image_basis(m: &Mat) -> Subspace {
    let t = m.transpose();
    let r = rref(&t);
    Subspace {
        ambient_dim: m.rows(),
        basis: r.mat.block(0, r.rank, 0, m.rows()),
    }
}

/// A particular solution of `m x = b`, or `None` when inconsistent.
/// Free variables are set to zero.
pub fn solve(m: &Mat, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
    if b.len() != m.rows() {
        return Err(LinAlgError::DimensionMismatch(format!(
            "rhs has length {} for a {}x{} matrix",
            b.len(),
            m.rows(),
            m.cols()
        )));
    }
    let field = m.field();
    let aug = m.hstack(&Mat::from_cols(field, m.rows(), &[b.to_vec()]));
    let r = rref(&aug);
    if r.pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); m.cols()];
    for (i, &p) in r.pivots.iter().enumerate() {
        x[p] = r.mat.get(i, m.cols()).clone();
    }
    Ok(Some(x))
}

/// Solve `m X = B` column by column.
pub fn solve_matrix(m: &Mat, b: &Mat) -> Option<Mat> {
    let field = m.field();
    let aug = m.hstack(b);
    let r = rref(&aug);
    if r.pivots.iter().any(|&p| p >= m.cols()) {
        return None;
    }
    let mut x = Mat::zeros(field, m.cols(), b.cols());
    for (i, &p) in r.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(p, j, r.mat.get(i, m.cols() + j).clone());
        }
    }
    Some(x)
}

pub fn sum(a: &Subspace, b: &Subspace) -> Result<Subspace, LinAlgError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(LinAlgError::DimensionMismatch("sum of subspaces".into()));
    }
    let mut rows = a.vectors();
    rows.extend(b.vectors());
    Ok(Subspace::span(a.field(), a.ambient_dim, &rows))
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace, LinAlgError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(LinAlgError::DimensionMismatch("intersection of subspaces".into()));
    }
    let field = a.field();
    // x A = y B  <=>  [A; -B]^T (x, y) = 0
    let stacked = a.basis.vstack(&b.basis.scale(&field.int(-1)));
    let k = kernel_basis(&stacked.transpose());
    let rows: Vec<Vec<Scalar>> = k
        .vectors()
        .iter()
        .map(|coef| {
            let x = &coef[..a.dim()];
            a.basis.transpose().mul_vec(x)
        })
        .collect();
    Ok(Subspace::span(field, a.ambient_dim, &rows))
}

/// A quotient `ambient / sub` with a deterministic section.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    /// Coset representatives, one row per quotient basis vector, in ambient
    /// (not ambient-subspace) coordinates.
    pub reps: Mat,
    /// Projection from ambient-subspace coordinates to quotient coordinates.
    pub proj: Mat,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.reps.rows()
    }
}

/// Quotient of `ambient` by `sub`.
///
/// Coordinates on `ambient` are with respect to its basis rows. The section
/// picks unit vectors on the non-pivot columns of `sub` expressed in those
/// coordinates.
pub fn quotient_basis(ambient: &Subspace, sub: &Subspace) -> Result<QuotientSpace, LinAlgError> {
    if ambient.ambient_dim != sub.ambient_dim {
        return Err(LinAlgError::DimensionMismatch("quotient of subspaces".into()));
    }
    let field = ambient.field();
    let n = ambient.dim();
    let at = ambient.basis.transpose();
    let mut sub_coords = Vec::with_capacity(sub.dim());
    for v in sub.vectors() {
        match solve(&at, &v)? {
            Some(c) => sub_coords.push(c),
            None => return Err(LinAlgError::NotASubspace),
        }
    }
    let q = quotient_coords(field, n, &sub_coords);
    let reps = q.reps.mul(&ambient.basis);
    Ok(QuotientSpace { reps, proj: q.proj })
}

/// Quotient of `field^n` by the span of `rows`.
pub fn quotient_coords(field: Field, n: usize, rows: &[Vec<Scalar>]) -> QuotientSpace {
    let r = rref(&Mat::from_rows(field, rows.to_vec(), n));
    let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
    let mut reps = Mat::zeros(field, free.len(), n);
    let mut proj = Mat::zeros(field, free.len(), n);
    for (i, &f) in free.iter().enumerate() {
        reps.set(i, f, field.one());
        proj.set(i, f, field.one());
    }
    for (row, &p) in r.pivots.iter().enumerate() {
        for (i, &f) in free.iter().enumerate() {
            proj.set(i, p, -r.mat.get(row, f));
        }
    }
    QuotientSpace { reps, proj }
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

/// Coefficients `c_0 .. c_{d-1}` of the monic minimal polynomial
/// `x^d + c_{d-1} x^{d-1} + .. + c_0` of a square matrix.
pub fn min_poly(a: &Mat) -> Vec<Scalar> {
    let f = a.field();
    let n = a.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Mat::identity(f, n).entries().to_vec()];
    let mut cur = Mat::identity(f, n);
    loop {
        cur = cur.mul(a);
        let v = cur.entries().to_vec();
        let m = Mat::from_cols(f, v.len(), &powers);
        if let Some(c) = solve(&m, &v).expect("shapes agree") {
            return c.iter().map(|x| -x).collect();
        }
        powers.push(v);
    }
}

fn eval(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let f = x.field();
    let mut acc = f.one();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Roots in the ground field of a monic polynomial given by its lower
/// coefficients, without multiplicity.
pub fn roots_in_field(coeffs: &[Scalar], field: Field) -> Vec<Scalar> {
    match field {
        Field::Prime(p) => (0..p as i64)
            .map(|x| field.int(x))
            .filter(|x| eval(coeffs, x).is_zero())
            .collect(),
        Field::Rationals => {
            let mut roots = Vec::new();
            let mut c: Vec<BigRational> = coeffs
                .iter()
                .map(|s| match s {
                    Scalar::Q(q) => q.clone(),
                    _ => unreachable!(),
                })
                .collect();
            c.push(BigRational::one());
            while c.len() > 1 && c[0].is_zero() {
                if roots.is_empty() {
                    roots.push(field.zero());
                }
                c.remove(0);
            }
            if c.len() == 1 {
                return roots;
            }
            let lcm = c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints: Vec<BigInt> = c.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
            let (Some(num), Some(den)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
                return roots;
            };
            let lower: Vec<Scalar> = c[..c.len() - 1].iter().map(|q| Scalar::Q(q.clone())).collect();
            let mut cands = Vec::new();
            for r in &num {
                for s in &den {
                    for sign in [1, -1] {
                        cands.push(BigRational::new(r * sign, s.clone()));
                    }
                }
            }
            cands.sort();
            cands.dedup();
            for q in cands {
                let x = Scalar::Q(q);
                if eval(&lower, &x).is_zero() {
                    roots.push(x);
                }
            }
            roots
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn rref_proportional_rows() {
        let m = Mat::from_ints(q(), &[&[2, 4], &[1, 2]]);
        let (r, rank, piv) = rref_rank(&m);
        assert_eq!(rank, 1);
        assert_eq!(piv, vec![0]);
        assert_eq!(r, Mat::from_ints(q(), &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Mat::identity(q(), 3);
        let (r, rank, _) = rref_rank(&id);
        assert_eq!(rank, 3);
        assert_eq!(r, id);
    }

    #[test]
    fn rank_over_f2() {
        let f2 = Field::prime(2).unwrap();
        let m = Mat::from_ints(f2, &[&[1, 1], &[1, 0]]);
        assert_eq!(m.rank(), 2);
        // [[1,1],[1,1]] collapses over any field, [[1,1],[1,-1]] only over F2
        let m = Mat::from_ints(f2, &[&[1, 1], &[1, -1]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernels() {
        assert_eq!(kernel_basis(&Mat::zeros(q(), 2, 3)).dim(), 3);
        assert_eq!(kernel_basis(&Mat::identity(q(), 4)).dim(), 0);
        let k = kernel_basis(&Mat::from_ints(q(), &[&[1, 2]]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis.row(0), &[q().int(-2), q().int(1)]);
    }

    #[test]
    fn quotient_intersect_solve() {
        let full = Subspace::full(q(), 3);
        let line = Subspace::span(q(), 3, &[vec![q().int(1), q().int(0), q().int(0)]]);
        let qs = quotient_basis(&full, &line).unwrap();
        assert_eq!(qs.dim(), 2);
        // projection kills the subspace
        assert!(vec_is_zero(&qs.proj.mul_vec(&[q().int(5), q().zero(), q().zero()])));

        let x = Subspace::span(q(), 2, &[vec![q().int(1), q().int(0)]]);
        let y = Subspace::span(q(), 2, &[vec![q().int(0), q().int(1)]]);
        assert_eq!(intersect(&x, &y).unwrap().dim(), 0);

        let m = Mat::from_ints(q(), &[&[1, 1]]);
        let s = solve(&m, &[q().int(3)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&s), vec![q().int(3)]);
        let m = Mat::from_ints(q(), &[&[1, 1], &[1, 1]]);
        assert!(solve(&m, &[q().int(1), q().int(2)]).unwrap().is_none());
    }

    #[test]
    fn not_a_subspace_is_reported() {
        let x = Subspace::span(q(), 2, &[vec![q().int(1), q().int(0)]]);
        let y = Subspace::span(q(), 2, &[vec![q().int(0), q().int(1)]]);
        assert_eq!(quotient_basis(&x, &y).unwrap_err(), LinAlgError::NotASubspace);
        assert!(matches!(
            sum(&x, &Subspace::zero(q(), 3)),
            Err(LinAlgError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn inverse_and_prime_field() {
        let m = Mat::from_ints(q(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(q(), 2));
        assert!(Mat::from_ints(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
        let f7 = Field::prime(7).unwrap();
        assert_eq!(&f7.int(3) * &f7.int(3).inv(), f7.one());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn scalar_encoding() {
        let s = q().ratio(-3, 6);
        assert_eq!(s.encode(), "-1/2");
        assert_eq!(Scalar::decode(q(), "-1/2").unwrap(), s);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(Scalar::decode(f5, "1/2").unwrap(), f5.int(3));
    }

    #[test]
    fn roots() {
        let q = Field::Rationals;
        // x^2 - 3x + 2
        let r = roots_in_field(&[q.int(2), q.int(-3)], q);
        assert_eq!(r, vec![q.int(1), q.int(2)]);
        // x^2 - 2 has no rational roots
        assert!(roots_in_field(&[q.int(-2), q.zero()], q).is_empty());
        let f7 = Field::prime(7).unwrap();
        // x^2 - 2 = (x - 3)(x - 4) over F7
        assert_eq!(roots_in_field(&[f7.int(-2), f7.zero()], f7).len(), 2);
    }
}
