//! Exact linear algebra over the rationals and prime fields.
//!
//! Reduced row echelon form uses the first nonzero entry (top-down) of each
//! column as pivot; with exact arithmetic the result is the unique RREF.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// `Z/pZ` for a prime `p`, residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        // products of residues must fit in u128 comfortably and inputs in i64
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn is_zero(&self, a: &u64) -> bool {
        a % self.p == 0
    }
}

/// A field chosen at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(PrimeField),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        Ok(FieldSpec::Prime(PrimeField::new(p)?))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(fp) => write!(f, "Zp:{}", fp.p),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// `Q` or `Zp:<prime>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("Zp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown field {s:?} (expected Q or Zp:<prime>)")))?;
        FieldSpec::prime(p)
    }
}

/// An element of a [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

impl Scalar {
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Residue(r) => BigRational::from_integer(BigInt::from(*r)),
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Residue(r) => i64::try_from(*r).ok(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Residue(r) => write!(f, "{r}"),
        }
    }
}

impl FieldSpec {
    /// Parses an integer or `p/q` into this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::InvalidArgument(format!("not a field value: {s:?}"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(fp) => {
                let p = BigInt::from(fp.p);
                let reduce = |x: &BigInt| x.mod_floor(&p).to_u64().expect("residue fits");
                let d = reduce(&den);
                if d == 0 {
                    return Err(bad());
                }
                Ok(Scalar::Residue(fp.mul(&reduce(&num), &fp.inv(&d))))
            }
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(q.clone()),
            FieldSpec::Prime(fp) => {
                let p = BigInt::from(fp.p);
                let n = q.numer().mod_floor(&p).to_u64().expect("residue fits");
                let d = q.denom().mod_floor(&p).to_u64().expect("residue fits");
                Scalar::Residue(fp.mul(&n, &fp.inv(&d)))
            }
        }
    }
}

fn rat(s: &Scalar) -> &BigRational {
    match s {
        Scalar::Rational(q) => q,
        Scalar::Residue(_) => panic!("residue used in the rational field"),
    }
}

fn res(s: &Scalar) -> u64 {
    match s {
        Scalar::Residue(r) => *r,
        Scalar::Rational(_) => panic!("rational used in a prime field"),
    }
}

impl Field for FieldSpec {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        self.from_i64(0)
    }
    fn one(&self) -> Scalar {
        self.from_i64(1)
    }
    fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(Rationals.from_i64(v)),
            FieldSpec::Prime(fp) => Scalar::Residue(fp.from_i64(v)),
        }
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(rat(a) + rat(b)),
            FieldSpec::Prime(fp) => Scalar::Residue(fp.add(&res(a), &res(b))),
        }
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(-rat(a)),
            FieldSpec::Prime(fp) => Scalar::Residue(fp.neg(&res(a))),
        }
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(rat(a) * rat(b)),
            FieldSpec::Prime(fp) => Scalar::Residue(fp.mul(&res(a), &res(b))),
        }
    }
    fn inv(&self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(Rationals.inv(rat(a))),
            FieldSpec::Prime(fp) => Scalar::Residue(fp.inv(&res(a))),
        }
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => *r == 0,
        }
    }
}

/// Dense row-major matrix of exact scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

/// `M v` over `f`.
pub fn mat_vec<F: Field>(f: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if v.len() != m.cols {
        return Err(Error::DimensionMismatch {
            expected: m.cols,
            found: v.len(),
        });
    }
    Ok((0..m.rows)
        .map(|r| {
            m.row(r)
                .iter()
                .zip(v)
                .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
        })
        .collect())
}

/// Reduced row echelon form and its (0-based, ascending) pivot columns.
pub fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !f.is_zero(a.get(r, col))) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = f.inv(a.get(row, col));
        for c in col..a.cols {
            let v = f.mul(a.get(row, c), &inv);
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row || f.is_zero(a.get(r, col)) {
                continue;
            }
            let factor = a.get(r, col).clone();
            for c in col..a.cols {
                let v = f.sub(a.get(r, c), &f.mul(&factor, a.get(row, c)));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    rref(f, m).1.len()
}

/// One vector per free column, ascending: 1 at its free column, 0 at the
/// other free columns, pivot entries read off the RREF.
pub fn kernel_basis<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(f, m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); m.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            v
        })
        .collect()
}

/// Nonzero rows of the RREF of the stacked vectors: an independent spanning set.
pub fn row_space_basis<F: Field>(f: &F, cols: usize, vectors: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(cols, vectors.to_vec());
    let (r, pivots) = rref(f, &m);
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Does `v` lie in the span of `basis`?
pub fn in_span<F: Field>(f: &F, v: &[F::Elem], basis: &[Vec<F::Elem>]) -> Result<bool> {
    if let Some(b) = basis.iter().find(|b| b.len() != v.len()) {
        return Err(Error::DimensionMismatch {
            expected: v.len(),
            found: b.len(),
        });
    }
    if v.iter().all(|x| f.is_zero(x)) {
        return Ok(true);
    }
    let cols = v.len();
    let before = row_space_basis(f, cols, basis).len();
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    Ok(row_space_basis(f, cols, &with).len() == before)
}

/// Scales a rational vector to a primitive integer vector whose first nonzero entry is positive.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigRational> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| (q * &lcm).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return v.to_vec();
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter()
        .map(|x| BigRational::from_integer(x / &content * &sign))
        .collect()
}
