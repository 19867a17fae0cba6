//! Exact scalars over Q and Q(i), and definiteness of rational symmetric
//! matrices.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`, reduced.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An element `re + i·im` of Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(rat(n))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = rat(k);
        Self { re: &self.re * &k, im: &self.im * &k }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }
}

/// Complex conjugation `re - i·im`.
pub fn conj(z: &GaussianRational) -> GaussianRational {
    z.conj()
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self { re: Rational::zero(), im: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        Self::real(re)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => write!(f, "{}-{}i", self.re, -&self.im),
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: GaussianRational) -> GaussianRational {
        &self + &o
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: GaussianRational) -> GaussianRational {
        &self - &o
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: GaussianRational) -> GaussianRational {
        &self * &o
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, o: &GaussianRational) -> GaussianRational {
        let inv = o.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, o: GaussianRational) -> GaussianRational {
        &self / &o
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

/// Dense symmetric matrix of rationals. Symmetry is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl SymMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if let Some(r) = rows.iter().position(|r| r.len() != dim) {
            return Err(Error::InvalidMatrix(format!(
                "row {r} has length {} in a {dim}x{dim} matrix",
                rows[r].len()
            )));
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidMatrix(format!(
                        "not symmetric at ({i},{j}): {} vs {}",
                        rows[i][j], rows[j][i]
                    )));
                }
            }
        }
        Ok(Self { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    /// `x^T M x`.
    pub fn quadratic_form(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.dim);
        let mut acc = Rational::zero();
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if !x[j].is_zero() {
                    acc += &x[i] * self.get(i, j) * &x[j];
                }
            }
        }
        acc
    }

    /// Pivots of symmetric Gaussian elimination without row exchanges.
    /// Stops early (returning the pivots seen so far, last one zero) when a
    /// zero pivot blocks elimination.
    pub fn ldl_pivots(&self) -> Vec<Rational> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let p = a[k * n + k].clone();
            pivots.push(p.clone());
            if p.is_zero() {
                break;
            }
            for i in (k + 1)..n {
                if a[i * n + k].is_zero() {
                    continue;
                }
                let factor = &a[i * n + k] / &p;
                for j in (k + 1)..n {
                    if a[k * n + j].is_zero() {
                        continue;
                    }
                    let delta = &factor * &a[k * n + j];
                    a[i * n + j] -= delta;
                }
            }
        }
        pivots
    }
}

/// True iff `x^T m x < 0` for all nonzero rational `x`: every elimination
/// pivot must be strictly negative.
pub fn is_negative_definite(m: &SymMatrix) -> bool {
    let pivots = m.ldl_pivots();
    pivots.len() == m.dim() && pivots.iter().all(|p| p.is_negative())
}
