//! Exact rational geometry: vectors, affine functionals, linear algebra,
//! convex hulls, normalized volumes and strict LP feasibility.

mod hull;
mod linalg;
mod lp;

use std::fmt;
use std::ops::{Deref, Index};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use hull::{cone_facets, placing_triangulation, upper_hull_facets, ConeFacet, UpperFacet};
pub use linalg::{
    affine_basis, affine_rank, barycentric, determinant, nullspace, rank, simplex_normalized_volume, solve,
};
pub use lp::lp_feasible_strict;

/// Exact scalar. Always normalized (lowest terms, positive denominator).
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse "p/q", "p", or "-p/q".
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed: std::result::Result<Rational, _> = t.parse();
    match parsed {
        Ok(r) => Ok(r),
        Err(_) => Err(Error::Parse(format!("not a rational number: {s:?}"))),
    }
}

pub fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// A point of `V` or an element of `V*`; the pairing is the dot product.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Append one coordinate (used for homogenization and for `V x R`).
    pub fn extended(&self, last: Rational) -> Vector {
        let mut c = self.0.clone();
        c.push(last);
        Vector(c)
    }

    /// Positive multiple with coprime integer coordinates. Zero stays zero.
    pub fn primitive(&self) -> Vector {
        Vector(primitive_integer(&self.0))
    }
}

impl Deref for Vector {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(v: Vec<Rational>) -> Self {
        Vector(v)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Scale a rational vector by a positive factor so its entries are coprime integers.
pub(crate) fn primitive_integer(v: &[Rational]) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// The affine function `x -> linear(x) - constant`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineFunctional {
    pub linear: Vector,
    pub constant: Rational,
}

impl AffineFunctional {
    pub fn new(linear: Vector, constant: Rational) -> Self {
        AffineFunctional { linear, constant }
    }

    /// A purely linear functional (constant zero).
    pub fn linear(linear: Vector) -> Self {
        AffineFunctional { linear, constant: Rational::zero() }
    }

    pub fn dim(&self) -> usize {
        self.linear.dim()
    }

    pub fn eval(&self, x: &Vector) -> Rational {
        self.linear.dot(x) - &self.constant
    }

    pub fn negated(&self) -> Self {
        AffineFunctional { linear: self.linear.scale(&-Rational::one()), constant: -self.constant.clone() }
    }

    /// Same functional on `R^d x R^k`, with zero coefficients on the new coordinates.
    pub fn padded(&self, extra: usize) -> Self {
        let mut c = self.linear.coords().to_vec();
        c.extend(std::iter::repeat_with(Rational::zero).take(extra));
        AffineFunctional { linear: Vector(c), constant: self.constant.clone() }
    }
}
