#![allow(dead_code)]

pub mod golden;
pub mod oracles;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tropaint::config::{build_configuration, PointConfiguration};
use tropaint::geometry::{rat, Rational, Vector};
use tropaint::subdivision::Lifting;

pub fn config(points: &[&[i64]]) -> PointConfiguration {
    build_configuration(points.iter().map(|p| Vector::from_ints(p)).collect()).unwrap()
}

/// Four triangles around an interior point.
pub fn quad() -> PointConfiguration {
    config(&[&[0, 0], &[1, 0], &[0, 1], &[-1, 0], &[-1, -1]])
}

pub fn quad_alpha() -> Vector {
    Vector::new(vec![rat(1, 3), rat(1, 3)])
}

/// A triangle with one point above and one below: a circuit.
pub fn bipyramid() -> PointConfiguration {
    config(&[&[1, 0, 0], &[0, 1, 0], &[-1, -1, 0], &[0, 0, 1], &[0, 0, -1]])
}

pub fn bipyramid_alpha() -> Vector {
    Vector::new(vec![rat(1, 2), rat(1, 3), rat(1, 2)])
}

pub fn running_examples() -> Vec<(&'static str, PointConfiguration, Vector)> {
    vec![("quad", quad(), quad_alpha()), ("bipyramid", bipyramid(), bipyramid_alpha())]
}

/// `k` points in convex position on `y = x^2`.
pub fn parabola_polygon(k: usize) -> PointConfiguration {
    let pts: Vec<Vec<i64>> = (0..k as i64).map(|x| vec![x, x * x]).collect();
    build_configuration(pts.iter().map(|p| Vector::from_ints(p)).collect()).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_lifting(rng: &mut StdRng, n: usize, range: i64) -> Lifting {
    Lifting((0..n).map(|_| Rational::from_integer(rng.gen_range(-range..=range).into())).collect())
}

pub fn random_rational(rng: &mut StdRng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_positive(rng: &mut StdRng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(1..=num), rng.gen_range(1..=den))
}
