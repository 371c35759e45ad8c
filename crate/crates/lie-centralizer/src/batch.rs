//! Random cell points and batch evaluation. Data-parallel with the `parallel` feature,
//! sequential otherwise.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::kernel::{full_centralizer, CentralizerResult};
use crate::linalg::{rat, Rational};
use crate::root_data::RootSystem;
use crate::weyl_cell::beta_value;

macro_rules! if_parallel {
    ($par:expr, $seq:expr) => {{
        #[cfg(feature = "parallel")]
        {
            $par
        }
        #[cfg(not(feature = "parallel"))]
        {
            $seq
        }
    }};
}

/// A random point of the cell: on the wall `β*(u) = 1` or strictly inside.
pub fn random_cell_point<R: Rng>(rs: &RootSystem, rng: &mut R, wall: bool) -> Vec<Rational> {
    let n = rs.rank();
    let mut lambda = vec![Rational::zero(); n];
    while lambda.iter().all(Zero::is_zero) {
        for x in lambda.iter_mut() {
            *x = if rng.gen_bool(0.5) {
                let d = rng.gen_range(1..=12);
                rat(rng.gen_range(1..=d), d)
            } else {
                Rational::zero()
            };
        }
    }
    let b = beta_value(rs, &lambda);
    let scale = if wall {
        b.recip()
    } else {
        let q = rng.gen_range(2..=12);
        rat(rng.gen_range(1..q), q) / b
    };
    lambda.iter().map(|x| *x * scale).collect()
}

/// `count` points alternating between wall and interior, reproducible from `seed`.
pub fn random_cell_points(rs: &RootSystem, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (rs.rank() as u64) << 32);
    (0..count)
        .map(|i| random_cell_point(rs, &mut rng, i % 2 == 0))
        .collect()
}

pub fn map_sequential<T, F>(points: &[Vec<Rational>], f: F) -> Vec<T>
where
    F: Fn(&[Rational]) -> T,
{
    points.iter().map(|p| f(p)).collect()
}

#[cfg(feature = "parallel")]
pub fn map_parallel<T, F>(points: &[Vec<Rational>], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[Rational]) -> T + Sync,
{
    use rayon::prelude::*;
    points.par_iter().map(|p| f(p)).collect()
}

/// Applies `f` to every point, preserving order.
pub fn map_points<T, F>(points: &[Vec<Rational>], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[Rational]) -> T + Sync,
{
    if_parallel!(map_parallel(points, f), map_sequential(points, f))
}

pub fn evaluate_sequential(rs: &RootSystem, points: &[Vec<Rational>]) -> Vec<Result<CentralizerResult>> {
    map_sequential(points, |p| full_centralizer(rs, p))
}

#[cfg(feature = "parallel")]
pub fn evaluate_parallel(rs: &RootSystem, points: &[Vec<Rational>]) -> Vec<Result<CentralizerResult>> {
    map_parallel(points, |p| full_centralizer(rs, p))
}

pub fn evaluate(rs: &RootSystem, points: &[Vec<Rational>]) -> Vec<Result<CentralizerResult>> {
    map_points(points, |p| full_centralizer(rs, p))
}
