//! Points of the fundamental Weyl cell and coroot evaluation.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, int, Rational};
use crate::root_data::{LieType, RootSystem};

/// A rational point `u = Σ λ_i ω_i` lying in the fundamental cell.
#[derive(Clone, Debug, PartialEq)]
pub struct CellPoint {
    pub lie_type: LieType,
    pub lambda: Vec<Rational>,
    /// Indices with `λ_i > 0`.
    pub support: Vec<usize>,
    /// Indices with `λ_i = 0`.
    pub cosupport: Vec<usize>,
    /// `β*(u)`.
    pub beta_value: Rational,
    pub on_wall: bool,
    /// `α*(u) ∈ Z` for every root, so `exp(u)` is central.
    pub central: bool,
}

/// Coordinates over the simple roots: `λ^T A^{-1}`.
pub fn convert_to_root_basis(rs: &RootSystem, lambda: &[Rational]) -> Vec<Rational> {
    linalg::vec_mat(lambda, rs.cartan_inv())
}

/// Inverse of [`convert_to_root_basis`]: `c^T A`.
pub fn convert_to_weight_basis(rs: &RootSystem, coords: &[Rational]) -> Vec<Rational> {
    linalg::vec_mat(coords, &linalg::to_rational(rs.cartan()))
}

/// `α*(u) = Σ λ_i k_i (α_i, α_i) / (α, α)` for `α = Σ k_i α_i`.
pub fn coroot_value(rs: &RootSystem, lambda: &[Rational], k: &[i64]) -> Result<Rational> {
    if k.iter().all(|&x| x == 0) {
        return Err(Error::ZeroRoot);
    }
    let norm = rs.norm(k);
    let lengths = rs.lengths();
    let num = lambda
        .iter()
        .zip(k)
        .zip(&lengths)
        .fold(Rational::zero(), |acc, ((l, &ki), &len)| acc + *l * int(ki * len));
    Ok(num / norm)
}

pub fn beta_value(rs: &RootSystem, lambda: &[Rational]) -> Rational {
    coroot_value(rs, lambda, rs.beta()).expect("β is nonzero")
}

pub fn cell_membership(rs: &RootSystem, lambda: &[Rational]) -> Result<CellPoint> {
    let n = rs.rank();
    if lambda.len() != n {
        return Err(Error::WrongLength {
            expected: n,
            got: lambda.len(),
        });
    }
    if let Some(i) = lambda.iter().position(Signed::is_negative) {
        return Err(Error::NotInCell(format!(
            "λ_{} = {} is negative",
            i + 1,
            lambda[i]
        )));
    }
    let beta_value = beta_value(rs, lambda);
    if beta_value > int(1) {
        return Err(Error::NotInCell(format!("β*(u) = {beta_value} exceeds 1")));
    }
    let support: Vec<usize> = (0..n).filter(|&i| !lambda[i].is_zero()).collect();
    let cosupport: Vec<usize> = (0..n).filter(|&i| lambda[i].is_zero()).collect();
    let central = rs
        .positive_roots()
        .iter()
        .all(|k| coroot_value(rs, lambda, k).unwrap().is_integer());
    Ok(CellPoint {
        lie_type: rs.lie_type(),
        lambda: lambda.to_vec(),
        support,
        cosupport,
        on_wall: beta_value == int(1),
        beta_value,
        central,
    })
}

/// Parses comma-separated rationals such as `0,1/2,0`.
pub fn parse_lambda(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<Rational>()
                .map_err(|_| Error::Parse(format!("bad rational {:?}", part.trim())))
        })
        .collect()
}

pub fn format_lambda(lambda: &[Rational]) -> String {
    lambda
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// `ω_i / p` as a weight-coordinate vector (0-based `i`).
pub fn fundamental_fraction(rank: usize, i: usize, p: i64) -> Vec<Rational> {
    (0..rank)
        .map(|j| if j == i { linalg::rat(1, p) } else { Rational::zero() })
        .collect()
}
