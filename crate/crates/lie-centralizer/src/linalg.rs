//! Exact integer and rational linear algebra over small dense matrices.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i64>;
pub type IntMatrix = Vec<Vec<i64>>;
pub type RatMatrix = Vec<Vec<Rational>>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(value)
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn to_rational(m: &[Vec<i64>]) -> RatMatrix {
    m.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect()
}

pub fn to_rational_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> RatMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + row[k] * b[k][j]))
                .collect()
        })
        .collect()
}

/// Row vector times matrix: `v^T m`.
pub fn vec_mat(v: &[Rational], m: &[Vec<Rational>]) -> Vec<Rational> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(m)
                .fold(Rational::zero(), |acc, (x, row)| acc + *x * row[j])
        })
        .collect()
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + *a * *b))
        .collect()
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(Ratio::is_integer)
}

pub fn denominator_lcm(v: &[Rational]) -> i64 {
    v.iter().fold(1, |acc, x| acc.lcm(x.denom()))
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn invert(m: &[Vec<Rational>]) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m.to_vec();
    let mut inv = to_rational(&identity(n));
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}

pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a = to_rational(m);
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return 0;
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            for j in col..n {
                let x = a[col][j];
                a[r][j] -= f * x;
            }
        }
    }
    det.to_integer()
}

/// `left * m * right = diag(diagonal)` with `d_1 | d_2 | ...` and nonnegative entries.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diagonal: Vec<i64>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> Smith {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let mut left = identity(rows);
    let mut right = identity(cols);
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            let Some((pr, pc)) = min_entry(&a, t) else {
                break;
            };
            a.swap(t, pr);
            left.swap(t, pr);
            swap_cols(&mut a, t, pc);
            swap_cols(&mut right, t, pc);

            let mut dirty = false;
            for r in t + 1..rows {
                let q = Integer::div_floor(&a[r][t], &a[t][t]);
                if q != 0 {
                    add_row(&mut a, r, t, -q);
                    add_row(&mut left, r, t, -q);
                }
                dirty |= a[r][t] != 0;
            }
            for c in t + 1..cols {
                let q = Integer::div_floor(&a[t][c], &a[t][t]);
                if q != 0 {
                    add_col(&mut a, c, t, -q);
                    add_col(&mut right, c, t, -q);
                }
                dirty |= a[t][c] != 0;
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[r][c] % a[t][t] != 0));
            match bad {
                Some(r) => {
                    add_row(&mut a, t, r, 1);
                    add_row(&mut left, t, r, 1);
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
            for x in left[t].iter_mut() {
                *x = -*x;
            }
        }
        diagonal.push(a[t][t]);
    }
    Smith { diagonal, left, right }
}

fn min_entry(a: &[Vec<i64>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(t) {
        for (c, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.is_none_or(|(br, bc)| x.abs() < a[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<i64>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

fn add_row(a: &mut [Vec<i64>], target: usize, source: usize, factor: i64) {
    let src = a[source].clone();
    for (x, s) in a[target].iter_mut().zip(src) {
        *x += factor * s;
    }
}

fn add_col(a: &mut [Vec<i64>], target: usize, source: usize, factor: i64) {
    for row in a.iter_mut() {
        row[target] += factor * row[source];
    }
}

/// Column echelon form `m * transform` whose columns past `rank` vanish.
#[derive(Clone, Debug)]
pub struct ColumnEchelon {
    pub rank: usize,
    pub reduced: IntMatrix,
    pub transform: IntMatrix,
}

pub fn column_echelon(m: &[Vec<i64>], cols: usize) -> ColumnEchelon {
    let mut a = m.to_vec();
    let mut u = identity(cols);
    let mut pivot = 0;
    for r in 0..a.len() {
        if pivot == cols {
            break;
        }
        loop {
            let best = (pivot..cols)
                .filter(|&c| a[r][c] != 0)
                .min_by_key(|&c| a[r][c].abs());
            let Some(best) = best else { break };
            swap_cols(&mut a, pivot, best);
            swap_cols(&mut u, pivot, best);
            let mut done = true;
            for c in pivot + 1..cols {
                let q = Integer::div_floor(&a[r][c], &a[r][pivot]);
                if q != 0 {
                    add_col(&mut a, c, pivot, -q);
                    add_col(&mut u, c, pivot, -q);
                }
                done &= a[r][c] == 0;
            }
            if done {
                break;
            }
        }
        if a[r][pivot] != 0 {
            pivot += 1;
        }
    }
    ColumnEchelon {
        rank: pivot,
        reduced: a,
        transform: u,
    }
}

/// Rational subspace `V` of `Q^n` together with a basis of the saturated lattice `Z^n ∩ V`
/// and a unimodular change of basis adapted to it.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeSubspace {
    n: usize,
    codim: usize,
    basis: IntMatrix,
    inverse: RatMatrix,
}

impl LatticeSubspace {
    /// `V = { x : f . x = 0 }` for the given integer functionals.
    pub fn annihilated_by(functionals: &[Vec<i64>], n: usize) -> Self {
        let ech = column_echelon(functionals, n);
        let mut u = ech.transform;
        for c in ech.rank..n {
            let lead = (0..n).map(|r| u[r][c]).find(|&x| x != 0).unwrap_or(1);
            if lead < 0 {
                for row in u.iter_mut() {
                    row[c] = -row[c];
                }
            }
        }
        let basis = (ech.rank..n)
            .map(|c| (0..n).map(|r| u[r][c]).collect())
            .collect();
        let inverse = invert(&to_rational(&u)).expect("unimodular transform");
        LatticeSubspace {
            n,
            codim: ech.rank,
            basis,
            inverse,
        }
    }

    pub fn spanned_by(vectors: &[Vec<Rational>], n: usize) -> Self {
        let rows: IntMatrix = vectors.iter().map(|v| clear_denominators(v)).collect();
        let ech = column_echelon(&rows, n);
        let functionals: IntMatrix = (ech.rank..n)
            .map(|c| (0..n).map(|r| ech.transform[r][c]).collect())
            .collect();
        Self::annihilated_by(&functionals, n)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - self.codim
    }

    /// Basis of `Z^n ∩ V`.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    fn coords(&self, x: &[Rational]) -> Vec<Rational> {
        mat_vec(&self.inverse, x)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.coords(x)[..self.codim].iter().all(Zero::is_zero)
    }

    /// Coefficients of `x` over `basis()`, when `x ∈ V`.
    pub fn coefficients(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        let y = self.coords(x);
        y[..self.codim]
            .iter()
            .all(Zero::is_zero)
            .then(|| y[self.codim..].to_vec())
    }

    /// Decides `x ∈ V + Z^n`. On success returns the canonical `g ∈ V` with `x - g ∈ Z^n`,
    /// whose coefficients over `basis()` lie in `[0, 1)`.
    pub fn reduce(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        let y = self.coords(x);
        if !is_integral(&y[..self.codim]) {
            return None;
        }
        let mut g = vec![Rational::zero(); self.n];
        for (c, b) in y[self.codim..].iter().zip(&self.basis) {
            let f = c.fract();
            let f = if f.is_negative() { f + Rational::one() } else { f };
            for (gi, &bi) in g.iter_mut().zip(b) {
                *gi += f * int(bi);
            }
        }
        Some(g)
    }

    /// Least `m > 0` with `m x ∈ Z^n ∩ V`, for `x ∈ V`.
    pub fn order_of(&self, x: &[Rational]) -> Option<i64> {
        self.coefficients(x).map(|c| denominator_lcm(&c))
    }
}

pub fn clear_denominators(v: &[Rational]) -> Vec<i64> {
    let d = denominator_lcm(v);
    v.iter().map(|x| (*x * int(d)).to_integer()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn inverse_of_a2() {
        let a = to_rational(&m(&[&[2, -1], &[-1, 2]]));
        let inv = invert(&a).unwrap();
        assert_eq!(inv, vec![vec![rat(2, 3), rat(1, 3)], vec![rat(1, 3), rat(2, 3)]]);
        assert_eq!(mat_mul(&a, &inv), to_rational(&identity(2)));
    }

    #[test]
    fn singular_has_no_inverse() {
        assert!(invert(&to_rational(&m(&[&[1, 2], &[2, 4]]))).is_none());
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), 0);
    }

    #[test]
    fn smith_of_small_matrices() {
        let s = smith_normal_form(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.diagonal, vec![2, 6, 12]);
        let s = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal, vec![1, 6]);
    }

    #[test]
    fn smith_transforms_are_consistent() {
        let a = m(&[&[4, 6, 2], &[2, 8, 0], &[0, 2, 6]]);
        let s = smith_normal_form(&a);
        let prod = mat_mul(&mat_mul(&to_rational(&s.left), &to_rational(&a)), &to_rational(&s.right));
        for (i, row) in prod.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j { s.diagonal[i] } else { 0 };
                assert_eq!(*x, int(want));
            }
        }
        assert_eq!(determinant(&s.left).abs(), 1);
        assert_eq!(determinant(&s.right).abs(), 1);
    }

    #[test]
    fn saturated_line() {
        let v = LatticeSubspace::spanned_by(&[vec![rat(2, 3), rat(4, 3), int(2)]], 3);
        assert_eq!(v.dim(), 1);
        assert_eq!(v.basis(), &[vec![1, 2, 3]]);
        assert!(v.contains(&[int(-1), int(-2), int(-3)]));
        assert!(!v.contains(&[int(1), int(0), int(0)]));
        let g = v.reduce(&[rat(1, 2), int(1), rat(3, 2)]).unwrap();
        assert_eq!(g, vec![rat(1, 2), int(1), rat(3, 2)]);
        let g = v.reduce(&[rat(3, 2), int(1), rat(3, 2)]).unwrap();
        assert_eq!(g, vec![rat(1, 2), int(1), rat(3, 2)]);
        assert!(v.reduce(&[rat(1, 2), int(0), int(0)]).is_none());
        assert_eq!(v.order_of(&[rat(1, 3), rat(2, 3), int(1)]), Some(3));
    }

    #[test]
    fn zero_and_full_subspaces() {
        let zero = LatticeSubspace::spanned_by(&[], 2);
        assert_eq!(zero.dim(), 0);
        assert_eq!(zero.reduce(&[int(1), int(2)]), Some(vec![int(0), int(0)]));
        assert!(zero.reduce(&[rat(1, 2), int(2)]).is_none());
        let full = LatticeSubspace::annihilated_by(&[], 2);
        assert_eq!(full.dim(), 2);
        assert!(full.reduce(&[rat(1, 7), rat(3, 5)]).is_some());
    }
}
