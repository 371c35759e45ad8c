//! Finite abelian groups given by an explicit element list and addition law.

use std::collections::HashSet;
use std::hash::Hash;

/// Drops unit entries from a Smith diagonal and returns the rest in divisibility order.
pub fn nontrivial(diagonal: &[i64]) -> Vec<u64> {
    let mut out: Vec<u64> = diagonal
        .iter()
        .map(|d| d.unsigned_abs())
        .filter(|&d| d != 1)
        .collect();
    out.sort_unstable();
    out
}

/// A finite abelian group presented by enumeration.
pub struct FiniteGroup<T, F> {
    elements: Vec<T>,
    zero: T,
    add: F,
}

impl<T, F> FiniteGroup<T, F>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    /// The subgroup generated by `generators`, closed under `add`.
    pub fn generated(zero: T, generators: &[T], add: F) -> Self {
        let mut seen: HashSet<T> = HashSet::from([zero.clone()]);
        let mut elements = vec![zero.clone()];
        let mut i = 0;
        while i < elements.len() {
            let x = elements[i].clone();
            for g in generators {
                let y = add(&x, g);
                if seen.insert(y.clone()) {
                    elements.push(y);
                }
            }
            i += 1;
        }
        FiniteGroup { elements, zero, add }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn multiple(&self, x: &T, k: u64) -> T {
        let mut acc = self.zero.clone();
        for _ in 0..k {
            acc = (self.add)(&acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: &T) -> u64 {
        let mut acc = x.clone();
        let mut k = 1;
        while acc != self.zero {
            acc = (self.add)(&acc, x);
            k += 1;
        }
        k
    }

    /// Invariant factors `d_1 | d_2 | ...`, read off from the sizes of the `p^j`-torsion
    /// subgroups.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let n = self.order() as u64;
        let mut columns: Vec<Vec<u64>> = Vec::new();
        for p in prime_factors(n) {
            let mut part = 1;
            while n.is_multiple_of(part * p) {
                part *= p;
            }
            let mut counts = vec![0u32];
            let mut pj = 1;
            loop {
                pj *= p;
                let size = self
                    .elements
                    .iter()
                    .filter(|x| self.multiple(x, pj) == self.zero)
                    .count() as u64;
                counts.push(log_exact(size, p));
                if size == part {
                    break;
                }
            }
            // ranks[j] = number of cyclic p-factors of order at least p^(j+1)
            let ranks: Vec<u32> = counts.windows(2).map(|w| w[1] - w[0]).collect();
            let mut exps = Vec::new();
            for (j, &r) in ranks.iter().enumerate() {
                let next = ranks.get(j + 1).copied().unwrap_or(0);
                for _ in 0..r - next {
                    exps.push(p.pow(j as u32 + 1));
                }
            }
            exps.sort_unstable_by(|a, b| b.cmp(a));
            columns.push(exps);
        }
        let len = columns.iter().map(Vec::len).max().unwrap_or(0);
        let mut out: Vec<u64> = (0..len)
            .map(|k| columns.iter().map(|c| c.get(k).copied().unwrap_or(1)).product())
            .collect();
        out.reverse();
        out
    }

    /// Elements `g_1, ..., g_k` of orders `d_1, ..., d_k` forming a direct-sum basis.
    pub fn basis(&self) -> Vec<T> {
        let factors = self.invariant_factors();
        let mut chosen = Vec::new();
        self.extend_basis(&factors, &mut chosen);
        chosen.reverse();
        chosen
    }

    fn extend_basis(&self, factors: &[u64], chosen: &mut Vec<T>) -> bool {
        let Some((&d, rest)) = factors.split_last() else {
            return true;
        };
        let current = FiniteGroup::generated(self.zero.clone(), chosen, &self.add).order();
        for x in &self.elements {
            if self.element_order(x) != d {
                continue;
            }
            chosen.push(x.clone());
            let size = FiniteGroup::generated(self.zero.clone(), chosen, &self.add).order();
            if size as u64 == current as u64 * d && self.extend_basis(rest, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn log_exact(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        k += 1;
    }
    k
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}
