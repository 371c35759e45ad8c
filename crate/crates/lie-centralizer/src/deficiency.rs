//! Minimal-weight systems, reduced weight systems and the deficiency function.

use num_integer::Integer;

use crate::abelian::FiniteGroup;
use crate::error::{Error, Result};
use crate::linalg::{denominator_lcm, is_integral, LatticeSubspace, RatMatrix, Rational};
use crate::local_type::LocalType;
use crate::root_data::{inverse_cartan, minimal_weights, LieType};

/// Entry of a reduced weight tuple: `None` is the zero weight, `Some(i)` is `ω_i` (0-based).
pub type WeightLabel = Option<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWeightElement {
    pub theta: Vec<WeightLabel>,
    /// `γ` in the root coordinates of the ambient group.
    pub radical: Option<Vec<Rational>>,
}

impl ReducedWeightElement {
    pub fn semisimple(theta: Vec<WeightLabel>) -> Self {
        ReducedWeightElement {
            theta,
            radical: None,
        }
    }
}

/// Least `m` with `m ω_i` in the root lattice.
pub fn deficiency_simple(t: LieType, i: WeightLabel) -> Result<u64> {
    let Some(i) = i else { return Ok(1) };
    if !minimal_weights(t).contains(&i) {
        return Err(Error::NotMinimalWeight(i + 1));
    }
    Ok(denominator_lcm(&inverse_cartan(t)[i]) as u64)
}

pub fn deficiency_tuple(lt: &LocalType, theta: &[WeightLabel]) -> Result<u64> {
    check_shape(lt, theta)?;
    lt.components
        .iter()
        .zip(theta)
        .try_fold(1u64, |acc, (c, &w)| Ok(acc.lcm(&deficiency_simple(c.lie_type, w)?)))
}

fn check_shape(lt: &LocalType, theta: &[WeightLabel]) -> Result<()> {
    if theta.len() != lt.components.len() {
        return Err(Error::ShapeMismatch {
            expected: lt.components.len(),
            got: theta.len(),
        });
    }
    Ok(())
}

/// `Π_t ⊔ {0}` with zero first.
pub fn center_labels(t: LieType) -> Vec<WeightLabel> {
    std::iter::once(None)
        .chain(minimal_weights(t).into_iter().map(Some))
        .collect()
}

/// All tuples in lexicographic order, zero entries first.
pub fn reduced_weight_system(lt: &LocalType) -> Vec<ReducedWeightElement> {
    let mut tuples: Vec<Vec<WeightLabel>> = vec![vec![]];
    for c in &lt.components {
        let labels = center_labels(c.lie_type);
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                labels.iter().map(move |&w| {
                    let mut t = t.clone();
                    t.push(w);
                    t
                })
            })
            .collect();
    }
    tuples.into_iter().map(ReducedWeightElement::semisimple).collect()
}

/// Order of `θ ⊕ (-γ)` in the covering group's center.
pub fn order_in_kernel(
    lt: &LocalType,
    element: &ReducedWeightElement,
    radical_lattice: &LatticeSubspace,
) -> Result<u64> {
    let d = deficiency_tuple(lt, &element.theta)?;
    let m = match &element.radical {
        None => 1,
        Some(gamma) => radical_lattice.order_of(gamma).ok_or(Error::OutsideRadical)? as u64,
    };
    Ok(d.lcm(&m))
}

/// Addition on `Π_t ⊔ {0}` induced by addition of weights modulo the root lattice.
#[derive(Clone, Debug)]
pub struct CenterLaw {
    labels: Vec<WeightLabel>,
    table: Vec<Vec<usize>>,
}

impl CenterLaw {
    pub fn new(t: LieType) -> Self {
        let inv: RatMatrix = inverse_cartan(t);
        let labels = center_labels(t);
        let n = t.rank();
        let weight = |w: WeightLabel| -> Vec<Rational> {
            match w {
                None => vec![Rational::default(); n],
                Some(i) => inv[i].clone(),
            }
        };
        let table = labels
            .iter()
            .map(|&a| {
                labels
                    .iter()
                    .map(|&b| {
                        let (wa, wb) = (weight(a), weight(b));
                        labels
                            .iter()
                            .position(|&c| {
                                let wc = weight(c);
                                let diff: Vec<Rational> =
                                    (0..n).map(|k| wa[k] + wb[k] - wc[k]).collect();
                                is_integral(&diff)
                            })
                            .expect("minimal weights represent every class")
                    })
                    .collect()
            })
            .collect();
        CenterLaw { labels, table }
    }

    pub fn labels(&self) -> &[WeightLabel] {
        &self.labels
    }

    fn index(&self, w: WeightLabel) -> usize {
        self.labels.iter().position(|&l| l == w).expect("label in table")
    }

    pub fn add(&self, a: WeightLabel, b: WeightLabel) -> WeightLabel {
        self.labels[self.table[self.index(a)][self.index(b)]]
    }

    pub fn invariant_factors(&self) -> Vec<u64> {
        let gens: Vec<WeightLabel> = self.labels.clone();
        FiniteGroup::generated(None, &gens, |a: &WeightLabel, b: &WeightLabel| self.add(*a, *b))
            .invariant_factors()
    }
}
