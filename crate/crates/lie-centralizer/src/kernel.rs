//! Kernel of the covering `G_1 x ... x G_k x T^r -> C_exp(u)` and the full centralizer
//! computation.

use num_traits::Zero;

use crate::abelian::{self, is_prime, FiniteGroup};
use crate::deficiency::{
    deficiency_tuple, order_in_kernel, reduced_weight_system, CenterLaw, ReducedWeightElement,
    WeightLabel,
};
use crate::error::{Error, Result};
use crate::linalg::{self, to_rational_vec, LatticeSubspace, RatMatrix, Rational};
use crate::local_type::{local_type, Branch, LocalType};
use crate::root_data::{cartan_matrix, RootSystem};
use crate::weyl_cell::{beta_value, cell_membership, convert_to_weight_basis, CellPoint};

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingData {
    /// `weight_images[c][a]` is `h_*(ω'_a)` of component `c`, in simple-root coordinates.
    pub weight_images: Vec<Vec<Vec<Rational>>>,
    /// Spanning vectors of the radical subspace, in simple-root coordinates.
    pub radical_span: Vec<Vec<Rational>>,
    /// The radical subspace with its unit lattice `Z^n ∩ V_rad`.
    pub radical_lattice: LatticeSubspace,
}

impl EmbeddingData {
    /// `h_*(θ)` in simple-root coordinates.
    pub fn image(&self, theta: &[WeightLabel]) -> Vec<Rational> {
        let n = self.radical_lattice.ambient_dim();
        let mut x = vec![Rational::zero(); n];
        for (images, w) in self.weight_images.iter().zip(theta) {
            if let Some(a) = w {
                for (xi, yi) in x.iter_mut().zip(&images[*a]) {
                    *xi += *yi;
                }
            }
        }
        x
    }
}

pub fn embedding(rs: &RootSystem, u: &CellPoint, lt: &LocalType) -> Result<EmbeddingData> {
    if lt.branch == Branch::Central {
        return Err(Error::CentralBranch);
    }
    let weight_images = lt
        .components
        .iter()
        .map(|c| {
            let inv: RatMatrix = linalg::invert(&linalg::to_rational(&cartan_matrix(c.lie_type)))
                .expect("invertible");
            let roots: Vec<Vec<Rational>> =
                c.vertices.iter().map(|&v| to_rational_vec(&rs.node_vector(v))).collect();
            linalg::mat_mul(&inv, &roots)
        })
        .collect();

    let n = rs.rank();
    let omega = |k: usize| rs.cartan_inv()[k].clone();
    let radical_span: Vec<Vec<Rational>> = match lt.branch {
        Branch::Interior => u.support.iter().map(|&k| omega(k)).collect(),
        _ => {
            let scaled = |k: usize| {
                let b = beta_value(rs, &crate::weyl_cell::fundamental_fraction(n, k, 1));
                omega(k).into_iter().map(|x| x / b).collect::<Vec<_>>()
            };
            let first = scaled(u.support[0]);
            u.support[1..]
                .iter()
                .map(|&k| scaled(k).iter().zip(&first).map(|(a, b)| *a - *b).collect())
                .collect()
        }
    };
    let radical_lattice = LatticeSubspace::spanned_by(&radical_span, n);
    Ok(EmbeddingData {
        weight_images,
        radical_span,
        radical_lattice,
    })
}

/// An element of `H_u` with its canonical witness `γ_θ`.
#[derive(Clone, Debug, PartialEq)]
pub struct HuElement {
    pub theta: Vec<WeightLabel>,
    /// Root coordinates; `h_*(θ) - γ_θ` is in the root lattice.
    pub gamma: Vec<Rational>,
    pub deficiency: u64,
}

pub fn compute_hu(lt: &LocalType, emb: &EmbeddingData) -> Vec<HuElement> {
    reduced_weight_system(lt)
        .into_iter()
        .filter_map(|e| {
            let d = deficiency_tuple(lt, &e.theta).expect("shaped by construction");
            if d <= 1 {
                return None;
            }
            let gamma = emb.radical_lattice.reduce(&emb.image(&e.theta))?;
            Some(HuElement {
                theta: e.theta,
                gamma,
                deficiency: d,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelGenerator {
    pub theta: Vec<WeightLabel>,
    pub gamma: Vec<Rational>,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelDescription {
    pub order: u64,
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<KernelGenerator>,
}

impl KernelDescription {
    pub fn trivial() -> Self {
        KernelDescription {
            order: 1,
            invariant_factors: vec![],
            generators: vec![],
        }
    }

    /// `{0}`, `Z6`, `Z2⊕Z2`.
    pub fn describe(&self) -> String {
        if self.invariant_factors.is_empty() {
            "{0}".into()
        } else {
            self.invariant_factors
                .iter()
                .map(|d| format!("Z{d}"))
                .collect::<Vec<_>>()
                .join("⊕")
        }
    }
}

pub fn kernel_from_hu(
    lt: &LocalType,
    emb: &EmbeddingData,
    hu: &[HuElement],
) -> Result<KernelDescription> {
    let laws: Vec<CenterLaw> = lt.components.iter().map(|c| CenterLaw::new(c.lie_type)).collect();
    let add = |a: &Vec<WeightLabel>, b: &Vec<WeightLabel>| -> Vec<WeightLabel> {
        laws.iter()
            .zip(a.iter().zip(b))
            .map(|(law, (&x, &y))| law.add(x, y))
            .collect()
    };
    let zero: Vec<WeightLabel> = vec![None; lt.components.len()];
    let thetas: Vec<Vec<WeightLabel>> = hu.iter().map(|h| h.theta.clone()).collect();
    let group = FiniteGroup::generated(zero, &thetas, add);
    if group.order() != hu.len() + 1 {
        return Err(Error::ClosureMismatch {
            generated: group.order(),
            expected: hu.len() + 1,
        });
    }
    let invariant_factors = group.invariant_factors();

    let cyclic_prime = is_prime(hu.len() as u64 + 1)
        .then(|| hu.iter().find(|h| h.deficiency == hu.len() as u64 + 1))
        .flatten();
    let chosen: Vec<Vec<WeightLabel>> = match cyclic_prime {
        Some(h) => vec![h.theta.clone()],
        None => group.basis(),
    };
    let generators = chosen
        .into_iter()
        .map(|theta| {
            let h = hu.iter().find(|h| h.theta == theta).expect("basis drawn from H_u");
            let element = ReducedWeightElement {
                theta: theta.clone(),
                radical: Some(h.gamma.clone()),
            };
            let order = order_in_kernel(lt, &element, &emb.radical_lattice)?;
            Ok(KernelGenerator {
                theta,
                gamma: h.gamma.clone(),
                order,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(KernelDescription {
        order: group.order() as u64,
        invariant_factors,
        generators,
    })
}

/// Invariant factors of `Z^n / (span of the retained roots + Z^n ∩ V_rad)`.
pub fn kernel_oracle_snf(rs: &RootSystem, lt: &LocalType, emb: &EmbeddingData) -> Result<Vec<u64>> {
    let n = rs.rank();
    let mut columns: Vec<Vec<i64>> = lt.base_vertices.iter().map(|&v| rs.node_vector(v)).collect();
    columns.extend(emb.radical_lattice.basis().iter().cloned());
    let matrix: Vec<Vec<i64>> = (0..n).map(|r| columns.iter().map(|c| c[r]).collect()).collect();
    let smith = linalg::smith_normal_form(&matrix);
    if smith.diagonal.iter().filter(|&&d| d != 0).count() < n {
        return Err(Error::RankDeficient);
    }
    Ok(abelian::nontrivial(&smith.diagonal))
}

/// Order of `exp(θ - γ)` when it lies in the kernel, for `γ` in root coordinates.
pub fn kernel_element_order(
    lt: &LocalType,
    emb: &EmbeddingData,
    theta: &[WeightLabel],
    gamma: &[Rational],
) -> Option<u64> {
    if theta.len() != lt.components.len() || !emb.radical_lattice.contains(gamma) {
        return None;
    }
    let diff: Vec<Rational> = emb.image(theta).iter().zip(gamma).map(|(a, b)| *a - *b).collect();
    if !linalg::is_integral(&diff) {
        return None;
    }
    let element = ReducedWeightElement {
        theta: theta.to_vec(),
        radical: Some(gamma.to_vec()),
    };
    order_in_kernel(lt, &element, &emb.radical_lattice).ok()
}

#[derive(Clone, Debug, PartialEq)]
pub struct CentralizerResult {
    pub point: CellPoint,
    pub local_type: LocalType,
    pub embedding: Option<EmbeddingData>,
    pub hu: Vec<HuElement>,
    pub kernel: KernelDescription,
}

impl CentralizerResult {
    /// Radical part `-γ` of a generator in fundamental-weight coordinates.
    pub fn radical_weights(&self, rs: &RootSystem, g: &KernelGenerator) -> Vec<Rational> {
        convert_to_weight_basis(rs, &g.gamma).into_iter().map(|x| -x).collect()
    }

    /// `(SU(2)×SU(3)×S¹)/Z6`, or the group itself for a trivial kernel.
    pub fn describe(&self) -> String {
        let lt = self.local_type.describe();
        if self.kernel.order == 1 {
            lt
        } else {
            format!("{}/{}", crate::catalog::quotient_base(&lt), self.kernel.describe())
        }
    }
}

/// Local type, embedding, `H_u` and kernel of `C_exp(u)`, with the kernel cross-checked
/// against the lattice quotient.
pub fn full_centralizer(rs: &RootSystem, lambda: &[Rational]) -> Result<CentralizerResult> {
    let point = cell_membership(rs, lambda)?;
    let lt = local_type(rs, &point)?;
    if lt.branch == Branch::Central {
        return Ok(CentralizerResult {
            point,
            local_type: lt,
            embedding: None,
            hu: vec![],
            kernel: KernelDescription::trivial(),
        });
    }
    let emb = embedding(rs, &point, &lt)?;
    let hu = compute_hu(&lt, &emb);
    let kernel = kernel_from_hu(&lt, &emb, &hu)?;
    let lattice = kernel_oracle_snf(rs, &lt, &emb)?;
    if lattice != kernel.invariant_factors {
        return Err(Error::CrossCheck {
            enumerated: kernel.invariant_factors,
            lattice,
        });
    }
    Ok(CentralizerResult {
        point,
        local_type: lt,
        embedding: Some(emb),
        hu,
        kernel,
    })
}

/// Convenience: `ω_i/p` for 0-based `i`.
pub fn centralizer_at_fraction(rs: &RootSystem, i: usize, p: i64) -> Result<CentralizerResult> {
    full_centralizer(rs, &crate::weyl_cell::fundamental_fraction(rs.rank(), i, p))
}
