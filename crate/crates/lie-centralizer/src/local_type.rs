//! Local type of a centralizer by deleting vertices from the (extended) Dynkin diagram.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::abelian::is_prime;
use crate::error::{Error, Result};
use crate::linalg::{int, Rational};
use crate::root_data::{classify_diagram, DiagramComponent, LieType, Node, RootSystem};
use crate::weyl_cell::{cell_membership, coroot_value, fundamental_fraction, CellPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Interior,
    Wall,
    Central,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Interior => "interior",
            Branch::Wall => "wall",
            Branch::Central => "central",
        })
    }
}

/// `G_1 x ... x G_k x T^r` covering the centralizer.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalType {
    pub ambient: LieType,
    pub branch: Branch,
    pub components: Vec<DiagramComponent>,
    pub radical_rank: usize,
    pub base_vertices: Vec<Node>,
}

impl LocalType {
    pub fn semisimple_rank(&self) -> usize {
        self.components.iter().map(|c| c.lie_type.rank()).sum()
    }

    /// Product notation such as `SU(2)×Spin(7)×S¹`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.components.iter().map(|c| c.group().to_string()).collect();
        match self.radical_rank {
            0 => {}
            1 => parts.push("S¹".into()),
            r => parts.push(format!("T{}", superscript(r))),
        }
        if parts.is_empty() {
            "{e}".into()
        } else {
            parts.join("×")
        }
    }
}

pub fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// `Ψ_u`: positive roots with integral coroot value at `u`.
pub fn psi_u(rs: &RootSystem, u: &CellPoint) -> Vec<Vec<i64>> {
    rs.positive_roots()
        .iter()
        .filter(|k| coroot_value(rs, &u.lambda, k).unwrap().is_integer())
        .cloned()
        .collect()
}

pub fn local_type(rs: &RootSystem, u: &CellPoint) -> Result<LocalType> {
    let n = rs.rank();
    if u.central {
        let all: Vec<Node> = (0..n).map(Node::Simple).collect();
        return Ok(LocalType {
            ambient: rs.lie_type(),
            branch: Branch::Central,
            components: vec![DiagramComponent {
                lie_type: rs.lie_type(),
                vertices: all.clone(),
            }],
            radical_rank: 0,
            base_vertices: all,
        });
    }
    let mut base: Vec<Node> = u.cosupport.iter().map(|&i| Node::Simple(i)).collect();
    let branch = if u.on_wall {
        base.push(Node::Affine);
        Branch::Wall
    } else {
        Branch::Interior
    };
    local_type_of_base(rs, base, branch)
}

/// Classifies the diagram on `base` and orders its components.
pub fn local_type_of_base(rs: &RootSystem, base: Vec<Node>, branch: Branch) -> Result<LocalType> {
    let mut components = classify_diagram(&rs.submatrix(&base), &base)?;
    let attach = (0..rs.rank())
        .find(|&i| rs.extended_cartan()[rs.rank()][i] != 0)
        .unwrap_or(0);
    let position = |v: &Node| match v {
        Node::Simple(i) => (*i, 0),
        Node::Affine => (attach, 1),
    };
    components.sort_by_key(|c| c.vertices.iter().map(position).min());
    let radical_rank = rs.rank() - base.len();
    Ok(LocalType {
        ambient: rs.lie_type(),
        branch,
        components,
        radical_rank,
        base_vertices: base,
    })
}

/// Root subsystem generated by the given diagram vertices.
pub fn root_subsystem(rs: &RootSystem, base: &[Node]) -> BTreeSet<Vec<i64>> {
    let gens: Vec<Vec<i64>> = base.iter().map(|&v| rs.node_vector(v)).collect();
    rs.reflection_closure(&gens)
}

/// `{±α}` for the given positive roots.
pub fn symmetrize(roots: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    roots
        .iter()
        .flat_map(|k| [k.clone(), k.iter().map(|x| -x).collect()])
        .collect()
}

/// A vertex `u_i = ω_i / p_i` of the set `F_G`.
#[derive(Clone, Debug, PartialEq)]
pub struct FgPoint {
    pub index: usize,
    pub denominator: i64,
    pub point: CellPoint,
}

/// `u_i = X_i/2` when `α_i` is short with `m_i = 1`, else `X_i`, where `β*(X_i) = 1`.
pub fn fg_set(rs: &RootSystem) -> Vec<FgPoint> {
    let n = rs.rank();
    let beta_norm = rs.norm(rs.beta());
    let lengths = rs.lengths();
    (0..n)
        .map(|i| {
            let m = rs.beta()[i];
            let mut p = (int(m * lengths[i]) / beta_norm).to_integer();
            if rs.is_short(i) && m == 1 {
                p *= 2;
            }
            let point = cell_membership(rs, &fundamental_fraction(n, i, p)).expect("in cell");
            FgPoint {
                index: i,
                denominator: p,
                point,
            }
        })
        .collect()
}

pub fn is_maximal(p: &FgPoint) -> bool {
    is_prime(p.denominator as u64)
}

/// Base of the root system of the centralizer of a finite set of cell points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetBase {
    pub vertices: Vec<Node>,
    pub all_walls: bool,
    /// Some points on the wall and some interior.
    pub mixed: bool,
}

pub fn base_of_set(us: &[CellPoint]) -> Result<SetBase> {
    let first = us.first().ok_or(Error::EmptyInput)?;
    let n = first.lie_type.rank();
    let all_walls = us.iter().all(|u| u.on_wall);
    let mixed = !all_walls && us.iter().any(|u| u.on_wall);
    let mut vertices: Vec<Node> = (0..n)
        .filter(|i| us.iter().all(|u| u.cosupport.contains(i)))
        .map(Node::Simple)
        .collect();
    if all_walls {
        vertices.push(Node::Affine);
    }
    Ok(SetBase {
        vertices,
        all_walls,
        mixed,
    })
}

/// Positive roots integral at every point of the set.
pub fn psi_of_set(rs: &RootSystem, us: &[CellPoint]) -> Vec<Vec<i64>> {
    rs.positive_roots()
        .iter()
        .filter(|k| {
            us.iter()
                .all(|u| coroot_value(rs, &u.lambda, k).unwrap().is_integer())
        })
        .cloned()
        .collect()
}

/// The average of the points: a single cell point whose support is the union of supports.
pub fn average_point(rs: &RootSystem, us: &[CellPoint]) -> Result<CellPoint> {
    let first = us.first().ok_or(Error::EmptyInput)?;
    let k = int(us.len() as i64);
    let lambda: Vec<Rational> = (0..first.lambda.len())
        .map(|i| us.iter().fold(Rational::zero(), |acc, u| acc + u.lambda[i]) / k)
        .collect();
    cell_membership(rs, &lambda)
}
