//! Reports and command implementations.

use std::fmt::Write as _;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::deficiency::deficiency_simple;
use crate::error::{Error, Result};
use crate::kernel::{full_centralizer, CentralizerResult};
use crate::linalg::{determinant, int, Rational};
use crate::local_type::{
    average_point, base_of_set, fg_set, is_maximal, local_type_of_base, psi_of_set,
    root_subsystem, superscript, symmetrize, Branch, FgPoint, LocalType,
};
use crate::root_data::{
    center_structure, group_of_type, minimal_weights, LieType, Node, RootSystem,
};
use crate::weyl_cell::{cell_membership, fundamental_fraction, CellPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub group: String,
    /// Ambient vertex labels in the factor's own numbering; `0` is the affine vertex.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorReport {
    /// Per factor, the 1-based index of its minimal weight, or `null` for zero.
    pub components: Vec<Option<usize>>,
    /// The radical term in fundamental-weight coordinates of the ambient group.
    pub radical: Vec<String>,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub order: u64,
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<GeneratorReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryReport {
    pub group: String,
    #[serde(rename = "type")]
    pub lie_type: String,
    pub u: Vec<String>,
    pub branch: Branch,
    pub beta_value: String,
    pub factors: Vec<FactorReport>,
    pub radical_rank: usize,
    pub kernel: KernelReport,
    pub maximal: Option<bool>,
}

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn factor_reports(lt: &LocalType) -> Vec<FactorReport> {
    lt.components
        .iter()
        .map(|c| FactorReport {
            lie_type: c.lie_type.to_string(),
            group: c.group().to_string(),
            vertices: c.vertices.iter().map(|v| v.label()).collect(),
        })
        .collect()
}

impl QueryReport {
    pub fn new(rs: &RootSystem, result: &CentralizerResult, maximal: Option<bool>) -> Self {
        let generators = result
            .kernel
            .generators
            .iter()
            .map(|g| GeneratorReport {
                components: g.theta.iter().map(|w| w.map(|i| i + 1)).collect(),
                radical: strings(&result.radical_weights(rs, g)),
                order: g.order,
            })
            .collect();
        QueryReport {
            group: rs.group().to_string(),
            lie_type: rs.lie_type().to_string(),
            u: strings(&result.point.lambda),
            branch: result.local_type.branch,
            beta_value: result.point.beta_value.to_string(),
            factors: factor_reports(&result.local_type),
            radical_rank: result.local_type.radical_rank,
            kernel: KernelReport {
                order: result.kernel.order,
                invariant_factors: result.kernel.invariant_factors.clone(),
                generators,
            },
            maximal,
        }
    }

    pub fn local_type(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|f| f.group.clone()).collect();
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

    pub fn kernel_name(&self) -> String {
        if self.kernel.invariant_factors.is_empty() {
            "{0}".into()
        } else {
            self.kernel
                .invariant_factors
                .iter()
                .map(|d| format!("Z{d}"))
                .collect::<Vec<_>>()
                .join("⊕")
        }
    }

    pub fn centralizer(&self) -> String {
        if self.kernel.order == 1 {
            self.local_type()
        } else {
            format!("{}/{}", quotient_base(&self.local_type()), self.kernel_name())
        }
    }

    pub fn generator_notation(&self, g: &GeneratorReport) -> String {
        let mut terms: Vec<String> = g
            .components
            .iter()
            .enumerate()
            .filter_map(|(c, w)| w.map(|a| format!("exp{}(ω{a}{})", c + 1, superscript(c + 1))))
            .collect();
        let radical: Vec<Rational> = g.radical.iter().map(|s| s.parse().unwrap()).collect();
        if radical.iter().any(|x| *x != int(0)) {
            terms.push(format!("exp{}({})", g.components.len() + 1, weight_sum(&radical)));
        }
        if terms.is_empty() {
            "e".into()
        } else {
            terms.join("×")
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group        {} ({})", self.group, self.lie_type);
        let _ = writeln!(out, "u            {}", self.u.join(","));
        let _ = writeln!(out, "branch       {} (β*(u) = {})", self.branch, self.beta_value);
        for f in &self.factors {
            let vs: Vec<String> = f.vertices.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "factor       {} on vertices {}", f.group, vs.join(","));
        }
        let _ = writeln!(out, "radical rank {}", self.radical_rank);
        let _ = writeln!(out, "kernel       {}", self.kernel_name());
        for g in &self.kernel.generators {
            let _ = writeln!(
                out,
                "generator    {} of order {}",
                self.generator_notation(g),
                g.order
            );
        }
        if let Some(m) = self.maximal {
            let _ = writeln!(out, "maximal      {}", if m { "yes" } else { "no" });
        }
        let _ = writeln!(out, "centralizer  {}", self.centralizer());
        out
    }
}

/// Parenthesizes a product so it can be divided by a kernel.
pub fn quotient_base(local_type: &str) -> String {
    if local_type.contains('×') {
        format!("({local_type})")
    } else {
        local_type.to_string()
    }
}

/// `-4/3ω7+1/2ω1` style sum over fundamental weights.
pub fn weight_sum(coeffs: &[Rational]) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if *c == int(0) {
            continue;
        }
        let sign = if *c < int(0) { "-" } else if s.is_empty() { "" } else { "+" };
        let a = c.abs();
        let coef = if a == int(1) { String::new() } else { a.to_string() };
        let _ = write!(s, "{sign}{coef}ω{}", i + 1);
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

pub fn cmd_centralizer(rs: &RootSystem, lambda: &[Rational]) -> Result<QueryReport> {
    let result = full_centralizer(rs, lambda)?;
    Ok(QueryReport::new(rs, &result, None))
}

/// A row of the maximal-rank table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalRow {
    pub index: usize,
    pub denominator: i64,
    pub report: QueryReport,
}

pub fn cmd_maximal(rs: &RootSystem) -> Result<Vec<MaximalRow>> {
    fg_set(rs)
        .into_iter()
        .map(|p: FgPoint| {
            let result = full_centralizer(rs, &p.point.lambda)?;
            Ok(MaximalRow {
                index: p.index + 1,
                denominator: p.denominator,
                report: QueryReport::new(rs, &result, Some(is_maximal(&p))),
            })
        })
        .collect()
}

/// The parabolic representative `u = u_i / 2` for 1-based `i`.
pub fn parabolic_point(rs: &RootSystem, i: usize) -> Result<Vec<Rational>> {
    let n = rs.rank();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    let p = fg_set(rs)[i - 1].denominator;
    Ok(fundamental_fraction(n, i - 1, 2 * p))
}

pub fn cmd_parabolic(rs: &RootSystem, i: usize) -> Result<QueryReport> {
    cmd_centralizer(rs, &parabolic_point(rs, i)?)
}

pub fn maximal_markdown(rs: &RootSystem, rows: &[MaximalRow]) -> String {
    let mut out = format!("## {}\n\n", rs.group());
    out.push_str("| u | local type | ker π | generators | maximal |\n|---|---|---|---|---|\n");
    for row in rows {
        let r = &row.report;
        let _ = writeln!(
            out,
            "| ω{}/{} | {} | {} | {} | {} |",
            row.index,
            row.denominator,
            r.local_type(),
            r.kernel_name(),
            generator_list(r),
            if r.maximal == Some(true) { "yes" } else { "no" }
        );
    }
    out
}

pub fn parabolic_markdown(rs: &RootSystem, reports: &[QueryReport]) -> String {
    let mut out = format!("## {}\n\n", rs.group());
    out.push_str("| I_u | u | local type | ker π | generators |\n|---|---|---|---|---|\n");
    for (i, r) in reports.iter().enumerate() {
        let _ = writeln!(
            out,
            "| {{{}}} | {} | {} | {} | {} |",
            i + 1,
            r.u.join(","),
            r.local_type(),
            r.kernel_name(),
            generator_list(r)
        );
    }
    out
}

fn generator_list(r: &QueryReport) -> String {
    if r.kernel.generators.is_empty() {
        "-".into()
    } else {
        r.kernel
            .generators
            .iter()
            .map(|g| r.generator_notation(g))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Centralizer of a finite set of cell points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetReport {
    pub group: String,
    pub points: Vec<Vec<String>>,
    /// Base vertex labels, `0` for `-β`.
    pub base: Vec<usize>,
    pub all_walls: bool,
    pub mixed: bool,
    pub factors: Vec<FactorReport>,
    pub radical_rank: usize,
    /// The base generates exactly the roots integral at every point.
    pub roots_agree: bool,
    pub identity_component: Option<QueryReport>,
}

pub fn cmd_centralizer_set(rs: &RootSystem, lambdas: &[Vec<Rational>]) -> Result<SetReport> {
    let us: Vec<CellPoint> = lambdas
        .iter()
        .map(|l| cell_membership(rs, l))
        .collect::<Result<_>>()?;
    let base = base_of_set(&us)?;
    let branch = if base.all_walls { Branch::Wall } else { Branch::Interior };
    let lt = local_type_of_base(rs, base.vertices.clone(), branch)?;
    let roots_agree = root_subsystem(rs, &base.vertices) == symmetrize(&psi_of_set(rs, &us));
    let avg = average_point(rs, &us)?;
    let identity_component = if avg.central {
        None
    } else {
        let result = full_centralizer(rs, &avg.lambda)?;
        let mut same = result.local_type.base_vertices.clone();
        let mut ours = base.vertices.clone();
        same.sort();
        ours.sort();
        (same == ours).then(|| QueryReport::new(rs, &result, None))
    };
    Ok(SetReport {
        group: rs.group().to_string(),
        points: us.iter().map(|u| strings(&u.lambda)).collect(),
        base: base.vertices.iter().map(|v| v.label()).collect(),
        all_walls: base.all_walls,
        mixed: base.mixed,
        factors: factor_reports(&lt),
        radical_rank: lt.radical_rank,
        roots_agree,
        identity_component,
    })
}

impl SetReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group        {}", self.group);
        for p in &self.points {
            let _ = writeln!(out, "point        {}", p.join(","));
        }
        let base: Vec<String> = self
            .base
            .iter()
            .map(|&l| Node::from_label(l).to_string())
            .collect();
        let _ = writeln!(out, "base         {{{}}}", base.join(", "));
        let _ = writeln!(
            out,
            "branch       {}",
            if self.all_walls {
                "all points on the wall"
            } else if self.mixed {
                "mixed wall and interior points"
            } else {
                "interior"
            }
        );
        let groups: Vec<String> = self.factors.iter().map(|f| f.group.clone()).collect();
        let semisimple = if groups.is_empty() { "{e}".to_string() } else { groups.join("×") };
        let _ = writeln!(out, "semisimple   {semisimple}");
        let _ = writeln!(out, "radical rank {}", self.radical_rank);
        let _ = writeln!(out, "roots agree  {}", if self.roots_agree { "yes" } else { "no" });
        if let Some(r) = &self.identity_component {
            let _ = writeln!(out, "identity     {}", r.centralizer());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Deficiency,
    MinimalWeights,
    Centers,
}

/// Types selected by a type name, a group name, a family letter, `exceptional`, or nothing
/// (every type up to rank 8).
pub fn select_types(selector: Option<&str>) -> Result<Vec<LieType>> {
    let all = LieType::all_up_to_rank(8);
    match selector {
        None => Ok(all),
        Some("exceptional") => Ok(LieType::exceptional()),
        Some(s) if s.len() == 1 => {
            let picked: Vec<LieType> = all
                .into_iter()
                .filter(|t| t.family().letter().to_string() == s.to_uppercase())
                .collect();
            if picked.is_empty() {
                Err(Error::InvalidType(s.into()))
            } else {
                Ok(picked)
            }
        }
        Some(s) => Ok(vec![s.parse()?]),
    }
}

fn weight_set(ws: &[usize]) -> String {
    let names: Vec<String> = ws.iter().map(|i| format!("ω{}", i + 1)).collect();
    format!("{{{}}}", names.join(", "))
}

pub fn cmd_tables(kind: TableKind, types: &[LieType]) -> String {
    let mut out = String::new();
    match kind {
        TableKind::Deficiency => {
            out.push_str("| type | group | Π_G | δ on Π_G ⊔ {0} |\n|---|---|---|---|\n");
            for &t in types {
                let pi = minimal_weights(t);
                let mut ds: Vec<String> = pi
                    .iter()
                    .map(|&i| deficiency_simple(t, Some(i)).unwrap().to_string())
                    .collect();
                ds.push("1".into());
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    t,
                    group_of_type(t),
                    weight_set(&pi),
                    ds.join(", ")
                );
            }
        }
        TableKind::MinimalWeights => {
            out.push_str("| type | group | Π_G |\n|---|---|---|\n");
            for &t in types {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} |",
                    t,
                    group_of_type(t),
                    weight_set(&minimal_weights(t))
                );
            }
        }
        TableKind::Centers => {
            out.push_str("| type | group | Z(G) | det A |\n|---|---|---|---|\n");
            for &t in types {
                let z = center_structure(t);
                let name = if z.is_empty() {
                    "{e}".to_string()
                } else {
                    z.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join("⊕")
                };
                let det = determinant(&crate::root_data::cartan_matrix(t));
                let _ = writeln!(out, "| {} | {} | {} | {} |", t, group_of_type(t), name, det);
            }
        }
    }
    out
}

/// Graphviz text for the Dynkin diagram, or for the diagram seen from `u`: the extended
/// diagram on the wall, with the support of `u` drawn as deleted.
pub fn cmd_dot(rs: &RootSystem, u: Option<&CellPoint>) -> String {
    let n = rs.rank();
    let mut nodes: Vec<Node> = (0..n).map(Node::Simple).collect();
    if u.is_some_and(|u| u.on_wall && !u.central) {
        nodes.insert(0, Node::Affine);
    }
    let index = |v: Node| match v {
        Node::Simple(i) => i,
        Node::Affine => n,
    };
    let ext = rs.extended_cartan();
    let mut out = format!("graph \"{}\" {{\n  node [shape=circle];\n", rs.group());
    for &v in &nodes {
        let deleted = matches!((v, u), (Node::Simple(i), Some(u)) if u.support.contains(&i));
        let style = if deleted {
            ", style=dashed, color=gray"
        } else {
            ""
        };
        let _ = writeln!(out, "  n{} [label=\"{}\"{}];", v.label(), node_name(v), style);
    }
    for (a, &x) in nodes.iter().enumerate() {
        for &y in &nodes[a + 1..] {
            let (i, j) = (index(x), index(y));
            let (aij, aji) = (ext[i][j], ext[j][i]);
            if aij == 0 {
                continue;
            }
            let m = aij * aji;
            let attrs = if m == 1 {
                String::new()
            } else if aij.abs() > 1 {
                format!(" [label=\"{m}\", dir=forward]")
            } else {
                format!(" [label=\"{m}\", dir=back]")
            };
            let _ = writeln!(out, "  n{} -- n{}{};", x.label(), y.label(), attrs);
        }
    }
    out.push_str("}\n");
    out
}

fn node_name(v: Node) -> String {
    match v {
        Node::Simple(i) => format!("α{}", i + 1),
        Node::Affine => "-β".into(),
    }
}
