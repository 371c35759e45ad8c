//! Fixture parsing and the labelling search shared by the table tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lie_centralizer::catalog::{cmd_maximal, parabolic_point};
use lie_centralizer::kernel::{kernel_element_order, CentralizerResult, EmbeddingData};
use lie_centralizer::linalg::{is_integral, Rational};
use lie_centralizer::root_data::{cartan_matrix, DiagramComponent};
use lie_centralizer::weyl_cell::{convert_to_root_basis, convert_to_weight_basis};
use lie_centralizer::{full_centralizer, LieType, LocalType, RootSystem};

pub const MAXIMAL: &str = include_str!("../fixtures/maximal.txt");
pub const PARABOLIC: &str = include_str!("../fixtures/parabolic.txt");
pub const CONGRUENCES: &str = include_str!("../fixtures/congruences.txt");

pub fn parse_rational(s: &str) -> Rational {
    s.parse().unwrap_or_else(|_| panic!("bad rational {s}"))
}

/// `coef@k` terms as a dense vector of length `n`.
pub fn parse_terms(s: &str, n: usize) -> Vec<Rational> {
    let mut v = vec![Rational::from(0); n];
    for term in s.split_whitespace().filter(|t| *t != "-") {
        let (c, k) = term.split_once('@').expect("coef@index");
        let k: usize = k.parse().unwrap();
        v[k - 1] += parse_rational(c);
    }
    v
}

/// `c.a` with both indices 1-based.
pub fn parse_slot(s: &str) -> (usize, usize) {
    let (c, a) = s.split_once('.').expect("factor.weight");
    (c.parse().unwrap(), a.parse().unwrap())
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub group: String,
    pub index: usize,
    pub denominator: Option<i64>,
    pub factors: Vec<String>,
    pub radical_rank: usize,
    pub invariant_factors: Vec<u64>,
    pub generator: Vec<(usize, usize)>,
    pub radical: String,
}

pub fn parse_table(text: &str) -> Vec<TableRow> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split(';').map(str::trim).collect();
            let (index, denominator) = match f[1].split_once('/') {
                Some((i, p)) => (i.parse().unwrap(), Some(p.parse().unwrap())),
                None => (f[1].parse().unwrap(), None),
            };
            let list = |s: &str| -> Vec<String> {
                s.split_whitespace().filter(|t| *t != "-").map(String::from).collect()
            };
            TableRow {
                group: f[0].to_string(),
                index,
                denominator,
                factors: list(f[2]),
                radical_rank: f[3].parse().unwrap(),
                invariant_factors: list(f[4]).iter().map(|x| x.parse().unwrap()).collect(),
                generator: list(f[5]).iter().map(|s| parse_slot(s)).collect(),
                radical: f[6].to_string(),
            }
        })
        .collect()
}

impl TableRow {
    pub fn kernel_order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    EqOmega,
    EqAlpha,
    ModOmega,
}

#[derive(Clone, Debug)]
pub struct Display {
    pub kind: Kind,
    pub slot: (usize, usize),
    pub value: String,
    pub line: String,
}

#[derive(Clone, Debug)]
pub struct Block {
    pub group: String,
    pub maximal: bool,
    pub index: usize,
    pub factors: Vec<String>,
    pub displays: Vec<Display>,
}

pub fn parse_congruences(text: &str) -> Vec<Block> {
    let mut blocks: Vec<Block> = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("block ") {
            let (head, factors) = rest.split_once(';').unwrap();
            let head: Vec<&str> = head.split_whitespace().collect();
            blocks.push(Block {
                group: head[0].to_string(),
                maximal: head[1] == "maximal",
                index: head[2].parse().unwrap(),
                factors: factors.split_whitespace().map(String::from).collect(),
                displays: vec![],
            });
            continue;
        }
        let (lhs, value) = line.split_once('=').unwrap();
        let lhs: Vec<&str> = lhs.split_whitespace().collect();
        let kind = match lhs[0] {
            "eq-omega" => Kind::EqOmega,
            "eq-alpha" => Kind::EqAlpha,
            "mod-omega" => Kind::ModOmega,
            other => panic!("unknown display kind {other}"),
        };
        blocks.last_mut().unwrap().displays.push(Display {
            kind,
            slot: parse_slot(lhs[1]),
            value: value.trim().to_string(),
            line: line.to_string(),
        });
    }
    blocks
}

/// Evaluation point of a table row: `u_i` for the maximal table, `u_i/2` for the parabolic one.
pub fn row_point(rs: &RootSystem, maximal: bool, index: usize) -> Vec<Rational> {
    if maximal {
        let rows = cmd_maximal(rs).unwrap();
        rows[index - 1]
            .report
            .u
            .iter()
            .map(|s| parse_rational(s))
            .collect()
    } else {
        parabolic_point(rs, index).unwrap()
    }
}

pub fn row_result(group: &str, maximal: bool, index: usize) -> (RootSystem, CentralizerResult) {
    let rs = RootSystem::new(group.parse::<LieType>().unwrap());
    let point = row_point(&rs, maximal, index);
    let result = full_centralizer(&rs, &point).unwrap();
    (rs, result)
}

/// Vertex permutations `σ` of a Cartan matrix with `A[σi][σj] = A[i][j]`.
pub fn diagram_automorphisms(t: LieType) -> Vec<Vec<usize>> {
    fn extend(a: &[Vec<i64>], partial: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = a.len();
        let i = partial.len();
        if i == n {
            out.push(partial.clone());
            return;
        }
        for j in 0..n {
            if used[j] || a[i][i] != a[j][j] {
                continue;
            }
            if (0..i).all(|k| a[k][i] == a[partial[k]][j] && a[i][k] == a[j][partial[k]]) {
                used[j] = true;
                partial.push(j);
                extend(a, partial, used, out);
                partial.pop();
                used[j] = false;
            }
        }
    }
    let a = cartan_matrix(t);
    let mut out = Vec::new();
    extend(&a, &mut Vec::new(), &mut vec![false; a.len()], &mut out);
    out
}

/// Candidate readings of a factor's weight numbering: each entry maps the printed index
/// (0-based) to our canonical index.
pub fn weight_readings(c: &DiagramComponent) -> Vec<Vec<usize>> {
    let mut out: BTreeSet<Vec<usize>> = diagram_automorphisms(c.lie_type).into_iter().collect();
    let k = c.vertices.len();
    for affine_last in [false, true] {
        let key = |i: usize| {
            let l = c.vertices[i].label();
            if l == 0 && affine_last {
                usize::MAX
            } else {
                l
            }
        };
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&i| key(i));
        out.insert(order);
    }
    out.into_iter().collect()
}

/// A reading of the printed factor and weight numbering in terms of ours.
#[derive(Clone, Debug)]
pub struct Labelling {
    /// `factor[c]` is our component for the printed factor `c`.
    pub factor: Vec<usize>,
    /// `weight[c][a]` is our canonical index for the printed weight `a` of factor `c`.
    pub weight: Vec<Vec<usize>>,
}

/// Every labelling that matches factor groups, or none when the group lists disagree.
pub fn labellings(lt: &LocalType, printed_factors: &[String]) -> Vec<Labelling> {
    let ours: Vec<String> = lt.components.iter().map(|c| c.group().to_string()).collect();
    let mut assignments: Vec<Vec<usize>> = vec![vec![]];
    for f in printed_factors {
        assignments = assignments
            .into_iter()
            .flat_map(|a| {
                (0..ours.len())
                    .filter(|j| ours[*j] == *f && !a.contains(j))
                    .map(|j| {
                        let mut a = a.clone();
                        a.push(j);
                        a
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    if printed_factors.len() != ours.len() {
        return vec![];
    }
    let readings: Vec<Vec<Vec<usize>>> = lt.components.iter().map(weight_readings).collect();
    let mut out = Vec::new();
    for factor in assignments {
        let mut weights: Vec<Vec<Vec<usize>>> = vec![vec![]];
        for &j in &factor {
            weights = weights
                .into_iter()
                .flat_map(|w| {
                    readings[j].iter().map(move |r| {
                        let mut w = w.clone();
                        w.push(r.clone());
                        w
                    })
                })
                .collect();
        }
        out.extend(weights.into_iter().map(|weight| Labelling {
            factor: factor.clone(),
            weight,
        }));
    }
    out
}

/// `h_*` of the printed weight `slot` under `lab`, in root coordinates.
pub fn image(emb: &EmbeddingData, lab: &Labelling, slot: (usize, usize)) -> Option<Vec<Rational>> {
    let c = *lab.factor.get(slot.0 - 1)?;
    let a = *lab.weight[slot.0 - 1].get(slot.1 - 1)?;
    Some(emb.weight_images[c][a].clone())
}

pub fn display_holds(rs: &RootSystem, emb: &EmbeddingData, lab: &Labelling, d: &Display) -> bool {
    let Some(h) = image(emb, lab, d.slot) else { return false };
    let n = rs.rank();
    let value = parse_terms(&d.value, n);
    match d.kind {
        Kind::EqOmega => convert_to_weight_basis(rs, &h) == value,
        Kind::EqAlpha => h == value,
        Kind::ModOmega => {
            let v = convert_to_root_basis(rs, &value);
            let diff: Vec<Rational> = h.iter().zip(&v).map(|(a, b)| *a - *b).collect();
            is_integral(&diff)
        }
    }
}

pub struct BlockAudit {
    pub name: String,
    pub held: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

/// Checks a block under the labelling that makes the most displays hold.
pub fn audit_block(b: &Block) -> BlockAudit {
    let kind = if b.maximal { "maximal" } else { "parabolic" };
    let name = format!("{} {} {}", b.group, kind, b.index);
    let (rs, result) = row_result(&b.group, b.maximal, b.index);
    let emb = result.embedding.as_ref().expect("non-central");
    let mut best: Option<(usize, Vec<String>)> = None;
    for lab in labellings(&result.local_type, &b.factors) {
        let failures: Vec<String> = b
            .displays
            .iter()
            .filter(|d| !display_holds(&rs, emb, &lab, d))
            .map(|d| d.line.clone())
            .collect();
        let held = b.displays.len() - failures.len();
        if best.as_ref().is_none_or(|(h, _)| held > *h) {
            best = Some((held, failures));
        }
    }
    let (held, failures) = best.unwrap_or((0, vec!["factor groups disagree".into()]));
    BlockAudit {
        name,
        held,
        total: b.displays.len(),
        failures,
    }
}

pub struct RowAudit {
    pub name: String,
    pub problems: Vec<String>,
}

fn multiset(xs: &[String]) -> Vec<String> {
    let mut v = xs.to_vec();
    v.sort();
    v
}

/// Compares a table row: factor multiset, radical rank, invariant factors, and the printed
/// generator as a kernel element of the stated order under some labelling.
pub fn audit_row(row: &TableRow, maximal: bool) -> RowAudit {
    let name = match row.denominator {
        Some(p) => format!("{} ω{}/{}", row.group, row.index, p),
        None => format!("{} {{{}}}", row.group, row.index),
    };
    let mut problems = Vec::new();
    let (rs, result) = row_result(&row.group, maximal, row.index);
    let lt = &result.local_type;
    if maximal {
        let rows = cmd_maximal(&rs).unwrap();
        let ours = rows[row.index - 1].denominator;
        if Some(ours) != row.denominator {
            problems.push(format!("denominator {ours}"));
        }
    }
    let ours: Vec<String> = lt.components.iter().map(|c| c.group().to_string()).collect();
    if multiset(&ours) != multiset(&row.factors) {
        problems.push(format!("factors {ours:?}"));
    }
    if lt.radical_rank != row.radical_rank {
        problems.push(format!("radical rank {}", lt.radical_rank));
    }
    if result.kernel.invariant_factors != row.invariant_factors {
        problems.push(format!("kernel {:?}", result.kernel.invariant_factors));
    }
    if !row.generator.is_empty() {
        let verified = result.embedding.as_ref().is_some_and(|emb| {
            let r = parse_terms(&row.radical, rs.rank());
            let gamma: Vec<Rational> = convert_to_root_basis(&rs, &r).into_iter().map(|x| -x).collect();
            labellings(lt, &row.factors).iter().any(|lab| {
                let mut theta = vec![None; lt.components.len()];
                for &(c, a) in &row.generator {
                    theta[lab.factor[c - 1]] = Some(lab.weight[c - 1][a - 1]);
                }
                kernel_element_order(lt, emb, &theta, &gamma) == Some(row.kernel_order())
            })
        });
        if !verified {
            problems.push("generator not a kernel element of the stated order".into());
        }
    }
    RowAudit { name, problems }
}
