//! Root data for the simple types: Cartan matrices, roots, weights, centers and
//! classification of Dynkin subdiagrams.
//!
//! Type labels follow the dual convention used throughout the crate: `A_{n-1}` is `SU(n)`,
//! `B_n` is `Sp(n)`, `C_n` is `Spin(2n+1)` and `D_n` is `Spin(2n)`. Vertices are numbered as
//! in Humphreys; indices are 0-based in code and 1-based in printed output.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abelian;
use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix, RatMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    /// Rejects low-rank aliases: `C2` (use `B2`) and `D3` (use `A3`).
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }

    /// Every valid type of rank at most `max_rank`, ordered by family then rank.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<LieType> {
        Family::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |r| LieType::new(f, r).ok()))
            .collect()
    }

    pub fn exceptional() -> Vec<LieType> {
        ["G2", "F4", "E6", "E7", "E8"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect()
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Accepts a type label (`E7`, `B3`) or a group name (`Sp(3)`, `Spin(10)`, `SU(4)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('(') {
            return s.parse::<GroupId>().map(|g| g.lie_type());
        }
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::Parse("empty type".into()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return s.parse::<GroupId>().map(|g| g.lie_type()),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad type label {s:?}")))?;
        LieType::new(family, rank)
    }
}

impl TryFrom<String> for LieType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LieType> for String {
    fn from(t: LieType) -> String {
        t.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GroupId {
    SU(usize),
    Sp(usize),
    Spin(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl GroupId {
    pub fn lie_type(self) -> LieType {
        let (family, rank) = match self {
            GroupId::SU(n) => (Family::A, n - 1),
            GroupId::Sp(n) => (Family::B, n),
            GroupId::Spin(m) if m % 2 == 1 => (Family::C, (m - 1) / 2),
            GroupId::Spin(m) => (Family::D, m / 2),
            GroupId::G2 => (Family::G, 2),
            GroupId::F4 => (Family::F, 4),
            GroupId::E6 => (Family::E, 6),
            GroupId::E7 => (Family::E, 7),
            GroupId::E8 => (Family::E, 8),
        };
        LieType { family, rank }
    }
}

pub fn group_of_type(t: LieType) -> GroupId {
    let n = t.rank;
    match t.family {
        Family::A => GroupId::SU(n + 1),
        Family::B => GroupId::Sp(n),
        Family::C => GroupId::Spin(2 * n + 1),
        Family::D => GroupId::Spin(2 * n),
        Family::E => match n {
            6 => GroupId::E6,
            7 => GroupId::E7,
            _ => GroupId::E8,
        },
        Family::F => GroupId::F4,
        Family::G => GroupId::G2,
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::SU(n) => write!(f, "SU({n})"),
            GroupId::Sp(n) => write!(f, "Sp({n})"),
            GroupId::Spin(m) => write!(f, "Spin({m})"),
            GroupId::G2 => f.write_str("G2"),
            GroupId::F4 => f.write_str("F4"),
            GroupId::E6 => f.write_str("E6"),
            GroupId::E7 => f.write_str("E7"),
            GroupId::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for GroupId {
    type Err = Error;

    /// Parses a group name and normalizes low-rank isomorphisms, so `Spin(5)` becomes `Sp(2)`
    /// and `Spin(6)` becomes `SU(4)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad group name {s:?}"));
        let t = match s {
            "G2" | "g2" => return Ok(GroupId::G2),
            "F4" | "f4" => return Ok(GroupId::F4),
            "E6" | "e6" => return Ok(GroupId::E6),
            "E7" | "e7" => return Ok(GroupId::E7),
            "E8" | "e8" => return Ok(GroupId::E8),
            _ => {
                let open = s.find('(').ok_or_else(bad)?;
                let arg: usize = s[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(bad)?
                    .trim()
                    .parse()
                    .map_err(|_| bad())?;
                match s[..open].trim() {
                    "SU" if arg >= 2 => LieType::new(Family::A, arg - 1)?,
                    "Sp" if arg == 1 => LieType::new(Family::A, 1)?,
                    "Sp" => LieType::new(Family::B, arg)?,
                    "Spin" => match arg {
                        3 => LieType::new(Family::A, 1)?,
                        5 => LieType::new(Family::B, 2)?,
                        6 => LieType::new(Family::A, 3)?,
                        m if m >= 7 && m % 2 == 1 => LieType::new(Family::C, (m - 1) / 2)?,
                        m if m >= 8 => LieType::new(Family::D, m / 2)?,
                        _ => return Err(Error::InvalidType(s.to_string())),
                    },
                    _ => return Err(bad()),
                }
            }
        };
        Ok(group_of_type(t))
    }
}

impl TryFrom<String> for GroupId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GroupId> for String {
    fn from(g: GroupId) -> String {
        g.to_string()
    }
}

/// Squared lengths `(α_i, α_i)` of the simple roots.
pub fn simple_lengths(t: LieType) -> Vec<i64> {
    let n = t.rank;
    match t.family {
        Family::A | Family::D | Family::E => vec![2; n],
        Family::B => (0..n).map(|i| if i + 1 == n { 1 } else { 2 }).collect(),
        Family::C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![2, 6],
    }
}

/// Edges of the Dynkin diagram (0-based, unordered).
pub fn diagram_edges(t: LieType) -> Vec<(usize, usize)> {
    let n = t.rank;
    let chain = |k: usize| (1..k).map(|i| (i - 1, i)).collect::<Vec<_>>();
    match t.family {
        Family::A | Family::B | Family::C | Family::F | Family::G => chain(n),
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            e
        }
        Family::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            e
        }
    }
}

/// Twice the inner products `(α_i, α_j)`, which keeps every entry integral.
fn doubled_gram(t: LieType) -> IntMatrix {
    let len = simple_lengths(t);
    let n = t.rank;
    let mut g = vec![vec![0; n]; n];
    for i in 0..n {
        g[i][i] = 2 * len[i];
    }
    for (i, j) in diagram_edges(t) {
        let x = -len[i].max(len[j]);
        g[i][j] = x;
        g[j][i] = x;
    }
    g
}

/// Inner products `(α_i, α_j)` of the simple roots.
pub fn gram_matrix(t: LieType) -> RatMatrix {
    halve(&doubled_gram(t))
}

fn halve(g: &[Vec<i64>]) -> RatMatrix {
    g.iter()
        .map(|row| row.iter().map(|&x| Rational::new(x, 2)).collect())
        .collect()
}

fn cartan_from_gram(g: &[Vec<i64>]) -> IntMatrix {
    g.iter()
        .map(|row| row.iter().enumerate().map(|(j, &x)| 2 * x / g[j][j]).collect())
        .collect()
}

/// `A_ij = 2(α_i, α_j)/(α_j, α_j)`.
pub fn cartan_matrix(t: LieType) -> IntMatrix {
    cartan_from_gram(&doubled_gram(t))
}

/// Row `i` is `ω_i` in the simple-root basis.
pub fn inverse_cartan(t: LieType) -> RatMatrix {
    linalg::invert(&linalg::to_rational(&cartan_matrix(t))).expect("Cartan matrices are invertible")
}

pub fn positive_roots(t: LieType) -> Vec<Vec<i64>> {
    RootSystem::new(t).positive_roots
}

pub fn highest_roots(t: LieType) -> (Vec<i64>, Vec<i64>) {
    let rs = RootSystem::new(t);
    (rs.beta, rs.gamma)
}

pub fn extended_cartan(t: LieType) -> IntMatrix {
    RootSystem::new(t).extended
}

/// Indices `i` (0-based) with `ω_i` minimal.
pub fn minimal_weights(t: LieType) -> Vec<usize> {
    let n = t.rank;
    match (t.family, n) {
        (Family::A, _) => (0..n).collect(),
        (Family::B, _) => vec![n - 1],
        (Family::C, _) => vec![0],
        (Family::D, _) => vec![0, n - 2, n - 1],
        (Family::E, 6) => vec![0, 5],
        (Family::E, 7) => vec![6],
        _ => vec![],
    }
}

/// Invariant factors (all > 1) of the center, read off the Smith form of the Cartan matrix.
pub fn center_structure(t: LieType) -> Vec<u64> {
    abelian::nontrivial(&linalg::smith_normal_form(&cartan_matrix(t)).diagonal)
}

/// Vertex of a Dynkin diagram or of its extension by `-β`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Simple(usize),
    Affine,
}

impl Node {
    /// 1-based label, with `0` for the affine vertex.
    pub fn label(self) -> usize {
        match self {
            Node::Simple(i) => i + 1,
            Node::Affine => 0,
        }
    }

    pub fn from_label(label: usize) -> Node {
        if label == 0 {
            Node::Affine
        } else {
            Node::Simple(label - 1)
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Simple(i) => write!(f, "{}", i + 1),
            Node::Affine => f.write_str("-β"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramComponent {
    pub lie_type: LieType,
    /// `vertices[c]` is the ambient vertex playing the role of canonical vertex `c`.
    pub vertices: Vec<Node>,
}

impl DiagramComponent {
    pub fn group(&self) -> GroupId {
        group_of_type(self.lie_type)
    }
}

/// Splits a principal submatrix into connected components and labels each with its type and
/// a vertex ordering under which it equals the canonical Cartan matrix.
pub fn classify_diagram(sub: &[Vec<i64>], labels: &[Node]) -> Result<Vec<DiagramComponent>> {
    let k = labels.len();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in 0..k {
                if !seen[w] && sub[v][w] != 0 {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_by_key(|&i| labels[i]);
        let local: IntMatrix = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| sub[i][j]).collect())
            .collect();
        let unclassifiable = || {
            let names: Vec<String> = comp.iter().map(|&i| labels[i].to_string()).collect();
            Error::UnclassifiableDiagram(names.join(","))
        };
        let t = candidate_type(&local).ok_or_else(unclassifiable)?;
        let order = match_vertices(&local, &cartan_matrix(t)).ok_or_else(unclassifiable)?;
        out.push(DiagramComponent {
            lie_type: t,
            vertices: order.iter().map(|&c| labels[comp[c]]).collect(),
        });
    }
    out.sort_by_key(|c| c.vertices.iter().min().copied());
    Ok(out)
}

fn candidate_type(a: &[Vec<i64>]) -> Option<LieType> {
    let k = a.len();
    let mut degree = vec![0usize; k];
    let mut edges = Vec::new();
    for i in 0..k {
        if a[i][i] != 2 {
            return None;
        }
        for j in i + 1..k {
            if a[i][j] != 0 {
                degree[i] += 1;
                degree[j] += 1;
                edges.push((i, j, a[i][j] * a[j][i]));
            }
        }
    }
    if edges.len() + 1 != k {
        return None;
    }
    let multiple: Vec<_> = edges.iter().filter(|e| e.2 > 1).collect();
    let family_rank = match multiple.as_slice() {
        [] => {
            let branch: Vec<usize> = (0..k).filter(|&v| degree[v] >= 3).collect();
            match branch.as_slice() {
                [] => (Family::A, k),
                [b] if degree[*b] == 3 => {
                    let mut arms: Vec<usize> = (0..k)
                        .filter(|&w| a[*b][w] != 0 && w != *b)
                        .map(|w| arm_length(a, *b, w))
                        .collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => (Family::D, k),
                        [1, 2, 2] => (Family::E, 6),
                        [1, 2, 3] => (Family::E, 7),
                        [1, 2, 4] => (Family::E, 8),
                        _ => return None,
                    }
                }
                _ => return None,
            }
        }
        [&(i, j, 3)] if k == 2 => {
            let _ = (i, j);
            (Family::G, 2)
        }
        [&(i, j, 2)] => {
            if k == 2 {
                (Family::B, 2)
            } else if k == 4 && degree[i] == 2 && degree[j] == 2 {
                (Family::F, 4)
            } else {
                let (leaf, inner) = if degree[i] == 1 { (i, j) } else { (j, i) };
                if degree[leaf] != 1 || degree.iter().any(|&d| d > 2) {
                    return None;
                }
                if a[inner][leaf] == -2 {
                    (Family::B, k)
                } else {
                    (Family::C, k)
                }
            }
        }
        _ => return None,
    };
    LieType::new(family_rank.0, family_rank.1).ok()
}

fn arm_length(a: &[Vec<i64>], from: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        let next: Vec<usize> = (0..a.len())
            .filter(|&w| w != cur && w != prev && a[cur][w] != 0)
            .collect();
        match next.as_slice() {
            [n] => {
                prev = cur;
                cur = *n;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Finds `order` with `a[order[x]][order[y]] == canon[x][y]`, trying ambient vertices in
/// ascending order so the first hit is the lexicographically least.
fn match_vertices(a: &[Vec<i64>], canon: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn go(a: &[Vec<i64>], canon: &[Vec<i64>], order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let c = order.len();
        if c == canon.len() {
            return true;
        }
        for v in 0..a.len() {
            if used[v] {
                continue;
            }
            let fits = order
                .iter()
                .enumerate()
                .all(|(d, &w)| a[v][w] == canon[c][d] && a[w][v] == canon[d][c]);
            if fits {
                used[v] = true;
                order.push(v);
                if go(a, canon, order, used) {
                    return true;
                }
                order.pop();
                used[v] = false;
            }
        }
        false
    }
    if a.len() != canon.len() {
        return None;
    }
    let mut order = Vec::with_capacity(a.len());
    let mut used = vec![false; a.len()];
    go(a, canon, &mut order, &mut used).then_some(order)
}

/// Complete root data of one simple type. Immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    lie_type: LieType,
    gram2: IntMatrix,
    cartan: IntMatrix,
    cartan_inv: RatMatrix,
    positive_roots: Vec<Vec<i64>>,
    beta: Vec<i64>,
    gamma: Vec<i64>,
    extended: IntMatrix,
}

impl RootSystem {
    pub fn new(t: LieType) -> Self {
        let gram = doubled_gram(t);
        let cartan = cartan_from_gram(&gram);
        let cartan_inv = linalg::invert(&linalg::to_rational(&cartan)).expect("invertible");
        let positive_roots = root_strings(&cartan);
        let norm = |k: &[i64]| quad(&gram, k, k);
        let short = 2 * *simple_lengths(t).iter().min().unwrap();
        let long = 2 * *simple_lengths(t).iter().max().unwrap();
        let top = |len: i64| {
            positive_roots
                .iter()
                .filter(|k| norm(k) == len)
                .max_by_key(|k| k.iter().sum::<i64>())
                .cloned()
                .unwrap()
        };
        let beta = top(short);
        let gamma = top(long);

        let n = t.rank;
        let mut nodes: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        nodes.push(beta.iter().map(|x| -x).collect());
        let extended = nodes
            .iter()
            .map(|x| nodes.iter().map(|y| 2 * quad(&gram, x, y) / quad(&gram, y, y)).collect())
            .collect();

        RootSystem {
            lie_type: t,
            gram2: gram,
            cartan,
            cartan_inv,
            positive_roots,
            beta,
            gamma,
            extended,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn group(&self) -> GroupId {
        group_of_type(self.lie_type)
    }

    pub fn gram(&self) -> RatMatrix {
        halve(&self.gram2)
    }

    /// Squared lengths of the simple roots.
    pub fn lengths(&self) -> Vec<i64> {
        (0..self.rank()).map(|i| self.gram2[i][i] / 2).collect()
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &RatMatrix {
        &self.cartan_inv
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Highest short root, as coefficients `m_i` over the simple roots.
    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    /// Highest long root.
    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    pub fn extended_cartan(&self) -> &IntMatrix {
        &self.extended
    }

    pub fn minimal_weights(&self) -> Vec<usize> {
        minimal_weights(self.lie_type)
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> Rational {
        Rational::new(quad(&self.gram2, x, y), 2)
    }

    pub fn norm(&self, x: &[i64]) -> Rational {
        self.inner(x, x)
    }

    pub fn is_short(&self, i: usize) -> bool {
        self.gram2[i][i] == quad(&self.gram2, &self.beta, &self.beta)
    }

    /// Root vector of a vertex of the extended diagram.
    pub fn node_vector(&self, node: Node) -> Vec<i64> {
        match node {
            Node::Simple(i) => (0..self.rank()).map(|j| i64::from(i == j)).collect(),
            Node::Affine => self.beta.iter().map(|x| -x).collect(),
        }
    }

    /// Principal submatrix of the extended Cartan matrix on the given vertices.
    pub fn submatrix(&self, nodes: &[Node]) -> IntMatrix {
        let idx = |v: Node| match v {
            Node::Simple(i) => i,
            Node::Affine => self.rank(),
        };
        nodes
            .iter()
            .map(|&x| nodes.iter().map(|&y| self.extended[idx(x)][idx(y)]).collect())
            .collect()
    }

    /// Closure of `generators` under the reflections they define.
    pub fn reflection_closure(&self, generators: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
        let mut set: BTreeSet<Vec<i64>> = generators.iter().cloned().collect();
        let mut queue: VecDeque<Vec<i64>> = generators.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            for g in generators {
                let c = 2 * quad(&self.gram2, &v, g) / quad(&self.gram2, g, g);
                if c == 0 {
                    continue;
                }
                let w: Vec<i64> = v.iter().zip(g).map(|(a, b)| a - c * b).collect();
                if set.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        set
    }

    /// Positive roots whose support lies in the given simple vertices.
    pub fn roots_supported_on(&self, vertices: &[usize]) -> Vec<Vec<i64>> {
        self.positive_roots
            .iter()
            .filter(|k| k.iter().enumerate().all(|(i, &x)| x == 0 || vertices.contains(&i)))
            .cloned()
            .collect()
    }
}

fn quad(g: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            s += xi * g[i][j] * yj;
        }
    }
    s
}

/// Positive roots by height, extending along simple-root strings.
fn root_strings(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| -> Vec<i64> { (0..n).map(|j| i64::from(i == j)).collect() };
    let mut found: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut roots = layer.clone();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for r in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = r.clone();
                loop {
                    down[i] -= 1;
                    if found.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| r[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = r.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().collect();
        found.extend(layer.iter().cloned());
        roots.extend(layer.iter().cloned());
    }
    roots
}
