//! The simplicial complex on minimal circuit supports and its matching
//! numbers.
//!
//! Vertices are the inclusion-minimal sets among the positive and negative
//! supports of all circuits. A set of vertices is a face when the relative
//! interiors of the cones spanned by their columns intersect.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, Circuit};

pub const DEFAULT_MAX_FACE_CARD: usize = 8;

/// Largest number of faces a single component may have before the matching
/// search refuses to run.
pub const DEFAULT_MATCHING_FACE_CAP: usize = 4096;

/// A set of edge indices, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SupportSet(pub Vec<usize>);

impl SupportSet {
    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.0.iter().all(|i| other.0.binary_search(i).is_ok())
    }
}

/// Minimal elements among all positive and negative circuit supports.
pub fn c_min_from_circuits(circuits: &[Circuit]) -> Vec<SupportSet> {
    let all: BTreeSet<SupportSet> = circuits
        .iter()
        .flat_map(|c| [SupportSet(c.positive_support()), SupportSet(c.negative_support())])
        .collect();
    let all: Vec<SupportSet> = all.into_iter().collect();
    all.iter()
        .filter(|e| !all.iter().any(|f| f != *e && f.is_subset(e)))
        .cloned()
        .collect()
}

pub fn compute_c_min(g: &Graph, circuit_cap: usize) -> Result<Vec<SupportSet>> {
    let circuits = linalg::circuits(&g.incidence_columns(), circuit_cap)?;
    Ok(c_min_from_circuits(&circuits))
}

/// The complex, with faces sorted by (cardinality, vertex indices) and
/// connected components sorted by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaComplex {
    pub vertices: Vec<SupportSet>,
    pub faces: Vec<Vec<usize>>,
    pub components: Vec<Vec<usize>>,
}

pub fn build_delta(g: &Graph, max_face_card: usize) -> Result<DeltaComplex> {
    let circuits = linalg::circuits(&g.incidence_columns(), linalg::DEFAULT_CIRCUIT_EDGE_CAP)?;
    build_delta_from(g, &circuits, max_face_card)
}

/// Builds the complex level by level. A candidate face is only tested when
/// all of its facets are faces. Edges are decided both by the feasibility
/// test and by the circuit-pair rule; disagreement is an error.
pub fn build_delta_from(g: &Graph, circuits: &[Circuit], max_face_card: usize) -> Result<DeltaComplex> {
    let cols = g.incidence_columns();
    let vertices = c_min_from_circuits(circuits);
    let nv = vertices.len();
    let circuit_pairs: HashSet<(Vec<usize>, Vec<usize>)> = circuits
        .iter()
        .flat_map(|c| {
            let (p, q) = (c.positive_support(), c.negative_support());
            [(p.clone(), q.clone()), (q, p)]
        })
        .collect();
    let mut faces: Vec<Vec<usize>> = (0..nv).map(|i| vec![i]).collect();
    let mut level: Vec<Vec<usize>> = faces.clone();
    let mut card = 1;
    while !level.is_empty() {
        let known: HashSet<&Vec<usize>> = level.iter().collect();
        let mut next = Vec::new();
        for face in &level {
            for v in face.last().unwrap() + 1..nv {
                let mut cand = face.clone();
                cand.push(v);
                let facets_ok = (0..cand.len() - 1).all(|skip| {
                    let sub: Vec<usize> =
                        cand.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &x)| x).collect();
                    known.contains(&sub)
                });
                if !facets_ok {
                    continue;
                }
                let supports: Vec<Vec<usize>> = cand.iter().map(|&i| vertices[i].0.clone()).collect();
                let feasible = linalg::relint_intersection_feasible(&supports, &cols)?;
                if cand.len() == 2 {
                    let paired = circuit_pairs.contains(&(supports[0].clone(), supports[1].clone()));
                    if paired != feasible {
                        return Err(Error::Inconsistent(format!(
                            "edge rule and feasibility disagree on {:?}, {:?}",
                            supports[0], supports[1]
                        )));
                    }
                }
                if feasible {
                    next.push(cand);
                }
            }
        }
        card += 1;
        if !next.is_empty() && card > max_face_card {
            return Err(Error::CapExceeded { what: "face cardinality", size: card, cap: max_face_card });
        }
        faces.extend(next.iter().cloned());
        level = next;
    }
    let mut uf = UnionFind::<usize>::new(nv);
    for f in faces.iter().filter(|f| f.len() == 2) {
        uf.union(f[0], f[1]);
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; nv];
    for v in 0..nv {
        let r = uf.find(v);
        if slot[r] == usize::MAX {
            slot[r] = components.len();
            components.push(Vec::new());
        }
        components[slot[r]].push(v);
    }
    Ok(DeltaComplex { vertices, faces, components })
}

impl DeltaComplex {
    /// Dimension of the complex; `None` when it has no vertices.
    pub fn dim(&self) -> Option<usize> {
        self.faces.iter().map(|f| f.len() - 1).max()
    }

    pub fn is_face(&self, set: &[usize]) -> bool {
        let mut s = set.to_vec();
        s.sort_unstable();
        self.faces.contains(&s)
    }

    pub fn face_count(&self, dim: usize) -> usize {
        self.faces.iter().filter(|f| f.len() == dim + 1).count()
    }

    pub fn components(&self) -> Vec<SubComplex> {
        delta_components(self)
    }
}

/// A connected component; vertex indices refer to the parent complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubComplex {
    pub vertices: Vec<usize>,
    pub faces: Vec<Vec<usize>>,
}

impl SubComplex {
    pub fn dim(&self) -> Option<usize> {
        self.faces.iter().map(|f| f.len() - 1).max()
    }

    pub fn shape(&self) -> ComponentShape {
        classify_component(self)
    }
}

pub fn delta_components(d: &DeltaComplex) -> Vec<SubComplex> {
    let mut owner = vec![0; d.vertices.len()];
    for (c, vs) in d.components.iter().enumerate() {
        for &v in vs {
            owner[v] = c;
        }
    }
    let mut out: Vec<SubComplex> =
        d.components.iter().map(|vs| SubComplex { vertices: vs.clone(), faces: Vec::new() }).collect();
    for f in &d.faces {
        out[owner[f[0]]].faces.push(f.clone());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ComponentShape {
    Edge,
    TwoSimplex,
    Other,
}

impl fmt::Display for ComponentShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentShape::Edge => "edge",
            ComponentShape::TwoSimplex => "2-simplex",
            ComponentShape::Other => "other",
        })
    }
}

pub fn classify_component(c: &SubComplex) -> ComponentShape {
    let count = |k: usize| c.faces.iter().filter(|f| f.len() == k).count();
    let nv = c.vertices.len();
    if nv == 2 && count(2) == 1 && c.faces.len() == 3 {
        ComponentShape::Edge
    } else if nv == 3 && count(2) == 3 && count(3) == 1 && c.faces.len() == 7 {
        ComponentShape::TwoSimplex
    } else {
        ComponentShape::Other
    }
}

/// A set `J` of allowed face dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DimensionSet {
    /// All dimensions `0..=dim`.
    Omega,
    Dims(BTreeSet<usize>),
}

impl DimensionSet {
    pub fn dims(ds: &[usize]) -> Self {
        DimensionSet::Dims(ds.iter().copied().collect())
    }

    pub fn allows(&self, dim: usize) -> bool {
        match self {
            DimensionSet::Omega => true,
            DimensionSet::Dims(s) => s.contains(&dim),
        }
    }

    fn check(&self) -> Result<()> {
        match self {
            DimensionSet::Dims(s) if s.is_empty() => Err(Error::InvalidDimensionSet("J is empty".into())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for DimensionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionSet::Omega => f.write_str("omega"),
            DimensionSet::Dims(s) => {
                let parts: Vec<String> = s.iter().map(|d| d.to_string()).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

impl FromStr for DimensionSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("omega") {
            return Ok(DimensionSet::Omega);
        }
        let dims = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<BTreeSet<_>, _>>()
            .map_err(|_| Error::InvalidDimensionSet(format!("`{s}`")))?;
        let set = DimensionSet::Dims(dims);
        set.check()?;
        Ok(set)
    }
}

/// `δ_J` together with a witnessing maximal J-matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaValue {
    pub value: usize,
    /// Number of vertices covered by a maximal J-matching.
    pub coverage: usize,
    /// Faces of the witness, each sorted, grouped by component.
    pub witness: Vec<Vec<usize>>,
}

/// `δ_J` of the whole complex: the sum over connected components.
pub fn delta_value(d: &DeltaComplex, j: &DimensionSet) -> Result<DeltaValue> {
    delta_value_capped(d, j, DEFAULT_MATCHING_FACE_CAP)
}

pub fn delta_value_capped(d: &DeltaComplex, j: &DimensionSet, cap: usize) -> Result<DeltaValue> {
    j.check()?;
    let mut total = DeltaValue { value: 0, coverage: 0, witness: Vec::new() };
    for c in delta_components(d) {
        let part = component_delta(&c, j, cap)?;
        total.value += part.value;
        total.coverage += part.coverage;
        total.witness.extend(part.witness);
    }
    Ok(total)
}

#[derive(Clone)]
struct Best {
    coverage: usize,
    card: usize,
    witness: Vec<Vec<usize>>,
}

impl Best {
    fn beaten_by(&self, coverage: usize, card: usize, witness: &[Vec<usize>]) -> bool {
        (coverage, std::cmp::Reverse(card)) > (self.coverage, std::cmp::Reverse(self.card))
            || (coverage == self.coverage && card == self.card && witness < self.witness.as_slice())
    }
}

/// Exact two-phase search on one component: maximize the number of covered
/// vertices, then minimize the number of faces; ties go to the
/// lexicographically smallest sorted face list.
pub fn component_delta(c: &SubComplex, j: &DimensionSet, cap: usize) -> Result<DeltaValue> {
    j.check()?;
    if c.faces.len() > cap {
        return Err(Error::CapExceeded { what: "faces in a component", size: c.faces.len(), cap });
    }
    let nv = c.vertices.len();
    let local = |v: usize| c.vertices.binary_search(&v).unwrap();
    // Allowed faces grouped by their smallest local vertex.
    let mut by_min: Vec<Vec<Vec<usize>>> = vec![Vec::new(); nv];
    for f in &c.faces {
        if j.allows(f.len() - 1) {
            let lf: Vec<usize> = f.iter().map(|&v| local(v)).collect();
            by_min[lf[0]].push(lf);
        }
    }
    let mut best = Best { coverage: 0, card: 0, witness: Vec::new() };
    let mut used = vec![false; nv];
    let mut chosen = Vec::new();
    match_dfs(0, 0, &by_min, &mut used, &mut chosen, &mut best);
    let mut witness: Vec<Vec<usize>> =
        best.witness.iter().map(|f| f.iter().map(|&v| c.vertices[v]).collect()).collect();
    witness.sort();
    Ok(DeltaValue { value: best.card, coverage: best.coverage, witness })
}

fn match_dfs(
    pos: usize,
    covered: usize,
    by_min: &[Vec<Vec<usize>>],
    used: &mut [bool],
    chosen: &mut Vec<Vec<usize>>,
    best: &mut Best,
) {
    let nv = used.len();
    let mut pos = pos;
    while pos < nv && used[pos] {
        pos += 1;
    }
    if pos == nv {
        let mut w = chosen.clone();
        w.sort();
        if best.beaten_by(covered, chosen.len(), &w) {
            *best = Best { coverage: covered, card: chosen.len(), witness: w };
        }
        return;
    }
    let open = used[pos..].iter().filter(|&&u| !u).count();
    if covered + open < best.coverage
        || (covered + open == best.coverage && chosen.len() > best.card)
    {
        return;
    }
    for f in &by_min[pos] {
        if f.iter().all(|&v| !used[v]) {
            for &v in f {
                used[v] = true;
            }
            chosen.push(f.clone());
            match_dfs(pos + 1, covered + f.len(), by_min, used, chosen, best);
            chosen.pop();
            for &v in f {
                used[v] = false;
            }
        }
    }
    // Leave `pos` uncovered.
    used[pos] = true;
    match_dfs(pos + 1, covered, by_min, used, chosen, best);
    used[pos] = false;
}

/// JSON dump of a complex: supports use 1-based edge indices, faces and
/// components use 0-based vertex positions.
#[derive(Debug, Clone, Serialize)]
pub struct ComplexDump {
    pub schema: u32,
    pub vertices: Vec<Vec<usize>>,
    pub faces: Vec<Vec<usize>>,
    pub components: Vec<ComponentDump>,
    pub delta: Vec<DeltaEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentDump {
    pub vertices: Vec<usize>,
    pub shape: ComponentShape,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaEntry {
    pub j: String,
    pub value: usize,
    pub coverage: usize,
    pub witness: Vec<Vec<usize>>,
}

pub fn dump(d: &DeltaComplex, js: &[DimensionSet]) -> Result<ComplexDump> {
    let mut delta = Vec::new();
    for j in js {
        let v = delta_value(d, j)?;
        delta.push(DeltaEntry { j: j.to_string(), value: v.value, coverage: v.coverage, witness: v.witness });
    }
    Ok(ComplexDump {
        schema: 1,
        vertices: d.vertices.iter().map(|s| s.0.iter().map(|i| i + 1).collect()).collect(),
        faces: d.faces.clone(),
        components: delta_components(d)
            .into_iter()
            .map(|c| ComponentDump { shape: c.shape(), vertices: c.vertices })
            .collect(),
        delta,
    })
}
