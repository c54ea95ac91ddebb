//! Binomials of the toric ideal, G-degrees, fibers and minimal generation.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use petgraph::unionfind::UnionFind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeCycle, Graph};
use crate::linalg::{self, Circuit};

/// Exponent vector of a monomial in the edge variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(m: usize) -> Self {
        Monomial(vec![0; m])
    }

    pub fn variable(m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_support(m: usize, support: &[usize]) -> Self {
        let mut e = vec![0; m];
        for &i in support {
            e[i] += 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `x12*x34^2` style rendering; the constant monomial renders as `1`.
    pub fn format(&self, g: &Graph) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(g.edge_label(i)),
                _ => parts.push(format!("{}^{e}", g.edge_label(i))),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// The G-degree `M_G · u` of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GDegree(pub Vec<u32>);

impl GDegree {
    pub fn total(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// Parses comma-separated nonnegative integers, checking the length.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let v = text
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidDegree(format!("`{text}`: {e}")))?;
        if v.len() != n {
            return Err(Error::InvalidDegree(format!("expected {n} entries, got {}", v.len())));
        }
        Ok(GDegree(v))
    }
}

pub fn g_degree(g: &Graph, mon: &Monomial) -> GDegree {
    assert_eq!(mon.0.len(), g.m(), "exponent vector length must equal the edge count");
    let mut b = vec![0u32; g.n()];
    for (i, &e) in mon.0.iter().enumerate() {
        if e > 0 {
            let (u, v) = g.edge(i);
            b[u] += e;
            b[v] += e;
        }
    }
    GDegree(b)
}

/// A nonzero G-homogeneous binomial `x^plus - x^minus` with disjoint supports,
/// signed so that `plus` is lexicographically larger.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// Builds `x^a - x^b` (up to sign) after cancelling the common factor.
    /// Returns `Ok(None)` for the zero binomial.
    pub fn new(g: &Graph, a: Monomial, b: Monomial) -> Result<Option<Self>> {
        if g_degree(g, &a) != g_degree(g, &b) {
            return Err(Error::Hypothesis(format!(
                "{} - {} is not G-homogeneous",
                a.format(g),
                b.format(g)
            )));
        }
        let common = a.gcd(&b);
        let a = a.div(&common).unwrap();
        let b = b.div(&common).unwrap();
        if a == b {
            return Ok(None);
        }
        Ok(Some(if a > b { Binomial { plus: a, minus: b } } else { Binomial { plus: b, minus: a } }))
    }

    pub fn from_circuit(c: &Circuit) -> Self {
        let a = Monomial(c.positive_part());
        let b = Monomial(c.negative_part());
        if a > b {
            Binomial { plus: a, minus: b }
        } else {
            Binomial { plus: b, minus: a }
        }
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn degree(&self, g: &Graph) -> GDegree {
        g_degree(g, &self.plus)
    }

    /// Larger of the two monomial degrees.
    pub fn total_degree(&self) -> usize {
        self.plus.total_degree().max(self.minus.total_degree())
    }

    pub fn is_homogeneous(&self, g: &Graph) -> bool {
        g_degree(g, &self.plus) == g_degree(g, &self.minus)
    }

    pub fn format(&self, g: &Graph) -> String {
        format!("{} - {}", self.plus.format(g), self.minus.format(g))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::default();
        p.add_term(BigRational::one(), self.plus.clone());
        p.add_term(-BigRational::one(), self.minus.clone());
        p
    }
}

/// The alternating-product binomial of an even closed walk given by edge
/// indices.
pub fn binomial_from_walk(g: &Graph, walk: &[usize]) -> Result<Binomial> {
    if walk.is_empty() || walk.len() % 2 == 1 {
        return Err(Error::InvalidWalk(format!("length {} is not even and positive", walk.len())));
    }
    if let Some(&bad) = walk.iter().find(|&&e| e >= g.m()) {
        return Err(Error::EdgeOutOfRange { index: bad + 1, m: g.m() });
    }
    let (a, b) = g.edge(walk[0]);
    let closes = |start: usize| {
        let mut v = start;
        for &e in walk {
            let (x, y) = g.edge(e);
            v = if v == x {
                y
            } else if v == y {
                x
            } else {
                return false;
            };
        }
        v == start
    };
    if !closes(a) && !closes(b) {
        return Err(Error::InvalidWalk("consecutive edges do not form a closed walk".into()));
    }
    let mut odd = Monomial::one(g.m());
    let mut even = Monomial::one(g.m());
    for (k, &e) in walk.iter().enumerate() {
        if k % 2 == 0 {
            odd.0[e] += 1;
        } else {
            even.0[e] += 1;
        }
    }
    Binomial::new(g, odd, even)?.ok_or(Error::DegenerateWalk)
}

/// A polynomial with exact rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn add_term(&mut self, coeff: BigRational, mon: Monomial) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mon).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }

    /// Parses sums of terms such as `x14*x26 - 2*x16^2*x24 + 1/2*x15`.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Polynomial::default();
        let mut pieces = Vec::new();
        let mut current = String::new();
        let mut depth = 0;
        for ch in compact.chars() {
            match ch {
                '{' => depth += 1,
                '}' => depth -= 1,
                '+' | '-' if depth == 0 && !current.is_empty() => {
                    pieces.push(std::mem::take(&mut current));
                }
                _ => {}
            }
            current.push(ch);
        }
        pieces.push(current);
        for piece in pieces {
            let (negative, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece.as_str()),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{text}`")));
            }
            let mut coeff = BigRational::one();
            let mut mon = Monomial::one(g.m());
            for factor in body.split('*') {
                if factor.starts_with('x') {
                    let (label, power) = match factor.rsplit_once('^') {
                        Some((l, p)) => (
                            l,
                            p.parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                        ),
                        None => (factor, 1),
                    };
                    let idx = g
                        .parse_edge_label(label)
                        .ok_or_else(|| Error::Parse(format!("unknown variable `{label}`")))?;
                    mon.0[idx] += power;
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(coeff, mon);
        }
        Ok(out)
    }

    pub fn format(&self, g: &Graph) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (mon, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                let _ = write!(s, " {sign} ");
            }
            let abs = c.abs();
            if abs.is_one() {
                s.push_str(&mon.format(g));
            } else if mon.is_one() {
                let _ = write!(s, "{abs}");
            } else {
                let _ = write!(s, "{abs}*{}", mon.format(g));
            }
        }
        s
    }
}

fn parse_rational(tok: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad coefficient `{tok}`"));
    match tok.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = b.parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(tok.parse().map_err(|_| bad())?)),
    }
}

/// True iff `p` lies in `I_G`: the coefficients of each G-degree class sum to
/// zero, since `φ` sends monomials of equal degree to the same monomial.
pub fn polynomial_in_ideal(g: &Graph, p: &Polynomial) -> bool {
    let mut by_degree: HashMap<GDegree, BigRational> = HashMap::new();
    for (mon, c) in p.terms() {
        *by_degree.entry(g_degree(g, mon)).or_insert_with(BigRational::zero) += c;
    }
    by_degree.values().all(Zero::is_zero)
}

/// The fiber `deg_G⁻¹(b)` with optional move graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub degree: GDegree,
    pub members: Vec<Monomial>,
    pub adjacency: Vec<(usize, usize)>,
    pub connected: Option<bool>,
}

/// All monomials of G-degree `b`, sorted lexicographically.
pub fn enumerate_fiber(g: &Graph, b: &GDegree) -> Result<Fiber> {
    if b.0.len() != g.n() {
        return Err(Error::InvalidDegree(format!("expected {} entries, got {}", g.n(), b.0.len())));
    }
    let m = g.m();
    // Vertices whose residual is final once edge `i` has been assigned.
    let mut closes_at: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut orphan = Vec::new();
    for v in 0..g.n() {
        match g.neighbors(v).iter().map(|&(_, e)| e).max() {
            Some(last) => closes_at[last].push(v),
            None => orphan.push(v),
        }
    }
    let mut members = Vec::new();
    if orphan.iter().all(|&v| b.0[v] == 0) && b.total().is_multiple_of(2) {
        let mut residual = b.0.clone();
        let mut exps = vec![0u32; m];
        fiber_dfs(g, 0, &closes_at, &mut residual, &mut exps, &mut members);
    }
    members.sort();
    Ok(Fiber { degree: b.clone(), members, adjacency: Vec::new(), connected: None })
}

fn fiber_dfs(
    g: &Graph,
    i: usize,
    closes_at: &[Vec<usize>],
    residual: &mut [u32],
    exps: &mut [u32],
    out: &mut Vec<Monomial>,
) {
    if i == exps.len() {
        out.push(Monomial(exps.to_vec()));
        return;
    }
    let (u, v) = g.edge(i);
    let cap = residual[u].min(residual[v]);
    for k in 0..=cap {
        residual[u] -= k;
        residual[v] -= k;
        exps[i] = k;
        if closes_at[i].iter().all(|&w| residual[w] == 0) {
            fiber_dfs(g, i + 1, closes_at, residual, exps, out);
        }
        residual[u] += k;
        residual[v] += k;
    }
    exps[i] = 0;
}

/// Adds the edges of `S(b)_F`: `{x^u, x^v}` whenever `x^u - x^v` is a
/// monomial multiple of a binomial in `moves`. Sets the connectivity flag.
pub fn fiber_graph(mut fiber: Fiber, moves: &[Binomial]) -> Fiber {
    let (adjacency, components) = move_components(&fiber.members, moves);
    fiber.adjacency = adjacency;
    fiber.connected = Some(components.iter().max().map_or(0, |&c| c + 1) <= 1);
    fiber
}

/// Move-graph edges and a component label per member; labels are numbered in
/// order of each component's smallest member.
fn move_components(members: &[Monomial], moves: &[Binomial]) -> (Vec<(usize, usize)>, Vec<usize>) {
    let index: HashMap<&Monomial, usize> = members.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut uf = UnionFind::<usize>::new(members.len());
    let mut adjacency = Vec::new();
    for (i, u) in members.iter().enumerate() {
        for f in moves {
            for (from, to) in [(&f.plus, &f.minus), (&f.minus, &f.plus)] {
                if let Some(rest) = u.div(from) {
                    if let Some(&j) = index.get(&rest.mul(to)) {
                        if i < j {
                            adjacency.push((i, j));
                        }
                        uf.union(i, j);
                    }
                }
            }
        }
    }
    adjacency.sort_unstable();
    adjacency.dedup();
    let mut label_of_root = HashMap::new();
    let labels = (0..members.len())
        .map(|i| {
            let next = label_of_root.len();
            *label_of_root.entry(uf.find(i)).or_insert(next)
        })
        .collect();
    (adjacency, labels)
}

/// All fibers of total degree `2..=2·bound` realized by monomials of total
/// degree at most `bound`, keyed by (monomial degree, G-degree).
fn fibers_up_to(g: &Graph, bound: usize) -> BTreeMap<(usize, GDegree), Vec<Monomial>> {
    let m = g.m();
    let mut out: BTreeMap<(usize, GDegree), Vec<Monomial>> = BTreeMap::new();
    let mut exps = vec![0u32; m];
    for d in 1..=bound {
        let mut emit = |e: &[u32]| {
            let mon = Monomial(e.to_vec());
            out.entry((d, g_degree(g, &mon))).or_default().push(mon);
        };
        compositions(&mut exps, 0, d, &mut emit);
    }
    for members in out.values_mut() {
        members.sort();
    }
    out
}

fn compositions(exps: &mut [u32], i: usize, left: usize, emit: &mut impl FnMut(&[u32])) {
    if i + 1 == exps.len() {
        exps[i] = left as u32;
        emit(exps);
        exps[i] = 0;
        return;
    }
    for k in 0..=left {
        exps[i] = k as u32;
        compositions(exps, i + 1, left - k, emit);
    }
    exps[i] = 0;
}

/// Minimal generators of the monomial ideal `N_G` among monomials of total
/// degree at most `bound`.
pub fn indispensable_monomials(g: &Graph, bound: usize) -> Vec<Monomial> {
    if g.m() == 0 {
        return Vec::new();
    }
    let mut kept: Vec<Monomial> = Vec::new();
    for members in fibers_up_to(g, bound).values() {
        if members.len() < 2 {
            continue;
        }
        for u in members {
            if !kept.iter().any(|k| k.divides(u)) {
                kept.push(u.clone());
            }
        }
    }
    kept.sort();
    kept
}

/// Settings for [`minimal_generating_set`].
#[derive(Debug, Clone)]
pub struct GeneratorOptions {
    /// Largest monomial degree processed; derived from the cycle structure
    /// when absent.
    pub degree_bound: Option<usize>,
    /// Bound passed to cycle enumeration (required above 12 vertices).
    pub max_cycle_len: Option<usize>,
    pub circuit_cap: usize,
}

impl Default for GeneratorOptions {
    fn default() -> Self {
        GeneratorOptions { degree_bound: None, max_cycle_len: None, circuit_cap: linalg::DEFAULT_CIRCUIT_EDGE_CAP }
    }
}

impl GeneratorOptions {
    pub fn with_bound(bound: usize) -> Self {
        GeneratorOptions { degree_bound: Some(bound), ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub binomial: Binomial,
    pub indispensable: bool,
}

/// A minimal binomial generating set, relative to a degree bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratingSet {
    pub generators: Vec<Generator>,
    pub degree_bound: usize,
    /// False only when the bound is certified sufficient (bipartite graphs
    /// with a complete cycle list).
    pub bound_relative: bool,
    pub fibers_processed: usize,
}

impl GeneratingSet {
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    pub fn binomials(&self) -> Vec<Binomial> {
        self.generators.iter().map(|g| g.binomial.clone()).collect()
    }

    pub fn indispensable(&self) -> Vec<Binomial> {
        self.generators.iter().filter(|g| g.indispensable).map(|g| g.binomial.clone()).collect()
    }

    pub fn indispensable_count(&self) -> usize {
        self.generators.iter().filter(|g| g.indispensable).count()
    }

    pub fn is_quadratic(&self) -> bool {
        self.generators.iter().all(|g| g.binomial.plus.total_degree() == 2 && g.binomial.minus.total_degree() == 2)
    }
}

/// Structural facts that fix the default degree bound.
#[derive(Debug, Clone)]
pub struct DegreeHints {
    pub bipartite: bool,
    /// Whether the even-cycle list is known to be complete.
    pub cycles_complete: bool,
    pub longest_even_cycle: usize,
    pub chordless_even_cycles: Vec<EdgeCycle>,
    /// Largest `|u+|` over the circuits, when they were enumerated.
    pub max_circuit_half_degree: Option<usize>,
}

impl DegreeHints {
    pub fn compute(g: &Graph, opts: &GeneratorOptions) -> Result<Self> {
        let bipartite = g.is_bipartite().is_some();
        let cycles = g.even_cycles(opts.max_cycle_len)?;
        let cycles_complete = opts.max_cycle_len.is_none_or(|l| l >= g.n());
        let longest_even_cycle = cycles.iter().map(EdgeCycle::len).max().unwrap_or(0);
        let mut chordless_even_cycles = Vec::new();
        for c in cycles {
            if !g.cycle_has_chord(&c)? {
                chordless_even_cycles.push(c);
            }
        }
        let max_circuit_half_degree = if !bipartite && g.m() <= opts.circuit_cap {
            let cs = linalg::circuits(&g.incidence_columns(), opts.circuit_cap)?;
            Some(cs.iter().map(Circuit::half_degree).max().unwrap_or(0))
        } else {
            None
        };
        Ok(DegreeHints { bipartite, cycles_complete, longest_even_cycle, chordless_even_cycles, max_circuit_half_degree })
    }

    /// Largest degree a generator is known or suspected to need.
    pub fn candidate_degree(&self) -> usize {
        if self.bipartite {
            self.chordless_even_cycles.iter().map(|c| c.len() / 2).max().unwrap_or(0)
        } else {
            (self.longest_even_cycle / 2).max(self.max_circuit_half_degree.unwrap_or(0))
        }
    }

    pub fn default_bound(&self) -> usize {
        let base = if self.bipartite { self.longest_even_cycle / 2 } else { self.candidate_degree() };
        base.max(2)
    }
}

/// Computes a minimal binomial generating set degree by degree.
///
/// Fibers are processed in order of (total degree, G-degree). Each fiber is
/// connected using the generators chosen so far; every extra component gets
/// one new generator joining its smallest member to the fiber's smallest
/// member.
pub fn minimal_generating_set(g: &Graph, opts: &GeneratorOptions) -> Result<GeneratingSet> {
    let hints = DegreeHints::compute(g, opts)?;
    minimal_generating_set_with(g, opts.degree_bound, &hints)
}

pub fn minimal_generating_set_with(g: &Graph, bound: Option<usize>, hints: &DegreeHints) -> Result<GeneratingSet> {
    let bound = bound.unwrap_or_else(|| hints.default_bound());
    if bound < 2 {
        return Err(Error::Hypothesis(format!("degree bound {bound} < 2")));
    }
    let candidate = hints.candidate_degree();
    if hints.bipartite && candidate > bound {
        return Err(Error::BoundTooSmall { bound, needed: candidate });
    }
    let mut generators: Vec<Generator> = Vec::new();
    let mut top_fiber_split = false;
    let fibers = if g.m() == 0 { BTreeMap::new() } else { fibers_up_to(g, bound) };
    let mut processed = 0;
    for ((d, _), members) in &fibers {
        if members.len() < 2 {
            continue;
        }
        processed += 1;
        let moves: Vec<Binomial> = generators.iter().map(|x| x.binomial.clone()).collect();
        let (adjacency, labels) = move_components(members, &moves);
        let count = labels.iter().max().map_or(0, |&c| c + 1);
        if count <= 1 {
            continue;
        }
        if *d == bound {
            top_fiber_split = true;
        }
        let indispensable = members.len() == 2 && adjacency.is_empty();
        let mut seen = vec![false; count];
        seen[labels[0]] = true;
        for (i, &label) in labels.iter().enumerate() {
            if !seen[label] {
                seen[label] = true;
                let b = Binomial::new(g, members[0].clone(), members[i].clone())?
                    .ok_or_else(|| Error::Inconsistent("distinct fiber members gave a zero binomial".into()))?;
                generators.push(Generator { binomial: b, indispensable });
            }
        }
    }
    if !hints.bipartite && top_fiber_split && candidate > bound {
        return Err(Error::BoundTooSmall { bound, needed: candidate });
    }
    let bound_relative = !(hints.bipartite && hints.cycles_complete);
    if hints.bipartite && hints.cycles_complete {
        check_bipartite_generators(g, &generators, &hints.chordless_even_cycles)?;
    }
    Ok(GeneratingSet { generators, degree_bound: bound, bound_relative, fibers_processed: processed })
}

/// For bipartite graphs the minimal generators are exactly the binomials of
/// chordless even cycles, all indispensable.
fn check_bipartite_generators(g: &Graph, gens: &[Generator], chordless: &[EdgeCycle]) -> Result<()> {
    let mut expected = Vec::new();
    for c in chordless {
        expected.push(binomial_from_walk(g, &c.edges)?);
    }
    expected.sort();
    let mut got: Vec<Binomial> = gens.iter().map(|x| x.binomial.clone()).collect();
    got.sort();
    if got != expected || gens.iter().any(|x| !x.indispensable) {
        return Err(Error::Inconsistent(format!(
            "bipartite generators ({}) differ from chordless even cycles ({})",
            got.len(),
            expected.len()
        )));
    }
    Ok(())
}

/// True iff every fiber of monomial degree at most the set's bound is
/// connected under the set.
pub fn verify_generation(g: &Graph, set: &GeneratingSet) -> bool {
    if g.m() == 0 {
        return set.generators.is_empty();
    }
    let moves = set.binomials();
    fibers_up_to(g, set.degree_bound).values().all(|members| {
        let (_, labels) = move_components(members, &moves);
        labels.iter().all(|&l| l == 0)
    })
}

pub fn is_quadratically_generated(g: &Graph) -> Result<bool> {
    Ok(minimal_generating_set(g, &GeneratorOptions::default())?.is_quadratic())
}

pub fn indispensable_binomials(g: &Graph, opts: &GeneratorOptions) -> Result<Vec<Binomial>> {
    Ok(minimal_generating_set(g, opts)?.indispensable())
}

/// True iff `h` has a monomial divisible by `x_i x_j` and one divisible by
/// `x_p x_q`, where the 4-cycle is `(e_i, e_p, e_j, e_q)`.
pub fn has_both_cycle_monomials(cycle: &EdgeCycle, h: &Polynomial, m: usize) -> bool {
    let (i, p, j, q) = (cycle.edges[0], cycle.edges[1], cycle.edges[2], cycle.edges[3]);
    let first = Monomial::from_support(m, &[i, j]);
    let second = Monomial::from_support(m, &[p, q]);
    h.terms().any(|(mon, _)| first.divides(mon)) && h.terms().any(|(mon, _)| second.divides(mon))
}

/// Draws `trials` random nonzero multiples `H = C·f_Γ` with `C` supported on
/// the induced subgraph of the 4-cycle and checks [`has_both_cycle_monomials`]
/// for each.
pub fn sample_multiple_divisibility(g: &Graph, cycle: &EdgeCycle, trials: usize, seed: u64) -> Result<bool> {
    g.validate_cycle(cycle)?;
    if cycle.len() != 4 {
        return Err(Error::Hypothesis(format!("cycle has length {}, expected 4", cycle.len())));
    }
    let (_, vars) = g.induced_subgraph(&cycle.vertices)?;
    if vars.len() == 6 {
        return Err(Error::Hypothesis("induced subgraph on the cycle is complete".into()));
    }
    let m = g.m();
    let f = binomial_from_walk(g, &cycle.edges)?.to_polynomial();
    let coefficients: [(i64, i64); 8] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (-3, 1), (1, 2), (-1, 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < trials {
        let mut c = Polynomial::default();
        for _ in 0..rng.gen_range(1..=5) {
            let mut mon = Monomial::one(m);
            for &v in &vars {
                mon.0[v] = rng.gen_range(0..=3);
            }
            let (a, b) = coefficients[rng.gen_range(0..coefficients.len())];
            c.add_term(BigRational::new(a.into(), b.into()), mon);
        }
        let h = c.mul(&f);
        if h.is_zero() {
            continue;
        }
        done += 1;
        if !has_both_cycle_monomials(cycle, &h, m) {
            return Ok(false);
        }
    }
    Ok(true)
}
