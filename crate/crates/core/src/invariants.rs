//! Height, μ, the matching lower bounds and the resulting values or
//! intervals for `bar` and `ara_G`.

use num_rational::BigRational;
use serde::Serialize;

use crate::complex::{self, ComponentShape, DeltaComplex, DeltaValue, DimensionSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideal::{self, DegreeHints, GeneratingSet, GeneratorOptions};
use crate::linalg::{self, Circuit};

pub const REPORT_SCHEMA: u32 = 1;

/// `m − rank(M_G)`, checked against `m − n + 1` (bipartite) or `m − n`.
pub fn height(g: &Graph) -> Result<usize> {
    let rank = linalg::integer_rank(&g.incidence_columns());
    let ht = g.m() - rank;
    let expected = if g.is_bipartite().is_some() { g.m() + 1 - g.n() } else { g.m() - g.n() };
    if ht != expected {
        return Err(Error::Inconsistent(format!("height {ht} but the graph shape predicts {expected}")));
    }
    Ok(ht)
}

/// True iff no column lies in the cone of the others.
pub fn extremality_check(g: &Graph) -> Result<bool> {
    let cols = g.incidence_columns();
    for j in 0..cols.len() {
        let b: Vec<BigRational> = cols[j].entries().into_iter().map(|x| BigRational::from_integer(x.into())).collect();
        let rest: Vec<_> = cols.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, c)| *c).collect();
        if linalg::vector_in_cone(&b, &rest)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closed-form values for the complete graph `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KnExpected {
    pub mu: usize,
    pub height: usize,
    pub vertices: usize,
    pub components: usize,
    pub indispensable: usize,
    pub bar: usize,
    #[serde(rename = "araG")]
    pub ara_g: usize,
}

pub fn kn_expected(n: usize) -> Result<KnExpected> {
    if n < 4 {
        return Err(Error::Hypothesis(format!("K_n closed forms need n >= 4, got {n}")));
    }
    let c4 = n * (n - 1) * (n - 2) * (n - 3) / 24;
    let mu = 2 * c4;
    Ok(KnExpected {
        mu,
        height: n * (n - 3) / 2,
        vertices: 3 * c4,
        components: c4,
        indispensable: 0,
        bar: mu,
        ara_g: mu,
    })
}

/// An exact value or a closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Bound {
    Exact(usize),
    Interval([usize; 2]),
}

impl Bound {
    fn between(lo: usize, hi: usize) -> Result<Self> {
        match lo.cmp(&hi) {
            std::cmp::Ordering::Less => Ok(Bound::Interval([lo, hi])),
            std::cmp::Ordering::Equal => Ok(Bound::Exact(hi)),
            std::cmp::Ordering::Greater => Err(Error::Inconsistent(format!(
                "lower bound {lo} exceeds mu = {hi}; the degree bound is probably too small"
            ))),
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match *self {
            Bound::Exact(v) => Some(v),
            Bound::Interval(_) => None,
        }
    }

    pub fn lo(&self) -> usize {
        match *self {
            Bound::Exact(v) => v,
            Bound::Interval([lo, _]) => lo,
        }
    }

    pub fn hi(&self) -> usize {
        match *self {
            Bound::Exact(v) => v,
            Bound::Interval([_, hi]) => hi,
        }
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Exact(v) => write!(f, "{v}"),
            Bound::Interval([lo, hi]) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ComponentCensus {
    pub edge: usize,
    pub two_simplex: usize,
    pub other: usize,
}

impl ComponentCensus {
    pub fn of(d: &DeltaComplex) -> Self {
        let mut c = ComponentCensus::default();
        for comp in d.components() {
            match comp.shape() {
                ComponentShape::Edge => c.edge += 1,
                ComponentShape::TwoSimplex => c.two_simplex += 1,
                ComponentShape::Other => c.other += 1,
            }
        }
        c
    }

    pub fn total(&self) -> usize {
        self.edge + self.two_simplex + self.other
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub schema: u32,
    pub m: usize,
    pub n: usize,
    pub bipartite: bool,
    pub quadratic_generated: bool,
    pub height: usize,
    pub mu: usize,
    pub mu_bound_relative: bool,
    pub degree_bound: usize,
    pub delta01: usize,
    #[serde(rename = "deltaOmega")]
    pub delta_omega: usize,
    pub bar: Bound,
    #[serde(rename = "araG")]
    pub ara_g: Bound,
    pub ara_bracket: [usize; 2],
    pub complete_intersection: bool,
    pub component_census: ComponentCensus,
    pub indispensable_count: usize,
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub generators: GeneratorOptions,
    pub max_face_card: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { generators: GeneratorOptions::default(), max_face_card: complex::DEFAULT_MAX_FACE_CARD }
    }
}

/// Everything computed on the way to a report.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub circuits: Vec<Circuit>,
    pub hints: DegreeHints,
    pub generating_set: GeneratingSet,
    pub delta: DeltaComplex,
    pub delta01: DeltaValue,
    pub delta_omega: DeltaValue,
    pub report: InvariantReport,
}

pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<Analysis> {
    let circuits = linalg::circuits(&g.incidence_columns(), opts.generators.circuit_cap)?;
    let hints = DegreeHints::compute(g, &opts.generators)?;
    let generating_set = ideal::minimal_generating_set_with(g, opts.generators.degree_bound, &hints)?;
    let delta = complex::build_delta_from(g, &circuits, opts.max_face_card)?;
    let delta01 = complex::delta_value(&delta, &DimensionSet::dims(&[0, 1]))?;
    let delta_omega = complex::delta_value(&delta, &DimensionSet::Omega)?;
    let ht = height(g)?;
    let mu = generating_set.mu();
    let bipartite = hints.bipartite;
    let quadratic = generating_set.is_quadratic();
    let (bar, ara_g) = if bipartite || quadratic {
        (Bound::Exact(mu), Bound::Exact(mu))
    } else {
        (Bound::between(delta01.value.max(ht), mu)?, Bound::between(delta_omega.value.max(ht), mu)?)
    };
    let report = InvariantReport {
        schema: REPORT_SCHEMA,
        m: g.m(),
        n: g.n(),
        bipartite,
        quadratic_generated: quadratic,
        height: ht,
        mu,
        mu_bound_relative: generating_set.bound_relative,
        degree_bound: generating_set.degree_bound,
        delta01: delta01.value,
        delta_omega: delta_omega.value,
        bar,
        ara_g,
        ara_bracket: [ht, mu.min(g.m())],
        complete_intersection: ht == mu,
        component_census: ComponentCensus::of(&delta),
        indispensable_count: generating_set.indispensable_count(),
    };
    Ok(Analysis { circuits, hints, generating_set, delta, delta01, delta_omega, report })
}

pub fn report(g: &Graph, degree_bound: Option<usize>) -> Result<InvariantReport> {
    let mut opts = AnalysisOptions::default();
    opts.generators.degree_bound = degree_bound;
    Ok(analyze(g, &opts)?.report)
}
