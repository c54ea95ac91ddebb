//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toricrank::complex::{self, ComponentShape, DimensionSet, SupportSet};
use toricrank::ideal::{self, Binomial, GDegree, GeneratorOptions, Monomial, Polynomial};
use toricrank::invariants::{self, AnalysisOptions, Bound};
use toricrank::linalg::{self, Circuit};
use toricrank::Graph;

const LIMIT_K4: Duration = Duration::from_secs(1);
const LIMIT_K33: Duration = Duration::from_secs(5);
const LIMIT_KN: Duration = Duration::from_secs(120);
const LIMIT_ORACLE: Duration = Duration::from_secs(60);
const LIMIT_BIPARTITE: Duration = Duration::from_secs(120);
const LIMIT_QUADRATIC: Duration = Duration::from_secs(120);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(300);

const SEED: u64 = 0x7011c;

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Graphs whose generating sets get the soundness check in criterion 7.
#[derive(Default)]
struct Seen {
    graphs: Vec<Graph>,
}

impl Seen {
    fn add(&mut self, g: &Graph) {
        self.graphs.push(g.clone());
    }
}

fn latex_poly(g: &Graph, text: &str) -> Polynomial {
    let plain = text.replace("x_{", "x").replace('}', "");
    // Insert `*` between adjacent variables.
    let mut out = String::new();
    for (i, ch) in plain.chars().enumerate() {
        if ch == 'x' && i > 0 && plain.as_bytes()[i - 1].is_ascii_digit() {
            out.push('*');
        }
        out.push(ch);
    }
    Polynomial::parse(g, &out).expect("fixture polynomial parses")
}

fn binomial_poly_set(g: &Graph, bs: &[Binomial]) -> BTreeSet<String> {
    bs.iter().map(|b| b.format(g)).collect()
}

fn normalize(g: &Graph, texts: &[&str]) -> BTreeSet<String> {
    texts
        .iter()
        .map(|t| {
            let p = latex_poly(g, t);
            let mons: Vec<Monomial> = p.terms().map(|(m, _)| m.clone()).collect();
            Binomial::new(g, mons[0].clone(), mons[1].clone()).unwrap().unwrap().format(g)
        })
        .collect()
}

fn criterion_1(seen: &mut Seen) -> Check {
    let g = Graph::complete(4).map_err(err)?;
    seen.add(&g);
    let cs = linalg::circuits(&g.incidence_columns(), linalg::DEFAULT_CIRCUIT_EDGE_CAP).map_err(err)?;
    let got: BTreeSet<String> = cs.iter().map(|c| Binomial::from_circuit(c).format(&g)).collect();
    let want = normalize(&g, &["x_{12}x_{34}-x_{14}x_{23}", "x_{12}x_{34}-x_{13}x_{24}", "x_{13}x_{24}-x_{14}x_{23}"]);
    ensure(got == want, || format!("circuits {got:?}"))?;
    let an = invariants::analyze(&g, &AnalysisOptions::default()).map_err(err)?;
    let d = &an.delta;
    let e = |labels: [&str; 2]| {
        let mut v: Vec<usize> = labels.iter().map(|l| g.parse_edge_label(l).unwrap()).collect();
        v.sort();
        d.vertices.iter().position(|s| s.0 == v).unwrap()
    };
    let (e1, e2, e3) = (e(["x12", "x34"]), e(["x14", "x23"]), e(["x13", "x24"]));
    ensure(d.vertices.len() == 3 && d.faces.len() == 7 && d.is_face(&[e1, e2, e3]), || "not the full simplex".into())?;
    let v01 = &an.delta01;
    ensure(v01.value == 2, || format!("delta_01 = {}", v01.value))?;
    // The computed witness is one optimal matching; the listed one must be
    // optimal too: faces of dimension <= 1, disjoint, covering all, 2 faces.
    let listed = [vec![e1.min(e2), e1.max(e2)], vec![e3]];
    ensure(listed.iter().all(|f| d.is_face(f) && f.len() <= 2), || "listed witness is not a {0,1}-matching".into())?;
    ensure(listed.len() == v01.value && v01.coverage == 3, || "listed witness not optimal".into())?;
    let covered: BTreeSet<usize> = v01.witness.iter().flatten().copied().collect();
    ensure(
        covered.len() == 3 && v01.witness.iter().all(|f| f.len() <= 2 && d.is_face(f)),
        || format!("computed witness {:?} invalid", v01.witness),
    )?;
    let vo = &an.delta_omega;
    ensure(vo.value == 1 && vo.witness == vec![vec![0, 1, 2]], || format!("delta_omega {vo:?}"))?;
    let v012 = complex::delta_value(d, &DimensionSet::dims(&[0, 1, 2])).map_err(err)?;
    ensure(v012.value == 1, || "delta_012".into())?;
    let r = &an.report;
    ensure(r.height == 2 && r.mu == 2 && r.complete_intersection, || format!("{r:?}"))?;
    Ok(())
}

const K33_GENERATORS: [&str; 9] = [
    "x_{14}x_{26}-x_{16}x_{24}",
    "x_{15}x_{36}-x_{16}x_{35}",
    "x_{25}x_{36}-x_{26}x_{35}",
    "x_{24}x_{36}-x_{26}x_{34}",
    "x_{14}x_{25}-x_{15}x_{24}",
    "x_{15}x_{26}-x_{16}x_{25}",
    "x_{24}x_{35}-x_{25}x_{34}",
    "x_{14}x_{36}-x_{16}x_{34}",
    "x_{14}x_{35}-x_{15}x_{34}",
];

const K33_RADICAL: [&str; 7] = [
    "x_{14}x_{26}-x_{16}x_{24}+x_{15}x_{36}-x_{16}x_{35}",
    "x_{25}x_{36}-x_{26}x_{35}+x_{14}x_{25}-x_{15}x_{24}",
    "x_{24}x_{36}-x_{26}x_{34}",
    "x_{15}x_{26}-x_{16}x_{25}",
    "x_{24}x_{35}-x_{25}x_{34}",
    "x_{14}x_{36}-x_{16}x_{34}",
    "x_{14}x_{35}-x_{15}x_{34}",
];

fn criterion_2(seen: &mut Seen) -> Check {
    let g = Graph::complete_bipartite(3, 3).map_err(err)?;
    seen.add(&g);
    let an = invariants::analyze(&g, &AnalysisOptions::default()).map_err(err)?;
    let set = &an.generating_set;
    let got = binomial_poly_set(&g, &set.binomials());
    let want = normalize(&g, &K33_GENERATORS);
    ensure(got == want, || format!("generators {got:?}"))?;
    ensure(set.mu() == 9 && set.indispensable_count() == 9, || "not all 9 indispensable".into())?;
    ensure(an.delta.vertices.len() == 18, || format!("{} vertices", an.delta.vertices.len()))?;
    let comps = an.delta.components();
    ensure(comps.len() == 9 && comps.iter().all(|c| c.shape() == ComponentShape::Edge), || "components".into())?;
    let r = &an.report;
    ensure(r.height == 4 && r.bar == Bound::Exact(9) && r.ara_g == Bound::Exact(9), || format!("{r:?}"))?;
    for text in K33_RADICAL {
        ensure(ideal::polynomial_in_ideal(&g, &latex_poly(&g, text)), || format!("{text} not in I_G"))?;
    }
    Ok(())
}

fn criterion_3(seen: &mut Seen) -> Check {
    for n in 4..=7 {
        let g = Graph::complete(n).map_err(err)?;
        seen.add(&g);
        let an = invariants::analyze(&g, &AnalysisOptions::default()).map_err(err)?;
        let e = invariants::kn_expected(n).map_err(err)?;
        let r = &an.report;
        let comps = an.delta.components();
        let got = (r.mu, r.height, an.delta.vertices.len(), comps.len(), r.indispensable_count);
        let want = (e.mu, e.height, e.vertices, e.components, e.indispensable);
        ensure(got == want, || format!("K{n}: got {got:?}, want {want:?}"))?;
        ensure(comps.iter().all(|c| c.shape() == ComponentShape::TwoSimplex), || format!("K{n}: shapes"))?;
    }
    Ok(())
}

/// Minimal dependent edge sets, by checking every subset's rank.
fn circuit_supports_bruteforce(g: &Graph) -> BTreeSet<Vec<usize>> {
    let cols = g.incidence_columns();
    let m = cols.len();
    let mut independent = vec![false; 1 << m];
    for mask in 0usize..1 << m {
        let sub: Vec<_> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| cols[i]).collect();
        independent[mask] = linalg::integer_rank(&sub) == sub.len();
    }
    (0usize..1 << m)
        .filter(|&mask| !independent[mask] && (0..m).all(|i| mask >> i & 1 == 0 || independent[mask & !(1 << i)]))
        .map(|mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

fn check_circuit(g: &Graph, c: &Circuit) -> Check {
    let u = c.entries();
    let mut mu = vec![0i64; g.n()];
    for (i, &x) in u.iter().enumerate() {
        let (a, b) = g.edge(i);
        mu[a] += x;
        mu[b] += x;
    }
    ensure(mu.iter().all(|&x| x == 0), || format!("M u != 0 for {u:?}"))?;
    let gcd = u.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    ensure(gcd == 1, || format!("gcd {gcd} for {u:?}"))?;
    ensure(u.iter().all(|x| x.abs() <= 2), || format!("entry above 2 in {u:?}"))?;
    let support = c.support();
    let cols = g.incidence_columns();
    for skip in 0..support.len() {
        let sub: Vec<_> = support.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| cols[i]).collect();
        ensure(linalg::integer_rank(&sub) == sub.len(), || format!("support of {u:?} not minimal"))?;
    }
    Ok(())
}

fn oracle_case(g: &Graph) -> Check {
    let cs = linalg::circuits(&g.incidence_columns(), linalg::DEFAULT_CIRCUIT_EDGE_CAP).map_err(err)?;
    for c in &cs {
        check_circuit(g, c)?;
    }
    let got: BTreeSet<Vec<usize>> = cs.iter().map(Circuit::support).collect();
    ensure(got.len() == cs.len(), || "duplicate circuit supports".into())?;
    let want = circuit_supports_bruteforce(g);
    ensure(got == want, || format!("{g}: {} circuits vs {} by brute force", got.len(), want.len()))?;
    if g.is_bipartite().is_some() {
        let cycles: BTreeSet<Vec<usize>> =
            g.even_cycles(None).map_err(err)?.iter().map(|c| c.sorted_edges()).collect();
        ensure(cycles == got, || format!("{g}: even cycles and circuits differ"))?;
        for c in &cs {
            let b = Binomial::from_circuit(c);
            ensure(b.plus().exponents().iter().all(|&x| x <= 1), || "bipartite circuit with a square".into())?;
        }
    }
    Ok(())
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize, max_edges: usize) -> Graph {
    loop {
        let mut edges = BTreeSet::new();
        for v in 1..n {
            let u = rng.gen_range(0..v);
            edges.insert((u, v));
        }
        let target = rng.gen_range(n - 1..=max_edges.min(n * (n - 1) / 2));
        while edges.len() < target {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
        if let Ok(g) = Graph::new(n, edges) {
            return g;
        }
    }
}

fn random_bipartite(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> Graph {
    loop {
        let n = rng.gen_range(4..=max_vertices);
        let a = rng.gen_range(2..=n - 2);
        let b = n - a;
        let side = |v: usize| v < a;
        let mut edges = BTreeSet::new();
        // Spanning tree alternating sides.
        for v in 1..n {
            let candidates: Vec<usize> = (0..v).filter(|&u| side(u) != side(v)).collect();
            if candidates.is_empty() {
                continue;
            }
            let u = candidates[rng.gen_range(0..candidates.len())];
            edges.insert((u, v));
        }
        let target = rng.gen_range(n - 1..=max_edges.min(a * b));
        let mut tries = 0;
        while edges.len() < target && tries < 1000 {
            tries += 1;
            let u = rng.gen_range(0..a);
            let v = a + rng.gen_range(0..b);
            edges.insert((u, v));
        }
        if let Ok(g) = Graph::new(n, edges.into_iter().collect()) {
            return g;
        }
    }
}

fn criterion_4(seen: &mut Seen) -> Check {
    let k5 = Graph::complete(5).map_err(err)?;
    let mut count = 0;
    for mask in 1usize..1 << k5.m() {
        if mask.count_ones() > 7 {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..k5.m()).filter(|i| mask >> i & 1 == 1).map(|i| k5.edge(i)).collect();
        let used: BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        let index: Vec<usize> = (0..5).map(|v| used.iter().filter(|&&w| w < v).count()).collect();
        let relabeled: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (index[u], index[v])).collect();
        let Ok(g) = Graph::new(used.len(), relabeled) else { continue };
        oracle_case(&g)?;
        count += 1;
    }
    ensure(count > 0, || "no K5 subgraphs".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    for _ in 0..50 {
        let n = rng.gen_range(4..=9);
        let g = random_connected(&mut rng, n, 12);
        oracle_case(&g)?;
        if g.m() <= 10 {
            seen.add(&g);
        }
    }
    Ok(())
}

fn criterion_5(seen: &mut Seen) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    for _ in 0..50 {
        let g = random_bipartite(&mut rng, 10, 14);
        seen.add(&g);
        let an = invariants::analyze(&g, &AnalysisOptions::default()).map_err(err)?;
        let r = &an.report;
        let chordless = an.hints.chordless_even_cycles.len();
        ensure(r.delta01 == r.mu && r.mu == chordless, || {
            format!("{g}: delta01 {} mu {} chordless {chordless}", r.delta01, r.mu)
        })?;
        ensure(r.bar == Bound::Exact(r.mu) && r.ara_g == Bound::Exact(r.mu), || format!("{g}: not exact"))?;
        ensure(!r.mu_bound_relative, || format!("{g}: mu is bound-relative"))?;
        lemma_c_min(&g, &an)?;
        ensure(
            an.delta.components().iter().all(|c| c.shape() == ComponentShape::Edge),
            || format!("{g}: a component is not an edge"),
        )?;
    }
    Ok(())
}

/// C_min equals the supports of the indispensable monomials.
fn lemma_c_min(g: &Graph, an: &invariants::Analysis) -> Check {
    let mons = ideal::indispensable_monomials(g, an.generating_set.degree_bound);
    let from_mons: BTreeSet<SupportSet> = mons.iter().map(|m| SupportSet(m.support())).collect();
    let c_min: BTreeSet<SupportSet> = an.delta.vertices.iter().cloned().collect();
    ensure(from_mons == c_min, || format!("{g}: C_min differs from indispensable monomial supports"))
}

fn quadratic_case(g: &Graph, seen: &mut Seen) -> Check {
    seen.add(g);
    let an = invariants::analyze(g, &AnalysisOptions::default()).map_err(err)?;
    let r = &an.report;
    ensure(r.quadratic_generated, || format!("{g}: not quadratic"))?;
    let t = r.component_census.two_simplex;
    ensure(r.mu == r.indispensable_count + 2 * t, || {
        format!("{g}: mu {} g {} t {t}", r.mu, r.indispensable_count)
    })?;
    ensure(r.component_census.other == 0, || format!("{g}: unclassified component"))?;
    ensure(r.delta01 == r.mu, || format!("{g}: delta01 {} mu {}", r.delta01, r.mu))?;
    lemma_c_min(g, &an)?;
    Ok(())
}

fn criterion_6(seen: &mut Seen) -> Check {
    for g in [
        Graph::complete(4),
        Graph::complete(5),
        Graph::complete(6),
        Graph::complete_bipartite(3, 3),
        Graph::complete_bipartite(2, 3),
    ] {
        quadratic_case(&g.map_err(err)?, seen)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut found = 0;
    let mut attempts = 0;
    while found < 20 {
        attempts += 1;
        ensure(attempts < 5000, || format!("only {found} quadratic graphs in 5000 draws"))?;
        let n = rng.gen_range(4..=7);
        let g = random_connected(&mut rng, n, 12);
        let hints = ideal::DegreeHints::compute(&g, &GeneratorOptions::default()).map_err(err)?;
        let set = ideal::minimal_generating_set_with(&g, None, &hints).map_err(err)?;
        if set.mu() == 0 || !set.is_quadratic() {
            continue;
        }
        // Nothing new may appear one degree higher.
        let wider = ideal::minimal_generating_set_with(&g, Some(set.degree_bound + 1), &hints).map_err(err)?;
        ensure(wider.generators == set.generators, || format!("{g}: new generators at degree {}", set.degree_bound + 1))?;
        quadratic_case(&g, seen)?;
        found += 1;
    }
    Ok(())
}

/// Counts the fiber by trying every exponent vector.
fn fiber_size_bruteforce(g: &Graph, b: &[u32]) -> usize {
    let caps: Vec<u32> = g.edges().iter().map(|&(u, v)| b[u].min(b[v])).collect();
    let mut exps = vec![0u32; g.m()];
    let mut count = 0;
    loop {
        let mut deg = vec![0u32; g.n()];
        for (i, &x) in exps.iter().enumerate() {
            let (u, v) = g.edge(i);
            deg[u] += x;
            deg[v] += x;
        }
        if deg == b {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == exps.len() {
                return count;
            }
            if exps[i] < caps[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn criterion_7(seen: &Seen) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for _ in 0..100 {
        let n = rng.gen_range(2..=10);
        let g = random_connected(&mut rng, n, 16);
        ensure(invariants::extremality_check(&g).map_err(err)?, || format!("{g} not extremal"))?;
    }
    for k in 0..200 {
        let n = rng.gen_range(3..=6);
        let g = random_connected(&mut rng, n, 8);
        let b: Vec<u32> = if k % 4 == 3 {
            (0..n).map(|_| rng.gen_range(0..=2)).collect()
        } else {
            let mut mon = Monomial::one(g.m());
            for _ in 0..rng.gen_range(1..=3) {
                mon.0[rng.gen_range(0..g.m())] += 1;
            }
            ideal::g_degree(&g, &mon).0
        };
        let fiber = ideal::enumerate_fiber(&g, &GDegree(b.clone())).map_err(err)?;
        let want = fiber_size_bruteforce(&g, &b);
        ensure(fiber.members.len() == want, || format!("{g} b={b:?}: {} vs {want}", fiber.members.len()))?;
    }
    let k33 = Graph::complete_bipartite(3, 3).map_err(err)?;
    let mut cycles: Vec<(Graph, toricrank::EdgeCycle)> =
        k33.even_cycles(Some(4)).map_err(err)?.into_iter().take(5).map(|c| (k33.clone(), c)).collect();
    while cycles.len() < 10 {
        let g = random_bipartite(&mut rng, 8, 12);
        if let Some(c) = g.even_cycles(Some(4)).map_err(err)?.into_iter().next() {
            cycles.push((g, c));
        }
    }
    for (i, (g, c)) in cycles.iter().enumerate() {
        let ok = ideal::sample_multiple_divisibility(g, c, 100, SEED + i as u64).map_err(err)?;
        ensure(ok, || format!("{g}: a multiple of the 4-cycle binomial misses a cycle monomial"))?;
    }
    for g in &seen.graphs {
        let set = ideal::minimal_generating_set(g, &GeneratorOptions::default()).map_err(err)?;
        ensure(ideal::verify_generation(g, &set), || format!("{g}: a fiber is disconnected"))?;
    }
    Ok(())
}

fn main() {
    let mut seen = Seen::default();
    let mut failed = 0;
    let mut report = |id: u32, name: &str, limit: Duration, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= limit, || format!("took {:.2} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs()))
        });
        let t = format!("{:.2} s / {} s", elapsed.as_secs_f64(), limit.as_secs());
        match result {
            Ok(()) => println!("criterion {id}: PASS  {name}  ({t})"),
            Err(why) => {
                failed += 1;
                println!("criterion {id}: FAIL  {name}  ({t}): {why}");
            }
        }
    };
    report(1, "K4 fixture", LIMIT_K4, &mut || criterion_1(&mut seen));
    report(2, "K3,3 fixture", LIMIT_K33, &mut || criterion_2(&mut seen));
    report(3, "K_n sweep n=4..7", LIMIT_KN, &mut || criterion_3(&mut seen));
    report(4, "circuit oracle", LIMIT_ORACLE, &mut || criterion_4(&mut seen));
    report(5, "bipartite law", LIMIT_BIPARTITE, &mut || criterion_5(&mut seen));
    report(6, "quadratic law", LIMIT_QUADRATIC, &mut || criterion_6(&mut seen));
    report(7, "property suites", LIMIT_PROPERTIES, &mut || criterion_7(&seen));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
