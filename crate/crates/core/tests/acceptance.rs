//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use atbox::boxrep::{
    chromatic_boxrep, girth5_boxrep, rational, verify, BoxRepresentation, IntervalQ, Rational,
    Violation,
};
use atbox::corpus::{at_free_corpus, claw_free_corpus};
use atbox::cubebound::{
    cub_upper, decide, exact_boxicity, exact_chordality, exact_cubicity, triangulation_claw_probe,
    Param,
};
use atbox::graph::{generate, girth, Family, GraphFamilySpec};
use atbox::invariants::{color, is_interval, is_unit_interval, ColorMode};
use atbox::triangulate::{minimality_report, minimize_triangulation, split_supergraph};
use atbox::Graph;
use common::{brute_at_free, brute_chromatic, brute_claw_number, pairwise_matches, random_graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GIRTH5_GRAPHS: usize = 100;
const GIRTH5_MAX_N: usize = 40;
const GIRTH5_TIME: Duration = Duration::from_secs(60);
const PERMUTATION_GRAPHS: usize = 100;
const PERMUTATION_MAX_N: usize = 30;
const EXACT_COLORING_MAX_N: usize = 10;
const TIGHT_TIME: Duration = Duration::from_secs(120);
const TRIANGULATION_GRAPHS: usize = 100;
const TRIANGULATION_CLAW_FREE: usize = 50;
const CLAW_GRAPHS: usize = 100;
const CLAW_MAX_N: usize = 25;
const CHAIN_GRAPHS: usize = 300;
const CHAIN_MAX_N: usize = 7;
const CHAIN_TIME: Duration = Duration::from_secs(600);
const KMAX: usize = 3;
const FUZZ_CASES: usize = 1000;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    let mut detail = summary;
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; {} failures, first: {first}", failures.len()));
    }
    Outcome {
        pass: failures.is_empty(),
        detail,
    }
}

fn timed_check(failures: &mut Vec<String>, start: Instant, limit: Duration) -> Duration {
    let took = start.elapsed();
    if took > limit {
        failures.push(format!("took {took:.1?}, limit {limit:?}"));
    }
    took
}

fn girth5_construction() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut max_n = 0;
    for i in 0..GIRTH5_GRAPHS {
        let n = 5 + i % (GIRTH5_MAX_N - 4);
        let seed = 100 + i as u64;
        let g = generate(&GraphFamilySpec::new(Family::Girth5Atfree, [n], seed)).unwrap();
        max_n = max_n.max(g.n());
        match girth5_boxrep(&g) {
            Ok(rep) if rep.dimension() == 2 && verify(&g, &rep).is_ok() => {}
            Ok(rep) => failures.push(format!("n={n} seed={seed}: {} dims", rep.dimension())),
            Err(e) => failures.push(format!("n={n} seed={seed}: {e}")),
        }
    }
    let took = timed_check(&mut failures, start, GIRTH5_TIME);
    outcome(
        &failures,
        format!("{GIRTH5_GRAPHS} girth5_atfree graphs (n <= {max_n}), 2 dims verified, {took:.1?}"),
    )
}

fn color_class_construction() -> Outcome {
    let mut failures = Vec::new();
    let mut exact_checked = 0;
    for i in 0..PERMUTATION_GRAPHS {
        let n = 5 + i % (PERMUTATION_MAX_N - 4);
        let seed = 1000 + i as u64;
        let g = generate(&GraphFamilySpec::new(Family::Permutation, [n], seed)).unwrap();
        let c = color(&g, ColorMode::Heuristic, 0).unwrap();
        match chromatic_boxrep(&g, &c) {
            Ok(rep) if rep.dimension() == c.k && verify(&g, &rep).is_ok() => {}
            Ok(rep) => failures.push(format!(
                "n={n} seed={seed}: {} dims for {} colors",
                rep.dimension(),
                c.k
            )),
            Err(e) => failures.push(format!("n={n} seed={seed}: {e}")),
        }
        if n <= EXACT_COLORING_MAX_N {
            exact_checked += 1;
            let chi = brute_chromatic(&g);
            let c = color(&g, ColorMode::Exact, 16).unwrap();
            match chromatic_boxrep(&g, &c) {
                Ok(rep) if rep.dimension() == chi && verify(&g, &rep).is_ok() => {}
                Ok(rep) => failures.push(format!(
                    "n={n} seed={seed}: {} dims, chi={chi}",
                    rep.dimension()
                )),
                Err(e) => failures.push(format!("n={n} seed={seed}: {e}")),
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{PERMUTATION_GRAPHS} permutation graphs verified with k = colors; \
             {exact_checked} with n <= {EXACT_COLORING_MAX_N} reach k = chi"
        ),
    )
}

fn tight_examples() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let k222 = generate(&GraphFamilySpec::new(
        Family::CompleteMultipartite,
        [2, 2, 2],
        0,
    ))
    .unwrap();
    let co3k2 = generate(&GraphFamilySpec::new(Family::MatchingComplement, [6], 0)).unwrap();
    let c5 = generate(&GraphFamilySpec::new(Family::Cycle, [5], 0)).unwrap();

    let box_k222 = exact_boxicity(&k222, KMAX).unwrap().value;
    let chi_k222 = brute_chromatic(&k222);
    if box_k222 != Some(3) || chi_k222 != 3 {
        failures.push(format!("box(K222) = {box_k222:?}, chi = {chi_k222}"));
    }
    let cub = exact_cubicity(&co3k2, KMAX).unwrap().value;
    if cub != Some(co3k2.n() / 2) || cub != Some(3) {
        failures.push(format!("cub(complement 3K2) = {cub:?}"));
    }
    let box_c5 = exact_boxicity(&c5, KMAX).unwrap().value;
    let built = girth5_boxrep(&c5).map(|r| (r.dimension(), verify(&c5, &r).is_ok()));
    if box_c5 != Some(2) || built != Ok((2, true)) {
        failures.push(format!("box(C5) = {box_c5:?}, girth5_boxrep = {built:?}"));
    }
    let took = timed_check(&mut failures, start, TIGHT_TIME);
    outcome(
        &failures,
        format!(
            "box(K222) = {box_k222:?} = chi {chi_k222}, cub(complement 3K2) = {cub:?}, \
             box(C5) = {box_c5:?}, {took:.1?}"
        ),
    )
}

/// Minimal triangulations obtained from the split supergraph of every color
/// class.
fn class_triangulations(g: &Graph) -> Vec<Graph> {
    let c = color(
        g,
        if g.n() <= 16 {
            ColorMode::Exact
        } else {
            ColorMode::Heuristic
        },
        16,
    )
    .unwrap();
    (0..c.k)
        .map(|i| {
            let split = split_supergraph(g, &c, i).unwrap();
            minimize_triangulation(g, &split).unwrap().graph()
        })
        .collect()
}

fn minimal_triangulations() -> Outcome {
    let mut failures = Vec::new();
    let all = at_free_corpus();
    let claw_free = claw_free_corpus();
    if all.len() < TRIANGULATION_GRAPHS || claw_free.len() < TRIANGULATION_CLAW_FREE {
        failures.push(format!(
            "corpus too small: {} / {}",
            all.len(),
            claw_free.len()
        ));
    }
    let mut checked = 0;
    for c in &all {
        for h in class_triangulations(&c.graph) {
            checked += 1;
            if !is_interval(&h) {
                failures.push(format!("{}: triangulation not interval", c.label));
            }
        }
    }
    let mut unit_checked = 0;
    for c in &claw_free {
        for h in class_triangulations(&c.graph) {
            unit_checked += 1;
            if !is_unit_interval(&h) {
                failures.push(format!("{}: triangulation not unit interval", c.label));
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{} AT-free graphs ({checked} triangulations interval), {} claw-free \
             ({unit_checked} unit interval)",
            all.len(),
            claw_free.len()
        ),
    )
}

fn claw_number_monotone() -> Outcome {
    let mut failures = Vec::new();
    let graphs: Vec<_> = at_free_corpus()
        .into_iter()
        .filter(|c| c.graph.n() <= CLAW_MAX_N)
        .collect();
    if graphs.len() < CLAW_GRAPHS {
        failures.push(format!(
            "only {} corpus graphs with n <= {CLAW_MAX_N}",
            graphs.len()
        ));
    }
    for c in &graphs {
        match triangulation_claw_probe(&c.graph) {
            Ok(p) => {
                let (bg, bh) = (brute_claw_number(&c.graph), brute_claw_number(&p.h));
                if p.psi_h > p.psi_g || (p.psi_g, p.psi_h) != (bg, bh) {
                    failures.push(format!(
                        "{}: psi(G) = {} psi(H') = {}",
                        c.label, p.psi_g, p.psi_h
                    ));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", c.label)),
        }
    }
    outcome(
        &failures,
        format!(
            "{} graphs with n <= {CLAW_MAX_N}, psi(H') <= psi(G)",
            graphs.len()
        ),
    )
}

struct Sample {
    g: Graph,
    at_free: bool,
    chord: Option<usize>,
    boxicity: Option<usize>,
    cub: Option<usize>,
}

fn samples() -> &'static [Sample] {
    static SAMPLES: OnceLock<Vec<Sample>> = OnceLock::new();
    SAMPLES.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        (0..CHAIN_GRAPHS)
            .map(|i| {
                let n = 3 + i % (CHAIN_MAX_N - 2);
                let p = rng.gen_range(0.15..0.7);
                let g = random_graph(n, p, &mut rng);
                Sample {
                    at_free: brute_at_free(&g),
                    chord: exact_chordality(&g, KMAX).unwrap().value,
                    boxicity: exact_boxicity(&g, KMAX).unwrap().value,
                    cub: exact_cubicity(&g, KMAX).unwrap().value,
                    g,
                }
            })
            .collect()
    })
}

/// `None` means "more than kmax".
fn le(a: Option<usize>, b: Option<usize>) -> bool {
    match (a, b) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

fn ordering_chain() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let s = samples();
    for x in s {
        if !le(x.chord, x.boxicity) || !le(x.boxicity, x.cub) {
            failures.push(format!(
                "{:?}: chord {:?} box {:?} cub {:?}",
                x.g.edges().collect::<Vec<_>>(),
                x.chord,
                x.boxicity,
                x.cub
            ));
        }
        if x.at_free && x.chord != x.boxicity {
            failures.push(format!(
                "AT-free {:?}: chord {:?} != box {:?}",
                x.g.edges().collect::<Vec<_>>(),
                x.chord,
                x.boxicity
            ));
        }
    }
    let took = timed_check(&mut failures, start, CHAIN_TIME);
    let at_free = s.iter().filter(|x| x.at_free).count();
    outcome(
        &failures,
        format!("{} random graphs n <= {CHAIN_MAX_N} ({at_free} AT-free), chord <= box <= cub, {took:.1?}", s.len()),
    )
}

fn cubicity_bounds() -> Outcome {
    let mut failures = Vec::new();
    let mut cases: Vec<(Graph, Option<usize>)> = samples()
        .iter()
        .filter(|x| x.at_free)
        .map(|x| (x.g.clone(), x.cub))
        .collect();
    for c in at_free_corpus()
        .into_iter()
        .filter(|c| c.graph.n() <= CHAIN_MAX_N)
    {
        let cub = exact_cubicity(&c.graph, KMAX).unwrap().value;
        cases.push((c.graph, cub));
    }
    let mut checked = 0;
    let mut values = 0;
    let mut settled = 0;
    for (g, cub) in &mut cases {
        if cub.is_none() {
            // beyond kmax: settle cub = KMAX + 1 with a verified witness
            if let Some(r) = decide(g, Param::Cub, KMAX + 1).unwrap() {
                *cub = r.value;
                settled += 1;
            }
        }
    }
    for (g, cub) in &cases {
        let report = cub_upper(g).unwrap();
        if report.psi < 1 {
            continue;
        }
        checked += 1;
        if report.box_upper < exact_boxicity(g, KMAX).unwrap().value.unwrap_or(usize::MAX) {
            failures.push(format!(
                "{:?}: box_upper below exact boxicity",
                g.edges().collect::<Vec<_>>()
            ));
        }
        let girth_ok = girth(g).is_none_or(|c| c >= 5);
        if girth_ok
            != report
                .bound(atbox::cubebound::Formula::Corollary18)
                .is_some()
        {
            failures.push(format!(
                "{:?}: corollary18 applicability",
                g.edges().collect::<Vec<_>>()
            ));
        }
        for b in &report.bounds {
            values += 1;
            if !le(*cub, Some(b.value)) {
                failures.push(format!(
                    "{:?}: cub {cub:?} exceeds {} = {}",
                    g.edges().collect::<Vec<_>>(),
                    b.formula,
                    b.value
                ));
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{checked} AT-free graphs n <= {CHAIN_MAX_N} with psi >= 1, {values} bound values, \
             {settled} with cub > {KMAX} settled at {}",
            KMAX + 1
        ),
    )
}

fn minimality() -> Outcome {
    let mut failures = Vec::new();
    let corpus = at_free_corpus();
    let mut fill_edges = 0;
    let mut triangulations = 0;
    for c in &corpus {
        for h in class_triangulations(&c.graph) {
            triangulations += 1;
            let r = minimality_report(&c.graph, &h).unwrap();
            fill_edges += r.edges.len();
            if !r.is_minimal() || !r.consistent() {
                failures.push(format!(
                    "{}: minimal {} consistent {}",
                    c.label,
                    r.is_minimal(),
                    r.consistent()
                ));
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{} corpus graphs, {triangulations} triangulations, {fill_edges} fill edges certified",
            corpus.len()
        ),
    )
}

fn valid_representations() -> Vec<(Graph, BoxRepresentation)> {
    let mut out = Vec::new();
    for c in at_free_corpus() {
        let g = c.graph;
        if girth(&g).is_none_or(|x| x >= 5) {
            out.push((g.clone(), girth5_boxrep(&g).unwrap()));
        }
        let col = color(&g, ColorMode::Heuristic, 0).unwrap();
        out.push((g.clone(), chromatic_boxrep(&g, &col).unwrap()));
    }
    out
}

fn violation_is_real(g: &Graph, rep: &BoxRepresentation, v: &Violation) -> bool {
    match *v {
        Violation::MissingEdge { u, v, .. } => {
            g.has_edge(u, v) && !common::boxes_intersect(rep, u, v)
        }
        Violation::UnkilledNonEdge { u, v } => {
            !g.has_edge(u, v) && common::boxes_intersect(rep, u, v)
        }
        _ => false,
    }
}

fn fuzz() -> Outcome {
    let mut failures = Vec::new();
    let pool = valid_representations();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut caught, mut preserved) = (0, 0);
    let mut cases = 0;
    while cases < FUZZ_CASES {
        let (g, rep) = &pool[rng.gen_range(0..pool.len())];
        if rep.dimension() == 0 || g.n() < 2 {
            continue;
        }
        let d = rng.gen_range(0..rep.dimension());
        let v = rng.gen_range(0..g.n());
        let other = rep.dims[d].get(rng.gen_range(0..g.n()));
        let base: Rational = if rng.gen_bool(0.5) {
            other.lo
        } else {
            other.hi
        };
        let nudge = rational(rng.gen_range(-2..=2), 4);
        let value = base + nudge;
        let old = *rep.dims[d].get(v);
        let new = if rng.gen_bool(0.5) {
            IntervalQ::new(value, old.hi)
        } else {
            IntervalQ::new(old.lo, value)
        };
        let Some(new) = new.filter(|n| *n != old) else {
            continue;
        };
        cases += 1;
        let mut bad = rep.clone();
        bad.dims[d].intervals[v] = new;
        let truth = pairwise_matches(g, &bad);
        match verify(g, &bad) {
            Ok(()) if truth => preserved += 1,
            Ok(()) => failures.push(format!("case {cases}: verifier missed a change")),
            Err(vs) if !truth && vs.iter().all(|x| violation_is_real(g, &bad, x)) => caught += 1,
            Err(vs) => failures.push(format!("case {cases}: spurious violations {vs:?}")),
        }
    }
    outcome(
        &failures,
        format!("{cases} perturbations: {caught} caught, {preserved} preserved all intersections (rechecked)"),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("girth-5 construction, box <= 2", girth5_construction),
        (
            "color-class construction, box <= chi",
            color_class_construction,
        ),
        ("tight examples", tight_examples),
        (
            "minimal triangulations are (unit) interval",
            minimal_triangulations,
        ),
        (
            "claw number does not grow under triangulation",
            claw_number_monotone,
        ),
        ("chord <= box <= cub chain", ordering_chain),
        ("cubicity bounds", cubicity_bounds),
        ("minimality certificates", minimality),
        ("verifier soundness fuzz", fuzz),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} [{name}] {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
