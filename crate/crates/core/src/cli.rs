//! The `atbox` command line.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 input error, 3 graph is not
//! AT-free, 4 internal verification failure, 5 refused by a size cap.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::boxrep::{
    box_witness, pipeline_coloring, verify, BoxMethod, BoxrepError, RepresentationFile,
};
use crate::cubebound::{cub_upper, exact, CubeboundError, Param, KMAX_CAP};
use crate::graph::{
    connected_components, from_graph6, generate, girth, parse_edge_list, to_edge_list, to_graph6,
    Family, Graph, GraphFamilySpec,
};
use crate::invariants::{
    claw_number, diametral_dominating_pair, find_asteroidal_triple, find_chordless_cycle,
    is_chordal, is_claw_free, DEFAULT_EXACT_LIMIT,
};
use crate::triangulate::{
    interval_model, minimality_report, minimize_triangulation, split_supergraph,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_AT_FREE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_CAP: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "atbox",
    version,
    about = "Box and cube representations of AT-free graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Extra progress on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file, or `-` for stdin.
    pub input: String,
    /// Input format; by default `.g6`/`.graph6` files are graph6, anything
    /// else an edge list.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Complete,
    Interval,
    Girth5,
    Coloring,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParamArg {
    Box,
    Cub,
    Chord,
}

impl From<ParamArg> for Param {
    fn from(p: ParamArg) -> Self {
        match p {
            ParamArg::Box => Param::Box,
            ParamArg::Cub => Param::Cub,
            ParamArg::Chord => Param::Chord,
        }
    }
}

#[derive(Debug, Args)]
pub struct Caps {
    /// Largest factor count to try (at most 3).
    #[arg(long, default_value_t = KMAX_CAP)]
    pub kmax: usize,
    /// Refuse exact search above this many vertices (at most the oracle's
    /// own cap).
    #[arg(long)]
    pub exact_n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report invariants: girth, AT-freeness, dominating pair, claw number,
    /// coloring, chordal/interval/unit interval.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Build and verify a box representation.
    Boxrep {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Write the representation here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a representation file against a graph.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Representation JSON file.
        representation: PathBuf,
    },
    /// Exact boxicity, cubicity or chordal dimension of a small graph.
    Exact {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        param: ParamArg,
        #[command(flatten)]
        caps: Caps,
    },
    /// Cubicity upper bounds.
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Also run the exact oracles when the graph fits their caps.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Minimal triangulation from the split supergraph of one color class.
    Triangulate {
        #[command(flatten)]
        input: Input,
        /// Color class index.
        #[arg(long, default_value_t = 0)]
        class: usize,
    },
    /// Generate a graph from a family spec.
    Gen {
        /// cycle, path, complete_multipartite, matching_complement, star,
        /// permutation, random_interval or girth5_atfree.
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Self::new(EXIT_INPUT, message)
    }
}

impl From<BoxrepError> for Failure {
    fn from(e: BoxrepError) -> Self {
        let code = match e {
            BoxrepError::NotAtFree { .. } => EXIT_NOT_AT_FREE,
            BoxrepError::NotApplicable { .. } | BoxrepError::GirthTooSmall { .. } => EXIT_INPUT,
            _ => EXIT_INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<CubeboundError> for Failure {
    fn from(e: CubeboundError) -> Self {
        let code = match &e {
            CubeboundError::NotAtFree { .. } => EXIT_NOT_AT_FREE,
            CubeboundError::VertexCap { .. } | CubeboundError::KmaxCap { .. } => EXIT_CAP,
            CubeboundError::Boxrep(b) => Failure::from(b.clone()).code,
            CubeboundError::Invariant(_) => EXIT_INPUT,
            _ => EXIT_INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (program name first) and runs one command. Returns the
/// process exit code.
pub fn run<I, S>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32, Failure> {
    match &cli.command {
        Command::Analyze { input } => analyze(cli, io, input),
        Command::Boxrep {
            input,
            method,
            output,
        } => boxrep(cli, io, input, *method, output.as_deref()),
        Command::Verify {
            input,
            representation,
        } => verify_cmd(cli, io, input, representation),
        Command::Exact { input, param, caps } => exact_cmd(cli, io, input, (*param).into(), caps),
        Command::Bounds { input, exact, caps } => bounds(cli, io, input, *exact, caps),
        Command::Triangulate { input, class } => triangulate(cli, io, input, *class),
        Command::Gen {
            family,
            params,
            seed,
            format,
            output,
        } => gen(io, family, params, *seed, *format, output.as_deref()),
    }
}

fn read_graph(io: &mut Io, input: &Input) -> Result<Graph, Failure> {
    let text = if input.input == "-" {
        let mut s = String::new();
        io.stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.input)
            .map_err(|e| Failure::input(format!("reading {}: {e}", input.input)))?
    };
    let format = input.format.unwrap_or_else(|| {
        let ext = Path::new(&input.input).extension().and_then(|e| e.to_str());
        match ext {
            Some("g6") | Some("graph6") => Format::Graph6,
            _ => Format::Edgelist,
        }
    });
    let parsed = match format {
        Format::Edgelist => parse_edge_list(&text),
        Format::Graph6 => from_graph6(text.trim()),
    };
    parsed.map_err(|e| Failure::input(format!("{}: {e}", input.input)))
}

fn emit(io: &mut Io, text: &str) -> Result<(), Failure> {
    io.out
        .write_all(text.as_bytes())
        .map_err(|e| Failure::input(format!("writing output: {e}")))
}

fn emit_json(io: &mut Io, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    emit(io, &format!("{text}\n"))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure::input(format!("writing {}: {e}", path.display())))
}

fn show<T: std::fmt::Debug>(v: &Option<T>) -> String {
    v.as_ref().map_or("none".into(), |x| format!("{x:?}"))
}

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    m: usize,
    girth: Option<usize>,
    components: usize,
    at_free: bool,
    asteroidal_triple: Option<[usize; 3]>,
    dominating_pair: Option<serde_json::Value>,
    psi: Option<usize>,
    claw: Option<serde_json::Value>,
    chi: usize,
    chi_exact: bool,
    chordal: bool,
    chordless_cycle: Option<Vec<usize>>,
    interval: bool,
    unit_interval: bool,
}

fn analyze(cli: &Cli, io: &mut Io, input: &Input) -> Result<i32, Failure> {
    let g = read_graph(io, input)?;
    let triple = find_asteroidal_triple(&g);
    let at_free = triple.is_none();
    let dominating_pair = if at_free && g.n() > 0 {
        diametral_dominating_pair(&g)
            .ok()
            .map(|d| json!({"x": d.x, "y": d.y, "path": d.path}))
    } else {
        None
    };
    let (psi, claw) = match claw_number(&g) {
        Ok((p, w)) => (
            Some(p),
            w.map(|w| json!({"center": w.center, "leaves": w.leaves})),
        ),
        Err(e) => {
            let _ = writeln!(io.err, "note: {e}");
            (None, None)
        }
    };
    let chordless_cycle = find_chordless_cycle(&g);
    let chordal = chordless_cycle.is_none();
    let interval = chordal && at_free;
    let report = AnalyzeReport {
        n: g.n(),
        m: g.m(),
        girth: girth(&g),
        components: connected_components(&g).len(),
        at_free,
        asteroidal_triple: triple,
        dominating_pair,
        psi,
        claw,
        chi: pipeline_coloring(&g).k,
        chi_exact: g.n() <= DEFAULT_EXACT_LIMIT,
        chordal,
        chordless_cycle,
        interval,
        unit_interval: interval && is_claw_free(&g),
    };
    if cli.json {
        emit_json(io, &report)?;
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "n: {}", report.n);
        let _ = writeln!(s, "m: {}", report.m);
        let _ = writeln!(
            s,
            "girth: {}",
            report.girth.map_or("acyclic".into(), |c| c.to_string())
        );
        let _ = writeln!(s, "components: {}", report.components);
        let _ = writeln!(s, "at_free: {}", report.at_free);
        if let Some(t) = report.asteroidal_triple {
            let _ = writeln!(s, "asteroidal_triple: {t:?}");
        }
        if let Some(d) = &report.dominating_pair {
            let _ = writeln!(
                s,
                "dominating_pair: {} {} path {}",
                d["x"], d["y"], d["path"]
            );
        }
        let _ = writeln!(s, "psi: {}", show(&report.psi));
        if let Some(c) = &report.claw {
            let _ = writeln!(s, "claw: center {} leaves {}", c["center"], c["leaves"]);
        }
        let _ = writeln!(
            s,
            "chi: {} ({})",
            report.chi,
            if report.chi_exact {
                "exact"
            } else {
                "heuristic upper bound"
            }
        );
        let _ = writeln!(s, "chordal: {}", report.chordal);
        if let Some(c) = &report.chordless_cycle {
            let _ = writeln!(s, "chordless_cycle: {c:?}");
        }
        let _ = writeln!(s, "interval: {}", report.interval);
        let _ = writeln!(s, "unit_interval: {}", report.unit_interval);
        emit(io, &s)?;
    }
    Ok(EXIT_OK)
}

fn boxrep(
    cli: &Cli,
    io: &mut Io,
    input: &Input,
    method: MethodArg,
    output: Option<&Path>,
) -> Result<i32, Failure> {
    let g = read_graph(io, input)?;
    let requested = match method {
        MethodArg::Auto => None,
        MethodArg::Complete => Some(BoxMethod::Complete),
        MethodArg::Interval => Some(BoxMethod::Interval),
        MethodArg::Girth5 => Some(BoxMethod::Girth5),
        MethodArg::Coloring => Some(BoxMethod::Coloring),
    };
    let (rep, used) = box_witness(&g, requested)?;
    if let Err(v) = verify(&g, &rep) {
        return Err(Failure::new(
            EXIT_INTERNAL,
            format!(
                "internal error: emitted representation has {} violations",
                v.len()
            ),
        ));
    }
    let file = RepresentationFile::from_representation(&g, &rep, used.name())
        .map_err(|e| Failure::input(e.to_string()))?;
    let summary = format!("{} dimensions ({used}), verified\n", rep.dimension());
    match output {
        Some(path) => {
            write_file(path, &file.to_json())?;
            if cli.json {
                emit_json(
                    io,
                    &json!({"dims": rep.dimension(), "method": used, "verified": true, "output": path}),
                )?;
            } else {
                emit(io, &summary)?;
            }
        }
        None => {
            emit(io, &format!("{}\n", file.to_json()))?;
            let _ = io.err.write_all(summary.as_bytes());
        }
    }
    Ok(EXIT_OK)
}

fn verify_cmd(cli: &Cli, io: &mut Io, input: &Input, rep_path: &Path) -> Result<i32, Failure> {
    let g = read_graph(io, input)?;
    let text = std::fs::read_to_string(rep_path)
        .map_err(|e| Failure::input(format!("reading {}: {e}", rep_path.display())))?;
    let file = RepresentationFile::from_json(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", rep_path.display())))?;
    let rep = file
        .to_representation()
        .map_err(|e| Failure::input(format!("{}: {e}", rep_path.display())))?;
    if rep.n != g.n() {
        return Err(Failure::input(format!(
            "representation has n = {} but the graph has {} vertices",
            rep.n,
            g.n()
        )));
    }
    let result = verify(&g, &rep);
    let violations = result.as_ref().err().cloned().unwrap_or_default();
    if cli.json {
        emit_json(io, &json!({"ok": result.is_ok(), "violations": violations}))?;
    } else if violations.is_empty() {
        emit(io, "Ok\n")?;
    } else {
        let mut s = format!("{} violations\n", violations.len());
        for v in &violations {
            let _ = writeln!(s, "  {v}");
        }
        emit(io, &s)?;
    }
    Ok(if result.is_ok() { EXIT_OK } else { EXIT_VERIFY })
}

fn check_caps(g: &Graph, param: Param, caps: &Caps) -> Result<(), Failure> {
    if let Some(limit) = caps.exact_n {
        if limit > param.n_cap() {
            return Err(Failure::input(format!(
                "--exact-n {limit} exceeds the {param} oracle's cap of {}",
                param.n_cap()
            )));
        }
        if g.n() > limit {
            return Err(Failure::new(
                EXIT_CAP,
                format!(
                    "exact {param} refused: n = {} exceeds --exact-n {limit}",
                    g.n()
                ),
            ));
        }
    }
    Ok(())
}

fn exact_cmd(
    cli: &Cli,
    io: &mut Io,
    input: &Input,
    param: Param,
    caps: &Caps,
) -> Result<i32, Failure> {
    let g = read_graph(io, input)?;
    check_caps(&g, param, caps)?;
    let r = exact(&g, param, caps.kmax)?;
    if cli.verbose > 0 {
        let _ = writeln!(io.err, "{}", r.budget_note());
    }
    let method = format!("exact_{param}");
    let witness = match (&r.models, r.value) {
        (_, None) => serde_json::Value::Null,
        (Some(rep), _) => serde_json::to_value(
            RepresentationFile::from_representation(&g, rep, &method)
                .map_err(|e| Failure::input(e.to_string()))?,
        )
        .expect("serializable"),
        (None, _) => json!({
            "factors": r.factors.iter().map(|f| f.edges().collect::<Vec<_>>()).collect::<Vec<_>>()
        }),
    };
    if cli.json {
        emit_json(
            io,
            &json!({"param": param, "kmax": r.kmax, "value": r.value, "note": r.budget_note(), "witness": witness}),
        )?;
    } else {
        let mut s = match r.value {
            Some(k) => format!("{param} = {k}\n"),
            None => format!("{param} > {} (exceeds kmax)\n", r.kmax),
        };
        if !witness.is_null() {
            let _ = writeln!(
                s,
                "{}",
                serde_json::to_string_pretty(&witness).expect("serializable")
            );
        }
        emit(io, &s)?;
    }
    Ok(EXIT_OK)
}

fn bounds(
    cli: &Cli,
    io: &mut Io,
    input: &Input,
    with_exact: bool,
    caps: &Caps,
) -> Result<i32, Failure> {
    let g = read_graph(io, input)?;
    let mut report = cub_upper(&g)?;
    if with_exact {
        if caps.kmax > KMAX_CAP {
            return Err(CubeboundError::KmaxCap {
                kmax: caps.kmax,
                cap: KMAX_CAP,
            }
            .into());
        }
        for p in [Param::Box, Param::Chord, Param::Cub] {
            check_caps(&g, p, caps)
                .or_else(|f| if f.code == EXIT_CAP { Ok(()) } else { Err(f) })?;
        }
        if caps.exact_n.is_none_or(|limit| g.n() <= limit) {
            report.fill_exact(&g, caps.kmax)?;
        }
    }
    if cli.json {
        emit_json(io, &report)?;
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "psi: {} (ceil log2 = {})", report.psi, report.log2_psi);
        let _ = writeln!(s, "box_upper: {} ({})", report.box_upper, report.box_method);
        for b in &report.bounds {
            let _ = writeln!(s, "{}: {}", b.formula, b.value);
        }
        let _ = writeln!(s, "cub_upper: {} ({})", report.cub_upper, report.formula);
        for (name, e) in [
            ("box", &report.exact.boxicity),
            ("cub", &report.exact.cubicity),
            ("chord", &report.exact.chordality),
        ] {
            if let Some(e) = e {
                let v = e.value.map_or(format!("> {}", e.kmax), |v| v.to_string());
                let _ = writeln!(s, "exact {name}: {v} [{}]", e.note);
            }
        }
        emit(io, &s)?;
    }
    Ok(EXIT_OK)
}

fn triangulate(cli: &Cli, io: &mut Io, input: &Input, class: usize) -> Result<i32, Failure> {
    let g = read_graph(io, input)?;
    let c = pipeline_coloring(&g);
    let split = split_supergraph(&g, &c, class).map_err(|e| Failure::input(e.to_string()))?;
    let fill = minimize_triangulation(&g, &split)
        .map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    let h = fill.graph();
    let report =
        minimality_report(&g, &h).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    let model = interval_model(&h).ok();
    if !report.is_minimal() {
        return Err(Failure::new(
            EXIT_INTERNAL,
            "internal error: triangulation is not minimal",
        ));
    }
    if cli.json {
        let intervals = model.as_ref().map(|m| {
            m.intervals
                .iter()
                .map(|iv| [iv.lo.to_string(), iv.hi.to_string()])
                .collect::<Vec<_>>()
        });
        emit_json(
            io,
            &json!({
                "colors": c.k,
                "class": class,
                "fill": fill.fill,
                "minimal": report.is_minimal(),
                "minimality": report,
                "chordal": is_chordal(&h),
                "interval": model.is_some(),
                "interval_model": intervals,
                "edges": h.edges().collect::<Vec<_>>(),
            }),
        )?;
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "class {class} of {} colors", c.k);
        let _ = writeln!(s, "fill: {:?}", fill.fill);
        let _ = writeln!(s, "minimal: {}", report.is_minimal());
        match &model {
            Some(m) => {
                let _ = writeln!(s, "interval model:");
                for (v, iv) in m.intervals.iter().enumerate() {
                    let _ = writeln!(s, "  {v}: {iv}");
                }
            }
            None => {
                let _ = writeln!(s, "interval: false");
            }
        }
        s.push_str(&to_edge_list(&h));
        emit(io, &s)?;
    }
    Ok(EXIT_OK)
}

fn gen(
    io: &mut Io,
    family: &str,
    params: &[usize],
    seed: u64,
    format: Format,
    output: Option<&Path>,
) -> Result<i32, Failure> {
    let family: Family = family
        .parse()
        .map_err(|e: crate::graph::GraphError| Failure::input(e.to_string()))?;
    let spec = GraphFamilySpec::new(family, params.to_vec(), seed);
    let g = generate(&spec).map_err(|e| Failure::input(e.to_string()))?;
    let text = match format {
        Format::Edgelist => to_edge_list(&g),
        Format::Graph6 => format!(
            "{}\n",
            to_graph6(&g).map_err(|e| Failure::input(e.to_string()))?
        ),
    };
    let _ = writeln!(io.err, "# gen {family} {params:?} --seed {seed}");
    match output {
        Some(path) => write_file(path, &text)?,
        None => emit(io, &text)?,
    }
    Ok(EXIT_OK)
}
