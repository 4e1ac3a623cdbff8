use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use enriques7_core::codes::{self, BinaryCode, CodeJson, EvenSetRelation};
use enriques7_core::invariants::{cover_invariants, divisibility_filter, noether_chi, CoverData};
use enriques7_core::lattice::{
    euler_budget, fibre_type, index_theorem_violated, zariski_fibre_check, DualGraph, FibreType,
    GramMatrix,
};
use enriques7_core::nodal::{
    certify, collinear_triples, node_images, quotient_node_points, seeded_point,
    surface_through_node, NodalError, NodeSurface, RootMode, SearchOptions,
};
use enriques7_core::scenarios::{
    self, Adversarial, CayleyOptions, PipelineOptions, Stage, StageError,
};
use enriques7_core::symmetry::eigenspace_decomposition;
use enriques7_core::tripoly::TriFormJson;
use enriques7_core::ExactPoint;
use serde::Serialize;
use serde_json::json;

mod render;

#[derive(Parser)]
#[command(
    name = "enriques7",
    version,
    about = "Certificates for G-invariant (2,2,2)-surfaces with an 8-node orbit"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, env = "ENRIQUES7_SEED", default_value_t = 0)]
    seed: u64,
    /// Multistart trials for numerical searches.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Residual and identification tolerance of the singular-point search.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Character eigenspaces of (2,2,2)-forms.
    Eigen,
    /// Build the surface of |T0| singular at a point and along its orbit.
    Construct {
        /// Seed point `x0:x1,y0:y1,z0:z1` over Q(i); random when omitted.
        #[arg(long)]
        point: Option<String>,
        /// Write the surface file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify nodes, fixed-locus conditions and absence of other singularities.
    Verify {
        /// Surface file written by `construct`.
        #[arg(long)]
        surface: PathBuf,
    },
    /// The seven nodes of the quotient.
    Nodes {
        /// Surface file written by `construct`.
        #[arg(long)]
        surface: PathBuf,
        /// Require all fixed points to be Gaussian rational.
        #[arg(long)]
        exact: bool,
    },
    /// Images of the quotient nodes under the T1 forms, and collinear triples.
    Images {
        /// Surface file written by `construct`.
        #[arg(long)]
        surface: PathBuf,
        /// Relative tolerance for collinearity of image points.
        #[arg(long, default_value_t = 1e-6)]
        collinear_tol: f64,
    },
    /// Binary codes of even sets.
    Code {
        #[arg(value_enum)]
        action: CodeAction,
        /// Code file: `{"length": n, "generators": [...]}` or `{"length": n, "relations": [...]}`.
        #[arg(long)]
        file: PathBuf,
        /// Modulus for the weight divisibility check.
        #[arg(long, default_value_t = 4)]
        modulus: u32,
        /// Surface whose node images are compared with the code.
        #[arg(long)]
        surface: Option<PathBuf>,
        /// Relative tolerance for collinearity of image points.
        #[arg(long, default_value_t = 1e-6)]
        collinear_tol: f64,
    },
    /// Gram matrices and dual graphs.
    Lattice {
        #[arg(value_enum)]
        action: LatticeAction,
        /// Gram, graph or fibre-configuration file.
        #[arg(long, conflicts_with = "bundled")]
        file: Option<PathBuf>,
        /// Bundled data: figure1, figure2, fibre-configs, or a lattice name
        /// (e_triple, M, M_prime, N7).
        #[arg(long)]
        bundled: Option<String>,
        /// Orthogonal copies of the lattice.
        #[arg(long, default_value_t = 1)]
        copies: usize,
    },
    /// Invariants of the double cover branched on B and k nodal curves.
    Cover {
        #[command(subcommand)]
        action: Option<CoverAction>,
        /// Self-intersection of the branch curve B.
        #[arg(long, allow_hyphen_values = true)]
        b2: Option<i64>,
        /// Number of nodal curves in the branch locus.
        #[arg(long)]
        nodes: Option<i64>,
        /// Topological Euler number, for the Noether cross-check.
        #[arg(long)]
        euler: Option<i64>,
    },
    /// Exact verification of the Cayley nodal cubic.
    Cayley,
    /// Construct, certify, find nodes, images and code, and tabulate invariants.
    Pipeline {
        /// Seed point `x0:x1,y0:y1,z0:z1` over Q(i); random when omitted
        #[arg(long)]
        point: Option<String>,
        /// Replace the constructed surface by a known bad one.
        #[arg(long, value_enum)]
        adversarial: Option<AdversarialArg>,
        /// Relative tolerance for collinearity of image points.
        #[arg(long, default_value_t = 1e-6)]
        collinear_tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeAction {
    Span,
    Recognize,
    Check,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeAction {
    Disc,
    Sig,
    Zariski,
    Type,
    Budget,
}

#[derive(Subcommand)]
enum CoverAction {
    /// Node counts `k ≤ kmax` with `B² − 2k` divisible by 8.
    Filter {
        /// Self-intersection of the branch curve B.
        #[arg(long, allow_hyphen_values = true)]
        b2: i64,
        /// Largest node count to consider.
        #[arg(long)]
        kmax: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AdversarialArg {
    Reducible,
    FixedLocus,
}

/// Exit status besides input errors.
enum Outcome {
    Success,
    CertificateFailure,
}

/// `println!` that exits quietly when stdout is closed early, as under `head`.
macro_rules! out {
    ($($arg:tt)*) => {
        write_stdout(format_args!($($arg)*))
    };
}

fn write_stdout(args: std::fmt::Arguments) {
    use std::io::Write;
    if let Err(e) = writeln!(std::io::stdout().lock(), "{args}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: writing output: {e}");
        std::process::exit(1);
    }
}

/// A malformed or inadmissible input; exit code 3.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct InputError(String);

fn input(msg: impl Into<String>) -> anyhow::Error {
    InputError(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::CertificateFailure) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some()
                || e.chain()
                    .any(|c| c.is::<serde_json::Error>() || c.is::<std::io::Error>())
            {
                ExitCode::from(3)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn emit<T: Serialize>(g: &Global, value: &T, human: impl FnOnce()) -> Result<()> {
    if g.json {
        out!("{}", serde_json::to_string_pretty(value)?);
    } else {
        human();
    }
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_point(text: &str) -> Result<ExactPoint> {
    text.parse()
        .map_err(|e| input(format!("bad point `{text}`: {e}")))
}

fn load_surface(path: &Path) -> Result<NodeSurface> {
    read_json(path)
}

fn search_options(g: &Global) -> SearchOptions {
    SearchOptions {
        trials: g.trials.unwrap_or(200),
        seed: g.seed,
        tol: g.tol,
        ..SearchOptions::default()
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Eigen => eigen(g),
        Command::Construct { point, out } => construct(g, point.as_deref(), out.as_deref()),
        Command::Verify { surface } => verify(g, &load_surface(surface)?),
        Command::Nodes { surface, exact } => nodes(g, &load_surface(surface)?, *exact),
        Command::Images {
            surface,
            collinear_tol,
        } => images(g, &load_surface(surface)?, *collinear_tol),
        Command::Code {
            action,
            file,
            modulus,
            surface,
            collinear_tol,
        } => code(
            g,
            *action,
            file,
            *modulus,
            surface.as_deref(),
            *collinear_tol,
        ),
        Command::Lattice {
            action,
            file,
            bundled,
            copies,
        } => lattice(g, *action, file.as_deref(), bundled.as_deref(), *copies),
        Command::Cover {
            action,
            b2,
            nodes,
            euler,
        } => cover(g, action.as_ref(), *b2, *nodes, *euler),
        Command::Cayley => cayley(g),
        Command::Pipeline {
            point,
            adversarial,
            collinear_tol,
        } => pipeline(g, point.as_deref(), *adversarial, *collinear_tol),
    }
}

fn eigen(g: &Global) -> Result<Outcome> {
    let spaces = eigenspace_decomposition();
    let value: Vec<_> = spaces
        .iter()
        .map(|s| {
            json!({
                "index": s.index,
                "character": s.character,
                "dimension": s.dimension(),
                "basis": s.basis.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "forms": s.forms().iter().map(TriFormJson::from).collect::<Vec<_>>(),
            })
        })
        .collect();
    emit(g, &value, || {
        out!(
            "dimensions {:?}",
            spaces.iter().map(|s| s.dimension()).collect::<Vec<_>>()
        );
        for s in &spaces {
            out!("{}", render::eigenspace(s));
        }
    })?;
    Ok(Outcome::Success)
}

fn construct(g: &Global, point: Option<&str>, out: Option<&Path>) -> Result<Outcome> {
    let p = match point {
        Some(t) => parse_point(t)?,
        None => seeded_point(g.seed),
    };
    let surface = match surface_through_node(&p) {
        Ok(s) => s,
        Err(e @ NodalError::FixedPoint(_)) => return Err(input(e.to_string())),
        Err(e) => {
            eprintln!("construction failed: {e}");
            return Ok(Outcome::CertificateFailure);
        }
    };
    if let Some(path) = out {
        // The embedded certificate is informational; `verify` recomputes it.
        let mut file = serde_json::to_value(&surface)?;
        file["certificate"] = serde_json::to_value(certify(&surface, &search_options(g)))?;
        let text = serde_json::to_string_pretty(&file)?;
        std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    emit(g, &surface, || out!("{}", render::surface(&surface)))?;
    Ok(Outcome::Success)
}

fn verify(g: &Global, z: &NodeSurface) -> Result<Outcome> {
    let cert = certify(z, &search_options(g));
    let verdict = cert.verdict();
    let value = json!({
        "verdict": verdict.as_ref().err().map(ToString::to_string),
        "exact_verdict": cert.exact_verdict().err().map(|e| e.to_string()),
        "certificate": cert,
    });
    emit(g, &value, || out!("{}", render::certificate(&cert)))?;
    Ok(if verdict.is_ok() {
        Outcome::Success
    } else {
        Outcome::CertificateFailure
    })
}

fn nodes(g: &Global, z: &NodeSurface, exact: bool) -> Result<Outcome> {
    let mode = if exact {
        RootMode::Exact
    } else {
        RootMode::Numeric
    };
    match quotient_node_points(z, mode) {
        Ok(q) => {
            emit(g, &q, || out!("{}", render::quotient_nodes(&q)))?;
            Ok(Outcome::Success)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(Outcome::CertificateFailure)
        }
    }
}

fn images(g: &Global, z: &NodeSurface, tol: f64) -> Result<Outcome> {
    let result = quotient_node_points(z, RootMode::Numeric).and_then(|q| node_images(&q));
    let images = match result {
        Ok(i) => i,
        Err(e) => {
            eprintln!("{e}");
            return Ok(Outcome::CertificateFailure);
        }
    };
    let triples = collinear_triples(&images.points, tol);
    let value = json!({ "images": images, "collinear_triples": triples });
    emit(g, &value, || out!("{}", render::images(&images, &triples)))?;
    Ok(Outcome::Success)
}

#[derive(serde::Deserialize)]
struct CodeFile {
    length: usize,
    #[serde(default)]
    generators: Option<Vec<String>>,
    #[serde(default)]
    relations: Option<Vec<EvenSetRelation>>,
}

fn load_code(path: &Path) -> Result<BinaryCode> {
    let f: CodeFile = read_json(path)?;
    let code = match (f.generators, f.relations) {
        (Some(generators), None) => BinaryCode::try_from(&CodeJson {
            length: f.length,
            generators,
        }),
        (None, Some(relations)) => codes::span(&relations, f.length),
        _ => {
            return Err(input(
                "code file needs exactly one of `generators` and `relations`",
            ))
        }
    };
    code.map_err(|e| input(e.to_string()))
}

fn code(
    g: &Global,
    action: CodeAction,
    file: &Path,
    modulus: u32,
    surface: Option<&Path>,
    tol: f64,
) -> Result<Outcome> {
    let code = load_code(file)?;
    let summary = json!({
        "code": CodeJson::from(&code),
        "dimension": code.dimension(),
        "weight_enumerator": code.weight_enumerator(),
    });
    match action {
        CodeAction::Span => {
            emit(g, &summary, || out!("{}", render::code(&code)))?;
            Ok(Outcome::Success)
        }
        CodeAction::Recognize => {
            let class = code.recognize();
            let value = json!({ "class": class.to_string(), "summary": summary, "unused_indices": code.unused_indices() });
            emit(g, &value, || out!("{}\nclass {class}", render::code(&code)))?;
            Ok(Outcome::Success)
        }
        CodeAction::Check => {
            if modulus == 0 {
                return Err(input("modulus must be positive"));
            }
            let divisible = code.weight_divisibility(modulus);
            let all_ones = (1u32 << code.length()) - 1;
            let consistency = match surface {
                Some(path) => {
                    let z = load_surface(path)?;
                    let images =
                        quotient_node_points(&z, RootMode::Numeric).and_then(|q| node_images(&q));
                    match images {
                        Ok(i) => Some(
                            codes::collinearity_code_consistency(&i.points, &code, tol)
                                .map_err(|e| input(e.to_string()))?,
                        ),
                        Err(e) => {
                            eprintln!("{e}");
                            return Ok(Outcome::CertificateFailure);
                        }
                    }
                }
                None => None,
            };
            let passed = divisible && consistency.as_ref().is_none_or(|c| c.consistent());
            let value = json!({
                "modulus": modulus,
                "weights_divisible": divisible,
                "contains_all_ones": code.contains(all_ones),
                "unused_indices": code.unused_indices(),
                "consistency": consistency,
                "passed": passed,
            });
            emit(g, &value, || {
                out!("{}", render::code(&code));
                out!("weights divisible by {modulus}: {divisible}");
                out!("contains all-ones word: {}", code.contains(all_ones));
                if let Some(c) = &consistency {
                    out!(
                        "predicted triples {:?}, found {:?}, missing {:?}",
                        c.predicted,
                        c.found,
                        c.missing
                    );
                }
            })?;
            Ok(if passed {
                Outcome::Success
            } else {
                Outcome::CertificateFailure
            })
        }
    }
}

/// What a lattice file holds.
enum LatticeInput {
    Gram(GramMatrix),
    Graph(scenarios::FigureData),
    Configs(Vec<scenarios::FibreConfigCase>),
}

fn load_lattice_input(file: Option<&Path>, bundled: Option<&str>) -> Result<LatticeInput> {
    if let Some(name) = bundled {
        return match name {
            "figure1" => Ok(LatticeInput::Graph(scenarios::figure1())),
            "figure2" => Ok(LatticeInput::Graph(scenarios::figure2())),
            "fibre-configs" => Ok(LatticeInput::Configs(scenarios::fibre_configs())),
            other => scenarios::lattices()
                .get(other)
                .cloned()
                .map(LatticeInput::Gram)
                .ok_or_else(|| input(format!("no bundled data named `{other}`"))),
        };
    }
    let path = file.ok_or_else(|| input("give --file or --bundled"))?;
    let value: serde_json::Value = read_json(path)?;
    let parse_err = |e: serde_json::Error| input(format!("{}: {e}", path.display()));
    if value.get("entries").is_some() {
        Ok(LatticeInput::Gram(
            serde_json::from_value(value).map_err(parse_err)?,
        ))
    } else if value.get("graph").is_some() {
        Ok(LatticeInput::Graph(
            serde_json::from_value(value).map_err(parse_err)?,
        ))
    } else if value.get("vertices").is_some() {
        let graph: DualGraph = serde_json::from_value(value).map_err(parse_err)?;
        Ok(LatticeInput::Graph(scenarios::FigureData {
            graph,
            fibre_classes: vec![],
        }))
    } else if let Some(cases) = value.get("cases") {
        Ok(LatticeInput::Configs(
            serde_json::from_value(cases.clone()).map_err(parse_err)?,
        ))
    } else if value.is_array() {
        let pencil: Vec<FibreType> = serde_json::from_value(value).map_err(parse_err)?;
        Ok(LatticeInput::Configs(vec![scenarios::FibreConfigCase {
            case: 0,
            pencils: vec![pencil],
        }]))
    } else {
        Err(input(format!(
            "{}: not a Gram matrix, graph or fibre configuration",
            path.display()
        )))
    }
}

fn gram_of(input_data: &LatticeInput, copies: usize) -> Result<GramMatrix> {
    let base = match input_data {
        LatticeInput::Gram(m) => m.clone(),
        LatticeInput::Graph(f) => f.graph.gram().map_err(|e| input(e.to_string()))?,
        LatticeInput::Configs(_) => return Err(input("fibre configurations have no Gram matrix")),
    };
    let mut m = base.clone();
    for k in 2..=copies {
        m = m.direct_sum(&base, &format!("'{k}"));
    }
    Ok(m)
}

fn lattice(
    g: &Global,
    action: LatticeAction,
    file: Option<&Path>,
    bundled: Option<&str>,
    copies: usize,
) -> Result<Outcome> {
    if copies == 0 {
        return Err(input("--copies must be at least 1"));
    }
    let data = load_lattice_input(file, bundled)?;
    match action {
        LatticeAction::Disc => {
            let m = gram_of(&data, copies)?;
            let value = json!({
                "size": m.size(),
                "determinant": m.determinant().to_string(),
                "discriminant": m.discriminant().to_string(),
            });
            emit(g, &value, || {
                out!("det {}  disc {}", m.determinant(), m.discriminant())
            })?;
            Ok(Outcome::Success)
        }
        LatticeAction::Sig => {
            let m = gram_of(&data, copies)?;
            let (p, n, z) = m.signature();
            let violated = index_theorem_violated(&m);
            let value = json!({ "size": m.size(), "signature": [p, n, z], "index_theorem_violated": violated });
            emit(g, &value, || {
                out!("signature ({p},{n},{z})");
                if violated {
                    out!("{p} positive directions: impossible in the Néron–Severi lattice of a surface");
                }
            })?;
            Ok(Outcome::Success)
        }
        LatticeAction::Zariski | LatticeAction::Type => {
            let LatticeInput::Graph(fig) = data else {
                return Err(input("this action needs a dual graph"));
            };
            let mut graphs = vec![(fig.graph.name.clone(), fig.graph.clone())];
            for class in &fig.fibre_classes {
                let graph = fig.class_graph(class).map_err(|e| input(e.to_string()))?;
                graphs.push((class.name.clone(), graph.support()));
            }
            if !fig.fibre_classes.is_empty() {
                graphs.remove(0);
            }
            let mut all_passed = true;
            let mut rows = Vec::new();
            for (name, graph) in &graphs {
                let row = if matches!(action, LatticeAction::Zariski) {
                    match zariski_fibre_check(graph) {
                        Ok(r) => {
                            all_passed &= r.passed;
                            json!({ "name": name, "report": r })
                        }
                        Err(e) => {
                            all_passed = false;
                            json!({ "name": name, "error": e.to_string() })
                        }
                    }
                } else {
                    match fibre_type(graph) {
                        Ok(r) => json!({ "name": name, "report": r }),
                        Err(e) => {
                            all_passed = false;
                            json!({ "name": name, "error": e.to_string() })
                        }
                    }
                };
                rows.push(row);
            }
            emit(g, &rows, || {
                for row in &rows {
                    out!("{}", render::json_row(row));
                }
            })?;
            Ok(if all_passed {
                Outcome::Success
            } else {
                Outcome::CertificateFailure
            })
        }
        LatticeAction::Budget => {
            let LatticeInput::Configs(cases) = data else {
                return Err(input("budget needs a fibre configuration"));
            };
            let mut ok = true;
            let rows: Vec<_> = cases
                .iter()
                .map(|c| {
                    let pencils: Vec<_> = c
                        .pencils
                        .iter()
                        .map(|p| {
                            let r = euler_budget(p);
                            ok &= r.within_budget;
                            json!({ "fibres": p, "budget": r })
                        })
                        .collect();
                    json!({ "case": c.case, "pencils": pencils })
                })
                .collect();
            emit(g, &rows, || {
                for c in &cases {
                    for p in &c.pencils {
                        let r = euler_budget(p);
                        let tags: Vec<String> = p.iter().map(ToString::to_string).collect();
                        out!(
                            "case {}: {} = {} (≤ 12: {}, = 12: {})",
                            c.case,
                            tags.join(" + "),
                            r.total,
                            r.within_budget,
                            r.saturated
                        );
                    }
                }
            })?;
            Ok(if ok {
                Outcome::Success
            } else {
                Outcome::CertificateFailure
            })
        }
    }
}

fn cover(
    g: &Global,
    action: Option<&CoverAction>,
    b2: Option<i64>,
    nodes: Option<i64>,
    euler: Option<i64>,
) -> Result<Outcome> {
    if let Some(CoverAction::Filter { b2, kmax }) = action {
        let ks = divisibility_filter(*b2, *kmax);
        let value = json!({ "b2": b2, "kmax": kmax, "admissible": ks });
        emit(g, &value, || out!("admissible k: {ks:?}"))?;
        return Ok(Outcome::Success);
    }
    let (b_square, k) = match (b2, nodes) {
        (Some(b), Some(k)) => (b, k),
        _ => return Err(input("cover needs --b2 and --nodes")),
    };
    match cover_invariants(CoverData { b_square, k }) {
        Ok(inv) => {
            let noether = euler.map(|e| noether_chi(inv.k_square, e));
            let value =
                json!({ "b2": b_square, "nodes": k, "invariants": inv, "noether_chi": noether });
            emit(g, &value, || {
                out!(
                    "L² = {}  χ = {}  p_g = {}  q = {}  K² = {}",
                    inv.l_square,
                    inv.chi,
                    inv.p_g,
                    inv.q,
                    inv.k_square
                );
                if let Some(n) = noether {
                    out!(
                        "Noether χ = {}",
                        n.map_or("not integral".to_string(), |c| c.to_string())
                    );
                }
            })?;
            Ok(Outcome::Success)
        }
        Err(e) => {
            let value = json!({ "b2": b_square, "nodes": k, "inadmissible": e.to_string() });
            emit(g, &value, || out!("inadmissible: {e}"))?;
            Ok(Outcome::CertificateFailure)
        }
    }
}

fn cayley(g: &Global) -> Result<Outcome> {
    let opts = CayleyOptions {
        seed: g.seed,
        trials: g.trials.unwrap_or(CayleyOptions::default().trials),
    };
    let report = scenarios::cayley_verify(&opts);
    emit(g, &report, || out!("{}", render::cayley(&report)))?;
    Ok(if report.passed {
        Outcome::Success
    } else {
        Outcome::CertificateFailure
    })
}

fn pipeline(
    g: &Global,
    point: Option<&str>,
    adversarial: Option<AdversarialArg>,
    collinear_tol: f64,
) -> Result<Outcome> {
    let opts = PipelineOptions {
        seed: g.seed,
        point: point.map(parse_point).transpose()?,
        adversarial: adversarial.map(|a| match a {
            AdversarialArg::Reducible => Adversarial::Reducible,
            AdversarialArg::FixedLocus => Adversarial::FixedLocus,
        }),
        search: search_options(g),
        collinear_tol,
    };
    match scenarios::pipeline(&opts) {
        Ok(report) => {
            emit(g, &report, || out!("{}", render::pipeline(&report)))?;
            Ok(Outcome::Success)
        }
        Err(e) => {
            let value = json!({
                "stage": e.stage,
                "error": e.error.to_string(),
                "exact_verdict": e.certificate.as_ref().map(|c| c.exact_verdict().err().map(|x| x.to_string())),
                "certificate": e.certificate,
            });
            if e.stage == Stage::Construct
                && matches!(e.error, StageError::Nodal(NodalError::FixedPoint(_)))
            {
                return Err(anyhow!(InputError(e.to_string())));
            }
            emit(g, &value, || {
                out!("{e}");
                if let Some(Err(x)) = e.certificate.as_ref().map(|c| c.exact_verdict()) {
                    out!("exact verdict: {x}");
                }
            })?;
            Ok(Outcome::CertificateFailure)
        }
    }
}
