//! `matchfield` command-line front end.
//!
//! Exit codes: 0 when the command succeeds (and any check it runs passes),
//! 1 when a mathematical check fails, 2 for invalid input or an exceeded
//! budget.

use std::cmp::Reverse;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use matchfield::cellular::{check_layer_containment, edge_label, graph_g, is_cointerval, relabel_f};
use matchfield::groebner::{attainable_initial_supports, verify_initial_ideal, MinorFailure};
use matchfield::matching_field::{generators, sort_generators, tie_break_precedence, weight_rows};
use matchfield::resolution::{betti_from_certificate, betti_oracle, linear_quotients_certificate};
use matchfield::toric::{flatness_check, kernel_slice, k_subsets, plucker_quadric, PluckerMap};
use matchfield::{algebra::minor_expand, matching_field::matching_ideal};
use matchfield::{BlockStructure, Error, Monomial, VariableId};
use serde_json::{json, Value};

const THREADS_ENV: &str = "MATCHFIELD_THREADS";

#[derive(Debug, Parser)]
#[command(name = "matchfield", version, about = "Block-diagonal matching fields of 3 x n matrices")]
struct Cli {
    /// Number of columns.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Block sizes, comma separated (defaults to a single block of size n).
    #[arg(long, global = true, value_delimiter = ',')]
    blocks: Option<Vec<usize>>,
    /// Base weight of the first two z columns.
    #[arg(long, global = true, default_value_t = 1)]
    w0: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the generators of M_a in block order.
    Generators,
    /// Print the weight matrix and tie-break precedence.
    Weights,
    /// Check that the maximal minors degenerate to M_a.
    Verify,
    /// Betti numbers from linear quotients.
    Betti {
        /// Also run the homology oracle and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Build G_a and test the co-interval property.
    Cointerval,
    /// Degree-wise kernel of the monomial Plücker map.
    Kernel {
        /// Highest degree to compute.
        #[arg(long, default_value_t = 2)]
        dmax: usize,
        /// Use the diagonal map of a generic K x n matrix instead of M_a.
        #[arg(long, value_name = "K")]
        diagonal: Option<usize>,
    },
    /// Count the attainable initial supports of a polynomial.
    Supports {
        /// Three-term Plücker relation of Gr(K, N) on columns 1..4 (K = 2).
        #[arg(long, num_args = 2, value_names = ["K", "N"])]
        plucker_quadric: Option<Vec<usize>>,
        /// Maximal minor on columns i,j,k of the 3 x n matrix.
        #[arg(long, value_delimiter = ',')]
        minor: Option<Vec<usize>>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Generators => "generators",
            Command::Weights => "weights",
            Command::Verify => "verify",
            Command::Betti { .. } => "betti",
            Command::Cointerval => "cointerval",
            Command::Kernel { .. } => "kernel",
            Command::Supports { .. } => "supports",
        }
    }
}

/// A command's result in every output format it supports.
struct Outcome {
    result: Value,
    text: String,
    csv: Option<String>,
    ok: bool,
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<Outcome, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        match v.parse::<usize>() {
            Ok(t) if t > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            _ => {
                eprintln!("error: {THREADS_ENV} must be a positive integer, got {v:?}");
                return ExitCode::from(2);
            }
        }
    }
    match run(&cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    if cli.w0 == 0 {
        return Err(Failure::Input("--w0 must be at least 1".into()));
    }
    let outcome = match &cli.command {
        Command::Generators => cmd_generators(&structure(cli)?),
        Command::Weights => cmd_weights(&structure(cli)?, cli.w0),
        Command::Verify => cmd_verify(&structure(cli)?, cli.w0),
        Command::Betti { oracle } => cmd_betti(&structure(cli)?, *oracle),
        Command::Cointerval => cmd_cointerval(&structure(cli)?),
        Command::Kernel { dmax, diagonal } => cmd_kernel(cli, *dmax, *diagonal),
        Command::Supports { plucker_quadric, minor } => cmd_supports(cli, plucker_quadric.as_deref(), minor.as_deref()),
    }?;
    let rendered = match cli.format {
        Format::Json => {
            let input = match (&cli.command, cli.n) {
                (Command::Supports { .. } | Command::Kernel { .. }, None) => Value::Null,
                _ => {
                    let a = structure(cli)?;
                    json!({ "n": a.n(), "blocks": a.parts(), "w0": cli.w0 })
                }
            };
            let doc = json!({
                "input": input,
                "command": cli.command.name(),
                "result": outcome.result,
                "version": env!("CARGO_PKG_VERSION"),
            });
            format!("{}\n", serde_json::to_string(&doc).expect("values serialise"))
        }
        Format::Text => outcome.text,
        Format::Csv => outcome
            .csv
            .ok_or_else(|| Failure::Input(format!("csv output is not available for `{}`", cli.command.name())))?,
    };
    Ok((rendered, outcome.ok))
}

fn structure(cli: &Cli) -> Result<BlockStructure, Failure> {
    let n = cli.n.ok_or_else(|| Failure::Input("--n is required".into()))?;
    let parts = cli.blocks.clone().unwrap_or_else(|| vec![n]);
    let a = BlockStructure::with_n(n, parts)?;
    if n < 3 {
        return Err(Error::TooSmall(n).into());
    }
    Ok(a)
}

fn triple_json(t: (usize, usize, usize)) -> Value {
    json!([t.0, t.1, t.2])
}

fn cmd_generators(a: &BlockStructure) -> CmdResult {
    let n = a.n();
    let order = sort_generators(a)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut csv = String::from("subset,x,y,z,monomial\n");
    for t in &order {
        let s = t.subset();
        let mono = t.monomial(n).display_xyz(n);
        rows.push(json!({ "subset": s, "triple": triple_json(t.as_tuple()), "monomial": mono }));
        let _ = writeln!(text, "{:?}\t{}", s, mono);
        let _ = writeln!(csv, "{}{}{},{},{},{},{}", s[0], s[1], s[2], t.x, t.y, t.z, mono);
    }
    Ok(Outcome { result: json!({ "count": order.len(), "generators": rows }), text, csv: Some(csv), ok: true })
}

fn cmd_weights(a: &BlockStructure, w0: u64) -> CmdResult {
    let rows = weight_rows(a, w0)?;
    let precedence: Vec<String> = tie_break_precedence(a).iter().map(VariableId::to_string).collect();
    let mut text = String::new();
    let mut csv = String::from("row");
    for i in 1..=a.n() {
        let _ = write!(csv, ",{i}");
    }
    csv.push('\n');
    for (name, row) in ["x", "y", "z"].iter().zip(rows.as_matrix()) {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        let _ = writeln!(text, "{name}: {}", cells.join(" "));
        let _ = writeln!(csv, "{name},{}", cells.join(","));
    }
    let _ = writeln!(text, "precedence: {}", precedence.join(" > "));
    let [x, y, z] = rows.as_matrix();
    Ok(Outcome { result: json!({ "x": x, "y": y, "z": z, "precedence": precedence }), text, csv: Some(csv), ok: true })
}

fn cmd_verify(a: &BlockStructure, w0: u64) -> CmdResult {
    let n = a.n();
    let r = verify_initial_ideal(a, w0)?;
    let minor_failures: Vec<Value> = r
        .minor_failures
        .iter()
        .map(|f| match f {
            MinorFailure::WeightTie { cols, tied } => json!({
                "columns": cols,
                "kind": "weightTie",
                "terms": tied.iter().map(|m| m.display_xyz(n)).collect::<Vec<_>>(),
            }),
            MinorFailure::WrongTerm { cols, expected, found } => json!({
                "columns": cols,
                "kind": "wrongTerm",
                "expected": expected.monomial(n).display_xyz(n),
                "found": found.display_xyz(n),
            }),
        })
        .collect();
    let pair_failures: Vec<Value> = r
        .pair_failures
        .iter()
        .map(|w| json!({ "pair": [w.i, w.j], "residual": w.residual.display_xyz(n) }))
        .collect();
    let passed = r.passed();
    let text = format!(
        "per-minor initial terms: {}\nS-pairs reduced to zero: {}/{}\nleading terms match M_a: {}\ninitial ideal equals M_a: {}\n",
        r.per_minor_initial_ok, r.s_pairs_reduced_to_zero, r.s_pairs_total, r.leading_terms_match, passed
    );
    let result = json!({
        "perMinorInitialOk": r.per_minor_initial_ok,
        "sPairsTotal": r.s_pairs_total,
        "sPairsReducedToZero": r.s_pairs_reduced_to_zero,
        "leadingTermsMatch": r.leading_terms_match,
        "initialIdealEqualsMa": passed,
        "minorFailures": minor_failures,
        "pairFailures": pair_failures,
    });
    Ok(Outcome { result, text, csv: None, ok: passed })
}

fn cmd_betti(a: &BlockStructure, oracle: bool) -> CmdResult {
    let n = a.n();
    let order: Vec<Monomial> = sort_generators(a)?.iter().map(|t| t.monomial(n)).collect();
    let cert = linear_quotients_certificate(&order);
    let mut result = json!({ "linearQuotients": cert.is_linear, "setSizes": cert.set_sizes() });
    let mut text = format!("linear quotients: {}\n", cert.is_linear);
    let mut csv = String::from("i,betti\n");
    let mut ok = cert.is_linear;
    if let Some((j, m)) = &cert.first_failure {
        result["firstFailure"] = json!({ "index": j, "generator": m.display_xyz(n) });
    }
    if cert.is_linear {
        let betti = betti_from_certificate(&cert)?;
        for (i, b) in betti.values().iter().enumerate() {
            let _ = writeln!(csv, "{i},{b}");
        }
        let _ = writeln!(text, "betti: {betti}");
        result["betti"] = json!(betti.values());
        if oracle {
            let check = betti_oracle(&matching_ideal(a)?)?;
            let _ = writeln!(text, "oracle: {check}");
            result["oracle"] = json!(check.values());
            ok &= check == betti;
        }
    }
    Ok(Outcome { result, text, csv: ok.then_some(csv), ok })
}

fn cmd_cointerval(a: &BlockStructure) -> CmdResult {
    let f = relabel_f(a)?;
    let g = graph_g(a)?;
    // edges listed layer by layer: z ascending, then block order within a layer
    let mut gens = generators(a)?;
    gens.sort_by_key(|t| (t.z, a.block_of(t.y), Reverse(t.y), t.x));
    let edges: Vec<String> = gens
        .iter()
        .map(|t| {
            let mut e: Vec<usize> =
                t.variables().iter().map(|&v| f.label(v).expect("relabelling is total")).collect();
            e.sort_unstable();
            edge_label(&e)
        })
        .collect();
    let labels: serde_json::Map<String, Value> =
        f.assignments().iter().map(|(v, l)| (v.to_string(), json!(l))).collect();
    let verdict = is_cointerval(&g);
    let layers = check_layer_containment(a)?;
    let mut result = json!({
        "cointerval": verdict.is_ok(),
        "G_edges": edges,
        "labels": labels,
        "mkl": [f.m, f.k, f.l],
        "layerContainment": layers.holds(),
    });
    if let Err(w) = &verdict {
        result["witness"] = json!({ "path": w.path, "i": w.i, "j": w.j, "edge": w.edge });
    }
    let mut text = format!("co-interval: {}\nG_a edges: {}\n", verdict.is_ok(), edges.join(" "));
    if let Err(w) = &verdict {
        let _ = writeln!(text, "witness: layer {:?}, {}-layer not inside {}-layer (edge {:?})", w.path, w.j, w.i, w.edge);
    }
    let ok = verdict.is_ok() && layers.holds();
    Ok(Outcome { result, text, csv: None, ok })
}

fn cmd_kernel(cli: &Cli, dmax: usize, diagonal: Option<usize>) -> CmdResult {
    if dmax == 0 {
        return Err(Failure::Input("--dmax must be at least 1".into()));
    }
    let (map, k, n, kind) = match diagonal {
        Some(k) => {
            let n = cli.n.ok_or_else(|| Failure::Input("--n is required".into()))?;
            (PluckerMap::diagonal(k, n)?, k, n, "diagonal")
        }
        None => {
            let a = structure(cli)?;
            (PluckerMap::from_matching_field(&a)?, 3, a.n(), "matchingField")
        }
    };
    let mut degrees = Vec::new();
    let mut text = String::new();
    for d in 1..=dmax {
        let s = kernel_slice(&map, d)?;
        let binomials: Vec<String> = s
            .binomials
            .iter()
            .map(|(u, v)| format!("{} - {}", map.display_monomial(u), map.display_monomial(v)))
            .collect();
        let _ = writeln!(
            text,
            "degree {d}: dimension {} ({} monomials, {} images), {} new minimal generators",
            s.dimension, s.monomials, s.images, s.new_minimal_generators
        );
        for b in &binomials {
            let _ = writeln!(text, "  {b}");
        }
        degrees.push(json!({
            "degree": d,
            "dimension": s.dimension,
            "monomials": s.monomials,
            "images": s.images,
            "newMinimalGenerators": s.new_minimal_generators,
            "binomials": binomials,
        }));
    }
    let flat = flatness_check(&map, k, n, dmax)?;
    let table: Vec<Value> = flat
        .rows
        .iter()
        .map(|(d, got, want)| json!({ "degree": d, "images": got, "hilbert": want.to_string() }))
        .collect();
    let _ = writeln!(text, "hilbert function matches: {}", flat.is_flat());
    let result = json!({ "map": kind, "degrees": degrees, "flat": flat.is_flat(), "hilbert": table });
    Ok(Outcome { result, text, csv: None, ok: flat.is_flat() })
}

fn cmd_supports(cli: &Cli, quadric: Option<&[usize]>, minor: Option<&[usize]>) -> CmdResult {
    let (poly, names): (_, Box<dyn Fn(usize) -> String>) = match (quadric, minor) {
        (Some(&[k, n]), None) => {
            if k != 2 || n < 4 {
                return Err(Failure::Input(format!("only Gr(2, n) quadrics with n >= 4 are supported, got Gr({k}, {n})")));
            }
            let pairs = k_subsets(n, 2);
            (plucker_quadric(n, [1, 2, 3, 4])?, Box::new(move |i| format!("p{}", edge_label(&pairs[i]))))
        }
        (None, Some(cols)) => {
            let n = cli.n.ok_or_else(|| Failure::Input("--n is required with --minor".into()))?;
            let cols: [usize; 3] = cols
                .try_into()
                .map_err(|_| Failure::Input("--minor takes exactly three columns".into()))?;
            (minor_expand(n, cols)?, Box::new(move |i| VariableId::from_position(n, i).to_string()))
        }
        _ => return Err(Failure::Input("give exactly one of --plucker-quadric K N or --minor i,j,k".into())),
    };
    let supports = attainable_initial_supports(&poly)?;
    let rendered: Vec<Vec<String>> =
        supports.iter().map(|s| s.iter().map(|m| m.display_with(&names)).collect()).collect();
    let mut text = format!("{} attainable initial supports\n", supports.len());
    for s in &rendered {
        let _ = writeln!(text, "  {{{}}}", s.join(", "));
    }
    Ok(Outcome { result: json!({ "count": supports.len(), "supports": rendered }), text, csv: None, ok: true })
}
