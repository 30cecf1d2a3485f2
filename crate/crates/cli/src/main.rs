use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use raag_core::corpus::{corpus, default_cache_dir};
use raag_core::decomposition::build_graph_of_groups;
use raag_core::factor::SearchConfig;
use raag_core::generators::{
    enumerate_aut1_generators, enumerate_laurence_generators, realize_aut1, realize_laurence,
};
use raag_core::report::{
    corpus_report, factor_report, verify15_report, CorpusConfig, SCHEMA_VERSION,
};
use raag_core::word::{format_word, normal_form, parse_word};
use raag_core::{build_flags_hypergraph, parse_graph, FlagsHypergraph, SimpleGraph};

#[derive(Parser)]
#[command(
    name = "raag",
    version,
    about = "Flags hypergraphs and automorphism generators of right-angled Artin groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Conjugator radius for equality modulo inner automorphisms.
    #[arg(long, global = true, default_value_t = 4)]
    radius: usize,

    /// Maximum composition depth when searching for witnesses.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    depth: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest vertex count in the corpus.
    #[arg(long, global = true, default_value_t = 6)]
    max_n: usize,

    /// Smallest vertex count in the corpus.
    #[arg(long, global = true, default_value_t = 3)]
    min_n: usize,

    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "structured")]
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Vertex classes, class order and flags hypergraph.
    Analyze { graph: PathBuf },
    /// Graph-of-groups decomposition for every hyperedge.
    Decompose { graph: PathBuf },
    /// Classical and per-hyperedge generators with their images.
    Gens { graph: PathBuf },
    /// Normal form of a word.
    Nf { graph: PathBuf, word: String },
    /// Route every classical generator to per-hyperedge witnesses and verify.
    Factor { graph: PathBuf },
    /// Kernel-preservation checks for every non-abelian hyperedge quotient.
    Verify15 { graph: PathBuf },
    /// Run every check over all connected graphs up to isomorphism.
    Corpus,
}

struct Failure {
    code: u8,
    message: String,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

struct Output {
    text: String,
    /// Verification failures; nonzero exits with status 1.
    failures: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // ignore failure: the pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &out.text),
                None => io::stdout().write_all(out.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.failures > 0 {
                eprintln!("{} verification failure(s)", out.failures);
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<SimpleGraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            message: format!("{}: {e}", path.display()),
        })?
    };
    let g = parse_graph(&text).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })?;
    if g.is_empty() {
        return Err(Failure {
            code: 2,
            message: format!("{}: graph is empty", path.display()),
        });
    }
    Ok(g)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn no_dot(command: &str) -> Failure {
    Failure {
        code: 2,
        message: format!("dot output is not available for `{command}`"),
    }
}

fn config(cli: &Cli) -> SearchConfig {
    SearchConfig {
        radius: cli.radius,
        depth: cli.depth as usize,
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let ok = |text| Ok(Output { text, failures: 0 });
    match &cli.command {
        Command::Analyze { graph } => {
            let g = read_graph(graph)?;
            let fh = build_flags_hypergraph(&g)?;
            let components = g.components().len();
            if components > 1 {
                eprintln!(
                    "warning: graph has {components} components; each is analyzed separately"
                );
            }
            match cli.format {
                Format::Text => ok(analyze_text(&g, &fh)),
                Format::Json => ok(to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "analyze",
                    "graph": g.to_document(),
                    "components": g.components().into_iter().map(|c| g.format_set(c)).collect::<Vec<_>>(),
                    "flags": fh.to_document(&g),
                }))?),
                Format::Dot => ok(fh.to_dot(&g)),
            }
        }
        Command::Decompose { graph } => {
            let g = read_graph(graph)?;
            let fh = build_flags_hypergraph(&g)?;
            let gogs: Vec<_> = fh
                .hyperedges
                .iter()
                .map(|e| build_graph_of_groups(&g, &fh, e))
                .collect();
            match cli.format {
                Format::Text => {
                    let mut s = String::new();
                    for (e, gog) in fh.hyperedges.iter().zip(&gogs) {
                        let doc = gog.to_document(&g);
                        let _ = writeln!(s, "{} ({})", fh.describe(&g, e), e.kind);
                        for vg in &doc.vertex_groups {
                            let _ = writeln!(s, "  vertex group: {}", serde_json::to_string(vg)?);
                        }
                        let _ = writeln!(s, "  loops: s={} t={}", gog.loops_s, gog.loops_t);
                        let _ = writeln!(s, "  killed: {{{}}}", g.format_set(gog.killed));
                        let _ =
                            writeln!(s, "  edge groups trivial: {}", doc.edge_stabilizers_trivial);
                    }
                    ok(s)
                }
                Format::Json => ok(to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "decompose",
                    "decompositions": gogs.iter().map(|x| x.to_document(&g)).collect::<Vec<_>>(),
                }))?),
                Format::Dot => ok(gogs.iter().map(|x| x.to_dot(&g)).collect()),
            }
        }
        Command::Gens { graph } => {
            let g = read_graph(graph)?;
            let fh = build_flags_hypergraph(&g)?;
            let laurence = enumerate_laurence_generators(&g)?;
            let aut1 = enumerate_aut1_generators(&g, &fh);
            match cli.format {
                Format::Dot => Err(no_dot("gens")),
                Format::Text => {
                    let mut s = format!("classical generators ({})\n", laurence.len());
                    for gen in &laurence {
                        let a = realize_laurence(&g, gen)?;
                        let _ = writeln!(s, "  {}: {}", gen.id(&g), images(&g, &a));
                    }
                    let _ = writeln!(s, "per-hyperedge generators ({})", aut1.len());
                    for gen in &aut1 {
                        let a = realize_aut1(&g, &fh, gen)?;
                        let _ = writeln!(s, "  {}: {}", gen.id(&g), images(&g, &a));
                    }
                    ok(s)
                }
                Format::Json => {
                    let laurence_docs = laurence
                        .iter()
                        .map(|gen| {
                            Ok(json!({
                                "id": gen.id(&g),
                                "kind": gen.kind_name(),
                                "automorphism": realize_laurence(&g, gen)?.to_document(&g),
                            }))
                        })
                        .collect::<Result<Vec<_>, raag_core::Error>>()?;
                    let aut1_docs = aut1
                        .iter()
                        .map(|gen| {
                            Ok(json!({
                                "id": gen.id(&g),
                                "hyperedge": gen.hyperedge,
                                "kind": gen.kind_name(),
                                "automorphism": realize_aut1(&g, &fh, gen)?.to_document(&g),
                            }))
                        })
                        .collect::<Result<Vec<_>, raag_core::Error>>()?;
                    ok(to_json(&json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": "gens",
                        "laurence": laurence_docs,
                        "aut1": aut1_docs,
                    }))?)
                }
            }
        }
        Command::Nf { graph, word } => {
            let g = read_graph(graph)?;
            let w = parse_word(&g, word)?;
            let nf = normal_form(&g, &w)?;
            match cli.format {
                Format::Dot => Err(no_dot("nf")),
                Format::Text => ok(format!("{}\n", nf.display(&g))),
                Format::Json => ok(to_json(&json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": "nf",
                    "word": format_word(&g, &w),
                    "normal_form": nf.display(&g).to_string(),
                    "is_identity": nf.is_empty(),
                }))?),
            }
        }
        Command::Factor { graph } => {
            let g = read_graph(graph)?;
            let fh = build_flags_hypergraph(&g)?;
            let name = graph.display().to_string();
            let rep = factor_report(&name, &g, &fh, config(cli))?;
            let text = match cli.format {
                Format::Dot => return Err(no_dot("factor")),
                Format::Json => to_json(
                    &json!({ "schema_version": SCHEMA_VERSION, "command": "factor", "report": rep }),
                )?,
                Format::Text => {
                    let mut s = String::new();
                    for r in &rep.records {
                        let mark = match (r.status, r.is_failure()) {
                            ("symmetry-residue", _) => "residue",
                            (_, false) => "ok",
                            (_, true) => "FAIL",
                        };
                        let _ = write!(s, "{mark:8} {}", r.generator);
                        if !r.terms.is_empty() {
                            let _ = write!(s, " = {}", r.terms.join(" ∘ "));
                        }
                        if let Some(d) = &r.diagnostic {
                            let _ = write!(s, " [{d}]");
                        }
                        s.push('\n');
                    }
                    let _ = writeln!(
                        s,
                        "{} verified, {} symmetry residue(s), {} failure(s) (radius {}, depth {})",
                        rep.verified,
                        rep.symmetry_residues,
                        rep.failures,
                        rep.config.radius,
                        rep.config.depth
                    );
                    s
                }
            };
            Ok(Output {
                text,
                failures: rep.failures,
            })
        }
        Command::Verify15 { graph } => {
            let g = read_graph(graph)?;
            let fh = build_flags_hypergraph(&g)?;
            let rep = verify15_report(
                &graph.display().to_string(),
                &g,
                &fh,
                cli.format == Format::Json,
            )?;
            let text = match cli.format {
                Format::Dot => return Err(no_dot("verify15")),
                Format::Json => to_json(
                    &json!({ "schema_version": SCHEMA_VERSION, "command": "verify15", "report": rep }),
                )?,
                Format::Text => {
                    let mut s = String::new();
                    for &id in &rep.checked_hyperedges {
                        let _ = writeln!(s, "checked  {}", fh.describe(&g, &fh.hyperedges[id]));
                    }
                    for &id in &rep.excluded_hyperedges {
                        let e = &fh.hyperedges[id];
                        let _ =
                            writeln!(s, "excluded {} (abelian: {})", fh.describe(&g, e), e.kind);
                    }
                    for r in &rep.records {
                        let _ = writeln!(
                            s,
                            "FAIL E{} {}: kernel preserved {}, induced bijective {}",
                            r.hyperedge, r.generator, r.kernel_preserved, r.induced_bijective
                        );
                    }
                    let _ = writeln!(s, "{} check(s), {} failure(s)", rep.checks, rep.failures);
                    s
                }
            };
            Ok(Output {
                text,
                failures: rep.failures,
            })
        }
        Command::Corpus => {
            if cli.min_n > cli.max_n {
                return Err(Failure {
                    code: 2,
                    message: "--min-n exceeds --max-n".into(),
                });
            }
            let graphs = corpus(cli.min_n, cli.max_n, Some(&default_cache_dir()))?;
            let cfg = CorpusConfig {
                min_n: cli.min_n,
                max_n: cli.max_n,
                search: config(cli),
            };
            let rep = corpus_report(&graphs, cfg, cli.jobs)?;
            let text = match cli.format {
                Format::Dot => return Err(no_dot("corpus")),
                Format::Json => to_json(&rep)?,
                Format::Text => {
                    let mut s = String::new();
                    for gs in rep.graphs.iter().filter(|x| x.failures > 0) {
                        let _ = writeln!(s, "FAIL {} ({} failure(s))", gs.name, gs.failures);
                        for r in &gs.routing_failures {
                            let _ = writeln!(
                                s,
                                "  routing {}: {}",
                                r.generator,
                                r.diagnostic.as_deref().unwrap_or("not verified")
                            );
                        }
                        for r in &gs.kernel_failures {
                            let _ = writeln!(s, "  kernel E{} {}", r.hyperedge, r.generator);
                        }
                        for id in &gs.invalid_generators {
                            let _ = writeln!(s, "  invalid generator {id}");
                        }
                    }
                    let m = &rep.summary;
                    let _ = writeln!(
                        s,
                        "graphs: {} (n = {}..={})",
                        m.graphs, cli.min_n, cli.max_n
                    );
                    let _ = writeln!(
                        s,
                        "generators: {} classical, {} per-hyperedge, {} invalid",
                        m.laurence_generators, m.aut1_generators, m.invalid_generators
                    );
                    let _ = writeln!(
                        s,
                        "routing: {} verified, {} symmetry residue(s), {} failure(s); max witness length {}, max inner radius {}",
                        m.verified, m.symmetry_residues, m.routing_failures, m.max_witness_length, m.max_witness_radius
                    );
                    let _ = writeln!(
                        s,
                        "kernel checks: {} run, {} failure(s)",
                        m.kernel_checks, m.kernel_failures
                    );
                    let _ = writeln!(
                        s,
                        "decompositions: {} inconsistent",
                        m.inconsistent_decompositions
                    );
                    let _ = writeln!(s, "failures: {}", m.failures);
                    s
                }
            };
            Ok(Output {
                text,
                failures: rep.summary.failures,
            })
        }
    }
}

fn images(g: &SimpleGraph, a: &raag_core::Automorphism) -> String {
    (0..g.len())
        .filter(|&v| a.forward(v).letters() != [raag_core::Letter::pos(v)])
        .map(|v| format!("{} ↦ {}", g.label(v), a.forward(v).display(g)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn analyze_text(g: &SimpleGraph, fh: &FlagsHypergraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "vertices: {}", g.labels().join(" "));
    let _ = writeln!(s, "classes:");
    for (i, c) in fh.classes.iter().enumerate() {
        let _ = writeln!(s, "  [{}] {{{}}} {}", i, g.format_set(c.members), c.kind);
    }
    let order: Vec<String> = fh
        .class_order()
        .into_iter()
        .map(|(i, j)| {
            format!(
                "{{{}}} < {{{}}}",
                g.format_set(fh.classes[i].members),
                g.format_set(fh.classes[j].members)
            )
        })
        .collect();
    let _ = writeln!(
        s,
        "order: {}",
        if order.is_empty() {
            "(none)".to_string()
        } else {
            order.join(", ")
        }
    );
    let _ = writeln!(s, "hyperedges:");
    for e in &fh.hyperedges {
        let _ = write!(
            s,
            "  {} level {} vertices {{{}}} {}",
            fh.describe(g, e),
            e.level,
            g.format_set(e.vertex_set),
            e.kind
        );
        if !e.kind.ab().is_empty() {
            let _ = write!(s, " Ab={{{}}}", g.format_set(e.kind.ab()));
        }
        if !e.kind.b_part().is_empty() {
            let _ = write!(s, " B={{{}}}", g.format_set(e.kind.b_part()));
        }
        s.push('\n');
    }
    s
}
