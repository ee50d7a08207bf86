//! mimkit command-line interface.

use clap::{Parser, Subcommand, ValueEnum};
use mimkit::bits::Bits;
use mimkit::decomposers::{
    decompose_2p1p2_bowtie, decompose_2p2_k13, decompose_blocks, decompose_multijoin,
    CertifiedDecomposition,
};
use mimkit::decomposition::cutmim;
use mimkit::enumerate::enumerate_graphs;
use mimkit::error::Error;
use mimkit::formats::{
    bdecomp_to_string, edgelist_to_string, graph6_to_string, graph_from_edgelist,
    graph_from_graph6, Meta,
};
use mimkit::generators::{
    construct_gdoubleprime, construct_gprime, grid, net_wall, netwall_coloring3,
    netwall_coloring4, wall, witness, WallSpec, WitnessFamily,
};
use mimkit::graph::Graph;
use mimkit::lab::{lab_run, RunConfig, SUITES};
use mimkit::named::graph_from_name;
use mimkit::oracle::{exact_mimw, MimwOutcome};
use mimkit::transforms;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Exit codes: 0 success; 2 malformed input or usage; 3 size cap exceeded;
/// 4 class violation (input not in the required graph class); 5 lab suite
/// found violations; 6 internal consistency error.
#[derive(Parser)]
#[command(name = "mimkit", version, about = "mim-width toolkit for hereditary graph classes", long_about = None, after_help = EXIT_CODES_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

const EXIT_CODES_HELP: &str = "Exit codes:
  0  success
  2  malformed input, parse error, or I/O failure
  3  size cap exceeded (oracle/enumeration/verification budgets)
  4  class violation: the input contains a forbidden induced subgraph
  5  a lab suite found property violations
  6  internal consistency error";

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: a named expression, grid, wall, net-wall, gadget,
    /// or witness family member.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Apply a semicolon-separated transform pipeline, left to right, e.g.
    /// "subdivide-all:1; make-clique:A".
    Transform {
        pipeline: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        meta: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// Exact maximum induced matching across the cut (X, V \ X).
    Cutmim {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated vertex list for X.
        #[arg(long)]
        side: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// Exact mim-width (exhaustive oracle, n <= 11).
    Mimw {
        #[arg(long)]
        input: PathBuf,
        /// Stop early once the width is known to be at least this value.
        #[arg(long)]
        cap: Option<u32>,
        /// Write the witness decomposition (BDECOMP v1) here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// Certified branch decomposition for a hereditary class.
    Decompose {
        #[arg(long = "class")]
        class: DecomposeClass,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Partition metadata (class records) for --class multijoin.
        #[arg(long)]
        meta: Option<PathBuf>,
        /// Pairwise cut premise c for --class multijoin.
        #[arg(long)]
        cjoin: Option<u32>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// Classify the pair (H1, H2): bounded / unbounded / open.
    Classify {
        /// Named-graph expression or a path to an EDGELIST file.
        h1: String,
        h2: String,
        /// Output "records" for machine-readable key-value lines.
        #[arg(long)]
        format: Option<String>,
    },
    /// Stream one representative per isomorphism class of graphs on n
    /// vertices (n <= 7).
    Enumerate {
        n: usize,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Run a verification suite (or "all").
    Lab {
        suite: String,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Realize a named-graph expression, e.g. "2P2+K3" or "co(C4+P1)".
    Expr {
        expr: String,
        #[command(flatten)]
        out: GenOut,
    },
    Grid {
        h: usize,
        w: usize,
        #[command(flatten)]
        out: GenOut,
    },
    Wall {
        h: usize,
        r: usize,
        #[arg(long, default_value_t = 0)]
        subdivisions: usize,
        #[command(flatten)]
        out: GenOut,
    },
    NetWall {
        h: usize,
        r: usize,
        #[arg(long, default_value_t = 0)]
        subdivisions: usize,
        /// Attach the 4-coloring (needs --subdivisions 4) or the
        /// 3-coloring (elementary) to the sidecar metadata.
        #[arg(long)]
        coloring: Option<usize>,
        #[command(flatten)]
        out: GenOut,
    },
    /// The chordal-bipartite gadget G' of a seed graph.
    Gprime {
        /// Named expression or EDGELIST path.
        seed: String,
        #[command(flatten)]
        out: GenOut,
    },
    /// The 3-partite gadget G'' of a seed graph.
    Gdoubleprime {
        seed: String,
        #[command(flatten)]
        out: GenOut,
    },
    /// A verified member of an unbounded-width witness family.
    Witness {
        /// One of: diamond-5p1, k5minus-4p1, gem-4p1, diamond-2p3,
        /// diamond-p6, split-i, split-ii, cobip.
        family: String,
        #[arg(long, default_value_t = 30)]
        size: usize,
        #[command(flatten)]
        out: GenOut,
    },
}

#[derive(clap::Args)]
struct GenOut {
    #[arg(long)]
    out: Option<PathBuf>,
    /// Sidecar metadata file (partitions / colorings, key-value records).
    #[arg(long)]
    meta: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: GraphFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeClass {
    #[value(name = "2p2-k13")]
    TwoP2K13,
    #[value(name = "2p1p2-bowtie")]
    TwoP1P2Bowtie,
    Blocks,
    Multijoin,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Io(_)
        | Error::Domain(_)
        | Error::Precondition(_)
        | Error::BadDecomposition(_) => 2,
        Error::SizeLimit(_) => 3,
        Error::ClassViolation { .. } => 4,
        Error::Inconsistent(_) => 6,
    }
}

fn read_graph(path: &Path, format: GraphFormat) -> mimkit::Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    match format {
        GraphFormat::Edgelist => graph_from_edgelist(&text),
        GraphFormat::Graph6 => graph_from_graph6(&text),
    }
}

fn graph_to_text(g: &Graph, format: GraphFormat) -> mimkit::Result<String> {
    Ok(match format {
        GraphFormat::Edgelist => edgelist_to_string(g),
        GraphFormat::Graph6 => {
            let mut s = graph6_to_string(g)?;
            s.push('\n');
            s
        }
    })
}

fn emit(text: &str, out: &Option<PathBuf>) -> mimkit::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Named-graph expression, or a path to an EDGELIST file if one exists.
fn graph_from_arg(arg: &str) -> mimkit::Result<Graph> {
    let path = Path::new(arg);
    if path.exists() {
        return graph_from_edgelist(&std::fs::read_to_string(path)?);
    }
    graph_from_name(arg)
}

fn parse_side(side: &str, n: usize) -> mimkit::Result<Bits> {
    let mut bits = Bits::new(n);
    for tok in side.split(',').filter(|t| !t.trim().is_empty()) {
        let v: usize = tok
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("bad vertex '{tok}' in --side")))?;
        if v >= n {
            return Err(Error::Domain(format!("vertex {v} out of range")));
        }
        bits.insert(v);
    }
    Ok(bits)
}

fn run() -> mimkit::Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { family } => run_gen(family)?,
        Command::Transform {
            pipeline,
            input,
            meta,
            out,
            format,
        } => {
            let g = read_graph(&input, format)?;
            let meta = match meta {
                Some(p) => Meta::from_str_form(&std::fs::read_to_string(p)?),
                None => Meta::default(),
            };
            let result = run_pipeline(&g, &meta, &pipeline)?;
            emit(&graph_to_text(&result, format)?, &out)?;
        }
        Command::Cutmim {
            input,
            side,
            format,
        } => {
            let g = read_graph(&input, format)?;
            let x = parse_side(&side, g.n())?;
            println!("{}", cutmim(&g, &x));
        }
        Command::Mimw {
            input,
            cap,
            out,
            format,
        } => {
            let g = read_graph(&input, format)?;
            match exact_mimw(&g, cap)? {
                MimwOutcome::Exact { value, witness } => {
                    println!("{value}");
                    if let Some(path) = out {
                        std::fs::write(path, bdecomp_to_string(&witness))?;
                    }
                }
                MimwOutcome::AtLeast(c) => println!(">={c}"),
            }
        }
        Command::Decompose {
            class,
            input,
            out,
            meta,
            cjoin,
            format,
        } => {
            let g = read_graph(&input, format)?;
            let cert = run_decompose(&g, class, meta, cjoin)?;
            println!("width {} bound {}", cert.width, cert.claimed_bound);
            if let Some(path) = out {
                std::fs::write(path, bdecomp_to_string(&cert.decomposition))?;
            }
        }
        Command::Classify { h1, h2, format } => {
            let g1 = graph_from_arg(&h1)?;
            let g2 = graph_from_arg(&h2)?;
            let c = mimkit::classifier::classify_pair(&g1, &g2)?;
            if format.as_deref() == Some("records") {
                println!("verdict {}", c.verdict);
                if let Some(case) = &c.case_id {
                    println!("case {case}");
                }
                if let Some(b) = &c.bound {
                    println!("bound {b}");
                }
                if let Some(p) = c.open_problem {
                    println!("open_problem {p}");
                }
                if let Some(w) = &c.witness {
                    println!("witness {w}");
                }
                if let Some(p) = &c.provenance {
                    println!("provenance {p}");
                }
            } else {
                let mut line = format!("{}", c.verdict);
                if let Some(case) = &c.case_id {
                    line.push_str(&format!(" {case}"));
                }
                if let Some(p) = c.open_problem {
                    line.push_str(&format!(" problem-{p}"));
                }
                if let Some(b) = &c.bound {
                    line.push_str(&format!(" bound {b}"));
                }
                if let Some(w) = &c.witness {
                    line.push_str(&format!(" [{w}]"));
                }
                println!("{line}");
            }
        }
        Command::Enumerate { n, format } => {
            for g in enumerate_graphs(n)? {
                match format {
                    GraphFormat::Graph6 => println!("{}", graph6_to_string(&g)?),
                    GraphFormat::Edgelist => {
                        print!("{}", edgelist_to_string(&g));
                        println!();
                    }
                }
            }
        }
        Command::Lab {
            suite,
            seed,
            trials,
            max_n,
            out,
        } => {
            let config = RunConfig {
                seed,
                trials,
                max_n,
                output_dir: out,
                ..Default::default()
            };
            let ids: Vec<&str> = if suite == "all" {
                SUITES.iter().map(|(id, _)| *id).collect()
            } else {
                vec![SUITES
                    .iter()
                    .find(|(id, _)| *id == suite)
                    .map(|(id, _)| *id)
                    .ok_or_else(|| Error::Domain(format!("unknown suite '{suite}'")))?]
            };
            let mut failed = false;
            for id in ids {
                let rep = lab_run(id, &config)?;
                println!(
                    "{}: {} ({} trials, {} violations, max width {})",
                    id,
                    if rep.passed() { "pass" } else { "FAIL" },
                    rep.trials_run,
                    rep.violations.len(),
                    rep.max_width_observed
                );
                for v in rep.violations.iter().take(5) {
                    println!("  violation: {v}");
                }
                failed |= !rep.passed();
            }
            if failed {
                return Ok(5);
            }
        }
    }
    Ok(0)
}

fn run_gen(family: GenFamily) -> mimkit::Result<()> {
    let (g, meta, out) = match family {
        GenFamily::Expr { expr, out } => {
            let g = graph_from_name(&expr)?;
            let mut m = Meta::default();
            m.push("generator", format!("expr {expr}"));
            (g, m, out)
        }
        GenFamily::Grid { h, w, out } => {
            let g = grid(h, w)?;
            let mut m = Meta::default();
            m.push("generator", format!("grid {h} {w}"));
            (g, m, out)
        }
        GenFamily::Wall {
            h,
            r,
            subdivisions,
            out,
        } => {
            let w = wall(WallSpec {
                h,
                r,
                subdivisions,
            })?;
            let mut m = Meta::default();
            m.push("generator", format!("wall {h} {r} subdivisions {subdivisions}"));
            for (v, c) in w.coord.iter().enumerate() {
                if let Some((row, col)) = c {
                    m.push("coord", format!("{v} {row} {col}"));
                }
            }
            (w.graph, m, out)
        }
        GenFamily::NetWall {
            h,
            r,
            subdivisions,
            coloring,
            out,
        } => {
            let nw = net_wall(WallSpec {
                h,
                r,
                subdivisions,
            })?;
            let mut m = Meta::default();
            m.push(
                "generator",
                format!("net-wall {h} {r} subdivisions {subdivisions}"),
            );
            match coloring {
                Some(4) => {
                    let col = netwall_coloring4(&nw)?;
                    for (v, c) in col.class_of.iter().enumerate() {
                        m.push("class", format!("{v} {c}"));
                    }
                }
                Some(3) => {
                    let col = netwall_coloring3(&nw)?;
                    for (v, c) in col.class_of.iter().enumerate() {
                        m.push("class", format!("{v} {c}"));
                    }
                }
                Some(k) => return Err(Error::Domain(format!("no {k}-coloring available"))),
                None => {}
            }
            (nw.graph, m, out)
        }
        GenFamily::Gprime { seed, out } => {
            let g = graph_from_arg(&seed)?;
            let gp = construct_gprime(&g);
            let mut m = Meta::default();
            m.push("generator", format!("gprime of {seed}"));
            for (name, part) in [("X", &gp.x), ("Y", &gp.y), ("Q", &gp.q), ("T", &gp.t)] {
                for &v in part.iter() {
                    m.push("part", format!("{v} {name}"));
                }
            }
            (gp.graph, m, out)
        }
        GenFamily::Gdoubleprime { seed, out } => {
            let g = graph_from_arg(&seed)?;
            let gd = construct_gdoubleprime(&g);
            let mut m = Meta::default();
            m.push("generator", format!("gdoubleprime of {seed}"));
            for (name, part) in [("X", &gd.x), ("Y", &gd.y), ("Z", &gd.z)] {
                for &v in part.iter() {
                    m.push("part", format!("{v} {name}"));
                }
            }
            (gd.graph, m, out)
        }
        GenFamily::Witness { family, size, out } => {
            let fam = WitnessFamily::from_id(&family)
                .ok_or_else(|| Error::Domain(format!("unknown witness family '{family}'")))?;
            let w = witness(fam, size)?;
            (w.graph, w.meta, out)
        }
    };
    emit(&graph_to_text(&g, out.format)?, &out.out)?;
    if let Some(meta_path) = out.meta {
        std::fs::write(meta_path, meta.to_string_form())?;
    }
    Ok(())
}

/// Pipeline steps: delete-vertex:<v>; subdivide-edge:<u>,<v>,<k>;
/// subdivide-all:<k>; clique-implant:<v>; make-clique:<spec>;
/// cliqueify-partition (classes from metadata). A <spec> is a comma list of
/// vertices, or a part name from the metadata's "part" records.
fn run_pipeline(g: &Graph, meta: &Meta, pipeline: &str) -> mimkit::Result<Graph> {
    let mut cur = g.clone();
    for step in pipeline.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (op, arg) = match step.split_once(':') {
            Some((op, arg)) => (op.trim(), arg.trim()),
            None => (step, ""),
        };
        cur = match op {
            "delete-vertex" => {
                let v = arg
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad vertex '{arg}'")))?;
                transforms::delete_vertex(&cur, v)?.0
            }
            "subdivide-edge" => {
                let parts: Vec<&str> = arg.split(',').collect();
                if parts.len() != 3 {
                    return Err(Error::Domain("subdivide-edge:<u>,<v>,<k>".into()));
                }
                let parse = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Domain(format!("bad number '{s}'")))
                };
                transforms::subdivide_edge(&cur, parse(parts[0])?, parse(parts[1])?, parse(parts[2])?)?
            }
            "subdivide-all" => {
                let k = arg
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad count '{arg}'")))?;
                transforms::subdivide_all_edges(&cur, k)?
            }
            "clique-implant" => {
                let v = arg
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad vertex '{arg}'")))?;
                transforms::clique_implant(&cur, v)?.0
            }
            "make-clique" => {
                let set = vertex_spec(&cur, meta, arg)?;
                transforms::make_clique(&cur, &set).0
            }
            "cliqueify-partition" => {
                let classes = meta
                    .class_map(cur.n())
                    .ok_or_else(|| Error::Domain("metadata lacks a total class map".into()))?;
                let k = classes.iter().max().copied().unwrap_or(0) + 1;
                let parts: Vec<Bits> = (0..k)
                    .map(|c| Bits::from_iter(cur.n(), (0..cur.n()).filter(|&v| classes[v] == c)))
                    .filter(|b| !b.is_empty())
                    .collect();
                transforms::cliqueify_partition(&cur, &parts)?.0
            }
            other => return Err(Error::Domain(format!("unknown transform '{other}'"))),
        };
    }
    Ok(cur)
}

/// A vertex set: either "1,2,3" or a part name resolved via "part" records.
fn vertex_spec(g: &Graph, meta: &Meta, spec: &str) -> mimkit::Result<Bits> {
    if spec
        .split(',')
        .all(|t| t.trim().parse::<usize>().is_ok() && !t.trim().is_empty())
        && !spec.is_empty()
    {
        return parse_side(spec, g.n());
    }
    let mut bits = Bits::new(g.n());
    for rec in meta.all("part") {
        let mut it = rec.split_whitespace();
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Domain("bad part record".into()))?;
        let name = it.next().unwrap_or("");
        if name == spec {
            if v >= g.n() {
                return Err(Error::Domain(format!("part vertex {v} out of range")));
            }
            bits.insert(v);
        }
    }
    if bits.is_empty() {
        return Err(Error::Domain(format!("no vertices match part '{spec}'")));
    }
    Ok(bits)
}

fn run_decompose(
    g: &Graph,
    class: DecomposeClass,
    meta: Option<PathBuf>,
    cjoin: Option<u32>,
) -> mimkit::Result<CertifiedDecomposition> {
    match class {
        DecomposeClass::TwoP2K13 => decompose_2p2_k13(g),
        DecomposeClass::TwoP1P2Bowtie => decompose_2p1p2_bowtie(g),
        DecomposeClass::Blocks => decompose_blocks(g, &mut |sub| {
            if sub.n() <= mimkit::oracle::oracle_cap() {
                match exact_mimw(sub, None)? {
                    MimwOutcome::Exact { witness, .. } => Ok(witness),
                    MimwOutcome::AtLeast(_) => unreachable!(),
                }
            } else {
                Ok(mimkit::decomposition::arbitrary_decomposition(sub))
            }
        }),
        DecomposeClass::Multijoin => {
            let meta_path =
                meta.ok_or_else(|| Error::Domain("--class multijoin needs --meta".into()))?;
            let c =
                cjoin.ok_or_else(|| Error::Domain("--class multijoin needs --cjoin".into()))?;
            let m = Meta::from_str_form(&std::fs::read_to_string(meta_path)?);
            let classes = m
                .class_map(g.n())
                .ok_or_else(|| Error::Domain("metadata lacks a total class map".into()))?;
            let k = classes.iter().max().copied().unwrap_or(0) + 1;
            let parts: Vec<Bits> = (0..k)
                .map(|cl| Bits::from_iter(g.n(), (0..g.n()).filter(|&v| classes[v] == cl)))
                .filter(|b| !b.is_empty())
                .collect();
            let decs: Vec<_> = parts
                .iter()
                .map(|s| mimkit::decomposition::arbitrary_decomposition(&g.induced(s).0))
                .collect();
            decompose_multijoin(g, &parts, &decs, c)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
