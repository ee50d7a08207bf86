//! The verification lab: each suite replays one result's property checks
//! over exhaustive small instances and seeded random ones, and persists a
//! deterministic report.

use crate::bits::Bits;
use crate::classes::is_split;
use crate::classifier::{classify_pair, Verdict};
use crate::decomposers::{
    certify_cut_bound, decompose_2p1p2_bowtie, decompose_2p2_k13, decompose_blocks,
    decompose_multijoin, CutBoundSpec,
};
use crate::decomposition::{arbitrary_decomposition, cutmim_pair};
use crate::enumerate::enumerate_graphs;
use crate::error::{Error, Result};
use crate::generators::{
    check_coloring3, check_coloring4, construct_gdoubleprime, construct_gprime, net_wall,
    netwall_coloring3, netwall_coloring4, WallSpec,
};
use crate::graph::Graph;
use crate::iso::{contains_induced, is_h_free};
use crate::named::graph_from_name;
use crate::oracle::exact_mimw_value;
use crate::transforms::{clique_implant, cliqueify_partition, make_clique, subdivide_edge};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::path::{Path, PathBuf};

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_n: usize,
    pub oracle_cap: usize,
    pub output_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0xC0FFEE,
            trials: 200,
            max_n: 8,
            oracle_cap: crate::oracle::ORACLE_HARD_CAP,
            output_dir: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LabReport {
    pub experiment_id: String,
    pub theorem: String,
    pub seed: u64,
    pub trials: usize,
    pub max_n: usize,
    pub trials_run: u64,
    pub max_width_observed: u32,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
    pub incomplete: bool,
    pub duration_ms: u128,
}

impl LabReport {
    fn new(id: &str, theorem: &str, config: &RunConfig) -> LabReport {
        LabReport {
            experiment_id: id.to_string(),
            theorem: theorem.to_string(),
            seed: config.seed,
            trials: config.trials,
            max_n: config.max_n,
            trials_run: 0,
            max_width_observed: 0,
            violations: Vec::new(),
            notes: Vec::new(),
            incomplete: false,
            duration_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && !self.incomplete
    }

    /// Key-value text form. All fields except `duration_ms` are
    /// deterministic given (experiment_id, seed, config).
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("experiment {}\n", self.experiment_id));
        s.push_str(&format!("theorem {}\n", self.theorem));
        s.push_str(&format!("seed {}\n", self.seed));
        s.push_str(&format!("trials {}\n", self.trials));
        s.push_str(&format!("max_n {}\n", self.max_n));
        s.push_str(&format!("trials_run {}\n", self.trials_run));
        s.push_str(&format!("max_width_observed {}\n", self.max_width_observed));
        s.push_str(&format!("violations {}\n", self.violations.len()));
        for v in &self.violations {
            s.push_str(&format!("violation {v}\n"));
        }
        for n in &self.notes {
            s.push_str(&format!("note {n}\n"));
        }
        s.push_str(&format!(
            "status {}\n",
            if self.incomplete {
                "incomplete"
            } else if self.violations.is_empty() {
                "pass"
            } else {
                "fail"
            }
        ));
        s.push_str(&format!("duration_ms {}\n", self.duration_ms));
        s
    }
}

/// (suite id, what it checks). The registry is the theorem-to-code map.
pub const SUITES: &[(&str, &str)] = &[
    ("lemma31", "vertex deletion changes mim-width by at most one, never up"),
    ("lemma32", "1-subdividing an edge keeps mim-width within +1"),
    ("lemma33", "clique implant keeps mim-width within +d(v)"),
    ("lemma34", "cliquifying the classes of a k-partite graph keeps at least 1/k of the width"),
    ("lemma36", "making any set a clique adds at most 1 to mim-width"),
    ("lemma35-blocks", "block-by-block composition achieves the max block width"),
    ("lemma37-multijoin", "multi-join composition obeys its width formula"),
    ("thm41-cutbounds", "(K3-m-3P1, 2P2)-free graphs have all cut values below max{6,3}"),
    ("thm42-cutbounds", "(K_r-m-P1, tP2)-free graphs have all cut values below R(r,R(r,t))"),
    ("thm43-cutbounds", "(K_r-m-K_r, sP1+P2)-free graphs have all cut values below R(R(r,s+1),s+1)"),
    ("thm45-alg", "the (2P2, K1,3)-free algorithm: width 1 with a net, else below 6"),
    ("thm47-alg", "the (2P1+P2, bowtie)-free algorithm: width 2 on K_r-m-K_r"),
    ("gprime-freeness", "G' is chordal bipartite and (P8, P3+P6, S1,1,5)-free"),
    ("gdoubleprime-freeness", "G'' of bipartite seeds is (K4, diamond, P6, P2+P4)-free"),
    ("coloring4", "net-wall 4-coloring: independent classes, no shared neighbors"),
    ("coloring3", "net-wall 3-coloring: no bichromatic P5, bulls meet classes <= 2"),
    ("corollary65-sweep", "every pair with |V(H1)|+|V(H2)| <= 8 resolves to bounded or unbounded"),
];

pub fn lab_run(suite_id: &str, config: &RunConfig) -> Result<LabReport> {
    let theorem = SUITES
        .iter()
        .find(|(id, _)| *id == suite_id)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Domain(format!("unknown suite '{suite_id}'")))?;
    let started = std::time::Instant::now();
    let mut report = LabReport::new(suite_id, theorem, config);
    let mut cfg = config.clone();
    cfg.oracle_cap = cfg.oracle_cap.min(crate::oracle::ORACLE_HARD_CAP);
    match suite_id {
        "lemma31" => suite_lemma31(&cfg, &mut report)?,
        "lemma32" => suite_lemma32(&cfg, &mut report)?,
        "lemma33" => suite_lemma33(&cfg, &mut report)?,
        "lemma34" => suite_lemma34(&cfg, &mut report)?,
        "lemma36" => suite_lemma36(&cfg, &mut report)?,
        "lemma35-blocks" => suite_blocks(&cfg, &mut report)?,
        "lemma37-multijoin" => suite_multijoin(&cfg, &mut report)?,
        "thm41-cutbounds" => suite_cutbounds(&cfg, &mut report, CutSuite::Thm41)?,
        "thm42-cutbounds" => suite_cutbounds(&cfg, &mut report, CutSuite::Thm42)?,
        "thm43-cutbounds" => suite_cutbounds(&cfg, &mut report, CutSuite::Thm43)?,
        "thm45-alg" => suite_thm45(&cfg, &mut report)?,
        "thm47-alg" => suite_thm47(&cfg, &mut report)?,
        "gprime-freeness" => suite_gprime(&cfg, &mut report)?,
        "gdoubleprime-freeness" => suite_gdoubleprime(&cfg, &mut report)?,
        "coloring4" => suite_coloring4(&cfg, &mut report)?,
        "coloring3" => suite_coloring3(&cfg, &mut report)?,
        "corollary65-sweep" => suite_sweep(&cfg, &mut report)?,
        _ => unreachable!(),
    }
    report.duration_ms = started.elapsed().as_millis();
    if let Some(dir) = &config.output_dir {
        write_report(&report, dir)?;
    }
    Ok(report)
}

pub fn write_report(report: &LabReport, dir: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!(
        "report-{}-seed{}.txt",
        report.experiment_id, report.seed
    ));
    std::fs::write(&path, report.to_text())?;
    let index = dir.join("index.txt");
    let line = format!(
        "{} seed={} trials_run={} violations={} status={}\n",
        report.experiment_id,
        report.seed,
        report.trials_run,
        report.violations.len(),
        if report.passed() { "pass" } else { "fail" }
    );
    let mut content = std::fs::read_to_string(&index).unwrap_or_default();
    content.push_str(&line);
    std::fs::write(&index, content)?;
    Ok(path)
}

/// Seeded Erdos-Renyi graph; densities are swept by the callers.
pub fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Instances for the bracket suites: exhaustive isomorphism classes up to
/// n = 6, then `trials` seeded random graphs per n in 7..=max_n.
fn bracket_instances(cfg: &RunConfig, n_cap: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=6.min(n_cap) {
        out.extend(enumerate_graphs(n)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in 7..=cfg.max_n.min(n_cap) {
        for t in 0..cfg.trials {
            out.push(gnp(n, DENSITIES[t % DENSITIES.len()], &mut rng));
        }
    }
    Ok(out)
}

/// Runs `check` on every instance in parallel, aggregating deterministically
/// in instance order. `check` returns (sub-trials, max width, violations).
fn parallel_bracket(
    instances: Vec<Graph>,
    report: &mut LabReport,
    check: impl Fn(&Graph) -> Result<(u64, u32, Vec<String>)> + Sync,
) -> Result<()> {
    let results: Vec<Result<(u64, u32, Vec<String>)>> =
        instances.par_iter().map(&check).collect();
    for r in results {
        let (n, w, mut v) = r?;
        report.trials_run += n;
        report.max_width_observed = report.max_width_observed.max(w);
        report.violations.append(&mut v);
    }
    Ok(())
}

fn suite_lemma31(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    parallel_bracket(bracket_instances(cfg, cfg.oracle_cap)?, report, |g| {
        let mut out = (0u64, 0u32, Vec::new());
        let base = exact_mimw_value(g)?;
        out.1 = base;
        for v in 0..g.n() {
            if g.n() == 1 {
                continue;
            }
            let del = exact_mimw_value(&g.delete_vertex(v)?)?;
            out.0 += 1;
            if !(base.saturating_sub(1) <= del && del <= base) {
                out.2.push(format!(
                    "graph {:?} vertex {v}: mimw {base} -> {del}",
                    g.edges()
                ));
            }
        }
        Ok(out)
    })
}

fn suite_lemma32(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let cap = cfg.oracle_cap;
    parallel_bracket(bracket_instances(cfg, cap - 1)?, report, |g| {
        let mut out = (0u64, 0u32, Vec::new());
        let base = exact_mimw_value(g)?;
        out.1 = base;
        for (u, v) in g.edges() {
            let sub = subdivide_edge(g, u, v, 1)?;
            let w = exact_mimw_value(&sub)?;
            out.0 += 1;
            if !(base <= w && w <= base + 1) {
                out.2.push(format!(
                    "graph {:?} edge ({u},{v}): mimw {base} -> {w}",
                    g.edges()
                ));
            }
        }
        Ok(out)
    })
}

fn suite_lemma33(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let cap = cfg.oracle_cap;
    parallel_bracket(bracket_instances(cfg, cap)?, report, move |g| {
        let mut out = (0u64, 0u32, Vec::new());
        let base = exact_mimw_value(g)?;
        out.1 = base;
        for v in 0..g.n() {
            let d = g.degree(v);
            // Keep the implanted graph within the oracle's reach; an implant
            // on an isolated vertex is just a deletion, outside the bracket.
            if d == 0 || g.n() - 1 + d > cap {
                continue;
            }
            let (imp, _) = clique_implant(g, v)?;
            let w = exact_mimw_value(&imp)?;
            out.0 += 1;
            if !(base <= w && w <= base + d as u32) {
                out.2.push(format!(
                    "graph {:?} vertex {v}: mimw {base} -> {w} (d={d})",
                    g.edges()
                ));
            }
        }
        Ok(out)
    })
}

fn suite_lemma34(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tasks: Vec<(Graph, Vec<Bits>)> = Vec::new();
    // Exhaustive part: every isomorphism class up to n = 6 with every
    // k-partition into independent classes, k in {2, 3}.
    for n in 2..=6.min(cfg.max_n) {
        for g in enumerate_graphs(n)? {
            for k in [2usize, 3] {
                let mut assignment = vec![0usize; n];
                loop {
                    let parts: Vec<Bits> = (0..k)
                        .map(|c| {
                            Bits::from_iter(n, (0..n).filter(|&v| assignment[v] == c))
                        })
                        .filter(|p| !p.is_empty())
                        .collect();
                    let valid = parts.len() >= 2
                        && g.edges()
                            .iter()
                            .all(|&(u, v)| assignment[u] != assignment[v]);
                    if valid {
                        tasks.push((g.clone(), parts));
                    }
                    // Next assignment (odometer); fix vertex 0 in class 0 to
                    // cut symmetric repeats.
                    let mut i = n - 1;
                    loop {
                        if i == 0 {
                            break;
                        }
                        assignment[i] += 1;
                        if assignment[i] < k {
                            break;
                        }
                        assignment[i] = 0;
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                }
            }
        }
    }
    // Random part at larger sizes: strip intra-class edges to force
    // k-partiteness.
    for n in 7..=cfg.max_n.min(cfg.oracle_cap) {
        for t in 0..cfg.trials {
            let k = 2 + (t % 2);
            let mut g = gnp(n, DENSITIES[t % DENSITIES.len()], &mut rng);
            let classes: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
            for (u, v) in g.edges() {
                if classes[u] == classes[v] {
                    g.remove_edge(u, v);
                }
            }
            let parts: Vec<Bits> = (0..k)
                .map(|c| Bits::from_iter(n, (0..n).filter(|&v| classes[v] == c)))
                .filter(|p| !p.is_empty())
                .collect();
            if parts.len() >= 2 {
                tasks.push((g, parts));
            }
        }
    }
    let results: Vec<Result<(u32, Option<String>)>> = tasks
        .par_iter()
        .map(|(g, parts)| {
            let (gc, _) = cliqueify_partition(g, parts)?;
            let base = exact_mimw_value(g)?;
            let after = exact_mimw_value(&gc)?;
            let viol = if after * (parts.len() as u32) < base {
                Some(format!(
                    "k={} graph {:?}: mimw {base}, cliquified {after}",
                    parts.len(),
                    g.edges()
                ))
            } else {
                None
            };
            Ok((base, viol))
        })
        .collect();
    for r in results {
        let (w, viol) = r?;
        report.trials_run += 1;
        report.max_width_observed = report.max_width_observed.max(w);
        if let Some(v) = viol {
            report.violations.push(v);
        }
    }
    Ok(())
}

fn suite_lemma36(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tasks: Vec<(Graph, Bits)> = Vec::new();
    // Exhaustive part: every isomorphism class up to n = 6 with every set S.
    for n in 1..=6.min(cfg.max_n) {
        for g in enumerate_graphs(n)? {
            for mask in 0..(1u64 << n) {
                tasks.push((g.clone(), Bits::from_mask(n, mask)));
            }
        }
    }
    for n in 7..=cfg.max_n.min(cfg.oracle_cap) {
        for t in 0..cfg.trials {
            let g = gnp(n, DENSITIES[t % DENSITIES.len()], &mut rng);
            let s = Bits::from_iter(n, (0..n).filter(|_| rng.gen_bool(0.5)));
            tasks.push((g, s));
        }
    }
    let results: Vec<Result<(u32, Option<String>)>> = tasks
        .par_iter()
        .map(|(g, s)| {
            let (gc, _) = make_clique(g, s);
            let base = exact_mimw_value(g)?;
            let after = exact_mimw_value(&gc)?;
            let viol = if after > base + 1 {
                Some(format!(
                    "graph {:?} set {:?}: mimw {base} -> {after}",
                    g.edges(),
                    s.to_vec()
                ))
            } else {
                None
            };
            Ok((base.max(after), viol))
        })
        .collect();
    for r in results {
        let (w, viol) = r?;
        report.trials_run += 1;
        report.max_width_observed = report.max_width_observed.max(w);
        if let Some(v) = viol {
            report.violations.push(v);
        }
    }
    Ok(())
}

fn suite_blocks(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let mut oracle_block = |sub: &Graph| match crate::oracle::exact_mimw(sub, None)? {
        crate::oracle::MimwOutcome::Exact { witness, .. } => Ok(witness),
        crate::oracle::MimwOutcome::AtLeast(_) => unreachable!(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut instances = Vec::new();
    for n in 3..=6 {
        instances.extend(enumerate_graphs(n)?);
    }
    for n in 7..=cfg.max_n.min(cfg.oracle_cap) {
        for t in 0..cfg.trials {
            instances.push(gnp(n, DENSITIES[t % DENSITIES.len()], &mut rng));
        }
    }
    for g in instances {
        let cert = decompose_blocks(&g, &mut oracle_block)?;
        let exact = exact_mimw_value(&g)?;
        report.trials_run += 1;
        report.max_width_observed = report.max_width_observed.max(cert.width);
        // With oracle-optimal blocks the composed width is the graph's
        // mim-width (n >= 3 avoids the degenerate 2-vertex convention).
        if cert.width != exact || cert.width > cert.claimed_bound.numeric() {
            report.violations.push(format!(
                "graph {:?}: composed {} vs exact {exact} (claimed {})",
                g.edges(),
                cert.width,
                cert.claimed_bound
            ));
        }
    }
    Ok(())
}

fn suite_multijoin(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for n in 4..=cfg.max_n.min(cfg.oracle_cap) {
        for t in 0..cfg.trials {
            let g = gnp(n, DENSITIES[t % DENSITIES.len()], &mut rng);
            let p = 2 + (t % 2);
            let classes: Vec<usize> = (0..n).map(|_| rng.gen_range(0..p)).collect();
            let parts: Vec<Bits> = (0..p)
                .map(|c| Bits::from_iter(n, (0..n).filter(|&v| classes[v] == c)))
                .filter(|b| !b.is_empty())
                .collect();
            if parts.len() < 2 {
                continue;
            }
            // The premise constant: the actual pairwise maximum.
            let mut c = 0;
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    c = c.max(cutmim_pair(&g, &parts[i], &parts[j], u32::MAX));
                }
            }
            let decs: Vec<_> = parts
                .iter()
                .map(|s| arbitrary_decomposition(&g.induced(s).0))
                .collect();
            let cert = decompose_multijoin(&g, &parts, &decs, c)?;
            report.trials_run += 1;
            report.max_width_observed = report.max_width_observed.max(cert.width);
            if cert.width > cert.claimed_bound.numeric() {
                report.violations.push(format!(
                    "graph {:?} parts {:?}: width {} above bound {}",
                    g.edges(),
                    classes,
                    cert.width,
                    cert.claimed_bound
                ));
            }
        }
    }
    Ok(())
}

enum CutSuite {
    Thm41,
    Thm42,
    Thm43,
}

/// Complete multipartite graphs are members of all three cut-bound classes;
/// they guarantee the suite reaches its trial quota, with filtered dense
/// random graphs adding variety.
fn random_complete_multipartite(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let s = rng.gen_range(1..=left.min(4));
        sizes.push(s);
        left -= s;
    }
    let mut g = Graph::new(n);
    let mut start = 0;
    let mut bounds = Vec::new();
    for s in sizes {
        bounds.push((start, start + s));
        start += s;
    }
    for (i, &(a1, b1)) in bounds.iter().enumerate() {
        for &(a2, b2) in &bounds[i + 1..] {
            for u in a1..b1 {
                for v in a2..b2 {
                    g.add_edge(u, v);
                }
            }
        }
    }
    g
}

fn suite_cutbounds(cfg: &RunConfig, report: &mut LabReport, which: CutSuite) -> Result<()> {
    let (spec, forbidden): (CutBoundSpec, Vec<Graph>) = match which {
        CutSuite::Thm41 => (
            CutBoundSpec::Thm41 { r: 3 },
            vec![graph_from_name("KmI(3)")?, graph_from_name("2P2")?],
        ),
        CutSuite::Thm42 => (
            CutBoundSpec::Thm42 { r: 3, t: 2 },
            vec![graph_from_name("KmP(3)")?, graph_from_name("2P2")?],
        ),
        CutSuite::Thm43 => (
            CutBoundSpec::Thm43 { r: 3, s: 1 },
            vec![graph_from_name("KmK(3)")?, graph_from_name("P1+P2")?],
        ),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n_hi = cfg.max_n.clamp(8, 14);
    let mut members: Vec<Graph> = Vec::new();
    let mut attempts = 0usize;
    while members.len() < cfg.trials && attempts < cfg.trials * 200 {
        attempts += 1;
        let n = rng.gen_range(6..=n_hi);
        let g = if attempts.is_multiple_of(2) {
            random_complete_multipartite(n, &mut rng)
        } else {
            gnp(n, [0.75, 0.85, 0.95][attempts % 3], &mut rng)
        };
        if forbidden.iter().all(|h| is_h_free(&g, h)) {
            members.push(g);
        }
    }
    if members.len() < cfg.trials {
        report.incomplete = true;
        report
            .notes
            .push(format!("found only {} class members", members.len()));
    }
    let results: Vec<_> = members
        .par_iter()
        .map(|g| certify_cut_bound(g, spec))
        .collect();
    for (g, res) in members.iter().zip(results) {
        let rep = res?;
        report.trials_run += 1;
        report.max_width_observed = report.max_width_observed.max(rep.max_cutmim);
        if !rep.violations.is_empty() {
            report.violations.push(format!(
                "graph {:?}: cut {:?} reaches the bound {}",
                g.edges(),
                rep.violations[0],
                rep.bound
            ));
        }
    }
    Ok(())
}

fn suite_thm45(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let two_p2 = graph_from_name("2P2")?;
    let claw = graph_from_name("K1,3")?;
    let net = graph_from_name("net")?;
    for n in 1..=cfg.max_n.min(7) {
        for g in enumerate_graphs(n)? {
            if !is_h_free(&g, &two_p2) || !is_h_free(&g, &claw) {
                continue;
            }
            let cert = decompose_2p2_k13(&g)?;
            let exact = exact_mimw_value(&g)?;
            report.trials_run += 1;
            report.max_width_observed = report.max_width_observed.max(cert.width);
            let has_net = contains_induced(&g, &net).is_some();
            let ok = if has_net {
                cert.width == 1
            } else {
                cert.width <= 5
            };
            if !ok || cert.width < exact {
                report.violations.push(format!(
                    "graph {:?}: width {} exact {exact} net {has_net}",
                    g.edges(),
                    cert.width
                ));
            }
        }
    }
    Ok(())
}

fn suite_thm47(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    for r in 5..=7 {
        let g = graph_from_name(&format!("KmK({r})"))?;
        let cert = decompose_2p1p2_bowtie(&g)?;
        report.trials_run += 1;
        report.max_width_observed = report.max_width_observed.max(cert.width);
        if cert.width != 2 {
            report
                .violations
                .push(format!("KmK({r}): width {} instead of 2", cert.width));
        }
    }
    // Small class members against the oracle.
    let p1 = graph_from_name("2P1+P2")?;
    let bt = graph_from_name("bowtie")?;
    for n in 1..=cfg.max_n.min(6) {
        for g in enumerate_graphs(n)? {
            if !is_h_free(&g, &p1) || !is_h_free(&g, &bt) {
                continue;
            }
            let cert = decompose_2p1p2_bowtie(&g)?;
            let exact = exact_mimw_value(&g)?;
            report.trials_run += 1;
            report.max_width_observed = report.max_width_observed.max(cert.width);
            if cert.width < exact || cert.width > cert.claimed_bound.numeric() {
                report.violations.push(format!(
                    "graph {:?}: width {} exact {exact}",
                    g.edges(),
                    cert.width
                ));
            }
        }
    }
    Ok(())
}

fn suite_gprime(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let p8 = graph_from_name("P8")?;
    let p3p6 = graph_from_name("P3+P6")?;
    let s115 = graph_from_name("S1,1,5")?;
    for n in 1..=cfg.max_n.min(6) {
        for g in enumerate_graphs(n)? {
            let gp = construct_gprime(&g);
            report.trials_run += 1;
            if gp.graph.n() != 2 * g.n() + 4 * g.m() {
                report
                    .violations
                    .push(format!("seed {:?}: wrong G' size", g.edges()));
            }
            if !crate::classes::is_chordal_bipartite(&gp.graph) {
                report
                    .violations
                    .push(format!("seed {:?}: G' not chordal bipartite", g.edges()));
            }
            for (name, h) in [("P8", &p8), ("P3+P6", &p3p6), ("S1,1,5", &s115)] {
                if !is_h_free(&gp.graph, h) {
                    report
                        .violations
                        .push(format!("seed {:?}: G' contains {name}", g.edges()));
                }
            }
        }
    }
    Ok(())
}

fn suite_gdoubleprime(cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let k4 = graph_from_name("K4")?;
    let diamond = graph_from_name("diamond")?;
    let p6 = graph_from_name("P6")?;
    let p2p4 = graph_from_name("P2+P4")?;
    for n in 1..=cfg.max_n.min(6) {
        for g in enumerate_graphs(n)? {
            if !g.is_bipartite() {
                continue;
            }
            let gd = construct_gdoubleprime(&g);
            report.trials_run += 1;
            if gd.graph.n() != 2 * g.n() + 2 * g.m() {
                report
                    .violations
                    .push(format!("seed {:?}: wrong G'' size", g.edges()));
            }
            for (name, h) in [
                ("K4", &k4),
                ("diamond", &diamond),
                ("P6", &p6),
                ("P2+P4", &p2p4),
            ] {
                if !is_h_free(&gd.graph, h) {
                    report
                        .violations
                        .push(format!("seed {:?}: G'' contains {name}", g.edges()));
                }
            }
        }
    }
    Ok(())
}

fn suite_coloring4(_cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    for k in [4usize, 5] {
        let nw = net_wall(WallSpec {
            h: k,
            r: k,
            subdivisions: 4,
        })?;
        let col = netwall_coloring4(&nw)?;
        report.trials_run += 1;
        for v in check_coloring4(&nw.graph, &col) {
            report.violations.push(format!("net-wall({k},{k}): {v}"));
        }
    }
    report
        .notes
        .push("walls are uniformly 4-subdivided; the elementary boundary admits no valid 4-coloring".into());
    Ok(())
}

fn suite_coloring3(_cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    for k in [4usize, 5] {
        let nw = net_wall(WallSpec {
            h: k,
            r: k,
            subdivisions: 1,
        })?;
        let col = netwall_coloring3(&nw)?;
        report.trials_run += 1;
        for v in check_coloring3(&nw.graph, &col) {
            report.violations.push(format!("net-wall({k},{k}): {v}"));
        }
    }
    report
        .notes
        .push("walls are uniformly 1-subdivided; elementary boundaries admit no valid 3-coloring".into());
    Ok(())
}

fn suite_sweep(_cfg: &RunConfig, report: &mut LabReport) -> Result<()> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    for n in 1..=7 {
        levels.push(enumerate_graphs(n)?);
    }
    // All unordered pairs of isomorphism classes with total size <= 8.
    let mut pairs: Vec<(&Graph, &Graph)> = Vec::new();
    for n1 in 1..=7usize {
        for n2 in n1..=7usize {
            if n1 + n2 > 8 {
                continue;
            }
            let (a, b) = (&levels[n1 - 1], &levels[n2 - 1]);
            for (i, h1) in a.iter().enumerate() {
                let js = if n1 == n2 { i } else { 0 };
                for h2 in &b[js..] {
                    pairs.push((h1, h2));
                }
            }
        }
    }
    let results: Vec<(usize, String)> = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(idx, (h1, h2))| match classify_pair(h1, h2) {
            Ok(c) => match c.verdict {
                Verdict::Bounded | Verdict::Unbounded => None,
                v => Some((
                    idx,
                    format!(
                        "pair ({:?}, {:?}) verdict {v}",
                        h1.edges(),
                        h2.edges()
                    ),
                )),
            },
            Err(e) => Some((idx, format!("pair ({:?}, {:?}): {e}", h1.edges(), h2.edges()))),
        })
        .collect();
    report.trials_run = pairs.len() as u64;
    let mut results = results;
    results.sort_by_key(|(idx, _)| *idx);
    for (_, v) in results {
        report.violations.push(v);
    }
    report
        .notes
        .push("verdicts cover bounded/unbounded; both-match events raise errors".into());
    Ok(())
}

/// Used by the acceptance suite: non-reproducibility of the asymptotic
/// lower bounds is acknowledged and replaced by structural checks.
pub fn structural_substitute_checks() -> Vec<String> {
    let mut bad = Vec::new();
    for n in 2..=8 {
        match crate::generators::wall(WallSpec::elementary(n, n)) {
            Ok(w) => {
                if w.graph.n() != 2 * n * n - 2 {
                    bad.push(format!("wall({n},{n}) has {} vertices", w.graph.n()));
                }
                if w.graph.max_degree() > 3 {
                    bad.push(format!("wall({n},{n}) is not subcubic"));
                }
                if !w.graph.is_bipartite() {
                    bad.push(format!("wall({n},{n}) is not bipartite"));
                }
            }
            Err(e) => bad.push(format!("wall({n},{n}): {e}")),
        }
    }
    let _ = is_split; // the split witnesses assert their structure on generation
    bad
}
