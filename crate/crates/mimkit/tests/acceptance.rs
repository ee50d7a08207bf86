//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use mimkit::decomposers::decompose_2p1p2_bowtie;
use mimkit::decomposition::{figure2_decomposition, figure2_graph, mimw_of_decomposition};
use mimkit::lab::{lab_run, structural_substitute_checks, LabReport, RunConfig};
use mimkit::named::graph_from_name;
use mimkit::oracle::exact_mimw_value;

fn report_line(criterion: &str, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn assert_suite(criterion: &str, rep: &LabReport) {
    let detail = format!(
        "suite {} ran {} checks, {} violations, max width {}",
        rep.experiment_id,
        rep.trials_run,
        rep.violations.len(),
        rep.max_width_observed
    );
    if !rep.violations.is_empty() {
        for v in rep.violations.iter().take(10) {
            eprintln!("  violation: {v}");
        }
    }
    report_line(criterion, rep.passed(), &detail);
}

fn full_config() -> RunConfig {
    RunConfig {
        seed: 0xC0FFEE,
        trials: 200,
        max_n: 8,
        ..Default::default()
    }
}

#[test]
fn criterion_1_figure2_reproduction() {
    let started = std::time::Instant::now();
    let g = figure2_graph();
    let mimw = exact_mimw_value(&g).unwrap();
    let width = mimw_of_decomposition(&g, &figure2_decomposition()).unwrap();
    let elapsed = started.elapsed();
    report_line(
        "1 (running-example reproduction)",
        mimw == 1 && width == 2 && elapsed.as_secs() < 1,
        &format!("mimw={mimw}, drawn decomposition width={width}, {elapsed:?}"),
    );
}

#[test]
fn criterion_2_lemma31_bracket() {
    assert_suite("2 (vertex-deletion bracket)", &lab_run("lemma31", &full_config()).unwrap());
}

#[test]
fn criterion_2_lemma32_bracket() {
    assert_suite("2 (subdivision bracket)", &lab_run("lemma32", &full_config()).unwrap());
}

#[test]
fn criterion_2_lemma33_bracket() {
    assert_suite("2 (clique-implant bracket)", &lab_run("lemma33", &full_config()).unwrap());
}

#[test]
fn criterion_2_lemma34_bracket() {
    assert_suite("2 (k-partite cliquification bracket)", &lab_run("lemma34", &full_config()).unwrap());
}

#[test]
fn criterion_2_lemma36_bracket() {
    assert_suite("2 (make-clique bracket)", &lab_run("lemma36", &full_config()).unwrap());
}

#[test]
fn criterion_3_cut_bound_sweep() {
    // At least 100 verified class members with n <= 14, every subset X.
    let cfg = RunConfig {
        seed: 0xC0FFEE,
        trials: 100,
        max_n: 14,
        ..Default::default()
    };
    let rep = lab_run("thm41-cutbounds", &cfg).unwrap();
    assert!(rep.trials_run >= 100, "only {} members", rep.trials_run);
    assert!(rep.max_width_observed <= 5);
    assert_suite("3 (exhaustive cut bound, 100+ graphs to n=14)", &rep);
}

#[test]
fn criterion_4_first_algorithm_exact() {
    let cfg = RunConfig {
        max_n: 7,
        ..full_config()
    };
    assert_suite("4 (algorithm for the (2P2, K1,3)-free class)", &lab_run("thm45-alg", &cfg).unwrap());
}

#[test]
fn criterion_5_second_algorithm_widths() {
    let mut ok = true;
    let mut detail = String::new();
    for r in [5usize, 6, 7] {
        let started = std::time::Instant::now();
        let g = graph_from_name(&format!("KmK({r})")).unwrap();
        let cert = decompose_2p1p2_bowtie(&g).unwrap();
        let verified = mimw_of_decomposition(&g, &cert.decomposition).unwrap();
        let elapsed = started.elapsed();
        detail.push_str(&format!("r={r}: width {verified} in {elapsed:?}; "));
        ok &= verified == 2 && elapsed.as_secs() < 1;
    }
    report_line("5 (matched-cliques widths exactly 2)", ok, &detail);
}

#[test]
fn criterion_6_classification_sweep() {
    let started = std::time::Instant::now();
    let rep = lab_run("corollary65-sweep", &full_config()).unwrap();
    let detail = format!(
        "{} pairs in {:?}, {} unresolved/open/inconsistent",
        rep.trials_run,
        started.elapsed(),
        rep.violations.len()
    );
    assert!(rep.trials_run > 1900);
    assert!(started.elapsed().as_secs() < 1800);
    report_line("6 (full sweep of pairs totaling <= 8 vertices)", rep.passed(), &detail);
}

#[test]
fn criterion_7_gadget_freeness() {
    let cfg = RunConfig {
        max_n: 6,
        ..full_config()
    };
    assert_suite("7a (G' chordal bipartite and path-pattern free)", &lab_run("gprime-freeness", &cfg).unwrap());
    assert_suite("7b (G'' freeness on bipartite seeds)", &lab_run("gdoubleprime-freeness", &cfg).unwrap());
}

#[test]
fn criterion_8_coloring_suites() {
    assert_suite("8a (net-wall 4-coloring properties)", &lab_run("coloring4", &full_config()).unwrap());
    assert_suite("8b (net-wall 3-coloring properties)", &lab_run("coloring3", &full_config()).unwrap());
}

#[test]
fn criterion_9_structural_substitutes() {
    // The asymptotic lower bounds (wall mim-width growing with n, and the
    // treewidth-based bounds for G'/G'') are NOT reproduced numerically:
    // they need graphs far beyond the exact oracle. The structural
    // substitutes are exact instead: vertex-count formula, subcubicity,
    // bipartiteness for walls at desk scale.
    let bad = structural_substitute_checks();
    println!(
        "note: asymptotic width lower bounds are acknowledged as not \
         numerically reproduced; structural checks stand in for them"
    );
    report_line(
        "9 (structural substitution for asymptotic bounds)",
        bad.is_empty(),
        &format!("{} structural violations", bad.len()),
    );
}
