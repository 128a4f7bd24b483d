//! Acceptance gate: one line per criterion, each at its stated bounds.

use std::time::{Duration, Instant};

use qcat_core::report::Report;
use qcat_core::tableaux::{Partition, Tableau};
use qcat_core::verify;

fn run(n: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Report) -> bool {
    let start = Instant::now();
    let rep = f();
    let took = start.elapsed();
    let in_time = limit.map_or(true, |l| took < l);
    let ok = rep.passed() && in_time;
    println!(
        "criterion {n} {name}: {} ({} checks, {:.2}s)",
        if ok { "PASS" } else { "FAIL" },
        rep.checks.len(),
        took.as_secs_f64()
    );
    for c in rep.failures() {
        println!("    failed: {}{}", c.name, c.detail.as_ref().map(|d| format!(" ({d})")).unwrap_or_default());
    }
    if !in_time {
        println!("    over time limit {:?}", limit.unwrap());
    }
    ok
}

fn golden(parts: &[usize], a: &[i64], file: &str) -> bool {
    let t = Tableau::fill(&Partition::new(parts.to_vec()).unwrap(), a).unwrap();
    let got = serde_json::to_string(&t.summary()).unwrap() + "\n";
    let path = format!("{}/tests/golden/{file}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).map(|want| want == got).unwrap_or(false)
}

#[test]
fn acceptance() {
    let secs = |s| Some(Duration::from_secs(s));
    let results = [
        run(1, "closure dimension equals tableau count", secs(120), || verify::lemma22(6, 5).unwrap()),
        run(2, "wedge action closes and matches", secs(30), || verify::wedge_closure(5, 3).unwrap()),
        run(3, "degenerate affine Hecke relations", secs(30), || verify::hecke(3, 3, &[0, 1, 2]).unwrap()),
        run(4, "sl_k action on classes", secs(60), || verify::slk_action(4, 4)),
        run(5, "block discipline and weight step", None, || verify::blocks(5, 4).unwrap()),
        run(6, "parabolic restriction", None, || verify::parabolic(6, 4).unwrap()),
        run(7, "inverse dominance and block split", None, || verify::tensor_product_axioms(5).unwrap()),
        run(8, "graded bookkeeping", None, || verify::graded(5, 4).unwrap()),
        run(9, "fixture lock", None, || {
            let mut rep = verify::fixtures().unwrap();
            rep.push("golden (3,3,1)", golden(&[3, 3, 1], &[1, 2, 3, 4, 5, 6, 7], "fill_3_3_1.json"));
            rep.push(
                "golden (3,3,2,1)",
                golden(&[3, 3, 2, 1], &[3, 2, 1, 4, 3, 2, 2, 1, 3], "fill_3_3_2_1.json"),
            );
            rep
        }),
    ];
    assert!(results.iter().all(|&ok| ok), "acceptance criteria failed");
}
