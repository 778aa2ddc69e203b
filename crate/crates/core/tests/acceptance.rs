//! Acceptance criteria, run as a plain binary so every PASS/FAIL line is
//! printed. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use chroma::combinat::enumerate_uios;
use chroma::scan::{scan_e_positivity, Family, DEFAULT_SCAN_CAP};
use chroma::verify::{run_suite, Bounds, Suite, VerificationReport};

struct Outcome {
    passed: bool,
    summary: String,
}

fn suite(s: Suite, bounds: Bounds) -> Outcome {
    match run_suite(s, &bounds) {
        Ok(r) => from_report(&r),
        Err(e) => Outcome { passed: false, summary: format!("error: {e}") },
    }
}

fn from_report(r: &VerificationReport) -> Outcome {
    let failures = r.failures().count();
    let mut summary = format!("{} instances, {} checks, {failures} failures", r.instance_count(), r.check_count());
    if let Some((i, c)) = r.failures().next() {
        summary.push_str(&format!("; first: {} on {i}", c.name));
    }
    Outcome { passed: r.passed() && r.instance_count() > 0, summary }
}

fn with(base: Suite, f: impl FnOnce(Bounds) -> Bounds) -> Bounds {
    f(base.default_bounds())
}

fn main() {
    let uio_total = |n: usize| (1..=n).map(|m| enumerate_uios(m).len()).sum::<usize>();
    type Criterion = (u32, &'static str, Duration, Box<dyn FnOnce() -> Outcome>);
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "complete graphs",
            Duration::from_secs(5),
            Box::new(|| suite(Suite::Complete, Bounds { max_n: 6, ..Bounds::default() })),
        ),
        (
            2,
            "power sums via corrects",
            Duration::from_secs(120),
            Box::new(move || {
                let mut o = suite(Suite::Ppos, Bounds { max_n: 6, max_k: 6, ..Bounds::default() });
                o.passed &= uio_total(6) == 196;
                o
            }),
        ),
        (
            3,
            "covering corrects",
            Duration::from_secs(120),
            Box::new(|| suite(Suite::Eposn, Bounds { max_n: 6, ..Bounds::default() })),
        ),
        (
            4,
            "Schur analogues via paths",
            Duration::from_secs(300),
            Box::new(|| suite(Suite::Gasharov, Bounds { max_n: 5, max_k: 5, ..Bounds::default() })),
        ),
        (
            5,
            "path determinant",
            Duration::from_secs(120),
            Box::new(|| suite(Suite::Lgv, Bounds { max_n: 4, max_k: 4, ..Bounds::default() })),
        ),
        (
            6,
            "sinks",
            Duration::from_secs(180),
            Box::new(|| suite(Suite::Sink, Bounds { max_n: 6, max_graph_n: 5, ..Bounds::default() })),
        ),
        (
            7,
            "truncated Cauchy identity",
            Duration::from_secs(30),
            Box::new(|| suite(Suite::Cauchy, Bounds { max_degree: 5, ..Bounds::default() })),
        ),
        (
            8,
            "clan graphs",
            Duration::from_secs(180),
            Box::new(|| {
                suite(
                    Suite::Gnechrom,
                    with(Suite::Gnechrom, |b| Bounds { max_n: 4, max_alpha_entry: 2, max_alpha_sum: 6, ..b }),
                )
            }),
        ),
        (
            9,
            "involutions",
            Duration::from_secs(300),
            Box::new(|| suite(Suite::Involutions, Bounds { max_n: 4, max_k: 4, ..Bounds::default() })),
        ),
        (
            10,
            "m_(l,1) via corrects",
            Duration::from_secs(120),
            Box::new(|| suite(Suite::Thn1, Bounds { max_n: 6, max_k: 5, ..Bounds::default() })),
        ),
        (
            11,
            "Scott-Suppes",
            Duration::from_secs(120),
            Box::new(|| suite(Suite::ScottSuppes, Bounds { max_n: 6, ..Bounds::default() })),
        ),
        (
            12,
            "e-positivity scan",
            Duration::from_secs(900),
            Box::new(|| {
                let pool = rayon::ThreadPoolBuilder::new().num_threads(4).build().expect("pool");
                match pool.install(|| scan_e_positivity(Family::All, 7, 0, DEFAULT_SCAN_CAP)) {
                    Ok(r) => Outcome {
                        passed: r.passed() && r.scanned.len() == 625,
                        summary: format!("{} UIOs, {} negatives", r.scanned.len(), r.negatives.len()),
                    },
                    Err(e) => Outcome { passed: false, summary: format!("error: {e}") },
                }
            }),
        ),
        (
            13,
            "basis engine",
            Duration::from_secs(30),
            Box::new(|| suite(Suite::Basis, Bounds { max_degree: 6, ..Bounds::default() })),
        ),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let mut o = run();
        let elapsed = start.elapsed();
        if elapsed > budget {
            o.passed = false;
            o.summary.push_str(&format!("; over the {}s budget", budget.as_secs()));
        }
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!("[{verdict}] criterion {id:>2} {name}: {} ({:.2}s)", o.summary, elapsed.as_secs_f64());
        failed += usize::from(!o.passed);
    }
    println!("{} of 13 criteria passed", 13 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
