//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits non-zero if any of them fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use braidcong::report::{Report, Status};
use braidcong::suites::{run_suite, SuiteConfig};
use serde_json::{json, Value};

type Criterion = (&'static str, Box<dyn Fn(&mut Check)>);

struct Check {
    ok: bool,
    notes: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { ok: true, notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.ok = false;
            self.notes.push(what.into());
        }
    }

    /// Every case in the report passed and none was skipped.
    fn report(&mut self, report: &Report) {
        for case in &report.cases {
            match case.status {
                Status::Pass => {}
                Status::Fail => self.require(
                    false,
                    format!("{}/{}: expected {}, got {}", report.suite, case.name, case.expected, case.actual),
                ),
                Status::Skipped => self.require(false, format!("{}/{} was skipped", report.suite, case.name)),
            }
        }
        self.require(!report.cases.is_empty(), format!("{} produced no cases", report.suite));
    }

    /// The case called `name` reports `value`.
    fn value(&mut self, report: &Report, name: &str, value: Value) {
        match report.cases.iter().find(|c| c.name == name) {
            Some(c) => self.require(c.actual == value, format!("{name}: wanted {value}, got {}", c.actual)),
            None => self.require(false, format!("{}: no case {name}", report.suite)),
        }
    }

    fn within(&mut self, elapsed: Duration, budget: Duration) {
        self.require(elapsed <= budget, format!("took {elapsed:.1?}, budget {budget:?}"));
    }
}

fn suite(name: &str, config: &SuiteConfig) -> Report {
    run_suite(name, config).unwrap_or_else(|e| panic!("suite {name} errored: {e}"))
}

fn representation_soundness(c: &mut Check) {
    let start = Instant::now();
    let r = suite("braid-relators", &SuiteConfig { samples: Some(500), ..SuiteConfig::default() });
    c.within(start.elapsed(), Duration::from_secs(10));
    c.report(&r);
    for n in 3..=8 {
        c.value(&r, &format!("n={n}/random-preserve-form"), json!(500));
    }
    for n in [4, 6, 8] {
        c.value(&r, &format!("n={n}/random-fix-u"), json!(500));
    }
}

fn surjectivity(c: &mut Check) {
    let start = Instant::now();
    let r = suite("acampo", &SuiteConfig::default());
    c.within(start.elapsed(), Duration::from_secs(120));
    c.report(&r);
    c.value(&r, "n=3,p=3/image-order", json!(24));
    c.value(&r, "n=3,p=5/image-order", json!(120));
    c.value(&r, "n=5,p=3/image-order", json!(51840));
    c.value(&r, "n=4,p=3/image-order", json!(648));
    c.value(&r, "n=4,p=3/orbit-size", json!(80));
}

fn relator_suite(name: &'static str, expected_prefixes: &'static [&'static str]) -> impl Fn(&mut Check) {
    move |c| {
        let r = suite(name, &SuiteConfig::default());
        c.report(&r);
        for prefix in expected_prefixes {
            c.require(
                r.cases.iter().any(|case| case.name.starts_with(prefix)),
                format!("{name}: no cases for {prefix}"),
            );
        }
    }
}

fn involution(c: &mut Check) {
    let r = suite("lemma42", &SuiteConfig::default());
    c.report(&r);
    c.value(&r, "center-acts-as-minus-identity", json!(true));
    for p in [5u64, 7, 11] {
        c.value(&r, &format!("p={p}/R5-in-kernel"), json!(true));
        c.value(&r, &format!("p={p}/rewritten-in-kernel"), json!(true));
        c.value(&r, &format!("p={p}/lhs-e1-mod-p"), json!([p - 1, 0]));
    }
}

fn symmetric_quotient(c: &mut Check) {
    let r = suite("symmetric-quotient", &SuiteConfig { samples: Some(1000), ..SuiteConfig::default() });
    c.report(&r);
    for n in [3, 4] {
        for p in [3, 5] {
            c.value(&r, &format!("n={n},p={p}/b/crt-kernel-mismatches"), json!(0));
        }
    }
    c.value(&r, "b33-mod-6/order", json!(6));
    c.value(&r, "b33-mod-6/is-s3", json!(true));
}

fn newman_smart(c: &mut Check) {
    let r = suite("newman-smart", &SuiteConfig { samples: Some(1000), ..SuiteConfig::default() });
    c.report(&r);
    c.value(&r, "sp2-z6/order", json!(144));
    for m in [6, 12, 15, 30] {
        c.value(&r, &format!("random/m={m}/crt-round-trip"), json!(1000));
    }
}

fn level_two_kernel(c: &mut Check) {
    let r = suite("prop34", &SuiteConfig::default());
    c.report(&r);
    c.value(&r, "kernel-order", json!(1024));
    c.value(&r, "abelian", json!(true));
    c.value(&r, "exponent", json!(2));
    c.value(&r, "log-injective", json!(1024));
    c.value(&r, "lie-algebra-brute-force", json!(1024));
}

fn exact_sequence(c: &mut Check) {
    let start = Instant::now();
    let config = SuiteConfig::default();
    let seq = suite("lemma32", &SuiteConfig { p: Some(2), ..config.clone() });
    let kernel = suite("cp-kernel", &SuiteConfig { p: Some(3), ..config });
    c.within(start.elapsed(), Duration::from_secs(180));
    c.report(&seq);
    c.report(&kernel);
    c.value(&seq, "a=2,b=3/image-order", json!(51840));
    c.value(&kernel, "p=3/kernel-order", json!(59049));
    c.value(&kernel, "p=3/log-in-lie-algebra", json!(true));
}

fn pure_images(c: &mut Check) {
    let r = suite("theorem-b", &SuiteConfig::default());
    c.report(&r);
    c.value(&r, "n=3,m=6/image-order", json!(24));
    c.value(&r, "n=3,m=30/image-order", json!(2880));
    c.value(&r, "n=3,m=12/image-order", json!(192));
    c.value(&r, "n=4,m=6/image-order", json!(648));
}

fn coset_enumeration(c: &mut Check) {
    let r = suite("todd-coxeter", &SuiteConfig { full: true, ..SuiteConfig::default() });
    c.report(&r);
    for (n, order) in [(2, 2), (3, 6), (4, 24), (5, 120)] {
        c.value(&r, &format!("S({n})"), json!(order));
    }
    c.value(&r, "G(3,3)", json!(24));
    c.value(&r, "G(3,5)", json!(120));
    c.value(&r, "H(3,3)", json!(24));
    c.value(&r, "G(4,3)", json!(648));
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("representation soundness", Box::new(representation_soundness)),
        ("surjectivity mod p", Box::new(surjectivity)),
        ("generating relators in B_n[p]", Box::new(relator_suite("wajnryb", &["n=3,p=3", "n=6,p=7"]))),
        ("involution relator", Box::new(involution)),
        ("center maps", Box::new(relator_suite("lemma43", &["k=3,p=3,n=5", "k=3,p=5,n=5", "k=5,p=3,n=7"]))),
        ("chain elements", Box::new(relator_suite("chain", &["separating/", "odd-square/"]))),
        ("pure relators in B_n[p]", Box::new(relator_suite("sypre", &["n=3,p=3", "n=5,p=5"]))),
        ("level 2p generators", Box::new(relator_suite("cor54", &["n=3,p=3", "n=4,p=5", "n=5,p=5"]))),
        ("B_3[3] generators", Box::new(relator_suite("b33", &["member/", "identity/", "alternate-set"]))),
        ("symmetric quotient", Box::new(symmetric_quotient)),
        ("Chinese remainder splitting", Box::new(newman_smart)),
        ("level-2 kernel", Box::new(level_two_kernel)),
        ("exact sequence shadow", Box::new(exact_sequence)),
        ("pure braid images", Box::new(pure_images)),
        ("coset enumeration", Box::new(coset_enumeration)),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let mut check = Check::new();
        let start = Instant::now();
        run(&mut check);
        let verdict = if check.ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {verdict}  {title} ({:.2?})", i + 1, start.elapsed());
        for note in &check.notes {
            println!("    {note}");
        }
        failed += usize::from(!check.ok);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
