//! Named verification suites. Each suite runs over a parameter grid and
//! returns a [`Report`] whose cases are sorted by name.

use std::collections::HashSet;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::braid::{braid_relators, is_trivial, pure_braid_relators, random_word, BraidWord};
use crate::error::{Error, Result};
use crate::group::{
    recognize_symmetric, verify_cp_kernel_generation, verify_exact_sequence_32, verify_theorem_b,
    BfsOptions, FiniteMatrixGroup, DEFAULT_LIMIT,
};
use crate::parallel::{map_slice, Strategy};
use crate::rep::{
    a_k_action_check, b33_alternate_set_check, b33_generators, b33_proof_identities, center_element,
    cor54_generators, involution_element, lemma42_lhs, lemma42_relator, odd_chain_square_check,
    pr10_b_literal, pr10_relator, r5_relator, separating_chain_element, symmetric_quotient_check,
    sypre_relators, wajnryb_relators, RepSpace,
};
use crate::report::{Case, Report};
use crate::symplectic::{
    church_putman_set, crt_join, crt_split, factorize, is_isometry, lie_brute_force_count, lie_check,
    log_map, reduce_mod, sp_order, sp_stabilizer_order, FormAction, ModularMatrix,
};
use crate::tc::{coset_enumerate, presentation_g, presentation_h, presentation_s, DEFAULT_MAX_COSETS};

pub const DEFAULT_SEED: u64 = 0x5eed_b4a1_d000_0001;

pub const SUITES: [&str; 16] = [
    "braid-relators",
    "wajnryb",
    "sypre",
    "cor54",
    "b33",
    "lemma42",
    "lemma43",
    "chain",
    "acampo",
    "theorem-b",
    "newman-smart",
    "prop34",
    "lemma32",
    "cp-kernel",
    "symmetric-quotient",
    "todd-coxeter",
];

/// Parameters for [`run_suite`]. Unset fields fall back to the suite's
/// default grid; `seed` drives every random choice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: Option<usize>,
    pub p: Option<u64>,
    pub m: Option<u64>,
    pub samples: Option<usize>,
    pub limit: usize,
    pub seed: u64,
    pub strategy: Strategy,
    /// Run the largest coset enumerations instead of marking them skipped.
    pub full: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n: None,
            p: None,
            m: None,
            samples: None,
            limit: DEFAULT_LIMIT,
            seed: DEFAULT_SEED,
            strategy: Strategy::default(),
            full: true,
        }
    }
}

impl SuiteConfig {
    fn ns(&self, default: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| default.to_vec(), |n| vec![n])
    }

    fn ps(&self, default: &[u64]) -> Vec<u64> {
        self.p.map_or_else(|| default.to_vec(), |p| vec![p])
    }

    fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    fn bfs(&self) -> BfsOptions {
        BfsOptions { strategy: self.strategy, ..BfsOptions::with_limit(self.limit) }
    }

    fn record(&self, report: &mut Report) {
        report.param("seed", self.seed).param("limit", self.limit);
        if let Some(n) = self.n {
            report.param("n", n);
        }
        if let Some(p) = self.p {
            report.param("p", p);
        }
        if let Some(m) = self.m {
            report.param("m", m);
        }
        if let Some(s) = self.samples {
            report.param("samples", s);
        }
    }
}

/// Runs the suite called `name`; see [`SUITES`].
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Report> {
    let mut report = Report::new(name);
    config.record(&mut report);
    match name {
        "braid-relators" => braid_relators_suite(config, &mut report)?,
        "wajnryb" => wajnryb_suite(config, &mut report)?,
        "sypre" => sypre_suite(config, &mut report)?,
        "cor54" => cor54_suite(config, &mut report)?,
        "b33" => b33_suite(&mut report)?,
        "lemma42" => lemma42_suite(config, &mut report)?,
        "lemma43" => lemma43_suite(config, &mut report)?,
        "chain" => chain_suite(config, &mut report)?,
        "acampo" => acampo_suite(config, &mut report)?,
        "theorem-b" => theorem_b_suite(config, &mut report)?,
        "newman-smart" => newman_smart_suite(config, &mut report)?,
        "prop34" => prop34_suite(config, &mut report)?,
        "lemma32" => lemma32_suite(config, &mut report)?,
        "cp-kernel" => cp_kernel_suite(config, &mut report)?,
        "symmetric-quotient" => symmetric_quotient_suite(config, &mut report)?,
        "todd-coxeter" => todd_coxeter_suite(config, &mut report)?,
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown suite '{other}', expected one of: {}",
                SUITES.join(", ")
            )))
        }
    }
    Ok(report.finish())
}

fn check(name: String, ok: bool) -> Case {
    Case::compare(name, json!(true), json!(ok))
}

/// One case per word: `true` when `pred` holds.
fn each_word<T: Sync>(
    report: &mut Report,
    prefix: &str,
    items: &[T],
    strategy: Strategy,
    label: impl Fn(&T) -> String,
    pred: impl Fn(&T) -> Result<bool> + Sync + Send,
) -> Result<()> {
    let results = map_slice(items, strategy, |x| pred(x));
    for (x, ok) in items.iter().zip(results) {
        report.push(check(format!("{prefix}/{}", label(x)), ok?));
    }
    Ok(())
}

fn braid_relators_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let samples = config.samples_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for n in config.ns(&[3, 4, 5, 6, 7, 8]) {
        let space = RepSpace::new(n)?;
        let rels = braid_relators(n);
        let pure = pure_braid_relators(n);
        let count = |words: &[BraidWord], f: &(dyn Fn(&BraidWord) -> Result<bool> + Sync)| -> Result<usize> {
            let results = map_slice(words, config.strategy, |w| f(w));
            results.into_iter().try_fold(0, |acc, r| Ok(acc + usize::from(r?)))
        };
        let rho_id = |w: &BraidWord| Ok(space.rho(w)?.is_identity());
        let trivial = |w: &BraidWord| Ok(is_trivial(w));
        let p = format!("n={n}");
        report.push(Case::compare(format!("{p}/relators-rho-identity"), json!(rels.len()), json!(count(&rels, &rho_id)?)));
        report.push(Case::compare(format!("{p}/relators-trivial"), json!(rels.len()), json!(count(&rels, &trivial)?)));
        report.push(Case::compare(format!("{p}/pure-relators-rho-identity"), json!(pure.len()), json!(count(&pure, &rho_id)?)));
        report.push(Case::compare(format!("{p}/pure-relators-trivial"), json!(pure.len()), json!(count(&pure, &trivial)?)));

        let words = (0..samples)
            .map(|_| {
                let len = rng.gen_range(0..=40);
                random_word(n, len, &mut rng)
            })
            .collect::<Result<Vec<_>>>()?;
        let preserves = |w: &BraidWord| is_isometry(&space.rho(w)?, space.form());
        report.push(Case::compare(format!("{p}/random-preserve-form"), json!(samples), json!(count(&words, &preserves)?)));
        if let Some(u) = space.fixed_vector() {
            let fixes = |w: &BraidWord| Ok(space.rho(w)?.fixes(u));
            report.push(Case::compare(format!("{p}/random-fix-u"), json!(samples), json!(count(&words, &fixes)?)));
        }
    }
    Ok(())
}

fn wajnryb_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    for n in config.ns(&[3, 4, 5, 6]) {
        for p in config.ps(&[3, 5, 7]) {
            let space = RepSpace::new(n)?;
            let rels = wajnryb_relators(n, p)?;
            each_word(report, &format!("n={n},p={p}"), &rels, config.strategy, |r| r.name.clone(), |r| {
                space.in_congruence(&r.word, p)
            })?;
        }
    }
    Ok(())
}

fn sypre_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    for n in config.ns(&[3, 5]) {
        for p in config.ps(&[3, 5]) {
            let space = RepSpace::new(n)?;
            let rels = sypre_relators(n, p)?;
            let prefix = format!("n={n},p={p}");
            each_word(report, &prefix, &rels, config.strategy, |r| r.name.clone(), |r| space.in_congruence(&r.word, p))?;
            // The un-halved exponent only agrees with the working one for even k.
            let k = (p - 1) / 2;
            if n >= 5 && k % 2 == 1 {
                let literal = pr10_relator(&pr10_b_literal(p)).expand(n)?;
                report.push(Case::compare(
                    format!("{prefix}/PR10-unhalved-exponent-in-kernel"),
                    json!(false),
                    json!(space.in_congruence(&literal, p)?),
                ));
            }
        }
    }
    Ok(())
}

fn cor54_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    for n in config.ns(&[3, 4, 5]) {
        for p in config.ps(&[3, 5]) {
            for e in cor54_generators(n, p)? {
                report.push(check(format!("n={n},p={p}/{}", e.label), e.holds));
            }
        }
    }
    Ok(())
}

fn b33_suite(report: &mut Report) -> Result<()> {
    for e in b33_generators()? {
        report.push(check(format!("member/{}", e.label), e.holds));
    }
    for id in b33_proof_identities() {
        report.push(check(format!("identity/{}", id.name), id.holds()));
    }
    report.push(check("alternate-set".into(), b33_alternate_set_check()));
    Ok(())
}

fn lemma42_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let space = RepSpace::new(3)?;
    let twist = space.rho(&BraidWord::new(3, vec![1, 2])?.pow(3))?;
    report.push(check("center-acts-as-minus-identity".into(), twist.neg().is_identity()));
    for p in config.ps(&[5, 7, 11]) {
        let prefix = format!("p={p}");
        report.push(check(format!("{prefix}/R5-in-kernel"), space.in_congruence(&r5_relator(p, 3)?, p)?));
        report.push(check(format!("{prefix}/rewritten-in-kernel"), space.in_congruence(&lemma42_relator(p, 3)?, p)?));
        let lhs_mod = space.rho_mod(&lemma42_lhs(p, 3)?, p)?;
        report.push(Case::compare(format!("{prefix}/lhs-e1-mod-p"), json!([p - 1, 0]), json!(lhs_mod.apply(&[1, 0]))));
        let lhs = space.rho(&lemma42_lhs(p, 3)?)?;
        let abs = |r, c| lhs.get(r, c).abs();
        let q = p as i128;
        let expected = [4 * q * q + 2 * q - 1, 8 * q, q * (q + 1), 2 * q + 1];
        let actual = [abs(0, 0), abs(1, 0), abs(0, 1), abs(1, 1)];
        report.push(Case::compare(
            format!("{prefix}/lhs-integer-coefficients"),
            json!(expected.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            json!(actual.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        ));
    }
    Ok(())
}

fn lemma43_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let grid: Vec<(usize, u64, usize)> = match (config.n, config.p) {
        (None, None) => vec![(3, 3, 5), (3, 5, 5), (5, 3, 7)],
        _ => {
            let n = config.n.unwrap_or(5);
            let p = config.p.unwrap_or(3);
            (3..=n.saturating_sub(2)).step_by(2).map(|k| (k, p, n)).collect()
        }
    };
    for (k, p, n) in grid {
        let prefix = format!("k={k},p={p},n={n}");
        report.push(check(format!("{prefix}/action"), a_k_action_check(k, p, n)?));
        report.push(check(format!("{prefix}/center-element"), center_element(k, p, n)?.holds));
    }
    Ok(())
}

fn chain_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let separating: Vec<(usize, usize)> = match config.n {
        None => vec![(1, 3), (1, 5), (2, 5), (2, 6)],
        Some(n) => (1..=(n - 1) / 2).map(|k| (k, n)).collect(),
    };
    for (k, n) in separating {
        let e = separating_chain_element(k, n)?;
        report.push(check(format!("separating/k={k},n={n}"), e.holds));
    }
    let odd: Vec<(usize, usize)> = match config.n {
        None => [1, 3, 5].iter().map(|&k| (k, k + 2)).collect(),
        Some(n) => (1..n).step_by(2).map(|k| (k, n)).collect(),
    };
    for (k, n) in odd {
        report.push(check(format!("odd-square/k={k},n={n}"), odd_chain_square_check(k, n)?));
    }
    for p in config.ps(&[5, 7]) {
        let n = config.n.unwrap_or(3);
        let e = involution_element(p, n)?;
        report.push(check(format!("involution/p={p},n={n}"), e.holds));
    }
    Ok(())
}

fn acampo_expected(n: usize, p: u64) -> u128 {
    let g = (n / 2) as u32;
    if n % 2 == 1 {
        sp_order(g, p)
    } else {
        sp_stabilizer_order(g, p)
    }
}

fn image(n: usize, m: u64, config: &SuiteConfig) -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::generate(&RepSpace::new(n)?.generator_images_mod(m)?, config.bfs())
}

fn acampo_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let grid: Vec<(usize, u64)> = match (config.n, config.p) {
        (None, None) => vec![(3, 3), (3, 5), (5, 3), (4, 3)],
        _ => vec![(config.n.unwrap_or(3), config.p.unwrap_or(3))],
    };
    for (n, p) in grid {
        let prefix = format!("n={n},p={p}");
        let g = image(n, p, config)?;
        report.push(Case::compare(format!("{prefix}/image-order"), json!(acampo_expected(n, p) as u64), json!(g.order())));
        if n % 2 == 0 {
            let space = RepSpace::new(n)?;
            let u: Vec<u64> = space.fixed_vector().unwrap_or_default().iter().map(|&x| x as u64).collect();
            report.push(check(format!("{prefix}/fixes-u"), g.all(|x| x.apply(&u) == u)));
            // The odd group one strand up acts on the same lattice with the same form.
            let big = image(n + 1, p, config)?;
            let orbit = big.orbit(&u)?.len();
            let stab = big.stabilizer_order(&u)?;
            report.push(Case::compare(format!("{prefix}/orbit-size"), json!(p.pow(n as u32) - 1), json!(orbit)));
            report.push(Case::compare(format!("{prefix}/stabilizer-order"), json!(g.order()), json!(stab)));
            report.push(Case::compare(format!("{prefix}/orbit-stabilizer"), json!(big.order()), json!(orbit * stab)));
        }
    }
    Ok(())
}

fn theorem_b_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let grid: Vec<(usize, u64)> = match (config.n, config.m) {
        (None, None) => vec![(3, 6), (3, 30), (3, 12), (4, 6)],
        _ => vec![(config.n.unwrap_or(3), config.m.unwrap_or(6))],
    };
    for (n, m) in grid {
        report.absorb(&format!("n={n},m={m}"), verify_theorem_b(n, m, config.limit)?);
    }
    Ok(())
}

fn random_matrix(rng: &mut ChaCha8Rng, dim: usize, m: u64) -> Result<ModularMatrix> {
    let rows: Vec<Vec<i64>> =
        (0..dim).map(|_| (0..dim).map(|_| rng.gen_range(0..m) as i64).collect()).collect();
    ModularMatrix::from_rows(&rows, m)
}

fn newman_smart_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let g = image(3, 6, config)?;
    report.push(Case::compare("sp2-z6/order", json!(144), json!(g.order())));
    for q in [2u64, 3] {
        let reduced: HashSet<Vec<u8>> =
            g.elements().iter().map(|x| x.reduce_to(q).map(|r| r.encode())).collect::<Result<_>>()?;
        report.push(Case::compare(format!("sp2-z6/image-mod-{q}"), json!(sp_order(1, q) as u64), json!(reduced.len())));
    }
    let round_trip = |a: &ModularMatrix| -> Result<bool> {
        let moduli: Vec<u64> = factorize(a.modulus()).iter().map(|&(p, e)| p.pow(e)).collect();
        Ok(crt_join(&crt_split(a, &moduli)?)? == *a)
    };
    let group_ok = g.elements().iter().try_fold(0usize, |acc, a| Ok::<_, Error>(acc + usize::from(round_trip(a)?)))?;
    report.push(Case::compare("sp2-z6/crt-round-trip", json!(g.order()), json!(group_ok)));
    let samples = config.samples_or(1000);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let moduli = config.m.map_or_else(|| vec![6, 12, 15, 30], |m| vec![m]);
    for m in moduli {
        let mut ok = 0;
        for _ in 0..samples {
            ok += usize::from(round_trip(&random_matrix(&mut rng, 4, m)?)?);
        }
        report.push(Case::compare(format!("random/m={m}/crt-round-trip"), json!(samples), json!(ok)));
    }
    Ok(())
}

fn prop34_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let half = 2;
    let gens = church_putman_set(2, half)?
        .iter()
        .map(|g| reduce_mod(&g.matrix, 4))
        .collect::<Result<Vec<_>>>()?;
    let k = FiniteMatrixGroup::generate(&gens, config.bfs())?;
    report.push(Case::compare("kernel-order", json!(1024), json!(k.order())));
    report.push(Case::compare("abelian", json!(true), json!(k.is_abelian())));
    report.push(Case::compare("exponent", json!(2), json!(k.exponent())));
    let logs = k.elements().iter().map(|x| log_map(x, 2, 2)).collect::<Result<Vec<_>>>()?;
    let lie = logs.iter().map(|h| lie_check(h, half)).collect::<Result<Vec<_>>>()?;
    report.push(Case::compare("log-in-lie-algebra", json!(k.order()), json!(lie.iter().filter(|&&b| b).count())));
    let distinct: HashSet<Vec<u8>> = logs.iter().map(ModularMatrix::encode).collect();
    report.push(Case::compare("log-injective", json!(k.order()), json!(distinct.len())));
    report.push(Case::compare("lie-algebra-brute-force", json!(distinct.len()), json!(lie_brute_force_count(half, 2)?)));
    let samples = config.samples_or(200);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut additive = 0;
    for _ in 0..samples {
        let a = &k.elements()[rng.gen_range(0..k.order())];
        let b = &k.elements()[rng.gen_range(0..k.order())];
        let lhs = log_map(&a.try_mul(b)?, 2, 2)?;
        let rhs = ModularMatrix::from_integer(&(&log_map(a, 2, 2)?.lift() + &log_map(b, 2, 2)?.lift()), 2)?;
        additive += usize::from(lhs == rhs);
    }
    report.push(Case::compare("log-additive", json!(samples), json!(additive)));
    Ok(())
}

fn lemma32_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let grid: Vec<(u64, u64)> = match config.p {
        None => vec![(2, 3), (3, 2)],
        Some(p) => vec![(p, if p == 2 { 3 } else { 2 })],
    };
    let half = config.n.unwrap_or(2);
    for (a, b) in grid {
        report.absorb(&format!("a={a},b={b}"), verify_exact_sequence_32(a, b, half, config.limit)?);
    }
    Ok(())
}

fn cp_kernel_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let half = config.n.unwrap_or(2);
    for p in config.ps(&[2, 3]) {
        report.absorb(&format!("p={p}"), verify_cp_kernel_generation(p, half, config.limit)?);
    }
    Ok(())
}

fn symmetric_quotient_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let samples = config.samples_or(1000);
    for n in config.ns(&[3, 4]) {
        for p in config.ps(&[3, 5]) {
            report.absorb(&format!("n={n},p={p}"), symmetric_quotient_check(n, p, samples, config.seed)?);
        }
    }
    let space = RepSpace::new(3)?;
    let gens = b33_generators()?
        .iter()
        .map(|e| space.rho_mod(&e.word, 6))
        .collect::<Result<Vec<_>>>()?;
    let g = FiniteMatrixGroup::generate(&gens, config.bfs())?;
    report.push(Case::compare("b33-mod-6/order", json!(6), json!(g.order())));
    report.push(check("b33-mod-6/is-s3".into(), recognize_symmetric(&g, 3)?));
    Ok(())
}

fn todd_coxeter_suite(config: &SuiteConfig, report: &mut Report) -> Result<()> {
    let max = config.limit.max(DEFAULT_MAX_COSETS);
    let mut run = |name: String, p: Result<crate::tc::Presentation>, expected: u64, heavy: bool| -> Result<()> {
        if heavy && !config.full {
            report.push(Case::skipped(name, json!(expected), "skipped outside full mode"));
            return Ok(());
        }
        let table = coset_enumerate(&p?, max)?;
        let index = if table.is_complete() { json!(table.index) } else { json!(null) };
        report.push(Case::compare(name, json!(expected), index));
        Ok(())
    };
    for n in 2..=5usize {
        run(format!("S({n})"), presentation_s(n), (1..=n as u64).product(), false)?;
    }
    // Index targets come from the matrix side, not from the presentations.
    for (n, p, heavy) in [(3, 3, false), (3, 5, false), (4, 3, false), (5, 3, true)] {
        let order = image(n, p, config)?.order() as u64;
        run(format!("G({n},{p})"), presentation_g(n, p), order, heavy)?;
        run(format!("H({n},{p})"), presentation_h(n, p), order, heavy)?;
    }
    Ok(())
}
