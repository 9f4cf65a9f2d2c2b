use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{check_odd_prime, wajnryb_relators, RepSpace};
use crate::braid::{permutation, random_word, BraidWord, Permutation};
use crate::error::Result;
use crate::report::{Case, Report};

/// Desk check that `B_n[p] / B_n[2p] ≅ S_n`:
/// (a) `σ_i^p` maps to the transposition `s_i`;
/// (b) `w ∈ B_n[2p] ⟺ w ∈ B_n[2] ∧ w ∈ B_n[p]` on `samples` random words;
/// (c) on random elements of `B_n[p]`, `w ∈ B_n[2p] ⟺` `w` is pure.
pub fn symmetric_quotient_check(n: usize, p: u64, samples: usize, seed: u64) -> Result<Report> {
    check_odd_prime(p)?;
    let space = RepSpace::new(n)?;
    let mut report = Report::new("symmetric-quotient");
    report.param("n", n).param("p", p).param("samples", samples).param("seed", seed);

    for i in 1..n {
        let w = BraidWord::generator_power(n, i as i32, p as i64)?;
        let s = Permutation::adjacent(n, i);
        report.push(Case::compare(
            format!("a/tau(s{i}^{p})"),
            json!(s.to_string()),
            json!(permutation(&w).to_string()),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let in_all = |w: &BraidWord| -> Result<(bool, bool, bool)> {
        Ok((space.in_congruence(w, 2 * p)?, space.in_congruence(w, 2)?, space.in_congruence(w, p)?))
    };
    let mut mismatches = 0usize;
    for _ in 0..samples {
        let len = rng.gen_range(0..=40);
        let w = random_word(n, len, &mut rng)?;
        let (both, two, odd) = in_all(&w)?;
        mismatches += usize::from(both != (two && odd));
    }
    report.push(Case::compare("b/crt-kernel-mismatches", json!(0), json!(mismatches)));

    let mut pool: Vec<BraidWord> =
        (1..n).map(|i| BraidWord::generator_power(n, i as i32, p as i64)).collect::<Result<_>>()?;
    pool.extend(wajnryb_relators(n, p)?.into_iter().map(|r| r.word));
    let (mut outside, mut wrong, mut pure_count) = (0usize, 0usize, 0usize);
    for _ in 0..samples {
        let mut w = BraidWord::identity(n);
        for _ in 0..rng.gen_range(1..=4) {
            let g = random_word(n, rng.gen_range(0..=8), &mut rng)?;
            let r = &pool[rng.gen_range(0..pool.len())];
            let r = if rng.gen_bool(0.5) { r.inverse() } else { r.clone() };
            w = w * r.conjugate(&g)?;
        }
        let pure = permutation(&w).is_identity();
        pure_count += usize::from(pure);
        outside += usize::from(!space.in_congruence(&w, p)?);
        wrong += usize::from(space.in_congruence(&w, 2 * p)? != pure);
    }
    report.push(Case::compare("c/level-p-escapes", json!(0), json!(outside)));
    report.push(Case::compare("c/level-2p-vs-pure-mismatches", json!(0), json!(wrong)));
    report.push(Case::new(
        "c/both-cosets-sampled",
        samples == 0 || (pure_count > 0 && pure_count < samples),
        json!("pure and non-pure samples"),
        json!({ "pure": pure_count, "total": samples }),
    ));
    Ok(report.finish())
}
