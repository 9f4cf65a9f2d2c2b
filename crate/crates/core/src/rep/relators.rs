use serde::Serialize;

use super::families::{chain_word, Claim, CongruenceElement, Family};
use super::{a_k_word, check_odd_prime};
use crate::braid::{BraidWord, PureWord};
use crate::error::{Error, Result};

/// A relator word with a short name such as `R5` or `PR8(1,3)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedWord {
    pub name: String,
    #[serde(serialize_with = "word_text")]
    pub word: BraidWord,
}

fn word_text<S: serde::Serializer>(w: &BraidWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_text())
}

fn letter_pow(n: usize, i: i32, e: i64) -> Result<BraidWord> {
    BraidWord::generator_power(n, i, e)
}

fn require_strands(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!("needs at least {min} strands, got {n}")));
    }
    Ok(())
}

/// `σ_1^k σ_2^4 σ_1^{-k} · (σ_2² σ_1 σ_2⁻²)⁻¹` with `k = (p-1)/2`.
pub fn r5_relator(p: u64, n: usize) -> Result<BraidWord> {
    check_odd_prime(p)?;
    require_strands(n, 3)?;
    let k = ((p - 1) / 2) as i64;
    let lhs = letter_pow(n, 1, k)? * letter_pow(n, 2, 4)? * letter_pow(n, 1, -k)?;
    let rhs = letter_pow(n, 2, 2)? * letter_pow(n, 1, 1)? * letter_pow(n, 2, -2)?;
    Ok(lhs * rhs.inverse())
}

/// `(σ_1^{(p+1)/2} σ_2^4)²`.
pub fn lemma42_lhs(p: u64, n: usize) -> Result<BraidWord> {
    check_odd_prime(p)?;
    require_strands(n, 3)?;
    Ok((letter_pow(n, 1, p.div_ceil(2) as i64)? * letter_pow(n, 2, 4)?).pow(2))
}

/// `(σ_1^{(p+1)/2} σ_2^4)² · ((σ_1 σ_2)³)⁻¹`.
pub fn lemma42_relator(p: u64, n: usize) -> Result<BraidWord> {
    Ok(lemma42_lhs(p, n)? * chain_word(2, n)?.pow(-3))
}

/// Relators R3–R6 of the level-`p` quotient presentation, with the `p > 3`
/// and `n > 4` side conditions applied.
pub fn wajnryb_relators(n: usize, p: u64) -> Result<Vec<NamedWord>> {
    wajnryb_relators_with(n, p, false)
}

/// As [`wajnryb_relators`]; `ignore_p_condition` also emits R4 and R5 at `p = 3`.
pub fn wajnryb_relators_with(n: usize, p: u64, ignore_p_condition: bool) -> Result<Vec<NamedWord>> {
    check_odd_prime(p)?;
    require_strands(n, 3)?;
    let named = |name: &str, word| NamedWord { name: name.to_string(), word };
    let mut out = vec![named("R3", letter_pow(n, 1, p as i64)?)];
    if p > 3 || ignore_p_condition {
        out.push(named("R4", chain_word(2, n)?.pow(6)));
        out.push(named("R5", r5_relator(p, n)?));
    }
    if n > 4 {
        let a = a_k_word(3, p, n)?;
        let rhs = &(&a * &letter_pow(n, 1, 2)?) * &a.inverse();
        out.push(named("R6", chain_word(3, n)?.pow(4) * rhs.inverse()));
    }
    Ok(out)
}

/// `C` of PR9.
fn pr9_c(p: u64) -> PureWord {
    let a = PureWord::power;
    if p.div_ceil(2).is_multiple_of(2) {
        a(1, 2, ((p + 1) / 4) as i64).then(&a(2, 3, 2)).pow(2)
    } else {
        PureWord::product([
            &a(1, 2, p.div_ceil(4) as i64),
            &a(1, 3, 2),
            &a(1, 2, ((p - 1) / 4) as i64),
            &a(2, 3, 2),
        ])
    }
}

/// `B = a_{3,5} a_{4,5} a_{2,3}^j a_{3,4}⁻¹` with `2j ≡ k (mod p)`.
///
/// For even `k` this is `j = k/2`. For odd `k`, `j = (3k+1)/2`; the
/// alternative form `a_{3,5} a_{4,5} a_{2,3}^{k+1} a_{3,4}` (see
/// [`pr10_b_literal`]) does not give an element of `B_5[p]`.
pub fn pr10_b(p: u64) -> PureWord {
    let k = ((p - 1) / 2) as i64;
    let j = if k % 2 == 0 { k / 2 } else { (3 * k + 1) / 2 };
    let a = PureWord::power;
    PureWord::product([&a(3, 5, 1), &a(4, 5, 1), &a(2, 3, j), &a(3, 4, -1)])
}

/// `B = a_{3,5} a_{4,5} a_{2,3}^{k/2} a_{3,4}⁻¹` for even `k`,
/// `a_{3,5} a_{4,5} a_{2,3}^{k+1} a_{3,4}` for odd `k`.
pub fn pr10_b_literal(p: u64) -> PureWord {
    let k = ((p - 1) / 2) as i64;
    let a = PureWord::power;
    if k % 2 == 0 {
        PureWord::product([&a(3, 5, 1), &a(4, 5, 1), &a(2, 3, k / 2), &a(3, 4, -1)])
    } else {
        PureWord::product([&a(3, 5, 1), &a(4, 5, 1), &a(2, 3, k + 1), &a(3, 4, 1)])
    }
}

/// `a_{1,2} a_{1,3} a_{1,4} a_{2,3} a_{2,4} a_{3,4} · (B a_{1,4} B⁻¹)⁻¹`.
pub fn pr10_relator(b: &PureWord) -> PureWord {
    let g = PureWord::gen;
    let lhs = PureWord::product([&g(1, 2), &g(1, 3), &g(1, 4), &g(2, 3), &g(2, 4), &g(3, 4)]);
    let rhs = PureWord::product([b, &g(1, 4), &b.inverse()]);
    lhs.then(&rhs.inverse())
}

/// `a_{j-1,j}^{k+1} ⋯ a_{i+1,i+2}^{k+1} · a_{i,i+1} · a_{i+1,i+2}^k ⋯ a_{j-1,j}^k`.
fn pr8_rhs(i: usize, j: usize, k: i64) -> PureWord {
    let mut w = PureWord::default();
    for t in ((i + 1)..j).rev() {
        w = w.then(&PureWord::power(t, t + 1, k + 1));
    }
    w = w.then(&PureWord::gen(i, i + 1));
    for t in (i + 1)..j {
        w = w.then(&PureWord::power(t, t + 1, k));
    }
    w
}

/// PR1, PR2, PR3 (`p > 3`), PR8, PR9 and PR10 (`n ≥ 5`) as relators in the
/// pure braid generators.
pub fn sypre_relations(n: usize, p: u64) -> Result<Vec<(String, PureWord)>> {
    check_odd_prime(p)?;
    require_strands(n, 3)?;
    let k = ((p - 1) / 2) as i64;
    let a = PureWord::power;
    let g = PureWord::gen;
    let mut out = Vec::new();
    for i in 1..=(n - 2) {
        let x = a(i, i + 1, k);
        let y = a(i + 1, i + 2, k);
        let lhs = PureWord::product([&x, &y, &x]);
        let rhs = PureWord::product([&y, &x, &y]);
        out.push((format!("PR1({i})"), lhs.then(&rhs.inverse())));
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push((format!("PR2({i},{j})"), a(i, j, p as i64)));
        }
    }
    let triple = PureWord::product([&g(1, 2), &g(1, 3), &g(2, 3)]);
    if p > 3 {
        out.push(("PR3".to_string(), triple.pow(2)));
    }
    for i in 1..=n {
        for j in (i + 2)..=n {
            out.push((format!("PR8({i},{j})"), pr8_rhs(i, j, k).then(&g(i, j).inverse())));
        }
    }
    out.push(("PR9".to_string(), triple.then(&pr9_c(p).inverse())));
    if n >= 5 {
        out.push(("PR10".to_string(), pr10_relator(&pr10_b(p))));
    }
    Ok(out)
}

/// [`sypre_relations`] expanded into Artin generators.
pub fn sypre_relators(n: usize, p: u64) -> Result<Vec<NamedWord>> {
    sypre_relations(n, p)?
        .into_iter()
        .map(|(name, w)| Ok(NamedWord { name, word: w.expand(n)? }))
        .collect()
}

/// The six families of normal generators of `B_n[2p]`, each claimed at level `2p`.
pub fn cor54_generators(n: usize, p: u64) -> Result<Vec<CongruenceElement>> {
    check_odd_prime(p)?;
    require_strands(n, 3)?;
    let k = ((p - 1) / 2) as i64;
    let a = PureWord::power;
    let g = PureWord::gen;
    let level = Claim::Level(2 * p);
    let mut out = Vec::new();
    let mut push = |label: String, family: i64, w: PureWord, extra: &[(&str, i64)]| -> Result<()> {
        let mut params = vec![("family", family), ("p", p as i64), ("n", n as i64)];
        params.extend_from_slice(extra);
        out.push(CongruenceElement::new(label, Family::Cor54, &params, w.expand(n)?, level)?);
        Ok(())
    };
    for i in 1..=n {
        for j in (i + 1)..=n {
            push(format!("a{i}{j}^{p}"), 1, a(i, j, p as i64), &[("i", i as i64), ("j", j as i64)])?;
        }
    }
    let triple = PureWord::product([&g(1, 2), &g(1, 3), &g(2, 3)]);
    push("(a12 a13 a23)^2".into(), 2, triple.pow(2), &[])?;
    push("a12 a13 a23 C^-1".into(), 3, triple.then(&pr9_c(p).inverse()), &[])?;
    if n >= 5 {
        push("a12 a13 a14 a23 a24 a34 B a14^-1 B^-1".into(), 4, pr10_relator(&pr10_b(p)), &[])?;
    }
    for i in 1..=(n - 2) {
        let x = a(i, i + 1, k);
        let y = a(i + 1, i + 2, k);
        let w = PureWord::product([&x, &y, &x, &y.inverse(), &x.inverse(), &y.inverse()]);
        push(format!("braid-relation({i})"), 5, w, &[("i", i as i64)])?;
    }
    for i in 1..=n {
        for j in (i + 2)..=n {
            let w = pr8_rhs(i, j, k).then(&g(i, j).inverse());
            push(format!("a{i}{j}-expansion"), 6, w, &[("i", i as i64), ("j", j as i64)])?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{in_congruence, rho};

    #[test]
    fn wajnryb_side_conditions() {
        let names = |n, p| -> Vec<String> {
            wajnryb_relators(n, p).unwrap().into_iter().map(|r| r.name).collect()
        };
        assert_eq!(names(3, 3), ["R3"]);
        assert_eq!(names(3, 5), ["R3", "R4", "R5"]);
        assert_eq!(names(5, 3), ["R3", "R6"]);
        assert_eq!(wajnryb_relators_with(3, 3, true).unwrap().len(), 3);
        assert!(wajnryb_relators(3, 9).is_err());
    }

    #[test]
    fn wajnryb_relators_in_kernel() {
        for n in 3..7 {
            for p in [3, 5, 7] {
                for r in wajnryb_relators(n, p).unwrap() {
                    assert!(in_congruence(&r.word, p).unwrap(), "{} n={n} p={p}", r.name);
                }
            }
        }
    }

    #[test]
    fn involution_relator_forms_agree() {
        for p in [5, 7, 11] {
            assert!(in_congruence(&r5_relator(p, 3).unwrap(), p).unwrap());
            assert!(in_congruence(&lemma42_relator(p, 3).unwrap(), p).unwrap());
        }
    }

    #[test]
    fn pure_presentation_relators_in_kernel() {
        for n in 3..7 {
            for p in [3, 5, 7] {
                for r in sypre_relators(n, p).unwrap() {
                    assert!(in_congruence(&r.word, p).unwrap(), "{} n={n} p={p}", r.name);
                }
            }
        }
    }

    #[test]
    fn pure_relation_example() {
        // p = 3, n = 3: a13 = a23^2 a12 a23
        let (_, w) = sypre_relations(3, 3)
            .unwrap()
            .into_iter()
            .find(|(name, _)| name == "PR8(1,3)")
            .unwrap();
        assert_eq!(w.to_string(), "a23^2 a12 a23 a13^-1");
    }

    #[test]
    fn unhalved_exponent_fails_for_odd_k() {
        for p in [3, 7, 11] {
            let w = pr10_relator(&pr10_b_literal(p)).expand(5).unwrap();
            assert!(!in_congruence(&w, p).unwrap(), "p = {p}");
        }
        let w = pr10_relator(&pr10_b_literal(5)).expand(5).unwrap();
        assert!(in_congruence(&w, 5).unwrap());
        assert_eq!(pr10_b(5), pr10_b_literal(5));
    }

    #[test]
    fn twist_relation_left_side_is_full_twist() {
        let g = PureWord::gen;
        let lhs = PureWord::product([&g(1, 2), &g(1, 3), &g(1, 4), &g(2, 3), &g(2, 4), &g(3, 4)]);
        let twist = chain_word(3, 5).unwrap().pow(4);
        assert_eq!(rho(&lhs.expand(5).unwrap()).unwrap(), rho(&twist).unwrap());
    }

    #[test]
    fn level_2p_generators_hold() {
        for n in 3..6 {
            for p in [3, 5] {
                let gens = cor54_generators(n, p).unwrap();
                for e in &gens {
                    assert!(e.holds, "{} n={n} p={p}", e.label);
                }
                let families: std::collections::BTreeSet<i64> =
                    gens.iter().map(|e| e.params[0].1).collect();
                let expected: Vec<i64> = if n >= 5 { (1..=6).collect() } else { vec![1, 2, 3, 5, 6] };
                assert_eq!(families.into_iter().collect::<Vec<_>>(), expected);
            }
        }
    }
}
