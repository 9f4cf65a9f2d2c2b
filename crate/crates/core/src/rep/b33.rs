use super::families::{Claim, CongruenceElement, Family};
use crate::braid::{parse_word, words_equal, BraidWord};
use crate::error::Result;

/// A claimed equality of two braid words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidIdentity {
    pub name: String,
    pub lhs: BraidWord,
    pub rhs: BraidWord,
}

impl BraidIdentity {
    fn new(name: &str, lhs: &str, rhs: &str) -> Self {
        BraidIdentity {
            name: name.to_string(),
            lhs: parse_word(lhs, 3).expect("static word"),
            rhs: parse_word(rhs, 3).expect("static word"),
        }
    }

    pub fn holds(&self) -> bool {
        words_equal(&self.lhs, &self.rhs)
    }
}

/// `σ_1³, σ_2³, σ_2 σ_1³ σ_2⁻¹, σ_2² σ_1³ σ_2⁻²`, each claimed in `B_3[3]`.
pub fn b33_generators() -> Result<Vec<CongruenceElement>> {
    [
        ("s1^3", "1 1 1"),
        ("s2^3", "2 2 2"),
        ("s2 s1^3 s2^-1", "2 1 1 1 -2"),
        ("s2^2 s1^3 s2^-2", "2 2 1 1 1 -2 -2"),
    ]
    .into_iter()
    .map(|(label, w)| {
        CongruenceElement::new(label, Family::B33, &[("p", 3)], parse_word(w, 3)?, Claim::Level(3))
    })
    .collect()
}

/// Every equality used to show that conjugating the four generators by
/// `σ_1^{±1}` or `σ_2^{±1}` stays inside the subgroup they generate.
pub fn b33_proof_identities() -> Vec<BraidIdentity> {
    let id = BraidIdentity::new;
    vec![
        id("conjugation", "2 1 1 1 -2", "-1 2 2 2 1"),
        id("step1-a", "-2 1 1 1 2", "-2 -2 -2 2 2 1 1 1 -2 -2 2 2 2"),
        id("step1-b", "-1 2 2 2 1", "2 1 1 1 -2"),
        id("step1-c", "1 2 2 2 -1", "-2 1 1 1 2"),
        id("step1-d", "1 2 2 2 -1", "-2 -2 -2 2 2 1 1 1 -2 -2 2 2 2"),
        id("step2-a", "1 2 1 1 1 -2 -1", "2 2 2"),
        id("step2-b", "-1 2 1 1 1 -2 1", "-1 -1 2 2 2 1 1"),
        id("step2-c", "-1 -1 2 2 2 1 1", "-1 -1 -1 1 2 2 2 -1 1 1 1"),
        id("step3-a", "-1 2 2 1 1 1 -2 -2 1", "-1 2 2 2 -2 1 1 1 2 -2 -2 -2 1"),
        id(
            "step3-b",
            "-1 2 2 2 -2 1 1 1 2 -2 -2 -2 1",
            "-1 2 2 2 1 -1 -2 1 1 1 2 1 -1 -2 -2 -2 1",
        ),
        id("step3-c", "-1 -2 1 1 1 2 1", "2 2 2"),
        id("step3-d", "2 2 1 1 1 -2 -2", "2 2 2 -2 1 1 1 2 -2 -2 -2"),
        id("step3-e", "1 -2 1 1 1 2 -1", "1 1 2 2 2 -1 -1"),
        id("step3-f", "1 1 2 2 2 -1 -1", "1 1 1 -1 2 2 2 1 -1 -1 -1"),
        id("step3-g", "1 1 1 -1 2 2 2 1 -1 -1 -1", "1 1 1 2 1 1 1 -2 -1 -1 -1"),
    ]
}

/// `σ_2² σ_1³ σ_2⁻² = σ_2³ · (σ_2⁻¹ σ_1³ σ_2) · σ_2⁻³` in the free group, so
/// `σ_2⁻¹ σ_1³ σ_2` may replace the fourth generator.
pub fn b33_alternate_set_check() -> bool {
    let lhs = parse_word("2 2 1 1 1 -2 -2", 3).expect("static word");
    let rhs = parse_word("2 2 2 -2 1 1 1 2 -2 -2 -2", 3).expect("static word");
    lhs.free_reduce() == rhs.free_reduce()
}
