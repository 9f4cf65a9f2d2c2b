use std::fmt;

use serde::Serialize;

use super::{check_odd_prime, RepSpace};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::symplectic::{transvection, ModularMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PPower,
    SeparatingChain,
    Involution,
    Center,
    B33,
    Cor54,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::PPower => "p-power",
            Family::SeparatingChain => "separating-chain",
            Family::Involution => "involution",
            Family::Center => "center",
            Family::B33 => "b33",
            Family::Cor54 => "cor54",
            Family::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// The kernel an element is claimed to lie in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    /// `B_n[m]`.
    Level(u64),
    /// `ker ρ` over `ℤ`.
    Torelli,
}

/// A braid word together with the kernel it should belong to. The claim is
/// checked when the element is built and the outcome kept in `holds`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceElement {
    pub label: String,
    pub family: Family,
    pub params: Vec<(String, i64)>,
    pub claim: Claim,
    pub holds: bool,
    #[serde(serialize_with = "word_text")]
    pub word: BraidWord,
    pub note: Option<String>,
}

fn word_text<S: serde::Serializer>(w: &BraidWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_text())
}

impl CongruenceElement {
    pub fn new(
        label: impl Into<String>,
        family: Family,
        params: &[(&str, i64)],
        word: BraidWord,
        claim: Claim,
    ) -> Result<Self> {
        let space = RepSpace::new(word.strands())?;
        let holds = match claim {
            Claim::Level(m) => space.in_congruence(&word, m)?,
            Claim::Torelli => space.in_torelli(&word)?,
        };
        Ok(CongruenceElement {
            label: label.into(),
            family,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            claim,
            holds,
            word,
            note: None,
        })
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// `σ_1 σ_2 ⋯ σ_k`.
pub(crate) fn chain_word(k: usize, n: usize) -> Result<BraidWord> {
    BraidWord::new(n, (1..=k as i32).collect())
}

fn pow_letter(n: usize, i: i32, e: i64) -> BraidWord {
    BraidWord::generator_power(n, i, e).expect("index checked by caller")
}

/// `(σ_1 ⋯ σ_{2k})^{4k+2}`, the boundary twist of a genus-`k` chain.
pub fn separating_chain_element(k: usize, n: usize) -> Result<CongruenceElement> {
    if k == 0 || 2 * k > n.saturating_sub(1) {
        return Err(Error::InvalidParameter(format!(
            "a chain of {} curves does not fit in B_{n}",
            2 * k
        )));
    }
    let w = chain_word(2 * k, n)?.pow(4 * k as i64 + 2);
    CongruenceElement::new(
        format!("(s1..s{})^{}", 2 * k, 4 * k + 2),
        Family::SeparatingChain,
        &[("k", k as i64), ("n", n as i64)],
        w,
        Claim::Torelli,
    )
}

/// Whether `ρ((σ_1 ⋯ σ_k)^{k+1})` equals the square of the transvection along
/// `e_1 + e_3 + ⋯ + e_k`, exactly over `ℤ`.
pub fn odd_chain_square_check(k: usize, n: usize) -> Result<bool> {
    if k.is_multiple_of(2) || k + 1 > n {
        return Err(Error::InvalidParameter(format!("needs odd k <= n - 1, got k = {k}, n = {n}")));
    }
    let space = RepSpace::new(n)?;
    let lhs = space.rho(&chain_word(k, n)?.pow(k as i64 + 1))?;
    let rhs = transvection(&space.odd_chain_sum(k), space.form(), 2)?;
    Ok(lhs == rhs)
}

/// `(σ_1^{(p+1)/2} σ_2^4)^2 · ((σ_1 σ_2)^3)⁻¹`, claimed in `B_n[p]`.
pub fn involution_element(p: u64, n: usize) -> Result<CongruenceElement> {
    check_odd_prime(p)?;
    let w = super::lemma42_relator(p, n)?;
    let e = CongruenceElement::new(
        format!("(s1^{} s2^4)^2 ((s1 s2)^3)^-1", p.div_ceil(2)),
        Family::Involution,
        &[("p", p as i64), ("n", n as i64)],
        w,
        Claim::Level(p),
    )?;
    Ok(if p == 3 { e.with_note("p = 3 is outside the p > 3 range of this family") } else { e })
}

/// `A_1 = 1`, `A_k = σ_{k+1} σ_k² σ_{k+1} σ_{k-1}^{(p-1)/2} σ_k⁻¹ σ_{k-1} A_{k-2}`.
pub fn a_k_word(k: usize, p: u64, n: usize) -> Result<BraidWord> {
    check_odd_prime(p)?;
    if k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("A_k needs odd k, got {k}")));
    }
    if k > 1 && n < k + 2 {
        return Err(Error::InvalidParameter(format!("A_{k} needs at least {} strands", k + 2)));
    }
    let mut letters = Vec::new();
    let half = ((p - 1) / 2) as usize;
    let mut j = k as i32;
    while j > 1 {
        letters.extend([j + 1, j, j, j + 1]);
        letters.extend(std::iter::repeat_n(j - 1, half));
        letters.extend([-j, j - 1]);
        j -= 2;
    }
    BraidWord::new(n, letters)
}

/// `(σ_1 ⋯ σ_k)^{k+1} · A_k σ_1⁻² A_k⁻¹`, claimed in `B_n[p]`.
pub fn center_element(k: usize, p: u64, n: usize) -> Result<CongruenceElement> {
    let a = a_k_word(k, p, n)?;
    let w = &chain_word(k, n)?.pow(k as i64 + 1) * &(&(&a * &pow_letter(n, 1, -2)) * &a.inverse());
    CongruenceElement::new(
        format!("(s1..s{k})^{} A_{k} s1^-2 A_{k}^-1", k + 1),
        Family::Center,
        &[("k", k as i64), ("p", p as i64), ("n", n as i64)],
        w,
        Claim::Level(p),
    )
}

/// `ρ_p(A_k) e_1 ≡ e_1 + e_3 + ⋯ + e_k` and
/// `ρ_p(A_k σ_1 A_k⁻¹) ≡ T_{e_1 + e_3 + ⋯ + e_k} (mod p)`.
pub fn a_k_action_check(k: usize, p: u64, n: usize) -> Result<bool> {
    let a = a_k_word(k, p, n)?;
    let space = RepSpace::new(n)?;
    let y = space.odd_chain_sum(k);
    let mut e1 = vec![0u64; space.dim()];
    e1[0] = 1;
    let image = space.rho_mod(&a, p)?.apply(&e1);
    let target: Vec<u64> = y.iter().map(|&x| x as u64).collect();
    let conj = space.rho_mod(&(&(&a * &pow_letter(n, 1, 1)) * &a.inverse()), p)?;
    let t = ModularMatrix::from_integer(&transvection(&y, space.form(), 1)?, p)?;
    Ok(image == target && conj == t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separating_chains() {
        for (k, n) in [(1, 3), (1, 5), (2, 5), (2, 6)] {
            assert!(separating_chain_element(k, n).unwrap().holds);
        }
        assert!(separating_chain_element(2, 4).is_err());
    }

    #[test]
    fn odd_chains() {
        for k in [1, 3, 5] {
            assert!(odd_chain_square_check(k, k + 2).unwrap());
        }
        assert!(odd_chain_square_check(2, 5).is_err());
    }

    #[test]
    fn involutions() {
        assert!(involution_element(5, 3).unwrap().holds);
        assert!(involution_element(7, 4).unwrap().holds);
        assert!(involution_element(4, 3).is_err());
        assert!(involution_element(3, 3).unwrap().note.is_some());
    }

    #[test]
    fn a3_word() {
        let a = a_k_word(3, 3, 5).unwrap();
        assert_eq!(a.letters(), &[4, 3, 3, 4, 2, -3, 2]);
        assert!(a_k_word(1, 3, 3).unwrap().is_empty());
        assert!(a_k_word(3, 3, 4).is_err());
        assert!(a_k_word(2, 3, 5).is_err());
    }

    #[test]
    fn centers() {
        for (k, p, n) in [(3, 3, 5), (3, 5, 5), (5, 3, 7), (5, 5, 7)] {
            assert!(a_k_action_check(k, p, n).unwrap(), "{k} {p} {n}");
            assert!(center_element(k, p, n).unwrap().holds, "{k} {p} {n}");
        }
    }
}
