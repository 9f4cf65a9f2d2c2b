//! The symplectic representation `ρ: B_n → Sp(ℤ)` (Burau at `t = -1`), its
//! reductions `ρ_m`, and the element families of the congruence subgroups
//! `B_n[m] = ker ρ_m`.

mod b33;
mod families;
mod quotient;
mod relators;

pub use b33::{b33_alternate_set_check, b33_generators, b33_proof_identities, BraidIdentity};
pub use families::{
    a_k_action_check, a_k_word, center_element, involution_element, odd_chain_square_check,
    separating_chain_element, Claim, CongruenceElement, Family,
};
pub use quotient::symmetric_quotient_check;
pub use relators::{
    cor54_generators, lemma42_lhs, lemma42_relator, pr10_b, pr10_b_literal, pr10_relator, r5_relator,
    sypre_relations, sypre_relators, wajnryb_relators, wajnryb_relators_with, NamedWord,
};

use num_bigint::BigInt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::symplectic::{AlternatingForm, IntegerMatrix, ModularMatrix};

/// The lattice `ℤ^N` carrying the chain form, with `σ_i` acting as the
/// transvection along `e_i`.
///
/// `N = n - 1` for odd `n`. For even `n` the degenerate chain form on
/// `ℤ^{n-1}` is extended by one basis vector to a unimodular form on `ℤ^n`,
/// and `u = e_1 + e_3 + ⋯ + e_{n-1}` is fixed by the whole image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpace {
    strands: usize,
    form: AlternatingForm,
    fixed_vector: Option<Vec<i64>>,
}

impl RepSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "the representation needs n >= 3 strands, got {n}"
            )));
        }
        let dim = if n % 2 == 1 { n - 1 } else { n };
        let fixed_vector = n.is_multiple_of(2)
            .then(|| (0..dim).map(|i| i64::from(i % 2 == 0 && i < n - 1)).collect());
        Ok(RepSpace { strands: n, form: AlternatingForm::tridiagonal(dim)?, fixed_vector })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &AlternatingForm {
        &self.form
    }

    /// The class `v_i = e_i` of the `i`-th chain curve (1-based).
    pub fn chain_class(&self, i: usize) -> Result<Vec<i64>> {
        if !(1..self.strands).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i as i64, strands: self.strands });
        }
        let mut v = vec![0; self.dim()];
        v[i - 1] = 1;
        Ok(v)
    }

    /// `e_1 + e_3 + ⋯ + e_k` for odd `k`.
    pub fn odd_chain_sum(&self, k: usize) -> Vec<i64> {
        (0..self.dim()).map(|i| i64::from(i % 2 == 0 && i < k)).collect()
    }

    pub fn fixed_vector(&self) -> Option<&[i64]> {
        self.fixed_vector.as_deref()
    }

    fn check_strands(&self, w: &BraidWord) -> Result<()> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: w.strands() });
        }
        Ok(())
    }

    // Right multiplication by the transvection along e_i with power s:
    // col[i+1] += s·col[i], col[i-1] -= s·col[i] (0-based i).
    fn letter_columns(&self, letter: i32) -> (usize, i64, Option<usize>, Option<usize>) {
        let i = letter.unsigned_abs() as usize - 1;
        let s = if letter > 0 { 1 } else { -1 };
        let next = (i + 1 < self.dim()).then_some(i + 1);
        let prev = i.checked_sub(1);
        (i, s, next, prev)
    }

    pub fn rho(&self, w: &BraidWord) -> Result<IntegerMatrix> {
        self.check_strands(w)?;
        let mut m = IntegerMatrix::identity(self.dim());
        for &l in w.letters() {
            let (i, s, next, prev) = self.letter_columns(l);
            if let Some(c) = next {
                m.add_column_multiple(i, c, &BigInt::from(s));
            }
            if let Some(c) = prev {
                m.add_column_multiple(i, c, &BigInt::from(-s));
            }
        }
        Ok(m)
    }

    pub fn rho_mod(&self, w: &BraidWord, m: u64) -> Result<ModularMatrix> {
        self.check_strands(w)?;
        check_modulus(m)?;
        let mut a = ModularMatrix::identity(self.dim(), m);
        for &l in w.letters() {
            let (i, s, next, prev) = self.letter_columns(l);
            if let Some(c) = next {
                a.add_column_multiple(i, c, s);
            }
            if let Some(c) = prev {
                a.add_column_multiple(i, c, -s);
            }
        }
        Ok(a)
    }

    /// `ρ_m(σ_1), …, ρ_m(σ_{n-1})`.
    pub fn generator_images_mod(&self, m: u64) -> Result<Vec<ModularMatrix>> {
        (1..self.strands)
            .map(|i| self.rho_mod(&BraidWord::generator(self.strands, i as i32)?, m))
            .collect()
    }

    pub fn in_congruence(&self, w: &BraidWord, m: u64) -> Result<bool> {
        Ok(self.rho_mod(w, m)?.is_identity())
    }

    pub fn in_torelli(&self, w: &BraidWord) -> Result<bool> {
        Ok(self.rho(w)?.is_identity())
    }
}

fn check_modulus(m: u64) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("modulus must be at least 2, got {m}")));
    }
    Ok(())
}

pub fn rep_space(n: usize) -> Result<RepSpace> {
    RepSpace::new(n)
}

/// `ρ(w)` over `ℤ`.
pub fn rho(w: &BraidWord) -> Result<IntegerMatrix> {
    RepSpace::new(w.strands())?.rho(w)
}

/// `ρ_m(w)` over `ℤ/m`.
pub fn rho_mod(w: &BraidWord, m: u64) -> Result<ModularMatrix> {
    RepSpace::new(w.strands())?.rho_mod(w, m)
}

/// Membership in `B_n[m]`.
pub fn in_congruence(w: &BraidWord, m: u64) -> Result<bool> {
    RepSpace::new(w.strands())?.in_congruence(w, m)
}

/// Membership in the braid Torelli group `ker ρ`.
pub fn in_torelli(w: &BraidWord) -> Result<bool> {
    RepSpace::new(w.strands())?.in_torelli(w)
}

pub(crate) fn check_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !crate::symplectic::is_prime(p) {
        return Err(Error::InvalidParameter(format!("expected an odd prime, got {p}")));
    }
    Ok(())
}
