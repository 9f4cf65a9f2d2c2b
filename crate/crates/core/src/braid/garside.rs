//! Left normal form of braids over the positive permutation braids.
//!
//! A positive permutation braid (a "simple" element) is identified with its
//! permutation: strand `x` ends at position `p(x)`, and two strands cross
//! exactly once iff their relative order is inverted. A braid is written
//! uniquely as `Δ^inf · f_1 ⋯ f_r` with each `f_i` simple, `f_i ∉ {1, Δ}`
//! and every adjacent pair left-weighted.

use super::perm::Permutation;
use super::word::BraidWord;

/// Canonical form `Δ^infimum · factors[0] ⋯ factors[r-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    /// Rebuilds a positive-letter word for each factor (`Δ^inf` first).
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = simple_to_letters(&half_twist(n));
        let mut letters = Vec::new();
        for _ in 0..self.infimum.unsigned_abs() {
            if self.infimum > 0 {
                letters.extend_from_slice(&delta);
            } else {
                letters.extend(delta.iter().rev().map(|k| -k));
            }
        }
        for f in &self.factors {
            letters.extend(simple_to_letters(f));
        }
        BraidWord::new(n, letters).expect("letters in range")
    }

    /// Checks the structural invariants of a left normal form.
    pub fn is_left_weighted(&self) -> bool {
        let n = self.strands;
        let delta = half_twist(n);
        let id = Permutation::identity(n);
        self.factors.iter().all(|f| *f != delta && *f != id)
            && self.factors.windows(2).all(|w| {
                let fin = finishing_set(&w[0]);
                starting_set(&w[1]).iter().all(|i| fin.contains(i))
            })
    }
}

pub(crate) fn half_twist(n: usize) -> Permutation {
    Permutation::from_images((0..n).rev().collect()).expect("bijection")
}

/// Conjugation by `Δ`, which sends `σ_i` to `σ_{n-i}`.
fn flip(a: &Permutation) -> Permutation {
    let n = a.degree();
    Permutation::from_images((0..n).map(|i| n - 1 - a.apply(n - 1 - i)).collect())
        .expect("bijection")
}

/// `{i : σ_i left-divides a}`, 1-based.
fn starting_set(a: &Permutation) -> Vec<usize> {
    let im = a.images();
    (1..a.degree()).filter(|&i| im[i - 1] > im[i]).collect()
}

/// `{i : σ_i right-divides a}`, 1-based.
fn finishing_set(a: &Permutation) -> Vec<usize> {
    starting_set(&a.inverse())
}

/// A positive word for a simple element: bubble sort its image sequence.
fn simple_to_letters(a: &Permutation) -> Vec<i32> {
    let mut rest = a.clone();
    let mut letters = Vec::new();
    // peel off left divisors one at a time
    'outer: while !rest.is_identity() {
        let im = rest.images();
        for i in 1..rest.degree() {
            if im[i - 1] > im[i] {
                letters.push(i as i32);
                rest.swap_positions(i - 1, i);
                continue 'outer;
            }
        }
        unreachable!("non-identity permutation has a descent");
    }
    letters
}

/// Rewrites `(a, b)` to a left-weighted pair with the same product.
/// Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut changed = false;
    loop {
        let a_inv = a.inverse();
        let fin = a_inv.images();
        let bi = b.images();
        let movable = (1..b.degree()).find(|&i| bi[i - 1] > bi[i] && fin[i - 1] < fin[i]);
        match movable {
            Some(i) => {
                // a ← a·σ_i, b ← σ_i⁻¹·b
                a.swap_values(i - 1, i);
                b.swap_positions(i - 1, i);
                changed = true;
            }
            None => return changed,
        }
    }
}

struct LeftNormalForm {
    factors: Vec<Permutation>,
}

impl LeftNormalForm {
    fn push(&mut self, x: Permutation) {
        self.factors.push(x);
        let mut j = self.factors.len() - 1;
        while j >= 1 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        while self.factors.last().is_some_and(Permutation::is_identity) {
            self.factors.pop();
        }
    }
}

/// Garside left normal form of `w`.
///
/// Each `σ_i⁻¹` is rewritten as `Δ⁻¹ · (Δσ_i⁻¹)`; every `Δ⁻¹` is moved to
/// the front, flipping the simple factors it passes.
pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands();
    let delta = half_twist(n);
    let letters = w.letters();
    let total_neg = letters.iter().filter(|&&k| k < 0).count();

    let mut lnf = LeftNormalForm { factors: Vec::new() };
    let mut neg_seen = 0usize;
    for &k in letters {
        let i = k.unsigned_abs() as usize;
        let simple = if k > 0 {
            Permutation::adjacent(n, i)
        } else {
            neg_seen += 1;
            // Δσ_i⁻¹: Δ with its final crossing at (i, i+1) removed
            let mut p = delta.clone();
            p.swap_values(i - 1, i);
            p
        };
        let negs_after = total_neg - neg_seen;
        let simple = if negs_after % 2 == 1 { flip(&simple) } else { simple };
        lnf.push(simple);
    }

    let leading = lnf.factors.iter().take_while(|f| **f == delta).count();
    let factors: Vec<Permutation> = lnf.factors.split_off(leading);
    debug_assert!(factors.iter().all(|f| !f.is_identity()));
    GarsideNormalForm { strands: n, infimum: leading as i64 - total_neg as i64, factors }
}

pub fn is_trivial(w: &BraidWord) -> bool {
    normal_form(w).is_identity()
}

/// Equality in `B_n`. Words on different strand counts are never equal.
pub fn words_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
    w1.strands() == w2.strands() && normal_form(w1) == normal_form(w2)
}
