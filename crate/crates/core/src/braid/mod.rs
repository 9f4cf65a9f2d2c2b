//! Braid words over the Artin generators, the word problem, and the
//! relator libraries of the braid and pure braid presentations.

mod garside;
mod perm;
mod relators;
mod word;

pub use garside::{is_trivial, normal_form, words_equal, GarsideNormalForm};
pub use perm::Permutation;
pub use relators::{
    braid_relators, pure_braid_relators, pure_generator, pure_relations, PureRelation,
    PureRelationKind, PureWord,
};
pub use word::{parse_word, parse_word_with_header, random_word, BraidWord};

/// Image of a braid in the symmetric group, `σ_i ↦ (i i+1)`.
///
/// With the composition convention of [`Permutation::then`], this is a
/// homomorphism: `permutation(w1·w2) = permutation(w1).then(&permutation(w2))`.
pub fn permutation(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.strands());
    for &k in w.letters() {
        p.swap_values(k.unsigned_abs() as usize - 1, k.unsigned_abs() as usize);
    }
    p
}
