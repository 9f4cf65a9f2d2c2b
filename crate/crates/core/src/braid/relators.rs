use std::fmt;

use super::word::BraidWord;
use crate::error::{Error, Result};

/// `a_{i,j} = σ_{j-1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹` for `1 ≤ i < j ≤ n`.
pub fn pure_generator(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::InvalidParameter(format!(
            "a_{{{i},{j}}} needs 1 <= i < j <= n = {n}"
        )));
    }
    let mut letters: Vec<i32> = ((i + 1)..j).rev().map(|k| k as i32).collect();
    letters.push(i as i32);
    letters.push(i as i32);
    letters.extend(((i + 1)..j).map(|k| -(k as i32)));
    BraidWord::new(n, letters)
}

/// The relators of the Artin presentation of `B_n`.
pub fn braid_relators(n: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for i in 1..n.saturating_sub(1) {
        let (a, b) = (i as i32, i as i32 + 1);
        out.push(BraidWord::new(n, vec![a, b, a, -b, -a, -b]).expect("in range"));
    }
    for i in 1..n {
        for j in (i + 2)..n {
            let (a, b) = (i as i32, j as i32);
            out.push(BraidWord::new(n, vec![a, b, -a, -b]).expect("in range"));
        }
    }
    out
}

/// A word in the pure braid generators, as syllables `a_{i,j}^e`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PureWord {
    pub syllables: Vec<(usize, usize, i64)>,
}

impl PureWord {
    pub fn gen(i: usize, j: usize) -> Self {
        Self::power(i, j, 1)
    }

    pub fn power(i: usize, j: usize, e: i64) -> Self {
        PureWord { syllables: if e == 0 { vec![] } else { vec![(i, j, e)] } }
    }

    pub fn then(mut self, other: &PureWord) -> Self {
        self.syllables.extend_from_slice(&other.syllables);
        self
    }

    pub fn inverse(&self) -> Self {
        PureWord { syllables: self.syllables.iter().rev().map(|&(i, j, e)| (i, j, -e)).collect() }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e >= 0 { self.clone() } else { self.inverse() };
        let mut out = PureWord::default();
        for _ in 0..e.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    pub fn product<'a>(parts: impl IntoIterator<Item = &'a PureWord>) -> Self {
        parts.into_iter().fold(PureWord::default(), |acc, p| acc.then(p))
    }

    /// Expands into Artin generators of `B_n`.
    pub fn expand(&self, n: usize) -> Result<BraidWord> {
        let mut out = BraidWord::identity(n.max(2));
        for &(i, j, e) in &self.syllables {
            out = out.compose(&pure_generator(i, j, n)?.pow(e))?;
        }
        Ok(out)
    }
}

impl fmt::Display for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (idx, (i, j, e)) in self.syllables.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "a{i}{j}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Which defining relation of the pure braid presentation a relator instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PureRelationKind {
    P1,
    P2,
    P3,
    P4,
}

/// An instance `a_{r,s}⁻¹ a_{i,j} a_{r,s} · RHS⁻¹` of a pure braid relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureRelation {
    pub kind: PureRelationKind,
    pub r: usize,
    pub s: usize,
    pub i: usize,
    pub j: usize,
    pub relator: PureWord,
}

/// All instances of the relations P1–P4 over admissible `(r, s, i, j)`.
pub fn pure_relations(n: usize) -> Vec<PureRelation> {
    let a = PureWord::gen;
    let mut out = Vec::new();
    for r in 1..=n {
        for s in (r + 1)..=n {
            for i in 1..=n {
                for j in (i + 1)..=n {
                    let lhs = PureWord::product([&a(r, s).inverse(), &a(i, j), &a(r, s)]);
                    let (kind, rhs) = if (s < i) || (i < r && s < j) {
                        (PureRelationKind::P1, a(i, j))
                    } else if s == i {
                        let c = a(r, j);
                        (PureRelationKind::P2, PureWord::product([&c, &a(i, j), &c.inverse()]))
                    } else if r == i && s < j {
                        let c = a(i, j).then(&a(s, j));
                        (PureRelationKind::P3, PureWord::product([&c, &a(i, j), &c.inverse()]))
                    } else if r < i && i < s && s < j {
                        let c = PureWord::product([
                            &a(r, j),
                            &a(s, j),
                            &a(r, j).inverse(),
                            &a(s, j).inverse(),
                        ]);
                        (PureRelationKind::P4, PureWord::product([&c, &a(i, j), &c.inverse()]))
                    } else {
                        continue;
                    };
                    out.push(PureRelation { kind, r, s, i, j, relator: lhs.then(&rhs.inverse()) });
                }
            }
        }
    }
    out
}

/// Relators of the pure braid presentation, expanded into Artin generators.
pub fn pure_braid_relators(n: usize) -> Vec<BraidWord> {
    pure_relations(n)
        .iter()
        .map(|rel| rel.relator.expand(n).expect("indices within range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{is_trivial, permutation};

    #[test]
    fn pure_generator_shapes() {
        assert_eq!(pure_generator(1, 2, 3).unwrap().letters(), &[1, 1]);
        assert_eq!(pure_generator(1, 3, 3).unwrap().letters(), &[2, 1, 1, -2]);
        assert!(pure_generator(2, 2, 3).is_err());
        assert!(pure_generator(1, 4, 3).is_err());
    }

    #[test]
    fn pure_generators_are_pure() {
        for n in 2..=7 {
            for i in 1..n {
                for j in (i + 1)..=n {
                    assert!(permutation(&pure_generator(i, j, n).unwrap()).is_identity());
                }
            }
        }
    }

    #[test]
    fn three_strand_braid_relators() {
        let rels = braid_relators(3);
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].letters(), &[1, 2, 1, -2, -1, -2]);
        assert_eq!(braid_relators(5).len(), 3 + 3);
    }

    #[test]
    fn named_pure_relation_instances() {
        let rels = pure_relations(4);
        let p1 = rels.iter().find(|r| (r.r, r.s, r.i, r.j) == (1, 2, 3, 4)).unwrap();
        assert_eq!(p1.kind, PureRelationKind::P1);
        assert!(is_trivial(&p1.relator.expand(4).unwrap()));
        let p2 = rels.iter().find(|r| (r.r, r.s, r.i, r.j) == (1, 2, 2, 3)).unwrap();
        assert_eq!(p2.kind, PureRelationKind::P2);
        assert_eq!(p2.relator.to_string(), "a12^-1 a23 a12 a13 a23^-1 a13^-1");
        assert!(is_trivial(&p2.relator.expand(4).unwrap()));
    }

    #[test]
    fn all_relators_trivial() {
        for n in 2..=6 {
            for w in braid_relators(n) {
                assert!(is_trivial(&w), "braid relator {w} on {n} strands");
            }
        }
        for n in 3..=6 {
            for rel in pure_relations(n) {
                let w = rel.relator.expand(n).unwrap();
                assert!(is_trivial(&w), "{:?} ({},{},{},{}) = {} on {n} strands", rel.kind, rel.r, rel.s, rel.i, rel.j, rel.relator);
            }
        }
    }
}
