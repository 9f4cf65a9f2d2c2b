//! Finite presentations and Todd–Coxeter coset enumeration.

mod enumerate;

pub use enumerate::{
    coset_enumerate, coset_enumerate_with, CosetTable, EnumerationStatus, TcOptions, DEFAULT_MAX_COSETS,
};

use std::fmt::Write as _;

use crate::braid::{braid_relators, pure_relations, PureWord};
use crate::error::{Error, Result};
use crate::rep::{sypre_relations, wajnryb_relators};

/// Generators `1..=k`; a word is a list of nonzero signed generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    names: Vec<String>,
    relators: Vec<Vec<i32>>,
    subgroup: Vec<Vec<i32>>,
}

fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

impl Presentation {
    /// Relators and subgroup words are freely reduced; empty relators dropped.
    pub fn new(generators: usize, relators: Vec<Vec<i32>>, subgroup: Vec<Vec<i32>>) -> Result<Self> {
        let names = (1..=generators).map(|i| format!("x{i}")).collect();
        Self::with_names(names, relators, subgroup)
    }

    pub fn with_names(names: Vec<String>, relators: Vec<Vec<i32>>, subgroup: Vec<Vec<i32>>) -> Result<Self> {
        let generators = names.len();
        let check = |w: &Vec<i32>| -> Result<Vec<i32>> {
            for &x in w {
                if x == 0 {
                    return Err(Error::ZeroLetter);
                }
                if x.unsigned_abs() as usize > generators {
                    return Err(Error::IndexOutOfRange { index: x as i64, strands: generators + 1 });
                }
            }
            Ok(free_reduce(w))
        };
        let relators = relators.iter().map(check).collect::<Result<Vec<_>>>()?;
        let subgroup = subgroup.iter().map(check).collect::<Result<Vec<_>>>()?;
        Ok(Presentation {
            generators,
            names,
            relators: relators.into_iter().filter(|r| !r.is_empty()).collect(),
            subgroup,
        })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    pub fn subgroup(&self) -> &[Vec<i32>] {
        &self.subgroup
    }

    pub fn with_subgroup(mut self, words: Vec<Vec<i32>>) -> Result<Self> {
        let p = Presentation::with_names(self.names.clone(), vec![], words)?;
        self.subgroup = p.subgroup;
        Ok(self)
    }

    /// Parses the text format: a `gens: k` line, then one relator per line;
    /// lines starting with `sub:` list subgroup generators and `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut generators = None;
        let mut relators = Vec::new();
        let mut subgroup = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens:") {
                let k = rest.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad generator count {rest:?}")))?;
                generators = Some(k);
                continue;
            }
            let (target, body) = match line.strip_prefix("sub:") {
                Some(rest) => (&mut subgroup, rest),
                None => (&mut relators, line),
            };
            let word = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i32>().map_err(|_| Error::MalformedToken { token: t.to_string() }))
                .collect::<Result<Vec<_>>>()?;
            target.push(word);
        }
        let k = generators.ok_or_else(|| Error::Parse("missing `gens:` line".into()))?;
        Presentation::new(k, relators, subgroup)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.generators);
        let _ = writeln!(s, "# {}", self.names.join(" "));
        let join = |w: &[i32]| w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        for r in &self.relators {
            let _ = writeln!(s, "{}", join(r));
        }
        for w in &self.subgroup {
            let _ = writeln!(s, "sub: {}", join(w));
        }
        s
    }
}

/// `⟨s_1, …, s_{n-1} | s_i², (s_i s_{i+1})³, (s_i s_j)² for |i - j| > 1⟩`.
pub fn presentation_s(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("needs n >= 2, got {n}")));
    }
    let mut rels = Vec::new();
    for i in 1..n as i32 {
        rels.push(vec![i, i]);
    }
    for i in 1..(n as i32 - 1) {
        rels.push([i, i + 1].repeat(3));
    }
    for i in 1..n as i32 {
        for j in (i + 2)..n as i32 {
            rels.push([i, j].repeat(2));
        }
    }
    Presentation::with_names((1..n).map(|i| format!("s{i}")).collect(), rels, vec![])
}

/// Braid relations plus R3–R6 on generators `x_i = σ_i`.
pub fn presentation_g(n: usize, p: u64) -> Result<Presentation> {
    let mut rels: Vec<Vec<i32>> = braid_relators(n).into_iter().map(|w| w.letters().to_vec()).collect();
    rels.extend(wajnryb_relators(n, p)?.into_iter().map(|r| r.word.letters().to_vec()));
    Presentation::with_names((1..n).map(|i| format!("x{i}")).collect(), rels, vec![])
}

/// One generator per `a_{i,j}` (lexicographic order), relators PR1–PR10.
pub fn presentation_h(n: usize, p: u64) -> Result<Presentation> {
    let pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| ((i + 1)..=n).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&q| q == (i, j)).expect("valid pair") as i32 + 1;
    let letters = |w: &PureWord| -> Vec<i32> {
        let mut out = Vec::new();
        for &(i, j, e) in &w.syllables {
            let g = index(i, j);
            let x = if e > 0 { g } else { -g };
            out.extend(std::iter::repeat_n(x, e.unsigned_abs() as usize));
        }
        out
    };
    let mut rels: Vec<Vec<i32>> = sypre_relations(n, p)?.iter().map(|(_, w)| letters(w)).collect();
    rels.extend(pure_relations(n).iter().map(|r| letters(&r.relator)));
    let names = pairs.iter().map(|&(i, j)| format!("a{i}{j}")).collect();
    Presentation::with_names(names, rels, vec![])
}
