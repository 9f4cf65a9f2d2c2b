//! Finite groups of matrices over `ℤ/m`, enumerated by breadth-first closure.

mod symmetric;
mod verify;

pub use symmetric::recognize_symmetric;
pub use verify::{
    theorem_b_expected_order, verify_cp_kernel_generation, verify_exact_sequence_32,
    verify_theorem_b,
};

use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::parallel::{all_slice, map_slice, Strategy};
use crate::symplectic::{MatrixJson, ModularMatrix};

pub const DEFAULT_LIMIT: usize = 200_000;

/// Settings for [`FiniteMatrixGroup::generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BfsOptions {
    pub limit: usize,
    pub strategy: Strategy,
    /// Keep a generator word reaching each element.
    pub witnesses: bool,
    /// Return the explored part instead of failing when `limit` is hit.
    pub allow_partial: bool,
}

impl Default for BfsOptions {
    fn default() -> Self {
        BfsOptions { limit: DEFAULT_LIMIT, strategy: Strategy::default(), witnesses: false, allow_partial: false }
    }
}

impl BfsOptions {
    pub fn with_limit(limit: usize) -> Self {
        BfsOptions { limit, ..Self::default() }
    }
}

/// The subgroup generated by a list of invertible matrices over `ℤ/m`.
///
/// Elements are stored in discovery order; the identity comes first. For a
/// fixed generator list the order is the same under either strategy.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    dim: usize,
    modulus: u64,
    generators: Vec<ModularMatrix>,
    elements: Vec<ModularMatrix>,
    index: HashMap<Vec<u8>, usize>,
    parents: Option<Vec<(usize, usize)>>,
    complete: bool,
    strategy: Strategy,
}

/// `gens` must be nonempty and share dimension and modulus.
pub fn bfs_generate(gens: &[ModularMatrix], limit: usize) -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::generate(gens, BfsOptions::with_limit(limit))
}

impl FiniteMatrixGroup {
    pub fn generate(gens: &[ModularMatrix], opts: BfsOptions) -> Result<Self> {
        let first = gens
            .first()
            .ok_or_else(|| Error::InvalidParameter("at least one generator is required".into()))?;
        let (dim, modulus) = (first.dim(), first.modulus());
        for g in gens {
            if g.modulus() != modulus {
                return Err(Error::ModulusMismatch { left: modulus, right: g.modulus() });
            }
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: g.dim() });
            }
        }
        if opts.limit == 0 {
            return Err(Error::InvalidParameter("limit must be at least 1".into()));
        }
        let id = ModularMatrix::identity(dim, modulus);
        let mut index = HashMap::new();
        index.insert(id.encode(), 0);
        let mut elements = vec![id];
        let mut parents = opts.witnesses.then(|| vec![(usize::MAX, usize::MAX)]);
        let mut complete = true;
        let (mut start, mut end) = (0, 1);
        'levels: while start < end {
            let products = map_slice(&elements[start..end], opts.strategy, |x| {
                gens.iter()
                    .map(|g| {
                        let p = x * g;
                        (p.encode(), p)
                    })
                    .collect::<Vec<_>>()
            });
            for (offset, row) in products.into_iter().enumerate() {
                for (gi, (key, p)) in row.into_iter().enumerate() {
                    if index.contains_key(&key) {
                        continue;
                    }
                    if elements.len() >= opts.limit {
                        complete = false;
                        break 'levels;
                    }
                    index.insert(key, elements.len());
                    elements.push(p);
                    if let Some(par) = parents.as_mut() {
                        par.push((start + offset, gi));
                    }
                }
            }
            (start, end) = (end, elements.len());
        }
        if !complete && !opts.allow_partial {
            return Err(Error::LimitExceeded(opts.limit));
        }
        Ok(FiniteMatrixGroup {
            dim,
            modulus,
            generators: gens.to_vec(),
            elements,
            index,
            parents,
            complete,
            strategy: opts.strategy,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[ModularMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[ModularMatrix] {
        &self.elements
    }

    /// False when enumeration stopped at the limit.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &ModularMatrix) -> bool {
        a.dim() == self.dim && a.modulus() == self.modulus && self.index.contains_key(&a.encode())
    }

    pub fn position(&self, a: &ModularMatrix) -> Option<usize> {
        if a.dim() != self.dim || a.modulus() != self.modulus {
            return None;
        }
        self.index.get(&a.encode()).copied()
    }

    /// Generator indices `g_1, …, g_r` with `element = G[g_1] ⋯ G[g_r]`;
    /// `None` unless witnesses were requested.
    pub fn witness(&self, idx: usize) -> Option<Vec<usize>> {
        let parents = self.parents.as_ref()?;
        let mut word = Vec::new();
        let mut at = idx;
        while at != 0 {
            let (parent, g) = *parents.get(at)?;
            word.push(g);
            at = parent;
        }
        word.reverse();
        Some(word)
    }

    /// The group is abelian iff its generators commute pairwise.
    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| ((i + 1)..g.len()).all(|j| &g[i] * &g[j] == &g[j] * &g[i]))
    }

    pub fn element_order(a: &ModularMatrix) -> u64 {
        let mut k = 1;
        let mut x = a.clone();
        while !x.is_identity() {
            x = &x * a;
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        map_slice(&self.elements, self.strategy, Self::element_order)
            .into_iter()
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Equal as sets of matrices.
    pub fn same_group(&self, other: &FiniteMatrixGroup) -> bool {
        self.order() == other.order()
            && self.modulus == other.modulus
            && other.generators.iter().all(|g| self.contains(g))
            && self.generators.iter().all(|g| other.contains(g))
    }

    /// The orbit of `u` (reduced mod `m`) under the group.
    pub fn orbit(&self, u: &[u64]) -> Result<Vec<Vec<u64>>> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: u.len() });
        }
        let start: Vec<u64> = u.iter().map(|x| x % self.modulus).collect();
        let mut seen = HashSet::from([start.clone()]);
        let mut orbit = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for g in &self.generators {
                let w = g.apply(&v);
                if seen.insert(w.clone()) {
                    orbit.push(w.clone());
                    queue.push_back(w);
                }
            }
        }
        Ok(orbit)
    }

    /// Number of elements fixing `u`, by direct count.
    pub fn stabilizer_order(&self, u: &[u64]) -> Result<usize> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: u.len() });
        }
        let u: Vec<u64> = u.iter().map(|x| x % self.modulus).collect();
        Ok(map_slice(&self.elements, self.strategy, |a| a.apply(&u) == u).into_iter().filter(|&b| b).count())
    }

    /// `pred` holds on every element.
    pub fn all(&self, pred: impl Fn(&ModularMatrix) -> bool + Sync + Send) -> bool {
        all_slice(&self.elements, self.strategy, pred)
    }

    pub fn report(&self, with_exponent: bool) -> EnumerationReport {
        EnumerationReport {
            schema: crate::report::SCHEMA_VERSION,
            generators: self.generators.iter().map(MatrixJson::from).collect(),
            modulus: self.modulus,
            order: self.order(),
            abelian: self.is_abelian(),
            exponent: (with_exponent && self.complete).then(|| self.exponent()),
            limit_hit: !self.complete,
        }
    }
}

/// Summary of an enumeration, as written by the command-line tool.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerationReport {
    pub schema: u32,
    pub generators: Vec<MatrixJson>,
    #[serde(rename = "mod")]
    pub modulus: u64,
    pub order: usize,
    pub abelian: bool,
    pub exponent: Option<u64>,
    pub limit_hit: bool,
}
