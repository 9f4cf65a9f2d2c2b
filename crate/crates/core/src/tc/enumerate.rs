//! HLT coset enumeration with union-find coincidence processing, plus a
//! lookahead pass (scan without defining, then compact) when space runs out.

use std::collections::VecDeque;

use serde::Serialize;

use super::Presentation;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_COSETS: usize = 500_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TcOptions {
    pub max_cosets: usize,
    /// Try a lookahead pass before giving up at `max_cosets`.
    pub lookahead: bool,
}

impl Default for TcOptions {
    fn default() -> Self {
        TcOptions { max_cosets: DEFAULT_MAX_COSETS, lookahead: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumerationStatus {
    Complete,
    LimitExceeded,
}

/// Result of an enumeration. On completion, `table[c][x]` is the image of
/// coset `c` (0-based, coset 0 is the subgroup) under column `x`, where
/// column `2g` is generator `g + 1` and column `2g + 1` its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub status: EnumerationStatus,
    pub index: usize,
    pub table: Vec<Vec<usize>>,
    /// Cosets defined over the whole run, a measure of work.
    pub total_defined: usize,
}

impl CosetTable {
    pub fn is_complete(&self) -> bool {
        self.status == EnumerationStatus::Complete
    }

    fn trace(&self, start: usize, w: &[i32]) -> usize {
        w.iter().fold(start, |c, &x| self.table[c][column(x)])
    }

    /// Every relator closes at every coset, subgroup generators fix coset 0,
    /// and the action is transitive.
    pub fn verify(&self, p: &Presentation) -> bool {
        if !self.is_complete() || self.table.len() != self.index {
            return false;
        }
        let cols = 2 * p.generators();
        let total = self.table.iter().all(|row| row.len() == cols && row.iter().all(|&d| d < self.index));
        if !total {
            return false;
        }
        let inverse_ok = (0..self.index)
            .all(|c| (0..cols).all(|x| self.table[self.table[c][x]][x ^ 1] == c));
        let relators_ok = p.relators().iter().all(|r| (0..self.index).all(|c| self.trace(c, r) == c));
        let subgroup_ok = p.subgroup().iter().all(|w| self.trace(0, w) == 0);
        let mut seen = vec![false; self.index];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut reached = 1;
        while let Some(c) = queue.pop_front() {
            for &d in &self.table[c] {
                if !seen[d] {
                    seen[d] = true;
                    reached += 1;
                    queue.push_back(d);
                }
            }
        }
        inverse_ok && relators_ok && subgroup_ok && reached == self.index
    }
}

fn column(x: i32) -> usize {
    let g = x.unsigned_abs() as usize - 1;
    2 * g + usize::from(x < 0)
}

const UNDEF: u32 = 0;

struct Enumerator {
    cols: usize,
    // row 0 unused; cosets are 1-based
    table: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    live: usize,
    total_defined: usize,
    max: usize,
}

impl Enumerator {
    fn new(cols: usize, max: usize) -> Self {
        Enumerator {
            cols,
            table: vec![UNDEF; 2 * cols],
            parent: vec![0, 1],
            queue: Vec::new(),
            live: 1,
            total_defined: 1,
            max,
        }
    }

    fn allocated(&self) -> usize {
        self.parent.len() - 1
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.cols + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Option<u32> {
        if self.allocated() >= self.max {
            return None;
        }
        let d = self.parent.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        self.live += 1;
        self.total_defined += 1;
        Some(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, k: u32, l: u32) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
            self.live -= 1;
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(g, x);
                if d == UNDEF {
                    continue;
                }
                self.set(d, x ^ 1, UNDEF);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                } else {
                    let nu_inv = self.get(nu, x ^ 1);
                    if nu_inv != UNDEF {
                        self.merge(mu, nu_inv);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` at `c`, defining cosets when `define` is set. Returns `false`
    /// only when a definition was needed but no space was left.
    fn scan(&mut self, c: u32, w: &[usize], define: bool) -> bool {
        let (mut f, mut i) = (c, 0isize);
        let (mut b, mut j) = (c, w.len() as isize - 1);
        loop {
            while i <= j && self.get(f, w[i as usize]) != UNDEF {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j >= i && self.get(b, w[j as usize] ^ 1) != UNDEF {
                b = self.get(b, w[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return true;
            }
            if i == j {
                let x = w[i as usize];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                return true;
            }
            if !define {
                return true;
            }
            if self.define(f, w[i as usize]).is_none() {
                return false;
            }
        }
    }

    /// Renumbers live cosets `1..=live`, keeping their relative order.
    fn compact(&mut self) {
        let n = self.allocated();
        let mut map = vec![0u32; n + 1];
        let mut next = 0u32;
        for c in 1..=n as u32 {
            if self.is_live(c) {
                next += 1;
                map[c as usize] = next;
            }
        }
        let mut table = vec![UNDEF; (next as usize + 1) * self.cols];
        for c in 1..=n as u32 {
            let nc = map[c as usize];
            if nc == 0 {
                continue;
            }
            for x in 0..self.cols {
                let d = self.get(c, x);
                table[nc as usize * self.cols + x] = if d == UNDEF { UNDEF } else { map[d as usize] };
            }
        }
        self.table = table;
        self.parent = (0..=next).collect();
    }
}

pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Result<CosetTable> {
    coset_enumerate_with(p, TcOptions { max_cosets, ..TcOptions::default() })
}

/// Enumerates the cosets of the subgroup of `p`. Running out of space is
/// reported through [`EnumerationStatus::LimitExceeded`], not as an error.
pub fn coset_enumerate_with(p: &Presentation, opts: TcOptions) -> Result<CosetTable> {
    if opts.max_cosets == 0 {
        return Err(Error::InvalidParameter("max_cosets must be at least 1".into()));
    }
    let cols = 2 * p.generators();
    let to_cols = |w: &Vec<i32>| w.iter().map(|&x| column(x)).collect::<Vec<usize>>();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(to_cols).collect();
    let subgroup: Vec<Vec<usize>> = p.subgroup().iter().map(to_cols).collect();
    let mut e = Enumerator::new(cols, opts.max_cosets);
    let mut full = false;
    for w in &subgroup {
        if !e.scan(1, w, true) {
            full = true;
            break;
        }
    }
    let mut alpha: u32 = 1;
    'main: while !full && (alpha as usize) <= e.allocated() {
        let mut ran_out = false;
        if e.is_live(alpha) {
            'work: {
                for w in &relators {
                    if !e.is_live(alpha) {
                        break 'work;
                    }
                    if !e.scan(alpha, w, true) {
                        ran_out = true;
                        break 'work;
                    }
                }
                for x in 0..cols {
                    if !e.is_live(alpha) {
                        break 'work;
                    }
                    if e.get(alpha, x) == UNDEF && e.define(alpha, x).is_none() {
                        ran_out = true;
                        break 'work;
                    }
                }
            }
        }
        if ran_out {
            if !opts.lookahead {
                full = true;
                break 'main;
            }
            for c in 1..=e.allocated() as u32 {
                for w in &relators {
                    if e.is_live(c) {
                        e.scan(c, w, false);
                    }
                }
            }
            let live_before_alpha = (1..alpha).filter(|&c| e.is_live(c)).count() as u32;
            e.compact();
            if e.allocated() >= e.max {
                full = true;
                break 'main;
            }
            alpha = live_before_alpha + 1;
            continue;
        }
        alpha += 1;
    }
    let status = if full { EnumerationStatus::LimitExceeded } else { EnumerationStatus::Complete };
    if status == EnumerationStatus::Complete {
        e.compact();
    }
    let index = e.live;
    let table = if status == EnumerationStatus::Complete {
        (1..=index as u32)
            .map(|c| (0..cols).map(|x| e.get(c, x) as usize - 1).collect())
            .collect()
    } else {
        Vec::new()
    };
    Ok(CosetTable { status, index, table, total_defined: e.total_defined })
}
