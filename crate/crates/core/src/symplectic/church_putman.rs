//! Generators of the principal congruence subgroup `Sp_{2n}(ℤ)[r]`.

use std::fmt;

use num_bigint::BigInt;

use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CpKind {
    X,
    Y,
    Z,
    W,
    U,
}

impl fmt::Display for CpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One Church–Putman generator in dimension `2·half` (indices 1-based).
///
/// Block layout is `[[A, B], [C, D]]` with `n × n` blocks:
/// - `X_{i,j}(r)`: `C = se_{i,j}(r)` (symmetric), `i ≤ j`;
/// - `Y_{i,j}(r)`: `B = se_{i,j}(r)`, `i ≤ j`;
/// - `Z_{i,j}(r)`: `A = I + e_{i,j}(r)`, `D = I - e_{j,i}(r)`, `i ≠ j`;
/// - `W_i(r)`: `A = I + β_i(r)`, `D = I - β_i(r)ᵀ`, `i < n`;
/// - `U_1(r)`: `r·[[e_11, e_11], [-e_11, -e_11]]` added to `I`.
///
/// The lower-right blocks of `Z` and `W` are the inverse transposes of the
/// upper-left ones, which is what makes them symplectic.
pub fn church_putman(kind: CpKind, i: usize, j: usize, r: i64, half: usize) -> Result<IntegerMatrix> {
    let n = half;
    let bad = |msg: &str| Error::InvalidParameter(format!("{kind}_{{{i},{j}}} with n = {n}: {msg}"));
    if n == 0 {
        return Err(bad("n must be positive"));
    }
    let in_range = |x: usize| (1..=n).contains(&x);
    match kind {
        CpKind::X | CpKind::Y if !(in_range(i) && in_range(j) && i <= j) => {
            return Err(bad("needs 1 <= i <= j <= n"))
        }
        CpKind::Z if !(in_range(i) && in_range(j) && i != j) => {
            return Err(bad("needs 1 <= i, j <= n and i != j"))
        }
        CpKind::W if !(i >= 1 && i < n) => return Err(bad("needs 1 <= i < n")),
        CpKind::U if !(i == 1 && j == 1) => return Err(bad("only U_1 is defined")),
        _ => {}
    }
    let mut m = IntegerMatrix::identity(2 * n);
    let r = BigInt::from(r);
    let (i0, j0) = (i - 1, j.saturating_sub(1));
    let mut add = |row: usize, col: usize, v: BigInt| {
        *m.entry_mut(row, col) += v;
    };
    match kind {
        CpKind::X => {
            add(n + i0, j0, r.clone());
            if i0 != j0 {
                add(n + j0, i0, r);
            }
        }
        CpKind::Y => {
            add(i0, n + j0, r.clone());
            if i0 != j0 {
                add(j0, n + i0, r);
            }
        }
        CpKind::Z => {
            add(i0, j0, r.clone());
            add(n + j0, n + i0, -r);
        }
        CpKind::W => {
            let (a, b) = (i0, i0 + 1);
            // β on the upper-left block
            add(a, a, r.clone());
            add(a, b, r.clone());
            add(b, b, -r.clone());
            add(b, a, -r.clone());
            // -βᵀ on the lower-right block
            add(n + a, n + a, -r.clone());
            add(n + b, n + a, -r.clone());
            add(n + b, n + b, r.clone());
            add(n + a, n + b, r);
        }
        CpKind::U => {
            add(0, 0, r.clone());
            add(0, n, r.clone());
            add(n, 0, -r.clone());
            add(n, n, -r);
        }
    }
    Ok(m)
}

/// A labelled generator, e.g. `X_{1,2}(3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpGenerator {
    pub kind: CpKind,
    pub i: usize,
    pub j: usize,
    pub matrix: IntegerMatrix,
}

impl CpGenerator {
    pub fn label(&self, r: i64) -> String {
        match self.kind {
            CpKind::W => format!("W_{}({r})", self.i),
            CpKind::U => format!("U_1({r})"),
            k => format!("{k}_{{{},{}}}({r})", self.i, self.j),
        }
    }
}

/// Every admissible generator at parameter `p`, in the order X, Y, Z, W, U.
pub fn church_putman_set(p: i64, half: usize) -> Result<Vec<CpGenerator>> {
    if half < 2 {
        return Err(Error::InvalidParameter("Church–Putman generators need n >= 2".into()));
    }
    let n = half;
    let mut out = Vec::new();
    let mut push = |kind, i, j| -> Result<()> {
        out.push(CpGenerator { kind, i, j, matrix: church_putman(kind, i, j, p, n)? });
        Ok(())
    };
    for kind in [CpKind::X, CpKind::Y] {
        for i in 1..=n {
            for j in i..=n {
                push(kind, i, j)?;
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                push(CpKind::Z, i, j)?;
            }
        }
    }
    for i in 1..n {
        push(CpKind::W, i, i + 1)?;
    }
    push(CpKind::U, 1, 1)?;
    Ok(out)
}
