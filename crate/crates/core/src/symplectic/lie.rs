//! The Lie-algebra side: `sp_{2n}(ℤ/l)`, the logarithm of level-`m`
//! kernel elements, and annihilators.

use super::form::AlternatingForm;
use super::matrix::IntegerMatrix;
use super::modular::ModularMatrix;
use crate::error::{Error, Result};

/// `AᵀJ + JA ≡ 0 (mod l)` for the standard `J` of size `2·half`.
pub fn lie_check(a: &ModularMatrix, half: usize) -> Result<bool> {
    if a.dim() != 2 * half {
        return Err(Error::DimensionMismatch { left: a.dim(), right: 2 * half });
    }
    let j = ModularMatrix::from_integer(AlternatingForm::standard(half)?.gram(), a.modulus())?;
    let lhs = &a.transpose() * &j;
    let rhs = &j * a;
    let m = a.modulus();
    Ok(lhs.rows().iter().flatten().zip(rhs.rows().iter().flatten()).all(|(x, y)| (x + y) % m == 0))
}

/// `((K - I) / m) mod l` for `K` over `ℤ/(m·l)` with `K ≡ I (mod m)`.
pub fn log_map(k: &ModularMatrix, m: u64, l: u64) -> Result<ModularMatrix> {
    if k.modulus() != m * l {
        return Err(Error::ModulusMismatch { left: k.modulus(), right: m * l });
    }
    let n = k.dim();
    let ml = (m * l) as i64;
    let mut rows = vec![vec![0i64; n]; n];
    for (r, row) in rows.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            let d = (k.get(r, c) as i64 - i64::from(r == c)).rem_euclid(ml);
            if d % m as i64 != 0 {
                return Err(Error::InvalidParameter(format!("matrix is not ≡ I mod {m}")));
            }
            *slot = d / m as i64;
        }
    }
    ModularMatrix::from_rows(&rows, l)
}

/// `h ∈ sp` and `h u ≡ 0`, over the modulus of `h`.
pub fn ann_check(h: &ModularMatrix, u: &[i64]) -> Result<bool> {
    if !h.dim().is_multiple_of(2) {
        return Err(Error::InvalidParameter("odd dimension".into()));
    }
    if u.len() != h.dim() {
        return Err(Error::DimensionMismatch { left: h.dim(), right: u.len() });
    }
    let m = h.modulus() as i64;
    let ur: Vec<u64> = u.iter().map(|&x| x.rem_euclid(m) as u64).collect();
    Ok(lie_check(h, h.dim() / 2)? && h.apply(&ur).iter().all(|&x| x == 0))
}

/// Number of `A mod l` with `AᵀJ + JA ≡ 0`, by exhaustive search over all
/// `l^{4·half²}` matrices.
pub fn lie_brute_force_count(half: usize, l: u64) -> Result<u64> {
    let n = 2 * half;
    let cells = (n * n) as u32;
    let total = l
        .checked_pow(cells)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| Error::InvalidParameter(format!("search space {l}^{cells} is too large")))?;
    let mut count = 0;
    let mut rows = vec![vec![0i64; n]; n];
    for code in 0..total {
        let mut c = code;
        for cell in 0..n * n {
            rows[cell / n][cell % n] = (c % l) as i64;
            c /= l;
        }
        if lie_check(&ModularMatrix::from_rows(&rows, l)?, half)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Member of `Sp_{2n}(ℤ)[m]`: `A ≡ I (mod m)` and `AᵀJA = J`.
pub fn in_principal_congruence(a: &IntegerMatrix, m: u64) -> bool {
    if !a.dim().is_multiple_of(2) || a.dim() == 0 {
        return false;
    }
    let j = AlternatingForm::standard(a.dim() / 2).expect("positive half");
    a.is_identity_mod(m) && &(&a.transpose() * j.gram()) * a == *j.gram()
}
