use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Square matrix over `ℤ` with arbitrary-precision entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zero(dim: usize) -> Self {
        IntegerMatrix { dim, entries: vec![BigInt::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: row.len() });
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntegerMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.dim + c] = v;
    }

    pub(crate) fn entry_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.dim + c]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.dim).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, x)| {
            if k / self.dim == k % self.dim {
                x.is_one()
            } else {
                x.is_zero()
            }
        })
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut t = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                t.entries[c * n + r] = self.entries[r * n + c].clone();
            }
        }
        t
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntegerMatrix { dim: self.dim, entries: self.entries.iter().map(|x| x * k).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn try_mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let n = self.dim;
        let mut out = Self::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = &self.entries[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &other.entries[k * n + c];
                    if !b.is_zero() {
                        out.entries[r * n + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.len() });
        }
        Ok((0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) * &v[c]).sum())
            .collect())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                match ((k + 1)..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        sign * &a[n * n - 1]
    }

    /// Entrywise congruence `self ≡ I (mod m)`.
    pub fn is_identity_mod(&self, m: u64) -> bool {
        let m = BigInt::from(m);
        self.entries.iter().enumerate().all(|(k, x)| {
            let target = if k / self.dim == k % self.dim { BigInt::one() } else { BigInt::zero() };
            (x - target).mod_floor(&m).is_zero()
        })
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Entries as `i64` when all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.entries
            .chunks(self.dim)
            .map(|r| r.iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    /// `col[dst] += k · col[src]`.
    pub(crate) fn add_column_multiple(&mut self, src: usize, dst: usize, k: &BigInt) {
        for r in 0..self.dim {
            let v = &self.entries[r * self.dim + src] * k;
            self.entries[r * self.dim + dst] += v;
        }
    }

    /// `row[dst] += k · row[src]`.
    pub(crate) fn add_row_multiple(&mut self, src: usize, dst: usize, k: &BigInt) {
        for c in 0..self.dim {
            let v = &self.entries[src * self.dim + c] * k;
            self.entries[dst * self.dim + c] += v;
        }
    }

    pub(crate) fn swap_columns(&mut self, a: usize, b: usize) {
        for r in 0..self.dim {
            self.entries.swap(r * self.dim + a, r * self.dim + b);
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.dim {
            self.entries.swap(a * self.dim + c, b * self.dim + c);
        }
    }
}

impl Mul<&IntegerMatrix> for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl Add<&IntegerMatrix> for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn add(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        IntegerMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&IntegerMatrix> for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn sub(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        IntegerMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn determinant_by_cofactors() {
        assert_eq!(m(&[&[2, 1], &[7, 4]]).det(), BigInt::from(1));
        // cofactor expansion along the first row: 0·(..) - 1·(0·1-2·3) + 2·(0·4-1·3)
        assert_eq!(m(&[&[0, 1, 2], &[0, 1, 2], &[3, 4, 1]]).det(), BigInt::from(0));
        assert_eq!(m(&[&[0, 1, 2], &[0, 5, 2], &[3, 4, 1]]).det(), BigInt::from(-24));
        assert_eq!(IntegerMatrix::identity(5).det(), BigInt::from(1));
    }

    #[test]
    fn products_are_exact() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let mut p = IntegerMatrix::identity(2);
        for _ in 0..10 {
            p = &p * &a;
            p = &p * &p.transpose();
        }
        assert!(p.max_abs_entry() > BigInt::from(u64::MAX));
        assert_eq!(p.det(), BigInt::from(1));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(IntegerMatrix::identity(2).try_mul(&IntegerMatrix::identity(3)).is_err());
        assert!(IntegerMatrix::from_rows(&[vec![1i64, 2], vec![3]]).is_err());
    }
}
