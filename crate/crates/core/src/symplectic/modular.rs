use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};

/// Square matrix over `ℤ/m`, entries reduced into `[0, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModularMatrix {
    dim: usize,
    modulus: u64,
    entries: Vec<u32>,
}

/// Largest modulus supported by [`ModularMatrix`].
pub const MAX_MODULUS: u64 = u32::MAX as u64;

impl ModularMatrix {
    pub fn identity(dim: usize, modulus: u64) -> Self {
        assert!((2..=MAX_MODULUS).contains(&modulus), "modulus {modulus} out of range");
        let mut entries = vec![0u32; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        ModularMatrix { dim, modulus, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>], modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: row.len() });
            }
            entries.extend(row.iter().map(|&x| x.rem_euclid(modulus as i64) as u32));
        }
        Ok(ModularMatrix { dim, modulus, entries })
    }

    pub fn from_integer(a: &IntegerMatrix, modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        let m = BigInt::from(modulus);
        let n = a.dim();
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(a.get(r, c).mod_floor(&m).to_u32().expect("reduced entry fits"));
            }
        }
        Ok(ModularMatrix { dim: n, modulus, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.dim + c] as u64
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.dim).map(|r| r.iter().map(|&x| x as u64).collect()).collect()
    }

    /// Lift to `ℤ` with entries in `[0, m)`.
    pub fn lift(&self) -> IntegerMatrix {
        let rows: Vec<Vec<i64>> =
            self.entries.chunks(self.dim).map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        IntegerMatrix::from_rows(&rows).expect("square")
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, &x)| {
            x == u32::from(k / self.dim == k % self.dim)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn try_mul(&self, other: &ModularMatrix) -> Result<ModularMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        let n = self.dim;
        let m = self.modulus as u128;
        let mut entries = vec![0u32; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc: u128 = 0;
                for k in 0..n {
                    acc += self.entries[r * n + k] as u128 * other.entries[k * n + c] as u128;
                }
                entries[r * n + c] = (acc % m) as u32;
            }
        }
        Ok(ModularMatrix { dim: n, modulus: self.modulus, entries })
    }

    pub fn pow(&self, mut e: u64) -> ModularMatrix {
        let mut base = self.clone();
        let mut acc = ModularMatrix::identity(self.dim, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> ModularMatrix {
        let n = self.dim;
        let mut entries = vec![0u32; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.entries[r * n + c];
            }
        }
        ModularMatrix { dim: n, modulus: self.modulus, entries }
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        let m = self.modulus as u128;
        (0..self.dim)
            .map(|r| {
                let acc: u128 = (0..self.dim)
                    .map(|c| self.entries[r * self.dim + c] as u128 * (v[c] % self.modulus) as u128)
                    .sum();
                (acc % m) as u64
            })
            .collect()
    }

    /// Canonical key: row-major base-`m` digits, each written big-endian in
    /// the fewest bytes that hold `m - 1`.
    pub fn encode(&self) -> Vec<u8> {
        let width = digit_width(self.modulus);
        let mut out = Vec::with_capacity(self.entries.len() * width);
        for &x in &self.entries {
            out.extend_from_slice(&x.to_be_bytes()[4 - width..]);
        }
        out
    }

    pub fn decode(bytes: &[u8], dim: usize, modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        let width = digit_width(modulus);
        if bytes.len() != dim * dim * width {
            return Err(Error::Parse(format!(
                "encoding has {} bytes, expected {}",
                bytes.len(),
                dim * dim * width
            )));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for chunk in bytes.chunks(width) {
            let mut buf = [0u8; 4];
            buf[4 - width..].copy_from_slice(chunk);
            let x = u32::from_be_bytes(buf);
            if x as u64 >= modulus {
                return Err(Error::Parse(format!("digit {x} not reduced mod {modulus}")));
            }
            entries.push(x);
        }
        Ok(ModularMatrix { dim, modulus, entries })
    }

    /// Inverse over `ℤ/m`: Gauss–Jordan with unit pivots modulo each prime
    /// power of `m`, glued back together by CRT.
    pub fn inverse(&self) -> Result<ModularMatrix> {
        let parts = factorize(self.modulus);
        if parts.len() == 1 {
            return self.inverse_prime_power(parts[0].0);
        }
        let moduli: Vec<u64> = parts.iter().map(|&(p, k)| p.pow(k)).collect();
        let split = crt_split(self, &moduli)?;
        let inverses = split
            .iter()
            .zip(&parts)
            .map(|(a, &(p, _))| a.inverse_prime_power(p))
            .collect::<Result<Vec<_>>>()?;
        crt_join(&inverses)
    }

    fn inverse_prime_power(&self, p: u64) -> Result<ModularMatrix> {
        let n = self.dim;
        let m = self.modulus as i128;
        let mut a: Vec<i128> = self.entries.iter().map(|&x| x as i128).collect();
        let mut inv: Vec<i128> = vec![0; n * n];
        for i in 0..n {
            inv[i * n + i] = 1;
        }
        for col in 0..n {
            // over a local ring, an entry is a unit iff it is prime to p
            let pivot = (col..n)
                .find(|&r| a[r * n + col] % p as i128 != 0)
                .ok_or(Error::NotInvertible(self.modulus))?;
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                    inv.swap(pivot * n + c, col * n + c);
                }
            }
            let u = mod_inverse(a[col * n + col], m).ok_or(Error::NotInvertible(self.modulus))?;
            for c in 0..n {
                a[col * n + c] = a[col * n + c] * u % m;
                inv[col * n + c] = inv[col * n + c] * u % m;
            }
            for r in 0..n {
                if r == col || a[r * n + col] == 0 {
                    continue;
                }
                let f = a[r * n + col];
                for c in 0..n {
                    a[r * n + c] = (a[r * n + c] - f * a[col * n + c]).rem_euclid(m);
                    inv[r * n + c] = (inv[r * n + c] - f * inv[col * n + c]).rem_euclid(m);
                }
            }
        }
        Ok(ModularMatrix {
            dim: n,
            modulus: self.modulus,
            entries: inv.into_iter().map(|x| x.rem_euclid(m) as u32).collect(),
        })
    }

    /// Reduction to a divisor `d` of the modulus.
    pub fn reduce_to(&self, d: u64) -> Result<ModularMatrix> {
        check_modulus(d)?;
        if !self.modulus.is_multiple_of(d) {
            return Err(Error::InvalidParameter(format!("{d} does not divide {}", self.modulus)));
        }
        Ok(ModularMatrix {
            dim: self.dim,
            modulus: d,
            entries: self.entries.iter().map(|&x| (x as u64 % d) as u32).collect(),
        })
    }

    /// `col[dst] += k · col[src]`, `k` taken modulo `m`.
    pub(crate) fn add_column_multiple(&mut self, src: usize, dst: usize, k: i64) {
        let m = self.modulus as u128;
        let k = k.rem_euclid(self.modulus as i64) as u128;
        for r in 0..self.dim {
            let s = self.entries[r * self.dim + src] as u128;
            let d = &mut self.entries[r * self.dim + dst];
            *d = ((*d as u128 + s * k) % m) as u32;
        }
    }
}

impl Mul<&ModularMatrix> for &ModularMatrix {
    type Output = ModularMatrix;

    fn mul(self, rhs: &ModularMatrix) -> ModularMatrix {
        self.try_mul(rhs).expect("dimension or modulus mismatch")
    }
}

impl fmt::Display for ModularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, " (mod {})", self.modulus)
    }
}

fn check_modulus(m: u64) -> Result<()> {
    if (2..=MAX_MODULUS).contains(&m) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("modulus {m} outside [2, {MAX_MODULUS}]")))
    }
}

fn digit_width(m: u64) -> usize {
    let top = m - 1;
    match top {
        0..=0xff => 1,
        0x100..=0xffff => 2,
        0x1_0000..=0xff_ffff => 3,
        _ => 4,
    }
}

fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    let e = a.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && factorize(p) == vec![(p, 1)]
}

/// `ℤ/m → ∏ ℤ/m_i` entrywise, for pairwise coprime `m_i` with product `m`.
pub fn crt_split(a: &ModularMatrix, moduli: &[u64]) -> Result<Vec<ModularMatrix>> {
    check_coprime_factorization(a.modulus, moduli)?;
    moduli.iter().map(|&q| a.reduce_to(q)).collect()
}

/// Inverse of [`crt_split`].
pub fn crt_join(parts: &[ModularMatrix]) -> Result<ModularMatrix> {
    let first = parts.first().ok_or_else(|| Error::InvalidParameter("no CRT parts".into()))?;
    let dim = first.dim;
    let moduli: Vec<u64> = parts.iter().map(|p| p.modulus).collect();
    let total: u64 = moduli.iter().try_fold(1u64, |acc, &q| acc.checked_mul(q)).ok_or_else(
        || Error::InvalidParameter("CRT modulus overflows".into()),
    )?;
    check_coprime_factorization(total, &moduli)?;
    check_modulus(total)?;
    for p in parts {
        if p.dim != dim {
            return Err(Error::DimensionMismatch { left: dim, right: p.dim });
        }
    }
    // idempotents e_i ≡ 1 mod m_i, ≡ 0 mod m_j
    let idempotents: Vec<u128> = moduli
        .iter()
        .map(|&q| {
            let rest = total / q;
            let inv = mod_inverse(rest as i128, q as i128).expect("coprime") as u128;
            rest as u128 * inv % total as u128
        })
        .collect();
    let entries = (0..dim * dim)
        .map(|k| {
            let acc: u128 = parts
                .iter()
                .zip(&idempotents)
                .map(|(p, &e)| p.entries[k] as u128 * e % total as u128)
                .sum();
            (acc % total as u128) as u32
        })
        .collect();
    Ok(ModularMatrix { dim, modulus: total, entries })
}

fn check_coprime_factorization(m: u64, moduli: &[u64]) -> Result<()> {
    let product = moduli.iter().try_fold(1u64, |acc, &q| acc.checked_mul(q));
    if product != Some(m) || moduli.iter().any(|&q| q < 2) {
        return Err(Error::InvalidParameter(format!("{moduli:?} is not a factorization of {m}")));
    }
    for (i, &a) in moduli.iter().enumerate() {
        for &b in &moduli[i + 1..] {
            if a.gcd(&b) != 1 {
                return Err(Error::InvalidParameter(format!(
                    "factors {a} and {b} are not coprime"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mm(rows: &[&[i64]], m: u64) -> ModularMatrix {
        ModularMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), m).unwrap()
    }

    #[test]
    fn reduction_is_canonical() {
        let a = mm(&[&[-1, 7], &[12, 5]], 6);
        assert_eq!(a.rows(), vec![vec![5, 1], vec![0, 5]]);
    }

    #[test]
    fn encoding_round_trip_and_width() {
        let a = mm(&[&[1, 2], &[3, 4]], 5);
        assert_eq!(a.encode(), vec![1, 2, 3, 4]);
        assert_eq!(ModularMatrix::decode(&a.encode(), 2, 5).unwrap(), a);
        let b = mm(&[&[1, 300], &[0, 1]], 1000);
        assert_eq!(b.encode().len(), 8);
        assert_eq!(ModularMatrix::decode(&b.encode(), 2, 1000).unwrap(), b);
        assert!(ModularMatrix::decode(&[9, 0, 0, 1], 2, 5).is_err());
    }

    #[test]
    fn inverse_composite_modulus() {
        let a = mm(&[&[1, 5], &[0, 1]], 6);
        assert_eq!(&a * &a.inverse().unwrap(), ModularMatrix::identity(2, 6));
        let b = mm(&[&[2, 3, 1], &[1, 1, 0], &[5, 1, 1]], 12);
        // det = 2·1 - 3·1 + 1·(1-5) = -5, a unit mod 12
        let bi = b.inverse().unwrap();
        assert!((&b * &bi).is_identity());
        assert!((&bi * &b).is_identity());
        let singular = mm(&[&[2, 0], &[0, 1]], 4);
        assert_eq!(singular.inverse(), Err(Error::NotInvertible(4)));
    }

    #[test]
    fn crt_identity_mod_six() {
        let i6 = ModularMatrix::identity(2, 6);
        let parts = crt_split(&i6, &[2, 3]).unwrap();
        assert_eq!(parts, vec![ModularMatrix::identity(2, 2), ModularMatrix::identity(2, 3)]);
        assert_eq!(crt_join(&parts).unwrap(), i6);
        assert!(crt_split(&i6, &[6, 1]).is_err());
        assert!(crt_split(&ModularMatrix::identity(2, 12), &[2, 6]).is_err());
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert!(is_prime(97) && !is_prime(91) && !is_prime(1));
    }
}
