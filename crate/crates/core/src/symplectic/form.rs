use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{big_vec, IntegerMatrix};
use super::modular::ModularMatrix;
use crate::error::{Error, Result};

/// An alternating bilinear form `⟨x, y⟩ = xᵀ E y` given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingForm {
    gram: IntegerMatrix,
}

impl AlternatingForm {
    pub fn new(gram: IntegerMatrix) -> Result<Self> {
        let n = gram.dim();
        for r in 0..n {
            if !gram.get(r, r).is_zero() {
                return Err(Error::InvalidParameter("alternating form needs zero diagonal".into()));
            }
            for c in 0..r {
                if gram.get(r, c) != &-gram.get(c, r) {
                    return Err(Error::InvalidParameter("Gram matrix is not antisymmetric".into()));
                }
            }
        }
        Ok(AlternatingForm { gram })
    }

    /// `J = [[0, I_n], [-I_n, 0]]`.
    pub fn standard(half: usize) -> Result<Self> {
        if half == 0 {
            return Err(Error::InvalidParameter("standard form needs n >= 1".into()));
        }
        let mut gram = IntegerMatrix::zero(2 * half);
        for i in 0..half {
            gram.set(i, half + i, BigInt::one());
            gram.set(half + i, i, -BigInt::one());
        }
        Ok(AlternatingForm { gram })
    }

    /// The chain form: `E[i+1][i] = 1`, `E[i][i+1] = -1`, zero elsewhere.
    pub fn tridiagonal(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidParameter("chain form needs N >= 2".into()));
        }
        let mut gram = IntegerMatrix::zero(dim);
        for i in 0..dim - 1 {
            gram.set(i + 1, i, BigInt::one());
            gram.set(i, i + 1, -BigInt::one());
        }
        Ok(AlternatingForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn gram(&self) -> &IntegerMatrix {
        &self.gram
    }

    pub fn pairing(&self, x: &[i64], y: &[i64]) -> BigInt {
        let n = self.dim();
        let mut acc = BigInt::zero();
        for (r, &xr) in x.iter().enumerate().take(n).filter(|(_, &xr)| xr != 0) {
            for (c, &yc) in y.iter().enumerate().take(n).filter(|(_, &yc)| yc != 0) {
                acc += self.gram.get(r, c) * BigInt::from(xr * yc);
            }
        }
        acc
    }

    pub fn det(&self) -> BigInt {
        self.gram.det()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Primitive integral basis of `{x : E x = 0}`.
    pub fn radical(&self) -> Vec<Vec<BigInt>> {
        integer_nullspace(&self.gram)
    }
}

/// Matrix of `x ↦ x + power·⟨x, v⟩·v`, i.e. `I + power · v (E v)ᵀ`.
pub fn transvection(v: &[i64], form: &AlternatingForm, power: i64) -> Result<IntegerMatrix> {
    let n = form.dim();
    if v.len() != n {
        return Err(Error::DimensionMismatch { left: n, right: v.len() });
    }
    let ev = form.gram.apply(&big_vec(v))?;
    let mut t = IntegerMatrix::identity(n);
    let k = BigInt::from(power);
    for (r, &vr) in v.iter().enumerate().filter(|(_, &vr)| vr != 0) {
        let scale = &k * BigInt::from(vr);
        for (c, evc) in ev.iter().enumerate() {
            *t.entry_mut(r, c) += &scale * evc;
        }
    }
    Ok(t)
}

/// Matrices that can be tested against an alternating form.
pub trait FormAction {
    fn dimension(&self) -> usize;
    /// `AᵀEA = E`, modulo the matrix modulus where there is one.
    fn preserves(&self, form: &AlternatingForm) -> bool;
    /// `A u = u`, modulo the matrix modulus where there is one.
    fn fixes(&self, u: &[i64]) -> bool;
}

impl FormAction for IntegerMatrix {
    fn dimension(&self) -> usize {
        self.dim()
    }

    fn preserves(&self, form: &AlternatingForm) -> bool {
        &(&self.transpose() * form.gram()) * self == *form.gram()
    }

    fn fixes(&self, u: &[i64]) -> bool {
        let ub = big_vec(u);
        self.apply(&ub).map(|au| au == ub).unwrap_or(false)
    }
}

impl FormAction for ModularMatrix {
    fn dimension(&self) -> usize {
        self.dim()
    }

    fn preserves(&self, form: &AlternatingForm) -> bool {
        let e = ModularMatrix::from_integer(form.gram(), self.modulus()).expect("valid modulus");
        &(&self.transpose() * &e) * self == e
    }

    fn fixes(&self, u: &[i64]) -> bool {
        let m = self.modulus() as i64;
        let ur: Vec<u64> = u.iter().map(|&x| x.rem_euclid(m) as u64).collect();
        self.apply(&ur) == ur
    }
}

pub fn is_isometry<A: FormAction>(a: &A, form: &AlternatingForm) -> Result<bool> {
    if a.dimension() != form.dim() {
        return Err(Error::DimensionMismatch { left: a.dimension(), right: form.dim() });
    }
    Ok(a.preserves(form))
}

pub fn fixes_vector<A: FormAction>(a: &A, u: &[i64]) -> Result<bool> {
    if a.dimension() != u.len() {
        return Err(Error::DimensionMismatch { left: a.dimension(), right: u.len() });
    }
    Ok(a.fixes(u))
}

/// Integral change of basis `P` with `Pᵀ E P = J`, for unimodular `E`.
///
/// Symplectic Gram–Schmidt by congruence moves: a Euclidean pass on the
/// pivot row isolates a partner with pairing `±1`, the hyperbolic pair is
/// split off, and the pairs are finally reordered into `(x_1..x_g, y_1..y_g)`.
pub fn symplectic_basis_change(form: &AlternatingForm) -> Result<IntegerMatrix> {
    let n = form.dim();
    if n % 2 == 1 || !form.is_unimodular() {
        return Err(Error::DegenerateForm);
    }
    let mut m = form.gram().clone();
    let mut p = IntegerMatrix::identity(n);
    // col[dst] += k·col[src] applied as a congruence
    let add = |m: &mut IntegerMatrix, p: &mut IntegerMatrix, src: usize, dst: usize, k: &BigInt| {
        m.add_column_multiple(src, dst, k);
        m.add_row_multiple(src, dst, k);
        p.add_column_multiple(src, dst, k);
    };
    let swap = |m: &mut IntegerMatrix, p: &mut IntegerMatrix, a: usize, b: usize| {
        m.swap_columns(a, b);
        m.swap_rows(a, b);
        p.swap_columns(a, b);
    };
    for k0 in (0..n).step_by(2) {
        loop {
            let nonzero: Vec<usize> = ((k0 + 1)..n).filter(|&c| !m.get(k0, c).is_zero()).collect();
            if nonzero.is_empty() {
                return Err(Error::DegenerateForm);
            }
            if nonzero.len() == 1 {
                let c = nonzero[0];
                if c != k0 + 1 {
                    swap(&mut m, &mut p, c, k0 + 1);
                }
                break;
            }
            let pivot = *nonzero.iter().min_by_key(|&&c| m.get(k0, c).abs()).expect("nonempty");
            for &c in &nonzero {
                if c != pivot {
                    let q = -m.get(k0, c).div_floor(m.get(k0, pivot));
                    add(&mut m, &mut p, pivot, c, &q);
                }
            }
        }
        let v = m.get(k0, k0 + 1).clone();
        if v == -BigInt::one() {
            // negate the partner
            m.add_column_multiple(k0 + 1, k0 + 1, &BigInt::from(-2));
            m.add_row_multiple(k0 + 1, k0 + 1, &BigInt::from(-2));
            p.add_column_multiple(k0 + 1, k0 + 1, &BigInt::from(-2));
        } else if !v.is_one() {
            return Err(Error::DegenerateForm);
        }
        for c in (k0 + 2)..n {
            let a = m.get(k0 + 1, c).clone();
            let b = -m.get(k0, c).clone();
            if !a.is_zero() {
                add(&mut m, &mut p, k0, c, &a);
            }
            if !b.is_zero() {
                add(&mut m, &mut p, k0 + 1, c, &b);
            }
        }
    }
    let g = n / 2;
    let mut out = IntegerMatrix::zero(n);
    for i in 0..g {
        for r in 0..n {
            out.set(r, i, p.get(r, 2 * i).clone());
            out.set(r, g + i, p.get(r, 2 * i + 1).clone());
        }
    }
    Ok(out)
}

/// Primitive integral basis of the rational nullspace of `a`.
fn integer_nullspace(a: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let n = a.dim();
    let mut rows = a.rows();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pr) = (rank..n).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, pr);
        for r in 0..n {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot = rows[rank].clone();
                let g = &pivot[col];
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x = &*x * g - y * &f;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            // x_fc = L, x_pivot = -row[fc]·L/row[pivot] with L a common multiple
            let l = pivots
                .iter()
                .enumerate()
                .fold(BigInt::one(), |acc, (ri, &pc)| acc.lcm(&rows[ri][pc]));
            let mut v = vec![BigInt::zero(); n];
            v[fc] = l.clone();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -(&rows[ri][fc] * &l) / &rows[ri][pc];
            }
            let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            let first_sign = v.iter().find(|x| !x.is_zero()).map(|x| x.signum()).unwrap_or_default();
            v.into_iter().map(|x| x / &g * &first_sign).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(m: &IntegerMatrix) -> Vec<Vec<i64>> {
        m.to_i64_rows().unwrap()
    }

    #[test]
    fn standard_form() {
        let j1 = AlternatingForm::standard(1).unwrap();
        assert_eq!(rows(j1.gram()), vec![vec![0, 1], vec![-1, 0]]);
        let j2 = AlternatingForm::standard(2).unwrap();
        assert_eq!(j2.gram().transpose(), j2.gram().neg());
        assert_eq!(j2.det(), BigInt::from(1));
    }

    #[test]
    fn chain_form() {
        let e2 = AlternatingForm::tridiagonal(2).unwrap();
        assert_eq!(rows(e2.gram()), vec![vec![0, -1], vec![1, 0]]);
        let e3 = AlternatingForm::tridiagonal(3).unwrap();
        assert_eq!(e3.radical(), vec![big_vec(&[1, 0, 1])]);
        for n in (2..=10).step_by(2) {
            assert_eq!(AlternatingForm::tridiagonal(n).unwrap().det(), BigInt::from(1));
        }
        assert!(AlternatingForm::tridiagonal(5).unwrap().det().is_zero());
        assert!(AlternatingForm::tridiagonal(1).is_err());
    }

    #[test]
    fn transvection_values() {
        let e2 = AlternatingForm::tridiagonal(2).unwrap();
        assert_eq!(rows(&transvection(&[1, 0], &e2, 1).unwrap()), vec![vec![1, 1], vec![0, 1]]);
        assert_eq!(rows(&transvection(&[1, 0], &e2, 7).unwrap()), vec![vec![1, 7], vec![0, 1]]);
        let e4 = AlternatingForm::tridiagonal(4).unwrap();
        let v = [1, -2, 0, 3];
        let t = transvection(&v, &e4, 3).unwrap();
        assert!(t.fixes(&v));
        assert!(is_isometry(&t, &e4).unwrap());
        assert!(transvection(&[1, 0, 0], &e4, 1).is_err());
    }

    #[test]
    fn isometry_checks() {
        let j = AlternatingForm::standard(2).unwrap();
        assert!(is_isometry(&IntegerMatrix::identity(4), &j).unwrap());
        let d = IntegerMatrix::from_rows(&[
            vec![2i64, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ])
        .unwrap();
        assert!(!is_isometry(&d, &j).unwrap());
        assert!(is_isometry(&IntegerMatrix::identity(2), &j).is_err());
        assert!(fixes_vector(&IntegerMatrix::identity(4), &[1, 0]).is_err());
    }

    #[test]
    fn basis_change_to_standard() {
        let j1 = AlternatingForm::standard(1).unwrap();
        let p = symplectic_basis_change(&j1).unwrap();
        assert!(p.is_identity());
        for n in [2usize, 4, 6, 8] {
            let e = AlternatingForm::tridiagonal(n).unwrap();
            let p = symplectic_basis_change(&e).unwrap();
            let j = AlternatingForm::standard(n / 2).unwrap();
            assert_eq!(&(&p.transpose() * e.gram()) * &p, *j.gram(), "N = {n}");
            assert!(p.det().abs().is_one());
        }
        assert_eq!(
            symplectic_basis_change(&AlternatingForm::tridiagonal(3).unwrap()),
            Err(Error::DegenerateForm)
        );
    }
}
