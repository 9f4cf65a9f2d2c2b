use serde_json::json;

use super::{BfsOptions, FiniteMatrixGroup};
use crate::braid::pure_generator;
use crate::error::{Error, Result};
use crate::rep::RepSpace;
use crate::report::{Case, Report};
use crate::symplectic::{
    church_putman_set, factorize, is_prime, lie_check, log_map, reduce_mod, sp_lie_order,
    sp_order, sp_stabilizer_order, transvection, AlternatingForm, FormAction, ModularMatrix,
};

fn require_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    Ok(())
}

fn generate(gens: &[ModularMatrix], limit: usize) -> Result<FiniteMatrixGroup> {
    FiniteMatrixGroup::generate(gens, BfsOptions::with_limit(limit))
}

/// Transvections along `e_i` and `e_i + e_j` for the standard form, mod `m`.
fn standard_transvections(half: usize, m: u64) -> Result<Vec<ModularMatrix>> {
    let j = AlternatingForm::standard(half)?;
    let n = 2 * half;
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut v = vec![0i64; n];
            v[a] += 1;
            if b != a {
                v[b] += 1;
            }
            out.push(reduce_mod(&transvection(&v, &j, 1)?, m)?);
        }
    }
    Ok(out)
}

/// Reduces the level-`a` Church–Putman generators mod `b` and checks that
/// they generate all of `Sp_{2n}(ℤ/b)`.
pub fn verify_exact_sequence_32(a: u64, b: u64, half: usize, limit: usize) -> Result<Report> {
    require_prime(a)?;
    require_prime(b)?;
    if a == b {
        return Err(Error::InvalidParameter("the two primes must differ".into()));
    }
    let mut report = Report::new("lemma32");
    report.param("a", a).param("b", b).param("half", half).param("limit", limit);
    let gens = church_putman_set(a as i64, half)?
        .iter()
        .map(|g| reduce_mod(&g.matrix, b))
        .collect::<Result<Vec<_>>>()?;
    let image = generate(&gens, limit)?;
    let expected = sp_order(half as u32, b);
    report.push(Case::compare("image-order", json!(expected as u64), json!(image.order())));
    let form = AlternatingForm::standard(half)?;
    report.push(Case::new(
        "image-is-symplectic",
        image.all(|x| x.preserves(&form)),
        json!(true),
        json!(image.all(|x| x.preserves(&form))),
    ));
    let full = generate(&standard_transvections(half, b)?, limit)?;
    report.push(Case::compare("transvection-group-order", json!(expected as u64), json!(full.order())));
    report.push(Case::compare("same-group", json!(true), json!(image.same_group(&full))));
    Ok(report.finish())
}

/// Reduces the level-`p` Church–Putman generators mod `p²` and checks that
/// they generate the whole kernel of `Sp_{2n}(ℤ/p²) → Sp_{2n}(ℤ/p)`.
pub fn verify_cp_kernel_generation(p: u64, half: usize, limit: usize) -> Result<Report> {
    require_prime(p)?;
    let mut report = Report::new("cp-kernel");
    report.param("p", p).param("half", half).param("limit", limit);
    let m = p * p;
    let gens = church_putman_set(p as i64, half)?
        .iter()
        .map(|g| reduce_mod(&g.matrix, m))
        .collect::<Result<Vec<_>>>()?;
    let k = generate(&gens, limit)?;
    report.push(Case::compare(
        "kernel-order",
        json!(sp_lie_order(half as u32, p) as u64),
        json!(k.order()),
    ));
    report.push(Case::compare("abelian", json!(true), json!(k.is_abelian())));
    report.push(Case::compare("exponent", json!(p), json!(k.exponent())));
    let form = AlternatingForm::standard(half)?;
    let in_kernel = k.all(|x| x.preserves(&form) && x.reduce_to(p).map(|r| r.is_identity()).unwrap_or(false));
    report.push(Case::compare("elements-in-kernel", json!(true), json!(in_kernel)));
    let lie = k.all(|x| {
        log_map(x, p, p).and_then(|h| lie_check(&h, half)).unwrap_or(false)
    });
    report.push(Case::compare("log-in-lie-algebra", json!(true), json!(lie)));
    Ok(report.finish())
}

/// Predicted `|PB_n / B_n[m]|` for `m = 2·p_1⋯p_k` or `4·p_1⋯p_k` with
/// distinct odd primes `p_i`.
///
/// Odd `n = 2g + 1`: `∏ |Sp_{2g}(F_{p_i})|`, times `|sp_{2g}(F_2)|` when `4 | m`.
/// Even `n`: the same with `Sp_n(F_p)` replaced by the stabilizer of a nonzero
/// vector, and `sp` by the annihilator of a nonzero vector (order `2^{h(2h-1)}`,
/// `n = 2h`).
pub fn theorem_b_expected_order(n: usize, m: u64) -> Result<u128> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("needs n >= 3, got {n}")));
    }
    let factors = factorize(m);
    let two = factors.iter().find(|f| f.0 == 2).map(|f| f.1).unwrap_or(0);
    if !(1..=2).contains(&two) || factors.iter().any(|&(p, e)| p != 2 && e != 1) {
        return Err(Error::InvalidParameter(format!(
            "m must be 2 or 4 times a product of distinct odd primes, got {m}"
        )));
    }
    let odd = n % 2 == 1;
    let g = (n / 2) as u32;
    let mut order: u128 = 1;
    for &(p, _) in factors.iter().filter(|f| f.0 != 2) {
        order *= if odd { sp_order(g, p) } else { sp_stabilizer_order(g, p) };
    }
    if two == 2 {
        order *= if odd { sp_lie_order(g, 2) } else { 1u128 << (g * (2 * g - 1)) };
    }
    Ok(order)
}

/// Enumerates `⟨ρ_m(a_{i,j})⟩` and compares with [`theorem_b_expected_order`].
pub fn verify_theorem_b(n: usize, m: u64, limit: usize) -> Result<Report> {
    let expected = theorem_b_expected_order(n, m)?;
    let mut report = Report::new("theorem-b");
    report.param("n", n).param("m", m).param("limit", limit);
    let space = RepSpace::new(n)?;
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            gens.push(space.rho_mod(&pure_generator(i, j, n)?, m)?);
        }
    }
    let g = generate(&gens, limit)?;
    report.push(Case::compare("image-order", json!(expected as u64), json!(g.order())));
    let trivial_mod_2 = g.all(|x| x.reduce_to(2).map(|r| r.is_identity()).unwrap_or(false));
    report.push(Case::compare("trivial-mod-2", json!(true), json!(trivial_mod_2)));
    if let Some(u) = space.fixed_vector() {
        let u: Vec<u64> = u.iter().map(|&x| x as u64).collect();
        report.push(Case::compare("fixes-u", json!(true), json!(g.all(|x| x.apply(&u) == u))));
    }
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_orders() {
        assert_eq!(theorem_b_expected_order(3, 6).unwrap(), 24);
        assert_eq!(theorem_b_expected_order(3, 30).unwrap(), 2880);
        assert_eq!(theorem_b_expected_order(3, 12).unwrap(), 192);
        assert_eq!(theorem_b_expected_order(4, 6).unwrap(), 648);
        assert!(theorem_b_expected_order(3, 18).is_err());
        assert!(theorem_b_expected_order(3, 8).is_err());
        assert!(theorem_b_expected_order(3, 15).is_err());
    }

    #[test]
    fn small_pure_image_orders() {
        for m in [6, 12, 30] {
            let r = verify_theorem_b(3, m, 100_000).unwrap();
            assert!(r.passed(), "{}", r.to_json());
        }
    }

    #[test]
    fn cp_kernel_p2() {
        let r = verify_cp_kernel_generation(2, 2, 100_000).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }

    #[test]
    fn exact_sequence_3_2() {
        let r = verify_exact_sequence_32(3, 2, 2, 100_000).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(verify_exact_sequence_32(3, 3, 2, 10).is_err());
    }
}
