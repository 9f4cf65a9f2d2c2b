use super::{BfsOptions, FiniteMatrixGroup};
use crate::error::{Error, Result};
use crate::symplectic::ModularMatrix;

/// Whether `G ≅ S_n`: `|G| = n!` and some involutions `t_1, …, t_{n-1}` of `G`
/// satisfy the Coxeter relations of `S_n` and generate `G`.
pub fn recognize_symmetric(g: &FiniteMatrixGroup, n: usize) -> Result<bool> {
    if n > 6 {
        return Err(Error::InvalidParameter(format!("symmetric recognition supports n <= 6, got {n}")));
    }
    if !g.is_complete() {
        return Err(Error::InvalidParameter("group enumeration is incomplete".into()));
    }
    let factorial: usize = (1..=n.max(1)).product();
    if g.order() != factorial {
        return Ok(false);
    }
    if n <= 1 {
        return Ok(true);
    }
    let involutions: Vec<&ModularMatrix> =
        g.elements().iter().filter(|x| !x.is_identity() && (*x * *x).is_identity()).collect();
    let mut chosen = Vec::with_capacity(n - 1);
    Ok(extend(&involutions, &mut chosen, n, factorial))
}

fn extend<'a>(
    inv: &[&'a ModularMatrix],
    chosen: &mut Vec<&'a ModularMatrix>,
    n: usize,
    order: usize,
) -> bool {
    if chosen.len() == n - 1 {
        let gens: Vec<ModularMatrix> = chosen.iter().map(|&t| t.clone()).collect();
        let opts = BfsOptions { limit: order + 1, allow_partial: true, ..BfsOptions::default() };
        return FiniteMatrixGroup::generate(&gens, opts).map(|h| h.order() == order).unwrap_or(false);
    }
    for &t in inv {
        let admissible = match chosen.split_last() {
            None => true,
            Some((&last, earlier)) => {
                let braid = last * t;
                t != last
                    && (&(&braid * &braid) * &braid).is_identity()
                    && earlier.iter().all(|&s| s * t == t * s)
            }
        };
        if admissible {
            chosen.push(t);
            if extend(inv, chosen, n, order) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
