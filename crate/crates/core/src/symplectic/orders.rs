//! Closed-form group orders used as enumeration oracles.

/// `|Sp_{2g}(F_p)| = p^{g²} ∏_{i=1}^{g} (p^{2i} - 1)`.
///
/// # Panics
///
/// Panics on `u128` overflow.
pub fn sp_order(g: u32, p: u64) -> u128 {
    let p = p as u128;
    let mut acc = p.checked_pow(g * g).expect("order overflows u128");
    for i in 1..=g {
        let f = p.checked_pow(2 * i).expect("order overflows u128") - 1;
        acc = acc.checked_mul(f).expect("order overflows u128");
    }
    acc
}

/// `|sp_{2g}(F_p)| = p^{g(2g+1)}`.
pub fn sp_lie_order(g: u32, p: u64) -> u128 {
    (p as u128).checked_pow(g * (2 * g + 1)).expect("order overflows u128")
}

/// Order of the stabilizer of a nonzero vector in `Sp_{2g}(F_p)`.
pub fn sp_stabilizer_order(g: u32, p: u64) -> u128 {
    sp_order(g, p) / ((p as u128).pow(2 * g) - 1)
}
