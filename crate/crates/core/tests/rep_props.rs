use braidcong::braid::{random_word, BraidWord};
use braidcong::rep::{
    b33_generators, center_element, cor54_generators, separating_chain_element, sypre_relators, wajnryb_relators,
    Claim, CongruenceElement, RepSpace,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Mat = Vec<Vec<i128>>;

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect()).collect()
}

fn identity(n: usize) -> Mat {
    (0..n).map(|r| (0..n).map(|c| i128::from(r == c)).collect()).collect()
}

fn gram(space: &RepSpace) -> Mat {
    let e = space.form().gram().to_i64_rows().unwrap();
    e.into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect()
}

/// `ρ(w)` as a plain product of `I ± e_i (E e_i)ᵀ`.
fn oracle_rho(space: &RepSpace, w: &BraidWord) -> Mat {
    let e = gram(space);
    let n = e.len();
    let mut acc = identity(n);
    for &letter in w.letters() {
        let i = letter.unsigned_abs() as usize - 1;
        let s: i128 = if letter > 0 { 1 } else { -1 };
        let mut t = identity(n);
        for c in 0..n {
            t[i][c] += s * e[c][i];
        }
        acc = mul(&acc, &t);
    }
    acc
}

fn to_mat(space: &RepSpace, w: &BraidWord) -> Mat {
    let a = space.rho(w).unwrap().to_i64_rows().expect("small entries");
    a.into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect()
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
    prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn sized_word(min_n: usize, max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (min_n..=max_n).prop_flat_map(move |n| word(n, max_len))
}

#[test]
fn first_generator_cubed() {
    let space = RepSpace::new(3).unwrap();
    let w = BraidWord::generator_power(3, 1, 3).unwrap();
    assert_eq!(to_mat(&space, &w), vec![vec![1, 3], vec![0, 1]]);
}

#[test]
fn form_preservation_and_fixed_vector_on_seeded_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=6 {
        let space = RepSpace::new(n).unwrap();
        let e = gram(&space);
        let u: Option<Vec<i128>> = space.fixed_vector().map(|u| u.iter().map(|&x| i128::from(x)).collect());
        for _ in 0..500 {
            let w = random_word(n, 30, &mut rng).unwrap();
            let a = to_mat(&space, &w);
            let at: Mat = (0..a.len()).map(|r| (0..a.len()).map(|c| a[c][r]).collect()).collect();
            assert_eq!(mul(&mul(&at, &e), &a), e, "form not preserved by {w}");
            if let Some(u) = &u {
                let au: Vec<i128> = a.iter().map(|row| row.iter().zip(u).map(|(x, y)| x * y).sum()).collect();
                assert_eq!(&au, u, "u moved by {w}");
            }
        }
    }
}

#[test]
fn involution_relator_in_twisted_form() {
    for p in [5i64, 7, 11] {
        let h = (p - 1) / 2;
        let mut letters = vec![1; h as usize];
        letters.extend([2, 2, 2, 2]);
        letters.extend(vec![-1; h as usize]);
        // (σ2² σ1 σ2⁻²)⁻¹ = σ2² σ1⁻¹ σ2⁻²
        letters.extend([2, 2, -1, -2, -2]);
        let w = BraidWord::new(3, letters).unwrap();
        assert!(RepSpace::new(3).unwrap().in_congruence(&w, p as u64).unwrap(), "p = {p}");
    }
}

#[test]
fn relator_families_lie_in_level_p() {
    for n in 3..=6 {
        let space = RepSpace::new(n).unwrap();
        for p in [3u64, 5, 7] {
            for r in wajnryb_relators(n, p).unwrap().iter().chain(sypre_relators(n, p).unwrap().iter()) {
                assert!(space.in_congruence(&r.word, p).unwrap(), "{} for n = {n}, p = {p}", r.name);
            }
        }
    }
}

fn families() -> Vec<CongruenceElement> {
    let mut all = b33_generators().unwrap();
    for n in [3, 4, 5] {
        for p in [3, 5] {
            all.extend(cor54_generators(n, p).unwrap());
        }
    }
    all.push(center_element(3, 3, 5).unwrap());
    all.push(center_element(3, 5, 5).unwrap());
    for (k, n) in [(1, 3), (1, 5), (2, 5)] {
        all.push(separating_chain_element(k, n).unwrap());
    }
    all
}

#[test]
fn membership_is_inherited_by_divisors() {
    for e in families() {
        assert!(e.holds, "{} does not hold", e.label);
        let space = RepSpace::new(e.word.strands()).unwrap();
        let m = match e.claim {
            Claim::Level(m) => m,
            Claim::Torelli => 2 * 3 * 5 * 7,
        };
        for l in (2..=m).filter(|l| m % l == 0) {
            assert!(space.in_congruence(&e.word, l).unwrap(), "{} not in level {l}", e.label);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fast_rho_matches_transvection_product(w in sized_word(3, 7, 25)) {
        let space = RepSpace::new(w.strands()).unwrap();
        prop_assert_eq!(to_mat(&space, &w), oracle_rho(&space, &w));
    }

    #[test]
    fn rho_is_a_homomorphism(n in 3usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_word(n, 15, &mut rng).unwrap();
        let b = random_word(n, 15, &mut rng).unwrap();
        let space = RepSpace::new(n).unwrap();
        prop_assert_eq!(space.rho(&(&a * &b)).unwrap(), &space.rho(&a).unwrap() * &space.rho(&b).unwrap());
    }

    #[test]
    fn kernels_are_normal_and_closed(idx in any::<prop::sample::Index>(), idx2 in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let all: Vec<CongruenceElement> = families().into_iter().filter(|e| matches!(e.claim, Claim::Level(_))).collect();
        let e = idx.get(&all);
        let Claim::Level(m) = e.claim else { unreachable!() };
        let n = e.word.strands();
        let space = RepSpace::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_word(n, 12, &mut rng).unwrap();
        let conj = &(&g * &e.word) * &g.inverse();
        prop_assert!(space.in_congruence(&conj, m).unwrap());
        let partners: Vec<&CongruenceElement> = all.iter()
            .filter(|f| f.word.strands() == n && matches!(f.claim, Claim::Level(l) if l % m == 0))
            .collect();
        let f = idx2.get(&partners);
        prop_assert!(space.in_congruence(&(&e.word * &f.word), m).unwrap());
    }
}
