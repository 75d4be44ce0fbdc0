use lagtrace_core::freegroup::{Ambient, FreeGroupMap, GroupWord, Letter};
use lagtrace_core::groupring::{laurent_det, GroupRingElem, LaurentElem, Matrix, RingElem};
use lagtrace_core::tensorlie::{
    lyndon_words, magnus_expand_word, tensor_to_lie, witt_dimension, Alphabet, LiePoly, TensorPoly,
};
use lagtrace_core::BigInt;
use proptest::prelude::*;

const G: usize = 2;
const H: Alphabet = Alphabet::Surface(G);

fn word_strategy(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0..rank, any::<bool>()), 0..=max_len)
}

fn word(ambient: Ambient, letters: &[(usize, bool)]) -> GroupWord {
    GroupWord::reduce(ambient, G, letters.iter().map(|&(g, i)| Letter::new(g, i))).unwrap()
}

fn gen(ambient: Ambient, i: usize) -> GroupWord {
    word(ambient, &[(i, false)])
}

/// Fox derivative by the product rule, read letter by letter.
fn fox_oracle(w: &GroupWord, i: usize) -> GroupRingElem {
    let (amb, g) = (w.ambient(), w.genus());
    let mut acc = GroupRingElem::zero(amb, g);
    let mut prefix = GroupWord::identity(amb, g).unwrap();
    for l in w.letters() {
        let next = prefix.multiply(&word(amb, &[(l.gen as usize, l.inverse)])).unwrap();
        if l.gen as usize == i {
            if l.inverse {
                acc.add_assign_scaled(&GroupRingElem::from_word(&next), &BigInt::from(-1));
            } else {
                acc.add_assign_scaled(&GroupRingElem::from_word(&prefix), &BigInt::from(1));
            }
        }
        prefix = next;
    }
    acc
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut mu, mut p) = (n, 1i64, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn necklace_formula(n: usize, k: usize) -> i64 {
    let s: i64 = (1..=k).filter(|d| k % d == 0).map(|d| mobius(d) * (n as i64).pow((k / d) as u32)).sum();
    s / k as i64
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

fn leibniz_det(rows: &[Vec<LaurentElem>]) -> LaurentElem {
    let n = rows.len();
    let mut acc = rows[0][0].zero_like();
    for p in perms(n) {
        let mut term = rows[0][0].one_like();
        for (i, &j) in p.iter().enumerate() {
            term = term.mul(&rows[i][j]);
        }
        acc = acc.add(&term.scale(&BigInt::from(sign(&p))));
    }
    acc
}

/// A small Laurent polynomial over `H'`.
fn laurent_strategy() -> impl Strategy<Value = LaurentElem> {
    prop::collection::vec(((-1i32..=1, -1i32..=1), -2i64..=2), 0..=2).prop_map(|ts| {
        LaurentElem::from_terms(
            Alphabet::Handlebody(G),
            ts.into_iter().map(|((a, b), c)| (vec![a, b], BigInt::from(c))),
        )
    })
}

/// A random bracket expression in the letters of `H`.
fn lie_strategy() -> impl Strategy<Value = LiePoly> {
    let leaf = (0..2 * G).prop_map(|i| LiePoly::generator(H, i));
    leaf.prop_recursive(3, 8, 2, |inner| (inner.clone(), inner).prop_map(|(x, y)| x.bracket(&y)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fox_derivatives_match_product_rule(ls in word_strategy(2 * G, 30)) {
        let w = word(Ambient::Surface, &ls);
        let x = GroupRingElem::from_word(&w);
        for i in 0..2 * G {
            prop_assert_eq!(x.fox_derivative(i).unwrap(), fox_oracle(&w, i));
        }
    }

    #[test]
    fn fox_fundamental_identity(ls in word_strategy(2 * G, 40)) {
        let w = word(Ambient::Surface, &ls);
        let one = GroupRingElem::one(Ambient::Surface, G);
        let mut rhs = GroupRingElem::zero(Ambient::Surface, G);
        for i in 0..2 * G {
            let gi = GroupRingElem::from_word(&gen(Ambient::Surface, i)).try_add(&one.scale(&BigInt::from(-1))).unwrap();
            let term = GroupRingElem::from_word(&w).fox_derivative(i).unwrap().try_mul(&gi).unwrap();
            rhs = rhs.try_add(&term).unwrap();
        }
        let lhs = GroupRingElem::from_word(&w).try_add(&one.scale(&BigInt::from(-1))).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_is_an_anti_involution(a in word_strategy(2 * G, 12), b in word_strategy(2 * G, 12)) {
        let x = GroupRingElem::from_word(&word(Ambient::Surface, &a))
            .try_add(&GroupRingElem::from_word(&word(Ambient::Surface, &b)).scale(&BigInt::from(3)))
            .unwrap();
        let y = GroupRingElem::from_word(&word(Ambient::Surface, &b));
        prop_assert_eq!(x.bar().bar(), x.clone());
        prop_assert_eq!(x.try_mul(&y).unwrap().bar(), y.bar().try_mul(&x.bar()).unwrap());
    }

    #[test]
    fn magnus_expansion_is_multiplicative(a in word_strategy(2 * G, 10), b in word_strategy(2 * G, 10)) {
        let (u, v) = (word(Ambient::Surface, &a), word(Ambient::Surface, &b));
        let n = 4;
        let lhs = magnus_expand_word(&u.multiply(&v).unwrap(), n);
        let rhs = magnus_expand_word(&u, n).mul(&magnus_expand_word(&v, n)).truncate(n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn abelianization_is_additive(a in word_strategy(2 * G, 20), b in word_strategy(2 * G, 20)) {
        let (u, v) = (word(Ambient::Surface, &a), word(Ambient::Surface, &b));
        let sum: Vec<i64> = u.abelianize().iter().zip(v.abelianize()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(u.multiply(&v).unwrap().abelianize(), sum);
    }

    #[test]
    fn free_group_maps_compose(
        imgs in prop::collection::vec(word_strategy(2 * G, 4), 2 * G),
        ls in word_strategy(2 * G, 10),
    ) {
        let f = FreeGroupMap::new(
            Ambient::Surface,
            G,
            imgs.iter().map(|l| word(Ambient::Surface, l)).collect(),
        ).unwrap();
        let w = word(Ambient::Surface, &ls);
        let ff = f.compose(&f).unwrap();
        prop_assert_eq!(ff.apply(&w).unwrap(), f.apply(&f.apply(&w).unwrap()).unwrap());
    }

    #[test]
    fn graded_bar_matches_group_ring_bar(a in word_strategy(2 * G, 6), b in word_strategy(2 * G, 6)) {
        // x = [u, v] - 1 lies in I^2, so bar x and the graded bar agree in degree 2.
        let (u, v) = (word(Ambient::Surface, &a), word(Ambient::Surface, &b));
        let c = GroupWord::commutator(&u, &v).unwrap();
        let x = GroupRingElem::from_word(&c)
            .try_add(&GroupRingElem::one(Ambient::Surface, G).scale(&BigInt::from(-1)))
            .unwrap();
        let lhs = x.bar().magnus_expand(3).homogeneous_part(2);
        let rhs = x.magnus_expand(3).homogeneous_part(2).graded_bar();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dynkin_round_trip(p in lie_strategy(), q in lie_strategy()) {
        let r = &p + &q.scale(&BigInt::from(-2));
        let t: TensorPoly = r.to_tensor();
        prop_assert_eq!(tensor_to_lie(&t).unwrap(), r);
    }

    #[test]
    fn non_lie_tensors_are_rejected(i in 0..2 * G, j in 0..2 * G) {
        let t = TensorPoly::letter(H, i).mul(&TensorPoly::letter(H, j));
        prop_assert!(tensor_to_lie(&t).is_err());
    }

    #[test]
    fn determinant_matches_permutation_expansion(
        n in 2usize..=5,
        entries in prop::collection::vec(laurent_strategy(), 25),
    ) {
        let rows: Vec<Vec<LaurentElem>> = (0..n).map(|i| entries[i * n..(i + 1) * n].to_vec()).collect();
        let m = Matrix::new(rows.clone()).unwrap();
        prop_assert_eq!(laurent_det(&m), leibniz_det(&rows));
    }
}

#[test]
fn witt_dimensions_match_necklace_formula() {
    for n in [2, 4, 6] {
        for k in 1..=5 {
            let expected = necklace_formula(n, k);
            assert_eq!(witt_dimension(n, k), BigInt::from(expected), "n={n} k={k}");
            assert_eq!(lyndon_words(n, k).len() as i64, expected, "n={n} k={k}");
        }
    }
}
