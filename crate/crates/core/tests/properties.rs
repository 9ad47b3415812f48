use proptest::prelude::*;

use ncverify::algebras::{builtin, builtin_system, Involution, BUILTIN_NAMES};
use ncverify::arith::rational;
use ncverify::front::{parse_expr, print_expr};
use ncverify::homs::{builtin_hom, compose, verify_hom};
use ncverify::repmat::{eval, sl2_irrep};
use ncverify::{GaussianRational, NCPoly, Word};

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, 1i64..=3, -3i64..=3, 1i64..=3)
        .prop_map(|(a, b, c, d)| GaussianRational::new(rational(a, b), rational(c, d)))
}

fn word(letters: u16, max_degree: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 0..=max_degree).prop_map(Word::from_letters)
}

fn poly(letters: u16, max_degree: usize, max_terms: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((word(letters, max_degree), scalar()), 0..=max_terms)
        .prop_map(NCPoly::from_terms)
}

fn normal(name: &'static str, max_degree: usize) -> impl Strategy<Value = NCPoly> {
    let sys = builtin_system(name).unwrap();
    poly(sys.alphabet().len() as u16, max_degree, 4).prop_map(move |p| sys.normalize(&p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
        }
    }

    #[test]
    fn ring_axioms(p in poly(3, 3, 4), q in poly(3, 3, 4), r in poly(3, 3, 4)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &NCPoly::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn deg_lex_respects_concatenation(
        u in word(3, 4), v in word(3, 4), x in word(3, 3), y in word(3, 3)
    ) {
        prop_assert_eq!(u.cmp(&v), x.concat(&u).concat(&y).cmp(&x.concat(&v).concat(&y)));
    }

    #[test]
    fn substitution_is_an_algebra_map(p in poly(3, 3, 3), q in poly(3, 3, 3), c in scalar()) {
        let a = builtin("sl2").unwrap().alphabet.clone();
        let images: Vec<Option<NCPoly>> = ["E + 2*H", "F*E - 1", "i*H^2"]
            .iter()
            .map(|t| Some(parse_expr(t, &a).unwrap()))
            .collect();
        let s = |x: &NCPoly| x.substitute(&images, &a).unwrap();
        prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        prop_assert_eq!(s(&(&p + &q.scale(&c))), &s(&p) + &s(&q).scale(&c));
    }

    #[test]
    fn normalization_is_linear_and_coherent(
        name in prop::sample::select(&["sl2", "so3", "acsa", "sl2_z2", "acsa_z2"][..]),
        seed in any::<u64>(),
    ) {
        let sys = builtin_system(name).unwrap();
        let mut rng = ncverify::sample::rng(seed);
        let k = sys.alphabet().len() as u16;
        let p = ncverify::sample::poly(&mut rng, k, 4, 4);
        let q = ncverify::sample::poly(&mut rng, k, 4, 4);
        let c = ncverify::sample::coefficient(&mut rng);
        let n = |x: &NCPoly| sys.normalize(x).unwrap();
        prop_assert_eq!(n(&n(&p)), n(&p));
        prop_assert_eq!(n(&(&p + &q.scale(&c))), &n(&p) + &n(&q).scale(&c));
        prop_assert_eq!(n(&(&p * &q)), n(&(&n(&p) * &n(&q))));
        for (w, _) in n(&p).terms() {
            prop_assert!(sys.is_irreducible(w));
        }
    }

    #[test]
    fn print_then_parse_round_trips(
        name in prop::sample::select(&BUILTIN_NAMES[..]),
        seed in any::<u64>(),
    ) {
        let a = &builtin(name).unwrap().alphabet;
        let mut rng = ncverify::sample::rng(seed);
        let p = ncverify::sample::poly(&mut rng, a.len() as u16, 4, 5);
        let text = print_expr(&p, a);
        prop_assert_eq!(parse_expr(&text, a).unwrap(), p, "{}", text);
    }

    #[test]
    fn rho_is_an_algebra_map(p in normal("sl2", 3), q in normal("sl2", 3)) {
        let sys = builtin_system("sl2").unwrap();
        let rho = Involution::RhoSl2;
        let pq = sys.normalize(&(&p * &q)).unwrap();
        let lhs = rho.apply(&pq).unwrap();
        let rhs = sys.normalize(&(&rho.apply(&p).unwrap() * &rho.apply(&q).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn varrho_is_an_algebra_map(p in normal("acsa", 3), q in normal("acsa", 3)) {
        let sys = builtin_system("acsa").unwrap();
        let v = Involution::VarrhoAcsa;
        let pq = sys.normalize(&(&p * &q)).unwrap();
        let lhs = v.apply(&pq).unwrap();
        let rhs = sys.normalize(&(&v.apply(&p).unwrap() * &v.apply(&q).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn verified_homs_respect_normal_forms(
        name in prop::sample::select(&[
            "so3_to_sl2", "acsa_to_sl2z2", "acsa_z2_to_sl2_z2", "sl2_z2_to_acsa_z2",
        ][..]),
        seed in any::<u64>(),
    ) {
        let h = builtin_hom(name).unwrap();
        prop_assert!(verify_hom(h).unwrap().passed());
        let src = h.source.system().unwrap();
        let mut rng = ncverify::sample::rng(seed);
        let p = ncverify::sample::poly(&mut rng, src.alphabet().len() as u16, 4, 3);
        prop_assert_eq!(h.apply(&p).unwrap(), h.apply(&src.normalize(&p).unwrap()).unwrap());
    }

    #[test]
    fn eval_is_multiplicative(p in poly(3, 3, 3), q in poly(3, 3, 3), n in 0usize..4) {
        let rep = sl2_irrep(n);
        prop_assert_eq!(
            eval(&(&p * &q), &rep).unwrap(),
            eval(&p, &rep).unwrap().mul(&eval(&q, &rep).unwrap()).unwrap()
        );
    }
}

#[test]
fn composition_is_associative() {
    let a = builtin_hom("sl2_z2_to_acsa_z2").unwrap();
    let b = builtin_hom("acsa_z2_to_sl2_z2").unwrap();
    let left = compose(&compose(a, b).unwrap(), a).unwrap();
    let right = compose(a, &compose(b, a).unwrap()).unwrap();
    assert_eq!(left.images(), right.images());
    assert_eq!(left.images(), a.images());
}
