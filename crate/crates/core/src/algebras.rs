//! Built-in presentations, the two involutions, the `Z/2Z` skew-ring
//! multiplication oracle and normal-word enumeration.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::freealg::{commutator, Alphabet, NCPoly, Word};
use crate::front::parse::parse_expr;
use crate::rewrite::{orient, RewriteSystem};

/// Stable identifiers of the built-in algebras.
pub const BUILTIN_NAMES: [&str; 6] = ["sl2", "so3", "acsa", "sl2_z2", "acsa_z2", "racah"];

/// A defining relation `poly = 0` with a short label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub poly: NCPoly,
}

/// How a `Z/2Z`-extended algebra sits over its base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupExtension {
    pub base: SkewBase,
    /// Index of the group generator; always the last letter of the alphabet.
    pub generator: u16,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub alphabet: Alphabet,
    pub relations: Vec<Relation>,
    /// Generators that are abbreviations, with their definitions over the
    /// remaining generators (`Delta = [A,B]/2` for the Racah algebra).
    pub defined: Vec<(u16, NCPoly)>,
    pub system: Option<Arc<RewriteSystem>>,
    pub group: Option<GroupExtension>,
}

impl Presentation {
    /// Builds a presentation, orienting its relations when `with_system` is set.
    pub fn new(
        name: &str,
        alphabet: Alphabet,
        relations: Vec<Relation>,
        with_system: bool,
    ) -> Result<Self> {
        let system = if with_system {
            let polys: Vec<NCPoly> = relations.iter().map(|r| r.poly.clone()).collect();
            Some(Arc::new(orient(&polys, &alphabet)?))
        } else {
            None
        };
        Ok(Self {
            name: name.to_string(),
            alphabet,
            relations,
            defined: Vec::new(),
            system,
            group: None,
        })
    }

    pub fn system(&self) -> Result<&Arc<RewriteSystem>> {
        self.system
            .as_ref()
            .ok_or_else(|| Error::NoRewriteSystem(self.name.clone()))
    }

    pub fn relation_polys(&self) -> Vec<NCPoly> {
        self.relations.iter().map(|r| r.poly.clone()).collect()
    }

    pub fn is_defined(&self, g: u16) -> bool {
        self.defined.iter().any(|(d, _)| *d == g)
    }

    pub fn parse(&self, text: &str) -> Result<NCPoly> {
        parse_expr(text, &self.alphabet)
    }
}

fn relations(alphabet: &Alphabet, specs: &[(&str, &str)]) -> Vec<Relation> {
    specs
        .iter()
        .map(|(label, text)| Relation {
            label: label.to_string(),
            poly: parse_expr(text, alphabet).expect("built-in relation parses"),
        })
        .collect()
}

const SL2_RELATIONS: [(&str, &str); 3] = [
    ("sl2-1", "H*E - E*H - 2*E"),
    ("sl2-2", "H*F - F*H + 2*F"),
    ("sl2-3", "E*F - F*E - H"),
];

const ACSA_RELATIONS: [(&str, &str); 3] = [
    ("acsa-1", "J_1*J_2 + J_2*J_1 - J_3"),
    ("acsa-2", "J_2*J_3 + J_3*J_2 - J_1"),
    ("acsa-3", "J_3*J_1 + J_1*J_3 - J_2"),
];

fn build_sl2() -> Presentation {
    let a = Alphabet::new(["E", "F", "H"]).unwrap();
    Presentation::new("sl2", a.clone(), relations(&a, &SL2_RELATIONS), true).unwrap()
}

fn build_so3() -> Presentation {
    let a = Alphabet::new(["I_1", "I_2", "I_3"]).unwrap();
    let rels = relations(
        &a,
        &[
            ("so3-1", "I_1*I_2 - I_2*I_1 - I_3"),
            ("so3-2", "I_2*I_3 - I_3*I_2 - I_1"),
            ("so3-3", "I_3*I_1 - I_1*I_3 - I_2"),
        ],
    );
    Presentation::new("so3", a, rels, true).unwrap()
}

fn build_acsa() -> Presentation {
    let a = Alphabet::new(["J_1", "J_2", "J_3"]).unwrap();
    Presentation::new("acsa", a.clone(), relations(&a, &ACSA_RELATIONS), true).unwrap()
}

fn build_sl2_z2() -> Presentation {
    let a = Alphabet::new(["E", "F", "H", "rho"]).unwrap();
    let mut rels = relations(&a, &SL2_RELATIONS);
    rels.extend(relations(
        &a,
        &[
            ("sl2_z2-1", "H*rho + rho*H"),
            ("sl2_z2-2", "E*rho - rho*F"),
            ("sl2_z2-3", "rho^2 - 1"),
            // rho*(E*rho - rho*F)*rho modulo rho^2 = 1; needed for confluence
            ("sl2_z2-conj", "rho*E - F*rho"),
        ],
    ));
    let mut p = Presentation::new("sl2_z2", a, rels, true).unwrap();
    p.group = Some(GroupExtension {
        base: SkewBase::Sl2,
        generator: 3,
    });
    p
}

fn build_acsa_z2() -> Presentation {
    let a = Alphabet::new(["J_1", "J_2", "J_3", "vrho"]).unwrap();
    let mut rels = relations(&a, &ACSA_RELATIONS);
    rels.extend(relations(
        &a,
        &[
            ("acsa_z2-1", "vrho*J_1 - J_1*vrho"),
            ("acsa_z2-2", "vrho*J_2 + J_2*vrho"),
            ("acsa_z2-3", "vrho*J_3 + J_3*vrho"),
            ("acsa_z2-4", "vrho^2 - 1"),
        ],
    ));
    let mut p = Presentation::new("acsa_z2", a, rels, true).unwrap();
    p.group = Some(GroupExtension {
        base: SkewBase::Acsa,
        generator: 3,
    });
    p
}

/// The universal Racah algebra: generators `A, B, C, Delta`, the three
/// defining commutator relations, and the central elements `alpha, beta, gamma`.
#[derive(Clone, Debug)]
pub struct RacahData {
    pub alphabet: Alphabet,
    pub a: NCPoly,
    pub b: NCPoly,
    pub c: NCPoly,
    pub delta: NCPoly,
    pub alpha: NCPoly,
    pub beta: NCPoly,
    pub gamma: NCPoly,
}

impl RacahData {
    fn build() -> Self {
        let alphabet = Alphabet::new(["A", "B", "C", "Delta"]).unwrap();
        let p = |s: &str| parse_expr(s, &alphabet).unwrap();
        Self {
            a: p("A"),
            b: p("B"),
            c: p("C"),
            delta: p("Delta"),
            alpha: p("A*Delta - Delta*A + A*C - B*A"),
            beta: p("B*Delta - Delta*B + B*A - C*B"),
            gamma: p("C*Delta - Delta*C + C*B - A*C"),
            alphabet,
        }
    }

    /// `Delta` expressed through `A` and `B`.
    pub fn delta_definition(&self) -> NCPoly {
        commutator(&self.a, &self.b).scale(&GaussianRational::frac(1, 2))
    }

    pub fn central_elements(&self) -> [(&'static str, &NCPoly); 3] {
        [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
        ]
    }
}

pub static RACAH: LazyLock<RacahData> = LazyLock::new(RacahData::build);

fn build_racah() -> Presentation {
    let r = &*RACAH;
    let two_delta = r.delta.scale(&GaussianRational::from(2));
    let mut rels = vec![
        Relation {
            label: "racah-1 [A,B]".into(),
            poly: &commutator(&r.a, &r.b) - &two_delta,
        },
        Relation {
            label: "racah-1 [B,C]".into(),
            poly: &commutator(&r.b, &r.c) - &two_delta,
        },
        Relation {
            label: "racah-1 [C,A]".into(),
            poly: &commutator(&r.c, &r.a) - &two_delta,
        },
    ];
    let gens = [("A", &r.a), ("B", &r.b), ("C", &r.c), ("Delta", &r.delta)];
    for (name, z) in r.central_elements() {
        for (g, x) in gens {
            rels.push(Relation {
                label: format!("{name} central [{name},{g}]"),
                poly: commutator(z, x),
            });
        }
    }
    let mut p = Presentation::new("racah", r.alphabet.clone(), rels, false).unwrap();
    p.defined = vec![(3, r.delta_definition())];
    p
}

static BUILTINS: LazyLock<BTreeMap<&'static str, Presentation>> = LazyLock::new(|| {
    BTreeMap::from([
        ("sl2", build_sl2()),
        ("so3", build_so3()),
        ("acsa", build_acsa()),
        ("sl2_z2", build_sl2_z2()),
        ("acsa_z2", build_acsa_z2()),
        ("racah", build_racah()),
    ])
});

pub fn builtin(name: &str) -> Result<&'static Presentation> {
    BUILTINS
        .get(name)
        .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))
}

/// Rewrite system of a built-in that has one.
pub fn builtin_system(name: &str) -> Result<&'static Arc<RewriteSystem>> {
    builtin(name)?.system()
}

/// The base algebras that carry a `Z/2Z` action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkewBase {
    Sl2,
    Acsa,
}

impl SkewBase {
    pub const ALL: [SkewBase; 2] = [SkewBase::Sl2, SkewBase::Acsa];

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "sl2" => Ok(SkewBase::Sl2),
            "acsa" => Ok(SkewBase::Acsa),
            _ => Err(Error::UnknownAlgebra(name.to_string())),
        }
    }

    pub fn base(self) -> &'static Presentation {
        match self {
            SkewBase::Sl2 => builtin("sl2").unwrap(),
            SkewBase::Acsa => builtin("acsa").unwrap(),
        }
    }

    pub fn extended(self) -> &'static Presentation {
        match self {
            SkewBase::Sl2 => builtin("sl2_z2").unwrap(),
            SkewBase::Acsa => builtin("acsa_z2").unwrap(),
        }
    }

    pub fn involution(self) -> Involution {
        match self {
            SkewBase::Sl2 => Involution::RhoSl2,
            SkewBase::Acsa => Involution::VarrhoAcsa,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SkewBase::Sl2 => "sl2",
            SkewBase::Acsa => "acsa",
        }
    }
}

/// The involutions generating the two `Z/2Z` actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    /// `E -> F, F -> E, H -> -H` on `U(sl2)`.
    RhoSl2,
    /// `J_1 -> J_1, J_2 -> -J_2, J_3 -> -J_3` on the anticommutator spin algebra.
    VarrhoAcsa,
}

impl Involution {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "rho_sl2" => Ok(Involution::RhoSl2),
            "varrho_acsa" => Ok(Involution::VarrhoAcsa),
            _ => Err(Error::UnknownHomomorphism(name.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Involution::RhoSl2 => "rho_sl2",
            Involution::VarrhoAcsa => "varrho_acsa",
        }
    }

    pub fn base(self) -> SkewBase {
        match self {
            Involution::RhoSl2 => SkewBase::Sl2,
            Involution::VarrhoAcsa => SkewBase::Acsa,
        }
    }

    pub fn images(self) -> Vec<Option<NCPoly>> {
        let a = &self.base().base().alphabet;
        let texts: [&str; 3] = match self {
            Involution::RhoSl2 => ["F", "E", "-H"],
            Involution::VarrhoAcsa => ["J_1", "-J_2", "-J_3"],
        };
        texts
            .iter()
            .map(|t| Some(parse_expr(t, a).unwrap()))
            .collect()
    }

    /// Applies the involution and normalizes in the base algebra.
    pub fn apply(self, p: &NCPoly) -> Result<NCPoly> {
        let base = self.base().base();
        check_base_part(p, &base.alphabet, &self.base().extended().alphabet)?;
        base.system()?
            .normalize(&p.substitute(&self.images(), &base.alphabet)?)
    }
}

pub fn apply_automorphism(name: &str, p: &NCPoly) -> Result<NCPoly> {
    Involution::parse(name)?.apply(p)
}

fn check_base_part(p: &NCPoly, base: &Alphabet, extended: &Alphabet) -> Result<()> {
    match p.max_generator() {
        Some(g) if usize::from(g) >= base.len() => Err(Error::GroupGeneratorPresent(
            p.display(extended).to_string(),
        )),
        _ => Ok(()),
    }
}

/// `even + odd * g` in a skew group ring over `Z/2Z`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SkewPair {
    pub even: NCPoly,
    pub odd: NCPoly,
}

impl SkewPair {
    pub fn new(even: NCPoly, odd: NCPoly) -> Self {
        Self { even, odd }
    }

    /// The element `even + odd * g` of the extended free algebra.
    pub fn to_poly(&self, group_generator: u16) -> NCPoly {
        let g = NCPoly::generator(group_generator);
        &self.even + &(&self.odd * &g)
    }
}

/// Skew-ring product `(a1 + b1 g)(a2 + b2 g)` computed from the multiplication
/// rule `(a g)(b g') = (a * g(b)) g g'`:
/// even part `a1 a2 + b1 g(b2)`, odd part `a1 b2 + b1 g(a2)`.
pub fn skew_pair_mul(x: &SkewPair, y: &SkewPair, base: SkewBase) -> Result<SkewPair> {
    skew_pair_mul_with(x, y, base, &|p| base.involution().apply(p))
}

/// [`skew_pair_mul`] with an arbitrary action in place of the involution.
pub fn skew_pair_mul_with(
    x: &SkewPair,
    y: &SkewPair,
    base: SkewBase,
    action: &dyn Fn(&NCPoly) -> Result<NCPoly>,
) -> Result<SkewPair> {
    let pres = base.base();
    let ext = &base.extended().alphabet;
    for part in [&x.even, &x.odd, &y.even, &y.odd] {
        check_base_part(part, &pres.alphabet, ext)?;
    }
    let sys = pres.system()?;
    let even = &(&x.even * &y.even) + &(&x.odd * &action(&y.odd)?);
    let odd = &(&x.even * &y.odd) + &(&x.odd * &action(&y.even)?);
    Ok(SkewPair {
        even: sys.normalize(&even)?,
        odd: sys.normalize(&odd)?,
    })
}

/// Splits `p = even + odd * g` where `g` is the extension's group generator.
/// Fails unless `g` occurs at most once per word and only as the last letter.
pub fn pair_of_normal_form(p: &NCPoly, ext: &Presentation) -> Result<SkewPair> {
    let g = ext
        .group
        .ok_or_else(|| Error::UnknownAlgebra(format!("{} has no group generator", ext.name)))?
        .generator;
    let mut pair = SkewPair::default();
    for (w, c) in p.terms() {
        let letters = w.letters();
        match letters.iter().position(|&x| x == g) {
            None => pair.even.add_term(w.clone(), c.clone()),
            Some(k) if k + 1 == letters.len() => pair
                .odd
                .add_term(Word::from_letters(letters[..k].to_vec()), c.clone()),
            Some(_) => {
                return Err(Error::NotSkewNormalForm(
                    p.display(&ext.alphabet).to_string(),
                ))
            }
        }
    }
    Ok(pair)
}

/// Number of words of exactly `degree` letters containing no left-hand side,
/// by exhaustive enumeration of all `k^degree` words.
pub fn pbw_count(system: &RewriteSystem, degree: usize) -> u64 {
    let k = system.alphabet().len() as u16;
    if degree == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let mut word = vec![0u16; degree];
    let mut count = 0;
    loop {
        if system.find_match(&word).is_none() {
            count += 1;
        }
        // odometer
        let mut pos = degree;
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            word[pos] += 1;
            if word[pos] < k {
                break;
            }
            word[pos] = 0;
        }
    }
}

/// Irreducible words with exactly `base_degree` letters other than `letter`,
/// bucketed by how many times `letter` occurs (`0..=max_letter_count`).
///
/// Irreducible words are closed under taking subwords, so the search only
/// extends irreducible prefixes.
pub fn pbw_count_by_letter(
    system: &RewriteSystem,
    letter: u16,
    base_degree: usize,
    max_letter_count: usize,
) -> Vec<u64> {
    struct Walk<'a> {
        system: &'a RewriteSystem,
        letter: u16,
        base_degree: usize,
        max: usize,
        word: Vec<u16>,
        counts: Vec<u64>,
    }

    impl Walk<'_> {
        fn go(&mut self, base: usize, marked: usize) {
            if base == self.base_degree {
                self.counts[marked] += 1;
            }
            for g in 0..self.system.alphabet().len() as u16 {
                let (nb, nm) = if g == self.letter {
                    (base, marked + 1)
                } else {
                    (base + 1, marked)
                };
                if nb > self.base_degree || nm > self.max {
                    continue;
                }
                self.word.push(g);
                if self.system.find_match(&self.word).is_none() {
                    self.go(nb, nm);
                }
                self.word.pop();
            }
        }
    }

    let mut walk = Walk {
        system,
        letter,
        base_degree,
        max: max_letter_count,
        word: Vec::new(),
        counts: vec![0; max_letter_count + 1],
    };
    walk.go(0, 0);
    walk.counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(name: &str, text: &str) -> NCPoly {
        builtin(name).unwrap().parse(text).unwrap()
    }

    #[test]
    fn relation_counts() {
        assert_eq!(builtin("sl2").unwrap().relations.len(), 3);
        assert_eq!(builtin("acsa_z2").unwrap().relations.len(), 7);
        assert!(builtin("racah").unwrap().system.is_none());
        assert!(matches!(builtin("gl3"), Err(Error::UnknownAlgebra(_))));
    }

    #[test]
    fn sl2_z2_rules_as_expected() {
        let sys = builtin_system("sl2_z2").unwrap();
        let got: Vec<(String, String)> = sys
            .rule_views()
            .into_iter()
            .map(|r| (r.lhs, r.rhs))
            .collect();
        let mut got = got;
        got.sort();
        let mut want: Vec<(String, String)> = [
            ("H*E", "E*H + 2*E"),
            ("H*F", "F*H - 2*F"),
            ("F*E", "E*F - H"),
            ("rho*E", "F*rho"),
            ("rho*F", "E*rho"),
            ("rho*H", "-H*rho"),
            ("rho^2", "1"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn conjugated_relation_lies_in_the_ideal() {
        // rho*E - F*rho = rho*(E*rho - rho*F)*rho - rho*E*(rho^2 - 1) + (rho^2 - 1)*F*rho
        let p = |t: &str| poly("sl2_z2", t);
        let r = p("E*rho - rho*F");
        let s = p("rho^2 - 1");
        let combo = &(&(&(&p("rho") * &r) * &p("rho")) - &(&p("rho*E") * &s)) + &(&s * &p("F*rho"));
        assert_eq!(combo, p("rho*E - F*rho"));
    }

    #[test]
    fn normalize_conjugation() {
        let sys = builtin_system("sl2_z2").unwrap();
        assert_eq!(
            sys.normalize(&poly("sl2_z2", "rho*E*rho")).unwrap(),
            poly("sl2_z2", "F")
        );
    }

    #[test]
    fn involution_examples() {
        assert_eq!(
            apply_automorphism("rho_sl2", &poly("sl2", "E")).unwrap(),
            poly("sl2", "F")
        );
        let x = poly("acsa", "J_2*J_3");
        assert_eq!(apply_automorphism("varrho_acsa", &x).unwrap(), x);
        let bad = poly("sl2_z2", "rho");
        assert!(matches!(
            Involution::RhoSl2.apply(&bad),
            Err(Error::GroupGeneratorPresent(_))
        ));
    }

    #[test]
    fn skew_pair_examples() {
        let one = NCPoly::one();
        let zero = NCPoly::zero();
        let rho = SkewPair::new(zero.clone(), one.clone());
        let r = skew_pair_mul(&rho, &rho, SkewBase::Sl2).unwrap();
        assert_eq!(r, SkewPair::new(one.clone(), zero.clone()));

        let e = poly("sl2", "E");
        let e_rho = SkewPair::new(zero.clone(), e.clone());
        assert_eq!(
            skew_pair_mul(&e_rho, &rho, SkewBase::Sl2).unwrap(),
            SkewPair::new(e.clone(), zero.clone())
        );
        let e_even = SkewPair::new(e, zero.clone());
        assert_eq!(
            skew_pair_mul(&rho, &e_even, SkewBase::Sl2).unwrap(),
            SkewPair::new(zero, poly("sl2", "F"))
        );
    }

    #[test]
    fn splitting_normal_forms() {
        let ext = builtin("sl2_z2").unwrap();
        let p = poly("sl2_z2", "E*F + H*rho");
        assert_eq!(
            pair_of_normal_form(&p, ext).unwrap(),
            SkewPair::new(poly("sl2", "E*F"), poly("sl2", "H"))
        );
        assert_eq!(
            pair_of_normal_form(&NCPoly::one(), ext).unwrap(),
            SkewPair::new(NCPoly::one(), NCPoly::zero())
        );
        assert_eq!(
            pair_of_normal_form(&poly("sl2_z2", "rho"), ext).unwrap(),
            SkewPair::new(NCPoly::zero(), NCPoly::one())
        );
        assert!(pair_of_normal_form(&poly("sl2_z2", "rho*E"), ext).is_err());
        assert!(pair_of_normal_form(&poly("sl2_z2", "E*rho^2"), ext).is_err());
    }

    #[test]
    fn pbw_counts_small() {
        assert_eq!(pbw_count(builtin_system("sl2").unwrap(), 2), 6);
        assert_eq!(pbw_count(builtin_system("sl2_z2").unwrap(), 1), 4);
        assert_eq!(pbw_count(builtin_system("sl2").unwrap(), 0), 1);
        for d in 0..=5 {
            assert_eq!(
                pbw_count(builtin_system("acsa").unwrap(), d),
                ((d + 1) * (d + 2) / 2) as u64
            );
        }
        let split = pbw_count_by_letter(builtin_system("sl2_z2").unwrap(), 3, 3, 2);
        assert_eq!(split, vec![10, 10, 0]);
    }

    #[test]
    fn racah_central_elements_match_definitions() {
        let r = &*RACAH;
        let alpha = &(&commutator(&r.a, &r.delta) + &(&r.a * &r.c)) - &(&r.b * &r.a);
        let beta = &(&commutator(&r.b, &r.delta) + &(&r.b * &r.a)) - &(&r.c * &r.b);
        let gamma = &(&commutator(&r.c, &r.delta) + &(&r.c * &r.b)) - &(&r.a * &r.c);
        assert_eq!(r.alpha, alpha);
        assert_eq!(r.beta, beta);
        assert_eq!(r.gamma, gamma);
        assert_eq!(builtin("racah").unwrap().relations.len(), 15);
    }
}
