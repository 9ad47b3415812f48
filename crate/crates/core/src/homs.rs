//! Algebra homomorphisms given by generator images.
//!
//! A table of images defines a homomorphism out of a presented algebra exactly
//! when every defining relation maps to zero in the target. The target is
//! always a rewrite system, and zero means "normalizes to the empty polynomial".

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use crate::algebras::{builtin, Presentation, RACAH};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::freealg::{commutator, Alphabet, NCPoly};
use crate::report::{CheckEntry, SuiteReport};
use crate::rewrite::RewriteSystem;

#[derive(Clone, Debug)]
pub struct Homomorphism {
    pub name: String,
    pub source: Arc<Presentation>,
    pub target_name: String,
    pub target: Arc<RewriteSystem>,
    /// One image per source generator, in alphabet order. Images of defined
    /// generators are derived from their definitions.
    images: Vec<NCPoly>,
}

impl Homomorphism {
    /// `images` must name every non-defined source generator exactly once.
    pub fn new(
        name: &str,
        source: Arc<Presentation>,
        target_name: &str,
        target: Arc<RewriteSystem>,
        images: Vec<(String, NCPoly)>,
    ) -> Result<Self> {
        let alphabet = &source.alphabet;
        let mut table: Vec<Option<NCPoly>> = vec![None; alphabet.len()];
        for (gen, img) in images {
            let g = alphabet.index_of(&gen).ok_or_else(|| {
                Error::PresentationFile(format!("`{gen}` is not a generator of {}", source.name))
            })?;
            if source.is_defined(g) {
                return Err(Error::PresentationFile(format!(
                    "`{gen}` is a defined generator and takes no image"
                )));
            }
            if table[usize::from(g)].is_some() {
                return Err(Error::PresentationFile(format!("`{gen}` has two images")));
            }
            if let Some(top) = img.max_generator() {
                if usize::from(top) >= target.alphabet().len() {
                    return Err(Error::PresentationFile(format!(
                        "image of `{gen}` uses a generator outside the target"
                    )));
                }
            }
            table[usize::from(g)] = Some(img);
        }
        for (g, slot) in table.iter().enumerate() {
            if slot.is_none() && !source.is_defined(g as u16) {
                return Err(Error::MissingImage(alphabet.name(g as u16).to_string()));
            }
        }
        for (g, def) in &source.defined {
            let img = def.substitute(&table, alphabet)?;
            table[usize::from(*g)] = Some(img);
        }
        Ok(Self {
            name: name.to_string(),
            source,
            target_name: target_name.to_string(),
            target,
            images: table.into_iter().map(|x| x.expect("filled")).collect(),
        })
    }

    /// Parses image texts over the target alphabet.
    pub fn from_texts(
        name: &str,
        source: Arc<Presentation>,
        target_name: &str,
        target: Arc<RewriteSystem>,
        images: &[(&str, &str)],
    ) -> Result<Self> {
        let parsed = images
            .iter()
            .map(|(g, text)| {
                crate::front::parse_expr(text, target.alphabet()).map(|p| (g.to_string(), p))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, source, target_name, target, parsed)
    }

    /// Identity on a presentation that has a rewrite system.
    pub fn identity(presentation: &Presentation) -> Result<Self> {
        let target = presentation.system()?.clone();
        let images = presentation
            .alphabet
            .names()
            .iter()
            .enumerate()
            .filter(|(g, _)| !presentation.is_defined(*g as u16))
            .map(|(g, n)| (n.clone(), NCPoly::generator(g as u16)))
            .collect();
        Self::new(
            &format!("id_{}", presentation.name),
            Arc::new(presentation.clone()),
            &presentation.name,
            target,
            images,
        )
    }

    pub fn source_alphabet(&self) -> &Alphabet {
        &self.source.alphabet
    }

    pub fn target_alphabet(&self) -> &Alphabet {
        self.target.alphabet()
    }

    pub fn images(&self) -> &[NCPoly] {
        &self.images
    }

    /// Image of the named source generator.
    pub fn image(&self, gen: &str) -> Option<&NCPoly> {
        self.source_alphabet()
            .index_of(gen)
            .map(|g| &self.images[usize::from(g)])
    }

    fn table(&self) -> Vec<Option<NCPoly>> {
        self.images.iter().cloned().map(Some).collect()
    }

    /// Image of an arbitrary source element, normalized in the target.
    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly> {
        self.target
            .normalize(&p.substitute(&self.table(), self.source_alphabet())?)
    }

    /// Replaces one image, keeping derived images consistent. Used to build
    /// sabotaged fixtures.
    pub fn with_image(&self, gen: &str, image: NCPoly) -> Result<Self> {
        let images = self
            .source_alphabet()
            .names()
            .iter()
            .enumerate()
            .filter(|(g, _)| !self.source.is_defined(*g as u16))
            .map(|(g, n)| {
                let img = if n == gen {
                    image.clone()
                } else {
                    self.images[g].clone()
                };
                (n.clone(), img)
            })
            .collect();
        Self::new(
            &format!("{}[{gen} perturbed]", self.name),
            self.source.clone(),
            &self.target_name,
            self.target.clone(),
            images,
        )
    }

    pub fn with_image_text(&self, gen: &str, text: &str) -> Result<Self> {
        let p = crate::front::parse_expr(text, self.target_alphabet())?;
        self.with_image(gen, p)
    }
}

pub const BUILTIN_HOM_NAMES: [&str; 9] = [
    "racah_to_sl2",
    "racah_to_so3",
    "so3_to_sl2",
    "acsa_to_sl2z2",
    "racah_to_acsa",
    "acsa_z2_to_sl2_z2",
    "sl2_z2_to_acsa_z2",
    "incl_sl2_in_sl2z2",
    "incl_acsa_in_acsaz2",
];

/// (source, target, generator images)
type HomSpec = (
    &'static str,
    &'static str,
    &'static [(&'static str, &'static str)],
);

fn hom_spec(name: &str) -> Option<HomSpec> {
    Some(match name {
        "racah_to_sl2" => (
            "racah",
            "sl2",
            &[
                ("A", "(E+F-2)*(E+F+2)/16"),
                ("B", "(H-2)*(H+2)/16"),
                ("C", "(i*E-i*F-2)*(i*E-i*F+2)/16"),
            ],
        ),
        "racah_to_so3" => (
            "racah",
            "so3",
            &[
                ("A", "-(I_1-i)*(I_1+i)/4"),
                ("B", "-(I_2-i)*(I_2+i)/4"),
                ("C", "-(I_3-i)*(I_3+i)/4"),
            ],
        ),
        "so3_to_sl2" => (
            "so3",
            "sl2",
            &[("I_1", "i*(E+F)/2"), ("I_2", "i*H/2"), ("I_3", "(E-F)/2")],
        ),
        "acsa_to_sl2z2" => (
            "acsa",
            "sl2_z2",
            &[
                ("J_1", "(E+F)*rho/2"),
                ("J_2", "H/2"),
                ("J_3", "(E-F)*rho/2"),
            ],
        ),
        "racah_to_acsa" => (
            "racah",
            "acsa",
            &[
                ("A", "(J_1-1)*(J_1+1)/4"),
                ("B", "(J_2-1)*(J_2+1)/4"),
                ("C", "(J_3-1)*(J_3+1)/4"),
            ],
        ),
        "acsa_z2_to_sl2_z2" => (
            "acsa_z2",
            "sl2_z2",
            &[
                ("J_1", "(E+F)*rho/2"),
                ("J_2", "H/2"),
                ("J_3", "(E-F)*rho/2"),
                ("vrho", "rho"),
            ],
        ),
        "sl2_z2_to_acsa_z2" => (
            "sl2_z2",
            "acsa_z2",
            &[
                ("E", "(J_1+J_3)*vrho"),
                ("F", "(J_1-J_3)*vrho"),
                ("H", "2*J_2"),
                ("rho", "vrho"),
            ],
        ),
        "incl_sl2_in_sl2z2" => ("sl2", "sl2_z2", &[("E", "E"), ("F", "F"), ("H", "H")]),
        "incl_acsa_in_acsaz2" => (
            "acsa",
            "acsa_z2",
            &[("J_1", "J_1"), ("J_2", "J_2"), ("J_3", "J_3")],
        ),
        _ => return None,
    })
}

static BUILTIN_HOMS: LazyLock<BTreeMap<&'static str, Homomorphism>> = LazyLock::new(|| {
    BUILTIN_HOM_NAMES
        .iter()
        .map(|&name| {
            let (src, tgt, images) = hom_spec(name).expect("listed");
            let source = Arc::new(builtin(src).expect("built-in").clone());
            let target = builtin(tgt)
                .and_then(Presentation::system)
                .expect("target system")
                .clone();
            let h = Homomorphism::from_texts(name, source, tgt, target, images)
                .expect("built-in homomorphism");
            (name, h)
        })
        .collect()
});

pub fn builtin_hom(name: &str) -> Result<&'static Homomorphism> {
    BUILTIN_HOMS
        .get(name)
        .ok_or_else(|| Error::UnknownHomomorphism(name.to_string()))
}

/// Per-relation outcome of [`verify_hom`] or [`verify_racah_hom`].
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub label: String,
    /// Normal form of the relation's image; zero iff the check passes.
    pub image: NCPoly,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.image.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub subject: String,
    pub target: Alphabet,
    pub checks: Vec<RelationCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn entries(&self) -> Vec<CheckEntry> {
        self.checks
            .iter()
            .map(|c| {
                CheckEntry::new(format!("{}: {}", self.subject, c.label), c.passed())
                    .with_residual(c.image.display(&self.target).to_string())
            })
            .collect()
    }

    pub fn to_suite(&self, id: &str, title: &str) -> SuiteReport {
        let mut s = SuiteReport::new(id, title);
        s.extend(self.entries());
        s
    }
}

/// Maps every defining relation of the source and normalizes in the target.
pub fn verify_hom(h: &Homomorphism) -> Result<VerificationReport> {
    let table = h.table();
    let checks = h
        .source
        .relations
        .iter()
        .map(|r| {
            let img = r
                .poly
                .substitute(&table, h.source_alphabet())
                .and_then(|p| h.target.normalize(&p))
                .map_err(|e| match e {
                    Error::MissingImage(g) => Error::MissingImage(format!("{g} (in {})", r.label)),
                    other => other,
                })?;
            Ok(RelationCheck {
                label: r.label.clone(),
                image: img,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        subject: h.name.clone(),
        target: h.target_alphabet().clone(),
        checks,
    })
}

fn racah_images(h: &Homomorphism) -> Result<(NCPoly, NCPoly, NCPoly, NCPoly)> {
    let expected = &RACAH.alphabet;
    if h.source_alphabet() != expected {
        return Err(Error::AlphabetMismatch {
            expected: expected.to_string(),
            found: h.source_alphabet().to_string(),
        });
    }
    let a = h.images[0].clone();
    let b = h.images[1].clone();
    let c = h.images[2].clone();
    let delta = commutator(&a, &b).scale(&GaussianRational::frac(1, 2));
    Ok((a, b, c, delta))
}

/// The defining checks for a map out of the universal Racah algebra:
/// with `Delta' = [A',B']/2`, both `[B',C'] - 2 Delta'` and `[C',A'] - 2 Delta'`
/// vanish, and so do the images of `alpha`, `beta`, `gamma`.
pub fn verify_racah_hom(h: &Homomorphism) -> Result<VerificationReport> {
    let (a, b, c, delta) = racah_images(h)?;
    let two_delta = delta.scale(&GaussianRational::from(2));
    let sys = &h.target;
    let mut checks = vec![
        RelationCheck {
            label: "[B,C] = 2 Delta".into(),
            image: sys.normalize(&(&commutator(&b, &c) - &two_delta))?,
        },
        RelationCheck {
            label: "[C,A] = 2 Delta".into(),
            image: sys.normalize(&(&commutator(&c, &a) - &two_delta))?,
        },
    ];
    let table = vec![Some(a), Some(b), Some(c), Some(delta)];
    for (name, z) in RACAH.central_elements() {
        checks.push(RelationCheck {
            label: format!("{name} -> 0"),
            image: sys.normalize(&z.substitute(&table, &RACAH.alphabet)?)?,
        });
    }
    Ok(VerificationReport {
        subject: h.name.clone(),
        target: h.target_alphabet().clone(),
        checks,
    })
}

/// Normal forms of `[A',B'] - 2Delta'`, `[B',C'] - 2Delta'`, `[C',A'] - 2Delta'`.
pub fn racah_commutator_chain(h: &Homomorphism) -> Result<[NCPoly; 3]> {
    let (a, b, c, delta) = racah_images(h)?;
    let two_delta = delta.scale(&GaussianRational::from(2));
    let sys = &h.target;
    Ok([
        sys.normalize(&(&commutator(&a, &b) - &two_delta))?,
        sys.normalize(&(&commutator(&b, &c) - &two_delta))?,
        sys.normalize(&(&commutator(&c, &a) - &two_delta))?,
    ])
}

/// `outer ∘ inner`: images of `inner` pushed through `outer` and normalized.
pub fn compose(outer: &Homomorphism, inner: &Homomorphism) -> Result<Homomorphism> {
    if inner.target_alphabet() != outer.source_alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: outer.source_alphabet().to_string(),
            found: inner.target_alphabet().to_string(),
        });
    }
    let images = inner
        .images
        .iter()
        .map(|img| outer.apply(img))
        .collect::<Result<Vec<_>>>()?;
    Ok(Homomorphism {
        name: format!("{} . {}", outer.name, inner.name),
        source: inner.source.clone(),
        target_name: outer.target_name.clone(),
        target: outer.target.clone(),
        images,
    })
}

/// Composes a path given in the order the maps are applied.
pub fn compose_path(path: &[&Homomorphism]) -> Result<Homomorphism> {
    let (first, rest) = path
        .split_first()
        .ok_or_else(|| Error::UnknownHomomorphism("empty path".into()))?;
    let mut acc = (*first).clone();
    for h in rest {
        acc = compose(h, &acc)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct GeneratorCheck {
    pub generator: String,
    pub left: NCPoly,
    pub right: NCPoly,
}

impl GeneratorCheck {
    pub fn residual(&self) -> NCPoly {
        &self.right - &self.left
    }

    pub fn passed(&self) -> bool {
        self.left == self.right
    }
}

/// Generator-wise comparison of two maps (or of a round trip with the identity).
#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub subject: String,
    pub target: Alphabet,
    pub checks: Vec<GeneratorCheck>,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(GeneratorCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &GeneratorCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn entries(&self) -> Vec<CheckEntry> {
        self.checks
            .iter()
            .map(|c| {
                let entry =
                    CheckEntry::new(format!("{}: {}", self.subject, c.generator), c.passed())
                        .with_residual(c.residual().display(&self.target).to_string());
                if c.passed() {
                    entry.with_detail(format!("image {}", c.left.display(&self.target)))
                } else {
                    entry.with_detail(format!(
                        "{} vs {}",
                        c.left.display(&self.target),
                        c.right.display(&self.target)
                    ))
                }
            })
            .collect()
    }
}

fn round_trip(first: &Homomorphism, second: &Homomorphism) -> Result<ComparisonReport> {
    let trip = compose(second, first)?;
    let checks = first
        .source_alphabet()
        .names()
        .iter()
        .enumerate()
        .filter(|(g, _)| !first.source.is_defined(*g as u16))
        .map(|(g, name)| GeneratorCheck {
            generator: name.clone(),
            left: NCPoly::generator(g as u16),
            right: trip.images[g].clone(),
        })
        .collect();
    Ok(ComparisonReport {
        subject: trip.name,
        target: trip.target.alphabet().clone(),
        checks,
    })
}

/// Checks `h2 ∘ h1 = id` on the generators of `h1`'s source and `h1 ∘ h2 = id`
/// on those of `h2`'s source.
pub fn verify_mutually_inverse(
    h1: &Homomorphism,
    h2: &Homomorphism,
) -> Result<(ComparisonReport, ComparisonReport)> {
    if h1.source_alphabet() != h2.target_alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: h1.source_alphabet().to_string(),
            found: h2.target_alphabet().to_string(),
        });
    }
    Ok((round_trip(h1, h2)?, round_trip(h2, h1)?))
}

/// Compares the composites of two paths (each listed in application order)
/// generator by generator. Residuals are `second - first`.
pub fn verify_diagram(
    first: &[&Homomorphism],
    second: &[&Homomorphism],
) -> Result<ComparisonReport> {
    let top = compose_path(first)?;
    let bottom = compose_path(second)?;
    if top.source_alphabet() != bottom.source_alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: top.source_alphabet().to_string(),
            found: bottom.source_alphabet().to_string(),
        });
    }
    if top.target_alphabet() != bottom.target_alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: top.target_alphabet().to_string(),
            found: bottom.target_alphabet().to_string(),
        });
    }
    let checks = top
        .source_alphabet()
        .names()
        .iter()
        .enumerate()
        .filter(|(g, _)| !top.source.is_defined(*g as u16))
        .map(|(g, name)| GeneratorCheck {
            generator: name.clone(),
            left: top.images[g].clone(),
            right: bottom.images[g].clone(),
        })
        .collect();
    Ok(ComparisonReport {
        subject: format!("[{}] vs [{}]", top.name, bottom.name),
        target: top.target.alphabet().clone(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hom(name: &str) -> &'static Homomorphism {
        builtin_hom(name).unwrap()
    }

    fn tp(h: &Homomorphism, text: &str) -> NCPoly {
        crate::front::parse_expr(text, h.target_alphabet()).unwrap()
    }

    #[test]
    fn image_tables() {
        let h = hom("acsa_to_sl2z2");
        assert_eq!(h.image("J_2").unwrap(), &tp(h, "H/2"));
        let h = hom("so3_to_sl2");
        assert_eq!(h.image("I_3").unwrap(), &tp(h, "(E-F)/2"));
        let h = hom("incl_sl2_in_sl2z2");
        assert_eq!(h.image("E").unwrap(), &tp(h, "E"));
        assert!(matches!(
            builtin_hom("nope"),
            Err(Error::UnknownHomomorphism(_))
        ));
        // Delta is derived, not supplied
        let r = hom("racah_to_sl2");
        assert_eq!(r.images().len(), 4);
    }

    #[test]
    fn every_builtin_hom_verifies() {
        for name in BUILTIN_HOM_NAMES {
            let report = verify_hom(hom(name)).unwrap();
            assert!(
                report.passed(),
                "{name}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn so3_sabotage_residual() {
        let h = hom("so3_to_sl2").with_image_text("I_2", "-i*H/2").unwrap();
        let report = verify_hom(&h).unwrap();
        let fails: Vec<_> = report.failures().collect();
        assert_eq!(fails[0].label, "so3-1");
        assert_eq!(fails[0].image, tp(&h, "F - E"));
    }

    #[test]
    fn racah_examples() {
        for name in ["racah_to_sl2", "racah_to_so3", "racah_to_acsa"] {
            let r = verify_racah_hom(hom(name)).unwrap();
            assert_eq!(r.checks.len(), 5);
            assert!(r.passed(), "{name}");
            assert!(racah_commutator_chain(hom(name))
                .unwrap()
                .iter()
                .all(NCPoly::is_zero));
        }
        let zero = hom("racah_to_sl2")
            .with_image("A", NCPoly::zero())
            .and_then(|h| h.with_image("B", NCPoly::zero()))
            .and_then(|h| h.with_image("C", NCPoly::zero()))
            .unwrap();
        assert!(verify_racah_hom(&zero).unwrap().passed());
        assert!(verify_racah_hom(hom("so3_to_sl2")).is_err());
    }

    #[test]
    fn composition_examples() {
        let c = compose(hom("so3_to_sl2"), hom("racah_to_so3")).unwrap();
        let direct = hom("racah_to_sl2");
        for g in ["A", "B", "C", "Delta"] {
            let want = direct.target.normalize(direct.image(g).unwrap()).unwrap();
            assert_eq!(c.image(g).unwrap(), &want, "{g}");
        }
        let top = compose_path(&[
            hom("racah_to_sl2"),
            hom("incl_sl2_in_sl2z2"),
            hom("sl2_z2_to_acsa_z2"),
        ])
        .unwrap();
        assert_eq!(top.image("B").unwrap(), &tp(&top, "J_2^2/4 - 1/4"));

        let id = Homomorphism::identity(builtin("sl2").unwrap()).unwrap();
        let h = hom("so3_to_sl2");
        let same = compose(&id, h).unwrap();
        for (x, y) in same.images().iter().zip(h.images()) {
            assert_eq!(x, &h.target.normalize(y).unwrap());
        }
        assert!(matches!(compose(h, h), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn inverse_examples() {
        let (a, b) =
            verify_mutually_inverse(hom("acsa_z2_to_sl2_z2"), hom("sl2_z2_to_acsa_z2")).unwrap();
        assert!(a.passed() && b.passed());

        let id = Homomorphism::identity(builtin("acsa").unwrap()).unwrap();
        let (a, b) = verify_mutually_inverse(&id, &id).unwrap();
        assert!(a.passed() && b.passed());

        let bad = hom("sl2_z2_to_acsa_z2")
            .with_image_text("H", "J_2")
            .unwrap();
        let (fwd, back) = verify_mutually_inverse(hom("acsa_z2_to_sl2_z2"), &bad).unwrap();
        // J_2 -> H/2 -> J_2/2
        assert!(!fwd.passed());
        let h_check = back.checks.iter().find(|c| c.generator == "H").unwrap();
        assert_eq!(h_check.right, tp(hom("acsa_z2_to_sl2_z2"), "H/2"));
        assert!(!h_check.passed());
    }

    #[test]
    fn diagram_examples() {
        let top = [
            hom("racah_to_sl2"),
            hom("incl_sl2_in_sl2z2"),
            hom("sl2_z2_to_acsa_z2"),
        ];
        let bottom = [hom("racah_to_acsa"), hom("incl_acsa_in_acsaz2")];
        let r = verify_diagram(&top, &bottom).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks.len(), 3);
        for (c, j) in r.checks.iter().zip(["J_1", "J_2", "J_3"]) {
            let want = crate::front::parse_expr(&format!("({j}^2 - 1)/4"), &r.target).unwrap();
            assert_eq!(c.left, want);
        }
        assert!(verify_diagram(&top, &top).unwrap().passed());

        let bad_c = hom("racah_to_acsa")
            .with_image_text("C", "(J_3-1)*(J_3-1)/4")
            .unwrap();
        let r = verify_diagram(&top, &[&bad_c, hom("incl_acsa_in_acsaz2")]).unwrap();
        let fails: Vec<_> = r.failures().collect();
        assert_eq!(fails.len(), 1);
        assert_eq!(fails[0].generator, "C");
        assert_eq!(
            fails[0].residual(),
            crate::front::parse_expr("-(J_3 - 1)/2", &r.target).unwrap()
        );
    }

    #[test]
    fn construction_errors() {
        let src = Arc::new(builtin("so3").unwrap().clone());
        let tgt = builtin("sl2").unwrap().system().unwrap().clone();
        let e = Homomorphism::from_texts("x", src.clone(), "sl2", tgt.clone(), &[("I_1", "E")]);
        assert_eq!(e.unwrap_err(), Error::MissingImage("I_2".into()));
        let e = Homomorphism::from_texts(
            "x",
            src,
            "sl2",
            tgt,
            &[("I_1", "E"), ("I_2", "F"), ("I_3", "H"), ("I_3", "H")],
        );
        assert!(e.is_err());
    }
}
