//! Presentation files (TOML).
//!
//! ```toml
//! name = "sl2"
//! generators = ["E", "F", "H"]        # order is the precedence
//! relations = [
//!     { label = "sl2-1", expr = "H*E - E*H - 2*E" },
//!     "E*F - F*E - H",                 # unlabeled: gets `<name>-<k>`
//! ]
//!
//! [[homomorphism]]
//! name = "so3_to_sl2"
//! target = "sl2"                       # a built-in with a rewrite system
//! images = { I_1 = "i*(E+F)/2", I_2 = "i*H/2", I_3 = "(E-F)/2" }
//! ```
//!
//! Optional keys:
//! - `verifiable = false`: the relations are parsed but not oriented.
//! - `[[defined]]` with `generator` and `expr`: an abbreviation over the other
//!   generators; it takes no image in homomorphism blocks.
//! - `[[central]]` with `name` and `expr`: adds the relations
//!   `[expr, g] = 0` for every generator `g`, labeled `<name> central [<name>,g]`.
//! - `group = "sl2"` or `group = "acsa"`: the last generator is the `Z/2Z`
//!   generator over that base.

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use crate::algebras::{builtin, GroupExtension, Presentation, Relation, SkewBase};
use crate::error::{Error, Result};
use crate::freealg::{commutator, Alphabet, NCPoly};
use crate::front::parse::parse_expr;
use crate::homs::Homomorphism;
use crate::rewrite::orient;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    name: String,
    generators: Vec<String>,
    #[serde(default)]
    relations: Vec<RawRelation>,
    #[serde(default = "yes")]
    verifiable: bool,
    #[serde(default)]
    defined: Vec<RawDefined>,
    #[serde(default)]
    central: Vec<RawCentral>,
    group: Option<String>,
    #[serde(default)]
    homomorphism: Vec<RawHom>,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawRelation {
    Bare(String),
    Labeled { label: String, expr: String },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDefined {
    generator: String,
    expr: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCentral {
    name: String,
    expr: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHom {
    name: String,
    target: String,
    images: toml::Table,
}

/// A loaded file: the presentation plus its homomorphism blocks.
#[derive(Clone, Debug)]
pub struct PresentationFile {
    pub presentation: Arc<Presentation>,
    pub verifiable: bool,
    pub homomorphisms: Vec<Homomorphism>,
}

fn file_err(msg: impl Into<String>) -> Error {
    Error::PresentationFile(msg.into())
}

fn parse_in(what: &str, text: &str, alphabet: &Alphabet) -> Result<NCPoly> {
    parse_expr(text, alphabet).map_err(|e| file_err(format!("{what}: {e}")))
}

pub fn load(path: impl AsRef<Path>) -> Result<PresentationFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_file(&text)
}

pub fn parse_file(text: &str) -> Result<PresentationFile> {
    let raw: RawFile = toml::from_str(text).map_err(|e| file_err(e.message().to_string()))?;
    let alphabet = Alphabet::new(raw.generators.iter().cloned())?;

    let mut relations = Vec::new();
    for (k, r) in raw.relations.iter().enumerate() {
        let (label, expr) = match r {
            RawRelation::Bare(e) => (format!("{}-{}", raw.name, k + 1), e.as_str()),
            RawRelation::Labeled { label, expr } => (label.clone(), expr.as_str()),
        };
        let poly = parse_in(&format!("relation `{label}`"), expr, &alphabet)?;
        relations.push(Relation { label, poly });
    }
    for c in &raw.central {
        let z = parse_in(&format!("central element `{}`", c.name), &c.expr, &alphabet)?;
        for (g, gname) in alphabet.names().iter().enumerate() {
            relations.push(Relation {
                label: format!("{0} central [{0},{gname}]", c.name),
                poly: commutator(&z, &NCPoly::generator(g as u16)),
            });
        }
    }

    let mut defined = Vec::new();
    for d in &raw.defined {
        let g = alphabet.index_of(&d.generator).ok_or_else(|| {
            file_err(format!("defined generator `{}` is not listed", d.generator))
        })?;
        let def = parse_in(
            &format!("definition of `{}`", d.generator),
            &d.expr,
            &alphabet,
        )?;
        if def.terms().any(|(w, _)| w.contains(&[g])) {
            return Err(file_err(format!(
                "definition of `{}` is recursive",
                d.generator
            )));
        }
        defined.push((g, def));
    }

    if raw.verifiable {
        for r in &relations {
            orient(std::slice::from_ref(&r.poly), &alphabet)
                .map_err(|e| file_err(format!("relation `{}`: {e}", r.label)))?;
        }
    }
    let mut presentation =
        Presentation::new(&raw.name, alphabet.clone(), relations, raw.verifiable)
            .map_err(|e| file_err(e.to_string()))?;
    presentation.defined = defined;

    if let Some(base) = &raw.group {
        let base = SkewBase::parse(base)?;
        let expected = base.extended();
        if expected.alphabet != alphabet {
            return Err(Error::AlphabetMismatch {
                expected: expected.alphabet.to_string(),
                found: alphabet.to_string(),
            });
        }
        presentation.group = Some(GroupExtension {
            base,
            generator: (alphabet.len() - 1) as u16,
        });
    }

    let presentation = Arc::new(presentation);
    let homomorphisms = raw
        .homomorphism
        .iter()
        .map(|h| load_hom(h, &presentation))
        .collect::<Result<Vec<_>>>()?;
    Ok(PresentationFile {
        presentation,
        verifiable: raw.verifiable,
        homomorphisms,
    })
}

fn load_hom(raw: &RawHom, source: &Arc<Presentation>) -> Result<Homomorphism> {
    let target = builtin(&raw.target)?.system()?.clone();
    let mut images = Vec::new();
    for (gen, value) in &raw.images {
        let text = value
            .as_str()
            .ok_or_else(|| file_err(format!("{}: image of `{gen}` must be a string", raw.name)))?;
        let p = parse_in(
            &format!("{}: image of `{gen}`", raw.name),
            text,
            target.alphabet(),
        )?;
        images.push((gen.clone(), p));
    }
    Homomorphism::new(&raw.name, source.clone(), &raw.target, target, images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bare_relations_get_numbered_labels() {
        let f =
            parse_file("name = \"x\"\ngenerators = [\"a\", \"b\"]\nrelations = [\"b*a - a*b\"]\n")
                .unwrap();
        assert_eq!(f.presentation.relations[0].label, "x-1");
        assert!(f.presentation.system.is_some());
    }

    #[test]
    fn unorientable_relation_is_named() {
        let err = parse_file(
            "name = \"x\"\ngenerators = [\"a\"]\nrelations = [{ label = \"bad\", expr = \"1\" }]\n",
        )
        .unwrap_err();
        assert!(err.to_string().contains("relation `bad`"), "{err}");
    }

    #[test]
    fn parse_errors_keep_their_position() {
        let err =
            parse_file("name = \"x\"\ngenerators = [\"a\"]\nrelations = [\"a*b\"]\n").unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains("relation `x-1`") && msg.contains("offset 2"),
            "{msg}"
        );
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(parse_file("name = \"x\"\ngenerators = [\"a\"]\nrelation = []\n").is_err());
    }

    #[test]
    fn non_verifiable_files_have_no_system() {
        let f = parse_file(
            "name = \"x\"\ngenerators = [\"a\"]\nverifiable = false\nrelations = [\"1\"]\n",
        )
        .unwrap();
        assert!(f.presentation.system().is_err());
    }
}
