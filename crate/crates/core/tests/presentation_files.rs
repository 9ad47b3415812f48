use std::path::PathBuf;

use ncverify::algebras::{builtin, BUILTIN_NAMES};
use ncverify::front::presfile::{load, PresentationFile};
use ncverify::homs::{builtin_hom, verify_hom, BUILTIN_HOM_NAMES};

fn file(name: &str) -> PresentationFile {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("presentations")
        .join(format!("{name}.toml"));
    load(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn every_builtin_ships_as_an_identical_file() {
    for name in BUILTIN_NAMES {
        let f = file(name);
        let p = &f.presentation;
        let b = builtin(name).unwrap();
        assert_eq!(p.name, b.name);
        assert_eq!(p.alphabet, b.alphabet, "{name}");
        assert_eq!(p.relations, b.relations, "{name}");
        assert_eq!(p.defined, b.defined, "{name}");
        assert_eq!(p.group, b.group, "{name}");
        assert_eq!(p.system, b.system, "{name}");
    }
}

#[test]
fn homomorphism_blocks_match_the_builtins() {
    let mut seen = Vec::new();
    for name in BUILTIN_NAMES {
        for h in file(name).homomorphisms {
            let b = builtin_hom(&h.name).unwrap();
            assert_eq!(h.source.alphabet, b.source.alphabet, "{}", h.name);
            assert_eq!(h.target_name, b.target_name, "{}", h.name);
            assert_eq!(h.images(), b.images(), "{}", h.name);
            seen.push(h.name.clone());
        }
    }
    seen.sort();
    let mut all: Vec<String> = BUILTIN_HOM_NAMES.iter().map(|s| s.to_string()).collect();
    all.sort();
    assert_eq!(seen, all);
}

#[test]
fn sabotaged_file_fails_at_the_first_so3_relation() {
    let f = file("so3_to_sl2_sign_flipped");
    let r = verify_hom(&f.homomorphisms[0]).unwrap();
    let bad: Vec<_> = r.failures().collect();
    assert_eq!(bad.len(), 3);
    assert_eq!(bad[0].label, "so3-1");
    assert_eq!(bad[0].image.display(&r.target).to_string(), "F - E");
}

#[test]
fn q_deformed_sample_loads_without_a_rewrite_system() {
    let f = file("acsa_q");
    assert!(!f.verifiable);
    assert_eq!(f.presentation.relations.len(), 3);
    assert!(f.presentation.system().is_err());
}
