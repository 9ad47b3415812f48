//! The verification suites. Each suite is one acceptance criterion; the CLI's
//! `verify-all` runs exactly this list and nothing else.
//!
//! All randomized suites use fixed seeds, so reports are reproducible.

use rayon::prelude::*;

use crate::algebras::{
    builtin, builtin_system, pair_of_normal_form, pbw_count, pbw_count_by_letter, skew_pair_mul,
    skew_pair_mul_with, Involution, SkewBase, SkewPair,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::freealg::{NCPoly, Word};
use crate::homs::{
    builtin_hom, compose, compose_path, verify_diagram, verify_hom, verify_mutually_inverse,
    verify_racah_hom,
};
use crate::repmat::{
    eval, induced_rep, sl2_irrep, sl2_z2_rep, verify_racah_rep, verify_relations, verify_rep,
    Representation,
};
use crate::report::{CheckEntry, SuiteReport};
use crate::rewrite::{check_confluence, critical_pairs, RewriteSystem};
use crate::sample;

/// Algebras that ship a rewrite system.
pub const CONFLUENT_BUILTINS: [&str; 5] = ["sl2", "so3", "acsa", "sl2_z2", "acsa_z2"];

/// Randomized product count per base algebra in the skew-ring oracle.
pub const SKEW_SAMPLES: usize = 200;
/// Maximal degree of the random parts fed to the skew-ring oracle.
pub const SKEW_MAX_DEGREE: usize = 4;
/// Random polynomials per algebra in the matrix oracle.
pub const MATRIX_SAMPLES: usize = 100;
/// Maximal degree of the random polynomials in the matrix oracle.
pub const MATRIX_MAX_DEGREE: usize = 5;
/// Highest weights `0..=MATRIX_MAX_WEIGHT` checked by the matrix oracle.
pub const MATRIX_MAX_WEIGHT: usize = 6;
/// Degrees `0..=PBW_MAX_DEGREE` in the normal-word counts.
pub const PBW_MAX_DEGREE: usize = 8;
/// Random elements per involution.
pub const INVOLUTION_SAMPLES: usize = 100;

const SEED: u64 = 0x5eed_2026;

pub type SuiteFn = fn() -> SuiteReport;

/// Every suite, in report order.
pub const ALL: [(&str, SuiteFn); 12] = [
    ("confluence", confluence),
    ("racah-sl2", racah_to_sl2),
    ("racah-so3", racah_to_so3),
    ("acsa-sl2z2", acsa_to_sl2z2),
    ("z2-isomorphism", z2_isomorphism),
    ("racah-acsa", racah_to_acsa),
    ("diagram", diagram),
    ("skew-oracle", skew_oracle),
    ("matrix-oracle", matrix_oracle),
    ("pbw-counts", pbw_counts),
    ("involutions", involutions),
    ("negative-controls", negative_controls),
];

/// Runs every suite (in parallel) and returns the reports in declaration order.
pub fn verify_all() -> Vec<SuiteReport> {
    ALL.par_iter().map(|(_, f)| f()).collect()
}

fn guard(suite: &mut SuiteReport, label: &str, f: impl FnOnce(&mut SuiteReport) -> Result<()>) {
    if let Err(e) = f(suite) {
        suite.push_error(label, &e);
    }
}

/// Independent count of the ambiguities by scanning every word of length up
/// to `2m - 1` (`m` the longest left-hand side) for two overlapping matches
/// anchored at its two ends, plus every left-hand side for contained ones.
pub fn exhaustive_ambiguity_count(system: &RewriteSystem) -> usize {
    let lhs: Vec<&[u16]> = system.rules().iter().map(|r| r.lhs.letters()).collect();
    let m = lhs.iter().map(|l| l.len()).max().unwrap_or(0);
    let k = system.alphabet().len() as u16;
    let mut count = 0;
    for len in 2..=(2 * m).saturating_sub(1) {
        let mut w = vec![0u16; len];
        'words: loop {
            for a in &lhs {
                for b in &lhs {
                    if a.len() < len
                        && b.len() < len
                        && a.len() + b.len() > len
                        && w.starts_with(a)
                        && w.ends_with(b)
                    {
                        count += 1;
                    }
                }
            }
            let mut pos = len;
            loop {
                if pos == 0 {
                    break 'words;
                }
                pos -= 1;
                w[pos] += 1;
                if w[pos] < k {
                    break;
                }
                w[pos] = 0;
            }
        }
    }
    for (i, a) in lhs.iter().enumerate() {
        for (j, b) in lhs.iter().enumerate() {
            if i != j && b.len() <= a.len() {
                count += a.windows(b.len()).filter(|win| win == b).count();
            }
        }
    }
    count
}

pub fn confluence() -> SuiteReport {
    let mut s = SuiteReport::new(
        "confluence",
        "critical pairs of every built-in rewrite system resolve",
    );
    for name in CONFLUENT_BUILTINS {
        guard(&mut s, name, |s| {
            let sys = builtin_system(name)?;
            let report = check_confluence(sys);
            let expected = match name {
                "sl2" | "so3" | "acsa" => 1,
                _ => exhaustive_ambiguity_count(sys),
            };
            let words: Vec<String> = report
                .entries
                .iter()
                .map(|e| sys.alphabet().display_word(&e.word).to_string())
                .collect();
            s.push(
                CheckEntry::new(
                    format!("{name}: {}", report.summary()),
                    report.is_confluent(),
                )
                .with_detail(format!("overlaps: {}", words.join(", "))),
            );
            s.push(CheckEntry::new(
                format!(
                    "{name}: {} critical pairs, expected {expected}",
                    report.entries.len()
                ),
                report.entries.len() == expected,
            ));
            Ok(())
        });
    }
    guard(&mut s, "sabotaged sl2", |s| {
        s.push(sabotaged_sl2_check()?);
        Ok(())
    });
    s
}

fn sabotaged_sl2_check() -> Result<CheckEntry> {
    let sys = fixtures::sl2_sign_flipped()?;
    let report = check_confluence(&sys);
    let hfe = sys
        .alphabet()
        .index_of("H")
        .zip(sys.alphabet().index_of("F"))
        .map(|(h, f)| Word::from_letters(vec![h, f, sys.alphabet().index_of("E").unwrap_or(0)]));
    let bad: Vec<_> = report.unresolved().collect();
    let pinpointed = bad.len() == 1 && Some(&bad[0].word) == hfe.as_ref();
    let residual = bad
        .first()
        .map(|e| e.residual().display(sys.alphabet()).to_string())
        .unwrap_or_else(|| "0".into());
    Ok(CheckEntry::new(
        "sign-sabotaged sl2 ([H,E] = -2E) is not confluent at H*F*E",
        !report.is_confluent() && pinpointed && residual != "0",
    )
    .with_residual(residual))
}

fn racah_checks(s: &mut SuiteReport, hom: &str) {
    guard(s, hom, |s| {
        s.extend(verify_racah_hom(builtin_hom(hom)?)?.entries());
        Ok(())
    });
}

pub fn racah_to_sl2() -> SuiteReport {
    let mut s = SuiteReport::new(
        "racah-sl2",
        "Racah algebra -> U(sl2); alpha, beta, gamma map to zero",
    );
    racah_checks(&mut s, "racah_to_sl2");
    s
}

fn compare_images(
    s: &mut SuiteReport,
    label: &str,
    got: &crate::homs::Homomorphism,
    want: &crate::homs::Homomorphism,
) -> Result<()> {
    for g in ["A", "B", "C"] {
        let x = got.image(g).cloned().unwrap_or_default();
        let y = want.target.normalize(want.image(g).expect("racah image"))?;
        let residual = &y - &x;
        s.push(
            CheckEntry::new(format!("{label}: image of {g}"), residual.is_zero())
                .with_residual(residual.display(got.target_alphabet()).to_string())
                .with_detail(x.display(got.target_alphabet()).to_string()),
        );
    }
    Ok(())
}

pub fn racah_to_so3() -> SuiteReport {
    let mut s = SuiteReport::new(
        "racah-so3",
        "Racah algebra -> U(so3); composing with so3 -> sl2 recovers Racah -> U(sl2)",
    );
    racah_checks(&mut s, "racah_to_so3");
    guard(&mut s, "so3_to_sl2", |s| {
        s.extend(verify_hom(builtin_hom("so3_to_sl2")?)?.entries());
        let c = compose(builtin_hom("so3_to_sl2")?, builtin_hom("racah_to_so3")?)?;
        compare_images(
            s,
            "so3_to_sl2 . racah_to_so3 = racah_to_sl2",
            &c,
            builtin_hom("racah_to_sl2")?,
        )
    });
    s
}

pub fn acsa_to_sl2z2() -> SuiteReport {
    let mut s = SuiteReport::new("acsa-sl2z2", "anticommutator spin algebra -> U(sl2)_{Z/2Z}");
    guard(&mut s, "acsa_to_sl2z2", |s| {
        s.extend(verify_hom(builtin_hom("acsa_to_sl2z2")?)?.entries());
        Ok(())
    });
    s
}

pub fn z2_isomorphism() -> SuiteReport {
    let mut s = SuiteReport::new(
        "z2-isomorphism",
        "A_{Z/2Z} <-> U(sl2)_{Z/2Z} are homomorphisms and inverse to each other",
    );
    guard(&mut s, "isomorphism", |s| {
        let fwd = builtin_hom("acsa_z2_to_sl2_z2")?;
        let back = builtin_hom("sl2_z2_to_acsa_z2")?;
        s.extend(verify_hom(fwd)?.entries());
        s.extend(verify_hom(back)?.entries());
        let (a, b) = verify_mutually_inverse(fwd, back)?;
        s.extend(a.entries());
        s.extend(b.entries());
        Ok(())
    });
    s
}

pub fn racah_to_acsa() -> SuiteReport {
    let mut s = SuiteReport::new(
        "racah-acsa",
        "Racah algebra -> A; the route through U(sl2)_{Z/2Z} gives (J_k^2 - 1)/4",
    );
    racah_checks(&mut s, "racah_to_acsa");
    guard(&mut s, "composed route", |s| {
        let route = compose_path(&[
            builtin_hom("racah_to_sl2")?,
            builtin_hom("incl_sl2_in_sl2z2")?,
            builtin_hom("sl2_z2_to_acsa_z2")?,
        ])?;
        for (g, j) in [("A", "J_1"), ("B", "J_2"), ("C", "J_3")] {
            let want =
                crate::front::parse_expr(&format!("({j}^2 - 1)/4"), route.target_alphabet())?;
            let got = route.image(g).cloned().unwrap_or_default();
            let residual = &got - &want;
            s.push(
                CheckEntry::new(
                    format!("composed route: {g} -> ({j}^2 - 1)/4"),
                    residual.is_zero(),
                )
                .with_residual(residual.display(route.target_alphabet()).to_string())
                .with_detail(got.display(route.target_alphabet()).to_string()),
            );
        }
        Ok(())
    });
    s
}

pub fn diagram() -> SuiteReport {
    let mut s = SuiteReport::new(
        "diagram",
        "the triangle Racah -> U(sl2) -> U(sl2)_{Z/2Z} vs Racah -> A -> commutes",
    );
    guard(&mut s, "common target A_{Z/2Z}", |s| {
        let r = verify_diagram(
            &[
                builtin_hom("racah_to_sl2")?,
                builtin_hom("incl_sl2_in_sl2z2")?,
                builtin_hom("sl2_z2_to_acsa_z2")?,
            ],
            &[
                builtin_hom("racah_to_acsa")?,
                builtin_hom("incl_acsa_in_acsaz2")?,
            ],
        )?;
        s.extend(r.entries());
        Ok(())
    });
    guard(&mut s, "common target U(sl2)_{Z/2Z}", |s| {
        let r = verify_diagram(
            &[
                builtin_hom("racah_to_sl2")?,
                builtin_hom("incl_sl2_in_sl2z2")?,
            ],
            &[
                builtin_hom("racah_to_acsa")?,
                builtin_hom("incl_acsa_in_acsaz2")?,
                builtin_hom("acsa_z2_to_sl2_z2")?,
            ],
        )?;
        s.extend(r.entries());
        Ok(())
    });
    guard(&mut s, "through A -> U(sl2)_{Z/2Z}", |s| {
        let r = verify_diagram(
            &[
                builtin_hom("racah_to_sl2")?,
                builtin_hom("incl_sl2_in_sl2z2")?,
            ],
            &[builtin_hom("racah_to_acsa")?, builtin_hom("acsa_to_sl2z2")?],
        )?;
        s.extend(r.entries());
        Ok(())
    });
    s
}

type Action<'a> = &'a dyn Fn(&NCPoly) -> Result<NCPoly>;

/// Compares the presentation's normal forms with the skew-ring product on
/// random pairs. Returns (agreements, first disagreement).
pub fn skew_oracle_run(
    base: SkewBase,
    samples: usize,
    seed: u64,
    action: Option<Action<'_>>,
) -> Result<(usize, Option<String>)> {
    let base_sys = base.base().system()?;
    let ext = base.extended();
    let ext_sys = ext.system()?;
    let g = ext.group.expect("extension").generator;
    let mut rng = sample::rng(seed);
    let mut agree = 0;
    let mut first_mismatch = None;
    for _ in 0..samples {
        let mut part = || sample::normal_form(&mut rng, base_sys, SKEW_MAX_DEGREE, 3);
        let x = SkewPair::new(part()?, part()?);
        let y = SkewPair::new(part()?, part()?);
        let product = ext_sys.normalize(&(&x.to_poly(g) * &y.to_poly(g)))?;
        let split = pair_of_normal_form(&product, ext)?;
        let oracle = match action {
            None => skew_pair_mul(&x, &y, base)?,
            Some(f) => skew_pair_mul_with(&x, &y, base, f)?,
        };
        if split == oracle {
            agree += 1;
        } else if first_mismatch.is_none() {
            let a = &base.base().alphabet;
            first_mismatch = Some(format!(
                "rewriting ({} | {}) vs skew product ({} | {})",
                split.even.display(a),
                split.odd.display(a),
                oracle.even.display(a),
                oracle.odd.display(a)
            ));
        }
    }
    Ok((agree, first_mismatch))
}

pub fn skew_oracle() -> SuiteReport {
    let mut s = SuiteReport::new(
        "skew-oracle",
        "Z/2Z presentations reproduce skew group ring multiplication",
    );
    for (k, base) in SkewBase::ALL.into_iter().enumerate() {
        guard(&mut s, base.name(), |s| {
            let (agree, mismatch) = skew_oracle_run(base, SKEW_SAMPLES, SEED + k as u64, None)?;
            let mut e = CheckEntry::new(
                format!(
                    "{}: {agree}/{SKEW_SAMPLES} random products agree",
                    base.extended().name
                ),
                agree == SKEW_SAMPLES,
            );
            if let Some(m) = mismatch {
                e = e.with_detail(m);
            }
            s.push(e);
            Ok(())
        });
    }
    s
}

/// Representation used by the matrix oracle for a built-in with a rewrite system.
pub fn oracle_rep(algebra: &str, n: usize) -> Result<Representation> {
    match algebra {
        "sl2" => Ok(sl2_irrep(n)),
        "sl2_z2" => Ok(sl2_z2_rep(n)),
        "acsa" | "acsa_z2" | "so3" => induced_rep(algebra, n),
        _ => Err(Error::UnknownAlgebra(algebra.to_string())),
    }
}

/// Checks `eval(p) = eval(normalize(p))` on random `p`, cycling through the
/// highest weights `0..=max_weight`. Returns (agreements, first disagreement).
pub fn matrix_oracle_run(
    algebra: &str,
    system: &RewriteSystem,
    samples: usize,
    max_weight: usize,
    seed: u64,
) -> Result<(usize, Option<String>)> {
    let reps = (0..=max_weight)
        .map(|n| oracle_rep(algebra, n))
        .collect::<Result<Vec<_>>>()?;
    let letters = system.alphabet().len() as u16;
    let mut rng = sample::rng(seed);
    let mut agree = 0;
    let mut first = None;
    for k in 0..samples {
        let p = sample::poly(&mut rng, letters, MATRIX_MAX_DEGREE, 4);
        let q = system.normalize(&p)?;
        let rep = &reps[k % reps.len()];
        if eval(&p, rep)? == eval(&q, rep)? {
            agree += 1;
        } else if first.is_none() {
            first = Some(format!(
                "dim {}: {} normalizes to {}",
                rep.dim(),
                p.display(system.alphabet()),
                q.display(system.alphabet())
            ));
        }
    }
    Ok((agree, first))
}

pub fn matrix_oracle() -> SuiteReport {
    let mut s = SuiteReport::new(
        "matrix-oracle",
        "exact matrix representations satisfy every relation and agree with normal forms",
    );
    for n in 0..=MATRIX_MAX_WEIGHT {
        guard(&mut s, &format!("representations at n = {n}"), |s| {
            let rel_checks = [
                ("sl2", verify_rep(builtin_system("sl2")?, &sl2_irrep(n))?),
                (
                    "sl2_z2",
                    verify_rep(builtin_system("sl2_z2")?, &sl2_z2_rep(n))?,
                ),
                (
                    "acsa",
                    verify_rep(builtin_system("acsa")?, &induced_rep("acsa", n)?)?,
                ),
                (
                    "acsa_z2",
                    verify_rep(builtin_system("acsa_z2")?, &induced_rep("acsa_z2", n)?)?,
                ),
                (
                    "racah relations",
                    verify_relations(
                        &builtin("racah")?.relations,
                        &induced_rep("racah_images", n)?,
                    )?,
                ),
                (
                    "racah images",
                    verify_racah_rep(&induced_rep("racah_images", n)?)?,
                ),
            ];
            for (name, report) in rel_checks {
                let bad: Vec<_> = report.failures().map(|c| c.label.clone()).collect();
                let mut e = CheckEntry::new(
                    format!(
                        "{name} at dim {}: {} relations vanish",
                        n + 1,
                        report.checks.len()
                    ),
                    report.passed(),
                );
                if !bad.is_empty() {
                    e = e.with_detail(format!("nonzero: {}", bad.join(", ")));
                }
                s.push(e);
            }
            Ok(())
        });
    }
    for (k, algebra) in ["sl2", "sl2_z2", "acsa", "acsa_z2"].into_iter().enumerate() {
        guard(&mut s, algebra, |s| {
            let (agree, first) = matrix_oracle_run(
                algebra,
                builtin_system(algebra)?,
                MATRIX_SAMPLES,
                MATRIX_MAX_WEIGHT,
                SEED + 100 + k as u64,
            )?;
            let mut e = CheckEntry::new(
                format!(
                    "{algebra}: eval(p) = eval(normalize(p)) for {agree}/{MATRIX_SAMPLES} random p"
                ),
                agree == MATRIX_SAMPLES,
            );
            if let Some(m) = first {
                e = e.with_detail(m);
            }
            s.push(e);
            Ok(())
        });
    }
    s
}

fn triangular(d: usize) -> u64 {
    ((d + 1) * (d + 2) / 2) as u64
}

pub fn pbw_counts() -> SuiteReport {
    let mut s = SuiteReport::new("pbw-counts", "normal words match the PBW counts");
    for name in ["sl2", "so3", "acsa"] {
        guard(&mut s, name, |s| {
            let sys = builtin_system(name)?;
            let counts: Vec<u64> = (0..=PBW_MAX_DEGREE).map(|d| pbw_count(sys, d)).collect();
            let want: Vec<u64> = (0..=PBW_MAX_DEGREE).map(triangular).collect();
            s.push(
                CheckEntry::new(
                    format!("{name}: degrees 0..={PBW_MAX_DEGREE} give (d+1)(d+2)/2"),
                    counts == want,
                )
                .with_detail(format!("{counts:?}")),
            );
            Ok(())
        });
    }
    for name in ["sl2_z2", "acsa_z2"] {
        guard(&mut s, name, |s| {
            let sys = builtin_system(name)?;
            let g = builtin(name)?.group.expect("extension").generator;
            let mut ok = true;
            let mut rows = Vec::new();
            for d in 0..=PBW_MAX_DEGREE {
                let split = pbw_count_by_letter(sys, g, d, 2);
                let total: u64 = split.iter().sum();
                ok &= split == vec![triangular(d), triangular(d), 0] && total == 2 * triangular(d);
                rows.push(format!("{d}:{split:?}"));
            }
            s.push(
                CheckEntry::new(
                    format!("{name}: twice the base count at every base degree"),
                    ok,
                )
                .with_detail(rows.join(" ")),
            );
            let by_total: Vec<u64> = (0..=PBW_MAX_DEGREE).map(|d| pbw_count(sys, d)).collect();
            let want: Vec<u64> = (0..=PBW_MAX_DEGREE)
                .map(|d| triangular(d) + if d > 0 { triangular(d - 1) } else { 0 })
                .collect();
            s.push(
                CheckEntry::new(
                    format!("{name}: brute-force counts by total degree"),
                    by_total == want,
                )
                .with_detail(format!("{by_total:?}")),
            );
            Ok(())
        });
    }
    s
}

pub fn involutions() -> SuiteReport {
    let mut s = SuiteReport::new(
        "involutions",
        "rho on U(sl2) and varrho on A square to the identity",
    );
    for (k, inv) in [Involution::RhoSl2, Involution::VarrhoAcsa]
        .into_iter()
        .enumerate()
    {
        guard(&mut s, inv.name(), |s| {
            let sys = inv.base().base().system()?;
            let mut rng = sample::rng(SEED + 200 + k as u64);
            let mut agree = 0;
            for _ in 0..INVOLUTION_SAMPLES {
                let p = sample::normal_form(&mut rng, sys, 5, 4)?;
                if inv.apply(&inv.apply(&p)?)? == p {
                    agree += 1;
                }
            }
            s.push(CheckEntry::new(
                format!(
                    "{}: {agree}/{INVOLUTION_SAMPLES} elements fixed by the square",
                    inv.name()
                ),
                agree == INVOLUTION_SAMPLES,
            ));
            Ok(())
        });
    }
    s
}

/// A fixture check passes when the fixture is rejected with a nonzero residual.
fn rejected(label: &str, failed: bool, residual: String) -> CheckEntry {
    let nonzero = residual != "0" && !residual.is_empty();
    CheckEntry::new(format!("{label} is rejected"), failed && nonzero).with_residual(residual)
}

pub fn negative_controls() -> SuiteReport {
    let mut s = SuiteReport::new("negative-controls", "every sabotage fixture is rejected");
    guard(&mut s, "sign-sabotaged sl2", |s| {
        s.push(sabotaged_sl2_check()?);
        Ok(())
    });
    guard(&mut s, "so3_to_sl2 with I_2 -> -i*H/2", |s| {
        let h = fixtures::so3_to_sl2_sign_flipped()?;
        let r = verify_hom(&h)?;
        let first = r.failures().next();
        s.push(rejected(
            "so3_to_sl2 with I_2 -> -i*H/2",
            !r.passed() && first.map(|c| c.label.as_str()) == Some("so3-1"),
            first
                .map(|c| c.image.display(&r.target).to_string())
                .unwrap_or_default(),
        ));
        Ok(())
    });
    guard(&mut s, "acsa_to_sl2z2 with J_3 sign flipped", |s| {
        let h = fixtures::acsa_to_sl2z2_sign_flipped()?;
        let r = verify_hom(&h)?;
        let first = r.failures().next();
        s.push(rejected(
            "acsa_to_sl2z2 with J_3 -> (F-E)*rho/2",
            !r.passed(),
            first
                .map(|c| c.image.display(&r.target).to_string())
                .unwrap_or_default(),
        ));
        Ok(())
    });
    guard(&mut s, "racah_to_sl2 with B doubled", |s| {
        let h = fixtures::racah_to_sl2_perturbed_b()?;
        let r = verify_racah_hom(&h)?;
        let first = r.failures().next();
        s.push(rejected(
            "racah_to_sl2 with B -> (H-2)*(H+2)/8",
            !r.passed(),
            first
                .map(|c| c.image.display(&r.target).to_string())
                .unwrap_or_default(),
        ));
        Ok(())
    });
    guard(&mut s, "inverse with H -> J_2", |s| {
        let bad = fixtures::sl2_z2_to_acsa_z2_halved()?;
        let (_, back) = verify_mutually_inverse(builtin_hom("acsa_z2_to_sl2_z2")?, &bad)?;
        let h = back.checks.iter().find(|c| c.generator == "H");
        s.push(rejected(
            "sl2_z2_to_acsa_z2 with H -> J_2 as inverse",
            h.is_some_and(|c| !c.passed()),
            h.map(|c| c.residual().display(&back.target).to_string())
                .unwrap_or_default(),
        ));
        Ok(())
    });
    guard(&mut s, "diagram with perturbed C", |s| {
        let bad = fixtures::racah_to_acsa_perturbed_c()?;
        let r = verify_diagram(
            &[
                builtin_hom("racah_to_sl2")?,
                builtin_hom("incl_sl2_in_sl2z2")?,
                builtin_hom("sl2_z2_to_acsa_z2")?,
            ],
            &[&bad, builtin_hom("incl_acsa_in_acsaz2")?],
        )?;
        let failing: Vec<_> = r.failures().collect();
        s.push(rejected(
            "diagram with C -> (J_3-1)^2/4",
            failing.len() == 1 && failing[0].generator == "C",
            failing
                .first()
                .map(|c| c.residual().display(&r.target).to_string())
                .unwrap_or_default(),
        ));
        Ok(())
    });
    guard(&mut s, "swapped sl2 representation", |s| {
        let rep = fixtures::sl2_rep_swapped(2)?;
        let r = verify_rep(builtin_system("sl2")?, &rep)?;
        let first = r.failures().next();
        s.push(rejected(
            "sl2 module with E and F swapped",
            !r.passed(),
            first.map(|c| c.value.to_string()).unwrap_or_default(),
        ));
        Ok(())
    });
    guard(&mut s, "skew oracle with trivial action", |s| {
        let identity = |p: &NCPoly| Ok(p.clone());
        let (agree, mismatch) = skew_oracle_run(SkewBase::Sl2, 20, SEED + 300, Some(&identity))?;
        s.push(rejected(
            "skew product with the trivial action",
            agree < 20,
            mismatch.unwrap_or_default(),
        ));
        Ok(())
    });
    guard(&mut s, "matrix oracle with [E,F] = -H", |s| {
        let sys = fixtures::sl2_bracket_flipped()?;
        let (agree, mismatch) = matrix_oracle_run("sl2", &sys, 20, MATRIX_MAX_WEIGHT, SEED + 400)?;
        s.push(rejected(
            "normal forms of the [E,F] = -H system under the matrix oracle",
            agree < 20 && check_confluence(&sys).is_confluent(),
            mismatch.unwrap_or_default(),
        ));
        Ok(())
    });
    s
}

/// Critical pair words of a built-in, in canonical names.
pub fn overlap_words(name: &str) -> Result<Vec<String>> {
    let sys = builtin_system(name)?;
    Ok(critical_pairs(sys)
        .iter()
        .map(|c| sys.alphabet().display_word(&c.word).to_string())
        .collect())
}
