//! Diamond-lemma rewriting.
//!
//! A [`RewriteSystem`] is a set of rules `lhs -> rhs` where `lhs` is a word and
//! every word of `rhs` is strictly below `lhs` in deg-lex order. Since deg-lex
//! is compatible with concatenation, every reduction sequence terminates.
//! Normal forms are unique exactly when all critical pairs resolve, which is
//! what [`check_confluence`] certifies.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NCPoly, Word};

/// Step budget used unless a system overrides it.
pub const DEFAULT_FUEL: u64 = 1_000_000;

static FUEL: AtomicU64 = AtomicU64::new(DEFAULT_FUEL);

/// Changes the budget given to systems built from now on. The built-in
/// systems are created on first use, so call this before touching them.
pub fn set_default_fuel(fuel: u64) {
    FUEL.store(fuel.max(1), Ordering::Relaxed);
}

pub fn default_fuel() -> u64 {
    FUEL.load(Ordering::Relaxed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

impl RewriteRule {
    /// Checks `lhs` is nonempty and dominates every word of `rhs`.
    pub fn new(lhs: Word, rhs: NCPoly) -> Result<Self> {
        if lhs.is_empty() {
            return Err(Error::InvalidRule("empty left-hand side".into()));
        }
        if let Some(top) = rhs.leading_word() {
            if *top >= lhs {
                return Err(Error::InvalidRule(format!(
                    "right-hand side word {top:?} is not below {lhs:?}"
                )));
            }
        }
        Ok(Self { lhs, rhs })
    }

    /// The rule as the relation `lhs - rhs`.
    pub fn relation(&self) -> NCPoly {
        &NCPoly::monomial(self.lhs.clone()) - &self.rhs
    }
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    rules: Vec<RewriteRule>,
    fuel: u64,
    by_lhs: HashMap<Vec<u16>, usize>,
    lhs_lengths: Vec<usize>,
}

impl PartialEq for RewriteSystem {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.rules == other.rules
    }
}

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, rules: Vec<RewriteRule>) -> Result<Self> {
        let mut by_lhs = HashMap::with_capacity(rules.len());
        for (k, rule) in rules.iter().enumerate() {
            if let Some(&g) = rule
                .lhs
                .letters()
                .iter()
                .find(|&&g| usize::from(g) >= alphabet.len())
            {
                return Err(Error::InvalidRule(format!(
                    "generator index {g} outside the alphabet"
                )));
            }
            if by_lhs.insert(rule.lhs.letters().to_vec(), k).is_some() {
                return Err(Error::InvalidRule(format!(
                    "duplicate left-hand side {}",
                    alphabet.display_word(&rule.lhs)
                )));
            }
        }
        let mut lhs_lengths: Vec<usize> = rules.iter().map(|r| r.lhs.degree()).collect();
        lhs_lengths.sort_unstable();
        lhs_lengths.dedup();
        Ok(Self {
            alphabet,
            rules,
            fuel: default_fuel(),
            by_lhs,
            lhs_lengths,
        })
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel.max(1);
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }

    /// Leftmost rule match in `word`; at a given position shorter left-hand sides win.
    pub fn find_match(&self, word: &[u16]) -> Option<(usize, usize)> {
        for pos in 0..word.len() {
            for &len in &self.lhs_lengths {
                if pos + len > word.len() {
                    break;
                }
                if let Some(&k) = self.by_lhs.get(&word[pos..pos + len]) {
                    return Some((pos, k));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, word: &Word) -> bool {
        self.find_match(word.letters()).is_none()
    }

    /// Normal form of `p`: the highest reducible monomial is rewritten at its
    /// leftmost match until no monomial contains a left-hand side.
    pub fn normalize(&self, p: &NCPoly) -> Result<NCPoly> {
        let mut work = p.clone();
        let mut out = NCPoly::zero();
        let mut steps: u64 = 0;
        while let Some((w, c)) = work.pop_leading() {
            match self.find_match(w.letters()) {
                None => out.add_term(w, c),
                Some((pos, k)) => {
                    steps += 1;
                    if steps > self.fuel {
                        return Err(Error::FuelExhausted { steps: steps - 1 });
                    }
                    let rule = &self.rules[k];
                    let letters = w.letters();
                    let end = pos + rule.lhs.degree();
                    rule.rhs
                        .add_sandwiched_into(&mut work, &c, &letters[..pos], &letters[end..]);
                }
            }
        }
        Ok(out)
    }

    /// Parses `text` over this system's alphabet and normalizes it.
    pub fn normalize_str(&self, text: &str) -> Result<NCPoly> {
        self.normalize(&crate::front::parse::parse_expr(text, &self.alphabet)?)
    }
}

/// Orients each relation `r = 0` into a rule: `r` is made monic and its leading
/// word becomes the left-hand side.
pub fn orient(relations: &[NCPoly], alphabet: &Alphabet) -> Result<RewriteSystem> {
    let mut rules: Vec<RewriteRule> = Vec::new();
    let mut origin: Vec<usize> = Vec::new();
    for (k, r) in relations.iter().enumerate() {
        let Some((lead, c)) = r.leading_term() else {
            return Err(Error::ZeroRelation);
        };
        if lead.is_empty() {
            return Err(Error::Unorientable {
                relation: r.display(alphabet).to_string(),
                offending: "1".into(),
            });
        }
        let lead = lead.clone();
        let monic = r.scale(&c.inv()?);
        let rhs = &NCPoly::monomial(lead.clone()) - &monic;
        if let Some(top) = rhs.leading_word() {
            if *top >= lead {
                return Err(Error::Unorientable {
                    relation: r.display(alphabet).to_string(),
                    offending: alphabet.display_word(top).to_string(),
                });
            }
        }
        match rules.iter().position(|rule| rule.lhs == lead) {
            Some(j) if rules[j].rhs == rhs => {}
            Some(j) => {
                return Err(Error::AmbiguousOrientation {
                    word: alphabet.display_word(&lead).to_string(),
                    first: relations[origin[j]].display(alphabet).to_string(),
                    second: r.display(alphabet).to_string(),
                })
            }
            None => {
                rules.push(RewriteRule::new(lead, rhs)?);
                origin.push(k);
            }
        }
    }
    RewriteSystem::new(alphabet.clone(), rules)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambiguity {
    /// A proper suffix of `left`'s lhs of length `shared` is a proper prefix of `right`'s lhs.
    Overlap {
        left: usize,
        right: usize,
        shared: usize,
    },
    /// `inner`'s lhs occurs inside `outer`'s lhs at `pos`.
    Inclusion {
        outer: usize,
        inner: usize,
        pos: usize,
    },
}

/// An ambiguity together with its two one-step reductions.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Word,
    pub ambiguity: Ambiguity,
    pub left: NCPoly,
    pub right: NCPoly,
}

/// Every overlap and inclusion ambiguity among the left-hand sides, sorted by
/// overlap word.
pub fn critical_pairs(system: &RewriteSystem) -> Vec<CriticalPair> {
    let rules = system.rules();
    let mut out = Vec::new();
    let one = GaussianRational::one();
    for (i, ri) in rules.iter().enumerate() {
        let a = ri.lhs.letters();
        for (j, rj) in rules.iter().enumerate() {
            let b = rj.lhs.letters();
            for shared in 1..a.len().min(b.len()) {
                if a[a.len() - shared..] != b[..shared] {
                    continue;
                }
                let prefix = &a[..a.len() - shared];
                let tail = &b[shared..];
                let word = Word::splice(a, tail, &[]);
                let mut left = NCPoly::zero();
                ri.rhs.add_sandwiched_into(&mut left, &one, &[], tail);
                let mut right = NCPoly::zero();
                rj.rhs.add_sandwiched_into(&mut right, &one, prefix, &[]);
                out.push(CriticalPair {
                    word,
                    ambiguity: Ambiguity::Overlap {
                        left: i,
                        right: j,
                        shared,
                    },
                    left,
                    right,
                });
            }
            if i != j && b.len() <= a.len() {
                for pos in 0..=(a.len() - b.len()) {
                    if a[pos..pos + b.len()] != *b {
                        continue;
                    }
                    let mut right = NCPoly::zero();
                    rj.rhs
                        .add_sandwiched_into(&mut right, &one, &a[..pos], &a[pos + b.len()..]);
                    out.push(CriticalPair {
                        word: ri.lhs.clone(),
                        ambiguity: Ambiguity::Inclusion {
                            outer: i,
                            inner: j,
                            pos,
                        },
                        left: ri.rhs.clone(),
                        right,
                    });
                }
            }
        }
    }
    out.sort_by(|x, y| {
        x.word
            .letters()
            .cmp(y.word.letters())
            .then_with(|| ambiguity_key(&x.ambiguity).cmp(&ambiguity_key(&y.ambiguity)))
    });
    out
}

fn ambiguity_key(a: &Ambiguity) -> (u8, usize, usize, usize) {
    match *a {
        Ambiguity::Overlap {
            left,
            right,
            shared,
        } => (0, left, right, shared),
        Ambiguity::Inclusion { outer, inner, pos } => (1, outer, inner, pos),
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceEntry {
    pub word: Word,
    pub ambiguity: Ambiguity,
    /// Normal form of the left one-step reduction.
    pub left: NCPoly,
    /// Normal form of the right one-step reduction.
    pub right: NCPoly,
    pub resolved: bool,
    pub error: Option<String>,
}

impl ConfluenceEntry {
    /// `left - right`, zero when resolved.
    pub fn residual(&self) -> NCPoly {
        &self.left - &self.right
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub alphabet: Alphabet,
    pub entries: Vec<ConfluenceEntry>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.entries.iter().all(|e| e.resolved)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &ConfluenceEntry> {
        self.entries.iter().filter(|e| !e.resolved)
    }

    pub fn summary(&self) -> String {
        let n = self.entries.len();
        let plural = if n == 1 { "" } else { "s" };
        if self.is_confluent() {
            format!("confluent; {n} critical pair{plural} resolved")
        } else {
            let bad = self.unresolved().count();
            format!("not confluent; {bad} of {n} critical pair{plural} unresolved")
        }
    }
}

impl fmt::Display for ConfluenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for e in &self.entries {
            let status = if e.resolved { "ok  " } else { "FAIL" };
            write!(
                f,
                "  {status} {}: {} | {}",
                self.alphabet.display_word(&e.word),
                e.left.display(&self.alphabet),
                e.right.display(&self.alphabet)
            )?;
            if let Some(err) = &e.error {
                write!(f, " ({err})")?;
            } else if !e.resolved {
                write!(f, "; residual {}", e.residual().display(&self.alphabet))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Normalizes both sides of every critical pair. Pairs are checked in
/// parallel; entries keep the order of [`critical_pairs`].
pub fn check_confluence(system: &RewriteSystem) -> ConfluenceReport {
    let entries = critical_pairs(system)
        .into_par_iter()
        .map(|cp| {
            let left = system.normalize(&cp.left);
            let right = system.normalize(&cp.right);
            match (left, right) {
                (Ok(left), Ok(right)) => {
                    let resolved = left == right;
                    ConfluenceEntry {
                        word: cp.word,
                        ambiguity: cp.ambiguity,
                        left,
                        right,
                        resolved,
                        error: None,
                    }
                }
                (l, r) => ConfluenceEntry {
                    word: cp.word,
                    ambiguity: cp.ambiguity,
                    left: l.clone().unwrap_or(cp.left),
                    right: r.clone().unwrap_or(cp.right),
                    resolved: false,
                    error: l.err().or(r.err()).map(|e| e.to_string()),
                },
            }
        })
        .collect();
    ConfluenceReport {
        alphabet: system.alphabet().clone(),
        entries,
    }
}

/// Compact structured view of a rule, for reports.
#[derive(Serialize)]
pub struct RuleView {
    pub lhs: String,
    pub rhs: String,
}

impl RewriteSystem {
    pub fn rule_views(&self) -> Vec<RuleView> {
        self.rules
            .iter()
            .map(|r| RuleView {
                lhs: self.alphabet.display_word(&r.lhs).to_string(),
                rhs: r.rhs.display(&self.alphabet).to_string(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::parse::parse_expr;

    fn sys(gens: &[&str], rels: &[&str]) -> RewriteSystem {
        let a = Alphabet::new(gens.iter().copied()).unwrap();
        let rels: Vec<NCPoly> = rels.iter().map(|r| parse_expr(r, &a).unwrap()).collect();
        orient(&rels, &a).unwrap()
    }

    fn sl2() -> RewriteSystem {
        sys(
            &["E", "F", "H"],
            &["H*E - E*H - 2*E", "H*F - F*H + 2*F", "E*F - F*E - H"],
        )
    }

    fn acsa() -> RewriteSystem {
        sys(
            &["J_1", "J_2", "J_3"],
            &[
                "J_1*J_2 + J_2*J_1 - J_3",
                "J_2*J_3 + J_3*J_2 - J_1",
                "J_3*J_1 + J_1*J_3 - J_2",
            ],
        )
    }

    fn p(s: &RewriteSystem, text: &str) -> NCPoly {
        parse_expr(text, s.alphabet()).unwrap()
    }

    #[test]
    fn orientation_examples() {
        let s = sys(&["E", "F", "H"], &["E*F - F*E - H"]);
        assert_eq!(s.rules().len(), 1);
        assert_eq!(s.rules()[0].lhs, Word::from_letters(vec![1, 0]));
        assert_eq!(s.rules()[0].rhs, p(&s, "E*F - H"));

        let s = sys(&["J_1", "J_2", "J_3"], &["J_1*J_2 + J_2*J_1 - J_3"]);
        assert_eq!(s.rules()[0].lhs, Word::from_letters(vec![1, 0]));
        assert_eq!(s.rules()[0].rhs, p(&s, "-J_1*J_2 + J_3"));

        let s = sys(&["rho"], &["rho^2 - 1"]);
        assert_eq!(s.rules()[0].lhs, Word::from_letters(vec![0, 0]));
        assert_eq!(s.rules()[0].rhs, NCPoly::one());
    }

    #[test]
    fn orientation_errors() {
        let a = Alphabet::new(["x"]).unwrap();
        let one = NCPoly::one();
        assert!(matches!(
            orient(&[one], &a),
            Err(Error::Unorientable { .. })
        ));
        assert!(matches!(
            orient(&[NCPoly::zero()], &a),
            Err(Error::ZeroRelation)
        ));
        let r1 = parse_expr("x^2 - x", &a).unwrap();
        let r2 = parse_expr("2*x^2 - 4", &a).unwrap();
        assert!(matches!(
            orient(&[r1.clone(), r2], &a),
            Err(Error::AmbiguousOrientation { .. })
        ));
        // identical rules after scaling are merged
        let r3 = parse_expr("3*x^2 - 3*x", &a).unwrap();
        assert_eq!(orient(&[r1, r3], &a).unwrap().rules().len(), 1);
    }

    #[test]
    fn invalid_rules_rejected() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let bad = RewriteRule::new(Word::from_letters(vec![0]), NCPoly::generator(1));
        assert!(bad.is_err());
        assert!(RewriteRule::new(Word::empty(), NCPoly::zero()).is_err());
        let r = RewriteRule::new(Word::from_letters(vec![1]), NCPoly::generator(0)).unwrap();
        assert!(RewriteSystem::new(a, vec![r.clone(), r]).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let s = sl2();
        assert_eq!(s.normalize(&p(&s, "F*E")).unwrap(), p(&s, "E*F - H"));
        assert_eq!(s.normalize(&p(&s, "H*F*E")).unwrap(), p(&s, "E*F*H - H^2"));
        let a = acsa();
        assert_eq!(
            a.normalize(&p(&a, "J_3*J_2*J_1")).unwrap(),
            p(&a, "-J_1*J_2*J_3 + J_1^2 - J_2^2 + J_3^2")
        );
    }

    #[test]
    fn fuel_is_enforced() {
        let s = sl2().with_fuel(1);
        assert!(s.normalize(&p(&s, "F*E")).is_ok());
        assert_eq!(
            s.normalize(&p(&s, "H*F*E")).unwrap_err(),
            Error::FuelExhausted { steps: 1 }
        );
    }

    #[test]
    fn critical_pair_words() {
        let s = sl2();
        let cps = critical_pairs(&s);
        assert_eq!(cps.len(), 1);
        assert_eq!(cps[0].word, p(&s, "H*F*E").leading_word().unwrap().clone());

        let a = acsa();
        let cps = critical_pairs(&a);
        assert_eq!(cps.len(), 1);
        assert_eq!(cps[0].word, Word::from_letters(vec![2, 1, 0]));

        let r = sys(&["rho"], &["rho^2 - 1"]);
        let cps = critical_pairs(&r);
        assert_eq!(cps.len(), 1);
        assert_eq!(cps[0].word, Word::from_letters(vec![0, 0, 0]));
    }

    #[test]
    fn inclusion_ambiguity_detected() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let rules = vec![
            RewriteRule::new(Word::from_letters(vec![1, 1, 0]), NCPoly::generator(0)).unwrap(),
            RewriteRule::new(Word::from_letters(vec![1, 0]), NCPoly::zero()).unwrap(),
        ];
        let s = RewriteSystem::new(a, rules).unwrap();
        let cps = critical_pairs(&s);
        assert!(cps.iter().any(|c| matches!(
            c.ambiguity,
            Ambiguity::Inclusion {
                outer: 0,
                inner: 1,
                pos: 1
            }
        )));
        // yyx -> x on one side, y*0 = 0 on the other
        let report = check_confluence(&s);
        assert!(!report.is_confluent());
    }

    #[test]
    fn confluence_verdicts() {
        assert!(check_confluence(&sl2()).is_confluent());
        let r = check_confluence(&acsa());
        assert!(r.is_confluent());
        assert_eq!(r.summary(), "confluent; 1 critical pair resolved");

        // [H,E] = -2E breaks the Jacobi identity: the HFE pair is off by 4H.
        let bad = sys(
            &["E", "F", "H"],
            &["H*E - E*H + 2*E", "H*F - F*H + 2*F", "E*F - F*E - H"],
        );
        let report = check_confluence(&bad);
        assert!(!report.is_confluent());
        let e = report.unresolved().next().unwrap();
        assert_eq!(e.word, Word::from_letters(vec![2, 1, 0]));
        assert_eq!(e.residual(), p(&bad, "4*H"));

        // [E,F] = -H still satisfies Jacobi, so this flip stays confluent.
        let flipped = sys(
            &["E", "F", "H"],
            &["H*E - E*H - 2*E", "H*F - F*H + 2*F", "E*F - F*E + H"],
        );
        assert!(check_confluence(&flipped).is_confluent());
    }
}
