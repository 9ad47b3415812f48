//! The free associative algebra over `Q(i)`.
//!
//! A [`Word`] is a sequence of generator indices; the index doubles as the
//! generator's precedence. Words are ordered deg-lex (shorter first, then
//! lexicographic by index), and [`NCPoly`] keeps its terms in that order so
//! the leading word is always the last key.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::GaussianRational;
use crate::error::{Error, Result};

/// Ordered generator names. Position in the list is the precedence index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidAlphabet(format!(
                    "`{name}` is not an identifier"
                )));
            }
            if name == "i" {
                return Err(Error::InvalidAlphabet(
                    "`i` is reserved for the imaginary unit".into(),
                ));
            }
            if names[..k].contains(name) {
                return Err(Error::InvalidAlphabet(format!(
                    "duplicate generator `{name}`"
                )));
            }
        }
        if names.len() > usize::from(u16::MAX) {
            return Err(Error::InvalidAlphabet("too many generators".into()));
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: u16) -> &str {
        &self.names[usize::from(index)]
    }

    pub fn index_of(&self, name: &str) -> Option<u16> {
        self.names.iter().position(|n| n == name).map(|k| k as u16)
    }

    /// Extends the alphabet by one generator placed last (highest precedence).
    pub fn extended(&self, name: &str) -> Result<Self> {
        Self::new(
            self.names
                .iter()
                .cloned()
                .chain(std::iter::once(name.to_string())),
        )
    }

    /// The generator `name` as a polynomial. Panics on an unknown name.
    pub fn gen(&self, name: &str) -> NCPoly {
        let k = self
            .index_of(name)
            .unwrap_or_else(|| panic!("no generator `{name}` in [{}]", self.names.join(", ")));
        NCPoly::generator(k)
    }

    pub fn display_word<'a>(&'a self, word: &'a Word) -> impl fmt::Display + 'a {
        WordDisplay {
            alphabet: self,
            word,
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(", "))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A monomial of the free algebra. The empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(g: u16) -> Self {
        Self(vec![g])
    }

    pub fn from_letters(letters: impl Into<Vec<u16>>) -> Self {
        Self(letters.into())
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`, with the borrowed pieces given as slices.
    pub fn splice(left: &[u16], mid: &[u16], right: &[u16]) -> Word {
        let mut v = Vec::with_capacity(left.len() + mid.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(mid);
        v.extend_from_slice(right);
        Word(v)
    }

    /// Position of the first occurrence of `sub` as a contiguous subword.
    pub fn find(&self, sub: &[u16]) -> Option<usize> {
        if sub.is_empty() || sub.len() > self.0.len() {
            return None;
        }
        self.0.windows(sub.len()).position(|w| w == sub)
    }

    pub fn contains(&self, sub: &[u16]) -> bool {
        self.find(sub).is_some()
    }
}

impl From<Vec<u16>> for Word {
    fn from(v: Vec<u16>) -> Self {
        Word(v)
    }
}

/// Deg-lex: shorter words first, then lexicographic by precedence index.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn word_compare(w1: &Word, w2: &Word) -> Ordering {
    w1.cmp(w2)
}

struct WordDisplay<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        crate::front::print::write_word(f, self.alphabet, self.word)
    }
}

/// A noncommutative polynomial in canonical form: no zero coefficients, terms
/// sorted by the deg-lex order of their words.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct NCPoly {
    terms: BTreeMap<Word, GaussianRational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, Word::empty())
    }

    pub fn generator(g: u16) -> Self {
        Self::term(GaussianRational::one(), Word::letter(g))
    }

    pub fn monomial(word: Word) -> Self {
        Self::term(GaussianRational::one(), word)
    }

    pub fn term(c: GaussianRational, word: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(word, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, GaussianRational)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Word, &GaussianRational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (Word, GaussianRational)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> GaussianRational {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Word, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading_word().map(Word::degree)
    }

    /// The constant coefficient if this polynomial has no non-empty words.
    pub fn as_scalar(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    /// Highest generator index occurring, if any.
    pub fn max_generator(&self) -> Option<u16> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .max()
    }

    pub fn add_term(&mut self, word: Word, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn add_term_ref(&mut self, word: Word, c: &GaussianRational) {
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(Word, GaussianRational)> {
        self.terms.pop_last()
    }

    pub fn scale(&self, c: &GaussianRational) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&mut self, other: &NCPoly, c: &GaussianRational) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    /// `left · self · right` for words `left`, `right`, scaled by `c`, added into `acc`.
    pub(crate) fn add_sandwiched_into(
        &self,
        acc: &mut NCPoly,
        c: &GaussianRational,
        left: &[u16],
        right: &[u16],
    ) {
        for (w, a) in &self.terms {
            acc.add_term(Word::splice(left, w.letters(), right), a * c);
        }
    }

    /// Re-sorts and drops zeros. Canonical values are returned unchanged.
    pub fn canonicalize(&self) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c.clone())))
    }

    /// Applies a generator-image table: each letter `g` becomes `images[g]`.
    ///
    /// `None` entries mark generators with no image; hitting one is an error
    /// naming that generator in `alphabet`.
    pub fn substitute(&self, images: &[Option<NCPoly>], alphabet: &Alphabet) -> Result<NCPoly> {
        let image = |g: u16| -> Result<&NCPoly> {
            images
                .get(usize::from(g))
                .and_then(Option::as_ref)
                .ok_or_else(|| {
                    let name = alphabet
                        .names()
                        .get(usize::from(g))
                        .cloned()
                        .unwrap_or_else(|| format!("#{g}"));
                    Error::MissingImage(name)
                })
        };
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut prod = NCPoly::constant(c.clone());
            for &g in w.letters() {
                prod = &prod * image(g)?;
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    /// Renders with generator names from `alphabet`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        PolyDisplay {
            alphabet,
            poly: self,
        }
    }
}

struct PolyDisplay<'a> {
    alphabet: &'a Alphabet,
    poly: &'a NCPoly,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::front::print::write_poly(f, self.alphabet, self.poly)
    }
}

impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (w, c) in &small.terms {
            big.add_term_ref(w.clone(), c);
        }
        big
    }
}

impl<'a> Sub<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

/// `pq - qp` or `pq + qp`.
pub fn bracket(p: &NCPoly, q: &NCPoly, kind: BracketKind) -> NCPoly {
    let pq = p * q;
    let qp = q * p;
    match kind {
        BracketKind::Commutator => &pq - &qp,
        BracketKind::Anticommutator => &pq + &qp,
    }
}

pub fn commutator(p: &NCPoly, q: &NCPoly) -> NCPoly {
    bracket(p, q, BracketKind::Commutator)
}

pub fn anticommutator(p: &NCPoly, q: &NCPoly) -> NCPoly {
    bracket(p, q, BracketKind::Anticommutator)
}
