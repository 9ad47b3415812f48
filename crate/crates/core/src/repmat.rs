//! Exact finite-dimensional representations.
//!
//! The irreducible `sl2`-module of highest weight `n` together with the
//! basis-reversal operator gives a representation of the skew extension; the
//! other algebras are represented by pushing their built-in homomorphisms
//! through it. Evaluating a polynomial before and after normalization must give
//! the same matrix, which checks the rewriting engine independently.

use std::collections::HashMap;
use std::fmt;

use crate::algebras::{builtin, Relation, RACAH};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NCPoly};
use crate::homs::builtin_hom;
use crate::report::CheckEntry;
use crate::rewrite::RewriteSystem;

/// Square matrix over `Q(i)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Self {
            dim,
            entries: vec![GaussianRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for k in 0..dim {
            m.set(k, k, GaussianRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch(0, 1));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(dim, bad.len()));
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integer_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &GaussianRational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: GaussianRational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }
}

/// Row-major list of exact scalars: `[[0, 1], [0, 0]]`.
impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.dim {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// One matrix per generator, all of a common dimension.
#[derive(Clone, Debug)]
pub struct Representation {
    pub alphabet: Alphabet,
    matrices: Vec<Option<ExactMatrix>>,
    dim: usize,
}

impl Representation {
    pub fn new(alphabet: Alphabet, dim: usize) -> Self {
        let matrices = vec![None; alphabet.len()];
        Self {
            alphabet,
            matrices,
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn assign(&mut self, gen: &str, m: ExactMatrix) -> Result<()> {
        let g = self
            .alphabet
            .index_of(gen)
            .ok_or_else(|| Error::UnassignedGenerator(gen.to_string()))?;
        if m.dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, m.dim()));
        }
        self.matrices[usize::from(g)] = Some(m);
        Ok(())
    }

    pub fn with(mut self, gen: &str, m: ExactMatrix) -> Result<Self> {
        self.assign(gen, m)?;
        Ok(self)
    }

    pub fn matrix(&self, gen: &str) -> Option<&ExactMatrix> {
        self.alphabet
            .index_of(gen)
            .and_then(|g| self.matrices[usize::from(g)].as_ref())
    }

    fn matrix_of(&self, g: u16) -> Result<&ExactMatrix> {
        self.matrices
            .get(usize::from(g))
            .and_then(Option::as_ref)
            .ok_or_else(|| {
                let name = self
                    .alphabet
                    .names()
                    .get(usize::from(g))
                    .cloned()
                    .unwrap_or_else(|| format!("#{g}"));
                Error::UnassignedGenerator(name)
            })
    }
}

/// The irreducible module of dimension `n + 1` on `v_0..v_n`:
/// `H v_k = (n - 2k) v_k`, `E v_k = (n - k + 1) v_{k-1}`, `F v_k = (k + 1) v_{k+1}`.
pub fn sl2_irrep(n: usize) -> Representation {
    let dim = n + 1;
    let mut e = ExactMatrix::zero(dim);
    let mut f = ExactMatrix::zero(dim);
    let mut h = ExactMatrix::zero(dim);
    for k in 0..dim {
        h.set(k, k, GaussianRational::from(n as i64 - 2 * k as i64));
        if k >= 1 {
            e.set(k - 1, k, GaussianRational::from((n - k + 1) as i64));
        }
        if k < n {
            f.set(k + 1, k, GaussianRational::from((k + 1) as i64));
        }
    }
    let alphabet = builtin("sl2").expect("sl2").alphabet.clone();
    Representation::new(alphabet, dim)
        .with("E", e)
        .and_then(|r| r.with("F", f))
        .and_then(|r| r.with("H", h))
        .expect("dimensions agree")
}

/// Basis reversal `v_k -> v_{n-k}`.
pub fn weyl_operator(n: usize) -> ExactMatrix {
    let mut p = ExactMatrix::zero(n + 1);
    for k in 0..=n {
        p.set(n - k, k, GaussianRational::one());
    }
    p
}

/// `sl2_irrep(n)` extended by the Weyl operator for the group generator.
pub fn sl2_z2_rep(n: usize) -> Representation {
    let base = sl2_irrep(n);
    let alphabet = builtin("sl2_z2").expect("sl2_z2").alphabet.clone();
    let mut rep = Representation::new(alphabet, n + 1);
    for g in ["E", "F", "H"] {
        rep.assign(g, base.matrix(g).expect("assigned").clone())
            .expect("same dimension");
    }
    rep.assign("rho", weyl_operator(n)).expect("same dimension");
    rep
}

/// Evaluates `p` by sending each word to the product of its generator matrices.
pub fn eval(p: &NCPoly, rep: &Representation) -> Result<ExactMatrix> {
    let mut out = ExactMatrix::zero(rep.dim);
    let mut prefix_cache: HashMap<Vec<u16>, ExactMatrix> = HashMap::new();
    for (w, c) in p.terms() {
        let letters = w.letters();
        let m = if letters.is_empty() {
            ExactMatrix::identity(rep.dim)
        } else {
            let mut acc = rep.matrix_of(letters[0])?.clone();
            for k in 1..letters.len() {
                if let Some(hit) = prefix_cache.get(&letters[..=k]) {
                    acc = hit.clone();
                    continue;
                }
                acc = acc.mul(rep.matrix_of(letters[k])?)?;
                prefix_cache.insert(letters[..=k].to_vec(), acc.clone());
            }
            acc
        };
        out = out.add(&m.scale(c))?;
    }
    Ok(out)
}

/// Names accepted by [`induced_rep`].
pub const INDUCED_NAMES: [&str; 5] = ["sl2_z2", "acsa", "acsa_z2", "so3", "racah_images"];

/// Representation obtained by evaluating a built-in homomorphism's images in
/// `sl2_irrep(n)` (with `rho` acting by the Weyl operator).
pub fn induced_rep(name: &str, n: usize) -> Result<Representation> {
    let (hom, ambient) = match name {
        "sl2_z2" => return Ok(sl2_z2_rep(n)),
        "acsa" => ("acsa_to_sl2z2", sl2_z2_rep(n)),
        "acsa_z2" => ("acsa_z2_to_sl2_z2", sl2_z2_rep(n)),
        "so3" => ("so3_to_sl2", sl2_irrep(n)),
        "racah_images" => ("racah_to_sl2", sl2_irrep(n)),
        _ => return Err(Error::UnknownAlgebra(name.to_string())),
    };
    let h = builtin_hom(hom)?;
    let mut rep = Representation::new(h.source_alphabet().clone(), n + 1);
    for (gen, img) in h.source_alphabet().names().iter().zip(h.images()) {
        rep.assign(gen, eval(img, &ambient)?)?;
    }
    Ok(rep)
}

#[derive(Clone, Debug)]
pub struct RepCheck {
    pub label: String,
    pub value: ExactMatrix,
}

impl RepCheck {
    pub fn passed(&self) -> bool {
        self.value.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct RepReport {
    pub subject: String,
    pub dim: usize,
    pub checks: Vec<RepCheck>,
}

impl RepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(RepCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RepCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn entries(&self) -> Vec<CheckEntry> {
        self.checks
            .iter()
            .map(|c| {
                let e = CheckEntry::new(
                    format!("{} dim {}: {}", self.subject, self.dim, c.label),
                    c.passed(),
                );
                if c.passed() {
                    e.with_residual("0")
                } else {
                    e.with_residual(c.value.to_string())
                }
            })
            .collect()
    }
}

/// Every rule `lhs -> rhs` of `system` must hold as `eval(lhs - rhs) = 0`.
pub fn verify_rep(system: &RewriteSystem, rep: &Representation) -> Result<RepReport> {
    if system.alphabet() != &rep.alphabet {
        return Err(Error::AlphabetMismatch {
            expected: system.alphabet().to_string(),
            found: rep.alphabet.to_string(),
        });
    }
    let checks = system
        .rules()
        .iter()
        .map(|r| {
            Ok(RepCheck {
                label: format!(
                    "{} = {}",
                    system.alphabet().display_word(&r.lhs),
                    r.rhs.display(system.alphabet())
                ),
                value: eval(&r.relation(), rep)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RepReport {
        subject: format!("rules over [{}]", rep.alphabet),
        dim: rep.dim,
        checks,
    })
}

/// Labelled relations must evaluate to zero.
pub fn verify_relations(relations: &[Relation], rep: &Representation) -> Result<RepReport> {
    let checks = relations
        .iter()
        .map(|r| {
            Ok(RepCheck {
                label: r.label.clone(),
                value: eval(&r.poly, rep)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RepReport {
        subject: format!("relations over [{}]", rep.alphabet),
        dim: rep.dim,
        checks,
    })
}

/// Matrix form of the Racah checks: `[A,B] = [B,C] = [C,A] = 2 Delta` and the
/// central elements evaluating to zero, for a representation of `A, B, C, Delta`.
pub fn verify_racah_rep(rep: &Representation) -> Result<RepReport> {
    let m = |g: &str| {
        rep.matrix(g)
            .cloned()
            .ok_or_else(|| Error::UnassignedGenerator(g.to_string()))
    };
    let (a, b, c, d) = (m("A")?, m("B")?, m("C")?, m("Delta")?);
    let two_d = d.scale(&GaussianRational::from(2));
    let mut checks = vec![
        RepCheck {
            label: "[A,B] = 2 Delta".into(),
            value: a.commutator(&b)?.sub(&two_d)?,
        },
        RepCheck {
            label: "[B,C] = 2 Delta".into(),
            value: b.commutator(&c)?.sub(&two_d)?,
        },
        RepCheck {
            label: "[C,A] = 2 Delta".into(),
            value: c.commutator(&a)?.sub(&two_d)?,
        },
    ];
    for (name, z) in RACAH.central_elements() {
        checks.push(RepCheck {
            label: format!("{name} -> 0"),
            value: eval(z, rep)?,
        });
    }
    Ok(RepReport {
        subject: "racah images".into(),
        dim: rep.dim,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::builtin_system;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_integer_rows(rows).unwrap()
    }

    #[test]
    fn two_dimensional_module_is_the_standard_basis() {
        let r = sl2_irrep(1);
        assert_eq!(r.matrix("E").unwrap(), &m(&[&[0, 1], &[0, 0]]));
        assert_eq!(r.matrix("F").unwrap(), &m(&[&[0, 0], &[1, 0]]));
        assert_eq!(r.matrix("H").unwrap(), &m(&[&[1, 0], &[0, -1]]));
        assert_eq!(r.matrix("E").unwrap().to_string(), "[[0, 1], [0, 0]]");
    }

    #[test]
    fn trivial_module() {
        let r = sl2_irrep(0);
        for g in ["E", "F", "H"] {
            assert!(r.matrix(g).unwrap().is_zero());
        }
    }

    #[test]
    fn three_dimensional_bracket() {
        let r = sl2_irrep(2);
        let (e, f, h) = (
            r.matrix("E").unwrap(),
            r.matrix("F").unwrap(),
            r.matrix("H").unwrap(),
        );
        assert_eq!(&e.commutator(f).unwrap(), h);
    }

    #[test]
    fn weyl_operator_identities() {
        let p1 = weyl_operator(1);
        assert_eq!(p1, m(&[&[0, 1], &[1, 0]]));
        for n in 0..=8 {
            let r = sl2_irrep(n);
            let p = weyl_operator(n);
            let (e, f, h) = (
                r.matrix("E").unwrap(),
                r.matrix("F").unwrap(),
                r.matrix("H").unwrap(),
            );
            assert_eq!(p.mul(&p).unwrap(), ExactMatrix::identity(n + 1));
            assert_eq!(p.mul(e).unwrap(), f.mul(&p).unwrap());
            assert!(p.anticommutator(h).unwrap().is_zero());
        }
    }

    #[test]
    fn eval_examples() {
        let a = builtin("sl2").unwrap();
        for n in 0..=8 {
            let rel = a.parse("E*F - F*E - H").unwrap();
            assert!(eval(&rel, &sl2_irrep(n)).unwrap().is_zero());
        }
        assert_eq!(
            eval(&NCPoly::one(), &sl2_irrep(3)).unwrap(),
            ExactMatrix::identity(4)
        );
        let p = a.parse("(H-2)*(H+2)/16").unwrap();
        let d = GaussianRational::frac(-3, 16);
        let want = ExactMatrix::from_rows(vec![
            vec![d.clone(), GaussianRational::zero()],
            vec![GaussianRational::zero(), d],
        ])
        .unwrap();
        assert_eq!(eval(&p, &sl2_irrep(1)).unwrap(), want);
    }

    #[test]
    fn eval_errors() {
        let z = builtin("sl2_z2").unwrap();
        let p = z.parse("rho").unwrap();
        let mut partial = Representation::new(z.alphabet.clone(), 2);
        partial.assign("E", weyl_operator(1)).unwrap();
        assert_eq!(
            eval(&p, &partial).unwrap_err(),
            Error::UnassignedGenerator("rho".into())
        );
        assert!(matches!(
            partial.assign("F", weyl_operator(2)),
            Err(Error::DimensionMismatch(2, 3))
        ));
    }

    #[test]
    fn induced_acsa_dimension_two() {
        let r = induced_rep("acsa", 1).unwrap();
        let j2 = r.matrix("J_2").unwrap();
        let half = GaussianRational::frac(1, 2);
        let want = ExactMatrix::from_rows(vec![
            vec![half.clone(), GaussianRational::zero()],
            vec![GaussianRational::zero(), -half],
        ])
        .unwrap();
        assert_eq!(j2, &want);
        let (j1, j3) = (r.matrix("J_1").unwrap(), r.matrix("J_3").unwrap());
        assert_eq!(&j1.anticommutator(j2).unwrap(), j3);
        assert!(matches!(
            induced_rep("gl3", 1),
            Err(Error::UnknownAlgebra(_))
        ));
    }

    #[test]
    fn induced_racah() {
        for n in 0..=6 {
            let r = induced_rep("racah_images", n).unwrap();
            assert!(verify_racah_rep(&r).unwrap().passed(), "n = {n}");
        }
    }

    #[test]
    fn rule_checks() {
        for n in 0..=8 {
            assert!(
                verify_rep(builtin_system("sl2_z2").unwrap(), &sl2_z2_rep(n))
                    .unwrap()
                    .passed()
            );
            let acsa = induced_rep("acsa", n).unwrap();
            assert!(verify_rep(builtin_system("acsa").unwrap(), &acsa)
                .unwrap()
                .passed());
        }
        let r = sl2_irrep(2);
        let swapped = Representation::new(r.alphabet.clone(), 3)
            .with("E", r.matrix("F").unwrap().clone())
            .and_then(|x| x.with("F", r.matrix("E").unwrap().clone()))
            .and_then(|x| x.with("H", r.matrix("H").unwrap().clone()))
            .unwrap();
        let report = verify_rep(builtin_system("sl2").unwrap(), &swapped).unwrap();
        assert!(!report.passed());
        assert!(report.failures().any(|c| c.label == "H*E = E*H + 2*E"));
    }
}
