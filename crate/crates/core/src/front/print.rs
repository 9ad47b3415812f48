//! Canonical printing. Output always parses back to the same polynomial.
//!
//! Terms appear in decreasing monomial order. Runs of a repeated generator use
//! caret notation (`E^2*F`); a coefficient is a scalar prefix joined by `*`
//! (`(1/4)*i*E*H`), and complex coefficients with both parts nonzero are
//! parenthesized (`(1/2 + i)*E`).

use std::fmt::{self, Write};

use num_traits::{One, Signed};

use crate::arith::{fmt_abs_rational, GaussianRational};
use crate::freealg::{Alphabet, NCPoly, Word};

pub(crate) fn write_word(f: &mut impl Write, alphabet: &Alphabet, word: &Word) -> fmt::Result {
    let letters = word.letters();
    let mut k = 0;
    let mut first = true;
    while k < letters.len() {
        let g = letters[k];
        let mut run = 1;
        while k + run < letters.len() && letters[k + run] == g {
            run += 1;
        }
        if !first {
            f.write_char('*')?;
        }
        f.write_str(alphabet.name(g))?;
        if run > 1 {
            write!(f, "^{run}")?;
        }
        first = false;
        k += run;
    }
    Ok(())
}

/// Sign of a coefficient when it can be pulled out front; `None` for
/// coefficients with both parts nonzero.
fn leading_sign(c: &GaussianRational) -> Option<bool> {
    if c.is_real() {
        Some(c.re.is_negative())
    } else if c.is_imaginary() {
        Some(c.im.is_negative())
    } else {
        None
    }
}

/// Writes `|c|` as a factor, returning false if nothing was written (|c| = 1).
fn write_abs_factor(f: &mut impl Write, c: &GaussianRational) -> Result<bool, fmt::Error> {
    let (part, imaginary) = if c.is_real() {
        (&c.re, false)
    } else {
        (&c.im, true)
    };
    let abs = part.abs();
    if abs.is_one() {
        if imaginary {
            f.write_char('i')?;
            return Ok(true);
        }
        return Ok(false);
    }
    if abs.is_integer() {
        fmt_abs_rational(&abs, f)?;
    } else {
        f.write_char('(')?;
        fmt_abs_rational(&abs, f)?;
        f.write_char(')')?;
    }
    if imaginary {
        f.write_str("*i")?;
    }
    Ok(true)
}

fn write_constant_abs(f: &mut impl Write, c: &GaussianRational) -> fmt::Result {
    if c.is_real() {
        return fmt_abs_rational(&c.re, f);
    }
    // imaginary
    let abs = c.im.abs();
    if abs.is_one() {
        f.write_char('i')
    } else if abs.is_integer() {
        fmt_abs_rational(&abs, f)?;
        f.write_str("*i")
    } else {
        f.write_char('(')?;
        fmt_abs_rational(&abs, f)?;
        f.write_str(")*i")
    }
}

pub(crate) fn write_poly(f: &mut impl Write, alphabet: &Alphabet, p: &NCPoly) -> fmt::Result {
    if p.is_zero() {
        return f.write_char('0');
    }
    for (k, (w, c)) in p.terms().rev().enumerate() {
        match leading_sign(c) {
            Some(neg) => {
                match (k == 0, neg) {
                    (true, true) => f.write_char('-')?,
                    (true, false) => {}
                    (false, true) => f.write_str(" - ")?,
                    (false, false) => f.write_str(" + ")?,
                }
                if w.is_empty() {
                    write_constant_abs(f, c)?;
                } else {
                    if write_abs_factor(f, c)? {
                        f.write_char('*')?;
                    }
                    write_word(f, alphabet, w)?;
                }
            }
            None => {
                if k > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "({c})")?;
                if !w.is_empty() {
                    f.write_char('*')?;
                    write_word(f, alphabet, w)?;
                }
            }
        }
    }
    Ok(())
}

/// Canonical text of `p` over `alphabet`.
pub fn print_expr(p: &NCPoly, alphabet: &Alphabet) -> String {
    let mut s = String::new();
    write_poly(&mut s, alphabet, p).expect("writing to a String");
    s
}
