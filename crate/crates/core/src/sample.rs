//! Seeded random elements for the randomized suites and property tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{rational, GaussianRational};
use crate::error::Result;
use crate::freealg::{NCPoly, Word};
use crate::rewrite::RewriteSystem;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small nonzero Gaussian rational with denominators 1 or 2.
pub fn coefficient(rng: &mut impl Rng) -> GaussianRational {
    loop {
        let re = rational(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        let im = if rng.gen_bool(0.3) {
            rational(rng.gen_range(-2..=2), rng.gen_range(1..=2))
        } else {
            rational(0, 1)
        };
        let c = GaussianRational::new(re, im);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random word over generators `0..letters` with degree in `0..=max_degree`.
pub fn word(rng: &mut impl Rng, letters: u16, max_degree: usize) -> Word {
    let d = rng.gen_range(0..=max_degree);
    Word::from_letters(
        (0..d)
            .map(|_| rng.gen_range(0..letters))
            .collect::<Vec<_>>(),
    )
}

/// Random free-algebra element with up to `max_terms` terms.
pub fn poly(rng: &mut impl Rng, letters: u16, max_degree: usize, max_terms: usize) -> NCPoly {
    let n = rng.gen_range(1..=max_terms);
    NCPoly::from_terms((0..n).map(|_| (word(rng, letters, max_degree), coefficient(rng))))
}

/// Random element in normal form for `system`.
pub fn normal_form(
    rng: &mut impl Rng,
    system: &RewriteSystem,
    max_degree: usize,
    max_terms: usize,
) -> Result<NCPoly> {
    let letters = system.alphabet().len() as u16;
    system.normalize(&poly(rng, letters, max_degree, max_terms))
}
