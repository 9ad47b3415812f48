//! Deliberately broken inputs. Each one must be rejected by the verifier it
//! targets, which shows that the passing verdicts are not vacuous.

use crate::algebras::builtin;
use crate::error::Result;
use crate::freealg::NCPoly;
use crate::homs::{builtin_hom, Homomorphism};
use crate::repmat::{sl2_irrep, Representation};
use crate::rewrite::{orient, RewriteSystem};

/// `U(sl2)` with `[H,E] = -2E`. The Jacobi identity fails, so the overlap
/// `H*F*E` does not resolve (residual `4*H`).
pub fn sl2_sign_flipped() -> Result<RewriteSystem> {
    let sl2 = builtin("sl2")?;
    let rels = ["H*E - E*H + 2*E", "H*F - F*H + 2*F", "E*F - F*E - H"]
        .iter()
        .map(|t| sl2.parse(t))
        .collect::<Result<Vec<NCPoly>>>()?;
    orient(&rels, &sl2.alphabet)
}

/// `U(sl2)` with `[E,F] = -H`. Still confluent (it is `U(sl2)` again after
/// rescaling), but it computes wrong normal forms for `U(sl2)`; only the
/// matrix oracle can catch it.
pub fn sl2_bracket_flipped() -> Result<RewriteSystem> {
    let sl2 = builtin("sl2")?;
    let rels = ["H*E - E*H - 2*E", "H*F - F*H + 2*F", "E*F - F*E + H"]
        .iter()
        .map(|t| sl2.parse(t))
        .collect::<Result<Vec<NCPoly>>>()?;
    orient(&rels, &sl2.alphabet)
}

/// `so3 -> sl2` with `I_2 -> -i*H/2`; breaks `[I_1,I_2] = I_3` with residual `F - E`.
pub fn so3_to_sl2_sign_flipped() -> Result<Homomorphism> {
    builtin_hom("so3_to_sl2")?.with_image_text("I_2", "-i*H/2")
}

/// `U(sl2)_{Z/2Z} -> A_{Z/2Z}` with `H -> J_2`; the round trip sends `H` to `H/2`.
pub fn sl2_z2_to_acsa_z2_halved() -> Result<Homomorphism> {
    builtin_hom("sl2_z2_to_acsa_z2")?.with_image_text("H", "J_2")
}

/// `Racah -> A` with `C -> (J_3-1)^2/4`; the diagram fails at `C` by `-(J_3-1)/2`.
pub fn racah_to_acsa_perturbed_c() -> Result<Homomorphism> {
    builtin_hom("racah_to_acsa")?.with_image_text("C", "(J_3-1)*(J_3-1)/4")
}

/// `Racah -> U(sl2)` with the image of `B` doubled.
pub fn racah_to_sl2_perturbed_b() -> Result<Homomorphism> {
    builtin_hom("racah_to_sl2")?.with_image_text("B", "(H-2)*(H+2)/8")
}

/// `A -> U(sl2)_{Z/2Z}` with the sign of the `J_3` image flipped.
pub fn acsa_to_sl2z2_sign_flipped() -> Result<Homomorphism> {
    builtin_hom("acsa_to_sl2z2")?.with_image_text("J_3", "(F-E)*rho/2")
}

/// The module of highest weight `n` with the matrices of `E` and `F` swapped.
pub fn sl2_rep_swapped(n: usize) -> Result<Representation> {
    let r = sl2_irrep(n);
    let m = |g: &str| r.matrix(g).expect("assigned").clone();
    Representation::new(r.alphabet.clone(), r.dim())
        .with("E", m("F"))?
        .with("F", m("E"))?
        .with("H", m("H"))
}
