use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Commutation, Sign, SignedWord};

/// `Cl(p, q)`: `p` generators squaring to `+1`, then `q` squaring to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordSignature {
    pub p: usize,
    pub q: usize,
}

impl CliffordSignature {
    pub fn new(p: usize, q: usize) -> Self {
        CliffordSignature { p, q }
    }

    /// Diagonal of the metric `η`.
    pub fn metric(&self) -> Vec<Sign> {
        std::iter::repeat_n(Sign::Plus, self.p).chain(std::iter::repeat_n(Sign::Minus, self.q)).collect()
    }
}

fn check_lengths(words: &[SignedWord]) -> Result<()> {
    if let Some(first) = words.first() {
        if let Some(w) = words.iter().find(|w| w.len() != first.len()) {
            return Err(Error::LengthMismatch { left: first.len(), right: w.len() });
        }
    }
    Ok(())
}

/// `γ_I γ_J + γ_J γ_I = 2 η_IJ e0` for every pair, in the word algebra.
///
/// The representation dimension is `2^len` of the words; irreducibility is
/// not required.
pub fn verify_clifford(gammas: &[SignedWord], sig: CliffordSignature) -> Result<bool> {
    if gammas.len() != sig.p + sig.q {
        return Err(Error::Parse(format!(
            "Cl({},{}) needs {} generators, got {}",
            sig.p,
            sig.q,
            sig.p + sig.q,
            gammas.len()
        )));
    }
    check_lengths(gammas)?;
    let eta = sig.metric();
    for (i, gi) in gammas.iter().enumerate() {
        let square = gi.mul(gi)?;
        if square != SignedWord::identity(gi.len()).with_sign(eta[i]) {
            return Ok(false);
        }
        for gj in &gammas[i + 1..] {
            if gi.commutation(gj)? != Commutation::Anticommute {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `S = Σ λ_J basis_J` commutes with every representation word for
/// all real `λ`, i.e. every basis word commutes with every representation
/// word.
pub fn schur_commutant_check(reps: &[SignedWord], commutant_basis: &[SignedWord]) -> Result<bool> {
    let all: Vec<SignedWord> = reps.iter().chain(commutant_basis).cloned().collect();
    check_lengths(&all)?;
    for b in commutant_basis {
        for r in reps {
            if b.commutation(r)? != Commutation::Commute {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
