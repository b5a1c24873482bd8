//! Sparse formal characters, Demazure operators, Demazure module
//! dimensions and the Weyl dimension formula.
//!
//! A character is anchored at a dominant weight `L` and stores a sparse
//! map from nonnegative root-lattice offsets to multiplicities: the
//! offset `b` denotes the monomial `e^{L - sum_j b_j alpha_j}`. Offsets
//! are full coefficient vectors, so weights differing by delta stay
//! separated in affine types without picking a basis for affine weight
//! space. Hot-path offsets are packed into a `u128`, 14 bits per node.

use crate::kacmoody::{DiagramKind, Gcm, KacError, RootSet, MAX_RANK};
use crate::weylops::{is_reduced, DominantWeight, WeylWord};
use num::BigUint;
use rustc_hash::FxHashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CharError {
    #[error("weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),
    #[error("non-Demazure state: {0}")]
    NonDemazureState(String),
    #[error("word is not reduced")]
    RejectedWord,
    #[error("Weyl dimension formula requires a finite type, got `{0}`")]
    NotFinite(String),
    #[error("internal error: {0}")]
    InternalError(String),
    #[error(transparent)]
    Kac(#[from] KacError),
}

const OFFSET_BITS: u32 = 14;
const OFFSET_MASK: u128 = (1 << OFFSET_BITS) - 1;
const OFFSET_MAX: i64 = OFFSET_MASK as i64;

#[inline]
fn lane(i: usize) -> u128 {
    1u128 << (OFFSET_BITS * i as u32)
}

#[inline]
fn coord(key: u128, i: usize) -> i64 {
    ((key >> (OFFSET_BITS * i as u32)) & OFFSET_MASK) as i64
}

fn unpack(key: u128, n: usize) -> Vec<i64> {
    (0..n).map(|i| coord(key, i)).collect()
}

fn pack(offset: &[i64]) -> Result<u128, CharError> {
    let mut key = 0u128;
    for (i, &c) in offset.iter().enumerate() {
        if !(0..=OFFSET_MAX).contains(&c) {
            return Err(CharError::NonDemazureState(format!(
                "offset component {c} out of range at node {i}"
            )));
        }
        key |= (c as u128) << (OFFSET_BITS * i as u32);
    }
    Ok(key)
}

/// Sparse formal character anchored at a dominant weight.
#[derive(Debug, Clone)]
pub struct FormalCharacter {
    gcm: Arc<Gcm>,
    anchor: DominantWeight,
    terms: FxHashMap<u128, i64>,
}

impl FormalCharacter {
    pub fn gcm(&self) -> &Arc<Gcm> {
        &self.gcm
    }

    pub fn anchor(&self) -> &DominantWeight {
        &self.anchor
    }

    /// Number of distinct weights.
    pub fn weight_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> BigUint {
        let total: u128 = self.terms.values().map(|&m| m as u128).sum();
        BigUint::from(total)
    }

    /// Multiplicity at an offset vector (zero if absent).
    pub fn multiplicity(&self, offset: &[i64]) -> i64 {
        pack(offset).map_or(0, |k| *self.terms.get(&k).unwrap_or(&0))
    }

    /// Terms as (offset, multiplicity) pairs in sorted offset order.
    pub fn sorted_terms(&self) -> Vec<(Vec<i64>, i64)> {
        let n = self.gcm.node_count();
        let mut out: Vec<(Vec<i64>, i64)> =
            self.terms.iter().map(|(&k, &m)| (unpack(k, n), m)).collect();
        out.sort();
        out
    }
}

/// The unit character `{e^L}` seeding a Demazure product.
pub fn char_unit(anchor: &DominantWeight) -> Result<FormalCharacter, CharError> {
    if anchor.coeffs.iter().any(|&c| c < 0) {
        return Err(CharError::NotDominant(anchor.coeffs.clone()));
    }
    let mut terms = FxHashMap::default();
    terms.insert(0u128, 1i64);
    Ok(FormalCharacter {
        gcm: Arc::clone(&anchor.gcm),
        anchor: anchor.clone(),
        terms,
    })
}

/// One Demazure operator `D_i`.
///
/// For a term at offset `b` with multiplicity `m`, let
/// `c = <L, alpha_i^vee> - sum_j a_ij b_j` be the pairing of the term's
/// weight with `alpha_i^vee`. The operator contributes `+m` at offsets
/// `b, b+e_i, .., b+c e_i` when `c >= 0`, nothing when `c = -1`, and
/// `-m` at `b-e_i, .., b-(-c-1) e_i` when `c <= -2`.
pub fn apply_demazure(chi: &FormalCharacter, i: usize) -> Result<FormalCharacter, CharError> {
    let gcm = &chi.gcm;
    let n = gcm.node_count();
    if i >= n {
        return Err(CharError::Kac(KacError::InvalidNode(
            i,
            gcm.label().to_string(),
        )));
    }
    let mut row = [0i64; MAX_RANK];
    row[..n].copy_from_slice(gcm.coroot_row(i));
    let lam_i = chi.anchor.coeffs[i];
    let inc = lane(i);
    let mut out: FxHashMap<u128, i64> =
        FxHashMap::with_capacity_and_hasher(chi.terms.len() * 2, Default::default());
    for (&key, &m) in &chi.terms {
        let mut c = lam_i;
        for j in 0..n {
            let a = row[j];
            if a != 0 {
                c -= a * coord(key, j);
            }
        }
        if c >= 0 {
            if coord(key, i) + c > OFFSET_MAX {
                return Err(CharError::NonDemazureState("offset overflow".into()));
            }
            let mut k = key;
            for _ in 0..=c {
                *out.entry(k).or_insert(0) += m;
                k += inc;
            }
        } else if c <= -2 {
            let steps = -c - 1;
            if coord(key, i) < steps {
                return Err(CharError::NonDemazureState(format!(
                    "negative offset component at node {i}"
                )));
            }
            let mut k = key;
            for _ in 0..steps {
                k -= inc;
                *out.entry(k).or_insert(0) -= m;
            }
        }
    }
    out.retain(|_, m| *m != 0);
    if out.values().any(|&m| m < 0) {
        return Err(CharError::NonDemazureState(
            "negative total multiplicity".into(),
        ));
    }
    Ok(FormalCharacter {
        gcm: Arc::clone(gcm),
        anchor: chi.anchor.clone(),
        terms: out,
    })
}

/// Iterated Demazure operators along a reduced word, rightmost letter
/// innermost: `D_{l0}(D_{l1}(.. D_{lk}(e^L) ..))`.
pub fn demazure_character(
    anchor: &DominantWeight,
    w: &WeylWord,
) -> Result<FormalCharacter, CharError> {
    if !is_reduced(w) {
        return Err(CharError::RejectedWord);
    }
    let mut chi = char_unit(anchor)?;
    for &i in w.letters.iter().rev() {
        chi = apply_demazure(&chi, i)?;
    }
    Ok(chi)
}

/// Dimension of the Demazure module: sum of multiplicities of
/// [`demazure_character`].
pub fn demazure_dim(anchor: &DominantWeight, w: &WeylWord) -> Result<BigUint, CharError> {
    Ok(demazure_character(anchor, w)?.dimension())
}

/// Weyl dimension formula
/// `prod_{beta > 0} <lambda+rho, beta^vee> / <rho, beta^vee>`,
/// with exact integer arithmetic throughout.
pub fn weyl_dim(
    gcm: &Arc<Gcm>,
    lambda: &DominantWeight,
    roots: &RootSet,
) -> Result<BigUint, CharError> {
    if gcm.kind() != DiagramKind::Finite {
        return Err(CharError::NotFinite(gcm.label().to_string()));
    }
    assert!(roots.is_complete(), "root set must be complete");
    let n = gcm.node_count();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for beta in roots.iter() {
        let cov = gcm.coroot_coeffs(&beta.coeffs)?;
        let mut top = 0i64;
        let mut bot = 0i64;
        for j in 0..n {
            top += (lambda.coeffs[j] + 1) * cov[j];
            bot += cov[j];
        }
        if top <= 0 || bot <= 0 {
            return Err(CharError::InternalError(format!(
                "nonpositive pairing for root {beta}"
            )));
        }
        num *= BigUint::from(top as u64);
        den *= BigUint::from(bot as u64);
    }
    let (q, r) = num::Integer::div_rem(&num, &den);
    if r != BigUint::from(0u32) {
        return Err(CharError::InternalError("inexact Weyl quotient".into()));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kacmoody::{catalog, generate_roots};
    use crate::weylops::longest_element;

    #[test]
    fn unit_examples() {
        let g = catalog("A2").unwrap();
        let w1 = DominantWeight::fundamental(&g, 0);
        let chi = char_unit(&w1).unwrap();
        assert_eq!(chi.weight_count(), 1);
        assert_eq!(chi.dimension(), BigUint::from(1u32));
        let zero = DominantWeight::new(&g, vec![0, 0]).unwrap();
        assert_eq!(char_unit(&zero).unwrap().dimension(), BigUint::from(1u32));
        let e8a = catalog("E8~1").unwrap();
        let lam = DominantWeight::fundamental(&e8a, 0);
        assert_eq!(char_unit(&lam).unwrap().dimension(), BigUint::from(1u32));
    }

    #[test]
    fn not_dominant_rejected() {
        let g = catalog("A2").unwrap();
        assert!(DominantWeight::new(&g, vec![-1, 0]).is_err());
    }

    #[test]
    fn rank_one_string() {
        // A1, L = 2 omega_1: D_1(e^L) has offsets {0,1,2}, dimension 3.
        let g = catalog("A1").unwrap();
        let lam = DominantWeight::new(&g, vec![2]).unwrap();
        let chi = apply_demazure(&char_unit(&lam).unwrap(), 0).unwrap();
        assert_eq!(chi.weight_count(), 3);
        assert_eq!(chi.dimension(), BigUint::from(3u32));
        for t in 0..=2 {
            assert_eq!(chi.multiplicity(&[t]), 1);
        }
    }

    #[test]
    fn idempotence() {
        let g = catalog("B3").unwrap();
        let rs = generate_roots(&g, 16).unwrap();
        let w0 = longest_element(&g, &rs).unwrap();
        let lam = DominantWeight::new(&g, vec![1, 0, 1]).unwrap();
        let mut chi = char_unit(&lam).unwrap();
        for &i in w0.letters.iter().rev() {
            chi = apply_demazure(&chi, i).unwrap();
            let twice = apply_demazure(&chi, i).unwrap();
            assert_eq!(twice.sorted_terms(), chi.sorted_terms());
        }
    }

    #[test]
    fn zero_pairing_fixed_point() {
        let g = catalog("A2").unwrap();
        // L = omega_2: <L, alpha_1^vee> = 0, so D_1 fixes the unit.
        let lam = DominantWeight::fundamental(&g, 1);
        let chi = apply_demazure(&char_unit(&lam).unwrap(), 0).unwrap();
        assert_eq!(chi.weight_count(), 1);
    }

    #[test]
    fn adjoint_a2() {
        let g = catalog("A2").unwrap();
        let rs = generate_roots(&g, 10).unwrap();
        let w0 = longest_element(&g, &rs).unwrap();
        let lam = DominantWeight::new(&g, vec![1, 1]).unwrap();
        assert_eq!(demazure_dim(&lam, &w0).unwrap(), BigUint::from(8u32));
        assert_eq!(weyl_dim(&g, &lam, &rs).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn non_reduced_rejected() {
        let g = catalog("A2").unwrap();
        let lam = DominantWeight::fundamental(&g, 0);
        let w = WeylWord::new(&g, vec![0, 0]);
        assert!(matches!(
            demazure_dim(&lam, &w),
            Err(CharError::RejectedWord)
        ));
    }

    #[test]
    fn empty_word_dimension_one() {
        let g = catalog("A2").unwrap();
        let lam = DominantWeight::fundamental(&g, 0);
        let w = WeylWord::new(&g, vec![]);
        assert_eq!(demazure_dim(&lam, &w).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn weyl_dim_examples() {
        let a2 = catalog("A2").unwrap();
        let rs = generate_roots(&a2, 10).unwrap();
        let zero = DominantWeight::new(&a2, vec![0, 0]).unwrap();
        assert_eq!(weyl_dim(&a2, &zero, &rs).unwrap(), BigUint::from(1u32));
        let w1 = DominantWeight::fundamental(&a2, 0);
        assert_eq!(weyl_dim(&a2, &w1, &rs).unwrap(), BigUint::from(3u32));

        let g2 = catalog("G2").unwrap();
        let rs2 = generate_roots(&g2, 10).unwrap();
        let mut dims: Vec<BigUint> = (0..2)
            .map(|i| weyl_dim(&g2, &DominantWeight::fundamental(&g2, i), &rs2).unwrap())
            .collect();
        dims.sort();
        assert_eq!(dims, vec![BigUint::from(7u32), BigUint::from(14u32)]);
    }

    #[test]
    fn e8_fundamental_dims() {
        let g = catalog("E8").unwrap();
        let rs = generate_roots(&g, 40).unwrap();
        let mut dims: Vec<BigUint> = (0..8)
            .map(|i| weyl_dim(&g, &DominantWeight::fundamental(&g, i), &rs).unwrap())
            .collect();
        dims.sort();
        let expect: Vec<BigUint> = [
            248u64, 3875, 30380, 147250, 2450240, 6696000, 146325270, 6899079264,
        ]
        .iter()
        .map(|&d| BigUint::from(d))
        .collect();
        let mut expect = expect;
        expect.sort();
        assert_eq!(dims, expect);
    }

    #[test]
    fn g2_fundamentals_demazure_matches_weyl() {
        let g = catalog("G2").unwrap();
        let rs = generate_roots(&g, 10).unwrap();
        let w0 = longest_element(&g, &rs).unwrap();
        for i in 0..2 {
            let lam = DominantWeight::fundamental(&g, i);
            assert_eq!(
                demazure_dim(&lam, &w0).unwrap(),
                weyl_dim(&g, &lam, &rs).unwrap()
            );
        }
    }
}
