//! Weyl-group words, inversion sets, the longest element, and
//! reconstruction of a reduced word from a biconvex root set.
//!
//! A word stores node indices applied right-to-left as reflections:
//! `[l0, l1, .., lk]` denotes `s_{l0} s_{l1} .. s_{lk}`, with `s_{lk}`
//! acting first.

use crate::kacmoody::{DiagramKind, Gcm, KacError, Root, RootSet};
use std::collections::BTreeSet;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WeylError {
    #[error("no Weyl group element has this inversion set: {0}")]
    NotBiconvex(String),
    #[error("longest element requires a finite type, got `{0}`")]
    NotFinite(String),
    #[error(transparent)]
    Kac(#[from] KacError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylWord {
    pub gcm: Arc<Gcm>,
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(gcm: &Arc<Gcm>, letters: Vec<usize>) -> Self {
        for &l in &letters {
            assert!(l < gcm.node_count(), "letter {l} out of range");
        }
        WeylWord {
            gcm: Arc::clone(gcm),
            letters,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`.
pub fn reflect_root(gcm: &Gcm, i: usize, beta: &Root) -> Root {
    gcm.reflect_root(i, beta)
}

/// Applies the word to a weight in fundamental-weight coordinates,
/// rightmost letter first. `s_i(lambda) = lambda - lambda_i * alpha_i`
/// with `alpha_i` expanded over the fundamental weights via column `i`.
pub fn act_on_weight(w: &WeylWord, lambda: &[i64]) -> Vec<i64> {
    let n = w.gcm.node_count();
    assert_eq!(lambda.len(), n);
    let mut v = lambda.to_vec();
    for &i in w.letters.iter().rev() {
        let vi = v[i];
        if vi != 0 {
            for j in 0..n {
                v[j] -= vi * w.gcm.coroot_row(j)[i];
            }
        }
    }
    v
}

/// Reduced word for the same element, from the strong exchange
/// condition. Letters are processed right to left; a letter whose
/// reflection shortens the running product deletes one earlier letter.
pub fn reduce_word(w: &WeylWord) -> WeylWord {
    let gcm = &w.gcm;
    let n = gcm.node_count();
    // `out` is a reduced word for the suffix processed so far.
    let mut out: Vec<usize> = Vec::with_capacity(w.letters.len());
    for &i in w.letters.iter().rev() {
        // u^{-1}(alpha_i) where u = product(out): apply the letters of
        // `out` in forward order (u^{-1} reverses the word).
        let mut v = Root::simple(i, n);
        for &o in &out {
            v = gcm.reflect_root(o, &v);
        }
        if v.is_positive() {
            out.insert(0, i);
        } else {
            // s_i u = u with the letter at position t deleted, where
            // alpha_i = s_{o_0} .. s_{o_{t-1}} (alpha_{o_t}).
            let target = Root::simple(i, n);
            let mut t_found = None;
            for t in 0..out.len() {
                let mut r = Root::simple(out[t], n);
                for j in (0..t).rev() {
                    r = gcm.reflect_root(out[j], &r);
                }
                if r == target {
                    t_found = Some(t);
                    break;
                }
            }
            let t = t_found.expect("strong exchange position exists");
            out.remove(t);
        }
    }
    WeylWord::new(gcm, out)
}

pub fn is_reduced(w: &WeylWord) -> bool {
    reduce_word(w).len() == w.len()
}

/// Inversion set `{beta > 0 : w(beta) < 0}`. Duplicate letters collapse:
/// the word is reduced first, then the standard formula applies.
///
/// Each root is validated against the root set, so a truncated affine
/// set fails loudly instead of silently accepting an unverified root.
pub fn inversion_set(w: &WeylWord, roots: &RootSet) -> Result<BTreeSet<Root>, WeylError> {
    let reduced = reduce_word(w);
    let gcm = &w.gcm;
    let n = gcm.node_count();
    let l = reduced.letters.len();
    let mut out = BTreeSet::new();
    for j in 0..l {
        let mut v = Root::simple(reduced.letters[j], n);
        for t in j + 1..l {
            v = gcm.reflect_root(reduced.letters[t], &v);
        }
        debug_assert!(v.is_positive());
        if !roots.contains(&v.coeffs)? {
            return Err(WeylError::Kac(KacError::InvalidGcm {
                label: gcm.label().to_string(),
                reason: format!("inversion {v} not in generated root set"),
            }));
        }
        out.insert(v);
    }
    Ok(out)
}

/// Reduced word for the longest element of a finite Weyl group, by the
/// descent walk on rho. The postcondition (inversion set = all positive
/// roots) is asserted, not assumed.
pub fn longest_element(gcm: &Arc<Gcm>, roots: &RootSet) -> Result<WeylWord, WeylError> {
    if gcm.kind() != DiagramKind::Finite {
        return Err(WeylError::NotFinite(gcm.label().to_string()));
    }
    assert!(roots.is_complete(), "root set must be complete");
    let n = gcm.node_count();
    let mut lambda: Vec<i64> = vec![1; n];
    let mut recorded: Vec<usize> = Vec::new();
    loop {
        let Some(i) = (0..n).find(|&i| lambda[i] > 0) else {
            break;
        };
        recorded.push(i);
        let li = lambda[i];
        for j in 0..n {
            lambda[j] -= li * gcm.coroot_row(j)[i];
        }
    }
    recorded.reverse();
    let w = WeylWord::new(gcm, recorded);
    debug_assert_eq!(w.len(), roots.len());
    let inv = inversion_set(&w, roots)?;
    assert_eq!(inv.len(), roots.len(), "descent walk must invert all of Phi+");
    Ok(w)
}

/// Greedy reconstruction of a reduced word with the given inversion set.
///
/// Finds a simple root in the set (smallest index for determinism),
/// prepends it, reflects the remainder, and repeats. Fails with
/// `NotBiconvex` when no simple root is available or a reflection image
/// leaves the positive roots, which certifies that no Weyl group element
/// has this inversion set.
pub fn word_from_inversion_set(
    set: &BTreeSet<Root>,
    roots: &RootSet,
) -> Result<WeylWord, WeylError> {
    let gcm = roots.gcm();
    let n = gcm.node_count();
    let mut current: BTreeSet<Root> = set.clone();
    let mut letters: Vec<usize> = Vec::with_capacity(set.len());
    while !current.is_empty() {
        let Some(i) = (0..n).find(|&i| current.contains(&Root::simple(i, n))) else {
            return Err(WeylError::NotBiconvex(format!(
                "no simple root among {} remaining roots",
                current.len()
            )));
        };
        let simple = Root::simple(i, n);
        let mut next = BTreeSet::new();
        for r in current.iter().filter(|&r| *r != simple) {
            let img = gcm.reflect_root(i, r);
            if !img.is_positive() {
                return Err(WeylError::NotBiconvex(format!(
                    "s_{i}({r}) leaves the positive roots"
                )));
            }
            next.insert(img);
        }
        if next.len() + 1 != current.len() {
            return Err(WeylError::NotBiconvex("reflection collapsed roots".into()));
        }
        letters.insert(0, i);
        current = next;
    }
    Ok(WeylWord::new(gcm, letters))
}

/// Nonnegative integer vector of coefficients over the fundamental
/// weights of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeight {
    pub gcm: Arc<Gcm>,
    pub coeffs: Vec<i64>,
}

impl DominantWeight {
    pub fn new(gcm: &Arc<Gcm>, coeffs: Vec<i64>) -> Result<Self, KacError> {
        if coeffs.len() != gcm.node_count() {
            return Err(KacError::InvalidNode(coeffs.len(), gcm.label().to_string()));
        }
        if let Some(i) = coeffs.iter().position(|&c| c < 0) {
            return Err(KacError::InvalidGcm {
                label: gcm.label().to_string(),
                reason: format!("weight coefficient {} at node {i} is negative", coeffs[i]),
            });
        }
        Ok(DominantWeight {
            gcm: Arc::clone(gcm),
            coeffs,
        })
    }

    pub fn fundamental(gcm: &Arc<Gcm>, i: usize) -> Self {
        let mut coeffs = vec![0; gcm.node_count()];
        coeffs[i] = 1;
        DominantWeight {
            gcm: Arc::clone(gcm),
            coeffs,
        }
    }

    /// rho: all coefficients one.
    pub fn rho(gcm: &Arc<Gcm>) -> Self {
        DominantWeight {
            gcm: Arc::clone(gcm),
            coeffs: vec![1; gcm.node_count()],
        }
    }
}
