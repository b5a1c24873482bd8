//! Stretch embeddings of exceptional Dynkin diagrams into rank+1
//! (possibly affine) diagrams.
//!
//! A candidate embedding maps the source nodes injectively into the
//! target so that every source edge is preserved exactly, except for a
//! single edge whose endpoints land at graph distance two, through the
//! one unused target node. The map on simple roots is extended to all
//! positive roots by the minimal-height rule, then checked: image
//! additively closed, root lengths preserved, image biconvex (so a Weyl
//! element exists), the weight map compatible with coroot pairings, and
//! every surviving bracket pair consistent with root strings.

use crate::kacmoody::{catalog, default_cutoff, generate_roots, Gcm, KacError, Root, RootSet};
use crate::weylops::{
    inversion_set, longest_element, word_from_inversion_set, WeylError, WeylWord,
};
use std::collections::BTreeSet;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StretchError {
    #[error("source must be an exceptional type, got `{0}`")]
    UnsupportedSource(String),
    #[error("no target root below cutoff realizes psi of {0}")]
    ExtensionFailed(Root),
    #[error("kept pair psi({0}) + psi({1}) != psi({0} + {1})")]
    EmbeddingInconsistent(Root, Root),
    #[error(transparent)]
    Kac(#[from] KacError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketVerdict {
    Kept,
    Killed,
}

/// A source pair (alpha, beta) with alpha + beta a source root, and the
/// fate of its bracket under the degeneration.
#[derive(Debug, Clone)]
pub struct BracketClass {
    pub alpha: Root,
    pub beta: Root,
    pub verdict: BracketVerdict,
    /// For kept pairs: whether the alpha root string through beta
    /// matches the psi(alpha) root string through psi(beta).
    pub root_string_ok: Option<bool>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckResults {
    pub additive_closure: bool,
    pub root_lengths: bool,
    pub biconvex: bool,
    pub psi_compat: bool,
    pub brackets: bool,
}

impl CheckResults {
    pub fn all(&self) -> bool {
        self.additive_closure && self.root_lengths && self.biconvex && self.psi_compat && self.brackets
    }
}

/// A fully verified stretch embedding.
#[derive(Debug, Clone)]
pub struct EmbeddingSpec {
    pub source: Arc<Gcm>,
    pub target: Arc<Gcm>,
    /// Source node index -> target node index (internal indices).
    pub node_map: Vec<usize>,
    /// The unique source edge whose images sit at distance two.
    pub stretched_edge: (usize, usize),
    /// The unused target node between the stretched images.
    pub intermediate: usize,
    /// The stretched-tail endpoint of the stretched edge.
    pub k_index: usize,
    /// psi on all source positive roots, sorted by (height, coeffs).
    pub psi: Vec<(Root, Root)>,
    /// Reduced word with inversion set = im(psi).
    pub w_iota: WeylWord,
    /// Psi(omega_i) = target fundamental weight at psi_weights[i].
    pub psi_weights: Vec<usize>,
    pub checks: CheckResults,
    pub brackets: Vec<BracketClass>,
    /// Whether the closed-form candidate word w0 s_1..s_k s_0..s_{k-1}
    /// reproduces im(psi); None when it could not be evaluated.
    pub w_formula_agrees: Option<bool>,
}

impl EmbeddingSpec {
    pub fn psi_image(&self) -> BTreeSet<Root> {
        self.psi.iter().map(|(_, t)| t.clone()).collect()
    }

    /// psi of a source root, if tabulated.
    pub fn psi_of(&self, beta: &Root) -> Option<&Root> {
        self.psi.iter().find(|(s, _)| s == beta).map(|(_, t)| t)
    }
}

/// Extends a node map to all source positive roots: psi(beta) is the
/// minimal-height positive real target root whose coefficient at node
/// `node_map[i]` equals `beta.coeffs[i]` for every source node, the one
/// unmapped coefficient staying free.
pub fn extend_psi(
    node_map: &[usize],
    source_roots: &RootSet,
    target_roots: &RootSet,
) -> Result<Vec<(Root, Root)>, StretchError> {
    let mut table = Vec::with_capacity(source_roots.len());
    for beta in source_roots.iter() {
        // Target roots iterate in ascending height order.
        let image = target_roots
            .iter()
            .enumerate()
            .find(|(idx, r)| {
                target_roots.real_flag(*idx)
                    && node_map
                        .iter()
                        .zip(&beta.coeffs)
                        .all(|(&t, &c)| r.coeffs[t] == c)
            })
            .map(|(_, r)| r.clone());
        match image {
            Some(r) => table.push((beta.clone(), r)),
            None => return Err(StretchError::ExtensionFailed(beta.clone())),
        }
    }
    Ok(table)
}

/// Additive closure of the image: every root-sum of two distinct image
/// roots must stay in the image. Returns the violating pairs.
pub fn check_additive_closure(
    psi: &[(Root, Root)],
    target_roots: &RootSet,
) -> Result<Vec<(Root, Root)>, StretchError> {
    let image: BTreeSet<&Root> = psi.iter().map(|(_, t)| t).collect();
    let mut witnesses = Vec::new();
    let img: Vec<&Root> = image.iter().copied().collect();
    for a in 0..img.len() {
        for b in a + 1..img.len() {
            let sum: Vec<i64> = img[a]
                .coeffs
                .iter()
                .zip(&img[b].coeffs)
                .map(|(x, y)| x + y)
                .collect();
            if target_roots.contains(&sum)? {
                let sum = Root::new(sum);
                if !image.contains(&sum) {
                    witnesses.push((img[a].clone(), img[b].clone()));
                }
            }
        }
    }
    Ok(witnesses)
}

/// Length preservation, with both systems normalized to long-root norm 2
/// (cross-multiplied, so the comparison stays in integers).
pub fn check_lengths(source: &Gcm, target: &Gcm, psi: &[(Root, Root)]) -> bool {
    let ls = source.long_norm();
    let lt = target.long_norm();
    psi.iter()
        .all(|(s, t)| source.norm(&s.coeffs) * lt == target.norm(&t.coeffs) * ls)
}

/// Certifies assumption 2: builds a reduced word whose inversion set is
/// exactly the image of psi. `NotBiconvex` means no such Weyl element
/// exists and the candidate is rejected.
pub fn check_weyl_element(
    psi: &[(Root, Root)],
    target_roots: &RootSet,
) -> Result<WeylWord, WeylError> {
    let image: BTreeSet<Root> = psi.iter().map(|(_, t)| t.clone()).collect();
    word_from_inversion_set(&image, target_roots)
}

/// Verifies `<Psi(omega_i), psi(beta)^vee> = <omega_i, beta^vee>` for all
/// source fundamental weights and positive roots, with
/// `Psi(omega_i)` = target fundamental weight at `node_map[i]`.
/// The monoid property follows by linearity. Returns the violations.
pub fn check_psi_weights(
    source: &Gcm,
    target: &Gcm,
    node_map: &[usize],
    psi: &[(Root, Root)],
) -> Result<Vec<(usize, Root)>, StretchError> {
    let mut witnesses = Vec::new();
    for (beta, image) in psi {
        let src_cov = source.coroot_coeffs(&beta.coeffs)?;
        let tgt_cov = target.coroot_coeffs(&image.coeffs)?;
        for (i, &t) in node_map.iter().enumerate() {
            if tgt_cov[t] != src_cov[i] {
                witnesses.push((i, beta.clone()));
            }
        }
    }
    Ok(witnesses)
}

/// Length of the alpha root string through beta on each side:
/// returns (p, q) with beta - p alpha .. beta + q alpha all roots.
fn root_string(
    roots: &RootSet,
    beta: &Root,
    alpha: &Root,
) -> Result<(i64, i64), KacError> {
    let step = |k: i64| -> Vec<i64> {
        beta.coeffs
            .iter()
            .zip(&alpha.coeffs)
            .map(|(b, a)| b + k * a)
            .collect()
    };
    let mut p = 0;
    while p < 8 && roots.is_root(&step(-(p + 1)))? {
        p += 1;
    }
    let mut q = 0;
    while q < 8 && roots.is_root(&step(q + 1))? {
        q += 1;
    }
    Ok((p, q))
}

/// Classifies every source bracket pair as kept or killed, enforcing
/// `psi(alpha) + psi(beta) = psi(alpha + beta)` and matching root
/// strings on kept pairs (the failure mode that would break the
/// abelianisation property).
pub fn classify_brackets(
    node_map: &[usize],
    psi: &[(Root, Root)],
    source_roots: &RootSet,
    target_roots: &RootSet,
) -> Result<Vec<BracketClass>, StretchError> {
    let _ = node_map;
    let lookup = |v: &Root| psi.iter().find(|(s, _)| s == v).map(|(_, t)| t.clone());
    let roots: Vec<&Root> = source_roots.iter().collect();
    let mut out = Vec::new();
    for a in 0..roots.len() {
        for b in a + 1..roots.len() {
            let sum: Vec<i64> = roots[a]
                .coeffs
                .iter()
                .zip(&roots[b].coeffs)
                .map(|(x, y)| x + y)
                .collect();
            if !source_roots.contains(&sum)? {
                continue;
            }
            let sum = Root::new(sum);
            let ia = lookup(roots[a]).expect("psi table complete");
            let ib = lookup(roots[b]).expect("psi table complete");
            let img_sum: Vec<i64> = ia.coeffs.iter().zip(&ib.coeffs).map(|(x, y)| x + y).collect();
            if target_roots.contains(&img_sum)? {
                let img_sum = Root::new(img_sum);
                let expected = lookup(&sum).expect("psi table complete");
                if img_sum != expected {
                    return Err(StretchError::EmbeddingInconsistent(
                        roots[a].clone(),
                        roots[b].clone(),
                    ));
                }
                let src_string = root_string(source_roots, roots[b], roots[a])?;
                let tgt_string = root_string(target_roots, &ib, &ia)?;
                out.push(BracketClass {
                    alpha: roots[a].clone(),
                    beta: roots[b].clone(),
                    verdict: BracketVerdict::Kept,
                    root_string_ok: Some(src_string == tgt_string),
                });
            } else {
                out.push(BracketClass {
                    alpha: roots[a].clone(),
                    beta: roots[b].clone(),
                    verdict: BracketVerdict::Killed,
                    root_string_ok: None,
                });
            }
        }
    }
    Ok(out)
}

/// The literal filtration degree `h(beta) - c_k`.
pub fn filtration_degree(beta: &Root, k_index: usize) -> i64 {
    beta.height() - beta.coeffs[k_index]
}

/// Report on which degree function separates kept from killed brackets.
#[derive(Debug, Clone)]
pub struct DegreeReport {
    /// Pairs on which the literal degree `h(beta) - c_k` is additive
    /// (always all of them: both h and c_k are linear).
    pub literal_additive_pairs: usize,
    pub total_pairs: usize,
    /// Whether literal-degree additivity coincides with the kept pairs.
    pub literal_separates: bool,
    /// Whether additivity of the image height `h(psi(beta))` coincides
    /// with the kept pairs.
    pub image_height_separates: bool,
}

/// Computes both degree readings over the bracket table and reports
/// which one separates kept from killed pairs, asserting neither.
pub fn degree_diagnostic(spec: &EmbeddingSpec) -> DegreeReport {
    let k = spec.k_index;
    let mut literal_additive = 0;
    let mut literal_sep = true;
    let mut image_sep = true;
    for bc in &spec.brackets {
        let sum = Root::new(
            bc.alpha
                .coeffs
                .iter()
                .zip(&bc.beta.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        );
        let lit_add = filtration_degree(&bc.alpha, k) + filtration_degree(&bc.beta, k)
            == filtration_degree(&sum, k);
        if lit_add {
            literal_additive += 1;
        }
        let kept = bc.verdict == BracketVerdict::Kept;
        if lit_add != kept {
            literal_sep = false;
        }
        let (ha, hb, hs) = (
            spec.psi_of(&bc.alpha).map(Root::height),
            spec.psi_of(&bc.beta).map(Root::height),
            spec.psi_of(&sum).map(Root::height),
        );
        if let (Some(ha), Some(hb), Some(hs)) = (ha, hb, hs) {
            if (ha + hb == hs) != kept {
                image_sep = false;
            }
        }
    }
    DegreeReport {
        literal_additive_pairs: literal_additive,
        total_pairs: spec.brackets.len(),
        literal_separates: literal_sep,
        image_height_separates: image_sep,
    }
}

/// Catalog labels with the given node count, finite and affine.
fn target_labels(nodes: usize) -> Vec<String> {
    let mut out = Vec::new();
    let finite_of = |r: usize| -> Vec<String> {
        let mut v = Vec::new();
        if r >= 1 {
            v.push(format!("A{r}"));
        }
        if r >= 2 {
            v.push(format!("B{r}"));
            v.push(format!("C{r}"));
        }
        if r >= 4 {
            v.push(format!("D{r}"));
        }
        if (6..=8).contains(&r) {
            v.push(format!("E{r}"));
        }
        if r == 4 {
            v.push("F4".into());
        }
        if r == 2 {
            v.push("G2".into());
        }
        v
    };
    if nodes <= 9 {
        out.extend(finite_of(nodes));
        for base in finite_of(nodes - 1) {
            out.push(format!("{base}~1"));
        }
        if nodes == 3 {
            out.push("D4~3".into());
        }
        if nodes == 5 {
            out.push("E6~2".into());
        }
    }
    out
}

fn edges(gcm: &Gcm) -> Vec<(usize, usize)> {
    let n = gcm.node_count();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if gcm.coroot_row(i)[j] != 0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Injective node maps preserving every source edge (both Cartan
/// entries) and every non-edge, except the chosen edge whose endpoints
/// must land non-adjacent, at distance two through the unused node.
fn candidate_maps(source: &Gcm, target: &Gcm, stretched: (usize, usize)) -> Vec<Vec<usize>> {
    let n = source.node_count();
    let m = target.node_count();
    let mut maps = Vec::new();
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; m];

    fn consistent(
        source: &Gcm,
        target: &Gcm,
        stretched: (usize, usize),
        assignment: &[Option<usize>],
        node: usize,
        img: usize,
    ) -> bool {
        for (other, &oimg) in assignment.iter().enumerate() {
            let Some(oimg) = oimg else { continue };
            let pair = (node.min(other), node.max(other));
            if pair == stretched {
                if target.coroot_row(img)[oimg] != 0 || target.coroot_row(oimg)[img] != 0 {
                    return false;
                }
            } else if target.coroot_row(img)[oimg] != source.coroot_row(node)[other]
                || target.coroot_row(oimg)[img] != source.coroot_row(other)[node]
            {
                return false;
            }
        }
        true
    }

    fn recurse(
        source: &Gcm,
        target: &Gcm,
        stretched: (usize, usize),
        node: usize,
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        maps: &mut Vec<Vec<usize>>,
    ) {
        let n = source.node_count();
        if node == n {
            let map: Vec<usize> = assignment.iter().map(|o| o.unwrap()).collect();
            let unused = (0..target.node_count())
                .find(|&t| !map.contains(&t))
                .expect("one unused target node");
            let (a, b) = stretched;
            if target.coroot_row(unused)[map[a]] != 0 && target.coroot_row(unused)[map[b]] != 0 {
                maps.push(map);
            }
            return;
        }
        for img in 0..target.node_count() {
            if used[img] && assignment[node].is_none() {
                continue;
            }
            if used[img] {
                continue;
            }
            if consistent(source, target, stretched, assignment, node, img) {
                assignment[node] = Some(img);
                used[img] = true;
                recurse(source, target, stretched, node + 1, assignment, used, maps);
                assignment[node] = None;
                used[img] = false;
            }
        }
    }

    recurse(
        source,
        target,
        stretched,
        0,
        &mut assignment,
        &mut used,
        &mut maps,
    );
    maps
}

/// Returns Some(len) when the component of `endpoint` in the source
/// diagram minus the stretched edge is a simply-laced path ending at
/// `endpoint` (the A-type tail of the recipe).
fn tail_path(source: &Gcm, stretched: (usize, usize), endpoint: usize) -> Option<Vec<usize>> {
    let n = source.node_count();
    let adj = |i: usize, j: usize| -> bool {
        if (i.min(j), i.max(j)) == stretched {
            return false;
        }
        source.coroot_row(i)[j] != 0
    };
    // Collect the component by BFS.
    let mut comp = vec![endpoint];
    let mut seen = vec![false; n];
    seen[endpoint] = true;
    let mut queue = vec![endpoint];
    while let Some(v) = queue.pop() {
        for u in 0..n {
            if u != v && adj(v, u) && !seen[u] {
                seen[u] = true;
                comp.push(u);
                queue.push(u);
            }
        }
    }
    // Path test: degrees <= 2, endpoint has degree <= 1, single edges only.
    let deg = |v: usize| comp.iter().filter(|&&u| u != v && adj(v, u)).count();
    if deg(endpoint) > 1 {
        return None;
    }
    for &v in &comp {
        if deg(v) > 2 {
            return None;
        }
        for &u in &comp {
            if u != v && adj(v, u) && (source.coroot_row(v)[u] != -1 || source.coroot_row(u)[v] != -1)
            {
                return None;
            }
        }
    }
    // Order the path from the far end to the stretched endpoint.
    let mut path = vec![endpoint];
    let mut prev = endpoint;
    loop {
        let next = comp
            .iter()
            .copied()
            .find(|&u| u != prev && adj(*path.last().unwrap(), u) && !path.contains(&u));
        match next {
            Some(u) => {
                prev = *path.last().unwrap();
                path.push(u);
            }
            None => break,
        }
    }
    if path.len() != comp.len() {
        return None;
    }
    path.reverse(); // far end first, stretched endpoint last
    Some(path)
}

fn pick_k_index(source: &Gcm, stretched: (usize, usize)) -> usize {
    let (a, b) = stretched;
    match (tail_path(source, stretched, a), tail_path(source, stretched, b)) {
        (Some(pa), Some(pb)) => {
            if pa.len() < pb.len() {
                a
            } else if pb.len() < pa.len() {
                b
            } else {
                a.min(b)
            }
        }
        (Some(_), None) => a,
        (None, Some(_)) => b,
        (None, None) => a.min(b),
    }
}

/// Evaluates the closed-form candidate `w0 s_1..s_k s_0..s_{k-1}` in the
/// target Weyl group, reading the tail-convention indices as: positions
/// 0..k-1 are the images of the tail nodes, position k is the
/// intermediate node, and w0 is the source longest element transported
/// through the node map. Reports whether its inversion set is im(psi).
fn w_formula_diagnostic(
    source: &Arc<Gcm>,
    target: &Arc<Gcm>,
    node_map: &[usize],
    stretched: (usize, usize),
    k_index: usize,
    source_roots: &RootSet,
    target_roots: &RootSet,
    image: &BTreeSet<Root>,
) -> Option<bool> {
    let tail = tail_path(source, stretched, k_index)?;
    let k = tail.len();
    let pos = |j: usize| -> usize {
        if j < k {
            node_map[tail[j]]
        } else {
            (0..target.node_count())
                .find(|t| !node_map.contains(t))
                .expect("intermediate node")
        }
    };
    let w0 = longest_element(source, source_roots).ok()?;
    let mut letters: Vec<usize> = w0.letters.iter().map(|&l| node_map[l]).collect();
    letters.extend((1..=k).map(pos));
    letters.extend((0..k).map(pos));
    let word = WeylWord::new(target, letters);
    match inversion_set(&word, target_roots) {
        Ok(inv) => Some(&inv == image),
        Err(_) => None,
    }
}

fn verify_candidate(
    source: &Arc<Gcm>,
    target: &Arc<Gcm>,
    node_map: Vec<usize>,
    stretched: (usize, usize),
    source_roots: &RootSet,
    target_roots: &RootSet,
) -> Result<Option<EmbeddingSpec>, StretchError> {
    let psi = match extend_psi(&node_map, source_roots, target_roots) {
        Ok(t) => t,
        Err(StretchError::ExtensionFailed(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    // Injectivity is automatic (all source coefficients are pinned), but
    // assert it anyway.
    let image: BTreeSet<Root> = psi.iter().map(|(_, t)| t.clone()).collect();
    if image.len() != psi.len() {
        return Ok(None);
    }
    let mut checks = CheckResults::default();
    checks.root_lengths = check_lengths(source, target, &psi);
    if !checks.root_lengths {
        return Ok(None);
    }
    checks.additive_closure = check_additive_closure(&psi, target_roots)?.is_empty();
    if !checks.additive_closure {
        return Ok(None);
    }
    let w_iota = match check_weyl_element(&psi, target_roots) {
        Ok(w) => w,
        Err(WeylError::NotBiconvex(_)) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    checks.biconvex = true;
    checks.psi_compat = check_psi_weights(source, target, &node_map, &psi)?.is_empty();
    if !checks.psi_compat {
        return Ok(None);
    }
    let brackets = match classify_brackets(&node_map, &psi, source_roots, target_roots) {
        Ok(b) => b,
        Err(StretchError::EmbeddingInconsistent(..)) => return Ok(None),
        Err(e) => return Err(e),
    };
    checks.brackets = brackets
        .iter()
        .all(|b| b.root_string_ok.unwrap_or(true));
    if !checks.brackets {
        return Ok(None);
    }
    let k_index = pick_k_index(source, stretched);
    let intermediate = (0..target.node_count())
        .find(|t| !node_map.contains(t))
        .expect("one unused target node");
    let w_formula_agrees = w_formula_diagnostic(
        source,
        target,
        &node_map,
        stretched,
        k_index,
        source_roots,
        target_roots,
        &image,
    );
    Ok(Some(EmbeddingSpec {
        source: Arc::clone(source),
        target: Arc::clone(target),
        psi_weights: node_map.clone(),
        node_map,
        stretched_edge: stretched,
        intermediate,
        k_index,
        psi,
        w_iota,
        checks,
        brackets,
        w_formula_agrees,
    }))
}

/// Reconstructs the embedding table for one exceptional source type by
/// exhaustive search over all catalog diagrams with one more node,
/// returning only fully verified embeddings, sorted by target label and
/// node map.
pub fn enumerate_embeddings(source_label: &str) -> Result<Vec<EmbeddingSpec>, StretchError> {
    enumerate_embeddings_with_cutoff(source_label, None)
}

/// Like [`enumerate_embeddings`], but with an explicit target generation
/// height instead of the per-diagram default.
pub fn enumerate_embeddings_with_cutoff(
    source_label: &str,
    target_cutoff: Option<i64>,
) -> Result<Vec<EmbeddingSpec>, StretchError> {
    if !["G2", "F4", "E6", "E7", "E8"].contains(&source_label) {
        return Err(StretchError::UnsupportedSource(source_label.to_string()));
    }
    let source = catalog(source_label)?;
    let source_roots = generate_roots(&source, 64)?;
    assert!(source_roots.is_complete());
    let mut specs: Vec<EmbeddingSpec> = Vec::new();
    for tlabel in target_labels(source.node_count() + 1) {
        let target = catalog(&tlabel)?;
        let cutoff = match target_cutoff {
            Some(h) => h,
            None => default_cutoff(&target)?,
        };
        let target_roots = generate_roots(&target, cutoff)?;
        for stretched in edges(&source) {
            for node_map in candidate_maps(&source, &target, stretched) {
                if let Some(spec) = verify_candidate(
                    &source,
                    &target,
                    node_map,
                    stretched,
                    &source_roots,
                    &target_roots,
                )? {
                    specs.push(spec);
                }
            }
        }
    }
    specs.sort_by(|a, b| {
        (a.target.label(), &a.node_map).cmp(&(b.target.label(), &b.node_map))
    });
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kacmoody::generate_roots;

    fn g2_affine_embedding() -> EmbeddingSpec {
        let specs = enumerate_embeddings("G2").unwrap();
        specs
            .into_iter()
            .find(|s| {
                // The direction sending alpha_1 to affine node 0.
                s.node_map[0] == 0
            })
            .expect("affine G2 embedding found")
    }

    #[test]
    fn g2_has_two_embeddings() {
        let specs = enumerate_embeddings("G2").unwrap();
        assert_eq!(specs.len(), 2);
        for s in &specs {
            assert!(s.checks.all());
            assert_eq!(s.psi.len(), 6);
            assert_eq!(s.w_iota.len(), 6);
        }
    }

    #[test]
    fn g2_affine_psi_values() {
        let spec = g2_affine_embedding();
        assert_eq!(spec.node_map, vec![0, 2]);
        let expect = [
            (vec![1, 1], vec![1, 1, 1]),
            (vec![1, 2], vec![1, 1, 2]),
            (vec![1, 3], vec![1, 1, 3]),
            (vec![2, 3], vec![2, 2, 3]),
        ];
        for (src, tgt) in expect {
            let img = spec.psi_of(&Root::new(src.clone())).unwrap();
            assert_eq!(img.coeffs, tgt, "psi({src:?})");
        }
    }

    #[test]
    fn g2_stretched_simple_pair_killed() {
        let spec = g2_affine_embedding();
        let killed_simple: Vec<&BracketClass> = spec
            .brackets
            .iter()
            .filter(|b| {
                b.alpha.height() == 1 && b.beta.height() == 1 && b.verdict == BracketVerdict::Killed
            })
            .collect();
        assert_eq!(killed_simple.len(), 1);
        let kept = spec
            .brackets
            .iter()
            .filter(|b| b.verdict == BracketVerdict::Kept);
        for b in kept {
            assert_eq!(b.root_string_ok, Some(true));
        }
    }

    #[test]
    fn corrupted_image_reported() {
        let spec = g2_affine_embedding();
        let target = Arc::clone(&spec.target);
        let target_roots = generate_roots(&target, default_cutoff(&target).unwrap()).unwrap();
        // Drop the highest image root: closure must report witnesses.
        let mut psi = spec.psi.clone();
        psi.pop();
        let witnesses = check_additive_closure(&psi, &target_roots).unwrap();
        assert!(!witnesses.is_empty());
        // And the truncated image is no longer biconvex.
        assert!(matches!(
            check_weyl_element(&psi, &target_roots),
            Err(WeylError::NotBiconvex(_))
        ));
    }

    #[test]
    fn empty_image_closed() {
        let spec = g2_affine_embedding();
        let target_roots =
            generate_roots(&spec.target, default_cutoff(&spec.target).unwrap()).unwrap();
        assert!(check_additive_closure(&[], &target_roots).unwrap().is_empty());
    }

    #[test]
    fn length_violation_detected() {
        let spec = g2_affine_embedding();
        // Swap two images of different lengths.
        let mut psi = spec.psi.clone();
        let (a, b) = (psi[0].1.clone(), psi[1].1.clone());
        psi[0].1 = b;
        psi[1].1 = a;
        assert!(!check_lengths(&spec.source, &spec.target, &psi));
    }

    #[test]
    fn psi_weight_compat_and_corruption() {
        let spec = g2_affine_embedding();
        let ok = check_psi_weights(&spec.source, &spec.target, &spec.node_map, &spec.psi).unwrap();
        assert!(ok.is_empty());
        let bad_map = vec![spec.node_map[1], spec.node_map[0]];
        let bad =
            check_psi_weights(&spec.source, &spec.target, &bad_map, &spec.psi).unwrap();
        assert!(!bad.is_empty());
    }

    #[test]
    fn filtration_degree_examples() {
        let alpha_k = Root::new(vec![1, 0]);
        assert_eq!(filtration_degree(&alpha_k, 0), 0);
        let alpha_other = Root::new(vec![0, 1]);
        assert_eq!(filtration_degree(&alpha_other, 0), 1);
        let theta = Root::new(vec![2, 3]);
        assert_eq!(filtration_degree(&theta, 0), 3);
    }

    #[test]
    fn degree_diagnostic_literal_always_additive() {
        let spec = g2_affine_embedding();
        let report = degree_diagnostic(&spec);
        assert_eq!(report.literal_additive_pairs, report.total_pairs);
    }

    #[test]
    fn unsupported_source_rejected() {
        assert!(matches!(
            enumerate_embeddings("A5"),
            Err(StretchError::UnsupportedSource(_))
        ));
    }
}
