//! Generalized Cartan matrices and root system generation.
//!
//! A [`Gcm`] is the single source of truth for all root and weight
//! arithmetic: pairings, the invariant bilinear form, coroots and the
//! null root of affine diagrams are all derived from its entries and
//! symmetrizer. Root sets are generated directly from the matrix by the
//! root-string rule, so twisted and untwisted affine types share one
//! code path.

use num::rational::Ratio;
use num::{Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Hard upper bound on the number of nodes handled by the catalog.
pub const MAX_RANK: usize = 9;

#[derive(Debug, Error)]
pub enum KacError {
    #[error("unsupported diagram type `{0}`")]
    UnsupportedType(String),
    #[error("node index {0} out of range for {1}")]
    InvalidNode(usize, String),
    #[error("root {0:?} has nonpositive norm and no coroot")]
    NoCoroot(Vec<i64>),
    #[error("matrix `{0}` is not of affine type")]
    NotAffine(String),
    #[error("matrix `{0}` is not of finite type")]
    NotFinite(String),
    #[error("membership query at height {height} exceeds safe cutoff {limit} for `{label}`")]
    CutoffExceeded {
        label: String,
        height: i64,
        limit: i64,
    },
    #[error("invalid generalized Cartan matrix `{label}`: {reason}")]
    InvalidGcm { label: String, reason: String },
}

/// Finite or affine, decided by the definiteness of the symmetrized matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramKind {
    Finite,
    Affine,
}

/// A generalized Cartan matrix with its symmetrizer.
///
/// Entry convention: `entries[i][j] = <alpha_j, alpha_i^vee>`. Consumers
/// must go through [`Gcm::pairing`] rather than reading the matrix raw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gcm {
    label: String,
    n: usize,
    entries: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    kind: DiagramKind,
}

/// A root as an integer coefficient vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn simple(i: usize, n: usize) -> Self {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c < 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, c) in self.coeffs.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Gcm {
    /// Validates the GCM axioms, the symmetrizer, and classifies the
    /// diagram as finite or affine by leading principal minors of the
    /// symmetrized matrix.
    pub fn new(label: &str, entries: Vec<Vec<i64>>, symmetrizer: Vec<i64>) -> Result<Arc<Gcm>, KacError> {
        let n = entries.len();
        let invalid = |reason: String| KacError::InvalidGcm {
            label: label.to_string(),
            reason,
        };
        if n == 0 || n > MAX_RANK {
            return Err(invalid(format!("node count {n} out of range 1..={MAX_RANK}")));
        }
        if entries.iter().any(|r| r.len() != n) || symmetrizer.len() != n {
            return Err(invalid("ragged matrix or symmetrizer".into()));
        }
        if symmetrizer.iter().any(|&d| d <= 0) {
            return Err(invalid("symmetrizer must be positive".into()));
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(invalid(format!("diagonal entry at {i} is not 2")));
            }
            for j in 0..n {
                if i != j {
                    if entries[i][j] > 0 {
                        return Err(invalid(format!("positive off-diagonal entry at ({i},{j})")));
                    }
                    if (entries[i][j] == 0) != (entries[j][i] == 0) {
                        return Err(invalid(format!("zero pattern not symmetric at ({i},{j})")));
                    }
                }
                if symmetrizer[i] * entries[i][j] != symmetrizer[j] * entries[j][i] {
                    return Err(invalid(format!("symmetrizer fails at ({i},{j})")));
                }
            }
        }
        // Leading principal minors of the symmetrized matrix B[i][j] = d_i a_ij.
        let b: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| symmetrizer[i] as i128 * entries[i][j] as i128)
                    .collect()
            })
            .collect();
        let minors: Vec<i128> = (1..=n).map(|k| leading_minor(&b, k)).collect();
        let kind = if minors.iter().all(|&m| m > 0) {
            DiagramKind::Finite
        } else if minors[..n - 1].iter().all(|&m| m > 0) && minors[n - 1] == 0 {
            DiagramKind::Affine
        } else {
            return Err(invalid("matrix is neither finite nor affine".into()));
        };
        Ok(Arc::new(Gcm {
            label: label.to_string(),
            n,
            entries,
            symmetrizer,
            kind,
        }))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn is_finite(&self) -> bool {
        self.kind == DiagramKind::Finite
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Row `i` of the matrix, i.e. the pairings `<alpha_j, alpha_i^vee>`.
    pub fn coroot_row(&self, i: usize) -> &[i64] {
        &self.entries[i]
    }

    /// External node label: Bourbaki 1-based for finite diagrams, 0-based
    /// with the added node as 0 for affine diagrams.
    pub fn node_label(&self, i: usize) -> usize {
        match self.kind {
            DiagramKind::Finite => i + 1,
            DiagramKind::Affine => i,
        }
    }

    /// Inverse of [`Gcm::node_label`].
    pub fn node_index(&self, label: usize) -> Result<usize, KacError> {
        let idx = match self.kind {
            DiagramKind::Finite => label.checked_sub(1),
            DiagramKind::Affine => Some(label),
        };
        match idx {
            Some(i) if i < self.n => Ok(i),
            _ => Err(KacError::InvalidNode(label, self.label.clone())),
        }
    }

    /// `<beta, alpha_i^vee>`.
    pub fn pairing(&self, beta: &[i64], i: usize) -> Result<i64, KacError> {
        if i >= self.n || beta.len() != self.n {
            return Err(KacError::InvalidNode(i, self.label.clone()));
        }
        Ok(self.pairing_unchecked(beta, i))
    }

    #[inline]
    pub(crate) fn pairing_unchecked(&self, beta: &[i64], i: usize) -> i64 {
        self.entries[i]
            .iter()
            .zip(beta)
            .map(|(&a, &c)| a * c)
            .sum()
    }

    /// `(beta, beta)` under the symmetrized form `(alpha_i, alpha_j) = d_i a_ij`.
    pub fn norm(&self, beta: &[i64]) -> i64 {
        let mut acc = 0;
        for i in 0..self.n {
            acc += beta[i] * self.symmetrizer[i] * self.pairing_unchecked(beta, i);
        }
        acc
    }

    /// Norm of the longest simple root, used to normalize length
    /// comparisons across diagrams.
    pub fn long_norm(&self) -> i64 {
        (0..self.n)
            .map(|i| 2 * self.symmetrizer[i])
            .max()
            .expect("nonempty diagram")
    }

    /// Expansion of `beta^vee = 2 beta / (beta,beta)` over the simple coroots.
    pub fn coroot_coeffs(&self, beta: &[i64]) -> Result<Vec<i64>, KacError> {
        let norm = self.norm(beta);
        if norm <= 0 {
            return Err(KacError::NoCoroot(beta.to_vec()));
        }
        let mut out = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let num = beta[i] * self.symmetrizer[i] * 2;
            if num % norm != 0 {
                return Err(KacError::InvalidGcm {
                    label: self.label.clone(),
                    reason: format!("non-integral coroot for {beta:?}"),
                });
            }
            out.push(num / norm);
        }
        Ok(out)
    }

    /// `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`.
    pub fn reflect_root(&self, i: usize, beta: &Root) -> Root {
        let p = self.pairing_unchecked(&beta.coeffs, i);
        let mut coeffs = beta.coeffs.clone();
        coeffs[i] -= p;
        Root { coeffs }
    }

    /// The marks: the primitive positive integer kernel vector of an
    /// affine matrix. `delta = sum a_i alpha_i` is the null root.
    pub fn null_root_marks(&self) -> Result<Vec<i64>, KacError> {
        if self.kind != DiagramKind::Affine {
            return Err(KacError::NotAffine(self.label.clone()));
        }
        let kernel = rational_kernel(&self.entries)
            .ok_or_else(|| KacError::NotAffine(self.label.clone()))?;
        Ok(kernel)
    }

    /// True when the positive root `beta` is real: positive norm equal to
    /// a simple-root norm, and reflection descent reaches a simple root.
    pub fn is_real_root(&self, beta: &Root) -> bool {
        let norm = self.norm(&beta.coeffs);
        if norm <= 0 || !(0..self.n).any(|i| 2 * self.symmetrizer[i] == norm) {
            return false;
        }
        let mut v = beta.clone();
        loop {
            if v.coeffs.iter().filter(|&&c| c != 0).count() == 1
                && v.coeffs.iter().any(|&c| c == 1)
            {
                return true;
            }
            let Some(i) = (0..self.n).find(|&i| self.pairing_unchecked(&v.coeffs, i) > 0) else {
                return false;
            };
            v = self.reflect_root(i, &v);
            if !v.is_positive() {
                return false;
            }
        }
    }
}

/// Determinant of the leading k-by-k block, by fraction-free Bareiss
/// elimination over i128.
fn leading_minor(b: &[Vec<i128>], k: usize) -> i128 {
    let mut m: Vec<Vec<i128>> = b[..k].iter().map(|r| r[..k].to_vec()).collect();
    let mut denom: i128 = 1;
    let mut sign: i128 = 1;
    for col in 0..k {
        if m[col][col] == 0 {
            let Some(swap) = (col + 1..k).find(|&r| m[r][col] != 0) else {
                return 0;
            };
            m.swap(col, swap);
            sign = -sign;
        }
        for row in col + 1..k {
            for c in col + 1..k {
                m[row][c] = (m[row][c] * m[col][col] - m[row][col] * m[col][c]) / denom;
            }
            m[row][col] = 0;
        }
        denom = m[col][col];
    }
    sign * m[k - 1][k - 1]
}

/// Primitive positive integer kernel vector of an integer matrix with
/// one-dimensional kernel, or None.
fn rational_kernel(a: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = a.len();
    type Q = Ratio<i128>;
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    // Row-reduce; track pivot columns.
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col];
        for c in 0..n {
            m[row][c] /= inv;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..n {
                    let sub = f * m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() != n - 1 {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut sol = vec![Q::from_integer(0); n];
    sol[free] = Q::from_integer(1);
    for (r, &pc) in pivots.iter().enumerate() {
        sol[pc] = -m[r][free];
    }
    // Scale to primitive positive integers.
    let lcm = sol
        .iter()
        .fold(1i128, |acc, q| num::integer::lcm(acc, *q.denom()));
    let mut ints: Vec<i128> = sol.iter().map(|q| q.numer() * (lcm / q.denom())).collect();
    let gcd = ints.iter().fold(0i128, |acc, &x| num::integer::gcd(acc, x));
    if gcd == 0 {
        return None;
    }
    for x in &mut ints {
        *x /= gcd;
    }
    if ints.iter().any(|&x| x < 0) {
        if ints.iter().all(|&x| x <= 0) {
            for x in &mut ints {
                *x = -*x;
            }
        } else {
            return None;
        }
    }
    Some(ints.iter().map(|&x| x as i64).collect())
}

/// All positive roots of height at most the cutoff, plus real flags.
#[derive(Debug, Clone)]
pub struct RootSet {
    gcm: Arc<Gcm>,
    cutoff: i64,
    complete: bool,
    roots: Vec<Root>,
    real: Vec<bool>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootSet {
    pub fn gcm(&self) -> &Arc<Gcm> {
        &self.gcm
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    /// True when the set is the full (finite) positive root system.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Roots in (height, coeffs) order.
    pub fn iter(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter()
    }

    pub fn real_flag(&self, idx: usize) -> bool {
        self.real[idx]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// The unique positive root of maximal height. Only meaningful for
    /// complete finite root systems.
    pub fn highest_root(&self) -> &Root {
        self.roots.last().expect("nonempty root set")
    }

    fn contains_raw(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
    }

    fn check_height(&self, coeffs: &[i64]) -> Result<(), KacError> {
        if self.complete {
            return Ok(());
        }
        let h: i64 = coeffs.iter().map(|c| c.abs()).sum();
        let limit = self.cutoff - 4;
        if h > limit {
            return Err(KacError::CutoffExceeded {
                label: self.gcm.label().to_string(),
                height: h,
                limit,
            });
        }
        Ok(())
    }

    /// Positive-root membership. Fails loudly when the query sits too
    /// close to a truncated cutoff to be answered confidently.
    pub fn contains(&self, coeffs: &[i64]) -> Result<bool, KacError> {
        self.check_height(coeffs)?;
        Ok(self.contains_raw(coeffs))
    }

    /// Membership among positive or negative roots.
    pub fn is_root(&self, coeffs: &[i64]) -> Result<bool, KacError> {
        self.check_height(coeffs)?;
        if coeffs.iter().all(|&c| c >= 0) {
            return Ok(self.contains_raw(coeffs));
        }
        if coeffs.iter().all(|&c| c <= 0) {
            let neg: Vec<i64> = coeffs.iter().map(|&c| -c).collect();
            return Ok(self.contains_raw(&neg));
        }
        Ok(false)
    }

    /// Real flag of a positive root in the set.
    pub fn is_real(&self, coeffs: &[i64]) -> Result<Option<bool>, KacError> {
        self.check_height(coeffs)?;
        Ok(self.index.get(coeffs).map(|&i| self.real[i]))
    }
}

/// Generates all positive roots of height <= `cutoff` by the root-string
/// rule: for a known root `beta` and node `i`, let `p` be the length of
/// the descending string; `beta + alpha_i` is a root exactly when
/// `p - <beta, alpha_i^vee> > 0`.
pub fn generate_roots(gcm: &Arc<Gcm>, cutoff: i64) -> Result<RootSet, KacError> {
    assert!(cutoff >= 1, "height cutoff must be >= 1");
    let n = gcm.node_count();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut roots: Vec<Root> = Vec::new();
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); (cutoff + 1) as usize];
    for i in 0..n {
        let r = Root::simple(i, n);
        index.insert(r.coeffs.clone(), roots.len());
        levels[1].push(roots.len());
        roots.push(r);
    }
    let mut complete = false;
    for h in 1..cutoff {
        if levels[h as usize].is_empty() {
            // No roots at this height: for finite systems (and only
            // there) the generation has saturated.
            complete = gcm.is_finite();
            break;
        }
        for t in 0..levels[h as usize].len() {
            let idx = levels[h as usize][t];
            for i in 0..n {
                let beta = roots[idx].clone();
                let mut p = 0i64;
                let mut down = beta.coeffs.clone();
                loop {
                    down[i] -= 1;
                    if down.iter().all(|&c| c >= 0) && index.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - gcm.pairing_unchecked(&beta.coeffs, i);
                if q > 0 {
                    let mut up = beta.coeffs;
                    up[i] += 1;
                    if !index.contains_key(&up) {
                        index.insert(up.clone(), roots.len());
                        levels[(h + 1) as usize].push(roots.len());
                        roots.push(Root::new(up));
                    }
                }
            }
        }
    }
    if gcm.is_finite() && !complete {
        // Cutoff reached while new roots may still exist at the boundary.
        complete = levels[cutoff as usize].is_empty();
    }
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by_key(|&i| (roots[i].height(), roots[i].coeffs.clone()));
    let roots: Vec<Root> = order.iter().map(|&i| roots[i].clone()).collect();
    let real: Vec<bool> = roots.iter().map(|r| gcm.is_real_root(r)).collect();
    let index: HashMap<Vec<i64>, usize> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.coeffs.clone(), i))
        .collect();
    Ok(RootSet {
        gcm: Arc::clone(gcm),
        cutoff,
        complete,
        roots,
        real,
        index,
    })
}

/// Default height cutoff for a diagram: large enough that every
/// membership query made by the embedding checks stays clearly below the
/// truncation boundary. Finite diagrams use a bound past the highest
/// root so generation saturates.
pub fn default_cutoff(gcm: &Arc<Gcm>) -> Result<i64, KacError> {
    match gcm.kind() {
        DiagramKind::Finite => Ok(64),
        DiagramKind::Affine => {
            // Image roots of a stretch embedding sit within a few delta
            // shifts of the finite highest root (up to three for twisted
            // diagrams), and closure checks query sums of two of them.
            let marks = gcm.null_root_marks()?;
            let delta_h: i64 = marks.iter().sum();
            Ok(6 * delta_h + 4)
        }
    }
}

fn finite_entries(family: char, n: usize) -> Option<(Vec<Vec<i64>>, Vec<i64>)> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let path_edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match (family, n) {
        ('A', 1..=MAX_RANK) => {
            for i in 0..n - 1 {
                path_edge(&mut a, i, i + 1);
            }
            Some((a, vec![1; n]))
        }
        ('B', 2..=MAX_RANK) => {
            for i in 0..n - 1 {
                path_edge(&mut a, i, i + 1);
            }
            a[n - 1][n - 2] = -2; // <alpha_{n-1}, alpha_n^vee> = -2
            let mut d = vec![2; n];
            d[n - 1] = 1;
            Some((a, d))
        }
        ('C', 2..=MAX_RANK) => {
            for i in 0..n - 1 {
                path_edge(&mut a, i, i + 1);
            }
            a[n - 2][n - 1] = -2;
            let mut d = vec![1; n];
            d[n - 1] = 2;
            Some((a, d))
        }
        ('D', 4..=MAX_RANK) => {
            for i in 0..n - 2 {
                path_edge(&mut a, i, i + 1);
            }
            a[n - 1][n - 2] = 0;
            a[n - 2][n - 1] = 0;
            path_edge(&mut a, n - 3, n - 1);
            Some((a, vec![1; n]))
        }
        ('E', 6..=8) => {
            // Bourbaki: path 1-3-4-5-..-n, node 2 attached to node 4.
            path_edge(&mut a, 0, 2);
            path_edge(&mut a, 1, 3);
            for i in 2..n - 1 {
                path_edge(&mut a, i, i + 1);
            }
            Some((a, vec![1; n]))
        }
        ('F', 4) => {
            path_edge(&mut a, 0, 1);
            path_edge(&mut a, 2, 3);
            a[1][2] = -1; // <alpha_3, alpha_2^vee>
            a[2][1] = -2; // <alpha_2, alpha_3^vee>
            Some((a, vec![2, 2, 1, 1]))
        }
        ('G', 2) => {
            // Convention here: alpha_1 long, alpha_2 short, so the
            // highest root is 2 alpha_1 + 3 alpha_2.
            a[0][1] = -1;
            a[1][0] = -3;
            Some((a, vec![3, 1]))
        }
        _ => None,
    }
}

/// Untwisted affinization: appends node 0 with `alpha_0 = delta - theta`.
fn affinize(label: &str, finite: &Arc<Gcm>) -> Result<Arc<Gcm>, KacError> {
    let n = finite.node_count();
    let roots = generate_roots(finite, 64)?;
    assert!(roots.is_complete());
    let theta = roots.highest_root().clone();
    let theta_cov = finite.coroot_coeffs(&theta.coeffs)?;
    let mut a = vec![vec![0i64; n + 1]; n + 1];
    a[0][0] = 2;
    for j in 0..n {
        // <alpha_j, alpha_0^vee> = -<alpha_j, theta^vee>
        a[0][j + 1] = -(0..n)
            .map(|t| theta_cov[t] * finite.coroot_row(t)[j])
            .sum::<i64>();
        // <alpha_0, alpha_j^vee> = -<theta, alpha_j^vee>
        a[j + 1][0] = -finite.pairing(&theta.coeffs, j)?;
        for k in 0..n {
            a[j + 1][k + 1] = finite.coroot_row(j)[k];
        }
    }
    let mut d = vec![finite.norm(&theta.coeffs) / 2];
    d.extend_from_slice(finite.symmetrizer());
    Gcm::new(label, a, d)
}

/// Looks up a diagram by label, e.g. `"E8"`, `"G2~1"`, `"D4~3"`.
///
/// Finite labels follow Bourbaki indexing; affine labels `X_n~1` are the
/// untwisted affinizations with the added node indexed 0; the twisted
/// diagrams `D4~3` and `E6~2` are entered from the standard tables.
pub fn catalog(label: &str) -> Result<Arc<Gcm>, KacError> {
    let err = || KacError::UnsupportedType(label.to_string());
    let (base, twist) = match label.split_once('~') {
        None => (label, None),
        Some((b, t)) => (b, Some(t.parse::<u32>().map_err(|_| err())?)),
    };
    let mut chars = base.chars();
    let family = chars.next().ok_or_else(err)?;
    let rank: usize = chars.as_str().parse().map_err(|_| err())?;
    match twist {
        None => {
            let (a, d) = finite_entries(family, rank).ok_or_else(err)?;
            Gcm::new(label, a, d)
        }
        Some(1) => {
            let finite = catalog(base)?;
            affinize(label, &finite)
        }
        Some(3) if base == "D4" => Gcm::new(
            label,
            vec![vec![2, -1, 0], vec![-1, 2, -3], vec![0, -1, 2]],
            vec![1, 1, 3],
        ),
        Some(2) if base == "E6" => Gcm::new(
            label,
            vec![
                vec![2, -1, 0, 0, 0],
                vec![-1, 2, -1, 0, 0],
                vec![0, -1, 2, -2, 0],
                vec![0, 0, -1, 2, -1],
                vec![0, 0, 0, -1, 2],
            ],
            vec![1, 1, 1, 2, 2],
        ),
        _ => Err(err()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_catalog() {
        let g = catalog("A2").unwrap();
        assert_eq!(g.coroot_row(0), &[2, -1]);
        assert_eq!(g.coroot_row(1), &[-1, 2]);
        assert_eq!(g.symmetrizer(), &[1, 1]);
        assert!(g.is_finite());
    }

    #[test]
    fn g2_catalog() {
        let g = catalog("G2").unwrap();
        let offdiag = [g.coroot_row(0)[1], g.coroot_row(1)[0]];
        assert!(offdiag.contains(&-1) && offdiag.contains(&-3));
        assert!(g.is_finite());
    }

    #[test]
    fn unknown_label_rejected() {
        assert!(matches!(catalog("Z9"), Err(KacError::UnsupportedType(_))));
        assert!(matches!(catalog("A2~7"), Err(KacError::UnsupportedType(_))));
    }

    #[test]
    fn e8_affine_kernel_is_marks() {
        let g = catalog("E8~1").unwrap();
        assert_eq!(g.kind(), DiagramKind::Affine);
        let marks = g.null_root_marks().unwrap();
        // Kernel vector, nonzero, annihilated by every row.
        assert!(marks.iter().all(|&m| m > 0));
        for i in 0..9 {
            let s: i64 = (0..9).map(|j| g.coroot_row(i)[j] * marks[j]).sum();
            assert_eq!(s, 0);
        }
        assert_eq!(marks.iter().max(), Some(&6));
        assert_eq!(marks.iter().sum::<i64>(), 30);
    }

    #[test]
    fn a1_affine_marks() {
        let g = catalog("A1~1").unwrap();
        assert_eq!(g.null_root_marks().unwrap(), vec![1, 1]);
    }

    #[test]
    fn g2_affine_marks() {
        let g = catalog("G2~1").unwrap();
        let marks = g.null_root_marks().unwrap();
        assert!(marks.iter().all(|&m| m <= 3));
        assert_eq!(marks[0], 1);
    }

    #[test]
    fn a2_roots() {
        let g = catalog("A2").unwrap();
        let rs = generate_roots(&g, 10).unwrap();
        let coeffs: Vec<&[i64]> = rs.iter().map(|r| r.coeffs.as_slice()).collect();
        assert_eq!(coeffs, vec![&[0, 1][..], &[1, 0], &[1, 1]]);
        assert!(rs.is_complete());
    }

    #[test]
    fn g2_root_count() {
        let g = catalog("G2").unwrap();
        let rs = generate_roots(&g, 10).unwrap();
        assert_eq!(rs.len(), 6); // (14 - 2) / 2
        assert_eq!(rs.highest_root().coeffs, vec![2, 3]);
    }

    #[test]
    fn e8_root_count() {
        let g = catalog("E8").unwrap();
        let rs = generate_roots(&g, 40).unwrap();
        assert_eq!(rs.len(), 120); // (248 - 8) / 2
    }

    #[test]
    fn pairing_examples() {
        let g = catalog("A2").unwrap();
        assert_eq!(g.pairing(&[1, 0], 0).unwrap(), 2);
        assert_eq!(g.pairing(&[0, 1], 0).unwrap(), -1);
        assert_eq!(g.pairing(&[1, 1], 0).unwrap(), 1);
        assert!(matches!(
            g.pairing(&[1, 0], 5),
            Err(KacError::InvalidNode(..))
        ));
    }

    #[test]
    fn coroot_examples() {
        let a2 = catalog("A2").unwrap();
        assert_eq!(a2.coroot_coeffs(&[1, 0]).unwrap(), vec![1, 0]);
        assert_eq!(a2.coroot_coeffs(&[1, 1]).unwrap(), vec![1, 1]);
        let g2 = catalog("G2").unwrap();
        let theta = [2, 3];
        let cov = g2.coroot_coeffs(&theta).unwrap();
        let pairing: i64 = (0..2)
            .map(|i| cov[i] * g2.pairing(&theta, i).unwrap())
            .sum();
        assert_eq!(pairing, 2);
    }

    #[test]
    fn imaginary_root_has_no_coroot() {
        let g = catalog("A1~1").unwrap();
        assert!(matches!(
            g.coroot_coeffs(&[1, 1]),
            Err(KacError::NoCoroot(_))
        ));
    }

    #[test]
    fn affine_delta_strings() {
        for label in ["G2~1", "D4~3", "E6~2", "F4~1"] {
            let g = catalog(label).unwrap();
            let marks = g.null_root_marks().unwrap();
            let delta_h: i64 = marks.iter().sum();
            let rs = generate_roots(&g, 4 * delta_h).unwrap();
            for (idx, r) in rs.iter().enumerate() {
                // Imaginary <=> positive multiple of delta.
                let k = r.coeffs[0] / marks[0];
                let is_delta_multiple =
                    k >= 1 && r.coeffs.iter().zip(&marks).all(|(&c, &m)| c == k * m);
                assert_eq!(
                    !rs.real_flag(idx),
                    is_delta_multiple,
                    "{label}: {:?}",
                    r.coeffs
                );
                // delta-string property below the cutoff. In a twisted
                // diagram of order r, long real roots recur every r*delta.
                let twist: i64 = label.split('~').nth(1).unwrap().parse().unwrap();
                let shift = if g.norm(&r.coeffs) == g.long_norm() {
                    twist
                } else {
                    1
                };
                let shifted: Vec<i64> = r
                    .coeffs
                    .iter()
                    .zip(&marks)
                    .map(|(&c, &m)| c + shift * m)
                    .collect();
                if r.height() + shift * delta_h <= rs.cutoff() {
                    assert!(
                        rs.contains(&shifted).is_err() || rs.contains(&shifted).unwrap(),
                        "{label}: {:?} + {shift}delta missing",
                        r.coeffs
                    );
                }
            }
        }
    }

    #[test]
    fn symmetrizer_symmetry() {
        for label in ["A5", "B4", "C4", "D5", "E6", "F4", "G2", "E8~1", "D4~3", "E6~2"] {
            let g = catalog(label).unwrap();
            let d = g.symmetrizer();
            for i in 0..g.node_count() {
                for j in 0..g.node_count() {
                    assert_eq!(d[i] * g.coroot_row(i)[j], d[j] * g.coroot_row(j)[i]);
                }
            }
        }
    }

    #[test]
    fn cutoff_query_fails_loudly() {
        let g = catalog("A1~1").unwrap();
        let rs = generate_roots(&g, 8).unwrap();
        let far = vec![50, 50];
        assert!(matches!(
            rs.contains(&far),
            Err(KacError::CutoffExceeded { .. })
        ));
    }

    #[test]
    fn reflection_stability() {
        for label in ["A3", "B3", "G2", "G2~1"] {
            let g = catalog(label).unwrap();
            let rs = generate_roots(&g, 12).unwrap();
            for r in rs.iter() {
                for i in 0..g.node_count() {
                    let img = g.reflect_root(i, r);
                    let margin = g.pairing(&r.coeffs, i).unwrap().abs();
                    if img.is_positive() && img.height() <= rs.cutoff() - margin {
                        assert!(
                            rs.contains(&img.coeffs).unwrap_or(true),
                            "{label}: s_{i}({:?}) missing",
                            r.coeffs
                        );
                    }
                }
            }
        }
    }
}
