//! Exact combinatorics of finite ordinals: injections, permutations,
//! partial bijections, complements, block shuffles, and enumeration.
//!
//! The ordinal `n` is the set {1, …, n}. All values below speak 1-indexed
//! semantics; vectors are 0-indexed storage (`images[j - 1]` is the image
//! of `j`).

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FincombError {
    #[error("injection images {images:?} are not pairwise distinct values in 1..={codomain}")]
    InvalidInjection { codomain: usize, images: Vec<usize> },
    #[error("injection domain {domain} exceeds codomain {codomain}")]
    DomainTooLarge { domain: usize, codomain: usize },
    #[error("size mismatch composing maps: inner codomain {inner} vs outer domain {outer}")]
    SizeMismatch { inner: usize, outer: usize },
    #[error("images {images:?} are not a permutation of 1..={degree}")]
    InvalidPermutation { degree: usize, images: Vec<usize> },
    #[error("invalid partial bijection: {0}")]
    InvalidPartialBijection(String),
}

/// An injection `domain → codomain` between finite ordinals, stored as the
/// list of images of 1, …, domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "InjectionWire", into = "InjectionWire")]
pub struct Injection {
    codomain_size: usize,
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct InjectionWire {
    dom: usize,
    cod: usize,
    img: Vec<usize>,
}

impl TryFrom<InjectionWire> for Injection {
    type Error = FincombError;
    fn try_from(w: InjectionWire) -> Result<Self, Self::Error> {
        if w.img.len() != w.dom {
            return Err(FincombError::InvalidInjection { codomain: w.cod, images: w.img });
        }
        Injection::new(w.cod, w.img)
    }
}

impl From<Injection> for InjectionWire {
    fn from(f: Injection) -> Self {
        InjectionWire { dom: f.domain_size(), cod: f.codomain_size, img: f.images }
    }
}

impl Injection {
    pub fn new(codomain_size: usize, images: Vec<usize>) -> Result<Self, FincombError> {
        if images.len() > codomain_size {
            return Err(FincombError::DomainTooLarge {
                domain: images.len(),
                codomain: codomain_size,
            });
        }
        let mut seen = vec![false; codomain_size];
        for &v in &images {
            if v == 0 || v > codomain_size || seen[v - 1] {
                return Err(FincombError::InvalidInjection { codomain: codomain_size, images });
            }
            seen[v - 1] = true;
        }
        Ok(Injection { codomain_size, images })
    }

    pub fn identity(n: usize) -> Self {
        Injection { codomain_size: n, images: (1..=n).collect() }
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `j` (1-indexed).
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.domain_size() == self.codomain_size
            && self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Preimage of `v`, if `v` is hit.
    pub fn preimage(&self, v: usize) -> Option<usize> {
        self.images.iter().position(|&w| w == v).map(|i| i + 1)
    }

    /// Elements of the codomain not in the image, in increasing order.
    pub fn sorted_complement(&self) -> Vec<usize> {
        let mut hit = vec![false; self.codomain_size];
        for &v in &self.images {
            hit[v - 1] = true;
        }
        (1..=self.codomain_size).filter(|&v| !hit[v - 1]).collect()
    }
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose_injection(g: &Injection, f: &Injection) -> Result<Injection, FincombError> {
    if f.codomain_size != g.domain_size() {
        return Err(FincombError::SizeMismatch {
            inner: f.codomain_size,
            outer: g.domain_size(),
        });
    }
    let images = f.images.iter().map(|&j| g.apply(j)).collect();
    Injection::new(g.codomain_size, images)
}

/// All injections `m → k` in lexicographic order of their image lists.
/// Empty when `m > k`; exactly `k!/(k−m)!` entries otherwise.
pub fn enumerate_injections(m: usize, k: usize) -> Vec<Injection> {
    if m > k {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    let mut used = vec![false; k];
    fn rec(
        m: usize,
        k: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Injection>,
    ) {
        if current.len() == m {
            out.push(Injection { codomain_size: k, images: current.clone() });
            return;
        }
        for v in 1..=k {
            if !used[v - 1] {
                used[v - 1] = true;
                current.push(v);
                rec(m, k, current, used, out);
                current.pop();
                used[v - 1] = false;
            }
        }
    }
    rec(m, k, &mut current, &mut used, &mut out);
    out
}

/// A permutation of {1, …, degree}, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PermutationWire", into = "PermutationWire")]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationWire {
    deg: usize,
    img: Vec<usize>,
}

impl TryFrom<PermutationWire> for Permutation {
    type Error = FincombError;
    fn try_from(w: PermutationWire) -> Result<Self, Self::Error> {
        if w.img.len() != w.deg {
            return Err(FincombError::InvalidPermutation { degree: w.deg, images: w.img });
        }
        Permutation::new(w.img)
    }
}

impl From<Permutation> for PermutationWire {
    fn from(p: Permutation) -> Self {
        PermutationWire { deg: p.degree(), img: p.images }
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, FincombError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &v in &images {
            if v == 0 || v > degree || seen[v - 1] {
                return Err(FincombError::InvalidPermutation { degree, images });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Adjacent transposition `s_t` swapping `t` and `t+1` inside degree `n`.
    pub fn adjacent_transposition(n: usize, t: usize) -> Self {
        assert!(t >= 1 && t < n, "transposition index out of range");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(t - 1, t);
        Permutation { images }
    }

    /// Block sum: `self` on the first block, `other` shifted past it.
    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let p = self.degree();
        let images = self
            .images
            .iter()
            .copied()
            .chain(other.images.iter().map(|&v| v + p))
            .collect();
        Permutation { images }
    }

    /// Factor into a word of adjacent transpositions `s_{t}` so that the
    /// left-to-right composition (first letter applied last) equals `self`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        // Bubble sort the image table; the reversed swap sequence rebuilds `self`.
        let mut word = Vec::new();
        let mut cur: Vec<usize> = self.images.clone();
        let n = cur.len();
        loop {
            let mut swapped = false;
            for t in 1..n {
                if cur[t - 1] > cur[t] {
                    cur.swap(t - 1, t);
                    word.push(t);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        // cur is now the identity and self = word applied in reverse order;
        // reversing gives a word whose ordered product is self.
        word.reverse();
        word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// `g ∘ f`: first `f`, then `g`.
pub fn compose_permutation(g: &Permutation, f: &Permutation) -> Result<Permutation, FincombError> {
    if f.degree() != g.degree() {
        return Err(FincombError::SizeMismatch { inner: f.degree(), outer: g.degree() });
    }
    let images = f.images.iter().map(|&j| g.apply(j)).collect();
    Ok(Permutation { images })
}

/// The shuffle `χ_{p,q}` of degree `p+q`: `i ↦ i+q` for `i ≤ p`,
/// `i ↦ i−p` for `i > p`.
pub fn block_shuffle(p: usize, q: usize) -> Permutation {
    let images = (1..=p + q).map(|i| if i <= p { i + q } else { i - p }).collect();
    Permutation { images }
}

/// All permutations of degree `n` in lexicographic order of image tables.
pub fn enumerate_permutations(n: usize) -> Vec<Permutation> {
    enumerate_injections(n, n)
        .into_iter()
        .map(|f| Permutation { images: f.images })
        .collect()
}

/// A bijection between two subsets of ordinals, stored against sorted
/// element lists: the i-th source element maps to `images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartialBijectionWire", into = "PartialBijectionWire")]
pub struct PartialBijection {
    source_elements: Vec<usize>,
    target_elements: Vec<usize>,
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PartialBijectionWire {
    src: Vec<usize>,
    tgt: Vec<usize>,
    img: Vec<usize>,
}

impl TryFrom<PartialBijectionWire> for PartialBijection {
    type Error = FincombError;
    fn try_from(w: PartialBijectionWire) -> Result<Self, Self::Error> {
        PartialBijection::new(w.src, w.tgt, w.img)
    }
}

impl From<PartialBijection> for PartialBijectionWire {
    fn from(b: PartialBijection) -> Self {
        PartialBijectionWire { src: b.source_elements, tgt: b.target_elements, img: b.images }
    }
}

fn strictly_increasing(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

impl PartialBijection {
    pub fn new(
        source_elements: Vec<usize>,
        target_elements: Vec<usize>,
        images: Vec<usize>,
    ) -> Result<Self, FincombError> {
        if source_elements.len() != target_elements.len() {
            return Err(FincombError::InvalidPartialBijection(format!(
                "source has {} elements, target has {}",
                source_elements.len(),
                target_elements.len()
            )));
        }
        if images.len() != source_elements.len() {
            return Err(FincombError::InvalidPartialBijection(format!(
                "{} images for {} source elements",
                images.len(),
                source_elements.len()
            )));
        }
        if !strictly_increasing(&source_elements) || !strictly_increasing(&target_elements) {
            return Err(FincombError::InvalidPartialBijection(
                "element lists must be strictly increasing".into(),
            ));
        }
        let mut sorted = images.clone();
        sorted.sort_unstable();
        if sorted != target_elements {
            return Err(FincombError::InvalidPartialBijection(format!(
                "images {images:?} are not a permutation of the target elements {target_elements:?}"
            )));
        }
        Ok(PartialBijection { source_elements, target_elements, images })
    }

    pub fn empty() -> Self {
        PartialBijection { source_elements: vec![], target_elements: vec![], images: vec![] }
    }

    pub fn source_elements(&self) -> &[usize] {
        &self.source_elements
    }

    pub fn target_elements(&self) -> &[usize] {
        &self.target_elements
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.source_elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source_elements.is_empty()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.source_elements.binary_search(&x).ok().map(|i| self.images[i])
    }
}

/// All bijections from one sorted element set onto another of equal size.
pub fn enumerate_partial_bijections(src: &[usize], tgt: &[usize]) -> Vec<PartialBijection> {
    if src.len() != tgt.len() {
        return Vec::new();
    }
    enumerate_permutations(tgt.len())
        .into_iter()
        .map(|p| {
            let images = (1..=src.len()).map(|i| tgt[p.apply(i) - 1]).collect();
            PartialBijection::new(src.to_vec(), tgt.to_vec(), images)
                .expect("permuted targets form a bijection")
        })
        .collect()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
