//! The index category of pairs of finite ordinals.
//!
//! Objects are pairs `(m, n)`; a morphism `(m, n) → (k, l)` is a triple
//! `(φ, ψ, α)` of injections `φ: m → k`, `ψ: n → l` and a bijection `α`
//! from the complement of `φ` onto the complement of `ψ`. Morphisms exist
//! only when `k − m = l − n ≥ 0`; that common difference is the *shift*.
//! The category is symmetric monoidal: tensor is concatenation of pairs,
//! the symmetry is built from block shuffles.

use crate::fincomb::{
    block_shuffle, compose_injection, enumerate_injections, enumerate_partial_bijections,
    enumerate_permutations, factorial, Injection, PartialBijection, Permutation,
};
use crate::report::CheckReport;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JcatError {
    #[error("object mismatch: composing {f_dst} -> then -> {g_src}")]
    ObjectMismatch { f_dst: JObject, g_src: JObject },
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error(transparent)]
    Fincomb(#[from] crate::fincomb::FincombError),
}

/// An object `(m, n)`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(into = "(usize, usize)", from = "(usize, usize)")]
pub struct JObject {
    pub m: usize,
    pub n: usize,
}

impl JObject {
    pub fn new(m: usize, n: usize) -> Self {
        JObject { m, n }
    }
}

impl From<(usize, usize)> for JObject {
    fn from((m, n): (usize, usize)) -> Self {
        JObject { m, n }
    }
}

impl From<JObject> for (usize, usize) {
    fn from(a: JObject) -> Self {
        (a.m, a.n)
    }
}

impl fmt::Display for JObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A validated morphism `(φ, ψ, α)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "JMorphismWire", into = "JMorphismWire")]
pub struct JMorphism {
    src: JObject,
    dst: JObject,
    phi: Injection,
    psi: Injection,
    alpha: PartialBijection,
}

#[derive(Serialize, Deserialize)]
struct JMorphismWire {
    src: (usize, usize),
    dst: (usize, usize),
    phi: Vec<usize>,
    psi: Vec<usize>,
    /// Images of the sorted complement of `phi`, as elements of the
    /// complement of `psi`.
    alpha: Vec<usize>,
}

impl TryFrom<JMorphismWire> for JMorphism {
    type Error = JcatError;
    fn try_from(w: JMorphismWire) -> Result<Self, Self::Error> {
        let src = JObject::new(w.src.0, w.src.1);
        let dst = JObject::new(w.dst.0, w.dst.1);
        let phi = Injection::new(dst.m, w.phi)?;
        let psi = Injection::new(dst.n, w.psi)?;
        let alpha =
            PartialBijection::new(phi.sorted_complement(), psi.sorted_complement(), w.alpha)?;
        JMorphism::new(src, dst, phi, psi, alpha)
    }
}

impl From<JMorphism> for JMorphismWire {
    fn from(f: JMorphism) -> Self {
        JMorphismWire {
            src: f.src.into(),
            dst: f.dst.into(),
            phi: f.phi.images().to_vec(),
            psi: f.psi.images().to_vec(),
            alpha: f.alpha.images().to_vec(),
        }
    }
}

impl JMorphism {
    pub fn new(
        src: JObject,
        dst: JObject,
        phi: Injection,
        psi: Injection,
        alpha: PartialBijection,
    ) -> Result<Self, JcatError> {
        if phi.domain_size() != src.m || phi.codomain_size() != dst.m {
            return Err(JcatError::InvalidMorphism(format!(
                "phi has shape {}→{}, expected {}→{}",
                phi.domain_size(),
                phi.codomain_size(),
                src.m,
                dst.m
            )));
        }
        if psi.domain_size() != src.n || psi.codomain_size() != dst.n {
            return Err(JcatError::InvalidMorphism(format!(
                "psi has shape {}→{}, expected {}→{}",
                psi.domain_size(),
                psi.codomain_size(),
                src.n,
                dst.n
            )));
        }
        if alpha.source_elements() != phi.sorted_complement().as_slice() {
            return Err(JcatError::InvalidMorphism(
                "alpha sources differ from the complement of phi".into(),
            ));
        }
        if alpha.target_elements() != psi.sorted_complement().as_slice() {
            return Err(JcatError::InvalidMorphism(
                "alpha targets differ from the complement of psi".into(),
            ));
        }
        Ok(JMorphism { src, dst, phi, psi, alpha })
    }

    pub fn src(&self) -> JObject {
        self.src
    }

    pub fn dst(&self) -> JObject {
        self.dst
    }

    pub fn phi(&self) -> &Injection {
        &self.phi
    }

    pub fn psi(&self) -> &Injection {
        &self.psi
    }

    pub fn alpha(&self) -> &PartialBijection {
        &self.alpha
    }

    /// The common difference `dst.m − src.m = dst.n − src.n`.
    pub fn shift(&self) -> usize {
        self.dst.m - self.src.m
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.phi.is_identity() && self.psi.is_identity()
    }

    /// Compact deterministic label, unique within a hom-set.
    pub fn short_label(&self) -> String {
        let join = |xs: &[usize]| {
            xs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
        };
        let alpha = self
            .alpha
            .source_elements()
            .iter()
            .zip(self.alpha.images())
            .map(|(s, t)| format!("{s}>{t}"))
            .collect::<Vec<_>>()
            .join(",");
        format!("[{}|{}|{}]", join(self.phi.images()), join(self.psi.images()), alpha)
    }
}

impl fmt::Display for JMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}→{}", self.short_label(), self.src, self.dst)
    }
}

/// Identity morphism at `a`.
pub fn identity_j(a: JObject) -> JMorphism {
    JMorphism {
        src: a,
        dst: a,
        phi: Injection::identity(a.m),
        psi: Injection::identity(a.n),
        alpha: PartialBijection::empty(),
    }
}

/// `g ∘ f`: first `f`, then `g`. The composite bijection sends an element
/// of the composite complement through `g∘α_f` when it comes from the
/// complement of `f`, and through `α_g` otherwise.
pub fn compose_j(g: &JMorphism, f: &JMorphism) -> Result<JMorphism, JcatError> {
    if f.dst != g.src {
        return Err(JcatError::ObjectMismatch { f_dst: f.dst, g_src: g.src });
    }
    let phi = compose_injection(&g.phi, &f.phi)?;
    let psi = compose_injection(&g.psi, &f.psi)?;
    let sources = phi.sorted_complement();
    let targets = psi.sorted_complement();
    let images = sources
        .iter()
        .map(|&x| match g.phi.preimage(x) {
            Some(j) => {
                let t = f.alpha.apply(j).expect("preimage under g.phi misses the image of f.phi");
                g.psi.apply(t)
            }
            None => g.alpha.apply(x).expect("element outside im(g.phi) lies in g's complement"),
        })
        .collect();
    let alpha = PartialBijection::new(sources, targets, images)?;
    JMorphism::new(f.src, g.dst, phi, psi, alpha)
}

/// `k!·l!/p!` when `k−m = l−n = p ≥ 0`, else 0. Cross-checked against
/// `enumerate_hom` in tests; never trusted on its own.
pub fn count_hom(src: JObject, dst: JObject) -> usize {
    if dst.m < src.m || dst.n < src.n || dst.m - src.m != dst.n - src.n {
        return 0;
    }
    let p = dst.m - src.m;
    factorial(dst.m) * factorial(dst.n) / factorial(p)
}

/// All morphisms `src → dst`, in lexicographic order of `(φ, ψ, α)`.
pub fn enumerate_hom(src: JObject, dst: JObject) -> Vec<JMorphism> {
    if dst.m < src.m || dst.n < src.n || dst.m - src.m != dst.n - src.n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for phi in enumerate_injections(src.m, dst.m) {
        let phi_comp = phi.sorted_complement();
        for psi in enumerate_injections(src.n, dst.n) {
            let psi_comp = psi.sorted_complement();
            for alpha in enumerate_partial_bijections(&phi_comp, &psi_comp) {
                out.push(JMorphism {
                    src,
                    dst,
                    phi: phi.clone(),
                    psi: psi.clone(),
                    alpha,
                });
            }
        }
    }
    out
}

/// Look up a morphism `src → dst` by its `short_label`.
pub fn find_hom_by_label(src: JObject, dst: JObject, label: &str) -> Option<JMorphism> {
    enumerate_hom(src, dst).into_iter().find(|f| f.short_label() == label)
}

/// Concatenation of objects.
pub fn tensor_obj(a: JObject, b: JObject) -> JObject {
    JObject::new(a.m + b.m, a.n + b.n)
}

/// Blockwise tensor of morphisms: the second factor acts past the first
/// factor's target sizes.
pub fn tensor_mor(f: &JMorphism, g: &JMorphism) -> JMorphism {
    let src = tensor_obj(f.src, g.src);
    let dst = tensor_obj(f.dst, g.dst);
    let phi_images: Vec<usize> = f
        .phi
        .images()
        .iter()
        .copied()
        .chain(g.phi.images().iter().map(|&v| v + f.dst.m))
        .collect();
    let psi_images: Vec<usize> = f
        .psi
        .images()
        .iter()
        .copied()
        .chain(g.psi.images().iter().map(|&v| v + f.dst.n))
        .collect();
    let phi = Injection::new(dst.m, phi_images).expect("blockwise images stay injective");
    let psi = Injection::new(dst.n, psi_images).expect("blockwise images stay injective");
    let sources: Vec<usize> = f
        .alpha
        .source_elements()
        .iter()
        .copied()
        .chain(g.alpha.source_elements().iter().map(|&v| v + f.dst.m))
        .collect();
    let targets: Vec<usize> = f
        .alpha
        .target_elements()
        .iter()
        .copied()
        .chain(g.alpha.target_elements().iter().map(|&v| v + f.dst.n))
        .collect();
    let images: Vec<usize> = f
        .alpha
        .images()
        .iter()
        .copied()
        .chain(g.alpha.images().iter().map(|&v| v + f.dst.n))
        .collect();
    let alpha =
        PartialBijection::new(sources, targets, images).expect("block union of bijections");
    JMorphism { src, dst, phi, psi, alpha }
}

/// The symmetry `a⊗b → b⊗a`: both legs are block shuffles, the complement
/// bijection is empty.
pub fn symmetry_iso(a: JObject, b: JObject) -> JMorphism {
    let phi = injection_of_permutation(&block_shuffle(a.m, b.m));
    let psi = injection_of_permutation(&block_shuffle(a.n, b.n));
    JMorphism {
        src: tensor_obj(a, b),
        dst: tensor_obj(b, a),
        phi,
        psi,
        alpha: PartialBijection::empty(),
    }
}

pub fn injection_of_permutation(p: &Permutation) -> Injection {
    Injection::new(p.degree(), p.images().to_vec()).expect("permutations are injective")
}

/// A pair of permutations viewed as an automorphism of `(a.degree, b.degree)`.
pub fn perm_pair_morphism(a: &Permutation, b: &Permutation) -> JMorphism {
    let obj = JObject::new(a.degree(), b.degree());
    JMorphism {
        src: obj,
        dst: obj,
        phi: injection_of_permutation(a),
        psi: injection_of_permutation(b),
        alpha: PartialBijection::empty(),
    }
}

/// The standard map `(i, n) → (i+p, n+p)`: front inclusions on both legs,
/// order-preserving bijection `i+t ↦ n+t` on the complements.
pub fn standard_map(i: usize, n: usize, p: usize) -> JMorphism {
    let phi = Injection::new(i + p, (1..=i).collect()).expect("front inclusion");
    let psi = Injection::new(n + p, (1..=n).collect()).expect("front inclusion");
    let sources: Vec<usize> = (i + 1..=i + p).collect();
    let targets: Vec<usize> = (n + 1..=n + p).collect();
    let alpha = PartialBijection::new(sources, targets.clone(), targets)
        .expect("order-preserving complement bijection");
    JMorphism {
        src: JObject::new(i, n),
        dst: JObject::new(i + p, n + p),
        phi,
        psi,
        alpha,
    }
}

/// Embed `g` of degree `p` as the pair permuting the last `p` elements of
/// degrees `i+p` and `n+p`.
pub fn iota_embed(g: &Permutation, i: usize, n: usize) -> (Permutation, Permutation) {
    (
        Permutation::identity(i).block_sum(g),
        Permutation::identity(n).block_sum(g),
    )
}

/// Canonical decomposition: `f = (a, b) ∘ Ψ_{i,n,p}` with the complement of
/// `φ` enumerated in increasing order. Returns `(a, b, p)`.
pub fn decompose(f: &JMorphism) -> (Permutation, Permutation, usize) {
    let i = f.src.m;
    let n = f.src.n;
    let p = f.shift();
    let complement = f.phi.sorted_complement();
    let a_images: Vec<usize> =
        f.phi.images().iter().copied().chain(complement.iter().copied()).collect();
    let b_images: Vec<usize> = f
        .psi
        .images()
        .iter()
        .copied()
        .chain(complement.iter().map(|&c| f.alpha.apply(c).expect("complement element")))
        .collect();
    let a = Permutation::new(a_images).expect("phi images plus complement fill the target");
    let b = Permutation::new(b_images).expect("psi images plus alpha images fill the target");
    debug_assert_eq!(a.degree(), i + p);
    debug_assert_eq!(b.degree(), n + p);
    (a, b, p)
}

/// `(a, b) ∘ Ψ_{src.m, src.n, p}`.
pub fn recompose(src: JObject, a: &Permutation, b: &Permutation, p: usize) -> JMorphism {
    compose_j(&perm_pair_morphism(a, b), &standard_map(src.m, src.n, p))
        .expect("permutation pair composes with the standard map")
}

/// All objects `(m, n)` with `m ≤ m_max`, `n ≤ n_max`, sorted.
pub fn objects_in_window(m_max: usize, n_max: usize) -> Vec<JObject> {
    let mut out = Vec::new();
    for m in 0..=m_max {
        for n in 0..=n_max {
            out.push(JObject::new(m, n));
        }
    }
    out
}

/// All morphisms between window objects with shift at most `max_shift`.
pub fn morphisms_in_window(m_max: usize, n_max: usize, max_shift: usize) -> Vec<JMorphism> {
    let mut out = Vec::new();
    for src in objects_in_window(m_max, n_max) {
        for p in 0..=max_shift {
            let dst = JObject::new(src.m + p, src.n + p);
            if dst.m <= m_max && dst.n <= n_max {
                out.extend(enumerate_hom(src, dst));
            }
        }
    }
    out
}

/// DOT rendering of the truncated category: objects as nodes, edges
/// labelled by hom-set sizes (identity homs drawn as self-loops).
pub fn dot_category(m_max: usize, n_max: usize) -> String {
    let mut out = String::from("digraph jcat {\n  rankdir=LR;\n");
    let objects = objects_in_window(m_max, n_max);
    for a in &objects {
        out.push_str(&format!("  \"{a}\";\n"));
    }
    for a in &objects {
        for b in &objects {
            let c = count_hom(*a, *b);
            if c > 0 {
                out.push_str(&format!("  \"{a}\" -> \"{b}\" [label=\"{c}\"];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Exhaustive category-axiom check on the window: composites close, both
/// identity laws hold, and composition is associative over all composable
/// triples with shifts bounded by `max_shift`.
pub fn check_category_axioms(m_max: usize, n_max: usize, max_shift: usize) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "category axioms, window ({m_max},{n_max}), shift ≤ {max_shift}"
    ));
    let morphisms = morphisms_in_window(m_max, n_max, max_shift);

    for f in &morphisms {
        let left = compose_j(&identity_j(f.dst()), f).expect("identity composes");
        let right = compose_j(f, &identity_j(f.src())).expect("identity composes");
        report.tick();
        if &left != f {
            report.fail(
                "category.identity.left",
                json!({"f": f.short_label(), "src": f.src(), "dst": f.dst()}),
                format!("id ∘ {f} differs from {f}"),
            );
        }
        report.tick();
        if &right != f {
            report.fail(
                "category.identity.right",
                json!({"f": f.short_label(), "src": f.src(), "dst": f.dst()}),
                format!("{f} ∘ id differs from {f}"),
            );
        }
    }

    // Group morphisms by source object for the triple loop.
    let by_src = |obj: JObject| morphisms.iter().filter(move |f| f.src() == obj);
    for f in &morphisms {
        for g in by_src(f.dst()) {
            let gf = match compose_j(g, f) {
                Ok(gf) => gf,
                Err(e) => {
                    report.fail(
                        "category.compose",
                        json!({"f": f.short_label(), "g": g.short_label()}),
                        format!("composable pair failed to compose: {e}"),
                    );
                    continue;
                }
            };
            for h in by_src(g.dst()) {
                let hg = compose_j(h, g).expect("composable");
                let left = compose_j(h, &gf).expect("composable");
                let right = compose_j(&hg, f).expect("composable");
                report.tick();
                if left != right {
                    report.fail(
                        "category.associativity",
                        json!({
                            "f": f.short_label(),
                            "g": g.short_label(),
                            "h": h.short_label(),
                        }),
                        format!("h∘(g∘f) ≠ (h∘g)∘f for f={f}, g={g}, h={h}"),
                    );
                }
            }
        }
    }
    report
}
