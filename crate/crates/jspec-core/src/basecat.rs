//! The finite-set base category: carriers, maps, permutation-group actions
//! stored on adjacent-transposition generators, and the colimit primitives
//! (coproduct, product, quotient by generated relations).

use crate::fincomb::Permutation;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasecatError {
    #[error("duplicate label {0:?} in carrier")]
    DuplicateLabel(String),
    #[error("unknown label {label:?}")]
    UnknownLabel { label: String },
    #[error("map table is not total: missing {label:?}")]
    MissingEntry { label: String },
    #[error("map image {label:?} is not in the target carrier")]
    ImageOutsideTarget { label: String },
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("generator {which} of a group action is not a bijection of its carrier")]
    GeneratorNotBijective { which: String },
    #[error("group action violates the relation {relation} (generators {which})")]
    RelationViolated { relation: String, which: String },
    #[error("action degree mismatch: expected ({exp_l},{exp_r}), got ({got_l},{got_r})")]
    DegreeMismatch { exp_l: usize, exp_r: usize, got_l: usize, got_r: usize },
}

/// A finite set of distinct string labels, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct FinCarrier {
    elements: Vec<String>,
}

impl TryFrom<Vec<String>> for FinCarrier {
    type Error = BasecatError;
    fn try_from(v: Vec<String>) -> Result<Self, Self::Error> {
        FinCarrier::new(v)
    }
}

impl From<FinCarrier> for Vec<String> {
    fn from(c: FinCarrier) -> Self {
        c.elements
    }
}

impl FinCarrier {
    pub fn new(mut elements: Vec<String>) -> Result<Self, BasecatError> {
        elements.sort();
        for w in elements.windows(2) {
            if w[0] == w[1] {
                return Err(BasecatError::DuplicateLabel(w[0].clone()));
            }
        }
        Ok(FinCarrier { elements })
    }

    pub fn empty() -> Self {
        FinCarrier { elements: Vec::new() }
    }

    pub fn point(label: impl Into<String>) -> Self {
        FinCarrier { elements: vec![label.into()] }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn contains(&self, label: &str) -> bool {
        self.elements.binary_search_by(|e| e.as_str().cmp(label)).is_ok()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_str().cmp(label)).ok()
    }
}

/// A map of finite sets: a total table from source labels to target labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinMap {
    pub src: FinCarrier,
    pub dst: FinCarrier,
    table: BTreeMap<String, String>,
}

impl FinMap {
    pub fn new(
        src: FinCarrier,
        dst: FinCarrier,
        table: BTreeMap<String, String>,
    ) -> Result<Self, BasecatError> {
        for x in src.elements() {
            match table.get(x) {
                None => return Err(BasecatError::MissingEntry { label: x.clone() }),
                Some(y) if !dst.contains(y) => {
                    return Err(BasecatError::ImageOutsideTarget { label: y.clone() })
                }
                _ => {}
            }
        }
        for x in table.keys() {
            if !src.contains(x) {
                return Err(BasecatError::UnknownLabel { label: x.clone() });
            }
        }
        Ok(FinMap { src, dst, table })
    }

    pub fn identity(c: &FinCarrier) -> Self {
        let table = c.elements().iter().map(|x| (x.clone(), x.clone())).collect();
        FinMap { src: c.clone(), dst: c.clone(), table }
    }

    /// Build from a function on labels.
    pub fn from_fn(
        src: &FinCarrier,
        dst: &FinCarrier,
        f: impl Fn(&str) -> String,
    ) -> Result<Self, BasecatError> {
        let table = src.elements().iter().map(|x| (x.clone(), f(x))).collect();
        FinMap::new(src.clone(), dst.clone(), table)
    }

    pub fn apply(&self, x: &str) -> Option<&str> {
        self.table.get(x).map(|s| s.as_str())
    }

    pub fn table(&self) -> &BTreeMap<String, String> {
        &self.table
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.table.iter().all(|(x, y)| x == y)
    }

    pub fn is_bijection(&self) -> bool {
        if self.src.len() != self.dst.len() {
            return false;
        }
        let mut seen = std::collections::BTreeSet::new();
        self.table.values().all(|y| seen.insert(y))
    }

    /// `g ∘ f`: first `f`, then `g`.
    pub fn compose(g: &FinMap, f: &FinMap) -> Result<FinMap, BasecatError> {
        if f.dst != g.src {
            return Err(BasecatError::CarrierMismatch(
                "inner target differs from outer source".into(),
            ));
        }
        let table = f
            .table
            .iter()
            .map(|(x, y)| (x.clone(), g.table.get(y).expect("total table").clone()))
            .collect();
        Ok(FinMap { src: f.src.clone(), dst: g.dst.clone(), table })
    }
}

/// Union-find over `0..n` with path compression.
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    pub fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    /// Merge, keeping the smaller index as representative.
    pub fn union(&mut self, i: usize, j: usize) {
        let a = self.find(i);
        let b = self.find(j);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
    }
}

/// Quotient of a carrier by the equivalence generated by `relations`.
/// Class representatives are the lexicographically least members; returns
/// the quotient carrier and the projection.
pub fn quotient(
    carrier: &FinCarrier,
    relations: &[(String, String)],
) -> Result<(FinCarrier, FinMap), BasecatError> {
    let mut dsu = DisjointSets::new(carrier.len());
    for (a, b) in relations {
        let i = carrier
            .index_of(a)
            .ok_or_else(|| BasecatError::UnknownLabel { label: a.clone() })?;
        let j = carrier
            .index_of(b)
            .ok_or_else(|| BasecatError::UnknownLabel { label: b.clone() })?;
        dsu.union(i, j);
    }
    // Elements are sorted, so the least index in a class is the
    // lexicographically least label.
    let mut reps = Vec::new();
    let mut table = BTreeMap::new();
    for (i, x) in carrier.elements().iter().enumerate() {
        let r = dsu.find(i);
        if r == i {
            reps.push(x.clone());
        }
        table.insert(x.clone(), carrier.elements()[r].clone());
    }
    let quotient_carrier = FinCarrier::new(reps)?;
    let projection = FinMap::new(carrier.clone(), quotient_carrier.clone(), table)?;
    Ok((quotient_carrier, projection))
}

/// Tagged disjoint union with labels `"tag:elem"`; returns the carrier and
/// the injections of each part.
pub fn coproduct(parts: &[FinCarrier]) -> (FinCarrier, Vec<FinMap>) {
    let mut labels = Vec::new();
    for (tag, part) in parts.iter().enumerate() {
        for x in part.elements() {
            labels.push(format!("{tag}:{x}"));
        }
    }
    let total = FinCarrier::new(labels).expect("tags keep labels distinct");
    let injections = parts
        .iter()
        .enumerate()
        .map(|(tag, part)| {
            FinMap::from_fn(part, &total, |x| format!("{tag}:{x}"))
                .expect("tagged labels are present")
        })
        .collect();
    (total, injections)
}

/// Cartesian product with pair labels `"(x,y)"`; returns the carrier and
/// both projections.
pub fn product(a: &FinCarrier, b: &FinCarrier) -> (FinCarrier, FinMap, FinMap) {
    let mut labels = Vec::new();
    for x in a.elements() {
        for y in b.elements() {
            labels.push(pair_label(x, y));
        }
    }
    let total = FinCarrier::new(labels).expect("pair labels of distinct labels are distinct");
    let mut to_a = BTreeMap::new();
    let mut to_b = BTreeMap::new();
    for x in a.elements() {
        for y in b.elements() {
            let l = pair_label(x, y);
            to_a.insert(l.clone(), x.clone());
            to_b.insert(l, y.clone());
        }
    }
    let pa = FinMap::new(total.clone(), a.clone(), to_a).expect("projection is total");
    let pb = FinMap::new(total.clone(), b.clone(), to_b).expect("projection is total");
    (total, pa, pb)
}

pub fn pair_label(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

/// An action of a product of two symmetric groups on a carrier, stored as
/// bijections for the adjacent transpositions of each factor. Construction
/// verifies the Coxeter relations of both factors and cross-factor
/// commutation, which makes evaluation on arbitrary group elements
/// independent of the chosen factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAction {
    carrier: FinCarrier,
    left_degree: usize,
    right_degree: usize,
    left_gens: Vec<FinMap>,
    right_gens: Vec<FinMap>,
}

impl GroupAction {
    pub fn new(
        carrier: FinCarrier,
        degrees: (usize, usize),
        left_gens: Vec<FinMap>,
        right_gens: Vec<FinMap>,
    ) -> Result<Self, BasecatError> {
        let (i, n) = degrees;
        let expect_left = i.saturating_sub(1);
        let expect_right = n.saturating_sub(1);
        if left_gens.len() != expect_left || right_gens.len() != expect_right {
            return Err(BasecatError::DegreeMismatch {
                exp_l: expect_left,
                exp_r: expect_right,
                got_l: left_gens.len(),
                got_r: right_gens.len(),
            });
        }
        for (side, gens) in [("left", &left_gens), ("right", &right_gens)] {
            for (t, g) in gens.iter().enumerate() {
                if g.src != carrier || g.dst != carrier {
                    return Err(BasecatError::CarrierMismatch(format!(
                        "{side} generator {} is not an endomap of the carrier",
                        t + 1
                    )));
                }
                if !g.is_bijection() {
                    return Err(BasecatError::GeneratorNotBijective {
                        which: format!("{side} s_{}", t + 1),
                    });
                }
            }
        }
        let action = GroupAction { carrier, left_degree: i, right_degree: n, left_gens, right_gens };
        action.check_relations()?;
        Ok(action)
    }

    /// Trivial action of the named degrees.
    pub fn trivial(carrier: FinCarrier, degrees: (usize, usize)) -> Self {
        let id = FinMap::identity(&carrier);
        let left = vec![id.clone(); degrees.0.saturating_sub(1)];
        let right = vec![id; degrees.1.saturating_sub(1)];
        GroupAction {
            carrier,
            left_degree: degrees.0,
            right_degree: degrees.1,
            left_gens: left,
            right_gens: right,
        }
    }

    fn check_relations(&self) -> Result<(), BasecatError> {
        let sides = [("left", &self.left_gens), ("right", &self.right_gens)];
        for (side, gens) in sides {
            for (t, s) in gens.iter().enumerate() {
                let ss = FinMap::compose(s, s).expect("endomap");
                if !ss.is_identity() {
                    return Err(BasecatError::RelationViolated {
                        relation: "s² = id".into(),
                        which: format!("{side} s_{}", t + 1),
                    });
                }
            }
            for t in 0..gens.len().saturating_sub(1) {
                let a = &gens[t];
                let b = &gens[t + 1];
                let aba = FinMap::compose(a, &FinMap::compose(b, a).unwrap()).unwrap();
                let bab = FinMap::compose(b, &FinMap::compose(a, b).unwrap()).unwrap();
                if aba != bab {
                    return Err(BasecatError::RelationViolated {
                        relation: "braid".into(),
                        which: format!("{side} s_{}, s_{}", t + 1, t + 2),
                    });
                }
            }
            for t in 0..gens.len() {
                for u in t + 2..gens.len() {
                    let ab = FinMap::compose(&gens[t], &gens[u]).unwrap();
                    let ba = FinMap::compose(&gens[u], &gens[t]).unwrap();
                    if ab != ba {
                        return Err(BasecatError::RelationViolated {
                            relation: "distant commutation".into(),
                            which: format!("{side} s_{}, s_{}", t + 1, u + 1),
                        });
                    }
                }
            }
        }
        for (t, l) in self.left_gens.iter().enumerate() {
            for (u, r) in self.right_gens.iter().enumerate() {
                let lr = FinMap::compose(l, r).unwrap();
                let rl = FinMap::compose(r, l).unwrap();
                if lr != rl {
                    return Err(BasecatError::RelationViolated {
                        relation: "cross-factor commutation".into(),
                        which: format!("left s_{}, right s_{}", t + 1, u + 1),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn carrier(&self) -> &FinCarrier {
        &self.carrier
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.left_degree, self.right_degree)
    }

    pub fn left_gens(&self) -> &[FinMap] {
        &self.left_gens
    }

    pub fn right_gens(&self) -> &[FinMap] {
        &self.right_gens
    }

    fn word_map(&self, gens: &[FinMap], g: &Permutation) -> FinMap {
        // Ordered product: first letter of the word is the outermost map.
        let mut acc = FinMap::identity(&self.carrier);
        for t in g.adjacent_word().iter().rev() {
            acc = FinMap::compose(&gens[t - 1], &acc).expect("endomap");
        }
        acc
    }

    /// Evaluate the action on an arbitrary pair of group elements.
    pub fn act(&self, g: &Permutation, h: &Permutation) -> Result<FinMap, BasecatError> {
        if g.degree() != self.left_degree || h.degree() != self.right_degree {
            return Err(BasecatError::DegreeMismatch {
                exp_l: self.left_degree,
                exp_r: self.right_degree,
                got_l: g.degree(),
                got_r: h.degree(),
            });
        }
        let left = self.word_map(&self.left_gens, g);
        let right = self.word_map(&self.right_gens, h);
        // Factors commute, so the order is immaterial.
        FinMap::compose(&left, &right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincomb::{compose_permutation, enumerate_permutations};

    fn carrier(labels: &[&str]) -> FinCarrier {
        FinCarrier::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    /// The regular left action of a symmetric group on itself, as a
    /// one-factor group action. Elements are labelled by image tables.
    fn regular_action(n: usize) -> GroupAction {
        let elems: Vec<Permutation> = enumerate_permutations(n);
        let c = FinCarrier::new(elems.iter().map(|p| p.to_string()).collect()).unwrap();
        let gens = (1..n)
            .map(|t| {
                let s = Permutation::adjacent_transposition(n, t);
                FinMap::from_fn(&c, &c, |x| {
                    let p = elems.iter().find(|p| p.to_string() == x).unwrap();
                    compose_permutation(&s, p).unwrap().to_string()
                })
                .unwrap()
            })
            .collect();
        GroupAction::new(c, (n, 0), gens, vec![]).unwrap()
    }

    #[test]
    fn quotient_examples() {
        let c = carrier(&["a", "b", "c"]);
        let (q, proj) = quotient(&c, &[]).unwrap();
        assert_eq!(q.len(), 3);
        assert!(proj.is_bijection());

        let rels = vec![("a".into(), "b".into()), ("b".into(), "c".into())];
        let (q, proj) = quotient(&c, &rels).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(proj.apply("c"), Some("a"));

        let c = carrier(&["1", "2", "3", "4"]);
        let rels = vec![("1".into(), "2".into()), ("3".into(), "4".into())];
        let (q, _) = quotient(&c, &rels).unwrap();
        assert_eq!(q.len(), 2);

        assert!(quotient(&c, &[("1".into(), "zzz".into())]).is_err());
    }

    #[test]
    fn quotient_matches_bfs_oracle() {
        // Oracle: breadth-first search over the relation graph.
        let c = carrier(&["p", "q", "r", "s", "t"]);
        let rels: Vec<(String, String)> =
            vec![("p".into(), "r".into()), ("t".into(), "p".into()), ("q".into(), "s".into())];
        let (_, proj) = quotient(&c, &rels).unwrap();
        let connected = |a: &str, b: &str| -> bool {
            let mut seen = vec![a.to_string()];
            let mut queue = vec![a.to_string()];
            while let Some(x) = queue.pop() {
                for (u, v) in &rels {
                    for (from, to) in [(u, v), (v, u)] {
                        if from == &x && !seen.contains(to) {
                            seen.push(to.clone());
                            queue.push(to.clone());
                        }
                    }
                }
            }
            seen.contains(&b.to_string())
        };
        for a in c.elements() {
            for b in c.elements() {
                assert_eq!(
                    proj.apply(a) == proj.apply(b),
                    connected(a, b),
                    "quotient disagrees with BFS on ({a},{b})"
                );
            }
        }
    }

    #[test]
    fn coproduct_product_cardinalities() {
        let (empty, injs) = coproduct(&[]);
        assert!(empty.is_empty() && injs.is_empty());

        let a = carrier(&["x", "y"]);
        let b = carrier(&["x", "z", "w"]);
        let (sum, injs) = coproduct(&[a.clone(), b.clone()]);
        assert_eq!(sum.len(), a.len() + b.len());
        // Jointly surjective, componentwise injective.
        let mut hit = std::collections::BTreeSet::new();
        for (inj, part) in injs.iter().zip([&a, &b]) {
            let mut images = std::collections::BTreeSet::new();
            for x in part.elements() {
                let y = inj.apply(x).unwrap();
                assert!(images.insert(y.to_string()));
                hit.insert(y.to_string());
            }
        }
        assert_eq!(hit.len(), sum.len());

        let (prod, pa, pb) = product(&a, &b);
        assert_eq!(prod.len(), a.len() * b.len());
        for x in prod.elements() {
            assert!(a.contains(pa.apply(x).unwrap()));
            assert!(b.contains(pb.apply(x).unwrap()));
        }
    }

    #[test]
    fn action_construction_validates_relations() {
        let c = carrier(&["u", "v"]);
        let swap = FinMap::from_fn(&c, &c, |x| {
            if x == "u" { "v".to_string() } else { "u".to_string() }
        })
        .unwrap();
        // Σ₂ acting by the swap is fine.
        assert!(GroupAction::new(c.clone(), (2, 0), vec![swap.clone()], vec![]).is_ok());
        // A non-involution is rejected.
        let c3 = carrier(&["1", "2", "3"]);
        let cycle = FinMap::from_fn(&c3, &c3, |x| match x {
            "1" => "2".to_string(),
            "2" => "3".to_string(),
            _ => "1".to_string(),
        })
        .unwrap();
        let err = GroupAction::new(c3, (2, 0), vec![cycle], vec![]);
        assert!(matches!(err, Err(BasecatError::RelationViolated { .. })));
    }

    #[test]
    fn act_identity_and_swap() {
        let a = regular_action(2);
        let id = Permutation::identity(2);
        let none = Permutation::identity(0);
        assert!(a.act(&id, &none).unwrap().is_identity());
        let swap = Permutation::new(vec![2, 1]).unwrap();
        let m = a.act(&swap, &none).unwrap();
        assert!(!m.is_identity() && m.is_bijection());
    }

    #[test]
    fn act_factorization_independent() {
        // Two different words for a 3-cycle evaluate identically.
        let a = regular_action(3);
        let s1 = Permutation::adjacent_transposition(3, 1);
        let s2 = Permutation::adjacent_transposition(3, 2);
        let cycle = compose_permutation(&s1, &s2).unwrap();
        let none = Permutation::identity(0);
        let direct = a.act(&cycle, &none).unwrap();
        let word = FinMap::compose(
            &a.act(&s1, &none).unwrap(),
            &a.act(&s2, &none).unwrap(),
        )
        .unwrap();
        assert_eq!(direct, word);
        // And the other factorization s2 s1 s2 s1 s2 s1 = id sanity check.
        let alt = compose_permutation(&s2, &compose_permutation(&s1, &s2).unwrap()).unwrap();
        let alt2 = compose_permutation(&s1, &compose_permutation(&s2, &s1).unwrap()).unwrap();
        assert_eq!(alt, alt2);
        assert_eq!(a.act(&alt, &none).unwrap(), a.act(&alt2, &none).unwrap());
    }

    #[test]
    fn act_is_a_homomorphism() {
        for n in 0..=3 {
            let a = regular_action(n);
            let none = Permutation::identity(0);
            for g in enumerate_permutations(n) {
                for h in enumerate_permutations(n) {
                    let gh = compose_permutation(&g, &h).unwrap();
                    let lhs = a.act(&gh, &none).unwrap();
                    let rhs = FinMap::compose(
                        &a.act(&g, &none).unwrap(),
                        &a.act(&h, &none).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs, "act(gh) ≠ act(g)∘act(h) for g={g}, h={h}");
                }
            }
        }
    }

    #[test]
    fn two_factor_action_homomorphism() {
        // Σ₂×Σ₂ acting on a 4-element carrier of pairs.
        let c = carrier(&["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
        let swap_left = FinMap::from_fn(&c, &c, |x| match x {
            "(0,0)" => "(1,0)".into(),
            "(1,0)" => "(0,0)".into(),
            "(0,1)" => "(1,1)".into(),
            _ => "(0,1)".into(),
        })
        .unwrap();
        let swap_right = FinMap::from_fn(&c, &c, |x| match x {
            "(0,0)" => "(0,1)".into(),
            "(0,1)" => "(0,0)".into(),
            "(1,0)" => "(1,1)".into(),
            _ => "(1,0)".into(),
        })
        .unwrap();
        let a = GroupAction::new(c, (2, 2), vec![swap_left], vec![swap_right]).unwrap();
        for g in enumerate_permutations(2) {
            for h in enumerate_permutations(2) {
                for g2 in enumerate_permutations(2) {
                    for h2 in enumerate_permutations(2) {
                        let lhs = a
                            .act(
                                &compose_permutation(&g, &g2).unwrap(),
                                &compose_permutation(&h, &h2).unwrap(),
                            )
                            .unwrap();
                        let rhs = FinMap::compose(
                            &a.act(&g, &h).unwrap(),
                            &a.act(&g2, &h2).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn carriers_serialize_sorted() {
        let c = FinCarrier::new(vec!["b".into(), "a".into()]).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"["a","b"]"#);
        assert!(FinCarrier::new(vec!["a".into(), "a".into()]).is_err());
    }
}
