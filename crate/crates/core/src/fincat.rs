//! Finite categories presented by composition tables.
//!
//! Objects and morphisms are plain index sets. Morphisms are globally indexed
//! with `src`/`tgt` maps rather than stored per hom-set; this keeps the
//! composition table flat and the serialization obvious. Composition is a
//! partial map defined exactly on composable pairs. Validation never fails
//! fast: it reports every violated instance.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::report::ValidationReport;

/// A finite category: `objects` is the size of the object index set,
/// morphisms are indexed `0..mor_src.len()`, and `compose` maps a composable
/// pair `(g, f)` with `tgt(f) = src(g)` to `g∘f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCategory {
    pub objects: usize,
    pub mor_src: Vec<usize>,
    pub mor_tgt: Vec<usize>,
    /// object -> identity morphism
    pub identity: Vec<usize>,
    /// (g, f) -> g∘f, present exactly for composable pairs
    pub compose: HashMap<(usize, usize), usize>,
    /// Optional integer labels for objects of finitely windowed structures.
    pub object_labels: Option<Vec<i64>>,
}

impl FinCategory {
    pub fn num_morphisms(&self) -> usize {
        self.mor_src.len()
    }

    /// The terminal category: one object, one identity morphism.
    pub fn terminal() -> Self {
        FinCategory {
            objects: 1,
            mor_src: vec![0],
            mor_tgt: vec![0],
            identity: vec![0],
            compose: HashMap::from([((0, 0), 0)]),
            object_labels: None,
        }
    }

    /// The discrete category on `n` objects.
    pub fn discrete(n: usize) -> Self {
        FinCategory {
            objects: n,
            mor_src: (0..n).collect(),
            mor_tgt: (0..n).collect(),
            identity: (0..n).collect(),
            compose: (0..n).map(|i| ((i, i), i)).collect(),
            object_labels: None,
        }
    }

    /// The chaotic (indiscrete) category on `n` objects: exactly one morphism
    /// in every hom-set.
    pub fn chaotic(n: usize) -> Self {
        let mut compose = HashMap::new();
        let idx = |x: usize, y: usize| x * n + y; // morphism x -> y
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    compose.insert((idx(y, z), idx(x, y)), idx(x, z));
                }
            }
        }
        FinCategory {
            objects: n,
            mor_src: (0..n * n).map(|m| m / n).collect(),
            mor_tgt: (0..n * n).map(|m| m % n).collect(),
            identity: (0..n).map(|x| idx(x, x)).collect(),
            compose,
            object_labels: None,
        }
    }

    /// A finite group presented as a one-object category. `mult[g][h]` is the
    /// product g·h, with identity element `0`.
    pub fn group(mult: &[Vec<usize>]) -> Self {
        let n = mult.len();
        let mut compose = HashMap::new();
        for g in 0..n {
            for h in 0..n {
                compose.insert((g, h), mult[g][h]);
            }
        }
        FinCategory {
            objects: 1,
            mor_src: vec![0; n],
            mor_tgt: vec![0; n],
            identity: vec![0],
            compose,
            object_labels: None,
        }
    }

    pub fn src(&self, m: usize) -> usize {
        self.mor_src[m]
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.mor_tgt[m]
    }

    /// `g∘f` if the pair is in the table.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.num_morphisms())
            .filter(|&m| self.mor_src[m] == x && self.mor_tgt[m] == y)
            .collect()
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.mor_src[m] == self.mor_tgt[m] && self.identity[self.mor_src[m]] == m
    }

    /// Two-sided inverse of `f`, if one exists.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (x, y) = (self.src(f), self.tgt(f));
        self.hom(y, x).into_iter().find(|&g| {
            self.compose(g, f) == Some(self.identity[x])
                && self.compose(f, g) == Some(self.identity[y])
        })
    }

    /// Product category; objects and morphisms are paired in row-major order
    /// (left factor is the high digit).
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let no = other.objects;
        let nm = other.num_morphisms();
        let mut mor_src = Vec::new();
        let mut mor_tgt = Vec::new();
        for m1 in 0..self.num_morphisms() {
            for m2 in 0..nm {
                mor_src.push(self.mor_src[m1] * no + other.mor_src[m2]);
                mor_tgt.push(self.mor_tgt[m1] * no + other.mor_tgt[m2]);
            }
        }
        let mut compose = HashMap::new();
        for (&(g1, f1), &c1) in &self.compose {
            for (&(g2, f2), &c2) in &other.compose {
                compose.insert((g1 * nm + g2, f1 * nm + f2), c1 * nm + c2);
            }
        }
        let identity = (0..self.objects * no)
            .map(|x| self.identity[x / no] * nm + other.identity[x % no])
            .collect();
        FinCategory {
            objects: self.objects * no,
            mor_src,
            mor_tgt,
            identity,
            compose,
            object_labels: None,
        }
    }

    /// `n`-fold product with itself; `power(0)` is the terminal category.
    pub fn power(&self, n: usize) -> FinCategory {
        let mut acc = FinCategory::terminal();
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }
}

/// A partition of an index set into classes. Classes are numbered in order of
/// their least member, so the representation is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

impl Partition {
    pub fn from_class_map(raw: &[usize]) -> Partition {
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; raw.len()];
        for (i, &c) in raw.iter().enumerate() {
            let id = *relabel.entry(c).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            class_of[i] = id;
            classes[id].push(i);
        }
        Partition { class_of, classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// True if every class of `self` is contained in a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes.iter().all(|cls| {
            let c = coarser.class_of[cls[0]];
            cls.iter().all(|&i| coarser.class_of[i] == c)
        })
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let r = self.find(self.parent[i]);
            self.parent[i] = r;
        }
        self.parent[i]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
    fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let raw: Vec<usize> = (0..n).map(|i| self.find(i)).collect();
        Partition::from_class_map(&raw)
    }
}

/// Check every category axiom instance and report all failures.
///
/// Structural problems (indices out of range, composition entries on
/// non-composable pairs, missing entries on composable pairs) short-circuit
/// the law checks, since the tables cannot be interpreted.
pub fn validate_category(c: &FinCategory) -> ValidationReport {
    let mut rep = ValidationReport::new();
    let m = c.num_morphisms();

    for (i, (&s, &t)) in c.mor_src.iter().zip(&c.mor_tgt).enumerate() {
        if s >= c.objects || t >= c.objects {
            rep.structural("index", format!("morphism {i} has src/tgt out of range"));
        }
    }
    if c.identity.len() != c.objects {
        rep.structural(
            "index",
            format!(
                "identity table has {} entries for {} objects",
                c.identity.len(),
                c.objects
            ),
        );
    }
    for (x, &e) in c.identity.iter().enumerate() {
        if e >= m {
            rep.structural("index", format!("identity of object {x} out of range"));
        } else if c.mor_src[e] != x || c.mor_tgt[e] != x {
            rep.structural("index", format!("identity of object {x} is not an endomorphism"));
        }
    }
    if let Some(labels) = &c.object_labels {
        if labels.len() != c.objects {
            rep.structural("index", "object_labels length mismatch".into());
        }
    }
    if rep.has_structural_errors() {
        return rep;
    }

    // Composition table domain: exactly the composable pairs.
    for (&(g, f), &gf) in &c.compose {
        if g >= m || f >= m || gf >= m {
            rep.structural("compose-domain", format!("compose({g},{f}) out of range"));
            continue;
        }
        if c.mor_tgt[f] != c.mor_src[g] {
            rep.structural(
                "compose-domain",
                format!("compose({g},{f}) defined on a non-composable pair"),
            );
        } else {
            rep.check(
                "compose-typing",
                c.mor_src[gf] == c.mor_src[f] && c.mor_tgt[gf] == c.mor_tgt[g],
                || format!("compose({g},{f}) = {gf} has wrong boundary"),
            );
        }
    }
    for g in 0..m {
        for f in 0..m {
            if c.mor_tgt[f] == c.mor_src[g] && !c.compose.contains_key(&(g, f)) {
                rep.structural(
                    "compose-domain",
                    format!("missing composite for composable pair ({g},{f})"),
                );
            }
        }
    }
    if rep.has_structural_errors() {
        return rep;
    }

    for f in 0..m {
        let (x, y) = (c.mor_src[f], c.mor_tgt[f]);
        rep.check("unit", c.compose(c.identity[y], f) == Some(f), || {
            format!("id∘{f} != {f}")
        });
        rep.check("unit", c.compose(f, c.identity[x]) == Some(f), || {
            format!("{f}∘id != {f}")
        });
    }

    for h in 0..m {
        for g in 0..m {
            if c.mor_tgt[g] != c.mor_src[h] {
                continue;
            }
            for f in 0..m {
                if c.mor_tgt[f] != c.mor_src[g] {
                    continue;
                }
                let lhs = c.compose(h, c.compose(g, f).unwrap());
                let rhs = c.compose(c.compose(h, g).unwrap(), f);
                rep.check("assoc", lhs.is_some() && lhs == rhs, || {
                    format!("h∘(g∘f) != (h∘g)∘f at ({h},{g},{f})")
                });
            }
        }
    }
    rep
}

/// Path components: the partition generated by `x ~ y` whenever some morphism
/// runs between them.
pub fn pi0(c: &FinCategory) -> Partition {
    let mut uf = UnionFind::new(c.objects);
    for i in 0..c.num_morphisms() {
        uf.union(c.mor_src[i], c.mor_tgt[i]);
    }
    uf.into_partition()
}

/// Isomorphism classes of objects, by brute-force search over morphism pairs.
pub fn iso_classes(c: &FinCategory) -> Partition {
    let mut uf = UnionFind::new(c.objects);
    for x in 0..c.objects {
        for y in (x + 1)..c.objects {
            if are_isomorphic(c, x, y) {
                uf.union(x, y);
            }
        }
    }
    uf.into_partition()
}

pub fn are_isomorphic(c: &FinCategory, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    c.hom(x, y).into_iter().any(|f| {
        c.hom(y, x).into_iter().any(|g| {
            c.compose(g, f) == Some(c.identity[x]) && c.compose(f, g) == Some(c.identity[y])
        })
    })
}

/// A functor between table-presented categories.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinFunctor {
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

impl FinFunctor {
    pub fn identity(c: &FinCategory) -> Self {
        FinFunctor {
            obj_map: (0..c.objects).collect(),
            mor_map: (0..c.num_morphisms()).collect(),
        }
    }

    pub fn compose(&self, then: &FinFunctor) -> FinFunctor {
        FinFunctor {
            obj_map: self.obj_map.iter().map(|&x| then.obj_map[x]).collect(),
            mor_map: self.mor_map.iter().map(|&m| then.mor_map[m]).collect(),
        }
    }
}

/// Functor axioms: boundaries, identities, composition.
pub fn validate_functor(f: &FinFunctor, src: &FinCategory, tgt: &FinCategory) -> ValidationReport {
    let mut rep = ValidationReport::new();
    if f.obj_map.len() != src.objects || f.mor_map.len() != src.num_morphisms() {
        rep.structural("functor", "object/morphism map length mismatch".into());
        return rep;
    }
    if f.obj_map.iter().any(|&x| x >= tgt.objects)
        || f.mor_map.iter().any(|&m| m >= tgt.num_morphisms())
    {
        rep.structural("functor", "image index out of range".into());
        return rep;
    }
    for m in 0..src.num_morphisms() {
        rep.check(
            "functor-boundary",
            tgt.mor_src[f.mor_map[m]] == f.obj_map[src.mor_src[m]]
                && tgt.mor_tgt[f.mor_map[m]] == f.obj_map[src.mor_tgt[m]],
            || format!("boundary of F({m}) does not match"),
        );
    }
    for x in 0..src.objects {
        rep.check(
            "functor-id",
            f.mor_map[src.identity[x]] == tgt.identity[f.obj_map[x]],
            || format!("F(id_{x}) is not an identity"),
        );
    }
    for (&(g, h), &gh) in &src.compose {
        let lhs = tgt.compose(f.mor_map[g], f.mor_map[h]);
        rep.check("functor-compose", lhs == Some(f.mor_map[gh]), || {
            format!("F({g}∘{h}) != F({g})∘F({h})")
        });
    }
    rep
}

/// Essential surjectivity plus full faithfulness, both by exhaustive check.
pub fn is_equivalence_functor(f: &FinFunctor, src: &FinCategory, tgt: &FinCategory) -> bool {
    if !validate_functor(f, src, tgt).is_valid() {
        return false;
    }
    let ess_surj = (0..tgt.objects)
        .all(|y| (0..src.objects).any(|x| are_isomorphic(tgt, f.obj_map[x], y)));
    if !ess_surj {
        return false;
    }
    for x in 0..src.objects {
        for y in 0..src.objects {
            let dom = src.hom(x, y);
            let cod = tgt.hom(f.obj_map[x], f.obj_map[y]);
            let images: Vec<usize> = dom.iter().map(|&m| f.mor_map[m]).collect();
            // Bijective on this hom-set: same size, no repeats, all hit.
            if images.len() != cod.len() {
                return false;
            }
            let mut seen = images.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != images.len() || !cod.iter().all(|m| images.contains(m)) {
                return false;
            }
        }
    }
    true
}

/// A natural transformation, stored as its component at every object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinNatTrans {
    pub components: Vec<usize>,
}

/// Naturality squares for `t : f => g`, all checked.
pub fn validate_nat_trans(
    t: &FinNatTrans,
    f: &FinFunctor,
    g: &FinFunctor,
    src: &FinCategory,
    tgt: &FinCategory,
) -> ValidationReport {
    let mut rep = ValidationReport::new();
    if t.components.len() != src.objects {
        rep.structural("nat", "component count mismatch".into());
        return rep;
    }
    for (x, &c) in t.components.iter().enumerate() {
        if c >= tgt.num_morphisms()
            || tgt.mor_src[c] != f.obj_map[x]
            || tgt.mor_tgt[c] != g.obj_map[x]
        {
            rep.structural("nat", format!("component at {x} has wrong boundary"));
        }
    }
    if rep.has_structural_errors() {
        return rep;
    }
    for m in 0..src.num_morphisms() {
        let (x, y) = (src.mor_src[m], src.mor_tgt[m]);
        let lhs = tgt.compose(t.components[y], f.mor_map[m]);
        let rhs = tgt.compose(g.mor_map[m], t.components[x]);
        rep.check("naturality", lhs.is_some() && lhs == rhs, || {
            format!("naturality square fails at morphism {m}")
        });
    }
    rep
}
