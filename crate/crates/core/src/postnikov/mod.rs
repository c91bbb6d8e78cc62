//! Stable homotopy data of Picard 1- and 2-categories computed from the
//! categorical tables: the three homotopy groups, the quadratic maps `k0` and
//! `k1i1`, and executable forms of the structure theorems built on them.

mod builder;
mod quadratic;
mod theorems;

pub use builder::{build_skeletal_picard, AbGroupSpec, BilinearForm};
pub use quadratic::{check_quadratic, k0_picard1, k0_picard2, k1i1, k1i1_paths, QuadraticMap};
pub use theorems::{
    check_conn_cover, check_sigma_triv, check_truncation, reports_isomorphic_along,
    verify_noskel, ConnCoverReport, NoSkelVerdict, TruncationReport,
};

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{GroupError, GroupPresentation, GroupTable};
use crate::fincat;
use crate::monoidal::{MonoidalError, PermGrayMonoid, PermutativeCategory};
use crate::two_cat::{self, OneCell};

#[derive(Debug, Error)]
pub enum PostnikovError {
    #[error("input is not Picard: {0}")]
    NotPicard(String),
    #[error("quotient group law is not well defined: {0}")]
    NotWellDefined(String),
    #[error("computed value depends on the witness choice: {0}")]
    ChoiceDependent(String),
    #[error("window too small to determine the value: {0}")]
    InsufficientWindow(String),
    #[error("the two computation paths disagree: {0}")]
    TwoPathMismatch(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Monoidal(#[from] MonoidalError),
    #[error("{0}")]
    Invalid(String),
}

/// A homotopy group computed as a quotient: classes of ambient cells with the
/// induced (possibly windowed) addition table.
#[derive(Debug, Clone)]
pub struct PiGroup {
    /// class -> ambient member indices
    pub classes: Vec<Vec<usize>>,
    lookup: HashMap<usize, usize>,
    pub table: GroupTable,
    pub presentation: GroupPresentation,
}

impl PiGroup {
    fn build(
        classes: Vec<Vec<usize>>,
        zero_ambient: usize,
        add: impl Fn(usize, usize) -> Result<Option<usize>, PostnikovError>,
    ) -> Result<PiGroup, PostnikovError> {
        let lookup: HashMap<usize, usize> = classes
            .iter()
            .enumerate()
            .flat_map(|(c, ms)| ms.iter().map(move |&m| (m, c)))
            .collect();
        let n = classes.len();
        let zero = lookup[&zero_ambient];
        let mut table = GroupTable {
            n,
            zero,
            add: vec![None; n * n],
        };
        for a in 0..n {
            for b in 0..n {
                table.add[a * n + b] = add(a, b)?;
            }
        }
        let presentation = table.presentation()?;
        Ok(PiGroup {
            classes,
            lookup,
            table,
            presentation,
        })
    }

    /// The trivial group.
    pub fn trivial(ambient: usize) -> PiGroup {
        PiGroup {
            classes: vec![vec![ambient]],
            lookup: HashMap::from([(ambient, 0)]),
            table: GroupTable {
                n: 1,
                zero: 0,
                add: vec![Some(0)],
            },
            presentation: GroupPresentation::Finite {
                invariant_factors: vec![],
            },
        }
    }

    pub fn class_of(&self, ambient: usize) -> Option<usize> {
        self.lookup.get(&ambient).copied()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn zero(&self) -> usize {
        self.table.zero
    }

    /// The subgroup generated by a set of classes (the table must be total).
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![self.table.zero];
        loop {
            let mut grew = false;
            for &g in gens {
                for i in 0..set.len() {
                    if let Some(s) = self.table.get(set[i], g) {
                        if !set.contains(&s) {
                            set.push(s);
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        set.sort_unstable();
        set
    }
}

/// Predicate: all objects, 1-cells, and 2-cells invertible.
pub fn is_picard_2cat(d: &PermGrayMonoid) -> bool {
    d.base
        .two_cells()
        .iter()
        .all(|a| two_cat::is_invertible_2cell(&d.base, *a))
        && d.base
            .one_cells()
            .iter()
            .all(|f| two_cat::is_invertible_1cell(&d.base, *f).is_some())
        && (0..d.base.objects).all(|x| !d.object_inverses(x).is_empty())
}

/// Skeletal: internally equivalent objects are equal.
pub fn is_skeletal(d: &crate::two_cat::Fin2Category) -> bool {
    two_cat::internal_equivalence_classes(d)
        .classes
        .iter()
        .all(|c| c.len() == 1)
}

/// The three stable homotopy groups of a Picard Gray-monoid: objects modulo
/// 1-cells under ⊕, unit-endomorphism 1-cells modulo 2-cells under ∘, and
/// unit-endomorphism 2-cells under vertical composition.
pub fn homotopy_groups(
    d: &PermGrayMonoid,
) -> Result<(PiGroup, PiGroup, PiGroup), PostnikovError> {
    if !is_picard_2cat(d) {
        return Err(PostnikovError::NotPicard(
            "homotopy groups need an invertible structure".into(),
        ));
    }
    let pi0 = pi0_group(d)?;
    let pi1 = pi1_group(d)?;
    let pi2 = pi2_group(d)?;
    Ok((pi0, pi1, pi2))
}

fn pi0_group(d: &PermGrayMonoid) -> Result<PiGroup, PostnikovError> {
    // x ~ y when some 1-cell runs between them.
    let mut raw: Vec<usize> = (0..d.base.objects).collect();
    for (&(x, y), h) in &d.base.homs {
        if h.objects > 0 && raw[x] != raw[y] {
            let (a, b) = (raw[x].min(raw[y]), raw[x].max(raw[y]));
            for r in raw.iter_mut() {
                if *r == b {
                    *r = a;
                }
            }
        }
    }
    let classes = fincat::Partition::from_class_map(&raw).classes;
    let class_of = |x: usize| -> usize {
        classes.iter().position(|c| c.contains(&x)).unwrap()
    };
    PiGroup::build(classes.clone(), d.unit, |a, b| {
        let mut out: Option<usize> = None;
        for &x in &classes[a] {
            for &y in &classes[b] {
                if let Some(xy) = d.prod(x, y) {
                    let cls = class_of(xy);
                    match out {
                        None => out = Some(cls),
                        Some(prev) if prev != cls => {
                            return Err(PostnikovError::NotWellDefined(format!(
                                "π0 sum of classes {a},{b} is ambiguous"
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(out)
    })
}

fn pi1_group(d: &PermGrayMonoid) -> Result<PiGroup, PostnikovError> {
    let e = d.unit;
    let h = d
        .base
        .hom(e, e)
        .ok_or_else(|| PostnikovError::Invalid("missing unit endomorphism category".into()))?;
    let classes = fincat::pi0(h).classes;
    let class_of = |f: usize| -> usize {
        classes.iter().position(|c| c.contains(&f)).unwrap()
    };
    PiGroup::build(classes.clone(), d.base.id1[e].idx, |a, b| {
        let mut out: Option<usize> = None;
        for &f in &classes[a] {
            for &g in &classes[b] {
                let fc = OneCell { src: e, tgt: e, idx: f };
                let gc = OneCell { src: e, tgt: e, idx: g };
                if let Some(comp) = d.base.hcomp_one(fc, gc) {
                    let cls = class_of(comp.idx);
                    match out {
                        None => out = Some(cls),
                        Some(prev) if prev != cls => {
                            return Err(PostnikovError::NotWellDefined(format!(
                                "π1 sum of classes {a},{b} is ambiguous"
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(out)
    })
}

fn pi2_group(d: &PermGrayMonoid) -> Result<PiGroup, PostnikovError> {
    let e = d.unit;
    let h = d
        .base
        .hom(e, e)
        .ok_or_else(|| PostnikovError::Invalid("missing unit endomorphism category".into()))?;
    let ide = d.base.id1[e].idx;
    let members: Vec<usize> = (0..h.num_morphisms())
        .filter(|&m| h.mor_src[m] == ide && h.mor_tgt[m] == ide)
        .collect();
    let classes: Vec<Vec<usize>> = members.iter().map(|&m| vec![m]).collect();
    let pos = |m: usize| members.iter().position(|&x| x == m).unwrap();
    PiGroup::build(classes, h.identity[ide], |a, b| {
        match h.compose(members[a], members[b]) {
            Some(c) => Ok(Some(pos(c))),
            None => Err(PostnikovError::Invalid(
                "vertical composition not total on π2".into(),
            )),
        }
    })
}

/// π-groups of a Picard 1-category: components under ⊕ and unit
/// endomorphisms under ∘ (π2 of a 1-category is trivial).
pub fn homotopy_groups_1cat(
    c: &PermutativeCategory,
) -> Result<(PiGroup, PiGroup), PostnikovError> {
    if !crate::monoidal::is_picard_category(c) {
        return Err(PostnikovError::NotPicard(
            "homotopy groups need an invertible structure".into(),
        ));
    }
    let classes = fincat::pi0(&c.base).classes;
    let class_of = |x: usize| -> usize {
        classes.iter().position(|cl| cl.contains(&x)).unwrap()
    };
    let pi0 = PiGroup::build(classes.clone(), c.unit, |a, b| {
        let mut out: Option<usize> = None;
        for &x in &classes[a] {
            for &y in &classes[b] {
                if let Some(xy) = c.tensor_obj(x, y) {
                    let cls = class_of(xy);
                    match out {
                        None => out = Some(cls),
                        Some(prev) if prev != cls => {
                            return Err(PostnikovError::NotWellDefined(format!(
                                "π0 sum of classes {a},{b} is ambiguous"
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(out)
    })?;
    let members = c.base.hom(c.unit, c.unit);
    let classes1: Vec<Vec<usize>> = members.iter().map(|&m| vec![m]).collect();
    let pos = |m: usize| members.iter().position(|&x| x == m).unwrap();
    let pi1 = PiGroup::build(classes1, c.base.identity[c.unit], |a, b| {
        match c.base.compose(members[a], members[b]) {
            Some(v) => Ok(Some(pos(v))),
            None => Err(PostnikovError::Invalid(
                "composition not total on unit endomorphisms".into(),
            )),
        }
    })?;
    Ok((pi0, pi1))
}

/// Serializable summary of one homotopy group.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupSummary {
    pub presentation: GroupPresentation,
    pub classes: usize,
}

impl From<&PiGroup> for GroupSummary {
    fn from(g: &PiGroup) -> Self {
        GroupSummary {
            presentation: g.presentation.clone(),
            classes: g.len(),
        }
    }
}

/// Serializable form of a quadratic map: one target class per source class,
/// with a flag recording whether the value came from the composite itself or
/// from the homomorphism extension over a windowed group.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuadraticMapReport {
    pub values: Vec<usize>,
    pub direct: Vec<bool>,
}

/// The full computed Postnikov data of one structure.
#[derive(Debug, Clone)]
pub struct PostnikovData {
    pub pi0: PiGroup,
    pub pi1: PiGroup,
    pub pi2: PiGroup,
    pub k0: QuadraticMap,
    pub k1i1: QuadraticMap,
    pub is_picard: bool,
    pub is_skeletal: bool,
    pub k0_surjective: bool,
}

impl PostnikovData {
    pub fn report(&self) -> PostnikovReport {
        PostnikovReport {
            pi0: (&self.pi0).into(),
            pi1: (&self.pi1).into(),
            pi2: (&self.pi2).into(),
            k0: self.k0.report(),
            k1i1: self.k1i1.report(),
            is_picard: self.is_picard,
            is_skeletal: self.is_skeletal,
            k0_surjective: self.k0_surjective,
            quadratic_ok: check_quadratic(&self.pi0, &self.pi1, &self.k0)
                && check_quadratic(&self.pi1, &self.pi2, &self.k1i1),
        }
    }
}

/// Serializable Postnikov report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PostnikovReport {
    pub pi0: GroupSummary,
    pub pi1: GroupSummary,
    pub pi2: GroupSummary,
    pub k0: QuadraticMapReport,
    pub k1i1: QuadraticMapReport,
    pub is_picard: bool,
    pub is_skeletal: bool,
    pub k0_surjective: bool,
    pub quadratic_ok: bool,
}

/// Whether the image of a total quadratic map spans the whole target group.
fn surjective(map: &QuadraticMap, tgt: &PiGroup) -> bool {
    tgt.span(&map.table).len() == tgt.len()
}

/// Full Postnikov analysis of a permutative Gray-monoid.
pub fn analyze_pgm(d: &PermGrayMonoid) -> Result<PostnikovData, PostnikovError> {
    let (pi0, pi1, pi2) = homotopy_groups(d)?;
    let k0 = k0_picard2(d)?;
    let k1 = k1i1(d)?;
    let k0_surjective = surjective(&k0, &pi1);
    Ok(PostnikovData {
        is_picard: true,
        is_skeletal: is_skeletal(&d.base),
        k0_surjective,
        pi0,
        pi1,
        pi2,
        k0,
        k1i1: k1,
    })
}

/// Full Postnikov analysis of a permutative 1-category (π2 trivial, `k1i1`
/// zero).
pub fn analyze_permcat(c: &PermutativeCategory) -> Result<PostnikovData, PostnikovError> {
    let (pi0, pi1) = homotopy_groups_1cat(c)?;
    let k0 = k0_picard1(c)?;
    let pi2 = PiGroup::trivial(0);
    let k1 = QuadraticMap {
        table: vec![0; pi1.len()],
        direct: vec![true; pi1.len()],
    };
    let k0_surjective = surjective(&k0, &pi1);
    Ok(PostnikovData {
        is_picard: true,
        is_skeletal: fincat::iso_classes(&c.base).classes.iter().all(|cl| cl.len() == 1),
        k0_surjective,
        pi0,
        pi1,
        pi2,
        k0,
        k1i1: k1,
    })
}
