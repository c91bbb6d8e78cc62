//! The quadratic maps `k0` and `k1i1`, computed from the symmetry and the
//! interchange cells.
//!
//! `k0` sends the class of an object `x` to the class of the loop
//! `e ≅ x x x* x* -- β_{x,x} x* x* --> x x x* x* ≅ e`, and `k1i1` applies the
//! same recipe one level up, with `Σ_{f,f}` in place of the symmetry. Both
//! computations iterate over *every* witness (inverse, equivalence, and
//! connecting isomorphism) and fail loudly if any choice changes the class.

use std::collections::BTreeSet;

use crate::monoidal::{loop_category, PermGrayMonoid, PermutativeCategory};
use crate::two_cat::{
    self, equivalence_witnesses, invert_2cell, invertible_2cells_between, CellExpr, OneCell,
};

use super::{
    homotopy_groups, homotopy_groups_1cat, PiGroup, PostnikovError, QuadraticMapReport,
};
use crate::abelian::Classification;

/// A total map on quotient classes, with per-class provenance: `direct` for
/// values evaluated from the defining composite, `false` where the value was
/// filled in by additivity over a windowed group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticMap {
    pub table: Vec<usize>,
    pub direct: Vec<bool>,
}

impl QuadraticMap {
    pub fn report(&self) -> QuadraticMapReport {
        QuadraticMapReport {
            values: self.table.clone(),
            direct: self.direct.clone(),
        }
    }

    pub fn is_trivial(&self, tgt: &PiGroup) -> bool {
        self.table.iter().all(|&v| v == tgt.zero())
    }
}

/// Fill undefined entries of a windowed-source map by additivity over the
/// generator, cross-checking every directly computed value.
fn extend_over_window(
    src: &PiGroup,
    tgt: &PiGroup,
    direct: Vec<Option<usize>>,
    what: &str,
) -> Result<QuadraticMap, PostnikovError> {
    if direct.iter().all(|v| v.is_some()) {
        return Ok(QuadraticMap {
            table: direct.into_iter().map(|v| v.unwrap()).collect(),
            direct: vec![true; src.len()],
        });
    }
    match src.table.classify()? {
        Classification::Finite { .. } => Err(PostnikovError::Invalid(format!(
            "{what}: value undefined on a finite source group"
        ))),
        Classification::Windowed { generator, values, .. } => {
            let Some(gen_val) = direct[generator] else {
                return Err(PostnikovError::InsufficientWindow(format!(
                    "{what}: generator value not computable in this window"
                )));
            };
            let mut table = Vec::with_capacity(src.len());
            let mut flags = Vec::with_capacity(src.len());
            for (i, dv) in direct.iter().enumerate() {
                let expected = tgt
                    .table
                    .scale_signed(values[i], gen_val)
                    .ok_or_else(|| {
                        PostnikovError::Invalid(format!("{what}: target group not total"))
                    })?;
                if let Some(v) = dv {
                    if *v != expected {
                        return Err(PostnikovError::NotWellDefined(format!(
                            "{what}: direct value at class {i} disagrees with additive extension"
                        )));
                    }
                }
                table.push(expected);
                flags.push(dv.is_some());
            }
            Ok(QuadraticMap { table, direct: flags })
        }
    }
}

/// The signature loop of one object of a permutative category, for one choice
/// of inverse and connecting isomorphism.
fn signature_1cat(
    c: &PermutativeCategory,
    x: usize,
    xstar: usize,
    u: usize,
) -> Option<usize> {
    let id = |o: usize| c.base.identity[o];
    let inner = c.tensor_mor(u, id(xstar))?;
    let t = c.tensor_mor(id(x), inner)?;
    let w = c.base.compose(t, u)?;
    let b = c.beta(x, x)?;
    let mid = c.tensor_mor(c.tensor_mor(b, id(xstar))?, id(xstar))?;
    let w_inv = c.base.inverse(w)?;
    c.base.compose(w_inv, c.base.compose(mid, w)?)
}

/// `k0` of a Picard category: per component class, the class of the signature
/// loop, computed over all witnesses.
pub fn k0_picard1(c: &PermutativeCategory) -> Result<QuadraticMap, PostnikovError> {
    let (pi0, pi1) = homotopy_groups_1cat(c)?;
    let mut direct: Vec<Option<usize>> = Vec::with_capacity(pi0.len());
    for (ci, members) in pi0.classes.iter().enumerate() {
        let mut found: BTreeSet<usize> = BTreeSet::new();
        for &x in members {
            for xstar in c.tensor_inverses(x) {
                let target = match c.tensor_obj(x, xstar) {
                    Some(t) => t,
                    None => continue,
                };
                for u in c.base.hom(c.unit, target) {
                    if c.base.inverse(u).is_none() {
                        continue;
                    }
                    if let Some(f) = signature_1cat(c, x, xstar, u) {
                        found.insert(pi1.class_of(f).expect("signature lands in π1"));
                    }
                }
            }
        }
        match found.len() {
            0 => direct.push(None),
            1 => direct.push(found.into_iter().next()),
            _ => {
                return Err(PostnikovError::ChoiceDependent(format!(
                    "k0 at π0 class {ci} takes {} different values",
                    found.len()
                )))
            }
        }
    }
    extend_over_window(&pi0, &pi1, direct, "k0")
}

fn signature_2cat(
    d: &PermGrayMonoid,
    x: usize,
    xstar: usize,
    u: OneCell,
    ustar: OneCell,
) -> Option<OneCell> {
    let t = d.pad_one(&[x], u, &[xstar])?;
    let w = d.base.hcomp_one(t, u)?;
    let b = d.beta(x, x)?;
    let mid = d.pad_one(&[], b, &[xstar, xstar])?;
    let tstar = d.pad_one(&[x], ustar, &[xstar])?;
    let wstar = d.base.hcomp_one(ustar, tstar)?;
    d.base.hcomp_one(wstar, d.base.hcomp_one(mid, w)?)
}

/// `k0` of a Picard Gray-monoid: same recipe with 1-cell equivalences in
/// place of isomorphisms.
pub fn k0_picard2(d: &PermGrayMonoid) -> Result<QuadraticMap, PostnikovError> {
    let (pi0, pi1, _) = homotopy_groups(d)?;
    let mut direct: Vec<Option<usize>> = Vec::with_capacity(pi0.len());
    for (ci, members) in pi0.classes.iter().enumerate() {
        let mut found: BTreeSet<usize> = BTreeSet::new();
        for &x in members {
            for xstar in d.object_inverses(x) {
                let Some(target) = d.prod(x, xstar) else { continue };
                let Some(h) = d.base.hom(d.unit, target) else { continue };
                for uidx in 0..h.objects {
                    let u = OneCell { src: d.unit, tgt: target, idx: uidx };
                    let reverses: BTreeSet<OneCell> = equivalence_witnesses(&d.base, u)
                        .into_iter()
                        .map(|w| w.reverse)
                        .collect();
                    for ustar in reverses {
                        if let Some(f) = signature_2cat(d, x, xstar, u, ustar) {
                            found.insert(pi1.class_of(f.idx).expect("signature lands in π1"));
                        }
                    }
                }
            }
        }
        match found.len() {
            0 => direct.push(None),
            1 => direct.push(found.into_iter().next()),
            _ => {
                return Err(PostnikovError::ChoiceDependent(format!(
                    "k0 at π0 class {ci} takes {} different values",
                    found.len()
                )))
            }
        }
    }
    extend_over_window(&pi0, &pi1, direct, "k0")
}

/// Direct computation of `k1i1`: the `Σ_{f,f}` loop pasted in the unit
/// endomorphism category, evaluated through the cell-expression evaluator.
fn k1i1_direct(d: &PermGrayMonoid) -> Result<QuadraticMap, PostnikovError> {
    let (_, pi1, pi2) = homotopy_groups(d)?;
    let e = d.unit;
    let h = d.base.hom(e, e).expect("unit endomorphism category");
    let mut direct: Vec<Option<usize>> = Vec::with_capacity(pi1.len());
    for (ci, members) in pi1.classes.iter().enumerate() {
        let mut found: BTreeSet<usize> = BTreeSet::new();
        for &fidx in members {
            let f = OneCell { src: e, tgt: e, idx: fidx };
            for gidx in 0..h.objects {
                let fstar = OneCell { src: e, tgt: e, idx: gidx };
                // f* must be a two-sided reverse of f through invertible
                // 2-cells; enumerate the connecting cells u : id_e => f∘f*.
                let (Some(ffstar), Some(fstarf)) =
                    (d.base.hcomp_one(f, fstar), d.base.hcomp_one(fstar, f))
                else {
                    continue;
                };
                if invertible_2cells_between(&d.base, fstarf, d.base.id1[e]).is_empty() {
                    continue;
                }
                let sigma = match d.sigma(f, f) {
                    Some(s) => s,
                    None => continue,
                };
                for u in invertible_2cells_between(&d.base, d.base.id1[e], ffstar) {
                    let w_expr = CellExpr::vcomp(
                        CellExpr::whisker_r(
                            CellExpr::whisker_l(CellExpr::one(f), CellExpr::two(u)),
                            CellExpr::one(fstar),
                        ),
                        CellExpr::two(u),
                    );
                    let Ok(two_cat::Cell::Two(w)) = two_cat::eval_cell(&d.base, &w_expr) else {
                        continue;
                    };
                    let Some(w_inv) = invert_2cell(&d.base, w) else { continue };
                    let total = CellExpr::vcomp(
                        CellExpr::two(w_inv),
                        CellExpr::vcomp(
                            CellExpr::whisker_r(
                                CellExpr::two(sigma),
                                CellExpr::hcomp(CellExpr::one(fstar), CellExpr::one(fstar)),
                            ),
                            w_expr.clone(),
                        ),
                    );
                    if let Ok(two_cat::Cell::Two(v)) = two_cat::eval_cell(&d.base, &total) {
                        found.insert(pi2.class_of(v.idx).expect("k1i1 lands in π2"));
                    }
                }
            }
        }
        match found.len() {
            0 => direct.push(None),
            1 => direct.push(found.into_iter().next()),
            _ => {
                return Err(PostnikovError::ChoiceDependent(format!(
                    "k1i1 at π1 class {ci} takes {} different values",
                    found.len()
                )))
            }
        }
    }
    extend_over_window(&pi1, &pi2, direct, "k1i1")
}

/// Both computation paths for `k1i1`: through the loop category's `k0`, and
/// directly from the `Σ_{f,f}` composite.
pub fn k1i1_paths(
    d: &PermGrayMonoid,
) -> Result<(QuadraticMap, QuadraticMap), PostnikovError> {
    let via_loop = k0_picard1(&loop_category(d)?)?;
    let direct = k1i1_direct(d)?;
    Ok((via_loop, direct))
}

/// `k1i1`, with the two computation paths required to agree classwise.
pub fn k1i1(d: &PermGrayMonoid) -> Result<QuadraticMap, PostnikovError> {
    let (via_loop, direct) = k1i1_paths(d)?;
    if via_loop.table != direct.table {
        return Err(PostnikovError::TwoPathMismatch(format!(
            "loop path {:?} vs direct path {:?}",
            via_loop.table, direct.table
        )));
    }
    Ok(QuadraticMap {
        table: direct.table,
        direct: via_loop
            .direct
            .iter()
            .zip(&direct.direct)
            .map(|(a, b)| *a || *b)
            .collect(),
    })
}

/// A stable quadratic map is additive with 2-torsion image; check both
/// exhaustively over the (possibly partial) source table.
pub fn check_quadratic(src: &PiGroup, tgt: &PiGroup, map: &QuadraticMap) -> bool {
    if map.table.len() != src.len() {
        return false;
    }
    for a in 0..src.len() {
        let doubled = tgt.table.get(map.table[a], map.table[a]);
        if doubled != Some(tgt.zero()) {
            return false;
        }
        for b in 0..src.len() {
            if let Some(sum) = src.table.get(a, b) {
                if tgt.table.get(map.table[a], map.table[b]) != Some(map.table[sum]) {
                    return false;
                }
            }
        }
    }
    true
}
