//! Permutative categories and permutative Gray-monoids, with full axiom
//! validation and the four functors relating them.
//!
//! Tensor tables may be partial: finitely windowed encodings of infinite
//! examples leave out-of-window products undefined, and every validator skips
//! such instances and counts them as untested rather than passed.
//!
//! The derived monoidal product of 1-cells in a Gray-monoid is fixed as
//! `f⊕g := (f⊕b')∘(a⊕g)`; the other composition order differs by the
//! interchange cell `Σ_{f,g}`, which the validators know about.

mod functors;
#[cfg(test)]
mod tests;
mod validate;

pub use functors::{
    adjunction_counit, check_adjunctions, discretize, loop_category, product_pgm, suspend,
    truncate, validate_pgm_map, AdjunctionEntry, AdjunctionReport,
};
pub use validate::{is_picard_category, validate_permcat, validate_pgm};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fincat::FinCategory;
use crate::two_cat::{Fin2Category, OneCell, TwoCell};

#[derive(Debug, Error)]
pub enum MonoidalError {
    #[error("operation not defined: {0}")]
    Undefined(String),
    #[error("quotient is not well defined: {0}")]
    NotWellDefined(String),
    #[error("input is not valid: {0}")]
    Invalid(String),
}

/// A rectangular table of partially defined indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2 {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Option<usize>>,
}

impl Table2 {
    pub fn new(rows: usize, cols: usize) -> Self {
        Table2 {
            rows,
            cols,
            data: vec![None; rows * cols],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        self.data[i * self.cols + j] = Some(v);
    }

    pub fn is_total(&self) -> bool {
        self.data.iter().all(|e| e.is_some())
    }
}

/// A permutative category: a strict monoidal structure on a finite category
/// together with a symmetry table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutativeCategory {
    pub base: FinCategory,
    pub unit: usize,
    /// objects x objects -> object
    pub tensor_obj: Table2,
    /// morphisms x morphisms -> morphism
    pub tensor_mor: Table2,
    /// (x, y) -> morphism x⊕y -> y⊕x
    pub beta: Table2,
    /// Window radius for finitely windowed infinite examples; `None` for
    /// genuinely finite structures.
    pub window: Option<i64>,
}

impl PermutativeCategory {
    /// The terminal permutative category.
    pub fn terminal() -> Self {
        let mut tensor_obj = Table2::new(1, 1);
        tensor_obj.set(0, 0, 0);
        let mut tensor_mor = Table2::new(1, 1);
        tensor_mor.set(0, 0, 0);
        let mut beta = Table2::new(1, 1);
        beta.set(0, 0, 0);
        PermutativeCategory {
            base: FinCategory::terminal(),
            unit: 0,
            tensor_obj,
            tensor_mor,
            beta,
            window: None,
        }
    }

    pub fn tensor_obj(&self, x: usize, y: usize) -> Option<usize> {
        self.tensor_obj.get(x, y)
    }

    pub fn tensor_mor(&self, f: usize, g: usize) -> Option<usize> {
        self.tensor_mor.get(f, g)
    }

    pub fn beta(&self, x: usize, y: usize) -> Option<usize> {
        self.beta.get(x, y)
    }

    /// Left-associated iterated tensor of objects; the empty list is the unit.
    pub fn tensor_all(&self, xs: &[usize]) -> Option<usize> {
        let mut acc = self.unit;
        for &x in xs {
            acc = self.tensor_obj(acc, x)?;
        }
        Some(acc)
    }

    /// Left-associated iterated tensor of morphisms.
    pub fn tensor_all_mor(&self, fs: &[usize]) -> Option<usize> {
        let mut acc = self.base.identity[self.unit];
        for &f in fs {
            acc = self.tensor_mor(acc, f)?;
        }
        Some(acc)
    }

    /// Tensor-inverse candidates of an object: all `y` with `x⊕y ≅ e ≅ y⊕x`.
    pub fn tensor_inverses(&self, x: usize) -> Vec<usize> {
        (0..self.base.objects)
            .filter(|&y| {
                let (Some(xy), Some(yx)) = (self.tensor_obj(x, y), self.tensor_obj(y, x)) else {
                    return false;
                };
                crate::fincat::are_isomorphic(&self.base, xy, self.unit)
                    && crate::fincat::are_isomorphic(&self.base, yx, self.unit)
            })
            .collect()
    }

    /// The canonical symmetry isomorphism `⊕(before) -> ⊕(after)` where
    /// `after[k] = before[perm[k]]`, built as a composite of adjacent-swap
    /// steps `id ⊕ β ⊕ id`. Any two such composites agree in a valid
    /// permutative category; this one bubble-sorts `perm` for determinism.
    pub fn symmetry_iso(&self, before: &[usize], perm: &[usize]) -> Option<usize> {
        debug_assert_eq!(before.len(), perm.len());
        let order: Vec<usize> = perm.to_vec();
        let mut current: Vec<usize> = (0..before.len()).collect();
        let mut acc = self.base.identity[self.tensor_all(before)?];
        // Bubble `current` into `order`, composing one adjacent swap per step.
        loop {
            let pos = (0..current.len().saturating_sub(1)).find(|&t| {
                let want_before = order.iter().position(|&o| o == current[t]).unwrap();
                let want_after = order.iter().position(|&o| o == current[t + 1]).unwrap();
                want_before > want_after
            });
            let Some(t) = pos else { break };
            let objs: Vec<usize> = current.iter().map(|&i| before[i]).collect();
            let step = self.adjacent_swap(&objs, t)?;
            acc = self.base.compose(step, acc)?;
            current.swap(t, t + 1);
        }
        debug_assert_eq!(current, order);
        Some(acc)
    }

    /// `id ⊕ β_{objs[t],objs[t+1]} ⊕ id` as a morphism between the two
    /// left-associated tensor strings.
    fn adjacent_swap(&self, objs: &[usize], t: usize) -> Option<usize> {
        let mut acc = self.base.identity[self.tensor_all(&objs[..t])?];
        let b = self.beta(objs[t], objs[t + 1])?;
        acc = self.tensor_mor(acc, b)?;
        for &x in &objs[t + 2..] {
            acc = self.tensor_mor(acc, self.base.identity[x])?;
        }
        Some(acc)
    }
}

/// Functor data of whiskering by a fixed object on one hom-category: position
/// `i` holds the image of 1-cell (resp. 2-cell) `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhiskerTable {
    pub one: Vec<Option<usize>>,
    pub two: Vec<Option<usize>>,
}

/// A permutative Gray-monoid: a finite 2-category with a strict object
/// monoid, whiskering 2-functors, an interchange-cell table, and a symmetry
/// 1-cell table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGrayMonoid {
    pub base: Fin2Category,
    pub unit: usize,
    /// objects x objects -> object
    pub prod_obj: Table2,
    /// (a, x, y): the functor `a⊕(-) : hom(x,y) -> hom(a⊕x, a⊕y)`
    pub lwhisker: BTreeMap<(usize, usize, usize), WhiskerTable>,
    /// (a, x, y): the functor `(-)⊕a : hom(x,y) -> hom(x⊕a, y⊕a)`
    pub rwhisker: BTreeMap<(usize, usize, usize), WhiskerTable>,
    /// (f, g) -> the interchange 2-cell `Σ_{f,g} : (f⊕b')∘(a⊕g) => (a'⊕g)∘(f⊕b)`
    pub sigma: BTreeMap<(OneCell, OneCell), usize>,
    /// (x, y) -> the 1-cell `β_{x,y} : x⊕y -> y⊕x`
    pub beta_cell: Table2,
    pub window: Option<i64>,
}

impl PermGrayMonoid {
    pub fn terminal() -> Self {
        suspend(&PermutativeCategory::terminal())
    }

    pub fn prod(&self, x: usize, y: usize) -> Option<usize> {
        self.prod_obj.get(x, y)
    }

    pub fn prod_all(&self, xs: &[usize]) -> Option<usize> {
        let mut acc = self.unit;
        for &x in xs {
            acc = self.prod(acc, x)?;
        }
        Some(acc)
    }

    /// `a ⊕ f` for an object `a` and 1-cell `f`.
    pub fn lw_one(&self, a: usize, f: OneCell) -> Option<OneCell> {
        let t = self.lwhisker.get(&(a, f.src, f.tgt))?;
        Some(OneCell {
            src: self.prod(a, f.src)?,
            tgt: self.prod(a, f.tgt)?,
            idx: t.one[f.idx]?,
        })
    }

    /// `a ⊕ α` for an object `a` and 2-cell `α`.
    pub fn lw_two(&self, a: usize, al: TwoCell) -> Option<TwoCell> {
        let t = self.lwhisker.get(&(a, al.src, al.tgt))?;
        Some(TwoCell {
            src: self.prod(a, al.src)?,
            tgt: self.prod(a, al.tgt)?,
            idx: t.two[al.idx]?,
        })
    }

    /// `f ⊕ a`.
    pub fn rw_one(&self, a: usize, f: OneCell) -> Option<OneCell> {
        let t = self.rwhisker.get(&(a, f.src, f.tgt))?;
        Some(OneCell {
            src: self.prod(f.src, a)?,
            tgt: self.prod(f.tgt, a)?,
            idx: t.one[f.idx]?,
        })
    }

    /// `α ⊕ a`.
    pub fn rw_two(&self, a: usize, al: TwoCell) -> Option<TwoCell> {
        let t = self.rwhisker.get(&(a, al.src, al.tgt))?;
        Some(TwoCell {
            src: self.prod(al.src, a)?,
            tgt: self.prod(al.tgt, a)?,
            idx: t.two[al.idx]?,
        })
    }

    pub fn sigma(&self, f: OneCell, g: OneCell) -> Option<TwoCell> {
        let idx = *self.sigma.get(&(f, g))?;
        Some(TwoCell {
            src: self.prod(f.src, g.src)?,
            tgt: self.prod(f.tgt, g.tgt)?,
            idx,
        })
    }

    pub fn beta(&self, x: usize, y: usize) -> Option<OneCell> {
        let idx = self.beta_cell.get(x, y)?;
        Some(OneCell {
            src: self.prod(x, y)?,
            tgt: self.prod(y, x)?,
            idx,
        })
    }

    /// Derived monoidal product of 1-cells: `f⊕g := (f⊕b')∘(a⊕g)`.
    pub fn derived_prod_one(&self, f: OneCell, g: OneCell) -> Option<OneCell> {
        let left = self.rw_one(g.tgt, f)?;
        let right = self.lw_one(f.src, g)?;
        self.base.hcomp_one(left, right)
    }

    /// Left-associated `x₁ ⊕ ... ⊕ f ⊕ ... ⊕ xₙ`: whisker a 1-cell by objects
    /// on both sides.
    pub fn pad_one(&self, left: &[usize], f: OneCell, right: &[usize]) -> Option<OneCell> {
        let mut cell = f;
        for &a in left.iter().rev() {
            cell = self.lw_one(a, cell)?;
        }
        for &a in right {
            cell = self.rw_one(a, cell)?;
        }
        Some(cell)
    }

    pub fn pad_two(&self, left: &[usize], al: TwoCell, right: &[usize]) -> Option<TwoCell> {
        let mut cell = al;
        for &a in left.iter().rev() {
            cell = self.lw_two(a, cell)?;
        }
        for &a in right {
            cell = self.rw_two(a, cell)?;
        }
        Some(cell)
    }

    /// All product-inverse candidates of an object, using invertible 1-cells
    /// to witness `x⊕y ≃ e ≃ y⊕x`.
    pub fn object_inverses(&self, x: usize) -> Vec<usize> {
        (0..self.base.objects)
            .filter(|&y| {
                let (Some(xy), Some(yx)) = (self.prod(x, y), self.prod(y, x)) else {
                    return false;
                };
                self.has_equivalence(xy, self.unit) && self.has_equivalence(yx, self.unit)
            })
            .collect()
    }

    fn has_equivalence(&self, x: usize, y: usize) -> bool {
        if x == y {
            return true;
        }
        let Some(h) = self.base.hom(x, y) else {
            return false;
        };
        (0..h.objects).any(|idx| {
            crate::two_cat::is_invertible_1cell(&self.base, OneCell { src: x, tgt: y, idx })
                .is_some()
        })
    }
}
