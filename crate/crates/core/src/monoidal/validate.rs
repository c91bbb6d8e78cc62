//! Axiom validation for permutative categories and permutative Gray-monoids.
//!
//! Every axiom class gets its own label so reports can be filtered; the
//! symmetry-vs-interchange compatibility is the class `beta-sigma`, kept
//! separate so it can be revised without touching the other checks.

use crate::fincat;
use crate::report::ValidationReport;
use crate::two_cat::{self, CellExpr, OneCell};

use super::{PermGrayMonoid, PermutativeCategory};

pub fn validate_permcat(c: &PermutativeCategory) -> ValidationReport {
    let mut rep = fincat::validate_category(&c.base);
    if rep.has_structural_errors() {
        return rep;
    }
    let n = c.base.objects;
    let m = c.base.num_morphisms();

    if c.unit >= n {
        rep.structural("tensor", "unit object out of range".into());
    }
    if (c.tensor_obj.rows, c.tensor_obj.cols) != (n, n)
        || (c.tensor_mor.rows, c.tensor_mor.cols) != (m, m)
        || (c.beta.rows, c.beta.cols) != (n, n)
    {
        rep.structural("tensor", "tensor/beta table shape mismatch".into());
        return rep;
    }
    for x in 0..n {
        for y in 0..n {
            if let Some(v) = c.tensor_obj(x, y) {
                if v >= n {
                    rep.structural("tensor", format!("{x}⊕{y} out of range"));
                }
            }
        }
    }
    for f in 0..m {
        for g in 0..m {
            if let Some(v) = c.tensor_mor(f, g) {
                if v >= m {
                    rep.structural("tensor", format!("{f}⊕{g} out of range"));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            match (c.beta(x, y), c.tensor_obj(x, y), c.tensor_obj(y, x)) {
                (Some(b), Some(xy), Some(yx)) => {
                    if b >= m {
                        rep.structural("beta", format!("β({x},{y}) out of range"));
                    } else {
                        rep.check(
                            "beta-boundary",
                            c.base.mor_src[b] == xy && c.base.mor_tgt[b] == yx,
                            || format!("β({x},{y}) is not a morphism {x}⊕{y} -> {y}⊕{x}"),
                        );
                    }
                }
                (None, Some(_), Some(_)) => {
                    rep.structural("beta", format!("β({x},{y}) missing where tensors exist"))
                }
                (Some(_), _, _) => {
                    rep.structural("beta", format!("β({x},{y}) present without tensors"))
                }
                (None, _, _) => rep.skip(),
            }
        }
    }
    if rep.has_structural_errors() {
        return rep;
    }

    // Strict unit: required total.
    for x in 0..n {
        rep.check("tensor-unit", c.tensor_obj(c.unit, x) == Some(x), || {
            format!("e⊕{x} != {x}")
        });
        rep.check("tensor-unit", c.tensor_obj(x, c.unit) == Some(x), || {
            format!("{x}⊕e != {x}")
        });
    }
    let id_e = c.base.identity[c.unit];
    for f in 0..m {
        rep.check("tensor-unit", c.tensor_mor(id_e, f) == Some(f), || {
            format!("id_e⊕{f} != {f}")
        });
        rep.check("tensor-unit", c.tensor_mor(f, id_e) == Some(f), || {
            format!("{f}⊕id_e != {f}")
        });
    }

    // Strict associativity, object and morphism level.
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = c.tensor_obj(x, y).and_then(|xy| c.tensor_obj(xy, z));
                let rhs = c.tensor_obj(y, z).and_then(|yz| c.tensor_obj(x, yz));
                match (lhs, rhs) {
                    (Some(a), Some(b)) => rep.check("tensor-assoc", a == b, || {
                        format!("({x}⊕{y})⊕{z} != {x}⊕({y}⊕{z})")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }
    for f in 0..m {
        for g in 0..m {
            for h in 0..m {
                let lhs = c.tensor_mor(f, g).and_then(|fg| c.tensor_mor(fg, h));
                let rhs = c.tensor_mor(g, h).and_then(|gh| c.tensor_mor(f, gh));
                match (lhs, rhs) {
                    (Some(a), Some(b)) => rep.check("tensor-assoc", a == b, || {
                        format!("morphism tensor not associative at ({f},{g},{h})")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }

    // Functoriality of ⊕.
    for f in 0..m {
        for g in 0..m {
            match (
                c.tensor_mor(f, g),
                c.tensor_obj(c.base.mor_src[f], c.base.mor_src[g]),
                c.tensor_obj(c.base.mor_tgt[f], c.base.mor_tgt[g]),
            ) {
                (Some(fg), Some(s), Some(t)) => rep.check(
                    "tensor-functor",
                    c.base.mor_src[fg] == s && c.base.mor_tgt[fg] == t,
                    || format!("boundary of {f}⊕{g} mismatched"),
                ),
                (Some(_), _, _) => {
                    rep.structural("tensor", format!("{f}⊕{g} defined without object tensors"))
                }
                _ => rep.skip(),
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            match (
                c.tensor_mor(c.base.identity[x], c.base.identity[y]),
                c.tensor_obj(x, y),
            ) {
                (Some(v), Some(xy)) => rep.check("tensor-functor", v == c.base.identity[xy], || {
                    format!("id_{x}⊕id_{y} is not id of {x}⊕{y}")
                }),
                _ => rep.skip(),
            }
        }
    }
    let composable: Vec<(usize, usize)> = (0..m)
        .flat_map(|g| (0..m).map(move |f| (g, f)))
        .filter(|&(g, f)| c.base.mor_tgt[f] == c.base.mor_src[g])
        .collect();
    for &(f2, f1) in &composable {
        for &(g2, g1) in &composable {
            let ff = c.base.compose(f2, f1).unwrap();
            let gg = c.base.compose(g2, g1).unwrap();
            let lhs = c.tensor_mor(ff, gg);
            let rhs = match (c.tensor_mor(f2, g2), c.tensor_mor(f1, g1)) {
                (Some(a), Some(b)) => c.base.compose(a, b),
                _ => None,
            };
            match (lhs, rhs) {
                (Some(a), Some(b)) => rep.check("tensor-functor", a == b, || {
                    format!("(f'∘f)⊕(g'∘g) != (f'⊕g')∘(f⊕g) at ({f2},{f1},{g2},{g1})")
                }),
                _ => rep.skip(),
            }
        }
    }

    // Naturality of β.
    for f in 0..m {
        for g in 0..m {
            let (x, x2) = (c.base.mor_src[f], c.base.mor_tgt[f]);
            let (y, y2) = (c.base.mor_src[g], c.base.mor_tgt[g]);
            let lhs = match (c.beta(x2, y2), c.tensor_mor(f, g)) {
                (Some(b), Some(fg)) => c.base.compose(b, fg),
                _ => None,
            };
            let rhs = match (c.tensor_mor(g, f), c.beta(x, y)) {
                (Some(gf), Some(b)) => c.base.compose(gf, b),
                _ => None,
            };
            match (lhs, rhs) {
                (Some(a), Some(b)) => rep.check("beta-natural", a == b, || {
                    format!("β not natural at ({f},{g})")
                }),
                _ => rep.skip(),
            }
        }
    }

    // β_{y,x} β_{x,y} = id, β_{e,x} = id = β_{x,e}, and the hexagon.
    for x in 0..n {
        for y in 0..n {
            match (c.beta(x, y), c.beta(y, x), c.tensor_obj(x, y)) {
                (Some(b1), Some(b2), Some(xy)) => {
                    rep.check(
                        "beta-sym",
                        c.base.compose(b2, b1) == Some(c.base.identity[xy]),
                        || format!("β({y},{x})∘β({x},{y}) != id"),
                    );
                }
                _ => rep.skip(),
            }
        }
    }
    for x in 0..n {
        rep.check(
            "beta-unit",
            c.beta(c.unit, x) == Some(c.base.identity[x]),
            || format!("β(e,{x}) != id"),
        );
        rep.check(
            "beta-unit",
            c.beta(x, c.unit) == Some(c.base.identity[x]),
            || format!("β({x},e) != id"),
        );
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = c.tensor_obj(y, z).and_then(|yz| c.beta(x, yz));
                let rhs = (|| {
                    let byz = c.tensor_mor(c.base.identity[y], c.beta(x, z)?)?;
                    let bxy = c.tensor_mor(c.beta(x, y)?, c.base.identity[z])?;
                    c.base.compose(byz, bxy)
                })();
                match (lhs, rhs) {
                    (Some(a), Some(b)) => rep.check("beta-hexagon", a == b, || {
                        format!("hexagon fails at ({x},{y},{z})")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }
    rep
}

/// All objects tensor-invertible and all morphisms invertible.
pub fn is_picard_category(c: &PermutativeCategory) -> bool {
    (0..c.base.num_morphisms()).all(|f| c.base.inverse(f).is_some())
        && (0..c.base.objects).all(|x| !c.tensor_inverses(x).is_empty())
}

pub fn validate_pgm(d: &PermGrayMonoid) -> ValidationReport {
    let mut rep = two_cat::validate_2category(&d.base);
    if rep.has_structural_errors() {
        return rep;
    }
    let n = d.base.objects;
    if d.unit >= n || (d.prod_obj.rows, d.prod_obj.cols) != (n, n) {
        rep.structural("prod", "unit or product table malformed".into());
        return rep;
    }
    for x in 0..n {
        for y in 0..n {
            if let Some(v) = d.prod(x, y) {
                if v >= n {
                    rep.structural("prod", format!("{x}⊕{y} out of range"));
                }
            }
        }
    }
    if rep.has_structural_errors() {
        return rep;
    }

    // Strict monoid on objects: total unit, associativity where defined.
    for x in 0..n {
        rep.check("monoid-unit", d.prod(d.unit, x) == Some(x), || {
            format!("e⊕{x} != {x}")
        });
        rep.check("monoid-unit", d.prod(x, d.unit) == Some(x), || {
            format!("{x}⊕e != {x}")
        });
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = d.prod(x, y).and_then(|xy| d.prod(xy, z));
                let rhs = d.prod(y, z).and_then(|yz| d.prod(x, yz));
                match (lhs, rhs) {
                    (Some(a), Some(b)) => rep.check("monoid-assoc", a == b, || {
                        format!("({x}⊕{y})⊕{z} != {x}⊕({y}⊕{z})")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }

    // Whisker tables: presence, shape, and value ranges.
    for a in 0..n {
        for (&(x, y), h) in &d.base.homs {
            if h.objects == 0 {
                continue;
            }
            if d.prod(a, x).is_some() && d.prod(a, y).is_some() {
                match d.lwhisker.get(&(a, x, y)) {
                    None => rep.structural("whisker", format!("missing lwhisker({a},{x},{y})")),
                    Some(t) => {
                        if t.one.len() != h.objects || t.two.len() != h.num_morphisms() {
                            rep.structural("whisker", format!("lwhisker({a},{x},{y}) shape"));
                        }
                    }
                }
            }
            if d.prod(x, a).is_some() && d.prod(y, a).is_some() {
                match d.rwhisker.get(&(a, x, y)) {
                    None => rep.structural("whisker", format!("missing rwhisker({a},{x},{y})")),
                    Some(t) => {
                        if t.one.len() != h.objects || t.two.len() != h.num_morphisms() {
                            rep.structural("whisker", format!("rwhisker({a},{x},{y}) shape"));
                        }
                    }
                }
            }
        }
    }
    for (side, tables, target) in [
        ("l", &d.lwhisker, true),
        ("r", &d.rwhisker, false),
    ] {
        for (&(a, x, y), t) in tables {
            if a >= n || x >= n || y >= n || d.base.hom(x, y).is_none() {
                rep.structural("whisker", format!("{side}whisker({a},{x},{y}) over missing hom"));
                continue;
            }
            let image_hom = if target {
                d.prod(a, x).zip(d.prod(a, y))
            } else {
                d.prod(x, a).zip(d.prod(y, a))
            };
            let Some((ix, iy)) = image_hom else {
                rep.structural("whisker", format!("{side}whisker({a},{x},{y}) over undefined products"));
                continue;
            };
            let Some(ih) = d.base.hom(ix, iy) else {
                if t.one.iter().any(|v| v.is_some()) || t.two.iter().any(|v| v.is_some()) {
                    rep.structural("whisker", format!("{side}whisker({a},{x},{y}) into missing hom"));
                }
                continue;
            };
            if t.one.iter().flatten().any(|&v| v >= ih.objects)
                || t.two.iter().flatten().any(|&v| v >= ih.num_morphisms())
            {
                rep.structural("whisker", format!("{side}whisker({a},{x},{y}) value out of range"));
            }
        }
    }
    // Interchange and symmetry tables: keys must name real cells and values
    // must land in the right hom-categories.
    for (&(f, g), &v) in &d.sigma {
        let fk = d.base.hom(f.src, f.tgt).map(|h| f.idx < h.objects).unwrap_or(false);
        let gk = d.base.hom(g.src, g.tgt).map(|h| g.idx < h.objects).unwrap_or(false);
        if !fk || !gk {
            rep.structural("sigma", format!("Σ({f:?},{g:?}) keyed by a nonexistent 1-cell"));
            continue;
        }
        let target = d
            .prod(f.src, g.src)
            .zip(d.prod(f.tgt, g.tgt))
            .and_then(|(s, t)| d.base.hom(s, t));
        match target {
            Some(h) if v < h.num_morphisms() => {}
            _ => rep.structural("sigma", format!("Σ({f:?},{g:?}) value out of range")),
        }
    }
    for x in 0..n {
        for y in 0..n {
            if let Some(v) = d.beta_cell.get(x, y) {
                let ok = d
                    .prod(x, y)
                    .zip(d.prod(y, x))
                    .and_then(|(s, t)| d.base.hom(s, t))
                    .map(|h| v < h.objects)
                    .unwrap_or(false);
                if !ok {
                    rep.structural("beta", format!("β({x},{y}) value out of range"));
                }
            }
        }
    }
    if rep.has_structural_errors() {
        return rep;
    }

    let ones = d.base.one_cells();
    let twos = d.base.two_cells();

    // Whiskering is a functor on every hom-category (both sides).
    for a in 0..n {
        for al in &twos {
            for (side, w) in [("l", d.lw_two(a, *al)), ("r", d.rw_two(a, *al))] {
                let (ws, wt) = if side == "l" {
                    (d.lw_one(a, d.base.two_src(*al)), d.lw_one(a, d.base.two_tgt(*al)))
                } else {
                    (d.rw_one(a, d.base.two_src(*al)), d.rw_one(a, d.base.two_tgt(*al)))
                };
                match (w, ws, wt) {
                    (Some(w), Some(ws), Some(wt)) => rep.check(
                        "whisker-functor",
                        d.base.two_src(w) == ws && d.base.two_tgt(w) == wt,
                        || format!("{side}-whisker by {a} breaks boundaries at {al:?}"),
                    ),
                    _ => rep.skip(),
                }
            }
        }
        for f in &ones {
            match (d.lw_two(a, d.base.id2(*f)), d.lw_one(a, *f)) {
                (Some(w), Some(wf)) => rep.check("whisker-functor", w == d.base.id2(wf), || {
                    format!("lwhisker by {a} does not preserve id2 at {f:?}")
                }),
                _ => rep.skip(),
            }
            match (d.rw_two(a, d.base.id2(*f)), d.rw_one(a, *f)) {
                (Some(w), Some(wf)) => rep.check("whisker-functor", w == d.base.id2(wf), || {
                    format!("rwhisker by {a} does not preserve id2 at {f:?}")
                }),
                _ => rep.skip(),
            }
        }
        for b in &twos {
            for al in &twos {
                let Some(ba) = d.base.vcomp(*b, *al) else { continue };
                let lhs = d.lw_two(a, ba);
                let rhs = match (d.lw_two(a, *b), d.lw_two(a, *al)) {
                    (Some(wb), Some(wa)) => d.base.vcomp(wb, wa),
                    _ => None,
                };
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-functor", p == q, || {
                        format!("lwhisker by {a} breaks vertical composition")
                    }),
                    _ => rep.skip(),
                }
                let lhs = d.rw_two(a, ba);
                let rhs = match (d.rw_two(a, *b), d.rw_two(a, *al)) {
                    (Some(wb), Some(wa)) => d.base.vcomp(wb, wa),
                    _ => None,
                };
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-functor", p == q, || {
                        format!("rwhisker by {a} breaks vertical composition")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }

    // Whiskering is a 2-functor: identity 1-cells and horizontal composites.
    for a in 0..n {
        for x in 0..n {
            match (d.lw_one(a, d.base.id1[x]), d.prod(a, x)) {
                (Some(w), Some(ax)) => rep.check("whisker-2functor", w == d.base.id1[ax], || {
                    format!("{a}⊕id1_{x} is not id1")
                }),
                _ => rep.skip(),
            }
            match (d.rw_one(a, d.base.id1[x]), d.prod(x, a)) {
                (Some(w), Some(xa)) => rep.check("whisker-2functor", w == d.base.id1[xa], || {
                    format!("id1_{x}⊕{a} is not id1")
                }),
                _ => rep.skip(),
            }
        }
        for g in &ones {
            for f in &ones {
                if f.tgt != g.src {
                    continue;
                }
                let Some(gf) = d.base.hcomp_one(*g, *f) else {
                    rep.skip();
                    continue;
                };
                let lhs = d.lw_one(a, gf);
                let rhs = match (d.lw_one(a, *g), d.lw_one(a, *f)) {
                    (Some(wg), Some(wf)) => d.base.hcomp_one(wg, wf),
                    _ => None,
                };
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-2functor", p == q, || {
                        format!("{a}⊕({g:?}∘{f:?}) mismatch")
                    }),
                    _ => rep.skip(),
                }
                let lhs = d.rw_one(a, gf);
                let rhs = match (d.rw_one(a, *g), d.rw_one(a, *f)) {
                    (Some(wg), Some(wf)) => d.base.hcomp_one(wg, wf),
                    _ => None,
                };
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-2functor", p == q, || {
                        format!("({g:?}∘{f:?})⊕{a} mismatch")
                    }),
                    _ => rep.skip(),
                }
            }
        }
        for b in &twos {
            for al in &twos {
                if al.tgt != b.src {
                    continue;
                }
                let Some(ba) = d.base.hcomp_two(*b, *al) else {
                    rep.skip();
                    continue;
                };
                let lhs = d.lw_two(a, ba);
                let rhs = match (d.lw_two(a, *b), d.lw_two(a, *al)) {
                    (Some(wb), Some(wa)) => d.base.hcomp_two(wb, wa),
                    _ => None,
                };
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-2functor", p == q, || {
                        format!("{a}⊕({b:?}*{al:?}) mismatch")
                    }),
                    _ => rep.skip(),
                }
                let lhs = d.rw_two(a, ba);
                let rhs = match (d.rw_two(a, *b), d.rw_two(a, *al)) {
                    (Some(wb), Some(wa)) => d.base.hcomp_two(wb, wa),
                    _ => None,
                };
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-2functor", p == q, || {
                        format!("({b:?}*{al:?})⊕{a} mismatch")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }

    // Whiskering composes strictly: a⊕(b⊕f) = (a⊕b)⊕f and the mirror and
    // mixed forms, with e acting as the identity.
    for f in &ones {
        match d.lw_one(d.unit, *f) {
            Some(w) => rep.check("whisker-assoc", w == *f, || format!("e⊕{f:?} != {f:?}")),
            None => rep.skip(),
        }
        match d.rw_one(d.unit, *f) {
            Some(w) => rep.check("whisker-assoc", w == *f, || format!("{f:?}⊕e != {f:?}")),
            None => rep.skip(),
        }
        for a in 0..n {
            for b in 0..n {
                let lhs = d.lw_one(b, *f).and_then(|w| d.lw_one(a, w));
                let rhs = d.prod(a, b).and_then(|ab| d.lw_one(ab, *f));
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-assoc", p == q, || {
                        format!("{a}⊕({b}⊕{f:?}) != ({a}⊕{b})⊕{f:?}")
                    }),
                    _ => rep.skip(),
                }
                let lhs = d.rw_one(a, *f).and_then(|w| d.rw_one(b, w));
                let rhs = d.prod(a, b).and_then(|ab| d.rw_one(ab, *f));
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-assoc", p == q, || {
                        format!("({f:?}⊕{a})⊕{b} != {f:?}⊕({a}⊕{b})")
                    }),
                    _ => rep.skip(),
                }
                let lhs = d.rw_one(b, *f).and_then(|w| d.lw_one(a, w));
                let rhs = d.lw_one(a, *f).and_then(|w| d.rw_one(b, w));
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-assoc", p == q, || {
                        format!("{a}⊕({f:?}⊕{b}) != ({a}⊕{f:?})⊕{b}")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }
    for al in &twos {
        match d.lw_two(d.unit, *al) {
            Some(w) => rep.check("whisker-assoc", w == *al, || format!("e⊕{al:?} != {al:?}")),
            None => rep.skip(),
        }
        match d.rw_two(d.unit, *al) {
            Some(w) => rep.check("whisker-assoc", w == *al, || format!("{al:?}⊕e != {al:?}")),
            None => rep.skip(),
        }
        for a in 0..n {
            for b in 0..n {
                let lhs = d.lw_two(b, *al).and_then(|w| d.lw_two(a, w));
                let rhs = d.prod(a, b).and_then(|ab| d.lw_two(ab, *al));
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-assoc", p == q, || {
                        format!("2-cell lwhisker assoc fails at ({a},{b},{al:?})")
                    }),
                    _ => rep.skip(),
                }
                let lhs = d.rw_two(a, *al).and_then(|w| d.rw_two(b, w));
                let rhs = d.prod(a, b).and_then(|ab| d.rw_two(ab, *al));
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-assoc", p == q, || {
                        format!("2-cell rwhisker assoc fails at ({a},{b},{al:?})")
                    }),
                    _ => rep.skip(),
                }
                let lhs = d.rw_two(b, *al).and_then(|w| d.lw_two(a, w));
                let rhs = d.lw_two(a, *al).and_then(|w| d.rw_two(b, w));
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("whisker-assoc", p == q, || {
                        format!("2-cell mixed whisker fails at ({a},{b},{al:?})")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }

    // Interchange cell table: presence, boundaries, invertibility, units.
    let sigma_ingredients = |f: &OneCell, g: &OneCell| -> Option<(OneCell, OneCell)> {
        let src = d.base.hcomp_one(d.rw_one(g.src, *f)?, d.lw_one(f.src, *g)?)?;
        let tgt = d.base.hcomp_one(d.lw_one(f.tgt, *g)?, d.rw_one(g.tgt, *f)?)?;
        Some((src, tgt))
    };
    for f in &ones {
        for g in &ones {
            match (sigma_ingredients(f, g), d.sigma(*f, *g)) {
                (Some((src, tgt)), Some(s)) => {
                    rep.check(
                        "sigma-boundary",
                        d.base.two_src(s) == src && d.base.two_tgt(s) == tgt,
                        || format!("Σ({f:?},{g:?}) has wrong boundary"),
                    );
                    rep.check(
                        "sigma-invertible",
                        two_cat::is_invertible_2cell(&d.base, s),
                        || format!("Σ({f:?},{g:?}) not invertible"),
                    );
                }
                (Some(_), None) => {
                    rep.structural("sigma", format!("Σ({f:?},{g:?}) missing"));
                }
                (None, Some(_)) => {
                    rep.structural("sigma", format!("Σ({f:?},{g:?}) present but boundary undefined"));
                }
                (None, None) => rep.skip(),
            }
        }
    }
    if rep.has_structural_errors() {
        return rep;
    }
    for x in 0..n {
        for g in &ones {
            match (d.sigma(d.base.id1[x], *g), d.lw_one(x, *g)) {
                (Some(s), Some(xg)) => rep.check("sigma-unit", s == d.base.id2(xg), || {
                    format!("Σ(id1_{x},{g:?}) is not an identity 2-cell")
                }),
                _ => rep.skip(),
            }
            match (d.sigma(*g, d.base.id1[x]), d.rw_one(x, *g)) {
                (Some(s), Some(gx)) => rep.check("sigma-unit", s == d.base.id2(gx), || {
                    format!("Σ({g:?},id1_{x}) is not an identity 2-cell")
                }),
                _ => rep.skip(),
            }
        }
    }

    // Pasting axioms are evaluated through the cell-expression evaluator.
    let eval_eq = |rep: &mut ValidationReport, axiom: &str, lhs: &CellExpr, rhs: &CellExpr, what: &dyn Fn() -> String| {
        match (two_cat::eval_cell(&d.base, lhs), two_cat::eval_cell(&d.base, rhs)) {
            (Ok(a), Ok(b)) => rep.check(axiom, a == b, what),
            (Err(two_cat::TwoCatError::Undefined { .. }), _)
            | (_, Err(two_cat::TwoCatError::Undefined { .. })) => rep.skip(),
            (Err(e), _) | (_, Err(e)) => rep.check(axiom, false, || format!("{}: {e}", what())),
        }
    };

    // Naturality of Σ in each variable against all 2-cells.
    for al in &twos {
        let f = d.base.two_src(*al);
        let f2 = d.base.two_tgt(*al);
        for g in &ones {
            let parts = (
                d.sigma(f, *g),
                d.sigma(f2, *g),
                d.rw_two(g.src, *al),
                d.rw_two(g.tgt, *al),
                d.lw_one(f.src, *g),
                d.lw_one(f.tgt, *g),
            );
            if let (Some(s1), Some(s2), Some(ab), Some(ab2), Some(ag), Some(a2g)) = parts {
                let lhs = CellExpr::vcomp(
                    CellExpr::whisker_l(CellExpr::one(a2g), CellExpr::two(ab)),
                    CellExpr::two(s1),
                );
                let rhs = CellExpr::vcomp(
                    CellExpr::two(s2),
                    CellExpr::whisker_r(CellExpr::two(ab2), CellExpr::one(ag)),
                );
                eval_eq(&mut rep, "sigma-natural", &lhs, &rhs, &|| {
                    format!("Σ not natural in the first variable at ({al:?},{g:?})")
                });
            } else {
                rep.skip();
            }
            let parts = (
                d.sigma(*g, f),
                d.sigma(*g, f2),
                d.lw_two(g.src, *al),
                d.lw_two(g.tgt, *al),
                d.rw_one(f.src, *g),
                d.rw_one(f.tgt, *g),
            );
            if let (Some(s1), Some(s2), Some(ba), Some(b2a), Some(gb), Some(gb2)) = parts {
                let lhs = CellExpr::vcomp(
                    CellExpr::two(s2),
                    CellExpr::whisker_l(CellExpr::one(gb2), CellExpr::two(ba)),
                );
                let rhs = CellExpr::vcomp(
                    CellExpr::whisker_r(CellExpr::two(b2a), CellExpr::one(gb)),
                    CellExpr::two(s1),
                );
                eval_eq(&mut rep, "sigma-natural", &lhs, &rhs, &|| {
                    format!("Σ not natural in the second variable at ({g:?},{al:?})")
                });
            } else {
                rep.skip();
            }
        }
    }

    // Bilinearity of Σ in each variable.
    for f2 in &ones {
        for f1 in &ones {
            if f1.tgt != f2.src {
                continue;
            }
            let Some(ff) = d.base.hcomp_one(*f2, *f1) else {
                rep.skip();
                continue;
            };
            for g in &ones {
                let parts = (
                    d.sigma(ff, *g),
                    d.sigma(*f2, *g),
                    d.sigma(*f1, *g),
                    d.rw_one(g.src, *f1),
                    d.rw_one(g.tgt, *f2),
                );
                if let (Some(sff), Some(s2), Some(s1), Some(f1b), Some(f2b2)) = parts {
                    let rhs = CellExpr::vcomp(
                        CellExpr::whisker_r(CellExpr::two(s2), CellExpr::one(f1b)),
                        CellExpr::whisker_l(CellExpr::one(f2b2), CellExpr::two(s1)),
                    );
                    eval_eq(&mut rep, "sigma-bilinear", &CellExpr::two(sff), &rhs, &|| {
                        format!("Σ not bilinear in the first variable at ({f2:?}∘{f1:?},{g:?})")
                    });
                } else {
                    rep.skip();
                }
                let parts = (
                    d.sigma(*g, ff),
                    d.sigma(*g, *f2),
                    d.sigma(*g, *f1),
                    d.lw_one(g.tgt, *f2),
                    d.lw_one(g.src, *f1),
                );
                if let (Some(sff), Some(s2), Some(s1), Some(a2g2), Some(ag1)) = parts {
                    let rhs = CellExpr::vcomp(
                        CellExpr::whisker_l(CellExpr::one(a2g2), CellExpr::two(s1)),
                        CellExpr::whisker_r(CellExpr::two(s2), CellExpr::one(ag1)),
                    );
                    eval_eq(&mut rep, "sigma-bilinear", &CellExpr::two(sff), &rhs, &|| {
                        format!("Σ not bilinear in the second variable at ({g:?},{f2:?}∘{f1:?})")
                    });
                } else {
                    rep.skip();
                }
            }
        }
    }

    // Whiskering by an object is absorbed into the Σ arguments.
    for w in 0..n {
        for f in &ones {
            for g in &ones {
                match (d.sigma(*f, *g).and_then(|s| d.rw_two(w, s)), d.rw_one(w, *g).and_then(|gw| d.sigma(*f, gw))) {
                    (Some(p), Some(q)) => rep.check("sigma-absorb", p == q, || {
                        format!("Σ({f:?},{g:?})⊕{w} != Σ({f:?},{g:?}⊕{w})")
                    }),
                    _ => rep.skip(),
                }
                match (d.sigma(*f, *g).and_then(|s| d.lw_two(w, s)), d.lw_one(w, *f).and_then(|wf| d.sigma(wf, *g))) {
                    (Some(p), Some(q)) => rep.check("sigma-absorb", p == q, || {
                        format!("{w}⊕Σ({f:?},{g:?}) != Σ({w}⊕{f:?},{g:?})")
                    }),
                    _ => rep.skip(),
                }
                match (d.rw_one(w, *f).and_then(|fw| d.sigma(fw, *g)), d.lw_one(w, *g).and_then(|wg| d.sigma(*f, wg))) {
                    (Some(p), Some(q)) => rep.check("sigma-absorb", p == q, || {
                        format!("Σ({f:?}⊕{w},{g:?}) != Σ({f:?},{w}⊕{g:?})")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }

    // β table: presence and boundary.
    for x in 0..n {
        for y in 0..n {
            match (d.beta(x, y), d.prod(x, y), d.prod(y, x)) {
                (Some(b), Some(xy), Some(yx)) => {
                    rep.check(
                        "beta-boundary",
                        b.src == xy && b.tgt == yx,
                        || format!("β({x},{y}) is not a 1-cell {x}⊕{y} -> {y}⊕{x}"),
                    );
                }
                (None, Some(_), Some(_)) => {
                    rep.structural("beta", format!("β({x},{y}) missing where products exist"))
                }
                (Some(_), _, _) => rep.structural("beta", format!("β({x},{y}) over undefined products")),
                (None, _, _) => rep.skip(),
            }
        }
    }
    if rep.has_structural_errors() {
        return rep;
    }

    // Strict 1-naturality of β against whiskered 1-cells.
    for f in &ones {
        for y in 0..n {
            let lhs = (|| d.base.hcomp_one(d.beta(f.tgt, y)?, d.rw_one(y, *f)?))();
            let rhs = (|| d.base.hcomp_one(d.lw_one(y, *f)?, d.beta(f.src, y)?))();
            match (lhs, rhs) {
                (Some(p), Some(q)) => rep.check("beta-natural-1", p == q, || {
                    format!("β not natural against {f:?}⊕{y}")
                }),
                _ => rep.skip(),
            }
            let lhs = (|| d.base.hcomp_one(d.beta(y, f.tgt)?, d.lw_one(y, *f)?))();
            let rhs = (|| d.base.hcomp_one(d.rw_one(y, *f)?, d.beta(y, f.src)?))();
            match (lhs, rhs) {
                (Some(p), Some(q)) => rep.check("beta-natural-1", p == q, || {
                    format!("β not natural against {y}⊕{f:?}")
                }),
                _ => rep.skip(),
            }
        }
    }

    // 2-naturality of β against whiskered 2-cells: the square pastes the
    // whiskered cells with the β components at the (shared) boundaries of
    // the 2-cell's source and target 1-cells.
    for al in &twos {
        let f = d.base.two_src(*al);
        for y in 0..n {
            if let (Some(bx2y), Some(bxy), Some(afy), Some(yaf)) = (
                d.beta(f.tgt, y),
                d.beta(f.src, y),
                d.rw_two(y, *al),
                d.lw_two(y, *al),
            ) {
                let lhs = CellExpr::whisker_l(CellExpr::one(bx2y), CellExpr::two(afy));
                let rhs = CellExpr::whisker_r(CellExpr::two(yaf), CellExpr::one(bxy));
                eval_eq(&mut rep, "beta-natural-2", &lhs, &rhs, &|| {
                    format!("β not 2-natural against {al:?}⊕{y}")
                });
            } else {
                rep.skip();
            }
            if let (Some(byx2), Some(byx), Some(yal), Some(aly)) = (
                d.beta(y, f.tgt),
                d.beta(y, f.src),
                d.lw_two(y, *al),
                d.rw_two(y, *al),
            ) {
                let lhs = CellExpr::whisker_l(CellExpr::one(byx2), CellExpr::two(yal));
                let rhs = CellExpr::whisker_r(CellExpr::two(aly), CellExpr::one(byx));
                eval_eq(&mut rep, "beta-natural-2", &lhs, &rhs, &|| {
                    format!("β not 2-natural against {y}⊕{al:?}")
                });
            } else {
                rep.skip();
            }
        }
    }

    // 2-naturality of β against the interchange cells, transported along the
    // strict naturality squares.
    for f in &ones {
        for g in &ones {
            let parts = (
                d.sigma(*f, *g),
                d.sigma(*g, *f).and_then(|s| two_cat::invert_2cell(&d.base, s)),
                d.beta(f.tgt, g.tgt),
                d.beta(f.src, g.src),
            );
            if let (Some(s), Some(sinv), Some(b2), Some(b1)) = parts {
                let lhs = CellExpr::whisker_l(CellExpr::one(b2), CellExpr::two(s));
                let rhs = CellExpr::whisker_r(CellExpr::two(sinv), CellExpr::one(b1));
                eval_eq(&mut rep, "beta-sigma", &lhs, &rhs, &|| {
                    format!("β does not interchange Σ at ({f:?},{g:?})")
                });
            } else {
                rep.skip();
            }
        }
    }

    // β_{y,x} ∘ β_{x,y} = id, β(e,x) = id, and the hexagon on components.
    for x in 0..n {
        for y in 0..n {
            match (d.beta(x, y), d.beta(y, x), d.prod(x, y)) {
                (Some(b1), Some(b2), Some(xy)) => rep.check(
                    "beta-sym",
                    d.base.hcomp_one(b2, b1) == Some(d.base.id1[xy]),
                    || format!("β({y},{x})∘β({x},{y}) != id1"),
                ),
                _ => rep.skip(),
            }
        }
    }
    for x in 0..n {
        rep.check(
            "beta-unit",
            d.beta(d.unit, x) == Some(d.base.id1[x]),
            || format!("β(e,{x}) != id1"),
        );
        rep.check(
            "beta-unit",
            d.beta(x, d.unit) == Some(d.base.id1[x]),
            || format!("β({x},e) != id1"),
        );
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = d.prod(y, z).and_then(|yz| d.beta(x, yz));
                let rhs = (|| {
                    let byz = d.lw_one(y, d.beta(x, z)?)?;
                    let bxy = d.rw_one(z, d.beta(x, y)?)?;
                    d.base.hcomp_one(byz, bxy)
                })();
                match (lhs, rhs) {
                    (Some(p), Some(q)) => rep.check("beta-hexagon", p == q, || {
                        format!("hexagon fails at ({x},{y},{z})")
                    }),
                    _ => rep.skip(),
                }
            }
        }
    }
    rep
}
