//! The four functors between permutative categories and permutative
//! Gray-monoids (discretize, 1-truncate, suspend, loop), finite products of
//! Gray-monoids, and executable checks of both adjunctions.

use std::collections::BTreeMap;

use crate::fincat::{self, FinCategory, FinFunctor};
use crate::report::ValidationReport;
use crate::two_cat::{Fin2Category, HcompTable, OneCell, Strict2Functor};

use super::{MonoidalError, PermGrayMonoid, PermutativeCategory, Table2, WhiskerTable};

/// Per-hom bookkeeping for `discretize`: the list of global morphisms of the
/// base category that become the 1-cells of each hom.
fn hom_partition(c: &FinCategory) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut homs: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for m in 0..c.num_morphisms() {
        homs.entry((c.mor_src[m], c.mor_tgt[m])).or_default().push(m);
    }
    homs
}

/// View a permutative category as a permutative Gray-monoid with only
/// identity 2-cells and an identity interchange-cell table.
pub fn discretize(c: &PermutativeCategory) -> PermGrayMonoid {
    let homs_global = hom_partition(&c.base);
    let local_of = |x: usize, y: usize, global: usize| -> usize {
        homs_global[&(x, y)].iter().position(|&m| m == global).unwrap()
    };

    let mut homs = BTreeMap::new();
    for (&(x, y), members) in &homs_global {
        let k = members.len();
        homs.insert(
            (x, y),
            FinCategory {
                objects: k,
                mor_src: (0..k).collect(),
                mor_tgt: (0..k).collect(),
                identity: (0..k).collect(),
                compose: (0..k).map(|i| ((i, i), i)).collect(),
                object_labels: None,
            },
        );
    }
    let id1 = (0..c.base.objects)
        .map(|x| OneCell {
            src: x,
            tgt: x,
            idx: local_of(x, x, c.base.identity[x]),
        })
        .collect();
    let mut hcomp = BTreeMap::new();
    for (&(x, y), fs) in &homs_global {
        for (&(y2, z), gs) in &homs_global {
            if y2 != y {
                continue;
            }
            let one: Vec<Vec<Option<usize>>> = gs
                .iter()
                .map(|&g| {
                    fs.iter()
                        .map(|&f| c.base.compose(g, f).map(|gf| local_of(x, z, gf)))
                        .collect()
                })
                .collect();
            hcomp.insert(
                (x, y, z),
                HcompTable {
                    two: one.clone(),
                    one,
                },
            );
        }
    }
    let base = Fin2Category {
        objects: c.base.objects,
        homs,
        id1,
        hcomp,
        partial: false,
        object_labels: c.base.object_labels.clone(),
    };

    let mut lwhisker = BTreeMap::new();
    let mut rwhisker = BTreeMap::new();
    for a in 0..c.base.objects {
        for (&(x, y), members) in &homs_global {
            if c.tensor_obj(a, x).is_some() && c.tensor_obj(a, y).is_some() {
                let one: Vec<Option<usize>> = members
                    .iter()
                    .map(|&f| {
                        let im = c.tensor_mor(c.base.identity[a], f)?;
                        Some(local_of(c.tensor_obj(a, x)?, c.tensor_obj(a, y)?, im))
                    })
                    .collect();
                lwhisker.insert((a, x, y), WhiskerTable { two: one.clone(), one });
            }
            if c.tensor_obj(x, a).is_some() && c.tensor_obj(y, a).is_some() {
                let one: Vec<Option<usize>> = members
                    .iter()
                    .map(|&f| {
                        let im = c.tensor_mor(f, c.base.identity[a])?;
                        Some(local_of(c.tensor_obj(x, a)?, c.tensor_obj(y, a)?, im))
                    })
                    .collect();
                rwhisker.insert((a, x, y), WhiskerTable { two: one.clone(), one });
            }
        }
    }

    // With discrete homs both composition orders of f⊕g agree, so every
    // interchange cell is the identity 2-cell on the tensored morphism.
    let mut sigma = BTreeMap::new();
    for (&(x, x2), fs) in &homs_global {
        for (&(y, y2), gs) in &homs_global {
            for &fm in fs {
                for &gm in gs {
                    let entry = (|| {
                        let xy = c.tensor_obj(x, y)?;
                        let x2y2 = c.tensor_obj(x2, y2)?;
                        c.tensor_obj(x2, y)?;
                        c.tensor_obj(x, y2)?;
                        let fg = c.tensor_mor(fm, gm)?;
                        Some(local_of(xy, x2y2, fg))
                    })();
                    if let Some(idx) = entry {
                        let f = OneCell { src: x, tgt: x2, idx: local_of(x, x2, fm) };
                        let g = OneCell { src: y, tgt: y2, idx: local_of(y, y2, gm) };
                        sigma.insert((f, g), idx);
                    }
                }
            }
        }
    }

    let n = c.base.objects;
    let mut beta_cell = Table2::new(n, n);
    for x in 0..n {
        for y in 0..n {
            if let (Some(b), Some(xy), Some(yx)) =
                (c.beta(x, y), c.tensor_obj(x, y), c.tensor_obj(y, x))
            {
                beta_cell.set(x, y, local_of(xy, yx, b));
            }
        }
    }

    PermGrayMonoid {
        base,
        unit: c.unit,
        prod_obj: c.tensor_obj.clone(),
        lwhisker,
        rwhisker,
        sigma,
        beta_cell,
        window: c.window,
    }
}

/// Change of enrichment along path components: same objects, morphisms are
/// the component classes of the hom-categories.
pub fn truncate(d: &PermGrayMonoid) -> Result<PermutativeCategory, MonoidalError> {
    // Enumerate morphisms hom by hom (keys ascending), classes in canonical
    // order, so that truncating a discretized category restores it verbatim.
    let mut class_global: BTreeMap<(usize, usize), (fincat::Partition, usize)> = BTreeMap::new();
    let mut mor_src = Vec::new();
    let mut mor_tgt = Vec::new();
    let mut next = 0usize;
    for (&(x, y), h) in &d.base.homs {
        let p = fincat::pi0(h);
        for _ in 0..p.len() {
            mor_src.push(x);
            mor_tgt.push(y);
        }
        let offset = next;
        next += p.len();
        class_global.insert((x, y), (p, offset));
    }
    let global = |f: OneCell| -> usize {
        let (p, off) = &class_global[&(f.src, f.tgt)];
        off + p.class_of[f.idx]
    };
    let members = |g: usize| -> (usize, usize, Vec<usize>) {
        for (&(x, y), (p, off)) in &class_global {
            if g >= *off && g < off + p.len() {
                return (x, y, p.classes[g - off].clone());
            }
        }
        unreachable!()
    };

    let m = next;
    let identity = (0..d.base.objects)
        .map(|x| global(d.base.id1[x]))
        .collect();

    let mut compose = std::collections::HashMap::new();
    for g in 0..m {
        let (gy, gz, gmem) = members(g);
        for f in 0..m {
            let (_, fy, fmem) = members(f);
            if fy != gy {
                continue;
            }
            let mut result: Option<usize> = None;
            for &gi in &gmem {
                for &fi in &fmem {
                    let gc = OneCell { src: gy, tgt: gz, idx: gi };
                    let fc = OneCell { src: mor_src[f], tgt: fy, idx: fi };
                    if let Some(comp) = d.base.hcomp_one(gc, fc) {
                        let cls = global(comp);
                        match result {
                            None => result = Some(cls),
                            Some(prev) if prev != cls => {
                                return Err(MonoidalError::NotWellDefined(format!(
                                    "composite of component classes ({g},{f}) is ambiguous"
                                )))
                            }
                            _ => {}
                        }
                    }
                }
            }
            match result {
                Some(cls) => {
                    compose.insert((g, f), cls);
                }
                None => {
                    return Err(MonoidalError::Undefined(format!(
                        "composite of component classes ({g},{f}) has no defined representative"
                    )))
                }
            }
        }
    }

    let base = FinCategory {
        objects: d.base.objects,
        mor_src,
        mor_tgt,
        identity,
        compose,
        object_labels: d.base.object_labels.clone(),
    };

    let mut tensor_mor = Table2::new(m, m);
    for f in 0..m {
        let (fx, fy, fmem) = members(f);
        for g in 0..m {
            let (gx, gy, gmem) = members(g);
            let mut result: Option<usize> = None;
            let mut ambiguous = false;
            for &fi in &fmem {
                for &gi in &gmem {
                    let fc = OneCell { src: fx, tgt: fy, idx: fi };
                    let gc = OneCell { src: gx, tgt: gy, idx: gi };
                    if let Some(prod) = d.derived_prod_one(fc, gc) {
                        let cls = global(prod);
                        match result {
                            None => result = Some(cls),
                            Some(prev) if prev != cls => ambiguous = true,
                            _ => {}
                        }
                    }
                }
            }
            if ambiguous {
                return Err(MonoidalError::NotWellDefined(format!(
                    "tensor of component classes ({f},{g}) is ambiguous"
                )));
            }
            if let Some(cls) = result {
                tensor_mor.set(f, g, cls);
            }
        }
    }

    let n = d.base.objects;
    let mut beta = Table2::new(n, n);
    for x in 0..n {
        for y in 0..n {
            if let Some(b) = d.beta(x, y) {
                beta.set(x, y, global(b));
            }
        }
    }

    Ok(PermutativeCategory {
        base,
        unit: d.unit,
        tensor_obj: d.prod_obj.clone(),
        tensor_mor,
        beta,
        window: d.window,
    })
}

/// One-object delooping: the hom-category is `c`, horizontal composition is
/// the tensor, interchange cells are the symmetries, and the unique symmetry
/// 1-cell component is forced to be the identity.
pub fn suspend(c: &PermutativeCategory) -> PermGrayMonoid {
    let nobj = c.base.objects;
    let nmor = c.base.num_morphisms();
    let one: Vec<Vec<Option<usize>>> = (0..nobj)
        .map(|g| (0..nobj).map(|f| c.tensor_obj(g, f)).collect())
        .collect();
    let two: Vec<Vec<Option<usize>>> = (0..nmor)
        .map(|b| (0..nmor).map(|a| c.tensor_mor(b, a)).collect())
        .collect();
    let partial = one.iter().flatten().any(|e| e.is_none())
        || two.iter().flatten().any(|e| e.is_none());
    let base = Fin2Category {
        objects: 1,
        homs: BTreeMap::from([((0, 0), c.base.clone())]),
        id1: vec![OneCell { src: 0, tgt: 0, idx: c.unit }],
        hcomp: BTreeMap::from([((0, 0, 0), HcompTable { one, two })]),
        partial,
        object_labels: None,
    };
    let identity_whisker = WhiskerTable {
        one: (0..nobj).map(Some).collect(),
        two: (0..nmor).map(Some).collect(),
    };
    let mut sigma = BTreeMap::new();
    for a in 0..nobj {
        for b in 0..nobj {
            if let Some(s) = c.beta(a, b) {
                sigma.insert(
                    (OneCell { src: 0, tgt: 0, idx: a }, OneCell { src: 0, tgt: 0, idx: b }),
                    s,
                );
            }
        }
    }
    let mut prod_obj = Table2::new(1, 1);
    prod_obj.set(0, 0, 0);
    let mut beta_cell = Table2::new(1, 1);
    beta_cell.set(0, 0, c.unit);
    PermGrayMonoid {
        base,
        unit: 0,
        prod_obj,
        lwhisker: BTreeMap::from([((0, 0, 0), identity_whisker.clone())]),
        rwhisker: BTreeMap::from([((0, 0, 0), identity_whisker)]),
        sigma,
        beta_cell,
        window: c.window,
    }
}

/// The endomorphism permutative category of the unit object: tensor is
/// horizontal composition and the symmetry is the interchange cell.
pub fn loop_category(d: &PermGrayMonoid) -> Result<PermutativeCategory, MonoidalError> {
    let e = d.unit;
    let h = d
        .base
        .hom(e, e)
        .ok_or_else(|| MonoidalError::Invalid("unit object has no endomorphism category".into()))?
        .clone();
    let table = d
        .base
        .hcomp
        .get(&(e, e, e))
        .ok_or_else(|| MonoidalError::Invalid("missing horizontal composition at the unit".into()))?;
    let nobj = h.objects;
    let nmor = h.num_morphisms();
    let mut tensor_obj = Table2::new(nobj, nobj);
    for f in 0..nobj {
        for g in 0..nobj {
            if let Some(v) = table.one[f][g] {
                tensor_obj.set(f, g, v);
            }
        }
    }
    let mut tensor_mor = Table2::new(nmor, nmor);
    for a in 0..nmor {
        for b in 0..nmor {
            if let Some(v) = table.two[a][b] {
                tensor_mor.set(a, b, v);
            }
        }
    }
    let mut beta = Table2::new(nobj, nobj);
    for f in 0..nobj {
        for g in 0..nobj {
            let fc = OneCell { src: e, tgt: e, idx: f };
            let gc = OneCell { src: e, tgt: e, idx: g };
            if let Some(s) = d.sigma(fc, gc) {
                beta.set(f, g, s.idx);
            }
        }
    }
    Ok(PermutativeCategory {
        base: h,
        unit: d.base.id1[e].idx,
        tensor_obj,
        tensor_mor,
        beta,
        window: d.window,
    })
}

/// Componentwise product of permutative Gray-monoids.
pub fn product_pgm(a: &PermGrayMonoid, b: &PermGrayMonoid) -> PermGrayMonoid {
    let (na, nb) = (a.base.objects, b.base.objects);
    let enc = |x1: usize, x2: usize| x1 * nb + x2;

    let mut homs = BTreeMap::new();
    for (&(x1, y1), h1) in &a.base.homs {
        for (&(x2, y2), h2) in &b.base.homs {
            if h1.objects == 0 || h2.objects == 0 {
                continue;
            }
            homs.insert((enc(x1, x2), enc(y1, y2)), h1.product(h2));
        }
    }
    let hom_dims = |x1: usize, y1: usize, x2: usize, y2: usize| -> Option<(usize, usize)> {
        let h1 = a.base.hom(x1, y1)?;
        let h2 = b.base.hom(x2, y2)?;
        if h1.objects > 0 && h2.objects > 0 {
            Some((h2.objects, h2.num_morphisms()))
        } else {
            None
        }
    };

    let id1 = (0..na * nb)
        .map(|x| {
            let (x1, x2) = (x / nb, x % nb);
            let (i1, i2) = (a.base.id1[x1], b.base.id1[x2]);
            let (ob, _) = hom_dims(x1, x1, x2, x2).unwrap();
            OneCell { src: x, tgt: x, idx: i1.idx * ob + i2.idx }
        })
        .collect();

    let mut hcomp = BTreeMap::new();
    for (&(x1, y1, z1), t1) in &a.base.hcomp {
        for (&(x2, y2, z2), t2) in &b.base.hcomp {
            let Some((ob_xy, om_xy)) = hom_dims(x1, y1, x2, y2) else { continue };
            let Some((ob_yz, om_yz)) = hom_dims(y1, z1, y2, z2) else { continue };
            let Some((ob_xz, om_xz)) = hom_dims(x1, z1, x2, z2) else { continue };
            let n_one_g = t1.one.len() * ob_yz;
            let n_one_f = t1.one.first().map(|r| r.len()).unwrap_or(0) * ob_xy;
            let mut one = vec![vec![None; n_one_f]; n_one_g];
            for (g, row) in one.iter_mut().enumerate() {
                let (g1, g2) = (g / ob_yz, g % ob_yz);
                for (f, entry) in row.iter_mut().enumerate() {
                    let (f1, f2) = (f / ob_xy, f % ob_xy);
                    if let (Some(c1), Some(c2)) = (t1.one[g1][f1], t2.one[g2][f2]) {
                        *entry = Some(c1 * ob_xz + c2);
                    }
                }
            }
            let n_two_g = t1.two.len() * om_yz;
            let n_two_f = t1.two.first().map(|r| r.len()).unwrap_or(0) * om_xy;
            let mut two = vec![vec![None; n_two_f]; n_two_g];
            for (g, row) in two.iter_mut().enumerate() {
                let (g1, g2) = (g / om_yz, g % om_yz);
                for (f, entry) in row.iter_mut().enumerate() {
                    let (f1, f2) = (f / om_xy, f % om_xy);
                    if let (Some(c1), Some(c2)) = (t1.two[g1][f1], t2.two[g2][f2]) {
                        *entry = Some(c1 * om_xz + c2);
                    }
                }
            }
            hcomp.insert((enc(x1, x2), enc(y1, y2), enc(z1, z2)), HcompTable { one, two });
        }
    }

    let object_labels = if a.base.object_labels.is_some() && nb == 1 {
        a.base.object_labels.clone()
    } else if b.base.object_labels.is_some() && na == 1 {
        b.base.object_labels.clone()
    } else {
        None
    };

    let base = Fin2Category {
        objects: na * nb,
        homs,
        id1,
        hcomp,
        partial: a.base.partial || b.base.partial,
        object_labels,
    };

    let mut prod_obj = Table2::new(na * nb, na * nb);
    for x in 0..na * nb {
        for y in 0..na * nb {
            if let (Some(p1), Some(p2)) = (a.prod(x / nb, y / nb), b.prod(x % nb, y % nb)) {
                prod_obj.set(x, y, enc(p1, p2));
            }
        }
    }

    let mut lwhisker = BTreeMap::new();
    let mut rwhisker = BTreeMap::new();
    for (&(a1, x1, y1), t1) in &a.lwhisker {
        for (&(a2, x2, y2), t2) in &b.lwhisker {
            let Some((ob, om)) = hom_dims(x1, y1, x2, y2) else { continue };
            let (Some(ax1), Some(ay1)) = (a.prod(a1, x1), a.prod(a1, y1)) else { continue };
            let (Some(ax2), Some(ay2)) = (b.prod(a2, x2), b.prod(a2, y2)) else { continue };
            let Some((tob, tom)) = hom_dims(ax1, ay1, ax2, ay2) else { continue };
            let one = (0..t1.one.len() * ob)
                .map(|f| {
                    let (f1, f2) = (f / ob, f % ob);
                    Some(t1.one[f1]? * tob + t2.one[f2]?)
                })
                .collect();
            let two = (0..t1.two.len() * om)
                .map(|f| {
                    let (f1, f2) = (f / om, f % om);
                    Some(t1.two[f1]? * tom + t2.two[f2]?)
                })
                .collect();
            lwhisker.insert((enc(a1, a2), enc(x1, x2), enc(y1, y2)), WhiskerTable { one, two });
        }
    }
    for (&(a1, x1, y1), t1) in &a.rwhisker {
        for (&(a2, x2, y2), t2) in &b.rwhisker {
            let Some((ob, om)) = hom_dims(x1, y1, x2, y2) else { continue };
            let (Some(xa1), Some(ya1)) = (a.prod(x1, a1), a.prod(y1, a1)) else { continue };
            let (Some(xa2), Some(ya2)) = (b.prod(x2, a2), b.prod(y2, a2)) else { continue };
            let Some((tob, tom)) = hom_dims(xa1, ya1, xa2, ya2) else { continue };
            let one = (0..t1.one.len() * ob)
                .map(|f| {
                    let (f1, f2) = (f / ob, f % ob);
                    Some(t1.one[f1]? * tob + t2.one[f2]?)
                })
                .collect();
            let two = (0..t1.two.len() * om)
                .map(|f| {
                    let (f1, f2) = (f / om, f % om);
                    Some(t1.two[f1]? * tom + t2.two[f2]?)
                })
                .collect();
            rwhisker.insert((enc(a1, a2), enc(x1, x2), enc(y1, y2)), WhiskerTable { one, two });
        }
    }

    let mut sigma = BTreeMap::new();
    for (&(f1, g1), &s1) in &a.sigma {
        for (&(f2, g2), &s2) in &b.sigma {
            let (Some((fob, _)), Some((gob, _))) = (
                hom_dims(f1.src, f1.tgt, f2.src, f2.tgt),
                hom_dims(g1.src, g1.tgt, g2.src, g2.tgt),
            ) else {
                continue;
            };
            let entry = (|| {
                let src1 = a.prod(f1.src, g1.src)?;
                let tgt1 = a.prod(f1.tgt, g1.tgt)?;
                let src2 = b.prod(f2.src, g2.src)?;
                let tgt2 = b.prod(f2.tgt, g2.tgt)?;
                let (_, om) = hom_dims(src1, tgt1, src2, tgt2)?;
                Some(s1 * om + s2)
            })();
            if let Some(s) = entry {
                let f = OneCell { src: enc(f1.src, f2.src), tgt: enc(f1.tgt, f2.tgt), idx: f1.idx * fob + f2.idx };
                let g = OneCell { src: enc(g1.src, g2.src), tgt: enc(g1.tgt, g2.tgt), idx: g1.idx * gob + g2.idx };
                sigma.insert((f, g), s);
            }
        }
    }

    let mut beta_cell = Table2::new(na * nb, na * nb);
    for x in 0..na * nb {
        for y in 0..na * nb {
            let entry = (|| {
                let b1 = a.beta(x / nb, y / nb)?;
                let b2 = b.beta(x % nb, y % nb)?;
                let (ob, _) = hom_dims(
                    a.prod(x / nb, y / nb)?,
                    a.prod(y / nb, x / nb)?,
                    b.prod(x % nb, y % nb)?,
                    b.prod(y % nb, x % nb)?,
                )?;
                Some(b1.idx * ob + b2.idx)
            })();
            if let Some(v) = entry {
                beta_cell.set(x, y, v);
            }
        }
    }

    PermGrayMonoid {
        base,
        unit: enc(a.unit, b.unit),
        prod_obj,
        lwhisker,
        rwhisker,
        sigma,
        beta_cell,
        window: a.window.or(b.window),
    }
}

/// The counit `ΣΩD -> D`: the unique object goes to the unit, the single
/// hom-category includes as the endomorphisms of the unit.
pub fn adjunction_counit(d: &PermGrayMonoid) -> Strict2Functor {
    let h = d.base.hom(d.unit, d.unit).expect("unit endomorphism category");
    Strict2Functor {
        obj_map: vec![d.unit],
        hom_maps: BTreeMap::from([((0, 0), FinFunctor::identity(h))]),
    }
}

/// Strict symmetric monoidal 2-functor axioms between Gray-monoids, on top of
/// the plain 2-functor axioms.
pub fn validate_pgm_map(
    f: &Strict2Functor,
    src: &PermGrayMonoid,
    tgt: &PermGrayMonoid,
) -> ValidationReport {
    let mut rep = crate::two_cat::validate_2functor(f, &src.base, &tgt.base);
    if rep.has_structural_errors() {
        return rep;
    }
    rep.check("pgm-map-unit", f.obj_map[src.unit] == tgt.unit, || {
        "unit object not preserved".into()
    });
    for x in 0..src.base.objects {
        for y in 0..src.base.objects {
            match src.prod(x, y) {
                Some(xy) => {
                    let lhs = tgt.prod(f.obj_map[x], f.obj_map[y]);
                    rep.check("pgm-map-prod", lhs == Some(f.obj_map[xy]), || {
                        format!("F({x}⊕{y}) != F({x})⊕F({y})")
                    });
                }
                None => rep.skip(),
            }
        }
    }
    for a in 0..src.base.objects {
        for cell in src.base.one_cells() {
            match src.lw_one(a, cell) {
                Some(w) => {
                    let lhs = tgt.lw_one(f.obj_map[a], f.map_one(cell));
                    rep.check("pgm-map-whisker", lhs == Some(f.map_one(w)), || {
                        format!("F({a}⊕{cell:?}) mismatch")
                    });
                }
                None => rep.skip(),
            }
            match src.rw_one(a, cell) {
                Some(w) => {
                    let lhs = tgt.rw_one(f.obj_map[a], f.map_one(cell));
                    rep.check("pgm-map-whisker", lhs == Some(f.map_one(w)), || {
                        format!("F({cell:?}⊕{a}) mismatch")
                    });
                }
                None => rep.skip(),
            }
        }
        for cell in src.base.two_cells() {
            match src.lw_two(a, cell) {
                Some(w) => {
                    let lhs = tgt.lw_two(f.obj_map[a], f.map_two(cell));
                    rep.check("pgm-map-whisker", lhs == Some(f.map_two(w)), || {
                        format!("F({a}⊕{cell:?}) mismatch (2-cell)")
                    });
                }
                None => rep.skip(),
            }
            match src.rw_two(a, cell) {
                Some(w) => {
                    let lhs = tgt.rw_two(f.obj_map[a], f.map_two(cell));
                    rep.check("pgm-map-whisker", lhs == Some(f.map_two(w)), || {
                        format!("F({cell:?}⊕{a}) mismatch (2-cell)")
                    });
                }
                None => rep.skip(),
            }
        }
    }
    for fc in src.base.one_cells() {
        for gc in src.base.one_cells() {
            match src.sigma(fc, gc) {
                Some(s) => {
                    let lhs = tgt.sigma(f.map_one(fc), f.map_one(gc));
                    rep.check("pgm-map-sigma", lhs == Some(f.map_two(s)), || {
                        format!("F(Σ({fc:?},{gc:?})) mismatch")
                    });
                }
                None => rep.skip(),
            }
        }
    }
    for x in 0..src.base.objects {
        for y in 0..src.base.objects {
            match src.beta(x, y) {
                Some(b) => {
                    let lhs = tgt.beta(f.obj_map[x], f.obj_map[y]);
                    rep.check("pgm-map-beta", lhs == Some(f.map_one(b)), || {
                        format!("F(β({x},{y})) mismatch")
                    });
                }
                None => rep.skip(),
            }
        }
    }
    rep
}

#[derive(Debug, Clone)]
pub struct AdjunctionEntry {
    pub name: String,
    pub check: String,
    pub ok: bool,
    pub detail: String,
}

/// Outcome of the executable adjunction checks, one entry per (example,
/// check) pair; failures are reported, not thrown.
#[derive(Debug, Clone, Default)]
pub struct AdjunctionReport {
    pub entries: Vec<AdjunctionEntry>,
}

impl AdjunctionReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    fn push(&mut self, name: &str, check: &str, ok: bool, detail: String) {
        self.entries.push(AdjunctionEntry {
            name: name.to_string(),
            check: check.to_string(),
            ok,
            detail,
        });
    }
}

/// Run the executable adjunction checks over a batch of examples: the loop of
/// a suspension is the original category on the nose, the counit is a strict
/// map of Gray-monoids, both triangle identities hold, and the counit is an
/// isomorphism on one-object Gray-monoids.
pub fn check_adjunctions(
    cats: &[(String, PermutativeCategory)],
    pgms: &[(String, PermGrayMonoid)],
) -> AdjunctionReport {
    let mut rep = AdjunctionReport::default();
    for (name, c) in cats {
        match loop_category(&suspend(c)) {
            Ok(back) => rep.push(
                name,
                "loop-of-suspension-is-identity",
                back == *c,
                if back == *c { "tables identical".into() } else { "tables differ".into() },
            ),
            Err(e) => rep.push(name, "loop-of-suspension-is-identity", false, e.to_string()),
        }
        // Triangle at a suspension: the unit is an identity, so the counit of
        // ΣC must be the identity 2-functor.
        let sc = suspend(c);
        let counit = adjunction_counit(&sc);
        let ok = counit == Strict2Functor::identity(&sc.base);
        rep.push(name, "triangle-suspension", ok, String::new());
    }
    for (name, d) in pgms {
        let counit = adjunction_counit(d);
        match loop_category(d) {
            Ok(ld) => {
                let sld = suspend(&ld);
                let v = validate_pgm_map(&counit, &sld, d);
                rep.push(name, "counit-strict-pgm-map", v.is_valid(), v.summary());
                // Loop applied to the counit is the identity functor on ΩD.
                let restricted = &counit.hom_maps[&(0, 0)];
                let ok = *restricted == FinFunctor::identity(&ld.base);
                rep.push(name, "triangle-loop", ok, String::new());
                if d.base.objects == 1 {
                    let iso = counit.obj_map == vec![d.unit]
                        && *restricted == FinFunctor::identity(d.base.hom(d.unit, d.unit).unwrap());
                    rep.push(name, "counit-iso-one-object", iso, String::new());
                }
            }
            Err(e) => rep.push(name, "counit-strict-pgm-map", false, e.to_string()),
        }
    }
    rep
}
