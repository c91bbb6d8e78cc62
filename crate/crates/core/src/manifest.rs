//! JSON manifest schemas for every structure the command-line tool accepts,
//! with lossless conversions to and from the core types.
//!
//! Serialization is canonical: table entries are emitted as sorted triples,
//! so `parse ∘ serialize` is the identity on canonical files and functor
//! round-trips can be compared byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fincat::FinCategory;
use crate::monoidal::{PermGrayMonoid, PermutativeCategory, Table2, WhiskerTable};
use crate::postnikov::{build_skeletal_picard, AbGroupSpec, BilinearForm};
use crate::two_cat::{Fin2Category, HcompTable, OneCell};

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("manifest is malformed: {0}")]
    Malformed(String),
    #[error("builder payload rejected: {0}")]
    Builder(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum Manifest {
    Category(CategoryManifest),
    #[serde(rename = "2category")]
    TwoCategory(TwoCategoryManifest),
    PermutativeCategory(PermCatManifest),
    PermGrayMonoid(PgmManifest),
    Builder(BuilderManifest),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CategoryManifest {
    pub objects: usize,
    pub morphisms: Vec<MorphismEntry>,
    pub identity: Vec<usize>,
    pub compose: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object_labels: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HcompManifest {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub one: Vec<[usize; 3]>,
    pub two: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoCategoryManifest {
    pub objects: usize,
    /// Hom-categories keyed by `"x,y"`; omitted keys are empty homs.
    pub homs: BTreeMap<String, CategoryManifest>,
    /// Identity 1-cell of each object, as an object index of `hom(x,x)`.
    pub id1: Vec<usize>,
    pub hcomp: Vec<HcompManifest>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub partial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object_labels: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermCatManifest {
    pub base: CategoryManifest,
    pub unit: usize,
    pub tensor_obj: Vec<[usize; 3]>,
    pub tensor_mor: Vec<[usize; 3]>,
    pub beta: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WhiskerManifest {
    pub a: usize,
    pub x: usize,
    pub y: usize,
    pub one: Vec<[usize; 2]>,
    pub two: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PgmManifest {
    pub base: TwoCategoryManifest,
    pub unit: usize,
    pub prod_obj: Vec<[usize; 3]>,
    pub lwhisker: Vec<WhiskerManifest>,
    pub rwhisker: Vec<WhiskerManifest>,
    /// Entries `[f_src, f_tgt, f_idx, g_src, g_tgt, g_idx, cell]`.
    pub sigma: Vec<[usize; 7]>,
    pub beta_cell: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BuilderManifest {
    pub pi0: AbGroupSpec,
    pub pi1: Vec<u64>,
    pub bilinear: Vec<Vec<usize>>,
}

/// A loaded structure ready for the validators and computations.
pub enum Structure {
    Category(FinCategory),
    TwoCategory(Fin2Category),
    PermCat(PermutativeCategory),
    Pgm(PermGrayMonoid),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Category(_) => "category",
            Structure::TwoCategory(_) => "2category",
            Structure::PermCat(_) => "permutative_category",
            Structure::Pgm(_) => "perm_gray_monoid",
        }
    }
}

fn table2_entries(t: &Table2) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..t.rows {
        for j in 0..t.cols {
            if let Some(v) = t.get(i, j) {
                out.push([i, j, v]);
            }
        }
    }
    out
}

/// Table-presented structures are desk scale; reject dimensions whose
/// quadratic tables would not be.
const MAX_TABLE_DIM: usize = 4096;

fn check_dims(objects: usize, morphisms: usize, what: &str) -> Result<(), ManifestError> {
    if objects > MAX_TABLE_DIM || morphisms > MAX_TABLE_DIM {
        return Err(ManifestError::Malformed(format!(
            "{what} exceeds the table-presentation bound of {MAX_TABLE_DIM}"
        )));
    }
    Ok(())
}

fn table2_from_entries(
    rows: usize,
    cols: usize,
    entries: &[[usize; 3]],
    what: &str,
) -> Result<Table2, ManifestError> {
    let mut t = Table2::new(rows, cols);
    for &[i, j, v] in entries {
        if i >= rows || j >= cols {
            return Err(ManifestError::Malformed(format!(
                "{what} entry ({i},{j}) out of range"
            )));
        }
        t.set(i, j, v);
    }
    Ok(t)
}

pub fn category_to_manifest(c: &FinCategory) -> CategoryManifest {
    let mut compose: Vec<[usize; 3]> = c
        .compose
        .iter()
        .map(|(&(g, f), &gf)| [g, f, gf])
        .collect();
    compose.sort_unstable();
    CategoryManifest {
        objects: c.objects,
        morphisms: (0..c.num_morphisms())
            .map(|m| MorphismEntry {
                src: c.mor_src[m],
                tgt: c.mor_tgt[m],
            })
            .collect(),
        identity: c.identity.clone(),
        compose,
        object_labels: c.object_labels.clone(),
    }
}

pub fn category_from_manifest(m: &CategoryManifest) -> FinCategory {
    FinCategory {
        objects: m.objects,
        mor_src: m.morphisms.iter().map(|e| e.src).collect(),
        mor_tgt: m.morphisms.iter().map(|e| e.tgt).collect(),
        identity: m.identity.clone(),
        compose: m.compose.iter().map(|&[g, f, gf]| ((g, f), gf)).collect(),
        object_labels: m.object_labels.clone(),
    }
}

pub fn two_category_to_manifest(d: &Fin2Category) -> TwoCategoryManifest {
    let homs = d
        .homs
        .iter()
        .map(|(&(x, y), h)| (format!("{x},{y}"), category_to_manifest(h)))
        .collect();
    let hcomp = d
        .hcomp
        .iter()
        .map(|(&(x, y, z), t)| {
            let mut one = Vec::new();
            for (g, row) in t.one.iter().enumerate() {
                for (f, entry) in row.iter().enumerate() {
                    if let Some(v) = entry {
                        one.push([g, f, *v]);
                    }
                }
            }
            let mut two = Vec::new();
            for (g, row) in t.two.iter().enumerate() {
                for (f, entry) in row.iter().enumerate() {
                    if let Some(v) = entry {
                        two.push([g, f, *v]);
                    }
                }
            }
            HcompManifest { x, y, z, one, two }
        })
        .collect();
    TwoCategoryManifest {
        objects: d.objects,
        homs,
        id1: d.id1.iter().map(|c| c.idx).collect(),
        hcomp,
        partial: d.partial,
        object_labels: d.object_labels.clone(),
    }
}

pub fn two_category_from_manifest(
    m: &TwoCategoryManifest,
) -> Result<Fin2Category, ManifestError> {
    check_dims(m.objects, 0, "2-category")?;
    for cm in m.homs.values() {
        check_dims(cm.objects, cm.morphisms.len(), "hom-category")?;
    }
    let mut homs = BTreeMap::new();
    for (key, cm) in &m.homs {
        let parts: Vec<&str> = key.split(',').collect();
        if parts.len() != 2 {
            return Err(ManifestError::Malformed(format!("bad hom key '{key}'")));
        }
        let x: usize = parts[0]
            .trim()
            .parse()
            .map_err(|_| ManifestError::Malformed(format!("bad hom key '{key}'")))?;
        let y: usize = parts[1]
            .trim()
            .parse()
            .map_err(|_| ManifestError::Malformed(format!("bad hom key '{key}'")))?;
        homs.insert((x, y), category_from_manifest(cm));
    }
    if m.id1.len() != m.objects {
        return Err(ManifestError::Malformed("id1 length mismatch".into()));
    }
    let id1 = m
        .id1
        .iter()
        .enumerate()
        .map(|(x, &idx)| OneCell { src: x, tgt: x, idx })
        .collect();
    let mut hcomp = BTreeMap::new();
    for hm in &m.hcomp {
        let (Some(hxy), Some(hyz)) = (homs.get(&(hm.x, hm.y)), homs.get(&(hm.y, hm.z))) else {
            return Err(ManifestError::Malformed(format!(
                "hcomp table ({},{},{}) over missing homs",
                hm.x, hm.y, hm.z
            )));
        };
        let mut one = vec![vec![None; hxy.objects]; hyz.objects];
        for &[g, f, v] in &hm.one {
            if g >= hyz.objects || f >= hxy.objects {
                return Err(ManifestError::Malformed("hcomp 1-cell entry out of range".into()));
            }
            one[g][f] = Some(v);
        }
        let mut two = vec![vec![None; hxy.num_morphisms()]; hyz.num_morphisms()];
        for &[g, f, v] in &hm.two {
            if g >= hyz.num_morphisms() || f >= hxy.num_morphisms() {
                return Err(ManifestError::Malformed("hcomp 2-cell entry out of range".into()));
            }
            two[g][f] = Some(v);
        }
        hcomp.insert((hm.x, hm.y, hm.z), HcompTable { one, two });
    }
    Ok(Fin2Category {
        objects: m.objects,
        homs,
        id1,
        hcomp,
        partial: m.partial,
        object_labels: m.object_labels.clone(),
    })
}

pub fn permcat_to_manifest(c: &PermutativeCategory) -> PermCatManifest {
    PermCatManifest {
        base: category_to_manifest(&c.base),
        unit: c.unit,
        tensor_obj: table2_entries(&c.tensor_obj),
        tensor_mor: table2_entries(&c.tensor_mor),
        beta: table2_entries(&c.beta),
        window: c.window,
    }
}

pub fn permcat_from_manifest(m: &PermCatManifest) -> Result<PermutativeCategory, ManifestError> {
    let base = category_from_manifest(&m.base);
    let n = base.objects;
    let nm = base.num_morphisms();
    check_dims(n, nm, "permutative category")?;
    Ok(PermutativeCategory {
        unit: m.unit,
        tensor_obj: table2_from_entries(n, n, &m.tensor_obj, "tensor_obj")?,
        tensor_mor: table2_from_entries(nm, nm, &m.tensor_mor, "tensor_mor")?,
        beta: table2_from_entries(n, n, &m.beta, "beta")?,
        window: m.window,
        base,
    })
}

pub fn pgm_to_manifest(d: &PermGrayMonoid) -> PgmManifest {
    let whiskers = |tables: &BTreeMap<(usize, usize, usize), WhiskerTable>| {
        tables
            .iter()
            .map(|(&(a, x, y), t)| WhiskerManifest {
                a,
                x,
                y,
                one: t
                    .one
                    .iter()
                    .enumerate()
                    .filter_map(|(i, v)| v.map(|v| [i, v]))
                    .collect(),
                two: t
                    .two
                    .iter()
                    .enumerate()
                    .filter_map(|(i, v)| v.map(|v| [i, v]))
                    .collect(),
            })
            .collect()
    };
    let mut sigma: Vec<[usize; 7]> = d
        .sigma
        .iter()
        .map(|(&(f, g), &v)| [f.src, f.tgt, f.idx, g.src, g.tgt, g.idx, v])
        .collect();
    sigma.sort_unstable();
    PgmManifest {
        base: two_category_to_manifest(&d.base),
        unit: d.unit,
        prod_obj: table2_entries(&d.prod_obj),
        lwhisker: whiskers(&d.lwhisker),
        rwhisker: whiskers(&d.rwhisker),
        sigma,
        beta_cell: table2_entries(&d.beta_cell),
        window: d.window,
    }
}

pub fn pgm_from_manifest(m: &PgmManifest) -> Result<PermGrayMonoid, ManifestError> {
    let base = two_category_from_manifest(&m.base)?;
    let n = base.objects;
    check_dims(n, 0, "Gray-monoid")?;
    let whiskers = |entries: &[WhiskerManifest],
                    side: &str|
     -> Result<BTreeMap<(usize, usize, usize), WhiskerTable>, ManifestError> {
        let mut out = BTreeMap::new();
        for wm in entries {
            let Some(h) = base.hom(wm.x, wm.y) else {
                return Err(ManifestError::Malformed(format!(
                    "{side}whisker over missing hom ({},{})",
                    wm.x, wm.y
                )));
            };
            let mut one = vec![None; h.objects];
            for &[i, v] in &wm.one {
                if i >= h.objects {
                    return Err(ManifestError::Malformed(format!(
                        "{side}whisker 1-cell entry out of range"
                    )));
                }
                one[i] = Some(v);
            }
            let mut two = vec![None; h.num_morphisms()];
            for &[i, v] in &wm.two {
                if i >= h.num_morphisms() {
                    return Err(ManifestError::Malformed(format!(
                        "{side}whisker 2-cell entry out of range"
                    )));
                }
                two[i] = Some(v);
            }
            out.insert((wm.a, wm.x, wm.y), WhiskerTable { one, two });
        }
        Ok(out)
    };
    let mut sigma = BTreeMap::new();
    for &[fs, ft, fi, gs, gt, gi, v] in &m.sigma {
        sigma.insert(
            (
                OneCell { src: fs, tgt: ft, idx: fi },
                OneCell { src: gs, tgt: gt, idx: gi },
            ),
            v,
        );
    }
    Ok(PermGrayMonoid {
        unit: m.unit,
        prod_obj: table2_from_entries(n, n, &m.prod_obj, "prod_obj")?,
        lwhisker: whiskers(&m.lwhisker, "l")?,
        rwhisker: whiskers(&m.rwhisker, "r")?,
        sigma,
        beta_cell: table2_from_entries(n, n, &m.beta_cell, "beta_cell")?,
        window: m.window,
        base,
    })
}

/// Interpret a manifest as a structure; builder payloads are constructed
/// immediately and rejected on bad data.
pub fn to_structure(m: &Manifest) -> Result<Structure, ManifestError> {
    Ok(match m {
        Manifest::Category(cm) => Structure::Category(category_from_manifest(cm)),
        Manifest::TwoCategory(tm) => Structure::TwoCategory(two_category_from_manifest(tm)?),
        Manifest::PermutativeCategory(pm) => Structure::PermCat(permcat_from_manifest(pm)?),
        Manifest::PermGrayMonoid(gm) => Structure::Pgm(pgm_from_manifest(gm)?),
        Manifest::Builder(bm) => {
            if bm.bilinear.is_empty() && bm.pi0 != AbGroupSpec::Cyclic(vec![]) {
                return Err(ManifestError::Builder("empty bilinear matrix".into()));
            }
            let c = build_skeletal_picard(
                &bm.pi0,
                &bm.pi1,
                &BilinearForm {
                    values: bm.bilinear.clone(),
                },
            )
            .map_err(|e| ManifestError::Builder(e.to_string()))?;
            Structure::PermCat(c)
        }
    })
}

pub fn from_structure(s: &Structure) -> Manifest {
    match s {
        Structure::Category(c) => Manifest::Category(category_to_manifest(c)),
        Structure::TwoCategory(d) => Manifest::TwoCategory(two_category_to_manifest(d)),
        Structure::PermCat(c) => Manifest::PermutativeCategory(permcat_to_manifest(c)),
        Structure::Pgm(d) => Manifest::PermGrayMonoid(pgm_to_manifest(d)),
    }
}

/// Canonical serialization: pretty JSON with sorted table entries and a
/// trailing newline.
pub fn to_canonical_json(m: &Manifest) -> String {
    let mut s = serde_json::to_string_pretty(m).expect("manifest serializes");
    s.push('\n');
    s
}

pub fn parse(text: &str) -> Result<Manifest, ManifestError> {
    Ok(serde_json::from_str(text)?)
}
