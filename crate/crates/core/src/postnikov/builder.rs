//! Skeletal Picard categories from bilinear data: objects an abelian group
//! `A`, every endomorphism group a fixed abelian group `B`, no morphisms
//! between distinct objects, and the symmetry `β_{x,y} = b(x,y)` for an
//! antisymmetric bilinear form `b`.

use serde::{Deserialize, Serialize};

use crate::abelian::{cyclic_product_table, GroupTable};
use crate::fincat::FinCategory;
use crate::monoidal::{PermutativeCategory, Table2};

use super::PostnikovError;

/// The object group of a builder category: a finite product of cyclic groups,
/// or the integers encoded on a symmetric window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AbGroupSpec {
    Cyclic(Vec<u64>),
    WindowedZ(i64),
}

impl AbGroupSpec {
    fn generator_count(&self) -> usize {
        match self {
            AbGroupSpec::Cyclic(fs) => fs.len(),
            AbGroupSpec::WindowedZ(_) => 1,
        }
    }

    /// Order of the i-th generator (`None` for the windowed integers).
    fn generator_order(&self, i: usize) -> Option<u64> {
        match self {
            AbGroupSpec::Cyclic(fs) => Some(fs[i]),
            AbGroupSpec::WindowedZ(_) => None,
        }
    }
}

/// An antisymmetric bilinear form on the generators of `A`, valued in `B`:
/// `values[i][j]` is `b(g_i, g_j)` as an element index of `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearForm {
    pub values: Vec<Vec<usize>>,
}

fn digits(spec: &AbGroupSpec, index: usize) -> Vec<i64> {
    match spec {
        AbGroupSpec::Cyclic(fs) => {
            let mut i = index;
            let mut out = vec![0i64; fs.len()];
            for (d, &f) in out.iter_mut().zip(fs).rev() {
                *d = (i as u64 % f) as i64;
                i /= f as usize;
            }
            out
        }
        AbGroupSpec::WindowedZ(w) => vec![index as i64 - w],
    }
}

/// Build the skeletal Picard category determined by `(A, B, b)`.
///
/// `b` must be antisymmetric (`b(x,y) + b(y,x) = 0`) and compatible with the
/// generator orders, which makes the bilinear extension well defined on `A`.
pub fn build_skeletal_picard(
    a: &AbGroupSpec,
    b_factors: &[u64],
    bil: &BilinearForm,
) -> Result<PermutativeCategory, PostnikovError> {
    match a {
        AbGroupSpec::Cyclic(fs) if fs.contains(&0) => {
            return Err(PostnikovError::Invalid("cyclic factor 0 in the object group".into()))
        }
        AbGroupSpec::WindowedZ(w) if *w < 0 => {
            return Err(PostnikovError::Invalid("negative window".into()))
        }
        _ => {}
    }
    if b_factors.contains(&0) {
        return Err(PostnikovError::Invalid("cyclic factor 0 in the automorphism group".into()));
    }
    let objects: u64 = match a {
        AbGroupSpec::Cyclic(fs) => fs.iter().product::<u64>().max(1),
        AbGroupSpec::WindowedZ(w) => 2 * *w as u64 + 1,
    };
    let autos: u64 = b_factors.iter().product::<u64>().max(1);
    if objects.checked_mul(autos).is_none_or(|cells| cells > 2048) {
        return Err(PostnikovError::Invalid(
            "object and automorphism groups too large for table presentation (at most 2048 morphisms)".into(),
        ));
    }
    let b_table = cyclic_product_table(b_factors);
    let gens = a.generator_count();
    if bil.values.len() != gens || bil.values.iter().any(|row| row.len() != gens) {
        return Err(PostnikovError::Invalid(
            "bilinear form has the wrong shape".into(),
        ));
    }
    for row in &bil.values {
        for &v in row {
            if v >= b_table.n {
                return Err(PostnikovError::Invalid("bilinear value out of range".into()));
            }
        }
    }
    for i in 0..gens {
        for j in 0..gens {
            let sym = b_table
                .get(bil.values[i][j], bil.values[j][i])
                .expect("B is total");
            if sym != b_table.zero {
                return Err(PostnikovError::Invalid(format!(
                    "form is not antisymmetric at generators ({i},{j})"
                )));
            }
            for k in [i, j] {
                if let Some(ord) = a.generator_order(k) {
                    if b_table.scale_signed(ord as i64, bil.values[i][j]) != Some(b_table.zero) {
                        return Err(PostnikovError::Invalid(format!(
                            "form value at ({i},{j}) is not killed by the order of generator {k}"
                        )));
                    }
                }
            }
        }
    }

    let (a_table, labels): (GroupTable, Option<Vec<i64>>) = match a {
        AbGroupSpec::Cyclic(fs) => (cyclic_product_table(fs), None),
        AbGroupSpec::WindowedZ(w) => {
            let n = (2 * w + 1) as usize;
            let mut add = vec![None; n * n];
            for x in 0..n {
                for y in 0..n {
                    let s = (x as i64 - w) + (y as i64 - w);
                    if s.abs() <= *w {
                        add[x * n + y] = Some((s + w) as usize);
                    }
                }
            }
            (
                GroupTable { n, zero: *w as usize, add },
                Some((-w..=*w).collect()),
            )
        }
    };

    let bval = |x: usize, y: usize| -> usize {
        let (dx, dy) = (digits(a, x), digits(a, y));
        let mut acc = b_table.zero;
        for i in 0..gens {
            for j in 0..gens {
                let scaled = b_table
                    .scale_signed(dx[i] * dy[j], bil.values[i][j])
                    .expect("B is total");
                acc = b_table.get(acc, scaled).expect("B is total");
            }
        }
        acc
    };

    let nobj = a_table.n;
    let nb = b_table.n;
    let mor = |x: usize, v: usize| x * nb + v;
    let mut compose = std::collections::HashMap::new();
    for x in 0..nobj {
        for v in 0..nb {
            for w in 0..nb {
                compose.insert(
                    (mor(x, v), mor(x, w)),
                    mor(x, b_table.get(v, w).expect("B is total")),
                );
            }
        }
    }
    let base = FinCategory {
        objects: nobj,
        mor_src: (0..nobj * nb).map(|m| m / nb).collect(),
        mor_tgt: (0..nobj * nb).map(|m| m / nb).collect(),
        identity: (0..nobj).map(|x| mor(x, b_table.zero)).collect(),
        compose,
        object_labels: labels,
    };

    let mut tensor_obj = Table2::new(nobj, nobj);
    let mut beta = Table2::new(nobj, nobj);
    for x in 0..nobj {
        for y in 0..nobj {
            if let Some(s) = a_table.get(x, y) {
                tensor_obj.set(x, y, s);
                beta.set(x, y, mor(s, bval(x, y)));
            }
        }
    }
    let nmor = nobj * nb;
    let mut tensor_mor = Table2::new(nmor, nmor);
    for f in 0..nmor {
        for g in 0..nmor {
            if let Some(s) = a_table.get(f / nb, g / nb) {
                tensor_mor.set(f, g, mor(s, b_table.get(f % nb, g % nb).expect("B is total")));
            }
        }
    }

    Ok(PermutativeCategory {
        base,
        unit: a_table.zero,
        tensor_obj,
        tensor_mor,
        beta,
        window: match a {
            AbGroupSpec::WindowedZ(w) => Some(*w),
            AbGroupSpec::Cyclic(_) => None,
        },
    })
}
