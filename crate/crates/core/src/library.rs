//! The built-in example structures used across the test suites and shipped
//! as data files by the command-line tool.

use crate::monoidal::{discretize, product_pgm, suspend, PermGrayMonoid, PermutativeCategory};
use crate::postnikov::{build_skeletal_picard, AbGroupSpec, BilinearForm};

/// Window radius used for the integer-object examples unless overridden.
pub const DEFAULT_WINDOW: i64 = 8;

/// Skeletal model with objects the integers (windowed), automorphisms Z/2,
/// and symmetry `β_{x,y} = xy mod 2`.
pub fn sphere1(window: i64) -> PermutativeCategory {
    build_skeletal_picard(
        &AbGroupSpec::WindowedZ(window),
        &[2],
        &BilinearForm { values: vec![vec![1]] },
    )
    .expect("sphere1 data is well formed")
}

/// Objects Z/2, endomorphism groups Z/2, and the symmetry of the non-unit
/// object with itself the nontrivial automorphism.
pub fn cex() -> PermutativeCategory {
    build_skeletal_picard(
        &AbGroupSpec::Cyclic(vec![2]),
        &[2],
        &BilinearForm { values: vec![vec![1]] },
    )
    .expect("cex data is well formed")
}

/// The split companion of `cex`: identical groups, zero form.
pub fn builder_split() -> PermutativeCategory {
    build_skeletal_picard(
        &AbGroupSpec::Cyclic(vec![2]),
        &[2],
        &BilinearForm { values: vec![vec![0]] },
    )
    .expect("split builder data is well formed")
}

/// Objects Z/4, automorphisms Z/2, form `b(x,y) = xy mod 2`.
pub fn builder_z4() -> PermutativeCategory {
    build_skeletal_picard(
        &AbGroupSpec::Cyclic(vec![4]),
        &[2],
        &BilinearForm { values: vec![vec![1]] },
    )
    .expect("Z/4 builder data is well formed")
}

/// Objects Z/2 x Z/2, automorphisms Z/2, the symplectic pairing.
pub fn builder_klein() -> PermutativeCategory {
    build_skeletal_picard(
        &AbGroupSpec::Cyclic(vec![2, 2]),
        &[2],
        &BilinearForm {
            values: vec![vec![0, 1], vec![1, 0]],
        },
    )
    .expect("Klein builder data is well formed")
}

/// One-object Gray-monoid with hom-category `cex`.
pub fn sigma_cex() -> PermGrayMonoid {
    suspend(&cex())
}

/// The sphere-1 model viewed as a Gray-monoid with identity interchange.
pub fn d_sphere1(window: i64) -> PermGrayMonoid {
    discretize(&sphere1(window))
}

/// Product of the discretized sphere-1 model with the suspension example.
pub fn d_sphere1_x_sigma_cex(window: i64) -> PermGrayMonoid {
    product_pgm(&d_sphere1(window), &sigma_cex())
}

/// All built-in permutative categories, keyed by their library names.
pub fn library_permcats(window: i64) -> Vec<(String, PermutativeCategory)> {
    vec![
        ("sphere1".into(), sphere1(window)),
        ("cex".into(), cex()),
        ("builder_split".into(), builder_split()),
        ("builder_z4".into(), builder_z4()),
        ("builder_klein".into(), builder_klein()),
    ]
}

/// All built-in permutative Gray-monoids, keyed by their library names.
pub fn library_pgms(window: i64) -> Vec<(String, PermGrayMonoid)> {
    vec![
        ("sigma_cex".into(), sigma_cex()),
        ("d_sphere1".into(), d_sphere1(window)),
        ("d_sphere1_x_sigma_cex".into(), d_sphere1_x_sigma_cex(window)),
    ]
}

/// A built-in structure by library name.
pub enum BuiltIn {
    PermCat(PermutativeCategory),
    Pgm(PermGrayMonoid),
}

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "sphere1",
        "cex",
        "builder_split",
        "builder_z4",
        "builder_klein",
        "sigma_cex",
        "d_sphere1",
        "d_sphere1_x_sigma_cex",
    ]
}

pub fn builtin(name: &str, window: i64) -> Option<BuiltIn> {
    Some(match name {
        "sphere1" => BuiltIn::PermCat(sphere1(window)),
        "cex" => BuiltIn::PermCat(cex()),
        "builder_split" => BuiltIn::PermCat(builder_split()),
        "builder_z4" => BuiltIn::PermCat(builder_z4()),
        "builder_klein" => BuiltIn::PermCat(builder_klein()),
        "sigma_cex" => BuiltIn::Pgm(sigma_cex()),
        "d_sphere1" => BuiltIn::Pgm(d_sphere1(window)),
        "d_sphere1_x_sigma_cex" => BuiltIn::Pgm(d_sphere1_x_sigma_cex(window)),
        _ => return None,
    })
}
