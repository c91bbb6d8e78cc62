use super::*;
use crate::library;
use crate::two_cat::{self, CellExpr, OneCell};

#[test]
fn library_permcats_validate() {
    for (name, c) in library::library_permcats(4) {
        let rep = validate_permcat(&c);
        assert!(rep.is_valid(), "{name}:\n{rep}");
        if name == "sphere1" {
            assert!(rep.skipped > 0, "windowed example should skip instances");
        } else {
            assert_eq!(rep.skipped, 0);
        }
    }
}

#[test]
fn broken_hexagon_is_listed() {
    let mut c = library::builder_z4();
    // β(1,2) is the identity of object 3; redirect it to the twist.
    assert_eq!(c.beta.get(1, 2), Some(3 * 2));
    c.beta.set(1, 2, 3 * 2 + 1);
    let rep = validate_permcat(&c);
    assert!(rep.of_class("beta-hexagon").next().is_some(), "{rep}");
}

#[test]
fn library_pgms_validate() {
    let rep = validate_pgm(&library::sigma_cex());
    assert!(rep.is_valid(), "{rep}");
    let rep = validate_pgm(&library::d_sphere1(3));
    assert!(rep.is_valid(), "{rep}");
    assert!(rep.skipped > 0);
    let rep = validate_pgm(&library::d_sphere1_x_sigma_cex(2));
    assert!(rep.is_valid(), "{rep}");
}

#[test]
fn discretized_sigma_cells_are_identities() {
    let d = library::d_sphere1(3);
    for &(f, g) in d.sigma.clone().keys() {
        let s = d.sigma(f, g).unwrap();
        assert_eq!(s, d.base.id2(d.base.two_src(s)));
    }
}

#[test]
fn flipped_sigma_cell_is_caught() {
    // In the suspension of the Z/4 builder the interchange table is forced
    // by bilinearity; flipping a single entry must surface.
    let mut d = suspend(&library::builder_z4());
    let f = OneCell { src: 0, tgt: 0, idx: 1 };
    let g = OneCell { src: 0, tgt: 0, idx: 2 };
    let old = *d.sigma.get(&(f, g)).unwrap();
    d.sigma.insert((f, g), old ^ 1);
    let rep = validate_pgm(&d);
    assert!(!rep.is_valid());
    let classes: Vec<&str> = ["sigma-bilinear", "beta-sigma", "sigma-natural"]
        .into_iter()
        .filter(|c| rep.of_class(c).next().is_some())
        .collect();
    assert!(!classes.is_empty(), "{rep}");
}

#[test]
fn suspension_of_terminal_is_terminal() {
    let t = suspend(&PermutativeCategory::terminal());
    assert!(validate_pgm(&t).is_valid());
    assert_eq!(t.base.objects, 1);
    assert_eq!(t.base.hom(0, 0).unwrap().num_morphisms(), 1);
}

#[test]
fn suspension_interchange_is_the_symmetry() {
    let d = library::sigma_cex();
    // Σ_{1,1} is the nontrivial automorphism.
    let f = OneCell { src: 0, tgt: 0, idx: 1 };
    let s = d.sigma(f, f).unwrap();
    assert_ne!(s, d.base.id2(d.base.two_src(s)));
}

#[test]
fn horizontal_composition_in_suspension_is_the_tensor() {
    let c = library::cex();
    let d = suspend(&c);
    for a in 0..c.base.objects {
        for b in 0..c.base.objects {
            let e = CellExpr::hcomp(
                CellExpr::one(OneCell { src: 0, tgt: 0, idx: a }),
                CellExpr::one(OneCell { src: 0, tgt: 0, idx: b }),
            );
            let got = two_cat::eval_cell(&d.base, &e).unwrap();
            assert_eq!(
                got,
                two_cat::Cell::One(OneCell { src: 0, tgt: 0, idx: c.tensor_obj(a, b).unwrap() })
            );
        }
    }
}

#[test]
fn nerve_of_suspension_is_a_power() {
    let c = library::cex();
    let d = suspend(&c);
    for p in 0..=3usize {
        let lvl = two_cat::nerve_level(&d.base, p);
        assert_eq!(lvl.category, c.base.power(p), "degree {p}");
    }
}

#[test]
fn nonunit_one_cell_of_group_suspension_is_invertible() {
    // Suspension of the two-object group-like example: the non-identity
    // 1-cell has a brute-force equivalence witness.
    let d = suspend(&library::builder_split());
    let f = OneCell { src: 0, tgt: 0, idx: 1 };
    let w = two_cat::is_invertible_1cell(&d.base, f).unwrap();
    assert_eq!(w.reverse, f);
}

#[test]
fn one_object_group_permcat_suspends_to_valid_2category() {
    // Trivial object group, automorphism group Z/2: suspension is a
    // one-object, one-1-cell 2-category whose 2-cells form Z/2.
    let c = crate::postnikov::build_skeletal_picard(
        &crate::postnikov::AbGroupSpec::Cyclic(vec![]),
        &[2],
        &crate::postnikov::BilinearForm { values: vec![] },
    )
    .unwrap();
    assert_eq!(c.base.objects, 1);
    assert_eq!(c.base.num_morphisms(), 2);
    let d = suspend(&c);
    assert!(two_cat::validate_2category(&d.base).is_valid());
    assert!(validate_pgm(&d).is_valid());
}

#[test]
fn discretize_preserves_unit_and_beta_tables() {
    let c = library::builder_klein();
    let d = discretize(&c);
    assert_eq!(d.unit, c.unit);
    assert_eq!(d.prod_obj, c.tensor_obj);
    for x in 0..c.base.objects {
        for y in 0..c.base.objects {
            let b = d.beta(x, y).unwrap();
            // The underlying global morphism of the beta 1-cell is c's beta.
            let locals = c.base.hom(b.src, b.tgt);
            assert_eq!(locals[b.idx], c.beta(x, y).unwrap());
        }
    }
}

#[test]
fn discretize_terminal_is_terminal_pgm() {
    let d = discretize(&PermutativeCategory::terminal());
    assert!(validate_pgm(&d).is_valid());
    assert_eq!(d.base.objects, 1);
    assert_eq!(d.base.hom(0, 0).unwrap().objects, 1);
}

#[test]
fn truncate_after_discretize_is_identity() {
    for (name, c) in library::library_permcats(3) {
        let back = truncate(&discretize(&c)).unwrap();
        assert_eq!(back, c, "{name}");
    }
}

#[test]
fn truncation_of_suspension_is_component_monoid() {
    let t = truncate(&library::sigma_cex()).unwrap();
    assert!(validate_permcat(&t).is_valid());
    assert_eq!(t.base.objects, 1);
    assert_eq!(t.base.num_morphisms(), 2);
    // Morphism monoid is Z/2 under composition.
    assert_eq!(t.base.compose(1, 1), Some(0));
}

#[test]
fn loop_of_suspension_is_identity_on_library() {
    for (name, c) in library::library_permcats(4) {
        let back = loop_category(&suspend(&c)).unwrap();
        assert_eq!(back, c, "{name}");
    }
}

#[test]
fn loop_of_discretized_sphere_has_trivial_symmetry() {
    let l = loop_category(&library::d_sphere1(4)).unwrap();
    assert!(validate_permcat(&l).is_valid());
    // Objects are the unit endomorphisms of the sphere model: Z/2.
    assert_eq!(l.base.objects, 2);
    for f in 0..2 {
        for g in 0..2 {
            let b = l.beta(f, g).unwrap();
            assert_eq!(b, l.base.identity[l.tensor_obj(f, g).unwrap()]);
        }
    }
}

#[test]
fn loop_of_terminal_is_terminal() {
    let l = loop_category(&PermGrayMonoid::terminal()).unwrap();
    assert_eq!(l, PermutativeCategory::terminal());
}

#[test]
fn unit_endomorphism_interchange_cells_are_self_inverse() {
    // On the unit endomorphism category, Σ(f,g) and Σ(g,f) are mutually
    // inverse wherever both are defined.
    for (name, d) in [
        ("sigma_cex".to_string(), library::sigma_cex()),
        ("d_sphere1".to_string(), library::d_sphere1(3)),
        ("product".to_string(), library::d_sphere1_x_sigma_cex(2)),
        ("sigma_z4".to_string(), suspend(&library::builder_z4())),
    ] {
        let e = d.unit;
        let endos: Vec<OneCell> = (0..d.base.hom(e, e).unwrap().objects)
            .map(|idx| OneCell { src: e, tgt: e, idx })
            .collect();
        let mut checked = 0;
        for &f in &endos {
            for &g in &endos {
                if let (Some(s1), Some(s2)) = (d.sigma(f, g), d.sigma(g, f)) {
                    let inv = two_cat::invert_2cell(&d.base, s2).expect("Σ invertible");
                    assert_eq!(s1, inv, "{name} at ({f:?},{g:?})");
                    checked += 1;
                }
            }
        }
        assert!(checked > 0, "{name}");
    }
}

#[test]
fn adjunction_checks_pass_on_library() {
    let cats = library::library_permcats(3);
    let pgms = library::library_pgms(3);
    let rep = check_adjunctions(&cats, &pgms);
    assert!(rep.all_ok(), "{:?}", rep.entries.iter().filter(|e| !e.ok).collect::<Vec<_>>());
}

#[test]
fn counit_is_iso_for_one_object_pgm() {
    let d = library::sigma_cex();
    let counit = adjunction_counit(&d);
    assert!(two_cat::is_biequivalence(&counit, &suspend(&loop_category(&d).unwrap()).base, &d.base));
}

#[test]
fn counit_lands_on_unit_component_for_discretized_sphere() {
    let d = library::d_sphere1(3);
    let sld = suspend(&loop_category(&d).unwrap());
    let counit = adjunction_counit(&d);
    assert!(validate_pgm_map(&counit, &sld, &d).is_valid());
    assert_eq!(counit.obj_map, vec![d.unit]);
}

#[test]
fn product_projection_is_strict_pgm_map() {
    let a = library::d_sphere1(2);
    let b = library::sigma_cex();
    let p = product_pgm(&a, &b);
    // Project to the suspension factor: every object goes to the unique one.
    let mut hom_maps = std::collections::BTreeMap::new();
    for (&(x, y), h) in &p.base.homs {
        let bh = b.base.hom(0, 0).unwrap();
        hom_maps.insert(
            (x, y),
            crate::fincat::FinFunctor {
                obj_map: (0..h.objects).map(|i| i % bh.objects).collect(),
                mor_map: (0..h.num_morphisms()).map(|i| i % bh.num_morphisms()).collect(),
            },
        );
    }
    let proj = two_cat::Strict2Functor {
        obj_map: vec![0; p.base.objects],
        hom_maps,
    };
    assert!(validate_pgm_map(&proj, &p, &b).is_valid());
}
