//! Finite, table-presented symmetric monoidal category theory.
//!
//! Everything in this crate works with *finite presentations*: categories are
//! index sets with composition tables, 2-categories are tables of
//! hom-categories with horizontal-composition tables, and the monoidal layers
//! add tensor, symmetry, and interchange-cell tables on top. All structural
//! axioms are decidable by exhaustive evaluation and every validator reports
//! the complete list of violated instances.
//!
//! The main layers, bottom up:
//!
//! * [`fincat`] — finite categories, functors, natural transformations, and
//!   decision procedures (path components, isomorphism classes, equivalence).
//! * [`two_cat`] — finite strict 2-categories, a pasting-expression evaluator,
//!   internal equivalences, the 2-categorical nerve, and biequivalence.
//! * [`monoidal`] — permutative categories and permutative Gray-monoids with
//!   full axiom validation, plus the four functors relating them (discretize,
//!   1-truncate, suspend, loop) and executable adjunction checks.
//! * [`postnikov`] — Picard/skeletal predicates, stable homotopy groups
//!   computed from categorical data, the quadratic maps `k0` and `k1i1`, and
//!   theorem-level checks (signature interchange triviality, the skeletal
//!   no-go result, truncation and connected covers).
//! * [`gamma`] — the skeletal category of finite pointed sets, the smash
//!   product, power-of-a-category Gamma-levels, Segal checks, and the
//!   levelwise suspension comparison.
//! * [`library`] — the built-in example structures used throughout the tests.
//! * [`manifest`] — the JSON manifest schemas used by the command-line tool.

pub mod abelian;
pub mod fincat;
pub mod gamma;
pub mod library;
pub mod manifest;
pub mod monoidal;
pub mod postnikov;
pub mod report;
pub mod two_cat;

pub use report::{ValidationReport, Violation, ViolationKind};
