//! Closed-form homotopy invariants of gauge groups over 5-manifolds with
//! cyclic fundamental group.
//!
//! The setting: `M` is an orientable closed 5-manifold with
//! `π_1(M) = Z/c` and `H_2(M; Z)` free of rank `m - 1`, and `G` is a
//! simply connected compact simple Lie group with `π_4(G) = 0`. Principal
//! `G`-bundles over `M` are then indexed by `k ∈ Z/c`, and this crate
//! evaluates statements about the gauge groups `G_k(M)`:
//!
//! - [`manifold`]: homology of `M`, bundle classes, homotopy groups of
//!   Moore spaces and suspension splittings of `M`;
//! - [`decomposition`]: product decompositions of looped gauge groups as
//!   formal expressions, with localization-aware normalization;
//! - [`classification`]: counting homotopy types of gauge groups;
//! - [`exponents`]: upper bounds on homotopy exponents;
//! - [`bott`]: stable homotopy groups via Bott periodicity;
//! - [`rational`]: rational decompositions for arbitrary finite-type bases.
//!
//! ```
//! use gauge5::{decomposition, LieGroup, ManifoldSpec};
//!
//! let m = ManifoldSpec::new(5, 2).spin(true);
//! let g: LieGroup = "SU:4".parse().unwrap();
//! let expr = decomposition::loops2_gauge(&m, &g, 1).unwrap();
//! assert_eq!(expr.to_string(), "Ω²G₁(P⁴(5)) × Ω³G{5} × Ω⁷G × Ω⁴G × Ω⁵G");
//! ```

pub mod abelian;
pub mod arith;
pub mod bott;
pub mod catalog;
pub mod classification;
pub mod decomposition;
pub mod error;
pub mod exponents;
pub mod lie;
pub mod localization;
pub mod manifold;
pub mod rational;
mod render;

pub use abelian::FGAbelianGroup;
pub use error::{Error, Result};
pub use lie::LieGroup;
pub use localization::Localization;
pub use manifold::ManifoldSpec;
