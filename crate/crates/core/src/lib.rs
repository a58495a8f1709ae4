//! Kalck-Karmazyn algebras, their deformations by bounding cochains, and the
//! Kawamata matrix orders of Wahl singularities.
//!
//! The crate is organised around a handful of constructions:
//!
//! * [`resarith`]: residues, the orange lattice, `m(j)`, continued fractions
//! * [`poly`], [`upoly`], [`linsolve`]: exact polynomial arithmetic and
//!   fraction-free solving over `Z[t]`
//! * [`kk`]: the algebra `R_{r,a}` from three equivalent product rules
//! * [`ainf`], [`deform`]: hidden and visible `A∞` products, the matrix `D`,
//!   `Def0`, and deformed multiplication tables
//! * [`order`], [`wahl`]: the matrix order, its fibers, and the comparison
//!   with the deformation side
//! * [`iso`]: isomorphism search between structure-constant tables
//! * [`verify`]: the checks run by `wahl-order verify`
//!
//! Every major capability has a runnable example:
//!
//! ```text
//! cargo run --example kk_table -- 9 2
//! cargo run --example young_diagram -- 16 3 > fig.svg
//! cargo run --example gauss_word -- 25 4
//! cargo run --example continued_fraction -- 19 7
//! cargo run --example diff_matrix -- 6 1
//! cargo run --example ideal_components
//! cargo run --example deformed_algebra
//! cargo run --example wahl_order -- 3 2
//! cargo run --example order_fibers -- 3 1
//! cargo run --example cross_check -- 4
//! ```
//!
//! A small end-to-end use:
//!
//! ```
//! use wahl_order::kk::{kk_table, nontrivial_products};
//! use wahl_order::resarith::SingularityParams;
//!
//! let p = SingularityParams::new(9, 2).unwrap();
//! assert_eq!(p.b, 5);
//! let products = nontrivial_products(&kk_table(&p));
//! assert_eq!(products, vec![(4, 1, 5), (4, 2, 6), (4, 3, 7), (4, 4, 8)]);
//! ```

pub mod ainf;
pub mod deform;
pub mod error;
pub mod iso;
pub mod kk;
pub mod linsolve;
pub mod order;
pub mod parse;
pub mod poly;
pub mod render;
pub mod resarith;
pub mod table;
pub mod upoly;
pub mod verify;
pub mod wahl;

pub use error::{Error, Result};
pub use poly::{Poly, Var};
pub use resarith::{SingularityParams, WahlParams};
pub use table::AlgebraTable;
