//! Exact computations for perverse-coherent sheaves on the nilpotent cone
//! of PGL3: weights and Weyl groups, line-bundle cohomology on the flag
//! variety, nilpotent orbit invariants, the Lusztig–Vogan bijection,
//! graded cohomology tables of simple objects, and quantum tilting
//! cohomology.

pub mod checks;
pub mod cohomology;
pub mod error;
pub mod exec;
pub mod ic_tables;
pub mod linalg;
pub mod lv;
pub mod orbits;
pub mod series;
pub mod tilting;
pub mod weights;

pub use error::{Error, Result};
pub use exec::Exec;
pub use weights::{AffineElt, Coords, Level, Weight, WeylElt};
pub use cohomology::{BottResult, Character, Characteristic, WeylSum};
pub use ic_tables::{CohSymbol, EvaluatedTable, GradedTable, ModuleSymbol, Twist};
pub use lv::{LvMode, SimpleLabel};
pub use orbits::Orbit;
pub use tilting::ExtTable;
