//! Exact solvers for independence coloring games, with the classic
//! coloring game and marking game for comparison.
//!
//! ```
//! use icgame::families::FamilySpec;
//! use icgame::game::Variant;
//! use icgame::solver::{solve, SolveLimits};
//!
//! let p6 = "path:6".parse::<FamilySpec>().unwrap().generate().unwrap().graph;
//! assert_eq!(solve(&p6, Variant::A, SolveLimits::default()).unwrap(), 3);
//! assert_eq!(solve(&p6, Variant::B, SolveLimits::default()).unwrap(), 2);
//! ```

pub mod classic;
pub mod corpus;
pub mod families;
pub mod game;
pub mod graph;
pub mod solver;
pub mod verify;
