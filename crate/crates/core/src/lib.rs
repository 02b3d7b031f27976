//! Lagrangian subspaces of symplectic GF(2)-spaces, binary delta-matroids,
//! ribbon graphs, and the Hopf algebras built on them.
//!
//! The central object is the map [`correspondence::nu`], which sends a
//! Lagrangian subspace `L ⊂ V_E` to the set system of subsets `Y ⊆ E` with
//! `L ∩ ⟨Y^∨ ⊔ (E∖Y)⟩ = 0`. It is a bijection onto binary delta-matroids, it
//! intertwines local duality with twisting, it carries the Lagrangian map of a
//! ribbon graph to its quasi-tree delta-matroid, and it is an isomorphism of
//! the two graded Hopf algebras together with their four-term quotients.

pub mod cli;
pub mod correspondence;
pub mod deltamatroid;
pub mod error;
pub mod gf2;
pub mod ground;
pub mod hopf;
pub mod ribbon;
pub mod symplectic;
pub mod verify;

pub use correspondence::{nu, nu_inverse};
pub use deltamatroid::{DeltaMatroid, FramedGraph, RestrictMode, SetSystem};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec};
pub use ground::{GroundSet, Subset};
pub use ribbon::RibbonGraph;
pub use symplectic::{LagrangianSubspace, Reduction, VassilievMove};
