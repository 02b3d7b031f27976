//! The map `ν_E` from Lagrangian subspaces to binary delta-matroids and its
//! inverse.
//!
//! `nu` tests every subset against the definition directly. `nu_inverse` goes
//! through the graphic normal form instead (twist until `∅` is feasible,
//! rebuild the symmetric matrix, undo the twist by local duality), so the two
//! directions share no code path beyond the GF(2) primitives.

use crate::deltamatroid::{DeltaMatroid, FramedGraph, SetSystem};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::ground::Subset;
use crate::symplectic::{dual, LagrangianSubspace};

/// Whether `L ∩ ⟨Y^∨ ⊔ (E∖Y)⟩ = 0`.
pub fn avoids_test_space(l: &LagrangianSubspace, y: Subset) -> bool {
    let n = l.size();
    let mut rows: Vec<BitVec> = l.basis().rows().to_vec();
    for e in 0..n {
        let coord = if y.contains(e) { dual(n, e) } else { e };
        rows.push(BitVec::unit(2 * n, coord));
    }
    BitMatrix::from_rows(2 * n, rows).expect("row width").rank() == 2 * n
}

/// `ν_E(L) = (E; {Y : L ∩ ⟨Y^∨ ⊔ (E∖Y)⟩ = 0})`.
pub fn nu(l: &LagrangianSubspace) -> SetSystem {
    let family = Subset::all(l.size()).filter(|&y| avoids_test_space(l, y));
    SetSystem::new(l.ground().clone(), family).expect("subsets of ground")
}

/// The unique `L` with `ν(L) = s`.
pub fn nu_inverse(s: &SetSystem) -> Result<LagrangianSubspace> {
    let (phi, graph) = s
        .binary_witness()
        .map_err(|_| Error::NotBinary)?
        .ok_or(Error::NotBinary)?;
    let graphic = LagrangianSubspace::from_symmetric_matrix(s.ground().clone(), graph.adjacency())?;
    graphic.local_dual(phi)
}

/// `ν(L * {e}) == ν(L) * {e}`.
pub fn check_twist_equivariance(l: &LagrangianSubspace, e: usize) -> Result<bool> {
    if e >= l.size() {
        return Err(Error::IndexOutOfRange {
            index: e,
            dim: l.size(),
        });
    }
    let s = Subset::singleton(e);
    Ok(nu(&l.local_dual(s)?) == nu(l).twist(s)?)
}

/// The graphic subspace and the non-degeneracy delta-matroid of one framed
/// graph; `nu` of the first equals the second.
pub fn graphic_bridge(g: &FramedGraph) -> (LagrangianSubspace, DeltaMatroid) {
    let l = LagrangianSubspace::from_symmetric_matrix(g.ground().clone(), g.adjacency())
        .expect("framed graphs are symmetric");
    (l, g.nondegeneracy_dm())
}
