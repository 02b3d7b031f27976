//! Set systems, delta-matroids, and non-degeneracy delta-matroids of framed
//! graphs.

use std::fmt;
use std::ops::Deref;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::ground::{GroundSet, Subset};

/// Largest ground set accepted by the brute-force canonical forms.
pub const MAX_CANONICAL: usize = 8;

/// `A Δ B`.
pub fn sym_diff(a: Subset, b: Subset) -> Subset {
    a.sym_diff(b)
}

/// A ground set with a family of feasible subsets, kept sorted by bitmask.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetSystem {
    ground: GroundSet,
    feasible: Vec<Subset>,
}

/// How a coproduct restricts a set system to part of its ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RestrictMode {
    /// `{φ ∈ Ψ : φ ⊆ E'}`; may be empty.
    Naive,
    /// `{φ ∩ E' : |φ ∖ E'| minimal}`; never empty for a proper system.
    #[default]
    MinimalExcess,
}

/// A failure of the symmetric exchange axiom: no `e'` rescues `(φ₁, φ₂, e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SeaViolation {
    pub phi1: Subset,
    pub phi2: Subset,
    pub e: usize,
}

impl SetSystem {
    pub fn new<I: IntoIterator<Item = Subset>>(ground: GroundSet, feasible: I) -> Result<Self> {
        let full = ground.full();
        let mut feasible: Vec<Subset> = feasible.into_iter().collect();
        if feasible.iter().any(|s| !s.is_subset_of(full)) {
            return Err(Error::NotSubset);
        }
        feasible.sort_unstable();
        feasible.dedup();
        Ok(SetSystem { ground, feasible })
    }

    /// Builds a system from label lists, e.g. `&[&["1"], &["1", "2"]]`.
    pub fn from_labels(ground: GroundSet, sets: &[&[&str]]) -> Result<Self> {
        let family = sets
            .iter()
            .map(|labels| {
                labels
                    .iter()
                    .map(|l| {
                        ground
                            .index_of(l)
                            .ok_or_else(|| Error::UnknownLabel(l.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(Subset::from_indices)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, family)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn feasible(&self) -> &[Subset] {
        &self.feasible
    }

    pub fn is_feasible(&self, s: Subset) -> bool {
        self.feasible.binary_search(&s).is_ok()
    }

    pub fn is_proper(&self) -> bool {
        !self.feasible.is_empty()
    }

    /// First violation of the symmetric exchange axiom, if any.
    ///
    /// The exchange element may equal `e`, in which case the move is `φ₁ Δ {e}`.
    pub fn sea_violation(&self) -> Result<Option<SeaViolation>> {
        if !self.is_proper() {
            return Err(Error::ImproperSystem);
        }
        for &phi1 in &self.feasible {
            for &phi2 in &self.feasible {
                let delta = phi1.sym_diff(phi2);
                for e in delta.iter() {
                    let rescued = delta.iter().any(|f| {
                        let step = Subset::singleton(e).union(Subset::singleton(f));
                        self.is_feasible(phi1.sym_diff(step))
                    });
                    if !rescued {
                        return Ok(Some(SeaViolation { phi1, phi2, e }));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn check_sea(&self) -> Result<bool> {
        Ok(self.sea_violation()?.is_none())
    }

    /// `D * E' = (E; {φ Δ E'})`.
    pub fn twist(&self, by: Subset) -> Result<SetSystem> {
        if !self.ground.contains_subset(by) {
            return Err(Error::NotSubset);
        }
        Self::new(
            self.ground.clone(),
            self.feasible.iter().map(|f| f.sym_diff(by)),
        )
    }

    /// The symmetric matrix a binary system must come from once `∅` is
    /// feasible: `A_ee = [{e} ∈ Φ]`, `A_ee' = A_ee·A_e'e' + [{e,e'} ∈ Φ]`.
    fn reconstruct_matrix(&self) -> BitMatrix {
        let n = self.size();
        let mut a = BitMatrix::zeros(n, n);
        for e in 0..n {
            a.set(e, e, self.is_feasible(Subset::singleton(e)));
        }
        for e in 0..n {
            for f in 0..e {
                let pair = Subset::singleton(e).with(f);
                let x = (a.get(e, e) && a.get(f, f)) ^ self.is_feasible(pair);
                a.set(e, f, x);
                a.set(f, e, x);
            }
        }
        a
    }

    /// A twist set `E'` and framed graph `G` with `self = Φ(G) * E'`, if any.
    pub fn binary_witness(&self) -> Result<Option<(Subset, FramedGraph)>> {
        let &phi = self.feasible.first().ok_or(Error::ImproperSystem)?;
        let shifted = self.twist(phi)?;
        let g = FramedGraph::new(self.ground.clone(), shifted.reconstruct_matrix())?;
        if g.nondegeneracy_dm().as_set_system() == &shifted {
            Ok(Some((phi, g)))
        } else {
            Ok(None)
        }
    }

    pub fn is_binary(&self) -> Result<bool> {
        Ok(self.binary_witness()?.is_some())
    }

    /// `Ψ|_{E'}` over the ground set `E'`.
    pub fn restrict(&self, keep: Subset, mode: RestrictMode) -> Result<SetSystem> {
        if !self.ground.contains_subset(keep) {
            return Err(Error::NotSubset);
        }
        let ground = self.ground.restrict(keep)?;
        let family: Vec<Subset> = match mode {
            RestrictMode::Naive => self
                .feasible
                .iter()
                .filter(|f| f.is_subset_of(keep))
                .map(|f| f.compress(keep))
                .collect(),
            RestrictMode::MinimalExcess => {
                let excess = |f: &Subset| f.difference(keep).len();
                match self.feasible.iter().map(excess).min() {
                    None => Vec::new(),
                    Some(k) => self
                        .feasible
                        .iter()
                        .filter(|f| excess(f) == k)
                        .map(|f| f.compress(keep))
                        .collect(),
                }
            }
        };
        Self::new(ground, family)
    }

    /// Direct sum over the concatenated ground set; labels must not overlap.
    pub fn direct_sum(&self, other: &SetSystem) -> Result<SetSystem> {
        let ground = self.ground.disjoint_union(&other.ground)?;
        let shift = self.size();
        let family = self
            .feasible
            .iter()
            .cartesian_product(&other.feasible)
            .map(|(a, b)| Subset(a.0 | b.0 << shift))
            .collect::<Vec<_>>();
        Self::new(ground, family)
    }

    /// Relabels: element `i` of the result is element `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> SetSystem {
        let inv = inverse(perm);
        let family = self
            .feasible
            .iter()
            .map(|f| Subset::from_indices(f.iter().map(|j| inv[j])));
        Self::new(self.ground.permuted(perm), family).expect("permutation keeps subsets")
    }

    pub fn with_ground(&self, ground: GroundSet) -> Result<SetSystem> {
        if ground.len() != self.size() {
            return Err(Error::GroundMismatch);
        }
        Ok(SetSystem {
            ground,
            feasible: self.feasible.clone(),
        })
    }

    fn characteristic_bytes(&self, perm_inv: &[usize]) -> Vec<u8> {
        let n = self.size();
        let mut bytes = vec![0u8; (1usize << n).div_ceil(8)];
        for f in &self.feasible {
            let g = f.iter().fold(0usize, |acc, j| acc | 1 << perm_inv[j]);
            bytes[g / 8] |= 1 << (7 - g % 8);
        }
        bytes
    }

    /// Lexicographically smallest characteristic bitmap of the family over all
    /// relabelings, with the permutation attaining it.
    pub fn canonical_form(&self) -> Result<(Vec<u8>, Vec<usize>)> {
        let n = self.size();
        if n > MAX_CANONICAL {
            return Err(Error::GroundSetTooLarge {
                size: n,
                limit: MAX_CANONICAL,
            });
        }
        let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
        for perm in (0..n).permutations(n) {
            let key = self.characteristic_bytes(&inverse(&perm));
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                best = Some((key, perm));
            }
        }
        Ok(best.expect("at least one permutation"))
    }

    /// Rebuilds a representative over `{1, …, n}` from a canonical key.
    pub fn from_canonical_key(n: usize, key: &[u8]) -> Result<SetSystem> {
        if n > MAX_CANONICAL || key.len() != (1usize << n).div_ceil(8) {
            return Err(Error::DimensionMismatch(format!(
                "key of {} bytes for degree {n}",
                key.len()
            )));
        }
        let family = (0..1u64 << n)
            .filter(|&g| key[g as usize / 8] >> (7 - g % 8) & 1 == 1)
            .map(Subset);
        Self::new(GroundSet::numbered(n), family)
    }

    /// Family in set notation, e.g. `{1} {2} {1,2}`.
    pub fn family_string(&self) -> String {
        self.feasible
            .iter()
            .map(|&f| self.ground.format_subset(f))
            .join(" ")
    }

    /// Parses the delta-matroid text format: ground labels on line 1, then one
    /// feasible set per line (comma-separated labels, `-` for ∅).
    pub fn parse_text(text: &str) -> Result<SetSystem> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (hline, header) = lines
            .by_ref()
            .find(|(_, l)| !l.starts_with('#'))
            .unwrap_or((1, ""));
        let ground = GroundSet::new(header.split_whitespace())
            .map_err(|e| Error::parse(hline, e.to_string()))?;
        let mut family = Vec::new();
        for (lineno, line) in lines {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let s = ground
                .parse_subset(line)
                .map_err(|e| Error::parse(lineno, e.to_string()))?;
            family.push(s);
        }
        Self::new(ground, family)
    }

    pub fn to_text(&self) -> String {
        let mut out = self.ground.labels().join(" ");
        out.push('\n');
        for &f in &self.feasible {
            if f.is_empty() {
                out.push('-');
            } else {
                out.push_str(&f.iter().map(|i| self.ground.label(i)).join(","));
            }
            out.push('\n');
        }
        out
    }
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {})",
            self.ground.format_subset(self.ground.full()),
            self.family_string()
        )
    }
}

/// A proper set system satisfying the symmetric exchange axiom.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DeltaMatroid(SetSystem);

impl DeltaMatroid {
    pub fn new(system: SetSystem) -> Result<Self> {
        match system.sea_violation()? {
            None => Ok(DeltaMatroid(system)),
            Some(_) => Err(Error::NotDeltaMatroid),
        }
    }

    /// Wraps a system known to be a delta-matroid by construction.
    pub(crate) fn trusted(system: SetSystem) -> Self {
        debug_assert!(
            system.size() > 6 || system.check_sea().unwrap_or(false),
            "not a delta-matroid: {system:?}"
        );
        DeltaMatroid(system)
    }

    pub fn as_set_system(&self) -> &SetSystem {
        &self.0
    }

    pub fn into_set_system(self) -> SetSystem {
        self.0
    }
}

impl Deref for DeltaMatroid {
    type Target = SetSystem;
    fn deref(&self) -> &SetSystem {
        &self.0
    }
}

impl fmt::Debug for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A simple graph with a GF(2) framing on each vertex, as its adjacency
/// matrix with framings on the diagonal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FramedGraph {
    ground: GroundSet,
    adjacency: BitMatrix,
}

impl FramedGraph {
    pub fn new(ground: GroundSet, adjacency: BitMatrix) -> Result<Self> {
        let n = ground.len();
        if adjacency.nrows() != n || adjacency.ncols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{n} vertices but a {}x{} matrix",
                adjacency.nrows(),
                adjacency.ncols()
            )));
        }
        if !adjacency.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(FramedGraph { ground, adjacency })
    }

    /// Vertices `1..=n`, the listed edges (0-based pairs), and framings.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], framings: &[bool]) -> Result<Self> {
        let mut a = BitMatrix::zeros(n, n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::IndexOutOfRange {
                    index: u.max(v),
                    dim: n,
                });
            }
            a.set(u, v, true);
            a.set(v, u, true);
        }
        for (i, &f) in framings.iter().enumerate() {
            a.set(i, i, f);
        }
        Self::new(GroundSet::numbered(n), a)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adjacency
    }

    /// `Φ(G) = {U : det A(G)|_U = 1}`; `∅` is feasible since `det` of the
    /// empty matrix is 1.
    pub fn nondegeneracy_dm(&self) -> DeltaMatroid {
        let n = self.ground.len();
        let family = Subset::all(n).filter(|u| {
            self.adjacency
                .principal_submatrix_mask(u.bits())
                .and_then(|m| m.det())
                .expect("square adjacency")
        });
        DeltaMatroid::trusted(
            SetSystem::new(self.ground.clone(), family).expect("subsets of ground"),
        )
    }
}

/// All symmetric `n × n` GF(2) matrices.
pub fn symmetric_matrices(n: usize) -> impl Iterator<Item = BitMatrix> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    (0u64..1 << slots.len()).map(move |bits| {
        let mut a = BitMatrix::zeros(n, n);
        for (k, &(i, j)) in slots.iter().enumerate() {
            if bits >> k & 1 == 1 {
                a.set(i, j, true);
                a.set(j, i, true);
            }
        }
        a
    })
}

/// Every binary delta-matroid on `n` labeled elements, as twists of
/// non-degeneracy delta-matroids, sorted and deduplicated.
pub fn binary_delta_matroids(n: usize) -> Vec<SetSystem> {
    let ground = GroundSet::numbered(n);
    let mut out: Vec<SetSystem> = symmetric_matrices(n)
        .flat_map(|a| {
            let dm = FramedGraph::new(ground.clone(), a)
                .expect("symmetric")
                .nondegeneracy_dm()
                .into_set_system();
            Subset::all(n)
                .map(|t| dm.twist(t).expect("subset of ground"))
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
