//! The symplectic space `V_E` over GF(2) and its Lagrangian subspaces.
//!
//! Coordinates of `V_E` are ordered `e₁, …, e_n, e₁^∨, …, e_n^∨`, following
//! the order of the [`GroundSet`]. The form pairs `e` with `e^∨` and nothing
//! else.

mod enumerate;
mod moves;

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::ground::{label_order, GroundSet, Subset};

pub use enumerate::{enumerate_lagrangians, lagrangian_count, MAX_ENUMERATION};
pub use moves::{twist_matrix, MoveKind, VassilievMove};

/// An element of `V_E`: a bit vector of length `2|E|`.
pub type SymplecticVector = BitVec;

/// Index of the coordinate `e^∨` in a space over `n` elements.
#[inline]
pub fn dual(n: usize, e: usize) -> usize {
    n + e
}

/// `(u, v) = Σ_e (u_e v_{e^∨} + u_{e^∨} v_e)`.
pub fn symplectic_form(u: &SymplecticVector, v: &SymplecticVector) -> Result<bool> {
    if u.len() != v.len() || !u.len().is_multiple_of(2) {
        return Err(Error::GroundMismatch);
    }
    Ok(pairing(u, v))
}

pub(crate) fn pairing(u: &BitVec, v: &BitVec) -> bool {
    let n = u.len() / 2;
    let mut acc = false;
    for e in u.iter_ones() {
        let partner = if e < n { e + n } else { e - n };
        acc ^= v.get(partner);
    }
    acc
}

/// Which coisotropic subspace realises the symplectic reduction onto `I`.
///
/// With `D = E∖I`, `Primal` reduces by `W = {v : v_{d^∨} = 0, d ∈ D}`, whose
/// annihilator is `⟨D⟩`; `Dual` reduces by `W = {v : v_d = 0, d ∈ D}`, whose
/// annihilator is `⟨D^∨⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Reduction {
    #[default]
    Primal,
    Dual,
}

/// A Lagrangian subspace of `V_E`, stored as its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LagrangianSubspace {
    ground: GroundSet,
    basis: BitMatrix,
}

impl LagrangianSubspace {
    /// Canonical form of the span of `spanning`, which must be Lagrangian.
    pub fn new(ground: GroundSet, spanning: Vec<SymplecticVector>) -> Result<Self> {
        let n = ground.len();
        let width = 2 * n;
        let m = BitMatrix::from_rows(width, spanning)?;
        for i in 0..m.nrows() {
            for j in 0..i {
                if pairing(m.row(i), m.row(j)) {
                    return Err(Error::NotIsotropic(j, i));
                }
            }
        }
        let basis = m.echelon().matrix;
        if basis.nrows() != n {
            return Err(Error::WrongDimension {
                expected: n,
                found: basis.nrows(),
            });
        }
        Ok(LagrangianSubspace { ground, basis })
    }

    /// Wraps a basis already in reduced echelon form.
    pub(crate) fn from_echelon_unchecked(ground: GroundSet, basis: BitMatrix) -> Self {
        let l = LagrangianSubspace { ground, basis };
        debug_assert!(l.is_lagrangian(), "not Lagrangian: {l:?}");
        l
    }

    fn from_spanning_checked(ground: GroundSet, rows: Vec<BitVec>) -> Self {
        let width = 2 * ground.len();
        let basis = BitMatrix::from_rows(width, rows)
            .expect("row width")
            .echelon()
            .matrix;
        Self::from_echelon_unchecked(ground, basis)
    }

    /// The unique Lagrangian subspace of the zero space.
    pub fn zero() -> Self {
        LagrangianSubspace {
            ground: GroundSet::empty(),
            basis: BitMatrix::zeros(0, 0),
        }
    }

    /// Parses a space from `+`-separated token lines such as `1^+2+2^`.
    pub fn from_tokens(ground: GroundSet, vectors: &[&str]) -> Result<Self> {
        let rows = vectors
            .iter()
            .map(|s| parse_vector(&ground, s, 1))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, rows)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// `|E|`.
    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    /// Rank `|E|`, pairwise isotropic, and in reduced echelon form.
    pub fn is_lagrangian(&self) -> bool {
        let n = self.size();
        let rows = self.basis.rows();
        rows.len() == n
            && self.basis.ncols() == 2 * n
            && self.basis.echelon().matrix == self.basis
            && rows
                .iter()
                .enumerate()
                .all(|(i, u)| rows[..i].iter().all(|v| !pairing(u, v)))
    }

    pub fn contains(&self, v: &SymplecticVector) -> bool {
        if v.len() != 2 * self.size() {
            return false;
        }
        let mut w = v.clone();
        let pivots = self.basis.echelon().pivots;
        for (row, p) in self.basis.rows().iter().zip(pivots) {
            if w.get(p) {
                w.xor_assign(row);
            }
        }
        w.is_zero()
    }

    /// All `2^|E|` vectors of the subspace.
    pub fn elements(&self) -> Vec<SymplecticVector> {
        let rows = self.basis.rows();
        (0u64..1 << rows.len())
            .map(|combo| {
                let mut v = BitVec::zeros(2 * self.size());
                for (k, row) in rows.iter().enumerate() {
                    if combo >> k & 1 == 1 {
                        v.xor_assign(row);
                    }
                }
                v
            })
            .collect()
    }

    /// Image under a linear map of `V_E` given as a matrix acting on columns.
    pub fn apply_linear(&self, map: &BitMatrix) -> Result<Self> {
        let width = 2 * self.size();
        if map.nrows() != width || map.ncols() != width {
            return Err(Error::DimensionMismatch(format!(
                "expected a {width}x{width} map, got {}x{}",
                map.nrows(),
                map.ncols()
            )));
        }
        let rows = self.basis.rows().iter().map(|v| map.apply(v)).collect();
        Self::new(self.ground.clone(), rows)
    }

    /// `L*S`: swaps coordinates `e ↔ e^∨` for every `e ∈ S`.
    pub fn local_dual(&self, s: Subset) -> Result<Self> {
        if !self.ground.contains_subset(s) {
            return Err(Error::NotSubset);
        }
        let n = self.size();
        let cols: Vec<usize> = (0..2 * n)
            .map(|c| {
                let e = c % n.max(1);
                if s.contains(e) {
                    if c < n {
                        c + n
                    } else {
                        c - n
                    }
                } else {
                    c
                }
            })
            .collect();
        let swapped = self.basis.select_columns(&cols);
        Ok(Self::from_spanning_checked(
            self.ground.clone(),
            swapped.into_rows(),
        ))
    }

    /// Witness vectors `v_e` with `(v_e, e) = 1` and `(v_e, e') = 0` for
    /// `e' ≠ e`, when they exist.
    ///
    /// `(v, e)` reads the `e^∨` coordinate of `v`, so the space is graphic
    /// exactly when it projects onto the dual coordinates bijectively.
    pub fn graphic_witness(&self) -> Option<Vec<SymplecticVector>> {
        let n = self.size();
        let order: Vec<usize> = (n..2 * n).chain(0..n).collect();
        let ech = self.basis.select_columns(&order).echelon();
        if ech.pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        // Undo the column reordering: position k of `order` holds coordinate order[k].
        let mut back = vec![0; 2 * n];
        for (k, &c) in order.iter().enumerate() {
            back[c] = k;
        }
        Some(ech.matrix.rows().iter().map(|r| r.select(&back)).collect())
    }

    pub fn is_graphic(&self) -> bool {
        self.graphic_witness().is_some()
    }

    /// The symmetric matrix `A(L)_{e,e'} = (v_e, e'^∨)` of a graphic subspace.
    pub fn graphic_matrix(&self) -> Result<BitMatrix> {
        let n = self.size();
        let witness = self.graphic_witness().ok_or(Error::NotGraphic)?;
        let mut a = BitMatrix::zeros(n, n);
        for (e, v) in witness.iter().enumerate() {
            for f in 0..n {
                if pairing(v, &BitVec::unit(2 * n, dual(n, f))) {
                    a.set(e, f, true);
                }
            }
        }
        debug_assert!(a.is_symmetric());
        Ok(a)
    }

    /// The graphic subspace spanned by `v_e = e^∨ + Σ_{e'} A_{e,e'} e'`.
    pub fn from_symmetric_matrix(ground: GroundSet, a: &BitMatrix) -> Result<Self> {
        let n = ground.len();
        if a.nrows() != n || a.ncols() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected a {n}x{n} matrix, got {}x{}",
                a.nrows(),
                a.ncols()
            )));
        }
        if !a.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let rows = (0..n)
            .map(|e| {
                let mut v = BitVec::unit(2 * n, dual(n, e));
                for f in a.row(e).iter_ones() {
                    v.set(f, true);
                }
                v
            })
            .collect();
        Ok(Self::from_spanning_checked(ground, rows))
    }

    /// A set `E'` with `L*E'` graphic.
    ///
    /// Standard basis vectors are scanned in the order
    /// `e₁, …, e_n, e₁^∨, …, e_n^∨`. A basis vector `b` is selected when some
    /// remaining vector `v` of the working basis has `(b, v) = 1`; the first such
    /// `v` is removed and the rest are made orthogonal to `b`. Each element is
    /// selected at most once (either as `e` or as `e^∨`). `E'` is the set of
    /// elements selected through their dual.
    pub fn graphify(&self) -> Subset {
        let n = self.size();
        let mut working: Vec<BitVec> = self.basis.rows().to_vec();
        let mut covered = vec![false; n];
        let mut selected_dual = Subset::EMPTY;
        for b in 0..2 * n {
            let e = b % n;
            if covered[e] {
                continue;
            }
            // (b, v) reads the coordinate paired with b.
            let partner = if b < n { b + n } else { b - n };
            let Some(k) = working.iter().position(|v| v.get(partner)) else {
                continue;
            };
            let picked = working.remove(k);
            for w in working.iter_mut() {
                if w.get(partner) {
                    w.xor_assign(&picked);
                }
            }
            covered[e] = true;
            if b >= n {
                selected_dual = selected_dual.with(e);
            }
        }
        debug_assert!(
            covered.iter().all(|&c| c),
            "graphify left elements uncovered"
        );
        selected_dual
    }

    /// Symplectic reduction `L_I`, a Lagrangian subspace of `V_I`.
    pub fn reduce(&self, keep: Subset, mode: Reduction) -> Result<Self> {
        if !self.ground.contains_subset(keep) {
            return Err(Error::NotSubset);
        }
        let n = self.size();
        let discarded = self.ground.full().difference(keep);
        // Coordinates that must vanish on L ∩ W.
        let constrained: Vec<usize> = discarded
            .iter()
            .map(|d| match mode {
                Reduction::Primal => dual(n, d),
                Reduction::Dual => d,
            })
            .collect();
        let rows = self.basis.rows();
        let constraints = self.basis.select_columns(&constrained).transpose();
        let inside: Vec<BitVec> = constraints
            .kernel()
            .into_iter()
            .map(|lambda| {
                let mut v = BitVec::zeros(2 * n);
                for k in lambda.iter_ones() {
                    v.xor_assign(&rows[k]);
                }
                v
            })
            .collect();
        let kept: Vec<usize> = keep.iter().chain(keep.iter().map(|e| dual(n, e))).collect();
        let sub_ground = self.ground.restrict(keep)?;
        let projected = inside.iter().map(|v| v.select(&kept)).collect();
        let reduced = Self::new(sub_ground, projected)?;
        Ok(reduced)
    }

    /// Image under a Vassiliev move.
    pub fn apply_move(&self, m: &VassilievMove) -> Result<Self> {
        self.apply_linear(&m.matrix(self.size())?)
    }

    /// Direct sum in `V_{E ⊔ F}`; the ground sets must be disjoint.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let ground = self.ground.disjoint_union(&other.ground)?;
        let (n, m) = (self.size(), other.size());
        let total = n + m;
        let embed = |v: &BitVec, offset: usize, k: usize| {
            let mut out = BitVec::zeros(2 * total);
            for c in v.iter_ones() {
                let target = if c < k {
                    offset + c
                } else {
                    total + offset + (c - k)
                };
                out.set(target, true);
            }
            out
        };
        let rows = self
            .basis
            .rows()
            .iter()
            .map(|v| embed(v, 0, n))
            .chain(other.basis.rows().iter().map(|v| embed(v, n, m)))
            .collect();
        Ok(Self::from_spanning_checked(ground, rows))
    }

    /// Relabels by a permutation: element `i` of the result is element
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.size();
        let cols: Vec<usize> = perm
            .iter()
            .copied()
            .chain(perm.iter().map(|&p| dual(n, p)))
            .collect();
        let rows = self.basis.select_columns(&cols).into_rows();
        Self::from_spanning_checked(self.ground.permuted(perm), rows)
    }

    /// Same basis over another ground set of equal size.
    pub fn with_ground(&self, ground: GroundSet) -> Result<Self> {
        if ground.len() != self.size() {
            return Err(Error::GroundMismatch);
        }
        Ok(LagrangianSubspace {
            ground,
            basis: self.basis.clone(),
        })
    }

    /// Lexicographically smallest basis encoding over all relabelings of `E`,
    /// together with the permutation attaining it.
    pub fn canonical_form(&self) -> Result<(Vec<u8>, Vec<usize>)> {
        let n = self.size();
        if n > crate::deltamatroid::MAX_CANONICAL {
            return Err(Error::GroundSetTooLarge {
                size: n,
                limit: crate::deltamatroid::MAX_CANONICAL,
            });
        }
        let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
        for perm in (0..n).permutations(n) {
            let key = encode_basis(self.permuted(&perm).basis());
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                best = Some((key, perm));
            }
        }
        Ok(best.expect("at least one permutation"))
    }

    /// Rebuilds a representative over `{1, …, n}` from a canonical key.
    pub fn from_canonical_key(n: usize, key: &[u8]) -> Result<Self> {
        let width = 2 * n;
        let row_bytes = width.div_ceil(8);
        if key.len() != n * row_bytes {
            return Err(Error::DimensionMismatch(format!(
                "key of {} bytes for degree {n}",
                key.len()
            )));
        }
        let rows = key
            .chunks(row_bytes.max(1))
            .take(n)
            .map(|chunk| {
                let mut v = BitVec::zeros(width);
                for c in 0..width {
                    if chunk[c / 8] >> (7 - c % 8) & 1 == 1 {
                        v.set(c, true);
                    }
                }
                v
            })
            .collect();
        Self::new(GroundSet::numbered(n), rows)
    }

    /// Parses the line-per-vector text format.
    ///
    /// An optional first line `ground: a b c` fixes the ground set and its
    /// order; otherwise the ground set is every label mentioned, numeric labels
    /// in numeric order.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let ground = match lines.first() {
            Some((lineno, l)) if l.starts_with("ground:") => {
                let g = GroundSet::new(l["ground:".len()..].split_whitespace())
                    .map_err(|e| Error::parse(*lineno, e.to_string()))?;
                lines.remove(0);
                g
            }
            _ => {
                let mut labels: Vec<String> = Vec::new();
                for (_, l) in &lines {
                    for tok in l.split('+') {
                        let label = tok.trim().trim_end_matches('^').to_string();
                        if !labels.contains(&label) {
                            labels.push(label);
                        }
                    }
                }
                labels.sort_by(|a, b| label_order(a, b));
                GroundSet::new(labels).map_err(|e| Error::parse(1, e.to_string()))?
            }
        };
        let rows = lines
            .iter()
            .map(|(lineno, l)| parse_vector(&ground, l, *lineno))
            .collect::<Result<Vec<_>>>()?;
        let last = lines.last().map_or(1, |(n, _)| *n);
        Self::new(ground, rows).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::parse(last, other.to_string()),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut sorted = self.ground.labels().to_vec();
        sorted.sort_by(|a, b| label_order(a, b));
        if sorted != self.ground.labels() {
            out.push_str("ground: ");
            out.push_str(&self.ground.labels().join(" "));
            out.push('\n');
        }
        for row in self.basis.rows() {
            out.push_str(&format_vector(&self.ground, row));
            out.push('\n');
        }
        out
    }
}

fn encode_basis(basis: &BitMatrix) -> Vec<u8> {
    let width = basis.ncols();
    let row_bytes = width.div_ceil(8);
    let mut out = Vec::with_capacity(basis.nrows() * row_bytes);
    for row in basis.rows() {
        let mut chunk = vec![0u8; row_bytes];
        for c in row.iter_ones() {
            chunk[c / 8] |= 1 << (7 - c % 8);
        }
        out.extend(chunk);
    }
    out
}

/// Parses `1^+2+2^` into a vector of `V_E`.
pub fn parse_vector(ground: &GroundSet, text: &str, line: usize) -> Result<SymplecticVector> {
    let n = ground.len();
    let mut v = BitVec::zeros(2 * n);
    for tok in text.split('+') {
        let tok = tok.trim();
        let (label, is_dual) = match tok.strip_suffix('^') {
            Some(l) => (l, true),
            None => (tok, false),
        };
        let e = ground
            .index_of(label)
            .ok_or_else(|| Error::parse(line, format!("unknown element `{tok}`")))?;
        v.flip(if is_dual { dual(n, e) } else { e });
    }
    Ok(v)
}

/// Formats a vector with each element followed by its dual, e.g. `1^+2+2^`.
pub fn format_vector(ground: &GroundSet, v: &SymplecticVector) -> String {
    let n = ground.len();
    let mut toks = Vec::new();
    for e in 0..n {
        if v.get(e) {
            toks.push(ground.label(e).to_string());
        }
        if v.get(dual(n, e)) {
            toks.push(format!("{}^", ground.label(e)));
        }
    }
    if toks.is_empty() {
        "0".to_string()
    } else {
        toks.join("+")
    }
}

impl fmt::Debug for LagrangianSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .basis
            .rows()
            .iter()
            .map(|v| format_vector(&self.ground, v))
            .collect();
        write!(f, "⟨{}⟩", vs.join(", "))
    }
}
