//! Brute-force reference implementations over bitmask vectors.
//!
//! A vector of `V_E` with `|E| = n` is a `u32` whose bit `e` is the `e`
//! coordinate and bit `n + e` the `e^` coordinate. Subspaces are sorted lists
//! of all their elements. Nothing here calls the library's linear algebra.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use lagdelta::ribbon::RibbonGraph;
use lagdelta::LagrangianSubspace;

pub fn low(n: usize) -> u32 {
    (1u32 << n) - 1
}

pub fn form(n: usize, u: u32, v: u32) -> bool {
    let a = (u & low(n)) & (v >> n);
    let b = (u >> n) & (v & low(n));
    (a.count_ones() + b.count_ones()) % 2 == 1
}

/// All elements of the span, sorted.
pub fn span(gens: &[u32]) -> Vec<u32> {
    let mut set: BTreeSet<u32> = BTreeSet::from([0]);
    for &g in gens {
        let shifted: Vec<u32> = set.iter().map(|x| x ^ g).collect();
        set.extend(shifted);
    }
    set.into_iter().collect()
}

/// Every `n`-dimensional isotropic subspace of `V_E`, by closing sets of
/// vectors under addition. Practical for `n ≤ 3`.
pub fn all_lagrangians(n: usize) -> Vec<Vec<u32>> {
    assert!(n <= 3, "membership masks hold 64 vectors");
    let width = 2 * n;
    let mask = |elems: &[u32]| elems.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut layer: HashSet<u64> = HashSet::from([1u64]);
    for _ in 0..n {
        let mut next = HashSet::new();
        for &m in &layer {
            let elems: Vec<u32> = (0..64u32).filter(|&v| m >> v & 1 == 1).collect();
            for v in 0..1u32 << width {
                if m >> v & 1 == 1 || elems.iter().any(|&u| form(n, u, v)) {
                    continue;
                }
                let mut grown = elems.clone();
                grown.push(v);
                next.insert(mask(&span(&grown)));
            }
        }
        layer = next;
    }
    let mut out: Vec<Vec<u32>> = layer
        .into_iter()
        .map(|m| (0..64u32).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

/// Number of `n`-dimensional subspaces of `F₂^{2n}`, isotropic or not.
pub fn count_all_subspaces(n: usize) -> usize {
    let width = 2 * n;
    let mut layer: HashSet<Vec<u32>> = HashSet::from([vec![0]]);
    for _ in 0..n {
        let mut next = HashSet::new();
        for s in &layer {
            for v in 0..1u32 << width {
                if s.binary_search(&v).is_err() {
                    let mut gens = s.clone();
                    gens.push(v);
                    next.insert(span(&gens));
                }
            }
        }
        layer = next;
    }
    layer.len()
}

pub fn elements(l: &LagrangianSubspace) -> Vec<u32> {
    let mut out: Vec<u32> = l
        .elements()
        .iter()
        .map(|v| v.iter_ones().fold(0u32, |m, i| m | 1 << i))
        .collect();
    out.sort();
    out
}

pub fn from_elements(n: usize, elems: &[u32]) -> LagrangianSubspace {
    let ground = lagdelta::GroundSet::numbered(n);
    let vecs = elems
        .iter()
        .map(|&v| lagdelta::BitVec::from_mask(2 * n, v as u64))
        .collect();
    LagrangianSubspace::new(ground, vecs).expect("Lagrangian")
}

/// Feasible sets as sorted bitmasks.
pub type Family = Vec<u32>;

/// `Y` is feasible when no nonzero element of `L` is supported on
/// `Y^ ⊔ (E∖Y)`.
pub fn nu(n: usize, elems: &[u32]) -> Family {
    (0..1u32 << n)
        .filter(|&y| {
            let allowed = (y << n) | (!y & low(n));
            elems.iter().all(|&v| v == 0 || v & !allowed != 0)
        })
        .collect()
}

pub fn is_graphic(n: usize, elems: &[u32]) -> bool {
    (0..n).all(|e| elems.iter().any(|&v| v >> n == 1 << e))
}

pub fn local_dual(n: usize, elems: &[u32], s: u32) -> Vec<u32> {
    let mut out: Vec<u32> = elems
        .iter()
        .map(|&v| {
            let p = v & low(n);
            let d = v >> n;
            let swap = (p ^ d) & s;
            v ^ swap ^ (swap << n)
        })
        .collect();
    out.sort();
    out
}

pub fn twist(family: &[u32], s: u32) -> Family {
    let mut out: Vec<u32> = family.iter().map(|f| f ^ s).collect();
    out.sort();
    out
}

/// Nonsingularity over GF(2): the rows span a space of full size.
pub fn nonsingular(rows: &[u32]) -> bool {
    span(rows).len() == 1 << rows.len()
}

/// `A` as row bitmasks; `{Y : A[Y] nonsingular}`.
pub fn nondegeneracy(n: usize, a: &[u32]) -> Family {
    (0..1u32 << n)
        .filter(|&y| {
            let idx: Vec<usize> = (0..n).filter(|&i| y >> i & 1 == 1).collect();
            let rows: Vec<u32> = idx
                .iter()
                .map(|&i| {
                    idx.iter()
                        .enumerate()
                        .fold(0u32, |m, (j, &c)| m | ((a[i] >> c & 1) << j))
                })
                .collect();
            nonsingular(&rows)
        })
        .collect()
}

pub fn symmetric_matrices(n: usize) -> Vec<Vec<u32>> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    (0..1u64 << slots.len())
        .map(|bits| {
            let mut a = vec![0u32; n];
            for (k, &(i, j)) in slots.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    a[i] |= 1 << j;
                    a[j] |= 1 << i;
                }
            }
            a
        })
        .collect()
}

/// `L_A = ⟨e^ + Σ_f A_fe f⟩`.
pub fn graphic_subspace(n: usize, a: &[u32]) -> Vec<u32> {
    let gens: Vec<u32> = (0..n).map(|e| (1 << (n + e)) | a[e]).collect();
    span(&gens)
}

pub fn sea(family: &[u32]) -> bool {
    let feasible: HashSet<u32> = family.iter().copied().collect();
    family.iter().all(|&p1| {
        family.iter().all(|&p2| {
            let d = p1 ^ p2;
            (0..32).filter(|&e| d >> e & 1 == 1).all(|e| {
                (0..32)
                    .filter(|&f| d >> f & 1 == 1)
                    .any(|f| feasible.contains(&(p1 ^ (1 << e) ^ (1 << f))))
            })
        })
    })
}

/// Moves the bits of `x` at the positions in `keep` down to `0..|keep|`.
pub fn compress(x: u32, keep: u32) -> u32 {
    let mut out = 0;
    let mut j = 0;
    for i in 0..32 {
        if keep >> i & 1 == 1 {
            out |= (x >> i & 1) << j;
            j += 1;
        }
    }
    out
}

/// Reduction onto `keep`: elements vanishing on the duals of the discarded
/// coordinates, projected to `keep ⊔ keep^`.
pub fn reduce(n: usize, elems: &[u32], keep: u32) -> Vec<u32> {
    let discarded = !keep & low(n);
    let set: BTreeSet<u32> = elems
        .iter()
        .filter(|&&v| (v >> n) & discarded == 0)
        .map(|&v| compress(v & low(n), keep) | (compress(v >> n, keep) << keep.count_ones()))
        .collect();
    set.into_iter().collect()
}

/// Restriction keeping the traces of the feasible sets with fewest elements
/// outside `keep`.
pub fn restrict(family: &[u32], keep: u32) -> Family {
    let Some(k) = family.iter().map(|f| (f & !keep).count_ones()).min() else {
        return Vec::new();
    };
    let set: BTreeSet<u32> = family
        .iter()
        .filter(|f| (*f & !keep).count_ones() == k)
        .map(|&f| compress(f, keep))
        .collect();
    set.into_iter().collect()
}

pub fn direct_sum_vectors(n: usize, a: &[u32], m: usize, b: &[u32]) -> Vec<u32> {
    let embed_a = |v: u32| (v & low(n)) | ((v >> n) << (n + m));
    let embed_b = |v: u32| ((v & low(m)) << n) | ((v >> m) << (2 * n + m));
    let mut out: Vec<u32> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| embed_a(x) | embed_b(y)))
        .collect();
    out.sort();
    out
}

pub fn direct_sum_family(n: usize, a: &[u32], b: &[u32]) -> Family {
    let mut out: Vec<u32> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| x | y << n))
        .collect();
    out.sort();
    out
}

fn permute_bits(x: u32, perm: &[usize], offset: usize) -> u32 {
    perm.iter().enumerate().fold(0, |m, (i, &p)| {
        m | ((x >> (offset + p) & 1) << (offset + i))
    })
}

/// Lexicographically least sorted family over relabelings.
pub fn family_key(n: usize, family: &[u32]) -> Vec<u32> {
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut f: Vec<u32> = family.iter().map(|&x| permute_bits(x, &perm, 0)).collect();
            f.sort();
            f
        })
        .min()
        .expect("one permutation")
}

/// Lexicographically least sorted element list over relabelings.
pub fn subspace_key(n: usize, elems: &[u32]) -> Vec<u32> {
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut s: Vec<u32> = elems
                .iter()
                .map(|&v| permute_bits(v, &perm, 0) | permute_bits(v, &perm, n))
                .collect();
            s.sort();
            s
        })
        .min()
        .expect("one permutation")
}

/// First move at `(e, f)`: `v ↦ v + v_{e^} f + v_{f^} e`.
pub fn first_move(n: usize, v: u32, e: usize, f: usize) -> u32 {
    let mut out = v;
    if v >> (n + e) & 1 == 1 {
        out ^= 1 << f;
    }
    if v >> (n + f) & 1 == 1 {
        out ^= 1 << e;
    }
    out
}

fn swap_pair(n: usize, v: u32, e: usize) -> u32 {
    let a = v >> e & 1;
    let b = v >> (n + e) & 1;
    let x = a ^ b;
    v ^ (x << e) ^ (x << (n + e))
}

/// Second move: the first move conjugated by local duality at `f`.
pub fn second_move(n: usize, v: u32, e: usize, f: usize) -> u32 {
    swap_pair(n, first_move(n, swap_pair(n, v, f), e, f), f)
}

pub fn apply(elems: &[u32], map: impl Fn(u32) -> u32) -> Vec<u32> {
    let mut out: Vec<u32> = elems.iter().map(|&v| map(v)).collect();
    out.sort();
    out
}

/// Boundary components by the classical face walk on signed rotations:
/// states are (half-edge, direction), the walk crosses an edge, flips the
/// direction on twisted edges, and turns to the neighbouring half-edge in
/// the current direction. Every face is met once in each direction.
pub fn faces(g: &RibbonGraph, present: u64) -> usize {
    let m = g.num_edges();
    let mut partner = vec![0usize; 2 * m];
    let mut twisted = vec![false; 2 * m];
    let mut alive = vec![false; 2 * m];
    for (k, e) in g.edges().iter().enumerate() {
        let [a, b] = e.ends;
        partner[a] = b;
        partner[b] = a;
        twisted[a] = e.twisted;
        twisted[b] = e.twisted;
        alive[a] = present >> k & 1 == 1;
        alive[b] = alive[a];
    }
    let mut next = vec![0usize; 2 * m];
    let mut prev = vec![0usize; 2 * m];
    let mut empty = 0;
    for rot in g.rotations() {
        let kept: Vec<usize> = rot.iter().copied().filter(|&h| alive[h]).collect();
        if kept.is_empty() {
            empty += 1;
            continue;
        }
        for (i, &h) in kept.iter().enumerate() {
            next[h] = kept[(i + 1) % kept.len()];
            prev[h] = kept[(i + kept.len() - 1) % kept.len()];
        }
    }
    let mut seen = HashSet::new();
    let mut orbits = 0;
    for h in (0..2 * m).filter(|&h| alive[h]) {
        for dir in [true, false] {
            if seen.contains(&(h, dir)) {
                continue;
            }
            orbits += 1;
            let (mut x, mut d) = (h, dir);
            while seen.insert((x, d)) {
                let y = partner[x];
                let d2 = d ^ twisted[x];
                x = if d2 { next[y] } else { prev[y] };
                d = d2;
            }
        }
    }
    empty + orbits / 2
}

pub fn rho(g: &RibbonGraph) -> Family {
    (0..1u32 << g.num_edges())
        .filter(|&f| faces(g, f as u64) == 1)
        .collect()
}

/// Rank over `ℚ` of an integer matrix by fraction-free elimination.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][c] == 0 {
                continue;
            }
            let (a, b) = (m[rank][c], m[r][c]);
            let pivot_row = m[rank].clone();
            for (x, p) in m[r][c..].iter_mut().zip(&pivot_row[c..]) {
                *x = *x * a - p * b;
            }
            let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
            if g > 1 {
                m[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
