//! Exhaustive verification suites over all objects up to a size bound.
//!
//! Each suite returns a [`SuiteReport`]; `verify all` in the CLI prints them
//! as a table. Enumeration suites accept sizes up to
//! [`MAX_ENUMERATION_N`]; Hopf suites are capped at [`MAX_HOPF_N`].

use serde::Serialize;

use crate::correspondence::{avoids_test_space, check_twist_equivariance, nu, nu_inverse};
use crate::deltamatroid::{binary_delta_matroids, symmetric_matrices, FramedGraph};
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::hopf::{self, Hopf, Side, SignConvention};
use crate::ribbon::test_corpus;
use crate::symplectic::{
    enumerate_lagrangians, lagrangian_count, LagrangianSubspace, VassilievMove,
};

pub const MAX_ENUMERATION_N: usize = 4;
pub const MAX_HOPF_N: usize = 3;
/// Largest chord count in the ribbon corpus.
pub const MAX_CORPUS_EDGES: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

struct Tally {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.check_many(1, ok, what);
    }

    /// Records `cases` cases settled by one verdict.
    fn check_many(&mut self, cases: usize, ok: bool, what: impl FnOnce() -> String) {
        self.cases += cases;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn report(self, detail: String) -> SuiteReport {
        SuiteReport {
            name: self.name.to_string(),
            passed: self.failure.is_none(),
            cases: self.cases,
            detail: self.failure.unwrap_or(detail),
        }
    }
}

fn lagrangians(n: usize) -> Result<Vec<LagrangianSubspace>> {
    enumerate_lagrangians(&GroundSet::numbered(n))
}

/// The worked example: `ν(⟨1^+2+2^, 1+2⟩) = ({1,2}; {1} {2} {1,2})`.
pub fn example() -> Result<SuiteReport> {
    let mut t = Tally::new("example");
    let ground = GroundSet::numbered(2);
    let l = LagrangianSubspace::from_tokens(ground.clone(), &["1^+2+2^", "1+2"])?;
    let table: Vec<bool> = Subset::all(2).map(|y| avoids_test_space(&l, y)).collect();
    t.check(table == [false, true, true, true], || {
        format!("feasibility table {table:?}")
    });
    let s = nu(&l);
    t.check(s.family_string() == "{1} {2} {1,2}", || {
        format!("image {}", s.family_string())
    });
    t.check(nu_inverse(&s)? == l, || "inverse differs".into());
    Ok(t.report(format!("nu = {}", s.family_string())))
}

/// Counts, injectivity of `ν`, image equal to the binary delta-matroids, and
/// `ν⁻¹ ∘ ν = id`.
pub fn bijection(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("bijection");
    let mut counts = Vec::new();
    for n in 0..=max_n {
        let all = lagrangians(n)?;
        t.check(all.len() as u64 == lagrangian_count(n), || {
            format!("n={n}: {} subspaces", all.len())
        });
        let mut images = Vec::with_capacity(all.len());
        for l in &all {
            let s = nu(l);
            t.check(nu_inverse(&s).as_ref() == Ok(l), || format!("n={n}: {l:?}"));
            images.push(s);
        }
        images.sort();
        images.dedup();
        t.check(images.len() == all.len(), || {
            format!("n={n}: nu not injective")
        });
        t.check(images == binary_delta_matroids(n), || {
            format!("n={n}: image is not the set of binary delta-matroids")
        });
        counts.push(all.len().to_string());
    }
    Ok(t.report(format!("counts {}", counts.join(","))))
}

/// Graphic subspaces correspond to symmetric matrices.
pub fn graphic(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("graphic");
    for n in 0..=max_n {
        let ground = GroundSet::numbered(n);
        let graphic = lagrangians(n)?.iter().filter(|l| l.is_graphic()).count();
        t.check(graphic == 1 << (n * (n + 1) / 2), || {
            format!("n={n}: {graphic} graphic subspaces")
        });
        for a in symmetric_matrices(n) {
            let l = LagrangianSubspace::from_symmetric_matrix(ground.clone(), &a)?;
            t.check(l.graphic_matrix().as_ref() == Ok(&a), || {
                format!("n={n}: {a:?}")
            });
        }
    }
    Ok(t.report("graphic_matrix inverts from_symmetric_matrix".into()))
}

/// `ν(L * e) = ν(L) * e`.
pub fn twist_equivariance(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("twist-equivariance");
    for n in 1..=max_n {
        for l in lagrangians(n)? {
            for e in 0..n {
                t.check(check_twist_equivariance(&l, e)?, || format!("{l:?} at {e}"));
            }
        }
    }
    Ok(t.report("all subspaces, all elements".into()))
}

/// Local duality at `graphify(L)` makes `L` graphic.
pub fn graphification(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("graphify");
    for n in 0..=max_n {
        for l in lagrangians(n)? {
            let g = l.local_dual(l.graphify())?;
            t.check(g.is_graphic(), || format!("{l:?}"));
        }
    }
    Ok(t.report("local duals are graphic".into()))
}

/// Non-degeneracy delta-matroids of framed graphs and their twists satisfy
/// the symmetric exchange axiom.
pub fn exchange(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("exchange-axiom");
    for n in 0..=max_n {
        let ground = GroundSet::numbered(n);
        for a in symmetric_matrices(n) {
            let dm = FramedGraph::new(ground.clone(), a)?.nondegeneracy_dm();
            for s in Subset::all(n) {
                let twisted = dm.twist(s)?;
                t.check(twisted.check_sea()?, || format!("{twisted:?}"));
            }
        }
    }
    Ok(t.report("framed graphs times twists".into()))
}

/// `ν(π(Γ)) = ρ(Γ)` on chord diagrams and all their partial duals.
pub fn ribbon(max_edges: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("ribbon");
    for g in test_corpus(max_edges.min(MAX_CORPUS_EDGES)) {
        let rho = g.rho()?;
        let pi = g.pi()?;
        t.check(nu(&pi) == *rho.as_set_system(), || format!("{g:?}"));
    }
    Ok(t.report("nu(pi) = rho on the corpus".into()))
}

/// Hopf axioms on both sides and `ν` as a Hopf morphism.
pub fn hopf_suite(max_n: usize) -> Result<SuiteReport> {
    let max_n = max_n.min(MAX_HOPF_N);
    let mut t = Tally::new("hopf");
    let h = Hopf::default();
    let mut outcomes = vec![
        hopf::check_multiplicativity(&h, max_n)?,
        hopf::check_comultiplicativity(&h, max_n)?,
        hopf::check_key_bijectivity(&h, max_n)?,
    ];
    for side in [Side::Lagrangian, Side::DeltaMatroid] {
        outcomes.extend([
            hopf::check_bialgebra(&h, side, max_n)?,
            hopf::check_coassociativity(&h, side, max_n)?,
            hopf::check_counit(&h, side, max_n)?,
            hopf::check_antipode(&h, side, max_n)?,
            hopf::check_commutativity(side, max_n)?,
            hopf::check_cocommutativity(&h, side, max_n)?,
        ]);
    }
    for o in &outcomes {
        t.check_many(o.cases, o.passed(), || {
            format!(
                "{}: {}",
                o.name,
                o.first_failure.clone().unwrap_or_default()
            )
        });
    }
    Ok(t.report(format!("{} checks", outcomes.len())))
}

/// Four-term quotient dimensions agree and `ν` maps the relation spans onto
/// each other, under both sign conventions.
pub fn four_term(max_n: usize) -> Result<SuiteReport> {
    let max_n = max_n.min(MAX_HOPF_N);
    let mut t = Tally::new("four-term");
    let h = Hopf::default();
    let mut dims = Vec::new();
    for convention in [
        SignConvention::InclusionExclusion,
        SignConvention::Alternating,
    ] {
        let mut row = Vec::new();
        for n in 0..=max_n {
            let l = hopf::quotient_dimension(Side::Lagrangian, n, convention)?;
            let d = hopf::quotient_dimension(Side::DeltaMatroid, n, convention)?;
            t.check(l == d, || format!("{convention:?} n={n}: {l} vs {d}"));
            let transport = hopf::check_relation_transport(&h, n, convention)?;
            t.check(transport.bijective(), || format!("{transport:?}"));
            row.push(l.to_string());
        }
        dims.push(row.join(","));
    }
    Ok(t.report(format!("dims {}", dims.join(" / "))))
}

/// Involutions, commuting moves, `∅`-feasibility versus graphic, and Euler
/// characteristics of the orientable part of the ribbon corpus.
pub fn properties(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("properties");
    for n in 0..=max_n {
        for l in lagrangians(n)? {
            let s = nu(&l);
            t.check(s.is_feasible(Subset::EMPTY) == l.is_graphic(), || {
                format!("{l:?}: empty-set feasibility")
            });
            for x in Subset::all(n) {
                t.check(l.local_dual(x)?.local_dual(x)? == l, || {
                    format!("{l:?} * {x:?}")
                });
                t.check(s.twist(x)?.twist(x)? == s, || format!("{s:?} * {x:?}"));
            }
            for e in 0..n {
                for f in (0..n).filter(|&f| f != e) {
                    let (v1, v2) = (VassilievMove::first(e, f)?, VassilievMove::second(e, f)?);
                    let a = l.apply_move(&v1)?.apply_move(&v2)?;
                    let b = l.apply_move(&v2)?.apply_move(&v1)?;
                    t.check(a == b, || {
                        format!("{l:?}: moves at ({e},{f}) do not commute")
                    });
                }
            }
        }
    }
    for g in test_corpus(max_n.min(MAX_CORPUS_EDGES)) {
        let chi = g.euler_characteristic();
        let ok = if g.is_orientable() {
            chi <= 2 && chi % 2 == 0
        } else {
            chi <= 1
        };
        t.check(ok, || format!("{g:?}: Euler characteristic {chi}"));
    }
    Ok(t.report("all properties hold".into()))
}

/// Every suite, with enumeration bounded by `max_n`.
pub fn all(max_n: usize) -> Result<Vec<SuiteReport>> {
    if max_n > MAX_ENUMERATION_N {
        return Err(Error::GroundSetTooLarge {
            size: max_n,
            limit: MAX_ENUMERATION_N,
        });
    }
    Ok(vec![
        example()?,
        bijection(max_n)?,
        graphic(max_n)?,
        twist_equivariance(max_n)?,
        graphification(max_n)?,
        exchange(max_n)?,
        ribbon(max_n)?,
        hopf_suite(max_n)?,
        four_term(max_n)?,
        properties(max_n)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_pass_at_two() {
        for r in all(2).unwrap() {
            assert!(r.passed, "{r:?}");
            assert!(r.cases > 0, "{r:?}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(all(5).is_err());
    }
}
