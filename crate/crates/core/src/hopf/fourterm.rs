//! Four-term elements built from the two commuting Vassiliev moves, their
//! spans, and the dimensions of the quotients by those spans.
//!
//! Delta-matroid moves are the Lagrangian moves conjugated by `ν`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::linalg::rational_rank;
use super::{basis_classes, integer, GradedElement, Hopf, IsoClassKey, Object, Side};
use crate::correspondence::{nu, nu_inverse};
use crate::deltamatroid::{binary_delta_matroids, SetSystem};
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::symplectic::{enumerate_lagrangians, LagrangianSubspace, VassilievMove};

pub const MAX_QUOTIENT_DEGREE: usize = 3;

/// Signs attached to `[x], [V1 x], [V2 x], [V1 V2 x]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignConvention {
    /// `[x] − [V1 x] − [V2 x] + [V1 V2 x]`.
    #[default]
    InclusionExclusion,
    /// `[x] − [V1 x] + [V2 x] − [V1 V2 x]`.
    Alternating,
}

impl SignConvention {
    pub fn name(self) -> &'static str {
        match self {
            SignConvention::InclusionExclusion => "inclusion-exclusion",
            SignConvention::Alternating => "alternating",
        }
    }

    fn signs(self) -> [i64; 4] {
        match self {
            SignConvention::InclusionExclusion => [1, -1, -1, 1],
            SignConvention::Alternating => [1, -1, 1, -1],
        }
    }
}

fn combine(objects: [Object; 4], convention: SignConvention) -> Result<GradedElement> {
    let mut out = GradedElement::zero();
    for (o, s) in objects.iter().zip(convention.signs()) {
        out.add_term(o.key()?, integer(s))?;
    }
    Ok(out)
}

fn moves(e: usize, e_prime: usize) -> Result<(VassilievMove, VassilievMove)> {
    Ok((
        VassilievMove::first(e, e_prime)?,
        VassilievMove::second(e, e_prime)?,
    ))
}

fn check_pair(n: usize, e: usize, e_prime: usize) -> Result<()> {
    if e >= n || e_prime >= n {
        return Err(Error::IndexOutOfRange {
            index: e.max(e_prime),
            dim: n,
        });
    }
    Ok(())
}

/// Four-term element of `L` at the ordered pair `(e, e')`.
pub fn four_term_element(
    l: &LagrangianSubspace,
    e: usize,
    e_prime: usize,
    convention: SignConvention,
) -> Result<GradedElement> {
    check_pair(l.size(), e, e_prime)?;
    let (v1, v2) = moves(e, e_prime)?;
    let a = l.apply_move(&v1)?;
    let b = l.apply_move(&v2)?;
    let ab = b.apply_move(&v1)?;
    combine([l.clone(), a, b, ab].map(Object::Lagrangian), convention)
}

/// `ν ∘ move ∘ ν⁻¹`.
pub fn transported_move(s: &SetSystem, m: &VassilievMove) -> Result<SetSystem> {
    Ok(nu(&nu_inverse(s)?.apply_move(m)?))
}

/// Four-term element of a binary delta-matroid, with transported moves.
pub fn four_term_element_dm(
    s: &SetSystem,
    e: usize,
    e_prime: usize,
    convention: SignConvention,
) -> Result<GradedElement> {
    check_pair(s.size(), e, e_prime)?;
    let (v1, v2) = moves(e, e_prime)?;
    let l = nu_inverse(s)?;
    let b = l.apply_move(&v2)?;
    let images = [l.clone(), l.apply_move(&v1)?, b.clone(), b.apply_move(&v1)?];
    combine(images.map(|x| Object::SetSystem(nu(&x))), convention)
}

fn ordered_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |e| (0..n).filter(move |&f| f != e).map(move |f| (e, f)))
}

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_QUOTIENT_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: n,
            limit: MAX_QUOTIENT_DEGREE,
        });
    }
    Ok(())
}

/// Four-term elements of every labeled object of degree `n` at every ordered
/// pair, in enumeration order.
pub fn relation_span(
    side: Side,
    n: usize,
    convention: SignConvention,
) -> Result<Vec<GradedElement>> {
    check_degree(n)?;
    let ground = GroundSet::numbered(n);
    let mut out = Vec::new();
    match side {
        Side::Lagrangian => {
            for l in enumerate_lagrangians(&ground)? {
                for (e, f) in ordered_pairs(n) {
                    out.push(four_term_element(&l, e, f, convention)?);
                }
            }
        }
        Side::DeltaMatroid => {
            for s in binary_delta_matroids(n) {
                for (e, f) in ordered_pairs(n) {
                    out.push(four_term_element_dm(&s, e, f, convention)?);
                }
            }
        }
    }
    Ok(out)
}

fn coordinates(elements: &[GradedElement], classes: &[IsoClassKey]) -> Vec<Vec<BigRational>> {
    let index: BTreeMap<&IsoClassKey, usize> =
        classes.iter().enumerate().map(|(i, k)| (k, i)).collect();
    elements
        .iter()
        .map(|x| {
            let mut row = vec![BigRational::zero(); classes.len()];
            for (k, c) in x.terms() {
                row[index[k]] = c.clone();
            }
            row
        })
        .collect()
}

/// Dimension of the degree-`n` part of the quotient by four-term elements.
pub fn quotient_dimension(side: Side, n: usize, convention: SignConvention) -> Result<usize> {
    check_degree(n)?;
    let classes = basis_classes(side, n)?;
    let relations = relation_span(side, n, convention)?;
    Ok(classes.len() - rational_rank(&coordinates(&relations, &classes)))
}

/// Outcome of comparing `ν` of the Lagrangian relations with the
/// delta-matroid relations in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationTransport {
    pub degree: usize,
    /// `ν` of each Lagrangian four-term element equals the delta-matroid
    /// four-term element of the image object at the same pair.
    pub elementwise: bool,
    pub lagrangian_rank: usize,
    pub image_rank: usize,
    pub deltamatroid_rank: usize,
    /// Rank of the image and delta-matroid relations together.
    pub joint_rank: usize,
}

impl RelationTransport {
    /// `ν` maps the relation span injectively onto the delta-matroid span.
    pub fn bijective(&self) -> bool {
        self.elementwise
            && self.lagrangian_rank == self.image_rank
            && self.image_rank == self.deltamatroid_rank
            && self.joint_rank == self.deltamatroid_rank
    }
}

pub fn check_relation_transport(
    h: &Hopf,
    n: usize,
    convention: SignConvention,
) -> Result<RelationTransport> {
    check_degree(n)?;
    let ground = GroundSet::numbered(n);
    let mut elementwise = true;
    let mut images = Vec::new();
    let lagrangian = relation_span(Side::Lagrangian, n, convention)?;
    let mut k = 0;
    for l in enumerate_lagrangians(&ground)? {
        let s = nu(&l);
        for (e, f) in ordered_pairs(n) {
            let image = h.nu_hom(&lagrangian[k])?;
            elementwise &= image == four_term_element_dm(&s, e, f, convention)?;
            images.push(image);
            k += 1;
        }
    }
    let l_classes = basis_classes(Side::Lagrangian, n)?;
    let d_classes = basis_classes(Side::DeltaMatroid, n)?;
    let deltamatroid = relation_span(Side::DeltaMatroid, n, convention)?;
    let joint: Vec<GradedElement> = images.iter().chain(&deltamatroid).cloned().collect();
    Ok(RelationTransport {
        degree: n,
        elementwise,
        lagrangian_rank: rational_rank(&coordinates(&lagrangian, &l_classes)),
        image_rank: rational_rank(&coordinates(&images, &d_classes)),
        deltamatroid_rank: rational_rank(&coordinates(&deltamatroid, &d_classes)),
        joint_rank: rational_rank(&coordinates(&joint, &d_classes)),
    })
}
