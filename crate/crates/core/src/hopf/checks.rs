//! Exhaustive checks of the Hopf axioms and of `ν` as a Hopf morphism, over
//! all basis classes (or pairs of classes) up to a total degree.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use serde::Serialize;

use super::{
    add_coefficient, basis_classes, GradedElement, Hopf, HopfConfig, IsoClassKey, Object, Side,
};
use crate::deltamatroid::RestrictMode;
use crate::error::Result;
use crate::symplectic::Reduction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn run<T>(
    name: String,
    cases: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> Result<Option<String>>,
) -> Result<CheckOutcome> {
    let mut out = CheckOutcome {
        name,
        cases: 0,
        failures: 0,
        first_failure: None,
    };
    for case in cases {
        out.cases += 1;
        if let Some(msg) = check(&case)? {
            out.failures += 1;
            out.first_failure.get_or_insert(msg);
        }
    }
    Ok(out)
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Lagrangian => "lagrangian",
        Side::DeltaMatroid => "deltamatroid",
    }
}

fn classes_up_to(side: Side, max_degree: usize) -> Result<Vec<IsoClassKey>> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        out.extend(basis_classes(side, n)?);
    }
    Ok(out)
}

fn pairs_up_to(side: Side, max_degree: usize) -> Result<Vec<(IsoClassKey, IsoClassKey)>> {
    let classes = classes_up_to(side, max_degree)?;
    let mut out = Vec::new();
    for a in &classes {
        for b in &classes {
            if a.degree + b.degree <= max_degree {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

fn basis(k: &IsoClassKey) -> GradedElement {
    GradedElement::basis(k.clone())
}

/// `ν(ab) = ν(a)ν(b)` on pairs of Lagrangian classes.
pub fn check_multiplicativity(h: &Hopf, max_degree: usize) -> Result<CheckOutcome> {
    run(
        "multiplicativity".into(),
        pairs_up_to(Side::Lagrangian, max_degree)?,
        |(a, b)| {
            let (x, y) = (basis(a), basis(b));
            let lhs = h.nu_hom(&h.product(&x, &y)?)?;
            let rhs = h.product(&h.nu_hom(&x)?, &h.nu_hom(&y)?)?;
            Ok((lhs != rhs).then(|| format!("{a} * {b}")))
        },
    )
}

/// `(ν⊗ν)∘Δ = Δ∘ν` on Lagrangian classes.
pub fn check_comultiplicativity(h: &Hopf, max_degree: usize) -> Result<CheckOutcome> {
    run(
        "comultiplicativity".into(),
        classes_up_to(Side::Lagrangian, max_degree)?,
        |k| {
            let x = basis(k);
            let lhs = h.nu_hom_tensor(&h.coproduct(&x)?)?;
            let rhs = h.coproduct(&h.nu_hom(&x)?)?;
            Ok((lhs != rhs).then(|| format!("{k}")))
        },
    )
}

/// `Δ(ab) = Δ(a)Δ(b)`.
pub fn check_bialgebra(h: &Hopf, side: Side, max_degree: usize) -> Result<CheckOutcome> {
    run(
        format!("bialgebra/{}", side_name(side)),
        pairs_up_to(side, max_degree)?,
        |(a, b)| {
            let (x, y) = (basis(a), basis(b));
            let lhs = h.coproduct(&h.product(&x, &y)?)?;
            let rhs = h.tensor_product(&h.coproduct(&x)?, &h.coproduct(&y)?)?;
            Ok((lhs != rhs).then(|| format!("{a} * {b}")))
        },
    )
}

type Triple = BTreeMap<(IsoClassKey, IsoClassKey, IsoClassKey), BigRational>;

/// `(Δ⊗id)∘Δ = (id⊗Δ)∘Δ`.
pub fn check_coassociativity(h: &Hopf, side: Side, max_degree: usize) -> Result<CheckOutcome> {
    run(
        format!("coassociativity/{}", side_name(side)),
        classes_up_to(side, max_degree)?,
        |k| {
            let mut left = Triple::new();
            let mut right = Triple::new();
            for ((a, b), c) in h.basis_coproduct(k)?.terms() {
                for ((a1, a2), c2) in h.basis_coproduct(a)?.terms() {
                    add_coefficient(&mut left, (a1.clone(), a2.clone(), b.clone()), c * c2);
                }
                for ((b1, b2), c2) in h.basis_coproduct(b)?.terms() {
                    add_coefficient(&mut right, (a.clone(), b1.clone(), b2.clone()), c * c2);
                }
            }
            Ok((left != right).then(|| format!("{k}")))
        },
    )
}

/// `(ε⊗id)∘Δ = id = (id⊗ε)∘Δ`.
pub fn check_counit(h: &Hopf, side: Side, max_degree: usize) -> Result<CheckOutcome> {
    run(
        format!("counit/{}", side_name(side)),
        classes_up_to(side, max_degree)?,
        |k| {
            let delta = h.basis_coproduct(k)?;
            let mut left = GradedElement::zero();
            let mut right = GradedElement::zero();
            for ((a, b), c) in delta.terms() {
                let ea = h.counit(&basis(a));
                let eb = h.counit(&basis(b));
                left.add_term(b.clone(), c * ea)?;
                right.add_term(a.clone(), c * eb)?;
            }
            let x = basis(k);
            Ok((left != x || right != x).then(|| format!("{k}")))
        },
    )
}

/// `m∘(S⊗id)∘Δ = η∘ε = m∘(id⊗S)∘Δ`.
pub fn check_antipode(h: &Hopf, side: Side, max_degree: usize) -> Result<CheckOutcome> {
    run(
        format!("antipode/{}", side_name(side)),
        classes_up_to(side, max_degree)?,
        |k| {
            let x = basis(k);
            let expected = GradedElement::unit(side).scaled(&h.counit(&x));
            let mut left = GradedElement::zero();
            let mut right = GradedElement::zero();
            for ((a, b), c) in h.basis_coproduct(k)?.terms() {
                left = left.try_add(&h.product(&h.basis_antipode(a)?, &basis(b))?.scaled(c))?;
                right = right.try_add(&h.product(&basis(a), &h.basis_antipode(b)?)?.scaled(c))?;
            }
            Ok((left != expected || right != expected).then(|| format!("{k}")))
        },
    )
}

/// `ab = ba`.
pub fn check_commutativity(side: Side, max_degree: usize) -> Result<CheckOutcome> {
    run(
        format!("commutativity/{}", side_name(side)),
        pairs_up_to(side, max_degree)?,
        |(a, b)| {
            // Compare representatives directly so the product cache's
            // symmetry is not what is being tested.
            let ab = Object::from_key(a)?.direct_sum(&Object::from_key(b)?)?;
            let ba = Object::from_key(b)?.direct_sum(&Object::from_key(a)?)?;
            Ok((ab.key()? != ba.key()?).then(|| format!("{a} * {b}")))
        },
    )
}

/// `τ∘Δ = Δ`.
pub fn check_cocommutativity(h: &Hopf, side: Side, max_degree: usize) -> Result<CheckOutcome> {
    run(
        format!("cocommutativity/{}", side_name(side)),
        classes_up_to(side, max_degree)?,
        |k| {
            let delta = h.basis_coproduct(k)?;
            Ok((delta.swapped() != delta).then(|| format!("{k}")))
        },
    )
}

/// `ν` is a bijection from Lagrangian classes onto delta-matroid classes in
/// each degree.
pub fn check_key_bijectivity(h: &Hopf, max_degree: usize) -> Result<CheckOutcome> {
    run("key-bijectivity".into(), 0..=max_degree, |&n| {
        let lagrangian = basis_classes(Side::Lagrangian, n)?;
        let image: BTreeSet<IsoClassKey> = lagrangian
            .iter()
            .map(|k| h.nu_basis(k))
            .collect::<Result<_>>()?;
        let target: BTreeSet<IsoClassKey> =
            basis_classes(Side::DeltaMatroid, n)?.into_iter().collect();
        Ok(
            (image.len() != lagrangian.len() || image != target).then(|| {
                format!(
                    "degree {n}: {} classes map to {} of {}",
                    lagrangian.len(),
                    image.len(),
                    target.len()
                )
            }),
        )
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArbiterRow {
    pub reduction: String,
    pub restriction: String,
    pub comultiplicativity: CheckOutcome,
}

/// Comultiplicativity of `ν` under every reduction/restriction combination.
pub fn arbiter(max_degree: usize) -> Result<Vec<ArbiterRow>> {
    let mut rows = Vec::new();
    for reduction in [Reduction::Primal, Reduction::Dual] {
        for restriction in [RestrictMode::Naive, RestrictMode::MinimalExcess] {
            let h = Hopf::new(HopfConfig {
                reduction,
                restriction,
            });
            rows.push(ArbiterRow {
                reduction: format!("{reduction:?}").to_lowercase(),
                restriction: match restriction {
                    RestrictMode::Naive => "naive".into(),
                    RestrictMode::MinimalExcess => "minimal-excess".into(),
                },
                comultiplicativity: check_comultiplicativity(&h, max_degree)?,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_axioms() {
        let h = Hopf::default();
        for side in [Side::Lagrangian, Side::DeltaMatroid] {
            for o in [
                check_bialgebra(&h, side, 2).unwrap(),
                check_coassociativity(&h, side, 2).unwrap(),
                check_counit(&h, side, 2).unwrap(),
                check_antipode(&h, side, 2).unwrap(),
                check_commutativity(side, 2).unwrap(),
                check_cocommutativity(&h, side, 2).unwrap(),
            ] {
                assert!(o.passed(), "{o:?}");
                assert!(o.cases > 0);
            }
        }
        assert!(check_multiplicativity(&h, 2).unwrap().passed());
        assert!(check_comultiplicativity(&h, 2).unwrap().passed());
        assert!(check_key_bijectivity(&h, 2).unwrap().passed());
    }
}
