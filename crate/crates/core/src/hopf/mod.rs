//! The graded Hopf algebras spanned by isomorphism classes of Lagrangian
//! subspaces and of binary delta-matroids, and the map `ν` between them.
//!
//! Coefficients are exact rationals. Basis elements are [`IsoClassKey`]s:
//! canonical encodings that decode back to a representative over
//! `{1, …, n}`. Structure constants on basis elements are memoised per
//! [`Hopf`] instance.

mod checks;
mod fourterm;
mod linalg;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::correspondence::nu;
use crate::deltamatroid::{binary_delta_matroids, RestrictMode, SetSystem};
use crate::error::{Error, Result};
use crate::ground::{GroundSet, Subset};
use crate::symplectic::{enumerate_lagrangians, LagrangianSubspace, Reduction};

pub use checks::{
    arbiter, check_antipode, check_bialgebra, check_coassociativity, check_cocommutativity,
    check_commutativity, check_comultiplicativity, check_counit, check_key_bijectivity,
    check_multiplicativity, ArbiterRow, CheckOutcome,
};
pub use fourterm::{
    check_relation_transport, four_term_element, four_term_element_dm, quotient_dimension,
    relation_span, transported_move, SignConvention, MAX_QUOTIENT_DEGREE,
};
pub use linalg::rational_rank;

/// Largest degree for which basis classes are enumerated.
pub const MAX_BASIS_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lagrangian,
    DeltaMatroid,
}

impl Side {
    fn tag(self) -> char {
        match self {
            Side::Lagrangian => 'L',
            Side::DeltaMatroid => 'D',
        }
    }
}

/// Canonical key of an isomorphism class: equal keys exactly when the
/// objects are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoClassKey {
    pub side: Side,
    pub degree: usize,
    pub bytes: Vec<u8>,
}

impl fmt::Display for IsoClassKey {
    /// `L2:3c96` style: side, degree, key bytes in hex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:", self.side.tag(), self.degree)?;
        if self.bytes.is_empty() {
            return f.write_str("-");
        }
        for b in &self.bytes {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// A representative of a basis class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Lagrangian(LagrangianSubspace),
    SetSystem(SetSystem),
}

impl Object {
    pub fn side(&self) -> Side {
        match self {
            Object::Lagrangian(_) => Side::Lagrangian,
            Object::SetSystem(_) => Side::DeltaMatroid,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Object::Lagrangian(l) => l.size(),
            Object::SetSystem(s) => s.size(),
        }
    }

    pub fn key(&self) -> Result<IsoClassKey> {
        let bytes = match self {
            Object::Lagrangian(l) => l.canonical_form()?.0,
            Object::SetSystem(s) => s.canonical_form()?.0,
        };
        Ok(IsoClassKey {
            side: self.side(),
            degree: self.degree(),
            bytes,
        })
    }

    /// Representative over `{1, …, n}`.
    pub fn from_key(key: &IsoClassKey) -> Result<Object> {
        Ok(match key.side {
            Side::Lagrangian => Object::Lagrangian(LagrangianSubspace::from_canonical_key(
                key.degree, &key.bytes,
            )?),
            Side::DeltaMatroid => {
                Object::SetSystem(SetSystem::from_canonical_key(key.degree, &key.bytes)?)
            }
        })
    }

    /// Direct sum after relabelling the two grounds as `1..n` and `n+1..n+m`.
    pub fn direct_sum(&self, other: &Object) -> Result<Object> {
        let (n, m) = (self.degree(), other.degree());
        let left = GroundSet::numbered(n);
        let right = GroundSet::numbered_from(n + 1, m);
        match (self, other) {
            (Object::Lagrangian(a), Object::Lagrangian(b)) => Ok(Object::Lagrangian(
                a.with_ground(left)?.direct_sum(&b.with_ground(right)?)?,
            )),
            (Object::SetSystem(a), Object::SetSystem(b)) => Ok(Object::SetSystem(
                a.with_ground(left)?.direct_sum(&b.with_ground(right)?)?,
            )),
            _ => Err(Error::MixedSides),
        }
    }

    /// The two tensor factors contributed by the split `E = I ⊔ (E∖I)`.
    pub fn split(&self, i: Subset, config: HopfConfig) -> Result<(Object, Object)> {
        match self {
            Object::Lagrangian(l) => {
                let rest = l.ground().full().difference(i);
                Ok((
                    Object::Lagrangian(l.reduce(i, config.reduction)?),
                    Object::Lagrangian(l.reduce(rest, config.reduction)?),
                ))
            }
            Object::SetSystem(s) => {
                let rest = s.ground().full().difference(i);
                Ok((
                    Object::SetSystem(s.restrict(i, config.restriction)?),
                    Object::SetSystem(s.restrict(rest, config.restriction)?),
                ))
            }
        }
    }

    pub fn unit(side: Side) -> Object {
        match side {
            Side::Lagrangian => Object::Lagrangian(LagrangianSubspace::zero()),
            Side::DeltaMatroid => Object::SetSystem(
                SetSystem::new(GroundSet::empty(), [Subset::EMPTY]).expect("empty ground"),
            ),
        }
    }
}

/// All basis classes of one degree, sorted.
pub fn basis_classes(side: Side, degree: usize) -> Result<Vec<IsoClassKey>> {
    if degree > MAX_BASIS_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree,
            limit: MAX_BASIS_DEGREE,
        });
    }
    let objects: Vec<Object> = match side {
        Side::Lagrangian => enumerate_lagrangians(&GroundSet::numbered(degree))?
            .into_iter()
            .map(Object::Lagrangian)
            .collect(),
        Side::DeltaMatroid => binary_delta_matroids(degree)
            .into_iter()
            .map(Object::SetSystem)
            .collect(),
    };
    let mut keys = objects
        .iter()
        .map(Object::key)
        .collect::<Result<Vec<_>>>()?;
    keys.sort();
    keys.dedup();
    Ok(keys)
}

fn add_coefficient<K: Ord>(terms: &mut BTreeMap<K, BigRational>, key: K, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(key);
    match slot {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite rational combination of basis classes from one side.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedElement {
    terms: BTreeMap<IsoClassKey, BigRational>,
}

impl GradedElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: IsoClassKey) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, BigRational::one());
        GradedElement { terms }
    }

    pub fn from_object(object: &Object) -> Result<Self> {
        Ok(Self::basis(object.key()?))
    }

    pub fn unit(side: Side) -> Self {
        Self::from_object(&Object::unit(side)).expect("unit has a key")
    }

    pub fn terms(&self) -> &BTreeMap<IsoClassKey, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, key: &IsoClassKey) -> BigRational {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The side shared by all terms, `None` for zero.
    pub fn side(&self) -> Option<Side> {
        self.terms.keys().next().map(|k| k.side)
    }

    pub fn add_term(&mut self, key: IsoClassKey, c: BigRational) -> Result<()> {
        if self.side().is_some_and(|s| s != key.side) {
            return Err(Error::MixedSides);
        }
        add_coefficient(&mut self.terms, key, c);
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scaled(&-BigRational::one()))
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedElement {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Part of degree `n`.
    pub fn homogeneous(&self, n: usize) -> Self {
        GradedElement {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree == n)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for GradedElement {
    /// One `coefficient key` line per term; `0` for the zero element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0");
        }
        for (k, c) in &self.terms {
            writeln!(f, "{c} {k}")?;
        }
        Ok(())
    }
}

/// A finite rational combination of pairs of basis classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(IsoClassKey, IsoClassKey), BigRational>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<(IsoClassKey, IsoClassKey), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(
        &mut self,
        left: IsoClassKey,
        right: IsoClassKey,
        c: BigRational,
    ) -> Result<()> {
        if left.side != right.side
            || self
                .terms
                .keys()
                .next()
                .is_some_and(|(l, _)| l.side != left.side)
        {
            return Err(Error::MixedSides);
        }
        add_coefficient(&mut self.terms, (left, right), c);
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(k.clone(), v * c);
            }
        }
        out
    }

    /// `a ⊗ b ↦ b ⊗ a`.
    pub fn swapped(&self) -> Self {
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|((l, r), c)| ((r.clone(), l.clone()), c.clone()))
                .collect(),
        }
    }

    pub fn simple(a: &GradedElement, b: &GradedElement) -> Result<Self> {
        let mut out = Self::zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                out.add_term(ka.clone(), kb.clone(), ca * cb)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return writeln!(f, "0");
        }
        for ((l, r), c) in &self.terms {
            writeln!(f, "{c} {l} (x) {r}")?;
        }
        Ok(())
    }
}

/// Which reduction and restriction the coproducts use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct HopfConfig {
    pub reduction: Reduction,
    pub restriction: RestrictMode,
}

/// Structure maps of both algebras, memoised on basis classes.
#[derive(Debug, Default)]
pub struct Hopf {
    config: HopfConfig,
    products: RefCell<HashMap<(IsoClassKey, IsoClassKey), IsoClassKey>>,
    coproducts: RefCell<HashMap<IsoClassKey, TensorElement>>,
    antipodes: RefCell<HashMap<IsoClassKey, GradedElement>>,
    nu_images: RefCell<HashMap<IsoClassKey, IsoClassKey>>,
}

impl Hopf {
    pub fn new(config: HopfConfig) -> Self {
        Hopf {
            config,
            ..Self::default()
        }
    }

    pub fn config(&self) -> HopfConfig {
        self.config
    }

    /// Class of the direct sum of two representatives.
    pub fn basis_product(&self, a: &IsoClassKey, b: &IsoClassKey) -> Result<IsoClassKey> {
        if a.side != b.side {
            return Err(Error::MixedSides);
        }
        // Products are commutative on classes, so one cache entry serves both orders.
        let pair = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if let Some(k) = self.products.borrow().get(&pair) {
            return Ok(k.clone());
        }
        let sum = Object::from_key(a)?.direct_sum(&Object::from_key(b)?)?;
        let key = sum.key()?;
        self.products.borrow_mut().insert(pair, key.clone());
        Ok(key)
    }

    pub fn product(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
        if let (Some(x), Some(y)) = (a.side(), b.side()) {
            if x != y {
                return Err(Error::MixedSides);
            }
        }
        let mut out = GradedElement::zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                out.add_term(self.basis_product(ka, kb)?, ca * cb)?;
            }
        }
        Ok(out)
    }

    /// `Δ` of a basis class: one term per subset `I` of the ground set.
    pub fn basis_coproduct(&self, k: &IsoClassKey) -> Result<TensorElement> {
        if let Some(t) = self.coproducts.borrow().get(k) {
            return Ok(t.clone());
        }
        let x = Object::from_key(k)?;
        let mut out = TensorElement::zero();
        for i in Subset::all(k.degree) {
            let (l, r) = x.split(i, self.config)?;
            out.add_term(l.key()?, r.key()?, BigRational::one())?;
        }
        self.coproducts.borrow_mut().insert(k.clone(), out.clone());
        Ok(out)
    }

    pub fn coproduct(&self, a: &GradedElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (k, c) in &a.terms {
            out = out.try_add(&self.basis_coproduct(k)?.scaled(c))?;
        }
        Ok(out)
    }

    /// Coefficient of the degree-0 class.
    pub fn counit(&self, a: &GradedElement) -> BigRational {
        a.terms
            .iter()
            .filter(|(k, _)| k.degree == 0)
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// `S(x) = −x − Σ S(x′)·x″` over the terms of `Δx` with both factors of
    /// positive degree; `S(1) = 1`.
    pub fn basis_antipode(&self, k: &IsoClassKey) -> Result<GradedElement> {
        if let Some(s) = self.antipodes.borrow().get(k) {
            return Ok(s.clone());
        }
        let x = GradedElement::basis(k.clone());
        let out = if k.degree == 0 {
            x
        } else {
            let mut acc = x.scaled(&-BigRational::one());
            for ((l, r), c) in self.basis_coproduct(k)?.terms() {
                if l.degree == 0 || r.degree == 0 {
                    continue;
                }
                let term =
                    self.product(&self.basis_antipode(l)?, &GradedElement::basis(r.clone()))?;
                acc = acc.try_sub(&term.scaled(c))?;
            }
            acc
        };
        self.antipodes.borrow_mut().insert(k.clone(), out.clone());
        Ok(out)
    }

    pub fn antipode(&self, a: &GradedElement) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for (k, c) in &a.terms {
            out = out.try_add(&self.basis_antipode(k)?.scaled(c))?;
        }
        Ok(out)
    }

    /// `m : A ⊗ A → A`.
    pub fn multiply(&self, t: &TensorElement) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for ((l, r), c) in t.terms() {
            out.add_term(self.basis_product(l, r)?, c.clone())?;
        }
        Ok(out)
    }

    /// Product in `A ⊗ A`: `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn tensor_product(&self, s: &TensorElement, t: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for ((a, b), c1) in s.terms() {
            for ((c, d), c2) in t.terms() {
                out.add_term(
                    self.basis_product(a, c)?,
                    self.basis_product(b, d)?,
                    c1 * c2,
                )?;
            }
        }
        Ok(out)
    }

    /// `ν` on a basis class of the Lagrangian side.
    pub fn nu_basis(&self, k: &IsoClassKey) -> Result<IsoClassKey> {
        if k.side != Side::Lagrangian {
            return Err(Error::MixedSides);
        }
        if let Some(img) = self.nu_images.borrow().get(k) {
            return Ok(img.clone());
        }
        let Object::Lagrangian(l) = Object::from_key(k)? else {
            unreachable!("Lagrangian key decodes to a Lagrangian subspace");
        };
        let img = Object::SetSystem(nu(&l)).key()?;
        self.nu_images.borrow_mut().insert(k.clone(), img.clone());
        Ok(img)
    }

    /// Linear extension of `ν` from the Lagrangian side.
    pub fn nu_hom(&self, a: &GradedElement) -> Result<GradedElement> {
        let mut out = GradedElement::zero();
        for (k, c) in &a.terms {
            out.add_term(self.nu_basis(k)?, c.clone())?;
        }
        Ok(out)
    }

    /// `ν ⊗ ν`.
    pub fn nu_hom_tensor(&self, t: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for ((l, r), c) in t.terms() {
            out.add_term(self.nu_basis(l)?, self.nu_basis(r)?, c.clone())?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dm(n: usize, sets: &[&[&str]]) -> Object {
        Object::SetSystem(SetSystem::from_labels(GroundSet::numbered(n), sets).unwrap())
    }

    fn class(o: &Object) -> GradedElement {
        GradedElement::from_object(o).unwrap()
    }

    #[test]
    fn unit_laws() {
        let h = Hopf::default();
        for side in [Side::Lagrangian, Side::DeltaMatroid] {
            let one = GradedElement::unit(side);
            assert_eq!(h.counit(&one), BigRational::one());
            assert_eq!(h.antipode(&one).unwrap(), one);
            let delta = h.coproduct(&one).unwrap();
            assert_eq!(delta, TensorElement::simple(&one, &one).unwrap());
            for k in basis_classes(side, 2).unwrap() {
                let x = GradedElement::basis(k);
                assert_eq!(h.product(&one, &x).unwrap(), x);
                assert!(h.counit(&x).is_zero());
            }
        }
    }

    #[test]
    fn product_example() {
        let h = Hopf::default();
        let a = dm(1, &[&[]]);
        let b = dm(1, &[&[], &["1"]]);
        let expected = dm(2, &[&[], &["2"]]);
        assert_eq!(h.product(&class(&a), &class(&b)).unwrap(), class(&expected));
        let relabeled = Object::SetSystem(
            SetSystem::from_labels(GroundSet::new(["x"]).unwrap(), &[&[], &["x"]]).unwrap(),
        );
        assert_eq!(class(&relabeled), class(&b));
    }

    #[test]
    fn mixed_sides_are_rejected() {
        let h = Hopf::default();
        let l = GradedElement::unit(Side::Lagrangian);
        let d = GradedElement::unit(Side::DeltaMatroid);
        assert_eq!(h.product(&l, &d), Err(Error::MixedSides));
        assert_eq!(l.try_add(&d), Err(Error::MixedSides));
        assert_eq!(h.nu_hom(&d), Err(Error::MixedSides));
    }

    #[test]
    fn degree_one_elements_are_primitive() {
        let h = Hopf::default();
        for side in [Side::Lagrangian, Side::DeltaMatroid] {
            let one = GradedElement::unit(side);
            for k in basis_classes(side, 1).unwrap() {
                let x = GradedElement::basis(k);
                let expected = TensorElement::simple(&x, &one)
                    .unwrap()
                    .try_add(&TensorElement::simple(&one, &x).unwrap())
                    .unwrap();
                assert_eq!(h.coproduct(&x).unwrap(), expected);
                assert_eq!(h.antipode(&x).unwrap(), x.scaled(&integer(-1)));
            }
        }
    }

    #[test]
    fn class_counts() {
        for n in 0..=3 {
            let l = basis_classes(Side::Lagrangian, n).unwrap().len();
            let d = basis_classes(Side::DeltaMatroid, n).unwrap().len();
            assert_eq!(l, d, "degree {n}");
        }
        assert_eq!(basis_classes(Side::Lagrangian, 1).unwrap().len(), 3);
    }

    #[test]
    fn key_roundtrip() {
        for side in [Side::Lagrangian, Side::DeltaMatroid] {
            for k in basis_classes(side, 2).unwrap() {
                assert_eq!(Object::from_key(&k).unwrap().key().unwrap(), k);
            }
        }
    }
}
