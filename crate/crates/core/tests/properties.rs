mod oracle;

use lagdelta::correspondence::check_twist_equivariance;
use lagdelta::{nu, nu_inverse, BitMatrix, BitVec, GroundSet, LagrangianSubspace, Subset};
use proptest::prelude::*;

/// A random Lagrangian subspace on `n` elements: a graphic one, locally
/// dualized at a random set. Every Lagrangian subspace arises this way.
fn lagrangian(n: usize) -> impl Strategy<Value = LagrangianSubspace> {
    (
        prop::collection::vec(any::<bool>(), n * (n + 1) / 2),
        0u64..1 << n,
    )
        .prop_map(move |(bits, twist)| {
            let mut a = BitMatrix::zeros(n, n);
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    a.set(i, j, bits[k]);
                    a.set(j, i, bits[k]);
                    k += 1;
                }
            }
            LagrangianSubspace::from_symmetric_matrix(GroundSet::numbered(n), &a)
                .unwrap()
                .local_dual(Subset(twist))
                .unwrap()
        })
}

fn sized() -> impl Strategy<Value = LagrangianSubspace> {
    prop_oneof![lagrangian(4), lagrangian(5)]
}

proptest! {
    #[test]
    fn nu_matches_brute_force(l in sized()) {
        let n = l.ground().len();
        let expected = oracle::nu(n, &oracle::elements(&l));
        let got: Vec<u32> = nu(&l).feasible().iter().map(|s| s.bits() as u32).collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn nu_inverse_round_trips(l in sized()) {
        prop_assert_eq!(nu_inverse(&nu(&l)).unwrap(), l);
    }

    #[test]
    fn image_satisfies_exchange_and_is_binary(l in sized()) {
        let s = nu(&l);
        prop_assert!(s.check_sea().unwrap());
        prop_assert!(s.is_binary().unwrap());
    }

    #[test]
    fn twisting_commutes_with_nu(l in sized(), e in 0usize..4) {
        prop_assert!(check_twist_equivariance(&l, e).unwrap());
    }

    #[test]
    fn graphify_gives_graphic(l in sized()) {
        prop_assert!(l.local_dual(l.graphify()).unwrap().is_graphic());
    }

    #[test]
    fn isotropic_and_half_dimensional(l in sized()) {
        let n = l.ground().len();
        let elems = oracle::elements(&l);
        prop_assert_eq!(elems.len(), 1 << n);
        for &u in &elems {
            for &v in &elems {
                prop_assert!(!oracle::form(n, u, v));
            }
        }
    }

    #[test]
    fn canonical_key_is_relabeling_invariant(l in lagrangian(4), perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        let (a, _) = l.canonical_form().unwrap();
        let (b, _) = l.permuted(&perm).canonical_form().unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn text_round_trip(l in sized()) {
        let text = l.to_text();
        prop_assert_eq!(LagrangianSubspace::parse_text(&text).unwrap(), l);
    }
}

#[test]
fn bitvec_masks_round_trip() {
    for mask in 0..64u64 {
        assert_eq!(BitVec::from_mask(6, mask).to_mask(), mask);
    }
}

fn all_lagrangians(max_n: usize) -> impl Iterator<Item = LagrangianSubspace> {
    (0..=max_n)
        .flat_map(|n| lagdelta::symplectic::enumerate_lagrangians(&GroundSet::numbered(n)).unwrap())
}

#[test]
fn first_move_toggles_an_edge_of_the_graph() {
    for n in 2..=3 {
        for a in lagdelta::deltamatroid::symmetric_matrices(n) {
            let l = LagrangianSubspace::from_symmetric_matrix(GroundSet::numbered(n), &a).unwrap();
            for e in 0..n {
                for f in (0..n).filter(|&f| f != e) {
                    let mut b = a.clone();
                    b.flip(e, f);
                    b.flip(f, e);
                    let moved = l
                        .apply_move(&lagdelta::VassilievMove::first(e, f).unwrap())
                        .unwrap();
                    let expected =
                        LagrangianSubspace::from_symmetric_matrix(GroundSet::numbered(n), &b)
                            .unwrap();
                    assert_eq!(moved, expected, "{a:?} at ({e},{f})");
                }
            }
        }
    }
}

/// Holds when the dualized set lies inside the kept set.
#[test]
fn reduction_commutes_with_local_duality_inside_the_kept_set() {
    for l in all_lagrangians(3) {
        let n = l.ground().len();
        for keep in Subset::all(n) {
            for s in Subset::all(n).filter(|s| s.is_subset_of(keep)) {
                let lhs = l
                    .local_dual(s)
                    .unwrap()
                    .reduce(keep, lagdelta::Reduction::Primal)
                    .unwrap();
                let rhs = l
                    .reduce(keep, lagdelta::Reduction::Primal)
                    .unwrap()
                    .local_dual(s.compress(keep))
                    .unwrap();
                assert_eq!(lhs, rhs, "{l:?} keep {keep:?} dual {s:?}");
            }
        }
    }
}

/// Dualizing a discarded element changes which coordinate the reduction
/// kills, so the compatibility fails outside the kept set.
#[test]
fn reduction_does_not_commute_with_duality_at_discarded_elements() {
    let l = LagrangianSubspace::from_tokens(GroundSet::numbered(2), &["1+2^", "1^+2"]).unwrap();
    let keep = Subset::singleton(0);
    let lhs = l
        .local_dual(Subset::singleton(1))
        .unwrap()
        .reduce(keep, lagdelta::Reduction::Primal)
        .unwrap();
    let rhs = l.reduce(keep, lagdelta::Reduction::Primal).unwrap();
    assert_eq!(lhs.to_text(), "1\n");
    assert_eq!(rhs.to_text(), "1^\n");
}

/// `Y ⊆ I` is feasible for `ν(reduce(L, I))` iff every element of `L`
/// supported on `Y^ ⊔ (E∖Y)` lies in `⟨E∖I⟩`.
#[test]
fn feasibility_of_reduction() {
    for l in all_lagrangians(3) {
        let n = l.ground().len();
        let elems = oracle::elements(&l);
        for keep in Subset::all(n) {
            let reduced = nu(&l.reduce(keep, lagdelta::Reduction::Primal).unwrap());
            let outside = oracle::low(n) & !(keep.bits() as u32);
            for y in Subset::all(n).filter(|y| y.is_subset_of(keep)) {
                let y = y.bits() as u32;
                let test = (y << n) | (oracle::low(n) & !y);
                let expected = elems.iter().all(|&v| v & !test != 0 || v & !outside == 0);
                let got = reduced.is_feasible(Subset(y as u64).compress(keep));
                assert_eq!(got, expected, "{l:?} keep {keep:?} Y {y:b}");
            }
        }
    }
}
