use std::collections::BTreeSet;

use partcat::classify::CertificateKind;
use partcat::engine::{ClosureDocument, DEFAULT_BOUND};
use partcat::named::pi;
use partcat::{CategoryClosure, ClosureOptions, MembershipAnswer, Mode, Named, Partition, Word};

fn named(n: Named) -> Partition {
    n.partition().unwrap()
}

fn build(gens: &[Partition], bound: usize) -> CategoryClosure {
    CategoryClosure::build(gens, ClosureOptions::new(bound)).unwrap()
}

fn member_set(c: &CategoryClosure) -> BTreeSet<Partition> {
    c.representatives().into_iter().collect()
}

#[test]
fn identical_across_worker_counts() {
    let gens = [named(Named::HalfLiberator)];
    let one = CategoryClosure::build(&gens, ClosureOptions::new(10).workers(Some(1))).unwrap();
    let four = CategoryClosure::build(&gens, ClosureOptions::new(10).workers(Some(4))).unwrap();
    assert_eq!(one.representatives(), four.representatives());
    assert_eq!(one.stats(), four.stats());
}

#[test]
fn monotone_in_bound_and_generators() {
    let gens = [named(Named::FourBlock)];
    let small = member_set(&build(&gens, 8));
    let large = member_set(&build(&gens, 10));
    assert!(small.is_subset(&large));
    assert!(large.iter().any(|p| p.size() == 10));
    let more = member_set(&build(&[named(Named::FourBlock), named(Named::DoubleSingleton)], 8));
    assert!(small.is_subset(&more));
    assert!(more.len() > small.len());
}

#[test]
fn derivations_replay_and_closure_is_closed() {
    for gens in [vec![pi(2).unwrap()], vec![named(Named::Crossing)], vec![named(Named::Singleton)]] {
        let c = build(&gens, 8);
        c.verify_derivations().unwrap();
        c.verify_closed().unwrap();
        for p in c.representatives() {
            match c.member(&p) {
                MembershipAnswer::InClosure { derivation } => {
                    derivation.replay(&gens).unwrap();
                }
                other => panic!("{p}: {}", other.label()),
            }
        }
    }
}

#[test]
fn unit_members_are_present() {
    let c = build(&[], DEFAULT_BOUND);
    assert!(c.contains(&named(Named::Identity)));
    assert!(c.contains(&named(Named::Pair)));
    assert!(c.contains(&Partition::empty()));
}

#[test]
fn document_round_trip() {
    let c = build(&[named(Named::FatCrossing)], 8);
    let doc = ClosureDocument::new(&c, true);
    let text = doc.to_json();
    let back = ClosureDocument::from_json(&text).unwrap();
    assert_eq!(back, doc);
    assert_eq!(back.to_json(), text);
    let rebuilt = back.rebuild().unwrap();
    assert_eq!(member_set(&rebuilt), member_set(&c));
}

#[test]
fn certificate_for_even_blocks() {
    let c = build(&[pi(2).unwrap()], 10);
    match c.member(&named(Named::DoubleSingleton)) {
        MembershipAnswer::ExcludedByCertificate { certificate } => {
            assert_eq!(certificate.kind, CertificateKind::EvenBlocks)
        }
        other => panic!("{}", other.label()),
    }
}

#[test]
fn pi_closures_have_even_length_and_no_singletons() {
    for (k, bound) in [(1, 12), (2, 12), (3, 12)] {
        let c = build(&[pi(k).unwrap()], bound);
        for p in c.representatives() {
            assert_eq!(p.size() % 2, 0, "{p}");
            assert!(p.block_sizes().iter().all(|&s| s >= 2), "{p}");
        }
    }
}

fn inflate_runs(w: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let mut v = w[..i].to_vec();
        v.push(w[i]);
        v.push(w[i]);
        v.extend_from_slice(&w[i..]);
        out.push(v);
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        i = j;
    }
    out
}

/// Inside a category containing the four-block, a word and its
/// single-double form generate each other.
#[test]
fn single_double_reduction_with_four_block() {
    let bound = 10;
    for extra in [pi(2).unwrap(), named(Named::HalfLiberator), named(Named::DoubleSingleton)] {
        let c = build(&[named(Named::FourBlock), extra], bound);
        for p in c.one_row_members() {
            let w = Word::from_partition(&p).unwrap();
            let sd = w.single_double_form();
            if p.size() + 2 <= bound {
                assert!(c.contains(&sd.to_partition()), "{p}");
            }
            if sd.letters() == w.letters() {
                for v in inflate_runs(w.letters()) {
                    if v.len() <= bound {
                        assert!(c.contains(&Partition::one_row(&v)), "{p} inflated to {v:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn fat_crossing_from_generators_with_four_block() {
    let target = named(Named::FatCrossing);
    for g in [named(Named::H(3)), named(Named::PairPositioner), pi(3).unwrap()] {
        let c = CategoryClosure::build_until(
            &[g.clone(), named(Named::FourBlock)],
            ClosureOptions::new(12),
            Some(&target),
        )
        .unwrap();
        assert!(c.member(&target).is_member(), "{g}");
    }
}

#[test]
fn erasure_only_mode_reduces_pi3() {
    let c = CategoryClosure::build(&[pi(3).unwrap()], ClosureOptions::new(12).mode(Mode::ErasureOnly)).unwrap();
    assert!(c.contains(&pi(2).unwrap()));
    assert!(c.contains(&pi(1).unwrap()));
    c.verify_derivations().unwrap();
    // no tensor products: nothing larger than the generator appears
    assert!(c.representatives().iter().all(|p| p.size() <= 12));
    let full = build(&[pi(3).unwrap()], 12);
    assert!(member_set(&c).is_subset(&member_set(&full)));
}

#[test]
fn bound_too_small_is_an_error() {
    assert!(CategoryClosure::build(&[pi(3).unwrap()], ClosureOptions::new(8)).is_err());
}
