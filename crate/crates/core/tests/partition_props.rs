use partcat::partition::{compose, identity_power};
use partcat::{Corner, Partition};
use proptest::prelude::*;

fn labels(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..n.max(1), n)
}

fn partition(max_upper: usize, max_lower: usize) -> impl Strategy<Value = Partition> {
    (0..=max_upper, 0..=max_lower).prop_flat_map(|(k, l)| {
        labels(k + l).prop_map(move |v| Partition::from_labels(k, v).unwrap())
    })
}

fn with_arity(k: usize, l: usize) -> impl Strategy<Value = Partition> {
    labels(k + l).prop_map(move |v| Partition::from_labels(k, v).unwrap())
}

/// Three composable partitions `p ∈ P(a,b)`, `q ∈ P(b,c)`, `r ∈ P(c,d)`.
fn chain() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (0..=3usize, 0..=3usize, 0..=3usize, 0..=3usize)
        .prop_flat_map(|(a, b, c, d)| (with_arity(a, b), with_arity(b, c), with_arity(c, d)))
}

/// Crossing test by brute force over all quadruples of boundary points.
fn crosses(word: &[u32]) -> bool {
    let n = word.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if word[a] == word[c] && word[b] == word[d] && word[a] != word[b] {
                        return true;
                    }
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn literal_round_trip(p in partition(5, 5)) {
        let text = p.literal();
        prop_assert_eq!(Partition::parse(&text).unwrap(), p.clone());
        prop_assert_eq!(text.parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn composition_is_associative((p, q, r) in chain()) {
        let (qp, l1) = q.compose(&p).unwrap();
        let (left, l2) = r.compose(&qp).unwrap();
        let (rq, l3) = r.compose(&q).unwrap();
        let (right, l4) = rq.compose(&p).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(l1 + l2, l3 + l4);
    }

    #[test]
    fn involution_reverses_composition((p, q, _r) in chain()) {
        let (qp, loops) = compose(&q, &p).unwrap();
        let (back, loops2) = p.involute().compose(&q.involute()).unwrap();
        prop_assert_eq!(qp.involute(), back);
        prop_assert_eq!(loops, loops2);
        prop_assert_eq!(p.involute().involute(), p);
    }

    #[test]
    fn identity_is_neutral(p in partition(4, 4)) {
        let (a, la) = identity_power(p.lower_arity()).compose(&p).unwrap();
        let (b, lb) = p.compose(&identity_power(p.upper_arity())).unwrap();
        prop_assert_eq!(&a, &p);
        prop_assert_eq!(&b, &p);
        prop_assert_eq!(la + lb, 0);
    }

    #[test]
    fn tensor_is_associative(p in partition(3, 3), q in partition(3, 3), r in partition(3, 3)) {
        prop_assert_eq!(p.tensor(&q).tensor(&r), p.tensor(&q.tensor(&r)));
        prop_assert_eq!(p.tensor(&Partition::empty()), p.clone());
        prop_assert_eq!(p.tensor(&q).size(), p.size() + q.size());
    }

    #[test]
    fn rotations_undo(p in partition(4, 4)) {
        for c in Corner::ALL {
            if let Ok(r) = p.rotate(c) {
                prop_assert_eq!(r.size(), p.size());
                prop_assert_eq!(r.rotate(c.inverse()).unwrap(), p.clone());
            }
        }
    }

    #[test]
    fn one_row_form_is_rotation_invariant(p in partition(4, 4)) {
        let w = p.to_one_row();
        prop_assert_eq!(Partition::from_one_row(&w, p.upper_arity()).unwrap(), p.clone());
        // lifting all points through the top-left corner keeps the boundary word
        if p.lower_arity() > 0 {
            let r = p.rotate(Corner::BottomLeft).unwrap();
            prop_assert_eq!(r.to_one_row(), w);
        }
    }

    #[test]
    fn reflection_is_consistent(p in partition(4, 4)) {
        let r = p.vertical_reflect();
        prop_assert_eq!(r.vertical_reflect(), p.clone());
        prop_assert_eq!(r.upper_arity(), p.upper_arity());
        prop_assert_eq!(r.involute(), p.involute().vertical_reflect());
        let mut sizes = r.block_sizes();
        let mut orig = p.block_sizes();
        sizes.sort();
        orig.sort();
        prop_assert_eq!(sizes, orig);
    }

    #[test]
    fn noncrossing_matches_brute_force(p in partition(4, 4)) {
        let w = p.to_one_row();
        prop_assert_eq!(p.is_noncrossing(), !crosses(w.labels()));
    }
}

/// Exhaustive noncrossing check over every one-row partition of up to 8 points.
#[test]
fn noncrossing_exhaustive_up_to_eight() {
    fn restricted_growth(n: usize, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, max: u32) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..=max {
            cur.push(x);
            restricted_growth(n, out, cur, max.max(x + 1));
            cur.pop();
        }
    }
    // Catalan numbers count noncrossing set partitions
    let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430];
    for n in 0..=8 {
        let mut all = Vec::new();
        restricted_growth(n, &mut all, &mut Vec::new(), 0);
        let mut count = 0;
        for w in &all {
            let p = Partition::one_row(w);
            let nc = p.is_noncrossing();
            assert_eq!(nc, !crosses(w), "{p}");
            count += nc as usize;
        }
        assert_eq!(count, catalan[n], "n = {n}");
    }
}
