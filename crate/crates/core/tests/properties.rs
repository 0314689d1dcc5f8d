use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use taquin::jdt::{backward_slide, forward_slide, jdt_equivalent, rectify, rectify_with};
use taquin::rsk::{insertion_tableau, knuth_equivalent, knuth_neighbors, rsk, rsk_inverse};
use taquin::tableaux::{reverse_bump, row_insert};
use taquin::{random, Permutation, Tableau};

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len)
        .prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn skew_tableau(max_cells: usize) -> impl Strategy<Value = Tableau> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random::standard_tableau(&random::skew_shape(max_cells, true, &mut rng), &mut rng)
    })
}

fn skew_pair(max_cells: usize) -> impl Strategy<Value = (Tableau, Tableau)> {
    (1..=max_cells, any::<u64>()).prop_map(move |(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sized = || loop {
            let shape = random::skew_shape(max_cells, true, &mut rng);
            if shape.size() == n {
                return random::standard_tableau(&shape, &mut rng);
            }
        };
        (sized(), sized())
    })
}

proptest! {
    #[test]
    fn insert_then_reverse_bump(pi in permutation(9), x in 1u32..20) {
        let p = insertion_tableau(pi.word());
        prop_assume!(p.position_of(x).is_none());
        let (q, cell) = row_insert(&p, x).unwrap();
        prop_assert!(q.is_partial());
        prop_assert_eq!(q.get(cell), q.rows()[cell.row - 1].last().copied().flatten());
        let (back, y) = reverse_bump(&q, cell).unwrap();
        prop_assert_eq!(back, p);
        prop_assert_eq!(y, x);
    }

    #[test]
    fn rsk_roundtrip(pi in permutation(10)) {
        let (p, q) = rsk(&pi);
        prop_assert!(p.is_standard() && q.is_standard());
        prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), pi);
    }

    #[test]
    fn knuth_moves_keep_insertion_tableau(pi in permutation(8)) {
        let p = insertion_tableau(pi.word());
        for tau in knuth_neighbors(&pi) {
            prop_assert_eq!(&insertion_tableau(tau.word()), &p);
        }
    }

    #[test]
    fn slides_invert(t in skew_tableau(8), k in any::<prop::sample::Index>()) {
        let corners = t.shape().inner().inner_corners();
        let start = corners[k.index(corners.len())];
        let fwd = forward_slide(&t, start).unwrap();
        prop_assert!(fwd.tableau.is_partial());
        let back = backward_slide(&fwd.tableau, fwd.vacated).unwrap();
        prop_assert_eq!(back.vacated, start);
        prop_assert_eq!(back.tableau, t);
    }

    #[test]
    fn each_slide_keeps_knuth_class(t in skew_tableau(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let before = Permutation::new(t.reading_word()).unwrap();
        let mut cur = t;
        while !cur.shape().is_normal() {
            let corners = cur.shape().inner().inner_corners();
            cur = forward_slide(&cur, *corners.choose(&mut rng).unwrap()).unwrap().tableau;
            let after = Permutation::new(cur.reading_word()).unwrap();
            prop_assert!(knuth_equivalent(&before, &after).unwrap());
        }
    }

    #[test]
    fn rectification_is_insertion_tableau(t in skew_tableau(8), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = rectify(&t);
        prop_assert!(r.shape().is_normal() && r.is_standard());
        prop_assert_eq!(&r, &insertion_tableau(&t.reading_word()));
        let other = rectify_with(&t, |c| rng.gen_range(0..c.len())).unwrap();
        prop_assert_eq!(other, r);
    }

    #[test]
    fn jdt_and_knuth_agree((a, b) in skew_pair(5)) {
        let wa = Permutation::new(a.reading_word()).unwrap();
        let wb = Permutation::new(b.reading_word()).unwrap();
        prop_assert_eq!(jdt_equivalent(&a, &b), knuth_equivalent(&wa, &wb).unwrap());
    }
}
