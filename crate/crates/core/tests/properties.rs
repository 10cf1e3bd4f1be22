use proptest::prelude::*;
use rabu_core::fixtures::{d3, square};
use rabu_core::{CoxeterDiagram, Word};

fn words(rank: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..rank, 0..=max).prop_map(Word)
}

fn both() -> [CoxeterDiagram; 2] {
    [d3(), square()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduce_is_idempotent_and_reduced(w in words(3, 14), v in words(4, 14)) {
        for (d, w) in both().iter().zip([w, v]) {
            let r = d.reduce(&w).unwrap();
            prop_assert!(d.is_reduced(&r).unwrap());
            prop_assert_eq!(d.reduce(&r).unwrap(), r.clone());
            prop_assert!(r.len() <= w.len());
            prop_assert_eq!(r.len() % 2, w.len() % 2);
        }
    }

    #[test]
    fn inverse_cancels(w in words(4, 12)) {
        let d = square();
        let mut ww = w.0.clone();
        ww.extend(w.0.iter().rev());
        prop_assert!(d.reduce(&Word(ww)).unwrap().is_empty());
    }

    #[test]
    fn reps_are_equal_reduced_words(w in words(4, 9)) {
        let d = square();
        let r = d.reduce(&w).unwrap();
        let reps = d.rep_set(&r).unwrap();
        prop_assert_eq!(&reps[0].word, &r);
        for rep in &reps {
            prop_assert!(d.is_reduced(&rep.word).unwrap());
            prop_assert!(d.equal(&rep.word, &r).unwrap());
            for (i, &p) in rep.positions.iter().enumerate() {
                prop_assert_eq!(rep.word.0[p], r.0[i]);
            }
        }
    }

    #[test]
    fn poset_is_strict_and_agrees_with_reps(w in words(4, 8)) {
        let d = square();
        let r = d.reduce(&w).unwrap();
        let p = d.position_poset(&r).unwrap();
        prop_assert!(p.is_strict_order());
        prop_assert_eq!(p, d.position_poset_by_reps(&r).unwrap());
    }
}
