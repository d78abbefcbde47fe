use std::collections::BTreeMap;

use qtcat::homfly::{homfly_jones, TorusKnot};
use qtcat::superalg::{
    build_model, four_five_model, stable_homology, stable_poincare, Operator, OperatorWord, SuperElement,
    FOUR_FIVE_TABLE,
};

#[test]
fn table_rows_come_from_their_words() {
    let top = SuperElement::parse(3, "xi1*xi2*xi3").unwrap();
    let model = four_five_model().unwrap();
    assert_eq!(model.rows().len(), FOUR_FIVE_TABLE.len());
    for (row, &(level, element, word, degree)) in model.rows().iter().zip(FOUR_FIVE_TABLE) {
        let w: OperatorWord = word.parse().unwrap();
        assert_eq!(row.word.as_ref(), Some(&w));
        assert_eq!(row.level, level);
        assert_eq!(row.degree, degree);
        let expected = SuperElement::parse(3, element).unwrap();
        assert!(w.apply(&top).unwrap().ratio_to(&expected).is_some(), "{word}");
    }
}

#[test]
fn four_five_khovanov_cycles() {
    // e1*xi1*xi3 - e2*xi1*xi2 is a d2-cycle in a degree nothing maps to.
    let x = SuperElement::parse(3, "e1*xi1*xi3 - e2*xi1*xi2").unwrap();
    assert!(Operator::D(2).apply(&x).unwrap().is_zero());
    let h = build_model(TorusKnot::new(4, 5).unwrap()).unwrap().homology(Operator::D(2)).unwrap();
    assert_eq!(h.get(&(4, 12, 12)), Some(&1));
    assert_eq!(h.values().sum::<usize>(), 13);
}

#[test]
fn models_are_stable_under_all_differentials() {
    for (n, m) in [(2, 5), (3, 4), (3, 7), (4, 5)] {
        let model = build_model(TorusKnot::new(n, m).unwrap()).unwrap();
        for d in qtcat::superalg::differentials_for(n) {
            model.homology(d).unwrap_or_else(|e| panic!("T({n},{m}) {d}: {e}"));
        }
    }
}

#[test]
fn d_minus_one_homology_is_one_dimensional() {
    for (n, m) in [(2, 5), (3, 4), (3, 5), (3, 8), (4, 5)] {
        let h = build_model(TorusKnot::new(n, m).unwrap()).unwrap().homology(Operator::D(-1)).unwrap();
        assert_eq!(h.values().sum::<usize>(), 1, "T({n},{m}): {h:?}");
    }
    let h = four_five_model().unwrap().homology(Operator::D(-1)).unwrap();
    assert_eq!(h, BTreeMap::from([((0, 24, 12), 1)]));
}

#[test]
fn stable_acyclicity_small_cutoff() {
    for n in 2..=4 {
        for big_n in 1..n as i32 {
            assert!(stable_homology(n, Operator::D(-big_n), 12).unwrap().is_empty());
        }
    }
}

#[test]
fn euler_characteristic_of_the_model_is_homfly() {
    let k = TorusKnot::new(3, 7).unwrap();
    assert_eq!(build_model(k).unwrap().euler_characteristic(), homfly_jones(k).unwrap().p_s);
}

#[test]
fn stable_series_has_the_odd_pair() {
    let p = stable_poincare(3, 8);
    assert_eq!(p.coeff(&[4, 12, 8]), 1.into());
}
