#![allow(dead_code)]

use hybridk::PointSet;
use proptest::prelude::*;

pub fn coords(d: usize, span: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-span..span, d)
}

/// Point sets with `n` in `sizes` and dimension `d`.
pub fn point_set(sizes: std::ops::RangeInclusive<usize>, d: usize, span: f64) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(coords(d, span), sizes).prop_map(|rows| PointSet::from_rows(&rows).unwrap())
}

/// Points rounded to a coarse lattice, so ties and duplicates occur.
pub fn lattice_set(sizes: std::ops::RangeInclusive<usize>, d: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec(prop::collection::vec(-6i32..6, d), sizes).prop_map(move |rows| {
        let rows: Vec<Vec<f64>> = rows.into_iter().map(|r| r.into_iter().map(|x| x as f64 * 0.5).collect()).collect();
        if rows.is_empty() {
            return PointSet::new(d);
        }
        PointSet::from_rows(&rows).unwrap()
    })
}

pub fn power() -> impl Strategy<Value = hybridk::Power> {
    prop_oneof![Just(hybridk::Power::Linear), Just(hybridk::Power::Squared)]
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
