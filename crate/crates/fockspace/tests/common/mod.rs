//! Helpers shared by the integration suites: an alternating-sum character
//! oracle independent of the Freudenthal engine.

use std::collections::HashMap;

use fockspace::characters::MonomialMap;
use fockspace::rootdata::{RootSystem, Weight};

/// Enumerates the Weyl group as (word, determinant) pairs, keyed by the
/// faithful action on rho.
pub fn weyl_elements(rs: &RootSystem) -> Vec<(Vec<usize>, i64)> {
    let mut seen: HashMap<Weight, (Vec<usize>, i64)> = HashMap::new();
    let mut queue = vec![(rs.rho().clone(), Vec::new(), 1i64)];
    while let Some((image, word, det)) = queue.pop() {
        if seen.contains_key(&image) {
            continue;
        }
        seen.insert(image.clone(), (word.clone(), det));
        for i in 1..=rs.rank() {
            let next = rs.simple_reflect(i, &image);
            if !seen.contains_key(&next) {
                let mut next_word = word.clone();
                next_word.push(i);
                queue.push((next, next_word, -det));
            }
        }
    }
    seen.into_values().collect()
}

/// The alternating sum over the Weyl group of `X^{w o lambda}`.
pub fn alternating_sum(
    rs: &RootSystem,
    elements: &[(Vec<usize>, i64)],
    lambda: &Weight,
) -> MonomialMap {
    let mut out = MonomialMap::new();
    for (word, det) in elements {
        out.add(rs.weyl_dot(word, lambda), *det);
    }
    out
}

/// Exact division in the group algebra by peeling the maximal term; the
/// divisor's maximal term must be `X^0` with coefficient 1 (true for the
/// alternating sum at lambda = 0).
pub fn divide(rs: &RootSystem, num: &MonomialMap, den: &MonomialMap) -> MonomialMap {
    let mut rem = num.clone();
    let mut out = MonomialMap::new();
    while !rem.is_empty() {
        let (wt, c) = rem
            .iter()
            .max_by_key(|(x, _)| (rs.two_rho_vee(x), (*x).clone()))
            .map(|(x, v)| (x.clone(), *v))
            .unwrap();
        out.add(wt.clone(), c);
        for (dwt, dv) in den.iter() {
            rem.add(wt.add(dwt), -c * dv);
        }
    }
    out
}

/// The Weyl character of `lambda` computed purely through alternating sums.
pub fn character_by_alternating_sums(rs: &RootSystem, lambda: &Weight) -> MonomialMap {
    let elements = weyl_elements(rs);
    let den = alternating_sum(rs, &elements, &Weight::zero(rs.rank()));
    divide(rs, &alternating_sum(rs, &elements, lambda), &den)
}
