//! Weyl characters as exact weight-multiplicity data.
//!
//! A [`Character`] stores only the multiplicities of the dominant weights of
//! an irreducible highest-weight module; the full character is recovered by
//! expanding Weyl orbits, since characters are Weyl-invariant. Multiplicities
//! are computed with the Freudenthal recursion using the symmetrized Cartan
//! matrix, entirely in integer arithmetic. The module also provides the
//! monomial and Schur-basis views and the substitution `X^mu -> X^{ell*mu}`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};

/// Multiplicity values are plain machine integers; dimensions that can
/// overflow are computed separately via [`weyl_dimension`].
pub type Mult = i64;

/// The character of an irreducible highest-weight module, stored by its
/// dominant weight multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    highest: Weight,
    dom_mults: BTreeMap<Weight, Mult>,
}

impl Character {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    /// Multiplicity of each dominant weight of the module.
    pub fn dominant_multiplicities(&self) -> &BTreeMap<Weight, Mult> {
        &self.dom_mults
    }

    /// Multiplicity of an arbitrary weight (looked up through its dominant
    /// representative).
    pub fn multiplicity(&self, rs: &RootSystem, nu: &Weight) -> Mult {
        let rep = rs.dominant_representative(nu);
        self.dom_mults.get(&rep).copied().unwrap_or(0)
    }

    /// Dimension as the orbit-weighted sum of the stored multiplicities.
    pub fn dimension(&self, rs: &RootSystem) -> BigInt {
        self.dom_mults
            .iter()
            .map(|(w, m)| BigInt::from(rs.orbit(w).len()) * BigInt::from(*m))
            .sum()
    }
}

/// A finitely supported integer-valued function on the weight lattice,
/// i.e. an element of the group algebra of the lattice. No stored value is
/// zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialMap {
    entries: BTreeMap<Weight, Mult>,
}

impl MonomialMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(w: Weight, v: Mult) -> Self {
        let mut m = Self::new();
        m.add(w, v);
        m
    }

    pub fn add(&mut self, w: Weight, v: Mult) {
        if v == 0 {
            return;
        }
        let e = self.entries.entry(w.clone()).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries.remove(&w);
        }
    }

    pub fn get(&self, w: &Weight) -> Mult {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &Mult)> {
        self.entries.iter()
    }

    /// Total of all values; for a character expansion this is the dimension.
    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn sub_scaled(&mut self, other: &MonomialMap, c: Mult) {
        for (w, v) in &other.entries {
            self.add(w.clone(), -c * v);
        }
    }

    /// Convolution product, the multiplication of the group algebra.
    pub fn convolve(&self, other: &MonomialMap) -> MonomialMap {
        let mut out = MonomialMap::new();
        for (w1, v1) in &self.entries {
            for (w2, v2) in &other.entries {
                out.add(w1.add(w2), v1 * v2);
            }
        }
        out
    }

    /// True when the map is constant on every ordinary Weyl orbit (with all
    /// orbit members present).
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> bool {
        self.invariance_defect(rs).is_none()
    }

    fn invariance_defect(&self, rs: &RootSystem) -> Option<Weight> {
        for (w, v) in &self.entries {
            for i in 1..=rs.rank() {
                let r = rs.simple_reflect(i, w);
                if self.get(&r) != *v {
                    return Some(w.clone());
                }
            }
        }
        None
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .rev()
            .map(|(w, v)| match v {
                1 => format!("X[{w}]"),
                -1 => format!("-X[{w}]"),
                _ => format!("{v}*X[{w}]"),
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// An integer vector in the Schur (Weyl character) basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurVector {
    entries: BTreeMap<Weight, Mult>,
}

impl SchurVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: Weight, v: Mult) {
        if v == 0 {
            return;
        }
        let e = self.entries.entry(w.clone()).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries.remove(&w);
        }
    }

    pub fn get(&self, w: &Weight) -> Mult {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &Mult)> {
        self.entries.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .rev()
            .map(|(w, v)| match v {
                1 => format!("s[{w}]"),
                -1 => format!("-s[{w}]"),
                _ => format!("{v}*s[{w}]"),
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// Weight multiplicities of the irreducible module of highest weight
/// `lambda` by the Freudenthal recursion.
///
/// The recursion is run over dominant weights in decreasing order of
/// `<., 2 rho^vee>`; pairings against roots are taken with the symmetrizer
/// weights so every intermediate value is an integer.
pub fn weyl_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    if lambda.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            got: lambda.rank(),
            expected: rs.rank(),
        });
    }
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let below = rs.dominant_below(lambda)?;
    let top_ht = rs.two_rho_vee(lambda);
    let mut mults: HashMap<Weight, Mult> = HashMap::new();
    mults.insert(lambda.clone(), 1);

    let mut scratch = vec![0i64; rs.rank()];
    for mu in below.iter().skip(1) {
        let mut num: i128 = 0;
        for alpha in rs.positive_roots() {
            // walk mu + k*alpha upward, tracking the height proxy and the
            // pairing against alpha^vee incrementally
            let step_ht = rs.two_rho_vee(&alpha.fund);
            let mut nu: Vec<i64> = mu.coords().to_vec();
            let mut ht = rs.two_rho_vee(mu);
            let mut pair = rs.pairing(mu, &alpha.coroot);
            loop {
                for (x, a) in nu.iter_mut().zip(alpha.fund.coords()) {
                    *x += a;
                }
                ht += step_ht;
                pair += 2;
                if ht > top_ht {
                    break;
                }
                scratch.copy_from_slice(&nu);
                rs.dominant_rep_in_place(&mut scratch);
                if let Some(m) = mults.get(scratch.as_slice()) {
                    num += 2 * (alpha.d as i128) * (pair as i128) * (*m as i128);
                }
            }
        }
        // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (lambda+mu+2rho, lambda-mu)
        let diff = lambda.sub(mu);
        let coords = rs.root_coordinates(&diff);
        let shifted = lambda.add(mu).add(rs.rho()).add(rs.rho());
        let den: i128 = coords
            .iter()
            .enumerate()
            .map(|(i, c)| {
                debug_assert!(c.is_integer());
                (c.to_integer() as i128)
                    * (rs.symmetrizers()[i] as i128)
                    * (shifted.coords()[i] as i128)
            })
            .sum();
        debug_assert!(den > 0, "Freudenthal denominator must be positive");
        debug_assert_eq!(num % den, 0, "Freudenthal division must be exact");
        let m = num / den;
        debug_assert!(m > 0, "dominant weights below lambda have multiplicity > 0");
        mults.insert(mu.clone(), m as Mult);
    }

    Ok(Character {
        highest: lambda.clone(),
        dom_mults: mults.into_iter().collect(),
    })
}

/// The Weyl dimension formula, exact in big integers.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let shifted = lambda.add(rs.rho());
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in rs.positive_roots() {
        num *= BigInt::from(rs.pairing(&shifted, &alpha.coroot));
        den *= BigInt::from(rs.pairing(rs.rho(), &alpha.coroot));
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Expands a character over full Weyl orbits into its monomial view.
pub fn monomial_expand(rs: &RootSystem, c: &Character) -> MonomialMap {
    let mut out = MonomialMap::new();
    for (mu, m) in &c.dom_mults {
        for nu in rs.orbit(mu) {
            out.add(nu, *m);
        }
    }
    out
}

/// Substitution `X^mu -> X^{ell*mu}` on monomial maps.
pub fn psi_ell(m: &MonomialMap, ell: i64) -> Result<MonomialMap> {
    if ell < 1 {
        return Err(Error::InvalidLevel(ell));
    }
    let mut out = MonomialMap::new();
    for (w, v) in m.iter() {
        out.add(w.scale(ell), *v);
    }
    Ok(out)
}

/// Inverse of [`monomial_expand`]: writes a Weyl-invariant monomial map in
/// the Schur basis by repeatedly peeling the maximal dominant term.
///
/// Peeling order is maximal `<., 2 rho^vee>` first, ties broken by
/// lexicographically largest coordinates, which makes the output
/// deterministic. Non-invariant input is detected and reported.
pub fn schur_expand(rs: &RootSystem, m: &MonomialMap) -> Result<SchurVector> {
    schur_expand_with(rs, m, &CharacterCache::new())
}

/// [`schur_expand`] with an external character memo, so repeated expansions
/// in a sweep share the expensive multiplicity computations.
pub fn schur_expand_with(
    rs: &RootSystem,
    m: &MonomialMap,
    cache: &CharacterCache,
) -> Result<SchurVector> {
    if let Some(w) = m.invariance_defect(rs) {
        return Err(Error::NotInvariant(w.to_string()));
    }
    let mut out = SchurVector::new();
    let mut rem = m.clone();
    while !rem.is_empty() {
        let (mu, c) = rem
            .iter()
            .max_by(|(a, _), (b, _)| {
                (rs.two_rho_vee(a), a.coords()).cmp(&(rs.two_rho_vee(b), b.coords()))
            })
            .map(|(w, v)| (w.clone(), *v))
            .expect("nonempty remainder");
        debug_assert!(
            rs.is_dominant(&mu),
            "the maximal term of an invariant map is dominant"
        );
        let expansion = cache.expansion(rs, &mu)?;
        out.add(mu, c);
        rem.sub_scaled(&expansion, c);
    }
    Ok(out)
}

/// A shared memo of Weyl characters and their orbit expansions, confined to
/// one computation context.
pub struct CharacterCache {
    memo: RefCell<HashMap<Weight, Arc<Character>>>,
    expansions: RefCell<HashMap<Weight, Arc<MonomialMap>>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self {
            memo: RefCell::new(HashMap::new()),
            expansions: RefCell::new(HashMap::new()),
        }
    }

    pub fn get(&self, rs: &RootSystem, lambda: &Weight) -> Result<Arc<Character>> {
        if let Some(c) = self.memo.borrow().get(lambda) {
            return Ok(c.clone());
        }
        let c = Arc::new(weyl_character(rs, lambda)?);
        self.memo.borrow_mut().insert(lambda.clone(), c.clone());
        Ok(c)
    }

    /// Memoized `monomial_expand(weyl_character(lambda))`.
    pub fn expansion(&self, rs: &RootSystem, lambda: &Weight) -> Result<Arc<MonomialMap>> {
        if let Some(e) = self.expansions.borrow().get(lambda) {
            return Ok(e.clone());
        }
        let c = self.get(rs, lambda)?;
        let e = Arc::new(monomial_expand(rs, &c));
        self.expansions
            .borrow_mut()
            .insert(lambda.clone(), e.clone());
        Ok(e)
    }
}

impl Default for CharacterCache {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type_str(t).unwrap()
    }

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    #[test]
    fn a1_three_dimensional() {
        let a1 = rs("A1");
        let c = weyl_character(&a1, &w(&[2])).unwrap();
        let expected: BTreeMap<Weight, Mult> = [(w(&[2]), 1), (w(&[0]), 1)].into_iter().collect();
        assert_eq!(c.dominant_multiplicities(), &expected);
        let m = monomial_expand(&a1, &c);
        assert_eq!(m.get(&w(&[2])), 1);
        assert_eq!(m.get(&w(&[0])), 1);
        assert_eq!(m.get(&w(&[-2])), 1);
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn trivial_character() {
        let a2 = rs("A2");
        let c = weyl_character(&a2, &Weight::zero(2)).unwrap();
        assert_eq!(c.dominant_multiplicities().len(), 1);
        assert_eq!(monomial_expand(&a2, &c).len(), 1);
    }

    #[test]
    fn a2_adjoint() {
        let a2 = rs("A2");
        let c = weyl_character(&a2, &w(&[1, 1])).unwrap();
        assert_eq!(c.dominant_multiplicities().get(&w(&[1, 1])), Some(&1));
        assert_eq!(c.dominant_multiplicities().get(&w(&[0, 0])), Some(&2));
        let m = monomial_expand(&a2, &c);
        assert_eq!(m.total(), 8);
        assert_eq!(m.len(), 7);
        assert_eq!(c.dimension(&a2), BigInt::from(8));
        assert_eq!(weyl_dimension(&a2, &w(&[1, 1])).unwrap(), BigInt::from(8));
    }

    #[test]
    fn dimension_cross_check() {
        for t in ["A1", "A2", "B2", "G2"] {
            let sys = rs(t);
            for a in 0..=3i64 {
                for b in 0..=3i64 {
                    let lam = if sys.rank() == 1 {
                        if b > 0 {
                            continue;
                        }
                        w(&[a])
                    } else {
                        w(&[a, b])
                    };
                    let c = weyl_character(&sys, &lam).unwrap();
                    assert_eq!(
                        c.dimension(&sys),
                        weyl_dimension(&sys, &lam).unwrap(),
                        "{t} {lam}"
                    );
                    assert_eq!(
                        BigInt::from(monomial_expand(&sys, &c).total()),
                        c.dimension(&sys)
                    );
                }
            }
        }
    }

    #[test]
    fn schur_expand_examples() {
        let a1 = rs("A1");
        // X^2 + X^{-2} = s_2 - s_0
        let mut m = MonomialMap::new();
        m.add(w(&[2]), 1);
        m.add(w(&[-2]), 1);
        let sv = schur_expand(&a1, &m).unwrap();
        assert_eq!(sv.get(&w(&[2])), 1);
        assert_eq!(sv.get(&w(&[0])), -1);
        assert_eq!(sv.len(), 2);

        // round trip
        let c = weyl_character(&a1, &w(&[3])).unwrap();
        let sv = schur_expand(&a1, &monomial_expand(&a1, &c)).unwrap();
        assert_eq!(sv.get(&w(&[3])), 1);
        assert_eq!(sv.len(), 1);

        // empty map
        assert!(schur_expand(&a1, &MonomialMap::new()).unwrap().is_empty());

        // non-invariant input is reported
        let bad = MonomialMap::singleton(w(&[2]), 1);
        assert!(matches!(
            schur_expand(&a1, &bad),
            Err(Error::NotInvariant(_))
        ));
    }

    #[test]
    fn schur_round_trip_rank_two() {
        for t in ["A2", "B2"] {
            let sys = rs(t);
            for a in 0..=2i64 {
                for b in 0..=2i64 {
                    let lam = w(&[a, b]);
                    let c = weyl_character(&sys, &lam).unwrap();
                    let sv = schur_expand(&sys, &monomial_expand(&sys, &c)).unwrap();
                    assert_eq!(sv.len(), 1, "{t} {lam}");
                    assert_eq!(sv.get(&lam), 1, "{t} {lam}");
                }
            }
        }
    }

    #[test]
    fn psi_ell_examples() {
        let mut m = MonomialMap::new();
        m.add(w(&[1]), 1);
        m.add(w(&[-1]), 1);
        let p = psi_ell(&m, 2).unwrap();
        assert_eq!(p.get(&w(&[2])), 1);
        assert_eq!(p.get(&w(&[-2])), 1);
        assert_eq!(psi_ell(&m, 1).unwrap(), m);
        let z = MonomialMap::singleton(Weight::zero(1), 1);
        assert_eq!(psi_ell(&z, 3).unwrap(), z);
        assert!(psi_ell(&m, 0).is_err());
    }

    #[test]
    fn psi_ell_is_multiplicative() {
        let a2 = rs("A2");
        let c1 = monomial_expand(&a2, &weyl_character(&a2, &w(&[1, 0])).unwrap());
        let c2 = monomial_expand(&a2, &weyl_character(&a2, &w(&[0, 1])).unwrap());
        let lhs = psi_ell(&c1.convolve(&c2), 3).unwrap();
        let rhs = psi_ell(&c1, 3).unwrap().convolve(&psi_ell(&c2, 3).unwrap());
        assert_eq!(lhs, rhs);
    }
}
