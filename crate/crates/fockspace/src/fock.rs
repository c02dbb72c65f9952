//! The abstract Fock space attached to a root system and a level parameter.
//!
//! The space is spanned by kets indexed by dominant integral weights (under
//! the shifted convention: `|mu>` is a basis ket when every coordinate of
//! `mu` is nonnegative). Arbitrary kets are brought into this basis by the
//! straightening rewriting system:
//!
//! * a ket whose shifted weight lies on a reflection wall is zero;
//! * otherwise, the least simple direction with a negative shifted pairing
//!   determines one of three rewrite cases, with coefficients `-1` and `-v`,
//!   applied recursively.
//!
//! Rewrites are memoized per weight, so the canonical form is independent of
//! the representative and repeated straightening is near-linear in the number
//! of distinct weights encountered. Termination is guaranteed (each rewrite
//! strictly increases the pairing of the shifted weight against `2 rho^vee`
//! while staying inside a fixed convex hull), but an explicit fuel budget
//! guards every public entry point anyway.
//!
//! On top of the canonical form the module provides the bar involution, the
//! bar-invariant canonical basis via a descending triangular solve, and the
//! level `-ell-h` action of Weyl characters.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::characters::{monomial_expand, Character};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rootdata::{CartanType, RootSystem, Weight};

/// Default rewrite-step budget; override with [`FockConfig::with_fuel`] or,
/// in the CLI, the `FOCK_FUEL` environment variable.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Root system, level, and rewrite budget shared by Fock-space computations.
#[derive(Clone)]
pub struct FockConfig {
    root_system: Arc<RootSystem>,
    ell: i64,
    fuel: u64,
}

impl FockConfig {
    pub fn new(root_system: Arc<RootSystem>, ell: i64) -> Result<Self> {
        Self::with_fuel(root_system, ell, DEFAULT_FUEL)
    }

    pub fn with_fuel(root_system: Arc<RootSystem>, ell: i64, fuel: u64) -> Result<Self> {
        if ell < 1 {
            return Err(Error::InvalidLevel(ell));
        }
        Ok(Self {
            root_system,
            ell,
            fuel,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn shared_root_system(&self) -> Arc<RootSystem> {
        self.root_system.clone()
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }
}

/// A formal linear combination of kets before straightening. No invariants:
/// weights may repeat and need not be dominant.
#[derive(Clone, Debug, Default)]
pub struct RawFockExpression {
    terms: Vec<(Weight, LaurentPoly)>,
}

impl RawFockExpression {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single generator `|w>`.
    pub fn ket(w: Weight) -> Self {
        Self {
            terms: vec![(w, LaurentPoly::one())],
        }
    }

    pub fn push(&mut self, w: Weight, coeff: LaurentPoly) {
        if !coeff.is_zero() {
            self.terms.push((w, coeff));
        }
    }

    pub fn terms(&self) -> &[(Weight, LaurentPoly)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `delta` to every ket; this is the raw (not well-defined on the
    /// quotient!) action of a single monomial `X^mu` when
    /// `delta = ell * mu^*`.
    pub fn translated(&self, delta: &Weight) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.add(delta), c.clone()))
                .collect(),
        }
    }
}

/// An element of the Fock space in canonical form: a finite Laurent
/// combination of dominant-weight kets.
#[derive(Clone)]
pub struct FockElement {
    cartan_type: CartanType,
    ell: i64,
    terms: BTreeMap<Weight, LaurentPoly>,
}

impl FockElement {
    fn new(cartan_type: CartanType, ell: i64, terms: BTreeMap<Weight, LaurentPoly>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Self {
            cartan_type,
            ell,
            terms,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `|w>` (zero if absent).
    pub fn coefficient(&self, w: &Weight) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Terms in increasing lexicographic weight order.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Reinterpret as a raw expression (e.g. to probe representative
    /// independence).
    pub fn to_raw(&self) -> RawFockExpression {
        RawFockExpression {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &FockElement) -> FockElement {
        debug_assert_eq!(self.ell, other.ell);
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            merge_term(&mut terms, w, c.clone());
        }
        Self::new(self.cartan_type, self.ell, terms)
    }
}

impl PartialEq for FockElement {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_type == other.cartan_type && self.ell == other.ell && self.terms == other.terms
    }
}
impl Eq for FockElement {}

impl fmt::Display for FockElement {
    /// Kets in decreasing weight order, e.g. `|10> - v|8> + v^2|0>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            let (neg, body) = format_coefficient(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}|{w}>")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FockElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Splits a coefficient into a sign and a printable body (empty body for
/// `+-1`, parenthesized for multi-term polynomials with the sign of the
/// leading term pulled out).
fn format_coefficient(c: &LaurentPoly) -> (bool, String) {
    use num_traits::Signed;
    if c.num_terms() == 1 {
        let (e, k) = c.iter().next().map(|(e, k)| (e, k.clone())).unwrap();
        let neg = k.is_negative();
        let abs = k.abs();
        let mut body = String::new();
        if !num_traits::One::is_one(&abs) {
            body.push_str(&abs.to_string());
        }
        match e {
            0 => {}
            1 => body.push('v'),
            _ => body.push_str(&format!("v^{e}")),
        }
        (neg, body)
    } else {
        let lead_neg = c
            .iter()
            .last()
            .map(|(_, k)| k.is_negative())
            .unwrap_or(false);
        let inner = if lead_neg { -c } else { c.clone() };
        (lead_neg, format!("({inner})"))
    }
}

type Expansion = BTreeMap<Weight, LaurentPoly>;

fn merge_term(map: &mut Expansion, w: &Weight, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(w) {
        Some(existing) => {
            let sum = &*existing + &c;
            if sum.is_zero() {
                map.remove(w);
            } else {
                *existing = sum;
            }
        }
        None => {
            map.insert(w.clone(), c);
        }
    }
}

enum Classified {
    Dominant,
    Wall,
    Rewrite(Vec<(Weight, LaurentPoly)>),
}

/// The Fock space computation context: a configuration plus the memo caches
/// for straightening, bar expansions, and canonical basis elements.
///
/// A `FockSpace` owns its caches; clone the underlying [`FockConfig`] into a
/// fresh space per thread when computing concurrently. The [`FockElement`]
/// values it hands out are immutable and freely shareable.
pub struct FockSpace {
    cfg: FockConfig,
    expand_memo: RefCell<HashMap<Weight, Arc<Expansion>>>,
    bar_memo: RefCell<HashMap<Weight, Arc<Expansion>>>,
    cb_memo: RefCell<HashMap<Weight, Arc<FockElement>>>,
}

impl FockSpace {
    pub fn new(cfg: FockConfig) -> Self {
        Self {
            cfg,
            expand_memo: RefCell::new(HashMap::new()),
            bar_memo: RefCell::new(HashMap::new()),
            cb_memo: RefCell::new(HashMap::new()),
        }
    }

    /// Convenience constructor from a type string, level, and default fuel.
    pub fn for_type(type_str: &str, ell: i64) -> Result<Self> {
        let rs = Arc::new(RootSystem::from_type_str(type_str)?);
        Ok(Self::new(FockConfig::new(rs, ell)?))
    }

    pub fn config(&self) -> &FockConfig {
        &self.cfg
    }

    pub fn root_system(&self) -> &RootSystem {
        self.cfg.root_system()
    }

    pub fn ell(&self) -> i64 {
        self.cfg.ell()
    }

    fn element(&self, terms: Expansion) -> FockElement {
        FockElement::new(self.root_system().cartan_type(), self.ell(), terms)
    }

    /// The zero element.
    pub fn zero(&self) -> FockElement {
        self.element(BTreeMap::new())
    }

    /// The basis ket `|w>` for dominant `w`.
    pub fn dominant_ket(&self, w: &Weight) -> Result<FockElement> {
        if !self.root_system().is_dominant(w) {
            return Err(Error::NotDominant(w.to_string()));
        }
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), LaurentPoly::one());
        Ok(self.element(terms))
    }

    fn classify(&self, w: &Weight) -> Classified {
        let rs = self.root_system();
        let ell = self.ell();
        let mut neg = None;
        for i in 1..=rs.rank() {
            let p = w.coord(i) + 1;
            if p == 0 {
                return Classified::Wall;
            }
            if p < 0 && neg.is_none() {
                neg = Some(i);
            }
        }
        let Some(i) = neg else {
            return Classified::Dominant;
        };
        let lambda = rs.simple_dot(i, w);
        let q = lambda.coord(i) + 1;
        debug_assert!(q > 0);
        let minus_one = -LaurentPoly::one();
        let minus_v = -LaurentPoly::v();
        if q % ell == 0 {
            Classified::Rewrite(vec![(lambda, minus_one)])
        } else if q < ell {
            Classified::Rewrite(vec![(lambda, minus_v)])
        } else {
            let j = q % ell;
            let lambda_one = lambda.sub(&rs.simple_root(i).scale(j));
            let reflected = rs.simple_dot(i, &lambda_one);
            Classified::Rewrite(vec![
                (reflected, minus_v.clone()),
                (lambda_one, minus_one),
                (lambda, minus_v),
            ])
        }
    }

    /// Canonical-form expansion of the single ket `|w>`, memoized.
    fn expand_ket(&self, w: &Weight, budget: &mut u64) -> Result<Arc<Expansion>> {
        if let Some(e) = self.expand_memo.borrow().get(w) {
            return Ok(e.clone());
        }
        let mut stack: Vec<Weight> = vec![w.clone()];
        while let Some(top) = stack.last().cloned() {
            if self.expand_memo.borrow().contains_key(&top) {
                stack.pop();
                continue;
            }
            match self.classify(&top) {
                Classified::Dominant => {
                    let mut e = BTreeMap::new();
                    e.insert(top.clone(), LaurentPoly::one());
                    self.expand_memo.borrow_mut().insert(top, Arc::new(e));
                    stack.pop();
                }
                Classified::Wall => {
                    self.expand_memo
                        .borrow_mut()
                        .insert(top, Arc::new(BTreeMap::new()));
                    stack.pop();
                }
                Classified::Rewrite(children) => {
                    let mut ready = true;
                    for (child, _) in &children {
                        if !self.expand_memo.borrow().contains_key(child) {
                            stack.push(child.clone());
                            ready = false;
                        }
                    }
                    if !ready {
                        continue;
                    }
                    if *budget == 0 {
                        return Err(Error::FuelExhausted(self.cfg.fuel()));
                    }
                    *budget -= 1;
                    let mut combined: Expansion = BTreeMap::new();
                    for (child, coeff) in &children {
                        let child_exp = self
                            .expand_memo
                            .borrow()
                            .get(child)
                            .cloned()
                            .expect("child expansion just ensured");
                        for (dom, c) in child_exp.iter() {
                            merge_term(&mut combined, dom, coeff * c);
                        }
                    }
                    self.expand_memo
                        .borrow_mut()
                        .insert(top, Arc::new(combined));
                    stack.pop();
                }
            }
        }
        Ok(self
            .expand_memo
            .borrow()
            .get(w)
            .cloned()
            .expect("expansion computed"))
    }

    /// Straightens a raw expression into canonical form.
    pub fn straighten(&self, raw: &RawFockExpression) -> Result<FockElement> {
        let mut budget = self.cfg.fuel();
        let mut terms: Expansion = BTreeMap::new();
        for (w, coeff) in raw.terms() {
            if w.rank() != self.root_system().rank() {
                return Err(Error::RankMismatch {
                    got: w.rank(),
                    expected: self.root_system().rank(),
                });
            }
            let e = self.expand_ket(w, &mut budget)?;
            for (dom, c) in e.iter() {
                merge_term(&mut terms, dom, coeff * c);
            }
        }
        Ok(self.element(terms))
    }

    /// Straightens the single ket `|w>` for an arbitrary weight `w`.
    pub fn straighten_ket(&self, w: &Weight) -> Result<FockElement> {
        self.straighten(&RawFockExpression::ket(w.clone()))
    }

    /// Expansion of `bar(|w>)` in the dominant-ket basis:
    /// `(-1)^{l(w0)} v^{N_w - l(w0)}` times the straightening of `|w0 o w>`.
    fn bar_ket(&self, w: &Weight, budget: &mut u64) -> Result<Arc<Expansion>> {
        if let Some(e) = self.bar_memo.borrow().get(w) {
            return Ok(e.clone());
        }
        let rs = self.root_system();
        let length = rs.num_positive_roots() as i64;
        let n_w = rs.n_lambda(w, self.ell())?;
        let sign = if length % 2 == 0 { 1 } else { -1 };
        let prefactor = LaurentPoly::monomial(n_w - length, sign);
        let target = rs.w0_dot(w);
        let expansion = self.expand_ket(&target, budget)?;
        let mut out: Expansion = BTreeMap::new();
        for (dom, c) in expansion.iter() {
            merge_term(&mut out, dom, &prefactor * c);
        }
        let out = Arc::new(out);
        self.bar_memo.borrow_mut().insert(w.clone(), out.clone());
        Ok(out)
    }

    /// The bar involution: bars every coefficient and maps each ket through
    /// the twisted longest-element rule, then straightens.
    pub fn bar(&self, x: &FockElement) -> Result<FockElement> {
        let mut budget = self.cfg.fuel();
        let mut terms: Expansion = BTreeMap::new();
        for (w, coeff) in x.terms() {
            let barred = coeff.bar();
            let e = self.bar_ket(w, &mut budget)?;
            for (dom, c) in e.iter() {
                merge_term(&mut terms, dom, &barred * c);
            }
        }
        Ok(self.element(terms))
    }

    /// Weights of `dominant_below(lambda)` lying in the same orbit of the
    /// level action as `lambda` (reflections plus translations by `ell`
    /// times the weight lattice). The canonical basis element of `lambda`
    /// is supported on this set, so the triangular solve restricts to it.
    fn dominant_below_in_orbit(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        let rs = self.root_system();
        let ell = self.ell();
        let orbit_points: Vec<Weight> = rs.orbit(&lambda.add(rs.rho()));
        let below = rs.dominant_below(lambda)?;
        Ok(below
            .into_iter()
            .filter(|mu| {
                let shifted = mu.add(rs.rho());
                orbit_points.iter().any(|p| {
                    shifted
                        .coords()
                        .iter()
                        .zip(p.coords())
                        .all(|(a, b)| (a - b) % ell == 0)
                })
            })
            .collect())
    }

    /// The canonical basis element `C_lambda`: the unique bar-invariant
    /// element equal to `|lambda>` plus a combination of strictly smaller
    /// kets with coefficients in `v Z[v]`.
    ///
    /// Computed by the descending triangular solve: with `B` the bar matrix
    /// on the dominant weights below `lambda`, each coefficient satisfies
    /// `P_nu - bar(P_nu) = sum_{nu < mu <= lambda} B_{nu,mu} bar(P_mu)`,
    /// whose unique solution in `v Z[v]` is the strictly positive part of
    /// the right-hand side.
    pub fn canonical_basis(&self, lambda: &Weight) -> Result<FockElement> {
        let rs = self.root_system();
        if lambda.rank() != rs.rank() {
            return Err(Error::RankMismatch {
                got: lambda.rank(),
                expected: rs.rank(),
            });
        }
        if !rs.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        if let Some(e) = self.cb_memo.borrow().get(lambda) {
            return Ok((**e).clone());
        }
        let mut budget = self.cfg.fuel();
        let support = self.dominant_below_in_orbit(lambda)?;
        debug_assert_eq!(support.first(), Some(lambda));

        // solved[k] = P_{support[k]}, processed in descending order.
        let mut solved: Vec<LaurentPoly> = vec![LaurentPoly::one()];
        for (idx, nu) in support.iter().enumerate().skip(1) {
            let mut rhs = LaurentPoly::zero();
            for (mu, p_mu) in support[..idx].iter().zip(&solved) {
                if p_mu.is_zero() {
                    continue;
                }
                let column = self.bar_ket(mu, &mut budget)?;
                if let Some(b) = column.get(nu) {
                    rhs = &rhs + &(b * &p_mu.bar());
                }
            }
            if rhs.constant_term() != BigInt::from(0) {
                return Err(Error::Inconsistent(
                    nu.to_string(),
                    format!("nonzero constant term in {rhs}"),
                ));
            }
            if !rhs.is_bar_antisymmetric() {
                return Err(Error::Inconsistent(
                    nu.to_string(),
                    format!("{rhs} is not bar-antisymmetric"),
                ));
            }
            solved.push(rhs.pos_part());
        }

        let mut terms: Expansion = BTreeMap::new();
        for (nu, p) in support.iter().zip(&solved) {
            if !p.is_zero() {
                terms.insert(nu.clone(), p.clone());
            }
        }
        let element = Arc::new(self.element(terms));
        self.cb_memo
            .borrow_mut()
            .insert(lambda.clone(), element.clone());
        Ok((*element).clone())
    }

    /// The coefficient of `|mu>` in `C_lambda`; zero when absent and 1 on
    /// the diagonal.
    pub fn kl_coefficient(&self, mu: &Weight, lambda: &Weight) -> Result<LaurentPoly> {
        let rs = self.root_system();
        if !rs.is_dominant(mu) {
            return Err(Error::NotDominant(mu.to_string()));
        }
        Ok(self.canonical_basis(lambda)?.coefficient(mu))
    }

    /// Raw (unstraightened) action of a Weyl character on a raw expression:
    /// each monomial weight `mu` with multiplicity `m` sends `|gamma>` to
    /// `m * |gamma + ell*mu^*>`.
    pub fn act_character_raw(
        &self,
        c: &Character,
        raw: &RawFockExpression,
    ) -> RawFockExpression {
        let rs = self.root_system();
        let ell = self.ell();
        let mon = monomial_expand(rs, c);
        let mut out = RawFockExpression::new();
        for (wt, m) in mon.iter() {
            let delta = rs.star(wt).scale(ell);
            let scale = BigInt::from(*m);
            for (gamma, coeff) in raw.terms() {
                out.push(gamma.add(&delta), coeff.scale(&scale));
            }
        }
        out
    }

    /// The level `-ell-h` action of a Weyl character on a canonical-form
    /// element, straightened.
    pub fn act_character(&self, c: &Character, x: &FockElement) -> Result<FockElement> {
        let raw = self.act_character_raw(c, &x.to_raw());
        self.straighten(&raw)
    }
}
