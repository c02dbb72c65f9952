//! Finite root systems of types A-G and the weight combinatorics built on
//! them: dot actions of the finite and affine Weyl groups, dominance order,
//! the `*` involution, wall counts, and the restricted decomposition.
//!
//! Weights are stored in fundamental-weight coordinates: coordinate `i` of a
//! weight is its pairing with the simple coroot `alpha_i^vee`. With that
//! convention `rho = (1, ..., 1)` and a weight is dominant exactly when all
//! coordinates are nonnegative.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Series letter of a finite Cartan type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A finite Cartan type such as `A1`, `B2`, or `E6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(Self { series, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{series}{rank}")))
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::InvalidCartanType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidCartanType(s.to_string()))?;
        CartanType::new(series, rank)
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `omega_i` (1-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i - 1] = 1;
        Weight(c)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Pairing with the `i`-th simple coroot (1-based).
    pub fn coord(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

impl std::borrow::Borrow<[i64]> for Weight {
    fn borrow(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Weight {
    type Err = Error;
    /// Parses comma-separated fundamental coordinates, e.g. `"4,2"` or `"-12"`.
    fn from_str(s: &str) -> Result<Self> {
        let coords: std::result::Result<Vec<i64>, _> =
            s.split(',').map(|p| p.trim().parse::<i64>()).collect();
        coords
            .map(Weight)
            .map_err(|_| Error::Precondition(format!("cannot parse weight from {s:?}")))
    }
}

/// A positive root together with its coroot, both in simple-root
/// (resp. simple-coroot) coordinates, plus the fundamental-coordinate view
/// and the symmetrizer of its length class.
#[derive(Clone, Debug)]
pub struct PositiveRoot {
    /// Coordinates in the simple-root basis.
    pub root: Vec<i64>,
    /// Coordinates of the coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
    /// Fundamental-weight coordinates of the root.
    pub fund: Weight,
    /// Half the squared length: `d = 1` for short roots, 2 or 3 for long ones.
    pub d: i64,
}

/// An element `t_mu * w` of the affine Weyl group, acting through the
/// level-dependent dot action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeylElement {
    /// The translation weight `mu` of `t_mu`.
    pub translation: Weight,
    /// Word in the simple reflections (1-based letters) for the finite part.
    pub finite_word: Vec<usize>,
}

impl AffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            translation: Weight::zero(rank),
            finite_word: Vec::new(),
        }
    }

    pub fn translation(mu: Weight) -> Self {
        Self {
            translation: mu,
            finite_word: Vec::new(),
        }
    }
}

/// Cartan data and derived constants for one finite root system.
///
/// The Cartan matrix convention is `a[i][j] = <alpha_j, alpha_i^vee>`, so the
/// fundamental coordinates of the simple root `alpha_j` form the `j`-th
/// column. All fields are immutable after construction and every operation
/// is pure.
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    positive_roots: Vec<PositiveRoot>,
    rho: Weight,
    w0_word: Vec<usize>,
    highest_short_coroot: Vec<i64>,
    dual_coxeter: i64,
    /// `<omega_i, 2 rho^vee>` for each `i`: the strictly positive linear form
    /// used to order weights by distance into the dominant cone.
    two_rho_vee_weights: Vec<i64>,
    inverse_cartan: Vec<Vec<Ratio<i64>>>,
}

fn cartan_matrix(ct: CartanType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = ct.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // Edges of the Dynkin diagram as (i, j, a_ij, a_ji) with 0-based nodes.
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    let mut d = vec![1i64; n];
    match ct.series {
        Series::A => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1, -1, -1);
            }
        }
        Series::B => {
            // alpha_n is short; all others long.
            for i in 0..n - 2 {
                link(&mut a, i, i + 1, -1, -1);
            }
            // <alpha_{n-1}, alpha_n^vee> = -2
            link(&mut a, n - 2, n - 1, -1, -2);
            for di in d.iter_mut().take(n - 1) {
                *di = 2;
            }
        }
        Series::C => {
            // alpha_n is long; all others short.
            for i in 0..n - 2 {
                link(&mut a, i, i + 1, -1, -1);
            }
            // <alpha_n, alpha_{n-1}^vee> = -2
            link(&mut a, n - 2, n - 1, -2, -1);
            d[n - 1] = 2;
        }
        Series::D => {
            for i in 0..n - 3 {
                link(&mut a, i, i + 1, -1, -1);
            }
            link(&mut a, n - 3, n - 2, -1, -1);
            link(&mut a, n - 3, n - 1, -1, -1);
        }
        Series::E => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
            link(&mut a, 0, 2, -1, -1);
            link(&mut a, 1, 3, -1, -1);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1, -1, -1);
            }
        }
        Series::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            link(&mut a, 0, 1, -1, -1);
            link(&mut a, 1, 2, -1, -2);
            link(&mut a, 2, 3, -1, -1);
            d[0] = 2;
            d[1] = 2;
        }
        Series::G => {
            // alpha_1 short, alpha_2 long.
            link(&mut a, 0, 1, -3, -1);
            d[1] = 3;
        }
    }
    (a, d)
}

fn invert_cartan(a: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Ratio::from_integer(a[i][j])
                    } else {
                        Ratio::from_integer(i64::from(j - n == i))
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|r| !m[*r][col].is_zero())
            .expect("Cartan matrix is invertible");
        m.swap(col, pivot);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for row in 0..n {
            if row != col && !m[row][col].is_zero() {
                let f = m[row][col];
                for j in 0..2 * n {
                    let v = m[col][j];
                    m[row][j] -= f * v;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

impl RootSystem {
    /// Builds the full root datum for a Cartan type: positive roots and
    /// coroots by closure of the simple ones under reflections, the longest
    /// element by greedy descent from `-rho`, and the derived constants.
    pub fn build(ct: CartanType) -> Result<Self> {
        let n = ct.rank;
        let (cartan, symmetrizers) = cartan_matrix(ct);

        // Closure of the simple (root, coroot, d) triples under reflections.
        let mut seen = std::collections::HashSet::new();
        let mut queue: Vec<(Vec<i64>, Vec<i64>, i64)> = Vec::new();
        for i in 0..n {
            let mut r = vec![0i64; n];
            r[i] = 1;
            queue.push((r.clone(), r, symmetrizers[i]));
        }
        let mut all: Vec<(Vec<i64>, Vec<i64>, i64)> = Vec::new();
        while let Some((root, coroot, d)) = queue.pop() {
            if !seen.insert(root.clone()) {
                continue;
            }
            all.push((root.clone(), coroot.clone(), d));
            for i in 0..n {
                // <root, alpha_i^vee> and <alpha_i, coroot>
                let p: i64 = (0..n).map(|j| cartan[i][j] * root[j]).sum();
                let q: i64 = (0..n).map(|j| cartan[j][i] * coroot[j]).sum();
                let mut r2 = root.clone();
                r2[i] -= p;
                let mut c2 = coroot.clone();
                c2[i] -= q;
                if !seen.contains(&r2) {
                    queue.push((r2, c2, d));
                }
            }
        }
        let mut positive_roots: Vec<PositiveRoot> = all
            .into_iter()
            .filter(|(r, _, _)| r.iter().all(|c| *c >= 0))
            .map(|(root, coroot, d)| {
                let fund = Weight(
                    (0..n)
                        .map(|i| (0..n).map(|j| cartan[i][j] * root[j]).sum())
                        .collect(),
                );
                PositiveRoot {
                    root,
                    coroot,
                    fund,
                    d,
                }
            })
            .collect();
        positive_roots.sort_by_key(|r| (r.root.iter().sum::<i64>(), r.root.clone()));

        let rho = Weight(vec![1; n]);

        // Longest-element word: walk -rho into the dominant chamber.
        let mut w0_word = Vec::new();
        let mut probe = rho.neg();
        loop {
            match (1..=n).find(|i| probe.coord(*i) < 0) {
                None => break,
                Some(i) => {
                    let c = probe.coord(i);
                    let alpha_i = Weight((0..n).map(|r| cartan[r][i - 1]).collect());
                    probe = probe.sub(&alpha_i.scale(c));
                    w0_word.push(i);
                }
            }
        }

        // Highest root = unique positive root of maximal height; its coroot
        // is the normalized highest short coroot.
        let highest = positive_roots
            .iter()
            .max_by_key(|r| r.root.iter().sum::<i64>())
            .expect("nonempty root system");
        let highest_short_coroot = highest.coroot.clone();
        let dual_coxeter = highest_short_coroot.iter().sum::<i64>() + 1;

        let two_rho_vee_weights = (0..n)
            .map(|i| positive_roots.iter().map(|r| r.coroot[i]).sum())
            .collect();

        let inverse_cartan = invert_cartan(&cartan);

        let rs = Self {
            cartan_type: ct,
            cartan,
            symmetrizers,
            positive_roots,
            rho,
            w0_word,
            highest_short_coroot,
            dual_coxeter,
            two_rho_vee_weights,
            inverse_cartan,
        };
        debug_assert_eq!(rs.w0_word.len(), rs.positive_roots.len());
        Ok(rs)
    }

    /// Parses a type string like `"A1"` or `"G2"` and builds the system.
    pub fn from_type_str(s: &str) -> Result<Self> {
        Self::build(s.parse()?)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    /// Number of positive roots, which equals the length of `w0`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// A reduced word for the longest element (1-based letters).
    pub fn w0_word(&self) -> &[usize] {
        &self.w0_word
    }

    /// Coordinates of the normalized highest short coroot `phi^vee` in the
    /// simple-coroot basis.
    pub fn highest_short_coroot(&self) -> &[i64] {
        &self.highest_short_coroot
    }

    /// The dual Coxeter number `h = <rho, phi^vee> + 1`.
    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    /// The simple root `alpha_i` in fundamental coordinates (1-based).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|r| self.cartan[r][i - 1]).collect())
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                got: w.rank(),
                expected: self.rank(),
            })
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// `<lambda, sum c_i alpha_i^vee>` for a coroot given in simple-coroot
    /// coordinates.
    pub fn pairing(&self, lambda: &Weight, coroot: &[i64]) -> i64 {
        lambda
            .coords()
            .iter()
            .zip(coroot)
            .map(|(l, c)| l * c)
            .sum()
    }

    /// `<lambda, 2 rho^vee>`: strictly increasing along the positive root
    /// cone, used as a height proxy on arbitrary weights.
    pub fn two_rho_vee(&self, lambda: &Weight) -> i64 {
        self.pairing(lambda, &self.two_rho_vee_weights)
    }

    /// Ordinary reflection `s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i`.
    pub fn simple_reflect(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda.coord(i);
        let mut out = lambda.clone();
        if c != 0 {
            for r in 0..self.rank() {
                out.0[r] -= c * self.cartan[r][i - 1];
            }
        }
        out
    }

    /// Dot reflection `s_i o lambda = s_i(lambda + rho) - rho`.
    pub fn simple_dot(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda.coord(i) + 1;
        let mut out = lambda.clone();
        for r in 0..self.rank() {
            out.0[r] -= c * self.cartan[r][i - 1];
        }
        out
    }

    /// Applies a word of ordinary reflections left to right.
    pub fn weyl_apply(&self, word: &[usize], lambda: &Weight) -> Weight {
        word.iter()
            .fold(lambda.clone(), |w, i| self.simple_reflect(*i, &w))
    }

    /// Applies a word of dot reflections left to right.
    pub fn weyl_dot(&self, word: &[usize], lambda: &Weight) -> Weight {
        word.iter()
            .fold(lambda.clone(), |w, i| self.simple_dot(*i, &w))
    }

    /// The dot action of the longest element.
    pub fn w0_dot(&self, lambda: &Weight) -> Weight {
        self.weyl_dot(&self.w0_word, lambda)
    }

    /// Level `(-ell - h)` dot action: `(t_mu w) o lambda = w o lambda - ell*mu`.
    pub fn affine_dot(&self, g: &AffineWeylElement, lambda: &Weight, ell: i64) -> Result<Weight> {
        if ell < 1 {
            return Err(Error::InvalidLevel(ell));
        }
        self.check_rank(lambda)?;
        for &i in &g.finite_word {
            self.check_index(i)?;
        }
        let finite = self.weyl_dot(&g.finite_word, lambda);
        Ok(finite.sub(&g.translation.scale(ell)))
    }

    /// The involution `mu^* = -w0(mu)` (ordinary action).
    pub fn star(&self, mu: &Weight) -> Weight {
        self.weyl_apply(&self.w0_word, mu).neg()
    }

    /// True when `<lambda + rho, alpha_i^vee> >= 1` for every simple `i`,
    /// i.e. all fundamental coordinates are nonnegative.
    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.coords().iter().all(|c| *c >= 0)
    }

    /// Solves `lambda - mu = sum c_i alpha_i` exactly over the rationals and
    /// returns the coefficients, if the difference lies in the root lattice's
    /// rational span (it always does here since the Cartan matrix is square
    /// invertible).
    pub fn root_coordinates(&self, delta: &Weight) -> Vec<Ratio<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.inverse_cartan[i][j] * Ratio::from_integer(delta.coords()[j]))
                    .sum()
            })
            .collect()
    }

    /// Dominance order: `mu <= lambda` iff `lambda - mu` is a nonnegative
    /// integer combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        let c = self.root_coordinates(&lambda.sub(mu));
        c.iter().all(|x| x.is_integer() && !x.is_negative())
    }

    /// Number of positive roots `alpha` with `<lambda + rho, alpha^vee>`
    /// divisible by `ell`.
    pub fn n_lambda(&self, lambda: &Weight, ell: i64) -> Result<i64> {
        if ell < 1 {
            return Err(Error::InvalidLevel(ell));
        }
        let shifted = lambda.add(&self.rho);
        Ok(self
            .positive_roots
            .iter()
            .filter(|r| self.pairing(&shifted, &r.coroot) % ell == 0)
            .count() as i64)
    }

    /// `lambda^{(1)} = lambda - j alpha_i` where
    /// `<lambda + rho, alpha_i^vee> = k ell + j` with `k >= 1` and
    /// `0 <= j <= ell - 1`.
    pub fn lambda_one(&self, lambda: &Weight, i: usize, ell: i64) -> Result<Weight> {
        if ell < 1 {
            return Err(Error::InvalidLevel(ell));
        }
        self.check_index(i)?;
        let p = lambda.coord(i) + 1;
        if p < ell {
            return Err(Error::Precondition(format!(
                "<lambda+rho, alpha_{i}^vee> = {p} must be at least ell = {ell}"
            )));
        }
        let j = p % ell;
        Ok(lambda.sub(&self.simple_root(i).scale(j)))
    }

    /// Splits a dominant weight as `lambda = ell*lambda_1 + lambda_0` with
    /// `lambda_0` restricted (coordinates in `0..ell`).
    pub fn decompose_restricted(&self, lambda: &Weight, ell: i64) -> Result<(Weight, Weight)> {
        if ell < 1 {
            return Err(Error::InvalidLevel(ell));
        }
        self.check_rank(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let l0 = Weight(lambda.coords().iter().map(|c| c.rem_euclid(ell)).collect());
        let l1 = Weight(
            lambda
                .coords()
                .iter()
                .zip(l0.coords())
                .map(|(c, r)| (c - r) / ell)
                .collect(),
        );
        Ok((l0, l1))
    }

    /// True when all coordinates are in `0..ell` (the restricted box).
    pub fn is_restricted(&self, lambda: &Weight, ell: i64) -> bool {
        lambda.coords().iter().all(|c| (0..ell).contains(c))
    }

    /// All dominant weights `mu <= lambda` in dominance order, `lambda`
    /// included, found by depth-first subtraction of simple roots. The
    /// result is sorted by decreasing `<., 2 rho^vee>`, then decreasing
    /// lexicographic order, which refines the dominance order downwards.
    pub fn dominant_below(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        self.check_rank(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let mut visited = std::collections::HashSet::new();
        let mut stack = vec![lambda.clone()];
        let mut out = Vec::new();
        while let Some(w) = stack.pop() {
            if self.two_rho_vee(&w) < 0 || !visited.insert(w.clone()) {
                continue;
            }
            if self.is_dominant(&w) {
                out.push(w.clone());
            }
            for i in 1..=self.rank() {
                let next = w.sub(&self.simple_root(i));
                if !visited.contains(&next) {
                    stack.push(next);
                }
            }
        }
        out.sort_by(|a, b| {
            (self.two_rho_vee(b), b.coords()).cmp(&(self.two_rho_vee(a), a.coords()))
        });
        Ok(out)
    }

    /// Membership in the fundamental alcove for the level `-ell-h` action:
    /// `<nu, phi^vee> >= -ell-1` and `<nu, alpha_i^vee> <= -1` for all `i`.
    pub fn in_alcove(&self, nu: &Weight, ell: i64) -> Result<bool> {
        if ell < 1 {
            return Err(Error::InvalidLevel(ell));
        }
        self.check_rank(nu)?;
        Ok(self.pairing(nu, &self.highest_short_coroot) >= -ell - 1
            && nu.coords().iter().all(|c| *c <= -1))
    }

    /// The full ordinary Weyl orbit of a weight.
    pub fn orbit(&self, lambda: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![lambda.clone()];
        let mut out = Vec::new();
        while let Some(w) = stack.pop() {
            if !seen.insert(w.clone()) {
                continue;
            }
            for i in 1..=self.rank() {
                let next = self.simple_reflect(i, &w);
                if !seen.contains(&next) {
                    stack.push(next);
                }
            }
            out.push(w);
        }
        out
    }

    /// The dominant representative of the ordinary Weyl orbit of `nu`.
    pub fn dominant_representative(&self, nu: &Weight) -> Weight {
        let mut c = nu.coords().to_vec();
        self.dominant_rep_in_place(&mut c);
        Weight::new(c)
    }

    /// In-place reduction of fundamental coordinates into the dominant
    /// chamber by simple reflections.
    pub(crate) fn dominant_rep_in_place(&self, c: &mut [i64]) {
        let n = self.rank();
        loop {
            let Some(i) = (0..n).find(|k| c[*k] < 0) else {
                return;
            };
            let v = c[i];
            for (r, x) in c.iter_mut().enumerate() {
                *x -= v * self.cartan[r][i];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type_str(t).unwrap()
    }

    fn w(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    #[test]
    fn build_small_types() {
        let a1 = rs("A1");
        assert_eq!(a1.num_positive_roots(), 1);
        assert_eq!(a1.dual_coxeter(), 2);
        assert_eq!(a1.w0_word(), &[1]);

        let a2 = rs("A2");
        assert_eq!(a2.num_positive_roots(), 3);
        assert_eq!(a2.dual_coxeter(), 3);

        let g2 = rs("G2");
        assert_eq!(g2.num_positive_roots(), 6);
        assert_eq!(g2.dual_coxeter(), 4);
    }

    #[test]
    fn classical_tables() {
        // (type, positive roots, dual Coxeter number)
        let table = [
            ("A3", 6, 4),
            ("B2", 4, 3),
            ("B3", 9, 5),
            ("C3", 9, 4),
            ("D4", 12, 6),
            ("E6", 36, 12),
            ("F4", 24, 9),
            ("G2", 6, 4),
        ];
        for (t, nroots, h) in table {
            let r = rs(t);
            assert_eq!(r.num_positive_roots(), nroots, "{t} positive roots");
            assert_eq!(r.dual_coxeter(), h, "{t} dual Coxeter");
            assert_eq!(r.w0_word().len(), nroots, "{t} longest word");
            // <rho, alpha_i^vee> = 1 for all i is built into the coordinates;
            // recheck h = <rho, phi^vee> + 1 through the pairing.
            assert_eq!(
                r.pairing(r.rho(), r.highest_short_coroot()) + 1,
                r.dual_coxeter(),
                "{t} h from pairing"
            );
        }
    }

    #[test]
    fn invalid_types_rejected() {
        for t in ["B1", "C1", "D2", "E5", "E9", "F3", "G3", "H2", "A0", "Q4"] {
            assert!(RootSystem::from_type_str(t).is_err(), "{t} should fail");
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.pairing(a2.rho(), a2.highest_short_coroot()), 2);
        assert_eq!(a2.pairing(&Weight::zero(2), &[1, 1]), 0);
        let a1 = rs("A1");
        assert_eq!(a1.pairing(&w(&[10]), &[1]), 10);
    }

    #[test]
    fn simple_dot_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.simple_dot(1, &w(&[2])), w(&[-4]));
        assert_eq!(a1.simple_dot(1, &w(&[10])), w(&[-12]));
        let g2 = rs("G2");
        let neg_rho = g2.rho().neg();
        assert_eq!(g2.simple_dot(1, &neg_rho), neg_rho);
        assert_eq!(g2.simple_dot(2, &neg_rho), neg_rho);
    }

    #[test]
    fn weyl_dot_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.weyl_dot(&[], &w(&[7])), w(&[7]));
        assert_eq!(a1.w0_dot(&w(&[10])), w(&[-12]));
        let a2 = rs("A2");
        assert_eq!(a2.w0_dot(&Weight::zero(2)), w(&[-2, -2]));
    }

    #[test]
    fn affine_dot_examples() {
        let a1 = rs("A1");
        let id = AffineWeylElement::identity(1);
        assert_eq!(a1.affine_dot(&id, &w(&[3]), 5).unwrap(), w(&[3]));
        let t = AffineWeylElement::translation(w(&[1]));
        assert_eq!(a1.affine_dot(&t, &w(&[-1]), 5).unwrap(), w(&[-6]));
        // t_{-lambda} o (-rho) = ell*lambda - rho
        let lam = w(&[3]);
        let tneg = AffineWeylElement::translation(lam.neg());
        assert_eq!(
            a1.affine_dot(&tneg, &a1.rho().neg(), 5).unwrap(),
            lam.scale(5).sub(a1.rho())
        );
        assert!(a1.affine_dot(&id, &w(&[3]), 0).is_err());
    }

    #[test]
    fn star_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.star(&w(&[4])), w(&[4]));
        let a2 = rs("A2");
        assert_eq!(a2.star(&w(&[1, 0])), w(&[0, 1]));
        assert_eq!(a2.star(&Weight::zero(2)), Weight::zero(2));
    }

    #[test]
    fn dominance_examples() {
        let a1 = rs("A1");
        assert!(a1.is_dominant(a1.rho()));
        assert!(!a1.is_dominant(&a1.rho().neg()));
        assert!(a1.is_dominant(&w(&[9])));
        assert!(a1.dominance_leq(&w(&[8]), &w(&[10])));
        assert!(a1.dominance_leq(&w(&[10]), &w(&[10])));
        let a2 = rs("A2");
        assert!(!a2.dominance_leq(&w(&[1, 0]), &w(&[0, 1])));
        assert!(!a2.dominance_leq(&w(&[0, 1]), &w(&[1, 0])));
        assert!(a2.dominance_leq(&w(&[0, 0]), &w(&[1, 1])));
    }

    #[test]
    fn n_lambda_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.n_lambda(&w(&[9]), 5).unwrap(), 1);
        assert_eq!(a1.n_lambda(&w(&[10]), 5).unwrap(), 0);
        let g2 = rs("G2");
        assert_eq!(
            g2.n_lambda(&g2.rho().neg(), 7).unwrap(),
            g2.num_positive_roots() as i64
        );
    }

    #[test]
    fn lambda_one_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.lambda_one(&w(&[10]), 1, 5).unwrap(), w(&[8]));
        assert_eq!(a1.lambda_one(&w(&[8]), 1, 5).unwrap(), w(&[0]));
        // j = 0: pairing divisible by ell leaves the weight unchanged
        assert_eq!(a1.lambda_one(&w(&[9]), 1, 5).unwrap(), w(&[9]));
        assert!(a1.lambda_one(&w(&[2]), 1, 5).is_err());
    }

    #[test]
    fn decompose_restricted_examples() {
        let a1 = rs("A1");
        assert_eq!(
            a1.decompose_restricted(&w(&[8]), 5).unwrap(),
            (w(&[3]), w(&[1]))
        );
        assert_eq!(
            a1.decompose_restricted(&w(&[10]), 5).unwrap(),
            (w(&[0]), w(&[2]))
        );
        assert_eq!(
            a1.decompose_restricted(&w(&[3]), 5).unwrap(),
            (w(&[3]), w(&[0]))
        );
        assert!(a1.decompose_restricted(&w(&[-1]), 5).is_err());
    }

    #[test]
    fn dominant_below_examples() {
        let a1 = rs("A1");
        assert_eq!(
            a1.dominant_below(&w(&[4])).unwrap(),
            vec![w(&[4]), w(&[2]), w(&[0])]
        );
        assert_eq!(a1.dominant_below(&w(&[0])).unwrap(), vec![w(&[0])]);
        let a2 = rs("A2");
        assert_eq!(
            a2.dominant_below(&w(&[1, 1])).unwrap(),
            vec![w(&[1, 1]), w(&[0, 0])]
        );
    }

    #[test]
    fn in_alcove_examples() {
        let a1 = rs("A1");
        assert!(a1.in_alcove(&a1.rho().neg(), 5).unwrap());
        assert!(!a1.in_alcove(&Weight::zero(1), 5).unwrap());
        assert!(a1.in_alcove(&w(&[-6]), 5).unwrap());
        assert!(!a1.in_alcove(&w(&[-8]), 5).unwrap());
    }

    #[test]
    fn orbit_sizes() {
        let a2 = rs("A2");
        assert_eq!(a2.orbit(&w(&[1, 1])).len(), 6);
        assert_eq!(a2.orbit(&w(&[1, 0])).len(), 3);
        assert_eq!(a2.orbit(&Weight::zero(2)).len(), 1);
        let b2 = rs("B2");
        assert_eq!(b2.orbit(&w(&[1, 1])).len(), 8);
        let g2 = rs("G2");
        assert_eq!(g2.orbit(&w(&[1, 1])).len(), 12);
    }

    fn arb_weight(rank: usize) -> impl Strategy<Value = Weight> {
        proptest::collection::vec(-12i64..=12, rank).prop_map(Weight::new)
    }

    fn types() -> Vec<RootSystem> {
        ["A1", "A2", "B2", "G2"].iter().map(|t| rs(t)).collect()
    }

    proptest! {
        #[test]
        fn dot_reflections_are_involutions(coords in proptest::collection::vec(-12i64..=12, 2), idx in 1usize..=2) {
            for sys in types().iter().filter(|s| s.rank() == 2) {
                let lam = Weight::new(coords.clone());
                prop_assert_eq!(sys.simple_dot(idx, &sys.simple_dot(idx, &lam)), lam);
            }
        }

        #[test]
        fn w0_dot_is_involution(lam in arb_weight(2)) {
            for sys in types().iter().filter(|s| s.rank() == 2) {
                prop_assert_eq!(sys.w0_dot(&sys.w0_dot(&lam)), lam.clone());
            }
        }

        #[test]
        fn star_is_involution_and_preserves_dominance(lam in arb_weight(2)) {
            for sys in types().iter().filter(|s| s.rank() == 2) {
                prop_assert_eq!(sys.star(&sys.star(&lam)), lam.clone());
                let dom = sys.dominant_representative(&lam);
                prop_assert!(sys.is_dominant(&sys.star(&dom)));
            }
        }

        #[test]
        fn n_lambda_is_dot_orbit_invariant(lam in arb_weight(2), word in proptest::collection::vec(1usize..=2, 0..6), ell in 1i64..=5) {
            for sys in types().iter().filter(|s| s.rank() == 2) {
                let moved = sys.weyl_dot(&word, &lam);
                prop_assert_eq!(sys.n_lambda(&lam, ell).unwrap(), sys.n_lambda(&moved, ell).unwrap());
            }
        }
    }

    #[test]
    fn dominant_below_agrees_with_dominance_leq() {
        for sys in types() {
            let lam = Weight::new(vec![3; sys.rank()]);
            let below = sys.dominant_below(&lam).unwrap();
            for mu in &below {
                assert!(sys.is_dominant(mu));
                assert!(sys.dominance_leq(mu, &lam));
            }
            // Exhaustive cross-check over the coordinate box.
            let bound = sys.two_rho_vee(&lam);
            let mut count = 0usize;
            let rank = sys.rank();
            let mut c = vec![0i64; rank];
            loop {
                let muw = Weight::new(c.clone());
                if sys.two_rho_vee(&muw) <= bound && sys.dominance_leq(&muw, &lam) {
                    count += 1;
                }
                let mut k = 0;
                loop {
                    if k == rank {
                        break;
                    }
                    c[k] += 1;
                    if sys.two_rho_vee(&Weight::new(c.clone())) > bound {
                        c[k] = 0;
                        k += 1;
                    } else {
                        break;
                    }
                }
                if k == rank {
                    break;
                }
            }
            assert_eq!(below.len(), count, "{}", sys.cartan_type());
        }
    }
}
