//! Chevalley basis `{H_i} ∪ {X_alpha}` with integer structure constants.
//!
//! Signs follow the extraspecial-pair convention: for every non-simple
//! positive root `xi`, the pair `(alpha, beta)` with `alpha + beta = xi`,
//! `0 < alpha < beta` and `alpha` minimal gets `N(alpha, beta) = p + 1 > 0`.
//! Everything else is forced by the identities
//!
//! * `N(a, b) = -N(b, a)` and `N(-a, -b) = -N(a, b)`,
//! * `N(a, b) / (c, c) = N(b, c) / (a, a) = N(c, a) / (b, b)` when `a + b + c = 0`,
//! * the four-term relation for `a + b + c + d = 0` with no opposite pair:
//!   `N(a,b)N(c,d)/(a+b)^2 + N(b,c)N(a,d)/(b+c)^2 + N(c,a)N(b,d)/(c+a)^2 = 0`.
//!
//! Basis indices: `0..rank` are `H_i = H_{alpha_i}`, then `rank + r` is
//! `X_{roots[r]}`. `H_beta` for non-simple `beta` expands over the `H_i`
//! with the simple-coroot coordinates of `beta^vee`.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::weyl::{longest_element, DiagramAutomorphism};

/// Sparse integer combination of basis vectors, sorted by basis index.
pub type SparseVec = Vec<(usize, i64)>;

/// Structure constants `N(alpha, beta)` for a root system plus the data
/// needed to bracket basis vectors.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    rs: RootSystem,
    /// `n[a * len + b]`, zero when `roots[a] + roots[b]` is not a root.
    n: Vec<i64>,
    /// `pairings[r * rank + i] = <roots[r], alpha_i^vee>`.
    pairings: Vec<i64>,
    coroots: Vec<Vec<i64>>,
    tag: u64,
}

/// One row of the exported table: `[X_alpha, X_beta] = N X_{alpha+beta}`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConstantRow {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    #[serde(rename = "N")]
    pub n: i64,
}

/// Exact integer fraction used while solving for the constants.
#[derive(Clone, Copy, Debug)]
struct Frac(i64, i64);

impl Frac {
    fn add(self, o: Frac) -> Frac {
        Frac(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }

    fn to_int(self) -> Option<i64> {
        (self.0 % self.1 == 0).then(|| self.0 / self.1)
    }
}

/// Builds the table from extraspecial pairs.
pub fn build_constants(rs: &RootSystem) -> Result<StructureConstants> {
    let len = rs.len();
    let p = rs.num_positive();
    let rank = rs.rank();
    let norm: Vec<i64> = (0..len).map(|r| 2 * rs.half_norm(r)).collect();
    let mut n = vec![0i64; len * len];

    // N for a positive/negative pair, reduced to a positive pair with a
    // strictly smaller sum.
    fn mixed(n: &[i64], rs: &RootSystem, norm: &[i64], a: usize, b: usize) -> Result<i64> {
        let len = rs.len();
        let c = match rs.sum(a, b) {
            Some(c) => c,
            None => return Ok(0),
        };
        let (pos, neg) = if rs.is_positive(a) { (a, b) } else { (b, a) };
        // N(pos, neg); N(neg, pos) is its negative.
        let (num, den) = if rs.is_positive(c) {
            // N(a,b) = -(c,c)/(a,a) N(-b, c)
            let v = n[rs.negate(neg) * len + c];
            (-norm[c] * v, norm[pos])
        } else {
            // N(a,b) = (c,c)/(b,b) N(-c, a)
            let v = n[rs.negate(c) * len + pos];
            (norm[c] * v, norm[neg])
        };
        if num % den != 0 || num == 0 {
            return Err(Error::Invariant(format!(
                "mixed constant for ({}, {}) is {num}/{den}",
                rs.root(a),
                rs.root(b)
            )));
        }
        let v = num / den;
        Ok(if pos == a { v } else { -v })
    }

    for xi in rank..p {
        let neg_xi = rs.negate(xi);
        // special pairs (a, b), a < b, roots[a] + roots[b] = xi
        let special: Vec<(usize, usize)> = (0..xi)
            .filter_map(|a| rs.sum(a, neg_xi).map(|mb| (a, rs.negate(mb))))
            .filter(|&(a, b)| a < b)
            .collect();
        let &(zeta, eta) = special
            .first()
            .ok_or_else(|| Error::Invariant(format!("{} has no special pair", rs.root(xi))))?;
        let (pstr, _) = rs.root_string(zeta, eta)?;
        let n_extra = pstr as i64 + 1;
        n[zeta * len + eta] = n_extra;
        n[eta * len + zeta] = -n_extra;

        let (mz, me) = (rs.negate(zeta), rs.negate(eta));
        for &(a, b) in &special[1..] {
            let mut acc = Frac(0, 1);
            // N(b,-zeta) N(a,-eta) / (a - eta)^2
            if let Some(s) = rs.sum(a, me) {
                let v = mixed(&n, rs, &norm, b, mz)? * mixed(&n, rs, &norm, a, me)?;
                acc = acc.add(Frac(v, norm[s]));
            }
            // N(-zeta,a) N(b,-eta) / (b - eta)^2
            if let Some(s) = rs.sum(b, me) {
                let v = mixed(&n, rs, &norm, mz, a)? * mixed(&n, rs, &norm, b, me)?;
                acc = acc.add(Frac(v, norm[s]));
            }
            let val = Frac(acc.0 * norm[xi], acc.1 * n_extra).to_int().ok_or_else(|| {
                Error::Invariant(format!("non-integral N({}, {})", rs.root(a), rs.root(b)))
            })?;
            n[a * len + b] = val;
            n[b * len + a] = -val;
        }
    }

    for a in 0..p {
        for b in 0..p {
            n[rs.negate(a) * len + rs.negate(b)] = -n[a * len + b];
        }
    }
    for a in 0..p {
        for b in p..len {
            let v = mixed(&n, rs, &norm, a, b)?;
            n[a * len + b] = v;
            n[b * len + a] = -v;
        }
    }

    let mut pairings = vec![0i64; len * rank];
    for r in 0..len {
        for i in 0..rank {
            pairings[r * rank + i] = rs.simple_pairing(rs.root(r).coords(), i);
        }
    }
    let coroots = (0..len).map(|r| rs.coroot_coords(r)).collect();
    let mut hasher = DefaultHasher::new();
    rs.cartan().hash(&mut hasher);
    let sc = StructureConstants { rs: rs.clone(), n, pairings, coroots, tag: hasher.finish() };
    sc.validate()?;
    Ok(sc)
}

impl StructureConstants {
    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `rank + |roots|`.
    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.len()
    }

    /// `N(roots[a], roots[b])`; zero if the sum is not a root.
    pub fn n(&self, a: usize, b: usize) -> i64 {
        self.n[a * self.rs.len() + b]
    }

    /// `<roots[r], alpha_i^vee>`.
    pub fn pairing(&self, r: usize, i: usize) -> i64 {
        self.pairings[r * self.rank() + i]
    }

    pub fn coroot(&self, r: usize) -> &[i64] {
        &self.coroots[r]
    }

    pub fn h_index(&self, i: usize) -> usize {
        i
    }

    pub fn x_index(&self, root: usize) -> usize {
        self.rank() + root
    }

    /// Root index of a basis vector, `None` for Cartan elements.
    pub fn root_of(&self, basis: usize) -> Option<usize> {
        basis.checked_sub(self.rank())
    }

    pub fn basis_label(&self, basis: usize) -> String {
        match self.root_of(basis) {
            None => format!("H{}", basis + 1),
            Some(r) => format!("X{}", self.rs.root(r)),
        }
    }

    fn validate(&self) -> Result<()> {
        let rs = &self.rs;
        let len = rs.len();
        for a in 0..len {
            for b in 0..len {
                let v = self.n(a, b);
                match rs.sum(a, b) {
                    None if v != 0 => {
                        return Err(Error::Invariant(format!("N set for non-summable pair ({a},{b})")))
                    }
                    None => continue,
                    Some(_) => {}
                }
                let (p, _) = rs.root_string(a, b)?;
                if v.abs() != p as i64 + 1 {
                    return Err(Error::Invariant(format!(
                        "|N({}, {})| = {} but p + 1 = {}",
                        rs.root(a),
                        rs.root(b),
                        v.abs(),
                        p + 1
                    )));
                }
                if self.n(b, a) != -v || self.n(rs.negate(a), rs.negate(b)) != -v {
                    return Err(Error::Invariant(format!(
                        "sign rules fail for ({}, {})",
                        rs.root(a),
                        rs.root(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `[e_a, e_b]` for basis vectors, as an exact integer combination.
    pub fn basis_bracket(&self, a: usize, b: usize) -> SparseVec {
        let rank = self.rank();
        match (self.root_of(a), self.root_of(b)) {
            (None, None) => Vec::new(),
            (None, Some(r)) => nonzero(b, self.pairing(r, a)),
            (Some(r), None) => nonzero(a, -self.pairing(r, b)),
            (Some(ra), Some(rb)) => {
                if rb == self.rs.negate(ra) {
                    self.coroots[ra].iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
                } else if let Some(s) = self.rs.sum(ra, rb) {
                    vec![(rank + s, self.n(ra, rb))]
                } else {
                    Vec::new()
                }
            }
        }
    }

    /// `[e_a, v]` for a basis vector and a sparse vector.
    pub fn bracket_basis_sparse(&self, a: usize, v: &[(usize, i64)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for &(b, cb) in v {
            for (k, ck) in self.basis_bracket(a, b) {
                *acc.entry(k).or_insert(0) += cb * ck;
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    /// `[u, v]` for sparse integer vectors.
    pub fn bracket_sparse(&self, u: &[(usize, i64)], v: &[(usize, i64)]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for &(a, ca) in u {
            for &(b, cb) in v {
                for (k, ck) in self.basis_bracket(a, b) {
                    *acc.entry(k).or_insert(0) += ca * cb * ck;
                }
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    /// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]` for basis vectors.
    pub fn jacobi_defect(&self, a: usize, b: usize, c: usize) -> SparseVec {
        let t1 = self.bracket_basis_sparse(a, &self.basis_bracket(b, c));
        let t2 = self.bracket_basis_sparse(b, &self.basis_bracket(c, a));
        let t3 = self.bracket_basis_sparse(c, &self.basis_bracket(a, b));
        add_sparse(&[t1, t2, t3])
    }

    /// Jacobi identity on every basis triple; returns the number of failures.
    pub fn jacobi_failures_exhaustive(&self) -> usize {
        let d = self.dim();
        (0..d)
            .into_par_iter()
            .map(|a| {
                let mut bad = 0;
                for b in 0..d {
                    for c in 0..d {
                        if !self.jacobi_defect(a, b, c).is_empty() {
                            bad += 1;
                        }
                    }
                }
                bad
            })
            .sum()
    }

    /// Jacobi identity on `samples` uniformly drawn basis triples.
    pub fn jacobi_failures_sampled(&self, samples: usize, seed: u64) -> usize {
        let d = self.dim();
        let chunks = rayon::current_num_threads().max(1) * 4;
        let per = samples.div_ceil(chunks);
        (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut rng = StdRng::seed_from_u64(seed.wrapping_add(chunk as u64));
                let take = per.min(samples.saturating_sub(chunk * per));
                (0..take)
                    .filter(|_| {
                        let (a, b, c) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
                        !self.jacobi_defect(a, b, c).is_empty()
                    })
                    .count()
            })
            .sum()
    }

    /// One row per unordered summable pair `{alpha, beta}`, listed with
    /// `alpha` first in root order.
    pub fn rows(&self) -> Vec<ConstantRow> {
        let len = self.rs.len();
        let mut out = Vec::new();
        for a in 0..len {
            for b in (a + 1)..len {
                let v = self.n(a, b);
                if v != 0 {
                    out.push(ConstantRow {
                        alpha: self.rs.root(a).coords().to_vec(),
                        beta: self.rs.root(b).coords().to_vec(),
                        n: v,
                    });
                }
            }
        }
        out
    }

    fn check(&self, e: &AlgebraElement) -> Result<()> {
        if e.tag != self.tag || e.h.len() != self.rank() || e.x.len() != self.rs.len() {
            return Err(Error::MismatchedRootSystem);
        }
        Ok(())
    }
}

fn nonzero(k: usize, c: i64) -> SparseVec {
    if c == 0 {
        Vec::new()
    } else {
        vec![(k, c)]
    }
}

pub fn add_sparse(parts: &[SparseVec]) -> SparseVec {
    let mut acc = BTreeMap::new();
    for part in parts {
        for &(k, c) in part {
            *acc.entry(k).or_insert(0i64) += c;
        }
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// An element of the complex Lie algebra with exact Q(i) coordinates over
/// the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    h: Vec<GaussianRational>,
    x: Vec<GaussianRational>,
    tag: u64,
}

impl AlgebraElement {
    pub fn zero(sc: &StructureConstants) -> Self {
        Self {
            h: vec![GaussianRational::zero(); sc.rank()],
            x: vec![GaussianRational::zero(); sc.rs.len()],
            tag: sc.tag,
        }
    }

    /// The basis vector with the given index.
    pub fn basis(sc: &StructureConstants, b: usize) -> Self {
        Self::from_terms(sc, [(b, GaussianRational::from_int(1))])
    }

    pub fn h(sc: &StructureConstants, i: usize) -> Self {
        Self::basis(sc, sc.h_index(i))
    }

    pub fn x(sc: &StructureConstants, root: usize) -> Self {
        Self::basis(sc, sc.x_index(root))
    }

    /// `H_beta = [X_beta, X_{-beta}]` expanded over the `H_i`.
    pub fn h_root(sc: &StructureConstants, root: usize) -> Self {
        Self::from_sparse(sc, &sc.basis_bracket(sc.x_index(root), sc.x_index(sc.rs.negate(root))))
    }

    pub fn from_terms(sc: &StructureConstants, terms: impl IntoIterator<Item = (usize, GaussianRational)>) -> Self {
        let mut e = Self::zero(sc);
        for (b, c) in terms {
            *e.coeff_mut(b) += &c;
        }
        e
    }

    pub fn from_sparse(sc: &StructureConstants, v: &[(usize, i64)]) -> Self {
        Self::from_terms(sc, v.iter().map(|&(b, c)| (b, GaussianRational::from_int(c))))
    }

    pub fn h_coords(&self) -> &[GaussianRational] {
        &self.h
    }

    pub fn x_coords(&self) -> &[GaussianRational] {
        &self.x
    }

    pub fn dim(&self) -> usize {
        self.h.len() + self.x.len()
    }

    pub fn coeff(&self, b: usize) -> &GaussianRational {
        let r = self.h.len();
        if b < r {
            &self.h[b]
        } else {
            &self.x[b - r]
        }
    }

    pub fn coeff_mut(&mut self, b: usize) -> &mut GaussianRational {
        let r = self.h.len();
        if b < r {
            &mut self.h[b]
        } else {
            &mut self.x[b - r]
        }
    }

    /// Nonzero coordinates in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &GaussianRational)> {
        self.h.iter().chain(self.x.iter()).enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms().next().is_none()
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self {
            h: self.h.iter().map(|c| c * k).collect(),
            x: self.x.iter().map(|c| c * k).collect(),
            tag: self.tag,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.tag, o.tag, "elements of different algebras");
        Self {
            h: self.h.iter().zip(&o.h).map(|(a, b)| a + b).collect(),
            x: self.x.iter().zip(&o.x).map(|(a, b)| a + b).collect(),
            tag: self.tag,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.tag, o.tag, "elements of different algebras");
        Self {
            h: self.h.iter().zip(&o.h).map(|(a, b)| a - b).collect(),
            x: self.x.iter().zip(&o.x).map(|(a, b)| a - b).collect(),
            tag: self.tag,
        }
    }

    /// Conjugates every coordinate.
    pub fn conj(&self) -> Self {
        Self {
            h: self.h.iter().map(GaussianRational::conj).collect(),
            x: self.x.iter().map(GaussianRational::conj).collect(),
            tag: self.tag,
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.h.len();
        let mut first = true;
        for (b, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if b < r {
                write!(f, "({c})H{}", b + 1)?;
            } else {
                write!(f, "({c})X#{}", b - r)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The Lie bracket, extended bilinearly from the basis.
pub fn bracket(sc: &StructureConstants, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    sc.check(a)?;
    sc.check(b)?;
    let mut out = AlgebraElement::zero(sc);
    for (i, ca) in a.terms() {
        for (j, cb) in b.terms() {
            let br = sc.basis_bracket(i, j);
            if br.is_empty() {
                continue;
            }
            let prod = ca * cb;
            for (k, ck) in br {
                *out.coeff_mut(k) += &prod.scale_int(ck);
            }
        }
    }
    Ok(out)
}

/// A linear map sending each basis vector to `±` a basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    /// `image[b] = (b', s)` means `e_b -> s e_{b'}`.
    image: Vec<(usize, i64)>,
}

impl Automorphism {
    pub fn identity(dim: usize) -> Self {
        Self { image: (0..dim).map(|b| (b, 1)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.image.len()
    }

    /// `(target, sign)` of a basis vector.
    pub fn on_basis(&self, b: usize) -> (usize, i64) {
        self.image[b]
    }

    pub fn apply_sparse(&self, v: &[(usize, i64)]) -> SparseVec {
        let mut out: SparseVec = v
            .iter()
            .map(|&(b, c)| {
                let (t, s) = self.image[b];
                (t, s * c)
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn apply(&self, a: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement { h: vec![GaussianRational::zero(); a.h.len()], x: vec![GaussianRational::zero(); a.x.len()], tag: a.tag };
        for (b, c) in a.terms() {
            let (t, s) = self.image[b];
            *out.coeff_mut(t) = c.scale_int(s);
        }
        out
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            image: other
                .image
                .iter()
                .map(|&(t, s)| {
                    let (t2, s2) = self.image[t];
                    (t2, s * s2)
                })
                .collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut image = vec![(0, 1); self.image.len()];
        for (b, &(t, s)) in self.image.iter().enumerate() {
            image[t] = (b, s);
        }
        Automorphism { image }
    }

    pub fn pow(&self, k: usize) -> Automorphism {
        (0..k).fold(Automorphism::identity(self.dim()), |acc, _| self.compose(&acc))
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(b, &(t, s))| b == t && s == 1)
    }

    /// Multiplicative order (always finite for a signed permutation).
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = self.compose(&cur);
            k += 1;
        }
        k
    }

    /// `f([e_a, e_b]) = [f e_a, f e_b]` for every pair of basis vectors.
    pub fn is_bracket_homomorphism(&self, sc: &StructureConstants) -> bool {
        let d = sc.dim();
        (0..d).into_par_iter().all(|a| {
            let (fa, sa) = self.image[a];
            (0..d).all(|b| {
                let (fb, sb) = self.image[b];
                let lhs = self.apply_sparse(&sc.basis_bracket(a, b));
                let rhs: SparseVec =
                    sc.basis_bracket(fa, fb).into_iter().map(|(k, c)| (k, c * sa * sb)).collect();
                lhs == rhs
            })
        })
    }

    pub fn commutes_with(&self, other: &Automorphism) -> bool {
        self.compose(other) == other.compose(self)
    }
}

/// The Chevalley involution `X_alpha -> -X_{-alpha}`, `H_i -> -H_i`.
pub fn chevalley_automorphism(sc: &StructureConstants) -> Automorphism {
    let rank = sc.rank();
    let image = (0..sc.dim())
        .map(|b| match sc.root_of(b) {
            None => (b, -1),
            Some(r) => (rank + sc.rs.negate(r), -1),
        })
        .collect();
    Automorphism { image }
}

pub fn chevalley_involution(sc: &StructureConstants, a: &AlgebraElement) -> AlgebraElement {
    chevalley_automorphism(sc).apply(a)
}

/// The automorphism with `X_{±alpha_i} -> X_{±psi(alpha_i)}`, `H_i -> H_{psi(i)}`.
///
/// Non-simple root vectors follow their generation parent:
/// `X_beta = [X_{alpha_i}, X_gamma] / N(alpha_i, gamma)`, so
/// `psi(X_beta) = eps_gamma N(psi alpha_i, psi gamma) / N(alpha_i, gamma) X_{psi beta}`.
/// The same sign applies to `X_{-beta}`.
pub fn diagram_automorphism(sc: &StructureConstants, psi: &DiagramAutomorphism) -> Result<Automorphism> {
    let rs = &sc.rs;
    DiagramAutomorphism::new(rs.cartan(), psi.perm().to_vec())?;
    let rank = rs.rank();
    let p = rs.num_positive();
    let roots = psi.root_permutation(rs);
    let mut sign = vec![0i64; p];
    for s in sign.iter_mut().take(rank) {
        *s = 1;
    }
    for beta in rank..p {
        let (i, gamma) = rs.parent(beta).ok_or_else(|| Error::Invariant("missing parent".into()))?;
        let num = sc.n(roots[i], roots[gamma]);
        let den = sc.n(i, gamma);
        if den == 0 || num.abs() != den.abs() {
            return Err(Error::Invariant(format!("diagram sign undefined at {}", rs.root(beta))));
        }
        sign[beta] = sign[gamma] * (num / den);
    }
    let image = (0..sc.dim())
        .map(|b| match sc.root_of(b) {
            None => (psi.perm()[b], 1),
            Some(r) => {
                let pos = if r < p { r } else { rs.negate(r) };
                (rank + roots[r], sign[pos])
            }
        })
        .collect();
    Ok(Automorphism { image })
}

pub fn diagram_action(
    sc: &StructureConstants,
    psi: &DiagramAutomorphism,
    a: &AlgebraElement,
) -> Result<AlgebraElement> {
    sc.check(a)?;
    Ok(diagram_automorphism(sc, psi)?.apply(a))
}

/// `w(psi(alpha_i)) = -alpha_i` for every simple root, `w` longest.
pub fn condition_v_holds(rs: &RootSystem, psi: &DiagramAutomorphism) -> bool {
    let w = longest_element(rs);
    let roots = psi.root_permutation(rs);
    (0..rs.rank()).all(|i| w.apply(roots[i]) == rs.negate(i))
}

/// `w* = phi ∘ psi^{-1}`, checked to satisfy `w*(X_{alpha_i}) = -X_{w alpha_i}`,
/// to have order 2, and to commute with `psi`.
pub fn weyl_involution(sc: &StructureConstants, psi: &DiagramAutomorphism) -> Result<Automorphism> {
    let rs = &sc.rs;
    if !condition_v_holds(rs, psi) {
        return Err(Error::ConditionVFails(rs.name()));
    }
    let psi_alg = diagram_automorphism(sc, psi)?;
    let phi = chevalley_automorphism(sc);
    let w_star = phi.compose(&psi_alg.inverse());

    let w = longest_element(rs);
    for i in 0..rs.rank() {
        let (t, s) = w_star.on_basis(sc.x_index(i));
        if t != sc.x_index(w.apply(i)) || s != -1 {
            return Err(Error::Invariant(format!("w*(X_alpha_{}) != -X_(w alpha_{})", i + 1, i + 1)));
        }
    }
    if w_star.order() != 2 {
        return Err(Error::Invariant(format!("w* has order {}", w_star.order())));
    }
    if !w_star.commutes_with(&psi_alg) {
        return Err(Error::Invariant("w* does not commute with psi".into()));
    }
    Ok(w_star)
}
