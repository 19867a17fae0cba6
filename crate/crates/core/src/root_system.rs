//! Dynkin types, Cartan matrices and root systems generated by simple
//! reflections.
//!
//! Nodes use Bourbaki numbering. Cartan entries are
//! `A[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`,
//! so for G2 (`alpha_1` short) the matrix is `[[2, -1], [-3, 2]]`.
//! Roots are integer vectors in the basis of simple roots.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Family::ALL.into_iter().find(|f| f.letter() == c)
    }

    /// Human-readable description of the admissible ranks.
    pub fn rank_range(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B => "n >= 2",
            Family::C => "n >= 3",
            Family::D => "n >= 3",
            Family::E => "n in {6, 7, 8}",
            Family::F => "n = 4",
            Family::G => "n = 2",
        }
    }

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C | Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Orders of the diagram automorphisms used as twists for this rank.
    pub fn twists(self, rank: usize) -> &'static [u8] {
        match (self, rank) {
            (Family::A, n) if n >= 2 => &[1, 2],
            (Family::D, 4) => &[1, 2, 3],
            (Family::D, _) => &[1, 2],
            (Family::E, 6) => &[1, 2],
            _ => &[1],
        }
    }
}

/// A simple type together with the order of a diagram twist
/// (1 = split, 2 = quasi-split outer, 3 = triality on D4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinType {
    family: Family,
    rank: usize,
    twist: u8,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize, twist: u8) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
                allowed: family.rank_range(),
            });
        }
        if !family.twists(rank).contains(&twist) {
            return Err(Error::TwistUnavailable { family: family.letter(), rank, twist });
        }
        Ok(Self { family, rank, twist })
    }

    pub fn split(family: Family, rank: usize) -> Result<Self> {
        Self::new(family, rank, 1)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn twist(&self) -> u8 {
        self.twist
    }

    /// Same type with the twist dropped.
    pub fn untwisted(&self) -> Self {
        Self { twist: 1, ..*self }
    }

    /// `A3`, `B2` ... without the twist suffix.
    pub fn base_name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    /// Every valid `(family, rank <= max_rank, twist)` in `(family, rank, twist)` order.
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if !family.admits_rank(rank) {
                    continue;
                }
                for &twist in family.twists(rank) {
                    out.push(DynkinType { family, rank, twist });
                }
            }
        }
        out
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)?;
        if self.twist != 1 {
            write!(f, "^{}", self.twist)?;
        }
        Ok(())
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_type(s)
    }
}

impl Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `FAMILY RANK [^TWIST]`, e.g. `A2`, `D4^3`, `E6^2`.
pub fn parse_type(text: &str) -> Result<DynkinType> {
    let malformed = || Error::MalformedType(text.to_string());
    let text_trim = text.trim();
    let mut chars = text_trim.chars();
    let family = chars.next().and_then(Family::from_letter).ok_or_else(malformed)?;
    let rest = chars.as_str();
    let (rank_part, twist_part) = match rest.split_once('^') {
        Some((r, t)) => (r, Some(t)),
        None => (rest, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(rank_part) {
        return Err(malformed());
    }
    let rank: usize = rank_part.parse().map_err(|_| malformed())?;
    let twist: u8 = match twist_part {
        None => 1,
        Some(t) if digits(t) => t.parse().map_err(|_| malformed())?,
        Some(_) => return Err(malformed()),
    };
    DynkinType::new(family, rank, twist)
}

/// Square integer matrix with `A[i][j] = <alpha_i, alpha_j^vee>`.
pub type CartanMatrix = Vec<Vec<i64>>;

/// The standard Cartan matrix of the (untwisted) type, Bourbaki numbering.
pub fn cartan_matrix(t: &DynkinType) -> CartanMatrix {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family() {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i - 1, i);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i - 1, i);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => link(0, 1),
    }
    match t.family() {
        // alpha_n short
        Family::B => a[n - 2][n - 1] = -2,
        // alpha_n long
        Family::C => a[n - 1][n - 2] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        Family::F => a[1][2] = -2,
        // alpha_1 short
        Family::G => a[1][0] = -3,
        _ => {}
    }
    a
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Self { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coords.iter().all(|&c| c <= 0) && self.coords.iter().any(|&c| c < 0)
    }

    pub fn neg(&self) -> Root {
        Root { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, o: &Root) -> Root {
        Root { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scaled_add(&self, k: i64, o: &Root) -> Root {
        Root { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + k * b).collect() }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Positive-root order: by height, then lexicographically decreasing
/// coordinates, so that the simple roots come first in node order.
pub fn positive_order(a: &Root, b: &Root) -> Ordering {
    a.height().cmp(&b.height()).then_with(|| b.coords.cmp(&a.coords))
}

/// Minimal positive integers `d` with `A[i][j] d_j = A[j][i] d_i`;
/// `d_i = (alpha_i, alpha_i) / 2` with short roots normalised to 1.
pub fn symmetrizer(cartan: &CartanMatrix) -> Result<Vec<i64>> {
    let n = cartan.len();
    // d_i as fractions num/den, propagated along the diagram.
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    d[0] = Some((1, 1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (num, den) = d[i].unwrap();
        for j in 0..n {
            if i == j || cartan[i][j] == 0 {
                continue;
            }
            // A[i][j] d_j = A[j][i] d_i
            let cand = reduce(num * cartan[j][i], den * cartan[i][j]);
            match d[j] {
                None => {
                    d[j] = Some(cand);
                    queue.push_back(j);
                }
                Some(existing) if existing != cand => {
                    return Err(Error::NotCartan("matrix is not symmetrizable".into()));
                }
                Some(_) => {}
            }
        }
    }
    if d.iter().any(Option::is_none) {
        return Err(Error::NotCartan("Dynkin diagram is not connected".into()));
    }
    let d: Vec<(i64, i64)> = d.into_iter().map(Option::unwrap).collect();
    let l = d.iter().fold(1, |acc, &(_, den)| lcm(acc, den));
    let ints: Vec<i64> = d.iter().map(|&(num, den)| num * (l / den)).collect();
    let g = ints.iter().fold(0, |acc, &v| gcd(acc, v));
    Ok(ints.into_iter().map(|v| v / g).collect())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn reduce(num: i64, den: i64) -> (i64, i64) {
    let g = gcd(num, den);
    let s = if den < 0 { -1 } else { 1 };
    (s * num / g, s * den / g)
}

fn validate_cartan(cartan: &CartanMatrix) -> Result<()> {
    let n = cartan.len();
    if n == 0 {
        return Err(Error::NotCartan("empty matrix".into()));
    }
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotCartan(format!("row {i} has length {}", row.len())));
        }
        if row[i] != 2 {
            return Err(Error::NotCartan(format!("diagonal entry {i} is {}", row[i])));
        }
        for (j, &v) in row.iter().enumerate() {
            if i == j {
                continue;
            }
            if !(-3..=0).contains(&v) {
                return Err(Error::NotCartan(format!("entry ({i},{j}) = {v}")));
            }
            if (v == 0) != (cartan[j][i] == 0) {
                return Err(Error::NotCartan(format!("entries ({i},{j}) and ({j},{i}) disagree on zero")));
            }
        }
    }
    Ok(())
}

/// A finite reduced irreducible root system with its generation data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    dynkin: Option<DynkinType>,
    cartan: CartanMatrix,
    /// `(alpha_i, alpha_i) / 2`.
    sym: Vec<i64>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    /// `(i, gamma)` with `beta = alpha_i + gamma` for non-simple positive `beta`.
    parents: Vec<Option<(usize, usize)>>,
    /// `reflections[i][r]` is the index of `s_i(roots[r])`.
    reflections: Vec<Vec<usize>>,
    /// `sums[a * len + b]` is the index of `roots[a] + roots[b]` when a root.
    sums: Vec<Option<u32>>,
}

impl RootSystem {
    /// Root system of a Dynkin type; the twist is ignored.
    pub fn of_type(t: &DynkinType) -> RootSystem {
        let mut rs = generate_roots(&cartan_matrix(t)).expect("standard Cartan matrix is valid");
        rs.dynkin = Some(t.untwisted());
        rs
    }

    pub fn dynkin(&self) -> Option<DynkinType> {
        self.dynkin
    }

    pub fn name(&self) -> String {
        self.dynkin.map(|t| t.base_name()).unwrap_or_else(|| "custom".into())
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    /// All roots: positives first in [`positive_order`], then their negatives
    /// at offset [`num_positive`](Self::num_positive).
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.num_positive()
    }

    /// Index of `alpha_i` (equal to `i`).
    pub fn simple_index(&self, i: usize) -> usize {
        debug_assert!(i < self.rank());
        i
    }

    /// Index of `-roots[idx]`.
    pub fn negate(&self, idx: usize) -> usize {
        let p = self.num_positive();
        if idx < p {
            idx + p
        } else {
            idx - p
        }
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn find(&self, root: &Root) -> Result<usize> {
        self.index_of(root.coords()).ok_or_else(|| Error::UnknownRoot(root.coords().to_vec()))
    }

    /// Index of `roots[a] + roots[b]` if that is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a * self.roots.len() + b].map(|v| v as usize)
    }

    /// Parent pair `(i, gamma)` with `roots[idx] = alpha_i + roots[gamma]`,
    /// `i` minimal, for non-simple positive roots.
    pub fn parent(&self, idx: usize) -> Option<(usize, usize)> {
        self.parents.get(idx).copied().flatten()
    }

    /// Index of `s_i(roots[idx])`.
    pub fn reflect_index(&self, i: usize, idx: usize) -> usize {
        self.reflections[i][idx]
    }

    /// `<beta, alpha_i^vee>` for a coordinate vector `beta`.
    pub fn simple_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().enumerate().map(|(j, b)| b * self.cartan[j][i]).sum()
    }

    /// Symmetric form `(x, y)` normalised so short simple roots have length^2 2.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for j in 0..n {
            if x[j] == 0 {
                continue;
            }
            for k in 0..n {
                acc += x[j] * self.cartan[j][k] * self.sym[k] * y[k];
            }
        }
        acc
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)` for root indices.
    pub fn pairing(&self, beta: usize, alpha: usize) -> i64 {
        let a = self.roots[alpha].coords();
        let b = self.roots[beta].coords();
        let num = 2 * self.inner(b, a);
        let den = self.inner(a, a);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// `(roots[idx], roots[idx]) / 2`, in units where short roots give 1.
    pub fn half_norm(&self, idx: usize) -> i64 {
        let c = self.roots[idx].coords();
        self.inner(c, c) / 2
    }

    /// Coordinates of the coroot `alpha^vee` in the basis of simple coroots.
    pub fn coroot_coords(&self, idx: usize) -> Vec<i64> {
        let h = self.half_norm(idx);
        self.roots[idx]
            .coords()
            .iter()
            .zip(&self.sym)
            .map(|(c, d)| {
                debug_assert_eq!((c * d) % h, 0);
                c * d / h
            })
            .collect()
    }

    /// The `alpha`-string through `beta`: `(p, q)` with `beta - p alpha, ...,
    /// beta + q alpha` all roots.
    pub fn root_string(&self, alpha: usize, beta: usize) -> Result<(u32, u32)> {
        if alpha == beta || alpha == self.negate(beta) {
            return Err(Error::ProportionalRoots);
        }
        let a = &self.roots[alpha];
        let b = &self.roots[beta];
        let walk = |sign: i64| {
            let mut k = 0u32;
            while self.index_of(b.scaled_add(sign * (k as i64 + 1), a).coords()).is_some() {
                k += 1;
            }
            k
        };
        Ok((walk(-1), walk(1)))
    }

    /// Serializable summary `{type, cartan, positive_roots}`.
    pub fn summary(&self) -> RootSystemSummary {
        RootSystemSummary {
            r#type: self.name(),
            cartan: self.cartan.clone(),
            positive_roots: self.positive_roots().iter().map(|r| r.coords().to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RootSystemSummary {
    #[serde(rename = "type")]
    pub r#type: String,
    pub cartan: CartanMatrix,
    pub positive_roots: Vec<Vec<i64>>,
}

/// `roots[root]` reflected in `alpha_i`: `beta - <beta, alpha_i^vee> alpha_i`.
pub fn reflect(rs: &RootSystem, i: usize, beta: &Root) -> Root {
    let k = rs.simple_pairing(beta.coords(), i);
    beta.scaled_add(-k, &Root::simple(rs.rank(), i))
}

/// Closes the simple roots under simple reflections.
pub fn generate_roots(cartan: &CartanMatrix) -> Result<RootSystem> {
    validate_cartan(cartan)?;
    let sym = symmetrizer(cartan)?;
    let n = cartan.len();
    let limit = 16 * n * n;

    let pairing = |beta: &[i64], i: usize| -> i64 {
        beta.iter().enumerate().map(|(j, b)| b * cartan[j][i]).sum()
    };

    let mut found: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        found.insert(e.clone(), ());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let k = pairing(&beta, i);
            if k == 0 {
                continue;
            }
            let mut img = beta.clone();
            img[i] -= k;
            if found.contains_key(&img) {
                continue;
            }
            let pos = img.iter().all(|&c| c >= 0);
            let neg = img.iter().all(|&c| c <= 0);
            if !pos && !neg {
                return Err(Error::NotCartan(format!("generated mixed-sign vector {img:?}")));
            }
            found.insert(img.clone(), ());
            if found.len() > limit {
                return Err(Error::NotCartan(format!(
                    "root generation exceeded {limit} candidates without closure"
                )));
            }
            queue.push_back(img);
        }
    }

    let mut positives: Vec<Root> = found
        .into_keys()
        .filter(|c| c.iter().all(|&v| v >= 0))
        .map(Root::new)
        .collect();
    positives.sort_by(positive_order);
    let negatives: Vec<Root> = positives.iter().map(Root::neg).collect();
    if negatives.iter().any(|r| !r.is_negative()) {
        return Err(Error::Invariant("negative root with wrong sign".into()));
    }
    let roots: Vec<Root> = positives.into_iter().chain(negatives).collect();
    let index: HashMap<Vec<i64>, usize> =
        roots.iter().enumerate().map(|(i, r)| (r.coords().to_vec(), i)).collect();
    if index.len() != roots.len() {
        return Err(Error::NotCartan("root set is not closed under negation".into()));
    }

    let len = roots.len();
    let p = len / 2;
    let mut parents = vec![None; p];
    for (idx, beta) in roots[..p].iter().enumerate() {
        if beta.height() == 1 {
            continue;
        }
        for i in 0..n {
            let gamma = beta.sub(&Root::simple(n, i));
            if let Some(&g) = index.get(gamma.coords()) {
                if g < p {
                    parents[idx] = Some((i, g));
                    break;
                }
            }
        }
        if parents[idx].is_none() {
            return Err(Error::Invariant(format!("positive root {beta} has no parent")));
        }
    }

    let mut reflections = vec![vec![0usize; len]; n];
    for (i, table) in reflections.iter_mut().enumerate() {
        for (idx, beta) in roots.iter().enumerate() {
            let k = pairing(beta.coords(), i);
            let mut img = beta.coords().to_vec();
            img[i] -= k;
            table[idx] = *index
                .get(&img)
                .ok_or_else(|| Error::Invariant(format!("s_{i} maps {beta} outside the roots")))?;
        }
    }

    let mut sums = vec![None; len * len];
    for a in 0..len {
        for b in 0..len {
            let s = roots[a].add(&roots[b]);
            sums[a * len + b] = index.get(s.coords()).map(|&v| v as u32);
        }
    }

    Ok(RootSystem { dynkin: None, cartan: cartan.clone(), sym, roots, index, parents, reflections, sums })
}
