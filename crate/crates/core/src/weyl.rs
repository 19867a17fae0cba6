//! The longest Weyl group element and diagram automorphisms.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::root_system::{DynkinType, Family, Root, RootSystem};

/// A Weyl group element as a reduced word (0-based simple indices) together
/// with its action on the root list of the ambient root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
    action: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        Self { word: Vec::new(), action: (0..rs.len()).collect() }
    }

    /// Reduced word with 0-based indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Reduced word in 1-based (Bourbaki) node labels.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `action()[r]` is the index of `w(roots[r])`.
    pub fn action(&self) -> &[usize] {
        &self.action
    }

    pub fn apply(&self, root_idx: usize) -> usize {
        self.action[root_idx]
    }

    /// Right multiplication by `s_i`: `(w s_i)(beta) = w(s_i beta)`.
    fn push(&mut self, rs: &RootSystem, i: usize) {
        self.action = (0..rs.len()).map(|r| self.action[rs.reflect_index(i, r)]).collect();
        self.word.push(i);
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        (0..rs.num_positive()).filter(|&r| !rs.is_positive(self.action[r])).count()
    }
}

/// The element of maximal length. Built by appending the smallest simple
/// reflection `s_i` with `w(alpha_i) > 0` until none remains.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    while let Some(i) = (0..rs.rank()).find(|&i| rs.is_positive(w.apply(rs.simple_index(i)))) {
        w.push(rs, i);
    }
    w
}

/// A permutation of the simple roots preserving the Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
    order: usize,
}

impl DiagramAutomorphism {
    pub fn new(cartan: &[Vec<i64>], perm: Vec<usize>) -> Result<Self> {
        let n = cartan.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::IncompatibleAutomorphism(perm));
        }
        for i in 0..n {
            for j in 0..n {
                if cartan[perm[i]][perm[j]] != cartan[i][j] {
                    return Err(Error::IncompatibleAutomorphism(perm));
                }
            }
        }
        let mut order = 1;
        let mut cur = perm.clone();
        while cur.iter().enumerate().any(|(i, &p)| i != p) {
            cur = cur.iter().map(|&p| perm[p]).collect();
            order += 1;
        }
        Ok(Self { perm, order })
    }

    pub fn identity(rank: usize) -> Self {
        Self { perm: (0..rank).collect(), order: 1 }
    }

    /// The diagram automorphism selected by the type's twist:
    /// 1 = identity, 2 = the order-2 symmetry, 3 = triality `1 -> 3 -> 4 -> 1` on D4.
    pub fn for_twist(t: &DynkinType) -> Result<Self> {
        let n = t.rank();
        let cartan = crate::root_system::cartan_matrix(t);
        let perm: Vec<usize> = match (t.family(), t.twist()) {
            (_, 1) => (0..n).collect(),
            (Family::A, 2) => (0..n).rev().collect(),
            (Family::D, 2) => {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(n - 2, n - 1);
                p
            }
            (Family::E, 2) if n == 6 => vec![5, 1, 4, 3, 2, 0],
            (Family::D, 3) if n == 4 => vec![2, 1, 3, 0],
            _ => {
                return Err(Error::TwistUnavailable {
                    family: t.family().letter(),
                    rank: n,
                    twist: t.twist(),
                })
            }
        };
        Self::new(&cartan, perm)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        Self { perm: inv, order: self.order }
    }

    /// Image of a root: `(psi beta)_{psi(i)} = beta_i`.
    pub fn apply_root(&self, root: &Root) -> Root {
        let mut coords = vec![0; self.perm.len()];
        for (i, &c) in root.coords().iter().enumerate() {
            coords[self.perm[i]] = c;
        }
        Root::new(coords)
    }

    /// Induced permutation of the root list.
    pub fn root_permutation(&self, rs: &RootSystem) -> Vec<usize> {
        rs.roots()
            .iter()
            .map(|r| rs.index_of(self.apply_root(r).coords()).expect("diagram automorphism maps roots to roots"))
            .collect()
    }

    /// One-based node images, e.g. `[3, 2, 1]` for the A3 flip.
    pub fn perm_one_based(&self) -> Vec<usize> {
        self.perm.iter().map(|p| p + 1).collect()
    }
}

/// The permutation `i -> j` with `-w(alpha_i) = alpha_j`, `w` longest.
pub fn minus_w0(rs: &RootSystem) -> Result<DiagramAutomorphism> {
    minus_w0_of(rs, &longest_element(rs))
}

pub(crate) fn minus_w0_of(rs: &RootSystem, w: &WeylElement) -> Result<DiagramAutomorphism> {
    let perm = (0..rs.rank())
        .map(|i| {
            let j = rs.negate(w.apply(rs.simple_index(i)));
            if j < rs.rank() {
                Ok(j)
            } else {
                Err(Error::Invariant(format!("-w(alpha_{}) is not simple", i + 1)))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    DiagramAutomorphism::new(rs.cartan(), perm)
        .map_err(|e| Error::Invariant(format!("-w0 is not a diagram automorphism: {e}")))
}

/// Order of the Weyl group by closing the simple reflections as root
/// permutations. Limited to rank <= 4.
pub fn weyl_group_order(rs: &RootSystem) -> Option<usize> {
    if rs.rank() > 4 {
        return None;
    }
    let id: Vec<usize> = (0..rs.len()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for i in 0..rs.rank() {
            let h: Vec<usize> = g.iter().map(|&r| rs.reflect_index(i, r)).collect();
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    Some(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::parse_type;

    fn rs(s: &str) -> RootSystem {
        RootSystem::of_type(&parse_type(s).unwrap())
    }

    #[test]
    fn longest_element_examples() {
        let a1 = rs("A1");
        let w = longest_element(&a1);
        assert_eq!(w.word_one_based(), vec![1]);
        assert_eq!(w.apply(0), 1);

        let a2 = rs("A2");
        let w = longest_element(&a2);
        assert_eq!(w.word_one_based(), vec![1, 2, 1]);
        assert_eq!(w.apply(0), a2.negate(1));
        assert_eq!(w.apply(1), a2.negate(0));

        let b2 = rs("B2");
        let w = longest_element(&b2);
        assert_eq!(w.length(), 4);
        for r in 0..b2.len() {
            assert_eq!(w.apply(r), b2.negate(r));
        }
    }

    #[test]
    fn minus_w0_examples() {
        assert!(minus_w0(&rs("A1")).unwrap().is_identity());
        assert_eq!(minus_w0(&rs("A2")).unwrap().perm(), &[1, 0]);
        assert!(minus_w0(&rs("E7")).unwrap().is_identity());
        assert_eq!(minus_w0(&rs("E6")).unwrap().perm(), &[5, 1, 4, 3, 2, 0]);
        assert_eq!(minus_w0(&rs("D5")).unwrap().perm(), &[0, 1, 2, 4, 3]);
        assert!(minus_w0(&rs("D4")).unwrap().is_identity());
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_group_order(&rs("A2")), Some(6));
        assert_eq!(weyl_group_order(&rs("B2")), Some(8));
        assert_eq!(weyl_group_order(&rs("G2")), Some(12));
        assert_eq!(weyl_group_order(&rs("A3")), Some(24));
        assert_eq!(weyl_group_order(&rs("F4")), Some(1152));
        assert_eq!(weyl_group_order(&rs("A5")), None);
    }

    #[test]
    fn twist_automorphisms() {
        let t = parse_type("D4^3").unwrap();
        let psi = DiagramAutomorphism::for_twist(&t).unwrap();
        assert_eq!(psi.order(), 3);
        assert_eq!(psi.inverse().perm(), &[3, 1, 0, 2]);
        for s in ["A2^2", "A7^2", "D3^2", "D6^2", "E6^2"] {
            let psi = DiagramAutomorphism::for_twist(&parse_type(s).unwrap()).unwrap();
            assert_eq!(psi.order(), 2, "{s}");
        }
        assert!(DiagramAutomorphism::for_twist(&parse_type("F4").unwrap()).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_automorphisms() {
        let b3 = rs("B3");
        assert!(matches!(
            DiagramAutomorphism::new(b3.cartan(), vec![2, 1, 0]),
            Err(Error::IncompatibleAutomorphism(_))
        ));
        assert!(DiagramAutomorphism::new(b3.cartan(), vec![0, 0, 1]).is_err());
        assert!(DiagramAutomorphism::new(b3.cartan(), vec![0, 1]).is_err());
    }

    #[test]
    fn diagram_automorphism_permutes_roots() {
        let e6 = rs("E6");
        let psi = DiagramAutomorphism::for_twist(&parse_type("E6^2").unwrap()).unwrap();
        let p = psi.root_permutation(&e6);
        let mut sorted = p.clone();
        sorted.sort();
        assert_eq!(sorted, (0..e6.len()).collect::<Vec<_>>());
    }
}
