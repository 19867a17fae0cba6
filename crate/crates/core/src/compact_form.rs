//! The compact real form spanned by
//! `Y_a = X_a - X_{-a}`, `Z_a = i(X_a + X_{-a})` (`a > 0`) and `W_j = i H_j`,
//! with exact checks that it is a real subalgebra, that the Killing form is
//! negative definite on it, and that it is the fixed set of the antilinear
//! involution `a -> phi(conj(a))`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{is_negative_definite, ratio, GaussianRational, Rational, SymMatrix};
use crate::chevalley::{chevalley_automorphism, AlgebraElement, StructureConstants};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompactLabel {
    /// `Y_alpha` for the positive root with this index.
    Y(usize),
    /// `Z_alpha` for the positive root with this index.
    Z(usize),
    /// `W_j = i H_j` for the simple index `j`.
    W(usize),
}

impl fmt::Display for CompactLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompactLabel::Y(r) => write!(f, "Y#{r}"),
            CompactLabel::Z(r) => write!(f, "Z#{r}"),
            CompactLabel::W(j) => write!(f, "W{}", j + 1),
        }
    }
}

type Terms = Vec<(usize, GaussianRational)>;

/// Basis of the compact form: `(Y_a, Z_a)` for each positive root in root
/// order, then `W_1 .. W_rank`.
#[derive(Clone, Debug)]
pub struct CompactBasis {
    elements: Vec<AlgebraElement>,
    labels: Vec<CompactLabel>,
    terms: Vec<Terms>,
}

impl CompactBasis {
    pub fn elements(&self) -> &[AlgebraElement] {
        &self.elements
    }

    pub fn labels(&self) -> &[CompactLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Position of a label in the basis.
    pub fn position(&self, label: CompactLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

pub fn compact_basis(sc: &StructureConstants) -> CompactBasis {
    let rs = sc.rs();
    let one = GaussianRational::one();
    let i = GaussianRational::i();
    let mut labels = Vec::new();
    let mut terms: Vec<Terms> = Vec::new();
    for a in 0..rs.num_positive() {
        let (xp, xm) = (sc.x_index(a), sc.x_index(rs.negate(a)));
        labels.push(CompactLabel::Y(a));
        terms.push(vec![(xp, one.clone()), (xm, -&one)]);
        labels.push(CompactLabel::Z(a));
        terms.push(vec![(xp, i.clone()), (xm, i.clone())]);
    }
    for j in 0..rs.rank() {
        labels.push(CompactLabel::W(j));
        terms.push(vec![(sc.h_index(j), i.clone())]);
    }
    let elements = terms.iter().map(|t| AlgebraElement::from_terms(sc, t.iter().cloned())).collect();
    CompactBasis { elements, labels, terms }
}

/// `K[a][b] = trace(ad e_a ∘ ad e_b)` over the Chevalley basis, row-major.
pub fn killing_chevalley(sc: &StructureConstants) -> Vec<i64> {
    let d = sc.dim();
    let rows: Vec<Vec<i64>> = (0..d)
        .into_par_iter()
        .map(|a| {
            (0..d)
                .map(|b| {
                    (0..d)
                        .map(|k| {
                            let inner = sc.basis_bracket(b, k);
                            sc.bracket_basis_sparse(a, &inner)
                                .into_iter()
                                .find(|&(idx, _)| idx == k)
                                .map_or(0, |(_, c)| c)
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    rows.concat()
}

/// Gram matrix of the Killing form on a [`CompactBasis`].
#[derive(Clone, Debug)]
pub struct KillingMatrix {
    pub gram: SymMatrix,
}

pub fn killing_gram(sc: &StructureConstants, cb: &CompactBasis) -> Result<KillingMatrix> {
    let k = killing_chevalley(sc);
    killing_gram_with(sc, cb, &k)
}

fn killing_gram_with(sc: &StructureConstants, cb: &CompactBasis, k: &[i64]) -> Result<KillingMatrix> {
    let d = sc.dim();
    let n = cb.len();
    let rows: Vec<Result<Vec<Rational>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = GaussianRational::zero();
                    for (a, ca) in &cb.terms[i] {
                        for (b, cbv) in &cb.terms[j] {
                            let kab = k[a * d + b];
                            if kab != 0 {
                                acc += &(ca * cbv).scale_int(kab);
                            }
                        }
                    }
                    if !acc.is_real() {
                        return Err(Error::Invariant(format!(
                            "Killing form B({}, {}) = {acc} is not real",
                            cb.labels[i], cb.labels[j]
                        )));
                    }
                    Ok(acc.re)
                })
                .collect()
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(KillingMatrix { gram: SymMatrix::from_rows(rows)? })
}

/// Coordinates of a Chevalley-basis vector over the compact basis:
/// `a X_r + b X_{-r} = (a - b)/2 Y_r - i(a + b)/2 Z_r` and `h H_j = -i h W_j`.
pub fn compact_coordinates(
    sc: &StructureConstants,
    cb: &CompactBasis,
    v: &BTreeMap<usize, GaussianRational>,
) -> Vec<GaussianRational> {
    let rs = sc.rs();
    let p = rs.num_positive();
    let zero = GaussianRational::zero();
    let half = GaussianRational::real(ratio(1, 2));
    let minus_half_i = GaussianRational::new(Rational::zero(), ratio(-1, 2));
    let minus_i = GaussianRational::new(Rational::zero(), ratio(-1, 1));
    let mut out = vec![GaussianRational::zero(); cb.len()];
    for r in 0..p {
        let a = v.get(&sc.x_index(r)).unwrap_or(&zero);
        let b = v.get(&sc.x_index(rs.negate(r))).unwrap_or(&zero);
        if a.is_zero() && b.is_zero() {
            continue;
        }
        out[2 * r] = &(a - b) * &half;
        out[2 * r + 1] = &(a + b) * &minus_half_i;
    }
    for j in 0..rs.rank() {
        if let Some(h) = v.get(&sc.h_index(j)) {
            out[2 * p + j] = h * &minus_i;
        }
    }
    out
}

fn bracket_terms(sc: &StructureConstants, u: &Terms, v: &Terms) -> BTreeMap<usize, GaussianRational> {
    let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
    for (a, ca) in u {
        for (b, cb) in v {
            let br = sc.basis_bracket(*a, *b);
            if br.is_empty() {
                continue;
            }
            let prod = ca * cb;
            for (k, ck) in br {
                *acc.entry(k).or_insert_with(GaussianRational::zero) += &prod.scale_int(ck);
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// Every `[u_i, u_j]` has real coordinates over the compact basis.
pub fn check_closure(sc: &StructureConstants, cb: &CompactBasis) -> bool {
    let n = cb.len();
    (0..n).into_par_iter().all(|i| {
        ((i + 1)..n).all(|j| {
            let br = bracket_terms(sc, &cb.terms[i], &cb.terms[j]);
            compact_coordinates(sc, cb, &br).iter().all(GaussianRational::is_real)
        })
    })
}

/// `theta(a) = phi(conj(a))` fixes every compact basis element.
pub fn antilinear_involution(sc: &StructureConstants, a: &AlgebraElement) -> AlgebraElement {
    chevalley_automorphism(sc).apply(&a.conj())
}

pub fn check_antilinear_fixed(sc: &StructureConstants, cb: &CompactBasis) -> bool {
    let phi = chevalley_automorphism(sc);
    cb.elements.iter().all(|u| phi.apply(&u.conj()) == *u)
}

/// Outcome of the three exact checks on the compact form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactCertificate {
    #[serde(rename = "type")]
    pub r#type: String,
    #[serde(skip)]
    pub dimension: usize,
    pub closure: bool,
    pub negative_definite: bool,
    pub antilinear_fixed: bool,
    /// Leading diagonal entries of the Killing Gram matrix, as exact rationals.
    pub gram_diagonal_sample: Vec<String>,
}

impl CompactCertificate {
    pub fn passed(&self) -> bool {
        self.closure && self.negative_definite && self.antilinear_fixed
    }
}

const GRAM_SAMPLE: usize = 8;

/// Runs closure, negative definiteness and antilinear fixed-point checks.
/// Failed checks are recorded in the certificate; an `Err` means a
/// structural invariant broke (such as a non-real Killing entry).
pub fn certify_compact(sc: &StructureConstants) -> Result<CompactCertificate> {
    let cb = compact_basis(sc);
    let km = killing_gram(sc, &cb)?;
    let diag = km.gram.diagonal();
    Ok(CompactCertificate {
        r#type: sc.rs().name(),
        dimension: cb.len(),
        closure: check_closure(sc, &cb),
        negative_definite: is_negative_definite(&km.gram),
        antilinear_fixed: check_antilinear_fixed(sc, &cb),
        gram_diagonal_sample: diag.iter().take(GRAM_SAMPLE).map(|q| q.to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::chevalley::build_constants;
    use crate::root_system::{parse_type, RootSystem};

    fn sc(s: &str) -> StructureConstants {
        build_constants(&RootSystem::of_type(&parse_type(s).unwrap())).unwrap()
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(compact_basis(&sc("A1")).len(), 3);
        assert_eq!(compact_basis(&sc("A2")).len(), 8);
        assert_eq!(compact_basis(&sc("G2")).len(), 14);
    }

    #[test]
    fn a1_gram_is_minus_eight() {
        let s = sc("A1");
        let cb = compact_basis(&s);
        assert_eq!(cb.labels(), &[CompactLabel::Y(0), CompactLabel::Z(0), CompactLabel::W(0)]);
        let g = killing_gram(&s, &cb).unwrap().gram;
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(*g.get(i, j), if i == j { rat(-8) } else { rat(0) });
            }
        }
    }

    #[test]
    fn sl2_chevalley_killing() {
        let s = sc("A1");
        let k = killing_chevalley(&s);
        // order H, X_a, X_-a
        assert_eq!(k, vec![8, 0, 0, 0, 0, 4, 0, 4, 0]);
    }

    #[test]
    fn y_and_w_are_orthogonal() {
        let s = sc("B3");
        let cb = compact_basis(&s);
        let g = killing_gram(&s, &cb).unwrap().gram;
        for r in 0..s.rs().num_positive() {
            for j in 0..3 {
                let y = cb.position(CompactLabel::Y(r)).unwrap();
                let w = cb.position(CompactLabel::W(j)).unwrap();
                assert!(g.get(y, w).is_zero());
            }
        }
    }

    #[test]
    fn theta_fixes_z() {
        let s = sc("A2");
        let cb = compact_basis(&s);
        for u in cb.elements() {
            assert_eq!(antilinear_involution(&s, u), *u);
        }
        // but not the complex multiple i*Y
        let iy = cb.elements()[0].scale(&GaussianRational::i());
        assert_ne!(antilinear_involution(&s, &iy), iy);
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = sc("A2");
        let cb = compact_basis(&s);
        for (idx, t) in cb.terms.iter().enumerate() {
            let v: BTreeMap<usize, GaussianRational> = t.iter().cloned().collect();
            let c = compact_coordinates(&s, &cb, &v);
            for (k, ck) in c.iter().enumerate() {
                let expect = if k == idx { GaussianRational::one() } else { GaussianRational::zero() };
                assert_eq!(*ck, expect);
            }
        }
    }

    #[test]
    fn certify_small_types() {
        for t in ["A1", "B2", "G2", "A3"] {
            let c = certify_compact(&sc(t)).unwrap();
            assert!(c.passed(), "{t}: {c:?}");
        }
        let c = certify_compact(&sc("A1")).unwrap();
        assert_eq!(c.gram_diagonal_sample, vec!["-8", "-8", "-8"]);
    }

    #[test]
    fn split_form_is_not_compact() {
        // span of X_a, X_-a, H over the reals: the Killing form is indefinite
        let s = sc("A1");
        let k = killing_chevalley(&s);
        let m = SymMatrix::from_rows(
            (0..3).map(|i| (0..3).map(|j| rat(k[i * 3 + j])).collect()).collect(),
        )
        .unwrap();
        assert!(!is_negative_definite(&m));
    }
}
