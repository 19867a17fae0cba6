//! Independent oracles: brute-force enumeration, cofactor minors, dense
//! adjoint matrices, closed-form root counts.

use lieform::arith::{rat, Rational, SymMatrix};
use lieform::compact_form::{compact_basis, killing_chevalley, killing_gram};
use lieform::root_system::{Family, RootSystem};
use lieform::weyl::weyl_group_order;
use lieform::{bracket, build_constants, is_negative_definite, parse_type, AlgebraElement, DynkinType, GaussianRational};
use num_traits::{Signed, Zero};

fn rs(s: &str) -> RootSystem {
    RootSystem::of_type(&parse_type(s).unwrap())
}

fn closed_form_positive(t: &DynkinType) -> usize {
    let n = t.rank();
    match t.family() {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => [36, 63, 120][n - 6],
        Family::F => 24,
        Family::G => 6,
    }
}

#[test]
fn positive_root_counts_match_closed_forms() {
    for t in DynkinType::all_up_to(8).into_iter().filter(|t| t.twist() == 1) {
        let rs = RootSystem::of_type(&t);
        assert_eq!(rs.num_positive(), closed_form_positive(&t), "{t}");
        for r in rs.roots() {
            assert!(r.is_positive() || r.is_negative(), "{t}: mixed sign {r}");
        }
        for idx in 0..rs.len() {
            assert_eq!(rs.pairing(idx, idx), 2);
            assert!(rs.index_of(rs.root(rs.negate(idx)).coords()).is_some());
        }
    }
}

#[test]
fn e8_count_matches_lattice_enumeration() {
    // norm-2 vectors of the E8 lattice: D8 part plus the half-integer coset
    let mut count = 0;
    for code in 0..3usize.pow(8) {
        let v: Vec<i64> = (0..8).map(|k| (code / 3usize.pow(k)) as i64 % 3 - 1).collect();
        if v.iter().map(|x| x * x).sum::<i64>() == 2 && v.iter().sum::<i64>() % 2 == 0 {
            count += 1;
        }
    }
    for signs in 0..256u32 {
        if signs.count_ones() % 2 == 0 {
            count += 1;
        }
    }
    assert_eq!(count, 240);
    assert_eq!(rs("E8").len(), count);
}

#[test]
fn root_string_identity() {
    for name in ["B4", "C4", "F4", "G2", "D5", "E6"] {
        let rs = rs(name);
        for a in 0..rs.len() {
            for b in 0..rs.len() {
                if a == b || a == rs.negate(b) {
                    continue;
                }
                let (p, q) = rs.root_string(a, b).unwrap();
                assert_eq!(p as i64 - q as i64, rs.pairing(b, a), "{name}");
            }
        }
    }
}

#[test]
fn a2_closure_by_hand() {
    let a2 = rs("A2");
    let pos: Vec<Vec<i64>> = a2.positive_roots().iter().map(|r| r.coords().to_vec()).collect();
    assert_eq!(pos, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
}

#[test]
fn weyl_group_orders_by_orbit_closure() {
    assert_eq!(weyl_group_order(&rs("A2")), Some(6));
    assert_eq!(weyl_group_order(&rs("B2")), Some(8));
    assert_eq!(weyl_group_order(&rs("G2")), Some(12));
    assert_eq!(weyl_group_order(&rs("B3")), Some(48));
    assert_eq!(weyl_group_order(&rs("D4")), Some(192));
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect()).collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn sylvester_negative_definite(m: &SymMatrix) -> bool {
    (1..=m.dim()).all(|k| {
        let sub: Vec<Vec<Rational>> = (0..k).map(|i| (0..k).map(|j| m.get(i, j).clone()).collect()).collect();
        let d = det(&sub);
        if k % 2 == 0 {
            d.is_positive()
        } else {
            d.is_negative()
        }
    })
}

fn grid_negative(m: &SymMatrix) -> bool {
    let n = m.dim();
    let total = 5usize.pow(n as u32);
    (1..total).all(|code| {
        let x: Vec<Rational> = (0..n).map(|k| rat((code / 5usize.pow(k as u32)) as i64 % 5 - 2)).collect();
        x.iter().all(Zero::is_zero) || m.quadratic_form(&x).is_negative()
    })
}

#[test]
fn definiteness_example_cross_checks() {
    let m = SymMatrix::from_i64_rows(&[&[-1, 2], &[2, -1]]).unwrap();
    assert!(!is_negative_definite(&m));
    assert!(!sylvester_negative_definite(&m));
    assert!(!grid_negative(&m));
    let m = SymMatrix::from_i64_rows(&[&[-2, 1], &[1, -2]]).unwrap();
    assert!(is_negative_definite(&m) && sylvester_negative_definite(&m) && grid_negative(&m));
}

#[test]
fn gram_blocks_agree_with_minors() {
    // leading principal blocks of real Killing Gram matrices, dim <= 6
    for name in ["A1", "A2", "B2", "G2"] {
        let sc = build_constants(&rs(name)).unwrap();
        let cb = compact_basis(&sc);
        let g = killing_gram(&sc, &cb).unwrap().gram;
        for k in 1..=g.dim().min(6) {
            let sub = SymMatrix::from_rows((0..k).map(|i| (0..k).map(|j| g.get(i, j).clone()).collect()).collect()).unwrap();
            assert_eq!(is_negative_definite(&sub), sylvester_negative_definite(&sub), "{name} k={k}");
            assert!(is_negative_definite(&sub));
            if k <= 4 {
                assert!(grid_negative(&sub));
            }
        }
        // the W block (Cartan part) is a full rank x rank block
        let p = sc.rs().num_positive();
        let r = sc.rank();
        let w = SymMatrix::from_rows(
            (0..r).map(|i| (0..r).map(|j| g.get(2 * p + i, 2 * p + j).clone()).collect()).collect(),
        )
        .unwrap();
        assert!(sylvester_negative_definite(&w) && is_negative_definite(&w));
    }
}

/// Dense `ad u` over the Chevalley basis via the general bracket.
fn dense_ad(sc: &lieform::StructureConstants, u: &AlgebraElement) -> Vec<Vec<GaussianRational>> {
    let d = sc.dim();
    let cols: Vec<AlgebraElement> =
        (0..d).map(|k| bracket(sc, u, &AlgebraElement::basis(sc, k)).unwrap()).collect();
    (0..d).map(|i| (0..d).map(|k| cols[k].coeff(i).clone()).collect()).collect()
}

fn trace_product(a: &[Vec<GaussianRational>], b: &[Vec<GaussianRational>]) -> GaussianRational {
    let d = a.len();
    let mut acc = GaussianRational::zero();
    for i in 0..d {
        for k in 0..d {
            if !a[i][k].is_zero() && !b[k][i].is_zero() {
                acc += &(&a[i][k] * &b[k][i]);
            }
        }
    }
    acc
}

#[test]
fn killing_gram_matches_dense_traces() {
    for name in ["A1", "A2", "B2", "G2"] {
        let sc = build_constants(&rs(name)).unwrap();
        let cb = compact_basis(&sc);
        let g = killing_gram(&sc, &cb).unwrap().gram;
        let ads: Vec<_> = cb.elements().iter().map(|u| dense_ad(&sc, u)).collect();
        for i in 0..cb.len() {
            for j in 0..cb.len() {
                let t = trace_product(&ads[i], &ads[j]);
                assert!(t.is_real(), "{name}");
                assert_eq!(&t.re, g.get(i, j), "{name} ({i},{j})");
            }
        }
    }
}

#[test]
fn killing_form_is_invariant() {
    use rand::{Rng, SeedableRng};
    for name in ["B3", "G2", "E6"] {
        let sc = build_constants(&rs(name)).unwrap();
        let k = killing_chevalley(&sc);
        let d = sc.dim();
        let b = |u: &[(usize, i64)], v: &[(usize, i64)]| -> i64 {
            let mut acc = 0;
            for &(i, ci) in u {
                for &(j, cj) in v {
                    acc += ci * cj * k[i * d + j];
                }
            }
            acc
        };
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..2000 {
            let (x, y, z) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            let xy = sc.basis_bracket(x, y);
            let xz = sc.basis_bracket(x, z);
            assert_eq!(b(&xy, &[(z, 1)]) + b(&[(y, 1)], &xz), 0, "{name}");
        }
        for i in 0..d {
            for j in 0..d {
                assert_eq!(k[i * d + j], k[j * d + i]);
            }
        }
    }
}

#[test]
fn compact_basis_is_linearly_independent() {
    // rank of the coordinate matrix over Q(i) via the compact-coordinate map:
    // every element maps to a distinct unit vector
    for name in ["A2", "C3", "G2"] {
        let sc = build_constants(&rs(name)).unwrap();
        let cb = compact_basis(&sc);
        assert_eq!(cb.len(), sc.dim());
        for (idx, u) in cb.elements().iter().enumerate() {
            let v = u.terms().map(|(b, c)| (b, c.clone())).collect();
            let coords = lieform::compact_form::compact_coordinates(&sc, &cb, &v);
            for (k, c) in coords.iter().enumerate() {
                assert_eq!(c.is_zero(), k != idx, "{name}");
            }
        }
    }
}

#[test]
fn e8_compact_dimension() {
    let sc = build_constants(&rs("E8")).unwrap();
    assert_eq!(compact_basis(&sc).len(), 248);
}
