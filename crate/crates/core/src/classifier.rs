//! Which (type, twist) pairs have `w ∘ psi = -1` on the roots, and the
//! labels that are equivalent to it: Cartan-type automorphism, compact
//! inner form, compact Cartan subgroup, discrete series.

use rayon::prelude::*;
use serde::Serialize;

use crate::chevalley::{build_constants, condition_v_holds, weyl_involution};
use crate::compact_form::{certify_compact, CompactCertificate};
use crate::error::{Error, Result};
use crate::root_system::{DynkinType, Family, RootSystem};
use crate::weyl::DiagramAutomorphism;

/// Fields copied from `condition_v` rather than computed.
pub const DERIVED_FIELDS: [&str; 3] = ["cartan_type", "compact_cartan", "discrete_series"];

/// Constructive evidence for a compact inner form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(flatten)]
    pub certificate: CompactCertificate,
    /// Order of `w* = phi ∘ psi^{-1}`; always 2 when present.
    pub weyl_involution_order: usize,
    pub weyl_involution_commutes_with_psi: bool,
}

impl Witness {
    pub fn passed(&self) -> bool {
        self.certificate.passed() && self.weyl_involution_order == 2 && self.weyl_involution_commutes_with_psi
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    #[serde(rename = "type", serialize_with = "base_name")]
    pub dynkin: DynkinType,
    pub twist: u8,
    pub condition_v: bool,
    #[serde(rename = "cartan_type")]
    pub is_cartan_type: bool,
    #[serde(rename = "compact_inner_form")]
    pub has_compact_inner_form: bool,
    #[serde(rename = "compact_cartan")]
    pub has_compact_cartan: bool,
    #[serde(rename = "discrete_series")]
    pub has_discrete_series: bool,
    pub witness: Option<Witness>,
    pub derived_fields: [&'static str; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

fn base_name<S: serde::Serializer>(t: &DynkinType, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&t.base_name())
}

impl ClassificationRecord {
    /// All five equivalent conditions agree.
    pub fn labels_consistent(&self) -> bool {
        let v = self.condition_v;
        self.is_cartan_type == v
            && self.has_compact_inner_form == v
            && self.has_compact_cartan == v
            && self.has_discrete_series == v
            && self.witness.is_some() == v
    }

    /// Triality rows lie outside the involutive cases of the exception list.
    pub fn is_extension(&self) -> bool {
        self.dynkin.twist() == 3
    }
}

/// The four exception families for involutive twists:
/// split `A_n` (n >= 2), split `D_n` (n odd), split `E6`, and twisted `D_n` (n even).
#[derive(Clone, Copy, Debug, Default)]
pub struct ExceptionList;

impl ExceptionList {
    pub fn split_a(t: &DynkinType) -> bool {
        t.twist() == 1 && t.family() == Family::A && t.rank() >= 2
    }

    pub fn split_d_odd(t: &DynkinType) -> bool {
        t.twist() == 1 && t.family() == Family::D && t.rank() >= 3 && t.rank() % 2 == 1
    }

    pub fn split_e6(t: &DynkinType) -> bool {
        t.twist() == 1 && t.family() == Family::E && t.rank() == 6
    }

    pub fn quasi_split_d_even(t: &DynkinType) -> bool {
        t.twist() == 2 && t.family() == Family::D && t.rank() >= 4 && t.rank() % 2 == 0
    }

    pub fn matches(t: &DynkinType) -> bool {
        Self::split_a(t) || Self::split_d_odd(t) || Self::split_e6(t) || Self::quasi_split_d_even(t)
    }
}

/// `w(psi(alpha_i)) = -alpha_i` for all simple roots.
pub fn condition_v(rs: &RootSystem, psi: &DiagramAutomorphism) -> bool {
    condition_v_holds(rs, psi)
}

pub fn classify(t: &DynkinType) -> Result<ClassificationRecord> {
    let psi = DiagramAutomorphism::for_twist(t)?;
    let rs = RootSystem::of_type(t);
    let holds = condition_v(&rs, &psi);
    let witness = if holds {
        let sc = build_constants(&rs)?;
        let certificate = certify_compact(&sc)?;
        let w_star = weyl_involution(&sc, &psi)?;
        let psi_alg = crate::chevalley::diagram_automorphism(&sc, &psi)?;
        let witness = Witness {
            certificate,
            weyl_involution_order: w_star.order(),
            weyl_involution_commutes_with_psi: w_star.commutes_with(&psi_alg),
        };
        if !witness.passed() {
            return Err(Error::Invariant(format!("compact-form witness failed for {t}: {witness:?}")));
        }
        Some(witness)
    } else {
        None
    };
    let note = match (t.family(), t.rank(), t.twist()) {
        (_, _, 3) => Some("extension: triality twist, outside the involutive exception list"),
        (Family::D, 3, _) => Some("D3 is isomorphic to A3"),
        _ => None,
    };
    Ok(ClassificationRecord {
        dynkin: *t,
        twist: t.twist(),
        condition_v: holds,
        is_cartan_type: holds,
        has_compact_inner_form: holds,
        has_compact_cartan: holds,
        has_discrete_series: holds,
        witness,
        derived_fields: DERIVED_FIELDS,
        note,
    })
}

/// Records for every valid type of rank `<= max_rank`, ordered by
/// (family, rank, twist).
pub fn full_table(max_rank: usize) -> Result<Vec<ClassificationRecord>> {
    DynkinType::all_up_to(max_rank).par_iter().map(classify).collect()
}

/// Types where the computed `condition_v` disagrees with the exception
/// list (involutive twists), or a triality row reports `true`.
pub fn exception_mismatches(records: &[ClassificationRecord]) -> Vec<DynkinType> {
    records
        .iter()
        .filter(|r| {
            if r.is_extension() {
                r.condition_v
            } else {
                r.condition_v == ExceptionList::matches(&r.dynkin)
            }
        })
        .map(|r| r.dynkin)
        .collect()
}
