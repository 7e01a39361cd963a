//! Closed-form predictions of enhanced-power-graph invariants from a
//! group's nilpotent structure, for cross-checking against the brute-force
//! computations in [`crate::metrics`] and [`crate::spectrum`].
//!
//! Throughout, a nilpotent group is split as G1 x Z_n x Q_{2^k}: G1 the
//! product of Sylow subgroups that are neither cyclic nor generalized
//! quaternion, Z_n the product of the cyclic ones, Q_{2^k} the quaternion
//! one when present.

pub mod verify;

use serde::Serialize;

use crate::group::{Atom, GroupSpec, NilpotencyCase, NilpotentProfile, SylowKind};
use crate::num::{euler_phi, factorize};

pub use verify::{verify, Row, RowStatus, VerificationReport, VerifyCaps};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiameterPrediction {
    ExactlyThree,
    AtMostFour,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KappaPrediction {
    Exactly(u64),
    UpperBound(u64),
    Unknown,
}

/// Everything the closed forms say about one group.
#[derive(Debug, Clone, Serialize)]
pub struct Prediction {
    pub case: NilpotencyCase,
    /// |Dom| of the enhanced power graph.
    pub dom_size: Option<u64>,
    /// Connectivity of the proper graph.
    pub proper_connected: Option<bool>,
    /// Component count of the proper graph.
    pub component_count: Option<u64>,
    /// Domination number of the proper graph.
    pub domination_number: Option<u64>,
    pub diameter: DiameterPrediction,
    /// Vertex connectivity of the enhanced power graph.
    pub kappa: KappaPrediction,
    pub alpha: Option<u64>,
    pub beta: Option<u64>,
    /// Multiplicity of the Laplacian spectral radius of the enhanced graph.
    pub eta_lambda1: Option<u64>,
    /// The group is cyclic, so the proper graph has no vertices.
    pub empty_proper_graph: bool,
    /// Quaternion case with trivial G1 (e.g. plain Q8): the connectivity
    /// and diameter closed forms assume a nontrivial G1 and do not apply;
    /// such groups are flagged rather than predicted.
    pub quaternion_trivial_core: bool,
}

/// Size of the dominating set of the enhanced power graph:
/// {e} / {e} x Z_n / {e} x {e'', y} / {e} x Z_n x {e'', y} by case.
pub fn predict_dom_set(profile: &NilpotentProfile) -> Option<(u64, NilpotencyCase)> {
    let n = profile.cyclic_part_order;
    match profile.case {
        NilpotencyCase::Case1 => Some((1, profile.case)),
        NilpotencyCase::Case2 => Some((n, profile.case)),
        NilpotencyCase::Case3 => Some((2, profile.case)),
        NilpotencyCase::Case4 => Some((2 * n, profile.case)),
        NilpotencyCase::NotNilpotent => None,
    }
}

/// Whether a group element belongs to the predicted dominating set: its
/// order must avoid every prime of G1 and, when a quaternion Sylow exists,
/// its 2-part must have order at most 2.
pub fn predicted_dom_member(order: u64, profile: &NilpotentProfile) -> bool {
    profile
        .sylows
        .iter()
        .filter(|s| s.kind == SylowKind::Other)
        .all(|s| order % s.prime != 0)
        && (!profile.has_quaternion_sylow() || order % 4 != 0)
}

pub fn predict_proper_connectivity(profile: &NilpotentProfile) -> Option<bool> {
    if profile.is_cyclic_group() {
        return None;
    }
    let other = profile.other_primes().len();
    match profile.case {
        NilpotencyCase::Case1 | NilpotencyCase::Case2 => Some(other >= 2),
        NilpotencyCase::Case3 | NilpotencyCase::Case4 => {
            if profile.trivial_noncyclic_part() {
                None
            } else {
                Some(true)
            }
        }
        NilpotencyCase::NotNilpotent => None,
    }
}

/// Number of components of the proper graph: s_p for a disconnected
/// p-group core (times a coprime cyclic factor), 1 for the connected
/// cases.
pub fn predict_component_count(profile: &NilpotentProfile) -> Option<u64> {
    match predict_proper_connectivity(profile)? {
        true => Some(1),
        false => {
            let p = *profile.other_primes().first()?;
            profile
                .sylows
                .iter()
                .find(|s| s.prime == p)
                .map(|s| s.prime_order_subgroups)
        }
    }
}

/// Domination number of the proper graph: s_p when G1 is a p-group, and
/// min_i s_i when G1 is a product of two or more non-cyclic Sylow
/// subgroups. No closed form covers the quaternion cases.
pub fn predict_domination_number(profile: &NilpotentProfile) -> Option<u64> {
    if !matches!(profile.case, NilpotencyCase::Case1 | NilpotencyCase::Case2)
        || profile.trivial_noncyclic_part()
    {
        return None;
    }
    profile
        .sylows
        .iter()
        .filter(|s| s.kind == SylowKind::Other)
        .map(|s| s.prime_order_subgroups)
        .min()
}

pub fn predict_diameter(profile: &NilpotentProfile) -> DiameterPrediction {
    match predict_proper_connectivity(profile) {
        Some(true) => match profile.case {
            NilpotencyCase::Case1 | NilpotencyCase::Case2 => DiameterPrediction::ExactlyThree,
            _ => DiameterPrediction::AtMostFour,
        },
        _ => DiameterPrediction::Unknown,
    }
}

/// Exponent lists per prime of an all-cyclic (abelian) spec: each cyclic
/// factor is split into its prime-power parts. Returns None when the spec
/// has a non-cyclic atom.
fn abelian_exponents(spec: &GroupSpec) -> Option<Vec<(u64, Vec<u32>)>> {
    let mut by_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for atom in &spec.factors {
        match atom {
            Atom::Cyclic(n) => {
                for (p, e) in factorize(*n) {
                    by_prime.entry(p).or_default().push(e);
                }
            }
            _ => return None,
        }
    }
    Some(
        by_prime
            .into_iter()
            .map(|(p, mut exps)| {
                exps.sort_unstable();
                (p, exps)
            })
            .collect(),
    )
}

/// The two vertex-connectivity upper bounds for a non-cyclic abelian
/// group, read off the factorization.
///
/// With b the product over non-cyclic Sylow subgroups of the smallest
/// prime-power part and a the product of the cyclic Sylow orders:
/// alpha = a*b - phi(a*b), and beta = b * (a - phi(a)) when a > 1, else
/// beta = alpha. beta <= alpha always, with equality exactly when the
/// group has no cyclic Sylow subgroup.
pub fn connectivity_bounds(spec: &GroupSpec) -> Option<(u64, u64)> {
    let exps = abelian_exponents(spec)?;
    if exps.iter().all(|(_, e)| e.len() == 1) {
        // Cyclic group.
        return None;
    }
    let mut a: u64 = 1; // cyclic Sylow orders
    let mut b: u64 = 1; // least parts of the non-cyclic Sylows
    for (p, e) in &exps {
        if e.len() == 1 {
            a = a.checked_mul(p.checked_pow(e[0])?)?;
        } else {
            b = b.checked_mul(p.checked_pow(e[0])?)?;
        }
    }
    let ab = a.checked_mul(b)?;
    let alpha = ab - euler_phi(ab);
    let beta = if a == 1 {
        alpha
    } else {
        b.checked_mul(a - euler_phi(a))?
    };
    Some((alpha, beta))
}

pub fn alpha_bound(spec: &GroupSpec) -> Option<u64> {
    connectivity_bounds(spec).map(|(a, _)| a)
}

pub fn beta_bound(spec: &GroupSpec) -> Option<u64> {
    connectivity_bounds(spec).map(|(_, b)| b)
}

/// Certified upper bound on kappa of the enhanced power graph, from the
/// separator construction: a set disconnecting the non-cyclic part, taken
/// across the full cyclic part. With a and b as in
/// [`connectivity_bounds`] this is a * (b - phi(b)); it coincides with
/// beta when the group has no cyclic Sylow subgroup, and brute force shows
/// it tight on small cases.
pub fn kappa_upper_bound(spec: &GroupSpec) -> Option<u64> {
    let exps = abelian_exponents(spec)?;
    if exps.iter().all(|(_, e)| e.len() == 1) {
        return None;
    }
    let mut a: u64 = 1;
    let mut b: u64 = 1;
    for (p, e) in &exps {
        if e.len() == 1 {
            a = a.checked_mul(p.checked_pow(e[0])?)?;
        } else {
            b = b.checked_mul(p.checked_pow(e[0])?)?;
        }
    }
    a.checked_mul(b - euler_phi(b))
}

/// Vertex connectivity of the enhanced power graph: exactly 1 for a
/// non-cyclic non-quaternion p-group, exactly n for such a p-group times
/// a coprime Z_n, and at most [`kappa_upper_bound`] for the other abelian
/// cases.
pub fn predict_kappa(profile: &NilpotentProfile, spec: Option<&GroupSpec>) -> KappaPrediction {
    if !matches!(profile.case, NilpotencyCase::Case1 | NilpotencyCase::Case2)
        || profile.trivial_noncyclic_part()
    {
        return KappaPrediction::Unknown;
    }
    if profile.other_primes().len() == 1 {
        return KappaPrediction::Exactly(profile.cyclic_part_order);
    }
    match spec.and_then(kappa_upper_bound) {
        Some(bound) => KappaPrediction::UpperBound(bound),
        None => KappaPrediction::Unknown,
    }
}

/// Multiplicity of the Laplacian spectral radius of the enhanced power
/// graph: 1 when there is no cyclic Sylow subgroup, n when there is
/// (quaternion-free cases with nontrivial G1 only).
pub fn predict_eta(profile: &NilpotentProfile) -> Option<u64> {
    if profile.trivial_noncyclic_part() || profile.has_quaternion_sylow() {
        return None;
    }
    match profile.case {
        NilpotencyCase::Case1 => Some(1),
        NilpotencyCase::Case2 => Some(profile.cyclic_part_order),
        _ => None,
    }
}

/// Assemble every applicable closed form for one profile.
pub fn predict(profile: &NilpotentProfile, spec: Option<&GroupSpec>) -> Prediction {
    let (alpha, beta) = spec
        .and_then(connectivity_bounds)
        .map(|(a, b)| (Some(a), Some(b)))
        .unwrap_or((None, None));
    Prediction {
        case: profile.case,
        dom_size: predict_dom_set(profile).map(|(s, _)| s),
        proper_connected: predict_proper_connectivity(profile),
        component_count: predict_component_count(profile),
        domination_number: predict_domination_number(profile),
        diameter: predict_diameter(profile),
        kappa: predict_kappa(profile, spec),
        alpha,
        beta,
        eta_lambda1: predict_eta(profile),
        empty_proper_graph: profile.is_cyclic_group(),
        quaternion_trivial_core: profile.has_quaternion_sylow() && profile.trivial_noncyclic_part(),
    }
}
