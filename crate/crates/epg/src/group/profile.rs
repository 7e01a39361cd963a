//! Nilpotence testing, Sylow decomposition and structural classification.
//!
//! A finite group is nilpotent exactly when it is the direct product of its
//! Sylow subgroups. We test this via an equivalent criterion that needs no
//! quotient machinery: for each prime p dividing |G|, the set of p-elements
//! must be closed under multiplication (it is then the unique, normal,
//! Sylow p-subgroup).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::num::{factorize, is_power_of};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SylowKind {
    Cyclic,
    GeneralizedQuaternion,
    Other,
}

/// Per-prime Sylow metadata of a nilpotent group.
#[derive(Debug, Clone, Serialize)]
pub struct SylowInfo {
    pub prime: u64,
    pub order: u64,
    pub kind: SylowKind,
    /// Number of distinct subgroups of prime order p.
    pub prime_order_subgroups: u64,
    /// Largest order of a p-element, p^{exp}.
    pub max_element_order: u64,
}

/// The structural cases for a finite nilpotent group G = G1 x Z_n x Q_{2^k},
/// split by which kinds of Sylow subgroups occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NilpotencyCase {
    /// No Sylow subgroup is cyclic or generalized quaternion.
    Case1,
    /// Some Sylow subgroups cyclic, none generalized quaternion.
    Case2,
    /// A generalized quaternion Sylow subgroup, no cyclic one.
    Case3,
    /// Both cyclic and generalized quaternion Sylow subgroups.
    Case4,
    NotNilpotent,
}

impl NilpotencyCase {
    pub fn number(&self) -> Option<u8> {
        match self {
            NilpotencyCase::Case1 => Some(1),
            NilpotencyCase::Case2 => Some(2),
            NilpotencyCase::Case3 => Some(3),
            NilpotencyCase::Case4 => Some(4),
            NilpotencyCase::NotNilpotent => None,
        }
    }
}

/// Full classification of a group: nilpotence, per-prime Sylow data, and
/// the decomposition G = G1 x Z_n x Q_{2^k} where G1 collects the Sylow
/// subgroups that are neither cyclic nor generalized quaternion.
#[derive(Debug, Clone, Serialize)]
pub struct NilpotentProfile {
    pub is_nilpotent: bool,
    pub sylows: Vec<SylowInfo>,
    pub case: NilpotencyCase,
    /// |G1|: product of the orders of the "Other" Sylow subgroups.
    pub noncyclic_part_order: u64,
    /// n: product of the orders of the cyclic Sylow subgroups (1 if none).
    pub cyclic_part_order: u64,
    /// Order of the generalized quaternion Sylow subgroup, if present.
    pub quaternion_order: Option<u64>,
}

impl NilpotentProfile {
    /// Primes whose Sylow subgroup is neither cyclic nor quaternion.
    pub fn other_primes(&self) -> Vec<u64> {
        self.sylows
            .iter()
            .filter(|s| s.kind == SylowKind::Other)
            .map(|s| s.prime)
            .collect()
    }

    pub fn has_quaternion_sylow(&self) -> bool {
        self.quaternion_order.is_some()
    }

    /// True when G1 is trivial, i.e. every Sylow is cyclic or quaternion.
    pub fn trivial_noncyclic_part(&self) -> bool {
        self.noncyclic_part_order == 1
    }

    /// True when the whole group is cyclic.
    pub fn is_cyclic_group(&self) -> bool {
        self.sylows.iter().all(|s| s.kind == SylowKind::Cyclic)
    }
}

/// The p-elements of G (elements whose order is a power of p, including e).
fn p_elements(g: &Group, p: u64) -> Vec<usize> {
    (0..g.order())
        .filter(|&x| is_power_of(g.order_of(x), p))
        .collect()
}

/// Nilpotence via multiplicative closure of the p-elements for every
/// prime p dividing |G|.
pub fn is_nilpotent(g: &Group) -> bool {
    for (p, _) in factorize(g.order() as u64) {
        let elems = p_elements(g, p);
        let mut member = vec![false; g.order()];
        for &x in &elems {
            member[x] = true;
        }
        for &x in &elems {
            for &y in &elems {
                if !member[g.multiply(x, y)] {
                    return false;
                }
            }
        }
    }
    true
}

/// For nilpotent G: the Sylow p-subgroup for each prime p | |G|, as the set
/// of p-elements.
pub fn sylow_decomposition(g: &Group) -> Result<BTreeMap<u64, Vec<usize>>> {
    if !is_nilpotent(g) {
        return Err(Error::NotNilpotent);
    }
    let mut out = BTreeMap::new();
    for (p, _) in factorize(g.order() as u64) {
        out.insert(p, p_elements(g, p));
    }
    Ok(out)
}

/// Classify a p-group given as an element subset of G: cyclic when some
/// element generates it; generalized quaternion when it is a non-cyclic
/// 2-group of order >= 8 with exactly one involution; otherwise Other.
pub fn classify_sylow(subgroup: &[usize], g: &Group) -> SylowKind {
    let h = subgroup.len() as u64;
    if subgroup.iter().any(|&x| g.order_of(x) == h) {
        return SylowKind::Cyclic;
    }
    let involutions = subgroup.iter().filter(|&&x| g.order_of(x) == 2).count();
    if is_power_of(h, 2) && h >= 8 && involutions == 1 {
        return SylowKind::GeneralizedQuaternion;
    }
    SylowKind::Other
}

/// (#elements of order p) / (p - 1): the number of distinct p-order
/// subgroups. Exact division is a structural invariant; failure signals a
/// broken multiplication table.
pub fn count_prime_order_subgroups(g: &Group, p: u64) -> Result<u64> {
    let count = (0..g.order()).filter(|&x| g.order_of(x) == p).count() as u64;
    if count % (p - 1) != 0 {
        return Err(Error::InexactSubgroupCount { prime: p, count });
    }
    Ok(count / (p - 1))
}

pub fn nilpotent_profile(g: &Group) -> NilpotentProfile {
    let nilpotent = is_nilpotent(g);
    if !nilpotent {
        return NilpotentProfile {
            is_nilpotent: false,
            sylows: Vec::new(),
            case: NilpotencyCase::NotNilpotent,
            noncyclic_part_order: 0,
            cyclic_part_order: 0,
            quaternion_order: None,
        };
    }
    let mut sylows = Vec::new();
    for (p, _) in factorize(g.order() as u64) {
        let elems = p_elements(g, p);
        let kind = classify_sylow(&elems, g);
        let s_p = count_prime_order_subgroups(g, p)
            .expect("prime-order element count must divide p - 1 in a valid group");
        let max_order = elems.iter().map(|&x| g.order_of(x)).max().unwrap_or(1);
        sylows.push(SylowInfo {
            prime: p,
            order: elems.len() as u64,
            kind,
            prime_order_subgroups: s_p,
            max_element_order: max_order,
        });
    }
    let any_cyclic = sylows.iter().any(|s| s.kind == SylowKind::Cyclic);
    let quaternion_order = sylows
        .iter()
        .find(|s| s.kind == SylowKind::GeneralizedQuaternion)
        .map(|s| s.order);
    let case = match (any_cyclic, quaternion_order.is_some()) {
        (false, false) => NilpotencyCase::Case1,
        (true, false) => NilpotencyCase::Case2,
        (false, true) => NilpotencyCase::Case3,
        (true, true) => NilpotencyCase::Case4,
    };
    let noncyclic_part_order = sylows
        .iter()
        .filter(|s| s.kind == SylowKind::Other)
        .map(|s| s.order)
        .product();
    let cyclic_part_order = sylows
        .iter()
        .filter(|s| s.kind == SylowKind::Cyclic)
        .map(|s| s.order)
        .product();
    NilpotentProfile {
        is_nilpotent: true,
        sylows,
        case,
        noncyclic_part_order,
        cyclic_part_order,
        quaternion_order,
    }
}
