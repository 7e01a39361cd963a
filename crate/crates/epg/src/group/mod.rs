//! Finite-group arithmetic on indexed element sets.
//!
//! Elements are indices `0..|G|` with `0` the identity. Groups come either
//! from a product-of-atoms description (multiplication works on mixed-radix
//! tuples, flattened to a single index) or from a raw multiplication table.

pub mod cayley;
pub mod profile;
pub mod spec;

use crate::error::{Error, Result};
use crate::num::{gcd, lcm};

pub use cayley::{group_from_table, load_cayley_table, CayleyTable};
pub use profile::{
    classify_sylow, count_prime_order_subgroups, is_nilpotent, nilpotent_profile,
    sylow_decomposition, NilpotencyCase, NilpotentProfile, SylowInfo, SylowKind,
};
pub use spec::{parse_group_spec, Atom, GroupSpec};

/// Default cap on |G| for built groups. Graph construction cost grows
/// quadratically with the order, so this keeps everything at desk scale.
pub const DEFAULT_MAX_ORDER: u64 = 20_000;

#[derive(Debug, Clone)]
enum AtomRep {
    Cyclic {
        n: usize,
    },
    /// Q_{2^k} with m = 2^{k-1}: elements a^i b^j, index i + j*m.
    Quaternion {
        m: usize,
    },
    /// Dihedral of order 2m: elements r^i s^j, index i + j*m.
    Dihedral {
        m: usize,
    },
}

impl AtomRep {
    fn order(&self) -> usize {
        match *self {
            AtomRep::Cyclic { n } => n,
            AtomRep::Quaternion { m } | AtomRep::Dihedral { m } => 2 * m,
        }
    }

    fn multiply(&self, x: usize, y: usize) -> usize {
        match *self {
            AtomRep::Cyclic { n } => (x + y) % n,
            AtomRep::Quaternion { m } => {
                let (i1, j1) = (x % m, x / m);
                let (i2, j2) = (y % m, y / m);
                if j1 == 0 {
                    (i1 + i2) % m + j2 * m
                } else {
                    // b a^i = a^{-i} b, and b^2 = a^{m/2}.
                    let i = (i1 + m - i2) % m;
                    if j2 == 0 {
                        i + m
                    } else {
                        (i + m / 2) % m
                    }
                }
            }
            AtomRep::Dihedral { m } => {
                let (i1, j1) = (x % m, x / m);
                let (i2, j2) = (y % m, y / m);
                if j1 == 0 {
                    (i1 + i2) % m + j2 * m
                } else {
                    // s r^i = r^{-i} s, and s^2 = e.
                    (i1 + m - i2) % m + ((1 + j2) % 2) * m
                }
            }
        }
    }

    fn element_order(&self, x: usize) -> u64 {
        match *self {
            AtomRep::Cyclic { n } => (n as u64) / gcd(n as u64, x as u64),
            AtomRep::Quaternion { m } => {
                if x < m {
                    (m as u64) / gcd(m as u64, x as u64)
                } else {
                    // Every a^i b squares to the unique involution a^{m/2}.
                    4
                }
            }
            AtomRep::Dihedral { m } => {
                if x < m {
                    (m as u64) / gcd(m as u64, x as u64)
                } else {
                    2
                }
            }
        }
    }

    fn element_name(&self, x: usize) -> String {
        match *self {
            AtomRep::Cyclic { .. } => x.to_string(),
            AtomRep::Quaternion { m } => {
                let (i, j) = (x % m, x / m);
                match (i, j) {
                    (0, 0) => "e".into(),
                    (1, 0) => "a".into(),
                    (_, 0) => format!("a^{i}"),
                    (0, 1) => "b".into(),
                    (1, 1) => "ab".into(),
                    _ => format!("a^{i}b"),
                }
            }
            AtomRep::Dihedral { m } => {
                let (i, j) = (x % m, x / m);
                match (i, j) {
                    (0, 0) => "e".into(),
                    (1, 0) => "r".into(),
                    (_, 0) => format!("r^{i}"),
                    (0, 1) => "s".into(),
                    (1, 1) => "rs".into(),
                    _ => format!("r^{i}s"),
                }
            }
        }
    }
}

#[derive(Debug, Clone)]
enum Rep {
    /// Direct product in mixed radix; `strides[i]` is the flat-index weight
    /// of factor `i`.
    Product {
        factors: Vec<AtomRep>,
        strides: Vec<usize>,
    },
    /// Row-major multiplication table.
    Table { table: Vec<u32> },
}

/// A concrete finite group with cached element orders and inverses.
#[derive(Debug, Clone)]
pub struct Group {
    order: usize,
    name: String,
    rep: Rep,
    orders: Vec<u64>,
    inverses: Vec<u32>,
    names: Vec<String>,
}

impl Group {
    /// Build the direct product described by `spec`, enforcing the default
    /// order cap.
    pub fn from_spec(spec: &GroupSpec) -> Result<Group> {
        Group::from_spec_capped(spec, DEFAULT_MAX_ORDER)
    }

    pub fn from_spec_capped(spec: &GroupSpec, max_order: u64) -> Result<Group> {
        let order = spec.order();
        if order > max_order as u128 {
            return Err(Error::OrderCapExceeded {
                order,
                cap: max_order,
            });
        }
        let order = order as usize;
        let factors: Vec<AtomRep> = spec
            .factors
            .iter()
            .map(|a| match *a {
                Atom::Cyclic(n) => AtomRep::Cyclic { n: n as usize },
                Atom::GeneralizedQuaternion(n) => AtomRep::Quaternion { m: n as usize / 2 },
                Atom::Dihedral(n) => AtomRep::Dihedral { m: n as usize / 2 },
            })
            .collect();
        let mut strides = vec![0usize; factors.len()];
        let mut acc = 1usize;
        for (i, f) in factors.iter().enumerate() {
            strides[i] = acc;
            acc *= f.order();
        }
        debug_assert_eq!(acc, order.max(1));
        let rep = Rep::Product { factors, strides };
        Ok(Group::finish(order, spec.to_string(), rep))
    }

    /// Parse and build in one step.
    pub fn parse(text: &str) -> Result<Group> {
        Group::from_spec(&parse_group_spec(text)?)
    }

    fn finish(order: usize, name: String, rep: Rep) -> Group {
        let mut g = Group {
            order,
            name,
            rep,
            orders: Vec::new(),
            inverses: Vec::new(),
            names: Vec::new(),
        };
        g.orders = (0..order).map(|x| g.compute_order(x)).collect();
        g.inverses = (0..order).map(|x| g.compute_inverse(x) as u32).collect();
        g.names = (0..order).map(|x| g.compute_name(x)).collect();
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn element_name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn element_names(&self) -> Vec<String> {
        self.names.clone()
    }

    pub fn multiply(&self, x: usize, y: usize) -> usize {
        match &self.rep {
            Rep::Product { factors, strides } => {
                let mut out = 0;
                for (f, &stride) in factors.iter().zip(strides) {
                    let n = f.order();
                    let xi = x / stride % n;
                    let yi = y / stride % n;
                    out += f.multiply(xi, yi) * stride;
                }
                out
            }
            Rep::Table { table } => table[x * self.order + y] as usize,
        }
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    /// o(x): the least t >= 1 with x^t = e.
    pub fn order_of(&self, x: usize) -> u64 {
        self.orders[x]
    }

    pub fn power(&self, x: usize, mut k: u64) -> usize {
        k %= self.order_of(x);
        let mut acc = 0;
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            k >>= 1;
        }
        acc
    }

    /// The cyclic subgroup generated by x, in generation order starting
    /// from the identity.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut g = x;
        while g != 0 {
            out.push(g);
            g = self.multiply(g, x);
        }
        out
    }

    fn compute_order(&self, x: usize) -> u64 {
        match &self.rep {
            // For products, the order of a tuple is the lcm of the component
            // orders.
            Rep::Product { factors, strides } => {
                let mut o = 1;
                for (f, &stride) in factors.iter().zip(strides) {
                    let n = f.order();
                    o = lcm(o, f.element_order(x / stride % n));
                }
                o
            }
            Rep::Table { .. } => {
                let mut o = 1u64;
                let mut g = x;
                while g != 0 {
                    g = self.multiply(g, x);
                    o += 1;
                }
                o
            }
        }
    }

    fn compute_inverse(&self, x: usize) -> usize {
        self.power(x, self.order_of(x) - 1)
    }

    fn compute_name(&self, x: usize) -> String {
        match &self.rep {
            Rep::Product { factors, strides } => {
                if factors.len() == 1 {
                    return factors[0].element_name(x);
                }
                let parts: Vec<String> = factors
                    .iter()
                    .zip(strides)
                    .map(|(f, &stride)| f.element_name(x / stride % f.order()))
                    .collect();
                format!("({})", parts.join(","))
            }
            Rep::Table { .. } => self.names.get(x).cloned().unwrap_or_default(),
        }
    }

    /// Construct from a validated multiplication table. `names` may be empty.
    pub(crate) fn from_table_parts(
        order: usize,
        table: Vec<u32>,
        name: String,
        names: Vec<String>,
    ) -> Group {
        debug_assert_eq!(order * order, table.len());
        let mut g = Group {
            order,
            name,
            rep: Rep::Table { table },
            orders: Vec::new(),
            inverses: Vec::new(),
            names,
        };
        if g.names.is_empty() {
            g.names = (0..order).map(|x| format!("g{x}")).collect();
        }
        g.orders = (0..order).map(|x| g.compute_order(x)).collect();
        g.inverses = (0..order).map(|x| g.compute_inverse(x) as u32).collect();
        g
    }

    /// True when xy = yx.
    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.multiply(x, y) == self.multiply(y, x)
    }
}

/// Convenience wrapper matching the operation-level API.
pub fn build_group(spec: &GroupSpec) -> Result<Group> {
    Group::from_spec(spec)
}

pub fn element_order(g: usize, group: &Group) -> u64 {
    group.order_of(g)
}

pub fn cyclic_subgroup(g: usize, group: &Group) -> Vec<usize> {
    group.cyclic_subgroup(g)
}
