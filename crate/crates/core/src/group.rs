//! Finite groups given by multiplication tables, and magnetic gradings on them.
//!
//! Elements are plain indices `0..order`, the identity is always index `0`.
//! A [`MagneticGroup`] attaches a surjective homomorphism `phi: G -> Z/2`;
//! elements with `phi = 0` act linearly, the others antilinearly.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {reason}")]
    NotAGroup { reason: String },
    #[error("grading is not a homomorphism: phi({g}*{h}) != phi({g}) xor phi({h})")]
    NotHomomorphism { g: usize, h: usize },
    #[error("grading is not surjective: every element has phi = 0")]
    NotSurjective,
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("element {0} does not lie outside the kernel")]
    NotAntiunitary(usize),
}

fn not_a_group(reason: impl Into<String>) -> GroupError {
    GroupError::NotAGroup {
        reason: reason.into(),
    }
}

/// A finite group stored as a full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Builds and validates a group from a row-major `order x order` table,
    /// where `table[g * order + h]` is the index of `g * h`.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(not_a_group("order must be positive"));
        }
        if table.len() != order * order {
            return Err(not_a_group(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(pos) = table.iter().position(|&x| x >= order) {
            return Err(not_a_group(format!(
                "entry ({}, {}) = {} is out of range",
                pos / order,
                pos % order,
                table[pos]
            )));
        }
        let at = |g: usize, h: usize| table[g * order + h];

        let mut seen = vec![false; order];
        for g in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for h in 0..order {
                let x = at(g, h);
                if seen[x] {
                    return Err(not_a_group(format!("row {g} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        for h in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for g in 0..order {
                let x = at(g, h);
                if seen[x] {
                    return Err(not_a_group(format!("column {h} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        for g in 0..order {
            if at(0, g) != g || at(g, 0) != g {
                return Err(not_a_group(format!(
                    "index 0 is not an identity (fails at element {g})"
                )));
            }
        }
        for g in 0..order {
            for h in 0..order {
                let gh = at(g, h);
                for k in 0..order {
                    if at(gh, k) != at(g, at(h, k)) {
                        return Err(not_a_group(format!(
                            "non-associative triple ({g}, {h}, {k})"
                        )));
                    }
                }
            }
        }
        // Latin rows guarantee a unique right inverse; with associativity it is two-sided.
        let inv = (0..order)
            .map(|g| (0..order).find(|&h| at(g, h) == 0).unwrap())
            .collect();
        Ok(Self {
            order,
            mul: table,
            inv,
        })
    }

    pub fn cyclic(order: usize) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::BadParam("cyclic order must be positive".into()));
        }
        let table = (0..order * order)
            .map(|x| (x / order + x % order) % order)
            .collect();
        Self::from_table(order, table)
    }

    /// Dihedral group `Z/n x| Z/2` of order `2n`; `(m, e)` is stored at index `m + n*e`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::BadParam(
                "dihedral parameter must be >= 1".into(),
            ));
        }
        let order = 2 * n;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (m, e) = (x % n, x / n);
            for y in 0..order {
                let (m2, e2) = (y % n, y / n);
                // (m, e)(m', e') = (m + (-1)^e m', e + e')
                let moved = if e == 0 { m2 } else { (n - m2) % n };
                table.push((m + moved) % n + n * (e ^ e2));
            }
        }
        Self::from_table(order, table)
    }

    /// Quaternion group in the order `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Self {
        // unit products u*v = sign * w over units 1, i, j, k (0..4)
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let mut table = Vec::with_capacity(64);
        for x in 0..8 {
            for y in 0..8 {
                let (neg, w) = UNIT[x / 2][y / 2];
                let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
                table.push(2 * w + sign);
            }
        }
        Self::from_table(8, table).expect("quaternion table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order + h]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Smallest subgroup containing `seeds`.
    pub fn closure(&self, seeds: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &s in seeds {
                let y = self.mul(x, s);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Greedy generating set for the subgroup spanned by `elements`, picking
    /// the smallest index not yet generated at each step.
    pub fn generators_of(&self, elements: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = BTreeSet::from([0]);
        for &g in elements {
            if !span.contains(&g) {
                gens.push(g);
                span = self.closure(&gens);
            }
        }
        gens
    }
}

/// Which canonical magnetic group to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinKind {
    /// `(Z/order, mod 2)`; the parameter is the (even) group order.
    Cyclic,
    /// `(D_n, pi_2)`; the parameter is `n`.
    Dihedral,
    /// `(Q8, q)` with kernel `<i>`.
    Quaternion,
}

/// A finite group together with a surjective grading `phi: G -> Z/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagneticGroup {
    name: String,
    group: FiniteGroup,
    phi: Vec<u8>,
    kernel: Vec<usize>,
    kernel_pos: Vec<Option<usize>>,
    a: usize,
}

impl MagneticGroup {
    pub fn new(group: FiniteGroup, bits: Vec<u8>) -> Result<Self, GroupError> {
        let n = group.order();
        if bits.len() != n {
            return Err(GroupError::BadParam(format!(
                "phi has {} bits, group order is {n}",
                bits.len()
            )));
        }
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(GroupError::BadParam(format!("phi bit {b} is not 0 or 1")));
        }
        for g in 0..n {
            for h in 0..n {
                if bits[group.mul(g, h)] != bits[g] ^ bits[h] {
                    return Err(GroupError::NotHomomorphism { g, h });
                }
            }
        }
        let a = bits
            .iter()
            .position(|&b| b == 1)
            .ok_or(GroupError::NotSurjective)?;
        let kernel: Vec<usize> = (0..n).filter(|&g| bits[g] == 0).collect();
        let mut kernel_pos = vec![None; n];
        for (i, &g) in kernel.iter().enumerate() {
            kernel_pos[g] = Some(i);
        }
        Ok(Self {
            name: String::new(),
            group,
            phi: bits,
            kernel,
            kernel_pos,
            a,
        })
    }

    pub fn builtin(kind: BuiltinKind, param: Option<usize>) -> Result<Self, GroupError> {
        let need = |p: Option<usize>| {
            p.ok_or_else(|| GroupError::BadParam(format!("{kind:?} needs a parameter")))
        };
        let mg = match kind {
            BuiltinKind::Cyclic => {
                let order = need(param)?;
                if order < 2 || order % 2 != 0 {
                    return Err(GroupError::BadParam(format!(
                        "cyclic order {order} must be even and >= 2: odd cyclic groups have only the trivial grading"
                    )));
                }
                let bits = (0..order).map(|k| (k % 2) as u8).collect();
                Self::new(FiniteGroup::cyclic(order)?, bits)?.named(format!("Z{order}"))
            }
            BuiltinKind::Dihedral => {
                let n = need(param)?;
                let g = FiniteGroup::dihedral(n)?;
                let bits = (0..2 * n).map(|x| (x / n) as u8).collect();
                Self::new(g, bits)?.named(format!("D{n}"))
            }
            BuiltinKind::Quaternion => {
                if param.is_some() {
                    return Err(GroupError::BadParam("quaternion takes no parameter".into()));
                }
                let bits = vec![0, 0, 0, 0, 1, 1, 1, 1];
                Self::new(FiniteGroup::quaternion(), bits)?.named("Q8")
            }
        };
        Ok(mg)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Same grading, different choice of distinguished antiunitary element.
    pub fn with_antiunitary(&self, a: usize) -> Result<Self, GroupError> {
        if a >= self.order() || self.phi[a] != 1 {
            return Err(GroupError::NotAntiunitary(a));
        }
        Ok(Self { a, ..self.clone() })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.group.mul(g, h)
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.group.inv(g)
    }

    #[inline]
    pub fn phi(&self, g: usize) -> u8 {
        self.phi[g]
    }

    pub fn phi_bits(&self) -> &[u8] {
        &self.phi
    }

    /// Sorted indices of the kernel `G0`.
    pub fn kernel(&self) -> &[usize] {
        &self.kernel
    }

    /// Position of `g` inside [`Self::kernel`], if it is a kernel element.
    #[inline]
    pub fn kernel_position(&self, g: usize) -> Option<usize> {
        self.kernel_pos[g]
    }

    /// The distinguished antiunitary element (smallest index with `phi = 1`
    /// unless overridden by [`Self::with_antiunitary`]).
    pub fn a(&self) -> usize {
        self.a
    }

    pub fn antiunitary_elements(&self) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.phi[g] == 1).collect()
    }

    /// Generating set of the whole group.
    pub fn generators(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.order()).collect();
        self.group.generators_of(&all)
    }

    pub fn kernel_generators(&self) -> Vec<usize> {
        self.group.generators_of(&self.kernel)
    }

    /// `a^{-1} g a`.
    pub fn conjugate_by_a(&self, g: usize) -> usize {
        self.mul(self.mul(self.inv(self.a), g), self.a)
    }
}

/// Validated group from a flat table.
pub fn build_from_table(order: usize, table: Vec<usize>) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::from_table(order, table)
}

pub fn builtin_group(kind: BuiltinKind, param: Option<usize>) -> Result<MagneticGroup, GroupError> {
    MagneticGroup::builtin(kind, param)
}

pub fn attach_phi(group: FiniteGroup, bits: Vec<u8>) -> Result<MagneticGroup, GroupError> {
    MagneticGroup::new(group, bits)
}

pub fn kernel_subgroup(mg: &MagneticGroup) -> Vec<usize> {
    mg.kernel().to_vec()
}

pub fn antiunitary_pick(mg: &MagneticGroup) -> usize {
    mg.a()
}
