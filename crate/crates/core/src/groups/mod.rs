//! Finite groups on dense element indices.
//!
//! Every group stores its elements as `0..order` with the identity at index 0.
//! Three representations are supported: the additive cyclic group `Z_n`,
//! direct products of cyclic `p`-groups (mixed-radix tuples, least significant
//! component first) and explicit Cayley tables.

mod cayley;
pub mod families;

pub use cayley::{parse_cayley_table, parse_cayley_table_with_cap, DEFAULT_TABLE_CAP};

use crate::numtheory::{self, NumError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent list must be nonempty with every exponent >= 1")]
    BadExponents,
    #[error("group order {order} exceeds the cap of {cap}")]
    TooLarge { order: u64, cap: usize },
    #[error("malformed table at line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("cell ({row}, {col}) holds {value}, outside 0..{order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: u64,
        order: usize,
    },
    #[error("element 0 is not a two-sided identity: cell ({row}, {col}) holds {found}")]
    Identity { row: usize, col: usize, found: usize },
    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),
    #[error("operation is not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
    #[error(transparent)]
    Arithmetic(#[from] NumError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(u64),
    AbelianP { p: u64, exponents: Vec<u32> },
    Table,
}

#[derive(Debug, Clone)]
enum Repr {
    Cyclic,
    /// Component moduli, least significant first.
    Radix(Vec<usize>),
    Table(Vec<u32>),
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    kind: GroupKind,
    name: String,
    repr: Repr,
}

pub fn build_cyclic(n: u64) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::EmptyGroup);
    }
    Ok(FiniteGroup {
        order: n as usize,
        kind: GroupKind::Cyclic(n),
        name: format!("Z_{n}"),
        repr: Repr::Cyclic,
    })
}

/// `Z_{p^a_1} x ... x Z_{p^a_r}`.
pub fn build_abelian_p(p: u64, exponents: &[u32]) -> Result<FiniteGroup, GroupError> {
    if !numtheory::is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if exponents.is_empty() || exponents.contains(&0) {
        return Err(GroupError::BadExponents);
    }
    let mut moduli = Vec::with_capacity(exponents.len());
    let mut order = 1u64;
    for &a in exponents {
        let m = numtheory::checked_pow(p, a)?;
        order = order.checked_mul(m).ok_or(NumError::Overflow("group order"))?;
        moduli.push(m as usize);
    }
    let name = moduli
        .iter()
        .map(|m| format!("Z_{m}"))
        .collect::<Vec<_>>()
        .join(" x ");
    Ok(FiniteGroup {
        order: order as usize,
        kind: GroupKind::AbelianP {
            p,
            exponents: exponents.to_vec(),
        },
        name,
        repr: Repr::Radix(moduli),
    })
}

impl FiniteGroup {
    /// Builds a table group, validating the group axioms exhaustively.
    pub fn from_table(name: impl Into<String>, order: usize, cells: Vec<u32>) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        assert_eq!(cells.len(), order * order, "table must be order x order");
        cayley::validate(order, &cells)?;
        Ok(FiniteGroup {
            order,
            kind: GroupKind::Table,
            name: name.into(),
            repr: Repr::Table(cells),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.repr {
            Repr::Cyclic => {
                let s = a + b;
                if s >= self.order {
                    s - self.order
                } else {
                    s
                }
            }
            Repr::Radix(moduli) => {
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut place = 1;
                for &m in moduli {
                    out += ((a % m + b % m) % m) * place;
                    a /= m;
                    b /= m;
                    place *= m;
                }
                out
            }
            Repr::Table(cells) => cells[a * self.order + b] as usize,
        }
    }

    /// Components of a tuple element, least significant first. Cyclic and
    /// table groups report the index itself as a single component.
    pub fn components(&self, x: usize) -> Vec<usize> {
        match &self.repr {
            Repr::Radix(moduli) => {
                let mut x = x;
                moduli
                    .iter()
                    .map(|&m| {
                        let c = x % m;
                        x /= m;
                        c
                    })
                    .collect()
            }
            _ => vec![x],
        }
    }

    pub fn label(&self, x: usize) -> String {
        match &self.repr {
            Repr::Radix(_) => {
                let parts: Vec<String> = self.components(x).iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
            _ => x.to_string(),
        }
    }

    /// Least `k >= 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> usize {
        assert!(x < self.order, "element {x} out of range");
        if let Repr::Cyclic = self.repr {
            return self.order / numtheory::gcd(x as u64, self.order as u64) as usize;
        }
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.op(y, x);
            k += 1;
        }
        k
    }

    /// The elements of `<x>`, ascending.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        assert!(x < self.order, "element {x} out of range");
        let mut out = vec![0];
        let mut y = x;
        while y != 0 {
            out.push(y);
            y = self.op(y, x);
        }
        out.sort_unstable();
        out
    }

    pub fn is_abelian(&self) -> bool {
        match self.repr {
            Repr::Cyclic | Repr::Radix(_) => true,
            Repr::Table(_) => (0..self.order)
                .all(|a| (a + 1..self.order).all(|b| self.op(a, b) == self.op(b, a))),
        }
    }

    pub fn is_cyclic(&self) -> bool {
        match &self.kind {
            GroupKind::Cyclic(_) => true,
            GroupKind::AbelianP { exponents, .. } => exponents.len() == 1,
            GroupKind::Table => (0..self.order).any(|x| self.element_order(x) == self.order),
        }
    }

    /// Prime `p` when the order is `p^m` with `m >= 1`.
    pub fn p_group_prime(&self) -> Option<u64> {
        let f = numtheory::factorize(self.order as u64).ok()?;
        f.is_prime_power().then(|| f.factors()[0].0)
    }
}
