//! Cayley-table text format.
//!
//! ```text
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Line 1 is the order `n`, followed by `n` rows of `n` whitespace-separated
//! indices in `0..n`. Cell `(i, j)` is `i * j`. Element 0 must be the identity.

use super::{FiniteGroup, GroupError};

/// Largest table accepted by [`parse_cayley_table`].
pub const DEFAULT_TABLE_CAP: usize = 512;

pub fn parse_cayley_table(text: &str) -> Result<FiniteGroup, GroupError> {
    parse_cayley_table_with_cap(text, DEFAULT_TABLE_CAP)
}

pub fn parse_cayley_table_with_cap(text: &str, cap: usize) -> Result<FiniteGroup, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first, header) = lines.next().ok_or(GroupError::Malformed {
        line: 1,
        message: "empty input".into(),
    })?;
    let order: u64 = header.parse().map_err(|_| GroupError::Malformed {
        line: first,
        message: format!("expected the group order, found {header:?}"),
    })?;
    if order == 0 {
        return Err(GroupError::EmptyGroup);
    }
    if order > cap as u64 {
        return Err(GroupError::TooLarge { order, cap });
    }
    let n = order as usize;

    let mut cells = Vec::with_capacity(n * n);
    for row in 0..n {
        let (line, text) = lines.next().ok_or(GroupError::Malformed {
            line: first + row + 1,
            message: format!("expected {n} rows, found {row}"),
        })?;
        let before = cells.len();
        for (col, tok) in text.split_whitespace().enumerate() {
            let value: u64 = tok.parse().map_err(|_| GroupError::Malformed {
                line,
                message: format!("cell {col} is not a nonnegative integer: {tok:?}"),
            })?;
            if value >= order {
                return Err(GroupError::OutOfRange { row, col, value, order: n });
            }
            cells.push(value as u32);
        }
        let got = cells.len() - before;
        if got != n {
            return Err(GroupError::Malformed {
                line,
                message: format!("row {row} has {got} entries, expected {n}"),
            });
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(GroupError::Malformed {
            line,
            message: format!("trailing content after {n} rows"),
        });
    }
    FiniteGroup::from_table("table", n, cells)
}

/// Checks identity, inverses and associativity. Associativity is exhaustive.
pub(super) fn validate(n: usize, cells: &[u32]) -> Result<(), GroupError> {
    let at = |a: usize, b: usize| cells[a * n + b] as usize;
    if let Some(&v) = cells.iter().find(|&&v| v as usize >= n) {
        let i = cells.iter().position(|&c| c == v).unwrap();
        return Err(GroupError::OutOfRange {
            row: i / n,
            col: i % n,
            value: u64::from(v),
            order: n,
        });
    }
    for x in 0..n {
        if at(0, x) != x {
            return Err(GroupError::Identity { row: 0, col: x, found: at(0, x) });
        }
        if at(x, 0) != x {
            return Err(GroupError::Identity { row: x, col: 0, found: at(x, 0) });
        }
    }
    // Only the identity can be idempotent.
    for x in 1..n {
        if at(x, x) == x {
            return Err(GroupError::Identity { row: x, col: x, found: x });
        }
    }
    for x in 0..n {
        if !(0..n).any(|y| at(x, y) == 0 && at(y, x) == 0) {
            return Err(GroupError::MissingInverse(x));
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                let left = at(ab, c);
                let right = at(a, at(b, c));
                if left != right {
                    return Err(GroupError::NotAssociative { a, b, c, left, right });
                }
            }
        }
    }
    Ok(())
}
