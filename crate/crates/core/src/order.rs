//! Monomial orders: lex, graded reverse lex, and block (product) orders.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A monomial well-order compatible with multiplication.
///
/// `Block` compares an ordered partition of the variables group by group,
/// grevlex inside each group; variables missing from every group are
/// appended as a final implicit group. A block order with an eliminated set
/// as its first group is an elimination order for that set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TermOrder {
    Lex,
    GrevLex,
    Block(Vec<Vec<usize>>),
}

impl TermOrder {
    /// Elimination order: the given variables dominate everything else.
    pub fn eliminating(vars: &[usize], nvars: usize) -> TermOrder {
        let head: Vec<usize> = vars.to_vec();
        let tail: Vec<usize> = (0..nvars).filter(|i| !head.contains(i)).collect();
        TermOrder::Block(vec![head, tail])
    }

    pub fn cmp_mono(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GrevLex => grevlex_all(a, b),
            TermOrder::Block(groups) => {
                let mut seen = vec![false; a.len()];
                for g in groups {
                    for &v in g {
                        seen[v] = true;
                    }
                    match grevlex_group(a, b, g) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                let rest: Vec<usize> = (0..a.len()).filter(|&i| !seen[i]).collect();
                grevlex_group(a, b, &rest)
            }
        }
    }
}

fn grevlex_all(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // reverse lexicographic on the reversed exponent list, negated
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn grevlex_group(a: &[u32], b: &[u32], group: &[usize]) -> Ordering {
    let da: u32 = group.iter().map(|&i| a[i]).sum();
    let db: u32 = group.iter().map(|&i| b[i]).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for &i in group.iter().rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_orders_by_leading_variable() {
        let o = TermOrder::Lex;
        assert_eq!(o.cmp_mono(&[1, 0], &[0, 5]), Ordering::Greater);
    }

    #[test]
    fn grevlex_orders_by_degree_first() {
        let o = TermOrder::GrevLex;
        assert_eq!(o.cmp_mono(&[1, 0], &[0, 5]), Ordering::Less);
        assert_eq!(o.cmp_mono(&[2, 1], &[1, 2]), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        // eliminate variable 1: any monomial containing it beats any without
        let o = TermOrder::eliminating(&[1], 2);
        assert_eq!(o.cmp_mono(&[0, 1], &[9, 0]), Ordering::Greater);
        assert_eq!(o.cmp_mono(&[3, 0], &[1, 0]), Ordering::Greater);
    }
}
