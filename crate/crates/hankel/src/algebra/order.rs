//! Monomial orders: lex, degrevlex, and block elimination orders.
//!
//! The degrevlex convention used throughout: `a > b` when `deg a > deg b`, or
//! the degrees agree and at the *last* position where the exponents differ,
//! `a` has the *smaller* exponent. Worked comparisons (three variables
//! `x1 > x2 > x3`):
//!
//! * `x2^2 > x1*x3` — degrees tie at 2; the vectors are `(0,2,0)` and
//!   `(1,0,1)`; they last differ at `x3`, where `x2^2` has the smaller
//!   exponent.
//! * `x1*x2 > x2^2` — last difference at `x2` with exponents 1 < 2.
//! * lex instead gives `x1*x3 > x2^2`, deciding at the first difference.

use super::monomial::Monomial;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Lexicographic with the ring's variable order.
    Lex,
    /// Degree reverse lexicographic.
    DegRevLex,
    /// Elimination order: degrevlex on the first `first_block` variables,
    /// ties broken by degrevlex on the rest. A monomial free of the first
    /// block is smaller than any monomial meeting it.
    Block { first_block: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => lex_cmp(a.exps(), b.exps()),
            MonomialOrder::DegRevLex => degrevlex_cmp(a.exps(), b.exps()),
            MonomialOrder::Block { first_block } => {
                let k = *first_block;
                degrevlex_cmp(&a.exps()[..k], &b.exps()[..k])
                    .then_with(|| degrevlex_cmp(&a.exps()[k..], &b.exps()[k..]))
            }
        }
    }

    /// Key with the property `a > b` in the order iff `key(a) > key(b)`
    /// lexicographically. Used to store pairs in ordered sets.
    pub fn sort_key(&self, m: &Monomial) -> Vec<u32> {
        match self {
            MonomialOrder::Lex => m.exps().iter().map(|&e| e as u32).collect(),
            MonomialOrder::DegRevLex => degrevlex_key(m.exps()),
            MonomialOrder::Block { first_block } => {
                let k = *first_block;
                let mut key = degrevlex_key(&m.exps()[..k]);
                key.extend(degrevlex_key(&m.exps()[k..]));
                key
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".to_string(),
            MonomialOrder::DegRevLex => "degrevlex".to_string(),
            MonomialOrder::Block { first_block } => format!("block{first_block}"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

fn lex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn degrevlex_cmp(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // equal degree: the last differing position decides, smaller exponent wins
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn degrevlex_key(exps: &[u16]) -> Vec<u32> {
    let deg: u32 = exps.iter().map(|&e| e as u32).sum();
    let mut key = Vec::with_capacity(exps.len() + 1);
    key.push(deg);
    key.extend(exps.iter().rev().map(|&e| u16::MAX as u32 - e as u32));
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degrevlex_textbook_cases() {
        let o = MonomialOrder::DegRevLex;
        // x2^2 > x1*x3
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        // x1*x2 > x2^2  (last difference at x2: 1 < 2)
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[0, 2, 0])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_first_difference() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[1, 0, 9])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::Block { first_block: 1 };
        // w^1 * anything beats w-free monomials of any degree
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        // within equal first block, degrevlex on the tail
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[1, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn sort_key_agrees_with_cmp() {
        let orders = [
            MonomialOrder::Lex,
            MonomialOrder::DegRevLex,
            MonomialOrder::Block { first_block: 2 },
        ];
        let ms = [
            m(&[0, 0, 0, 0]),
            m(&[1, 0, 2, 0]),
            m(&[0, 1, 1, 1]),
            m(&[2, 2, 0, 0]),
            m(&[0, 0, 0, 5]),
            m(&[1, 1, 1, 1]),
        ];
        for o in &orders {
            for a in &ms {
                for b in &ms {
                    assert_eq!(
                        o.sort_key(a).cmp(&o.sort_key(b)),
                        o.cmp(a, b),
                        "order {o} on {:?} vs {:?}",
                        a.exps(),
                        b.exps()
                    );
                }
            }
        }
    }
}
