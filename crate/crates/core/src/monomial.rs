//! Monomials in x, y, z under graded reverse lexicographic order (x > y > z).

use std::cmp::Ordering;
use std::fmt;

pub const VARIABLES: [char; 3] = ['x', 'y', 'z'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exp: [u16; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exp: [0, 0, 0] };

    pub const fn new(a: u16, b: u16, c: u16) -> Self {
        Self { exp: [a, b, c] }
    }

    /// `var^e` where `var` is 0, 1, 2 for x, y, z.
    pub fn power(var: usize, e: u16) -> Self {
        let mut exp = [0; 3];
        exp[var] = e;
        Self { exp }
    }

    pub fn exponents(&self) -> [u16; 3] {
        self.exp
    }

    pub fn degree(&self) -> u32 {
        self.exp.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exp: [
                self.exp[0] + other.exp[0],
                self.exp[1] + other.exp[1],
                self.exp[2] + other.exp[2],
            ],
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exp[0] <= other.exp[0] && self.exp[1] <= other.exp[1] && self.exp[2] <= other.exp[2]
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exp: [
                other.exp[0] - self.exp[0],
                other.exp[1] - self.exp[1],
                other.exp[2] - self.exp[2],
            ],
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exp: [
                self.exp[0].max(other.exp[0]),
                self.exp[1].max(other.exp[1]),
                self.exp[2].max(other.exp[2]),
            ],
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exp.iter().zip(other.exp.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask of variables appearing with positive exponent.
    pub fn support(&self) -> u8 {
        (0..3).filter(|&i| self.exp[i] > 0).fold(0, |m, i| m | (1 << i))
    }

    /// Position of this monomial among the degree-d monomials listed in
    /// descending order.
    #[inline]
    pub fn index_in_degree(&self) -> usize {
        let d = self.degree() as usize;
        let b = self.exp[1] as usize;
        let c = self.exp[2] as usize;
        c * (d + 1) - c * c.saturating_sub(1) / 2 + b
    }

    /// All monomials of degree `d`, descending.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let d16 = d as u16;
        let mut out = Vec::with_capacity(count_of_degree(d));
        for c in 0..=d16 {
            for b in 0..=(d16 - c) {
                out.push(Monomial::new(d16 - c - b, b, c));
            }
        }
        out
    }
}

/// Number of monomials of degree `d` in three variables.
pub fn count_of_degree(d: u32) -> usize {
    let d = d as usize;
    (d + 1) * (d + 2) / 2
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // reverse lex: smaller exponent in the last differing variable wins
            for i in (0..3).rev() {
                match self.exp[i].cmp(&other.exp[i]) {
                    Ordering::Equal => continue,
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    /// Writes the monomial with `*` between variables and `^` for exponents.
    pub(crate) fn write_machine(&self, out: &mut String) {
        let mut first = true;
        for (i, &e) in self.exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push(VARIABLES[i]);
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }

    pub(crate) fn write_human(&self, out: &mut String) {
        for (i, &e) in self.exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            out.push(VARIABLES[i]);
            if e > 1 {
                out.push_str(&e.to_string());
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return f.write_str("1");
        }
        let mut s = String::new();
        self.write_machine(&mut s);
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_degree_two_sequence() {
        let expected = [
            Monomial::new(2, 0, 0),
            Monomial::new(1, 1, 0),
            Monomial::new(0, 2, 0),
            Monomial::new(1, 0, 1),
            Monomial::new(0, 1, 1),
            Monomial::new(0, 0, 2),
        ];
        for w in expected.windows(2) {
            assert!(w[0] > w[1], "{} > {}", w[0], w[1]);
        }
        assert_eq!(Monomial::all_of_degree(2), expected.to_vec());
    }

    #[test]
    fn index_matches_enumeration() {
        for d in 0..15 {
            let all = Monomial::all_of_degree(d);
            assert_eq!(all.len(), count_of_degree(d));
            for (i, m) in all.iter().enumerate() {
                assert_eq!(m.index_in_degree(), i);
            }
            let mut sorted = all.clone();
            sorted.sort_by(|a, b| b.cmp(a));
            assert_eq!(sorted, all);
        }
    }

    #[test]
    fn division() {
        let a = Monomial::new(1, 2, 0);
        let b = Monomial::new(2, 2, 1);
        assert_eq!(a.quotient_of(&b), Some(Monomial::new(1, 0, 1)));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&Monomial::new(0, 3, 1)), Monomial::new(1, 3, 1));
        assert!(Monomial::new(2, 0, 0).is_coprime(&Monomial::new(0, 1, 1)));
    }
}
