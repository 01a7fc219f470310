use std::cmp::Ordering;
use std::fmt;

use super::var::VarId;

/// Sparse exponent vector: sorted `(variable, exponent)` pairs with no zero
/// exponents. Negative exponents are allowed (Laurent monomials).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(VarId, i32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    /// Builds a monomial from arbitrary pairs, combining repeats and dropping
    /// zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, i32)>>(pairs: I) -> Self {
        let mut exps: Vec<(VarId, i32)> = Vec::new();
        for (v, e) in pairs {
            exps.push((v, e));
        }
        exps.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(VarId, i32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Monomial { exps: out }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|k| self.exps[k].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.exps.iter().any(|&(_, e)| e < 0)
    }

    /// Merge-multiplication: exponents add.
    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + rhs.exps.len());
        let (mut a, mut b) = (self.exps.iter().peekable(), rhs.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        if ea + eb != 0 {
                            out.push((va, ea + eb));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { exps: out }
    }

    /// Laurent division: exponents subtract. Always defined.
    pub fn div(&self, rhs: &Monomial) -> Monomial {
        self.mul(&rhs.inverse())
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// Componentwise `self <= rhs`, the divisibility test for honest
    /// (nonnegative-exponent) polynomial long division.
    pub fn divides(&self, rhs: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| e <= rhs.exponent(v))
    }

    /// Graded-lexicographic comparison: total degree first, then the first
    /// variable (in `VarId` order) whose exponents differ decides, larger
    /// exponent winning.
    fn grlex_cmp(&self, rhs: &Monomial) -> Ordering {
        match self.total_degree().cmp(&rhs.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.exps.iter().peekable(), rhs.exps.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    // Variable present on one side only: its exponent is
                    // compared against an implicit zero.
                    Ordering::Less => match ea.cmp(&0) {
                        Ordering::Equal => unreachable!("stored zero exponent"),
                        ord => return ord,
                    },
                    Ordering::Greater => match 0.cmp(&eb) {
                        Ordering::Equal => unreachable!("stored zero exponent"),
                        ord => return ord,
                    },
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&&(_, eb))) => return 0.cmp(&eb),
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(VarId, i32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn grlex_degree_dominates() {
        let t0 = VarId::t(0);
        let t1 = VarId::t(1);
        assert!(m(&[(t0, 2)]) > m(&[(t0, 1), (t1, -2)]));
        assert!(m(&[(t0, 1), (t1, 1)]) > m(&[(t1, 1)]));
    }

    #[test]
    fn grlex_tie_break_is_leftmost_difference() {
        let t0 = VarId::t(0);
        let t1 = VarId::t(1);
        // same degree; t0-exponent decides
        assert!(m(&[(t0, 2)]) > m(&[(t0, 1), (t1, 1)]));
        assert!(m(&[(t0, 1), (t1, 1)]) > m(&[(t1, 2)]));
        // negative exponent on the left loses to its absence
        assert!(m(&[(t0, -1), (t1, 1)]) < m(&[]));
    }

    #[test]
    fn mul_div_cancel() {
        let a = m(&[(VarId::x(0), 2), (VarId::x(1), -1)]);
        let b = m(&[(VarId::x(1), 1), (VarId::u(0), 3)]);
        assert_eq!(a.mul(&b).div(&b), a);
        assert_eq!(a.div(&a), Monomial::one());
    }

    #[test]
    fn divisibility_is_componentwise() {
        let a = m(&[(VarId::t(0), 1), (VarId::t(1), 2)]);
        assert!(m(&[(VarId::t(1), 1)]).divides(&a));
        assert!(!m(&[(VarId::t(2), 1)]).divides(&a));
    }
}
