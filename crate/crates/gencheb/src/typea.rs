//! The equioriented type-A quiver `0 <- 1 <- ... <- r-1`, its interval
//! modules and their Caldero-Chapoton characters in `Z[u^{±1}]`.
//!
//! Every indecomposable is an interval module `S_i^{(n)}` (socle `i`, length
//! `n`); its submodules are the bottom intervals, each quiver grassmannian is
//! a point, so the character is a plain sum of `n + 1` monomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::chebyshev;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Monomial, VarId};

/// The quiver `Q_r` with vertices `0 .. r-1` and arrows `i+1 -> i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuiverA {
    pub r: u32,
}

impl QuiverA {
    pub fn new(r: u32) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidModule("quiver rank must be >= 1".into()));
        }
        Ok(QuiverA { r })
    }

    /// Arrow list `(source, target)`; the orientation is data, not a
    /// hard-coded convention, so the Euler form below is testable against it.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        (0..self.r as usize - 1).map(|i| (i + 1, i)).collect()
    }

    /// Euler form `<d, e> = sum_i d_i e_i - sum_{a: s -> t} d_s e_t`.
    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> Result<i64> {
        let r = self.r as usize;
        if d.len() != r {
            return Err(Error::DimensionMismatch { expected: r, got: d.len() });
        }
        if e.len() != r {
            return Err(Error::DimensionMismatch { expected: r, got: e.len() });
        }
        let mut value: i64 = (0..r).map(|i| d[i] * e[i]).sum();
        for (s, t) in self.arrows() {
            value -= d[s] * e[t];
        }
        Ok(value)
    }

    /// All interval modules `S_i^{(n)}` with `n >= 1`, in `(i, n)` order.
    pub fn modules(&self) -> Vec<TypeAModule> {
        let mut out = Vec::new();
        for i in 0..self.r {
            for n in 1..=(self.r - i) {
                out.push(TypeAModule { i, n });
            }
        }
        out
    }
}

/// Interval module `S_i^{(n)}`: socle vertex `i`, length `n`; `n = 0` is the
/// zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TypeAModule {
    pub i: u32,
    pub n: u32,
}

impl TypeAModule {
    pub fn new(quiver: QuiverA, i: u32, n: u32) -> Result<Self> {
        if i >= quiver.r || n > quiver.r - i {
            return Err(Error::InvalidModule(format!(
                "S_{i}^({n}) does not exist for r = {}",
                quiver.r
            )));
        }
        Ok(TypeAModule { i, n })
    }
}

/// Indicator dimension vector of the interval `[i, i+n-1]`.
pub fn dim_vector(quiver: QuiverA, m: TypeAModule) -> Vec<i64> {
    (0..quiver.r)
        .map(|j| i64::from(j >= m.i && j < m.i + m.n))
        .collect()
}

/// Dimension vectors of all submodules of `S_i^{(n)}`: the bottom intervals
/// `S_i^{(k)}`, `k = 0 .. n`. Each quiver grassmannian is a single point, so
/// every Euler characteristic is 1.
pub fn submodule_dims(quiver: QuiverA, m: TypeAModule) -> Vec<Vec<i64>> {
    (0..=m.n)
        .map(|k| dim_vector(quiver, TypeAModule { i: m.i, n: k }))
        .collect()
}

/// Caldero-Chapoton character
/// `X_M = sum_e chi(Gr_e(M)) prod_i u_i^{-<e, a_i> - <a_i, dim M - e>}`
/// with every `chi = 1`; the zero module maps to 1.
pub fn cc_character(quiver: QuiverA, m: TypeAModule) -> LaurentPoly {
    let r = quiver.r as usize;
    let dim = dim_vector(quiver, m);
    let mut out = LaurentPoly::zero();
    for e in submodule_dims(quiver, m) {
        let rest: Vec<i64> = (0..r).map(|j| dim[j] - e[j]).collect();
        let mono = Monomial::from_pairs((0..r).map(|j| {
            let mut alpha = vec![0i64; r];
            alpha[j] = 1;
            let exp = -quiver.euler_form(&e, &alpha).expect("lengths match")
                - quiver.euler_form(&alpha, &rest).expect("lengths match");
            (VarId::u(j as i32), exp as i32)
        }));
        out = &out + &LaurentPoly::monomial(mono, BigInt::one());
    }
    out
}

/// Character of the shifted projective `P_i[1]`: the initial variable `u_i`.
pub fn shifted_projective_character(i: u32) -> LaurentPoly {
    LaurentPoly::var(VarId::u(i as i32))
}

/// The exchange partner `u_i' = (u_{i-1} + u_{i+1}) / u_i` with
/// `u_{-1} = u_r = 1`; equals `cc_character(S_i)`.
pub fn uprime(quiver: QuiverA, i: u32) -> Result<LaurentPoly> {
    if i >= quiver.r {
        return Err(Error::InvalidModule(format!(
            "vertex {i} out of range for r = {}",
            quiver.r
        )));
    }
    let low = if i == 0 {
        LaurentPoly::one()
    } else {
        LaurentPoly::var(VarId::u(i as i32 - 1))
    };
    let high = if i + 1 == quiver.r {
        LaurentPoly::one()
    } else {
        LaurentPoly::var(VarId::u(i as i32 + 1))
    };
    Ok((&low + &high).mul_monomial(&Monomial::var_pow(VarId::u(i as i32), -1), &BigInt::one()))
}

/// Substitutes the simple characters into `P_n` and compares with the
/// character of `S_i^{(n)}`; exact equality verdict.
pub fn verify_chebyshev_character(quiver: QuiverA, i: u32, n: u32) -> Result<bool> {
    let m = TypeAModule::new(quiver, i, n)?;
    if n == 0 {
        return Ok(cc_character(quiver, m).is_one());
    }
    let sigma: BTreeMap<VarId, LaurentPoly> = (0..n)
        .map(|j| {
            (
                VarId::t(j as i32),
                cc_character(quiver, TypeAModule { i: i + j, n: 1 }),
            )
        })
        .collect();
    let rhs = chebyshev::recurrence(n).substitute(&sigma)?;
    Ok(cc_character(quiver, m) == rhs)
}

/// Checks `P_{r+1}(X_{S_0}, ..., X_{S_{r-1}}, u_{r-1}) = 1` exactly.
pub fn verify_presentation_relation(quiver: QuiverA) -> bool {
    let r = quiver.r;
    let mut sigma: BTreeMap<VarId, LaurentPoly> = (0..r)
        .map(|j| {
            (
                VarId::t(j as i32),
                cc_character(quiver, TypeAModule { i: j, n: 1 }),
            )
        })
        .collect();
    sigma.insert(VarId::t(r as i32), LaurentPoly::var(VarId::u(r as i32 - 1)));
    let value = chebyshev::recurrence(r + 1)
        .substitute(&sigma)
        .expect("no negative exponents in P_{r+1}");
    value.is_one()
}

/// Round trip of the presentation maps: sends `t_i -> X_{S_i}` (and
/// `t_r -> u_{r-1}`), rebuilds the initial cluster by the downward recursion
/// `y_r = 1`, `y_{r-1} = u_{r-1}`, `y_{i-1} = y_i * X_{S_i} - y_{i+1}`, and
/// checks `y_i = u_i` for `i in [0, r-1]` plus the boundary `y_{-1} = 1`.
/// Also re-checks the generator recursion `u_{i+1} = u_i u_i' - u_{i-1}`.
pub fn presentation_roundtrip(quiver: QuiverA) -> bool {
    let r = quiver.r as usize;
    let images: Vec<LaurentPoly> = (0..r)
        .map(|j| cc_character(quiver, TypeAModule { i: j as u32, n: 1 }))
        .collect();
    // downward pass recovers the initial cluster variables
    let mut above = LaurentPoly::one(); // y_r
    let mut cur = LaurentPoly::var(VarId::u(r as i32 - 1)); // y_{r-1} = image of t_r
    for i in (0..r).rev() {
        let expected = LaurentPoly::var(VarId::u(i as i32));
        if cur != expected {
            return false;
        }
        let below = &(&cur * &images[i]) - &above;
        above = cur;
        cur = below;
    }
    if !cur.is_one() {
        return false; // y_{-1}
    }
    // generator recursion in the u ring: u_{i+1} = u_i u_i' - u_{i-1}
    let mut prev = LaurentPoly::one(); // u_{-1}
    for i in 0..r {
        let ui = LaurentPoly::var(VarId::u(i as i32));
        let next = &(&ui * &images[i]) - &prev;
        let expected = if i + 1 == r {
            LaurentPoly::one() // u_r
        } else {
            LaurentPoly::var(VarId::u(i as i32 + 1))
        };
        if next != expected {
            return false;
        }
        prev = ui;
    }
    true
}

/// Characters of all `r(r+1)/2` indecomposables, keyed by `(i, n)`, plus the
/// `r` initial variables.
pub struct CharacterTable {
    pub quiver: QuiverA,
    pub modules: BTreeMap<(u32, u32), LaurentPoly>,
    pub initial: Vec<LaurentPoly>,
}

pub fn character_table(quiver: QuiverA) -> CharacterTable {
    let modules = quiver
        .modules()
        .into_iter()
        .map(|m| ((m.i, m.n), cc_character(quiver, m)))
        .collect();
    let initial = (0..quiver.r).map(shifted_projective_character).collect();
    CharacterTable { quiver, modules, initial }
}

impl CharacterTable {
    /// All characters pairwise distinct (modules and initial variables).
    pub fn all_distinct(&self) -> bool {
        let mut seen: Vec<&LaurentPoly> = self.modules.values().collect();
        seen.extend(self.initial.iter());
        for a in 0..seen.len() {
            for b in a + 1..seen.len() {
                if seen[a] == seen[b] {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn quiver(r: u32) -> QuiverA {
        QuiverA::new(r).unwrap()
    }

    #[test]
    fn dim_vectors_are_intervals() {
        let q = quiver(3);
        assert_eq!(dim_vector(q, TypeAModule { i: 0, n: 2 }), vec![1, 1, 0]);
        assert_eq!(dim_vector(q, TypeAModule { i: 2, n: 1 }), vec![0, 0, 1]);
        assert_eq!(dim_vector(q, TypeAModule { i: 1, n: 0 }), vec![0, 0, 0]);
    }

    #[test]
    fn euler_form_from_arrow_list() {
        let q = quiver(2);
        // one arrow 1 -> 0
        assert_eq!(q.euler_form(&[0, 1], &[1, 0]).unwrap(), -1);
        assert_eq!(q.euler_form(&[1, 0], &[1, 0]).unwrap(), 1);
        assert_eq!(q.euler_form(&[0, 1], &[0, 1]).unwrap(), 1);
        assert_eq!(q.euler_form(&[1, 0], &[0, 1]).unwrap(), 0);
        assert!(matches!(
            q.euler_form(&[1], &[0, 1]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn submodules_are_bottom_intervals() {
        let q = quiver(2);
        assert_eq!(
            submodule_dims(q, TypeAModule { i: 0, n: 2 }),
            vec![vec![0, 0], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(
            submodule_dims(q, TypeAModule { i: 1, n: 1 }),
            vec![vec![0, 0], vec![0, 1]]
        );
        assert_eq!(
            submodule_dims(q, TypeAModule { i: 0, n: 0 }),
            vec![vec![0, 0]]
        );
    }

    #[test]
    fn cc_character_hand_examples() {
        let q2 = quiver(2);
        assert_eq!(
            cc_character(q2, TypeAModule { i: 0, n: 1 }),
            parse_poly("u0^-1 + u0^-1 u1").unwrap()
        );
        assert_eq!(
            cc_character(q2, TypeAModule { i: 0, n: 2 }),
            parse_poly("u0^-1 u1^-1 + u1^-1 + u0^-1").unwrap()
        );
        let q1 = quiver(1);
        assert_eq!(
            cc_character(q1, TypeAModule { i: 0, n: 1 }),
            parse_poly("2 u0^-1").unwrap()
        );
    }

    #[test]
    fn uprime_examples_and_identity() {
        let q2 = quiver(2);
        assert_eq!(uprime(q2, 0).unwrap(), parse_poly("u0^-1 + u0^-1 u1").unwrap());
        assert_eq!(uprime(q2, 1).unwrap(), parse_poly("u0 u1^-1 + u1^-1").unwrap());
        assert_eq!(uprime(quiver(1), 0).unwrap(), parse_poly("2 u0^-1").unwrap());
        for r in 1..=5 {
            let q = quiver(r);
            for i in 0..r {
                assert_eq!(
                    uprime(q, i).unwrap(),
                    cc_character(q, TypeAModule { i, n: 1 }),
                    "r={r}, i={i}"
                );
            }
        }
    }

    #[test]
    fn chebyshev_character_identity_small() {
        for r in 1..=5 {
            let q = quiver(r);
            for m in q.modules() {
                assert!(
                    verify_chebyshev_character(q, m.i, m.n).unwrap(),
                    "r={r}, module {m:?}"
                );
            }
        }
    }

    #[test]
    fn presentation_relation_small() {
        for r in 1..=5 {
            assert!(verify_presentation_relation(quiver(r)), "r={r}");
        }
    }

    #[test]
    fn presentation_roundtrip_small() {
        for r in 1..=5 {
            assert!(presentation_roundtrip(quiver(r)), "r={r}");
        }
    }

    #[test]
    fn character_table_counts_and_distinctness() {
        let table = character_table(quiver(2));
        assert_eq!(table.modules.len(), 3);
        assert_eq!(table.initial.len(), 2);
        assert!(table.all_distinct());
        let table4 = character_table(quiver(4));
        assert_eq!(table4.modules.len(), 10);
        assert!(table4.all_distinct());
    }

    #[test]
    fn eval_at_ones_counts_submodules() {
        let q = quiver(4);
        let ones: BTreeMap<VarId, crate::poly::Rational> = (0..4)
            .map(|j| (VarId::u(j), crate::poly::Rational::one()))
            .collect();
        for m in q.modules() {
            let value = cc_character(q, m).eval_rational(&ones).unwrap();
            assert_eq!(
                value,
                crate::poly::Rational::from_integer(BigInt::from(m.n + 1))
            );
        }
    }

    #[test]
    fn denominator_is_the_dimension_vector() {
        for r in 1..=5u32 {
            let q = quiver(r);
            for m in q.modules() {
                let denom = cc_character(q, m).min_support_monomial().unwrap();
                let expected = Monomial::from_pairs(
                    (m.i..m.i + m.n).map(|j| (VarId::u(j as i32), -1)),
                );
                assert_eq!(denom, expected, "r={r}, module {m:?}");
            }
        }
    }

    #[test]
    fn invalid_modules_rejected() {
        let q = quiver(3);
        assert!(TypeAModule::new(q, 3, 1).is_err());
        assert!(TypeAModule::new(q, 1, 3).is_err());
        assert!(TypeAModule::new(q, 1, 2).is_ok());
        assert!(QuiverA::new(0).is_err());
    }
}
