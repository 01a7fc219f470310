use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::Rational;
use super::var::VarId;
use crate::error::{Error, Result};

/// Sparse multivariate Laurent polynomial over arbitrary-precision integers.
///
/// Terms are kept in a `BTreeMap` keyed by the graded-lexicographic monomial
/// order, so iteration, equality and serialization are canonical. No zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        LaurentPoly { terms }
    }

    pub fn var(v: VarId) -> Self {
        LaurentPoly::monomial(Monomial::var(v), BigInt::one())
    }

    pub fn var_pow(v: VarId, e: i32) -> Self {
        LaurentPoly::monomial(Monomial::var_pow(v, e), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map_or(false, |c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms leading-first, the order used for display and serialization.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All variables occurring in the polynomial, in `VarId` order.
    pub fn vars(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = Vec::new();
        for m in self.terms.keys() {
            for v in m.vars() {
                vs.push(v);
            }
        }
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.keys().any(Monomial::has_negative_exponent)
    }

    /// Maximum exponent of `v` over all terms (0 if absent).
    pub fn degree_in(&self, v: VarId) -> i32 {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    /// The unique componentwise-minimal monomial, if one exists. For a
    /// Caldero-Chapoton character this is the denominator monomial.
    pub fn min_support_monomial(&self) -> Option<Monomial> {
        if self.is_zero() {
            return None;
        }
        let vars = self.vars();
        let candidate = Monomial::from_pairs(vars.iter().map(|&v| {
            let e = self
                .terms
                .keys()
                .map(|m| m.exponent(v))
                .min()
                .expect("nonempty");
            (v, e)
        }));
        if self.terms.contains_key(&candidate) {
            Some(candidate)
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division: returns `q` with `self = q * divisor`, or
    /// [`Error::NotDivisible`] if the remainder is nonzero.
    ///
    /// Both operands are first shifted by their per-variable minimal exponents
    /// so the problem becomes honest polynomial long division by leading term
    /// under the canonical order; the monomial shift is restored on the
    /// quotient. Laurent units are monomials, so divisibility is preserved by
    /// the shift.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let shift_a = self.min_exponent_shift();
        let shift_b = divisor.min_exponent_shift();
        let a = self.mul_monomial(&shift_a.inverse(), &BigInt::one());
        let b = divisor.mul_monomial(&shift_b.inverse(), &BigInt::one());

        let (lead_m, lead_c) = b.leading().expect("divisor nonzero");
        let mut rem = a;
        let mut quot = LaurentPoly::zero();
        while let Some((m, c)) = rem.leading() {
            if !lead_m.divides(m) {
                return Err(Error::NotDivisible);
            }
            let (q, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let tm = m.div(lead_m);
            rem = &rem - &b.mul_monomial(&tm, &q);
            quot.add_term(tm, q);
        }
        Ok(quot.mul_monomial(&shift_a.div(&shift_b), &BigInt::one()))
    }

    /// Monomial with the componentwise minimal exponent of every variable.
    fn min_exponent_shift(&self) -> Monomial {
        let vars = self.vars();
        Monomial::from_pairs(vars.into_iter().map(|v| {
            let e = self
                .terms
                .keys()
                .map(|m| m.exponent(v))
                .min()
                .expect("nonempty");
            (v, e)
        }))
    }

    /// Ring-homomorphic substitution; variables absent from `images` pass
    /// through unchanged.
    ///
    /// A variable occurring with a negative exponent must either be absent
    /// from `images` or map to a unit (a single term with coefficient ±1).
    pub fn substitute(&self, images: &BTreeMap<VarId, LaurentPoly>) -> Result<LaurentPoly> {
        let mut pow_cache: HashMap<(VarId, i32), LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut term = LaurentPoly::constant(c.clone());
            for (v, e) in m.iter() {
                let factor = match images.get(&v) {
                    None => LaurentPoly::var_pow(v, e),
                    Some(img) => match pow_cache.entry((v, e)) {
                        std::collections::hash_map::Entry::Occupied(cached) => {
                            cached.get().clone()
                        }
                        std::collections::hash_map::Entry::Vacant(slot) => {
                            let val = image_power(v, img, e)?;
                            slot.insert(val.clone());
                            val
                        }
                    },
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point. Every variable of the polynomial
    /// must be assigned; variables with negative exponents must be nonzero.
    pub fn eval_rational(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut val = Rational::from(c.clone());
            for (v, e) in m.iter() {
                let x = point.get(&v).ok_or(Error::MissingAssignment(v))?;
                if e < 0 && x.is_zero() {
                    return Err(Error::ZeroDenominator(v));
                }
                val *= rational_pow(x, e);
            }
            total += val;
        }
        Ok(total)
    }
}

fn rational_pow(x: &Rational, e: i32) -> Rational {
    // num-rational handles negative exponents of nonzero values
    x.pow(e)
}

fn image_power(v: VarId, img: &LaurentPoly, e: i32) -> Result<LaurentPoly> {
    if e >= 0 {
        return Ok(img.pow(e as u32));
    }
    // Negative exponent: the image must be a unit of Z[x^{±1}].
    if img.term_count() != 1 {
        return Err(Error::NonInvertibleImage(v));
    }
    let (m, c) = img.leading().expect("single term");
    if !c.abs().is_one() {
        return Err(Error::NonInvertibleImage(v));
    }
    let coeff = if c.is_negative() && e % 2 != 0 {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    Ok(LaurentPoly::monomial(m.pow(e), coeff))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
