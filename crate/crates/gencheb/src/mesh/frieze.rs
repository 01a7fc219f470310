use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::shape::{moebius_glide, moebius_period, Coord, ShapeSpec, TranslationQuiver};
use crate::chebyshev;
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Rational, VarId};

/// Values that can label a frieze: the mesh step is
/// `label(i, n+1) = (label(i, n) * label(i+1, n) - 1) / label(i+1, n-1)`
/// with exact division.
trait FriezeValue: Clone {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mesh_step(top_left: &Self, top_right: &Self, bottom: &Self) -> Result<Self>;
}

impl FriezeValue for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }

    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }

    fn mesh_step(tl: &Self, tr: &Self, bottom: &Self) -> Result<Self> {
        (&(tl * tr) - &LaurentPoly::one()).div_exact(bottom)
    }
}

impl FriezeValue for Rational {
    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn mesh_step(tl: &Self, tr: &Self, bottom: &Self) -> Result<Self> {
        if Zero::is_zero(bottom) {
            return Err(Error::DegenerateSample);
        }
        Ok((tl * tr - Self::one()) / bottom)
    }
}

/// Quasi-simple label of the tube of rank `p`:
/// `x_{i,n} = P_n(x_i, ..., x_{i+n-1})` with indices mod `p`.
pub fn tube_label(p: u32, i: i32, n: u32) -> LaurentPoly {
    assert!(p >= 1);
    if n == 0 {
        return LaurentPoly::one();
    }
    let sigma: BTreeMap<VarId, LaurentPoly> = (0..n as i32)
        .map(|j| {
            (
                VarId::t(j),
                LaurentPoly::var(VarId::x((i + j).rem_euclid(p as i32))),
            )
        })
        .collect();
    chebyshev::recurrence(n)
        .substitute(&sigma)
        .expect("seed images are variables")
}

/// Label of the ZA-infinity vertex `(i, n)` over the symbolic seeds `x_i`.
pub fn za_label(i: i32, n: u32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    let sigma: BTreeMap<VarId, LaurentPoly> = (0..n as i32)
        .map(|j| (VarId::t(j), LaurentPoly::var(VarId::x(i + j))))
        .collect();
    chebyshev::recurrence(n)
        .substitute(&sigma)
        .expect("seed images are variables")
}

/// Propagates symbolic frieze labels row by row from the given row-1 seeds.
///
/// Seeds must cover every stored seed column and be nonzero. On a ZA window
/// only the triangle `(i, n)` with `i + n - 1 <= i_max` is computable from the
/// stored seeds; labels outside it are omitted. Möbius bands do not admit
/// polynomial labels over free seeds (the closure forces denominators), so
/// they are rejected here and handled by the rational propagation.
pub fn frieze_labels(
    quiver: &TranslationQuiver,
    seeds: &BTreeMap<i32, LaurentPoly>,
) -> Result<BTreeMap<Coord, LaurentPoly>> {
    if matches!(quiver.spec, ShapeSpec::Moebius { .. }) {
        return Err(Error::InvalidShape(
            "Moebius friezes need rational seeds; use frieze_labels_rational".into(),
        ));
    }
    Ok(restrict(quiver, propagate(quiver, seeds)?))
}

/// Rational frieze propagation. For the Möbius band the `r` seeds are
/// extended around the band by the closure relation before the rows are
/// propagated, and the glide identification is verified on the result.
pub fn frieze_labels_rational(
    quiver: &TranslationQuiver,
    seeds: &BTreeMap<i32, Rational>,
) -> Result<BTreeMap<Coord, Rational>> {
    match quiver.spec {
        ShapeSpec::Moebius { r } => {
            let given: Vec<Rational> = (0..r as i32)
                .map(|i| seeds.get(&i).cloned().ok_or(Error::MissingSeed(i)))
                .collect::<Result<_>>()?;
            let row = extend_moebius_row(r, &given)?;
            if row.iter().any(Zero::is_zero) {
                return Err(Error::DegenerateSample);
            }
            let full: BTreeMap<i32, Rational> =
                (0..).zip(row.iter().cloned()).collect();
            let grid = propagate(quiver, &full)?;
            // the cylinder labels must respect the glide identification
            for (&v, value) in &grid {
                let w = moebius_glide(r, v);
                if grid.get(&w) != Some(value) {
                    return Err(Error::InvalidShape(format!(
                        "glide identification failed at {v}"
                    )));
                }
            }
            Ok(restrict(quiver, grid))
        }
        _ => Ok(restrict(quiver, propagate(quiver, seeds)?)),
    }
}

fn restrict<V: Clone>(
    quiver: &TranslationQuiver,
    grid: BTreeMap<Coord, V>,
) -> BTreeMap<Coord, V> {
    quiver
        .vertices
        .iter()
        .filter_map(|&v| grid.get(&v).map(|val| (v, val.clone())))
        .collect()
}

/// Extends `r` seed values to one full period `c_0 .. c_{r+2}` of the Möbius
/// quasi-simple row using `c_s = (1 + P_{r-1}(c_{s-r}..c_{s-2})) /
/// P_r(c_{s-r}..c_{s-1})`, i.e. solving `P_{r+1}(window) = 1` for the last
/// entry of each window.
pub fn extend_moebius_row(r: u32, seeds: &[Rational]) -> Result<Vec<Rational>> {
    assert_eq!(seeds.len(), r as usize);
    let mut row = seeds.to_vec();
    let target = moebius_period(r) as usize;
    while row.len() < target {
        let s = row.len();
        let window = &row[s - r as usize..];
        let denom = cheb_value(window);
        if denom.is_zero() {
            return Err(Error::DegenerateSample);
        }
        let numer: Rational = cheb_value(&window[..r as usize - 1]) + Rational::one();
        row.push(numer / denom);
    }
    Ok(row)
}

/// Evaluates `P_k` at the `k` given values via the three-term recurrence.
pub fn cheb_value(window: &[Rational]) -> Rational {
    let mut prev: Rational = Zero::zero(); // P_{-1}
    let mut cur: Rational = One::one(); // P_0
    for v in window {
        let next = v * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Builds the full label grid over the shape's columns, rows `1..=n_max`.
/// For wrapped shapes (tube, Möbius cylinder) this is every stored column.
fn propagate<V: FriezeValue>(
    quiver: &TranslationQuiver,
    seeds: &BTreeMap<i32, V>,
) -> Result<BTreeMap<Coord, V>> {
    let columns = quiver.seed_columns();
    for &i in &columns {
        match seeds.get(&i) {
            None => return Err(Error::MissingSeed(i)),
            Some(s) if s.is_zero() => return Err(Error::MissingSeed(i)),
            _ => {}
        }
    }
    let (wrap, n_max) = match quiver.spec {
        ShapeSpec::ZaWindow { n_max, .. } => (None, n_max),
        ShapeSpec::Tube { p, n_max } => (Some(p as i32), n_max),
        ShapeSpec::Moebius { r } => (Some(moebius_period(r) as i32), r),
    };
    let norm = move |i: i32| match wrap {
        Some(m) => i.rem_euclid(m),
        None => i,
    };
    // row 0 is the unit row; build rows upward
    let mut grid: BTreeMap<Coord, V> = BTreeMap::new();
    for &i in &columns {
        grid.insert(Coord::new(i, 1), seeds[&i].clone());
    }
    for n in 1..n_max {
        for &i in &columns {
            let right = norm(i + 1);
            let (tl, tr) = match (grid.get(&Coord::new(i, n)), grid.get(&Coord::new(right, n))) {
                (Some(a), Some(b)) => (a.clone(), b.clone()),
                _ => continue, // outside the computable triangle
            };
            let bottom = if n == 1 {
                V::one()
            } else {
                match grid.get(&Coord::new(right, n - 1)) {
                    Some(b) => b.clone(),
                    None => continue,
                }
            };
            let label = V::mesh_step(&tl, &tr, &bottom)?;
            grid.insert(Coord::new(i, n + 1), label);
        }
    }
    Ok(grid)
}
