//! Multiplication identities for characters of regular modules, verified as
//! exact polynomial identities in the cluster-mesh model: tube labels live in
//! `Z[x_0 .. x_{p-1}]`, wild labels in the free ring on `x_0 .. x_{n+m}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{map_ordered, ExecMode};
use crate::mesh::shape::Coord;
use crate::mesh::tube_label;
use crate::poly::{LaurentPoly, VarId};
use crate::{chebyshev, poly::Rational};

/// One instance of the tube multiplication theorem: modules `M = R_0^{(n)}`,
/// `N = R_j^{(m)}` in the rank-`p` tube, with shift `k`.
///
/// The statement's hypotheses are strict: `0 < j + kp < n` and
/// `m > n - j - kp`. (Its proof opens with the non-strict variants; we
/// implement the statement.)
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TubeInstance {
    pub p: u32,
    pub n: u32,
    pub m: u32,
    pub j: u32,
    pub k: i32,
}

impl TubeInstance {
    /// `i = j + kp`, the lifted shift.
    pub fn shift(&self) -> i64 {
        self.j as i64 + self.k as i64 * self.p as i64
    }

    pub fn is_admissible(&self) -> bool {
        let i = self.shift();
        self.p >= 1
            && self.n >= 1
            && self.m >= 1
            && self.j < self.p
            && 0 < i
            && i < self.n as i64
            && self.m as i64 > self.n as i64 - i
    }

    fn require_admissible(&self) -> Result<i64> {
        if !self.is_admissible() {
            return Err(Error::InadmissibleInstance(format!("{self:?}")));
        }
        Ok(self.shift())
    }

    pub fn key(&self) -> String {
        format!("p={},n={},m={},j={},k={}", self.p, self.n, self.m, self.j, self.k)
    }
}

/// Shifts `k` making `(p, n, m, j)` admissible, in increasing order.
pub fn admissible_shifts(p: u32, n: u32, m: u32, j: u32) -> Vec<i32> {
    debug_assert!(p >= 1 && j < p);
    let (p_i, n_i, m_i, j_i) = (p as i64, n as i64, m as i64, j as i64);
    let mut out = Vec::new();
    // 0 < j + kp < n bounds k by (-j/p, (n-j)/p)
    let k_lo = (-j_i).div_euclid(p_i) - 1;
    let k_hi = (n_i - j_i).div_euclid(p_i) + 1;
    for k in k_lo..=k_hi {
        let i = j_i + k * p_i;
        if 0 < i && i < n_i && m_i > n_i - i {
            out.push(k as i32);
        }
    }
    out
}

/// `dim Ext^1(R_j^{(m)}, R_0^{(n)})` in the tube model: the number of
/// admissible shifts.
pub fn ext_dim_tube(p: u32, n: u32, m: u32, j: u32) -> u32 {
    admissible_shifts(p, n, m, j).len() as u32
}

/// Middle terms of the two non-split triangles, as pairs of tube coordinates
/// with canonical socle indices; quasi-length 0 denotes the unit factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleDecomposition {
    /// Middle term `E = R_0^{(i+m)}  ⊕ R_j^{(n-i)}` of the exact-sequence
    /// triangle.
    pub e: (Coord, Coord),
    /// Middle term `B = R_0^{(i-1)} ⊕ R_{n+1}^{(m+i-n-1)}` of the opposite
    /// triangle.
    pub b: (Coord, Coord),
}

/// The four module coordinates of the Hall-product decomposition of an
/// admissible instance.
pub fn triangle_terms(inst: &TubeInstance) -> Result<TriangleDecomposition> {
    let i = inst.require_admissible()?;
    let p = inst.p as i64;
    let canon = |socle: i64, len: i64| -> Coord {
        if len == 0 {
            // unit factor; keep socle 0 so the coordinate is canonical
            Coord::new(0, 0)
        } else {
            Coord::new(socle.rem_euclid(p) as i32, len as u32)
        }
    };
    let (n, m, j) = (inst.n as i64, inst.m as i64, inst.j as i64);
    Ok(TriangleDecomposition {
        e: (canon(0, i + m), canon(j, n - i)),
        b: (canon(0, i - 1), canon(n + 1, m + i - n - 1)),
    })
}

/// Both sides of one multiplication identity, compared exactly.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub equal: bool,
    pub decomposition: Option<TriangleDecomposition>,
}

fn coord_label(p: u32, c: Coord) -> LaurentPoly {
    tube_label(p, c.i, c.n)
}

/// Tube identity
/// `X_{R_j^{(m)}} X_{R_0^{(n)}} = X_{R_0^{(m+i)}} X_{R_j^{(n-i)}} +
/// X_{R_0^{(i-1)}} X_{R_{n+1}^{(m+i-n-1)}}` for `i = j + kp`, rendered via
/// tube labels in `Z[x_0 .. x_{p-1}]`.
pub fn tube_identity(inst: &TubeInstance) -> Result<IdentityCheck> {
    inst.require_admissible()?;
    let p = inst.p;
    let dec = triangle_terms(inst)?;
    let lhs = &tube_label(p, inst.j as i32, inst.m) * &tube_label(p, 0, inst.n);
    let rhs = &(&coord_label(p, dec.e.0) * &coord_label(p, dec.e.1))
        + &(&coord_label(p, dec.b.0) * &coord_label(p, dec.b.1));
    Ok(IdentityCheck { equal: lhs == rhs, lhs, rhs, decomposition: Some(dec) })
}

/// Label of `R_i^{(n)}` in a wild regular component: `P_n(x_i, ..,
/// x_{i+n-1})` in the free ring, no index reduction.
pub fn free_label(i: i64, n: i64) -> LaurentPoly {
    if n <= 0 {
        return LaurentPoly::one();
    }
    let sigma: BTreeMap<VarId, LaurentPoly> = (0..n)
        .map(|d| {
            (
                VarId::t(d as i32),
                LaurentPoly::var(VarId::x((i + d) as i32)),
            )
        })
        .collect();
    chebyshev::recurrence(n as u32)
        .substitute(&sigma)
        .expect("seed images are variables")
}

/// Wild-component identity `X_{R_j^{(m)}} X_{R_0^{(n)}} = X_{R_0^{(m+j)}}
/// X_{R_j^{(n-j)}} + X_{R_0^{(j-1)}} X_{R_{n+1}^{(m+j-n-1)}}` under
/// `0 < j < n`, `m > n - j`, verified in the free ring on `x_0 .. x_{n+m}`.
pub fn wild_identity(n: u32, m: u32, j: u32) -> Result<IdentityCheck> {
    let (n_i, m_i, j_i) = (n as i64, m as i64, j as i64);
    if !(0 < j_i && j_i < n_i && m_i > n_i - j_i) {
        return Err(Error::InadmissibleInstance(format!("n={n}, m={m}, j={j}")));
    }
    let lhs = &free_label(j_i, m_i) * &free_label(0, n_i);
    let rhs = &(&free_label(0, m_i + j_i) * &free_label(j_i, n_i - j_i))
        + &(&free_label(0, j_i - 1) * &free_label(n_i + 1, m_i + j_i - n_i - 1));
    // every socle + length stays within the declared variable window
    let bound = (n_i + m_i + 1) as i32;
    for poly in [&lhs, &rhs] {
        for v in poly.vars() {
            debug_assert!(v.index <= bound, "variable {v} outside x_0..x_{bound}");
        }
    }
    Ok(IdentityCheck { equal: lhs == rhs, lhs, rhs, decomposition: None })
}

/// The summed identity: `dim Ext^1(N, M) * X_M X_N` equals the sum of both
/// Hall-product terms over all admissible shifts.
#[derive(Clone, Debug)]
pub struct SummedCheck {
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub equal: bool,
    pub dim: u32,
}

pub fn summed_identity(p: u32, n: u32, m: u32, j: u32) -> Result<SummedCheck> {
    let shifts = admissible_shifts(p, n, m, j);
    if shifts.is_empty() {
        return Err(Error::NoExtension(format!("p={p}, n={n}, m={m}, j={j}")));
    }
    let dim = shifts.len() as u32;
    let product = &tube_label(p, 0, n) * &tube_label(p, j as i32, m);
    let lhs = &LaurentPoly::constant(dim as i64) * &product;
    let mut rhs = LaurentPoly::zero();
    for k in shifts {
        let inst = TubeInstance { p, n, m, j, k };
        let dec = triangle_terms(&inst)?;
        let term = &(&coord_label(p, dec.e.0) * &coord_label(p, dec.e.1))
            + &(&coord_label(p, dec.b.0) * &coord_label(p, dec.b.1));
        rhs = &rhs + &term;
    }
    Ok(SummedCheck { equal: lhs == rhs, lhs, rhs, dim })
}

/// Outcome of an exhaustive sweep; failures keep the offending instance key.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub instances_checked: u64,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every admissible tube instance with `p <= max_p`, `n, m <= max_len`,
/// ordered by instance key.
pub fn tube_instances(max_p: u32, max_len: u32) -> Vec<TubeInstance> {
    let mut out = Vec::new();
    for p in 1..=max_p {
        for n in 1..=max_len {
            for m in 1..=max_len {
                for j in 0..p {
                    for k in admissible_shifts(p, n, m, j) {
                        out.push(TubeInstance { p, n, m, j, k });
                    }
                }
            }
        }
    }
    out
}

/// Sweeps `tube_identity` over every admissible instance, plus the summed
/// identity (with its dimension cross-check) on every `(p, n, m, j)` with at
/// least one admissible shift, plus five random rational evaluations per
/// instance agreeing with the symbolic verdict.
pub fn tube_sweep(max_p: u32, max_len: u32, mode: ExecMode) -> SweepReport {
    let instances = tube_instances(max_p, max_len);
    let mut failures: Vec<String> = Vec::new();
    let results = map_ordered(mode, instances, |inst| {
        let mut errs = Vec::new();
        match tube_identity(&inst) {
            Ok(check) => {
                if !check.equal {
                    errs.push(format!("tube identity fails at {}", inst.key()));
                }
                let p = inst.p;
                let dec = check.decomposition.expect("tube identities carry one");
                let lhs = [tube_label(p, inst.j as i32, inst.m), tube_label(p, 0, inst.n)];
                let rhs = [
                    [coord_label(p, dec.e.0), coord_label(p, dec.e.1)],
                    [coord_label(p, dec.b.0), coord_label(p, dec.b.1)],
                ];
                if let Err(e) = rational_prescreen(&lhs, &rhs, check.equal, &inst.key()) {
                    errs.push(e);
                }
            }
            Err(e) => errs.push(format!("{} errored: {e}", inst.key())),
        }
        (inst, errs)
    });
    let mut instances_checked = 0u64;
    let mut summed_keys: Vec<(u32, u32, u32, u32)> = Vec::new();
    for (inst, errs) in results {
        instances_checked += 1;
        failures.extend(errs);
        let key = (inst.p, inst.n, inst.m, inst.j);
        if !summed_keys.contains(&key) {
            summed_keys.push(key);
        }
    }
    let summed = map_ordered(mode, summed_keys, |(p, n, m, j)| {
        let mut errs = Vec::new();
        match summed_identity(p, n, m, j) {
            Ok(check) => {
                if !check.equal {
                    errs.push(format!("summed identity fails at p={p},n={n},m={m},j={j}"));
                }
                if check.dim != ext_dim_tube(p, n, m, j) {
                    errs.push(format!(
                        "summed dimension mismatch at p={p},n={n},m={m},j={j}"
                    ));
                }
            }
            Err(e) => errs.push(format!("summed p={p},n={n},m={m},j={j} errored: {e}")),
        }
        errs
    });
    for errs in summed {
        instances_checked += 1;
        failures.extend(errs);
    }
    SweepReport { instances_checked, failures }
}

/// Sweeps `wild_identity` over `0 < j < n <= max_len`, `n - j < m <= max_len`.
pub fn wild_sweep(max_len: u32, mode: ExecMode) -> SweepReport {
    let mut instances = Vec::new();
    for n in 2..=max_len {
        for j in 1..n {
            for m in (n - j + 1)..=max_len {
                instances.push((n, m, j));
            }
        }
    }
    let results = map_ordered(mode, instances, |(n, m, j)| {
        let mut errs = Vec::new();
        match wild_identity(n, m, j) {
            Ok(check) => {
                if !check.equal {
                    errs.push(format!("wild identity fails at n={n},m={m},j={j}"));
                }
                if let Err(e) = rational_prescreen(
                    &check.lhs,
                    &check.rhs,
                    check.equal,
                    &format!("n={n},m={m},j={j}"),
                ) {
                    errs.push(e);
                }
            }
            Err(e) => errs.push(format!("wild n={n},m={m},j={j} errored: {e}")),
        }
        errs
    });
    let mut report = SweepReport { instances_checked: 0, failures: Vec::new() };
    for errs in results {
        report.instances_checked += 1;
        report.failures.extend(errs);
    }
    report
}

/// Randomized pre-screen: evaluating both sides at five deterministic
/// pseudo-random rational points must agree with the symbolic verdict.
/// (For identities that hold symbolically the evaluations must match; this
/// couples the fast evaluation path to the exact one.)
fn rational_prescreen(
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
    symbolic_equal: bool,
    key: &str,
) -> std::result::Result<(), String> {
    use num_bigint::BigInt;
    let mut vars = lhs.vars();
    vars.extend(rhs.vars());
    vars.sort();
    vars.dedup();
    // small splitmix-style generator keyed by the instance, fixed across runs
    let mut state: u64 = 0x9e3779b97f4a7c15
        ^ key.bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for _ in 0..5 {
        let point: BTreeMap<VarId, Rational> = vars
            .iter()
            .map(|&v| {
                let numer = (next() % 11 + 1) as i64;
                let denom = (next() % 7 + 1) as i64;
                (v, Rational::new(BigInt::from(numer), BigInt::from(denom)))
            })
            .collect();
        let lv = lhs.eval_rational(&point).map_err(|e| format!("{key}: {e}"))?;
        let rv = rhs.eval_rational(&point).map_err(|e| format!("{key}: {e}"))?;
        if (lv == rv) != symbolic_equal {
            return Err(format!(
                "rational pre-screen disagrees with symbolic verdict at {key}"
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn ext_dim_examples() {
        // swapped orientation gives no admissible shift
        assert_eq!(ext_dim_tube(4, 3, 1, 1), 0);
        assert_eq!(ext_dim_tube(2, 2, 2, 1), 1);
        assert_eq!(ext_dim_tube(1, 3, 3, 0), 2);
        assert_eq!(admissible_shifts(1, 3, 3, 0), vec![1, 2]);
    }

    #[test]
    fn tube_identity_rank_two_example() {
        let inst = TubeInstance { p: 2, n: 2, m: 2, j: 1, k: 0 };
        let check = tube_identity(&inst).unwrap();
        assert!(check.equal);
        assert_eq!(check.lhs, parse_poly("x0^2 x1^2 - 2 x0 x1 + 1").unwrap());
        let dec = check.decomposition.unwrap();
        assert_eq!(dec.e, (Coord::new(0, 3), Coord::new(1, 1)));
        // both B factors degenerate to units
        assert_eq!(dec.b, (Coord::new(0, 0), Coord::new(0, 0)));
    }

    #[test]
    fn tube_identity_homogeneous_classical_instance() {
        let inst = TubeInstance { p: 1, n: 2, m: 2, j: 0, k: 1 };
        assert!(tube_identity(&inst).unwrap().equal);
    }

    #[test]
    fn inadmissible_instances_rejected() {
        let inst = TubeInstance { p: 2, n: 2, m: 1, j: 1, k: 0 }; // m > n - i fails
        assert!(matches!(
            tube_identity(&inst),
            Err(Error::InadmissibleInstance(_))
        ));
        assert!(matches!(
            wild_identity(3, 1, 1),
            Err(Error::InadmissibleInstance(_))
        ));
    }

    #[test]
    fn triangle_terms_socle_reduction() {
        let inst = TubeInstance { p: 4, n: 3, m: 4, j: 1, k: 0 };
        let dec = triangle_terms(&inst).unwrap();
        assert_eq!(dec.e, (Coord::new(0, 5), Coord::new(1, 2)));
        // (n+1) mod 4 = 0
        assert_eq!(dec.b, (Coord::new(0, 0), Coord::new(0, 1)));
    }

    #[test]
    fn wild_identity_is_the_cluster_mesh_relation_at_small_size() {
        let check = wild_identity(2, 2, 1).unwrap();
        assert!(check.equal);
        // lhs = P_2(x1,x2) P_2(x0,x1)
        assert_eq!(
            check.lhs,
            &parse_poly("x1 x2 - 1").unwrap() * &parse_poly("x0 x1 - 1").unwrap()
        );
        assert!(wild_identity(3, 2, 2).unwrap().equal);
    }

    #[test]
    fn summed_identity_rank_four_worked_example() {
        // 2 X_{R_0} X_{R_1^{(3)}} = X_{R_0^{(4)}} + X_{R_2^{(2)}} +
        // X_{R_1^{(4)}} + X_{R_1^{(2)}} in Z[x0..x3]
        let lhs = &LaurentPoly::constant(2)
            * &(&tube_label(4, 0, 1) * &tube_label(4, 1, 3));
        let rhs = &(&(&tube_label(4, 0, 4) + &tube_label(4, 2, 2))
            + &tube_label(4, 1, 4))
            + &tube_label(4, 1, 2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn summed_identity_matches_ext_dim() {
        let check = summed_identity(1, 3, 3, 0).unwrap();
        assert!(check.equal);
        assert_eq!(check.dim, 2);
        assert!(matches!(
            summed_identity(4, 3, 1, 1),
            Err(Error::NoExtension(_))
        ));
        // dim = 1 reduces to the single tube identity
        let single = summed_identity(2, 2, 2, 1).unwrap();
        assert_eq!(single.dim, 1);
        let inst = TubeInstance { p: 2, n: 2, m: 2, j: 1, k: 0 };
        assert_eq!(single.rhs, tube_identity(&inst).unwrap().rhs);
    }

    #[test]
    fn small_sweeps_pass() {
        let tube = tube_sweep(3, 5, ExecMode::Sequential);
        assert!(tube.passed(), "{:?}", tube.failures);
        assert!(tube.instances_checked > 0);
        let wild = wild_sweep(6, ExecMode::Sequential);
        assert!(wild.passed(), "{:?}", wild.failures);
    }

    #[test]
    fn shift_covariance_of_tube_identities() {
        // substituting x_i -> x_{i+1 mod p} into both sides keeps them equal
        let inst = TubeInstance { p: 3, n: 4, m: 3, j: 2, k: 0 };
        let check = tube_identity(&inst).unwrap();
        assert!(check.equal);
        let shift: BTreeMap<VarId, LaurentPoly> = (0..3)
            .map(|i| {
                (
                    VarId::x(i),
                    LaurentPoly::var(VarId::x((i + 1).rem_euclid(3))),
                )
            })
            .collect();
        assert_eq!(
            check.lhs.substitute(&shift).unwrap(),
            check.rhs.substitute(&shift).unwrap()
        );
    }
}
