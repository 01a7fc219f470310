//! Generalized Chebyshev polynomials of infinite and finite rank.
//!
//! `P_0 = 1`, `P_1 = t_0` and `P_n(t_0, ..., t_{n-1}) = t_{n-1} P_{n-1} -
//! P_{n-2}`. Three independent constructions are provided: the three-term
//! recurrence, a tridiagonal determinant expanded by first-row cofactors, and
//! bottom-up cluster-mesh division. The rank-`p` polynomials reduce variable
//! indices modulo `p`; rank 1 recovers the normalized Chebyshev polynomials of
//! the second kind.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::Result;
use crate::poly::{parse_poly, LaurentPoly, VarId};

/// Polynomial index together with its rank regime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChebSpec {
    pub n: u32,
    pub rank: Rank,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rank {
    Infinite,
    Finite(u32),
}

impl ChebSpec {
    pub fn build(&self) -> LaurentPoly {
        match self.rank {
            Rank::Infinite => recurrence(self.n),
            Rank::Finite(p) => rank_reduced(self.n, p),
        }
    }
}

/// Three-term recurrence route: `P_n` in exactly `t_0 .. t_{n-1}`, with the
/// internal convention `P_{-1} = 0`.
pub fn recurrence(n: u32) -> LaurentPoly {
    let mut prev = LaurentPoly::zero(); // P_{-1}
    let mut cur = LaurentPoly::one(); // P_0
    for k in 0..n {
        let next = &(&LaurentPoly::var(VarId::t(k as i32)) * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Determinant route: the `n x n` tridiagonal determinant with diagonal
/// `t_{n-1}, ..., t_0` and unit off-diagonals, expanded recursively by
/// first-row cofactors with memoization.
pub fn determinant(n: u32) -> LaurentPoly {
    assert!(n >= 1, "determinant route needs n >= 1");
    let n = n as usize;
    let entry = |r: usize, c: usize| -> LaurentPoly {
        if r == c {
            LaurentPoly::var(VarId::t((n - 1 - r) as i32))
        } else if r.abs_diff(c) == 1 {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        }
    };
    let mut memo = HashMap::new();
    det_first_row(0, (0..n).collect(), &entry, &mut memo)
}

fn det_first_row(
    row: usize,
    cols: Vec<usize>,
    entry: &dyn Fn(usize, usize) -> LaurentPoly,
    memo: &mut HashMap<(usize, Vec<usize>), LaurentPoly>,
) -> LaurentPoly {
    if cols.is_empty() {
        return LaurentPoly::one();
    }
    let key = (row, cols);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let cols = key.1.clone();
    let mut acc = LaurentPoly::zero();
    for (j, &c) in cols.iter().enumerate() {
        let e = entry(row, c);
        if e.is_zero() {
            continue;
        }
        let mut rest = cols.clone();
        rest.remove(j);
        let minor = det_first_row(row + 1, rest, entry, memo);
        let cof = &e * &minor;
        acc = if j % 2 == 0 { &acc + &cof } else { &acc - &cof };
    }
    memo.insert((row, cols), acc.clone());
    acc
}

/// Cluster-mesh route: builds `P_{k+1} = (P_k(t_0..) P_k(t_1..) - 1) /
/// P_{k-1}(t_1..)` bottom-up; every division must be exact.
pub fn cluster_mesh(n: u32) -> Result<LaurentPoly> {
    let mut prev = LaurentPoly::one(); // P_0
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = LaurentPoly::var(VarId::t(0)); // P_1
    for _ in 1..n {
        let numerator = &(&cur * &shift_t(&cur, 1)) - &LaurentPoly::one();
        let next = numerator.div_exact(&shift_t(&prev, 1))?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Substitutes `t_j -> t_{j+delta}` for every `t`-variable of `p`.
fn shift_t(p: &LaurentPoly, delta: i32) -> LaurentPoly {
    let sigma: BTreeMap<VarId, LaurentPoly> = p
        .vars()
        .into_iter()
        .filter(|v| v.family == crate::poly::VarFamily::T)
        .map(|v| (v, LaurentPoly::var(VarId::t(v.index + delta))))
        .collect();
    p.substitute(&sigma).expect("shift never inverts")
}

/// Rank-`p` polynomial: image of `P_n` under `t_j -> t_{j mod p}`, the
/// quotient by the `pZ`-action on variable indices.
pub fn rank_reduced(n: u32, p: u32) -> LaurentPoly {
    assert!(p >= 1, "rank must be >= 1");
    let sigma: BTreeMap<VarId, LaurentPoly> = (0..n as i32)
        .map(|j| {
            (
                VarId::t(j),
                LaurentPoly::var(VarId::t(j.rem_euclid(p as i32))),
            )
        })
        .collect();
    recurrence(n).substitute(&sigma).expect("reduction never inverts")
}

/// Rank-1 specialization: the normalized Chebyshev polynomials of the second
/// kind, `S_0 = 1`, `S_1 = t_0`, `S_{n+1} = t_0 S_n - S_{n-1}`.
pub fn classical_second_kind(n: u32) -> LaurentPoly {
    rank_reduced(n, 1)
}

/// Table rows `P_1 .. P_max_n` for the given rank (`None` = infinite rank).
pub fn table_polys(rank: Option<u32>, max_n: u32) -> Vec<(u32, LaurentPoly)> {
    (1..=max_n)
        .map(|n| {
            let poly = match rank {
                None => recurrence(n),
                Some(p) => rank_reduced(n, p),
            };
            (n, poly)
        })
        .collect()
}

/// A published table whose cells we compare against recomputation.
pub struct PrintedTable {
    /// `None` for the infinite-rank table.
    pub rank: Option<u32>,
    /// `(n, verbatim printed cell)`.
    pub entries: Vec<(u32, &'static str)>,
}

/// The five published tables, cells verbatim.
pub fn printed_tables() -> Vec<PrintedTable> {
    vec![
        PrintedTable {
            rank: None,
            entries: vec![
                (1, "t_0"),
                (2, "t_0t_1-1"),
                (3, "t_0 t_1 t_2 - t_0 - t_2"),
                (4, "t_0 t_1 t_2 t_3 - t_0 t_1 - t_2 t_3 - t_0 t_3 + 1"),
                (
                    5,
                    "t_0 t_1 t_2 t_3 t_4 - t_0 t_1 t_2 - t_0 t_1 t_4 - t_2 t_3 t_4 + t_2 - t_0 t_3 t_4 + t_0 + t_4",
                ),
            ],
        },
        PrintedTable {
            rank: Some(1),
            entries: vec![
                (1, "t_0"),
                (2, "t_0^2-1"),
                (3, "t_0^3 - 2t_0"),
                (4, "t_0^4- 3t_0^2+ 1"),
                (5, "t_0^5- 4t_0^33t_0"),
            ],
        },
        PrintedTable {
            rank: Some(2),
            entries: vec![
                (1, "t_0"),
                (2, "t_0 t_1 - 1"),
                (3, "t_0^2 t_1 - 2t_0"),
                (4, "t_0^2  t_1^2  - 3 t_0 t_1 + 1"),
                (5, "t_0^3  t_1^2  - 4 t_0^2 t_1 + 3t_0"),
            ],
        },
        PrintedTable {
            rank: Some(3),
            entries: vec![
                (1, "t_0"),
                (2, "t_0 t_1 - 1"),
                (3, "t_0 t_1 t_2 - t_0 - t_2"),
                (4, "t_2 t_0^2  t_1 - t_0 t_1 - t_2 t_0 - t_0^2  + 1"),
                (
                    5,
                    "t_0^2  t_1^2  t_2 - t_0^2  t_1 - t_0 t_1^2  - 2 t_0 t_1 t_2 + t_0 + t_1 + t_2",
                ),
            ],
        },
        PrintedTable {
            rank: Some(4),
            entries: vec![
                (1, "t_0"),
                (2, "t_0t_1-1"),
                (3, "t_0 t_1 t_2 - t_0 - t_2"),
                (4, "t_0 t_1 t_2 t_3 - t_0 t_1 - t_2 t_3 - t_0 t_3 + 1"),
                (
                    5,
                    "t_0^2 t_1 t_2 t_3 - t_0 t_1 t_2 - t_0^2 t_1 - t_0t_2 t_3  + t_2 - t_0^2 t_3 + 2t_0",
                ),
            ],
        },
    ]
}

/// A published table cell whose printed form disagrees with recomputation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Erratum {
    /// `"infinite"` or `"rank-p"`.
    pub table: String,
    /// Cell label, e.g. `"P5,1"`.
    pub entry: String,
    /// Verbatim printed form.
    pub printed: String,
    /// What the printed form parses to (juxtaposition read as multiplication),
    /// or `null` if unparseable.
    pub parsed: Option<String>,
    /// Canonical form of the recomputed polynomial.
    pub recomputed: String,
}

/// Compares every printed table cell against recomputation and reports the
/// deviations. Discrepancies are reported, never silently corrected.
pub fn errata() -> Vec<Erratum> {
    let mut out = Vec::new();
    for table in printed_tables() {
        let tname = table_name(table.rank);
        for (n, printed) in &table.entries {
            let recomputed = match table.rank {
                None => recurrence(*n),
                Some(p) => rank_reduced(*n, p),
            };
            let parsed = parse_poly(printed).ok();
            let matches = parsed.as_ref() == Some(&recomputed);
            if !matches {
                out.push(Erratum {
                    table: tname.clone(),
                    entry: match table.rank {
                        None => format!("P{n}"),
                        Some(p) => format!("P{n},{p}"),
                    },
                    printed: (*printed).to_string(),
                    parsed: parsed.map(|p| p.to_string()),
                    recomputed: recomputed.to_string(),
                });
            }
        }
    }
    out
}

fn table_name(rank: Option<u32>) -> String {
    match rank {
        None => "infinite".to_string(),
        Some(p) => format!("rank-{p}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_base_and_table_rows() {
        assert!(recurrence(0).is_one());
        assert_eq!(recurrence(1), parse_poly("t_0").unwrap());
        assert_eq!(recurrence(3), parse_poly("t_0 t_1 t_2 - t_0 - t_2").unwrap());
        assert_eq!(
            recurrence(4),
            parse_poly("t_0 t_1 t_2 t_3 - t_0 t_1 - t_2 t_3 - t_0 t_3 + 1").unwrap()
        );
    }

    #[test]
    fn recurrence_uses_exactly_the_first_n_variables() {
        let p = recurrence(6);
        assert_eq!(p.vars(), (0..6).map(VarId::t).collect::<Vec<_>>());
        assert!(!p.has_negative_exponent());
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(determinant(1), parse_poly("t_0").unwrap());
        assert_eq!(determinant(2), parse_poly("t_0t_1-1").unwrap());
        assert_eq!(
            determinant(5),
            parse_poly(
                "t_0 t_1 t_2 t_3 t_4 - t_0 t_1 t_2 - t_0 t_1 t_4 - t_2 t_3 t_4 + t_2 - t_0 t_3 t_4 + t_0 + t_4"
            )
            .unwrap()
        );
    }

    #[test]
    fn cluster_mesh_small_cases() {
        assert_eq!(cluster_mesh(1).unwrap(), parse_poly("t_0").unwrap());
        assert_eq!(cluster_mesh(2).unwrap(), parse_poly("t_0t_1-1").unwrap());
        assert_eq!(
            cluster_mesh(3).unwrap(),
            parse_poly("t_0 t_1 t_2 - t_0 - t_2").unwrap()
        );
    }

    #[test]
    fn three_routes_agree() {
        for n in 1..=9 {
            let r = recurrence(n);
            assert_eq!(determinant(n), r, "determinant route at n={n}");
            assert_eq!(cluster_mesh(n).unwrap(), r, "cluster-mesh route at n={n}");
        }
    }

    #[test]
    fn rank_reduction_examples() {
        assert_eq!(rank_reduced(3, 2), parse_poly("t_0^2 t_1 - 2t_0").unwrap());
        assert_eq!(
            rank_reduced(5, 3),
            parse_poly("t_0^2 t_1^2 t_2 - t_0^2 t_1 - t_0 t_1^2 - 2 t_0 t_1 t_2 + t_0 + t_1 + t_2")
                .unwrap()
        );
        assert_eq!(rank_reduced(4, 4), recurrence(4));
    }

    #[test]
    fn classical_second_kind_rows() {
        assert!(classical_second_kind(0).is_one());
        assert_eq!(
            classical_second_kind(4),
            parse_poly("t_0^4 - 3t_0^2 + 1").unwrap()
        );
        // recomputed value for the misprinted P_{5,1} cell
        assert_eq!(
            classical_second_kind(5),
            parse_poly("t_0^5 - 4t_0^3 + 3t_0").unwrap()
        );
    }

    #[test]
    fn errata_flags_exactly_the_rank_one_p5_cell() {
        let errs = errata();
        assert_eq!(errs.len(), 1, "expected a single erratum, got {errs:?}");
        let e = &errs[0];
        assert_eq!(e.table, "rank-1");
        assert_eq!(e.entry, "P5,1");
        assert_eq!(e.printed, "t_0^5- 4t_0^33t_0");
        assert_eq!(e.recomputed, "t0^5 - 4*t0^3 + 3*t0");
    }

    #[test]
    fn multilinear_in_each_variable() {
        for n in 1..=9 {
            let p = recurrence(n);
            for v in p.vars() {
                assert!(p.degree_in(v) <= 1);
            }
        }
    }
}
