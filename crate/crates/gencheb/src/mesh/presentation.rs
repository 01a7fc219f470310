use std::collections::BTreeMap;

use crate::error::Result;
use crate::poly::{LaurentPoly, VarFamily, VarId};

use super::shape::{Coord, ShapeSpec, TranslationQuiver};

/// Generators-and-relations data of the cluster-mesh algebra of a stored
/// window: one generator per vertex, and for every vertex with full mesh data
/// a relation pair `(y_v * y_{tau(v)}, 1 + prod_{j -> v} y_j)`. Identical
/// relation pairs are deduplicated.
pub struct MeshPresentation {
    pub generators: Vec<VarId>,
    /// Which vertex each generator names, in the same order.
    pub vertex_of: Vec<(Coord, VarId)>,
    /// `(lhs, rhs)` pairs, lexicographically sorted and deduplicated.
    pub relations: Vec<(LaurentPoly, LaurentPoly)>,
}

/// Emits the cluster-mesh presentation of the stored window. Boundary
/// vertices (whose translation or incoming arrows leave the window) carry no
/// relation. Generators use the `x` family for ZA windows and tubes and the
/// `t` family for Möbius bands, indexed by vertex position in `(n, i)` order.
pub fn mesh_presentation(quiver: &TranslationQuiver) -> Result<MeshPresentation> {
    let family = match quiver.spec {
        ShapeSpec::Moebius { .. } => VarFamily::T,
        _ => VarFamily::X,
    };
    let mut vertex_of = Vec::with_capacity(quiver.vertices.len());
    let mut gen_of: BTreeMap<Coord, VarId> = BTreeMap::new();
    for (k, &v) in quiver.vertices.iter().enumerate() {
        let g = VarId::new(family, k as i32);
        vertex_of.push((v, g));
        gen_of.insert(v, g);
    }
    let mut relations = Vec::new();
    for &v in &quiver.vertices {
        if quiver.is_boundary(v) {
            continue;
        }
        let Some(tv) = quiver.tau(v) else { continue };
        let lhs = &LaurentPoly::var(gen_of[&v]) * &LaurentPoly::var(gen_of[&tv]);
        let mut product = LaurentPoly::one();
        for src in quiver.incoming(v) {
            product = &product * &LaurentPoly::var(gen_of[&src]);
        }
        let rhs = &LaurentPoly::one() + &product;
        relations.push((lhs, rhs));
    }
    relations.sort_by_key(|(lhs, rhs)| (lhs.to_string(), rhs.to_string()));
    relations.dedup();
    Ok(MeshPresentation {
        generators: vertex_of.iter().map(|&(_, g)| g).collect(),
        vertex_of,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::shape::build_shape;
    use crate::poly::parse_poly;

    #[test]
    fn truncated_homogeneous_tube_has_no_relation() {
        // Tube{p=1, n_max=1}: the single vertex is top-row; its incoming
        // arrow comes from the cut-off row 2, so no relation is stored.
        let q = build_shape(ShapeSpec::Tube { p: 1, n_max: 1 }).unwrap();
        let pres = mesh_presentation(&q).unwrap();
        assert_eq!(pres.generators, vec![VarId::x(0)]);
        assert!(pres.relations.is_empty());
    }

    #[test]
    fn homogeneous_tube_interior_relation() {
        // with n_max = 2 the row-1 vertex has full mesh data:
        // y_{(0,1)}^2 = 1 + y_{(0,2)}
        let q = build_shape(ShapeSpec::Tube { p: 1, n_max: 2 }).unwrap();
        let pres = mesh_presentation(&q).unwrap();
        assert_eq!(pres.generators.len(), 2);
        assert_eq!(pres.relations.len(), 1);
        let (lhs, rhs) = &pres.relations[0];
        assert_eq!(*lhs, parse_poly("x0^2").unwrap());
        assert_eq!(*rhs, parse_poly("1 + x1").unwrap());
    }

    #[test]
    fn moebius_height_one_reduces_to_a_single_relation() {
        // A(M_2): two generators t0, t1 with t0 t1 = 2, i.e. P_2 = 1 + 1
        let q = build_shape(ShapeSpec::Moebius { r: 1 }).unwrap();
        let pres = mesh_presentation(&q).unwrap();
        assert_eq!(pres.generators, vec![VarId::t(0), VarId::t(1)]);
        assert_eq!(pres.relations.len(), 1);
        let (lhs, rhs) = &pres.relations[0];
        assert_eq!(*lhs, parse_poly("t0 t1").unwrap());
        assert_eq!(*rhs, parse_poly("2").unwrap());
    }

    #[test]
    fn za_window_row_one_relation() {
        // at (i,1): y_{(i,1)} y_{(i-1,1)} = 1 + y_{(i-1,2)}
        let q = build_shape(ShapeSpec::ZaWindow { i_min: 0, i_max: 2, n_max: 2 }).unwrap();
        let pres = mesh_presentation(&q).unwrap();
        let gen: BTreeMap<Coord, VarId> = pres.vertex_of.iter().copied().collect();
        // non-boundary vertices: (1,1) and (2,1)
        assert_eq!(pres.relations.len(), 2);
        let lhs = &LaurentPoly::var(gen[&Coord::new(1, 1)])
            * &LaurentPoly::var(gen[&Coord::new(0, 1)]);
        let rhs = &LaurentPoly::one() + &LaurentPoly::var(gen[&Coord::new(0, 2)]);
        assert!(pres.relations.contains(&(lhs, rhs)));
    }

    #[test]
    fn relations_reference_declared_generators_only() {
        for spec in [
            ShapeSpec::Tube { p: 3, n_max: 4 },
            ShapeSpec::ZaWindow { i_min: -1, i_max: 3, n_max: 3 },
            ShapeSpec::Moebius { r: 3 },
        ] {
            let q = build_shape(spec).unwrap();
            let pres = mesh_presentation(&q).unwrap();
            for (lhs, rhs) in &pres.relations {
                for v in lhs.vars().into_iter().chain(rhs.vars()) {
                    assert!(pres.generators.contains(&v));
                }
            }
        }
    }
}
