//! Stable translation quivers and cluster-mesh friezes.

pub mod frieze;
pub mod moebius;
pub mod presentation;
pub mod shape;

pub use frieze::{
    cheb_value, extend_moebius_row, frieze_labels, frieze_labels_rational, tube_label, za_label,
};
pub use moebius::{moebius_numeric_check, MoebiusReport};
pub use presentation::{mesh_presentation, MeshPresentation};
pub use shape::{
    build_shape, moebius_glide, moebius_period, Coord, ShapeSpec, TranslationQuiver,
    MOEBIUS_GLIDE,
};
