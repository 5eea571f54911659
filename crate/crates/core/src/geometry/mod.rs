//! Exact geometry of unit polygons: vertices, signed areas, Heron's
//! formula and the rational-distance point search.
//!
//! Signed areas stand in for a positive/negative case analysis of the
//! triangles `P A_i A_{i+1}`: the shoelace sum equals the polygon area for
//! every `P`, with triangles on the far side of a side counted negatively.

mod polygon;
mod search;

pub use polygon::{
    area_identity_check, heron_area_squared, polygon_area_formula_check, signed_area, unit_polygon, AreaFormulaReport,
    AreaIdentityReport, ExactPoint, UnitPolygon,
};
pub use search::{box_rationals, search_rational_points, write_candidates_csv, RationalPointCandidate};
