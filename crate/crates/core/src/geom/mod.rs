//! Geometric primitives: orders, flats, projections, hulls, diameter and width.

mod flat;
mod hull;
mod point;
pub(crate) mod vector;

pub use flat::{dist_point_flat, prec_flat, project_orthocomplement, Flat, Projection};
pub use hull::{convex_hull, farthest_pair, pointset_width, FarthestPair, HullSummary, Width};
pub use point::{lex_less, prec_anchor, Point};

pub(crate) use flat::{complement_frame, coords_in};
pub(crate) use hull::{diameter_of, hull_faces, width_of};
pub(crate) use point::{check_dims, lex_cmp, lex_ranks, precedes_by, precedes_ranked};
