//! Incidence tools: rich lines, fixed-area hyperbolas, cylinders and the
//! three-cylinder intersection counter.

mod conic;
mod cylinder;
mod lines;
mod triple;

pub use conic::{
    family_fit, hyperbola_pair, in_family_pencil, line_conic, parallelogram_area, tangency_law_holds, tangent, Conic2,
    FamilyFit, LineConic,
};
pub use cylinder::{
    cylinder_multiset, orthogonal_pairs, point_cylinder_incidences, point_cylinder_incidences_with, AxisLine,
    Cylinder3, CylinderMultiset, IncidenceReport, Membership, MultiplicityBucket,
};
pub use lines::{rich_lines, top_lines, TopLines};
pub use triple::{cylinder_triple_intersection, RootReport, TripleIntersection};
