//! Weights, weighted jets, Newton polygons and the per-type geometry of the
//! unimodal normal forms.

pub mod types;
pub mod weight;

pub use types::{polygon_position, type_data, Family, Position, Restriction, Slot, TypeData};
pub use weight::{in_filtration, weighted_degree, weighted_jet, weighted_order, weighted_part, Weight};
