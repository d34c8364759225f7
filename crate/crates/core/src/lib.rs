pub mod comb;
pub mod dpd;
pub mod families;
pub mod lattice;
pub mod surface;
