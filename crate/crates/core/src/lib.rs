//! Finite groups as Cayley tables, their subgroup lattices, and the inclusion
//! and intersection graphs of subgroups with exact graph invariants.

pub mod bitset;
pub mod cli;
pub mod graph;
pub mod invariants;
pub mod iso;
pub mod group;
pub mod lattice;
pub mod parse;
pub mod verify;
