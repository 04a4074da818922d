pub mod analysis;
pub mod bitset;
pub mod graph;
pub mod ring;
pub mod expr;
pub mod theorems;
pub mod report;
