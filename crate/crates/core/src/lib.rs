pub mod bipoly;
pub mod field;
pub mod howe;
pub mod irreducible;
pub mod reference;
pub mod report;
pub mod sampling;
pub mod singular;
pub mod unipoly;
