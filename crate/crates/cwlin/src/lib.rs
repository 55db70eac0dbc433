pub mod betti;
pub mod criteria;
pub mod dim2;
pub mod fullset;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod parse;
pub mod report;
pub mod ring;
pub mod verdict;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;
