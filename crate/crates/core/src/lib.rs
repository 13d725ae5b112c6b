//! Exact computations with the 5-dimensional Jones representation of the
//! genus-2 mapping class group: construction, `h`-adic expansion along the
//! Torelli filtration, and `S_6` / `Sp(4)` representation theory of the
//! leading terms.

pub mod algebra;
pub mod filtration;
pub mod jones;
pub mod reptheory;
pub mod words;
