pub mod analyze;
pub mod chartable;
pub mod decompose;
pub mod search;
pub mod validate;
