pub mod battery;
pub mod character;
pub mod cyclotomic;
pub mod double_rep;
pub mod error;
pub mod fusion;
pub mod group;
pub mod grothendieck;
pub mod hopf;
pub mod input;
pub mod linalg;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
