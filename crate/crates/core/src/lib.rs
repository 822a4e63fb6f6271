pub mod circle;
pub mod critical;
pub mod euler;
pub mod error;
pub mod exact;
pub mod flavor;
pub mod harness;
pub mod infinity;
pub mod stratified;

pub use error::{Error, Result};
pub use exact::{AlgNumber, BPoly, IsolInterval, Rat, UPoly, Var};
pub use flavor::Flavor;
