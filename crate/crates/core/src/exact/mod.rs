pub mod algnum;
pub mod bivar;
pub mod bpoly;
pub mod field;
pub mod fpoly;
pub mod interval;
pub mod ops;
pub mod parse;
pub mod rat;
pub mod system;
pub mod upoly;

pub use algnum::AlgNumber;
pub use bpoly::BPoly;
pub use fpoly::IsolInterval;
pub use ops::{cauchy_root_bound, isolate_roots, refine, resultant, sturm_count};
pub use parse::{parse_poly, parse_rat};
pub use rat::Rat;
pub use upoly::{UPoly, Var};
