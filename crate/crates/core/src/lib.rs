//! Weight, alcove and character combinatorics for Serre weights of
//! GL3(F_q), `q = p^f`, `p ≥ 5`, and a verdict engine comparing `Ext^1`
//! over `K/Z1` with `Ext^1` over GL3(F_q).

pub mod alcoves;
pub mod chars;
pub mod cli;
pub mod error;
pub mod extcmp;
pub mod fq;
pub mod tensor;
pub mod weights;

pub use error::{Error, Result};
pub use weights::{Params, Root, Shift, Weight, WeightTuple};
