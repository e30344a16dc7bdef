//! Reference implementations used to check the engine. None of them call into
//! the crate's Groebner or localization code.

#![allow(dead_code)]

pub mod qx;
pub mod zlat;
