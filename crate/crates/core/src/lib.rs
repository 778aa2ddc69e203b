//! Exact chromatic symmetric functions, their G-analogues, and
//! machine-checked identities for unit interval orders.

pub mod chromatic;
pub mod cli;
pub mod combinat;
pub mod corrects;
pub mod error;
pub mod ghom;
pub mod lgvgrid;
pub mod linalg;
pub mod polyring;
pub mod scan;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
