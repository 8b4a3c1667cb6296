pub mod algebra;
pub mod analysis;
pub mod codec;
pub mod e8;
pub mod error;
pub mod f4;
pub mod matrix;
pub mod octoct;
pub mod octonion;
pub mod rational;
pub mod so8;

pub use error::{Error, Result};
pub use rational::Rational;
