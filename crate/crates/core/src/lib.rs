pub mod characters;
pub mod checks;
pub mod error;
pub mod momentum;
pub mod rsz;
pub mod specfun;
pub mod xi;
pub mod zeros;

pub use error::{Error, Result};
