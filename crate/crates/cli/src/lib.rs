//! Library surface of the batch tool, split out so integration tests
//! can drive the command implementations directly.

pub mod checks;
pub mod commands;
pub mod record;
