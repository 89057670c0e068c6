pub mod input;
pub mod realization;
pub mod report;
pub mod scenarios;
