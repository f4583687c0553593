pub mod exactla;
pub mod gca;
pub mod liealg;
pub mod mostow;
pub mod sullivan;
pub mod cli;
