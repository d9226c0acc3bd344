pub mod classes;
pub mod cli;
pub mod error;
pub mod games;
pub mod lpcore;
pub mod numerics;
pub mod solutions;
