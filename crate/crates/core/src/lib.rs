pub mod coxeter;
pub mod group;
pub mod poly;
pub mod kl;
pub mod delorme;
pub mod algebra;
pub mod hc;
pub mod verify;
