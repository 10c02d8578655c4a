pub mod handmade;
pub mod mutation;
pub mod seeds;
