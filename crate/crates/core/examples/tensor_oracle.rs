//! Prints the oracle's tensor-square dimensions.

#[path = "../tests/oracle/tensor_rank.rs"]
mod tensor_rank;

fn main() {
    for (name, c) in [
        ("Ab(2)", tensor_rank::abelian(2)),
        ("sl2", tensor_rank::sl2()),
        ("Heis3", tensor_rank::heis3()),
        ("gl(2)", tensor_rank::gl2()),
    ] {
        println!("{name:<6} dim M⊗M = {}", tensor_rank::tensor_square_dim(&c));
    }
}
