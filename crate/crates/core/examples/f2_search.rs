//! Exhaustive 𝔽₂ search for Lie categorical braidings separating the two
//! Lie validators. Prints the counts; asserts nothing.

use std::time::Instant;

use peiffer::braid::search::separation_search;

fn main() {
    let max_dim = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let start = Instant::now();
    let s = separation_search(max_dim);
    println!("max dim            {max_dim}");
    println!("crossed modules    {}", s.crossed_modules);
    println!("candidates         {}", s.candidates);
    println!("pass LieT1-2       {}", s.passing_t12);
    println!("both pass          {}", s.both_pass);
    println!("LieB3-4 only       {}", s.ulualan_only);
    println!("LieT3-4 only       {}", s.alt_only);
    println!("both fail          {}", s.both_fail);
    println!("first separation   {}", s.first_separation.as_deref().unwrap_or("none"));
    println!("elapsed            {:.2?}", start.elapsed());
}
