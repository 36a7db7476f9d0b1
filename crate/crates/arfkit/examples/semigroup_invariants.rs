//! Construct numerical semigroups and read off their invariants.
//!
//! ```bash
//! cargo run --example semigroup_invariants
//! ```

use arfkit::NumericalSemigroup;

fn main() -> arfkit::Result<()> {
    for gens in [vec![3i64, 5], vec![3, 4, 5], vec![4, 6, 7, 9], vec![1]] {
        let s = NumericalSemigroup::from_generators(&gens)?;
        println!("semigroup <{s}>");
        println!("  members up to conductor+2: {:?}", s.members_up_to(s.conductor() + 2));
        println!("  multiplicity:        {}", s.multiplicity());
        println!("  embedding dimension: {}", s.embedding_dimension());
        println!("  frobenius number:    {}", s.frobenius());
        println!("  conductor:           {}", s.conductor());
        println!("  genus:               {}", s.genus());
        println!("  gaps:                {:?}", s.gaps());
        let m = s.multiplicity();
        println!("  apery set mod {m}:     {:?}", s.apery_set(m)?);
        println!("  minimal multiplicity: {}", s.has_minimal_multiplicity());
        println!();
    }

    // redundant generators are sieved away
    let s = NumericalSemigroup::from_generators(&[3, 5, 6, 10])?;
    println!("<3,5,6,10> minimizes to <{s}>");

    // gcd != 1 is rejected: the set would miss infinitely many integers
    let err = NumericalSemigroup::from_generators(&[4, 6]).unwrap_err();
    println!("from_generators(&[4, 6]) -> error: {err}");
    Ok(())
}
