//! Chains of iterated blow-ups and their multiplicity sequences.
//!
//! The family `<e, ne+1, ..., ne+e-1>` blows down one step at a time: the
//! chain of the n-th member is exactly the members n, n-1, ..., 0, each of
//! multiplicity e until the naturals are reached.
//!
//! ```bash
//! cargo run --example lipman_chains
//! ```

use arfkit::{lipman_chain, NumericalSemigroup};

fn family(e: i64, n: i64) -> arfkit::Result<NumericalSemigroup> {
    let mut gens = vec![e];
    gens.extend((1..e).map(|k| n * e + k));
    NumericalSemigroup::from_generators(&gens)
}

fn main() -> arfkit::Result<()> {
    for e in 2..=4 {
        for n in [2i64, 3] {
            let s = family(e, n)?;
            let chain = lipman_chain(&s);
            let rendered: Vec<String> = chain
                .members()
                .iter()
                .map(|a| format!("<{a}>"))
                .collect();
            println!("e={e} n={n}: {}", rendered.join(" -> "));
            println!("  multiplicities {:?}", chain.multiplicity_sequence());
            assert_eq!(chain.len() as i64, n + 1);
        }
    }

    // a non-Arf example still terminates at the naturals, it just loses
    // the stability of its maximal ideal along the way
    let s = NumericalSemigroup::from_generators(&[3, 5])?;
    let chain = lipman_chain(&s);
    println!(
        "<3,5>: {} members, multiplicity sequence {:?}",
        chain.len(),
        chain.multiplicity_sequence()
    );
    Ok(())
}
