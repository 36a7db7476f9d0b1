//! A tour of the relative-ideal calculus over one ambient semigroup:
//! duals, biduals, traces, stability, endomorphism rings and blow-ups.
//!
//! ```bash
//! cargo run --example ideal_calculus
//! ```

use arfkit::{maximal_ideal, truncation_ideal, NumericalSemigroup, RelativeIdeal};

fn main() -> arfkit::Result<()> {
    let s = NumericalSemigroup::from_generators(&[3, 5])?;
    println!("ambient semigroup <{s}>, conductor {}", s.conductor());

    let m = maximal_ideal(&s);
    println!("maximal ideal m = {m}");

    // Hom(m, S) at value level is the colon S - m
    let dual = m.dual();
    println!("dual of m = {dual}");
    println!("  m reflexive (bidual = m): {}", m.is_reflexive());
    println!("  m self-dual:              {}", m.is_self_dual());

    // the endomorphism ring m - m is a strictly bigger semigroup
    let end = m.end_semigroup();
    println!("End(m) = <{end}>");

    // the blow-up keeps growing past End(m) because m is not stable
    println!("m stable: {:?}", m.stability_witness());
    println!("blow-up of m = <{}>", m.blowup());

    // traces: principal ideals have unit trace, m does not
    let p = RelativeIdeal::principal(&s, 5);
    println!("trace of 5+S = {}", p.trace());
    println!("trace of m   = {}", m.trace());

    // truncations are the integrally closed monomial ideals
    let t = truncation_ideal(&s, 4);
    println!("truncation at 4 = {t}");
    println!("  integrally closed: {}", t.is_integrally_closed()?);
    let p3 = RelativeIdeal::principal(&s, 3);
    println!("3+S integrally closed: {}", p3.is_integrally_closed()?);

    // module isomorphism is translation: normalize splits off the shift
    let (normalized, shift) = m.normalize();
    println!("m = {shift} + {normalized}");

    // and over a stable situation one colon computes the blow-up
    let t23 = NumericalSemigroup::from_generators(&[2, 3])?;
    let m23 = maximal_ideal(&t23);
    println!(
        "over <2,3>: witness {:?}, End = blow-up = <{}>",
        m23.stability_witness(),
        m23.blowup()
    );
    Ok(())
}
