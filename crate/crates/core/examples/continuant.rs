//! Column coefficients of a D̃5 tiling and their continuants.

use frieze_lab::dtilde::DTildePipeline;
use frieze_lab::tiling::continuant;
use frieze_lab::DTilde;

fn main() -> frieze_lab::Result<()> {
    let p = DTildePipeline::new(&DTilde::build(5, "all-in")?)?;
    let first = p.periodic_column()?;
    let coeffs = p.column_coefficients(first, 6)?;
    for (i, c) in coeffs.iter().enumerate() {
        println!("column {}: {c}", first + i as i64);
    }
    let t = p.tiling();
    for len in 1..=3 {
        let last = first + len - 1;
        let direct = continuant(&coeffs[..len as usize]);
        let word = t.continuant_via_word(first, last)?;
        println!("q over {first}..={last}: {word} (agrees: {})", word == direct);
    }
    Ok(())
}
