//! Enumerates cluster variables by mutation and checks a catalog against them.

use frieze_lab::dtilde::all_variables;
use frieze_lab::exactalg::parse_rational;
use frieze_lab::oracle::{enumerate_by_mutation, verify_values};
use frieze_lab::DTilde;

fn main() -> frieze_lab::Result<()> {
    let d = DTilde::build(4, "all-in")?;
    let oracle = enumerate_by_mutation(&d.seed(), 9)?;
    println!("{} variables from {} seeds", oracle.len(), oracle.seeds);

    let catalog = all_variables(&d, Some((-2, 2)), 1)?;
    let fake = parse_rational("(1+u1)/u3")?;
    let report = verify_values(catalog.values().chain([&fake]), &oracle);
    for e in &report.entries {
        println!("{:<6} {:?} {}", e.found, e.witness_depth, e.entry);
    }
    Ok(())
}
