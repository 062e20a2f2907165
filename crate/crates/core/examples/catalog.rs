//! Cluster variable catalog of a D̃5 quiver.

use frieze_lab::dtilde::all_variables;
use frieze_lab::DTilde;

fn main() -> frieze_lab::Result<()> {
    let d = DTilde::build(5, "in-out")?;
    let catalog = all_variables(&d, Some((-1, 1)), 1)?;
    println!("boundary: {}", catalog.boundary);
    for e in &catalog.entries {
        println!("{:?}\n    {}", e.provenance, e.value);
    }
    Ok(())
}
