//! Seed mutation and the walk formula for tube variables.

use frieze_lab::DTilde;

fn main() -> frieze_lab::Result<()> {
    let d = DTilde::build(4, "all-in")?;
    let seed = d.seed();
    let m = seed.mutate(3)?;
    println!("mutate at 3: {}", m.variable(3)?);
    println!("arrows after: {:?}", m.quiver().arrows().collect::<Vec<_>>());
    for (a, b) in [(1, 5), (2, 4), (1, 4), (2, 5)] {
        let w = d.quiver().reduced_walk(a, b)?;
        println!("walk {:?}: {}", w.vertices(), seed.walk_cluster_variable(&w)?);
    }
    Ok(())
}
