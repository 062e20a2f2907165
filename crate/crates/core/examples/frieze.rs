//! Frieze and modelled quiver of the D̃4 quiver with all arrows into 3.

use frieze_lab::frieze::{render_ascii, FriezeSession};
use frieze_lab::DTilde;

fn main() -> frieze_lab::Result<()> {
    let d = DTilde::build(4, "all-in")?;
    let f = FriezeSession::new(&d)?;
    println!("{}", render_ascii(&f.dump(-1, 1)?));
    println!("{}", render_ascii(&f.dump_modelled(0, 2)?));
    Ok(())
}
