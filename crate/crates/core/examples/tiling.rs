//! Integer tiling below a periodic boundary, and a symbolic D̃4 window.

use std::collections::BTreeMap;

use frieze_lab::boundary::{build_dtilde_boundary, parse_boundary};
use frieze_lab::tiling::TilingSession;
use frieze_lab::{DTilde, RationalFunction};

fn main() -> frieze_lab::Result<()> {
    let t = TilingSession::new(parse_boundary("^inf(x x x y)^inf")?);
    println!("{}", t.window(-3, -1, 6, 4)?.to_text());

    let d = DTilde::build(4, "all-in")?;
    let (b, _) = build_dtilde_boundary(&d)?;
    let b = b.substitute(&BTreeMap::from([(0, RationalFunction::one())]))?;
    let t = TilingSession::new(b);
    let w = t.window(0, 0, 2, 2)?;
    println!("{}", w.to_csv());
    println!("unimodular blocks: {}", w.check_unimodular().expect("SL2 rule"));
    Ok(())
}
