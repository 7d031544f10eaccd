//! Regions, Alexander numbering and checkerboard shading of the figure-eight
//! knot, built as the closure of the braid word s1 s2^-1 s1 s2^-1.

use qci::diagram::{braid_closure, Shade};

fn main() -> qci::Result<()> {
    let d = braid_closure(3, &[1, -2, 1, -2])?;
    println!("{} crossings, {} arcs, {} regions", d.crossing_count(), d.arc_count(), d.region_count());
    let idx = d.indices();
    let shades = d.checkerboard();
    for (r, inc) in d.regions().iter().enumerate() {
        let tag = if r == d.exterior() { " (exterior)" } else { "" };
        let shade = if shades[r] == Shade::White { "white" } else { "black" };
        let sides: Vec<String> = inc.iter().map(|i| format!("{}{}", i.semiarc, i.side)).collect();
        println!("region {r}{tag}: index {:+}, {shade}, bounded by {}", idx.total[r], sides.join(" "));
    }
    for (x, g) in d.crossings().iter().zip(d.geometry()) {
        println!("crossing sign {:+}, source region {}, positive-theory sign {:+}", x.sign, g.source, g.positive_sign);
    }
    println!("{}", d.to_json_string());
    Ok(())
}
