//! Coloring counts of the bundled corpus by dihedral quandles, and the region
//! colors of a shadow coloring.

use qci::algebra::{ModElem, QModule, Quandle};
use qci::coloring::{enumerate_colorings, propagate_shadow};
use qci::corpus;

fn main() -> qci::Result<()> {
    print!("{:16}", "");
    for n in 3..=6 {
        print!("{:>6}", format!("R{n}"));
    }
    println!();
    for e in corpus::ENTRIES {
        let d = e.diagram()?;
        print!("{:16}", e.name);
        for n in 3..=6 {
            print!("{:>6}", enumerate_colorings(&d, &Quandle::dihedral(n)).len());
        }
        println!();
    }

    let d = corpus::diagram("trefoil").expect("bundled");
    let q = Quandle::dihedral(3);
    let m = QModule::regular(&q);
    let c = enumerate_colorings(&d, &q).into_iter().find(|c| c.0.iter().any(|&x| x != c.0[0])).expect("non-trivial");
    let s = propagate_shadow(&d, &c, &m, &ModElem::scalar(0))?;
    let regions: Vec<String> = s.regions.iter().map(|r| r.to_string()).collect();
    println!("trefoil arcs {:?} -> regions [{}]", c.0, regions.join(", "));
    Ok(())
}
