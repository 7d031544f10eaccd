//! Quandle and module axiom checks, including a table with one corrupted entry.

use qci::algebra::{check_module, check_quandle, groups, QModule, Quandle};

fn main() -> qci::Result<()> {
    for n in 1..=6 {
        let q = Quandle::dihedral(n);
        println!("dihedral {n}: {:?}", check_quandle(&q.op_table(), None)?);
    }
    for (name, g) in groups::groups_up_to_order_8() {
        let q = Quandle::conjugation(&g)?;
        println!("conj({name}): size {}, {} orbits", q.size(), q.orbits().count());
    }

    let mut op = Quandle::dihedral(5).op_table();
    op[1][3] = (op[1][3] + 1) % 5;
    match check_quandle(&op, None)?.violation() {
        Some(v) => println!("corrupted table: {v}"),
        None => println!("corrupted table passes?"),
    }

    let q = Quandle::dihedral(4);
    for m in [QModule::regular(&q), QModule::parity(&q)] {
        println!("module of size {:?}: {:?}", m.size(), check_module(&m, &q)?);
    }
    Ok(())
}
