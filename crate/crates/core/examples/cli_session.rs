//! Drives the `qci` command line in-process: computes a cocycle, evaluates an
//! invariant with a run manifest, then replays the manifest.

use qci::cli::run;

fn show(args: &[&str]) -> String {
    let mut full = vec!["qci"];
    full.extend_from_slice(args);
    let o = run(full);
    println!("$ qci {}  (exit {})", args.join(" "), o.code);
    let lines: Vec<&str> = o.stdout.lines().collect();
    for l in lines.iter().take(12) {
        println!("{l}");
    }
    if lines.len() > 12 {
        println!("... ({} more lines)", lines.len() - 12);
    }
    print!("{}", o.stderr);
    o.stdout
}

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join("qci-cli-session");
    std::fs::create_dir_all(&dir)?;
    let path = |f: &str| dir.join(f).to_string_lossy().into_owned();

    show(&["colorings", "--diagram", "figure_eight", "--quandle", "dihedral:5", "--count"]);
    show(&["cohomology", "--quandle", "dihedral:3", "--coeff", "Z3", "--spec", "1,-1"]);

    let out = show(&["cohomology", "--quandle", "dihedral:3", "--coeff", "Z3", "--module", "regular", "--basis"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json output");
    let cocycle = &v["cocycle_basis"][0];
    std::fs::write(path("omega.json"), cocycle.to_string())?;

    let omega = path("omega.json");
    let manifest = path("manifest.json");
    show(&["invariant", "--flavor", "shadow", "--diagram", "trefoil", "--quandle", "dihedral:3", "--cocycle", &omega, "--manifest", &manifest]);
    show(&["replay", &manifest]);
    show(&["check", "cocycle", &omega, "--quandle", "dihedral:3", "--spec", "1,-1"]);
    Ok(())
}
