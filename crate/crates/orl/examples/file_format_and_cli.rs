//! The on-disk graph format and the batch interface. Files start with a
//! `n m` header, then one `u v` line per edge; `#` starts a comment. The
//! same operations exposed as library calls run through `cli::run_with`,
//! which returns the process exit code and writes a report ending in a
//! `key: value` trailer.

use orl::cli::run_with;
use orl::ogf;

fn main() {
    let text = "\
# five vertices, one increasing chain and a chord
5 4
0 1
1 2
2 3
0 4
";
    let g = ogf::parse_str(text).unwrap();
    println!("parsed {} vertices, {} edges", g.n(), g.edge_count());
    assert_eq!(ogf::parse_str(&ogf::to_string(&g)).unwrap(), g, "round trip");

    let dir = std::env::temp_dir().join("orl-format-demo");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chain.ogf");
    ogf::write_file(&g, &path).unwrap();

    // Same graph through the batch interface: closure plus verification.
    let args: Vec<String> = ["closure", path.to_str().unwrap()]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut out = Vec::new();
    let code = run_with(&args, &mut out);
    println!("--- closure report (exit {code}) ---");
    print!("{}", String::from_utf8(out).unwrap());
    assert_eq!(code, 0);

    // Reports are deterministic: a second run is byte-identical.
    let mut again = Vec::new();
    let args2 = args.clone();
    run_with(&args2, &mut again);
    let mut first = Vec::new();
    run_with(&args, &mut first);
    assert_eq!(first, again);
    println!("--- repeated run byte-identical ---");
}
