//! Runs the command-line front end on the shipped configs.

use affine_bezout::cli::run;

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs");
    let jobs: [&[&str]; 4] = [
        &["eval-degree", "--chain", &format!("{dir}/baby.json"), "x1^2 - x2^3"],
        &["--format", "json", "bound", "--config", &format!("{dir}/f1.json"), "--method", "iterated"],
        &["verify", "--config", &format!("{dir}/f2.json")],
        &["okounkov", "--chain", &format!("{dir}/baby.json"), "--d", "6"],
    ];
    for args in jobs {
        let out = run(std::iter::once("affine-bezout").chain(args.iter().copied()));
        println!("$ affine-bezout {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
    }
}
