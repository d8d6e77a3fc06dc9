//! Driving the command-line interface in-process.

pub fn run_example() -> syzygy::Result<()> {
    let dir = std::env::temp_dir().join(format!("syzygy-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("ex.ideal");
    std::fs::write(&path, "ring x y z\ngen x^2*y^2*z\ngen x^2*z^2\ngen y*z^2\n").expect("write ideal");
    let path = path.to_str().expect("utf-8 path");

    for args in [
        vec!["betti", "--ideal", path],
        vec!["twin", "--ideal", path],
        vec!["pd", "--ideal", path, "--field", "zp:2", "--json"],
        vec!["taylor", "--stats", "--ideal", path],
        vec!["random", "--n", "4", "--q", "5", "--seed", "9"],
    ] {
        println!("$ syzygy {}", args.join(" "));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = syzygy::cli::run(std::iter::once("syzygy").chain(args), &mut out, &mut err);
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
        assert_eq!(code, 0);
    }
    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
