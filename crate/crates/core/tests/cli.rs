use abelian_pauli::cli::run_with_io;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str], stdin: &str) -> Run {
    let mut argv = vec!["abelian-pauli"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_io(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn temp_file(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("abelian-pauli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn count_max_commuting() {
    let r = run(&["count", "max-commuting", "--n", "2"], "");
    assert_eq!((r.code, r.out.as_str()), (0, "15\n"));
    let r = run(&["count", "max-commuting", "--n", "64", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["ok"], true);
    assert!(v["result"].is_string());
}

#[test]
fn other_counts() {
    assert_eq!(run(&["count", "commuting-subgroups", "--n", "2", "--m", "1"], "").out, "15\n");
    assert_eq!(run(&["count", "anticommuting-extensions", "--n", "2", "--m", "2", "--to", "3"], "").out, "3\n");
    assert_eq!(run(&["count", "max-anticommuting", "--n", "2", "--m", "5"], "").out, "6\n");
    assert_eq!(run(&["count", "commuting-subgroups", "--n", "2", "--m", "3"], "").code, 2);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "anticommuting", "--maximal"], "x\ny\nz\n").code, 0);
    assert_eq!(run(&["verify", "anticommuting", "--maximal"], "x\ny\n").code, 1);
    assert_eq!(run(&["verify", "anticommuting"], "x\ny\n").code, 0);
    assert_eq!(run(&["verify", "anticommuting"], "xi\nix\n").code, 1);
    assert_eq!(run(&["verify", "commuting", "--maximal"], "ii\nxx\nyy\nzz\n").code, 0);
    assert_eq!(run(&["verify", "commuting", "--maximal"], "ii\nxx\n").code, 1);
    let r = run(&["verify", "commuting"], "xq\n");
    assert_eq!(r.code, 2);
    assert!(r.err.contains("position 2"));
    assert_eq!(run(&["verify", "sideways"], "x\n").code, 2);
    assert_eq!(run(&["verify", "commuting"], "x\nxx\n").code, 2);
}

#[test]
fn gen_output_verifies() {
    for args in
        [vec!["gen", "max-anticommuting", "--n", "3", "--seed", "7"], vec!["gen", "max-anticommuting", "--n", "12"]]
    {
        let g = run(&args, "");
        assert_eq!(g.code, 0);
        assert_eq!(run(&["verify", "anticommuting", "--maximal"], &g.out).code, 0);
    }
    for n in ["1", "3", "5"] {
        let g = run(&["gen", "max-commuting", "--n", n, "--seed", "11"], "");
        assert_eq!(g.code, 0);
        assert_eq!(run(&["verify", "commuting", "--maximal"], &g.out).code, 0);
    }
}

#[test]
fn gen_from_and_extend_are_reproducible() {
    let path = temp_file("gens.txt", "xxii\nxyii\n");
    let a = run(&["gen", "max-anticommuting", "--from", &path, "--seed", "5"], "");
    let b = run(&["gen", "max-anticommuting", "--from", &path, "--seed", "5"], "");
    assert_eq!(a.code, 0);
    assert_eq!(a.out, b.out);
    assert_eq!(a.out.lines().count(), 9);
    assert!(a.out.starts_with("xxii\nxyii\n"));
    let c = run(&["extend", &path, "--seed", "5"], "");
    assert_eq!(c.out, a.out);
    assert_eq!(run(&["verify", "anticommuting", "--maximal"], &c.out).code, 0);
    let r = run(&["extend", "--seed", "random"], "x\n");
    assert_eq!((r.code, r.out.lines().count()), (0, 3));
    assert_eq!(run(&["extend", "--n", "2"], "").out.lines().count(), 5);
    assert_eq!(run(&["extend", "--seed", "abc"], "x\n").code, 2);
    assert_eq!(run(&["extend"], "x\ny\nz\n").code, 2);
    assert_eq!(run(&["gen", "max-anticommuting"], "").code, 2);
}

#[test]
fn decompose_and_classify() {
    let r = run(&["decompose"], "xx\nxy\nxz\nyi\nzi\n");
    assert_eq!(r.out, "# C_i\n\n# C_x\nx\ny\nz\n\n# C_y\ni\n\n# C_z\ni\n");
    let r = run(&["classify", "--json"], "xx\nxy\nxz\nyi\nzi\n");
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["result"]["case"], "d");
    assert_eq!(v["result"]["sizes"]["u"], 3);
    let r = run(&["classify"], "ix\niy\niz\n");
    assert!(r.out.starts_with("case a\n"));
    assert_eq!(run(&["classify"], "x\ny\nz\n").code, 2);
    assert_eq!(run(&["decompose"], "x\n").code, 2);
}

#[test]
fn oracle_commands() {
    assert_eq!(run(&["oracle", "max-commuting", "--n", "2"], "").out, "15\n");
    assert_eq!(run(&["oracle", "max-anticommuting", "--n", "2", "--m", "3"], "").out, "20\n");
    let r = run(&["oracle", "max-anticommuting", "--n", "1", "--m", "3", "--list"], "");
    assert_eq!(r.out, "x\ny\nz\n");
    let r = run(&["oracle", "max-commuting", "--n", "4"], "");
    assert_eq!(r.code, 3);
    let r = run(&["oracle", "census", "--n", "1", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["result"]["census_sets"], 6);
}

#[test]
fn json_errors() {
    let r = run(&["verify", "commuting", "--json"], "xq\n");
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["ok"], false);
    assert_eq!(v["result"]["error"], "parse");
    let r = run(&["verify", "anticommuting", "--maximal", "--json"], "x\ny\n");
    assert_eq!(r.out, "{\"ok\":false,\"result\":false}\n");
}

#[test]
fn help_succeeds() {
    let r = run(&["--help"], "");
    assert_eq!(r.code, 0);
    assert!(r.out.contains("Usage"));
    assert_eq!(run(&[], "").code, 2);
}
