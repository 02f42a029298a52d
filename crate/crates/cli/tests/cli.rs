use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadcover")).args(args).current_dir(cwd).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn bounds_lines() {
    let d = tempfile::tempdir().unwrap();
    let o = run(&["bounds", "f", "6", "7"], d.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("lower=39 upper=39 exact=yes ("), "{}", stdout(&o));
    let o = run(&["bounds", "L", "21"], d.path());
    assert_eq!(stdout(&o).trim(), "147 (residue n≡3 mod 18)");
    let o = run(&["bounds", "L", "19"], d.path());
    assert!(stdout(&o).contains("partition-search"), "{}", stdout(&o));
}

#[test]
fn construct_verify_round_trip() {
    let d = tempfile::tempdir().unwrap();
    let o = run(&["construct", "ab", "--a", "6", "--b", "8", "-o", "x.design"], d.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let first = std::fs::read_to_string(d.path().join("x.design")).unwrap();
    assert!(first.starts_with("design ab_system r=4 n=14 a=6 b=8\n"));
    assert_eq!(first.lines().count(), 45);
    assert_eq!(code(&run(&["verify", "--kind", "ab", "x.design"], d.path())), 0);

    // same construction twice gives byte-identical files
    run(&["construct", "ab", "--a", "6", "--b", "8", "-o", "y.design"], d.path());
    assert_eq!(first, std::fs::read_to_string(d.path().join("y.design")).unwrap());

    // dropping a block leaves a triple uncovered
    let cut: String = first.lines().take(44).map(|l| format!("{l}\n")).collect();
    std::fs::write(d.path().join("cut.design"), cut).unwrap();
    let o = run(&["verify", "--kind", "ab", "cut.design"], d.path());
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not covered"));
}

#[test]
fn lottery_files() {
    let d = tempfile::tempdir().unwrap();
    let o = run(&["construct", "lottery", "--n", "10", "--partition", "3,3,4", "-o", "l.json"], d.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let json = std::fs::read_to_string(d.path().join("l.json")).unwrap();
    assert!(json.contains("\"kind\"") && json.contains("\"blocks\""));
    let o = run(&["verify", "--kind", "lottery", "l.json"], d.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("15 blocks"));
    let o = run(&["construct", "lottery", "--n", "10", "--partition", "3,3,3", "-o", "bad"], d.path());
    assert_eq!(code(&o), 2);
}

#[test]
fn exit_codes() {
    let d = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(&["bounds"], d.path())), 2);
    assert_eq!(code(&run(&["bounds", "f", "1", "2"], d.path())), 2);
    assert_eq!(
        code(&run(&["construct", "ab", "--a", "16", "--b", "5", "--method", "large-b", "-o", "z"], d.path())),
        3
    );
    // a = 4 mod 6 large-b family cannot exist, so the ingredient is missing
    assert_eq!(
        code(&run(&["construct", "ab", "--a", "10", "--b", "18", "--method", "large-b", "-o", "z"], d.path())),
        4
    );
    assert_eq!(code(&run(&["verify", "--kind", "sts", "missing.design"], d.path())), 2);
}

#[test]
fn oracle_and_table() {
    let d = tempfile::tempdir().unwrap();
    let o = run(&["oracle", "f", "4", "3", "-o", "w.design"], d.path());
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "f(4,3): optimal 8");
    assert_eq!(code(&run(&["verify", "--kind", "ab", "w.design"], d.path())), 0);
    let o = run(&["oracle", "L", "9", "--budget-nodes", "100"], d.path());
    assert!(stdout(&o).starts_with("L(9): bounds "), "{}", stdout(&o));

    let o = run(&["table", "L", "--from", "8", "--to", "16", "--csv", "t.csv"], d.path());
    assert_eq!(code(&o), 0);
    let csv = std::fs::read_to_string(d.path().join("t.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,residue,bound,partition,size,verified"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[1], ["9", "9 mod 18", "9", "3+3+3", "9", "yes"]);
    assert!(rows.iter().all(|r| ["yes", "above-bound", "formula-only"].contains(&r[5])));
}

#[test]
fn ingredient_registry() {
    let d = tempfile::tempdir().unwrap();
    let sts = "design sts r=3 n=7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n";
    std::fs::write(d.path().join("s.design"), sts).unwrap();
    assert_eq!(code(&run(&["verify", "--kind", "sts", "s.design"], d.path())), 0);
    let o = run(&["ingredients", "add", "s.design", "--registry", "reg"], d.path());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["ingredients", "list", "--registry", "reg"], d.path());
    assert!(stdout(&o).contains("large_set_sts") && stdout(&o).contains("verified"));
    assert_eq!(code(&run(&["ingredients", "verify", "--registry", "reg"], d.path())), 0);

    std::fs::write(d.path().join("bad.design"), "design sts r=3 n=7\n0 1 2\n0 1 3\n").unwrap();
    assert_eq!(code(&run(&["ingredients", "add", "bad.design", "--registry", "reg"], d.path())), 1);
}
