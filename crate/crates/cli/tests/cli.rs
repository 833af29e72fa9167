use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tonnetz(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tonnetz"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        input.write_all(text.as_bytes()).unwrap();
    }
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn built(key: &str) -> String {
    let o = tonnetz(&["build", key], None);
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn build_then_verify() {
    let o = tonnetz(&["verify", "-"], Some(&built("g2")));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ok"));
}

#[test]
fn verify_failure_exits_one() {
    let doc = built("bauble").replacen("\"C\"", "\"C#\"", 1);
    let o = tonnetz(&["verify", "-"], Some(&doc));
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn schema_errors_exit_two() {
    let o = tonnetz(&["verify", "-"], Some("{\"vertices\": []"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
    assert_eq!(tonnetz(&["build", "b3"], None).status.code(), Some(2));
    assert_eq!(tonnetz(&["frobnicate"], None).status.code(), Some(2));
}

#[test]
fn symmetry() {
    let g2 = built("g2");
    let o = tonnetz(&["symmetry", "-", "--interval", "2"], Some(&g2));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 6"));
    let o = tonnetz(&["symmetry", "-", "--interval", "-2"], Some(&g2));
    assert_eq!(o.status.code(), Some(0));
    let o = tonnetz(&["symmetry", "-", "--interval", "1"], Some(&built("b2")));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classify_faces() {
    let o = tonnetz(&["classify", "-"], Some(&built("b2")));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().all(|l| l.ends_with("major")));
    let o = tonnetz(&["--unicode", "classify", "-"], Some(&built("b2")));
    assert!(stdout(&o).contains("A♭ major"));
}

#[test]
fn overview_is_stable() {
    let a = stdout(&tonnetz(&["overview"], None));
    let b = stdout(&tonnetz(&["table7"], None));
    assert_eq!(a, b);
    assert!(a.lines().nth(1).unwrap().contains("B, D, F, Ab"));
    let json = stdout(&tonnetz(&["table7", "--format", "json"], None));
    assert!(json.contains("\"g2_dual\""));
}

#[test]
fn report_formats() {
    let dir = std::env::temp_dir().join(format!("tonnetz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let paths: Vec<String> = ["g2", "g2_dual"]
        .iter()
        .map(|k| {
            let p = dir.join(format!("{k}.json"));
            let o = tonnetz(&["build", k, "-o", p.to_str().unwrap()], None);
            assert!(o.status.success());
            p.to_str().unwrap().to_string()
        })
        .collect();
    let o = tonnetz(&["report", &paths[0], &paths[1]], None);
    assert!(stdout(&o).contains("complete: true"));
    let o = tonnetz(&["report", &paths[0], "--format", "json"], None);
    let out = stdout(&o);
    assert!(out.contains("\"inventories\"") && out.contains("\"coverage\": null"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exports() {
    let o = tonnetz(&["export", "-", "--dot"], Some(&built("b2")));
    assert_eq!(stdout(&o).matches(" -- ").count(), 12);
    let o = tonnetz(&["export", "-", "--svg"], Some(&built("bauble")));
    assert_eq!(stdout(&o).matches("<polygon").count(), 24);
    assert_eq!(tonnetz(&["export", "-"], Some(&built("b2"))).status.code(), Some(2));
}

#[test]
fn list_keys() {
    let out = stdout(&tonnetz(&["list"], None));
    assert_eq!(out.lines().count(), 13);
    assert!(out.lines().next().unwrap().starts_with("euler"));
}
