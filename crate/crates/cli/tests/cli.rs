use std::io::Write;
use std::process::{Command, Output, Stdio};

use schroder_cli::{read_partition, read_path, run, Command as Cmd, Direction, OutputFormat, RunConfig, Subject};
use schroder_core::bijection::MapName;
use schroder_core::enumeration::SeriesKind;
use schroder_core::path::PathClass;

fn schroder(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_schroder"))
        .args(args)
        .env_remove("SCHRODER_EXHAUSTIVE_LIMIT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn run_config(config: &RunConfig, input: &str) -> Result<String, schroder_cli::Failure> {
    let mut out = Vec::new();
    run(config, &mut input.as_bytes(), &mut out)?;
    Ok(String::from_utf8(out).unwrap())
}

#[test]
fn map_examples() {
    let o = schroder(&["map", "sigma", "11232343411"], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "HUUUDUUDDHUUDDHDD\n");

    let o = schroder(&["map", "sigma", "--direction", "inverse", "HUUDHHUUUDDHDHDUUDD"], "");
    assert_eq!(stdout(&o), "1,1,2,2,2,3,2,3,2,3,1,4,3\n");

    let o = schroder(&["map", "phi", "--direction", "inverse", "HUUDHHUUUDDHDHDUUDD"], "");
    assert_eq!(stdout(&o), "1,1,2,2,2,3,1,3,2,3,2,4,3\n");

    let o = schroder(&["map", "psi"], "UUUDDHUDDUD\nUUDD\n");
    assert_eq!(stdout(&o), "UHUHUDDDUD\nUHD\n");
}

#[test]
fn count_examples() {
    let o = schroder(&["count", "partitions", "3", "--pattern", "12312"], "");
    assert_eq!(stdout(&o), "5\n");
    let o = schroder(&["count", "partitions", "5", "--pattern", "12321"], "");
    assert_eq!(stdout(&o), "51\n");
    let o = schroder(&["count", "paths", "5", "--class", "skew_dyck"], "");
    assert_eq!(stdout(&o), "137\n");
    let o = schroder(&["count", "paths", "3", "--class", "schroder", "--format", "json"], "");
    assert_eq!(stdout(&o), "{\"count\":22}\n");
}

#[test]
fn pipeline_list_map_render() {
    let listed = stdout(&schroder(&["list", "partitions", "3", "--pattern", "12312"], ""));
    assert_eq!(listed, "1,1,1\n1,1,2\n1,2,1\n1,2,2\n1,2,3\n");
    let mapped = stdout(&schroder(&["map", "sigma"], &listed));
    assert_eq!(mapped, "HH\nHUD\nUUDD\nUDH\nUDUD\n");
    let back = stdout(&schroder(&["map", "sigma", "--direction", "inverse"], &mapped));
    assert_eq!(back, listed);
    let art = stdout(&schroder(&["render"], "UD\n"));
    assert_eq!(art, "/\\\n--\n");
}

#[test]
fn json_output_parses_back() {
    let parts = stdout(&schroder(&["list", "partitions", "4", "--format", "json"], ""));
    assert_eq!(parts.lines().count(), 15);
    for line in parts.lines() {
        read_partition(line).unwrap();
    }
    let paths = stdout(&schroder(&["list", "paths", "3", "--class", "uh_free", "--format", "json"], ""));
    assert_eq!(paths.lines().count(), 15);
    for line in paths.lines() {
        assert!(PathClass::UhFree.contains(&read_path(line).unwrap()));
    }
    // JSON objects are accepted as map input
    let mapped = stdout(&schroder(&["map", "sigma", "--format", "json"], "[1,1,2]\n"));
    assert_eq!(mapped, "\"HUD\"\n");
    let series = stdout(&schroder(&["series", "f", "--order", "5", "--format", "json"], ""));
    assert_eq!(series, "[1,2,5,15,51,188]\n");
}

#[test]
fn series_text() {
    let o = schroder(&["series", "f-prime", "--order", "5"], "");
    assert_eq!(stdout(&o), "0 1\n1 1\n2 2\n3 6\n4 21\n5 79\n");
    let o = schroder(&["series", "schroder", "--order", "3"], "");
    assert_eq!(stdout(&o), "0 1\n1 2\n2 6\n3 22\n");
}

#[test]
fn check_records() {
    let o = schroder(&["check", "11232343411"], "");
    let text = stdout(&o);
    assert!(text.contains("avoids_12312=true\n"), "{text}");
    assert!(text.contains("blocks=4\n"));
    let o = schroder(&["check", "UUDD"], "");
    let text = stdout(&o);
    assert!(text.contains("no_even_peak=false\n"), "{text}");
    assert!(text.contains("no_level_one_peak=true\n"));
    assert!(text.contains("peaks=2\n"));
    let o = schroder(&["check", "--format", "json", "UD"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "path");
    assert_eq!(v["uh_free"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(schroder(&["map", "sigma", "2,1"], "").status.code(), Some(1));
    assert_eq!(schroder(&["map", "sigma", "12312"], "").status.code(), Some(2));
    assert_eq!(schroder(&["map", "psi", "UHD"], "").status.code(), Some(2));
    assert_eq!(schroder(&["map", "psi", "--direction", "inverse", "UUDD"], "").status.code(), Some(2));
    assert_eq!(schroder(&["map", "sigma", "--direction", "inverse", "UDX"], "").status.code(), Some(1));
    assert_eq!(schroder(&["frobnicate"], "").status.code(), Some(64));
    assert_eq!(schroder(&["count", "partitions", "13"], "").status.code(), Some(64));
    assert_eq!(schroder(&["list", "paths", "2", "--class", "motzkin"], "").status.code(), Some(64));
    assert_eq!(schroder(&["--help"], "").status.code(), Some(0));
    let err = schroder(&["map", "sigma", "12312"], "");
    assert!(String::from_utf8_lossy(&err.stderr).contains("positions [0, 1, 2, 3, 4]"));
}

#[test]
fn limit_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_schroder"))
        .args(["count", "paths", "2"])
        .env("SCHRODER_EXHAUSTIVE_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("path.svg");
    let o = schroder(&["render", "--style", "svg", "--out", file.to_str().unwrap(), "HUUUDUUDDHUUDDHDD"], "");
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let svg = std::fs::read_to_string(file).unwrap();
    assert_eq!(svg.matches("<line class=\"step-").count(), 17);
}

#[test]
fn decoder_trace() {
    let o = schroder(&["map", "sigma", "--direction", "inverse", "--trace", "UD"], "");
    assert_eq!(stdout(&o), "0 U 1\n1 D 1\n2 U 2\n3 D 2\n1,2\n");
}

#[test]
fn library_run_is_deterministic() {
    let mut config = RunConfig::new(Cmd::List { subject: Subject::Paths { class: PathClass::NoEvenPeak }, n: 4 });
    let a = run_config(&config, "").unwrap();
    let b = run_config(&config, "").unwrap();
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 51);

    config.command = Cmd::Map { map: MapName::Full12321, direction: Direction::Inverse, trace: false };
    let back = run_config(&config, &a).unwrap();
    assert_eq!(back.lines().count(), 51);

    config.command = Cmd::Series { kind: SeriesKind::Bell, order: 4 };
    config.format = OutputFormat::Json;
    assert_eq!(run_config(&config, "").unwrap(), "[1,1,2,5,15]\n");

    config.command = Cmd::Verify { max_n: 3 };
    config.format = OutputFormat::Text;
    let report = run_config(&config, "").unwrap();
    assert!(report.lines().all(|l| l.starts_with("PASS") || l.ends_with("0 failed")), "{report}");
}
