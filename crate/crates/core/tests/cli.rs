use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

/// Runs the binary in `dir` with whitespace-separated `args`.
fn bigcross(args: &str, dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigcross"))
        .args(args.split_whitespace())
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn ok(args: &str, dir: &Path) -> String {
    let out = bigcross(args, dir);
    assert!(
        out.status.success(),
        "{args} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &str, dir: &Path) -> i32 {
    bigcross(args, dir).status.code().expect("exit code")
}

fn json(args: &str, dir: &Path) -> Value {
    serde_json::from_str(&ok(args, dir)).unwrap()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn header(path: &Path) -> String {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .find(|l| !l.starts_with('#'))
        .unwrap()
        .to_string()
}

const SQUARE_K4: &str = "4 6\n0 1\n1 2\n2 3\n0 3\n0 2\n1 3\n";
const SQUARE: &str = r#"{"n":4,"positions":[[0,0],[1,0],[1,1],[0,1]]}"#;
const THREE: &str = r#"{"n":3,"positions":[[0,0],[1,0],[1,1]]}"#;

#[test]
fn generate_writes_headers() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok("generate --model erdos-renyi --n 20 --m 40 --seed 7 --out g.txt", d);
    assert_eq!(header(&d.join("g.txt")), "20 40");
    ok("generate --model classic --name icosahedron --out ico.txt", d);
    assert_eq!(header(&d.join("ico.txt")), "12 30");
    let planar = ok("generate --model random-planar --n 12 --m 20", d);
    assert!(planar.contains("GDT"), "planar output carries its provenance note");
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(code("generate --model erdos-renyi --m 40", d), 1);
    assert_eq!(code("generate --model classic", d), 1);
    assert_eq!(code("generate --model erdos-renyi --n 10 --m 200", d), 1);
    assert_eq!(code("layout --in x.txt --algo spring", d), 1);
    assert_eq!(code("bench --count 3 --outdir out", d), 1);
    assert_eq!(code("bench --count 6 --n-min 3 --outdir out", d), 1);
    assert_eq!(code("frobnicate", d), 1);
    assert_eq!(code("--help", d), 0);
    assert_eq!(code("--version", d), 0);
}

#[test]
fn data_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("k4.txt"), SQUARE_K4).unwrap();
    fs::write(d.join("bad.txt"), "3 2\n0 1\n").unwrap();
    fs::write(d.join("three.json"), THREE).unwrap();
    assert_eq!(code("layout --in missing.txt", d), 2);
    assert_eq!(code("layout --in bad.txt", d), 2);
    assert_eq!(code("measure --graph k4.txt --layout three.json", d), 2);
}

#[test]
fn layout_records_presets_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok("generate --model classic --name cycle --n 6 --out c6.txt", d);
    ok("layout --in c6.txt --seed 3 --out a.json", d);
    ok("layout --in c6.txt --seed 3 --out b.json", d);
    assert_eq!(fs::read(d.join("a.json")).unwrap(), fs::read(d.join("b.json")).unwrap());

    let v = read_json(&d.join("a.json"));
    assert_eq!(v["n"], 6);
    assert_eq!(v["seed"], 3);
    assert_eq!(v["params"]["move_threshold"], 0.0005);
    assert_eq!(v["params"]["max_iterations"], 80000);
    assert_eq!(v["params"]["variant"], "parallel");
    assert!(v["run"]["iterations"].as_u64().unwrap() > 0);

    ok(
        "layout --in c6.txt --preset high-quality --algo classical --out hq.json",
        d,
    );
    let v = read_json(&d.join("hq.json"));
    assert_eq!(v["params"]["move_threshold"], 0.00001);
    assert_eq!(v["params"]["max_iterations"], 100000);
    assert_eq!(v["params"]["variant"], "classical");
}

#[test]
fn measure_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("k4.txt"), SQUARE_K4).unwrap();
    fs::write(d.join("c4.txt"), "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    fs::write(d.join("sq.json"), SQUARE).unwrap();

    let v = json("measure --graph k4.txt --layout sq.json", d);
    assert_eq!(v["crossings"], 1);
    assert_eq!(v["angle_mean"], 90.0);
    assert!(v.get("crossing_list").is_none());

    let v = json("measure --graph c4.txt --layout sq.json", d);
    assert_eq!(v["crossings"], 0);
    assert_eq!(v["angle_mean"], 0.0);
    assert_eq!(v["angle_stddev"], 0.0);

    let v = json("measure --graph k4.txt --layout sq.json --crossings", d);
    let list = v["crossing_list"].as_array().unwrap();
    assert_eq!(list.len(), 1);
    assert_eq!(list[0]["theta"], 90.0);
}

fn svg_counts(text: &str) -> (usize, usize) {
    let doc = roxmltree::Document::parse(text).expect("well-formed XML");
    let count = |name: &str| doc.descendants().filter(|n| n.has_tag_name(name)).count();
    (count("circle"), count("line"))
}

#[test]
fn render_c6_and_edgeless() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok("generate --model classic --name cycle --n 6 --out c6.txt", d);
    ok("layout --in c6.txt --algo classical --seed 1 --out c6.json", d);
    ok("render --graph c6.txt --layout c6.json --out c6.svg", d);
    assert_eq!(svg_counts(&fs::read_to_string(d.join("c6.svg")).unwrap()), (6, 6));

    fs::write(d.join("empty.txt"), "3 0\n").unwrap();
    fs::write(d.join("three.json"), THREE).unwrap();
    assert_eq!(
        svg_counts(&ok("render --graph empty.txt --layout three.json", d)),
        (3, 0)
    );

    fs::write(d.join("k4.txt"), SQUARE_K4).unwrap();
    fs::write(d.join("sq.json"), SQUARE).unwrap();
    assert_eq!(
        svg_counts(&ok("render --graph k4.txt --layout sq.json --annotate", d)),
        (5, 6)
    );
}

#[test]
fn bench_writes_records_and_one_summary() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let args = "bench --models watts-strogatz --count 10 --master-seed 5 --n-min 8 --n-max 14 --outdir";
    let table = ok(&format!("{args} one"), d);
    assert!(table.contains("angle_mean"));
    ok(&format!("{args} two"), d);

    let mut names: Vec<String> = fs::read_dir(d.join("one"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 11);
    assert_eq!(names.iter().filter(|n| n.starts_with("summary-")).count(), 1);
    for name in &names {
        assert_eq!(
            fs::read(d.join("one").join(name)).unwrap(),
            fs::read(d.join("two").join(name)).unwrap(),
            "{name}"
        );
    }
    let csv = fs::read_to_string(d.join("one/summary-watts-strogatz.csv")).unwrap();
    assert!(csv.starts_with("metric,median_bigcross,median_classical,median_diff,W,n_effective,p,method\n"));
    let rec = read_json(&d.join("one/watts-strogatz-0000.json"));
    assert!(rec.get("classical_time").is_none());
    assert_eq!(rec["graph_spec"]["model"], "watts-strogatz");
}
