mod common;

use std::fmt::Write as _;
use std::io::Write;
use std::process::{Command, Output};

use common::{custom_word, m6, normal_double, rng, rtz_mul};
use fpmul::{auto_select, ModeId, Word67};

fn fpmul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fpmul")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn encode_and_decode() {
    let o = fpmul(&["encode", "--mode", "M6", "--exponent", "1023"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), format!("{}\n", m6(1.0)));

    let o = fpmul(&["encode", "--mode", "M2", "--exponent", "127"]);
    let word: Word67 = stdout(&o).trim().parse().unwrap();
    assert_eq!(word.mode_bits(), 0b001);

    let o = fpmul(&["encode", "--mode", "M6", "--exponent", "4096"]);
    assert_eq!(o.status.code(), Some(1));

    let o = fpmul(&[
        "encode",
        "--mode",
        "M3",
        "--exponent",
        "130",
        "--mantissa",
        "0x8000000000000",
    ]);
    let text = stdout(&o);
    let o = fpmul(&["decode", text.trim()]);
    assert_eq!(stdout(&o), "mode=M3 sign=0 exponent=130 mantissa=8000000000000\n");

    let o = fpmul(&["decode", "70000000000000000"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn mul_outputs() {
    let one = m6(1.0).to_string();
    let o = fpmul(&["mul", &one, &one]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), format!("{one} flags=Normal mode=M6 shift=0\n"));

    let o = fpmul(&["mul", &m6(1.1).to_string(), &m6(-2.7).to_string(), "--compare-oracle"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(
        lines[1].starts_with("oracle=-") && lines[1].contains("rel_err="),
        "{text}"
    );
}

#[test]
fn mul_mode_mismatch() {
    let a = custom_word(ModeId::M2, 0, 127, 0).to_string();
    let o = fpmul(&["mul", &a, &m6(1.0).to_string()]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(
        text.contains("mode select error") && text.contains("(M2 vs M6)"),
        "{text}"
    );
}

#[test]
fn auto_mode_reports_chosen_mode() {
    let a = custom_word(ModeId::Auto, 0, 1023, 0b1011 << 48);
    let b = custom_word(ModeId::Auto, 0, 1025, 0xffff << 36);
    let want = auto_select(a.mantissa_field(), b.mantissa_field());
    assert_eq!(want, ModeId::M4);
    let o = fpmul(&["mul", &a.to_string(), &b.to_string()]);
    let text = stdout(&o);
    let word: Word67 = text.split_whitespace().next().unwrap().parse().unwrap();
    assert_eq!(word.mode_bits(), want.bits());
    assert!(text.contains("mode=M4"), "{text}");
}

#[test]
fn rounding_flag() {
    // 1.11111111|1 in M2: truncation keeps 1.11111111, nearest-even gives 2.0
    let a = custom_word(ModeId::M2, 0, 127, 0x1ff << 43).to_string();
    let b = custom_word(ModeId::M2, 0, 127, 0).to_string();
    let t = stdout(&fpmul(&["mul", &a, &b, "--rounding", "truncate"]));
    let n = stdout(&fpmul(&["mul", &a, &b, "--rounding=nearest-even"]));
    assert!(t.starts_with(&custom_word(ModeId::M2, 0, 127, 0xff << 44).to_string()));
    assert!(n.starts_with(&custom_word(ModeId::M2, 0, 128, 0).to_string()));
    assert_eq!(fpmul(&["mul", &a, &b, "--rounding", "up"]).status.code(), Some(1));
}

fn batch_file(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn batch_empty() {
    let f = batch_file("");
    let o = fpmul(&["batch", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "total=0 pass=0 fail=0\n");
}

#[test]
fn batch_golden_vectors() {
    let mut rng = rng(11);
    let mut content = String::from("# a b expected (round toward zero)\n");
    for _ in 0..100 {
        let (x, y) = (normal_double(&mut rng, 300), normal_double(&mut rng, 300));
        writeln!(content, "{} {} {}", m6(x), m6(y), m6(rtz_mul(x, y))).unwrap();
    }
    let f = batch_file(&content);
    let o = fpmul(&["batch", path(&f)]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().count(), 101);
    assert_eq!(text.lines().last().unwrap(), "total=100 pass=100 fail=0");

    // byte-identical reruns
    assert_eq!(stdout(&fpmul(&["batch", path(&f)])), text);
}

#[test]
fn batch_malformed_line() {
    let mut content = String::new();
    for i in 0..10 {
        if i == 4 {
            content.push_str("not a word\n");
        } else {
            content.push_str(&format!("{} {}\n", m6(i as f64 + 1.0), m6(0.5)));
        }
    }
    let f = batch_file(&content);
    let o = fpmul(&["batch", path(&f)]);
    let text = stdout(&o);
    let results = text.lines().filter(|l| l.contains("flags=")).count();
    assert_eq!(results, 9);
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("line 5:"), "{err}");

    let o = fpmul(&["batch", "--strict", path(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("flags=")).count(), 4);
}

#[test]
fn stats_outputs() {
    assert_eq!(stdout(&fpmul(&["stats", "--width", "8"])), "8 0 1 0\n");
    assert_eq!(stdout(&fpmul(&["stats", "--width", "16"])), "16 1 3 6\n");
    assert_eq!(stdout(&fpmul(&["stats", "--mode", "M6"])), "53 3 27 78\n");
    let all = stdout(&fpmul(&["stats", "--all"]));
    assert!(all.starts_with("mode width depth base_muls add_ops urdhva_adders\n"));
    assert_eq!(all.lines().count(), 6);
    assert_eq!(fpmul(&["stats"]).status.code(), Some(1));
}

#[test]
fn selftest_quick() {
    let o = fpmul(&["selftest", "--quick"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.lines().any(|l| l.starts_with("urdhva-8x8: pass (65536 cases)")));
    assert!(text.lines().any(|l| l.starts_with("mode6-rtz: pass")));
    assert_eq!(stdout(&fpmul(&["selftest", "--quick"])), text);
}

#[test]
fn usage_errors() {
    assert_eq!(fpmul(&[]).status.code(), Some(1));
    assert_eq!(fpmul(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(fpmul(&["mul", "123", "456"]).status.code(), Some(1));
    assert_eq!(fpmul(&["--help"]).status.code(), Some(0));
}
