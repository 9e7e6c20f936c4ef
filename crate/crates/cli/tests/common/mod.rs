//! Golden-file harness: a fixed script of CLI invocations under seed 0, each
//! recorded as its arguments, exit status, stdout and stderr.

#![allow(dead_code)]

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use fatdelta::fairset::FairSetCategory;
use fatdelta::fincat::from_monoid;
use fatdelta::{gen, json};

/// One invocation. An argument `@name` is replaced by a file holding the stdout of
/// the earlier case `name`; `stdin` feeds such a stdout on standard input.
pub struct Case {
    pub name: &'static str,
    pub args: Vec<&'static str>,
    pub stdin: Option<&'static str>,
}

fn case(name: &'static str, args: &[&'static str]) -> Case {
    Case {
        name,
        args: args.to_vec(),
        stdin: None,
    }
}

fn piped(name: &'static str, from: &'static str, args: &[&'static str]) -> Case {
    Case {
        name,
        args: args.to_vec(),
        stdin: Some(from),
    }
}

pub fn cases() -> Vec<Case> {
    vec![
        case("gen-ordinal", &["gen", "ordinal", "--seed", "0"]),
        case("gen-fat-map", &["gen", "fat-map", "--seed", "0"]),
        case("gen-category", &["gen", "category", "--seed", "0"]),
        case("gen-category-3", &["gen", "category", "--seed", "0", "--count", "3"]),
        case("gen-functor", &["gen", "functor", "--seed", "0"]),
        case("gen-fair-set", &["gen", "fair-set", "--seed", "0"]),
        case("gen-bicat", &["gen", "bicat", "--seed", "0"]),
        case("gen-fair2", &["gen", "fair2", "--seed", "0"]),
        case("enum-hom-delta", &["enum-hom", "--delta", "1", "2"]),
        case("enum-hom-fat", &["enum-hom", "--fat", "o", "o-o"]),
        case("enum-hom-fat-2", &["enum-hom", "--fat", "o.o", "o-o.o-o"]),
        case("enum-hom-tmap", &["enum-hom", "--tmap", "o.o", "o-o"]),
        case("enum-hom-capped", &["enum-hom", "--delta", "3", "9"]),
        case("compose-delta", &["compose", "1 -> 2 : [0,2]", "2 -> 1 : [0,0,1]"]),
        case("compose-fat", &["compose", "o -> o-o : [0]", "o-o -> o-o.o : [0,1]"]),
        case("compose-tmap", &["compose", "o.o -> o-o : [0,0]", "o-o -> o : [0,0]"]),
        case("compose-mismatch", &["compose", "o -> o-o : [0]", "o.o -> o.o : [0,1]"]),
        case("factor", &["factor", "3 -> 2 : [0,0,2,2]"]),
        case("dotsum-delta", &["dotsum", "1", "3"]),
        case("dotsum-coloured", &["dotsum", "o.o", "o-o"]),
        case("dotsum-maps", &["dotsum", "o -> o-o : [1]", "o.o -> o.o : [0,1]"]),
        case("dotsum-gluing", &["dotsum", "o -> o : [0]", "o -> o-o : [1]"]),
        case("project-object", &["project", "o-o.o-o-o.o"]),
        case("project-map", &["project", "o.o -> o-o.o : [0,2]"]),
        case("vertical-check", &["vertical", "check", "o.o -> o-o.o : [0,2]"]),
        case("vertical-check-fails", &["vertical", "check", "o -> o.o : [0]"]),
        case(
            "vertical-decompose",
            &["vertical", "decompose", "o.o -> o-o.o-o : [0,2]"],
        ),
        case(
            "vertical-decompose-g5",
            &["vertical", "decompose", "o-o -> o-o-o-o : [0,3]"],
        ),
        case("vertical-generators", &["vertical", "generators"]),
        case("episquare-to", &["episquare", "to", "o.o -> o-o.o : [0,2]"]),
        case(
            "episquare-from",
            &[
                "episquare",
                "from",
                "1 -> 2 : [0,2]",
                "1 -> 1 : [0,1]",
                "1 -> 1 : [0,1]",
                "2 -> 1 : [0,0,1]",
            ],
        ),
        case("cat-validate", &["cat", "validate", "@gen-category"]),
        case("cat-validate-bad", &["cat", "validate", "nonassociative.json"]),
        case("cat-pi0", &["cat", "pi0", "@gen-category"]),
        case("cat-tau0", &["cat", "tau0", "@gen-category"]),
        case("cat-product", &["cat", "product", "@gen-category", "walking.json"]),
        case("cat-coproduct", &["cat", "coproduct", "@gen-category", "walking.json"]),
        case("cat-fibre", &["cat", "fibre", "@gen-functor", "@gen-functor"]),
        case("functor-report", &["functor", "report", "@gen-functor"]),
        case("fair-from-cat", &["fair", "from-cat", "@gen-category"]),
        piped("fair-to-cat", "fair-from-cat", &["fair", "to-cat", "-"]),
        case("fair-validate", &["fair", "validate", "@gen-fair-set"]),
        case("fair-validate-left-zero", &["fair", "validate", "leftzero.json"]),
        case(
            "fair-eval-object",
            &["fair", "eval", "@gen-fair-set", "--object", "o-o.o"],
        ),
        case(
            "fair-eval-map",
            &["fair", "eval", "@gen-fair-set", "--map", "o.o -> o-o.o : [0,2]"],
        ),
        case(
            "fair-nerve-check",
            &["fair", "nerve-check", "@gen-fair-set", "--level", "3"],
        ),
        case("bicat-validate", &["bicat", "validate", "@gen-bicat"]),
        case(
            "bicat-validate-monoidal",
            &["bicat", "validate", "--monoidal", "two-units.json"],
        ),
        case(
            "bicat-id-cat",
            &["bicat", "id-cat", "--monoidal", "two-units.json", "--object", "*"],
        ),
        case("bicat-to-fair2", &["bicat", "to-fair2", "@gen-bicat"]),
        case(
            "bicat-to-fair2-monoidal",
            &["bicat", "to-fair2", "--monoidal", "two-units.json"],
        ),
        case("bicat-from-fair2", &["bicat", "from-fair2", "@bicat-to-fair2"]),
        case(
            "bicat-from-fair2-last",
            &[
                "bicat",
                "from-fair2",
                "--last",
                "--monoidal",
                "@bicat-to-fair2-monoidal",
            ],
        ),
        case("fair2-validate", &["fair2", "validate", "@gen-fair2"]),
        case(
            "fair2-slice-hom",
            &["fair2", "slice", "@bicat-to-fair2-monoidal", "--hom", "*", "*"],
        ),
        case(
            "fair2-slice-unit",
            &["fair2", "slice", "@bicat-to-fair2-monoidal", "--unit", "*"],
        ),
        case("usage-error", &["enum-hom", "--delta", "--fat", "o", "o"]),
    ]
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn s(x: &str) -> String {
    x.to_string()
}

/// Hand-made inputs that the generator does not produce.
pub fn write_fixtures(dir: &Path) {
    let leftzero = FairSetCategory::from_names(
        vec![s("*")],
        vec![(s("a"), s("*"), s("*")), (s("b"), s("*"), s("*"))],
        &[
            (s("a"), s("a"), s("a")),
            (s("a"), s("b"), s("a")),
            (s("b"), s("a"), s("b")),
            (s("b"), s("b"), s("b")),
        ],
        &[(s("w"), s("*"), s("a"))],
    )
    .unwrap();
    fs::write(dir.join("leftzero.json"), json::fair_set_to_json(&leftzero)).unwrap();
    let bad = from_monoid(&["e", "a", "b"], 0, &[vec![0, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]).unwrap();
    fs::write(dir.join("nonassociative.json"), json::category_to_json(&bad)).unwrap();
    let walking = gen::free_category(2, &[(0, 1)]);
    fs::write(dir.join("walking.json"), json::category_to_json(&walking)).unwrap();
    let two = json::monoidal_to_json(&gen::codiscrete_two_units()).unwrap();
    fs::write(dir.join("two-units.json"), two).unwrap();
}

/// Runs every case in a scratch directory and returns `(name, record)` pairs.
pub fn run_cases() -> Vec<(String, String)> {
    let work = tempfile::tempdir().unwrap();
    write_fixtures(work.path());
    let mut out = Vec::new();
    for c in cases() {
        let args: Vec<String> = c
            .args
            .iter()
            .map(|a| match a.strip_prefix('@') {
                Some(prev) => format!("{prev}.out"),
                None => a.to_string(),
            })
            .collect();
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_fatdelta"));
        cmd.args(&args)
            .current_dir(work.path())
            .env_remove("FATDELTA_MAX_SIZE")
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped());
        let mut child = cmd.spawn().unwrap();
        let input = c
            .stdin
            .map(|prev| fs::read(work.path().join(format!("{prev}.out"))).unwrap())
            .unwrap_or_default();
        child.stdin.take().unwrap().write_all(&input).unwrap();
        let res = child.wait_with_output().unwrap();
        let stdout = String::from_utf8(res.stdout).unwrap();
        fs::write(work.path().join(format!("{}.out", c.name)), &stdout).unwrap();
        let record = format!(
            "$ fatdelta {}\nexit: {}\n{}--- stderr\n{}",
            c.args.iter().map(|a| format!("{a:?}")).collect::<Vec<_>>().join(" "),
            res.status.code().unwrap_or(-1),
            stdout,
            String::from_utf8(res.stderr).unwrap(),
        );
        out.push((c.name.to_string(), record));
    }
    out
}

/// Compares a run against the stored files; with `update`, rewrites them instead.
pub fn check_golden(records: &[(String, String)], update: bool) -> Vec<String> {
    let dir = golden_dir();
    let mut mismatches = Vec::new();
    for (name, record) in records {
        let path = dir.join(format!("{name}.txt"));
        if update {
            fs::create_dir_all(&dir).unwrap();
            fs::write(&path, record).unwrap();
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(stored) if stored == *record => {}
            Ok(_) => mismatches.push(format!("{name}: output differs from {}", path.display())),
            Err(_) => mismatches.push(format!("{name}: no golden file at {}", path.display())),
        }
    }
    mismatches
}
