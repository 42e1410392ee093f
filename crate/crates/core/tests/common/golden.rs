//! Byte comparison of command output against files in `tests/golden`.
//! Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    /// Side files written by the command, by flag.
    pub side: &'static [(&'static str, &'static str)],
}

pub const CASES: &[Case] = &[
    Case { name: "subdivide_quad.json", args: &["subdivide", "@quad", "--eta", "[-1,1,0,2,0]"], side: &[] },
    Case { name: "subdivide_bipyramid.json", args: &["subdivide", "@bipyramid", "--eta", "[0,1,2,0,0]"], side: &[] },
    Case {
        name: "tropical_quad.json",
        args: &["tropical", "@quad", "--eta", "[-1,0,0,0,0]", "--bbox", "-3,-3,3,3"],
        side: &[("--svg", "tropical_quad.svg")],
    },
    Case { name: "tropical_bipyramid.json", args: &["tropical", "@bipyramid", "--eta", "[0,1,2,3,5]"], side: &[] },
    Case {
        name: "paint_quad.json",
        args: &[
            "paint",
            "@quad",
            "--eta",
            "[-1,0,0,0,0]",
            "--c",
            "-1/3",
            "--alpha",
            "[1/3,1/3]",
            "--bbox",
            "-3,-3,3,3",
        ],
        side: &[("--svg", "paint_quad.svg")],
    },
    Case {
        name: "paint_bipyramid.json",
        args: &["paint", "@bipyramid", "--eta", "[0,1,2,3,5]", "--c", "-1", "--alpha", "[1/2,1/3,1/2]"],
        side: &[],
    },
    Case { name: "secondary_quad.json", args: &["secondary", "@quad"], side: &[("--dot", "secondary_quad.dot")] },
    Case { name: "secondary_bipyramid.json", args: &["secondary", "@bipyramid"], side: &[] },
    Case {
        name: "painting_polytope_quad.json",
        args: &["painting-polytope", "@quad", "--alpha", "[1/3,1/3]"],
        side: &[("--dot", "painting_polytope_quad.dot")],
    },
    Case {
        name: "painting_polytope_bipyramid.json",
        args: &["painting-polytope", "@bipyramid", "--alpha", "[1/2,1/3,1/2]"],
        side: &[("--dot", "painting_polytope_bipyramid.dot")],
    },
    Case {
        name: "verify_painting_polytope_quad.json",
        args: &["verify", "painting-polytope", "@quad", "--alpha", "[1/3,1/3]"],
        side: &[],
    },
    Case {
        name: "verify_painting_polytope_bipyramid.json",
        args: &["verify", "painting-polytope", "@bipyramid", "--alpha", "[1/2,1/3,1/2]"],
        side: &[],
    },
    Case {
        name: "multiplihedron_3.json",
        args: &["multiplihedron", "-m", "3", "--verify"],
        side: &[("--dot", "multiplihedron_3.dot")],
    },
    Case { name: "verify_multiplihedron_3.json", args: &["verify", "multiplihedron", "-m", "3"], side: &[] },
];

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn expand(arg: &str) -> String {
    match arg.strip_prefix('@') {
        Some(name) => manifest().join("tests/data").join(format!("{name}.json")).display().to_string(),
        None => arg.to_string(),
    }
}

fn check(golden: &Path, actual: &[u8], failures: &mut Vec<String>) {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(golden, actual).unwrap();
        return;
    }
    match std::fs::read(golden) {
        Ok(expected) if expected == actual => {}
        Ok(_) => failures.push(format!("{} differs", golden.display())),
        Err(e) => failures.push(format!("{}: {e}", golden.display())),
    }
}

pub fn tropaint() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tropaint"))
}

pub fn data(name: &str) -> String {
    expand(&format!("@{name}"))
}

/// Run every case; returns the list of mismatches.
pub fn compare_all() -> Vec<String> {
    let dir = tempfile::tempdir().unwrap();
    let mut failures = Vec::new();
    for case in CASES {
        let mut cmd = tropaint();
        cmd.args(case.args.iter().map(|a| expand(a)));
        for (flag, file) in case.side {
            cmd.arg(flag).arg(dir.path().join(file));
        }
        let out = cmd.output().unwrap();
        if !out.status.success() {
            failures.push(format!("{}: {}", case.name, String::from_utf8_lossy(&out.stderr)));
            continue;
        }
        check(&manifest().join("tests/golden").join(case.name), &out.stdout, &mut failures);
        for (_, file) in case.side {
            let body = std::fs::read(dir.path().join(file)).unwrap();
            check(&manifest().join("tests/golden").join(file), &body, &mut failures);
        }
    }
    failures
}
