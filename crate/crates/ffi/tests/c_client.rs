//! Compiles a small C program against the generated header and the static
//! library. Skipped when no C compiler is on the PATH.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "twodist.h"

int main(void) {
    TwodistGraph *g = NULL;
    if (twodist_graph_parse("0 1\n1 2\n2 3\n3 4\n4 0\n", &g) != TWODIST_STATUS_OK) return 10;
    int64_t num = 0, den = 0;
    if (twodist_mad(g, &num, &den) != TWODIST_STATUS_OK || num != 2 || den != 1) return 11;
    size_t chi2 = 0;
    if (twodist_exact_chi2(g, 100000, &chi2, NULL, NULL) != TWODIST_STATUS_OK || chi2 != 5) return 12;
    size_t girth = 0;
    if (twodist_girth(g, &girth) != TWODIST_STATUS_OK || girth != 5) return 13;
    twodist_graph_free(g);

    TwodistGraph *bad = NULL;
    if (twodist_graph_parse("0 0\n", &bad) != TWODIST_STATUS_PARSE_ERROR) return 14;
    if (twodist_last_error() == NULL) return 15;
    printf("ok\n");
    return 0;
}
"#;

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
}

/// `target/<profile>` holding the library artifacts.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let lib = artifact_dir().join("libtwodist_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    let bin = dir.path().join("client");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new(cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "client exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
