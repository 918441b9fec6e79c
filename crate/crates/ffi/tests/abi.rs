use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use toricube_ffi::*;

const PAIRWISE: &str =
    r#"{"kind":"monomial_map","n":3,"d":3,"exponents":[[1,1,0],[0,1,1],[1,0,1]]}"#;
const PRECUBE: &str = r#"{"kind":"binomial_system","n":4,"inequalities":[{"u":[0,1,0,1],"v":[1,0,1,0]},{"u":[1,0,0,1],"v":[0,1,1,0]}]}"#;

fn last_error() -> String {
    unsafe { CStr::from_ptr(tc_last_error_message()) }
        .to_str()
        .unwrap()
        .to_owned()
}

unsafe fn take_string(s: *mut c_char) -> String {
    let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
    tc_string_free(s);
    text
}

#[test]
fn map_to_complex() {
    let json = CString::new(PAIRWISE).unwrap();
    unsafe {
        let mut map = ptr::null_mut();
        assert_eq!(tc_map_from_json(json.as_ptr(), &mut map), TcStatus::Ok);
        let mut x = ptr::null_mut();
        assert_eq!(tc_complex_from_map(map, &mut x), TcStatus::Ok);

        let mut cells = 0;
        assert_eq!(tc_complex_cell_count(x, &mut cells), TcStatus::Ok);
        assert_eq!(cells, 15);
        let mut chi = 0;
        assert_eq!(tc_complex_euler(x, &mut chi), TcStatus::Ok);
        assert_eq!(chi, 1);
        let mut refinements = 99;
        assert_eq!(tc_complex_refinements(x, &mut refinements), TcStatus::Ok);
        assert_eq!(refinements, 0);

        let mut len = 0;
        assert_eq!(
            tc_complex_f_vector(x, ptr::null_mut(), 0, &mut len),
            TcStatus::BufferTooSmall
        );
        assert_eq!(len, 4);
        assert!(last_error().contains("4 entries"));
        let mut f = [0usize; 4];
        assert_eq!(
            tc_complex_f_vector(x, f.as_mut_ptr(), 4, &mut len),
            TcStatus::Ok
        );
        assert_eq!(f, [5, 6, 3, 1]);
        assert_eq!(last_error(), "");

        let mut dot = ptr::null_mut();
        assert_eq!(tc_complex_poset_dot(x, &mut dot), TcStatus::Ok);
        let dot = take_string(dot);
        assert!(dot.starts_with("digraph {"));
        assert_eq!(dot.matches("->").count(), 27);

        let mut js = ptr::null_mut();
        assert_eq!(tc_complex_to_json(x, true, false, &mut js), TcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(js)).unwrap();
        assert_eq!(v["f_vector"], serde_json::json!([5, 6, 3, 1]));
        assert!(v["char_domains"].is_array());

        let mut s = ptr::null_mut();
        assert_eq!(tc_implicitize(map, &mut s), TcStatus::Ok);
        let mut cube = false;
        assert_eq!(tc_is_cube(s, &mut cube), TcStatus::Ok);
        assert!(cube);

        tc_system_free(s);
        tc_complex_free(x);
        tc_map_free(map);
    }
}

#[test]
fn system_operations() {
    let json = CString::new(PRECUBE).unwrap();
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(tc_system_from_json(json.as_ptr(), &mut s), TcStatus::Ok);
        let mut cube = true;
        assert_eq!(tc_is_cube(s, &mut cube), TcStatus::Ok);
        assert!(!cube);

        let mut c = ptr::null_mut();
        assert_eq!(tc_cubify(s, &mut c), TcStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(tc_system_to_json(c, &mut out), TcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["inequalities"].as_array().unwrap().len(), 3);

        let mut m = ptr::null_mut();
        assert_eq!(tc_parametrize(s, &mut m), TcStatus::Ok);
        assert_eq!(tc_map_to_json(m, &mut out), TcStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(v["d"], 5);

        let mut x = ptr::null_mut();
        assert_eq!(tc_complex_from_system(c, &mut x), TcStatus::Ok);
        let mut chi = 0;
        assert_eq!(tc_complex_euler(x, &mut chi), TcStatus::Ok);
        assert_eq!(chi, 1);

        tc_complex_free(x);
        tc_map_free(m);
        tc_system_free(c);
        tc_system_free(s);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut map = ptr::null_mut();
        assert_eq!(
            tc_map_from_json(ptr::null(), &mut map),
            TcStatus::NullArgument
        );
        assert!(last_error().contains("json"));

        let wrong = CString::new(PRECUBE).unwrap();
        assert_eq!(
            tc_map_from_json(wrong.as_ptr(), &mut map),
            TcStatus::Malformed
        );
        assert!(last_error().contains("kind"));
        assert!(map.is_null());

        let bad =
            CString::new(r#"{"kind":"monomial_map","n":1,"d":1,"exponents":[[-1]]}"#).unwrap();
        assert_eq!(
            tc_map_from_json(bad.as_ptr(), &mut map),
            TcStatus::Malformed
        );
        assert!(last_error().contains("exponents[0][0]"));

        let invalid = [0xffu8, 0];
        assert_eq!(
            tc_map_from_json(invalid.as_ptr().cast(), &mut map),
            TcStatus::InvalidUtf8
        );

        let mut x = ptr::null_mut();
        assert_eq!(
            tc_complex_from_map(ptr::null(), &mut x),
            TcStatus::NullArgument
        );
        let mut chi = 0;
        assert_eq!(
            tc_complex_euler(ptr::null(), &mut chi),
            TcStatus::NullArgument
        );

        let big = format!(
            r#"{{"kind":"binomial_system","n":30,"inequalities":[{{"u":{z},"v":{z}}}]}}"#,
            z = serde_json::to_string(&[0; 30]).unwrap()
        );
        let big = CString::new(big).unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(tc_system_from_json(big.as_ptr(), &mut s), TcStatus::Ok);
        let mut c = ptr::null_mut();
        assert_eq!(tc_cubify(s, &mut c), TcStatus::LimitExceeded);
        tc_system_free(s);

        // Freeing null is a no-op.
        tc_system_free(ptr::null_mut());
        tc_map_free(ptr::null_mut());
        tc_complex_free(ptr::null_mut());
        tc_string_free(ptr::null_mut());
    }
}

fn target_dir() -> PathBuf {
    // target/<profile>/deps/abi-<hash>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let include = manifest.join("include");
    assert!(
        include.join("toricube.h").exists(),
        "header was not generated"
    );
    let lib = target_dir().join("libtoricube_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!(
            "skipping: no C compiler or static library at {}",
            lib.display()
        );
        return;
    }
    let dir = tempfile_dir();
    let src = dir.join("smoke.c");
    let bin = dir.join("smoke");
    std::fs::write(&src, C_SMOKE).unwrap();
    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "cells=15 euler=1 f=5,6,3,1 malformed=3\n"
    );
    std::fs::remove_dir_all(dir).ok();
}

fn tempfile_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toricube-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const C_SMOKE: &str = r#"
#include <stdio.h>
#include "toricube.h"

int main(void) {
    const char *json = "{\"kind\":\"monomial_map\",\"n\":3,\"d\":3,"
                       "\"exponents\":[[1,1,0],[0,1,1],[1,0,1]]}";
    TcMap *map = NULL;
    TcComplex *x = NULL;
    if (tc_map_from_json(json, &map) != TC_STATUS_OK) return 1;
    if (tc_complex_from_map(map, &x) != TC_STATUS_OK) return 2;
    size_t cells = 0, len = 0, f[8];
    int64_t chi = 0;
    tc_complex_cell_count(x, &cells);
    tc_complex_euler(x, &chi);
    if (tc_complex_f_vector(x, f, 8, &len) != TC_STATUS_OK || len != 4) return 3;
    TcSystem *s = NULL;
    TcStatus bad = tc_system_from_json(json, &s);
    printf("cells=%zu euler=%lld f=%zu,%zu,%zu,%zu malformed=%d\n", cells, (long long)chi,
           f[0], f[1], f[2], f[3], (int)bad);
    tc_complex_free(x);
    tc_map_free(map);
    return 0;
}
"#;
