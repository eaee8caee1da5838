use std::ffi::{CStr, CString};
use std::ptr;

use locdim_ffi::*;

fn last_error() -> String {
    let p = locdim_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn petersen() -> *mut LocdimGraph {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { locdim_graph_petersen(&mut g) }, LocdimStatus::Ok);
    g
}

#[test]
fn petersen_values() {
    let g = petersen();
    unsafe {
        assert_eq!(locdim_graph_order(g), 10);
        let (mut lo, mut hi) = (0, 0);
        assert_eq!(
            locdim_metric_dimension(g, 0, &mut lo, &mut hi),
            LocdimStatus::Ok
        );
        assert_eq!((lo, hi), (3, 3));
        assert_eq!(
            locdim_localization_number(g, 0, &mut lo, &mut hi),
            LocdimStatus::Ok
        );
        assert_eq!((lo, hi), (3, 3));
        let (mut d, mut r) = (LocdimDecision::Unknown, 9);
        assert_eq!(locdim_loc_decide(g, 2, 0, &mut d, &mut r), LocdimStatus::Ok);
        assert_eq!((d, r), (LocdimDecision::RobberWin, 0));
        locdim_graph_free(g);
    }
}

#[test]
fn resolving_check() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(locdim_graph_kneser(2, 6, &mut g), LocdimStatus::Ok);
        // 12, 16, 23, 34, 45, 56 as vertex indices of K(2,6) in lexicographic order.
        let set = [0usize, 4, 5, 9, 12, 14];
        let mut ok = false;
        assert_eq!(
            locdim_is_resolving(g, set.as_ptr(), set.len(), &mut ok),
            LocdimStatus::Ok
        );
        assert!(ok);
        assert_eq!(
            locdim_is_resolving(g, set.as_ptr(), 2, &mut ok),
            LocdimStatus::Ok
        );
        assert!(!ok);
        let bad = [15usize];
        assert_eq!(
            locdim_is_resolving(g, bad.as_ptr(), 1, &mut ok),
            LocdimStatus::InvalidInput
        );
        assert!(last_error().contains("out of range"));
        locdim_graph_free(g);
    }
}

#[test]
fn json_round_trip_keeps_the_hash() {
    let g = petersen();
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(locdim_graph_to_json(g, &mut json), LocdimStatus::Ok);
        let mut h = ptr::null_mut();
        assert_eq!(locdim_graph_from_json(json, &mut h), LocdimStatus::Ok);
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(locdim_graph_hash(g, &mut a), LocdimStatus::Ok);
        assert_eq!(locdim_graph_hash(h, &mut b), LocdimStatus::Ok);
        assert_eq!(CStr::from_ptr(a), CStr::from_ptr(b));
        for s in [json, a, b] {
            locdim_string_free(s);
        }
        locdim_graph_free(g);
        locdim_graph_free(h);
    }
}

#[test]
fn errors_and_null_pointers() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(locdim_graph_polarity(6, &mut g), LocdimStatus::InvalidInput);
        assert!(g.is_null());
        assert!(last_error().contains("field order"));
        assert_eq!(
            locdim_graph_cycle(5, ptr::null_mut()),
            LocdimStatus::NullPointer
        );
        let bad = CString::new("{not json").unwrap();
        assert_eq!(
            locdim_graph_from_json(bad.as_ptr(), &mut g),
            LocdimStatus::InvalidInput
        );
        let mut n = 0;
        assert_eq!(
            locdim_metric_dimension(ptr::null(), 0, &mut n, &mut n),
            LocdimStatus::NullPointer
        );
        assert_eq!(locdim_graph_order(ptr::null()), 0);
        locdim_graph_free(ptr::null_mut());
        locdim_string_free(ptr::null_mut());
    }
}

#[test]
fn budget_is_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(locdim_graph_cycle(9, &mut g), LocdimStatus::Ok);
        let (mut d, mut r) = (LocdimDecision::CopWin, 0);
        assert_eq!(
            locdim_loc_decide(g, 1, 10, &mut d, &mut r),
            LocdimStatus::Ok
        );
        assert_eq!(d, LocdimDecision::Unknown);
        locdim_graph_free(g);
    }
}

#[test]
fn moore_strategy_and_bounds() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(locdim_graph_hoffman_singleton(&mut g), LocdimStatus::Ok);
        let mut rounds = 0;
        assert_eq!(
            locdim_verify_moore_strategy(g, 64, &mut rounds),
            LocdimStatus::Ok
        );
        assert!(rounds >= 1);
        let mut json = ptr::null_mut();
        assert_eq!(locdim_bounds_graph_json(g, 0, &mut json), LocdimStatus::Ok);
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(v["target"]["order"], 50);
        locdim_string_free(json);
        locdim_graph_free(g);

        let p = petersen();
        assert_eq!(
            locdim_verify_moore_strategy(p, 64, &mut rounds),
            LocdimStatus::InvalidInput
        );
        locdim_graph_free(p);

        let mut json = ptr::null_mut();
        assert_eq!(
            locdim_bounds_kneser_json(4, 12, &mut json),
            LocdimStatus::Ok
        );
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(v["entries"][0]["bound"], 9);
        locdim_string_free(json);
        assert_eq!(
            locdim_bounds_kneser_json(4, 4, &mut json),
            LocdimStatus::InvalidInput
        );
    }
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/locdim.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|s| s.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for name in exports {
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
}

/// Compiles and runs examples/smoke.c against the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    // The test binary sits in <target>/<profile>/deps; the library one level up.
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = lib_dir.join("liblocdim_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let out_dir = tempfile::tempdir().unwrap();
    let bin = out_dir.path().join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = std::process::Command::new(cc)
        .arg(manifest.join("examples/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
    let run = std::process::Command::new(&bin).output().unwrap();
    assert!(run.status.success());
    let text = String::from_utf8(run.stdout).unwrap();
    assert!(
        text.starts_with("beta 3\nzeta 3\nerror: unsupported field order 6"),
        "{text}"
    );
}
