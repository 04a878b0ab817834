use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use qatlas_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = qatlas_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn counts() {
    let expected = [
        ("bitangent", 28),
        ("octad", 36),
        ("steiner", 63),
        ("gopel", 135),
        ("syzygetic", 315),
        ("azygetic", 336),
        ("aronhold", 288),
        ("ennead", 960),
        ("quadric_points", 135),
    ];
    for (kind, n) in expected {
        let mut out = 0;
        assert_eq!(unsafe { qatlas_count(c(kind).as_ptr(), &mut out) }, QatlasStatus::Ok);
        assert_eq!(out, n, "{kind}");
    }
    let mut out = 0;
    assert_eq!(unsafe { qatlas_count(c("quartic").as_ptr(), &mut out) }, QatlasStatus::UnknownStructure);
    assert!(last_error().contains("quartic"));
    assert_eq!(unsafe { qatlas_count(ptr::null(), &mut out) }, QatlasStatus::NullPointer);
    assert_eq!(unsafe { qatlas_count(c("gopel").as_ptr(), ptr::null_mut()) }, QatlasStatus::NullPointer);
}

#[test]
fn group_handle() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { qatlas_group_new(1000, &mut g) }, QatlasStatus::Budget);
    assert!(g.is_null());
    assert!(last_error().contains("1000"));

    assert_eq!(unsafe { qatlas_group_new(2_000_000, &mut g) }, QatlasStatus::Ok);
    let mut order = 0;
    assert_eq!(unsafe { qatlas_group_order(g, &mut order) }, QatlasStatus::Ok);
    assert_eq!(order, 1_451_520);
    assert!(qatlas_last_error_message().is_null());

    let (mut size, mut stab) = (0, 0);
    assert_eq!(unsafe { qatlas_orbit(g, c("gopel").as_ptr(), &mut size, &mut stab) }, QatlasStatus::Ok);
    assert_eq!((size, stab), (135, 10752));
    assert_eq!(
        unsafe { qatlas_orbit(g, c("ennead").as_ptr(), &mut size, &mut stab) },
        QatlasStatus::UnknownStructure
    );
    unsafe { qatlas_group_free(g) };
    unsafe { qatlas_group_free(ptr::null_mut()) };

    let mut rank = 0;
    assert_eq!(unsafe { qatlas_pair_rank(c("steiner").as_ptr(), &mut rank) }, QatlasStatus::Ok);
    assert_eq!(rank, 3);
}

#[test]
fn tables_handle() {
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { qatlas_tables_load(ptr::null(), &mut t) }, QatlasStatus::Ok);

    let mut buf = [0i64; 7];
    let mut len = 0;
    assert_eq!(
        unsafe { qatlas_poincare(t, c("riemann_dickson").as_ptr(), buf.as_mut_ptr(), 7, &mut len) },
        QatlasStatus::Ok
    );
    assert_eq!(&buf[..len], &[1, 0, 0, 0, 0, 2, 7]);
    assert_eq!(
        unsafe { qatlas_point_count(t, c("azygetic").as_ptr(), buf.as_mut_ptr(), 7, &mut len) },
        QatlasStatus::Ok
    );
    assert_eq!(&buf[..len], &[9, -8, 3, -1, 0, -1, 1]);
    assert_eq!(
        unsafe { qatlas_poincare(t, c("bitangent").as_ptr(), buf.as_mut_ptr(), 3, &mut len) },
        QatlasStatus::BufferTooSmall
    );
    assert_eq!(len, 7);

    let (mut findings, mut known) = (0, 0);
    assert_eq!(unsafe { qatlas_audit(t, &mut findings, &mut known) }, QatlasStatus::Ok);
    assert_eq!((findings, known), (2, 2));
    unsafe { qatlas_tables_free(t) };

    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("characters.json"), "[{\"structure\": \"octad\"}]").unwrap();
    let path = c(dir.path().to_str().unwrap());
    assert_eq!(unsafe { qatlas_tables_load(path.as_ptr(), &mut t) }, QatlasStatus::Load);
    assert!(t.is_null());
    assert!(last_error().contains("characters.json"));
}

#[test]
fn octonions_and_strings() {
    let (mut sign, mut label) = (0, 0);
    assert_eq!(unsafe { qatlas_octonion_multiply(2, 1, &mut sign, &mut label) }, QatlasStatus::Ok);
    assert_eq!((sign, label), (-1, 3));
    assert_eq!(
        unsafe { qatlas_octonion_multiply(8, 1, &mut sign, &mut label) },
        QatlasStatus::InvalidArgument
    );

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qatlas_enumerate_json(c("gopel").as_ptr(), &mut s) }, QatlasStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { qatlas_string_free(s) };
    let tuples: Vec<Vec<u8>> = serde_json::from_str(&text).unwrap();
    assert_eq!(tuples.len(), 135);
    assert!(tuples.iter().all(|t| t.len() == 7));

    let v = unsafe { CStr::from_ptr(qatlas_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler on PATH; skipping");
        return;
    }
    let lib_dir = target_dir();
    let out = tempfile::tempdir().unwrap();
    let bin = out.path().join("smoke");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg("-L")
        .arg(&lib_dir)
        .arg("-lqatlas_ffi")
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to build");
    let run = Command::new(&bin).env("LD_LIBRARY_PATH", &lib_dir).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
