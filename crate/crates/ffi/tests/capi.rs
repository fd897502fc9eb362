use std::ffi::{CStr, CString};
use std::process::Command;
use std::ptr;

use einl_ffi::*;

fn last_error() -> String {
    let p = einl_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn fi_queries() {
    unsafe {
        let mut cat = ptr::null_mut();
        assert_eq!(einl_category_fi_gamma(1, 5, &mut cat), EinlStatus::Ok);
        let mut n = 0usize;
        assert_eq!(einl_hom_set_size(cat, 2, 4, &mut n), EinlStatus::Ok);
        assert_eq!(n, 12);
        assert_eq!(einl_orbit_count(cat, 2, 4, &mut n), EinlStatus::Ok);
        assert_eq!(n, 7);
        let mut ok = false;
        assert_eq!(einl_check_transitivity(cat, &mut ok), EinlStatus::Ok);
        assert!(ok);
        let (mut onset, mut found) = (0usize, false);
        assert_eq!(einl_bijectivity_onset(cat, 1, &mut onset, &mut found), EinlStatus::Ok);
        assert!(found);
        assert_eq!(onset, 2);
        assert!(einl_last_error_message().is_null());
        einl_category_free(cat);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    unsafe {
        let mut cat = ptr::null_mut();
        assert_eq!(einl_category_vi(4, 3, &mut cat), EinlStatus::NotPrime);
        assert!(cat.is_null());
        assert!(last_error().contains("not a prime"));

        assert_eq!(einl_category_vi(2, 2, ptr::null_mut()), EinlStatus::NullPointer);
        let mut n = 0usize;
        assert_eq!(einl_orbit_count(ptr::null(), 1, 2, &mut n), EinlStatus::NullPointer);

        assert_eq!(einl_category_vi(2, 2, &mut cat), EinlStatus::Ok);
        assert_eq!(einl_hom_set_size(cat, 1, 5, &mut n), EinlStatus::OutOfRange);
        einl_category_free(cat);
        einl_category_free(ptr::null_mut());

        let path = CString::new("/nonexistent/gamma.txt").unwrap();
        assert_eq!(einl_category_fi_gamma_table(path.as_ptr(), 2, &mut cat), EinlStatus::Io);
    }
}

#[test]
fn report_round_trip() {
    let command = CString::new("orbits").unwrap();
    let config = CString::new("category = fi_gamma\ngamma = cyclic:2\nmax_object = 3\n").unwrap();
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(einl_run_report(command.as_ptr(), config.as_ptr(), &mut out), EinlStatus::Ok);
        let text = CStr::from_ptr(out).to_str().unwrap().to_owned();
        einl_string_free(out);
        assert!(text.contains("\"schema_version\": 1"));
        assert_eq!(text, einl::cli::run_with_config_text("orbits", config.to_str().unwrap()).unwrap());

        let bad = CString::new("colour = red").unwrap();
        assert_eq!(einl_run_report(command.as_ptr(), bad.as_ptr(), &mut out), EinlStatus::Parse);
        assert!(last_error().starts_with("line 1"));
    }
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/einl.h");
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header])
        .status()
    else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(status.success());
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["einl_category_fi_gamma", "einl_run_report", "einl_string_free", "EINL_STATUS_VIOLATION"] {
        assert!(text.contains(name), "{name} missing from header");
    }
}
