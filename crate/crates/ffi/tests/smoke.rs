//! Exercises the C ABI from Rust: constructor/accessor round trips, the
//! spectral queries, and the status-code error paths.

use std::ffi::{c_char, CString};

use qmax_ffi::*;

fn family(tag: QmaxFamily, n: u32, k: u32, j: u32) -> *mut QmaxGraph {
    let mut g: *mut QmaxGraph = std::ptr::null_mut();
    let status = unsafe { qmax_graph_family(tag, n, k, j, &mut g) };
    assert_eq!(status, QmaxStatus::Ok);
    assert!(!g.is_null());
    g
}

#[test]
fn fan_q_index_through_the_abi() {
    let g = family(QmaxFamily::Fan, 7, 0, 0);
    let mut q = 0.0;
    assert_eq!(unsafe { qmax_qindex(g, 1e-10, &mut q) }, QmaxStatus::Ok);
    assert!((q - 7.8099).abs() < 1e-3, "q = {q}");

    let mut order = 0;
    let mut size = 0;
    let mut delta = 0;
    unsafe {
        assert_eq!(qmax_graph_order(g, &mut order), QmaxStatus::Ok);
        assert_eq!(qmax_graph_size(g, &mut size), QmaxStatus::Ok);
        assert_eq!(qmax_graph_max_degree(g, &mut delta), QmaxStatus::Ok);
        qmax_graph_free(g);
    }
    assert_eq!(order, 7);
    assert_eq!(size, 11);
    assert_eq!(delta, 6);
}

#[test]
fn graph6_round_trip_through_the_abi() {
    let line = CString::new("Bw").unwrap();
    let mut g: *mut QmaxGraph = std::ptr::null_mut();
    assert_eq!(
        unsafe { qmax_graph_from_graph6(line.as_ptr(), &mut g) },
        QmaxStatus::Ok
    );
    let mut buf = [0 as c_char; 16];
    assert_eq!(
        unsafe { qmax_graph_to_graph6(g, buf.as_mut_ptr(), buf.len()) },
        QmaxStatus::Ok
    );
    let out = unsafe { std::ffi::CStr::from_ptr(buf.as_ptr()) };
    assert_eq!(out.to_str().unwrap(), "Bw");

    // too-small buffer reports instead of truncating
    let mut tiny = [0 as c_char; 2];
    assert_eq!(
        unsafe { qmax_graph_to_graph6(g, tiny.as_mut_ptr(), tiny.len()) },
        QmaxStatus::BufferTooSmall
    );
    unsafe { qmax_graph_free(g) };
}

#[test]
fn spectrum_of_c4_and_perron_positivity() {
    // C4 as graph6; eigenvalues (4, 2, 2, 0)
    let c4 = CString::new("Cr").unwrap();
    let mut g: *mut QmaxGraph = std::ptr::null_mut();
    let st = unsafe { qmax_graph_from_graph6(c4.as_ptr(), &mut g) };
    assert_eq!(st, QmaxStatus::Ok);
    let mut order = 0;
    unsafe { qmax_graph_order(g, &mut order) };
    assert_eq!(order, 4);
    let mut eigs = [0.0f64; 4];
    assert_eq!(
        unsafe { qmax_spectrum(g, eigs.as_mut_ptr(), eigs.len()) },
        QmaxStatus::Ok
    );
    // wrong-length buffer is rejected
    let mut three = [0.0f64; 3];
    assert_eq!(
        unsafe { qmax_spectrum(g, three.as_mut_ptr(), three.len()) },
        QmaxStatus::BufferTooSmall
    );

    let mut q = 0.0;
    let mut vec = [0.0f64; 4];
    assert_eq!(
        unsafe { qmax_perron(g, 1e-10, &mut q, vec.as_mut_ptr(), vec.len()) },
        QmaxStatus::Ok
    );
    assert!(vec.iter().all(|&v| v > 0.0));
    assert!((q - eigs[0]).abs() < 1e-8);
    unsafe { qmax_graph_free(g) };
}

#[test]
fn status_codes_for_bad_input() {
    let mut g: *mut QmaxGraph = std::ptr::null_mut();
    // malformed graph6
    let junk = CString::new("B").unwrap();
    assert_eq!(
        unsafe { qmax_graph_from_graph6(junk.as_ptr(), &mut g) },
        QmaxStatus::ParseError
    );
    // null arguments
    assert_eq!(
        unsafe { qmax_graph_from_graph6(std::ptr::null(), &mut g) },
        QmaxStatus::NullArgument
    );
    let mut q = 0.0;
    assert_eq!(
        unsafe { qmax_qindex(std::ptr::null(), 1e-10, &mut q) },
        QmaxStatus::NullArgument
    );
    // out-of-range family parameters
    assert_eq!(
        unsafe { qmax_graph_family(QmaxFamily::NearFan, 6, 9, 0, &mut g) },
        QmaxStatus::InvalidArgument
    );
    // disconnected graph has no Perron pair: two isolated vertices + edgeless
    let disconnected = CString::new("A?").unwrap();
    let mut h: *mut QmaxGraph = std::ptr::null_mut();
    assert_eq!(
        unsafe { qmax_graph_from_graph6(disconnected.as_ptr(), &mut h) },
        QmaxStatus::Ok
    );
    assert_eq!(
        unsafe { qmax_qindex(h, 1e-10, &mut q) },
        QmaxStatus::Disconnected
    );
    unsafe { qmax_graph_free(h) };
    // freeing null is a no-op
    unsafe { qmax_graph_free(std::ptr::null_mut()) };
}

#[test]
fn counting_and_theorem_entry_points() {
    let mut count = 0u64;
    assert_eq!(unsafe { qmax_labeled_count(10, &mut count) }, QmaxStatus::Ok);
    assert_eq!(count, 1430);
    assert_eq!(unsafe { qmax_class_count(6, &mut count) }, QmaxStatus::Ok);
    assert_eq!(count, 3);
    let mut holds = 0u8;
    assert_eq!(unsafe { qmax_theorem_check(9, &mut holds) }, QmaxStatus::Ok);
    assert_eq!(holds, 1);
    assert_eq!(
        unsafe { qmax_labeled_count(2, &mut count) },
        QmaxStatus::InvalidArgument
    );
}

#[test]
fn version_string_is_present() {
    let v = qmax_version();
    assert!(!v.is_null());
    let s = unsafe { std::ffi::CStr::from_ptr(v) }.to_str().unwrap();
    assert_eq!(s, env!("CARGO_PKG_VERSION"));
}
