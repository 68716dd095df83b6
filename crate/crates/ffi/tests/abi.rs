use std::ffi::{CStr, CString};
use std::ptr;

use twodist_ffi::*;

fn parse(text: &str) -> *mut TwodistGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { twodist_graph_parse(c.as_ptr(), &mut g) }, TwodistStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    let p = twodist_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

const PETERSEN: [usize; 30] = [
    0, 1, 1, 2, 2, 3, 3, 4, 4, 0, 0, 5, 1, 6, 2, 7, 3, 8, 4, 9, 5, 7, 7, 9, 9, 6, 6, 8, 8, 5,
];

#[test]
fn petersen_analytics() {
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { twodist_graph_from_edges(10, PETERSEN.as_ptr(), 15, &mut g) },
        TwodistStatus::Ok
    );
    unsafe {
        assert_eq!(twodist_graph_vertex_count(g), 10);
        assert_eq!(twodist_graph_edge_count(g), 15);
        assert_eq!(twodist_graph_max_degree(g), 3);
        let (mut num, mut den) = (0, 0);
        assert_eq!(twodist_mad(g, &mut num, &mut den), TwodistStatus::Ok);
        assert_eq!((num, den), (3, 1));
        let mut girth = 0;
        assert_eq!(twodist_girth(g, &mut girth), TwodistStatus::Ok);
        assert_eq!(girth, 5);
        let mut chi2 = 0;
        assert_eq!(
            twodist_exact_chi2(g, 1_000_000, &mut chi2, ptr::null_mut(), ptr::null_mut()),
            TwodistStatus::Ok
        );
        assert_eq!(chi2, 10);
        twodist_graph_free(g);
    }
}

#[test]
fn forest_girth_is_zero() {
    let g = parse("0 1\n1 2\n");
    let mut girth = 99;
    unsafe {
        assert_eq!(twodist_girth(g, &mut girth), TwodistStatus::Ok);
        twodist_graph_free(g);
    }
    assert_eq!(girth, 0);
}

#[test]
fn color_and_verify_spider() {
    let g = parse("0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n1 7\n2 8\n3 9\n4 10\n5 11\n6 12\n");
    let mut colors = vec![usize::MAX; 13];
    let mut k = 0;
    unsafe {
        assert_eq!(
            twodist_color(g, TwodistRegime::Auto, 0, colors.as_mut_ptr(), colors.len(), &mut k),
            TwodistStatus::Ok
        );
        assert_eq!(k, 8);
        let mut bad = usize::MAX;
        assert_eq!(
            twodist_verify(g, colors.as_ptr(), colors.len(), k, &mut bad),
            TwodistStatus::Ok
        );
        assert_eq!(bad, 0);

        colors[1] = colors[2];
        assert_eq!(
            twodist_verify(g, colors.as_ptr(), colors.len(), k, &mut bad),
            TwodistStatus::InvalidColoring
        );
        assert!(bad >= 1);
        assert!(last_error().contains("share color"));

        let mut short = [0usize; 3];
        assert_eq!(
            twodist_color(g, TwodistRegime::A, 0, short.as_mut_ptr(), short.len(), &mut k),
            TwodistStatus::BufferTooSmall
        );
        twodist_graph_free(g);
    }
}

#[test]
fn error_statuses() {
    let text = CString::new("0 1\n1 zz\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(twodist_graph_parse(text.as_ptr(), &mut g), TwodistStatus::ParseError);
        assert!(g.is_null());
        assert!(last_error().contains("line 2"));
        assert_eq!(twodist_graph_parse(ptr::null(), &mut g), TwodistStatus::NullPointer);
        let (mut num, mut den) = (0, 0);
        assert_eq!(twodist_mad(ptr::null(), &mut num, &mut den), TwodistStatus::NullPointer);
        let looped = [1usize, 1];
        assert_eq!(
            twodist_graph_from_edges(2, looped.as_ptr(), 1, &mut g),
            TwodistStatus::InvalidArgument
        );
        twodist_graph_free(ptr::null_mut());
    }

    let mut pet = ptr::null_mut();
    unsafe {
        twodist_graph_from_edges(10, PETERSEN.as_ptr(), 15, &mut pet);
        let mut colors = [0usize; 10];
        assert_eq!(
            twodist_color(pet, TwodistRegime::Auto, 0, colors.as_mut_ptr(), 10, ptr::null_mut()),
            TwodistStatus::InvalidArgument
        );
        assert_eq!(
            twodist_color(pet, TwodistRegime::A, 0, colors.as_mut_ptr(), 10, ptr::null_mut()),
            TwodistStatus::Irreducible
        );
        twodist_graph_free(pet);
    }

    let c7 = parse("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n");
    let (mut lo, mut hi) = (0, 0);
    unsafe {
        assert_eq!(
            twodist_exact_chi2(c7, 1, ptr::null_mut(), &mut lo, &mut hi),
            TwodistStatus::BudgetExceeded
        );
        twodist_graph_free(c7);
    }
    assert_eq!((lo, hi), (3, 4));
}

#[test]
fn status_messages_are_static() {
    for s in [TwodistStatus::Ok, TwodistStatus::Irreducible, TwodistStatus::Panic] {
        let msg = unsafe { CStr::from_ptr(twodist_status_message(s)) };
        assert!(!msg.to_bytes().is_empty());
    }
}
