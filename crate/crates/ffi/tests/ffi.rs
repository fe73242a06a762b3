use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use probedf_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(pdf_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn graph(n: usize, edges: &[(usize, usize)]) -> *mut PdfGraph {
    let flat: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { pdf_graph_new(n, flat.as_ptr(), edges.len(), &mut g) },
        PdfStatus::Ok
    );
    g
}

fn recognize(g: *const PdfGraph) -> *mut PdfCertificate {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { pdf_recognize(g, &mut c) }, PdfStatus::Ok);
    c
}

const DIAMOND: [(usize, usize); 5] = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)];

#[test]
fn diamond_round_trip() {
    unsafe {
        let g = graph(4, &DIAMOND);
        assert_eq!(pdf_graph_vertex_count(g), 4);
        assert_eq!(pdf_graph_edge_count(g), 5);
        let c = recognize(g);
        assert_eq!(pdf_certificate_is_member(c), 1);
        assert_eq!(pdf_certificate_indicator(c), 0);

        let mut len = 0;
        assert_eq!(
            pdf_certificate_vertices(c, ptr::null_mut(), 0, &mut len),
            PdfStatus::BufferTooSmall
        );
        assert_eq!(len, 2);
        let mut buf = [0usize; 2];
        assert_eq!(
            pdf_certificate_vertices(c, buf.as_mut_ptr(), 2, &mut len),
            PdfStatus::Ok
        );
        assert_eq!(buf, [0, 3]);
        let mut pairs = [0usize; 4];
        assert_eq!(
            pdf_certificate_completion(c, pairs.as_mut_ptr(), 4, &mut len),
            PdfStatus::Ok
        );
        assert_eq!(&pairs[..len], &[0, 3]);

        let mut json = ptr::null_mut();
        assert_eq!(pdf_certificate_to_json(c, &mut json), PdfStatus::Ok);
        assert_eq!(
            CStr::from_ptr(json).to_str().unwrap(),
            r#"{"result":"yes","probes":[1,2],"nonprobes":[0,3],"completion":[[0,3]]}"#
        );
        let mut back = ptr::null_mut();
        assert_eq!(pdf_certificate_from_json(json, &mut back), PdfStatus::Ok);
        let mut valid = -1;
        assert_eq!(pdf_verify(g, back, &mut valid), PdfStatus::Ok);
        assert_eq!(valid, 1);

        pdf_string_free(json);
        pdf_certificate_free(back);
        pdf_certificate_free(c);
        pdf_graph_free(g);
    }
}

#[test]
fn gem_gives_a_negative_certificate() {
    unsafe {
        let text = CString::new("5 7\n0 1\n1 2\n2 3\n4 0\n4 1\n4 2\n4 3\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(
            pdf_graph_parse(text.as_ptr(), PdfFormat::Edgelist, &mut g),
            PdfStatus::Ok
        );
        let c = recognize(g);
        assert_eq!(pdf_certificate_is_member(c), 0);
        assert_eq!(pdf_certificate_indicator(c), 1);
        let mut buf = [0usize; 8];
        let mut len = 0;
        assert_eq!(
            pdf_certificate_vertices(c, buf.as_mut_ptr(), 8, &mut len),
            PdfStatus::Ok
        );
        assert_eq!(len, 5);
        assert_eq!(buf[0], 4, "the universal vertex comes first");
        assert_eq!(
            pdf_certificate_completion(c, buf.as_mut_ptr(), 8, &mut len),
            PdfStatus::Ok
        );
        assert_eq!(len, 0);
        let mut valid = 0;
        assert_eq!(pdf_verify(g, c, &mut valid), PdfStatus::Ok);
        assert_eq!(valid, 1);
        pdf_certificate_free(c);
        pdf_graph_free(g);
    }
}

#[test]
fn errors_are_reported_not_raised() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            pdf_graph_new(3, [0usize, 5].as_ptr(), 1, &mut g),
            PdfStatus::InvalidArgument
        );
        assert!(g.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(
            pdf_graph_new(3, [1usize, 1].as_ptr(), 1, &mut g),
            PdfStatus::InvalidArgument
        );
        assert_eq!(pdf_graph_new(3, ptr::null(), 2, &mut g), PdfStatus::NullPointer);
        assert_eq!(
            pdf_graph_new(3, ptr::null(), 0, ptr::null_mut()),
            PdfStatus::NullPointer
        );

        let bad = CString::new("2 1\n0 zz\n").unwrap();
        assert_eq!(
            pdf_graph_parse(bad.as_ptr(), PdfFormat::Edgelist, &mut g),
            PdfStatus::Parse
        );
        assert!(last_error().contains("line 2"), "{}", last_error());
        assert_eq!(
            pdf_graph_parse(ptr::null(), PdfFormat::Dimacs, &mut g),
            PdfStatus::NullPointer
        );

        let junk = CString::new(r#"{"result":"yes"}"#).unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(pdf_certificate_from_json(junk.as_ptr(), &mut c), PdfStatus::Parse);
        assert!(c.is_null());

        assert_eq!(pdf_recognize(ptr::null(), &mut c), PdfStatus::NullPointer);
        assert_eq!(pdf_certificate_is_member(ptr::null()), 0);
        assert_eq!(pdf_graph_vertex_count(ptr::null()), 0);
        let mut len = 0;
        assert_eq!(
            pdf_certificate_vertices(ptr::null(), ptr::null_mut(), 0, &mut len),
            PdfStatus::NullPointer
        );
        pdf_graph_free(ptr::null_mut());
        pdf_certificate_free(ptr::null_mut());
        pdf_string_free(ptr::null_mut());
    }
}

#[test]
fn tampered_certificate_is_invalid() {
    unsafe {
        let g = graph(4, &DIAMOND);
        let lie = CString::new(r#"{"result":"yes","probes":[0,1,2,3],"nonprobes":[],"completion":[]}"#).unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(pdf_certificate_from_json(lie.as_ptr(), &mut c), PdfStatus::Ok);
        let mut valid = -1;
        assert_eq!(pdf_verify(g, c, &mut valid), PdfStatus::Ok);
        assert_eq!(valid, 0);
        pdf_certificate_free(c);
        pdf_graph_free(g);
    }
}

#[test]
fn empty_graph() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(pdf_graph_new(0, ptr::null(), 0, &mut g), PdfStatus::Ok);
        let c = recognize(g);
        assert_eq!(pdf_certificate_is_member(c), 1);
        let mut len = 7;
        assert_eq!(pdf_certificate_vertices(c, ptr::null_mut(), 0, &mut len), PdfStatus::Ok);
        assert_eq!(len, 0);
        pdf_certificate_free(c);
        pdf_graph_free(g);
    }
}

fn target_dir() -> PathBuf {
    // the test binary sits in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_declares_the_exported_api() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/probedf.h")).unwrap();
    for name in [
        "PDF_STATUS_OK = 0",
        "PDF_STATUS_BUFFER_TOO_SMALL = 4",
        "typedef struct PdfGraph PdfGraph",
        "pdf_graph_new(",
        "pdf_graph_parse(",
        "pdf_recognize(",
        "pdf_certificate_vertices(",
        "pdf_certificate_to_json(",
        "pdf_verify(",
        "pdf_last_error(",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = target_dir().join("libprobedf_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include "probedf.h"
int main(void) {
    size_t edges[] = {0, 1, 0, 2, 1, 2, 1, 3, 2, 3};
    PdfGraph *g = NULL;
    PdfCertificate *c = NULL;
    if (pdf_graph_new(4, edges, 5, &g) != PDF_STATUS_OK) return 10;
    if (pdf_recognize(g, &c) != PDF_STATUS_OK) return 11;
    if (!pdf_certificate_is_member(c)) return 12;
    char *json = NULL;
    if (pdf_certificate_to_json(c, &json) != PDF_STATUS_OK) return 13;
    puts(json);
    pdf_string_free(json);
    pdf_certificate_free(c);
    pdf_graph_free(g);
    return 0;
}
"#,
    )
    .unwrap();
    let exe = dir.join("smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(Path::new(env!("CARGO_MANIFEST_DIR")).join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    let status = match status {
        Ok(s) => s,
        Err(e) => panic!("C compiler '{cc}' unavailable: {e}"),
    };
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"result":"yes","probes":[1,2],"nonprobes":[0,3],"completion":[[0,3]]}"#
    );
}
