use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use netlab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = netlab_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

struct Space(*mut NetlabSpace);

impl Space {
    fn parse(text: &str) -> Self {
        let mut p = ptr::null_mut();
        assert_eq!(
            unsafe { netlab_space_parse(c(text).as_ptr(), &mut p) },
            NetlabStatus::Ok
        );
        Space(p)
    }
}

impl Drop for Space {
    fn drop(&mut self) {
        unsafe { netlab_space_free(self.0) }
    }
}

const SIERPINSKI: &str = "space 2\n-\n0\n0,1\n";

#[test]
fn space_queries() {
    let s = Space::parse(SIERPINSKI);
    unsafe {
        let mut n = 0;
        assert_eq!(netlab_space_carrier_size(s.0, &mut n), NetlabStatus::Ok);
        assert_eq!(n, 2);
        let mut b = true;
        assert_eq!(netlab_space_is_open(s.0, 0b10, &mut b), NetlabStatus::Ok);
        assert!(!b);
        let mut m = 0u64;
        assert_eq!(netlab_space_minimal_open(s.0, 1, &mut m), NetlabStatus::Ok);
        assert_eq!(m, 0b11);
        assert_eq!(netlab_space_closure(s.0, 0b01, &mut m), NetlabStatus::Ok);
        assert_eq!(m, 0b11);
        assert_eq!(netlab_space_is_hausdorff(s.0, &mut b), NetlabStatus::Ok);
        assert!(!b);
        assert_eq!(netlab_space_is_sequential(s.0, &mut b), NetlabStatus::Ok);
        assert!(b);
        assert_eq!(
            netlab_seq_limits(s.0, c("[1|0]").as_ptr(), &mut m),
            NetlabStatus::Ok
        );
        assert_eq!(m, 0b11);

        let mut text = ptr::null_mut();
        assert_eq!(netlab_space_format(s.0, &mut text), NetlabStatus::Ok);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), SIERPINSKI);
        netlab_string_free(text);
    }
}

#[test]
fn nets_and_filters() {
    let s = Space::parse(SIERPINSKI);
    unsafe {
        let mut net = ptr::null_mut();
        let text = c("net sequence omega\nprefix: -\ncycle: 0,1\n");
        assert_eq!(netlab_net_parse(text.as_ptr(), &mut net), NetlabStatus::Ok);
        let mut m = 0u64;
        assert_eq!(netlab_net_limits(net, s.0, &mut m), NetlabStatus::Ok);
        assert_eq!(m, 0b10);
        assert_eq!(
            netlab_net_cluster_points(net, s.0, &mut m),
            NetlabStatus::Ok
        );
        assert_eq!(m, 0b11);
        netlab_net_free(net);

        let mut f = ptr::null_mut();
        assert_eq!(
            netlab_filter_parse(c("filter 2\n0,1\n").as_ptr(), &mut f),
            NetlabStatus::Ok
        );
        assert_eq!(netlab_filter_limits(f, s.0, &mut m), NetlabStatus::Ok);
        assert_eq!(m, 0b10);
        let mut point = 9;
        assert_eq!(
            netlab_filter_ultrafilter_point(f, &mut point),
            NetlabStatus::InvalidInput
        );
        let mut u = ptr::null_mut();
        assert_eq!(netlab_filter_refine(f, &mut u), NetlabStatus::Ok);
        assert_eq!(
            netlab_filter_ultrafilter_point(u, &mut point),
            NetlabStatus::Ok
        );
        assert_eq!(point, 0);
        assert_eq!(netlab_filter_limits(u, s.0, &mut m), NetlabStatus::Ok);
        assert_eq!(m, 0b11);
        netlab_filter_free(u);
        netlab_filter_free(f);
    }
}

#[test]
fn counts_and_digits() {
    let mut n = 0;
    unsafe {
        assert_eq!(netlab_enumerate_count(3, &mut n), NetlabStatus::Ok);
        assert_eq!(n, 29);
        assert_eq!(netlab_enumerate_count(5, &mut n), NetlabStatus::TooLarge);
        let mut d = 0u8;
        assert_eq!(
            netlab_binary_digit(c("5/16").as_ptr(), 1, &mut d),
            NetlabStatus::Ok
        );
        assert_eq!(d, 1);
        assert_eq!(
            netlab_binary_digit(c("3/2").as_ptr(), 0, &mut d),
            NetlabStatus::InvalidInput
        );
        assert_eq!(
            netlab_binary_digit(c("half").as_ptr(), 0, &mut d),
            NetlabStatus::Parse
        );
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            netlab_space_parse(c("space 2\n-\n1\n").as_ptr(), &mut p),
            NetlabStatus::Parse
        );
        assert!(p.is_null());
        assert!(last_error().contains("line"));
        assert_eq!(
            netlab_space_parse(ptr::null(), &mut p),
            NetlabStatus::NullPointer
        );
        assert_eq!(
            netlab_space_parse(c"\xff".as_ptr(), &mut p),
            NetlabStatus::InvalidUtf8
        );

        let s = Space::parse(SIERPINSKI);
        let mut b = false;
        assert_eq!(
            netlab_space_is_open(s.0, 0b100, &mut b),
            NetlabStatus::CarrierMismatch
        );
        assert_eq!(
            netlab_space_is_open(s.0, 0b1, ptr::null_mut()),
            NetlabStatus::NullPointer
        );
        assert_eq!(netlab_space_is_open(s.0, 0b1, &mut b), NetlabStatus::Ok);
        assert!(netlab_last_error().is_null());

        netlab_space_free(ptr::null_mut());
        netlab_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/netlab.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "netlab_space_parse",
        "netlab_filter_refine",
        "netlab_last_error",
        "netlab_binary_digit",
    ] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c"])
        .arg(&header)
        .output()
    else {
        eprintln!("no C compiler; skipping syntax check");
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
