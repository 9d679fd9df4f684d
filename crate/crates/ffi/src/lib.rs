//! C ABI for netlab.
//!
//! Spaces, nets and filters are opaque handles created by the `*_parse`
//! functions (same text formats as the `netlab` binary) and released with
//! the matching `*_free`. Point sets cross the boundary as `uint64_t`
//! bitmasks, bit `i` for point `i`. Every call returns a [`NetlabStatus`];
//! on failure [`netlab_last_error`] describes what went wrong.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use netlab::filters::{filter_limits, ultrafilter_refine, Filter};
use netlab::finite_top::enumerate_topologies;
use netlab::io::{format_space, parse_filter, parse_net, parse_sequence, parse_space};
use netlab::nets::{cluster_points, net_limits, Net};
use netlab::sequences::{is_sequential, seq_limits, EpSequence};
use netlab::symbolic::binary_digit;
use netlab::{Error, FiniteSpace, PointSet};
use num_rational::BigRational;

/// A finite topological space.
pub struct NetlabSpace(FiniteSpace);

/// A net over a finite directed set, or an eventually periodic sequence.
pub struct NetlabNet(Net);

/// A filter on a finite carrier.
pub struct NetlabFilter(Filter);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NetlabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// A point or set does not fit the carrier it was used with.
    CarrierMismatch = 4,
    TooLarge = 5,
    InvalidInput = 6,
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(NetlabStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => NetlabStatus::Parse,
            Error::CarrierMismatch { .. } | Error::PointOutOfRange { .. } => {
                NetlabStatus::CarrierMismatch
            }
            Error::CarrierTooLarge { .. } | Error::TooLarge { .. } => NetlabStatus::TooLarge,
            _ => NetlabStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(NetlabStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, recording any error or panic for [`netlab_last_error`].
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> NetlabStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => NetlabStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            NetlabStatus::Panic
        }
    }
}

unsafe fn utf8<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(NetlabStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn mask(space: &FiniteSpace, bits: u64) -> Result<PointSet, Failure> {
    Ok(PointSet::from_bits(space.carrier_size(), bits)?)
}

/// The message for the last failed call on this thread, or null. Valid
/// until the next netlab call on the same thread.
#[no_mangle]
pub extern "C" fn netlab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by netlab. Null is ignored.
///
/// # Safety
/// `s` must come from a netlab function that documents an owned string.
#[no_mangle]
pub unsafe extern "C" fn netlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of topologies on `n ≤ 4` points.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn netlab_enumerate_count(n: usize, out: *mut usize) -> NetlabStatus {
    guard(|| put(out, enumerate_topologies(n)?.len()))
}

/// # Safety
/// `text` must be a nul-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn netlab_space_parse(
    text: *const c_char,
    out: *mut *mut NetlabSpace,
) -> NetlabStatus {
    guard(|| {
        let s = parse_space(utf8(text, "space text")?)?;
        put(out, Box::into_raw(Box::new(NetlabSpace(s))))
    })
}

/// # Safety
/// `space` must be null or come from [`netlab_space_parse`], and not be
/// used afterwards.
#[no_mangle]
pub unsafe extern "C" fn netlab_space_free(space: *mut NetlabSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// The space in text form; free it with [`netlab_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_space_format(
    space: *const NetlabSpace,
    out: *mut *mut c_char,
) -> NetlabStatus {
    guard(|| {
        let s = get(space, "space")?;
        let c = CString::new(format_space(&s.0)).expect("formatted spaces contain no nul");
        put(out, c.into_raw())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_space_carrier_size(
    space: *const NetlabSpace,
    out: *mut usize,
) -> NetlabStatus {
    guard(|| put(out, get(space, "space")?.0.carrier_size()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_space_is_open(
    space: *const NetlabSpace,
    set: u64,
    out: *mut bool,
) -> NetlabStatus {
    guard(|| {
        let s = &get(space, "space")?.0;
        put(out, s.is_open(&mask(s, set)?)?)
    })
}

/// The smallest open set containing `x`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_space_minimal_open(
    space: *const NetlabSpace,
    x: usize,
    out: *mut u64,
) -> NetlabStatus {
    guard(|| put(out, get(space, "space")?.0.minimal_open(x)?.bits()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_space_closure(
    space: *const NetlabSpace,
    set: u64,
    out: *mut u64,
) -> NetlabStatus {
    guard(|| {
        let s = &get(space, "space")?.0;
        put(out, s.closure(&mask(s, set)?)?.bits())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_space_is_hausdorff(
    space: *const NetlabSpace,
    out: *mut bool,
) -> NetlabStatus {
    guard(|| put(out, get(space, "space")?.0.is_hausdorff()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_space_is_sequential(
    space: *const NetlabSpace,
    out: *mut bool,
) -> NetlabStatus {
    guard(|| put(out, is_sequential(&get(space, "space")?.0)?))
}

/// Limits of a sequence literal such as `[0,1|2]`.
///
/// # Safety
/// Pointers must be valid and `literal` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn netlab_seq_limits(
    space: *const NetlabSpace,
    literal: *const c_char,
    out: *mut u64,
) -> NetlabStatus {
    guard(|| {
        let s = &get(space, "space")?.0;
        let seq: EpSequence = parse_sequence(utf8(literal, "sequence")?)?;
        put(out, seq_limits(&seq, s)?.bits())
    })
}

/// # Safety
/// `text` must be a nul-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn netlab_net_parse(
    text: *const c_char,
    out: *mut *mut NetlabNet,
) -> NetlabStatus {
    guard(|| {
        let n = parse_net(utf8(text, "net text")?)?;
        put(out, Box::into_raw(Box::new(NetlabNet(n))))
    })
}

/// # Safety
/// `net` must be null or come from [`netlab_net_parse`], and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn netlab_net_free(net: *mut NetlabNet) {
    if !net.is_null() {
        drop(Box::from_raw(net));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_net_limits(
    net: *const NetlabNet,
    space: *const NetlabSpace,
    out: *mut u64,
) -> NetlabStatus {
    guard(|| {
        put(
            out,
            net_limits(&get(net, "net")?.0, &get(space, "space")?.0)?.bits(),
        )
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_net_cluster_points(
    net: *const NetlabNet,
    space: *const NetlabSpace,
    out: *mut u64,
) -> NetlabStatus {
    guard(|| {
        put(
            out,
            cluster_points(&get(net, "net")?.0, &get(space, "space")?.0)?.bits(),
        )
    })
}

/// # Safety
/// `text` must be a nul-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn netlab_filter_parse(
    text: *const c_char,
    out: *mut *mut NetlabFilter,
) -> NetlabStatus {
    guard(|| {
        let f = parse_filter(utf8(text, "filter text")?)?;
        put(out, Box::into_raw(Box::new(NetlabFilter(f))))
    })
}

/// # Safety
/// `filter` must be null or come from a netlab filter constructor, and
/// not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn netlab_filter_free(filter: *mut NetlabFilter) {
    if !filter.is_null() {
        drop(Box::from_raw(filter));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_filter_limits(
    filter: *const NetlabFilter,
    space: *const NetlabSpace,
    out: *mut u64,
) -> NetlabStatus {
    guard(|| {
        put(
            out,
            filter_limits(&get(filter, "filter")?.0, &get(space, "space")?.0)?.bits(),
        )
    })
}

/// An ultrafilter containing `filter`, as a new handle.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_filter_refine(
    filter: *const NetlabFilter,
    out: *mut *mut NetlabFilter,
) -> NetlabStatus {
    guard(|| {
        let u = ultrafilter_refine(&get(filter, "filter")?.0);
        put(
            out,
            Box::into_raw(Box::new(NetlabFilter(u.filter().clone()))),
        )
    })
}

/// The point an ultrafilter is principal at.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn netlab_filter_ultrafilter_point(
    filter: *const NetlabFilter,
    out: *mut usize,
) -> NetlabStatus {
    guard(|| {
        let f = &get(filter, "filter")?.0;
        if !f.is_ultrafilter() {
            return Err(Failure(
                NetlabStatus::InvalidInput,
                "not an ultrafilter".into(),
            ));
        }
        put(
            out,
            f.kernel()
                .first()
                .expect("ultrafilters have a one-point kernel"),
        )
    })
}

/// Digit `n` after the binary point of the rational `p/q` in `[0, 1)`.
///
/// # Safety
/// `rational` must be nul-terminated and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn netlab_binary_digit(
    rational: *const c_char,
    n: u32,
    out: *mut u8,
) -> NetlabStatus {
    guard(|| {
        let s = utf8(rational, "rational")?;
        let r: BigRational = s
            .trim()
            .parse()
            .map_err(|_| Failure(NetlabStatus::Parse, format!("`{s}` is not a rational p/q")))?;
        put(out, binary_digit(&r, n)?)
    })
}
