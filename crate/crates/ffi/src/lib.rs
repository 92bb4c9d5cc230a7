//! C ABI for `langford_forge`.
//!
//! Objects cross the boundary as opaque handles that the caller releases
//! with the matching `*_free` function. Every fallible call returns an
//! [`LfStatus`]; on failure [`lf_last_error_message`] describes the cause.
//! Strings returned by the library are released with [`lf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use langford_forge::census::{self, CensusError, Guards};
use langford_forge::cli::CliError;
use langford_forge::construct::{self, ConstructError, LoopChoice, LoopPolicy};
use langford_forge::digraphs::Digraph;
use langford_forge::sequences::{self, Sequence, SequenceError};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidSequence = 2,
    InvalidArgument = 3,
    TooLarge = 4,
    BufferTooSmall = 5,
    Internal = 6,
}

/// A validated Langford, Skolem or extended Skolem sequence.
pub struct LfSequence {
    inner: Sequence,
}

/// A digraph on vertices `1..=order`.
pub struct LfDigraph {
    inner: Digraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: LfStatus, msg: impl Into<String>) -> LfStatus {
    set_error(msg);
    status
}

fn status_of_census(e: &CensusError) -> LfStatus {
    match e {
        CensusError::TooLarge { .. } => LfStatus::TooLarge,
        CensusError::Construct(ConstructError::Sequence(_)) => LfStatus::InvalidSequence,
        _ => LfStatus::InvalidArgument,
    }
}

fn sequence_error(e: SequenceError) -> LfStatus {
    fail(LfStatus::InvalidSequence, e.to_string())
}

/// Runs `f`, turning a panic into [`LfStatus::Internal`].
fn guarded(f: impl FnOnce() -> LfStatus) -> LfStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(LfStatus::Internal, "internal error"))
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(LfStatus::NullPointer, concat!(stringify!($p), " is null"));
        })+
    };
}

fn put<T>(out: *mut *mut T, value: T) -> LfStatus {
    // SAFETY: callers check `out` for null first.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    LfStatus::Ok
}

fn build_sequence(values: &[u32], defect: u32) -> Result<Sequence, SequenceError> {
    if values.len().is_multiple_of(2) {
        sequences::validate_langford(values, defect).map(Sequence::Langford)
    } else if defect <= 1 {
        sequences::validate_extended(values).map(Sequence::Extended)
    } else {
        Err(SequenceError::BadDefect)
    }
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses comma-separated symbols. Even length is read as a Langford
/// sequence of the given defect (1 for Skolem); odd length as an extended
/// Skolem sequence, for which `defect` must be 0 or 1.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_sequence_parse(
    text: *const c_char,
    defect: u32,
    out: *mut *mut LfSequence,
) -> LfStatus {
    non_null!(text, out);
    guarded(|| {
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(LfStatus::InvalidSequence, "text is not UTF-8");
        };
        match sequences::parse_symbols(text).and_then(|v| build_sequence(&v, defect)) {
            Ok(s) => put(out, LfSequence { inner: s }),
            Err(e) => sequence_error(e),
        }
    })
}

/// Same as [`lf_sequence_parse`] from an array of symbols.
///
/// # Safety
/// `values` must point to `len` readable integers and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn lf_sequence_from_values(
    values: *const u32,
    len: usize,
    defect: u32,
    out: *mut *mut LfSequence,
) -> LfStatus {
    non_null!(values, out);
    guarded(|| {
        let values = std::slice::from_raw_parts(values, len);
        match build_sequence(values, defect) {
            Ok(s) => put(out, LfSequence { inner: s }),
            Err(e) => sequence_error(e),
        }
    })
}

/// # Safety
/// `seq` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lf_sequence_free(seq: *mut LfSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Copies the symbols into `buf`. `len_out` receives the sequence length;
/// when `cap` is smaller nothing is copied and `BufferTooSmall` is returned.
///
/// # Safety
/// `seq` must be a live handle, `buf` writable for `cap` integers (may be
/// null when `cap` is 0) and `len_out` writable.
#[no_mangle]
pub unsafe extern "C" fn lf_sequence_values(
    seq: *const LfSequence,
    buf: *mut u32,
    cap: usize,
    len_out: *mut usize,
) -> LfStatus {
    non_null!(seq, len_out);
    let values = (*seq).inner.values();
    *len_out = values.len();
    if cap < values.len() {
        return fail(LfStatus::BufferTooSmall, "buffer too small");
    }
    non_null!(buf);
    ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    LfStatus::Ok
}

/// Number of distinct nonzero symbols.
///
/// # Safety
/// `seq` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lf_sequence_order(seq: *const LfSequence, out: *mut usize) -> LfStatus {
    non_null!(seq, out);
    *out = match &(*seq).inner {
        Sequence::Langford(s) => s.order(),
        Sequence::Extended(s) => s.order(),
    };
    LfStatus::Ok
}

/// Smallest symbol of a Langford sequence; 0 for extended sequences.
///
/// # Safety
/// `seq` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lf_sequence_defect(seq: *const LfSequence, out: *mut u32) -> LfStatus {
    non_null!(seq, out);
    *out = match &(*seq).inner {
        Sequence::Langford(s) => s.defect(),
        Sequence::Extended(_) => 0,
    };
    LfStatus::Ok
}

/// One-based position of the zero; 0 for Langford sequences.
///
/// # Safety
/// `seq` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lf_sequence_zero_pos(seq: *const LfSequence, out: *mut usize) -> LfStatus {
    non_null!(seq, out);
    *out = match &(*seq).inner {
        Sequence::Langford(_) => 0,
        Sequence::Extended(s) => s.zero_pos(),
    };
    LfStatus::Ok
}

/// Comma text of the sequence; release with [`lf_string_free`].
///
/// # Safety
/// `seq` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lf_sequence_to_text(
    seq: *const LfSequence,
    out: *mut *mut c_char,
) -> LfStatus {
    non_null!(seq, out);
    let text = CString::new((*seq).inner.to_string()).expect("digits and commas");
    *out = text.into_raw();
    LfStatus::Ok
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Expands `seq` with images taken from `RS_n` in canonical order:
/// `indices[k]` is the image of the `k`-th non-loop arc of the sequence's
/// matching, arcs in lexicographic order. For extended input `loop_choice`
/// (1 or 2) picks the loop image; it must be 0 for Langford input.
///
/// # Safety
/// `seq` must be a live handle, `indices` readable for `count` entries (may
/// be null when `count` is 0) and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lf_expand(
    seq: *const LfSequence,
    n: usize,
    indices: *const usize,
    count: usize,
    loop_choice: u8,
    out: *mut *mut LfSequence,
) -> LfStatus {
    non_null!(seq, out);
    if count > 0 {
        non_null!(indices);
    }
    guarded(|| {
        let idx: &[usize] = if count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(indices, count)
        };
        let family = match n % 2 {
            0 => return fail(LfStatus::InvalidArgument, format!("n = {n} is even")),
            _ => match census::rotation_family(n, &Guards::default()) {
                Ok(f) => f,
                Err(e) => return fail(status_of_census(&e), e.to_string()),
            },
        };
        let result = match &(*seq).inner {
            Sequence::Langford(s) => {
                if loop_choice != 0 {
                    return fail(
                        LfStatus::InvalidArgument,
                        "loop_choice must be 0 for Langford input",
                    );
                }
                let base = construct::seq_to_matching(s).to_digraph();
                construct::indexed_assignment(base, &family, idx, None)
                    .and_then(|h| construct::expand_langford(s, n, &h))
                    .map(Sequence::Langford)
            }
            Sequence::Extended(s) => {
                let Some(choice) = LoopChoice::from_number(loop_choice) else {
                    return fail(LfStatus::InvalidArgument, "loop_choice must be 1 or 2");
                };
                let base = construct::seq_to_loop_matching(s).to_digraph();
                choice
                    .digraph(n)
                    .map_err(ConstructError::from)
                    .and_then(|r| construct::indexed_assignment(base, &family, idx, Some(&r)))
                    .and_then(|h| construct::expand_extended(s, n, &h, LoopPolicy::Canonical))
                    .map(Sequence::Extended)
            }
        };
        match result {
            Ok(s) => put(out, LfSequence { inner: s }),
            Err(e) => fail(LfStatus::InvalidArgument, CliError::from(e).to_string()),
        }
    })
}

/// `|S_n|`, which equals `|RS_n|`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lf_sn_count(n: usize, out: *mut u64) -> LfStatus {
    non_null!(out);
    guarded(|| match census::rotation_family(n, &Guards::default()) {
        Ok(f) => {
            *out = f.len() as u64;
            LfStatus::Ok
        }
        Err(e) => fail(status_of_census(&e), e.to_string()),
    })
}

/// Member `index` of `RS_n` in canonical order.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lf_rsn_member(
    n: usize,
    index: usize,
    out: *mut *mut LfDigraph,
) -> LfStatus {
    non_null!(out);
    guarded(|| match census::rotation_family(n, &Guards::default()) {
        Ok(f) => match f.get(index) {
            Some(r) => put(
                out,
                LfDigraph {
                    inner: r.digraph().clone(),
                },
            ),
            None => fail(
                LfStatus::InvalidArgument,
                format!("index {index} out of range, RS_{n} has {} members", f.len()),
            ),
        },
        Err(e) => fail(status_of_census(&e), e.to_string()),
    })
}

/// Loop-plus-digons rotation `1` or `2` of the canonically labeled `C_n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lf_cycle_rotation(
    n: usize,
    choice: u8,
    out: *mut *mut LfDigraph,
) -> LfStatus {
    non_null!(out);
    let Some(c) = LoopChoice::from_number(choice) else {
        return fail(LfStatus::InvalidArgument, "choice must be 1 or 2");
    };
    guarded(|| match c.digraph(n) {
        Ok(g) => put(out, LfDigraph { inner: g }),
        Err(e) => fail(LfStatus::InvalidArgument, e.to_string()),
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lf_digraph_free(g: *mut LfDigraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lf_digraph_order(g: *const LfDigraph, out: *mut usize) -> LfStatus {
    non_null!(g, out);
    *out = (*g).inner.order();
    LfStatus::Ok
}

/// Writes arcs as `(u, v)` pairs into `buf` (two entries per arc), in
/// lexicographic order. `arcs_out` receives the arc count; when `cap` (in
/// entries) is below twice that, nothing is copied and `BufferTooSmall` is
/// returned.
///
/// # Safety
/// `g` must be a live handle, `buf` writable for `cap` entries (may be null
/// when `cap` is 0) and `arcs_out` writable.
#[no_mangle]
pub unsafe extern "C" fn lf_digraph_arcs(
    g: *const LfDigraph,
    buf: *mut usize,
    cap: usize,
    arcs_out: *mut usize,
) -> LfStatus {
    non_null!(g, arcs_out);
    let arcs: Vec<usize> = (*g).inner.arcs().flat_map(|(u, v)| [u, v]).collect();
    *arcs_out = arcs.len() / 2;
    if cap < arcs.len() {
        return fail(LfStatus::BufferTooSmall, "buffer too small");
    }
    if !arcs.is_empty() {
        non_null!(buf);
        ptr::copy_nonoverlapping(arcs.as_ptr(), buf, arcs.len());
    }
    LfStatus::Ok
}

/// Whether a Langford sequence of order `m` and defect `d` exists.
#[no_mangle]
pub extern "C" fn lf_langford_exists(m: u64, d: u64) -> bool {
    sequences::langford_exists(m, d)
}

/// Number of Langford sequences of order `m` and defect `d` (reversals
/// counted separately), as a decimal string released with
/// [`lf_string_free`]. Refuses orders above 16.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lf_count_langford(m: usize, d: u32, out: *mut *mut c_char) -> LfStatus {
    non_null!(out);
    guarded(|| match census::count_langford(m, d, &Guards::default()) {
        Ok(c) => {
            *out = CString::new(c.to_string()).expect("digits").into_raw();
            LfStatus::Ok
        }
        Err(e) => fail(status_of_census(&e), e.to_string()),
    })
}
