//! C ABI for `lcs-core`.
//!
//! Sequences and filled table pairs are handed out as opaque heap handles
//! that the caller releases with the matching `*_free` function. Every
//! fallible call returns an [`LcsStatus`]; the message of the most recent
//! failure on the calling thread is available from [`lcs_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lcs_core::{
    io::generate_random, lcs_fill_serial as fill_serial, similarity_percent, traceback, BacktrackTable, DpTable,
    Error, ParallelConfig, Sequence, WavefrontFiller,
};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidConfig = 2,
    Capacity = 3,
    IndexOutOfRange = 4,
    Alphabet = 5,
    BufferTooSmall = 6,
    InvalidInput = 7,
    Internal = 99,
}

/// Opaque symbol string.
pub struct LcsSequence {
    inner: Sequence,
}

/// Opaque pair of filled tables plus the parent sequence needed to trace back.
pub struct LcsAlignment {
    parent: Sequence,
    child_len: usize,
    dp: DpTable,
    bt: BacktrackTable,
    elapsed_seconds: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<Vec<u8>>) {
    let msg = CString::new(msg).unwrap_or_else(|_| CString::from(c"error message contained NUL"));
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> LcsStatus {
    match err {
        Error::Capacity { .. } => LcsStatus::Capacity,
        Error::IndexOutOfRange { .. } => LcsStatus::IndexOutOfRange,
        Error::Alphabet { .. } => LcsStatus::Alphabet,
        Error::Config(_) | Error::EmptyAlphabet | Error::Usage(_) => LcsStatus::InvalidConfig,
        Error::MalformedFasta(_) | Error::Contract(_) | Error::OracleGuard { .. } => {
            LcsStatus::InvalidInput
        }
        Error::Io { .. } | Error::Equivalence { .. } => LcsStatus::Internal,
    }
}

/// Run `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (LcsStatus, String)>) -> LcsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcsStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside lcs library");
            LcsStatus::Internal
        }
    }
}

fn fail(err: Error) -> (LcsStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (LcsStatus, String) {
    (LcsStatus::NullPointer, format!("{what} is NULL"))
}

/// # Safety
/// `data` must be NULL (only when `len` is 0) or point to `len` readable bytes.
unsafe fn bytes<'a>(data: *const u8, len: usize) -> Option<&'a [u8]> {
    if len == 0 {
        Some(&[])
    } else if data.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(data, len))
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lcs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn lcs_status_str(status: LcsStatus) -> *const c_char {
    let s: &'static std::ffi::CStr = match status {
        LcsStatus::Ok => c"ok",
        LcsStatus::NullPointer => c"null pointer argument",
        LcsStatus::InvalidConfig => c"invalid configuration",
        LcsStatus::Capacity => c"tables exceed the memory budget",
        LcsStatus::IndexOutOfRange => c"index out of range",
        LcsStatus::Alphabet => c"symbol outside A, C, G, T",
        LcsStatus::BufferTooSmall => c"output buffer too small",
        LcsStatus::InvalidInput => c"invalid input",
        LcsStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Hardware concurrency as seen by the library.
#[no_mangle]
pub extern "C" fn lcs_default_workers() -> usize {
    lcs_core::parallel::default_workers()
}

/// Copy `len` bytes into a new sequence handle.
///
/// # Safety
/// `data` must point to `len` readable bytes (it may be NULL when `len` is 0)
/// and `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lcs_sequence_new(
    data: *const u8,
    len: usize,
    out: *mut *mut LcsSequence,
) -> LcsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let b = bytes(data, len).ok_or_else(|| null("data"))?;
        let seq = Box::new(LcsSequence { inner: Sequence::from(b) });
        *out = Box::into_raw(seq);
        Ok(())
    })
}

/// Seeded random sequence over `alphabet`.
///
/// # Safety
/// `alphabet` must point to `alphabet_len` readable bytes and `out` must be
/// a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lcs_sequence_generate(
    len: usize,
    alphabet: *const u8,
    alphabet_len: usize,
    seed: u64,
    out: *mut *mut LcsSequence,
) -> LcsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let alpha = bytes(alphabet, alphabet_len).ok_or_else(|| null("alphabet"))?;
        let inner = generate_random(len, alpha, seed).map_err(fail)?;
        *out = Box::into_raw(Box::new(LcsSequence { inner }));
        Ok(())
    })
}

/// # Safety
/// `seq` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcs_sequence_len(seq: *const LcsSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.inner.len())
}

/// Pointer to the sequence bytes, valid while the handle lives.
///
/// # Safety
/// `seq` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcs_sequence_data(seq: *const LcsSequence) -> *const u8 {
    seq.as_ref().map_or(ptr::null(), |s| s.inner.as_ptr())
}

/// # Safety
/// `seq` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lcs_sequence_validate_dna(seq: *const LcsSequence) -> LcsStatus {
    guard(|| {
        let s = seq.as_ref().ok_or_else(|| null("seq"))?;
        s.inner.validate_dna().map_err(fail)
    })
}

/// # Safety
/// `seq` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lcs_sequence_free(seq: *mut LcsSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

fn alignment(
    parent: &Sequence,
    child: &Sequence,
    filled: Result<(DpTable, BacktrackTable, f64), Error>,
) -> Result<Box<LcsAlignment>, (LcsStatus, String)> {
    let (dp, bt, elapsed_seconds) = filled.map_err(fail)?;
    Ok(Box::new(LcsAlignment {
        parent: parent.clone(),
        child_len: child.len(),
        dp,
        bt,
        elapsed_seconds,
    }))
}

/// Fill the tables with the parallel wavefront.
///
/// `workers` and `block_size` must both be at least 1.
///
/// # Safety
/// `parent` and `child` must be live sequence handles and `out` a valid
/// pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn lcs_fill(
    parent: *const LcsSequence,
    child: *const LcsSequence,
    workers: usize,
    block_size: usize,
    out: *mut *mut LcsAlignment,
) -> LcsStatus {
    guard(|| {
        let p = parent.as_ref().ok_or_else(|| null("parent"))?;
        let c = child.as_ref().ok_or_else(|| null("child"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let filled = WavefrontFiller::new(ParallelConfig::new(workers, block_size))
            .and_then(|f| f.fill(&p.inner, &c.inner));
        *out = Box::into_raw(alignment(&p.inner, &c.inner, filled)?);
        Ok(())
    })
}

/// Fill the tables serially.
///
/// # Safety
/// As for [`lcs_fill`].
#[no_mangle]
pub unsafe extern "C" fn lcs_fill_serial(
    parent: *const LcsSequence,
    child: *const LcsSequence,
    out: *mut *mut LcsAlignment,
) -> LcsStatus {
    guard(|| {
        let p = parent.as_ref().ok_or_else(|| null("parent"))?;
        let c = child.as_ref().ok_or_else(|| null("child"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let start = std::time::Instant::now();
        let filled = fill_serial(&p.inner, &c.inner)
            .map(|(dp, bt)| (dp, bt, start.elapsed().as_secs_f64()));
        *out = Box::into_raw(alignment(&p.inner, &c.inner, filled)?);
        Ok(())
    })
}

/// `c[M][N]`, or 0 for a NULL handle.
///
/// # Safety
/// `a` must be NULL or a live alignment handle.
#[no_mangle]
pub unsafe extern "C" fn lcs_alignment_length(a: *const LcsAlignment) -> u32 {
    a.as_ref().map_or(0, |a| a.dp.lcs_length())
}

/// Fill wall time in seconds, or -1 for a NULL handle.
///
/// # Safety
/// `a` must be NULL or a live alignment handle.
#[no_mangle]
pub unsafe extern "C" fn lcs_alignment_elapsed_seconds(a: *const LcsAlignment) -> f64 {
    a.as_ref().map_or(-1.0, |a| a.elapsed_seconds)
}

/// LCS length as a percentage of the child length.
///
/// # Safety
/// `a` must be a live alignment handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lcs_alignment_similarity_percent(
    a: *const LcsAlignment,
    out: *mut f64,
) -> LcsStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("alignment"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = similarity_percent(a.dp.lcs_length() as usize, a.parent.len(), a.child_len)
            .map_err(fail)?;
        Ok(())
    })
}

/// Read `c[i][j]`.
///
/// # Safety
/// `a` must be a live alignment handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lcs_alignment_cell(
    a: *const LcsAlignment,
    i: usize,
    j: usize,
    out: *mut u32,
) -> LcsStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("alignment"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        if i >= a.dp.rows() || j >= a.dp.cols() {
            return Err(fail(Error::IndexOutOfRange {
                i,
                j,
                rows: a.dp.rows(),
                cols: a.dp.cols(),
            }));
        }
        *out = a.dp.get(i, j);
        Ok(())
    })
}

/// Trace back from `(i, j)` into `buf`.
///
/// The subsequence length is always stored in `*out_len`. When it exceeds
/// `cap`, nothing is copied and `BUFFER_TOO_SMALL` is returned so the caller
/// can retry with a larger buffer.
///
/// # Safety
/// `a` must be a live alignment handle, `buf` must have room for `cap` bytes
/// (it may be NULL when `cap` is 0), and `out_len` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lcs_alignment_traceback(
    a: *const LcsAlignment,
    i: usize,
    j: usize,
    buf: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> LcsStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("alignment"))?;
        if out_len.is_null() {
            return Err(null("out_len"));
        }
        let z = traceback(&a.bt, &a.parent, i, j).map_err(fail)?;
        *out_len = z.len();
        if z.len() > cap {
            return Err((
                LcsStatus::BufferTooSmall,
                format!("traceback needs {} bytes, buffer holds {cap}", z.len()),
            ));
        }
        if !z.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            ptr::copy_nonoverlapping(z.as_ptr(), buf, z.len());
        }
        Ok(())
    })
}

/// # Safety
/// `a` must be NULL or an alignment handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lcs_alignment_free(a: *mut LcsAlignment) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}
