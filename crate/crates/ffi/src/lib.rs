//! C ABI over `fibword`.
//!
//! Every function returns an [`FwStatus`]; on failure a message is kept per
//! thread and can be read with [`fw_last_error_message`]. Objects are opaque
//! handles released by their matching `*_free` function. Strings handed out
//! by the library are released with [`fw_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fibword::claims::{run_all_claims, Budget, ClaimResult, ClaimStatus};
use fibword::derived::{fib_word_ab, q_word, y_word};
use fibword::golden::{beatty_phi2_u64, beatty_phi_u64};
use fibword::mechanical::{count_ones_upto, mechanical_prefix};
use fibword::morphism::Morphism;
use fibword::words::Word;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BufferTooSmall = 3,
    Internal = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FwWordKind {
    Morphic = 0,
    Mechanical = 1,
    Y = 2,
    Q = 3,
    FibAb = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FwClaimStatus {
    Verified = 0,
    Refuted = 1,
}

/// Symbol counts of the length-`n` prefix.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FwDensityCounts {
    pub n: u64,
    pub count0: u64,
    pub count1: u64,
}

/// Sweep bounds for [`fw_claims_run`]; start from [`fw_budget_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FwBudget {
    pub sweep: u64,
    pub prefix: u64,
    pub complexity_max: u64,
    pub table_m_max: u64,
    pub word_index_max: u64,
    pub alpha_max: u32,
    pub pow_k_max: u64,
    pub series_k_max: u32,
    pub doubling_n_max: u64,
    pub binet_n_max: u32,
    pub genfunc_n: u64,
    pub zeckendorf_max: u64,
}

/// Opaque finite word.
pub struct FwWord {
    text: CString,
    len: usize,
}

/// Opaque list of claim verdicts.
pub struct FwClaims {
    results: Vec<ClaimResult>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

type Fallible = Result<(), FwStatus>;

fn fail(status: FwStatus, msg: impl Into<String>) -> FwStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> Fallible) -> FwStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FwStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(FwStatus::Internal, "panic inside fibword"),
    }
}

fn invalid(e: impl std::fmt::Display) -> FwStatus {
    fail(FwStatus::InvalidArgument, e.to_string())
}

fn non_null<T>(p: *const T, name: &str) -> Fallible {
    if p.is_null() {
        Err(fail(FwStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

fn to_usize(n: u64) -> Result<usize, FwStatus> {
    usize::try_from(n).map_err(|_| fail(FwStatus::InvalidArgument, "index too large"))
}

fn new_string(s: &str) -> Result<*mut c_char, FwStatus> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(FwStatus::Internal, "string contains NUL"))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn fw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Length in bytes of the last error message on this thread, 0 if none.
#[no_mangle]
pub extern "C" fn fw_last_error_length() -> usize {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(0, |m| m.as_bytes().len()))
}

/// Copies the last error message (NUL-terminated) into `buf`.
///
/// # Safety
/// `buf` must point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn fw_last_error_message(buf: *mut c_char, cap: usize) -> FwStatus {
    if buf.is_null() {
        return FwStatus::NullPointer;
    }
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let bytes = e.as_ref().map_or(&[0u8][..], |m| m.as_bytes_with_nul());
        if cap < bytes.len() {
            return FwStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, bytes.len());
        FwStatus::Ok
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn generate(kind: FwWordKind, n: u64) -> Result<Word, FwStatus> {
    let i = to_usize(n)?;
    let limit = match kind {
        FwWordKind::Morphic | FwWordKind::Mechanical => 100_000_000,
        FwWordKind::Y => 36,
        FwWordKind::Q | FwWordKind::FibAb => 37,
    };
    if i > limit {
        return Err(fail(FwStatus::InvalidArgument, format!("index {n} exceeds {limit}")));
    }
    match kind {
        FwWordKind::Morphic => Morphism::fibonacci().fixed_point_prefix('0', i),
        FwWordKind::Mechanical => mechanical_prefix(i),
        FwWordKind::Y => Ok(y_word(i)),
        FwWordKind::Q => q_word(i),
        FwWordKind::FibAb => fib_word_ab(i),
    }
    .map_err(invalid)
}

/// Builds a word: prefix of length `n` (morphic, mechanical) or the `n`-th
/// member of the `y`, `q` or Fibonacci-word family.
///
/// # Safety
/// `out` must be a valid pointer to a `FwWord*` slot.
#[no_mangle]
pub unsafe extern "C" fn fw_word_generate(kind: FwWordKind, n: u64, out: *mut *mut FwWord) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let w = generate(kind, n)?;
        let text = CString::new(w.to_string()).map_err(|_| fail(FwStatus::Internal, "NUL in word"))?;
        *out = Box::into_raw(Box::new(FwWord { text, len: w.len() }));
        Ok(())
    })
}

/// Number of symbols in the word.
///
/// # Safety
/// `word` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_word_len(word: *const FwWord, out: *mut usize) -> FwStatus {
    guard(|| {
        non_null(word, "word")?;
        non_null(out, "out")?;
        *out = (*word).len;
        Ok(())
    })
}

/// Copies the word as a NUL-terminated string into `buf`. `written`, if not
/// null, receives the number of bytes needed including the terminator.
///
/// # Safety
/// `word` must be a live handle; `buf` must point to `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn fw_word_copy(
    word: *const FwWord,
    buf: *mut c_char,
    cap: usize,
    written: *mut usize,
) -> FwStatus {
    guard(|| {
        non_null(word, "word")?;
        let bytes = (*word).text.as_bytes_with_nul();
        if !written.is_null() {
            *written = bytes.len();
        }
        non_null(buf, "buf")?;
        if cap < bytes.len() {
            return Err(fail(
                FwStatus::BufferTooSmall,
                format!("need {} bytes, got {cap}", bytes.len()),
            ));
        }
        ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, bytes.len());
        Ok(())
    })
}

/// Releases a word. Null is ignored.
///
/// # Safety
/// `word` must come from [`fw_word_generate`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fw_word_free(word: *mut FwWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// `floor(n phi)` for `n >= 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_beatty_phi(n: u64, out: *mut u64) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = beatty_phi_u64(n).map_err(invalid)?;
        Ok(())
    })
}

/// `floor(n phi^2)` for `n >= 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_beatty_phi2(n: u64, out: *mut u64) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = beatty_phi2_u64(n).map_err(invalid)?;
        Ok(())
    })
}

/// Number of 1s among the first `n` symbols of the Fibonacci word.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_count_ones(n: u64, out: *mut u64) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = count_ones_upto(n).map_err(invalid)?;
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_density_counts(n: u64, out: *mut FwDensityCounts) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        let count1 = count_ones_upto(n).map_err(invalid)?;
        *out = FwDensityCounts {
            n,
            count0: n - count1,
            count1,
        };
        Ok(())
    })
}

impl From<&Budget> for FwBudget {
    fn from(b: &Budget) -> Self {
        FwBudget {
            sweep: b.sweep,
            prefix: b.prefix as u64,
            complexity_max: b.complexity_max as u64,
            table_m_max: b.table_m_max as u64,
            word_index_max: b.word_index_max as u64,
            alpha_max: b.alpha_max,
            pow_k_max: b.pow_k_max as u64,
            series_k_max: b.series_k_max,
            doubling_n_max: b.doubling_n_max,
            binet_n_max: b.binet_n_max,
            genfunc_n: b.genfunc_n as u64,
            zeckendorf_max: b.zeckendorf_max,
        }
    }
}

impl FwBudget {
    fn to_budget(self) -> Result<Budget, FwStatus> {
        Ok(Budget {
            sweep: self.sweep,
            prefix: to_usize(self.prefix)?,
            complexity_max: to_usize(self.complexity_max)?,
            table_m_max: to_usize(self.table_m_max)?,
            word_index_max: to_usize(self.word_index_max)?,
            alpha_max: self.alpha_max,
            pow_k_max: to_usize(self.pow_k_max)?,
            series_k_max: self.series_k_max,
            doubling_n_max: self.doubling_n_max,
            binet_n_max: self.binet_n_max,
            genfunc_n: to_usize(self.genfunc_n)?,
            zeckendorf_max: self.zeckendorf_max,
        })
    }
}

/// Fills `out` with the default sweep bounds.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_budget_default(out: *mut FwBudget) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = FwBudget::from(&Budget::default());
        Ok(())
    })
}

/// Evaluates every registered claim. `budget` may be null for the defaults.
///
/// # Safety
/// `budget` must be null or readable; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_claims_run(budget: *const FwBudget, out: *mut *mut FwClaims) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let budget = if budget.is_null() {
            Budget::default()
        } else {
            (*budget).to_budget()?
        };
        let results = run_all_claims(&budget).map_err(invalid)?;
        *out = Box::into_raw(Box::new(FwClaims { results }));
        Ok(())
    })
}

/// # Safety
/// `claims` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_claims_len(claims: *const FwClaims, out: *mut usize) -> FwStatus {
    guard(|| {
        non_null(claims, "claims")?;
        non_null(out, "out")?;
        *out = (*claims).results.len();
        Ok(())
    })
}

unsafe fn claim_at<'a>(claims: *const FwClaims, index: usize) -> Result<&'a ClaimResult, FwStatus> {
    non_null(claims, "claims")?;
    let results = &(*claims).results;
    results.get(index).ok_or_else(|| {
        fail(
            FwStatus::InvalidArgument,
            format!("index {index} out of range"),
        )
    })
}

/// # Safety
/// `claims` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_claims_status(
    claims: *const FwClaims,
    index: usize,
    out: *mut FwClaimStatus,
) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = match claim_at(claims, index)?.status {
            ClaimStatus::Verified => FwClaimStatus::Verified,
            ClaimStatus::Refuted => FwClaimStatus::Refuted,
        };
        Ok(())
    })
}

unsafe fn claim_string(
    claims: *const FwClaims,
    index: usize,
    out: *mut *mut c_char,
    pick: impl FnOnce(&ClaimResult) -> String,
) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = ptr::null_mut();
        let c = claim_at(claims, index)?;
        *out = new_string(&pick(c))?;
        Ok(())
    })
}

/// Claim id; release with [`fw_string_free`].
///
/// # Safety
/// `claims` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_claims_id(claims: *const FwClaims, index: usize, out: *mut *mut c_char) -> FwStatus {
    claim_string(claims, index, out, |c| c.id.clone())
}

/// Witness text; release with [`fw_string_free`].
///
/// # Safety
/// `claims` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_claims_witness(
    claims: *const FwClaims,
    index: usize,
    out: *mut *mut c_char,
) -> FwStatus {
    claim_string(claims, index, out, |c| c.witness.clone())
}

/// One claim record as JSON; release with [`fw_string_free`].
///
/// # Safety
/// `claims` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_claims_json(claims: *const FwClaims, index: usize, out: *mut *mut c_char) -> FwStatus {
    claim_string(claims, index, out, |c| {
        serde_json::to_string(c).expect("claim records serialize")
    })
}

/// Releases a claims handle. Null is ignored.
///
/// # Safety
/// `claims` must come from [`fw_claims_run`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fw_claims_free(claims: *mut FwClaims) {
    if !claims.is_null() {
        drop(Box::from_raw(claims));
    }
}

/// Runs the command-line front end on `argc`/`argv` and returns a newly
/// allocated copy of its standard output in `out` and its exit code in
/// `exit_code`.
///
/// # Safety
/// `argv` must hold `argc` valid NUL-terminated strings; `out` and
/// `exit_code` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fw_cli_run(
    argc: usize,
    argv: *const *const c_char,
    out: *mut *mut c_char,
    exit_code: *mut i32,
) -> FwStatus {
    guard(|| {
        non_null(out, "out")?;
        non_null(exit_code, "exit_code")?;
        *out = ptr::null_mut();
        if argc > 0 {
            non_null(argv, "argv")?;
        }
        let mut args = vec!["fibword".to_string()];
        for i in 0..argc {
            let a = *argv.add(i);
            non_null(a, "argv entry")?;
            let s = CStr::from_ptr(a)
                .to_str()
                .map_err(|_| fail(FwStatus::InvalidArgument, "argument is not UTF-8"))?;
            args.push(s.to_string());
        }
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = fibword::cli::run(args, &mut stdout, &mut stderr);
        if code != 0 {
            set_error(String::from_utf8_lossy(&stderr).trim_end().to_string());
        }
        *exit_code = code;
        let text = String::from_utf8(stdout).map_err(|_| fail(FwStatus::Internal, "output is not UTF-8"))?;
        *out = new_string(&text)?;
        Ok(())
    })
}
