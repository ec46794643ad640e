//! C ABI over the `blocking-ca` engine.
//!
//! Every object is an opaque heap handle created by a `*_new`/`*_parse`
//! style function and released by its `*_free`. Fallible calls return a
//! [`BcaStatus`] and write results through out-pointers; after a non-`Ok`
//! status, [`bca_last_error_message`] describes the failure on the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use blocking_ca::ca::{evolve, Diagram, RuleParams, Tape};
use blocking_ca::correspondence::ca_safe;
use blocking_ca::game::{Board, Outcome, Solver, Triangle, WindowMode};
use blocking_ca::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParams = 2,
    Parse = 3,
    IllegalPosition = 4,
    Guard = 5,
    OutsideDiagram = 6,
    Io = 7,
    Panic = 8,
    BufferTooSmall = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcaOutcome {
    N = 0,
    P = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcaWindowMode {
    Anchored = 0,
    AnyContiguous = 1,
}

pub struct BcaParams(RuleParams);
pub struct BcaTape(Tape);
pub struct BcaDiagram(Diagram);
pub struct BcaBoard(Board);
pub struct BcaSolver(Solver<'static>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> BcaStatus {
    match err {
        Error::InvalidParams(_) => BcaStatus::InvalidParams,
        Error::Parse(_) | Error::Json(_) | Error::Usage(_) => BcaStatus::Parse,
        Error::IllegalPosition(_) => BcaStatus::IllegalPosition,
        Error::Guard(_) => BcaStatus::Guard,
        Error::OutsideDiagram(_) => BcaStatus::OutsideDiagram,
        Error::Io(_) => BcaStatus::Io,
    }
}

enum Fail {
    Null(&'static str),
    Core(Error),
    Small(usize),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

/// Runs `f`, converting errors and panics into a status and recording the
/// message.
fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> BcaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BcaStatus::Ok,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer passed for `{what}`"));
            BcaStatus::NullPointer
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Small(needed))) => {
            set_error(format!("buffer too small, {needed} bytes needed"));
            BcaStatus::BufferTooSmall
        }
        Err(_) => {
            set_error("panic inside blocking-ca".into());
            BcaStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null(what))
}

unsafe fn text<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Core(Error::Parse(format!("`{what}` is not UTF-8"))))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bca_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static NUL-terminated version string.
#[no_mangle]
pub extern "C" fn bca_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bca_params_new(
    gamma: usize,
    left: usize,
    right: usize,
    block: usize,
    out_params: *mut *mut BcaParams,
) -> BcaStatus {
    guard(|| {
        let slot = out(out_params, "out_params")?;
        *slot = boxed(BcaParams(RuleParams::new(gamma, left, right, block)?));
        Ok(())
    })
}

/// # Safety
/// `params` must be NULL or a handle from [`bca_params_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bca_params_free(params: *mut BcaParams) {
    free(params)
}

/// Full window width `gamma + left + right`, or 0 for NULL.
///
/// # Safety
/// `params` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bca_params_delta(params: *const BcaParams) -> usize {
    params.as_ref().map_or(0, |p| p.0.delta())
}

/// Parses `origin=<int> left=<0|1> right=<0|1> core=<bits>`.
///
/// # Safety
/// `line` must be a NUL-terminated string; `out_tape` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_tape_parse(
    line: *const c_char,
    out_tape: *mut *mut BcaTape,
) -> BcaStatus {
    guard(|| {
        let slot = out(out_tape, "out_tape")?;
        *slot = boxed(BcaTape(text(line, "line")?.parse()?));
        Ok(())
    })
}

/// A tape whose 1-cells are exactly `ones[0..len]`.
///
/// # Safety
/// `ones` must point to `len` readable values (may be NULL when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn bca_tape_from_ones(
    ones: *const i64,
    len: usize,
    out_tape: *mut *mut BcaTape,
) -> BcaStatus {
    guard(|| {
        let slot = out(out_tape, "out_tape")?;
        let cells: &[i64] = if len == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(borrow(ones, "ones")?, len)
        };
        *slot = boxed(BcaTape(Tape::from_ones(cells.iter().copied())));
        Ok(())
    })
}

/// `width` seeded random cells starting at `start`.
///
/// # Safety
/// `out_tape` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_tape_random(
    seed: u64,
    start: i64,
    width: usize,
    out_tape: *mut *mut BcaTape,
) -> BcaStatus {
    guard(|| {
        *out(out_tape, "out_tape")? = boxed(BcaTape(Tape::random(seed, start, width)));
        Ok(())
    })
}

/// 1 exactly at cells `x >= threshold`.
///
/// # Safety
/// `out_tape` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_tape_step(threshold: i64, out_tape: *mut *mut BcaTape) -> BcaStatus {
    guard(|| {
        *out(out_tape, "out_tape")? = boxed(BcaTape(Tape::step_at(threshold)));
        Ok(())
    })
}

/// # Safety
/// `tape` must be a live handle; `out_bit` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_tape_get(tape: *const BcaTape, x: i64, out_bit: *mut u8) -> BcaStatus {
    guard(|| {
        let t = borrow(tape, "tape")?;
        *out(out_bit, "out_bit")? = u8::from(t.0.get(x));
        Ok(())
    })
}

/// Writes the one-line text form, NUL-terminated, into `buf`. With a NULL
/// `buf` or too small `cap`, only `*needed` (bytes including the NUL) is
/// set; the status is then `BufferTooSmall` unless `buf` was NULL.
///
/// # Safety
/// `buf` must be NULL or writable for `cap` bytes; `needed` valid for one
/// write.
#[no_mangle]
pub unsafe extern "C" fn bca_tape_to_string(
    tape: *const BcaTape,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> BcaStatus {
    guard(|| {
        let s = borrow(tape, "tape")?.0.to_string();
        let n = s.len() + 1;
        *out(needed, "needed")? = n;
        if buf.is_null() {
            return Ok(());
        }
        if cap < n {
            return Err(Fail::Small(n));
        }
        ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
        *buf.add(s.len()) = 0;
        Ok(())
    })
}

/// # Safety
/// `tape` must be NULL or a live handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bca_tape_free(tape: *mut BcaTape) {
    free(tape)
}

/// Evolves `init` for `steps` rows.
///
/// # Safety
/// `init` and `params` must be live handles; `out_diagram` valid for one
/// write.
#[no_mangle]
pub unsafe extern "C" fn bca_diagram_evolve(
    init: *const BcaTape,
    params: *const BcaParams,
    steps: usize,
    out_diagram: *mut *mut BcaDiagram,
) -> BcaStatus {
    guard(|| {
        let (t, p) = (borrow(init, "init")?, borrow(params, "params")?);
        let slot = out(out_diagram, "out_diagram")?;
        *slot = boxed(BcaDiagram(evolve(&t.0, &p.0, steps)));
        Ok(())
    })
}

/// Number of steps held (rows are `0..=steps`), or 0 for NULL.
///
/// # Safety
/// `diagram` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bca_diagram_steps(diagram: *const BcaDiagram) -> usize {
    diagram.as_ref().map_or(0, |d| d.0.steps())
}

/// # Safety
/// `diagram` must be a live handle; `out_bit` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_diagram_cell(
    diagram: *const BcaDiagram,
    x: i64,
    t: i64,
    out_bit: *mut u8,
) -> BcaStatus {
    guard(|| {
        let d = borrow(diagram, "diagram")?;
        *out(out_bit, "out_bit")? = u8::from(d.0.cell(x, t)?);
        Ok(())
    })
}

/// Copies row `t` out as a new tape handle.
///
/// # Safety
/// `diagram` must be a live handle; `out_tape` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_diagram_row(
    diagram: *const BcaDiagram,
    t: usize,
    out_tape: *mut *mut BcaTape,
) -> BcaStatus {
    guard(|| {
        let d = borrow(diagram, "diagram")?;
        let row =
            d.0.row(t)
                .ok_or_else(|| Error::OutsideDiagram(format!("row {t} beyond {}", d.0.steps())))?;
        *out(out_tape, "out_tape")? = boxed(BcaTape(row.clone()));
        Ok(())
    })
}

/// Whether triangle `(x, y, h)` is CA-safe in `diagram`.
///
/// # Safety
/// `diagram` must be a live handle; `out_safe` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_diagram_ca_safe(
    diagram: *const BcaDiagram,
    x: i64,
    y: i64,
    h: i64,
    out_safe: *mut u8,
) -> BcaStatus {
    guard(|| {
        let d = borrow(diagram, "diagram")?;
        let t = Triangle::new(x, y, h)?;
        *out(out_safe, "out_safe")? = u8::from(ca_safe(&t, &d.0)?);
        Ok(())
    })
}

/// # Safety
/// `diagram` must be NULL or a live handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bca_diagram_free(diagram: *mut BcaDiagram) {
    free(diagram)
}

/// A board from parameters and a terminal-level tape (both copied).
///
/// # Safety
/// `params` and `level0` must be live handles; `out_board` valid for one
/// write.
#[no_mangle]
pub unsafe extern "C" fn bca_board_new(
    params: *const BcaParams,
    level0: *const BcaTape,
    out_board: *mut *mut BcaBoard,
) -> BcaStatus {
    guard(|| {
        let (p, t) = (borrow(params, "params")?, borrow(level0, "level0")?);
        let slot = out(out_board, "out_board")?;
        *slot = boxed(BcaBoard(Board::new(p.0, t.0.clone())?));
        Ok(())
    })
}

/// Parses board-file text: a params line then a tape line.
///
/// # Safety
/// `text` must be NUL-terminated; `out_board` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_board_parse(
    board_text: *const c_char,
    out_board: *mut *mut BcaBoard,
) -> BcaStatus {
    guard(|| {
        let slot = out(out_board, "out_board")?;
        *slot = boxed(BcaBoard(text(board_text, "board_text")?.parse()?));
        Ok(())
    })
}

/// # Safety
/// `board` must be NULL or a live handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bca_board_free(board: *mut BcaBoard) {
    free(board)
}

/// A memoizing solver over a copy of `board`.
///
/// # Safety
/// `board` must be a live handle; `out_solver` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_solver_new(
    board: *const BcaBoard,
    mode: BcaWindowMode,
    out_solver: *mut *mut BcaSolver,
) -> BcaStatus {
    guard(|| {
        let b = borrow(board, "board")?;
        let mode = match mode {
            BcaWindowMode::Anchored => WindowMode::Anchored,
            BcaWindowMode::AnyContiguous => WindowMode::AnyContiguous,
        };
        *out(out_solver, "out_solver")? = boxed(BcaSolver(Solver::owned(b.0.clone(), mode)));
        Ok(())
    })
}

/// Outcome of triangle `(x, y, h)`. Not thread-safe per handle.
///
/// # Safety
/// `solver` must be a live handle used by one thread at a time;
/// `out_outcome` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn bca_solver_outcome(
    solver: *mut BcaSolver,
    x: i64,
    y: i64,
    h: i64,
    out_outcome: *mut BcaOutcome,
) -> BcaStatus {
    guard(|| {
        let s = out(solver, "solver")?;
        let t = Triangle::new(x, y, h)?;
        *out(out_outcome, "out_outcome")? = match s.0.outcome(&t)? {
            Outcome::N => BcaOutcome::N,
            Outcome::P => BcaOutcome::P,
        };
        Ok(())
    })
}

/// # Safety
/// `solver` must be NULL or a live handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bca_solver_free(solver: *mut BcaSolver) {
    free(solver)
}
