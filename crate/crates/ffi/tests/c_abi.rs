use std::ffi::{CStr, CString};
use std::ptr;

use blocking_ca::ca::{evolve, RuleParams, Tape};
use blocking_ca::game::{Board, Outcome, Solver, Triangle};
use blocking_ca_ffi::*;

fn params(g: usize, l: usize, r: usize, b: usize) -> *mut BcaParams {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { bca_params_new(g, l, r, b, &mut p) }, BcaStatus::Ok);
    p
}

fn ones(cells: &[i64]) -> *mut BcaTape {
    let mut t = ptr::null_mut();
    assert_eq!(
        unsafe { bca_tape_from_ones(cells.as_ptr(), cells.len(), &mut t) },
        BcaStatus::Ok
    );
    t
}

fn last_error() -> String {
    let p = bca_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn invalid_params_set_status_and_message() {
    let mut p = ptr::null_mut();
    let status = unsafe { bca_params_new(2, 1, 1, 4, &mut p) };
    assert_eq!(status, BcaStatus::InvalidParams);
    assert!(p.is_null());
    assert!(!last_error().is_empty());
    assert_eq!(
        unsafe { bca_params_new(2, 1, 1, 0, ptr::null_mut()) },
        BcaStatus::NullPointer
    );
    assert!(last_error().contains("out_params"));
}

#[test]
fn diagram_cells_match_core() {
    let (p, t) = (params(2, 1, 1, 1), ones(&[0, 3, 4]));
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { bca_diagram_evolve(t, p, 12, &mut d) },
        BcaStatus::Ok
    );
    assert_eq!(unsafe { bca_diagram_steps(d) }, 12);
    let expect = evolve(
        &Tape::from_ones([0, 3, 4]),
        &RuleParams::new(2, 1, 1, 1).unwrap(),
        12,
    );
    for t in 0..=12 {
        for x in -20..20 {
            let mut bit = 9;
            assert_eq!(
                unsafe { bca_diagram_cell(d, x, t, &mut bit) },
                BcaStatus::Ok
            );
            assert_eq!(bit == 1, expect.cell(x, t).unwrap());
        }
    }
    let mut bit = 0;
    assert_eq!(
        unsafe { bca_diagram_cell(d, 0, 13, &mut bit) },
        BcaStatus::OutsideDiagram
    );
    let mut row = ptr::null_mut();
    assert_eq!(unsafe { bca_diagram_row(d, 5, &mut row) }, BcaStatus::Ok);
    assert_eq!(
        unsafe { bca_diagram_row(d, 13, &mut row) },
        BcaStatus::OutsideDiagram
    );
    unsafe {
        bca_tape_free(row);
        bca_diagram_free(d);
        bca_tape_free(t);
        bca_params_free(p);
    }
}

#[test]
fn tape_text_round_trip() {
    let t = ones(&[-2, 5]);
    let mut needed = 0;
    assert_eq!(
        unsafe { bca_tape_to_string(t, ptr::null_mut(), 0, &mut needed) },
        BcaStatus::Ok
    );
    let mut small = vec![0 as std::ffi::c_char; 3];
    assert_eq!(
        unsafe { bca_tape_to_string(t, small.as_mut_ptr(), small.len(), &mut needed) },
        BcaStatus::BufferTooSmall
    );
    let mut buf = vec![0 as std::ffi::c_char; needed];
    assert_eq!(
        unsafe { bca_tape_to_string(t, buf.as_mut_ptr(), buf.len(), &mut needed) },
        BcaStatus::Ok
    );
    let line = unsafe { CStr::from_ptr(buf.as_ptr()) }.to_owned();
    assert_eq!(line.to_str().unwrap(), Tape::from_ones([-2, 5]).to_string());

    let mut back = ptr::null_mut();
    assert_eq!(
        unsafe { bca_tape_parse(line.as_ptr(), &mut back) },
        BcaStatus::Ok
    );
    for x in -5..8 {
        let (mut a, mut b) = (0, 0);
        unsafe {
            bca_tape_get(t, x, &mut a);
            bca_tape_get(back, x, &mut b);
        }
        assert_eq!(a, b);
        assert_eq!(a == 1, x == -2 || x == 5);
    }
    let bad = CString::new("origin=zz").unwrap();
    let mut none = ptr::null_mut();
    assert_eq!(
        unsafe { bca_tape_parse(bad.as_ptr(), &mut none) },
        BcaStatus::Parse
    );
    unsafe {
        bca_tape_free(t);
        bca_tape_free(back);
    }
}

#[test]
fn solver_matches_core_and_ca_safe() {
    let cells = [0, 4];
    let (p, t) = (params(2, 0, 0, 0), ones(&cells));
    let mut board = ptr::null_mut();
    assert_eq!(unsafe { bca_board_new(p, t, &mut board) }, BcaStatus::Ok);
    let mut solver = ptr::null_mut();
    assert_eq!(
        unsafe { bca_solver_new(board, BcaWindowMode::Anchored, &mut solver) },
        BcaStatus::Ok
    );
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { bca_diagram_evolve(t, p, 8, &mut d) },
        BcaStatus::Ok
    );

    let core = Board::new(RuleParams::new(2, 0, 0, 0).unwrap(), Tape::from_ones(cells)).unwrap();
    let mut reference = Solver::new(&core);
    for x in -4..8 {
        for y in 1..5 {
            for h in 1..3 {
                let mut o = BcaOutcome::P;
                assert_eq!(
                    unsafe { bca_solver_outcome(solver, x, y, h, &mut o) },
                    BcaStatus::Ok
                );
                let want = reference.outcome(&Triangle::new(x, y, h).unwrap()).unwrap();
                assert_eq!(o == BcaOutcome::P, want == Outcome::P);
                let mut safe = 0;
                assert_eq!(
                    unsafe { bca_diagram_ca_safe(d, x, y, h, &mut safe) },
                    BcaStatus::Ok
                );
                assert_eq!(safe == 1, want == Outcome::P, "({x},{y},{h})");
            }
        }
    }
    let mut o = BcaOutcome::P;
    assert_eq!(
        unsafe { bca_solver_outcome(solver, 0, 0, 1, &mut o) },
        BcaStatus::IllegalPosition
    );
    unsafe {
        bca_solver_free(solver);
        bca_board_free(board);
        bca_diagram_free(d);
        bca_tape_free(t);
        bca_params_free(p);
    }
}

#[test]
fn board_text_parses() {
    let text =
        CString::new("gamma=2 left=1 right=1 block=0\norigin=0 left=0 right=0 core=1\n").unwrap();
    let mut board = ptr::null_mut();
    assert_eq!(
        unsafe { bca_board_parse(text.as_ptr(), &mut board) },
        BcaStatus::Ok
    );
    unsafe { bca_board_free(board) };
    let empty =
        CString::new("gamma=2 left=1 right=1 block=0\norigin=0 left=0 right=0 core=0\n").unwrap();
    assert_ne!(
        unsafe { bca_board_parse(empty.as_ptr(), &mut board) },
        BcaStatus::Ok
    );
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        bca_params_free(ptr::null_mut());
        bca_tape_free(ptr::null_mut());
        bca_diagram_free(ptr::null_mut());
        bca_board_free(ptr::null_mut());
        bca_solver_free(ptr::null_mut());
        assert_eq!(bca_params_delta(ptr::null()), 0);
        assert_eq!(bca_diagram_steps(ptr::null()), 0);
    }
    let mut bit = 0;
    assert_eq!(
        unsafe { bca_tape_get(ptr::null(), 0, &mut bit) },
        BcaStatus::NullPointer
    );
    assert!(!unsafe { CStr::from_ptr(bca_version()) }
        .to_bytes()
        .is_empty());
}

#[test]
fn header_is_current() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/blocking_ca.h"
    ))
    .unwrap();
    for name in [
        "bca_params_new",
        "bca_solver_outcome",
        "bca_diagram_ca_safe",
        "BCA_STATUS_PANIC",
        "typedef struct BcaTape BcaTape",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
