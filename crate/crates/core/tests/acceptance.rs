//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use blocking_ca::ca::{evolve, step, step_naive, update_cell, RuleParams, Tape};
use blocking_ca::correspondence::{lemma1_sweep, theorem1_verify, SweepOptions};
use blocking_ca::fractal::{
    claim1_probe, find_all_stars, star_limit_check, theorem2_verify, DoublingRun,
};
use blocking_ca::game::{outcome_naive, Board, Solver, Triangle, WindowMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

const GOLDEN_EVOLVE_SEED7: &str =
    "059c44cbb8dc9d3cbce024a204e1464ed7f0a23d06cf8475a65e7f39d0fb75d1";
const GOLDEN_SUPERPOSE: &str = "95fda9bf0fefa59ea6e4540cbe8032c31032e59cc0e96f21889c696f6200ac09";

const EVOLVE_SEED7: &[&str] = &[
    "evolve", "--gamma", "2", "--left", "4", "--right", "4", "--block", "5", "--init", "random",
    "--seed", "7", "--width", "256", "--steps", "256", "--format", "pbm",
];
const SUPERPOSE: &[&str] = &[
    "superpose",
    "--L",
    "0",
    "--R",
    "1",
    "--n",
    "3",
    "--steps",
    "32",
    "--levels",
    "0,1,2,3",
    "--format",
    "ppm",
];

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn params(g: usize, l: usize, r: usize, b: usize) -> RuleParams {
    RuleParams::new(g, l, r, b).unwrap()
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

fn window_examples() -> Verdict {
    let start = Instant::now();
    let p = params(3, 2, 1, 2);
    let windows: [([u8; 6], bool); 6] = [
        ([1, 0, 1, 1, 1, 0], false),
        ([1, 1, 0, 0, 1, 1], false),
        ([1, 1, 0, 0, 0, 1], false),
        ([0, 0, 1, 1, 1, 0], true),
        ([0, 0, 0, 1, 0, 0], true),
        ([1, 1, 1, 0, 0, 0], true),
    ];
    let got: Vec<u8> = windows
        .iter()
        .map(|(bits, _)| {
            let tape = Tape::from_ones((0..6).filter(|&i| bits[i as usize] == 1));
            u8::from(update_cell(&tape, 4, &p))
        })
        .collect();
    let want: Vec<u8> = windows.iter().map(|&(_, o)| u8::from(o)).collect();
    let elapsed = start.elapsed();
    verdict(
        got == want && elapsed < Duration::from_secs(1),
        format!("outputs {got:?}, expected {want:?}, {}", secs(elapsed)),
    )
}

fn pascal_parity() -> Verdict {
    let start = Instant::now();
    let d = evolve(&Tape::single_one(0), &params(2, 0, 0, 0), 63);
    let mut wrong = 0;
    for t in 0..64i64 {
        for x in -70..=130i64 {
            let expect = (0..=t).contains(&x) && (x & t) == x;
            if d.cell(x, t).unwrap() != expect {
                wrong += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        wrong == 0 && elapsed < Duration::from_secs(1),
        format!("{wrong} cells differ from C(t,x) mod 2, {}", secs(elapsed)),
    )
}

fn random_board(rng: &mut ChaCha8Rng) -> Board {
    let gamma = rng.gen_range(2..=3);
    let (left, right) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
    let block = rng.gen_range(0..=3usize.min(gamma + left + right - 1));
    let width = rng.gen_range(1..=12i64);
    let origin = rng.gen_range(-8..=4i64);
    let mut ones: Vec<i64> = (0..width)
        .filter(|_| rng.gen_bool(0.5))
        .map(|i| origin + i)
        .collect();
    if ones.is_empty() {
        ones.push(origin + rng.gen_range(0..width));
    }
    Board::new(params(gamma, left, right, block), Tape::from_ones(ones)).unwrap()
}

fn random_boards() -> Vec<Board> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..200).map(|_| random_board(&mut rng)).collect()
}

fn theorem1(boards: &[Board]) -> Verdict {
    let start = Instant::now();
    let opts = SweepOptions {
        xmin: -10,
        xmax: 10,
        y_min: 1,
        y_max: 8,
        h_max: 4,
        cap: 4,
        ..SweepOptions::default()
    };
    let (mut positions, mut mismatches, mut bad_boards) = (0, 0, 0);
    let (mut b0_boards, mut b0_mismatches) = (0, 0);
    let mut first = None;
    for board in boards {
        let rep = theorem1_verify(board, &opts).unwrap();
        positions += rep.positions_checked;
        mismatches += rep.mismatch_count;
        if !rep.holds() {
            bad_boards += 1;
            first.get_or_insert_with(|| {
                format!("{} {}", board.params(), rep.mismatches[0].triangle)
            });
        }
        if board.params().block() == 0 {
            b0_boards += 1;
            b0_mismatches += rep.mismatch_count;
        }
    }
    let elapsed = start.elapsed();
    verdict(
        mismatches == 0 && elapsed < Duration::from_secs(300),
        format!(
            "{} boards, {positions} positions, {mismatches} mismatches on {bad_boards} boards{}; \
             block=0 subset: {b0_boards} boards, {b0_mismatches} mismatches; {}",
            boards.len(),
            first.map(|f| format!(" (first: {f})")).unwrap_or_default(),
            secs(elapsed)
        ),
    )
}

fn lemma1(boards: &[Board]) -> Verdict {
    let (mut cells, mut failures, mut bad_boards) = (0, 0, 0);
    let (mut b0_boards, mut b0_failures) = (0, 0);
    let mut first = None;
    for board in boards {
        let d = evolve(board.level0(), board.params(), 8);
        let rep = lemma1_sweep(&d, -10, 10, 8, 1).unwrap();
        cells += rep.cells_checked;
        failures += rep.failure_count;
        if rep.failure_count > 0 {
            bad_boards += 1;
            first.get_or_insert_with(|| {
                format!("{} cell {:?}", board.params(), rep.failures[0].cell)
            });
        }
        if board.params().block() == 0 {
            b0_boards += 1;
            b0_failures += rep.failure_count;
        }
    }
    verdict(
        failures == 0,
        format!(
            "{cells} cells, {failures} failures on {bad_boards} boards{}; block=0 subset: {b0_boards} boards, {b0_failures} failures",
            first.map(|f| format!(" (first: {f})")).unwrap_or_default()
        ),
    )
}

fn blocking_oracle() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let (mut positions, mut disagreements) = (0, 0);
    while positions < 120 {
        let gamma = rng.gen_range(2..=3);
        let left = rng.gen_range(0..=2);
        let right = rng.gen_range(0..=(6 - gamma - left).min(2));
        let block = rng.gen_range(0..=2usize.min(gamma + left + right - 1));
        let ones: Vec<i64> = (-6..=6).filter(|_| rng.gen_bool(0.4)).collect();
        if ones.is_empty() {
            continue;
        }
        let board = Board::new(params(gamma, left, right, block), Tape::from_ones(ones)).unwrap();
        let t = Triangle::new(
            rng.gen_range(-6..=6),
            rng.gen_range(1..=3),
            rng.gen_range(1..=3),
        )
        .unwrap();
        if !board.is_legal(&t) {
            continue;
        }
        for mode in [WindowMode::Anchored, WindowMode::AnyContiguous] {
            let fast = Solver::with_mode(&board, mode).outcome(&t).unwrap();
            if fast != outcome_naive(&t, &board, mode).unwrap() {
                disagreements += 1;
            }
        }
        positions += 1;
    }
    let elapsed = start.elapsed();
    verdict(
        disagreements == 0 && elapsed < Duration::from_secs(120),
        format!(
            "{positions} positions x 2 window modes, {disagreements} disagreements, {}",
            secs(elapsed)
        ),
    )
}

fn theorem2() -> Verdict {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut positions, mut mismatches, mut runs) = (0, 0, 0);
    let mut first = None;
    for (l, r) in [(0, 1), (1, 1), (1, 2)] {
        let mut inits = vec![Tape::step_at(1)];
        inits.extend((0..3).map(|_| Tape::random(rng.gen(), 0, 8)));
        for i0 in &inits {
            let run = DoublingRun::new(i0, params(2, l, r, 0), 3, 10).unwrap();
            for n in 0..=2 {
                let (lo, hi) = run.initial(n).unwrap().active_extent().unwrap_or((0, 0));
                let opts = SweepOptions {
                    xmin: lo - 10,
                    xmax: hi + 10,
                    y_min: 0,
                    y_max: 6,
                    h_max: 3,
                    cap: 1,
                    ..SweepOptions::default()
                };
                let rep = theorem2_verify(&run, n, &opts).unwrap();
                positions += rep.positions_checked;
                mismatches += rep.mismatch_count;
                if let Some(m) = rep.mismatches.first() {
                    first.get_or_insert_with(|| format!("(L,R)=({l},{r}) n={n} {}", m.triangle));
                }
                runs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        mismatches == 0 && elapsed < Duration::from_secs(120),
        format!(
            "{runs} level pairs, {positions} triangles, {mismatches} mismatches{}, {}",
            first.map(|f| format!(" (first: {f})")).unwrap_or_default(),
            secs(elapsed)
        ),
    )
}

fn star_birth() -> Verdict {
    let (mut born, mut born_total, mut quiet, mut quiet_total, mut at_plus3) = (0, 0, 0, 0, 0);
    for (l, r) in [(0usize, 1usize), (1, 1), (2, 2)] {
        let delta = 2 + l + r;
        for alpha in -4..=4i64 {
            let full = claim1_probe(l, r, alpha, delta - 1).unwrap();
            born_total += 1;
            born += usize::from(full.star_at_predicted);
            at_plus3 += usize::from(full.stars.contains(&(2 * alpha + 2 * l as i64 + 3, 1)));
            let short = claim1_probe(l, r, alpha, delta - 2).unwrap();
            quiet_total += 1;
            quiet += usize::from(short.stars.is_empty());
        }
    }
    verdict(
        born == born_total && quiet == quiet_total,
        format!(
            "star at 2a+2L+4: {born}/{born_total} full runs; no star: {quiet}/{quiet_total} short runs; \
             observed star at 2a+2L+3: {at_plus3}/{born_total}"
        ),
    )
}

fn star_convergence() -> Verdict {
    let mut found = Vec::new();
    for (l, r) in [(0usize, 1usize), (1, 1), (1, 2)] {
        let mut hit = None;
        let candidates =
            std::iter::once(Tape::step_at(1)).chain((0..64).map(|s| Tape::random(s, 0, 12)));
        'search: for i0 in candidates {
            let run = DoublingRun::new(&i0, params(2, l, r, 0), 3, 12).unwrap();
            for seed in find_all_stars(run.level(0).unwrap(), 0) {
                let rep = star_limit_check(&run, &seed).unwrap();
                if rep.converges && rep.steps.len() == 4 {
                    hit = Some(format!(
                        "({l},{r}): seed {:?} limit {}",
                        seed.raw, rep.limit
                    ));
                    break 'search;
                }
            }
        }
        found.push(hit.ok_or(format!("({l},{r}): none")));
    }
    let pass = found.iter().all(Result::is_ok);
    let detail: Vec<String> = found.into_iter().map(|r| r.unwrap_or_else(|e| e)).collect();
    verdict(
        pass,
        format!(
            "converging lineage through n=3 per (L,R): {}",
            detail.join("; ")
        ),
    )
}

fn performance() -> Verdict {
    let mut worst = Duration::ZERO;
    for p in [
        params(2, 0, 1, 1),
        params(2, 1, 1, 1),
        params(2, 3, 3, 3),
        params(2, 4, 4, 5),
    ] {
        let init = Tape::random(11, 0, 8192);
        let start = Instant::now();
        let d = evolve(&init, &p, 8192);
        worst = worst.max(start.elapsed());
        assert_eq!(d.steps(), 8192);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    let mut differ = 0;
    for sample in 0..16 {
        let g = 2 + sample % 3;
        let (l, r) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        let p = params(g, l, r, rng.gen_range(0..g + l + r));
        let mut packed = Tape::random(rng.gen(), 0, 64);
        let mut naive = packed.clone();
        for _ in 0..64 {
            packed = step(&packed, &p);
            naive = step_naive(&naive, &p);
            differ += usize::from(packed != naive);
        }
    }
    verdict(
        worst < Duration::from_secs(5) && differ == 0,
        format!("slowest 8192x8192 run over (2,0,1,1), (2,1,1,1), (2,3,3,3), (2,4,4,5) {}; packed vs naive: {differ} of 1024 rows differ", secs(worst)),
    )
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_blocking-ca"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "`{}` exited {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn sha256(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn golden() -> Verdict {
    let mut notes = Vec::new();
    let mut pass = true;
    for (name, args, want) in [
        ("evolve seed 7", EVOLVE_SEED7, GOLDEN_EVOLVE_SEED7),
        ("superpose", SUPERPOSE, GOLDEN_SUPERPOSE),
    ] {
        match (run_cli(args), run_cli(args)) {
            (Ok(a), Ok(b)) => {
                let h = sha256(&a);
                let ok = a == b && h == want;
                pass &= ok;
                notes.push(format!(
                    "{name}: {}",
                    if ok {
                        "identical, golden match".into()
                    } else {
                        format!("hash {h}")
                    }
                ));
            }
            (Err(e), _) | (_, Err(e)) => {
                pass = false;
                notes.push(e);
            }
        }
    }
    let fig1 = [
        ("0", "1", "1", "single1"),
        ("1", "1", "1", "single1"),
        ("3", "3", "3", "random"),
        ("4", "4", "5", "random"),
    ];
    for (l, r, b, init) in fig1 {
        let mut args = vec![
            "render", "--gamma", "2", "--left", l, "--right", r, "--block", b, "--init", init,
            "--steps", "255",
        ];
        args.extend(if init == "random" {
            [
                "--seed", "1", "--width", "256", "--xmin", "0", "--xmax", "255",
            ]
        } else {
            [
                "--seed", "0", "--width", "1", "--xmin", "-127", "--xmax", "128",
            ]
        });
        pass &= check_size(run_cli(&args), 256, 256, &mut notes);
    }
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("level").display().to_string();
    let args = [
        "doubling",
        "--L",
        "0",
        "--R",
        "1",
        "--n",
        "3",
        "--steps",
        "32",
        "--xmin",
        "-15",
        "--xmax",
        "16",
        "--out-prefix",
        &prefix,
    ];
    match run_cli(&args) {
        Ok(_) => {
            for n in 0..=3 {
                let side = 32 << n;
                pass &= check_size(
                    std::fs::read(format!("{prefix}{n}.pbm")).map_err(|e| e.to_string()),
                    side,
                    side + 1,
                    &mut notes,
                );
            }
            notes.push("four parameter sets rendered 256x256, doubling level 3 rendered 256x257".into());
        }
        Err(e) => {
            pass = false;
            notes.push(e);
        }
    }
    verdict(pass, notes.join("; "))
}

fn check_size(img: Result<Vec<u8>, String>, w: usize, h: usize, notes: &mut Vec<String>) -> bool {
    let img = match img {
        Ok(i) => i,
        Err(e) => {
            notes.push(e);
            return false;
        }
    };
    let text = String::from_utf8_lossy(&img);
    let dims = text
        .lines()
        .skip(1)
        .find(|l| !l.starts_with('#'))
        .unwrap_or("")
        .to_string();
    let ok = dims == format!("{w} {h}");
    if !ok {
        notes.push(format!("unexpected size `{dims}`"));
    }
    ok
}

fn main() -> ExitCode {
    let boards = random_boards();
    let criteria: Vec<Criterion> = vec![
        ("window truth examples", Box::new(window_examples)),
        ("rule-60 binomial parity", Box::new(pascal_parity)),
        (
            "game outcome P iff CA-safe (anchored)",
            Box::new(|| theorem1(&boards)),
        ),
        ("single-cell safety sweep", Box::new(|| lemma1(&boards))),
        ("solver vs naive blocking oracle", Box::new(blocking_oracle)),
        ("doubling preserves CA-safety", Box::new(theorem2)),
        ("star birth location", Box::new(star_birth)),
        ("star lineage convergence", Box::new(star_convergence)),
        ("performance and kernel agreement", Box::new(performance)),
        ("determinism and golden outputs", Box::new(golden)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        failed += usize::from(!v.pass);
        println!(
            "criterion {:>2} {}: {} ({})",
            i + 1,
            if v.pass { "PASS" } else { "FAIL" },
            name,
            v.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
