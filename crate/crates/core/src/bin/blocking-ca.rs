use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use blocking_ca::ca::{evolve, truth_table, Diagram, RuleParams};
use blocking_ca::cli::{default_range, DensityReport, InitSpec, OutputFormat, RunConfig};
use blocking_ca::correspondence::{lemma1_sweep, theorem1_verify, EquivalenceReport, SweepOptions};
use blocking_ca::fractal::{
    find_all_stars, star_limit_check, superpose, theorem2_verify, DoublingRun, PALETTE,
};
use blocking_ca::game::{Board, SolveRequest, Solver, Triangle, WindowMode};
use blocking_ca::render::{
    write_csv, write_pbm_ascii, write_pbm_binary, write_pgm, write_ppm, Bitmap, Orientation,
};
use blocking_ca::{Error, Result};

#[derive(Parser)]
#[command(
    name = "blocking-ca",
    version,
    about = "Blocking-window cellular automata and their placement game"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve a tape and write the diagram as PBM, CSV or a JSON density series.
    Evolve(EvolveArgs),
    /// Evolve a tape and write the diagram as plain or raw PBM.
    Render(RenderArgs),
    /// Solve one game position on a board file.
    Solve(SolveArgs),
    /// Compare game outcomes with CA-safety over a triangle region.
    VerifyThm1(Thm1Args),
    /// Check the single-cell safety characterization at every cell of a region.
    VerifyLemma1(Lemma1Args),
    /// Run the doubling sequence, one PBM per level plus a JSON manifest.
    Doubling(DoublingArgs),
    /// Compare CA-safety of triangles with their doubled images.
    VerifyThm2(Thm2Args),
    /// List stars per doubling level and follow their lineages.
    Stars(StarsArgs),
    /// Overlay several doubling levels on one rescaled raster.
    Superpose(SuperposeArgs),
    /// Per-row 1-density and active extent as JSON.
    Stats(EvolveArgs),
    /// Print the full-window truth table and compare it with rule 110.
    TruthTable(ParamArgs),
}

#[derive(Args, Clone)]
struct ParamArgs {
    #[arg(long, default_value_t = 2)]
    gamma: usize,
    #[arg(long, default_value_t = 0)]
    left: usize,
    #[arg(long, default_value_t = 0)]
    right: usize,
    #[arg(long, default_value_t = 0)]
    block: usize,
}

impl ParamArgs {
    fn params(&self) -> Result<RuleParams> {
        RuleParams::new(self.gamma, self.left, self.right, self.block)
    }
}

#[derive(Args, Clone)]
struct InitArgs {
    /// single1, step, random, file, or file:PATH
    #[arg(long, default_value = "single1")]
    init: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 256)]
    width: usize,
    #[arg(long)]
    init_file: Option<PathBuf>,
}

impl InitArgs {
    fn spec(&self) -> Result<InitSpec> {
        match self.init.as_str() {
            "random" => {
                let seed = self
                    .seed
                    .ok_or_else(|| Error::Usage("--init random needs --seed".into()))?;
                Ok(InitSpec::Random {
                    seed,
                    width: self.width,
                })
            }
            "file" => {
                let path = self
                    .init_file
                    .clone()
                    .ok_or_else(|| Error::Usage("--init file needs --init-file".into()))?;
                Ok(InitSpec::File(path))
            }
            other => other
                .parse()
                .map_err(|e: Error| Error::Usage(e.to_string())),
        }
    }
}

#[derive(Args, Clone)]
struct RegionArgs {
    #[arg(long, default_value_t = 64)]
    steps: usize,
    #[arg(long, allow_hyphen_values = true)]
    xmin: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    xmax: Option<i64>,
    #[arg(long, default_value = "t0-bottom")]
    orientation: String,
    #[arg(long, short)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args, Clone)]
struct EvolveArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    init: InitArgs,
    #[command(flatten)]
    region: RegionArgs,
    /// pbm, pbm-raw, csv or json
    #[arg(long, default_value = "pbm")]
    format: String,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    init: InitArgs,
    #[command(flatten)]
    region: RegionArgs,
    /// Write raw (P4) instead of plain (P1) PBM.
    #[arg(long)]
    raw: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    board: PathBuf,
    /// x,y,h
    #[arg(long, allow_hyphen_values = true, conflicts_with = "request")]
    triangle: Option<String>,
    /// JSON file holding {"triangle":{"x":..,"y":..,"h":..}}
    #[arg(long)]
    request: Option<PathBuf>,
    #[arg(long, default_value = "anchored")]
    window_mode: String,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = -8)]
    xmin: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 8)]
    xmax: i64,
    #[arg(long, default_value_t = 6)]
    ymax: i64,
    #[arg(long, default_value_t = 3)]
    hmax: i64,
    /// Most mismatches listed in the report.
    #[arg(long, default_value_t = 16)]
    cap: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Thm1Args {
    #[arg(long)]
    board: PathBuf,
    #[command(flatten)]
    sweep: SweepArgs,
    #[arg(long, default_value = "anchored")]
    window_mode: String,
}

#[derive(Args)]
struct Lemma1Args {
    /// Board file; overrides the parameter and init flags.
    #[arg(long)]
    board: Option<PathBuf>,
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    init: InitArgs,
    #[arg(long, allow_hyphen_values = true, default_value_t = -8)]
    xmin: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 8)]
    xmax: i64,
    #[arg(long, default_value_t = 8)]
    tmax: i64,
    #[arg(long, default_value_t = 16)]
    cap: usize,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct DoublingBase {
    #[arg(long = "L", alias = "left", default_value_t = 0)]
    left: usize,
    #[arg(long = "R", alias = "right", default_value_t = 1)]
    right: usize,
    /// Deepest doubling level.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Level-0 rows; level n evolves steps * 2^n rows.
    #[arg(long, default_value_t = 32)]
    steps: usize,
    /// step, single1, random, file, or file:PATH
    #[arg(long, default_value = "step")]
    init: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 32)]
    width: usize,
    #[arg(long)]
    init_file: Option<PathBuf>,
}

impl DoublingBase {
    fn init_args(&self) -> InitArgs {
        InitArgs {
            init: self.init.clone(),
            seed: self.seed,
            width: self.width,
            init_file: self.init_file.clone(),
        }
    }

    fn run(&self) -> Result<(InitSpec, DoublingRun)> {
        let spec = self.init_args().spec()?;
        let params = RuleParams::new(2, self.left, self.right, 0)?;
        let run = DoublingRun::new(&spec.build()?, params, self.n, self.steps)?;
        Ok((spec, run))
    }

    fn level0_range(&self, run: &DoublingRun, spec: &InitSpec) -> (i64, i64) {
        let init = run.initial(0).expect("level 0");
        default_range(run.base_params(), spec, init, self.steps)
    }
}

#[derive(Args)]
struct DoublingArgs {
    #[command(flatten)]
    base: DoublingBase,
    #[arg(long, allow_hyphen_values = true)]
    xmin: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    xmax: Option<i64>,
    #[arg(long, default_value = "t0-bottom")]
    orientation: String,
    #[arg(long, default_value = "level")]
    out_prefix: String,
}

#[derive(Args)]
struct Thm2Args {
    #[command(flatten)]
    base: DoublingBase,
    #[arg(long, allow_hyphen_values = true)]
    xmin: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    xmax: Option<i64>,
    #[arg(long, default_value_t = 6)]
    ymax: i64,
    #[arg(long, default_value_t = 3)]
    hmax: i64,
    #[arg(long, default_value_t = 16)]
    cap: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StarsArgs {
    #[command(flatten)]
    base: DoublingBase,
    /// Level whose stars seed the lineages.
    #[arg(long, default_value_t = 0)]
    seed_level: usize,
    #[arg(long, default_value_t = 16)]
    max_lineages: usize,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuperposeArgs {
    #[command(flatten)]
    base: DoublingBase,
    /// Comma-separated levels, painted in order.
    #[arg(long, value_delimiter = ',', default_value = "0,1")]
    levels: Vec<usize>,
    #[arg(long, allow_hyphen_values = true)]
    xmin: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    xmax: Option<i64>,
    /// ppm or pgm
    #[arg(long, default_value = "ppm")]
    format: String,
    #[arg(long, default_value = "t0-bottom")]
    orientation: String,
    #[arg(long, short)]
    out: Option<PathBuf>,
}

/// Exit codes: 0 success, 1 verification mismatch, 2 usage or validation error.
fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("blocking-ca: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Evolve(a) => cmd_evolve("evolve", &a),
        Command::Render(a) => {
            let format = if a.raw { "pbm-raw" } else { "pbm" };
            let args = EvolveArgs {
                params: a.params,
                init: a.init,
                region: a.region,
                format: format.into(),
            };
            cmd_evolve("render", &args)
        }
        Command::Stats(a) => cmd_stats(&a),
        Command::Solve(a) => cmd_solve(&a),
        Command::VerifyThm1(a) => cmd_thm1(&a),
        Command::VerifyLemma1(a) => cmd_lemma1(&a),
        Command::Doubling(a) => cmd_doubling(&a),
        Command::VerifyThm2(a) => cmd_thm2(&a),
        Command::Stars(a) => cmd_stars(&a),
        Command::Superpose(a) => cmd_superpose(&a),
        Command::TruthTable(a) => cmd_truth_table(&a),
    }
}

fn usage<T, E: ToString>(r: std::result::Result<T, E>) -> Result<T> {
    r.map_err(|e| Error::Usage(e.to_string()))
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize>(path: Option<&Path>, value: &T) -> Result<()> {
    let mut w = output(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn read_board(path: &Path) -> Result<Board> {
    std::fs::read_to_string(path)?.parse()
}

fn build_config(command: &str, a: &EvolveArgs) -> Result<(RunConfig, Diagram)> {
    let params = a.params.params()?;
    let init = a.init.spec()?;
    let tape = init.build()?;
    let (dlo, dhi) = default_range(&params, &init, &tape, a.region.steps);
    let config = RunConfig {
        command: command.into(),
        params,
        init,
        steps: a.region.steps,
        xmin: a.region.xmin.unwrap_or(dlo),
        xmax: a.region.xmax.unwrap_or(dhi),
        format: usage(a.format.parse::<OutputFormat>())?,
        window_mode: WindowMode::Anchored,
        orientation: usage(a.region.orientation.parse::<Orientation>())?,
    };
    if config.xmax < config.xmin {
        return Err(Error::Usage(format!(
            "empty x-range {}..={}",
            config.xmin, config.xmax
        )));
    }
    let d = Diagram::evolve_parallel(&tape, &params, config.steps, a.region.jobs);
    Ok((config, d))
}

fn header_comments(config: &RunConfig) -> Vec<String> {
    let seed = match &config.init {
        InitSpec::Random { seed, .. } => format!("seed: {seed} (ChaCha8)"),
        _ => "seed: none".into(),
    };
    vec![
        config.header_line(),
        format!("params: {}", config.params),
        seed,
        format!("x-range: {}..={}", config.xmin, config.xmax),
        format!("orientation: {}", config.orientation),
    ]
}

fn cmd_evolve(command: &str, a: &EvolveArgs) -> Result<bool> {
    let (config, d) = build_config(command, a)?;
    let comments = header_comments(&config);
    let bitmap = Bitmap::from_diagram(&d, config.xmin, config.xmax, config.orientation);
    let mut w = output(a.region.out.as_deref())?;
    match config.format {
        OutputFormat::Pbm => write_pbm_ascii(&mut w, &bitmap, &comments)?,
        OutputFormat::PbmRaw => write_pbm_binary(&mut w, &bitmap, &comments)?,
        OutputFormat::Csv => {
            let columns: Vec<i64> = (config.xmin..=config.xmax).collect();
            let mut labels: Vec<i64> = (0..=config.steps as i64).collect();
            if config.orientation == Orientation::T0Bottom {
                labels.reverse();
            }
            write_csv(&mut w, &bitmap, &columns, &labels, &comments)?
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut w, &DensityReport::new(&config, &d))?;
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(true)
}

fn cmd_stats(a: &EvolveArgs) -> Result<bool> {
    let (config, d) = build_config(
        "stats",
        &EvolveArgs {
            format: "json".into(),
            ..a.clone()
        },
    )?;
    write_json(a.region.out.as_deref(), &DensityReport::new(&config, &d))?;
    Ok(true)
}

fn cmd_solve(a: &SolveArgs) -> Result<bool> {
    let board = read_board(&a.board)?;
    let mode = usage(a.window_mode.parse::<WindowMode>())?;
    let triangle = match (&a.triangle, &a.request) {
        (Some(t), None) => usage(t.parse::<Triangle>())?,
        (None, Some(p)) => {
            serde_json::from_str::<SolveRequest>(&std::fs::read_to_string(p)?)?.triangle
        }
        _ => {
            return Err(Error::Usage(
                "give exactly one of --triangle or --request".into(),
            ))
        }
    };
    let solution = Solver::with_mode(&board, mode).solve(&triangle)?;
    write_json(a.out.as_deref(), &solution)?;
    Ok(true)
}

fn sweep_options(s: &SweepArgs, mode: WindowMode, y_min: i64) -> SweepOptions {
    SweepOptions {
        xmin: s.xmin,
        xmax: s.xmax,
        y_min,
        y_max: s.ymax,
        h_max: s.hmax,
        mode,
        cap: s.cap,
        jobs: s.jobs.max(1),
    }
}

fn report_mismatches(r: &EquivalenceReport) {
    for m in &r.mismatches {
        eprintln!("mismatch: {}", serde_json::to_string(m).unwrap_or_default());
    }
    eprintln!("mismatches: {}", r.mismatch_count);
}

fn cmd_thm1(a: &Thm1Args) -> Result<bool> {
    let board = read_board(&a.board)?;
    let mode = usage(a.window_mode.parse::<WindowMode>())?;
    let report = theorem1_verify(&board, &sweep_options(&a.sweep, mode, 1))?;
    report_mismatches(&report);
    write_json(a.sweep.out.as_deref(), &report)?;
    Ok(report.holds())
}

fn cmd_lemma1(a: &Lemma1Args) -> Result<bool> {
    let (params, tape) = match &a.board {
        Some(p) => {
            let b = read_board(p)?;
            (*b.params(), b.level0().clone())
        }
        None => (a.params.params()?, a.init.spec()?.build()?),
    };
    let d = evolve(&tape, &params, a.tmax.max(0) as usize);
    let report = lemma1_sweep(&d, a.xmin, a.xmax, a.tmax, a.cap)?;
    eprintln!("failures: {}", report.failure_count);
    write_json(a.out.as_deref(), &report)?;
    Ok(report.failure_count == 0)
}

fn cmd_doubling(a: &DoublingArgs) -> Result<bool> {
    let (spec, run) = a.base.run()?;
    let orientation = usage(a.orientation.parse::<Orientation>())?;
    let (dlo, dhi) = a.base.level0_range(&run, &spec);
    let (xmin, xmax) = (a.xmin.unwrap_or(dlo), a.xmax.unwrap_or(dhi));
    let mut levels = Vec::new();
    for (n, d) in run.levels().iter().enumerate() {
        let (lo, hi) = (xmin << n, ((xmax + 1) << n) - 1);
        let config = RunConfig {
            command: "doubling".into(),
            params: run.params_at(n),
            init: spec.clone(),
            steps: d.steps(),
            xmin: lo,
            xmax: hi,
            format: OutputFormat::Pbm,
            window_mode: WindowMode::Anchored,
            orientation,
        };
        let mut comments = header_comments(&config);
        comments.push(format!("doubling level: {n}"));
        let path = PathBuf::from(format!("{}{n}.pbm", a.out_prefix));
        let mut bytes = Vec::new();
        write_pbm_ascii(
            &mut bytes,
            &Bitmap::from_diagram(d, lo, hi, orientation),
            &comments,
        )?;
        std::fs::write(&path, &bytes)?;
        levels.push(json!({
            "n": n,
            "params": run.params_at(n),
            "steps": d.steps(),
            "xmin": lo,
            "xmax": hi,
            "initial": run.initial(n).expect("level").to_string(),
            "file": path.display().to_string(),
            "sha256": sha256(&bytes),
        }));
    }
    let manifest = json!({
        "command": "doubling",
        "base_params": run.base_params(),
        "init": spec.to_string(),
        "orientation": orientation,
        "levels": levels,
    });
    write_json(
        Some(Path::new(&format!("{}manifest.json", a.out_prefix))),
        &manifest,
    )?;
    Ok(true)
}

fn sha256(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn cmd_thm2(a: &Thm2Args) -> Result<bool> {
    if a.base.n == 0 {
        return Err(Error::Usage("verify-thm2 needs --n >= 1".into()));
    }
    let (spec, run) = a.base.run()?;
    let (dlo, dhi) = a.base.level0_range(&run, &spec);
    let mut reports = Vec::new();
    for n in 0..run.n_max() {
        let opts = SweepOptions {
            xmin: a.xmin.unwrap_or(dlo) << n,
            xmax: a.xmax.unwrap_or(dhi) << n,
            y_min: 0,
            y_max: a.ymax,
            h_max: a.hmax,
            mode: WindowMode::Anchored,
            cap: a.cap,
            jobs: a.jobs.max(1),
        };
        let r = theorem2_verify(&run, n, &opts)?;
        report_mismatches(&r);
        reports.push(r);
    }
    let ok = reports.iter().all(EquivalenceReport::holds);
    write_json(
        a.out.as_deref(),
        &json!({ "init": spec.to_string(), "reports": reports }),
    )?;
    Ok(ok)
}

fn cmd_stars(a: &StarsArgs) -> Result<bool> {
    let (spec, run) = a.base.run()?;
    if a.seed_level > run.n_max() {
        return Err(Error::Usage(format!(
            "--seed-level {} exceeds --n {}",
            a.seed_level,
            run.n_max()
        )));
    }
    let per_level: Vec<_> = run
        .levels()
        .iter()
        .enumerate()
        .map(|(n, d)| json!({ "n": n, "stars": find_all_stars(d, n) }))
        .collect();
    let seeds = find_all_stars(run.level(a.seed_level).expect("checked"), a.seed_level);
    let lineages = seeds
        .iter()
        .take(a.max_lineages)
        .map(|s| star_limit_check(&run, s))
        .collect::<Result<Vec<_>>>()?;
    write_json(
        a.out.as_deref(),
        &json!({
            "base_params": run.base_params(),
            "init": spec.to_string(),
            "levels": per_level,
            "lineages": lineages,
        }),
    )?;
    Ok(true)
}

fn cmd_superpose(a: &SuperposeArgs) -> Result<bool> {
    let (spec, run) = a.base.run()?;
    let orientation = usage(a.orientation.parse::<Orientation>())?;
    let (dlo, dhi) = a.base.level0_range(&run, &spec);
    let (xmin, xmax) = (a.xmin.unwrap_or(dlo), a.xmax.unwrap_or(dhi));
    let mut img = superpose(&run, &a.levels, xmin, xmax)?;
    if orientation == Orientation::T0Bottom {
        img = img.flipped();
    }
    let levels: Vec<String> = a.levels.iter().map(|n| n.to_string()).collect();
    let palette: Vec<String> = a
        .levels
        .iter()
        .enumerate()
        .map(|(k, n)| {
            let [r, g, b] = PALETTE[k % PALETTE.len()];
            format!("{n}=#{r:02x}{g:02x}{b:02x}")
        })
        .collect();
    let comments = vec![
        format!(
            "blocking-ca superpose L={} R={} init={} steps={} levels={} xmin={xmin} xmax={xmax} orientation={orientation}",
            a.base.left,
            a.base.right,
            spec,
            a.base.steps,
            levels.join(",")
        ),
        format!("palette: {} background=#ffffff", palette.join(" ")),
    ];
    let mut w = output(a.out.as_deref())?;
    match a.format.as_str() {
        "ppm" => write_ppm(&mut w, &img, &comments)?,
        "pgm" => write_pgm(&mut w, img.width, img.height, &img.to_gray(), &comments)?,
        other => return Err(Error::Usage(format!("unknown superpose format `{other}`"))),
    }
    w.flush()?;
    Ok(true)
}

/// Rule number of an 8-entry table, pattern `p` contributing bit `p`.
fn rule_number(table: &[bool]) -> u32 {
    table
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(p, _)| 1u32 << p)
        .sum()
}

fn cmd_truth_table(a: &ParamArgs) -> Result<bool> {
    let params = a.params()?;
    let table = truth_table(&params)?;
    let bits: String = table.iter().map(|&b| if b { '1' } else { '0' }).collect();
    let mut report = json!({
        "params": params,
        "bit_order": "entry p is the output when the full window, read left to right, spells p in binary (leftmost cell most significant)",
        "table": bits,
    });
    if table.len() == 8 {
        let rule = rule_number(&table);
        let mirror: Vec<bool> = (0..8)
            .map(|p: usize| table[((p & 1) << 2) | (p & 2) | (p >> 2)])
            .collect();
        let complement: Vec<bool> = (0..8).map(|p| !table[7 - p]).collect();
        let both: Vec<bool> = (0..8).map(|p: usize| !mirror[7 - p]).collect();
        let variants = json!({
            "direct": rule,
            "mirrored": rule_number(&mirror),
            "complemented": rule_number(&complement),
            "mirrored_complemented": rule_number(&both),
        });
        let matches_110 = [
            rule,
            rule_number(&mirror),
            rule_number(&complement),
            rule_number(&both),
        ]
        .contains(&110);
        report["elementary_rule"] = variants;
        report["matches_rule_110"] = json!(matches_110);
    }
    write_json(None, &report)?;
    Ok(true)
}
