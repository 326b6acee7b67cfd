//! `findom`: homological invariants and verification suites from the command line.

mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use findom_core::approx::{enumerate_tilting, AddClosure, TiltingKind};
use findom_core::finalg::algebra::EnumerationStrategy;
use findom_core::finalg::homological::{
    cosyzygy_with_injectives, ext_dim, hom_dim, projective_cover, syzygy_with_projectives,
};
use findom_core::input::{InputDocument, InputKind};
use findom_core::suites::{run_suite, SUITES};
use findom_core::verdicts::{
    classify_algebra, classify_series, fa_condition4, mueller_domdim, scan_nakayama, ScanPredicate,
    ScanRegion,
};
use findom_core::{
    par, Error, ExtNat, FiniteAlgebra, Limits, Quantity, RightModule, SeriesKind, Tri,
};

use report::{
    AlgebraSummary, AnalyzeReport, Direction, ExtReport, MuellerReport, Report, ResolveReport,
    ResolveStep, TiltingReport,
};

#[derive(Parser, Debug)]
#[command(
    name = "findom",
    version,
    about = "Dominant, finitistic and Gorenstein dimensions of finite-dimensional algebras"
)]
struct Cli {
    /// Step limit for resolutions that may not terminate.
    #[arg(long, global = true, default_value_t = 24)]
    cutoff: u32,
    /// Seed for randomized isomorphism sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the structured report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: FINDOM_WORKERS or all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants and classification flags of an algebra.
    Analyze { file: PathBuf },
    /// Minimal projective or injective resolution of a module.
    Resolve {
        file: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum, default_value_t = DirArg::Proj)]
        direction: DirArg,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
    /// Hom and Ext dimensions between two modules.
    Ext {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Dominant dimension of End(M) and the approximation test for a generator-cogenerator M.
    Mueller {
        file: PathBuf,
        /// Comma-separated module specs.
        #[arg(long)]
        summands: String,
    },
    /// Enumerate basic tilting or cotilting modules.
    Tilting {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Tilting)]
        kind: KindArg,
    },
    /// Exhaustive predicate scan over Kupisch series.
    ScanNakayama {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_entry: Option<usize>,
        #[arg(long, value_enum)]
        kind: Option<SeriesArg>,
        #[arg(long, default_value = "ngas-conjecture")]
        predicate: ScanPredicate,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DirArg {
    Proj,
    Inj,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Tilting,
    Cotilting,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesArg {
    Cyclic,
    Linear,
}

fn summary(doc: &InputDocument) -> AlgebraSummary {
    let kind = match doc.kind {
        InputKind::Kupisch => "kupisch",
        InputKind::Monomial => "monomial",
        InputKind::Table => "table",
        InputKind::Group => "group",
    };
    AlgebraSummary {
        kind: kind.to_string(),
        characteristic: doc.field.p(),
        dim: doc.algebra.dim(),
        simples: doc.algebra.simple_count(),
        series: doc.series.as_ref().map(|s| s.to_string()),
    }
}

fn indecomposable_names(alg: &FiniteAlgebra, count: usize) -> Vec<String> {
    match alg.strategy() {
        Some(EnumerationStrategy::Kupisch(s)) if !alg.is_opposite_side() => {
            s.intervals().iter().map(|m| m.to_string()).collect()
        }
        Some(EnumerationStrategy::UniserialLocal) => {
            (1..=count).map(|k| format!("A/J^{k}")).collect()
        }
        _ => (1..=count).map(|k| format!("#{k}")).collect(),
    }
}

fn module_of(doc: &InputDocument, spec: &str) -> findom_core::Result<(String, RightModule)> {
    let parsed = doc.parse_token(spec)?;
    Ok((parsed.to_string(), doc.module(&parsed)?))
}

fn resolve(
    doc: &InputDocument,
    spec: &str,
    dir: Direction,
    steps: usize,
) -> findom_core::Result<ResolveReport> {
    let (name, m) = module_of(doc, spec)?;
    let n = doc.algebra.simple_count();
    let term = |x: &RightModule| match dir {
        Direction::Proj => projective_cover(x).multiplicities(n),
        Direction::Inj => projective_cover(&x.dual()).multiplicities(n),
    };
    let mut out = vec![ResolveStep {
        step: 0,
        dim: m.dim(),
        dim_vector: m.dim_vector(),
        term: term(&m),
    }];
    let mut cur = m;
    let mut dimension = if cur.is_zero() { Some(0) } else { None };
    for step in 1..=steps {
        if cur.is_zero() {
            break;
        }
        cur = match dir {
            Direction::Proj => syzygy_with_projectives(&cur),
            Direction::Inj => cosyzygy_with_injectives(&cur),
        };
        out.push(ResolveStep {
            step,
            dim: cur.dim(),
            dim_vector: cur.dim_vector(),
            term: term(&cur),
        });
        if cur.is_zero() {
            dimension = Some(step - 1);
        }
    }
    Ok(ResolveReport {
        module: name,
        direction: dir,
        steps: out,
        dimension,
    })
}

fn mueller(
    doc: &InputDocument,
    list: &str,
    limits: Limits,
    workers: usize,
) -> findom_core::Result<MuellerReport> {
    let specs = doc.parse_list(list)?;
    let parts: Vec<RightModule> = specs
        .iter()
        .map(|s| doc.module(s))
        .collect::<findom_core::Result<_>>()?;
    let m = AddClosure::from_summands(&doc.algebra, &parts, limits.seed)?;
    let d = mueller_domdim(&m, limits)?;
    let (condition4, fa) = match d {
        ExtNat::Finite(k) if k >= 2 => {
            let r = fa_condition4(&m, k, limits, workers)?;
            let h = r.holds;
            (Some(r), h)
        }
        ExtNat::AtLeast(_) => (None, Tri::Unknown),
        _ => (None, Tri::False),
    };
    Ok(MuellerReport {
        summands: specs.iter().map(|s| s.to_string()).collect(),
        generator_dims: m.generators().iter().map(RightModule::dim).collect(),
        domdim_end: Quantity::bounded(d, limits.cutoff),
        condition4,
        finitistic_auslander: fa,
    })
}

fn run(cli: &Cli) -> findom_core::Result<Report> {
    let limits = Limits {
        cutoff: cli.cutoff,
        seed: cli.seed,
    };
    let workers = cli
        .workers
        .filter(|&w| w > 0)
        .unwrap_or_else(par::default_workers);
    Ok(match &cli.command {
        Command::Analyze { file } => {
            let doc = InputDocument::load(file)?;
            let classification = match &doc.series {
                Some(s) => classify_series(s),
                None => classify_algebra(&doc.algebra, limits),
            };
            Report::Analyze(AnalyzeReport {
                algebra: summary(&doc),
                classification,
            })
        }
        Command::Resolve {
            file,
            module,
            direction,
            steps,
        } => {
            let doc = InputDocument::load(file)?;
            let dir = match direction {
                DirArg::Proj => Direction::Proj,
                DirArg::Inj => Direction::Inj,
            };
            Report::Resolve(resolve(&doc, module, dir, *steps)?)
        }
        Command::Ext {
            file,
            from,
            to,
            max_degree,
        } => {
            let doc = InputDocument::load(file)?;
            let (fname, m) = module_of(&doc, from)?;
            let (tname, n) = module_of(&doc, to)?;
            let ext = (1..=*max_degree).map(|k| ext_dim(k, &m, &n)).collect();
            Report::Ext(ExtReport {
                from: fname,
                to: tname,
                hom: hom_dim(&m, &n),
                ext,
            })
        }
        Command::Mueller { file, summands } => {
            let doc = InputDocument::load(file)?;
            Report::Mueller(mueller(&doc, summands, limits, workers)?)
        }
        Command::Tilting { file, kind } => {
            let doc = InputDocument::load(file)?;
            let k = match kind {
                KindArg::Tilting => TiltingKind::Tilting,
                KindArg::Cotilting => TiltingKind::Cotilting,
            };
            let t = enumerate_tilting(&doc.algebra, k, limits, workers)?;
            Report::Tilting(TiltingReport {
                indecomposables: indecomposable_names(&doc.algebra, t.indecomposables.len()),
                complete: t.is_complete(),
                kind: t.kind,
                modules: t.modules,
                cutoff: limits.cutoff,
            })
        }
        Command::ScanNakayama {
            n,
            max_entry,
            kind,
            predicate,
            n_min,
        } => {
            let kinds = match kind {
                Some(SeriesArg::Cyclic) => vec![SeriesKind::Cyclic],
                Some(SeriesArg::Linear) => vec![SeriesKind::Linear],
                None => vec![SeriesKind::Linear, SeriesKind::Cyclic],
            };
            let region = ScanRegion {
                n_min: *n_min,
                n_max: *n,
                max_entry: *max_entry,
                kinds,
            };
            Report::ScanNakayama(scan_nakayama(*predicate, &region, workers))
        }
        Command::Verify { suite } => Report::Verify(run_suite(suite, limits, workers)?),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            let text = if cli.json {
                report.to_json() + "\n"
            } else {
                report.render()
            };
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            let msg = match e {
                Error::Input(m) => m,
                other => other.to_string(),
            };
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
