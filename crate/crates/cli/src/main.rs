use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use padic_hypergeom::curves::{count_hessian, count_weierstrass, HessianCurve, WeierstrassCurve};
use padic_hypergeom::field::FqField;
use padic_hypergeom::gamma::{gamma_p, GammaCache};
use padic_hypergeom::hypergeom::{GFunction, GParams};
use padic_hypergeom::padic::PrecisionContext;
use padic_hypergeom::rational::Rational;
use padic_hypergeom::verify::{run_suite, Format, RangeSpec, Strategy, Suite};

#[derive(Parser)]
#[command(name = "pgg", version, about = "p-adic hypergeometric functions over finite fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Morita's Gamma_p at a rational p-adic integer.
    Gamma {
        /// A rational such as 1/3 or -2.
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        p: u64,
        #[arg(long = "K", default_value_t = 5)]
        k: u32,
    },
    /// Evaluates nGn[a; b | t] over F_q.
    Gg {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Parameter lists, e.g. "1/4,3/4;1/3,2/3".
        #[arg(long)]
        params: String,
        /// A nonzero field element: an integer, or coordinates "c0,c1,..." for r > 1.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long = "K")]
        k: Option<u32>,
    },
    /// Counts points on a curve over F_q.
    Count {
        #[arg(value_enum)]
        curve: CurveKind,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
    },
    /// Checks identities over a range of fields and reports every instance.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveKind {
    Weier,
    Hessian,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Mt1,
    Cor2,
    Bs1,
    Mc,
    Hessian,
    Lemma31,
    Lemma5,
    Eq29,
    Gauss,
    Ortho,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 7)]
    pmin: u64,
    #[arg(long, default_value_t = 50)]
    pmax: u64,
    /// Extension degrees, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    r: Vec<u32>,
    #[arg(long, default_value_t = 2500)]
    qmax: u64,
    /// Precision override; the default depends on p and r.
    #[arg(long = "K")]
    k: Option<u32>,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run the Hessian closed form at p = 5.
    #[arg(long)]
    allow_p5: bool,
    /// At most this many seeded parameter tuples per theorem and field.
    #[arg(long, conflicts_with = "exhaustive")]
    sample: Option<usize>,
    /// Enumerate every parameter tuple, including for the curve families.
    #[arg(long)]
    exhaustive: bool,
    /// Also run the corrected forms of the main theorem and its corollaries.
    #[arg(long)]
    corrected: bool,
    /// Record wall-clock time per record (reports are then no longer reproducible).
    #[arg(long)]
    timings: bool,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Gamma { x, p, k } => gamma(&x, p, k),
        Cmd::Gg { p, r, params, t, k } => gg(p, r, &params, &t, k),
        Cmd::Count { curve, p, r, a, b, d } => count(curve, p, r, a, b, d),
        Cmd::Verify(args) => verify(args),
    }
}

fn digits(mut n: u64, p: u64, k: u32) -> String {
    (0..k)
        .map(|_| {
            let d = n % p;
            n /= p;
            d.to_string()
        })
        .collect::<Vec<_>>()
        .join(".")
}

fn gamma(x: &str, p: u64, k: u32) -> ExitCode {
    let run = || -> padic_hypergeom::Result<(u64, i64)> {
        let x: Rational = x.parse()?;
        let cache = GammaCache::new(PrecisionContext::new(p, k)?);
        let g = gamma_p(&x, &cache)?;
        Ok((g.residue(), g.signed()))
    };
    match run() {
        Ok((res, signed)) => {
            println!("{res} mod {p}^{k}");
            println!("signed {signed}");
            println!("digits {}", digits(res, p, k));
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn gg(p: u64, r: u32, params: &str, t: &str, k: Option<u32>) -> ExitCode {
    let run = || -> padic_hypergeom::Result<String> {
        let params: GParams = params.parse()?;
        let field = Arc::new(FqField::build(p, r)?);
        let k = k.unwrap_or_else(|| PrecisionContext::default_precision(p, r));
        let t = field.parse(t)?;
        let g = GFunction::new(&params, &field, k)?;
        g.eval(t)?.render(k as i64)
    };
    match run() {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn count(curve: CurveKind, p: u64, r: u32, a: Option<String>, b: Option<String>, d: Option<String>) -> ExitCode {
    let run = || -> Result<String, String> {
        let field = FqField::build(p, r).map_err(|e| e.to_string())?;
        let el = |name: &str, v: Option<String>| -> Result<_, String> {
            let v = v.ok_or_else(|| format!("--{name} is required"))?;
            field.parse(&v).map_err(|e| e.to_string())
        };
        match curve {
            CurveKind::Weier => {
                let e = WeierstrassCurve::new(el("a", a)?, el("b", b)?, &field).map_err(|e| e.to_string())?;
                let c = count_weierstrass(&e, &field);
                Ok(format!("affine {} projective {} trace {}", c.affine, c.projective, c.trace))
            }
            CurveKind::Hessian => {
                let c = HessianCurve::new(el("d", d)?, &field).map_err(|e| e.to_string())?;
                Ok(format!("affine {}", count_hessian(&c, &field)))
            }
        }
    };
    match run() {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let suite = match args.suite {
        SuiteArg::Mt1 => Suite::Mt1,
        SuiteArg::Cor2 => Suite::Cor2,
        SuiteArg::Bs1 => Suite::Bs1,
        SuiteArg::Mc => Suite::Mc,
        SuiteArg::Hessian => Suite::Hessian,
        SuiteArg::Lemma31 => Suite::Lemma31,
        SuiteArg::Lemma5 => Suite::Lemma5,
        SuiteArg::Eq29 => Suite::Eq29,
        SuiteArg::Gauss => Suite::Gauss,
        SuiteArg::Ortho => Suite::Ortho,
        SuiteArg::All => Suite::All,
    };
    let format = match args.format {
        FormatArg::Table => Format::Table,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let strategy = match (args.sample, args.exhaustive) {
        (Some(n), _) => Strategy::Sample(n),
        (None, true) => Strategy::Exhaustive,
        (None, false) => Strategy::Standard,
    };
    let spec = RangeSpec {
        suite,
        p_min: args.pmin,
        p_max: args.pmax,
        r: args.r,
        q_max: args.qmax,
        k: args.k,
        strategy,
        seed: args.seed,
        allow_p5: args.allow_p5,
        corrected: args.corrected,
        timings: args.timings,
    };
    let report = match run_suite(&spec) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let written = match &args.out {
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            report.write(format, &mut w)?;
            w.flush()
        }),
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            report.write(format, &mut w)
        }
    };
    if let Err(e) = written {
        return usage(format!("cannot write report: {e}"));
    }
    if args.out.is_some() {
        let s = &report.summary;
        eprintln!("total {} passed {} failed {} skipped {}", s.total, s.passed, s.failed, s.skipped);
    }
    ExitCode::from(report.exit_code() as u8)
}
