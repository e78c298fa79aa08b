use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use altsnake::det::{det_laplace, det_leibniz, sigma_set};
use altsnake::json::{
    expansion_terms_to_json, kl_table_to_json, lweight_to_json, merge, snake_data_from_json, snake_to_json,
    violation_to_json, SnakeData,
};
use altsnake::{
    build_matrix, dominant_weights, ell_weight_set, gen_exmore, gen_mu_lambda, kl_table, snake_dim,
    standard_expansion, validate, AlternatingSnake, Error,
};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

#[derive(Parser)]
#[command(name = "altsnake", version, about = "Alternating snake modules: validation, factorization, determinant expansions, characters and coefficient tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input snake JSON, `-` for stdin.
    input: PathBuf,
    /// Output path, `-` for stdout.
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
    /// Raise the rank of the input before validation.
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the snake conditions and list every violation.
    Validate(Io),
    /// Prime factors, with primality and stability flags.
    Decompose(Io),
    /// Determinant expansion of the class of a stable snake.
    DetFormula {
        #[command(flatten)]
        io: Io,
        /// Cross-check the cofactor determinant against the permutation sum.
        #[arg(long)]
        oracle: bool,
    },
    /// Dimension and ℓ-weights of a single-run snake from lattice paths.
    Character {
        #[command(flatten)]
        io: Io,
        /// Only the weights with nonnegative exponents.
        #[arg(long)]
        dominant: bool,
    },
    /// Coefficients of the irreducible class in the Verma basis.
    Kl(Io),
    /// Snakes from the explicit families.
    #[command(subcommand)]
    Gen(Gen),
}

#[derive(Subcommand)]
enum Gen {
    /// `([μ1,λ2], [μ3,λ1], …)` with breaks `(1, …, r)`.
    MuLambda {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        mu: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        lambda: Vec<i64>,
        #[arg(long)]
        n: u32,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
    /// Prime stable family from a break vector and endpoint chains.
    Exmore {
        #[arg(long, value_delimiter = ',', required = true)]
        breaks: Vec<usize>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        i: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        j: Vec<i64>,
        /// Rank, at least the smallest admissible one.
        #[arg(long)]
        n: Option<u32>,
        #[arg(short, long, default_value = "-")]
        output: PathBuf,
    },
}

const INPUT: u8 = 2;
const REFUSAL: u8 = 3;
const MISMATCH: u8 = 4;

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: INPUT, kind: "invalid_input", message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_refusal() {
            Failure { code: REFUSAL, kind: "refused", message: e.to_string() }
        } else {
            Failure::input(e.to_string())
        }
    }
}

fn read_input(path: &PathBuf) -> Result<Value, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::input(format!("stdin: {}", e)))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {}", path.display(), e)))?;
    }
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("bad JSON: {}", e)))
}

fn write_output(path: &PathBuf, v: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string(v).expect("values serialize");
    if path.as_os_str() == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Failure::input(format!("stdout: {}", e)))
    } else {
        fs::write(path, text).map_err(|e| Failure::input(format!("{}: {}", path.display(), e)))
    }
}

fn with_rank(mut data: SnakeData, n: Option<u32>) -> Result<SnakeData, Failure> {
    if let Some(n) = n {
        if n < data.n {
            return Err(Failure::input(format!("--n {} would lower the rank {} of the input", n, data.n)));
        }
        data.n = n;
    }
    Ok(data)
}

fn load(io: &Io) -> Result<SnakeData, Failure> {
    let v = read_input(&io.input)?;
    with_rank(snake_data_from_json(&v)?, io.n)
}

fn load_snake(io: &Io) -> Result<AlternatingSnake, Failure> {
    Ok(load(io)?.build()?)
}

fn number(x: impl ToString) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer"))
}

fn cmd_validate(io: &Io) -> Result<Value, Failure> {
    let data = load(io)?;
    Ok(match validate(&data.intervals, &data.breaks, data.n) {
        Ok(s) => json!({
            "valid": true,
            "runs": s.directions().iter().map(|d| d.name()).collect::<Vec<_>>(),
            "stable": s.is_stable(),
            "prime": s.is_prime(),
        }),
        Err(vs) => json!({
            "valid": false,
            "violations": vs.iter().map(violation_to_json).collect::<Vec<_>>(),
        }),
    })
}

fn cmd_decompose(io: &Io) -> Result<Value, Failure> {
    let s = load_snake(io)?;
    Ok(json!({
        "factors": s.prime_decompose().iter().map(snake_to_json).collect::<Vec<_>>(),
        "prime": s.is_prime(),
        "stable": s.is_stable(),
    }))
}

fn cmd_det_formula(io: &Io, oracle: bool) -> Result<Value, Failure> {
    let s = load_snake(io)?;
    let e = standard_expansion::<BigInt>(&s)?;
    let m = build_matrix(&s);
    if oracle {
        let lap = det_laplace::<BigInt>(&m);
        let leib = det_leibniz::<BigInt>(&m);
        let ring = e.to_ring()?;
        if lap != leib || lap != ring {
            return Err(Failure {
                code: MISMATCH,
                kind: "oracle_mismatch",
                message: format!("cofactor {} / permutation sum {} / expansion {}", lap, leib, ring),
            });
        }
    }
    let mut out = json!({
        "snake": snake_to_json(&s),
        "terms": expansion_terms_to_json(&e),
        "sigma_count": sigma_set(&m).len(),
    });
    if oracle {
        out = merge(out, json!({ "oracle": "agree" }));
    }
    Ok(out)
}

fn cmd_character(io: &Io, dominant: bool) -> Result<Value, Failure> {
    let s = load_snake(io)?;
    let dim = snake_dim(&s)?;
    let weights = if dominant { dominant_weights(&s)? } else { ell_weight_set(&s)? };
    Ok(json!({
        "snake": snake_to_json(&s),
        "dim": number(dim),
        "weights": weights.iter().map(lweight_to_json).collect::<Vec<_>>(),
    }))
}

fn cmd_kl(io: &Io) -> Result<Value, Failure> {
    let s = load_snake(io)?;
    Ok(kl_table_to_json(&kl_table::<BigInt>(&s)?))
}

fn cmd_gen(g: &Gen) -> Result<Value, Failure> {
    match g {
        Gen::MuLambda { mu, lambda, n, .. } => Ok(snake_to_json(&gen_mu_lambda(mu, lambda, *n)?)),
        Gen::Exmore { breaks, i, j, n, .. } => {
            let (s, least) = gen_exmore(breaks, i, j)?;
            let s = match n {
                Some(n) if *n < least => {
                    return Err(Failure::input(format!("--n {} is below the smallest admissible rank {}", n, least)))
                }
                Some(n) => s.with_rank(*n)?,
                None => s,
            };
            Ok(snake_to_json(&s))
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let (name, out, result) = match &cli.command {
        Command::Validate(io) => ("validate", &io.output, cmd_validate(io)),
        Command::Decompose(io) => ("decompose", &io.output, cmd_decompose(io)),
        Command::DetFormula { io, oracle } => ("det-formula", &io.output, cmd_det_formula(io, *oracle)),
        Command::Character { io, dominant } => ("character", &io.output, cmd_character(io, *dominant)),
        Command::Kl(io) => ("kl", &io.output, cmd_kl(io)),
        Command::Gen(g) => match g {
            Gen::MuLambda { output, .. } => ("gen mu-lambda", output, cmd_gen(g)),
            Gen::Exmore { output, .. } => ("gen exmore", output, cmd_gen(g)),
        },
    };
    let report = merge(
        result?,
        json!({ "command": name, "tool_version": env!("CARGO_PKG_VERSION"), "canonical_order": true }),
    );
    write_output(out, &report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let diag = json!({ "code": f.code, "error": f.kind, "message": f.message });
            eprintln!("{}", diag);
            ExitCode::from(f.code)
        }
    }
}
