//! `supertrop`: command-line access to the supertropical linear algebra
//! library. Inputs are matrix files (`-` for stdin) or `--inline` literals
//! with `;` as the row break. Vector lists are given one vector per row.

mod io;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use supertrop::bilinear::{decompose, gram_schmidt, gs_step, isotropic_strip, BilinearForm};
use supertrop::det::{det_with, Engine};
use supertrop::dual::{dual_base, dual_eval_matrix, is_ghost_monic, is_tropically_onto, MonicVerdict};
use supertrop::oracle::{run_suite, sample, SampleKind, Verdict};
use supertrop::quadratic::{
    form_from_q, hyperbolic_plane, is_hyperbolic_plane, orthogonal_sum, quasilinearity_check, QuadraticForm,
};
use supertrop::{independent, Matrix, Scalar, Vector};

use io::*;

#[derive(Parser)]
#[command(name = "supertrop", version, about = "Exact supertropical linear algebra")]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Inputs {
    /// Matrix files; `-` reads standard input.
    paths: Vec<String>,
    /// Inline matrix literal, rows separated by `;`. Repeatable; appended
    /// after the files.
    #[arg(long = "inline", value_name = "ROWS", allow_hyphen_values = true)]
    inline: Vec<String>,
}

impl Inputs {
    fn load(&self, n: usize, what: &str) -> Result<Vec<Matrix>, Failure> {
        expect_count(load_matrices(&self.paths, &self.inline)?, n, what)
    }

    fn one(&self, what: &str) -> Result<Matrix, Failure> {
        Ok(self.load(1, what)?.remove(0))
    }

    fn form_and_vectors(&self) -> Result<(BilinearForm, Vec<Vector>), Failure> {
        let mut ms = self.load(2, "Gram matrix, then vectors as rows")?;
        let vs = ms.pop().expect("two inputs").row_vectors();
        let form = BilinearForm::new(ms.pop().expect("two inputs"))?;
        Ok((form, vs))
    }
}

#[derive(Args)]
struct Sampling {
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Defaults to $SUPERTROP_SEED, then 0.
    #[arg(long, env = "SUPERTROP_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant with its witness permutations.
    Det {
        /// `expand` (permutation expansion) or `assign` (assignment solver)
        #[arg(long, default_value = "expand", value_parser = parse_engine)]
        engine: Engine,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Adjoint matrix.
    Adj(Inputs),
    /// Pseudo-inverse adj(A)/|A| of a nonsingular matrix.
    Pinv(Inputs),
    /// Quasi-identities I_A = A A^∇ and I'_A = A^∇ A.
    Quasiid(Inputs),
    /// Closure I_A A.
    Close(Inputs),
    /// Tropical rank.
    Rank(Inputs),
    /// Independence of the rows.
    Indep(Inputs),
    /// Dual base of a closed base (base vectors are the columns), one
    /// functional per row.
    Dualbase(Inputs),
    /// Evaluation grid ε_i(b_j) of the dual base.
    Dualgrid(Inputs),
    /// Gram matrix of the rows of the second input under the first.
    Gram(Inputs),
    /// Whether the Gram matrix defines a supertropically symmetric form.
    Symmetric(Inputs),
    /// ⟨v,v⟩, isotropy and normality of each row vector.
    Classify(Inputs),
    /// Orthogonality, compatibility and Cauchy-Schwartz flags of two vectors.
    Pair(Inputs),
    /// Gram-Schmidt over the row vectors. With --step, correct the last row
    /// against the preceding ones.
    Gs {
        #[arg(long)]
        step: bool,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Isotropic strip of two vectors.
    Strip(Inputs),
    /// Anisotropic/alternate split of an independent base (rows).
    Decompose(Inputs),
    /// Quadratic forms.
    Quad {
        #[command(subcommand)]
        op: QuadOp,
    },
    /// Run a property suite.
    Check {
        suite: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Ghost-monic test of the map v ↦ M v.
    Monic {
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Tropically-onto test (full rank) of a square matrix.
    Onto(Inputs),
    /// Draw a seeded sample.
    Sample {
        /// scalar, tangible-scalar, vector, matrix, nonsingular-matrix,
        /// symmetric-gram or closed-base.
        kind: String,
        #[arg(long, default_value_t = 2)]
        rows: usize,
        #[arg(long, default_value_t = 2)]
        cols: usize,
        #[arg(long, env = "SUPERTROP_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        index: u64,
    },
}

#[derive(Subcommand)]
enum QuadOp {
    /// Q(v) for each row vector.
    Eval {
        #[arg(long)]
        diagonal: bool,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Strict / quasilinear / neither.
    Check {
        #[arg(long)]
        diagonal: bool,
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Gram matrix of the bilinear form B_Q.
    Fromq {
        #[arg(long)]
        diagonal: bool,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Gram matrix of the hyperbolic plane with off-diagonal entry `a`.
    Hyper {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Whether two row vectors span a hyperbolic plane under a Gram matrix.
    Ishyper(Inputs),
    /// Orthogonal sum of two quadratic forms of the same kind.
    Osum {
        #[arg(long)]
        diagonal: bool,
        #[command(flatten)]
        inputs: Inputs,
    },
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    s.parse().map_err(|e: supertrop::Error| e.to_string())
}

fn quad(m: Matrix, diagonal: bool) -> Result<QuadraticForm, Failure> {
    if diagonal {
        Ok(QuadraticForm::diagonal(single_row(&m, "diagonal quadratic form")?)?)
    } else {
        Ok(QuadraticForm::from_form(BilinearForm::new(m)?))
    }
}

fn quad_output(q: &QuadraticForm) -> Output {
    match q {
        QuadraticForm::Diagonal { q } => {
            let row = Vector::new(q.clone());
            Output::new(row.to_string(), json!({ "kind": "diagonal", "q": row }))
        }
        QuadraticForm::FormBacked { form } => Output::new(
            matrix_text(form.gram()),
            json!({ "kind": "form-backed", "gram": matrix_json(form.gram()) }),
        ),
    }
}

fn matrix_output(a: &Matrix) -> Output {
    Output::new(matrix_text(a), matrix_json(a))
}

fn bool_output(b: bool) -> Output {
    Output::new(b.to_string(), json!(b))
}

fn flags_text(value: &serde_json::Value) -> String {
    value
        .as_object()
        .map(|o| {
            o.iter()
                .map(|(k, v)| format!("{k}: {}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
                .collect::<Vec<_>>()
                .join("\n")
        })
        .unwrap_or_default()
}

fn run(command: &Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Det { engine, inputs } => {
            let a = inputs.one("square matrix")?;
            let r = det_with(&a, *engine)?;
            Output::new(r.value.to_string(), json!(r))
        }
        Command::Adj(i) => matrix_output(&i.one("square matrix")?.adjoint()?),
        Command::Pinv(i) => matrix_output(&i.one("square matrix")?.pseudo_inverse()?),
        Command::Quasiid(i) => {
            let (l, r) = i.one("square matrix")?.quasi_identities()?;
            Output::new(
                format!("I_A\n{}\n\nI'_A\n{}", matrix_text(&l), matrix_text(&r)),
                json!({ "left": matrix_json(&l), "right": matrix_json(&r) }),
            )
        }
        Command::Close(i) => matrix_output(&i.one("square matrix")?.close()?),
        Command::Rank(i) => {
            let r = i.one("matrix")?.rank()?;
            Output::new(r.to_string(), json!(r))
        }
        Command::Indep(i) => bool_output(independent(&i.one("vectors as rows")?.row_vectors())?),
        Command::Dualbase(i) => matrix_output(&dual_base(&i.one("closed base")?)?.row_matrix()),
        Command::Dualgrid(i) => matrix_output(&dual_eval_matrix(&dual_base(&i.one("closed base")?)?)?),
        Command::Gram(i) => {
            let (form, vs) = i.form_and_vectors()?;
            matrix_output(&form.gram_of(&vs)?)
        }
        Command::Symmetric(i) => {
            bool_output(BilinearForm::new(i.one("Gram matrix")?)?.is_supertropically_symmetric())
        }
        Command::Classify(i) => {
            let (form, vs) = i.form_and_vectors()?;
            let classes = vs.iter().map(|v| form.classify_vector(v)).collect::<Result<Vec<_>, _>>()?;
            let text = classes
                .iter()
                .map(|c| {
                    let kind = if c.isotropic { "isotropic" } else { "nonisotropic" };
                    let normal = if c.normal { " normal" } else { "" };
                    format!("{} {kind}{normal}", c.value)
                })
                .collect::<Vec<_>>()
                .join("\n");
            Output::new(text, json!(classes))
        }
        Command::Pair(i) => {
            let (form, vs) = i.form_and_vectors()?;
            let [v, w] = vs.as_slice() else {
                return Err(input_error(format!("pair needs exactly 2 vectors, got {}", vs.len())));
            };
            let flags = json!(form.pair_class(v, w)?);
            Output::new(flags_text(&flags), flags)
        }
        Command::Gs { step, inputs } => {
            let (form, vs) = inputs.form_and_vectors()?;
            if *step {
                let (v, base) = vs.split_last().expect("matrix has a row");
                let r = gs_step(&form, base, v)?;
                Output::new(r.corrected.to_string(), json!(r))
            } else {
                let r = gram_schmidt(&form, &vs)?;
                Output::new(
                    format!("orthogonal\n{}\nleftover\n{}", vectors_text(&r.orthogonal), vectors_text(&r.leftover)),
                    json!(r),
                )
            }
        }
        Command::Strip(i) => {
            let (form, vs) = i.form_and_vectors()?;
            let [v1, v2] = vs.as_slice() else {
                return Err(input_error(format!("strip needs exactly 2 vectors, got {}", vs.len())));
            };
            let strip = json!(isotropic_strip(&form, v1, v2)?);
            Output::new(flags_text(&strip), strip)
        }
        Command::Decompose(i) => {
            let (form, vs) = i.form_and_vectors()?;
            let d = decompose(&form, &vs)?;
            Output::new(
                format!("aniso\n{}\nalternate\n{}", vectors_text(&d.aniso), vectors_text(&d.alternate)),
                json!(d),
            )
        }
        Command::Quad { op } => run_quad(op)?,
        Command::Check { suite, sampling } => {
            let report = run_suite(suite, sampling.trials, sampling.seed)?;
            let verdict = serde_json::to_value(report.verdict).expect("verdict");
            let mut text = format!(
                "{}: {} ({} trials, seed {})",
                report.suite,
                verdict.as_str().unwrap_or_default(),
                report.trials,
                report.seed
            );
            for f in &report.failures {
                text.push_str(&format!(
                    "\n  trial {}: {}\n    expected {}\n    got {}",
                    f.index, f.input, f.expected, f.got
                ));
            }
            let mut out = Output::new(text, json!(report));
            if report.verdict == Verdict::Counterexample {
                out.status = EXIT_COUNTEREXAMPLE;
            }
            out
        }
        Command::Monic { sampling, inputs } => {
            let m = inputs.one("square matrix")?;
            let verdict = is_ghost_monic(&m, sampling.trials as usize, sampling.seed)?;
            let text = match &verdict {
                MonicVerdict::Proved => "proved".to_string(),
                MonicVerdict::NoCounterexample { trials } => format!("no counterexample ({trials} trials)"),
                MonicVerdict::Refuted { witness } => format!("refuted: M({witness}) is ghost"),
            };
            let mut out = Output::new(text, json!(verdict));
            if !verdict.holds() {
                out.status = EXIT_COUNTEREXAMPLE;
            }
            out
        }
        Command::Onto(i) => bool_output(is_tropically_onto(&i.one("square matrix")?)?),
        Command::Sample { kind, rows, cols, seed, index } => {
            let kind: SampleKind = kind.parse()?;
            let value = sample(kind, (*rows, *cols), *seed, *index)?;
            let text = match &value {
                supertrop::oracle::Sample::Scalar(x) => x.to_string(),
                supertrop::oracle::Sample::Vector(v) => v.to_string(),
                supertrop::oracle::Sample::Matrix(a) => matrix_text(a),
            };
            let json = match &value {
                supertrop::oracle::Sample::Matrix(a) => matrix_json(a),
                other => json!(other),
            };
            Output::new(text, json)
        }
    })
}

fn run_quad(op: &QuadOp) -> Result<Output, Failure> {
    Ok(match op {
        QuadOp::Eval { diagonal, inputs } => {
            let mut ms = inputs.load(2, "quadratic form, then vectors as rows")?;
            let vs = ms.pop().expect("two inputs").row_vectors();
            let q = quad(ms.pop().expect("two inputs"), *diagonal)?;
            let values = vs.iter().map(|v| q.eval(v)).collect::<Result<Vec<Scalar>, _>>()?;
            Output::new(
                values.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n"),
                json!(values),
            )
        }
        QuadOp::Check { diagonal, sampling, inputs } => {
            let q = quad(inputs.one("quadratic form")?, *diagonal)?;
            let r = quasilinearity_check(&q, sampling.trials, sampling.seed)?;
            let verdict = serde_json::to_value(r.verdict).expect("verdict");
            Output::new(verdict.as_str().unwrap_or_default().to_string(), json!(r))
        }
        QuadOp::Fromq { diagonal, inputs } => {
            let q = quad(inputs.one("quadratic form")?, *diagonal)?;
            matrix_output(form_from_q(&q)?.gram())
        }
        QuadOp::Hyper { a } => {
            let a: Scalar = a.parse()?;
            matrix_output(hyperbolic_plane(a)?.gram())
        }
        QuadOp::Ishyper(i) => {
            let (form, vs) = i.form_and_vectors()?;
            let [b1, b2] = vs.as_slice() else {
                return Err(input_error(format!("ishyper needs exactly 2 vectors, got {}", vs.len())));
            };
            bool_output(is_hyperbolic_plane(&form, b1, b2)?)
        }
        QuadOp::Osum { diagonal, inputs } => {
            let mut ms = inputs.load(2, "two quadratic forms")?;
            let q2 = quad(ms.pop().expect("two inputs"), *diagonal)?;
            let q1 = quad(ms.pop().expect("two inputs"), *diagonal)?;
            quad_output(&orthogonal_sum(&q1, &q2)?)
        }
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Det { .. } => "det",
        Command::Adj(_) => "adj",
        Command::Pinv(_) => "pinv",
        Command::Quasiid(_) => "quasiid",
        Command::Close(_) => "close",
        Command::Rank(_) => "rank",
        Command::Indep(_) => "indep",
        Command::Dualbase(_) => "dualbase",
        Command::Dualgrid(_) => "dualgrid",
        Command::Gram(_) => "gram",
        Command::Symmetric(_) => "symmetric",
        Command::Classify(_) => "classify",
        Command::Pair(_) => "pair",
        Command::Gs { .. } => "gs",
        Command::Strip(_) => "strip",
        Command::Decompose(_) => "decompose",
        Command::Quad { op } => match op {
            QuadOp::Eval { .. } => "quad eval",
            QuadOp::Check { .. } => "quad check",
            QuadOp::Fromq { .. } => "quad fromq",
            QuadOp::Hyper { .. } => "quad hyper",
            QuadOp::Ishyper(_) => "quad ishyper",
            QuadOp::Osum { .. } => "quad osum",
        },
        Command::Check { .. } => "check",
        Command::Monic { .. } => "monic",
        Command::Onto(_) => "onto",
        Command::Sample { .. } => "sample",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(&cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(stdout, "{}", out.render(name, cli.format == Format::Json));
            ExitCode::from(out.status)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status)
        }
    }
}
