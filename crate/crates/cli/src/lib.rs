//! The `ctilde` command line.
//!
//! `--rank M` always counts generators: rank `M` is the affine group whose
//! Dynkin diagram has `M` nodes, written C̃_{M−1} in the usual notation.
//! Generators are written `t`, `s1 … s{M-2}` and `u` (the affine end).
//!
//! Exit codes: 0 success, 1 a checked claim failed, 2 bad input, 3 the
//! element cap (`CTILDE_MAX_ELEMENTS`) was hit.

use std::io::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ctilde_core::enumerate::{enumerate_ball_with, length_series};
use ctilde_core::fullcomm::{classify, element_is_fc, enumerate_fc_elements, realize, CtildeNormalForm};
use ctilde_core::hecke::{lemma_decompose, r_embed_hecke};
use ctilde_core::json::{hecke_from_json, hecke_to_json, parse_element_list, tl_from_json, tl_to_json};
use ctilde_core::linalg::{checked_rank, rows_of};
use ctilde_core::towers::{a_embed, inject, l_compose, p_embed, Injection};
use ctilde_core::verify::{self, Suite};
use ctilde_core::{CoxeterGraph, Error, Family, GroupElement, Hecke, Limits, Rational, Result, Tl, TlAlgebra};

#[derive(Parser, Debug)]
#[command(name = "ctilde", version, about = "Exact computations in the C̃ tower")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical reduced word and length.
    Reduce {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "ctilde")]
        family: String,
        word: String,
    },
    /// Normal form of a fully commutative element.
    Classify {
        #[arg(long)]
        rank: usize,
        /// Wrap the form with its affine length and partition class.
        #[arg(long)]
        full: bool,
        word: String,
    },
    /// Elements by length, or the truncated length series.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "ctilde")]
        family: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        max_affine: Option<usize>,
        #[arg(long)]
        fc_only: bool,
        #[arg(long)]
        series: bool,
    },
    /// Image under a tower map.
    Inject {
        #[arg(long, value_enum)]
        map: MapArg,
        #[arg(long)]
        rank: usize,
        word: String,
    },
    /// Hecke algebra operations; elements are read as JSON from stdin.
    Hecke {
        #[command(subcommand)]
        op: HeckeOp,
    },
    /// Temperley-Lieb operations; elements are read as JSON from stdin.
    Tl {
        #[command(subcommand)]
        op: TlOp,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_len: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapArg {
    #[value(name = "p")]
    P,
    #[value(name = "i")]
    LowerI,
    #[value(name = "l")]
    L,
    #[value(name = "I")]
    I,
    #[value(name = "J")]
    J,
}

#[derive(Subcommand, Debug)]
enum HeckeOp {
    /// Product of a JSON array of elements, left to right.
    Mul {
        #[arg(long)]
        rank: usize,
    },
    /// R into the next rank.
    Embed {
        #[arg(long)]
        rank: usize,
    },
    /// Split R(g_w) into its g_{P(w)} term and the residual.
    Decompose {
        #[arg(long)]
        rank: usize,
        word: String,
    },
}

#[derive(Subcommand, Debug)]
enum TlOp {
    /// Product of a JSON array of elements, left to right.
    Mul {
        #[arg(long)]
        rank: usize,
    },
    /// R into the next rank.
    Embed {
        #[arg(long)]
        rank: usize,
    },
    /// Rank over ℚ(q) of a JSON array of elements.
    Rank {
        #[arg(long)]
        rank: usize,
    },
}

struct Output {
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

impl Output {
    fn line(&mut self, s: impl AsRef<str>) {
        self.stdout.extend_from_slice(s.as_ref().as_bytes());
        self.stdout.push(b'\n');
    }

    fn log(&mut self, s: impl AsRef<str>) {
        self.stderr.extend_from_slice(s.as_ref().as_bytes());
        self.stderr.push(b'\n');
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Domain(_) => 2,
        Error::Resource { .. } => 3,
        Error::Invariant(_) | Error::LemmaViolation(_) => 1,
    }
}

/// Runs one invocation. `argv` excludes the program name.
pub fn run_command(argv: &[String], stdin: &[u8]) -> (i32, Vec<u8>, Vec<u8>) {
    let mut out = Output { stdout: Vec::new(), stderr: Vec::new() };
    let cli = match Cli::try_parse_from(std::iter::once("ctilde".to_string()).chain(argv.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                out.stdout.extend_from_slice(text.as_bytes());
            } else {
                out.stderr.extend_from_slice(text.as_bytes());
            }
            return (code, out.stdout, out.stderr);
        }
    };
    let code = match dispatch(cli.command, stdin, &mut out) {
        Ok(code) => code,
        Err(e) => {
            out.log(format!("error: {e}"));
            if let Error::Invariant(_) | Error::LemmaViolation(_) = e {
                out.line(json!({ "pass": false, "error": e.to_string() }).to_string());
            }
            exit_code(&e)
        }
    };
    (code, out.stdout, out.stderr)
}

pub fn main_with_io() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut stdin = Vec::new();
    if needs_stdin(&args) {
        if let Err(e) = std::io::Read::read_to_end(&mut std::io::stdin(), &mut stdin) {
            eprintln!("error: reading stdin: {e}");
            return 2;
        }
    }
    let (code, stdout, stderr) = run_command(&args, &stdin);
    let _ = std::io::stdout().write_all(&stdout);
    let _ = std::io::stderr().write_all(&stderr);
    code
}

fn needs_stdin(args: &[String]) -> bool {
    matches!(args.first().map(String::as_str), Some("hecke" | "tl"))
        && !args.iter().any(|a| a == "decompose" || a == "--help" || a == "-h")
}

fn graph(family: &str, rank: usize) -> Result<Arc<CoxeterGraph>> {
    CoxeterGraph::new(family.parse::<Family>()?, rank)
}

fn element_json(x: &GroupElement) -> Value {
    let mut v = json!({ "word": x.format(), "length": x.length() });
    if let Some(a) = x.graph().affine_generator() {
        v["affine_length"] = json!(x.count(a));
    }
    v
}

fn form_value(form: &CtildeNormalForm) -> Value {
    serde_json::from_str(&form.to_json()).expect("normal forms serialize")
}

fn read_text(stdin: &[u8]) -> Result<&str> {
    std::str::from_utf8(stdin).map_err(|_| Error::Input("stdin is not UTF-8".into()))
}

fn dispatch(command: Command, stdin: &[u8], out: &mut Output) -> Result<i32> {
    let limits = Limits::from_env();
    match command {
        Command::Reduce { rank, family, word } => {
            let g = graph(&family, rank)?;
            let x = GroupElement::parse(&g, &word)?;
            out.line(json!({ "word": x.format(), "length": x.length() }).to_string());
        }
        Command::Classify { rank, full, word } => {
            let g = CoxeterGraph::ctilde(rank)?;
            let x = GroupElement::parse(&g, &word)?;
            let form = classify(&x)?;
            let affine = form.affine_length();
            let class = form.partition_class();
            out.log(format!("affine length {affine}, partition class {class:?}"));
            if full {
                out.line(json!({ "form": form_value(&form), "affine_length": affine, "partition": class }).to_string());
            } else {
                out.line(form.to_json());
            }
        }
        Command::Enumerate { rank, family, max_len, max_affine, fc_only, series } => {
            let g = graph(&family, rank)?;
            let elements = if fc_only {
                enumerate_fc_elements(&g, max_len, max_affine, limits)?
            } else {
                let ball = enumerate_ball_with(&g, max_len, limits)?;
                match (max_affine, g.affine_generator()) {
                    (Some(k), Some(a)) => ball.into_iter().filter(|x| x.count(a) <= k).collect(),
                    (Some(_), None) => return Err(Error::Input("--max-affine needs a C̃ graph".into())),
                    (None, _) => ball,
                }
            };
            out.log(format!("{} elements", elements.len()));
            if series {
                out.line(serde_json::to_string(&length_series(&elements, max_len)).expect("series"));
            } else {
                for x in &elements {
                    out.line(element_json(x).to_string());
                }
            }
        }
        Command::Inject { map, rank, word } => {
            let source = match map {
                MapArg::L => CoxeterGraph::atilde(rank)?,
                _ => CoxeterGraph::ctilde(rank)?,
            };
            let x = GroupElement::parse(&source, &word)?;
            let (y, form) = match map {
                MapArg::P => {
                    let y = p_embed(&x)?;
                    let form = if element_is_fc(&y) { Some(classify(&y)?) } else { None };
                    (y, form)
                }
                MapArg::LowerI => (a_embed(&x)?, None),
                MapArg::L => (l_compose(&x)?, None),
                MapArg::I | MapArg::J => {
                    let which = if matches!(map, MapArg::I) { Injection::I } else { Injection::J };
                    let (y, f) = inject(which, &x, &classify(&x)?)?;
                    (y, Some(f))
                }
            };
            let mut v = element_json(&y);
            v["target"] = json!(y.graph().to_string());
            v["form"] = form.as_ref().map_or(Value::Null, form_value);
            out.line(v.to_string());
        }
        Command::Hecke { op } => return hecke(op, stdin, out),
        Command::Tl { op } => return tl(op, stdin, out),
        Command::Verify { suite, rank, max_len } => {
            let suite: Suite = suite.parse()?;
            let reports = verify::run(suite, rank, max_len, limits)?;
            for r in &reports {
                for c in &r.checks {
                    out.log(format!(
                        "{} / {}: {} ({} cases)",
                        r.suite,
                        c.name,
                        if c.pass { "pass" } else { "FAIL" },
                        c.checked
                    ));
                }
            }
            out.line(serde_json::to_string(&reports).expect("reports serialize"));
            return Ok(if reports.iter().all(|r| r.pass) { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn hecke(op: HeckeOp, stdin: &[u8], out: &mut Output) -> Result<i32> {
    match op {
        HeckeOp::Mul { rank } => {
            let g = CoxeterGraph::ctilde(rank)?;
            let mut acc = Hecke::one(&g);
            for text in parse_element_list(read_text(stdin)?)? {
                acc = acc.mul(&hecke_from_json(&g, &text)?)?;
            }
            out.line(hecke_to_json(&acc));
        }
        HeckeOp::Embed { rank } => {
            let g = CoxeterGraph::ctilde(rank)?;
            let x = hecke_from_json(&g, read_text(stdin)?)?;
            out.line(hecke_to_json(&r_embed_hecke(&x)?));
        }
        HeckeOp::Decompose { rank, word } => {
            let g = CoxeterGraph::ctilde(rank)?;
            let x = GroupElement::parse(&g, &word)?;
            let (a, residual) = lemma_decompose::<Rational>(&x)?;
            let residual: Value = serde_json::from_str(&hecke_to_json(&residual)).expect("valid JSON");
            out.line(json!({ "lead": p_embed(&x)?.format(), "q_power": a, "residual": residual }).to_string());
        }
    }
    Ok(0)
}

fn tl(op: TlOp, stdin: &[u8], out: &mut Output) -> Result<i32> {
    match op {
        TlOp::Mul { rank } => {
            let g = CoxeterGraph::ctilde(rank)?;
            let alg = TlAlgebra::new(&g);
            let mut acc = Tl::one(&g);
            for text in parse_element_list(read_text(stdin)?)? {
                acc = alg.mul(&acc, &tl_from_json(&g, &text)?)?;
            }
            out.line(tl_to_json(&acc));
        }
        TlOp::Embed { rank } => {
            let g = CoxeterGraph::ctilde(rank)?;
            let x = tl_from_json(&g, read_text(stdin)?)?;
            let target = CoxeterGraph::ctilde(rank + 1)?;
            out.line(tl_to_json(&TlAlgebra::new(&target).r_embed(&x)?));
        }
        TlOp::Rank { rank } => {
            let g = CoxeterGraph::ctilde(rank)?;
            let elements = parse_element_list(read_text(stdin)?)?
                .iter()
                .map(|t| tl_from_json(&g, t).map(Tl::into_combination))
                .collect::<Result<Vec<_>>>()?;
            let report = checked_rank(&rows_of(elements.iter()))?;
            out.line(json!({ "rank": report.rank, "size": elements.len(), "point_ranks": report.point_ranks }).to_string());
        }
    }
    Ok(0)
}

/// Round trip used by tests: the word `realize` produces for a classified
/// element.
pub fn realize_word(rank: usize, form_json: &str) -> Result<String> {
    let g = CoxeterGraph::ctilde(rank)?;
    let form = CtildeNormalForm::from_json(form_json)?;
    Ok(realize(&g, &form)?.format(&g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(str::to_string).collect()
    }

    #[test]
    fn stdin_only_for_algebra_ops() {
        assert!(needs_stdin(&args("tl mul --rank 3")));
        assert!(needs_stdin(&args("hecke embed --rank 3")));
        assert!(!needs_stdin(&args("hecke decompose --rank 3 t")));
        assert!(!needs_stdin(&args("reduce --rank 3 t")));
        assert!(!needs_stdin(&args("tl --help")));
    }

    #[test]
    fn error_codes() {
        assert_eq!(exit_code(&Error::Input("x".into())), 2);
        assert_eq!(exit_code(&Error::Invariant("x".into())), 1);
        assert_eq!(run_command(&args("nonsense"), b"").0, 2);
        assert_eq!(run_command(&args("--version"), b"").0, 0);
    }

    #[test]
    fn realize_inverts_classify() {
        assert_eq!(realize_word(3, r#"{"class":"affine1","i":1,"v":[[1,1]]}"#).unwrap(), "s1 u s1");
    }
}
