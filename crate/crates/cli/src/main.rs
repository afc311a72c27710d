//! Command-line front end for the involutive-basis library.

mod problem;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use invobase::completion::{
    complete, minimal_candidate, two_sided_basis, Caps, InvolutiveBasis,
};
use invobase::local::{complete_local, complete_via_homogenization, mora_normal_form};
use invobase::mono_completion::complete_monomial;
use invobase::oracle::{equivalence_check, Verdict};
use invobase::reduction::{involutive_normal_form, ReductionMode};
use invobase::scalar::{EuclideanScalar, RatPoly, Scalar};
use invobase::{Algebra, DivisionKind, DivisionSpec, Error as LibError, Poly, Strength};

use problem::{parse_order, parse_problem, qpoly_scalars, CoeffKind, Problem};

#[derive(Parser)]
#[command(name = "invobase", version, about = "Involutive bases in solvable polynomial algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute an involutive basis of the ideal in the problem file.
    Complete {
        file: String,
        #[arg(long)]
        json: bool,
        /// Override the division from the problem file (janet, pommaret).
        #[arg(long)]
        division: Option<String>,
        /// Override the order from the problem file (same grammar as the
        /// `order` line, space-separated).
        #[arg(long)]
        order: Option<String>,
        /// Complete the two-sided ideal (left basis closed under right
        /// multiplication).
        #[arg(long)]
        two_sided: bool,
        /// Fully autoreduce to the minimal monic basis afterwards.
        #[arg(long)]
        minimal: bool,
        /// Include the discovery log in the output.
        #[arg(long)]
        trace: bool,
        /// Semigroup-order pipeline: "mora" or "homog".
        #[arg(long)]
        local: Option<String>,
        /// With `--local homog`: apply the Janet replacement rule for a
        /// strong basis.
        #[arg(long)]
        strong_janet: bool,
        /// Permit non-terminating divisions in the local Mora pipeline.
        #[arg(long)]
        allow_iterated: bool,
        /// Override the coefficient domain (rational, int, qpoly).
        #[arg(long)]
        coeff: Option<String>,
        /// Cap on basis insertions before aborting with exit code 2.
        #[arg(long, default_value_t = 5_000)]
        max_insertions: usize,
    },
    /// Complete the generators, read as monomials, to an involutive
    /// monomial basis.
    MonoComplete {
        file: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        division: Option<String>,
        /// Insertion cap.
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
    },
    /// Involutive normal form of the target against the generators.
    Nf {
        file: String,
        #[arg(long)]
        json: bool,
        /// Also print the standard-representation coefficients.
        #[arg(long)]
        repr: bool,
    },
    /// Mora normal form of the target (semigroup orders allowed).
    MoraNf {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the involutive completion against the Buchberger oracle.
    OracleCheck {
        file: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Verify the solvable-type axioms of the problem's algebra.
    ValidateAlgebra {
        file: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 4)]
        degree_cap: u32,
    },
    /// Re-run the completion repeatedly and confirm identical output.
    Bench {
        file: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 3)]
        iterations: usize,
    },
}

/// A verdict mismatch or failed certificate: exit code 3.
#[derive(Debug)]
struct Verification(String);

impl std::fmt::Display for Verification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failure: {}", self.0)
    }
}

impl std::error::Error for Verification {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = if let Some(le) = e.downcast_ref::<LibError>() {
                match le {
                    LibError::CompletionCapExceeded { .. }
                    | LibError::NormalFormCapExceeded { .. }
                    | LibError::StepCapExceeded { .. } => 2,
                    LibError::VerificationFailure(_) => 3,
                    _ => 1,
                }
            } else if e.downcast_ref::<Verification>().is_some() {
                3
            } else {
                1
            };
            ExitCode::from(code)
        }
    }
}

fn load(file: &str) -> Result<Problem> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| anyhow!("cannot read {file}: {e}"))?;
    parse_problem(&text)
}

fn override_spec(
    p: &mut Problem,
    division: Option<String>,
    order: Option<String>,
    coeff: Option<String>,
) -> Result<()> {
    if let Some(d) = division {
        p.division = DivisionSpec::new(match d.as_str() {
            "janet" => DivisionKind::Janet,
            "pommaret" => DivisionKind::Pommaret,
            other => bail!("unknown division '{other}'"),
        });
    }
    if let Some(o) = order {
        let toks: Vec<&str> = o.split_whitespace().collect();
        let n = problem::algebra_arity(&p.algebra);
        let (spec, line) = parse_order(&toks, n)?;
        p.order = spec;
        p.order_line = line;
    }
    if let Some(c) = coeff {
        p.coeff = CoeffKind::parse(&c)?;
    }
    Ok(())
}

fn emit(json_mode: bool, human: &str, value: &Value) {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        print!("{human}");
    }
}

fn strength_name(s: Strength) -> &'static str {
    match s {
        Strength::Weak => "weak",
        Strength::Strong => "strong",
    }
}

fn mult_names(mult: &std::collections::BTreeSet<usize>, vars: &[String]) -> Vec<String> {
    mult.iter().map(|&i| vars[i].clone()).collect()
}

fn basis_value<C: Scalar>(b: &InvolutiveBasis<C>, vars: &[String], trace: bool) -> Value {
    let gens: Vec<Value> = b
        .generators
        .iter()
        .zip(&b.mult)
        .map(|(g, m)| {
            json!({
                "poly": g.display(vars),
                "mult": mult_names(m, vars),
            })
        })
        .collect();
    let mut v = json!({
        "strength": strength_name(b.strength),
        "division": b.division.kind.name(),
        "count": b.generators.len(),
        "generators": gens,
    });
    if trace {
        v["discovered"] = Value::Array(
            b.discovered.iter().map(|p| Value::String(p.display(vars))).collect(),
        );
    }
    v
}

fn basis_human<C: Scalar>(b: &InvolutiveBasis<C>, vars: &[String], trace: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "kind: {}", strength_name(b.strength));
    let _ = writeln!(s, "division: {}", b.division.kind.name());
    let _ = writeln!(s, "generators ({}):", b.generators.len());
    for (g, m) in b.generators.iter().zip(&b.mult) {
        let _ = writeln!(s, "  {}  [mult: {}]", g.display(vars), mult_names(m, vars).join(" "));
    }
    if trace {
        let _ = writeln!(s, "discovered ({}):", b.discovered.len());
        for p in &b.discovered {
            let _ = writeln!(s, "  {}", p.display(vars));
        }
    }
    s
}

fn header_value(p: &Problem, command: &str) -> Value {
    json!({
        "command": command,
        "algebra": p.algebra.describe(),
        "order": p.order_line,
        "coeff": p.coeff.name(),
    })
}

fn merge(header: Value, body: Value) -> Value {
    let mut m = header.as_object().cloned().unwrap_or_default();
    if let Some(b) = body.as_object() {
        for (k, v) in b {
            m.insert(k.clone(), v.clone());
        }
    }
    Value::Object(m)
}

#[allow(clippy::too_many_arguments)]
fn run_complete(
    p: &Problem,
    json_mode: bool,
    two_sided: bool,
    minimal: bool,
    trace: bool,
    local: Option<String>,
    strong_janet: bool,
    allow_iterated: bool,
    max_insertions: usize,
) -> Result<()> {
    let caps = Caps {
        basis_insertions: max_insertions,
        ..Caps::default()
    };
    match p.coeff {
        CoeffKind::Rational => {
            let a: Algebra<BigRational> = p.build_algebra()?;
            let f = p.polys(&a, &HashMap::new())?;
            let (basis, homog_size) = match local.as_deref() {
                None => {
                    let b = if two_sided {
                        two_sided_basis(&f, p.division, &p.order, &a, &caps)?
                    } else {
                        complete(&f, p.division, &p.order, &a, &caps)?
                    };
                    (b, None)
                }
                Some("mora") => {
                    if two_sided {
                        bail!("--two-sided is not supported with --local");
                    }
                    (
                        complete_local(&f, p.division, &p.order, &a, &caps, allow_iterated)?,
                        None,
                    )
                }
                Some("homog") => {
                    if two_sided {
                        bail!("--two-sided is not supported with --local");
                    }
                    let h = complete_via_homogenization(
                        &f, p.division, &p.order, &a, &caps, strong_janet,
                    )?;
                    (h.basis, Some(h.homogeneous_size))
                }
                Some(other) => bail!("unknown --local pipeline '{other}' (mora, homog)"),
            };
            let basis = if minimal {
                minimal_candidate(&basis, &a, &caps)?
            } else {
                basis
            };
            let mut body = basis_value(&basis, &a.vars, trace);
            let mut human = basis_human(&basis, &a.vars, trace);
            if let Some(hs) = homog_size {
                body["homogeneous_size"] = json!(hs);
                let _ = writeln!(human, "homogeneous intermediate: {hs} generators");
            }
            emit(json_mode, &human, &merge(header_value(p, "complete"), body));
        }
        CoeffKind::Int => {
            complete_ring::<BigInt>(p, json_mode, trace, &HashMap::new(), local.as_deref(), &caps)?
        }
        CoeffKind::QPoly => {
            complete_ring::<RatPoly>(p, json_mode, trace, &qpoly_scalars(), local.as_deref(), &caps)?
        }
    }
    Ok(())
}

fn complete_ring<C: EuclideanScalar>(
    p: &Problem,
    json_mode: bool,
    trace: bool,
    scalars: &HashMap<String, C>,
    local: Option<&str>,
    caps: &Caps,
) -> Result<()> {
    if local.is_some() {
        bail!("--local requires field coefficients");
    }
    let a: Algebra<C> = p.build_algebra()?;
    let f = p.polys(&a, scalars)?;
    let basis = invobase::ringcoeff::complete_over_ring(&f, p.division, &p.order, &a, caps)?;
    let body = basis_value(&basis, &a.vars, trace);
    let human = basis_human(&basis, &a.vars, trace);
    emit(json_mode, &human, &merge(header_value(p, "complete"), body));
    Ok(())
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Complete {
            file,
            json,
            division,
            order,
            two_sided,
            minimal,
            trace,
            local,
            strong_janet,
            allow_iterated,
            coeff,
            max_insertions,
        } => {
            let mut p = load(&file)?;
            override_spec(&mut p, division, order, coeff)?;
            run_complete(
                &p,
                json,
                two_sided,
                minimal,
                trace,
                local,
                strong_janet,
                allow_iterated,
                max_insertions,
            )
        }
        Cmd::MonoComplete {
            file,
            json,
            division,
            cap,
        } => {
            let mut p = load(&file)?;
            override_spec(&mut p, division, None, None)?;
            let a: Algebra<BigRational> = p.build_algebra()?;
            let set = p.monomials(&a)?;
            let r = complete_monomial(p.division, &set, cap, false)?;
            let display =
                |m: &invobase::MultiIndex| Poly::monomial(m.clone(), BigRational::from_integer(1.into())).display(&a.vars);
            let gens: Vec<Value> = r
                .generators
                .iter()
                .zip(&r.mult)
                .map(|(m, mu)| {
                    json!({"monomial": display(m), "mult": mult_names(mu, &a.vars)})
                })
                .collect();
            let body = json!({
                "strength": strength_name(r.strength),
                "division": p.division.kind.name(),
                "count": r.generators.len(),
                "generators": gens,
                "added": r.added.iter().map(&display).collect::<Vec<_>>(),
            });
            let mut human = String::new();
            let _ = writeln!(human, "kind: {}", strength_name(r.strength));
            let _ = writeln!(human, "generators ({}):", r.generators.len());
            for (m, mu) in r.generators.iter().zip(&r.mult) {
                let _ = writeln!(
                    human,
                    "  {}  [mult: {}]",
                    display(m),
                    mult_names(mu, &a.vars).join(" ")
                );
            }
            let _ = writeln!(
                human,
                "added: {}",
                r.added.iter().map(&display).collect::<Vec<_>>().join(", ")
            );
            emit(json, &human, &merge(header_value(&p, "mono-complete"), body));
            Ok(())
        }
        Cmd::Nf { file, json, repr } => {
            let p = load(&file)?;
            let a: Algebra<BigRational> = p.build_algebra()?;
            let f = p.polys(&a, &HashMap::new())?;
            let target = p.target_poly(&a, &HashMap::new())?;
            let rep = involutive_normal_form(
                &target,
                &f,
                p.division,
                &p.order,
                &a,
                ReductionMode::Full,
                Caps::default().nf_steps,
            )?;
            rep.verify(&target, &f, &a, &p.order)?;
            let mut body = json!({
                "remainder": rep.remainder.display(&a.vars),
                "zero": rep.remainder.is_zero(),
            });
            let mut human = format!("remainder: {}\n", rep.remainder.display(&a.vars));
            if repr {
                body["coefficients"] = Value::Array(
                    rep.coefficients
                        .iter()
                        .map(|c| Value::String(c.display(&a.vars)))
                        .collect(),
                );
                for (c, g) in rep.coefficients.iter().zip(&f) {
                    let _ = writeln!(
                        human,
                        "  ({}) * ({})",
                        c.display(&a.vars),
                        g.display(&a.vars)
                    );
                }
            }
            emit(json, &human, &merge(header_value(&p, "nf"), body));
            Ok(())
        }
        Cmd::MoraNf { file, json } => {
            let p = load(&file)?;
            let a: Algebra<BigRational> = p.build_algebra()?;
            let f = p.polys(&a, &HashMap::new())?;
            let target = p.target_poly(&a, &HashMap::new())?;
            let res = mora_normal_form(&target, &f, p.division, &p.order, &a, &Caps::default())?;
            res.verify(&target, &f, &a, &p.order)?;
            let body = json!({
                "remainder": res.remainder.display(&a.vars),
                "unit": res.unit.display(&a.vars),
                "zero": res.remainder.is_zero(),
                "involutive": res.involutive,
            });
            let human = format!(
                "remainder: {}\nunit: {}\ninvolutive: {}\n",
                res.remainder.display(&a.vars),
                res.unit.display(&a.vars),
                res.involutive
            );
            emit(json, &human, &merge(header_value(&p, "mora-nf"), body));
            Ok(())
        }
        Cmd::OracleCheck {
            file,
            json,
            seed,
            trials,
        } => {
            let p = load(&file)?;
            let a: Algebra<BigRational> = p.build_algebra()?;
            let f = p.polys(&a, &HashMap::new())?;
            let verdict =
                equivalence_check(&f, &a, &p.order, p.division, seed, trials, &Caps::default())?;
            let (body, human) = match &verdict {
                Verdict::Agree => (
                    json!({"verdict": "agree", "seed": seed, "trials": trials}),
                    format!("verdict: agree (seed {seed}, {trials} trials)\n"),
                ),
                Verdict::Disagree { witness } => (
                    json!({"verdict": "disagree", "witness": witness, "seed": seed}),
                    format!("verdict: disagree\nwitness: {witness}\n"),
                ),
            };
            emit(json, &human, &merge(header_value(&p, "oracle-check"), body));
            if let Verdict::Disagree { witness } = verdict {
                return Err(Verification(witness).into());
            }
            Ok(())
        }
        Cmd::ValidateAlgebra {
            file,
            json,
            degree_cap,
        } => {
            let p = load(&file)?;
            let a: Algebra<BigRational> = p.build_algebra()?;
            let report = invobase::algebra::validate(&a, &p.order, degree_cap)?;
            let ok = report.axiom_iii_ok && report.associativity_ok && report.centred;
            let body = json!({
                "ok": ok,
                "axiom_iii": report.axiom_iii_ok,
                "associativity": report.associativity_ok,
                "centred": report.centred,
                "degree_cap": report.degree_cap,
            });
            let human = format!(
                "ok: {ok}\naxiom iii: {}\nassociativity: {}\ncentred: {}\ndegree cap: {}\n",
                report.axiom_iii_ok, report.associativity_ok, report.centred, report.degree_cap
            );
            emit(json, &human, &merge(header_value(&p, "validate-algebra"), body));
            if !ok {
                return Err(Verification("algebra validation failed".into()).into());
            }
            Ok(())
        }
        Cmd::Bench {
            file,
            json,
            iterations,
        } => {
            let p = load(&file)?;
            let a: Algebra<BigRational> = p.build_algebra()?;
            let f = p.polys(&a, &HashMap::new())?;
            let caps = Caps::default();
            let mut outputs: Vec<String> = Vec::new();
            let start = std::time::Instant::now();
            for _ in 0..iterations.max(1) {
                let b = complete(&f, p.division, &p.order, &a, &caps)?;
                outputs.push(
                    b.generators
                        .iter()
                        .map(|g| g.display(&a.vars))
                        .collect::<Vec<_>>()
                        .join("; "),
                );
            }
            let elapsed = start.elapsed();
            let deterministic = outputs.windows(2).all(|w| w[0] == w[1]);
            // Timing goes to stderr so stdout stays byte-identical.
            eprintln!(
                "bench: {} iterations in {:.3} s",
                iterations.max(1),
                elapsed.as_secs_f64()
            );
            let body = json!({
                "iterations": iterations.max(1),
                "deterministic": deterministic,
                "generators": outputs[0],
            });
            let human = format!(
                "iterations: {}\ndeterministic: {deterministic}\ngenerators: {}\n",
                iterations.max(1),
                outputs[0]
            );
            emit(json, &human, &merge(header_value(&p, "bench"), body));
            if !deterministic {
                return Err(Verification("bench runs diverged".into()).into());
            }
            Ok(())
        }
    }
}
