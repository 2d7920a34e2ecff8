use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use lowk::b4::{run_suite, B4Model, CheckResult, Suite};
use lowk::census::DEFAULT_BRUTE_FORCE_BOUND;
use lowk::classify::{
    maximal_finite_subgroups, maximal_vc_classes_b4, vc_classes_b4, virtually_cyclic_classes_odd, SubgroupDescriptor,
};
use lowk::galois::FieldDescriptor;
use lowk::lowerk::lambda;
use lowk::report::{b4_lower_k_report, build_family, group_report, GroupFamily, Invariant, SCHEMA};
use lowk::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "lowk", version, about = "Lower K-theory of sphere braid group subgroups")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest group order handled by brute-force census.
    #[arg(long, global = true, default_value_t = DEFAULT_BRUTE_FORCE_BOUND)]
    max_brute_force: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a single finite group.
    Group {
        #[arg(value_enum)]
        family: GroupFamily,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "wh,k0,kminus1")]
        invariants: Vec<Invariant>,
        #[arg(long, default_value = "Q")]
        field: FieldDescriptor,
    },
    /// Q_2-classes of order-m elements in Dic_4m, m an odd prime.
    Lambda {
        #[arg(long)]
        m: u64,
    },
    /// Subgroup classification for B_n(S^2).
    Classify {
        #[arg(long)]
        n: u64,
        /// Include virtually cyclic subgroups (odd n, or n = 4).
        #[arg(long)]
        vc: bool,
    },
    B4 {
        #[command(subcommand)]
        command: B4Command,
    },
}

#[derive(Subcommand)]
enum B4Command {
    /// Run the model checks.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Whitehead group, K0~ and K_-1 of Z[B4(S^2)].
    Report,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Mismatch(_) | Error::Construction(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Text => print!("{}", text()),
    }
}

fn descriptor_lines(title: &str, list: &[SubgroupDescriptor]) -> String {
    let mut out = format!("{title}:\n");
    for d in list {
        let mut flags = Vec::new();
        match d.maximal {
            Some(true) => flags.push("maximal".to_string()),
            Some(false) => flags.push("not maximal".to_string()),
            None => {}
        }
        if let Some(k) = d.isomorphism_classes.filter(|&k| k > 1) {
            flags.push(format!("{k} isomorphism classes"));
        }
        if d.infinitely_many_conjugacy_classes == Some(true) {
            flags.push("infinitely many conjugacy classes".into());
        }
        let flags = if flags.is_empty() {
            String::new()
        } else {
            format!(" ({})", flags.join(", "))
        };
        out += &format!("  {}{flags}\n", d.name);
    }
    out
}

fn classify(format: Format, n: u64, vc: bool) -> Result<(), Failure> {
    let maximal = maximal_finite_subgroups(n)?;
    if !vc {
        let value = json!({ "schema": SCHEMA, "n": n, "maximal_finite": maximal });
        emit(format, &value, || descriptor_lines(&format!("maximal finite subgroups of B_{n}(S^2)"), &maximal));
        return Ok(());
    }
    if n == 4 {
        let all = vc_classes_b4();
        let max_vc = maximal_vc_classes_b4();
        let value = json!({
            "schema": SCHEMA,
            "n": n,
            "maximal_finite": maximal,
            "infinite_virtually_cyclic": all,
            "maximal_virtually_cyclic": max_vc,
        });
        emit(format, &value, || {
            descriptor_lines("maximal finite subgroups of B_4(S^2)", &maximal)
                + &descriptor_lines("infinite virtually cyclic subgroups", &all)
                + &descriptor_lines("maximal virtually cyclic subgroups", &max_vc)
        });
        return Ok(());
    }
    let classes = virtually_cyclic_classes_odd(n)?;
    let value = json!({
        "schema": SCHEMA,
        "n": n,
        "maximal_finite": maximal,
        "virtually_cyclic": classes,
    });
    emit(format, &value, || {
        descriptor_lines(&format!("maximal finite subgroups of B_{n}(S^2)"), &maximal)
            + &descriptor_lines("virtually cyclic subgroups", &classes)
    });
    Ok(())
}

fn verify(format: Format, suite: Suite) -> Result<(), Failure> {
    let model = B4Model::build()?;
    let checks: Vec<CheckResult> = run_suite(&model, suite)?;
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let value = json!({
        "schema": SCHEMA,
        "suite": suite.to_string(),
        "passed": checks.len() - failed,
        "failed": failed,
        "checks": checks,
    });
    emit(format, &value, || {
        let mut out = String::new();
        for c in &checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            out += &format!("{status} {}: {}", c.check_id, c.statement);
            if let Some(w) = &c.witness_normal_form {
                out += &format!(" [{w}]");
            }
            out.push('\n');
        }
        out + &format!("{} passed, {failed} failed\n", checks.len() - failed)
    });
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} check(s) failed")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Group {
            family,
            m,
            k,
            invariants,
            field,
        } => {
            let g = build_family(family, m, k)?;
            let report = group_report(&g, &invariants, field, cli.max_brute_force)?;
            emit(format, &report, || report.to_text());
        }
        Command::Lambda { m } => {
            let value = lambda(m)?;
            let out = json!({ "schema": SCHEMA, "m": m, "lambda": value });
            emit(format, &out, || format!("lambda({m}) = {value}\n"));
        }
        Command::Classify { n, vc } => classify(format, n, vc)?,
        Command::B4 { command } => match command {
            B4Command::Verify { suite } => verify(format, suite)?,
            B4Command::Report => {
                let report = b4_lower_k_report()?;
                emit(format, &report, || report.to_text());
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
