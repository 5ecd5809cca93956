//! Command-line front end: `su2curv <command> <instance-or-file> [--json] [--check-expected]`.

pub mod catalog;
pub mod parse;
pub mod report;

use crate::curvature::{ricci_via_torsion, verify_all, RicciReport};
use crate::exterior::fmt_rational;
use crate::lie::Coframe5;
use crate::su2::{validate_adapted, StructureForms};
use crate::torsion::{classify, extract_torsion};
use clap::{Args, Parser, Subcommand};
use parse::{parse_structure_file, ExpectedValue, StructureFile};
use serde_json::{json, Map, Value};
use std::ffi::OsString;
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "su2curv", version, about = "Torsion and curvature of SU(2)-structures on 5-dimensional Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Check the Jacobi identity and the adapted structure
    Validate(InstanceArgs),
    /// Print the torsion forms
    Torsion(InstanceArgs),
    /// Print the special-structure flags
    Classify(InstanceArgs),
    /// Ricci tensor from the oracle and from the torsion formulas
    Curvature(InstanceArgs),
    /// Run every identity check
    Verify(InstanceArgs),
    /// List and re-verify the built-in instances
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct InstanceArgs {
    /// Catalog name or path to a structure file
    pub instance: String,
    #[arg(long)]
    pub json: bool,
    /// Compare against the `expect` lines of the instance
    #[arg(long)]
    pub check_expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            output: format!("error: {msg}\n"),
            code: EXIT_INPUT,
        }
    }
}

/// Resolves a catalog name first, then a file path.
pub fn load_instance(instance: &str) -> Result<StructureFile, Outcome> {
    if catalog::entry(instance).is_some() {
        return catalog::load(instance).map_err(|e| Outcome {
            output: format!("error: {e}\n"),
            code: EXIT_FAILURE,
        });
    }
    let path = Path::new(instance);
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::input_error(format!("'{instance}' is neither a catalog instance nor a readable file ({e})")))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(instance);
    parse_structure_file(&text, stem).map_err(|e| Outcome::input_error(format!("{instance}: {e}")))
}

fn curvature_of(cf: &Coframe5) -> Result<RicciReport, String> {
    let t = extract_torsion(cf).map_err(|e| format!("{}: {e}", cf.name))?;
    ricci_via_torsion(&t, cf).map_err(|e| format!("{}: {e}", cf.name))
}

/// Mismatches between `expect` lines and computed values; `Err` for unknown keys.
pub fn check_expected(file: &StructureFile) -> Result<Vec<String>, String> {
    let cf = &file.coframe;
    let t = extract_torsion(cf).map_err(|e| e.to_string())?;
    let flags = classify(&t);
    let mut curv = None;
    let mut mismatches = Vec::new();
    for (key, want) in &file.expected {
        let got = if let Some((_, v)) = flags.flags().iter().find(|(k, _)| k == key) {
            ExpectedValue::Flag(*v)
        } else {
            if curv.is_none() {
                curv = Some(curvature_of(cf)?);
            }
            let r = curv.as_ref().expect("computed above");
            match key.as_str() {
                "s" => ExpectedValue::Number(r.s_oracle.clone()),
                "lambda" => ExpectedValue::Number(r.lambda.clone()),
                "mu" => ExpectedValue::Number(r.mu.clone()),
                _ => return Err(format!("unknown expect key '{key}'")),
            }
        };
        if &got != want {
            mismatches.push(format!("{key}: expected {want}, got {got}"));
        }
    }
    Ok(mismatches)
}

fn run_instance(cmd: &Command, args: &InstanceArgs) -> Outcome {
    let file = match load_instance(&args.instance) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let cf = &file.coframe;
    let mut obj = Map::new();
    let mut text = format!("name: {}\n", cf.name);
    let mut code = EXIT_OK;
    obj.insert("name".into(), Value::String(cf.name.clone()));
    // the parser already rejected Jacobi failures
    obj.insert("jacobi".into(), Value::Bool(true));
    let adapted = validate_adapted(&StructureForms::standard()).is_ok();
    obj.insert("adapted".into(), Value::Bool(adapted));
    text.push_str(&format!("jacobi: ok\nadapted: {}\n", if adapted { "ok" } else { "FAIL" }));

    let needs_torsion = !matches!(cmd, Command::Validate(_));
    if needs_torsion {
        let t = match extract_torsion(cf) {
            Ok(t) => t,
            Err(e) => return Outcome::input_error(format!("{}: {e}", cf.name)),
        };
        if matches!(cmd, Command::Torsion(_) | Command::Curvature(_) | Command::Verify(_)) {
            obj.insert("torsion".into(), report::torsion(&t));
            text.push_str(&report::torsion_text(&t));
        }
        if matches!(cmd, Command::Classify(_) | Command::Curvature(_) | Command::Verify(_)) {
            let c = classify(&t);
            obj.insert("flags".into(), report::flags(&c));
            text.push_str(&report::flags_text(&c));
        }
    }
    if matches!(cmd, Command::Curvature(_) | Command::Verify(_)) {
        match curvature_of(cf) {
            Ok(r) => {
                obj.insert("curvature".into(), report::curvature(&r));
                text.push_str(&report::curvature_text(&r));
            }
            Err(e) => return Outcome::input_error(e),
        }
    }
    if matches!(cmd, Command::Verify(_)) {
        let v = verify_all(cf);
        if !v.all_pass() {
            code = EXIT_FAILURE;
        }
        obj.insert("verification".into(), report::verification(&v));
        text.push_str(&report::verification_text(&v));
    }
    if args.check_expected {
        match check_expected(&file) {
            Ok(m) => {
                if !m.is_empty() {
                    code = EXIT_FAILURE;
                }
                obj.insert("expected_mismatches".into(), json!(m));
                text.push_str(&format!("expected: {} entries, {} mismatches\n", file.expected.len(), m.len()));
                for line in m {
                    text.push_str(&format!("  {line}\n"));
                }
            }
            Err(e) => return Outcome::input_error(e),
        }
    }
    let output = if args.json {
        format!("{}\n", serde_json::to_string_pretty(&Value::Object(obj)).expect("plain data"))
    } else {
        text
    };
    Outcome { output, code }
}

fn run_catalog(json_out: bool) -> Outcome {
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut code = EXIT_OK;
    for e in catalog::CATALOG {
        let status = catalog::load(e.name);
        let ok = status.is_ok();
        if !ok {
            code = EXIT_FAILURE;
        }
        let s = status.as_ref().map(|f| {
            let t = extract_torsion(&f.coframe).ok();
            let r = curvature_of(&f.coframe).ok();
            (t.map(|t| classify(&t)), r.map(|r| r.s_oracle))
        });
        let scal = s.as_ref().ok().and_then(|(_, s)| s.as_ref()).map(fmt_rational).unwrap_or_default();
        rows.push(json!({ "name": e.name, "note": e.note, "verified": ok, "s": scal }));
        text.push_str(&format!(
            "{:<24} {:<8} s = {:<6} {}\n",
            e.name,
            if ok { "verified" } else { "FAILED" },
            scal,
            e.note
        ));
        if let Err(err) = status {
            text.push_str(&format!("  {err}\n"));
        }
    }
    let output = if json_out {
        format!("{}\n", serde_json::to_string_pretty(&Value::Array(rows)).expect("plain data"))
    } else {
        text
    };
    Outcome { output, code }
}

pub fn run_command(cmd: &Command) -> Outcome {
    match cmd {
        Command::Catalog { json } => run_catalog(*json),
        Command::Validate(a) | Command::Torsion(a) | Command::Classify(a) | Command::Curvature(a) | Command::Verify(a) => {
            run_instance(cmd, a)
        }
    }
}

/// Parses arguments and runs; clap usage errors map to the input-error status.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            Outcome {
                output: e.render().to_string(),
                code,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_from_args(std::iter::once("su2curv").chain(args.iter().copied()))
    }

    #[test]
    fn classify_heisenberg() {
        let o = run(&["classify", "heisenberg", "--json"]);
        assert_eq!(o.code, 0, "{}", o.output);
        let v: Value = serde_json::from_str(&o.output).unwrap();
        assert_eq!(v["flags"]["contact_hypo"], Value::Bool(true));
        assert_eq!(v["flags"]["sasaki_einstein_structure"], Value::Bool(false));
    }

    #[test]
    fn curvature_heisenberg_json() {
        let o = run(&["curvature", "heisenberg", "--json"]);
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.output).unwrap();
        assert_eq!(v["curvature"]["s"], "-4");
        assert_eq!(v["curvature"]["mu"], "4");
        assert_eq!(v["curvature"]["lambda"], "-8");
        let diag: Vec<&str> = (0..5).map(|i| v["curvature"]["ric"][i][i].as_str().unwrap()).collect();
        assert_eq!(diag.join(","), "-2,-2,-2,-2,4");
        assert_eq!(v["torsion"]["phi"][0], "-2");
    }

    #[test]
    fn verify_abelian() {
        let o = run(&["verify", "abelian", "--json"]);
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.output).unwrap();
        let checks = v["verification"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["pass"] == Value::Bool(true)));
    }

    #[test]
    fn input_errors_exit_two() {
        assert_eq!(run(&["verify", "/nonexistent/file.txt"]).code, EXIT_INPUT);
        assert_eq!(run(&["frobnicate"]).code, EXIT_INPUT);
        let dir = std::env::temp_dir().join(format!("su2curv-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let bad = dir.join("bad.txt");
        std::fs::write(&bad, "d1 = 23\nd2 = 14\n").unwrap();
        let o = run(&["validate", bad.to_str().unwrap()]);
        assert_eq!(o.code, EXIT_INPUT);
        assert!(o.output.contains("-1*134") || o.output.contains("-134"), "{}", o.output);
        let good = dir.join("h.txt");
        std::fs::write(&good, "d5 = -2*12 - 2*34\nexpect s = -4\nexpect contact_hypo = false\n").unwrap();
        let o = run(&["classify", good.to_str().unwrap(), "--check-expected"]);
        assert_eq!(o.code, EXIT_FAILURE, "{}", o.output);
        assert!(o.output.contains("contact_hypo: expected false, got true"));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn catalog_expectations_hold() {
        for name in catalog::names() {
            let o = run(&["validate", name, "--check-expected"]);
            assert_eq!(o.code, 0, "{name}: {}", o.output);
        }
    }

    #[test]
    fn json_rationals_are_strings() {
        let o = run(&["curvature", "contact_hypo_rotated", "--json"]);
        let v: Value = serde_json::from_str(&o.output).unwrap();
        fn no_numbers(v: &Value) -> bool {
            match v {
                Value::Number(_) => false,
                Value::Array(a) => a.iter().all(no_numbers),
                Value::Object(m) => m.values().all(no_numbers),
                _ => true,
            }
        }
        assert!(no_numbers(&v));
        assert_eq!(v["curvature"]["s"], "-13");
    }
}
