//! Text and JSON rendering. Rationals appear as exact `p/q` strings.

use crate::curvature::{RicciReport, VerificationReport};
use crate::exterior::{fmt_rational, Form, Rational};
use crate::su2::SymTensor;
use crate::torsion::{ClassificationReport, TorsionForms};
use serde_json::{json, Map, Value};
use std::fmt::Write;

pub fn rational(r: &Rational) -> Value {
    Value::String(fmt_rational(r))
}

pub fn form(f: &Form) -> Value {
    Value::String(f.to_string())
}

pub fn sym_tensor(h: &SymTensor) -> Value {
    Value::Array(h.0.iter().map(|row| Value::Array(row.iter().map(rational).collect())).collect())
}

pub fn torsion(t: &TorsionForms) -> Value {
    json!({
        "nu": t.nu.iter().map(form).collect::<Vec<_>>(),
        "sigma": t.sigma.iter().map(form).collect::<Vec<_>>(),
        "phi": t.phi.iter().map(rational).collect::<Vec<_>>(),
        "f": t.f.iter().map(|row| row.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn flags(c: &ClassificationReport) -> Value {
    let mut m = Map::new();
    for (k, v) in c.flags() {
        m.insert(k.into(), Value::Bool(v));
    }
    Value::Object(m)
}

pub fn curvature(r: &RicciReport) -> Value {
    json!({
        "s": rational(&r.s_oracle),
        "lambda": rational(&r.lambda),
        "mu": rational(&r.mu),
        "ric": sym_tensor(&r.ric_oracle),
        "s_torsion": rational(&r.s_torsion),
        "ric0": sym_tensor(&r.ric0),
        "phi": r.phi.iter().map(form).collect::<Vec<_>>(),
        "phi4": form(&r.phi4),
    })
}

pub fn verification(v: &VerificationReport) -> Value {
    serde_json::to_value(&v.checks).expect("plain data")
}

const SUB: [&str; 5] = ["₁", "₂", "₃", "₄", "₅"];

pub fn torsion_text(t: &TorsionForms) -> String {
    let mut s = String::from("torsion:\n");
    for i in 0..4 {
        let _ = writeln!(s, "  ν{} = {}", SUB[i], t.nu[i]);
    }
    for i in 0..4 {
        let _ = writeln!(s, "  σ{} = {}", SUB[i], t.sigma[i]);
    }
    for i in 0..3 {
        let _ = writeln!(s, "  φ{} = {}", SUB[i], fmt_rational(&t.phi[i]));
    }
    for i in 0..3 {
        for j in 0..3 {
            let _ = write!(s, "  f{}{} = {}", SUB[i], SUB[j], fmt_rational(&t.f[i][j]));
        }
        s.push('\n');
    }
    s
}

pub fn flags_text(c: &ClassificationReport) -> String {
    let mut s = String::from("flags:\n");
    for (k, v) in c.flags() {
        let _ = writeln!(s, "  {k}: {v}");
    }
    s
}

fn matrix_text(h: &SymTensor) -> String {
    let mut s = String::new();
    for row in &h.0 {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>6}", fmt_rational(x))).collect();
        let _ = writeln!(s, "    [{} ]", cells.join(""));
    }
    s
}

pub fn curvature_text(r: &RicciReport) -> String {
    let mut s = String::from("curvature:\n");
    let _ = writeln!(s, "  s = {} (torsion formula {})", fmt_rational(&r.s_oracle), fmt_rational(&r.s_torsion));
    let _ = writeln!(s, "  λ = {}  μ = {}", fmt_rational(&r.lambda), fmt_rational(&r.mu));
    for i in 0..3 {
        let _ = writeln!(s, "  Φ{} = {}", SUB[i], r.phi[i]);
    }
    let _ = writeln!(s, "  Φ₄ = {}", r.phi4);
    s.push_str("  Ric =\n");
    s.push_str(&matrix_text(&r.ric_oracle));
    s.push_str("  Ric₀ =\n");
    s.push_str(&matrix_text(&r.ric0));
    s
}

pub fn verification_text(v: &VerificationReport) -> String {
    let failures = v.failures();
    let mut s = format!("verification: {} checks, {} failed\n", v.checks.len(), failures.len());
    for c in &v.checks {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        if c.detail.is_empty() {
            let _ = writeln!(s, "  {mark} {}", c.check);
        } else {
            let _ = writeln!(s, "  {mark} {}: {}", c.check, c.detail.replace('\n', "\n       "));
        }
    }
    s
}
