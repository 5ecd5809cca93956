//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use num_traits::Zero;
use su2curv::cli::catalog::{self, CALIBRATION_PINS};
use su2curv::cli::parse::StructureFile;
use su2curv::curvature::{
    bracket_identities_hold, class_scalar_formulas, curvature_forms, curvature_reassembly_mismatch, d_quantities,
    double_hypo_bound, in_su2, oracle_for, psi_decompose, pullback_identities, ricci_from_tn, ricci_via_torsion,
    ricci_via_torsion_with, scalar_via_torsion, structure_equation_residual, Conventions, DQuantities,
};
use su2curv::exterior::{all_monomials, rat, ratio, Form, Rational, TangentVector, DIM};
use su2curv::lie::Coframe5;
use su2curv::su2::{
    alpha, in_lambda23, iota_r, iota_r_inverse, j_form, j_vector, lambda23_basis, omega, project_e, reeb,
    sigma_basis, star_r, sym_decompose, SymTensor,
};
use su2curv::torsion::{classify, extract_torsion, TorsionForms};

type Outcome = Result<String, String>;

fn instances() -> Vec<StructureFile> {
    catalog::names()
        .into_iter()
        .map(|n| catalog::parse_entry(catalog::entry(n).unwrap()).unwrap())
        .collect()
}

fn for_each_instance(mut f: impl FnMut(&Coframe5) -> Result<(), String>) -> Result<usize, String> {
    let all = instances();
    for s in &all {
        f(&s.coframe).map_err(|e| format!("{}: {e}", s.coframe.name))?;
    }
    Ok(all.len())
}

fn w(idx: &[usize]) -> Form {
    Form::monomial(idx)
}

fn criterion_1() -> Outcome {
    let t = TorsionForms::sasaki_einstein_pattern();
    let s = scalar_via_torsion(&t, &Coframe5::abelian("pattern"));
    let c = classify(&t);
    if s == rat(20) && c.sasaki_einstein_structure {
        Ok("scalar curvature of the Sasaki-Einstein pattern is 20".into())
    } else {
        Err(format!("s = {s}, sasaki_einstein flag {}", c.sasaki_einstein_structure))
    }
}

fn criterion_2() -> Outcome {
    let file = catalog::load("heisenberg").map_err(|e| e.to_string())?;
    let cf = &file.coframe;
    let t = extract_torsion(cf).map_err(|e| e.to_string())?;
    let mut rest = t.clone();
    rest.phi[0] = Rational::from_integer(0.into());
    if *t.phi(1) != rat(-2) || !rest.is_zero() {
        return Err("torsion is not φ₁ = −2 alone".into());
    }
    let c = classify(&t);
    if !c.contact_hypo {
        return Err("not classified contact-Hypo".into());
    }
    let r = ricci_via_torsion(&t, cf).map_err(|e| e.to_string())?;
    let diag = SymTensor::from_fn(|i, j| match (i == j, i) {
        (true, 5) => rat(4),
        (true, _) => rat(-2),
        _ => rat(0),
    });
    if r.ric_oracle != diag {
        return Err(format!("oracle Ricci\n{}", r.ric_oracle));
    }
    let special = rat(-4) + rat(8) * t.f(2, 3);
    if r.s_oracle != rat(-4) || r.s_torsion != rat(-4) || special != rat(-4) {
        return Err(format!("s oracle {} torsion {} specialised {special}", r.s_oracle, r.s_torsion));
    }
    if r.lambda != rat(-8) || r.mu != rat(4) || !r.ric0.is_zero() {
        return Err(format!("λ {} μ {} Ric₀ zero {}", r.lambda, r.mu, r.ric0.is_zero()));
    }
    Ok("φ₁ = −2, contact-Hypo, Ric = diag(−2,−2,−2,−2,4), s = −4 three ways, λ = −8, μ = 4, Ric₀ = 0".into())
}

fn scramble_s(dq: &DQuantities) -> DQuantities {
    let mut d = dq.clone();
    let mut c = 1i64;
    for i in 1..=DIM {
        for j in 1..=DIM {
            for k in 1..=DIM {
                for l in 1..=DIM {
                    c = (c * 37 + 11) % 101;
                    d.s.set(&[i, j, k, l], ratio(c - 50, 7));
                }
            }
        }
    }
    d
}

fn criterion_3() -> Outcome {
    let n = for_each_instance(|cf| {
        let data = oracle_for(cf).map_err(|e| e.to_string())?;
        let dec = psi_decompose(&data.conn).map_err(|e| e.to_string())?;
        let dq = d_quantities(&dec, cf);
        let (ric, s) = ricci_from_tn(&dq);
        if ric != data.oracle.ric || s != data.oracle.scal {
            return Err(format!("Ricci from (T, N)\n{ric}oracle\n{}", data.oracle.ric));
        }
        let (ric2, s2) = ricci_from_tn(&scramble_s(&dq));
        if ric2 != ric || s2 != s {
            return Err("result changes when S is replaced".into());
        }
        Ok(())
    })?;
    Ok(format!("{n} instances, Ricci from (T, N) equals the oracle and ignores S"))
}

fn criterion_4() -> Outcome {
    let mut sigma_nonzero = 0;
    let mut nu4_nonzero = 0;
    let n = for_each_instance(|cf| {
        let t = extract_torsion(cf).map_err(|e| e.to_string())?;
        if t.sigma.iter().any(|s| !s.is_zero()) {
            sigma_nonzero += 1;
        }
        if !t.nu(4).is_zero() {
            nu4_nonzero += 1;
        }
        let r = ricci_via_torsion(&t, cf).map_err(|e| e.to_string())?;
        if r.ric_assembled != r.ric_oracle {
            return Err(format!("assembled\n{}oracle\n{}", r.ric_assembled, r.ric_oracle));
        }
        let d = sym_decompose(&r.ric0);
        if !r.ric0.trace_transverse().is_zero() || !d.c_t.is_zero() || !d.c_alpha.is_zero() || !r.ric0.get(5, 5).is_zero() {
            return Err("Ric₀ has a trace part".into());
        }
        if !r.e_phi.iter().all(in_lambda23) {
            return Err("E(Φ_r) outside Λ²₃".into());
        }
        Ok(())
    })?;
    if sigma_nonzero < 2 || nu4_nonzero < 1 {
        return Err(format!("coverage: {sigma_nonzero} with σ ≠ 0, {nu4_nonzero} with ν₄ ≠ 0"));
    }
    Ok(format!(
        "{n} instances ({sigma_nonzero} with σ ≠ 0, {nu4_nonzero} with ν₄ ≠ 0): assembled Ricci equals the oracle"
    ))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    let n = for_each_instance(|cf| {
        let data = oracle_for(cf).map_err(|e| e.to_string())?;
        let dec = psi_decompose(&data.conn).map_err(|e| e.to_string())?;
        let t = extract_torsion(cf).map_err(|e| e.to_string())?;
        let ids = pullback_identities(&dec, &t);
        count = ids.len();
        match ids.iter().find(|p| !p.holds) {
            Some(p) => Err(format!("{}: extracted {} formula {}", p.name, p.extracted, p.formula)),
            None => Ok(()),
        }
    })?;
    if count < 14 {
        return Err(format!("only {count} identities"));
    }
    Ok(format!("{count} pullback identities hold on {n} instances"))
}

fn criterion_6() -> Outcome {
    let monos = all_monomials();
    if monos.len() != 32 {
        return Err(format!("{} monomials", monos.len()));
    }
    for f in &monos {
        if f.hodge().hodge() != *f {
            return Err(format!("** ≠ id on {f}"));
        }
    }
    for r in 1..=3 {
        for i in 1..=DIM {
            let e = TangentVector::basis(i);
            let a_e = alpha().interior(&e).value();
            let expect = &(-&e) + &reeb().scale(&a_e);
            if j_vector(r, &j_vector(r, &e)) != expect {
                return Err(format!("J_{r}² on e{i}"));
            }
        }
    }
    for i in 1..=DIM {
        let e = TangentVector::basis(i);
        if j_vector(1, &j_vector(2, &e)) != j_vector(3, &e) {
            return Err(format!("J₁J₂ ≠ J₃ on e{i}"));
        }
        let f = w(&[i]);
        if j_form(1, &j_form(2, &f)) != -j_form(3, &f) {
            return Err(format!("J₁J₂ ≠ −J₃ on w{i}"));
        }
    }
    for r in 1..=3 {
        for i in 1..=4 {
            let f = w(&[i]);
            if star_r(r, &f).map_err(|e| e.to_string())? != f.wedge(&omega(r)) {
                return Err(format!("★_{r} w{i}"));
            }
        }
    }
    let two_forms: Vec<Form> = monos.iter().filter(|m| m.degree() == 2).cloned().collect();
    if two_forms.len() != 10 {
        return Err("Λ² basis size".into());
    }
    for f in &two_forms {
        let e = project_e(f);
        if project_e(&e) != e {
            return Err(format!("E not idempotent on {f}"));
        }
    }
    for b in lambda23_basis() {
        if project_e(&b) != b {
            return Err("E is not the identity on Λ²₃".into());
        }
    }
    for r in 1..=3 {
        let basis = sigma_basis(r);
        if basis.len() != 3 {
            return Err(format!("Σ_{r} basis size"));
        }
        for h in &basis {
            let s = iota_r(r, h).map_err(|e| e.to_string())?;
            if iota_r_inverse(r, &s).map_err(|e| e.to_string())? != *h {
                return Err(format!("ι_{r} round trip"));
            }
        }
    }
    Ok("** = id on 32 monomials, J identities, ★_r on 12 cases, E on 10 2-forms, ι_r on 9 basis tensors".into())
}

fn criterion_7() -> Outcome {
    let n = for_each_instance(|cf| {
        let data = oracle_for(cf).map_err(|e| e.to_string())?;
        if let Some((k, res)) = structure_equation_residual(&data.conn, cf.d_images()) {
            return Err(format!("dw{k} + ψ∧w = {res}"));
        }
        let dec = psi_decompose(&data.conn).map_err(|e| e.to_string())?;
        if dec.reassemble() != data.conn.psi {
            return Err("ψ reassembly".into());
        }
        if !bracket_identities_hold(&dec) {
            return Err("bracket identities".into());
        }
        let dq = d_quantities(&dec, cf);
        if let Some(x) = curvature_reassembly_mismatch(&dq, &curvature_forms(&data.conn, cf)) {
            return Err(format!("Ψ reassembly at {x:?}"));
        }
        if !in_su2(&dq.d_theta) {
            return Err("Dθ not su(2)-valued".into());
        }
        Ok(())
    })?;
    Ok(format!("{n} instances: structure equation, ψ and Ψ reassembly, Dθ ∈ su(2), bracket identities"))
}

/// Double-Hypo torsion with the free components σ₃, σ₄ ∈ Λ²₃.
fn double_hypo_pattern(s3: [i64; 3], s4: [i64; 3]) -> TorsionForms {
    let mut t = TorsionForms::sasaki_einstein_pattern();
    let b = lambda23_basis();
    let combo = |c: [i64; 3]| {
        let mut f = Form::zero(2);
        for (k, x) in c.iter().enumerate() {
            f.add_scaled(&b[k], &rat(*x));
        }
        f
    };
    t.sigma[2] = combo(s3);
    t.sigma[3] = combo(s4);
    t
}

fn criterion_8() -> Outcome {
    let mut catalog_hits = 0;
    for s in instances() {
        let cf = &s.coframe;
        let t = extract_torsion(cf).map_err(|e| e.to_string())?;
        if classify(&t).double_hypo {
            catalog_hits += 1;
            let r = ricci_via_torsion(&t, cf).map_err(|e| e.to_string())?;
            if double_hypo_bound(&t, &r.s_oracle) != Some(true) {
                return Err(format!("{}: s = {}", cf.name, r.s_oracle));
            }
        }
    }
    let flat = Coframe5::abelian("pattern");
    let mut patterns = 0;
    let mut equality = 0;
    let choices = [[0, 0, 0], [1, 0, 0], [0, -2, 1], [3, 1, -1]];
    for s3 in choices {
        for s4 in choices {
            let t = double_hypo_pattern(s3, s4);
            if !classify(&t).double_hypo {
                return Err("hand-built pattern is not double-Hypo".into());
            }
            let s = scalar_via_torsion(&t, &flat);
            let formula = class_scalar_formulas(&t).into_iter().find(|(k, _)| *k == "double_hypo").map(|(_, v)| v);
            if formula.as_ref() != Some(&s) || double_hypo_bound(&t, &s) != Some(true) {
                return Err(format!("pattern σ₃ {s3:?} σ₄ {s4:?}: s = {s}"));
            }
            if s == rat(20) {
                equality += 1;
            }
            patterns += 1;
        }
    }
    if equality != 1 {
        return Err(format!("equality on {equality} patterns"));
    }
    Ok(format!(
        "{catalog_hits} catalog double-Hypo instances; {patterns} double-Hypo torsion patterns satisfy s ≤ 20, equality only for Sasaki-Einstein"
    ))
}

fn criterion_9() -> Outcome {
    let mut lines = Vec::new();
    for (switch, name) in CALIBRATION_PINS {
        let file = catalog::load(name).map_err(|e| e.to_string())?;
        let cf = &file.coframe;
        let t = extract_torsion(cf).map_err(|e| e.to_string())?;
        if !ricci_via_torsion(&t, cf).map_err(|e| e.to_string())?.agrees_with_oracle() {
            return Err(format!("{name} disagrees under the calibrated conventions"));
        }
        let (_, alt) = Conventions::alternatives()
            .into_iter()
            .find(|(k, _)| k == switch)
            .ok_or_else(|| format!("no alternative named {switch}"))?;
        let agrees = ricci_via_torsion_with(&t, cf, alt).map(|r| r.agrees_with_oracle()).unwrap_or(false);
        if agrees {
            return Err(format!("flipping {switch} still agrees on {name}"));
        }
        lines.push(format!("{switch}→{name}"));
    }
    for (switch, _) in Conventions::alternatives() {
        if !CALIBRATION_PINS.iter().any(|(k, _)| *k == switch) {
            return Err(format!("switch {switch} has no pin"));
        }
    }
    Ok(format!("every switch pinned: {}", lines.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Sasaki-Einstein scalar curvature", criterion_1),
        ("Heisenberg end to end", criterion_2),
        ("Ricci from (T, N) vs oracle", criterion_3),
        ("assembled Ricci vs oracle", criterion_4),
        ("pullback identities", criterion_5),
        ("operator algebra", criterion_6),
        ("structure equation and reassembly", criterion_7),
        ("double-Hypo bound", criterion_8),
        ("convention calibration", criterion_9),
    ];
    let mut failed = 0;
    for (k, (title, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} PASS  {title}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {title}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
