//! Torsion forms of the standard structure on a Lie algebra, and the special classes.

use crate::exterior::{rat, ratio, Form, Rational, DIM};
use crate::lie::Coframe5;
use crate::linalg;
use crate::su2::{alpha, in_lambda23, omega, project_e, reeb, StructureForms};
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorsionError {
    #[error("reassembly of {which} failed: rebuilt {rebuilt}, original {original}")]
    Reassembly {
        which: String,
        rebuilt: Form,
        original: Form,
    },
    #[error("{0} does not land in its component space")]
    WrongComponent(String),
}

/// `dα = α∧ν₄ + Σφ_iω_i + σ₄`, `dω_r = ν_r∧ω_r + Σ_j f_rj α∧ω_j + α∧σ_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionForms {
    pub nu: [Form; 4],
    pub sigma: [Form; 4],
    pub phi: [Rational; 3],
    pub f: [[Rational; 3]; 3],
}

impl TorsionForms {
    pub fn zero() -> Self {
        TorsionForms {
            nu: std::array::from_fn(|_| Form::zero(1)),
            sigma: std::array::from_fn(|_| Form::zero(2)),
            phi: std::array::from_fn(|_| Rational::zero()),
            f: std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())),
        }
    }

    /// φ₁ = −2, f₂₃ = −f₃₂ = 3, everything else zero.
    pub fn sasaki_einstein_pattern() -> Self {
        let mut t = Self::zero();
        t.phi[0] = rat(-2);
        t.f[1][2] = rat(3);
        t.f[2][1] = rat(-3);
        t
    }

    pub fn nu(&self, i: usize) -> &Form {
        &self.nu[i - 1]
    }

    pub fn sigma(&self, i: usize) -> &Form {
        &self.sigma[i - 1]
    }

    pub fn phi(&self, i: usize) -> &Rational {
        &self.phi[i - 1]
    }

    pub fn f(&self, i: usize, j: usize) -> &Rational {
        &self.f[i - 1][j - 1]
    }

    pub fn d_alpha(&self) -> Form {
        let mut out = alpha().wedge(self.nu(4)) + self.sigma(4).clone();
        for i in 1..=3 {
            out.add_scaled(&omega(i), self.phi(i));
        }
        out
    }

    pub fn d_omega(&self, r: usize) -> Form {
        let mut out = self.nu(r).wedge(&omega(r)) + alpha().wedge(self.sigma(r));
        for j in 1..=3 {
            out.add_scaled(&alpha().wedge(&omega(j)), self.f(r, j));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.nu.iter().all(Form::is_zero)
            && self.sigma.iter().all(Form::is_zero)
            && self.phi.iter().all(Zero::is_zero)
            && self.f.iter().flatten().all(Zero::is_zero)
    }
}

/// Solves `φ∧ω_r = γ` for a transverse 1-form `φ`.
pub fn wedge_omega_inverse(r: usize, gamma: &Form) -> Option<Form> {
    let cols: Vec<Form> = (1..=4).map(|i| Form::monomial(&[i]).wedge(&omega(r))).collect();
    let rows: [[usize; 3]; 4] = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]];
    let a: linalg::Matrix = rows.iter().map(|k| cols.iter().map(|c| c.coeff(k)).collect()).collect();
    let b: Vec<Rational> = rows.iter().map(|k| gamma.coeff(k)).collect();
    let x = linalg::solve(&a, &b)?;
    let phi = Form::one_form(&std::array::from_fn(|i| if i < 4 { x[i].clone() } else { Rational::zero() }));
    (phi.wedge(&omega(r)) == *gamma).then_some(phi)
}

pub fn extract_torsion(cf: &Coframe5) -> Result<TorsionForms, TorsionError> {
    let mut t = TorsionForms::zero();
    let da = cf.d(&alpha());
    t.nu[3] = da.interior(&reeb());
    let dat = da.transverse_part();
    for i in 1..=3 {
        t.phi[i - 1] = dat.inner(&omega(i)) * ratio(1, 2);
    }
    t.sigma[3] = project_e(&da);
    for r in 1..=3 {
        let dom = cf.d(&omega(r));
        let ir = dom.interior(&reeb());
        for j in 1..=3 {
            t.f[r - 1][j - 1] = ir.inner(&omega(j)) * ratio(1, 2);
        }
        t.sigma[r - 1] = project_e(&ir);
        t.nu[r - 1] = wedge_omega_inverse(r, &dom.transverse_part())
            .ok_or_else(|| TorsionError::WrongComponent(format!("(d omega{r})^T")))?;
    }
    for (k, s) in t.sigma.iter().enumerate() {
        if !in_lambda23(s) {
            return Err(TorsionError::WrongComponent(format!("sigma{}", k + 1)));
        }
    }
    for (k, n) in t.nu.iter().enumerate() {
        if !n.is_transverse() {
            return Err(TorsionError::WrongComponent(format!("nu{}", k + 1)));
        }
    }
    let check = |which: String, rebuilt: Form, original: Form| {
        if rebuilt == original {
            Ok(())
        } else {
            Err(TorsionError::Reassembly {
                which,
                rebuilt,
                original,
            })
        }
    };
    check("d alpha".into(), t.d_alpha(), da)?;
    for r in 1..=3 {
        check(format!("d omega{r}"), t.d_omega(r), cf.d(&omega(r)))?;
    }
    Ok(t)
}

/// `f₁₁ = f₂₂ = f₃₃` and `f_ij = −f_ji` for `i ≠ j`.
pub fn verify_d2_constraints(t: &TorsionForms) -> bool {
    let diag = t.f(1, 1) == t.f(2, 2) && t.f(2, 2) == t.f(3, 3);
    let skew = (1..=3).all(|i| (1..=3).all(|j| i == j || *t.f(i, j) == -t.f(j, i).clone()));
    diag && skew
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub hypo: bool,
    pub contact_hypo: bool,
    pub nearly_hypo: bool,
    pub double_hypo: bool,
    pub sasaki_einstein_structure: bool,
    pub half_flat_cone: bool,
    pub kahler_cone: bool,
}

impl ClassificationReport {
    pub fn flags(&self) -> [(&'static str, bool); 7] {
        [
            ("hypo", self.hypo),
            ("contact_hypo", self.contact_hypo),
            ("nearly_hypo", self.nearly_hypo),
            ("double_hypo", self.double_hypo),
            ("sasaki_einstein_structure", self.sasaki_einstein_structure),
            ("half_flat_cone", self.half_flat_cone),
            ("kahler_cone", self.kahler_cone),
        ]
    }
}

pub fn classify(t: &TorsionForms) -> ClassificationReport {
    let z = |x: &Rational| x.is_zero();
    let is = |x: &Rational, v: i64| *x == rat(v);
    let nu_zero = |i: usize| t.nu(i).is_zero();
    let sigma_zero = |i: usize| t.sigma(i).is_zero();

    let hypo = nu_zero(1)
        && (1..=3).all(|j| z(t.f(1, j)))
        && sigma_zero(1)
        && t.nu(2) == t.nu(3)
        && t.nu(3) == t.nu(4)
        && z(t.phi(2))
        && z(t.phi(3));
    let contact_hypo = hypo && is(t.phi(1), -2) && nu_zero(4) && sigma_zero(4);
    let nearly_hypo = is(t.phi(1), -2)
        && z(t.phi(3))
        && sigma_zero(2)
        && t.nu(4) == t.nu(3)
        && t.nu(3) == t.nu(1)
        && nu_zero(2)
        && is(t.f(2, 3), 3)
        && z(t.f(1, 2))
        && z(t.f(1, 1));
    let double_hypo = is(t.phi(1), -2)
        && is(t.f(2, 3), 3)
        && (1..=4).all(nu_zero)
        && sigma_zero(1)
        && sigma_zero(2)
        && z(t.phi(2))
        && z(t.phi(3))
        && z(t.f(1, 1))
        && z(t.f(1, 2))
        && z(t.f(1, 3));
    let sasaki_einstein_structure = double_hypo && sigma_zero(3) && sigma_zero(4);
    let half_flat_cone = contact_hypo && is(t.f(2, 3), 3) && sigma_zero(3);
    let kahler_cone = contact_hypo && sigma_zero(2) && sigma_zero(3);
    ClassificationReport {
        hypo,
        contact_hypo,
        nearly_hypo,
        double_hypo,
        sasaki_einstein_structure,
        half_flat_cone,
        kahler_cone,
    }
}

/// `(α, ω₁, ω₂, ω₃) ↦ (α, ω₁, −ω₃, ω₂)`.
pub fn double_hypo_transform(forms: &StructureForms) -> StructureForms {
    StructureForms {
        alpha: forms.alpha.clone(),
        omega: [forms.omega[0].clone(), -&forms.omega[2], forms.omega[1].clone()],
    }
}

/// The coframe `(w¹, w², −w⁴, w³, w⁵)` in which the transformed structure is standard.
pub fn double_hypo_coframe(cf: &Coframe5) -> Coframe5 {
    let mut q: [[Rational; DIM]; DIM] = std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
    q[0][0] = rat(1);
    q[1][1] = rat(1);
    q[2][3] = rat(-1);
    q[3][2] = rat(1);
    q[4][4] = rat(1);
    cf.change_coframe(format!("{}_transformed", cf.name), &q)
        .expect("signed permutation is invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::su2::{lambda23_basis, validate_adapted};

    fn w(idx: &[usize]) -> Form {
        Form::monomial(idx)
    }

    fn coframe(pairs: &[(usize, Form)]) -> Coframe5 {
        let mut d: [Form; 5] = std::array::from_fn(|_| Form::zero(2));
        for (k, f) in pairs {
            d[k - 1] = f.clone();
        }
        Coframe5::new("t", d).unwrap()
    }

    fn heisenberg() -> Coframe5 {
        coframe(&[(5, omega(1).scale(&rat(-2)))])
    }

    #[test]
    fn abelian_has_no_torsion() {
        let t = extract_torsion(&Coframe5::abelian("a")).unwrap();
        assert!(t.is_zero());
        let c = classify(&t);
        assert!(c.hypo && !c.contact_hypo && !c.nearly_hypo);
    }

    #[test]
    fn heisenberg_torsion() {
        let t = extract_torsion(&heisenberg()).unwrap();
        let mut expect = TorsionForms::zero();
        expect.phi[0] = rat(-2);
        assert_eq!(t, expect);
        assert!(verify_d2_constraints(&t));
        let c = classify(&t);
        assert!(c.hypo && c.contact_hypo && c.kahler_cone);
        assert!(!c.sasaki_einstein_structure && !c.nearly_hypo && !c.half_flat_cone);
    }

    #[test]
    fn perturbed_heisenberg_reassembles() {
        let cf = coframe(&[
            (1, w(&[1, 4]) - w(&[2, 3]) + w(&[2, 5])),
            (3, w(&[1, 2]) - w(&[3, 4]) + w(&[4, 5])),
            (5, omega(1).scale(&rat(-2))),
        ]);
        let t = extract_torsion(&cf).unwrap();
        assert_eq!(t.phi[0], rat(-2));
        assert_eq!(t.f[1][2], rat(-1));
        assert_eq!(t.sigma[2], -(w(&[1, 3]) + w(&[2, 4])));
        assert!(verify_d2_constraints(&t));
        assert!(classify(&t).contact_hypo);
    }

    #[test]
    fn d2_constraint_violation() {
        let mut t = TorsionForms::zero();
        t.f[0][1] = rat(1);
        t.f[1][0] = rat(1);
        assert!(!verify_d2_constraints(&t));
        assert!(verify_d2_constraints(&TorsionForms::zero()));
    }

    #[test]
    fn sasaki_einstein_pattern_flags() {
        let c = classify(&TorsionForms::sasaki_einstein_pattern());
        assert!(c.flags().iter().all(|(_, v)| *v), "{c:?}");
    }

    #[test]
    fn class_implications_on_patterns() {
        let mut t = TorsionForms::sasaki_einstein_pattern();
        t.sigma[2] = lambda23_basis()[0].clone();
        t.sigma[3] = lambda23_basis()[2].clone();
        let c = classify(&t);
        assert!(c.double_hypo && c.hypo && c.nearly_hypo && !c.sasaki_einstein_structure);
        assert!(!c.contact_hypo);
    }

    #[test]
    fn transform_of_standard_model() {
        let t = double_hypo_transform(&StructureForms::standard());
        assert_eq!(t.alpha, w(&[5]));
        assert_eq!(t.omega[0], w(&[1, 2]) + w(&[3, 4]));
        assert_eq!(t.omega[1], -(w(&[1, 4]) + w(&[2, 3])));
        assert_eq!(t.omega[2], w(&[1, 3]) - w(&[2, 4]));
        // same compatibility conditions, different literal forms
        let issues = validate_adapted(&t).unwrap_err();
        assert!(issues.iter().all(|s| !s.starts_with("compatibility")));
    }

    #[test]
    fn transformed_coframe_realises_transformed_forms() {
        // in the new coframe the old forms read as the standard model after the transform
        let q: [[i64; 5]; 5] = [
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 0, -1, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 0, 1],
        ];
        let new: Vec<Form> = q.iter().map(|row| Form::one_form(&std::array::from_fn(|b| rat(row[b])))).collect();
        let sub = |f: &Form| {
            let mut out = Form::zero(f.degree());
            for (idx, c) in f.terms() {
                let mut p = Form::scalar(c);
                for i in idx {
                    p = p.wedge(&new[i - 1]);
                }
                out += &p;
            }
            out
        };
        let transformed = double_hypo_transform(&StructureForms::standard());
        for r in 0..3 {
            assert_eq!(sub(&omega(r + 1)), transformed.omega[r]);
        }
        let h = double_hypo_coframe(&heisenberg());
        assert_eq!(h.dw(5), &omega(1).scale(&rat(-2)));
    }
}
