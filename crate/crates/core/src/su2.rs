//! The standard SU(2)-structure on the adapted coframe and its operator algebra.

use crate::exterior::{permutation_sign, rat, ratio, Form, Rational, TangentVector, DIM};
use crate::linalg;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Su2Error {
    #[error("form is not transverse (has a w5 component): {0}")]
    NotTransverse(Form),
    #[error("operator not defined on degree {0}")]
    UnsupportedDegree(usize),
    #[error("tensor is not in Sigma_{r}: {detail}")]
    NotInSigma { r: usize, detail: String },
    #[error("2-form is not in Lambda^2_3: {0}")]
    NotInLambda23(String),
}

/// `ε^r_ij`; zero whenever an index equals 5.
pub fn eps(r: usize, i: usize, j: usize) -> i64 {
    if i > j {
        return -eps(r, j, i);
    }
    match (r, i, j) {
        (1, 1, 2) | (1, 3, 4) => 1,
        (2, 1, 3) => 1,
        (2, 2, 4) => -1,
        (3, 1, 4) | (3, 2, 3) => 1,
        _ => 0,
    }
}

/// `η_ijk = δ_ik δ_j5 − δ_jk δ_i5`.
pub fn eta(i: usize, j: usize, k: usize) -> i64 {
    let d = |a: usize, b: usize| i64::from(a == b);
    d(i, k) * d(j, 5) - d(j, k) * d(i, 5)
}

/// The cyclic partners `(s, t)` of `r`: 1→(2,3), 2→(3,1), 3→(1,2).
pub fn cyclic(r: usize) -> (usize, usize) {
    match r {
        1 => (2, 3),
        2 => (3, 1),
        3 => (1, 2),
        _ => panic!("r must be 1, 2 or 3"),
    }
}

pub fn alpha() -> Form {
    Form::monomial(&[5])
}

/// `ω_r = ½ ε^r_ij wⁱ∧wʲ`.
pub fn omega(r: usize) -> Form {
    let mut f = Form::zero(2);
    for i in 1..=4 {
        for j in i + 1..=4 {
            let e = eps(r, i, j);
            if e != 0 {
                f.add_scaled(&Form::monomial(&[i, j]), &rat(e));
            }
        }
    }
    f
}

pub fn reeb() -> TangentVector {
    TangentVector::basis(5)
}

/// `(α, ω₁, ω₂, ω₃)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureForms {
    pub alpha: Form,
    pub omega: [Form; 3],
}

impl StructureForms {
    pub fn standard() -> Self {
        StructureForms {
            alpha: alpha(),
            omega: [omega(1), omega(2), omega(3)],
        }
    }
}

/// Checks the compatibility conditions and the literal standard-model match.
pub fn validate_adapted(forms: &StructureForms) -> Result<(), Vec<String>> {
    let mut issues = Vec::new();
    if forms.alpha.degree() != 1 || forms.omega.iter().any(|o| o.degree() != 2) {
        return Err(vec!["structure forms have wrong degrees".into()]);
    }
    let v = forms.omega[0].wedge(&forms.omega[0]);
    for i in 0..3 {
        for j in i..3 {
            let p = forms.omega[i].wedge(&forms.omega[j]);
            let expect = if i == j { v.clone() } else { Form::zero(4) };
            if p != expect {
                issues.push(format!(
                    "compatibility: omega{}^omega{} = {} but expected {}",
                    i + 1,
                    j + 1,
                    p,
                    expect
                ));
            }
        }
    }
    if v.wedge(&forms.alpha).is_zero() {
        issues.push("v^alpha vanishes".into());
    }
    let std = StructureForms::standard();
    if forms.alpha != std.alpha {
        issues.push(format!("alpha = {} differs from w5", forms.alpha));
    }
    for r in 0..3 {
        if forms.omega[r] != std.omega[r] {
            issues.push(format!(
                "omega{} = {} differs from the standard model {}",
                r + 1,
                forms.omega[r],
                std.omega[r]
            ));
        }
    }
    if issues.is_empty() {
        Ok(())
    } else {
        Err(issues)
    }
}

fn require_transverse(a: &Form) -> Result<(), Su2Error> {
    if a.is_transverse() {
        Ok(())
    } else {
        Err(Su2Error::NotTransverse(a.clone()))
    }
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| *x).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

/// `ω_r` extended to transverse monomials: the determinant of pairings.
fn omega_pairing(r: usize, a: &[usize], b: &[usize]) -> i64 {
    let m: Vec<Vec<i64>> = a.iter().map(|&i| b.iter().map(|&j| eps(r, i, j)).collect()).collect();
    det(&m)
}

/// `★_r`, defined by `γ∧★_rβ = ω_r(γ,β) ω_r²/2` for transverse `γ, β`.
pub fn star_r(r: usize, a: &Form) -> Result<Form, Su2Error> {
    require_transverse(a)?;
    let j = a.degree();
    if !(1..=3).contains(&j) {
        return Err(Su2Error::UnsupportedDegree(j));
    }
    let mut out = Form::zero(4 - j);
    for gamma in transverse_monomials(j) {
        let value: Rational = a
            .terms()
            .iter()
            .map(|(idx, c)| c * rat(omega_pairing(r, &gamma, idx)))
            .sum();
        if value.is_zero() {
            continue;
        }
        let comp: Vec<usize> = (1..=4).filter(|i| !gamma.contains(i)).collect();
        let cat: Vec<usize> = gamma.iter().chain(comp.iter()).copied().collect();
        let s = rat(permutation_sign(&cat) as i64);
        out.add_scaled(&Form::monomial(&comp), &(value * s));
    }
    Ok(out)
}

fn transverse_monomials(k: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = (0u8..16)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=4).filter(|i| m & (1 << (i - 1)) != 0).collect())
        .collect();
    v.sort();
    v
}

/// `J_r` on 1-forms; `J_r(α) = 0`.
pub fn j_form(r: usize, phi: &Form) -> Form {
    assert_eq!(phi.degree(), 1, "J_r acts on 1-forms");
    let t = phi.transverse_part();
    let (first, second) = match r {
        1 => (2, 3),
        2 => (3, 1),
        3 => (1, 2),
        _ => panic!("r must be 1, 2 or 3"),
    };
    let inner = star_r(r, &omega(first).wedge(&t)).expect("transverse");
    star_r(r, &omega(second).wedge(&inner)).expect("transverse")
}

/// `♯_r X = ι_X ω_r`.
pub fn sharp_r(r: usize, x: &TangentVector) -> Form {
    omega(r).interior(x)
}

fn sharp_inverse(r: usize, phi: &Form) -> TangentVector {
    // (ι_Y ω_r)_j = Σ_i Y_i ε^r_ij on the contact distribution
    let a: linalg::Matrix = (1..=4).map(|j| (1..=4).map(|i| rat(eps(r, i, j))).collect()).collect();
    let b: Vec<Rational> = (1..=4).map(|j| phi.at(j)).collect();
    let y = linalg::solve(&a, &b).expect("omega_r is nondegenerate on the contact distribution");
    let mut v = TangentVector::zero();
    for i in 0..4 {
        v.0[i] = y[i].clone();
    }
    v
}

fn j_vector_uncached(r: usize, x: &TangentVector) -> TangentVector {
    let mut xt = x.clone();
    xt.0[4] = Rational::zero();
    let image = sharp_inverse(r, &j_form(r, &sharp_r(r, &xt)));
    -&image
}

/// Matrix of `J_r` on vectors: `J_r e_j = Σ_i M[i][j] e_i` (0-based storage).
pub fn j_vector_matrix(r: usize) -> &'static [[Rational; DIM]; DIM] {
    static CACHE: OnceLock<[[[Rational; DIM]; DIM]; 3]> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        std::array::from_fn(|k| {
            let cols: Vec<TangentVector> =
                (1..=DIM).map(|j| j_vector_uncached(k + 1, &TangentVector::basis(j))).collect();
            std::array::from_fn(|i| std::array::from_fn(|j| cols[j].0[i].clone()))
        })
    });
    &all[r - 1]
}

/// `J_r X = −♯_r⁻¹ J_r(♯_r X)` on the contact distribution, `J_r R = 0`.
pub fn j_vector(r: usize, x: &TangentVector) -> TangentVector {
    let m = j_vector_matrix(r);
    TangentVector(std::array::from_fn(|i| {
        (0..DIM).map(|j| &m[i][j] * &x.0[j]).sum()
    }))
}

/// `(J_r σ)(X, Y) = σ(J_r X, J_r Y)` on 2-forms.
pub fn j_two_form(r: usize, s: &Form) -> Form {
    assert_eq!(s.degree(), 2);
    let m = j_vector_matrix(r);
    let mut out = Form::zero(2);
    for i in 1..=DIM {
        for j in i + 1..=DIM {
            let mut v = Rational::zero();
            for a in 1..=DIM {
                for b in 1..=DIM {
                    let c = &m[a - 1][i - 1] * &m[b - 1][j - 1];
                    if !c.is_zero() {
                        v += c * s.eval2(a, b);
                    }
                }
            }
            out.add_scaled(&Form::monomial(&[i, j]), &v);
        }
    }
    out
}

/// `*ᵀγ = *(α∧γ)` on transverse forms.
pub fn transverse_hodge(a: &Form) -> Result<Form, Su2Error> {
    require_transverse(a)?;
    Ok(alpha().wedge(a).hodge())
}

/// `E(φ) = φᵀ − Σ_r ½ *(φᵀ∧ω_r∧α) ω_r`, the projection onto `Λ²₃`.
pub fn project_e(a: &Form) -> Form {
    assert_eq!(a.degree(), 2, "E acts on 2-forms");
    let t = a.transverse_part();
    let mut out = t.clone();
    for r in 1..=3 {
        let c = t.wedge(&omega(r)).wedge(&alpha()).hodge().value();
        out.add_scaled(&omega(r), &(-c * ratio(1, 2)));
    }
    out
}

pub fn in_lambda23(s: &Form) -> bool {
    s.degree() == 2 && s.is_transverse() && (1..=3).all(|r| s.wedge(&omega(r)).is_zero())
}

/// Basis `w¹²−w³⁴, w¹³+w²⁴, w¹⁴−w²³` of `Λ²₃`.
pub fn lambda23_basis() -> [Form; 3] {
    let w = Form::monomial;
    [
        w(&[1, 2]) - w(&[3, 4]),
        w(&[1, 3]) + w(&[2, 4]),
        w(&[1, 4]) - w(&[2, 3]),
    ]
}

/// A symmetric 2-tensor `h = h_ij wⁱ⊗wʲ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymTensor(pub [[Rational; DIM]; DIM]);

impl SymTensor {
    pub fn zero() -> Self {
        SymTensor(std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())))
    }

    /// Builds from a function of 1-based indices; caller guarantees symmetry.
    pub fn from_fn(f: impl Fn(usize, usize) -> Rational) -> Self {
        SymTensor(std::array::from_fn(|i| std::array::from_fn(|j| f(i + 1, j + 1))))
    }

    pub fn g_transverse() -> Self {
        Self::from_fn(|i, j| if i == j && i <= 4 { Rational::one() } else { Rational::zero() })
    }

    pub fn alpha_alpha() -> Self {
        Self::from_fn(|i, j| if i == 5 && j == 5 { Rational::one() } else { Rational::zero() })
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    /// `a⊙b = a⊗b + b⊗a` for 1-forms.
    pub fn odot(a: &Form, b: &Form) -> Self {
        Self::from_fn(|i, j| a.at(i) * b.at(j) + b.at(i) * a.at(j))
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.0[i - 1][j - 1]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(|i, j| self.get(i, j) * c)
    }

    pub fn trace(&self) -> Rational {
        (1..=DIM).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn trace_transverse(&self) -> Rational {
        (1..=4).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (1..=DIM).all(|i| (1..=DIM).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_transverse(&self) -> bool {
        (1..=DIM).all(|i| self.get(i, 5).is_zero() && self.get(5, i).is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_zero())
    }

    /// `(J_r h)(X, Y) = h(J_r X, J_r Y)`.
    pub fn j_act(&self, r: usize) -> Self {
        let m = j_vector_matrix(r);
        Self::from_fn(|i, j| {
            let mut v = Rational::zero();
            for a in 0..DIM {
                for b in 0..DIM {
                    let c = &m[a][i - 1] * &m[b][j - 1];
                    if !c.is_zero() {
                        v += c * &self.0[a][b];
                    }
                }
            }
            v
        })
    }

    /// Trace inner product `Σ h_ij k_ij`.
    pub fn dot(&self, other: &SymTensor) -> Rational {
        (0..DIM).flat_map(|i| (0..DIM).map(move |j| (i, j))).map(|(i, j)| &self.0[i][j] * &other.0[i][j]).sum()
    }

    pub fn in_sigma(&self, r: usize) -> bool {
        self.is_symmetric()
            && self.is_transverse()
            && (1..=3).all(|s| {
                let target = if s == r { self.clone() } else { self.scale(&rat(-1)) };
                self.j_act(s) == target
            })
    }
}

impl Add<&SymTensor> for &SymTensor {
    type Output = SymTensor;
    fn add(self, rhs: &SymTensor) -> SymTensor {
        SymTensor::from_fn(|i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub<&SymTensor> for &SymTensor {
    type Output = SymTensor;
    fn sub(self, rhs: &SymTensor) -> SymTensor {
        SymTensor::from_fn(|i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl fmt::Display for SymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let cells: Vec<String> = row.iter().map(crate::exterior::fmt_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `ι_r(h) = ½ ε^r_ik h_kj eⁱ∧eʲ` on `Σ_r`.
pub fn iota_r(r: usize, h: &SymTensor) -> Result<Form, Su2Error> {
    if !h.in_sigma(r) {
        return Err(Su2Error::NotInSigma {
            r,
            detail: "J-eigenvalue test failed".into(),
        });
    }
    let mut out = Form::zero(2);
    for i in 1..=4 {
        for j in 1..=4 {
            let v: Rational = (1..=4).map(|k| rat(eps(r, i, k)) * h.get(k, j)).sum();
            if !v.is_zero() {
                out.add_scaled(&Form::monomial(&[i, j]), &(v * ratio(1, 2)));
            }
        }
    }
    Ok(out)
}

/// Inverse of `ι_r`: `h = −ε^r S` with `S_ij = s(e_i, e_j)`, checked by round trip.
pub fn iota_r_inverse(r: usize, s: &Form) -> Result<SymTensor, Su2Error> {
    if !in_lambda23(s) {
        return Err(Su2Error::NotInLambda23(s.to_string()));
    }
    let h = SymTensor::from_fn(|i, j| {
        if i > 4 || j > 4 {
            return Rational::zero();
        }
        -(1..=4).map(|k| rat(eps(r, i, k)) * s.eval2(k, j)).sum::<Rational>()
    });
    if !h.in_sigma(r) {
        return Err(Su2Error::NotInSigma {
            r,
            detail: format!("preimage of {s} fails the J-eigenvalue test"),
        });
    }
    if iota_r(r, &h)? != *s {
        return Err(Su2Error::NotInSigma {
            r,
            detail: format!("round trip of {s} failed"),
        });
    }
    Ok(h)
}

/// Components of `h = c_T gᵀ + c_α α⊗α + h₁ + h₂ + h₃ + α⊙β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymDecomposition {
    pub c_t: Rational,
    pub c_alpha: Rational,
    pub sigma: [SymTensor; 3],
    pub beta: Form,
}

impl SymDecomposition {
    pub fn reassemble(&self) -> SymTensor {
        let mut h = &SymTensor::g_transverse().scale(&self.c_t) + &SymTensor::alpha_alpha().scale(&self.c_alpha);
        for s in &self.sigma {
            h = &h + s;
        }
        &h + &SymTensor::odot(&alpha(), &self.beta)
    }
}

pub fn sym_decompose(h: &SymTensor) -> SymDecomposition {
    let c_t = h.trace_transverse() * ratio(1, 4);
    let c_alpha = h.get(5, 5).clone();
    let beta = Form::one_form(&std::array::from_fn(|i| if i < 4 { h.0[i][4].clone() } else { Rational::zero() }));
    let traceless = SymTensor::from_fn(|i, j| {
        if i > 4 || j > 4 {
            Rational::zero()
        } else if i == j {
            h.get(i, j) - &c_t
        } else {
            h.get(i, j).clone()
        }
    });
    let acted: Vec<SymTensor> = (1..=3).map(|r| traceless.j_act(r)).collect();
    let sigma = std::array::from_fn(|k| {
        let r = k + 1;
        let (s, t) = cyclic(r);
        SymTensor::from_fn(|i, j| {
            (traceless.get(i, j) + acted[r - 1].get(i, j) - acted[s - 1].get(i, j) - acted[t - 1].get(i, j))
                * ratio(1, 4)
        })
    });
    SymDecomposition {
        c_t,
        c_alpha,
        sigma,
        beta,
    }
}

/// A basis of `Σ_r`, the images of the `Λ²₃` basis under `ι_r⁻¹`.
pub fn sigma_basis(r: usize) -> [SymTensor; 3] {
    let b = lambda23_basis();
    std::array::from_fn(|k| iota_r_inverse(r, &b[k]).expect("Lambda^2_3 basis element"))
}
