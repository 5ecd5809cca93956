//! Levi-Civita connection, curvature, and the torsion-form expressions for the Ricci tensor.

use crate::exterior::{fmt_rational, rat, ratio, Form, Rational, DIM};
use crate::lie::{validate_jacobi, Coframe5, StructureConstants};
use crate::su2::{
    alpha, cyclic, eps, eta, in_lambda23, iota_r_inverse, j_form, omega, project_e, reeb, sym_decompose, SymTensor,
};
use crate::torsion::{classify, double_hypo_coframe, extract_torsion, verify_d2_constraints, TorsionForms};
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurvatureError {
    #[error("{0}")]
    Internal(String),
    #[error("E(Phi{r}) = {form} is not in Lambda^2_3")]
    NotInLambda23 { r: usize, form: Form },
    #[error("structure is not contact-Hypo")]
    NotContactHypo,
    #[error(transparent)]
    Torsion(#[from] crate::torsion::TorsionError),
    #[error(transparent)]
    Jacobi(#[from] crate::lie::JacobiFailure),
}

/// A 5×5 matrix of forms, stored 0-based.
pub type FormMatrix = [[Form; DIM]; DIM];

fn fm_zero(degree: usize) -> FormMatrix {
    std::array::from_fn(|_| std::array::from_fn(|_| Form::zero(degree)))
}

fn fm_wedge(a: &FormMatrix, b: &FormMatrix) -> FormMatrix {
    let deg = a[0][0].degree() + b[0][0].degree();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut out = Form::zero(deg);
            for k in 0..DIM {
                out += &a[i][k].wedge(&b[k][j]);
            }
            out
        })
    })
}

fn fm_add(a: &FormMatrix, b: &FormMatrix) -> FormMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &b[i][j]))
}

fn fm_apply(a: &FormMatrix, v: &[Form; DIM]) -> [Form; DIM] {
    let deg = a[0][0].degree() + v[0].degree();
    std::array::from_fn(|i| {
        let mut out = Form::zero(deg);
        for k in 0..DIM {
            out += &a[i][k].wedge(&v[k]);
        }
        out
    })
}

/// `[[v]]_ij = η_ijk v_k`.
pub fn double_bracket(v: &[Form; DIM]) -> FormMatrix {
    let deg = v[0].degree();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut out = Form::zero(deg);
            for k in 1..=4 {
                let e = eta(i + 1, j + 1, k);
                if e != 0 {
                    out.add_scaled(&v[k - 1], &rat(e));
                }
            }
            out
        })
    })
}

/// `[x]_r` with entries `ε^r_ij x`.
pub fn su2_embed(r: usize, x: &Form) -> FormMatrix {
    std::array::from_fn(|i| std::array::from_fn(|j| x.scale(&rat(eps(r, i + 1, j + 1)))))
}

fn nested<T: Clone>(v: T, n: usize) -> Vec<T> {
    vec![v; n]
}

/// Dense tensor over `{1..5}^rank`, 1-based access.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    rank: usize,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(rank: usize) -> Self {
        Tensor {
            rank,
            data: nested(Rational::zero(), DIM.pow(rank as u32)),
        }
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank);
        idx.iter().fold(0, |acc, &i| acc * DIM + (i - 1))
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Rational) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

fn indices(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..DIM.pow(rank as u32)).map(move |mut n| {
        let mut v = vec![0; rank];
        for slot in v.iter_mut().rev() {
            *slot = n % DIM + 1;
            n /= DIM;
        }
        v
    })
}

/// `Γ_ijk = ⟨∇_{e_i}e_j, e_k⟩` and `ψ_ij(e_k) = Γ_kji`.
#[derive(Clone, Debug)]
pub struct Connection {
    pub gamma: Tensor,
    pub psi: FormMatrix,
}

impl Connection {
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.gamma.get(&[i, j, k])
    }

    pub fn psi(&self, i: usize, j: usize) -> &Form {
        &self.psi[i - 1][j - 1]
    }
}

/// Koszul formula for an orthonormal left-invariant frame.
pub fn levi_civita(sc: &StructureConstants) -> Result<Connection, CurvatureError> {
    let c = |i: usize, j: usize, k: usize| sc.get(k, i, j).clone();
    let mut gamma = Tensor::zeros(3);
    for idx in indices(3) {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        gamma.set(&idx, (c(i, j, k) - c(j, k, i) + c(k, i, j)) * ratio(1, 2));
    }
    let psi = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            Form::one_form(&std::array::from_fn(|k| gamma.get(&[k + 1, j + 1, i + 1]).clone()))
        })
    });
    let conn = Connection { gamma, psi };
    for idx in indices(3) {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        if *conn.gamma(i, j, k) != -conn.gamma(i, k, j).clone() {
            return Err(CurvatureError::Internal(format!("metric compatibility fails at ({i},{j},{k})")));
        }
    }
    structure_equation_residual(&conn, &sc.to_d_images())
        .map_or(Ok(()), |(i, res)| Err(CurvatureError::Internal(format!("dw{i} + psi^w = {res}"))))?;
    Ok(conn)
}

/// First index where `dwⁱ + ψ_ij∧wʲ ≠ 0`, with the residual.
pub fn structure_equation_residual(conn: &Connection, dw: &[Form; DIM]) -> Option<(usize, Form)> {
    (1..=DIM).find_map(|i| {
        let mut x = dw[i - 1].clone();
        for j in 1..=DIM {
            x += &conn.psi(i, j).wedge(&Form::monomial(&[j]));
        }
        (!x.is_zero()).then_some((i, x))
    })
}

/// `⟨R(e_i,e_j)e_k, e_m⟩` with the Ricci tensor `Ric(b,c) = Σ_i ⟨R(e_i,e_b)e_c, e_i⟩`.
#[derive(Clone, Debug)]
pub struct OracleCurvature {
    pub riemann: Tensor,
    pub ric: SymTensor,
    pub scal: Rational,
}

pub fn curvature_oracle(conn: &Connection, sc: &StructureConstants) -> OracleCurvature {
    let g = |i: usize, j: usize, k: usize| conn.gamma(i, j, k);
    let mut riemann = Tensor::zeros(4);
    for idx in indices(4) {
        let (i, j, k, m) = (idx[0], idx[1], idx[2], idx[3]);
        let mut v = Rational::zero();
        for p in 1..=DIM {
            v += g(j, k, p) * g(i, p, m) - g(i, k, p) * g(j, p, m) - sc.get(p, i, j) * g(p, k, m);
        }
        riemann.set(&idx, v);
    }
    let ric = SymTensor::from_fn(|b, c| (1..=DIM).map(|i| riemann.get(&[i, b, c, i]).clone()).sum());
    let scal = ric.trace();
    OracleCurvature { riemann, ric, scal }
}

pub fn first_bianchi_holds(r: &Tensor) -> bool {
    indices(4).all(|idx| {
        let (i, j, k, m) = (idx[0], idx[1], idx[2], idx[3]);
        (r.get(&[i, j, k, m]) + r.get(&[j, k, i, m]) + r.get(&[k, i, j, m])).is_zero()
    })
}

/// `ψ = θ + [[τ]] + Σ_r [μ_r]_r`, with `τ_i = T_ij wʲ`, `μ_r = M^r_j wʲ`.
#[derive(Clone, Debug)]
pub struct ConnectionDecomposition {
    pub theta: FormMatrix,
    /// `τ₁..τ₄` followed by a zero slot, so `[[τ]]` and `θ∧τ` read uniformly.
    pub tau: [Form; DIM],
    pub mu: [Form; 3],
}

impl ConnectionDecomposition {
    pub fn t(&self, i: usize, j: usize) -> Rational {
        self.tau[i - 1].at(j)
    }

    pub fn m(&self, r: usize, j: usize) -> Rational {
        self.mu[r - 1].at(j)
    }

    pub fn theta(&self, i: usize, j: usize) -> &Form {
        &self.theta[i - 1][j - 1]
    }

    pub fn reassemble(&self) -> FormMatrix {
        let mut out = fm_add(&self.theta, &double_bracket(&self.tau));
        for r in 1..=3 {
            out = fm_add(&out, &su2_embed(r, &self.mu[r - 1]));
        }
        out
    }
}

pub fn psi_decompose(conn: &Connection) -> Result<ConnectionDecomposition, CurvatureError> {
    let tau = std::array::from_fn(|i| if i < 4 { conn.psi(i + 1, 5).clone() } else { Form::zero(1) });
    let mu = std::array::from_fn(|k| {
        let mut m = Form::zero(1);
        for i in 1..=4 {
            for j in 1..=4 {
                m.add_scaled(conn.psi(i, j), &rat(eps(k + 1, i, j)));
            }
        }
        m.scale(&ratio(1, 4))
    });
    let mut theta = fm_zero(1);
    for i in 1..=4 {
        for j in 1..=4 {
            let mut x = conn.psi(i, j).clone();
            for r in 1..=3 {
                x.add_scaled(&mu[r - 1], &rat(-eps(r, i, j)));
            }
            theta[i - 1][j - 1] = x;
        }
    }
    let dec = ConnectionDecomposition { theta, tau, mu };
    if dec.reassemble() != conn.psi {
        return Err(CurvatureError::Internal("psi reassembly failed".into()));
    }
    Ok(dec)
}

/// `θ` has vanishing fifth row and column and is annihilated by every `ε^r` contraction.
pub fn in_su2(m: &FormMatrix) -> bool {
    let deg = m[0][0].degree();
    let border = (0..DIM).all(|i| m[i][4].is_zero() && m[4][i].is_zero());
    let contractions = (1..=3).all(|r| {
        let mut x = Form::zero(deg);
        for i in 1..=4 {
            for j in 1..=4 {
                x.add_scaled(&m[i - 1][j - 1], &rat(eps(r, i, j)));
            }
        }
        x.is_zero()
    });
    border && contractions
}

/// `[μ_r]_r∧[[τ]] + [[τ]]∧[μ_r]_r = [[[μ_r]_r∧τ]]` and `[[τ]]∧θ + θ∧[[τ]] = [[θ∧τ]]`.
pub fn bracket_identities_hold(dec: &ConnectionDecomposition) -> bool {
    let tt = double_bracket(&dec.tau);
    let mu_ok = (1..=3).all(|r| {
        let m = su2_embed(r, &dec.mu[r - 1]);
        fm_add(&fm_wedge(&m, &tt), &fm_wedge(&tt, &m)) == double_bracket(&fm_apply(&m, &dec.tau))
    });
    let theta_ok =
        fm_add(&fm_wedge(&tt, &dec.theta), &fm_wedge(&dec.theta, &tt)) == double_bracket(&fm_apply(&dec.theta, &dec.tau));
    mu_ok && theta_ok
}

/// `Ψ = dψ + ψ∧ψ`.
pub fn curvature_forms(conn: &Connection, cf: &Coframe5) -> FormMatrix {
    let psi_sq = fm_wedge(&conn.psi, &conn.psi);
    std::array::from_fn(|i| std::array::from_fn(|j| &cf.d(&conn.psi[i][j]) + &psi_sq[i][j]))
}

/// `Dθ = ½S_ijkl wᵏ∧wˡ`, `Dτ_i = ½T_ijk wʲ∧wᵏ`, `Dμ_r = ½N^r_kl wᵏ∧wˡ`.
#[derive(Clone, Debug)]
pub struct DQuantities {
    pub d_theta: FormMatrix,
    pub d_tau: [Form; 4],
    pub d_mu: [Form; 3],
    pub s: Tensor,
    /// `T_ijk`; the slot `i = 5` is identically zero.
    pub t: Tensor,
    /// `N^r_kl` stored at `[r, k, l]` with `r ≤ 3`.
    pub n: Tensor,
}

impl DQuantities {
    pub fn s(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        self.s.get(&[i, j, k, l])
    }

    pub fn t(&self, i: usize, j: usize, k: usize) -> &Rational {
        self.t.get(&[i, j, k])
    }

    pub fn n(&self, r: usize, k: usize, l: usize) -> &Rational {
        self.n.get(&[r, k, l])
    }

    /// `S_ijkl + η_ijh T_hkl + Σ_r ε^r_ij N^r_kl`.
    pub fn riemann_component(&self, i: usize, j: usize, k: usize, l: usize) -> Rational {
        let mut v = self.s(i, j, k, l).clone();
        for h in 1..=4 {
            let e = eta(i, j, h);
            if e != 0 {
                v += rat(e) * self.t(h, k, l);
            }
        }
        for r in 1..=3 {
            let e = eps(r, i, j);
            if e != 0 {
                v += rat(e) * self.n(r, k, l);
            }
        }
        v
    }
}

pub fn d_quantities(dec: &ConnectionDecomposition, cf: &Coframe5) -> DQuantities {
    let tau = &dec.tau;
    let tt = double_bracket(tau);
    let tt_sq = fm_wedge(&tt, &tt);
    let th_sq = fm_wedge(&dec.theta, &dec.theta);
    let quad: Vec<Form> = (1..=3)
        .map(|r| {
            let mut q = Form::zero(2);
            for a in 1..=4 {
                for b in 1..=4 {
                    q.add_scaled(&tau[a - 1].wedge(&tau[b - 1]), &rat(eps(r, a, b)));
                }
            }
            q.scale(&ratio(1, 4))
        })
        .collect();
    let d_theta: FormMatrix = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut x = &(&cf.d(&dec.theta[i][j]) + &th_sq[i][j]) + &tt_sq[i][j];
            for r in 1..=3 {
                x.add_scaled(&quad[r - 1], &rat(eps(r, i + 1, j + 1)));
            }
            x
        })
    });
    let th_tau = fm_apply(&dec.theta, tau);
    let d_tau: [Form; 4] = std::array::from_fn(|i| {
        let mut x = &cf.d(&tau[i]) + &th_tau[i];
        for r in 1..=3 {
            for k in 1..=4 {
                x.add_scaled(&dec.mu[r - 1].wedge(&tau[k - 1]), &rat(eps(r, i + 1, k)));
            }
        }
        x
    });
    let d_mu: [Form; 3] = std::array::from_fn(|k| {
        let (a, b) = cyclic(k + 1);
        &(&cf.d(&dec.mu[k]) - &quad[k]) - &dec.mu[a - 1].wedge(&dec.mu[b - 1]).scale(&rat(2))
    });
    let mut s = Tensor::zeros(4);
    for idx in indices(4) {
        s.set(&idx, d_theta[idx[0] - 1][idx[1] - 1].eval2(idx[2], idx[3]));
    }
    let mut t = Tensor::zeros(3);
    let mut n = Tensor::zeros(3);
    for idx in indices(3) {
        if idx[0] <= 4 {
            t.set(&idx, d_tau[idx[0] - 1].eval2(idx[1], idx[2]));
        }
        if idx[0] <= 3 {
            n.set(&idx, d_mu[idx[0] - 1].eval2(idx[1], idx[2]));
        }
    }
    DQuantities {
        d_theta,
        d_tau,
        d_mu,
        s,
        t,
        n,
    }
}

/// `S_ijkl = −S_jikl = −S_ijlk`, `T_ijk = −T_ikj`, `N^r_kl = −N^r_lk`.
pub fn d_symmetries_hold(dq: &DQuantities) -> bool {
    let s_ok = indices(4).all(|x| {
        let (i, j, k, l) = (x[0], x[1], x[2], x[3]);
        *dq.s(i, j, k, l) == -dq.s(j, i, k, l).clone() && *dq.s(i, j, k, l) == -dq.s(i, j, l, k).clone()
    });
    let t_ok = indices(3).all(|x| *dq.t(x[0], x[1], x[2]) == -dq.t(x[0], x[2], x[1]).clone());
    let n_ok = indices(3).filter(|x| x[0] <= 3).all(|x| *dq.n(x[0], x[1], x[2]) == -dq.n(x[0], x[2], x[1]).clone());
    s_ok && t_ok && n_ok
}

/// First `(i, j, k, l)` where the D-quantity expansion differs from `Ψ_ij(e_k, e_l)`.
pub fn curvature_reassembly_mismatch(dq: &DQuantities, psi_curv: &FormMatrix) -> Option<[usize; 4]> {
    indices(4)
        .find(|x| dq.riemann_component(x[0], x[1], x[2], x[3]) != psi_curv[x[0] - 1][x[1] - 1].eval2(x[2], x[3]))
        .map(|x| [x[0], x[1], x[2], x[3]])
}

/// `Ψ_ij(e_k, e_l) = ⟨R(e_k, e_l)e_j, e_i⟩`.
pub fn curvature_forms_match_oracle(psi_curv: &FormMatrix, oracle: &OracleCurvature) -> bool {
    indices(4).all(|x| psi_curv[x[0] - 1][x[1] - 1].eval2(x[2], x[3]) == *oracle.riemann.get(&[x[2], x[3], x[1], x[0]]))
}

/// `Dτ_i` rebuilt from `T`, `M` and `θ` alone, with `dT_ij = 0`.
pub fn d_tau_from_algebra(dec: &ConnectionDecomposition) -> [Form; 4] {
    let t = |i: usize, j: usize| if i <= 4 { dec.t(i, j) } else { Rational::zero() };
    let th = |a: usize, b: usize, k: usize| dec.theta(a, b).at(k);
    std::array::from_fn(|i0| {
        let i = i0 + 1;
        let mut x = Form::zero(2);
        for k in 1..=DIM {
            for j in 1..=DIM {
                let mut v = Rational::zero();
                for m in 1..=DIM {
                    v -= t(i, m) * th(m, j, k) + t(m, j) * th(m, i, k);
                }
                for m in 1..=DIM {
                    for l in 1..=4 {
                        let e = eta(m, j, l);
                        if e != 0 {
                            v -= t(i, m) * t(l, k) * rat(e);
                        }
                    }
                }
                for r in 1..=3 {
                    for l in 1..=4 {
                        let mk = dec.m(r, k);
                        v -= t(i, l) * &mk * rat(eps(r, l, j));
                        v += t(l, j) * &mk * rat(eps(r, i, l));
                    }
                }
                if !v.is_zero() {
                    x.add_scaled(&Form::monomial(&[k, j]), &v);
                }
            }
        }
        x
    })
}

/// One entry of the torsion expression for Ricci, read literally.
/// The `η` term is antisymmetric in `i, j`, so only `i <= j` gives the Ricci entry.
pub fn ricci_from_tn_entry(dq: &DQuantities, i: usize, j: usize) -> Rational {
    let mut v = Rational::zero();
    for r in 1..=3 {
        for k in 1..=DIM {
            v += rat(eps(r, i, k)) * dq.n(r, j, k) + rat(eps(r, j, k)) * dq.n(r, i, k);
            for l in 1..=4 {
                let e = eta(i, j, l) * eps(r, l, k);
                if e != 0 {
                    v -= rat(e) * dq.n(r, k, 5);
                }
            }
        }
    }
    if i == 5 && j == 5 {
        v += (1..=4).map(|k| dq.t(k, k, 5).clone()).sum::<Rational>();
    }
    if i <= 4 {
        v += dq.t(i, j, 5);
    }
    v
}

/// Ricci tensor from `N` and `T` only; `S` never enters.
pub fn ricci_from_tn(dq: &DQuantities) -> (SymTensor, Rational) {
    let ric = SymTensor::from_fn(|i, j| ricci_from_tn_entry(dq, i.min(j), i.max(j)));
    let mut s = Rational::zero();
    for r in 1..=3 {
        for i in 1..=4 {
            for k in 1..=4 {
                s += rat(2 * eps(r, i, k)) * dq.n(r, i, k);
            }
        }
    }
    s += rat(2) * (1..=4).map(|k| dq.t(k, k, 5).clone()).sum::<Rational>();
    (ric, s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PullbackIdentity {
    pub name: &'static str,
    pub extracted: String,
    pub formula: String,
    pub holds: bool,
}

fn identity_row(name: &'static str, a: String, b: String, holds: bool) -> PullbackIdentity {
    PullbackIdentity {
        name,
        extracted: a,
        formula: b,
        holds,
    }
}

/// The torsion forms expressed through `T_ij = τ_i(e_j)` and `M^r_j = μ_r(e_j)`.
pub fn pullback_identities(dec: &ConnectionDecomposition, t: &TorsionForms) -> Vec<PullbackIdentity> {
    let tt = |i: usize, j: usize| dec.t(i, j);
    let e = |r: usize| -> Rational {
        let mut s = Rational::zero();
        for i in 1..=4 {
            for j in 1..=4 {
                s += rat(eps(r, i, j)) * tt(i, j);
            }
        }
        s
    };
    let h = ratio(1, 2);
    let mut out = Vec::new();
    let mut scalar = |name, lhs: &Rational, rhs: Rational| {
        out.push(identity_row(name, fmt_rational(lhs), fmt_rational(&rhs), *lhs == rhs));
    };
    scalar("f11", t.f(1, 1), &h * (1..=4).map(|i| tt(i, i)).sum::<Rational>());
    scalar("f12", t.f(1, 2), &h * e(3) - rat(2) * dec.m(3, 5));
    scalar("f13", t.f(1, 3), -&h * e(2) + rat(2) * dec.m(2, 5));
    scalar("f23", t.f(2, 3), &h * e(1) - rat(2) * dec.m(1, 5));
    for (r, name) in [(1, "phi1"), (2, "phi2"), (3, "phi3")] {
        scalar(name, t.phi(r), -&h * e(r));
    }
    let nu_formula = |p: usize, q: usize| {
        Form::one_form(&std::array::from_fn(|j0| {
            let j = j0 + 1;
            if j == 5 {
                return Rational::zero();
            }
            (1..=4)
                .map(|i| rat(2 * eps(p, i, j)) * dec.m(p, i) + rat(2 * eps(q, i, j)) * dec.m(q, i))
                .sum()
        }))
    };
    let nu4 = Form::one_form(&std::array::from_fn(|i| if i < 4 { tt(i + 1, 5) } else { Rational::zero() }));
    let sym = |p: usize, q: usize| tt(p, q) + tt(q, p);
    let sigma_formula = |a: usize, b: usize, c: usize, sign: i64| {
        let mut res = Form::zero(2);
        for i in 1..=4 {
            for j in 1..=4 {
                let mut v = Rational::zero();
                for p in 1..=4 {
                    v += rat(eps(a, i, p)) * sym(p, j);
                    for q in 1..=4 {
                        let e = eps(b, i, p) * eps(c, q, j);
                        if e != 0 {
                            v += rat(sign * e) * sym(p, q);
                        }
                    }
                }
                if !v.is_zero() && i != j {
                    res.add_scaled(&Form::monomial(&[i, j]), &(v * ratio(1, 4)));
                }
            }
        }
        res
    };
    let mut sigma4 = Form::zero(2);
    for i in 1..=4 {
        for j in 1..=4 {
            if i == j {
                continue;
            }
            let mut v = tt(j, i);
            for r in 1..=3 {
                for p in 1..=4 {
                    for q in 1..=4 {
                        let e = eps(r, p, q) * eps(r, i, j);
                        if e != 0 {
                            v += rat(e) * tt(p, q) * ratio(1, 4);
                        }
                    }
                }
            }
            sigma4.add_scaled(&Form::monomial(&[i, j]), &v);
        }
    }
    let forms: [(&'static str, &Form, Form); 8] = [
        ("nu1", t.nu(1), nu_formula(2, 3)),
        ("nu2", t.nu(2), nu_formula(1, 3)),
        ("nu3", t.nu(3), nu_formula(1, 2)),
        ("nu4", t.nu(4), nu4),
        ("sigma1", t.sigma(1), sigma_formula(1, 2, 3, 1)),
        ("sigma2", t.sigma(2), sigma_formula(2, 1, 3, -1)),
        ("sigma3", t.sigma(3), sigma_formula(3, 1, 2, 1)),
        ("sigma4", t.sigma(4), sigma4),
    ];
    for (name, lhs, rhs) in forms {
        out.push(identity_row(name, lhs.to_string(), rhs.to_string(), *lhs == rhs));
    }
    out
}

/// Passes when every identity holds; otherwise the first failure.
pub fn pullback_torsion_check(dec: &ConnectionDecomposition, t: &TorsionForms) -> Result<(), PullbackIdentity> {
    match pullback_identities(dec, t).into_iter().find(|p| !p.holds) {
        Some(p) => Err(p),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DuplicateReading {
    /// `−½ν₂∧J₁ν₃` counted once.
    Once,
    /// Both printed occurrences kept.
    Twice,
    /// Second occurrence read as `−½ν₃∧J₁ν₂`.
    Swapped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sigma1Term {
    /// `½*dσ₁`, matching the `σ₂`, `σ₃` terms.
    HodgeD,
    /// `½ι_R dσ₁`.
    ReebD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum F12Partner {
    Sigma1,
    Sigma2,
}

/// Sign and term choices in the torsion-form curvature formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Conventions {
    /// `d* = dstar_sign · (−1)^k *d*` on k-forms.
    pub dstar_sign: i64,
    /// Coefficient of `Φ₄⊙α` in `Ric₀`, with `a⊙b = a⊗b + b⊗a`.
    pub odot_sign: i64,
    pub phi1_duplicate: DuplicateReading,
    pub phi1_sigma1: Sigma1Term,
    pub phi1_dj1_nu4: bool,
    pub phi2_f12: F12Partner,
}

impl Conventions {
    /// Agrees with the Koszul oracle on every catalog instance.
    pub const CALIBRATED: Conventions = Conventions {
        dstar_sign: 1,
        odot_sign: -1,
        phi1_duplicate: DuplicateReading::Once,
        phi1_sigma1: Sigma1Term::HodgeD,
        phi1_dj1_nu4: true,
        phi2_f12: F12Partner::Sigma1,
    };

    /// The formulas transcribed literally.
    pub const LITERAL: Conventions = Conventions {
        dstar_sign: 1,
        odot_sign: 1,
        phi1_duplicate: DuplicateReading::Twice,
        phi1_sigma1: Sigma1Term::ReebD,
        phi1_dj1_nu4: false,
        phi2_f12: F12Partner::Sigma2,
    };

    /// Each single-switch departure from the calibrated choice, by name.
    pub fn alternatives() -> Vec<(&'static str, Conventions)> {
        let c = Self::CALIBRATED;
        vec![
            ("dstar_sign", Conventions { dstar_sign: -1, ..c }),
            ("odot_sign", Conventions { odot_sign: 1, ..c }),
            ("phi1_duplicate_twice", Conventions { phi1_duplicate: DuplicateReading::Twice, ..c }),
            ("phi1_duplicate_swapped", Conventions { phi1_duplicate: DuplicateReading::Swapped, ..c }),
            ("phi1_sigma1_reeb", Conventions { phi1_sigma1: Sigma1Term::ReebD, ..c }),
            ("phi1_without_dj1_nu4", Conventions { phi1_dj1_nu4: false, ..c }),
            ("phi2_f12_sigma2", Conventions { phi2_f12: F12Partner::Sigma2, ..c }),
        ]
    }
}

impl Default for Conventions {
    fn default() -> Self {
        Self::CALIBRATED
    }
}

/// `d*a = (−1)^k *d*a` on k-forms.
pub fn codifferential(cf: &Coframe5, a: &Form) -> Form {
    let dd = cf.d(&a.hodge()).hodge();
    if a.degree() % 2 == 1 {
        -dd
    } else {
        dd
    }
}

struct Ctx<'a> {
    t: &'a TorsionForms,
    cf: &'a Coframe5,
    conv: Conventions,
}

impl Ctx<'_> {
    fn dstar(&self, a: &Form) -> Form {
        codifferential(self.cf, a).scale(&rat(self.conv.dstar_sign))
    }

    fn dstar0(&self, a: &Form) -> Rational {
        self.dstar(a).value()
    }

    /// `*(df₁₁∧ω₁²)`, zero for constant `f₁₁`.
    fn df11_term(&self) -> Rational {
        let df = self.cf.d(&Form::scalar(self.t.f(1, 1).clone()));
        df.wedge(&omega(1)).wedge(&omega(1)).hodge().value()
    }

    fn nu_pairings(&self) -> Rational {
        let n = |i| self.t.nu(i);
        n(1).inner(n(2)) + n(1).inner(n(3)) - n(1).inner(n(4)) + n(2).inner(n(3)) - n(2).inner(n(4)) - n(3).inner(n(4))
    }

    fn f_phi(&self) -> Rational {
        let (t, f) = (self.t, |i, j| self.t.f(i, j));
        -rat(4) * t.phi(1) * f(2, 3) + rat(4) * t.phi(2) * f(1, 3) - rat(4) * t.phi(3) * f(1, 2)
    }
}

fn sum_sq(xs: impl Iterator<Item = Rational>) -> Rational {
    xs.map(|x| &x * &x).sum()
}

pub fn scalar_via_torsion_with(t: &TorsionForms, cf: &Coframe5, conv: Conventions) -> Rational {
    let c = Ctx { t, cf, conv };
    let f11 = t.f(1, 1);
    let mut s = -rat(5) * f11 * f11 - sum_sq(t.phi.iter().cloned()) + c.f_phi();
    s += (1..=3).map(|i| c.dstar0(t.nu(i))).sum::<Rational>() - rat(2) * c.dstar0(t.nu(4));
    s -= ratio(1, 2) * (1..=3).map(|i| t.nu(i).norm2()).sum::<Rational>();
    s += c.nu_pairings();
    s -= rat(2) * c.df11_term();
    s -= ratio(1, 2) * (1..=4).map(|i| t.sigma(i).norm2()).sum::<Rational>();
    s
}

pub fn scalar_via_torsion(t: &TorsionForms, cf: &Coframe5) -> Rational {
    scalar_via_torsion_with(t, cf, Conventions::CALIBRATED)
}

/// `Ric = (λ/4)gᵀ + μ α⊗α + Ric₀`.
pub fn lambda_mu_with(t: &TorsionForms, cf: &Coframe5, conv: Conventions) -> (Rational, Rational) {
    let c = Ctx { t, cf, conv };
    let f11 = t.f(1, 1);
    let phi_sq = sum_sq(t.phi.iter().cloned());
    let mut lambda = -rat(4) * f11 * f11 - rat(2) * &phi_sq + c.f_phi();
    lambda += (1..=3).map(|i| c.dstar0(t.nu(i))).sum::<Rational>() - c.dstar0(t.nu(4));
    lambda -= ratio(1, 2) * (1..=3).map(|i| t.nu(i).norm2()).sum::<Rational>();
    lambda += c.nu_pairings();
    lambda -= t.sigma(4).norm2();
    lambda -= c.df11_term();
    let mut mu = -f11 * f11 + phi_sq - c.dstar0(t.nu(4));
    mu -= ratio(1, 2) * (1..=3).map(|i| t.sigma(i).norm2()).sum::<Rational>();
    mu += ratio(1, 2) * t.sigma(4).norm2();
    mu -= c.df11_term();
    (lambda, mu)
}

pub fn lambda_mu(t: &TorsionForms, cf: &Coframe5) -> (Rational, Rational) {
    lambda_mu_with(t, cf, Conventions::CALIBRATED)
}

/// `Φ₁, Φ₂, Φ₃` and `Φ₄`.
pub fn phi_forms(t: &TorsionForms, cf: &Coframe5, conv: Conventions) -> ([Form; 3], Form) {
    let c = Ctx { t, cf, conv };
    let (h, q) = (ratio(1, 2), ratio(1, 4));
    let f = |i, j| t.f(i, j).clone();
    let phi = |i| t.phi(i).clone();
    let nu = |i| t.nu(i);
    let sg = |i| t.sigma(i);
    let d = |a: &Form| cf.d(a);
    let jw = |r, a, b| nu(a).wedge(&j_form(r, nu(b)));
    let djn = |r, i| d(&j_form(r, nu(i)));
    let ir = |a: &Form| a.interior(&reeb());

    let mut p1 = -&h * &f(1, 1) * sg(1) + &h * &f(1, 2) * sg(2) + &h * &f(1, 3) * sg(3) - f(2, 3) * sg(4);
    p1 += &(phi(3) * sg(2) - phi(2) * sg(3) - phi(1) * sg(4));
    p1 += &(-&q * &jw(1, 1, 1) + &h * &jw(1, 1, 4) + &q * &jw(1, 2, 2) - &h * &jw(1, 2, 3) + &q * &jw(1, 3, 3));
    match conv.phi1_duplicate {
        DuplicateReading::Once => {}
        DuplicateReading::Twice => p1 -= &(&h * &jw(1, 2, 3)),
        DuplicateReading::Swapped => p1 -= &(&h * &jw(1, 3, 2)),
    }
    p1 += &(&h * &jw(1, 4, 4));
    p1 += &match conv.phi1_sigma1 {
        Sigma1Term::HodgeD => &h * &d(sg(1)).hodge(),
        Sigma1Term::ReebD => &h * &ir(&d(sg(1))),
    };
    p1 += &(-&h * &djn(1, 1) + &h * &djn(1, 2) + &h * &djn(1, 3));
    if conv.phi1_dj1_nu4 {
        p1 -= &(&h * &djn(1, 4));
    }

    let f12_partner = match conv.phi2_f12 {
        F12Partner::Sigma1 => sg(1),
        F12Partner::Sigma2 => sg(2),
    };
    let mut p2 = -&h * &f(1, 2) * f12_partner - &h * &f(1, 1) * sg(2) + &h * &f(2, 3) * sg(3) + f(1, 3) * sg(4);
    p2 += &(-phi(3) * sg(1) + phi(1) * sg(3) - phi(2) * sg(4));
    p2 += &(&h * &d(sg(2)).hodge());
    p2 += &(&h * &djn(2, 1) - &h * &djn(2, 2) - &h * &djn(2, 4) + &h * &djn(2, 3));
    p2 += &(&q * &jw(2, 1, 1) - &h * &jw(2, 1, 3) - &q * &jw(2, 2, 2));
    p2 += &(&h * &jw(2, 2, 4) + &h * &jw(2, 4, 4) + &q * &jw(2, 3, 3));

    let mut p3 = -&h * &(f(1, 3) * sg(1) + f(2, 3) * sg(2) + f(1, 1) * sg(3));
    p3 += &(phi(2) * sg(1) - phi(1) * sg(2) - phi(3) * sg(4));
    p3 += &(&h * &d(sg(3)).hodge() - f(1, 2) * sg(4));
    p3 += &(&q * &(jw(3, 1, 1) + jw(3, 2, 2) - jw(3, 3, 3)) - &h * &jw(3, 1, 2));
    p3 += &(&h * &jw(3, 3, 4) + &h * &jw(3, 4, 4));
    p3 += &(&h * &(djn(3, 1) + djn(3, 2) - djn(3, 3) - djn(3, 4)));

    let nu4 = nu(4);
    let mut p4 = -ratio(3, 2) * &f(1, 1) * nu4;
    p4 -= &(&h * &c.dstar(sg(4)).transverse_part());
    p4 -= &(&h * &j_form(2, &c.dstar(sg(2)).transverse_part()));
    p4 -= &(&h * &f(2, 3) * &j_form(1, nu4));
    p4 -= &(&h * &f(1, 2) * &j_form(3, nu4));
    p4 += &(ratio(3, 2) * (phi(1) * j_form(1, nu4) + phi(2) * j_form(2, nu4) + phi(3) * j_form(3, nu4)));
    p4 -= &(&h * &ir(&(d(nu(1)) + d(nu(2)) + d(nu(3)))));
    p4 += &ir(&(&d(nu4) + &(&h * &d(sg(4)).hodge())));
    p4 -= &j_form(1, &ir(&d(sg(1)).hodge()));
    p4 -= &(ratio(3, 2) * j_form(2, &ir(&d(sg(2)).hodge())));
    p4 -= &j_form(3, &ir(&d(sg(3)).hodge()));
    p4 += &(&h * &j_form(1, &ir(&djn(1, 4))));
    p4 += &(&h * &j_form(3, &ir(&djn(3, 4))));
    // df terms; they vanish for constant torsion functions
    let df = |i, j| cf.d(&Form::scalar(f(i, j)));
    p4 += &(rat(3) * df(1, 1).transverse_part());
    let hodge_df = &(&df(1, 2).wedge(&omega(3)).hodge() - &df(1, 3).wedge(&omega(2)).hodge())
        + &df(2, 3).wedge(&omega(1)).hodge();
    p4 += &ir(&hodge_df);

    ([p1, p2, p3], p4)
}

#[derive(Clone, Debug)]
pub struct RicciReport {
    pub ric_oracle: SymTensor,
    pub s_oracle: Rational,
    pub ric_tn: SymTensor,
    pub s_torsion: Rational,
    pub lambda: Rational,
    pub mu: Rational,
    pub phi: [Form; 3],
    pub e_phi: [Form; 3],
    pub phi4: Form,
    pub ric0: SymTensor,
    pub ric_assembled: SymTensor,
}

impl RicciReport {
    /// Oracle values of `λ = tr_gᵀ Ric` and `μ = Ric(R, R)`.
    pub fn oracle_lambda_mu(&self) -> (Rational, Rational) {
        (self.ric_oracle.trace_transverse(), self.ric_oracle.get(5, 5).clone())
    }

    /// Every torsion-side quantity agrees with the oracle.
    pub fn agrees_with_oracle(&self) -> bool {
        self.ric_assembled == self.ric_oracle
            && self.s_torsion == self.s_oracle
            && (self.lambda.clone(), self.mu.clone()) == self.oracle_lambda_mu()
    }

    /// `Ric₀` has zero `gᵀ`-trace and no `α⊗α` component.
    pub fn ric0_is_traceless(&self) -> bool {
        self.ric0.trace_transverse().is_zero() && self.ric0.get(5, 5).is_zero()
    }
}

pub struct CurvatureData {
    pub sc: StructureConstants,
    pub conn: Connection,
    pub oracle: OracleCurvature,
}

pub fn oracle_for(cf: &Coframe5) -> Result<CurvatureData, CurvatureError> {
    validate_jacobi(cf)?;
    let sc = StructureConstants::from_coframe(cf);
    let conn = levi_civita(&sc)?;
    let oracle = curvature_oracle(&conn, &sc);
    Ok(CurvatureData { sc, conn, oracle })
}

/// `Σ_r ι_r⁻¹E(Φ_r) + odot_sign · Φ₄⊙α`.
pub fn ric0_from_phis(phi: &[Form; 3], phi4: &Form, conv: Conventions) -> Result<SymTensor, CurvatureError> {
    let mut ric0 = SymTensor::zero();
    for r in 1..=3 {
        let e = project_e(&phi[r - 1]);
        let h = iota_r_inverse(r, &e).map_err(|_| CurvatureError::NotInLambda23 { r, form: e.clone() })?;
        ric0 = &ric0 + &h;
    }
    Ok(&ric0 + &SymTensor::odot(phi4, &alpha()).scale(&rat(conv.odot_sign)))
}

pub fn ricci_via_torsion_with(
    t: &TorsionForms,
    cf: &Coframe5,
    conv: Conventions,
) -> Result<RicciReport, CurvatureError> {
    let data = oracle_for(cf)?;
    let dec = psi_decompose(&data.conn)?;
    let dq = d_quantities(&dec, cf);
    let (ric_tn, _) = ricci_from_tn(&dq);
    let s_torsion = scalar_via_torsion_with(t, cf, conv);
    let (lambda, mu) = lambda_mu_with(t, cf, conv);
    let (phi, phi4) = phi_forms(t, cf, conv);
    let e_phi = std::array::from_fn(|r| project_e(&phi[r]));
    let ric0 = ric0_from_phis(&phi, &phi4, conv)?;
    let ric_assembled = &(&SymTensor::g_transverse().scale(&(&lambda * ratio(1, 4)))
        + &SymTensor::alpha_alpha().scale(&mu))
        + &ric0;
    Ok(RicciReport {
        ric_oracle: data.oracle.ric.clone(),
        s_oracle: data.oracle.scal.clone(),
        ric_tn,
        s_torsion,
        lambda,
        mu,
        phi,
        e_phi,
        phi4,
        ric0,
        ric_assembled,
    })
}

pub fn ricci_via_torsion(t: &TorsionForms, cf: &Coframe5) -> Result<RicciReport, CurvatureError> {
    ricci_via_torsion_with(t, cf, Conventions::CALIBRATED)
}

/// Reduced `Φ₂`, `Φ₃` and `Φ₄ = 3J₁(df₂₃)ᵀ` on contact-Hypo structures.
pub fn contact_hypo_phis(t: &TorsionForms, cf: &Coframe5) -> (Form, Form, Form) {
    let f23 = t.f(2, 3).clone();
    let h = ratio(1, 2);
    let p2 = &((&h * &f23 - rat(2)) * t.sigma(3)) + &(&h * &cf.d(t.sigma(2)).hodge());
    let p3 = &((-&h * &f23 + rat(2)) * t.sigma(2)) + &(&h * &cf.d(t.sigma(3)).hodge());
    let p4 = rat(3) * j_form(1, &cf.d(&Form::scalar(f23)).transverse_part());
    (p2, p3, p4)
}

pub fn contact_hypo_ricci(t: &TorsionForms, cf: &Coframe5) -> Result<SymTensor, CurvatureError> {
    if !classify(t).contact_hypo {
        return Err(CurvatureError::NotContactHypo);
    }
    let (p2, p3, p4) = contact_hypo_phis(t, cf);
    ric0_from_phis(&[Form::zero(2), p2, p3], &p4, Conventions::CALIBRATED)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    fn push(&mut self, check: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            check: check.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, check: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == check)
    }
}

/// Specialised scalar-curvature formulas by class; `None` when the class does not apply.
pub fn class_scalar_formulas(t: &TorsionForms) -> Vec<(&'static str, Rational)> {
    let c = classify(t);
    let h = ratio(1, 2);
    let n = |i: usize| t.sigma(i).norm2();
    let mut out = Vec::new();
    if c.hypo {
        let p1 = t.phi(1);
        let v = -p1 * p1 - rat(4) * p1 * t.f(2, 3) - rat(2) * t.nu(4).norm2() - &h * (n(2) + n(3) + n(4));
        out.push(("hypo", v));
    }
    if c.contact_hypo {
        out.push(("contact_hypo", rat(-4) + rat(8) * t.f(2, 3) - &h * n(2) - &h * n(3)));
    }
    if c.double_hypo {
        out.push(("double_hypo", rat(20) - &h * n(3) - &h * n(4)));
    }
    if c.sasaki_einstein_structure {
        out.push(("sasaki_einstein", rat(20)));
    }
    out
}

/// On double-Hypo torsion: `s ≤ 20`, with equality exactly on the Sasaki-Einstein pattern.
pub fn double_hypo_bound(t: &TorsionForms, s: &Rational) -> Option<bool> {
    let c = classify(t);
    c.double_hypo.then(|| *s <= rat(20) && ((*s == rat(20)) == c.sasaki_einstein_structure))
}

pub fn verify_all(cf: &Coframe5) -> VerificationReport {
    let mut rep = VerificationReport {
        name: cf.name.clone(),
        checks: Vec::new(),
    };
    if let Err(e) = validate_jacobi(cf) {
        rep.push("jacobi", false, e.to_string());
        return rep;
    }
    rep.push("jacobi", true, "");
    let t = match extract_torsion(cf) {
        Ok(t) => t,
        Err(e) => {
            rep.push("torsion_reassembly", false, e.to_string());
            return rep;
        }
    };
    rep.push("torsion_reassembly", true, "");
    rep.push("d2_constraints", verify_d2_constraints(&t), "");
    let data = match oracle_for(cf) {
        Ok(d) => d,
        Err(e) => {
            rep.push("levi_civita", false, e.to_string());
            return rep;
        }
    };
    let structure = structure_equation_residual(&data.conn, cf.d_images());
    rep.push(
        "structure_equation",
        structure.is_none(),
        structure.map(|(i, r)| format!("dw{i} + psi^w = {r}")).unwrap_or_default(),
    );
    rep.push("first_bianchi", first_bianchi_holds(&data.oracle.riemann), "");
    rep.push("oracle_ric_symmetric", data.oracle.ric.is_symmetric(), "");
    let dec = match psi_decompose(&data.conn) {
        Ok(d) => d,
        Err(e) => {
            rep.push("psi_reassembly", false, e.to_string());
            return rep;
        }
    };
    rep.push("psi_reassembly", dec.reassemble() == data.conn.psi, "");
    rep.push("theta_su2", in_su2(&dec.theta), "");
    rep.push("bracket_identities", bracket_identities_hold(&dec), "");
    let psi_curv = curvature_forms(&data.conn, cf);
    rep.push("curvature_forms_vs_oracle", curvature_forms_match_oracle(&psi_curv, &data.oracle), "");
    let dq = d_quantities(&dec, cf);
    let mismatch = curvature_reassembly_mismatch(&dq, &psi_curv);
    rep.push(
        "curvature_reassembly",
        mismatch.is_none(),
        mismatch.map(|x| format!("mismatch at {x:?}")).unwrap_or_default(),
    );
    rep.push("d_theta_su2", in_su2(&dq.d_theta), "");
    rep.push("d_symmetries", d_symmetries_hold(&dq), "");
    let bullet = d_tau_from_algebra(&dec);
    rep.push("d_tau_algebraic", bullet == dq.d_tau, "");
    let (ric_s, s_s) = ricci_from_tn(&dq);
    rep.push(
        "ricci_from_tn",
        ric_s == data.oracle.ric && s_s == data.oracle.scal && ric_s.is_symmetric(),
        format!("s = {}", fmt_rational(&s_s)),
    );
    match pullback_torsion_check(&dec, &t) {
        Ok(()) => rep.push("pullback_formulas", true, ""),
        Err(p) => rep.push(
            "pullback_formulas",
            false,
            format!("{}: extracted {} vs formula {}", p.name, p.extracted, p.formula),
        ),
    }
    let ricci = match ricci_via_torsion(&t, cf) {
        Ok(r) => r,
        Err(e) => {
            rep.push("ricci_assembly", false, e.to_string());
            return rep;
        }
    };
    let (ol, om) = ricci.oracle_lambda_mu();
    rep.push(
        "scalar_via_torsion",
        ricci.s_torsion == ricci.s_oracle,
        format!("torsion {} oracle {}", fmt_rational(&ricci.s_torsion), fmt_rational(&ricci.s_oracle)),
    );
    rep.push("lambda_plus_mu", &ricci.lambda + &ricci.mu == ricci.s_torsion, "");
    rep.push(
        "lambda_mu_oracle",
        ricci.lambda == ol && ricci.mu == om,
        format!("lambda {} mu {}", fmt_rational(&ricci.lambda), fmt_rational(&ricci.mu)),
    );
    rep.push("e_phi_in_lambda23", ricci.e_phi.iter().all(in_lambda23), "");
    let sigma_ok = {
        let d = sym_decompose(&ricci.ric0);
        d.c_t.is_zero() && d.c_alpha.is_zero() && (1..=3).all(|r| d.sigma[r - 1].is_zero() || d.sigma[r - 1].in_sigma(r))
    };
    rep.push("ric0_traceless", ricci.ric0_is_traceless() && sigma_ok, "");
    rep.push(
        "ricci_assembly",
        ricci.ric_assembled == ricci.ric_oracle,
        if ricci.ric_assembled == ricci.ric_oracle {
            String::new()
        } else {
            format!("assembled\n{}oracle\n{}", ricci.ric_assembled, ricci.ric_oracle)
        },
    );
    for (name, v) in class_scalar_formulas(&t) {
        rep.push(
            &format!("scalar_{name}"),
            v == ricci.s_oracle,
            format!("formula {} oracle {}", fmt_rational(&v), fmt_rational(&ricci.s_oracle)),
        );
    }
    let flags = classify(&t);
    if flags.double_hypo {
        let printed = rat(20) - ratio(1, 2) * (t.sigma(2).norm2() + t.sigma(4).norm2());
        rep.push(
            "double_hypo_scalar_printed",
            true,
            format!("listed-sigma form gives {}", fmt_rational(&printed)),
        );
        let (phis, _) = phi_forms(&t, cf, Conventions::CALIBRATED);
        rep.push(
            "double_hypo_phi",
            phis[0] == -t.sigma(4) && phis[1] == t.sigma(3).scale(&ratio(-1, 2)),
            "",
        );
    }
    if let Some(ok) = double_hypo_bound(&t, &ricci.s_oracle) {
        rep.push("double_hypo_bound", ok, format!("s = {}", fmt_rational(&ricci.s_oracle)));
        rep.push(
            "double_hypo_alpha_einstein",
            ricci.ric0.is_zero() == flags.sasaki_einstein_structure,
            "",
        );
    }
    if flags.contact_hypo {
        let (p2, p3, p4) = contact_hypo_phis(&t, cf);
        let reduced = project_e(&ricci.phi[0]).is_zero() && ricci.phi[1] == p2 && ricci.phi[2] == p3;
        rep.push("contact_hypo_phi_reductions", reduced && ricci.phi4.is_zero() && p4.is_zero(), "");
        let ric0 = contact_hypo_ricci(&t, cf);
        rep.push("contact_hypo_ricci", ric0.as_ref().ok() == Some(&ricci.ric0), "");
        rep.push(
            "contact_hypo_mu",
            ricci.mu == rat(4) - ratio(1, 2) * (t.sigma(2).norm2() + t.sigma(3).norm2()),
            "",
        );
        if om == rat(4) {
            rep.push("reeb_ricci_four", flags.kahler_cone && ricci.ric0.is_zero(), "");
        }
    }
    if flags.half_flat_cone {
        if ricci.ric0.is_zero() {
            rep.push("half_flat_einstein", flags.sasaki_einstein_structure, "");
        }
        let transformed = extract_torsion(&double_hypo_coframe(cf)).map(|t2| classify(&t2).double_hypo);
        rep.push("half_flat_transform", transformed == Ok(true), "");
    }
    rep
}
