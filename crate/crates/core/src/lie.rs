//! Five-dimensional Lie algebras given by Maurer-Cartan equations `dwᵏ`.

use crate::exterior::{Form, Rational, TangentVector, DIM};
use crate::linalg;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("dw{index} must be a 2-form, got degree {degree}")]
    NotTwoForm { index: usize, degree: usize },
    #[error("coframe change matrix is singular")]
    SingularChange,
}

/// Structure equations in an adapted coframe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coframe5 {
    pub name: String,
    d_images: [Form; DIM],
}

impl Coframe5 {
    pub fn new(name: impl Into<String>, d_images: [Form; DIM]) -> Result<Self, LieError> {
        for (k, f) in d_images.iter().enumerate() {
            if f.degree() != 2 {
                return Err(LieError::NotTwoForm {
                    index: k + 1,
                    degree: f.degree(),
                });
            }
        }
        Ok(Coframe5 {
            name: name.into(),
            d_images,
        })
    }

    pub fn abelian(name: impl Into<String>) -> Self {
        Coframe5 {
            name: name.into(),
            d_images: std::array::from_fn(|_| Form::zero(2)),
        }
    }

    /// `dwᵏ`, 1-based.
    pub fn dw(&self, k: usize) -> &Form {
        &self.d_images[k - 1]
    }

    pub fn d_images(&self) -> &[Form; DIM] {
        &self.d_images
    }

    /// Exterior derivative of a constant-coefficient form (Leibniz rule).
    pub fn d(&self, a: &Form) -> Form {
        let mut out = Form::zero(a.degree() + 1);
        for (idx, c) in a.terms() {
            for (pos, &i) in idx.iter().enumerate() {
                let left = Form::monomial(&idx[..pos]);
                let right = Form::monomial(&idx[pos + 1..]);
                let term = left.wedge(self.dw(i)).wedge(&right);
                let sign = if pos % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_scaled(&term, &sign);
            }
        }
        out
    }

    /// New coframe `w'ᵃ = Σ_b Q_ab wᵇ`, with the structure equations rewritten in it.
    pub fn change_coframe(&self, name: impl Into<String>, q: &[[Rational; DIM]; DIM]) -> Result<Self, LieError> {
        let qm: linalg::Matrix = q.iter().map(|r| r.to_vec()).collect();
        let qi = linalg::inverse(&qm).ok_or(LieError::SingularChange)?;
        // old wᵇ in terms of the new coframe
        let old: Vec<Form> = (0..DIM)
            .map(|b| Form::one_form(&std::array::from_fn(|c| qi[b][c].clone())))
            .collect();
        let substitute = |f: &Form| {
            let mut out = Form::zero(f.degree());
            for (idx, c) in f.terms() {
                let mut prod = Form::scalar(c);
                for i in idx {
                    prod = prod.wedge(&old[i - 1]);
                }
                out += &prod;
            }
            out
        };
        let d_images = std::array::from_fn(|a| {
            let mut f = Form::zero(2);
            for b in 0..DIM {
                f.add_scaled(&substitute(&self.d_images[b]), &q[a][b]);
            }
            f
        });
        Ok(Coframe5 {
            name: name.into(),
            d_images,
        })
    }
}

pub fn exterior_derivative(a: &Form, cf: &Coframe5) -> Form {
    cf.d(a)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("d(dw{index}) = {residual} is nonzero")]
pub struct JacobiFailure {
    pub index: usize,
    pub residual: Form,
}

pub fn validate_jacobi(cf: &Coframe5) -> Result<(), JacobiFailure> {
    for k in 1..=DIM {
        let dd = cf.d(cf.dw(k));
        if !dd.is_zero() {
            return Err(JacobiFailure {
                index: k,
                residual: dd,
            });
        }
    }
    Ok(())
}

/// `[e_i, e_j] = c^k_ij e_k` with `c^k_ij = −dwᵏ(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    c: [[[Rational; DIM]; DIM]; DIM],
}

impl StructureConstants {
    pub fn from_coframe(cf: &Coframe5) -> Self {
        let c = std::array::from_fn(|k| {
            std::array::from_fn(|i| std::array::from_fn(|j| -cf.dw(k + 1).eval2(i + 1, j + 1)))
        });
        StructureConstants { c }
    }

    /// `c^k_ij`, 1-based.
    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.c[k - 1][i - 1][j - 1]
    }

    pub fn bracket(&self, i: usize, j: usize) -> TangentVector {
        TangentVector(std::array::from_fn(|k| self.c[k][i - 1][j - 1].clone()))
    }

    pub fn to_d_images(&self) -> [Form; DIM] {
        std::array::from_fn(|k| {
            let mut f = Form::zero(2);
            for i in 1..=DIM {
                for j in i + 1..=DIM {
                    let v = &self.c[k][i - 1][j - 1];
                    if !v.is_zero() {
                        f.add_scaled(&Form::monomial(&[i, j]), &-v.clone());
                    }
                }
            }
            f
        })
    }
}

pub fn structure_constants(cf: &Coframe5) -> StructureConstants {
    StructureConstants::from_coframe(cf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{rat, ratio};

    fn w(idx: &[usize]) -> Form {
        Form::monomial(idx)
    }

    pub(crate) fn heisenberg() -> Coframe5 {
        let mut d: [Form; 5] = std::array::from_fn(|_| Form::zero(2));
        d[4] = (w(&[1, 2]) + w(&[3, 4])).scale(&rat(-2));
        Coframe5::new("heisenberg", d).unwrap()
    }

    #[test]
    fn jacobi_examples() {
        assert!(validate_jacobi(&Coframe5::abelian("a")).is_ok());
        assert!(validate_jacobi(&heisenberg()).is_ok());
        // d(w²³) = dw²∧w³ = w¹³∧w³ = 0 and d(w¹³) = w²³∧w³ = 0: a genuine Lie algebra
        let mut d: [Form; 5] = std::array::from_fn(|_| Form::zero(2));
        d[0] = w(&[2, 3]);
        d[1] = w(&[1, 3]);
        assert!(validate_jacobi(&Coframe5::new("e2", d).unwrap()).is_ok());

        let mut d: [Form; 5] = std::array::from_fn(|_| Form::zero(2));
        d[0] = w(&[2, 3]);
        d[1] = w(&[1, 4]);
        let err = validate_jacobi(&Coframe5::new("bad", d).unwrap()).unwrap_err();
        assert_eq!(err.index, 1);
        // d(w²³) = dw²∧w³ = w¹⁴∧w³ = −w¹³⁴
        assert_eq!(err.residual, -w(&[1, 3, 4]));
    }

    #[test]
    fn derivative_examples() {
        let h = heisenberg();
        assert_eq!(h.d(&w(&[5])), (w(&[1, 2]) + w(&[3, 4])).scale(&rat(-2)));
        assert!(h.d(&w(&[1, 2])).is_zero());
        assert!(h.d(&w(&[1, 2, 3, 4])).is_zero());
        assert!(h.d(&Form::scalar(rat(7))).is_zero());
    }

    #[test]
    fn heisenberg_constants() {
        let sc = structure_constants(&heisenberg());
        assert_eq!(sc.get(5, 1, 2), &rat(2));
        assert_eq!(sc.get(5, 2, 1), &rat(-2));
        assert_eq!(sc.get(5, 3, 4), &rat(2));
        assert_eq!(sc.bracket(1, 2), TangentVector::basis(5).scale(&rat(2)));
        assert_eq!(sc.get(5, 1, 3), &rat(0));
    }

    #[test]
    fn constants_round_trip() {
        let mut d: [Form; 5] = std::array::from_fn(|_| Form::zero(2));
        d[3] = w(&[1, 2]);
        d[4] = w(&[1, 3]).scale(&ratio(1, 2)) + w(&[2, 4]);
        let cf = Coframe5::new("n", d).unwrap();
        let sc = structure_constants(&cf);
        assert_eq!(&sc.to_d_images(), cf.d_images());
        let zero = structure_constants(&Coframe5::abelian("a"));
        assert!(zero.to_d_images().iter().all(Form::is_zero));
    }

    #[test]
    fn coframe_change_preserves_jacobi() {
        let h = heisenberg();
        let mut q: [[Rational; 5]; 5] =
            std::array::from_fn(|i| std::array::from_fn(|j| if i == j { rat(1) } else { rat(0) }));
        q[0][4] = rat(1);
        let h2 = h.change_coframe("h2", &q).unwrap();
        assert!(validate_jacobi(&h2).is_ok());
        assert_eq!(h2.dw(1), h2.dw(5));
        q[1] = q[0].clone();
        assert_eq!(h.change_coframe("x", &q), Err(LieError::SingularChange));
    }
}
