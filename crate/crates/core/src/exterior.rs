//! Exact exterior algebra over the coframe {w¹,…,w⁵}.
//!
//! Monomials are stored as bitmasks (bit `i-1` set when `wⁱ` is present), so
//! every index tuple is strictly increasing by construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};
use thiserror::Error;

pub type Rational = BigRational;

pub const DIM: usize = 5;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Serializes as `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("index {0} out of range 1..=5")]
    IndexOutOfRange(usize),
}

/// Sign of the permutation sorting `seq`; zero when an entry repeats.
pub fn permutation_sign(seq: &[usize]) -> i32 {
    let mut sign = 1;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] == seq[b] {
                return 0;
            }
            if seq[a] > seq[b] {
                sign = -sign;
            }
        }
    }
    sign
}

pub(crate) fn mask_indices(mask: u8) -> Vec<usize> {
    (1..=DIM).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

const FULL: u8 = 0b11111;

// sign of w^A ∧ w^B for disjoint masks
fn merge_sign(a: u8, b: u8) -> i32 {
    let mut inversions = 0u32;
    for j in 0..DIM {
        if b & (1 << j) != 0 {
            let above = a & !((1u8 << (j + 1)) - 1);
            inversions += above.count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A constant-coefficient exterior form of fixed degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Form {
    degree: usize,
    coeffs: BTreeMap<u8, Rational>,
}

impl Form {
    pub fn zero(degree: usize) -> Self {
        Form {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(value: Rational) -> Self {
        let mut f = Form::zero(0);
        f.insert(0, value);
        f
    }

    /// `w^{i₁}∧…∧w^{i_k}` for arbitrary (not necessarily sorted) indices.
    pub fn monomial(indices: &[usize]) -> Self {
        Self::try_monomial(indices).expect("monomial index out of range")
    }

    pub fn try_monomial(indices: &[usize]) -> Result<Self, FormError> {
        let mut mask = 0u8;
        for &i in indices {
            if !(1..=DIM).contains(&i) {
                return Err(FormError::IndexOutOfRange(i));
            }
            mask |= 1 << (i - 1);
        }
        let mut f = Form::zero(indices.len());
        let s = permutation_sign(indices);
        if s != 0 {
            f.insert(mask, rat(s as i64));
        }
        Ok(f)
    }

    /// The 1-form `Σ cᵢ wⁱ`.
    pub fn one_form(components: &[Rational; DIM]) -> Self {
        let mut f = Form::zero(1);
        for (i, c) in components.iter().enumerate() {
            f.insert(1 << i, c.clone());
        }
        f
    }

    pub fn from_terms<'a, I>(degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (&'a [usize], Rational)>,
    {
        let mut f = Form::zero(degree);
        for (idx, c) in terms {
            assert_eq!(idx.len(), degree, "term degree");
            f.add_scaled(&Form::monomial(idx), &c);
        }
        f
    }

    fn insert(&mut self, mask: u8, value: Rational) {
        if value.is_zero() {
            self.coeffs.remove(&mask);
        } else {
            self.coeffs.insert(mask, value);
        }
    }

    fn accumulate(&mut self, mask: u8, value: Rational) {
        if value.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(mask).or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `w^{indices}`, honouring the sign of unsorted input.
    pub fn coeff(&self, indices: &[usize]) -> Rational {
        let s = permutation_sign(indices);
        if s == 0 || indices.len() != self.degree {
            return Rational::zero();
        }
        let mask = indices.iter().fold(0u8, |m, &i| m | (1 << (i - 1)));
        self.coeffs
            .get(&mask)
            .map(|c| c * rat(s as i64))
            .unwrap_or_else(Rational::zero)
    }

    /// Constant term of a 0-form (or the w¹²³⁴⁵ coefficient of a 5-form).
    pub fn value(&self) -> Rational {
        self.coeffs.values().next().cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in lexicographic order of index tuples.
    pub fn terms(&self) -> Vec<(Vec<usize>, Rational)> {
        let mut out: Vec<_> = self
            .coeffs
            .iter()
            .map(|(m, c)| (mask_indices(*m), c.clone()))
            .collect();
        out.sort();
        out
    }

    pub fn add_scaled(&mut self, other: &Form, factor: &Rational) {
        if other.is_zero() || factor.is_zero() {
            return;
        }
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        for (m, c) in &other.coeffs {
            self.accumulate(*m, c * factor);
        }
    }

    pub fn scale(&self, factor: &Rational) -> Form {
        let mut f = Form::zero(self.degree);
        if factor.is_zero() {
            return f;
        }
        for (m, c) in &self.coeffs {
            f.coeffs.insert(*m, c * factor);
        }
        f
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.degree + other.degree);
        for (ma, ca) in &self.coeffs {
            for (mb, cb) in &other.coeffs {
                if ma & mb != 0 {
                    continue;
                }
                let s = merge_sign(*ma, *mb);
                let v = ca * cb;
                out.accumulate(ma | mb, if s > 0 { v } else { -v });
            }
        }
        out
    }

    /// Contraction `ι_v` into the first slot.
    pub fn interior(&self, v: &TangentVector) -> Form {
        if self.degree == 0 {
            return Form::zero(0);
        }
        let mut out = Form::zero(self.degree - 1);
        for (m, c) in &self.coeffs {
            for i in 0..DIM {
                if m & (1 << i) == 0 || v.0[i].is_zero() {
                    continue;
                }
                let pos = (m & ((1u8 << i) - 1)).count_ones();
                let term = c * &v.0[i];
                out.accumulate(m & !(1 << i), if pos % 2 == 0 { term } else { -term });
            }
        }
        out
    }

    /// Hodge star for the identity metric and `vol = w¹²³⁴⁵`.
    pub fn hodge(&self) -> Form {
        let mut out = Form::zero(DIM - self.degree);
        for (m, c) in &self.coeffs {
            let comp = FULL & !m;
            let s = merge_sign(*m, comp);
            out.accumulate(comp, if s > 0 { c.clone() } else { -c.clone() });
        }
        out
    }

    pub fn try_inner(&self, other: &Form) -> Result<Rational, FormError> {
        if self.degree != other.degree {
            return Err(FormError::DegreeMismatch(self.degree, other.degree));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(m) {
                acc += c * d;
            }
        }
        Ok(acc)
    }

    pub fn inner(&self, other: &Form) -> Rational {
        self.try_inner(other).expect("inner product of forms of different degree")
    }

    pub fn norm2(&self) -> Rational {
        self.inner(self)
    }

    /// `φᵀ = φ − α∧ι_R φ` with `α = w⁵`, `R = e₅`.
    pub fn transverse_part(&self) -> Form {
        let mut out = Form::zero(self.degree);
        for (m, c) in &self.coeffs {
            if m & (1 << 4) == 0 {
                out.coeffs.insert(*m, c.clone());
            }
        }
        out
    }

    pub fn is_transverse(&self) -> bool {
        self.coeffs.keys().all(|m| m & (1 << 4) == 0)
    }

    /// Evaluation of a 2-form on `(e_i, e_j)`.
    pub fn eval2(&self, i: usize, j: usize) -> Rational {
        debug_assert_eq!(self.degree, 2);
        self.coeff(&[i, j])
    }

    /// Evaluation of a 1-form on `e_i`.
    pub fn at(&self, i: usize) -> Rational {
        debug_assert_eq!(self.degree, 1);
        self.coeff(&[i])
    }
}

impl fmt::Display for Form {
    /// Compact notation: `-2*12 + 1/2*345`; 0-forms print as the bare number.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.degree == 0 {
            return write!(f, "{}", fmt_rational(&self.value()));
        }
        for (n, (idx, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if !mag.is_one() {
                write!(f, "{}*", fmt_rational(&mag))?;
            }
            for i in idx {
                write!(f, "{i}")?;
            }
        }
        Ok(())
    }
}

impl Add<&Form> for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Form {
    type Output = Form;
    fn add(mut self, rhs: Form) -> Form {
        self += &rhs;
        self
    }
}

impl Sub<&Form> for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(mut self, rhs: Form) -> Form {
        self -= &rhs;
        self
    }
}

impl AddAssign<&Form> for Form {
    fn add_assign(&mut self, rhs: &Form) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl SubAssign<&Form> for Form {
    fn sub_assign(&mut self, rhs: &Form) {
        self.add_scaled(rhs, &-Rational::one());
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&-Rational::one())
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

impl Mul<&Form> for &Rational {
    type Output = Form;
    fn mul(self, rhs: &Form) -> Form {
        rhs.scale(self)
    }
}

impl Mul<Form> for Rational {
    type Output = Form;
    fn mul(self, rhs: Form) -> Form {
        rhs.scale(&self)
    }
}

impl Mul<&Form> for Rational {
    type Output = Form;
    fn mul(self, rhs: &Form) -> Form {
        rhs.scale(&self)
    }
}

impl Mul<Form> for &Rational {
    type Output = Form;
    fn mul(self, rhs: Form) -> Form {
        rhs.scale(self)
    }
}

/// Components in the frame `e₁,…,e₅` dual to the coframe.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangentVector(pub [Rational; DIM]);

impl TangentVector {
    pub fn zero() -> Self {
        TangentVector(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i - 1] = Rational::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        TangentVector(std::array::from_fn(|i| &self.0[i] * factor))
    }
}

impl Index<usize> for TangentVector {
    type Output = Rational;
    /// 1-based component access.
    fn index(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }
}

impl Add<&TangentVector> for &TangentVector {
    type Output = TangentVector;
    fn add(self, rhs: &TangentVector) -> TangentVector {
        TangentVector(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Neg for &TangentVector {
    type Output = TangentVector;
    fn neg(self) -> TangentVector {
        TangentVector(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl fmt::Display for TangentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// All 32 monomials, grouped by degree.
pub fn all_monomials() -> Vec<Form> {
    (0u8..32)
        .map(|m| Form::monomial(&mask_indices(m)))
        .collect()
}

/// Monomials of a given degree in lexicographic order.
pub fn monomials_of_degree(k: usize) -> Vec<Form> {
    let mut v: Vec<Vec<usize>> = (0u8..32)
        .filter(|m| m.count_ones() as usize == k)
        .map(mask_indices)
        .collect();
    v.sort();
    v.iter().map(|i| Form::monomial(i)).collect()
}

pub fn volume() -> Form {
    Form::monomial(&[1, 2, 3, 4, 5])
}
