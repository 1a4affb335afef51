use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::RootTwoScalar;
use crate::grid::Grid;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigKind {
    Cos,
    Sin,
}

/// `alpha x + beta y + gamma z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub coefficients: [RootTwoScalar; 3],
}

impl LinearForm {
    pub fn new(alpha: RootTwoScalar, beta: RootTwoScalar, gamma: RootTwoScalar) -> Self {
        LinearForm { coefficients: [alpha, beta, gamma] }
    }

    pub fn x() -> Self {
        LinearForm::new(RootTwoScalar::one(), RootTwoScalar::zero(), RootTwoScalar::zero())
    }

    pub fn y() -> Self {
        LinearForm::new(RootTwoScalar::zero(), RootTwoScalar::one(), RootTwoScalar::zero())
    }

    pub fn z() -> Self {
        LinearForm::new(RootTwoScalar::zero(), RootTwoScalar::zero(), RootTwoScalar::one())
    }

    /// `x + y + z`
    pub fn sum() -> Self {
        LinearForm::new(RootTwoScalar::one(), RootTwoScalar::one(), RootTwoScalar::one())
    }

    pub fn scale(&self, c: &RootTwoScalar) -> Self {
        let [a, b, g] = &self.coefficients;
        LinearForm::new(a * c, b * c, g * c)
    }

    pub fn add(&self, other: &LinearForm) -> Self {
        let [a, b, g] = &self.coefficients;
        let [a2, b2, g2] = &other.coefficients;
        LinearForm::new(a + a2, b + b2, g + g2)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }
}

fn offset(d: usize) -> usize {
    d * (d + 1) * (d + 2) / 6
}

fn index(i: usize, j: usize, k: usize) -> usize {
    let d = i + j + k;
    offset(d) + i * (d + 1) - i * i.saturating_sub(1) / 2 + j
}

/// Exponent triples of total degree `<= cap` in storage order:
/// by degree, then `i`, then `j`.
pub fn monomials(cap: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=cap).flat_map(|d| (0..=d).flat_map(move |i| (0..=d - i).map(move |j| (i, j, d - i - j))))
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, v| acc * v)
}

/// Truncated power series in `x, y, z` with raw coefficients, dense up to total degree `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriSeries {
    cap: usize,
    coeffs: Vec<RootTwoScalar>,
}

impl TriSeries {
    pub fn zero(cap: usize) -> Self {
        TriSeries { cap, coeffs: vec![RootTwoScalar::zero(); offset(cap + 1)] }
    }

    pub fn constant(cap: usize, c: RootTwoScalar) -> Self {
        let mut s = TriSeries::zero(cap);
        s.coeffs[0] = c;
        s
    }

    pub fn one(cap: usize) -> Self {
        TriSeries::constant(cap, RootTwoScalar::one())
    }

    pub fn monomial(cap: usize, i: usize, j: usize, k: usize, c: RootTwoScalar) -> Self {
        let mut s = TriSeries::zero(cap);
        s.set(i, j, k, c);
        s
    }

    /// The linear form itself as a series.
    pub fn linear(cap: usize, form: &LinearForm) -> Self {
        let mut s = TriSeries::zero(cap);
        if cap >= 1 {
            let [a, b, g] = &form.coefficients;
            s.set(1, 0, 0, a.clone());
            s.set(0, 1, 0, b.clone());
            s.set(0, 0, 1, g.clone());
        }
        s
    }

    pub fn from_fn(cap: usize, mut f: impl FnMut(usize, usize, usize) -> RootTwoScalar) -> Self {
        TriSeries { cap, coeffs: monomials(cap).map(|(i, j, k)| f(i, j, k)).collect() }
    }

    /// `sum g[i][j] x^i y^j / (i! j!)` over `i + j <= cap`.
    pub fn from_egf_grid(grid: &Grid, cap: usize) -> Result<Self> {
        let mut s = TriSeries::zero(cap);
        for d in 0..=cap {
            for i in 0..=d {
                let j = d - i;
                if i >= grid.rows() || j >= grid.cols() {
                    return Err(Error::DimensionMismatch(format!(
                        "grid {}x{} too small for degree {cap}",
                        grid.rows(),
                        grid.cols()
                    )));
                }
                let q = BigRational::new(grid.get(i, j).clone(), factorial(i) * factorial(j));
                s.set(i, j, 0, RootTwoScalar::rational(q));
            }
        }
        Ok(s)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> RootTwoScalar {
        if i + j + k > self.cap {
            RootTwoScalar::zero()
        } else {
            self.coeffs[index(i, j, k)].clone()
        }
    }

    /// Coefficient of `x^i y^j z^k / (i! j! k!)`.
    pub fn egf_coefficient(&self, i: usize, j: usize, k: usize) -> RootTwoScalar {
        let f = factorial(i) * factorial(j) * factorial(k);
        self.coefficient(i, j, k).scale(&BigRational::from_integer(f))
    }

    /// Ignored above the cap.
    pub fn set(&mut self, i: usize, j: usize, k: usize, c: RootTwoScalar) {
        if i + j + k <= self.cap {
            self.coeffs[index(i, j, k)] = c;
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize, usize), &RootTwoScalar)> {
        monomials(self.cap).zip(&self.coeffs).filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(RootTwoScalar::is_rational)
    }

    fn same_cap(&self, other: &TriSeries) -> Result<()> {
        if self.cap == other.cap {
            Ok(())
        } else {
            Err(Error::CapMismatch { left: self.cap, right: other.cap })
        }
    }

    pub fn add(&self, other: &TriSeries) -> Result<Self> {
        self.same_cap(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(TriSeries { cap: self.cap, coeffs })
    }

    pub fn sub(&self, other: &TriSeries) -> Result<Self> {
        self.same_cap(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(TriSeries { cap: self.cap, coeffs })
    }

    pub fn neg(&self) -> Self {
        TriSeries { cap: self.cap, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &RootTwoScalar) -> Self {
        TriSeries { cap: self.cap, coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }

    pub fn mul(&self, other: &TriSeries) -> Result<Self> {
        self.same_cap(other)?;
        let mut out = TriSeries::zero(self.cap);
        let right: Vec<_> = other.terms().collect();
        for ((i, j, k), a) in self.terms() {
            let room = self.cap - (i + j + k);
            for &((i2, j2, k2), b) in &right {
                if i2 + j2 + k2 > room {
                    break;
                }
                out.coeffs[index(i + i2, j + j2, k + k2)] += &(a * b);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse, solved degree by degree.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().map_err(|_| Error::ZeroConstantTerm)?;
        let mut out = TriSeries::zero(self.cap);
        out.coeffs[0] = inv0.clone();
        let left: Vec<_> = self.terms().filter(|((i, j, k), _)| i + j + k > 0).collect();
        for (e_i, e_j, e_k) in monomials(self.cap).skip(1) {
            let mut acc = RootTwoScalar::zero();
            for &((i, j, k), a) in &left {
                if i + j + k > e_i + e_j + e_k {
                    break;
                }
                if i <= e_i && j <= e_j && k <= e_k {
                    acc += &(a * &out.coeffs[index(e_i - i, e_j - j, e_k - k)]);
                }
            }
            out.coeffs[index(e_i, e_j, e_k)] = -(&acc * &inv0);
        }
        Ok(out)
    }

    /// `sum_d c_d (alpha x + beta y + gamma z)^d` for raw univariate coefficients `c_d`.
    pub fn compose_univariate(coefficients: &[RootTwoScalar], form: &LinearForm, cap: usize) -> Self {
        let [alpha, beta, gamma] = &form.coefficients;
        let powers = |s: &RootTwoScalar| (0..=cap).map(|e| s.pow(e)).collect::<Vec<_>>();
        let (pa, pb, pg) = (powers(alpha), powers(beta), powers(gamma));
        TriSeries::from_fn(cap, |i, j, k| {
            let d = i + j + k;
            match coefficients.get(d) {
                Some(c) if !c.is_zero() => {
                    let multinomial = factorial(d) / (factorial(i) * factorial(j) * factorial(k));
                    let term = &(&pa[i] * &pb[j]) * &pg[k];
                    (&term * c).scale(&BigRational::from_integer(multinomial))
                }
                _ => RootTwoScalar::zero(),
            }
        })
    }

    /// `cos` or `sin` of a linear form, expanded to the cap.
    pub fn trig(kind: TrigKind, form: &LinearForm, cap: usize) -> Self {
        let coefficients: Vec<RootTwoScalar> = (0..=cap)
            .map(|d| {
                let odd = d % 2 == 1;
                let sign = if (d / 2) % 2 == 0 { 1 } else { -1 };
                match (kind, odd) {
                    (TrigKind::Cos, false) | (TrigKind::Sin, true) => {
                        RootTwoScalar::rational(BigRational::new(sign.into(), factorial(d)))
                    }
                    _ => RootTwoScalar::zero(),
                }
            })
            .collect();
        TriSeries::compose_univariate(&coefficients, form, cap)
    }

    pub fn cos(form: &LinearForm, cap: usize) -> Self {
        TriSeries::trig(TrigKind::Cos, form, cap)
    }

    pub fn sin(form: &LinearForm, cap: usize) -> Self {
        TriSeries::trig(TrigKind::Sin, form, cap)
    }

    /// Exchanges the exponents of two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        TriSeries::from_fn(self.cap, |i, j, k| {
            let mut e = [i, j, k];
            e.swap(a as usize, b as usize);
            self.coefficient(e[0], e[1], e[2])
        })
    }

    /// Sets one variable to zero.
    pub fn at_zero(&self, var: Var) -> Self {
        TriSeries::from_fn(self.cap, |i, j, k| {
            if [i, j, k][var as usize] == 0 {
                self.coefficient(i, j, k)
            } else {
                RootTwoScalar::zero()
            }
        })
    }

    /// One `i j k a_num/a_den b_num/b_den` line per nonzero monomial.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for ((i, j, k), c) in self.terms() {
            let _ = writeln!(out, "{i} {j} {k} {}", c.dump_parts());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> RootTwoScalar {
        RootTwoScalar::rational(BigRational::new(n.into(), d.into()))
    }

    fn x(cap: usize) -> TriSeries {
        TriSeries::linear(cap, &LinearForm::x())
    }

    #[test]
    fn storage_order() {
        let all: Vec<_> = monomials(3).collect();
        for (pos, &(i, j, k)) in all.iter().enumerate() {
            assert_eq!(index(i, j, k), pos);
        }
        assert_eq!(all.len(), offset(4));
        assert_eq!(&all[..5], &[(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (0, 0, 2)]);
    }

    #[test]
    fn products() {
        let one = TriSeries::one(4);
        let p = one.add(&x(4)).unwrap().mul(&one.sub(&x(4)).unwrap()).unwrap();
        let expected = one.sub(&TriSeries::monomial(4, 2, 0, 0, r(1, 1))).unwrap();
        assert_eq!(p, expected);
        assert!(matches!(one.mul(&TriSeries::one(3)), Err(Error::CapMismatch { .. })));
    }

    #[test]
    fn reciprocals() {
        let cap = 6;
        let geo = TriSeries::one(cap).sub(&x(cap)).unwrap().reciprocal().unwrap();
        for d in 0..=cap {
            assert_eq!(geo.coefficient(d, 0, 0), r(1, 1));
        }
        let bad = x(cap).add(&TriSeries::monomial(cap, 2, 0, 0, r(1, 1))).unwrap();
        assert_eq!(bad.reciprocal(), Err(Error::ZeroConstantTerm));
        let half = LinearForm::sum().scale(&RootTwoScalar::inv_sqrt2());
        let c = TriSeries::cos(&half, cap);
        let inv = c.mul(&c).unwrap().reciprocal().unwrap();
        assert_eq!(inv.coefficient(0, 0, 0), r(1, 1));
        assert_eq!(inv.mul(&c.mul(&c).unwrap()).unwrap(), TriSeries::one(cap));
    }

    #[test]
    fn trig_coefficients() {
        let sx = LinearForm::x().scale(&RootTwoScalar::sqrt2());
        assert_eq!(TriSeries::cos(&sx, 4).coefficient(2, 0, 0), r(-1, 1));
        assert_eq!(TriSeries::sin(&sx, 4).coefficient(1, 0, 0), RootTwoScalar::sqrt2());
        let hx = LinearForm::x().scale(&RootTwoScalar::inv_sqrt2());
        let tan = TriSeries::sin(&hx, 5).mul(&TriSeries::cos(&hx, 5).reciprocal().unwrap()).unwrap();
        assert_eq!(tan.scale(&RootTwoScalar::sqrt2()).coefficient(3, 0, 0), r(1, 6));
    }

    #[test]
    fn identities() {
        let sx = LinearForm::x().scale(&RootTwoScalar::sqrt2());
        let (s, c) = (TriSeries::sin(&sx, 10), TriSeries::cos(&sx, 10));
        let pyth = s.mul(&s).unwrap().add(&c.mul(&c).unwrap()).unwrap();
        assert_eq!(pyth, TriSeries::one(10));

        let half = LinearForm::sum().scale(&RootTwoScalar::inv_sqrt2());
        let full = LinearForm::sum().scale(&RootTwoScalar::sqrt2());
        let lhs = TriSeries::cos(&half, 8).mul(&TriSeries::cos(&half, 8)).unwrap();
        let rhs = TriSeries::one(8).add(&TriSeries::cos(&full, 8)).unwrap().scale(&r(1, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn helpers() {
        let s = TriSeries::monomial(3, 1, 2, 0, r(3, 1));
        assert_eq!(s.swap_vars(Var::Y, Var::Z).coefficient(1, 0, 2), r(3, 1));
        assert!(s.at_zero(Var::Y).is_zero());
        assert_eq!(s.egf_coefficient(1, 2, 0), r(6, 1));
        assert_eq!(s.dump(), "1 2 0 3/1 0/1\n");
        let g = Grid::from_rows(vec![vec![1.into(), 2.into()], vec![3.into(), 4.into()]]).unwrap();
        let e = TriSeries::from_egf_grid(&g, 1).unwrap();
        assert_eq!(e.coefficient(0, 1, 0), r(2, 1));
        assert!(TriSeries::from_egf_grid(&g, 2).is_err());
    }

    fn small_series() -> impl Strategy<Value = TriSeries> {
        prop::collection::vec((-3i64..4, 1i64..3, -2i64..3), offset(4)).prop_map(|v| {
            let mut it = v.into_iter();
            TriSeries::from_fn(3, |_, _, _| {
                let (a, d, b) = it.next().expect("sized");
                RootTwoScalar::new(BigRational::new(a.into(), d.into()), BigRational::from_integer(b.into()))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn series_ring_laws(a in small_series(), b in small_series(), c in small_series()) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let left = a.mul(&b.add(&c).unwrap()).unwrap();
            let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&TriSeries::one(3)).unwrap(), a.clone());
            if !a.coefficient(0, 0, 0).is_zero() {
                prop_assert_eq!(a.mul(&a.reciprocal().unwrap()).unwrap(), TriSeries::one(3));
            }
        }
    }
}
