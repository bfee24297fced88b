//! Zigzag cochains, the Rota-Baxter complex in degrees 0 and 1, antiderivations,
//! and exact computation of the low-degree cohomology.
//!
//! A degree-`p` cochain with values in an `m`-dimensional module stores `f(e_{i1}, ..., e_{ip})`
//! at offset `((i1 * n + i2) * n + ... + ip) * m`. A Rota-Baxter 1-cochain `(f, g)` is
//! flattened as the `n * m` coefficients of `f` followed by the `m` coordinates of `g`.

use serde::Serialize;

use crate::algebra::JjAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{
    axpy, image_basis, kernel_basis, quotient_representatives, scale_vector, unit_vector, zero_vector, Matrix,
    SubspaceBasis, Vector,
};
use crate::rational::Rational;
use crate::rep::{RbRepresentation, Representation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    algebra_dim: usize,
    value_dim: usize,
    coeffs: Vector,
}

impl Cochain {
    pub fn new(degree: usize, algebra_dim: usize, value_dim: usize, coeffs: Vector) -> Result<Self> {
        let expect = algebra_dim.pow(degree as u32) * value_dim;
        if coeffs.len() != expect {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for a degree-{degree} cochain on dimensions ({algebra_dim}, {value_dim}); expected {expect}",
                coeffs.len()
            )));
        }
        Ok(Cochain { degree, algebra_dim, value_dim, coeffs })
    }

    pub fn zero(degree: usize, algebra_dim: usize, value_dim: usize) -> Self {
        let len = algebra_dim.pow(degree as u32) * value_dim;
        Cochain { degree, algebra_dim, value_dim, coeffs: zero_vector(len) }
    }

    /// Degree-0 cochain: a single module vector.
    pub fn from_vector(algebra_dim: usize, v: Vector) -> Self {
        Cochain { degree: 0, algebra_dim, value_dim: v.len(), coeffs: v }
    }

    /// Degree-1 cochain from an `m x n` matrix whose column `i` is `f(e_i)`.
    pub fn from_matrix(f: &Matrix) -> Self {
        let (m, n) = (f.rows(), f.cols());
        let coeffs = (0..n).flat_map(|i| (0..m).map(move |k| (i, k))).map(|(i, k)| f[(k, i)].clone()).collect();
        Cochain { degree: 1, algebra_dim: n, value_dim: m, coeffs }
    }

    /// Inverse of [`Cochain::from_matrix`]; degree 1 only.
    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.degree != 1 {
            return Err(Error::ShapeMismatch(format!("degree-{} cochain is not a linear map", self.degree)));
        }
        let m = self.value_dim;
        Ok(Matrix::from_fn(m, self.algebra_dim, |k, i| self.coeffs[i * m + k].clone()))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Value at a basis tuple.
    pub fn value(&self, args: &[usize]) -> &[Rational] {
        let off = args.iter().fold(0, |acc, &a| acc * self.algebra_dim + a) * self.value_dim;
        &self.coeffs[off..off + self.value_dim]
    }

    fn expect_shape(&self, algebra_dim: usize, value_dim: usize) -> Result<()> {
        if self.algebra_dim != algebra_dim || self.value_dim != value_dim {
            return Err(Error::ShapeMismatch(format!(
                "cochain on dimensions ({}, {}) used where ({algebra_dim}, {value_dim}) is required",
                self.algebra_dim, self.value_dim
            )));
        }
        Ok(())
    }
}

fn decode(mut idx: usize, n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    out
}

/// `sum_i rho(x_i) f(.., x_i omitted, ..) + sign * sum_{i<j} f(x_i x_j, rest)`.
fn zigzag(algebra: &JjAlgebra, action: &[Matrix], f: &Cochain, sign: &Rational) -> Result<Cochain> {
    let (n, m) = (algebra.dim(), action.first().map_or(f.value_dim, Matrix::rows));
    f.expect_shape(n, m)?;
    let p = f.degree + 1;
    let count = n.pow(p as u32);
    let mut coeffs = Vec::with_capacity(count * m);
    for idx in 0..count {
        let args = decode(idx, n, p);
        let mut out = zero_vector(m);
        for i in 0..p {
            let rest: Vec<usize> = args.iter().enumerate().filter(|&(t, _)| t != i).map(|(_, &a)| a).collect();
            let val = action[args[i]].mul_vec(f.value(&rest));
            axpy(&mut out, &Rational::one(), &val);
        }
        for i in 0..p {
            for j in i + 1..p {
                let rest: Vec<usize> =
                    args.iter().enumerate().filter(|&(t, _)| t != i && t != j).map(|(_, &a)| a).collect();
                for (k, c) in algebra.basis_product(args[i], args[j]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut tuple = Vec::with_capacity(p - 1);
                    tuple.push(k);
                    tuple.extend_from_slice(&rest);
                    axpy(&mut out, &(c * sign), f.value(&tuple));
                }
            }
        }
        coeffs.extend(out);
    }
    Ok(Cochain { degree: p, algebra_dim: n, value_dim: m, coeffs })
}

fn plus() -> Rational {
    Rational::one()
}

fn minus() -> Rational {
    -Rational::one()
}

pub fn d_n(rep: &Representation, f: &Cochain) -> Result<Cochain> {
    f.expect_shape(rep.algebra().dim(), rep.dim())?;
    zigzag(rep.algebra(), rep.action(), f, &plus())
}

pub fn delta_n(rep: &Representation, g: &Cochain) -> Result<Cochain> {
    g.expect_shape(rep.algebra().dim(), rep.dim())?;
    zigzag(rep.algebra(), rep.action(), g, &minus())
}

/// `d` for the derived algebra acting through `rho_tilde`.
pub fn d_tilde_n(rr: &RbRepresentation, f: &Cochain) -> Result<Cochain> {
    let derived = rr.rb().derived_algebra()?;
    f.expect_shape(derived.dim(), rr.module_dim())?;
    zigzag(&derived, &rr.tilde_action(), f, &plus())
}

pub fn delta_tilde_n(rr: &RbRepresentation, g: &Cochain) -> Result<Cochain> {
    let derived = rr.rb().derived_algebra()?;
    g.expect_shape(derived.dim(), rr.module_dim())?;
    zigzag(&derived, &rr.tilde_action(), g, &minus())
}

fn phi(rr: &RbRepresentation, f: &Cochain, t_sign: &Rational) -> Result<Cochain> {
    f.expect_shape(rr.algebra().dim(), rr.module_dim())?;
    match f.degree {
        0 => Ok(f.clone()),
        1 => {
            let fm = f.to_matrix()?;
            Ok(Cochain::from_matrix(&fm.mul(rr.rb().op()).add(&rr.t_op().mul(&fm).scale(t_sign))))
        }
        d => Err(Error::UnsupportedDegree(d)),
    }
}

/// Degree 0: identity. Degree 1: `f I - T f`.
pub fn phi1(rr: &RbRepresentation, f: &Cochain) -> Result<Cochain> {
    phi(rr, f, &minus())
}

/// Degree 0: identity. Degree 1: `f I + T f`.
pub fn phi2(rr: &RbRepresentation, f: &Cochain) -> Result<Cochain> {
    phi(rr, f, &plus())
}

/// A Rota-Baxter 1-cochain `(f, g)`: a linear map `A -> V` and a module vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbCochain1 {
    pub f: Cochain,
    pub g: Vector,
}

impl RbCochain1 {
    pub fn flatten(&self) -> Vector {
        let mut v = self.f.coeffs.clone();
        v.extend(self.g.iter().cloned());
        v
    }

    pub fn unflatten(algebra_dim: usize, value_dim: usize, v: &[Rational]) -> Result<Self> {
        let split = algebra_dim * value_dim;
        if v.len() != split + value_dim {
            return Err(Error::ShapeMismatch(format!("{} coordinates for a 1-cochain pair", v.len())));
        }
        Ok(RbCochain1 { f: Cochain::new(1, algebra_dim, value_dim, v[..split].to_vec())?, g: v[split..].to_vec() })
    }

    fn expect_shape(&self, rr: &RbRepresentation) -> Result<()> {
        self.f.expect_shape(rr.algebra().dim(), rr.module_dim())?;
        if self.f.degree != 1 || self.g.len() != rr.module_dim() {
            return Err(Error::ShapeMismatch("1-cochain pair does not match the representation".into()));
        }
        Ok(())
    }
}

fn expect_module_vector(rr: &RbRepresentation, v: &[Rational]) -> Result<()> {
    if v.len() != rr.module_dim() {
        return Err(Error::ShapeMismatch(format!(
            "vector of length {} in a module of dimension {}",
            v.len(),
            rr.module_dim()
        )));
    }
    Ok(())
}

/// `v -> (d^0 v, -v)`.
pub fn d_rb0(rr: &RbRepresentation, v: &[Rational]) -> Result<RbCochain1> {
    expect_module_vector(rr, v)?;
    let f = d_n(rr.rep(), &Cochain::from_vector(rr.algebra().dim(), v.to_vec()))?;
    Ok(RbCochain1 { f, g: scale_vector(&minus(), v) })
}

/// `v -> (delta^0 v, -v)`.
pub fn delta_rb0(rr: &RbRepresentation, v: &[Rational]) -> Result<RbCochain1> {
    expect_module_vector(rr, v)?;
    let f = delta_n(rr.rep(), &Cochain::from_vector(rr.algebra().dim(), v.to_vec()))?;
    Ok(RbCochain1 { f, g: scale_vector(&minus(), v) })
}

fn rb1(rr: &RbRepresentation, c: &RbCochain1, sign: &Rational) -> Result<(Cochain, Cochain)> {
    c.expect_shape(rr)?;
    let g0 = Cochain::from_vector(rr.algebra().dim(), c.g.clone());
    let (first, tilde_g, phi_f) = if sign.is_negative() {
        (delta_n(rr.rep(), &c.f)?, delta_tilde_n(rr, &g0)?, phi2(rr, &c.f)?)
    } else {
        (d_n(rr.rep(), &c.f)?, d_tilde_n(rr, &g0)?, phi1(rr, &c.f)?)
    };
    let second: Vector = tilde_g.coeffs.iter().zip(&phi_f.coeffs).map(|(a, b)| -(a + b)).collect();
    Ok((first, Cochain::new(1, rr.algebra().dim(), rr.module_dim(), second)?))
}

/// `(f, g) -> (d^1 f, -d_tilde^0 g - phi1(f))`.
pub fn d_rb1(rr: &RbRepresentation, c: &RbCochain1) -> Result<(Cochain, Cochain)> {
    rb1(rr, c, &plus())
}

/// `(f, g) -> (delta^1 f, -delta_tilde^0 g - phi2(f))`.
pub fn delta_rb1(rr: &RbRepresentation, c: &RbCochain1) -> Result<(Cochain, Cochain)> {
    rb1(rr, c, &minus())
}

fn flatten_pair(p: (Cochain, Cochain)) -> Vector {
    let mut v = p.0.coeffs;
    v.extend(p.1.coeffs);
    v
}

/// Matrix of a linear map given by its action on coordinate vectors.
fn assemble(domain: usize, codomain: usize, map: impl Fn(&Vector) -> Result<Vector>) -> Result<Matrix> {
    let cols = (0..domain).map(|c| map(&unit_vector(domain, c))).collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(codomain, &cols)
}

fn cochain_len(n: usize, m: usize, degree: usize) -> usize {
    n.pow(degree as u32) * m
}

/// Matrix of `d^p` or `delta^p` for the representation (`tilde` selects the derived pair).
pub fn zigzag_matrix(rr: &RbRepresentation, degree: usize, delta: bool, tilde: bool) -> Result<Matrix> {
    let (n, m) = (rr.algebra().dim(), rr.module_dim());
    assemble(cochain_len(n, m, degree), cochain_len(n, m, degree + 1), |v| {
        let c = Cochain::new(degree, n, m, v.clone())?;
        let out = match (delta, tilde) {
            (false, false) => d_n(rr.rep(), &c)?,
            (true, false) => delta_n(rr.rep(), &c)?,
            (false, true) => d_tilde_n(rr, &c)?,
            (true, true) => delta_tilde_n(rr, &c)?,
        };
        Ok(out.coeffs)
    })
}

pub fn phi_matrix(rr: &RbRepresentation, degree: usize, second: bool) -> Result<Matrix> {
    let (n, m) = (rr.algebra().dim(), rr.module_dim());
    let len = cochain_len(n, m, degree);
    assemble(len, len, |v| {
        let c = Cochain::new(degree, n, m, v.clone())?;
        Ok(if second { phi2(rr, &c)? } else { phi1(rr, &c)? }.coeffs)
    })
}

/// `(n m + m) x m` matrix of `d_RB^0` (or `delta_RB^0`).
pub fn rb0_matrix(rr: &RbRepresentation, delta: bool) -> Result<Matrix> {
    let (n, m) = (rr.algebra().dim(), rr.module_dim());
    assemble(m, n * m + m, |v| Ok(if delta { delta_rb0(rr, v)? } else { d_rb0(rr, v)? }.flatten()))
}

/// `(n^2 m + n m) x (n m + m)` matrix of `d_RB^1` (or `delta_RB^1`).
pub fn rb1_matrix(rr: &RbRepresentation, delta: bool) -> Result<Matrix> {
    let (n, m) = (rr.algebra().dim(), rr.module_dim());
    assemble(n * m + m, n * n * m + n * m, |v| {
        let c = RbCochain1::unflatten(n, m, v)?;
        Ok(flatten_pair(if delta { delta_rb1(rr, &c)? } else { d_rb1(rr, &c)? }))
    })
}

/// Whether `(eta, v)` satisfies both antiderivation identities on basis elements.
/// `eta` is `m x n` with column `i` equal to `eta(e_i)`.
pub fn is_antiderivation(rr: &RbRepresentation, eta: &Matrix, v: &[Rational]) -> Result<bool> {
    let (n, m) = (rr.algebra().dim(), rr.module_dim());
    if eta.rows() != m || eta.cols() != n || v.len() != m {
        return Err(Error::ShapeMismatch("antiderivation data does not match the representation".into()));
    }
    let a = rr.algebra();
    let rho = rr.rep().action();
    let cols: Vec<Vector> = (0..n).map(|i| eta.column(i)).collect();
    for i in 0..n {
        for j in i..n {
            let lhs = eta.mul_vec(&a.basis_product(i, j));
            let mut rhs = rho[i].mul_vec(&cols[j]);
            axpy(&mut rhs, &Rational::one(), &rho[j].mul_vec(&cols[i]));
            if lhs != scale_vector(&minus(), &rhs) {
                return Ok(false);
            }
        }
    }
    let (i_op, t) = (rr.rb().op(), rr.t_op());
    for i in 0..n {
        let ie = i_op.column(i);
        let mut lhs = eta.mul_vec(&ie);
        axpy(&mut lhs, &minus(), &t.mul_vec(&cols[i]));
        let mut rhs = t.mul_vec(&rho[i].mul_vec(v));
        axpy(&mut rhs, &minus(), &rr.rep().rho(&ie).mul_vec(v));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(D_v, -v)` with `D_v(x) = rho(x) v`.
pub fn inner_antiderivation(rr: &RbRepresentation, v: &[Rational]) -> Result<(Matrix, Vector)> {
    expect_module_vector(rr, v)?;
    let cols: Vec<Vector> = rr.rep().action().iter().map(|r| r.mul_vec(v)).collect();
    Ok((Matrix::from_columns(rr.module_dim(), &cols)?, scale_vector(&minus(), v)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
    pub cocycle_basis: SubspaceBasis,
    pub coboundary_basis: SubspaceBasis,
    pub representative_basis: SubspaceBasis,
}

/// Cocycles, coboundaries and class representatives of the Rota-Baxter complex in degree 0 or 1.
pub fn cohomology_rb(rr: &RbRepresentation, degree: usize) -> Result<CohomologyReport> {
    if degree > 1 {
        return Err(Error::UnsupportedDegree(degree));
    }
    if let Some(w) = rr.check()?.witness {
        return Err(Error::PrerequisiteFailed(format!("compatibility identity fails at {w}")));
    }
    let m = rr.module_dim();
    let (z, b) = if degree == 0 {
        (kernel_basis(&rb0_matrix(rr, false)?), SubspaceBasis::zero(m))
    } else {
        (kernel_basis(&rb1_matrix(rr, false)?), image_basis(&rb0_matrix(rr, true)?))
    };
    let reps = quotient_representatives(&z, &b)?;
    Ok(CohomologyReport {
        degree,
        dim_cocycles: z.dim(),
        dim_coboundaries: b.dim(),
        dim_cohomology: reps.dim(),
        cocycle_basis: z,
        coboundary_basis: b,
        representative_basis: reps,
    })
}

pub fn ader_basis(rr: &RbRepresentation) -> Result<SubspaceBasis> {
    Ok(cohomology_rb(rr, 1)?.cocycle_basis)
}

pub fn innader_basis(rr: &RbRepresentation) -> Result<SubspaceBasis> {
    Ok(cohomology_rb(rr, 1)?.coboundary_basis)
}

/// Flattened coordinates of the pair `(eta, v)`.
pub fn flatten_antiderivation(eta: &Matrix, v: &[Rational]) -> Vector {
    RbCochain1 { f: Cochain::from_matrix(eta), g: v.to_vec() }.flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ProductEntry;
    use crate::rational::q;
    use crate::rota_baxter::RbOperator;

    fn dim2() -> JjAlgebra {
        JjAlgebra::from_products(2, &[ProductEntry { i: 0, j: 0, result: vec![(1, q(1, 1))] }], true).unwrap()
    }

    fn dim3() -> JjAlgebra {
        JjAlgebra::from_products(3, &[ProductEntry { i: 0, j: 1, result: vec![(2, q(1, 1))] }], true).unwrap()
    }

    fn adjoint(a: JjAlgebra, w: i64, op: &[&[i64]]) -> RbRepresentation {
        let rb = RbOperator::new(a, Rational::from_int(w), Matrix::from_ints(op)).unwrap();
        assert!(rb.check().holds);
        RbRepresentation::adjoint(&rb).unwrap()
    }

    fn ints(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn degree_zero_differentials_agree() {
        let rr = adjoint(dim2(), 0, &[&[0, 0], &[1, 1]]);
        let v = Cochain::from_vector(2, ints(&[1, 0]));
        let d = d_n(rr.rep(), &v).unwrap();
        assert_eq!(d, delta_n(rr.rep(), &v).unwrap());
        assert_eq!(d.value(&[0]), &ints(&[0, 1])[..]);
        assert_eq!(d.value(&[1]), &ints(&[0, 0])[..]);
    }

    #[test]
    fn degree_one_differential_by_hand() {
        // f = identity map of the two-dimensional algebra.
        let rr = adjoint(dim2(), 0, &[&[0, 0], &[1, 1]]);
        let f = Cochain::from_matrix(&Matrix::identity(2));
        let d = d_n(rr.rep(), &f).unwrap();
        // d f(e1, e1) = 2 e1 e1 + f(e1 e1) = 3 e2.
        assert_eq!(d.value(&[0, 0]), &ints(&[0, 3])[..]);
        assert_eq!(d.value(&[0, 1]), &ints(&[0, 0])[..]);
        let dl = delta_n(rr.rep(), &f).unwrap();
        assert_eq!(dl.value(&[0, 0]), &ints(&[0, 1])[..]);
    }

    #[test]
    fn shape_errors() {
        let rr = adjoint(dim2(), 0, &[&[0, 0], &[1, 1]]);
        let bad = Cochain::zero(1, 3, 2);
        assert!(matches!(d_n(rr.rep(), &bad), Err(Error::ShapeMismatch(_))));
        assert!(matches!(phi1(&rr, &Cochain::zero(2, 2, 2)), Err(Error::UnsupportedDegree(2))));
        assert!(matches!(cohomology_rb(&rr, 2), Err(Error::UnsupportedDegree(2))));
        assert!(Cochain::new(1, 2, 2, ints(&[1])).is_err());
    }

    #[test]
    fn composites_vanish() {
        let rr = adjoint(dim2(), 0, &[&[0, 0], &[1, 1]]);
        assert!(zigzag_matrix(&rr, 1, false, false)
            .unwrap()
            .mul(&zigzag_matrix(&rr, 0, true, false).unwrap())
            .is_zero());
        assert!(zigzag_matrix(&rr, 1, false, true).unwrap().mul(&zigzag_matrix(&rr, 0, true, true).unwrap()).is_zero());
        assert!(rb1_matrix(&rr, false).unwrap().mul(&rb0_matrix(&rr, true).unwrap()).is_zero());
        let lhs = zigzag_matrix(&rr, 0, false, true).unwrap().mul(&phi_matrix(&rr, 0, true).unwrap());
        let rhs = phi_matrix(&rr, 1, false).unwrap().mul(&zigzag_matrix(&rr, 0, true, false).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn two_dimensional_cohomology() {
        let rr = adjoint(dim2(), 0, &[&[0, 0], &[1, 1]]);
        let m = rb1_matrix(&rr, false).unwrap();
        assert_eq!((m.rows(), m.cols()), (12, 6));
        assert_eq!(crate::linalg::rref(&m).rank, 3);
        let h1 = cohomology_rb(&rr, 1).unwrap();
        assert_eq!((h1.dim_cocycles, h1.dim_coboundaries, h1.dim_cohomology), (3, 2, 1));
        let h0 = cohomology_rb(&rr, 0).unwrap();
        assert_eq!(h0.dim_cohomology, 0);
        for v in h1.cocycle_basis.vectors() {
            let c = RbCochain1::unflatten(2, 2, v).unwrap();
            assert!(is_antiderivation(&rr, &c.f.to_matrix().unwrap(), &c.g).unwrap());
        }
        // delta = diag(1, -2) pairs with x = -3 e1, not 3 e1.
        let eta = Matrix::from_ints(&[&[1, 0], &[0, -2]]);
        assert!(is_antiderivation(&rr, &eta, &ints(&[-3, 0])).unwrap());
        assert!(!is_antiderivation(&rr, &eta, &ints(&[3, 0])).unwrap());
        assert!(h1.cocycle_basis.contains(&flatten_antiderivation(&eta, &ints(&[-3, 0]))));
    }

    #[test]
    fn inner_antiderivations() {
        let rr = adjoint(dim2(), 0, &[&[0, 0], &[1, 1]]);
        let (d, mv) = inner_antiderivation(&rr, &ints(&[1, 0])).unwrap();
        assert_eq!(d, Matrix::from_ints(&[&[0, 0], &[1, 0]]));
        assert_eq!(mv, ints(&[-1, 0]));
        assert!(is_antiderivation(&rr, &d, &mv).unwrap());
        let (z, zv) = inner_antiderivation(&rr, &ints(&[0, 0])).unwrap();
        assert!(z.is_zero() && zv.iter().all(Rational::is_zero));
        assert!(innader_basis(&rr).unwrap().contains(&flatten_antiderivation(&d, &mv)));
    }

    #[test]
    fn three_dimensional_cohomology() {
        let rr = adjoint(dim3(), 1, &[&[1, 1, 0], &[2, 1, 0], &[0, 0, 1]]);
        let h1 = cohomology_rb(&rr, 1).unwrap();
        assert_eq!((h1.dim_cocycles, h1.dim_coboundaries, h1.dim_cohomology), (4, 3, 1));
        let eta = Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]]);
        assert!(is_antiderivation(&rr, &eta, &ints(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn one_dimensional_zero_algebra() {
        let rr = adjoint(JjAlgebra::zero(1), 0, &[&[0]]);
        assert_eq!(ader_basis(&rr).unwrap(), SubspaceBasis::full(2));
    }
}
