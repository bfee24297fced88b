//! Built-in algebras with their known operator families, displayed constraint systems
//! and expected cohomology.

mod expr;
pub mod trials;
pub mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use expr::{ParamExpr, Params};

use crate::algebra::{JjAlgebra, ProductEntry};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::poly::Poly;
use crate::rational::{q, Rational};
use crate::rep::{RbRepresentation, Representation};
use crate::rota_baxter::RbOperator;

pub type ParamValues = BTreeMap<String, Rational>;

/// Values drawn for deterministic family samples.
pub fn sample_pool() -> Vec<Rational> {
    vec![q(-2, 1), q(-1, 1), q(1, 1), q(2, 1), q(1, 2), q(3, 1)]
}

pub const SAMPLES_PER_FAMILY: usize = 10;

#[derive(Debug, Clone)]
pub struct Family {
    pub name: &'static str,
    pub params: Params,
    pub weight: ParamExpr,
    /// Row-major operator entries; column `c` is the image of `e_c`.
    pub entries: Vec<ParamExpr>,
    /// Each expression must be nonzero at admissible parameters.
    pub nonvanishing: Vec<ParamExpr>,
    /// Human-readable form of the excluded locus.
    pub excluded: &'static str,
    pub note: Option<&'static str>,
}

impl Family {
    /// Parameter point in declaration order, rejecting unknown or missing names.
    pub fn point(&self, values: &ParamValues) -> Result<Vec<Rational>> {
        if let Some(extra) = values.keys().find(|k| !self.params.0.contains(&k.as_str())) {
            return Err(Error::Parameter(format!("family `{}` has no parameter `{extra}`", self.name)));
        }
        self.params
            .0
            .iter()
            .map(|p| {
                values
                    .get(*p)
                    .cloned()
                    .ok_or_else(|| Error::Parameter(format!("missing value for parameter `{p}` of `{}`", self.name)))
            })
            .collect()
    }

    pub fn admissible(&self, point: &[Rational]) -> bool {
        self.nonvanishing.iter().all(|e| e.eval(point).is_some_and(|v| !v.is_zero()))
            && self.entries.iter().chain(std::iter::once(&self.weight)).all(|e| !e.denominator_vanishes(point))
    }

    /// Weight and operator matrix at a parameter point.
    pub fn evaluate(&self, n: usize, point: &[Rational]) -> Result<(Rational, Matrix)> {
        if !self.admissible(point) {
            return Err(Error::ExcludedParameters(format!("family `{}` requires {}", self.name, self.excluded)));
        }
        let weight = self.weight.eval(point).expect("admissible");
        let data = self.entries.iter().map(|e| e.eval(point).expect("admissible")).collect();
        Ok((weight, Matrix::from_row_major(n, n, data)?))
    }

    pub fn values(&self, point: &[Rational]) -> ParamValues {
        self.params.0.iter().map(|p| p.to_string()).zip(point.iter().cloned()).collect()
    }
}

/// A displayed system of constraints over the operator entries (variable `r * n + c`)
/// plus the weight as the final variable.
#[derive(Debug, Clone)]
pub struct DisplayedSystem {
    pub polys: Vec<Poly>,
    /// Weight the display is stated for, when it is not general.
    pub fixed_weight: Option<Rational>,
}

#[derive(Debug, Clone)]
pub struct ExpectedCohomology {
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
}

/// An instance with expected low-degree cohomology for its adjoint representation.
#[derive(Debug, Clone)]
pub struct NamedInstance {
    pub name: &'static str,
    pub family: &'static str,
    pub params: Vec<(&'static str, Rational)>,
    pub expected: ExpectedCohomology,
    /// Displayed class representative `(eta, v)`, when one is given.
    pub representative: Option<(Matrix, Vector)>,
}

impl NamedInstance {
    pub fn values(&self) -> ParamValues {
        self.params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub summary: &'static str,
    pub algebra: JjAlgebra,
    pub families: Vec<Family>,
    pub displayed_system: Option<DisplayedSystem>,
    pub instances: Vec<NamedInstance>,
}

impl CatalogEntry {
    pub fn family(&self, name: &str) -> Result<&Family> {
        self.families
            .iter()
            .find(|f| f.name == name)
            .ok_or_else(|| Error::UnknownFamily { id: self.id.into(), family: name.into() })
    }

    /// Deterministic admissible samples drawn from [`sample_pool`].
    pub fn samples(&self, family: &Family) -> Vec<Vec<Rational>> {
        let pool = sample_pool();
        let seed = self
            .id
            .bytes()
            .chain(family.name.bytes())
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for _ in 0..10_000 {
            if out.len() == SAMPLES_PER_FAMILY {
                break;
            }
            let point: Vec<Rational> =
                (0..family.params.len()).map(|_| pool.choose(&mut rng).expect("nonempty pool").clone()).collect();
            if family.admissible(&point) && seen.insert(point.clone()) {
                out.push(point);
            }
        }
        out
    }
}

fn algebra(dim: usize, products: &[(usize, usize, usize)]) -> JjAlgebra {
    let entries: Vec<ProductEntry> =
        products.iter().map(|&(i, j, k)| ProductEntry { i, j, result: vec![(k, Rational::one())] }).collect();
    JjAlgebra::from_products(dim, &entries, true).expect("catalog algebra")
}

fn family(
    name: &'static str,
    params: &[&'static str],
    weight: impl Fn(&Params) -> ParamExpr,
    entries: impl Fn(&Params) -> Vec<ParamExpr>,
    nonvanishing: impl Fn(&Params) -> Vec<ParamExpr>,
    excluded: &'static str,
    note: Option<&'static str>,
) -> Family {
    let p = Params(params.to_vec());
    Family { name, weight: weight(&p), entries: entries(&p), nonvanishing: nonvanishing(&p), params: p, excluded, note }
}

const LAMBDA: &str = "lambda";

fn zero_weight(p: &Params) -> ParamExpr {
    p.zero()
}

fn lambda(p: &Params) -> ParamExpr {
    p.v(LAMBDA)
}

/// `a1^2 / (2 a1 + lambda)`.
fn lambda_diag(p: &Params) -> ParamExpr {
    p.v("a1") * p.v("a1") / (p.int(2) * p.v("a1") + p.v(LAMBDA))
}

const LAMBDA_NOTE: &str = "The family is stated with the condition a1 != lambda/2; the denominator 2*a1 + lambda \
forces a1 != -lambda/2 instead, which is the condition enforced here.";

fn dim2_entry() -> CatalogEntry {
    let z = |p: &Params| p.zero();
    let families = vec![
        family(
            "zero-weight-A",
            &["a2", "b2"],
            zero_weight,
            |p| vec![z(p), z(p), p.v("a2"), p.v("b2")],
            |_| vec![],
            "none",
            None,
        ),
        family(
            "zero-weight-B",
            &["a1", "a2"],
            zero_weight,
            |p| vec![p.int(2) * p.v("a1"), z(p), p.v("a2"), p.v("a1")],
            |p| vec![p.v("a1")],
            "a1 != 0",
            None,
        ),
        family(
            "lambda-family",
            &["lambda", "a1", "a2"],
            lambda,
            |p| vec![p.v("a1"), z(p), p.v("a2"), lambda_diag(p)],
            |p| vec![p.v(LAMBDA), p.int(2) * p.v("a1") + p.v(LAMBDA)],
            "lambda != 0 and 2*a1 + lambda != 0",
            Some(LAMBDA_NOTE),
        ),
        family(
            "antiderivation-example",
            &["b", "d"],
            zero_weight,
            |p| vec![z(p), z(p), p.v("b"), p.v("d")],
            |p| vec![p.v("d")],
            "d != 0",
            None,
        ),
    ];
    // Variables: a1 = x_{0,0}, b1 = x_{0,1}, a2 = x_{1,0}, b2 = x_{1,1}, lambda last.
    let nv = 5;
    let x = |i| Poly::var(nv, i);
    let two_a1_l = &(&x(0) * &Poly::constant(nv, q(2, 1))) + &x(4);
    let displayed =
        vec![&two_a1_l * &x(1), &(&x(0) * &x(0)) - &(&two_a1_l * &x(3)), &(&x(0) * &x(1)) - &(&x(1) * &x(3)), x(1)];
    CatalogEntry {
        id: "dim2",
        summary: "two-dimensional algebra with e1*e1 = e2",
        algebra: algebra(2, &[(0, 0, 1)]),
        families,
        displayed_system: Some(DisplayedSystem { polys: displayed, fixed_weight: None }),
        instances: vec![NamedInstance {
            name: "dim2-antiderivation",
            family: "antiderivation-example",
            params: vec![("b", q(1, 1)), ("d", q(1, 1))],
            expected: ExpectedCohomology { dim_cocycles: 3, dim_coboundaries: 2, dim_cohomology: 1 },
            representative: Some((Matrix::from_ints(&[&[1, 0], &[0, -2]]), vec![q(3, 1), q(0, 1)])),
        }],
    }
}

const G_ROWS: [[&str; 4]; 4] =
    [["a1", "b1", "c1", "d1"], ["a2", "b2", "c2", "d2"], ["a3", "b3", "c3", "d3"], ["a4", "b4", "c4", "d4"]];

fn dim4_g_entry() -> CatalogEntry {
    let tail = |p: &Params, b2: ParamExpr| {
        vec![
            p.v("a1"),
            p.zero(),
            p.zero(),
            p.zero(),
            p.v("a2"),
            b2,
            p.v("c2"),
            p.v("d2"),
            p.v("a3"),
            p.v("b3"),
            p.v("c3"),
            p.v("d3"),
            p.v("a4"),
            p.v("b3"),
            p.v("c4"),
            p.v("d4"),
        ]
    };
    let b_params = ["a1", "a2", "c2", "d2", "a3", "b3", "c3", "d3", "a4", "c4", "d4"];
    let mut l_params = vec![LAMBDA];
    l_params.extend(b_params);
    let families = vec![
        family(
            "zero-weight-A",
            &G_ROWS[1..].iter().flatten().copied().collect::<Vec<_>>(),
            zero_weight,
            |p| {
                let mut e = vec![p.zero(); 4];
                e.extend(G_ROWS[1..].iter().flatten().map(|n| p.v(n)));
                e
            },
            |_| vec![],
            "none",
            None,
        ),
        family(
            "zero-weight-B",
            &b_params,
            zero_weight,
            |p| tail(p, p.v("a1") * p.v("a1") / p.int(2)),
            |p| vec![p.v("a1")],
            "a1 != 0",
            None,
        ),
        family(
            "lambda-family",
            &l_params,
            lambda,
            |p| tail(p, lambda_diag(p)),
            |p| vec![p.v(LAMBDA), p.int(2) * p.v("a1") + p.v(LAMBDA)],
            "lambda != 0 and 2*a1 + lambda != 0",
            Some(LAMBDA_NOTE),
        ),
    ];
    // a1 = x_{0,0}, b1 = x_{0,1}, c1 = x_{0,2}, d1 = x_{0,3}, b2 = x_{1,1}, b3 = x_{2,1}, b4 = x_{3,1}.
    let nv = 17;
    let x = |i| Poly::var(nv, i);
    let two_a1_l = &(&x(0) * &Poly::constant(nv, q(2, 1))) + &x(16);
    let displayed = vec![x(1), x(2), x(3), &(&x(0) * &x(0)) - &(&two_a1_l * &x(5)), &two_a1_l * &(&x(9) - &x(13))];
    CatalogEntry {
        id: "dim4-G",
        summary: "four-dimensional algebra with e1*e1 = e2",
        algebra: algebra(4, &[(0, 0, 1)]),
        families,
        displayed_system: Some(DisplayedSystem { polys: displayed, fixed_weight: None }),
        instances: vec![],
    }
}

fn dim4_h_entry() -> CatalogEntry {
    let families = vec![
        family(
            "zero-weight-A",
            &["a2", "c2", "d2", "a4", "b4", "c4", "d4"],
            zero_weight,
            |p| {
                let z = p.zero();
                vec![
                    z.clone(),
                    z.clone(),
                    z.clone(),
                    z.clone(),
                    p.v("a2"),
                    z.clone(),
                    p.v("c2"),
                    p.v("d2"),
                    z.clone(),
                    z.clone(),
                    z.clone(),
                    z,
                    p.v("a4"),
                    p.v("b4"),
                    p.v("c4"),
                    p.v("d4"),
                ]
            },
            |_| vec![],
            "none",
            None,
        ),
        family(
            "zero-weight-B",
            &["a2", "b2", "c2", "d2", "a4", "b4", "c4", "d4"],
            zero_weight,
            |p| {
                let z = p.zero();
                let mut e = vec![z.clone(); 4];
                e.extend(["a2", "b2", "c2", "d2"].map(|n| p.v(n)));
                e.extend(vec![z; 4]);
                e.extend(["a4", "b4", "c4", "d4"].map(|n| p.v(n)));
                e
            },
            |p| vec![p.v("b2") * p.v("b4")],
            "b2*b4 != 0",
            None,
        ),
    ];
    // Entry (r, c) is variable 4 r + c; rows a, b, c, d of the display are columns 0..3.
    let nv = 17;
    let x = |r: usize, c: usize| Poly::var(nv, 4 * r + c);
    let (a1, a3, b2, b4) = (x(0, 0), x(2, 0), x(1, 1), x(3, 1));
    let (c1, c3) = (x(0, 2), x(2, 2));
    let two = Poly::constant(nv, q(2, 1));
    let c1_a3 = &c1 + &a3;
    let displayed = vec![
        x(0, 1),
        x(2, 1),
        x(0, 3),
        x(2, 3),
        &a1 * &b4,
        &c3 * &b4,
        &c1_a3 * &b4,
        &(&(&a1 * &a1) + &(&a3 * &a3)) - &(&(&two * &a1) * &b2),
        &(&(&c1 * &c1) + &(&c3 * &c3)) - &(&(&two * &c3) * &b2),
        &(&(&a1 * &c1) + &(&a3 * &c3)) - &(&b2 * &c1_a3),
    ];
    CatalogEntry {
        id: "dim4-H",
        summary: "four-dimensional algebra with e1*e1 = e2 and e3*e3 = e2",
        algebra: algebra(4, &[(0, 0, 1), (2, 2, 1)]),
        families,
        displayed_system: Some(DisplayedSystem { polys: displayed, fixed_weight: Some(Rational::zero()) }),
        instances: vec![],
    }
}

fn dim3_entry() -> CatalogEntry {
    let families = vec![family(
        "main",
        &["lambda", "r11", "r12", "r31", "r32"],
        lambda,
        |p| {
            let r21 = (p.v(LAMBDA) + p.v("r11")) * p.v("r11") / p.v("r12");
            vec![p.v("r11"), p.v("r12"), p.zero(), r21, p.v("r11"), p.zero(), p.v("r31"), p.v("r32"), p.v("r11")]
        },
        |p| vec![p.v("r12"), p.v("r11"), p.v("r11") + p.v(LAMBDA)],
        "r12 != 0, r11 != 0 and r11 + lambda != 0",
        None,
    )];
    let instance = |name, r31: i64, r32: i64, v: [i64; 3]| NamedInstance {
        name,
        family: "main",
        params: vec![
            ("lambda", q(1, 1)),
            ("r11", q(1, 1)),
            ("r12", q(1, 1)),
            ("r31", Rational::from_int(r31)),
            ("r32", Rational::from_int(r32)),
        ],
        expected: ExpectedCohomology { dim_cocycles: 4, dim_coboundaries: 3, dim_cohomology: 1 },
        representative: Some((
            Matrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]]),
            v.iter().map(|&c| Rational::from_int(c)).collect(),
        )),
    };
    CatalogEntry {
        id: "dim3",
        summary: "three-dimensional algebra with e1*e2 = e3",
        algebra: algebra(3, &[(0, 1, 2)]),
        families,
        displayed_system: None,
        // Representative: x = (3 d11 r12 r31 / (r11 (r11 + lambda)), 3 d11 r32 / r12, 0) at d11 = 1.
        instances: vec![instance("dim3-main", 0, 0, [0, 0, 0]), instance("dim3-shifted", 2, 3, [3, 9, 0])],
    }
}

pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| vec![dim2_entry(), dim4_g_entry(), dim4_h_entry(), dim3_entry()])
}

pub fn get(id: &str) -> Result<&'static CatalogEntry> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.into()))
}

/// Concrete operator for a family at the given parameters. The operator identity is not enforced,
/// so a family that does not actually consist of operators can still be instantiated and checked.
pub fn instantiate(id: &str, family: &str, params: &ParamValues) -> Result<RbOperator> {
    let entry = get(id)?;
    let fam = entry.family(family)?;
    let (weight, op) = fam.evaluate(entry.algebra.dim(), &fam.point(params)?)?;
    RbOperator::new(entry.algebra.clone(), weight, op)
}

pub fn instantiate_named(inst: &NamedInstance, id: &str) -> Result<RbOperator> {
    instantiate(id, inst.family, &inst.values())
}

/// Module used to compare the two sign conventions on `gl(V)`: the two-dimensional algebra
/// at weight -1 with `I = id`, acting on `Q^3` by `rho(e1) = N`, `rho(e2) = -2 N^2`
/// for the nilpotent shift `N`, and `T = id`.
pub fn nilpotent_module_instance() -> RbRepresentation {
    let entry = get("dim2").expect("dim2 entry");
    let n = Matrix::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
    let rep =
        Representation::new(entry.algebra.clone(), 3, vec![n.clone(), n.mul(&n).scale(&q(-2, 1))]).expect("shapes");
    let rb = RbOperator::new(entry.algebra.clone(), q(-1, 1), Matrix::identity(2)).expect("shapes");
    RbRepresentation::new(rep, rb, Matrix::identity(3)).expect("same base")
}

/// Parses `name=value,name=value` with canonical rational values.
pub fn parse_params(s: &str) -> Result<ParamValues> {
    let mut out = ParamValues::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) =
            part.split_once('=').ok_or_else(|| Error::Parameter(format!("expected name=value, got `{part}`")))?;
        let k = k.trim();
        if out.insert(k.to_string(), v.trim().parse()?).is_some() {
            return Err(Error::Parameter(format!("parameter `{k}` given twice")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(pairs: &[(&str, Rational)]) -> ParamValues {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn instantiation_examples() {
        let r = instantiate("dim2", "zero-weight-A", &vals(&[("a2", q(1, 1)), ("b2", q(2, 1))])).unwrap();
        assert_eq!(r.op(), &Matrix::from_ints(&[&[0, 0], &[1, 2]]));
        assert!(r.check().holds);

        let mut g = vals(&[("lambda", q(1, 1)), ("a1", q(1, 1))]);
        for p in ["a2", "c2", "d2", "a3", "b3", "c3", "d3", "a4", "c4", "d4"] {
            g.insert(p.into(), Rational::zero());
        }
        let r = instantiate("dim4-G", "lambda-family", &g).unwrap();
        assert_eq!(r.op()[(1, 1)], q(1, 3));
        assert!(r.check().holds);

        let r = instantiate(
            "dim3",
            "main",
            &vals(&[("lambda", q(1, 1)), ("r11", q(1, 1)), ("r12", q(1, 1)), ("r31", q(0, 1)), ("r32", q(0, 1))]),
        )
        .unwrap();
        assert_eq!(r.op(), &Matrix::from_ints(&[&[1, 1, 0], &[2, 1, 0], &[0, 0, 1]]));
        assert!(r.check().holds);
    }

    #[test]
    fn instantiation_errors() {
        assert!(matches!(instantiate("nope", "x", &ParamValues::new()), Err(Error::UnknownId(_))));
        assert!(matches!(instantiate("dim2", "x", &ParamValues::new()), Err(Error::UnknownFamily { .. })));
        assert!(matches!(instantiate("dim2", "zero-weight-A", &ParamValues::new()), Err(Error::Parameter(_))));
        let bad = vals(&[("lambda", q(2, 1)), ("a1", q(-1, 1)), ("a2", q(0, 1))]);
        assert!(matches!(instantiate("dim2", "lambda-family", &bad), Err(Error::ExcludedParameters(_))));
        let extra = vals(&[("a2", q(1, 1)), ("b2", q(1, 1)), ("zz", q(1, 1))]);
        assert!(matches!(instantiate("dim2", "zero-weight-A", &extra), Err(Error::Parameter(_))));
    }

    #[test]
    fn samples_are_deterministic_and_admissible() {
        for entry in catalog() {
            assert!(entry.algebra.check_axioms().holds());
            for fam in &entry.families {
                let s = entry.samples(fam);
                assert_eq!(s.len(), SAMPLES_PER_FAMILY, "{}/{}", entry.id, fam.name);
                assert_eq!(s, entry.samples(fam));
                assert!(s.iter().all(|p| fam.admissible(p)));
            }
        }
    }

    #[test]
    fn param_parsing() {
        let p = parse_params("a1=1, b2=1/3").unwrap();
        assert_eq!(p["b2"], q(1, 3));
        assert!(parse_params("a1").is_err());
        assert!(parse_params("a1=2/4").is_err());
        assert!(parse_params("a1=1,a1=2").is_err());
    }
}
