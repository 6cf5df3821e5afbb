//! Built-in algebras and parametric families, plus a brute-force enumerator
//! for low superdimensions.
//!
//! The named entries:
//!
//! - `oo`, the ortho-orthogonal Lie superalgebra oo_IPi^(1)(1|2), spanned by
//!   even h, x2, y2 and odd x1, y1 with [x1,y1] = [x2,y2] = h, [h,x1] = x1,
//!   [h,y1] = y1, [x2,y1] = x1, [y2,x1] = y1 and squaring s(x1) = x2,
//!   s(y1) = y2;
//! - `oo_alpha`, its one-parameter Hom twist by eps;
//! - `dim11`, the (1|1) family alpha(e) = e, alpha(f) = lambda f,
//!   s(f) = rho e, [e,f] = rho lambda f (implemented exactly as printed in
//!   its source classification; see `dim11` tests for a consistency caveat);
//! - `A1`..`A10`, `B1`..`B10`, the (1|2) families, type I (trivial action
//!   of the even part on the odd part, nonzero squaring) and type II
//!   (nonzero action, zero squaring), with diagonal or Jordan-block twists.
//!
//! `enumerate_structures` sweeps every structure-constant assignment at a
//! given superdimension over a small field and keeps the ones passing the
//! axioms; `match_to_family` tests a structure against each family's
//! defining conditions.

use crate::algebra::{AxiomOptions, HomLieSuper2, Parity, SuperBasis};
use crate::error::{Error, Result};
use crate::gf2k::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Vector};
use std::collections::{BTreeMap, BTreeSet};

pub type Params = BTreeMap<String, Scalar>;

/// How to read the `rs_2` token in the B5/B6 condition column, which is
/// ambiguous in its source: either s*r2 or plain r2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rs2Reading {
    /// t1 compared against s*r2 (the reading consistent with the
    /// multiplicativity constraints b1(t1 + s r2) = 0, a2(r2 + s t1) = 0).
    #[default]
    STimesR2,
    /// t1 compared against r2.
    R2,
}

/// A catalog family: name, parameter names, and the admissibility conditions
/// quoted as they are checked.
#[derive(Debug, Clone)]
pub struct FamilyDescriptor {
    pub name: &'static str,
    pub parameters: &'static [&'static str],
    pub conditions: &'static str,
}

pub fn families() -> Vec<FamilyDescriptor> {
    vec![
        FamilyDescriptor { name: "oo", parameters: &[], conditions: "none" },
        FamilyDescriptor { name: "oo_alpha", parameters: &["eps"], conditions: "none (eps = 0 recovers oo)" },
        FamilyDescriptor { name: "dim11", parameters: &["lambda", "rho"], conditions: "lambda != 0, rho != 0" },
        FamilyDescriptor { name: "A1", parameters: &["rho1", "t1", "r2"], conditions: "rho1 != 0; s = t1^2; r2 arbitrary" },
        FamilyDescriptor { name: "A2", parameters: &["rho1", "rho2", "t1"], conditions: "rho1, rho2 != 0; s = t1^2; r2 = t1" },
        FamilyDescriptor { name: "A3", parameters: &["rho1", "rho3", "t1", "r2"], conditions: "rho1 != 0; rho1 + rho3 != 0; s = t1^2 = t1 r2; r2 != 0" },
        FamilyDescriptor { name: "A4", parameters: &["rho1", "rho2", "rho3", "t1"], conditions: "rho1, rho2 != 0; rho1 + rho2 + rho3 != 0; s = t1^2; t1 = r2 != 0" },
        FamilyDescriptor { name: "A5", parameters: &["rho1", "rho2", "t1"], conditions: "rho1, rho2 != 0; t1 != 0; rho3 = ((1 + t1)/t1) rho1 + rho2; s = t1^2 (Jordan twist)" },
        FamilyDescriptor { name: "A6", parameters: &["rho1", "t1"], conditions: "rho1 != 0; t1 != 0; rho3 = ((1 + t1)/t1) rho1 != 0; s = t1^2 (Jordan twist)" },
        FamilyDescriptor { name: "A7", parameters: &["rho1"], conditions: "rho1 != 0; s = t1 = 1 (Jordan twist)" },
        FamilyDescriptor { name: "A8", parameters: &["rho2", "rho3"], conditions: "rho2 != 0; s = t1 = 0 (Jordan twist)" },
        FamilyDescriptor { name: "A9", parameters: &["rho2", "t1"], conditions: "rho2 != 0; s = t1^2; t1 != 0 (Jordan twist)" },
        FamilyDescriptor { name: "A10", parameters: &["rho3"], conditions: "rho3 != 0; s = t1 = 0 (Jordan twist)" },
        FamilyDescriptor { name: "B1", parameters: &["a1", "a2", "b1", "b2", "t1"], conditions: "s = 1; r2 = t1" },
        FamilyDescriptor { name: "B2", parameters: &["a1", "b2", "t1", "r2"], conditions: "s = 1; t1 != r2" },
        FamilyDescriptor { name: "B3", parameters: &["a1", "a2", "b1", "b2", "s"], conditions: "s != 0, 1; t1 = r2 = 0" },
        FamilyDescriptor { name: "B4", parameters: &["b2", "s", "t1"], conditions: "s != 0, 1; t1 != 0; r2 = 0" },
        FamilyDescriptor { name: "B5", parameters: &["b1", "s", "r2"], conditions: "s != 0, 1; b1 != 0; t1 = rs_2 (flagged reading)" },
        FamilyDescriptor { name: "B6", parameters: &["a2", "s", "t1"], conditions: "s != 0, 1; a2 != 0; t1 != rs_2 (flagged reading); r2 = s t1" },
        FamilyDescriptor { name: "B7", parameters: &["a2", "b2", "s", "t1"], conditions: "s != 0, 1; r2 = 0; a2 t1 = 0" },
        FamilyDescriptor { name: "B8", parameters: &["a1", "b1"], conditions: "s = 1; t1 = 0 (Jordan twist)" },
        FamilyDescriptor { name: "B9", parameters: &["b1", "s"], conditions: "s != 1; t1 = 0; b1 != 0 (Jordan twist)" },
        FamilyDescriptor { name: "B10", parameters: &["a1", "t1"], conditions: "s = 1; t1 != 0; a1 != 0 (Jordan twist)" },
    ]
}

fn get(params: &Params, name: &str) -> Result<Scalar> {
    params
        .get(name)
        .copied()
        .ok_or_else(|| Error::MissingParameter(name.to_string()))
}

fn get_or_zero(params: &Params, name: &str, field: FieldSpec) -> Scalar {
    params.get(name).copied().unwrap_or_else(|| field.zero())
}

fn violated(family: &str, condition: &str) -> Error {
    Error::ConstraintViolation {
        family: family.to_string(),
        condition: condition.to_string(),
    }
}

/// The ortho-orthogonal Lie superalgebra oo_IPi^(1)(1|2) with identity twist.
pub fn build_oo(field: FieldSpec) -> Result<HomLieSuper2> {
    build_oo_alpha(field.zero())
}

/// The Hom twist of `oo` by eps: brackets
/// [x1,y1] = [x2,y2] = h, [h,x1] = x1, [h,y1] = eps x1 + y1,
/// [x2,y1] = x1, [y2,x1] = eps x1 + y1, squaring s(x1) = x2,
/// s(y1) = eps h + eps^2 x2 + y2, and the matching twist map.
pub fn build_oo_alpha(eps: Scalar) -> Result<HomLieSuper2> {
    let field = eps.spec();
    let basis = SuperBasis::new(
        vec!["h".into(), "x2".into(), "y2".into(), "x1".into(), "y1".into()],
        vec![Parity::Even, Parity::Even, Parity::Even, Parity::Odd, Parity::Odd],
    )?;
    let (h, x2, y2, x1, y1) = (0, 1, 2, 3, 4);
    let one = field.one();
    let bracket = vec![
        (x1, y1, h, one),
        (x2, y2, h, one),
        (h, x1, x1, one),
        (h, y1, x1, eps),
        (h, y1, y1, one),
        (x2, y1, x1, one),
        (y2, x1, x1, eps),
        (y2, x1, y1, one),
    ];
    let mut s_x1 = Vector::zero(field, 5);
    s_x1.set(x2, one);
    let mut s_y1 = Vector::zero(field, 5);
    s_y1.set(h, eps);
    s_y1.set(x2, eps.square());
    s_y1.set(y2, one);
    let mut twist = Matrix::identity(field, 5);
    // alpha(y1) = eps x1 + y1, alpha(y2) = eps h + eps^2 x2 + y2
    twist.set(x1, y1, eps);
    twist.set(h, y2, eps);
    twist.set(x2, y2, eps.square());
    HomLieSuper2::from_sparse(field, basis, &bracket, &[(x1, s_x1), (y1, s_y1)], twist)
}

/// The three-parameter self-map of `oo` determined by its odd block:
/// phi(x1) = d1 x1 + d2 y1, phi(y1) = e1 x1 + e2 y1, extended by
/// phi(x2) = d1 d2 h + d1^2 x2 + d2^2 y2, phi(y2) = e1 e2 h + e1^2 x2 + e2^2 y2
/// and phi(h) = (1 + T)^2 h where T = 1 + d2 e1 + d1 e2. It is a morphism
/// exactly when T = 0 (the odd block lies in SL_2).
pub fn oo_morphism(
    g: &HomLieSuper2,
    d1: Scalar,
    d2: Scalar,
    e1: Scalar,
    e2: Scalar,
) -> Result<Matrix> {
    let field = g.field();
    let b = g.basis();
    let (h, x2, y2, x1, y1) = (
        b.index_of("h").ok_or_else(|| Error::Unsupported("expected oo basis".into()))?,
        b.index_of("x2").unwrap(),
        b.index_of("y2").unwrap(),
        b.index_of("x1").unwrap(),
        b.index_of("y1").unwrap(),
    );
    let t = field.one() + d2 * e1 + d1 * e2;
    let mut phi = Matrix::zero(field, 5, 5);
    phi.set(x1, x1, d1);
    phi.set(y1, x1, d2);
    phi.set(x1, y1, e1);
    phi.set(y1, y1, e2);
    phi.set(h, x2, d1 * d2);
    phi.set(x2, x2, d1.square());
    phi.set(y2, x2, d2.square());
    phi.set(h, y2, e1 * e2);
    phi.set(x2, y2, e1.square());
    phi.set(y2, y2, e2.square());
    phi.set(h, h, (field.one() + t).square());
    Ok(phi)
}

/// The (1|1) normal form, exactly as printed in its source classification.
pub fn build_dim11(lambda: Scalar, rho: Scalar) -> Result<HomLieSuper2> {
    let field = lambda.spec();
    if lambda.is_zero() {
        return Err(violated("dim11", "lambda != 0"));
    }
    if rho.is_zero() {
        return Err(violated("dim11", "rho != 0"));
    }
    let basis = SuperBasis::new(
        vec!["e".into(), "f".into()],
        vec![Parity::Even, Parity::Odd],
    )?;
    let mut s_f = Vector::zero(field, 2);
    s_f.set(0, rho);
    let mut twist = Matrix::identity(field, 2);
    twist.set(1, 1, lambda);
    HomLieSuper2::from_sparse(
        field,
        basis,
        &[(0, 1, 1, rho * lambda)],
        &[(1, s_f)],
        twist,
    )
}

/// Coefficient data for a (1|2) structure: basis e | f1, f2 with
/// [e, f1] = a1 f1 + a2 f2, [e, f2] = b1 f1 + b2 f2, s(f1) = rho1 e,
/// s(f2) = rho2 e, s(f1 + f2) = rho3 e (so [f1, f2] = (rho1+rho2+rho3) e).
#[derive(Debug, Clone, Copy)]
pub struct Dim12Coefficients {
    pub a1: Scalar,
    pub a2: Scalar,
    pub b1: Scalar,
    pub b2: Scalar,
    pub rho1: Scalar,
    pub rho2: Scalar,
    pub rho3: Scalar,
}

/// Twist shapes used by the (1|2) classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistShape {
    /// alpha(e) = s e, alpha(f1) = t1 f1, alpha(f2) = r2 f2.
    Diagonal { s: Scalar, t1: Scalar, r2: Scalar },
    /// alpha(e) = s e, alpha(f1) = t1 f1, alpha(f2) = f1 + t1 f2.
    Jordan { s: Scalar, t1: Scalar },
}

pub fn build_dim12(c: Dim12Coefficients, twist: TwistShape) -> Result<HomLieSuper2> {
    let field = c.rho1.spec();
    let basis = SuperBasis::new(
        vec!["e".into(), "f1".into(), "f2".into()],
        vec![Parity::Even, Parity::Odd, Parity::Odd],
    )?;
    let mut s1 = Vector::zero(field, 3);
    s1.set(0, c.rho1);
    let mut s2 = Vector::zero(field, 3);
    s2.set(0, c.rho2);
    let bracket = vec![
        (0, 1, 1, c.a1),
        (0, 1, 2, c.a2),
        (0, 2, 1, c.b1),
        (0, 2, 2, c.b2),
        (1, 2, 0, c.rho1 + c.rho2 + c.rho3),
    ];
    let mut alpha = Matrix::zero(field, 3, 3);
    match twist {
        TwistShape::Diagonal { s, t1, r2 } => {
            alpha.set(0, 0, s);
            alpha.set(1, 1, t1);
            alpha.set(2, 2, r2);
        }
        TwistShape::Jordan { s, t1 } => {
            alpha.set(0, 0, s);
            alpha.set(1, 1, t1);
            alpha.set(1, 2, field.one());
            alpha.set(2, 2, t1);
        }
    }
    HomLieSuper2::from_sparse(field, basis, &bracket, &[(1, s1), (2, s2)], alpha)
}

fn zero_coeffs(field: FieldSpec) -> Dim12Coefficients {
    let z = field.zero();
    Dim12Coefficients {
        a1: z,
        a2: z,
        b1: z,
        b2: z,
        rho1: z,
        rho2: z,
        rho3: z,
    }
}

/// Builds a named family member from parameters, validating the family's
/// admissibility conditions (the printed condition column plus the
/// structural consistency the axioms force).
pub fn build(name: &str, field: FieldSpec, params: &Params) -> Result<HomLieSuper2> {
    build_with_reading(name, field, params, Rs2Reading::default())
}

pub fn build_with_reading(
    name: &str,
    field: FieldSpec,
    params: &Params,
    reading: Rs2Reading,
) -> Result<HomLieSuper2> {
    let one = field.one();
    let zero = field.zero();
    match name {
        "oo" => build_oo(field),
        "oo_alpha" => build_oo_alpha(get_or_zero(params, "eps", field)),
        "dim11" => build_dim11(get(params, "lambda")?, get(params, "rho")?),
        "A1" => {
            let rho1 = get(params, "rho1")?;
            if rho1.is_zero() {
                return Err(violated(name, "rho1 != 0"));
            }
            let t1 = get_or_zero(params, "t1", field);
            let r2 = get_or_zero(params, "r2", field);
            let mut c = zero_coeffs(field);
            c.rho1 = rho1;
            c.rho3 = rho1;
            build_dim12(c, TwistShape::Diagonal { s: t1.square(), t1, r2 })
        }
        "A2" => {
            let rho1 = get(params, "rho1")?;
            let rho2 = get(params, "rho2")?;
            if rho1.is_zero() || rho2.is_zero() {
                return Err(violated(name, "rho1, rho2 != 0"));
            }
            let t1 = get_or_zero(params, "t1", field);
            let mut c = zero_coeffs(field);
            c.rho1 = rho1;
            c.rho2 = rho2;
            c.rho3 = rho1 + rho2;
            build_dim12(c, TwistShape::Diagonal { s: t1.square(), t1, r2: t1 })
        }
        "A3" => {
            let rho1 = get(params, "rho1")?;
            let rho3 = get(params, "rho3")?;
            if rho1.is_zero() {
                return Err(violated(name, "rho1 != 0"));
            }
            if (rho1 + rho3).is_zero() {
                return Err(violated(name, "rho1 + rho3 != 0"));
            }
            let t1 = get_or_zero(params, "t1", field);
            let r2 = get(params, "r2")?;
            if r2.is_zero() {
                return Err(violated(name, "r2 != 0"));
            }
            if t1.square() != t1 * r2 {
                return Err(violated(name, "s = t1^2 = t1 r2"));
            }
            let mut c = zero_coeffs(field);
            c.rho1 = rho1;
            c.rho3 = rho3;
            build_dim12(c, TwistShape::Diagonal { s: t1.square(), t1, r2 })
        }
        "A4" => {
            let rho1 = get(params, "rho1")?;
            let rho2 = get(params, "rho2")?;
            let rho3 = get(params, "rho3")?;
            if rho1.is_zero() || rho2.is_zero() {
                return Err(violated(name, "rho1, rho2 != 0"));
            }
            if (rho1 + rho2 + rho3).is_zero() {
                return Err(violated(name, "rho1 + rho2 + rho3 != 0"));
            }
            let t1 = get(params, "t1")?;
            if t1.is_zero() {
                return Err(violated(name, "t1 = r2 != 0"));
            }
            let mut c = zero_coeffs(field);
            c.rho1 = rho1;
            c.rho2 = rho2;
            c.rho3 = rho3;
            build_dim12(c, TwistShape::Diagonal { s: t1.square(), t1, r2: t1 })
        }
        "A5" => {
            let rho1 = get(params, "rho1")?;
            let rho2 = get(params, "rho2")?;
            if rho1.is_zero() || rho2.is_zero() {
                return Err(violated(name, "rho1, rho2 != 0"));
            }
            let t1 = get(params, "t1")?;
            if t1.is_zero() {
                return Err(violated(name, "t1 != 0 (rho3 = ((1+t1)/t1) rho1 + rho2 needs t1 invertible)"));
            }
            let rho3 = (one + t1) * t1.inv()? * rho1 + rho2;
            let mut c = zero_coeffs(field);
            c.rho1 = rho1;
            c.rho2 = rho2;
            c.rho3 = rho3;
            build_dim12(c, TwistShape::Jordan { s: t1.square(), t1 })
        }
        "A6" => {
            let rho1 = get(params, "rho1")?;
            if rho1.is_zero() {
                return Err(violated(name, "rho1 != 0"));
            }
            let t1 = get(params, "t1")?;
            if t1.is_zero() {
                return Err(violated(name, "t1 != 0 (rho3 = ((1+t1)/t1) rho1 needs t1 invertible)"));
            }
            let rho3 = (one + t1) * t1.inv()? * rho1;
            if rho3.is_zero() {
                return Err(violated(name, "rho3 != 0 (so t1 != 1)"));
            }
            let mut c = zero_coeffs(field);
            c.rho1 = rho1;
            c.rho3 = rho3;
            build_dim12(c, TwistShape::Jordan { s: t1.square(), t1 })
        }
        "A7" => {
            let rho1 = get(params, "rho1")?;
            if rho1.is_zero() {
                return Err(violated(name, "rho1 != 0"));
            }
            let mut c = zero_coeffs(field);
            c.rho1 = rho1;
            build_dim12(c, TwistShape::Jordan { s: one, t1: one })
        }
        "A8" => {
            let rho2 = get(params, "rho2")?;
            if rho2.is_zero() {
                return Err(violated(name, "rho2 != 0"));
            }
            let mut c = zero_coeffs(field);
            c.rho2 = rho2;
            c.rho3 = get_or_zero(params, "rho3", field);
            build_dim12(c, TwistShape::Jordan { s: zero, t1: zero })
        }
        "A9" => {
            let rho2 = get(params, "rho2")?;
            if rho2.is_zero() {
                return Err(violated(name, "rho2 != 0"));
            }
            let t1 = get(params, "t1")?;
            if t1.is_zero() {
                return Err(violated(name, "t1 != 0"));
            }
            let mut c = zero_coeffs(field);
            c.rho2 = rho2;
            c.rho3 = rho2;
            build_dim12(c, TwistShape::Jordan { s: t1.square(), t1 })
        }
        "A10" => {
            let rho3 = get(params, "rho3")?;
            if rho3.is_zero() {
                return Err(violated(name, "rho3 != 0"));
            }
            let mut c = zero_coeffs(field);
            c.rho3 = rho3;
            build_dim12(c, TwistShape::Jordan { s: zero, t1: zero })
        }
        "B1" => {
            let mut c = zero_coeffs(field);
            c.a1 = get_or_zero(params, "a1", field);
            c.a2 = get_or_zero(params, "a2", field);
            c.b1 = get_or_zero(params, "b1", field);
            c.b2 = get_or_zero(params, "b2", field);
            let t1 = get_or_zero(params, "t1", field);
            build_dim12(c, TwistShape::Diagonal { s: one, t1, r2: t1 })
        }
        "B2" => {
            let mut c = zero_coeffs(field);
            c.a1 = get_or_zero(params, "a1", field);
            c.b2 = get_or_zero(params, "b2", field);
            let t1 = get_or_zero(params, "t1", field);
            let r2 = get_or_zero(params, "r2", field);
            if t1 == r2 {
                return Err(violated(name, "t1 != r2"));
            }
            build_dim12(c, TwistShape::Diagonal { s: one, t1, r2 })
        }
        "B3" => {
            let s = get(params, "s")?;
            if s.is_zero() || s.is_one() {
                return Err(violated(name, "s != 0, 1"));
            }
            let mut c = zero_coeffs(field);
            c.a1 = get_or_zero(params, "a1", field);
            c.a2 = get_or_zero(params, "a2", field);
            c.b1 = get_or_zero(params, "b1", field);
            c.b2 = get_or_zero(params, "b2", field);
            build_dim12(c, TwistShape::Diagonal { s, t1: zero, r2: zero })
        }
        "B4" => {
            let s = get(params, "s")?;
            if s.is_zero() || s.is_one() {
                return Err(violated(name, "s != 0, 1"));
            }
            let t1 = get(params, "t1")?;
            if t1.is_zero() {
                return Err(violated(name, "t1 != 0"));
            }
            let mut c = zero_coeffs(field);
            c.b2 = get_or_zero(params, "b2", field);
            build_dim12(c, TwistShape::Diagonal { s, t1, r2: zero })
        }
        "B5" => {
            let s = get(params, "s")?;
            if s.is_zero() || s.is_one() {
                return Err(violated(name, "s != 0, 1"));
            }
            let b1 = get(params, "b1")?;
            if b1.is_zero() {
                return Err(violated(name, "b1 != 0"));
            }
            let r2 = get_or_zero(params, "r2", field);
            // multiplicativity on [e, f2] = b1 f1 forces t1 = s r2
            let t1 = s * r2;
            match reading {
                Rs2Reading::STimesR2 => {} // t1 = s r2 holds by construction
                Rs2Reading::R2 => {
                    if t1 != r2 {
                        return Err(violated(name, "t1 = r2 (alternate rs_2 reading)"));
                    }
                }
            }
            let mut c = zero_coeffs(field);
            c.b1 = b1;
            build_dim12(c, TwistShape::Diagonal { s, t1, r2 })
        }
        "B6" => {
            let s = get(params, "s")?;
            if s.is_zero() || s.is_one() {
                return Err(violated(name, "s != 0, 1"));
            }
            let a2 = get(params, "a2")?;
            if a2.is_zero() {
                return Err(violated(name, "a2 != 0"));
            }
            let t1 = get_or_zero(params, "t1", field);
            // multiplicativity on [e, f1] = a2 f2 forces r2 = s t1
            let r2 = s * t1;
            let excluded = match reading {
                Rs2Reading::STimesR2 => s * r2,
                Rs2Reading::R2 => r2,
            };
            if t1 == excluded {
                return Err(violated(name, "t1 != rs_2"));
            }
            let mut c = zero_coeffs(field);
            c.a2 = a2;
            build_dim12(c, TwistShape::Diagonal { s, t1, r2 })
        }
        "B7" => {
            let s = get(params, "s")?;
            if s.is_zero() || s.is_one() {
                return Err(violated(name, "s != 0, 1"));
            }
            let t1 = get_or_zero(params, "t1", field);
            let a2 = get_or_zero(params, "a2", field);
            if !(a2 * t1).is_zero() {
                return Err(violated(name, "a2 t1 = 0 (multiplicativity with r2 = 0)"));
            }
            let mut c = zero_coeffs(field);
            c.a2 = a2;
            c.b2 = get_or_zero(params, "b2", field);
            build_dim12(c, TwistShape::Diagonal { s, t1, r2: zero })
        }
        "B8" => {
            let mut c = zero_coeffs(field);
            c.a1 = get_or_zero(params, "a1", field);
            c.b1 = get_or_zero(params, "b1", field);
            c.b2 = c.a1; // [e, f2] = b1 f1 + a1 f2
            build_dim12(c, TwistShape::Jordan { s: one, t1: zero })
        }
        "B9" => {
            let s = get(params, "s")?;
            if s.is_one() {
                return Err(violated(name, "s != 1"));
            }
            let b1 = get(params, "b1")?;
            if b1.is_zero() {
                return Err(violated(name, "b1 != 0"));
            }
            let mut c = zero_coeffs(field);
            c.b1 = b1;
            build_dim12(c, TwistShape::Jordan { s, t1: zero })
        }
        "B10" => {
            let a1 = get(params, "a1")?;
            if a1.is_zero() {
                return Err(violated(name, "a1 != 0"));
            }
            let t1 = get(params, "t1")?;
            if t1.is_zero() {
                return Err(violated(name, "t1 != 0"));
            }
            let mut c = zero_coeffs(field);
            c.a1 = a1;
            c.b2 = a1;
            build_dim12(c, TwistShape::Jordan { s: one, t1 })
        }
        other => Err(Error::UnknownFamily(other.to_string())),
    }
}

/// Twist shapes selectable for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaShape {
    Diagonal,
    Jordan,
    All,
}

/// Exhaustively enumerates all structure-constant assignments at
/// superdimension (m|n) over a small field, keeping the ones passing the
/// full axioms. The free coefficients are the parity-consistent bracket
/// entries on increasing basis pairs, the squaring values, and a twist of
/// the requested shape.
pub fn enumerate_structures(
    m: usize,
    n: usize,
    field: FieldSpec,
    shape: AlphaShape,
    dedupe: bool,
) -> Result<Vec<HomLieSuper2>> {
    if m + n > 3 {
        return Err(Error::TooLarge(format!(
            "superdimension ({m}|{n}) exceeds the m + n <= 3 enumeration limit"
        )));
    }
    if field.order() > 4 {
        return Err(Error::TooLarge(format!(
            "field of order {} exceeds the enumeration limit of 4",
            field.order()
        )));
    }
    if shape == AlphaShape::Jordan && n != 2 {
        return Err(Error::Unsupported(
            "the Jordan twist shape needs an odd part of dimension 2".to_string(),
        ));
    }
    let basis = SuperBasis::standard(m, n);
    let d = m + n;
    let q = field.order();

    // free bracket slots: (i < j, k) with parity(k) = parity(i) + parity(j)
    let mut bracket_slots = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            let target = basis.parity(i) + basis.parity(j);
            for k in 0..d {
                if basis.parity(k) == target {
                    bracket_slots.push((i, j, k));
                }
            }
        }
    }
    // free squaring slots: (odd index, even target)
    let mut squaring_slots = Vec::new();
    for &i in &basis.odd_indices() {
        for k in basis.even_indices() {
            squaring_slots.push((i, k));
        }
    }
    // free twist slots, by shape
    let twist_slots: Vec<(usize, usize)> = match shape {
        AlphaShape::Diagonal => (0..d).map(|i| (i, i)).collect(),
        AlphaShape::Jordan => (0..d).map(|i| (i, i)).collect(),
        AlphaShape::All => {
            let mut slots = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if basis.parity(i) == basis.parity(j) {
                        slots.push((i, j));
                    }
                }
            }
            slots
        }
    };
    // Jordan ties the two odd diagonal entries together: skip the second one.
    let free_twist_slots: Vec<(usize, usize)> = if shape == AlphaShape::Jordan {
        let odd = basis.odd_indices();
        twist_slots
            .iter()
            .copied()
            .filter(|&(i, _)| i != odd[1])
            .collect()
    } else {
        twist_slots
    };

    let total_free = bracket_slots.len() + squaring_slots.len() + free_twist_slots.len();
    let candidates = (q as f64).powi(total_free as i32);
    if candidates > (1u64 << 25) as f64 {
        return Err(Error::TooLarge(format!(
            "{candidates:.0} candidate assignments exceed the enumeration budget"
        )));
    }

    let elements: Vec<Scalar> = field.elements().collect();
    let mut assignment = vec![0usize; total_free];
    let mut survivors = Vec::new();
    let mut seen = BTreeSet::new();
    loop {
        // build the candidate
        let mut bracket_entries = Vec::with_capacity(bracket_slots.len());
        for (slot, &(i, j, k)) in bracket_slots.iter().enumerate() {
            let c = elements[assignment[slot]];
            if !c.is_zero() {
                bracket_entries.push((i, j, k, c));
            }
        }
        let mut squaring_map: BTreeMap<usize, Vector> = BTreeMap::new();
        for (slot, &(i, k)) in squaring_slots.iter().enumerate() {
            let c = elements[assignment[bracket_slots.len() + slot]];
            if !c.is_zero() {
                squaring_map
                    .entry(i)
                    .or_insert_with(|| Vector::zero(field, d))
                    .set(k, c);
            }
        }
        let mut twist = Matrix::zero(field, d, d);
        for (slot, &(i, j)) in free_twist_slots.iter().enumerate() {
            let c = elements[assignment[bracket_slots.len() + squaring_slots.len() + slot]];
            twist.set(i, j, c);
        }
        if shape == AlphaShape::Jordan {
            let odd = basis.odd_indices();
            let t1 = twist.get(odd[0], odd[0]);
            twist.set(odd[1], odd[1], t1);
            twist.set(odd[0], odd[1], field.one());
        }
        let squaring_entries: Vec<(usize, Vector)> =
            squaring_map.into_iter().collect();
        let g = HomLieSuper2::from_sparse(
            field,
            basis.clone(),
            &bracket_entries,
            &squaring_entries,
            twist,
        )?;
        if g.passes_axioms(AxiomOptions::default()) {
            if dedupe {
                let key = permutation_canonical_key(&g);
                if seen.insert(key) {
                    survivors.push(g);
                }
            } else {
                survivors.push(g);
            }
        }
        // advance the odometer
        let mut pos = 0;
        loop {
            if pos == total_free {
                return Ok(survivors);
            }
            assignment[pos] += 1;
            if assignment[pos] < elements.len() {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
    }
}

/// Canonical encoding of the structure data up to parity-preserving basis
/// permutations: the lexicographically smallest bit encoding over all such
/// permutations.
fn permutation_canonical_key(g: &HomLieSuper2) -> Vec<u64> {
    let d = g.dim();
    let perms = parity_permutations(g.basis());
    let mut best: Option<Vec<u64>> = None;
    for perm in &perms {
        // perm[i] = new position of basis vector i
        let mut key = Vec::with_capacity(d * d * d + d * d);
        let inv: Vec<usize> = {
            let mut inv = vec![0; d];
            for (i, &p) in perm.iter().enumerate() {
                inv[p] = i;
            }
            inv
        };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    key.push(g.bracket_const(inv[i], inv[j], inv[k]).bits());
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                key.push(g.twist().get(inv[i], inv[j]).bits());
            }
        }
        for &i in &g.basis().odd_indices() {
            // squaring rows in permuted order
            let row = g.squaring_of_basis(inv[i]).cloned();
            if let Some(v) = row {
                for k in 0..d {
                    key.push(v.get(inv[k]).bits());
                }
            }
        }
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    best.unwrap()
}

fn parity_permutations(basis: &SuperBasis) -> Vec<Vec<usize>> {
    let even = basis.even_indices();
    let odd = basis.odd_indices();
    let even_perms = permutations(&even);
    let odd_perms = permutations(&odd);
    let mut out = Vec::new();
    for ep in &even_perms {
        for op in &odd_perms {
            let mut perm = vec![0; basis.dim()];
            for (slot, &i) in even.iter().enumerate() {
                perm[i] = ep[slot];
            }
            for (slot, &i) in odd.iter().enumerate() {
                perm[i] = op[slot];
            }
            out.push(perm);
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let rest: Vec<usize> = items
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, &y)| y)
            .collect();
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Extracted coefficients of a (1|2) structure in its stored basis.
fn dim12_data(g: &HomLieSuper2) -> Option<(Dim12Coefficients, Option<TwistShape>)> {
    let b = g.basis();
    if b.even_dim() != 1 || b.odd_dim() != 2 {
        return None;
    }
    let e = b.even_indices()[0];
    let odd = b.odd_indices();
    let (f1, f2) = (odd[0], odd[1]);
    let field = g.field();
    let c = Dim12Coefficients {
        a1: g.bracket_const(e, f1, f1),
        a2: g.bracket_const(e, f1, f2),
        b1: g.bracket_const(e, f2, f1),
        b2: g.bracket_const(e, f2, f2),
        rho1: g.squaring_of_basis(f1)?.get(e),
        rho2: g.squaring_of_basis(f2)?.get(e),
        rho3: g.squaring_of_basis(f1)?.get(e)
            + g.squaring_of_basis(f2)?.get(e)
            + g.bracket_const(f1, f2, e),
    };
    let a = g.twist();
    let diagonal = a.get(e, f1).is_zero()
        && a.get(e, f2).is_zero()
        && a.get(f1, e).is_zero()
        && a.get(f2, e).is_zero()
        && a.get(f1, f2).is_zero()
        && a.get(f2, f1).is_zero();
    let shape = if diagonal {
        Some(TwistShape::Diagonal {
            s: a.get(e, e),
            t1: a.get(f1, f1),
            r2: a.get(f2, f2),
        })
    } else if a.get(e, f1).is_zero()
        && a.get(e, f2).is_zero()
        && a.get(f1, e).is_zero()
        && a.get(f2, e).is_zero()
        && a.get(f2, f1).is_zero()
        && a.get(f1, f2) == field.one()
        && a.get(f1, f1) == a.get(f2, f2)
    {
        Some(TwistShape::Jordan {
            s: a.get(e, e),
            t1: a.get(f1, f1),
        })
    } else {
        None
    };
    Some((c, shape))
}

/// Tests a (1|1) or (1|2) structure against each family's defining
/// equalities and inequalities, returning all matching row names.
pub fn match_to_family(g: &HomLieSuper2) -> Result<Vec<String>> {
    match_to_family_with_reading(g, Rs2Reading::default())
}

pub fn match_to_family_with_reading(
    g: &HomLieSuper2,
    reading: Rs2Reading,
) -> Result<Vec<String>> {
    let b = g.basis();
    if b.even_dim() == 1 && b.odd_dim() == 1 {
        return Ok(match_dim11(g).into_iter().collect());
    }
    if b.even_dim() == 1 && b.odd_dim() == 2 {
        return Ok(match_dim12(g, reading));
    }
    Err(Error::Unsupported(format!(
        "family matching supports superdimensions (1|1) and (1|2), got ({}|{})",
        b.even_dim(),
        b.odd_dim()
    )))
}

fn match_dim11(g: &HomLieSuper2) -> Option<String> {
    let b = g.basis();
    let e = b.even_indices()[0];
    let f = b.odd_indices()[0];
    let a = g.twist();
    // the normal form is diagonal with alpha(e) = e
    if !a.get(e, f).is_zero() || !a.get(f, e).is_zero() {
        return None;
    }
    let lambda1 = a.get(e, e);
    let lambda2 = a.get(f, f);
    let rho = g.squaring_of_basis(f)?.get(e);
    let gamma = g.bracket_const(e, f, f);
    let one = g.field().one();
    if lambda1 == one && !lambda2.is_zero() && !rho.is_zero() && gamma == rho * lambda2 {
        Some("dim11".to_string())
    } else {
        None
    }
}

fn match_dim12(g: &HomLieSuper2, reading: Rs2Reading) -> Vec<String> {
    let Some((c, shape)) = dim12_data(g) else {
        return Vec::new();
    };
    let field = g.field();
    let one = field.one();
    let zero = field.zero();
    let mut matches = Vec::new();
    let squaring_zero = c.rho1.is_zero() && c.rho2.is_zero() && c.rho3.is_zero();
    let action_zero = c.a1.is_zero() && c.a2.is_zero() && c.b1.is_zero() && c.b2.is_zero();
    match shape {
        Some(TwistShape::Diagonal { s, t1, r2 }) => {
            // type I rows A1-A4 (trivial action, diagonal twist)
            if action_zero {
                if !c.rho1.is_zero() && c.rho2.is_zero() && c.rho3 == c.rho1 && s == t1.square() {
                    matches.push("A1".into());
                }
                if !c.rho1.is_zero()
                    && !c.rho2.is_zero()
                    && c.rho3 == c.rho1 + c.rho2
                    && s == t1.square()
                    && r2 == t1
                {
                    matches.push("A2".into());
                }
                if !c.rho1.is_zero()
                    && c.rho2.is_zero()
                    && !(c.rho1 + c.rho3).is_zero()
                    && s == t1.square()
                    && s == t1 * r2
                    && !r2.is_zero()
                {
                    matches.push("A3".into());
                }
                if !c.rho1.is_zero()
                    && !c.rho2.is_zero()
                    && !(c.rho1 + c.rho2 + c.rho3).is_zero()
                    && s == t1.square()
                    && t1 == r2
                    && !r2.is_zero()
                {
                    matches.push("A4".into());
                }
            }
            // type II rows B1-B7 (zero squaring, diagonal twist)
            if squaring_zero && !action_zero {
                let rs2 = match reading {
                    Rs2Reading::STimesR2 => s * r2,
                    Rs2Reading::R2 => r2,
                };
                if s == one && t1 == r2 {
                    matches.push("B1".into());
                }
                if s == one && t1 != r2 && c.a2.is_zero() && c.b1.is_zero() {
                    matches.push("B2".into());
                }
                if s != zero && s != one && t1.is_zero() && r2.is_zero() {
                    matches.push("B3".into());
                }
                if s != zero
                    && s != one
                    && !t1.is_zero()
                    && r2.is_zero()
                    && c.a1.is_zero()
                    && c.a2.is_zero()
                    && c.b1.is_zero()
                {
                    matches.push("B4".into());
                }
                if s != zero
                    && s != one
                    && !c.b1.is_zero()
                    && c.a1.is_zero()
                    && c.a2.is_zero()
                    && c.b2.is_zero()
                    && t1 == rs2
                {
                    matches.push("B5".into());
                }
                if s != zero
                    && s != one
                    && !c.a2.is_zero()
                    && c.a1.is_zero()
                    && c.b1.is_zero()
                    && c.b2.is_zero()
                    && t1 != rs2
                {
                    matches.push("B6".into());
                }
                if s != zero
                    && s != one
                    && r2.is_zero()
                    && c.a1.is_zero()
                    && c.b1.is_zero()
                {
                    matches.push("B7".into());
                }
            }
        }
        Some(TwistShape::Jordan { s, t1 }) => {
            // type I rows A5-A10 (trivial action, Jordan twist)
            if action_zero {
                if !c.rho1.is_zero()
                    && !c.rho2.is_zero()
                    && !t1.is_zero()
                    && s == t1.square()
                    && c.rho3 == (one + t1) * t1.inv().expect("t1 != 0") * c.rho1 + c.rho2
                {
                    matches.push("A5".into());
                }
                if !c.rho1.is_zero()
                    && c.rho2.is_zero()
                    && !c.rho3.is_zero()
                    && !t1.is_zero()
                    && s == t1.square()
                    && c.rho3 == (one + t1) * t1.inv().expect("t1 != 0") * c.rho1
                {
                    matches.push("A6".into());
                }
                if !c.rho1.is_zero()
                    && c.rho2.is_zero()
                    && c.rho3.is_zero()
                    && s == one
                    && t1 == one
                {
                    matches.push("A7".into());
                }
                if c.rho1.is_zero() && !c.rho2.is_zero() && s.is_zero() && t1.is_zero() {
                    matches.push("A8".into());
                }
                if c.rho1.is_zero()
                    && !c.rho2.is_zero()
                    && c.rho3 == c.rho2
                    && !t1.is_zero()
                    && s == t1.square()
                {
                    matches.push("A9".into());
                }
                if c.rho1.is_zero()
                    && c.rho2.is_zero()
                    && !c.rho3.is_zero()
                    && s.is_zero()
                    && t1.is_zero()
                {
                    matches.push("A10".into());
                }
            }
            // type II rows B8-B10 (zero squaring, Jordan twist)
            if squaring_zero && !action_zero {
                if s == one && t1.is_zero() && c.a2.is_zero() && c.b2 == c.a1 {
                    matches.push("B8".into());
                }
                if s != one
                    && t1.is_zero()
                    && !c.b1.is_zero()
                    && c.a1.is_zero()
                    && c.a2.is_zero()
                    && c.b2.is_zero()
                {
                    matches.push("B9".into());
                }
                if s == one
                    && !t1.is_zero()
                    && !c.a1.is_zero()
                    && c.a2.is_zero()
                    && c.b1.is_zero()
                    && c.b2 == c.a1
                {
                    matches.push("B10".into());
                }
            }
        }
        None => {}
    }
    matches
}
