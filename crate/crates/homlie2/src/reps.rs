//! Representations of Hom-Lie superalgebras, semidirect products, and the
//! twisted general linear superalgebra (gl(V), Ad_beta).
//!
//! A representation is a triple (V, [.,.]_V, beta): a supermodule with an
//! even map beta satisfying
//!
//! 1. [alpha(x), beta(v)] = beta([x, v]),
//! 2. [[x, y], beta(v)] = [alpha(x), [y, v]] + [alpha(y), [x, v]],
//! 3. [s(x), beta(v)] = [alpha(x), [x, v]] for odd x.
//!
//! On gl(V) with invertible even beta, the bracket
//! [f, g] = beta f beta^-1 g beta^-1 + beta g beta^-1 f beta^-1 and squaring
//! s(f) = beta f beta^-1 f beta^-1 make (gl(V), Ad_beta) a Hom-Lie
//! superalgebra, and rho is a representation with respect to beta exactly
//! when x -> rho(x) is a morphism into it.

use crate::algebra::{check_morphism, HomLieSuper2, MorphismReport, Parity, SuperBasis, Witness};
use crate::error::{Error, Result};
use crate::gf2k::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Vector};
use std::fmt;

/// A module over a Hom-Lie superalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: HomLieSuper2,
    module_basis: SuperBasis,
    /// action[x*md*md + v*md + w] = coefficient of m_w in [e_x, m_v].
    action: Vec<Scalar>,
    beta: Matrix,
}

impl Representation {
    pub fn new(
        algebra: HomLieSuper2,
        module_basis: SuperBasis,
        action: Vec<Scalar>,
        beta: Matrix,
    ) -> Result<Self> {
        let gd = algebra.dim();
        let md = module_basis.dim();
        if action.len() != gd * md * md {
            return Err(Error::Shape(format!(
                "action table must have {} entries, got {}",
                gd * md * md,
                action.len()
            )));
        }
        if beta.rows() != md || beta.cols() != md {
            return Err(Error::Shape("beta has the wrong shape".to_string()));
        }
        if beta.field() != algebra.field() {
            return Err(Error::FieldMismatch(
                algebra.field().to_string(),
                beta.field().to_string(),
            ));
        }
        Ok(Representation {
            algebra,
            module_basis,
            action,
            beta,
        })
    }

    pub fn from_sparse_action(
        algebra: HomLieSuper2,
        module_basis: SuperBasis,
        entries: &[(usize, usize, usize, Scalar)],
        beta: Matrix,
    ) -> Result<Self> {
        let gd = algebra.dim();
        let md = module_basis.dim();
        let mut action = vec![algebra.field().zero(); gd * md * md];
        for &(x, v, w, c) in entries {
            if x >= gd || v >= md || w >= md {
                return Err(Error::Shape(format!(
                    "action entry ({x},{v},{w}) out of range"
                )));
            }
            action[x * md * md + v * md + w] += c;
        }
        Representation::new(algebra, module_basis, action, beta)
    }

    /// The trivial module of the given superdimension: zero action,
    /// beta = identity.
    pub fn trivial(algebra: HomLieSuper2, even_dim: usize, odd_dim: usize) -> Self {
        let field = algebra.field();
        let module_basis = SuperBasis::standard(even_dim, odd_dim);
        let md = module_basis.dim();
        let gd = algebra.dim();
        Representation {
            algebra,
            module_basis,
            action: vec![field.zero(); gd * md * md],
            beta: Matrix::identity(field, md),
        }
    }

    pub fn algebra(&self) -> &HomLieSuper2 {
        &self.algebra
    }

    pub fn module_basis(&self) -> &SuperBasis {
        &self.module_basis
    }

    pub fn module_dim(&self) -> usize {
        self.module_basis.dim()
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn action_const(&self, x: usize, v: usize, w: usize) -> Scalar {
        let md = self.module_dim();
        self.action[x * md * md + v * md + w]
    }

    pub fn set_action_const(&mut self, x: usize, v: usize, w: usize, c: Scalar) {
        let md = self.module_dim();
        self.action[x * md * md + v * md + w] = c;
    }

    /// [e_x, m_v] as a module vector.
    pub fn act_basis(&self, x: usize, v: usize) -> Vector {
        let md = self.module_dim();
        Vector::from_entries(
            self.field(),
            self.action[x * md * md + v * md..x * md * md + v * md + md].to_vec(),
        )
        .expect("consistent field")
    }

    /// Bilinear action [x, v] for x in the algebra and v in the module.
    pub fn act(&self, x: &Vector, v: &Vector) -> Result<Vector> {
        let md = self.module_dim();
        if x.len() != self.algebra.dim() || v.len() != md {
            return Err(Error::Shape(format!(
                "action arguments must have lengths {} and {md}, got {} and {}",
                self.algebra.dim(),
                x.len(),
                v.len()
            )));
        }
        let mut out = Vector::zero(self.field(), md);
        for (i, a) in x.support() {
            for (j, b) in v.support() {
                let c = a * b;
                let row = &self.action[i * md * md + j * md..i * md * md + j * md + md];
                for (k, e) in row.iter().enumerate() {
                    if !e.is_zero() {
                        out.set(k, out.get(k) + c * *e);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The matrix of v -> [x, v].
    pub fn rho(&self, x: &Vector) -> Matrix {
        let md = self.module_dim();
        let mut m = Matrix::zero(self.field(), md, md);
        for v in 0..md {
            let image = self
                .act(x, &Vector::unit(self.field(), md, v))
                .expect("shape");
            for w in 0..md {
                m.set(w, v, image.get(w));
            }
        }
        m
    }

    pub fn check(&self) -> RepReport {
        let mut report = RepReport { checks: Vec::new() };
        report.push(RepAxiom::ActionParity, self.check_action_parity());
        report.push(RepAxiom::BetaParity, self.check_beta_parity());
        report.push(RepAxiom::BetaIntertwine, self.check_beta_intertwine());
        report.push(RepAxiom::ModuleJacobi, self.check_module_jacobi());
        report.push(RepAxiom::ModuleSquaring, self.check_module_squaring());
        report
    }

    fn check_action_parity(&self) -> Option<Witness> {
        let gd = self.algebra.dim();
        let md = self.module_dim();
        for x in 0..gd {
            for v in 0..md {
                let target = self.algebra.basis().parity(x) + self.module_basis.parity(v);
                for w in 0..md {
                    if !self.action_const(x, v, w).is_zero()
                        && self.module_basis.parity(w) != target
                    {
                        return Some(Witness {
                            description: format!(
                                "action [{}, {}] has a component on {} of the wrong parity",
                                self.algebra.basis().label(x),
                                self.module_basis.label(v),
                                self.module_basis.label(w)
                            ),
                            args: vec![self.algebra.basis_vector(x)],
                            lhs: self.act_basis(x, v),
                            rhs: Vector::zero(self.field(), md),
                        });
                    }
                }
            }
        }
        None
    }

    fn check_beta_parity(&self) -> Option<Witness> {
        let md = self.module_dim();
        for i in 0..md {
            for j in 0..md {
                if !self.beta.get(i, j).is_zero()
                    && self.module_basis.parity(i) != self.module_basis.parity(j)
                {
                    return Some(Witness {
                        description: format!(
                            "beta entry ({}, {}) is parity-mixing",
                            self.module_basis.label(i),
                            self.module_basis.label(j)
                        ),
                        args: vec![],
                        lhs: self.beta.column(j),
                        rhs: Vector::zero(self.field(), md),
                    });
                }
            }
        }
        None
    }

    /// [alpha(x), beta(v)] = beta([x, v]) on basis pairs.
    fn check_beta_intertwine(&self) -> Option<Witness> {
        for x in 0..self.algebra.dim() {
            let ax = self.algebra.alpha(&self.algebra.basis_vector(x));
            for v in 0..self.module_dim() {
                let bv = self
                    .beta
                    .apply(&Vector::unit(self.field(), self.module_dim(), v));
                let lhs = self.act(&ax, &bv).expect("shape");
                let rhs = self.beta.apply(&self.act_basis(x, v));
                if lhs != rhs {
                    return Some(Witness {
                        description: format!(
                            "[alpha({}), beta({})] != beta([{}, {}])",
                            self.algebra.basis().label(x),
                            self.module_basis.label(v),
                            self.algebra.basis().label(x),
                            self.module_basis.label(v)
                        ),
                        args: vec![self.algebra.basis_vector(x)],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        None
    }

    /// [[x, y], beta(v)] = [alpha(x), [y, v]] + [alpha(y), [x, v]].
    fn check_module_jacobi(&self) -> Option<Witness> {
        let gd = self.algebra.dim();
        for x in 0..gd {
            let ax = self.algebra.alpha(&self.algebra.basis_vector(x));
            for y in x..gd {
                let ay = self.algebra.alpha(&self.algebra.basis_vector(y));
                let xy = self.algebra.bracket_of_basis(x, y);
                for v in 0..self.module_dim() {
                    let bv = self
                        .beta
                        .apply(&Vector::unit(self.field(), self.module_dim(), v));
                    let lhs = self.act(&xy, &bv).expect("shape");
                    let mut rhs = self.act(&ax, &self.act_basis(y, v)).expect("shape");
                    rhs.add_assign(&self.act(&ay, &self.act_basis(x, v)).expect("shape"));
                    if lhs != rhs {
                        return Some(Witness {
                            description: format!(
                                "[[{}, {}], beta({})] fails the module Jacobi rule",
                                self.algebra.basis().label(x),
                                self.algebra.basis().label(y),
                                self.module_basis.label(v)
                            ),
                            args: vec![
                                self.algebra.basis_vector(x),
                                self.algebra.basis_vector(y),
                            ],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        None
    }

    /// [s(x), beta(v)] = [alpha(x), [x, v]] for x over the odd quadratic
    /// test set (basis vectors and pairwise sums).
    fn check_module_squaring(&self) -> Option<Witness> {
        for x in self.algebra.odd_quadratic_test_set() {
            let sx = self.algebra.squaring(&x).expect("odd");
            let ax = self.algebra.alpha(&x);
            for v in 0..self.module_dim() {
                let unit = Vector::unit(self.field(), self.module_dim(), v);
                let bv = self.beta.apply(&unit);
                let lhs = self.act(&sx, &bv).expect("shape");
                let xv = self.act(&x, &unit).expect("shape");
                let rhs = self.act(&ax, &xv).expect("shape");
                if lhs != rhs {
                    return Some(Witness {
                        description: format!(
                            "[s(x), beta({})] != [alpha(x), [x, {}]] at x = {x}",
                            self.module_basis.label(v),
                            self.module_basis.label(v)
                        ),
                        args: vec![x.clone()],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepAxiom {
    ActionParity,
    BetaParity,
    BetaIntertwine,
    ModuleJacobi,
    ModuleSquaring,
}

impl fmt::Display for RepAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RepAxiom::ActionParity => "action-parity",
            RepAxiom::BetaParity => "beta-parity",
            RepAxiom::BetaIntertwine => "beta-intertwine",
            RepAxiom::ModuleJacobi => "module-jacobi",
            RepAxiom::ModuleSquaring => "module-squaring",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone)]
pub struct RepCheck {
    pub axiom: RepAxiom,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone)]
pub struct RepReport {
    pub checks: Vec<RepCheck>,
}

impl RepReport {
    fn push(&mut self, axiom: RepAxiom, witness: Option<Witness>) {
        self.checks.push(RepCheck { axiom, witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn first_failure(&self) -> Option<&RepCheck> {
        self.checks.iter().find(|c| c.witness.is_some())
    }
}

impl fmt::Display for RepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "[pass] {}", c.axiom)?,
                Some(w) => writeln!(f, "[FAIL] {}: {}", c.axiom, w.description)?,
            }
        }
        Ok(())
    }
}

/// The adjoint representation: the algebra acting on itself by the bracket,
/// with beta equal to the twist.
pub fn adjoint_rep(g: &HomLieSuper2) -> Representation {
    let d = g.dim();
    let mut action = vec![g.field().zero(); d * d * d];
    for x in 0..d {
        for v in 0..d {
            let image = g.bracket_of_basis(x, v);
            for w in 0..d {
                action[x * d * d + v * d + w] = image.get(w);
            }
        }
    }
    Representation {
        algebra: g.clone(),
        module_basis: g.basis().clone(),
        action,
        beta: g.twist().clone(),
    }
}

/// The semidirect product g |x V: bracket
/// [x + v, y + w] = [x, y] + [x, w] + [y, v], squaring
/// s(x + v) = s(x) + [x, v], twist alpha (+) beta.
pub fn semidirect_product(r: &Representation) -> Result<HomLieSuper2> {
    let check = r.check();
    if let Some(c) = check.first_failure() {
        return Err(Error::InvalidRepresentation(
            c.witness.as_ref().expect("failure").description.clone(),
        ));
    }
    let g = r.algebra();
    let field = g.field();
    let gd = g.dim();
    let md = r.module_dim();
    let d = gd + md;
    let clash = (0..md).any(|v| g.basis().index_of(r.module_basis().label(v)).is_some());
    let mut labels: Vec<String> = g.basis().labels().to_vec();
    let mut parities: Vec<Parity> = g.basis().parities().to_vec();
    for v in 0..md {
        let l = r.module_basis().label(v);
        labels.push(if clash { format!("V.{l}") } else { l.to_string() });
        parities.push(r.module_basis().parity(v));
    }
    let basis = SuperBasis::new(labels, parities)?;
    let mut bracket = vec![field.zero(); d * d * d];
    for i in 0..gd {
        for j in 0..gd {
            let v = g.bracket_of_basis(i, j);
            for k in 0..gd {
                bracket[i * d * d + j * d + k] = v.get(k);
            }
        }
        for v in 0..md {
            let image = r.act_basis(i, v);
            for k in 0..md {
                bracket[i * d * d + (gd + v) * d + gd + k] = image.get(k);
                bracket[(gd + v) * d * d + i * d + gd + k] = image.get(k);
            }
        }
    }
    let mut squaring = Vec::new();
    for i in 0..d {
        if basis.parity(i) != Parity::Odd {
            continue;
        }
        let mut s = Vector::zero(field, d);
        if i < gd {
            let sg = g.squaring(&g.basis_vector(i))?;
            for k in 0..gd {
                s.set(k, sg.get(k));
            }
        }
        squaring.push(s);
    }
    let mut twist = Matrix::zero(field, d, d);
    for i in 0..gd {
        for j in 0..gd {
            twist.set(i, j, g.twist().get(i, j));
        }
    }
    for i in 0..md {
        for j in 0..md {
            twist.set(gd + i, gd + j, r.beta().get(i, j));
        }
    }
    HomLieSuper2::new(field, basis, bracket, squaring, twist)
}

/// (gl(V), [.,.], s, Ad_beta) on the matrix-unit basis E{a}_{b}, for a
/// module with the given parity sequence and invertible even beta.
pub fn gl_from_parities(
    field: FieldSpec,
    parities: &[Parity],
    beta: &Matrix,
) -> Result<HomLieSuper2> {
    let n = parities.len();
    if beta.rows() != n || beta.cols() != n {
        return Err(Error::Shape("beta has the wrong shape".to_string()));
    }
    for i in 0..n {
        for j in 0..n {
            if !beta.get(i, j).is_zero() && parities[i] != parities[j] {
                return Err(Error::Parity(format!(
                    "beta entry ({i}, {j}) is parity-mixing"
                )));
            }
        }
    }
    let beta_inv = beta.inverse().map_err(|_| Error::NotInvertible)?;
    let d = n * n;
    let unit_index = |a: usize, b: usize| a * n + b;
    let mut labels = Vec::with_capacity(d);
    let mut unit_parities = Vec::with_capacity(d);
    for a in 0..n {
        for b in 0..n {
            labels.push(format!("E{a}_{b}"));
            unit_parities.push(parities[a] + parities[b]);
        }
    }
    let basis = SuperBasis::new(labels, unit_parities.clone())?;
    let unit = |a: usize, b: usize| {
        let mut m = Matrix::zero(field, n, n);
        m.set(a, b, field.one());
        m
    };
    let vectorize = |m: &Matrix| {
        let mut v = Vector::zero(field, d);
        for a in 0..n {
            for b in 0..n {
                v.set(unit_index(a, b), m.get(a, b));
            }
        }
        v
    };
    // [f, g] = (beta f beta^-1)(g beta^-1) + (beta g beta^-1)(f beta^-1)
    let sandwich: Vec<Matrix> = (0..d)
        .map(|i| beta.mul(&unit(i / n, i % n)).mul(&beta_inv))
        .collect();
    let right: Vec<Matrix> = (0..d).map(|i| unit(i / n, i % n).mul(&beta_inv)).collect();
    let mut bracket = vec![field.zero(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            let m = sandwich[i].mul(&right[j]).add(&sandwich[j].mul(&right[i]));
            let v = vectorize(&m);
            for k in 0..d {
                bracket[i * d * d + j * d + k] = v.get(k);
            }
        }
    }
    let mut squaring = Vec::new();
    for i in 0..d {
        if unit_parities[i] == Parity::Odd {
            squaring.push(vectorize(&sandwich[i].mul(&right[i])));
        }
    }
    let mut twist = Matrix::zero(field, d, d);
    for i in 0..d {
        let v = vectorize(&sandwich[i]);
        for k in 0..d {
            twist.set(k, i, v.get(k));
        }
    }
    HomLieSuper2::new(field, basis, bracket, squaring, twist)
}

/// Standard-basis version: module with `dim_even` even then `dim_odd` odd
/// basis vectors.
pub fn gl_hom_structure(dim_even: usize, dim_odd: usize, beta: &Matrix) -> Result<HomLieSuper2> {
    let parities: Vec<Parity> = (0..dim_even)
        .map(|_| Parity::Even)
        .chain((0..dim_odd).map(|_| Parity::Odd))
        .collect();
    gl_from_parities(beta.field(), &parities, beta)
}

/// Checks whether x -> rho(x) is a morphism into (gl(V), Ad_beta). By the
/// equivalence theorem this verdict agrees with [`Representation::check`]
/// whenever beta is invertible.
pub fn check_rep_as_morphism(r: &Representation) -> Result<MorphismReport> {
    let gl = gl_from_parities(r.field(), r.module_basis().parities(), r.beta())?;
    let g = r.algebra();
    let md = r.module_dim();
    let mut phi = Matrix::zero(r.field(), md * md, g.dim());
    for x in 0..g.dim() {
        // matrix of rho(e_x): gl coordinate (w, v) = action constant (x, v, w)
        for v in 0..md {
            for w in 0..md {
                phi.set(w * md + v, x, r.action_const(x, v, w));
            }
        }
    }
    check_morphism(g, &gl, &phi)
}

/// Twists a Lie superalgebra (identity twist) together with a plain
/// representation: given a self-morphism alpha and an even beta with
/// rho(alpha(x)) beta = beta rho(x), returns the twisted algebra and the
/// representation (rho_beta = beta rho, beta) over it.
pub fn twist_representation(
    g: &HomLieSuper2,
    r: &Representation,
    alpha: &Matrix,
    beta: &Matrix,
) -> Result<(HomLieSuper2, Representation)> {
    if g.twist() != &Matrix::identity(g.field(), g.dim()) {
        return Err(Error::Unsupported(
            "twist_representation starts from an identity-twist algebra".to_string(),
        ));
    }
    if r.algebra() != g {
        return Err(Error::Shape(
            "representation does not belong to the given algebra".to_string(),
        ));
    }
    if beta.rows() != r.module_dim() || beta.cols() != r.module_dim() {
        return Err(Error::Shape("beta has the wrong shape".to_string()));
    }
    // intertwining relation rho(alpha(x)) o beta = beta o rho(x) on basis x
    for x in 0..g.dim() {
        let ax = alpha.apply(&g.basis_vector(x));
        let lhs = r.rho(&ax).mul(beta);
        let rhs = beta.mul(&r.rho(&g.basis_vector(x)));
        if lhs != rhs {
            return Err(Error::Incompatible {
                witness: g.basis().label(x).to_string(),
            });
        }
    }
    let twisted = g.twist_by_morphism(alpha)?;
    let md = r.module_dim();
    let mut action = vec![g.field().zero(); g.dim() * md * md];
    for x in 0..g.dim() {
        for v in 0..md {
            let image = beta.apply(&r.act_basis(x, v));
            for w in 0..md {
                action[x * md * md + v * md + w] = image.get(w);
            }
        }
    }
    let rep = Representation::new(
        twisted.clone(),
        r.module_basis().clone(),
        action,
        beta.clone(),
    )?;
    Ok((twisted, rep))
}
