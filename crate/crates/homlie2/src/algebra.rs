//! Hom-Lie superalgebras in characteristic 2.
//!
//! The core object is a quadruple (g, [.,.], s, alpha): a parity-graded
//! basis, symmetric bracket structure constants, squaring values on odd
//! basis vectors, and an even twist matrix. In characteristic 2 symmetry and
//! skew-symmetry coincide, and the odd-odd bracket is the polar form of the
//! squaring: [x, y] = s(x+y) + s(x) + s(y). Only s(f_i) on odd basis vectors
//! is stored; evaluation on a general odd vector uses the forced quadratic
//! expansion s(sum l_i f_i) = sum l_i^2 s(f_i) + sum_{i<j} l_i l_j [f_i, f_j].
//!
//! Construction performs shape checks only. Mathematical consistency lives
//! in [`HomLieSuper2::check_axioms`], so deliberately broken structures can
//! be built and fed to the checker (mutation testing relies on this).

use crate::error::{Error, Result};
use crate::gf2k::{FieldSpec, Scalar};
use crate::linalg::{Matrix, SubspaceBasis, Vector};
use std::fmt;

/// Z/2 grading tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn from_flag(flag: u8) -> Result<Parity> {
        match flag {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(Error::Parity(format!("parity flag must be 0 or 1, got {flag}"))),
        }
    }

    pub fn flag(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A parity-labeled basis of a superspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperBasis {
    labels: Vec<String>,
    parities: Vec<Parity>,
}

impl SuperBasis {
    pub fn new(labels: Vec<String>, parities: Vec<Parity>) -> Result<Self> {
        if labels.len() != parities.len() {
            return Err(Error::Shape(
                "label and parity lists have different lengths".to_string(),
            ));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Shape(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(SuperBasis { labels, parities })
    }

    /// Basis with `m` even vectors then `n` odd vectors, default labels
    /// e0..e{m-1}, f0..f{n-1}.
    pub fn standard(m: usize, n: usize) -> Self {
        let mut labels = Vec::with_capacity(m + n);
        let mut parities = Vec::with_capacity(m + n);
        for i in 0..m {
            labels.push(format!("e{i}"));
            parities.push(Parity::Even);
        }
        for i in 0..n {
            labels.push(format!("f{i}"));
            parities.push(Parity::Odd);
        }
        SuperBasis { labels, parities }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parities.iter().filter(|p| **p == Parity::Even).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.parities[i] == Parity::Even)
            .collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.parities[i] == Parity::Odd)
            .collect()
    }
}

/// A Hom-Lie superalgebra over GF(2^k), given by structure data on a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieSuper2 {
    field: FieldSpec,
    basis: SuperBasis,
    /// Structure constants, bracket[i*d*d + j*d + k] = coefficient of e_k in [e_i, e_j].
    bracket: Vec<Scalar>,
    /// Squaring values s(f_i), one vector per odd basis index, in odd-index order.
    squaring: Vec<Vector>,
    /// Twist matrix; column j is alpha(e_j).
    twist: Matrix,
}

impl HomLieSuper2 {
    pub fn new(
        field: FieldSpec,
        basis: SuperBasis,
        bracket: Vec<Scalar>,
        squaring: Vec<Vector>,
        twist: Matrix,
    ) -> Result<Self> {
        let d = basis.dim();
        if bracket.len() != d * d * d {
            return Err(Error::Shape(format!(
                "bracket table must have {} entries, got {}",
                d * d * d,
                bracket.len()
            )));
        }
        for c in &bracket {
            if c.spec() != field {
                return Err(Error::FieldMismatch(field.to_string(), c.spec().to_string()));
            }
        }
        if squaring.len() != basis.odd_dim() {
            return Err(Error::Shape(format!(
                "expected {} squaring values, got {}",
                basis.odd_dim(),
                squaring.len()
            )));
        }
        for v in &squaring {
            if v.len() != d {
                return Err(Error::Shape("squaring value has wrong length".to_string()));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), v.field().to_string()));
            }
        }
        if twist.rows() != d || twist.cols() != d {
            return Err(Error::Shape("twist matrix has wrong shape".to_string()));
        }
        if twist.field() != field {
            return Err(Error::FieldMismatch(field.to_string(), twist.field().to_string()));
        }
        Ok(HomLieSuper2 {
            field,
            basis,
            bracket,
            squaring,
            twist,
        })
    }

    /// Builds from sparse bracket entries (only i <= j need be given; the
    /// symmetric mirror is filled in) and sparse squaring entries keyed by
    /// odd basis index.
    pub fn from_sparse(
        field: FieldSpec,
        basis: SuperBasis,
        bracket_entries: &[(usize, usize, usize, Scalar)],
        squaring_entries: &[(usize, Vector)],
        twist: Matrix,
    ) -> Result<Self> {
        let d = basis.dim();
        let mut bracket = vec![field.zero(); d * d * d];
        for &(i, j, k, c) in bracket_entries {
            if i >= d || j >= d || k >= d {
                return Err(Error::Shape(format!(
                    "bracket entry ({i},{j},{k}) out of range for dimension {d}"
                )));
            }
            bracket[i * d * d + j * d + k] += c;
            if i != j {
                bracket[j * d * d + i * d + k] += c;
            }
        }
        let odd = basis.odd_indices();
        let mut squaring = vec![Vector::zero(field, d); odd.len()];
        for (idx, v) in squaring_entries {
            let Some(slot) = odd.iter().position(|i| i == idx) else {
                return Err(Error::Parity(format!(
                    "squaring given on basis index {idx}, which is not odd"
                )));
            };
            squaring[slot] = v.clone();
        }
        HomLieSuper2::new(field, basis, bracket, squaring, twist)
    }

    /// The abelian superalgebra: zero bracket, zero squaring, identity twist.
    pub fn abelian(field: FieldSpec, basis: SuperBasis) -> Self {
        let d = basis.dim();
        let squaring = vec![Vector::zero(field, d); basis.odd_dim()];
        HomLieSuper2 {
            field,
            basis,
            bracket: vec![field.zero(); d * d * d],
            squaring,
            twist: Matrix::identity(field, d),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis(&self) -> &SuperBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn with_twist(&self, twist: Matrix) -> Result<Self> {
        HomLieSuper2::new(
            self.field,
            self.basis.clone(),
            self.bracket.clone(),
            self.squaring.clone(),
            twist,
        )
    }

    pub fn bracket_const(&self, i: usize, j: usize, k: usize) -> Scalar {
        let d = self.dim();
        self.bracket[i * d * d + j * d + k]
    }

    pub fn bracket_table(&self) -> &[Scalar] {
        &self.bracket
    }

    /// Mutable access to one structure constant; used by mutation fixtures.
    pub fn set_bracket_const(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let d = self.dim();
        self.bracket[i * d * d + j * d + k] = c;
    }

    /// [e_i, e_j] as a vector.
    pub fn bracket_of_basis(&self, i: usize, j: usize) -> Vector {
        let d = self.dim();
        Vector::from_entries(self.field, self.bracket[i * d * d + j * d..i * d * d + j * d + d].to_vec())
            .expect("consistent field")
    }

    /// s(f_i) for an odd basis index, `None` on even indices.
    pub fn squaring_of_basis(&self, i: usize) -> Option<&Vector> {
        let slot = self.basis.odd_indices().iter().position(|&o| o == i)?;
        Some(&self.squaring[slot])
    }

    pub fn squaring_values(&self) -> &[Vector] {
        &self.squaring
    }

    pub fn set_squaring_value(&mut self, odd_slot: usize, value: Vector) {
        self.squaring[odd_slot] = value;
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim(), i)
    }

    /// alpha(v).
    pub fn alpha(&self, v: &Vector) -> Vector {
        self.twist.apply(v)
    }

    /// alpha^k as a matrix (computed by repeated multiplication; no
    /// periodicity of the twist is assumed).
    pub fn alpha_power(&self, k: usize) -> Matrix {
        self.twist.pow(k)
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let d = self.dim();
        if x.len() != d || y.len() != d {
            return Err(Error::Shape(format!(
                "bracket arguments must have length {d}, got {} and {}",
                x.len(),
                y.len()
            )));
        }
        let mut out = Vector::zero(self.field, d);
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let c = a * b;
                let row = &self.bracket[i * d * d + j * d..i * d * d + j * d + d];
                for (k, e) in row.iter().enumerate() {
                    if !e.is_zero() {
                        out.set(k, out.get(k) + c * *e);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Parity of a homogeneous vector; zero counts as even, mixed vectors
    /// return `None`.
    pub fn homogeneous_parity(&self, v: &Vector) -> Option<Parity> {
        let mut parity = None;
        for (i, _) in v.support() {
            let p = self.basis.parity(i);
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }

    pub fn parity_projection(&self, v: &Vector, parity: Parity) -> Vector {
        let mut out = Vector::zero(self.field, self.dim());
        for (i, c) in v.support() {
            if self.basis.parity(i) == parity {
                out.set(i, c);
            }
        }
        out
    }

    /// Squaring of a purely odd vector by the forced quadratic expansion.
    pub fn squaring(&self, x: &Vector) -> Result<Vector> {
        let d = self.dim();
        if x.len() != d {
            return Err(Error::Shape(format!(
                "squaring argument must have length {d}, got {}",
                x.len()
            )));
        }
        let support: Vec<(usize, Scalar)> = x.support().collect();
        for (i, _) in &support {
            if self.basis.parity(*i) != Parity::Odd {
                return Err(Error::Parity(format!(
                    "squaring argument has a nonzero even component at {}",
                    self.basis.label(*i)
                )));
            }
        }
        let odd = self.basis.odd_indices();
        let mut out = Vector::zero(self.field, d);
        for (i, a) in &support {
            let slot = odd.iter().position(|o| o == i).expect("odd index");
            out.add_scaled(a.square(), &self.squaring[slot]);
        }
        for (pos, (i, a)) in support.iter().enumerate() {
            for (j, b) in support.iter().skip(pos + 1) {
                out.add_scaled(*a * *b, &self.bracket_of_basis(*i, *j));
            }
        }
        Ok(out)
    }

    /// The sufficient test set for quadratic identities in one odd slot:
    /// odd basis vectors and their pairwise sums. A map Q with Q(lx) =
    /// l^2 Q(x) and bilinear polar form vanishes everywhere iff it vanishes
    /// on this set.
    pub fn odd_quadratic_test_set(&self) -> Vec<Vector> {
        let odd = self.basis.odd_indices();
        let mut set = Vec::new();
        for (pos, &i) in odd.iter().enumerate() {
            set.push(self.basis_vector(i));
            for &j in odd.iter().skip(pos + 1) {
                set.push(self.basis_vector(i).plus(&self.basis_vector(j)));
            }
        }
        set
    }

    pub fn check_axioms(&self, options: AxiomOptions) -> AxiomReport {
        let mut report = AxiomReport { checks: Vec::new() };
        report.push(Axiom::ParityConsistency, self.check_parity_consistency());
        report.push(Axiom::BracketSymmetry, self.check_bracket_symmetry());
        report.push(Axiom::HomJacobi, self.check_hom_jacobi());
        report.push(Axiom::SquaringJacobi, self.check_squaring_jacobi());
        if options.require_multiplicative {
            report.push(
                Axiom::TwistMultiplicativeBracket,
                self.check_twist_bracket(),
            );
            report.push(
                Axiom::TwistMultiplicativeSquaring,
                self.check_twist_squaring(),
            );
        }
        report
    }

    /// Short-circuiting axiom check, for enumeration filters.
    pub fn passes_axioms(&self, options: AxiomOptions) -> bool {
        if self.check_parity_consistency().is_some()
            || self.check_bracket_symmetry().is_some()
            || self.check_hom_jacobi().is_some()
            || self.check_squaring_jacobi().is_some()
        {
            return false;
        }
        if options.require_multiplicative
            && (self.check_twist_bracket().is_some() || self.check_twist_squaring().is_some())
        {
            return false;
        }
        true
    }

    fn check_parity_consistency(&self) -> Option<Witness> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let target = self.basis.parity(i) + self.basis.parity(j);
                for k in 0..d {
                    if !self.bracket_const(i, j, k).is_zero() && self.basis.parity(k) != target {
                        return Some(Witness {
                            description: format!(
                                "structure constant c[{},{}]^{} = {} violates parity grading",
                                self.basis.label(i),
                                self.basis.label(j),
                                self.basis.label(k),
                                self.bracket_const(i, j, k)
                            ),
                            args: vec![self.basis_vector(i), self.basis_vector(j)],
                            lhs: self.bracket_of_basis(i, j),
                            rhs: Vector::zero(self.field, d),
                        });
                    }
                }
            }
        }
        for (slot, &i) in self.basis.odd_indices().iter().enumerate() {
            let odd_component = self.parity_projection(&self.squaring[slot], Parity::Odd);
            if !odd_component.is_zero() {
                return Some(Witness {
                    description: format!(
                        "s({}) = {} does not land in the even part",
                        self.basis.label(i),
                        self.squaring[slot]
                    ),
                    args: vec![self.basis_vector(i)],
                    lhs: self.squaring[slot].clone(),
                    rhs: self.parity_projection(&self.squaring[slot], Parity::Even),
                });
            }
        }
        for i in 0..d {
            for j in 0..d {
                if !self.twist.get(i, j).is_zero() && self.basis.parity(i) != self.basis.parity(j) {
                    return Some(Witness {
                        description: format!(
                            "twist entry ({}, {}) = {} is parity-mixing",
                            self.basis.label(i),
                            self.basis.label(j),
                            self.twist.get(i, j)
                        ),
                        args: vec![self.basis_vector(j)],
                        lhs: self.alpha(&self.basis_vector(j)),
                        rhs: Vector::zero(self.field, d),
                    });
                }
            }
        }
        None
    }

    fn check_bracket_symmetry(&self) -> Option<Witness> {
        let d = self.dim();
        for i in 0..d {
            for k in 0..d {
                if !self.bracket_const(i, i, k).is_zero() {
                    return Some(Witness {
                        description: format!(
                            "[{x}, {x}] != 0",
                            x = self.basis.label(i)
                        ),
                        args: vec![self.basis_vector(i), self.basis_vector(i)],
                        lhs: self.bracket_of_basis(i, i),
                        rhs: Vector::zero(self.field, d),
                    });
                }
            }
            for j in (i + 1)..d {
                for k in 0..d {
                    if self.bracket_const(i, j, k) != self.bracket_const(j, i, k) {
                        return Some(Witness {
                            description: format!(
                                "[{}, {}] != [{}, {}]",
                                self.basis.label(i),
                                self.basis.label(j),
                                self.basis.label(j),
                                self.basis.label(i)
                            ),
                            args: vec![self.basis_vector(i), self.basis_vector(j)],
                            lhs: self.bracket_of_basis(i, j),
                            rhs: self.bracket_of_basis(j, i),
                        });
                    }
                }
            }
        }
        None
    }

    /// [alpha(x), [y, z]] + [alpha(y), [z, x]] + [alpha(z), [x, y]] = 0 on
    /// basis triples. The identity is symmetric in its arguments, so strictly
    /// increasing triples suffice; triples with a repeated argument vanish
    /// automatically once symmetry and the zero diagonal hold.
    fn check_hom_jacobi(&self) -> Option<Witness> {
        let d = self.dim();
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    let mut acc = self
                        .bracket(&self.alpha(&self.basis_vector(i)), &self.bracket_of_basis(j, k))
                        .expect("shape");
                    acc.add_assign(
                        &self
                            .bracket(&self.alpha(&self.basis_vector(j)), &self.bracket_of_basis(k, i))
                            .expect("shape"),
                    );
                    acc.add_assign(
                        &self
                            .bracket(&self.alpha(&self.basis_vector(k)), &self.bracket_of_basis(i, j))
                            .expect("shape"),
                    );
                    if !acc.is_zero() {
                        return Some(Witness {
                            description: format!(
                                "hom-Jacobi fails on ({}, {}, {})",
                                self.basis.label(i),
                                self.basis.label(j),
                                self.basis.label(k)
                            ),
                            args: vec![
                                self.basis_vector(i),
                                self.basis_vector(j),
                                self.basis_vector(k),
                            ],
                            lhs: acc,
                            rhs: Vector::zero(self.field, d),
                        });
                    }
                }
            }
        }
        None
    }

    /// [s(x), alpha(y)] = [alpha(x), [x, y]] for x in the odd quadratic test
    /// set and y over basis vectors.
    fn check_squaring_jacobi(&self) -> Option<Witness> {
        for x in self.odd_quadratic_test_set() {
            let sx = self.squaring(&x).expect("odd by construction");
            let ax = self.alpha(&x);
            for j in 0..self.dim() {
                let y = self.basis_vector(j);
                let lhs = self.bracket(&sx, &self.alpha(&y)).expect("shape");
                let xy = self.bracket(&x, &y).expect("shape");
                let rhs = self.bracket(&ax, &xy).expect("shape");
                if lhs != rhs {
                    return Some(Witness {
                        description: format!(
                            "[s(x), alpha(y)] != [alpha(x), [x, y]] at x = {x}, y = {}",
                            self.basis.label(j)
                        ),
                        args: vec![x.clone(), y],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        None
    }

    fn check_twist_bracket(&self) -> Option<Witness> {
        let d = self.dim();
        for i in 0..d {
            for j in (i + 1)..d {
                let lhs = self.alpha(&self.bracket_of_basis(i, j));
                let rhs = self
                    .bracket(&self.alpha(&self.basis_vector(i)), &self.alpha(&self.basis_vector(j)))
                    .expect("shape");
                if lhs != rhs {
                    return Some(Witness {
                        description: format!(
                            "alpha([{}, {}]) != [alpha({}), alpha({})]",
                            self.basis.label(i),
                            self.basis.label(j),
                            self.basis.label(i),
                            self.basis.label(j)
                        ),
                        args: vec![self.basis_vector(i), self.basis_vector(j)],
                        lhs,
                        rhs,
                    });
                }
            }
        }
        None
    }

    fn check_twist_squaring(&self) -> Option<Witness> {
        for x in self.odd_quadratic_test_set() {
            let lhs = self.alpha(&self.squaring(&x).expect("odd by construction"));
            let ax = self.alpha(&x);
            let rhs = match self.squaring(&ax) {
                Ok(v) => v,
                Err(_) => {
                    return Some(Witness {
                        description: format!("alpha({x}) = {ax} is not purely odd"),
                        args: vec![x.clone()],
                        lhs,
                        rhs: ax,
                    })
                }
            };
            if lhs != rhs {
                return Some(Witness {
                    description: format!("alpha(s(x)) != s(alpha(x)) at x = {x}"),
                    args: vec![x.clone()],
                    lhs,
                    rhs,
                });
            }
        }
        None
    }

    /// Twists by a self-morphism: bracket and squaring are postcomposed with
    /// the morphism and the twist becomes (existing twist) composed with (morphism).
    /// The morphism gate is the full three-condition check, so the result
    /// satisfies the multiplicative axioms whenever the input does.
    pub fn twist_by_morphism(&self, morphism: &Matrix) -> Result<HomLieSuper2> {
        let report = check_morphism(self, self, morphism)?;
        if let Some(w) = report.first_failure() {
            return Err(Error::NotAMorphism(w.description.clone()));
        }
        let d = self.dim();
        let mut bracket = vec![self.field.zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let image = morphism.apply(&self.bracket_of_basis(i, j));
                for k in 0..d {
                    bracket[i * d * d + j * d + k] = image.get(k);
                }
            }
        }
        let squaring = self
            .squaring
            .iter()
            .map(|v| morphism.apply(v))
            .collect::<Vec<_>>();
        let twist = self.twist.mul(morphism);
        HomLieSuper2::new(self.field, self.basis.clone(), bracket, squaring, twist)
    }

    /// Checks the ideal conditions [I, g] <= I, alpha(I) <= I and
    /// s(I_odd) <= I for a homogeneous subspace.
    pub fn check_ideal(&self, subspace: &SubspaceBasis) -> Result<CheckOutcome> {
        if subspace.ambient_dim() != self.dim() {
            return Err(Error::Shape(
                "ideal candidate lives in the wrong ambient space".to_string(),
            ));
        }
        let generators = self.homogeneous_generators(subspace)?;
        for g in &generators {
            for j in 0..self.dim() {
                let b = self.bracket(g, &self.basis_vector(j))?;
                if !subspace.contains(&b) {
                    return Ok(CheckOutcome::fail(Witness {
                        description: format!(
                            "[{g}, {}] = {b} escapes the subspace",
                            self.basis.label(j)
                        ),
                        args: vec![g.clone(), self.basis_vector(j)],
                        lhs: b,
                        rhs: Vector::zero(self.field, self.dim()),
                    }));
                }
            }
            let a = self.alpha(g);
            if !subspace.contains(&a) {
                return Ok(CheckOutcome::fail(Witness {
                    description: format!("alpha({g}) = {a} escapes the subspace"),
                    args: vec![g.clone()],
                    lhs: a,
                    rhs: Vector::zero(self.field, self.dim()),
                }));
            }
        }
        // squaring on odd generators and their pairwise sums
        let odd_gens: Vec<&Vector> = generators
            .iter()
            .filter(|g| self.homogeneous_parity(g) == Some(Parity::Odd) && !g.is_zero())
            .collect();
        let mut test_set: Vec<Vector> = odd_gens.iter().map(|g| (*g).clone()).collect();
        for (i, g) in odd_gens.iter().enumerate() {
            for h in odd_gens.iter().skip(i + 1) {
                test_set.push(g.plus(h));
            }
        }
        for x in &test_set {
            let s = self.squaring(x)?;
            if !subspace.contains(&s) {
                return Ok(CheckOutcome::fail(Witness {
                    description: format!("s({x}) = {s} escapes the subspace"),
                    args: vec![x.clone()],
                    lhs: s,
                    rhs: Vector::zero(self.field, self.dim()),
                }));
            }
        }
        Ok(CheckOutcome::pass())
    }

    /// Splits an echelon basis into parity-pure generators, failing if the
    /// subspace is not homogeneous (not closed under parity projections).
    fn homogeneous_generators(&self, subspace: &SubspaceBasis) -> Result<Vec<Vector>> {
        let mut generators = Vec::new();
        for v in subspace.vectors() {
            for parity in [Parity::Even, Parity::Odd] {
                let part = self.parity_projection(v, parity);
                if part.is_zero() {
                    continue;
                }
                if !subspace.contains(&part) {
                    return Err(Error::Parity(format!(
                        "subspace is not homogeneous: the {parity} part of {v} escapes it"
                    )));
                }
                generators.push(part);
            }
        }
        Ok(generators)
    }

    /// Quotient by an ideal. The quotient basis consists of the standard
    /// basis vectors at the non-pivot columns of the ideal's echelon basis,
    /// keeping their original labels and parities.
    pub fn quotient(&self, ideal: &SubspaceBasis) -> Result<HomLieSuper2> {
        let check = self.check_ideal(ideal)?;
        if let Some(w) = check.witness {
            return Err(Error::NotAnIdeal(w.description));
        }
        let d = self.dim();
        let pivots = ideal.pivots();
        let reps: Vec<usize> = (0..d).filter(|i| !pivots.contains(i)).collect();
        let qd = reps.len();
        let to_quotient = |v: &Vector| -> Vector {
            let reduced = ideal.reduce(v);
            let mut out = Vector::zero(self.field, qd);
            for (slot, &i) in reps.iter().enumerate() {
                out.set(slot, reduced.get(i));
            }
            out
        };
        let labels = reps.iter().map(|&i| self.basis.label(i).to_string()).collect();
        let parities = reps.iter().map(|&i| self.basis.parity(i)).collect();
        let qbasis = SuperBasis::new(labels, parities)?;
        let mut bracket = vec![self.field.zero(); qd * qd * qd];
        for (si, &i) in reps.iter().enumerate() {
            for (sj, &j) in reps.iter().enumerate() {
                let image = to_quotient(&self.bracket_of_basis(i, j));
                for k in 0..qd {
                    bracket[si * qd * qd + sj * qd + k] = image.get(k);
                }
            }
        }
        let mut squaring = Vec::new();
        for &i in &reps {
            if self.basis.parity(i) == Parity::Odd {
                let s = self.squaring(&self.basis_vector(i))?;
                squaring.push(to_quotient(&s));
            }
        }
        let mut twist = Matrix::zero(self.field, qd, qd);
        for (sj, &j) in reps.iter().enumerate() {
            let image = to_quotient(&self.alpha(&self.basis_vector(j)));
            for k in 0..qd {
                twist.set(k, sj, image.get(k));
            }
        }
        // re-verify that the quotient squaring is independent of coset
        // representatives: s(x + i) = s(x) mod I for odd ideal generators i
        let odd_ideal_gens: Vec<Vector> = self
            .homogeneous_generators(ideal)?
            .into_iter()
            .filter(|g| self.homogeneous_parity(g) == Some(Parity::Odd) && !g.is_zero())
            .collect();
        for &r in reps.iter().filter(|&&r| self.basis.parity(r) == Parity::Odd) {
            let x = self.basis_vector(r);
            let sx = to_quotient(&self.squaring(&x)?);
            for i in &odd_ideal_gens {
                let shifted = to_quotient(&self.squaring(&x.plus(i))?);
                if shifted != sx {
                    return Err(Error::NotAnIdeal(format!(
                        "quotient squaring is not well-defined on the coset of {}",
                        self.basis.label(r)
                    )));
                }
            }
        }
        HomLieSuper2::new(self.field, qbasis, bracket, squaring, twist)
    }

    /// Iterated derived subalgebra: g^(0) = g and
    /// g^(i+1) = [g^(i), g^(i)] + Span{ s(x) : x in g^(i) odd }.
    pub fn derived_subalgebra(&self, steps: usize) -> SubspaceBasis {
        let mut current: Vec<Vector> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        for _ in 0..steps {
            let pure = self.pure_spanning(&current);
            let mut next = Vec::new();
            for (i, x) in pure.iter().enumerate() {
                for y in pure.iter().skip(i) {
                    next.push(self.bracket(x, y).expect("shape"));
                }
                if self.homogeneous_parity(x) == Some(Parity::Odd) && !x.is_zero() {
                    next.push(self.squaring(x).expect("odd"));
                }
            }
            current = SubspaceBasis::from_spanning(self.field, self.dim(), &next)
                .vectors()
                .to_vec();
        }
        SubspaceBasis::from_spanning(self.field, self.dim(), &current)
    }

    fn pure_spanning(&self, vectors: &[Vector]) -> Vec<Vector> {
        let mut parts = Vec::new();
        for v in vectors {
            for parity in [Parity::Even, Parity::Odd] {
                let part = self.parity_projection(v, parity);
                if !part.is_zero() {
                    parts.push(part);
                }
            }
        }
        SubspaceBasis::from_spanning(self.field, self.dim(), &parts)
            .vectors()
            .to_vec()
    }
}

/// Flags for [`HomLieSuper2::check_axioms`].
///
/// The default requires the multiplicative compatibilities
/// alpha([x,y]) = [alpha(x), alpha(y)] and alpha(s(x)) = s(alpha(x));
/// the weak variant drops them.
#[derive(Debug, Clone, Copy)]
pub struct AxiomOptions {
    pub require_multiplicative: bool,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions {
            require_multiplicative: true,
        }
    }
}

impl AxiomOptions {
    pub fn weak() -> Self {
        AxiomOptions {
            require_multiplicative: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    ParityConsistency,
    BracketSymmetry,
    HomJacobi,
    SquaringJacobi,
    TwistMultiplicativeBracket,
    TwistMultiplicativeSquaring,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::ParityConsistency => "parity-consistency",
            Axiom::BracketSymmetry => "bracket-symmetry",
            Axiom::HomJacobi => "hom-jacobi",
            Axiom::SquaringJacobi => "squaring-jacobi",
            Axiom::TwistMultiplicativeBracket => "twist-multiplicative-bracket",
            Axiom::TwistMultiplicativeSquaring => "twist-multiplicative-squaring",
        };
        write!(f, "{name}")
    }
}

/// A concrete counterexample: the arguments and the two sides that differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub description: String,
    pub args: Vec<Vector>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// `None` means the axiom holds; a witness re-evaluates to a genuine inequality.
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    fn push(&mut self, axiom: Axiom, witness: Option<Witness>) {
        self.checks.push(AxiomCheck { axiom, witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| c.witness.is_some())
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.failures().next()
    }
}

impl fmt::Display for AxiomReport {
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

/// Pass/fail outcome with an optional counterexample.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn pass() -> Self {
        CheckOutcome { witness: None }
    }

    pub fn fail(witness: Witness) -> Self {
        CheckOutcome {
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Verdict of [`check_morphism`], one slot per condition.
#[derive(Debug, Clone)]
pub struct MorphismReport {
    pub bracket: Option<Witness>,
    pub squaring: Option<Witness>,
    pub twist: Option<Witness>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.bracket.is_none() && self.squaring.is_none() && self.twist.is_none()
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.bracket
            .as_ref()
            .or(self.squaring.as_ref())
            .or(self.twist.as_ref())
    }
}

/// Checks phi: src -> dst against the three morphism conditions
/// phi([x,y]) = [phi(x), phi(y)], phi . s = s . phi, phi . alpha = alpha' . phi.
///
/// The squaring condition is quadratic, so it is tested on odd basis vectors
/// and pairwise sums; the others are (bi)linear and tested on basis tuples.
pub fn check_morphism(
    src: &HomLieSuper2,
    dst: &HomLieSuper2,
    phi: &Matrix,
) -> Result<MorphismReport> {
    if phi.rows() != dst.dim() || phi.cols() != src.dim() {
        return Err(Error::Shape(format!(
            "morphism matrix must be {}x{}, got {}x{}",
            dst.dim(),
            src.dim(),
            phi.rows(),
            phi.cols()
        )));
    }
    if phi.field() != src.field() || src.field() != dst.field() {
        return Err(Error::FieldMismatch(
            src.field().to_string(),
            dst.field().to_string(),
        ));
    }
    for r in 0..phi.rows() {
        for c in 0..phi.cols() {
            if !phi.get(r, c).is_zero() && dst.basis().parity(r) != src.basis().parity(c) {
                return Err(Error::Parity(format!(
                    "morphism matrix entry ({r}, {c}) is parity-mixing"
                )));
            }
        }
    }
    let mut bracket = None;
    'outer: for i in 0..src.dim() {
        for j in (i + 1)..src.dim() {
            let lhs = phi.apply(&src.bracket_of_basis(i, j));
            let rhs = dst
                .bracket(&phi.apply(&src.basis_vector(i)), &phi.apply(&src.basis_vector(j)))
                .expect("shape");
            if lhs != rhs {
                bracket = Some(Witness {
                    description: format!(
                        "phi([{}, {}]) != [phi({}), phi({})]",
                        src.basis().label(i),
                        src.basis().label(j),
                        src.basis().label(i),
                        src.basis().label(j)
                    ),
                    args: vec![src.basis_vector(i), src.basis_vector(j)],
                    lhs,
                    rhs,
                });
                break 'outer;
            }
        }
    }
    let mut squaring = None;
    for x in src.odd_quadratic_test_set() {
        let lhs = phi.apply(&src.squaring(&x).expect("odd"));
        let rhs = dst.squaring(&phi.apply(&x)).expect("phi is even");
        if lhs != rhs {
            squaring = Some(Witness {
                description: format!("phi(s(x)) != s(phi(x)) at x = {x}"),
                args: vec![x.clone()],
                lhs,
                rhs,
            });
            break;
        }
    }
    let mut twist = None;
    let lhs = phi.mul(src.twist());
    let rhs = dst.twist().mul(phi);
    if lhs != rhs {
        // witness on the first basis vector where the composites differ
        let j = (0..src.dim())
            .find(|&j| lhs.column(j) != rhs.column(j))
            .expect("matrices differ");
        twist = Some(Witness {
            description: format!(
                "phi(alpha({l})) != alpha'(phi({l}))",
                l = src.basis().label(j)
            ),
            args: vec![src.basis_vector(j)],
            lhs: lhs.column(j),
            rhs: rhs.column(j),
        });
    }
    Ok(MorphismReport {
        bracket,
        squaring,
        twist,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rng::SeededRng;

    fn oo(field: FieldSpec) -> HomLieSuper2 {
        catalog::build_oo(field).unwrap()
    }

    fn oo_alpha(eps: Scalar) -> HomLieSuper2 {
        catalog::build_oo_alpha(eps).unwrap()
    }

    #[test]
    fn oo_bracket_values() {
        let g = oo(FieldSpec::gf2());
        let b = g.basis();
        let (h, x2, y2, x1, y1) = (
            b.index_of("h").unwrap(),
            b.index_of("x2").unwrap(),
            b.index_of("y2").unwrap(),
            b.index_of("x1").unwrap(),
            b.index_of("y1").unwrap(),
        );
        assert_eq!(g.bracket_of_basis(x1, y1), g.basis_vector(h));
        assert_eq!(g.bracket_of_basis(x2, y2), g.basis_vector(h));
        assert_eq!(g.bracket_of_basis(h, x1), g.basis_vector(x1));
        assert_eq!(g.bracket_of_basis(h, y1), g.basis_vector(y1));
        assert_eq!(g.bracket_of_basis(x2, y1), g.basis_vector(x1));
        assert_eq!(g.bracket_of_basis(y2, x1), g.basis_vector(y1));
        assert_eq!(
            g.squaring(&g.basis_vector(x1)).unwrap(),
            g.basis_vector(x2)
        );
        assert_eq!(
            g.squaring(&g.basis_vector(y1)).unwrap(),
            g.basis_vector(y2)
        );
    }

    #[test]
    fn even_vectors_bracket_to_zero_with_themselves() {
        let f = FieldSpec::gf16();
        let g = oo_alpha(f.gen());
        let mut rng = SeededRng::new(2);
        for _ in 0..10 {
            let mut x = Vector::zero(f, g.dim());
            for i in g.basis().even_indices() {
                x.set(i, rng.scalar(f));
            }
            assert!(g.bracket(&x, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn oo_alpha_twisted_brackets_match_closed_form() {
        let f = FieldSpec::gf16();
        let eps = f.gen();
        let g = oo_alpha(eps);
        let b = g.basis();
        let (h, x2, y2, x1, y1) = (
            b.index_of("h").unwrap(),
            b.index_of("x2").unwrap(),
            b.index_of("y2").unwrap(),
            b.index_of("x1").unwrap(),
            b.index_of("y1").unwrap(),
        );
        // [y2, x1] = eps x1 + y1 and [h, y1] = eps x1 + y1
        let mut expected = g.basis_vector(y1);
        expected.add_scaled(eps, &g.basis_vector(x1));
        assert_eq!(g.bracket_of_basis(y2, x1), expected);
        assert_eq!(g.bracket_of_basis(h, y1), expected);
        // s(y1) = eps h + eps^2 x2 + y2
        let mut sy = g.basis_vector(y2);
        sy.add_scaled(eps, &g.basis_vector(h));
        sy.add_scaled(eps.square(), &g.basis_vector(x2));
        assert_eq!(g.squaring(&g.basis_vector(y1)).unwrap(), sy);
        // s(0) = 0
        assert!(g.squaring(&Vector::zero(f, 5)).unwrap().is_zero());
    }

    #[test]
    fn squaring_polarization_on_oo() {
        let g = oo(FieldSpec::gf2());
        let b = g.basis();
        let x1 = b.index_of("x1").unwrap();
        let y1 = b.index_of("y1").unwrap();
        // s(x1 + y1) = x2 + y2 + h
        let s = g
            .squaring(&g.basis_vector(x1).plus(&g.basis_vector(y1)))
            .unwrap();
        let mut expected = g.basis_vector(b.index_of("x2").unwrap());
        expected.add_assign(&g.basis_vector(b.index_of("y2").unwrap()));
        expected.add_assign(&g.basis_vector(b.index_of("h").unwrap()));
        assert_eq!(s, expected);
    }

    #[test]
    fn squaring_polarization_identity_random() {
        let f = FieldSpec::gf16();
        let g = oo_alpha(f.gen());
        let mut rng = SeededRng::new(5);
        let odd = g.basis().odd_indices();
        for _ in 0..25 {
            let mut u = Vector::zero(f, g.dim());
            let mut v = Vector::zero(f, g.dim());
            for &i in &odd {
                u.set(i, rng.scalar(f));
                v.set(i, rng.scalar(f));
            }
            let (l, m) = (rng.scalar(f), rng.scalar(f));
            let lu_mv = u.scaled(l).plus(&v.scaled(m));
            let mut expected = g.squaring(&u).unwrap().scaled(l.square());
            expected.add_assign(&g.squaring(&v).unwrap().scaled(m.square()));
            expected.add_scaled(l * m, &g.bracket(&u, &v).unwrap());
            assert_eq!(g.squaring(&lu_mv).unwrap(), expected);
        }
    }

    #[test]
    fn squaring_rejects_even_components() {
        let g = oo(FieldSpec::gf2());
        let h = g.basis().index_of("h").unwrap();
        assert!(matches!(
            g.squaring(&g.basis_vector(h)),
            Err(Error::Parity(_))
        ));
    }

    #[test]
    fn oo_passes_axioms() {
        let report = oo(FieldSpec::gf2()).check_axioms(AxiomOptions::default());
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn abelian_passes_axioms() {
        let g = HomLieSuper2::abelian(FieldSpec::gf4(), SuperBasis::standard(2, 2));
        assert!(g.check_axioms(AxiomOptions::default()).passed());
    }

    #[test]
    fn oo_alpha_passes_for_all_eps_in_gf16() {
        let f = FieldSpec::gf16();
        for eps in f.elements() {
            let report = oo_alpha(eps).check_axioms(AxiomOptions::default());
            assert!(report.passed(), "eps = {eps}: {report}");
        }
    }

    #[test]
    fn mutated_constant_fails_with_reevaluating_witness() {
        let f = FieldSpec::gf16();
        let mut g = oo_alpha(f.gen());
        let b = g.basis().clone();
        let x2 = b.index_of("x2").unwrap();
        let y1 = b.index_of("y1").unwrap();
        let h = b.index_of("h").unwrap();
        // flip [x2, y1]'s h-component (parity-consistent mutation: odd target)
        // h is even and x2+y1 is odd, so use the y1 target instead
        let y1t = b.index_of("y1").unwrap();
        let _ = h;
        let old = g.bracket_const(x2, y1, y1t);
        g.set_bracket_const(x2, y1, y1t, old + f.one());
        g.set_bracket_const(y1, x2, y1t, old + f.one());
        let report = g.check_axioms(AxiomOptions::default());
        assert!(!report.passed());
        let failure = report.first_failure().unwrap();
        let w = failure.witness.as_ref().unwrap();
        assert_ne!(w.lhs, w.rhs, "witness must re-evaluate to an inequality");
    }

    #[test]
    fn identity_is_a_self_morphism_of_oo() {
        let g = oo(FieldSpec::gf2());
        let id = Matrix::identity(g.field(), g.dim());
        assert!(check_morphism(&g, &g, &id).unwrap().passed());
    }

    #[test]
    fn example_sl2_family_gives_self_morphisms_of_oo() {
        // alpha(x1) = d1 x1 + d2 y1, alpha(y1) = e1 x1 + e2 y1 with
        // d1 e2 + d2 e1 = 1, extended by
        // alpha(x2) = d1 d2 h + d1^2 x2 + d2^2 y2,
        // alpha(y2) = e1 e2 h + e1^2 x2 + e2^2 y2, alpha(h) = h.
        let f = FieldSpec::gf4();
        let g = oo(f);
        let mut rng = SeededRng::new(8);
        let mut tested = 0;
        while tested < 12 {
            let (d1, d2, e1) = (rng.scalar(f), rng.scalar(f), rng.scalar(f));
            // solve d1 e2 = 1 + d2 e1 when d1 is invertible
            let Ok(inv) = d1.inv() else { continue };
            let e2 = (f.one() + d2 * e1) * inv;
            let phi = catalog::oo_morphism(&g, d1, d2, e1, e2).unwrap();
            let report = check_morphism(&g, &g, &phi).unwrap();
            assert!(report.passed(), "d1={d1} d2={d2} e1={e1} e2={e2}");
            tested += 1;
        }
    }

    #[test]
    fn random_even_map_is_usually_not_a_morphism() {
        let f = FieldSpec::gf4();
        let g = oo(f);
        let mut rng = SeededRng::new(21);
        let mut failures = 0;
        for _ in 0..20 {
            let mut phi = Matrix::zero(f, 5, 5);
            for i in 0..5 {
                for j in 0..5 {
                    if g.basis().parity(i) == g.basis().parity(j) {
                        phi.set(i, j, rng.scalar(f));
                    }
                }
            }
            if !check_morphism(&g, &g, &phi).unwrap().passed() {
                failures += 1;
            }
        }
        assert!(failures >= 18, "only {failures}/20 random maps failed");
    }

    #[test]
    fn twist_by_identity_is_identity() {
        let g = oo(FieldSpec::gf2());
        let id = Matrix::identity(g.field(), g.dim());
        assert_eq!(g.twist_by_morphism(&id).unwrap(), g);
    }

    #[test]
    fn twisting_oo_reproduces_oo_alpha() {
        let f = FieldSpec::gf16();
        for eps in f.elements() {
            let g = oo(f);
            let phi = catalog::oo_morphism(&g, f.one(), f.zero(), eps, f.one()).unwrap();
            let twisted = g.twist_by_morphism(&phi).unwrap();
            assert_eq!(twisted, oo_alpha(eps), "eps = {eps}");
            assert!(twisted.check_axioms(AxiomOptions::default()).passed());
        }
    }

    #[test]
    fn twisting_twice_equals_twisting_by_the_square() {
        let f = FieldSpec::gf16();
        let eps = f.gen();
        let g = oo(f);
        let phi = catalog::oo_morphism(&g, f.one(), f.zero(), eps, f.one()).unwrap();
        let once = g.twist_by_morphism(&phi).unwrap();
        let twice = once.twist_by_morphism(&phi).unwrap();
        let square = g.twist_by_morphism(&phi.mul(&phi)).unwrap();
        assert_eq!(twice, square);
    }

    #[test]
    fn twist_by_non_morphism_is_an_error() {
        let f = FieldSpec::gf4();
        let g = oo(f);
        let mut phi = Matrix::identity(f, 5);
        phi.set(0, 1, f.one()); // h <- x2 leak breaks the bracket condition
        assert!(matches!(
            g.twist_by_morphism(&phi),
            Err(Error::NotAMorphism(_))
        ));
    }

    #[test]
    fn ideal_checks_on_oo() {
        let g = oo(FieldSpec::gf2());
        let full = SubspaceBasis::full(g.field(), g.dim());
        assert!(g.check_ideal(&full).unwrap().passed());
        let zero = SubspaceBasis::empty(g.field(), g.dim());
        assert!(g.check_ideal(&zero).unwrap().passed());
        // span{x1} is not an ideal: s(x1) = x2 escapes although [h,x1] = x1 stays
        let x1 = g.basis().index_of("x1").unwrap();
        let span_x1 =
            SubspaceBasis::from_spanning(g.field(), g.dim(), &[g.basis_vector(x1)]);
        let outcome = g.check_ideal(&span_x1).unwrap();
        assert!(!outcome.passed());
    }

    #[test]
    fn non_homogeneous_subspace_is_a_parity_error() {
        let g = oo(FieldSpec::gf2());
        let h = g.basis().index_of("h").unwrap();
        let x1 = g.basis().index_of("x1").unwrap();
        let mixed = g.basis_vector(h).plus(&g.basis_vector(x1));
        let sub = SubspaceBasis::from_spanning(g.field(), g.dim(), &[mixed]);
        assert!(matches!(g.check_ideal(&sub), Err(Error::Parity(_))));
    }

    #[test]
    fn quotient_by_zero_and_by_everything() {
        let f = FieldSpec::gf4();
        let g = oo_alpha(f.gen());
        let q0 = g.quotient(&SubspaceBasis::empty(f, g.dim())).unwrap();
        assert_eq!(q0, g);
        let qfull = g.quotient(&SubspaceBasis::full(f, g.dim())).unwrap();
        assert_eq!(qfull.dim(), 0);
    }

    /// Quotient structure constants cross-checked against coset enumeration
    /// over GF(2): the bracket of two coset representatives, evaluated on
    /// every pair of coset members, always lands in one coset, and that coset
    /// is the one the quotient reports.
    #[test]
    fn quotient_matches_coset_enumeration_oracle() {
        let f = FieldSpec::gf2();
        // 3-dim Heisenberg-like even algebra: [a, b] = c, c central; ideal {c}
        let basis = SuperBasis::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![Parity::Even; 3],
        )
        .unwrap();
        let one = f.one();
        let g = HomLieSuper2::from_sparse(
            f,
            basis,
            &[(0, 1, 2, one)],
            &[],
            Matrix::identity(f, 3),
        )
        .unwrap();
        assert!(g.check_axioms(AxiomOptions::default()).passed());
        let ideal = SubspaceBasis::from_spanning(f, 3, &[g.basis_vector(2)]);
        assert!(g.check_ideal(&ideal).unwrap().passed());
        let q = g.quotient(&ideal).unwrap();
        assert_eq!(q.dim(), 2);
        // coset oracle: members of the coset of v are v and v + c
        let coset = |v: &Vector| vec![v.clone(), v.plus(&g.basis_vector(2))];
        for i in 0..2 {
            for j in 0..2 {
                let quotient_value = q.bracket_of_basis(i, j);
                // enumerate all bracket values of coset members
                let mut reduced_values = Vec::new();
                for x in coset(&g.basis_vector(i)) {
                    for y in coset(&g.basis_vector(j)) {
                        let b = g.bracket(&x, &y).unwrap();
                        let r = ideal.reduce(&b);
                        reduced_values.push(r);
                    }
                }
                for r in &reduced_values {
                    assert_eq!(r, &reduced_values[0], "bracket not constant on cosets");
                }
                // compare against the quotient's constants (first two coords)
                for k in 0..2 {
                    assert_eq!(quotient_value.get(k), reduced_values[0].get(k));
                }
            }
        }
    }

    #[test]
    fn derived_subalgebra_of_oo() {
        let g = oo(FieldSpec::gf2());
        assert_eq!(g.derived_subalgebra(0).dim(), 5);
        // oo equals its own derived algebra: s(x1) = x2, s(y1) = y2, [x1,y1] = h
        assert_eq!(g.derived_subalgebra(1).dim(), 5);
        assert_eq!(g.derived_subalgebra(3).dim(), 5);
        let abelian = HomLieSuper2::abelian(FieldSpec::gf2(), SuperBasis::standard(2, 1));
        assert_eq!(abelian.derived_subalgebra(1).dim(), 0);
    }

    #[test]
    fn purely_even_restriction_satisfies_hom_lie_axioms() {
        // forgetting the odd part of oo_alpha leaves a Hom-Lie algebra
        let f = FieldSpec::gf4();
        let g = oo_alpha(f.gen());
        let even: Vec<Vector> = g
            .basis()
            .even_indices()
            .iter()
            .map(|&i| g.basis_vector(i))
            .collect();
        let sub = SubspaceBasis::from_spanning(f, g.dim(), &even);
        // the even part is a subalgebra; restrict structure constants
        let idx = g.basis().even_indices();
        let labels = idx.iter().map(|&i| g.basis().label(i).to_string()).collect();
        let basis = SuperBasis::new(labels, vec![Parity::Even; idx.len()]).unwrap();
        let mut entries = Vec::new();
        for (si, &i) in idx.iter().enumerate() {
            for (sj, &j) in idx.iter().enumerate() {
                if si < sj {
                    let b = g.bracket_of_basis(i, j);
                    assert!(sub.contains(&b));
                    for (sk, &k) in idx.iter().enumerate() {
                        let c = b.get(k);
                        if !c.is_zero() {
                            entries.push((si, sj, sk, c));
                        }
                    }
                }
            }
        }
        let mut twist = Matrix::zero(f, idx.len(), idx.len());
        for (sj, &j) in idx.iter().enumerate() {
            let a = g.alpha(&g.basis_vector(j));
            for (sk, &k) in idx.iter().enumerate() {
                twist.set(sk, sj, a.get(k));
            }
        }
        let even_alg =
            HomLieSuper2::from_sparse(f, basis, &entries, &[], twist).unwrap();
        assert!(even_alg.check_axioms(AxiomOptions::default()).passed());
    }
}
