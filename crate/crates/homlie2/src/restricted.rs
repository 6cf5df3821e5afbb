//! 2-structures on Hom-Lie algebras in characteristic 2 and queerification.
//!
//! A 2-structure on a purely even Hom-Lie algebra is a square map
//! x -> x^[2] with
//!
//! - (R1) [x^[2], alpha(y)] = [alpha(x), [x, y]],
//! - (R2) (lx)^[2] = l^2 x^[2],
//! - (R3) (x+y)^[2] = x^[2] + y^[2] + [x, y].
//!
//! Only the values on basis vectors are stored; evaluation on general
//! vectors uses the expansion forced by (R2)/(R3). The checker additionally
//! verifies alpha(x^[2]) = (alpha(x))^[2]: the queerification turns the
//! 2-structure into the squaring of a superalgebra, and that compatibility
//! is exactly its twist-multiplicativity axiom (it holds automatically for
//! 2-structures obtained by twisting, and (R1)-(R3) alone do not imply it).
//!
//! Queerification doubles the space, h = g + Pi(g), with
//! [Pi(x), y] = Pi([x, y]), [Pi(x), Pi(y)] = [x, y] and
//! s(Pi(x)) = x^[2]; the twist extends diagonally.

use crate::algebra::{AxiomOptions, CheckOutcome, HomLieSuper2, Parity, SuperBasis, Witness};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use std::fmt;

/// A purely even Hom-Lie algebra with a 2-structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedHomLie2 {
    algebra: HomLieSuper2,
    /// two_map[i] = e_i^[2]
    two_map: Vec<Vector>,
}

impl RestrictedHomLie2 {
    pub fn new(algebra: HomLieSuper2, two_map: Vec<Vector>) -> Result<Self> {
        if algebra.basis().odd_dim() != 0 {
            return Err(Error::Parity(
                "a 2-structure lives on a purely even algebra".to_string(),
            ));
        }
        if two_map.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "expected {} two-map values, got {}",
                algebra.dim(),
                two_map.len()
            )));
        }
        for v in &two_map {
            if v.len() != algebra.dim() {
                return Err(Error::Shape("two-map value has the wrong length".to_string()));
            }
        }
        Ok(RestrictedHomLie2 { algebra, two_map })
    }

    pub fn algebra(&self) -> &HomLieSuper2 {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn two_map_values(&self) -> &[Vector] {
        &self.two_map
    }

    pub fn set_two_map_value(&mut self, i: usize, v: Vector) {
        self.two_map[i] = v;
    }

    /// x^[2] on a general vector, by the expansion forced by (R2)/(R3):
    /// (sum l_i e_i)^[2] = sum l_i^2 e_i^[2] + sum_{i<j} l_i l_j [e_i, e_j].
    pub fn square(&self, x: &Vector) -> Result<Vector> {
        if x.len() != self.dim() {
            return Err(Error::Shape("square argument has the wrong length".to_string()));
        }
        let mut out = Vector::zero(self.algebra.field(), self.dim());
        let support: Vec<_> = x.support().collect();
        for (i, a) in &support {
            out.add_scaled(a.square(), &self.two_map[*i]);
        }
        for (pos, (i, a)) in support.iter().enumerate() {
            for (j, b) in support.iter().skip(pos + 1) {
                out.add_scaled(*a * *b, &self.algebra.bracket_of_basis(*i, *j));
            }
        }
        Ok(out)
    }

    /// The quadratic test set: basis vectors and pairwise sums.
    fn quadratic_test_set(&self) -> Vec<Vector> {
        let mut set = Vec::new();
        for i in 0..self.dim() {
            set.push(self.algebra.basis_vector(i));
            for j in (i + 1)..self.dim() {
                set.push(self.algebra.basis_vector(i).plus(&self.algebra.basis_vector(j)));
            }
        }
        set
    }

    pub fn check(&self) -> TwoStructureReport {
        let mut report = TwoStructureReport { checks: Vec::new() };
        report.push(TwoStructureAxiom::SquareJacobi, self.check_r1());
        report.push(TwoStructureAxiom::TwistCompatibility, self.check_twist_compat());
        report
    }

    /// (R1) on the quadratic test set in x, basis vectors in y.
    fn check_r1(&self) -> Option<Witness> {
        for x in self.quadratic_test_set() {
            let x2 = self.square(&x).expect("shape");
            let ax = self.algebra.alpha(&x);
            for j in 0..self.dim() {
                let y = self.algebra.basis_vector(j);
                let lhs = self.algebra.bracket(&x2, &self.algebra.alpha(&y)).expect("shape");
                let xy = self.algebra.bracket(&x, &y).expect("shape");
                let rhs = self.algebra.bracket(&ax, &xy).expect("shape");
                if lhs != rhs {
                    return Some(Witness {
                        description: format!(
                            "[x^[2], alpha(y)] != [alpha(x), [x, y]] at x = {x}, y = {}",
                            self.algebra.basis().label(j)
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

    /// alpha(x^[2]) = (alpha(x))^[2] on the quadratic test set.
    fn check_twist_compat(&self) -> Option<Witness> {
        for x in self.quadratic_test_set() {
            let lhs = self.algebra.alpha(&self.square(&x).expect("shape"));
            let rhs = self.square(&self.algebra.alpha(&x)).expect("shape");
            if lhs != rhs {
                return Some(Witness {
                    description: format!("alpha(x^[2]) != (alpha(x))^[2] at x = {x}"),
                    args: vec![x.clone()],
                    lhs,
                    rhs,
                });
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoStructureAxiom {
    /// (R1), the square-bracket compatibility.
    SquareJacobi,
    /// alpha commutes with the 2-map.
    TwistCompatibility,
}

impl fmt::Display for TwoStructureAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoStructureAxiom::SquareJacobi => write!(f, "square-jacobi"),
            TwoStructureAxiom::TwistCompatibility => write!(f, "twist-compatibility"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TwoStructureCheck {
    pub axiom: TwoStructureAxiom,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone)]
pub struct TwoStructureReport {
    pub checks: Vec<TwoStructureCheck>,
}

impl TwoStructureReport {
    fn push(&mut self, axiom: TwoStructureAxiom, witness: Option<Witness>) {
        self.checks.push(TwoStructureCheck { axiom, witness });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.witness.is_none())
    }

    pub fn first_failure(&self) -> Option<&TwoStructureCheck> {
        self.checks.iter().find(|c| c.witness.is_some())
    }
}

impl fmt::Display for TwoStructureReport {
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

/// Twists an ordinary restricted Lie algebra (identity twist) along a
/// bracket morphism alpha that also commutes with the 2-map: the result has
/// bracket alpha([.,.]), twist alpha, and 2-map x -> alpha(x^[2]).
pub fn twist_2_structure(r: &RestrictedHomLie2, alpha: &Matrix) -> Result<RestrictedHomLie2> {
    let g = r.algebra();
    if g.twist() != &Matrix::identity(g.field(), g.dim()) {
        return Err(Error::Unsupported(
            "twist_2_structure starts from an identity-twist algebra".to_string(),
        ));
    }
    // bracket morphism on basis pairs
    for i in 0..g.dim() {
        for j in (i + 1)..g.dim() {
            let lhs = alpha.apply(&g.bracket_of_basis(i, j));
            let rhs = g
                .bracket(&alpha.apply(&g.basis_vector(i)), &alpha.apply(&g.basis_vector(j)))?;
            if lhs != rhs {
                return Err(Error::NotAMorphism(format!(
                    "alpha([{}, {}]) != [alpha({}), alpha({})]",
                    g.basis().label(i),
                    g.basis().label(j),
                    g.basis().label(i),
                    g.basis().label(j)
                )));
            }
        }
    }
    // compatibility with the 2-map on basis vectors
    for i in 0..g.dim() {
        let lhs = alpha.apply(&r.square(&g.basis_vector(i))?);
        let rhs = r.square(&alpha.apply(&g.basis_vector(i)))?;
        if lhs != rhs {
            return Err(Error::NotAMorphism(format!(
                "alpha({l}^[2]) != (alpha({l}))^[2]",
                l = g.basis().label(i)
            )));
        }
    }
    let twisted = g.twist_by_morphism(alpha)?;
    let two_map = (0..g.dim())
        .map(|i| alpha.apply(&r.two_map[i]))
        .collect();
    RestrictedHomLie2::new(twisted, two_map)
}

/// Queerification: on h = g + Pi(g) (even copy first, Pi-copy odd, labels
/// prefixed "Pi_"), the bracket keeps [x, y], sets [Pi(x), y] = Pi([x, y])
/// and [Pi(x), Pi(y)] = [x, y], and the squaring is s(Pi(x)) = x^[2]. The
/// twist extends diagonally.
pub fn queerify(r: &RestrictedHomLie2) -> Result<HomLieSuper2> {
    let check = r.check();
    if let Some(c) = check.first_failure() {
        return Err(Error::Invalid2Structure(
            c.witness.as_ref().expect("failure").description.clone(),
        ));
    }
    let g = r.algebra();
    let field = g.field();
    let n = g.dim();
    let d = 2 * n;
    let mut labels: Vec<String> = g.basis().labels().to_vec();
    let mut parities = vec![Parity::Even; n];
    for i in 0..n {
        labels.push(format!("Pi_{}", g.basis().label(i)));
        parities.push(Parity::Odd);
    }
    let basis = SuperBasis::new(labels, parities)?;
    let mut bracket = vec![field.zero(); d * d * d];
    for i in 0..n {
        for j in 0..n {
            let b = g.bracket_of_basis(i, j);
            for k in 0..n {
                let c = b.get(k);
                // [e_i, e_j] = [i, j]_g in the even copy
                bracket[i * d * d + j * d + k] = c;
                // [Pi(e_i), e_j] = Pi([e_i, e_j])
                bracket[(n + i) * d * d + j * d + (n + k)] = c;
                bracket[j * d * d + (n + i) * d + (n + k)] = c;
                // [Pi(e_i), Pi(e_j)] = [e_i, e_j] in the even copy
                bracket[(n + i) * d * d + (n + j) * d + k] = c;
            }
        }
    }
    let mut squaring = Vec::with_capacity(n);
    for i in 0..n {
        let mut s = Vector::zero(field, d);
        for k in 0..n {
            s.set(k, r.two_map[i].get(k));
        }
        squaring.push(s);
    }
    let mut twist = Matrix::zero(field, d, d);
    for i in 0..n {
        for j in 0..n {
            let c = g.twist().get(i, j);
            twist.set(i, j, c);
            twist.set(n + i, n + j, c);
        }
    }
    HomLieSuper2::new(field, basis, bracket, squaring, twist)
}

/// Compares queerify-then-twist against twist-then-queerify, bit-exactly.
/// For an ordinary restricted Lie algebra g with a compatible morphism
/// alpha, both must produce the same superalgebra.
pub fn check_queerify_twist_commute(r: &RestrictedHomLie2, alpha: &Matrix) -> Result<CheckOutcome> {
    let g = r.algebra();
    let n = g.dim();
    // path 1: queerify, then twist along alpha extended diagonally
    let h = queerify(r)?;
    let mut alpha_tilde = Matrix::zero(g.field(), 2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let c = alpha.get(i, j);
            alpha_tilde.set(i, j, c);
            alpha_tilde.set(n + i, n + j, c);
        }
    }
    let path1 = h.twist_by_morphism(&alpha_tilde)?;
    // path 2: twist the restricted algebra, then queerify
    let path2 = queerify(&twist_2_structure(r, alpha)?)?;
    if path1 == path2 {
        Ok(CheckOutcome::pass())
    } else {
        Ok(CheckOutcome::fail(Witness {
            description: "queerification and twisting do not commute on this input".to_string(),
            args: vec![],
            lhs: Vector::zero(g.field(), 0),
            rhs: Vector::zero(g.field(), 0),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2k::FieldSpec;
    use crate::rng::SeededRng;

    /// The 2-dim solvable restricted algebra [e1, e2] = e2 with
    /// e1^[2] = e1, e2^[2] = 0 and identity twist.
    pub(crate) fn solvable2(field: FieldSpec) -> RestrictedHomLie2 {
        let basis = SuperBasis::new(
            vec!["e1".into(), "e2".into()],
            vec![Parity::Even, Parity::Even],
        )
        .unwrap();
        let one = field.one();
        let g = HomLieSuper2::from_sparse(
            field,
            basis,
            &[(0, 1, 1, one)],
            &[],
            Matrix::identity(field, 2),
        )
        .unwrap();
        let mut e1sq = Vector::zero(field, 2);
        e1sq.set(0, one);
        RestrictedHomLie2::new(g, vec![e1sq, Vector::zero(field, 2)]).unwrap()
    }

    #[test]
    fn abelian_zero_two_map_passes() {
        let f = FieldSpec::gf4();
        let g = HomLieSuper2::abelian(f, SuperBasis::standard(3, 0));
        let r = RestrictedHomLie2::new(g, vec![Vector::zero(f, 3); 3]).unwrap();
        assert!(r.check().passed());
    }

    #[test]
    fn one_dim_idempotent_square_passes() {
        let f = FieldSpec::gf2();
        let g = HomLieSuper2::abelian(f, SuperBasis::standard(1, 0));
        let mut e_sq = Vector::zero(f, 1);
        e_sq.set(0, f.one());
        let r = RestrictedHomLie2::new(g, vec![e_sq]).unwrap();
        assert!(r.check().passed());
        // queerification: (1|1) with s(Pi(e)) = e and all brackets zero
        let h = queerify(&r).unwrap();
        assert_eq!(h.basis().even_dim(), 1);
        assert_eq!(h.basis().odd_dim(), 1);
        assert!(h.check_axioms(AxiomOptions::default()).passed());
        let pi_e = h.basis().index_of("Pi_e0").unwrap();
        let mut expected = Vector::zero(f, 2);
        expected.set(0, f.one());
        assert_eq!(h.squaring(&h.basis_vector(pi_e)).unwrap(), expected);
        assert!(h.bracket_of_basis(0, pi_e).is_zero());
    }

    #[test]
    fn solvable2_is_restricted_and_two_map_is_forced() {
        let f = FieldSpec::gf4();
        let r = solvable2(f);
        assert!(r.check().passed(), "{}", r.check());
        // (R1) pins e1^[2] = e1 + b e2 and e2^[2] = 0; mutating e2^[2]
        // must fail with a witness
        let mut bad = r.clone();
        let mut v = Vector::zero(f, 2);
        v.set(0, f.one());
        bad.set_two_map_value(1, v);
        let report = bad.check();
        assert!(!report.passed());
        let w = report.first_failure().unwrap().witness.as_ref().unwrap();
        assert_ne!(w.lhs, w.rhs);
    }

    #[test]
    fn two_map_polarization_identity() {
        let f = FieldSpec::gf16();
        let basis = SuperBasis::new(
            vec!["e1".into(), "e2".into()],
            vec![Parity::Even, Parity::Even],
        )
        .unwrap();
        let g = HomLieSuper2::from_sparse(
            f,
            basis,
            &[(0, 1, 1, f.one())],
            &[],
            Matrix::identity(f, 2),
        )
        .unwrap();
        let mut e1sq = Vector::zero(f, 2);
        e1sq.set(0, f.one());
        let r = RestrictedHomLie2::new(g, vec![e1sq, Vector::zero(f, 2)]).unwrap();
        let mut rng = SeededRng::new(61);
        for _ in 0..25 {
            let x = rng.vector(f, 2);
            let y = rng.vector(f, 2);
            let lhs = r
                .square(&x.plus(&y))
                .unwrap()
                .plus(&r.square(&x).unwrap())
                .plus(&r.square(&y).unwrap());
            let rhs = r.algebra().bracket(&x, &y).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn twist_by_identity_is_unchanged() {
        let f = FieldSpec::gf4();
        let r = solvable2(f);
        let id = Matrix::identity(f, 2);
        assert_eq!(twist_2_structure(&r, &id).unwrap(), r);
    }

    #[test]
    fn twist_solvable2_by_diagonal_morphism() {
        let f = FieldSpec::gf4();
        let r = solvable2(f);
        for l in f.elements() {
            // alpha = diag(1, l) is a bracket morphism for any l and
            // commutes with the 2-map (e1^[2] = e1 has no e2 component)
            let mut alpha = Matrix::identity(f, 2);
            alpha.set(1, 1, l);
            let twisted = twist_2_structure(&r, &alpha).unwrap();
            assert!(twisted.check().passed(), "l = {l}");
            // queerification of the twisted structure passes the axioms
            let h = queerify(&twisted).unwrap();
            assert!(h.check_axioms(AxiomOptions::default()).passed(), "l = {l}");
        }
    }

    #[test]
    fn twist_rejects_non_morphisms() {
        let f = FieldSpec::gf4();
        let r = solvable2(f);
        // swapping e1, e2 is not a bracket morphism of [e1,e2] = e2
        let mut swap = Matrix::zero(f, 2, 2);
        swap.set(0, 1, f.one());
        swap.set(1, 0, f.one());
        assert!(matches!(
            twist_2_structure(&r, &swap),
            Err(Error::NotAMorphism(_))
        ));
    }

    #[test]
    fn queerify_of_mutated_two_map_is_rejected() {
        let f = FieldSpec::gf4();
        let mut r = solvable2(f);
        let mut v = Vector::zero(f, 2);
        v.set(0, f.gen());
        r.set_two_map_value(1, v);
        assert!(matches!(queerify(&r), Err(Error::Invalid2Structure(_))));
    }

    #[test]
    fn queerify_abelian_gives_abelian_superalgebra() {
        let f = FieldSpec::gf2();
        let g = HomLieSuper2::abelian(f, SuperBasis::standard(2, 0));
        let r = RestrictedHomLie2::new(g, vec![Vector::zero(f, 2); 2]).unwrap();
        let h = queerify(&r).unwrap();
        assert_eq!((h.basis().even_dim(), h.basis().odd_dim()), (2, 2));
        assert!(h.check_axioms(AxiomOptions::default()).passed());
        assert!(h.bracket_table().iter().all(|c| c.is_zero()));
        assert!(h.squaring_values().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn queerify_and_twist_commute_on_solvable2() {
        let f = FieldSpec::gf4();
        let r = solvable2(f);
        for l in f.elements() {
            let mut alpha = Matrix::identity(f, 2);
            alpha.set(1, 1, l);
            assert!(
                check_queerify_twist_commute(&r, &alpha).unwrap().passed(),
                "l = {l}"
            );
        }
        // identity morphism: both sides equal the plain queerification
        let id = Matrix::identity(f, 2);
        assert!(check_queerify_twist_commute(&r, &id).unwrap().passed());
    }

    #[test]
    fn queerify_twist_commute_on_random_abelian_inputs() {
        // abelian algebra, additive 2-map given by a matrix of Frobenius
        // images; any invertible-or-not even alpha commuting with the 2-map
        // in the basis sense works
        let f = FieldSpec::gf4();
        let mut rng = SeededRng::new(67);
        let mut tested = 0;
        while tested < 10 {
            let g = HomLieSuper2::abelian(f, SuperBasis::standard(2, 0));
            // two_map: e_i -> random vector; (R1) is vacuous (zero bracket)
            let two_map = vec![rng.vector(f, 2), rng.vector(f, 2)];
            let r = match RestrictedHomLie2::new(g, two_map) {
                Ok(r) if r.check().passed() => r,
                _ => continue,
            };
            // alpha = scalar multiple of the identity commutes with
            // everything and respects any additive 2-map up to Frobenius:
            // alpha(x^[2]) = c x^[2] vs (cx)^[2] = c^2 x^[2] forces c^2 = c
            for c in [f.zero(), f.one()] {
                let mut alpha = Matrix::zero(f, 2, 2);
                alpha.set(0, 0, c);
                alpha.set(1, 1, c);
                if twist_2_structure(&r, &alpha).is_ok() {
                    assert!(check_queerify_twist_commute(&r, &alpha).unwrap().passed());
                    tested += 1;
                }
            }
        }
    }
}
