use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{p_multiply, power_sum_monomial_coefficient, BasisId, GraphFamily, SymFun};
use crate::algebra::{partitions_of, Matrix, Partition, Rational, UniPoly};
use crate::csf::DeletionContraction;
use crate::{Error, Result};

/// Exact change-of-basis data for one degree.
///
/// Column `j` of `to_power_sum` is the power-sum expansion of the `j`-th basis
/// element, with columns and rows indexed by `partitions`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTransition {
    pub partitions: Vec<Partition>,
    pub to_power_sum: Matrix,
    pub from_power_sum: Matrix,
}

#[derive(Clone, Debug)]
struct Registered {
    family: Option<GraphFamily>,
    /// indexed by degree, starting at 0
    degrees: Vec<DegreeTransition>,
}

/// Per-degree transition matrices between the power-sum basis and every
/// registered basis.
///
/// Registration takes `&mut self` and is idempotent per family and degree;
/// lookups take `&self`.
#[derive(Clone, Debug, Default)]
pub struct TransitionCache {
    bases: BTreeMap<BasisId, Registered>,
}

impl TransitionCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers the chromatic basis of `family` through `max_degree`, or
    /// extends an existing registration.
    ///
    /// Fails if the family is invalid, if a different family is already
    /// registered under the same name, or if a transition matrix is singular.
    pub fn register(&mut self, family: &GraphFamily, max_degree: usize) -> Result<BasisId> {
        let id = BasisId::Chromatic(family.name().to_string());
        if let Some(existing) = self.bases.get(&id) {
            if existing.family.as_ref() != Some(family) {
                return Err(Error::InvalidFamily {
                    family: family.name().to_string(),
                    reason: "a different family is registered under this name".to_string(),
                });
            }
            if existing.degrees.len() > max_degree {
                return Ok(id);
            }
        }
        family.validate(max_degree)?;

        // power-sum expansions of the generators X_{G_n}
        let mut engine = DeletionContraction::default();
        let generators: Vec<SymFun> = (1..=max_degree)
            .map(|n| family.member(n).map(|g| engine.expand(&g)))
            .collect::<Result<_>>()?;

        let mut degrees = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            let partitions = partitions_of(d);
            let columns: Vec<Vec<Rational>> = partitions
                .iter()
                .map(|lambda| {
                    let mut product = SymFun::one(BasisId::PowerSum);
                    for &part in lambda.parts() {
                        product = p_multiply(&product, &generators[part - 1]).expect("power-sum operands");
                    }
                    product.degree_vector(d)
                })
                .collect();
            let size = partitions.len();
            let to_power_sum = Matrix::from_fn(size, size, |i, j| columns[j][i].clone());
            let from_power_sum = to_power_sum.inverse().ok_or(Error::Singular(d))?;
            degrees.push(DegreeTransition { partitions, to_power_sum, from_power_sum });
        }
        self.bases.insert(id.clone(), Registered { family: Some(family.clone()), degrees });
        Ok(id)
    }

    /// Registers the monomial basis through `max_degree`.
    pub fn register_monomial(&mut self, max_degree: usize) -> BasisId {
        let id = BasisId::Monomial;
        if self.depth(&id).is_some_and(|depth| depth >= max_degree) {
            return id;
        }
        let degrees = (0..=max_degree)
            .map(|d| {
                let partitions = partitions_of(d);
                let size = partitions.len();
                // row μ, column λ: [m_μ] p_λ
                let p_to_m = Matrix::from_fn(size, size, |i, j| {
                    Rational::from_integer(power_sum_monomial_coefficient(&partitions[j], &partitions[i]))
                });
                let m_to_p = p_to_m.inverse().expect("power sums are a basis");
                DegreeTransition { partitions, to_power_sum: m_to_p, from_power_sum: p_to_m }
            })
            .collect();
        self.bases.insert(id.clone(), Registered { family: None, degrees });
        id
    }

    /// Highest registered degree of a basis; the power-sum basis is unbounded.
    pub fn depth(&self, basis: &BasisId) -> Option<usize> {
        if *basis == BasisId::PowerSum {
            return Some(usize::MAX);
        }
        self.bases.get(basis).map(|r| r.degrees.len() - 1)
    }

    pub fn family(&self, basis: &BasisId) -> Option<&GraphFamily> {
        self.bases.get(basis).and_then(|r| r.family.as_ref())
    }

    pub fn transition(&self, basis: &BasisId, degree: usize) -> Result<&DegreeTransition> {
        let registered = self
            .bases
            .get(basis)
            .ok_or_else(|| Error::UnknownBasis(basis.to_string()))?;
        registered.degrees.get(degree).ok_or_else(|| Error::DegreeExceeded {
            basis: basis.to_string(),
            degree,
            depth: registered.degrees.len() - 1,
        })
    }

    fn apply(&self, f: &SymFun, basis: &BasisId, to_p: bool, target: BasisId) -> Result<SymFun> {
        let mut out = SymFun::zero(target);
        for d in f.degrees() {
            let t = self.transition(basis, d)?;
            let m = if to_p { &t.to_power_sum } else { &t.from_power_sum };
            let v = m.mul_vec(&f.degree_vector(d));
            for (lambda, c) in t.partitions.iter().zip(v) {
                out.add_term(lambda.clone(), &c);
            }
        }
        Ok(out)
    }

    /// Rewrites `f` in the power-sum basis.
    pub fn to_power_sum(&self, f: &SymFun) -> Result<SymFun> {
        match f.basis() {
            BasisId::PowerSum => Ok(f.clone()),
            basis => self.apply(f, basis, true, BasisId::PowerSum),
        }
    }

    /// Exact coefficients of `f` in the basis `to`.
    pub fn change_basis(&self, f: &SymFun, to: &BasisId) -> Result<SymFun> {
        if f.basis() == to {
            return Ok(f.clone());
        }
        let p = self.to_power_sum(f)?;
        match to {
            BasisId::PowerSum => Ok(p),
            basis => self.apply(&p, basis, false, basis.clone()),
        }
    }

    /// The algebra map `p_λ ↦ b_λ` for a registered chromatic basis `b`,
    /// with input and output in the power-sum basis. For paths and stars it is
    /// an involution.
    pub fn reciprocity_map(&self, f: &SymFun, basis: &BasisId) -> Result<SymFun> {
        if *f.basis() != BasisId::PowerSum {
            return Err(Error::BasisMismatch { expected: "p".to_string(), got: f.basis().to_string() });
        }
        self.to_power_sum(&f.reinterpret(basis.clone()))
    }

    /// The `B`-polynomial of `f` for the basis `basis`: coefficients of `f` in
    /// that basis summed by partition length.
    pub fn b_polynomial(&self, f: &SymFun, basis: &BasisId) -> Result<UniPoly> {
        Ok(self.change_basis(f, basis)?.collapse_by_length())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::csf::broken_circuit_expansion;
    use crate::graph::Graph;

    fn part(p: &[usize]) -> Partition {
        Partition::from_parts(p.to_vec()).unwrap()
    }

    fn p(terms: &[(&[usize], i64)]) -> SymFun {
        SymFun::from_terms(BasisId::PowerSum, terms.iter().map(|(l, c)| (part(l), rat(*c))))
    }

    #[test]
    fn path_columns() {
        let mut cache = TransitionCache::new();
        let path = cache.register(&GraphFamily::path(), 3).unwrap();
        let t = cache.transition(&path, 3).unwrap();
        let col = t.partitions.iter().position(|l| *l == part(&[3])).unwrap();
        let expected = p(&[(&[1, 1, 1], 1), (&[2, 1], -2), (&[3], 1)]).degree_vector(3);
        assert_eq!(t.to_power_sum.column(col), expected);
    }

    #[test]
    fn single_vertex_family_is_the_power_sum_basis() {
        let mut cache = TransitionCache::new();
        let id = cache.register(&GraphFamily::single_vertex(), 5).unwrap();
        for d in 0..=5 {
            let t = cache.transition(&id, d).unwrap();
            assert_eq!(t.to_power_sum, Matrix::identity(t.partitions.len()));
        }
    }

    #[test]
    fn paths_and_stars_agree_through_three() {
        let mut cache = TransitionCache::new();
        let path = cache.register(&GraphFamily::path(), 3).unwrap();
        let star = cache.register(&GraphFamily::star(), 3).unwrap();
        for d in 0..=3 {
            assert_eq!(cache.transition(&path, d).unwrap(), cache.transition(&star, d).unwrap());
        }
    }

    #[test]
    fn change_basis_examples() {
        let mut cache = TransitionCache::new();
        let path = cache.register(&GraphFamily::path(), 4).unwrap();
        let x_p3 = broken_circuit_expansion(&Graph::path(3));
        assert_eq!(
            cache.change_basis(&x_p3, &path).unwrap(),
            SymFun::basis_element(path.clone(), part(&[3]))
        );
        let x_k3 = broken_circuit_expansion(&Graph::complete(3));
        assert_eq!(cache.change_basis(&x_k3, &path).unwrap().coeff_sum(), rat(1));
        let star = cache.register(&GraphFamily::star(), 2).unwrap();
        let p1 = p(&[(&[1], 1)]);
        assert_eq!(cache.change_basis(&p1, &star).unwrap(), SymFun::basis_element(star.clone(), part(&[1])));
        assert!(matches!(
            cache.change_basis(&x_k3, &star),
            Err(Error::DegreeExceeded { degree: 3, depth: 2, .. })
        ));
        assert!(matches!(
            cache.change_basis(&x_k3, &BasisId::Chromatic("nope".into())),
            Err(Error::UnknownBasis(_))
        ));
    }

    #[test]
    fn reciprocity_examples() {
        let mut cache = TransitionCache::new();
        let path = cache.register(&GraphFamily::path(), 3).unwrap();
        let p1 = p(&[(&[1], 1)]);
        assert_eq!(cache.reciprocity_map(&p1, &path).unwrap(), p1);
        let p2 = p(&[(&[2], 1)]);
        assert_eq!(cache.reciprocity_map(&p2, &path).unwrap(), p(&[(&[1, 1], 1), (&[2], -1)]));
        let p21 = p(&[(&[2, 1], 1)]);
        let once = cache.reciprocity_map(&p21, &path).unwrap();
        assert_eq!(cache.reciprocity_map(&once, &path).unwrap(), p21);
    }

    #[test]
    fn b_polynomial_examples() {
        let mut cache = TransitionCache::new();
        let path = cache.register(&GraphFamily::path(), 3).unwrap();
        let x_k3 = broken_circuit_expansion(&Graph::complete(3));
        assert_eq!(cache.b_polynomial(&x_k3, &BasisId::PowerSum).unwrap(), UniPoly::from_ints(&[0, 2, -3, 1]));
        assert_eq!(cache.b_polynomial(&x_k3, &path).unwrap(), UniPoly::from_ints(&[0, 2, -1]));
        assert_eq!(
            cache.b_polynomial(&p(&[(&[2, 1], 1)]), &BasisId::PowerSum).unwrap(),
            UniPoly::from_ints(&[0, 0, 1])
        );
    }

    #[test]
    fn monomial_basis() {
        let mut cache = TransitionCache::new();
        let m = cache.register_monomial(4);
        let x_k2 = p(&[(&[1, 1], 1), (&[2], -1)]);
        let in_m = cache.change_basis(&x_k2, &m).unwrap();
        assert_eq!(in_m, SymFun::from_terms(m.clone(), [(part(&[1, 1]), rat(2))]));
        assert_eq!(cache.change_basis(&in_m, &BasisId::PowerSum).unwrap(), x_k2);
    }

    #[test]
    fn registration_is_idempotent_and_checked() {
        let mut cache = TransitionCache::new();
        let a = cache.register(&GraphFamily::path(), 4).unwrap();
        let b = cache.register(&GraphFamily::path(), 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(cache.depth(&a), Some(4));
        cache.register(&GraphFamily::path(), 5).unwrap();
        assert_eq!(cache.depth(&a), Some(5));
        let impostor = GraphFamily::from_graphs("path", alloc::vec![Graph::edgeless(1)]);
        assert!(cache.register(&impostor, 1).is_err());
        let disconnected = GraphFamily::from_graphs("gap", alloc::vec![Graph::edgeless(1), Graph::edgeless(2)]);
        assert!(matches!(cache.register(&disconnected, 2), Err(Error::InvalidFamily { .. })));
    }

    #[test]
    fn transitions_invert_exactly() {
        let mut cache = TransitionCache::new();
        for fam in [GraphFamily::path(), GraphFamily::star(), GraphFamily::complete(), GraphFamily::random_trees(3)] {
            let id = cache.register(&fam, 6).unwrap();
            for d in 0..=6 {
                let t = cache.transition(&id, d).unwrap();
                assert_eq!(t.to_power_sum.mul(&t.from_power_sum), Matrix::identity(t.partitions.len()));
            }
        }
    }
}
