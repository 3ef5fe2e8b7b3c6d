use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{
    graded_piece_group, Certificate, DegreePiece, GradedGroup, Ideal, DEFAULT_MONOMIAL_CAP,
};
use crate::poly::{same_table, Polynomial, Table};

/// Graded ring `Z[vars]/(relations)`, optionally trusted only up to a degree bound.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    name: String,
    table: Table,
    relations: Vec<Polynomial>,
    validity_bound: Option<u32>,
    ideal: Arc<Ideal>,
}

impl RingPresentation {
    pub fn new(
        name: impl Into<String>,
        table: &Table,
        relations: Vec<Polynomial>,
        validity_bound: Option<u32>,
    ) -> Result<Self> {
        let relations: Vec<Polynomial> =
            relations.into_iter().filter(|r| !r.is_zero()).map(|r| r.normalize_sign()).collect();
        let ideal = Arc::new(Ideal::new(table, relations.clone())?);
        Ok(RingPresentation { name: name.into(), table: table.clone(), relations, validity_bound, ideal })
    }

    pub fn parse(name: &str, table: &Table, relations: &[&str], bound: Option<u32>) -> Result<Self> {
        let rels = relations.iter().map(|s| Polynomial::parse(table, s)).collect::<Result<Vec<_>>>()?;
        RingPresentation::new(name, table, rels, bound)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn validity_bound(&self) -> Option<u32> {
        self.validity_bound
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn var(&self, name: &str) -> Result<Polynomial> {
        Polynomial::var(&self.table, name)
    }

    pub fn poly(&self, s: &str) -> Result<Polynomial> {
        Polynomial::parse(&self.table, s)
    }

    /// Errors if a conclusion in degree `d` would rely on the presentation past its bound.
    pub fn check_degree(&self, d: u32) -> Result<()> {
        match self.validity_bound {
            Some(b) if d > b => Err(Error::OutsideValidityBound { degree: d, bound: b }),
            _ => Ok(()),
        }
    }

    fn check_poly(&self, p: &Polynomial) -> Result<()> {
        same_table(p.table(), &self.table)?;
        if let Some(d) = p.degree() {
            self.check_degree(d)?;
        }
        Ok(())
    }

    /// Zero test with certificate: `Some` iff `p` vanishes in the ring.
    pub fn contains(&self, p: &Polynomial) -> Result<Option<Certificate>> {
        self.check_poly(p)?;
        self.ideal.contains(p)
    }

    pub fn is_zero(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.contains(p)?.is_some())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_poly(p)?;
        self.ideal.normal_form(p)
    }

    pub fn graded_group(&self, d: u32) -> Result<GradedGroup> {
        self.check_degree(d)?;
        graded_piece_group(&self.table, &self.relations, d)
    }

    pub fn graded_groups(&self, dmax: u32) -> Result<Vec<GradedGroup>> {
        (0..=dmax).map(|d| self.graded_group(d)).collect()
    }

    /// Same variables with extra relations.
    pub fn with_relations(&self, name: impl Into<String>, extra: Vec<Polynomial>) -> Result<Self> {
        let mut rels = self.relations.clone();
        rels.extend(extra);
        RingPresentation::new(name, &self.table, rels, self.validity_bound)
    }
}

/// Verified graded ring homomorphism between presentations.
#[derive(Debug, Clone)]
pub struct RingMap {
    pub source: RingPresentation,
    pub target: RingPresentation,
    /// Image of each source variable, in source table order.
    pub images: Vec<Polynomial>,
    /// Certificate that each source relation maps to zero in the target.
    pub relation_certificates: Vec<Certificate>,
}

impl RingMap {
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        same_table(p.table(), self.source.table())?;
        p.eval_map(&self.images, self.target.table())
    }
}

/// Checks degree preservation and that every relation of `source` maps into the target ideal.
pub fn check_ring_map(
    source: &RingPresentation,
    target: &RingPresentation,
    images: &[(&str, Polynomial)],
) -> Result<RingMap> {
    let mut ordered = Vec::with_capacity(source.table().len());
    for (name, w) in source.table().entries() {
        let img = images
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, p)| p.clone())
            .ok_or_else(|| Error::MissingImage(name.to_string()))?;
        same_table(img.table(), target.table())?;
        let ok = img.is_homogeneous() && img.degree().map(|d| d == w).unwrap_or(true);
        if !ok {
            return Err(Error::InhomogeneousImage { var: name.to_string(), expected: w });
        }
        ordered.push(img);
    }
    for (name, _) in images {
        if source.table().index_of(name).is_none() {
            return Err(Error::UnknownId(format!("variable {name} is not in the source ring")));
        }
    }
    let mut certs = Vec::with_capacity(source.relations().len());
    for r in source.relations() {
        let im = r.eval_map(&ordered, target.table())?;
        match target.contains(&im)? {
            Some(c) => certs.push(c),
            None => return Err(Error::RelationNotPreserved(format!("{r} maps to {im}"))),
        }
    }
    Ok(RingMap {
        source: source.clone(),
        target: target.clone(),
        images: ordered,
        relation_certificates: certs,
    })
}

/// Per-degree comparison of source and target under a verified map.
#[derive(Debug, Clone)]
pub struct DegreeComparison {
    pub source: GradedGroup,
    pub target: GradedGroup,
    pub surjective: bool,
}

#[derive(Debug, Clone)]
pub struct QuotientComparison {
    pub degrees: Vec<DegreeComparison>,
}

impl QuotientComparison {
    /// Equal groups and a surjective map force an isomorphism of finitely generated groups.
    pub fn is_isomorphism(&self) -> bool {
        self.degrees.iter().all(|d| d.surjective && d.source.same_group(&d.target))
    }
}

/// Compares graded pieces up to `dmax` and checks that the map is onto in each degree.
pub fn quotient_compare(map: &RingMap, dmax: u32) -> Result<QuotientComparison> {
    let mut degrees = Vec::new();
    for d in 0..=dmax {
        let source = map.source.graded_group(d)?;
        map.target.check_degree(d)?;
        let mut piece =
            DegreePiece::build(map.target.table(), map.target.relations(), d, DEFAULT_MONOMIAL_CAP, false)?;
        let target = piece.group();
        let src_monomials = crate::poly::monomials_of_degree(map.source.table().weights(), d);
        for m in src_monomials {
            let p = Polynomial::term(map.source.table(), 1, m);
            let im = map.apply(&p)?;
            piece.insert_polynomial(&im)?;
        }
        let surjective = piece.group().is_zero();
        degrees.push(DegreeComparison { source, target, surjective });
    }
    Ok(QuotientComparison { degrees })
}

/// Adjoins a degree-one `root` with `n * root = c1`, the presentation of the
/// `n`-th root gerbe of a line bundle with first Chern class `c1`.
pub fn root_gerbe(base: &RingPresentation, c1: &Polynomial, n: i64, root: &str) -> Result<RingPresentation> {
    same_table(c1.table(), base.table())?;
    if !(c1.is_zero() || (c1.is_homogeneous() && c1.degree() == Some(1))) {
        return Err(Error::NotHomogeneous(format!("{c1} is not a degree one class")));
    }
    if n < 1 {
        return Err(Error::OutOfRange(format!("root order {n}")));
    }
    let table = base.table().extended(&[(root, 1)])?;
    let mut rels = base.relations().iter().map(|r| r.embed(&table)).collect::<Result<Vec<_>>>()?;
    let t = Polynomial::var(&table, root)?;
    let rel = c1.embed(&table)? - t.scale_i(n);
    rels.push(rel.normalize_sign());
    RingPresentation::new(format!("{}[{root}]", base.name()), &table, rels, base.validity_bound())
}
