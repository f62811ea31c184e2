//! Arrangements of smooth plane components: singular loci, weak
//! combinatorics, Levi graphs, lattice isomorphism and Ziegler-pair
//! detectors.
//!
//! Singular points are pairwise intersections. Line-line points come from
//! cross products; line-conic (and line-curve) points from substituting the
//! line's parametrization; conic-conic points from the resultant. Quadratic
//! point splittings that leave the field trigger a single automatic square
//! root adjunction when the field is still plain Q; over a proper extension
//! the pair is either recorded in aggregate as a conjugate pair (line-based
//! pairs only) or reported as an unsupported field tower.

use crate::localsing::{
    classify_local, intersection_multiplicity, local_equation_at, local_invariants_at,
    LocalError, LocalInvariants, SingTypeLabel,
};
use crate::numfield::{same_field, Field, FieldElement, FieldError, NumberField, Rational};
use crate::polyring::{HomogPoly, Mat3, PolyError};
use crate::syzygy::{CurveJacobian, SyzygyError};
use crate::unipoly::{quadratic_roots_in_field, rational_quartic_split, rational_roots, UniPoly};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone)]
pub enum ArrangeError {
    #[error("invalid component: {0}")]
    InvalidComponent(String),
    #[error("components {0} and {1} define the same curve")]
    DuplicateComponents(usize, usize),
    #[error("unsupported field tower: {0}")]
    FieldTowerUnsupported(String),
    #[error("operation requires line arrangements")]
    NotLineArrangement,
    #[error("unsupported component pair for point computation: {0}")]
    UnsupportedPair(String),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Syzygy(#[from] SyzygyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Line,
    Conic,
    OtherSmooth,
}

#[derive(Debug, Clone)]
pub struct Component {
    pub kind: ComponentKind,
    pub poly: HomogPoly,
}

impl Component {
    pub fn line(poly: HomogPoly) -> Self {
        Component {
            kind: ComponentKind::Line,
            poly,
        }
    }

    pub fn conic(poly: HomogPoly) -> Self {
        Component {
            kind: ComponentKind::Conic,
            poly,
        }
    }

    pub fn other(poly: HomogPoly) -> Self {
        Component {
            kind: ComponentKind::OtherSmooth,
            poly,
        }
    }

    pub fn from_poly(poly: HomogPoly) -> Self {
        match poly.degree() {
            1 => Self::line(poly),
            2 => Self::conic(poly),
            _ => Self::other(poly),
        }
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }
}

/// Projective point with coordinates normalized so the first nonzero one is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    pub coords: [FieldElement; 3],
}

impl ProjPoint {
    pub fn new(coords: [FieldElement; 3]) -> Self {
        let i0 = (0..3)
            .find(|&i| !coords[i].is_zero())
            .expect("projective point must be nonzero");
        let inv = coords[i0].inverse().expect("nonzero coordinate");
        ProjPoint {
            coords: [
                coords[0].checked_mul(&inv).unwrap(),
                coords[1].checked_mul(&inv).unwrap(),
                coords[2].checked_mul(&inv).unwrap(),
            ],
        }
    }

    /// Deterministic ordering key (coefficient-wise, not numeric).
    pub fn sort_key(&self) -> Vec<Rational> {
        self.coords
            .iter()
            .flat_map(|c| c.sort_key())
            .collect()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}:{}:{})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// Location of a singular point record: an explicit rational point or a
/// Galois-conjugate pair on a line, described by the irreducible quadratic in
/// the line's parametrization.
#[derive(Debug, Clone)]
pub enum PointSite {
    Rational(ProjPoint),
    ConjugatePair {
        line: usize,
        base: [FieldElement; 3],
        dir: [FieldElement; 3],
        quad: Vec<FieldElement>,
    },
}

impl fmt::Display for PointSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointSite::Rational(p) => write!(f, "{}", p),
            PointSite::ConjugatePair { line, quad, .. } => {
                write!(
                    f,
                    "conjugate pair on component {} with parameter relation {} + {}*t + {}*t^2 = 0",
                    line, quad[0], quad[1], quad[2]
                )
            }
        }
    }
}

/// One singular-locus entry; a conjugate pair counts as two points with the
/// shared invariants.
#[derive(Debug, Clone)]
pub struct SingularPointRecord {
    pub site: PointSite,
    pub point_count: usize,
    pub incident: Vec<usize>,
    /// Local intersection multiplicity per incident pair at one point.
    pub pair_multiplicities: BTreeMap<(usize, usize), usize>,
    pub local: LocalInvariants,
    pub label: SingTypeLabel,
}

/// Singular locus together with the field the points live in (it may be a
/// quadratic extension adjoined during point splitting).
#[derive(Debug, Clone)]
pub struct SingularLocus {
    pub field: Field,
    pub records: Vec<SingularPointRecord>,
}

impl SingularLocus {
    pub fn point_count(&self) -> usize {
        self.records.iter().map(|r| r.point_count).sum()
    }

    pub fn tjurina_sum(&self) -> usize {
        self.records
            .iter()
            .map(|r| r.local.tau * r.point_count)
            .sum()
    }

    pub fn milnor_sum(&self) -> usize {
        self.records
            .iter()
            .map(|r| r.local.mu * r.point_count)
            .sum()
    }

    pub fn all_quasi_homogeneous(&self) -> bool {
        self.records.iter().all(|r| r.local.quasi_homogeneous)
    }

    /// Count singular points by multiplicity, e.g. the (n2, n3, ...) data of
    /// a line arrangement.
    pub fn multiplicity_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for r in &self.records {
            *out.entry(r.local.multiplicity).or_insert(0) += r.point_count;
        }
        out
    }
}

/// Degree-count vector plus singularity-type counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakCombinatorics {
    /// Index i holds the number of components of degree i + 1.
    pub degree_counts: Vec<usize>,
    pub sing_counts: BTreeMap<SingTypeLabel, usize>,
}

impl WeakCombinatorics {
    /// (number of lines; n_2, n_3, ..., n_max) for arrangements whose
    /// singularities are all ordinary; None otherwise.
    pub fn ordinary_profile(&self) -> Option<(usize, Vec<usize>)> {
        let lines = self.degree_counts.first().copied().unwrap_or(0);
        let mut max_m = 2;
        for label in self.sing_counts.keys() {
            match label {
                SingTypeLabel::A(1) => {}
                SingTypeLabel::D4 => max_m = max_m.max(3),
                SingTypeLabel::X9 => max_m = max_m.max(4),
                SingTypeLabel::Ordinary(m) => max_m = max_m.max(*m),
                _ => return None,
            }
        }
        let mut counts = vec![0usize; max_m - 1];
        for (label, &c) in &self.sing_counts {
            let m = match label {
                SingTypeLabel::A(1) => 2,
                SingTypeLabel::D4 => 3,
                SingTypeLabel::X9 => 4,
                SingTypeLabel::Ordinary(m) => *m,
                _ => unreachable!(),
            };
            counts[m - 2] += c;
        }
        Some((lines, counts))
    }
}

impl fmt::Display for WeakCombinatorics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees: Vec<String> = self.degree_counts.iter().map(|c| c.to_string()).collect();
        let sings: Vec<String> = self
            .sing_counts
            .iter()
            .map(|(l, c)| format!("{}:{}", l, c))
            .collect();
        write!(f, "({}; {})", degrees.join(","), sings.join(", "))
    }
}

/// Bipartite incidence graph of singular points and components.
#[derive(Debug, Clone)]
pub struct LeviGraph {
    pub component_count: usize,
    /// Incident component index set per point vertex.
    pub point_incidences: Vec<Vec<usize>>,
}

impl LeviGraph {
    pub fn point_count(&self) -> usize {
        self.point_incidences.len()
    }

    pub fn edge_count(&self) -> usize {
        self.point_incidences.iter().map(|s| s.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PairVerdict {
    IsPair { detail: String },
    NotPair { reason: String },
}

impl PairVerdict {
    pub fn is_pair(&self) -> bool {
        matches!(self, PairVerdict::IsPair { .. })
    }
}

impl fmt::Display for PairVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairVerdict::IsPair { detail } => write!(f, "pair: {}", detail),
            PairVerdict::NotPair { reason } => write!(f, "not a pair: {}", reason),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZieglerVariant {
    Mdr,
    ArModule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointMode {
    /// Every singular point must be realized over the (possibly extended)
    /// field; a second incompatible square root is an error.
    Exact,
    /// Conjugate pairs over a second quadratic extension are recorded once
    /// with shared invariants.
    Aggregate,
}

#[derive(Debug)]
pub struct Arrangement {
    components: Vec<Component>,
    field: Field,
    locus_exact: OnceLock<Result<SingularLocus, ArrangeError>>,
    locus_aggregate: OnceLock<Result<SingularLocus, ArrangeError>>,
    jacobian: OnceLock<Result<CurveJacobian, SyzygyError>>,
}

fn fresh(components: Vec<Component>, field: Field) -> Arrangement {
    Arrangement {
        components,
        field,
        locus_exact: OnceLock::new(),
        locus_aggregate: OnceLock::new(),
        jacobian: OnceLock::new(),
    }
}

impl Arrangement {
    pub fn new(components: Vec<Component>) -> Result<Self, ArrangeError> {
        assert!(!components.is_empty(), "arrangement needs components");
        let field = components[0].poly.field().clone();
        for (i, c) in components.iter().enumerate() {
            if !same_field(c.poly.field(), &field) {
                return Err(ArrangeError::InvalidComponent(format!(
                    "component {} uses a different number field",
                    i
                )));
            }
            if c.poly.is_zero() {
                return Err(ArrangeError::InvalidComponent(format!(
                    "component {} is zero",
                    i
                )));
            }
            match c.kind {
                ComponentKind::Line => {
                    if c.poly.degree() != 1 {
                        return Err(ArrangeError::InvalidComponent(format!(
                            "component {} declared as a line has degree {}",
                            i,
                            c.poly.degree()
                        )));
                    }
                }
                ComponentKind::Conic => {
                    if c.poly.degree() != 2 {
                        return Err(ArrangeError::InvalidComponent(format!(
                            "component {} declared as a conic has degree {}",
                            i,
                            c.poly.degree()
                        )));
                    }
                    if conic_matrix_det(&c.poly).is_zero() {
                        return Err(ArrangeError::InvalidComponent(format!(
                            "component {} is a singular conic",
                            i
                        )));
                    }
                }
                ComponentKind::OtherSmooth => {
                    if c.poly.degree() < 3 {
                        return Err(ArrangeError::InvalidComponent(format!(
                            "component {} declared as a higher-degree curve has degree {}",
                            i,
                            c.poly.degree()
                        )));
                    }
                    let jac = CurveJacobian::new(&c.poly)?;
                    if jac.total_tjurina()? != 0 {
                        return Err(ArrangeError::InvalidComponent(format!(
                            "component {} is not smooth",
                            i
                        )));
                    }
                }
            }
        }
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                if components[i].poly.proportional_to(&components[j].poly) {
                    return Err(ArrangeError::DuplicateComponents(i, j));
                }
            }
        }
        Ok(fresh(components, field))
    }

    pub fn from_polys(polys: Vec<HomogPoly>) -> Result<Self, ArrangeError> {
        Self::new(polys.into_iter().map(Component::from_poly).collect())
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.components.iter().map(|c| c.degree()).sum()
    }

    pub fn is_line_arrangement(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.kind == ComponentKind::Line)
    }

    /// The defining polynomial: product of the component equations.
    pub fn product(&self) -> HomogPoly {
        let mut acc = HomogPoly::constant(&self.field, FieldElement::one(&self.field));
        for c in &self.components {
            acc = acc.mul(&c.poly).unwrap();
        }
        acc
    }

    pub fn embed_into(&self, target: &Field) -> Result<Arrangement, ArrangeError> {
        let components = self
            .components
            .iter()
            .map(|c| {
                Ok(Component {
                    kind: c.kind,
                    poly: c.poly.embed_into(target)?,
                })
            })
            .collect::<Result<Vec<_>, FieldError>>()?;
        Ok(fresh(components, target.clone()))
    }

    /// Apply an invertible linear substitution to every component.
    pub fn transformed(&self, m: &Mat3) -> Result<Arrangement, ArrangeError> {
        let components = self
            .components
            .iter()
            .map(|c| {
                Ok(Component {
                    kind: c.kind,
                    poly: c.poly.substitute_linear(m)?,
                })
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(fresh(components, self.field.clone()))
    }

    /// Compute the singular locus. A single square root is adjoined
    /// automatically when the base field is Q and a point splitting needs
    /// one; afterwards behavior depends on the mode.
    pub fn singular_points(&self, mode: PointMode) -> Result<SingularLocus, ArrangeError> {
        let cache = match mode {
            PointMode::Exact => &self.locus_exact,
            PointMode::Aggregate => &self.locus_aggregate,
        };
        cache
            .get_or_init(|| self.compute_singular_points(mode))
            .clone()
    }

    /// Memoized Jacobian data of the product polynomial.
    pub fn jacobian(&self) -> Result<&CurveJacobian, SyzygyError> {
        self.jacobian
            .get_or_init(|| CurveJacobian::new(&self.product()))
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn compute_singular_points(&self, mode: PointMode) -> Result<SingularLocus, ArrangeError> {
        match self.singular_points_inner(mode) {
            Ok(locus) => Ok(locus),
            Err(NeedSqrt(disc)) => {
                // Restart once over Q(w), w^2 = disc.
                let minpoly = vec![
                    -disc.clone(),
                    Rational::from_integer(0.into()),
                    Rational::from_integer(1.into()),
                ];
                let ext = NumberField::adjoin_root("w", &minpoly).map_err(|e| {
                    ArrangeError::FieldTowerUnsupported(format!(
                        "cannot adjoin sqrt of {}: {}",
                        disc, e
                    ))
                })?;
                let bigger = self.embed_into(&ext)?;
                bigger.singular_points_inner(mode).map_err(|e| match e {
                    NeedSqrt(_) => unreachable!("extension fields never request adjunction"),
                    WithError(e) => e,
                })
            }
            Err(WithError(e)) => Err(e),
        }
    }

    fn singular_points_inner(
        &self,
        mode: PointMode,
    ) -> Result<SingularLocus, PointFailure> {
        let field = &self.field;
        let n = self.components.len();
        // Candidate rational points, deduplicated by normalized coordinates.
        let mut points: BTreeMap<Vec<Rational>, ProjPoint> = BTreeMap::new();
        // Conjugate-pair sites discovered on lines: (line, other, quad, mult).
        let mut pairs: Vec<(usize, usize, [FieldElement; 3], [FieldElement; 3], Vec<FieldElement>, usize)> =
            Vec::new();
        let mut add_point = |p: ProjPoint| {
            points.entry(p.sort_key()).or_insert(p);
        };
        for i in 0..n {
            for j in i + 1..n {
                let (ci, cj) = (&self.components[i], &self.components[j]);
                match (ci.kind, cj.kind) {
                    (ComponentKind::Line, ComponentKind::Line) => {
                        add_point(line_line_point(&ci.poly, &cj.poly));
                    }
                    (ComponentKind::Line, _) => {
                        self.line_curve_points(
                            i,
                            j,
                            mode,
                            &mut add_point,
                            &mut pairs,
                        )?;
                    }
                    (_, ComponentKind::Line) => {
                        self.line_curve_points(
                            j,
                            i,
                            mode,
                            &mut add_point,
                            &mut pairs,
                        )?;
                    }
                    (ComponentKind::Conic, ComponentKind::Conic) => {
                        self.conic_conic_points(i, j, &mut add_point)?;
                    }
                    _ => {
                        return Err(WithError(ArrangeError::UnsupportedPair(format!(
                            "components {} (degree {}) and {} (degree {})",
                            i,
                            ci.degree(),
                            j,
                            cj.degree()
                        ))));
                    }
                }
            }
        }
        let f = self.product();
        let mut records = Vec::new();
        for p in points.values() {
            let incident: Vec<usize> = (0..n)
                .filter(|&k| self.components[k].poly.evaluate(&p.coords).is_zero())
                .collect();
            if incident.len() < 2 {
                continue;
            }
            let mut pair_multiplicities = BTreeMap::new();
            for (ai, &a) in incident.iter().enumerate() {
                for &b in incident.iter().skip(ai + 1) {
                    let ga = local_equation_at(&self.components[a].poly, &p.coords);
                    let gb = local_equation_at(&self.components[b].poly, &p.coords);
                    let m = intersection_multiplicity(&ga, &gb)
                        .map_err(|e| WithError(ArrangeError::Local(e)))?;
                    pair_multiplicities.insert((a, b), m);
                }
            }
            let local = local_invariants_at(&f, &p.coords, incident.len())
                .map_err(|e| WithError(ArrangeError::Local(e)))?;
            let label = classify_local(&local);
            records.push(SingularPointRecord {
                site: PointSite::Rational(p.clone()),
                point_count: 1,
                incident,
                pair_multiplicities,
                local,
                label,
            });
        }
        // Aggregate conjugate-pair records. Ownership: the pair belongs to
        // the lexicographically first (line, other) pair among its incident
        // components, which avoids coordinate comparison across
        // parametrizations.
        for (line_idx, other_idx, base, dir, quad, mult) in &pairs {
            let mut incident = vec![*line_idx];
            for k in 0..n {
                if k == *line_idx {
                    continue;
                }
                let u = substitute_param(&self.components[k].poly, base, dir);
                let q = UniPoly::new(field, quad.clone());
                if !u.is_zero() && u.divrem(&q).1.is_zero() {
                    incident.push(k);
                }
            }
            incident.sort_unstable();
            // Only the generating pair with the smallest non-line index
            // reports the record.
            let first_other = incident
                .iter()
                .copied()
                .find(|&k| k != *line_idx)
                .expect("conjugate pair has a second component");
            if first_other != *other_idx {
                continue;
            }
            let record = self
                .conjugate_record(*line_idx, base, dir, quad, *mult, &incident)
                .map_err(WithError)?;
            records.push(record);
        }
        // Bezout bookkeeping per pair: local multiplicities over all points
        // account for deg_i * deg_j exactly.
        for i in 0..n {
            for j in i + 1..n {
                let mut total = 0usize;
                for r in &records {
                    if let Some(m) = r.pair_multiplicities.get(&(i, j)) {
                        total += m * r.point_count;
                    }
                }
                let expected = self.components[i].degree() * self.components[j].degree();
                assert_eq!(
                    total, expected,
                    "intersection bookkeeping for pair ({}, {})",
                    i, j
                );
            }
        }
        Ok(SingularLocus {
            field: field.clone(),
            records,
        })
    }

    /// Intersection points of a line with a conic or higher-degree smooth
    /// component, via the line's parametrization.
    #[allow(clippy::type_complexity)]
    fn line_curve_points(
        &self,
        line_idx: usize,
        other_idx: usize,
        mode: PointMode,
        add_point: &mut dyn FnMut(ProjPoint),
        pairs: &mut Vec<(usize, usize, [FieldElement; 3], [FieldElement; 3], Vec<FieldElement>, usize)>,
    ) -> Result<(), PointFailure> {
        let field = &self.field;
        let line = &self.components[line_idx].poly;
        let other = &self.components[other_idx].poly;
        let (base, dir) = line_basis(line);
        // The parametrization base + t*dir misses the point dir itself.
        if other.evaluate(&dir).is_zero() {
            add_point(ProjPoint::new(dir.clone()));
        }
        let u = substitute_param(other, &base, &dir);
        if u.is_zero() {
            return Err(WithError(ArrangeError::InvalidComponent(format!(
                "component {} contains line {}",
                other_idx, line_idx
            ))));
        }
        for (factor, mult) in u.squarefree_decomposition() {
            let splits = split_in_field(&factor).map_err(WithError)?;
            for root in splits.roots {
                let p = param_point(&base, &dir, &root);
                add_point(p);
            }
            for quad in splits.quadratics {
                if field.is_rationals() {
                    // Request a single adjunction and retry from scratch.
                    let disc = rational_quad_disc(&quad);
                    return Err(NeedSqrt(disc));
                }
                match mode {
                    PointMode::Exact => {
                        return Err(WithError(ArrangeError::FieldTowerUnsupported(format!(
                            "intersection of components {} and {} needs a second \
                             square root over {:?}",
                            line_idx, other_idx, field
                        ))));
                    }
                    PointMode::Aggregate => {
                        pairs.push((
                            line_idx,
                            other_idx,
                            base.clone(),
                            dir.clone(),
                            quad.coeffs.clone(),
                            mult,
                        ));
                    }
                }
            }
            if let Some(deg) = splits.unsupported {
                return Err(WithError(ArrangeError::FieldTowerUnsupported(format!(
                    "point splitting needs an irreducible degree-{} factor over {:?}",
                    deg, field
                ))));
            }
        }
        Ok(())
    }

    /// Intersection points of two smooth conics via the x-resultant; every
    /// root is lifted through the gcd of the specialized quadratics.
    fn conic_conic_points(
        &self,
        i: usize,
        j: usize,
        add_point: &mut dyn FnMut(ProjPoint),
    ) -> Result<(), PointFailure> {
        let field = &self.field;
        let c1 = &self.components[i].poly;
        let c2 = &self.components[j].poly;
        // The projection along x misses (1:0:0).
        let one = FieldElement::one(field);
        let zero = FieldElement::zero(field);
        let e0 = [one.clone(), zero.clone(), zero.clone()];
        if c1.evaluate(&e0).is_zero() && c2.evaluate(&e0).is_zero() {
            add_point(ProjPoint::new(e0));
        }
        let res = resultant_in_x(c1, c2);
        // res is a binary form in (y, z); strip the z-power (root (1:0)).
        let (res_z_mult, uni) = binary_form_split(&res, field);
        if res_z_mult > 0 {
            // (y:z) = (1:0): lift through x.
            self.lift_conic_root(
                i,
                j,
                &one,
                &zero,
                add_point,
            )?;
        }
        if uni.deg() <= 0 {
            return Ok(());
        }
        for (factor, _mult) in uni.squarefree_decomposition() {
            let splits = split_in_field(&factor).map_err(WithError)?;
            for root in &splits.roots {
                self.lift_conic_root(i, j, root, &one, add_point)?;
            }
            for quad in &splits.quadratics {
                if field.is_rationals() {
                    let disc = rational_quad_disc(quad);
                    return Err(NeedSqrt(disc));
                }
                return Err(WithError(ArrangeError::FieldTowerUnsupported(format!(
                    "conic-conic intersection of components {} and {} does not \
                     split over {:?}",
                    i, j, field
                ))));
            }
            if let Some(deg) = splits.unsupported {
                return Err(WithError(ArrangeError::FieldTowerUnsupported(format!(
                    "conic-conic resultant has an unresolved degree-{} factor",
                    deg
                ))));
            }
        }
        Ok(())
    }

    /// Lift a root (y0 : z0) of the x-resultant to intersection points.
    fn lift_conic_root(
        &self,
        i: usize,
        j: usize,
        y0: &FieldElement,
        z0: &FieldElement,
        add_point: &mut dyn FnMut(ProjPoint),
    ) -> Result<(), PointFailure> {
        let field = &self.field;
        let u1 = specialize_x_poly(&self.components[i].poly, y0, z0);
        let u2 = specialize_x_poly(&self.components[j].poly, y0, z0);
        let g = u1.gcd(&u2);
        if g.deg() <= 0 {
            // Spurious root caused by leading-coefficient vanishing.
            return Ok(());
        }
        match g.deg() {
            1 => {
                let x = g.coeffs[0].neg().checked_div(&g.coeffs[1]).unwrap();
                add_point(ProjPoint::new([x, y0.clone(), z0.clone()]));
                Ok(())
            }
            2 => match quadratic_roots_in_field(&g) {
                Ok(Some(roots)) => {
                    for x in roots {
                        add_point(ProjPoint::new([x, y0.clone(), z0.clone()]));
                    }
                    Ok(())
                }
                Ok(None) => {
                    if field.is_rationals() {
                        Err(NeedSqrt(rational_quad_disc(&g)))
                    } else {
                        Err(WithError(ArrangeError::FieldTowerUnsupported(format!(
                            "conic-conic lift over components {} and {} does not \
                             split over {:?}",
                            i, j, field
                        ))))
                    }
                }
                Err(e) => Err(WithError(ArrangeError::Field(e))),
            },
            d => Err(WithError(ArrangeError::UnsupportedPair(format!(
                "conic lift gcd of unexpected degree {}",
                d
            )))),
        }
    }

    /// Shared-invariant record for a conjugate pair of points on a line.
    fn conjugate_record(
        &self,
        line_idx: usize,
        base: &[FieldElement; 3],
        dir: &[FieldElement; 3],
        quad: &[FieldElement],
        line_mult: usize,
        incident: &[usize],
    ) -> Result<SingularPointRecord, ArrangeError> {
        let field = &self.field;
        let q = UniPoly::new(field, quad.to_vec());
        let mut pair_multiplicities = BTreeMap::new();
        // Multiplicities of the line against each other component come from
        // the factor multiplicity in that component's parametrized equation.
        for &k in incident {
            if k == line_idx {
                continue;
            }
            let u = substitute_param(&self.components[k].poly, base, dir);
            let mut m = 0usize;
            let mut rem = u;
            loop {
                let (quo, r) = rem.divrem(&q);
                if r.is_zero() {
                    m += 1;
                    rem = quo;
                } else {
                    break;
                }
            }
            let key = if line_idx < k { (line_idx, k) } else { (k, line_idx) };
            pair_multiplicities.insert(key, m);
        }
        let _ = line_mult;
        // Non-line incident pairs: decide transversality by comparing
        // gradient directions in the quadratic residue field K[t]/(q).
        let others: Vec<usize> = incident
            .iter()
            .copied()
            .filter(|&k| k != line_idx)
            .collect();
        for (ai, &a) in others.iter().enumerate() {
            for &b in others.iter().skip(ai + 1) {
                let transverse = gradients_transverse_mod(
                    &self.components[a].poly,
                    &self.components[b].poly,
                    base,
                    dir,
                    &q,
                );
                if !transverse {
                    return Err(ArrangeError::FieldTowerUnsupported(format!(
                        "tangential components {} and {} at a conjugate pair: \
                         contact order not computable in aggregate mode",
                        a, b
                    )));
                }
                let key = if a < b { (a, b) } else { (b, a) };
                pair_multiplicities.insert(key, 1);
            }
        }
        let branches = incident.len();
        let all_transverse = pair_multiplicities.values().all(|&m| m == 1);
        let local = if branches == 2 {
            let contact = *pair_multiplicities.values().next().unwrap();
            // Two smooth branches with contact order c: A_{2c-1}.
            let mu = 2 * contact - 1;
            LocalInvariants {
                mu,
                tau: mu,
                multiplicity: 2,
                branches,
                quasi_homogeneous: true,
            }
        } else if all_transverse && branches <= 4 {
            let mu = (branches - 1) * (branches - 1);
            LocalInvariants {
                mu,
                tau: mu,
                multiplicity: branches,
                branches,
                quasi_homogeneous: true,
            }
        } else {
            return Err(ArrangeError::FieldTowerUnsupported(format!(
                "conjugate pair with {} branches (transverse: {}) has no \
                 aggregate invariant rule",
                branches, all_transverse
            )));
        };
        let label = classify_local(&local);
        Ok(SingularPointRecord {
            site: PointSite::ConjugatePair {
                line: line_idx,
                base: base.clone(),
                dir: dir.clone(),
                quad: quad.to_vec(),
            },
            point_count: 2,
            incident: incident.to_vec(),
            pair_multiplicities,
            local,
            label,
        })
    }

    pub fn weak_combinatorics(&self, mode: PointMode) -> Result<WeakCombinatorics, ArrangeError> {
        let locus = self.singular_points(mode)?;
        let max_deg = self
            .components
            .iter()
            .map(|c| c.degree())
            .max()
            .unwrap_or(1);
        let mut degree_counts = vec![0usize; max_deg];
        for c in &self.components {
            degree_counts[c.degree() - 1] += 1;
        }
        let mut sing_counts: BTreeMap<SingTypeLabel, usize> = BTreeMap::new();
        for r in &locus.records {
            *sing_counts.entry(r.label.clone()).or_insert(0) += r.point_count;
        }
        Ok(WeakCombinatorics {
            degree_counts,
            sing_counts,
        })
    }

    pub fn levi_graph(&self, mode: PointMode) -> Result<LeviGraph, ArrangeError> {
        let locus = self.singular_points(mode)?;
        let mut point_incidences = Vec::new();
        for r in &locus.records {
            for _ in 0..r.point_count {
                point_incidences.push(r.incident.clone());
            }
        }
        Ok(LeviGraph {
            component_count: self.components.len(),
            point_incidences,
        })
    }
}

// Failure channel that can request a single sqrt adjunction.
enum PointFailure {
    NeedSqrt(Rational),
    WithError(ArrangeError),
}
use PointFailure::{NeedSqrt, WithError};

fn conic_matrix_det(p: &HomogPoly) -> FieldElement {
    use crate::polyring::Monomial;
    let field = p.field();
    let half = Rational::new(1.into(), 2.into());
    let c = |a: u16, b: u16, cc: u16| p.coeff(&Monomial::new(a, b, cc));
    let m00 = c(2, 0, 0);
    let m11 = c(0, 2, 0);
    let m22 = c(0, 0, 2);
    let m01 = c(1, 1, 0).scale(&half);
    let m02 = c(1, 0, 1).scale(&half);
    let m12 = c(0, 1, 1).scale(&half);
    let mat = Mat3::from_rows([
        [m00, m01.clone(), m02.clone()],
        [m01, m11, m12.clone()],
        [m02, m12, m22],
    ]);
    let _ = field;
    mat.det()
}

/// Intersection point of two distinct lines, by cross product.
fn line_line_point(l1: &HomogPoly, l2: &HomogPoly) -> ProjPoint {
    let a = line_coeffs(l1);
    let b = line_coeffs(l2);
    let cross = [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ];
    ProjPoint::new(cross)
}

fn line_coeffs(l: &HomogPoly) -> [FieldElement; 3] {
    use crate::polyring::Monomial;
    [
        l.coeff(&Monomial::new(1, 0, 0)),
        l.coeff(&Monomial::new(0, 1, 0)),
        l.coeff(&Monomial::new(0, 0, 1)),
    ]
}

/// Two independent points spanning the line, deterministic.
fn line_basis(l: &HomogPoly) -> ([FieldElement; 3], [FieldElement; 3]) {
    use crate::exactla::Matrix;
    let field = l.field();
    let coeffs = line_coeffs(l);
    let m = Matrix::from_rows(field, vec![coeffs.to_vec()]);
    let kernel = m.kernel_basis();
    assert_eq!(kernel.len(), 2);
    (
        [
            kernel[0][0].clone(),
            kernel[0][1].clone(),
            kernel[0][2].clone(),
        ],
        [
            kernel[1][0].clone(),
            kernel[1][1].clone(),
            kernel[1][2].clone(),
        ],
    )
}

/// Substitute the line parametrization base + t*dir into a form, producing a
/// univariate polynomial in t.
fn substitute_param(
    p: &HomogPoly,
    base: &[FieldElement; 3],
    dir: &[FieldElement; 3],
) -> UniPoly {
    let field = p.field();
    let d = p.degree();
    let mut out = vec![FieldElement::zero(field); d + 1];
    // Binomial expansion per coordinate power: (base_i + t dir_i)^e.
    for (m, c) in p.terms() {
        // Polynomial in t for this monomial.
        let mut term = UniPoly::constant(field, c.clone());
        for v in 0..3 {
            for _ in 0..m.exps[v] {
                let lin = UniPoly::new(field, vec![base[v].clone(), dir[v].clone()]);
                term = term.mul(&lin);
            }
        }
        for (i, tc) in term.coeffs.iter().enumerate() {
            out[i] = &out[i] + tc;
        }
    }
    UniPoly::new(field, out)
}

fn param_point(
    base: &[FieldElement; 3],
    dir: &[FieldElement; 3],
    t: &FieldElement,
) -> ProjPoint {
    ProjPoint::new([
        &base[0] + &(&dir[0] * t),
        &base[1] + &(&dir[1] * t),
        &base[2] + &(&dir[2] * t),
    ])
}

struct FieldSplit {
    roots: Vec<FieldElement>,
    quadratics: Vec<UniPoly>,
    unsupported: Option<usize>,
}

/// Split a squarefree polynomial over the field into linear factors where
/// possible, collecting irreducible quadratics and flagging anything worse.
fn split_in_field(p: &UniPoly) -> Result<FieldSplit, ArrangeError> {
    let mut roots = Vec::new();
    let mut quadratics = Vec::new();
    let mut unsupported = None;
    let mut stack = vec![p.monic()];
    while let Some(h) = stack.pop() {
        match h.deg() {
            d if d <= 0 => {}
            1 => {
                roots.push(h.coeffs[0].neg().checked_div(&h.coeffs[1]).unwrap());
            }
            2 => match quadratic_roots_in_field(&h) {
                Ok(Some(rs)) => roots.extend(rs),
                Ok(None) => quadratics.push(h),
                Err(FieldError::SqrtUnsupported(_)) => {
                    unsupported = Some(2);
                }
                Err(e) => return Err(ArrangeError::Field(e)),
            },
            d @ (3 | 4) => {
                if h.is_rational() {
                    let rs = rational_roots(&h);
                    if !rs.is_empty() {
                        let mut rem = h.clone();
                        for r in rs {
                            let root = FieldElement::from_rational(&rem.field, r);
                            let lin = UniPoly::new(
                                &rem.field,
                                vec![root.neg(), FieldElement::one(&rem.field)],
                            );
                            rem = rem.div_exact(&lin);
                            roots.push(root);
                        }
                        stack.push(rem);
                    } else if d == 4 {
                        if let Some((a, b)) = rational_quartic_split(&h) {
                            stack.push(a);
                            stack.push(b);
                        } else {
                            unsupported = Some(4);
                        }
                    } else {
                        unsupported = Some(3);
                    }
                } else {
                    unsupported = Some(d as usize);
                }
            }
            d => {
                unsupported = Some(d as usize);
            }
        }
    }
    Ok(FieldSplit {
        roots,
        quadratics,
        unsupported,
    })
}

/// Discriminant of a rational-coefficient quadratic, for sqrt adjunction.
fn rational_quad_disc(q: &UniPoly) -> Rational {
    let a = q.coeffs[2].as_rational().expect("rational quadratic").clone();
    let b = q.coeffs[1].as_rational().expect("rational quadratic").clone();
    let c = q.coeffs[0].as_rational().expect("rational quadratic").clone();
    &b * &b - Rational::from_integer(4.into()) * &a * &c
}

/// Resultant of two conics with respect to x, as a binary quartic (or lower)
/// form in (y, z) encoded as a HomogPoly in y, z only.
fn resultant_in_x(c1: &HomogPoly, c2: &HomogPoly) -> HomogPoly {
    let field = c1.field();
    // Write ci = a x^2 + b x + c with a constant, b linear, c quadratic.
    let decompose = |p: &HomogPoly| {
        let mut a = HomogPoly::zero(field, 0);
        let mut b = HomogPoly::zero(field, 1);
        let mut c = HomogPoly::zero(field, 2);
        for (m, coef) in p.terms() {
            let rest = crate::polyring::Monomial::new(0, m.exps[1], m.exps[2]);
            let t = |deg: usize| {
                HomogPoly::from_terms(field, deg, [(rest, coef.clone())])
            };
            match m.exps[0] {
                2 => a = a.add(&t(0)).unwrap(),
                1 => b = b.add(&t(1)).unwrap(),
                0 => c = c.add(&t(2)).unwrap(),
                _ => unreachable!("conic degree"),
            }
        }
        (a, b, c)
    };
    let (a1, b1, c1q) = decompose(c1);
    let (a2, b2, c2q) = decompose(c2);
    let dx1 = if !a1.is_zero() { 2 } else if !b1.is_zero() { 1 } else { 0 };
    let dx2 = if !a2.is_zero() { 2 } else if !b2.is_zero() { 1 } else { 0 };
    let mul = |p: &HomogPoly, q: &HomogPoly| p.mul(q).unwrap();
    let sub = |p: &HomogPoly, q: &HomogPoly| p.sub(q).unwrap();
    match (dx1, dx2) {
        (2, 2) => {
            // (a1 c2 - a2 c1)^2 - (a1 b2 - a2 b1)(b1 c2 - b2 c1)
            let ac = sub(&mul(&a1, &c2q), &mul(&a2, &c1q));
            let ab = sub(&mul(&a1, &b2), &mul(&a2, &b1));
            let bc = sub(&mul(&b1, &c2q), &mul(&b2, &c1q));
            sub(&mul(&ac, &ac), &mul(&ab, &bc))
        }
        (2, 1) => res_21(&a1, &b1, &c1q, &b2, &c2q),
        (1, 2) => res_21(&a2, &b2, &c2q, &b1, &c1q),
        (1, 1) => sub(&mul(&b1, &c2q), &mul(&b2, &c1q)),
        (2, 0) | (0, 2) | (1, 0) | (0, 1) | (0, 0) => {
            // One conic is x-free: its own form (in y, z) cuts the candidate
            // projections directly.
            if dx1 == 0 {
                c1q
            } else {
                c2q
            }
        }
        _ => unreachable!(),
    }
}

/// Res_x(a x^2 + b x + c, B x + C) = a C^2 - b B C + c B^2.
fn res_21(
    a: &HomogPoly,
    b: &HomogPoly,
    c: &HomogPoly,
    bb: &HomogPoly,
    cc: &HomogPoly,
) -> HomogPoly {
    let t1 = a.mul(&cc.mul(cc).unwrap()).unwrap();
    let t2 = b.mul(&bb.mul(cc).unwrap()).unwrap();
    let t3 = c.mul(&bb.mul(bb).unwrap()).unwrap();
    t1.sub(&t2).unwrap().add(&t3).unwrap()
}

/// Split a binary form in (y, z) into its z-power and the dehomogenized
/// univariate polynomial in y.
fn binary_form_split(p: &HomogPoly, field: &Field) -> (usize, UniPoly) {
    if p.is_zero() {
        return (0, UniPoly::zero(field));
    }
    let deg = p.degree();
    // Coefficient of y^i z^(deg - i).
    let mut coeffs = vec![FieldElement::zero(field); deg + 1];
    for (m, c) in p.terms() {
        assert_eq!(m.exps[0], 0, "binary form must be x-free");
        coeffs[m.exps[1] as usize] = c.clone();
    }
    // Trailing z-power = highest y-degree missing from the top.
    let top = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .expect("nonzero form");
    let z_mult = deg - top;
    (z_mult, UniPoly::new(field, coeffs[..=top].to_vec()))
}

/// Specialize a conic at (y0, z0), producing a univariate polynomial in x.
fn specialize_x_poly(p: &HomogPoly, y0: &FieldElement, z0: &FieldElement) -> UniPoly {
    let field = p.field();
    let dx = p
        .terms()
        .map(|(m, _)| m.exps[0] as usize)
        .max()
        .unwrap_or(0);
    let mut out = vec![FieldElement::zero(field); dx + 1];
    for (m, c) in p.terms() {
        let t = c
            .checked_mul(&y0.pow(m.exps[1] as u32))
            .unwrap()
            .checked_mul(&z0.pow(m.exps[2] as u32))
            .unwrap();
        out[m.exps[0] as usize] = &out[m.exps[0] as usize] + &t;
    }
    UniPoly::new(field, out)
}

/// Transversality of two components at the conjugate points defined by
/// base + t*dir with q(t) = 0: the 2x2 minors of the two gradients must not
/// all vanish in K[t]/(q).
fn gradients_transverse_mod(
    p1: &HomogPoly,
    p2: &HomogPoly,
    base: &[FieldElement; 3],
    dir: &[FieldElement; 3],
    q: &UniPoly,
) -> bool {
    let field = p1.field();
    let grad = |p: &HomogPoly, v: usize| {
        let g = p.partial_derivative(v);
        substitute_param(&g, base, dir).divrem(q).1
    };
    let g1: Vec<UniPoly> = (0..3).map(|v| grad(p1, v)).collect();
    let g2: Vec<UniPoly> = (0..3).map(|v| grad(p2, v)).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            let minor = g1[i]
                .mul(&g2[j])
                .sub(&g1[j].mul(&g2[i]))
                .divrem(q)
                .1;
            if !minor.is_zero() {
                return true;
            }
        }
    }
    let _ = field;
    false
}

// ---- lattice isomorphism ----

/// Color-preserving bipartite isomorphism of Levi graphs, by backtracking
/// over component bijections with iterated-refinement pruning.
pub fn lattice_isomorphic(a: &LeviGraph, b: &LeviGraph) -> bool {
    if a.component_count != b.component_count
        || a.point_count() != b.point_count()
        || a.edge_count() != b.edge_count()
    {
        return false;
    }
    let n = a.component_count;
    // Multiset of point incidence sets, as sorted keys with multiplicity.
    let sets_b = incidence_multiset(b);
    // Refinement colors: start from the multiset of incident point degrees.
    let color_a = component_colors(a);
    let color_b = component_colors(b);
    {
        let mut ca = color_a.clone();
        let mut cb = color_b.clone();
        ca.sort();
        cb.sort();
        if ca != cb {
            return false;
        }
    }
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    backtrack(a, &sets_b, &color_a, &color_b, &mut assignment, &mut used, 0)
}

fn incidence_multiset(g: &LeviGraph) -> BTreeMap<Vec<usize>, usize> {
    let mut out = BTreeMap::new();
    for s in &g.point_incidences {
        let mut k = s.clone();
        k.sort_unstable();
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

/// Iterated neighborhood-degree refinement, three rounds.
fn component_colors(g: &LeviGraph) -> Vec<u64> {
    let n = g.component_count;
    let mut comp_color: Vec<u64> = vec![0; n];
    let mut point_color: Vec<u64> = g.point_incidences.iter().map(|s| s.len() as u64).collect();
    for _ in 0..3 {
        let mut next_comp: Vec<u64> = Vec::with_capacity(n);
        for ci in 0..n {
            let mut neigh: Vec<u64> = g
                .point_incidences
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains(&ci))
                .map(|(pi, _)| point_color[pi])
                .collect();
            neigh.sort_unstable();
            next_comp.push(hash_seq(comp_color[ci], &neigh));
        }
        let next_point: Vec<u64> = g
            .point_incidences
            .iter()
            .enumerate()
            .map(|(pi, s)| {
                let mut neigh: Vec<u64> = s.iter().map(|&ci| next_comp[ci]).collect();
                neigh.sort_unstable();
                hash_seq(point_color[pi], &neigh)
            })
            .collect();
        comp_color = next_comp;
        point_color = next_point;
    }
    comp_color
}

fn hash_seq(seed: u64, xs: &[u64]) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &x in xs {
        h = h
            .wrapping_mul(0x100_0000_01b3)
            .wrapping_add(x.rotate_left(17) ^ 0xff51_afd7_ed55_8ccd);
    }
    h
}

fn backtrack(
    a: &LeviGraph,
    sets_b: &BTreeMap<Vec<usize>, usize>,
    color_a: &[u64],
    color_b: &[u64],
    assignment: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    idx: usize,
) -> bool {
    let n = a.component_count;
    if idx == n {
        // Verify the induced point-set multiset.
        let mut mapped: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for s in &a.point_incidences {
            let mut k: Vec<usize> = s.iter().map(|&c| assignment[c].unwrap()).collect();
            k.sort_unstable();
            *mapped.entry(k).or_insert(0) += 1;
        }
        return &mapped == sets_b;
    }
    for cand in 0..n {
        if used[cand] || color_b[cand] != color_a[idx] {
            continue;
        }
        assignment[idx] = Some(cand);
        used[cand] = true;
        // Prune: every fully-mapped point set of A must exist in B.
        let mut feasible = true;
        'points: for s in &a.point_incidences {
            if s.iter().any(|&c| assignment[c].is_none()) {
                continue;
            }
            let mut k: Vec<usize> = s.iter().map(|&c| assignment[c].unwrap()).collect();
            k.sort_unstable();
            if !sets_b.contains_key(&k) {
                feasible = false;
                break 'points;
            }
        }
        if feasible && backtrack(a, sets_b, color_a, color_b, assignment, used, idx + 1) {
            return true;
        }
        assignment[idx] = None;
        used[cand] = false;
    }
    false
}

// ---- Ziegler detectors ----

pub fn ziegler_pair(
    a: &Arrangement,
    b: &Arrangement,
    variant: ZieglerVariant,
) -> Result<PairVerdict, ArrangeError> {
    if !a.is_line_arrangement() || !b.is_line_arrangement() {
        return Err(ArrangeError::NotLineArrangement);
    }
    let ga = a.levi_graph(PointMode::Exact)?;
    let gb = b.levi_graph(PointMode::Exact)?;
    if !lattice_isomorphic(&ga, &gb) {
        return Ok(PairVerdict::NotPair {
            reason: "intersection lattices are not isomorphic".into(),
        });
    }
    compare_ar_data(a, b, variant, "isomorphic intersection lattices")
}

pub fn weak_ziegler_pair(
    a: &Arrangement,
    b: &Arrangement,
    variant: ZieglerVariant,
) -> Result<PairVerdict, ArrangeError> {
    let wa = a.weak_combinatorics(PointMode::Aggregate)?;
    let wb = b.weak_combinatorics(PointMode::Aggregate)?;
    if wa != wb {
        return Ok(PairVerdict::NotPair {
            reason: "weak-combinatorics differ".into(),
        });
    }
    compare_ar_data(a, b, variant, "equal weak-combinatorics")
}

fn compare_ar_data(
    a: &Arrangement,
    b: &Arrangement,
    variant: ZieglerVariant,
    agreement: &str,
) -> Result<PairVerdict, ArrangeError> {
    let ja = a.jacobian()?;
    let jb = b.jacobian()?;
    match variant {
        ZieglerVariant::Mdr => {
            let ma = ja.mdr();
            let mb = jb.mdr();
            if ma != mb {
                Ok(PairVerdict::IsPair {
                    detail: format!("{}, mdr {} vs {}", agreement, ma, mb),
                })
            } else {
                Ok(PairVerdict::NotPair {
                    reason: format!("{} and equal mdr {}", agreement, ma),
                })
            }
        }
        ZieglerVariant::ArModule => {
            let ra = &ja.resolution()?.resolution;
            let rb = &jb.resolution()?.resolution;
            if ra != rb {
                Ok(PairVerdict::IsPair {
                    detail: format!(
                        "{}, AR degree data {:?}/{:?} vs {:?}/{:?}",
                        agreement,
                        ra.generator_degrees,
                        ra.relation_degrees,
                        rb.generator_degrees,
                        rb.relation_degrees
                    ),
                })
            } else {
                Ok(PairVerdict::NotPair {
                    reason: format!("{} and identical AR degree data", agreement),
                })
            }
        }
    }
}
