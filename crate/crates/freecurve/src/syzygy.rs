//! The homological core: the module AR(f) of Jacobian relations, its minimal
//! generator and relation degrees, the total Tjurina number, freeness and
//! nearly-freeness criteria, the Saito determinant check, and the full
//! classification record.
//!
//! For a reduced curve f of degree d the graded piece AR(f)_r is the kernel
//! of (a,b,c) |-> a f_x + b f_y + c f_z from S_r^3 to S_{r+d-1}. Generators
//! and relations are found degree by degree; completeness is certified by the
//! dimension count dim AR(f)_r = sum_i dim S_{r-d_i} - sum_j dim S_{r-e_j}
//! holding at three consecutive probe degrees above every shift.

use crate::exactla::Matrix;
use crate::numfield::{Field, FieldElement};
use crate::polyring::{
    dim_graded, graded_monomials, monomial_index, HomogPoly, PolyError,
};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SyzygyError {
    #[error("curve is not reduced")]
    NotReduced,
    #[error("generator search exceeded the degree budget {0}")]
    BudgetExceeded(usize),
    #[error("generator/relation count mismatch: {generators} generators, {relations} relations")]
    RankMismatch { generators: usize, relations: usize },
    #[error("Jacobian cokernel dimension failed to stabilize")]
    StabilizationFailure,
    #[error("numeric criterion and resolution shape disagree: {0}")]
    ShapeContradiction(String),
    #[error("the given vector is not a Jacobian relation")]
    NotASyzygy,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A homogeneous element of AR(f): components (a, b, c) with
/// a f_x + b f_y + c f_z = 0. The membership identity is checked at
/// construction and stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SyzygyVector {
    pub degree: usize,
    pub components: [HomogPoly; 3],
}

impl SyzygyVector {
    pub fn new(jac: &CurveJacobian, components: [HomogPoly; 3]) -> Result<Self, SyzygyError> {
        let degree = components[0].degree();
        let v = SyzygyVector { degree, components };
        if !jac.is_syzygy(&v) {
            return Err(SyzygyError::NotASyzygy);
        }
        Ok(v)
    }
}

/// Degree data of the minimal resolution of AR(f):
/// 0 -> (+)_j S(-e_j) -> (+)_i S(-d_i) -> AR(f) -> 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub generator_degrees: Vec<usize>,
    pub relation_degrees: Vec<usize>,
}

impl Resolution {
    pub fn syzygy_count(&self) -> usize {
        self.generator_degrees.len()
    }

    /// Hilbert function of AR(f) predicted by the resolution.
    pub fn ar_dimension_at(&self, r: isize) -> isize {
        let gens: isize = self
            .generator_degrees
            .iter()
            .map(|&d| dim_graded(r - d as isize) as isize)
            .sum();
        let rels: isize = self
            .relation_degrees
            .iter()
            .map(|&e| dim_graded(r - e as isize) as isize)
            .sum();
        gens - rels
    }

    /// Total Tjurina number from the Hilbert alternating sum, evaluated in
    /// the stable range (k = 3d - 5, re-checked at k + 1).
    pub fn tau(&self, d: usize) -> usize {
        if d == 1 {
            return 0;
        }
        let at = |k: isize| -> isize {
            let r = k - d as isize + 1;
            dim_graded(k) as isize - 3 * dim_graded(r) as isize + self.ar_dimension_at(r)
        };
        let k = 3 * d as isize - 5;
        let t0 = at(k);
        let t1 = at(k + 1);
        assert_eq!(t0, t1, "alternating sum not stable at k = 3d-5");
        assert!(t0 >= 0);
        t0 as usize
    }

    /// Resolution in arrow notation, e.g.
    /// `0 -> S(-7)+S(-6) -> S(-6)+S(-5)^2+S(-4) -> AR(f)`.
    pub fn display(&self) -> String {
        let group = |degs: &[usize]| -> String {
            let mut counts: Vec<(usize, usize)> = Vec::new();
            let mut sorted = degs.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            for d in sorted {
                match counts.last_mut() {
                    Some((deg, c)) if *deg == d => *c += 1,
                    _ => counts.push((d, 1)),
                }
            }
            counts
                .iter()
                .map(|&(d, c)| {
                    if c == 1 {
                        format!("S(-{})", d)
                    } else {
                        format!("S(-{})^{}", d, c)
                    }
                })
                .collect::<Vec<_>>()
                .join("+")
        };
        if self.relation_degrees.is_empty() {
            format!("0 -> {} -> AR(f)", group(&self.generator_degrees))
        } else {
            format!(
                "0 -> {} -> {} -> AR(f)",
                group(&self.relation_degrees),
                group(&self.generator_degrees)
            )
        }
    }
}

/// A minimal relation among the chosen generators: coefficients h_i with
/// sum_i h_i g_i = 0, h_i homogeneous of degree `degree - d_i`.
#[derive(Debug, Clone)]
pub struct RelationVector {
    pub degree: usize,
    pub coeffs: Vec<HomogPoly>,
}

/// Full output of the resolution search.
#[derive(Debug, Clone)]
pub struct ArResolution {
    pub generators: Vec<SyzygyVector>,
    pub relations: Vec<RelationVector>,
    pub resolution: Resolution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveClass {
    Smooth,
    Free,
    NearlyFree,
    MSyzygy(usize),
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveClass::Smooth => write!(f, "smooth"),
            CurveClass::Free => write!(f, "free"),
            CurveClass::NearlyFree => write!(f, "nearly-free"),
            CurveClass::MSyzygy(m) => write!(f, "{}-syzygy", m),
        }
    }
}

impl Serialize for CurveClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subtype {
    None,
    TwoA,
    TwoB,
}

impl fmt::Display for Subtype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subtype::None => write!(f, "none"),
            Subtype::TwoA => write!(f, "2A"),
            Subtype::TwoB => write!(f, "2B"),
        }
    }
}

impl Serialize for Subtype {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Classification record for one reduced curve.
#[derive(Debug, Clone, Serialize)]
pub struct CurveAnalysis {
    pub degree: usize,
    pub mdr: usize,
    pub tau: usize,
    pub resolution: Resolution,
    pub class: CurveClass,
    pub type_k: isize,
    pub subtype: Subtype,
    pub warnings: Vec<String>,
}

impl CurveAnalysis {
    pub fn exponents(&self) -> &[usize] {
        &self.resolution.generator_degrees
    }
}

/// Precomputed Jacobian data for one reduced curve, with memoized graded
/// dimensions, mdr and resolution. Construction checks reducedness.
#[derive(Debug)]
pub struct CurveJacobian {
    f: HomogPoly,
    d: usize,
    partials: [HomogPoly; 3],
    field: Field,
    ar_dims: Mutex<HashMap<usize, usize>>,
    mdr_cache: OnceLock<usize>,
    resolution_cache: OnceLock<Result<ArResolution, SyzygyError>>,
}

impl CurveJacobian {
    pub fn new(f: &HomogPoly) -> Result<Self, SyzygyError> {
        assert!(f.degree() >= 1, "curve degree must be at least 1");
        if f.is_zero() || !f.is_reduced() {
            return Err(SyzygyError::NotReduced);
        }
        Ok(CurveJacobian {
            f: f.clone(),
            d: f.degree(),
            partials: [
                f.partial_derivative(0),
                f.partial_derivative(1),
                f.partial_derivative(2),
            ],
            field: f.field().clone(),
            ar_dims: Mutex::new(HashMap::new()),
            mdr_cache: OnceLock::new(),
            resolution_cache: OnceLock::new(),
        })
    }

    pub fn curve(&self) -> &HomogPoly {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn partials(&self) -> &[HomogPoly; 3] {
        &self.partials
    }

    pub fn is_syzygy(&self, v: &SyzygyVector) -> bool {
        let mut acc = HomogPoly::zero(&self.field, v.degree + self.d - 1);
        for i in 0..3 {
            // A zero component belongs to every graded piece.
            if v.components[i].is_zero() {
                continue;
            }
            if v.components[i].degree() != v.degree {
                return false;
            }
            let t = match v.components[i].mul(&self.partials[i]) {
                Ok(t) => t,
                Err(_) => return false,
            };
            acc = acc.add(&t).expect("degrees match");
        }
        acc.is_zero()
    }

    /// Matrix of (a,b,c) |-> a f_x + b f_y + c f_z on degree-r coefficients.
    /// Rows: monomials of degree r + d - 1; columns: three blocks of
    /// monomials of degree r.
    fn ar_matrix(&self, r: usize) -> Matrix {
        let target = r + self.d - 1;
        let rows = dim_graded(target as isize);
        let cols = 3 * dim_graded(r as isize);
        let mut m = Matrix::zero(&self.field, rows, cols);
        let monos = graded_monomials(r);
        let block = monos.len();
        for slot in 0..3 {
            for (ci, mono) in monos.iter().enumerate() {
                let col = slot * block + ci;
                for (pm, pc) in self.partials[slot].terms() {
                    let m2 = mono.mul(pm);
                    m.set(monomial_index(target, &m2), col, pc.clone());
                }
            }
        }
        m
    }

    /// dim AR(f)_r.
    pub fn ar_dimension(&self, r: usize) -> usize {
        if let Some(&v) = self.ar_dims.lock().unwrap().get(&r) {
            return v;
        }
        let m = self.ar_matrix(r);
        let v = m.cols() - m.rank();
        self.ar_dims.lock().unwrap().insert(r, v);
        v
    }

    /// Basis of AR(f)_r as syzygy vectors.
    pub fn ar_kernel(&self, r: usize) -> Vec<SyzygyVector> {
        let m = self.ar_matrix(r);
        m.kernel_basis()
            .into_iter()
            .map(|v| self.vector_to_syzygy(r, &v))
            .collect()
    }

    fn vector_to_syzygy(&self, r: usize, v: &[FieldElement]) -> SyzygyVector {
        let monos = graded_monomials(r);
        let block = monos.len();
        let comp = |slot: usize| {
            HomogPoly::from_terms(
                &self.field,
                r,
                monos
                    .iter()
                    .enumerate()
                    .map(|(i, m)| (*m, v[slot * block + i].clone())),
            )
        };
        let sv = SyzygyVector {
            degree: r,
            components: [comp(0), comp(1), comp(2)],
        };
        debug_assert!(self.is_syzygy(&sv));
        sv
    }

    fn syzygy_to_vector(&self, s: &SyzygyVector, r: usize) -> Vec<FieldElement> {
        let block = dim_graded(r as isize);
        let mut v = vec![FieldElement::zero(&self.field); 3 * block];
        for slot in 0..3 {
            for (m, c) in s.components[slot].terms() {
                v[slot * block + monomial_index(r, m)] = c.clone();
            }
        }
        v
    }

    /// Least r with AR(f)_r nonzero; bounded by d - 1 (Koszul relations).
    pub fn mdr(&self) -> usize {
        *self.mdr_cache.get_or_init(|| {
            for r in 0..self.d {
                if self.ar_dimension(r) > 0 {
                    return r;
                }
            }
            unreachable!("Koszul relations live in degree d-1");
        })
    }

    /// Minimal generators and relations of AR(f), certified by the dimension
    /// count at three consecutive probe degrees above all shifts.
    pub fn resolution(&self) -> Result<&ArResolution, SyzygyError> {
        self.resolution_cache
            .get_or_init(|| self.compute_resolution())
            .as_ref()
            .map_err(|e| e.clone())
    }

    fn compute_resolution(&self) -> Result<ArResolution, SyzygyError> {
        let cap = 3 * self.d;
        let mut gens: Vec<SyzygyVector> = Vec::new();
        let mut rels: Vec<RelationVector> = Vec::new();
        let mut streak = 0usize;
        for r in 0..=cap {
            // Generators: completions of the span of lower-degree generator
            // multiples inside AR(f)_r.
            let n_r = self.ar_dimension(r);
            let span_rows: Vec<Vec<FieldElement>> = self.generator_multiple_rows(&gens, r);
            let s_r = self.rank_of_rows(&span_rows, 3 * dim_graded(r as isize));
            assert!(n_r >= s_r, "generator span exceeds AR dimension");
            let new_gens = n_r - s_r;
            if new_gens > 0 {
                let kernel = self.ar_kernel(r);
                let kernel_vecs: Vec<Vec<FieldElement>> = kernel
                    .iter()
                    .map(|s| self.syzygy_to_vector(s, r))
                    .collect();
                let reps = echelon_complement(&self.field, span_rows.clone(), &kernel_vecs);
                assert_eq!(reps.len(), new_gens, "representative count");
                for v in reps {
                    gens.push(self.vector_to_syzygy(r, &v));
                }
            }
            // Relations among the current generators in degree r.
            let mut new_rels = 0usize;
            if gens.len() >= 2 {
                let (g_matrix, offsets) = self.relation_matrix(&gens, r);
                let ker_dim = g_matrix.cols() - g_matrix.rank();
                let rel_span = self.relation_multiple_rows(&rels, &gens, r, &offsets);
                let t_r = self.rank_of_rows(&rel_span, g_matrix.cols());
                assert!(ker_dim >= t_r);
                new_rels = ker_dim - t_r;
                if new_rels > 0 {
                    let kernel = g_matrix.kernel_basis();
                    let reps = echelon_complement(&self.field, rel_span, &kernel);
                    assert_eq!(reps.len(), new_rels);
                    for v in reps {
                        rels.push(self.vector_to_relation(&gens, r, &v, &offsets));
                    }
                }
            }
            // Certificate: three consecutive degrees above every shift where
            // nothing new appears and the dimension count matches.
            let max_shift = gens
                .iter()
                .map(|g| g.degree)
                .chain(rels.iter().map(|q| q.degree))
                .max()
                .unwrap_or(0);
            let complete_shape = gens.len() >= 2 && gens.len() == rels.len() + 2;
            if complete_shape && r > max_shift && new_gens == 0 && new_rels == 0 {
                let predicted = partial_resolution(&gens, &rels).ar_dimension_at(r as isize);
                if predicted == n_r as isize {
                    streak += 1;
                    if streak == 3 {
                        let resolution = partial_resolution(&gens, &rels);
                        for &e in &resolution.relation_degrees {
                            assert!(
                                e > resolution.generator_degrees[0],
                                "relation degree must exceed the minimal generator degree"
                            );
                        }
                        return Ok(ArResolution {
                            generators: gens,
                            relations: rels,
                            resolution,
                        });
                    }
                } else {
                    streak = 0;
                }
            } else {
                streak = 0;
            }
        }
        if gens.len() != rels.len() + 2 {
            return Err(SyzygyError::RankMismatch {
                generators: gens.len(),
                relations: rels.len(),
            });
        }
        Err(SyzygyError::BudgetExceeded(cap))
    }

    fn rank_of_rows(&self, rows: &[Vec<FieldElement>], cols: usize) -> usize {
        if rows.is_empty() {
            return 0;
        }
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix::from_rows(&self.field, rows.to_vec()).rank()
    }

    /// Coefficient rows of all monomial multiples of the generators that land
    /// in AR(f)_r.
    fn generator_multiple_rows(
        &self,
        gens: &[SyzygyVector],
        r: usize,
    ) -> Vec<Vec<FieldElement>> {
        let mut rows = Vec::new();
        for g in gens {
            if g.degree > r {
                continue;
            }
            for m in graded_monomials(r - g.degree) {
                let mono = HomogPoly::from_terms(
                    &self.field,
                    r - g.degree,
                    [(m, FieldElement::one(&self.field))],
                );
                let shifted = SyzygyVector {
                    degree: r,
                    components: [
                        g.components[0].mul(&mono).unwrap(),
                        g.components[1].mul(&mono).unwrap(),
                        g.components[2].mul(&mono).unwrap(),
                    ],
                };
                rows.push(self.syzygy_to_vector(&shifted, r));
            }
        }
        rows
    }

    /// Matrix of (h_1..h_m) |-> sum h_i g_i in degree r. Column blocks are
    /// indexed per generator by the degree r - d_i monomial basis; `offsets`
    /// records each generator's starting column.
    fn relation_matrix(&self, gens: &[SyzygyVector], r: usize) -> (Matrix, Vec<usize>) {
        let block = dim_graded(r as isize);
        let mut offsets = Vec::with_capacity(gens.len());
        let mut total = 0usize;
        for g in gens {
            offsets.push(total);
            total += dim_graded(r as isize - g.degree as isize);
        }
        let mut m = Matrix::zero(&self.field, 3 * block, total);
        for (gi, g) in gens.iter().enumerate() {
            if g.degree > r {
                continue;
            }
            for (mi, mono) in graded_monomials(r - g.degree).iter().enumerate() {
                let col = offsets[gi] + mi;
                for slot in 0..3 {
                    for (pm, pc) in g.components[slot].terms() {
                        let target = mono.mul(pm);
                        m.set(
                            slot * block + monomial_index(r, &target),
                            col,
                            pc.clone(),
                        );
                    }
                }
            }
        }
        (m, offsets)
    }

    /// Rows spanned by monomial multiples of the known relations inside the
    /// domain of `relation_matrix` at degree r.
    fn relation_multiple_rows(
        &self,
        rels: &[RelationVector],
        gens: &[SyzygyVector],
        r: usize,
        offsets: &[usize],
    ) -> Vec<Vec<FieldElement>> {
        let total = offsets
            .last()
            .map(|&o| {
                o + dim_graded(r as isize - gens.last().unwrap().degree as isize)
            })
            .unwrap_or(0);
        let mut rows = Vec::new();
        for rel in rels {
            if rel.degree > r {
                continue;
            }
            for m in graded_monomials(r - rel.degree) {
                let mono = HomogPoly::from_terms(
                    &self.field,
                    r - rel.degree,
                    [(m, FieldElement::one(&self.field))],
                );
                let mut row = vec![FieldElement::zero(&self.field); total];
                for (gi, h) in rel.coeffs.iter().enumerate() {
                    if h.is_zero() {
                        continue;
                    }
                    let shifted = h.mul(&mono).unwrap();
                    let deg_i = r - gens[gi].degree;
                    for (tm, tc) in shifted.terms() {
                        row[offsets[gi] + monomial_index(deg_i, tm)] = tc.clone();
                    }
                }
                rows.push(row);
            }
        }
        rows
    }

    fn vector_to_relation(
        &self,
        gens: &[SyzygyVector],
        r: usize,
        v: &[FieldElement],
        offsets: &[usize],
    ) -> RelationVector {
        let coeffs: Vec<HomogPoly> = gens
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                if g.degree > r {
                    return HomogPoly::zero(&self.field, 0);
                }
                let deg = r - g.degree;
                let monos = graded_monomials(deg);
                HomogPoly::from_terms(
                    &self.field,
                    deg,
                    monos
                        .iter()
                        .enumerate()
                        .map(|(i, m)| (*m, v[offsets[gi] + i].clone())),
                )
            })
            .collect();
        // Verify sum h_i g_i = 0 componentwise.
        let mut acc = [
            HomogPoly::zero(&self.field, r),
            HomogPoly::zero(&self.field, r),
            HomogPoly::zero(&self.field, r),
        ];
        for (gi, g) in gens.iter().enumerate() {
            if coeffs[gi].is_zero() {
                continue;
            }
            for slot in 0..3 {
                let t = coeffs[gi].mul(&g.components[slot]).unwrap();
                acc[slot] = acc[slot].add(&t).unwrap();
            }
        }
        assert!(
            acc.iter().all(|p| p.is_zero()),
            "relation verification failed"
        );
        RelationVector { degree: r, coeffs }
    }

    /// Degrees of a minimal generating set of AR(f).
    pub fn minimal_generator_degrees(&self) -> Result<Vec<usize>, SyzygyError> {
        Ok(self.resolution()?.resolution.generator_degrees.clone())
    }

    /// Degrees of the minimal first syzygies among the chosen generators.
    pub fn syzygy_degrees(&self) -> Result<Vec<usize>, SyzygyError> {
        let res = self.resolution()?;
        let m = res.resolution.generator_degrees.len();
        let q = res.resolution.relation_degrees.len();
        if m != q + 2 {
            return Err(SyzygyError::RankMismatch {
                generators: m,
                relations: q,
            });
        }
        Ok(res.resolution.relation_degrees.clone())
    }

    /// Total Tjurina number as the stabilized dimension of the degree-k piece
    /// of the Jacobian cokernel, starting at k = 3d - 5.
    pub fn total_tjurina(&self) -> Result<usize, SyzygyError> {
        if self.d == 1 {
            return Ok(0);
        }
        let dim_at = |k: isize| -> isize {
            let r = k - self.d as isize + 1;
            let ar = if r < 0 {
                0
            } else {
                self.ar_dimension(r as usize) as isize
            };
            dim_graded(k) as isize - 3 * dim_graded(r) as isize + ar
        };
        let start = (3 * self.d as isize - 5).max(self.d as isize - 1);
        let cap = 6 * self.d as isize;
        let mut k = start;
        let mut prev = dim_at(k);
        while k < cap {
            k += 1;
            let cur = dim_at(k);
            if cur == prev {
                assert!(prev >= 0);
                return Ok(prev as usize);
            }
            prev = cur;
        }
        Err(SyzygyError::StabilizationFailure)
    }

    /// du Plessis-Wall freeness test; on success the witness exponents are
    /// (mdr, d - 1 - mdr). Cross-checked against the resolution shape.
    pub fn is_free(&self) -> Result<(bool, Option<(usize, usize)>), SyzygyError> {
        let d = self.d;
        let r = self.mdr();
        let numeric = if 2 * r > d - 1 {
            false
        } else {
            let tau = self.total_tjurina()?;
            (d - 1) * (d - 1) - r * (d - r - 1) == tau
        };
        let shape = self.resolution()?.resolution.generator_degrees.len() == 2;
        if numeric != shape {
            return Err(SyzygyError::ShapeContradiction(format!(
                "du Plessis-Wall says free={}, resolution says free={}",
                numeric, shape
            )));
        }
        Ok((numeric, numeric.then_some((r, d - 1 - r))))
    }

    /// Nearly-freeness test via tau, cross-checked against the resolution
    /// shape (3 generators, d1 + d2 = d, d2 = d3).
    pub fn is_nearly_free(&self) -> Result<bool, SyzygyError> {
        let d = self.d;
        let r = self.mdr();
        let tau = self.total_tjurina()?;
        let numeric = (d - 1) * (d - 1) - r * (d - r - 1) == tau + 1;
        let degs = &self.resolution()?.resolution.generator_degrees;
        let shape =
            degs.len() == 3 && degs[0] + degs[1] == d && degs[1] == degs[2];
        if numeric != shape {
            return Err(SyzygyError::ShapeContradiction(format!(
                "nearly-free criterion says {}, resolution shape says {}",
                numeric, shape
            )));
        }
        Ok(numeric)
    }

    /// Saito determinant test: the 3x3 determinant with first column
    /// (x, y, z) and the two syzygies equals c*f for a nonzero constant c
    /// exactly when the two syzygies generate a free AR(f).
    pub fn saito_check(
        &self,
        r1: &SyzygyVector,
        r2: &SyzygyVector,
    ) -> Result<(bool, Option<FieldElement>), SyzygyError> {
        if !self.is_syzygy(r1) || !self.is_syzygy(r2) {
            return Err(SyzygyError::NotASyzygy);
        }
        let det = self.saito_determinant(r1, r2);
        if det.is_zero() || det.degree() != self.d {
            return Ok((false, None));
        }
        let (m0, c0) = {
            let (m, c) = self.f.terms().next().expect("f nonzero");
            (*m, c.clone())
        };
        let dc = det.coeff(&m0);
        if dc.is_zero() {
            return Ok((false, None));
        }
        let ratio = dc.checked_div(&c0).unwrap();
        if det == self.f.scale(&ratio) {
            Ok((true, Some(ratio)))
        } else {
            Ok((false, None))
        }
    }

    pub fn saito_determinant(&self, r1: &SyzygyVector, r2: &SyzygyVector) -> HomogPoly {
        let field = &self.field;
        let var = |i: usize| HomogPoly::variable(field, i);
        let minor = |i: usize, j: usize| {
            let a = r1.components[i].mul(&r2.components[j]).unwrap();
            let b = r1.components[j].mul(&r2.components[i]).unwrap();
            a.sub(&b).unwrap()
        };
        // Expansion along the first column (x, y, z).
        let t0 = var(0).mul(&minor(1, 2)).unwrap();
        let t1 = var(1).mul(&minor(0, 2)).unwrap();
        let t2 = var(2).mul(&minor(0, 1)).unwrap();
        t0.sub(&t1).unwrap().add(&t2).unwrap()
    }

    /// Full classification record.
    pub fn classify(&self) -> Result<CurveAnalysis, SyzygyError> {
        let d = self.d;
        let res = self.resolution()?;
        let degs = &res.resolution.generator_degrees;
        let m = degs.len();
        let mdr = degs[0];
        let tau = res.resolution.tau(d);
        let mut warnings = Vec::new();

        let shape_free = m == 2;
        let shape_nf = m == 3 && degs[0] + degs[1] == d && degs[1] == degs[2];
        let numeric_free =
            2 * mdr <= d - 1 && (d - 1) * (d - 1) - mdr * (d - mdr - 1) == tau;
        let numeric_nf = (d - 1) * (d - 1) - mdr * (d - mdr - 1) == tau + 1;
        if shape_free {
            if degs[0] + degs[1] != d - 1 {
                return Err(SyzygyError::ShapeContradiction(format!(
                    "free shape with exponents {:?} violating d1+d2 = d-1",
                    degs
                )));
            }
            if !numeric_free {
                return Err(SyzygyError::ShapeContradiction(
                    "2-syzygy resolution but du Plessis-Wall equality fails".into(),
                ));
            }
        } else if numeric_free {
            return Err(SyzygyError::ShapeContradiction(
                "du Plessis-Wall equality holds but resolution is not 2-syzygy".into(),
            ));
        }
        if shape_nf != numeric_nf {
            return Err(SyzygyError::ShapeContradiction(format!(
                "nearly-free: numeric {} vs shape {}",
                numeric_nf, shape_nf
            )));
        }

        let class = if d == 1 || tau == 0 {
            CurveClass::Smooth
        } else if shape_free {
            CurveClass::Free
        } else if shape_nf {
            CurveClass::NearlyFree
        } else {
            CurveClass::MSyzygy(m)
        };

        let type_k = (degs[0] + degs[1]) as isize - (d as isize - 1);
        let subtype = if type_k == 2 {
            match m {
                3 => Subtype::TwoA,
                4 => Subtype::TwoB,
                _ => {
                    warnings.push(format!(
                        "type-2 curve with {} generators: no 2A/2B subtype assigned",
                        m
                    ));
                    Subtype::None
                }
            }
        } else {
            Subtype::None
        };
        if subtype != Subtype::None {
            warnings.push(
                "2A/2B subtype assigned from the generator count (3 -> 2A, 4 -> 2B), \
                 a rule inferred from worked examples"
                    .to_string(),
            );
        }

        Ok(CurveAnalysis {
            degree: d,
            mdr,
            tau,
            resolution: res.resolution.clone(),
            class,
            type_k,
            subtype,
            warnings,
        })
    }
}

fn partial_resolution(gens: &[SyzygyVector], rels: &[RelationVector]) -> Resolution {
    let mut generator_degrees: Vec<usize> = gens.iter().map(|g| g.degree).collect();
    let mut relation_degrees: Vec<usize> = rels.iter().map(|r| r.degree).collect();
    generator_degrees.sort_unstable();
    relation_degrees.sort_unstable();
    Resolution {
        generator_degrees,
        relation_degrees,
    }
}

/// Reduce each candidate against the row space of `span`; candidates that
/// survive (deterministically normalized) extend the span and are returned.
fn echelon_complement(
    field: &Field,
    span: Vec<Vec<FieldElement>>,
    candidates: &[Vec<FieldElement>],
) -> Vec<Vec<FieldElement>> {
    let cols = candidates
        .first()
        .map(|v| v.len())
        .or_else(|| span.first().map(|v| v.len()))
        .unwrap_or(0);
    // Echelon basis: (pivot column, normalized row).
    let mut echelon: Vec<(usize, Vec<FieldElement>)> = Vec::new();
    let insert = |mut v: Vec<FieldElement>, echelon: &mut Vec<(usize, Vec<FieldElement>)>| -> bool {
        for (p, row) in echelon.iter() {
            if !v[*p].is_zero() {
                let factor = v[*p].clone();
                for j in 0..cols {
                    if !row[j].is_zero() {
                        let t = &factor * &row[j];
                        v[j] = &v[j] - &t;
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().unwrap();
        for e in v.iter_mut() {
            if !e.is_zero() {
                *e = &*e * &inv;
            }
        }
        echelon.push((p, v));
        echelon.sort_by_key(|(p, _)| *p);
        true
    };
    for row in span {
        insert(row, &mut echelon);
    }
    let mut out = Vec::new();
    for cand in candidates {
        let mut v = cand.clone();
        // Reduce against current echelon to test membership.
        for (p, row) in echelon.iter() {
            if !v[*p].is_zero() {
                let factor = v[*p].clone();
                for j in 0..cols {
                    if !row[j].is_zero() {
                        let t = &factor * &row[j];
                        v[j] = &v[j] - &t;
                    }
                }
            }
        }
        if v.iter().all(|e| e.is_zero()) {
            continue;
        }
        let normalized = normalize_vector(field, &v);
        if insert(normalized.clone(), &mut echelon) {
            out.push(normalized);
        }
    }
    out
}

/// Deterministic representative: primitive integer coordinates with the first
/// nonzero coordinate's first nonzero rational coefficient positive.
fn normalize_vector(field: &Field, v: &[FieldElement]) -> Vec<FieldElement> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let _ = field;
    let mut lcm_den = BigInt::one();
    let mut gcd_num = BigInt::zero();
    for e in v {
        for c in e.coeffs() {
            if c.is_zero() {
                continue;
            }
            lcm_den = lcm_den.lcm(c.denom());
            gcd_num = gcd_num.gcd(c.numer());
        }
    }
    if gcd_num.is_zero() {
        return v.to_vec();
    }
    let mut scale = crate::numfield::Rational::new(lcm_den, gcd_num);
    let lead_sign = v
        .iter()
        .flat_map(|e| e.coeffs().iter())
        .find(|c| !c.is_zero())
        .map(|c| c.is_negative())
        .unwrap_or(false);
    // Make the scale positive and flip the sign if the leading coefficient
    // would come out negative.
    if scale.is_negative() {
        scale = -scale;
    }
    if lead_sign {
        scale = -scale;
    }
    v.iter().map(|e| e.scale(&scale)).collect()
}

// ---- free-function surface ----

pub fn mdr(f: &HomogPoly) -> Result<usize, SyzygyError> {
    Ok(CurveJacobian::new(f)?.mdr())
}

pub fn ar_dimension(f: &HomogPoly, r: usize) -> Result<usize, SyzygyError> {
    Ok(CurveJacobian::new(f)?.ar_dimension(r))
}

pub fn minimal_generator_degrees(f: &HomogPoly) -> Result<Vec<usize>, SyzygyError> {
    CurveJacobian::new(f)?.minimal_generator_degrees()
}

pub fn syzygy_degrees(f: &HomogPoly) -> Result<Vec<usize>, SyzygyError> {
    CurveJacobian::new(f)?.syzygy_degrees()
}

pub fn total_tjurina(f: &HomogPoly) -> Result<usize, SyzygyError> {
    CurveJacobian::new(f)?.total_tjurina()
}

pub fn is_free(f: &HomogPoly) -> Result<(bool, Option<(usize, usize)>), SyzygyError> {
    CurveJacobian::new(f)?.is_free()
}

pub fn is_nearly_free(f: &HomogPoly) -> Result<bool, SyzygyError> {
    CurveJacobian::new(f)?.is_nearly_free()
}

pub fn classify(f: &HomogPoly) -> Result<CurveAnalysis, SyzygyError> {
    CurveJacobian::new(f)?.classify()
}
