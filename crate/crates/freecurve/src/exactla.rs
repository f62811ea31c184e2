//! Exact dense linear algebra over a number field: rank, kernel bases and
//! reduced row echelon form.
//!
//! Rank runs fraction-free (Bareiss) over the order Z[beta], where beta is the
//! field generator rescaled to a monic integer minimal polynomial; plain Q is
//! the degree-1 case. Intermediate Bareiss entries are minors of the original
//! integerized matrix, so the one-step division is exact in Z[beta]; it is
//! performed via the adjugate and norm of the previous pivot, with
//! integrality asserted. Kernels and rref use straightforward field
//! elimination with eager row canonicalization.

use crate::numfield::{same_field, Field, FieldElement, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field: field.clone(),
            entries: vec![FieldElement::zero(field); rows * cols],
        }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            for e in r {
                assert!(same_field(e.field(), field));
                entries.push(e);
            }
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            field: field.clone(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul_vector(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = FieldElement::zero(&self.field);
                for j in 0..self.cols {
                    let e = self.get(i, j);
                    if e.is_zero() || v[j].is_zero() {
                        continue;
                    }
                    acc = &acc + &(e * &v[j]);
                }
                acc
            })
            .collect()
    }

    /// Rank over the exact field.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let ws = IntWorkspace::build(self);
        ws.bareiss_rank()
    }

    /// Reduced row echelon form with strictly increasing pivot columns.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vec<FieldElement>> =
            (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = rref_in_place(&self.field, &mut rows, self.cols);
        Rref {
            field: self.field.clone(),
            cols: self.cols,
            rows,
            pivots,
        }
    }

    /// Basis of the right null space; every vector is re-checked against the
    /// matrix before being returned.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let rref = self.rref();
        let basis = rref.kernel_basis();
        for v in &basis {
            let image = self.mul_vector(v);
            assert!(
                image.iter().all(|e| e.is_zero()),
                "kernel vector failed verification"
            );
        }
        basis
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Echelonized row data shared by rref and kernel extraction.
pub struct Rref {
    field: Field,
    cols: usize,
    pub rows: Vec<Vec<FieldElement>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.field, self.rows.clone())
    }

    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![FieldElement::zero(&self.field); self.cols];
            v[free] = FieldElement::one(&self.field);
            for (r, &p) in self.pivots.iter().enumerate() {
                let c = &self.rows[r][free];
                if !c.is_zero() {
                    v[p] = c.neg();
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// In-place reduced echelon computation. Pivots are chosen by smallest
/// representation bit-length, ties by lowest row index; rows are rescaled to
/// primitive integer form after each elimination to damp growth, and pivot
/// rows normalized to leading 1 at the end.
fn rref_in_place(field: &Field, rows: &mut [Vec<FieldElement>], cols: usize) -> Vec<usize> {
    let _ = field;
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r >= rows.len() {
            break;
        }
        let mut best: Option<(u64, usize)> = None;
        for (i, row) in rows.iter().enumerate().skip(r) {
            if !row[c].is_zero() {
                let bits = row[c].bit_size();
                if best.map(|(b, _)| bits < b).unwrap_or(true) {
                    best = Some((bits, i));
                }
            }
        }
        let Some((_, pi)) = best else { continue };
        rows.swap(r, pi);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for j in c..cols {
            if !rows[r][j].is_zero() {
                rows[r][j] = &rows[r][j] * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    let t = &factor * &pivot_row[j];
                    row[j] = &row[j] - &t;
                }
            }
            if i > r {
                canonicalize_row(row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    for (r, &p) in pivots.iter().enumerate() {
        if !rows[r][p].is_one() {
            let inv = rows[r][p].inverse().unwrap();
            for j in 0..cols {
                if !rows[r][j].is_zero() {
                    rows[r][j] = &rows[r][j] * &inv;
                }
            }
        }
    }
    pivots
}

/// Rescale a row by a rational so its coordinates become a primitive integer
/// vector. Leaves the zero row alone.
fn canonicalize_row(row: &mut [FieldElement]) {
    let mut lcm_den = BigInt::one();
    let mut gcd_num = BigInt::zero();
    for e in row.iter() {
        for c in e.coeffs() {
            if c.is_zero() {
                continue;
            }
            lcm_den = lcm_den.lcm(c.denom());
            gcd_num = gcd_num.gcd(c.numer());
        }
    }
    if gcd_num.is_zero() {
        return;
    }
    let scale = Rational::new(lcm_den, gcd_num);
    if scale.is_one() {
        return;
    }
    for e in row.iter_mut() {
        if !e.is_zero() {
            *e = e.scale(&scale);
        }
    }
}

// ---- fraction-free rank over Z[beta] ----

type El = Vec<BigInt>;

/// Matrix integerized over Z[beta]: each entry is a BigInt coefficient vector
/// of length `deg`, with the minimal polynomial of beta monic over Z.
struct IntWorkspace {
    deg: usize,
    rows: usize,
    cols: usize,
    /// beta^deg .. beta^(2 deg - 2) expanded in the power basis (integers).
    reductions: Vec<Vec<BigInt>>,
    data: Vec<El>, // row-major entries
}

impl IntWorkspace {
    fn build(m: &Matrix) -> IntWorkspace {
        let k = m.field().degree();
        let mp = m.field().minpoly();
        // Rescale the generator so the minimal polynomial is monic integral:
        // beta = l * alpha with l = lcm of coefficient denominators.
        let mut l = BigInt::one();
        for c in mp.iter() {
            l = l.lcm(c.denom());
        }
        let mut int_mp: Vec<BigInt> = Vec::with_capacity(k + 1);
        for (i, c) in mp.iter().enumerate() {
            let scaled = c * Rational::from_integer(l.pow((k - i) as u32));
            assert!(scaled.is_integer());
            int_mp.push(scaled.to_integer());
        }
        let mut reductions: Vec<Vec<BigInt>> = Vec::new();
        if k >= 2 {
            let base: Vec<BigInt> = int_mp[..k].iter().map(|c| -c).collect();
            reductions.push(base.clone());
            let mut cur = base;
            for _ in 1..k - 1 {
                let mut next = vec![BigInt::zero(); k];
                let shift_out = cur[k - 1].clone();
                for i in (1..k).rev() {
                    next[i] = cur[i - 1].clone();
                }
                for (i, r) in reductions[0].iter().enumerate() {
                    next[i] += &shift_out * r;
                }
                reductions.push(next.clone());
                cur = next;
            }
        }
        // Integerize entries row by row: alpha^i = beta^i / l^i, then clear
        // the row's common denominator.
        let mut data = Vec::with_capacity(m.rows() * m.cols());
        let l_pows: Vec<BigInt> = (0..k).map(|i| l.pow(i as u32)).collect();
        for i in 0..m.rows() {
            let mut row_rat: Vec<Vec<Rational>> = Vec::with_capacity(m.cols());
            let mut den = BigInt::one();
            for j in 0..m.cols() {
                let coords: Vec<Rational> = m
                    .get(i, j)
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(p, c)| c / Rational::from_integer(l_pows[p].clone()))
                    .collect();
                for c in &coords {
                    den = den.lcm(c.denom());
                }
                row_rat.push(coords);
            }
            let den_r = Rational::from_integer(den);
            for coords in row_rat {
                let ints: Vec<BigInt> = coords
                    .into_iter()
                    .map(|c| {
                        let v = c * &den_r;
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect();
                data.push(ints);
            }
        }
        IntWorkspace {
            deg: k,
            rows: m.rows(),
            cols: m.cols(),
            reductions,
            data,
        }
    }

    fn is_zero_el(e: &El) -> bool {
        e.iter().all(|c| c.is_zero())
    }

    fn el_bits(e: &El) -> u64 {
        e.iter().map(|c| c.bits()).sum()
    }

    fn one(&self) -> El {
        let mut v = vec![BigInt::zero(); self.deg];
        v[0] = BigInt::one();
        v
    }

    fn mul(&self, a: &El, b: &El) -> El {
        let k = self.deg;
        if k == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut conv = vec![BigInt::zero(); 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                conv[i + j] += x * y;
            }
        }
        let mut out: Vec<BigInt> = conv[..k].to_vec();
        for (i, red) in self.reductions.iter().enumerate() {
            let hi = &conv[k + i];
            if hi.is_zero() {
                continue;
            }
            for (j, r) in red.iter().enumerate() {
                if !r.is_zero() {
                    out[j] += hi * r;
                }
            }
        }
        out
    }

    fn sub(a: &El, b: &El) -> El {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    /// Norm (determinant of the multiplication matrix) and adjugate element
    /// adj = norm / p, both integral in Z[beta].
    fn norm_adj(&self, p: &El) -> (BigInt, El) {
        let k = self.deg;
        if k == 1 {
            return (p[0].clone(), vec![BigInt::one()]);
        }
        // Multiplication matrix: column j holds coords of p * beta^j.
        let mut mcols: Vec<El> = Vec::with_capacity(k);
        let mut cur = p.clone();
        mcols.push(cur.clone());
        for _ in 1..k {
            let mut next = vec![BigInt::zero(); k];
            let shift_out = cur[k - 1].clone();
            for i in (1..k).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !shift_out.is_zero() {
                for (i, r) in self.reductions[0].iter().enumerate() {
                    next[i] += &shift_out * r;
                }
            }
            mcols.push(next.clone());
            cur = next;
        }
        let at = |i: usize, j: usize| mcols[j][i].clone();
        let det = int_det(&at, k);
        // adj = adjugate(M) * e0: coordinate i is (-1)^i * minor(M; 0, i).
        let mut adj = vec![BigInt::zero(); k];
        for (i, slot) in adj.iter_mut().enumerate() {
            let minor = int_minor(&at, k, 0, i);
            *slot = if i % 2 == 0 { minor } else { -minor };
        }
        (det, adj)
    }

    fn div_exact_scalar(e: &El, n: &BigInt) -> El {
        e.iter()
            .map(|c| {
                let (q, r) = c.div_rem(n);
                assert!(r.is_zero(), "inexact fraction-free division");
                q
            })
            .collect()
    }

    /// Fraction-free Bareiss elimination; returns the rank.
    fn bareiss_rank(mut self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut prev = self.one();
        let mut prev_norm: Option<(BigInt, El)> = None;
        for c in 0..cols {
            if rank >= rows {
                break;
            }
            // Shortest-representation pivot, ties by lowest row index.
            let mut best: Option<(u64, usize)> = None;
            for i in rank..rows {
                let e = &self.data[i * cols + c];
                if !Self::is_zero_el(e) {
                    let bits = Self::el_bits(e);
                    if best.map(|(b, _)| bits < b).unwrap_or(true) {
                        best = Some((bits, i));
                    }
                }
            }
            let Some((_, pi)) = best else { continue };
            if pi != rank {
                for j in 0..cols {
                    self.data.swap(rank * cols + j, pi * cols + j);
                }
            }
            let pivot = self.data[rank * cols + c].clone();
            for i in rank + 1..rows {
                let head = self.data[i * cols + c].clone();
                if Self::is_zero_el(&head) {
                    // Row stays on the minor ladder: scale by pivot/prev.
                    for j in c + 1..cols {
                        if Self::is_zero_el(&self.data[i * cols + j]) {
                            continue;
                        }
                        let num = self.mul(&pivot, &self.data[i * cols + j]);
                        self.data[i * cols + j] = self.divide_by(&num, &prev, &mut prev_norm);
                    }
                } else {
                    for j in c + 1..cols {
                        let pe = &self.data[rank * cols + j];
                        let ie = &self.data[i * cols + j];
                        if Self::is_zero_el(pe) && Self::is_zero_el(ie) {
                            continue;
                        }
                        let mut num = self.mul(&pivot, ie);
                        if !Self::is_zero_el(pe) {
                            num = Self::sub(&num, &self.mul(&head, pe));
                        }
                        self.data[i * cols + j] = self.divide_by(&num, &prev, &mut prev_norm);
                    }
                }
                self.data[i * cols + c] = vec![BigInt::zero(); self.deg];
            }
            prev = pivot;
            prev_norm = None;
            rank += 1;
        }
        rank
    }

    fn divide_by(&self, num: &El, prev: &El, cache: &mut Option<(BigInt, El)>) -> El {
        if Self::is_zero_el(num) {
            return vec![BigInt::zero(); self.deg];
        }
        if self.deg == 1 {
            return Self::div_exact_scalar(num, &prev[0]);
        }
        if cache.is_none() {
            *cache = Some(self.norm_adj(prev));
        }
        let (n, adj) = cache.as_ref().unwrap();
        let t = self.mul(num, adj);
        Self::div_exact_scalar(&t, n)
    }
}

/// Determinant of a k x k integer matrix given by an accessor, k <= 4.
fn int_det<F: Fn(usize, usize) -> BigInt>(at: &F, k: usize) -> BigInt {
    match k {
        1 => at(0, 0).clone(),
        2 => at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0),
        _ => {
            let mut acc = BigInt::zero();
            for j in 0..k {
                let minor = int_minor(at, k, 0, j);
                let term = at(0, j) * minor;
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Minor deleting `row` and `col`.
fn int_minor<F: Fn(usize, usize) -> BigInt>(at: &F, k: usize, row: usize, col: usize) -> BigInt {
    let rows: Vec<usize> = (0..k).filter(|&i| i != row).collect();
    let cols: Vec<usize> = (0..k).filter(|&j| j != col).collect();
    match rows.len() {
        0 => BigInt::one(),
        1 => at(rows[0], cols[0]).clone(),
        2 => {
            at(rows[0], cols[0]) * at(rows[1], cols[1])
                - at(rows[0], cols[1]) * at(rows[1], cols[0])
        }
        3 => {
            let m = |i: usize, j: usize| at(rows[i], cols[j]);
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        }
        _ => unreachable!("field degree capped at 4"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;
    use rand::{Rng, SeedableRng};

    fn qq() -> Field {
        NumberField::rationals()
    }

    fn mat_i64(field: &Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| FieldElement::from_int(field, v)).collect())
                .collect(),
        )
    }

    /// Independent oracle: textbook elimination over the field, first nonzero
    /// pivot, no pivot-size optimization, no rescaling.
    fn naive_rank(m: &Matrix) -> usize {
        let mut rows: Vec<Vec<FieldElement>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][c].inverse().unwrap();
            let pivot_row: Vec<FieldElement> =
                rows[rank].iter().map(|e| e.checked_mul(&inv).unwrap()).collect();
            rows[rank] = pivot_row.clone();
            for i in rank + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let f = rows[i][c].clone();
                for j in 0..m.cols() {
                    let t = f.checked_mul(&pivot_row[j]).unwrap();
                    rows[i][j] = rows[i][j].checked_sub(&t).unwrap();
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_and_zero() {
        let f = qq();
        let id = mat_i64(&f, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_empty());
        let z = Matrix::zero(&f, 4, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 5);
    }

    #[test]
    fn small_rref() {
        let f = qq();
        let m = mat_i64(&f, &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rows[0][0], FieldElement::one(&f));
        assert_eq!(r.rows[0][1], FieldElement::from_int(&f, 2));
        assert!(r.rows[1].iter().all(|e| e.is_zero()));
    }

    #[test]
    fn ones_row_kernel() {
        let f = qq();
        let m = mat_i64(&f, &[&[1, 1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn random_rank_matches_oracle() {
        let f = qq();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..25 {
            let rows = rng.gen_range(1..=12);
            let cols = rng.gen_range(1..=12);
            let m = Matrix::from_rows(
                &f,
                (0..rows)
                    .map(|_| {
                        (0..cols)
                            .map(|_| {
                                if rng.gen_bool(0.3) {
                                    FieldElement::zero(&f)
                                } else {
                                    FieldElement::from_rational(
                                        &f,
                                        Rational::new(
                                            rng.gen_range(-20i64..=20).into(),
                                            rng.gen_range(1i64..=9).into(),
                                        ),
                                    )
                                }
                            })
                            .collect()
                    })
                    .collect(),
            );
            let expected = naive_rank(&m);
            assert_eq!(m.rank(), expected, "trial {}", trial);
            assert_eq!(m.rref().rank(), expected);
            assert_eq!(m.transpose().rank(), expected, "rank(M) = rank(M^T)");
            assert_eq!(m.kernel_basis().len(), cols - expected, "nullity");
        }
    }

    #[test]
    fn rank_over_extension_fields() {
        let e_field = NumberField::adjoin_root(
            "e",
            &[
                Rational::from_integer(1.into()),
                Rational::from_integer((-1).into()),
                Rational::from_integer(1.into()),
            ],
        )
        .unwrap();
        let z_field = NumberField::adjoin_root(
            "z",
            &[
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
                Rational::from_integer(1.into()),
            ],
        )
        .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for field in [e_field, z_field] {
            for trial in 0..12 {
                let rows = rng.gen_range(1..=8);
                let cols = rng.gen_range(1..=8);
                let m = Matrix::from_rows(
                    &field,
                    (0..rows)
                        .map(|_| {
                            (0..cols)
                                .map(|_| {
                                    let coeffs = (0..field.degree())
                                        .map(|_| {
                                            Rational::new(
                                                rng.gen_range(-5i64..=5).into(),
                                                rng.gen_range(1i64..=3).into(),
                                            )
                                        })
                                        .collect();
                                    FieldElement::from_coeffs(&field, coeffs)
                                })
                                .collect()
                        })
                        .collect(),
                );
                let expected = naive_rank(&m);
                assert_eq!(m.rank(), expected, "bareiss vs naive, trial {}", trial);
                assert_eq!(m.kernel_basis().len(), cols - expected);
            }
        }
    }

    #[test]
    fn large_rational_matrix_matches_oracle() {
        let f = qq();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let m = Matrix::from_rows(
            &f,
            (0..20)
                .map(|_| {
                    (0..30)
                        .map(|_| {
                            FieldElement::from_rational(
                                &f,
                                Rational::new(
                                    rng.gen_range(-50i64..=50).into(),
                                    rng.gen_range(1i64..=12).into(),
                                ),
                            )
                        })
                        .collect()
                })
                .collect(),
        );
        assert_eq!(m.rank(), naive_rank(&m));
    }

    #[test]
    fn rref_row_space_oracle() {
        // rref(M) and M have equal row space: stacking them does not raise
        // the rank.
        let f = qq();
        let m = mat_i64(&f, &[&[1, 2, 3], &[2, 4, 7], &[3, 6, 10]]);
        let r = m.rref().to_matrix();
        let mut stacked_rows = Vec::new();
        for i in 0..m.rows() {
            stacked_rows.push(m.row(i).to_vec());
        }
        for i in 0..r.rows() {
            stacked_rows.push(r.row(i).to_vec());
        }
        let stacked = Matrix::from_rows(&f, stacked_rows);
        assert_eq!(stacked.rank(), m.rank());
        assert_eq!(stacked.rank(), r.rank());
    }
}
