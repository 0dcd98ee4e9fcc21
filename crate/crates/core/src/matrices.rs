//! Parameter records and explicit dense matrices for the circulant, regular
//! arrowhead and arrow-bordered circulant (abc) families.
//!
//! Every builder here only assigns entries, so the symmetric matrices are
//! symmetric bit for bit. The analytic modules never look at these matrices;
//! they exist for the oracle, the graph export and the tests.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// First row `[c_0, c_1, ..., c_{n-1}]` of a circulant matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CirculantParams {
    row: Vec<f64>,
}

impl CirculantParams {
    pub fn new(row: Vec<f64>) -> Result<Self> {
        if row.is_empty() {
            return Err(Error::UnsupportedOrder {
                n: 0,
                reason: "a circulant needs at least one entry",
            });
        }
        Ok(Self { row })
    }

    pub fn row(&self) -> &[f64] {
        &self.row
    }

    pub fn order(&self) -> usize {
        self.row.len()
    }

    /// True when `c_j == c_{n-j}` for every `j`, i.e. the matrix is symmetric.
    pub fn is_symmetric(&self) -> bool {
        let n = self.row.len();
        (1..n).all(|j| self.row[j] == self.row[n - j])
    }
}

/// Regular arrowhead matrix `A_n(h, b, d)` of order `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArrowheadParams {
    pub n: usize,
    /// Headpoint (top-left) entry.
    pub h: f64,
    /// Constant border entry.
    pub b: f64,
    /// Constant diagonal entry of the lower block.
    pub d: f64,
}

impl ArrowheadParams {
    pub fn new(n: usize, h: f64, b: f64, d: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedOrder {
                n,
                reason: "an arrowhead needs n >= 1",
            });
        }
        Ok(Self { n, h, b, d })
    }

    /// `(h - d)^2 + 4 n b^2`.
    pub fn discriminant(&self) -> f64 {
        let hd = self.h - self.d;
        hd * hd + 4.0 * self.n as f64 * self.b * self.b
    }
}

/// The two conventions for the tire block when `n < 3`.
///
/// `Tilde` uses `circ(c, a)` for `n = 2` and `[c]` for `n = 1`; `Doubled`
/// keeps the row sum at `c + 2a`, i.e. `circ(c, 2a)` and `[c + 2a]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SmallOrderVariant {
    Tilde,
    #[default]
    Doubled,
}

/// Parameters of the regular traceless abc matrix `m_n(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AbcParams {
    pub n: usize,
    /// Tire (cyclic) edge weight.
    pub a: f64,
    /// Spoke (border) weight.
    pub b: f64,
    /// Tire vertex weight, the circulant diagonal.
    pub c: f64,
    /// Only consulted for `n <= 2`.
    #[serde(default)]
    pub variant: SmallOrderVariant,
}

impl AbcParams {
    pub fn new(n: usize, a: f64, b: f64, c: f64) -> Result<Self> {
        Self::with_variant(n, a, b, c, SmallOrderVariant::default())
    }

    pub fn with_variant(
        n: usize,
        a: f64,
        b: f64,
        c: f64,
        variant: SmallOrderVariant,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedOrder {
                n,
                reason: "an abc matrix needs n >= 1",
            });
        }
        Ok(Self {
            n,
            a,
            b,
            c,
            variant,
        })
    }

    pub fn order(&self) -> usize {
        self.n + 1
    }

    /// Headpoint entry `-n c`.
    pub fn headpoint(&self) -> f64 {
        0.0 - self.n as f64 * self.c
    }

    /// Weight `a'` such that the tire eigenvalues are `c + 2 a' cos(2 pi k / n)`.
    ///
    /// This is `a` except for the `n = 2` tilde matrix, whose single tire
    /// eigenvalue `c - a` corresponds to `a' = a / 2`.
    pub fn effective_tire_weight(&self) -> f64 {
        if self.n == 2 && self.variant == SmallOrderVariant::Tilde {
            self.a / 2.0
        } else {
            self.a
        }
    }

    /// Row sum of the tire block, which is the eigenvalue of the constant
    /// tire vector and the separation line between `lambda_-` and `lambda_+`.
    pub fn separation_level(&self) -> f64 {
        match (self.n, self.variant) {
            (1, SmallOrderVariant::Tilde) => self.c,
            (2, SmallOrderVariant::Tilde) => self.c + self.a,
            _ => self.c + 2.0 * self.a,
        }
    }

    /// First row of the tire block `t_n`.
    pub fn tire_row(&self) -> Vec<f64> {
        let (n, a, c) = (self.n, self.a, self.c);
        match (n, self.variant) {
            (1, SmallOrderVariant::Tilde) => vec![c],
            (1, SmallOrderVariant::Doubled) => vec![c + 2.0 * a],
            (2, SmallOrderVariant::Tilde) => vec![c, a],
            (2, SmallOrderVariant::Doubled) => vec![c, 2.0 * a],
            _ => {
                let mut row = vec![0.0; n];
                row[0] = c;
                row[1] = a;
                row[n - 1] = a;
                row
            }
        }
    }

    pub fn tire_block(&self) -> CirculantParams {
        CirculantParams {
            row: self.tire_row(),
        }
    }

    /// True when the matrix is traceless; only the doubled `n = 1` matrix is not.
    pub fn is_traceless(&self) -> bool {
        !(self.n == 1 && self.variant == SmallOrderVariant::Doubled)
    }

    /// Rescaling `m_n(a, b, c) = b m_n(a/b, 1, c/b)`.
    pub fn normalize_b(&self) -> Result<(f64, AbcParams)> {
        normalize_b(self)
    }
}

/// Splits off the spoke weight: returns `(b, m_n(a/b, 1, c/b))`.
pub fn normalize_b(p: &AbcParams) -> Result<(f64, AbcParams)> {
    if p.b == 0.0 {
        return Err(Error::ZeroBorder);
    }
    let normalized = AbcParams {
        a: p.a / p.b,
        b: 1.0,
        c: p.c / p.b,
        ..*p
    };
    Ok((p.b, normalized))
}

/// Dense square matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.order + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.entries[row * self.order + col] = value;
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.order.max(1))
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|j| self.get(j, j)).sum()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.rows()
            .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn norm_frobenius(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|j| (0..j).all(|k| self.get(j, k) == self.get(k, j)))
    }

    pub fn mul_complex(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.order, "dimension mismatch");
        self.rows()
            .map(|row| row.iter().zip(v).map(|(&m, &x)| x * m).sum())
            .collect()
    }
}

/// A real symmetric matrix. The only constructors assign `(j, k)` and `(k, j)`
/// together, so `entries[j][k] == entries[k][j]` holds exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DenseSymmetricMatrix(DenseMatrix);

impl DenseSymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        Self(DenseMatrix::zeros(order))
    }

    /// Sets both `(j, k)` and `(k, j)`.
    pub fn set_sym(&mut self, j: usize, k: usize, value: f64) {
        self.0.set(j, k, value);
        self.0.set(k, j, value);
    }

    /// Adds `value` to `(j, k)` and, for `j != k`, to `(k, j)`.
    pub fn add_sym(&mut self, j: usize, k: usize, value: f64) {
        let v = self.0.get(j, k) + value;
        self.set_sym(j, k, v);
    }

    /// Accepts a general matrix only if it is exactly symmetric.
    pub fn try_from_dense(m: DenseMatrix) -> Result<Self> {
        if m.is_symmetric() {
            Ok(Self(m))
        } else {
            Err(Error::InvalidArgument(
                "matrix is not exactly symmetric".into(),
            ))
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut m = DenseMatrix::zeros(order);
        for (j, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidArgument(format!(
                    "row {j} has length {}, expected {order}",
                    row.len()
                )));
            }
            for (k, &x) in row.iter().enumerate() {
                m.set(j, k, x);
            }
        }
        Self::try_from_dense(m)
    }

    pub fn as_dense(&self) -> &DenseMatrix {
        &self.0
    }

    pub fn into_dense(self) -> DenseMatrix {
        self.0
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.0.get(j, k)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.0.rows().map(<[f64]>::to_vec).collect()
    }
}

impl std::ops::Deref for DenseSymmetricMatrix {
    type Target = DenseMatrix;

    fn deref(&self) -> &DenseMatrix {
        &self.0
    }
}

/// `circ(c)`: row `j` is the first row shifted `j` places to the right.
pub fn materialize_circulant(p: &CirculantParams) -> DenseMatrix {
    let n = p.order();
    let mut m = DenseMatrix::zeros(n);
    for j in 0..n {
        for k in 0..n {
            m.set(j, k, p.row[(k + n - j) % n]);
        }
    }
    m
}

pub fn materialize_arrowhead(p: &ArrowheadParams) -> DenseSymmetricMatrix {
    let mut m = DenseSymmetricMatrix::zeros(p.n + 1);
    m.set_sym(0, 0, p.h);
    for j in 1..=p.n {
        m.set_sym(0, j, p.b);
        m.set_sym(j, j, p.d);
    }
    m
}

/// Block matrix `[-nc, b^T; b, t_n]`.
pub fn materialize_abc(p: &AbcParams) -> DenseSymmetricMatrix {
    let n = p.n;
    let row = p.tire_row();
    let mut m = DenseSymmetricMatrix::zeros(n + 1);
    m.set_sym(0, 0, p.headpoint());
    for j in 1..=n {
        m.set_sym(0, j, p.b);
    }
    // The tire rows are symmetric shifts of `row`, so the upper triangle suffices.
    for j in 0..n {
        for k in j..n {
            m.set_sym(j + 1, k + 1, row[(k - j) % n]);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_order_one() {
        let m = materialize_circulant(&CirculantParams::new(vec![5.0]).unwrap());
        assert_eq!(m.entries(), &[5.0]);
    }

    #[test]
    fn circulant_shift_pattern() {
        let m = materialize_circulant(&CirculantParams::new(vec![0.0, 1.0, 0.0, 1.0]).unwrap());
        for j in 0..4usize {
            for k in 0..4usize {
                let d = (k + 4 - j) % 4;
                let expected = if d == 1 || d == 3 { 1.0 } else { 0.0 };
                assert_eq!(m.get(j, k), expected);
            }
        }
        let m = materialize_circulant(&CirculantParams::new(vec![1.0, 2.0, 3.0]).unwrap());
        assert_eq!(m.entries(), &[1.0, 2.0, 3.0, 3.0, 1.0, 2.0, 2.0, 3.0, 1.0]);
    }

    #[test]
    fn abc_tire_block_is_tridiagonal_circulant() {
        let p = AbcParams::new(6, 2.0, 1.0, 3.0).unwrap();
        let t = materialize_circulant(&p.tire_block());
        for j in 0..6usize {
            for k in 0..6usize {
                let d = (k + 6 - j) % 6;
                let expected = match d {
                    0 => 3.0,
                    1 | 5 => 2.0,
                    _ => 0.0,
                };
                assert_eq!(t.get(j, k), expected);
            }
        }
    }

    #[test]
    fn arrowhead_examples() {
        let m = materialize_arrowhead(&ArrowheadParams::new(1, 0.0, 1.0, 0.0).unwrap());
        assert_eq!(m.to_rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        let m = materialize_arrowhead(&ArrowheadParams::new(2, -2.0, 1.0, 1.0).unwrap());
        assert_eq!(
            m.to_rows(),
            vec![
                vec![-2.0, 1.0, 1.0],
                vec![1.0, 1.0, 0.0],
                vec![1.0, 0.0, 1.0]
            ]
        );
        let m = materialize_arrowhead(&ArrowheadParams::new(3, 5.0, 2.0, -1.0).unwrap());
        assert_eq!(
            (0..4).map(|j| m.get(j, j)).collect::<Vec<_>>(),
            vec![5.0, -1.0, -1.0, -1.0]
        );
        assert!((1..4).all(|j| m.get(0, j) == 2.0 && m.get(j, 0) == 2.0));
        assert_eq!(m.get(1, 2), 0.0);
    }

    #[test]
    fn abc_m6_pattern() {
        let m = materialize_abc(&AbcParams::new(6, 2.0, 1.0, 0.0).unwrap());
        assert_eq!(m.to_rows()[0], vec![0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0]);
        assert_eq!(m.to_rows()[1], vec![1.0, 0.0, 2.0, 0.0, 0.0, 0.0, 2.0]);
        assert_eq!(m.to_rows()[4], vec![1.0, 0.0, 0.0, 2.0, 0.0, 2.0, 0.0]);
        assert_eq!(m.to_rows()[6], vec![1.0, 2.0, 0.0, 0.0, 0.0, 2.0, 0.0]);
    }

    #[test]
    fn abc_small_order_variants() {
        let d = AbcParams::with_variant(2, 1.0, 1.0, 1.0, SmallOrderVariant::Doubled).unwrap();
        assert_eq!(
            materialize_abc(&d).to_rows(),
            vec![
                vec![-2.0, 1.0, 1.0],
                vec![1.0, 1.0, 2.0],
                vec![1.0, 2.0, 1.0]
            ]
        );
        let t = AbcParams::with_variant(2, 1.0, 1.0, 1.0, SmallOrderVariant::Tilde).unwrap();
        assert_eq!(
            materialize_abc(&t).to_rows(),
            vec![
                vec![-2.0, 1.0, 1.0],
                vec![1.0, 1.0, 1.0],
                vec![1.0, 1.0, 1.0]
            ]
        );
        let d1 = AbcParams::with_variant(1, 1.5, 2.0, 3.0, SmallOrderVariant::Doubled).unwrap();
        assert_eq!(
            materialize_abc(&d1).to_rows(),
            vec![vec![-3.0, 2.0], vec![2.0, 6.0]]
        );
        assert!(!d1.is_traceless());
        assert_eq!(materialize_abc(&d1).trace(), 2.0 * 1.5);
        let t1 = AbcParams::with_variant(1, 1.5, 2.0, 3.0, SmallOrderVariant::Tilde).unwrap();
        assert_eq!(
            materialize_abc(&t1).to_rows(),
            vec![vec![-3.0, 2.0], vec![2.0, 3.0]]
        );
    }

    #[test]
    fn abc_with_zero_tire_is_arrowhead() {
        for n in 1..8 {
            let p = AbcParams::new(n, 0.0, 1.25, -0.7).unwrap();
            let a = ArrowheadParams::new(n, p.headpoint(), p.b, p.c).unwrap();
            assert_eq!(materialize_abc(&p), materialize_arrowhead(&a), "n = {n}");
        }
    }

    #[test]
    fn abc_is_symmetric_and_traceless() {
        for n in 2..20 {
            // Dyadic c: every partial sum is exact.
            let m = materialize_abc(&AbcParams::new(n, 0.3, -1.7, 0.375).unwrap());
            assert!(m.is_symmetric());
            assert_eq!(m.trace(), 0.0, "n = {n}");
            let m = materialize_abc(&AbcParams::new(n, 0.3, -1.7, 0.1).unwrap());
            assert!(m.is_symmetric());
            assert!(
                m.trace().abs() <= 2.0 * n as f64 * f64::EPSILON * 0.1 * n as f64,
                "n = {n}"
            );
        }
    }

    #[test]
    fn normalize_b_examples() {
        let (s, q) = normalize_b(&AbcParams::new(4, 2.0, 2.0, 6.0).unwrap()).unwrap();
        assert_eq!(s, 2.0);
        assert_eq!((q.a, q.b, q.c), (1.0, 1.0, 3.0));
        let (s, q) = normalize_b(&AbcParams::new(4, 2.0, -1.0, 6.0).unwrap()).unwrap();
        assert_eq!(s, -1.0);
        assert_eq!((q.a, q.b, q.c), (-2.0, 1.0, -6.0));
        assert_eq!(
            normalize_b(&AbcParams::new(3, 0.0, 0.0, 1.0).unwrap()),
            Err(Error::ZeroBorder)
        );
    }

    #[test]
    fn rejects_zero_order() {
        assert!(AbcParams::new(0, 1.0, 1.0, 1.0).is_err());
        assert!(ArrowheadParams::new(0, 1.0, 1.0, 1.0).is_err());
        assert!(CirculantParams::new(vec![]).is_err());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(DenseSymmetricMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
    }
}
