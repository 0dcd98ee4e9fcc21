//! Regularly weighted wheel graphs and their degenerate small forms, whose
//! weighted adjacency matrices are exactly the abc matrices.
//!
//! Vertex 0 is the hub, tire vertices are `1..=n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrices::{AbcParams, DenseSymmetricMatrix, SmallOrderVariant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WheelKind {
    /// `n >= 3`: hub joined to a cycle `C_n`.
    Wheel,
    /// `n = 2`, tilde convention: a triangle with one edge of weight `a`.
    Triangle,
    /// `n = 2`, doubled convention: a centred digon with two parallel `(1, 2)` edges.
    Digon,
    /// `a = 0`: the zero-weight tire edges are dropped, leaving a star.
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightedWheel {
    pub n: usize,
    pub kind: WheelKind,
    /// `vertex_weights[0] = -nc` for the hub, `c` for every tire vertex.
    pub vertex_weights: Vec<f64>,
    pub tire_edge_weight: f64,
    pub spoke_weight: f64,
    /// Parallel edges are listed once per copy.
    pub edges: Vec<Edge>,
}

impl WeightedWheel {
    pub fn vertex_count(&self) -> usize {
        self.vertex_weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

pub fn build_wheel(p: &AbcParams) -> Result<WeightedWheel> {
    let n = p.n;
    if n < 2 {
        return Err(Error::UnsupportedOrder {
            n,
            reason: "a wheel needs at least two tire vertices",
        });
    }
    let kind = match (n, p.variant) {
        _ if p.a == 0.0 => WheelKind::Star,
        (2, SmallOrderVariant::Tilde) => WheelKind::Triangle,
        (2, SmallOrderVariant::Doubled) => WheelKind::Digon,
        _ => WheelKind::Wheel,
    };
    let mut vertex_weights = vec![p.c; n + 1];
    vertex_weights[0] = p.headpoint();

    let mut edges: Vec<Edge> = (1..=n)
        .map(|j| Edge {
            u: 0,
            v: j,
            weight: p.b,
        })
        .collect();
    let tire = |u, v| Edge { u, v, weight: p.a };
    match kind {
        WheelKind::Star => {}
        WheelKind::Triangle => edges.push(tire(1, 2)),
        WheelKind::Digon => edges.extend([tire(1, 2), tire(1, 2)]),
        WheelKind::Wheel => edges.extend((1..=n).map(|j| tire(j, j % n + 1))),
    }
    Ok(WeightedWheel {
        n,
        kind,
        vertex_weights,
        tire_edge_weight: p.a,
        spoke_weight: p.b,
        edges,
    })
}

/// Vertex weights on the diagonal, summed edge weights off it.
pub fn wheel_adjacency(w: &WeightedWheel) -> DenseSymmetricMatrix {
    let mut m = DenseSymmetricMatrix::zeros(w.vertex_count());
    for (j, &x) in w.vertex_weights.iter().enumerate() {
        m.set_sym(j, j, x);
    }
    for e in &w.edges {
        m.add_sym(e.u, e.v, e.weight);
    }
    m
}
