//! Minimal projective resolutions of the simple modules.

use serde::Serialize;

use super::module::{simple_module, syzygy_with_cover, RightModule};
use crate::algebra::AlgebraTable;
use crate::error::Result;
use crate::field::Field;
use crate::quiver::SurfaceAlgebraSpec;

/// The first `steps` terms of the minimal resolution of `S_v`: the vertices
/// of the projective summands in each degree and the syzygies `Omega^n`.
pub struct SimpleResolution<F: Field> {
    pub vertex: usize,
    pub terms: Vec<Vec<usize>>,
    pub syzygies: Vec<RightModule<F>>,
}

pub fn resolve_simple<F: Field>(
    table: &AlgebraTable<F>,
    v: usize,
    steps: usize,
) -> Result<SimpleResolution<F>> {
    let mut m = simple_module(table, v)?;
    let mut terms = Vec::new();
    let mut syzygies = Vec::new();
    for _ in 0..steps {
        if m.dim() == 0 {
            break;
        }
        let (k, cover) = syzygy_with_cover(table, &m)?;
        let mut s = cover.summands.clone();
        s.sort_unstable();
        terms.push(s);
        syzygies.push(k.clone());
        m = k;
    }
    Ok(SimpleResolution {
        vertex: v,
        terms,
        syzygies,
    })
}

fn is_simple_at<F: Field>(m: &RightModule<F>, v: usize) -> bool {
    m.dim() == 1 && m.vertex[0] == v
}

/// Smallest `n <= nmax` with `Omega^n(S_v) = S_v`. A one-dimensional module
/// is simple, so the test only looks at dimension and support.
pub fn omega_period_of_simple<F: Field>(
    table: &AlgebraTable<F>,
    v: usize,
    nmax: usize,
) -> Result<Option<usize>> {
    let r = resolve_simple(table, v, nmax)?;
    Ok(r.syzygies
        .iter()
        .position(|m| is_simple_at(m, v))
        .map(|n| n + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeCase {
    /// Both arrows at the vertex are not virtual.
    Regular,
    /// One outgoing arrow is a virtual loop.
    VirtualLoop,
    /// One outgoing arrow is virtual but not a loop.
    VirtualArrow,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionShape {
    pub vertex: String,
    pub case: ShapeCase,
    /// Projective summands (vertex names) in degrees 0..3.
    pub terms: Vec<Vec<String>>,
    pub expected: Vec<Vec<String>>,
    pub matches_expected: bool,
    /// Dimensions of `Omega^1 .. Omega^4`.
    pub syzygy_dims: Vec<usize>,
    /// `dim P_n = dim Omega^n + dim Omega^{n+1}` at every stage.
    pub exact: bool,
    /// `Omega^4(S_v) = S_v`.
    pub closes: bool,
}

/// The degree `0..3` terms predicted from the quiver: `P_v`; `P_t(a)` over
/// Gabriel arrows `a` leaving `v`; `P_s(b)` over Gabriel arrows `b` entering
/// `v`; `P_v`.
pub fn expected_shape<F: Field>(
    spec: &SurfaceAlgebraSpec<F>,
    v: usize,
) -> (ShapeCase, Vec<Vec<usize>>) {
    let q = &spec.tq.quiver;
    let (a, b) = spec.tq.out_pair(v);
    let case = match (spec.is_virtual(a), spec.is_virtual(b)) {
        (false, false) => ShapeCase::Regular,
        (true, _) if spec.tq.is_loop(a) => ShapeCase::VirtualLoop,
        (_, true) if spec.tq.is_loop(b) => ShapeCase::VirtualLoop,
        _ => ShapeCase::VirtualArrow,
    };
    let gab = spec.gabriel_arrows();
    let mut d1: Vec<usize> = gab
        .iter()
        .filter(|&&x| q.source(x) == v)
        .map(|&x| q.target(x))
        .collect();
    let mut d2: Vec<usize> = gab
        .iter()
        .filter(|&&x| q.target(x) == v)
        .map(|&x| q.source(x))
        .collect();
    d1.sort_unstable();
    d2.sort_unstable();
    (case, vec![vec![v], d1, d2, vec![v]])
}

pub fn resolution_shape<F: Field>(
    table: &AlgebraTable<F>,
    spec: &SurfaceAlgebraSpec<F>,
    v: usize,
) -> Result<ResolutionShape> {
    let r = resolve_simple(table, v, 4)?;
    let (case, expected) = expected_shape(spec, v);
    let name = |xs: &Vec<usize>| {
        xs.iter()
            .map(|&x| table.vertices[x].clone())
            .collect::<Vec<_>>()
    };
    let syzygy_dims: Vec<usize> = r.syzygies.iter().map(|m| m.dim()).collect();
    let proj_dims: Vec<usize> = r
        .terms
        .iter()
        .map(|t| t.iter().map(|&x| table.starting_at(x).len()).sum())
        .collect();
    let mut exact = r.terms.len() == 4;
    let mut prev = 1;
    for (p, k) in proj_dims.iter().zip(&syzygy_dims) {
        exact &= *p == prev + *k;
        prev = *k;
    }
    let closes = r.syzygies.len() == 4 && is_simple_at(&r.syzygies[3], v);
    Ok(ResolutionShape {
        vertex: table.vertices[v].clone(),
        case,
        matches_expected: r.terms == expected,
        terms: r.terms.iter().map(name).collect(),
        expected: expected.iter().map(name).collect(),
        syzygy_dims,
        exact,
        closes,
    })
}

/// `E[i][j] = dim Ext^2(S_i, S_j)`, read off as the multiplicity of `P_j` in
/// degree 2 of the minimal resolution of `S_i`.
pub fn ext2_dims<F: Field>(table: &AlgebraTable<F>) -> Result<Vec<Vec<usize>>> {
    let n = table.vertex_count();
    let mut out = vec![vec![0; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        let r = resolve_simple(table, i, 3)?;
        if let Some(t) = r.terms.get(2) {
            for &j in t {
                row[j] += 1;
            }
        }
    }
    Ok(out)
}
