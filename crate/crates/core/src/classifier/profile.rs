//! The numerical functions `M`, `q`, `v` and `u`.

use num_integer::Integer;
use serde::Serialize;

use crate::field::Field;
use crate::quiver::SurfaceAlgebraSpec;

/// `M = 2 lcm q`, `v(a) = M (1 - 1/q(a) - 1/q(f a) - 1/q(f^2 a))` and
/// `u(a) = M / q(a)`, all per arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VProfile {
    #[serde(rename = "M")]
    pub m: u64,
    pub q: Vec<u64>,
    pub v: Vec<i64>,
    pub u: Vec<u64>,
}

impl VProfile {
    pub fn min_v(&self) -> i64 {
        self.v.iter().copied().min().unwrap_or(i64::MAX)
    }

    pub fn is_generic(&self) -> bool {
        self.min_v() >= 1
    }
}

pub fn v_profile<F: Field>(spec: &SurfaceAlgebraSpec<F>) -> VProfile {
    let tq = &spec.tq;
    let q: Vec<u64> = spec.arrows().map(|a| spec.q(a) as u64).collect();
    let m = 2 * q.iter().fold(1u64, |acc, x| acc.lcm(x));
    let u: Vec<u64> = q.iter().map(|x| m / x).collect();
    let v = spec
        .arrows()
        .map(|a| {
            let (b, c) = (tq.f(a), tq.f(tq.f(a)));
            m as i64 - (u[a] + u[b] + u[c]) as i64
        })
        .collect();
    VProfile { m, q, v, u }
}

/// `sum u(a_i)` over the letters of a word.
pub fn word_weight(u: &[u64], word: &[usize]) -> u64 {
    word.iter().map(|&a| u[a]).sum()
}

/// Arrows violating `e(a) + u(a) + u(f a) = u(A_abar)` for relation
/// exponents `e` and arrow weights `u`.
pub fn dagger_failures<F: Field>(spec: &SurfaceAlgebraSpec<F>, e: &[i64], u: &[u64]) -> Vec<usize> {
    let tq = &spec.tq;
    spec.arrows()
        .filter(|&a| {
            e[a] + (u[a] + u[tq.f(a)]) as i64 != word_weight(u, &spec.a_path(tq.bar(a))) as i64
        })
        .collect()
}

/// Whether `(x, y, z)` is, up to order, one of the triples with
/// `1/x + 1/y + 1/z >= 1`.
pub fn is_exceptional_triple(t: [u64; 3]) -> bool {
    let mut s = t;
    s.sort_unstable();
    matches!(s, [2, 2, _] | [2, 3, 3..=6] | [2, 4, 4] | [3, 3, 3])
}
