//! Test-side oracles, written against the raw quiver data only.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use wsa_core::quiver::{builtin, BuiltinParams};
use wsa_core::{PrimeField, SpecDocument, SurfaceAlgebraSpec};

pub fn params(kv: &[(&str, &str)]) -> BuiltinParams {
    kv.iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect::<BTreeMap<_, _>>()
}

pub fn doc(name: &str, kv: &[(&str, &str)]) -> SpecDocument {
    builtin(name, &params(kv)).unwrap_or_else(|e| panic!("{name} {kv:?}: {e}"))
}

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

// ---------------------------------------------------------------------------
// Census of small triangulation quivers.

/// Raw triangulation quiver: vertex `v` has out-arrows `2v` and `2v + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawQuiver {
    pub n: usize,
    pub target: Vec<usize>,
    pub f: Vec<usize>,
}

impl RawQuiver {
    pub fn source(&self, a: usize) -> usize {
        a / 2
    }

    pub fn bar(&self, a: usize) -> usize {
        a ^ 1
    }

    pub fn g(&self, a: usize) -> usize {
        self.bar(self.f[a])
    }

    pub fn g_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.f.len()];
        let mut out = Vec::new();
        for a in 0..self.f.len() {
            if seen[a] {
                continue;
            }
            let mut orbit = vec![a];
            seen[a] = true;
            let mut b = self.g(a);
            while b != a {
                seen[b] = true;
                orbit.push(b);
                b = self.g(b);
            }
            out.push(orbit);
        }
        out
    }

    fn connected(&self) -> bool {
        let mut reach = vec![false; self.n];
        reach[0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..self.f.len() {
                let (s, t) = (self.source(a), self.target[a]);
                if reach[s] != reach[t] {
                    reach[s] = true;
                    reach[t] = true;
                    changed = true;
                }
            }
        }
        reach.iter().all(|&r| r)
    }

    /// Smallest relabelling over vertex permutations and swaps inside each
    /// out-pair.
    fn canonical(&self) -> RawQuiver {
        let mut best: Option<RawQuiver> = None;
        for perm in permutations(self.n) {
            for swaps in 0..(1usize << self.n) {
                let relabel = |a: usize| 2 * perm[a / 2] + ((a & 1) ^ ((swaps >> (a / 2)) & 1));
                let mut target = vec![0; self.f.len()];
                let mut f = vec![0; self.f.len()];
                for a in 0..self.f.len() {
                    target[relabel(a)] = perm[self.target[a]];
                    f[relabel(a)] = relabel(self.f[a]);
                }
                let cand = RawQuiver {
                    n: self.n,
                    target,
                    f,
                };
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    pub fn document(&self, m: &[u32], orbits: &[Vec<usize>]) -> SpecDocument {
        let name = |a: usize| format!("a{a}");
        let mut f_cycles = Vec::new();
        let mut seen = vec![false; self.f.len()];
        for a in 0..self.f.len() {
            if seen[a] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut b = a;
            while !seen[b] {
                seen[b] = true;
                cyc.push(name(b));
                b = self.f[b];
            }
            f_cycles.push(cyc);
        }
        // Pairwise distinct weights keep the built-in products off 1.
        const WEIGHTS: [&str; 6] = ["2", "3", "5", "7", "11", "13"];
        SpecDocument {
            name: None,
            field: None,
            vertices: (0..self.n).map(|v| (v + 1).to_string()).collect(),
            arrows: (0..self.f.len())
                .map(|a| {
                    (
                        name(a),
                        (self.source(a) + 1).to_string(),
                        (self.target[a] + 1).to_string(),
                    )
                })
                .collect(),
            f_cycles,
            multiplicity: orbits
                .iter()
                .zip(m)
                .map(|(o, &m)| (name(o[0]), m))
                .collect(),
            weight: orbits
                .iter()
                .zip(WEIGHTS)
                .map(|(o, c)| (name(o[0]), c.to_string()))
                .collect(),
        }
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// All triangulation quivers on `n` vertices, up to isomorphism.
pub fn triangulation_quivers(n: usize) -> Vec<RawQuiver> {
    // Target assignments with every in-degree equal to 2.
    fn assign(n: usize, cur: &mut Vec<usize>, indeg: &mut [usize], out: &mut Vec<Vec<usize>>) {
        if cur.len() == 2 * n {
            out.push(cur.clone());
            return;
        }
        for t in 0..n {
            if indeg[t] < 2 {
                indeg[t] += 1;
                cur.push(t);
                assign(n, cur, indeg, out);
                cur.pop();
                indeg[t] -= 1;
            }
        }
    }
    let arrows = 2 * n;
    let mut assignments = Vec::new();
    assign(n, &mut Vec::new(), &mut vec![0; n], &mut assignments);
    let mut found = std::collections::BTreeSet::new();
    for target in assignments {
        for f in permutations(arrows) {
            if (0..arrows).any(|a| f[f[f[a]]] != a || target[a] != f[a] / 2) {
                continue;
            }
            let q = RawQuiver {
                n,
                target: target.clone(),
                f,
            };
            if q.connected() {
                found.insert(q.canonical());
            }
        }
    }
    found.into_iter().collect()
}

/// All vectors with `1 <= m[i]` and `m[i] * len[i] <= qmax`.
fn multiplicity_vectors(lens: &[usize], qmax: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &len in lens {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (1..=(qmax / len) as u32).map(move |m| {
                    let mut v = prefix.clone();
                    v.push(m);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every spec on 2 or 3 vertices with all `q <= qmax` that satisfies the
/// assumptions on `m`, weights pairwise distinct small primes.
pub fn census(qmax: usize) -> Vec<SpecDocument> {
    let mut out = Vec::new();
    for n in 2..=3 {
        for q in triangulation_quivers(n) {
            let orbits = q.g_orbits();
            let lens: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
            for ms in multiplicity_vectors(&lens, qmax) {
                let doc = q.document(&ms, &orbits);
                if doc.instantiate(gf(101)).unwrap().check_assumptions().ok() {
                    out.push(doc);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Brute-force path-reduction oracle.
//
// Every generator of the weighted ideal is a monomial or a binomial
// `x - c y` of paths, so the ideal generated inside the truncated path
// algebra is spanned by the products `u r w` with `u`, `w` paths, and these
// are again monomials or binomials. The quotient dimension is then the number
// of classes of paths under `x ~ c y` that neither contain a killed path nor
// carry an inconsistent scalar around a cycle. This is a weighted union-find,
// with no linear algebra shared with the engine.

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(x: u64, p: u64) -> u64 {
    assert!(!x.is_multiple_of(p));
    pow_mod(x, p - 2, p)
}

struct Classes {
    parent: Vec<usize>,
    /// `x = ratio[x] * parent[x]`.
    ratio: Vec<u64>,
    killed: Vec<bool>,
    p: u64,
}

impl Classes {
    fn new(n: usize, p: u64) -> Self {
        Classes {
            parent: (0..n).collect(),
            ratio: vec![1; n],
            killed: vec![false; n],
            p,
        }
    }

    fn find(&mut self, x: usize) -> (usize, u64) {
        let px = self.parent[x];
        if px == x {
            return (x, 1);
        }
        let (root, r) = self.find(px);
        let total = self.ratio[x] * r % self.p;
        self.parent[x] = root;
        self.ratio[x] = total;
        (root, total)
    }

    fn kill(&mut self, x: usize) {
        let (r, _) = self.find(x);
        self.killed[r] = true;
    }

    /// Imposes `x = c y`.
    fn join(&mut self, x: usize, c: u64, y: usize) {
        let (rx, ax) = self.find(x);
        let (ry, ay) = self.find(y);
        if rx == ry {
            if ax != c * ay % self.p {
                self.killed[rx] = true;
            }
            return;
        }
        // ax rx = c ay ry
        self.parent[rx] = ry;
        self.ratio[rx] = c * ay % self.p * inv_mod(ax, self.p) % self.p;
        self.killed[ry] |= self.killed[rx];
    }
}

/// Generators as `(source, [(coef, word)])` with one or two terms.
pub type RawRelation = (usize, Vec<(u64, Vec<usize>)>);

/// Weighted ideal generators computed from `f`, `bar`, `m` and `c` alone.
pub fn weighted_generators(spec: &SurfaceAlgebraSpec<PrimeField>) -> Vec<RawRelation> {
    let tq = &spec.tq;
    let p = spec.field.characteristic();
    let arrows = tq.arrow_count();
    let f = |a: usize| tq.f(a);
    let bar = |a: usize| tq.bar(a);
    let g = |a: usize| bar(f(a));
    let n = |a: usize| {
        let mut k = 1;
        let mut b = g(a);
        while b != a {
            k += 1;
            b = g(b);
        }
        k
    };
    let q = |a: usize| spec.m(a) * n(a);
    let virt = |a: usize| q(a) == 2;
    let walk = |a: usize, len: usize| {
        let mut w = Vec::with_capacity(len);
        let mut b = a;
        for _ in 0..len {
            w.push(b);
            b = g(b);
        }
        w
    };
    let mut out = Vec::new();
    for a in 0..arrows {
        let s = tq.source(a);
        let b = bar(a);
        let c = *spec.c(b) % p;
        out.push((
            s,
            vec![(1, vec![a, f(a)]), ((p - c) % p, walk(b, q(b) - 1))],
        ));
        let skip_f = virt(f(f(a))) || (virt(f(b)) && q(b) == 3);
        if !skip_f {
            out.push((s, vec![(1, vec![a, f(a), g(f(a))])]));
        }
        let skip_g = virt(f(a)) || (virt(f(f(a))) && q(f(a)) == 3);
        if !skip_g {
            out.push((s, vec![(1, vec![a, g(a), f(g(a))])]));
        }
    }
    out
}

/// Dimension of `KQ / (I + paths longer than cap)`.
pub fn oracle_dimension(
    spec: &SurfaceAlgebraSpec<PrimeField>,
    generators: &[RawRelation],
    cap: usize,
) -> usize {
    let tq = &spec.tq;
    let p = spec.field.characteristic();
    // Paths as (source, word), length <= cap.
    let mut paths: Vec<(usize, Vec<usize>)> =
        (0..tq.vertex_count()).map(|v| (v, Vec::new())).collect();
    let mut frontier: Vec<usize> = (0..paths.len()).collect();
    for _ in 0..cap {
        let mut next = Vec::new();
        for &i in &frontier {
            let (s, w) = paths[i].clone();
            let end = w.last().map_or(s, |&a| tq.target(a));
            for a in 0..tq.arrow_count() {
                if tq.source(a) == end {
                    let mut w2 = w.clone();
                    w2.push(a);
                    paths.push((s, w2));
                    next.push(paths.len() - 1);
                }
            }
        }
        frontier = next;
    }
    let index: HashMap<(usize, Vec<usize>), usize> = paths
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, k)| (k, i))
        .collect();
    let end_of = |(s, w): &(usize, Vec<usize>)| w.last().map_or(*s, |&a| tq.target(a));
    let mut classes = Classes::new(paths.len(), p);
    for (s, terms) in generators {
        let t = terms[0].1.last().map_or(*s, |&a| tq.target(a));
        let min_len = terms.iter().map(|(_, w)| w.len()).min().unwrap();
        let lefts: Vec<&(usize, Vec<usize>)> =
            paths.iter().filter(|pth| end_of(pth) == *s).collect();
        let rights: Vec<&(usize, Vec<usize>)> = paths.iter().filter(|pth| pth.0 == t).collect();
        for (us, u) in &lefts {
            for (_, w) in &rights {
                if u.len() + min_len + w.len() > cap {
                    continue;
                }
                let mut live: Vec<(u64, usize)> = Vec::new();
                for (c, word) in terms {
                    let full: Vec<usize> = u.iter().chain(word).chain(w.iter()).copied().collect();
                    if full.len() <= cap && c % p != 0 {
                        live.push((c % p, index[&(*us, full)]));
                    }
                }
                match live.as_slice() {
                    [] => {}
                    [(_, x)] => classes.kill(*x),
                    [(c1, x), (c2, y)] => {
                        // c1 x + c2 y = 0
                        let c = (p - c2 * inv_mod(*c1, p) % p) % p;
                        classes.join(*x, c, *y);
                    }
                    _ => unreachable!("generators have at most two terms"),
                }
            }
        }
    }
    (0..paths.len())
        .filter(|&i| classes.find(i).0 == i && !classes.killed[i])
        .count()
}

// ---------------------------------------------------------------------------
// Small exact helpers.

/// Bareiss fraction-free determinant.
pub fn bareiss(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank of a matrix over GF(p).
pub fn rank_mod(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_multiple_of(p)) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for j in 0..cols {
            a[r][j] = a[r][j] * inv % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let k = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p - k * a[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// `sum m_O n_O^2` over the `g`-orbits, computed from `f` and `bar`.
pub fn orbit_dimension<F: wsa_core::Field>(spec: &SurfaceAlgebraSpec<F>) -> usize {
    let tq = &spec.tq;
    let mut seen = vec![false; tq.arrow_count()];
    let mut total = 0;
    for a in 0..tq.arrow_count() {
        if seen[a] {
            continue;
        }
        let mut n = 0;
        let mut b = a;
        while !seen[b] {
            seen[b] = true;
            n += 1;
            b = tq.bar(tq.f(b));
        }
        total += spec.m(a) * n * n;
    }
    total
}
