//! Enumeration of all paths up to a length cap.

use std::collections::HashMap;

use crate::quiver::TriangulationQuiver;

/// Every path of length at most `cap`, with left and right extension tables.
#[derive(Clone, Debug)]
pub struct PathSpace {
    pub cap: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub words: Vec<Vec<usize>>,
    index: HashMap<(usize, Vec<usize>), usize>,
    right: Vec<Vec<(usize, usize)>>,
    left: Vec<Vec<(usize, usize)>>,
}

impl PathSpace {
    pub fn new(tq: &TriangulationQuiver, cap: usize) -> PathSpace {
        let mut space = PathSpace {
            cap,
            source: Vec::new(),
            target: Vec::new(),
            words: Vec::new(),
            index: HashMap::new(),
            right: Vec::new(),
            left: Vec::new(),
        };
        for v in 0..tq.vertex_count() {
            space.push(v, v, Vec::new());
        }
        let mut frontier: Vec<usize> = (0..tq.vertex_count()).collect();
        for _ in 0..cap {
            let mut next = Vec::new();
            for p in frontier {
                for a in tq.quiver.out_arrows(space.target[p]) {
                    let mut w = space.words[p].clone();
                    w.push(a);
                    let id = space.push(space.source[p], tq.target(a), w);
                    space.right[p].push((a, id));
                    next.push(id);
                }
            }
            frontier = next;
        }
        for p in 0..space.len() {
            let w = &space.words[p];
            if w.len() == cap {
                continue;
            }
            for a in tq.quiver.in_arrows(space.source[p]) {
                let mut lw = vec![a];
                lw.extend_from_slice(w);
                let id = space.index[&(tq.source(a), lw)];
                space.left[p].push((a, id));
            }
        }
        space
    }

    fn push(&mut self, s: usize, t: usize, w: Vec<usize>) -> usize {
        let id = self.words.len();
        self.index.insert((s, w.clone()), id);
        self.source.push(s);
        self.target.push(t);
        self.words.push(w);
        self.right.push(Vec::new());
        self.left.push(Vec::new());
        id
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Id of the path `word` starting at `source` (needed for empty words).
    pub fn find(&self, source: usize, word: &[usize]) -> Option<usize> {
        self.index.get(&(source, word.to_vec())).copied()
    }

    /// `(arrow, p * arrow)` for arrows leaving the end of `p`; empty at the cap.
    pub fn right_extensions(&self, p: usize) -> &[(usize, usize)] {
        &self.right[p]
    }

    /// `(arrow, arrow * p)` for arrows entering the start of `p`.
    pub fn left_extensions(&self, p: usize) -> &[(usize, usize)] {
        &self.left[p]
    }
}
