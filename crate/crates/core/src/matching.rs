//! Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).
//!
//! The neighbourhood is supplied as a closure so that the complement of a
//! graph can be matched without materializing it.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Blossom<'a, F> {
    n: usize,
    neighbors: &'a F,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a, F, I> Blossom<'a, F>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.n];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating paths from `root`; returns the exposed endpoint of
    /// an augmenting path if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in (self.neighbors)(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..self.n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// Maximum matching; `mate[v]` is `v`'s partner. When `stop_on_exposed` is
/// set, returns `None` as soon as some vertex is certainly left exposed by every
/// maximum matching, which is all a perfect-matching test needs.
fn run<F, I>(n: usize, neighbors: &F, stop_on_exposed: bool) -> Option<Vec<Option<usize>>>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    let mut b = Blossom {
        n,
        neighbors,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // greedy start
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(w) = neighbors(v).find(|&w| w != v && b.mate[w] == NONE) {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
    }
    for v in 0..n {
        if b.mate[v] != NONE {
            continue;
        }
        match b.find_path(v) {
            Some(end) => b.augment(end),
            None if stop_on_exposed => return None,
            None => {}
        }
    }
    Some(
        b.mate
            .into_iter()
            .map(|m| (m != NONE).then_some(m))
            .collect(),
    )
}

/// Maximum cardinality matching of the graph on `0..n` whose adjacency is
/// given by `neighbors`. Returns `mate[v]`.
pub fn maximum_matching<F, I>(n: usize, neighbors: F) -> Vec<Option<usize>>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    run(n, &neighbors, false).expect("full run always completes")
}

/// A perfect matching as sorted pairs `(u, v)`, `u < v`, ordered by `u`;
/// `None` when no perfect matching exists.
pub fn perfect_matching<F, I>(n: usize, neighbors: F) -> Option<Vec<(usize, usize)>>
where
    F: Fn(usize) -> I,
    I: Iterator<Item = usize>,
{
    if n % 2 == 1 {
        return None;
    }
    let mate = run(n, &neighbors, true)?;
    let mut pairs = Vec::with_capacity(n / 2);
    for (v, m) in mate.iter().enumerate() {
        let m = (*m)?;
        if v < m {
            pairs.push((v, m));
        }
    }
    Some(pairs)
}
