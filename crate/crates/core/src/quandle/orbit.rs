use std::collections::{BTreeMap, VecDeque};
use std::fmt::Debug;

use rayon::prelude::*;

use super::braid::{BraidAction, Generator};

/// A set of points with invertible moves; the orbit engine explores it.
pub trait MoveSystem: Sync {
    type Point: Clone + Send + Sync;
    type Move: Copy + Ord + Debug + Send + Sync;

    fn moves(&self, p: &Self::Point) -> Vec<Self::Move>;
    fn apply_move(&self, m: Self::Move, p: &Self::Point) -> Self::Point;
    fn inverse_move(&self, m: Self::Move) -> Self::Move;
}

impl<A: BraidAction> MoveSystem for A {
    type Point = A::Point;
    type Move = Generator;

    fn moves(&self, p: &A::Point) -> Vec<Generator> {
        Generator::all(self.strands(p))
    }

    fn apply_move(&self, m: Generator, p: &A::Point) -> A::Point {
        self.apply_unchecked(m, p)
    }

    fn inverse_move(&self, m: Generator) -> Generator {
        m.inv()
    }
}

#[derive(Clone, Debug)]
pub struct OrbitEntry<P, M> {
    pub point: P,
    /// Moves taking `seeds[seed]` to `point`.
    pub word: Vec<M>,
    pub seed: usize,
}

/// `seeds[a]·word_a` and `seeds[b]·word_b` share a key.
#[derive(Clone, Debug)]
struct SeedLink<M> {
    a: usize,
    b: usize,
    word_a: Vec<M>,
    word_b: Vec<M>,
}

/// Deduplicated BFS closure keyed by a canonical form.
#[derive(Clone, Debug)]
pub struct OrbitStore<K, P, M> {
    entries: BTreeMap<K, OrbitEntry<P, M>>,
    parent: Vec<usize>,
    links: Vec<SeedLink<M>>,
    truncated: bool,
    expanded: usize,
}

impl<K: Ord + Clone, P: Clone, M: Copy> OrbitStore<K, P, M> {
    fn new(num_seeds: usize) -> Self {
        OrbitStore {
            entries: BTreeMap::new(),
            parent: (0..num_seeds).collect(),
            links: Vec::new(),
            truncated: false,
            expanded: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True iff the step budget stopped the search before closure.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Number of points whose neighbours were generated.
    pub fn expanded(&self) -> usize {
        self.expanded
    }

    pub fn get(&self, k: &K) -> Option<&OrbitEntry<P, M>> {
        self.entries.get(k)
    }

    pub fn contains(&self, k: &K) -> bool {
        self.entries.contains_key(k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &OrbitEntry<P, M>)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    fn find(&self, mut i: usize) -> usize {
        while self.parent[i] != i {
            i = self.parent[i];
        }
        i
    }

    /// Component id of a seed: the smallest seed index it was merged with.
    pub fn component(&self, seed: usize) -> usize {
        self.find(seed)
    }

    pub fn same_component(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }

    /// Least-key entry of each component, ordered by key.
    pub fn representatives(&self) -> Vec<(&K, &OrbitEntry<P, M>)> {
        let mut best: BTreeMap<usize, (&K, &OrbitEntry<P, M>)> = BTreeMap::new();
        for (k, e) in &self.entries {
            best.entry(self.find(e.seed)).or_insert((k, e));
        }
        let mut reps: Vec<_> = best.into_values().collect();
        reps.sort_by(|x, y| x.0.cmp(y.0));
        reps
    }

    /// Moves taking `seeds[a]` to a point with the same key as `seeds[b]`,
    /// if the two seeds were merged.
    pub fn connecting_word(&self, a: usize, b: usize, inverse: impl Fn(M) -> M) -> Option<Vec<M>> {
        if a == b {
            return Some(Vec::new());
        }
        if !self.same_component(a, b) {
            return None;
        }
        let n = self.parent.len();
        let mut adj: Vec<Vec<(usize, Vec<M>)>> = vec![Vec::new(); n];
        for l in &self.links {
            let fwd: Vec<M> = l
                .word_a
                .iter()
                .copied()
                .chain(l.word_b.iter().rev().map(|&m| inverse(m)))
                .collect();
            let back: Vec<M> = l
                .word_b
                .iter()
                .copied()
                .chain(l.word_a.iter().rev().map(|&m| inverse(m)))
                .collect();
            adj[l.a].push((l.b, fwd));
            adj[l.b].push((l.a, back));
        }
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for (idx, (v, _)) in adj[u].iter().enumerate() {
                if !seen[*v] {
                    seen[*v] = true;
                    prev[*v] = Some((u, idx));
                    queue.push_back(*v);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = b;
        while cur != a {
            let (u, idx) = prev[cur]?;
            path.push(adj[u][idx].1.clone());
            cur = u;
        }
        Some(path.into_iter().rev().flatten().collect())
    }
}

/// Breadth-first closure of `seeds` under all moves, keeping only points that
/// satisfy `bound`. Seeds are stored even when they violate the bound.
///
/// Levels are expanded in parallel and merged sequentially in (key, word,
/// seed) order, so the store does not depend on the thread schedule. At most
/// `budget` points are expanded; hitting the limit sets `truncated`.
pub fn orbit_enumerate<S, K, B, F>(
    sys: &S,
    seeds: &[S::Point],
    bound: B,
    key: F,
    budget: usize,
) -> OrbitStore<K, S::Point, S::Move>
where
    S: MoveSystem,
    K: Ord + Clone + Send + Sync,
    B: Fn(&S::Point) -> bool + Sync,
    F: Fn(&S::Point) -> K + Sync,
{
    let mut store = OrbitStore::new(seeds.len());
    let mut frontier = Vec::new();
    for (i, s) in seeds.iter().enumerate() {
        let k = key(s);
        match store.entries.get(&k) {
            Some(e) => {
                let a = e.seed;
                if store.union(a, i) {
                    store.links.push(SeedLink {
                        a,
                        b: i,
                        word_a: Vec::new(),
                        word_b: Vec::new(),
                    });
                }
            }
            None => {
                store.entries.insert(
                    k.clone(),
                    OrbitEntry {
                        point: s.clone(),
                        word: Vec::new(),
                        seed: i,
                    },
                );
                frontier.push(k);
            }
        }
    }
    frontier.sort();

    while !frontier.is_empty() {
        let remaining = budget.saturating_sub(store.expanded);
        if frontier.len() > remaining {
            frontier.truncate(remaining);
            store.truncated = true;
        }
        let entries = &store.entries;
        let mut candidates: Vec<(K, Vec<S::Move>, usize, S::Point)> = frontier
            .par_iter()
            .flat_map_iter(|k| {
                let e = &entries[k];
                sys.moves(&e.point)
                    .into_iter()
                    .filter_map(|m| {
                        let q = sys.apply_move(m, &e.point);
                        if !bound(&q) {
                            return None;
                        }
                        let mut w = e.word.clone();
                        w.push(m);
                        Some((key(&q), w, e.seed, q))
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        store.expanded += frontier.len();
        candidates.par_sort_by(|x, y| (&x.0, &x.1, x.2).cmp(&(&y.0, &y.1, y.2)));

        let mut next = Vec::new();
        for (k, w, seed, q) in candidates {
            match store.entries.get(&k) {
                Some(e) => {
                    let (a, wa) = (e.seed, e.word.clone());
                    if store.union(a, seed) {
                        store.links.push(SeedLink {
                            a,
                            b: seed,
                            word_a: wa,
                            word_b: w,
                        });
                    }
                }
                None => {
                    store.entries.insert(
                        k.clone(),
                        OrbitEntry {
                            point: q,
                            word: w,
                            seed,
                        },
                    );
                    next.push(k);
                }
            }
        }
        if store.truncated {
            break;
        }
        frontier = next;
    }
    store
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{Dihedral, Tuples};

    #[test]
    fn dihedral_pair_orbit_matches_exhaustive_closure() {
        let act = Tuples(Dihedral { n: 3 });
        let store = orbit_enumerate(&act, &[vec![0u64, 1]], |_| true, |p| p.clone(), 1000);
        assert!(!store.truncated());
        // Oracle: fixed point iteration over all 9 pairs.
        let mut reach = vec![vec![0u64, 1]];
        loop {
            let mut grew = false;
            for p in reach.clone() {
                for g in Generator::all(2) {
                    let q = act.apply_unchecked(g, &p);
                    if !reach.contains(&q) {
                        reach.push(q);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        reach.sort();
        let keys: Vec<_> = store.keys().cloned().collect();
        assert_eq!(keys, reach);
    }

    #[test]
    fn empty_seeds() {
        let act = Tuples(Dihedral { n: 5 });
        let store = orbit_enumerate(&act, &[], |_| true, |p: &Vec<u64>| p.clone(), 10);
        assert!(store.is_empty());
        assert!(store.representatives().is_empty());
    }

    #[test]
    fn budget_truncates() {
        let act = Tuples(Dihedral { n: 101 });
        let store = orbit_enumerate(&act, &[vec![0u64, 1, 5]], |_| true, |p| p.clone(), 3);
        assert!(store.truncated());
        assert_eq!(store.expanded(), 3);
    }

    #[test]
    fn merged_seeds_get_a_connecting_word() {
        let act = Tuples(Dihedral { n: 7 });
        let a = vec![0u64, 1, 3];
        let b = act.apply_unchecked(Generator::pos(1), &act.apply_unchecked(Generator::neg(2), &a));
        let store = orbit_enumerate(&act, &[a.clone(), b.clone()], |_| true, |p| p.clone(), 10_000);
        assert!(store.same_component(0, 1));
        let w = store.connecting_word(0, 1, |g| g.inv()).unwrap();
        let end = w.iter().fold(a, |acc, &g| act.apply_unchecked(g, &acc));
        assert_eq!(end, b);
        assert_eq!(store.representatives().len(), 1);
    }
}
