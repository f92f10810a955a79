use std::collections::{BTreeSet, HashMap};

use braid_core::Sign;

use crate::freeword::FreeWord;

/// Whether the given words generate the whole free product on the listed
/// generators, decided by graph folding.
///
/// The words are wedged as loops at a base vertex and the graph is folded
/// until no vertex has two equally labelled edges in the same direction.
/// Reading a reduced word from the base then traces edges successfully and
/// returns to the base exactly when the word lies in the generated
/// subgroup, so the subgroup is everything iff every single generator
/// labels a loop at the base.
pub fn generates_whole_group(words: &[FreeWord], labels: &BTreeSet<usize>) -> bool {
    let mut graph = Graph::new();
    for word in words {
        graph.add_loop(word);
    }
    graph.fold();
    let base = graph.find(0);
    labels.iter().all(|&label| {
        graph
            .sole_target(base, (label, true))
            .is_some_and(|t| t == base)
    })
}

/// Edge keys pair a generator index with a direction: `(ℓ, true)` is an
/// edge read as `dℓ`, `(ℓ, false)` as `dℓ⁻¹`.
type Key = (usize, bool);

struct Graph {
    parent: Vec<usize>,
    edges: Vec<HashMap<Key, Vec<usize>>>,
}

impl Graph {
    fn new() -> Self {
        Graph {
            parent: vec![0],
            edges: vec![HashMap::new()],
        }
    }

    fn fresh(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        self.edges.push(HashMap::new());
        id
    }

    fn find(&mut self, v: usize) -> usize {
        let mut v = v;
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn add_loop(&mut self, word: &FreeWord) {
        let letters = word.letters();
        let mut current = 0;
        for (k, letter) in letters.iter().enumerate() {
            let next = if k + 1 == letters.len() { 0 } else { self.fresh() };
            let positive = letter.sign == Sign::Positive;
            self.edges[current]
                .entry((letter.index, positive))
                .or_default()
                .push(next);
            self.edges[next]
                .entry((letter.index, !positive))
                .or_default()
                .push(current);
            current = next;
        }
    }

    /// Merges `a` and `b`, pooling their edge lists on the survivor.
    fn union(&mut self, a: usize, b: usize) -> usize {
        let a = self.find(a);
        let b = self.find(b);
        if a == b {
            return a;
        }
        let (keep, drop) = if self.edges[a].len() >= self.edges[b].len() {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[drop] = keep;
        let moved = std::mem::take(&mut self.edges[drop]);
        for (key, targets) in moved {
            self.edges[keep].entry(key).or_default().extend(targets);
        }
        keep
    }

    /// Folds to completion: while some vertex carries one key with two
    /// distinct targets, those targets are identified.
    fn fold(&mut self) {
        let mut pending: Vec<usize> = (0..self.parent.len()).collect();
        while let Some(raw) = pending.pop() {
            if self.parent[raw] != raw {
                continue;
            }
            let keys: Vec<Key> = self.edges[raw].keys().copied().collect();
            for key in keys {
                let home = self.find(raw);
                let Some(list) = self.edges[home].get_mut(&key) else {
                    continue;
                };
                let taken = std::mem::take(list);
                let mut rooted: Vec<usize> =
                    taken.into_iter().map(|t| self.find(t)).collect();
                rooted.sort_unstable();
                rooted.dedup();
                if rooted.len() > 1 {
                    let survivor = rooted
                        .iter()
                        .copied()
                        .reduce(|a, b| self.union(a, b))
                        .expect("nonempty");
                    let target = self.find(survivor);
                    let home = self.find(home);
                    self.edges[home].entry(key).or_default().push(target);
                    pending.push(home);
                    pending.push(target);
                    break;
                }
                *self.edges[home].get_mut(&key).expect("just accessed") = rooted;
            }
        }
    }

    /// The single target of `key` at `v` after folding, if present.
    fn sole_target(&mut self, v: usize, key: Key) -> Option<usize> {
        let list = self.edges[v].get(&key)?.clone();
        let mut rooted: Vec<usize> = list.into_iter().map(|t| self.find(t)).collect();
        rooted.sort_unstable();
        rooted.dedup();
        debug_assert!(rooted.len() <= 1, "graph not fully folded");
        rooted.pop()
    }
}
