use alloc::vec;
use alloc::vec::Vec;

/// Disjoint-set forest over `0..n`.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so labels are stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Class label per element, classes numbered by first occurrence.
    pub(crate) fn labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut label_of_root = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = Vec::with_capacity(n);
        for x in 0..n {
            let r = self.find(x);
            if label_of_root[r] == usize::MAX {
                label_of_root[r] = next;
                next += 1;
            }
            out.push(label_of_root[r]);
        }
        out
    }
}

/// Groups `labels` into classes, each listing its members in increasing order.
pub(crate) fn classes_from_labels(labels: &[usize]) -> Vec<Vec<usize>> {
    let count = labels.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); count];
    for (x, &l) in labels.iter().enumerate() {
        out[l].push(x);
    }
    out
}

/// Every choice of one entry per list, in lexicographic order of positions.
pub(crate) fn cartesian(lists: &[Vec<usize>]) -> Cartesian<'_> {
    Cartesian {
        lists,
        cursor: vec![0; lists.len()],
        done: lists.iter().any(Vec::is_empty),
    }
}

pub(crate) struct Cartesian<'a> {
    lists: &'a [Vec<usize>],
    cursor: Vec<usize>,
    done: bool,
}

impl Iterator for Cartesian<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let item = self.cursor.iter().zip(self.lists).map(|(&i, l)| l[i]).collect();
        // advance, last position fastest
        self.done = true;
        for k in (0..self.lists.len()).rev() {
            self.cursor[k] += 1;
            if self.cursor[k] < self.lists[k].len() {
                self.done = false;
                break;
            }
            self.cursor[k] = 0;
        }
        Some(item)
    }
}
