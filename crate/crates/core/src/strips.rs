//! Border strips (ribbons): enumeration by shape geometry and by the
//! `beta + size * e_i` rearrangement of shifted parts.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::det::inversions;
use crate::tableaux::Partition;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BorderStrip {
    pub outer: Vec<usize>,
    pub inner: Vec<usize>,
    pub size: usize,
    /// Number of rows the strip occupies, minus one.
    pub ht: usize,
}

impl BorderStrip {
    pub fn outer(&self) -> Partition {
        Partition::new(self.outer.clone()).expect("outer shape is a partition")
    }

    pub fn sign(&self) -> i32 {
        if self.ht.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Cells `(row, col)` of the skew shape `outer / inner`, 0-based.
fn skew_cells(outer: &Partition, inner: &Partition) -> BTreeSet<(usize, usize)> {
    let mut cells = BTreeSet::new();
    for i in 0..outer.length() {
        for j in inner.part(i + 1)..outer.part(i + 1) {
            cells.insert((i, j));
        }
    }
    cells
}

fn is_connected(cells: &BTreeSet<(usize, usize)>) -> bool {
    let Some(&start) = cells.iter().next() else {
        return false;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((i, j)) = stack.pop() {
        let mut nbrs = vec![(i + 1, j), (i, j + 1)];
        if i > 0 {
            nbrs.push((i - 1, j));
        }
        if j > 0 {
            nbrs.push((i, j - 1));
        }
        for nb in nbrs {
            if cells.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == cells.len()
}

fn has_square(cells: &BTreeSet<(usize, usize)>) -> bool {
    cells.iter().any(|&(i, j)| {
        cells.contains(&(i + 1, j)) && cells.contains(&(i, j + 1)) && cells.contains(&(i + 1, j + 1))
    })
}

/// Whether `outer / inner` is a border strip; returns its height if so.
pub fn strip_height(outer: &Partition, inner: &Partition) -> Option<usize> {
    if !outer.contains(inner) {
        return None;
    }
    let cells = skew_cells(outer, inner);
    if cells.is_empty() || !is_connected(&cells) || has_square(&cells) {
        return None;
    }
    let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
    Some(rows.len() - 1)
}

/// All border strips of `size` boxes addable to `shape`, found by testing
/// every `mu ⊇ shape` with `|mu| = |shape| + size` for connectivity and the
/// absence of 2x2 squares.
pub fn add_border_strips_geometric(shape: &Partition, size: usize) -> Vec<BorderStrip> {
    if size == 0 {
        return Vec::new();
    }
    let mut out: Vec<BorderStrip> = Partition::all_of_size(shape.size() + size, shape.length() + size)
        .into_iter()
        .filter_map(|mu| {
            strip_height(&mu, shape).map(|ht| BorderStrip {
                outer: mu.parts().to_vec(),
                inner: shape.parts().to_vec(),
                size,
                ht,
            })
        })
        .collect();
    out.sort();
    out
}

/// Sort `beta` into strictly decreasing order.
///
/// Returns `None` if two entries coincide, otherwise the sorted sequence
/// and the number of adjacent swaps (inversions against decreasing order).
pub fn rearrange_decreasing(beta: &[i64]) -> Option<(Vec<i64>, usize)> {
    let mut sorted = beta.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let rev: Vec<std::cmp::Reverse<i64>> = beta.iter().map(|&b| std::cmp::Reverse(b)).collect();
    Some((sorted, inversions(&rev)))
}

/// Border strips via shifted parts: for each row `i` in `1..=rows`, add
/// `size` to entry `i` of `lambda + delta`; when the result has distinct
/// entries, sorting it and subtracting `delta` gives `mu`, and the number of
/// swaps is the height. `rows` defaults to `l(lambda) + size`.
pub fn add_border_strips_rearrangement(shape: &Partition, size: usize, rows: Option<usize>) -> Vec<BorderStrip> {
    if size == 0 {
        return Vec::new();
    }
    let len = rows.unwrap_or(shape.length() + size).max(shape.length());
    let base: Vec<i64> = shape
        .padded(len)
        .iter()
        .enumerate()
        .map(|(i, &p)| (p + len - 1 - i) as i64)
        .collect();
    let mut out = Vec::new();
    for i in 0..len {
        let mut beta = base.clone();
        beta[i] += size as i64;
        if let Some((sorted, swaps)) = rearrange_decreasing(&beta) {
            let mu: Vec<usize> = sorted
                .iter()
                .enumerate()
                .map(|(j, &b)| (b - (len - 1 - j) as i64) as usize)
                .collect();
            let outer = Partition::new(mu).expect("rearranged parts form a partition");
            out.push(BorderStrip {
                outer: outer.parts().to_vec(),
                inner: shape.parts().to_vec(),
                size,
                ht: swaps,
            });
        }
    }
    out.sort();
    out
}

/// Border strips of `size` boxes addable to `shape` (geometric enumeration).
pub fn add_border_strips(shape: &Partition, size: usize) -> Vec<BorderStrip> {
    add_border_strips_geometric(shape, size)
}
