//! Reduced simplicial homology ranks over a characteristic-zero field.

use crate::linalg::exact_rank;

/// Ranks of the reduced homology of a simplicial complex.
///
/// `faces` is the complete face list as vertex bitmasks, *including* the
/// empty face `0` whenever the complex is nonvoid; the void complex is the
/// empty slice. The returned vector is indexed so that entry `i` is
/// `dim H̃_{i-1}`: entry 0 is the rank in degree -1 (which is 1 exactly for
/// the complex whose only face is empty), entry 1 counts connected
/// components minus one, and so on. Trailing zeros are trimmed.
pub fn reduced_homology_ranks(faces: &[u64]) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    debug_assert!(
        faces.contains(&0),
        "nonvoid complex must list the empty face"
    );
    let max_card = faces.iter().map(|f| f.count_ones()).max().unwrap() as usize;

    // by_card[k] = faces with k vertices, i.e. dimension k-1.
    let mut by_card: Vec<Vec<u64>> = vec![Vec::new(); max_card + 1];
    for &f in faces {
        by_card[f.count_ones() as usize].push(f);
    }
    for level in &mut by_card {
        level.sort_unstable();
        level.dedup();
    }

    // boundary_rank[k] = rank of the boundary map from k-vertex faces down
    // to (k-1)-vertex faces.
    let mut boundary_rank = vec![0usize; max_card + 2];
    for k in 1..=max_card {
        boundary_rank[k] = exact_rank(&boundary_matrix(&by_card[k - 1], &by_card[k]));
    }

    let mut ranks = Vec::with_capacity(max_card + 1);
    for k in 0..=max_card {
        let cycles = by_card[k].len() - boundary_rank[k];
        ranks.push(cycles - boundary_rank[k + 1]);
    }
    while ranks.last() == Some(&0) {
        ranks.pop();
    }
    ranks
}

/// Matrix of the simplicial boundary map, rows indexed by the codomain
/// faces, columns by the domain faces, with the usual alternating signs in
/// the ambient vertex order.
fn boundary_matrix(codomain: &[u64], domain: &[u64]) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64; domain.len()]; codomain.len()];
    for (c, &face) in domain.iter().enumerate() {
        let mut sign = 1i64;
        let mut bits = face;
        while bits != 0 {
            let v = bits.trailing_zeros();
            let sub = face & !(1 << v);
            let r = codomain
                .binary_search(&sub)
                .expect("complex closed under faces");
            rows[r][c] = sign;
            sign = -sign;
            bits &= bits - 1;
        }
    }
    rows
}

/// All subsets of `[0, n)` as masks, filtered by a hereditary predicate:
/// once a set fails, no superset is visited. Returns the full face list of
/// the complex the predicate defines (including the empty face if it holds).
pub fn hereditary_faces(n: usize, mut keep: impl FnMut(u64) -> bool) -> Vec<u64> {
    let mut out = Vec::new();
    if !keep(0) {
        return out;
    }
    let mut stack = vec![(0u64, 0usize)];
    out.push(0);
    while let Some((mask, next)) = stack.pop() {
        for v in next..n {
            let bigger = mask | (1 << v);
            if keep(bigger) {
                out.push(bigger);
                stack.push((bigger, v + 1));
            }
        }
    }
    out
}
