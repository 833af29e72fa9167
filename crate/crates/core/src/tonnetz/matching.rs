//! Augmenting-path bipartite matching with a Hall certificate on failure.

/// `left` nodes that together see fewer than `left.len()` right nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct HallViolation {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Matches every left node; `adj[u]` must be sorted for reproducible output.
/// Returns `match_of_left` or the alternating-reachable set of the first
/// left node that cannot be matched.
pub(crate) fn perfect_matching(n_right: usize, adj: &[Vec<usize>]) -> Result<Vec<usize>, HallViolation> {
    let mut owner: Vec<Option<usize>> = vec![None; n_right];
    for u in 0..adj.len() {
        let mut seen_left = vec![false; adj.len()];
        let mut seen_right = vec![false; n_right];
        if !augment(u, adj, &mut owner, &mut seen_left, &mut seen_right) {
            let left = (0..adj.len()).filter(|&i| seen_left[i]).collect();
            let right = (0..n_right).filter(|&j| seen_right[j]).collect();
            return Err(HallViolation { left, right });
        }
    }
    let mut out = vec![usize::MAX; adj.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(u) = *o {
            out[u] = v;
        }
    }
    Ok(out)
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    owner: &mut [Option<usize>],
    seen_left: &mut [bool],
    seen_right: &mut [bool],
) -> bool {
    seen_left[u] = true;
    for &v in &adj[u] {
        if seen_right[v] {
            continue;
        }
        seen_right[v] = true;
        let free = match owner[v] {
            None => true,
            Some(w) => augment(w, adj, owner, seen_left, seen_right),
        };
        if free {
            owner[v] = Some(u);
            return true;
        }
    }
    false
}
