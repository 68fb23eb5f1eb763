use alloc::vec::Vec;

use super::model::FiniteModel;

/// Largest model handled by the exhaustive isomorphism search.
pub const ISO_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[x]` is the image of `x`.
    Found(Vec<usize>),
    NotIsomorphic,
    /// Too large, or the node budget ran out.
    Undecided,
}

fn additive_order(m: &FiniteModel, x: usize) -> usize {
    let mut k = 1;
    let mut y = x;
    while y != m.zero() {
        y = m.add(y, x);
        k += 1;
    }
    k
}

/// Per-element data preserved by ring isomorphisms.
fn signature(m: &FiniteModel, x: usize) -> (usize, usize, usize, bool) {
    let ann = (0..m.size()).filter(|&y| m.mul(x, y) == m.zero()).count();
    let squares_to = (0..m.size()).filter(|&y| m.mul(y, y) == x).count();
    (additive_order(m, x), ann, squares_to, m.mul(x, x) == x)
}

/// Whether `map` is a bijective ring homomorphism `a → b`; returns a failing pair otherwise.
pub fn check_isomorphism(a: &FiniteModel, b: &FiniteModel, map: &[usize]) -> Result<(), (usize, usize)> {
    let n = a.size();
    if map.len() != n || b.size() != n {
        return Err((0, 0));
    }
    let mut hit = alloc::vec![false; n];
    for x in 0..n {
        if hit[map[x]] {
            return Err((x, x));
        }
        hit[map[x]] = true;
    }
    if map[a.one()] != b.one() {
        return Err((a.one(), a.one()));
    }
    for x in 0..n {
        for y in 0..n {
            if map[a.add(x, y)] != b.add(map[x], map[y]) || map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                return Err((x, y));
            }
        }
    }
    Ok(())
}

/// Backtracking search for a ring isomorphism, assigning images to additive generators.
pub fn find_isomorphism(a: &FiniteModel, b: &FiniteModel, budget: usize) -> IsoOutcome {
    let n = a.size();
    if n != b.size() {
        return IsoOutcome::NotIsomorphic;
    }
    if n > ISO_LIMIT {
        return IsoOutcome::Undecided;
    }
    let sig_a: Vec<_> = (0..n).map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = (0..n).map(|x| signature(b, x)).collect();
    let (mut sa, mut sb) = (sig_a.clone(), sig_b.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return IsoOutcome::NotIsomorphic;
    }

    // additive generators, largest order first, starting from 1
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (x != a.one(), core::cmp::Reverse(sig_a[x].0), x));
    let mut gens = Vec::new();
    let mut span = alloc::vec![false; n];
    span[a.zero()] = true;
    for x in order {
        if !span[x] {
            gens.push(x);
            span = extend_span(a, &span, x);
        }
    }

    let mut map: Vec<Option<usize>> = alloc::vec![None; n];
    map[a.zero()] = Some(b.zero());
    let mut nodes = 0usize;
    match assign(a, b, &gens, 0, &mut map, &sig_a, &sig_b, &mut nodes, budget) {
        Some(true) => {
            let m: Vec<usize> = map.into_iter().map(|v| v.unwrap()).collect();
            debug_assert!(check_isomorphism(a, b, &m).is_ok());
            IsoOutcome::Found(m)
        }
        Some(false) => IsoOutcome::NotIsomorphic,
        None => IsoOutcome::Undecided,
    }
}

fn extend_span(m: &FiniteModel, span: &[bool], g: usize) -> Vec<bool> {
    let mut out = span.to_vec();
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..m.size() {
            if out[x] && !out[m.add(x, g)] {
                out[m.add(x, g)] = true;
                changed = true;
            }
        }
    }
    out
}

/// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
#[allow(clippy::too_many_arguments)]
fn assign(
    a: &FiniteModel,
    b: &FiniteModel,
    gens: &[usize],
    depth: usize,
    map: &mut Vec<Option<usize>>,
    sig_a: &[(usize, usize, usize, bool)],
    sig_b: &[(usize, usize, usize, bool)],
    nodes: &mut usize,
    budget: usize,
) -> Option<bool> {
    if depth == gens.len() {
        return Some(true);
    }
    let g = gens[depth];
    let candidates: Vec<usize> = if g == a.one() {
        alloc::vec![b.one()]
    } else {
        (0..b.size()).filter(|&h| sig_b[h] == sig_a[g] && !map.contains(&Some(h))).collect()
    };
    for h in candidates {
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let saved = map.clone();
        if extend_map(a, b, map, g, h) && multiplicative_so_far(a, b, map) {
            match assign(a, b, gens, depth + 1, map, sig_a, sig_b, nodes, budget) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
        }
        *map = saved;
    }
    Some(false)
}

/// Extends `map` additively by `g ↦ h`; false on a clash or loss of injectivity.
fn extend_map(a: &FiniteModel, b: &FiniteModel, map: &mut [Option<usize>], g: usize, h: usize) -> bool {
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..a.size() {
            let Some(fx) = map[x] else { continue };
            let y = a.add(x, g);
            let fy = b.add(fx, h);
            match map[y] {
                Some(v) if v != fy => return false,
                Some(_) => {}
                None => {
                    map[y] = Some(fy);
                    changed = true;
                }
            }
        }
    }
    let mut hit = alloc::vec![false; b.size()];
    for v in map.iter().flatten() {
        if hit[*v] {
            return false;
        }
        hit[*v] = true;
    }
    true
}

fn multiplicative_so_far(a: &FiniteModel, b: &FiniteModel, map: &[Option<usize>]) -> bool {
    for x in 0..a.size() {
        let Some(fx) = map[x] else { continue };
        for y in x..a.size() {
            let Some(fy) = map[y] else { continue };
            if let Some(fxy) = map[a.mul(x, y)] {
                if fxy != b.mul(fx, fy) {
                    return false;
                }
            }
        }
    }
    true
}
