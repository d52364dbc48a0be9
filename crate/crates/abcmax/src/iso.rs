//! Graph isomorphism for small graphs. Iterated neighbor-color refinement
//! splits the vertices into classes, then a backtracking search over
//! class-respecting bijections decides. Only ever called on handfuls of
//! maximizers (n <= 10), never inside the enumeration hot loop.

use crate::graph::Graph;
use alloc::vec;
use alloc::vec::Vec;

/// True iff some vertex bijection maps edges onto edges exactly.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let cg = refine(g);
    let ch = refine(h);
    // canonical color ranks come from sorted signatures, so isomorphic graphs
    // get identical color multisets
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return false;
    }
    // match rare color classes first
    let n = g.n();
    let mut class_size = vec![0usize; n];
    for &c in &cg {
        class_size[c] += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&u| (class_size[cg[u]], cg[u], u));
    let mut image = vec![usize::MAX; n];
    let mut used: u32 = 0;
    extend(g, h, &cg, &ch, &order, 0, &mut image, &mut used)
}

/// Color classes by degree, then repeatedly by the multiset of neighbor
/// colors, until the class count stops growing. Ranks are taken from the
/// sorted signature list, so they are graph-independent.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    rank_in_place(&mut color);
    loop {
        let before = 1 + color.iter().copied().max().unwrap_or(0);
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for u in 0..n {
            let mut nb_colors: Vec<usize> = Vec::with_capacity(g.degree(u));
            let mut nb = g.row(u);
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                nb_colors.push(color[v]);
            }
            nb_colors.sort_unstable();
            sigs.push((color[u], nb_colors));
        }
        let mut sorted = sigs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        for u in 0..n {
            color[u] = sorted.binary_search(&sigs[u]).unwrap();
        }
        if sorted.len() == before {
            return color;
        }
    }
}

/// Replace values by their rank among the distinct values present.
fn rank_in_place(vals: &mut [usize]) {
    let mut sorted: Vec<usize> = vals.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for v in vals.iter_mut() {
        *v = sorted.binary_search(v).unwrap();
    }
}

fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    'cand: for w in 0..h.n() {
        if *used >> w & 1 == 1 || ch[w] != cg[u] {
            continue;
        }
        for &v in &order[..depth] {
            if g.has_edge(u, v) != h.has_edge(w, image[v]) {
                continue 'cand;
            }
        }
        image[u] = w;
        *used |= 1 << w;
        if extend(g, h, cg, ch, order, depth + 1, image, used) {
            return true;
        }
        *used &= !(1 << w);
    }
    false
}

// ===== tests =====
