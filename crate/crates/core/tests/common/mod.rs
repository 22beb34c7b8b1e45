//! Brute-force oracles on plain signed-integer words (`3` is x3, `-3` its
//! inverse). Nothing here calls into the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

pub type Raw = Vec<i32>;

pub fn reduce(w: &[i32]) -> Raw {
    let mut out: Raw = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn inverse(w: &[i32]) -> Raw {
    w.iter().rev().map(|l| -l).collect()
}

pub fn concat(parts: &[&[i32]]) -> Raw {
    reduce(&parts.concat())
}

pub fn cyclic_core(w: &[i32]) -> Raw {
    let mut v = reduce(w);
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v.pop();
        v.remove(0);
    }
    v
}

/// Least rotation of the cyclic core, in the integer order. Any fixed
/// order works for a canonical form.
pub fn cyclic_canon(w: &[i32]) -> Raw {
    let core = cyclic_core(w);
    (0..core.len().max(1))
        .map(|k| [&core[k.min(core.len())..], &core[..k.min(core.len())]].concat())
        .min()
        .unwrap_or_default()
}

/// All freely reduced words of the given rank and exact length.
pub fn words_of_length(rank: usize, len: usize) -> Vec<Raw> {
    let letters: Vec<i32> = (1..=rank as i32).flat_map(|i| [i, -i]).collect();
    let mut level = vec![Raw::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &level {
            for &l in &letters {
                if w.last() != Some(&-l) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        level = next;
    }
    level
}

pub fn words_up_to(rank: usize, max_len: usize) -> Vec<Raw> {
    (0..=max_len).flat_map(|n| words_of_length(rank, n)).collect()
}

pub fn is_cyclically_reduced(w: &[i32]) -> bool {
    reduce(w).len() == w.len() && (w.len() < 2 || w[0] != -w[w.len() - 1])
}

// ---- graphs ----

/// Whitehead edges of a linear word as vertex pairs, vertex of letter `l`
/// being `l` itself.
pub fn whitehead_edges(w: &[i32], cyclic: bool) -> Vec<(i32, i32)> {
    let mut e: Vec<(i32, i32)> = w.windows(2).map(|p| (p[0], -p[1])).collect();
    if cyclic && !w.is_empty() {
        e.push((w[w.len() - 1], -w[0]));
    }
    e
}

fn components(vertices: &BTreeSet<i32>, edges: &[(i32, i32)]) -> usize {
    let mut parent: HashMap<i32, i32> = vertices.iter().map(|&v| (v, v)).collect();
    fn find(p: &mut HashMap<i32, i32>, v: i32) -> i32 {
        let mut v = v;
        while p[&v] != v {
            v = p[&v];
        }
        v
    }
    for &(a, b) in edges {
        if vertices.contains(&a) && vertices.contains(&b) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent.insert(ra, rb);
        }
    }
    let vs: Vec<i32> = vertices.iter().copied().collect();
    vs.iter().map(|&v| find(&mut parent, v)).collect::<BTreeSet<_>>().len()
}

/// Cut vertices by deletion: `v` is one if removing it (and its edges) from
/// the support leaves more components. Loops never matter.
pub fn cut_vertices_brute(edges: &[(i32, i32)]) -> BTreeSet<i32> {
    let support: BTreeSet<i32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let base = components(&support, edges);
    support
        .iter()
        .copied()
        .filter(|&v| {
            let rest: BTreeSet<i32> = support.iter().copied().filter(|&u| u != v).collect();
            let kept: Vec<(i32, i32)> =
                edges.iter().copied().filter(|&(a, b)| a != v && b != v).collect();
            components(&rest, &kept) > base
        })
        .collect()
}

pub fn two_connected_brute(edges: &[(i32, i32)]) -> bool {
    let support: BTreeSet<i32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    !support.is_empty() && components(&support, edges) == 1 && cut_vertices_brute(edges).is_empty()
}

// ---- small cancellation ----

pub fn rotations(w: &[i32]) -> Vec<Raw> {
    (0..w.len()).map(|k| [&w[k..], &w[..k]].concat()).collect()
}

pub fn symmetrized(r: &[i32]) -> BTreeSet<Raw> {
    rotations(r).into_iter().chain(rotations(&inverse(r))).collect()
}

/// Largest common prefix over all pairs of distinct symmetrized elements.
pub fn max_piece_brute(r: &[i32]) -> usize {
    let set: Vec<Raw> = symmetrized(r).into_iter().collect();
    let mut best = 0;
    for i in 0..set.len() {
        for j in 0..set.len() {
            if i != j {
                let l = set[i].iter().zip(&set[j]).take_while(|(a, b)| a == b).count();
                best = best.max(l);
            }
        }
    }
    best
}

/// Freely reduced products of at most `max_factors` conjugates
/// `g·r^{±1}·g⁻¹` with `|g| ≤ max_conj`.
pub fn closure_products(
    r: &[i32],
    rank: usize,
    max_factors: usize,
    max_conj: usize,
) -> BTreeSet<Raw> {
    let conj = words_up_to(rank, max_conj);
    let mut atoms: BTreeSet<Raw> = BTreeSet::new();
    for g in &conj {
        for base in [r.to_vec(), inverse(r)] {
            atoms.insert(concat(&[g, &base, &inverse(g)]));
        }
    }
    let atoms: Vec<Raw> = atoms.into_iter().collect();
    let mut out: BTreeSet<Raw> = BTreeSet::new();
    let mut level: BTreeSet<Raw> = [Raw::new()].into();
    for _ in 0..max_factors {
        let mut next = BTreeSet::new();
        for w in &level {
            for a in &atoms {
                next.insert(concat(&[w, a]));
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

pub fn conjugate_atoms(r: &[i32], rank: usize, max_conj: usize) -> Vec<Raw> {
    let mut atoms: BTreeSet<Raw> = BTreeSet::new();
    for g in words_up_to(rank, max_conj) {
        for base in [r.to_vec(), inverse(r)] {
            atoms.insert(concat(&[&g, &base, &inverse(&g)]));
        }
    }
    atoms.into_iter().collect()
}

// ---- automorphisms ----

pub fn substitute(images: &[Raw], w: &[i32]) -> Raw {
    let mut out = Raw::new();
    for &l in w {
        let img = &images[l.unsigned_abs() as usize - 1];
        if l > 0 {
            out.extend_from_slice(img);
        } else {
            out.extend(inverse(img));
        }
    }
    reduce(&out)
}

/// Stallings folding: the words form a basis of `F_rank` iff the folded
/// graph of their petal bouquet is a single vertex carrying `rank` loops.
pub fn is_basis_folding(words: &[Raw], rank: usize) -> bool {
    if words.len() != rank {
        return false;
    }
    let mut edges: Vec<(usize, i32, usize)> = Vec::new();
    let mut vertices = 1;
    for w in words {
        if w.is_empty() {
            return false;
        }
        let mut cur = 0;
        for (k, &l) in w.iter().enumerate() {
            let next = if k + 1 == w.len() {
                0
            } else {
                vertices += 1;
                vertices - 1
            };
            if l > 0 {
                edges.push((cur, l, next));
            } else {
                edges.push((next, -l, cur));
            }
            cur = next;
        }
    }
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    loop {
        let mut changed = false;
        let mut out: HashMap<(usize, i32), usize> = HashMap::new();
        let mut inc: HashMap<(usize, i32), usize> = HashMap::new();
        for &(a, l, b) in &edges {
            let (a, b) = (find(&mut parent, a), find(&mut parent, b));
            if let Some(&b2) = out.get(&(a, l)) {
                let b2 = find(&mut parent, b2);
                if b2 != b {
                    parent[b2] = b;
                    changed = true;
                    continue;
                }
            } else {
                out.insert((a, l), b);
            }
            if let Some(&a2) = inc.get(&(b, l)) {
                let a2 = find(&mut parent, a2);
                if a2 != a {
                    parent[a2] = a;
                    changed = true;
                }
            } else {
                inc.insert((b, l), a);
            }
        }
        if !changed {
            break;
        }
    }
    let folded: BTreeSet<(usize, i32, usize)> = edges
        .iter()
        .map(|&(a, l, b)| (find(&mut parent, a), l, find(&mut parent, b)))
        .collect();
    let verts: BTreeSet<usize> = folded.iter().flat_map(|&(a, _, b)| [a, b]).collect();
    verts.len() == 1 && folded.len() == rank
}

// ---- primitivity ----

/// Elementary Nielsen automorphisms of `F_rank` as image tuples:
/// `x_i ↦ x_i x_j^{±1}`, `x_i ↦ x_j^{±1} x_i`, `x_i ↦ x_i⁻¹`, swaps.
pub fn nielsen_generators(rank: usize) -> Vec<Vec<Raw>> {
    let id: Vec<Raw> = (1..=rank as i32).map(|i| vec![i]).collect();
    let mut out = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            if i == j {
                continue;
            }
            for e in [1, -1] {
                let xj = (j as i32 + 1) * e;
                let mut right = id.clone();
                right[i] = vec![i as i32 + 1, xj];
                out.push(right);
                let mut left = id.clone();
                left[i] = vec![xj, i as i32 + 1];
                out.push(left);
            }
            if i < j {
                let mut swap = id.clone();
                swap.swap(i, j);
                out.push(swap);
            }
        }
        let mut inv = id.clone();
        inv[i] = vec![-(i as i32 + 1)];
        out.push(inv);
    }
    out
}

/// Cyclic canonical forms of every primitive conjugacy class reachable from
/// `x1` through cyclic words no longer than `cap`.
pub fn primitive_orbit(rank: usize, cap: usize) -> HashSet<Raw> {
    let gens = nielsen_generators(rank);
    let start = cyclic_canon(&[1]);
    let mut seen: HashSet<Raw> = [start.clone()].into();
    let mut queue: VecDeque<Raw> = [start].into();
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let image = cyclic_canon(&substitute(g, &w));
            if image.len() <= cap && seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen
}
