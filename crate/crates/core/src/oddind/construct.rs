//! Explicit odd independent sets and the constructions that build them.

use super::{is_odd_independent, Budget};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::generators::binomial;
use crate::graph::{Graph, GraphBuilder};
use crate::metrics::bipartition;
use crate::ops::{cartesian_product, product_index};

fn check_automorphism(g: &Graph, eta: &[usize]) -> Result<()> {
    let n = g.n();
    let bad = |m: &str| Err(Error::BadAutomorphism(m.into()));
    if eta.len() != n {
        return bad("length differs from vertex count");
    }
    let mut seen = vec![false; n];
    for &x in eta {
        if x >= n || seen[x] {
            return bad("not a permutation");
        }
        seen[x] = true;
    }
    if g.edges().any(|(u, v)| !g.has_edge(eta[u], eta[v])) {
        return bad("does not preserve adjacency");
    }
    for v in 0..n {
        if eta[v] == v {
            return bad("has a fixed point");
        }
        if !g.has_edge(v, eta[v]) {
            return bad("maps a vertex outside its neighbourhood");
        }
    }
    let mut done = vec![false; n];
    for v in 0..n {
        if done[v] {
            continue;
        }
        let mut len = 0;
        let mut x = v;
        while !done[x] {
            done[x] = true;
            x = eta[x];
            len += 1;
        }
        if len % 2 == 1 {
            return bad("has an odd orbit");
        }
    }
    Ok(())
}

fn sides(h: &Graph, want_even: bool) -> Result<(VertexSet, VertexSet)> {
    let parity_ok = (0..h.n()).all(|w| h.degree(w).is_multiple_of(2) == want_even);
    if !parity_ok {
        let kind = if want_even { "even" } else { "odd" };
        return Err(Error::BadH(format!("every degree must be {kind}")));
    }
    let (a, b) = bipartition(h).ok_or_else(|| Error::BadH("not bipartite".into()))?;
    Ok(if a.len() >= b.len() { (a, b) } else { (b, a) })
}

/// The odd independent set `S⁺` in `g □ h`: the copy of `s` in `G_w` for `w`
/// on the larger side of `h`, the copy of `η(s)` on the other side. Ids follow
/// [`cartesian_product`].
pub fn construct_mu_ois(g: &Graph, s: &VertexSet, eta: &[usize], h: &Graph) -> Result<VertexSet> {
    check_automorphism(g, eta)?;
    let (a, _) = sides(h, true)?;
    if s.universe() != g.n() || !is_odd_independent(g, s) {
        return Err(Error::NotOis);
    }
    let hn = h.n();
    let mut out = VertexSet::new(g.n() * hn);
    for w in 0..hn {
        for u in s.iter() {
            let label = if a.contains(w) { u } else { eta[u] };
            out.insert(product_index(label, w, hn));
        }
    }
    Ok(out)
}

/// The `G □ K_2` doubling: `(S, S*)` is odd independent in `g □ K_2` (copy 0
/// holds `S`); copies of the larger half go to the larger side of `h`.
pub fn construct_gk2_ois(g: &Graph, s_pair: (&VertexSet, &VertexSet), h: &Graph) -> Result<VertexSet> {
    let (a, _) = sides(h, false)?;
    let (s, t) = s_pair;
    let n = g.n();
    if s.universe() != n || t.universe() != n {
        return Err(Error::NotOis);
    }
    let k2 = Graph::from_edge_list(2, &[(0, 1)])?;
    let doubled = cartesian_product(g, &k2)?;
    let mut joint = VertexSet::new(2 * n);
    for u in s.iter() {
        joint.insert(product_index(u, 0, 2));
    }
    for u in t.iter() {
        joint.insert(product_index(u, 1, 2));
    }
    if !is_odd_independent(&doubled, &joint) {
        return Err(Error::NotOis);
    }
    let (big, small) = if s.len() >= t.len() { (s, t) } else { (t, s) };
    let hn = h.n();
    let mut out = VertexSet::new(n * hn);
    for w in 0..hn {
        let part = if a.contains(w) { big } else { small };
        for u in part.iter() {
            out.insert(product_index(u, w, hn));
        }
    }
    Ok(out)
}

/// Flip of the last coordinate of `Q_d`: an automorphism with every orbit of
/// length two and every image adjacent.
pub fn cube_last_flip(d: usize) -> Vec<usize> {
    (0..1usize << d).map(|i| i ^ 1).collect()
}

const GRAY: [usize; 4] = [0b00, 0b01, 0b11, 0b10];

/// Maps vertex `(u, w)` of `Q_k □ C_4` (ids of [`cartesian_product`]) to its
/// `Q_{k+2}` id: `u` in the leading `k` bits, the Gray code of `w` last.
pub fn cube_c4_to_cube(k: usize, set: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new(1 << (k + 2));
    for x in set.iter() {
        let (u, w) = (x / 4, x % 4);
        out.insert(u << 2 | GRAY[w]);
    }
    out
}

/// Odd-size subsets of `{1..4k}` up to size `2k-1` avoiding `4k`, and from
/// size `2k+1` on containing it, as `Q_{4k}` ids (element `4k` is bit 0).
pub fn cube_layer_ois(k: usize) -> Result<VertexSet> {
    if k == 0 || 4 * k > 12 {
        return Err(Error::BadParam("cube_layer_ois needs 1 <= k <= 3".into()));
    }
    let d = 4 * k;
    let mut out = VertexSet::new(1 << d);
    for i in 0..1usize << d {
        let size = i.count_ones() as usize;
        if size % 2 == 1 && ((size < 2 * k && i & 1 == 0) || (size > 2 * k && i & 1 == 1)) {
            out.insert(i);
        }
    }
    Ok(out)
}

/// `2 Σ_{i=1..k} C(4k-1, 2i-1)`.
pub fn cube_layer_size(k: usize) -> u128 {
    2 * (1..=k as u64).map(|i| binomial(4 * k as u64 - 1, 2 * i - 1)).sum::<u128>()
}

/// All 4-subsets of `{1..8}`, the 16 pairs across `{1..4}`/`{5..8}`, their
/// complements, the empty set and the full set: 104 vertices of `Q_8`.
pub fn q8_turan_ois() -> VertexSet {
    let mut out = VertexSet::new(256);
    let low = 0b1111_0000usize; // elements 1..4 are the top bits
    for i in 0..256usize {
        let size = i.count_ones();
        let cross = (i & low).count_ones() == 1 && (i & !low & 0xff).count_ones() == 1;
        let co_cross = {
            let c = !i & 0xff;
            (c & low).count_ones() == 1 && (c & !low & 0xff).count_ones() == 1
        };
        if size == 4 || size == 0 || size == 8 || (size == 2 && cross) || (size == 6 && co_cross) {
            out.insert(i);
        }
    }
    out
}

/// The 112 characteristic vectors listed for `Q_8`, as vertex ids.
pub const Q8_112: [usize; 112] = [
    0b00000010, 0b00000100, 0b00000111, 0b00001000, 0b00001011, 0b00001101, 0b00001110,
    0b00010000, 0b00010011, 0b00010101, 0b00010110, 0b00011001, 0b00011010, 0b00011100,
    0b00100000, 0b00100011, 0b00100101, 0b00100110, 0b00101001, 0b00101100, 0b00101111,
    0b00110001, 0b00110010, 0b00110111, 0b00111000, 0b00111011, 0b00111101, 0b00111110,
    0b01000000, 0b01000011, 0b01000101, 0b01001001, 0b01001010, 0b01001100, 0b01001111,
    0b01010001, 0b01010010, 0b01010100, 0b01010111, 0b01011011, 0b01011101, 0b01011110,
    0b01100001, 0b01100010, 0b01100100, 0b01100111, 0b01101000, 0b01101011, 0b01101110,
    0b01110000, 0b01110101, 0b01110110, 0b01111001, 0b01111010, 0b01111100, 0b01111111,
    0b10000000, 0b10000011, 0b10000101, 0b10000110, 0b10001001, 0b10001010, 0b10001111,
    0b10010001, 0b10010100, 0b10010111, 0b10011000, 0b10011011, 0b10011101, 0b10011110,
    0b10100001, 0b10100010, 0b10100100, 0b10101000, 0b10101011, 0b10101101, 0b10101110,
    0b10110000, 0b10110011, 0b10110101, 0b10110110, 0b10111010, 0b10111100, 0b10111111,
    0b11000001, 0b11000010, 0b11000100, 0b11000111, 0b11001000, 0b11001101, 0b11001110,
    0b11010000, 0b11010011, 0b11010110, 0b11011001, 0b11011010, 0b11011100, 0b11011111,
    0b11100011, 0b11100101, 0b11100110, 0b11101001, 0b11101010, 0b11101100, 0b11101111,
    0b11110001, 0b11110010, 0b11110100, 0b11110111, 0b11111000, 0b11111011, 0b11111101,
];

pub fn q8_paper_112() -> VertexSet {
    VertexSet::from_ids(256, Q8_112).expect("ids below 256")
}

/// `{10j + a, 10j + b, 10j + c : j = 0..5}` in the Hoffman–Singleton graph.
pub fn hs_15_variant(seed: [usize; 3]) -> VertexSet {
    let mut out = VertexSet::new(50);
    for j in 0..5 {
        for s in seed {
            out.insert(10 * j + s % 10);
        }
    }
    out
}

pub fn hs_15_ois() -> VertexSet {
    hs_15_variant([0, 2, 7])
}

/// Further seeds producing 15-element odd independent sets.
pub const HS_15_SEEDS: [[usize; 3]; 4] = [[0, 5, 8], [1, 3, 5], [1, 4, 9], [2, 6, 9]];

/// Adds a vertex `w` joined to every vertex outside a maximum independent
/// set `B` that sees `B` an even number of times; then `B ∪ {w}` is odd
/// independent and `α_od = α = α(g) + 1`. Returns the graph (`w = n`) and `B ∪ {w}`.
pub fn extend_to_equal(g: &Graph, budget: Budget) -> Result<(Graph, VertexSet)> {
    let a = super::alpha(g, budget);
    if !a.exact {
        return Err(Error::Timeout("maximum independent set"));
    }
    let n = g.n();
    let b = a.witness;
    let mut builder = GraphBuilder::new(n + 1)?;
    for (u, v) in g.edges() {
        builder.add_edge(u, v);
    }
    for v in 0..n {
        if !b.contains(v) && g.neighbors(v).intersection_len(&b).is_multiple_of(2) {
            builder.add_edge(v, n);
        }
    }
    let mut plus = b.resized(n + 1);
    plus.insert(n);
    Ok((builder.build(), plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::oddind::odd_profile;

    #[test]
    fn hs_sets() {
        let hs = hoffman_singleton();
        let s = hs_15_ois();
        assert_eq!(s.len(), 15);
        assert!(is_odd_independent(&hs, &s));
        let prof = odd_profile(&hs, &s);
        assert!((0..50).filter(|v| !s.contains(*v)).all(|v| prof[v] == 3));
        for seed in HS_15_SEEDS {
            assert!(is_odd_independent(&hs, &hs_15_variant(seed)));
        }
    }

    #[test]
    fn q8_sets() {
        let q8 = hypercube(8).unwrap();
        let t = q8_turan_ois();
        assert_eq!(t.len(), 104);
        assert!(is_odd_independent(&q8, &t));
        let prof = odd_profile(&q8, &t);
        for v in (0..256usize).filter(|v| v.count_ones() == 3) {
            assert!(prof[v] == 5 || prof[v] == 7);
        }
        let p = q8_paper_112();
        assert_eq!(p.len(), 112);
        assert!(is_odd_independent(&q8, &p));
    }

    #[test]
    fn layers() {
        for k in 1..=2 {
            let s = cube_layer_ois(k).unwrap();
            assert_eq!(s.len() as u128, cube_layer_size(k));
            assert!(is_odd_independent(&hypercube(4 * k).unwrap(), &s));
        }
        assert_eq!(cube_layer_size(1), 6);
        assert_eq!(cube_layer_size(2), 84);
        assert_eq!(cube_layer_size(3), 2 * (11 + 165 + 462));
    }

    #[test]
    fn mu_chain_to_q8() {
        let c4 = cycle(4).unwrap();
        let s6 = cube_layer_ois(1).unwrap();
        let s24 = construct_mu_ois(&hypercube(4).unwrap(), &s6, &cube_last_flip(4), &c4).unwrap();
        let s24 = cube_c4_to_cube(4, &s24);
        assert_eq!(s24.len(), 24);
        let q6 = hypercube(6).unwrap();
        assert!(is_odd_independent(&q6, &s24));
        let s96 = construct_mu_ois(&q6, &s24, &cube_last_flip(6), &c4).unwrap();
        let s96 = cube_c4_to_cube(6, &s96);
        assert_eq!(s96.len(), 96);
        assert!(is_odd_independent(&hypercube(8).unwrap(), &s96));
    }

    #[test]
    fn mu_preconditions() {
        let q4 = hypercube(4).unwrap();
        let s6 = cube_layer_ois(1).unwrap();
        let p3 = path(3).unwrap();
        assert!(matches!(construct_mu_ois(&q4, &s6, &cube_last_flip(4), &p3), Err(Error::BadH(_))));
        let ident: Vec<usize> = (0..16).collect();
        assert!(matches!(
            construct_mu_ois(&q4, &s6, &ident, &cycle(4).unwrap()),
            Err(Error::BadAutomorphism(_))
        ));
        let bad = q4.set_of([0, 3]).unwrap();
        assert_eq!(construct_mu_ois(&q4, &bad, &cube_last_flip(4), &cycle(4).unwrap()), Err(Error::NotOis));
    }

    #[test]
    fn gk2_examples() {
        let k2 = complete(2).unwrap();
        let c4 = cycle(4).unwrap();
        // Q_3 = C_4 □ K_2: one colour class of the bipartition, split by copy
        let s = c4.set_of([0, 2]).unwrap();
        let t = c4.set_of([1, 3]).unwrap();
        let out = construct_gk2_ois(&c4, (&s, &t), &k2).unwrap();
        assert_eq!(out.len(), 4);
        assert!(is_odd_independent(&cartesian_product(&c4, &k2).unwrap(), &out));
        let one = k2.set_of([0]).unwrap();
        let none = k2.vertex_set();
        let out = construct_gk2_ois(&k2, (&one, &none), &k2).unwrap();
        assert_eq!(out.len(), 1);
    }

    #[test]
    fn extension() {
        let b = Budget::secs(10);
        let (h, plus) = extend_to_equal(&cycle(4).unwrap(), b).unwrap();
        assert_eq!(h.n(), 5);
        assert!(is_odd_independent(&h, &plus));
        assert_eq!(plus.len(), 3);
        let (h, _) = extend_to_equal(&complete(4).unwrap(), b).unwrap();
        assert_eq!(h.degree(4), 0);
    }
}
