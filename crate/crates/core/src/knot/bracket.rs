//! Kauffman bracket `⟨D⟩ ∈ ℤ[A^±1]`, normalized so that `⟨O⟩ = 1`.
//!
//! At a crossing `(a, b, c, d)` the A-smoothing joins `a–b` and `c–d`, the
//! B-smoothing joins `a–d` and `b–c`. A state with `σ = #A − #B` and `L`
//! loops contributes `A^σ·δ^(L−1)` with `δ = −A² − A⁻²`.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::pd::PDCode;
use crate::laurent::LaurentPoly;

/// Crossing count up to which [`kauffman_bracket`] enumerates all states.
pub const NAIVE_STATE_SUM_LIMIT: usize = 20;

fn delta() -> LaurentPoly {
    LaurentPoly::from_coeffs(-2, [-1, 0, 0, 0, -1])
}

fn assemble(counts: impl IntoIterator<Item = ((i64, u32), BigInt)>) -> LaurentPoly {
    let mut by_loops: HashMap<u32, Vec<(i64, BigInt)>> = HashMap::new();
    for ((sigma, loops), c) in counts {
        by_loops.entry(loops).or_default().push((sigma, c));
    }
    let d = delta();
    let mut total = LaurentPoly::zero();
    for (loops, terms) in by_loops {
        let part = LaurentPoly::from_terms(terms, None);
        total = &total + &(&part * &d.pow(loops - 1));
    }
    total
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n as u32);
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    /// Returns true when the two were already joined.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return true;
        }
        self.parent[ra as usize] = rb;
        false
    }
}

/// Sum over all `2ⁿ` smoothings, counting loops with union-find on edges.
pub fn bracket_state_sum(pd: &PDCode) -> LaurentPoly {
    let xs = pd.crossings();
    let n = xs.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    assert!(n < 63, "state sum over {n} crossings");
    let labels = 2 * n + 1;
    let mut uf = UnionFind { parent: Vec::new() };
    let mut counts: HashMap<(i64, u32), u64> = HashMap::new();
    for state in 0u64..(1u64 << n) {
        uf.reset(labels);
        // components = edges − successful unions
        let mut merges = 0u32;
        for (i, &[a, b, c, d]) in xs.iter().enumerate() {
            let (p, q) = if state >> i & 1 == 0 { ((a, b), (c, d)) } else { ((a, d), (b, c)) };
            merges += u32::from(!uf.union(p.0, p.1));
            merges += u32::from(!uf.union(q.0, q.1));
        }
        let loops = 2 * n as u32 - merges;
        let b_count = state.count_ones() as i64;
        *counts.entry((n as i64 - 2 * b_count, loops)).or_default() += 1;
    }
    assemble(counts.into_iter().map(|(k, v)| (k, BigInt::from(v))))
}

/// Partial state: open edge ends paired along already-smoothed arcs.
type Boundary = Vec<(u32, u32)>;

/// Join the arc `u–v` into the boundary pairing; returns closed loops.
fn attach(partner: &mut HashMap<u32, u32>, u: u32, v: u32) -> u32 {
    if u == v {
        return 1;
    }
    if partner.get(&u) == Some(&v) {
        partner.remove(&u);
        partner.remove(&v);
        return 1;
    }
    let mut end = |x: u32| match partner.remove(&x) {
        Some(y) => {
            partner.remove(&y);
            y
        }
        None => x,
    };
    let eu = end(u);
    let ev = end(v);
    partner.insert(eu, ev);
    partner.insert(ev, eu);
    0
}

/// Greedy processing order: next crossing sharing the most open edges.
fn contraction_order(pd: &PDCode) -> Vec<usize> {
    let xs = pd.crossings();
    let mut done = vec![false; xs.len()];
    let mut open_count = vec![0u8; 2 * xs.len() + 1];
    let mut order = Vec::with_capacity(xs.len());
    for _ in 0..xs.len() {
        let next = (0..xs.len())
            .filter(|&i| !done[i])
            .max_by_key(|&i| (xs[i].iter().filter(|&&l| open_count[l as usize] == 1).count(), usize::MAX - i))
            .expect("remaining crossing");
        done[next] = true;
        for &l in &xs[next] {
            open_count[l as usize] += 1;
        }
        order.push(next);
    }
    order
}

/// Bracket by contracting crossings one at a time, merging partial states
/// with the same boundary pairing and loop count.
pub fn bracket_contracted(pd: &PDCode) -> LaurentPoly {
    bracket_contracted_with_order(pd, &contraction_order(pd))
}

/// [`bracket_contracted`] with an explicit crossing order (a permutation).
pub fn bracket_contracted_with_order(pd: &PDCode, order: &[usize]) -> LaurentPoly {
    let xs = pd.crossings();
    if xs.is_empty() {
        return LaurentPoly::one();
    }
    let mut states: HashMap<(Boundary, u32), HashMap<i64, BigInt>> = HashMap::new();
    states.insert((Vec::new(), 0), HashMap::from([(0, BigInt::from(1))]));
    for &i in order {
        let [a, b, c, d] = xs[i];
        let mut next: HashMap<(Boundary, u32), HashMap<i64, BigInt>> = HashMap::new();
        for ((boundary, loops), poly) in states {
            for (weight, arcs) in [(1i64, [(a, b), (c, d)]), (-1, [(a, d), (b, c)])] {
                let mut partner: HashMap<u32, u32> = HashMap::new();
                for &(x, y) in &boundary {
                    partner.insert(x, y);
                    partner.insert(y, x);
                }
                let mut closed = loops;
                for (u, v) in arcs {
                    closed += attach(&mut partner, u, v);
                }
                let mut key: Boundary = partner.into_iter().filter(|(x, y)| x < y).collect();
                key.sort_unstable();
                let slot = next.entry((key, closed)).or_default();
                for (e, c) in &poly {
                    *slot.entry(e + weight).or_default() += c;
                }
            }
        }
        states = next;
    }
    assemble(states.into_iter().flat_map(|((boundary, loops), poly)| {
        debug_assert!(boundary.is_empty());
        poly.into_iter().map(move |(e, c)| ((e, loops), c))
    }))
}

/// Naive state sum up to [`NAIVE_STATE_SUM_LIMIT`] crossings, contraction beyond.
pub fn kauffman_bracket(pd: &PDCode) -> LaurentPoly {
    if pd.crossing_count() <= NAIVE_STATE_SUM_LIMIT {
        bracket_state_sum(pd)
    } else {
        bracket_contracted(pd)
    }
}
