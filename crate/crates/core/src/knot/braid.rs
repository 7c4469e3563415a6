//! Braid words and their closures.

use std::fmt;

use super::pd::PDCode;
use crate::error::{Error, Result};

/// `±k` is the generator `σ_k` or its inverse; strands are `1..=max|k|+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    generators: Vec<i32>,
}

impl BraidWord {
    pub fn new(generators: Vec<i32>) -> Result<Self> {
        if generators.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        Ok(BraidWord { generators })
    }

    pub fn generators(&self) -> &[i32] {
        &self.generators
    }

    pub fn strand_count(&self) -> usize {
        self.generators.iter().map(|g| g.unsigned_abs() as usize).max().map_or(1, |m| m + 1)
    }

    /// Components of the closure: cycles of the underlying permutation.
    pub fn closure_components(&self) -> usize {
        let s = self.strand_count();
        let mut perm: Vec<usize> = (0..s).collect();
        for g in &self.generators {
            let k = g.unsigned_abs() as usize - 1;
            perm.swap(k, k + 1);
        }
        let mut seen = vec![false; s];
        let mut cycles = 0;
        for i in 0..s {
            if !seen[i] {
                cycles += 1;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = perm[j];
                }
            }
        }
        cycles
    }

    /// PD code of the closure.
    ///
    /// Strands run upward. At `σ_k` the incoming edges at positions `k, k+1`
    /// are `l, r` and the outgoing edges `l', r'`; the positive generator puts
    /// the strand `l → r'` over, giving the positive crossing `(r, r', l', l)`,
    /// while `σ_k⁻¹` gives `(l, r, r', l')`.
    pub fn to_pd(&self) -> Result<PDCode> {
        if self.generators.is_empty() {
            return Ok(PDCode::unknot());
        }
        let comps = self.closure_components();
        if comps != 1 {
            return Err(Error::MultiComponent(comps));
        }
        let s = self.strand_count();
        let mut next_label = s as u32 + 1;
        let mut current: Vec<u32> = (1..=s as u32).collect();
        let mut crossings = Vec::with_capacity(self.generators.len());
        for &g in &self.generators {
            let k = g.unsigned_abs() as usize - 1;
            let (l, r) = (current[k], current[k + 1]);
            let (l_out, r_out) = (next_label, next_label + 1);
            next_label += 2;
            crossings.push(if g > 0 { [r, r_out, l_out, l] } else { [l, r, r_out, l_out] });
            current[k] = l_out;
            current[k + 1] = r_out;
        }
        // closing: top edge at position i is the bottom edge at position i
        let mut alias: Vec<u32> = (0..next_label).collect();
        for (i, &top) in current.iter().enumerate() {
            alias[top as usize] = i as u32 + 1;
        }
        for x in crossings.iter_mut() {
            for l in x.iter_mut() {
                *l = alias[*l as usize];
            }
        }
        compact_labels(crossings)
    }
}

/// Renumber labels to `1..=2n` in order of first appearance.
fn compact_labels(crossings: Vec<[u32; 4]>) -> Result<PDCode> {
    let max = crossings.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut map = vec![0u32; max + 1];
    let mut next = 1;
    for x in &crossings {
        for &l in x {
            if map[l as usize] == 0 {
                map[l as usize] = next;
                next += 1;
            }
        }
    }
    PDCode::new(crossings.into_iter().map(|x| x.map(|l| map[l as usize])).collect())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Parse `[i1, i2, …]` with signed nonzero integers.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: "braid word must be written [i1,i2,...]".into(),
        })?;
    if inner.is_empty() {
        return BraidWord::new(Vec::new());
    }
    let mut gens = Vec::new();
    let mut offset = 1;
    for tok in inner.split(',') {
        let g: i32 = tok.parse().map_err(|_| Error::Syntax {
            pos: offset,
            msg: format!("bad generator {tok:?}"),
        })?;
        gens.push(g);
        offset += tok.len() + 1;
    }
    BraidWord::new(gens)
}
