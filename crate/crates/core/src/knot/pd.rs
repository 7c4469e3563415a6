//! Planar diagram codes.
//!
//! Each crossing is a tuple `(a, b, c, d)` of edge labels listed
//! counterclockwise, with `a`/`c` the under-strand and `b`/`d` the
//! over-strand. Tables conventionally put the incoming under-edge first, but
//! nothing here relies on it: orientation is recovered by walking the diagram,
//! so rotating a tuple by two positions describes the same crossing.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PDCode {
    crossings: Vec<[u32; 4]>,
}

/// Orientation data recovered from a walk along the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Orientation {
    pub components: usize,
    /// Per crossing, the tuple positions where the under- and over-strand enter.
    pub entries: Vec<(usize, usize)>,
}

impl PDCode {
    /// Validate labels: with `n` crossings, every label in `1..=2n` occurs
    /// exactly twice. Links are accepted here; see [`PDCode::new`].
    pub fn from_crossings_unchecked_components(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let n = crossings.len();
        let mut seen = vec![0u8; 2 * n + 1];
        for (i, x) in crossings.iter().enumerate() {
            for &l in x {
                if l == 0 || l as usize > 2 * n {
                    return Err(Error::PdLabels(format!(
                        "label {l} at crossing {i} outside 1..={}",
                        2 * n
                    )));
                }
                seen[l as usize] += 1;
            }
        }
        let bad: Vec<String> = (1..=2 * n)
            .filter(|&l| seen[l] != 2)
            .map(|l| format!("{l} (x{})", seen[l]))
            .collect();
        if !bad.is_empty() {
            return Err(Error::PdLabels(format!(
                "labels must appear exactly twice: {}",
                bad.join(", ")
            )));
        }
        Ok(PDCode { crossings })
    }

    /// A validated single-component diagram. Zero crossings is the unknot.
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let pd = Self::from_crossings_unchecked_components(crossings)?;
        let orient = pd.orientation()?;
        if orient.components != 1 {
            return Err(Error::MultiComponent(orient.components));
        }
        Ok(pd)
    }

    pub fn unknot() -> Self {
        PDCode { crossings: Vec::new() }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Where each label occurs, as `(crossing, position)` pairs.
    fn occurrences(&self) -> Vec<[(usize, usize); 2]> {
        let n = self.crossings.len();
        let mut occ = vec![[(usize::MAX, 0); 2]; 2 * n + 1];
        let mut fill = vec![0usize; 2 * n + 1];
        for (c, x) in self.crossings.iter().enumerate() {
            for (pos, &l) in x.iter().enumerate() {
                occ[l as usize][fill[l as usize]] = (c, pos);
                fill[l as usize] += 1;
            }
        }
        occ
    }

    /// Walk every strand. Entering a crossing at position `k` leaves at `k+2`.
    pub(crate) fn orientation(&self) -> Result<Orientation> {
        let n = self.crossings.len();
        if n == 0 {
            return Ok(Orientation {
                components: 1,
                entries: Vec::new(),
            });
        }
        let occ = self.occurrences();
        let mut visited = vec![[false; 4]; n];
        let mut under_in = vec![None; n];
        let mut over_in = vec![None; n];
        let mut components = 0;
        for c0 in 0..n {
            for p0 in 0..4 {
                if visited[c0][p0] {
                    continue;
                }
                components += 1;
                let (mut c, mut k) = (c0, p0);
                loop {
                    let out = (k + 2) % 4;
                    visited[c][k] = true;
                    visited[c][out] = true;
                    let slot = if k % 2 == 0 { &mut under_in[c] } else { &mut over_in[c] };
                    if slot.is_some() {
                        return Err(Error::InconsistentOrientation(c));
                    }
                    *slot = Some(k);
                    let label = self.crossings[c][out];
                    let [o1, o2] = occ[label as usize];
                    let next = if o1 == (c, out) { o2 } else { o1 };
                    (c, k) = next;
                    if (c, k) == (c0, p0) {
                        break;
                    }
                    if visited[c][k] {
                        return Err(Error::InconsistentOrientation(c));
                    }
                }
            }
        }
        let entries = under_in
            .into_iter()
            .zip(over_in)
            .map(|(u, o)| (u.expect("visited"), o.expect("visited")))
            .collect();
        Ok(Orientation { components, entries })
    }

    /// Signed crossing count.
    pub fn writhe(&self) -> Result<i64> {
        Ok(self
            .orientation()?
            .entries
            .iter()
            .map(|&e| crossing_sign(e))
            .sum())
    }

    /// Planar reflection: `(a, b, c, d) ↦ (a, d, c, b)`.
    pub fn mirror(&self) -> Self {
        PDCode {
            crossings: self.crossings.iter().map(|&[a, b, c, d]| [a, d, c, b]).collect(),
        }
    }

    /// Apply `label ↦ perm[label - 1]` to every label.
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        let crossings = self
            .crossings
            .iter()
            .map(|x| x.map(|l| perm[l as usize - 1]))
            .collect();
        Self::new(crossings)
    }

    /// Rotate crossing `i`'s tuple by two positions (same crossing).
    pub fn rotate_crossing(&self, i: usize) -> Self {
        let mut crossings = self.crossings.clone();
        crossings[i].rotate_left(2);
        PDCode { crossings }
    }

    /// Reorder the crossing list.
    pub fn permute_crossings(&self, order: &[usize]) -> Self {
        PDCode {
            crossings: order.iter().map(|&i| self.crossings[i]).collect(),
        }
    }
}

/// Positive iff the over-strand enters just clockwise of the entering
/// under-strand, i.e. at `d` when the under-strand enters at `a`.
pub(crate) fn crossing_sign((under_in, over_in): (usize, usize)) -> i64 {
    if (under_in + 3) % 4 == over_in {
        1
    } else {
        -1
    }
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("PD[")?;
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "X[{a},{b},{c},{d}]")?;
        }
        f.write_str("]")
    }
}

impl std::str::FromStr for PDCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}

/// Parse `PD[X[a,b,c,d],…]` or `[[a,b,c,d],…]`.
pub fn parse_pd(text: &str) -> Result<PDCode> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut i = 0;
    let err = |i: usize, msg: &str| Error::Syntax {
        pos: chars.get(i).map_or(text.len(), |&(p, _)| p),
        msg: msg.to_string(),
    };
    let peek = |i: usize| chars.get(i).map(|&(_, c)| c);
    let expect = |i: &mut usize, c: char| -> Result<()> {
        if peek(*i) == Some(c) {
            *i += 1;
            Ok(())
        } else {
            Err(err(*i, &format!("expected {c:?}")))
        }
    };

    if peek(0) == Some('P') {
        if peek(1) != Some('D') {
            return Err(err(1, "expected \"PD[\""));
        }
        i = 2;
    }
    expect(&mut i, '[')?;
    let mut crossings = Vec::new();
    if peek(i) == Some(']') {
        i += 1;
    } else {
        loop {
            if peek(i) == Some('X') {
                i += 1;
            }
            expect(&mut i, '[')?;
            let mut labels = Vec::with_capacity(4);
            loop {
                let start = i;
                while peek(i).is_some_and(|c| c.is_ascii_digit()) {
                    i += 1;
                }
                if start == i {
                    return Err(err(i, "expected a label"));
                }
                let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                labels.push(s.parse::<u32>().map_err(|_| err(start, "label out of range"))?);
                match peek(i) {
                    Some(',') => i += 1,
                    Some(']') => {
                        i += 1;
                        break;
                    }
                    _ => return Err(err(i, "expected ',' or ']'")),
                }
            }
            let tuple: [u32; 4] = labels
                .try_into()
                .map_err(|v: Vec<u32>| err(i - 1, &format!("crossing has {} labels, expected 4", v.len())))?;
            crossings.push(tuple);
            match peek(i) {
                Some(',') => i += 1,
                Some(']') => {
                    i += 1;
                    break;
                }
                _ => return Err(err(i, "expected ',' or ']'")),
            }
        }
    }
    if i != chars.len() {
        return Err(err(i, "trailing input"));
    }
    PDCode::new(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";

    #[test]
    fn parses_both_forms() {
        let a = parse_pd(TREFOIL).unwrap();
        let b = parse_pd("[[1,4,2,5], [3,6,4,1], [5,2,6,3]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.crossing_count(), 3);
        assert_eq!(a.to_string(), TREFOIL);
    }

    #[test]
    fn empty_is_unknot() {
        assert_eq!(parse_pd("PD[]").unwrap(), PDCode::unknot());
        assert_eq!(parse_pd("[]").unwrap(), PDCode::unknot());
    }

    #[test]
    fn label_violation() {
        assert!(matches!(parse_pd("PD[X[1,2,3,4]]"), Err(Error::PdLabels(_))));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_pd("PD[X[1,2,3]]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_pd("PD[X[1,2,a,4]]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_pd("QD[]"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_pd("PD[]x"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn rejects_links() {
        // Hopf link
        assert_eq!(parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]"), Err(Error::MultiComponent(2)));
    }

    #[test]
    fn trefoil_writhe() {
        let pd = parse_pd(TREFOIL).unwrap();
        assert_eq!(pd.writhe().unwrap(), -3);
        assert_eq!(pd.mirror().writhe().unwrap(), 3);
        assert_eq!(pd.rotate_crossing(1).writhe().unwrap(), -3);
    }

    #[test]
    fn kink_writhe() {
        assert_eq!(parse_pd("PD[X[2,2,1,1]]").unwrap().writhe().unwrap(), 1);
        assert_eq!(parse_pd("PD[X[1,2,2,1]]").unwrap().writhe().unwrap(), -1);
    }
}
