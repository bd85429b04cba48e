//! Partitions, Young tableaux, Schensted insertion and Littlewood-Richardson
//! coefficients.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    /// Trailing zeros are dropped; anything else out of order is an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions fitting in a `rows × cols` rectangle.
    pub fn all_in_box(rows: u32, cols: u32) -> Vec<Partition> {
        (0..=rows * cols)
            .flat_map(Partition::all_of_size)
            .filter(|p| p.len() <= rows as usize && p.part(1) <= cols)
            .collect()
    }

    /// Row-end cells whose removal leaves a partition (0-based row index).
    pub fn corners(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| i + 1 == self.len() || self.parts[i] > self.parts[i + 1])
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(2,1)`, `[2,1]`, `2,1`, `21` (single-digit parts) and `()`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        let parts: Vec<u32> = if body.is_empty() {
            Vec::new()
        } else if body.contains(',') || body.contains(char::is_whitespace) {
            body.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad partition {s:?}")))?
        } else {
            body.chars()
                .map(|c| c.to_digit(10))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("bad partition {s:?}")))?
        };
        Partition::new(parts)
    }
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Parse(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|r| {
                let lo = self.inner.part(r + 1) as usize;
                let hi = self.outer.part(r + 1) as usize;
                (lo..hi).map(move |c| (r, c))
            })
            .collect()
    }

    /// Row and column counts of the skew diagram with empty rows and
    /// columns removed; equal skew shapes in this sense are translates.
    pub fn normalized_cells(&self) -> Vec<(usize, usize)> {
        let cells = self.cells();
        let min_r = cells.iter().map(|c| c.0).min().unwrap_or(0);
        let min_c = cells.iter().map(|c| c.1).min().unwrap_or(0);
        cells.into_iter().map(|(r, c)| (r - min_r, c - min_c)).collect()
    }
}

/// A filling of a (possibly skew) Young diagram. `rows[i]` holds the entries
/// of row `i` starting at column `inner_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        Self::skew(Partition::empty(), rows)
    }

    pub fn skew(inner: Partition, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) && rows.len() > inner.len() {
            rows.pop();
        }
        let t = Tableau { inner, rows };
        if Partition::new(t.outer_parts()).is_err() {
            return Err(Error::BadTableau(format!("{:?} is not a Young diagram", t.rows)));
        }
        Ok(t)
    }

    fn outer_parts(&self) -> Vec<u32> {
        (0..self.rows.len().max(self.inner.len()))
            .map(|i| self.inner.part(i + 1) + self.rows.get(i).map_or(0, |r| r.len() as u32))
            .collect()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_skew(&self) -> bool {
        !self.inner.is_empty()
    }

    /// Outer shape.
    pub fn shape(&self) -> Partition {
        Partition::new(self.outer_parts()).expect("validated on construction")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn entry(&self, r: usize, c: usize) -> Option<u32> {
        let lo = self.inner.part(r + 1) as usize;
        if c < lo {
            return None;
        }
        self.rows.get(r).and_then(|row| row.get(c - lo)).copied()
    }

    /// Rows weakly increase, columns strictly increase, entries positive.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|r| r.iter().all(|&v| v > 0) && r.windows(2).all(|p| p[0] <= p[1]));
        let cols_ok = (1..self.rows.len()).all(|r| {
            let lo = self.inner.part(r + 1) as usize;
            (0..self.rows[r].len()).all(|j| {
                let c = lo + j;
                match self.entry(r - 1, c) {
                    Some(above) => above < self.rows[r][j],
                    None => true,
                }
            })
        });
        rows_ok && cols_ok
    }

    /// Semistandard with entries exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        self.is_semistandard() && all.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Exponent vector of the filling: `content[i]` counts entries `i+1`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut out = vec![0; max as usize];
        for &v in self.rows.iter().flatten() {
            out[v as usize - 1] += 1;
        }
        out
    }
}

impl fmt::Display for Tableau {
    /// Rows top to bottom separated by commas, entries by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(", "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_skew() {
            write!(f, "{}/[{}]", self.inner, self)
        } else {
            write!(f, "[{}]", self)
        }
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form; a row without spaces is
    /// read digit by digit (`"1225,346"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::default());
        }
        let rows = s
            .split(',')
            .map(|row| {
                let row = row.trim();
                let parsed: Option<Vec<u32>> = if row.contains(' ') {
                    row.split_whitespace().map(|t| t.parse().ok()).collect()
                } else {
                    row.chars().map(|c| c.to_digit(10)).collect()
                };
                parsed.ok_or_else(|| Error::Parse(format!("bad tableau row {row:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TableauRepr {
    Straight(Vec<Vec<u32>>),
    Skew { inner: Partition, rows: Vec<Vec<u32>> },
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_skew() {
            TableauRepr::Skew {
                inner: self.inner.clone(),
                rows: self.rows.clone(),
            }
            .serialize(s)
        } else {
            TableauRepr::Straight(self.rows.clone()).serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(d)?;
        let (inner, rows) = match repr {
            TableauRepr::Straight(rows) => (Partition::empty(), rows),
            TableauRepr::Skew { inner, rows } => (inner, rows),
        };
        Tableau::skew(inner, rows).map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&letters.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Space or comma separated letters; a bare digit string is read digit
    /// by digit.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Option<Vec<u32>> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok().filter(|&v| v > 0))
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10).filter(|&v| v > 0)).collect()
        };
        letters
            .map(Word)
            .ok_or_else(|| Error::Parse(format!("bad word {s:?}")))
    }
}

/// Row insertion of `word`, returning the insertion tableau `P` and the
/// standard recording tableau `Q`.
pub fn schensted(word: &Word) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &letter) in word.0.iter().enumerate() {
        let mut x = letter;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(j) => {
                    std::mem::swap(&mut p[row][j], &mut x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    (
        Tableau::new(p).expect("insertion produces a tableau"),
        Tableau::new(q).expect("recording produces a tableau"),
    )
}

/// Standard Young tableaux of shape `lambda`, in a fixed order.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    // Choose, for n = |λ| down to 1, which removable corner holds n.
    fn fill(shape: Vec<u32>, n: u32, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        let current = Partition::new(shape.clone()).expect("shape stays a partition");
        for r in current.corners() {
            let mut next = shape.clone();
            next[r] -= 1;
            acc.push(r);
            fill(next, n - 1, acc, out);
            acc.pop();
        }
    }
    let mut placements = Vec::new();
    fill(lambda.parts().to_vec(), lambda.size(), &mut Vec::new(), &mut placements);
    placements
        .into_iter()
        .map(|rows_of_largest_first| {
            let mut rows: Vec<Vec<u32>> = vec![Vec::new(); lambda.len()];
            for (i, r) in rows_of_largest_first.into_iter().rev().enumerate() {
                rows[r].push(i as u32 + 1);
            }
            Tableau::new(rows).expect("standard filling")
        })
        .collect()
}

/// Number of standard tableaux of shape `lambda`, by enumeration.
pub fn syt_count(lambda: &Partition) -> usize {
    standard_tableaux(lambda).len()
}

/// Semistandard tableaux of shape `lambda` with entries in `1..=max_entry`.
pub fn semistandard_tableaux(lambda: &Partition, max_entry: u32) -> Vec<Tableau> {
    let cells = SkewShape::new(lambda.clone(), Partition::empty())
        .expect("straight shape")
        .cells();
    let mut grid: Vec<Vec<u32>> = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut out = Vec::new();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        max_entry: u32,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            out.push(Tableau::new(grid.clone()).expect("filled shape"));
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=max_entry {
            grid[r][c] = v;
            rec(idx + 1, cells, grid, max_entry, out);
        }
        grid[r][c] = 0;
    }
    rec(0, &cells, &mut grid, max_entry, &mut out);
    out
}

/// Entries read diagonal by diagonal (`col - row` from most negative to most
/// positive), increasing within each diagonal.
pub fn diagonal_word(t: &Tableau) -> Result<Word> {
    if t.is_skew() {
        return Err(Error::SkewShape);
    }
    let mut cells: Vec<(i64, u32)> = t
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &v)| (c as i64 - r as i64, v))
        })
        .collect();
    cells.sort();
    Ok(Word(cells.into_iter().map(|(_, v)| v).collect()))
}

/// Rows left to right, bottom row first.
pub fn reading_word(t: &Tableau) -> Word {
    Word(t.rows().iter().rev().flatten().copied().collect())
}

/// `c^ν_{μλ}`: coefficient of `S_ν` in `S_μ·S_λ` over `x1..xk`, read off the
/// Schubert expansion of the exact product.
pub fn lr_coefficient(mu: &Partition, lambda: &Partition, nu: &Partition, k: u32) -> Result<u64> {
    for p in [mu, lambda, nu] {
        if p.len() > k as usize {
            return Err(Error::TooManyParts {
                parts: p.parts().to_vec(),
                k,
            });
        }
    }
    if nu.size() != mu.size() + lambda.size() || !nu.contains(mu) || !nu.contains(lambda) {
        return Ok(0);
    }
    let product = poly::schur(mu, k)?.mul(&poly::schur(lambda, k)?);
    let expansion = poly::expand_in_schubert(&product)?;
    let target = Permutation::grassmannian(nu, k)?;
    let c = expansion.get(&target);
    u64::try_from(c).map_err(|_| Error::Internal(format!("negative LR coefficient for {nu}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn t_star() -> Tableau {
        tab(&[&[1, 2, 2, 5, 8], &[3, 4, 6, 6], &[5, 7, 8], &[7, 8, 9]])
    }

    #[test]
    fn partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(part(&[2, 1, 0]).parts(), &[2, 1]);
        assert_eq!(Partition::all_of_size(4).len(), 5);
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert!(part(&[2, 1]).contains(&part(&[1, 1])));
        assert!(!part(&[2, 1]).contains(&part(&[1, 1, 1])));
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), part(&[2, 1]));
        assert_eq!("21".parse::<Partition>().unwrap(), part(&[2, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("(1,2)".parse::<Partition>().is_err());
    }

    #[test]
    fn schensted_basics() {
        let (p, q) = schensted(&Word::default());
        assert_eq!(p.size(), 0);
        assert_eq!(q.size(), 0);
        let (p, q) = schensted(&Word(vec![1, 3, 4, 7]));
        assert_eq!(p, tab(&[&[1, 3, 4, 7]]));
        assert_eq!(q, tab(&[&[1, 2, 3, 4]]));
        let (p, q) = schensted(&Word(vec![3, 1, 2]));
        assert_eq!(p, tab(&[&[1, 2], &[3]]));
        assert_eq!(q, tab(&[&[1, 3], &[2]]));
        assert!(q.is_standard());
    }

    #[test]
    fn standard_tableaux_counts() {
        // Hook length formula as an independent oracle.
        fn hook(l: &Partition) -> usize {
            let conj = l.conjugate();
            let mut denom: u64 = 1;
            for i in 1..=l.len() {
                for j in 1..=l.part(i) {
                    denom *= (l.part(i) - j + conj.part(j as usize) - i as u32 + 1) as u64;
                }
            }
            ((1..=l.size() as u64).product::<u64>() / denom) as usize
        }
        for n in 0..=7 {
            for l in Partition::all_of_size(n) {
                let tabs = standard_tableaux(&l);
                assert_eq!(tabs.len(), hook(&l), "{l}");
                assert!(tabs.iter().all(|t| t.is_standard() && t.shape() == l));
            }
        }
        assert_eq!(syt_count(&part(&[5])), 1);
        assert_eq!(syt_count(&part(&[2, 1])), 2);
        assert_eq!(syt_count(&part(&[4])) + syt_count(&part(&[3, 1])) + syt_count(&part(&[2, 2])), 6);
    }

    #[test]
    fn words_of_t_star() {
        let t = t_star();
        assert!(t.is_semistandard());
        assert_eq!(t.shape(), part(&[5, 4, 3, 3]));
        assert_eq!(
            diagonal_word(&t).unwrap(),
            Word(vec![7, 5, 8, 3, 7, 9, 1, 4, 8, 2, 6, 2, 6, 5, 8])
        );
        assert_eq!(
            reading_word(&t),
            Word(vec![7, 8, 9, 5, 7, 8, 3, 4, 6, 6, 1, 2, 2, 5, 8])
        );
        assert_eq!(schensted(&diagonal_word(&t).unwrap()).0, t);
        assert_eq!(schensted(&reading_word(&t)).0, t);
        let row = tab(&[&[1, 2, 3]]);
        assert_eq!(diagonal_word(&row).unwrap(), Word(vec![1, 2, 3]));
        assert_eq!(reading_word(&Tableau::default()), Word::default());
        let column = tab(&[&[1], &[2], &[3]]);
        assert_eq!(reading_word(&column), Word(vec![3, 2, 1]));
        assert_eq!(schensted(&reading_word(&column)).0, column);
        let skew = Tableau::skew(part(&[1]), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(diagonal_word(&skew), Err(Error::SkewShape));
    }

    #[test]
    fn knuth_equivalence_small_shapes() {
        for n in 0..=5 {
            for l in Partition::all_of_size(n).into_iter().filter(|l| l.part(1) <= 3 && l.len() <= 2) {
                for t in semistandard_tableaux(&l, 4) {
                    assert_eq!(schensted(&diagonal_word(&t).unwrap()).0, t);
                    assert_eq!(schensted(&reading_word(&t)).0, t);
                }
            }
        }
    }

    #[test]
    fn tableau_text_and_json() {
        let t = t_star();
        let text = t.to_string();
        assert_eq!(text, "1 2 2 5 8, 3 4 6 6, 5 7 8, 7 8 9");
        assert_eq!(text.parse::<Tableau>().unwrap(), t);
        assert_eq!("12258,3466,578,789".parse::<Tableau>().unwrap(), t);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, "[[1,2,2,5,8],[3,4,6,6],[5,7,8],[7,8,9]]");
        assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t);
        assert!(serde_json::from_str::<Tableau>("[[1],[2,3]]").is_err());
    }

    #[test]
    fn semistandard_enumeration_counts() {
        // s_(2,1)(1,1,1) = 8, s_(2)(1,1) = 3.
        assert_eq!(semistandard_tableaux(&part(&[2, 1]), 3).len(), 8);
        assert_eq!(semistandard_tableaux(&part(&[2]), 2).len(), 3);
        assert_eq!(semistandard_tableaux(&part(&[1, 1, 1]), 2).len(), 0);
    }

    #[test]
    fn lr_examples() {
        for mu in Partition::all_in_box(2, 2) {
            assert_eq!(lr_coefficient(&mu, &Partition::empty(), &mu, 2).unwrap(), 1);
        }
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1, 1]), &part(&[2, 1]), 2).unwrap(), 1);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[2]), 3).unwrap(), 1);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[1, 1]), 3).unwrap(), 1);
        assert_eq!(lr_coefficient(&part(&[2, 1]), &part(&[2, 1]), &part(&[3, 2, 1]), 3).unwrap(), 2);
        assert_eq!(lr_coefficient(&part(&[1]), &part(&[1]), &part(&[3]), 3).unwrap(), 0);
        assert!(lr_coefficient(&part(&[1, 1, 1]), &part(&[1]), &part(&[2, 1, 1]), 2).is_err());
    }
}
