use crate::error::{Error, Result};
use crate::partition::Partition;

/// The boundary of a partition read from southwest to northeast as a
/// bi-infinite 0/1 word `p`: `1` is a north step, `0` an east step. The steps
/// `p_i` and `p_{i+1}` meet at the southeast corner of the diagonal-`i`
/// box, so row `z` contributes the north step `p_{f(z)}` with
/// `f(z) = kappa_z - z + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSequence {
    n: usize,
    /// `f(1) > f(2) > ... > f(len)`; rows past the end follow `f(z) = 1 - z`.
    north: Vec<i64>,
}

impl EdgeSequence {
    pub fn new(shape: &Partition, n: usize) -> Self {
        let north = (1..=shape.len())
            .map(|z| shape.part(z - 1) as i64 - z as i64 + 1)
            .collect();
        EdgeSequence { n, north }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `f(z)`, the index of the north step in row `z >= 1`.
    pub fn row_index(&self, z: usize) -> i64 {
        assert!(z >= 1);
        match self.north.get(z - 1) {
            Some(&f) => f,
            None => 1 - z as i64,
        }
    }

    /// The row whose north step is `p_i`, if `p_i = 1`.
    pub fn row_of(&self, i: i64) -> Option<usize> {
        let len = self.north.len() as i64;
        if i <= -len {
            return Some((1 - i) as usize);
        }
        self.north.iter().position(|&f| f == i).map(|z| z + 1)
    }

    pub fn bit(&self, i: i64) -> bool {
        self.row_of(i).is_some()
    }

    /// The offset `d_i`: the unique `d` with `p_{i+n(d-1)} = 1` and
    /// `p_{i+nd} = 0`. Satisfies `d_{i-n} = d_i + 1`.
    pub fn offset(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let low = -(self.north.len() as i64);
        let mut d = (low - i).div_euclid(n);
        while self.bit(i + n * d) {
            d += 1;
        }
        d
    }

    /// Offsets `d_i` for `i` in `lo..=hi`.
    pub fn offsets(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|i| self.offset(i)).collect()
    }

    /// The window `[f(len+1) - n, f(1) + n]` outside of which offsets follow
    /// from the shift rule.
    pub fn window(&self) -> (i64, i64) {
        let n = self.n as i64;
        let last = self.row_index(self.north.len() + 1);
        let first = self.row_index(1);
        (last - n, first + n)
    }

    /// The partition obtained by swapping `p_{r+jn}` with `p_{s+jn}` for all `j`.
    pub fn reflect(&self, r: i64, s: i64) -> Result<Partition> {
        let n = self.n as i64;
        if (s - r).rem_euclid(n) == 0 {
            return Err(Error::InvalidArgument(format!("{r} and {s} are congruent mod {n}")));
        }
        let gap = (s - r).abs();
        let lo = -(self.north.len() as i64) - gap - 1;
        let hi = self.row_index(1) + gap + 1;
        let (rr, sr) = (r.rem_euclid(n), s.rem_euclid(n));
        let mut ones: Vec<i64> = (lo..=hi)
            .filter(|&i| {
                let res = i.rem_euclid(n);
                if res == rr {
                    self.bit(i + (s - r))
                } else if res == sr {
                    self.bit(i - (s - r))
                } else {
                    self.bit(i)
                }
            })
            .collect();
        ones.reverse();
        // Everything below `lo` is a north step, so the count of ones
        // determines which row `lo - 1` belongs to.
        if ones.len() as i64 != 1 - lo {
            return Err(Error::InvalidArgument("reflection changes the charge".into()));
        }
        let parts = ones
            .iter()
            .enumerate()
            .map(|(z, &f)| (f + z as i64) as usize)
            .collect();
        Partition::new(parts)
    }

    /// The cover `tau => kappa` whose southwestmost ribbon has head in row
    /// `z`, if there is one. With `s = f(z)`, take the largest `r < s` with
    /// `0 <= d_r <= d_s`; the cover exists when `d_r = 0` and `s - n < r`.
    pub fn cover_index(&self, z: usize) -> Option<(i64, i64)> {
        let s = self.row_index(z);
        let ds = self.offset(s);
        let mut r = s - 1;
        loop {
            let d = self.offset(r);
            if (0..=ds).contains(&d) {
                break;
            }
            r -= 1;
        }
        (self.offset(r) == 0 && s - (self.n as i64) < r).then_some((r, s))
    }

    pub fn cover(&self, z: usize) -> Option<Partition> {
        let (r, s) = self.cover_index(z)?;
        Some(self.reflect(r, s).expect("cover reflection is well defined"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn edge_word_and_offsets() {
        let e = EdgeSequence::new(&p("6,6,5,4,4,3,2,2,1"), 5);
        let bits: Vec<u8> = (-9..=8).map(|i| e.bit(i) as u8).collect();
        assert_eq!(bits, vec![1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0]);
        assert_eq!(
            e.offsets(-9, 8),
            vec![4, 0, 3, 0, 3, 3, -1, 2, -1, 2, 2, -2, 1, -2, 1, 1, -3, 0]
        );
        let f: Vec<i64> = (1..=11).map(|z| e.row_index(z)).collect();
        assert_eq!(f, vec![6, 5, 3, 1, 0, -2, -4, -5, -7, -9, -10]);
        for i in -20..20 {
            assert_eq!(e.offset(i - 5), e.offset(i) + 1);
        }
    }

    #[test]
    fn empty_partition() {
        let e = EdgeSequence::new(&Partition::empty(), 3);
        assert_eq!(e.row_index(1), 0);
        assert!(e.bit(0) && !e.bit(1));
        assert_eq!(e.offsets(1, 3), vec![0, 0, 0]);
    }

    #[test]
    fn cover_example() {
        let e = EdgeSequence::new(&p("6,6,5,4,4,3,2,2,1"), 5);
        assert_eq!(e.cover_index(6), Some((-6, -2)));
        assert_eq!(e.cover(6), Some(p("6,6,3,3,3,1,1,1,1")));
        assert_eq!(e.reflect(-6, -2).unwrap(), p("6,6,3,3,3,1,1,1,1"));
    }
}
