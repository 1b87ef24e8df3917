//! Gaussian elimination over F2 on dense bit rows.
//!
//! Pivots are the lowest set column of each row, so the pivot set (and hence
//! every residue) depends only on the row space and the column order.

/// A dense row of bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(ncols: usize) -> Self {
        BitRow { words: vec![0; ncols.div_ceil(64)] }
    }

    pub fn from_indices(ncols: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut row = Self::zeros(ncols);
        for i in indices {
            row.flip(i);
        }
        row
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_from(&mut self, other: &BitRow, start_word: usize) {
        for (a, b) in self.words[start_word..].iter_mut().zip(&other.words[start_word..]) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set column at or after word `from_word`.
    fn lowest_from(&self, from_word: usize) -> Option<usize> {
        self.words[from_word..]
            .iter()
            .position(|&w| w != 0)
            .map(|p| (from_word + p) * 64 + self.words[from_word + p].trailing_zeros() as usize)
    }

    /// Lowest set column `>= from`.
    pub fn next_one(&self, from: usize) -> Option<usize> {
        let w = from / 64;
        if w >= self.words.len() {
            return None;
        }
        let masked = self.words[w] & (!0u64 << (from % 64));
        if masked != 0 {
            return Some(w * 64 + masked.trailing_zeros() as usize);
        }
        if w + 1 < self.words.len() {
            self.lowest_from(w + 1)
        } else {
            None
        }
    }

    pub fn lowest(&self) -> Option<usize> {
        self.lowest_from(0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| wi * 64 + b)
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// An incrementally built echelon basis of a subspace of `F2^ncols`.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivots: Vec<Option<BitRow>>,
    rank: usize,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: vec![None; ncols], rank: 0 }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots[col].is_some()
    }

    /// Clears every pivot column of `row`. The result is the unique
    /// representative of `row + span` supported on non-pivot columns once
    /// the span is complete.
    pub fn reduce(&self, mut row: BitRow) -> BitRow {
        let mut from = 0;
        while let Some(col) = row.next_one(from) {
            // a pivot row has no bits below its pivot column
            if let Some(p) = &self.pivots[col] {
                row.xor_from(p, col / 64);
            }
            from = col + 1;
        }
        row
    }

    /// Adds a row to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: BitRow) -> bool {
        let mut row = row;
        let mut word = 0;
        while let Some(col) = row.lowest_from(word) {
            match &self.pivots[col] {
                Some(p) => {
                    row.xor_from(p, col / 64);
                    word = col / 64;
                }
                None => {
                    self.pivots[col] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}
