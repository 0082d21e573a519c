//! Fixed-length bitmask with the word-parallel kernels the sumset engine needs.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitMask {
    len: usize,
    words: Vec<u64>,
}

const SWAP_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Permutes bit positions of `x` by `i -> i ^ low` for `low < 64`.
#[inline]
fn xor_permute(mut x: u64, low: u64) -> u64 {
    for (k, &m) in SWAP_MASKS.iter().enumerate() {
        if low >> k & 1 == 1 {
            let s = 1u32 << k;
            x = ((x & m) << s) | ((x >> s) & m);
        }
    }
    x
}

impl BitMask {
    pub fn new(len: usize) -> Self {
        BitMask { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut m = BitMask::new(len);
        for i in idx {
            m.set(i);
        }
        m
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn or_assign(&mut self, other: &BitMask) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// `|self \ other|`.
    pub fn count_minus(&self, other: &BitMask) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    /// `|self ∩ other|`.
    pub fn count_and(&self, other: &BitMask) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `|self ∪ other|`.
    pub fn count_or(&self, other: &BitMask) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &BitMask) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }

    #[inline]
    fn read_bits(&self, pos: usize, n: usize) -> u64 {
        let (w, off) = (pos >> 6, pos & 63);
        let mut v = self.words[w] >> off;
        if off != 0 && off + n > 64 {
            v |= self.words[w + 1] << (64 - off);
        }
        if n < 64 {
            v &= (1u64 << n) - 1;
        }
        v
    }

    #[inline]
    fn or_bits(&mut self, pos: usize, v: u64, n: usize) {
        let (w, off) = (pos >> 6, pos & 63);
        self.words[w] |= v << off;
        if off != 0 && off + n > 64 {
            self.words[w + 1] |= v >> (64 - off);
        }
    }

    fn or_range(&mut self, dst: usize, src: &BitMask, from: usize, n: usize) {
        let mut k = 0;
        while k < n {
            let chunk = (n - k).min(64);
            let v = src.read_bits(from + k, chunk);
            if v != 0 {
                self.or_bits(dst + k, v, chunk);
            }
            k += chunk;
        }
    }

    /// `self |= rotate(src, shift)`, where bit `i` of `src` lands on `(i + shift) mod len`.
    pub fn or_rotated(&mut self, src: &BitMask, shift: usize) {
        debug_assert_eq!(self.len, src.len);
        let n = self.len;
        let shift = shift % n;
        self.or_range(shift, src, 0, n - shift);
        if shift > 0 {
            self.or_range(0, src, n - shift, shift);
        }
    }

    /// Dense sumset in `F_2^n` (`len = 2^n`): `self |= ⋃_{a} (src ^ a)`.
    pub fn or_xor_translates(&mut self, src: &BitMask, shifts: &[u64]) {
        debug_assert_eq!(self.len, src.len);
        debug_assert!(self.len.is_power_of_two());
        if self.words.len() == 1 {
            let w = src.words[0];
            for &a in shifts {
                self.words[0] |= xor_permute(w, a);
            }
            return;
        }
        let mut groups: Vec<Vec<u64>> = vec![Vec::new(); 64];
        for &a in shifts {
            groups[(a & 63) as usize].push(a >> 6);
        }
        let mut tmp = vec![0u64; self.words.len()];
        for (low, highs) in groups.iter().enumerate() {
            if highs.is_empty() {
                continue;
            }
            tmp.iter_mut().for_each(|t| *t = 0);
            for &h in highs {
                let h = h as usize;
                for (w, &s) in src.words.iter().enumerate() {
                    tmp[w ^ h] |= s;
                }
            }
            for (dst, &t) in self.words.iter_mut().zip(&tmp) {
                if t != 0 {
                    *dst |= xor_permute(t, low as u64);
                }
            }
        }
    }
}
