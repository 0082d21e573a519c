//! Addition table of a pair `(A, B)`, with `A + B` relabelled densely so that
//! translates `A + b` and `a + B` become bitmasks over `0..|A+B|`.

use crate::bitmask::BitMask;
use crate::error::Result;
use crate::set::{sumset, GSet};

#[derive(Clone, Debug)]
pub struct SumTable {
    sums: GSet,
    ids: Vec<u32>,
    na: usize,
    nb: usize,
}

impl SumTable {
    pub fn new(a: &GSet, b: &GSet) -> Result<Self> {
        let sums = sumset(a, b)?;
        let (na, nb) = (a.len(), b.len());
        let mut ids = Vec::with_capacity(na * nb);
        match (a.indices(), b.indices()) {
            (Some(ai), Some(bi)) => {
                let adder = a.ctx().index_adder().expect("finite");
                let si = sums.indices().expect("finite");
                for &x in ai {
                    for &y in bi {
                        let s = adder.add(x, y);
                        ids.push(si.binary_search(&s).expect("sum present") as u32);
                    }
                }
            }
            _ => {
                let (ap, bp, sp) = (a.points().unwrap(), b.points().unwrap(), sums.points().unwrap());
                for x in ap {
                    for y in bp {
                        let s = a.ctx().add(x, y)?;
                        ids.push(sp.binary_search(&s).expect("sum present") as u32);
                    }
                }
            }
        }
        Ok(SumTable { sums, ids, na, nb })
    }

    /// `A + B`, whose canonical positions are the ids used by this table.
    pub fn sums(&self) -> &GSet {
        &self.sums
    }

    pub fn size_a(&self) -> usize {
        self.na
    }

    pub fn size_b(&self) -> usize {
        self.nb
    }

    /// Id of `a_i + b_j`.
    #[inline]
    pub fn id(&self, i: usize, j: usize) -> usize {
        self.ids[i * self.nb + j] as usize
    }

    /// `A + b_j` as a mask over sum ids.
    pub fn row_b(&self, j: usize) -> BitMask {
        BitMask::from_indices(self.sums.len(), (0..self.na).map(|i| self.id(i, j)))
    }

    /// `a_i + B` as a mask over sum ids.
    pub fn row_a(&self, i: usize) -> BitMask {
        BitMask::from_indices(self.sums.len(), (0..self.nb).map(|j| self.id(i, j)))
    }

    pub fn empty_mask(&self) -> BitMask {
        BitMask::new(self.sums.len())
    }

    /// Mask of a subset `C` of `A + B`; `None` if `C` is not contained in `A + B`.
    pub fn mask_of(&self, c: &GSet) -> Option<BitMask> {
        let mut m = self.empty_mask();
        for x in c.iter() {
            m.set(self.sums.position(&x)?);
        }
        Some(m)
    }

    /// Subset of `A + B` given by a mask.
    pub fn set_of(&self, m: &BitMask) -> GSet {
        self.sums.select(m.iter_ones())
    }
}
