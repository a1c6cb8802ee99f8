//! Disjoint sets over `0..len` with union by size and path halving.
//!
//! Every set tracks its smallest and largest member. Both users in this crate
//! only ever merge blocks that are adjacent (consecutive integers, or
//! consecutive stack cells), so `min..=max` of a root describes the block.

#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
    min: Vec<u32>,
    max: Vec<u32>,
}

impl DisjointSets {
    pub fn new(len: usize) -> Self {
        assert!(len < u32::MAX as usize, "too many elements for u32 indices");
        let ids: Vec<u32> = (0..len as u32).collect();
        DisjointSets {
            parent: ids.clone(),
            size: vec![1; len],
            min: ids.clone(),
            max: ids,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Root lookup without compression.
    pub fn find_const(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Merges the sets of `a` and `b` and returns the new root.
    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return ra;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        self.min[ra] = self.min[ra].min(self.min[rb]);
        self.max[ra] = self.max[ra].max(self.max[rb]);
        ra
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Smallest member of the set containing `x`.
    pub fn min_of(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.min[r] as usize
    }

    /// Largest member of the set containing `x`.
    pub fn max_of(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.max[r] as usize
    }

    pub fn set_size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r] as usize
    }
}
