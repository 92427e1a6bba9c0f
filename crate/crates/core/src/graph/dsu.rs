/// Union-find forest over `0..len` with union by size and path halving.
///
/// Every element starts detached. Elements join the forest through
/// [`DsuForest::activate`], which lets callers grow the structure one node at
/// a time when replaying a removal order backwards. `max_size` tracks the
/// largest component among activated elements.
#[derive(Debug, Clone)]
pub struct DsuForest {
    parent: Vec<u32>,
    size: Vec<u32>,
    active: Vec<bool>,
    max_size: usize,
}

impl DsuForest {
    /// Forest with no active elements.
    pub fn new(len: usize) -> Self {
        DsuForest {
            parent: (0..len as u32).collect(),
            size: vec![1; len],
            active: vec![false; len],
            max_size: 0,
        }
    }

    /// Forest where every element is an active singleton.
    pub fn with_all_active(len: usize) -> Self {
        DsuForest {
            parent: (0..len as u32).collect(),
            size: vec![1; len],
            active: vec![true; len],
            max_size: usize::from(len > 0),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn is_active(&self, x: usize) -> bool {
        self.active[x]
    }

    /// Marks `x` as present. Activating twice is a no-op.
    pub fn activate(&mut self, x: usize) {
        if !self.active[x] {
            self.active[x] = true;
            self.max_size = self.max_size.max(1);
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Joins the components of `a` and `b`; both must be active.
    /// Returns `true` when two distinct components were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        debug_assert!(self.active[a] && self.active[b]);
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        self.max_size = self.max_size.max(self.size[ra] as usize);
        true
    }

    /// Size of the component containing `x`, or 0 if `x` is inactive.
    pub fn component_size(&mut self, x: usize) -> usize {
        if !self.active[x] {
            return 0;
        }
        let r = self.find(x);
        self.size[r] as usize
    }

    /// Largest component size among active elements.
    pub fn max_size(&self) -> usize {
        self.max_size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singletons_and_merges() {
        let mut dsu = DsuForest::with_all_active(5);
        assert_eq!(dsu.max_size(), 1);
        assert!(dsu.union(0, 1));
        assert!(dsu.union(2, 3));
        assert!(!dsu.union(1, 0));
        assert_eq!(dsu.max_size(), 2);
        assert!(dsu.union(1, 3));
        assert_eq!(dsu.max_size(), 4);
        assert_eq!(dsu.component_size(4), 1);
        assert_eq!(dsu.component_size(2), 4);
    }

    #[test]
    fn find_is_idempotent() {
        let mut dsu = DsuForest::with_all_active(8);
        for i in 0..7 {
            dsu.union(i, i + 1);
        }
        for x in 0..8 {
            let r = dsu.find(x);
            assert_eq!(dsu.find(r), r);
            assert_eq!(dsu.find(x), r);
        }
    }

    #[test]
    fn inactive_elements_do_not_count() {
        let mut dsu = DsuForest::new(3);
        assert_eq!(dsu.max_size(), 0);
        assert_eq!(dsu.component_size(1), 0);
        dsu.activate(1);
        dsu.activate(1);
        assert_eq!(dsu.max_size(), 1);
        dsu.activate(2);
        dsu.union(1, 2);
        assert_eq!(dsu.max_size(), 2);
        assert!(!dsu.is_active(0));
    }

    #[test]
    fn empty_forest() {
        let dsu = DsuForest::with_all_active(0);
        assert!(dsu.is_empty());
        assert_eq!(dsu.max_size(), 0);
    }
}
