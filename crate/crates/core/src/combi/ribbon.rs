use super::group::SymGroup;
use super::partition::Composition;
use super::perm::Permutation;

/// Disconnected ribbon: one composition per connected component, listed
/// top to bottom. Inside a component the rows are listed top to bottom and
/// each row starts directly below the last box of the previous one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonShape(pub Vec<Composition>);

impl RibbonShape {
    pub fn new(components: Vec<Composition>) -> Self {
        Self(components)
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|c| c.size()).sum()
    }

    /// The hook `[1^i, j - i]`.
    pub fn hook(i: usize, j: usize) -> Composition {
        let mut parts = vec![1; i];
        parts.push(j - i);
        Composition::new(parts).expect("hook with i < j")
    }

    /// Relation required between consecutive reading positions `p` and
    /// `p + 1`: `Some(true)` ascent, `Some(false)` descent, `None` free.
    fn constraints(&self) -> Vec<Option<bool>> {
        let mut out = Vec::with_capacity(self.size());
        for (k, comp) in self.0.iter().enumerate() {
            for (r, &len) in comp.iter().enumerate() {
                out.extend(std::iter::repeat_n(Some(true), len - 1));
                if r + 1 < comp.len() {
                    out.push(Some(false));
                }
            }
            if k + 1 < self.0.len() {
                out.push(None);
            }
        }
        out
    }

    /// Whether the word `w`, written in the boxes in reading order, is a
    /// standard filling.
    pub fn is_compatible(&self, w: &[usize]) -> bool {
        self.constraints().iter().enumerate().all(|(p, c)| match c {
            Some(true) => w[p] < w[p + 1],
            Some(false) => w[p] > w[p + 1],
            None => true,
        })
    }

    /// Join the last row of component `k` with the first row of `k + 1`
    /// horizontally (`merge = true`) or stack them (`merge = false`).
    pub fn glue(&self, k: usize, merge: bool) -> RibbonShape {
        let mut comps = self.0.clone();
        let second = comps.remove(k + 1);
        let first = &comps[k];
        let mut parts: Vec<usize> = first.to_vec();
        if merge {
            let last = parts.pop().unwrap();
            parts.push(last + second[0]);
            parts.extend_from_slice(&second[1..]);
        } else {
            parts.extend_from_slice(&second);
        }
        comps[k] = Composition::new(parts).expect("positive parts");
        RibbonShape(comps)
    }
}

/// Permutations whose filling of `shape` is standard, in lexicographic order.
pub fn ribbon_compatible(shape: &RibbonShape, n: usize) -> Vec<Permutation> {
    assert_eq!(shape.size(), n, "ribbon must have n boxes");
    let g = SymGroup::get(n);
    let cons = shape.constraints();
    (0..g.order())
        .filter(|&r| {
            let w = g.word(r);
            cons.iter().enumerate().all(|(p, c)| match c {
                Some(true) => w[p] < w[p + 1],
                Some(false) => w[p] > w[p + 1],
                None => true,
            })
        })
        .map(|r| g.perm(r))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn picture_example() {
        let shape = RibbonShape::new(vec![c("12"), c("11")]);
        let got = ribbon_compatible(&shape, 5);
        let g = SymGroup::get(5);
        let expected: Vec<Permutation> = (0..g.order())
            .map(|r| g.perm(r))
            .filter(|v| v.at(1) > v.at(2) && v.at(2) < v.at(3) && v.at(4) > v.at(5))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn rows_and_columns() {
        assert_eq!(
            ribbon_compatible(&RibbonShape::new(vec![c("4")]), 4),
            vec![Permutation::identity(4)]
        );
        assert_eq!(
            ribbon_compatible(&RibbonShape::new(vec![c("1111")]), 4),
            vec![Permutation::longest(4)]
        );
    }

    #[test]
    fn concatenation_identity() {
        let shape = RibbonShape::new(vec![c("21"), c("12")]);
        let mut lhs = ribbon_compatible(&shape, 6);
        let mut rhs = ribbon_compatible(&shape.glue(0, false), 6);
        rhs.extend(ribbon_compatible(&shape.glue(0, true), 6));
        lhs.sort();
        rhs.sort();
        assert_eq!(lhs, rhs);
    }
}
