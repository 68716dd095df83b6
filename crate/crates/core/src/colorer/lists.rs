//! List coloring of even cycles from lists of size 2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An even cycle `cycle[0] … cycle[len-1]` with one color list per position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListInstance {
    pub cycle: Vec<usize>,
    pub lists: Vec<Vec<usize>>,
}

impl ListInstance {
    /// Validates the instance and keeps the first two distinct colors of every list.
    fn trimmed(&self) -> Result<Vec<[usize; 2]>> {
        let len = self.cycle.len();
        if len < 4 || !len.is_multiple_of(2) {
            return Err(Error::InvalidListInstance(format!(
                "cycle length {len} is not even and at least 4"
            )));
        }
        if self.lists.len() != len {
            return Err(Error::InvalidListInstance(format!(
                "{} lists for a cycle of length {len}",
                self.lists.len()
            )));
        }
        self.lists
            .iter()
            .enumerate()
            .map(|(i, list)| {
                let first = *list.first().ok_or_else(|| short(i))?;
                let second = *list.iter().find(|&&c| c != first).ok_or_else(|| short(i))?;
                Ok([first, second])
            })
            .collect()
    }
}

fn short(i: usize) -> Error {
    Error::InvalidListInstance(format!("list at position {i} has fewer than 2 distinct colors"))
}

/// A proper coloring of the cycle with every color drawn from its list,
/// returned per cycle position.
pub fn color_even_cycle_lists(inst: &ListInstance) -> Result<Vec<usize>> {
    let lists = inst.trimmed()?;
    let len = lists.len();
    let same = |a: &[usize; 2], b: &[usize; 2]| (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0]);
    if lists.iter().all(|l| same(l, &lists[0])) {
        return Ok((0..len).map(|i| lists[0][i % 2]).collect());
    }
    // a color of L(i) missing from L(i+1) lets the walk backwards close up
    let (start, color) = (0..len)
        .find_map(|i| {
            let next = &lists[(i + 1) % len];
            lists[i].iter().find(|c| !next.contains(c)).map(|&c| (i, c))
        })
        .expect("two distinct 2-lists on a cycle differ somewhere");
    let mut out = vec![usize::MAX; len];
    out[start] = color;
    for step in 1..len {
        let i = (start + len - step) % len;
        let after = out[(i + 1) % len];
        out[i] = *lists[i].iter().find(|&&c| c != after).unwrap();
    }
    Ok(out)
}
