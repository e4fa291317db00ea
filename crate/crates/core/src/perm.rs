//! Permutations in disjoint-cycle notation and groups generated by them.
//!
//! Products compose left to right: `x·y` applies `x` first, then `y`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// A permutation of `{0..degree}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Perm(images.into_iter().map(|i| i as u32).collect()))
    }

    /// Parses `"(1 2)(3 4 5)"`: cycles over positive integers with
    /// whitespace-separated points. Points not mentioned are fixed; `"()"`
    /// and the empty string are the identity.
    pub fn parse_cycles(text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {text:?}")))?;
            let cycle = body[..close]
                .split_whitespace()
                .map(|tok| match tok.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::InvalidPermutation(format!("bad point {tok:?} in {text:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
            rest = body[close + 1..].trim_start();
        }
        let degree = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in &cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if std::mem::replace(&mut moved[p], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears twice in {text:?}",
                        p + 1
                    )));
                }
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.0.get(point).map_or(point, |&v| v as usize)
    }

    /// Extends to a larger degree with the new points fixed.
    pub fn padded(&self, degree: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(self.0.len() as u32..degree as u32);
        Perm(v)
    }

    /// `self·other`: apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        let n = self.degree().max(other.degree());
        Perm((0..n).map(|i| other.image(self.image(i)) as u32).collect())
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses a generator file: one permutation per line in cycle notation.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_generator_file(text: &str) -> Result<Vec<Perm>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(Perm::parse_cycles)
        .collect()
}

/// Breadth-first closure of `gens` under composition. Element 0 is the
/// identity; later elements appear in discovery order (right
/// multiplication by each generator in turn). Labels are cycle notation.
pub fn from_permutation_generators(gens: &[Perm], cap: usize) -> Result<GroupTable> {
    let degree = gens.iter().map(Perm::degree).max().unwrap_or(0);
    let gens: Vec<Perm> = gens.iter().map(|g| g.padded(degree)).collect();
    let id = Perm::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let h = elements[i].then(g);
            if !index.contains_key(&h) {
                if elements.len() >= cap {
                    return Err(Error::OrderCapExceeded { order: elements.len() + 1, cap });
                }
                index.insert(h.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(h);
            }
        }
    }
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.then(b)] as u32);
        }
    }
    let labels = elements.iter().map(Perm::to_string).collect();
    Ok(GroupTable::from_trusted(table, n, 0, "perm").with_labels(labels))
}
