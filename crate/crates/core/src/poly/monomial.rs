use std::collections::BTreeSet;
use std::fmt;

use super::Variable;

/// A power product of variables. Exponents are stored sparsely, sorted by
/// variable index; zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Variable) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut exps: Vec<(Variable, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        exps.dedup_by(|b, a| {
            if a.0 == b.0 {
                a.1 += b.1;
                true
            } else {
                false
            }
        });
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[(Variable, u32)] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: Variable) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Variable> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn contains(&self, v: Variable) -> bool {
        self.degree_in(v) > 0
    }

    pub fn contains_any(&self, set: &BTreeSet<Variable>) -> bool {
        self.exps.iter().any(|(v, _)| set.contains(v))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    exps.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|&(v, e)| other.degree_in(v) >= e)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .filter_map(|&(v, e)| {
                let d = e - self.degree_in(v);
                (d > 0).then_some((v, d))
            })
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut all: BTreeSet<Variable> = self.vars().collect();
        all.extend(other.vars());
        let exps = all
            .into_iter()
            .map(|v| (v, self.degree_in(v).max(other.degree_in(v))))
            .collect();
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// Restriction to the variables in `set`.
    pub fn restrict(&self, set: &BTreeSet<Variable>) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .filter(|(v, _)| set.contains(v))
                .cloned()
                .collect(),
        }
    }

    /// Restriction to the variables outside `set`.
    pub fn restrict_complement(&self, set: &BTreeSet<Variable>) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .filter(|(v, _)| !set.contains(v))
                .cloned()
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        // highest-index variable first, matching the log style
        let mut first = true;
        for &(v, e) in self.exps.iter().rev() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
