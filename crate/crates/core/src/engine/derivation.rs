//! Derivation traces and their replay through the two-row operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CategoryClosure, Step};
use crate::error::{Error, Result};
use crate::partition::{identity_power, Corner, Partition};

/// One step of a derivation: orbit `id` is produced by `step`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationLine {
    pub id: usize,
    /// Canonical one-row representative of the orbit.
    pub result: Partition,
    pub step: Step,
}

/// Everything needed to rebuild a member from the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    /// The queried partition.
    pub target: Partition,
    /// Lines in dependency order; the last one is the target's orbit.
    pub lines: Vec<DerivationLine>,
}

impl Derivation {
    pub(crate) fn of(closure: &CategoryClosure, orbit: usize, target: &Partition) -> Derivation {
        let mut needed = vec![false; orbit + 1];
        let mut stack = vec![orbit];
        while let Some(i) = stack.pop() {
            if needed[i] {
                continue;
            }
            needed[i] = true;
            match closure.orbit_step(i) {
                Step::Erase { of, .. } | Step::Connect { of, .. } => stack.push(of),
                Step::Glue { left, right, .. } => {
                    stack.push(left);
                    stack.push(right);
                }
                Step::Generator { .. } | Step::Unit => {}
            }
        }
        let lines = (0..=orbit)
            .filter(|&i| needed[i])
            .map(|i| DerivationLine {
                id: i,
                result: Partition::one_row(closure.orbit_word(i)),
                step: closure.orbit_step(i),
            })
            .collect();
        Derivation {
            target: target.clone(),
            lines,
        }
    }

    /// Replays the derivation from `generators` using only the two-row
    /// partition operations, and checks that the final partition can be
    /// rotated and reflected into the target.
    pub fn replay(&self, generators: &[Partition]) -> Result<Partition> {
        let mut done: Vec<(usize, Partition)> = Vec::new();
        let lookup = |done: &Vec<(usize, Partition)>, id: usize| -> Result<Partition> {
            done.iter()
                .find(|(i, _)| *i == id)
                .map(|(_, p)| p.clone())
                .ok_or_else(|| Error::Inconsistent(format!("operand {id} used before it is derived")))
        };
        for line in &self.lines {
            let operand = |id: usize| -> Result<Partition> {
                let p = lookup(&done, id)?;
                let rep = self
                    .lines
                    .iter()
                    .find(|l| l.id == id)
                    .map(|l| l.result.clone())
                    .ok_or_else(|| Error::Inconsistent(format!("missing line {id}")))?;
                if !same_orbit(&p, &rep) {
                    return Err(Error::Inconsistent(format!("line {id} does not match its replay")));
                }
                Ok(rep)
            };
            let p = apply(line.step, generators, operand)?;
            if !same_orbit(&p, &line.result) {
                return Err(Error::Inconsistent(format!(
                    "line {}: replay gives {p}, recorded {}",
                    line.id, line.result
                )));
            }
            done.push((line.id, p));
        }
        let last = self
            .lines
            .last()
            .ok_or_else(|| Error::Inconsistent("empty derivation".into()))?;
        if !same_orbit(&last.result, &self.target.to_one_row()) {
            return Err(Error::Inconsistent("derivation ends outside the target orbit".into()));
        }
        Ok(last.result.clone())
    }
}

/// True when two one-row partitions differ by rotation and reflection.
pub(crate) fn same_orbit(p: &Partition, q: &Partition) -> bool {
    if p.size() != q.size() {
        return false;
    }
    let n = p.size();
    if n == 0 {
        return true;
    }
    let p = p.to_one_row();
    let q = q.to_one_row();
    let mut r = p.clone();
    for _ in 0..n {
        if r == q || r.vertical_reflect() == q {
            return true;
        }
        r = shift(&r, 1).expect("nonempty word");
    }
    false
}

/// Moves the first `s` points of a one-row partition to its end, one corner
/// rotation pair at a time.
pub(crate) fn shift(p: &Partition, s: usize) -> Result<Partition> {
    let mut q = p.clone();
    for _ in 0..s {
        q = q.rotate(Corner::BottomLeft)?.rotate(Corner::TopRight)?;
    }
    Ok(q)
}

fn cap() -> Partition {
    Partition::parse("aa;").expect("literal")
}

/// Nested caps in `P(2l, 0)`: point `j` is joined with point `2l - 1 - j`.
fn nested_caps(l: usize) -> Partition {
    let labels: Vec<usize> = (0..2 * l).map(|j| j.min(2 * l - 1 - j)).collect();
    Partition::from_labels(2 * l, labels).expect("arity fits")
}

fn apply<F>(step: Step, generators: &[Partition], operand: F) -> Result<Partition>
where
    F: Fn(usize) -> Result<Partition>,
{
    match step {
        Step::Generator { index } => generators
            .get(index)
            .map(Partition::to_one_row)
            .ok_or_else(|| Error::Inconsistent(format!("no generator {index}"))),
        Step::Unit => Ok(Partition::parse(";aa").expect("literal")),
        Step::Erase { of, at } => {
            let w = shift(&operand(of)?, at)?;
            let n = w.size();
            let eraser = cap().tensor(&identity_power(n - 2));
            Ok(eraser.compose(&w)?.0)
        }
        Step::Connect { of, at } => {
            let w = shift(&operand(of)?, at)?;
            let n = w.size();
            let joiner = Partition::parse("aa;aa")
                .expect("literal")
                .tensor(&identity_power(n - 2));
            Ok(joiner.compose(&w)?.0)
        }
        Step::Glue {
            left,
            right,
            s,
            t,
            reflect,
            l,
        } => {
            let u = shift(&operand(left)?, s)?;
            let v = operand(right)?;
            let b = v.size();
            let v = if reflect {
                shift(&v.vertical_reflect(), (b + b - 1 - t % b.max(1)) % b.max(1))?
            } else {
                shift(&v, t)?
            };
            let a = u.size();
            let top = u.tensor(&v);
            let gluer = identity_power(a - l)
                .tensor(&nested_caps(l))
                .tensor(&identity_power(b - l));
            Ok(gluer.compose(&top)?.0)
        }
    }
}

/// Replays orbit `i` of `closure` with two-row operations, memoising results.
pub(crate) fn replay_step(
    closure: &CategoryClosure,
    i: usize,
    cache: &mut Vec<Option<Partition>>,
) -> Result<Partition> {
    if let Some(p) = &cache[i] {
        return Ok(p.clone());
    }
    let operand = |id: usize| -> Result<Partition> {
        if id >= i {
            return Err(Error::Inconsistent(format!("orbit {i} depends on later orbit {id}")));
        }
        Ok(Partition::one_row(closure.orbit_word(id)))
    };
    let p = apply(closure.orbit_step(i), closure.generators(), operand)?;
    cache[i] = Some(p.clone());
    Ok(p)
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "#{:<4} {:<24} {}", line.id, line.result.to_string(), line.step)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_rotates_cyclically() {
        let p = Partition::parse(";abcc").unwrap();
        assert_eq!(shift(&p, 1).unwrap(), Partition::parse(";bcca").unwrap());
        assert_eq!(shift(&p, 4).unwrap(), p);
    }

    #[test]
    fn orbit_equivalence() {
        let a = Partition::parse(";abbaabba").unwrap();
        let b = Partition::parse(";aabbaabb").unwrap();
        assert!(same_orbit(&a, &b));
        assert!(!same_orbit(&a, &Partition::parse(";abababab").unwrap()));
        assert!(same_orbit(&Partition::parse(";aabcbc").unwrap(), &Partition::parse(";abcbca").unwrap()));
    }

    #[test]
    fn nested_caps_shape() {
        assert_eq!(nested_caps(2).literal(), "abba;");
        assert_eq!(nested_caps(0), Partition::empty());
    }
}
