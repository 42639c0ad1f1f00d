//! Single-machine unit-task scheduling with release times, exclusive
//! deadlines, and precedence constraints.
//!
//! Releases are propagated forward along the precedence order and deadlines
//! backward, after which earliest-deadline-first over the unit slots decides
//! feasibility. Propagation makes deadlines strictly increase along
//! precedence chains, so the greedy order automatically respects them.

use crate::error::{Error, Result};
use crate::model::{LinearOrder, PartialOrder};

/// `m` unit tasks on `m` slots; task `x` must occupy a slot in
/// `[release[x], deadline[x])` (1-based, deadline exclusive) and precede
/// every task it is ordered before.
#[derive(Debug, Clone)]
pub struct SchedulingInstance {
    release: Vec<usize>,
    deadline: Vec<usize>,
    precedence: PartialOrder,
}

impl SchedulingInstance {
    pub fn new(precedence: PartialOrder, release: Vec<usize>, deadline: Vec<usize>) -> Result<Self> {
        let m = precedence.candidate_count();
        if release.len() != m {
            return Err(Error::LengthMismatch { left: release.len(), right: m });
        }
        if deadline.len() != m {
            return Err(Error::LengthMismatch { left: deadline.len(), right: m });
        }
        for x in 0..m {
            if release[x] < 1 {
                return Err(Error::Range { index: release[x], m });
            }
            if deadline[x] > m + 1 {
                return Err(Error::Range { index: deadline[x], m });
            }
        }
        Ok(SchedulingInstance { release, deadline, precedence })
    }

    /// Unconstrained instance: all windows `[1, m+1)`.
    pub fn unconstrained(precedence: PartialOrder) -> Self {
        let m = precedence.candidate_count();
        SchedulingInstance { release: vec![1; m], deadline: vec![m + 1; m], precedence }
    }

    pub fn set_window(&mut self, task: usize, release: usize, deadline: usize) {
        self.release[task] = release;
        self.deadline[task] = deadline;
    }

    pub fn task_count(&self) -> usize {
        self.precedence.candidate_count()
    }
}

fn topological_order(p: &PartialOrder) -> Vec<usize> {
    let m = p.candidate_count();
    let mut indeg = vec![0usize; m];
    for b in 0..m {
        indeg[b] = (0..m).filter(|&a| p.prefers(a, b)).count();
    }
    let mut order = Vec::with_capacity(m);
    let mut ready: Vec<usize> = (0..m).filter(|&c| indeg[c] == 0).collect();
    while let Some(c) = ready.pop() {
        order.push(c);
        for b in 0..m {
            if p.prefers(c, b) {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(b);
                }
            }
        }
    }
    debug_assert_eq!(order.len(), m);
    order
}

/// A slot assignment satisfying all windows and precedences, or `None` when
/// none exists. Ties in the greedy step break toward the lower task index.
pub fn schedule_unit_tasks(inst: &SchedulingInstance) -> Option<LinearOrder> {
    let m = inst.task_count();
    let p = &inst.precedence;
    let topo = topological_order(p);

    let mut release: Vec<i64> = inst.release.iter().map(|&r| r as i64).collect();
    let mut deadline: Vec<i64> = inst.deadline.iter().map(|&d| d as i64).collect();
    for &y in &topo {
        for x in 0..m {
            if p.prefers(x, y) {
                release[y] = release[y].max(release[x] + 1);
            }
        }
    }
    for &x in topo.iter().rev() {
        for y in 0..m {
            if p.prefers(x, y) {
                deadline[x] = deadline[x].min(deadline[y] - 1);
            }
        }
    }
    if (0..m).any(|x| release[x] >= deadline[x]) {
        return None;
    }

    let mut scheduled = vec![false; m];
    let mut slots = Vec::with_capacity(m);
    for slot in 1..=m as i64 {
        let pick = (0..m)
            .filter(|&x| !scheduled[x] && release[x] <= slot)
            .min_by_key(|&x| (deadline[x], x))?;
        if deadline[pick] <= slot {
            return None;
        }
        scheduled[pick] = true;
        slots.push(pick);
    }
    let order = LinearOrder::new(slots).expect("each task scheduled once");
    debug_assert!(p.is_extended_by(&order));
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn chain(m: usize, pairs: &[(usize, usize)]) -> PartialOrder {
        PartialOrder::new(m, pairs).unwrap()
    }

    #[test]
    fn simple_feasible_chain() {
        // a before b, b within the first two slots
        let mut inst = SchedulingInstance::unconstrained(chain(3, &[(0, 1)]));
        inst.set_window(1, 1, 3);
        let order = schedule_unit_tasks(&inst).unwrap();
        assert_eq!(order.as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn predecessor_blocks_tight_window() {
        // a before b but b must be in slot 1
        let mut inst = SchedulingInstance::unconstrained(chain(3, &[(0, 1)]));
        inst.set_window(1, 1, 2);
        assert!(schedule_unit_tasks(&inst).is_none());
    }

    #[test]
    fn feasibility_matches_extension_enumeration() {
        let mut rng = crate::gen::rng(17);
        for _ in 0..300 {
            let m = rng.gen_range(2..=5);
            let attempts = rng.gen_range(0..=m);
            let p = crate::gen::random_partial_order(&mut rng, m, attempts);
            let mut inst = SchedulingInstance::unconstrained(p.clone());
            for task in 0..m {
                if rng.gen_bool(0.5) {
                    let r = rng.gen_range(1..=m);
                    let d = rng.gen_range(r + 1..=m + 1);
                    inst.set_window(task, r, d);
                }
            }
            let expected = p.extensions().any(|t| {
                (0..m).all(|task| {
                    let pos = t.position_of(task) + 1;
                    inst.release[task] <= pos && pos < inst.deadline[task]
                })
            });
            let got = schedule_unit_tasks(&inst);
            assert_eq!(got.is_some(), expected, "m={m} inst={inst:?}");
            if let Some(order) = got {
                assert!(p.is_extended_by(&order));
                for task in 0..m {
                    let pos = order.position_of(task) + 1;
                    assert!(inst.release[task] <= pos && pos < inst.deadline[task]);
                }
            }
        }
    }
}
